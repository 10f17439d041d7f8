#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mdbv {

// Flat `key=value` text used for parameter, key and scenario files.
// Blank lines and lines starting with '#' are ignored; keys keep insertion
// order when written back out.
class KeyValueText {
 public:
  static KeyValueText parse(std::string_view text);

  void set(std::string key, std::string value);
  bool contains(std::string_view key) const;
  // Throws DecodeError naming `key` when it is absent.
  const std::string& get(std::string_view key) const;
  const std::vector<std::pair<std::string, std::string>>& entries() const noexcept {
    return entries_;
  }

  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace mdbv
