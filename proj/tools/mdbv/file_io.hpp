#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "mdbv/bytes.hpp"

namespace mdbv::cli {

// Input and output failures; reported with exit code 2.
class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Bytes read_binary(const std::filesystem::path& path);
void write_binary(const std::filesystem::path& path, ByteView bytes);
std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

// Regular files directly inside `dir`, sorted by file name.
std::vector<std::filesystem::path> list_files(const std::filesystem::path& dir);

}  // namespace mdbv::cli
