#include "mdbv/cost_model.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "mdbv/errors.hpp"

namespace mdbv {
namespace {

void require_positive_n(std::size_t n) {
  if (n == 0) throw DomainError("number of signers n must be at least 1");
}

}  // namespace

CostModel CostModel::comparison_table() {
  //             name      sM sH  verify P     verify M    verify H    length
  return CostModel({
      {"ZQWZ", 5, 3, {0, 5}, {2, 0}, {2, 3}, {0, 2}},
      {"CWZY", 4, 2, {0, 4}, {2, 0}, {1, 2}, {1, 1}},
      {"DHW", 4, 2, {0, 4}, {2, 0}, {1, 2}, {0, 2}},
      {"CTMHH", 4, 2, {0, 4}, {2, 0}, {2, 0}, {0, 2}},
      {"un-Agg", 3, 1, {3, 0}, {2, 0}, {2, 0}, {2, 0}},
      {"MDBV", 3, 1, {0, 3}, {2, 0}, {1, 1}, {0, 2}},
  });
}

const SchemeCost& CostModel::scheme(std::string_view name) const {
  for (const auto& s : schemes_) {
    if (s.name == name) return s;
  }
  throw DomainError("unknown scheme '" + std::string(name) + "'");
}

double signing_ms(const SchemeCost& scheme, const PrimitiveTimings& t) {
  return static_cast<double>(scheme.sign_mult) * t.mult.median_ms +
         static_cast<double>(scheme.sign_hash) * t.hash.median_ms;
}

double verification_ms(const SchemeCost& scheme, const PrimitiveTimings& t, std::size_t n) {
  require_positive_n(n);
  const OpCounts ops = scheme.verify_ops(n);
  return static_cast<double>(ops.pairing) * t.pairing.median_ms +
         static_cast<double>(ops.mult) * t.mult.median_ms +
         static_cast<double>(ops.hash) * t.hash.median_ms;
}

CostPrediction predict_cost(const SchemeCost& scheme, const PrimitiveTimings& t, std::size_t n) {
  require_positive_n(n);
  return {scheme.name, n, static_cast<double>(n) * signing_ms(scheme, t), verification_ms(scheme, t, n)};
}

std::vector<CostPrediction> predict_costs(const CostModel& model, const PrimitiveTimings& t,
                                          std::size_t n) {
  std::vector<CostPrediction> out;
  for (const auto& s : model.schemes()) out.push_back(predict_cost(s, t, n));
  return out;
}

std::size_t message_size(const SchemeCost& scheme, std::size_t n, std::size_t point_bytes,
                         std::size_t data_bytes) {
  require_positive_n(n);
  return scheme.length_in_points.at(n) * point_bytes + n * data_bytes;
}

std::size_t signed_datum_size(std::size_t point_bytes, std::size_t data_bytes) {
  return 2 * point_bytes + data_bytes;
}

std::string format_decimal(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  std::string s(buf);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

std::string costs_csv(const CostModel& model, const PrimitiveTimings& t,
                      const std::vector<std::size_t>& ns) {
  std::ostringstream out;
  out << "scheme,n,sign_ms,verify_ms\n";
  for (const auto& s : model.schemes()) {
    for (std::size_t n : ns) {
      const CostPrediction c = predict_cost(s, t, n);
      out << c.scheme << ',' << n << ',' << format_decimal(c.sign_ms, 6) << ','
          << format_decimal(c.verify_ms, 6) << '\n';
    }
  }
  return out.str();
}

std::string sizes_csv(const CostModel& model, const std::vector<std::size_t>& ns,
                      std::size_t point_bytes, std::size_t data_bytes) {
  std::ostringstream out;
  out << "scheme,n,L,S,bytes\n";
  for (const auto& s : model.schemes()) {
    for (std::size_t n : ns) {
      out << s.name << ',' << n << ',' << point_bytes << ',' << data_bytes << ','
          << message_size(s, n, point_bytes, data_bytes) << '\n';
    }
  }
  return out.str();
}

}  // namespace mdbv
