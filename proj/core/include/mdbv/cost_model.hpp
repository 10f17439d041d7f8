#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mdbv/op_counter.hpp"

namespace mdbv {

struct TimingStat {
  double median_ms = 0.0;
  // Median absolute deviation; 0 for fixtures.
  double mad_ms = 0.0;
};

// Per-operation costs: scalar multiplication (M), map-to-point (H) and
// pairing (P).
struct PrimitiveTimings {
  TimingStat mult;
  TimingStat hash;
  TimingStat pairing;
  std::size_t samples = 0;
};

// a·n + b.
struct Affine {
  std::int64_t per_n = 0;
  std::int64_t constant = 0;

  std::uint64_t at(std::size_t n) const {
    return static_cast<std::uint64_t>(per_n * static_cast<std::int64_t>(n) + constant);
  }
};

// Symbolic cost row: signing counts, batch-verification counts as affine
// functions of n, and the length of the verification signature in units
// of the G1 element size L.
struct SchemeCost {
  std::string name;
  std::uint64_t sign_mult = 0;
  std::uint64_t sign_hash = 0;
  Affine verify_pairing;
  Affine verify_mult;
  Affine verify_hash;
  Affine length_in_points;

  OpCounts sign_ops() const { return {sign_mult, sign_hash, 0}; }
  OpCounts verify_ops(std::size_t n) const {
    return {verify_mult.at(n), verify_hash.at(n), verify_pairing.at(n)};
  }
};

class CostModel {
 public:
  explicit CostModel(std::vector<SchemeCost> schemes) : schemes_(std::move(schemes)) {}

  // The six-scheme comparison: ZQWZ, CWZY, DHW, CTMHH, un-Agg, MDBV.
  static CostModel comparison_table();

  const std::vector<SchemeCost>& schemes() const noexcept { return schemes_; }
  // Throws DomainError for unknown names.
  const SchemeCost& scheme(std::string_view name) const;

 private:
  std::vector<SchemeCost> schemes_;
};

struct CostPrediction {
  std::string scheme;
  std::size_t n = 0;
  double sign_ms = 0.0;    // n vehicles each signing one datum
  double verify_ms = 0.0;  // one batch verification over n data
};

double signing_ms(const SchemeCost& scheme, const PrimitiveTimings& t);
double verification_ms(const SchemeCost& scheme, const PrimitiveTimings& t, std::size_t n);

// Throws DomainError on n = 0.
CostPrediction predict_cost(const SchemeCost& scheme, const PrimitiveTimings& t, std::size_t n);
std::vector<CostPrediction> predict_costs(const CostModel& model, const PrimitiveTimings& t,
                                          std::size_t n);

// RSU → data center authentication message: length_in_points(n)·L + n·S.
// Throws DomainError on n = 0.
std::size_t message_size(const SchemeCost& scheme, std::size_t n, std::size_t point_bytes,
                         std::size_t data_bytes);
// |R| + |V| + |data| for one signed datum.
std::size_t signed_datum_size(std::size_t point_bytes, std::size_t data_bytes);

// Fixed-point rendering with at most `decimals` digits, trailing zeros
// removed ("566.875", "0.3892032").
std::string format_decimal(double value, int decimals = 7);

// scheme,n,sign_ms,verify_ms
std::string costs_csv(const CostModel& model, const PrimitiveTimings& t,
                      const std::vector<std::size_t>& ns);
// scheme,n,L,S,bytes
std::string sizes_csv(const CostModel& model, const std::vector<std::size_t>& ns,
                      std::size_t point_bytes, std::size_t data_bytes);

}  // namespace mdbv
