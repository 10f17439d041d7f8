#include "mdbv/fixtures.hpp"

#include <sstream>

#include "mdbv/errors.hpp"
#include "mdbv/kv_text.hpp"

namespace mdbv {
namespace {

double read_double(const KeyValueText& kv, const std::string& key) {
  const std::string& value = kv.get(key);
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw DecodeError(key, "expected a number");
  }
}

std::size_t read_size(const KeyValueText& kv, const std::string& key) {
  const double v = read_double(kv, key);
  if (v < 0 || v != static_cast<double>(static_cast<std::size_t>(v))) {
    throw DecodeError(key, "expected a non-negative integer");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

const PaperFixtures& paper_fixtures() {
  static const PaperFixtures fixtures = [] {
    PaperFixtures f;
    f.timings.mult = {10.087, 0.0};
    f.timings.hash = {23.417, 0.0};
    f.timings.pairing = {15.063, 0.0};
    f.timings.samples = 1000;
    f.measured_sign_ms = 54.324;
    f.measured_verify_ms = 113.375;
    return f;
  }();
  return fixtures;
}

PaperFixtures fixtures_from_text(std::string_view text) {
  const KeyValueText kv = KeyValueText::parse(text);
  PaperFixtures f;
  f.timings.mult = {read_double(kv, "t_M"), 0.0};
  f.timings.hash = {read_double(kv, "t_H"), 0.0};
  f.timings.pairing = {read_double(kv, "t_P"), 0.0};
  f.timings.samples = 1000;
  f.measured_sign_ms = read_double(kv, "measured_sign_ms");
  f.measured_verify_ms = read_double(kv, "measured_verify_ms");
  f.radio.voltage = read_double(kv, "radio_voltage");
  f.radio.current_tx_ma = read_double(kv, "radio_current_tx_ma");
  f.radio.current_rx_ma = read_double(kv, "radio_current_rx_ma");
  f.radio.data_rate_bps = read_double(kv, "radio_data_rate_bps");
  f.radio.payload_bytes = read_size(kv, "radio_payload_bytes");
  f.radio.header_bytes = read_size(kv, "radio_header_bytes");
  f.radio.preamble_bytes = read_size(kv, "radio_preamble_bytes");
  f.compute.voltage = read_double(kv, "compute_voltage");
  f.compute.current_a = read_double(kv, "compute_current_a");
  f.point_bytes = read_size(kv, "point_bytes");
  f.data_bytes = read_size(kv, "data_bytes");
  if (f.radio.payload_bytes == 0) throw DecodeError("radio_payload_bytes", "must be positive");
  if (f.timings.mult.median_ms <= 0 || f.timings.hash.median_ms <= 0 || f.timings.pairing.median_ms <= 0) {
    throw DecodeError("t_M", "primitive timings must be positive");
  }
  return f;
}

std::string fixtures_to_text(const PaperFixtures& f) {
  KeyValueText kv;
  const auto num = [](double v) { return format_decimal(v, 9); };
  kv.set("t_M", num(f.timings.mult.median_ms));
  kv.set("t_H", num(f.timings.hash.median_ms));
  kv.set("t_P", num(f.timings.pairing.median_ms));
  kv.set("measured_sign_ms", num(f.measured_sign_ms));
  kv.set("measured_verify_ms", num(f.measured_verify_ms));
  kv.set("radio_voltage", num(f.radio.voltage));
  kv.set("radio_current_tx_ma", num(f.radio.current_tx_ma));
  kv.set("radio_current_rx_ma", num(f.radio.current_rx_ma));
  kv.set("radio_data_rate_bps", num(f.radio.data_rate_bps));
  kv.set("radio_payload_bytes", std::to_string(f.radio.payload_bytes));
  kv.set("radio_header_bytes", std::to_string(f.radio.header_bytes));
  kv.set("radio_preamble_bytes", std::to_string(f.radio.preamble_bytes));
  kv.set("compute_voltage", num(f.compute.voltage));
  kv.set("compute_current_a", num(f.compute.current_a));
  kv.set("point_bytes", std::to_string(f.point_bytes));
  kv.set("data_bytes", std::to_string(f.data_bytes));
  return kv.str();
}

EnergySettings paper_closed_form_settings(const PaperFixtures& f) {
  EnergySettings s;
  s.radio = f.radio;
  s.compute = f.compute;
  s.point_bytes = f.point_bytes;
  s.data_bytes = f.data_bytes;
  s.convention = EnergyConvention::paper_closed_form;
  s.verify_ms = f.measured_verify_ms;
  return s;
}

std::vector<TimingGap> timing_gaps(const PaperFixtures& f) {
  const SchemeCost& mdbv = CostModel::comparison_table().scheme("MDBV");
  return {
      {"MDBV signing", signing_ms(mdbv, f.timings), f.measured_sign_ms},
      {"MDBV verification (n=1)", verification_ms(mdbv, f.timings, 1), f.measured_verify_ms},
  };
}

std::string format_timing_gaps(const std::vector<TimingGap>& gaps) {
  std::ostringstream out;
  out << "label,analytic_ms,measured_ms,delta_ms\n";
  for (const auto& g : gaps) {
    out << g.label << ',' << format_decimal(g.analytic_ms, 6) << ','
        << format_decimal(g.measured_ms, 6) << ',' << format_decimal(g.delta_ms(), 6) << '\n';
  }
  return out.str();
}

}  // namespace mdbv
