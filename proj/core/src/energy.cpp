#include "mdbv/energy.hpp"

#include <sstream>

#include "mdbv/errors.hpp"

namespace mdbv {

std::size_t frame_bytes(std::size_t app_bytes, const RadioModel& radio) {
  const std::size_t full = app_bytes / radio.payload_bytes;
  const std::size_t rest = app_bytes % radio.payload_bytes;
  const std::size_t packets = full + (rest > 0 ? 1 : 0);
  std::size_t bytes = full * (radio.payload_bytes + radio.header_bytes);
  if (rest > 0) bytes += rest + radio.header_bytes;
  return bytes + packets * radio.preamble_bytes;
}

double radio_energy(std::size_t app_bytes, const RadioModel& radio, RadioDirection direction) {
  const double current = direction == RadioDirection::tx ? radio.current_tx_ma : radio.current_rx_ma;
  const double bits = static_cast<double>(frame_bytes(app_bytes, radio)) * 8.0;
  return radio.voltage * current * bits / radio.data_rate_bps;
}

double compute_energy(double time_ms, const ComputeModel& compute) {
  if (time_ms < 0.0) throw DomainError("time must be non-negative");
  return compute.voltage * compute.current_a * time_ms;
}

EnergyBreakdown total_energy(const SchemeCost& scheme, std::size_t n, const PrimitiveTimings& timings,
                             const EnergySettings& settings) {
  const std::size_t message = message_size(scheme, n, settings.point_bytes, settings.data_bytes);
  const double verify_ms = settings.verify_ms.value_or(verification_ms(scheme, timings, n));

  EnergyBreakdown out;
  out.compute_mj = compute_energy(verify_ms, settings.compute);
  if (settings.convention == EnergyConvention::model) {
    out.radio_mj = radio_energy(message, settings.radio, RadioDirection::rx);
  } else {
    const RadioModel& r = settings.radio;
    const std::size_t w = message / r.payload_bytes;
    const double bytes = static_cast<double>((r.payload_bytes + r.header_bytes) * w +
                                             (message - r.payload_bytes * w) + r.header_bytes +
                                             r.preamble_bytes * (w + 1));
    out.radio_mj = bytes * r.voltage * r.current_rx_ma / r.data_rate_bps;
  }
  return out;
}

std::string energy_csv(const CostModel& model, const PrimitiveTimings& timings,
                       const std::vector<std::size_t>& ns, const EnergySettings& settings) {
  std::ostringstream out;
  out << "scheme,n,message_bytes,rsu_tx_mj,dc_rx_mj,compute_mj,total_mj\n";
  for (const auto& s : model.schemes()) {
    for (std::size_t n : ns) {
      const std::size_t bytes = message_size(s, n, settings.point_bytes, settings.data_bytes);
      const EnergyBreakdown e = total_energy(s, n, timings, settings);
      out << s.name << ',' << n << ',' << bytes << ','
          << format_decimal(radio_energy(bytes, settings.radio, RadioDirection::tx)) << ','
          << format_decimal(e.radio_mj) << ',' << format_decimal(e.compute_mj) << ','
          << format_decimal(e.total_mj()) << '\n';
    }
  }
  return out.str();
}

}  // namespace mdbv
