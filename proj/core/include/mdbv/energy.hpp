#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mdbv/cost_model.hpp"

namespace mdbv {

// Mote radio used between RSU and data center.
struct RadioModel {
  double voltage = 3.0;           // V
  double current_tx_ma = 17.4;    // mA
  double current_rx_ma = 19.7;    // mA
  double data_rate_bps = 250000;  // bit/s
  std::size_t payload_bytes = 32;
  std::size_t header_bytes = 9;
  std::size_t preamble_bytes = 8;
};

// Compute node running verification.
struct ComputeModel {
  double voltage = 5.0;    // V
  double current_a = 1.0;  // A
};

enum class RadioDirection { tx, rx };

// On-air bytes for an application message: full payload packets, one
// partial packet carrying the remainder with its own header, and a
// preamble in front of every packet.
std::size_t frame_bytes(std::size_t app_bytes, const RadioModel& radio);

// V · I · bits / rate, in millijoules.
double radio_energy(std::size_t app_bytes, const RadioModel& radio, RadioDirection direction);

// V · I · t, in millijoules. Throws DomainError on negative time.
double compute_energy(double time_ms, const ComputeModel& compute);

enum class EnergyConvention {
  // Compute term from the predicted verification time, radio term from
  // frame_bytes × 8 bits.
  model,
  // Reproduces the data-center closed form as printed: the packet count
  // w = ⌊(n·S + 2L) / payload⌋, frame size
  // (payload + header)·w + (n·S + 2L − payload·w) + header + preamble·(w + 1)
  // multiplied by V·I/rate without the bits-per-byte factor, and a fixed
  // measured verification time.
  paper_closed_form,
};

struct EnergySettings {
  RadioModel radio;
  ComputeModel compute;
  std::size_t point_bytes = 64;
  std::size_t data_bytes = 20;
  EnergyConvention convention = EnergyConvention::model;
  // Measured verification time; replaces the model prediction when set.
  std::optional<double> verify_ms;
};

struct EnergyBreakdown {
  double compute_mj = 0.0;
  double radio_mj = 0.0;
  double total_mj() const { return compute_mj + radio_mj; }
};

// Data-center energy for receiving and batch-verifying n signed data.
// Throws DomainError on n = 0.
EnergyBreakdown total_energy(const SchemeCost& scheme, std::size_t n, const PrimitiveTimings& timings,
                             const EnergySettings& settings);

// scheme,n,message_bytes,rsu_tx_mj,dc_rx_mj,compute_mj,total_mj
std::string energy_csv(const CostModel& model, const PrimitiveTimings& timings,
                       const std::vector<std::size_t>& ns, const EnergySettings& settings);

}  // namespace mdbv
