#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mdbv/cost_model.hpp"
#include "mdbv/energy.hpp"

namespace mdbv {

// Published reference measurements (Raspberry Pi 3B+, 512-bit type-A
// curve) and the mote/compute constants used by the energy model. These are
// replayed through the analytic model; host timings are never compared
// against them.
struct PaperFixtures {
  PrimitiveTimings timings;        // M, H, P
  double measured_sign_ms = 0.0;   // MDBV individual signing, measured
  double measured_verify_ms = 0.0; // MDBV verification at n = 1, measured
  RadioModel radio;
  ComputeModel compute;
  std::size_t point_bytes = 64;
  std::size_t data_bytes = 20;
};

const PaperFixtures& paper_fixtures();

// Parses the fixture file format (key=value, '#' comments); missing keys
// are errors.
PaperFixtures fixtures_from_text(std::string_view text);
std::string fixtures_to_text(const PaperFixtures& f);

// Energy settings that reproduce the printed data-center closed form.
EnergySettings paper_closed_form_settings(const PaperFixtures& f);

// Analytic cost (counts × primitive timings) next to a measured figure.
struct TimingGap {
  std::string label;
  double analytic_ms = 0.0;
  double measured_ms = 0.0;
  double delta_ms() const { return measured_ms - analytic_ms; }
};

// MDBV signing and n = 1 verification: analytic from the primitive
// timings vs the separately measured figures.
std::vector<TimingGap> timing_gaps(const PaperFixtures& f);
std::string format_timing_gaps(const std::vector<TimingGap>& gaps);

}  // namespace mdbv
