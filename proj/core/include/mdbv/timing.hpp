#pragma once

#include <cstddef>

#include "mdbv/bilinear_group.hpp"
#include "mdbv/cost_model.hpp"
#include "mdbv/rng.hpp"

namespace mdbv {

// Wall-clock medians of scalar multiplication, map-to-point and pairing on
// the calling thread, each over `iterations` randomized inputs. Throws
// DomainError when iterations < 100.
PrimitiveTimings measure_primitives(const BilinearGroup& group, std::size_t iterations,
                                    RandomSource& rng);

}  // namespace mdbv
