#include "mdbv/op_counter.hpp"

namespace mdbv {
namespace {
thread_local OpCounter* t_active = nullptr;
}

OpCounts OpCounter::snapshot() const noexcept {
  return {mult_.load(std::memory_order_relaxed), hash_.load(std::memory_order_relaxed),
          pairing_.load(std::memory_order_relaxed)};
}

void OpCounter::reset() noexcept {
  mult_.store(0);
  hash_.store(0);
  pairing_.store(0);
}

OpCounter* active_op_counter() noexcept { return t_active; }

ScopedOpCounter::ScopedOpCounter(OpCounter* counter) noexcept : previous_(t_active) {
  t_active = counter;
}

ScopedOpCounter::~ScopedOpCounter() { t_active = previous_; }

}  // namespace mdbv
