#pragma once

#include <atomic>
#include <cstdint>

namespace mdbv {

// Snapshot of the three cost-dominant operations: scalar multiplication in
// G1 (M), map-to-point hashing (H) and pairing evaluation (P).
struct OpCounts {
  std::uint64_t mult = 0;
  std::uint64_t hash = 0;
  std::uint64_t pairing = 0;

  friend bool operator==(const OpCounts&, const OpCounts&) = default;
  friend OpCounts operator+(OpCounts a, const OpCounts& b) {
    a.mult += b.mult;
    a.hash += b.hash;
    a.pairing += b.pairing;
    return a;
  }
  friend OpCounts operator-(OpCounts a, const OpCounts& b) {
    a.mult -= b.mult;
    a.hash -= b.hash;
    a.pairing -= b.pairing;
    return a;
  }
};

// Thread-safe tally. Counted operations report to the counter installed on
// the calling thread by ScopedOpCounter; with none installed nothing is
// recorded.
class OpCounter {
 public:
  OpCounts snapshot() const noexcept;
  void reset() noexcept;

  void record_mult() noexcept { mult_.fetch_add(1, std::memory_order_relaxed); }
  void record_hash() noexcept { hash_.fetch_add(1, std::memory_order_relaxed); }
  void record_pairing() noexcept { pairing_.fetch_add(1, std::memory_order_relaxed); }

 private:
  std::atomic<std::uint64_t> mult_{0};
  std::atomic<std::uint64_t> hash_{0};
  std::atomic<std::uint64_t> pairing_{0};
};

OpCounter* active_op_counter() noexcept;

class ScopedOpCounter {
 public:
  explicit ScopedOpCounter(OpCounter* counter) noexcept;
  ~ScopedOpCounter();
  ScopedOpCounter(const ScopedOpCounter&) = delete;
  ScopedOpCounter& operator=(const ScopedOpCounter&) = delete;

 private:
  OpCounter* previous_;
};

}  // namespace mdbv
