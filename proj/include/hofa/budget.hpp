// Copyright 2026 The hofa Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <string>

#include "hofa/error.hpp"

namespace hofa {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;
inline constexpr double kDefaultTolerance = 1e-9;

namespace detail {

inline std::uint64_t budget_from_env() {
  if (const char* env = std::getenv("HOFA_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultBudget;
}

inline std::atomic<std::uint64_t>& budget_slot() {
  static std::atomic<std::uint64_t> slot{budget_from_env()};
  return slot;
}

}  // namespace detail

/// Largest number of elementary items any single enumeration may visit.
/// Defaults to 2^24; HOFA_BUDGET overrides the default at first use.
inline std::uint64_t enumeration_budget() { return detail::budget_slot().load(); }

inline void set_enumeration_budget(std::uint64_t limit) {
  detail::budget_slot().store(limit == 0 ? kDefaultBudget : limit);
}

/// RAII override of the budget, restored on scope exit.
class ScopedBudget {
 public:
  explicit ScopedBudget(std::uint64_t limit) : saved_(enumeration_budget()) {
    set_enumeration_budget(limit);
  }
  ~ScopedBudget() { set_enumeration_budget(saved_); }
  ScopedBudget(const ScopedBudget&) = delete;
  ScopedBudget& operator=(const ScopedBudget&) = delete;

 private:
  std::uint64_t saved_;
};

/// Saturating product, used for sizing checks before any enumeration starts.
inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<std::uint64_t>::max() / b)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

inline std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = sat_mul(r, base);
  return r;
}

inline void require_budget(std::uint64_t count, const std::string& what) {
  if (count > enumeration_budget()) {
    throw BudgetError(what + ": enumeration of " + std::to_string(count) +
                      " items exceeds budget " +
                      std::to_string(enumeration_budget()));
  }
}

}  // namespace hofa
