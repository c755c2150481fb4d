#pragma once

// Brute-force ground truth for small instances: all common zeros of an
// ideal over GF(p^k) by exhaustive search, and two radical-membership
// oracles that avoid the Rabinowitsch route.

#include <cstdint>
#include <vector>

#include "nullkit/groebner.hpp"

namespace nullkit {

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 24;

struct VarietySlice {
  std::size_t k = 0;
  FieldPtr field;  // extension_field(p, k)
  // Sorted lexicographically under canonical_less.
  std::vector<std::vector<Scalar>> points;
};

// Every a in GF(p^k)^n where all generators of `ideal` vanish. Fails with
// BudgetExceeded when p^(kn) > budget.
VarietySlice variety_slice(const Ideal& ideal, std::size_t k, std::uint64_t budget = kDefaultEnumerationBudget);

bool vanishes_on(const MultiPoly& f, const VarietySlice& slice);

// f vanishes on every slice k = 1..D. Meaningful for zero-dimensional ideals
// whose quotient has dimension at most D.
bool radical_member_oracle(const MultiPoly& f, const Ideal& ideal, std::size_t D,
                           std::uint64_t budget = kDefaultEnumerationBudget);

// f^D reduces to zero modulo the ideal's basis.
bool power_member_oracle(const MultiPoly& f, const Ideal& ideal, std::size_t D);

}  // namespace nullkit
