#pragma once

// The substitution x_i -> x_i + x_n^(m^(n-i)) (1-based i < n, x_n fixed) that
// turns a nonconstant polynomial into one whose top power of x_n has a
// constant coefficient.

#include <cstdint>
#include <vector>

#include "nullkit/poly.hpp"

namespace nullkit {

struct MonicizingMap {
  std::uint32_t base = 0;  // m, larger than every exponent of the source polynomial
  std::size_t nvars = 0;
  // shifts[i] = m^(n-1-i) for 0-based i < n-1; the last variable is fixed.
  std::vector<std::uint32_t> shifts;
};

// m = 1 + (largest exponent in f). Requires f nonconstant and n >= 2.
MonicizingMap build_monicizer(const MultiPoly& f);

// The automorphism applied to f; f's exponents must stay below m, which
// makes the result monic in x_n of degree predicted_degree().
MultiPoly apply_monicizer(const MonicizingMap& map, const MultiPoly& f);
// The same substitution without the exponent bound (any ring element).
MultiPoly transform(const MonicizingMap& map, const MultiPoly& f);
// x_i -> x_i - x_n^(m^(n-1-i)).
MultiPoly apply_inverse(const MonicizingMap& map, const MultiPoly& f);

// i_1 m^(n-1) + ... + i_{n-1} m + i_n for the lex-greatest exponent tuple of f
// read with x_1 as the most significant digit.
std::uint64_t predicted_degree(const MonicizingMap& map, const MultiPoly& f);
// Base-m value of an exponent tuple, x_1 most significant.
std::uint64_t base_m_value(const Exponents& e, std::uint32_t m);

// Images of the variables under the map or its inverse, in `ring`.
std::vector<MultiPoly> forward_images(const MonicizingMap& map, const RingPtr& ring);
std::vector<MultiPoly> inverse_images(const MonicizingMap& map, const RingPtr& ring);

}  // namespace nullkit
