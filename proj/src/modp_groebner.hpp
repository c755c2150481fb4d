#pragma once

// Packed-monomial Buchberger and normal forms over GF(p) for word-size p
// and at most 8 variables. Returns nullopt whenever the packed form does not
// apply (other fields, too many variables, exponent overflow); callers then
// use the generic engine. Both engines compute the same reduced basis.

#include <optional>
#include <span>
#include <vector>

#include "nullkit/poly.hpp"

namespace nullkit::detail {

std::optional<std::vector<MultiPoly>> groebner_modp(const RingPtr& ring, const std::vector<MultiPoly>& generators);

std::optional<MultiPoly> reduce_modp(const MultiPoly& f, std::span<const MultiPoly* const> basis);

}  // namespace nullkit::detail
