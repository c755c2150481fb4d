#pragma once

// Complete factorization of univariate polynomials over GF(p) and over
// triangular towers: squarefree split, distinct-degree split, then
// Cantor-Zassenhaus equal-degree splitting (trace map in characteristic 2).

#include <cstdint>
#include <vector>

#include "nullkit/upoly.hpp"

namespace nullkit {

struct Factor {
  UPoly poly;  // monic
  unsigned multiplicity = 1;
};

struct Factorization {
  Scalar unit;
  // Sorted by degree, then coefficients from the top down; pairwise distinct.
  std::vector<Factor> factors;

  UPoly expand() const;
};

// Pairwise coprime monic squarefree parts, one per multiplicity, sorted by
// multiplicity. Works over QQ too.
std::vector<Factor> squarefree_decompose(const UPoly& f);

Factorization factor(const UPoly& f, std::uint64_t seed = 0);
// Squarefree, then no factor of degree <= deg/2.
bool is_irreducible(const UPoly& f);
// Distinct roots of f in its coefficient field, canonically ordered.
std::vector<Scalar> roots(const UPoly& f, std::uint64_t seed = 0);

// MultiPoly front ends (one-variable rings over the field).
std::vector<std::pair<MultiPoly, unsigned>> squarefree_decompose(const MultiPoly& f);
Factorization factor(const MultiPoly& f, std::uint64_t seed = 0);
bool is_irreducible(const MultiPoly& f);

// The monic irreducible of degree k over a prime field whose coefficient
// tuple (c_{k-1}, ..., c_0) is lexicographically least.
UPoly canonical_irreducible(const FieldPtr& prime_field, std::size_t k);
// GF(p^k) as a single-level tower over the canonical irreducible; GF(p) for k = 1.
FieldPtr extension_field(std::uint64_t p, std::size_t k);

// Field::extend with the minimal polynomial re-checked for irreducibility
// when `verify` is set (ReducibleMinPoly on failure).
FieldPtr tower_extend(const FieldPtr& tower, const UPoly& minpoly, bool verify = true,
                      std::size_t max_degree = kDefaultMaxTowerDegree);
FieldPtr tower_extend(const FieldPtr& tower, const MultiPoly& minpoly, bool verify = true,
                      std::size_t max_degree = kDefaultMaxTowerDegree);

// p-th root in a finite field (Frobenius is bijective).
Scalar pth_root(const Scalar& a);

}  // namespace nullkit
