#pragma once

// Buchberger's algorithm for reduced lex bases, ideal membership, the
// properness decision, elimination ideals and quotient dimension.

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "nullkit/poly.hpp"

namespace nullkit {

class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<MultiPoly> elements)
      : ring_(std::move(ring)), elements_(std::move(elements)) {}

  const RingPtr& ring() const { return ring_; }
  // Monic, inter-reduced, sorted by increasing leading monomial.
  const std::vector<MultiPoly>& elements() const { return elements_; }
  bool is_unit() const { return elements_.size() == 1 && elements_[0].is_one(); }
  bool is_zero() const { return elements_.empty(); }

 private:
  RingPtr ring_;
  std::vector<MultiPoly> elements_;
};

class Ideal {
 public:
  // Zero generators are dropped. All generators must live in `ring`.
  Ideal(RingPtr ring, std::vector<MultiPoly> generators);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<MultiPoly>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  // Reduced lex basis, computed once and shared between copies.
  const GroebnerBasis& basis() const;

  // I + J.
  Ideal operator+(const Ideal& other) const;
  // Same generators, mapped into a ring with at least as many variables.
  Ideal change_ring(RingPtr target) const;

  std::string to_string() const;

 private:
  struct Cache {
    std::once_flag once;
    std::optional<GroebnerBasis> basis;
  };

  RingPtr ring_;
  std::vector<MultiPoly> gens_;
  std::shared_ptr<Cache> cache_;
};

// Full normal form of f modulo `basis` (no term divisible by a leading term).
MultiPoly reduce(const MultiPoly& f, std::span<const MultiPoly> basis);
inline MultiPoly reduce(const MultiPoly& f, const GroebnerBasis& gb) { return reduce(f, gb.elements()); }

MultiPoly s_polynomial(const MultiPoly& a, const MultiPoly& b);

// Reduced lex basis; deterministic for a given generator sequence.
GroebnerBasis groebner_basis(const Ideal& ideal);
GroebnerBasis groebner_basis(RingPtr ring, std::vector<MultiPoly> generators);

// Buchberger criterion: every S-polynomial reduces to zero.
bool satisfies_s_criterion(std::span<const MultiPoly> basis);
// No term of any element is divisible by another element's leading term,
// and every element is monic.
bool is_reduced(std::span<const MultiPoly> basis);

// Weak Nullstellensatz decision: 1 is not in the ideal.
bool is_proper(const Ideal& ideal);
bool member(const MultiPoly& f, const Ideal& ideal);

// I intersected with the subring of the first k variables, as an ideal of
// ring()->prefix(k). Requires 1 <= k < n.
Ideal elimination_ideal(const Ideal& ideal, std::size_t k);

// Dimension of K[x]/I as a K-space; nullopt when infinite.
using QuotientDimension = std::optional<std::size_t>;

// Requires a proper ideal.
QuotientDimension staircase_dimension(const Ideal& ideal);
QuotientDimension staircase_dimension(const GroebnerBasis& gb);
// The standard monomials in increasing lex order. Throws InfiniteDimension
// for positive-dimensional ideals.
std::vector<Exponents> standard_monomials(const GroebnerBasis& gb);

}  // namespace nullkit
