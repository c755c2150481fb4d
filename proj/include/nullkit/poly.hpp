#pragma once

// Sparse multivariate polynomials under lex order. The LAST variable of a
// ring is the greatest, so eliminating it keeps the lex-smaller prefix.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "nullkit/field.hpp"

namespace nullkit {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ring {
 public:
  static RingPtr make(FieldPtr field, std::vector<std::string> vars);

  const FieldPtr& field() const { return field_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var(std::size_t i) const { return vars_.at(i); }
  // Index of `name`, or nvars() if absent.
  std::size_t index_of(const std::string& name) const;

  // Ring on the first k variables.
  RingPtr prefix(std::size_t k) const;
  // This ring plus one new greatest variable.
  RingPtr with_variable(const std::string& name) const;
  // A variable name not used in this ring, derived from `hint`.
  std::string fresh_name(const std::string& hint) const;

  friend bool operator==(const Ring& a, const Ring& b);

 private:
  Ring(FieldPtr field, std::vector<std::string> vars) : field_(std::move(field)), vars_(std::move(vars)) {}

  FieldPtr field_;
  std::vector<std::string> vars_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

using Exponents = std::vector<std::uint32_t>;

// Three-way lex comparison, last variable most significant.
int lex_compare(const Exponents& a, const Exponents& b);
inline bool lex_less(const Exponents& a, const Exponents& b) { return lex_compare(a, b) < 0; }
bool divides(const Exponents& a, const Exponents& b);
Exponents lcm(const Exponents& a, const Exponents& b);

struct Term {
  Exponents exps;
  Scalar coeff;
};

class MultiPoly {
 public:
  explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static MultiPoly constant(RingPtr ring, const Scalar& c);
  static MultiPoly constant(RingPtr ring, long c);
  static MultiPoly variable(RingPtr ring, std::size_t var);
  static MultiPoly monomial(RingPtr ring, Exponents exps, const Scalar& c);
  // Arbitrary terms: sorted, like terms merged, zeros dropped.
  static MultiPoly from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const FieldPtr& field() const { return ring_->field(); }
  // Terms in strictly decreasing lex order, no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;

  // The lex-greatest term. Throws ZeroPolynomial on 0.
  const Term& leading_term() const;
  const Exponents& leading_exponents() const { return leading_term().exps; }
  const Scalar& leading_coeff() const { return leading_term().coeff; }

  // Largest exponent of `var`; -1 for the zero polynomial.
  int degree_in(std::size_t var) const;
  // Total degree; -1 for zero.
  int total_degree() const;
  // Largest exponent of any variable in any term.
  std::uint32_t max_exponent() const;
  bool involves(std::size_t var) const { return degree_in(var) > 0; }

  // [f_0, ..., f_d] with f = sum f_i var^i; each f_i lives in the same ring
  // and is free of var. Empty for the zero polynomial.
  std::vector<MultiPoly> coefficients_in(std::size_t var) const;

  // Ring map x_i -> images[i]. All images share one ring over the same
  // field; the result lives in that ring.
  MultiPoly substitute(std::span<const MultiPoly> images) const;

  // Value at a point whose coordinates lie in a field containing ours.
  Scalar evaluate(std::span<const Scalar> point) const;

  // The same polynomial in another ring over the same field, matching
  // variables by position. Variables beyond the target's arity must not occur.
  MultiPoly change_ring(RingPtr target) const;

  MultiPoly scale(const Scalar& c) const;
  MultiPoly make_monic() const;
  // this - c * x^shift * g, by a single merge.
  MultiPoly sub_scaled_shifted(const MultiPoly& g, const Scalar& c, const Exponents& shift) const;
  MultiPoly pow(unsigned e) const;

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
  MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
  MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  // Canonical text: decreasing lex order, `^` powers, `*` products,
  // e.g. "x^2*y + 2*y + 1".
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

// True when the coefficient of the top power of `var` is a nonzero constant.
bool is_monic_in(const MultiPoly& f, std::size_t var);
// f divided by that constant so the top coefficient is exactly 1.
MultiPoly make_monic_in(const MultiPoly& f, std::size_t var);

// Exact quotient a / b; throws Internal if b does not divide a.
MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b);

// Rendering of one coefficient as it appears in MultiPoly::to_string.
std::string render_coefficient(const Scalar& c);

}  // namespace nullkit
