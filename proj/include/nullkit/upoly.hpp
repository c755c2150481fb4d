#pragma once

// Dense univariate polynomials over any Field; the workhorse for
// factorization over towers and for the residue maps of maximal ideals.

#include <vector>

#include "nullkit/field.hpp"
#include "nullkit/poly.hpp"

namespace nullkit {

class UPoly {
 public:
  explicit UPoly(FieldPtr field) : field_(std::move(field)) {}
  // Coefficients lowest degree first; trailing zeros are trimmed.
  UPoly(FieldPtr field, std::vector<Scalar> coeffs);

  static UPoly constant(const Scalar& c);
  static UPoly x(FieldPtr field);
  static UPoly monomial(const Scalar& c, std::size_t degree);
  // From a polynomial in a one-variable ring.
  static UPoly from_multi(const MultiPoly& f);
  MultiPoly to_multi(RingPtr ring) const;

  const FieldPtr& field() const { return field_; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  const Scalar& lead() const;
  Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_->zero(); }

  UPoly monic() const;
  UPoly derivative() const;
  UPoly scale(const Scalar& s) const;
  Scalar evaluate(const Scalar& x) const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b);

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();

  FieldPtr field_;
  std::vector<Scalar> c_;
};

struct UDivMod {
  UPoly quotient;
  UPoly remainder;
};

UDivMod divmod(const UPoly& a, const UPoly& b);
UPoly operator%(const UPoly& a, const UPoly& b);
UPoly operator/(const UPoly& a, const UPoly& b);
// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
// base^e mod m.
UPoly powmod(const UPoly& base, const mpz_class& e, const UPoly& m);
UPoly pow(const UPoly& base, unsigned e);

// Canonical order: by degree, then coefficients from the top down under
// canonical_less.
bool canonical_less(const UPoly& a, const UPoly& b);

}  // namespace nullkit
