#include "nullkit/upoly.hpp"

namespace nullkit {

UPoly::UPoly(FieldPtr field, std::vector<Scalar> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  for (const Scalar& s : c_) {
    if (!same_field(s.field(), field_)) fail(ErrorKind::MixedFields, "UPoly coefficient field");
  }
  trim();
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::constant(const Scalar& c) { return UPoly(c.field(), {c}); }

UPoly UPoly::x(FieldPtr field) {
  Scalar one = field->one();
  return monomial(one, 1);
}

UPoly UPoly::monomial(const Scalar& c, std::size_t degree) {
  std::vector<Scalar> v(degree + 1, c.field()->zero());
  v[degree] = c;
  return UPoly(c.field(), std::move(v));
}

UPoly UPoly::from_multi(const MultiPoly& f) {
  if (f.ring()->nvars() != 1) fail(ErrorKind::BadVariableCount, "expected a univariate polynomial");
  const FieldPtr& k = f.field();
  std::vector<Scalar> v(static_cast<std::size_t>(f.degree_in(0) + 1), k->zero());
  for (const Term& t : f.terms()) v[t.exps[0]] = t.coeff;
  return UPoly(k, std::move(v));
}

MultiPoly UPoly::to_multi(RingPtr ring) const {
  if (ring->nvars() != 1) fail(ErrorKind::BadVariableCount, "expected a one-variable ring");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) terms.push_back(Term{Exponents{static_cast<std::uint32_t>(i)}, c_[i]});
  }
  return MultiPoly::from_terms(std::move(ring), std::move(terms));
}

const Scalar& UPoly::lead() const {
  if (c_.empty()) fail(ErrorKind::ZeroPolynomial, "leading coefficient of zero");
  return c_.back();
}

UPoly UPoly::monic() const {
  if (c_.empty() || c_.back().is_one()) return *this;
  return scale(c_.back().inv());
}

UPoly UPoly::derivative() const {
  std::vector<Scalar> v;
  for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * field_->from_int(static_cast<long>(i)));
  return UPoly(field_, std::move(v));
}

UPoly UPoly::scale(const Scalar& s) const {
  std::vector<Scalar> v;
  v.reserve(c_.size());
  for (const Scalar& c : c_) v.push_back(c * s);
  return UPoly(field_, std::move(v));
}

Scalar UPoly::evaluate(const Scalar& x) const {
  Scalar acc = x.field()->zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + x.field()->embed(c_[i]);
  return acc;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  const auto& big = a.c_.size() >= b.c_.size() ? a : b;
  const auto& small = a.c_.size() >= b.c_.size() ? b : a;
  std::vector<Scalar> v = big.c_;
  for (std::size_t i = 0; i < small.c_.size(); ++i) v[i] += small.c_[i];
  return UPoly(a.field_, std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Scalar> v = a.c_;
  if (v.size() < b.c_.size()) v.resize(b.c_.size(), a.field_->zero());
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
  return UPoly(a.field_, std::move(v));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly(a.field_);
  std::vector<Scalar> v(a.c_.size() + b.c_.size() - 1, a.field_->zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(a.field_, std::move(v));
}

bool operator==(const UPoly& a, const UPoly& b) {
  return same_field(a.field_, b.field_) && a.c_ == b.c_;
}

std::string UPoly::to_string(const std::string& var) const {
  RingPtr r = Ring::make(field_, {var});
  return to_multi(r).to_string();
}

UDivMod divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  const FieldPtr& k = a.field();
  if (a.degree() < b.degree()) return {UPoly(k), a};
  std::vector<Scalar> r = a.coeffs();
  std::vector<Scalar> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), k->zero());
  const auto& bc = b.coeffs();
  const Scalar inv = b.lead().inv();
  const std::size_t db = bc.size() - 1;
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i].is_zero()) continue;
    Scalar c = r[i] * inv;
    const std::size_t shift = i - db;
    q[shift] = c;
    for (std::size_t j = 0; j <= db; ++j) r[shift + j] -= c * bc[j];
  }
  r.erase(r.begin() + static_cast<std::ptrdiff_t>(db), r.end());
  return {UPoly(k, std::move(q)), UPoly(k, std::move(r))};
}

UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).remainder; }
UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).quotient; }

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly powmod(const UPoly& base, const mpz_class& e, const UPoly& m) {
  UPoly r = UPoly::constant(m.field()->one()) % m;
  UPoly b = base % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = (r * r) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * b) % m;
  }
  return r;
}

UPoly pow(const UPoly& base, unsigned e) {
  UPoly r = UPoly::constant(base.field()->one());
  for (unsigned i = 0; i < e; ++i) r = r * base;
  return r;
}

bool canonical_less(const UPoly& a, const UPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    if (canonical_less(a.coeffs()[i], b.coeffs()[i])) return true;
    if (canonical_less(b.coeffs()[i], a.coeffs()[i])) return false;
  }
  return false;
}

}  // namespace nullkit
