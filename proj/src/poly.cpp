#include "nullkit/poly.hpp"

#include <algorithm>
#include <map>

namespace nullkit {

// ---------------------------------------------------------------------------
// Ring

RingPtr Ring::make(FieldPtr field, std::vector<std::string> vars) {
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (vars[i] == vars[j]) fail(ErrorKind::BadVariableCount, "duplicate variable " + vars[i]);
    }
  }
  return RingPtr(new Ring(std::move(field), std::move(vars)));
}

std::size_t Ring::index_of(const std::string& name) const {
  return static_cast<std::size_t>(std::find(vars_.begin(), vars_.end(), name) - vars_.begin());
}

RingPtr Ring::prefix(std::size_t k) const {
  if (k > vars_.size()) fail(ErrorKind::BadVariableCount, "prefix longer than ring");
  return make(field_, std::vector<std::string>(vars_.begin(), vars_.begin() + static_cast<std::ptrdiff_t>(k)));
}

RingPtr Ring::with_variable(const std::string& name) const {
  auto v = vars_;
  v.push_back(name);
  return make(field_, std::move(v));
}

std::string Ring::fresh_name(const std::string& hint) const {
  std::string name = hint;
  for (int i = 1; index_of(name) != nvars(); ++i) name = hint + std::to_string(i);
  return name;
}

bool operator==(const Ring& a, const Ring& b) {
  return &a == &b || (a.vars_ == b.vars_ && *a.field_ == *b.field_);
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

namespace {
void check_same(const MultiPoly& a, const MultiPoly& b) {
  if (!same_ring(a.ring(), b.ring())) fail(ErrorKind::MixedRings, "polynomials from different rings");
}
}  // namespace

// ---------------------------------------------------------------------------
// Monomials

int lex_compare(const Exponents& a, const Exponents& b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly MultiPoly::constant(RingPtr ring, const Scalar& c) {
  return monomial(ring, Exponents(ring->nvars(), 0), c);
}

MultiPoly MultiPoly::constant(RingPtr ring, long c) {
  Scalar s = ring->field()->from_int(c);
  return constant(std::move(ring), s);
}

MultiPoly MultiPoly::variable(RingPtr ring, std::size_t var) {
  if (var >= ring->nvars()) fail(ErrorKind::BadVariableIndex, "variable index " + std::to_string(var));
  Exponents e(ring->nvars(), 0);
  e[var] = 1;
  Scalar one = ring->field()->one();
  return monomial(std::move(ring), std::move(e), one);
}

MultiPoly MultiPoly::monomial(RingPtr ring, Exponents exps, const Scalar& c) {
  if (exps.size() != ring->nvars()) fail(ErrorKind::ArityMismatch, "exponent tuple length");
  if (!same_field(c.field(), ring->field())) fail(ErrorKind::MixedFields, "coefficient field");
  MultiPoly p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back(Term{std::move(exps), c});
  return p;
}

MultiPoly MultiPoly::from_terms(RingPtr ring, std::vector<Term> terms) {
  for (const Term& t : terms) {
    if (t.exps.size() != ring->nvars()) fail(ErrorKind::ArityMismatch, "exponent tuple length");
    if (!same_field(t.coeff.field(), ring->field())) fail(ErrorKind::MixedFields, "coefficient field");
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return lex_compare(a.exps, b.exps) > 0; });
  MultiPoly p(std::move(ring));
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exps == t.exps) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && std::all_of(terms_[0].exps.begin(), terms_[0].exps.end(),
                                            [](std::uint32_t e) { return e == 0; }));
}

bool MultiPoly::is_one() const { return is_constant() && !is_zero() && terms_[0].coeff.is_one(); }

const Term& MultiPoly::leading_term() const {
  if (terms_.empty()) fail(ErrorKind::ZeroPolynomial, "leading term of zero");
  return terms_.front();
}

int MultiPoly::degree_in(std::size_t var) const {
  if (var >= ring_->nvars()) fail(ErrorKind::BadVariableIndex, "variable index " + std::to_string(var));
  if (terms_.empty()) return -1;
  std::uint32_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.exps[var]);
  return static_cast<int>(d);
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const Term& t : terms_) {
    int s = 0;
    for (auto e : t.exps) s += static_cast<int>(e);
    d = std::max(d, s);
  }
  return d;
}

std::uint32_t MultiPoly::max_exponent() const {
  std::uint32_t m = 0;
  for (const Term& t : terms_) {
    for (auto e : t.exps) m = std::max(m, e);
  }
  return m;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::size_t var) const {
  const int d = degree_in(var);
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(d + 1));
  for (const Term& t : terms_) {
    Term u = t;
    u.exps[var] = 0;
    buckets[t.exps[var]].push_back(std::move(u));
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  // Terms inside a bucket keep decreasing order: dropping one coordinate
  // preserves lex order among tuples that agree on it.
  for (auto& b : buckets) {
    MultiPoly c(ring_);
    c.terms_ = std::move(b);
    out.push_back(std::move(c));
  }
  return out;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
  if (images.size() != ring_->nvars()) {
    fail(ErrorKind::ArityMismatch, "need " + std::to_string(ring_->nvars()) + " images");
  }
  if (images.empty()) return *this;
  const RingPtr& target = images[0].ring();
  for (const MultiPoly& im : images) {
    if (!same_ring(im.ring(), target)) fail(ErrorKind::MixedRings, "substitution images in different rings");
  }
  if (!same_field(target->field(), field())) fail(ErrorKind::MixedRings, "substitution changes the field");
  // powers[i][e] = images[i]^e, filled on demand.
  std::vector<std::vector<MultiPoly>> powers(images.size());
  auto power = [&](std::size_t i, std::uint32_t e) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MultiPoly::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  MultiPoly result(target);
  for (const Term& t : terms_) {
    MultiPoly prod = MultiPoly::constant(target, t.coeff);
    for (std::size_t i = 0; i < t.exps.size() && !prod.is_zero(); ++i) {
      if (t.exps[i] != 0) prod = prod * power(i, t.exps[i]);
    }
    result += prod;
  }
  return result;
}

Scalar MultiPoly::evaluate(std::span<const Scalar> point) const {
  if (point.size() != ring_->nvars()) fail(ErrorKind::ArityMismatch, "point dimension");
  FieldPtr target = point.empty() ? field() : point[0].field();
  for (const Scalar& c : point) {
    if (!same_field(c.field(), target)) fail(ErrorKind::MixedFields, "point coordinates in different fields");
  }
  if (!target->contains(*field())) fail(ErrorKind::MixedFields, "point field does not contain coefficients");
  std::vector<std::map<std::uint32_t, Scalar>> cache(point.size());
  auto power = [&](std::size_t i, std::uint32_t e) {
    auto it = cache[i].find(e);
    if (it != cache[i].end()) return it->second;
    Scalar v = point[i].pow(static_cast<std::uint64_t>(e));
    cache[i].emplace(e, v);
    return v;
  };
  Scalar sum = target->zero();
  for (const Term& t : terms_) {
    Scalar prod = target->embed(t.coeff);
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (t.exps[i] != 0) prod *= power(i, t.exps[i]);
    }
    sum += prod;
  }
  return sum;
}

MultiPoly MultiPoly::change_ring(RingPtr target) const {
  if (!same_field(target->field(), field())) fail(ErrorKind::MixedRings, "change_ring across fields");
  const std::size_t n = target->nvars();
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const Term& t : terms_) {
    Exponents e(n, 0);
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (i < n) {
        e[i] = t.exps[i];
      } else if (t.exps[i] != 0) {
        fail(ErrorKind::BadVariableIndex, "variable " + ring_->var(i) + " not in target ring");
      }
    }
    terms.push_back(Term{std::move(e), t.coeff});
  }
  return from_terms(std::move(target), std::move(terms));
}

MultiPoly MultiPoly::scale(const Scalar& c) const {
  MultiPoly r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back(Term{t.exps, t.coeff * c});
  return r;
}

MultiPoly MultiPoly::make_monic() const {
  if (terms_.empty() || leading_coeff().is_one()) return *this;
  return scale(leading_coeff().inv());
}

MultiPoly MultiPoly::sub_scaled_shifted(const MultiPoly& g, const Scalar& c, const Exponents& shift) const {
  check_same(*this, g);
  MultiPoly r(ring_);
  r.terms_.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  Exponents e(shift.size());
  auto shifted = [&](const Term& t) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = t.exps[i] + shift[i];
  };
  if (b != g.terms_.end()) shifted(*b);
  while (a != terms_.end() || b != g.terms_.end()) {
    int cmp = a == terms_.end() ? -1 : b == g.terms_.end() ? 1 : lex_compare(a->exps, e);
    if (cmp > 0) {
      r.terms_.push_back(*a++);
    } else if (cmp < 0) {
      r.terms_.push_back(Term{e, -(b->coeff * c)});
      if (++b != g.terms_.end()) shifted(*b);
    } else {
      Scalar s = a->coeff - b->coeff * c;
      if (!s.is_zero()) r.terms_.push_back(Term{a->exps, std::move(s)});
      ++a;
      if (++b != g.terms_.end()) shifted(*b);
    }
  }
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(ring_, 1);
  MultiPoly b = *this;
  while (e != 0) {
    if (e & 1U) r = r * b;
    e >>= 1U;
    if (e) b = b * b;
  }
  return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  check_same(a, b);
  MultiPoly r(a.ring_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin(), j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    int cmp = i == a.terms_.end() ? -1 : j == b.terms_.end() ? 1 : lex_compare(i->exps, j->exps);
    if (cmp > 0) {
      r.terms_.push_back(*i++);
    } else if (cmp < 0) {
      r.terms_.push_back(*j++);
    } else {
      Scalar s = i->coeff + j->coeff;
      if (!s.is_zero()) r.terms_.push_back(Term{i->exps, std::move(s)});
      ++i;
      ++j;
    }
  }
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back(Term{t.exps, -t.coeff});
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  check_same(a, b);
  if (a.is_zero() || b.is_zero()) return MultiPoly(a.ring_);
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const Term& s : a.terms_) {
    for (const Term& t : b.terms_) {
      Exponents e(s.exps.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = s.exps[i] + t.exps[i];
      terms.push_back(Term{std::move(e), s.coeff * t.coeff});
    }
  }
  return MultiPoly::from_terms(a.ring_, std::move(terms));
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exps != b.terms_[i].exps || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  }
  return true;
}

std::string render_coefficient(const Scalar& c) {
  return c.to_string("t", true);
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  const bool signed_field = field()->kind() == FieldKind::Rational;
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    bool negative = signed_field && sgn(t.coeff.rational()) < 0;
    Scalar mag = negative ? -t.coeff : t.coeff;
    if (k == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (t.exps[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->var(i);
      if (t.exps[i] > 1) mono += "^" + std::to_string(t.exps[i]);
    }
    if (mono.empty()) {
      out += render_coefficient(mag);
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += render_coefficient(mag) + "*" + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

bool is_monic_in(const MultiPoly& f, std::size_t var) {
  if (f.is_zero()) return false;
  auto coeffs = f.coefficients_in(var);
  return coeffs.back().is_constant();
}

MultiPoly make_monic_in(const MultiPoly& f, std::size_t var) {
  if (!is_monic_in(f, var)) {
    fail(ErrorKind::NotMonicInVariable, f.to_string() + " in " + f.ring()->var(var));
  }
  return f.scale(f.coefficients_in(var).back().leading_coeff().inv());
}

MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
  check_same(a, b);
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "exact division by zero polynomial");
  const Term& lt = b.leading_term();
  Scalar lc_inv = lt.coeff.inv();
  std::vector<Term> quotient;
  MultiPoly rem = a;
  while (!rem.is_zero()) {
    const Term& r = rem.leading_term();
    if (!divides(lt.exps, r.exps)) internal_error("inexact division of " + a.to_string() + " by " + b.to_string());
    Exponents shift(r.exps.size());
    for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = r.exps[i] - lt.exps[i];
    Scalar c = r.coeff * lc_inv;
    quotient.push_back(Term{shift, c});
    rem = rem.sub_scaled_shifted(b, c, shift);
  }
  return MultiPoly::from_terms(a.ring(), std::move(quotient));
}

}  // namespace nullkit
