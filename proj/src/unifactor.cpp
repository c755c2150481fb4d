#include "nullkit/unifactor.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace nullkit {

namespace {

void require_finite(const FieldPtr& k) {
  if (!k->is_finite()) fail(ErrorKind::UnsupportedField, "factorization needs a finite field, got " + k->name());
}

Scalar random_scalar(const FieldPtr& k, std::mt19937_64& rng) {
  const std::uint64_t p = k->characteristic();
  if (k->kind() == FieldKind::Prime) return k->from_coords({rng() % p});
  std::vector<std::uint64_t> c(k->degree());
  for (auto& x : c) x = rng() % p;
  return k->from_coords(std::move(c));
}

UPoly random_below(const FieldPtr& k, std::size_t degree, std::mt19937_64& rng) {
  std::vector<Scalar> c;
  c.reserve(degree);
  for (std::size_t i = 0; i < degree; ++i) c.push_back(random_scalar(k, rng));
  return UPoly(k, std::move(c));
}

// Coefficients of x^(p*i) replaced by their p-th roots, exponents divided by p.
UPoly pth_root_poly(const UPoly& f) {
  const std::uint64_t p = f.field()->characteristic();
  std::vector<Scalar> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(pth_root(f.coeffs()[i]));
  return UPoly(f.field(), std::move(c));
}

// Pairs (part, multiplicity) before merging.
void yun(const UPoly& f, unsigned scale, std::vector<Factor>& out) {
  UPoly fp = f.derivative();
  UPoly c = gcd(f, fp);
  UPoly w = f / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    UPoly y = gcd(w, c);
    UPoly part = w / y;
    if (part.degree() > 0) out.push_back(Factor{part.monic(), i * scale});
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    // What is left is a p-th power.
    const std::uint64_t p = f.field()->characteristic();
    if (p == 0) internal_error("squarefree remainder in characteristic 0");
    yun(pth_root_poly(c.monic()), scale * static_cast<unsigned>(p), out);
  }
}

// Splits a monic squarefree f into (product of its degree-d factors, d).
std::vector<Factor> distinct_degree(const UPoly& f, const mpz_class& q) {
  std::vector<Factor> out;
  const FieldPtr& k = f.field();
  const UPoly x = UPoly::x(k);
  UPoly rest = f;
  UPoly h = x % rest;
  for (unsigned d = 1; 2 * static_cast<int>(d) <= rest.degree(); ++d) {
    h = powmod(h, q, rest);
    UPoly g = gcd(h - x, rest);
    if (g.degree() > 0) {
      out.push_back(Factor{g, d});
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.push_back(Factor{rest, static_cast<unsigned>(rest.degree())});
  return out;
}

void equal_degree(const UPoly& g, unsigned d, const mpz_class& q, std::mt19937_64& rng, std::vector<UPoly>& out) {
  if (g.degree() == static_cast<int>(d)) {
    out.push_back(g);
    return;
  }
  const FieldPtr& k = g.field();
  const std::uint64_t p = k->characteristic();
  mpz_class qd;
  mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), d);
  // log2(q^d) when p = 2.
  const std::size_t trace_len = k->degree() * d;
  const UPoly one = UPoly::constant(k->one());
  for (;;) {
    UPoly a = random_below(k, static_cast<std::size_t>(g.degree()), rng);
    if (a.degree() < 1) continue;
    UPoly b(k);
    if (p == 2) {
      UPoly term = a % g;
      b = term;
      for (std::size_t j = 1; j < trace_len; ++j) {
        term = (term * term) % g;
        b = b + term;
      }
    } else {
      b = powmod(a, (qd - 1) / 2, g) - one;
    }
    UPoly h = gcd(b, g);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(h, d, q, rng, out);
      equal_degree(g / h, d, q, rng, out);
      return;
    }
  }
}

void sort_factors(std::vector<Factor>& f) {
  std::sort(f.begin(), f.end(), [](const Factor& a, const Factor& b) { return canonical_less(a.poly, b.poly); });
}

}  // namespace

Scalar pth_root(const Scalar& a) {
  require_finite(a.field());
  const std::uint64_t p = a.field()->characteristic();
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, a.field()->degree() - 1);
  return a.pow(e);
}

UPoly Factorization::expand() const {
  UPoly r = UPoly::constant(unit);
  for (const Factor& f : factors) r = r * pow(f.poly, f.multiplicity);
  return r;
}

std::vector<Factor> squarefree_decompose(const UPoly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "squarefree decomposition of zero");
  std::vector<Factor> raw;
  if (f.degree() > 0) yun(f.monic(), 1, raw);
  std::map<unsigned, UPoly> merged;
  for (Factor& fa : raw) {
    auto it = merged.find(fa.multiplicity);
    if (it == merged.end()) {
      merged.emplace(fa.multiplicity, std::move(fa.poly));
    } else {
      it->second = it->second * fa.poly;
    }
  }
  std::vector<Factor> out;
  for (auto& [m, p] : merged) out.push_back(Factor{std::move(p), m});
  return out;
}

Factorization factor(const UPoly& f, std::uint64_t seed) {
  require_finite(f.field());
  if (f.degree() < 1) fail(ErrorKind::ConstantPolynomial, "cannot factor a constant");
  std::mt19937_64 rng(seed);
  const mpz_class q = f.field()->order();
  Factorization result{f.lead(), {}};
  for (const Factor& sq : squarefree_decompose(f)) {
    for (const Factor& dd : distinct_degree(sq.poly, q)) {
      std::vector<UPoly> pieces;
      equal_degree(dd.poly, dd.multiplicity, q, rng, pieces);
      for (UPoly& piece : pieces) result.factors.push_back(Factor{piece.monic(), sq.multiplicity});
    }
  }
  sort_factors(result.factors);
  return result;
}

bool is_irreducible(const UPoly& f) {
  require_finite(f.field());
  if (f.degree() < 1) fail(ErrorKind::ConstantPolynomial, "irreducibility of a constant");
  if (f.degree() == 1) return true;
  const UPoly g = f.monic();
  const UPoly dg = g.derivative();
  if (dg.is_zero() || gcd(g, dg).degree() > 0) return false;
  const mpz_class q = f.field()->order();
  const UPoly x = UPoly::x(f.field());
  UPoly h = x;
  for (int d = 1; 2 * d <= g.degree(); ++d) {
    h = powmod(h, q, g);
    if (gcd(h - x, g).degree() > 0) return false;
  }
  return true;
}

std::vector<Scalar> roots(const UPoly& f, std::uint64_t seed) {
  require_finite(f.field());
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "roots of zero");
  std::vector<Scalar> out;
  if (f.degree() < 1) return out;
  const FieldPtr& k = f.field();
  const mpz_class q = k->order();
  const UPoly x = UPoly::x(k);
  UPoly linear = gcd(powmod(x, q, f.monic()) - x, f.monic());
  if (linear.degree() < 1) return out;
  std::mt19937_64 rng(seed);
  std::vector<UPoly> pieces;
  equal_degree(linear, 1, q, rng, pieces);
  for (const UPoly& piece : pieces) out.push_back(-piece.coeffs()[0]);
  std::sort(out.begin(), out.end(), [](const Scalar& a, const Scalar& b) { return canonical_less(a, b); });
  return out;
}

std::vector<std::pair<MultiPoly, unsigned>> squarefree_decompose(const MultiPoly& f) {
  std::vector<std::pair<MultiPoly, unsigned>> out;
  for (const Factor& fa : squarefree_decompose(UPoly::from_multi(f))) {
    out.emplace_back(fa.poly.to_multi(f.ring()), fa.multiplicity);
  }
  return out;
}

Factorization factor(const MultiPoly& f, std::uint64_t seed) { return factor(UPoly::from_multi(f), seed); }

bool is_irreducible(const MultiPoly& f) { return is_irreducible(UPoly::from_multi(f)); }

UPoly canonical_irreducible(const FieldPtr& prime_field, std::size_t k) {
  if (prime_field->kind() != FieldKind::Prime) {
    fail(ErrorKind::UnsupportedField, "canonical irreducibles are enumerated over prime fields");
  }
  if (k == 0) fail(ErrorKind::ConstantPolynomial, "degree 0");
  const std::uint64_t p = prime_field->characteristic();
  // digits[j] is the coefficient of x^j; c_{k-1} is the most significant digit.
  std::vector<std::uint64_t> digits(k, 0);
  for (;;) {
    std::vector<Scalar> c;
    for (std::uint64_t d : digits) c.push_back(prime_field->from_coords({d}));
    c.push_back(prime_field->one());
    UPoly cand(prime_field, std::move(c));
    if (is_irreducible(cand)) return cand;
    std::size_t j = 0;
    while (j < k && ++digits[j] == p) digits[j++] = 0;
    if (j == k) internal_error("no irreducible of degree " + std::to_string(k));
  }
}

FieldPtr extension_field(std::uint64_t p, std::size_t k) {
  FieldPtr base = Field::prime(p);
  if (k == 1) return base;
  UPoly m = canonical_irreducible(base, k);
  return base->extend(m.coeffs(), std::max(k, kDefaultMaxTowerDegree));
}

FieldPtr tower_extend(const FieldPtr& tower, const UPoly& minpoly, bool verify, std::size_t max_degree) {
  if (minpoly.degree() < 1 || !minpoly.lead().is_one()) {
    fail(ErrorKind::NotMonic, minpoly.to_string() + " is not monic of positive degree");
  }
  if (!same_field(minpoly.field(), tower)) fail(ErrorKind::MixedFields, "minimal polynomial over another field");
  if (verify && !is_irreducible(minpoly)) {
    fail(ErrorKind::ReducibleMinPoly, minpoly.to_string() + " is reducible over " + tower->name());
  }
  return tower->extend(minpoly.coeffs(), max_degree);
}

FieldPtr tower_extend(const FieldPtr& tower, const MultiPoly& minpoly, bool verify, std::size_t max_degree) {
  return tower_extend(tower, UPoly::from_multi(minpoly), verify, max_degree);
}

}  // namespace nullkit
