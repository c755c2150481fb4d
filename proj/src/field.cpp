#include "nullkit/field.hpp"

#include <algorithm>
#include <sstream>

namespace nullkit {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 addmod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return (s >= p || s < a) ? s - p : s;
}
u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  while (e != 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) {
  if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of zero");
  return powmod(a, p - 2, p);
}

bool all_zero(std::span<const u64> v) {
  return std::all_of(v.begin(), v.end(), [](u64 x) { return x == 0; });
}

// Renders tower coordinates over the first `nlevels` levels as a polynomial
// in prefix1, prefix2, ... with terms in decreasing lex order (t_r greatest).
std::string render_coords(const Field& f, std::span<const u64> c, std::size_t nlevels,
                          const std::string& prefix, bool paren) {
  std::vector<std::string> terms;
  for (std::size_t idx = c.size(); idx-- > 0;) {
    if (c[idx] == 0) continue;
    std::string mono;
    std::size_t rest = idx;
    std::vector<std::size_t> exps(nlevels);
    for (std::size_t k = 0; k < nlevels; ++k) {
      exps[k] = rest % f.level(k).degree;
      rest /= f.level(k).degree;
    }
    for (std::size_t k = 0; k < nlevels; ++k) {
      if (exps[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += prefix + std::to_string(k + 1);
      if (exps[k] > 1) mono += "^" + std::to_string(exps[k]);
    }
    if (mono.empty()) {
      terms.push_back(std::to_string(c[idx]));
    } else if (c[idx] == 1) {
      terms.push_back(mono);
    } else {
      terms.push_back(std::to_string(c[idx]) + "*" + mono);
    }
  }
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += " + ";
    out += terms[i];
  }
  if (paren && terms.size() > 1) return "(" + out + ")";
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Field

FieldPtr Field::rationals() {
  static const FieldPtr q = [] {
    std::shared_ptr<Field> f(new Field());
    f->kind_ = FieldKind::Rational;
    return f;
  }();
  return q;
}

FieldPtr Field::prime(std::uint64_t p) {
  if (!is_prime(p)) fail(ErrorKind::BadField, std::to_string(p) + " is not prime");
  std::shared_ptr<Field> f(new Field());
  f->kind_ = FieldKind::Prime;
  f->p_ = p;
  return f;
}

FieldPtr Field::extend(std::span<const Scalar> minpoly, std::size_t max_degree) const {
  if (kind_ == FieldKind::Rational) {
    fail(ErrorKind::UnsupportedField, "towers are only built over prime fields");
  }
  if (minpoly.size() < 2) fail(ErrorKind::NotMonic, "minimal polynomial must have degree >= 1");
  for (const Scalar& c : minpoly) {
    if (!(*c.field() == *this)) fail(ErrorKind::MixedFields, "minimal polynomial over another field");
  }
  if (!minpoly.back().is_one()) fail(ErrorKind::NotMonic, "minimal polynomial is not monic");
  const std::size_t d = minpoly.size() - 1;
  if (degree_ * d > max_degree) {
    fail(ErrorKind::TowerTooLarge, "tower degree " + std::to_string(degree_ * d) +
                                       " exceeds bound " + std::to_string(max_degree));
  }
  TowerLevel lvl;
  lvl.degree = d;
  lvl.below = degree_;
  lvl.minpoly.reserve((d + 1) * degree_);
  for (const Scalar& c : minpoly) {
    if (kind_ == FieldKind::Prime) {
      lvl.minpoly.push_back(c.residue());
    } else {
      const auto& cc = c.coords();
      lvl.minpoly.insert(lvl.minpoly.end(), cc.begin(), cc.end());
    }
  }
  std::shared_ptr<Field> f(new Field());
  f->kind_ = FieldKind::Tower;
  f->p_ = p_;
  f->degree_ = degree_ * d;
  f->levels_ = levels_;
  f->levels_.push_back(std::move(lvl));
  return f;
}

mpz_class Field::order() const {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p_, degree_);
  return r;
}

FieldPtr Field::subtower(std::size_t levels) const {
  if (levels > levels_.size()) fail(ErrorKind::BadVariableIndex, "subtower deeper than tower");
  if (levels == levels_.size()) return shared_from_this();
  if (kind_ == FieldKind::Rational) return shared_from_this();
  std::shared_ptr<Field> f(new Field());
  f->p_ = p_;
  if (levels == 0) {
    f->kind_ = FieldKind::Prime;
    return f;
  }
  f->kind_ = FieldKind::Tower;
  f->levels_.assign(levels_.begin(), levels_.begin() + static_cast<std::ptrdiff_t>(levels));
  f->degree_ = 1;
  for (const auto& l : f->levels_) f->degree_ *= l.degree;
  return f;
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long v) const { return from_mpz(mpz_class(v)); }

Scalar Field::from_mpz(const mpz_class& v) const {
  switch (kind_) {
    case FieldKind::Rational:
      return Scalar(shared_from_this(), mpq_class(v));
    case FieldKind::Prime:
    case FieldKind::Tower: {
      mpz_class r;
      mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
      u64 res = r.get_ui();
      if (kind_ == FieldKind::Prime) return Scalar(shared_from_this(), res);
      Scalar::Coords c(degree_, 0);
      c[0] = res;
      return Scalar(shared_from_this(), std::move(c));
    }
  }
  internal_error("unknown field kind");
}

Scalar Field::from_rational(const mpq_class& v) const {
  if (kind_ == FieldKind::Rational) {
    mpq_class c(v);
    c.canonicalize();
    return Scalar(shared_from_this(), std::move(c));
  }
  return from_mpz(v.get_num()) / from_mpz(v.get_den());
}

Scalar Field::from_coords(std::vector<std::uint64_t> coords) const {
  if (kind_ == FieldKind::Prime && coords.size() == 1) {
    return Scalar(shared_from_this(), coords[0] % p_);
  }
  if (kind_ != FieldKind::Tower || coords.size() != degree_) {
    fail(ErrorKind::ArityMismatch, "coordinate vector does not match field " + name());
  }
  for (auto& c : coords) c %= p_;
  return Scalar(shared_from_this(), std::move(coords));
}

Scalar Field::generator(std::size_t level) const {
  if (kind_ != FieldKind::Tower || level >= levels_.size()) {
    fail(ErrorKind::BadVariableIndex, "no generator " + std::to_string(level + 1) + " in " + name());
  }
  Scalar::Coords c(degree_, 0);
  const TowerLevel& l = levels_[level];
  // t_{level+1} is block 1 of its level, zero-padded above; a degree-1 level
  // has t equal to minus the constant coefficient.
  if (l.degree == 1) {
    for (std::size_t i = 0; i < l.below; ++i) c[i] = submod(0, l.minpoly[i], p_);
  } else {
    c[l.below] = 1;
  }
  return Scalar(shared_from_this(), std::move(c));
}

bool Field::contains(const Field& sub) const {
  if (kind_ == FieldKind::Rational || sub.kind_ == FieldKind::Rational) {
    return kind_ == sub.kind_;
  }
  if (sub.p_ != p_ || sub.levels_.size() > levels_.size()) return false;
  for (std::size_t i = 0; i < sub.levels_.size(); ++i) {
    if (sub.levels_[i].degree != levels_[i].degree || sub.levels_[i].minpoly != levels_[i].minpoly) {
      return false;
    }
  }
  return true;
}

Scalar Field::embed(const Scalar& x) const {
  const Field& sub = *x.field();
  if (&sub == this) return x;
  if (!contains(sub)) fail(ErrorKind::MixedFields, sub.name() + " does not embed in " + name());
  if (kind_ != FieldKind::Tower) return Scalar(shared_from_this(), x.value());
  Scalar::Coords c(degree_, 0);
  if (sub.kind_ == FieldKind::Prime) {
    c[0] = x.residue();
  } else {
    std::copy(x.coords().begin(), x.coords().end(), c.begin());
  }
  return Scalar(shared_from_this(), std::move(c));
}

std::string Field::name() const {
  switch (kind_) {
    case FieldKind::Rational:
      return "QQ";
    case FieldKind::Prime:
      return "GF(" + std::to_string(p_) + ")";
    case FieldKind::Tower:
      break;
  }
  std::string gens, rels;
  for (std::size_t k = 0; k < levels_.size(); ++k) {
    const TowerLevel& l = levels_[k];
    if (k) {
      gens += ",";
      rels += ", ";
    }
    gens += "t" + std::to_string(k + 1);
    std::vector<std::string> terms;
    for (std::size_t j = l.degree + 1; j-- > 0;) {
      std::span<const u64> block(l.minpoly.data() + j * l.below, l.below);
      if (all_zero(block)) continue;
      std::string coef = render_coords(*this, block, k, "t", true);
      std::string pw = j == 0   ? ""
                       : j == 1 ? "t" + std::to_string(k + 1)
                                : "t" + std::to_string(k + 1) + "^" + std::to_string(j);
      if (pw.empty()) {
        terms.push_back(coef);
      } else if (coef == "1") {
        terms.push_back(pw);
      } else {
        terms.push_back(coef + "*" + pw);
      }
    }
    for (std::size_t i = 0; i < terms.size(); ++i) rels += (i ? " + " : "") + terms[i];
  }
  return "GF(" + std::to_string(p_) + ")[" + gens + "]/(" + rels + ")";
}

bool operator==(const Field& a, const Field& b) {
  if (&a == &b) return true;
  if (a.kind_ != b.kind_ || a.p_ != b.p_ || a.levels_.size() != b.levels_.size()) return false;
  for (std::size_t i = 0; i < a.levels_.size(); ++i) {
    if (a.levels_[i].degree != b.levels_[i].degree || a.levels_[i].minpoly != b.levels_[i].minpoly) {
      return false;
    }
  }
  return true;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) { return a == b || *a == *b; }

// ---------------------------------------------------------------------------
// Tower arithmetic. An element of the first k levels is d_k blocks of
// dim_{k-1} residues; block j is the coefficient of t_k^j.

namespace {

class TowerArith {
 public:
  explicit TowerArith(const Field& f) : f_(f), p_(f.characteristic()) {}

  std::size_t dim(std::size_t k) const { return k == 0 ? 1 : f_.level(k - 1).below * f_.level(k - 1).degree; }

  void mul(std::size_t k, const u64* a, const u64* b, u64* out) const {
    if (k == 0) {
      out[0] = mulmod(a[0], b[0], p_);
      return;
    }
    const TowerLevel& l = f_.level(k - 1);
    const std::size_t d = l.degree, B = l.below;
    if (d == 1) {
      mul(k - 1, a, b, out);
      return;
    }
    std::vector<u64> prod((2 * d - 1) * B, 0), tmp(B), top(B);
    for (std::size_t i = 0; i < d; ++i) {
      if (all_zero({a + i * B, B})) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (all_zero({b + j * B, B})) continue;
        mul(k - 1, a + i * B, b + j * B, tmp.data());
        for (std::size_t s = 0; s < B; ++s) prod[(i + j) * B + s] = addmod(prod[(i + j) * B + s], tmp[s], p_);
      }
    }
    for (std::size_t i = 2 * d - 1; i-- > d;) {
      std::copy_n(prod.begin() + static_cast<std::ptrdiff_t>(i * B), B, top.begin());
      if (all_zero(top)) continue;
      for (std::size_t j = 0; j < d; ++j) {
        mul(k - 1, top.data(), l.minpoly.data() + j * B, tmp.data());
        for (std::size_t s = 0; s < B; ++s) {
          prod[(i - d + j) * B + s] = submod(prod[(i - d + j) * B + s], tmp[s], p_);
        }
      }
    }
    std::copy_n(prod.begin(), d * B, out);
  }

  // Inverse in the first k levels by the extended Euclidean algorithm in t_k
  // over the tower of k-1 levels.
  std::vector<u64> inv(std::size_t k, const u64* a) const {
    if (k == 0) return {invmod(a[0], p_)};
    const TowerLevel& l = f_.level(k - 1);
    const std::size_t d = l.degree, B = l.below;
    if (d == 1) return inv(k - 1, a);
    using Block = std::vector<u64>;
    using LPoly = std::vector<Block>;
    auto trim = [](LPoly& v) {
      while (!v.empty() && all_zero(v.back())) v.pop_back();
    };
    auto bmul = [&](const Block& x, const Block& y) {
      Block r(B);
      mul(k - 1, x.data(), y.data(), r.data());
      return r;
    };
    auto bsub = [&](Block x, const Block& y) {
      for (std::size_t s = 0; s < B; ++s) x[s] = submod(x[s], y[s], p_);
      return x;
    };
    auto pmul = [&](const LPoly& x, const LPoly& y) {
      if (x.empty() || y.empty()) return LPoly{};
      LPoly r(x.size() + y.size() - 1, Block(B, 0));
      for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < y.size(); ++j) {
          Block t = bmul(x[i], y[j]);
          for (std::size_t s = 0; s < B; ++s) r[i + j][s] = addmod(r[i + j][s], t[s], p_);
        }
      }
      trim(r);
      return r;
    };
    auto psub = [&](LPoly x, const LPoly& y) {
      if (x.size() < y.size()) x.resize(y.size(), Block(B, 0));
      for (std::size_t i = 0; i < y.size(); ++i) x[i] = bsub(x[i], y[i]);
      trim(x);
      return x;
    };

    LPoly r0(d + 1), r1(d);
    for (std::size_t j = 0; j <= d; ++j) r0[j] = Block(l.minpoly.begin() + static_cast<std::ptrdiff_t>(j * B),
                                                       l.minpoly.begin() + static_cast<std::ptrdiff_t>((j + 1) * B));
    for (std::size_t j = 0; j < d; ++j) r1[j] = Block(a + j * B, a + (j + 1) * B);
    trim(r1);
    if (r1.empty()) fail(ErrorKind::DivisionByZero, "inverse of zero");
    LPoly s0, s1{Block(B, 0)};
    s1[0][0] = 1;
    while (!r1.empty()) {
      LPoly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Block(B, 0));
      Block lead_inv = inv(k - 1, r1.back().data());
      while (r0.size() >= r1.size()) {
        std::size_t shift = r0.size() - r1.size();
        Block c = bmul(r0.back(), lead_inv);
        q[shift] = c;
        for (std::size_t j = 0; j < r1.size(); ++j) r0[shift + j] = bsub(r0[shift + j], bmul(c, r1[j]));
        trim(r0);
        if (r0.empty()) break;
      }
      std::swap(r0, r1);  // r0 <- old r1, r1 <- remainder
      LPoly s2 = psub(s0, pmul(q, s1));
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    if (r0.size() != 1) internal_error("tower level " + std::to_string(k) + " is not a field (reducible chain)");
    Block c = inv(k - 1, r0[0].data());
    std::vector<u64> out(d * B, 0);
    for (std::size_t j = 0; j < s0.size() && j < d; ++j) {
      Block t = bmul(s0[j], c);
      std::copy(t.begin(), t.end(), out.begin() + static_cast<std::ptrdiff_t>(j * B));
    }
    return out;
  }

 private:
  const Field& f_;
  u64 p_;
};

}  // namespace

void Field::tower_mul(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                      std::span<std::uint64_t> out) const {
  TowerArith(*this).mul(levels_.size(), a.data(), b.data(), out.data());
}

std::vector<std::uint64_t> Field::tower_inv(std::span<const std::uint64_t> a) const {
  return TowerArith(*this).inv(levels_.size(), a.data());
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(FieldPtr field, Value value) : field_(std::move(field)), value_(std::move(value)) {
  switch (field_->kind()) {
    case FieldKind::Rational:
      std::get<mpq_class>(value_).canonicalize();
      break;
    case FieldKind::Prime:
      if (auto* c = std::get_if<Coords>(&value_)) value_ = c->at(0);
      std::get<u64>(value_) %= field_->characteristic();
      break;
    case FieldKind::Tower:
      if (std::get<Coords>(value_).size() != field_->degree()) internal_error("tower coordinate size mismatch");
      break;
  }
}

bool Scalar::is_zero() const {
  switch (value_.index()) {
    case 0:
      return std::get<0>(value_) == 0;
    case 1:
      return sgn(std::get<1>(value_)) == 0;
    default:
      return all_zero(std::get<2>(value_));
  }
}

bool Scalar::is_one() const {
  switch (value_.index()) {
    case 0:
      return std::get<0>(value_) == 1;
    case 1:
      return std::get<1>(value_) == 1;
    default: {
      const auto& c = std::get<2>(value_);
      return c[0] == 1 && all_zero(std::span<const u64>(c).subspan(1));
    }
  }
}

namespace {
void check_same(const Scalar& a, const Scalar& b) {
  if (!same_field(a.field(), b.field())) {
    fail(ErrorKind::MixedFields, a.field()->name() + " vs " + b.field()->name());
  }
}
}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  check_same(a, b);
  const u64 p = a.field_->characteristic();
  switch (a.value_.index()) {
    case 0:
      return Scalar(a.field_, addmod(a.residue(), b.residue(), p));
    case 1:
      return Scalar(a.field_, mpq_class(a.rational() + b.rational()));
    default: {
      Scalar::Coords c = a.coords();
      const auto& d = b.coords();
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = addmod(c[i], d[i], p);
      return Scalar(a.field_, std::move(c));
    }
  }
}

Scalar Scalar::operator-() const {
  const u64 p = field_->characteristic();
  switch (value_.index()) {
    case 0:
      return Scalar(field_, submod(0, residue(), p));
    case 1:
      return Scalar(field_, mpq_class(-rational()));
    default: {
      Coords c = coords();
      for (auto& x : c) x = submod(0, x, p);
      return Scalar(field_, std::move(c));
    }
  }
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  check_same(a, b);
  const u64 p = a.field_->characteristic();
  switch (a.value_.index()) {
    case 0:
      return Scalar(a.field_, submod(a.residue(), b.residue(), p));
    case 1:
      return Scalar(a.field_, mpq_class(a.rational() - b.rational()));
    default: {
      Scalar::Coords c = a.coords();
      const auto& d = b.coords();
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = submod(c[i], d[i], p);
      return Scalar(a.field_, std::move(c));
    }
  }
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  check_same(a, b);
  switch (a.value_.index()) {
    case 0:
      return Scalar(a.field_, mulmod(a.residue(), b.residue(), a.field_->characteristic()));
    case 1:
      return Scalar(a.field_, mpq_class(a.rational() * b.rational()));
    default: {
      Scalar::Coords c(a.coords().size());
      a.field_->tower_mul(a.coords(), b.coords(), c);
      return Scalar(a.field_, std::move(c));
    }
  }
}

Scalar Scalar::inv() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in " + field_->name());
  switch (value_.index()) {
    case 0:
      return Scalar(field_, invmod(residue(), field_->characteristic()));
    case 1:
      return Scalar(field_, mpq_class(1 / rational()));
    default:
      return Scalar(field_, field_->tower_inv(coords()));
  }
}

Scalar Scalar::pow(const mpz_class& e) const {
  if (sgn(e) < 0) return inv().pow(mpz_class(-e));
  Scalar r = field_->one();
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = r * r;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = r * *this;
  }
  return r;
}

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar r = field_->one();
  Scalar b = *this;
  while (e != 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  return same_field(a.field_, b.field_) && a.value_ == b.value_;
}

std::string Scalar::to_string(const std::string& gen_prefix, bool paren) const {
  switch (value_.index()) {
    case 0:
      return std::to_string(residue());
    case 1:
      return rational().get_str();
    default:
      return render_coords(*field_, coords(), field_->level_count(), gen_prefix, paren);
  }
}

bool canonical_less(const Scalar& a, const Scalar& b) {
  check_same(a, b);
  switch (a.value().index()) {
    case 0:
      return a.residue() < b.residue();
    case 1:
      return a.rational() < b.rational();
    default:
      return std::lexicographical_compare(a.coords().rbegin(), a.coords().rend(), b.coords().rbegin(),
                                          b.coords().rend());
  }
}

Scalar frobenius(const Scalar& a) {
  if (!a.field()->is_finite()) fail(ErrorKind::UnsupportedField, "Frobenius needs a finite field");
  return a.pow(a.field()->characteristic());
}

}  // namespace nullkit
