#include "nullkit/oracle.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "nullkit/unifactor.hpp"

namespace nullkit {

namespace {

constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 22;

// GF(p^k) with elements encoded as sum c_i p^i over the tower coordinates,
// multiplication through discrete log tables.
class SmallField {
 public:
  SmallField(std::uint64_t p, std::size_t k) : p_(p), k_(k), field_(extension_field(p, k)) {
    q_ = 1;
    for (std::size_t i = 0; i < k; ++i) q_ *= p;
    if (q_ > kTableLimit) return;
    tabled_ = true;
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    const Scalar g = primitive_element();
    Scalar cur = field_->one();
    for (std::uint64_t i = 0; i + 1 < q_; ++i) {
      const std::uint64_t c = encode(cur);
      exp_[i] = c;
      log_[c] = i;
      cur *= g;
    }
  }

  std::uint64_t q() const { return q_; }
  bool tabled() const { return tabled_; }
  const FieldPtr& field() const { return field_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    if (k_ == 1) return (a + b) % p_;
    if (p_ == 2) return a ^ b;
    std::uint64_t r = 0, scale = 1;
    for (std::size_t i = 0; i < k_; ++i) {
      r += ((a % p_ + b % p_) % p_) * scale;
      a /= p_;
      b /= p_;
      scale *= p_;
    }
    return r;
  }

  std::uint64_t log(std::uint64_t a) const { return log_[a]; }
  std::uint64_t exp(std::uint64_t e) const { return exp_[e % (q_ - 1)]; }

  std::uint64_t encode(const Scalar& x) const {
    if (x.field()->kind() == FieldKind::Prime) return x.residue();
    std::uint64_t r = 0;
    const auto& c = x.coords();
    for (std::size_t i = c.size(); i-- > 0;) r = r * p_ + c[i];
    return r;
  }

  Scalar decode(std::uint64_t v) const {
    if (k_ == 1) return field_->from_coords({v});
    std::vector<std::uint64_t> c(k_);
    for (auto& x : c) {
      x = v % p_;
      v /= p_;
    }
    return field_->from_coords(std::move(c));
  }

 private:
  Scalar primitive_element() const {
    const std::uint64_t order = q_ - 1;
    std::vector<std::uint64_t> primes;
    std::uint64_t m = order;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
      if (m % d) continue;
      primes.push_back(d);
      while (m % d == 0) m /= d;
    }
    if (m > 1) primes.push_back(m);
    for (std::uint64_t v = 1; v < q_; ++v) {
      const Scalar g = decode(v);
      bool ok = true;
      for (std::uint64_t r : primes) ok = ok && !g.pow(order / r).is_one();
      if (ok) return g;
    }
    internal_error("no primitive element");
  }

  std::uint64_t p_;
  std::size_t k_;
  FieldPtr field_;
  std::uint64_t q_ = 1;
  bool tabled_ = false;
  std::vector<std::uint64_t> exp_, log_;
};

std::shared_ptr<const SmallField> small_field(std::uint64_t p, std::size_t k) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, std::size_t>, std::shared_ptr<const SmallField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, k}];
  if (!slot) slot = std::make_shared<const SmallField>(p, k);
  return slot;
}

// A polynomial with GF(p) coefficients, evaluated on encoded tuples.
class Compiled {
 public:
  Compiled(const MultiPoly& f, const SmallField& F) : F_(F), poly_(f) {
    for (const Term& t : f.terms()) {
      const std::uint64_t c = F.encode(F.field()->embed(t.coeff));
      terms_.push_back(CTerm{F.tabled() ? F.log(c) : 0, t.exps});
    }
  }

  std::uint64_t operator()(const std::vector<std::uint64_t>& a) const {
    if (!F_.tabled()) {
      std::vector<Scalar> pt;
      for (std::uint64_t v : a) pt.push_back(F_.decode(v));
      return F_.encode(poly_.evaluate(pt));
    }
    std::uint64_t sum = 0;
    for (const CTerm& t : terms_) {
      std::uint64_t e = t.log_coeff;
      bool zero = false;
      for (std::size_t i = 0; i < a.size() && !zero; ++i) {
        if (t.exps[i] == 0) continue;
        if (a[i] == 0) {
          zero = true;
        } else {
          e = (e + F_.log(a[i]) * t.exps[i]) % (F_.q() - 1);
        }
      }
      if (!zero) sum = F_.add(sum, F_.exp(e));
    }
    return sum;
  }

 private:
  struct CTerm {
    std::uint64_t log_coeff;
    Exponents exps;
  };
  const SmallField& F_;
  MultiPoly poly_;
  std::vector<CTerm> terms_;
};

std::shared_ptr<const SmallField> slice_field(const RingPtr& ring, std::size_t k, std::uint64_t budget) {
  const FieldPtr& base = ring->field();
  if (base->kind() != FieldKind::Prime) {
    fail(ErrorKind::UnsupportedField, "point enumeration needs a prime field, got " + base->name());
  }
  if (k == 0) fail(ErrorKind::BadVariableCount, "extension degree must be positive");
  mpz_class total;
  mpz_ui_pow_ui(total.get_mpz_t(), base->characteristic(), k * ring->nvars());
  if (total > mpz_class(std::to_string(budget))) {
    fail(ErrorKind::BudgetExceeded, "GF(" + std::to_string(base->characteristic()) + "^" + std::to_string(k) +
                                        ")^" + std::to_string(ring->nvars()) + " exceeds the enumeration budget");
  }
  return small_field(base->characteristic(), k);
}

}  // namespace

VarietySlice variety_slice(const Ideal& ideal, std::size_t k, std::uint64_t budget) {
  const RingPtr& ring = ideal.ring();
  auto F = slice_field(ring, k, budget);
  std::vector<Compiled> gens;
  for (const MultiPoly& g : ideal.generators()) gens.emplace_back(g, *F);

  VarietySlice s;
  s.k = k;
  s.field = F->field();
  const std::size_t n = ring->nvars();
  std::vector<std::uint64_t> a(n, 0);
  // Odometer with the first coordinate most significant, so points come out
  // in lexicographic order.
  for (;;) {
    bool zero = true;
    for (const Compiled& g : gens) {
      if (g(a) != 0) {
        zero = false;
        break;
      }
    }
    if (zero) {
      std::vector<Scalar> pt;
      for (std::uint64_t v : a) pt.push_back(F->decode(v));
      s.points.push_back(std::move(pt));
    }
    std::size_t i = n;
    while (i > 0 && ++a[i - 1] == F->q()) a[--i] = 0;
    if (i == 0) break;
  }
  return s;
}

bool vanishes_on(const MultiPoly& f, const VarietySlice& slice) {
  for (const auto& pt : slice.points) {
    if (!f.evaluate(pt).is_zero()) return false;
  }
  return true;
}

bool radical_member_oracle(const MultiPoly& f, const Ideal& ideal, std::size_t D, std::uint64_t budget) {
  if (!same_ring(f.ring(), ideal.ring())) fail(ErrorKind::MixedRings, "f and I live in different rings");
  for (std::size_t k = 1; k <= D; ++k) {
    if (!vanishes_on(f, variety_slice(ideal, k, budget))) return false;
  }
  return true;
}

bool power_member_oracle(const MultiPoly& f, const Ideal& ideal, std::size_t D) {
  if (!same_ring(f.ring(), ideal.ring())) fail(ErrorKind::MixedRings, "f and I live in different rings");
  const GroebnerBasis& gb = ideal.basis();
  if (gb.is_unit()) return true;
  if (!staircase_dimension(gb)) fail(ErrorKind::InfiniteDimension, ideal.to_string() + " is not zero-dimensional");
  MultiPoly r = MultiPoly::constant(ideal.ring(), 1);
  for (std::size_t i = 0; i < D; ++i) r = reduce(r * f, gb);
  return r.is_zero();
}

}  // namespace nullkit
