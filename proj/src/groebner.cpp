#include "nullkit/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "modp_groebner.hpp"

namespace nullkit {

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(RingPtr ring, std::vector<MultiPoly> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (MultiPoly& g : generators) {
    if (!same_ring(g.ring(), ring_)) fail(ErrorKind::MixedRings, "generator " + g.to_string() + " from another ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = MultiPoly::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

const GroebnerBasis& Ideal::basis() const {
  std::call_once(cache_->once, [this] { cache_->basis.emplace(groebner_basis(ring_, gens_)); });
  return *cache_->basis;
}

Ideal Ideal::operator+(const Ideal& other) const {
  if (!same_ring(ring_, other.ring_)) fail(ErrorKind::MixedRings, "sum of ideals in different rings");
  auto g = gens_;
  g.insert(g.end(), other.gens_.begin(), other.gens_.end());
  return Ideal(ring_, std::move(g));
}

Ideal Ideal::change_ring(RingPtr target) const {
  std::vector<MultiPoly> g;
  g.reserve(gens_.size());
  for (const auto& f : gens_) g.push_back(f.change_ring(target));
  return Ideal(std::move(target), std::move(g));
}

std::string Ideal::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].to_string();
  return s + ">";
}

// ---------------------------------------------------------------------------
// Reduction

namespace {

// Full normal form. Pending terms sit in a max-heap and are combined when
// popped, so a reduction step costs the size of the reducer only.
template <class Basis>
MultiPoly reduce_impl(const MultiPoly& f, const Basis& basis) {
  auto less = [](const Term& a, const Term& b) { return lex_less(a.exps, b.exps); };
  std::vector<Term> heap = f.terms();
  std::make_heap(heap.begin(), heap.end(), less);
  std::vector<Term> done;
  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), less);
    Term t = std::move(heap.back());
    heap.pop_back();
    while (!heap.empty() && heap.front().exps == t.exps) {
      t.coeff += heap.front().coeff;
      std::pop_heap(heap.begin(), heap.end(), less);
      heap.pop_back();
    }
    if (t.coeff.is_zero()) continue;
    const MultiPoly* g = nullptr;
    for (const MultiPoly* cand : basis) {
      if (divides(cand->leading_exponents(), t.exps)) {
        g = cand;
        break;
      }
    }
    if (g == nullptr) {
      done.push_back(std::move(t));
      continue;
    }
    const auto& gt = g->terms();
    const Scalar c = t.coeff / gt[0].coeff;
    for (std::size_t j = 1; j < gt.size(); ++j) {
      Exponents e(t.exps.size());
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = t.exps[v] - gt[0].exps[v] + gt[j].exps[v];
      heap.push_back(Term{std::move(e), -(gt[j].coeff * c)});
      std::push_heap(heap.begin(), heap.end(), less);
    }
  }
  return MultiPoly::from_terms(f.ring(), std::move(done));
}

// Scales a nonzero polynomial to its canonical working form: monic over
// finite fields, primitive integral with positive leading coefficient over QQ.
MultiPoly normalize(const MultiPoly& f) {
  if (f.field()->kind() != FieldKind::Rational) return f.make_monic();
  mpz_class den = 1, num = 0;
  for (const Term& t : f.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.rational().get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.rational().get_num_mpz_t());
  }
  mpq_class s(den, num);
  if (sgn(f.leading_coeff().rational()) < 0) s = -s;
  if (s == 1) return f;
  return f.scale(f.field()->from_rational(s));
}

}  // namespace

MultiPoly reduce(const MultiPoly& f, std::span<const MultiPoly> basis) {
  std::vector<const MultiPoly*> ptrs;
  for (const MultiPoly& g : basis) {
    if (!same_ring(g.ring(), f.ring())) fail(ErrorKind::MixedRings, "reduce across rings");
    if (!g.is_zero()) ptrs.push_back(&g);
  }
  if (auto fast = detail::reduce_modp(f, ptrs)) return *std::move(fast);
  return reduce_impl(f, ptrs);
}

MultiPoly s_polynomial(const MultiPoly& a, const MultiPoly& b) {
  const Term& ta = a.leading_term();
  const Term& tb = b.leading_term();
  Exponents l = lcm(ta.exps, tb.exps);
  Exponents sa(l.size()), sb(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    sa[i] = l[i] - ta.exps[i];
    sb[i] = l[i] - tb.exps[i];
  }
  MultiPoly left = MultiPoly::monomial(a.ring(), sa, tb.coeff) * a;
  return left.sub_scaled_shifted(b, ta.coeff, sb);
}

// ---------------------------------------------------------------------------
// Buchberger with Gebauer-Moeller pair management

namespace {

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

struct Pair {
  std::size_t i, j;
  Exponents lcm;
};

class Buchberger {
 public:
  explicit Buchberger(RingPtr ring) : ring_(std::move(ring)) {}

  // Returns false once the unit ideal is detected.
  bool add(MultiPoly h) {
    if (h.is_zero()) return true;
    if (h.is_constant()) return false;
    h = normalize(h);
    const std::size_t hi = polys_.size();
    const Exponents lh = h.leading_exponents();
    polys_.push_back(std::move(h));
    active_.push_back(true);

    std::vector<Pair> fresh;
    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g]) fresh.push_back(Pair{g, hi, lcm(polys_[g].leading_exponents(), lh)});
    }
    // Chain criterion among the new pairs: drop (g,h) if some other new pair
    // has an lcm properly dividing it; equal lcms keep one representative,
    // preferring a coprime pair.
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      bool drop = false;
      const bool a_coprime = coprime(polys_[fresh[a].i].leading_exponents(), lh);
      for (std::size_t b = 0; b < fresh.size() && !drop; ++b) {
        if (a == b || !divides(fresh[b].lcm, fresh[a].lcm)) continue;
        if (fresh[b].lcm != fresh[a].lcm) {
          drop = true;
        } else {
          const bool b_coprime = coprime(polys_[fresh[b].i].leading_exponents(), lh);
          drop = (b_coprime && !a_coprime) || (b_coprime == a_coprime && b < a);
        }
      }
      if (!drop) kept.push_back(fresh[a]);
    }
    // Product criterion.
    std::erase_if(kept, [&](const Pair& p) { return coprime(polys_[p.i].leading_exponents(), lh); });
    // Old pairs whose lcm is divisible by lt(h) with a strictly finer route.
    std::erase_if(pairs_, [&](const Pair& p) {
      return divides(lh, p.lcm) && lcm(polys_[p.i].leading_exponents(), lh) != p.lcm &&
             lcm(polys_[p.j].leading_exponents(), lh) != p.lcm;
    });
    pairs_.insert(pairs_.end(), kept.begin(), kept.end());
    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g] && divides(lh, polys_[g].leading_exponents())) active_[g] = false;
    }
    return true;
  }

  // Runs the pair loop; returns false if the ideal is the unit ideal.
  bool run() {
    while (!pairs_.empty()) {
      auto best = pairs_.begin();
      for (auto it = pairs_.begin(); it != pairs_.end(); ++it) {
        int c = lex_compare(it->lcm, best->lcm);
        if (c < 0 || (c == 0 && std::tie(it->i, it->j) < std::tie(best->i, best->j))) best = it;
      }
      Pair p = *best;
      pairs_.erase(best);
      MultiPoly s = s_polynomial(polys_[p.i], polys_[p.j]);
      MultiPoly h = reduce_active(s);
      if (!add(std::move(h))) return false;
    }
    return true;
  }

  MultiPoly reduce_active(const MultiPoly& f) const {
    std::vector<const MultiPoly*> ptrs;
    for (std::size_t g = 0; g < polys_.size(); ++g) {
      if (active_[g]) ptrs.push_back(&polys_[g]);
    }
    // Smallest leading monomial first keeps intermediate growth down.
    std::sort(ptrs.begin(), ptrs.end(), [](const MultiPoly* a, const MultiPoly* b) {
      return lex_less(a->leading_exponents(), b->leading_exponents());
    });
    return reduce_impl(f, ptrs);
  }

  std::vector<MultiPoly> active() const {
    std::vector<MultiPoly> out;
    for (std::size_t g = 0; g < polys_.size(); ++g) {
      if (active_[g]) out.push_back(polys_[g]);
    }
    return out;
  }

 private:
  RingPtr ring_;
  std::vector<MultiPoly> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

std::vector<MultiPoly> interreduce(std::vector<MultiPoly> g) {
  // Minimal basis: drop elements whose leading monomial another one divides.
  std::vector<MultiPoly> minimal;
  for (std::size_t a = 0; a < g.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
      if (a == b) continue;
      const auto& la = g[a].leading_exponents();
      const auto& lb = g[b].leading_exponents();
      redundant = divides(lb, la) && (la != lb || b < a);
    }
    if (!redundant) minimal.push_back(g[a]);
  }
  std::vector<MultiPoly> out;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<const MultiPoly*> others;
    for (std::size_t b = 0; b < minimal.size(); ++b) {
      if (a != b) others.push_back(&minimal[b]);
    }
    out.push_back(reduce_impl(minimal[a], others).make_monic());
  }
  std::sort(out.begin(), out.end(), [](const MultiPoly& x, const MultiPoly& y) {
    return lex_less(x.leading_exponents(), y.leading_exponents());
  });
  return out;
}

}  // namespace

GroebnerBasis groebner_basis(RingPtr ring, std::vector<MultiPoly> generators) {
  std::vector<MultiPoly> gens;
  for (auto& g : generators) {
    if (!same_ring(g.ring(), ring)) fail(ErrorKind::MixedRings, "generator from another ring");
    if (g.is_zero()) continue;
    if (g.is_constant()) return GroebnerBasis(ring, {MultiPoly::constant(ring, 1)});
    gens.push_back(normalize(g));
  }
  std::stable_sort(gens.begin(), gens.end(), [](const MultiPoly& x, const MultiPoly& y) {
    return lex_less(x.leading_exponents(), y.leading_exponents());
  });
  if (auto fast = detail::groebner_modp(ring, gens)) return GroebnerBasis(ring, *std::move(fast));
  Buchberger bb(ring);
  for (const auto& g : gens) {
    if (!bb.add(bb.reduce_active(g))) return GroebnerBasis(ring, {MultiPoly::constant(ring, 1)});
  }
  if (!bb.run()) return GroebnerBasis(ring, {MultiPoly::constant(ring, 1)});
  return GroebnerBasis(ring, interreduce(bb.active()));
}

GroebnerBasis groebner_basis(const Ideal& ideal) { return ideal.basis(); }

bool satisfies_s_criterion(std::span<const MultiPoly> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!reduce(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
    }
  }
  return true;
}

bool is_reduced(std::span<const MultiPoly> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero() || !basis[i].leading_coeff().is_one()) return false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      for (const Term& t : basis[i].terms()) {
        if (divides(basis[j].leading_exponents(), t.exps)) return false;
      }
    }
  }
  return true;
}

bool is_proper(const Ideal& ideal) { return !ideal.basis().is_unit(); }

bool member(const MultiPoly& f, const Ideal& ideal) {
  if (!same_ring(f.ring(), ideal.ring())) fail(ErrorKind::MixedRings, "membership across rings");
  return reduce(f, ideal.basis()).is_zero();
}

Ideal elimination_ideal(const Ideal& ideal, std::size_t k) {
  const std::size_t n = ideal.ring()->nvars();
  if (k < 1 || k >= n) {
    fail(ErrorKind::BadVariableCount, "elimination needs 1 <= k < " + std::to_string(n) + ", got " + std::to_string(k));
  }
  RingPtr sub = ideal.ring()->prefix(k);
  std::vector<MultiPoly> kept;
  for (const MultiPoly& g : ideal.basis().elements()) {
    bool free = true;
    for (std::size_t v = k; v < n && free; ++v) free = !g.involves(v);
    if (free) kept.push_back(g.change_ring(sub));
  }
  return Ideal(sub, std::move(kept));
}

std::vector<Exponents> standard_monomials(const GroebnerBasis& gb) {
  if (gb.is_unit()) fail(ErrorKind::ImproperIdeal, "quotient by the unit ideal");
  const std::size_t n = gb.ring()->nvars();
  for (std::size_t v = 0; v < n; ++v) {
    bool pure = false;
    for (const MultiPoly& g : gb.elements()) {
      const auto& e = g.leading_exponents();
      bool only_v = e[v] > 0;
      for (std::size_t w = 0; w < n && only_v; ++w) only_v = w == v || e[w] == 0;
      pure = pure || only_v;
    }
    if (!pure) fail(ErrorKind::InfiniteDimension, "no pure power of " + gb.ring()->var(v) + " among leading terms");
  }
  auto standard = [&](const Exponents& e) {
    return std::none_of(gb.elements().begin(), gb.elements().end(),
                        [&](const MultiPoly& g) { return divides(g.leading_exponents(), e); });
  };
  // The standard monomials form an order ideal: grow it from 1.
  std::set<Exponents> seen;
  std::vector<Exponents> frontier{Exponents(n, 0)};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    Exponents e = std::move(frontier.back());
    frontier.pop_back();
    for (std::size_t v = 0; v < n; ++v) {
      Exponents f = e;
      ++f[v];
      if (!seen.contains(f) && standard(f)) {
        seen.insert(f);
        frontier.push_back(std::move(f));
      }
    }
  }
  std::vector<Exponents> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

QuotientDimension staircase_dimension(const GroebnerBasis& gb) {
  try {
    return standard_monomials(gb).size();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InfiniteDimension) return std::nullopt;
    throw;
  }
}

QuotientDimension staircase_dimension(const Ideal& ideal) { return staircase_dimension(ideal.basis()); }

}  // namespace nullkit
