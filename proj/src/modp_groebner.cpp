#include "modp_groebner.hpp"

#include <algorithm>
#include <cstdint>

namespace nullkit::detail {

namespace {

struct Overflow {};

// Exponent vectors packed into one word: variable i occupies bits
// [w*i, w*i + w), the top bit of each field is a guard bit. The last variable
// sits highest, so integer order is lex order.
class Packing {
 public:
  static std::optional<Packing> make(const RingPtr& ring) {
    const FieldPtr& k = ring->field();
    const std::size_t n = ring->nvars();
    if (k->kind() != FieldKind::Prime || k->characteristic() >= (std::uint64_t{1} << 31)) return std::nullopt;
    if (n == 0 || n > 8) return std::nullopt;
    Packing pk;
    pk.n_ = n;
    pk.width_ = static_cast<unsigned>(64 / n);
    pk.limit_ = (std::uint64_t{1} << (pk.width_ - 1)) - 1;
    for (std::size_t i = 0; i < n; ++i) pk.guard_ |= std::uint64_t{1} << (pk.width_ * i + pk.width_ - 1);
    return pk;
  }

  std::uint64_t pack(const Exponents& e) const {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (e[i] > limit_) throw Overflow{};
      m |= static_cast<std::uint64_t>(e[i]) << (width_ * i);
    }
    return m;
  }

  Exponents unpack(std::uint64_t m) const {
    Exponents e(n_);
    for (std::size_t i = 0; i < n_; ++i) e[i] = static_cast<std::uint32_t>(field(m, i));
    return e;
  }

  bool divides(std::uint64_t a, std::uint64_t b) const { return (((b | guard_) - a) & guard_) == guard_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    if (s & guard_) throw Overflow{};
    return s;
  }

  std::uint64_t lcm(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < n_; ++i) m |= std::max(field(a, i), field(b, i)) << (width_ * i);
    return m;
  }

  bool coprime(std::uint64_t a, std::uint64_t b) const {
    for (std::size_t i = 0; i < n_; ++i) {
      if (field(a, i) != 0 && field(b, i) != 0) return false;
    }
    return true;
  }

 private:
  std::uint64_t field(std::uint64_t m, std::size_t i) const {
    const std::uint64_t mask = width_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width_) - 1;
    return (m >> (width_ * i)) & mask;
  }

  std::size_t n_ = 0;
  unsigned width_ = 0;
  std::uint64_t limit_ = 0;
  std::uint64_t guard_ = 0;
};

struct MTerm {
  std::uint64_t m;
  std::uint64_t c;
};
using MPoly = std::vector<MTerm>;  // decreasing monomials, nonzero coefficients

class Zp {
 public:
  explicit Zp(std::uint64_t p) : p_(p) {}
  std::uint64_t p() const { return p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p_; }
  std::uint64_t inv(std::uint64_t a) const {
    std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p_), nr = static_cast<std::int64_t>(a);
    while (nr != 0) {
      const std::int64_t q = r / nr;
      std::tie(t, nt) = std::make_pair(nt, t - q * nt);
      std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p_) : t);
  }

 private:
  std::uint64_t p_;
};

class Engine {
 public:
  Engine(Packing pk, Zp zp) : pk_(pk), zp_(zp) {}

  MPoly to_m(const MultiPoly& f) const {
    MPoly out;
    out.reserve(f.size());
    for (const Term& t : f.terms()) out.push_back(MTerm{pk_.pack(t.exps), t.coeff.residue()});
    return out;
  }

  MultiPoly from_m(const RingPtr& ring, const MPoly& f) const {
    std::vector<Term> terms;
    terms.reserve(f.size());
    const FieldPtr& k = ring->field();
    for (const MTerm& t : f) terms.push_back(Term{pk_.unpack(t.m), k->from_coords({t.c})});
    return MultiPoly::from_terms(ring, std::move(terms));
  }

  MPoly monic(MPoly f) const {
    if (f.empty() || f[0].c == 1) return f;
    const std::uint64_t s = zp_.inv(f[0].c);
    for (MTerm& t : f) t.c = zp_.mul(t.c, s);
    return f;
  }

  // Full normal form: pending terms live in a max-heap and are combined when
  // popped, so each reduction step costs only the size of the reducer.
  MPoly reduce(const MPoly& f, const std::vector<const MPoly*>& basis) const {
    std::vector<MTerm> heap(f.begin(), f.end());
    auto cmp = [](const MTerm& a, const MTerm& b) { return a.m < b.m; };
    std::make_heap(heap.begin(), heap.end(), cmp);
    MPoly out;
    while (!heap.empty()) {
      const std::uint64_t m = heap.front().m;
      std::uint64_t c = 0;
      while (!heap.empty() && heap.front().m == m) {
        c = zp_.add(c, heap.front().c);
        std::pop_heap(heap.begin(), heap.end(), cmp);
        heap.pop_back();
      }
      if (c == 0) continue;
      const MPoly* g = nullptr;
      for (const MPoly* cand : basis) {
        if (pk_.divides((*cand)[0].m, m)) {
          g = cand;
          break;
        }
      }
      if (g == nullptr) {
        out.push_back(MTerm{m, c});
        continue;
      }
      const std::uint64_t q = zp_.mul(c, zp_.inv((*g)[0].c));
      const std::uint64_t shift = m - (*g)[0].m;
      for (std::size_t i = 1; i < g->size(); ++i) {
        heap.push_back(MTerm{pk_.add(shift, (*g)[i].m), zp_.neg(zp_.mul(q, (*g)[i].c))});
        std::push_heap(heap.begin(), heap.end(), cmp);
      }
    }
    return out;
  }

  // S-polynomial of two monic polynomials.
  MPoly spoly(const MPoly& a, const MPoly& b) const {
    const std::uint64_t l = pk_.lcm(a[0].m, b[0].m);
    const std::uint64_t sa = l - a[0].m, sb = l - b[0].m;
    MPoly out;
    std::size_t i = 1, j = 1;
    while (i < a.size() || j < b.size()) {
      const std::uint64_t ma = i < a.size() ? pk_.add(sa, a[i].m) : 0;
      const std::uint64_t mb = j < b.size() ? pk_.add(sb, b[j].m) : 0;
      if (j >= b.size() || (i < a.size() && ma > mb)) {
        out.push_back(MTerm{ma, a[i++].c});
      } else if (i >= a.size() || mb > ma) {
        out.push_back(MTerm{mb, zp_.neg(b[j++].c)});
      } else {
        const std::uint64_t c = zp_.add(a[i++].c, zp_.neg(b[j++].c));
        if (c != 0) out.push_back(MTerm{ma, c});
      }
    }
    return out;
  }

  const Packing& packing() const { return pk_; }

 private:
  Packing pk_;
  Zp zp_;
};

struct Pair {
  std::size_t i, j;
  std::uint64_t lcm;
};

// Same pair management as the generic engine: Gebauer-Moeller criteria and
// the normal strategy with ties broken by index.
class ModpBuchberger {
 public:
  explicit ModpBuchberger(const Engine& e) : e_(e) {}

  bool add(MPoly h) {
    if (h.empty()) return true;
    if (h[0].m == 0) return false;
    h = e_.monic(std::move(h));
    const Packing& pk = e_.packing();
    const std::size_t hi = polys_.size();
    const std::uint64_t lh = h[0].m;
    polys_.push_back(std::move(h));
    active_.push_back(true);

    std::vector<Pair> fresh;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g]) continue;
      fresh.push_back(Pair{g, hi, pk.lcm(polys_[g][0].m, lh)});
    }
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      bool drop = false;
      const bool a_coprime = pk.coprime(polys_[fresh[a].i][0].m, lh);
      for (std::size_t b = 0; b < fresh.size() && !drop; ++b) {
        if (a == b || !pk.divides(fresh[b].lcm, fresh[a].lcm)) continue;
        if (fresh[b].lcm != fresh[a].lcm) {
          drop = true;
        } else {
          const bool b_coprime = pk.coprime(polys_[fresh[b].i][0].m, lh);
          drop = (b_coprime && !a_coprime) || (b_coprime == a_coprime && b < a);
        }
      }
      if (!drop) kept.push_back(fresh[a]);
    }
    std::erase_if(kept, [&](const Pair& p) { return pk.coprime(polys_[p.i][0].m, lh); });
    std::erase_if(pairs_, [&](const Pair& p) {
      return pk.divides(lh, p.lcm) && pk.lcm(polys_[p.i][0].m, lh) != p.lcm && pk.lcm(polys_[p.j][0].m, lh) != p.lcm;
    });
    pairs_.insert(pairs_.end(), kept.begin(), kept.end());
    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g] && pk.divides(lh, polys_[g][0].m)) active_[g] = false;
    }
    return true;
  }

  bool run() {
    while (!pairs_.empty()) {
      auto best = pairs_.begin();
      for (auto it = pairs_.begin(); it != pairs_.end(); ++it) {
        if (std::tie(it->lcm, it->i, it->j) < std::tie(best->lcm, best->i, best->j)) best = it;
      }
      const Pair p = *best;
      pairs_.erase(best);
      if (!add(reduce_active(e_.spoly(polys_[p.i], polys_[p.j])))) return false;
    }
    return true;
  }

  MPoly reduce_active(const MPoly& f) const {
    std::vector<const MPoly*> ptrs;
    for (std::size_t g = 0; g < polys_.size(); ++g) {
      if (active_[g]) ptrs.push_back(&polys_[g]);
    }
    // Smallest leading monomial first keeps intermediate growth down.
    std::sort(ptrs.begin(), ptrs.end(), [](const MPoly* a, const MPoly* b) { return (*a)[0].m < (*b)[0].m; });
    return e_.reduce(f, ptrs);
  }

  std::vector<MPoly> reduced_basis() const {
    std::vector<const MPoly*> minimal;
    for (std::size_t a = 0; a < polys_.size(); ++a) {
      if (active_[a]) minimal.push_back(&polys_[a]);
    }
    std::vector<MPoly> out;
    for (std::size_t a = 0; a < minimal.size(); ++a) {
      std::vector<const MPoly*> others;
      for (std::size_t b = 0; b < minimal.size(); ++b) {
        if (a != b) others.push_back(minimal[b]);
      }
      out.push_back(e_.monic(e_.reduce(*minimal[a], others)));
    }
    std::sort(out.begin(), out.end(), [](const MPoly& x, const MPoly& y) { return x[0].m < y[0].m; });
    return out;
  }

 private:
  const Engine& e_;
  std::vector<MPoly> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

std::optional<std::vector<MultiPoly>> groebner_modp(const RingPtr& ring, const std::vector<MultiPoly>& generators) {
  auto pk = Packing::make(ring);
  if (!pk) return std::nullopt;
  try {
    const Engine e(*pk, Zp(ring->field()->characteristic()));
    std::vector<MPoly> gens;
    for (const MultiPoly& g : generators) gens.push_back(e.monic(e.to_m(g)));
    std::stable_sort(gens.begin(), gens.end(), [](const MPoly& x, const MPoly& y) { return x[0].m < y[0].m; });
    ModpBuchberger bb(e);
    const std::vector<MultiPoly> unit{MultiPoly::constant(ring, 1)};
    for (const MPoly& g : gens) {
      if (!bb.add(bb.reduce_active(g))) return unit;
    }
    if (!bb.run()) return unit;
    std::vector<MultiPoly> out;
    for (const MPoly& g : bb.reduced_basis()) out.push_back(e.from_m(ring, g));
    return out;
  } catch (const Overflow&) {
    return std::nullopt;
  }
}

std::optional<MultiPoly> reduce_modp(const MultiPoly& f, std::span<const MultiPoly* const> basis) {
  auto pk = Packing::make(f.ring());
  if (!pk) return std::nullopt;
  try {
    const Engine e(*pk, Zp(f.field()->characteristic()));
    std::vector<MPoly> b;
    b.reserve(basis.size());
    for (const MultiPoly* g : basis) b.push_back(e.to_m(*g));
    std::vector<const MPoly*> ptrs;
    for (const MPoly& g : b) ptrs.push_back(&g);
    return e.from_m(f.ring(), e.reduce(e.to_m(f), ptrs));
  } catch (const Overflow&) {
    return std::nullopt;
  }
}

}  // namespace nullkit::detail
