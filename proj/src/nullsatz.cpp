#include "nullkit/nullsatz.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "linalg.hpp"
#include "nullkit/unifactor.hpp"
#include "nullkit/upoly.hpp"

namespace nullkit {

namespace {

using detail::EchelonBasis;
using detail::Vec;

void require_prime_field(const FieldPtr& k, const char* what) {
  if (k->kind() != FieldKind::Prime) {
    fail(ErrorKind::UnsupportedField, std::string(what) + " needs a prime field, got " + k->name());
  }
}

// Coordinates of a tower (or prime field) element over GF(p).
Vec prime_coords(const Scalar& x, const FieldPtr& prime) {
  if (x.field()->kind() == FieldKind::Prime) return {prime->from_coords({x.residue()})};
  Vec v;
  v.reserve(x.coords().size());
  for (std::uint64_t c : x.coords()) v.push_back(prime->from_coords({c}));
  return v;
}

// sum_alpha coords[alpha] * x^alpha with alpha the mixed-radix digits of the
// coordinate index (t_1 fastest); t_i becomes variable i of `ring`.
MultiPoly lift(const Scalar& x, const RingPtr& ring) {
  const FieldPtr& k = x.field();
  const FieldPtr& prime = ring->field();
  if (k->kind() != FieldKind::Tower) return MultiPoly::constant(ring, prime->from_coords({x.residue()}));
  std::vector<Term> terms;
  const auto& c = x.coords();
  for (std::size_t idx = 0; idx < c.size(); ++idx) {
    if (c[idx] == 0) continue;
    Exponents e(ring->nvars(), 0);
    std::size_t rest = idx;
    for (std::size_t lvl = 0; lvl < k->level_count(); ++lvl) {
      const std::size_t d = k->level(lvl).degree;
      e[lvl] = static_cast<std::uint32_t>(rest % d);
      rest /= d;
    }
    terms.push_back(Term{std::move(e), prime->from_coords({c[idx]})});
  }
  return MultiPoly::from_terms(ring, std::move(terms));
}

// Reduced lex basis of the kernel of K[x_1..x_k] -> T, x_i -> point[i],
// found by walking the staircase in increasing lex order.
std::vector<MultiPoly> evaluation_kernel(const RingPtr& ring, const std::vector<Scalar>& point, const FieldPtr& tower) {
  const FieldPtr& prime = ring->field();
  const std::size_t n = ring->nvars();
  EchelonBasis basis(prime, tower->degree());
  std::vector<Exponents> standard;
  std::vector<Exponents> leads;
  std::vector<MultiPoly> gb;
  std::set<Exponents, bool (*)(const Exponents&, const Exponents&)> todo(lex_less);
  std::set<Exponents> seen;
  todo.insert(Exponents(n, 0));
  while (!todo.empty()) {
    Exponents u = *todo.begin();
    todo.erase(todo.begin());
    if (!seen.insert(u).second) continue;
    if (std::any_of(leads.begin(), leads.end(), [&](const Exponents& l) { return divides(l, u); })) continue;
    Scalar value = tower->one();
    for (std::size_t i = 0; i < n; ++i) {
      if (u[i] != 0) value *= point[i].pow(static_cast<std::uint64_t>(u[i]));
    }
    auto expr = basis.insert_or_express(prime_coords(value, prime));
    if (expr) {
      std::vector<Term> terms{Term{u, prime->one()}};
      for (std::size_t j = 0; j < expr->size(); ++j) {
        if (!(*expr)[j].is_zero()) terms.push_back(Term{standard[j], -(*expr)[j]});
      }
      gb.push_back(MultiPoly::from_terms(ring, std::move(terms)));
      leads.push_back(std::move(u));
    } else {
      standard.push_back(u);
      for (std::size_t i = 0; i < n; ++i) {
        Exponents v = u;
        ++v[i];
        todo.insert(std::move(v));
      }
    }
  }
  return gb;
}

bool has_monic_element(const std::vector<MultiPoly>& polys, std::size_t var) {
  return std::any_of(polys.begin(), polys.end(),
                     [&](const MultiPoly& g) { return g.degree_in(var) > 0 && is_monic_in(g, var); });
}

struct Level {
  FieldPtr tower;
  std::vector<Scalar> point;
  std::vector<MultiPoly> chain;
};

// Generator of the image of `ideal` in base[x_k] under x_i -> point_i.
UPoly image_generator(const Ideal& ideal, const FieldPtr& base, const std::vector<Scalar>& base_point) {
  const std::size_t top = ideal.ring()->nvars() - 1;
  std::vector<Scalar> eval_at(base_point);
  eval_at.push_back(base->zero());
  UPoly h(base);
  for (const MultiPoly& g : ideal.generators()) {
    std::vector<Scalar> c;
    for (const MultiPoly& coeff : g.coefficients_in(top)) c.push_back(coeff.evaluate(eval_at));
    h = gcd(h, UPoly(base, std::move(c)));
  }
  return h;
}

// Candidate minimal polynomials for the new level, canonical one first: the
// irreducible factors of h, or x - a for a in GF(p) when h = 0.
std::vector<UPoly> candidates(const UPoly& h, const FieldPtr& base, std::uint64_t seed) {
  std::vector<UPoly> out;
  if (h.is_zero()) {
    const std::uint64_t p = base->characteristic();
    for (std::uint64_t a = 0; a < p; ++a) {
      out.emplace_back(base, std::vector<Scalar>{-base->from_int(static_cast<long>(a)), base->one()});
    }
    return out;
  }
  for (Factor& f : factor(h, seed).factors) out.push_back(std::move(f.poly));
  return out;
}

// Above this monicized degree the transformed elimination gets expensive,
// so a lower point off the leading-coefficient variety is looked for first.
constexpr std::uint64_t kDirectMapDegree = 4;
// Rejected lower points tolerated before falling back to the map.
constexpr int kSearchBudget = 32;

struct SearchAbandoned {
  const void* owner;
};

// Depth-first search over the recursion: every level offers its candidate
// minimal polynomials in canonical order and the level above accepts or
// rejects the extended point. With a monic element (after the monicizing map if
// needed) the first candidate is always accepted.
class LevelSearch {
 public:
  using Accept = std::function<bool(Level&&)>;

  explicit LevelSearch(const MaxIdealOptions& options) : options_(options) {}

  const std::vector<AutomorphismRecord>& records() const { return records_; }

  bool run(const Ideal& ideal, const Accept& accept) {
    const RingPtr& ring = ideal.ring();
    const std::size_t k = ring->nvars();
    if (k == 1) return extend(ideal, Level{ring->field(), {}, {}}, std::nullopt, accept);
    const std::size_t top = k - 1;
    if (ideal.is_zero() || has_monic_element(ideal.generators(), top) ||
        has_monic_element(ideal.basis().elements(), top)) {
      return run(elimination_ideal(ideal, top), [&](Level&& lower) { return extend(ideal, lower, std::nullopt, accept); });
    }

    // Any nonconstant element will do; the basis element with the smallest
    // exponents keeps the transformed degrees low.
    const auto& gens = ideal.basis().elements();
    auto pick = std::min_element(gens.begin(), gens.end(), [](const MultiPoly& a, const MultiPoly& b) {
      return a.max_exponent() < b.max_exponent();
    });
    if (pick == gens.end() || pick->is_constant()) internal_error("proper nonzero ideal without a nonconstant element");
    const MonicizingMap map = build_monicizer(*pick);
    const std::size_t mark = records_.size();

    if (predicted_degree(map, *pick) > kDirectMapDegree) {
      int budget = kSearchBudget;
      const void* token = &budget;
      try {
        const bool found = run(elimination_ideal(ideal, top), [&](Level&& lower) {
          if (extend(ideal, lower, std::nullopt, accept)) return true;
          if (--budget <= 0) throw SearchAbandoned{token};
          return false;
        });
        if (found) return true;
      } catch (const SearchAbandoned& e) {
        if (e.owner != token) throw;
      }
      records_.erase(records_.begin() + static_cast<std::ptrdiff_t>(mark), records_.end());
    }

    std::vector<MultiPoly> moved;
    for (const MultiPoly& g : gens) moved.push_back(&g == &*pick ? apply_monicizer(map, g) : transform(map, g));
    const Ideal working(ring, std::move(moved));
    records_.push_back(AutomorphismRecord{k, map});
    const bool found =
        run(elimination_ideal(working, top), [&](Level&& lower) { return extend(working, lower, map, accept); });
    if (!found) records_.erase(records_.begin() + static_cast<std::ptrdiff_t>(mark), records_.end());
    return found;
  }

 private:
  bool extend(const Ideal& ideal, const Level& lower, const std::optional<MonicizingMap>& map, const Accept& accept) {
    const UPoly h = image_generator(ideal, lower.tower, lower.point);
    if (h.degree() == 0) return false;
    for (const UPoly& q : candidates(h, lower.tower, options_.seed)) {
      if (accept(make_level(ideal.ring(), lower, map, q))) return true;
    }
    return false;
  }

  Level make_level(const RingPtr& ring, const Level& lower, const std::optional<MonicizingMap>& map, const UPoly& q) {
    const std::size_t k = ring->nvars();
    const std::size_t top = k - 1;
    Level out;
    out.tower = lower.tower->extend(q.coeffs(), options_.max_degree);
    const Scalar tk = out.tower->generator(top);
    for (std::size_t i = 0; i < top; ++i) {
      Scalar b = out.tower->embed(lower.point[i]);
      if (map) b += tk.pow(static_cast<std::uint64_t>(map->shifts[i]));
      out.point.push_back(std::move(b));
    }
    out.point.push_back(tk);
    for (const MultiPoly& c : lower.chain) out.chain.push_back(c.change_ring(ring));
    MultiPoly m(ring);
    for (std::size_t j = 0; j < q.coeffs().size(); ++j) {
      Exponents e(k, 0);
      e[top] = static_cast<std::uint32_t>(j);
      m += lift(q.coeffs()[j], ring) * MultiPoly::monomial(ring, std::move(e), ring->field()->one());
    }
    out.chain.push_back(std::move(m));
    return out;
  }

  const MaxIdealOptions& options_;
  std::vector<AutomorphismRecord> records_;
};

}  // namespace

Ideal MaximalIdealResult::ideal() const { return Ideal(chain.ring, generators); }

MaximalIdealResult maximal_ideal_containing(const Ideal& ideal, const MaxIdealOptions& options) {
  const RingPtr& ring = ideal.ring();
  require_prime_field(ring->field(), "maximal ideal construction");
  if (!is_proper(ideal)) fail(ErrorKind::ImproperIdeal, ideal.to_string() + " is the unit ideal");
  if (ring->nvars() == 0) fail(ErrorKind::BadVariableCount, "no variables");

  MaximalIdealResult r;
  LevelSearch search(options);
  std::optional<Level> found;
  search.run(ideal, [&](Level&& level) {
    found = std::move(level);
    r.automorphisms = search.records();
    return true;
  });
  if (!found) internal_error("no maximal ideal found over " + ideal.to_string());
  Level& top = *found;
  std::sort(r.automorphisms.begin(), r.automorphisms.end(),
            [](const AutomorphismRecord& a, const AutomorphismRecord& b) { return a.level < b.level; });
  r.chain = TriangularChain{ring->field()->characteristic(), ring, std::move(top.chain)};
  r.generators = evaluation_kernel(ring, top.point, top.tower);
  r.residue_degree = top.tower->degree();
  r.residue_field = std::move(top.tower);
  r.point = std::move(top.point);

  const Ideal m = r.ideal();
  const GroebnerBasis& gb = m.basis();
  VerificationReport& v = r.verification;
  v.contains_input = std::all_of(ideal.generators().begin(), ideal.generators().end(),
                                 [&](const MultiPoly& g) { return reduce(g, gb).is_zero(); });
  v.proper = !gb.is_unit();
  if (v.proper) {
    v.dimension = staircase_dimension(gb);
    v.is_field = v.dimension.has_value() && is_field(m);
  }
  if (!v.ok(r.residue_degree)) internal_error("constructed maximal ideal failed verification: " + m.to_string());
  return r;
}

QuotientDimension quotient_dimension(const Ideal& ideal) {
  if (!is_proper(ideal)) fail(ErrorKind::ImproperIdeal, ideal.to_string() + " is the unit ideal");
  return staircase_dimension(ideal);
}

namespace {

struct Quotient {
  GroebnerBasis gb;
  std::vector<Exponents> basis;
  std::map<Exponents, std::size_t> index;

  explicit Quotient(const Ideal& ideal) : gb(ideal.basis()) {
    if (gb.is_unit()) fail(ErrorKind::ImproperIdeal, ideal.to_string() + " is the unit ideal");
    basis = standard_monomials(gb);
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  }

  // Coordinates of a normal form on the standard monomials.
  Vec coords(const MultiPoly& nf) const {
    Vec v(basis.size(), nf.field()->zero());
    for (const Term& t : nf.terms()) v[index.at(t.exps)] = t.coeff;
    return v;
  }
};

}  // namespace

MultiPoly quotient_inverse(const MultiPoly& f, const Ideal& ideal) {
  if (!same_ring(f.ring(), ideal.ring())) fail(ErrorKind::MixedRings, "f and I live in different rings");
  Quotient q(ideal);
  const RingPtr& ring = ideal.ring();
  const FieldPtr& k = ring->field();
  const MultiPoly fr = reduce(f, q.gb);
  if (fr.is_zero()) fail(ErrorKind::ZeroClass, f.to_string() + " is zero modulo the ideal");

  // powers[i] = f^i mod I; stop at the first one dependent on the earlier ones.
  EchelonBasis span(k, q.basis.size());
  std::vector<MultiPoly> powers{MultiPoly::constant(ring, 1)};
  span.insert_or_express(q.coords(powers[0]));
  for (;;) {
    MultiPoly next = reduce(powers.back() * fr, q.gb);
    auto expr = span.insert_or_express(q.coords(next));
    if (!expr) {
      powers.push_back(std::move(next));
      continue;
    }
    // f^d = sum expr[i] f^i, i.e. lambda_i = -expr[i] for i < d and lambda_d = 1.
    const std::size_t d = powers.size();
    std::vector<Scalar> lambda;
    for (const Scalar& c : *expr) lambda.push_back(-c);
    lambda.push_back(k->one());
    // cofactor = lambda_1 + lambda_2 f + ... + lambda_d f^(d-1)
    MultiPoly cofactor(ring);
    for (std::size_t i = 1; i <= d; ++i) cofactor += powers[i - 1].scale(lambda[i]);
    cofactor = reduce(cofactor, q.gb);
    if (lambda[0].is_zero()) {
      throw ZeroDivisorError(f.to_string() + " times " + cofactor.to_string() + " lies in the ideal",
                             std::vector<Scalar>(lambda.begin() + 1, lambda.end()), cofactor);
    }
    return reduce(cofactor.scale(-lambda[0].inv()), q.gb);
  }
}

const char* to_string(FieldTestReason r) {
  switch (r) {
    case FieldTestReason::None:
      return "none";
    case FieldTestReason::NonReduced:
      return "degenerate trace form";
    case FieldTestReason::Disconnected:
      return "Frobenius-fixed dimension > 1";
  }
  return "?";
}

FieldTestReport field_test(const Ideal& ideal) {
  require_prime_field(ideal.ring()->field(), "the field test");
  Quotient q(ideal);
  const RingPtr& ring = ideal.ring();
  const FieldPtr& k = ring->field();
  const std::size_t d = q.basis.size();
  const std::uint64_t p = k->characteristic();

  auto mono = [&](const Exponents& e) { return MultiPoly::monomial(ring, e, k->one()); };
  auto times = [](Exponents a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  };

  // prod[i][j] = coordinates of s_i * s_j.
  std::vector<std::vector<Vec>> prod(d, std::vector<Vec>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      prod[i][j] = q.coords(reduce(mono(times(q.basis[i], q.basis[j])), q.gb));
      prod[j][i] = prod[i][j];
    }
  }
  // Tr(s_c) = sum_l [s_l] (s_c s_l)
  Vec tr(d, k->zero());
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t l = 0; l < d; ++l) tr[c] += prod[c][l][l];
  }
  std::vector<Vec> gram(d, Vec(d, k->zero()));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t c = 0; c < d; ++c) {
        if (!prod[i][j][c].is_zero()) gram[i][j] += prod[i][j][c] * tr[c];
      }
    }
  }

  // Frobenius is GF(p)-linear with s_c -> s_c^p; rows of (F - I)^T.
  std::vector<Vec> frob(d);
  for (std::size_t c = 0; c < d; ++c) {
    Exponents e = q.basis[c];
    for (auto& x : e) x = static_cast<std::uint32_t>(x * p);
    frob[c] = q.coords(reduce(mono(e), q.gb));
    frob[c][c] -= k->one();
  }

  FieldTestReport r;
  r.dimension = d;
  r.trace_form_rank = detail::rank(k, gram, d);
  r.frobenius_fixed_dimension = d - detail::rank(k, frob, d);
  if (r.trace_form_rank < d) {
    r.reason = FieldTestReason::NonReduced;
  } else if (r.frobenius_fixed_dimension != 1) {
    r.reason = FieldTestReason::Disconnected;
  }
  return r;
}

bool is_field(const Ideal& ideal) { return field_test(ideal).is_field(); }

bool is_maximal(const Ideal& ideal) {
  require_prime_field(ideal.ring()->field(), "the maximality test");
  const GroebnerBasis& gb = ideal.basis();
  if (gb.is_unit()) return false;
  if (!staircase_dimension(gb)) return false;
  return is_field(ideal);
}

bool radical_member(const MultiPoly& f, const Ideal& ideal) {
  if (!same_ring(f.ring(), ideal.ring())) fail(ErrorKind::MixedRings, "f and I live in different rings");
  const RingPtr& ring = ideal.ring();
  RingPtr ext = ring->with_variable(ring->fresh_name("y"));
  const std::size_t y = ext->nvars() - 1;
  MultiPoly rab = MultiPoly::variable(ext, y) * f.change_ring(ext) - MultiPoly::constant(ext, 1);
  std::vector<MultiPoly> gens;
  for (const MultiPoly& g : ideal.generators()) gens.push_back(g.change_ring(ext));
  gens.push_back(std::move(rab));
  return !is_proper(Ideal(ext, std::move(gens)));
}

bool point_less(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Scalar& x, const Scalar& y) { return canonical_less(x, y); });
}

std::vector<std::vector<std::size_t>> frobenius_orbits(const std::vector<std::vector<Scalar>>& points) {
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<bool> done(points.size(), false);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> orbit;
    std::size_t j = i;
    while (!done[j]) {
      done[j] = true;
      orbit.push_back(j);
      std::vector<Scalar> img;
      for (const Scalar& c : points[j]) img.push_back(frobenius(c));
      auto it = std::lower_bound(points.begin(), points.end(), img, point_less);
      if (it == points.end() || *it != img) internal_error("Frobenius image leaves the point set");
      j = static_cast<std::size_t>(it - points.begin());
    }
    if (j != i) internal_error("Frobenius does not permute the point set");
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

PointSet points_of_maximal_ideal(const MaximalIdealResult& m, std::uint64_t seed, const PointBudget& budget) {
  const std::size_t D = m.residue_degree;
  const std::uint64_t p = m.chain.p;
  mpz_class size;
  mpz_ui_pow_ui(size.get_mpz_t(), p, D);
  if (D > budget.max_degree || size > mpz_class(std::to_string(budget.max_field_size))) {
    fail(ErrorKind::BudgetExceeded, "residue field GF(" + std::to_string(p) + "^" + std::to_string(D) +
                                        ") exceeds the enumeration budget");
  }
  PointSet out;
  out.k = D;
  out.field = extension_field(p, D);
  const RingPtr& ring = m.chain.ring;
  const std::size_t n = ring->nvars();

  // Every homomorphism of the chain's tower into GF(p^D), as images of t_1..t_n.
  std::vector<std::vector<Scalar>> partial{{}};
  for (std::size_t lvl = 0; lvl < n; ++lvl) {
    std::vector<std::vector<Scalar>> next;
    for (const auto& r : partial) {
      std::vector<Scalar> at(r);
      at.resize(n, out.field->zero());
      std::vector<Scalar> c;
      for (const MultiPoly& coeff : m.chain.polys[lvl].coefficients_in(lvl)) c.push_back(coeff.evaluate(at));
      for (const Scalar& root : roots(UPoly(out.field, std::move(c)), seed)) {
        next.push_back(r);
        next.back().push_back(root);
      }
    }
    partial = std::move(next);
  }

  std::vector<MultiPoly> lifts;
  for (const Scalar& a : m.point) lifts.push_back(lift(a, ring));
  for (const auto& r : partial) {
    std::vector<Scalar> pt;
    for (const MultiPoly& l : lifts) pt.push_back(l.evaluate(r));
    out.points.push_back(std::move(pt));
  }
  std::sort(out.points.begin(), out.points.end(), point_less);
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  out.orbits = frobenius_orbits(out.points);
  return out;
}

}  // namespace nullkit
