#include <gtest/gtest.h>

#include <functional>

#include "nullkit/nullsatz.hpp"
#include "testkit.hpp"

using namespace testkit;

namespace {

struct Vars {
  RingPtr r;
  std::vector<MultiPoly> x;
  explicit Vars(RingPtr ring) : r(std::move(ring)) {
    for (std::size_t i = 0; i < r->nvars(); ++i) x.push_back(MultiPoly::variable(r, i));
  }
  MultiPoly c(long v) const { return MultiPoly::constant(r, v); }
};

Ideal random_ideal(const FieldPtr& k, std::size_t n, Rng& rng) {
  RingPtr r = Ring::make(k, var_names(n));
  std::vector<MultiPoly> gens;
  const std::size_t count = 1 + rng.below(3);
  const int terms = k->kind() == FieldKind::Rational ? 3 : 4;
  for (std::size_t i = 0; i < count; ++i) gens.push_back(random_poly(r, 3, terms, rng));
  return Ideal(r, gens);
}

// Every polynomial over GF(p) in the given ring supported on the monomials
// of total degree <= deg.
std::vector<MultiPoly> all_small_polys(const RingPtr& r, int deg) {
  std::vector<Exponents> monos;
  const std::size_t n = r->nvars();
  Exponents e(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == n) {
      monos.push_back(e);
      return;
    }
    for (int d = 0; d <= left; ++d) {
      e[i] = static_cast<std::uint32_t>(d);
      rec(i + 1, left - d);
    }
    e[i] = 0;
  };
  rec(0, deg);
  const FieldPtr& k = r->field();
  const std::uint64_t p = k->characteristic();
  std::vector<MultiPoly> out;
  std::vector<std::uint64_t> digits(monos.size(), 0);
  for (;;) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < monos.size(); ++i) terms.push_back(Term{monos[i], k->from_coords({digits[i]})});
    out.push_back(MultiPoly::from_terms(r, std::move(terms)));
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  return out;
}

}  // namespace

TEST(Groebner, ReduceExamples) {
  Vars v(Ring::make(Field::rationals(), {"y", "x"}));
  const MultiPoly& x = v.x[1];
  const MultiPoly& y = v.x[0];
  std::vector<MultiPoly> bx{x};
  EXPECT_TRUE(reduce(x * x, bx).is_zero());
  std::vector<MultiPoly> bxy{x - y};
  EXPECT_EQ(reduce(x + y, bxy), v.c(2) * y);
  MultiPoly f = x * y + v.c(3);
  EXPECT_EQ(reduce(f, std::span<const MultiPoly>{}), f);
}

TEST(Groebner, BasisExamples) {
  Vars v(Ring::make(Field::rationals(), {"y", "x"}));
  const MultiPoly& x = v.x[1];
  const MultiPoly& y = v.x[0];
  EXPECT_TRUE(groebner_basis(v.r, {x, x + v.c(1)}).is_unit());
  EXPECT_TRUE(groebner_basis(v.r, {x * y - v.c(1), x * x}).is_unit());
  GroebnerBasis gb = groebner_basis(v.r, {x - y * y});
  ASSERT_EQ(gb.elements().size(), 1u);
  EXPECT_EQ(gb.elements()[0], x - y * y);
}

TEST(Groebner, ProperExamples) {
  Vars v(Ring::make(Field::rationals(), {"x"}));
  EXPECT_FALSE(is_proper(Ideal(v.r, {v.x[0], v.x[0] + v.c(1)})));
  Vars w(Ring::make(Field::prime(2), {"x"}));
  EXPECT_TRUE(is_proper(Ideal(w.r, {w.x[0] * w.x[0] + w.c(1)})));
  EXPECT_TRUE(is_proper(Ideal::zero(v.r)));
  EXPECT_TRUE(is_proper(Ideal(v.r, {MultiPoly(v.r)})));
}

TEST(Groebner, MemberExamples) {
  Vars v(Ring::make(Field::rationals(), {"y", "x"}));
  const MultiPoly& x = v.x[1];
  const MultiPoly& y = v.x[0];
  Ideal ix(v.r, {x});
  EXPECT_TRUE(member(x * x, ix));
  EXPECT_FALSE(member(y, ix));
  EXPECT_TRUE(member(x * x * y * y - v.c(1), Ideal(v.r, {x * y - v.c(1)})));
  Vars other(Ring::make(Field::prime(3), {"y", "x"}));
  EXPECT_THROW((void)member(other.x[0], ix), Error);
}

TEST(Groebner, EliminationExamples) {
  Vars v(Ring::make(Field::rationals(), {"x1", "x2"}));
  const MultiPoly& x1 = v.x[0];
  const MultiPoly& x2 = v.x[1];
  EXPECT_TRUE(elimination_ideal(Ideal(v.r, {x2.pow(3) + x1 * x2 - v.c(1)}), 1).is_zero());
  Ideal e = elimination_ideal(Ideal(v.r, {x2 - x1, x2 * x2}), 1);
  ASSERT_EQ(e.generators().size(), 1u);
  EXPECT_EQ(e.ring()->nvars(), 1u);
  EXPECT_EQ(e.generators()[0], MultiPoly::variable(e.ring(), 0).pow(2));
  Ideal u = elimination_ideal(Ideal::unit(v.r), 1);
  EXPECT_TRUE(u.basis().is_unit());
  try {
    (void)elimination_ideal(Ideal(v.r, {x1}), 2);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::BadVariableCount);
  }
}

TEST(Groebner, StaircaseExamples) {
  Vars v(Ring::make(Field::rationals(), {"y", "x"}));
  const MultiPoly& x = v.x[1];
  const MultiPoly& y = v.x[0];
  EXPECT_EQ(staircase_dimension(Ideal(v.r, {x * x, y})), QuotientDimension(2));
  auto sm = standard_monomials(groebner_basis(v.r, {x * x, y}));
  EXPECT_EQ(sm, (std::vector<Exponents>{{0, 0}, {0, 1}}));
  EXPECT_EQ(staircase_dimension(Ideal(v.r, {x - y * y})), std::nullopt);
  EXPECT_THROW((void)standard_monomials(groebner_basis(v.r, {x - y * y})), Error);
  Vars u(Ring::make(Field::rationals(), {"x"}));
  EXPECT_EQ(staircase_dimension(Ideal(u.r, {u.x[0]})), QuotientDimension(1));
  try {
    (void)staircase_dimension(Ideal::unit(u.r));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::ImproperIdeal);
  }
}

TEST(Groebner, RandomIdeals) {
  Rng rng(31);
  const std::vector<FieldPtr> fields{Field::prime(2), Field::prime(3), Field::prime(5), Field::rationals()};
  for (int i = 0; i < 300; ++i) {
    const FieldPtr& k = fields[i % fields.size()];
    Ideal I = random_ideal(k, 1 + rng.below(3), rng);
    const GroebnerBasis& gb = I.basis();
    for (const MultiPoly& g : I.generators()) EXPECT_TRUE(reduce(g, gb).is_zero()) << I.to_string();
    EXPECT_TRUE(is_reduced(gb.elements())) << I.to_string();
    EXPECT_TRUE(satisfies_s_criterion(gb.elements())) << I.to_string();
    for (std::size_t j = 1; j < gb.elements().size(); ++j) {
      EXPECT_TRUE(lex_less(gb.elements()[j - 1].leading_exponents(), gb.elements()[j].leading_exponents()));
    }
    // Every basis element lies in I: the basis of the basis is the basis.
    EXPECT_EQ(groebner_basis(I.ring(), gb.elements()).elements(), gb.elements());
  }
}

TEST(Groebner, Deterministic) {
  Rng rng(32);
  for (int i = 0; i < 30; ++i) {
    Ideal I = random_ideal(Field::prime(3), 3, rng);
    EXPECT_EQ(groebner_basis(I).elements(), groebner_basis(I).elements());
  }
}

TEST(Groebner, FastAndGenericEnginesAgree) {
  // A degree-one tower forces the generic engine on the same GF(p) ideal.
  Rng rng(33);
  for (std::uint64_t p : {2u, 3u, 5u}) {
    FieldPtr fp = Field::prime(p);
    FieldPtr lin = fp->extend(std::vector<Scalar>{fp->zero(), fp->one()});
    for (int i = 0; i < 40; ++i) {
      Ideal I = random_ideal(fp, 3, rng);
      RingPtr rl = Ring::make(lin, I.ring()->vars());
      std::vector<MultiPoly> lifted;
      for (const MultiPoly& g : I.generators()) {
        std::vector<Term> terms;
        for (const Term& t : g.terms()) terms.push_back(Term{t.exps, lin->embed(t.coeff)});
        lifted.push_back(MultiPoly::from_terms(rl, std::move(terms)));
      }
      const auto& a = I.basis().elements();
      const GroebnerBasis gl = groebner_basis(rl, lifted);
      const auto& b = gl.elements();
      ASSERT_EQ(a.size(), b.size());
      for (std::size_t j = 0; j < a.size(); ++j) {
        ASSERT_EQ(a[j].size(), b[j].size());
        for (std::size_t t = 0; t < a[j].size(); ++t) {
          EXPECT_EQ(a[j].terms()[t].exps, b[j].terms()[t].exps);
          EXPECT_EQ(lin->embed(a[j].terms()[t].coeff), b[j].terms()[t].coeff);
        }
      }
    }
  }
}

TEST(Groebner, EliminationBruteForce) {
  Rng rng(34);
  for (int i = 0; i < 40; ++i) {
    Ideal I = random_ideal(Field::prime(2), 2 + rng.below(2), rng);
    const std::size_t k = 1 + rng.below(I.ring()->nvars() - 1);
    Ideal E = elimination_ideal(I, k);
    for (const MultiPoly& g : E.generators()) EXPECT_TRUE(member(g.change_ring(I.ring()), I));
    const int deg = k == 1 ? 4 : 2;
    for (const MultiPoly& f : all_small_polys(E.ring(), deg)) {
      if (member(f.change_ring(I.ring()), I)) EXPECT_TRUE(member(f, E)) << I.to_string() << " " << f.to_string();
    }
  }
}

TEST(Groebner, StaircaseMatchesChainDegrees) {
  Rng rng(35);
  int done = 0;
  for (int i = 0; done < 30 && i < 200; ++i) {
    const std::uint64_t p = rng.pick(std::vector<std::uint64_t>{2, 3, 5});
    Ideal I = random_ideal(Field::prime(p), 1 + rng.below(3), rng);
    if (!is_proper(I)) continue;
    MaximalIdealResult m = maximal_ideal_containing(I);
    std::size_t product = 1;
    for (std::size_t j = 0; j < m.chain.polys.size(); ++j) {
      product *= static_cast<std::size_t>(m.chain.polys[j].degree_in(j));
    }
    EXPECT_EQ(product, m.residue_degree);
    EXPECT_EQ(staircase_dimension(Ideal(m.chain.ring, m.chain.polys)), QuotientDimension(product));
    EXPECT_EQ(staircase_dimension(m.ideal()), QuotientDimension(product));
    ++done;
  }
  EXPECT_EQ(done, 30);
}

TEST(Groebner, SumOfIdeals) {
  Vars v(Ring::make(Field::prime(5), {"x1", "x2"}));
  Ideal a(v.r, {v.x[0] - v.c(1)});
  Ideal b(v.r, {v.x[0] - v.c(2)});
  EXPECT_FALSE(is_proper(a + b));
  EXPECT_TRUE(is_proper(a + Ideal(v.r, {v.x[1]})));
}
