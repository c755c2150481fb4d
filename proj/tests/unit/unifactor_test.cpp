#include <gtest/gtest.h>

#include "testkit.hpp"

using namespace testkit;

namespace {

UPoly up(const FieldPtr& k, std::initializer_list<long> c) {
  std::vector<Scalar> v;
  for (long x : c) v.push_back(k->from_int(x));
  return UPoly(k, std::move(v));
}

FieldPtr gf4() {
  FieldPtr f2 = Field::prime(2);
  return f2->extend(std::vector<Scalar>{f2->one(), f2->one(), f2->one()});
}

std::size_t brute_root_count(const UPoly& f) {
  std::size_t n = 0;
  for (const Scalar& a : all_elements(f.field())) n += f.evaluate(a).is_zero();
  return n;
}

}  // namespace

TEST(Unifactor, SquarefreeExamples) {
  FieldPtr f2 = Field::prime(2), f5 = Field::prime(5);
  auto a = squarefree_decompose(up(f2, {1, 0, 1}));
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].poly, up(f2, {1, 1}));
  EXPECT_EQ(a[0].multiplicity, 2u);

  auto b = squarefree_decompose(up(f5, {-1, 0, 1}));
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0].poly, up(f5, {-1, 0, 1}));
  EXPECT_EQ(b[0].multiplicity, 1u);

  for (const FieldPtr& k : {f2, f5, Field::rationals()}) {
    auto c = squarefree_decompose(UPoly::x(k));
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0].poly, UPoly::x(k));
  }
  // x^3 + 1 = (x + 1)^3 over GF(3): derivative vanishes.
  auto d = squarefree_decompose(up(Field::prime(3), {1, 0, 0, 1}));
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].multiplicity, 3u);
  try {
    (void)squarefree_decompose(UPoly(f5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroPolynomial);
  }
}

TEST(Unifactor, FactorExamples) {
  FieldPtr f5 = Field::prime(5), f2 = Field::prime(2);
  Factorization a = factor(up(f5, {1, 0, 1}));
  ASSERT_EQ(a.factors.size(), 2u);
  EXPECT_EQ(a.factors[0].poly, up(f5, {2, 1}));
  EXPECT_EQ(a.factors[1].poly, up(f5, {3, 1}));
  EXPECT_TRUE(a.unit.is_one());

  Factorization b = factor(up(f2, {1, 1, 1}));
  ASSERT_EQ(b.factors.size(), 1u);
  EXPECT_EQ(b.factors[0].poly, up(f2, {1, 1, 1}));

  FieldPtr k = gf4();
  Scalar t = k->generator(0);
  Factorization c = factor(UPoly(k, {k->one(), k->one(), k->one()}));
  ASSERT_EQ(c.factors.size(), 2u);
  EXPECT_EQ(c.factors[0].poly, UPoly(k, {t, k->one()}));
  EXPECT_EQ(c.factors[1].poly, UPoly(k, {t + k->one(), k->one()}));

  try {
    (void)factor(up(f5, {3}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ConstantPolynomial);
  }
}

TEST(Unifactor, IrreducibleExamples) {
  FieldPtr f2 = Field::prime(2);
  EXPECT_TRUE(is_irreducible(up(f2, {1, 1, 1})));
  EXPECT_FALSE(is_irreducible(up(f2, {1, 0, 1})));
  EXPECT_TRUE(is_irreducible(up(Field::prime(7), {3, 5})));
  EXPECT_TRUE(is_irreducible(UPoly(gf4(), {gf4()->generator(0), gf4()->one()})));
  EXPECT_THROW((void)is_irreducible(up(f2, {1})), Error);
}

TEST(Unifactor, CanonicalIrreducible) {
  FieldPtr f2 = Field::prime(2);
  EXPECT_EQ(canonical_irreducible(f2, 2), up(f2, {1, 1, 1}));
  EXPECT_EQ(canonical_irreducible(f2, 3), up(f2, {1, 1, 0, 1}));
  FieldPtr f3 = Field::prime(3);
  EXPECT_EQ(canonical_irreducible(f3, 2), up(f3, {1, 0, 1}));
  for (std::uint64_t p : {2u, 3u, 5u}) {
    for (std::size_t k = 1; k <= 4; ++k) {
      UPoly m = canonical_irreducible(Field::prime(p), k);
      EXPECT_EQ(m.degree(), static_cast<int>(k));
      EXPECT_TRUE(brute_irreducible(m));
      // Nothing lexicographically smaller is irreducible.
      for (const UPoly& g : all_monic(Field::prime(p), static_cast<int>(k))) {
        std::vector<std::uint64_t> gc, mc;
        for (int i = static_cast<int>(k) - 1; i >= 0; --i) {
          gc.push_back(g.coeff(static_cast<std::size_t>(i)).residue());
          mc.push_back(m.coeff(static_cast<std::size_t>(i)).residue());
        }
        if (gc < mc) EXPECT_FALSE(brute_irreducible(g)) << g.to_string();
      }
    }
  }
  EXPECT_EQ(extension_field(5, 1)->kind(), FieldKind::Prime);
  EXPECT_EQ(extension_field(3, 4)->degree(), 4u);
}

TEST(Unifactor, TowerExtendChecks) {
  FieldPtr f2 = Field::prime(2);
  try {
    (void)tower_extend(f2, up(f2, {1, 0, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ReducibleMinPoly);
  }
  EXPECT_EQ(tower_extend(f2, up(f2, {1, 1, 1}))->degree(), 2u);
  EXPECT_EQ(tower_extend(f2, up(f2, {1, 0, 1}), false)->degree(), 2u);
  EXPECT_THROW((void)tower_extend(f2, up(f2, {1, 1, 0, 1}), true, 2), Error);
}

TEST(Unifactor, RefactorAndIrreducible) {
  Rng rng(61);
  std::vector<FieldPtr> fields{Field::prime(2), Field::prime(3), Field::prime(5), Field::prime(13)};
  for (std::size_t d : {2u, 3u, 4u, 6u, 8u}) fields.push_back(random_tower(2, d, rng));
  fields.push_back(random_tower(3, 2, rng));
  fields.push_back(random_tower(3, 4, rng));
  fields.push_back(random_tower(5, 2, rng));
  for (int i = 0; i < 300; ++i) {
    const FieldPtr& k = fields[i % fields.size()];
    UPoly f = random_upoly(k, 1 + static_cast<int>(rng.below(8)), rng);
    if (rng.coin()) f = f * random_upoly(k, 1 + static_cast<int>(rng.below(2)), rng);
    const std::uint64_t seed = rng.below(1000);
    Factorization fac = factor(f, seed);
    EXPECT_EQ(fac.expand(), f) << f.to_string();
    for (std::size_t j = 0; j < fac.factors.size(); ++j) {
      const UPoly& g = fac.factors[j].poly;
      EXPECT_TRUE(g.lead().is_one());
      EXPECT_TRUE(is_irreducible(g)) << g.to_string();
      if (brute_irreducible_cost(g) < 20000) EXPECT_TRUE(brute_irreducible(g)) << g.to_string();
      if (j > 0) EXPECT_TRUE(canonical_less(fac.factors[j - 1].poly, g));
    }
    Factorization again = factor(f, seed);
    ASSERT_EQ(again.factors.size(), fac.factors.size());
    for (std::size_t j = 0; j < fac.factors.size(); ++j) {
      EXPECT_EQ(again.factors[j].poly, fac.factors[j].poly);
      EXPECT_EQ(again.factors[j].multiplicity, fac.factors[j].multiplicity);
    }
  }
}

TEST(Unifactor, IrreducibilityAgreesWithTrialDivision) {
  Rng rng(62);
  for (int i = 0; i < 200; ++i) {
    FieldPtr k = Field::prime(rng.pick(std::vector<std::uint64_t>{2, 3, 5}));
    UPoly f = random_upoly(k, 1 + static_cast<int>(rng.below(6)), rng);
    EXPECT_EQ(is_irreducible(f), brute_irreducible(f)) << f.to_string();
  }
}

TEST(Unifactor, RootCount) {
  Rng rng(63);
  std::vector<FieldPtr> fields{Field::prime(5), Field::prime(13), gf4(), random_tower(3, 2, rng),
                               random_tower(2, 6, rng)};
  int checked = 0;
  for (int i = 0; checked < 100 && i < 1000; ++i) {
    const FieldPtr& k = fields[i % fields.size()];
    UPoly f = random_upoly(k, 1 + static_cast<int>(rng.below(6)), rng);
    if (squarefree_decompose(f).size() != 1 || squarefree_decompose(f)[0].multiplicity != 1) continue;
    std::size_t linear = 0;
    for (const Factor& fa : factor(f).factors) linear += fa.poly.degree() == 1;
    auto rs = roots(f);
    EXPECT_EQ(rs.size(), linear);
    EXPECT_EQ(rs.size(), brute_root_count(f));
    for (const Scalar& r : rs) EXPECT_TRUE(f.evaluate(r).is_zero());
    ++checked;
  }
  EXPECT_EQ(checked, 100);
}

TEST(Unifactor, PthRoot) {
  Rng rng(64);
  FieldPtr k = random_tower(3, 4, rng);
  for (int i = 0; i < 50; ++i) {
    Scalar a = random_scalar(k, rng);
    EXPECT_EQ(frobenius(pth_root(a)), a);
  }
}

TEST(Unifactor, MultiPolyFrontEnd) {
  FieldPtr f5 = Field::prime(5);
  RingPtr r = Ring::make(f5, {"x"});
  MultiPoly x = MultiPoly::variable(r, 0);
  MultiPoly f = (x * x + MultiPoly::constant(r, 1)) * (x + MultiPoly::constant(r, 2));
  Factorization fac = factor(f);
  ASSERT_EQ(fac.factors.size(), 2u);
  EXPECT_EQ(fac.factors[0].multiplicity, 2u);
  EXPECT_FALSE(is_irreducible(f));
  EXPECT_TRUE(is_irreducible(x + MultiPoly::constant(r, 4)));
  auto sq = squarefree_decompose(f);
  ASSERT_EQ(sq.size(), 2u);
  EXPECT_EQ(sq[1].second, 2u);
}
