// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "nullkit/cli.hpp"
#include "nullkit/noether.hpp"
#include "nullkit/nullsatz.hpp"
#include "nullkit/oracle.hpp"
#include "testkit.hpp"

using namespace testkit;

namespace {

struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<void(Tally&)> body;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string golden(const std::string& name) { return std::string(NULLKIT_GOLDEN_DIR) + "/" + name; }

// Sum of e_j m^(n-j) at the lexicographically largest exponent tuple (x_1 first).
std::uint64_t lex_max_weight(const MultiPoly& f, std::uint64_t m) {
  Exponents top = f.terms().front().exps;
  for (const Term& t : f.terms()) {
    if (std::lexicographical_compare(top.begin(), top.end(), t.exps.begin(), t.exps.end())) top = t.exps;
  }
  std::uint64_t v = 0;
  for (std::uint32_t e : top) v = v * m + e;
  return v;
}

void monicizer_suite(Tally& t) {
  Rng rng(1001);
  const std::vector<FieldPtr> fields{Field::prime(2), Field::prime(3), Field::prime(5), Field::rationals()};
  for (int i = 0; i < 500; ++i) {
    RingPtr r = Ring::make(fields[i % 4], var_names(2 + rng.below(3)));
    const std::size_t last = r->nvars() - 1;
    MultiPoly f = random_nonconstant(r, 4, 4, rng);
    MonicizingMap m = build_monicizer(f);
    MultiPoly g = apply_monicizer(m, f);
    const std::uint64_t expect = lex_max_weight(f, m.base);
    t.expect(is_monic_in(g, last), "not monic: " + f.to_string());
    t.expect(static_cast<std::uint64_t>(g.degree_in(last)) == expect, "degree mismatch: " + f.to_string());
    t.expect(predicted_degree(m, f) == expect, "predicted degree mismatch: " + f.to_string());
    ++t.cases;
  }
  for (int i = 0; i < 200; ++i) {
    RingPtr r = Ring::make(fields[i % 4], var_names(2 + rng.below(3)));
    MultiPoly f = random_nonconstant(r, 4, 4, rng);
    MonicizingMap m = build_monicizer(f);
    t.expect(apply_inverse(m, apply_monicizer(m, f)) == f, "inverse composition: " + f.to_string());
    ++t.cases;
  }
}

void resultant_suite(Tally& t) {
  Rng rng(1002);
  const std::vector<FieldPtr> fields{Field::prime(2), Field::prime(3), Field::prime(5), Field::rationals()};
  for (int i = 0; i < 200; ++i) {
    RingPtr r = Ring::make(fields[i % 4], var_names(2 + rng.below(2)));
    const std::size_t last = r->nvars() - 1;
    MultiPoly h = random_nonconstant(r, 2, 2, rng);
    MultiPoly g = make_monic_in(apply_monicizer(build_monicizer(h), h), last);
    MultiPoly f = random_poly(r, 2, 3, rng);
    if (f.is_zero()) f = MultiPoly::variable(r, 0);
    MultiPoly R = resultant(f, g, last);
    t.expect(!R.involves(last), "resultant involves x_n: " + f.to_string() + " | " + g.to_string());
    t.expect(member(R, Ideal(r, {f, g})), "resultant not in <f, g>: " + f.to_string() + " | " + g.to_string());
    ++t.cases;
  }
  std::size_t unit = 0;
  while (unit < 100) {
    const std::uint64_t p = rng.pick(std::vector<std::uint64_t>{2, 3, 5});
    RingPtr r = Ring::make(Field::prime(p), var_names(2 + rng.below(2)));
    RingPtr sub = r->prefix(r->nvars() - 1);
    std::vector<MultiPoly> mg{random_nonconstant(sub, 2, 3, rng)};
    if (rng.coin()) mg.push_back(random_nonconstant(sub, 2, 3, rng));
    Ideal mprime(sub, mg);
    if (!is_proper(mprime)) continue;
    MultiPoly f = unit_shaped_probe(r, mg, 1 + static_cast<int>(rng.below(2)), rng);
    MultiPoly g = random_monic_last(r, 1 + static_cast<int>(rng.below(2)), 2, rng);
    MultiPoly R = resultant(f, g, r->nvars() - 1);
    t.expect(reduce(R.change_ring(sub), mprime.basis()).is_one(), "R not 1 mod M': " + f.to_string());
    ++unit;
    ++t.cases;
  }
  std::size_t ends = 0;
  while (ends < 100) {
    const std::uint64_t p = rng.pick(std::vector<std::uint64_t>{2, 3, 5});
    RingPtr r = Ring::make(Field::prime(p), var_names(2 + rng.below(2)));
    const std::size_t last = r->nvars() - 1;
    MultiPoly g = random_monic_last(r, 1 + static_cast<int>(rng.below(2)), 2, rng);
    Ideal I(r, {g, random_poly(r, 2, 3, rng)});
    if (!is_proper(I)) continue;
    Ideal elim = elimination_ideal(I, last);
    Ideal mprime = elim.is_zero() ? Ideal(elim.ring(), {MultiPoly::variable(elim.ring(), 0)})
                                  : maximal_ideal_containing(elim).ideal();
    std::vector<MultiPoly> sum = I.generators();
    std::vector<MultiPoly> lifted;
    for (const MultiPoly& m : mprime.generators()) {
      lifted.push_back(m.change_ring(r));
      sum.push_back(lifted.back());
    }
    const std::vector<MultiPoly> probes{g, random_combination(r, I.generators(), 1, rng), MultiPoly::constant(r, 1)};
    try {
      ExtensionReport rep = lemma2_certificate(I, g, Ideal(r, lifted), last, probes);
      t.expect(rep.extension_proper && !rep.violation, "certificate not proper: " + I.to_string());
    } catch (const Error& e) {
      t.expect(false, std::string("certificate raised: ") + e.what());
    }
    t.expect(is_proper(Ideal(r, sum)), "I + M' improper: " + I.to_string());
    ++ends;
    ++t.cases;
  }
}

// Maximal ideals built in the third suite, reused by the fourth.
std::vector<MaximalIdealResult> g_maximal;

void maximal_suite(Tally& t) {
  Rng rng(1003);
  PointBudget wide;
  wide.max_degree = 256;
  wide.max_field_size = std::numeric_limits<std::uint64_t>::max();
  for (int i = 0; i < 100; ++i) {
    Ideal I = random_proper_ideal(rng);
    MaximalIdealResult m = maximal_ideal_containing(I);
    Ideal M = m.ideal();
    const std::string tag = I.to_string();
    for (const MultiPoly& g : I.generators()) t.expect(member(g, M), "generator not in M: " + tag);
    t.expect(is_proper(M), "M improper: " + tag);
    const QuotientDimension d = quotient_dimension(M);
    t.expect(d.has_value() && *d == m.residue_degree, "dimension mismatch: " + tag);
    t.expect(is_field(M), "is_field false: " + tag);
    try {
      PointSet ps = points_of_maximal_ideal(m, 0, wide);
      t.expect(!ps.points.empty(), "no points: " + tag);
      for (const auto& pt : ps.points) {
        for (const MultiPoly& g : I.generators()) t.expect(g.evaluate(pt).is_zero(), "generator nonzero at point: " + tag);
      }
    } catch (const Error& e) {
      t.expect(false, std::string("points failed: ") + e.what() + " for " + tag);
    }
    g_maximal.push_back(std::move(m));
    ++t.cases;
  }
}

void field_test_suite(Tally& t) {
  Rng rng(1004);
  for (const MaximalIdealResult& m : g_maximal) {
    Ideal M = m.ideal();
    t.expect(is_field(M), "constructed ideal fails is_field: " + M.to_string());
    t.expect(quotient_dimension(M).has_value(), "constructed ideal not zero-dimensional: " + M.to_string());
    const GroebnerBasis& gb = M.basis();
    std::size_t done = 0;
    while (done < 20) {
      MultiPoly f = random_poly(M.ring(), 3, 3, rng);
      if (reduce(f, gb).is_zero()) continue;
      MultiPoly g = quotient_inverse(f, M);
      t.expect(reduce(f * g, gb).is_one(), "inverse wrong: " + f.to_string() + " mod " + M.to_string());
      ++done;
    }
    ++t.cases;
  }
  std::size_t products = 0;
  while (products < 25) {
    Ideal a = random_proper_ideal(rng);
    RingPtr r = a.ring();
    Ideal b(r, {random_nonconstant(r, 3, 3, rng), random_nonconstant(r, 3, 3, rng)});
    if (!is_proper(b)) continue;
    MaximalIdealResult m1 = maximal_ideal_containing(a), m2 = maximal_ideal_containing(b);
    if (m1.generators == m2.generators) continue;
    std::vector<MultiPoly> prod;
    for (const MultiPoly& x : m1.generators) {
      for (const MultiPoly& y : m2.generators) prod.push_back(x * y);
    }
    Ideal J(r, prod);
    const QuotientDimension d = quotient_dimension(J);
    t.expect(d.has_value() && *d == m1.residue_degree + m2.residue_degree, "product dimension: " + J.to_string());
    FieldTestReport rep = field_test(J);
    t.expect(rep.reason == FieldTestReason::Disconnected && rep.frobenius_fixed_dimension > 1,
             "product not reported disconnected: " + J.to_string());
    ++products;
    ++t.cases;
  }
  std::size_t nilpotent = 0;
  while (nilpotent < 25) {
    Ideal a = random_proper_ideal(rng);
    MaximalIdealResult m = maximal_ideal_containing(a);
    std::vector<MultiPoly> gens = m.generators;
    gens[0] = gens[0] * gens[0];
    Ideal J(a.ring(), gens);
    const QuotientDimension d = quotient_dimension(J);
    // Only strict enlargements of the quotient are non-maximal.
    if (!d || *d <= m.residue_degree) continue;
    FieldTestReport rep = field_test(J);
    t.expect(rep.reason == FieldTestReason::NonReduced && rep.trace_form_rank < rep.dimension,
             "nilpotent not reported non-reduced: " + J.to_string());
    ++nilpotent;
    ++t.cases;
  }
}

struct RationalCase {
  std::string ideal;
  std::string f;
  bool expected;
};

void radical_suite(Tally& t) {
  Rng rng(1005);
  const std::uint64_t budget = std::uint64_t{1} << 20;
  std::size_t done = 0, members = 0;
  while (done < 100) {
    const std::uint64_t p = rng.pick(std::vector<std::uint64_t>{2, 3, 5});
    const std::size_t n = 1 + rng.below(3);
    const std::size_t cap = std::min<std::size_t>(8, max_slice_degree(p, n, budget));
    if (cap == 0) continue;
    ZeroDimInstance z = random_zero_dim(p, n, cap, rng);
    const std::size_t D = *quotient_dimension(z.ideal);
    MultiPoly f = rng.coin() ? random_combination(z.ideal.ring(), z.radical_elements, 1, rng)
                             : random_poly(z.ideal.ring(), 2, 3, rng);
    const bool decision = radical_member(f, z.ideal);
    const bool power = power_member_oracle(f, z.ideal, D);
    const bool points = radical_member_oracle(f, z.ideal, D, budget);
    const std::string tag = z.ideal.to_string() + " f = " + f.to_string();
    t.expect(decision == power, "decision vs f^D membership: " + tag);
    t.expect(decision == points, "decision vs point vanishing: " + tag);
    members += decision;
    ++done;
    ++t.cases;
  }
  t.expect(members > 0 && members < done, "radical cases not mixed");

  const std::vector<RationalCase> rational{
      {"vars x\nx^2", "x", true},
      {"vars x\nx^2", "x + 1", false},
      {"vars x\nx^3 - x^2", "x^2 - x", true},
      {"vars x\nx^3 - x^2", "x", false},
      {"vars x\n(x - 1)^2*(x + 2)", "(x - 1)*(x + 2)", true},
      {"vars x\n(x - 1)^2*(x + 2)", "x - 1", false},
      {"vars x, y\nx^2\ny^2", "x + y", true},
      {"vars x, y\nx^2\ny^2", "x*y + 1", false},
      {"vars x, y\nx^2 + y^2\nx*y", "x - y", true},
      {"vars x, y\nx^2 + y^2\nx*y", "x + 1", false},
      {"vars x, y\n(x - 1)^2\n(y - 2)^3", "(x - 1)*(y - 2)", true},
      {"vars x, y\n(x - 1)^2\n(y - 2)^3", "x + y - 3", true},
      {"vars x, y\n(x - 1)^2\n(y - 2)^3", "x - y", false},
      {"vars x, y\nx^2 - 2\ny - x", "y^2 - 2", true},
      {"vars x, y\nx^2 - 2\ny - x", "y - 1", false},
      {"vars x, y\n(x^2 - 2)^2\ny^2 - x", "x^2 - 2", true},
      {"vars x, y\n(x^2 - 2)^2\ny^2 - x", "y^4 - 2", true},
      {"vars x, y\n(x^2 - 2)^2\ny^2 - x", "y^2 - 2", false},
      {"vars x, y, z\nx^2\ny - x\nz^2 - 1", "y", true},
      {"vars x, y, z\nx^2\ny - x\nz^2 - 1", "z - 1", false},
  };
  for (const RationalCase& c : rational) {
    Ideal I = cli::parse_ideal("field QQ\n" + c.ideal);
    MultiPoly f = cli::parse_poly(c.f, I.ring());
    const QuotientDimension D = quotient_dimension(I);
    const std::string tag = I.to_string() + " f = " + f.to_string();
    t.expect(D.has_value(), "not zero-dimensional: " + tag);
    if (!D) continue;
    const bool decision = radical_member(f, I);
    t.expect(decision == power_member_oracle(f, I, *D), "decision vs f^D membership over QQ: " + tag);
    t.expect(decision == c.expected, "hand-built expectation: " + tag);
    ++t.cases;
  }
}

void determinant_suite(Tally& t) {
  Rng rng(1006);
  const std::vector<FieldPtr> fields{Field::prime(3), Field::prime(7), Field::rationals()};
  for (int i = 0; i < 100; ++i) {
    RingPtr r = Ring::make(fields[i % 3], var_names(2));
    PolyMatrix m = random_matrix(r, 1 + rng.below(4), rng);
    t.expect(det_fraction_free(m) == cofactor_det(m), "determinant mismatch at case " + std::to_string(i));
    ++t.cases;
  }
}

void factor_suite(Tally& t) {
  Rng rng(1007);
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
    t.expect(fac.expand() == f, "refactoring identity: " + f.to_string());
    for (const Factor& g : fac.factors) {
      t.expect(g.poly.lead().is_one() && is_irreducible(g.poly), "factor not monic irreducible: " + g.poly.to_string());
    }
    Factorization again = factor(f, seed);
    bool same = again.factors.size() == fac.factors.size() && again.unit == fac.unit;
    for (std::size_t j = 0; same && j < fac.factors.size(); ++j) {
      same = again.factors[j].poly == fac.factors[j].poly && again.factors[j].multiplicity == fac.factors[j].multiplicity;
    }
    t.expect(same, "nondeterministic: " + f.to_string());
    ++t.cases;
  }
}

int run_cli(std::vector<std::string> args, std::string& out) {
  std::istringstream in;
  std::ostringstream o, e;
  const int code = cli::run(args, in, o, e);
  out = o.str();
  return code;
}

void cli_suite(Tally& t) {
  Rng rng(1008);
  for (int i = 0; i < 100; ++i) {
    const std::string text = random_ideal_text(rng);
    Ideal a = cli::parse_ideal(text);
    const std::string rendered = cli::render_ideal(a);
    Ideal b = cli::parse_ideal(rendered);
    t.expect(a.ring()->vars() == b.ring()->vars() && same_field(a.ring()->field(), b.ring()->field()) &&
                 a.generators() == b.generators() && cli::render_ideal(b) == rendered,
             "round trip: " + text);
    ++t.cases;
  }
  struct Case {
    std::vector<std::string> args;
    std::string input, expected;
  };
  const std::vector<Case> cases{
      {{"maxideal"}, "maxideal.ideal", "maxideal.txt"},
      {{"--json", "maxideal"}, "maxideal.ideal", "maxideal.json"},
      {{"normalize", "x1^2*x2 + x2^3"}, "normalize.ideal", "normalize.txt"},
      {{"--json", "normalize", "x1^2*x2 + x2^3"}, "normalize.ideal", "normalize.json"},
      {{"resultant", "1 + x1*x2", "x1 + x2^2", "x2"}, "resultant.ideal", "resultant.txt"},
      {{"--json", "resultant", "1 + x1*x2", "x1 + x2^2", "x2"}, "resultant.ideal", "resultant.json"},
  };
  for (const Case& c : cases) {
    const std::string want = slurp(golden(c.expected));
    for (int pass = 0; pass < 2; ++pass) {
      std::vector<std::string> args{"--seed", "0"};
      args.insert(args.end(), c.args.begin(), c.args.end());
      args.push_back("--input");
      args.push_back(golden(c.input));
      std::string out;
      const int code = run_cli(args, out);
      t.expect(code == 0 && out == want, "golden mismatch: " + c.expected);
    }
    ++t.cases;
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "monicizing map", 10, monicizer_suite},
      {2, "resultant extension", 120, resultant_suite},
      {3, "maximal ideal construction", 300, maximal_suite},
      {4, "field test and inverses", 120, field_test_suite},
      {5, "radical membership agreement", 300, radical_suite},
      {6, "determinant cross-check", 10, determinant_suite},
      {7, "factorization", 60, factor_suite},
      {8, "cli round trip and golden files", 5, cli_suite},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.body(t);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = error.empty() && t.failures == 0 && secs < c.limit_seconds;
    failed += !ok;
    std::printf("criterion %d (%s): %s  cases=%zu failures=%zu time=%.2fs limit=%.0fs\n", c.id, c.name.c_str(),
                ok ? "PASS" : "FAIL", t.cases, t.failures, secs, c.limit_seconds);
    if (!error.empty()) std::printf("  exception: %s\n", error.c_str());
    if (t.failures) std::printf("  first failure: %s\n", t.first_failure.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
