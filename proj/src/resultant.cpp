#include "nullkit/resultant.hpp"

namespace nullkit {

SylvesterMatrix sylvester(const MultiPoly& f, const MultiPoly& g, std::size_t var) {
  if (!same_ring(f.ring(), g.ring())) fail(ErrorKind::MixedRings, "sylvester of polynomials in different rings");
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "sylvester with f = 0");
  const int dg = g.degree_in(var);
  const int df = f.degree_in(var);
  if (df == 0 && dg == 0) fail(ErrorKind::BothConstant, "both polynomials are free of " + f.ring()->var(var));
  auto gc = g.coefficients_in(var);
  if (dg < 1 || !gc.back().is_one()) {
    fail(ErrorKind::NotMonicInVariable, g.to_string() + " is not monic in " + g.ring()->var(var));
  }
  auto fc = f.coefficients_in(var);
  const std::size_t d = static_cast<std::size_t>(df), e = static_cast<std::size_t>(dg);
  const std::size_t n = d + e;
  SylvesterMatrix s;
  s.d = d;
  s.e = e;
  s.entries.assign(n, std::vector<MultiPoly>(n, MultiPoly(f.ring())));
  for (std::size_t r = 0; r < e; ++r) {
    for (std::size_t j = 0; j <= d; ++j) s.entries[r][r + j] = fc[j];
  }
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t j = 0; j <= e; ++j) s.entries[e + r][r + j] = gc[j];
  }
  return s;
}

MultiPoly det_fraction_free(const PolyMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) fail(ErrorKind::NotSquare, "determinant of a non-square matrix");
  }
  if (n == 0) internal_error("determinant of an empty matrix has no ring");
  const RingPtr& ring = m[0][0].ring();
  for (const auto& row : m) {
    for (const auto& x : row) {
      if (!same_ring(x.ring(), ring)) fail(ErrorKind::MixedRings, "matrix entries from different rings");
    }
  }
  PolyMatrix a = m;
  bool negate = false;
  MultiPoly prev = MultiPoly::constant(ring, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].is_zero()) ++r;
      if (r == n) return MultiPoly(ring);
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = prev.is_one() ? std::move(num) : exact_divide(num, prev);
      }
      a[i][k] = MultiPoly(ring);
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::size_t var) {
  return det_fraction_free(sylvester(f, g, var).entries);
}

// ---------------------------------------------------------------------------

ExtensionReport lemma2_certificate(const Ideal& ideal, const MultiPoly& g, const Ideal& mprime, std::size_t var,
                                   const std::vector<MultiPoly>& probes) {
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->nvars();
  if (var + 1 != n) fail(ErrorKind::BadVariableIndex, "the eliminated variable must be the last (greatest) one");
  if (!same_ring(mprime.ring(), ring) || !same_ring(g.ring(), ring)) {
    fail(ErrorKind::MixedRings, "I, g and M' must share a ring");
  }

  ExtensionReport report;
  auto violate = [&](const std::string& what) {
    report.violation = what;
    throw HypothesisViolation(what, report);
  };

  if (!is_monic_in(g, var) || g.degree_in(var) < 1) violate("g is not monic in " + ring->var(var));
  const MultiPoly gm = make_monic_in(g, var);
  for (const MultiPoly& m : mprime.generators()) {
    if (m.involves(var)) violate("M' generator " + m.to_string() + " involves " + ring->var(var));
  }
  const GroebnerBasis& mgb = mprime.basis();

  for (const MultiPoly& f : probes) {
    if (!same_ring(f.ring(), ring)) fail(ErrorKind::MixedRings, "probe from another ring");
    ResultantWitness w{f, member(f, ideal), false, MultiPoly(ring), false, false, MultiPoly(ring)};
    auto fc = f.coefficients_in(var);
    if (!fc.empty()) {
      w.unit_shape_mod_mprime = reduce(fc[0] - MultiPoly::constant(ring, 1), mgb).is_zero();
      for (std::size_t i = 1; i < fc.size() && w.unit_shape_mod_mprime; ++i) {
        w.unit_shape_mod_mprime = reduce(fc[i], mgb).is_zero();
      }
    }
    // The Sylvester determinant of the zero polynomial vanishes.
    if (!f.is_zero()) w.resultant = resultant(f, gm, var);
    w.resultant_free_of_var = !w.resultant.involves(var);
    w.resultant_in_ideal = member(w.resultant, ideal);
    w.resultant_mod_mprime = reduce(w.resultant, mgb);
    report.witnesses.push_back(std::move(w));
  }

  report.extension_proper = !(ideal + mprime).basis().is_unit();

  if (!member(gm, ideal)) violate("g is not in I");
  if (!is_proper(ideal)) violate("I is not proper");
  if (mgb.is_unit()) violate("M' is not proper");
  for (const ResultantWitness& w : report.witnesses) {
    if (w.resultant_in_ideal && w.resultant_free_of_var && !w.resultant_mod_mprime.is_zero()) {
      violate("M' does not contain I cut down to the first " + std::to_string(n - 1) +
              " variables: resultant " + w.resultant.to_string() + " of probe " + w.probe.to_string() +
              " lies in I but reduces to " + w.resultant_mod_mprime.to_string() + " modulo M'");
    }
  }
  if (n > 1) {
    const Ideal elim = elimination_ideal(ideal, n - 1);
    for (const MultiPoly& h : elim.generators()) {
      MultiPoly lifted = h.change_ring(ring);
      if (!reduce(lifted, mgb).is_zero()) {
        violate("M' does not contain I cut down to the first " + std::to_string(n - 1) +
                " variables: " + lifted.to_string() + " is missing");
      }
    }
  }
  if (!report.extension_proper) internal_error("hypotheses hold but <I, M'> is not proper");
  return report;
}

}  // namespace nullkit
