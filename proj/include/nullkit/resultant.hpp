#pragma once

// Sylvester matrices, fraction-free determinants over polynomial rings, and
// the two facts about the resultant that make an ideal extension proper.

#include <optional>
#include <string>
#include <vector>

#include "nullkit/groebner.hpp"
#include "nullkit/poly.hpp"

namespace nullkit {

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

struct SylvesterMatrix {
  // (d+e) x (d+e): e shifted rows of [f_0..f_d], then d shifted rows of
  // [g_0..g_{e-1}, 1]. Coefficients grow to the right.
  PolyMatrix entries;
  std::size_t d = 0;  // degree of f in var
  std::size_t e = 0;  // degree of g in var
};

// g must be monic in var (top coefficient exactly 1) of degree >= 1.
SylvesterMatrix sylvester(const MultiPoly& f, const MultiPoly& g, std::size_t var);

// Bareiss elimination with exact polynomial division; row swaps flip sign.
MultiPoly det_fraction_free(const PolyMatrix& m);

// det(sylvester(f, g, var)); free of var and a member of <f, g>.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::size_t var);

// One probe f run through the argument: its resultant R with g, whether R
// lies in I (hence in I cut down to the subring), and R's normal form
// modulo M'.
struct ResultantWitness {
  MultiPoly probe;
  bool probe_in_ideal = false;
  // f_0 = 1 and f_i = 0 for i >= 1, all modulo M'.
  bool unit_shape_mod_mprime = false;
  MultiPoly resultant;
  bool resultant_free_of_var = false;
  bool resultant_in_ideal = false;
  MultiPoly resultant_mod_mprime;
};

struct ExtensionReport {
  std::vector<ResultantWitness> witnesses;
  // Proper: I + M' does not contain 1.
  bool extension_proper = false;
  std::optional<std::string> violation;
};

class HypothesisViolation : public Error {
 public:
  HypothesisViolation(const std::string& what, ExtensionReport report)
      : Error(ErrorKind::HypothesisViolation, what), report_(std::move(report)) {}
  const ExtensionReport& report() const { return report_; }

 private:
  ExtensionReport report_;
};

// Checks that <I, M'> is proper when I is proper and contains g monic in the
// last variable `var`, and M' is a proper ideal of the same ring, free of var,
// containing I cut down to the first n-1 variables. Each probe is pushed
// through the resultant argument and recorded. A failed hypothesis (including
// a resultant witness in I but not in M') raises HypothesisViolation with the
// partial report attached.
ExtensionReport lemma2_certificate(const Ideal& ideal, const MultiPoly& g, const Ideal& mprime, std::size_t var,
                                   const std::vector<MultiPoly>& probes = {});

}  // namespace nullkit
