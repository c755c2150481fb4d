#pragma once

// Maximal ideals over GF(p) containing a proper ideal, the field test for
// zero-dimensional quotients, inverses in the quotient, radical membership
// and the conjugate points of a maximal ideal.

#include <cstdint>
#include <optional>
#include <vector>

#include "nullkit/groebner.hpp"
#include "nullkit/noether.hpp"

namespace nullkit {

// m_1(x_1), ..., m_n(x_1..x_n) over GF(p), each monic in its top variable.
// Written in the coordinates of the tower generators: x_k stands for t_k.
struct TriangularChain {
  std::uint64_t p = 0;
  RingPtr ring;
  std::vector<MultiPoly> polys;
};

struct AutomorphismRecord {
  std::size_t level = 0;  // number of variables of the ring it acted on
  MonicizingMap map;
};

struct VerificationReport {
  bool contains_input = false;
  bool proper = false;
  QuotientDimension dimension;
  bool is_field = false;

  bool ok(std::size_t expected) const { return contains_input && proper && dimension == expected && is_field; }
};

struct MaximalIdealResult {
  TriangularChain chain;
  std::vector<AutomorphismRecord> automorphisms;
  // Reduced lex basis of the maximal ideal in the input's coordinates.
  std::vector<MultiPoly> generators;
  std::size_t residue_degree = 0;
  // The tower built from the chain, and the images of x_1..x_n in it
  // (the evaluation map whose kernel is the maximal ideal).
  FieldPtr residue_field;
  std::vector<Scalar> point;
  VerificationReport verification;

  Ideal ideal() const;
};

struct MaxIdealOptions {
  std::uint64_t seed = 0;
  std::size_t max_degree = 256;
};

MaximalIdealResult maximal_ideal_containing(const Ideal& ideal, const MaxIdealOptions& options = {});

// Requires a proper ideal.
QuotientDimension quotient_dimension(const Ideal& ideal);

class ZeroDivisorError : public Error {
 public:
  ZeroDivisorError(const std::string& what, std::vector<Scalar> dependency, MultiPoly cofactor)
      : Error(ErrorKind::ZeroDivisor, what), dependency_(std::move(dependency)), cofactor_(std::move(cofactor)) {}

  // lambda_1, ..., lambda_d with lambda_1 f + ... + lambda_d f^d in I.
  const std::vector<Scalar>& dependency() const { return dependency_; }
  // Nonzero modulo I, and f * cofactor lies in I.
  const MultiPoly& cofactor() const { return cofactor_; }

 private:
  std::vector<Scalar> dependency_;
  MultiPoly cofactor_;
};

MultiPoly quotient_inverse(const MultiPoly& f, const Ideal& ideal);

enum class FieldTestReason { None, NonReduced, Disconnected };

struct FieldTestReport {
  std::size_t dimension = 0;
  std::size_t trace_form_rank = 0;
  std::size_t frobenius_fixed_dimension = 0;
  FieldTestReason reason = FieldTestReason::None;
  bool is_field() const { return reason == FieldTestReason::None; }
};

const char* to_string(FieldTestReason r);

// Requires a proper zero-dimensional ideal over a prime field.
FieldTestReport field_test(const Ideal& ideal);
bool is_field(const Ideal& ideal);
bool is_maximal(const Ideal& ideal);

bool radical_member(const MultiPoly& f, const Ideal& ideal);

struct PointSet {
  std::size_t k = 0;
  FieldPtr field;  // GF(p^k) as built by extension_field
  std::vector<std::vector<Scalar>> points;
  std::vector<std::vector<std::size_t>> orbits;
};

struct PointBudget {
  std::size_t max_degree = 12;
  std::uint64_t max_field_size = 1u << 20;
};

PointSet points_of_maximal_ideal(const MaximalIdealResult& m, std::uint64_t seed = 0, const PointBudget& budget = {});

// Lexicographic point order under canonical_less.
bool point_less(const std::vector<Scalar>& a, const std::vector<Scalar>& b);
// Partition of a point set (sorted by point_less) into Frobenius orbits.
std::vector<std::vector<std::size_t>> frobenius_orbits(const std::vector<std::vector<Scalar>>& sorted_points);

}  // namespace nullkit
