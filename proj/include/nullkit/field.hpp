#pragma once

// Exact coefficient domains: the rationals, prime fields GF(p) and
// triangular towers GF(p)[t1,...,tr]/(m1,...,mr).

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "nullkit/error.hpp"

namespace nullkit {

enum class FieldKind { Rational, Prime, Tower };

class Field;
class Scalar;
using FieldPtr = std::shared_ptr<const Field>;

inline constexpr std::size_t kDefaultMaxTowerDegree = 64;

// One level of a tower: t_k is a root of a monic polynomial of degree
// `degree` with coefficients in the tower below (dimension `below`).
struct TowerLevel {
  std::size_t degree = 0;
  std::size_t below = 1;
  // degree + 1 blocks of `below` residues each, lowest power first; the
  // last block is the constant 1.
  std::vector<std::uint64_t> minpoly;
};

bool is_prime(std::uint64_t n);

class Field : public std::enable_shared_from_this<Field> {
 public:
  static FieldPtr rationals();
  static FieldPtr prime(std::uint64_t p);

  // Adjoins a root of `minpoly` (coefficients lowest power first, each in
  // this field). The polynomial must be monic of degree >= 1. Irreducibility
  // is the caller's responsibility; see unifactor for a checked variant.
  FieldPtr extend(std::span<const Scalar> minpoly,
                  std::size_t max_degree = kDefaultMaxTowerDegree) const;

  FieldKind kind() const { return kind_; }
  bool is_finite() const { return kind_ != FieldKind::Rational; }
  // 0 for the rationals.
  std::uint64_t characteristic() const { return p_; }
  // Dimension over the prime field; 1 for QQ and GF(p).
  std::size_t degree() const { return degree_; }
  std::size_t level_count() const { return levels_.size(); }
  const TowerLevel& level(std::size_t i) const { return levels_.at(i); }
  // Number of elements, p^degree. Undefined for QQ.
  mpz_class order() const;

  // The tower truncated to its first `levels` levels; 0 gives GF(p).
  FieldPtr subtower(std::size_t levels) const;
  FieldPtr prime_field() const { return subtower(0); }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;
  Scalar from_mpz(const mpz_class& v) const;
  Scalar from_rational(const mpq_class& v) const;
  // Tower element from its coordinate vector (mixed radix, t1 fastest).
  Scalar from_coords(std::vector<std::uint64_t> coords) const;
  // The generator t_{level+1} of the tower (0-based level).
  Scalar generator(std::size_t level) const;
  // Image of an element of a subtower (or of the prime field) in this field.
  Scalar embed(const Scalar& x) const;
  // True if elements of `sub` embed into this field via embed().
  bool contains(const Field& sub) const;

  // "QQ", "GF(5)", or "GF(2)[t1]/(t1^2 + t1 + 1)".
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b);

  // Coordinate-level arithmetic for towers; used by Scalar.
  void tower_mul(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                 std::span<std::uint64_t> out) const;
  std::vector<std::uint64_t> tower_inv(std::span<const std::uint64_t> a) const;

 private:
  Field() = default;

  FieldKind kind_ = FieldKind::Rational;
  std::uint64_t p_ = 0;
  std::size_t degree_ = 1;
  std::vector<TowerLevel> levels_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

// An exact element of some Field. Values are immutable and always canonical,
// so equality is structural.
class Scalar {
 public:
  using Coords = std::vector<std::uint64_t>;
  using Value = std::variant<std::uint64_t, mpq_class, Coords>;

  Scalar(FieldPtr field, Value value);

  const FieldPtr& field() const { return field_; }
  const Value& value() const { return value_; }

  bool is_zero() const;
  bool is_one() const;

  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  const Coords& coords() const { return std::get<Coords>(value_); }

  Scalar inv() const;
  Scalar pow(const mpz_class& e) const;
  Scalar pow(std::uint64_t e) const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  // Text form. Tower elements use generator names `gen_prefix`1, 2, ... and
  // are parenthesized when they have more than one term and `paren` is set.
  std::string to_string(const std::string& gen_prefix = "t", bool paren = false) const;

 private:
  FieldPtr field_;
  Value value_;
};

// Total order used for canonical choices: residues numerically, tower
// coordinates compared from the highest coordinate down, rationals by value.
bool canonical_less(const Scalar& a, const Scalar& b);

// a^p where p is the characteristic of a's field.
Scalar frobenius(const Scalar& a);

}  // namespace nullkit
