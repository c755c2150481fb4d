#include "nullkit/noether.hpp"

#include <algorithm>
#include <limits>

namespace nullkit {

MonicizingMap build_monicizer(const MultiPoly& f) {
  const std::size_t n = f.ring()->nvars();
  if (n < 2) fail(ErrorKind::UnivariateRing, "monicizing needs at least two variables");
  if (f.is_constant()) fail(ErrorKind::ConstantPolynomial, "cannot monicize a constant");
  MonicizingMap map;
  map.base = f.max_exponent() + 1;
  map.nvars = n;
  map.shifts.resize(n - 1);
  std::uint64_t power = 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    power *= map.base;
    if (power > std::numeric_limits<std::uint32_t>::max()) {
      fail(ErrorKind::BudgetExceeded, "monicizing exponent overflows");
    }
    map.shifts[i] = static_cast<std::uint32_t>(power);
  }
  return map;
}

namespace {

std::vector<MultiPoly> images(const MonicizingMap& map, const RingPtr& ring, bool inverse) {
  if (ring->nvars() != map.nvars) fail(ErrorKind::ArityMismatch, "map built for another variable count");
  const std::size_t last = map.nvars - 1;
  std::vector<MultiPoly> out;
  out.reserve(map.nvars);
  for (std::size_t i = 0; i < map.nvars; ++i) {
    MultiPoly x = MultiPoly::variable(ring, i);
    if (i < last) {
      Exponents e(map.nvars, 0);
      e[last] = map.shifts[i];
      Scalar c = inverse ? -ring->field()->one() : ring->field()->one();
      x += MultiPoly::monomial(ring, std::move(e), c);
    }
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace

std::vector<MultiPoly> forward_images(const MonicizingMap& map, const RingPtr& ring) {
  return images(map, ring, false);
}

std::vector<MultiPoly> inverse_images(const MonicizingMap& map, const RingPtr& ring) {
  return images(map, ring, true);
}

MultiPoly transform(const MonicizingMap& map, const MultiPoly& f) {
  return f.substitute(forward_images(map, f.ring()));
}

MultiPoly apply_monicizer(const MonicizingMap& map, const MultiPoly& f) {
  if (f.max_exponent() >= map.base) {
    fail(ErrorKind::BaseTooSmall, "exponent " + std::to_string(f.max_exponent()) + " reaches base " +
                                      std::to_string(map.base));
  }
  return transform(map, f);
}

MultiPoly apply_inverse(const MonicizingMap& map, const MultiPoly& f) {
  return f.substitute(inverse_images(map, f.ring()));
}

std::uint64_t base_m_value(const Exponents& e, std::uint32_t m) {
  std::uint64_t v = 0;
  for (std::uint32_t x : e) v = v * m + x;
  return v;
}

std::uint64_t predicted_degree(const MonicizingMap& map, const MultiPoly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "degree of zero");
  std::uint64_t best = 0;
  for (const Term& t : f.terms()) best = std::max(best, base_m_value(t.exps, map.base));
  return best;
}

}  // namespace nullkit
