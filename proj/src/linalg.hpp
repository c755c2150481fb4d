#pragma once

// Dense exact linear algebra over a Field, internal to the library.

#include <optional>
#include <vector>

#include "nullkit/field.hpp"

namespace nullkit::detail {

using Vec = std::vector<Scalar>;

// Row-echelon span of the vectors inserted so far, remembering how each
// echelon row combines the original inputs.
class EchelonBasis {
 public:
  EchelonBasis(FieldPtr field, std::size_t dim) : field_(std::move(field)), dim_(dim) {}

  std::size_t size() const { return rows_.size(); }

  // If v lies in the span, returns c with v = sum c[i] * input_i and leaves
  // the basis unchanged. Otherwise inserts v and returns nullopt.
  std::optional<Vec> insert_or_express(const Vec& v) {
    Vec w = v;
    Vec combo(rows_.size() + 1, field_->zero());
    for (const Row& r : rows_) {
      if (w[r.pivot].is_zero()) continue;
      const Scalar a = w[r.pivot];
      for (std::size_t j = r.pivot; j < dim_; ++j) {
        if (!r.v[j].is_zero()) w[j] -= a * r.v[j];
      }
      for (std::size_t i = 0; i < r.combo.size(); ++i) {
        if (!r.combo[i].is_zero()) combo[i] -= a * r.combo[i];
      }
    }
    std::size_t pivot = 0;
    while (pivot < dim_ && w[pivot].is_zero()) ++pivot;
    if (pivot == dim_) {
      // 0 = v + sum combo[i] * input_i
      combo.pop_back();
      for (Scalar& c : combo) c = -c;
      return combo;
    }
    combo.back() = field_->one();
    const Scalar inv = w[pivot].inv();
    for (Scalar& x : w) x *= inv;
    for (Scalar& x : combo) x *= inv;
    rows_.push_back(Row{pivot, std::move(w), std::move(combo)});
    return std::nullopt;
  }

 private:
  struct Row {
    std::size_t pivot;
    Vec v;
    Vec combo;
  };

  FieldPtr field_;
  std::size_t dim_;
  std::vector<Row> rows_;
};

inline std::size_t rank(const FieldPtr& field, const std::vector<Vec>& rows, std::size_t dim) {
  EchelonBasis b(field, dim);
  for (const Vec& r : rows) b.insert_or_express(r);
  return b.size();
}

}  // namespace nullkit::detail
