#pragma once

#include <optional>
#include <vector>

#include "splinter/gf.hpp"

namespace splinter::la {

using gf::FieldCtx;
using gf::FieldElement;

using Vec = std::vector<FieldElement>;

/// Dense row-major matrix over a fixed field context.
class Mat {
public:
  Mat() = default;
  Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Mat identity(const FieldCtx& k, size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  FieldElement& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const FieldElement& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

  Mat mul(const FieldCtx& k, const Mat& o) const;
  Vec apply(const FieldCtx& k, const Vec& v) const;
  Mat add(const FieldCtx& k, const Mat& o) const;
  bool is_zero() const;

  friend bool operator==(const Mat&, const Mat&) = default;

private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<FieldElement> a_;
};

Vec vec_add(const FieldCtx& k, const Vec& a, const Vec& b);
Vec vec_sub(const FieldCtx& k, const Vec& a, const Vec& b);
Vec vec_scale(const FieldCtx& k, const FieldElement& c, const Vec& a);
bool vec_is_zero(const Vec& v);

/// Row space of a set of vectors, kept in reduced row echelon form.
/// Supports span membership, coordinates and incremental growth.
class RowSpace {
public:
  RowSpace(const FieldCtx& k, size_t width) : k_(&k), width_(width) {}

  size_t dim() const { return rows_.size(); }
  size_t width() const { return width_; }
  const std::vector<Vec>& rows() const { return rows_; }

  // Reduces v against the space; returns the residue.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }
  // Adds v to the space if independent; returns true when the space grew.
  bool insert(Vec v);

private:
  const FieldCtx* k_;
  size_t width_;
  std::vector<Vec> rows_;      // reduced, pivot columns strictly increasing
  std::vector<size_t> pivots_;
};

size_t rank(const FieldCtx& k, Mat m);

/// Basis of the right kernel {v : M v = 0}, columns as vectors.
std::vector<Vec> kernel_basis(const FieldCtx& k, const Mat& m);

/// One solution x of M x = b, if any.
std::optional<Vec> solve(const FieldCtx& k, const Mat& m, const Vec& b);

/// Coordinates of v in the span of the given vectors, if v lies in it.
std::optional<Vec> coordinates_in_span(const FieldCtx& k, const std::vector<Vec>& span, const Vec& v);

}  // namespace splinter::la
