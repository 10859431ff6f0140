#include "splinter/linalg.hpp"

#include <algorithm>

namespace splinter::la {

Mat Mat::identity(const FieldCtx& k, size_t n) {
  Mat m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = k.one();
  return m;
}

Mat Mat::mul(const FieldCtx& k, const Mat& o) const {
  if (cols_ != o.rows_) fail(Errc::ShapeMismatch, "matrix product shape mismatch");
  Mat r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t t = 0; t < cols_; ++t) {
      const FieldElement& x = at(i, t);
      if (k.is_zero(x)) continue;
      for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) = k.add(r.at(i, j), k.mul(x, o.at(t, j)));
    }
  return r;
}

Vec Mat::apply(const FieldCtx& k, const Vec& v) const {
  if (v.size() != cols_) fail(Errc::ShapeMismatch, "matrix-vector shape mismatch");
  Vec r(rows_);
  for (size_t i = 0; i < rows_; ++i) {
    FieldElement acc{};
    for (size_t j = 0; j < cols_; ++j)
      if (!k.is_zero(at(i, j))) acc = k.add(acc, k.mul(at(i, j), v[j]));
    r[i] = acc;
  }
  return r;
}

Mat Mat::add(const FieldCtx& k, const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(Errc::ShapeMismatch, "matrix sum shape mismatch");
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = k.add(a_[i], o.a_[i]);
  return r;
}

bool Mat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const FieldElement& x) { return x == FieldElement{}; });
}

Vec vec_add(const FieldCtx& k, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(Errc::ShapeMismatch, "vector sum shape mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = k.add(a[i], b[i]);
  return r;
}

Vec vec_sub(const FieldCtx& k, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(Errc::ShapeMismatch, "vector difference shape mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = k.sub(a[i], b[i]);
  return r;
}

Vec vec_scale(const FieldCtx& k, const FieldElement& c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = k.mul(c, a[i]);
  return r;
}

bool vec_is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const FieldElement& x) { return x == FieldElement{}; });
}

Vec RowSpace::reduce(const Vec& v) const {
  if (v.size() != width_) fail(Errc::ShapeMismatch, "row width mismatch");
  Vec r = v;
  for (size_t i = 0; i < rows_.size(); ++i) {
    const FieldElement& c = r[pivots_[i]];
    if (k_->is_zero(c)) continue;
    r = vec_sub(*k_, r, vec_scale(*k_, c, rows_[i]));
  }
  return r;
}

bool RowSpace::insert(Vec v) {
  Vec r = reduce(v);
  size_t piv = width_;
  for (size_t j = 0; j < width_; ++j)
    if (!k_->is_zero(r[j])) {
      piv = j;
      break;
    }
  if (piv == width_) return false;
  r = vec_scale(*k_, k_->inv(r[piv]), r);
  // Back-substitute into existing rows.
  for (size_t i = 0; i < rows_.size(); ++i) {
    const FieldElement& c = rows_[i][piv];
    if (!k_->is_zero(c)) rows_[i] = vec_sub(*k_, rows_[i], vec_scale(*k_, c, r));
  }
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(r));
  pivots_.insert(pivots_.begin() + pos, piv);
  return true;
}

namespace {

// Gaussian elimination in place; returns pivot column of each eliminated row.
std::vector<size_t> eliminate(const FieldCtx& k, Mat& m) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t sel = row;
    while (sel < m.rows() && k.is_zero(m.at(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
    FieldElement inv = k.inv(m.at(row, col));
    for (size_t j = 0; j < m.cols(); ++j) m.at(row, j) = k.mul(inv, m.at(row, j));
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == row) continue;
      const FieldElement c = m.at(i, col);
      if (k.is_zero(c)) continue;
      for (size_t j = 0; j < m.cols(); ++j) m.at(i, j) = k.sub(m.at(i, j), k.mul(c, m.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

size_t rank(const FieldCtx& k, Mat m) { return eliminate(k, m).size(); }

std::vector<Vec> kernel_basis(const FieldCtx& k, const Mat& m) {
  Mat r = m;
  std::vector<size_t> pivots = eliminate(k, r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = k.one();
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = k.neg(r.at(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const FieldCtx& k, const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) fail(Errc::ShapeMismatch, "solve shape mismatch");
  Mat aug(m.rows(), m.cols() + 1);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  std::vector<size_t> pivots = eliminate(k, aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // inconsistent
  Vec x(m.cols());
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols());
  return x;
}

std::optional<Vec> coordinates_in_span(const FieldCtx& k, const std::vector<Vec>& span, const Vec& v) {
  Mat m(v.size(), span.size());
  for (size_t j = 0; j < span.size(); ++j) {
    if (span[j].size() != v.size()) fail(Errc::ShapeMismatch, "span width mismatch");
    for (size_t i = 0; i < v.size(); ++i) m.at(i, j) = span[j][i];
  }
  return solve(k, m, v);
}

}  // namespace splinter::la
