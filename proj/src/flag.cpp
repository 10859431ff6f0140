#include "splinter/flag.hpp"

#include <sstream>

namespace splinter::flag {

PicClass::PicClass(std::vector<int64_t> exponents) : c_(std::move(exponents)) {
  if (c_.size() < 2) fail(Errc::Validation, "flag Picard classes need n >= 2");
  int64_t shift = c_[0];
  for (auto& e : c_) e -= shift;
}

PicClass PicClass::tensor(const PicClass& o) const {
  if (c_.size() != o.c_.size()) fail(Errc::DimensionMismatch, "tensor of classes on different flag varieties");
  std::vector<int64_t> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] + o.c_[i];
  return PicClass(std::move(r));
}

PicClass PicClass::inverse() const {
  std::vector<int64_t> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
  return PicClass(std::move(r));
}

PicClass PicClass::tensor_power(int64_t k) const {
  std::vector<int64_t> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = k * c_[i];
  return PicClass(std::move(r));
}

std::string PicClass::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ",";
    os << c_[i];
  }
  os << ")";
  return os.str();
}

PositivityReport positivity(const PicClass& cls) {
  PositivityReport r;
  const auto& c = cls.exponents();
  bool all_pos = true, all_nonneg = true;
  for (size_t i = 0; i + 1 < c.size(); ++i) {
    int64_t deg = c[i + 1] - c[i];
    r.curve_degrees.push_back(deg);
    all_pos = all_pos && deg > 0;
    all_nonneg = all_nonneg && deg >= 0;
  }
  r.verdict = all_pos ? Positivity::Ample : (all_nonneg ? Positivity::NefNotAmple : Positivity::NotNef);
  return r;
}

const char* positivity_name(Positivity p) {
  switch (p) {
    case Positivity::Ample: return "ample";
    case Positivity::NefNotAmple: return "nef-not-ample";
    case Positivity::NotNef: return "not-nef";
  }
  return "?";
}

PicClass anticanonical(int n) {
  if (n < 2) fail(Errc::Validation, "flag varieties need n >= 2");
  std::vector<int64_t> c(n, 0);
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j <= i; ++j) c[j - 1] -= 1;  // det(V_i)^(-1)
    c[i] += i;                                   // L_(i+1)^i
  }
  return PicClass(std::move(c));
}

PicClass anticanonical_closed_form(int n) {
  if (n < 2) fail(Errc::Validation, "flag varieties need n >= 2");
  std::vector<int64_t> c(n);
  for (int i = 1; i <= n; ++i) c[i - 1] = 2 * i - n - 1;
  return PicClass(std::move(c));
}

PicClass anticanonical_collected_variant(int n) {
  if (n < 2) fail(Errc::Validation, "flag varieties need n >= 2");
  std::vector<int64_t> c(n);
  for (int i = 1; i <= n - 1; ++i) c[i - 1] = 2 * i - n;
  c[n - 1] = n - 1;
  return PicClass(std::move(c));
}

PicClass mj_class(int n, int j) {
  if (j < 1) fail(Errc::Validation, "twist index must be >= 1");
  std::vector<int64_t> tw(n, 0);
  tw[n - 1] = j - n;  // pullback of O(j) is L_n^j; the hyperplane-space dualizing class pulls back to L_n^(-n)
  return anticanonical(n).tensor(PicClass(std::move(tw)));
}

std::vector<KoszulTerm> koszul_terms(int d) {
  if (d < 2) fail(Errc::Validation, "point resolutions need d >= 2");
  std::vector<KoszulTerm> out;
  if (d == 2) return out;  // the projection is an isomorphism; only the endpoint remains
  // Binomials by the Pascal recurrence.
  std::vector<int64_t> row = {1};
  for (int i = 1; i <= d - 1; ++i) {
    std::vector<int64_t> next(i + 1, 1);
    for (int j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  for (int kk = 0; kk <= d - 2; ++kk) {
    KoszulTerm term{-(kk + 1), row[kk], mj_class(d, kk + 1).inverse()};
    out.push_back(std::move(term));
  }
  return out;
}

}  // namespace splinter::flag
