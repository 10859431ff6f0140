#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "splinter/coh.hpp"
#include "splinter/gf.hpp"
#include "splinter/linalg.hpp"

namespace splinter::frob {

using coh::LocalCohTable;
using gf::FieldCtx;
using gf::FieldElement;
using gf::PPolynomial;

/// p-semilinear operator v -> M v^[p] on a finite-dimensional space, where
/// v^[p] is the entrywise p-th power of the coordinates.
class SemilinearOp {
public:
  SemilinearOp(const FieldCtx& k, la::Mat m) : k_(&k), m_(std::move(m)) {
    if (m_.rows() != m_.cols()) fail(Errc::ShapeMismatch, "semilinear operator matrix must be square");
  }

  const FieldCtx& field() const { return *k_; }
  size_t dim() const { return m_.rows(); }
  const la::Mat& matrix() const { return m_; }

  la::Vec apply(const la::Vec& v) const;

private:
  const FieldCtx* k_;
  la::Mat m_;
};

/// Basis of span{v, F v, F^2 v, ...}; the span is F-stable.
std::vector<la::Vec> orbit_span(const SemilinearOp& F, const la::Vec& v);

/// Minimal monic additive polynomial g with g(F) v = 0, found at the first
/// linear dependence among the iterates of v.
PPolynomial min_p_poly(const SemilinearOp& F, const la::Vec& v);

/// True iff no nonzero vector spans a proper F-stable subspace; checked by
/// exhausting all nonzero vectors.  The default budget matches p^(e*dim) <= 2^20.
bool brute_force_f_simple(const SemilinearOp& F, uint64_t budget = uint64_t(1) << 20);

using GradedRFModule = LocalCohTable;

struct Certificate {
  enum class Verdict { Certified, NotSimple, Inconclusive };
  Verdict verdict = Verdict::Inconclusive;
  std::string method;  // "exhaustive", "uniform", "vacuous", "window"
  std::string detail;
  // NotSimple only: a homogeneous witness whose window closure is a proper
  // stable submodule once extended by zero.
  int witness_degree = 0;
  la::Vec witness;
  std::map<int, size_t> closure_dims;  // per-degree dims of the witness closure
};

inline constexpr uint64_t kDefaultVectorBudget = uint64_t(1) << 16;

/// Window-relative simplicity certificates, one per window degree.  Certified
/// never claims global simplicity; it reports that no sealed proper stable
/// family arises from any homogeneous class of that degree.
std::map<int, Certificate> graded_simplicity_report(const GradedRFModule& mod,
                                                    uint64_t vector_budget = kDefaultVectorBudget);

struct NoneWithinBound {
  int iterations_checked = 0;
};

/// Monic additive annihilator search for a homogeneous class, using Frobenius
/// iterates up to e_max.  In nonzero degrees the iterates live in distinct
/// degrees, so the only possible annihilators are X^(p^e) with F^e(class) = 0.
std::variant<PPolynomial, NoneWithinBound> graded_min_p_poly(const GradedRFModule& mod, int t,
                                                             const la::Vec& cls, int e_max);

}  // namespace splinter::frob
