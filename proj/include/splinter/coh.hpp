#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "splinter/linalg.hpp"
#include "splinter/poly.hpp"

namespace splinter::coh {

using gf::FieldCtx;
using gf::FieldElement;
using poly::GradedPoly;
using poly::Monomial;

// Desk-scale caps; requests beyond them are rejected explicitly.
inline constexpr int kMaxAmbient = 4;     // projective-space groups
inline constexpr int kMaxHypAmbient = 3;  // hypersurface groups
inline constexpr int kMaxTwist = 64;
inline constexpr int kMaxHypDegree = 6;

/// Cohomology group of a line bundle on P^n or on a hypersurface X in P^n,
/// with an explicit basis.  Projective-space groups carry monomial bases;
/// hypersurface groups are presented as the kernel or cokernel of
/// multiplication by the defining form between two ambient groups.
struct CohGroup {
  enum class Kind { Zero, MonomialBasis, Kernel, Cokernel };

  int n = 0;                        // ambient P^n
  std::optional<GradedPoly> hyp;    // defining form, for hypersurface groups
  int index = 0;                    // cohomological index
  int twist = 0;

  Kind kind = Kind::Zero;
  std::vector<Monomial> basis;      // MonomialBasis case

  // Kernel / Cokernel presentation: the map is multiplication by hyp from the
  // span of source_basis to the span of target_basis.
  std::vector<Monomial> source_basis;
  std::vector<Monomial> target_basis;
  la::Mat map;                      // |target| x |source|
  std::vector<la::Vec> kernel;      // coordinates over source_basis
  std::vector<size_t> coker_reps;   // indices into target_basis representing the quotient
  la::Mat coker_proj;               // |coker_reps| x |target|: projection onto the representatives

  size_t dim() const;
  std::vector<std::string> basis_labels() const;
};

/// A class in a CohGroup, as coordinates over its basis.
struct CohClass {
  const CohGroup* group = nullptr;
  la::Vec coords;
};

/// H^i(P^n, O(t)) with its monomial basis.  Nonzero only for i = 0 (t >= 0)
/// and i = n (t <= -n-1).
CohGroup pn_coh(int n, int i, int t);

/// Dimension by the binomial count, without enumeration.  Test oracle.
int64_t pn_coh_dim_formula(int n, int i, int t);

/// H^i(X, O_X(t)) for X = V(h) in P^n via the restriction sequence
/// 0 -> O(t - d) -> O(t) -> O_X(t) -> 0.
CohGroup hyp_coh(const FieldCtx& k, int n, const GradedPoly& h, int i, int t);

/// Matrix of the e_pow-fold Frobenius pullback
/// H^i(X, O_X(t)) -> H^i(X, O_X(p^e_pow * t)) on the chosen presentations:
/// representatives are raised to the q-th power and multiplied by h^(q-1).
la::Mat hyp_frobenius(const FieldCtx& k, int n, const GradedPoly& h, int i, int t, int e_pow);

/// Multiplication by a homogeneous form H^i(X, O_X(t)) -> H^i(X, O_X(t + deg g)).
la::Mat hyp_mult(const FieldCtx& k, int n, const GradedPoly& h, int i, int t, const GradedPoly& g);

/// Pullback matrix H^1(P^1, O(t)) -> H^1(P^1, O(m t)) along the finite map
/// given by two degree-m binary forms with no common root, in the standard
/// monomial bases.  Throws DegenerateMap when the forms share a root.
la::Mat p1_pullback(const FieldCtx& k, const GradedPoly& f0, const GradedPoly& f1, int t);

/// Nullstellensatz-style smoothness certificate for a plane projective curve:
/// the partials and the form must generate a power of the irrelevant ideal.
bool plane_curve_is_smooth(const FieldCtx& k, const GradedPoly& h);

/// Graded pieces of the local cohomology of a cone, with multiplication and
/// Frobenius actions on explicit bases.  Two flavours: the cone over a smooth
/// plane curve V(h) (pieces H^1(X, O_X(t))), and the punctured plane (pieces
/// H^1(P^1, O(t))).
class LocalCohTable {
public:
  static LocalCohTable plane_curve_cone(const FieldCtx& k, const GradedPoly& h, int t_min, int t_max);
  static LocalCohTable punctured_plane(const FieldCtx& k, int t_min, int t_max);

  const FieldCtx& field() const { return *k_; }
  int t_min() const { return t_min_; }
  int t_max() const { return t_max_; }
  int num_generators() const { return nvars_; }
  bool in_window(int t) const { return t >= t_min_ && t <= t_max_; }

  const CohGroup& piece(int t) const;
  size_t piece_dim(int t) const { return piece(t).dim(); }
  // Dimension of the piece at any degree, computed on demand outside the window.
  size_t piece_dim_anywhere(int t) const;

  // Multiplication by the degree-1 ring generator `var`: piece(t) -> piece(t+1).
  const la::Mat& mult(int t, int var) const;
  // Frobenius piece(t) -> piece(p t); only stored when p t lies in the window.
  const la::Mat* frob(int t) const;

  // Same maps with target outside the window, computed on demand.
  la::Mat mult_anywhere(int t, int var) const;
  la::Mat frob_anywhere(int t) const;

  // Whether the image of a class under one generator or under Frobenius
  // vanishes, decided on representatives without building the target group.
  bool mult_image_vanishes(int t, int var, const la::Vec& v) const;
  bool frob_image_vanishes(int t, const la::Vec& v) const;

private:
  LocalCohTable() = default;
  CohGroup compute_piece(int t) const;

  const FieldCtx* k_ = nullptr;
  std::optional<GradedPoly> h_;
  int nvars_ = 0;
  int t_min_ = 0, t_max_ = 0;
  std::map<int, CohGroup> pieces_;
  std::map<int, std::vector<la::Mat>> mult_;
  std::map<int, la::Mat> frob_;
};

}  // namespace splinter::coh
