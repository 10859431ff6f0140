#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "splinter/coh.hpp"
#include "splinter/gf.hpp"
#include "splinter/poly.hpp"

namespace splinter::covers {

using coh::CohGroup;
using gf::FieldCtx;
using gf::FieldElement;
using gf::PPolynomial;
using poly::GradedPoly;
using poly::Monomial;

/// Homogeneous fraction: a normal-formed numerator over a monomial
/// denominator.  The coordinate rings in play are domains, so zero tests and
/// equality are exact via cross-multiplication; fractions are never cancelled.
class Fraction {
public:
  Fraction() = default;
  Fraction(GradedPoly num, Monomial den);

  const GradedPoly& num() const { return num_; }
  const Monomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  std::string to_string(const poly::Grading& g) const;

private:
  GradedPoly num_;
  Monomial den_;
};

/// Two-chart Cech setup for the supported geometries: a smooth plane curve
/// with two coordinate charts covering it, or the punctured affine plane with
/// its two coordinate charts.  Cochains in twist t are homogeneous degree-t
/// fractions on the charts and their overlap.
class CechSetup {
public:
  static CechSetup plane_curve(const FieldCtx& k, const GradedPoly& h, int denom_bound = 10);
  static CechSetup punctured_plane(const FieldCtx& k, int denom_bound = 10);

  const FieldCtx& field() const { return *k_; }
  const std::optional<GradedPoly>& hypersurface() const { return h_; }
  int nvars() const { return nvars_; }
  int distinguished_var() const { return dist_var_; }
  std::array<int, 2> charts() const { return charts_; }
  int denom_bound() const { return denom_bound_; }
  const poly::Grading& grading() const { return grading_; }

  GradedPoly reduce(const GradedPoly& f) const;
  bool poly_is_zero(const GradedPoly& f) const { return reduce(f).is_zero(); }

  Fraction make_fraction(const GradedPoly& num, const Monomial& den) const;
  Fraction zero_fraction() const;
  Fraction add(const Fraction& a, const Fraction& b) const;
  Fraction sub(const Fraction& a, const Fraction& b) const;
  Fraction mul(const Fraction& a, const Fraction& b) const;
  Fraction scale(const FieldElement& c, const Fraction& a) const;
  // q-th power for q a power of the characteristic.
  Fraction pow_char(const Fraction& a, uint32_t q) const;
  bool equal(const Fraction& a, const Fraction& b) const { return sub(a, b).is_zero(); }

  // g applied to a fraction, with the zero-height term acting as a scalar.
  Fraction eval_additive(const PPolynomial& g, const Fraction& a) const;

private:
  const FieldCtx* k_ = nullptr;
  std::optional<GradedPoly> h_;
  int nvars_ = 0;
  int dist_var_ = -1;
  std::array<int, 2> charts_{};
  int denom_bound_ = 10;
  poly::Grading grading_;
};

/// One-cochain on a two-chart cover: a fraction on the overlap.  Every
/// one-cochain on two charts is a cocycle.
struct Cochain1 {
  Fraction overlap;
};

/// Zero-cochain: one fraction per chart.
struct Cochain0 {
  std::array<Fraction, 2> on_chart;
};

/// Transport of an explicit cohomology class to a Cech representative on the
/// setup's charts.  For hypersurface classes this inverts the connecting map
/// of the restriction sequence by routing each term of h * (representative)
/// to a chart pair; for the punctured plane the representative is the Laurent
/// expression itself.
Cochain1 cocycle_lift(const CechSetup& setup, const CohGroup& group, const la::Vec& cls);

/// Solves d(b) = w with chart denominators bounded by the setup, trying the
/// smallest bound first.  Returns the canonical least solution, or nothing if
/// the bound is exhausted.
std::optional<Cochain0> solve_coboundary(const CechSetup& setup, const Fraction& w);

/// Root-adjunction tower: over chart j the ring gains T_j with
/// g(T_j) = n_j, and the corrected cochain m - d(T) satisfies g = 0
/// identically in the presented overlap ring.
class CoverTower {
public:
  CoverTower(const CechSetup& setup, Cochain1 m, PPolynomial g, Cochain0 n, bool trivial);

  const CechSetup& setup() const { return *setup_; }
  const PPolynomial& adjoined_poly() const { return g_; }
  const Cochain1& lifted_cocycle() const { return m_; }
  const Cochain0& bounding_cochain() const { return n_; }
  bool trivial() const { return trivial_; }
  bool corrected_cochain_annihilated() const { return corrected_ok_; }
  void set_corrected_ok(bool v) { corrected_ok_ = v; }

  std::string presentation() const;

private:
  const CechSetup* setup_;
  Cochain1 m_;
  PPolynomial g_;
  Cochain0 n_;
  bool trivial_;
  bool corrected_ok_ = false;
};

/// Builds the tower after verifying the exact identity g(m) = d(n);
/// throws IdentityFailure otherwise.  The corrected-cochain identity
/// g(m - d(T)) = 0 is computed in the tower ring and recorded.
CoverTower build_cover_tower(const CechSetup& setup, const Cochain1& m, const PPolynomial& g,
                             const Cochain0& n);

struct CoboundaryWitness {
  // b_j = T_j on chart j, glued along the component where the corrected
  // cochain takes the root value zero: T_(charts[1]) = T_(charts[0]) + m.
  std::string description;
  bool identity_verified = false;   // d(b) equals the pulled-back cocycle
  bool component_consistent = false;  // the gluing respects both adjoined relations
  std::string root_field;           // extension containing the roots of g
  std::vector<std::string> roots;   // the finitely many roots of g found there
};

struct NotFoundWithinBound {
  std::string reason;
};

std::variant<CoboundaryWitness, NotFoundWithinBound> verify_class_killed(const CoverTower& tower);

}  // namespace splinter::covers
