#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "splinter/error.hpp"

namespace splinter::flag {

/// Class in the Picard lattice of the complete flag variety of an
/// n-dimensional space: an integer exponent vector on the successive quotient
/// line bundles L_1..L_n, modulo the relation that L_1 * ... * L_n is trivial.
/// The normal form shifts the vector so that its first entry is zero.
class PicClass {
public:
  explicit PicClass(std::vector<int64_t> exponents);

  int n() const { return static_cast<int>(c_.size()); }
  const std::vector<int64_t>& exponents() const { return c_; }  // normalized

  PicClass tensor(const PicClass& o) const;
  PicClass inverse() const;
  PicClass tensor_power(int64_t k) const;

  friend bool operator==(const PicClass&, const PicClass&) = default;

  std::string to_string() const;

private:
  std::vector<int64_t> c_;
};

enum class Positivity { Ample, NefNotAmple, NotNef };

struct PositivityReport {
  Positivity verdict = Positivity::NotNef;
  // Pairings against the n-1 one-parameter Schubert curves; the curve varying
  // V_i pairs with L_j to -delta(j,i) + delta(j,i+1), so the degree of a class
  // is the consecutive difference of its exponents.
  std::vector<int64_t> curve_degrees;
};

PositivityReport positivity(const PicClass& cls);

const char* positivity_name(Positivity p);

/// Anticanonical class computed from the tangent-bundle filtration with pieces
/// Hom(V_i, L_(i+1)): the product over i of det(V_i)^(-1) (x) L_(i+1)^i.
PicClass anticanonical(int n);

/// Closed form of the same class: exponents 2i - n - 1.
PicClass anticanonical_closed_form(int n);

/// The alternate collected expression with exponents (2i - n for i < n, n - 1);
/// it differs from the filtration product by a non-principal vector and is
/// carried through audits as a flagged variant.
PicClass anticanonical_collected_variant(int n);

/// Inverse of the j-twisted relative dualizing class on the flag variety over
/// the space of hyperplanes: anticanonical(n) (x) L_n^(j - n).
PicClass mj_class(int n, int j);

struct KoszulTerm {
  int twist = 0;           // negative twist of the ambient line bundle
  int64_t multiplicity = 0;  // binomial coefficient
  PicClass flag_class;     // class of the relative-dualizing twist on the flag variety
};

/// Middle terms of the twisted point resolution on the space of hyperplanes of
/// a d-dimensional space, paired with their flag-variety classes.  Trivial for
/// d = 2, where the projection is an isomorphism and only the endpoint remains.
std::vector<KoszulTerm> koszul_terms(int d);

}  // namespace splinter::flag
