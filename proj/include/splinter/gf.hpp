#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "splinter/error.hpp"

namespace splinter::gf {

// Maximal extension degree: fields are capped at p^e <= 2^16, so e <= 16.
inline constexpr int kMaxExtDegree = 16;

/// One element of F_{p^e}, stored as the coordinate vector of its reduced
/// polynomial representative.  Slots at index >= e are kept zero so that
/// comparison and ordering work memberwise.
struct FieldElement {
  std::array<uint16_t, kMaxExtDegree> c{};

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// Arithmetic context for F_{p^e}.  For e > 1 the caller supplies a monic
/// irreducible modulus; irreducibility is verified at construction by an
/// exhaustive divisor search.  Fields larger than 2^16 elements are rejected.
class FieldCtx {
public:
  // Prime field F_p.
  explicit FieldCtx(uint32_t p);
  // Extension field F_{p^e}; modulus lists the coefficients of a monic
  // degree-e polynomial over F_p, constant term first, leading 1 included.
  FieldCtx(uint32_t p, const std::vector<uint16_t>& modulus);

  uint32_t p() const { return p_; }
  int ext_degree() const { return e_; }
  uint32_t order() const { return order_; }
  const std::vector<uint16_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return FieldElement{}; }
  FieldElement one() const;
  FieldElement gen() const;  // class of T; equals one() when e = 1
  FieldElement from_int(int64_t v) const;
  FieldElement from_coords(const std::vector<uint16_t>& coords) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement inv(const FieldElement& a) const;
  FieldElement div(const FieldElement& a, const FieldElement& b) const;
  FieldElement pow(const FieldElement& a, uint64_t n) const;
  // x^(p^e_pow)
  FieldElement frobenius(const FieldElement& a, int e_pow) const;

  bool is_zero(const FieldElement& a) const { return a == FieldElement{}; }
  bool is_one(const FieldElement& a) const { return a == one(); }

  // All field elements in a fixed deterministic order (constant term fastest).
  std::vector<FieldElement> elements() const;

  std::string to_string(const FieldElement& a) const;

  bool same_field(const FieldCtx& other) const {
    return p_ == other.p_ && modulus_ == other.modulus_;
  }

private:
  uint32_t p_ = 0;
  int e_ = 1;
  uint32_t order_ = 0;
  std::vector<uint16_t> modulus_;  // empty when e = 1
};

/// Monic additive polynomial g(X) = X^(p^height) + sum_i lower[i] * X^(p^i).
/// The i = 0 term acts as plain scalar multiplication, so X^p - X is
/// expressible as height 1 with lower = {-1}.
struct PPolynomial {
  int height = 1;
  std::vector<FieldElement> lower;  // size == height
};

PPolynomial ppoly_x_to_p(const FieldCtx& ctx);  // g(X) = X^p
FieldElement ppoly_eval_scalar(const FieldCtx& ctx, const PPolynomial& g, const FieldElement& x);
std::string ppoly_to_string(const FieldCtx& ctx, const PPolynomial& g);

/// F_{p^e} with the first monic irreducible modulus in enumeration order
/// (constant term fastest).  Deterministic; e = 1 gives the prime field.
FieldCtx extension_of_degree(uint32_t p, int e);

/// Dense univariate polynomial over a FieldCtx, constant term first.
/// Used for divisor searches, gcds of binary forms and root finding.
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(std::vector<FieldElement> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly zero() { return UPoly(); }
  static UPoly constant(const FieldElement& a);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const FieldElement& coeff(size_t i) const;
  const std::vector<FieldElement>& coeffs() const { return c_; }

  UPoly add(const FieldCtx& k, const UPoly& o) const;
  UPoly sub(const FieldCtx& k, const UPoly& o) const;
  UPoly mul(const FieldCtx& k, const UPoly& o) const;
  // Division with remainder by a polynomial with invertible leading coefficient.
  std::pair<UPoly, UPoly> divmod(const FieldCtx& k, const UPoly& d) const;
  UPoly monic(const FieldCtx& k) const;
  FieldElement eval(const FieldCtx& k, const FieldElement& x) const;

  static UPoly gcd(const FieldCtx& k, UPoly a, UPoly b);

private:
  void trim();
  std::vector<FieldElement> c_;
};

}  // namespace splinter::gf
