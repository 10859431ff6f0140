#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "splinter/gf.hpp"
#include "splinter/linalg.hpp"

namespace splinter::poly {

using gf::FieldCtx;
using gf::FieldElement;

using Monomial = std::vector<int32_t>;  // exponent vector; negative entries allowed

/// Weighted grading on a fixed set of variables.
struct Grading {
  int nvars = 0;
  std::vector<int> weights;          // one per variable, all >= 1
  std::vector<std::string> names;    // used for printing only

  static Grading standard(int nvars, std::vector<std::string> names = {});
  static Grading weighted(std::vector<int> weights, std::vector<std::string> names = {});

  friend bool operator==(const Grading&, const Grading&) = default;
};

int64_t weighted_degree(const Monomial& m, const Grading& g);

std::string monomial_to_string(const Monomial& m, const Grading& g);

/// Sparse multivariate Laurent polynomial over F_{p^e} with a weighted grading.
/// Zero coefficients are never stored.
class GradedPoly {
public:
  GradedPoly() = default;
  GradedPoly(const FieldCtx& ctx, Grading grading);

  static GradedPoly monomial(const FieldCtx& ctx, const Grading& g, const Monomial& m,
                             const FieldElement& coeff);
  static GradedPoly variable(const FieldCtx& ctx, const Grading& g, int var);

  const FieldCtx& ctx() const { return *ctx_; }
  const Grading& grading() const { return grading_; }
  const std::map<Monomial, FieldElement>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  // Common weighted degree of all terms, if the polynomial is homogeneous.
  std::optional<int64_t> homogeneous_degree() const;

  GradedPoly add(const GradedPoly& o) const;
  GradedPoly sub(const GradedPoly& o) const;
  GradedPoly mul(const GradedPoly& o) const;
  GradedPoly scale(const FieldElement& c) const;
  GradedPoly neg() const;
  GradedPoly pow(uint32_t n) const;
  // q-th power for q a power of the characteristic: coefficients^q, exponents*q.
  GradedPoly pow_char(uint32_t q) const;

  void add_term(const Monomial& m, const FieldElement& c);

  friend bool operator==(const GradedPoly& a, const GradedPoly& b) {
    return a.grading_ == b.grading_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

private:
  const FieldCtx* ctx_ = nullptr;
  Grading grading_;
  std::map<Monomial, FieldElement> terms_;
};

/// Remainder of f under division by h in the distinguished variable.  h must
/// have a nonzero constant leading coefficient in that variable.
GradedPoly normal_form_hypersurface(const GradedPoly& f, const GradedPoly& h, int var);

/// Degree of h in one variable, and its leading coefficient as a polynomial in
/// the remaining variables.
int degree_in_variable(const GradedPoly& h, int var);

/// Basis of one graded piece of a subalgebra or ideal, row-reduced against the
/// graded-lex monomial order.  Each element carries a provenance label naming
/// the generator product it came from.
struct PieceBasis {
  int64_t degree = 0;
  std::vector<GradedPoly> basis;
  std::vector<std::string> provenance;

  size_t dim() const { return basis.size(); }
};

inline constexpr uint64_t kDefaultTermBudget = 1000000;

/// Degree-d piece of the unital subalgebra generated by homogeneous gens.
PieceBasis subalgebra_piece_basis(const std::vector<GradedPoly>& gens, int64_t d,
                                  uint64_t budget = kDefaultTermBudget);

/// Degree-d piece of the ideal generated by ideal_gens inside the subalgebra
/// generated by algebra_gens.
PieceBasis ideal_piece_in_subalgebra(const std::vector<GradedPoly>& ideal_gens,
                                     const std::vector<GradedPoly>& algebra_gens, int64_t d,
                                     uint64_t budget = kDefaultTermBudget);

struct MembershipResult {
  bool member = false;
  la::Vec coordinates;  // with respect to space.basis when member
};

/// Exact linear membership test of a homogeneous polynomial in a piece span.
MembershipResult membership(const GradedPoly& f, const PieceBasis& space);

}  // namespace splinter::poly
