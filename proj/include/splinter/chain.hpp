#pragma once

#include <cstdint>
#include <map>
#include <variant>
#include <vector>

#include "splinter/gf.hpp"
#include "splinter/linalg.hpp"

namespace splinter::chain {

using gf::FieldCtx;
using gf::FieldElement;

/// Bounded cochain complex of finite-dimensional vector spaces.  The
/// differential out of degree i is a matrix dim(i+1) x dim(i); d o d = 0 is
/// enforced at construction.
class CochainComplex {
public:
  CochainComplex(const FieldCtx& k, int lo, std::vector<size_t> dims, std::vector<la::Mat> diffs);

  const FieldCtx& field() const { return *k_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
  size_t dim(int i) const;
  // Differential d_i : K^i -> K^(i+1); zero-shaped outside the range.
  la::Mat diff(int i) const;

private:
  const FieldCtx* k_;
  int lo_;
  std::vector<size_t> dims_;
  std::vector<la::Mat> diffs_;  // diffs_[j] maps degree lo+j to lo+j+1
};

/// Chain map between two complexes; commutation with the differentials is
/// enforced at construction.
class ChainMap {
public:
  ChainMap(const CochainComplex& src, const CochainComplex& dst, std::map<int, la::Mat> comps);

  const CochainComplex& src() const { return *src_; }
  const CochainComplex& dst() const { return *dst_; }
  la::Mat component(int i) const;

  static ChainMap compose(const ChainMap& second, const ChainMap& first);

private:
  const CochainComplex* src_;
  const CochainComplex* dst_;
  std::map<int, la::Mat> comps_;
};

/// Degree-(-1) maps h^i : K^i -> L^(i-1); shape only, the homotopy identity is
/// a postcondition of the solver that returns it.
struct Homotopy {
  std::map<int, la::Mat> comps;
};

struct CohomologyPiece {
  size_t dim = 0;
  std::vector<la::Vec> representatives;  // lifted to ker d_i
};

CohomologyPiece cohomology(const CochainComplex& K, int i);

/// Matrix induced on degree-i cohomology by a chain map.
la::Mat induced_map(const ChainMap& f, int i);

enum class TruncMode { Below, Above };  // Below keeps degrees <= n, Above keeps >= n

/// Canonical truncation: cohomology agrees with K inside the kept range and
/// vanishes outside it.
CochainComplex truncate(const CochainComplex& K, TruncMode mode, int n);

struct HypothesisViolation {
  int map_index = 0;  // 1-based index of the failing map
  int degree = 0;     // cohomological degree where the induced map is nonzero
};

/// Null-homotopy witness for a composite of d maps between complexes supported
/// in [1, d], each killing cohomology in the complementary degree: checks
/// H^(d+1-i)(f_i) = 0 for every i, then solves F = d h + h d for the composite
/// F and returns h.
std::variant<Homotopy, HypothesisViolation> compose_null_witness(const std::vector<ChainMap>& maps);

/// Exact verification of the homotopy identity for a given map.
bool homotopy_certifies(const ChainMap& f, const Homotopy& h);

/// Deterministic generator for hypothesis-satisfying random instances: d maps
/// between complexes supported in [1, d] with H^(d+1-i)(f_i) = 0, built from
/// split models with prescribed cohomology and then conjugated by random
/// changes of basis.  No rejection sampling.
struct RandomInstance {
  std::vector<CochainComplex> complexes;  // d+1 of them
  std::vector<ChainMap> maps;             // d maps
};

RandomInstance random_hypothesis_instance(const FieldCtx& k, int d, size_t max_dim, uint64_t seed);

}  // namespace splinter::chain
