#include "splinter/coh.hpp"

#include <algorithm>
#include <sstream>

namespace splinter::coh {

namespace {

const std::vector<std::string>& ambient_names(int n) {
  static const std::vector<std::string> v2 = {"x", "y"};
  static const std::vector<std::string> v3 = {"x", "y", "z"};
  static const std::vector<std::string> v4 = {"x", "y", "z", "w"};
  switch (n) {
    case 1: return v2;
    case 2: return v3;
    default: return v4;
  }
}

// All exponent vectors of length nv with entries >= 0 summing to s.
void enumerate_nonneg(int nv, int s, Monomial& cur, int pos, std::vector<Monomial>& out) {
  if (pos == nv - 1) {
    cur[pos] = s;
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= s; ++e) {
    cur[pos] = e;
    enumerate_nonneg(nv, s - e, cur, pos + 1, out);
  }
}

std::vector<Monomial> monomials_of_degree(int nv, int s) {
  std::vector<Monomial> out;
  if (s < 0) return out;
  Monomial cur(nv, 0);
  enumerate_nonneg(nv, s, cur, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

// All exponent vectors with entries <= -1 summing to t.
std::vector<Monomial> negative_monomials_of_degree(int nv, int t) {
  std::vector<Monomial> out;
  int s = -t - nv;  // b_i = -1 - a_i  =>  sum b_i = -t - nv
  if (s < 0) return out;
  for (Monomial b : monomials_of_degree(nv, s)) {
    for (auto& e : b) e = -1 - e;
    out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int64_t binom(int64_t n, int64_t r) {
  if (r < 0 || r > n) return 0;
  int64_t out = 1;
  for (int64_t i = 0; i < r; ++i) out = out * (n - i) / (i + 1);
  return out;
}

bool all_negative(const Monomial& m) {
  return std::all_of(m.begin(), m.end(), [](int32_t e) { return e <= -1; });
}

size_t index_of(const std::vector<Monomial>& basis, const Monomial& m) {
  auto it = std::lower_bound(basis.begin(), basis.end(), m);
  if (it == basis.end() || *it != m) fail(Errc::Internal, "monomial missing from basis");
  return static_cast<size_t>(it - basis.begin());
}

// Multiplication by g from the span of src to the span of dst, where both are
// sorted monomial lists and products landing outside dst are discarded.  With
// dst a top-cohomology basis this is the module structure of H^n; with an H^0
// basis nothing is ever discarded.
la::Mat mult_matrix(const FieldCtx& k, const GradedPoly& g, const std::vector<Monomial>& src,
                    const std::vector<Monomial>& dst, bool dst_negative) {
  la::Mat m(dst.size(), src.size());
  for (size_t j = 0; j < src.size(); ++j) {
    for (const auto& [mono, c] : g.terms()) {
      Monomial prod(src[j].size());
      for (size_t i = 0; i < prod.size(); ++i) prod[i] = src[j][i] + mono[i];
      if (dst_negative ? !all_negative(prod) : std::any_of(prod.begin(), prod.end(), [](int32_t e) { return e < 0; }))
        continue;
      size_t r = index_of(dst, prod);
      m.at(r, j) = k.add(m.at(r, j), c);
    }
  }
  return m;
}

la::Vec project_poly(const FieldCtx& k, const GradedPoly& p, const std::vector<Monomial>& dst,
                     bool dst_negative) {
  la::Vec v(dst.size());
  for (const auto& [mono, c] : p.terms()) {
    if (dst_negative ? !all_negative(mono)
                     : std::any_of(mono.begin(), mono.end(), [](int32_t e) { return e < 0; }))
      continue;
    auto it = std::lower_bound(dst.begin(), dst.end(), mono);
    if (it == dst.end() || *it != mono) continue;
    size_t r = static_cast<size_t>(it - dst.begin());
    v[r] = k.add(v[r], c);
  }
  return v;
}

GradedPoly lift_kernel_vector(const FieldCtx& k, const poly::Grading& g,
                              const std::vector<Monomial>& basis, const la::Vec& v) {
  GradedPoly p(k, g);
  for (size_t i = 0; i < basis.size(); ++i)
    if (!k.is_zero(v[i])) p.add_term(basis[i], v[i]);
  return p;
}

int hyp_degree(const GradedPoly& h) {
  auto d = h.homogeneous_degree();
  if (h.is_zero() || !d || *d < 1) fail(Errc::Validation, "hypersurface form must be nonzero homogeneous of positive degree");
  return static_cast<int>(*d);
}

void check_caps(int n, int t, const GradedPoly* h) {
  int max_n = h ? kMaxHypAmbient : kMaxAmbient;
  if (n < 1 || n > max_n) fail(Errc::UnsupportedDimension, "ambient dimension out of supported range");
  if (std::abs(t) > kMaxTwist) fail(Errc::UnsupportedDimension, "twist beyond the supported cap");
  if (h && hyp_degree(*h) > kMaxHypDegree) fail(Errc::UnsupportedDimension, "hypersurface degree beyond the supported cap");
  if (h && h->grading().nvars != n + 1) fail(Errc::DimensionMismatch, "hypersurface form has the wrong number of variables");
}

// Canonical projection data for a cokernel presentation: reduced row space of
// the image, representative columns, and the induced projection matrix.
void build_cokernel(const FieldCtx& k, CohGroup& g) {
  la::RowSpace image(k, g.target_basis.size());
  for (size_t j = 0; j < g.source_basis.size(); ++j) {
    la::Vec col(g.target_basis.size());
    for (size_t i = 0; i < g.target_basis.size(); ++i) col[i] = g.map.at(i, j);
    image.insert(std::move(col));
  }
  std::vector<bool> pivot(g.target_basis.size(), false);
  for (const auto& row : image.rows())
    for (size_t j = 0; j < row.size(); ++j)
      if (!k.is_zero(row[j])) {
        pivot[j] = true;
        break;
      }
  for (size_t j = 0; j < g.target_basis.size(); ++j)
    if (!pivot[j]) g.coker_reps.push_back(j);
  g.coker_proj = la::Mat(g.coker_reps.size(), g.target_basis.size());
  for (size_t j = 0; j < g.target_basis.size(); ++j) {
    la::Vec unit(g.target_basis.size());
    unit[j] = k.one();
    la::Vec red = image.reduce(unit);
    for (size_t i = 0; i < g.coker_reps.size(); ++i) g.coker_proj.at(i, j) = red[g.coker_reps[i]];
  }
}

}  // namespace

size_t CohGroup::dim() const {
  switch (kind) {
    case Kind::Zero: return 0;
    case Kind::MonomialBasis: return basis.size();
    case Kind::Kernel: return kernel.size();
    case Kind::Cokernel: return coker_reps.size();
  }
  return 0;
}

std::vector<std::string> CohGroup::basis_labels() const {
  poly::Grading g = poly::Grading::standard(n + 1, ambient_names(n));
  std::vector<std::string> out;
  if (kind == Kind::MonomialBasis) {
    for (const auto& m : basis) out.push_back(poly::monomial_to_string(m, g));
  } else if (kind == Kind::Kernel) {
    for (const auto& v : kernel) {
      std::ostringstream os;
      bool first = true;
      for (size_t i = 0; i < source_basis.size(); ++i) {
        if (v[i] == FieldElement{}) continue;
        if (!first) os << " + ";
        first = false;
        bool unit = v[i].c[0] == 1 && std::all_of(v[i].c.begin() + 1, v[i].c.end(), [](uint16_t x) { return !x; });
        if (!unit) os << "(" << v[i].c[0] << ")*";
        os << poly::monomial_to_string(source_basis[i], g);
      }
      out.push_back(os.str());
    }
  } else if (kind == Kind::Cokernel) {
    for (size_t r : coker_reps) out.push_back(poly::monomial_to_string(target_basis[r], g));
  }
  return out;
}

CohGroup pn_coh(int n, int i, int t) {
  check_caps(n, t, nullptr);
  if (i < 0 || i > n) fail(Errc::Validation, "cohomological index out of range");
  CohGroup g;
  g.n = n;
  g.index = i;
  g.twist = t;
  if (i == 0)
    g.basis = monomials_of_degree(n + 1, t);
  else if (i == n)
    g.basis = negative_monomials_of_degree(n + 1, t);
  g.kind = g.basis.empty() ? CohGroup::Kind::Zero : CohGroup::Kind::MonomialBasis;
  return g;
}

int64_t pn_coh_dim_formula(int n, int i, int t) {
  if (i == 0) return binom(t + n, n);
  if (i == n) return binom(-t - 1, n);
  return 0;
}

CohGroup hyp_coh(const FieldCtx& k, int n, const GradedPoly& h, int i, int t) {
  check_caps(n, t, &h);
  int d = hyp_degree(h);
  if (i < 0 || i > n - 1) fail(Errc::Validation, "hypersurface cohomology index must lie in [0, n-1]");
  CohGroup g;
  g.n = n;
  g.hyp = h;
  g.index = i;
  g.twist = t;
  if (i == 0) {
    g.kind = CohGroup::Kind::Cokernel;
    g.source_basis = monomials_of_degree(n + 1, t - d);
    g.target_basis = monomials_of_degree(n + 1, t);
    g.map = mult_matrix(k, h, g.source_basis, g.target_basis, false);
    build_cokernel(k, g);
    if (g.coker_reps.empty()) g.kind = CohGroup::Kind::Zero;
  } else if (i == n - 1 && n >= 2) {
    g.kind = CohGroup::Kind::Kernel;
    g.source_basis = negative_monomials_of_degree(n + 1, t - d);
    g.target_basis = negative_monomials_of_degree(n + 1, t);
    g.map = mult_matrix(k, h, g.source_basis, g.target_basis, true);
    g.kernel = la::kernel_basis(k, g.map);
    if (g.kernel.empty()) g.kind = CohGroup::Kind::Zero;
  } else {
    g.kind = CohGroup::Kind::Zero;  // middle indices vanish on hypersurfaces in P^n
  }
  return g;
}

namespace {

la::Vec express_in_group(const FieldCtx& k, const CohGroup& target, const GradedPoly& rep) {
  if (target.kind == CohGroup::Kind::Zero) {
    // Must represent the zero class.
    if (target.hyp) {
      // Either the ambient space is zero or the group's kernel/cokernel is; in
      // both cases the projection of the representative must vanish.
      la::Vec w = project_poly(k, rep, target.source_basis.empty() ? target.target_basis : target.source_basis,
                               target.index > 0);
      if (!la::vec_is_zero(w)) {
        // A cokernel can be zero with a nonzero ambient vector: reduce first.
        if (target.index == 0) return {};
        fail(Errc::Internal, "nonzero representative maps into a zero group");
      }
    }
    return {};
  }
  if (target.kind == CohGroup::Kind::Kernel) {
    la::Vec w = project_poly(k, rep, target.source_basis, true);
    auto coords = la::coordinates_in_span(k, target.kernel, w);
    if (!coords) fail(Errc::Internal, "representative does not lie in the kernel presentation");
    return *coords;
  }
  if (target.kind == CohGroup::Kind::Cokernel) {
    la::Vec w = project_poly(k, rep, target.target_basis, false);
    return target.coker_proj.apply(k, w);
  }
  fail(Errc::Internal, "unexpected group kind");
}

GradedPoly group_representative(const FieldCtx& k, const CohGroup& g, size_t j) {
  poly::Grading gr = poly::Grading::standard(g.n + 1, ambient_names(g.n));
  if (g.kind == CohGroup::Kind::Kernel) return lift_kernel_vector(k, gr, g.source_basis, g.kernel[j]);
  if (g.kind == CohGroup::Kind::Cokernel)
    return GradedPoly::monomial(k, gr, g.target_basis[g.coker_reps[j]], k.one());
  fail(Errc::Internal, "group has no representatives");
}

}  // namespace

la::Mat hyp_frobenius(const FieldCtx& k, int n, const GradedPoly& h, int i, int t, int e_pow) {
  if (e_pow < 1) fail(Errc::Validation, "frobenius power must be >= 1");
  uint64_t q = 1;
  for (int j = 0; j < e_pow; ++j) q *= k.p();
  if (q > 4096) fail(Errc::UnsupportedDimension, "frobenius power beyond the supported cap");
  CohGroup src = hyp_coh(k, n, h, i, t);
  CohGroup dst = hyp_coh(k, n, h, i, static_cast<int>(q) * t);
  la::Mat m(dst.dim(), src.dim());
  if (src.dim() == 0) return m;
  GradedPoly hq = h.pow(static_cast<uint32_t>(q - 1));
  for (size_t j = 0; j < src.dim(); ++j) {
    GradedPoly rep = group_representative(k, src, j);
    GradedPoly img = rep.pow_char(static_cast<uint32_t>(q));
    if (i > 0) img = img.mul(hq);  // connecting-map presentations twist by h^(q-1)
    la::Vec coords = express_in_group(k, dst, img);
    for (size_t r = 0; r < coords.size(); ++r) m.at(r, j) = coords[r];
  }
  return m;
}

la::Mat hyp_mult(const FieldCtx& k, int n, const GradedPoly& h, int i, int t, const GradedPoly& g) {
  auto dg = g.homogeneous_degree();
  if (!dg) fail(Errc::Validation, "multiplier must be homogeneous");
  CohGroup src = hyp_coh(k, n, h, i, t);
  CohGroup dst = hyp_coh(k, n, h, i, t + static_cast<int>(*dg));
  la::Mat m(dst.dim(), src.dim());
  for (size_t j = 0; j < src.dim(); ++j) {
    GradedPoly img = group_representative(k, src, j).mul(g);
    la::Vec coords = express_in_group(k, dst, img);
    for (size_t r = 0; r < coords.size(); ++r) m.at(r, j) = coords[r];
  }
  return m;
}

namespace {

// Minimal K (up to a cap) with s^K and u^K in the ideal (f0^i, f1^j), plus the
// cofactors of one such expression, found degreewise by linear algebra.
struct ParameterChange {
  int K;
  GradedPoly a, b, c, d;  // s^K = a f0^i + b f1^j,  u^K = c f0^i + d f1^j
};

std::optional<std::pair<GradedPoly, GradedPoly>> express_power(const FieldCtx& k, const GradedPoly& target,
                                                               const GradedPoly& g0, const GradedPoly& g1) {
  int64_t dt = *target.homogeneous_degree();
  int64_t d0 = *g0.homogeneous_degree();
  int64_t d1 = *g1.homogeneous_degree();
  if (dt < d0 || dt < d1) return std::nullopt;
  std::vector<Monomial> acols = monomials_of_degree(2, static_cast<int>(dt - d0));
  std::vector<Monomial> bcols = monomials_of_degree(2, static_cast<int>(dt - d1));
  std::vector<Monomial> rows = monomials_of_degree(2, static_cast<int>(dt));
  la::Mat m(rows.size(), acols.size() + bcols.size());
  const poly::Grading& gr = target.grading();
  for (size_t j = 0; j < acols.size(); ++j) {
    GradedPoly prod = GradedPoly::monomial(k, gr, acols[j], k.one()).mul(g0);
    la::Vec col = project_poly(k, prod, rows, false);
    for (size_t r = 0; r < rows.size(); ++r) m.at(r, j) = col[r];
  }
  for (size_t j = 0; j < bcols.size(); ++j) {
    GradedPoly prod = GradedPoly::monomial(k, gr, bcols[j], k.one()).mul(g1);
    la::Vec col = project_poly(k, prod, rows, false);
    for (size_t r = 0; r < rows.size(); ++r) m.at(r, acols.size() + j) = col[r];
  }
  la::Vec rhs = project_poly(k, target, rows, false);
  auto sol = la::solve(k, m, rhs);
  if (!sol) return std::nullopt;
  GradedPoly a(k, gr), b(k, gr);
  for (size_t j = 0; j < acols.size(); ++j) a.add_term(acols[j], (*sol)[j]);
  for (size_t j = 0; j < bcols.size(); ++j) b.add_term(bcols[j], (*sol)[acols.size() + j]);
  return std::make_pair(a, b);
}

ParameterChange change_of_parameters(const FieldCtx& k, const GradedPoly& g0, const GradedPoly& g1) {
  const poly::Grading& gr = g0.grading();
  int64_t dmax = *g0.homogeneous_degree() + *g1.homogeneous_degree();
  for (int K = 1; K <= 2 * dmax + 2; ++K) {
    GradedPoly sK = GradedPoly::monomial(k, gr, {K, 0}, k.one());
    GradedPoly uK = GradedPoly::monomial(k, gr, {0, K}, k.one());
    auto su = express_power(k, sK, g0, g1);
    auto uu = express_power(k, uK, g0, g1);
    if (su && uu) return ParameterChange{K, su->first, su->second, uu->first, uu->second};
  }
  fail(Errc::Internal, "no power of the irrelevant ideal lies in the parameter ideal");
}

}  // namespace

la::Mat p1_pullback(const FieldCtx& k, const GradedPoly& f0, const GradedPoly& f1, int t) {
  if (t >= 0) fail(Errc::Validation, "pullback is computed on negative twists only");
  if (std::abs(t) > kMaxTwist) fail(Errc::UnsupportedDimension, "twist beyond the supported cap");
  auto d0 = f0.homogeneous_degree(), d1 = f1.homogeneous_degree();
  if (f0.is_zero() || f1.is_zero() || !d0 || !d1 || *d0 != *d1 || *d0 < 1)
    fail(Errc::Validation, "the two forms must be homogeneous of the same positive degree");
  if (f0.grading().nvars != 2) fail(Errc::DimensionMismatch, "binary forms expected");
  int m = static_cast<int>(*d0);

  // Common-root test: dehomogenized gcd plus the point at infinity.
  {
    std::vector<FieldElement> c0(m + 1, k.zero()), c1(m + 1, k.zero());
    for (const auto& [mono, c] : f0.terms()) c0[mono[0]] = c;
    for (const auto& [mono, c] : f1.terms()) c1[mono[0]] = c;
    gf::UPoly F0{std::vector<FieldElement>(c0)}, F1{std::vector<FieldElement>(c1)};
    bool inf_common = k.is_zero(c0[m]) && k.is_zero(c1[m]);
    if (inf_common || gf::UPoly::gcd(k, F0, F1).degree() > 0)
      fail(Errc::DegenerateMap, "the two forms share a projective root");
  }

  std::vector<Monomial> src = negative_monomials_of_degree(2, t);
  std::vector<Monomial> dst = negative_monomials_of_degree(2, m * t);
  la::Mat out(dst.size(), src.size());
  // Transition of top local cohomology classes between the parameter systems
  // (f0, f1) and (s, u): a class P/(f0^i f1^j) equals P det(M) / (s^K u^K)
  // whenever (s^K, u^K)^T = M (f0^i, f1^j)^T.
  std::map<std::pair<int, int>, GradedPoly> dets;
  std::map<std::pair<int, int>, int> Ks;
  for (size_t col = 0; col < src.size(); ++col) {
    int i = -src[col][0], j = -src[col][1];
    auto key = std::make_pair(i, j);
    if (!dets.count(key)) {
      ParameterChange pc = change_of_parameters(k, f0.pow(i), f1.pow(j));
      dets.emplace(key, pc.a.mul(pc.d).sub(pc.b.mul(pc.c)));
      Ks.emplace(key, pc.K);
    }
    const GradedPoly& det = dets.at(key);
    int K = Ks.at(key);
    for (const auto& [mono, c] : det.terms()) {
      Monomial shifted = {mono[0] - K, mono[1] - K};
      if (!all_negative(shifted)) continue;
      out.at(index_of(dst, shifted), col) = k.add(out.at(index_of(dst, shifted), col), c);
    }
  }
  return out;
}

namespace {

GradedPoly partial_derivative(const GradedPoly& f, int var) {
  const FieldCtx& k = f.ctx();
  GradedPoly r(k, f.grading());
  for (const auto& [m, c] : f.terms()) {
    if (m[var] == 0) continue;
    Monomial m2 = m;
    m2[var] -= 1;
    r.add_term(m2, k.mul(c, k.from_int(m[var])));
  }
  return r;
}

}  // namespace

bool plane_curve_is_smooth(const FieldCtx& k, const GradedPoly& h) {
  int d = hyp_degree(h);
  if (h.grading().nvars != 3) fail(Errc::DimensionMismatch, "plane curve expected");
  std::vector<GradedPoly> gens = {h, partial_derivative(h, 0), partial_derivative(h, 1),
                                  partial_derivative(h, 2)};
  // Certificate: some graded piece of (h, dh) equals the full piece, so the
  // singular locus of the cone is at most the origin.
  for (int N = d; N <= 4 * d; ++N) {
    std::vector<Monomial> cols = monomials_of_degree(3, N);
    la::RowSpace space(k, cols.size());
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      int dg = static_cast<int>(*g.homogeneous_degree());
      if (dg > N) continue;
      for (const auto& mono : monomials_of_degree(3, N - dg)) {
        GradedPoly prod = GradedPoly::monomial(k, h.grading(), mono, k.one()).mul(g);
        space.insert(project_poly(k, prod, cols, false));
      }
    }
    if (space.dim() == cols.size()) return true;
  }
  return false;
}

LocalCohTable LocalCohTable::plane_curve_cone(const FieldCtx& k, const GradedPoly& h, int t_min, int t_max) {
  if (t_min > t_max) fail(Errc::Validation, "empty degree window");
  if (!plane_curve_is_smooth(k, h))
    fail(Errc::Validation, "the defining form could not be certified smooth; the cone would not be normal");
  LocalCohTable tab;
  tab.k_ = &k;
  tab.h_ = h;
  tab.nvars_ = 3;
  tab.t_min_ = t_min;
  tab.t_max_ = t_max;
  for (int t = t_min; t <= t_max; ++t) tab.pieces_.emplace(t, tab.compute_piece(t));
  for (int t = t_min; t <= t_max; ++t) {
    if (t + 1 <= t_max) {
      std::vector<la::Mat> ms;
      for (int v = 0; v < 3; ++v)
        ms.push_back(hyp_mult(k, 2, h, 1, t, GradedPoly::variable(k, h.grading(), v)));
      tab.mult_.emplace(t, std::move(ms));
    }
    int64_t pt = static_cast<int64_t>(k.p()) * t;
    if (pt >= t_min && pt <= t_max) tab.frob_.emplace(t, hyp_frobenius(k, 2, h, 1, t, 1));
  }
  return tab;
}

LocalCohTable LocalCohTable::punctured_plane(const FieldCtx& k, int t_min, int t_max) {
  if (t_min > t_max) fail(Errc::Validation, "empty degree window");
  if (t_min < -2048) fail(Errc::UnsupportedDimension, "window bottom beyond the supported cap");
  LocalCohTable tab;
  tab.k_ = &k;
  tab.nvars_ = 2;
  tab.t_min_ = t_min;
  tab.t_max_ = t_max;
  for (int t = t_min; t <= t_max; ++t) tab.pieces_.emplace(t, tab.compute_piece(t));
  for (int t = t_min; t <= t_max; ++t) {
    if (t + 1 <= t_max) {
      std::vector<la::Mat> ms;
      for (int v = 0; v < 2; ++v) ms.push_back(tab.mult_anywhere(t, v));
      tab.mult_.emplace(t, std::move(ms));
    }
    int64_t pt = static_cast<int64_t>(k.p()) * t;
    if (pt >= t_min && pt <= t_max) tab.frob_.emplace(t, tab.frob_anywhere(t));
  }
  return tab;
}

CohGroup LocalCohTable::compute_piece(int t) const {
  if (h_) return hyp_coh(*k_, 2, *h_, 1, t);
  CohGroup g;
  g.n = 1;
  g.index = 1;
  g.twist = t;
  g.basis = negative_monomials_of_degree(2, t);
  g.kind = g.basis.empty() ? CohGroup::Kind::Zero : CohGroup::Kind::MonomialBasis;
  return g;
}

const CohGroup& LocalCohTable::piece(int t) const {
  auto it = pieces_.find(t);
  if (it == pieces_.end()) fail(Errc::Validation, "degree outside the table window");
  return it->second;
}

size_t LocalCohTable::piece_dim_anywhere(int t) const {
  if (in_window(t)) return piece(t).dim();
  if (h_) return hyp_coh(*k_, 2, *h_, 1, t).dim();
  return negative_monomials_of_degree(2, t).size();
}

const la::Mat& LocalCohTable::mult(int t, int var) const {
  auto it = mult_.find(t);
  if (it == mult_.end()) fail(Errc::Validation, "multiplication target outside the table window");
  return it->second.at(var);
}

const la::Mat* LocalCohTable::frob(int t) const {
  auto it = frob_.find(t);
  return it == frob_.end() ? nullptr : &it->second;
}

la::Mat LocalCohTable::mult_anywhere(int t, int var) const {
  if (h_) return hyp_mult(*k_, 2, *h_, 1, t, GradedPoly::variable(*k_, h_->grading(), var));
  std::vector<Monomial> src = negative_monomials_of_degree(2, t);
  std::vector<Monomial> dst = negative_monomials_of_degree(2, t + 1);
  poly::Grading gr = poly::Grading::standard(2, ambient_names(1));
  return mult_matrix(*k_, GradedPoly::variable(*k_, gr, var), src, dst, true);
}

namespace {

GradedPoly table_representative(const FieldCtx& k, const CohGroup& g, const la::Vec& v) {
  poly::Grading gr = poly::Grading::standard(g.n + 1, ambient_names(g.n));
  GradedPoly rep(k, gr);
  if (g.kind == CohGroup::Kind::MonomialBasis) {
    for (size_t i = 0; i < g.basis.size(); ++i)
      if (!k.is_zero(v[i])) rep.add_term(g.basis[i], v[i]);
  } else if (g.kind == CohGroup::Kind::Kernel) {
    for (size_t i = 0; i < g.kernel.size(); ++i)
      if (!k.is_zero(v[i])) {
        for (size_t j = 0; j < g.source_basis.size(); ++j)
          if (!k.is_zero(g.kernel[i][j])) rep.add_term(g.source_basis[j], k.mul(v[i], g.kernel[i][j]));
      }
  } else {
    fail(Errc::Internal, "representative lift is only defined for explicit bases");
  }
  return rep;
}

bool negative_part_vanishes(const GradedPoly& p) {
  for (const auto& [m, c] : p.terms())
    if (all_negative(m)) return false;
  return true;
}

}  // namespace

bool LocalCohTable::mult_image_vanishes(int t, int var, const la::Vec& v) const {
  if (la::vec_is_zero(v)) return true;
  const CohGroup& g = piece(t);
  poly::Grading gr = poly::Grading::standard(nvars_, ambient_names(nvars_ - 1));
  GradedPoly rep = table_representative(*k_, g, v);
  return negative_part_vanishes(rep.mul(GradedPoly::variable(*k_, gr, var)));
}

bool LocalCohTable::frob_image_vanishes(int t, const la::Vec& v) const {
  if (la::vec_is_zero(v)) return true;
  const CohGroup& g = piece(t);
  GradedPoly rep = table_representative(*k_, g, v);
  GradedPoly img = rep.pow_char(k_->p());
  if (h_) img = img.mul(h_->pow(k_->p() - 1));
  return negative_part_vanishes(img);
}

la::Mat LocalCohTable::frob_anywhere(int t) const {
  if (h_) return hyp_frobenius(*k_, 2, *h_, 1, t, 1);
  uint32_t p = k_->p();
  std::vector<Monomial> src = negative_monomials_of_degree(2, t);
  std::vector<Monomial> dst = negative_monomials_of_degree(2, static_cast<int>(p) * t);
  la::Mat m(dst.size(), src.size());
  for (size_t j = 0; j < src.size(); ++j) {
    Monomial img = {src[j][0] * static_cast<int32_t>(p), src[j][1] * static_cast<int32_t>(p)};
    m.at(index_of(dst, img), j) = k_->one();
  }
  return m;
}

}  // namespace splinter::coh
