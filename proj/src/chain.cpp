#include "splinter/chain.hpp"

#include <random>

namespace splinter::chain {

CochainComplex::CochainComplex(const FieldCtx& k, int lo, std::vector<size_t> dims,
                               std::vector<la::Mat> diffs)
    : k_(&k), lo_(lo), dims_(std::move(dims)), diffs_(std::move(diffs)) {
  if (dims_.empty()) fail(Errc::ShapeMismatch, "complex must have at least one degree");
  if (diffs_.size() + 1 != dims_.size()) fail(Errc::ShapeMismatch, "wrong number of differentials");
  for (size_t j = 0; j < diffs_.size(); ++j)
    if (diffs_[j].rows() != dims_[j + 1] || diffs_[j].cols() != dims_[j])
      fail(Errc::ShapeMismatch, "differential shape mismatch");
  for (size_t j = 0; j + 1 < diffs_.size(); ++j)
    if (!diffs_[j + 1].mul(k, diffs_[j]).is_zero())
      fail(Errc::Validation, "d o d != 0");
}

size_t CochainComplex::dim(int i) const {
  int j = i - lo_;
  if (j < 0 || j >= static_cast<int>(dims_.size())) return 0;
  return dims_[j];
}

la::Mat CochainComplex::diff(int i) const {
  int j = i - lo_;
  if (j < 0 || j >= static_cast<int>(diffs_.size())) return la::Mat(dim(i + 1), dim(i));
  return diffs_[j];
}

ChainMap::ChainMap(const CochainComplex& src, const CochainComplex& dst, std::map<int, la::Mat> comps)
    : src_(&src), dst_(&dst), comps_(std::move(comps)) {
  const FieldCtx& k = src.field();
  int lo = std::min(src.lo(), dst.lo());
  int hi = std::max(src.hi(), dst.hi());
  for (int i = lo; i <= hi; ++i) {
    la::Mat fi = component(i);
    if (fi.rows() != dst.dim(i) || fi.cols() != src.dim(i))
      fail(Errc::ShapeMismatch, "chain map component shape mismatch");
    // Commutation d o f = f o d.
    la::Mat left = dst.diff(i).mul(k, fi);
    la::Mat right = component(i + 1).mul(k, src.diff(i));
    if (!(left == right)) fail(Errc::Validation, "chain map does not commute with the differentials");
  }
}

la::Mat ChainMap::component(int i) const {
  auto it = comps_.find(i);
  if (it != comps_.end()) return it->second;
  return la::Mat(dst_->dim(i), src_->dim(i));
}

ChainMap ChainMap::compose(const ChainMap& second, const ChainMap& first) {
  if (&first.dst() != &second.src()) fail(Errc::ShapeMismatch, "composition endpoints do not match");
  const FieldCtx& k = first.src().field();
  std::map<int, la::Mat> comps;
  int lo = std::min(first.src().lo(), second.dst().lo());
  int hi = std::max(first.src().hi(), second.dst().hi());
  for (int i = lo; i <= hi; ++i) comps.emplace(i, second.component(i).mul(k, first.component(i)));
  return ChainMap(first.src(), second.dst(), std::move(comps));
}

CohomologyPiece cohomology(const CochainComplex& K, int i) {
  const FieldCtx& k = K.field();
  CohomologyPiece out;
  if (K.dim(i) == 0) return out;
  std::vector<la::Vec> ker = la::kernel_basis(k, K.diff(i));
  la::RowSpace image(k, K.dim(i));
  la::Mat din = K.diff(i - 1);
  for (size_t j = 0; j < din.cols(); ++j) {
    la::Vec col(din.rows());
    for (size_t r = 0; r < din.rows(); ++r) col[r] = din.at(r, j);
    image.insert(std::move(col));
  }
  la::RowSpace seen(k, K.dim(i));
  for (const auto& row : image.rows()) seen.insert(row);
  for (const auto& v : ker)
    if (seen.insert(v)) out.representatives.push_back(v);
  out.dim = out.representatives.size();
  return out;
}

la::Mat induced_map(const ChainMap& f, int i) {
  const FieldCtx& k = f.src().field();
  CohomologyPiece src = cohomology(f.src(), i);
  CohomologyPiece dst = cohomology(f.dst(), i);
  la::Mat out(dst.dim, src.dim);
  if (src.dim == 0 || f.dst().dim(i) == 0) return out;

  la::RowSpace image(k, f.dst().dim(i));
  la::Mat din = f.dst().diff(i - 1);
  for (size_t j = 0; j < din.cols(); ++j) {
    la::Vec col(din.rows());
    for (size_t r = 0; r < din.rows(); ++r) col[r] = din.at(r, j);
    image.insert(std::move(col));
  }
  std::vector<la::Vec> dst_residues;
  for (const auto& r : dst.representatives) dst_residues.push_back(image.reduce(r));

  la::Mat fi = f.component(i);
  for (size_t j = 0; j < src.dim; ++j) {
    la::Vec w = image.reduce(fi.apply(k, src.representatives[j]));
    auto coords = la::coordinates_in_span(k, dst_residues, w);
    if (!coords) fail(Errc::Internal, "induced map does not preserve cocycles");
    for (size_t r = 0; r < dst.dim; ++r) out.at(r, j) = (*coords)[r];
  }
  return out;
}

CochainComplex truncate(const CochainComplex& K, TruncMode mode, int n) {
  const FieldCtx& k = K.field();
  if (n < K.lo() - 1 || n > K.hi() + 1)
    fail(Errc::Validation, "truncation degree must be within or adjacent to the support");
  if (mode == TruncMode::Below) {
    if (n >= K.hi()) {
      std::vector<size_t> dims;
      std::vector<la::Mat> diffs;
      for (int i = K.lo(); i <= K.hi(); ++i) dims.push_back(K.dim(i));
      for (int i = K.lo(); i < K.hi(); ++i) diffs.push_back(K.diff(i));
      return CochainComplex(k, K.lo(), std::move(dims), std::move(diffs));
    }
    if (n < K.lo()) return CochainComplex(k, n, {0}, {});
    std::vector<la::Vec> ker = la::kernel_basis(k, K.diff(n));
    std::vector<size_t> dims;
    std::vector<la::Mat> diffs;
    for (int i = K.lo(); i < n; ++i) dims.push_back(K.dim(i));
    dims.push_back(ker.size());
    for (int i = K.lo(); i + 1 < n; ++i) diffs.push_back(K.diff(i));
    if (n > K.lo()) {
      // Rewrite d_(n-1) in kernel coordinates.
      la::Mat din = K.diff(n - 1);
      la::Mat out(ker.size(), K.dim(n - 1));
      for (size_t j = 0; j < din.cols(); ++j) {
        la::Vec col(din.rows());
        for (size_t r = 0; r < din.rows(); ++r) col[r] = din.at(r, j);
        auto coords = la::coordinates_in_span(k, ker, col);
        if (!coords) fail(Errc::Internal, "image does not land in the kernel");
        for (size_t r = 0; r < ker.size(); ++r) out.at(r, j) = (*coords)[r];
      }
      diffs.push_back(std::move(out));
    }
    return CochainComplex(k, K.lo(), std::move(dims), std::move(diffs));
  }

  // TruncMode::Above
  if (n <= K.lo()) {
    std::vector<size_t> dims;
    std::vector<la::Mat> diffs;
    for (int i = K.lo(); i <= K.hi(); ++i) dims.push_back(K.dim(i));
    for (int i = K.lo(); i < K.hi(); ++i) diffs.push_back(K.diff(i));
    return CochainComplex(k, K.lo(), std::move(dims), std::move(diffs));
  }
  if (n > K.hi()) return CochainComplex(k, n, {0}, {});
  // Quotient of degree n by the image of d_(n-1).
  la::RowSpace image(k, K.dim(n));
  la::Mat din = K.diff(n - 1);
  for (size_t j = 0; j < din.cols(); ++j) {
    la::Vec col(din.rows());
    for (size_t r = 0; r < din.rows(); ++r) col[r] = din.at(r, j);
    image.insert(std::move(col));
  }
  std::vector<bool> pivot(K.dim(n), false);
  for (const auto& row : image.rows())
    for (size_t j = 0; j < row.size(); ++j)
      if (!k.is_zero(row[j])) {
        pivot[j] = true;
        break;
      }
  std::vector<size_t> reps;
  for (size_t j = 0; j < K.dim(n); ++j)
    if (!pivot[j]) reps.push_back(j);

  std::vector<size_t> dims;
  std::vector<la::Mat> diffs;
  dims.push_back(reps.size());
  for (int i = n + 1; i <= K.hi(); ++i) dims.push_back(K.dim(i));
  if (n < K.hi()) {
    // d_n on the canonical lift of the representatives.
    la::Mat dn = K.diff(n);
    la::Mat out(K.dim(n + 1), reps.size());
    for (size_t j = 0; j < reps.size(); ++j) {
      la::Vec lift(K.dim(n));
      lift[reps[j]] = k.one();
      la::Vec img = dn.apply(k, lift);
      for (size_t r = 0; r < img.size(); ++r) out.at(r, j) = img[r];
    }
    diffs.push_back(std::move(out));
    for (int i = n + 1; i < K.hi(); ++i) diffs.push_back(K.diff(i));
  }
  return CochainComplex(k, n, std::move(dims), std::move(diffs));
}

std::variant<Homotopy, HypothesisViolation> compose_null_witness(const std::vector<ChainMap>& maps) {
  if (maps.empty()) fail(Errc::Validation, "empty composite");
  int d = static_cast<int>(maps.size());
  const FieldCtx& k = maps.front().src().field();
  auto check_support = [&](const CochainComplex& a) {
    for (int j = a.lo(); j <= a.hi(); ++j)
      if ((j < 1 || j > d) && a.dim(j) > 0) fail(Errc::ShapeMismatch, "complex not supported in [1, d]");
  };
  for (int i = 0; i < d; ++i) {
    check_support(maps[i].src());
    if (i + 1 < d && &maps[i].dst() != &maps[i + 1].src())
      fail(Errc::ShapeMismatch, "maps are not composable");
  }
  check_support(maps.back().dst());

  for (int i = 1; i <= d; ++i) {
    la::Mat ind = induced_map(maps[i - 1], d + 1 - i);
    if (!ind.is_zero()) return HypothesisViolation{i, d + 1 - i};
  }

  ChainMap composite = maps.front();
  for (int i = 1; i < d; ++i) composite = ChainMap::compose(maps[i], composite);
  const CochainComplex& K = composite.src();
  const CochainComplex& L = composite.dst();

  // Solve F^j = d_L^(j-1) h^j + h^(j+1) d_K^j for h^j : K^j -> L^(j-1).
  struct Block {
    int degree;
    size_t rows, cols, offset;
  };
  std::vector<Block> blocks;
  size_t total = 0;
  for (int j = 1; j <= d + 1; ++j) {
    size_t r = L.dim(j - 1), c = K.dim(j);
    blocks.push_back({j, r, c, total});
    total += r * c;
  }
  auto block_of = [&](int degree) -> const Block& {
    return blocks[static_cast<size_t>(degree - 1)];
  };

  size_t eqs = 0;
  for (int j = 1; j <= d; ++j) eqs += L.dim(j) * K.dim(j);
  la::Mat sys(eqs, total);
  la::Vec rhs(eqs);
  size_t eq = 0;
  for (int j = 1; j <= d; ++j) {
    la::Mat fj = composite.component(j);
    la::Mat dl = L.diff(j - 1);
    la::Mat dk = K.diff(j);
    for (size_t r = 0; r < L.dim(j); ++r)
      for (size_t c = 0; c < K.dim(j); ++c) {
        rhs[eq] = fj.at(r, c);
        const Block& bj = block_of(j);
        for (size_t s = 0; s < bj.rows; ++s)  // d_L^(j-1)[r,s] * h^j[s,c]
          sys.at(eq, bj.offset + s * bj.cols + c) = k.add(sys.at(eq, bj.offset + s * bj.cols + c), dl.at(r, s));
        const Block& bj1 = block_of(j + 1);
        for (size_t s = 0; s < bj1.cols; ++s)  // h^(j+1)[r,s] * d_K^j[s,c]
          sys.at(eq, bj1.offset + r * bj1.cols + s) =
              k.add(sys.at(eq, bj1.offset + r * bj1.cols + s), dk.at(s, c));
        ++eq;
      }
  }
  auto sol = la::solve(k, sys, rhs);
  if (!sol) fail(Errc::Internal, "no homotopy found although the hypothesis holds");
  Homotopy h;
  for (const Block& b : blocks) {
    la::Mat m(b.rows, b.cols);
    for (size_t r = 0; r < b.rows; ++r)
      for (size_t c = 0; c < b.cols; ++c) m.at(r, c) = (*sol)[b.offset + r * b.cols + c];
    h.comps.emplace(b.degree, std::move(m));
  }
  return h;
}

bool homotopy_certifies(const ChainMap& f, const Homotopy& h) {
  const FieldCtx& k = f.src().field();
  const CochainComplex& K = f.src();
  const CochainComplex& L = f.dst();
  int lo = std::min(K.lo(), L.lo());
  int hi = std::max(K.hi(), L.hi());
  for (int j = lo; j <= hi; ++j) {
    la::Mat want = f.component(j);
    auto hj = h.comps.find(j);
    auto hj1 = h.comps.find(j + 1);
    la::Mat hjm = hj != h.comps.end() ? hj->second : la::Mat(L.dim(j - 1), K.dim(j));
    la::Mat hj1m = hj1 != h.comps.end() ? hj1->second : la::Mat(L.dim(j), K.dim(j + 1));
    la::Mat got = L.diff(j - 1).mul(k, hjm).add(k, hj1m.mul(k, K.diff(j)));
    if (!(want == got)) return false;
  }
  return true;
}

namespace {

la::Mat random_matrix(const FieldCtx& k, std::mt19937_64& rng, size_t rows, size_t cols) {
  la::Mat m(rows, cols);
  auto elems = k.elements();
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) m.at(i, j) = elems[rng() % elems.size()];
  return m;
}

// Invertible matrix as L * U with unit lower-triangular L and upper-triangular
// U with nonzero diagonal; one-shot, no rejection.
la::Mat random_invertible(const FieldCtx& k, std::mt19937_64& rng, size_t n) {
  auto elems = k.elements();
  la::Mat l = la::Mat::identity(k, n);
  la::Mat u(n, n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < i; ++j) l.at(i, j) = elems[rng() % elems.size()];
    u.at(i, i) = elems[1 + rng() % (elems.size() - 1)];
    for (size_t j = i + 1; j < n; ++j) u.at(i, j) = elems[rng() % elems.size()];
  }
  return l.mul(k, u);
}

la::Mat invert(const FieldCtx& k, const la::Mat& m) {
  la::Mat inv(m.rows(), m.rows());
  for (size_t col = 0; col < m.rows(); ++col) {
    la::Vec e(m.rows());
    e[col] = k.one();
    auto sol = la::solve(k, m, e);
    if (!sol) fail(Errc::Internal, "matrix not invertible");
    for (size_t i = 0; i < m.rows(); ++i) inv.at(i, col) = (*sol)[i];
  }
  return inv;
}

}  // namespace

RandomInstance random_hypothesis_instance(const FieldCtx& k, int d, size_t max_dim, uint64_t seed) {
  if (d < 1) fail(Errc::Validation, "d must be >= 1");
  if (max_dim < 4) fail(Errc::Validation, "max_dim must be >= 4");
  std::mt19937_64 rng(seed);

  // Split model: degree j holds H_j + A_j + copy(A_(j-1)), and the
  // differential carries the A_j block identically onto its copy in j+1.
  struct Model {
    std::vector<size_t> h;  // [1..d], cohomology dims
    std::vector<size_t> a;  // [1..d-1], acyclic pair dims (block j -> j+1)
    std::vector<size_t> dims;
    std::vector<size_t> aoff, coff;
  };

  auto make_model = [&] {
    Model m;
    m.h.assign(d + 1, 0);
    m.a.assign(d + 1, 0);
    for (int j = 1; j <= d; ++j) m.h[j] = rng() % 3;
    int forced = 1 + static_cast<int>(rng() % d);
    if (m.h[forced] == 0) m.h[forced] = 1;
    for (int j = 1; j <= d - 1; ++j) m.a[j] = rng() % 2;
    m.dims.assign(d + 1, 0);
    m.aoff.assign(d + 1, 0);
    m.coff.assign(d + 1, 0);
    for (int j = 1; j <= d; ++j) {
      size_t aj = (j <= d - 1) ? m.a[j] : 0;
      size_t cj = (j >= 2) ? m.a[j - 1] : 0;
      m.aoff[j] = m.h[j];
      m.coff[j] = m.h[j] + aj;
      m.dims[j] = m.h[j] + aj + cj;
    }
    return m;
  };

  std::vector<Model> models;
  for (int i = 0; i <= d; ++i) models.push_back(make_model());

  // Split-coordinate complexes.
  std::vector<std::vector<la::Mat>> diffs(d + 1);
  for (int i = 0; i <= d; ++i) {
    for (int j = 1; j < d; ++j) {
      la::Mat dj(models[i].dims[j + 1], models[i].dims[j]);
      size_t aj = models[i].a[j];
      for (size_t s = 0; s < aj; ++s)
        dj.at(models[i].coff[j + 1] + s, models[i].aoff[j] + s) = k.one();
      diffs[i].push_back(std::move(dj));
    }
  }

  // Changes of basis per complex and degree.
  std::vector<std::vector<la::Mat>> q(d + 1), qinv(d + 1);
  for (int i = 0; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      la::Mat qj = random_invertible(k, rng, models[i].dims[j]);
      qinv[i].push_back(invert(k, qj));
      q[i].push_back(std::move(qj));
    }

  RandomInstance inst;
  inst.complexes.reserve(d + 1);
  for (int i = 0; i <= d; ++i) {
    std::vector<size_t> dims;
    for (int j = 1; j <= d; ++j) dims.push_back(models[i].dims[j]);
    std::vector<la::Mat> cd;
    for (int j = 1; j < d; ++j)
      cd.push_back(q[i][j].mul(k, diffs[i][j - 1]).mul(k, qinv[i][j - 1]));
    inst.complexes.emplace_back(k, 1, std::move(dims), std::move(cd));
  }

  for (int i = 0; i < d; ++i) {
    const Model& a = models[i];
    const Model& b = models[i + 1];
    int killed = d - i;  // H^(d+1-(i+1)) of map index i+1 must vanish
    std::map<int, la::Mat> comps;
    // H-block maps with the killed degree zeroed.
    std::vector<la::Mat> split_f;
    for (int j = 1; j <= d; ++j) {
      la::Mat fj(b.dims[j], a.dims[j]);
      if (j != killed) {
        la::Mat phi = random_matrix(k, rng, b.h[j], a.h[j]);
        for (size_t r = 0; r < b.h[j]; ++r)
          for (size_t c = 0; c < a.h[j]; ++c) fj.at(r, c) = phi.at(r, c);
      }
      split_f.push_back(std::move(fj));
    }
    // Add a homotopy-shaped perturbation d_b h + h d_a in split coordinates.
    auto dim_at = [&](const Model& m, int j) -> size_t {
      return (j >= 1 && j <= d) ? m.dims[j] : 0;
    };
    std::vector<la::Mat> hmaps;  // h^j : A^j -> B^(j-1), j = 2..d
    for (int j = 2; j <= d; ++j) hmaps.push_back(random_matrix(k, rng, b.dims[j - 1], a.dims[j]));
    auto hmap = [&](int j) -> la::Mat {
      if (j < 2 || j > d) return la::Mat(dim_at(b, j - 1), dim_at(a, j));
      return hmaps[static_cast<size_t>(j - 2)];
    };
    auto split_diff = [&](const std::vector<la::Mat>& dd, const Model& m, int j) -> la::Mat {
      if (j < 1 || j >= d) return la::Mat(dim_at(m, j + 1), dim_at(m, j));
      return dd[static_cast<size_t>(j - 1)];
    };
    std::map<int, la::Mat> conj;
    for (int j = 1; j <= d; ++j) {
      la::Mat pert = split_f[static_cast<size_t>(j - 1)];
      la::Mat t1 = split_diff(diffs[i + 1], b, j - 1).mul(k, hmap(j));
      la::Mat t2 = hmap(j + 1).mul(k, split_diff(diffs[i], a, j));
      pert = pert.add(k, t1).add(k, t2);
      conj.emplace(j, q[i + 1][j - 1].mul(k, pert).mul(k, qinv[i][j - 1]));
    }
    inst.maps.emplace_back(inst.complexes[i], inst.complexes[i + 1], std::move(conj));
  }
  return inst;
}

}  // namespace splinter::chain
