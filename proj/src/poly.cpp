#include "splinter/poly.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace splinter::poly {

Grading Grading::standard(int nvars, std::vector<std::string> names) {
  Grading g;
  g.nvars = nvars;
  g.weights.assign(nvars, 1);
  g.names = std::move(names);
  if (g.names.empty())
    for (int i = 0; i < nvars; ++i) g.names.push_back("x" + std::to_string(i));
  return g;
}

Grading Grading::weighted(std::vector<int> weights, std::vector<std::string> names) {
  Grading g;
  g.nvars = static_cast<int>(weights.size());
  for (int w : weights)
    if (w < 1) fail(Errc::Validation, "grading weights must be positive");
  g.weights = std::move(weights);
  g.names = std::move(names);
  if (g.names.empty())
    for (int i = 0; i < g.nvars; ++i) g.names.push_back("x" + std::to_string(i));
  return g;
}

int64_t weighted_degree(const Monomial& m, const Grading& g) {
  if (static_cast<int>(m.size()) != g.nvars)
    fail(Errc::DimensionMismatch, "exponent vector length does not match grading");
  int64_t d = 0;
  for (int i = 0; i < g.nvars; ++i) d += static_cast<int64_t>(g.weights[i]) * m[i];
  return d;
}

std::string monomial_to_string(const Monomial& m, const Grading& g) {
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (any) os << "*";
    any = true;
    os << (i < g.names.size() ? g.names[i] : "x" + std::to_string(i));
    if (m[i] != 1) os << "^" << m[i];
  }
  if (!any) os << "1";
  return os.str();
}

GradedPoly::GradedPoly(const FieldCtx& ctx, Grading grading) : ctx_(&ctx), grading_(std::move(grading)) {}

GradedPoly GradedPoly::monomial(const FieldCtx& ctx, const Grading& g, const Monomial& m,
                                const FieldElement& coeff) {
  GradedPoly p(ctx, g);
  p.add_term(m, coeff);
  return p;
}

GradedPoly GradedPoly::variable(const FieldCtx& ctx, const Grading& g, int var) {
  Monomial m(g.nvars, 0);
  m[var] = 1;
  return monomial(ctx, g, m, ctx.one());
}

void GradedPoly::add_term(const Monomial& m, const FieldElement& c) {
  if (static_cast<int>(m.size()) != grading_.nvars)
    fail(Errc::DimensionMismatch, "term exponent length does not match grading");
  if (ctx_->is_zero(c)) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    FieldElement s = ctx_->add(it->second, c);
    if (ctx_->is_zero(s))
      terms_.erase(it);
    else
      it->second = s;
  }
}

std::optional<int64_t> GradedPoly::homogeneous_degree() const {
  std::optional<int64_t> d;
  for (const auto& [m, c] : terms_) {
    int64_t dm = weighted_degree(m, grading_);
    if (!d)
      d = dm;
    else if (*d != dm)
      return std::nullopt;
  }
  return d;  // nullopt only when the zero polynomial... zero has no terms
}

GradedPoly GradedPoly::add(const GradedPoly& o) const {
  GradedPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

GradedPoly GradedPoly::sub(const GradedPoly& o) const {
  GradedPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, ctx_->neg(c));
  return r;
}

GradedPoly GradedPoly::neg() const {
  GradedPoly r(*ctx_, grading_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, ctx_->neg(c));
  return r;
}

GradedPoly GradedPoly::scale(const FieldElement& c) const {
  GradedPoly r(*ctx_, grading_);
  if (ctx_->is_zero(c)) return r;
  for (const auto& [m, x] : terms_) {
    FieldElement y = ctx_->mul(c, x);
    if (!ctx_->is_zero(y)) r.terms_.emplace(m, y);
  }
  return r;
}

GradedPoly GradedPoly::mul(const GradedPoly& o) const {
  GradedPoly r(*ctx_, grading_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m(m1.size());
      for (size_t i = 0; i < m.size(); ++i) m[i] = m1[i] + m2[i];
      r.add_term(m, ctx_->mul(c1, c2));
    }
  return r;
}

GradedPoly GradedPoly::pow(uint32_t n) const {
  GradedPoly r = monomial(*ctx_, grading_, Monomial(grading_.nvars, 0), ctx_->one());
  GradedPoly base = *this;
  while (n) {
    if (n & 1) r = r.mul(base);
    if (n >>= 1) base = base.mul(base);
  }
  return r;
}

GradedPoly GradedPoly::pow_char(uint32_t q) const {
  // Valid because q is a power of char p: (a+b)^q = a^q + b^q.
  GradedPoly r(*ctx_, grading_);
  for (const auto& [m, c] : terms_) {
    Monomial mq(m.size());
    for (size_t i = 0; i < m.size(); ++i) mq[i] = m[i] * static_cast<int32_t>(q);
    r.terms_.emplace(mq, ctx_->pow(c, q));
  }
  return r;
}

std::string GradedPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool ext = ctx_->ext_degree() > 1;
    std::string cs = ctx_->to_string(c);
    bool trivial_coeff = (cs == "1");
    bool const_mon = std::all_of(m.begin(), m.end(), [](int32_t e) { return e == 0; });
    if (!trivial_coeff || const_mon) {
      if (ext && !const_mon)
        os << "(" << cs << ")";
      else
        os << cs;
      if (!const_mon) os << "*";
    }
    if (!const_mon) os << monomial_to_string(m, grading_);
  }
  return os.str();
}

int degree_in_variable(const GradedPoly& h, int var) {
  int d = 0;
  for (const auto& [m, c] : h.terms()) d = std::max(d, static_cast<int>(m[var]));
  return d;
}

namespace {

// Coefficient of v^k in h, as a polynomial in the remaining variables
// (the v-slot of every term is zeroed).
GradedPoly coefficient_of_power(const GradedPoly& h, int var, int k) {
  GradedPoly r(h.ctx(), h.grading());
  for (const auto& [m, c] : h.terms()) {
    if (m[var] != k) continue;
    Monomial m2 = m;
    m2[var] = 0;
    r.add_term(m2, c);
  }
  return r;
}

}  // namespace

GradedPoly normal_form_hypersurface(const GradedPoly& f, const GradedPoly& h, int var) {
  if (h.is_zero()) fail(Errc::Validation, "zero hypersurface");
  int dh = degree_in_variable(h, var);
  if (dh < 1) fail(Errc::NotMonicInVariable, "divisor has degree 0 in the distinguished variable");
  GradedPoly lead = coefficient_of_power(h, var, dh);
  Monomial constant(h.grading().nvars, 0);
  if (lead.terms().size() != 1 || lead.terms().begin()->first != constant)
    fail(Errc::NotMonicInVariable, "leading coefficient in the distinguished variable is not constant");
  const FieldCtx& k = f.ctx();
  FieldElement lead_inv = k.inv(lead.terms().begin()->second);

  // tail = (h - lead * v^dh) scaled so that v^dh = -tail after reduction.
  GradedPoly tail(k, h.grading());
  for (const auto& [m, c] : h.terms()) {
    if (m[var] == dh) continue;
    tail.add_term(m, k.mul(c, lead_inv));
  }

  GradedPoly r = f;
  for (;;) {
    int top = -1;
    for (const auto& [m, c] : r.terms()) top = std::max(top, static_cast<int>(m[var]));
    if (top < dh) break;
    GradedPoly slice(k, f.grading());
    for (const auto& [m, c] : r.terms()) {
      if (m[var] != top) continue;
      Monomial m2 = m;
      m2[var] = top - dh;
      slice.add_term(m2, c);
    }
    // r -= slice * (v^dh + tail); the v^dh part cancels the slice exactly.
    GradedPoly cancel = slice.mul(tail);
    for (const auto& [m, c] : r.terms()) {
      if (m[var] != top) continue;
      cancel.add_term(m, c);
    }
    r = r.sub(cancel);
  }
  return r;
}

namespace {

// Graded-lex order: higher weighted degree first, then lexicographic on
// exponents. Used only to index columns; answers never depend on it.
struct MonomialOrder {
  const Grading* g;
  bool operator()(const Monomial& a, const Monomial& b) const {
    int64_t da = weighted_degree(a, *g), db = weighted_degree(b, *g);
    if (da != db) return da > db;
    return a > b;
  }
};

struct PieceAccumulator {
  PieceAccumulator(const FieldCtx& k, const Grading& g) : k_(&k), grading_(g) {}

  void add(const GradedPoly& p, std::string label) {
    cands_.push_back(p);
    labels_.push_back(std::move(label));
    for (const auto& [m, c] : p.terms()) monomials_.insert(m);
  }

  PieceBasis reduce(int64_t degree) {
    std::vector<Monomial> cols(monomials_.begin(), monomials_.end());
    std::sort(cols.begin(), cols.end(), MonomialOrder{&grading_});
    std::map<Monomial, size_t> col_of;
    for (size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = i;

    PieceBasis out;
    out.degree = degree;
    la::RowSpace space(*k_, cols.size());
    for (size_t i = 0; i < cands_.size(); ++i) {
      la::Vec row(cols.size());
      for (const auto& [m, c] : cands_[i].terms()) row[col_of[m]] = c;
      if (space.insert(row)) {
        out.basis.push_back(cands_[i]);
        out.provenance.push_back(labels_[i]);
      }
    }
    return out;
  }

  const FieldCtx* k_;
  Grading grading_;
  std::vector<GradedPoly> cands_;
  std::vector<std::string> labels_;
  std::set<Monomial> monomials_;
};

void check_homogeneous_positive(const std::vector<GradedPoly>& gens, const char* what) {
  for (const auto& g : gens) {
    auto d = g.homogeneous_degree();
    if (g.is_zero() || !d) fail(Errc::Validation, std::string(what) + " must be nonzero homogeneous");
    if (*d <= 0) fail(Errc::Validation, std::string(what) + " must have positive degree");
  }
}

// Enumerates exponent tuples (k_1..k_r) with sum k_i * deg_i = d.
void enumerate_multisets(const std::vector<int64_t>& degs, int64_t d, size_t idx,
                         std::vector<uint32_t>& cur, uint64_t& budget,
                         const std::function<void(const std::vector<uint32_t>&)>& emit) {
  if (idx == degs.size()) {
    if (d == 0) {
      if (budget == 0) fail(Errc::BudgetExceeded, "piece enumeration exceeded the term budget");
      --budget;
      emit(cur);
    }
    return;
  }
  for (int64_t k = 0; k * degs[idx] <= d; ++k) {
    cur[idx] = static_cast<uint32_t>(k);
    enumerate_multisets(degs, d - k * degs[idx], idx + 1, cur, budget, emit);
  }
  cur[idx] = 0;
}

std::string power_product_label(const std::vector<GradedPoly>& gens, const std::vector<uint32_t>& ks) {
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < ks.size(); ++i) {
    if (!ks[i]) continue;
    if (any) os << " * ";
    any = true;
    os << "(" << gens[i].to_string() << ")";
    if (ks[i] > 1) os << "^" << ks[i];
  }
  if (!any) os << "1";
  return os.str();
}

}  // namespace

PieceBasis subalgebra_piece_basis(const std::vector<GradedPoly>& gens, int64_t d, uint64_t budget) {
  if (gens.empty()) fail(Errc::Validation, "no generators supplied");
  check_homogeneous_positive(gens, "subalgebra generators");
  const FieldCtx& k = gens.front().ctx();
  const Grading& grading = gens.front().grading();
  PieceAccumulator acc(k, grading);
  if (d < 0) {
    PieceBasis out;
    out.degree = d;
    return out;
  }
  std::vector<int64_t> degs;
  for (const auto& g : gens) degs.push_back(*g.homogeneous_degree());
  std::vector<uint32_t> cur(gens.size(), 0);
  enumerate_multisets(degs, d, 0, cur, budget, [&](const std::vector<uint32_t>& ks) {
    GradedPoly prod = GradedPoly::monomial(k, grading, Monomial(grading.nvars, 0), k.one());
    for (size_t i = 0; i < ks.size(); ++i)
      if (ks[i]) prod = prod.mul(gens[i].pow(ks[i]));
    if (!prod.is_zero()) acc.add(prod, power_product_label(gens, ks));
  });
  return acc.reduce(d);
}

PieceBasis ideal_piece_in_subalgebra(const std::vector<GradedPoly>& ideal_gens,
                                     const std::vector<GradedPoly>& algebra_gens, int64_t d,
                                     uint64_t budget) {
  if (ideal_gens.empty()) fail(Errc::Validation, "no ideal generators supplied");
  check_homogeneous_positive(ideal_gens, "ideal generators");
  const FieldCtx& k = ideal_gens.front().ctx();
  const Grading& grading = ideal_gens.front().grading();
  PieceAccumulator acc(k, grading);
  for (const auto& g : ideal_gens) {
    int64_t dg = *g.homogeneous_degree();
    if (dg > d) continue;
    PieceBasis sub = subalgebra_piece_basis(algebra_gens, d - dg, budget);
    for (size_t i = 0; i < sub.basis.size(); ++i)
      acc.add(g.mul(sub.basis[i]), "(" + g.to_string() + ") * [" + sub.provenance[i] + "]");
  }
  return acc.reduce(d);
}

MembershipResult membership(const GradedPoly& f, const PieceBasis& space) {
  auto df = f.homogeneous_degree();
  if (!f.is_zero() && (!df || *df != space.degree))
    fail(Errc::DegreeMismatch, "membership candidate degree does not match the piece degree");

  std::set<Monomial> monos;
  for (const auto& b : space.basis)
    for (const auto& [m, c] : b.terms()) monos.insert(m);
  for (const auto& [m, c] : f.terms()) monos.insert(m);
  std::vector<Monomial> cols(monos.begin(), monos.end());
  std::map<Monomial, size_t> col_of;
  for (size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = i;

  const FieldCtx& k = f.ctx();
  std::vector<la::Vec> span;
  for (const auto& b : space.basis) {
    la::Vec row(cols.size());
    for (const auto& [m, c] : b.terms()) row[col_of[m]] = c;
    span.push_back(std::move(row));
  }
  la::Vec target(cols.size());
  for (const auto& [m, c] : f.terms()) target[col_of[m]] = c;

  MembershipResult res;
  auto coords = la::coordinates_in_span(k, span, target);
  if (coords) {
    res.member = true;
    res.coordinates = *coords;
  }
  return res;
}

}  // namespace splinter::poly
