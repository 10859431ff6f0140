#include "splinter/gf.hpp"

#include <algorithm>
#include <sstream>

namespace splinter::gf {

namespace {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomial arithmetic over F_p on raw residue vectors, constant term
// first.  Only used for modulus validation.
using PV = std::vector<uint32_t>;

void pv_trim(PV& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a by monic-leading b (leading coefficient inverted mod p).
PV pv_rem(PV a, const PV& b, uint32_t p) {
  pv_trim(a);
  if (b.empty()) fail(Errc::Internal, "division by zero polynomial");
  uint32_t lead = b.back();
  // Invert lead mod p by Fermat.
  uint64_t inv = 1, base = lead, e = p - 2;
  while (e) {
    if (e & 1) inv = inv * base % p;
    base = base * base % p;
    e >>= 1;
  }
  while (a.size() >= b.size()) {
    uint64_t q = a.back() % p * inv % p;
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) {
      uint64_t sub = q * b[i] % p;
      a[shift + i] = (a[shift + i] + p - sub) % p;
    }
    pv_trim(a);
  }
  return a;
}

bool modulus_irreducible(const std::vector<uint16_t>& mod, uint32_t p) {
  PV m(mod.begin(), mod.end());
  int e = static_cast<int>(m.size()) - 1;
  // Trial division by every monic polynomial of degree 1..e/2.
  for (int d = 1; 2 * d <= e; ++d) {
    uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
      PV cand(d + 1, 0);
      cand[d] = 1;
      uint64_t t = idx;
      for (int i = 0; i < d; ++i) {
        cand[i] = t % p;
        t /= p;
      }
      if (pv_rem(m, cand, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FieldCtx::FieldCtx(uint32_t p) : p_(p), e_(1) {
  if (!is_prime(p)) fail(Errc::Validation, "field characteristic must be prime, got " + std::to_string(p));
  if (p > 65536u) fail(Errc::Validation, "field order exceeds 2^16");
  order_ = p;
}

FieldCtx::FieldCtx(uint32_t p, const std::vector<uint16_t>& modulus) : p_(p) {
  if (!is_prime(p)) fail(Errc::Validation, "field characteristic must be prime, got " + std::to_string(p));
  if (modulus.size() < 3) fail(Errc::Validation, "extension modulus must have degree >= 2");
  e_ = static_cast<int>(modulus.size()) - 1;
  if (e_ > kMaxExtDegree) fail(Errc::Validation, "extension degree too large");
  uint64_t q = 1;
  for (int i = 0; i < e_; ++i) {
    q *= p;
    if (q > 65536u) fail(Errc::Validation, "field order exceeds 2^16");
  }
  order_ = static_cast<uint32_t>(q);
  if (modulus.back() != 1) fail(Errc::Validation, "modulus must be monic");
  for (uint16_t c : modulus)
    if (c >= p) fail(Errc::Validation, "modulus coefficient out of range");
  if (!modulus_irreducible(modulus, p)) fail(Errc::Validation, "modulus is reducible over F_p");
  modulus_ = modulus;
}

FieldElement FieldCtx::one() const {
  FieldElement r;
  r.c[0] = 1;
  return r;
}

FieldElement FieldCtx::gen() const {
  FieldElement r;
  if (e_ == 1)
    r.c[0] = 1;
  else
    r.c[1] = 1;
  return r;
}

FieldElement FieldCtx::from_int(int64_t v) const {
  int64_t m = v % static_cast<int64_t>(p_);
  if (m < 0) m += p_;
  FieldElement r;
  r.c[0] = static_cast<uint16_t>(m);
  return r;
}

FieldElement FieldCtx::from_coords(const std::vector<uint16_t>& coords) const {
  if (static_cast<int>(coords.size()) > e_) fail(Errc::Validation, "coordinate vector longer than extension degree");
  FieldElement r;
  for (size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] >= p_) fail(Errc::Validation, "coordinate out of range");
    r.c[i] = coords[i];
  }
  return r;
}

FieldElement FieldCtx::add(const FieldElement& a, const FieldElement& b) const {
  FieldElement r;
  for (int i = 0; i < e_; ++i) r.c[i] = static_cast<uint16_t>((a.c[i] + b.c[i]) % p_);
  return r;
}

FieldElement FieldCtx::sub(const FieldElement& a, const FieldElement& b) const {
  FieldElement r;
  for (int i = 0; i < e_; ++i) r.c[i] = static_cast<uint16_t>((a.c[i] + p_ - b.c[i]) % p_);
  return r;
}

FieldElement FieldCtx::neg(const FieldElement& a) const { return sub(zero(), a); }

FieldElement FieldCtx::mul(const FieldElement& a, const FieldElement& b) const {
  if (e_ == 1) {
    FieldElement r;
    r.c[0] = static_cast<uint16_t>(static_cast<uint64_t>(a.c[0]) * b.c[0] % p_);
    return r;
  }
  std::array<uint32_t, 2 * kMaxExtDegree> prod{};
  for (int i = 0; i < e_; ++i) {
    if (!a.c[i]) continue;
    for (int j = 0; j < e_; ++j)
      prod[i + j] = static_cast<uint32_t>((prod[i + j] + static_cast<uint64_t>(a.c[i]) * b.c[j]) % p_);
  }
  // Reduce modulo the monic modulus.
  for (int d = 2 * e_ - 2; d >= e_; --d) {
    uint32_t top = prod[d];
    if (!top) continue;
    prod[d] = 0;
    for (int i = 0; i < e_; ++i) {
      uint64_t sub = static_cast<uint64_t>(top) * modulus_[i] % p_;
      prod[d - e_ + i] = static_cast<uint32_t>((prod[d - e_ + i] + p_ - sub) % p_);
    }
  }
  FieldElement r;
  for (int i = 0; i < e_; ++i) r.c[i] = static_cast<uint16_t>(prod[i]);
  return r;
}

FieldElement FieldCtx::pow(const FieldElement& a, uint64_t n) const {
  FieldElement r = one(), base = a;
  while (n) {
    if (n & 1) r = mul(r, base);
    base = mul(base, base);
    n >>= 1;
  }
  return r;
}

FieldElement FieldCtx::inv(const FieldElement& a) const {
  if (is_zero(a)) fail(Errc::DivisionByZero, "inverse of zero");
  return pow(a, static_cast<uint64_t>(order_) - 2);
}

FieldElement FieldCtx::div(const FieldElement& a, const FieldElement& b) const { return mul(a, inv(b)); }

FieldElement FieldCtx::frobenius(const FieldElement& a, int e_pow) const {
  FieldElement r = a;
  for (int i = 0; i < e_pow; ++i) r = pow(r, p_);
  return r;
}

std::vector<FieldElement> FieldCtx::elements() const {
  std::vector<FieldElement> out;
  out.reserve(order_);
  FieldElement cur;
  for (uint32_t idx = 0; idx < order_; ++idx) {
    uint32_t t = idx;
    for (int i = 0; i < e_; ++i) {
      cur.c[i] = static_cast<uint16_t>(t % p_);
      t /= p_;
    }
    out.push_back(cur);
  }
  return out;
}

std::string FieldCtx::to_string(const FieldElement& a) const {
  if (e_ == 1) return std::to_string(a.c[0]);
  std::ostringstream os;
  bool first = true;
  for (int i = e_ - 1; i >= 0; --i) {
    if (!a.c[i]) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || a.c[i] != 1) os << a.c[i];
    if (i >= 1) {
      if (a.c[i] != 1) os << "*";
      os << "T";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

PPolynomial ppoly_x_to_p(const FieldCtx& ctx) {
  PPolynomial g;
  g.height = 1;
  g.lower = {ctx.zero()};
  return g;
}

FieldElement ppoly_eval_scalar(const FieldCtx& ctx, const PPolynomial& g, const FieldElement& x) {
  if (g.height < 1 || static_cast<int>(g.lower.size()) != g.height)
    fail(Errc::Validation, "malformed additive polynomial");
  FieldElement acc = ctx.frobenius(x, g.height);
  FieldElement pw = x;  // x^(p^i)
  for (int i = 0; i < g.height; ++i) {
    acc = ctx.add(acc, ctx.mul(g.lower[i], pw));
    pw = ctx.pow(pw, ctx.p());
  }
  return acc;
}

std::string ppoly_to_string(const FieldCtx& ctx, const PPolynomial& g) {
  std::ostringstream os;
  uint64_t top = 1;
  for (int i = 0; i < g.height; ++i) top *= ctx.p();
  os << "X^" << top;
  for (int i = g.height - 1; i >= 0; --i) {
    if (ctx.is_zero(g.lower[i])) continue;
    uint64_t q = 1;
    for (int j = 0; j < i; ++j) q *= ctx.p();
    os << " + (" << ctx.to_string(g.lower[i]) << ")";
    if (i > 0) os << "*X^" << q;
    else os << "*X";
  }
  return os.str();
}

FieldCtx extension_of_degree(uint32_t p, int e) {
  if (e <= 1) return FieldCtx(p);
  uint64_t count = 1;
  for (int i = 0; i < e; ++i) count *= p;
  for (uint64_t idx = 0; idx < count; ++idx) {
    std::vector<uint16_t> mod(e + 1, 0);
    mod[e] = 1;
    uint64_t t = idx;
    for (int i = 0; i < e; ++i) {
      mod[i] = static_cast<uint16_t>(t % p);
      t /= p;
    }
    if (modulus_irreducible(mod, p)) return FieldCtx(p, mod);
  }
  fail(Errc::Internal, "no irreducible modulus found");
}

UPoly UPoly::constant(const FieldElement& a) {
  if (a == FieldElement{}) return UPoly();
  return UPoly(std::vector<FieldElement>{a});
}

const FieldElement& UPoly::coeff(size_t i) const {
  static const FieldElement z{};
  return i < c_.size() ? c_[i] : z;
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == FieldElement{}) c_.pop_back();
}

UPoly UPoly::add(const FieldCtx& k, const UPoly& o) const {
  std::vector<FieldElement> r(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < r.size(); ++i) r[i] = k.add(coeff(i), o.coeff(i));
  return UPoly(std::move(r));
}

UPoly UPoly::sub(const FieldCtx& k, const UPoly& o) const {
  std::vector<FieldElement> r(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < r.size(); ++i) r[i] = k.sub(coeff(i), o.coeff(i));
  return UPoly(std::move(r));
}

UPoly UPoly::mul(const FieldCtx& k, const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly();
  std::vector<FieldElement> r(c_.size() + o.c_.size() - 1, FieldElement{});
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = k.add(r[i + j], k.mul(c_[i], o.c_[j]));
  return UPoly(std::move(r));
}

std::pair<UPoly, UPoly> UPoly::divmod(const FieldCtx& k, const UPoly& d) const {
  if (d.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
  FieldElement lead_inv = k.inv(d.c_.back());
  std::vector<FieldElement> rem = c_;
  std::vector<FieldElement> quo(c_.size() > d.c_.size() - 1 ? c_.size() - d.c_.size() + 1 : 0, FieldElement{});
  int dd = d.degree();
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    if (rem[i] == FieldElement{}) continue;
    FieldElement q = k.mul(rem[i], lead_inv);
    quo[i - dd] = q;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] = k.sub(rem[i - dd + j], k.mul(q, d.c_[j]));
  }
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly UPoly::monic(const FieldCtx& k) const {
  if (is_zero()) return *this;
  FieldElement inv = k.inv(c_.back());
  std::vector<FieldElement> r = c_;
  for (auto& x : r) x = k.mul(x, inv);
  return UPoly(std::move(r));
}

FieldElement UPoly::eval(const FieldCtx& k, const FieldElement& x) const {
  FieldElement acc{};
  for (int i = degree(); i >= 0; --i) acc = k.add(k.mul(acc, x), c_[i]);
  return acc;
}

UPoly UPoly::gcd(const FieldCtx& k, UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a.divmod(k, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic(k);
}

}  // namespace splinter::gf
