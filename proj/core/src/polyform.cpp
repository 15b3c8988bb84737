#include "holoforms/polyform.hpp"

#include <algorithm>
#include <stdexcept>

#include "holoforms/combinatorics.hpp"

namespace holoforms {

PolyCoef::PolyCoef(const Rational& c) { add_monomial(0, c); }

PolyCoef PolyCoef::variable(int v) {
  if (v < 0 || v >= kMaxVars) throw std::invalid_argument("variable index out of range");
  PolyCoef p;
  p.add_monomial(std::uint64_t(1) << (8 * v), Rational(1));
  return p;
}

PolyCoef PolyCoef::monomial(const Rational& c, const std::vector<int>& exponents) {
  if (exponents.size() > kMaxVars) throw std::invalid_argument("too many chart variables");
  std::uint64_t key = 0;
  for (std::size_t v = 0; v < exponents.size(); ++v) {
    if (exponents[v] < 0 || exponents[v] > 255)
      throw std::invalid_argument("exponent out of range");
    key |= std::uint64_t(exponents[v]) << (8 * v);
  }
  PolyCoef p;
  p.add_monomial(key, c);
  return p;
}

bool PolyCoef::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational PolyCoef::constant_term() const {
  auto it = terms_.find(0);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PolyCoef::add_monomial(std::uint64_t key, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolyCoef PolyCoef::operator-() const {
  PolyCoef p;
  for (const auto& [k, c] : terms_) p.terms_.emplace(k, -c);
  return p;
}

PolyCoef& PolyCoef::operator+=(const PolyCoef& o) {
  for (const auto& [k, c] : o.terms_) add_monomial(k, c);
  return *this;
}

PolyCoef& PolyCoef::operator-=(const PolyCoef& o) {
  for (const auto& [k, c] : o.terms_) add_monomial(k, -c);
  return *this;
}

PolyCoef operator*(const PolyCoef& a, const PolyCoef& b) {
  PolyCoef p;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      for (int v = 0; v < PolyCoef::kMaxVars; ++v)
        if (PolyCoef::exponent(ka, v) + PolyCoef::exponent(kb, v) > 255)
          throw std::overflow_error("polynomial exponent overflow");
      p.add_monomial(ka + kb, ca * cb);
    }
  return p;
}

PolyCoef& PolyCoef::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

PolyCoef PolyCoef::derivative(int v) const {
  PolyCoef p;
  for (const auto& [k, c] : terms_) {
    int e = exponent(k, v);
    if (e == 0) continue;
    p.add_monomial(k - (std::uint64_t(1) << (8 * v)), c * Rational(e));
  }
  return p;
}

std::string PolyCoef::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string mono;
    for (int v = 0; v < kMaxVars; ++v) {
      int e = exponent(k, v);
      if (e == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "x" + std::to_string(v + 1);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    std::string term;
    if (mono.empty()) {
      term = c.str();
    } else if (c == Rational(1)) {
      term = mono;
    } else if (c == Rational(-1)) {
      term = "-" + mono;
    } else {
      term = c.str() + "*" + mono;
    }
    if (!first && term[0] != '-') out += '+';
    out += term;
    first = false;
  }
  return out;
}

PolyForm::PolyForm(int dim, int degree) : dim_(dim), degree_(degree) {
  if (dim < 0 || dim > PolyCoef::kMaxVars) throw std::invalid_argument("chart dim out of range");
  if (degree < 0 || degree > dim) throw std::invalid_argument("form degree out of range");
}

PolyForm PolyForm::basis(int dim, Mask s, PolyCoef c) {
  PolyForm f(dim, mask_size(s));
  f.add_term(s, c);
  return f;
}

PolyCoef PolyForm::coefficient(Mask s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? PolyCoef() : it->second;
}

void PolyForm::add_term(Mask s, const PolyCoef& c) {
  if (c.is_zero()) return;
  if (mask_size(s) != degree_ || (s >> dim_) != 0)
    throw std::invalid_argument("term does not match form degree");
  auto [it, inserted] = terms_.emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolyForm PolyForm::operator-() const {
  PolyForm f(dim_, degree_);
  for (const auto& [s, c] : terms_) f.terms_.emplace(s, -c);
  return f;
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("chart mismatch");
  if (terms_.empty()) degree_ = o.degree_;
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("chart mismatch");
  if (terms_.empty()) degree_ = o.degree_;
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
  return *this;
}

PolyForm& PolyForm::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, v] : terms_) v *= c;
  return *this;
}

std::string PolyForm::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    if (s == 0) {
      out += "(" + c.str() + ")";
      continue;
    }
    out += "(" + c.str() + ")*e";
    for (int a = 0; a < dim_; ++a)
      if (mask_contains(s, a)) out += std::to_string(a + 1);
  }
  return out;
}

PolyVectorForm::PolyVectorForm(int dim, int lower_degree)
    : dim_(dim), lower_degree_(lower_degree) {
  if (dim < 0 || dim > PolyCoef::kMaxVars) throw std::invalid_argument("chart dim out of range");
  if (lower_degree < 0 || lower_degree > dim)
    throw std::invalid_argument("lower degree out of range");
}

PolyCoef PolyVectorForm::coefficient(int upper, Mask lower) const {
  auto it = terms_.find(Key{static_cast<std::uint8_t>(upper), lower});
  return it == terms_.end() ? PolyCoef() : it->second;
}

void PolyVectorForm::add_term(int upper, Mask lower, const PolyCoef& c) {
  if (c.is_zero()) return;
  if (upper < 0 || upper >= dim_) throw std::invalid_argument("upper index out of range");
  if (mask_size(lower) != lower_degree_ || (lower >> dim_) != 0)
    throw std::invalid_argument("term does not match lower degree");
  Key key{static_cast<std::uint8_t>(upper), lower};
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolyForm PolyVectorForm::slot(int upper) const {
  PolyForm f(dim_, lower_degree_);
  for (const auto& [k, c] : terms_)
    if (k.upper == upper) f.add_term(k.lower, c);
  return f;
}

PolyVectorForm PolyVectorForm::operator-() const {
  PolyVectorForm f(dim_, lower_degree_);
  for (const auto& [k, c] : terms_) f.terms_.emplace(k, -c);
  return f;
}

PolyVectorForm& PolyVectorForm::operator+=(const PolyVectorForm& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("chart mismatch");
  if (terms_.empty()) lower_degree_ = o.lower_degree_;
  for (const auto& [k, c] : o.terms_) add_term(k.upper, k.lower, c);
  return *this;
}

PolyVectorForm& PolyVectorForm::operator-=(const PolyVectorForm& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("chart mismatch");
  if (terms_.empty()) lower_degree_ = o.lower_degree_;
  for (const auto& [k, c] : o.terms_) add_term(k.upper, k.lower, -c);
  return *this;
}

PolyVectorForm& PolyVectorForm::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("chart mismatch");
  int deg = a.degree() + b.degree();
  if (deg > a.dim()) return PolyForm(a.dim(), 0);
  PolyForm out(a.dim(), deg);
  for (const auto& [s, c] : a.terms())
    for (const auto& [t, d] : b.terms()) {
      if (s & t) continue;
      PolyCoef prod = c * d;
      if (merge_sign(s, t) < 0) prod = -prod;
      out.add_term(s | t, prod);
    }
  return out;
}

PolyForm d(const PolyForm& phi) {
  if (phi.degree() + 1 > phi.dim()) return PolyForm(phi.dim(), 0);
  PolyForm out(phi.dim(), phi.degree() + 1);
  for (const auto& [s, c] : phi.terms())
    for (int v = 0; v < phi.dim(); ++v) {
      if (mask_contains(s, v)) continue;
      PolyCoef dc = c.derivative(v);
      if (dc.is_zero()) continue;
      if (merge_sign(Mask(1) << v, s) < 0) dc = -dc;
      out.add_term(s | (Mask(1) << v), dc);
    }
  return out;
}

PolyForm inner(const PolyVectorForm& L, const PolyForm& phi) {
  if (L.dim() != phi.dim()) throw std::invalid_argument("chart mismatch");
  int p = phi.degree();
  int ell = L.lower_degree();
  if (p == 0 || p + ell - 1 > phi.dim()) return PolyForm(phi.dim(), 0);
  PolyForm out(phi.dim(), p + ell - 1);
  for (const auto& [key, lc] : L.terms()) {
    Mask nbit = Mask(1) << key.upper;
    for (const auto& [s, c] : phi.terms()) {
      if (!(s & nbit)) continue;
      Mask t = s & ~nbit;
      if (t & key.lower) continue;
      int sign = contraction_sign(s, key.upper) * merge_sign(key.lower, t);
      PolyCoef prod = lc * c;
      if (sign < 0) prod = -prod;
      out.add_term(key.lower | t, prod);
    }
  }
  return out;
}

PolyForm d_L(const PolyVectorForm& L, const PolyForm& phi) {
  PolyForm out = inner(L, d(phi));
  PolyForm second = d(inner(L, phi));
  if (L.lower_degree() & 1)
    out -= second;
  else
    out += second;
  return out;
}

PolyVectorForm vf_barwedge(const PolyVectorForm& l, const PolyVectorForm& m) {
  if (l.dim() != m.dim()) throw std::invalid_argument("chart mismatch");
  int out_deg = l.lower_degree() + m.lower_degree() - 1;
  if (out_deg < 0 || out_deg > l.dim()) return PolyVectorForm(l.dim(), 0);
  PolyVectorForm out(l.dim(), out_deg);
  for (int mu = 0; mu < m.dim(); ++mu) {
    PolyForm slot = inner(l, m.slot(mu));
    for (const auto& [s, c] : slot.terms()) out.add_term(mu, s, c);
  }
  return out;
}

namespace {

// Fully antisymmetric component at an arbitrary index tuple.
PolyCoef dense_component(const PolyVectorForm& L, int mu, std::vector<int> tuple) {
  int sign = sort_sign(tuple);
  if (sign == 0) return PolyCoef();
  PolyCoef c = L.coefficient(mu, tuple_mask(tuple));
  return sign < 0 ? -c : c;
}

// The unantisymmetrized Nijenhuis integrand
//   T^mu_{LM} = L^v_L d_v M^mu_M - M^v_M d_v L^mu_L
//             - l L^mu_{v L2} d_{l1} M^v_M + m M^mu_{v M2} d_{m1} L^v_L
// at one (lt, mt) split of the lower indices.
PolyCoef nijenhuis_integrand(const PolyVectorForm& L, const PolyVectorForm& M, int mu,
                             const std::vector<int>& lt, const std::vector<int>& mt) {
  int n = L.dim();
  int ell = static_cast<int>(lt.size());
  int m = static_cast<int>(mt.size());
  PolyCoef t;
  for (int v = 0; v < n; ++v) {
    t += dense_component(L, v, lt) * dense_component(M, mu, mt).derivative(v);
    t -= dense_component(M, v, mt) * dense_component(L, mu, lt).derivative(v);
  }
  if (ell >= 1) {
    std::vector<int> vl2(lt.begin(), lt.end());
    for (int v = 0; v < n; ++v) {
      vl2[0] = v;
      t -= Rational(ell) *
           (dense_component(L, mu, vl2) * dense_component(M, v, mt).derivative(lt[0]));
    }
  }
  if (m >= 1) {
    std::vector<int> vm2(mt.begin(), mt.end());
    for (int v = 0; v < n; ++v) {
      vm2[0] = v;
      t += Rational(m) *
           (dense_component(M, mu, vm2) * dense_component(L, v, lt).derivative(mt[0]));
    }
  }
  return t;
}

}  // namespace

PolyVectorForm nijenhuis(const PolyVectorForm& L, const PolyVectorForm& M) {
  if (L.dim() != M.dim()) throw std::invalid_argument("chart mismatch");
  int n = L.dim();
  int ell = L.lower_degree();
  int m = M.lower_degree();
  int k = ell + m;
  if (k > n) return PolyVectorForm(n, 0);
  PolyVectorForm out(n, k);
  Rational norm = Rational(1) / (Rational::factorial(static_cast<unsigned>(ell)) *
                                 Rational::factorial(static_cast<unsigned>(m)));
  for (int mu = 0; mu < n; ++mu) {
    std::vector<int> comb = first_combination(k);
    if (k == 0) {
      out.add_term(mu, 0, nijenhuis_integrand(L, M, mu, {}, {}));
      continue;
    }
    do {
      PolyCoef acc;
      std::vector<int> perm = comb;
      do {
        PolyCoef t = nijenhuis_integrand(
            L, M, mu, std::vector<int>(perm.begin(), perm.begin() + ell),
            std::vector<int>(perm.begin() + ell, perm.end()));
        if (permutation_sign(perm) < 0)
          acc -= t;
        else
          acc += t;
      } while (std::next_permutation(perm.begin(), perm.end()));
      acc *= norm;
      out.add_term(mu, tuple_mask(comb), acc);
    } while (next_combination(comb, n));
  }
  return out;
}

PolyForm lie_derivative(const PolyVectorForm& X, const PolyForm& phi) {
  if (X.dim() != phi.dim()) throw std::invalid_argument("chart mismatch");
  if (X.lower_degree() != 0) throw std::invalid_argument("lie_derivative needs a vector field");
  int n = phi.dim();
  int p = phi.degree();
  PolyForm out(n, p);
  std::vector<int> comb = first_combination(p);
  bool more = true;
  while (more) {
    PolyCoef acc;
    Mask s = tuple_mask(comb);
    for (int v = 0; v < n; ++v) {
      PolyCoef xv = X.coefficient(v, 0);
      if (!xv.is_zero()) acc += xv * phi.coefficient(s).derivative(v);
    }
    for (int j = 0; j < p; ++j) {
      for (int v = 0; v < n; ++v) {
        PolyCoef dx = X.coefficient(v, 0).derivative(comb[j]);
        if (dx.is_zero()) continue;
        std::vector<int> t = comb;
        t[j] = v;
        int sign = sort_sign(t);
        if (sign == 0) continue;
        PolyCoef c = phi.coefficient(tuple_mask(t));
        if (sign < 0) c = -c;
        acc += dx * c;
      }
    }
    out.add_term(s, acc);
    more = p > 0 && next_combination(comb, n);
    if (p == 0) break;
  }
  return out;
}

PolyVectorForm identity_poly_vector_form(int dim) {
  PolyVectorForm id(dim, 1);
  for (int v = 0; v < dim; ++v) id.add_term(v, Mask(1) << v, PolyCoef(Rational(1)));
  return id;
}

PolyCoef random_polycoef(SplitMix64& rng, int dim, int max_deg, int max_terms) {
  PolyCoef out;
  int nt = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms) + 1));
  for (int t = 0; t < nt; ++t) {
    int deg = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_deg) + 1));
    std::vector<int> expo(dim, 0);
    for (int k = 0; k < deg; ++k) ++expo[rng.below(static_cast<std::uint64_t>(dim))];
    out += PolyCoef::monomial(random_rational(rng, 4, 2), expo);
  }
  return out;
}

PolyForm random_polyform(SplitMix64& rng, int dim, int degree, int max_terms) {
  if (degree > dim) return PolyForm(dim, 0);
  PolyForm out(dim, degree);
  for (int t = 0; t < max_terms; ++t) {
    Mask s = 0;
    while (mask_size(s) < degree) s |= Mask(1) << rng.below(static_cast<std::uint64_t>(dim));
    out.add_term(s, random_polycoef(rng, dim));
  }
  return out;
}

PolyVectorForm random_polyvectorform(SplitMix64& rng, int dim, int lower_degree,
                                     int max_terms) {
  if (lower_degree > dim) return PolyVectorForm(dim, 0);
  PolyVectorForm out(dim, lower_degree);
  for (int t = 0; t < max_terms; ++t) {
    Mask s = 0;
    while (mask_size(s) < lower_degree)
      s |= Mask(1) << rng.below(static_cast<std::uint64_t>(dim));
    int mu = static_cast<int>(rng.below(static_cast<std::uint64_t>(dim)));
    out.add_term(mu, s, random_polycoef(rng, dim));
  }
  return out;
}

namespace {

Rational pm(int k) { return (k & 1) ? Rational(-1) : Rational(1); }

PolyForm commutator(const PolyForm& ab, const PolyForm& ba, int dega, int degb) {
  PolyForm out = ab;
  PolyForm swapped = ba;
  swapped *= pm(dega * degb);
  out -= swapped;
  return out;
}

}  // namespace

ExincomReport verify_exincom(std::uint64_t seed, int trials) {
  SplitMix64 rng(seed);
  ExincomReport rep;
  rep.trials = trials;
  for (int trial = 0; trial < trials; ++trial) {
    int n = 2 + static_cast<int>(rng.below(3));
    int ell = static_cast<int>(rng.below(3));
    int m = static_cast<int>(rng.below(3));
    PolyVectorForm L = random_polyvectorform(rng, n, ell);
    PolyVectorForm M = random_polyvectorform(rng, n, m);
    int p = static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 1));
    PolyForm phi = random_polyform(rng, n, p);

    PolyVectorForm N = nijenhuis(L, M);
    PolyVectorForm LbwM = vf_barwedge(L, M);
    PolyVectorForm MbwL = vf_barwedge(M, L);
    bool nontrivial = false;

    auto record = [&](int identity, const PolyForm& lhs, const PolyForm& rhs) {
      if (!lhs.is_zero() || !rhs.is_zero()) nontrivial = true;
      if (lhs == rhs) return;
      PolyForm diff = lhs;
      diff -= rhs;
      rep.failures.push_back(
          {trial, n, ell, m, identity,
           "lhs-rhs = " + diff.str() + "  phi = " + phi.str()});
    };

    // [d_L, d_M] = d_N with derivation degrees (ell, m)
    record(1, commutator(d_L(L, d_L(M, phi)), d_L(M, d_L(L, phi)), ell, m),
           d_L(N, phi));

    // [i_L, d_M] = d_{L bw M} + (-1)^m i_N, degrees (ell-1, m)
    {
      PolyForm lhs = commutator(inner(L, d_L(M, phi)), d_L(M, inner(L, phi)), ell - 1, m);
      PolyForm rhs = d_L(LbwM, phi);
      PolyForm tail = inner(N, phi);
      tail *= pm(m);
      rhs += tail;
      record(2, lhs, rhs);
    }

    // [i_L, i_M] = i_{L bw M} + (-1)^{l+m+ml} i_{M bw L}, degrees (ell-1, m-1)
    {
      PolyForm lhs =
          commutator(inner(L, inner(M, phi)), inner(M, inner(L, phi)), ell - 1, m - 1);
      PolyForm rhs = inner(LbwM, phi);
      PolyForm tail = inner(MbwL, phi);
      tail *= pm(ell + m + m * ell);
      rhs += tail;
      record(3, lhs, rhs);
    }

    if (nontrivial) ++rep.nontrivial;
  }
  return rep;
}

}  // namespace holoforms
