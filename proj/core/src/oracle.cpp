#include "holoforms/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "holoforms/combinatorics.hpp"

namespace holoforms::oracle {

DenseForm::DenseForm(int n_, int k_) : n(n_), k(k_), a(ipow(n_, k_)) {}

std::size_t DenseForm::flat(const std::vector<int>& t) const {
  std::size_t f = 0;
  for (int i : t) f = f * static_cast<std::size_t>(n) + static_cast<std::size_t>(i);
  return f;
}

DenseVectorForm::DenseVectorForm(int n_, int l_) : n(n_), l(l_), a(ipow(n_, l_ + 1)) {}

std::size_t DenseVectorForm::flat(int upper, const std::vector<int>& t) const {
  std::size_t f = static_cast<std::size_t>(upper);
  for (int i : t) f = f * static_cast<std::size_t>(n) + static_cast<std::size_t>(i);
  return f;
}

DenseForm densify(const Form& f) {
  DenseForm d(f.frame().dim, f.degree());
  for (const auto& [mask, c] : f.terms()) {
    std::vector<int> idx;
    for (int i = 0; i < f.frame().dim; ++i)
      if (mask_contains(mask, i)) idx.push_back(i);
    std::vector<int> perm = idx;
    std::sort(perm.begin(), perm.end());
    do {
      // Sign of perm as a rearrangement of the sorted tuple.
      std::vector<int> pos(perm.size());
      for (std::size_t i = 0; i < perm.size(); ++i)
        pos[i] = static_cast<int>(std::lower_bound(idx.begin(), idx.end(), perm[i]) - idx.begin());
      d.set(perm, c * Scalar(Rational(permutation_sign(pos))));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return d;
}

DenseVectorForm densify(const VectorForm& vf) {
  DenseVectorForm d(vf.frame().dim, vf.lower_degree());
  for (const auto& [key, c] : vf.terms()) {
    std::vector<int> idx;
    for (int i = 0; i < vf.frame().dim; ++i)
      if (mask_contains(key.lower, i)) idx.push_back(i);
    std::vector<int> perm = idx;
    do {
      std::vector<int> pos(perm.size());
      for (std::size_t i = 0; i < perm.size(); ++i)
        pos[i] = static_cast<int>(std::lower_bound(idx.begin(), idx.end(), perm[i]) - idx.begin());
      d.set(key.upper, perm, c * Scalar(Rational(permutation_sign(pos))));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return d;
}

Form sparsify(const DenseForm& d, const FrameContext& frame) {
  if (frame.dim != d.n) throw std::invalid_argument("sparsify frame mismatch");
  if (d.k > d.n) return Form(frame, 0);  // necessarily zero
  Form f(frame, d.k);
  if (d.k == 0) {
    f.add_term(0, d.a[0]);
    return f;
  }
  std::vector<int> c = first_combination(d.k);
  do {
    f.add_term(tuple_mask(c), d.get(c));
  } while (next_combination(c, d.n));
  return f;
}

DenseForm dense_wedge(const DenseForm& x, const DenseForm& y) {
  if (x.n != y.n) throw std::invalid_argument("dense wedge dimension mismatch");
  const int p = x.k, q = y.k, n = x.n;
  if (p + q > n) return DenseForm(n, 0);  // forced zero; avoid the n^(p+q) allocation
  DenseForm out(n, p + q);
  Scalar prefactor(Rational(1) / (Rational::factorial(static_cast<unsigned>(p)) *
                                  Rational::factorial(static_cast<unsigned>(q))));
  std::vector<int> tuple = first_combination(p + q);
  do {
    std::vector<int> order(static_cast<std::size_t>(p + q));
    std::iota(order.begin(), order.end(), 0);
    Scalar total(0);
    do {
      std::vector<int> left, right;
      for (int i = 0; i < p; ++i) left.push_back(tuple[static_cast<std::size_t>(order[i])]);
      for (int i = p; i < p + q; ++i) right.push_back(tuple[static_cast<std::size_t>(order[i])]);
      const Scalar& xv = x.get(left);
      if (xv.is_zero()) continue;
      const Scalar& yv = y.get(right);
      if (yv.is_zero()) continue;
      total += xv * yv * Scalar(Rational(permutation_sign(order)));
    } while (std::next_permutation(order.begin(), order.end()));
    total *= prefactor;
    if (!total.is_zero()) {
      // Fill the full antisymmetric orbit of this increasing tuple.
      std::vector<int> perm = tuple;
      do {
        std::vector<int> pos(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i)
          pos[i] =
              static_cast<int>(std::lower_bound(tuple.begin(), tuple.end(), perm[i]) - tuple.begin());
        out.set(perm, total * Scalar(Rational(permutation_sign(pos))));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  } while (next_combination(tuple, n));
  return out;
}

DenseVectorForm dense_raise(const DenseForm& phi, const FrameContext& frame) {
  if (phi.k < 1) throw std::invalid_argument("dense raise needs degree >= 1");
  const int n = phi.n;
  DenseVectorForm out(n, phi.k - 1);
  std::vector<int> rest(static_cast<std::size_t>(phi.k - 1));
  // Iterate over all (k-1)-tuples, not only increasing ones.
  std::size_t count = ipow(n, phi.k - 1);
  for (std::size_t flat = 0; flat < count; ++flat) {
    std::size_t f = flat;
    for (int i = phi.k - 2; i >= 0; --i) {
      rest[static_cast<std::size_t>(i)] = static_cast<int>(f % static_cast<std::size_t>(n));
      f /= static_cast<std::size_t>(n);
    }
    for (int mu = 0; mu < n; ++mu) {
      Scalar total(0);
      for (int rho = 0; rho < n; ++rho) {
        Rational g = frame.inverse_metric(mu, rho);
        if (g.is_zero()) continue;
        std::vector<int> full;
        full.push_back(rho);
        full.insert(full.end(), rest.begin(), rest.end());
        total += Scalar(g) * phi.get(full);
      }
      out.set(mu, rest, total);
    }
  }
  return out;
}

DenseForm dense_inner(const DenseVectorForm& l, const DenseForm& phi) {
  if (l.n != phi.n) throw std::invalid_argument("dense inner dimension mismatch");
  const int n = phi.n, ell = l.l, p = phi.k;
  if (p < 1) throw std::invalid_argument("dense inner needs form degree >= 1");
  const int r = ell + p - 1;
  if (r > n) return DenseForm(n, 0);  // forced zero; avoid the n^r allocation
  DenseForm out(n, r);
  Scalar prefactor(Rational(1) / (Rational::factorial(static_cast<unsigned>(ell)) *
                                  Rational::factorial(static_cast<unsigned>(p - 1))));
  std::vector<int> tuple = first_combination(r);
  if (r == 0) {
    // Degenerate: ell = 0, p = 1; i_X phi = X^mu phi_mu.
    Scalar total(0);
    std::vector<int> empty;
    for (int mu = 0; mu < n; ++mu) {
      std::vector<int> single{mu};
      total += l.get(mu, empty) * phi.get(single);
    }
    out.a[0] = total;
    return out;
  }
  do {
    std::vector<int> order(static_cast<std::size_t>(r));
    std::iota(order.begin(), order.end(), 0);
    Scalar total(0);
    do {
      std::vector<int> first, rest;
      for (int i = 0; i < ell; ++i) first.push_back(tuple[static_cast<std::size_t>(order[i])]);
      for (int i = ell; i < r; ++i) rest.push_back(tuple[static_cast<std::size_t>(order[i])]);
      Scalar inner_sum(0);
      for (int mu = 0; mu < n; ++mu) {
        const Scalar& lv = l.get(mu, first);
        if (lv.is_zero()) continue;
        std::vector<int> full;
        full.push_back(mu);
        full.insert(full.end(), rest.begin(), rest.end());
        inner_sum += lv * phi.get(full);
      }
      if (!inner_sum.is_zero())
        total += inner_sum * Scalar(Rational(permutation_sign(order)));
    } while (std::next_permutation(order.begin(), order.end()));
    total *= prefactor;
    if (!total.is_zero()) {
      std::vector<int> perm = tuple;
      do {
        std::vector<int> pos(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i)
          pos[i] =
              static_cast<int>(std::lower_bound(tuple.begin(), tuple.end(), perm[i]) - tuple.begin());
        out.set(perm, total * Scalar(Rational(permutation_sign(pos))));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  } while (next_combination(tuple, n));
  return out;
}

DenseForm dense_barwedge(const DenseForm& lambda, const DenseForm& chi,
                         const FrameContext& frame) {
  return dense_inner(dense_raise(lambda, frame), chi);
}

Form random_form(SplitMix64& rng, const FrameContext& frame, int degree, int max_terms) {
  Form f(frame, degree);
  if (degree > frame.dim) throw std::invalid_argument("random form degree too large");
  int terms = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms)));
  for (int t = 0; t < terms; ++t) {
    Mask m = 0;
    while (mask_size(m) < degree)
      m |= Mask(1) << rng.below(static_cast<std::uint64_t>(frame.dim));
    f.add_term(m, random_scalar(rng, 6, 3));
  }
  return f;
}

VectorForm random_vector_form(SplitMix64& rng, const FrameContext& frame, int lower_degree,
                              int max_terms) {
  VectorForm vf(frame, lower_degree);
  if (lower_degree > frame.dim) throw std::invalid_argument("random vector-form degree too large");
  int terms = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms)));
  for (int t = 0; t < terms; ++t) {
    Mask m = 0;
    while (mask_size(m) < lower_degree)
      m |= Mask(1) << rng.below(static_cast<std::uint64_t>(frame.dim));
    vf.add_term(static_cast<int>(rng.below(static_cast<std::uint64_t>(frame.dim))), m,
                random_scalar(rng, 6, 3));
  }
  return vf;
}

}  // namespace holoforms::oracle
