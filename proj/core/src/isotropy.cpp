#include "holoforms/isotropy.hpp"

#include <map>
#include <stdexcept>

#include "holoforms/combinatorics.hpp"

namespace holoforms {

namespace {

Vec flatten(const Mat& x) {
  Vec v(x.rows() * x.cols());
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) v[r * x.cols() + c] = x(r, c);
  return v;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

std::vector<Mask> degree_masks(int dim, int k) {
  std::vector<Mask> out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  std::vector<int> t = first_combination(k);
  do {
    out.push_back(tuple_mask(t));
  } while (next_combination(t, dim));
  return out;
}

}  // namespace

Subalgebra::Subalgebra(FrameContext frame, std::vector<Mat> basis)
    : frame_(frame), basis_(std::move(basis)) {
  const std::size_t n = static_cast<std::size_t>(frame_.dim);
  const std::size_t d = basis_.size();
  for (const Mat& x : basis_) {
    if (x.rows() != n || x.cols() != n)
      throw std::invalid_argument("basis element dimension mismatch");
    if (!in_orthogonal_algebra(x, frame_))
      throw std::invalid_argument("basis element not in the orthogonal algebra");
  }
  sc_.assign(d, std::vector<Vec>(d, Vec(d)));
  if (d == 0) return;

  // One elimination answers both questions: the first d columns are the
  // flattened basis (independence), the rest the flattened commutators
  // (closure + coordinates).
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) pairs.emplace_back(i, j);
  Mat big(n * n, d + pairs.size());
  for (std::size_t i = 0; i < d; ++i) {
    const Vec f = flatten(basis_[i]);
    for (std::size_t r = 0; r < f.size(); ++r) big(r, i) = f[r];
  }
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const Vec f = flatten(commutator(basis_[pairs[p].first], basis_[pairs[p].second]));
    for (std::size_t r = 0; r < f.size(); ++r) big(r, d + p) = f[r];
  }
  std::vector<std::size_t> pivots;
  const std::size_t rk = rref(big, &pivots);
  bool independent = rk >= d;
  for (std::size_t i = 0; i < d && independent; ++i) independent = pivots[i] == i;
  if (!independent) throw std::invalid_argument("basis linearly dependent");
  if (rk > d) throw std::invalid_argument("span not closed under commutator");
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [i, j] = pairs[p];
    for (std::size_t k = 0; k < d; ++k) {
      sc_[i][j][k] = big(k, d + p);
      sc_[j][i][k] = -big(k, d + p);
    }
  }
}

Mat Subalgebra::adjoint(std::size_t i) const {
  const std::size_t d = dim();
  Mat a(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) a(k, j) = sc_[i][j][k];
  return a;
}

Mat Subalgebra::adjoint(const Vec& coords) const {
  const std::size_t d = dim();
  if (coords.size() != d) throw std::invalid_argument("coordinate length mismatch");
  Mat a(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) a(k, j) += coords[i] * sc_[i][j][k];
  }
  return a;
}

Mat Subalgebra::element(const Vec& coords) const {
  const std::size_t n = static_cast<std::size_t>(frame_.dim);
  if (coords.size() != dim()) throw std::invalid_argument("coordinate length mismatch");
  Mat x(n, n);
  for (std::size_t i = 0; i < dim(); ++i)
    if (!coords[i].is_zero()) x = x + basis_[i].scaled(coords[i]);
  return x;
}

bool Subalgebra::verify_closure() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = i + 1; j < dim(); ++j) {
      Mat expect(basis_[i].rows(), basis_[i].cols());
      for (std::size_t k = 0; k < dim(); ++k)
        if (!sc_[i][j][k].is_zero()) expect = expect + basis_[k].scaled(sc_[i][j][k]);
      if (!(commutator(basis_[i], basis_[j]) == expect)) return false;
    }
  }
  return true;
}

Mat killing_form(const Subalgebra& h) {
  const std::size_t d = h.dim();
  std::vector<Mat> ad;
  ad.reserve(d);
  for (std::size_t i = 0; i < d; ++i) ad.push_back(h.adjoint(i));
  Mat k(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) k(i, j) = k(j, i) = (ad[i] * ad[j]).trace();
  return k;
}

std::vector<Vec> derived_subalgebra(const Subalgebra& h) {
  Span span(h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = i + 1; j < h.dim(); ++j) span.add(h.bracket_coords(i, j));
  return span.reduced_rows();
}

std::vector<Vec> killing_kernel(const Subalgebra& h) { return nullspace(killing_form(h)); }

std::size_t generic_centralizer_dim(const Subalgebra& h, SplitMix64& rng, int draws) {
  const std::size_t d = h.dim();
  if (d == 0) return 0;
  std::size_t best = d;
  for (int t = 0; t < draws; ++t) {
    Vec coords(d);
    for (auto& c : coords) c = random_rational(rng, 5, 3);
    const std::size_t ker = d - rank(h.adjoint(coords));
    if (ker < best) best = ker;
  }
  return best;
}

IdealReport ideal_check(const Subalgebra& h, const std::vector<Vec>& coords) {
  IdealReport rep;
  Span span(h.dim());
  std::vector<Mat> ads;
  for (const Vec& v : coords) {
    span.add(v);
    ads.push_back(h.adjoint(v));
  }
  rep.dim = span.dim();
  rep.is_ideal = true;
  for (std::size_t i = 0; i < h.dim() && rep.is_ideal; ++i) {
    const Mat adi = h.adjoint(i);
    for (const Vec& v : coords)
      if (!span.contains(adi.apply(v))) {
        rep.is_ideal = false;
        break;
      }
  }
  rep.is_abelian = true;
  for (std::size_t a = 0; a < ads.size() && rep.is_abelian; ++a) {
    for (const Vec& v : coords) {
      for (const Rational& entry : ads[a].apply(v))
        if (!entry.is_zero()) {
          rep.is_abelian = false;
          break;
        }
      if (!rep.is_abelian) break;
    }
  }
  rep.acts_nilpotently = true;
  for (std::size_t a = 0; a < ads.size() && rep.acts_nilpotently; ++a)
    for (std::size_t b = 0; b < ads.size(); ++b)
      if (!(ads[a] * ads[b]).is_zero()) {
        rep.acts_nilpotently = false;
        break;
      }
  return rep;
}

Subalgebra isotropy_algebra(const std::vector<Spinor>& spinors) {
  if (spinors.empty()) throw std::invalid_argument("empty spinor list");
  const SpinorModel model = spinors.front().model();
  for (const Spinor& s : spinors)
    if (!(s.model() == model)) throw std::invalid_argument("mixed spinor models");
  const std::vector<Mat> gens = so_basis(model);
  const std::size_t dim_c = static_cast<std::size_t>(model.dim_complex());
  Mat a(spinors.size() * dim_c * 2, gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (std::size_t j = 0; j < spinors.size(); ++j) {
      const Spinor out = spin_act(gens[g], spinors[j]);
      for (const auto& [s, c] : out.coeffs()) {
        const std::size_t row = (j * dim_c + s) * 2;
        a(row, g) = c.re;
        a(row + 1, g) = c.im;
      }
    }
  }
  std::vector<Mat> basis;
  for (const Vec& v : nullspace(a)) {
    Mat x(static_cast<std::size_t>(model.dim()), static_cast<std::size_t>(model.dim()));
    for (std::size_t g = 0; g < gens.size(); ++g)
      if (!v[g].is_zero()) x = x + gens[g].scaled(v[g]);
    basis.push_back(algebra_to_frame(model, x));
  }
  return Subalgebra(bilinear_frame(model), std::move(basis));
}

Subalgebra transverse_part(const Subalgebra& h) {
  if (h.frame().kind != FrameKind::lightcone)
    throw std::invalid_argument("transverse part needs a lightcone frame");
  const std::size_t nt = static_cast<std::size_t>(h.frame().dim - 2);
  Span span(nt * nt);
  std::vector<Mat> kept;
  for (const Mat& x : h.basis()) {
    Mat t(nt, nt);
    for (std::size_t r = 0; r < nt; ++r)
      for (std::size_t c = 0; c < nt; ++c) t(r, c) = x(r + 2, c + 2);
    if (!t.is_zero() && span.add(flatten(t))) kept.push_back(t);
  }
  return Subalgebra(euclidean_frame(static_cast<int>(nt)), std::move(kept));
}

std::vector<Form> invariant_forms(const Subalgebra& h, int k) {
  const FrameContext frame = h.frame();
  if (k < 0 || k > frame.dim) throw std::invalid_argument("form degree out of range");
  const std::vector<Mask> masks = degree_masks(frame.dim, k);
  std::map<Mask, std::size_t> col;
  for (std::size_t i = 0; i < masks.size(); ++i) col[masks[i]] = i;
  Mat a(h.dim() * masks.size(), masks.size());
  for (std::size_t x = 0; x < h.dim(); ++x) {
    for (std::size_t c = 0; c < masks.size(); ++c) {
      const Form moved = so_act(h.basis()[x], Form::basis(frame, masks[c]));
      for (const auto& [m, v] : moved.terms())
        a(x * masks.size() + col.at(m), c) = v.re;  // rational action on a rational basis
    }
  }
  std::vector<Form> out;
  for (const Vec& v : nullspace(a)) {
    Form f(frame, k);
    for (std::size_t i = 0; i < masks.size(); ++i)
      if (!v[i].is_zero()) f.add_term(masks[i], Scalar(v[i]));
    out.push_back(std::move(f));
  }
  return out;
}

std::pair<std::size_t, std::vector<Form>> bilinear_space(const std::vector<Spinor>& spinors,
                                                         int k) {
  if (spinors.empty()) throw std::invalid_argument("empty spinor list");
  const FrameContext frame = bilinear_frame(spinors.front().model());
  const std::vector<Mask> masks = degree_masks(frame.dim, k);
  std::map<Mask, std::size_t> col;
  for (std::size_t i = 0; i < masks.size(); ++i) col[masks[i]] = i;
  Span span(2 * masks.size());
  std::vector<Form> kept;
  for (const Spinor& a : spinors) {
    for (const Spinor& b : spinors) {
      const Form phi = bilinear(a, b, k);
      if (phi.is_zero()) continue;
      Vec v(2 * masks.size());
      for (const auto& [m, c] : phi.terms()) {
        v[col.at(m)] = c.re;
        v[masks.size() + col.at(m)] = c.im;
      }
      if (span.add(std::move(v))) kept.push_back(phi);
    }
  }
  return {span.dim(), std::move(kept)};
}

std::vector<Spinor> majorana_spinor_set(const std::vector<Spinor>& reps) {
  std::vector<Spinor> out;
  for (const Spinor& rep : reps)
    for (Spinor& part : majorana_parts(rep)) out.push_back(std::move(part));
  return out;
}

}  // namespace holoforms
