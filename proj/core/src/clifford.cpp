#include "holoforms/clifford.hpp"

#include <stdexcept>
#include <utility>

#include "holoforms/combinatorics.hpp"
#include "holoforms/parser.hpp"

namespace holoforms {

namespace {

// One gamma matrix as alpha * (e_bit wedge) + beta * (e_bit contraction).
struct GammaFactor {
  int bit = 0;
  Scalar create;
  Scalar annihilate;
};

GammaFactor gamma_factor(const SpinorModel& m, int a) {
  if (a < 0 || a >= m.dim()) throw std::out_of_range("gamma index out of range");
  const Scalar one(1), im = Scalar::i();
  if (m.kind == SpinorKind::ten_d) {
    if (a == 0) return {4, -one, one};
    if (a <= 4) return {a - 1, one, one};
    if (a == 5) return {4, one, one};
    return {a - 6, im, -im};
  }
  if (a <= 3) return {a, one, one};
  return {a - 4, im, -im};
}

}  // namespace

Rational SpinorModel::metric(int a, int b) const {
  if (a < 0 || a >= dim() || b < 0 || b >= dim())
    throw std::out_of_range("model index out of range");
  if (a != b) return 0;
  return (kind == SpinorKind::ten_d && a == 0) ? -1 : 1;
}

Spinor Spinor::basis(SpinorModel model, Mask subset, Scalar c) {
  Spinor z(model);
  z.add_term(subset, c);
  return z;
}

Scalar Spinor::coefficient(Mask subset) const {
  auto it = coeffs_.find(subset);
  return it == coeffs_.end() ? Scalar(0) : it->second;
}

void Spinor::add_term(Mask subset, const Scalar& c) {
  if (c.is_zero()) return;
  if (subset >= (Mask(1) << model_.k())) throw std::out_of_range("spinor subset out of range");
  auto [it, inserted] = coeffs_.emplace(subset, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

Spinor Spinor::operator-() const {
  Spinor out(model_);
  for (const auto& [s, c] : coeffs_) out.coeffs_.emplace(s, -c);
  return out;
}

Spinor& Spinor::operator+=(const Spinor& o) {
  if (!(model_ == o.model_)) throw std::invalid_argument("spinor model mismatch");
  for (const auto& [s, c] : o.coeffs_) add_term(s, c);
  return *this;
}

Spinor& Spinor::operator-=(const Spinor& o) {
  if (!(model_ == o.model_)) throw std::invalid_argument("spinor model mismatch");
  for (const auto& [s, c] : o.coeffs_) add_term(s, -c);
  return *this;
}

Spinor& Spinor::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [s, v] : coeffs_) v *= c;
  return *this;
}

Spinor Spinor::conj() const {
  Spinor out(model_);
  for (const auto& [s, c] : coeffs_) out.coeffs_.emplace(s, c.conj());
  return out;
}

std::string Spinor::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  auto emit = [&](const std::string& term) {
    if (!first && term[0] != '-') out += '+';
    out += term;
    first = false;
  };
  for (const auto& [s, c] : coeffs_) {
    if (s == 0) {
      // A bare literal (or re+im literal pair) is an empty-subset term.
      emit(c.str());
      continue;
    }
    std::string basis = "e";
    for (int i = 0; i < model_.k(); ++i)
      if (mask_contains(s, i)) basis += static_cast<char>('1' + i);
    if (!c.re.is_zero()) {
      if (c.re == Rational(1))
        emit(basis);
      else if (c.re == Rational(-1))
        emit("-" + basis);
      else
        emit(c.re.str() + "*" + basis);
    }
    if (!c.im.is_zero()) {
      if (c.im == Rational(1))
        emit("i*" + basis);
      else if (c.im == Rational(-1))
        emit("-i*" + basis);
      else
        emit(c.im.str() + "i*" + basis);
    }
  }
  return out;
}

int chirality(const Spinor& z) {
  int out = 0;
  for (const auto& [s, c] : z.coeffs()) {
    int parity = (mask_size(s) & 1) ? -1 : 1;
    if (out == 0)
      out = parity;
    else if (out != parity)
      throw std::invalid_argument("mixed-chirality spinor");
  }
  return out;
}

Spinor gamma_apply(int a, const Spinor& z) {
  const GammaFactor g = gamma_factor(z.model(), a);
  const Mask bit = Mask(1) << g.bit;
  Spinor out(z.model());
  for (const auto& [s, c] : z.coeffs()) {
    if (s & bit)
      out.add_term(s & ~bit, c * g.annihilate * Scalar(contraction_sign(s, g.bit)));
    else
      out.add_term(s | bit, c * g.create * Scalar(merge_sign(bit, s)));
  }
  return out;
}

Spinor gamma_word(const std::vector<int>& indices, const Spinor& z) {
  Spinor out = z;
  for (auto it = indices.rbegin(); it != indices.rend(); ++it) out = gamma_apply(*it, out);
  return out;
}

Mat model_metric_matrix(const SpinorModel& m) {
  const int n = m.dim();
  Mat g(n, n);
  for (int a = 0; a < n; ++a) g(a, a) = m.metric(a, a);
  return g;
}

Mat so_generator(const SpinorModel& m, int a, int b) {
  const int n = m.dim();
  if (a < 0 || a >= n || b < 0 || b >= n) throw std::out_of_range("generator index out of range");
  Mat x(n, n);
  for (int d = 0; d < n; ++d) {
    x(a, d) += m.metric(b, d);
    x(b, d) -= m.metric(a, d);
  }
  return x;
}

std::vector<Mat> so_basis(const SpinorModel& m) {
  std::vector<Mat> out;
  for (int a = 0; a < m.dim(); ++a)
    for (int b = a + 1; b < m.dim(); ++b) out.push_back(so_generator(m, a, b));
  return out;
}

Spinor spin_act(const Mat& x, const Spinor& eps) {
  const SpinorModel& m = eps.model();
  const int n = m.dim();
  if (x.rows() != static_cast<std::size_t>(n) || x.cols() != static_cast<std::size_t>(n))
    throw std::invalid_argument("algebra element dimension mismatch");
  const Mat g = model_metric_matrix(m);
  if (!(x.transposed() * g + g * x).is_zero())
    throw std::invalid_argument("matrix not in the orthogonal algebra");
  Spinor out(m);
  if (eps.is_zero()) return out;
  const Rational quarter(1, 4);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (x(a, b).is_zero()) continue;
      // x^{AB} = x^A_C g^{CB}; both metrics are diagonal involutions.
      const Scalar w(x(a, b) * m.metric(b, b) * quarter);
      out += gamma_apply(a, gamma_apply(b, eps)) * w;
    }
  }
  return out;
}

Spinor reality_map(const Spinor& eps) {
  const bool ten = eps.model().kind == SpinorKind::ten_d;
  static const std::vector<int> word10{6, 7, 8, 9};
  static const std::vector<int> word8{4, 5, 6, 7};
  return gamma_word(ten ? word10 : word8, eps.conj());
}

bool is_majorana(const Spinor& eps) { return reality_map(eps) == eps; }

Spinor real_part(const Spinor& eps) {
  return (eps + reality_map(eps)) * Scalar(Rational(1, 2));
}

Spinor imag_part(const Spinor& eps) {
  return (eps - reality_map(eps)) * (Scalar(Rational(0, 1), Rational(-1, 2)));
}

std::vector<Spinor> majorana_parts(const Spinor& eps) {
  std::vector<Spinor> out;
  for (Spinor part : {real_part(eps), imag_part(eps)})
    if (!part.is_zero()) out.push_back(std::move(part));
  return out;
}

Scalar hermitian(const Spinor& a, const Spinor& b) {
  if (!(a.model() == b.model())) throw std::invalid_argument("spinor model mismatch");
  Scalar out(0);
  const auto& small = a.coeffs().size() <= b.coeffs().size() ? a : b;
  for (const auto& [s, c] : small.coeffs()) out += a.coefficient(s).conj() * b.coefficient(s);
  return out;
}

Scalar dirac(const Spinor& a, const Spinor& b) {
  if (!(a.model() == b.model())) throw std::invalid_argument("spinor model mismatch");
  if (a.model().kind == SpinorKind::eight_d) return hermitian(a, b);
  return -hermitian(gamma_apply(0, a), b);
}

FrameContext bilinear_frame(const SpinorModel& m) {
  return m.kind == SpinorKind::ten_d ? lightcone_frame(10) : euclidean_frame(8);
}

Mat model_to_frame(const SpinorModel& m) {
  const int n = m.dim();
  Mat s(n, n);
  if (m.kind == SpinorKind::ten_d) {
    // The two e_5-built gammas carry the lightcone plane: e^0 = -1/2 e^- + e^+
    // and e^5 = 1/2 e^- + e^+, so that -e^0 e^0 + e^5 e^5 = 2 e^- e^+.  The
    // real and imaginary transverse directions interleave.
    s(0, 0) = Rational(-1, 2);
    s(0, 1) = 1;
    s(5, 0) = Rational(1, 2);
    s(5, 1) = 1;
    for (int a = 1; a <= 4; ++a) {
      s(a, 2 * a) = 1;
      s(a + 5, 2 * a + 1) = 1;
    }
  } else {
    for (int a = 0; a < 8; ++a) s(a, a < 4 ? 2 * a : 2 * a - 7) = 1;
  }
  return s;
}

Mat algebra_to_frame(const SpinorModel& m, const Mat& x) {
  const Mat s = model_to_frame(m);
  return inverse(s) * x * s;
}

Form bilinear(const Spinor& a, const Spinor& b, int k) {
  if (!(a.model() == b.model())) throw std::invalid_argument("spinor model mismatch");
  const SpinorModel& m = a.model();
  const int n = m.dim();
  if (k < 0 || k > n) throw std::invalid_argument("bilinear degree out of range");
  const FrameContext frame = bilinear_frame(m);
  Form out(frame, k);
  if (k == 0) {
    out.add_term(0, dirac(a, b));
    return out;
  }
  const Mat s = model_to_frame(m);
  std::vector<Form> row(n, Form(frame, 1));
  for (int i = 0; i < n; ++i)
    for (int nu = 0; nu < n; ++nu)
      if (!s(i, nu).is_zero()) row[i].add_term(Mask(1) << nu, Scalar(s(i, nu)));
  std::vector<int> tuple = first_combination(k);
  do {
    Spinor w = b;
    for (int j = k - 1; j >= 0; --j) w = gamma_apply(tuple[j], w);
    const Scalar c = dirac(a, w);
    if (c.is_zero()) continue;
    Form term = row[tuple[0]];
    for (int j = 1; j < k; ++j) term = wedge(term, row[tuple[j]]);
    out += term * c;
  } while (next_combination(tuple, n));
  return out;
}

Spinor parse_spinor(std::string_view text, SpinorModel model) {
  Spinor out(model);
  for (const auto& [s, c] : parse_spinor_coeffs(text, model.k())) out.add_term(s, c);
  return out;
}

Spinor random_spinor(SplitMix64& rng, SpinorModel model, int chirality, int max_terms) {
  Spinor out(model);
  const Mask all = Mask(1) << model.k();
  const int terms = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms)));
  for (int t = 0; t < terms; ++t) {
    Mask s;
    do {
      s = static_cast<Mask>(rng.below(all));
    } while (chirality != 0 && ((mask_size(s) & 1) ? -1 : 1) != chirality);
    Scalar c;
    do {
      c = random_scalar(rng, 3, 2);
    } while (c.is_zero());
    out.add_term(s, c);
  }
  return out;
}

}  // namespace holoforms
