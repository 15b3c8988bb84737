#include "holoforms/nullcone.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace holoforms {

namespace {

constexpr Mask kMinusBit = 1u;
constexpr Mask kPlusBit = 2u;

void require_lightcone(const FrameContext& f) {
  if (f.kind != FrameKind::lightcone) throw std::invalid_argument("expected a lightcone frame");
}

}  // namespace

Form kappa_form(const FrameContext& frame) {
  require_lightcone(frame);
  return Form::basis(frame, kMinusBit);
}

bool is_null_along(const Form& kappa, const Form& phi) {
  if (kappa.frame() != phi.frame()) throw std::invalid_argument("frame mismatch");
  if (kappa.degree() != 1 || kappa.is_zero())
    throw std::invalid_argument("kappa must be a nonzero 1-form");
  if (!wedge(kappa, phi).is_zero()) return false;
  return barwedge(kappa, phi).is_zero();
}

NullForm::NullForm(Form phi) : form_(std::move(phi)) {
  require_lightcone(form_.frame());
  for (const auto& [mask, c] : form_.terms()) {
    (void)c;
    if (!(mask & kMinusBit) || (mask & kPlusBit))
      throw std::invalid_argument("form is not null along kappa");
  }
}

Form breve(const NullForm& phi) {
  // Index 0 sits first in every mask, so stripping it costs no sign.
  Form out(phi.frame(), phi.degree() > 0 ? phi.degree() - 1 : 0);
  for (const auto& [mask, c] : phi.form().terms()) out.add_term(mask & ~kMinusBit, c);
  return out;
}

Form curlywedge(const NullForm& lambda, const NullForm& phi) {
  if (lambda.frame() != phi.frame()) throw std::invalid_argument("frame mismatch");
  return wedge(lambda.form(), breve(phi));
}

Form barcurlywedge(const NullForm& lambda, const NullForm& phi) {
  if (lambda.frame() != phi.frame()) throw std::invalid_argument("frame mismatch");
  Form lb = breve(lambda);
  Form pb = breve(phi);
  int out_degree = lambda.degree() + phi.degree() - 3;
  if (lb.degree() < 1 || pb.degree() < 1 || lb.is_zero() || pb.is_zero())
    return Form(lambda.frame(), out_degree > 0 ? out_degree : 0);
  return wedge(kappa_form(lambda.frame()), barwedge(lb, pb));
}

int null_parity(const NullForm& phi) { return (phi.degree() - 1) & 1; }

Form null_bracket(const NullForm& a, const NullForm& b) {
  Form v = barcurlywedge(a, b);
  return null_parity(a) ? -v : v;
}

PatchTransform::PatchTransform(Mat o_, Vec w_) : o(std::move(o_)), w(std::move(w_)) {
  if (o.rows() != o.cols()) throw std::invalid_argument("O must be square");
  if (w.size() != o.rows()) throw std::invalid_argument("w length must match O");
  if (!(o.transposed() * o == Mat::identity(o.rows())))
    throw std::invalid_argument("O is not orthogonal");
}

Mat patch_substitution(const PatchTransform& t, const FrameContext& frame) {
  require_lightcone(frame);
  const int nt = frame.dim - 2;
  if (static_cast<int>(t.o.rows()) != nt)
    throw std::invalid_argument("transform size does not match frame");

  Mat s(frame.dim, frame.dim);
  s(0, 0) = 1;
  s(1, 1) = 1;
  Rational w2;
  for (int i = 0; i < nt; ++i) w2 += t.w[i] * t.w[i];
  s(1, 0) = -(w2 / 2);
  for (int b = 0; b < nt; ++b) {
    Rational wo;
    for (int i = 0; i < nt; ++i) wo += t.w[i] * t.o(i, b);
    s(1, 2 + b) = -wo;
  }
  for (int a = 0; a < nt; ++a) {
    s(2 + a, 0) = t.w[a];
    for (int b = 0; b < nt; ++b) s(2 + a, 2 + b) = t.o(a, b);
  }
  return s;
}

Form patch_transform(const Form& phi, const PatchTransform& t) {
  return substitute_coframe(phi, patch_substitution(t, phi.frame()));
}

Mat random_orthogonal(SplitMix64& rng, int size, int moves) {
  Mat m = Mat::identity(size);
  if (size == 0) return m;
  for (int step = 0; step < moves; ++step) {
    switch (rng.below(3)) {
      case 0: {  // swap two rows
        if (size < 2) break;
        auto r1 = rng.below(size), r2 = rng.below(size);
        if (r1 == r2) break;
        for (int c = 0; c < size; ++c) std::swap(m(r1, c), m(r2, c));
        break;
      }
      case 1: {  // negate a row
        auto r = rng.below(size);
        for (int c = 0; c < size; ++c) m(r, c) = -m(r, c);
        break;
      }
      default: {  // rational rotation in a coordinate plane
        if (size < 2) break;
        auto r1 = rng.below(size), r2 = rng.below(size);
        if (r1 == r2) break;
        const Rational c(3, 5), s(4, 5);
        for (int col = 0; col < size; ++col) {
          Rational a = m(r1, col), b = m(r2, col);
          m(r1, col) = c * a - s * b;
          m(r2, col) = s * a + c * b;
        }
        break;
      }
    }
  }
  return m;
}

PatchTransform random_patch_transform(SplitMix64& rng, const FrameContext& frame) {
  require_lightcone(frame);
  const int nt = frame.dim - 2;
  Vec w(nt);
  for (int i = 0; i < nt; ++i) w[i] = random_rational(rng, 3, 2);
  return PatchTransform(random_orthogonal(rng, nt), std::move(w));
}

NullForm random_null_form(SplitMix64& rng, const FrameContext& frame, int degree,
                          int max_terms) {
  require_lightcone(frame);
  const int nt = frame.dim - 2;
  const int tdeg = degree - 1;
  if (degree < 1 || tdeg > nt) throw std::invalid_argument("no null forms of that degree");
  Form out(frame, degree);
  for (int t = 0; t < max_terms; ++t) {
    Mask mask = kMinusBit;
    // A random transverse (degree-1)-subset, as internal indices 2..dim-1.
    std::vector<int> pool(nt);
    for (int i = 0; i < nt; ++i) pool[i] = 2 + i;
    for (int pick = 0; pick < tdeg; ++pick) {
      auto j = rng.below(pool.size() - pick);
      mask |= Mask(1) << pool[j];
      std::swap(pool[j], pool[pool.size() - 1 - pick]);
    }
    out.add_term(mask, random_scalar(rng, 5, 3));
  }
  return NullForm(std::move(out));
}

}  // namespace holoforms
