#include "holoforms/form.hpp"

#include <stdexcept>

namespace holoforms {

namespace {

void require_same_frame(const FrameContext& a, const FrameContext& b) {
  if (!(a == b)) throw std::invalid_argument("frame mismatch");
}

Scalar sign_scalar(int s) { return Scalar(Rational(s)); }

}  // namespace

Form::Form(FrameContext frame, int degree) : frame_(frame), degree_(degree) {
  if (degree < 0 || degree > frame.dim) throw std::invalid_argument("form degree out of range");
}

Form Form::basis(FrameContext frame, Mask s, Scalar c) {
  Form f(frame, mask_size(s));
  f.add_term(s, c);
  return f;
}

Scalar Form::coefficient(Mask s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Form::add_term(Mask s, const Scalar& c) {
  if (c.is_zero()) return;
  if (mask_size(s) != degree_) throw std::invalid_argument("term degree mismatch");
  if (frame_.dim < 32 && (s >> frame_.dim) != 0)
    throw std::out_of_range("term index out of frame range");
  auto [it, inserted] = terms_.emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Form Form::operator-() const {
  Form out(frame_, degree_);
  for (const auto& [s, c] : terms_) out.terms_.emplace(s, -c);
  return out;
}

Form& Form::operator+=(const Form& o) {
  require_same_frame(frame_, o.frame_);
  if (degree_ != o.degree_ && !o.is_zero() && !is_zero())
    throw std::invalid_argument("degree mismatch in form sum");
  if (is_zero()) degree_ = o.degree_;
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

Form& Form::operator-=(const Form& o) { return *this += -o; }

Form& Form::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, v] : terms_) v *= c;
  return *this;
}

std::string Form::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    std::string basis;
    if (s != 0) {
      const bool wide = frame_has_wide_names(frame_);
      std::string names[32];
      int count = 0;
      for (int a = 0; a < frame_.dim; ++a) {
        if (!mask_contains(s, a)) continue;
        names[count] = frame_.index_name(a);
        ++count;
      }
      basis = "e";
      for (int k = 0; k < count; ++k) {
        if (wide && k > 0) basis += '.';
        basis += names[k];
      }
    }
    std::string term;
    if (basis.empty()) {
      term = c.is_real() ? c.str() : "(" + c.str() + ")";
    } else if (c == Scalar(1)) {
      term = basis;
    } else if (c == Scalar(-1)) {
      term = "-" + basis;
    } else if (c.is_real()) {
      term = c.str() + "*" + basis;
    } else {
      term = "(" + c.str() + ")*" + basis;
    }
    if (!first && term[0] != '-') out += '+';
    out += term;
    first = false;
  }
  return out;
}

VectorForm::VectorForm(FrameContext frame, int lower_degree)
    : frame_(frame), lower_degree_(lower_degree) {
  if (lower_degree < 0 || lower_degree > frame.dim)
    throw std::invalid_argument("vector-form degree out of range");
}

Scalar VectorForm::coefficient(int upper, Mask lower) const {
  auto it = terms_.find(Key{static_cast<std::uint8_t>(upper), lower});
  return it == terms_.end() ? Scalar(0) : it->second;
}

void VectorForm::add_term(int upper, Mask lower, const Scalar& c) {
  if (c.is_zero()) return;
  if (!frame_.valid_index(upper)) throw std::out_of_range("upper index out of range");
  if (mask_size(lower) != lower_degree_) throw std::invalid_argument("term degree mismatch");
  Key k{static_cast<std::uint8_t>(upper), lower};
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

VectorForm VectorForm::operator-() const {
  VectorForm out(frame_, lower_degree_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

VectorForm& VectorForm::operator+=(const VectorForm& o) {
  require_same_frame(frame_, o.frame_);
  if (lower_degree_ != o.lower_degree_ && !o.is_zero() && !is_zero())
    throw std::invalid_argument("degree mismatch in vector-form sum");
  if (is_zero()) lower_degree_ = o.lower_degree_;
  for (const auto& [k, c] : o.terms_) add_term(k.upper, k.lower, c);
  return *this;
}

VectorForm& VectorForm::operator-=(const VectorForm& o) { return *this += -o; }

VectorForm& VectorForm::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

Form VectorForm::slot(int upper) const {
  Form out(frame_, lower_degree_);
  for (const auto& [k, c] : terms_)
    if (k.upper == upper) out.add_term(k.lower, c);
  return out;
}

Mat metric_matrix(const FrameContext& f) {
  Mat g(static_cast<std::size_t>(f.dim), static_cast<std::size_t>(f.dim));
  for (int a = 0; a < f.dim; ++a)
    for (int b = 0; b < f.dim; ++b) g(a, b) = f.metric(a, b);
  return g;
}

bool in_orthogonal_algebra(const Mat& x, const FrameContext& f) {
  if (x.rows() != static_cast<std::size_t>(f.dim) || x.cols() != x.rows()) return false;
  Mat g = metric_matrix(f);
  return (x.transposed() * g + g * x).is_zero();
}

Form wedge(const Form& a, const Form& b) {
  require_same_frame(a.frame(), b.frame());
  Form out(a.frame(), std::min(a.degree() + b.degree(), a.frame().dim));
  for (const auto& [s, c] : a.terms())
    for (const auto& [t, d] : b.terms()) {
      if (s & t) continue;
      out.add_term(s | t, c * d * sign_scalar(merge_sign(s, t)));
    }
  // Degenerate case: if everything cancelled or degrees overflow the frame
  // dimension the result is zero; keep the formal degree when legal.
  if (a.degree() + b.degree() > a.frame().dim && !out.is_zero())
    throw std::logic_error("wedge degree overflow with surviving terms");
  return out;
}

VectorForm raise(const Form& phi) {
  if (phi.degree() < 1) throw std::invalid_argument("raise needs degree >= 1");
  const FrameContext& f = phi.frame();
  VectorForm out(f, phi.degree() - 1);
  for (const auto& [s, c] : phi.terms())
    for (Mask rest = s; rest;) {
      int rho = __builtin_ctz(rest);
      rest &= rest - 1;
      Scalar comp = c * sign_scalar(contraction_sign(s, rho));
      Mask n = s ^ (Mask(1) << rho);
      for (int mu = 0; mu < f.dim; ++mu) {
        Rational gmr = f.inverse_metric(mu, rho);
        if (gmr.is_zero()) continue;
        out.add_term(mu, n, comp * Scalar(gmr));
      }
    }
  return out;
}

Form lower(const VectorForm& l) {
  const FrameContext& f = l.frame();
  if (l.lower_degree() + 1 > f.dim) return Form(f, 0);  // forced zero
  Form out(f, l.lower_degree() + 1);
  Rational inv_count(BigInt(1), BigInt(l.lower_degree() + 1));
  for (const auto& [key, c] : l.terms()) {
    for (int a = 0; a < f.dim; ++a) {
      if (mask_contains(key.lower, a)) continue;
      Rational gam = f.metric(a, key.upper);
      if (gam.is_zero()) continue;
      Mask k = key.lower | (Mask(1) << a);
      out.add_term(k, c * Scalar(gam * inv_count) * sign_scalar(contraction_sign(k, a)));
    }
  }
  return out;
}

Form inner(const VectorForm& l, const Form& phi) {
  require_same_frame(l.frame(), phi.frame());
  const int ell = l.lower_degree();
  if (phi.degree() == 0) return Form(phi.frame(), ell >= 1 ? ell - 1 : 0);
  if (phi.degree() + ell - 1 > phi.frame().dim) return Form(phi.frame(), 0);  // forced zero
  Form out(phi.frame(), phi.degree() + ell - 1);
  for (const auto& [key, c] : l.terms())
    for (const auto& [s, d] : phi.terms()) {
      if (!mask_contains(s, key.upper)) continue;
      Mask t = s ^ (Mask(1) << key.upper);
      if (t & key.lower) continue;
      int sign = contraction_sign(s, key.upper) * merge_sign(key.lower, t);
      out.add_term(key.lower | t, c * d * sign_scalar(sign));
    }
  return out;
}

Form barwedge(const Form& lambda, const Form& chi) {
  if (lambda.degree() < 1 || chi.degree() < 1)
    throw std::invalid_argument("barwedge needs degree >= 1 operands");
  return inner(raise(lambda), chi);
}

VectorForm vf_barwedge(const VectorForm& l, const VectorForm& m) {
  require_same_frame(l.frame(), m.frame());
  const int out_deg = l.lower_degree() + m.lower_degree() - 1;
  if (out_deg < 0) return VectorForm(l.frame(), 0);  // i_L of degree-0 slots is 0
  VectorForm out(l.frame(), out_deg);
  for (int mu = 0; mu < m.frame().dim; ++mu) {
    Form slot = m.slot(mu);
    if (slot.is_zero()) continue;
    Form hit = inner(l, slot);
    for (const auto& [s, c] : hit.terms()) out.add_term(mu, s, c);
  }
  return out;
}

VectorForm identity_vector_form(const FrameContext& f) {
  VectorForm out(f, 1);
  for (int mu = 0; mu < f.dim; ++mu) out.add_term(mu, Mask(1) << mu, Scalar(1));
  return out;
}

Form so_act(const Mat& x, const Form& phi) {
  const FrameContext& f = phi.frame();
  if (x.rows() != static_cast<std::size_t>(f.dim) || x.cols() != x.rows())
    throw std::invalid_argument("algebra element dimension mismatch");
  Form out(f, phi.degree());
  for (const auto& [s, c] : phi.terms())
    for (Mask rest = s; rest;) {
      int a = __builtin_ctz(rest);
      rest &= rest - 1;
      Mask t = s ^ (Mask(1) << a);
      Scalar pulled = c * sign_scalar(contraction_sign(s, a));
      for (int nu = 0; nu < f.dim; ++nu) {
        const Rational& xan = x(a, nu);
        if (xan.is_zero()) continue;
        if (mask_contains(t, nu)) continue;
        int sign = merge_sign(Mask(1) << nu, t);
        out.add_term(t | (Mask(1) << nu), -pulled * Scalar(xan) * sign_scalar(sign));
      }
    }
  return out;
}

Form substitute_coframe(const Form& phi, const Mat& s) {
  const FrameContext& f = phi.frame();
  if (s.rows() != static_cast<std::size_t>(f.dim) || s.cols() != s.rows())
    throw std::invalid_argument("coframe substitution dimension mismatch");
  Form out(f, phi.degree());
  for (const auto& [mask, c] : phi.terms()) {
    Form acc(f, 0);
    acc.add_term(0, c);
    for (Mask rest = mask; rest;) {
      int a = __builtin_ctz(rest);
      rest &= rest - 1;
      Form row(f, 1);
      for (int nu = 0; nu < f.dim; ++nu)
        if (!s(a, nu).is_zero()) row.add_term(Mask(1) << nu, Scalar(s(a, nu)));
      acc = wedge(acc, row);
      if (acc.is_zero()) break;
    }
    out += acc;
  }
  return out;
}

}  // namespace holoforms
