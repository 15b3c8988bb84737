#pragma once

#include <map>
#include <string>
#include <utility>

#include "holoforms/frame.hpp"
#include "holoforms/linalg.hpp"
#include "holoforms/rational.hpp"

namespace holoforms {

// Homogeneous sparse exterior form with Scalar coefficients.  Zero
// coefficients are never stored.  Mixed-degree data is handled as lists of
// Forms by the callers.
class Form {
 public:
  Form() = default;
  Form(FrameContext frame, int degree);

  // e^S for an index set S, with coefficient c.
  static Form basis(FrameContext frame, Mask s, Scalar c = Scalar(1));

  const FrameContext& frame() const { return frame_; }
  int degree() const { return degree_; }
  const std::map<Mask, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(Mask s) const;
  void add_term(Mask s, const Scalar& c);

  Form operator-() const;
  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(const Scalar& c);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(Form a, const Scalar& c) { return a *= c; }
  friend Form operator*(const Scalar& c, Form a) { return a *= c; }

  // Equality compares frame and term maps; a zero form of any degree equals
  // a zero form of any other degree.
  friend bool operator==(const Form& a, const Form& b) {
    return a.frame_ == b.frame_ && a.terms_ == b.terms_;
  }

  // Textual encoding matching the expression grammar, e.g. "e12+e34",
  // "-1/2*e1234", "em12" (lightcone), "e1.10" (indices past 9 are
  // dot-separated).
  std::string str() const;

 private:
  FrameContext frame_;
  int degree_ = 0;
  std::map<Mask, Scalar> terms_;
};

// Sparse vector-valued form: one upper frame index, an antisymmetric block
// of lower indices (stored strictly increasing).
class VectorForm {
 public:
  struct Key {
    std::uint8_t upper = 0;
    Mask lower = 0;
    friend auto operator<=>(const Key&, const Key&) = default;
  };

  VectorForm() = default;
  VectorForm(FrameContext frame, int lower_degree);

  const FrameContext& frame() const { return frame_; }
  int lower_degree() const { return lower_degree_; }
  const std::map<Key, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(int upper, Mask lower) const;
  void add_term(int upper, Mask lower, const Scalar& c);

  VectorForm operator-() const;
  VectorForm& operator+=(const VectorForm& o);
  VectorForm& operator-=(const VectorForm& o);
  VectorForm& operator*=(const Scalar& c);
  friend VectorForm operator+(VectorForm a, const VectorForm& b) { return a += b; }
  friend VectorForm operator-(VectorForm a, const VectorForm& b) { return a -= b; }
  friend VectorForm operator*(VectorForm a, const Scalar& c) { return a *= c; }
  friend VectorForm operator*(const Scalar& c, VectorForm a) { return a *= c; }

  friend bool operator==(const VectorForm& a, const VectorForm& b) {
    return a.frame_ == b.frame_ && a.terms_ == b.terms_;
  }

  // The form in the given upper slot.
  Form slot(int upper) const;

 private:
  FrameContext frame_;
  int lower_degree_ = 0;
  std::map<Key, Scalar> terms_;
};

Mat metric_matrix(const FrameContext& f);

// x^T g + g x = 0 exactly, i.e. x is in the metric's orthogonal algebra.
bool in_orthogonal_algebra(const Mat& x, const FrameContext& f);

Form wedge(const Form& a, const Form& b);

// First index raised with the inverse metric: (raise phi)^mu_N =
// g^{mu rho} phi_{rho N}.  Degree-0 input is an error.
VectorForm raise(const Form& phi);

// Inverse of raise on raised forms: lower(L)_K = 1/(l+1) * sum over
// positions j of K of (-1)^j g_{k_j rho} L^rho_{K minus k_j}.
Form lower(const VectorForm& l);

// Inner derivation i_L phi of degree l-1.  i_L of a degree-0 form is 0.
Form inner(const VectorForm& l, const Form& phi);

// lambda barwedge chi := i_{raise(lambda)} chi.
Form barwedge(const Form& lambda, const Form& chi);

// L barwedge M := i_L applied to the form part of M; slot-wise inner.
VectorForm vf_barwedge(const VectorForm& l, const VectorForm& m);

// I^mu_nu = delta^mu_nu; i_I phi = (deg phi) * phi.
VectorForm identity_vector_form(const FrameContext& f);

// Infinitesimal frame rotation x acting as a derivation on forms:
// each co-frame factor e^A is replaced by -sum_nu x(A,nu) e^nu.
Form so_act(const Mat& x, const Form& phi);

// Replace each co-frame factor e^A by sum_nu s(A,nu) e^nu and expand.
Form substitute_coframe(const Form& phi, const Mat& s);

}  // namespace holoforms
