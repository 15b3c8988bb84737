#pragma once

#include "holoforms/form.hpp"
#include "holoforms/linalg.hpp"
#include "holoforms/rng.hpp"

namespace holoforms {

// Light-cone calculus for forms that are null along the "-" direction.  In
// every lightcone frame the distinguished null 1-form is kappa = e^-
// (internal index 0), so the designated kappa index is fixed rather than
// stored per form.

// kappa = e^- as a 1-form.  Throws unless the frame is lightcone.
Form kappa_form(const FrameContext& frame);

// True iff kappa ^ phi = 0 and kappa barwedge phi = 0.  For kappa = e^- this
// says every term of phi contains "-" and none contains "+".  kappa must be
// a nonzero 1-form in phi's frame.
bool is_null_along(const Form& kappa, const Form& phi);

// A form null along e^-.  Construction validates the frame kind and the term
// masks, so downstream operations can assume nullity.
class NullForm {
 public:
  explicit NullForm(Form phi);

  const Form& form() const { return form_; }
  const FrameContext& frame() const { return form_.frame(); }
  int degree() const { return form_.degree(); }
  bool is_zero() const { return form_.is_zero(); }
  // The "-" direction is internal index 0 in every lightcone frame.
  int kappa_index() const { return 0; }

  friend bool operator==(const NullForm& a, const NullForm& b) { return a.form_ == b.form_; }

 private:
  Form form_;
};

// The purely transverse representative with e^- ^ breve(phi) = phi; degree
// deg phi - 1.  Frame-dependent: patch transforms do not commute with it.
Form breve(const NullForm& phi);

// lambda ^ breve(phi).  Null again, of degree deg lambda + deg phi - 1;
// kappa is a two-sided unit.
Form curlywedge(const NullForm& lambda, const NullForm& phi);

// e^- ^ (breve(lambda) barwedge breve(phi)), of degree
// deg lambda + deg phi - 3.  A lambda with transverse degree 0 (kappa and
// its multiples) gives 0: its breve has no index to contract.
Form barcurlywedge(const NullForm& lambda, const NullForm& phi);

// Grading under which null forms close into a superalgebra: odd-degree
// forms are even (bosonic) generators.
int null_parity(const NullForm& phi);

// The superbracket realized by barcurlywedge.  barcurlywedge itself is
// graded symmetric between even- and odd-parity forms, so it is not a
// bracket as written; the (-1)^parity(left) twist makes
// lambda -> i_{raise(breve(lambda))} a homomorphism onto operator
// supercommutators, which yields graded antisymmetry and the Jacobi
// identity with the null_parity grading.
Form null_bracket(const NullForm& a, const NullForm& b);

// A change of lightcone frame fixing e^- and the metric: an exact-rational
// orthogonal rotation O of the transverse block together with a transverse
// shift w mixing e^+ into the other directions.
struct PatchTransform {
  Mat o;
  Vec w;

  // Validates shapes and exact orthogonality O^T O = I.
  PatchTransform(Mat o_, Vec w_);
};

// Matrix s with old coframe = s * new coframe, suitable for
// substitute_coframe: e^- stays, e^a = O_{ab} e^b' + w^a e^-', and
// e^+ = e^+' - (w^T O)_b e^b' - 1/2 w^2 e^-'.
Mat patch_substitution(const PatchTransform& t, const FrameContext& frame);

// phi re-expressed in the transformed coframe.  Leaves e^- and the metric
// components unchanged; curlywedge and barcurlywedge commute with it.
Form patch_transform(const Form& phi, const PatchTransform& t);

// Product of random signed permutations and embedded (3/5, 4/5) plane
// rotations: exactly orthogonal, and enough to exercise every code path.
Mat random_orthogonal(SplitMix64& rng, int size, int moves = 12);

PatchTransform random_patch_transform(SplitMix64& rng, const FrameContext& frame);

// Random null form: e^- wedged with a random transverse form of degree
// degree - 1.
NullForm random_null_form(SplitMix64& rng, const FrameContext& frame, int degree,
                          int max_terms = 6);

}  // namespace holoforms
