#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "holoforms/form.hpp"
#include "holoforms/frame.hpp"
#include "holoforms/linalg.hpp"
#include "holoforms/rational.hpp"
#include "holoforms/rng.hpp"

namespace holoforms {

// Two Clifford modules realized on exterior algebras: the 32-dimensional
// module of the signature-(1,9) algebra on subsets of {1..5}, and the
// 16-dimensional module of the rank-8 euclidean algebra on subsets of
// {1..4}.  Gamma matrices act by wedge/contraction with the generators.
enum class SpinorKind { ten_d, eight_d };

struct SpinorModel {
  SpinorKind kind = SpinorKind::ten_d;

  int k() const { return kind == SpinorKind::ten_d ? 5 : 4; }
  int dim() const { return kind == SpinorKind::ten_d ? 10 : 8; }
  int dim_complex() const { return 1 << k(); }

  // diag(-1, +1, ..., +1) in ten_d; identity in eight_d.
  Rational metric(int a, int b) const;

  friend bool operator==(const SpinorModel&, const SpinorModel&) = default;
};

inline SpinorModel ten_d_model() { return SpinorModel{SpinorKind::ten_d}; }
inline SpinorModel eight_d_model() { return SpinorModel{SpinorKind::eight_d}; }

// Sparse element of the module: subset-of-{1..k} basis (bit i-1 set when the
// generator e_i is present), Scalar coefficients, zeros never stored.
class Spinor {
 public:
  Spinor() = default;
  explicit Spinor(SpinorModel model) : model_(model) {}

  static Spinor basis(SpinorModel model, Mask subset, Scalar c = Scalar(1));

  const SpinorModel& model() const { return model_; }
  const std::map<Mask, Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Scalar coefficient(Mask subset) const;
  void add_term(Mask subset, const Scalar& c);

  Spinor operator-() const;
  Spinor& operator+=(const Spinor& o);
  Spinor& operator-=(const Spinor& o);
  Spinor& operator*=(const Scalar& c);
  friend Spinor operator+(Spinor a, const Spinor& b) { return a += b; }
  friend Spinor operator-(Spinor a, const Spinor& b) { return a -= b; }
  friend Spinor operator*(Spinor a, const Scalar& c) { return a *= c; }
  friend Spinor operator*(const Scalar& c, Spinor a) { return a *= c; }

  // Entrywise complex conjugation of the coefficients.
  Spinor conj() const;

  friend bool operator==(const Spinor& a, const Spinor& b) {
    return a.model_ == b.model_ && a.coeffs_ == b.coeffs_;
  }

  // Textual encoding matching the spinor grammar: "1" is the empty subset,
  // "e" plus increasing digits a nonempty one; complex coefficients are
  // split into a real and an imaginary printed term so the output stays
  // inside the grammar, e.g. "1/2*e12+3/4i*e12".
  std::string str() const;

 private:
  SpinorModel model_;
  std::map<Mask, Scalar> coeffs_;
};

// +1 when every subset is even, -1 when every subset is odd, 0 for the zero
// spinor; throws std::invalid_argument on mixed parity.
int chirality(const Spinor& z);

// Gamma matrix for one frame index applied to a spinor.  Flips chirality.
Spinor gamma_apply(int a, const Spinor& z);

// Product word: gamma_word({a1,...,ak}, z) applies the rightmost index
// first, i.e. the result is Gamma_{a1} ... Gamma_{ak} z.
Spinor gamma_word(const std::vector<int>& indices, const Spinor& z);

Mat model_metric_matrix(const SpinorModel& m);

// Rotation generator in the (a,b) plane: (M_ab)^C_D = d^C_a g_bD - d^C_b g_aD.
Mat so_generator(const SpinorModel& m, int a, int b);

// All so_generator(m, a, b) with a < b: 45 elements in ten_d, 28 in eight_d.
std::vector<Mat> so_basis(const SpinorModel& m);

// Infinitesimal spin representation sigma(x) = 1/4 x^{AB} Gamma_A Gamma_B
// with x^{AB} = x^A_C g^{CB}.  Requires x^T g + g x = 0 over the model
// metric; preserves chirality and turns commutators into commutators.
Spinor spin_act(const Mat& x, const Spinor& eps);

// Antilinear involution fixing the real module elements: conjugate the
// coefficients, then apply the product of the four imaginary-direction
// gammas.  The overall sign is +1, which makes 1+e1234 real in both models.
Spinor reality_map(const Spinor& eps);
bool is_majorana(const Spinor& eps);

// (eps + reality_map(eps))/2 and (eps - reality_map(eps))/(2i); both are
// fixed by the reality map.
Spinor real_part(const Spinor& eps);
Spinor imag_part(const Spinor& eps);

// The nonzero ones among {real_part, imag_part}.
std::vector<Spinor> majorana_parts(const Spinor& eps);

// Hermitian product making the subset basis orthonormal; antilinear in the
// first argument.
Scalar hermitian(const Spinor& a, const Spinor& b);

// Invariant inner product: -hermitian(Gamma_0 a, b) in ten_d (the sign makes
// the 1-form bilinear of 1+e1234 a positive multiple of e^-), hermitian
// itself in eight_d.  Antilinear in the first argument; spin_act-invariant.
Scalar dirac(const Spinor& a, const Spinor& b);

// Frame the form bilinears live on: 10-dim lightcone / 8-dim euclidean.
FrameContext bilinear_frame(const SpinorModel& m);

// Model coframe expressed in the bilinear frame, one row per model index:
// e^A = sum_nu S(A, nu) e^nu.  Satisfies S g_frame S^T = g_model.
Mat model_to_frame(const SpinorModel& m);

// Conjugate a model-coordinate so-matrix into bilinear-frame coordinates:
// S^{-1} x S.  Orthogonal-algebra membership is preserved exactly.
Mat algebra_to_frame(const SpinorModel& m, const Mat& x);

// Degree-k form bilinear: coefficient at A1 < ... < Ak is
// dirac(a, Gamma_{A1} ... Gamma_{Ak} b), assembled on bilinear_frame(m).
// Equivariant: bilinear(spin_act(x,a), b, k) + bilinear(a, spin_act(x,b), k)
// = so_act(algebra_to_frame(m, x), bilinear(a, b, k)).
Form bilinear(const Spinor& a, const Spinor& b, int k);

Spinor parse_spinor(std::string_view text, SpinorModel model);

// Random sparse spinor; chirality 0 draws any subsets, +1/-1 restricts to
// even/odd ones.
Spinor random_spinor(SplitMix64& rng, SpinorModel model, int chirality = 0,
                     int max_terms = 4);

}  // namespace holoforms
