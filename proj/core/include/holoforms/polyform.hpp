#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "holoforms/frame.hpp"
#include "holoforms/rational.hpp"
#include "holoforms/rng.hpp"

namespace holoforms {

// Polynomial in chart coordinates x1..xn with rational coefficients.
// Exponent vectors are packed 8 bits per variable, so charts carry at most 8
// coordinates.
class PolyCoef {
 public:
  static constexpr int kMaxVars = 8;

  PolyCoef() = default;
  explicit PolyCoef(const Rational& c);

  // The monomial x_{v+1} (v is a 0-based variable index).
  static PolyCoef variable(int v);
  static PolyCoef monomial(const Rational& c, const std::vector<int>& exponents);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;

  PolyCoef operator-() const;
  PolyCoef& operator+=(const PolyCoef& o);
  PolyCoef& operator-=(const PolyCoef& o);
  friend PolyCoef operator+(PolyCoef a, const PolyCoef& b) { return a += b; }
  friend PolyCoef operator-(PolyCoef a, const PolyCoef& b) { return a -= b; }
  friend PolyCoef operator*(const PolyCoef& a, const PolyCoef& b);
  PolyCoef& operator*=(const Rational& c);
  friend PolyCoef operator*(PolyCoef a, const Rational& c) { return a *= c; }
  friend PolyCoef operator*(const Rational& c, PolyCoef a) { return a *= c; }
  bool operator==(const PolyCoef& o) const = default;

  // Partial derivative with respect to x_{v+1}.
  PolyCoef derivative(int v) const;

  const std::map<std::uint64_t, Rational>& terms() const { return terms_; }
  std::string str() const;

  static int exponent(std::uint64_t key, int v) {
    return static_cast<int>((key >> (8 * v)) & 0xff);
  }

 private:
  void add_monomial(std::uint64_t key, const Rational& c);
  // key -> coefficient; no zero coefficients stored
  std::map<std::uint64_t, Rational> terms_;
};

// Differential form on a flat chart R^n with polynomial coefficients.  Charts
// carry no metric; only d, inner derivations and their commutators live here.
class PolyForm {
 public:
  PolyForm() = default;
  PolyForm(int dim, int degree);

  static PolyForm basis(int dim, Mask s, PolyCoef c);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Mask, PolyCoef>& terms() const { return terms_; }

  PolyCoef coefficient(Mask s) const;
  void add_term(Mask s, const PolyCoef& c);

  PolyForm operator-() const;
  PolyForm& operator+=(const PolyForm& o);
  PolyForm& operator-=(const PolyForm& o);
  friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
  friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
  PolyForm& operator*=(const Rational& c);
  friend PolyForm operator*(PolyForm a, const Rational& c) { return a *= c; }

  // Forms are equal iff their term maps agree; zero forms of any degree
  // compare equal.
  bool operator==(const PolyForm& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

  std::string str() const;

 private:
  int dim_ = 0;
  int degree_ = 0;
  std::map<Mask, PolyCoef> terms_;
};

// Vector-valued form on a flat chart with polynomial coefficients.
class PolyVectorForm {
 public:
  struct Key {
    std::uint8_t upper = 0;
    Mask lower = 0;
    auto operator<=>(const Key&) const = default;
  };

  PolyVectorForm() = default;
  PolyVectorForm(int dim, int lower_degree);

  int dim() const { return dim_; }
  int lower_degree() const { return lower_degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, PolyCoef>& terms() const { return terms_; }

  PolyCoef coefficient(int upper, Mask lower) const;
  void add_term(int upper, Mask lower, const PolyCoef& c);

  // The slot L^mu as a PolyForm.
  PolyForm slot(int upper) const;

  PolyVectorForm operator-() const;
  PolyVectorForm& operator+=(const PolyVectorForm& o);
  PolyVectorForm& operator-=(const PolyVectorForm& o);
  friend PolyVectorForm operator+(PolyVectorForm a, const PolyVectorForm& b) { return a += b; }
  friend PolyVectorForm operator-(PolyVectorForm a, const PolyVectorForm& b) { return a -= b; }
  PolyVectorForm& operator*=(const Rational& c);
  friend PolyVectorForm operator*(PolyVectorForm a, const Rational& c) { return a *= c; }
  bool operator==(const PolyVectorForm& o) const {
    return dim_ == o.dim_ && terms_ == o.terms_;
  }

 private:
  int dim_ = 0;
  int lower_degree_ = 0;
  std::map<Key, PolyCoef> terms_;
};

PolyForm wedge(const PolyForm& a, const PolyForm& b);

// Exterior derivative: d(f e^S) = sum_v (df/dx_v) e^v /\ e^S.
PolyForm d(const PolyForm& phi);

// Inner derivation i_L phi for a vector-valued l-form L; degree p+l-1.
PolyForm inner(const PolyVectorForm& L, const PolyForm& phi);

// d_L := i_L d + (-1)^l d i_L.  For the identity vector 1-form d_L = d; for a
// vector field it is the Lie derivative (Cartan formula).
PolyForm d_L(const PolyVectorForm& L, const PolyForm& phi);

// (L barwedge M)^mu = i_L(M^mu), lower degree l+m-1.
PolyVectorForm vf_barwedge(const PolyVectorForm& l, const PolyVectorForm& m);

// The vector (l+m)-form N(L, M) with d_{N(L,M)} = [d_L, d_M].  Component
// formula, antisymmetrized over the combined lower index block.
PolyVectorForm nijenhuis(const PolyVectorForm& L, const PolyVectorForm& M);

// Lie derivative of phi along a vector field X (lower degree 0), computed
// from the coordinate formula for the flow pullback:
//   (Lie_X phi)_S = X^v d_v phi_S + sum_j (d_{s_j} X^v) phi_{s_1..v..s_p}.
PolyForm lie_derivative(const PolyVectorForm& X, const PolyForm& phi);

PolyVectorForm identity_poly_vector_form(int dim);

PolyCoef random_polycoef(SplitMix64& rng, int dim, int max_deg = 2, int max_terms = 2);
PolyForm random_polyform(SplitMix64& rng, int dim, int degree, int max_terms = 4);
PolyVectorForm random_polyvectorform(SplitMix64& rng, int dim, int lower_degree,
                                     int max_terms = 4);

// One counterexample from the derivation-commutator suite.
struct ExincomFailure {
  int trial = 0;
  int dim = 0;
  int ell = 0;
  int m = 0;
  // 1: [d_L,d_M] = d_N;  2: [i_L,d_M] = d_{L bw M} + (-1)^m i_N;
  // 3: [i_L,i_M] = i_{L bw M} + (-1)^{l+m+ml} i_{M bw L}
  int identity = 0;
  std::string detail;
};

struct ExincomReport {
  int trials = 0;
  int nontrivial = 0;  // trials where at least one commutator side was nonzero
  std::vector<ExincomFailure> failures;
  bool ok() const { return failures.empty(); }
};

// Checks the three derivation-commutator identities on random polynomial
// data: chart dims 2-4, lower degrees 0-2, polynomial degree <= 2.
// Deterministic for a fixed seed.
ExincomReport verify_exincom(std::uint64_t seed, int trials);

}  // namespace holoforms
