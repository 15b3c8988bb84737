#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "holoforms/form.hpp"
#include "holoforms/linalg.hpp"
#include "holoforms/rng.hpp"
#include "holoforms/structures.hpp"

namespace holoforms {

// Bracket closure of form sets into finite-dimensional (super-)Lie algebra
// presentations, graded Jacobi verification, basis-independent fingerprints,
// and identification against the built-in answer catalog.

enum class BracketKind { barwedge, barcurlywedge };

std::string bracket_kind_name(BracketKind k);
// Throws std::invalid_argument for anything but "barwedge"/"barcurlywedge".
BracketKind bracket_kind_from_name(std::string_view name);

// Parity of a degree-d homogeneous form as a generator of the bracket's
// superalgebra.  The two kinds grade differently:
//  - barcurlywedge: (d - 1) mod 2.  Null forms act through their transverse
//    part, whose inner derivation shifts degrees by d - 2 - 1.
//  - barwedge: d mod 2, the parity of the inner derivation i_{raise(phi)}.
//    (d - 1) is impossible here: e1 barwedge e1 = 1 is a nonzero square, so
//    degree-1 forms must be odd.
int bracket_parity(BracketKind kind, int degree);

// The superbracket of two homogeneous forms on a common frame.
//  - barcurlywedge: the twisted null bracket (lightcone frames, null forms).
//  - barwedge: (-1)^{deg a} * (a barwedge b), which makes
//    phi -> i_{raise(phi)} a super-homomorphism onto operator commutators.
//    Degree-0 forms are the kernel of that map (contraction by a scalar is
//    the zero operator) and bracket to zero with everything.  On forms null
//    along kappa the bracket vanishes identically, so closures of null
//    structures under barwedge are always abelian.
Form bracket_form(BracketKind kind, const Form& a, const Form& b);

struct Generator {
  std::string label;
  int degree = 0;
  int parity = 0;  // 0 even, 1 odd
  friend bool operator==(const Generator&, const Generator&) = default;
};

// Exact structure constants [x_i, x_j] = sum_k c_{ij}^k x_k over named
// generators.  Rows are stored for i <= j only and never all-zero; the
// i > j values follow from graded antisymmetry
//   [x_j, x_i] = -(-1)^{p_i p_j} [x_i, x_j].
// Construction rejects tables that violate the grading (a nonzero c_{ij}^k
// needs parity_k = parity_i + parity_j mod 2) or give an even generator a
// nonzero square.
class Presentation {
 public:
  Presentation(BracketKind kind, std::vector<Generator> generators,
               std::map<std::pair<int, int>, Vec> brackets);

  BracketKind kind() const { return kind_; }
  const std::vector<Generator>& generators() const { return gens_; }
  int dim() const { return static_cast<int>(gens_.size()); }
  int even_dim() const;
  int odd_dim() const;

  // Index of the generator with this label; throws std::out_of_range.
  int index_of(std::string_view label) const;

  // Coefficients of [x_i, x_j] for any index pair, swap handled.
  Vec bracket(int i, int j) const;
  // Bilinear extension to arbitrary coefficient vectors.
  Vec bracket_vec(const Vec& x, const Vec& y) const;

  const std::map<std::pair<int, int>, Vec>& stored_brackets() const { return brackets_; }

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  BracketKind kind_ = BracketKind::barcurlywedge;
  std::vector<Generator> gens_;
  std::map<std::pair<int, int>, Vec> brackets_;
};

struct JacobiFailure {
  int i = 0;
  int j = 0;
  int k = 0;
  std::string detail;
};

struct JacobiReport {
  int triples = 0;
  std::vector<JacobiFailure> failures;
  bool ok() const { return failures.empty(); }
};

// Graded Jacobi residual
//   (-1)^{p_i p_k} [x_i,[x_j,x_k]] + (-1)^{p_j p_i} [x_j,[x_k,x_i]]
//                                  + (-1)^{p_k p_j} [x_k,[x_i,x_j]]
// for every triple i <= j <= k (repeats included; odd squares matter).
JacobiReport jacobi_check(const Presentation& p);

// Isomorphism invariants of a presentation, unchanged under any exact
// parity-preserving change of basis.  The Killing data is that of the even
// subalgebra on its own (trace over the even part); the odd part enters
// through the dimension of [odd, odd].
struct Fingerprint {
  int total_dim = 0;
  int even_dim = 0;
  int odd_dim = 0;
  int center_dim = 0;
  int center_in_derived_dim = 0;
  // Dimensions of the derived series g', g'', ...: successive values until
  // the first repeated (stable) or zero entry, which is included once.
  std::vector<int> derived_series;
  int even_killing_rank = 0;
  Signature even_killing_signature;
  bool abelian = false;
  int odd_square_dim = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  std::string str() const;
};

Fingerprint fingerprint(const Presentation& p);

// Matches the fingerprint against the answer catalog
//   R^k (abelian), sp(1), sp(1)+sp(1), so(5), u(4), so(8),
//   e_hat(2) (dim 4, center dim 1 inside the derived algebra),
//   s(1), s(2)
// and returns the name ("R" for the 1-dimensional abelian algebra), or
// "unrecognized".  Throws std::domain_error when jacobi_check fails.
std::string identify(const Presentation& p);

// Deterministic random parity-preserving change of basis built from
// elementary shears and scalings; generators relabeled b1..bn.  Fingerprints
// are invariant under it.
Presentation random_basis_change(const Presentation& p, SplitMix64& rng);

struct Closure {
  Presentation presentation;
  // A form realizing each generator, in generator order: the inputs first,
  // then every element the closure had to adjoin.
  std::vector<NamedForm> elements;
};

// Iteratively brackets all pairs (processed in label order, so output labels
// are stable) and extends the spanning set with every result outside the
// current span.  A new element proportional to a curlywedge power of an
// input generator g is stored as that power, labeled "curly^k(<g>)", with
// the proportionality constant kept in the bracket row; anything else is
// adjoined verbatim under its bracket word "[<left>,<right>]".  Throws
// std::runtime_error naming the runaway word when the dimension would
// exceed max_dim.
Closure close(const std::vector<NamedForm>& generators, BracketKind kind, int max_dim = 64);

// The closure seeds for a structure: its fundamental forms without the
// kappa line.  kappa brackets to zero with every null form, so it splits
// off as a central summand and the reduced algebra carries the content.
std::vector<NamedForm> reduced_seeds(const std::vector<NamedForm>& fundamental);

// Recorded global sign conventions the exported structure constants depend
// on: contractions use the unnormalized rightmost-first merge-sign rule with
// no global flip, and the spinor reality map is conjugation followed by
// +Gamma over the imaginary block.
inline constexpr const char* kContractionSign = "+1";
inline constexpr const char* kRealitySign = "+1";

// Structure-constants document:
//   { "bracket": ..., "generators": [{label, degree, parity}, ...],
//     "brackets": [{left, right, result: [{coef, gen}, ...]}, ...],
//     "convention": { "contraction_sign", "reality_sign" } }
// Coefficients are exact rational strings.  parse accepts rows in either
// orientation and normalizes; emit writes i <= j rows in generator order.
std::string presentation_to_json(const Presentation& p);
Presentation presentation_from_json(std::string_view text);

}  // namespace holoforms
