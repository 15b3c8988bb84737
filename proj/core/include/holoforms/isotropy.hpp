#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "holoforms/clifford.hpp"
#include "holoforms/form.hpp"
#include "holoforms/linalg.hpp"
#include "holoforms/rng.hpp"

namespace holoforms {

// Real Lie algebra of frame so-matrices (x^T g + g x = 0), closed under
// commutator.  Construction certifies closure by expressing every basis
// commutator in the basis; the structure constants are kept and can be
// re-verified at any time.
class Subalgebra {
 public:
  // Throws std::invalid_argument when a matrix is not in the orthogonal
  // algebra, the list is linearly dependent, or the span is not closed.
  Subalgebra(FrameContext frame, std::vector<Mat> basis);

  static Subalgebra trivial(FrameContext frame) { return Subalgebra(frame, {}); }

  const FrameContext& frame() const { return frame_; }
  const std::vector<Mat>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }

  // Coordinates of [basis_i, basis_j] in the basis.
  const Vec& bracket_coords(std::size_t i, std::size_t j) const { return sc_[i][j]; }

  // Matrix of ad(basis_i) in basis coordinates: column j holds [b_i, b_j].
  Mat adjoint(std::size_t i) const;
  // ad of the combination sum_i coords[i] basis_i.
  Mat adjoint(const Vec& coords) const;

  // The element with the given basis coordinates, as a frame matrix.
  Mat element(const Vec& coords) const;

  // Recompute every commutator from the matrices and compare against the
  // stored structure constants.
  bool verify_closure() const;

 private:
  FrameContext frame_;
  std::vector<Mat> basis_;
  std::vector<std::vector<Vec>> sc_;
};

// Killing form K(i,j) = tr(ad_i ad_j) in basis coordinates.
Mat killing_form(const Subalgebra& h);

// Basis (in h-coordinates) of the derived subalgebra [h, h].
std::vector<Vec> derived_subalgebra(const Subalgebra& h);

// Kernel of the Killing form, in h-coordinates.  For the stabilizer
// algebras of null spinor sets this is exactly the translation ideal.
std::vector<Vec> killing_kernel(const Subalgebra& h);

// Smallest centralizer dimension among a few random elements; for a compact
// semisimple algebra this is the Cartan-subalgebra rank.
std::size_t generic_centralizer_dim(const Subalgebra& h, SplitMix64& rng, int draws = 8);

struct IdealReport {
  std::size_t dim = 0;
  bool is_ideal = false;
  bool is_abelian = false;
  bool acts_nilpotently = false;  // ad_x ad_y = 0 for all x, y in the span
};

// Checks whether the given coordinate span is an abelian ideal acting
// nilpotently on h.
IdealReport ideal_check(const Subalgebra& h, const std::vector<Vec>& coords);

// Stabilizer of a spinor set: all x with x^T g + g x = 0 over the model
// metric and spin_act(x, eps_j) = 0 for every j, solved exactly and
// returned in bilinear-frame coordinates.
Subalgebra isotropy_algebra(const std::vector<Spinor>& spinors);

// Transverse blocks of a lightcone-frame algebra, as an algebra on the
// euclidean frame two dimensions down.  (The matrices of a null-spinor
// stabilizer are block-triangular for the flag spanned by e^-, so taking
// the block is a Lie homomorphism; dependent blocks are dropped.)
Subalgebra transverse_part(const Subalgebra& h);

// Exact basis of { phi in Lambda^k : so_act(x, phi) = 0 for all x in h },
// over the rationals (complex invariants are spanned by real ones times
// 1 and i).
std::vector<Form> invariant_forms(const Subalgebra& h, int k);

// Span of bilinear(eps_i, eps_j, k) over all ordered pairs: real dimension
// and a spanning subset of the forms.
std::pair<std::size_t, std::vector<Form>> bilinear_space(const std::vector<Spinor>& spinors,
                                                         int k);

// Majorana parts of every expression in the list, concatenated: the real
// spinor set a list of complex representatives stands for.
std::vector<Spinor> majorana_spinor_set(const std::vector<Spinor>& reps);

}  // namespace holoforms
