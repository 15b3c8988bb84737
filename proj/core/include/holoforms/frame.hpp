#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "holoforms/rational.hpp"

namespace holoforms {

// A set of frame indices, as a bitmask over internal indices 0..dim-1.
// Internal index order for lightcone frames: 0 is the "-" direction, 1 is
// "+", and 2..dim-1 are the transverse directions 1..dim-2.
using Mask = std::uint32_t;

inline int mask_size(Mask m) { return __builtin_popcount(m); }
inline bool mask_contains(Mask m, int idx) { return (m >> idx) & 1u; }

// Sign of e^A wedge e^B for disjoint index sets A, B: (-1)^(number of
// transpositions needed to merge-sort the concatenation).
inline int merge_sign(Mask a, Mask b) {
  int swaps = 0;
  for (Mask rest = b; rest;) {
    int j = __builtin_ctz(rest);
    rest &= rest - 1;
    swaps += __builtin_popcount(a >> (j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

// Sign picked up by i_{e_j} acting on e^S when j is the k-th index of S:
// (-1)^(k-1).
inline int contraction_sign(Mask s, int j) {
  return (__builtin_popcount(s & ((Mask(1) << j) - 1)) & 1) ? -1 : 1;
}

enum class FrameKind { euclidean, lightcone };

// A pointwise metric frame.  Euclidean: identity metric.  Lightcone:
// g = 2 e^- e^+ + delta_ij e^i e^j, i.e. g(-,+) = g(+,-) = 1 with an
// identity transverse block; this matrix is its own inverse.
struct FrameContext {
  int dim = 0;
  FrameKind kind = FrameKind::euclidean;

  friend bool operator==(const FrameContext&, const FrameContext&) = default;

  bool valid_index(int a) const { return a >= 0 && a < dim; }

  Rational metric(int a, int b) const {
    if (!valid_index(a) || !valid_index(b)) throw std::out_of_range("frame index out of range");
    if (kind == FrameKind::euclidean) return a == b ? 1 : 0;
    if (a < 2 || b < 2) return (a + b == 1) ? 1 : 0;  // {-,+} block is [[0,1],[1,0]]
    return a == b ? 1 : 0;
  }

  // Both supported metrics are involutive as matrices.
  Rational inverse_metric(int a, int b) const { return metric(a, b); }

  // User-facing index names: euclidean counts 1..dim; lightcone uses
  // "m", "p", then transverse 1..dim-2.
  std::string index_name(int a) const {
    if (!valid_index(a)) throw std::out_of_range("frame index out of range");
    if (kind == FrameKind::lightcone) {
      if (a == 0) return "m";
      if (a == 1) return "p";
      return std::to_string(a - 1);
    }
    return std::to_string(a + 1);
  }
};

// True when some index of this frame needs more than one character.  Such
// frames print and parse index runs with '.' between every name; a dotless
// run is then a single index.
inline bool frame_has_wide_names(const FrameContext& f) {
  return f.index_name(f.dim - 1).size() > 1;
}

inline FrameContext euclidean_frame(int dim) { return FrameContext{dim, FrameKind::euclidean}; }
inline FrameContext lightcone_frame(int dim) {
  if (dim < 2) throw std::invalid_argument("lightcone frame needs dim >= 2");
  return FrameContext{dim, FrameKind::lightcone};
}

}  // namespace holoforms
