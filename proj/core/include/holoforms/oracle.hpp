#pragma once

// Dense, factorial-normalized reference implementations of the exterior
// operations.  Deliberately brute force and structurally independent of the
// sparse kernel: tensors are stored over all index tuples and every
// operation runs the full permutation sums with explicit 1/(p!q!)-style
// prefactors.  The verification suites compare the sparse kernel against
// these on random data.

#include <vector>

#include "holoforms/form.hpp"
#include "holoforms/rng.hpp"

namespace holoforms::oracle {

// Rank-k tensor on n indices, stored densely over all n^k tuples.
struct DenseForm {
  int n = 0;
  int k = 0;
  std::vector<Scalar> a;

  DenseForm(int n_, int k_);
  std::size_t flat(const std::vector<int>& t) const;
  const Scalar& get(const std::vector<int>& t) const { return a[flat(t)]; }
  void set(const std::vector<int>& t, const Scalar& v) { a[flat(t)] = v; }
};

// One upper index plus a rank-l dense block.
struct DenseVectorForm {
  int n = 0;
  int l = 0;
  std::vector<Scalar> a;

  DenseVectorForm(int n_, int l_);
  std::size_t flat(int upper, const std::vector<int>& t) const;
  const Scalar& get(int upper, const std::vector<int>& t) const { return a[flat(upper, t)]; }
  void set(int upper, const std::vector<int>& t, const Scalar& v) { a[flat(upper, t)] = v; }
};

DenseForm densify(const Form& f);
DenseVectorForm densify(const VectorForm& vf);
Form sparsify(const DenseForm& d, const FrameContext& frame);

// (a ^ b)_{M} = 1/(p! q!) sum_sigma sgn(sigma) a_{M sigma first p} b_{rest}.
DenseForm dense_wedge(const DenseForm& x, const DenseForm& y);

// First-index raise with the inverse metric.
DenseVectorForm dense_raise(const DenseForm& phi, const FrameContext& frame);

// The coordinate formula: (i_L phi)_{N} =
// 1/(l!(p-1)!) sum_sigma sgn(sigma) L^mu_{N sigma first l} phi_{mu, rest}.
DenseForm dense_inner(const DenseVectorForm& l, const DenseForm& phi);

DenseForm dense_barwedge(const DenseForm& lambda, const DenseForm& chi,
                         const FrameContext& frame);

// Random sparse data generators shared by tests and verification suites.
Form random_form(SplitMix64& rng, const FrameContext& frame, int degree, int max_terms = 6);
VectorForm random_vector_form(SplitMix64& rng, const FrameContext& frame, int lower_degree,
                              int max_terms = 6);

}  // namespace holoforms::oracle
