#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

#include "holoforms/frame.hpp"

namespace holoforms {

inline std::size_t ipow(int n, int k) {
  std::size_t r = 1;
  while (k-- > 0) r *= static_cast<std::size_t>(n);
  return r;
}

inline int permutation_sign(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return (inv & 1) ? -1 : 1;
}

// Sorts t ascending in place and returns the sign of the sorting permutation,
// or 0 when two entries coincide.
inline int sort_sign(std::vector<int>& t) {
  int sign = 1;
  for (std::size_t i = 1; i < t.size(); ++i) {
    std::size_t j = i;
    while (j > 0 && t[j - 1] > t[j]) {
      std::swap(t[j - 1], t[j]);
      sign = -sign;
      --j;
    }
    if (j > 0 && t[j - 1] == t[j]) return 0;
  }
  return sign;
}

// Advances a strictly increasing k-tuple over 0..n-1; false when exhausted.
inline bool next_combination(std::vector<int>& c, int n) {
  int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - (k - i)) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline std::vector<int> first_combination(int k) {
  std::vector<int> c(k);
  std::iota(c.begin(), c.end(), 0);
  return c;
}

inline Mask tuple_mask(const std::vector<int>& t) {
  Mask m = 0;
  for (int i : t) m |= Mask(1) << i;
  return m;
}

inline std::vector<int> mask_tuple(Mask m) {
  std::vector<int> t;
  for (int i = 0; i < 32; ++i)
    if (m & (Mask(1) << i)) t.push_back(i);
  return t;
}

}  // namespace holoforms
