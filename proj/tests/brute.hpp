#ifndef HAMWIT_TESTS_BRUTE_HPP
#define HAMWIT_TESTS_BRUTE_HPP

// Test-only brute-force reference implementations. These are written as
// naive digit-vector loops on purpose: they share no code with the
// library and serve as the independent oracle the library is checked
// against on small instances.

#include <cstdint>
#include <vector>

namespace brute {

using Digits = std::vector<unsigned>;

// Every vertex of H(n,k) in mixed-radix order with coordinate 1 as the
// least significant digit. Position in the list is the rank.
inline std::vector<Digits> all_vertices(int n, unsigned k) {
  std::vector<Digits> out;
  Digits v(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < v.size()) {
      if (++v[i] == k) {
        v[i] = 0;
        ++i;
      } else {
        break;
      }
    }
    if (i == v.size()) break;
  }
  return out;
}

inline unsigned sum_mod(const Digits& v, unsigned k) {
  unsigned long long total = 0;
  for (unsigned d : v) total += d;
  return static_cast<unsigned>(total % k);
}

// 1-based index of the last nonzero digit; 0 for the zero vector.
inline int last_nonzero_index(const Digits& v) {
  for (int i = static_cast<int>(v.size()); i >= 1; --i) {
    if (v[static_cast<std::size_t>(i - 1)] != 0) return i;
  }
  return 0;
}

inline int hamming_distance(const Digits& a, const Digits& b) {
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]) ? 1 : 0;
  return d;
}

inline bool member_x(const Digits& v, unsigned s, unsigned k) { return sum_mod(v, k) == s; }

inline bool member_y(const Digits& v, unsigned s, unsigned t, unsigned k) {
  const int ell = last_nonzero_index(v);
  if (ell == 0) return false;
  return sum_mod(v, k) == s && v[static_cast<std::size_t>(ell - 1)] == t;
}

inline bool member_z(const Digits& v, unsigned s, unsigned t, int c, unsigned k) {
  return member_y(v, s, t, k) && last_nonzero_index(v) == c;
}

inline bool member_w(const Digits& v, unsigned k) {
  if (member_y(v, 1, 1, k)) return true;
  for (unsigned i = 2; i + 1 <= k; ++i) {
    if (member_y(v, 2, i, k)) return true;
  }
  return false;
}

}  // namespace brute

#endif  // HAMWIT_TESTS_BRUTE_HPP
