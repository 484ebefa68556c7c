#ifndef HAMWIT_HAMMING_HPP
#define HAMWIT_HAMMING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hamwit/errors.hpp"

namespace hamwit {

// A vertex of H(n,k) is a length-n vector over {0,...,k-1}. Storage is
// 0-based: coords[i] is coordinate i+1 in the 1-based convention used by
// every public function that reports a coordinate index.
using Coord = std::uint32_t;
using Vertex = std::vector<Coord>;

// Mixed-radix rank with coordinate 1 as the least significant digit:
// rank(v) = sum_i v(i) * k^(i-1). This is the one canonical enumeration
// order used by every stream and file format.
using VertexRank = std::uint64_t;

struct GraphParams {
  int n = 1;    // number of coordinates, >= 1
  Coord k = 2;  // alphabet size, >= 2

  void validate() const;  // throws Error(InvalidParams)

  // k^n, checked: throws Error(Overflow) once k^n > 2^63.
  VertexRank vertex_count() const;

  bool operator==(const GraphParams&) const = default;
};

bool is_valid_vertex(const Vertex& v, const GraphParams& p);
// Throws DimensionMismatch / InvalidResidue.
void require_valid_vertex(const Vertex& v, const GraphParams& p);

bool is_zero_vertex(const Vertex& v);

// (sum_i v(i)) mod k.
Coord coord_sum(const Vertex& v, const GraphParams& p);

// Largest 1-based index i with v(i) != 0. Throws ZeroVector on (0,...,0).
int last_nonzero(const Vertex& v);

// True iff v and w differ in exactly one coordinate.
bool are_adjacent(const Vertex& v, const Vertex& w, const GraphParams& p);

// Visits the n*(k-1) neighbours of v in canonical order: coordinate index
// ascending, replacement value ascending. The callback receives a scratch
// vertex that is only valid for the duration of the call.
template <typename F>
void for_each_neighbor(const Vertex& v, const GraphParams& p, F&& visit) {
  Vertex scratch = v;
  for (int i = 0; i < p.n; ++i) {
    const Coord original = scratch[static_cast<std::size_t>(i)];
    for (Coord value = 0; value < p.k; ++value) {
      if (value == original) continue;
      scratch[static_cast<std::size_t>(i)] = value;
      visit(static_cast<const Vertex&>(scratch));
    }
    scratch[static_cast<std::size_t>(i)] = original;
  }
}

std::vector<Vertex> neighbors(const Vertex& v, const GraphParams& p);

VertexRank rank_of(const Vertex& v, const GraphParams& p);
// Throws RankOutOfRange for r >= k^n.
Vertex unrank(VertexRank r, const GraphParams& p);

// Text form: for k <= 10 a contiguous digit string with coordinate 1
// leftmost ("021" means v(1)=0, v(2)=2, v(3)=1); for k > 10 comma-separated
// decimal values. Used by all file I/O and CLI echoing.
std::string vertex_to_string(const Vertex& v, const GraphParams& p);
Vertex vertex_from_string(const std::string& text, const GraphParams& p);

namespace detail {
// Residue arithmetic on values already reduced into [0, k).
inline Coord mod_sub(Coord a, Coord b, Coord k) { return (a + k - b) % k; }
}  // namespace detail

}  // namespace hamwit

#endif  // HAMWIT_HAMMING_HPP
