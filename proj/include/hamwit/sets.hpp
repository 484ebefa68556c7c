#ifndef HAMWIT_SETS_HPP
#define HAMWIT_SETS_HPP

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "hamwit/hamming.hpp"

namespace hamwit {

// Symbolic descriptors for the vertex sets of the construction:
//   X(s)      all vertices with coordinate sum = s (mod k)
//   Y(s,t)    nonzero vertices of X(s) whose last nonzero coordinate is t
//   Z(s,t,c)  vertices of Y(s,t) with last nonzero index c (1-based)
//   W         Y(1,1) together with Y(2,i) for i = 2..k-1
struct XSpec {
  Coord s;
  bool operator==(const XSpec&) const = default;
};
struct YSpec {
  Coord s;
  Coord t;
  bool operator==(const YSpec&) const = default;
};
struct ZSpec {
  Coord s;
  Coord t;
  int c;
  bool operator==(const ZSpec&) const = default;
};
struct WSpec {
  bool operator==(const WSpec&) const = default;
};

using SetSpec = std::variant<XSpec, YSpec, ZSpec, WSpec>;

// Throws InvalidResidue / InvalidT / IndexOutOfRange / KTooSmall.
void validate_spec(const SetSpec& spec, const GraphParams& p);

// Textual forms "X:s", "Y:s,t", "Z:s,t,c", "W" with decimal integers and
// 1-based c. Residue ranges are checked by validate_spec, not here.
std::string spec_to_string(const SetSpec& spec);
SetSpec parse_set_spec(const std::string& text);  // throws InvalidSpec

// Membership predicates, all O(n).
bool in_x(const Vertex& v, Coord s, const GraphParams& p);
bool in_y(const Vertex& v, Coord s, Coord t, const GraphParams& p);
bool in_z(const Vertex& v, Coord s, Coord t, int c, const GraphParams& p);
bool in_w(const Vertex& v, const GraphParams& p);  // throws KTooSmall for k < 3
bool in_set(const Vertex& v, const SetSpec& spec, const GraphParams& p);

// The vertex equal to v except that coordinate l(v) is replaced by t2.
// Requires v nonzero, v(l(v)) = t1, t2 != 0, t1 != t2; throws
// PreconditionViolation naming the failed condition otherwise. The result
// w satisfies l(w) = l(v) and coord_sum(w) = coord_sum(v) - t1 + t2.
Vertex partner(const Vertex& v, Coord t1, Coord t2, const GraphParams& p);

// Closed-form sizes, arbitrary precision. These are pure formula
// evaluations and work far beyond the enumeration range.
mpz_class size_alpha(const GraphParams& p);              // k^(n-1)
mpz_class size_x(Coord s, const GraphParams& p);         // k^(n-1)
mpz_class size_y(Coord s, Coord t, const GraphParams& p);
mpz_class size_z(Coord s, Coord t, int c, const GraphParams& p);
mpz_class size_w(const GraphParams& p);                  // k^(n-1) + 1

// Streams the members of a set in ascending rank order with no duplicates.
// Memory use is O(n) regardless of set size. The optional [lo, hi) rank
// window restricts the walk, which lets callers partition the rank space
// across workers and merge chunks back in order.
class SetEnumerator {
 public:
  SetEnumerator(const SetSpec& spec, const GraphParams& p);
  SetEnumerator(const SetSpec& spec, const GraphParams& p, VertexRank lo, VertexRank hi);

  // Next member, or nullptr when exhausted. The pointer stays valid until
  // the following call.
  const Vertex* next();

  // Rank of the vertex most recently returned by next().
  VertexRank current_rank() const { return rank_; }

 private:
  void advance();

  SetSpec spec_;
  GraphParams params_;
  Vertex current_;
  VertexRank rank_ = 0;
  VertexRank end_ = 0;
  bool pending_advance_ = false;
};

// Streaming count of the members of a set.
std::uint64_t count_members(const SetSpec& spec, const GraphParams& p);

}  // namespace hamwit

#endif  // HAMWIT_SETS_HPP
