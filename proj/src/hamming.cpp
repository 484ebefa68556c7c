#include "hamwit/hamming.hpp"

#include <limits>
#include <sstream>

namespace hamwit {

namespace {

constexpr VertexRank kRankLimit = VertexRank{1} << 63;

}  // namespace

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidResidue: return "InvalidResidue";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidT: return "InvalidT";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::KTooSmall: return "KTooSmall";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::NotAdjacent: return "NotAdjacent";
    case ErrorCode::NotAMember: return "NotAMember";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
  }
  return "UnknownError";
}

void GraphParams::validate() const {
  if (n < 1) {
    throw Error(ErrorCode::InvalidParams, "n must be >= 1, got " + std::to_string(n));
  }
  if (k < 2) {
    throw Error(ErrorCode::InvalidParams, "k must be >= 2, got " + std::to_string(k));
  }
}

VertexRank GraphParams::vertex_count() const {
  validate();
  VertexRank count = 1;
  for (int i = 0; i < n; ++i) {
    if (count > kRankLimit / k) {
      throw Error(ErrorCode::Overflow,
                  "k^n exceeds 2^63 for n=" + std::to_string(n) + ", k=" + std::to_string(k));
    }
    count *= k;
  }
  return count;
}

bool is_valid_vertex(const Vertex& v, const GraphParams& p) {
  if (v.size() != static_cast<std::size_t>(p.n)) return false;
  for (Coord c : v) {
    if (c >= p.k) return false;
  }
  return true;
}

void require_valid_vertex(const Vertex& v, const GraphParams& p) {
  if (v.size() != static_cast<std::size_t>(p.n)) {
    throw Error(ErrorCode::DimensionMismatch,
                "vertex has " + std::to_string(v.size()) + " coordinates, expected " +
                    std::to_string(p.n));
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] >= p.k) {
      throw Error(ErrorCode::InvalidResidue,
                  "coordinate " + std::to_string(i + 1) + " is " + std::to_string(v[i]) +
                      ", outside [0, " + std::to_string(p.k) + ")");
    }
  }
}

bool is_zero_vertex(const Vertex& v) {
  for (Coord c : v) {
    if (c != 0) return false;
  }
  return true;
}

Coord coord_sum(const Vertex& v, const GraphParams& p) {
  std::uint64_t sum = 0;
  for (Coord c : v) sum += c;
  return static_cast<Coord>(sum % p.k);
}

int last_nonzero(const Vertex& v) {
  for (std::size_t i = v.size(); i > 0; --i) {
    if (v[i - 1] != 0) return static_cast<int>(i);
  }
  throw Error(ErrorCode::ZeroVector, "last_nonzero is undefined on the zero vector");
}

bool are_adjacent(const Vertex& v, const Vertex& w, const GraphParams& p) {
  if (v.size() != w.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "vertices have " + std::to_string(v.size()) + " and " + std::to_string(w.size()) +
                    " coordinates");
  }
  (void)p;
  int differing = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != w[i] && ++differing > 1) return false;
  }
  return differing == 1;
}

std::vector<Vertex> neighbors(const Vertex& v, const GraphParams& p) {
  require_valid_vertex(v, p);
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(p.n) * (p.k - 1));
  for_each_neighbor(v, p, [&](const Vertex& w) { out.push_back(w); });
  return out;
}

VertexRank rank_of(const Vertex& v, const GraphParams& p) {
  require_valid_vertex(v, p);
  VertexRank r = 0;
  for (std::size_t i = v.size(); i > 0; --i) {
    r = r * p.k + v[i - 1];
  }
  return r;
}

Vertex unrank(VertexRank r, const GraphParams& p) {
  const VertexRank total = p.vertex_count();
  if (r >= total) {
    throw Error(ErrorCode::RankOutOfRange,
                "rank " + std::to_string(r) + " is outside [0, " + std::to_string(total) + ")");
  }
  Vertex v(static_cast<std::size_t>(p.n));
  for (int i = 0; i < p.n; ++i) {
    v[static_cast<std::size_t>(i)] = static_cast<Coord>(r % p.k);
    r /= p.k;
  }
  return v;
}

std::string vertex_to_string(const Vertex& v, const GraphParams& p) {
  std::string out;
  if (p.k <= 10) {
    out.reserve(v.size());
    for (Coord c : v) out.push_back(static_cast<char>('0' + c));
  } else {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) out.push_back(',');
      out += std::to_string(v[i]);
    }
  }
  return out;
}

Vertex vertex_from_string(const std::string& text, const GraphParams& p) {
  Vertex v;
  if (p.k <= 10) {
    v.reserve(text.size());
    for (char ch : text) {
      if (ch < '0' || ch > '9') {
        throw Error(ErrorCode::InvalidResidue,
                    std::string("invalid digit '") + ch + "' in vertex string");
      }
      v.push_back(static_cast<Coord>(ch - '0'));
    }
  } else {
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
      try {
        v.push_back(static_cast<Coord>(std::stoul(token)));
      } catch (const std::exception&) {
        throw Error(ErrorCode::InvalidResidue, "invalid coordinate '" + token + "' in vertex string");
      }
    }
  }
  require_valid_vertex(v, p);
  return v;
}

}  // namespace hamwit
