#include "hamwit/sets.hpp"

#include <sstream>

namespace hamwit {

namespace {

void require_residue(Coord value, const GraphParams& p, const char* name) {
  if (value >= p.k) {
    throw Error(ErrorCode::InvalidResidue, std::string(name) + " = " + std::to_string(value) +
                                               " is outside [0, " + std::to_string(p.k) + ")");
  }
}

void require_nonzero_t(Coord t, const GraphParams& p) {
  require_residue(t, p, "t");
  if (t == 0) {
    throw Error(ErrorCode::InvalidT, "t must be nonzero");
  }
}

void require_k_at_least_3(const GraphParams& p) {
  if (p.k < 3) {
    throw Error(ErrorCode::KTooSmall,
                "W requires k >= 3; the construction does not hold when k = 2");
  }
}

// k^e as mpz, e >= 0.
mpz_class mpz_pow(Coord k, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), k, e);
  return r;
}

// (k^(n-1) - 1) / (k - 1), the shared geometric sum. Division is exact.
mpz_class geometric_sum(const GraphParams& p) {
  mpz_class numerator = mpz_pow(p.k, static_cast<unsigned long>(p.n - 1)) - 1;
  mpz_class q;
  mpz_divexact_ui(q.get_mpz_t(), numerator.get_mpz_t(), p.k - 1);
  return q;
}

}  // namespace

void validate_spec(const SetSpec& spec, const GraphParams& p) {
  p.validate();
  if (const auto* x = std::get_if<XSpec>(&spec)) {
    require_residue(x->s, p, "s");
  } else if (const auto* y = std::get_if<YSpec>(&spec)) {
    require_residue(y->s, p, "s");
    require_nonzero_t(y->t, p);
  } else if (const auto* z = std::get_if<ZSpec>(&spec)) {
    require_residue(z->s, p, "s");
    require_nonzero_t(z->t, p);
    if (z->c < 1 || z->c > p.n) {
      throw Error(ErrorCode::IndexOutOfRange, "c = " + std::to_string(z->c) +
                                                  " is outside [1, " + std::to_string(p.n) + "]");
    }
  } else {
    require_k_at_least_3(p);
  }
}

std::string spec_to_string(const SetSpec& spec) {
  std::ostringstream out;
  if (const auto* x = std::get_if<XSpec>(&spec)) {
    out << "X:" << x->s;
  } else if (const auto* y = std::get_if<YSpec>(&spec)) {
    out << "Y:" << y->s << "," << y->t;
  } else if (const auto* z = std::get_if<ZSpec>(&spec)) {
    out << "Z:" << z->s << "," << z->t << "," << z->c;
  } else {
    out << "W";
  }
  return out.str();
}

SetSpec parse_set_spec(const std::string& text) {
  const auto fail = [&]() -> Error {
    return Error(ErrorCode::InvalidSpec,
                 "invalid set spec '" + text + "'; expected W, X:s, Y:s,t or Z:s,t,c");
  };
  if (text == "W") return WSpec{};
  if (text.size() < 3 || text[1] != ':') throw fail();

  std::vector<unsigned long> args;
  std::istringstream in(text.substr(2));
  std::string token;
  while (std::getline(in, token, ',')) {
    try {
      std::size_t used = 0;
      unsigned long value = std::stoul(token, &used);
      if (used != token.size()) throw fail();
      args.push_back(value);
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      throw fail();
    }
  }

  switch (text[0]) {
    case 'X':
      if (args.size() != 1) throw fail();
      return XSpec{static_cast<Coord>(args[0])};
    case 'Y':
      if (args.size() != 2) throw fail();
      return YSpec{static_cast<Coord>(args[0]), static_cast<Coord>(args[1])};
    case 'Z':
      if (args.size() != 3) throw fail();
      return ZSpec{static_cast<Coord>(args[0]), static_cast<Coord>(args[1]),
                   static_cast<int>(args[2])};
    default:
      throw fail();
  }
}

bool in_x(const Vertex& v, Coord s, const GraphParams& p) {
  require_residue(s, p, "s");
  return coord_sum(v, p) == s;
}

bool in_y(const Vertex& v, Coord s, Coord t, const GraphParams& p) {
  require_residue(s, p, "s");
  require_nonzero_t(t, p);
  std::uint64_t sum = 0;
  int last = 0;  // 1-based index of the last nonzero coordinate, 0 when none
  for (std::size_t i = 0; i < v.size(); ++i) {
    sum += v[i];
    if (v[i] != 0) last = static_cast<int>(i + 1);
  }
  if (last == 0) return false;  // the zero vector belongs to no Y set
  return sum % p.k == s && v[static_cast<std::size_t>(last - 1)] == t;
}

bool in_z(const Vertex& v, Coord s, Coord t, int c, const GraphParams& p) {
  validate_spec(ZSpec{s, t, c}, p);
  if (!in_y(v, s, t, p)) return false;
  return last_nonzero(v) == c;
}

bool in_w(const Vertex& v, const GraphParams& p) {
  require_k_at_least_3(p);
  std::uint64_t sum = 0;
  int last = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    sum += v[i];
    if (v[i] != 0) last = static_cast<int>(i + 1);
  }
  if (last == 0) return false;
  const Coord s = static_cast<Coord>(sum % p.k);
  const Coord t = v[static_cast<std::size_t>(last - 1)];
  if (s == 1 && t == 1) return true;                 // Y(1,1)
  return s == 2 && t >= 2 && t <= p.k - 1;           // Y(2,i), 2 <= i <= k-1
}

bool in_set(const Vertex& v, const SetSpec& spec, const GraphParams& p) {
  if (const auto* x = std::get_if<XSpec>(&spec)) return in_x(v, x->s, p);
  if (const auto* y = std::get_if<YSpec>(&spec)) return in_y(v, y->s, y->t, p);
  if (const auto* z = std::get_if<ZSpec>(&spec)) return in_z(v, z->s, z->t, z->c, p);
  return in_w(v, p);
}

Vertex partner(const Vertex& v, Coord t1, Coord t2, const GraphParams& p) {
  require_valid_vertex(v, p);
  const auto violated = [](const std::string& condition) -> Error {
    return Error(ErrorCode::PreconditionViolation, "partner precondition failed: " + condition);
  };
  if (is_zero_vertex(v)) throw violated("v is the zero vector");
  if (t1 == 0 || t1 >= p.k) throw violated("t1 = " + std::to_string(t1) + " is not a nonzero residue");
  if (t2 == 0 || t2 >= p.k) throw violated("t2 = " + std::to_string(t2) + " is not a nonzero residue");
  if (t1 == t2) throw violated("t1 = t2 = " + std::to_string(t1));
  const int ell = last_nonzero(v);
  if (v[static_cast<std::size_t>(ell - 1)] != t1) {
    throw violated("v(l(v)) = " + std::to_string(v[static_cast<std::size_t>(ell - 1)]) +
                   " but t1 = " + std::to_string(t1));
  }
  Vertex w = v;
  w[static_cast<std::size_t>(ell - 1)] = t2;
  return w;
}

mpz_class size_alpha(const GraphParams& p) {
  p.validate();
  return mpz_pow(p.k, static_cast<unsigned long>(p.n - 1));
}

mpz_class size_x(Coord s, const GraphParams& p) {
  require_residue(s, p, "s");
  return size_alpha(p);
}

mpz_class size_y(Coord s, Coord t, const GraphParams& p) {
  p.validate();
  require_residue(s, p, "s");
  require_nonzero_t(t, p);
  mpz_class size = geometric_sum(p);
  if (s == t) size += 1;
  return size;
}

mpz_class size_z(Coord s, Coord t, int c, const GraphParams& p) {
  validate_spec(ZSpec{s, t, c}, p);
  if (c == 1) return (s == t) ? 1 : 0;
  return mpz_pow(p.k, static_cast<unsigned long>(c - 2));
}

mpz_class size_w(const GraphParams& p) {
  p.validate();
  require_k_at_least_3(p);
  const mpz_class direct = size_alpha(p) + 1;
  // Cross-check against the per-part decomposition
  // |Y(1,1)| + |Y(2,2)| + sum_{i=3..k-1} |Y(2,i)|.
  const mpz_class q = geometric_sum(p);
  const mpz_class decomposed = 2 * (q + 1) + (p.k - 3) * q;
  if (direct != decomposed) {
    throw Error(ErrorCode::VerificationFailed,
                "size_w decomposition mismatch: " + direct.get_str() + " vs " +
                    decomposed.get_str());
  }
  return direct;
}

SetEnumerator::SetEnumerator(const SetSpec& spec, const GraphParams& p)
    : SetEnumerator(spec, p, 0, p.vertex_count()) {}

SetEnumerator::SetEnumerator(const SetSpec& spec, const GraphParams& p, VertexRank lo,
                             VertexRank hi)
    : spec_(spec), params_(p) {
  validate_spec(spec, p);
  const VertexRank total = p.vertex_count();
  if (lo > hi || hi > total) {
    throw Error(ErrorCode::RankOutOfRange,
                "rank window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                    ") is not contained in [0, " + std::to_string(total) + ")");
  }
  rank_ = lo;
  end_ = hi;
  if (rank_ < end_) current_ = unrank(rank_, p);
}

void SetEnumerator::advance() {
  ++rank_;
  if (rank_ >= end_) return;
  // Mixed-radix increment, coordinate 1 least significant.
  for (std::size_t i = 0; i < current_.size(); ++i) {
    if (++current_[i] < params_.k) break;
    current_[i] = 0;
  }
}

const Vertex* SetEnumerator::next() {
  if (pending_advance_) {
    advance();
    pending_advance_ = false;
  }
  while (rank_ < end_) {
    if (in_set(current_, spec_, params_)) {
      pending_advance_ = true;
      return &current_;
    }
    advance();
  }
  return nullptr;
}

std::uint64_t count_members(const SetSpec& spec, const GraphParams& p) {
  SetEnumerator stream(spec, p);
  std::uint64_t count = 0;
  while (stream.next() != nullptr) ++count;
  return count;
}

}  // namespace hamwit
