#include "skg/vertex.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

#include "kernel.hpp"
#include "skg/error.hpp"

namespace skg {

Params::Params(int n, int k, int s) : n_(n), k_(k), s_(s) {
  if (k < 1) throw ParamError("k must be at least 1 (got " + std::to_string(k) + ")");
  if (s < 2) throw ParamError("s must be at least 2 (got " + std::to_string(s) + ")");
  const auto sk = static_cast<std::int64_t>(s) * k;
  if (sk + 1 > std::numeric_limits<int>::max() || n < sk + 1) {
    throw ParamError("n must be at least s*k+1 = " + std::to_string(sk + 1) + " (got " +
                     std::to_string(n) + ")");
  }
}

std::string to_string(const Params& params) {
  std::ostringstream out;
  out << "S(" << params.n() << "," << params.k() << "," << params.s() << ")";
  return out.str();
}

Position checked_position(const Params& params, Position p) {
  if (p < 1 || p > params.n()) {
    throw ParamError("position p must lie in 1.." + std::to_string(params.n()) + " (got " +
                     std::to_string(p) + ")");
  }
  return p;
}

namespace {

// Every 1 must be followed cyclically by at least s-1 zeros.
void check_stable(const Params& params, std::span<const std::uint8_t> bits) {
  const int n = params.n();
  const int s = params.s();
  int ones = 0;
  for (auto b : bits) ones += b;
  if (ones != params.k()) {
    throw VertexError(VertexError::Kind::Cardinality,
                      "expected " + std::to_string(params.k()) + " ones, found " + std::to_string(ones));
  }
  for (int i = 0; i < n; ++i) {
    if (!bits[i]) continue;
    for (int j = 1; j < s; ++j) {
      if (bits[(i + j) % n]) {
        throw VertexError(VertexError::Kind::Stability,
                          "elements " + std::to_string(i + 1) + " and " + std::to_string((i + j) % n + 1) +
                              " are at cyclic distance " + std::to_string(j) + " < s = " +
                              std::to_string(s));
      }
    }
  }
}

}  // namespace

Vertex Vertex::from_storage(const Params& params, std::vector<std::uint8_t> bits) {
  if (static_cast<int>(bits.size()) != params.n()) {
    throw VertexError(VertexError::Kind::Length, "expected " + std::to_string(params.n()) +
                                                     " bits, got " + std::to_string(bits.size()));
  }
  for (auto b : bits) {
    if (b > 1) throw VertexError(VertexError::Kind::Alphabet, "bit values must be 0 or 1");
  }
  check_stable(params, bits);
  return Vertex(params, std::move(bits));
}

Vertex Vertex::from_bits(const Params& params, std::string_view text) {
  if (static_cast<int>(text.size()) != params.n()) {
    throw VertexError(VertexError::Kind::Length, "expected " + std::to_string(params.n()) +
                                                     " characters, got " + std::to_string(text.size()));
  }
  std::vector<std::uint8_t> bits(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') {
      throw VertexError(VertexError::Kind::Alphabet, "bitstring may only contain '0' and '1'");
    }
    bits[i] = text[i] == '1';
  }
  check_stable(params, bits);
  return Vertex(params, std::move(bits));
}

Vertex Vertex::from_set(const Params& params, std::span<const int> elements) {
  if (static_cast<int>(elements.size()) != params.k()) {
    throw VertexError(VertexError::Kind::Cardinality, "expected " + std::to_string(params.k()) +
                                                          " elements, got " + std::to_string(elements.size()));
  }
  std::vector<std::uint8_t> bits(params.n(), 0);
  for (int e : elements) {
    if (e < 1 || e > params.n()) {
      throw VertexError(VertexError::Kind::Range,
                        "element " + std::to_string(e) + " outside 1.." + std::to_string(params.n()));
    }
    if (bits[e - 1]) {
      throw VertexError(VertexError::Kind::Cardinality, "duplicate element " + std::to_string(e));
    }
    bits[e - 1] = 1;
  }
  check_stable(params, bits);
  return Vertex(params, std::move(bits));
}

Vertex Vertex::from_set_string(const Params& params, std::string_view csv) {
  std::vector<int> elements;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    const std::size_t comma = std::min(csv.find(',', pos), csv.size());
    const std::string_view token = csv.substr(pos, comma - pos);
    int value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
      throw VertexError(VertexError::Kind::Alphabet, "malformed set '" + std::string(csv) + "'");
    }
    elements.push_back(value);
    pos = comma + 1;
  }
  return from_set(params, elements);
}

bool Vertex::bit(Position i) const noexcept {
  return bits_[static_cast<std::size_t>(detail::mod(i - 1, n()))] != 0;
}

std::vector<int> Vertex::to_set() const {
  std::vector<int> out;
  out.reserve(params_.k());
  for (int i = 0; i < n(); ++i) {
    if (bits_[i]) out.push_back(i + 1);
  }
  return out;
}

std::string Vertex::to_string() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out[i] = '1';
  }
  return out;
}

std::string Vertex::to_set_string() const {
  std::string out;
  for (int e : to_set()) {
    if (!out.empty()) out += ',';
    out += std::to_string(e);
  }
  return out;
}

std::string Vertex::to_pretty() const {
  std::string out = to_string();
  const MatchProfile profile = match_profile(*this);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!profile.matched[i]) out[i] = '-';
  }
  return out;
}

Vertex Vertex::shifted(std::int64_t t) const {
  std::vector<std::uint8_t> out(bits_.size());
  const auto r = static_cast<std::size_t>(detail::mod(t, n()));
  std::rotate_copy(bits_.begin(), bits_.end() - static_cast<std::ptrdiff_t>(r), bits_.end(), out.begin());
  return Vertex(params_, std::move(out));
}

bool is_edge(const Vertex& x, const Vertex& y) {
  if (x.params() != y.params()) return false;
  const auto a = x.storage();
  const auto b = y.storage();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && b[i]) return false;
  }
  return true;
}

bool MatchProfile::is_matched(Position i) const {
  return matched[static_cast<std::size_t>(detail::mod(i - 1, static_cast<std::int64_t>(matched.size())))];
}

std::vector<Position> MatchProfile::matched_positions() const {
  std::vector<Position> out;
  for (std::size_t i = 0; i < matched.size(); ++i) {
    if (matched[i]) out.push_back(static_cast<Position>(i + 1));
  }
  return out;
}

std::vector<Position> MatchProfile::unmatched_positions() const {
  std::vector<Position> out;
  for (std::size_t i = 0; i < matched.size(); ++i) {
    if (!matched[i]) out.push_back(static_cast<Position>(i + 1));
  }
  return out;
}

std::vector<int> MatchProfile::block_lengths() const {
  std::vector<int> out;
  for (const Run& run : runs) {
    if (run.kind == RunKind::Block) out.push_back(run.length);
  }
  return out;
}

std::vector<int> MatchProfile::gap_lengths() const {
  std::vector<int> out;
  for (const Run& run : runs) {
    if (run.kind == RunKind::Gap) out.push_back(run.length);
  }
  return out;
}

int MatchProfile::block_count() const { return static_cast<int>(block_lengths().size()); }

MatchProfile match_profile(const Vertex& x) {
  std::vector<std::uint8_t> flags;
  detail::fill_matched(detail::CyclicView{x.storage(), 0}, x.params().s(), flags);
  const auto n = flags.size();

  MatchProfile profile;
  profile.matched.assign(flags.begin(), flags.end());

  // Runs start where the kind changes; n > s*k guarantees both kinds occur.
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t prev = (i + n - 1) % n;
    if (flags[i] == flags[prev]) continue;
    std::size_t length = 1;
    while (length < n && flags[(i + length) % n] == flags[i]) ++length;
    profile.runs.push_back(Run{flags[i] ? RunKind::Block : RunKind::Gap, static_cast<Position>(i + 1),
                               static_cast<int>(length)});
  }
  return profile;
}

std::vector<Position> gliders(const Vertex& x) {
  std::vector<Position> out;
  for (int e : x.to_set()) out.push_back(e);
  return out;
}

}  // namespace skg
