#include "skg/profile.hpp"

#include "kernel.hpp"
#include "skg/error.hpp"

namespace skg {

std::string GapBlockSeq::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries[i]);
  }
  return out + ")";
}

namespace {

std::vector<std::uint8_t> matched_flags(const Vertex& x) {
  std::vector<std::uint8_t> flags;
  detail::fill_matched(detail::CyclicView{x.storage(), 0}, x.params().s(), flags);
  return flags;
}

}  // namespace

bool in_Y(const Vertex& x) {
  const auto flags = matched_flags(x);
  return !flags.front() && flags.back();
}

GapBlockSeq L_of(const Vertex& x) {
  const auto flags = matched_flags(x);
  if (flags.front() || !flags.back()) {
    throw PreconditionError("L requires position 1 unmatched and position n matched: " + x.to_pretty());
  }
  GapBlockSeq seq;
  detail::leftward_runs(flags, x.n(), seq.entries);
  return seq;
}

GapBlockSeq L_at(const Vertex& x, Position q) {
  const auto flags = matched_flags(x);
  const auto n = static_cast<std::int64_t>(flags.size());
  if (!flags[detail::mod(q - 1, n)] || flags[detail::mod(q, n)]) {
    throw PreconditionError("L(x,q) requires q matched and q+1 unmatched (q=" + std::to_string(q) + ")");
  }
  GapBlockSeq seq;
  detail::leftward_runs(flags, q, seq.entries);
  return seq;
}

// Booth's least-rotation algorithm over an integer alphabet, scanning the
// doubled sequence without materializing it.  f is the failure function of
// the candidate rotation starting at k.
std::size_t least_rotation_offset(std::span<const int> seq, std::vector<int>& f) {
  const auto m = static_cast<std::int64_t>(seq.size());
  if (m == 0) return 0;
  const auto at = [&](std::int64_t i) { return seq[static_cast<std::size_t>(i < m ? i : i - m)]; };
  f.assign(static_cast<std::size_t>(2 * m), -1);
  std::int64_t k = 0;
  for (std::int64_t j = 1; j < 2 * m; ++j) {
    const int sj = at(j);
    std::int64_t i = f[static_cast<std::size_t>(j - k - 1)];
    while (i != -1 && sj != at(k + i + 1)) {
      if (sj < at(k + i + 1)) k = j - i - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (sj != at(k + i + 1)) {
      // i == -1 here
      if (sj < at(k)) k = j;
      f[static_cast<std::size_t>(j - k)] = -1;
    } else {
      f[static_cast<std::size_t>(j - k)] = static_cast<int>(i + 1);
    }
  }
  return static_cast<std::size_t>(k % m);
}

MinRotation min_rotation(std::span<const int> seq) {
  std::vector<int> scratch;
  const std::size_t offset = least_rotation_offset(seq, scratch);
  MinRotation out{offset, {}};
  out.rotated.reserve(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) out.rotated.push_back(seq[(i + offset) % seq.size()]);
  return out;
}

// Rotations of the cyclic profile that start on a block are exactly the
// profiles L(x') of shifts x' in Y.  Block entries are negative and gap
// entries positive, so the least rotation overall starts on a block and the
// minimum over all rotations equals the minimum over those.
GapBlockSeq L_neck(const Vertex& x) {
  const auto flags = matched_flags(x);
  std::vector<int> seq;
  detail::leftward_runs(flags, detail::first_block_end(flags), seq);
  return GapBlockSeq{min_rotation(seq).rotated};
}

}  // namespace skg
