#include "kernel.hpp"

#include <algorithm>

#include "skg/error.hpp"
#include "skg/profile.hpp"

namespace skg::detail {

bool connectable(const CyclicView& x, Position p, int s) {
  if (x.at(p) != 1) return false;
  for (int j = 1; j <= s; ++j) {
    if (x.at(p + j) != 0) return false;
  }
  return true;
}

bool tail_pattern(const CyclicView& w, Position p, int s) {
  if (w.at(p + 1) != 1) return false;
  for (int j = 2; j <= s; ++j) {
    if (w.at(p + j) != 0) return false;
  }
  for (int j = 0; j < s; ++j) {
    if (w.at(p - j) != 0) return false;
  }
  return true;
}

void fill_matched(const CyclicView& x, int s, std::vector<std::uint8_t>& matched) {
  const auto n = static_cast<std::size_t>(x.n());
  matched.resize(n);
  // Storage index of view position 1; the view is read as two contiguous
  // storage segments from there.
  const std::size_t first = x.index(1);
  const std::uint8_t* bits = x.bits.data();
  // Distance to the most recent 1, seeded from the last s-1 view positions.
  std::int64_t since = s;
  for (Position i = static_cast<Position>(n) - s + 2; i <= static_cast<Position>(n); ++i) {
    since = x.at(i) ? 0 : since + 1;
  }
  std::uint8_t* out = matched.data();
  const auto scan = [&](std::size_t from, std::size_t to) {
    for (std::size_t j = from; j < to; ++j) {
      since = bits[j] ? 0 : since + 1;
      *out++ = since < s;
    }
  };
  scan(first, n);
  scan(0, first);
}

namespace {

bool matched_at(std::span<const std::uint8_t> matched, Position q) {
  return matched[static_cast<std::size_t>(mod(q - 1, static_cast<std::int64_t>(matched.size())))] != 0;
}

}  // namespace

bool head_in_profile(const CyclicView& x, std::span<const std::uint8_t> matched, Position p, int s) {
  return x.at(p) == 1 && !matched_at(matched, p + s);
}

bool tail_in_profile(const CyclicView& x, std::span<const std::uint8_t> matched, Position p, int s) {
  if (matched_at(matched, p + 1) || x.at(p + 2) != 1) return false;
  for (int j = 3; j <= s + 1; ++j) {
    if (x.at(p + j) != 0) return false;
  }
  return true;
}

void leftward_runs(std::span<const std::uint8_t> matched, Position q, std::vector<int>& out,
                   std::vector<Position>* run_ends) {
  const auto n = static_cast<std::int64_t>(matched.size());
  out.clear();
  if (run_ends) run_ends->clear();
  std::int64_t idx = mod(q - 1, n);
  std::uint8_t kind = matched[static_cast<std::size_t>(idx)];
  int length = 0;
  Position end = idx + 1;
  for (std::int64_t t = 0; t < n; ++t) {
    const std::uint8_t m = matched[static_cast<std::size_t>(idx)];
    if (m != kind) {
      out.push_back(kind ? -length : length);
      if (run_ends) run_ends->push_back(end);
      kind = m;
      length = 0;
      end = idx + 1;
    }
    ++length;
    idx = idx == 0 ? n - 1 : idx - 1;
  }
  out.push_back(kind ? -length : length);
  if (run_ends) run_ends->push_back(end);
}

Position first_block_end(std::span<const std::uint8_t> matched) {
  const auto n = matched.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (matched[i] && !matched[(i + 1) % n]) return static_cast<Position>(i + 1);
  }
  throw PreconditionError("vertex has no gap");
}

PushScan scan_push(std::span<const std::uint8_t> matched, Position p, int s) {
  const auto n = static_cast<std::int64_t>(matched.size());
  std::int64_t idx = mod(p + s - 1, n);
  int gap = 0;
  while (!matched[static_cast<std::size_t>(idx)] && gap < n) {
    ++gap;
    idx = idx + 1 == n ? 0 : idx + 1;
  }
  int block = 0;
  while (matched[static_cast<std::size_t>(idx)] && block < n) {
    ++block;
    idx = idx + 1 == n ? 0 : idx + 1;
  }
  return {gap, block, mod(p + s - 1 + gap + block - 1, n) + 1};
}

bool in_tp(const CyclicView& x, Position p, int s, std::vector<std::uint8_t>& matched, std::vector<int>& seq,
           std::vector<int>& booth) {
  fill_matched(x, s, matched);
  const PushScan scan = scan_push(matched, p, s);
  leftward_runs(matched, scan.q, seq);
  const std::size_t m = seq.size();
  if (m < 4) return false;
  // P(x) is one rotation of the cyclic profile, and L_neck(x) is the least
  // rotation, so the test is whether P(x) is that least rotation.
  const std::size_t offset = least_rotation_offset(seq, booth);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t r = i + offset < m ? i + offset : i + offset - m;
    if (seq[i] != seq[r]) return false;
  }
  return true;
}

void push_glider(std::span<std::uint8_t> bits, Position p) {
  const auto n = static_cast<std::int64_t>(bits.size());
  bits[static_cast<std::size_t>(mod(p - 1, n))] = 0;
  bits[static_cast<std::size_t>(mod(p, n))] = 1;
}

void pull_glider(std::span<std::uint8_t> bits, Position p) {
  const auto n = static_cast<std::int64_t>(bits.size());
  bits[static_cast<std::size_t>(mod(p, n))] = 0;
  bits[static_cast<std::size_t>(mod(p - 1, n))] = 1;
}

}  // namespace skg::detail
