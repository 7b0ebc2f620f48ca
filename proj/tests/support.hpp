#pragma once

// Brute-force reference computations for tests.  These work straight from
// the definitions on strings and never call into the library's kernel.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace skg::testing {

// All s-stable k-subsets of [n] as bitstrings, by filtering every k-subset.
inline std::vector<std::string> brute_vertices(int n, int k, int s) {
  std::vector<std::string> out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    bool ok = true;
    for (int a = 0; a < k && ok; ++a) {
      for (int b = a + 1; b < k && ok; ++b) {
        const int d = idx[b] - idx[a];
        if (d < s || n - d < s) ok = false;
      }
    }
    if (ok) {
      std::string x(n, '0');
      for (int i : idx) x[i] = '1';
      out.push_back(x);
    }
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline char at(const std::string& x, long i) {
  const long n = static_cast<long>(x.size());
  return x[static_cast<std::size_t>(((i - 1) % n + n) % n)];
}

// shift by t: position i of the result holds position i - t.
inline std::string rot(const std::string& x, long t) {
  std::string out(x.size(), '0');
  for (long i = 1; i <= static_cast<long>(x.size()); ++i) out[i - 1] = at(x, i - t);
  return out;
}

// Position i is matched iff one of x_i, x_{i-1}, ..., x_{i-s+1} is 1.
inline std::vector<bool> brute_matched(const std::string& x, int s) {
  std::vector<bool> m(x.size(), false);
  for (long i = 1; i <= static_cast<long>(x.size()); ++i) {
    for (int j = 0; j < s; ++j) {
      if (at(x, i - j) == '1') m[i - 1] = true;
    }
  }
  return m;
}

// L(x) from the decomposition -^{g1} B1 -^{g2} B2 ... read right to left.
// Requires position 1 unmatched and position n matched.
inline std::vector<int> brute_L(const std::string& x, int s) {
  const auto m = brute_matched(x, s);
  std::vector<int> forward;  // g1, b1, g2, b2, ...
  std::size_t i = 0;
  while (i < m.size()) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    forward.push_back(m[i] ? -static_cast<int>(j - i) : static_cast<int>(j - i));
    i = j;
  }
  std::reverse(forward.begin(), forward.end());
  return forward;
}

inline bool brute_in_Y(const std::string& x, int s) {
  const auto m = brute_matched(x, s);
  return !m.front() && m.back();
}

inline std::vector<int> brute_L_neck(const std::string& x, int s) {
  std::vector<int> best;
  for (long t = 0; t < static_cast<long>(x.size()); ++t) {
    const std::string y = rot(x, t);
    if (!brute_in_Y(y, s)) continue;
    const auto l = brute_L(y, s);
    if (best.empty() || l < best) best = l;
  }
  return best;
}

struct NaiveRotation {
  std::size_t offset;
  std::vector<int> rotated;
};

inline NaiveRotation naive_min_rotation(const std::vector<int>& seq) {
  NaiveRotation best{0, seq};
  for (std::size_t o = 1; o < seq.size(); ++o) {
    std::vector<int> r(seq.begin() + static_cast<long>(o), seq.end());
    r.insert(r.end(), seq.begin(), seq.begin() + static_cast<long>(o));
    if (r < best.rotated) best = {o, r};
  }
  return best;
}

inline bool brute_disjoint(const std::string& a, const std::string& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == '1' && b[i] == '1') return false;
  }
  return true;
}

// The desk-scale parameter sweep used across tests.
struct Instance {
  int n, k, s;
};

inline std::vector<Instance> small_instances(int max_n = 16) {
  std::vector<Instance> out;
  for (int s = 2; s <= 5; ++s) {
    for (int k = 1; k <= 5; ++k) {
      for (int n = s * k + 1; n <= std::min(max_n, s * k + 6); ++n) out.push_back({n, k, s});
    }
  }
  return out;
}

}  // namespace skg::testing
