#include <random>

#include "doctest.h"
#include "skg/error.hpp"
#include "skg/profile.hpp"
#include "support.hpp"

using namespace skg;

namespace {

GapBlockSeq seq(std::vector<int> v) { return GapBlockSeq{std::move(v)}; }

}  // namespace

TEST_CASE("L of the 30-bit example") {
  // ----10101010---10-1010--101010
  const Vertex x = Vertex::from_bits(Params(30, 10, 2), "000010101010000100101000101010");
  CHECK(L_of(x) == seq({-6, 2, -4, 1, -2, 3, -8, 4}));
  CHECK(L_neck(x) == seq({-8, 4, -6, 2, -4, 1, -2, 3}));
  CHECK(L_neck(x).to_string() == "(-8,4,-6,2,-4,1,-2,3)");
}

TEST_CASE("L of simple vertices") {
  CHECK(L_of(Vertex::from_bits(Params(9, 3, 2), "000101010")) == seq({-6, 3}));
  CHECK(L_of(Vertex::from_bits(Params(7, 2, 2), "0010010")) == seq({-2, 1, -2, 2}));
  CHECK_THROWS_AS(L_of(Vertex::from_bits(Params(7, 2, 2), "1001000")), PreconditionError);
}

TEST_CASE("L_at") {
  const Vertex x = Vertex::from_bits(Params(7, 2, 2), "1001000");
  CHECK(L_at(x, 5) == seq({-2, 1, -2, 2}));
  CHECK(L_at(x, 2) == seq({-2, 2, -2, 1}));
  CHECK(L_at(x, 5) == L_of(x.shifted(-5)));
  CHECK_THROWS_AS(L_at(x, 1), PreconditionError);
  CHECK_THROWS_AS(L_at(x, 3), PreconditionError);

  const Vertex y = Vertex::from_bits(Params(7, 2, 2), "0010010");
  CHECK(L_at(y, 7) == L_of(y));
}

TEST_CASE("min_rotation examples") {
  const std::vector<int> a{-2, 2, -2, 1};
  const MinRotation ra = min_rotation(a);
  CHECK(ra.offset == 2);
  CHECK(ra.rotated == std::vector<int>{-2, 1, -2, 2});

  const std::vector<int> c{5, 5, 5};
  CHECK(min_rotation(c).offset == 0);
  CHECK(min_rotation(c).rotated == c);

  const std::vector<int> p{-8, 4, -6, 2, -4, 1, -2, 3};
  CHECK(min_rotation(p).offset == 0);

  const std::vector<int> one{7};
  CHECK(min_rotation(one).offset == 0);
  // periodic: least offset among equal rotations
  const std::vector<int> periodic{3, 1, 2, 3, 1, 2};
  CHECK(min_rotation(periodic).offset == 1);
}

TEST_CASE("min_rotation agrees with the all-rotations minimum") {
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto len = std::uniform_int_distribution<int>(1, 24)(rng);
    const int alphabet = std::uniform_int_distribution<int>(1, 4)(rng);
    std::uniform_int_distribution<int> value(-alphabet, alphabet);
    std::vector<int> v(static_cast<std::size_t>(len));
    for (int& e : v) e = value(rng);
    // repeat a prefix sometimes to force periodic inputs
    if (trial % 5 == 0) {
      const std::vector<int> base = v;
      for (int r = 0; r < 2; ++r) v.insert(v.end(), base.begin(), base.end());
    }
    const auto expected = testing::naive_min_rotation(v);
    const auto got = min_rotation(v);
    CHECK(got.offset == expected.offset);
    CHECK(got.rotated == expected.rotated);
  }
}

TEST_CASE("L_neck matches the definition and is a necklace invariant") {
  for (const auto& inst : testing::small_instances(14)) {
    const Params params(inst.n, inst.k, inst.s);
    for (const std::string& bits : testing::brute_vertices(inst.n, inst.k, inst.s)) {
      const Vertex x = Vertex::from_bits(params, bits);
      const GapBlockSeq neck = L_neck(x);
      CHECK(neck.entries == testing::brute_L_neck(bits, inst.s));
      CHECK(L_neck(x.shifted(1)) == neck);
      CHECK(L_neck(x.shifted(-3)) == neck);
      CHECK(in_Y(x) == testing::brute_in_Y(bits, inst.s));
      if (in_Y(x)) {
        CHECK(L_of(x).entries == testing::brute_L(bits, inst.s));
        CHECK(L_at(x, inst.n) == L_of(x));
        auto sorted_l = L_of(x).entries;
        auto sorted_neck = neck.entries;
        std::sort(sorted_l.begin(), sorted_l.end());
        std::sort(sorted_neck.begin(), sorted_neck.end());
        CHECK(sorted_l == sorted_neck);
        int neg = 0, pos = 0;
        for (std::size_t i = 0; i < neck.size(); ++i) {
          if (i % 2 == 0) {
            CHECK(neck[i] < 0);
            CHECK((-neck[i]) % inst.s == 0);
            neg += neck[i];
          } else {
            CHECK(neck[i] > 0);
            pos += neck[i];
          }
        }
        CHECK(neg == -inst.s * inst.k);
        CHECK(pos == inst.n - inst.s * inst.k);
      }
    }
  }
}

TEST_CASE("single-block necklace") {
  CHECK(L_neck(Vertex::from_bits(Params(11, 3, 3), "10010010000")) == seq({-9, 2}));
  CHECK(L_neck(Vertex::from_bits(Params(7, 2, 2), "1001000")) == seq({-2, 1, -2, 2}));
}
