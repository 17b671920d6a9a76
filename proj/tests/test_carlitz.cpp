#include <doctest.h>

#include <set>
#include <stdexcept>

#include "mahonian/carlitz.hpp"
#include "mahonian/permstats.hpp"
#include "oracle.hpp"

using namespace mahonian;

namespace {

const MultisetWord kRunning = MultisetWord::parse("2 1 2 6 5 4 4 3");

Poly v(const char* name, std::uint32_t e = 1) { return Poly::variable(name, e); }

}  // namespace

TEST_CASE("multiset words") {
  CHECK(kRunning.multiplicities() == std::vector<int>{1, 2, 1, 2, 1, 1});
  CHECK(kRunning.size() == 8);
  CHECK(kRunning.to_string() == "2 1 2 6 5 4 4 3");
  CHECK(kRunning.sorted() == std::vector<int>{1, 2, 2, 3, 4, 4, 5, 6});
  CHECK_THROWS_AS(MultisetWord({1, 1}, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(MultisetWord({1}, {2}), std::invalid_argument);
  CHECK_THROWS_AS(MultisetWord::parse("0 1"), std::invalid_argument);
  CHECK(parse_alphabet("2,1,3") == std::vector<int>{2, 1, 3});
  CHECK_THROWS_AS(parse_alphabet("2,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_alphabet("-1"), std::invalid_argument);
}

TEST_CASE("enumerate_multiset") {
  CHECK(enumerate_multiset({1, 1, 1}).size() == 6);
  const auto two_one = enumerate_multiset({2, 1});
  REQUIRE(two_one.size() == 3);
  CHECK(two_one[0].to_string() == "1 1 2");
  CHECK(two_one[1].to_string() == "1 2 1");
  CHECK(two_one[2].to_string() == "2 1 1");
  const auto empty = enumerate_multiset({0, 0, 0});
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].size() == 0);
  CHECK(multiset_count({2, 2, 1}) == 30);
}

TEST_CASE("compositions") {
  CHECK(compositions(0).size() == 1);
  CHECK(compositions(4).size() == 8);
  CHECK(compositions(7).size() == 64);
  CHECK(compositions(7, 4).size() == 1 + 6 + 15 + 20);
}

TEST_CASE("b-code") {
  const auto code = b_code(kRunning);
  CHECK(code == std::vector<int>{0, 1, 0, 0, 1, 1, 3, 4});
  int sum = 0;
  for (int b : code) {
    sum += b;
  }
  CHECK(sum == 10);
  CHECK(inversions(kRunning.letters()) == 10);
  CHECK(b_code(MultisetWord::parse("1 1 2 3")) == std::vector<int>{0, 0, 0, 0});
  CHECK(word_from_b_code(kRunning.multiplicities(), code) == kRunning);
  CHECK_THROWS_AS(word_from_b_code({1, 1}, {0, 2}), std::invalid_argument);
}

TEST_CASE("slot labels") {
  // 2 4 1 2 3: descent at 2|3; labels end 0, descent 1, front 2, rest 3,4,5
  CHECK(insertion_slot_labels({2, 4, 1, 2, 3}) == std::vector<int>{2, 3, 1, 4, 5, 0});
  CHECK(insertion_slot_labels({}) == std::vector<int>{0});
  CHECK(insertion_slot_labels({1}) == std::vector<int>{1, 0});
}

TEST_CASE("carlitz insertion on the running example") {
  const auto trace = carlitz_trace(kRunning);
  REQUIRE(trace.size() == 8);
  CHECK(trace[4] == std::vector<int>{2, 4, 1, 2, 3});
  CHECK(carlitz_psi(kRunning).to_string() == "2 6 5 4 4 1 2 3");
  CHECK(carlitz_psi_inverse(MultisetWord::parse("2 6 5 4 4 1 2 3")) == kRunning);
  const MultisetWord sorted = MultisetWord::parse("1 1 2 3 3");
  CHECK(carlitz_psi(sorted) == sorted);
  CHECK(carlitz_psi_inverse(sorted) == sorted);
}

TEST_CASE("inverse peels the smallest-label copy of the maximum") {
  // The last inserted 2 of psi(2211) = 2121 is the left copy; removing the
  // right copy would leave a slot label too large for the b-code.
  const MultisetWord w = MultisetWord::parse("2 2 1 1");
  CHECK(carlitz_psi(w).to_string() == "2 1 2 1");
  CHECK(carlitz_psi_inverse(carlitz_psi(w)) == w);
}

TEST_CASE("rlmin on multisets") {
  CHECK(rlmin_multiset(kRunning) == std::vector<int>{1, 3});
  CHECK(rlmin_multiset(MultisetWord::parse("2 6 5 4 4 1 2 3")) == std::vector<int>{1, 3});
  CHECK(rlmin_multiset(MultisetWord::parse("1 2 2 3")) == std::vector<int>{1, 2, 3});
}

TEST_CASE("psi is a statistic-transporting bijection on every alphabet of size <= 7") {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& parts : compositions(n)) {
      std::set<std::vector<int>> image;
      for (const auto& w : enumerate_multiset(parts)) {
        const MultisetWord p = carlitz_psi(w);
        CHECK(major_index(p.letters()) == inversions(w.letters()));
        CHECK(rlmin_multiset(p) == rlmin_multiset(w));
        CHECK(carlitz_psi_inverse(p) == w);
        CHECK(word_from_b_code(parts, b_code(w)) == w);
        image.insert(p.letters());
      }
      CHECK(Integer(static_cast<long>(image.size())) == multiset_count(parts));
    }
  }
}

TEST_CASE("wilson examples") {
  const auto [l11, r11] = wilson_sides({1, 1});
  CHECK(l11 == Poly(1) + v("q") + v("z"));
  CHECK(r11 == l11);
  const auto [l2, r2] = wilson_sides({2});
  CHECK(l2.is_one());
  CHECK(r2.is_one());
  const auto [l111, r111] = wilson_sides({1, 1, 1});
  CHECK(l111 == hrw_sides(3, 0).first);
  CHECK(r111 == l111);
}

TEST_CASE("wilson sides agree up to size 6") {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& parts : compositions(n)) {
      const auto [lhs, rhs] = wilson_sides(parts);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("macmahon product formula up to size 7") {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& parts : compositions(n)) {
      const auto [inv, maj] = macmahon_sides(parts);
      // oracle: q-multinomial as a product of inversion-counted Gaussians
      oracle::QPoly expected{1};
      int used = 0;
      for (int m : parts) {
        used += m;
        expected = oracle::qmul(expected, oracle::gaussian(used, m));
      }
      CHECK(inv == oracle::to_poly(expected));
      CHECK(maj == inv);
    }
  }
}

TEST_CASE("multiset statistics agree with the Laguerre-word embedding") {
  // {1..n-k} plus k copies of a top letter is the alphabet of a hole set
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      std::vector<int> parts(static_cast<std::size_t>(n - k), 1);
      parts.push_back(k);
      const int top = n - k + 1;
      for (const auto& w : enumerate_multiset(parts)) {
        std::vector<int> codes;
        for (int x : w.letters()) {
          codes.push_back(x == top ? 0 : x);
        }
        const StatRecord s = full_stats(LaguerreWord::from_codes(codes));
        CHECK(s.inv0 == inversions(w.letters()));
        CHECK(s.maj0 == major_index(w.letters()));
        CHECK(s.des_set == descent_set(w.letters()));
        CHECK(s.inv_box == inv_box_vector(w.letters()));
      }
    }
  }
}
