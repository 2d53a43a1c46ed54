#include <doctest.h>

#include <random>

#include "matrixrepet/delta.hpp"
#include "matrixrepet/generators.hpp"
#include "oracles.hpp"
#include "random_matrix.hpp"

using namespace matrixrepet;

TEST_CASE("Rational ordering is exact") {
  CHECK(Rational{1, 3} < Rational{334, 1000});
  CHECK(Rational{2, 4} == Rational{1, 2});
  CHECK(Rational{7, 2}.ceil() == 4);
  CHECK(Rational{8, 2}.ceil() == 4);
  CHECK((Rational{9, 4} <=> std::uint64_t{2}) == std::strong_ordering::greater);
  // Products overflow 64 bits but not 128.
  const std::uint64_t big = (std::uint64_t{1} << 62) + 1;
  CHECK(Rational{big, big - 1} < Rational{big - 1, big - 2});
}

TEST_CASE("side ranges") {
  // Odd positions in [first, last] are the square sides covered.
  for (std::size_t first = 1; first <= 12; ++first)
    for (std::size_t last = first; last <= 12; ++last) {
      std::vector<std::size_t> sides;
      for (std::size_t t = first; t <= last; ++t)
        if (t % 2 == 1) sides.push_back((t + 1) / 2);
      const auto r = side_range(first, last);
      if (sides.empty()) {
        CHECK_FALSE(r.has_value());
      } else {
        REQUIRE(r.has_value());
        CHECK(r->s == sides.front());
        CHECK(r->t == sides.back());
      }
    }
  std::vector<std::int64_t> diff(6, 0);
  apply_side_range(diff, {2, 3});
  CHECK(diff == std::vector<std::int64_t>{0, 0, 1, 0, -1, 0});
}

TEST_CASE("trivial profiles") {
  const Matrix all_a = Matrix::filled(4, 4, 'a');
  const DeltaProfile p = delta_profile_fast(all_a);
  CHECK(p.d == std::vector<std::uint64_t>{1, 1, 1, 1});
  CHECK(p.delta2d == Rational{1, 1});
  CHECK(p.argmax_k == 1);

  const Matrix one = Matrix::filled(1, 1, 'x');
  CHECK(delta_profile_fast(one).d == std::vector<std::uint64_t>{1});
  CHECK(delta_profile_naive(one).d == std::vector<std::uint64_t>{1});

  const Matrix abcd = parse_matrix_text("2 2\nab\ncd\n");
  const DeltaProfile q = delta_profile_naive(abcd);
  CHECK(q.d == std::vector<std::uint64_t>{4, 1});
  CHECK(q.delta2d == Rational{4, 1});
}

TEST_CASE("ties in delta go to the smallest k") {
  const DeltaProfile p = make_profile({2, 8, 9});
  CHECK(p.delta2d == Rational{2, 1});
  CHECK(p.argmax_k == 1);
}

TEST_CASE("naive and fast profiles agree with materialized counts") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const Matrix m = testutil::random_square(rng, n, 2 + trial % 3);
    const auto expect = oracle::counts(m);
    const auto frac = oracle::delta(m);
    const DeltaProfile naive = delta_profile_naive(m);
    const DeltaProfile fast = delta_profile_fast(m, {HashSeed{}, trial % 2 == 0, 1});
    CHECK(naive.d == expect);
    CHECK(fast.d == expect);
    CHECK(fast.delta2d == Rational{frac.num, frac.den});
    CHECK(fast.argmax_k == frac.k);
    CHECK(count_distinct_k(m, n) == 1);
  }
}

TEST_CASE("parallel kernels match the serial reference") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix m = testutil::random_square(rng, 20 + trial, 2);
    const DeltaProfile ref = serial::delta_profile_naive(m);
    CHECK(delta_profile_naive(m, {HashSeed{}, false, 4}) == ref);
    CHECK(delta_profile_fast(m, {HashSeed{}, false, 4}) == ref);
  }
}

TEST_CASE("results do not depend on the hash seed") {
  std::mt19937_64 rng(77);
  const Matrix m = testutil::random_square(rng, 16, 2);
  const DeltaProfile a = delta_profile_fast(m, {HashSeed{1}});
  const DeltaProfile b = delta_profile_fast(m, {HashSeed{0xdeadbeef}});
  CHECK(a == b);
}

TEST_CASE("delta2d is invariant under transposition") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix m = testutil::random_square(rng, 2 + trial % 9, 2);
    CHECK(delta_profile_fast(m).d == delta_profile_fast(transpose(m)).d);
  }
}

TEST_CASE("separation family keeps delta small") {
  const Matrix m = gen_separation(64);
  const DeltaProfile p = delta_profile_fast(m);
  CHECK(p.count(1) == 3);
  CHECK(p == delta_profile_naive(m));
}
