#include <doctest.h>

#include <random>

#include "matrixrepet/attractor.hpp"
#include "matrixrepet/delta.hpp"
#include "matrixrepet/errors.hpp"
#include "matrixrepet/generators.hpp"
#include "oracles.hpp"
#include "random_matrix.hpp"

using namespace matrixrepet;

namespace {

std::vector<Cell> cells_of(const Attractor& g) {
  std::vector<Cell> out;
  for (Position p : g.positions) out.push_back(p.cell());
  return out;
}

Attractor random_attractor(std::mt19937_64& rng, std::size_t n, std::size_t size) {
  std::uniform_int_distribution<std::size_t> pick(1, n);
  std::vector<Position> ps;
  for (std::size_t i = 0; i < size; ++i) ps.push_back({pick(rng), pick(rng)});
  return Attractor(std::move(ps));
}

}  // namespace

TEST_CASE("attractor sets stay sorted and unique") {
  Attractor g({{2, 1}, {1, 3}, {2, 1}});
  CHECK(g.size() == 2);
  CHECK(g.positions.front() == Position{1, 3});
  g.insert({1, 1});
  g.insert({1, 3});
  CHECK(g.size() == 3);
  CHECK(g.contains({1, 1}));
}

TEST_CASE("empty attractor is rejected with a 1x1 witness") {
  const Matrix m = Matrix::filled(3, 3, 'a');
  const Verdict v = verify_attractor(m, {});
  CHECK_FALSE(v.valid);
  REQUIRE(v.witness);
  CHECK(v.witness->k == 1);
  CHECK(v.witness->anchor == Position{1, 1});
  CHECK_THROWS_AS(verify_attractor(m, Attractor({{4, 1}})), InvalidAttractor);
}

TEST_CASE("verify agrees with the brute oracle, witness included") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const Matrix m = testutil::random_square(rng, n, 2 + trial % 2);
    const Attractor g = random_attractor(rng, n, 1 + trial % 5);
    const Verdict v = verify_attractor(m, g, {HashSeed{}, 1 + trial % 3});
    const auto [k, anchor] = oracle::first_uncovered(m, cells_of(g));
    CHECK(v.valid == (k == 0));
    if (!v.valid) {
      REQUIRE(v.witness);
      CHECK(v.witness->k == k);
      CHECK(v.witness->anchor == Position::of(anchor));
    }
  }
}

TEST_CASE("exact gamma matches subset enumeration") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const Matrix m = testutil::random_square(rng, n, 2 + trial % 2);
    const Attractor g = gamma_exact(m);
    CHECK(g.size() == oracle::gamma(m));
    CHECK(oracle::is_attractor(m, cells_of(g)));
    CHECK(g.size() >= m.sigma());
    CHECK(delta_profile_fast(m).delta2d <= g.size());
  }
}

TEST_CASE("exact gamma is transposition invariant") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix m = testutil::random_square(rng, 2 + trial % 3, 2);
    CHECK(gamma_exact(m).size() == gamma_exact(transpose(m)).size());
  }
}

TEST_CASE("exact search refuses large inputs") {
  CHECK_THROWS_AS(gamma_exact(Matrix::filled(11, 11, 'a')), Inconclusive);
  ExactOptions tiny;
  tiny.node_budget = 1;
  std::mt19937_64 rng(1);
  CHECK_THROWS_AS(gamma_exact(testutil::random_square(rng, 6, 3), tiny), Inconclusive);
  CHECK_THROWS_AS(gamma_exact_string(std::string(17, 'a')), Inconclusive);
}

TEST_CASE("string attractors") {
  CHECK(gamma_exact_string("a").size() == 1);
  CHECK(gamma_exact_string("abab").size() == 2);
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 60; ++trial) {
    std::string s;
    for (int i = 0; i <= trial % 9; ++i) s += "abc"[rng() % (2 + trial % 2)];
    const StringAttractor g = gamma_exact_string(s);
    CHECK(g.size() == oracle::gamma_string(s));
    CHECK(verify_string_attractor(s, g).valid);
  }
  const StringVerdict v = verify_string_attractor("aab", StringAttractor({1}));
  CHECK_FALSE(v.valid);
  CHECK(v.length == 1);
  CHECK(v.start == 3);
}

TEST_CASE("lifting and projecting string attractors") {
  const std::string s = "abaab";
  const StringAttractor g = gamma_exact_string(s);
  const Matrix m = reduce_string_to_matrix(s);
  CHECK(verify_attractor(m, lift_attractor(g)).valid);
  const Attractor mg = gamma_exact(m);
  const StringAttractor back = project_attractor(mg, mg.size());
  CHECK(back.size() == mg.size());
  CHECK(verify_string_attractor(s, back).valid);
}

TEST_CASE("greedy attractors are valid") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 14;
    const Matrix m = testutil::random_square(rng, n, 2 + trial % 3);
    GreedyOptions opts;
    opts.threads = 1 + trial % 2;
    opts.k_cap = trial % 3 == 0 ? 2 : 0;
    const Attractor g = gamma_greedy(m, opts);
    CHECK(verify_attractor(m, g).valid);
    if (n <= 6) CHECK(oracle::is_attractor(m, cells_of(g)));
  }
  const Attractor one = gamma_greedy(Matrix::filled(5, 5, 'a'));
  CHECK(one.size() == 1);
}

TEST_CASE("attractor text format") {
  const Attractor g = parse_attractor_text("# comment\n1 2\n\n3 4  # trailing\n");
  CHECK(g == Attractor({{1, 2}, {3, 4}}));
  CHECK(parse_attractor_text(to_text(g)) == g);
  CHECK_THROWS_AS(parse_attractor_text("1\n"), FormatError);
  CHECK_THROWS_AS(parse_attractor_text("1 2 3\n"), FormatError);
  CHECK_THROWS_AS(parse_attractor_text("0 1\n"), FormatError);
  CHECK_THROWS_AS(parse_attractor_text("a b\n"), FormatError);
  CHECK(parse_attractor_text("").size() == 0);
}

TEST_CASE("unique windows on the separation family") {
  for (std::size_t n : {16u, 64u, 144u}) {
    const Matrix m = gen_separation(n);
    const auto windows = separation_unique_windows(n);
    const UniqueWindowReport r = unique_window_report(m, windows);
    CHECK(r.pairwise_disjoint);
    CHECK(r.lower_bound() == exact_sqrt(n) / 2);
    for (std::size_t c : r.occurrences) CHECK(c == 1);
  }
}
