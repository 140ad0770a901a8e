#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cwl/errors.hpp"
#include "cwl/words.hpp"
#include "oracles.hpp"

using namespace cwl;

namespace {

std::vector<std::int64_t> vals(const Word& w) { return {w.values().begin(), w.values().end()}; }

}  // namespace

TEST_CASE("parse") {
  const Modulus m(7);
  CHECK(vals(Word::parse("-2,0,-1,1", m)) == std::vector<std::int64_t>{5, 0, 6, 1});
  CHECK(vals(Word::parse(" 3, +9 ,\t4", m)) == std::vector<std::int64_t>{3, 2, 4});
  CHECK_THROWS_AS(Word::parse("", m), UsageError);
  CHECK_THROWS_AS(Word::parse("1,,2", m), UsageError);
  CHECK_THROWS_AS(Word::parse("1,x", m), UsageError);
  CHECK_THROWS_AS(Word::parse("1,2,", m), UsageError);
  CHECK(Word::parse("1,2,3", m).to_string() == "1,2,3");
}

TEST_CASE("oplus examples") {
  const Modulus m(11);
  CHECK(oplus(Word({3, 2, 1}, m), Word({1, 2, 3}, m)) == Word({6, 2, 2, 2}, m));
  CHECK(oplus(Word({-2, 0, -1, 1}, m), Word({3, -2, 2}, m)) == Word({0, 0, -1, 4, -2}, m));
  const Word a({4, 7, 1, 9}, m);
  CHECK(oplus(a, Word({0, 0}, m)) == a);
  // On the left, (0,0) rotates the word by one place.
  CHECK(oplus(Word({0, 0}, m), a) == a.rotated(a.size() - 1));
  CHECK(equivalent(oplus(Word({0, 0}, m), a), a));
}

TEST_CASE("oplus is not commutative") {
  const Modulus m(11);
  const Word a({3, 2, 1}, m), b({1, 2, 3}, m);
  CHECK(oplus(a, b) != oplus(b, a));
  const Word c({-2, 0, -1, 1}, m), d({3, -2, 2}, m);
  CHECK(oplus(c, d) != oplus(d, c));
}

TEST_CASE("oplus preconditions") {
  const Modulus m(7);
  CHECK_THROWS_AS(oplus(Word({1}, m), Word({1, 2}, m)), UsageError);
  CHECK_THROWS_AS(oplus(Word({1, 2}, m), Word({1, 2}, Modulus(5))), UsageError);
}

TEST_CASE("is_solution examples") {
  CHECK(is_solution(Word({0, 0}, Modulus(10))) == SolutionSign::minus);
  for (std::int64_t n = 2; n <= 12; ++n) {
    for (std::int64_t k = 0; k < n; ++k) CHECK_FALSE(is_solution(Word({k}, Modulus(n))).has_value());
  }
  CHECK(is_solution(Word({8, 3, 3, 3, 8}, Modulus(10))).has_value());
}

TEST_CASE("arrangements") {
  const Modulus m(7);
  const auto arr = rotations_and_reversals(Word({1, 2, 3}, m));
  CHECK(arr.size() == 6);
  CHECK(std::count(arr.begin(), arr.end(), Word({2, 3, 1}, m)) == 1);
  CHECK(std::count(arr.begin(), arr.end(), Word({3, 2, 1}, m)) == 1);
  for (const auto& w : rotations_and_reversals(Word::constant(4, 4, m))) CHECK(w == Word::constant(4, 4, m));
  const auto two = rotations_and_reversals(Word({1, 2}, m));
  CHECK(std::set<Word>(two.begin(), two.end()) == std::set<Word>{Word({1, 2}, m), Word({2, 1}, m)});
}

TEST_CASE("equivalence and canonical form") {
  const Modulus m5(5);
  CHECK(equivalent(Word({1, 2, 3}, m5), Word({3, 1, 2}, m5)));
  CHECK(equivalent(Word({1, 2, 3}, m5), Word({3, 2, 1}, m5)));
  CHECK_FALSE(equivalent(Word({1, 1, 2}, m5), Word({1, 2, 2}, m5)));
  CHECK_FALSE(equivalent(Word({1, 2}, m5), Word({1, 2, 1}, m5)));
  CHECK_THROWS_AS(equivalent(Word({1, 2}, m5), Word({1, 2}, Modulus(6))), UsageError);

  CHECK(canonical_form(Word({3, 1, 2}, m5)) == Word({1, 2, 3}, m5));
  CHECK(canonical_form(Word::constant(2, 6, m5)) == Word::constant(2, 6, m5));
  const Modulus m6(6);
  // Minimum over the 8 arrangements, computed by hand.
  std::vector<std::vector<std::int64_t>> arrangements;
  std::vector<std::int64_t> w{0, 2, 0, 4};
  for (int pass = 0; pass < 2; ++pass) {
    for (int r = 0; r < 4; ++r) {
      arrangements.push_back(w);
      std::rotate(w.begin(), w.begin() + 1, w.end());
    }
    std::reverse(w.begin(), w.end());
  }
  const auto expected = *std::min_element(arrangements.begin(), arrangements.end());
  CHECK(vals(canonical_form(Word({0, 2, 0, 4}, m6))) == expected);
  CHECK(expected == std::vector<std::int64_t>{0, 2, 0, 4});
}

TEST_CASE("canonical form is idempotent and an invariant of the class") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const Modulus m(2 + static_cast<std::int64_t>(rng() % 11));
    std::vector<std::int64_t> raw(1 + rng() % 8);
    for (auto& x : raw) x = static_cast<std::int64_t>(rng() % 50);
    const Word w(raw, m);
    const Word c = canonical_form(w);
    CHECK(canonical_form(c) == c);
    CHECK(equivalent(w, c));
    for (const auto& t : rotations_and_reversals(w)) {
      CHECK(canonical_form(t) == c);
      CHECK(is_solution(t).has_value() == is_solution(w).has_value());
    }
  }
}

TEST_CASE("oplus with a solution preserves solvability") {
  std::mt19937_64 rng(3);
  for (std::int64_t n = 2; n <= 8; ++n) {
    const Modulus m(n);
    std::vector<Word> sols;
    for (std::size_t len = 2; len <= 4; ++len) {
      for (const auto& w : oracle::all_words(n, len)) {
        if (oracle::solution_sign(w, n) != 0) sols.emplace_back(w, m);
      }
    }
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<std::int64_t> raw(2 + rng() % 5);
      for (auto& x : raw) x = static_cast<std::int64_t>(rng() % n);
      const Word a(raw, m);
      const Word& b = sols[rng() % sols.size()];
      CHECK(is_solution(oplus(a, b)).has_value() == is_solution(a).has_value());
    }
  }
}

TEST_CASE("small-size catalogs by brute force") {
  for (std::int64_t n = 2; n <= 10; ++n) {
    const Modulus m(n);
    for (std::size_t len = 2; len <= 4; ++len) {
      for (const auto& raw : oracle::all_words(n, len)) {
        const bool sol = is_solution(Word(raw, m)).has_value();
        REQUIRE(sol == (oracle::solution_sign(raw, n) != 0));
        bool expected = false;
        if (len == 2) expected = raw[0] == 0 && raw[1] == 0;
        if (len == 3) {
          expected = (raw[0] == 1 && raw[1] == 1 && raw[2] == 1) ||
                     (raw[0] == n - 1 && raw[1] == n - 1 && raw[2] == n - 1);
        }
        if (len == 4) {
          const auto a = raw[0], b = raw[1];
          const bool fam1 = raw[2] == oracle::mod(-a, n) && raw[3] == oracle::mod(-b, n) &&
                            oracle::mod(a * b, n) == 0;
          const bool fam2 = raw[2] == a && raw[3] == b && oracle::mod(a * b, n) == 2 % n;
          expected = fam1 || fam2;
        }
        CHECK_MESSAGE(sol == expected, "N=", n, " word=", Word(raw, m).to_string());
      }
    }
  }
}
