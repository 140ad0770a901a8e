// Acceptance suite: one PASS/FAIL line per criterion, with wall-clock limits.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cwl/enumerate.hpp"
#include "cwl/errors.hpp"
#include "cwl/monomial.hpp"
#include "cwl/numtheory.hpp"
#include "cwl/words.hpp"
#include "../unit/oracles.hpp"

using namespace cwl;

namespace {

// Collects the first failure; later ones are counted but not described.
struct Outcome {
  std::int64_t checks = 0;
  std::int64_t failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
};

std::string str(std::int64_t v) { return std::to_string(v); }

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::int64_t h_of(std::int64_t n, std::int64_t k) {
  const Modulus m(n);
  return minimal_monomial_size(m, Residue(k, m)).size;
}

Outcome classification_counts() {
  Outcome o;
  auto count = [](std::int64_t n) {
    const auto r = classify_monomials(Modulus(n));
    return std::count_if(r.begin(), r.end(), [](const auto& x) { return x.irreducible; });
  };
  for (std::int64_t n : {9, 25, 27, 49, 81}) {
    const auto c = count(n);
    o.expect(c == euler_phi(n), "N=" + str(n) + " count " + str(c));
  }
  for (int e = 3; e <= 6; ++e) {
    const auto c = count(ipow(2, e));
    o.expect(c == 3 * ipow(2, e - 2) + 1, "N=" + str(ipow(2, e)) + " count " + str(c));
  }
  o.expect(count(4) == 3, "N=4 count " + str(count(4)));
  return o;
}

Outcome size_table() {
  Outcome o;
  auto want = [&](std::int64_t n, std::int64_t k, std::int64_t h) {
    const auto got = h_of(n, k);
    o.expect(got == h, "N=" + str(n) + " k=" + str(k) + " h=" + str(got) + " want " + str(h));
  };
  want(10, 3, 15);
  want(30, 6, 12);
  want(9, 3, 6);
  want(8, 4, 4);
  want(6, 3, 6);
  for (int e = 2; e <= 6; ++e) {
    const auto n = ipow(2, e);
    for (std::int64_t a = 1; 2 * a < n; a += 2) want(n, 2 * a, n);
  }
  for (std::int64_t p : {3, 5, 7}) {
    for (int e = 1; e <= 3; ++e) {
      const auto n = ipow(p, e);
      for (int m = 1; m < e; ++m) {
        for (std::int64_t a = 1; a * ipow(p, m) < n; ++a) {
          if (a % p == 0) continue;
          want(n, a * ipow(p, m), 2 * ipow(p, e - m));
        }
      }
    }
  }
  for (std::int64_t l : {2, 3, 4, 5}) {
    for (int e : {2, 3}) want(ipow(l, e), l, 2 * ipow(l, e - 1));
  }
  return o;
}

Outcome closed_form_agreement() {
  Outcome o;
  for (std::int64_t n = 2; n <= 200; ++n) {
    const Modulus m(n);
    for (std::int64_t k = 0; k < n; ++k) {
      const auto closed = closed_form_size(m, k);
      if (!closed) continue;
      const auto h = minimal_monomial_size(m, Residue(k, m)).size;
      o.expect(*closed == h, "N=" + str(n) + " k=" + str(k) + " closed " + str(*closed) + " h " + str(h));
    }
  }
  return o;
}

Outcome small_catalogs() {
  Outcome o;
  for (std::int64_t n = 2; n <= 10; ++n) {
    const Modulus m(n);
    auto got = [&](std::size_t len) {
      const auto c = enumerate_solutions({m, len});
      return std::set<Word>(c.representatives.begin(), c.representatives.end());
    };
    o.expect(got(2) == std::set<Word>{Word({0, 0}, m)}, "N=" + str(n) + " size 2");
    o.expect(got(3) == std::set<Word>{Word({1, 1, 1}, m), Word({-1, -1, -1}, m)}, "N=" + str(n) + " size 3");
    std::set<Word> four;
    for (std::int64_t a = 0; a < n; ++a) {
      for (std::int64_t b = 0; b < n; ++b) {
        if ((a * b) % n == 0) four.insert(Word({-a, b, a, -b}, m));
        if ((a * b) % n == 2 % n) four.insert(Word({a, b, a, b}, m));
      }
    }
    o.expect(got(4) == four, "N=" + str(n) + " size 4");
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  for (std::int64_t n = 2; n <= 10; ++n) {
    const Modulus m(n);
    for (std::int64_t k = 0; k < n; ++k) {
      const auto s = is_reducible_monomial(m, Residue(k, m));
      const Word& t = s.certificate.target();
      const std::string tag = "N=" + str(n) + " k=" + str(k);
      if (t.size() < 3) {
        // (0,0) has no split with both parts of length >= 3.
        o.expect(s.certificate.variant() == ReducibilityCertificate::Variant::not_applicable, tag);
        continue;
      }
      const auto v = is_reducible_oracle(t);
      o.expect(v.reducible == s.reducible, tag + " oracle disagrees");
      if (v.witness) {
        const auto& w = *v.witness;
        o.expect(w.left.size() >= 3 && w.right.size() >= 3 && is_solution(w.left) &&
                     is_solution(w.right) && equivalent(t, oplus(w.left, w.right)),
                 tag + " bad witness");
      }
    }
  }
  const Modulus m10(10);
  const auto v = is_reducible_oracle(Word::constant(3, 15, m10));
  o.expect(v.reducible && v.witness && equivalent(Word::constant(3, 15, m10), oplus(v.witness->left, v.witness->right)),
           "N=10 k=3 witness");
  const auto s = is_reducible_monomial(m10, Residue(3, m10));
  o.expect(s.reducible && s.certificate.right() && equivalent(*s.certificate.right(), Word({8, 3, 3, 3, 8}, m10)),
           "N=10 k=3 structured right summand");
  const Modulus m8(8);
  o.expect(!is_reducible_monomial(m8, Residue(2, m8)).reducible, "N=8 k=2 structured");
  o.expect(!is_reducible_oracle(Word::constant(2, 8, m8)).reducible, "N=8 k=2 oracle");
  return o;
}

Outcome matrix_identity() {
  Outcome o;
  for (int n = 3; n <= 5; ++n) {
    const auto two_n = ipow(2, n);
    const Modulus m(2 * two_n);
    for (std::int64_t a : {1, 3, 5, 7}) {
      const auto direct = word_matrix(Word::constant(2 * a, two_n, m));
      const auto formula = Mat2::from_entries(1 + two_n * a * a, two_n * a, -two_n * a, 1 + two_n * a * a, m);
      o.expect(direct == formula, "n=" + str(n) + " a=" + str(a) + " got " + direct.to_string());
    }
  }
  return o;
}

Outcome family_soundness() {
  Outcome o;
  for (std::int64_t l = 2; l <= 16; ++l) {
    for (int n = 2; ipow(l, n) <= 256; ++n) {
      const auto big = ipow(l, n);
      for (int m = 1; m <= n - 1; ++m) {
        for (std::int64_t a = 1; a < big; ++a) {
          const FamilyParams p{l, n, m, a};
          std::vector<FamilyKind> kinds{FamilyKind::power_monomial};
          if (l > 2 && n >= 3 && m <= n - 2) kinds.push_back(FamilyKind::odd_boundary);
          if (l == 2 && n >= 4 && m >= 2 && m <= n - 2) kinds.push_back(FamilyKind::two_boundary);
          for (auto kind : kinds) {
            const std::string tag = to_string(kind) + " l=" + str(l) + " n=" + str(n) + " m=" + str(m) + " a=" + str(a);
            try {
              const auto w = family_word(kind, p);
              const std::vector<std::int64_t> raw(w.values().begin(), w.values().end());
              o.expect(oracle::solution_sign(raw, big) != 0, tag);
            } catch (const std::exception& e) {
              o.expect(false, tag + ": " + e.what());
            }
          }
        }
      }
    }
  }
  return o;
}

Outcome binomial_divisibility() {
  Outcome o;
  for (std::int64_t l = 2; l <= 6; ++l) {
    for (int n = 2; n <= 6; ++n) {
      for (int j = 1; j <= n - 1; ++j) {
        o.expect(binomial_valuation(ipow(l, n - 1), j, l) >= n - j, "l^(n-1) l=" + str(l) + " n=" + str(n));
      }
      for (int j = 2; n >= 3 && j <= n - 1; ++j) {
        o.expect(binomial_valuation(2 * ipow(l, n - 2), j, l) >= n - j, "2l^(n-2) l=" + str(l) + " n=" + str(n));
      }
    }
  }
  // n / gcd(n, k) | C(n, k) for n <= 200: the valuation of C(n, k) at each
  // prime of n / gcd must reach the prime's exponent there.
  for (std::int64_t n = 1; n <= 200; ++n) {
    for (std::int64_t k = 1; k <= n; ++k) {
      const auto q = n / std::gcd(n, k);
      if (q == 1) continue;
      for (const auto& pp : factorize(q).factors) {
        o.expect(binomial_valuation(n, k, pp.prime) >= pp.exponent, "n=" + str(n) + " k=" + str(k));
      }
    }
  }
  for (int n = 3; n <= 12; ++n) {
    for (int j = 3; j <= n; ++j) {
      o.expect(binomial_valuation(ipow(2, n - 1), j, 2) >= n + 1 - j, "2^(n-1) n=" + str(n) + " j=" + str(j));
    }
  }
  for (int top = 0; top <= 60; ++top) {
    for (int j = 0; j <= top; ++j) {
      const auto c = oracle::binom(top, j);
      for (std::int64_t base = 2; base <= 12; ++base) {
        o.expect(binomial_valuation(top, j, base) == oracle::valuation(c, base),
                 "C(" + str(top) + "," + str(j) + ") base " + str(base));
      }
    }
  }
  return o;
}

Outcome boundary_rigidity() {
  Outcome o;
  for (std::int64_t n = 2; n <= 10; ++n) {
    const Modulus m(n);
    for (std::int64_t k = 0; k < n; ++k) {
      const auto h = h_of(n, k);
      for (std::int64_t len = 3; len <= 12; ++len) {
        const Mat2 inner = word_matrix(Word::constant(k, len - 2, m));
        for (std::int64_t a = 0; a < n; ++a) {
          const Mat2 head = inner.times(elementary(Residue(a, m)));
          for (std::int64_t b = 0; b < n; ++b) {
            const bool sol = is_pm_identity(head.left_elementary(b)).has_value();
            const std::string tag = "N=" + str(n) + " k=" + str(k) + " len=" + str(len) + " a=" + str(a) + " b=" + str(b);
            if (sol) o.expect(a == b && (a * (a - k)) % n == 0, tag + " rigidity");
            if (len % h == 0) o.expect(!sol || (a == k && b == k), tag + " length hm");
            if (len % h == 1 && len > h) o.expect(!sol, tag + " length hm+1");
            if (len % h == 2 && len > h) o.expect(!sol || (a == 0 && b == 0), tag + " length hm+2");
          }
        }
      }
    }
  }
  return o;
}

Outcome determinism(const std::string& cli) {
  Outcome o;
  auto capture = [&]() {
    std::string out;
    FILE* pipe = popen(("\"" + cli + "\" verify --preset small").c_str(), "r");
    if (!pipe) return std::string("<popen failed>");
    char buf[4096];
    while (const auto n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    const int status = pclose(pipe);
    o.expect(status == 0, "verify --preset small exited with status " + str(status));
    return out;
  };
  const auto a = capture();
  const auto b = capture();
  o.expect(!a.empty() && a == b, "outputs differ");
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "cwl";
  const std::vector<Criterion> criteria{
      {1, "classification counts on prime powers", 5, classification_counts},
      {2, "minimal size table", 5, size_table},
      {3, "closed form agrees with iteration, N <= 200", 30, closed_form_agreement},
      {4, "size 2/3/4 catalogs, N <= 10", 10, small_catalogs},
      {5, "oracle agrees with structured decision, N <= 10", 60, oracle_equivalence},
      {6, "power matrix identity, n in 3..5", 1, matrix_identity},
      {7, "family soundness, N <= 256", 5, family_soundness},
      {8, "binomial divisibility and exact oracle", 5, binomial_divisibility},
      {9, "boundary rigidity, N <= 10, lengths <= 12", 60, boundary_rigidity},
      {10, "verify --preset small is byte-identical twice", 60, [&] { return determinism(cli); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.limit_s;
    const bool ok = o.failures == 0 && in_time;
    failed += !ok;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3fs/%.0fs", secs, c.limit_s);
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name
              << " checks=" << o.checks << " time=" << timing;
    if (o.failures) std::cout << " failures=" << o.failures << " first: " << o.first;
    if (!in_time) std::cout << " over time limit";
    std::cout << '\n';
  }
  std::cout << "acceptance: " << criteria.size() - failed << "/" << criteria.size() << " passed\n";
  return failed ? 1 : 0;
}
