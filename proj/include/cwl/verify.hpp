#pragma once

/**
 * @file verify.hpp
 * @brief Property suites over ranges of moduli, used by `cwl verify`.
 *
 * Each suite checks one invariant exhaustively or on seeded random samples
 * and records the first counterexample it meets. Reports are deterministic:
 * the same request produces the same text regardless of thread count.
 */

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cwl/modring.hpp"

namespace cwl {

struct CheckResult {
  std::string name;
  std::string scope;  // "N=10", "all", ...
  bool passed = true;
  std::int64_t checks = 0;
  std::string counterexample;

  std::string to_line() const;
};

struct VerifyReport {
  std::string title;
  std::vector<CheckResult> results;

  bool passed() const;
  std::size_t failures() const;
  std::string to_text() const;
};

struct VerifyOptions {
  unsigned threads = 1;
  std::uint64_t seed = 20240601;
};

enum class Preset { small, prime_powers, sizes };

Preset parse_preset(std::string_view name);
std::string to_string(Preset p);

/// Moduli covered by the prime-powers preset.
const std::vector<std::int64_t>& prime_power_preset();

/// All suites that apply to a single modulus.
std::vector<CheckResult> verify_modulus(const Modulus& n,
                                        const VerifyOptions& opts = {});

/// Per-modulus suites for every N in [lo, hi].
VerifyReport verify_range(std::int64_t lo, std::int64_t hi,
                          const VerifyOptions& opts = {});

VerifyReport verify_preset(Preset p, const VerifyOptions& opts = {});

namespace suites {

// Per-modulus suites. Each one is a no-op pass with zero checks when the
// modulus is outside the range it is meant for.
CheckResult det_one(const Modulus& n, std::uint64_t seed);
CheckResult multiplicativity(const Modulus& n, std::uint64_t seed);
CheckResult elementary_inverse(const Modulus& n);
CheckResult size_two_unique(const Modulus& n);
CheckResult size_three_catalog(const Modulus& n);
CheckResult size_four_catalog(const Modulus& n);
CheckResult oplus_stability(const Modulus& n, std::uint64_t seed);
CheckResult equivalence_stability(const Modulus& n, std::uint64_t seed);
CheckResult canonical_form_laws(const Modulus& n, std::uint64_t seed);
CheckResult size_divisibility(const Modulus& n);
CheckResult prime_power_size_bound(const Modulus& n);
CheckResult boundary_rigidity(const Modulus& n, std::size_t max_len = 8);
CheckResult boundary_multiples(const Modulus& n, std::size_t max_len = 12);
CheckResult root_symmetry(const Modulus& n);
CheckResult roots_prime_power(const Modulus& n);
CheckResult classification(const Modulus& n, unsigned threads = 1);
CheckResult oracle_agreement(const Modulus& n);
CheckResult reference_cases(const Modulus& n);
CheckResult closed_form_agreement(const Modulus& n);
CheckResult census_symmetry(const Modulus& n);
CheckResult census_determinism(const Modulus& n);

// Global suites.
CheckResult binomial_prime_power_top();
CheckResult binomial_double_power_top();
CheckResult binomial_n_over_gcd();
CheckResult binomial_two_power_top();
CheckResult binomial_matches_exact();
CheckResult family_soundness(std::int64_t max_modulus = 256);
CheckResult power_matrix_identities();
CheckResult size_table();
CheckResult closed_form_range(std::int64_t max_modulus = 200);

}  // namespace suites

}  // namespace cwl
