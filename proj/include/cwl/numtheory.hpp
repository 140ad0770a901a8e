#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cwl {

// Largest modulus and factorization input accepted anywhere in the library.
// Keeps every product of two reduced residues inside a signed 64-bit word.
inline constexpr std::int64_t kMaxModulus = 2147483647;  // 2^31 - 1

struct PrimePower {
  std::int64_t prime;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// v = prod p_i^e_i with p_i strictly ascending and every e_i >= 1.
struct Factorization {
  std::int64_t value = 1;
  std::vector<PrimePower> factors;

  std::int64_t product() const;
  bool is_prime_power() const { return factors.size() == 1; }
  std::string to_string() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Trial division. Accepts 1 <= v <= kMaxModulus; v == 1 yields no factors.
Factorization factorize(std::int64_t v);

std::int64_t euler_phi(std::int64_t v);

// k = a_part * prod p_i^betas[i], with a_part coprime to every p_i of the
// factorization and betas[i] the exact p_i-adic valuation of k (not capped
// at the exponent of p_i). Requires k >= 1.
struct FactorAlong {
  std::int64_t a_part;
  std::vector<int> betas;

  friend bool operator==(const FactorAlong&, const FactorAlong&) = default;
};

FactorAlong factor_along(std::int64_t k, const Factorization& n);

// p-adic valuation of n! by Legendre's formula.
std::int64_t factorial_valuation(std::int64_t n, std::int64_t p);

/// Largest e with base^e dividing C(top, j), without materializing the
/// binomial. For base = prod p_i^e_i this is min_i floor(v_{p_i}(C) / e_i).
/// Requires 0 <= j <= top <= 10^6 and base >= 2.
std::int64_t binomial_valuation(std::int64_t top, std::int64_t j,
                                std::int64_t base);

}  // namespace cwl
