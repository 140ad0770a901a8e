#include "cwl/numtheory.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "cwl/errors.hpp"

namespace cwl {

std::int64_t Factorization::product() const {
  std::int64_t out = 1;
  for (const auto& f : factors) {
    for (int i = 0; i < f.exponent; ++i) out *= f.prime;
  }
  return out;
}

std::string Factorization::to_string() const {
  if (factors.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) os << " * ";
    os << factors[i].prime;
    if (factors[i].exponent > 1) os << '^' << factors[i].exponent;
  }
  return os.str();
}

Factorization factorize(std::int64_t v) {
  if (v < 1 || v > kMaxModulus) {
    throw UsageError("factorize: value " + std::to_string(v) +
                     " outside [1, 2^31-1]");
  }
  Factorization out;
  out.value = v;
  std::int64_t rest = v;
  for (std::int64_t p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    out.factors.push_back({p, e});
  }
  if (rest > 1) out.factors.push_back({rest, 1});
  return out;
}

std::int64_t euler_phi(std::int64_t v) {
  const auto f = factorize(v);
  std::int64_t phi = v;
  for (const auto& pp : f.factors) phi = phi / pp.prime * (pp.prime - 1);
  return phi;
}

FactorAlong factor_along(std::int64_t k, const Factorization& n) {
  if (k == 0) {
    throw UsageError("factor_along: k = 0 has no valuation");
  }
  if (k < 1) {
    throw UsageError("factor_along: k must be positive, got " +
                     std::to_string(k));
  }
  FactorAlong out{k, {}};
  out.betas.reserve(n.factors.size());
  for (const auto& pp : n.factors) {
    int beta = 0;
    while (out.a_part % pp.prime == 0) {
      out.a_part /= pp.prime;
      ++beta;
    }
    out.betas.push_back(beta);
  }
  return out;
}

std::int64_t factorial_valuation(std::int64_t n, std::int64_t p) {
  std::int64_t v = 0;
  while (n > 0) {
    n /= p;
    v += n;
  }
  return v;
}

std::int64_t binomial_valuation(std::int64_t top, std::int64_t j,
                                std::int64_t base) {
  if (base < 2) {
    throw UsageError("binomial_valuation: base must be >= 2");
  }
  if (j < 0 || j > top || top > 1000000) {
    throw UsageError("binomial_valuation: need 0 <= j <= top <= 10^6, got top=" +
                     std::to_string(top) + " j=" + std::to_string(j));
  }
  const auto bf = factorize(base);
  std::int64_t e = std::numeric_limits<std::int64_t>::max();
  for (const auto& pp : bf.factors) {
    const std::int64_t vp = factorial_valuation(top, pp.prime) -
                            factorial_valuation(j, pp.prime) -
                            factorial_valuation(top - j, pp.prime);
    e = std::min(e, vp / pp.exponent);
  }
  return e;
}

}  // namespace cwl
