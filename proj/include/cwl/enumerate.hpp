#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cwl/modring.hpp"
#include "cwl/words.hpp"

namespace cwl {

inline constexpr std::int64_t kDefaultBudget = 100000000;  // matrix products

struct EnumerationQuery {
  Modulus modulus;
  std::size_t size;
  bool dedup = false;
  bool count_only = false;
  std::int64_t budget = kDefaultBudget;
  unsigned threads = 1;
};

struct Census {
  std::int64_t modulus;
  std::size_t size;
  std::int64_t total = 0;
  // Canonical forms, ascending, when the query asked for dedup; otherwise
  // every solution in lexicographic order. Empty for count-only queries.
  std::vector<Word> representatives;

  friend bool operator==(const Census&, const Census&) = default;
};

/// Matrix products a depth-first scan of all N^n words performs:
/// N + N^2 + ... + N^n (saturating).
std::int64_t enumeration_cost(std::int64_t n_mod, std::size_t size);

/// Exhaustive scan over all N^n words with a running product. Throws
/// UsageError if the cost exceeds the query budget or size == 0. Shards on
/// the first component when threads > 1; the output does not depend on it.
Census enumerate_solutions(const EnumerationQuery& q);

struct OracleWitness {
  Word left;         // a, the summand that need not be given as a solution
  Word right;        // b, a solution
  Word arrangement;  // the rotation/reversal of the input equal to a + b
};

struct OracleVerdict {
  bool reducible;
  std::optional<OracleWitness> witness;
};

/// Literal reducibility search over every arrangement t of w, every split
/// with right length l in [3, n-1] and left length n+2-l >= 3, and every
/// choice of the two free boundary values of the right summand, accepting
/// when the right summand is a solution. Requires w to be a solution of
/// length >= 3 (UsageError otherwise).
OracleVerdict is_reducible_oracle(const Word& w);

}  // namespace cwl
