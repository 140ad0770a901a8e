#include "cwl/enumerate.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "cwl/detail/parallel.hpp"
#include "cwl/errors.hpp"

namespace cwl {

namespace {

struct Shard {
  std::int64_t count = 0;
  std::vector<std::vector<std::int64_t>> solutions;
};

// All words of length `size` starting with `first`, in lexicographic order.
Shard scan_shard(const Modulus& mod, std::size_t size, std::int64_t first,
                 bool keep) {
  Shard out;
  const std::int64_t n = mod.value();
  std::vector<Mat2> prefix(size + 1, Mat2::identity(mod));
  std::vector<std::int64_t> word(size, 0);
  word[0] = first;
  prefix[1] = prefix[0].left_elementary(first);

  auto visit = [&](auto&& self, std::size_t depth) -> void {
    if (depth == size) {
      if (is_pm_identity(prefix[depth])) {
        ++out.count;
        if (keep) out.solutions.push_back(word);
      }
      return;
    }
    for (std::int64_t v = 0; v < n; ++v) {
      word[depth] = v;
      prefix[depth + 1] = prefix[depth].left_elementary(v);
      self(self, depth + 1);
    }
  };
  visit(visit, 1);
  return out;
}

}  // namespace

std::int64_t enumeration_cost(std::int64_t n_mod, std::size_t size) {
  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  std::int64_t total = 0;
  std::int64_t level = 1;
  for (std::size_t i = 0; i < size; ++i) {
    if (level > kMax / n_mod) return kMax;
    level *= n_mod;
    if (total > kMax - level) return kMax;
    total += level;
  }
  return total;
}

Census enumerate_solutions(const EnumerationQuery& q) {
  if (q.size == 0) throw UsageError("enumerate: size must be >= 1");
  const std::int64_t n = q.modulus.value();
  const std::int64_t cost = enumeration_cost(n, q.size);
  if (cost > q.budget) {
    throw UsageError("enumerate: N=" + std::to_string(n) + " n=" +
                     std::to_string(q.size) + " needs " + std::to_string(cost) +
                     " matrix products, over the budget of " +
                     std::to_string(q.budget) + " (set CWL_BUDGET to raise it)");
  }

  const bool keep = !q.count_only || q.dedup;
  auto shards = detail::ordered_map(
      static_cast<std::size_t>(n), q.threads, [&](std::size_t first) {
        return scan_shard(q.modulus, q.size, static_cast<std::int64_t>(first),
                          keep);
      });

  Census out{n, q.size, 0, {}};
  for (const auto& s : shards) out.total += s.count;
  if (q.count_only) return out;

  if (q.dedup) {
    std::set<Word> classes;
    for (const auto& s : shards) {
      for (const auto& w : s.solutions) {
        classes.insert(canonical_form(Word(w, q.modulus)));
      }
    }
    out.representatives.assign(classes.begin(), classes.end());
  } else {
    for (const auto& s : shards) {
      for (const auto& w : s.solutions) {
        out.representatives.emplace_back(w, q.modulus);
      }
    }
  }
  return out;
}

OracleVerdict is_reducible_oracle(const Word& w) {
  const std::size_t n = w.size();
  if (n < 3) {
    throw UsageError("is_reducible_oracle: need length >= 3, got " +
                     std::to_string(n));
  }
  if (!is_solution(w)) {
    throw UsageError("is_reducible_oracle: " + w.to_string() +
                     " is not a solution");
  }
  const Modulus& mod = w.modulus();
  const std::int64_t N = mod.value();

  for (const Word& t : rotations_and_reversals(w)) {
    for (std::size_t l = 3; l + 1 <= n; ++l) {
      const std::size_t m = n + 2 - l;
      if (m < 3) continue;
      // Right summand b = (b_1, t[m], ..., t[n-1], b_l).
      Mat2 inner = Mat2::identity(mod);
      for (std::size_t i = m; i < n; ++i) inner = inner.left_elementary(t[i]);
      for (std::int64_t b_first = 0; b_first < N; ++b_first) {
        const Mat2 tail = inner.times(elementary(Residue(b_first, mod)));
        for (std::int64_t b_last = 0; b_last < N; ++b_last) {
          if (!is_pm_identity(tail.left_elementary(b_last))) continue;

          std::vector<std::int64_t> b;
          b.reserve(l);
          b.push_back(b_first);
          for (std::size_t i = m; i < n; ++i) b.push_back(t[i]);
          b.push_back(b_last);

          std::vector<std::int64_t> a;
          a.reserve(m);
          a.push_back(t[0] - b_last);
          for (std::size_t i = 1; i + 1 < m; ++i) a.push_back(t[i]);
          a.push_back(t[m - 1] - b_first);

          OracleWitness witness{Word(a, mod), Word(b, mod), t};
          if (!is_solution(witness.left)) {
            throw InternalError("is_reducible_oracle: left summand " +
                                witness.left.to_string() +
                                " of a solution sum is not a solution");
          }
          return {true, std::move(witness)};
        }
      }
    }
  }
  return {false, std::nullopt};
}

}  // namespace cwl
