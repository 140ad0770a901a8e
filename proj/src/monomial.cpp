#include "cwl/monomial.hpp"

#include <algorithm>
#include <sstream>

#include "cwl/detail/parallel.hpp"
#include "cwl/errors.hpp"

namespace cwl {

namespace {

// base^e, or nothing once the result would exceed kMaxModulus.
std::optional<std::int64_t> checked_pow(std::int64_t base, int e) {
  std::int64_t out = 1;
  for (int i = 0; i < e; ++i) {
    if (out > kMaxModulus / base) return std::nullopt;
    out *= base;
  }
  return out;
}

std::int64_t pow_small(std::int64_t base, int e) {
  std::int64_t out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

std::string word_note(const Word& target, const Word& sum) {
  const auto all = rotations_and_reversals(sum);
  const std::size_t n = sum.size();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] == target) {
      return i < n ? "rotation " + std::to_string(i)
                   : "reversal then rotation " + std::to_string(i - n);
    }
  }
  return {};
}

}  // namespace

std::int64_t minimal_size_cap(const Modulus& n) {
  std::int64_t cap = 2 * n.value();
  for (std::size_t i = 0; i < n.factorization().factors.size(); ++i) cap *= 3;
  return cap;
}

MinimalSize minimal_monomial_size(const Modulus& n, const Residue& k) {
  const std::int64_t cap = minimal_size_cap(n);
  Mat2 acc = elementary(k);
  for (std::int64_t h = 1; h <= cap; ++h) {
    if (const auto s = is_pm_identity(acc)) return {h, *s};
    acc = acc.left_elementary(k.value());
  }
  throw InternalError("minimal_monomial_size: no solution below cap " +
                      std::to_string(cap) + " for N=" +
                      std::to_string(n.value()) +
                      " k=" + std::to_string(k.value()));
}

std::optional<std::int64_t> closed_form_size(const Modulus& n,
                                             std::int64_t k) {
  const std::int64_t r = n.reduce(k);
  if (r == 0) return 2;
  const auto& f = n.factorization();
  const auto along = factor_along(r, f);
  std::int64_t size = 2;
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    const int beta = std::min(along.betas[i], f.factors[i].exponent);
    if (beta < 1) return std::nullopt;
    size *= pow_small(f.factors[i].prime, f.factors[i].exponent - beta);
  }
  return size;
}

bool QuadraticRoots::contains(std::int64_t x) const {
  return std::binary_search(roots.begin(), roots.end(), x);
}

QuadraticRoots quadratic_roots(const Modulus& n, const Residue& k) {
  QuadraticRoots out{k.value(), {}};
  const std::int64_t N = n.value();
  for (std::int64_t x = 0; x < N; ++x) {
    if (x * ((x - k.value() + N) % N) % N == 0) out.roots.push_back(x);
  }
  return out;
}

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::power_monomial: return "power_monomial";
    case FamilyKind::odd_boundary: return "odd_boundary";
    case FamilyKind::two_boundary: return "two_boundary";
  }
  return "?";
}

FamilyKind parse_family_kind(std::string_view name) {
  for (auto kind : {FamilyKind::power_monomial, FamilyKind::odd_boundary,
                    FamilyKind::two_boundary}) {
    if (to_string(kind) == name) return kind;
  }
  throw UsageError("unknown family kind '" + std::string(name) + "'");
}

Modulus family_modulus(FamilyKind kind, const FamilyParams& p) {
  const std::int64_t l = kind == FamilyKind::two_boundary ? 2 : p.base;
  if (l < 2 || p.exponent < 1) {
    throw UsageError("family " + to_string(kind) + ": need l >= 2, n >= 1");
  }
  const auto n = checked_pow(l, p.exponent);
  if (!n) throw UsageError("family " + to_string(kind) + ": l^n exceeds 2^31-1");
  return Modulus(*n);
}

Word family_word(FamilyKind kind, const FamilyParams& p) {
  const int n = p.exponent;
  const int m = p.m;
  const std::int64_t l = kind == FamilyKind::two_boundary ? 2 : p.base;
  auto range_error = [&](const char* rule) {
    return UsageError("family " + to_string(kind) + ": parameters l=" +
                      std::to_string(l) + " n=" + std::to_string(n) +
                      " m=" + std::to_string(m) + " violate " + rule);
  };

  switch (kind) {
    case FamilyKind::power_monomial:
      if (l < 2 || n < 2 || m < 1 || m > n - 1) {
        throw range_error("l, n >= 2 and 1 <= m <= n-1");
      }
      break;
    case FamilyKind::odd_boundary:
      if (l <= 2 || n < 3 || m < 1 || m > n - 2) {
        throw range_error("l > 2, n >= 3 and 1 <= m <= n-2");
      }
      break;
    case FamilyKind::two_boundary:
      if (n < 4 || m < 2 || m > n - 2) {
        throw range_error("n >= 4 and 2 <= m <= n-2");
      }
      break;
  }

  const Modulus mod = family_modulus(kind, p);
  const std::int64_t inner = mod.reduce(mod.reduce(p.a) * pow_small(l, m));
  std::vector<std::int64_t> values;
  switch (kind) {
    case FamilyKind::power_monomial:
      values.assign(static_cast<std::size_t>(2 * pow_small(l, n - m)), inner);
      break;
    case FamilyKind::odd_boundary: {
      const std::int64_t len =
          2 * pow_small(l, n - m) - 4 * pow_small(l, n - m - 1) + 2;
      const std::int64_t edge =
          mod.reduce(2 * mod.reduce(p.a) % mod.value() * pow_small(l, n - 1));
      values.assign(static_cast<std::size_t>(len), inner);
      values.front() = values.back() = edge;
      break;
    }
    case FamilyKind::two_boundary: {
      const std::int64_t len = pow_small(2, n - m) + 2;
      const std::int64_t edge = mod.reduce(mod.reduce(p.a) * pow_small(2, n - 1));
      values.assign(static_cast<std::size_t>(len), inner);
      values.front() = values.back() = edge;
      break;
    }
  }

  Word w(values, mod);
  if (!is_solution(w)) {
    throw InternalError("family " + to_string(kind) + " produced a non-solution " +
                        w.to_string() + " over N=" + std::to_string(mod.value()));
  }
  return w;
}

Mat2 power_matrix_identity(int n, std::int64_t a) {
  if (n < 3 || n > 29) {
    throw UsageError("power_matrix_identity: need 3 <= n <= 29, got " +
                     std::to_string(n));
  }
  if (a % 2 == 0) {
    throw UsageError("power_matrix_identity: a must be odd, got " +
                     std::to_string(a));
  }
  const Modulus mod(pow_small(2, n + 1));
  const std::int64_t two_n = pow_small(2, n);
  const std::int64_t ar = mod.reduce(a);
  const std::int64_t k = mod.reduce(2 * ar);

  Mat2 acc = Mat2::identity(mod);
  for (std::int64_t i = 0; i < two_n; ++i) acc = acc.left_elementary(k);

  const std::int64_t diag = mod.reduce(1 + two_n * (ar * ar % mod.value()));
  const std::int64_t off = mod.reduce(two_n * ar);
  const Mat2 expected = Mat2::from_entries(diag, off, -off, diag, mod);
  if (!(acc == expected)) {
    throw InternalError("power_matrix_identity: product " + acc.to_string() +
                        " differs from " + expected.to_string());
  }
  return acc;
}

ReducibilityCertificate ReducibilityCertificate::decomposition(
    const Word& target, Word left, Word right) {
  if (left.size() < 3 || right.size() < 3) {
    throw InternalError("decomposition summands must both have length >= 3");
  }
  if (!is_solution(right)) {
    throw InternalError("decomposition right summand " + right.to_string() +
                        " is not a solution");
  }
  if (!is_solution(left)) {
    throw InternalError("decomposition left summand " + left.to_string() +
                        " is not a solution");
  }
  const Word sum = oplus(left, right);
  if (!equivalent(target, sum)) {
    throw InternalError("decomposition " + left.to_string() + " + " +
                        right.to_string() + " is not equivalent to " +
                        target.to_string());
  }
  ReducibilityCertificate c(Variant::decomposition, target);
  c.note_ = word_note(target, sum);
  c.left_ = std::move(left);
  c.right_ = std::move(right);
  return c;
}

ReducibilityCertificate ReducibilityCertificate::exhausted(
    const Word& target, std::vector<Attempt> attempts) {
  ReducibilityCertificate c(Variant::exhausted, target);
  c.attempts_ = std::move(attempts);
  return c;
}

ReducibilityCertificate ReducibilityCertificate::not_applicable(
    const Word& target) {
  return ReducibilityCertificate(Variant::not_applicable, target);
}

std::string ReducibilityCertificate::summary() const {
  std::ostringstream os;
  switch (variant_) {
    case Variant::decomposition:
      os << "(" << left_->to_string() << ") + (" << right_->to_string()
         << "), " << note_;
      break;
    case Variant::exhausted:
      os << "exhausted " << attempts_.size() << " (split, root) pairs";
      break;
    case Variant::not_applicable:
      os << "size 2, not considered irreducible";
      break;
  }
  return os.str();
}

std::string to_string(ReducibilityCertificate::Variant v) {
  switch (v) {
    case ReducibilityCertificate::Variant::decomposition: return "decomposition";
    case ReducibilityCertificate::Variant::exhausted: return "exhausted";
    case ReducibilityCertificate::Variant::not_applicable: return "not_applicable";
  }
  return "?";
}

std::string to_string(ReducibilityCertificate::Failure f) {
  switch (f) {
    case ReducibilityCertificate::Failure::right_not_solution:
      return "right_not_solution";
    case ReducibilityCertificate::Failure::left_not_solution:
      return "left_not_solution";
  }
  return "?";
}

ReducibilityVerdict is_reducible_monomial(const Modulus& n, const Residue& k) {
  const auto [h, sign] = minimal_monomial_size(n, k);
  (void)sign;
  const Word target = Word::constant(k.value(), static_cast<std::size_t>(h), n);
  if (h == 2) {
    return {true, ReducibilityCertificate::not_applicable(target)};
  }

  // powers[j] = E(k)^j
  std::vector<Mat2> powers;
  powers.reserve(static_cast<std::size_t>(h));
  powers.push_back(Mat2::identity(n));
  for (std::int64_t j = 1; j < h; ++j) {
    powers.push_back(powers.back().left_elementary(k.value()));
  }
  auto bordered = [&](std::int64_t x, std::int64_t len) {
    const Mat2 ex = elementary(Residue(x, n));
    return ex.times(powers[static_cast<std::size_t>(len - 2)]).times(ex);
  };

  const auto roots = quadratic_roots(n, k);
  std::vector<ReducibilityCertificate::Attempt> attempts;
  for (std::int64_t l = 3; l <= h - 1; ++l) {
    const std::int64_t m = h + 2 - l;
    for (const std::int64_t x : roots.roots) {
      if (!is_pm_identity(bordered(x, l))) {
        attempts.push_back(
            {l, x, ReducibilityCertificate::Failure::right_not_solution});
        continue;
      }
      const std::int64_t y = n.reduce(k.value() - x);
      if (!is_pm_identity(bordered(y, m))) {
        attempts.push_back(
            {l, x, ReducibilityCertificate::Failure::left_not_solution});
        continue;
      }
      Word right = Word::constant(k.value(), static_cast<std::size_t>(l), n);
      Word left = Word::constant(k.value(), static_cast<std::size_t>(m), n);
      std::vector<std::int64_t> rv(right.values().begin(), right.values().end());
      std::vector<std::int64_t> lv(left.values().begin(), left.values().end());
      rv.front() = rv.back() = x;
      lv.front() = lv.back() = y;
      return {true, ReducibilityCertificate::decomposition(
                        target, Word(lv, n), Word(rv, n))};
    }
  }
  return {false, ReducibilityCertificate::exhausted(target, std::move(attempts))};
}

MonomialReport monomial_report(const Modulus& n, const Residue& k) {
  const auto size = minimal_monomial_size(n, k);
  auto verdict = is_reducible_monomial(n, k);
  return {n.value(),   k.value(),          size.size, size.sign,
          !verdict.reducible, std::move(verdict.certificate)};
}

std::optional<bool> prime_power_irreducible(const Modulus& n, std::int64_t k) {
  const auto& f = n.factorization();
  if (!f.is_prime_power()) return std::nullopt;
  const std::int64_t p = f.factors[0].prime;
  const int e = f.factors[0].exponent;
  const std::int64_t r = n.reduce(k);
  if (p != 2) return r % p != 0;
  if (r % 2 == 1) return true;
  if (r == pow_small(2, e - 1)) return true;
  return e >= 2 && r % 2 == 0 && (r / 2) % 2 == 1;
}

std::vector<MonomialReport> classify_monomials(const Modulus& n,
                                               unsigned threads) {
  auto reports = detail::ordered_map(
      static_cast<std::size_t>(n.value()), threads, [&](std::size_t k) {
        return monomial_report(n, Residue(static_cast<std::int64_t>(k), n));
      });
  for (const auto& r : reports) {
    const auto expected = prime_power_irreducible(n, r.k);
    if (expected && *expected != r.irreducible) {
      throw VerificationFailure(
          "N=" + std::to_string(n.value()) + " k=" + std::to_string(r.k) +
          ": computed " + (r.irreducible ? "irreducible" : "reducible") +
          " but the prime-power classification says " +
          (*expected ? "irreducible" : "reducible"));
    }
  }
  return reports;
}

}  // namespace cwl
