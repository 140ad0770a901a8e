#pragma once

/**
 * @file monomial.hpp
 * @brief Monomial solutions (k, k, ..., k) of M_n = +-Id over Z/NZ.
 *
 * For a residue k the all-k word of length n is a solution exactly when the
 * minimal size h divides n, where h is the order of E(k) in SL2(Z/NZ)
 * modulo +-Id. This header computes h (by iteration and, where it applies,
 * in closed form), the boundary roots x with x(x - k) = 0, a few explicit
 * solution families, and decides whether the minimal all-k solution is
 * reducible, returning a certificate that is checked when it is built.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cwl/modring.hpp"
#include "cwl/words.hpp"

namespace cwl {

struct MinimalSize {
  std::int64_t size;
  SolutionSign sign;
};

/// Upper bound on the iteration in minimal_monomial_size: 2 * 3^r * N, with
/// r the number of distinct primes of N. For N = p^n the minimal size is
/// below 3p^n; across coprime components the projective order divides
/// 2 * lcm of the component orders. Reaching it indicates a bug.
std::int64_t minimal_size_cap(const Modulus& n);

/// Smallest h >= 1 with E(k)^h = +-Id, by repeated multiplication.
/// Throws InternalError if the cap is reached.
MinimalSize minimal_monomial_size(const Modulus& n, const Residue& k);

/// 2 * prod p_i^(alpha_i - beta_i) where beta_i = v_{p_i}(k) capped at
/// alpha_i, when every beta_i >= 1. Returns 2 for k = 0 mod N and nothing
/// when some prime of N does not divide k.
std::optional<std::int64_t> closed_form_size(const Modulus& n, std::int64_t k);

struct QuadraticRoots {
  std::int64_t k;
  std::vector<std::int64_t> roots;  // ascending

  bool contains(std::int64_t x) const;
};

/// All x in [0, N) with x(x - k) = 0 mod N, by scanning.
QuadraticRoots quadratic_roots(const Modulus& n, const Residue& k);

enum class FamilyKind { power_monomial, odd_boundary, two_boundary };

std::string to_string(FamilyKind kind);
FamilyKind parse_family_kind(std::string_view name);

// Parameters of the explicit families. `base` is l (fixed to 2 for
// two_boundary), `exponent` is n, `m` the power of the base in the interior
// entries and `a` the multiplier.
struct FamilyParams {
  std::int64_t base = 2;
  int exponent = 2;
  int m = 1;
  std::int64_t a = 1;
};

/// Modulus l^n of a family.
Modulus family_modulus(FamilyKind kind, const FamilyParams& p);

/// power_monomial: (al^m, ..., al^m) of length 2l^(n-m) over l^n,
///   l, n >= 2 and 1 <= m <= n-1.
/// odd_boundary: (2al^(n-1), al^m, ..., al^m, 2al^(n-1)) of length
///   2l^(n-m) - 4l^(n-m-1) + 2 over l^n, l > 2, n >= 3, 1 <= m <= n-2.
/// two_boundary: (a2^(n-1), a2^m, ..., a2^m, a2^(n-1)) of length
///   2^(n-m) + 2 over 2^n, n >= 4, 2 <= m <= n-2.
/// The result is checked to be a solution (InternalError otherwise).
Word family_word(FamilyKind kind, const FamilyParams& p);

/// M_{2^n}(2a, ..., 2a) over 2^(n+1), computed by 2^n multiplications and
/// checked against [[1+2^n a^2, 2^n a], [-2^n a, 1+2^n a^2]].
/// Requires n >= 3, a odd, 2^(n+1) <= 2^31 - 1.
Mat2 power_matrix_identity(int n, std::int64_t a);

// Witness that a solution is reducible (target ~ left + right with right a
// solution and both summands of length >= 3), or the record of a failed
// exhaustive search. The size-2 target (0,0) gets its own variant.
class ReducibilityCertificate {
 public:
  enum class Variant { decomposition, exhausted, not_applicable };
  enum class Failure { right_not_solution, left_not_solution };

  struct Attempt {
    std::int64_t split;  // length of the right summand
    std::int64_t root;   // boundary value of the right summand
    Failure failure;
  };

  /// Re-verifies every condition; throws InternalError if one fails.
  static ReducibilityCertificate decomposition(const Word& target, Word left,
                                               Word right);
  static ReducibilityCertificate exhausted(const Word& target,
                                           std::vector<Attempt> attempts);
  static ReducibilityCertificate not_applicable(const Word& target);

  Variant variant() const noexcept { return variant_; }
  const Word& target() const noexcept { return target_; }
  const std::optional<Word>& left() const noexcept { return left_; }
  const std::optional<Word>& right() const noexcept { return right_; }
  /// How the target is obtained from left + right, e.g. "rotation 0".
  const std::string& rotation_note() const noexcept { return note_; }
  const std::vector<Attempt>& attempts() const noexcept { return attempts_; }

  std::string summary() const;

 private:
  explicit ReducibilityCertificate(Variant v, Word target)
      : variant_(v), target_(std::move(target)) {}

  Variant variant_;
  Word target_;
  std::optional<Word> left_;
  std::optional<Word> right_;
  std::string note_;
  std::vector<Attempt> attempts_;
};

std::string to_string(ReducibilityCertificate::Variant v);
std::string to_string(ReducibilityCertificate::Failure f);

struct ReducibilityVerdict {
  bool reducible;
  ReducibilityCertificate certificate;
};

/// Decides reducibility of the minimal all-k solution. Searches right
/// summands (x, k, ..., k, x) of length l = 3..h-1 with x a boundary root,
/// paired with left summands (k-x, k, ..., k, k-x) of length h+2-l. The
/// size-2 case k = 0 is reported reducible with a not_applicable certificate.
ReducibilityVerdict is_reducible_monomial(const Modulus& n, const Residue& k);

struct MonomialReport {
  std::int64_t modulus;
  std::int64_t k;
  std::int64_t minimal_size;
  SolutionSign sign;
  bool irreducible;
  ReducibilityCertificate certificate;
};

MonomialReport monomial_report(const Modulus& n, const Residue& k);

/// Irreducibility of the minimal all-k solution over N = p^n predicted by
/// the prime-power classification; nothing when N is not a prime power.
std::optional<bool> prime_power_irreducible(const Modulus& n, std::int64_t k);

/// One report per k in [0, N), ordered by k. At prime-power N every verdict
/// is compared with prime_power_irreducible; a disagreement throws
/// VerificationFailure. `threads` > 1 evaluates distinct k concurrently.
std::vector<MonomialReport> classify_monomials(const Modulus& n,
                                               unsigned threads = 1);

}  // namespace cwl
