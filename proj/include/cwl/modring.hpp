#pragma once

/**
 * @file modring.hpp
 * @brief Residues and 2x2 matrices of determinant one over Z/NZ.
 *
 * The central object is the elementary matrix
 *
 *     E(k) = [[k, -1],
 *             [1,  0]]
 *
 * and the word product M(a_1, ..., a_n) = E(a_n) E(a_{n-1}) ... E(a_1).
 * The first tuple component is the rightmost factor.
 *
 * All values are immutable after construction and all functions are pure.
 */

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>

#include "cwl/numtheory.hpp"

namespace cwl {

class Modulus {
 public:
  /// 2 <= n <= 2^31 - 1.
  explicit Modulus(std::int64_t n);

  std::int64_t value() const noexcept { return n_; }
  const Factorization& factorization() const noexcept { return *factors_; }

  /// Least nonnegative representative of x.
  std::int64_t reduce(std::int64_t x) const noexcept {
    const std::int64_t r = x % n_;
    return r < 0 ? r + n_ : r;
  }

  friend bool operator==(const Modulus& a, const Modulus& b) noexcept {
    return a.n_ == b.n_;
  }

 private:
  std::int64_t n_;
  std::shared_ptr<const Factorization> factors_;
};

class Residue {
 public:
  Residue(std::int64_t raw, const Modulus& m)
      : value_(m.reduce(raw)), modulus_(m.value()) {}

  std::int64_t value() const noexcept { return value_; }
  std::int64_t modulus() const noexcept { return modulus_; }

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  std::int64_t value_;
  std::int64_t modulus_;
};

enum class SolutionSign : int { plus = 1, minus = -1 };

inline int to_int(SolutionSign s) noexcept { return static_cast<int>(s); }
inline SolutionSign operator*(SolutionSign a, SolutionSign b) noexcept {
  return to_int(a) == to_int(b) ? SolutionSign::plus : SolutionSign::minus;
}

// Element of SL2(Z/NZ). Entries are kept reduced to [0, N).
class Mat2 {
 public:
  static Mat2 identity(const Modulus& m) noexcept { return {1, 0, 0, 1, m.value()}; }
  /// Identity over the same modulus as `m`.
  static Mat2 identity_like(const Mat2& m) noexcept { return {1 % m.n_, 0, 0, 1 % m.n_, m.n_}; }
  static Mat2 minus_identity(const Modulus& m) noexcept {
    return Mat2(m.value() - 1, 0, 0, m.value() - 1, m.value());
  }
  /// Builds [[m11, m12], [m21, m22]] after reduction; throws UsageError when
  /// the determinant is not 1 mod N.
  static Mat2 from_entries(std::int64_t m11, std::int64_t m12, std::int64_t m21,
                           std::int64_t m22, const Modulus& m);

  std::int64_t m11() const noexcept { return e_[0]; }
  std::int64_t m12() const noexcept { return e_[1]; }
  std::int64_t m21() const noexcept { return e_[2]; }
  std::int64_t m22() const noexcept { return e_[3]; }
  std::int64_t modulus() const noexcept { return n_; }

  std::int64_t determinant() const noexcept;
  bool is_identity() const noexcept {
    return e_[0] == 1 % n_ && e_[1] == 0 && e_[2] == 0 && e_[3] == 1 % n_;
  }
  bool is_minus_identity() const noexcept {
    return e_[0] == n_ - 1 && e_[1] == 0 && e_[2] == 0 && e_[3] == n_ - 1;
  }

  /// Product without the modulus check; both operands must share N.
  Mat2 times(const Mat2& b) const noexcept {
    const std::int64_t n = n_;
    return {(e_[0] * b.e_[0] % n + e_[1] * b.e_[2] % n) % n,
            (e_[0] * b.e_[1] % n + e_[1] * b.e_[3] % n) % n,
            (e_[2] * b.e_[0] % n + e_[3] * b.e_[2] % n) % n,
            (e_[2] * b.e_[1] % n + e_[3] * b.e_[3] % n) % n, n};
  }

  /// E(k) * this, for k already reduced. Cheaper than a full product.
  Mat2 left_elementary(std::int64_t k) const noexcept {
    const std::int64_t n = n_;
    return {(k * e_[0] % n + n - e_[2]) % n, (k * e_[1] % n + n - e_[3]) % n,
            e_[0], e_[1], n};
  }

  std::string to_string() const;

  friend bool operator==(const Mat2&, const Mat2&) = default;

 private:
  Mat2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
       std::int64_t n) noexcept
      : e_{a, b, c, d}, n_(n) {}

  friend Mat2 elementary(const Residue& k) noexcept;
  friend Mat2 elementary_inverse(const Residue& k) noexcept;

  std::array<std::int64_t, 4> e_;
  std::int64_t n_;
};

/// [[k, -1], [1, 0]] over the modulus of k.
Mat2 elementary(const Residue& k) noexcept;

/// [[0, 1], [-1, k]], the inverse of elementary(k).
Mat2 elementary_inverse(const Residue& k) noexcept;

/// Throws UsageError on a modulus mismatch.
Mat2 mat_mul(const Mat2& a, const Mat2& b);

/// Square-and-multiply; mat_pow(a, 0) is the identity.
Mat2 mat_pow(const Mat2& a, std::uint64_t e);

/// E(a_n) ... E(a_1) for the residues `values` (already reduced mod m).
/// Throws UsageError on an empty sequence.
Mat2 word_matrix(std::span<const std::int64_t> values, const Modulus& m);

/// plus for Id, minus for -Id, nothing otherwise. At N = 2, where the two
/// coincide, reports plus.
std::optional<SolutionSign> is_pm_identity(const Mat2& m) noexcept;

}  // namespace cwl
