#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cwl/modring.hpp"

namespace cwl {

// A tuple (a_1, ..., a_n), n >= 1, of residues sharing one modulus. Values
// are stored as least nonnegative representatives.
class Word {
 public:
  /// Reduces every entry mod m. Throws UsageError when `raw` is empty.
  Word(std::span<const std::int64_t> raw, const Modulus& m);
  Word(std::initializer_list<std::int64_t> raw, const Modulus& m)
      : Word(std::span<const std::int64_t>(raw.begin(), raw.size()), m) {}

  /// The word (k, k, ..., k) of length n.
  static Word constant(std::int64_t k, std::size_t n, const Modulus& m);

  /// Comma-separated integers, optionally negative: "-2,0,-1,1".
  static Word parse(std::string_view text, const Modulus& m);

  std::size_t size() const noexcept { return values_.size(); }
  std::int64_t operator[](std::size_t i) const noexcept { return values_[i]; }
  Residue at(std::size_t i) const { return Residue(values_.at(i), modulus_); }
  std::span<const std::int64_t> values() const noexcept { return values_; }
  const Modulus& modulus() const noexcept { return modulus_; }

  Word reversed() const;
  /// Rotation moving component `shift` to the front.
  Word rotated(std::size_t shift) const;

  /// "a_1,a_2,...,a_n" with least nonnegative representatives.
  std::string to_string() const;

  friend bool operator==(const Word& a, const Word& b) noexcept {
    return a.modulus_ == b.modulus_ && a.values_ == b.values_;
  }
  // Lexicographic on the component values, then by length.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
    if (auto c = a.modulus_.value() <=> b.modulus_.value(); c != 0) return c;
    return a.values_ <=> b.values_;
  }

 private:
  Word(std::vector<std::int64_t> reduced, const Modulus& m, bool /*tag*/)
      : values_(std::move(reduced)), modulus_(m) {}

  std::vector<std::int64_t> values_;
  Modulus modulus_;
};

struct SolutionRecord {
  Word word;
  SolutionSign sign;
};

Mat2 word_matrix(const Word& w);

/// (a_1+b_m, a_2, ..., a_{n-1}, a_n+b_1, b_2, ..., b_{m-1}), length n+m-2.
/// Both operands need length >= 2 and a shared modulus.
Word oplus(const Word& a, const Word& b);

std::optional<SolutionSign> is_solution(const Word& w);

/// Every cyclic rotation of w, then every cyclic rotation of reversed w
/// (2n words, duplicates kept).
std::vector<Word> rotations_and_reversals(const Word& w);

bool equivalent(const Word& u, const Word& v);

/// Lexicographically smallest element of rotations_and_reversals(w).
Word canonical_form(const Word& w);

}  // namespace cwl
