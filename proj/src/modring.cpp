#include "cwl/modring.hpp"

#include <sstream>

#include "cwl/errors.hpp"

namespace cwl {

Modulus::Modulus(std::int64_t n) : n_(n) {
  if (n < 2 || n > kMaxModulus) {
    throw UsageError("modulus " + std::to_string(n) + " outside [2, 2^31-1]");
  }
  factors_ = std::make_shared<const Factorization>(factorize(n));
}

Mat2 Mat2::from_entries(std::int64_t m11, std::int64_t m12, std::int64_t m21,
                        std::int64_t m22, const Modulus& m) {
  Mat2 out(m.reduce(m11), m.reduce(m12), m.reduce(m21), m.reduce(m22),
           m.value());
  if (out.determinant() != 1 % m.value()) {
    throw UsageError("matrix " + out.to_string() +
                     " does not have determinant 1");
  }
  return out;
}

std::int64_t Mat2::determinant() const noexcept {
  const std::int64_t n = n_;
  return ((e_[0] * e_[3]) % n - (e_[1] * e_[2]) % n + n) % n;
}

std::string Mat2::to_string() const {
  std::ostringstream os;
  os << "[[" << e_[0] << ',' << e_[1] << "],[" << e_[2] << ',' << e_[3]
     << "]]";
  return os.str();
}

Mat2 elementary(const Residue& k) noexcept {
  const std::int64_t n = k.modulus();
  return Mat2(k.value(), n - 1, 1 % n, 0, n);
}

Mat2 elementary_inverse(const Residue& k) noexcept {
  const std::int64_t n = k.modulus();
  return Mat2(0, 1 % n, n - 1, k.value(), n);
}

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
  if (a.modulus() != b.modulus()) {
    throw UsageError("mat_mul: modulus mismatch (" +
                     std::to_string(a.modulus()) + " vs " +
                     std::to_string(b.modulus()) + ")");
  }
  return a.times(b);
}

Mat2 mat_pow(const Mat2& a, std::uint64_t e) {
  Mat2 result = Mat2::identity_like(a);
  Mat2 base = a;
  while (e > 0) {
    if (e & 1U) result = result.times(base);
    base = base.times(base);
    e >>= 1U;
  }
  return result;
}

Mat2 word_matrix(std::span<const std::int64_t> values, const Modulus& m) {
  if (values.empty()) {
    throw UsageError("word_matrix: empty word");
  }
  Mat2 acc = Mat2::identity(m);
  for (const std::int64_t v : values) acc = acc.left_elementary(m.reduce(v));
  return acc;
}

std::optional<SolutionSign> is_pm_identity(const Mat2& m) noexcept {
  if (m.is_identity()) return SolutionSign::plus;
  if (m.is_minus_identity()) return SolutionSign::minus;
  return std::nullopt;
}

}  // namespace cwl
