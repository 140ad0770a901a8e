#include "cwl/words.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "cwl/errors.hpp"

namespace cwl {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

void require_same_modulus(const Word& a, const Word& b, const char* what) {
  if (!(a.modulus() == b.modulus())) {
    throw UsageError(std::string(what) + ": modulus mismatch (" +
                     std::to_string(a.modulus().value()) + " vs " +
                     std::to_string(b.modulus().value()) + ")");
  }
}

}  // namespace

Word::Word(std::span<const std::int64_t> raw, const Modulus& m) : modulus_(m) {
  if (raw.empty()) throw UsageError("a word needs at least one component");
  values_.reserve(raw.size());
  for (const auto v : raw) values_.push_back(m.reduce(v));
}

Word Word::constant(std::int64_t k, std::size_t n, const Modulus& m) {
  if (n == 0) throw UsageError("a word needs at least one component");
  return Word(std::vector<std::int64_t>(n, m.reduce(k)), m, true);
}

Word Word::parse(std::string_view text, const Modulus& m) {
  std::vector<std::int64_t> raw;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view tok =
        trim(text.substr(pos, comma == std::string_view::npos ? text.npos
                                                              : comma - pos));
    std::string_view digits = tok;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    std::int64_t v = 0;
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (digits.empty() || ec != std::errc() ||
        ptr != digits.data() + digits.size()) {
      throw UsageError("cannot parse word component '" + std::string(tok) +
                       "' in '" + std::string(text) + "'");
    }
    raw.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Word(raw, m);
}

Word Word::reversed() const {
  std::vector<std::int64_t> r(values_.rbegin(), values_.rend());
  return Word(std::move(r), modulus_, true);
}

Word Word::rotated(std::size_t shift) const {
  std::vector<std::int64_t> r(values_.size());
  std::rotate_copy(values_.begin(),
                   values_.begin() + static_cast<std::ptrdiff_t>(shift % size()),
                   values_.end(), r.begin());
  return Word(std::move(r), modulus_, true);
}

std::string Word::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) os << ',';
    os << values_[i];
  }
  return os.str();
}

Mat2 word_matrix(const Word& w) { return word_matrix(w.values(), w.modulus()); }

Word oplus(const Word& a, const Word& b) {
  require_same_modulus(a, b, "oplus");
  if (a.size() < 2 || b.size() < 2) {
    throw UsageError("oplus: both operands need length >= 2 (got " +
                     std::to_string(a.size()) + " and " +
                     std::to_string(b.size()) + ")");
  }
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  std::vector<std::int64_t> out;
  out.reserve(n + m - 2);
  out.push_back(a[0] + b[m - 1]);
  for (std::size_t i = 1; i + 1 < n; ++i) out.push_back(a[i]);
  out.push_back(a[n - 1] + b[0]);
  for (std::size_t i = 1; i + 1 < m; ++i) out.push_back(b[i]);
  return Word(out, a.modulus());
}

std::optional<SolutionSign> is_solution(const Word& w) {
  return is_pm_identity(word_matrix(w));
}

std::vector<Word> rotations_and_reversals(const Word& w) {
  std::vector<Word> out;
  out.reserve(2 * w.size());
  for (std::size_t s = 0; s < w.size(); ++s) out.push_back(w.rotated(s));
  const Word r = w.reversed();
  for (std::size_t s = 0; s < w.size(); ++s) out.push_back(r.rotated(s));
  return out;
}

bool equivalent(const Word& u, const Word& v) {
  require_same_modulus(u, v, "equivalent");
  if (u.size() != v.size()) return false;
  const auto all = rotations_and_reversals(u);
  return std::find(all.begin(), all.end(), v) != all.end();
}

Word canonical_form(const Word& w) {
  const auto all = rotations_and_reversals(w);
  return *std::min_element(all.begin(), all.end());
}

}  // namespace cwl
