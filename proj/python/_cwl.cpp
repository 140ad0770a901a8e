#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "cwl/enumerate.hpp"
#include "cwl/errors.hpp"
#include "cwl/modring.hpp"
#include "cwl/monomial.hpp"
#include "cwl/numtheory.hpp"
#include "cwl/verify.hpp"
#include "cwl/words.hpp"

namespace py = pybind11;

namespace {

using Ints = std::vector<std::int64_t>;
using Matrix = std::vector<Ints>;

Ints ints(const cwl::Word& w) { return {w.values().begin(), w.values().end()}; }

Matrix rows(const cwl::Mat2& m) { return {{m.m11(), m.m12()}, {m.m21(), m.m22()}}; }

std::optional<int> sign_of(const std::optional<cwl::SolutionSign>& s) {
  if (!s) return std::nullopt;
  return cwl::to_int(*s);
}

py::dict certificate_dict(const cwl::ReducibilityCertificate& c) {
  py::dict d;
  d["variant"] = cwl::to_string(c.variant());
  d["summary"] = c.summary();
  d["target"] = ints(c.target());
  if (c.left()) d["left"] = ints(*c.left());
  if (c.right()) d["right"] = ints(*c.right());
  if (!c.rotation_note().empty()) d["note"] = c.rotation_note();
  py::list attempts;
  for (const auto& a : c.attempts()) {
    attempts.append(py::make_tuple(a.split, a.root, cwl::to_string(a.failure)));
  }
  d["attempts"] = attempts;
  return d;
}

py::dict report_dict(const cwl::MonomialReport& r) {
  py::dict d;
  d["N"] = r.modulus;
  d["k"] = r.k;
  d["h"] = r.minimal_size;
  d["sign"] = cwl::to_int(r.sign);
  d["irreducible"] = r.irreducible;
  d["certificate"] = certificate_dict(r.certificate);
  return d;
}

}  // namespace

PYBIND11_MODULE(_cwl, m) {
  m.doc() = "Words over Z/NZ whose matrix product is +-Id";

  py::register_exception<cwl::UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<cwl::VerificationFailure>(m, "VerificationFailure", PyExc_RuntimeError);
  py::register_exception<cwl::InternalError>(m, "InternalError", PyExc_RuntimeError);

  m.def("word_matrix", [](std::int64_t n, const Ints& w) {
    return rows(cwl::word_matrix(cwl::Word(w, cwl::Modulus(n))));
  }, py::arg("N"), py::arg("word"));

  m.def("is_solution", [](std::int64_t n, const Ints& w) {
    return sign_of(cwl::is_solution(cwl::Word(w, cwl::Modulus(n))));
  }, py::arg("N"), py::arg("word"), "Sign +1/-1 of a solution, None otherwise.");

  m.def("oplus", [](std::int64_t n, const Ints& a, const Ints& b) {
    const cwl::Modulus mod(n);
    return ints(cwl::oplus(cwl::Word(a, mod), cwl::Word(b, mod)));
  }, py::arg("N"), py::arg("a"), py::arg("b"));

  m.def("equivalent", [](std::int64_t n, const Ints& u, const Ints& v) {
    const cwl::Modulus mod(n);
    return cwl::equivalent(cwl::Word(u, mod), cwl::Word(v, mod));
  }, py::arg("N"), py::arg("u"), py::arg("v"));

  m.def("canonical_form", [](std::int64_t n, const Ints& w) {
    return ints(cwl::canonical_form(cwl::Word(w, cwl::Modulus(n))));
  }, py::arg("N"), py::arg("word"));

  m.def("minimal_monomial_size", [](std::int64_t n, std::int64_t k) {
    const cwl::Modulus mod(n);
    const auto h = cwl::minimal_monomial_size(mod, cwl::Residue(k, mod));
    return py::make_tuple(h.size, cwl::to_int(h.sign));
  }, py::arg("N"), py::arg("k"), "Return (h, sign).");

  m.def("closed_form_size", [](std::int64_t n, std::int64_t k) {
    return cwl::closed_form_size(cwl::Modulus(n), k);
  }, py::arg("N"), py::arg("k"));

  m.def("quadratic_roots", [](std::int64_t n, std::int64_t k) {
    const cwl::Modulus mod(n);
    return cwl::quadratic_roots(mod, cwl::Residue(k, mod)).roots;
  }, py::arg("N"), py::arg("k"));

  m.def("family_word", [](const std::string& kind, std::int64_t l, int n, int mm, std::int64_t a) {
    const auto w = cwl::family_word(cwl::parse_family_kind(kind), {l, n, mm, a});
    return py::make_tuple(w.modulus().value(), ints(w));
  }, py::arg("kind"), py::arg("l"), py::arg("n"), py::arg("m"), py::arg("a") = 1,
        "Return (N, word).");

  m.def("power_matrix_identity", [](int n, std::int64_t a) {
    return rows(cwl::power_matrix_identity(n, a));
  }, py::arg("n"), py::arg("a"));

  m.def("is_reducible_monomial", [](std::int64_t n, std::int64_t k) {
    const cwl::Modulus mod(n);
    const auto v = cwl::is_reducible_monomial(mod, cwl::Residue(k, mod));
    return py::make_tuple(v.reducible, certificate_dict(v.certificate));
  }, py::arg("N"), py::arg("k"), "Return (reducible, certificate).");

  m.def("monomial_report", [](std::int64_t n, std::int64_t k) {
    const cwl::Modulus mod(n);
    return report_dict(cwl::monomial_report(mod, cwl::Residue(k, mod)));
  }, py::arg("N"), py::arg("k"));

  m.def("classify_monomials", [](std::int64_t n, unsigned threads) {
    std::vector<cwl::MonomialReport> reports;
    {
      py::gil_scoped_release release;
      reports = cwl::classify_monomials(cwl::Modulus(n), threads);
    }
    py::list out;
    for (const auto& r : reports) out.append(report_dict(r));
    return out;
  }, py::arg("N"), py::arg("threads") = 1);

  m.def("enumerate_solutions", [](std::int64_t n, std::size_t size, bool dedup, bool count_only,
                                  std::int64_t budget, unsigned threads) {
    cwl::Census c{0, 0, 0, {}};
    {
      py::gil_scoped_release release;
      c = cwl::enumerate_solutions({cwl::Modulus(n), size, dedup, count_only, budget, threads});
    }
    py::dict d;
    d["N"] = c.modulus;
    d["n"] = c.size;
    d["total"] = c.total;
    py::list reps;
    for (const auto& w : c.representatives) reps.append(ints(w));
    d["representatives"] = reps;
    return d;
  }, py::arg("N"), py::arg("n"), py::arg("dedup") = false, py::arg("count_only") = false,
        py::arg("budget") = cwl::kDefaultBudget, py::arg("threads") = 1);

  m.def("is_reducible_oracle", [](std::int64_t n, const Ints& w) {
    const auto v = cwl::is_reducible_oracle(cwl::Word(w, cwl::Modulus(n)));
    py::object witness = py::none();
    if (v.witness) {
      witness = py::make_tuple(ints(v.witness->left), ints(v.witness->right),
                               ints(v.witness->arrangement));
    }
    return py::make_tuple(v.reducible, witness);
  }, py::arg("N"), py::arg("word"), "Return (reducible, (left, right, arrangement) or None).");

  m.def("factorize", [](std::int64_t v) {
    std::vector<std::pair<std::int64_t, int>> out;
    for (const auto& pp : cwl::factorize(v).factors) out.emplace_back(pp.prime, pp.exponent);
    return out;
  }, py::arg("v"));
  m.def("euler_phi", &cwl::euler_phi, py::arg("v"));
  m.def("binomial_valuation", &cwl::binomial_valuation, py::arg("top"), py::arg("j"),
        py::arg("base"));

  m.def("verify", [](const std::string& preset, std::optional<std::pair<std::int64_t, std::int64_t>> range,
                     unsigned threads) {
    cwl::VerifyOptions opts;
    opts.threads = threads;
    cwl::VerifyReport r;
    {
      py::gil_scoped_release release;
      r = range ? cwl::verify_range(range->first, range->second, opts)
                : cwl::verify_preset(cwl::parse_preset(preset), opts);
    }
    return py::make_tuple(r.passed(), r.to_text());
  }, py::arg("preset") = "small", py::arg("range") = py::none(), py::arg("threads") = 1,
        "Run the property suites; return (passed, report text).");
}
