// cwl: command-line front end for the Z/NZ word library.
//
// Exit status: 0 on success, 1 when a verification or property check
// fails, 2 on usage errors (bad arguments, out-of-range values, budget).

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cwl/enumerate.hpp"
#include "cwl/errors.hpp"
#include "cwl/modring.hpp"
#include "cwl/monomial.hpp"
#include "cwl/numtheory.hpp"
#include "cwl/verify.hpp"
#include "cwl/words.hpp"

using json = nlohmann::json;

namespace {

enum class Format { text, json, csv };

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

int sign_value(const std::optional<cwl::SolutionSign>& s) {
  return s ? cwl::to_int(*s) : 0;
}

json word_json(const cwl::Word& w) {
  return json(std::vector<std::int64_t>(w.values().begin(), w.values().end()));
}

json matrix_json(const cwl::Mat2& m) {
  return json::array({json::array({m.m11(), m.m12()}), json::array({m.m21(), m.m22()})});
}

json certificate_json(const cwl::ReducibilityCertificate& c) {
  json out;
  out["variant"] = cwl::to_string(c.variant());
  if (c.left()) out["left"] = word_json(*c.left());
  if (c.right()) out["right"] = word_json(*c.right());
  if (!c.rotation_note().empty()) out["note"] = c.rotation_note();
  if (c.variant() == cwl::ReducibilityCertificate::Variant::exhausted) {
    json attempts = json::array();
    for (const auto& a : c.attempts()) {
      attempts.push_back({{"split", a.split}, {"root", a.root},
                          {"failure", cwl::to_string(a.failure)}});
    }
    out["attempts"] = std::move(attempts);
  }
  return out;
}

json report_json(const cwl::MonomialReport& r) {
  return {{"k", r.k},
          {"h", r.minimal_size},
          {"sign", cwl::to_int(r.sign)},
          {"irreducible", r.irreducible},
          {"certificate", certificate_json(r.certificate)}};
}

json census_json(const cwl::Census& c) {
  json reps = json::array();
  for (const auto& w : c.representatives) reps.push_back(word_json(w));
  return {{"N", c.modulus}, {"n", c.size}, {"total", c.total}, {"representatives", reps}};
}

json verify_json(const cwl::VerifyReport& r) {
  json results = json::array();
  for (const auto& c : r.results) {
    json item{{"name", c.name}, {"scope", c.scope}, {"passed", c.passed}, {"checks", c.checks}};
    if (!c.passed) item["counterexample"] = c.counterexample;
    results.push_back(std::move(item));
  }
  return {{"title", r.title}, {"passed", r.passed()}, {"failures", r.failures()},
          {"results", std::move(results)}};
}

std::int64_t budget_from_env() {
  const char* raw = std::getenv("CWL_BUDGET");
  if (!raw || !*raw) return cwl::kDefaultBudget;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(raw, &used);
    if (used != std::string(raw).size() || v < 1) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw cwl::UsageError(std::string("CWL_BUDGET must be a positive integer, got '") + raw + "'");
  }
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = std::stoll(text);
      return {v, v};
    }
    return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw cwl::UsageError("cannot parse range '" + text + "' (expected A or A..B)");
  }
}

void print_csv_row(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) os << ',';
    const auto& c = cells[i];
    if (c.find_first_of(",\"") != std::string::npos) {
      os << '"';
      for (char ch : c) os << (ch == '"' ? "\"\"" : std::string(1, ch));
      os << '"';
    } else {
      os << c;
    }
  }
  os << '\n';
}

// Parsed values shared by the subcommands.
struct Args {
  Format format = Format::text;
  unsigned threads = 1;
  std::int64_t modulus = 0;
  std::optional<std::int64_t> k;
  std::int64_t value = 0;
  std::string word;
  std::string word2;
  bool all = false;
  std::size_t size = 0;
  bool dedup = false;
  bool count_only = false;
  std::string preset;
  std::string range;
  std::int64_t top = 0;
  std::int64_t j = 0;
  std::int64_t base = 0;
  std::string kind;
  int exponent = 0;
  int m = 0;
  std::int64_t a = 1;
};

void emit(const json& j) { std::cout << j.dump() << '\n'; }

int cmd_check(const Args& args) {
  const cwl::Modulus mod(args.modulus);
  const auto w = cwl::Word::parse(args.word, mod);
  const auto m = cwl::word_matrix(w);
  const auto sign = cwl::is_pm_identity(m);
  switch (args.format) {
    case Format::json:
      emit({{"N", mod.value()}, {"word", word_json(w)}, {"matrix", matrix_json(m)},
            {"solution", sign.has_value()}, {"sign", sign_value(sign)}});
      break;
    case Format::csv:
      print_csv_row(std::cout, {"N", "word", "m11", "m12", "m21", "m22", "sign"});
      print_csv_row(std::cout, {std::to_string(mod.value()), w.to_string(), std::to_string(m.m11()),
                                std::to_string(m.m12()), std::to_string(m.m21()),
                                std::to_string(m.m22()), std::to_string(sign_value(sign))});
      break;
    case Format::text:
      std::cout << "M = " << m.to_string() << '\n';
      if (sign) {
        std::cout << "solution with sign " << (*sign == cwl::SolutionSign::plus ? "+1" : "-1") << '\n';
      } else {
        std::cout << "not a solution\n";
      }
      break;
  }
  return kExitOk;
}

int cmd_monomial(const Args& args) {
  const cwl::Modulus mod(args.modulus);
  std::vector<cwl::MonomialReport> reports;
  const bool table = args.all || !args.k;
  if (table) {
    reports = cwl::classify_monomials(mod, args.threads);
  } else {
    if (*args.k < 0 || *args.k >= mod.value()) {
      throw cwl::UsageError("k must satisfy 0 <= k < N, got k=" + std::to_string(*args.k));
    }
    reports.push_back(cwl::monomial_report(mod, cwl::Residue(*args.k, mod)));
  }
  const auto irreducible = std::count_if(reports.begin(), reports.end(),
                                         [](const auto& r) { return r.irreducible; });
  switch (args.format) {
    case Format::json: {
      json list = json::array();
      for (const auto& r : reports) list.push_back(report_json(r));
      json out{{"N", mod.value()}, {"reports", std::move(list)}};
      if (table) out["irreducible_count"] = irreducible;
      emit(out);
      break;
    }
    case Format::csv:
      print_csv_row(std::cout, {"k", "h", "sign", "irreducible", "certificate"});
      for (const auto& r : reports) {
        print_csv_row(std::cout, {std::to_string(r.k), std::to_string(r.minimal_size),
                                  std::to_string(cwl::to_int(r.sign)),
                                  r.irreducible ? "true" : "false", r.certificate.summary()});
      }
      break;
    case Format::text:
      for (const auto& r : reports) {
        std::cout << "N=" << r.modulus << " k=" << r.k << " h=" << r.minimal_size
                  << " sign=" << cwl::to_int(r.sign) << ' '
                  << (r.irreducible ? "irreducible" : "reducible") << " certificate: "
                  << r.certificate.summary() << '\n';
      }
      if (table) std::cout << "irreducible count: " << irreducible << '\n';
      break;
  }
  return kExitOk;
}

int cmd_verify(const Args& args) {
  cwl::VerifyOptions opts;
  opts.threads = args.threads;
  cwl::VerifyReport report;
  if (!args.range.empty()) {
    if (!args.preset.empty()) throw cwl::UsageError("give either --preset or --N, not both");
    const auto [lo, hi] = parse_range(args.range);
    report = cwl::verify_range(lo, hi, opts);
  } else {
    report = cwl::verify_preset(cwl::parse_preset(args.preset.empty() ? "small" : args.preset), opts);
  }
  if (args.format == Format::json) {
    emit(verify_json(report));
  } else if (args.format == Format::csv) {
    print_csv_row(std::cout, {"name", "scope", "passed", "checks", "counterexample"});
    for (const auto& r : report.results) {
      print_csv_row(std::cout, {r.name, r.scope, r.passed ? "true" : "false",
                                std::to_string(r.checks), r.counterexample});
    }
  } else {
    std::cout << report.to_text();
  }
  return report.passed() ? kExitOk : kExitFailure;
}

int cmd_sum(const Args& args) {
  const cwl::Modulus mod(args.modulus);
  const auto a = cwl::Word::parse(args.word, mod);
  const auto b = cwl::Word::parse(args.word2, mod);
  const auto s = cwl::oplus(a, b);
  if (args.format == Format::json) {
    emit({{"N", mod.value()}, {"left", word_json(a)}, {"right", word_json(b)}, {"sum", word_json(s)}});
  } else {
    if (args.format == Format::csv) print_csv_row(std::cout, {"sum"});
    std::cout << (args.format == Format::csv ? "\"" + s.to_string() + "\"" : s.to_string()) << '\n';
  }
  return kExitOk;
}

int cmd_canon(const Args& args) {
  const cwl::Modulus mod(args.modulus);
  const auto w = cwl::Word::parse(args.word, mod);
  const auto c = cwl::canonical_form(w);
  if (args.format == Format::json) {
    emit({{"N", mod.value()}, {"word", word_json(w)}, {"canonical", word_json(c)}});
  } else {
    if (args.format == Format::csv) print_csv_row(std::cout, {"canonical"});
    std::cout << (args.format == Format::csv ? "\"" + c.to_string() + "\"" : c.to_string()) << '\n';
  }
  return kExitOk;
}

int cmd_enumerate(const Args& args) {
  cwl::EnumerationQuery q{cwl::Modulus(args.modulus), args.size, args.dedup, args.count_only,
                          budget_from_env(), args.threads};
  const auto census = cwl::enumerate_solutions(q);
  switch (args.format) {
    case Format::json:
      emit(census_json(census));
      break;
    case Format::csv: {
      std::vector<std::string> header;
      for (std::size_t i = 1; i <= census.size; ++i) header.push_back("a" + std::to_string(i));
      print_csv_row(std::cout, header);
      for (const auto& w : census.representatives) {
        std::vector<std::string> row;
        for (auto v : w.values()) row.push_back(std::to_string(v));
        print_csv_row(std::cout, row);
      }
      break;
    }
    case Format::text:
      std::cout << "N=" << census.modulus << " n=" << census.size << " total=" << census.total;
      if (q.dedup) std::cout << " classes=" << census.representatives.size();
      std::cout << '\n';
      for (const auto& w : census.representatives) std::cout << w.to_string() << '\n';
      break;
  }
  return kExitOk;
}

int cmd_roots(const Args& args) {
  const cwl::Modulus mod(args.modulus);
  const auto r = cwl::quadratic_roots(mod, cwl::Residue(*args.k, mod));
  if (args.format == Format::json) {
    emit({{"N", mod.value()}, {"k", r.k}, {"roots", r.roots}});
  } else if (args.format == Format::csv) {
    print_csv_row(std::cout, {"root"});
    for (auto x : r.roots) std::cout << x << '\n';
  } else {
    for (std::size_t i = 0; i < r.roots.size(); ++i) std::cout << (i ? "," : "") << r.roots[i];
    std::cout << '\n';
  }
  return kExitOk;
}

int cmd_phi(const Args& args) {
  const auto phi = cwl::euler_phi(args.value);
  if (args.format == Format::json) {
    emit({{"value", args.value}, {"phi", phi}});
  } else {
    if (args.format == Format::csv) print_csv_row(std::cout, {"value", "phi"});
    std::cout << (args.format == Format::csv ? std::to_string(args.value) + "," : "") << phi << '\n';
  }
  return kExitOk;
}

int cmd_factor(const Args& args) {
  const auto f = cwl::factorize(args.value);
  if (args.format == Format::json) {
    json factors = json::array();
    for (const auto& pp : f.factors) factors.push_back(json::array({pp.prime, pp.exponent}));
    emit({{"value", f.value}, {"factors", factors}});
  } else if (args.format == Format::csv) {
    print_csv_row(std::cout, {"prime", "exponent"});
    for (const auto& pp : f.factors) std::cout << pp.prime << ',' << pp.exponent << '\n';
  } else {
    std::cout << f.value << " = " << f.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_binom_val(const Args& args) {
  const auto e = cwl::binomial_valuation(args.top, args.j, args.base);
  if (args.format == Format::json) {
    emit({{"top", args.top}, {"j", args.j}, {"base", args.base}, {"valuation", e}});
  } else {
    if (args.format == Format::csv) {
      print_csv_row(std::cout, {"top", "j", "base", "valuation"});
      std::cout << args.top << ',' << args.j << ',' << args.base << ',';
    }
    std::cout << e << '\n';
  }
  return kExitOk;
}

int cmd_size(const Args& args) {
  const cwl::Modulus mod(args.modulus);
  const cwl::Residue k(*args.k, mod);
  const auto h = cwl::minimal_monomial_size(mod, k);
  const auto closed = cwl::closed_form_size(mod, *args.k);
  if (args.format == Format::json) {
    emit({{"N", mod.value()}, {"k", k.value()}, {"h", h.size}, {"sign", cwl::to_int(h.sign)},
          {"closed_form", closed ? json(*closed) : json(nullptr)}});
  } else if (args.format == Format::csv) {
    print_csv_row(std::cout, {"N", "k", "h", "sign", "closed_form"});
    print_csv_row(std::cout, {std::to_string(mod.value()), std::to_string(k.value()),
                              std::to_string(h.size), std::to_string(cwl::to_int(h.sign)),
                              closed ? std::to_string(*closed) : ""});
  } else {
    std::cout << "N=" << mod.value() << " k=" << k.value() << " h=" << h.size
              << " sign=" << cwl::to_int(h.sign) << " closed_form="
              << (closed ? std::to_string(*closed) : "n/a") << '\n';
  }
  return kExitOk;
}

int cmd_family(const Args& args) {
  const auto kind = cwl::parse_family_kind(args.kind);
  const cwl::FamilyParams p{args.base, args.exponent, args.m, args.a};
  const auto w = cwl::family_word(kind, p);
  const auto sign = cwl::is_solution(w);
  if (args.format == Format::json) {
    emit({{"kind", cwl::to_string(kind)}, {"N", w.modulus().value()}, {"word", word_json(w)},
          {"sign", sign_value(sign)}});
  } else {
    if (args.format == Format::csv) print_csv_row(std::cout, {"N", "word", "sign"});
    if (args.format == Format::csv) {
      print_csv_row(std::cout, {std::to_string(w.modulus().value()), w.to_string(),
                                std::to_string(sign_value(sign))});
    } else {
      std::cout << "N=" << w.modulus().value() << " length=" << w.size() << " word=" << w.to_string()
                << " sign=" << sign_value(sign) << '\n';
    }
  }
  return kExitOk;
}

int cmd_matrix_identity(const Args& args) {
  const auto m = cwl::power_matrix_identity(args.exponent, args.a);
  if (args.format == Format::json) {
    emit({{"n", args.exponent}, {"a", args.a}, {"N", m.modulus()}, {"matrix", matrix_json(m)}});
  } else {
    if (args.format == Format::csv) {
      print_csv_row(std::cout, {"N", "m11", "m12", "m21", "m22"});
      std::cout << m.modulus() << ',' << m.m11() << ',' << m.m12() << ',' << m.m21() << ','
                << m.m22() << '\n';
    } else {
      std::cout << "N=" << m.modulus() << " M = " << m.to_string() << '\n';
    }
  }
  return kExitOk;
}

int cmd_oracle(const Args& args) {
  const cwl::Modulus mod(args.modulus);
  const auto w = cwl::Word::parse(args.word, mod);
  const auto v = cwl::is_reducible_oracle(w);
  if (args.format == Format::json) {
    json out{{"N", mod.value()}, {"word", word_json(w)}, {"reducible", v.reducible}};
    if (v.witness) {
      out["witness"] = {{"left", word_json(v.witness->left)},
                        {"right", word_json(v.witness->right)},
                        {"arrangement", word_json(v.witness->arrangement)}};
    }
    emit(out);
  } else if (args.format == Format::csv) {
    print_csv_row(std::cout, {"reducible", "left", "right", "arrangement"});
    print_csv_row(std::cout, {v.reducible ? "true" : "false",
                              v.witness ? v.witness->left.to_string() : "",
                              v.witness ? v.witness->right.to_string() : "",
                              v.witness ? v.witness->arrangement.to_string() : ""});
  } else if (v.witness) {
    std::cout << "reducible: (" << v.witness->arrangement.to_string() << ") = ("
              << v.witness->left.to_string() << ") + (" << v.witness->right.to_string() << ")\n";
  } else {
    std::cout << "irreducible\n";
  }
  return kExitOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Solutions of M_n(a_1,...,a_n) = +-Id over Z/NZ"};
  app.require_subcommand(1);
  app.fallthrough();

  Args args;
  const std::map<std::string, Format> formats{
      {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
  app.add_option("--format", args.format, "Output format: text, json or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--threads", args.threads, "Worker threads for monomial, enumerate and verify")
      ->check(CLI::Range(1U, 256U));

  std::function<int(const Args&)> action;
  auto bind = [&](CLI::App* sub, int (*fn)(const Args&)) {
    sub->callback([&action, fn] { action = fn; });
  };

  auto* check = app.add_subcommand("check", "Print M(w) and whether w is a solution");
  check->add_option("N", args.modulus)->required();
  check->add_option("word", args.word, "Comma-separated integers")->required();
  bind(check, cmd_check);

  auto* monomial = app.add_subcommand("monomial", "Minimal monomial solutions and irreducibility");
  monomial->add_option("N", args.modulus)->required();
  monomial->add_option("k", args.k);
  monomial->add_flag("--all", args.all, "Report every k in [0, N)");
  bind(monomial, cmd_monomial);

  auto* verify = app.add_subcommand("verify", "Run the property suites");
  auto* preset = verify->add_option("--preset", args.preset, "small, prime-powers or sizes");
  verify->add_option("--N", args.range, "Modulus or range A..B")->excludes(preset);
  bind(verify, cmd_verify);

  auto* sum = app.add_subcommand("sum", "Sum of two words");
  sum->add_option("N", args.modulus)->required();
  sum->add_option("w1", args.word)->required();
  sum->add_option("w2", args.word2)->required();
  bind(sum, cmd_sum);

  auto* canon = app.add_subcommand("canon", "Canonical form under rotation and reversal");
  canon->add_option("N", args.modulus)->required();
  canon->add_option("word", args.word)->required();
  bind(canon, cmd_canon);

  auto* enumerate = app.add_subcommand("enumerate", "Exhaustive census of solutions of size n");
  enumerate->add_option("N", args.modulus)->required();
  enumerate->add_option("n", args.size)->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--dedup", args.dedup, "Keep one canonical word per class");
  enumerate->add_flag("--count-only", args.count_only, "Only report the count");
  bind(enumerate, cmd_enumerate);

  auto* roots = app.add_subcommand("roots", "Roots of X(X - k)");
  roots->add_option("N", args.modulus)->required();
  roots->add_option("k", args.k)->required();
  bind(roots, cmd_roots);

  auto* phi = app.add_subcommand("phi", "Euler phi");
  phi->add_option("v", args.value)->required();
  bind(phi, cmd_phi);

  auto* factor = app.add_subcommand("factor", "Prime factorization");
  factor->add_option("v", args.value)->required();
  bind(factor, cmd_factor);

  auto* binom = app.add_subcommand("binom-val", "Largest e with base^e | C(top, j)");
  binom->add_option("top", args.top)->required();
  binom->add_option("j", args.j)->required();
  binom->add_option("base", args.base)->required();
  bind(binom, cmd_binom_val);

  auto* size = app.add_subcommand("size", "Minimal monomial size, iterative and closed form");
  size->add_option("N", args.modulus)->required();
  size->add_option("k", args.k)->required();
  bind(size, cmd_size);

  auto* family = app.add_subcommand("family", "Explicit solution families");
  family->add_option("kind", args.kind, "power_monomial, odd_boundary or two_boundary")->required();
  family->add_option("l", args.base)->required();
  family->add_option("n", args.exponent)->required();
  family->add_option("m", args.m)->required();
  family->add_option("a", args.a)->required();
  bind(family, cmd_family);

  auto* identity = app.add_subcommand("matrix-identity", "M_{2^n}(2a,...,2a) over 2^(n+1)");
  identity->add_option("n", args.exponent)->required();
  identity->add_option("a", args.a)->required();
  bind(identity, cmd_matrix_identity);

  auto* oracle = app.add_subcommand("oracle", "Brute-force reducibility of a solution");
  oracle->add_option("N", args.modulus)->required();
  oracle->add_option("word", args.word)->required();
  bind(oracle, cmd_oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action(args);
  } catch (const cwl::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cwl::VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kExitFailure;
  } catch (const cwl::InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
