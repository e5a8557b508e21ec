#pragma once

// Command-line front end: compute polynomials, run verification suites.
//
//   jackpieri compute {jack|interp|phi|psi|kernel} --r R --d D [--partition p] ...
//   jackpieri verify {SUITE|all} [--r R] [--d D]... [--max-weight N] ...
//   jackpieri list-suites
//
// Exit codes: 0 success, 1 suite failure or failed computation, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json_io.hpp"

namespace jackpieri::cli {

#ifdef JACKPIERI_VERSION
inline constexpr const char* kToolVersion = JACKPIERI_VERSION;
#else
inline constexpr const char* kToolVersion = "unknown";
#endif

enum ExitCode { kSuccess = 0, kFailure = 1, kUsage = 2 };

struct UsageError : Error {
  explicit UsageError(const std::string& what) : Error(what) {}
};

struct Options {
  std::string target;
  int rank = 2;
  std::vector<std::string> d_texts;
  int max_weight = 3;
  std::string u = "formal";
  std::uint64_t seed = 0;
  int random_points = 20;
  std::string partition;
  std::string format = "text";
  std::string out_path;
  bool timing = false;
};

namespace detail {

inline std::string suite_names() {
  std::string out;
  for (const auto& s : suite_catalog()) out += (out.empty() ? "" : ", ") + s.name;
  return out;
}

inline SuiteConfig suite_config(const Options& o) {
  SuiteConfig cfg;
  cfg.rank = o.rank;
  cfg.max_weight = o.max_weight;
  cfg.seed = o.seed;
  cfg.random_points = o.random_points;
  cfg.u = UMode::parse(o.u);
  if (!o.d_texts.empty()) {
    cfg.d_values.clear();
    for (const auto& t : o.d_texts) {
      if (t == "symbolic") {
        cfg.symbolic = true;
      } else {
        cfg.d_values.push_back(Rational::parse(t));
      }
    }
    if (cfg.symbolic && !cfg.d_values.empty()) throw UsageError("--d symbolic cannot be combined with rational values");
  }
  cfg.validate();
  return cfg;
}

template <ExactField F>
std::string render_compute(const Options& o, const InterpFamily<F>& fam) {
  const int r = fam.rank();
  const bool json = o.format == "json", latex = o.format == "latex";
  json_io::Json doc{{"tool_version", kToolVersion}, {"kind", o.target}, {"r", r}, {"d", fam.d().to_string()}};

  if (o.target == "kernel") {
    const auto kern = build_kernel(std::shared_ptr<const InterpFamily<F>>(&fam, [](const auto*) {}), o.max_weight);
    std::string text;
    json_io::Json terms = json_io::Json::array();
    for (const auto& t : kern.terms) {
      const std::string idx = "(" + t.index.to_string() + ")";
      if (latex) {
        text += "\\Psi_{" + idx + "}(z) = " + to_latex(t.psi, "z") + ", \\quad \\Phi_{" + idx + "}(w) = " +
                to_latex(t.phi, "w") + "\n";
      } else {
        text += idx + ": Psi(z) = " + to_pretty_string(t.psi, "z") + "; Phi(w) = " + to_pretty_string(t.phi, "w") + "\n";
      }
      terms.push_back({{"partition", t.index.parts()}, {"psi", json_io::polynomial(t.psi)}, {"phi", json_io::polynomial(t.phi)}});
    }
    if (!json) return text;
    doc["max_weight"] = o.max_weight;
    doc["terms"] = std::move(terms);
    return doc.dump(2) + "\n";
  }

  if (o.partition.empty()) throw UsageError("compute " + o.target + " requires --partition");
  const Partition m = Partition::parse(o.partition, r);
  const std::string idx = "(" + m.to_string() + ")";
  doc["partition"] = m.parts();

  if (o.target == "jack") {
    const auto p = fam.jacks().jack(m);
    doc["expansion"] = json_io::expansion(p->expansion);
    doc["polynomial"] = json_io::polynomial(p->poly);
    if (json) return doc.dump(2) + "\n";
    if (latex) return "P_{" + idx + "} = " + to_latex(p->expansion, "m") + "\n";
    return to_string(p->expansion, "m") + "\n";
  }
  if (o.target == "interp") {
    const auto p = fam.interp_jack(m);
    doc["jack_coefficients"] = json_io::expansion(p->jack_coeffs);
    doc["polynomial"] = json_io::polynomial(p->poly);
    if (json) return doc.dump(2) + "\n";
    if (latex) {
      std::string out;
      bool first = true;
      for (const auto& [mu, c] : p->jack_coeffs) {
        const bool neg = c.sign() < 0 && is_rational_constant(c);
        const F mag = neg ? -c : c;
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        first = false;
        if (!(mag == F(1)))
          out += (is_rational_constant(mag) ? mag.to_latex() : "\\left(" + mag.to_latex() + "\\right)") + " ";
        out += "P_{(" + mu.to_string() + ")}";
      }
      return "P^{\\mathrm{ip}}_{" + idx + "} = " + out + "\n";
    }
    return to_pretty_string(p->poly) + "\n";
  }
  // phi / psi
  const auto n = o.target == "phi" ? fam.phi(m) : fam.psi(m);
  const SymPoly<F> sym = to_monomial_basis(n->poly);
  doc["normalizer"] = n->normalizer.to_string();
  doc["expansion"] = json_io::expansion(sym);
  doc["polynomial"] = json_io::polynomial(n->poly);
  if (json) return doc.dump(2) + "\n";
  if (latex) return std::string(o.target == "phi" ? "\\Phi" : "\\Psi") + "_{" + idx + "} = " + to_latex(sym, "m") + "\n";
  return to_string(sym, "m") + "\n";
}

inline std::string compute(const Options& o) {
  if (o.d_texts.size() != 1) throw UsageError("compute needs exactly one --d (a rational p/q or 'symbolic')");
  if (o.rank < 1) throw UsageError("--r must be at least 1");
  if (o.max_weight < 0) throw UsageError("--max-weight must be nonnegative");
  if (o.d_texts[0] == "symbolic") return render_compute(o, InterpFamily<RatFunc>(o.rank, RatFunc::variable()));
  const Rational d = Rational::parse(o.d_texts[0]);
  if (d.is_zero()) throw UsageError("d must be nonzero");
  return render_compute(o, InterpFamily<Rational>(o.rank, d));
}

inline std::string verify(const Options& o, bool& all_passed) {
  if (o.target != "all" && !find_suite(o.target))
    throw UsageError("unknown suite '" + o.target + "'; valid suites: " + suite_names() + ", all");
  Session session(suite_config(o));
  std::vector<VerificationReport> reports;
  if (o.target == "all") {
    reports = run_all(session);
  } else {
    reports.push_back(run_suite(o.target, session));
  }
  all_passed = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.ok(); });

  if (o.format == "json") {
    json_io::Json results = json_io::Json::array();
    for (const auto& r : reports) results.push_back(json_io::report(r, o.timing));
    json_io::Json doc{{"tool_version", kToolVersion},
                      {"config", json_io::config(session.config())},
                      {"results", std::move(results)},
                      {"coverage", coverage(reports)},
                      {"passed", all_passed}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  for (const auto& r : reports) {
    out << (r.ok() ? "PASS " : "FAIL ") << r.suite << ": " << r.passed << "/" << r.cases << " cases";
    if (o.timing) out << " in " << static_cast<long>(r.millis + 0.5) << " ms";
    out << "\n";
    if (r.first_failure) out << "  first failure: " << r.first_failure->parameters << "\n  residual: " << r.first_failure->residual << "\n";
  }
  out << "coverage:";
  for (const auto& c : coverage(reports)) out << " " << c;
  out << "\n";
  return out.str();
}

inline std::string list_suites(const Options& o) {
  if (o.format == "json") {
    json_io::Json doc = json_io::Json::array();
    for (const auto& s : suite_catalog()) doc.push_back({{"suite", s.name}, {"covers", s.covers}, {"summary", s.summary}});
    return doc.dump(2) + "\n";
  }
  std::string out;
  for (const auto& s : suite_catalog()) {
    out += s.name + ": " + s.summary + " [";
    for (std::size_t i = 0; i < s.covers.size(); ++i) out += (i ? ", " : "") + s.covers[i];
    out += "]\n";
  }
  return out;
}

inline void add_common(CLI::App& cmd, Options& o) {
  cmd.add_option("--r", o.rank, "rank (number of variables)");
  cmd.add_option("--d", o.d_texts, "parameter d as p/q, or 'symbolic'; repeatable")->delimiter(',');
  cmd.add_option("--max-weight", o.max_weight, "grid bound on |m| (kernel truncation for compute kernel)");
  cmd.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "latex"}));
  cmd.add_option("--out", o.out_path, "write output to this file");
}

}  // namespace detail

/// Runs the command line; output goes to `out` unless --out is given.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Jack and interpolation Jack polynomials in exact arithmetic", "jackpieri"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  auto* compute = app.add_subcommand("compute", "compute a polynomial family member or the truncated kernel");
  compute->add_option("target", o.target, "jack, interp, phi, psi or kernel")
      ->required()
      ->check(CLI::IsMember({"jack", "interp", "phi", "psi", "kernel"}));
  compute->add_option("--partition", o.partition, "partition as comma-separated parts, e.g. 2,1");
  detail::add_common(*compute, o);

  auto* verify = app.add_subcommand("verify", "run a verification suite, or all of them");
  verify->add_option("suite", o.target, "suite name or 'all'")->required();
  detail::add_common(*verify, o);
  verify->add_option("--u", o.u, "formal, or value:p/q to specialize u");
  verify->add_option("--seed", o.seed, "seed for random sample points");
  verify->add_option("--random-points", o.random_points, "random points per case family");
  verify->add_flag("--timing", o.timing, "report elapsed milliseconds");

  auto* list = app.add_subcommand("list-suites", "list suite names and what they cover");
  list->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));

  std::vector<const char*> argv{"jackpieri"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  std::string text;
  int code = kSuccess;
  try {
    if (compute->parsed()) {
      text = detail::compute(o);
    } else if (verify->parsed()) {
      bool passed = true;
      text = detail::verify(o, passed);
      if (!passed) code = kFailure;
    } else {
      text = detail::list_suites(o);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const RankMismatch& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const NotAPartition& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ZeroDenominator& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "computation failed: " << e.what() << "\n";
    return kFailure;
  }

  if (o.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) {
      err << "cannot write " << o.out_path << "\n";
      return kUsage;
    }
    file << text;
  }
  return code;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace jackpieri::cli
