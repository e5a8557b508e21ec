// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// All comparisons are exact; the only pinned numbers are the grids and the
// wall-clock limits below.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using namespace jackpieri;

namespace {

constexpr double kSchurLimitSeconds = 10;
constexpr double kEigenLimitSeconds = 60;
constexpr double kClassicalPieriLimitSeconds = 60;
constexpr double kTwistedPieriLimitSeconds = 180;
constexpr double kMysteriousSumLimitSeconds = 120;
constexpr double kInterpConstructionLimitSeconds = 120;
constexpr double kBinomialLimitSeconds = 120;
constexpr double kDifferencePieriLimitSeconds = 180;
constexpr double kKernelLimitSeconds = 120;
constexpr double kSymbolicLimitSeconds = 300;
constexpr double kDeterminismLimitSeconds = 300;

const std::vector<Rational> kAllD{Rational(1), Rational(2), Rational(3), Rational(1, 2)};
const std::vector<Rational> kIntegerD{Rational(1), Rational(2), Rational(3)};

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
  void require(const VerificationReport& r, const std::string& where) {
    std::string what = where + " " + r.suite + " " + std::to_string(r.passed) + "/" + std::to_string(r.cases);
    if (r.first_failure) what += " first failure " + r.first_failure->parameters + ": " + r.first_failure->residual;
    require(r.ok() && r.cases > 0, what);
    cases += r.cases;
  }
  long cases = 0;
};

SuiteConfig config(int r, int max_weight, std::vector<Rational> d, int random_points = 20, std::uint64_t seed = 2024) {
  SuiteConfig cfg;
  cfg.rank = r;
  cfg.max_weight = max_weight;
  cfg.d_values = std::move(d);
  cfg.random_points = random_points;
  cfg.seed = seed;
  return cfg;
}

void run_suites(Outcome& out, const SuiteConfig& cfg, std::initializer_list<const char*> suites) {
  Session session(cfg);
  for (const char* name : suites) out.require(run_suite(name, session), "r=" + std::to_string(cfg.rank));
}

/// Partition grid used by several criteria: |m| <= 5 for r <= 2, |m| <= 4 for r = 3.
int eigen_grid(int r) { return r <= 2 ? 5 : 4; }

int failures = 0;

void criterion(int number, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds > limit_seconds) out.require(false, "over the time limit");
  if (!out.ok) ++failures;
  std::ostringstream line;
  line << (out.ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " (" << out.cases << " cases, "
       << std::fixed << std::setprecision(1) << seconds << " s, limit " << limit_seconds << " s)";
  if (!out.ok) line << " :: " << out.detail;
  std::cout << line.str() << std::endl;
}

}  // namespace

int main() {
  criterion(1, "Schur oracle at d=2, r in {2,3}, |m| <= 4", kSchurLimitSeconds, [] {
    Outcome out;
    for (int r : {2, 3}) run_suites(out, config(r, 4, {Rational(2)}), {"schur-oracle"});
    return out;
  });

  criterion(2, "Sekiguchi and D eigen relations, r in {1,2,3}, d in {1,2,3,1/2}, formal u", kEigenLimitSeconds, [] {
    Outcome out;
    for (int r : {1, 2, 3}) run_suites(out, config(r, eigen_grid(r), kAllD), {"sekiguchi-eigen", "d-eigen"});
    return out;
  });

  criterion(3, "classical Pieri rules for Phi, Psi and e_l, same grid", kClassicalPieriLimitSeconds, [] {
    Outcome out;
    for (int r : {1, 2, 3}) run_suites(out, config(r, eigen_grid(r), kAllD), {"classical-pieri"});
    return out;
  });

  criterion(4, "twisted Pieri (Phi, Psi, l = 0..r) and coefficient forms, |x| <= 4, d in {1,2,3}",
            kTwistedPieriLimitSeconds, [] {
              Outcome out;
              for (int r : {1, 2, 3}) run_suites(out, config(r, 4, kIntegerD), {"twisted-pieri"});
              return out;
            });

  criterion(5, "mysterious summation, all I, grid partitions and 50 random vectors per r", kMysteriousSumLimitSeconds, [] {
    Outcome out;
    for (int r : {1, 2, 3}) run_suites(out, config(r, eigen_grid(r), kAllD, 50), {"mysterious-sum"});
    return out;
  });

  criterion(6, "falling factorials at r=1 (m <= 5) and vanishing not imposed by the solver",
            kInterpConstructionLimitSeconds, [] {
              Outcome out;
              for (const auto& d : kAllD) {
                InterpFamily<Rational> fam(1, d);
                MultiPoly<Rational> expected = MultiPoly<Rational>::constant(1, Rational(1));
                for (int m = 0; m <= 5; ++m) {
                  if (m > 0)
                    expected = expected * (MultiPoly<Rational>::variable(1, 0) -
                                           MultiPoly<Rational>::constant(1, Rational(m - 1)));
                  out.require(fam.interp_jack(Partition{m})->poly == expected,
                              "falling factorial m=" + std::to_string(m) + " d=" + d.to_string());
                  ++out.cases;
                }
              }
              run_suites(out, config(1, 5, kAllD), {"interp-vanishing"});
              run_suites(out, config(2, 4, kAllD), {"interp-vanishing"});
              run_suites(out, config(3, 3, kAllD), {"interp-vanishing"});
              return out;
            });

  criterion(7, "binomial formula, |x| <= 4, r <= 2, d in {1,2,3}; integer binomial theorem at r=1",
            kBinomialLimitSeconds, [] {
              Outcome out;
              for (int r : {1, 2}) run_suites(out, config(r, 4, kIntegerD), {"binomial"});
              return out;
            });

  criterion(8, "difference equation and interpolation Pieri with their coefficient forms, 20 random points per (k, d)",
            kDifferencePieriLimitSeconds, [] {
              Outcome out;
              for (int r : {1, 2, 3})
                run_suites(out, config(r, r <= 2 ? 4 : 3, kAllD, 20), {"difference-equation", "interp-pieri"});
              return out;
            });

  criterion(9, "kernel: r=1 N=5 is e^{zw}; symmetry and intertwining at r=2, N=4, l in {0,1,2}, d in {1,2}",
            kKernelLimitSeconds, [] {
              Outcome out;
              for (const auto& d : kAllD) {
                const auto series = build_kernel(std::make_shared<const InterpFamily<Rational>>(1, d), 5).series();
                out.require(series.terms().size() == 6, "r=1 kernel has " + std::to_string(series.terms().size()) + " terms");
                Rational factorial(1);
                for (int m = 0; m <= 5; ++m) {
                  if (m > 0) factorial = factorial * Rational(m);
                  const auto it = series.terms().find(Exponent{m});
                  out.require(it != series.terms().end() &&
                                  it->second == MultiPoly<Rational>::monomial(1, Exponent{m}, Rational(1) / factorial),
                              "coefficient of z^" + std::to_string(m) + " at d=" + d.to_string());
                  ++out.cases;
                }
              }
              for (const Rational d : {Rational(1), Rational(2)}) {
                const auto kern = build_kernel(std::make_shared<const InterpFamily<Rational>>(2, d), 4);
                out.require(verify_symmetry(kern), "d=" + d.to_string());
                for (int l = 0; l <= 2; ++l) out.require(verify_intertwining(kern, l), "d=" + d.to_string() + " l=" + std::to_string(l));
              }
              return out;
            });

  criterion(10, "every suite in Q(d) at r=2, |m| <= 3, zero residual", kSymbolicLimitSeconds, [] {
    Outcome out;
    SuiteConfig cfg = config(2, 3, {});
    cfg.symbolic = true;
    Session session(cfg);
    for (const auto& r : run_all(session)) out.require(r, "symbolic");
    return out;
  });

  criterion(11, "two runs of verify all give byte-identical JSON", kDeterminismLimitSeconds, [] {
    Outcome out;
    const std::vector<std::string> args{"verify", "all", "--r", "2", "--max-weight", "3", "--d", "1", "--d", "1/2",
                                        "--seed", "2024", "--format", "json"};
    std::ostringstream first, second, err;
    // Different worker counts must not change a byte.
    setenv("JACKPIERI_THREADS", "1", 1);
    const int c1 = cli::run(args, first, err);
    setenv("JACKPIERI_THREADS", "4", 1);
    const int c2 = cli::run(args, second, err);
    unsetenv("JACKPIERI_THREADS");
    out.cases = 2;
    out.require(c1 == 0 && c2 == 0, "exit codes " + std::to_string(c1) + ", " + std::to_string(c2) + " " + err.str());
    out.require(!first.str().empty() && first.str() == second.str(), "outputs differ");
    return out;
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}
