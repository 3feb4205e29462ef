// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include "hankel/builders.hpp"
#include "hankel/closed_forms.hpp"
#include "hankel/determinants.hpp"
#include "hankel/harness.hpp"
#include "hankel/lgv.hpp"

#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

using namespace hankel;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  std::size_t checks = 0;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond) {
      if (ok) detail << what;
      else if (detail.str().size() < 400) detail << "\n      " << what;
      ok = false;
    }
  }
};

int failures = 0;

void criterion(int number, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!out.ok) ++failures;
  std::cout << (out.ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << number << "  " << title << "  ("
            << out.checks << " checks, " << std::fixed << std::setprecision(2) << secs << " s)";
  if (!out.ok) std::cout << "\n      " << out.detail.str();
  std::cout << std::endl;
}

ClosedFormId id_of(const char* name) { return *parse_closed_form_id(name); }

std::string label(const VerificationReport& r) {
  std::ostringstream s;
  s << to_string(r.identity_case.id) << " " << describe(r.identity_case.params) << " -> "
    << to_string(r.status);
  if (r.lhs) s << " lhs=" << to_string(*r.lhs);
  if (r.rhs) s << " rhs=" << to_string(*r.rhs);
  if (!r.reason.empty()) s << " (" << r.reason << ")";
  return s.str();
}

// Every report must pass; repeated-alpha two-row points may instead be RhsUndefined.
void expect_grid(Outcome& out, const std::vector<VerificationReport>& reports, bool allow_undefined) {
  out.expect(!reports.empty(), "empty grid");
  for (const auto& r : reports) {
    const bool fine = r.status == Status::Pass || (allow_undefined && r.status == Status::RhsUndefined);
    out.expect(fine, label(r));
  }
}

VerificationReport run(const char* id, CaseParams p) { return run_case({id_of(id), std::move(p)}); }

CaseParams with_n(long n) {
  CaseParams p;
  p.n = n;
  return p;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Two-row expansion on an (n+1) x n array.
bool two_row_expansion_holds(const std::vector<std::vector<long>>& a, long n) {
  auto as_matrix = [&](auto entry) {
    return ExactMatrix::generate(static_cast<std::size_t>(n), [&](std::size_t i, std::size_t j) -> Rational {
      return Rational(entry(static_cast<long>(i), static_cast<long>(j)));
    });
  };
  const Rational lhs = det(as_matrix([&](long i, long j) { return a[i][j] + a[i + 1][j]; })).value;
  Rational rhs = 0;
  for (long s = 0; s <= n; ++s)
    rhs += det(as_matrix([&](long i, long j) { return a[i + (i >= s ? 1 : 0)][j]; })).value;
  return lhs == rhs;
}

// Family configurations of up to three paths used by the LGV and reduction checks.
std::vector<PathSystemConfig> thm6_configs() {
  std::vector<PathSystemConfig> out;
  const std::vector<std::vector<long>> alpha_sets = {{0}, {2}, {0, 1}, {0, 2}, {1, 3}, {0, 1, 2}, {0, 1, 3}, {0, 2, 3}};
  for (long k = 2; k <= 3; ++k)
    for (long beta = 0; beta <= k - 1; ++beta)
      for (const auto& al : alpha_sets) out.push_back(thm6_config(al, k, beta, static_cast<long>(al.size())));
  return out;
}

std::vector<PathSystemConfig> prop8_configs() {
  std::vector<PathSystemConfig> out;
  const std::vector<std::vector<long>> alpha_sets = {{1}, {0, 2}, {1, 1}, {0, 1, 3}, {2, 3, 3}, {0, 2, 4}};
  for (long c = 0; c <= 2; ++c)
    for (const auto& al : alpha_sets) out.push_back(prop8_config(0, 0, c, al, static_cast<long>(al.size())));
  out.push_back(prop8_config(-2, 1, 3, std::vector<long>{-1, 0, 2}, 3));
  return out;
}

bool pair_counts_at_most(const PathSystemConfig& c, long limit) {
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j)
      if (count_paths(c.starts[j], c.ends[i], c.mu) > limit) return false;
  return true;
}

}  // namespace

int main() {
  criterion(1, "Eq1_1 and Eq1_2: det = 1 for n = 1..10 within 1 s", [](Outcome& out) {
    const auto t0 = std::chrono::steady_clock::now();
    for (const char* id : {"Eq1_1", "Eq1_2"})
      for (long n = 1; n <= 10; ++n) {
        auto r = run(id, with_n(n));
        out.expect(r.status == Status::Pass && *r.lhs == 1, label(r));
      }
    const double s = seconds_since(t0);
    out.expect(s < 1.0, "took " + std::to_string(s) + " s");
  });

  criterion(2, "Eq1_3: det = n+1 for n = 1..10", [](Outcome& out) {
    for (long n = 1; n <= 10; ++n) {
      auto r = run("Eq1_3", with_n(n));
      out.expect(r.status == Status::Pass && *r.lhs == n + 1, label(r));
    }
  });

  criterion(3, "Eq1_4: det = F_{2n} for n = 1..10", [](Outcome& out) {
    for (long n = 1; n <= 10; ++n) {
      auto r = run("Eq1_4", with_n(n));
      out.expect(r.status == Status::Pass && *r.lhs == Rational(fibonacci(2 * n)), label(r));
    }
  });

  criterion(4, "Eq1_6 and Eq1_7: binomial sums for n = 1..8, k = 2..5", [](Outcome& out) {
    for (const char* id : {"Eq1_6", "Eq1_7"})
      for (long k = 2; k <= 5; ++k)
        for (long n = 1; n <= 8; ++n) {
          CaseParams p = with_n(n);
          p.k = k;
          auto r = run(id, p);
          Integer sum = 0;
          for (long s = 0; s <= n; ++s)
            sum += std::string(id) == "Eq1_6" ? oracle::binomial((k - 1) * s + n, n - s)
                                              : oracle::binomial(s / (k - 1) + n, n - s);
          out.expect(r.status == Status::Pass && *r.lhs == Rational(sum), label(r));
        }
  });

  criterion(5, "Thm3: 25 seeded increasing alpha vectors per n <= 6, alpha <= 12, plus repeats", [](Outcome& out) {
    GridSpec g;
    g.n_min = 1;
    g.n_max = 6;
    g.samples = 25;
    g.alpha_max = 12;
    auto reports = run_grid(id_of("Thm3"), g);
    expect_grid(out, reports, false);
    std::size_t repeats = 0;
    for (const auto& r : reports) {
      const auto& al = r.identity_case.params.alphas;
      if (std::adjacent_find(al.begin(), al.end()) != al.end()) {
        ++repeats;
        out.expect(r.lhs && *r.lhs == 0, "repeated alpha should give 0: " + label(r));
      }
    }
    out.expect(repeats == 15, "expected 15 repeated-alpha cases, got " + std::to_string(repeats));
    out.expect(reports.size() == 6 * 25 + 15, "unexpected case count");
  });

  criterion(6, "Cor5 and Cor7: same sampling, length n+1, n <= 6, k = 2..4, all beta", [](Outcome& out) {
    GridSpec g;
    g.n_max = 6;
    g.samples = 25;
    g.ks = {2, 3, 4};
    for (const char* id : {"Cor5", "Cor7"}) {
      auto reports = run_grid(id_of(id), g);
      expect_grid(out, reports, true);
      std::size_t passes = 0;
      for (const auto& r : reports) passes += r.status == Status::Pass;
      const std::size_t expected = std::string(id) == "Cor5" ? 6 * 25 : 6 * 25 * (2 + 3 + 4);
      out.expect(passes == expected, std::string(id) + ": " + std::to_string(passes) + " passing cases");
    }
  });

  criterion(7, "Thm6 and Eq4_3: n <= 6, k = 2..4, all valid beta, 25 alpha vectors per point", [](Outcome& out) {
    GridSpec g;
    g.n_max = 6;
    g.samples = 25;
    g.ks = {2, 3, 4};
    for (const char* id : {"Thm6", "Eq4_3"}) expect_grid(out, run_grid(id_of(id), g), false);
  });

  criterion(8, "Thm9: n <= 8, k = 2..5, all valid beta", [](Outcome& out) {
    GridSpec g;
    g.n_max = 8;
    g.ks = {2, 3, 4, 5};
    auto reports = run_grid(id_of("Thm9"), g);
    expect_grid(out, reports, false);
    out.expect(reports.size() == 8 * (2 + 3 + 4 + 5), "expected 112 cases, got " + std::to_string(reports.size()));
  });

  criterion(9, "Thm10: every variant, n = 1..8, within 10 s", [](Outcome& out) {
    const auto t0 = std::chrono::steady_clock::now();
    for (Thm10Variant v : kAllThm10Variants) {
      const ClosedFormId id{IdentityKind::Thm10, v};
      std::string failing, first;
      for (long n = 1; n <= 8; ++n) {
        auto r = run_case({id, with_n(n)});
        ++out.checks;
        if (r.status == Status::Pass) continue;
        failing += (failing.empty() ? "" : ",") + std::to_string(n);
        if (first.empty()) first = label(r);
      }
      // One line per variant so every failing n shows up.
      if (!failing.empty()) out.expect(false, to_string(id) + " fails at n=" + failing + " (first: " + first + ")");
    }
    const double s = seconds_since(t0);
    out.expect(s < 10.0, "took " + std::to_string(s) + " s");
  });

  criterion(10, "Lemma1: seeded rational assignments for n <= 6, plus coincident X", [](Outcome& out) {
    GridSpec g;
    g.n_max = 6;
    g.samples = 5;
    auto reports = run_grid(id_of("Lemma1"), g);
    expect_grid(out, reports, false);
    std::size_t zero = 0;
    for (const auto& r : reports) {
      const auto& x = r.identity_case.params.x;
      if (x.size() >= 2 && x[0] == x[1]) {
        ++zero;
        out.expect(*r.lhs == 0, "coincident X must give 0: " + label(r));
      }
    }
    out.expect(zero == 5, "expected 5 coincident-X cases");
  });

  criterion(11, "two-row expansion: 50 seeded integer arrays, n <= 6", [](Outcome& out) {
    std::mt19937_64 rng(kDefaultSeed + 11);
    for (int t = 0; t < 50; ++t) {
      const long n = 1 + t % 6;
      std::vector<std::vector<long>> a(static_cast<std::size_t>(n + 1), std::vector<long>(static_cast<std::size_t>(n)));
      for (auto& row : a)
        for (auto& v : row) v = static_cast<long>(rng() % 19) - 9;
      out.expect(two_row_expansion_holds(a, n), "trial " + std::to_string(t) + " n=" + std::to_string(n));
    }
  });

  criterion(12, "paths below x = mu*y: DP count equals the ballot formula on the full grid", [](Outcome& out) {
    for (long mu = 1; mu <= 4; ++mu)
      for (long d = 0; d <= 10; ++d)
        for (long c = mu * d; c <= 12; ++c) {
          Rational closed = make_rational(c - mu * d + 1, c + d + 1) * Rational(binomial_int(c + d + 1, d));
          out.expect(Rational(count_paths({0, 0}, {c, d}, mu)) == closed,
                     "mu=" + std::to_string(mu) + " (" + std::to_string(c) + "," + std::to_string(d) + ")");
        }
    out.expect(out.checks == 200, "expected the 200-point grid, got " + std::to_string(out.checks));
  });

  criterion(13, "LGV: determinant equals brute-force family count, >= 20 configs, n <= 3, < 60 s", [](Outcome& out) {
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t used = 0, thm6 = 0, prop8 = 0;
    auto check = [&](const PathSystemConfig& c, std::size_t& tally) {
      if (c.size() > 3 || !pair_counts_at_most(c, 200)) return;
      ++used;
      ++tally;
      out.expect(lgv_determinant(c) == count_nonintersecting(c), "config with " + std::to_string(c.size()) + " paths");
    };
    for (const auto& c : thm6_configs()) check(c, thm6);
    for (const auto& c : prop8_configs()) check(c, prop8);
    out.expect(used >= 20, "only " + std::to_string(used) + " configurations");
    out.expect(thm6 > 0 && prop8 > 0, "need both config kinds");
    const double s = seconds_since(t0);
    out.expect(s < 60.0, "took " + std::to_string(s) + " s");
  });

  criterion(14, "Prop8: brute-force family count equals the product, n <= 3, alpha-a <= 5, c-b <= 4", [](Outcome& out) {
    GridSpec g;
    g.n_max = 3;
    g.prop8_span = 5;
    g.prop8_height = 4;
    expect_grid(out, run_grid(id_of("Prop8"), g), false);
    g.n_max = 2;
    g.a = -2;
    g.b = 3;
    expect_grid(out, run_grid(id_of("Prop8"), g), false);
  });

  criterion(15, "forced-step reduction preserves family counts, n <= 3", [](Outcome& out) {
    auto configs = thm6_configs();
    for (long beta = 3; beta <= 5; ++beta) {
      configs.push_back(thm6_config(std::vector<long>{0, 1}, 3, beta, 2));
      configs.push_back(thm6_config(std::vector<long>{0, 1, 2}, 3, beta, 3));
    }
    for (const auto& c : configs)
      out.expect(count_nonintersecting(reduce_forced(c)) == count_nonintersecting(c),
                 "k=" + std::to_string(c.thm6->k) + " beta=" + std::to_string(c.thm6->beta));
  });

  criterion(16, "engines agree on 200 seeded matrices per order n <= 7; condensation fallback exercised", [](Outcome& out) {
    std::mt19937_64 rng(kDefaultSeed + 16);
    for (std::size_t n = 1; n <= 7; ++n) {
      for (int t = 0; t < 200; ++t) {
        const long spread = t % 2 ? 2 : 9;  // small entries give zero pivots and minors
        ExactMatrix m = ExactMatrix::from_rows(oracle::random_int_matrix(rng, n, -spread, spread));
        const Rational ref = det_laplace(m);
        const bool agree = Rational(det_fraction_free(m)) == ref && det_rational_elim(m) == ref &&
                           det_condensation(m) == ref;
        out.expect(agree, "order " + std::to_string(n) + " trial " + std::to_string(t));
      }
    }
    DetStats stats;
    ExactMatrix ones = ExactMatrix::generate(4, [](std::size_t, std::size_t) { return Rational(1); });
    out.expect(det_condensation(ones, &stats) == 0, "all-ones 4x4");
    out.expect(stats.fallbacks >= 1, "no fallback recorded on all-ones 4x4");
  });

  criterion(17, "dual paths: sum over s equals the shifted two-row determinant, n <= 3, k = 2..3", [](Outcome& out) {
    for (long k = 2; k <= 3; ++k)
      for (long beta = 0; beta < k; ++beta)
        for (long n = 1; n <= 3; ++n) {
          Integer sum = 0;
          for (long s = 0; s <= n; ++s) {
            sum += dual_path_count(n, s, beta, k);
            auto [S, T] = dual_path_endpoints(n, s, beta, k);
            out.expect(count_down_paths(S, T) == dual_path_count(n, s, beta, k), "brute-force dual count");
          }
          out.expect(sum == det_fraction_free(build_thm9_matrix(k, beta, n)),
                     "k=" + std::to_string(k) + " beta=" + std::to_string(beta) + " n=" + std::to_string(n));
        }
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
