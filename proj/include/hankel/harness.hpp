#pragma once

#include "hankel/registry.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hankel {

enum class Status { Pass, Fail, RhsUndefined, Skipped };

/// "pass", "fail", "rhs-undefined", "skipped".
std::string_view to_string(Status s);

struct VerificationReport {
  IdentityCase identity_case;
  std::optional<Rational> lhs;
  std::optional<Rational> rhs;
  Status status = Status::Skipped;
  std::string reason;   // why a case was skipped or its right side undefined
  std::string engine;   // determinant engine, or "brute-force" for path counts
  DetStats stats;
  double elapsed_ms = 0.0;
};

/// Validates, evaluates both sides and compares them exactly. Never throws for
/// bad parameters: those come back as Skipped with the validator's message.
VerificationReport run_case(const IdentityCase& c);

inline constexpr std::uint64_t kDefaultSeed = 20240917;

/// Ranges for a verification grid. Empty vectors mean "the defaults": k in
/// {2, 3, 4}, every beta the identity admits for that k.
struct GridSpec {
  long n_min = 1;
  long n_max = 6;
  std::vector<long> ks;
  std::vector<long> betas;
  /// A fixed alpha vector replaces sampling; n then follows from its length.
  std::vector<long> alphas;
  std::optional<long> a, b, c;
  std::size_t samples = 25;   // random alpha vectors (or Lemma1 assignments) per point
  long alpha_max = 12;
  bool degenerate = true;     // add repeated-alpha cases
  long prop8_span = 5;        // Prop8 grid: alpha_i - a in 0..span
  long prop8_height = 4;      //             c - b in 0..height
  std::uint64_t seed = kDefaultSeed;
  std::optional<Engine> engine;
  unsigned jobs = 1;
};

/// The cases a grid expands to, in report order.
std::vector<IdentityCase> expand_grid(const ClosedFormId& id, const GridSpec& spec);

/// Runs cases on up to `jobs` threads; results keep the input order.
std::vector<VerificationReport> run_cases(std::span<const IdentityCase> cases, unsigned jobs = 1);

std::vector<VerificationReport> run_grid(const ClosedFormId& id, const GridSpec& spec);

struct RunSummary {
  std::size_t pass = 0, fail = 0, rhs_undefined = 0, skipped = 0;

  std::size_t total() const { return pass + fail + rhs_undefined + skipped; }
};

RunSummary summarize(std::span<const VerificationReport> reports);

/// Process exit code for a run: 1 if anything failed, otherwise 2 if a case
/// was skipped for bad parameters, otherwise 0.
int exit_code(std::span<const VerificationReport> reports);

}  // namespace hankel
