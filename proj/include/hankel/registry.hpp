#pragma once

#include "hankel/closed_forms.hpp"
#include "hankel/determinants.hpp"
#include "hankel/matrix.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hankel {

/// Named parameters of one identity instance. Only the fields an identity
/// reads need to be set; validation reports anything missing.
struct CaseParams {
  long n = 1;
  std::optional<long> k;
  std::optional<long> beta;
  std::vector<long> alphas;
  std::optional<long> a, b, c;                  // path offsets for Prop8
  std::vector<Rational> x, lemma_a, lemma_b;    // Lemma1 indeterminates
  std::optional<Engine> engine;
};

struct IdentityCase {
  ClosedFormId id;
  CaseParams params;
};

/// "n=3 k=2 beta=0 alpha=0,1,2" style summary, stable field order.
std::string describe(const CaseParams& p);

/// Which optional parameters an identity reads.
enum ParamNeeds : unsigned {
  kNeedsNothing = 0,
  kNeedsK = 1u << 0,
  kNeedsBeta = 1u << 1,
  kNeedsAlphas = 1u << 2,     // length n
  kNeedsAlphasN1 = 1u << 3,   // length n + 1
  kNeedsPathOffsets = 1u << 4,
  kNeedsLemmaValues = 1u << 5,
};

/// One registry row: how to build the left side, evaluate the right side, and
/// check the parameters first.
struct IdentityInfo {
  ClosedFormId id;
  std::string_view lhs;  // human-readable determinant
  std::string_view rhs;  // human-readable closed form
  unsigned needs = kNeedsNothing;
  /// Throws DomainError describing the first violated precondition.
  std::function<void(const CaseParams&)> validate;
  /// Empty for identities whose left side is a path count (Prop8).
  std::function<ExactMatrix(const CaseParams&)> build;
  std::function<Rational(const CaseParams&)> rhs_value;
};

std::span<const IdentityInfo> registry();

/// Throws std::invalid_argument for an unknown id.
const IdentityInfo& lookup(const ClosedFormId& id);

/// Parameters used when a family is benchmarked or evaluated without explicit
/// choices: k = 3, beta = 1, alpha spaced by 2, Lemma1 at the Catalan
/// substitution X_i = i, A_j = j + 1, B_j = j - 1/2.
CaseParams default_params(const ClosedFormId& id, long n);

}  // namespace hankel
