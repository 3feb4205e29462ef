#pragma once

#include "hankel/arith.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hankel {

struct LatticePoint {
  long x = 0;
  long y = 0;

  auto operator<=>(const LatticePoint&) const = default;
};

std::string to_string(const LatticePoint& p);

enum class Step : char { Right = 'R', Up = 'U' };

/// Monotone path of unit right/up steps.
struct LatticePath {
  LatticePoint start;
  std::vector<Step> steps;

  LatticePoint end() const;
  /// Every visited lattice point, start and end included.
  std::vector<LatticePoint> points() const;
  /// Step word such as "RRUR".
  std::string word() const;

  /// Parses a word over {R, U}; throws std::invalid_argument otherwise.
  static LatticePath from_word(LatticePoint start, std::string_view word);

  auto operator<=>(const LatticePath&) const = default;
};

/// Parameters a configuration was derived from, so reductions can be
/// validated against the construction they rely on.
struct Thm6Origin {
  std::vector<long> alphas;
  long k = 2;
  long beta = 0;
  bool reduced = false;
};

/// n start/end pairs plus an optional slope constraint: when `mu` is set,
/// every visited point must satisfy x >= mu * y (touching the line is allowed).
struct PathSystemConfig {
  std::vector<LatticePoint> starts;
  std::vector<LatticePoint> ends;
  std::optional<long> mu;
  std::optional<Thm6Origin> thm6;

  std::size_t size() const { return starts.size(); }
};

using PathFamily = std::vector<LatticePath>;

/// Default for every enumeration cap parameter below.
inline constexpr std::size_t kDefaultEnumerationCap = 100000;

/// Thrown when an enumeration would exceed its cap. Carries the count.
class CapExceeded : public Refused {
 public:
  CapExceeded(const Integer& count, std::size_t cap);
  const Integer& count() const { return count_; }

 private:
  Integer count_;
};

bool satisfies(const LatticePoint& p, std::optional<long> mu);

/// Number of monotone paths a -> e whose points all obey the constraint.
Integer count_paths(LatticePoint a, LatticePoint e, std::optional<long> mu = std::nullopt);

/// All such paths, in lexicographic order of their step words (R < U).
std::vector<LatticePath> enumerate_paths(LatticePoint a, LatticePoint e,
                                         std::optional<long> mu = std::nullopt,
                                         std::size_t cap = kDefaultEnumerationCap);

/// Brute-force count of vertex-disjoint families P_i: starts[i] -> ends[i].
Integer count_nonintersecting(const PathSystemConfig& config,
                              std::size_t cap = kDefaultEnumerationCap);

/// The families themselves, ordered lexicographically by (P_0, P_1, ...).
std::vector<PathFamily> enumerate_nonintersecting(const PathSystemConfig& config,
                                                  std::size_t cap = kDefaultEnumerationCap);

/// True when `family` connects the configuration's points, obeys the
/// constraint, and no two paths share a point.
bool is_nonintersecting_family(const PathSystemConfig& config, std::span<const LatticePath> family);

/// det( count_paths(starts[j], ends[i]) ).
Integer lgv_determinant(const PathSystemConfig& config);

/// P_i: (-(k-1) alpha_i, -alpha_i) -> (i + beta, floor((i + beta)/(k-1))), below x = (k-1) y.
/// beta is not limited to k-1 here so that larger worked examples can be drawn.
PathSystemConfig thm6_config(std::span<const long> alphas, long k, long beta, long n);

/// Drops the vertical steps every path is forced to take above the height of
/// the first end point: ends become (i + beta, floor(beta/(k-1))). Requires a
/// configuration built by thm6_config.
PathSystemConfig reduce_forced(const PathSystemConfig& config);

/// Unconstrained P_i: (a, b - i) -> (alpha_i, c).
PathSystemConfig prop8_config(long a, long b, long c, std::span<const long> alphas, long n);

/// One summand of the two-row expansion of the shifted generalised Catalan
/// determinant: P_i: (-(k-1) i, -i) -> E_i with E_i = (e, floor(e/(k-1))),
/// e = i + [i >= s] + beta, below x = (k-1) y.
PathSystemConfig thm9_summand_config(long n, long s, long beta, long k);

/// The same summand with its forced portions and the boundary removed:
/// P'_i: (s + beta, -i) -> (i + beta + 1, floor((s + beta)/(k-1))), i = s..n-1.
PathSystemConfig thm9_reduced_config(long n, long s, long beta, long k);

/// C(floor((s+beta)/(k-1)) + n, n - s).
Integer dual_path_count(long n, long s, long beta, long k);

/// Start S = (s + beta, floor((s+beta)/(k-1))) and end T = (n + beta, -n) of the dual paths.
std::pair<LatticePoint, LatticePoint> dual_path_endpoints(long n, long s, long beta, long k);

/// Brute-force count of paths s -> t using steps (0,-1) and (1,-1).
Integer count_down_paths(LatticePoint s, LatticePoint t);

/// Dual path of a family of thm9_reduced_config: from S, step (0,-1) unless the
/// current point lies on a path of the family, in which case step (1,-1);
/// stop at height T.y. Returns the visited points, S first.
std::vector<LatticePoint> dual_path(std::span<const LatticePath> family, LatticePoint s,
                                    LatticePoint t);

}  // namespace hankel
