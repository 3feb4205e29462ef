#pragma once

#include "hankel/matrix.hpp"

#include <cstddef>
#include <optional>
#include <string_view>

namespace hankel {

enum class Engine { Laplace, FractionFreeElim, RationalElim, Condensation };

inline constexpr Engine kAllEngines[] = {Engine::Laplace, Engine::FractionFreeElim,
                                         Engine::RationalElim, Engine::Condensation};

std::string_view to_string(Engine e);

/// Accepts "laplace", "fraction-free" (or "bareiss"), "rational", "condensation".
std::optional<Engine> parse_engine(std::string_view text);

struct DetStats {
  std::size_t pivots = 0;     // elimination steps performed
  std::size_t row_swaps = 0;
  std::size_t fallbacks = 0;  // condensation minors recomputed by elimination
  double elapsed_ms = 0.0;
};

struct DetResult {
  Rational value;
  Engine engine;
  DetStats stats;
};

/// Largest order det_laplace accepts; cofactor expansion is O(n!).
inline constexpr std::size_t kLaplaceMaxOrder = 7;

/// Cofactor expansion along the first row. Throws Refused above kLaplaceMaxOrder.
Rational det_laplace(const ExactMatrix& m);

/// One-step fraction-free (Bareiss) elimination over the integers. Every
/// division is exact. Throws DomainError if any entry is not an integer.
Integer det_fraction_free(const ExactMatrix& m, DetStats* stats = nullptr);

/// Gaussian elimination over the rationals; pivot is the first nonzero entry
/// at or below the diagonal.
Rational det_rational_elim(const ExactMatrix& m, DetStats* stats = nullptr);

/// Dodgson condensation via the Desnanot-Jacobi identity. Where the interior
/// divisor of a step vanishes, that connected minor is recomputed directly by
/// rational elimination and counted in stats->fallbacks.
Rational det_condensation(const ExactMatrix& m, DetStats* stats = nullptr);

/// Integer matrices go to FractionFreeElim, everything else to RationalElim,
/// unless `engine` is given.
DetResult det(const ExactMatrix& m, std::optional<Engine> engine = std::nullopt);

}  // namespace hankel
