#pragma once

#include "hankel/registry.hpp"
#include "hankel/report.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hankel {

struct BenchRow {
  long n = 0;
  Engine engine = Engine::FractionFreeElim;
  std::optional<double> median_ms;  // empty when the engine declined the matrix
  std::string note;
};

struct BenchTable {
  ClosedFormId family;
  std::size_t reps = 0;
  std::vector<BenchRow> rows;
  std::vector<std::pair<long, Rational>> values;  // agreed determinant per n
};

/// Engines disagreed on some matrix; no timings are reported in that case.
class BenchMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMinBenchReps = 5;

/// Times each engine on the family's matrix (default parameters) for every n,
/// after one untimed run per engine whose values must all agree. Throws
/// std::invalid_argument when reps < kMinBenchReps or the family has no matrix.
BenchTable bench(const ClosedFormId& family, long n_min, long n_max, std::span<const Engine> engines,
                 std::size_t reps = kMinBenchReps);

std::string format_bench(const BenchTable& table, ReportFormat format);

}  // namespace hankel
