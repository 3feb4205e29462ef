#pragma once

#include "hankel/harness.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace hankel {

enum class ReportFormat { Json, Csv, Text };

std::optional<ReportFormat> parse_report_format(std::string_view text);

struct ReportMeta {
  std::string command = "verify";
  std::string identity;
  std::uint64_t seed = kDefaultSeed;
  /// When false every elapsed_ms is written as 0, so repeated runs compare equal.
  bool timing = true;
};

/// Fields appear in a fixed order; rationals are written as "p/q" strings.
std::string emit_report(std::span<const VerificationReport> reports, ReportFormat format,
                        const ReportMeta& meta);

}  // namespace hankel
