#include "hankel/bench.hpp"

#include "hankel/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

namespace hankel {

namespace {

std::optional<Rational> try_engine(const ExactMatrix& m, Engine e, std::string& note) {
  try {
    return det(m, e).value;
  } catch (const Refused& ex) {
    note = ex.what();
  } catch (const DomainError& ex) {
    note = ex.what();
  }
  return std::nullopt;
}

}  // namespace

BenchTable bench(const ClosedFormId& family, long n_min, long n_max, std::span<const Engine> engines,
                 std::size_t reps) {
  if (reps < kMinBenchReps) {
    throw std::invalid_argument("bench needs at least " + std::to_string(kMinBenchReps) + " repetitions");
  }
  if (n_min < 1 || n_max < n_min) throw std::invalid_argument("bad n range");
  const IdentityInfo& info = lookup(family);
  if (!info.build) throw std::invalid_argument(to_string(family) + " has no determinant matrix");

  BenchTable table{family, reps, {}, {}};
  for (long n = n_min; n <= n_max; ++n) {
    const ExactMatrix m = info.build(default_params(family, n));

    std::vector<BenchRow> rows;
    std::optional<Rational> agreed;
    for (Engine e : engines) {
      BenchRow row{n, e, std::nullopt, {}};
      auto v = try_engine(m, e, row.note);  // doubles as warm-up
      if (v) {
        if (agreed && *agreed != *v) {
          throw BenchMismatch("engines disagree at n=" + std::to_string(n) + ": " +
                              to_string(*agreed) + " vs " + to_string(*v) + " from " +
                              std::string(to_string(e)));
        }
        agreed = *v;
      }
      rows.push_back(std::move(row));
    }

    for (auto& row : rows) {
      if (!row.note.empty()) continue;
      std::vector<double> times;
      for (std::size_t r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        (void)det(m, row.engine);
        times.push_back(
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
      }
      std::nth_element(times.begin(), times.begin() + times.size() / 2, times.end());
      row.median_ms = times[times.size() / 2];
    }
    if (agreed) table.values.emplace_back(n, *agreed);
    for (auto& row : rows) table.rows.push_back(std::move(row));
  }
  return table;
}

std::string format_bench(const BenchTable& table, ReportFormat format) {
  auto value_at = [&](long n) -> std::string {
    for (const auto& [m, v] : table.values)
      if (m == n) return to_string(v);
    return "";
  };

  if (format == ReportFormat::Json) {
    nlohmann::ordered_json doc;
    doc["family"] = to_string(table.family);
    doc["reps"] = table.reps;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : table.rows) {
      nlohmann::ordered_json j;
      j["n"] = r.n;
      j["engine"] = std::string(to_string(r.engine));
      j["median_ms"] = r.median_ms ? nlohmann::ordered_json(*r.median_ms) : nlohmann::ordered_json(nullptr);
      j["value"] = value_at(r.n);
      if (!r.note.empty()) j["note"] = r.note;
      rows.push_back(std::move(j));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
  }

  std::ostringstream out;
  out << std::fixed << std::setprecision(4);
  if (format == ReportFormat::Csv) {
    out << "n,engine,median_ms,value,note\n";
    for (const auto& r : table.rows) {
      out << r.n << ',' << to_string(r.engine) << ',';
      if (r.median_ms) out << *r.median_ms;
      out << ',' << value_at(r.n) << ',' << (r.note.empty() ? "" : "\"" + r.note + "\"") << '\n';
    }
    return out.str();
  }

  out << "family " << to_string(table.family) << ", median of " << table.reps << " runs\n";
  out << std::left << std::setw(4) << "n" << std::setw(15) << "engine" << std::right << std::setw(12)
      << "median_ms" << "  value\n";
  for (const auto& r : table.rows) {
    out << std::left << std::setw(4) << r.n << std::setw(15) << to_string(r.engine) << std::right
        << std::setw(12);
    if (r.median_ms) out << *r.median_ms;
    else out << "-";
    out << "  " << (r.note.empty() ? value_at(r.n) : "(" + r.note + ")") << '\n';
  }
  return out.str();
}

}  // namespace hankel
