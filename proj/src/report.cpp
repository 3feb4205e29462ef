#include "hankel/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <sstream>

namespace hankel {

using ordered_json = nlohmann::ordered_json;

std::optional<ReportFormat> parse_report_format(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "json") return ReportFormat::Json;
  if (t == "csv") return ReportFormat::Csv;
  if (t == "text" || t == "txt") return ReportFormat::Text;
  return std::nullopt;
}

namespace {

std::string rational_list(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s;
}

ordered_json params_json(const CaseParams& p) {
  ordered_json j;
  j["n"] = p.n;
  if (p.k) j["k"] = *p.k;
  if (p.beta) j["beta"] = *p.beta;
  if (!p.alphas.empty()) j["alpha"] = p.alphas;
  if (p.a) j["a"] = *p.a;
  if (p.b) j["b"] = *p.b;
  if (p.c) j["c"] = *p.c;
  auto list = [&](const char* name, const std::vector<Rational>& v) {
    if (v.empty()) return;
    auto arr = ordered_json::array();
    for (const auto& q : v) arr.push_back(to_string(q));
    j[name] = std::move(arr);
  };
  list("X", p.x);
  list("A", p.lemma_a);
  list("B", p.lemma_b);
  return j;
}

// Semicolon-separated so the CSV column needs no quoting beyond commas in lists.
std::string params_flat(const CaseParams& p) {
  std::ostringstream out;
  out << "n=" << p.n;
  if (p.k) out << ";k=" << *p.k;
  if (p.beta) out << ";beta=" << *p.beta;
  if (!p.alphas.empty()) {
    out << ";alpha=";
    for (std::size_t i = 0; i < p.alphas.size(); ++i) out << (i ? " " : "") << p.alphas[i];
  }
  if (p.a) out << ";a=" << *p.a;
  if (p.b) out << ";b=" << *p.b;
  if (p.c) out << ";c=" << *p.c;
  if (!p.x.empty()) out << ";X=" << rational_list(p.x);
  if (!p.lemma_a.empty()) out << ";A=" << rational_list(p.lemma_a);
  if (!p.lemma_b.empty()) out << ";B=" << rational_list(p.lemma_b);
  return out.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string opt(const std::optional<Rational>& q) { return q ? to_string(*q) : ""; }

}  // namespace

std::string emit_report(std::span<const VerificationReport> reports, ReportFormat format,
                        const ReportMeta& meta) {
  const RunSummary sum = summarize(reports);
  auto elapsed = [&](const VerificationReport& r) { return meta.timing ? r.elapsed_ms : 0.0; };

  if (format == ReportFormat::Json) {
    ordered_json doc;
    ordered_json& m = doc["run_meta"];
    m["command"] = meta.command;
    m["identity"] = meta.identity;
    m["seed"] = meta.seed;
    m["cases"] = sum.total();
    m["pass"] = sum.pass;
    m["fail"] = sum.fail;
    m["rhs_undefined"] = sum.rhs_undefined;
    m["skipped"] = sum.skipped;
    auto cases = ordered_json::array();
    for (const auto& r : reports) {
      ordered_json c;
      c["id"] = to_string(r.identity_case.id);
      c["params"] = params_json(r.identity_case.params);
      c["lhs"] = r.lhs ? ordered_json(to_string(*r.lhs)) : ordered_json(nullptr);
      c["rhs"] = r.rhs ? ordered_json(to_string(*r.rhs)) : ordered_json(nullptr);
      c["status"] = to_string(r.status);
      c["engine"] = r.engine;
      c["elapsed_ms"] = elapsed(r);
      if (!r.reason.empty()) c["reason"] = r.reason;
      cases.push_back(std::move(c));
    }
    doc["cases"] = std::move(cases);
    return doc.dump(2) + "\n";
  }

  std::ostringstream out;
  out << std::fixed << std::setprecision(3);
  if (format == ReportFormat::Csv) {
    out << "id,params,lhs,rhs,status,engine,elapsed_ms,reason\n";
    for (const auto& r : reports) {
      out << to_string(r.identity_case.id) << ',' << csv_field(params_flat(r.identity_case.params))
          << ',' << opt(r.lhs) << ',' << opt(r.rhs) << ',' << to_string(r.status) << ','
          << r.engine << ',' << elapsed(r) << ',' << csv_field(r.reason) << '\n';
    }
    return out.str();
  }

  for (const auto& r : reports) {
    std::string tag(to_string(r.status));
    std::transform(tag.begin(), tag.end(), tag.begin(), [](unsigned char c) { return std::toupper(c); });
    out << std::left << std::setw(14) << tag << to_string(r.identity_case.id) << "  "
        << describe(r.identity_case.params);
    if (r.lhs) out << "  lhs=" << to_string(*r.lhs);
    if (r.rhs) out << "  rhs=" << to_string(*r.rhs);
    if (!r.reason.empty()) out << "  (" << r.reason << ")";
    out << '\n';
  }
  out << sum.total() << " cases: " << sum.pass << " pass, " << sum.fail << " fail, "
      << sum.rhs_undefined << " rhs undefined, " << sum.skipped << " skipped\n";
  return out.str();
}

}  // namespace hankel
