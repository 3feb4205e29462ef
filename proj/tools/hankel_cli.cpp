// hankel: verify determinant evaluations, compute determinants, count and draw
// lattice path systems, and time the determinant engines.
//
// Exit status: 0 when nothing failed, 1 when a check failed, 2 for usage or
// parameter errors.

#include "hankel/bench.hpp"
#include "hankel/builders.hpp"
#include "hankel/errors.hpp"
#include "hankel/harness.hpp"
#include "hankel/lgv.hpp"
#include "hankel/matrix_io.hpp"
#include "hankel/registry.hpp"
#include "hankel/render.hpp"
#include "hankel/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace hankel;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) {
    auto b = cur.find_first_not_of(" \t");
    auto e = cur.find_last_not_of(" \t");
    parts.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
  }
  return parts;
}

long parse_long(const std::string& s) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw UsageError("not an integer: '" + s + "'");
  return v;
}

std::vector<long> parse_longs(const std::string& text) {
  std::vector<long> out;
  if (text.empty()) return out;
  for (const auto& p : split(text, ',')) out.push_back(parse_long(p));
  return out;
}

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  if (text.empty()) return out;
  for (const auto& p : split(text, ',')) {
    try {
      out.push_back(parse_rational(p));
    } catch (const std::exception& e) {
      throw UsageError("bad rational '" + p + "': " + e.what());
    }
  }
  return out;
}

// "x,y;x,y;..."
std::vector<LatticePoint> parse_points(const std::string& text) {
  std::vector<LatticePoint> pts;
  for (const auto& item : split(text, ';')) {
    if (item.empty()) continue;
    auto xy = split(item, ',');
    if (xy.size() != 2) throw UsageError("expected x,y but got '" + item + "'");
    pts.push_back({parse_long(xy[0]), parse_long(xy[1])});
  }
  return pts;
}

ClosedFormId parse_id(const std::string& text) {
  auto id = parse_closed_form_id(text);
  if (!id) throw UsageError("unknown identity '" + text + "' (see 'hankel list')");
  return *id;
}

std::optional<Engine> parse_engine_opt(const std::string& text) {
  if (text.empty() || text == "auto") return std::nullopt;
  auto e = parse_engine(text);
  if (!e) throw UsageError("unknown engine '" + text + "'");
  return e;
}

ReportFormat parse_format(const std::string& text) {
  auto f = parse_report_format(text);
  if (!f) throw UsageError("unknown format '" + text + "' (json, csv, text)");
  return *f;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

// Options shared by subcommands that name identity parameters.
struct ParamOptions {
  std::optional<long> n, k, beta, a, b, c;
  std::string alpha, x, lemma_a, lemma_b;

  void attach(CLI::App* cmd, bool k_is_list) {
    cmd->add_option("--n", n, "matrix order");
    if (!k_is_list) {
      cmd->add_option("--k", k, "generalised Catalan parameter, k >= 2");
      cmd->add_option("--beta", beta, "shift beta");
    }
    cmd->add_option("--alpha", alpha, "row parameters, e.g. 0,2,5");
    cmd->add_option("--a", a, "path start column (Prop8)");
    cmd->add_option("--b", b, "path start height (Prop8)");
    cmd->add_option("--c", c, "path end height (Prop8)");
    cmd->add_option("--x", x, "Lemma1 X values, e.g. 1/2,3,-1");
    cmd->add_option("--A", lemma_a, "Lemma1 A_1..A_{n-1}");
    cmd->add_option("--B", lemma_b, "Lemma1 B_1..B_{n-1}");
  }

  // Defaults for the identity, overridden by whatever was given.
  CaseParams resolve(const ClosedFormId& id) const {
    const unsigned needs = lookup(id).needs;
    std::vector<long> alphas = parse_longs(alpha);
    std::vector<Rational> xs = parse_rationals(x);
    long order = n.value_or(3);
    if (!n && !alphas.empty())
      order = static_cast<long>(alphas.size()) - ((needs & kNeedsAlphasN1) ? 1 : 0);
    if (!n && !xs.empty()) order = static_cast<long>(xs.size());
    if (order < 1) throw UsageError("n must be at least 1");
    CaseParams p = default_params(id, order);
    if (k) p.k = k;
    if (beta) p.beta = beta;
    if (!alphas.empty()) p.alphas = alphas;
    if (a) p.a = a;
    if (b) p.b = b;
    if (c) p.c = c;
    if (!xs.empty()) p.x = xs;
    if (!lemma_a.empty()) p.lemma_a = parse_rationals(lemma_a);
    if (!lemma_b.empty()) p.lemma_b = parse_rationals(lemma_b);
    return p;
  }
};

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  std::string id;
  ParamOptions params;
  std::optional<long> n_min, n_max;
  std::string ks, betas;
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = 25;
  long alpha_max = 12;
  bool no_degenerate = false;
  std::string engine, format = "text", out;
  bool no_timing = false;
  unsigned jobs = 1;
};

int run_verify(const VerifyOptions& o) {
  const ClosedFormId id = parse_id(o.id);
  const auto& p = o.params;

  std::vector<VerificationReport> reports;
  if (!p.x.empty()) {
    CaseParams cp = p.resolve(id);
    cp.engine = parse_engine_opt(o.engine);
    reports.push_back(run_case({id, cp}));
  } else {
    GridSpec g;
    g.n_min = o.n_min.value_or(p.n.value_or(1));
    g.n_max = o.n_max.value_or(p.n.value_or(6));
    if (g.n_min < 1 || g.n_max < g.n_min) throw UsageError("need 1 <= n-min <= n-max");
    g.ks = parse_longs(o.ks);
    g.betas = parse_longs(o.betas);
    g.alphas = parse_longs(p.alpha);
    g.a = p.a;
    g.b = p.b;
    g.c = p.c;
    g.samples = o.samples;
    g.alpha_max = o.alpha_max;
    g.degenerate = !o.no_degenerate;
    g.seed = o.seed;
    g.engine = parse_engine_opt(o.engine);
    g.jobs = o.jobs;
    try {
      reports = run_grid(id, g);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }

  ReportMeta meta;
  meta.identity = to_string(id);
  meta.seed = o.seed;
  meta.timing = !o.no_timing;
  write_output(emit_report(reports, parse_format(o.format), meta), o.out);
  return exit_code(reports);
}

// ---------------------------------------------------------------- det

struct DetOptions {
  std::string file, identity, engine;
  ParamOptions params;
  bool show = false;
};

void print_det(const DetResult& r) {
  std::cout << std::left << std::setw(14) << to_string(r.engine) << to_string(r.value)
            << "   pivots=" << r.stats.pivots << " swaps=" << r.stats.row_swaps
            << " fallbacks=" << r.stats.fallbacks << " ms=" << std::fixed << std::setprecision(3)
            << r.stats.elapsed_ms << '\n';
}

int run_det(const DetOptions& o) {
  if (o.file.empty() == o.identity.empty()) throw UsageError("give exactly one of --file or --identity");
  std::optional<ExactMatrix> m;
  if (!o.file.empty()) {
    try {
      m = read_matrix_file(o.file);
    } catch (const ParseError& e) {
      throw UsageError(o.file + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) +
                       ": " + e.what());
    }
  } else {
    const ClosedFormId id = parse_id(o.identity);
    const IdentityInfo& info = lookup(id);
    if (!info.build) throw UsageError(to_string(id) + " is a path count; use 'hankel verify'");
    CaseParams p = o.params.resolve(id);
    info.validate(p);
    m = info.build(p);
  }
  if (o.show) write_matrix(std::cout, *m);

  if (o.engine != "all") {
    print_det(det(*m, parse_engine_opt(o.engine)));
    return kOk;
  }
  std::optional<Rational> first;
  bool agree = true;
  for (Engine e : kAllEngines) {
    try {
      DetResult r = det(*m, e);
      print_det(r);
      if (first && *first != r.value) agree = false;
      if (!first) first = r.value;
    } catch (const std::exception& ex) {
      std::cout << std::left << std::setw(14) << to_string(e) << "(" << ex.what() << ")\n";
    }
  }
  if (!agree) std::cout << "engines DISAGREE\n";
  return agree ? kOk : kFailed;
}

// ---------------------------------------------------------------- paths

struct PathsOptions {
  std::string starts, ends, preset, words;
  std::optional<long> mu, s;
  std::size_t cap = kDefaultEnumerationCap;
  ParamOptions params;
  std::optional<std::size_t> family_index;
  bool list = false;
};

PathSystemConfig build_config(const PathsOptions& o) {
  const auto& p = o.params;
  if (o.preset.empty()) {
    if (o.starts.empty() || o.ends.empty()) throw UsageError("give --starts and --ends, or --preset");
    PathSystemConfig c;
    c.starts = parse_points(o.starts);
    c.ends = parse_points(o.ends);
    if (c.starts.size() != c.ends.size() || c.starts.empty())
      throw UsageError("--starts and --ends need the same, nonzero, number of points");
    if (o.mu && *o.mu < 1) throw UsageError("--mu must be at least 1");
    c.mu = o.mu;
    return c;
  }
  auto alphas = parse_longs(p.alpha);
  const long n = p.n.value_or(static_cast<long>(alphas.size()));
  const long k = p.k.value_or(2), beta = p.beta.value_or(0);
  if (o.preset == "thm6" || o.preset == "thm6-reduced") {
    auto c = thm6_config(alphas, k, beta, n);
    return o.preset == "thm6" ? c : reduce_forced(c);
  }
  if (o.preset == "prop8") return prop8_config(p.a.value_or(0), p.b.value_or(0), p.c.value_or(0), alphas, n);
  if (o.preset == "thm9-summand") return thm9_summand_config(n, o.s.value_or(0), beta, k);
  if (o.preset == "thm9-reduced") return thm9_reduced_config(n, o.s.value_or(0), beta, k);
  throw UsageError("unknown preset '" + o.preset + "'");
}

int run_paths(const std::string& mode, const PathsOptions& o) {
  const PathSystemConfig c = build_config(o);
  if (mode != "render")
    std::cout << "constraint: " << (c.mu ? "x >= " + std::to_string(*c.mu) + "*y" : "none") << '\n';

  if (mode == "count") {
    for (std::size_t i = 0; i < c.size(); ++i) {
      std::cout << "P" << i << ": " << to_string(c.starts[i]) << " -> " << to_string(c.ends[i]) << "  "
                << to_string(count_paths(c.starts[i], c.ends[i], c.mu)) << '\n';
    }
    return kOk;
  }
  if (mode == "enumerate") {
    for (std::size_t i = 0; i < c.size(); ++i) {
      auto paths = enumerate_paths(c.starts[i], c.ends[i], c.mu, o.cap);
      std::cout << "P" << i << ": " << to_string(c.starts[i]) << " -> " << to_string(c.ends[i]) << "  "
                << paths.size() << " paths\n";
      for (const auto& path : paths) std::cout << "  " << path.word() << '\n';
    }
    return kOk;
  }
  if (mode == "families") {
    const Integer lgv = lgv_determinant(c);
    const Integer brute = count_nonintersecting(c, o.cap);
    std::cout << "lgv determinant: " << to_string(lgv) << '\n'
              << "nonintersecting families: " << to_string(brute) << '\n';
    if (o.list) {
      std::size_t idx = 0;
      for (const auto& fam : enumerate_nonintersecting(c, o.cap)) {
        std::cout << "  #" << idx++ << ':';
        for (const auto& path : fam) std::cout << ' ' << (path.steps.empty() ? "-" : path.word());
        std::cout << '\n';
      }
    }
    return kOk;
  }

  // render
  PathFamily family;
  if (!o.words.empty()) {
    auto words = split(o.words, ';');
    if (words.size() != c.size()) throw UsageError("--paths needs one word per start point");
    for (std::size_t i = 0; i < words.size(); ++i) {
      try {
        family.push_back(LatticePath::from_word(c.starts[i], words[i]));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    if (!is_nonintersecting_family(c, family))
      std::cerr << "note: the given paths do not form a valid nonintersecting family\n";
  } else if (o.family_index) {
    auto all = enumerate_nonintersecting(c, o.cap);
    if (*o.family_index >= all.size())
      throw UsageError("family index out of range; there are " + std::to_string(all.size()));
    family = all[*o.family_index];
  }
  std::cout << render_ascii(c, family);
  return kOk;
}

// ---------------------------------------------------------------- list

std::string needs_text(unsigned needs) {
  std::string s = "n";
  if (needs & kNeedsK) s += " k";
  if (needs & kNeedsBeta) s += " beta";
  if (needs & kNeedsAlphas) s += " alpha[n]";
  if (needs & kNeedsAlphasN1) s += " alpha[n+1]";
  if (needs & kNeedsPathOffsets) s += " a b c";
  if (needs & kNeedsLemmaValues) s += " X A B";
  return s;
}

int run_list() {
  for (const auto& row : registry()) {
    std::cout << std::left << std::setw(12) << to_string(row.id) << row.lhs << '\n'
              << std::setw(12) << "" << "  = " << row.rhs << '\n'
              << std::setw(12) << "" << "  params: " << needs_text(row.needs) << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- bench

struct BenchOptions {
  std::string family, engines, format = "text";
  long n_min = 1, n_max = 8;
  std::size_t reps = kMinBenchReps;
};

int run_bench(const BenchOptions& o) {
  const ClosedFormId id = parse_id(o.family);
  std::vector<Engine> engines;
  if (o.engines.empty()) engines.assign(std::begin(kAllEngines), std::end(kAllEngines));
  for (const auto& e : split(o.engines, ',')) {
    if (e.empty()) continue;
    auto parsed = parse_engine(e);
    if (!parsed) throw UsageError("unknown engine '" + e + "'");
    engines.push_back(*parsed);
  }
  const ReportFormat fmt = parse_format(o.format);
  BenchTable table;
  try {
    table = bench(id, o.n_min, o.n_max, engines, o.reps);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const BenchMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  std::cout << format_bench(table, fmt);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hankel determinant evaluations and lattice path counts"};
  app.require_subcommand(1);

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "check an identity on a parameter grid");
  verify->add_option("identity", vo.id, "identity id, see 'hankel list'")->required();
  vo.params.attach(verify, true);
  verify->add_option("--n-min", vo.n_min, "smallest order (default 1)");
  verify->add_option("--n-max", vo.n_max, "largest order (default 6)");
  verify->add_option("--k", vo.ks, "k values, e.g. 2,3,4 (default 2,3,4)");
  verify->add_option("--beta", vo.betas, "beta values (default: all valid)");
  verify->add_option("--seed", vo.seed, "random seed for alpha sampling")->capture_default_str();
  verify->add_option("--samples", vo.samples, "random alpha vectors per grid point")->capture_default_str();
  verify->add_option("--alpha-max", vo.alpha_max, "largest sampled alpha")->capture_default_str();
  verify->add_flag("--no-degenerate", vo.no_degenerate, "leave out repeated-alpha cases");
  verify->add_option("--engine", vo.engine, "laplace, fraction-free, rational, condensation");
  verify->add_option("--format", vo.format, "text, json or csv")->capture_default_str();
  verify->add_option("--out", vo.out, "write the report to FILE");
  verify->add_flag("--no-timing", vo.no_timing, "write elapsed_ms as 0 for reproducible reports");
  verify->add_option("--jobs", vo.jobs, "worker threads")->capture_default_str();

  DetOptions dopt;
  auto* detc = app.add_subcommand("det", "determinant of a matrix file or identity matrix");
  detc->add_option("--file", dopt.file, "matrix text file");
  detc->add_option("--identity", dopt.identity, "build the identity's matrix");
  dopt.params.attach(detc, false);
  detc->add_option("--engine", dopt.engine, "engine name, or 'all' to compare");
  detc->add_flag("--show", dopt.show, "print the matrix first");

  PathsOptions po;
  auto* paths = app.add_subcommand("paths", "lattice path systems");
  paths->require_subcommand(1);
  std::string paths_mode;
  for (const char* mode : {"count", "enumerate", "families", "render"}) {
    auto* sub = paths->add_subcommand(mode);
    sub->add_option("--starts", po.starts, "start points x,y;x,y;...");
    sub->add_option("--ends", po.ends, "end points x,y;x,y;...");
    sub->add_option("--mu", po.mu, "require x >= mu*y along every path");
    sub->add_option("--cap", po.cap, "enumeration limit")->capture_default_str();
    sub->add_option("--preset", po.preset, "thm6, thm6-reduced, prop8, thm9-summand, thm9-reduced");
    sub->add_option("--s", po.s, "omitted index for thm9 presets");
    po.params.attach(sub, false);
    if (std::string(mode) == "families") sub->add_flag("--list", po.list, "print every family");
    if (std::string(mode) == "render") {
      sub->add_option("--family", po.family_index, "draw the family with this index");
      sub->add_option("--paths", po.words, "draw these step words, e.g. RRU;URR");
    }
    sub->callback([&paths_mode, mode] { paths_mode = mode; });
  }

  BenchOptions bo;
  auto* benchc = app.add_subcommand("bench", "time the determinant engines");
  benchc->add_option("--family", bo.family, "identity id")->required();
  benchc->add_option("--n-min", bo.n_min)->capture_default_str();
  benchc->add_option("--n-max", bo.n_max)->capture_default_str();
  benchc->add_option("--engines", bo.engines, "comma-separated (default: all)");
  benchc->add_option("--reps", bo.reps, "timed repetitions, at least 5")->capture_default_str();
  benchc->add_option("--format", bo.format, "text, json or csv")->capture_default_str();

  auto* list = app.add_subcommand("list", "print the identity registry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) return run_verify(vo);
    if (*detc) return run_det(dopt);
    if (*paths) return run_paths(paths_mode, po);
    if (*benchc) return run_bench(bo);
    if (*list) return run_list();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Refused& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
