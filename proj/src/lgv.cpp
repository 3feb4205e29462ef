#include "hankel/lgv.hpp"

#include "hankel/determinants.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hankel {

std::string to_string(const LatticePoint& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

LatticePoint LatticePath::end() const {
  LatticePoint p = start;
  for (Step s : steps) (s == Step::Right ? p.x : p.y) += 1;
  return p;
}

std::vector<LatticePoint> LatticePath::points() const {
  std::vector<LatticePoint> pts;
  pts.reserve(steps.size() + 1);
  LatticePoint p = start;
  pts.push_back(p);
  for (Step s : steps) {
    (s == Step::Right ? p.x : p.y) += 1;
    pts.push_back(p);
  }
  return pts;
}

std::string LatticePath::word() const {
  std::string w;
  w.reserve(steps.size());
  for (Step s : steps) w.push_back(static_cast<char>(s));
  return w;
}

LatticePath LatticePath::from_word(LatticePoint start, std::string_view word) {
  LatticePath path{start, {}};
  for (char c : word) {
    if (c == 'R')
      path.steps.push_back(Step::Right);
    else if (c == 'U')
      path.steps.push_back(Step::Up);
    else
      throw std::invalid_argument("path word may only contain R and U, got '" + std::string(word) + "'");
  }
  return path;
}

CapExceeded::CapExceeded(const Integer& count, std::size_t cap)
    : Refused("enumeration of " + to_string(count) + " items exceeds cap " + std::to_string(cap)),
      count_(count) {}

bool satisfies(const LatticePoint& p, std::optional<long> mu) { return !mu || p.x >= *mu * p.y; }

namespace {

// Dense table over the rectangle spanned by a and e.
class Box {
 public:
  Box(LatticePoint a, LatticePoint e) : a_(a), w_(e.x - a.x + 1), h_(e.y - a.y + 1) {}
  bool empty() const { return w_ <= 0 || h_ <= 0; }
  std::size_t cells() const { return static_cast<std::size_t>(w_ * h_); }
  std::size_t index(long x, long y) const {
    return static_cast<std::size_t>((y - a_.y) * w_ + (x - a_.x));
  }
  long width() const { return w_; }
  long height() const { return h_; }
  LatticePoint origin() const { return a_; }

 private:
  LatticePoint a_;
  long w_;
  long h_;
};

// ways[idx(p)] = number of admissible paths p -> e.
std::vector<Integer> ways_to_end(const Box& box, LatticePoint e, std::optional<long> mu) {
  std::vector<Integer> ways(box.cells());
  const LatticePoint a = box.origin();
  for (long y = e.y; y >= a.y; --y) {
    for (long x = e.x; x >= a.x; --x) {
      if (!satisfies({x, y}, mu)) continue;
      Integer& w = ways[box.index(x, y)];
      if (x == e.x && y == e.y) {
        w = 1;
        continue;
      }
      if (x < e.x) w += ways[box.index(x + 1, y)];
      if (y < e.y) w += ways[box.index(x, y + 1)];
    }
  }
  return ways;
}

struct IndexedPath {
  std::vector<std::size_t> cells;  // indices into the shared bounding box
};

// Enumerates the per-pair path lists and maps every point into one bounding
// box so disjointness checks are array lookups.
struct FamilySearch {
  std::vector<std::vector<LatticePath>> candidates;
  std::vector<std::vector<IndexedPath>> indexed;
  std::size_t cells = 0;

  FamilySearch(const PathSystemConfig& config, std::size_t cap) {
    if (config.starts.size() != config.ends.size()) {
      throw std::invalid_argument("configuration needs as many starts as ends");
    }
    const std::size_t n = config.size();
    candidates.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      candidates.push_back(enumerate_paths(config.starts[i], config.ends[i], config.mu, cap));
    }
    if (n == 0) return;
    long x0 = config.starts[0].x, y0 = config.starts[0].y, x1 = x0, y1 = y0;
    for (const auto* pts : {&config.starts, &config.ends}) {
      for (const auto& p : *pts) {
        x0 = std::min(x0, p.x);
        y0 = std::min(y0, p.y);
        x1 = std::max(x1, p.x);
        y1 = std::max(y1, p.y);
      }
    }
    Box box({x0, y0}, {x1, y1});
    cells = box.cells();
    indexed.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& path : candidates[i]) {
        IndexedPath ip;
        for (const auto& p : path.points()) ip.cells.push_back(box.index(p.x, p.y));
        indexed[i].push_back(std::move(ip));
      }
    }
  }

  // Calls visit(choice) for every disjoint family, choice[i] indexing candidates[i].
  template <typename Visit>
  void run(Visit&& visit) {
    const std::size_t n = candidates.size();
    std::vector<char> used(cells, 0);
    std::vector<std::size_t> choice(n, 0);
    recurse(0, used, choice, visit);
  }

 private:
  template <typename Visit>
  void recurse(std::size_t level, std::vector<char>& used, std::vector<std::size_t>& choice,
               Visit& visit) {
    if (level == indexed.size()) {
      visit(choice);
      return;
    }
    for (std::size_t c = 0; c < indexed[level].size(); ++c) {
      const auto& path = indexed[level][c];
      if (std::any_of(path.cells.begin(), path.cells.end(), [&](std::size_t idx) { return used[idx]; }))
        continue;
      for (auto idx : path.cells) used[idx] = 1;
      choice[level] = c;
      recurse(level + 1, used, choice, visit);
      for (auto idx : path.cells) used[idx] = 0;
    }
  }
};

void require_dual_params(long n, long s, long beta, long k) {
  if (k < 2) throw DomainError("k must be >= 2");
  if (beta < 0 || beta > k - 1) throw DomainError("beta must satisfy 0 <= beta <= k-1");
  if (s < 0 || s > n) throw DomainError("s must satisfy 0 <= s <= n");
}

}  // namespace

Integer count_paths(LatticePoint a, LatticePoint e, std::optional<long> mu) {
  if (mu && *mu < 1) throw DomainError("slope constraint mu must be >= 1");
  Box box(a, e);
  if (box.empty() || !satisfies(a, mu) || !satisfies(e, mu)) return 0;
  return ways_to_end(box, e, mu)[box.index(a.x, a.y)];
}

std::vector<LatticePath> enumerate_paths(LatticePoint a, LatticePoint e, std::optional<long> mu,
                                         std::size_t cap) {
  const Integer total = count_paths(a, e, mu);
  if (total > cap) throw CapExceeded(total, cap);
  std::vector<LatticePath> out;
  if (total == 0) return out;
  out.reserve(total.get_ui());

  Box box(a, e);
  const auto ways = ways_to_end(box, e, mu);
  const auto reachable = [&](long x, long y) {
    return x <= e.x && y <= e.y && ways[box.index(x, y)] != 0;
  };

  LatticePath current{a, {}};
  // Depth-first with R before U yields lexicographic order.
  auto walk = [&](auto& self, LatticePoint p) -> void {
    if (p == e) {
      out.push_back(current);
      return;
    }
    if (reachable(p.x + 1, p.y)) {
      current.steps.push_back(Step::Right);
      self(self, {p.x + 1, p.y});
      current.steps.pop_back();
    }
    if (reachable(p.x, p.y + 1)) {
      current.steps.push_back(Step::Up);
      self(self, {p.x, p.y + 1});
      current.steps.pop_back();
    }
  };
  walk(walk, a);
  return out;
}

Integer count_nonintersecting(const PathSystemConfig& config, std::size_t cap) {
  FamilySearch search(config, cap);
  unsigned long count = 0;
  search.run([&](const std::vector<std::size_t>&) { ++count; });
  return Integer(count);
}

std::vector<PathFamily> enumerate_nonintersecting(const PathSystemConfig& config, std::size_t cap) {
  FamilySearch search(config, cap);
  std::vector<PathFamily> families;
  search.run([&](const std::vector<std::size_t>& choice) {
    if (families.size() >= cap) throw CapExceeded(Integer(cap) + 1, cap);
    PathFamily family;
    family.reserve(choice.size());
    for (std::size_t i = 0; i < choice.size(); ++i) family.push_back(search.candidates[i][choice[i]]);
    families.push_back(std::move(family));
  });
  return families;
}

bool is_nonintersecting_family(const PathSystemConfig& config, std::span<const LatticePath> family) {
  if (family.size() != config.size()) return false;
  std::set<LatticePoint> seen;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].start != config.starts[i] || family[i].end() != config.ends[i]) return false;
    for (const auto& p : family[i].points()) {
      if (!satisfies(p, config.mu)) return false;
      if (!seen.insert(p).second) return false;
    }
  }
  return true;
}

Integer lgv_determinant(const PathSystemConfig& config) {
  const std::size_t n = config.size();
  if (config.ends.size() != n) throw std::invalid_argument("configuration needs as many starts as ends");
  if (n == 0) return 1;
  auto m = ExactMatrix::generate(
      n,
      [&](std::size_t i, std::size_t j) -> Rational {
        return Rational(count_paths(config.starts[j], config.ends[i], config.mu));
      },
      {"lgv", std::to_string(n) + " paths"});
  return det_fraction_free(m);
}

PathSystemConfig thm6_config(std::span<const long> alphas, long k, long beta, long n) {
  if (k < 2) throw DomainError("k must be >= 2");
  if (beta < 0) throw DomainError("beta must be >= 0");
  if (n < 1 || alphas.size() != static_cast<std::size_t>(n)) {
    throw DomainError("expected " + std::to_string(n) + " alpha values");
  }
  PathSystemConfig config;
  config.mu = k - 1;
  for (long i = 0; i < n; ++i) {
    const long a = alphas[i];
    if (a < 0) throw DomainError("alpha values must be >= 0");
    config.starts.push_back({-(k - 1) * a, -a});
    config.ends.push_back({i + beta, (i + beta) / (k - 1)});
  }
  config.thm6 = Thm6Origin{{alphas.begin(), alphas.end()}, k, beta, false};
  return config;
}

PathSystemConfig reduce_forced(const PathSystemConfig& config) {
  if (!config.thm6) {
    throw Refused("reduce_forced needs a configuration built by thm6_config");
  }
  const auto& origin = *config.thm6;
  PathSystemConfig reduced = config;
  const long height = origin.beta / (origin.k - 1);
  for (std::size_t i = 0; i < reduced.ends.size(); ++i) {
    reduced.ends[i] = {static_cast<long>(i) + origin.beta, height};
  }
  reduced.thm6->reduced = true;
  return reduced;
}

PathSystemConfig prop8_config(long a, long b, long c, std::span<const long> alphas, long n) {
  if (n < 1 || alphas.size() != static_cast<std::size_t>(n)) {
    throw DomainError("expected " + std::to_string(n) + " alpha values");
  }
  PathSystemConfig config;
  for (long i = 0; i < n; ++i) {
    config.starts.push_back({a, b - i});
    config.ends.push_back({alphas[i], c});
  }
  return config;
}

PathSystemConfig thm9_summand_config(long n, long s, long beta, long k) {
  require_dual_params(n, s, beta, k);
  PathSystemConfig config;
  config.mu = k - 1;
  for (long i = 0; i < n; ++i) {
    const long e = i + (i >= s ? 1 : 0) + beta;
    config.starts.push_back({-(k - 1) * i, -i});
    config.ends.push_back({e, e / (k - 1)});
  }
  return config;
}

PathSystemConfig thm9_reduced_config(long n, long s, long beta, long k) {
  require_dual_params(n, s, beta, k);
  PathSystemConfig config;
  const long height = (s + beta) / (k - 1);
  for (long i = s; i < n; ++i) {
    config.starts.push_back({s + beta, -i});
    config.ends.push_back({i + beta + 1, height});
  }
  return config;
}

Integer dual_path_count(long n, long s, long beta, long k) {
  require_dual_params(n, s, beta, k);
  return binomial_int((s + beta) / (k - 1) + n, n - s);
}

std::pair<LatticePoint, LatticePoint> dual_path_endpoints(long n, long s, long beta, long k) {
  require_dual_params(n, s, beta, k);
  return {{s + beta, (s + beta) / (k - 1)}, {n + beta, -n}};
}

Integer count_down_paths(LatticePoint s, LatticePoint t) {
  if (s.y == t.y) return s.x == t.x ? 1 : 0;
  if (s.y < t.y || s.x > t.x) return 0;
  return count_down_paths({s.x, s.y - 1}, t) + count_down_paths({s.x + 1, s.y - 1}, t);
}

std::vector<LatticePoint> dual_path(std::span<const LatticePath> family, LatticePoint s,
                                    LatticePoint t) {
  std::set<LatticePoint> occupied;
  for (const auto& path : family)
    for (const auto& p : path.points()) occupied.insert(p);
  std::vector<LatticePoint> trace{s};
  LatticePoint p = s;
  while (p.y > t.y) {
    if (occupied.contains(p)) ++p.x;
    --p.y;
    trace.push_back(p);
  }
  return trace;
}

}  // namespace hankel
