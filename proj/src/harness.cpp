#include "hankel/harness.hpp"

#include "hankel/errors.hpp"
#include "hankel/lgv.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

namespace hankel {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::RhsUndefined: return "rhs-undefined";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

VerificationReport run_case(const IdentityCase& c) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  VerificationReport r;
  r.identity_case = c;
  auto finish = [&](Status s, std::string reason = {}) {
    r.status = s;
    r.reason = std::move(reason);
    r.elapsed_ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();
    return r;
  };

  const IdentityInfo* info = nullptr;
  try {
    info = &lookup(c.id);
    info->validate(c.params);
  } catch (const std::exception& e) {
    return finish(Status::Skipped, e.what());
  }

  const CaseParams& p = c.params;
  try {
    if (info->build) {
      DetResult d = det(info->build(p), p.engine);
      r.lhs = d.value;
      r.engine = std::string(to_string(d.engine));
      r.stats = d.stats;
    } else {
      // Path-count identities: brute-force enumeration is the left side.
      auto config = prop8_config(*p.a, *p.b, *p.c, p.alphas, p.n);
      r.lhs = Rational(count_nonintersecting(config));
      r.engine = "brute-force";
    }
  } catch (const DomainError& e) {
    return finish(Status::Skipped, e.what());
  } catch (const Refused& e) {
    return finish(Status::Skipped, e.what());
  }

  try {
    r.rhs = info->rhs_value(p);
  } catch (const DomainError& e) {
    return finish(Status::RhsUndefined, e.what());
  }
  return finish(*r.lhs == *r.rhs ? Status::Pass : Status::Fail);
}

namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Floyd's sampling of `len` distinct values from [lo, hi], returned sorted.
std::vector<long> increasing_sample(Rng& rng, std::size_t len, long lo, long hi) {
  std::set<long> chosen;
  const long span = hi - lo + 1;
  for (long j = span - static_cast<long>(len); j < span; ++j) {
    long t = uniform(rng, 0, j);
    chosen.insert(chosen.count(lo + t) ? lo + j : lo + t);
  }
  return {chosen.begin(), chosen.end()};
}

Rational small_rational(Rng& rng) {
  return make_rational(uniform(rng, -9, 9), uniform(rng, 1, 5));
}

// All nondecreasing vectors of length len over [lo, hi], lexicographic.
void nondecreasing(std::size_t len, long lo, long hi, std::vector<long>& prefix,
                   std::vector<std::vector<long>>& out) {
  if (prefix.size() == len) {
    out.push_back(prefix);
    return;
  }
  for (long v = prefix.empty() ? lo : prefix.back(); v <= hi; ++v) {
    prefix.push_back(v);
    nondecreasing(len, lo, hi, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<IdentityCase> expand_grid(const ClosedFormId& id, const GridSpec& spec) {
  const IdentityInfo& info = lookup(id);
  const unsigned needs = info.needs;
  const bool n_plus_one = needs & kNeedsAlphasN1;
  Rng rng(spec.seed);
  std::vector<IdentityCase> cases;

  long n_min = spec.n_min, n_max = spec.n_max;
  if (!spec.alphas.empty()) {
    n_min = n_max = static_cast<long>(spec.alphas.size()) - (n_plus_one ? 1 : 0);
  }

  std::vector<long> ks = spec.ks;
  if (!(needs & kNeedsK)) ks = {0};
  else if (ks.empty()) ks = {2, 3, 4};

  for (long n = n_min; n <= n_max; ++n) {
    for (long k : ks) {
      std::vector<long> betas = spec.betas;
      if (!(needs & kNeedsBeta)) {
        betas = {0};
      } else if (betas.empty()) {
        // Eq4_3 admits every beta >= 0; one value past k-1 exercises that.
        const long top = id.kind == IdentityKind::Eq4_3 ? k : k - 1;
        for (long b = 0; b <= top; ++b) betas.push_back(b);
      }
      for (long beta : betas) {
        CaseParams base;
        base.n = n;
        if (needs & kNeedsK) base.k = k;
        if (needs & kNeedsBeta) base.beta = beta;
        base.engine = spec.engine;
        auto push = [&](CaseParams p) { cases.push_back({id, std::move(p)}); };

        if (needs & kNeedsPathOffsets) {
          base.a = spec.a.value_or(0);
          base.b = spec.b.value_or(0);
          if (!spec.alphas.empty()) {
            base.alphas = spec.alphas;
            base.c = spec.c.value_or(*base.b + spec.prop8_height);
            push(base);
            continue;
          }
          std::vector<std::vector<long>> vectors;
          std::vector<long> prefix;
          nondecreasing(static_cast<std::size_t>(n), *base.a, *base.a + spec.prop8_span, prefix, vectors);
          std::vector<long> cs;
          if (spec.c) cs = {*spec.c};
          else
            for (long h = 0; h <= spec.prop8_height; ++h) cs.push_back(*base.b + h);
          for (long c : cs) {
            for (const auto& v : vectors) {
              CaseParams p = base;
              p.c = c;
              p.alphas = v;
              push(std::move(p));
            }
          }
        } else if (needs & (kNeedsAlphas | kNeedsAlphasN1)) {
          if (!spec.alphas.empty()) {
            base.alphas = spec.alphas;
            push(base);
            continue;
          }
          const std::size_t len = static_cast<std::size_t>(n) + (n_plus_one ? 1 : 0);
          const long lo = id.kind == IdentityKind::Eq4_3 ? 1 : 0;
          if (spec.alpha_max - lo + 1 < static_cast<long>(len)) {
            throw std::invalid_argument("alpha-max too small for " + std::to_string(len) +
                                        " distinct alpha values");
          }
          std::vector<long> first;
          for (std::size_t s = 0; s < spec.samples; ++s) {
            CaseParams p = base;
            p.alphas = increasing_sample(rng, len, lo, spec.alpha_max);
            if (s == 0) first = p.alphas;
            push(std::move(p));
          }
          if (spec.degenerate && len >= 2) {
            if (first.empty()) first = increasing_sample(rng, len, lo, spec.alpha_max);
            for (std::size_t pos = 0; pos + 1 < len; ++pos) {
              CaseParams p = base;
              p.alphas = first;
              p.alphas[pos + 1] = p.alphas[pos];
              push(std::move(p));
            }
          }
        } else if (needs & kNeedsLemmaValues) {
          for (std::size_t s = 0; s < spec.samples; ++s) {
            CaseParams p = base;
            for (long i = 0; i < n; ++i) p.x.push_back(small_rational(rng));
            for (long j = 1; j < n; ++j) {
              p.lemma_a.push_back(small_rational(rng));
              p.lemma_b.push_back(small_rational(rng));
            }
            push(std::move(p));
          }
          if (spec.degenerate && n >= 2) {
            CaseParams p = base;
            for (long i = 0; i < n; ++i) p.x.push_back(small_rational(rng));
            p.x[1] = p.x[0];
            for (long j = 1; j < n; ++j) {
              p.lemma_a.push_back(small_rational(rng));
              p.lemma_b.push_back(small_rational(rng));
            }
            push(std::move(p));
          }
        } else {
          push(base);
        }
      }
    }
  }
  return cases;
}

std::vector<VerificationReport> run_cases(std::span<const IdentityCase> cases, unsigned jobs) {
  std::vector<VerificationReport> out(cases.size());
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(cases.size())));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < cases.size(); ++i) out[i] = run_case(cases[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < cases.size(); i = next++) out[i] = run_case(cases[i]);
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

std::vector<VerificationReport> run_grid(const ClosedFormId& id, const GridSpec& spec) {
  const auto cases = expand_grid(id, spec);
  return run_cases(cases, spec.jobs);
}

RunSummary summarize(std::span<const VerificationReport> reports) {
  RunSummary s;
  for (const auto& r : reports) {
    switch (r.status) {
      case Status::Pass: ++s.pass; break;
      case Status::Fail: ++s.fail; break;
      case Status::RhsUndefined: ++s.rhs_undefined; break;
      case Status::Skipped: ++s.skipped; break;
    }
  }
  return s;
}

int exit_code(std::span<const VerificationReport> reports) {
  const RunSummary s = summarize(reports);
  if (s.fail > 0) return 1;
  if (s.skipped > 0) return 2;
  return 0;
}

}  // namespace hankel
