#include "hankel/registry.hpp"

#include "hankel/builders.hpp"
#include "hankel/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hankel {

std::string describe(const CaseParams& p) {
  std::ostringstream out;
  out << "n=" << p.n;
  if (p.k) out << " k=" << *p.k;
  if (p.beta) out << " beta=" << *p.beta;
  if (!p.alphas.empty()) out << " alpha=" << format_alphas(p.alphas);
  if (p.a) out << " a=" << *p.a;
  if (p.b) out << " b=" << *p.b;
  if (p.c) out << " c=" << *p.c;
  auto list = [&](const char* name, const std::vector<Rational>& v) {
    if (v.empty()) return;
    out << ' ' << name << '=';
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << to_string(v[i]);
  };
  list("X", p.x);
  list("A", p.lemma_a);
  list("B", p.lemma_b);
  if (p.engine) out << " engine=" << to_string(*p.engine);
  return out.str();
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

long need_k(const CaseParams& p) {
  require(p.k.has_value(), "k is required");
  require(*p.k >= 2, "k must be at least 2");
  return *p.k;
}

long need_beta(const CaseParams& p, bool bounded) {
  long k = need_k(p);
  require(p.beta.has_value(), "beta is required");
  require(*p.beta >= 0, "beta must be nonnegative");
  if (bounded) require(*p.beta <= k - 1, "beta must lie in 0..k-1");
  return *p.beta;
}

void need_alphas(const CaseParams& p, std::size_t len, long min_value) {
  require(p.alphas.size() == len,
          "expected " + std::to_string(len) + " alpha values, got " + std::to_string(p.alphas.size()));
  for (long a : p.alphas)
    require(a >= min_value, "alpha values must be at least " + std::to_string(min_value));
}

void need_n(const CaseParams& p) { require(p.n >= 1, "n must be at least 1"); }

std::size_t order(const CaseParams& p) { return static_cast<std::size_t>(p.n); }

std::vector<IdentityInfo> make_registry() {
  using K = IdentityKind;
  std::vector<IdentityInfo> rows;

  rows.push_back({{K::Eq1_1}, "det(C_{i+j})", "1", kNeedsNothing, need_n,
                  [](const CaseParams& p) { return build_hankel(SequenceSpec::catalan(), p.n, 0); },
                  [](const CaseParams& p) { return Rational(rhs_eq1_1(p.n)); }});
  rows.push_back({{K::Eq1_2}, "det(C_{i+j+1})", "1", kNeedsNothing, need_n,
                  [](const CaseParams& p) { return build_hankel(SequenceSpec::catalan(), p.n, 1); },
                  [](const CaseParams& p) { return Rational(rhs_eq1_2(p.n)); }});
  rows.push_back({{K::Eq1_3}, "det(C_{i+j+2})", "n+1", kNeedsNothing, need_n,
                  [](const CaseParams& p) { return build_hankel(SequenceSpec::catalan(), p.n, 2); },
                  [](const CaseParams& p) { return Rational(rhs_eq1_3(p.n)); }});
  rows.push_back({{K::Eq1_4}, "det(C_{i+j} + C_{i+j+1})", "F_{2n}", kNeedsNothing, need_n,
                  [](const CaseParams& p) {
                    return ExactMatrix::generate(
                        order(p),
                        [](std::size_t i, std::size_t j) {
                          long m = static_cast<long>(i + j);
                          return Rational(catalan(m) + catalan(m + 1));
                        },
                        {"catalan-sum", "n=" + std::to_string(p.n)});
                  },
                  [](const CaseParams& p) { return Rational(rhs_eq1_4(p.n)); }});
  rows.push_back({{K::Eq1_6}, "det(C_{(k-1)i+j,k} + C_{(k-1)(i+1)+j,k})",
                  "sum_{s=0..n} C((k-1)s+n, n-s)", kNeedsK,
                  [](const CaseParams& p) { need_n(p); need_k(p); },
                  [](const CaseParams& p) {
                    AlphaVector alphas(static_cast<std::size_t>(p.n) + 1);
                    for (std::size_t i = 0; i < alphas.size(); ++i) alphas[i] = static_cast<long>(i);
                    return build_cor7_matrix(alphas, *p.k, 0, p.n);
                  },
                  [](const CaseParams& p) { return Rational(rhs_eq1_6(*p.k, p.n)); }});
  rows.push_back({{K::Eq1_7}, "det(C_{(k-1)i+j,k} + C_{(k-1)i+j+1,k})",
                  "sum_{s=0..n} C(floor(s/(k-1))+n, n-s)", kNeedsK,
                  [](const CaseParams& p) { need_n(p); need_k(p); },
                  [](const CaseParams& p) { return build_thm9_matrix(*p.k, 0, p.n); },
                  [](const CaseParams& p) { return Rational(rhs_eq1_7(*p.k, p.n)); }});
  rows.push_back({{K::Thm3}, "det(C_{alpha_i+j})",
                  "prod_{i<j}(alpha_j-alpha_i) prod_i (i+n)!(2alpha_i)!/((2i)! alpha_i! (alpha_i+n)!)",
                  kNeedsAlphas,
                  [](const CaseParams& p) { need_n(p); need_alphas(p, order(p), 0); },
                  [](const CaseParams& p) { return build_thm3_matrix(p.alphas, p.n); },
                  [](const CaseParams& p) { return rhs_thm3(p.alphas, p.n); }});
  rows.push_back({{K::Cor5}, "det(C_{alpha_i+j} + C_{alpha_{i+1}+j})",
                  "sum over s of the alpha-product with alpha_s removed", kNeedsAlphasN1,
                  [](const CaseParams& p) { need_n(p); need_alphas(p, order(p) + 1, 0); },
                  [](const CaseParams& p) { return build_cor5_matrix(p.alphas, p.n); },
                  [](const CaseParams& p) { return rhs_cor5(p.alphas, p.n); }});
  rows.push_back({{K::Thm6}, "det(C_{(k-1)alpha_i+j+beta,k})",
                  "prod_{i<j}(alpha_j-alpha_i) prod_i ((k-1)i+beta+n)!(k alpha_i+beta)!/((ki+beta)! alpha_i! ((k-1)alpha_i+beta+n)!)",
                  kNeedsK | kNeedsBeta | kNeedsAlphas,
                  [](const CaseParams& p) {
                    need_n(p);
                    need_beta(p, true);
                    need_alphas(p, order(p), 0);
                  },
                  [](const CaseParams& p) { return build_thm6_matrix(p.alphas, *p.k, *p.beta, p.n); },
                  [](const CaseParams& p) { return rhs_thm6(p.alphas, *p.k, *p.beta, p.n); }});
  rows.push_back({{K::Eq4_3}, "det(C(k alpha_i+j+beta, alpha_i-1))",
                  "beta!/(beta+n)! prod_{i<j}(alpha_j-alpha_i) prod_i ((k-1)i+beta+n)!(k alpha_i+beta)!/((ki+beta)! (alpha_i-1)! ((k-1)alpha_i+beta+n)!)",
                  kNeedsK | kNeedsBeta | kNeedsAlphas,
                  [](const CaseParams& p) {
                    need_n(p);
                    need_beta(p, false);
                    need_alphas(p, order(p), 1);
                  },
                  [](const CaseParams& p) { return build_eq43_matrix(p.alphas, *p.k, *p.beta, p.n); },
                  [](const CaseParams& p) { return rhs_eq43(p.alphas, *p.k, *p.beta, p.n); }});
  rows.push_back({{K::Cor7}, "det(C_{(k-1)alpha_i+j+beta,k} + C_{(k-1)alpha_{i+1}+j+beta,k})",
                  "sum over s of the Thm6 product with alpha_s removed",
                  kNeedsK | kNeedsBeta | kNeedsAlphasN1,
                  [](const CaseParams& p) {
                    need_n(p);
                    need_beta(p, true);
                    need_alphas(p, order(p) + 1, 0);
                  },
                  [](const CaseParams& p) { return build_cor7_matrix(p.alphas, *p.k, *p.beta, p.n); },
                  [](const CaseParams& p) { return rhs_cor7(p.alphas, *p.k, *p.beta, p.n); }});
  rows.push_back({{K::Thm9}, "det(C_{(k-1)i+j+beta,k} + C_{(k-1)i+j+beta+1,k})",
                  "sum_{s=0..n} C(floor((s+beta)/(k-1))+n, n-s)", kNeedsK | kNeedsBeta,
                  [](const CaseParams& p) { need_n(p); need_beta(p, true); },
                  [](const CaseParams& p) { return build_thm9_matrix(*p.k, *p.beta, p.n); },
                  [](const CaseParams& p) { return Rational(rhs_thm9(*p.k, *p.beta, p.n)); }});
  rows.push_back({{K::Prop8}, "#families (a,b-i) -> (alpha_i,c), no constraint",
                  "prod_{i<j}(alpha_j-alpha_i) prod_i (alpha_i+c-a-b)!/((alpha_i-a)!(c-b+i)!)",
                  kNeedsAlphas | kNeedsPathOffsets,
                  [](const CaseParams& p) {
                    need_n(p);
                    require(p.a && p.b && p.c, "a, b and c are required");
                    require(p.alphas.size() == order(p), "expected n alpha values");
                    require(*p.a <= p.alphas.front(), "need a <= alpha_0");
                    require(std::is_sorted(p.alphas.begin(), p.alphas.end()),
                            "alpha values must be nondecreasing");
                    require(*p.b <= *p.c, "need b <= c");
                  },
                  {},
                  [](const CaseParams& p) { return rhs_prop8(*p.a, *p.b, *p.c, p.alphas, p.n); }});
  for (Thm10Variant v : kAllThm10Variants) {
    rows.push_back({{K::Thm10, v}, "det of the ternary-number Hankel matrix",
                    "leading constant times prod (27/4)^{2i} Pochhammer ratios", kNeedsNothing, need_n,
                    [v](const CaseParams& p) { return build_thm10_matrix(v, p.n); },
                    [v](const CaseParams& p) { return rhs_thm10(v, p.n); }});
  }
  rows.push_back({{K::Lemma1}, "det((X_i+A_{n-1})...(X_i+A_{j+1})(X_i+B_j)...(X_i+B_1))",
                  "prod_{i<j}(X_i-X_j) prod_{1<=i<=j<=n-1}(B_i-A_j)", kNeedsLemmaValues,
                  [](const CaseParams& p) {
                    need_n(p);
                    require(p.x.size() == order(p), "expected n values of X");
                    require(p.lemma_a.size() + 1 == order(p) && p.lemma_b.size() + 1 == order(p),
                            "expected n-1 values each of A and B");
                  },
                  [](const CaseParams& p) { return build_lemma1_matrix(p.x, p.lemma_a, p.lemma_b); },
                  [](const CaseParams& p) { return rhs_lemma1(p.x, p.lemma_a, p.lemma_b); }});
  return rows;
}

}  // namespace

std::span<const IdentityInfo> registry() {
  static const std::vector<IdentityInfo> rows = make_registry();
  return rows;
}

const IdentityInfo& lookup(const ClosedFormId& id) {
  for (const auto& row : registry())
    if (row.id.kind == id.kind && (id.kind != IdentityKind::Thm10 || row.id.variant == id.variant))
      return row;
  throw std::invalid_argument("unknown identity " + to_string(id));
}

CaseParams default_params(const ClosedFormId& id, long n) {
  CaseParams p;
  p.n = n;
  const unsigned needs = lookup(id).needs;
  if (needs & kNeedsK) p.k = 3;
  if (needs & kNeedsBeta) p.beta = 1;
  if (needs & (kNeedsAlphas | kNeedsAlphasN1)) {
    std::size_t len = static_cast<std::size_t>(n) + ((needs & kNeedsAlphasN1) ? 1 : 0);
    for (std::size_t i = 0; i < len; ++i) p.alphas.push_back(2 * static_cast<long>(i) + 1);
  }
  if (needs & kNeedsPathOffsets) {
    p.a = 0;
    p.b = 0;
    p.c = 2;
  }
  if (needs & kNeedsLemmaValues) {
    for (long i = 0; i < n; ++i) p.x.emplace_back(i);
    for (long j = 1; j < n; ++j) {
      p.lemma_a.emplace_back(j + 1);
      p.lemma_b.push_back(make_rational(2 * j - 1, 2));
    }
  }
  return p;
}

}  // namespace hankel
