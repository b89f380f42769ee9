#include "starcount/advantage.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "starcount/bigint.hpp"
#include "starcount/counting.hpp"

namespace starcount {

namespace {

constexpr double kLogHuge = 690.77552789821368;  // log(1e300)
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_p(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie in (0, 1)");
}

double log_c(double p) { return std::log((1.0 - p) / p); }

double from_log(double lg, bool& log_space) {
  if (lg > kLogHuge) {
    log_space = true;
    return std::numeric_limits<double>::infinity();
  }
  return std::exp(lg);
}

// log of sum exp(x_i), in the given order.
double log_sum_exp(const std::vector<double>& logs) {
  double mx = kNegInf;
  for (double x : logs) mx = std::max(mx, x);
  if (mx == kNegInf) return kNegInf;
  double s = 0.0;
  for (double x : logs) s += std::exp(x - mx);
  return mx + std::log(s);
}

double star_aut(int t) {
  return t == 1 ? 2.0 : std::tgamma(static_cast<double>(t) + 1.0);
}

}  // namespace

ShapeMoments shape_moments(const Shape& shape, const Graph& h, std::uint64_t n, double p,
                           std::uint64_t work_limit) {
  check_p(p);
  CopyCounter counter(h, work_limit);
  const double aut = static_cast<double>(shape.aut_count());
  const double lc = log_c(p);
  ShapeMoments m;
  m.eq_second = std::exp(log_big(count_in_complete(shape, n)) - std::log(aut));
  const BigInt& msh = counter.count(shape);
  m.ep_mean = msh.is_zero()
                  ? 0.0
                  : std::exp(log_big(msh) - std::log(aut) + 0.5 * shape.edge_count() * lc);
  return m;
}

double shape_advantage(const Shape& shape, const Graph& h, std::uint64_t n, double p,
                       std::uint64_t work_limit) {
  check_p(p);
  CopyCounter counter(h, work_limit);
  const BigInt& msh = counter.count(shape);
  if (msh.is_zero()) return 0.0;
  const double lg = log_big(msh) + 0.5 * shape.edge_count() * log_c(p) -
                    0.5 * (log_big(count_in_complete(shape, n)) +
                           std::log(static_cast<double>(shape.aut_count())));
  return std::exp(lg);
}

StarCriterion star_criterion(const DegreeProfile& profile, std::uint64_t n, double p, int D) {
  check_p(p);
  if (D < 1) throw std::invalid_argument("D must be at least 1");
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  const double lc = log_c(p);
  const double ln = std::log(static_cast<double>(n));
  StarCriterion out;
  for (int t = 1; t <= D; ++t) {
    BigInt sum_pow = 0, sum_ff = 0;
    for (const auto& [d, c] : profile.classes()) {
      sum_pow += boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(t)) * c;
      sum_ff += falling_factorial(d, t) * c;
    }
    const double norm = 0.5 * (1.0 + t) * ln - 0.5 * t * lc;
    StarTerm term;
    term.t = t;
    term.log_surrogate = log_big(sum_pow) - norm;
    const double log_ff = log_big(sum_ff) - norm;
    const BigInt ms = falling_factorial(n, t + 1);
    // With fewer than t+1 vertices there is no t-star in K_n and the statistic vanishes.
    term.log_exact_adv = ms.is_zero() ? kNegInf
                                      : log_big(sum_ff) + 0.5 * t * lc -
                                            0.5 * (log_big(ms) + std::log(star_aut(t)));
    term.surrogate = from_log(term.log_surrogate, out.log_space);
    term.ff_surrogate = from_log(log_ff, out.log_space);
    term.exact_adv = from_log(term.log_exact_adv, out.log_space);
    term.aut_rescaled_adv =
        from_log(term.log_exact_adv + 0.5 * std::log(star_aut(t)), out.log_space);
    out.per_t.push_back(term);
  }
  // Values within 1e-12 (relative) count as ties and go to the smaller t.
  int best = 0;
  for (int i = 1; i < D; ++i)
    if (out.per_t[i].log_surrogate > out.per_t[best].log_surrogate + 1e-12) best = i;
  out.t_star = best + 1;
  return out;
}

double total_advantage(const Graph& h, std::uint64_t n, double p, int D,
                       std::uint64_t work_limit) {
  check_p(p);
  if (D < 1) throw std::invalid_argument("D must be at least 1");
  if (static_cast<std::uint64_t>(h.without_isolated().n()) > n)
    throw EmbeddingError("H has more vertices than the ambient graph");
  const auto shapes = enumerate_shapes(D);
  CopyCounter counter(h, work_limit);
  const double lc = log_c(p);
  std::vector<double> logs;
  for (const auto& s : shapes) {
    const BigInt& msh = counter.count(s);
    if (msh.is_zero()) continue;
    logs.push_back(2.0 * log_big(msh) + s.edge_count() * lc -
                   log_big(count_in_complete(s, n)) -
                   std::log(static_cast<double>(s.aut_count())));
  }
  return std::exp(0.5 * log_sum_exp(logs));
}

double brute_force_advantage(const Graph& h, int n, double p, int D, std::uint64_t work_limit) {
  check_p(p);
  if (D < 1) throw std::invalid_argument("D must be at least 1");
  if (h.without_isolated().n() > n) throw EmbeddingError("H has more vertices than n");
  std::vector<Edge> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  const auto P = static_cast<std::uint64_t>(pairs.size());
  BigInt subsets = 0;
  for (int j = 1; j <= D; ++j) subsets += binomial(P, j);
  if (subsets > BigInt(work_limit)) throw BudgetError("brute-force advantage: too many subsets");

  const long double c = (1.0L - p) / p;
  long double total = 0.0L;
  std::vector<int> idx;
  for (int size = 1; size <= D && size <= static_cast<int>(P); ++size) {
    idx.resize(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::vector<Edge> s;
      std::vector<int> verts;
      for (int i : idx) {
        s.push_back(pairs[i]);
        verts.push_back(pairs[i].first);
        verts.push_back(pairs[i].second);
      }
      std::sort(verts.begin(), verts.end());
      const auto vs = std::unique(verts.begin(), verts.end()) - verts.begin();
      const BigInt msh = count_labelled_copies(s, h);
      if (!msh.is_zero()) {
        const long double ratio = static_cast<long double>(to_double(msh)) /
                                  static_cast<long double>(to_double(falling_factorial(n, vs)));
        total += ratio * ratio * std::pow(c, static_cast<long double>(size));
      }
      int k = size - 1;
      while (k >= 0 && idx[k] == static_cast<int>(P) - size + k) --k;
      if (k < 0) break;
      ++idx[k];
      for (int j = k + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return static_cast<double>(std::sqrt(total));
}

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::EdgesOptimal: return "EdgesOptimal";
    case Regime::LargeStarsOptimal: return "LargeStarsOptimal";
    case Regime::Gray: return "Gray";
    case Regime::NoConstantDegreeSeparation: return "NoConstantDegreeSeparation";
  }
  return "unknown";
}

RegimeLabel classify_regime(const DegreeProfile& profile, std::uint64_t n, double p, int D,
                            const Margins& margins) {
  const auto crit = star_criterion(profile, n, p, D);
  const double r = p / (1.0 - p);
  const double nr = static_cast<double>(n) * r;
  RegimeLabel label;
  label.margins = margins;
  label.max_degree = static_cast<double>(profile.max_degree());
  label.edge_count = static_cast<double>(profile.edge_count());
  label.edge_threshold = std::sqrt(nr);
  label.edge_boundary = static_cast<double>(n) * std::sqrt(r);
  label.eps_hat = (label.max_degree >= 1.0 && nr > 1.0)
                      ? std::log(label.max_degree) / std::log(nr) - 0.5
                      : std::numeric_limits<double>::quiet_NaN();
  label.surrogate_argmax = crit.t_star;
  label.max_surrogate = crit.per_t[crit.t_star - 1].surrogate;
  label.endpoint_property = crit.t_star == 1 || crit.t_star == D;

  if (profile.max_degree() == 0 || label.max_surrogate <= margins.tau) {
    label.regime = Regime::NoConstantDegreeSeparation;
  } else if (label.max_degree <= margins.c_edge * label.edge_threshold) {
    label.regime = Regime::EdgesOptimal;
  } else if (label.eps_hat >= margins.eps_min) {
    label.regime = Regime::LargeStarsOptimal;
    label.t_suggest = static_cast<int>(std::ceil(3.0 / (2.0 * label.eps_hat))) + 1;
  } else {
    label.regime = Regime::Gray;
  }
  return label;
}

double intersection_ratio(const IntersectionPattern& pattern, const Graph& h, std::uint64_t n,
                          double p, int t) {
  check_p(p);
  if (pattern.left.star_size() != t || pattern.right.star_size() != t)
    throw std::invalid_argument("intersection ratio needs a pattern of two t-stars");
  if (pattern.gluing.empty())
    throw std::invalid_argument("intersection ratio covers only non-empty gluings");
  const BigInt mstar = star_copy_count(DegreeProfile::from_graph(h), t);
  if (mstar.is_zero()) throw DegenerateError("H contains no t-star");
  CopyCounter counter(h);
  const BigInt& mdelta = counter.count(pattern.symdiff_shape);
  if (mdelta.is_zero()) return 0.0;
  const double lc = log_c(p);
  const double lg =
      (pattern.union_vertex_count - pattern.symdiff_vertex_count) *
          std::log(static_cast<double>(n)) +
      log_big(mdelta) + 0.5 * static_cast<double>(pattern.symdiff_edge_count) * lc -
      2.0 * log_big(mstar) - t * lc;
  return std::exp(lg);
}

double exact_planted_second_moment(const Shape& shape, const Graph& h, int n, double p) {
  check_p(p);
  const Graph hs = h.without_isolated();
  if (n > 8 || hs.n() > 5 || shape.vertex_count() > 4)
    throw BudgetError("exact second moment is limited to n <= 8, |V(H)| <= 5, |V(S)| <= 4");
  if (hs.n() > n) throw EmbeddingError("H has more vertices than n");
  if (shape.vertex_count() > n) return 0.0;

  auto bit = [n](int u, int v) {
    if (u > v) std::swap(u, v);
    return std::uint32_t{1} << (u * n - u * (u + 1) / 2 + (v - u - 1));
  };
  // Every injective map of `verts` vertices into [n], as edge masks of `edges`.
  auto masks_of = [&](int verts, const std::vector<Edge>& edges) {
    std::vector<std::uint32_t> out;
    std::vector<int> img(verts);
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self, int pos) -> void {
      if (pos == verts) {
        std::uint32_t m = 0;
        for (auto [u, v] : edges) m |= bit(img[u], img[v]);
        out.push_back(m);
        return;
      }
      for (int v = 0; v < n; ++v) {
        if (used[v]) continue;
        used[v] = 1;
        img[pos] = v;
        self(self, pos + 1);
        used[v] = 0;
      }
    };
    rec(rec, 0);
    return out;
  };

  auto copies = masks_of(shape.vertex_count(), shape.edges());
  std::sort(copies.begin(), copies.end());
  copies.erase(std::unique(copies.begin(), copies.end()), copies.end());

  std::map<std::uint32_t, double> embeddings;
  const auto hmasks = masks_of(hs.n(), hs.edges());
  for (auto m : hmasks) embeddings[m] += 1.0 / static_cast<double>(hmasks.size());

  const long double c = (1.0L - p) / p;
  std::vector<long double> c_half(64);
  for (int k = 0; k < 64; ++k) c_half[k] = std::pow(c, k / 2.0L);

  long double total = 0.0L;
  for (auto s1 : copies)
    for (auto s2 : copies) {
      const std::uint32_t sym = s1 ^ s2, both = s1 & s2;
      for (const auto& [hm, w] : embeddings) {
        if (sym & ~hm) continue;
        total += w * c_half[std::popcount(sym)] * c_half[2 * std::popcount(both & hm)];
      }
    }
  return static_cast<double>(total);
}

AdvantageReport analyze(const Graph& h, std::uint64_t n, double p, int D, const Margins& margins,
                        std::uint64_t work_limit) {
  const Graph hs = h.without_isolated();
  if (static_cast<std::uint64_t>(hs.n()) > n)
    throw EmbeddingError("H has more vertices than the ambient graph");
  AdvantageReport rep;
  rep.n = n;
  rep.p = p;
  rep.D = D;
  rep.profile = DegreeProfile::from_graph(hs);
  rep.stars = star_criterion(rep.profile, n, p, D);
  if (D <= kMaxEnumeratedEdges) {
    try {
      rep.total_adv = total_advantage(hs, n, p, D, work_limit);
      rep.total_status = "ok";
    } catch (const BudgetError&) {
      rep.total_status = "budget_exceeded";
    }
  } else {
    rep.total_status = "skipped";
  }
  rep.regime = classify_regime(rep.profile, n, p, D, margins);
  return rep;
}

}  // namespace starcount
