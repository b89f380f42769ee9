#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "starcount/errors.hpp"
#include "starcount/graph.hpp"
#include "starcount/patterns.hpp"
#include "starcount/shape.hpp"

namespace starcount {

struct ShapeMoments {
  double eq_mean = 0.0;
  double eq_second = 0.0;
  double ep_mean = 0.0;
};

// Closed-form moments of the signed count of `shape` with H planted in G(n, p).
ShapeMoments shape_moments(const Shape& shape, const Graph& h, std::uint64_t n, double p,
                           std::uint64_t work_limit = kDefaultWorkLimit);

// E_P f / sqrt(E_Q f^2) = M_{S,H} c^{|S|/2} / sqrt(M_S |Aut S|), c = (1-p)/p.
double shape_advantage(const Shape& shape, const Graph& h, std::uint64_t n, double p,
                       std::uint64_t work_limit = kDefaultWorkLimit);

struct StarTerm {
  int t = 0;
  double exact_adv = 0.0;         // advantage of the signed t-star count
  double aut_rescaled_adv = 0.0;  // exact_adv * sqrt|Aut K_{1,t}|
  double ff_surrogate = 0.0;      // sum (d)_(t) c^{t/2} / n^{(1+t)/2}
  double surrogate = 0.0;         // sum d^t c^{t/2} / n^{(1+t)/2}
  double log_exact_adv = 0.0;
  double log_surrogate = 0.0;
};

struct StarCriterion {
  std::vector<StarTerm> per_t;
  int t_star = 1;          // argmax of the surrogate, ties toward smaller t
  bool log_space = false;  // some value exceeded 1e300 and is reported through its log
};

// Pure function of the degree profile.
StarCriterion star_criterion(const DegreeProfile& profile, std::uint64_t n, double p, int D);

// Square root of the sum over shapes with <= D edges of M_{S,H}^2 c^|S| / (M_S |Aut S|).
double total_advantage(const Graph& h, std::uint64_t n, double p, int D,
                       std::uint64_t work_limit = kDefaultWorkLimit);

// Same quantity by enumerating every edge subset S of K_n with 1 <= |S| <= D and
// summing (M_{S,H} / M_S)^2 c^|S|. Intended for n <= 8, D <= 3.
double brute_force_advantage(const Graph& h, int n, double p, int D,
                             std::uint64_t work_limit = kDefaultWorkLimit);

struct Margins {
  double c_edge = 1.0;
  double eps_min = 0.05;
  double tau = 10.0;
};

enum class Regime { EdgesOptimal, LargeStarsOptimal, Gray, NoConstantDegreeSeparation };
std::string regime_name(Regime r);

struct RegimeLabel {
  Regime regime = Regime::NoConstantDegreeSeparation;
  int t_suggest = 0;            // only for LargeStarsOptimal
  double max_degree = 0.0;      // Delta
  double edge_threshold = 0.0;  // (n p/(1-p))^{1/2}
  double edge_count = 0.0;      // m
  double edge_boundary = 0.0;   // n (p/(1-p))^{1/2}
  double eps_hat = 0.0;         // log Delta / log(n p/(1-p)) - 1/2
  double max_surrogate = 0.0;
  int surrogate_argmax = 1;
  bool endpoint_property = true;  // argmax over 1..D lies in {1, D}
  Margins margins;
};

RegimeLabel classify_regime(const DegreeProfile& profile, std::uint64_t n, double p, int D,
                            const Margins& margins = {});

// n^{|V(S1 u S2)| - |V(S1 d S2)|} M_{S1dS2,H} c^{|S1dS2|/2} / (M_{K1t,H}^2 c^t)
// for a pattern of two t-stars with a non-empty gluing.
double intersection_ratio(const IntersectionPattern& pattern, const Graph& h, std::uint64_t n,
                          double p, int t);

// E_P[f_S^2] by exhaustive enumeration of embeddings of H and pairs of copies.
// Limited to n <= 8, |V(H)| <= 5 (isolated stripped), |V(S)| <= 4.
double exact_planted_second_moment(const Shape& shape, const Graph& h, int n, double p);

struct AdvantageReport {
  std::uint64_t n = 0;
  double p = 0.5;
  int D = 1;
  DegreeProfile profile;
  StarCriterion stars;
  std::optional<double> total_adv;  // absent when over budget or D too large
  std::string total_status;         // "ok", "budget_exceeded" or "skipped"
  RegimeLabel regime;
};

AdvantageReport analyze(const Graph& h, std::uint64_t n, double p, int D, const Margins& margins,
                        std::uint64_t work_limit = kDefaultWorkLimit);

}  // namespace starcount
