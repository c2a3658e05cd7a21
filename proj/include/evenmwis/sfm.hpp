#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "evenmwis/error.hpp"

namespace evenmwis {

/// Set function over an ordered ground set of distinct integer elements.
/// The callback receives subsets as ascending element lists.
class SfmOracle {
 public:
  using Function = std::function<std::int64_t(std::span<const int>)>;

  SfmOracle(std::vector<int> ground, Function f) : ground_(std::move(ground)), f_(std::move(f)) {
    std::sort(ground_.begin(), ground_.end());
    if (std::adjacent_find(ground_.begin(), ground_.end()) != ground_.end()) {
      throw Error(ErrorKind::InvalidArgument, "ground set has repeated elements");
    }
  }

  const std::vector<int>& ground() const { return ground_; }
  std::size_t size() const { return ground_.size(); }
  std::size_t calls() const { return calls_; }

  std::int64_t operator()(std::span<const int> subset) const {
    ++calls_;
    return f_(subset);
  }

  /// Subset given by a bitmask over ground positions (size ≤ 64).
  std::int64_t evaluate_mask(std::uint64_t mask) const {
    buffer_.clear();
    for (std::size_t i = 0; i < ground_.size(); ++i) {
      if ((mask >> i) & 1U) buffer_.push_back(ground_[i]);
    }
    return (*this)(buffer_);
  }

  std::vector<int> subset_of(std::uint64_t mask) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < ground_.size(); ++i) {
      if ((mask >> i) & 1U) out.push_back(ground_[i]);
    }
    return out;
  }

 private:
  std::vector<int> ground_;
  Function f_;
  mutable std::size_t calls_ = 0;
  mutable std::vector<int> buffer_;
};

enum class SfmMethod { Brute, Mnp };

constexpr std::string_view to_string(SfmMethod m) { return m == SfmMethod::Brute ? "brute" : "mnp"; }

struct SfmResult {
  std::vector<int> minimizer;
  std::int64_t value = 0;
  SfmMethod method = SfmMethod::Brute;
  std::size_t oracle_calls = 0;
  std::size_t iterations = 0;
};

inline constexpr std::size_t kBruteGroundLimit = 22;

namespace detail {

/// Lexicographic order of the element lists encoded by two masks.
inline bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
  std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  int low = std::countr_zero(diff);
  if ((a >> low) & 1U) return (b >> low) != 0;
  return (a >> low) == 0;
}

}  // namespace detail

/// Exhaustive minimization; ties go to the lexicographically smallest
/// subset. Throws GroundTooLarge above 22 elements.
inline SfmResult minimize_brute(const SfmOracle& oracle) {
  const std::size_t m = oracle.size();
  if (m > kBruteGroundLimit) {
    throw Error(ErrorKind::GroundTooLarge, "brute-force SFM limited to " + std::to_string(kBruteGroundLimit) +
                                               " elements, got " + std::to_string(m));
  }
  std::size_t before = oracle.calls();
  std::uint64_t best_mask = 0;
  std::int64_t best = oracle.evaluate_mask(0);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::int64_t v = oracle.evaluate_mask(mask);
    if (v < best || (v == best && detail::mask_lex_less(mask, best_mask))) {
      best = v;
      best_mask = mask;
    }
  }
  SfmResult r;
  r.minimizer = oracle.subset_of(best_mask);
  r.value = best;
  r.method = SfmMethod::Brute;
  r.oracle_calls = oracle.calls() - before;
  r.iterations = std::size_t{1} << m;
  return r;
}

struct MnpOptions {
  std::size_t max_iterations = 0;  // 0: 20·|ground| + 1000
  int lambda_bits = 40;
};

namespace detail {

/// Upper-triangular R with RᵀR = QᵀQ + 11ᵀ for the active points Q, kept
/// column by column.
class AffineCholesky {
 public:
  std::size_t size() const { return cols_.size(); }

  /// Appends a point given its products with the active points and itself.
  /// Returns false (and leaves R unchanged) when it is affinely dependent.
  bool push(const std::vector<double>& dots, double self) {
    const std::size_t s = cols_.size();
    std::vector<double> r(s + 1, 0.0);
    double acc = 0.0;
    for (std::size_t k = 0; k < s; ++k) {
      double v = dots[k] + 1.0;
      for (std::size_t i = 0; i < k; ++i) v -= cols_[k][i] * r[i];
      r[k] = v / cols_[k][k];
      acc += r[k] * r[k];
    }
    double rho2 = self + 1.0 - acc;
    if (rho2 <= 1e-10 * (self + 1.0)) return false;
    r[s] = std::sqrt(rho2);
    cols_.push_back(std::move(r));
    return true;
  }

  void erase(std::size_t j) {
    cols_.erase(cols_.begin() + static_cast<std::ptrdiff_t>(j));
    for (std::size_t k = j; k < cols_.size(); ++k) {
      double a = cols_[k][k];
      double b = cols_[k][k + 1];
      double h = std::hypot(a, b);
      double c = a / h;
      double s = b / h;
      for (std::size_t l = k; l < cols_.size(); ++l) {
        double xk = cols_[l][k];
        double xk1 = cols_[l][k + 1];
        cols_[l][k] = c * xk + s * xk1;
        cols_[l][k + 1] = -s * xk + c * xk1;
      }
      cols_[k].pop_back();
    }
  }

  /// Affine weights of the minimum-norm point of the active affine hull.
  std::vector<double> affine_minimizer() const {
    const std::size_t s = cols_.size();
    std::vector<double> y(s);
    for (std::size_t k = 0; k < s; ++k) {
      double v = 1.0;
      for (std::size_t i = 0; i < k; ++i) v -= cols_[k][i] * y[i];
      y[k] = v / cols_[k][k];
    }
    std::vector<double> a(s);
    for (std::size_t i = s; i-- > 0;) {
      double v = y[i];
      for (std::size_t k = i + 1; k < s; ++k) v -= cols_[k][i] * a[k];
      a[i] = v / cols_[i][i];
    }
    double total = std::accumulate(a.begin(), a.end(), 0.0);
    for (auto& v : a) v /= total;
    return a;
  }

 private:
  std::vector<std::vector<double>> cols_;
};

}  // namespace detail

/// Fujishige–Wolfe minimum-norm point over the base polytope of
/// g(A) = f(A) − f(∅), with Edmonds' greedy rule as linear oracle. Iterates
/// run in double precision; termination is certified exactly by rounding
/// the convex weights to integers Λ and checking
///   g(S)·ΣΛ − Σ_e min(0, Σ_i Λ_i q_ie) < ΣΛ
/// in 128-bit arithmetic, where S is the best greedy prefix seen so far.
/// Integer values then force g(S) to be the minimum. Throws NonConvergence
/// at the iteration cap.
inline SfmResult minimize_mnp(const SfmOracle& oracle, const MnpOptions& opt = {}) {
  const std::size_t m = oracle.size();
  const auto& ground = oracle.ground();
  std::size_t before = oracle.calls();
  SfmResult res;
  res.method = SfmMethod::Mnp;
  const std::int64_t f0 = oracle(std::span<const int>{});
  if (m == 0) {
    res.value = f0;
    res.oracle_calls = oracle.calls() - before;
    return res;
  }

  std::int64_t best = 0;  // g(∅)
  std::vector<int> best_set;
  std::vector<int> prefix;
  prefix.reserve(m);

  auto greedy = [&](const std::vector<double>& x) {
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    std::vector<std::int64_t> q(m);
    prefix.clear();
    std::int64_t prev = 0;
    for (std::size_t i = 0; i < m; ++i) {
      int e = ground[order[i]];
      prefix.insert(std::lower_bound(prefix.begin(), prefix.end(), e), e);
      std::int64_t val = oracle(prefix) - f0;
      q[order[i]] = val - prev;
      prev = val;
      if (val < best) {
        best = val;
        best_set = prefix;
      }
    }
    return q;
  };

  std::vector<std::vector<std::int64_t>> pts;
  std::vector<std::vector<double>> dpts;
  std::vector<double> lambda;
  detail::AffineCholesky chol;

  auto dot = [&](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += a[i] * b[i];
    return s;
  };
  auto add_point = [&](std::vector<std::int64_t> q) {
    std::vector<double> dq(q.begin(), q.end());
    std::vector<double> dots(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) dots[i] = dot(dpts[i], dq);
    if (!chol.push(dots, dot(dq, dq))) return false;
    pts.push_back(std::move(q));
    dpts.push_back(std::move(dq));
    return true;
  };
  auto combine = [&]() {
    std::vector<double> x(m, 0.0);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t e = 0; e < m; ++e) x[e] += lambda[i] * dpts[i][e];
    }
    return x;
  };
  const double scale = std::ldexp(1.0, opt.lambda_bits);
  auto certified = [&]() {
    std::vector<__int128> big(m, 0);
    __int128 total = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      auto li = static_cast<std::int64_t>(std::llround(std::max(0.0, lambda[i]) * scale));
      if (li == 0) continue;
      total += li;
      for (std::size_t e = 0; e < m; ++e) big[e] += static_cast<__int128>(li) * pts[i][e];
    }
    if (total == 0) return false;
    __int128 lower = 0;
    for (auto v : big) lower += std::min<__int128>(v, 0);
    return static_cast<__int128>(best) * total - lower < total;
  };

  std::vector<double> x(m, 0.0);
  add_point(greedy(x));
  lambda = {1.0};
  x = combine();
  const std::size_t cap = opt.max_iterations != 0 ? opt.max_iterations : 20 * m + 1000;
  std::size_t stalls = 0;
  for (std::size_t iter = 0;; ++iter) {
    res.iterations = iter;
    if (certified()) break;
    if (iter >= cap || stalls > 3) {
      throw Error(ErrorKind::NonConvergence, "minimum-norm point did not certify within " + std::to_string(iter) +
                                                 " iterations (ground " + std::to_string(m) + ")");
    }
    auto q = greedy(x);
    if (certified()) break;
    if (!add_point(std::move(q))) {
      ++stalls;
      continue;
    }
    lambda.push_back(0.0);
    while (true) {
      auto alpha = chol.affine_minimizer();
      bool interior = std::all_of(alpha.begin(), alpha.end(), [](double a) { return a > 1e-12; });
      if (interior) {
        lambda = std::move(alpha);
        break;
      }
      double theta = 1.0;
      std::size_t drop = 0;
      for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] <= 1e-12) {
          double t = lambda[i] / (lambda[i] - alpha[i]);
          if (t < theta) {
            theta = t;
            drop = i;
          }
        }
      }
      for (std::size_t i = 0; i < lambda.size(); ++i) lambda[i] = theta * alpha[i] + (1.0 - theta) * lambda[i];
      lambda[drop] = 0.0;
      for (std::size_t i = lambda.size(); i-- > 0;) {
        if (lambda[i] <= 1e-15) {
          chol.erase(i);
          pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
          dpts.erase(dpts.begin() + static_cast<std::ptrdiff_t>(i));
          lambda.erase(lambda.begin() + static_cast<std::ptrdiff_t>(i));
        }
      }
      double total = std::accumulate(lambda.begin(), lambda.end(), 0.0);
      for (auto& l : lambda) l /= total;
    }
    x = combine();
  }
  res.minimizer = best_set;
  res.value = best + f0;
  res.oracle_calls = oracle.calls() - before;
  return res;
}

/// Brute force up to `brute_limit` elements, minimum-norm point above.
inline SfmResult minimize(const SfmOracle& oracle, std::size_t brute_limit = kBruteGroundLimit,
                          const MnpOptions& opt = {}) {
  if (oracle.size() <= brute_limit && oracle.size() <= kBruteGroundLimit) return minimize_brute(oracle);
  return minimize_mnp(oracle, opt);
}

struct SubmodularityMode {
  bool exhaustive = true;
  std::size_t samples = 0;
  std::uint64_t seed = 0;

  static SubmodularityMode exhaustive_mode() { return {true, 0, 0}; }
  static SubmodularityMode sampled(std::size_t count, std::uint64_t seed) { return {false, count, seed}; }
};

struct SubmodularityReport {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> violations;  // first few, as element lists
  std::size_t violation_count = 0;
  std::size_t pairs_checked = 0;

  bool ok() const { return violation_count == 0; }
};

inline constexpr std::size_t kExhaustiveSubmodularityLimit = 14;
inline constexpr std::size_t kStoredViolations = 64;

/// Tests f(A) + f(B) ≥ f(A∪B) + f(A∩B) over all ordered pairs (exhaustive,
/// ground ≤ 14) or over random pairs.
inline SubmodularityReport check_submodularity(const SfmOracle& oracle, SubmodularityMode mode) {
  SubmodularityReport rep;
  const std::size_t m = oracle.size();
  auto record = [&](std::vector<int> a, std::vector<int> b) {
    ++rep.violation_count;
    if (rep.violations.size() < kStoredViolations) rep.violations.emplace_back(std::move(a), std::move(b));
  };
  if (mode.exhaustive) {
    if (m > kExhaustiveSubmodularityLimit) {
      throw Error(ErrorKind::GroundTooLarge, "exhaustive submodularity check limited to " +
                                                 std::to_string(kExhaustiveSubmodularityLimit) + " elements");
    }
    const std::uint64_t full = std::uint64_t{1} << m;
    std::vector<std::int64_t> table(full);
    for (std::uint64_t s = 0; s < full; ++s) table[s] = oracle.evaluate_mask(s);
    for (std::uint64_t a = 0; a < full; ++a) {
      for (std::uint64_t b = 0; b < full; ++b) {
        ++rep.pairs_checked;
        if (table[a] + table[b] < table[a | b] + table[a & b]) record(oracle.subset_of(a), oracle.subset_of(b));
      }
    }
    return rep;
  }
  std::mt19937_64 rng(mode.seed);
  const auto& ground = oracle.ground();
  for (std::size_t t = 0; t < mode.samples; ++t) {
    std::vector<int> a, b, u, i;
    for (int e : ground) {
      bool ia = (rng() & 1U) != 0;
      bool ib = (rng() & 1U) != 0;
      if (ia) a.push_back(e);
      if (ib) b.push_back(e);
      if (ia || ib) u.push_back(e);
      if (ia && ib) i.push_back(e);
    }
    ++rep.pairs_checked;
    if (oracle(a) + oracle(b) < oracle(u) + oracle(i)) record(std::move(a), std::move(b));
  }
  return rep;
}

}  // namespace evenmwis
