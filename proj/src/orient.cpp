// Copyright 2026 The platobell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "platobell/orient.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iostream>
#include <mutex>
#include <numbers>
#include <numeric>
#include <random>

#include "parallel.hpp"
#include "platobell/bell.hpp"
#include "platobell/errors.hpp"

namespace platobell {

double objective(const StrategyVectorSet& sa, const StrategyVectorSet& sb,
                 const OrthogonalTransform& o, int threads) {
  return local_bound_pairwise(sa, sb, o.matrix, threads);
}

double max_local_bound(const StrategyVectorSet& sa, const StrategyVectorSet& sb) {
  return sa.longest() * sb.longest();
}

LocalBoundObjective::LocalBoundObjective(const BodyStrategies& a,
                                         const BodyStrategies& b, int threads)
    : a_(a), b_(b), d_(a.merged.d), threads_(threads) {
  if (a.merged.d != b.merged.d)
    throw ValidationError("LocalBoundObjective: dimension mismatch");
  const double pair = double(a.vectors.size()) * double(b.vectors.size());
  const double via_a = double(a.merged.m()) * double(b.vectors.size());
  const double via_b = double(b.merged.m()) * double(a.vectors.size());
  if (pair <= via_a && pair <= via_b)
    mode_ = Mode::kPairwise;
  else if (via_a <= via_b)
    mode_ = Mode::kVerticesOfA;
  else
    mode_ = Mode::kVerticesOfB;
}

double LocalBoundObjective::operator()(const Eigen::MatrixXd& o) const {
  switch (mode_) {
    case Mode::kPairwise:
      return local_bound_pairwise(a_.vectors, b_.vectors, o, threads_);
    case Mode::kVerticesOfA:
      return local_bound(a_.merged, b_.vectors, o, threads_);
    case Mode::kVerticesOfB:
      break;
  }
  return local_bound(b_.merged, a_.vectors, o.transpose(), threads_);
}

NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> x0, const NelderMeadOptions& opt) {
  const int n = static_cast<int>(x0.size());
  NelderMeadResult res;
  if (n == 0) {
    res.x = x0;
    res.value = f(x0);
    return res;
  }
  using Point = std::vector<double>;
  std::vector<Point> pts(n + 1, x0);
  for (int i = 0; i < n; ++i) pts[i + 1][i] += opt.initial_step;
  std::vector<double> val(n + 1);
  for (int i = 0; i <= n; ++i) val[i] = f(pts[i]);
  std::vector<int> order(n + 1);

  auto affine = [n](const Point& c, const Point& p, double t) {
    Point out(n);
    for (int k = 0; k < n; ++k) out[k] = c[k] + t * (p[k] - c[k]);
    return out;
  };

  int it = 0;
  for (; it < opt.max_iterations; ++it) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return val[x] < val[y]; });
    const int best = order[0], worst = order[n], second = order[n - 1];
    double diam = 0;
    for (int i = 0; i <= n; ++i) {
      double dist = 0;
      for (int k = 0; k < n; ++k) dist = std::max(dist, std::abs(pts[i][k] - pts[best][k]));
      diam = std::max(diam, dist);
    }
    if (diam < opt.diameter_tol) break;

    Point c(n, 0.0);
    for (int i = 0; i <= n; ++i)
      if (i != worst)
        for (int k = 0; k < n; ++k) c[k] += pts[i][k] / n;

    const Point xr = affine(c, pts[worst], -1.0);
    const double fr = f(xr);
    if (fr < val[best]) {
      const Point xe = affine(c, pts[worst], -2.0);
      const double fe = f(xe);
      if (fe < fr) {
        pts[worst] = xe;
        val[worst] = fe;
      } else {
        pts[worst] = xr;
        val[worst] = fr;
      }
      continue;
    }
    if (fr < val[second]) {
      pts[worst] = xr;
      val[worst] = fr;
      continue;
    }
    // Outside or inside contraction.
    const bool outside = fr < val[worst];
    const Point xc = affine(c, outside ? xr : pts[worst], 0.5);
    const double fc = f(xc);
    if (fc < (outside ? fr : val[worst])) {
      pts[worst] = xc;
      val[worst] = fc;
      continue;
    }
    for (int i = 0; i <= n; ++i) {
      if (i == best) continue;
      pts[i] = affine(pts[best], pts[i], 0.5);
      val[i] = f(pts[i]);
    }
  }
  const int best = static_cast<int>(std::min_element(val.begin(), val.end()) - val.begin());
  res.x = pts[best];
  res.value = val[best];
  res.iterations = it;
  return res;
}

std::vector<double> restart_angles(int d, uint64_t seed, int r) {
  std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
                    static_cast<uint32_t>(r), 0x6f726965u};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
  std::vector<double> x(angle_count(d));
  for (double& t : x) t = u(rng);
  return x;
}

double pair_quantum_bound(const VertexSet& a, const VertexSet& b,
                          const OrthogonalTransform& o) {
  if (check_semiorthogonal(a).passed && check_semiorthogonal(b).passed)
    return quantum_bound_formula(a, b);
  return quantum_bound_svd(build(a, b, o));
}

OrientationResult minimize_local_bound(const BodyStrategies& a,
                                       const BodyStrategies& b,
                                       const VertexSet& full_a,
                                       const VertexSet& full_b,
                                       const OrientOptions& opt) {
  if (opt.restarts < 1) throw ValidationError("restarts must be positive");
  const int d = a.merged.d;
  const int workers = std::min(detail::resolve_threads(opt.threads), opt.restarts);
  const LocalBoundObjective obj(a, b, workers > 1 ? 1 : opt.threads);
  std::vector<NelderMeadResult> runs(opt.restarts);
  std::atomic<int> next{0};
  std::mutex log;
  detail::parallel_for(static_cast<size_t>(workers), workers,
                       [&](size_t, size_t, int) {
    for (int r = next++; r < opt.restarts; r = next++) {
      auto f = [&](const std::vector<double>& x) {
        return obj(angles_to_transform(x, d).matrix);
      };
      runs[r] = nelder_mead(f, restart_angles(d, opt.seed, r), opt.nm);
      // A simplex collapsed onto a kink is often not a minimum; restart
      // from the converged point until that stops helping.
      for (int polish = 0; polish < opt.polish_rounds; ++polish) {
        NelderMeadResult again = nelder_mead(f, runs[r].x, opt.nm);
        const bool better = again.value < runs[r].value - 1e-13;
        again.iterations += runs[r].iterations;
        if (again.value <= runs[r].value) runs[r] = std::move(again);
        if (!better) break;
      }
      if (opt.verbose) {
        std::lock_guard<std::mutex> lock(log);
        std::cerr << "  restart " << r + 1 << "/" << opt.restarts << ": L = "
                  << runs[r].value << " (" << runs[r].iterations
                  << " iterations)\n";
      }
    }
  });
  OrientationResult res;
  int best = 0;
  for (int r = 0; r < opt.restarts; ++r) {
    if (runs[r].value < runs[best].value) best = r;
    res.history.push_back(runs[best].value);
  }
  res.best_transform = angles_to_transform(runs[best].x, d);
  res.best_L = runs[best].value;
  res.restarts_used = opt.restarts;
  res.Q = pair_quantum_bound(full_a, full_b, res.best_transform);
  res.ratio = res.Q / res.best_L;
  return res;
}

OrientationResult minimize_local_bound(const VertexSet& a, const VertexSet& b,
                                       const OrientOptions& opt) {
  EnumerateOptions eo;
  eo.seed = opt.seed;
  eo.threads = opt.threads;
  eo.verbose = opt.verbose;
  const BodyStrategies sa = body_strategies(a, eo);
  const BodyStrategies sb = body_strategies(b, eo);
  return minimize_local_bound(sa, sb, a, b, opt);
}

}  // namespace platobell
