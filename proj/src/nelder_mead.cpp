#include "aqlab/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace aqlab::optimize {

namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;

struct Simplex {
  std::vector<std::vector<double>> x;
  std::vector<double> fx;
  std::vector<std::size_t> order;  // indices sorted by fx ascending

  void sort() {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
  }
};

OptimizationResult run_once(const Objective& f, std::span<const double> x0,
                            const OptimizerConfig& cfg, std::size_t budget) {
  const std::size_t dim = x0.size();
  OptimizationResult res;
  res.x.assign(x0.begin(), x0.end());

  std::size_t evals = 0;
  auto eval = [&](const std::vector<double>& p) {
    ++evals;
    return f(p);
  };

  Simplex s;
  s.x.assign(dim + 1, std::vector<double>(x0.begin(), x0.end()));
  for (std::size_t k = 0; k < dim; ++k) s.x[k + 1][k] += cfg.simplex_step;
  s.fx.resize(dim + 1);
  s.order.resize(dim + 1);
  for (std::size_t k = 0; k <= dim; ++k) s.fx[k] = eval(s.x[k]);
  s.sort();

  std::vector<double> centroid(dim), xr(dim), xe(dim), xc(dim);
  bool converged = false;

  while (evals < budget) {
    const std::size_t best = s.order.front();
    const std::size_t worst = s.order.back();
    const std::size_t second_worst = s.order[dim > 0 ? dim - 1 : 0];

    // Convergence: coordinate and value spread against the best vertex.
    double x_spread = 0.0, f_spread = 0.0;
    for (std::size_t k = 0; k <= dim; ++k) {
      if (k == best) continue;
      for (std::size_t c = 0; c < dim; ++c)
        x_spread = std::max(x_spread, std::abs(s.x[k][c] - s.x[best][c]));
      f_spread = std::max(f_spread, std::abs(s.fx[k] - s.fx[best]));
    }
    if (x_spread < cfg.x_tolerance && f_spread < cfg.f_tolerance) {
      converged = true;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t k = 0; k <= dim; ++k) {
      if (k == worst) continue;
      for (std::size_t c = 0; c < dim; ++c) centroid[c] += s.x[k][c];
    }
    for (double& c : centroid) c /= static_cast<double>(dim);

    for (std::size_t c = 0; c < dim; ++c)
      xr[c] = centroid[c] + kReflect * (centroid[c] - s.x[worst][c]);
    const double fr = eval(xr);

    if (fr < s.fx[s.order[0]]) {
      for (std::size_t c = 0; c < dim; ++c)
        xe[c] = centroid[c] + kReflect * kExpand * (centroid[c] - s.x[worst][c]);
      const double fe = eval(xe);
      if (fe < fr) {
        s.x[worst] = xe;
        s.fx[worst] = fe;
      } else {
        s.x[worst] = xr;
        s.fx[worst] = fr;
      }
    } else if (fr < s.fx[second_worst]) {
      s.x[worst] = xr;
      s.fx[worst] = fr;
    } else {
      bool shrink = false;
      if (fr < s.fx[worst]) {
        // Outside contraction.
        for (std::size_t c = 0; c < dim; ++c)
          xc[c] = centroid[c] + kContract * kReflect * (centroid[c] - s.x[worst][c]);
        const double fc = eval(xc);
        if (fc <= fr) {
          s.x[worst] = xc;
          s.fx[worst] = fc;
        } else {
          shrink = true;
        }
      } else {
        // Inside contraction.
        for (std::size_t c = 0; c < dim; ++c)
          xc[c] = centroid[c] - kContract * (centroid[c] - s.x[worst][c]);
        const double fc = eval(xc);
        if (fc < s.fx[worst]) {
          s.x[worst] = xc;
          s.fx[worst] = fc;
        } else {
          shrink = true;
        }
      }
      if (shrink) {
        const std::size_t b = s.order.front();
        for (std::size_t k = 0; k <= dim; ++k) {
          if (k == b) continue;
          for (std::size_t c = 0; c < dim; ++c)
            s.x[k][c] = s.x[b][c] + kShrink * (s.x[k][c] - s.x[b][c]);
          s.fx[k] = eval(s.x[k]);
          if (evals >= budget) break;
        }
      }
    }
    s.sort();
  }

  s.sort();
  res.x = s.x[s.order.front()];
  res.value = s.fx[s.order.front()];
  res.evaluations = evals;
  res.converged = converged;
  return res;
}

}  // namespace

OptimizationResult minimize(const Objective& f, std::span<const double> x0,
                            const OptimizerConfig& cfg) {
  if (x0.empty()) throw std::invalid_argument("need at least one parameter");
  if (cfg.x_tolerance <= 0.0 || cfg.f_tolerance <= 0.0)
    throw std::invalid_argument("tolerances must be positive");

  const std::size_t budget =
      cfg.max_evaluations > 0 ? cfg.max_evaluations : 200 * x0.size();

  OptimizationResult res = run_once(f, x0, cfg, budget);
  if (cfg.shrink_restart) {
    OptimizationResult again = run_once(f, res.x, cfg, budget);
    again.evaluations += res.evaluations;
    if (again.value < res.value) return again;
    res.evaluations = again.evaluations;
  }
  return res;
}

}  // namespace aqlab::optimize
