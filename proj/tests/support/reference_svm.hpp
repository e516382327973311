#pragma once

// Independent reference solver for the soft-margin linear SVM dual with the
// bias carried as a constant feature:
//   maximize D(a) = sum_i a_i - 1/2 a^T Q a,   0 <= a_i <= C,
//   Q_ij = y_i y_j (x_i . x_j + 1).
// Accelerated projected gradient (FISTA with monotone restart). This shares
// no code with the production coordinate-ascent trainer.

#include <algorithm>
#include <cmath>
#include <vector>

namespace veritas::testing {

struct ReferenceSolution {
  std::vector<double> alpha;
  double objective = 0.0;
  int iterations = 0;
};

inline ReferenceSolution reference_dual_solve(
    const std::vector<std::vector<double>>& x, const std::vector<int>& y,
    double c_penalty, int max_iter = 2000000, double tol = 1e-10) {
  const int n = static_cast<int>(x.size());
  std::vector<std::vector<double>> q(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double dot = 1.0;  // constant bias feature
      for (std::size_t k = 0; k < x[i].size(); ++k) dot += x[i][k] * x[j][k];
      q[i][j] = y[i] * y[j] * dot;
    }
  }

  // Gershgorin bound on the largest eigenvalue.
  double lips = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += std::abs(q[i][j]);
    lips = std::max(lips, row);
  }
  if (lips <= 0.0) lips = 1.0;
  const double step = 1.0 / lips;

  auto objective = [&](const std::vector<double>& a) {
    double lin = 0.0, quad = 0.0;
    for (int i = 0; i < n; ++i) {
      lin += a[i];
      double qa = 0.0;
      for (int j = 0; j < n; ++j) qa += q[i][j] * a[j];
      quad += a[i] * qa;
    }
    return lin - 0.5 * quad;
  };

  auto project = [&](double v) { return std::clamp(v, 0.0, c_penalty); };

  std::vector<double> a(n, 0.0), a_prev(n, 0.0), z(n, 0.0), grad(n, 0.0);
  double t_momentum = 1.0;
  double best_obj = objective(a);
  int stall = 0;
  int iter = 0;
  for (; iter < max_iter; ++iter) {
    for (int i = 0; i < n; ++i) {
      double qz = 0.0;
      for (int j = 0; j < n; ++j) qz += q[i][j] * z[j];
      grad[i] = 1.0 - qz;
    }
    a_prev = a;
    for (int i = 0; i < n; ++i) a[i] = project(z[i] + step * grad[i]);

    const double obj = objective(a);
    if (obj < best_obj) {  // monotone restart
      a = a_prev;
      z = a;
      t_momentum = 1.0;
      ++stall;
      if (stall > 200) break;
      continue;
    }
    if (obj - best_obj < tol * (1.0 + std::abs(obj))) {
      ++stall;
    } else {
      stall = 0;
    }
    best_obj = obj;
    if (stall > 200) break;

    const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t_momentum * t_momentum));
    const double beta = (t_momentum - 1.0) / t_next;
    for (int i = 0; i < n; ++i) z[i] = a[i] + beta * (a[i] - a_prev[i]);
    t_momentum = t_next;
  }

  return ReferenceSolution{a, objective(a), iter};
}

}  // namespace veritas::testing
