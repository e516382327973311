#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "veritas/corpus.hpp"

namespace veritas {

using Matrix = std::vector<std::vector<double>>;

// Per-dimension affine scaler fitted on training data; stds are floored at
// 1e-8 so constant columns map to zero.
struct Standardizer {
  std::vector<double> mean;
  std::vector<double> stddev;

  std::vector<double> transform(std::span<const double> x) const;
};

Standardizer fit_standardizer(const Matrix& x);
Matrix apply_standardizer(const Standardizer& s, const Matrix& x);

struct TrainConfig {
  double c_penalty = 1.0;
  double tolerance = 1e-4;
  int max_epochs = 1000;
  std::uint64_t seed = 0;
};

struct SvmDiagnostics {
  double dual_objective = 0.0;
  double kkt_violation_max = 0.0;
  int epochs_run = 0;
};

// Soft-margin linear SVM. The bias is carried as a regularized constant
// feature, so training maximizes
//   D(a) = sum a_i - 1/2 || sum a_i y_i [x_i; 1] ||^2,  0 <= a_i <= C
// and the KKT conditions hold in terms of the full margin w.x + b.
struct LinearSVMModel {
  std::vector<double> weights;
  double bias = 0.0;
  std::vector<double> alphas;
  SvmDiagnostics diagnostics;
};

// Dual coordinate ascent with per-epoch index shuffling driven by cfg.seed.
// Class coding is fixed: Deceptive = +1, Truthful = -1.
LinearSVMModel train_svm(const Matrix& x, const std::vector<int>& y,
                         const TrainConfig& cfg = {});

double predict_margin(const LinearSVMModel& model, std::span<const double> x);
// Deceptive iff margin >= 0 (ties go to Deceptive).
Label predict_label(const LinearSVMModel& model, std::span<const double> x);

// Objectives recomputed from the model, used by the duality-gap checks.
double dual_objective(const LinearSVMModel& model);
double primal_objective(const LinearSVMModel& model, const Matrix& x,
                        const std::vector<int>& y, double c_penalty);

struct PlattParams {
  double a = 0.0;
  double b = 0.0;

  // P(Deceptive | margin); the fitted a is negative on separated data, so
  // probability rises with the margin.
  double probability(double margin) const;
};

// Penalized MLE sigmoid fit with the standard smoothed targets
// t+ = (N+ + 1)/(N+ + 2), t- = 1/(N- + 2), via damped Newton iterations.
PlattParams fit_platt(std::span<const double> margins, std::span<const int> y,
                      int max_iter = 200, double tol = 1e-8);

struct CalibratedModel {
  LinearSVMModel base;
  PlattParams platt;

  double probability(std::span<const double> x) const {
    return platt.probability(predict_margin(base, x));
  }
};

// Versioned text format; weights round-trip exactly (17 significant digits).
void save_model(const std::filesystem::path& path, const CalibratedModel& model);
CalibratedModel load_model(const std::filesystem::path& path);

}  // namespace veritas
