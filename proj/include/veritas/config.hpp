#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>

#include "veritas/corpus.hpp"
#include "veritas/fusion.hpp"
#include "veritas/svm.hpp"

namespace veritas {

// One flat bag of settings for a reproducible run. Defaults are the published
// operating point (intensity threshold 3.0, min frequency 5, POS weights
// 1.4/1.2/1.6, C=1.0, 10-fold CV).
struct RunConfig {
  std::string manifest_path;
  std::string output_dir = "out";

  ValidationRule validation;
  FeatureParams features;
  TrainConfig train;
  CVConfig cv;
  std::array<double, 3> fusion_weights = {1.0 / 3, 1.0 / 3, 1.0 / 3};
  bool search_fusion_weights = false;

  // Empty = all six rows; otherwise a comma-separated subset of
  // visual,lexical,acoustic,early,decision,utterance.
  std::string only_rows;
  int jobs = 0;  // 0 = hardware concurrency
};

// Line-oriented `key = value` text; '#' starts a comment. Relative paths in
// the file resolve against the config file's directory. Unknown keys are an
// error.
RunConfig load_config(const std::filesystem::path& path);
RunConfig parse_config_text(const std::string& text,
                            const std::filesystem::path& base_dir);

std::string serialize_config(const RunConfig& cfg);

}  // namespace veritas
