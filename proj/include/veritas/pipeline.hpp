#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "veritas/config.hpp"
#include "veritas/fusion.hpp"
#include "veritas/report.hpp"

namespace veritas {

// Top-level command implementations shared by the CLI and the test suites.
// Exit codes: 0 success, 1 runtime/data failure, 2 usage error.

int run_synth(std::uint64_t seed, int n_videos, double strength,
              const std::string& out_dir, std::ostream& out, std::ostream& err);

int run_extract(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int run_evaluate(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int run_train(const RunConfig& cfg, const std::string& row, std::ostream& out,
              std::ostream& err);

int run_report(const std::string& csv_path, std::ostream& out, std::ostream& err);

// The evaluation body behind run_evaluate: loads, validates (dropping
// rejected records), prepares features, and cross-validates the requested
// rows in report order.
std::vector<RowResult> evaluate_corpus(const Corpus& corpus, const RunConfig& cfg);

std::vector<EvalTask> parse_row_selection(const std::string& only_rows);

}  // namespace veritas
