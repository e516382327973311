#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "veritas/acoustic.hpp"
#include "veritas/corpus.hpp"
#include "veritas/lexical.hpp"
#include "veritas/svm.hpp"
#include "veritas/visual.hpp"

namespace veritas {

// Modality order is fixed everywhere: [Visual, Lexical, Acoustic].
enum class Modality : int { Visual = 0, Lexical = 1, Acoustic = 2 };

struct ClassProbs {
  double truthful = 0.5;
  double deceptive = 0.5;
};

// Weighted argmax over per-modality class probabilities; weights are
// normalized internally and ties go to Deceptive.
Label decision_fuse(const std::array<ClassProbs, 3>& probs,
                    const std::array<double, 3>& weights);

// Concatenation of the three per-modality standardized vectors.
std::vector<double> early_fuse(std::span<const double> visual,
                               std::span<const double> lexical,
                               std::span<const double> acoustic,
                               const Standardizer& s_visual,
                               const Standardizer& s_lexical,
                               const Standardizer& s_acoustic);

struct UtteranceSlice {
  int utterance_index = 0;
  int token_begin = 0;  // [token_begin, token_end) into transcript.tokens
  int token_end = 0;
  int frame_begin = 0;  // [frame_begin, frame_end) into au_frames
  int frame_end = 0;
};

// Splits n_frames across utterances proportionally to their token counts
// (or character counts) using largest-remainder rounding, remainder ties to
// the earlier utterance. Slices are contiguous and cover all frames.
std::vector<UtteranceSlice> allocate_frames(const Transcript& transcript,
                                            int n_frames,
                                            bool count_chars = false);

struct CVConfig {
  int n_folds = 10;
  bool stratified = true;
  std::uint64_t seed = 0;
};

// Fold index sets: disjoint, exhaustive, per-class sizes within 1 when
// stratified.
std::vector<std::vector<int>> make_folds(std::span<const Label> labels,
                                         const CVConfig& cfg);

// Fold-independent per-record features, computed once per corpus.
struct FeatureParams {
  double intensity_threshold = 3.0;
  double presence_ratio = 0.10;
  int min_frequency = 5;
  PosWeights pos_weights;
  AnalysisConfig analysis;
  std::string affect_lexicon_path;  // empty disables affect augmentation
  bool allocate_by_chars = false;
};

struct PreparedRecord {
  const VideoRecord* record = nullptr;
  AUVector au_bits{};
  AcousticVector acoustic{};
  std::vector<UtteranceSlice> slices;
  std::vector<AUVector> utterance_au;
  std::vector<AcousticVector> utterance_acoustic;
};

struct PreparedCorpus {
  const Corpus* corpus = nullptr;
  FeatureParams params;
  AffectLexicon affect;
  std::vector<PreparedRecord> records;
};

// Aggregates AU bits, extracts acoustic vectors (WAV records run the DSP
// path, precomputed records pass through), and allocates utterance slices.
// Record order is preserved and the result is independent of `jobs`.
PreparedCorpus prepare_corpus(const Corpus& corpus, const FeatureParams& params,
                              int jobs = 1);

enum class EvalTask {
  Visual,
  Lexical,
  Acoustic,
  EarlyFusion,
  DecisionFusion,
  UtteranceFusion,
};

std::string to_string(EvalTask task);

struct RowResult {
  std::string name;
  double overall = 0.0;
  double truthful_acc = 0.0;
  double deceptive_acc = 0.0;
  long n_truthful = 0;
  long n_deceptive = 0;
  long correct_truthful = 0;
  long correct_deceptive = 0;
  // Per-utterance accuracy diagnostic; only set for utterance fusion.
  std::optional<double> utterance_acc;
};

struct EvalOptions {
  CVConfig cv;
  TrainConfig train;
  std::array<double, 3> fusion_weights = {1.0 / 3, 1.0 / 3, 1.0 / 3};
  bool search_fusion_weights = false;
  int jobs = 1;
};

// Per fold: vocabulary and standardizers are fitted on the training records
// only, models trained, and held-out records scored. Deterministic for fixed
// seeds regardless of the jobs count.
RowResult cross_validate(const PreparedCorpus& prepared, EvalTask task,
                         const EvalOptions& options);

// Everything a trained utterance-level classifier needs at prediction time.
struct UtteranceModel {
  LinearSVMModel svm;
  Vocabulary vocab;
  Standardizer s_visual;
  Standardizer s_lexical;
  Standardizer s_acoustic;
};

// Classifies each utterance with the fused model and majority-votes the video
// label; ties go to Deceptive.
Label utterance_fuse_classify(const PreparedRecord& rec, const UtteranceModel& model,
                              const FeatureParams& params, const AffectLexicon& affect);

}  // namespace veritas
