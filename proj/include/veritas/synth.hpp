#pragma once

#include <cstdint>
#include <filesystem>

#include "veritas/corpus.hpp"

namespace veritas {

// Knobs for the planted class signal. Records are generated in
// truthful/deceptive pairs sharing their base draws, so at signal strength 0
// the two classes are identical sample-for-sample; at strength 1 deceptive
// records get elevated activation on a designated AU subset, higher
// pause/filler rates plus marked word choice, and shifted jitter /
// pitch-variance acoustic entries. Per pair, at most one modality is dialed
// down to near-zero signal ("hard" in that modality) so fusion has headroom
// over every single modality.
struct SynthTuning {
  int fps = 30;
  double min_duration_s = 4.0;
  double max_duration_s = 6.0;
  double hard_modality_prob = 0.07;   // per modality, per pair
  double hard_attenuation = 0.15;
  double au_base_activation = 0.12;   // designated AUs, both classes
  double au_extra_activation = 0.85;  // deceptive, scaled by strength
  double base_pause_rate = 0.02;
  double extra_pause_rate = 0.10;     // deceptive, scaled by strength
  double base_filler_rate = 0.015;
  double extra_filler_rate = 0.05;    // deceptive, scaled by strength
  double word_swap_rate = 0.25;       // deceptive, scaled by strength
};

// Writes n_videos/2 records per label under out_dir (manifest.tsv plus one
// transcript, AU CSV, and acoustic-vector file per record) and returns the
// same corpus in memory. All values are quantized through their on-disk text
// form, so load_manifest(out_dir/manifest.tsv) reproduces the returned corpus
// field-for-field. Byte-identical across runs for fixed arguments.
Corpus generate_synthetic_corpus(std::uint64_t seed, int n_videos,
                                 double signal_strength,
                                 const std::filesystem::path& out_dir,
                                 const SynthTuning& tuning = {});

}  // namespace veritas
