#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "veritas/corpus.hpp"

namespace veritas {

// 18 binary activations in canonical AU order.
using AUVector = std::array<std::uint8_t, kNumAUs>;

struct AUPresence {
  AUVector bits{};
  bool had_success_frames = true;
};

// Collapses a frame series to one bit per AU: bit k is set when the fraction
// of success frames with intensity >= intensity_threshold reaches
// presence_ratio. No success frames -> all zeros with the flag cleared.
AUPresence aggregate_au_presence(std::span<const AUFrame> frames,
                                 double intensity_threshold = 3.0,
                                 double presence_ratio = 0.10);

// Annotation category -> set of AU numbers.
using AUMapping = std::map<std::string, std::set<int>>;

// The shipped mapping: Eyebrows {1,2,4}, Eyes {45,7}, Mouth {23,25,26,28}.
const AUMapping& default_au_mapping();

std::set<std::string> map_to_annotation_categories(const AUVector& v,
                                                   const AUMapping& mapping);

// Mean per-record category-level accuracy: for each record, the fraction of
// universe categories on which the two sets agree (both present or both
// absent), averaged over records.
double compute_agreement(const std::vector<std::set<std::string>>& automatic,
                         const std::vector<std::set<std::string>>& manual,
                         const std::set<std::string>& universe);

}  // namespace veritas
