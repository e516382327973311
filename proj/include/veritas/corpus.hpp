#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "veritas/errors.hpp"

namespace veritas {

enum class Label { Truthful, Deceptive };

std::string to_string(Label label);
// Accepts exactly "truthful" / "deceptive"; anything else throws
// MalformedManifestError.
Label label_from_string(std::string_view s);

enum class TokenKind { Word, Filler, Pause };

struct TranscriptToken {
  TokenKind kind = TokenKind::Word;
  std::string text;  // lowercased; "..." for pauses
  int utterance_index = 0;
};

struct Transcript {
  std::vector<TranscriptToken> tokens;
  int utterance_count = 0;
};

// Canonical action-unit order. Fixed: every 18-dim visual vector and every
// OpenFace CSV is indexed in this order.
inline constexpr int kNumAUs = 18;
inline constexpr std::array<int, kNumAUs> kCanonicalAUs = {
    1, 2, 4, 5, 6, 7, 9, 10, 12, 14, 15, 17, 20, 23, 25, 26, 28, 45};

// Zero-padded identifier, e.g. au_name(4) == "AU04".
std::string au_name(int au_number);

struct AUFrame {
  int frame_index = 0;
  double timestamp_s = 0.0;
  std::array<double, kNumAUs> intensities{};  // each in [0, 5]
  bool success = true;
};

// Fixed 28-slot acoustic summary layout (see acoustic.hpp for the slot map).
inline constexpr int kAcousticDim = 28;
using AcousticVector = std::array<double, kAcousticDim>;

struct VideoRecord {
  std::string id;
  Label label = Label::Truthful;
  Transcript transcript;
  std::vector<AUFrame> au_frames;
  std::string audio_path;  // empty when a precomputed vector is supplied
  std::optional<AcousticVector> precomputed_acoustic;
  std::optional<std::set<std::string>> manual_annotation;
};

struct Corpus {
  std::vector<VideoRecord> records;
  int truthful_count = 0;
  int deceptive_count = 0;
};

// Tokenizes a transcript. Tokens are whitespace-separated; "..." marks a
// pause; {um, ah, uh} are fillers; everything else is a word, lowercased with
// trailing sentence-final punctuation (. ? !) stripped. Utterance boundaries
// fall at newlines and after sentence-final punctuation.
Transcript parse_transcript_text(std::string_view text);
Transcript parse_transcript(const std::filesystem::path& path);

// OpenFace-style CSV: header row with frame, timestamp, success and one
// AU{nn}_r (intensity) or AU{nn}_c (presence) column per canonical AU.
// Presence-only AUs map 1 -> 5.0 and 0 -> 0.0; intensities clamp to [0, 5].
std::vector<AUFrame> parse_openface_csv(const std::filesystem::path& path);

// One line of 28 comma-separated reals.
AcousticVector parse_acoustic_file(const std::filesystem::path& path);

struct ValidationRule {
  double min_duration_s = 3.0;
  double min_success_ratio = 0.5;
};

enum class RejectReason { TooShort, SubjectNotTracked };

std::string to_string(RejectReason reason);

struct Verdict {
  bool accepted = true;
  std::optional<RejectReason> reason;
};

// Mechanical stand-in for the manual exclusion pass: rejects clips whose AU
// series spans less than the minimum duration or whose tracking success rate
// is below the floor.
Verdict validate_record(const VideoRecord& record, const ValidationRule& rule = {});

// Manifest: one record per tab-separated line
//   id \t label \t transcript_path \t au_csv_path \t audio_or_acoustic_path
// with an optional sixth field naming a manual-annotation file. Lines
// starting with '#' are ignored. Paths resolve relative to the manifest.
Corpus load_manifest(const std::filesystem::path& path);

}  // namespace veritas
