#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "veritas/corpus.hpp"

namespace veritas {

inline constexpr std::string_view kPauseToken = "...";

// Fixed word lists driving stoplisting and POS weighting. The defaults are
// compiled in and mirrored under data/lexicon/ (one word per line).
struct LexiconSet {
  std::vector<std::string> articles;
  std::vector<std::string> prepositions;
  std::vector<std::string> pronouns;
  std::vector<std::string> adjectives;
  std::vector<std::string> fillers;

  bool is_stopword(std::string_view term) const;
  bool is_filler(std::string_view term) const;
  bool is_pronoun(std::string_view term) const;
  bool is_adjective(std::string_view term) const;

  static const LexiconSet& defaults();
  // Reads <name>.txt files from a directory; missing files keep the default
  // list for that slot.
  static LexiconSet load_from_dir(const std::filesystem::path& dir);
};

struct Vocabulary {
  std::vector<std::string> terms;  // descending corpus frequency, ties alphabetical
  std::unordered_map<std::string, int> index;
  std::unordered_map<std::string, long> corpus_frequency;

  int size() const { return static_cast<int>(terms.size()); }
};

// Counts word tokens plus the pause token over training transcripts, drops
// stoplisted terms and fillers, then drops anything under min_frequency.
// The pause token survives the stoplist but not the frequency cutoff.
Vocabulary build_vocabulary(const std::vector<const Transcript*>& transcripts,
                            int min_frequency = 5,
                            const LexiconSet& lexicons = LexiconSet::defaults());

enum class POSClass { Pronoun, Adjective, Pause, Other };

// Precedence: Pause > Pronoun > Adjective. Adjectives come from the lexicon
// or a suffix fallback (-ful, -ous, -ive, -able, -less, -al).
POSClass pos_classify(std::string_view term,
                      const LexiconSet& lexicons = LexiconSet::defaults());

struct PosWeights {
  double pronoun = 1.4;
  double adjective = 1.2;
  double pause = 1.6;
  double other = 1.0;

  double of(POSClass c) const;
};

// values[i] = weight(pos(term_i)) * count(term_i in doc); OOV tokens
// contribute nothing. Pass a whole transcript's tokens or an utterance slice.
std::vector<double> vectorize(std::span<const TranscriptToken> tokens,
                              const Vocabulary& vocab,
                              const PosWeights& weights = {},
                              const LexiconSet& lexicons = LexiconSet::defaults());

struct AffectLexicon {
  int arity = 0;
  std::unordered_map<std::string, std::vector<double>> entries;

  bool empty() const { return entries.empty(); }
};

// Tab-separated: word followed by `arity` reals per line. Unequal row widths
// throw ArityMismatchError.
AffectLexicon load_affect_lexicon(const std::filesystem::path& path);

// Appends `arity` dims: the count-weighted mean of lexicon rows over the
// document's word tokens, or zeros when nothing matches.
std::vector<double> augment_with_affect(std::vector<double> values,
                                        std::span<const TranscriptToken> tokens,
                                        const AffectLexicon& lexicon);

}  // namespace veritas
