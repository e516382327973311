#pragma once

#include <stdexcept>
#include <string>

namespace veritas {

// Base class for all recoverable pipeline failures. The CLI maps these to
// exit code 1; usage problems (std::invalid_argument) map to exit code 2.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define VERITAS_ERROR_TYPE(NAME)                              \
  class NAME : public Error {                                 \
   public:                                                    \
    explicit NAME(const std::string& msg) : Error(msg) {}     \
  }

VERITAS_ERROR_TYPE(MissingFileError);
VERITAS_ERROR_TYPE(MalformedManifestError);
VERITAS_ERROR_TYPE(DuplicateIdError);
VERITAS_ERROR_TYPE(EmptyTranscriptError);
VERITAS_ERROR_TYPE(MissingColumnError);
VERITAS_ERROR_TYPE(MalformedRowError);
VERITAS_ERROR_TYPE(EmptyInputError);
VERITAS_ERROR_TYPE(LengthMismatchError);
VERITAS_ERROR_TYPE(EmptyVocabularyError);
VERITAS_ERROR_TYPE(ArityMismatchError);
VERITAS_ERROR_TYPE(ClipTooShortError);
VERITAS_ERROR_TYPE(SingleClassError);
VERITAS_ERROR_TYPE(DimensionMismatchError);
VERITAS_ERROR_TYPE(MalformedProbabilityError);
VERITAS_ERROR_TYPE(TooFewRecordsError);
VERITAS_ERROR_TYPE(IoError);

#undef VERITAS_ERROR_TYPE

}  // namespace veritas
