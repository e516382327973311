#pragma once

#include <filesystem>

#include "veritas/acoustic.hpp"

namespace veritas {

// RIFF/WAVE, PCM 16-bit, mono. Stereo or non-PCM input is rejected with a
// descriptive IoError.
AudioClip read_wav(const std::filesystem::path& path);

void write_wav(const std::filesystem::path& path, const AudioClip& clip);

}  // namespace veritas
