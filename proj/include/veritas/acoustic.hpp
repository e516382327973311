#pragma once

#include <array>
#include <span>
#include <vector>

#include "veritas/corpus.hpp"

namespace veritas {

struct AudioClip {
  std::vector<double> samples;  // mono, in [-1, 1]
  int sample_rate_hz = 16000;

  double duration_s() const {
    return samples.empty() ? 0.0
                           : static_cast<double>(samples.size()) / sample_rate_hz;
  }
};

// Slot map for the 28-dim acoustic summary. Families: 12 cepstral, 4 prosody,
// 4 energy/loudness, 1 voicing, 1 HNR, 2 jitter, 4 spectral.
enum AcousticSlot : int {
  kAcMfcc1 = 0,  // mfcc means 1..12 occupy slots 0..11
  kAcF0Mean = 12,
  kAcF0Std = 13,
  kAcF0Median = 14,
  kAcF0Range = 15,
  kAcIntensityMeanDb = 16,
  kAcIntensityStdDb = 17,
  kAcLoudnessMean = 18,
  kAcLoudnessStd = 19,
  kAcVoicingProbMean = 20,
  kAcHnrMeanDb = 21,
  kAcJitterLocal = 22,
  kAcJitterDdp = 23,
  kAcCentroidMean = 24,
  kAcCentroidStd = 25,
  kAcFluxMean = 26,
  kAcFluxStd = 27,
};

const std::array<std::string, kAcousticDim>& acoustic_slot_names();

struct AnalysisConfig {
  double frame_ms = 25.0;
  double hop_ms = 10.0;
  double preemphasis = 0.97;
  int n_mel_filters = 26;
  int n_mfcc = 12;
  double f0_min_hz = 60.0;
  double f0_max_hz = 400.0;
  double voicing_threshold = 0.45;
};

// Pre-emphasis then Hamming-windowed frames; the last partial frame is
// dropped. Throws ClipTooShortError when the clip is shorter than one frame.
std::vector<std::vector<double>> frame_signal(const AudioClip& clip,
                                              double frame_ms = 25.0,
                                              double hop_ms = 10.0,
                                              double preemphasis = 0.97);

// Magnitude spectrum -> triangular mel filterbank (0..Nyquist) -> log with
// floor 1e-10 -> orthonormal DCT-II, coefficients 1..n_coeffs (0 excluded).
std::vector<double> compute_mfcc(std::span<const double> frame, int sample_rate_hz,
                                 int n_filters = 26, int n_coeffs = 12);

// Triangular mel filter weights, n_filters rows over nfft/2+1 spectrum bins.
std::vector<std::vector<double>> mel_filterbank(int sample_rate_hz, int nfft,
                                                int n_filters);

// Filterbank applied to a frame's magnitude spectrum (pre-log energies).
std::vector<double> mel_filter_energies(std::span<const double> frame,
                                        int sample_rate_hz, int n_filters = 26);

// Orthonormal DCT-II basis, n x n; row k is the k-th basis vector.
std::vector<std::vector<double>> dct_ii_matrix(int n);

struct PitchEstimate {
  double f0_hz = 0.0;          // 0 when unvoiced
  double voicing_prob = 0.0;   // clamped normalized autocorrelation peak
};

// Normalized-autocorrelation peak search in [sr/fmax, sr/fmin] with parabolic
// lag refinement; f0 is reported only when the peak reaches the voicing
// threshold.
PitchEstimate estimate_f0(std::span<const double> frame, int sample_rate_hz,
                          double fmin_hz = 60.0, double fmax_hz = 400.0,
                          double voicing_threshold = 0.45);

struct JitterStats {
  double local = 0.0;
  double ddp = 0.0;
};

// Cycle-to-cycle period variability over a voiced f0 series; fewer than three
// voiced frames yields zeros.
JitterStats compute_jitter(std::span<const double> voiced_f0_hz);

// 10*log10(r / (1-r)) from the normalized autocorrelation at the f0 lag,
// r clamped to [1e-6, 1-1e-6]; unvoiced frames (f0 <= 0) return 0.
double compute_hnr(std::span<const double> frame, int sample_rate_hz, double f0_hz);

struct FrameLLD {
  double time_s = 0.0;
  double f0_hz = 0.0;
  double rms_db = 0.0;
  double voicing_prob = 0.0;
  double hnr_db = 0.0;
  double spectral_centroid_hz = 0.0;
  double spectral_flux = 0.0;
  std::array<double, 12> mfcc{};
};

std::vector<FrameLLD> extract_llds(const AudioClip& clip,
                                   const AnalysisConfig& cfg = {});

// Fills the 28-slot layout. f0 statistics run over voiced frames only;
// loudness is (rms amplitude)^0.3; all stds are population stds.
AcousticVector summarize(std::span<const FrameLLD> llds);

AcousticVector acoustic_vector_from_clip(const AudioClip& clip,
                                         const AnalysisConfig& cfg = {});

}  // namespace veritas
