#pragma once

#include <complex>
#include <span>
#include <vector>

namespace veritas {

// In-place iterative radix-2 FFT; size must be a power of two.
void fft_radix2(std::vector<std::complex<double>>& data);

inline int next_pow2(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

// |X[k]| for k = 0..nfft/2 of the zero-padded frame.
std::vector<double> magnitude_spectrum(std::span<const double> frame, int nfft);

}  // namespace veritas
