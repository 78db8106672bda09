#pragma once

#include <vector>

#include "inls/grid.hpp"

namespace inls {

/// 3D complex-to-complex FFT on Grid3 data.
///
/// Conventions: forward is the unnormalized DFT with kernel e^{-i k x}
/// (FFTW_FORWARD); inverse carries the 1/n^3 factor so inverse(forward(f))
/// is the identity. Plans are created with FFTW_ESTIMATE only, so results
/// are bit-deterministic run to run.
class Fft3 {
 public:
  explicit Fft3(int n);
  ~Fft3();

  Fft3(const Fft3&) = delete;
  Fft3& operator=(const Fft3&) = delete;

  void forward(const std::vector<complexd>& in, std::vector<complexd>& out) const;
  void inverse(const std::vector<complexd>& in, std::vector<complexd>& out) const;

  void forward_inplace(std::vector<complexd>& data) const;
  void inverse_inplace(std::vector<complexd>& data) const;

  int n() const { return n_; }

 private:
  int n_;
  void* plan_fwd_;  // fftw_plan
  void* plan_inv_;
};

/// Process-wide plan cache keyed by n. FFTW planning is not thread-safe;
/// the cache serializes plan creation behind a mutex.
const Fft3& fft_for(int n);

}  // namespace inls
