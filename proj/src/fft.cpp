#include "inls/fft.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>

namespace inls {

namespace {
std::mutex planner_mutex;
}

Fft3::Fft3(int n) : n_(n) {
  std::lock_guard<std::mutex> lock(planner_mutex);
  // Plan on a scratch buffer; FFTW_UNALIGNED lets the plan execute on any
  // caller-provided arrays (std::vector storage) via fftw_execute_dft.
  std::vector<complexd> scratch(static_cast<std::size_t>(n) * n * n);
  auto* p = reinterpret_cast<fftw_complex*>(scratch.data());
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  plan_fwd_ = fftw_plan_dft_3d(n, n, n, p, p, FFTW_FORWARD, flags);
  plan_inv_ = fftw_plan_dft_3d(n, n, n, p, p, FFTW_BACKWARD, flags);
  if (!plan_fwd_ || !plan_inv_) throw RuntimeError("Fft3: FFTW planning failed");
}

Fft3::~Fft3() {
  std::lock_guard<std::mutex> lock(planner_mutex);
  fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_inv_));
}

void Fft3::forward(const std::vector<complexd>& in,
                   std::vector<complexd>& out) const {
  out = in;
  forward_inplace(out);
}

void Fft3::inverse(const std::vector<complexd>& in,
                   std::vector<complexd>& out) const {
  out = in;
  inverse_inplace(out);
}

void Fft3::forward_inplace(std::vector<complexd>& data) const {
  auto* p = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(static_cast<fftw_plan>(plan_fwd_), p, p);
}

void Fft3::inverse_inplace(std::vector<complexd>& data) const {
  auto* p = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(static_cast<fftw_plan>(plan_inv_), p, p);
  const double scale = 1.0 / data.size();
  for (auto& v : data) v *= scale;
}

const Fft3& fft_for(int n) {
  static std::mutex cache_mutex;
  static std::map<int, std::unique_ptr<Fft3>> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, std::make_unique<Fft3>(n)).first;
  return *it->second;
}

}  // namespace inls
