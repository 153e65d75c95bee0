#include <fftw3.h>

#include <algorithm>
#include <memory>
#include <mutex>

#include "discfrac/glbinomial.hpp"

namespace discfrac {

namespace {

// The FFTW planner is not re-entrant; plan execution on fresh arrays is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(void* p) const noexcept { fftw_free(p); }
};

template <class T>
std::unique_ptr<T[], FftwFree> fftw_buffer(std::size_t count) {
  return std::unique_ptr<T[], FftwFree>(static_cast<T*>(fftw_malloc(sizeof(T) * count)));
}

class R2CPair {
 public:
  R2CPair(int size, double* real, fftw_complex* spectrum) {
    std::lock_guard lock(planner_mutex());
    forward_ = fftw_plan_dft_r2c_1d(size, real, spectrum, FFTW_ESTIMATE);
    inverse_ = fftw_plan_dft_c2r_1d(size, spectrum, real, FFTW_ESTIMATE);
  }
  ~R2CPair() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(forward_);
    fftw_destroy_plan(inverse_);
  }
  R2CPair(const R2CPair&) = delete;
  R2CPair& operator=(const R2CPair&) = delete;

  void forward(double* in, fftw_complex* out) const { fftw_execute_dft_r2c(forward_, in, out); }
  void inverse(fftw_complex* in, double* out) const { fftw_execute_dft_c2r(inverse_, in, out); }

 private:
  fftw_plan forward_;
  fftw_plan inverse_;
};

std::size_t fft_size(std::size_t min_len) {
  std::size_t n = 1;
  while (n < min_len) n <<= 1;
  return n;
}

}  // namespace

std::vector<double> causal_convolve_direct(std::span<const double> w, std::span<const double> x) {
  const std::size_t L = x.size();
  std::vector<double> y(L, 0.0);
  for (std::size_t i = 0; i < L; ++i) {
    const std::size_t kmax = std::min(i, w.size() - 1);
    double acc = 0.0;
    for (std::size_t k = 0; k <= kmax; ++k) acc += w[k] * x[i - k];
    y[i] = acc;
  }
  return y;
}

std::vector<double> causal_convolve_fft(std::span<const double> w, std::span<const double> x) {
  const std::size_t L = x.size();
  const std::size_t K = std::min(w.size(), L);
  if (L == 0) return {};
  const std::size_t N = fft_size(L + K - 1);
  const std::size_t bins = N / 2 + 1;

  auto a = fftw_buffer<double>(N);
  auto b = fftw_buffer<double>(N);
  auto fa = fftw_buffer<fftw_complex>(bins);
  auto fb = fftw_buffer<fftw_complex>(bins);
  std::fill_n(a.get(), N, 0.0);
  std::fill_n(b.get(), N, 0.0);
  std::copy_n(w.begin(), K, a.get());
  std::copy_n(x.begin(), L, b.get());

  const R2CPair plan(static_cast<int>(N), a.get(), fa.get());
  plan.forward(a.get(), fa.get());
  plan.forward(b.get(), fb.get());
  for (std::size_t i = 0; i < bins; ++i) {
    const double re = fa[i][0] * fb[i][0] - fa[i][1] * fb[i][1];
    const double im = fa[i][0] * fb[i][1] + fa[i][1] * fb[i][0];
    fa[i][0] = re;
    fa[i][1] = im;
  }
  plan.inverse(fa.get(), a.get());

  const double scale = 1.0 / static_cast<double>(N);
  std::vector<double> y(L);
  for (std::size_t i = 0; i < L; ++i) y[i] = a[i] * scale;
  return y;
}

}  // namespace discfrac
