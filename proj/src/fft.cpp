#include "fracwave/fft.hpp"

#include <unsupported/Eigen/FFT>

namespace fracwave {

namespace {
// One engine per thread; the kissfft backend caches plans per length.
Eigen::FFT<double>& engine() {
  thread_local Eigen::FFT<double> fft;
  return fft;
}
}  // namespace

CVec dft(const CVec& x) {
  CVec out(x.size());
  engine().fwd(out, x);
  return out;
}

CVec dft(const Vec& x) {
  CVec cx = x.cast<Complex>();
  return dft(cx);
}

CVec idft(const CVec& X) {
  CVec out(X.size());
  engine().inv(out, X);
  return out;
}

Vec idft_real(const CVec& X) { return idft(X).real(); }

}  // namespace fracwave
