#include "clifft/fft.hpp"

#include <fftw3.h>

#include <map>
#include <stdexcept>

namespace clifft {

namespace {

struct PlanCache {
  std::map<std::pair<int, int>, fftw_plan> plans;

  fftw_plan get(int n, int sign) {
    const auto key = std::make_pair(n, sign);
    auto it = plans.find(key);
    if (it != plans.end()) return it->second;
    // Plan once on a scratch buffer; FFTW_UNALIGNED lets the plan run on any
    // caller array, and FFTW_ESTIMATE keeps planning deterministic.
    fftw_complex* scratch = fftw_alloc_complex(size_t(n));
    fftw_plan p = fftw_plan_dft_1d(n, scratch, scratch, sign == -1 ? FFTW_FORWARD : FFTW_BACKWARD,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(scratch);
    if (p == nullptr) throw std::runtime_error("fft_inplace: FFTW failed to create a plan");
    plans.emplace(key, p);
    return p;
  }
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

}  // namespace

void fft_inplace(cplx* data, int n, int sign) {
  if (n < 1) throw std::invalid_argument("fft_inplace: length must be >= 1");
  if (sign != -1 && sign != 1) throw std::invalid_argument("fft_inplace: sign must be -1 or +1");
  fftw_plan p = cache().get(n, sign);
  fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(data), reinterpret_cast<fftw_complex*>(data));
}

}  // namespace clifft
