// msi_calibrate: brute-force sweeps that produce the frozen constants in
// include/msi/calibration.hpp. Run once; the printed maxima are doubled and
// pasted into the header.
//
//   square-sum: max over 2 <= q <= 2000, even 2 <= h <= 200 of
//               sum_{j<q} c(j,q)^2 / min(1, h/q)
//   far-part:   max over the reconstruction grid (8 <= N <= 200, even h <= 8
//               with 4h <= N, 1 <= Q <= 12, five g presets) and A in
//               {N, N log N} of (|far_delta| + |far_sigma|) / (A h)

#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#include "msi/calibration.hpp"
#include "msi/integral.hpp"
#include "msi/spectral.hpp"

namespace {

// Independent of the library's kernel path: plain sines, no exact reduction.
double brute_square_sum(std::int64_t q, std::int64_t h) {
  double s = 0.0;
  for (std::int64_t j = 1; j < q; ++j) {
    const double beta = static_cast<double>(j) / static_cast<double>(q);
    const double top = std::sin(std::numbers::pi * static_cast<double>(h) * beta);
    const double bottom = std::sin(std::numbers::pi * beta);
    const double c = (2.0 / static_cast<double>(h)) * top * top / (bottom * bottom) / static_cast<double>(q);
    s += c * c;
  }
  return s;
}

}  // namespace

int main() {
  double worst_square = 0.0;
  std::int64_t arg_q = 0, arg_h = 0;
  for (std::int64_t h = 2; h <= 200; h += 2) {
    for (std::int64_t q = 2; q <= 2000; ++q) {
      const double bound = std::min(1.0, static_cast<double>(h) / static_cast<double>(q));
      const double r = brute_square_sum(q, h) / bound;
      if (r > worst_square) {
        worst_square = r;
        arg_q = q;
        arg_h = h;
      }
    }
  }
  std::printf("square-sum: max ratio %.17g at q=%lld h=%lld -> C = %.6g (frozen %.6g)\n", worst_square,
              static_cast<long long>(arg_q), static_cast<long long>(arg_h), 2.0 * worst_square,
              msi::calibration::square_sum_constant);

  const char* presets[] = {"delta1", "unit", "mobius", "mobius-squared", "random:1"};
  double worst_far = 0.0;
  std::int64_t far_n = 0, far_h = 0, far_q = 0;
  const char* far_g = "";
  for (const char* name : presets) {
    const auto preset = msi::Preset::parse(name);
    for (std::int64_t n = 8; n <= 200; ++n) {
      const auto g = preset.table<double>(static_cast<std::size_t>(2 * n + 8));
      for (std::int64_t h = 2; h <= 8 && 4 * h <= n; h += 2) {
        for (std::int64_t q = 1; q <= 12 && q <= n + h; ++q) {
          for (const double a : {static_cast<double>(n), static_cast<double>(n) * std::log(static_cast<double>(n))}) {
            auto cfg = msi::make_config(n, h, msi::SupportCutoff::fixed(q), a);
            const auto rep = msi::far_part_bound_check(cfg, g);
            if (rep.ratio > worst_far) {
              worst_far = rep.ratio;
              far_n = n;
              far_h = h;
              far_q = q;
              far_g = name;
            }
          }
        }
      }
    }
  }
  std::printf("far-part: max |far|/(A h) %.17g at N=%lld h=%lld Q=%lld g=%s -> C_far = %.6g (frozen %.6g)\n",
              worst_far, static_cast<long long>(far_n), static_cast<long long>(far_h), static_cast<long long>(far_q),
              far_g, 2.0 * worst_far, msi::calibration::far_part_constant);
  return 0;
}
