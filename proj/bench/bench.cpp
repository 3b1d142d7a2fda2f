// Timing comparison between the serial reference kernels and the OpenMP
// production paths, plus a bitwise agreement check where the algorithms are
// identical. Build target: dualwave_bench. Run with DUALWAVE_THREADS=N to
// pin the worker count.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <vector>

#include "dualwave/bridge.hpp"
#include "dualwave/dark_energy.hpp"
#include "dualwave/fft.hpp"
#include "dualwave/grid.hpp"
#include "dualwave/horizon.hpp"
#include "dualwave/parallel.hpp"
#include "dualwave/rng.hpp"

using namespace dualwave;

static double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

static void bench_fft() {
  const std::size_t n = 4096;
  std::vector<cplx> v(n);
  CounterRng rng(1, 0);
  for (cplx& z : v) z = cplx{rng.next_double() - 0.5, rng.next_double() - 0.5};

  auto t0 = std::chrono::steady_clock::now();
  const auto ref = serial::dft(v.data(), n, -1);
  const double t_ref = ms_since(t0);

  std::vector<cplx> fast(v);
  t0 = std::chrono::steady_clock::now();
  fft_radix2(fast.data(), n, -1);
  const double t_fast = ms_since(t0);

  double err = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    err = std::max(err, std::abs(fast[i] - ref[i]));
    scale = std::max(scale, std::abs(ref[i]));
  }
  std::printf("%-28s n=%-8zu serial %10.2f ms   fast %10.3f ms   speedup %8.1fx   max|diff| %.2e (rel %.2e)\n",
              "dft vs fft_radix2", n, t_ref, t_fast, t_ref / t_fast, err,
              err / scale);
}

static void bench_batched_transform() {
  // 2-D representation map: rows/columns transform in parallel
  const std::size_t n = 256;
  Grid g = make_grid_2d(n, -64.0, 0.5, n, -64.0, 0.5);
  Field f = make_field(Sector::KE, g);
  CounterRng rng(2, 0);
  for (cplx& z : f.samples) z = cplx{rng.next_double() - 0.5, rng.next_double() - 0.5};
  const MapConvention conv{};
  const PhysParams phys{};

  auto t0 = std::chrono::steady_clock::now();
  Field a = to_xt(f, conv, phys);
  const double t1 = ms_since(t0);
  std::printf("%-28s %zux%zu transform %8.2f ms   (threads=%d)\n",
              "to_xt 2-D", n, n, t1, max_threads());
}

static void bench_spectrum() {
  HorizonParams p = scan_params(1.0, std::size_t{1} << 18);
  // 2^18 is aliased for the reference geometry; shrink to a legal demo size
  p.x_grid = make_grid(std::size_t{1} << 18, 0.0, 13.5 / static_cast<double>(1 << 18));
  p.k0 = 75.0 * std::exp(6.75);
  p = validated(p);
  const Field psi = chirped_wave(p);

  auto t0 = std::chrono::steady_clock::now();
  const SpectrumReport rep = thermal_spectrum(psi, p);
  const double t1 = ms_since(t0);
  std::printf("%-28s n=%-8zu spectrum %9.2f ms   kappa_fit=%.4f (threads=%d)\n",
              "thermal_spectrum", p.x_grid.axis(0).n, t1, rep.kappa_fit,
              max_threads());
}

static void bench_ensemble() {
  EnsembleSpec spec;
  spec.weight.grid = make_grid_2d(64, -8.0, 0.25, 64, -8.0, 0.25);
  spec.weight.amplitude.assign(64 * 64, 0.0);
  for (std::size_t i = 0; i < 64; ++i)
    for (std::size_t j = 0; j < 64; ++j) {
      const double k = spec.weight.grid.coord(0, i);
      const double e = spec.weight.grid.coord(1, j);
      spec.weight.amplitude[i * 64 + j] = std::exp(-(k * k + e * e) / 8.0);
    }
  spec.n_samples = 256;
  spec.master_seed = 42;

  auto t0 = std::chrono::steady_clock::now();
  const DensityReport rep = ensemble_density(spec);
  const double t1 = ms_since(t0);
  std::printf("%-28s 64x64 x %zu samples %7.2f ms   cv=%.4f (threads=%d)\n",
              "ensemble_density", spec.n_samples, t1, rep.spatial_cv,
              max_threads());
}

int main() {
  std::printf("dualwave kernel benchmark (threads=%d)\n", max_threads());
  bench_fft();
  bench_batched_transform();
  bench_spectrum();
  bench_ensemble();
  return 0;
}
