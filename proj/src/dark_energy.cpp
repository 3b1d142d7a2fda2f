#include "dualwave/dark_energy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "dualwave/bridge.hpp"
#include "dualwave/fft.hpp"
#include "dualwave/parallel.hpp"
#include "dualwave/rng.hpp"

namespace dualwave {

void validate(const SpectralWeight& w) {
  if (w.grid.axes() == 0)
    throw ValidationError("weight.grid: uninitialized");
  if (w.amplitude.size() != w.grid.size())
    throw ValidationError("weight.amplitude: length does not match grid size");
  double sum = 0.0;
  for (double a : w.amplitude) {
    if (!std::isfinite(a) || a < 0.0)
      throw ValidationError("weight.amplitude: entries must be finite and >= 0");
    sum += a * a;
  }
  if (!std::isfinite(sum * w.grid.cell_volume()))
    throw ValidationError("weight.amplitude: sum A^2 overflows");
}

void validate(const EnsembleSpec& spec) {
  validate(spec.weight);
  if (spec.n_samples < 1)
    throw ValidationError("n_samples: must be >= 1");
}

double rho_exact_sum(const SpectralWeight& w) {
  double sum = 0.0;
  for (double a : w.amplitude) sum += a * a;
  return sum * w.grid.cell_volume();
}

// Mode weight: with phi = s A e^{i theta} and the unitary physical map, the
// expected projected density is (s^2 / V_xt) * sum A^2 dk dE. Choosing
// s = sqrt(V_xt) pins <|psi|^2> to the Riemann sum of A^2 exactly.
static double mode_weight(const Grid& kegrid, const PhysParams& p) {
  double v_xt = 1.0;
  for (int a = 0; a < kegrid.axes(); ++a) {
    const AxisSpec dual = kegrid.dual_axis(a, a == 1 ? p.hbar : 1.0);
    v_xt *= static_cast<double>(dual.n) * dual.spacing;
  }
  return std::sqrt(v_xt);
}

Field sample_realization(const EnsembleSpec& spec, std::size_t index) {
  validate(spec);
  if (index >= spec.n_samples)
    throw ValidationError("index: out of range (>= n_samples)");

  const PhysParams phys{};  // natural units
  const MapConvention conv{};
  const Grid& g = spec.weight.grid;
  const double s = mode_weight(g, phys);

  Field phi = make_field(Sector::KE, g, "realization " + std::to_string(index));
  CounterRng rng(spec.master_seed, static_cast<std::uint64_t>(index));
  const double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t m = 0; m < phi.samples.size(); ++m) {
    const double theta = two_pi * rng.next_double();
    phi.samples[m] = std::polar(s * spec.weight.amplitude[m], theta);
  }
  return to_xt(phi, conv, phys);
}

// Generates densities sample-by-sample in parallel chunks and reduces them
// serially in index order, so the accumulated result is independent of the
// worker count.
template <typename PerSample>
static void reduce_in_order(const EnsembleSpec& spec, std::size_t vec_len,
                            PerSample&& per_sample, std::vector<double>& acc) {
  acc.assign(vec_len, 0.0);
  const std::size_t chunk =
      std::max<std::size_t>(1, 2 * static_cast<std::size_t>(max_threads()));
  std::vector<std::vector<double>> buf(std::min(chunk, spec.n_samples));
  for (std::size_t start = 0; start < spec.n_samples; start += chunk) {
    const std::size_t count = std::min(chunk, spec.n_samples - start);
    parallel_for(count, [&](std::size_t i) {
      buf[i] = per_sample(start + i);
    });
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < vec_len; ++j) acc[j] += buf[i][j];
  }
  const double inv = 1.0 / static_cast<double>(spec.n_samples);
  for (double& v : acc) v *= inv;
}

static double cv_of(const std::vector<double>& v) {
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  if (mean == 0.0) return 0.0;
  double var = 0.0;
  for (double x : v) var += (x - mean) * (x - mean);
  var /= static_cast<double>(v.size());
  return std::sqrt(var) / mean;
}

DensityReport ensemble_density(const EnsembleSpec& spec) {
  validate(spec);
  const Grid& g = spec.weight.grid;
  const std::size_t n_tot = g.size();

  std::vector<double> mean_density;
  reduce_in_order(
      spec, n_tot,
      [&](std::size_t s) {
        const Field psi = sample_realization(spec, s);
        std::vector<double> d(n_tot);
        for (std::size_t j = 0; j < n_tot; ++j) d[j] = std::norm(psi.samples[j]);
        return d;
      },
      mean_density);

  DensityReport rep;
  rep.n_samples = spec.n_samples;
  rep.rho_exact_sum = rho_exact_sum(spec.weight);
  double mean = 0.0;
  for (double v : mean_density) mean += v;
  mean /= static_cast<double>(n_tot);
  rep.rho_estimate = mean;
  rep.spatial_cv = cv_of(mean_density);

  if (g.axes() == 2) {
    const std::size_t n0 = g.axis(0).n, n1 = g.axis(1).n;
    std::vector<double> prof0(n0, 0.0), prof1(n1, 0.0);
    for (std::size_t i0 = 0; i0 < n0; ++i0)
      for (std::size_t i1 = 0; i1 < n1; ++i1) {
        const double v = mean_density[i0 * n1 + i1];
        prof0[i0] += v;
        prof1[i1] += v;
      }
    for (double& v : prof0) v /= static_cast<double>(n1);
    for (double& v : prof1) v /= static_cast<double>(n0);
    rep.cv_axis0 = cv_of(prof0);
    rep.cv_axis1 = cv_of(prof1);
  } else {
    rep.cv_axis0 = rep.spatial_cv;
    rep.cv_axis1 = 0.0;
  }
  return rep;
}

Coherence coherence_function(const EnsembleSpec& spec, int axis) {
  validate(spec);
  const Grid& g = spec.weight.grid;
  if (axis < 0 || axis >= g.axes())
    throw ValidationError("coherence axis: out of range");

  // The xt grid of the realizations.
  const PhysParams phys{};
  std::array<AxisSpec, 2> dual{};
  for (int a = 0; a < g.axes(); ++a)
    dual[static_cast<std::size_t>(a)] = g.dual_axis(a, a == 1 ? phys.hbar : 1.0);
  const std::size_t n = dual[static_cast<std::size_t>(axis)].n;
  const std::size_t rows = g.axes() == 2 ? dual[static_cast<std::size_t>(1 - axis)].n : 1;
  const std::size_t stride = (g.axes() == 2 && axis == 0) ? dual[1].n : 1;

  // Mean power spectrum along the axis; the lag transform is applied once at
  // the end (transform of the average = average of transforms).
  std::vector<double> mean_power;
  reduce_in_order(
      spec, n,
      [&](std::size_t s) {
        const Field psi = sample_realization(spec, s);
        std::vector<double> p(n, 0.0);
        std::vector<cplx> buf(n);
        for (std::size_t r = 0; r < rows; ++r) {
          const cplx* src = psi.samples.data() +
                            (stride == 1 ? r * n : r);
          for (std::size_t j = 0; j < n; ++j)
            buf[j] = stride == 1 ? src[j] : src[j * stride];
          fft_radix2(buf.data(), n, -1);
          for (std::size_t j = 0; j < n; ++j) p[j] += std::norm(buf[j]);
        }
        const double inv_rows = 1.0 / static_cast<double>(rows);
        for (double& v : p) v *= inv_rows;
        return p;
      },
      mean_power);

  // C(lag) = (1/n^2) sum_j p_j e^{-2 pi i j lag / n}
  std::vector<cplx> corr(n);
  for (std::size_t j = 0; j < n; ++j) corr[j] = cplx{mean_power[j], 0.0};
  fft_radix2(corr.data(), n, -1);
  const double inv_n2 = 1.0 / (static_cast<double>(n) * static_cast<double>(n));

  const double spacing = dual[static_cast<std::size_t>(axis)].spacing;
  Coherence out;
  out.lag.resize(n);
  out.value.resize(n);
  // emit in signed-lag order, -n/2 .. n/2-1
  for (std::size_t i = 0; i < n; ++i) {
    const long long signed_lag =
        static_cast<long long>(i) - static_cast<long long>(n / 2);
    const std::size_t src = static_cast<std::size_t>(
        (signed_lag + static_cast<long long>(n)) % static_cast<long long>(n));
    out.lag[i] = static_cast<double>(signed_lag) * spacing;
    out.value[i] = corr[src] * inv_n2;
  }
  return out;
}

}  // namespace dualwave
