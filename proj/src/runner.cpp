#include "dualwave/runner.hpp"

#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <vector>

#include "dualwave/bridge.hpp"
#include "dualwave/config.hpp"
#include "dualwave/dark_energy.hpp"
#include "dualwave/dump.hpp"
#include "dualwave/errors.hpp"
#include "dualwave/grid.hpp"
#include "dualwave/horizon.hpp"
#include "dualwave/rng.hpp"
#include "dualwave/sector_ke.hpp"
#include "dualwave/sector_xt.hpp"

namespace dualwave {

namespace fs = std::filesystem;

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class Csv {
public:
  Csv(const fs::path& path, const std::string& header) : out_(path) {
    if (!out_) throw std::runtime_error("cannot open " + path.string());
    out_ << header << "\n";
  }
  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i)
      out_ << (i ? "," : "") << cells[i];
    out_ << "\n";
  }

private:
  std::ofstream out_;
};

// Gaussian packet with density std sigma about `center`, boosted by a
// conjugate-coordinate mean: exp(i*boost*coord).
Field gaussian_packet(Sector sector, const Grid& grid, double center,
                      double sigma, double boost) {
  if (!(sigma > 0.0)) throw ValidationError("initial.sigma: must be positive");
  Field f = make_field(sector, grid, "gaussian packet");
  const double norm = std::pow(2.0 * std::numbers::pi * sigma * sigma, -0.25);
  for (std::size_t j = 0; j < grid.axis(0).n; ++j) {
    const double c = grid.coord(0, j);
    const double envelope =
        norm * std::exp(-(c - center) * (c - center) / (4.0 * sigma * sigma));
    f.samples[j] = std::polar(envelope, boost * c);
  }
  return f;
}

double density_std(const Field& f) {
  double w = 0.0, m1 = 0.0;
  for (std::size_t j = 0; j < f.samples.size(); ++j) {
    const double d = std::norm(f.samples[j]);
    w += d;
    m1 += d * f.grid.coord(0, j);
  }
  m1 /= w;
  double m2 = 0.0;
  for (std::size_t j = 0; j < f.samples.size(); ++j) {
    const double c = f.grid.coord(0, j) - m1;
    m2 += std::norm(f.samples[j]) * c * c;
  }
  return std::sqrt(m2 / w);
}

struct OutputSpec {
  fs::path dir;
  bool emit_fields = false;
};

OutputSpec resolve_output(const Config& cfg, const RunOptions& opts) {
  OutputSpec o;
  o.dir = opts.out_dir ? *opts.out_dir : cfg.get_string("output.dir", "out");
  o.emit_fields = cfg.get_bool("output.emit_fields", false);
  fs::create_directories(o.dir);
  return o;
}

void echo_config(const Config& cfg, const OutputSpec& out) {
  std::ofstream f(out.dir / "config_echo.ini");
  f << cfg.canonical_text();
}

void reject_unknown_keys(const Config& cfg) {
  const auto extra = cfg.unconsumed();
  if (!extra.empty())
    throw ValidationError("unknown config key: " + extra.front());
}

Grid grid_1d_from(const Config& cfg) {
  const auto n = cfg.get_u64("grid.n");
  const double origin = cfg.get_double("grid.origin");
  const double spacing = cfg.get_double("grid.spacing");
  return make_grid(static_cast<std::size_t>(n), origin, spacing);
}

// ---- evolve-xt ------------------------------------------------------------

std::vector<double> build_potential(const Config& cfg, const Grid& grid) {
  const std::string kind = cfg.get_string("xt.potential", "free");
  std::vector<double> v(grid.axis(0).n, 0.0);
  if (kind == "free") return v;
  if (kind == "harmonic") {
    const double omega = cfg.get_double("xt.omega", 1.0);
    const double center = cfg.get_double("xt.center", 0.0);
    const double mass = cfg.get_double("xt.mass", 1.0);
    for (std::size_t j = 0; j < v.size(); ++j) {
      const double x = grid.coord(0, j) - center;
      v[j] = 0.5 * mass * omega * omega * x * x;
    }
    return v;
  }
  throw ValidationError("xt.potential: unknown kind \"" + kind +
                        "\" (free|harmonic)");
}

int run_evolve_xt(const Config& cfg, const RunOptions& opts) {
  const Grid grid = grid_1d_from(cfg);
  XtParams params;
  params.mass = cfg.get_double("xt.mass", 1.0);
  params.dt = cfg.get_double("xt.dt");
  params.hbar = cfg.get_double("xt.hbar", 1.0);
  params.potential = build_potential(cfg, grid);
  const auto n_steps = static_cast<std::size_t>(cfg.get_u64("xt.n_steps"));
  const auto record_every =
      static_cast<std::size_t>(cfg.get_u64("output.record_every", 0));

  Field psi = gaussian_packet(Sector::XT, grid,
                              cfg.get_double("initial.center", 0.0),
                              cfg.get_double("initial.sigma", 1.0),
                              cfg.get_double("initial.boost", 0.0));
  const OutputSpec out = resolve_output(cfg, opts);
  reject_unknown_keys(cfg);
  echo_config(cfg, out);

  const double norm0 = norm2(psi);
  if (out.emit_fields) dump_field(psi, (out.dir / "psi_initial.dmf1").string());

  Csv csv(out.dir / "evolve_xt.csv", "step,t,norm2,sigma_x,energy");
  const auto emit = [&](std::size_t step, const Field& f) {
    csv.row({std::to_string(step), fmt(params.dt * static_cast<double>(step)),
             fmt(norm2(f)), fmt(density_std(f)),
             fmt(energy_expectation(f, params))});
  };
  emit(0, psi);
  const std::size_t chunk = record_every == 0 ? n_steps : record_every;
  std::size_t done = 0;
  while (done < n_steps) {
    const std::size_t todo = std::min(chunk, n_steps - done);
    psi = evolve_xt(psi, params, todo);
    done += todo;
    emit(done, psi);
  }

  const double drift = std::abs(norm2(psi) - norm0) / norm0;
  if (drift > 1e-8)
    throw NumericalError("evolve-xt: unitarity drift " + fmt(drift) +
                         " exceeds 1e-8");
  if (out.emit_fields) dump_field(psi, (out.dir / "psi_final.dmf1").string());
  std::cout << "evolve-xt: steps=" << n_steps
            << " t=" << fmt(params.dt * static_cast<double>(n_steps))
            << " norm_drift=" << fmt(drift)
            << " energy=" << fmt(energy_expectation(psi, params)) << "\n";
  return exit_ok;
}

// ---- evolve-ke ------------------------------------------------------------

int run_evolve_ke(const Config& cfg, const RunOptions& opts) {
  const Grid grid = grid_1d_from(cfg);
  KeParams params;
  params.alpha = cfg.get_double("ke.alpha");
  params.v0 = cfg.get_double("ke.v0", 0.0);
  params.beta = cfg.get_double("ke.beta", 0.0);
  params.dE = cfg.get_double("ke.dE");
  params.hbar = cfg.get_double("ke.hbar", 1.0);
  const auto n_steps = static_cast<std::size_t>(cfg.get_u64("ke.n_steps"));
  const auto record_every =
      static_cast<std::size_t>(cfg.get_u64("output.record_every", 0));

  Field phi = gaussian_packet(Sector::KE, grid,
                              cfg.get_double("initial.center", 0.0),
                              cfg.get_double("initial.sigma", 1.0),
                              cfg.get_double("initial.boost", 0.0));
  const OutputSpec out = resolve_output(cfg, opts);
  reject_unknown_keys(cfg);
  echo_config(cfg, out);

  const double norm0 = norm2(phi);
  if (out.emit_fields) dump_field(phi, (out.dir / "phi_initial.dmf1").string());

  Csv csv(out.dir / "evolve_ke.csv", "step,E,norm2,sigma_k");
  const auto emit = [&](std::size_t step, const Field& f) {
    csv.row({std::to_string(step), fmt(params.dE * static_cast<double>(step)),
             fmt(norm2(f)), fmt(density_std(f))});
  };
  emit(0, phi);
  const std::size_t chunk = record_every == 0 ? n_steps : record_every;
  std::size_t done = 0;
  while (done < n_steps) {
    const std::size_t todo = std::min(chunk, n_steps - done);
    phi = evolve_ke(phi, params, todo);
    done += todo;
    emit(done, phi);
  }

  const double drift = std::abs(norm2(phi) - norm0) / norm0;
  if (drift > 1e-9)
    throw NumericalError("evolve-ke: unitarity drift " + fmt(drift) +
                         " exceeds 1e-9");
  if (out.emit_fields) dump_field(phi, (out.dir / "phi_final.dmf1").string());
  std::cout << "evolve-ke: steps=" << n_steps
            << " E=" << fmt(params.dE * static_cast<double>(n_steps))
            << " norm_drift=" << fmt(drift)
            << " sigma_k=" << fmt(density_std(phi)) << "\n";
  return exit_ok;
}

// ---- dark-energy ----------------------------------------------------------

SpectralWeight build_weight(const Config& cfg) {
  const auto nk = static_cast<std::size_t>(cfg.get_u64("grid.n_k"));
  const auto ne = static_cast<std::size_t>(cfg.get_u64("grid.n_e"));
  const double ok = cfg.get_double("grid.origin_k");
  const double sk = cfg.get_double("grid.spacing_k");
  const double oe = cfg.get_double("grid.origin_e");
  const double se = cfg.get_double("grid.spacing_e");
  SpectralWeight w;
  w.grid = make_grid_2d(nk, ok, sk, ne, oe, se);
  w.amplitude.assign(w.grid.size(), 0.0);

  const std::string kind = cfg.get_string("weight.type");
  const double amp = cfg.get_double("weight.amplitude", 1.0);
  if (kind == "gaussian") {
    const double sig_k = cfg.get_double("weight.sigma_k");
    const double sig_e = cfg.get_double("weight.sigma_e");
    const double c_k = cfg.get_double("weight.center_k", 0.0);
    const double c_e = cfg.get_double("weight.center_e", 0.0);
    for (std::size_t i = 0; i < nk; ++i)
      for (std::size_t j = 0; j < ne; ++j) {
        const double k = w.grid.coord(0, i) - c_k;
        const double e = w.grid.coord(1, j) - c_e;
        w.amplitude[i * ne + j] =
            amp * std::exp(-k * k / (2.0 * sig_k * sig_k) -
                           e * e / (2.0 * sig_e * sig_e));
      }
  } else if (kind == "single_mode") {
    const auto ik = static_cast<std::size_t>(cfg.get_u64("weight.index_k"));
    const auto ie = static_cast<std::size_t>(cfg.get_u64("weight.index_e"));
    if (ik >= nk || ie >= ne)
      throw ValidationError("weight.index_k/index_e: outside the grid");
    w.amplitude[ik * ne + ie] = amp;
  } else {
    throw ValidationError("weight.type: unknown kind \"" + kind +
                          "\" (gaussian|single_mode)");
  }
  return w;
}

int run_dark_energy(const Config& cfg, const RunOptions& opts) {
  EnsembleSpec spec;
  spec.weight = build_weight(cfg);
  spec.n_samples = static_cast<std::size_t>(cfg.get_u64("ensemble.n_samples"));
  spec.master_seed = opts.seed ? *opts.seed : cfg.get_u64("ensemble.seed", 0);
  const bool want_coherence = cfg.get_bool("output.coherence", true);
  const OutputSpec out = resolve_output(cfg, opts);
  {
    // record the resolved seed in the echo
    Config resolved = cfg;
    resolved.set("ensemble.seed", std::to_string(spec.master_seed));
    reject_unknown_keys(cfg);
    echo_config(resolved, out);
  }

  const DensityReport rep = ensemble_density(spec);
  Csv csv(out.dir / "density_report.csv",
          "rho_estimate,rho_exact_sum,spatial_cv,cv_x,cv_t,n_samples");
  csv.row({fmt(rep.rho_estimate), fmt(rep.rho_exact_sum), fmt(rep.spatial_cv),
           fmt(rep.cv_axis0), fmt(rep.cv_axis1), std::to_string(rep.n_samples)});

  if (want_coherence) {
    for (int axis = 0; axis < 2; ++axis) {
      const Coherence c = coherence_function(spec, axis);
      Csv ccsv(out.dir / (axis == 0 ? "coherence_x.csv" : "coherence_t.csv"),
               "lag,re,im");
      for (std::size_t i = 0; i < c.lag.size(); ++i)
        ccsv.row({fmt(c.lag[i]), fmt(c.value[i].real()), fmt(c.value[i].imag())});
    }
  }
  if (out.emit_fields)
    dump_field(sample_realization(spec, 0),
               (out.dir / "realization_0.dmf1").string());

  // statistical contract
  if (rep.rho_exact_sum > 0.0) {
    const double tol = 5.0 / std::sqrt(static_cast<double>(spec.n_samples));
    if (std::abs(rep.rho_estimate - rep.rho_exact_sum) >
        tol * rep.rho_exact_sum)
      throw NumericalError("dark-energy: rho_estimate deviates beyond "
                           "5/sqrt(n_samples)");
    if (rep.spatial_cv > tol)
      throw NumericalError("dark-energy: spatial cv beyond 5/sqrt(n_samples)");
  }
  std::cout << "dark-energy: rho_estimate=" << fmt(rep.rho_estimate)
            << " rho_exact=" << fmt(rep.rho_exact_sum)
            << " spatial_cv=" << fmt(rep.spatial_cv)
            << " n=" << rep.n_samples << "\n";
  return exit_ok;
}

// ---- horizon ---------------------------------------------------------------

HorizonParams horizon_params_from(const Config& cfg, double kappa) {
  const auto n = static_cast<std::size_t>(
      cfg.get_u64("grid.n", std::uint64_t{1} << 22));
  HorizonParams p;
  if (cfg.has("grid.origin") || cfg.has("grid.spacing")) {
    p.kappa = kappa;
    p.x_grid = make_grid(n, cfg.get_double("grid.origin"),
                         cfg.get_double("grid.spacing"));
    p.k0 = cfg.get_double("horizon.k0", 75.0 * std::exp(9.0) * kappa);
    p.epsilon = cfg.get_double("horizon.epsilon", 0.05 * kappa);
  } else {
    p = scan_params(kappa, n);
    p.k0 = cfg.get_double("horizon.k0", p.k0);
    p.epsilon = cfg.get_double("horizon.epsilon", p.epsilon);
  }
  const std::string w = cfg.get_string("horizon.window", "raised_cosine");
  if (w == "none")
    p.window = Window::none;
  else if (w == "raised_cosine")
    p.window = Window::raised_cosine;
  else
    throw ValidationError("horizon.window: unknown kind \"" + w +
                          "\" (none|raised_cosine)");
  return validated(p);
}

int run_horizon(const Config& cfg, const RunOptions& opts) {
  const bool has_list = cfg.has("horizon.kappa_list");
  const bool has_single = cfg.has("horizon.kappa");
  if (has_list == has_single)
    throw ValidationError(
        "horizon.kappa / horizon.kappa_list: exactly one must be given");

  if (has_list) {
    const std::vector<double> kappas = cfg.get_double_list("horizon.kappa_list");
    if (cfg.has("grid.origin") || cfg.has("grid.spacing"))
      throw ValidationError(
          "grid.origin/spacing: kappa_list runs use the reference geometry; "
          "give a single kappa for custom grids");
    const HorizonParams tmpl = horizon_params_from(cfg, kappas.front());
    const OutputSpec out = resolve_output(cfg, opts);
    reject_unknown_keys(cfg);
    echo_config(cfg, out);

    const auto rows = surface_gravity_scan(kappas, tmpl);
    Csv csv(out.dir / "scan.csv", "kappa,kappa_fit,rel_err");
    for (const ScanRow& r : rows)
      csv.row({fmt(r.kappa), fmt(r.kappa_fit), fmt(r.rel_err)});
    double worst = 0.0;
    for (const ScanRow& r : rows) worst = std::max(worst, r.rel_err);
    std::cout << "horizon scan: " << rows.size()
              << " rows, worst rel_err=" << fmt(worst) << "\n";
    return exit_ok;
  }

  const double kappa = cfg.get_double("horizon.kappa");
  const HorizonParams p = horizon_params_from(cfg, kappa);
  const bool emit_ode = cfg.get_bool("output.emit_ode", false);
  const OutputSpec out = resolve_output(cfg, opts);
  reject_unknown_keys(cfg);
  echo_config(cfg, out);

  const Field psi = chirped_wave(p);
  const SpectrumReport rep = thermal_spectrum(psi, p);

  Csv csv(out.dir / "spectrum.csv", "omega,power_pos,power_neg,log_ratio");
  for (std::size_t i = 0; i < rep.omega.size(); ++i)
    csv.row({fmt(rep.omega[i]), fmt(rep.power_pos[i]), fmt(rep.power_neg[i]),
             fmt(rep.log_ratio[i])});

  Csv sum(out.dir / "summary.csv",
          "kappa,kappa_fit,rel_err,fit_residual,fit_lo,fit_hi,epsilon,window");
  sum.row({fmt(p.kappa), fmt(rep.kappa_fit),
           fmt(std::abs(rep.kappa_fit - p.kappa) / p.kappa),
           fmt(rep.fit_residual), fmt(rep.fit_window_lo), fmt(rep.fit_window_hi),
           fmt(p.epsilon), p.window == Window::none ? "none" : "raised_cosine"});

  if (emit_ode) {
    const std::vector<double> k = solve_boundary_ode(p);
    Csv ode(out.dir / "ode.csv", "x,k");
    const std::size_t stride = std::max<std::size_t>(1, k.size() / 4096);
    for (std::size_t j = 0; j < k.size(); j += stride)
      ode.row({fmt(p.x_grid.coord(0, j)), fmt(k[j])});
  }
  if (out.emit_fields) dump_field(psi, (out.dir / "wave.dmf1").string());

  std::cout << "horizon: kappa=" << fmt(p.kappa)
            << " kappa_fit=" << fmt(rep.kappa_fit)
            << " rel_err=" << fmt(std::abs(rep.kappa_fit - p.kappa) / p.kappa)
            << " fit_residual=" << fmt(rep.fit_residual) << "\n";
  return exit_ok;
}

}  // namespace

int run_command(const RunOptions& opts) {
  Config cfg;
  try {
    if (!fs::exists(opts.config_path)) {
      std::cerr << "error: config not found: " << opts.config_path << "\n";
      return exit_config;
    }
    cfg = Config::parse_file(opts.config_path);
  } catch (const std::exception& e) {
    std::cerr << "error: unreadable config: " << e.what() << "\n";
    return exit_config;
  }

  try {
    if (opts.command == "evolve-xt") return run_evolve_xt(cfg, opts);
    if (opts.command == "evolve-ke") return run_evolve_ke(cfg, opts);
    if (opts.command == "dark-energy") return run_dark_energy(cfg, opts);
    if (opts.command == "horizon") return run_horizon(cfg, opts);
    std::cerr << "error: unknown command " << opts.command << "\n";
    return exit_validation;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return exit_validation;
  } catch (const NumericalError& e) {
    std::cerr << "numerical contract violation: " << e.what() << "\n";
    return exit_numerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_validation;
  }
}

// ---- selfcheck -------------------------------------------------------------

namespace {

struct Check {
  std::string name;
  std::function<void()> body;  // throws on failure
};

Field random_ke_field(std::size_t n, std::uint64_t seed) {
  const double dk = 0.25;
  Grid g = make_grid(n, -static_cast<double>(n / 2) * dk, dk);
  Field f = make_field(Sector::KE, g, "selfcheck noise");
  CounterRng rng(seed, 0);
  for (cplx& z : f.samples)
    z = cplx{rng.next_double() - 0.5, rng.next_double() - 0.5};
  return f;
}

}  // namespace

int selfcheck(const std::string& corrupt) {
  const MapConvention conv{};
  const PhysParams phys{};
  bool all_ok = true;

  const auto run_check = [&](const std::string& name, const std::function<void()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
      body();
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
      std::cout << "ok   " << name << " (" << ms << " ms)\n";
    } catch (const std::exception& e) {
      all_ok = false;
      std::cout << "FAIL " << name << ": " << e.what() << "\n";
    }
  };

  run_check("round-trip", [&] {
    Field phi = random_ke_field(256, 11);
    Field mid = to_xt(phi, conv, phys);
    if (corrupt == "round-trip")
      for (cplx& z : mid.samples) z = std::conj(z);  // test hook: wrong sign
    const Field back = to_ke(mid, conv, phys);
    double err = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < phi.samples.size(); ++i) {
      err = std::max(err, std::abs(back.samples[i] - phi.samples[i]));
      scale = std::max(scale, std::abs(phi.samples[i]));
    }
    if (err > 1e-12 * scale)
      throw NumericalError("max deviation " + fmt(err));
  });

  run_check("parseval", [&] {
    const Field phi = random_ke_field(256, 12);
    const double a = norm2(phi);
    const double b = norm2(to_xt(phi, conv, phys));
    if (std::abs(a - b) > 1e-12 * a)
      throw NumericalError("norm2 " + fmt(a) + " -> " + fmt(b));
  });

  run_check("unitarity-xt", [&] {
    const Grid g = make_grid(256, -16.0, 0.125);
    XtParams p;
    p.mass = 1.0;
    p.dt = 1e-3;
    p.potential.resize(256);
    for (std::size_t j = 0; j < 256; ++j) {
      const double x = g.coord(0, j);
      p.potential[j] = 0.5 * x * x;
    }
    const Field psi = gaussian_packet(Sector::XT, g, 1.0, 1.0, 0.0);
    const double n0 = norm2(psi);
    const double n1 = norm2(evolve_xt(psi, p, 200));
    if (std::abs(n1 - n0) > 1e-10 * n0)
      throw NumericalError("norm drift " + fmt(std::abs(n1 - n0) / n0));
  });

  run_check("unitarity-ke", [&] {
    KeParams p;
    p.alpha = 0.7;
    p.v0 = 0.3;
    p.dE = 1e-3;
    Field phi = gaussian_packet(Sector::KE, make_grid(256, -16.0, 0.125),
                                0.0, 1.0, 0.0);
    const double n0 = norm2(phi);
    for (int i = 0; i < 500; ++i) phi = evolve_ke(phi, p, 1);
    if (std::abs(norm2(phi) - n0) > 1e-12 * n0)
      throw NumericalError("norm drift " + fmt(std::abs(norm2(phi) - n0) / n0));
  });

  run_check("hermiticity-n32", [&] {
    const Grid g = make_grid(32, -16.0 * 0.25, 0.25);
    const auto repx = hermiticity_check([](const Field& f) { return apply_X(f); }, g);
    if (repx.max_asymmetry > 1e-12)
      throw NumericalError("apply_X asymmetry " + fmt(repx.max_asymmetry));
    const double alpha = 0.5, v0 = -1.25;
    const auto repg = hermiticity_check(
        [&](const Field& f) {
          const Field x2 = apply_X(apply_X(f));
          Field out = f;
          for (std::size_t i = 0; i < out.samples.size(); ++i)
            out.samples[i] = alpha * x2.samples[i] + v0 * f.samples[i];
          return out;
        },
        g);
    for (const cplx& ev : repg.eigenvalues) {
      if (std::abs(ev.imag()) > 1e-10)
        throw NumericalError("generator eigenvalue not real: " + fmt(ev.imag()));
      if (ev.real() < v0 - 1e-10)
        throw NumericalError("generator eigenvalue below v0: " + fmt(ev.real()));
    }
  });

  run_check("dark-energy-single-mode", [&] {
    EnsembleSpec spec;
    spec.weight.grid = make_grid_2d(8, -1.0, 0.25, 8, -1.0, 0.25);
    spec.weight.amplitude.assign(64, 0.0);
    spec.weight.amplitude[3 * 8 + 5] = 2.0;
    spec.n_samples = 4;
    spec.master_seed = 99;
    const DensityReport rep = ensemble_density(spec);
    if (rep.spatial_cv != 0.0)
      throw NumericalError("single mode cv " + fmt(rep.spatial_cv));
    if (std::abs(rep.rho_estimate - rep.rho_exact_sum) > 1e-12 * rep.rho_exact_sum)
      throw NumericalError("single mode rho mismatch");
  });

  run_check("chirp-consistency", [&] {
    HorizonParams p;
    p.kappa = 1.0;
    p.k0 = 10.0;
    p.x_grid = make_grid(4096, 0.0, 8.0 / 4096.0);
    p.epsilon = 0.05;
    const Field psi = chirped_wave(p);
    const auto k_est = local_wavenumber(psi);
    const auto k_ode = solve_boundary_ode(p);
    double worst = 0.0;
    for (std::size_t j = 1; j + 1 < k_est.size(); ++j)
      worst = std::max(worst, std::abs(k_est[j] - k_ode[j]) / k_ode[j]);
    if (worst > 1e-4)
      throw NumericalError("interior relative error " + fmt(worst));
  });

  std::cout << (all_ok ? "selfcheck: all checks passed\n"
                       : "selfcheck: FAILURES above\n");
  return all_ok ? 0 : 1;
}

}  // namespace dualwave
