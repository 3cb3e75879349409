#include "vilenkin/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>

#include "vilenkin/approximation.hpp"
#include "vilenkin/counterexample.hpp"
#include "vilenkin/random.hpp"
#include "vilenkin/reference/oracles.hpp"

namespace vilenkin {

std::size_t ExperimentResult::passed() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.passed; }));
}

namespace {

constexpr double kTight = 1e-10;

struct Setup {
  ModulusSequence ms;
  std::size_t d;
};

// Resolves the modulus and grid depth. Without --depth the depth is the
// largest d with M_d <= default_cells; any depth with M_d > max_side is
// refused.
Setup resolve(const ExperimentConfig& c, const char* default_modulus, Index default_cells,
              Index max_side) {
  auto ms = ModulusSequence::parse(c.modulus.empty() ? default_modulus : c.modulus);
  std::size_t d = c.depth ? *c.depth : ms.depth_within(default_cells);
  if (d > ms.depth()) {
    throw std::invalid_argument("depth " + std::to_string(d) + " exceeds the " +
                                std::to_string(ms.depth()) + " moduli given");
  }
  if (ms.scale(d) > max_side) {
    throw BudgetExceeded(c.experiment + " at depth " + std::to_string(d) + " needs M_d = " +
                         std::to_string(ms.scale(d)) + " cells per axis, limit is " +
                         std::to_string(max_side));
  }
  return {ms, d};
}

GaugeFunction resolve_gauge(const ExperimentConfig& c, const char* fallback) {
  return GaugeFunction::parse(c.gauge.empty() ? fallback : c.gauge);
}

std::vector<double> resolve_p(const ExperimentConfig& c, std::vector<double> fallback) {
  auto p = c.p.empty() ? std::move(fallback) : c.p;
  for (double v : p)
    if (!(v > 0.0)) throw std::invalid_argument("p must be positive");
  return p;
}

void add_check(ExperimentResult& r, std::string name, bool ok, std::string detail = {}) {
  r.checks.push_back({std::move(name), ok, std::move(detail)});
}

std::string num(double v) { return format_number(v); }
std::string num(Index v) { return format_number(v); }

double sup_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) best = std::max(best, std::abs(a[i] - b[i]));
  return best;
}

double sup_abs(std::span<const Complex> a) {
  double best = 0.0;
  for (const auto& v : a) best = std::max(best, std::abs(v));
  return best;
}

std::vector<CylinderGrid2D> random_trials(const Setup& s, std::size_t trials, std::uint64_t seed,
                                          bool smooth) {
  GridRng rng(seed);
  std::vector<CylinderGrid2D> out;
  for (std::size_t t = 0; t < trials; ++t)
    out.push_back(smooth ? smooth_grid_2d(s.ms, s.d, rng) : random_grid_2d(s.ms, s.d, rng));
  return out;
}

// kernels --------------------------------------------------------------------

ExperimentResult run_kernels(const ExperimentConfig& c) {
  const auto s = resolve(c, "2,3,2,3", Index{256}, Index{1024});
  const Index M = s.ms.scale(s.d);
  const auto psi = character_matrix(s.ms, s.d);
  ExperimentResult r(CsvTable({"n", "closed_direct_error", "block_error"}));

  std::vector<Complex> direct(M, Complex{});
  double worst = 0.0;
  double worst_block = 0.0;
  for (Index n = 0; n <= M; ++n) {
    if (n > 0)
      for (Index x = 0; x < M; ++x) direct[x] += psi[(n - 1) * M + x];
    const auto closed = dirichlet_grid(s.ms, s.d, n);
    const double err = sup_diff(closed.values(), direct);
    worst = std::max(worst, err);
    std::string block_cell;
    const auto scale = std::find(s.ms.scales().begin(), s.ms.scales().begin() + s.d + 1, n);
    if (scale != s.ms.scales().begin() + s.d + 1) {
      const auto j = static_cast<std::size_t>(scale - s.ms.scales().begin());
      double e = 0.0;
      for (Index x = 0; x < M; ++x) {
        const auto point = GroupPoint::from_cell(s.ms, x, s.d);
        e = std::max(e, std::abs(dirichlet_block(j, point) - direct[x]));
      }
      worst_block = std::max(worst_block, e);
      block_cell = num(e);
    }
    r.table.add_row({num(n), num(err), block_cell});
  }
  add_check(r, "closed form equals direct sum for n <= M_d", worst < kTight, "max " + num(worst));
  add_check(r, "D_{M_j} equals the block form", worst_block < kTight, "max " + num(worst_block));
  return r;
}

// transform ------------------------------------------------------------------

ExperimentResult run_transform(const ExperimentConfig& c) {
  const auto s = resolve(c, "2,3,2,3", Index{256}, Index{1024});
  const std::size_t trials = c.trials ? c.trials : 100;
  ExperimentResult r(CsvTable({"trial", "forward_error", "inverse_error", "roundtrip_error"}));
  GridRng rng(c.seed);
  double worst = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto f = random_grid_1d(s.ms, s.d, rng);
    const auto fast = forward_transform(f);
    const auto naive = reference::naive_forward(f);
    const double fwd = sup_diff(fast.coeffs(), naive.coeffs()) / std::max(sup_abs(naive.coeffs()), 1e-300);
    // Reuse the random grid as a spectrum for the inverse direction.
    const Spectrum1D coeffs(s.ms, s.d, {f.values().begin(), f.values().end()});
    const auto inv_fast = inverse_transform(coeffs);
    const auto inv_naive = reference::naive_inverse(coeffs);
    const double inv =
        sup_diff(inv_fast.values(), inv_naive.values()) / std::max(sup_abs(inv_naive.values()), 1e-300);
    const double trip = sup_diff(inverse_transform(fast).values(), f.values());
    worst = std::max({worst, fwd, inv, trip});
    r.table.add_row({num(Index{t}), num(fwd), num(inv), num(trip)});
  }
  add_check(r, "fast transforms match the naive sums and round-trip", worst < kTight,
            "max " + num(worst));

  const Index M = s.ms.scale(s.d);
  const auto psi = character_matrix(s.ms, s.d);
  double defect = 0.0;
  for (Index i = 0; i < M; ++i)
    for (Index j = 0; j < M; ++j) {
      Complex acc{};
      for (Index x = 0; x < M; ++x) acc += psi[i * M + x] * std::conj(psi[j * M + x]);
      defect = std::max(defect, std::abs(acc / static_cast<double>(M) - (i == j ? 1.0 : 0.0)));
    }
  add_check(r, "characters are orthonormal", defect < kTight, "max " + num(defect));
  r.notes.push_back("seed " + std::to_string(c.seed));
  return r;
}

// lemma-glukhov ----------------------------------------------------------------

ExperimentResult run_glukhov(const ExperimentConfig& c) {
  const auto ms = ModulusSequence::parse(c.modulus.empty() ? "2^5" : c.modulus);
  const auto ps = resolve_p(c, {1, 2});
  auto scales = c.scales.empty() ? std::vector<std::size_t>{0, 1, 2, 3} : c.scales;
  ExperimentResult r(CsvTable({"p", "n", "value", "ratio"}));
  double worst = 0.0;
  bool finite = true;
  for (double pd : ps) {
    if (pd != std::floor(pd)) throw std::invalid_argument("Glukhov integral needs integer p");
    const auto p = static_cast<unsigned>(pd);
    for (auto n : scales) {
      const double value = glukhov_integral(ms, p, n);
      const double ratio = std::pow(value, 1.0 / pd) / pd;
      finite = finite && std::isfinite(ratio);
      worst = std::max(worst, ratio);
      r.table.add_row({num(pd), num(Index{n}), num(value), num(ratio)});
    }
  }
  add_check(r, "value^{1/p}/p finite", finite);
  add_check(r, "max value^{1/p}/p <= 10", worst <= 10.0, "max " + num(worst));
  r.notes.push_back("fitted Glukhov constant " + num(worst));
  return r;
}

// lemma3 -----------------------------------------------------------------------

ExperimentResult run_lemma3(const ExperimentConfig& c) {
  const auto s = resolve(c, "2,3,2,3", Index{36}, Index{256});
  if (s.d == 0) throw std::invalid_argument("lemma3 needs depth >= 1");
  const auto ps = resolve_p(c, {2, 4});
  const std::size_t trials = c.trials ? c.trials : 20;
  const auto grids = random_trials(s, trials, c.seed, false);
  ExperimentResult r(CsvTable({"trial", "p", "A", "B", "mean", "ratio"}));
  for (double p : ps) {
    double lo = INFINITY;
    double hi = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
      const double norm = grids[t].sup_norm();
      double fitted = 0.0;
      for (std::size_t A = 0; A < s.d; ++A)
        for (std::size_t B = 0; B < s.d; ++B) {
          const double mean = power_mean_block(grids[t], A, B, p).sup;
          const double ratio = mean / (norm * (p + 1) * (p + 1));
          fitted = std::max(fitted, ratio);
          r.table.add_row({num(Index{t}), num(p), num(Index{A}), num(Index{B}), num(mean), num(ratio)});
        }
      lo = std::min(lo, fitted);
      hi = std::max(hi, fitted);
    }
    add_check(r, "p = " + num(p) + ": fitted C <= 10", hi <= 10.0, "max " + num(hi));
    add_check(r, "p = " + num(p) + ": fitted C within factor 4 across trials", hi < 4.0 * lo,
              "min " + num(lo) + ", max " + num(hi));
    r.notes.push_back("p = " + num(p) + ": fitted C in [" + num(lo) + ", " + num(hi) + "]");
  }
  return r;
}

// lemma4 -----------------------------------------------------------------------

ExperimentResult run_lemma4(const ExperimentConfig& c) {
  const auto s = resolve(c, "2,3,2,3", Index{36}, Index{256});
  const auto ps = resolve_p(c, {1, 2});
  const std::size_t trials = c.trials ? c.trials : 20;
  const auto sweep = parse_sweep(c.sweep, s.ms, s.d);
  const auto grids = random_trials(s, trials, c.seed, false);
  ExperimentResult r(CsvTable({"trial", "p", "n", "k", "lhs", "brace", "fitted"}));
  for (double p : ps) {
    double lo = INFINITY;
    double hi = 0.0;
    const double factor = std::pow(p + 1, 2 * p);
    for (std::size_t t = 0; t < trials; ++t) {
      const auto report = approx_report(grids[t]);
      const auto table = deviation_mean_table(grids[t], sweep, sweep, [p](double u) { return std::pow(u, p); });
      double fitted = 0.0;
      for (std::size_t i = 0; i < table.ns.size(); ++i)
        for (std::size_t j = 0; j < table.ms.size(); ++j) {
          const double lhs = table.at(i, j);
          const double brace = approximation_power_average(report, s.ms, table.ns[i], table.ms[j], p);
          const double C = brace > 0.0 ? std::pow(lhs / (factor * brace), 1.0 / p) : (lhs > 0.0 ? INFINITY : 0.0);
          fitted = std::max(fitted, C);
          r.table.add_row({num(Index{t}), num(p), num(table.ns[i]), num(table.ms[j]), num(lhs), num(brace), num(C)});
        }
      lo = std::min(lo, fitted);
      hi = std::max(hi, fitted);
    }
    add_check(r, "p = " + num(p) + ": fitted C finite", std::isfinite(hi), "max " + num(hi));
    add_check(r, "p = " + num(p) + ": fitted C within factor 4 across trials", hi < 4.0 * lo,
              "min " + num(lo) + ", max " + num(hi));
    r.notes.push_back("p = " + num(p) + ": fitted C in [" + num(lo) + ", " + num(hi) + "]");
  }
  return r;
}

// theorem1 ---------------------------------------------------------------------

// Worst excess of |S_lr f - f| over |S_lr(f - S_{M_L,M_R} f)| + 2 E(L, R) over
// every 1 <= l, r <= M_d and every cell; <= 0 when the chain holds.
double est_chain_excess(const CylinderGrid2D& f) {
  const auto& ms = f.modulus();
  const std::size_t d = f.depth();
  const Index side = f.side();
  const Index cells = side * side;
  const auto fv = f.values();
  const auto spec_f = forward_transform_2d(f);
  double worst = -INFINITY;
  for (std::size_t L = 0; L <= d; ++L)
    for (std::size_t R = 0; R <= d; ++R) {
      const Index l_lo = std::max<Index>(1, ms.scale(L));
      const Index l_hi = L < d ? ms.scale(L + 1) - 1 : side;
      const Index r_lo = std::max<Index>(1, ms.scale(R));
      const Index r_hi = R < d ? ms.scale(R + 1) - 1 : side;
      const auto T = rect_partial_sum(f, ms.scale(L), ms.scale(R));
      std::vector<Complex> residual(cells);
      for (Index q = 0; q < cells; ++q) residual[q] = fv[q] - T.values()[q];
      const double E = sup_abs(residual);
      const Index width = l_hi - l_lo + 1;
      std::vector<double> deviation(width * (r_hi - r_lo + 1) * cells);
      for_each_rect_partial_sum(spec_f, l_lo, l_hi, r_lo, r_hi,
                                [&](Index l, Index r, std::span<const Complex> sum) {
                                  double* out = &deviation[((r - r_lo) * width + (l - l_lo)) * cells];
                                  for (Index q = 0; q < cells; ++q) out[q] = std::abs(sum[q] - fv[q]);
                                });
      const auto spec_g = forward_transform_2d(CylinderGrid2D(ms, d, residual));
      for_each_rect_partial_sum(spec_g, l_lo, l_hi, r_lo, r_hi,
                                [&](Index l, Index r, std::span<const Complex> sum) {
                                  const double* dev = &deviation[((r - r_lo) * width + (l - l_lo)) * cells];
                                  for (Index q = 0; q < cells; ++q)
                                    worst = std::max(worst, dev[q] - (std::abs(sum[q]) + 2.0 * E));
                                });
    }
  return worst;
}

ExperimentResult run_theorem1(const ExperimentConfig& c) {
  const auto s = resolve(c, "2,3,2,3", Index{36}, Index{256});
  if (s.d < 1) throw std::invalid_argument("theorem1 needs depth >= 1");
  if (!(c.A > 0.0)) throw std::invalid_argument("A must be positive");
  const std::size_t trials = c.trials ? c.trials : 10;
  const auto sweep = parse_sweep(c.sweep, s.ms, s.d);
  const auto gauge = GaugeFunction::exp_sqrt(c.A);
  const auto grids = random_trials(s, trials, c.seed, false);
  const auto smooth = random_trials(s, trials, c.seed ^ 0x5bd1e995u, true);
  const Index M = s.ms.scale(s.d);
  ExperimentResult r(CsvTable({"trial", "n", "m", "lhs", "rhs", "ratio"}));

  struct Point {
    double lhs;
    double rhs;
  };
  std::vector<Point> points;
  double global = 0.0;
  double est_excess = -INFINITY;
  bool overflow = false;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto report = approx_report(grids[t]);
    const auto table = strong_mean_table(grids[t], sweep, sweep, gauge);
    double fitted = 0.0;
    for (std::size_t i = 0; i < table.ns.size(); ++i)
      for (std::size_t j = 0; j < table.ms.size(); ++j) {
        const double lhs = table.at(i, j);
        const double rhs = theorem1_rhs(report, s.ms, table.ns[i], table.ms[j], 1.0);
        overflow = overflow || std::isinf(lhs);
        const double ratio = rhs > 0.0 ? lhs / rhs : (lhs > 0.0 ? INFINITY : 0.0);
        fitted = std::max(fitted, ratio);
        points.push_back({lhs, rhs});
        r.table.add_row({num(Index{t}), num(table.ns[i]), num(table.ms[j]), num(lhs), num(rhs), num(ratio)});
      }
    global = std::max(global, fitted);
    r.notes.push_back("trial " + std::to_string(t) + ": c(f, A) = " + num(fitted));
    est_excess = std::max(est_excess, est_chain_excess(grids[t]));
  }
  bool holds = std::isfinite(global) && !overflow;
  for (const auto& pt : points) holds = holds && pt.lhs <= global * pt.rhs * (1 + 1e-12);
  add_check(r, "strong mean <= C_fit * rhs with one global C_fit", holds, "C_fit " + num(global));
  add_check(r, "|S_lr f - f| <= |S_lr(f - S_{M_L,M_R} f)| + 2E cellwise", est_excess <= kTight,
            "max excess " + num(est_excess));

  bool trend = true;
  double worst_trend = 0.0;
  if (M >= 2) {
    for (const auto& g : smooth) {
      const double far = strong_mean_2d(g, M, M, gauge).value;
      const double near = strong_mean_2d(g, 2, 2, gauge).value;
      trend = trend && far < near;
      worst_trend = std::max(worst_trend, far / near);
    }
  }
  add_check(r, "smooth grids: mean at (M_d, M_d) < mean at (2, 2)", trend,
            "max ratio " + num(worst_trend));

  const CylinderGrid2D constant(s.ms, s.d, std::vector<Complex>(M * M, Complex{0.5, -0.25}));
  const double const_lhs = strong_mean_2d(constant, M, M, gauge).value;
  const double const_rhs = theorem1_rhs(constant, M, M, 1.0);
  add_check(r, "constant f: both sides vanish", const_lhs < 1e-6 && const_rhs < 1e-6,
            "lhs " + num(const_lhs) + ", rhs " + num(const_rhs));
  r.notes.push_back("global C_fit = " + num(global));
  return r;
}

// strong-means -------------------------------------------------------------------

ExperimentResult run_strong_means(const ExperimentConfig& c) {
  const auto s = resolve(c, "2^8", Index{64}, Index{256});
  const auto gauge = resolve_gauge(c, "exp-sqrt:A=1");
  const auto sweep = parse_sweep(c.sweep, s.ms, s.d);
  GridRng rng(c.seed);
  const auto f = smooth_grid_2d(s.ms, s.d, rng);
  const Index M = s.ms.scale(s.d);

  ExperimentResult r(CsvTable({"n", "m", "gauge", "value", "overflowed"}));
  const auto table = strong_mean_table(f, sweep, sweep, gauge);
  const GaugeFunction half("half:" + gauge.descriptor(), [gauge](double u) { return 0.5 * gauge(u); });
  const auto lower = strong_mean_table(f, sweep, sweep, half);
  const auto zero = strong_mean_table(f, sweep, sweep, GaugeFunction::zero());
  bool nonneg = true;
  bool monotone = true;
  double zero_max = 0.0;
  for (std::size_t i = 0; i < table.ns.size(); ++i)
    for (std::size_t j = 0; j < table.ms.size(); ++j) {
      const double v = table.at(i, j);
      nonneg = nonneg && v >= 0.0;
      monotone = monotone && lower.at(i, j) <= v + 1e-12;
      zero_max = std::max(zero_max, zero.at(i, j));
      r.table.add_row({num(table.ns[i]), num(table.ms[j]), gauge.descriptor(), num(v),
                       format_bool(std::isinf(v))});
    }
  add_check(r, "means are nonnegative", nonneg);
  add_check(r, "zero gauge gives zero", zero_max == 0.0, "max " + num(zero_max));
  add_check(r, "monotone in the gauge", monotone);
  if (M >= 2) {
    const double far = strong_mean_2d(f, M, M, gauge).value;
    const double near = strong_mean_2d(f, 2, 2, gauge).value;
    add_check(r, "mean at (M_d, M_d) < mean at (2, 2)", far < near,
              num(far) + " vs " + num(near));
  }
  r.notes.push_back("seed " + std::to_string(c.seed) + ", depth " + std::to_string(s.d));
  return r;
}

// fridli-schipp ------------------------------------------------------------------

ExperimentResult run_fridli_schipp(const ExperimentConfig& c) {
  const auto s = resolve(c, "2^10", Index{1024}, Index{1} << 16);
  const auto gauge = resolve_gauge(c, "expm1:A=1");
  auto sweep = parse_sweep(c.sweep, s.ms, s.d);
  GridRng rng(c.seed);
  const auto f = smooth_grid_1d(s.ms, s.d, rng);
  const Index M = s.ms.scale(s.d);
  const Index knee = s.ms.scale(s.d >= 2 ? s.d - 2 : 0);

  ExperimentResult r(CsvTable({"n", "gauge", "value", "overflowed"}));
  const auto values = fridli_schipp_table(f, sweep, gauge);
  for (std::size_t i = 0; i < sweep.size(); ++i)
    r.table.add_row({num(sweep[i]), gauge.descriptor(), num(values[i].value), format_bool(values[i].overflowed)});

  const CylinderGrid1D zero(s.ms, s.d);
  add_check(r, "f = 0 gives 0", fridli_schipp_mean_1d(zero, M, gauge).value == 0.0);
  if (M >= 2) {
    const auto psi1 = sample_character(s.ms, s.d, 1);
    const double v = fridli_schipp_mean_1d(psi1, 1, gauge).value;
    add_check(r, "f = psi_1, n = 1 gives g(1)", std::abs(v - gauge(1.0)) <= 1e-12 * std::max(1.0, gauge(1.0)),
              num(v) + " vs " + num(gauge(1.0)));
  }
  const Index tail[] = {knee, M};
  const auto ends = fridli_schipp_table(f, tail, gauge);
  if (knee < M) {
    add_check(r, "mean decays beyond the step depth", ends[1].value < ends[0].value,
              num(ends[1].value) + " at M_d vs " + num(ends[0].value) + " at M_{d-2}");
  }
  r.notes.push_back("seed " + std::to_string(c.seed) + ", depth " + std::to_string(s.d));
  return r;
}

// counterexample -----------------------------------------------------------------

ExperimentResult run_counterexample(const ExperimentConfig& c) {
  const auto ms = ModulusSequence::parse(c.modulus.empty() ? "[2,3]^24" : c.modulus);
  const auto psi = resolve_gauge(c, "pow:1.5");
  if (c.blocks < 1) throw std::invalid_argument("at least one block is needed");
  const std::size_t budget = ms.depth_within(c.max_cells);

  std::optional<CounterexampleParams> params;
  std::vector<std::string> refusals;
  for (std::size_t J = c.blocks; J >= 1 && !params; --J) {
    try {
      params = choose_params(ms, psi, c.c_prime, J, budget);
    } catch (const BudgetExceeded& e) {
      refusals.push_back("J = " + std::to_string(J) + ": " + e.what());
    }
  }
  if (!params) {
    std::string msg = "counterexample infeasible within M_d <= " + std::to_string(c.max_cells);
    for (const auto& s : refusals) msg += "; " + s;
    throw BudgetExceeded(msg);
  }

  const Counterexample ce(*params);
  ExperimentResult r(ce.report());
  const std::size_t J = params->blocks();
  for (const auto& s : refusals) r.notes.push_back("reduced: " + s);
  if (J < c.blocks) {
    r.notes.push_back("ran with J = " + std::to_string(J) + " instead of " + std::to_string(c.blocks));
  }

  const auto pc = check_params(*params);
  add_check(r, "B_j > 2 B_{j-1}", pc.doubling);
  add_check(r, "psi(B_j)/B_j > 5 j ln a / c'", pc.ratio);
  add_check(r, "A_j increasing", pc.increasing);
  add_check(r, "N_{A_j} <= a^{2 A_j}", pc.scale_bound);

  double fitted_growth = INFINITY;
  double fitted_kernel = INFINITY;
  for (std::size_t k = 1; k <= J; ++k) {
    const auto jd = ce.j_decomposition(k);
    const auto diag = ce.divergence_diagnostic(k);
    const std::string at = " (k = " + std::to_string(k) + ")";
    add_check(r, "J3 = 0" + at, jd.J3 == 0.0, num(jd.J3));
    add_check(r, "J2 <= tail bound" + at, jd.J2 <= ce.j2_bound(k) * (1 + 1e-12) + 1e-15,
              num(jd.J2) + " vs " + num(ce.j2_bound(k)));
    add_check(r, "|S| >= J1 - J2 - J3" + at, diag.partial_sum_abs >= jd.J1 - jd.J2 - jd.J3 - kTight);
    add_check(r, "phase alignment" + at, ce.phase_alignment_error(k) <= kTight,
              num(ce.phase_alignment_error(k)));
    add_check(r, "block amplitude <= 1/(j+1)" + at,
              ce.blocks()[k - 1].grid.sup_norm() <= 1.0 / static_cast<double>(k + 1) + 1e-15);
    if (diag.partial_sum_abs >= static_cast<double>(params->B[k])) {
      const double floor_value =
          psi(static_cast<double>(params->B[k])) - 2.0 * std::log(static_cast<double>(params->N[k]));
      add_check(r, "diagnostic >= psi(B_k) - 2 ln N" + at, diag.log_value >= floor_value - kTight);
    }
    if (auto full = ce.full_log_mean(k)) {
      add_check(r, "full mean >= single-term diagnostic" + at, *full >= diag.log_value - kTight,
                num(*full) + " vs " + num(diag.log_value));
    }
    fitted_growth = std::min(fitted_growth, diag.partial_sum_abs * static_cast<double>(k) /
                                                static_cast<double>(params->A[k]));
    fitted_kernel = std::min(fitted_kernel, ce.kernel_lower_constant(k));
  }
  add_check(r, "kernel lower constant positive", fitted_kernel > 0.0, num(fitted_kernel));
  add_check(r, "growth constant positive", fitted_growth > 0.0, num(fitted_growth));
  if (J >= 2) {
    bool increasing = true;
    for (std::size_t k = 2; k <= J; ++k)
      increasing = increasing && ce.divergence_diagnostic(k).log_value > ce.divergence_diagnostic(k - 1).log_value;
    add_check(r, "diagnostic increases with k", increasing);
  }
  r.notes.push_back("fitted |S_{N_{A_k}}(f;0)| >= c' A_k / k with c' = " + num(fitted_growth));
  r.notes.push_back("fitted |D_{N_{A_k}}| >= c M_{2s} with c = " + num(fitted_kernel));
  return r;
}

using Runner = ExperimentResult (*)(const ExperimentConfig&);

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> table = {
      {"kernels", run_kernels},
      {"transform", run_transform},
      {"lemma-glukhov", run_glukhov},
      {"lemma3", run_lemma3},
      {"lemma4", run_lemma4},
      {"theorem1", run_theorem1},
      {"strong-means", run_strong_means},
      {"fridli-schipp", run_fridli_schipp},
      {"counterexample", run_counterexample},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = {"kernels",  "transform",    "lemma-glukhov",
                                                 "lemma3",   "lemma4",       "theorem1",
                                                 "strong-means", "fridli-schipp", "counterexample"};
  return names;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  const auto it = runners().find(config.experiment);
  if (it == runners().end()) throw std::invalid_argument("unknown experiment '" + config.experiment + "'");
  return it->second(config);
}

std::vector<Index> parse_sweep(const std::string& spec, const ModulusSequence& ms, std::size_t d) {
  const Index M = ms.scale(d);
  std::vector<Index> out;
  if (spec.empty() || spec == "dyadic" || spec == "ladder") {
    for (std::size_t k = 0; k <= d; ++k) out.push_back(ms.scale(k));
  } else if (spec == "diag") {
    for (Index n = 1; n <= M; ++n) out.push_back(n);
  } else {
    std::size_t pos = 0;
    while (pos <= spec.size()) {
      const auto comma = std::min(spec.find(',', pos), spec.size());
      Index v = 0;
      const auto* first = spec.data() + pos;
      const auto* last = spec.data() + comma;
      const auto [ptr, ec] = std::from_chars(first, last, v);
      if (ec != std::errc{} || ptr != last) {
        throw std::invalid_argument("bad sweep entry '" + spec.substr(pos, comma - pos) + "'");
      }
      if (v < 1 || v > M) {
        throw std::invalid_argument("sweep entry " + std::to_string(v) + " outside [1, " +
                                    std::to_string(M) + "]");
      }
      out.push_back(v);
      pos = comma + 1;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace vilenkin
