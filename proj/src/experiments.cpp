#include "lcagabor/experiments.hpp"

#include "lcagabor/errors.hpp"
#include "lcagabor/zak.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

namespace lcagabor {

namespace {

constexpr double kTrendSlack = 1e-9;
constexpr double kBoundSlack = 1e-12;

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double spectral_norm(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  if (solver.info() != Eigen::Success) throw NumericalBreakdown("eigen-solver failed on frame operator difference");
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

double condition_number(const FrameReport& r) {
  if (r.lower <= 0.0) return std::numeric_limits<double>::infinity();
  return r.upper / r.lower;
}

}  // namespace

bool SweepReport::all_passed() const {
  return std::all_of(assertions.begin(), assertions.end(), [](const SweepAssertion& a) { return a.passed; });
}

std::string SweepReport::to_csv() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_double(row[i]);
    out << '\n';
  }
  return out.str();
}

std::vector<double> SweepReport::column(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw InvalidInput("no column '" + name + "'");
  const auto c = static_cast<std::size_t>(it - columns.begin());
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(row[c]);
  return out;
}

Window periodized_gaussian(int length) {
  if (length < 2) throw InvalidInput("periodized Gaussian needs L >= 2");
  const double root = std::sqrt(static_cast<double>(length));
  // exp(-pi t^2) < 1e-17 once |t| > 3.6; every dropped term has |t| >= (|k| - 1) sqrt(L).
  const int kmax = 2 + static_cast<int>(std::ceil(3.6 / root));
  std::vector<Complex> values(static_cast<std::size_t>(length));
  for (int j = 0; j < length; ++j) {
    double sum = 0.0;
    for (int k = -kmax; k <= kmax; ++k) {
      const double t = j / root + k * root;
      sum += std::exp(-std::numbers::pi * t * t);
    }
    values[static_cast<std::size_t>(j)] = sum;
  }
  return Window(FiniteLcaGroup({length}), std::move(values)).normalized();
}

// ---------------------------------------------------------------------------

GaborInstance random_gabor_instance(Rng& rng, std::size_t max_order) {
  if (max_order < 2) throw InvalidInput("max_order must be at least 2");
  std::vector<int> orders;
  if (max_order >= 4 && uniform_index(rng, 2) == 1) {
    const std::size_t first = 2 + uniform_index(rng, std::min<std::size_t>(5, max_order / 2 - 1));
    const std::size_t second = 2 + uniform_index(rng, max_order / first - 1);
    orders = {static_cast<int>(first), static_cast<int>(second)};
  } else {
    orders = {static_cast<int>(2 + uniform_index(rng, max_order - 1))};
  }
  const FiniteLcaGroup group(orders);
  Window g = Window::random(group, rng);
  Window h = Window::random(group, rng);
  const std::size_t plane_size = group.cardinality() * group.cardinality();
  std::vector<TfPoint> gens;
  const std::size_t count = 1 + uniform_index(rng, 2);
  for (std::size_t i = 0; i < count; ++i) gens.push_back(plane_point(group, uniform_index(rng, plane_size)));
  return {std::move(g), std::move(h), TfLattice::generated_by(group, gens)};
}

double janssen_discrepancy(const Window& g, const Window& h, const TfLattice& lattice) {
  const ComplexMatrix s = frame_operator(g, h, lattice);
  const ComplexMatrix j = janssen_operator(g, h, lattice);
  return (s - j).cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------------------

SweepReport window_stability_sweep(const Window& g, const TfLattice& lattice, const std::vector<double>& epsilons,
                                   std::uint64_t seed) {
  require_same_group(g.group(), lattice.group());
  if (epsilons.empty()) throw InvalidInput("empty epsilon grid");
  for (std::size_t i = 1; i < epsilons.size(); ++i)
    if (!(epsilons[i] > epsilons[i - 1])) throw InvalidInput("epsilon grid must be strictly increasing");
  const FrameReport base = frame_bounds(g, lattice);
  if (!base.is_frame) throw NotAFrame("window does not give a frame over this lattice");

  Rng rng(seed);
  Window direction = Window::random(g.group(), rng);
  direction = Complex(1.0 / s0_norm(direction, g.normalized())) * direction;

  const TfLattice adjoint = adjoint_lattice(lattice);
  const double inv_vol = 1.0 / to_double(lattice.volume());
  const ComplexMatrix s0 = frame_operator(g, g, lattice);
  const std::vector<Complex> c0 = janssen_coefficients(g, g, adjoint);

  SweepReport report;
  report.columns = {"epsilon", "lower", "upper", "is_frame", "operator_difference", "janssen_bound"};
  bool dominated = true;
  bool weyl = true;
  bool preserved = true;
  bool zero_identical = true;
  std::string first_violation;
  for (double eps : epsilons) {
    const Window gp = g + Complex(eps) * direction;
    const ComplexMatrix sp = frame_operator(gp, gp, lattice);
    const FrameReport r = frame_bounds(gp, lattice);
    const double diff = spectral_norm(sp - s0);
    const std::vector<Complex> cp = janssen_coefficients(gp, gp, adjoint);
    double bound = 0.0;
    for (std::size_t i = 0; i < cp.size(); ++i) bound += std::abs(cp[i] - c0[i]);
    bound *= inv_vol;

    report.rows.push_back({eps, r.lower, r.upper, r.is_frame ? 1.0 : 0.0, diff, bound});
    const double slack = kBoundSlack * std::max(1.0, base.upper);
    if (diff > bound + slack) {
      dominated = false;
      if (first_violation.empty()) first_violation = "eps=" + format_double(eps);
    }
    if (std::abs(r.lower - base.lower) > bound + slack || std::abs(r.upper - base.upper) > bound + slack) weyl = false;
    if (bound < base.lower && !r.is_frame) preserved = false;
    if (eps == 0.0 && (r.lower != base.lower || r.upper != base.upper)) zero_identical = false;
  }
  report.assertions.push_back({"janssen_bound_dominates", dominated, first_violation});
  report.assertions.push_back({"bounds_move_within_janssen_bound", weyl, ""});
  report.assertions.push_back({"frame_kept_while_bound_below_lower", preserved, ""});
  report.assertions.push_back({"zero_perturbation_identical", zero_identical, ""});
  return report;
}

// ---------------------------------------------------------------------------

SweepReport critical_density_trend(const std::vector<int>& ns) {
  if (ns.empty()) throw InvalidInput("empty n list");
  for (int n : ns)
    if (n < 2) throw InvalidInput("critical density trend needs n >= 2");

  SweepReport report;
  report.columns = {"n", "lower", "upper", "condition", "zak_min", "control_lower", "control_upper",
                    "control_condition"};
  for (int n : ns) {
    const int length = n * n;
    const Window g = periodized_gaussian(length);
    const FiniteLcaGroup group({length});
    const std::size_t step = static_cast<std::size_t>(n);
    const Subgroup time = Subgroup::generated_by(group, std::span<const std::size_t>(&step, 1));
    const FrameReport critical = frame_bounds(g, TfLattice::critical(time));
    const ZakMinimum zmin = min_modulus(zak_transform(g, time));

    const int control_length = 2 * n * n;
    const Window gc = periodized_gaussian(control_length);
    const FiniteLcaGroup control_group({control_length});
    const Subgroup ctime = Subgroup::generated_by(control_group, std::span<const std::size_t>(&step, 1));
    const Subgroup cfreq = Subgroup::generated_by(control_group, std::span<const std::size_t>(&step, 1));
    const FrameReport control = frame_bounds(gc, TfLattice::separable(ctime, cfreq));

    report.rows.push_back({static_cast<double>(n), critical.lower, critical.upper, condition_number(critical),
                           zmin.value, control.lower, control.upper, condition_number(control)});
  }

  const auto cond = report.column("condition");
  const auto zak = report.column("zak_min");
  const auto ctrl = report.column("control_condition");
  bool increasing = true;
  bool decreasing = true;
  std::string inc_detail;
  std::string dec_detail;
  for (std::size_t i = 1; i < cond.size(); ++i) {
    if (!(cond[i] > cond[i - 1] + kTrendSlack)) {
      increasing = false;
      inc_detail += "B/A " + format_double(cond[i - 1]) + " -> " + format_double(cond[i]) + "; ";
    }
    if (!(zak[i] < zak[i - 1] - kTrendSlack)) {
      decreasing = false;
      dec_detail += "zak " + format_double(zak[i - 1]) + " -> " + format_double(zak[i]) + "; ";
    }
  }
  const auto [lo, hi] = std::minmax_element(ctrl.begin(), ctrl.end());
  const bool bounded = std::isfinite(*hi) && *hi <= 2.0 * *lo;
  report.assertions.push_back({"condition_strictly_increasing", increasing, inc_detail});
  report.assertions.push_back({"zak_min_strictly_decreasing", decreasing, dec_detail});
  report.assertions.push_back(
      {"control_condition_within_factor_2", bounded, format_double(*lo) + " .. " + format_double(*hi)});
  return report;
}

// ---------------------------------------------------------------------------

SweepReport density_exhaustive(const FiniteLcaGroup& group, int windows_per_lattice, std::uint64_t seed,
                               std::size_t subgroup_cap) {
  if (windows_per_lattice < 1) throw InvalidInput("need at least one window per lattice");
  const FiniteLcaGroup plane = FiniteLcaGroup::plane(group);
  const std::vector<Subgroup> subgroups = all_subgroups(plane, subgroup_cap);
  const std::vector<Subgroup> time_subgroups = all_subgroups(group, subgroup_cap);

  Rng rng(seed);
  std::vector<Window> windows;
  for (int i = 0; i < windows_per_lattice; ++i) windows.push_back(Window::random(group, rng));

  SweepReport report;
  report.columns = {"lattice", "size", "volume", "frames", "windows", "zak_checked", "zak_agree"};
  std::size_t counterexamples = 0;
  std::size_t zak_mismatches = 0;
  std::size_t zak_checks = 0;
  bool singleton_never_frame = true;

  for (std::size_t li = 0; li < subgroups.size(); ++li) {
    const TfLattice lattice(group, subgroups[li]);
    const double vol = to_double(lattice.volume());
    int frames = 0;
    for (const Window& g : windows)
      if (frame_bounds(g, lattice).is_frame) ++frames;
    if (lattice.volume() > 1 && frames > 0) ++counterexamples;
    if (lattice.size() == 1 && group.cardinality() > 1 && frames > 0) singleton_never_frame = false;

    double checked = 0.0;
    double agree = 0.0;
    if (lattice.volume() == 1) {
      for (const Subgroup& time : time_subgroups) {
        if (!(TfLattice::critical(time) == lattice)) continue;
        std::vector<Window> probes = {Window::delta(group), Window::constant(group)};
        probes.insert(probes.end(), windows.begin(), windows.end());
        for (const Window& g : probes) {
          const bool by_zak = zak_frame_bounds(g, time).is_frame;
          const bool by_eigen = frame_bounds(g, lattice).is_frame;
          ++zak_checks;
          checked += 1.0;
          if (by_zak == by_eigen) agree += 1.0;
          else ++zak_mismatches;
        }
      }
    }
    report.rows.push_back({static_cast<double>(li), static_cast<double>(lattice.size()), vol,
                           static_cast<double>(frames), static_cast<double>(windows_per_lattice), checked, agree});
  }

  report.assertions.push_back(
      {"no_frame_above_volume_1", counterexamples == 0, std::to_string(counterexamples) + " counterexamples"});
  report.assertions.push_back({"critical_frame_iff_zak_nonvanishing", zak_mismatches == 0,
                               std::to_string(zak_mismatches) + " of " + std::to_string(zak_checks) + " disagree"});
  report.assertions.push_back({"singleton_lattice_never_frame", singleton_never_frame, ""});
  return report;
}

}  // namespace lcagabor
