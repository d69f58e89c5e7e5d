#include "lcagabor/cli.hpp"

#include "lcagabor/adeles.hpp"
#include "lcagabor/errors.hpp"
#include "lcagabor/experiments.hpp"
#include "lcagabor/gabor.hpp"
#include "lcagabor/padic.hpp"
#include "lcagabor/parse.hpp"
#include "lcagabor/zak.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace lcagabor::cli {

namespace {

using nlohmann::json;

/// Thrown by handlers when a check fails; exit code 1.
struct AssertionFailed {
  std::string message;
};

constexpr double kJanssenTolerance = 1e-10;

std::string format17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json frame_report_json(const FrameReport& r) {
  return {{"lower", r.lower}, {"upper", r.upper}, {"is_frame", r.is_frame}, {"condition", optional_number(r.condition)}};
}

json sweep_json(const SweepReport& report) {
  json assertions = json::array();
  for (const auto& a : report.assertions)
    assertions.push_back({{"name", a.name}, {"passed", a.passed}, {"detail", a.detail}});
  return {{"columns", report.columns}, {"rows", report.rows}, {"assertions", assertions}, {"passed", report.all_passed()}};
}

json rational_vector(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

std::string read_document(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidInput("expected a number, got '" + item + "'");
    }
  }
  if (out.empty()) throw InvalidInput("empty number list");
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (double v : parse_double_list(text)) {
    if (v != static_cast<int>(v)) throw InvalidInput("expected integers");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

struct Options {
  std::string group = "Z4";
  std::string window = "gauss";
  std::string dual;
  std::string lattice = "full-time";
  std::string subgroup = "gens=1";
  std::string format = "json";
  std::uint64_t seed = 0;
  double tolerance = kFrameTolerance;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gabor frames on finite abelian groups with exact p-adic and adelic arithmetic", "lcagabor"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Print help for every command");

  Options o;
  std::function<void()> action;

  auto add_group = [&](CLI::App* c) { c->add_option("--group", o.group, "Finite group, e.g. Z4 or Z2xZ3")->capture_default_str(); };
  auto add_window = [&](CLI::App* c) {
    c->add_option("--window", o.window, "delta0 | delta<k> | gauss | const | random | JSON array")->capture_default_str();
  };
  auto add_lattice = [&](CLI::App* c) {
    c->add_option("--lattice", o.lattice, "plane-gens=(..) | plane-gens=(X)x(W) | critical=(..) | full-time | full-plane")
        ->capture_default_str();
  };
  auto add_seed = [&](CLI::App* c) { c->add_option("--seed", o.seed, "Seed for random windows and instances")->capture_default_str(); };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  };

  // frame-bounds ------------------------------------------------------------
  auto* fb = app.add_subcommand("frame-bounds", "Optimal frame bounds A, B from the eigenvalues of the frame operator");
  add_group(fb);
  add_window(fb);
  add_lattice(fb);
  add_seed(fb);
  fb->add_option("--tol", o.tolerance, "Frame declared when A > tol * B")->capture_default_str();
  fb->callback([&] {
    action = [&] {
      const auto group = parse_group(o.group);
      Rng rng(o.seed);
      const Window g = parse_window(group, o.window, rng);
      const TfLattice lattice = parse_lattice(group, o.lattice);
      json j = frame_report_json(frame_bounds(g, lattice, o.tolerance));
      j["group"] = group.to_string();
      j["lattice"] = format_lattice(lattice);
      j["volume"] = to_string(lattice.volume());
      j["density"] = to_string(density_check(lattice).verdict);
      emit(out, j);
    };
  });

  // janssen-check -----------------------------------------------------------
  int instances = 100;
  std::size_t max_order = 36;
  auto* jc = app.add_subcommand("janssen-check", "Frame operator against its Janssen expansion over the adjoint lattice");
  jc->add_option("--instances", instances, "Number of random instances")->capture_default_str()->check(CLI::PositiveNumber);
  jc->add_option("--max-order", max_order, "Largest |G| drawn")->capture_default_str()->check(CLI::Range(2, 4096));
  add_seed(jc);
  jc->callback([&] {
    action = [&] {
      Rng rng(o.seed);
      double worst = 0.0;
      for (int i = 0; i < instances; ++i) {
        const GaborInstance inst = random_gabor_instance(rng, max_order);
        worst = std::max(worst, janssen_discrepancy(inst.g, inst.h, inst.lattice));
      }
      const bool ok = worst <= kJanssenTolerance;
      emit(out, {{"instances", instances}, {"seed", o.seed}, {"max_difference", worst}, {"tolerance", kJanssenTolerance},
                 {"passed", ok}});
      if (!ok) throw AssertionFailed{"Janssen mismatch " + format17(worst)};
    };
  });

  // wexler-raz ----------------------------------------------------------------
  auto* wr = app.add_subcommand("wexler-raz", "Dual-window test <g, pi(z) h> = vol(D) delta_{z,0} on the adjoint lattice");
  add_group(wr);
  add_window(wr);
  add_lattice(wr);
  add_seed(wr);
  wr->add_option("--dual", o.dual, "Dual window literal; default is the canonical dual");
  wr->callback([&] {
    action = [&] {
      const auto group = parse_group(o.group);
      Rng rng(o.seed);
      const Window g = parse_window(group, o.window, rng);
      const TfLattice lattice = parse_lattice(group, o.lattice);
      const Window h = o.dual.empty() ? canonical_dual(g, lattice) : parse_window(group, o.dual, rng);
      const WexlerRazResult r = wexler_raz_check(g, h, lattice);
      json dual = json::array();
      for (const auto& v : h.values()) dual.push_back({v.real(), v.imag()});
      emit(out, {{"holds", r.holds}, {"residual", r.residual}, {"volume", to_string(lattice.volume())}, {"dual", dual}});
      if (!r.holds) throw AssertionFailed{"Wexler-Raz relations fail"};
    };
  });

  // adjoint -------------------------------------------------------------------
  auto* ad = app.add_subcommand("adjoint", "Adjoint lattice: points whose shifts commute with every shift of D");
  add_group(ad);
  add_lattice(ad);
  ad->callback([&] {
    action = [&] {
      const auto group = parse_group(o.group);
      const TfLattice lattice = parse_lattice(group, o.lattice);
      const TfLattice adj = adjoint_lattice(lattice);
      emit(out, {{"lattice", format_lattice(lattice)},
                 {"adjoint", format_lattice(adj)},
                 {"size", lattice.size()},
                 {"adjoint_size", adj.size()},
                 {"product", lattice.size() * adj.size()},
                 {"volume", to_string(lattice.volume())},
                 {"adjoint_volume", to_string(adj.volume())}});
    };
  });

  // zak -------------------------------------------------------------------------
  auto* zk = app.add_subcommand("zak", "Zak transform on the whole plane as CSV, with min modulus and quasiperiodicity residual");
  add_group(zk);
  add_window(zk);
  add_seed(zk);
  zk->add_option("--subgroup", o.subgroup, "Lattice in G, e.g. gens=2")->capture_default_str();
  zk->callback([&] {
    action = [&] {
      const auto group = parse_group(o.group);
      Rng rng(o.seed);
      const Window g = parse_window(group, o.window, rng);
      const ZakGrid grid = zak_transform(g, parse_subgroup(group, o.subgroup));
      const std::size_t n = group.cardinality();
      for (std::size_t i = 0; i < group.rank(); ++i) out << "x" << i << ",";
      for (std::size_t i = 0; i < group.rank(); ++i) out << "w" << i << ",";
      out << "re,im,modulus\n";
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t w = 0; w < n; ++w) {
          for (int c : group.coords(x)) out << c << ",";
          for (int c : group.coords(w)) out << c << ",";
          const Complex v = grid.at({x, w});
          out << format17(v.real()) << "," << format17(v.imag()) << "," << format17(std::abs(v)) << "\n";
        }
      }
      out << "# min_modulus=" << format17(min_modulus(grid).value)
          << " residual=" << format17(quasiperiodicity_residual(grid)) << "\n";
    };
  });

  // zak-min ---------------------------------------------------------------------
  auto* zm = app.add_subcommand("zak-min", "Minimum of |Zg| and the frame bounds it implies over Lambda x Lambda^perp");
  add_group(zm);
  add_window(zm);
  add_seed(zm);
  zm->add_option("--subgroup", o.subgroup, "Lattice in G, e.g. gens=2")->capture_default_str();
  zm->callback([&] {
    action = [&] {
      const auto group = parse_group(o.group);
      Rng rng(o.seed);
      const Window g = parse_window(group, o.window, rng);
      const Subgroup lattice = parse_subgroup(group, o.subgroup);
      const ZakGrid grid = zak_transform(g, lattice);
      const ZakMinimum m = min_modulus(grid);
      json j = frame_report_json(zak_frame_bounds(g, lattice));
      j["min_modulus"] = m.value;
      j["location"] = {{"x", group.coords(m.location.x)}, {"w", group.coords(m.location.omega)}};
      j["residual"] = quasiperiodicity_residual(grid);
      j["subgroup"] = format_subgroup(lattice);
      emit(out, j);
    };
  });

  // s0-norm -----------------------------------------------------------------------
  std::string reference = "gauss";
  auto* s0 = app.add_subcommand("s0-norm", "Feichtinger norm: (1/|G|) sum over the plane of |V_g f|");
  add_group(s0);
  add_window(s0);
  add_seed(s0);
  s0->add_option("--reference", reference, "Analysis window")->capture_default_str();
  s0->callback([&] {
    action = [&] {
      const auto group = parse_group(o.group);
      Rng rng(o.seed);
      const Window f = parse_window(group, o.window, rng);
      const Window g = parse_window(group, reference, rng);
      emit(out, {{"s0_norm", s0_norm(f, g)}, {"l1_norm", [&] {
                   double s = 0.0;
                   for (const auto& v : f.values()) s += std::abs(v);
                   return s;
                 }()}});
    };
  });

  // padic-abs -----------------------------------------------------------------------
  std::string q_text;
  std::int64_t p_value = 2;
  auto* pa = app.add_subcommand("padic-abs", "p-adic absolute value |q|_p = p^{-v_p(q)}, printed exactly as num/den");
  pa->add_option("q", q_text, "Rational, e.g. 12 or -3/8")->required();
  pa->add_option("p", p_value, "Prime")->required();
  pa->callback([&] {
    action = [&] { out << to_string(padic_abs(parse_rational(q_text), Prime(p_value))) << '\n'; };
  });

  // adele-vol ---------------------------------------------------------------------------
  std::vector<std::string> files;
  auto* av = app.add_subcommand("adele-vol", "Global modular function |det A_inf| prod_p |det A_p|_p, the lattice volume");
  av->add_option("file", files, "Automorphism file ('-' for stdin)")->required()->expected(1);
  av->callback([&] {
    action = [&] {
      const AdeleAutomorphism a = parse_automorphism(read_document(files.at(0)));
      const ModularValue m = global_modular(a);
      emit(out, {{"volume", m.value},
                 {"finite_part", to_string(m.finite_part)},
                 {"exact", m.exact_value ? json(to_string(*m.exact_value)) : json(nullptr)},
                 {"dimension", a.dimension()},
                 {"S", a.places().primes()}});
    };
  });

  // adele-member ------------------------------------------------------------------------
  std::string vector_text;
  auto* am = app.add_subcommand("adele-member", "Membership of an adele vector in A Z(S)^n, with witness q");
  am->add_option("file", files, "Automorphism file ('-' for stdin)")->required()->expected(1);
  am->add_option("--x", vector_text, "diag=(q1,..) or inf=(..); p=(..)")->required();
  am->callback([&] {
    action = [&] {
      const AdeleLattice lattice(parse_automorphism(read_document(files.at(0))));
      const Membership m = lattice_membership(parse_adele_vector(vector_text, lattice.places()), lattice);
      emit(out, {{"member", m.member}, {"witness", m.witness ? rational_vector(*m.witness) : json(nullptr)}});
    };
  });

  // adele-equal -------------------------------------------------------------------------
  auto* ae = app.add_subcommand("adele-equal", "Semantic equality of two lattices A1 Z(S)^n and A2 Z(S)^n");
  ae->add_option("files", files, "Two automorphism files")->required()->expected(2);
  ae->callback([&] {
    action = [&] {
      const AdeleLattice l1(parse_automorphism(read_document(files.at(0))));
      const AdeleLattice l2(parse_automorphism(read_document(files.at(1))));
      const bool eq = lattice_equality(l1, l2);
      const bool gens = lattice_equality_by_generators(l1, l2);
      emit(out, {{"equal", eq}, {"by_generators", gens}});
      if (eq != gens) throw AssertionFailed{"equality routes disagree"};
    };
  });

  // blt-classify ------------------------------------------------------------------------
  std::string spec_text;
  auto* bc = app.add_subcommand("blt-classify", "Balian-Low verdict from the identity component of a group specification");
  bc->add_option("spec", spec_text, "e.g. A_Q{S=2; n=1}, Q_S{S=3; n=2}, R^2xZ4")->required();
  bc->callback([&] {
    action = [&] {
      const BalianLowVerdict v = balian_low_classifier(spec_text);
      emit(out, {{"spec", spec_text}, {"real_dimension", v.real_dimension}, {"blt_holds", v.blt_holds},
                 {"verdict", v.message}});
    };
  });

  // deform-margin -----------------------------------------------------------------------
  std::string volume_text;
  std::size_t half_dim = 1;
  auto* dm = app.add_subcommand("deform-margin", "Largest eps with vol((1+eps) A) <= 1 in the 2n-dimensional plane");
  dm->add_option("--volume", volume_text, "Exact lattice volume, e.g. 1/4");
  dm->add_option("--n", half_dim, "Half the plane dimension")->capture_default_str()->check(CLI::PositiveNumber);
  dm->add_option("--file", files, "Automorphism file of the lattice (dimension 2n)")->expected(1);
  dm->callback([&] {
    action = [&] {
      DeformationMargin m;
      json j;
      if (!files.empty()) {
        const AdeleLattice lattice(parse_automorphism(read_document(files.at(0))));
        m = deformation_margin(lattice);
        const ModularValue vol = lattice_volume(lattice);
        j["volume"] = vol.exact_value ? json(to_string(*vol.exact_value)) : json(vol.value);
        j["n"] = lattice.dimension() / 2;
      } else {
        if (volume_text.empty()) throw InvalidInput("give --volume or --file");
        const Rational vol = parse_rational(volume_text);
        m = deformation_margin(vol, half_dim);
        j["volume"] = to_string(vol);
        j["n"] = half_dim;
      }
      j["epsilon"] = m.value;
      j["exact"] = m.exact ? json(to_string(*m.exact)) : json(nullptr);
      emit(out, j);
    };
  });

  // transference-check --------------------------------------------------------------------
  int modulus = 4;
  int step = 2;
  auto* tc = app.add_subcommand("transference-check",
                                "Dual pair over D1 on Z/L against g x 1_K over D1 x (K x K^perp) on Z/L x Z/M");
  add_group(tc);
  add_window(tc);
  add_lattice(tc);
  add_seed(tc);
  tc->add_option("--dual", o.dual, "Second window (default: same as --window)");
  tc->add_option("--M", modulus, "Order of the compact-open model Z/M")->capture_default_str()->check(CLI::PositiveNumber);
  tc->add_option("--d", step, "K = d Z/M")->capture_default_str()->check(CLI::PositiveNumber);
  tc->callback([&] {
    action = [&] {
      const auto group = parse_group(o.group);
      Rng rng(o.seed);
      const Window g = parse_window(group, o.window, rng);
      const Window h = o.dual.empty() ? g : parse_window(group, o.dual, rng);
      const TfLattice lattice = parse_lattice(group, o.lattice);
      const TransferenceResult r = finite_transference_check(g, h, lattice, modulus, step);
      emit(out, {{"base_dual", r.base_dual},
                 {"lifted_dual", r.lifted_dual},
                 {"equivalent", r.equivalent()},
                 {"base_residual", r.base_residual},
                 {"lifted_residual", r.lifted_residual},
                 {"factorization_residual", r.factorization_residual},
                 {"lifted_lattice", format_lattice(r.lifted_lattice)},
                 {"lifted_group", r.lifted_g.group().to_string()}});
      if (!r.equivalent()) throw AssertionFailed{"dual-pair verdicts differ between Z/L and Z/L x Z/M"};
    };
  });

  // sweep-window --------------------------------------------------------------------------
  std::string eps_text = "0,0.0001,0.001,0.01,0.1";
  auto* sw = app.add_subcommand("sweep-window", "Frame bounds along a seeded window perturbation, with the Janssen-side bound");
  add_group(sw);
  add_window(sw);
  add_lattice(sw);
  add_seed(sw);
  add_format(sw);
  sw->add_option("--eps", eps_text, "Strictly increasing epsilon grid")->capture_default_str();
  sw->callback([&] {
    action = [&] {
      const auto group = parse_group(o.group);
      Rng rng(o.seed);
      const Window g = parse_window(group, o.window, rng);
      const SweepReport r = window_stability_sweep(g, parse_lattice(group, o.lattice), parse_double_list(eps_text), o.seed);
      if (o.format == "csv") out << r.to_csv();
      else emit(out, sweep_json(r));
      if (!r.all_passed()) throw AssertionFailed{"sweep assertions failed"};
    };
  });

  // sweep-critical ------------------------------------------------------------------------
  std::string ns_text = "2,3,4,5";
  auto* sc = app.add_subcommand("sweep-critical", "Condition number and Zak minimum of the periodized Gaussian at critical density");
  sc->add_option("--n", ns_text, "Comma-separated n; G = Z/n^2")->capture_default_str();
  add_format(sc);
  sc->callback([&] {
    action = [&] {
      const SweepReport r = critical_density_trend(parse_int_list(ns_text));
      if (o.format == "csv") out << r.to_csv();
      else emit(out, sweep_json(r));
      if (!r.all_passed()) {
        for (const auto& a : r.assertions)
          if (!a.passed) err << "assertion " << a.name << " failed: " << a.detail << '\n';
        throw AssertionFailed{"sweep assertions failed"};
      }
    };
  });

  // density-exhaust -----------------------------------------------------------------------
  int windows = 20;
  std::size_t cap = 20000;
  auto* de = app.add_subcommand("density-exhaust", "Every plane subgroup: no frame above volume 1, Zak test at volume 1");
  add_group(de);
  add_seed(de);
  add_format(de);
  de->add_option("--windows", windows, "Random windows per lattice")->capture_default_str()->check(CLI::PositiveNumber);
  de->add_option("--cap", cap, "Maximum number of plane subgroups")->capture_default_str();
  de->callback([&] {
    action = [&] {
      const auto group = parse_group(o.group);
      if (group.cardinality() > 16) throw InvalidInput("density-exhaust is limited to |G| <= 16");
      const SweepReport r = density_exhaustive(group, windows, o.seed, cap);
      if (o.format == "csv") out << r.to_csv();
      else emit(out, sweep_json(r));
      if (!r.all_passed()) throw AssertionFailed{"density assertions failed"};
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (action) action();
    return kExitOk;
  } catch (const AssertionFailed& e) {
    err << "check failed: " << e.message << '\n';
    return kExitAssertion;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace lcagabor::cli
