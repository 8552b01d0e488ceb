#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "hilfer/errors.hpp"
#include "hilfer/ivp.hpp"
#include "hilfer/mittag_leffler.hpp"
#include "hilfer/stability.hpp"
#include "hilfer/transforms.hpp"
#include "hilfer/verify.hpp"

namespace hilfer::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

struct BadConfig : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v) { return fmt::format("{:.16e}", v); }

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
  os << text;
}

void prepare_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw BadConfig("cannot create output directory " + dir.string());
}

// ---- solve ---------------------------------------------------------------

struct SolveArgs {
  bool linear = false;
  bool nonlinear = false;
  double lambda = 0.0;
  double mu = 0.5;
  double nu = 0.5;
  double zeta = 1.0;
  double a = 0.0;
  std::size_t steps = 30;
  std::string g;
  std::vector<double> g_affine;
  double K = 0.15;
  std::string solver = "recursion";
  std::string out = ".";
  double tol = 1e-8;
};

IvpSpec build_spec(const SolveArgs& s) {
  if (s.linear == s.nonlinear) throw BadConfig("choose exactly one of --linear or --nonlinear");
  if (!(s.mu > 0.0 && s.mu < 1.0)) throw BadConfig("--mu must lie in (0,1)");
  if (!(s.nu >= 0.0 && s.nu <= 1.0)) throw BadConfig("--nu must lie in [0,1]");
  if (s.steps == 0) throw BadConfig("--steps must be >= 1");
  if (!(s.tol > 0.0)) throw BadConfig("--tol must be positive");
  IvpSpec spec;
  spec.a = s.a;
  spec.steps = s.steps;
  spec.order = HilferOrder(s.mu, s.nu);
  spec.zeta = s.zeta;
  if (s.linear) {
    if (!s.g.empty() || !s.g_affine.empty()) throw BadConfig("--g/--g-affine need --nonlinear");
    if (s.solver != "recursion" && s.solver != "series")
      throw BadConfig("--solver must be recursion or series");
    spec.rhs = LinearRhs{s.lambda};
  } else {
    if (s.g.empty() == s.g_affine.empty()) throw BadConfig("--nonlinear needs one of --g or --g-affine");
    if (!s.g.empty()) {
      try {
        spec.rhs = named_rhs(s.g, spec.a, spec.horizon(), s.K);
      } catch (const std::invalid_argument& e) {
        throw BadConfig(e.what());
      }
    } else {
      spec.rhs = affine_rhs(s.g_affine[0], s.g_affine[1], spec.a);
    }
  }
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw BadConfig(e.what());
  }
  return spec;
}

int cmd_solve(const SolveArgs& s, std::ostream& out, std::ostream& err) {
  const IvpSpec spec = build_spec(s);
  const fs::path dir(s.out);
  prepare_dir(dir);

  const Solution sol = s.linear && s.solver == "series" ? solve_linear_series(spec) : solve(spec);
  const GridFn& u = sol.values;
  const GridFn res = equation_residual(spec, u);
  double max_res = 0.0, scale = 1.0;
  for (double r : res.values()) max_res = std::max(max_res, std::abs(r));
  for (double v : u.values()) scale = std::max(scale, std::abs(v));

  std::string csv = "n,x,u\n";
  for (std::size_t k = 0; k < u.size(); ++k)
    csv += fmt::format("{},{},{}\n", k, num(u.grid().point(k)), num(u[k]));
  write_text(dir / "solution.csv", csv);

  json meta;
  meta["command"] = "solve";
  meta["rhs"] = s.linear ? "linear" : "nonlinear";
  meta["a"] = spec.a;
  meta["steps"] = spec.steps;
  meta["mu"] = spec.order.mu();
  meta["nu"] = spec.order.nu();
  meta["eta"] = spec.order.eta();
  meta["zeta"] = spec.zeta;
  if (s.linear) meta["lambda"] = s.lambda;
  if (!s.g.empty()) {
    meta["g"] = s.g;
    meta["K"] = s.K;
  }
  if (!s.g_affine.empty()) {
    meta["g_affine_c0"] = s.g_affine[0];
    meta["g_affine_c1"] = s.g_affine[1];
  }
  meta["rows"] = u.size();
  meta["truncated"] = sol.truncated();
  meta["max_residual"] = max_res;
  meta["solver"] = sol.solver;
  meta["terms_used"] = sol.terms_used;
  write_text(dir / "solution.json", meta.dump(2) + "\n");

  out << "wrote " << (dir / "solution.csv").string() << " (" << u.size() << " rows), max residual "
      << num(max_res) << "\n";
  if (sol.truncated()) {
    err << "warning: trajectory exceeded " << num(kOverflowLimit) << " at n = " << *sol.overflow_index
        << "; output truncated\n";
    return kOverflow;
  }
  if (max_res > s.tol * scale) {
    err << "residual " << num(max_res) << " exceeds tolerance\n";
    return kVerifyFailed;
  }
  return kOk;
}

// ---- figures -------------------------------------------------------------

struct FiguresArgs {
  std::string out = ".";
  std::size_t steps = 30;
  double lambda = 0.1;
  double zeta = 1.0;
};

int cmd_figures(const FiguresArgs& f, std::ostream& out, std::ostream& err) {
  if (f.steps == 0) throw BadConfig("--steps must be >= 1");
  if (!(std::abs(f.lambda) < 1.0)) throw BadConfig("--lambda must satisfy |lambda| < 1");
  const fs::path dir(f.out);
  prepare_dir(dir);

  const std::vector<double> nus{0.0, 0.25, 0.5, 0.75, 1.0};
  int status = kOk;
  const std::pair<const char*, double> figs[] = {{"fig1.csv", 0.8}, {"fig2.csv", 0.5}};
  for (const auto& [name, mu] : figs) {
    std::vector<GridFn> cols;
    for (double nu : nus) cols.push_back(solve_linear({0.0, f.steps, {mu, nu}, f.zeta, LinearRhs{f.lambda}}).values);

    const GridFn rl = solve_rl_linear(0.0, f.steps, mu, f.lambda, f.zeta).values;
    const GridFn cap = solve_caputo_linear(0.0, f.steps, mu, f.lambda, f.zeta).values;
    for (std::size_t k = 0; k < rl.size(); ++k) {
      if (cols.front()[k] != rl[k] || cols.back()[k] != cap[k]) {
        err << name << ": endpoint column does not match the reference solver at n = " << k << "\n";
        status = kVerifyFailed;
        break;
      }
    }
    std::size_t outside = 0;
    for (std::size_t c = 1; c + 1 < cols.size(); ++c)
      for (std::size_t k = 0; k < rl.size(); ++k) {
        const double lo = std::min(rl[k], cap[k]), hi = std::max(rl[k], cap[k]);
        if (cols[c][k] < lo || cols[c][k] > hi) ++outside;
      }
    if (outside > 0)
      err << "warning: " << name << ": " << outside
          << " intermediate samples lie outside the RL/Caputo envelope\n";

    std::string csv = "n,nu_0.00,nu_0.25,nu_0.50,nu_0.75,nu_1.00\n";
    for (std::size_t k = 0; k < rl.size(); ++k) {
      csv += std::to_string(k);
      for (const GridFn& c : cols) csv += "," + num(c[k]);
      csv += "\n";
    }
    write_text(dir / name, csv);
    out << "wrote " << (dir / name).string() << " (mu = " << mu << ", " << rl.size() << " rows)\n";
  }
  return status;
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> only;
  std::vector<double> ys;
  std::optional<double> tol;
  std::uint64_t seed = VerifyOptions{}.seed;
  bool json_out = false;
  std::string out;
  bool mutate = false;
};

int cmd_verify(const VerifyArgs& v, std::ostream& out, std::ostream& err) {
  VerifyOptions opts;
  for (const auto& o : v.only) {
    std::stringstream ss(o);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) opts.only.push_back(item);
  }
  if (!v.ys.empty()) opts.ys = v.ys;
  opts.tol = v.tol;
  opts.seed = v.seed;
  opts.mutate_kernel = v.mutate;

  VerifyReport rep;
  try {
    rep = run_verification(opts);
  } catch (const std::invalid_argument& e) {
    throw BadConfig(e.what());
  }

  json j;
  j["passed"] = rep.all_passed();
  j["failures"] = rep.failures();
  json arr = json::array();
  for (const auto& r : rep.results)
    arr.push_back({{"group", r.group}, {"name", r.name}, {"max_error", r.max_error},
                   {"tolerance", r.tolerance}, {"passed", r.passed}});
  j["results"] = arr;

  if (v.json_out) {
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : rep.results)
      out << fmt::format("{:4} {:15} {:62} err={:.3e} tol={:.1e}\n", r.passed ? "PASS" : "FAIL",
                         r.group, r.name, r.max_error, r.tolerance);
    out << rep.results.size() - rep.failures() << "/" << rep.results.size() << " checks passed\n";
  }
  if (!v.out.empty()) {
    prepare_dir(v.out);
    write_text(fs::path(v.out) / "verify.json", j.dump(2) + "\n");
  }
  if (!rep.all_passed()) err << rep.failures() << " check(s) failed\n";
  return rep.all_passed() ? kOk : kVerifyFailed;
}

// ---- bound ---------------------------------------------------------------

struct BoundArgs {
  double a = 0.0;
  double T = 1.0;
  double mu = 0.5;
  std::optional<double> K;
  std::optional<double> L;
};

int cmd_bound(const BoundArgs& b, std::ostream& out) {
  double bound = 0.0;
  try {
    bound = existence_bound(b.a, b.T, b.mu);
  } catch (const std::invalid_argument& e) {
    throw BadConfig(e.what());
  }
  out << "bound " << fmt::format("{:.16g}", bound) << "\n";
  if (b.L) {
    const BoundReport r = check_existence(b.a, b.T, b.mu, *b.L);
    out << "existence supplied=" << fmt::format("{:.16g}", r.supplied)
        << " strict=false satisfied=" << (r.satisfied ? "true" : "false") << "\n";
  }
  if (b.K) {
    const bool ok = *b.K < bound;
    out << "uniqueness supplied=" << fmt::format("{:.16g}", *b.K)
        << " strict=true satisfied=" << (ok ? "true" : "false") << "\n";
  }
  return kOk;
}

// ---- laplace -------------------------------------------------------------

struct LaplaceArgs {
  std::string f = "sin-exp";
  double a = 0.0;
  double mu = 0.5;
  double nu = 0.5;
  std::vector<double> ys{1.5, 2.0, 3.0};
  double tol = 1e-10;
};

PointFn named_fn(const std::string& name, double a) {
  if (name == "one") return [](double) { return 1.0; };
  if (name == "exp") return [a](double x) { return std::pow(1.2, x - a); };
  if (name == "sin") return [](double x) { return std::sin(x); };
  if (name == "sin-exp") return [a](double x) { return std::sin(x) + std::pow(1.1, x - a); };
  throw BadConfig("unknown function '" + name + "' (one, exp, sin, sin-exp)");
}

int cmd_laplace(const LaplaceArgs& l, std::ostream& out) {
  const PointFn f = named_fn(l.f, l.a);
  if (!(l.mu > 0.0 && l.mu < 1.0) || !(l.nu >= 0.0 && l.nu <= 1.0))
    throw BadConfig("need 0 < mu < 1 and 0 <= nu <= 1");
  if (!(l.tol > 0.0)) throw BadConfig("--tol must be positive");
  for (double y : l.ys)
    if (!(y > 0.5)) throw BadConfig("--y values must exceed 0.5");
  const LaplaceCtl ctl{l.tol, 4096, 1.5};
  const HilferOrder order(l.mu, l.nu);
  out << "y,transform,terms,hilfer_summed,hilfer_closed_form,abs_error\n";
  for (double y : l.ys) {
    const LaplaceResult F = delta_laplace(f, l.a, y, ctl);
    const IdentityPair p = laplace_of_hilfer(f, l.a, order, y, ctl);
    out << fmt::format("{},{},{},{},{},{:.3e}\n", num(y), num(F.value), F.terms, num(p.lhs),
                       num(p.rhs), p.abs_error());
  }
  return kOk;
}

// ---- ml ------------------------------------------------------------------

struct MlArgs {
  double mu = 1.0;
  double eta = 1.0;
  double gamma = 1.0;
  double lambda = 0.1;
  std::vector<double> z{5.0};
  bool bold = false;
  double tol = SeriesCtl{}.tol;
};

int cmd_ml(const MlArgs& m, std::ostream& out) {
  const MlParams p{m.mu, m.eta, m.gamma, m.lambda};
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw BadConfig(e.what());
  }
  SeriesCtl ctl;
  ctl.tol = m.tol;
  out << "z,value,terms,exact\n";
  for (double z : m.z) {
    const MlResult r = m.bold ? ml_bold(p, z, ctl) : ml_plain(p, z, ctl);
    out << fmt::format("{},{},{},{}\n", num(z), num(r.value), r.terms, r.exact ? "true" : "false");
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Delta fractional calculus with the Hilfer difference", "hilfer-dfc"};
  app.require_subcommand(1);

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "solve an initial value problem, write CSV + JSON");
  solve->add_flag("--linear", sa.linear, "linear right-hand side -lambda u");
  solve->add_flag("--nonlinear", sa.nonlinear, "named or affine g");
  solve->add_option("--lambda", sa.lambda, "linear coefficient (|lambda| < 1 for --solver series)");
  solve->add_option("--mu", sa.mu, "order in (0,1)");
  solve->add_option("--nu", sa.nu, "type in [0,1]");
  solve->add_option("--zeta", sa.zeta, "initial sum value");
  solve->add_option("--a", sa.a, "base point");
  solve->add_option("--steps", sa.steps, "grid points after a");
  solve->add_option("--g", sa.g, "example45, example45-scaled, example45-sine");
  solve->add_option("--g-affine", sa.g_affine, "c0 c1 for g = c0 + c1 u (x-a)")->expected(2);
  solve->add_option("--K", sa.K, "Lipschitz scale of the scaled named g");
  solve->add_option("--solver", sa.solver, "linear solver: recursion or series");
  solve->add_option("--out", sa.out, "output directory");
  solve->add_option("--tol", sa.tol, "residual tolerance (relative to sup |u|)");

  FiguresArgs fa;
  auto* figures = app.add_subcommand("figures", "write fig1.csv (mu=0.8) and fig2.csv (mu=0.5)");
  figures->add_option("--out", fa.out, "output directory");
  figures->add_option("--steps", fa.steps, "grid points after a");
  figures->add_option("--lambda", fa.lambda, "linear coefficient");
  figures->add_option("--zeta", fa.zeta, "initial sum value");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run the identity checks");
  verify->add_option("--only", va.only, "groups to run (repeat or comma-separate)");
  verify->add_option("--y", va.ys, "Laplace evaluation points");
  verify->add_option("--tol", va.tol, "override every tolerance");
  verify->add_option("--seed", va.seed, "random seed");
  verify->add_flag("--json", va.json_out, "print the JSON report");
  verify->add_option("--out", va.out, "also write verify.json here");
  verify->add_flag("--mutate-kernel", va.mutate)->group("");

  BoundArgs ba;
  auto* bound = app.add_subcommand("bound", "existence/uniqueness threshold");
  bound->add_option("--a", ba.a, "base point");
  bound->add_option("--T", ba.T, "horizon, T - a a positive integer");
  bound->add_option("--mu", ba.mu, "order in (0,1)");
  bound->add_option("--K", ba.K, "Lipschitz constant (strict comparison)");
  bound->add_option("--L", ba.L, "growth constant L* (non-strict comparison)");

  LaplaceArgs la;
  auto* laplace = app.add_subcommand("laplace", "delta Laplace transform and the Hilfer identity");
  laplace->add_option("--f", la.f, "one, exp, sin, sin-exp");
  laplace->add_option("--a", la.a, "base point");
  laplace->add_option("--mu", la.mu, "order in (0,1)");
  laplace->add_option("--nu", la.nu, "type in [0,1]");
  laplace->add_option("--y", la.ys, "evaluation points > 0.5");
  laplace->add_option("--tol", la.tol, "truncation tolerance");

  MlArgs ma;
  auto* ml = app.add_subcommand("ml", "discrete Mittag-Leffler function");
  ml->add_option("--mu", ma.mu, "mu > 0");
  ml->add_option("--eta", ma.eta, "eta");
  ml->add_option("--gamma", ma.gamma, "Prabhakar parameter");
  ml->add_option("--lambda", ma.lambda, "|lambda| < 1");
  ml->add_option("--z", ma.z, "arguments");
  ml->add_flag("--bold", ma.bold, "shifted family");
  ml->add_option("--tol", ma.tol, "negligible-term tolerance");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadConfig;
  }

  try {
    if (solve->parsed()) return cmd_solve(sa, out, err);
    if (figures->parsed()) return cmd_figures(fa, out, err);
    if (verify->parsed()) return cmd_verify(va, out, err);
    if (bound->parsed()) return cmd_bound(ba, out);
    if (laplace->parsed()) return cmd_laplace(la, out);
    if (ml->parsed()) return cmd_ml(ma, out);
  } catch (const BadConfig& e) {
    err << "error: " << e.what() << "\n";
    return kBadConfig;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kBadConfig;
  } catch (const convergence_error& e) {
    err << "error: " << e.what() << "\n";
    return kOverflow;
  } catch (const singular_error& e) {
    // a pole at the requested argument is an input problem
    err << "error: " << e.what() << "\n";
    return kBadConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kBadConfig;
}

}  // namespace hilfer::cli
