// Command-line front end: batch computations with CSV/JSON emission.
//
// Commands: project, derivative, hodge-star, decompose, solve, convergence,
// potential-flow, complex-info. A JSON config file supplies defaults; flags
// override it. Identical config + seed produces byte-identical files.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "msem/convergence.hpp"
#include "msem/hodge.hpp"
#include "msem/mapping.hpp"
#include "msem/operators.hpp"
#include "msem/parallel.hpp"
#include "msem/potential_flow.hpp"
#include "msem/serialize.hpp"

namespace fs = std::filesystem;
using namespace msem;

namespace {

struct RunConfig {
  std::string command;
  int dim = 1;
  int order = 8;
  std::string grid = "gll";
  int quad_order = 0;  // 0: order + 2
  std::string map_name = "identity";
  double map_p0 = 1.0;
  double map_p1 = 2.0;
  std::string form = "";
  double gamma = 1.0;
  std::vector<int> cells;
  std::string complex_kind = "grid";
  std::string out = ".";
  unsigned seed = 1;
  int threads = 1;

  void validate() const {
    if (dim < 1 || dim > 3) throw std::invalid_argument("dim must be 1, 2 or 3");
    if (order < 1) throw std::invalid_argument("order must be positive");
    if (quad_order < 0) throw std::invalid_argument("quad-order must be positive");
    if (threads < 1) throw std::invalid_argument("threads must be positive");
    if (grid != "gll" && grid != "gauss" && grid != "extended")
      throw std::invalid_argument("grid must be gll, gauss or extended");
    for (int c : cells)
      if (c < 1) throw std::invalid_argument("cells must be positive");
  }
  Quadrature quad() const { return Quadrature{quad_order > 0 ? quad_order : order + 2}; }
  DualPointFamily dual_points() const {
    return grid == "gauss" ? DualPointFamily::gauss : DualPointFamily::extended_gauss;
  }
};

const std::set<std::string> kKnownKeys = {
    "command", "dim",   "order", "grid",    "quad_order", "map",  "map_p0",  "map_p1",
    "form",    "gamma", "cells", "complex", "out",        "seed", "threads"};

void apply_config_file(RunConfig& cfg, const std::string& path,
                       const std::set<std::string>& given) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  json j = json::parse(in);
  for (const auto& [key, val] : j.items()) {
    if (!kKnownKeys.count(key)) throw std::invalid_argument("unknown config key: " + key);
    if (given.count(key)) continue;  // flags win
    if (key == "dim") cfg.dim = val;
    else if (key == "order") cfg.order = val;
    else if (key == "grid") cfg.grid = val;
    else if (key == "quad_order") cfg.quad_order = val;
    else if (key == "map") cfg.map_name = val;
    else if (key == "map_p0") cfg.map_p0 = val;
    else if (key == "map_p1") cfg.map_p1 = val;
    else if (key == "form") cfg.form = val;
    else if (key == "gamma") cfg.gamma = val;
    else if (key == "cells") cfg.cells = val.get<std::vector<int>>();
    else if (key == "complex") cfg.complex_kind = val;
    else if (key == "out") cfg.out = val;
    else if (key == "seed") cfg.seed = val;
    else if (key == "threads") cfg.threads = val;
  }
}

std::ofstream open_out(const RunConfig& cfg, const std::string& name) {
  fs::create_directories(cfg.out);
  std::ofstream os(fs::path(cfg.out) / name);
  if (!os) throw std::runtime_error("cannot write " + name);
  os.precision(17);
  return os;
}

// --- named forms -------------------------------------------------------------

AnalyticForm named_form_1d(const std::string& name, int& degree) {
  if (name == "sin3pi" || name.empty()) {
    degree = 0;
    return AnalyticForm::zero_form(
        1, [](const Eigen::Vector3d& x) { return std::sin(3.0 * M_PI * x[0] + 0.08); },
        {[](const Eigen::Vector3d& x) { return 3.0 * M_PI * std::cos(3.0 * M_PI * x[0] + 0.08); }});
  }
  if (name == "sinpi") {
    degree = 0;
    return AnalyticForm::zero_form(
        1, [](const Eigen::Vector3d& x) { return std::sin(M_PI * x[0]); },
        {[](const Eigen::Vector3d& x) { return M_PI * std::cos(M_PI * x[0]); }});
  }
  if (name == "constant") {
    degree = 0;
    return AnalyticForm::constant(1, 0, Eigen::VectorXd::Ones(1));
  }
  if (name == "x3dx") {
    degree = 1;
    return AnalyticForm::from_terms(
        1, 1, {{{0}, [](const Eigen::Vector3d& x) { return x[0] * x[0] * x[0]; }}});
  }
  if (name == "cospi-edge") {
    degree = 1;
    return AnalyticForm::from_terms(
        1, 1, {{{0}, [](const Eigen::Vector3d& x) { return std::cos(M_PI * x[0]); }}});
  }
  throw std::invalid_argument("unknown 1D form: " + name);
}

AnalyticForm named_form_2d(const std::string& name) {
  if (name == "swirl" || name.empty()) {
    AnalyticForm a = AnalyticForm::from_terms(
        2, 1,
        {{{0}, [](const Eigen::Vector3d& x) { return -x[1] + 0.3 * std::sin(x[0]); }},
         {{1}, [](const Eigen::Vector3d& x) { return x[0]; }}});
    a.derivative = {[](const Eigen::Vector3d&) { return 2.0; }};
    return a;
  }
  if (name == "grad-bump") {
    // d of exp(-(x^2+y^2)): purely exact
    auto g = [](const Eigen::Vector3d& x) { return std::exp(-(x[0] * x[0] + x[1] * x[1])); };
    AnalyticForm a = AnalyticForm::from_terms(
        2, 1,
        {{{0}, [g](const Eigen::Vector3d& x) { return -2.0 * x[0] * g(x); }},
         {{1}, [g](const Eigen::Vector3d& x) { return -2.0 * x[1] * g(x); }}});
    a.derivative = {[](const Eigen::Vector3d&) { return 0.0; }};
    return a;
  }
  throw std::invalid_argument("unknown 2D form: " + name);
}

// --- commands ----------------------------------------------------------------

int cmd_project(const RunConfig& cfg) {
  int degree = 0;
  const AnalyticForm a = named_form_1d(cfg.form, degree);
  if (degree == 1) {
    auto b = std::make_shared<TensorBasis>(1, 1, Side::primal, cfg.order, cfg.dual_points());
    const DiscreteForm p = project(a, b, cfg.quad());
    json j;
    j["pi"] = to_json(p);
    open_out(cfg, "project_cochains.json") << j.dump(2) << '\n';
    auto csv = open_out(cfg, "project.csv");
    csv << "x,exact,pi\n";
    for (int s = 0; s <= 400; ++s) {
      const double x = -1.0 + 2.0 * s / 400;
      write_csv_row(csv, {x, a.eval({x, 0, 0})[0], p.eval({x, 0, 0})[0]});
    }
    return 0;
  }
  auto bp = std::make_shared<TensorBasis>(1, 0, Side::primal, cfg.order, cfg.dual_points());
  auto bd = std::make_shared<TensorBasis>(1, 0, Side::dual, cfg.order, cfg.dual_points());
  const MetricField id = identity_metric(1);
  const DiscreteForm pi = project(a, bp, cfg.quad());
  const DiscreteForm pi_tilde = project(a, bd, cfg.quad());
  const DiscreteForm pi_star = coproject(a, bp, id, cfg.quad());
  const DiscreteForm pi_tilde_star = coproject(a, bd, id, cfg.quad());

  json j;
  j["pi"] = to_json(pi);
  j["pi_tilde"] = to_json(pi_tilde);
  j["pi_star"] = to_json(pi_star);
  j["pi_tilde_star"] = to_json(pi_tilde_star);
  open_out(cfg, "project_cochains.json") << j.dump(2) << '\n';

  auto csv = open_out(cfg, "project.csv");
  csv << "x,exact,pi,pi_tilde,pi_star,pi_tilde_star\n";
  for (int s = 0; s <= 400; ++s) {
    const double x = -1.0 + 2.0 * s / 400;
    const Eigen::Vector3d pt(x, 0, 0);
    write_csv_row(csv, {x, a.eval(pt)[0], pi.eval(pt)[0], pi_tilde.eval(pt)[0],
                        pi_star.eval(pt)[0], pi_tilde_star.eval(pt)[0]});
  }
  return 0;
}

int cmd_derivative(const RunConfig& cfg) {
  int degree = 0;
  const AnalyticForm a = named_form_1d(cfg.form.empty() ? "sinpi" : cfg.form, degree);
  if (degree != 0) throw std::invalid_argument("derivative: pick a 0-form");
  auto b = std::make_shared<TensorBasis>(1, 0, Side::primal, cfg.order);
  const DiscreteForm p = project(a, b, cfg.quad());
  const DiscreteForm dp = exterior_derivative(p);
  json j;
  j["form"] = to_json(p);
  j["derivative"] = to_json(dp);
  open_out(cfg, "derivative.json") << j.dump(2) << '\n';
  auto csv = open_out(cfg, "derivative.csv");
  csv << "x,exact_d,reconstructed_d\n";
  for (int s = 0; s <= 400; ++s) {
    const double x = -1.0 + 2.0 * s / 400;
    write_csv_row(csv, {x, a.derivative[0]({x, 0, 0}), dp.eval({x, 0, 0})[0]});
  }
  return 0;
}

int cmd_hodge_star(const RunConfig& cfg) {
  int degree = 1;
  const AnalyticForm a = named_form_1d(cfg.form.empty() ? "cospi-edge" : cfg.form, degree);
  if (degree != 1) throw std::invalid_argument("hodge-star: pick a 1-form");
  auto b = std::make_shared<TensorBasis>(1, 1, Side::primal, cfg.order, cfg.dual_points());
  const DiscreteForm u = project(a, b, cfg.quad());
  const DiscreteForm star = hodge_star(u, identity_metric(1), cfg.quad());
  json j;
  j["u"] = to_json(u);
  j["star_u"] = to_json(star);
  open_out(cfg, "hodge_star.json") << j.dump(2) << '\n';
  // the hodge matrix in this basis pair: column i is star applied to edge i
  auto csv = open_out(cfg, "hodge_matrix.csv");
  const TensorBasis dual0(1, 0, Side::dual, cfg.order, cfg.dual_points());
  for (int jrow = 0; jrow < dual0.lagrange().size(); ++jrow) {
    std::vector<double> row;
    for (int i = 0; i < cfg.order; ++i)
      row.push_back(b->edge().eval(i, dual0.lagrange().nodes().nodes[jrow]));
    write_csv_row(csv, row);
  }
  return 0;
}

int cmd_decompose(const RunConfig& cfg) {
  const AnalyticForm a = named_form_2d(cfg.form);
  auto b = std::make_shared<TensorBasis>(2, 1, Side::primal, cfg.order);
  const DiscreteForm df = project(a, b, cfg.quad());
  const HodgeSplit s = decompose(df);
  json j;
  j["input"] = to_json(df);
  j["exact"] = to_json(s.exact_part);
  j["harmonic"] = to_json(s.harmonic_part);
  j["complement"] = to_json(s.coexact_or_complement_part);
  std::vector<double> amp(s.amplitudes.data(), s.amplitudes.data() + s.amplitudes.size());
  j["amplitudes"] = amp;
  open_out(cfg, "decompose.json") << j.dump(2) << '\n';
  return 0;
}

int cmd_solve(const RunConfig& cfg) {
  std::vector<int> cells = cfg.cells;
  if (cells.empty()) cells.assign(cfg.dim, cfg.order);
  const CellComplex c = CellComplex::build(cfg.dim, cells);
  std::mt19937 rng(cfg.seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Cochain g = make_cochain(c, 0);
  for (Index i = 0; i < g.coefficients.size(); ++i) g.coefficients[i] = u(rng);
  const Cochain f = coboundary(g);
  const Cochain a = solve_coboundary(f);
  json j;
  j["complex"] = to_json(c);
  j["data"] = to_json(f);
  j["solution"] = to_json(a);
  j["residual"] = (coboundary(a).coefficients - f.coefficients).lpNorm<Eigen::Infinity>();
  j["cocycle_component"] = std::abs(a.coefficients.sum());
  open_out(cfg, "solve.json") << j.dump(2) << '\n';
  return 0;
}

int cmd_convergence(const RunConfig& cfg) {
  const std::vector<int> sweep = {2, 4, 8, 16, 32};
  const bool poly = cfg.form == "poly";
  const int p = cfg.order;

  auto write = [&](const std::string& name, int degree) {
    std::function<double(double)> f, df;
    if (poly) {
      f = [p](double x) { return std::pow(x, std::min(p, 3)); };
      df = [p](double x) {
        const int q = std::min(p, 3);
        return q * std::pow(x, q - 1);
      };
    } else if (degree == 0) {
      f = [](double x) { return std::sin(M_PI * x); };
      df = [](double x) { return M_PI * std::cos(M_PI * x); };
    } else {
      f = [](double x) { return std::cos(M_PI * x); };
    }
    const auto rows = h_refinement_1d(degree, f, df, p, sweep);
    const auto orders = observed_orders(rows);
    auto csv = open_out(cfg, name);
    csv << "h,l2_error,hsemi_error,observed_order\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      csv << format_full(rows[i].h) << ',' << format_full(rows[i].l2_error) << ','
          << format_full(rows[i].h_semi_error) << ',';
      if (rows[i].l2_error < 1e-13)
        csv << "exact";
      else if (i == 0)
        csv << "-";
      else
        csv << format_full(orders[i - 1]);
      csv << '\n';
    }
  };
  write("convergence_0form.csv", 0);
  write("convergence_1form.csv", 1);
  return 0;
}

int cmd_potential_flow(const RunConfig& cfg) {
  const int nr = cfg.cells.empty() ? 1 : cfg.cells[0];
  const double r_out = cfg.map_p1;
  const CellComplex annulus = annulus_complex(nr, 4, cfg.map_p0, r_out);
  const HomologyInfo hom = homology(annulus, 1);
  const Quadrature quad{std::max(cfg.quad().points, cfg.order + 4)};
  const AnalyticForm v = potential_flow_velocity(cfg.gamma);
  const Cochain rv = reduce(v, annulus, quad);
  const double pair = pairing(rv, hom.harmonic_chains[0]);
  const double alpha = harmonic_amplitude(rv, hom.harmonic_chains[0], hom.harmonic_cochains[0]);
  const CochainSplit split = decompose(rv, hom);

  json j;
  j["gamma"] = cfg.gamma;
  j["betti"] = hom.betti;
  j["pairing_with_harmonic_chain"] = pair;
  j["alpha"] = alpha;
  j["reduced_velocity"] = to_json(rv);
  j["split"] = to_json(split);
  open_out(cfg, "potential_flow.json") << j.dump(2) << '\n';

  // sampled velocity for plotting: lowest-order Whitney reconstruction per cell
  auto whitney = [&](const Cochain& co, double r, double th, double& vr, double& vth) {
    const Axis& ar = annulus.axis(0);
    const Axis& at = annulus.axis(1);
    int ir = std::min<int>(ar.cells - 1, int((r - ar.nodes[0]) / (ar.cell_hi(0) - ar.cell_lo(0))));
    int it = std::min<int>(at.cells - 1, int(th / (at.period / at.cells)));
    const double tr = (r - ar.cell_lo(ir)) / (ar.cell_hi(ir) - ar.cell_lo(ir));
    const double tt = (th - at.cell_lo(it)) / (at.period / at.cells);
    auto edge = [&](int grp, std::array<int, 3> mi) {
      if (at.periodic) mi[1] %= at.cells;
      return co.coefficients[annulus.cell_index(1, grp, mi)];
    };
    const double dr = ar.cell_hi(ir) - ar.cell_lo(ir);
    const double dth = at.period / at.cells;
    vr = ((1 - tt) * edge(0, {ir, it, 0}) + tt * edge(0, {ir, it + 1, 0})) / dr;
    vth = ((1 - tr) * edge(1, {ir, it, 0}) + tr * edge(1, {ir + 1, it, 0})) / dth;
  };
  auto csv = open_out(cfg, "potential_flow_field.csv");
  csv << "r,theta,vr_total,vtheta_total,vr_harmonic,vtheta_harmonic,vr_exact_part,"
         "vtheta_exact_part\n";
  for (int i = 0; i <= 20; ++i)
    for (int jj = 0; jj < 40; ++jj) {
      const double r = cfg.map_p0 + (r_out - cfg.map_p0) * i / 20.0;
      const double th = 2.0 * M_PI * jj / 40.0;
      double vr, vth, hr, hth, er, eth;
      whitney(rv, r, th, vr, vth);
      whitney(split.harmonic, r, th, hr, hth);
      whitney(split.exact, r, th, er, eth);
      write_csv_row(csv, {r, th, vr, vth, hr, hth, er, eth});
    }
  return 0;
}

int cmd_complex_info(const RunConfig& cfg) {
  json j;
  if (cfg.complex_kind == "hole") {
    const HoleComplex h = hole_complex();
    const HomologyInfo info = homology_from_incidence(
        Eigen::MatrixXi(h.e01).cast<double>(), Eigen::MatrixXi(h.e12).cast<double>());
    j["cell_counts"] = {8, 12, 4};
    j["betti_1"] = info.betti;
    std::vector<double> hv(info.harmonic[0].data(),
                           info.harmonic[0].data() + info.harmonic[0].size());
    j["harmonic_chain"] = hv;
    std::ostringstream e01, e12;
    write_coordinate_list(e01, h.e01);
    write_coordinate_list(e12, h.e12);
    open_out(cfg, "e01.txt") << e01.str();
    open_out(cfg, "e12.txt") << e12.str();
  } else {
    CellComplex c = cfg.complex_kind == "annulus"
                        ? annulus_complex(cfg.cells.empty() ? 1 : cfg.cells[0],
                                          cfg.cells.size() > 1 ? cfg.cells[1] : 4, cfg.map_p0,
                                          cfg.map_p1)
                        : CellComplex::build(cfg.dim, cfg.cells.empty()
                                                          ? std::vector<int>(cfg.dim, cfg.order)
                                                          : cfg.cells);
    j["complex"] = to_json(c);
    for (int k = 0; k <= c.dimension(); ++k) {
      const HomologyInfo info = homology(c, k);
      j["betti"][std::to_string(k)] = info.betti;
      if (info.betti > 0 && info.integral) {
        std::vector<double> hv(info.harmonic[0].data(),
                               info.harmonic[0].data() + info.harmonic[0].size());
        j["harmonic_" + std::to_string(k)] = hv;
      }
    }
    for (int k = 1; k <= c.dimension(); ++k) {
      std::ostringstream os;
      write_coordinate_list(os, c.incidence(k));
      open_out(cfg, "e" + std::to_string(k - 1) + std::to_string(k) + ".txt") << os.str();
    }
  }
  open_out(cfg, "complex_info.json") << j.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mimetic spectral elements on tensor-product grids"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path;

  const std::vector<std::string> names = {"project",     "derivative",  "hodge-star",
                                          "decompose",   "solve",       "convergence",
                                          "potential-flow", "complex-info"};
  std::map<std::string, CLI::App*> subs;
  for (const auto& n : names) subs[n] = app.add_subcommand(n);

  for (auto& [name, sub] : subs) {
    sub->add_option("--config", config_path, "JSON config; flags override its values");
    sub->add_option("--dim", cfg.dim, "spatial dimension");
    sub->add_option("--order", cfg.order, "polynomial order N");
    sub->add_option("--grid", cfg.grid, "dual point family: gll|gauss|extended");
    sub->add_option("--quad-order", cfg.quad_order, "Gauss points per direction");
    sub->add_option("--map", cfg.map_name, "coordinate map name");
    sub->add_option("--map-p0", cfg.map_p0, "map parameter (e.g. inner radius)");
    sub->add_option("--map-p1", cfg.map_p1, "map parameter (e.g. outer radius)");
    sub->add_option("--form", cfg.form, "named input form");
    sub->add_option("--gamma", cfg.gamma, "circulation strength");
    sub->add_option("--cells", cfg.cells, "cells per direction");
    sub->add_option("--complex", cfg.complex_kind, "grid|annulus|hole");
    sub->add_option("--out", cfg.out, "output directory");
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--threads", cfg.threads, "worker threads (1 = serial)");
  }

  CLI11_PARSE(app, argc, argv);
  CLI::App* sub = app.get_subcommands().front();
  cfg.command = sub->get_name();

  try {
    if (!config_path.empty()) {
      std::set<std::string> given;
      for (const auto* opt : sub->get_options())
        if (opt->count() > 0) {
          std::string n = opt->get_name();
          if (n.rfind("--", 0) == 0) n = n.substr(2);
          std::replace(n.begin(), n.end(), '-', '_');
          given.insert(n);
        }
      apply_config_file(cfg, config_path, given);
    }
    cfg.validate();
    set_thread_count(cfg.threads);

    if (cfg.command == "project") return cmd_project(cfg);
    if (cfg.command == "derivative") return cmd_derivative(cfg);
    if (cfg.command == "hodge-star") return cmd_hodge_star(cfg);
    if (cfg.command == "decompose") return cmd_decompose(cfg);
    if (cfg.command == "solve") return cmd_solve(cfg);
    if (cfg.command == "convergence") return cmd_convergence(cfg);
    if (cfg.command == "potential-flow") return cmd_potential_flow(cfg);
    if (cfg.command == "complex-info") return cmd_complex_info(cfg);
    throw std::logic_error("unhandled command");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
