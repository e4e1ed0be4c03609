// smx: command-line front end for the exponential-potential S-matrix library.
//
// Subcommands: bound-states, heisenberg, figure1, s-eval, redundant.
// Exit codes: 0 success, 2 usage/validation error, 3 evaluation at a
// singular point of S.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <limits>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "smx/errors.hpp"
#include "smx/oracle.hpp"
#include "smx/scattering.hpp"
#include "smx/spectrum.hpp"

namespace {

using json = nlohmann::ordered_json;
using smx::scattering::cx;
using smx::scattering::ModelParams;

struct RunConfig {
  double a = 1.0;
  double alpha = 0.0;
  std::string format = "csv";
  std::string out_path;  // empty = stdout
  int precision = 15;

  void validate(bool needs_alpha) const {
    if (!(a > 0.0)) throw smx::Error("a must be positive");
    if (needs_alpha && !(alpha > 0.0)) throw smx::Error("alpha must be positive");
    if (precision < 6 || precision > 17) {
      throw smx::Error("precision must lie in [6, 17]");
    }
  }
  ModelParams params() const { return ModelParams{a, alpha}; }
};

// %.{p}g formatting via to_chars: locale-independent and byte-deterministic.
std::string fmt_g(double v, int precision) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v,
                           std::chars_format::general, precision);
  return std::string(buf, res.ptr);
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out_path, std::ios::binary);
  if (!out) throw smx::Error("cannot open output path: " + cfg.out_path);
  out << text;
}

json params_json(const RunConfig& cfg, bool with_alpha) {
  json p;
  p["a"] = cfg.a;
  if (with_alpha) p["alpha"] = cfg.alpha;
  p["precision"] = cfg.precision;
  return p;
}

std::string dump_json(const json& doc) { return doc.dump(2) + "\n"; }

// ---------------------------------------------------------------- bound-states

int cmd_bound_states(const RunConfig& cfg) {
  cfg.validate(true);
  const auto states = smx::spectrum::find_bound_states(cfg.params());
  if (cfg.format == "json") {
    json doc;
    doc["params"] = params_json(cfg, true);
    doc["results"] = json::array();
    for (std::size_t i = 0; i < states.size(); ++i) {
      const auto& bs = states[i];
      doc["results"].push_back({{"index", i},
                                {"kappa", bs.kappa},
                                {"nu", bs.nu},
                                {"norm_integral", bs.norm_integral},
                                {"c_l_squared", bs.c_l_squared}});
    }
    doc["diagnostics"] = {{"count", states.size()}};
    emit(cfg, dump_json(doc));
  } else {
    std::ostringstream os;
    os << "index,kappa,nu,norm_integral,c_l_squared\n";
    for (std::size_t i = 0; i < states.size(); ++i) {
      const auto& bs = states[i];
      os << i << ',' << fmt_g(bs.kappa, cfg.precision) << ','
         << fmt_g(bs.nu, cfg.precision) << ','
         << fmt_g(bs.norm_integral, cfg.precision) << ','
         << fmt_g(bs.c_l_squared, cfg.precision) << '\n';
    }
    emit(cfg, os.str());
  }
  return 0;
}

// ------------------------------------------------------------------ heisenberg

int cmd_heisenberg(const RunConfig& cfg, const std::string& method) {
  cfg.validate(true);
  const auto p = cfg.params();
  const bool both = method == "both";
  const auto primary = both || method == "residue"
                           ? smx::spectrum::Method::analytic_residue
                           : smx::spectrum::Method::contour;
  const auto report = smx::spectrum::heisenberg_report(p, primary);
  std::vector<double> other;
  if (both) {
    const auto alt =
        smx::spectrum::heisenberg_report(p, smx::spectrum::Method::contour);
    for (std::size_t i = 0; i < alt.ratios.size(); ++i) {
      other.push_back(alt.ratios[i] * alt.bound_states[i].c_l_squared);
    }
  }

  if (cfg.format == "json") {
    json doc;
    doc["params"] = params_json(cfg, true);
    doc["params"]["method"] = method;
    doc["results"] = json::array();
    double worst = 0.0;
    for (std::size_t i = 0; i < report.bound_states.size(); ++i) {
      const auto& bs = report.bound_states[i];
      const double lhs = report.ratios[i] * bs.c_l_squared;
      json row = {{"kappa", bs.kappa},
                  {"lhs", lhs},
                  {"rhs", bs.c_l_squared},
                  {"r_h", report.ratios[i]},
                  {"abs_r_h_minus_1", std::abs(report.ratios[i] - 1.0)}};
      if (both) row["cross_method_discrepancy"] = std::abs(lhs - other[i]);
      worst = std::max(worst, std::abs(report.ratios[i] - 1.0));
      doc["results"].push_back(std::move(row));
    }
    doc["diagnostics"] = {{"count", report.bound_states.size()},
                          {"max_abs_r_h_minus_1", worst}};
    emit(cfg, dump_json(doc));
  } else {
    std::ostringstream os;
    os << "kappa,lhs,rhs,r_h,abs_r_h_minus_1";
    if (both) os << ",cross_method_discrepancy";
    os << '\n';
    for (std::size_t i = 0; i < report.bound_states.size(); ++i) {
      const auto& bs = report.bound_states[i];
      const double lhs = report.ratios[i] * bs.c_l_squared;
      os << fmt_g(bs.kappa, cfg.precision) << ',' << fmt_g(lhs, cfg.precision)
         << ',' << fmt_g(bs.c_l_squared, cfg.precision) << ','
         << fmt_g(report.ratios[i], cfg.precision) << ','
         << fmt_g(std::abs(report.ratios[i] - 1.0), cfg.precision);
      if (both) os << ',' << fmt_g(std::abs(lhs - other[i]), cfg.precision);
      os << '\n';
    }
    emit(cfg, os.str());
  }
  return 0;
}

// --------------------------------------------------------------------- figure1

int cmd_figure1(const RunConfig& cfg, double alpha_min, double alpha_max,
                int steps) {
  cfg.validate(false);
  if (!(alpha_min > 0.0)) throw smx::Error("alpha-min must be positive");
  if (!(alpha_max >= alpha_min)) {
    throw smx::Error("alpha-max must be >= alpha-min");
  }
  if (steps < 1) throw smx::Error("steps must be >= 1");

  std::vector<double> alphas(steps);
  for (int i = 0; i < steps; ++i) {
    alphas[i] = steps == 1 ? alpha_min
                           : alpha_min + (alpha_max - alpha_min) * i /
                                             static_cast<double>(steps - 1);
  }

  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (const char* env = std::getenv("SMX_MAX_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) workers = std::min<unsigned>(workers, cap);
  }
  workers = std::min<unsigned>(workers, alphas.size());

  std::vector<smx::spectrum::HeisenbergReport> reports(alphas.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&]() {
    for (std::size_t i = next.fetch_add(1); i < alphas.size();
         i = next.fetch_add(1)) {
      try {
        ModelParams p{cfg.a, alphas[i]};
        reports[i] = smx::spectrum::heisenberg_report(
            p, smx::spectrum::Method::analytic_residue);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  if (cfg.format == "json") {
    json doc;
    doc["params"] = params_json(cfg, false);
    doc["params"]["alpha_min"] = alpha_min;
    doc["params"]["alpha_max"] = alpha_max;
    doc["params"]["steps"] = steps;
    doc["results"] = json::array();
    double worst = 0.0;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      for (std::size_t b = 0; b < reports[i].bound_states.size(); ++b) {
        doc["results"].push_back(
            {{"alpha", alphas[i]},
             {"branch_index", b},
             {"kappa", reports[i].bound_states[b].kappa},
             {"r_h", reports[i].ratios[b]}});
        worst = std::max(worst, std::abs(reports[i].ratios[b] - 1.0));
      }
    }
    doc["diagnostics"] = {{"max_abs_r_h_minus_1", worst}};
    emit(cfg, dump_json(doc));
  } else {
    std::ostringstream os;
    os << "alpha,branch_index,kappa,r_h\n";
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      for (std::size_t b = 0; b < reports[i].bound_states.size(); ++b) {
        os << fmt_g(alphas[i], cfg.precision) << ',' << b << ','
           << fmt_g(reports[i].bound_states[b].kappa, cfg.precision) << ','
           << fmt_g(reports[i].ratios[b], cfg.precision) << '\n';
      }
    }
    emit(cfg, os.str());
  }
  return 0;
}

// ---------------------------------------------------------------------- s-eval

struct Singularity {
  std::string kind;
  cx location;
  double distance = 0.0;
};

Singularity nearest_singularity(const ModelParams& p, cx k) {
  std::vector<Singularity> candidates;
  const double spacing = 1.0 / (2.0 * p.a);
  const int n_center = std::max(1, static_cast<int>(std::llround(
                                       std::abs(k.imag()) / spacing)));
  for (int n = std::max(1, n_center - 2); n <= n_center + 2; ++n) {
    candidates.push_back({"redundant_pole_n=" + std::to_string(n),
                          cx(0.0, n * spacing), 0.0});
    candidates.push_back({"redundant_zero_n=" + std::to_string(n),
                          cx(0.0, -n * spacing), 0.0});
  }
  for (const auto& bs : smx::spectrum::find_bound_states(p)) {
    candidates.push_back({"bound_state_pole", cx(0.0, bs.kappa), 0.0});
    candidates.push_back({"mirror_zero", cx(0.0, -bs.kappa), 0.0});
  }
  candidates.push_back({"origin", cx(0.0, 0.0), 0.0});
  Singularity best;
  best.distance = std::numeric_limits<double>::infinity();
  for (auto& c : candidates) {
    c.distance = std::abs(k - c.location);
    if (c.distance < best.distance) best = c;
  }
  return best;
}

int cmd_s_eval(const RunConfig& cfg, double k_re, double k_im) {
  cfg.validate(true);
  const auto p = cfg.params();
  const cx k(k_re, k_im);
  const cx s = smx::scattering::s_matrix(p, k);
  const cx fp = smx::scattering::jost_plus(p, k);
  const cx fm = smx::scattering::jost_minus(p, k);
  const auto near = nearest_singularity(p, k);

  if (cfg.format == "json") {
    json doc;
    doc["params"] = params_json(cfg, true);
    doc["params"]["k_re"] = k_re;
    doc["params"]["k_im"] = k_im;
    doc["results"] = json::array({{{"s_re", s.real()},
                                   {"s_im", s.imag()},
                                   {"abs_s", std::abs(s)},
                                   {"f_plus_re", fp.real()},
                                   {"f_plus_im", fp.imag()},
                                   {"f_minus_re", fm.real()},
                                   {"f_minus_im", fm.imag()}}});
    doc["diagnostics"] = {{"nearest_singularity", near.kind},
                          {"nearest_k_re", near.location.real()},
                          {"nearest_k_im", near.location.imag()},
                          {"nearest_distance", near.distance}};
    emit(cfg, dump_json(doc));
  } else {
    std::ostringstream os;
    os << "k_re,k_im,s_re,s_im,abs_s,f_plus_re,f_plus_im,f_minus_re,"
          "f_minus_im,nearest_singularity,nearest_k_re,nearest_k_im,"
          "nearest_distance\n";
    const int pr = cfg.precision;
    os << fmt_g(k_re, pr) << ',' << fmt_g(k_im, pr) << ','
       << fmt_g(s.real(), pr) << ',' << fmt_g(s.imag(), pr) << ','
       << fmt_g(std::abs(s), pr) << ',' << fmt_g(fp.real(), pr) << ','
       << fmt_g(fp.imag(), pr) << ',' << fmt_g(fm.real(), pr) << ','
       << fmt_g(fm.imag(), pr) << ',' << near.kind << ','
       << fmt_g(near.location.real(), pr) << ','
       << fmt_g(near.location.imag(), pr) << ','
       << fmt_g(near.distance, pr) << '\n';
    emit(cfg, os.str());
  }
  return 0;
}

// ------------------------------------------------------------------- redundant

int cmd_redundant(const RunConfig& cfg, int n_max, double r_sum) {
  cfg.validate(true);
  if (n_max < 1) throw smx::Error("n-max must be >= 1");
  const auto p = cfg.params();

  std::vector<smx::spectrum::RedundantPole> rows;
  rows.reserve(n_max);
  for (int n = 1; n <= n_max; ++n) {
    rows.push_back(smx::spectrum::redundant_pole_report(p, n));
  }
  const int sum_terms = std::max(n_max, 40);
  const auto [partial, closed] =
      smx::spectrum::redundant_pole_sum(p, r_sum, sum_terms);

  if (cfg.format == "json") {
    json doc;
    doc["params"] = params_json(cfg, true);
    doc["params"]["n_max"] = n_max;
    doc["params"]["r_sum"] = r_sum;
    doc["results"] = json::array();
    for (const auto& rp : rows) {
      doc["results"].push_back(
          {{"n", rp.n},
           {"k_im", rp.k_n.imag()},
           {"residue_analytic", rp.residue_analytic},
           {"residue_contour", rp.residue_contour},
           {"discrepancy",
            std::abs(rp.residue_analytic + rp.residue_contour)}});
    }
    doc["diagnostics"] = {{"partial_sum", partial},
                          {"closed_form", closed},
                          {"ratio", partial / closed},
                          {"r_sum", r_sum},
                          {"terms", sum_terms}};
    emit(cfg, dump_json(doc));
  } else {
    std::ostringstream os;
    const int pr = cfg.precision;
    os << "n,k_im,residue_analytic,residue_contour,discrepancy\n";
    for (const auto& rp : rows) {
      os << rp.n << ',' << fmt_g(rp.k_n.imag(), pr) << ','
         << fmt_g(rp.residue_analytic, pr) << ','
         << fmt_g(rp.residue_contour, pr) << ','
         << fmt_g(std::abs(rp.residue_analytic + rp.residue_contour), pr)
         << '\n';
    }
    os << "\npartial_sum,closed_form,ratio,r_sum,terms\n"
       << fmt_g(partial, pr) << ',' << fmt_g(closed, pr) << ','
       << fmt_g(partial / closed, pr) << ',' << fmt_g(r_sum, pr) << ','
       << sum_terms << '\n';
    emit(cfg, os.str());
  }
  return 0;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool alpha_required) {
  sub->add_option("--a", cfg.a, "Potential range a (> 0)")
      ->capture_default_str();
  auto* alpha =
      sub->add_option("--alpha", cfg.alpha, "Dimensionless strength alpha");
  if (alpha_required) alpha->required();
  sub->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--out", cfg.out_path, "Write output to this path");
  sub->add_option("--precision", cfg.precision,
                  "Significant digits for CSV values (6..17)")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"S-matrix laboratory for the exponential potential"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string method = "residue";
  double alpha_min = 0.5, alpha_max = 15.0, r_sum = 1.0;
  int steps = 291, n_max = 5;
  double k_re = 0.0, k_im = 0.0;

  auto* bound = app.add_subcommand("bound-states",
                                   "Bound-state table for given alpha");
  add_common(bound, cfg, true);

  auto* heis = app.add_subcommand(
      "heisenberg", "Residue identity R_H per bound state");
  add_common(heis, cfg, true);
  heis->add_option("--method", method, "residue | contour | both")
      ->check(CLI::IsMember({"residue", "contour", "both"}))
      ->capture_default_str();

  auto* fig = app.add_subcommand(
      "figure1", "Sweep alpha: bound-state branches kappa(alpha) and R_H");
  add_common(fig, cfg, false);
  fig->add_option("--alpha-min", alpha_min, "Sweep start")
      ->capture_default_str();
  fig->add_option("--alpha-max", alpha_max, "Sweep end")->capture_default_str();
  fig->add_option("--steps", steps, "Number of sweep points")
      ->capture_default_str();

  auto* seval = app.add_subcommand("s-eval", "Evaluate S(k) at one point");
  add_common(seval, cfg, true);
  seval->add_option("--k-re", k_re, "Re k")->capture_default_str();
  seval->add_option("--k-im", k_im, "Im k")->capture_default_str();

  auto* red = app.add_subcommand(
      "redundant", "Redundant-pole residues and the total-sum identity");
  add_common(red, cfg, true);
  red->add_option("--n-max", n_max, "Largest pole index")
      ->capture_default_str();
  red->add_option("--r-sum", r_sum, "r + r' for the total-sum identity (> 0)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }

  try {
    if (bound->parsed()) return cmd_bound_states(cfg);
    if (heis->parsed()) return cmd_heisenberg(cfg, method);
    if (fig->parsed()) return cmd_figure1(cfg, alpha_min, alpha_max, steps);
    if (seval->parsed()) return cmd_s_eval(cfg, k_re, k_im);
    if (red->parsed()) return cmd_redundant(cfg, n_max, r_sum);
  } catch (const smx::SingularEvaluation& e) {
    std::cerr << "singular evaluation: " << e.what() << '\n';
    return 3;
  } catch (const smx::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
