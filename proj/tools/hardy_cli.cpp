// Command-line front-end for the Hardy / Muckenhoupt verification library.
// All numerical work happens in the headers under include/hardy; this file
// only parses arguments, loads JSON inputs, and serializes results.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hardy/hardy.hpp"

namespace {

using nlohmann::json;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hardy::ParseError("cannot open input file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw hardy::ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw hardy::ParseError("cannot open output file: " + out_path);
    out << text;
  }
}

std::string fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string report_csv(const hardy::InequalityReport& r) {
  std::ostringstream os;
  os << "lhs,rhs,ratio,margin,holds\n"
     << fmt(r.lhs) << ',' << fmt(r.rhs) << ',' << fmt(r.ratio) << ',' << fmt(r.margin)
     << ',' << (r.holds ? "true" : "false") << '\n';
  return os.str();
}

std::string scan_csv(const hardy::ApScan& s) {
  std::ostringstream os;
  os << "lo,hi,characteristic\n";
  for (std::size_t i = 0; i < s.intervals.size(); ++i) {
    os << fmt(s.intervals[i].first) << ',' << fmt(s.intervals[i].second) << ','
       << fmt(s.characteristics[i]) << '\n';
  }
  return os.str();
}

std::string sweep_csv(const std::vector<hardy::SweepPoint>& pts) {
  std::ostringstream os;
  os << "d,lhs,rhs,ratio\n";
  for (const auto& pt : pts) {
    os << fmt(pt.d) << ',' << fmt(pt.lhs) << ',' << fmt(pt.rhs) << ',' << fmt(pt.ratio)
       << '\n';
  }
  return os.str();
}

std::vector<double> parse_list(const std::string& spec) { return hardy::parse_grid(spec); }

int exit_code_for(const hardy::InequalityReport& r) { return r.holds ? 0 : 1; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of sharp Hardy-type inequalities with "
               "negative exponents and Muckenhoupt A_q self-improvement"};
  app.require_subcommand(1);
  app.fallthrough();  // let --out/--format appear after the subcommand

  std::string out_path;
  std::string format = "json";
  app.add_option("--out", out_path, "Write the report to this path instead of stdout");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));

  // verify-discrete
  auto* vd = app.add_subcommand("verify-discrete",
                                "Check a discrete inequality on a sequence file");
  std::string vd_in, vd_check = "theorem2";
  double vd_p = 0, vd_q = 0, vd_q1 = 0, vd_q2 = 0;
  vd->add_option("--in", vd_in, "Sequence JSON {\"a\":[...],\"lam\":[...]}")->required();
  vd->add_option("--check", vd_check, "Which inequality to evaluate")
      ->check(CLI::IsMember({"theorem2", "lemma21", "theorem4"}));
  vd->add_option("--p", vd_p, "Exponent p")->required();
  vd->add_option("--q", vd_q, "Exponent q (theorem2)");
  vd->add_option("--q1", vd_q1, "Lower exponent (theorem4)");
  vd->add_option("--q2", vd_q2, "Upper exponent (theorem4)");

  // verify-continuous
  auto* vc = app.add_subcommand("verify-continuous",
                                "Check the integral inequality for a weight file");
  std::string vc_in;
  double vc_p = 0, vc_q = -1, vc_a = 0, vc_b = 1;
  double vc_abs_tol = 1e-10, vc_rel_tol = 1e-9;
  bool vc_quad = false;
  vc->add_option("--in", vc_in, "Weight JSON")->required();
  vc->add_option("--p", vc_p, "Exponent p")->required();
  vc->add_option("--q", vc_q, "Exponent q (defaults to p)");
  vc->add_option("--a", vc_a, "Interval left endpoint");
  vc->add_option("--b", vc_b, "Interval right endpoint");
  vc->add_option("--abs-tol", vc_abs_tol, "Quadrature absolute tolerance");
  vc->add_option("--rel-tol", vc_rel_tol, "Quadrature relative tolerance");
  vc->add_flag("--quadrature", vc_quad,
               "Force quadrature even when closed forms exist");

  // lemma31
  auto* l31 = app.add_subcommand("lemma31",
                                 "Residual of the integration-by-parts identity");
  std::string l31_in;
  double l31_a = 0, l31_u = 1;
  l31->add_option("--in", l31_in, "Weight JSON for g")->required();
  l31->add_option("--a-exp", l31_a, "Exponent a > 1")->required();
  l31->add_option("--u", l31_u, "Upper limit u");

  // solve-p0
  auto* sp = app.add_subcommand("solve-p0", "Critical exponent p0 for given q and M");
  double sp_q = 0, sp_m = 0;
  sp->add_option("--q", sp_q, "Exponent q > 1")->required();
  sp->add_option("--M", sp_m, "A_q constant M >= 1")->required();

  // ap-scan
  auto* as = app.add_subcommand("ap-scan", "A_p characteristic over interval families");
  std::string as_in, as_grid = "geom:40", as_class = "prefix";
  double as_p = 0;
  as->add_option("--in", as_in, "Weight JSON")->required();
  as->add_option("--p", as_p, "Exponent p > 1")->required();
  as->add_option("--grid", as_grid, "Grid spec: geom:J, lin:n, or comma list");
  as->add_option("--class", as_class, "Interval family")
      ->check(CLI::IsMember({"prefix", "suffix", "interval"}));

  // theorem3
  auto* t3 = app.add_subcommand("theorem3",
                                "Self-improvement check for a monotone weight");
  std::string t3_in, t3_grid = "geom:40";
  double t3_q = 0, t3_p = 0;
  t3->add_option("--in", t3_in, "Weight JSON")->required();
  t3->add_option("--q", t3_q, "Hypothesis exponent q > 1")->required();
  t3->add_option("--p", t3_p, "Improved exponent p in (p0, q]")->required();
  t3->add_option("--grid", t3_grid, "Grid spec for the prefix scans");

  // sharpness-sweep
  auto* sw = app.add_subcommand("sharpness-sweep",
                                "Ratio of the two sides for f(x) = x^d, d -> 1/p");
  double sw_p = 0, sw_q = 0;
  std::string sw_d;
  sw->add_option("--p", sw_p, "Exponent p")->required();
  sw->add_option("--q", sw_q, "Exponent q")->required();
  sw->add_option("--d", sw_d, "Comma list of exponents d in (-1, 1/p)")->required();

  // fuzz
  auto* fz = app.add_subcommand("fuzz", "Run the randomized property corpora");
  std::uint64_t fz_seed = 0;
  int fz_discrete = 10000, fz_continuous = 1000;
  fz->add_option("--seed", fz_seed, "RNG seed")->required();
  fz->add_option("--discrete-count", fz_discrete, "Discrete corpus size");
  fz->add_option("--continuous-count", fz_continuous, "Continuous corpus size");

  CLI11_PARSE(app, argc, argv);

  try {
    int status = 0;
    std::string text;

    if (*vd) {
      const auto seq = hardy::sequence_from_json(read_json_file(vd_in));
      hardy::InequalityReport rep;
      if (vd_check == "theorem2") {
        rep = hardy::theorem2_sides(seq, vd_p, vd_q);
      } else if (vd_check == "lemma21") {
        rep = hardy::lemma21_remainder(seq, vd_p);
      } else {
        rep = hardy::theorem4_sides(seq, vd_p, vd_q1, vd_q2);
      }
      text = format == "csv" ? report_csv(rep) : hardy::to_json(rep).dump(2) + "\n";
      status = exit_code_for(rep);
    } else if (*vc) {
      const auto w = hardy::weight_from_json(read_json_file(vc_in));
      hardy::QuadratureConfig cfg;
      cfg.abs_tol = vc_abs_tol;
      cfg.rel_tol = vc_rel_tol;
      const double q = vc_q < 0 ? vc_p : vc_q;
      const auto rep = hardy::theorem1_sides(
          w, vc_a, vc_b, vc_p, q, cfg,
          vc_quad ? hardy::EvalMode::Quadrature : hardy::EvalMode::Auto);
      text = format == "csv" ? report_csv(rep) : hardy::to_json(rep).dump(2) + "\n";
      status = exit_code_for(rep);
    } else if (*l31) {
      const auto w = hardy::weight_from_json(read_json_file(l31_in));
      const double res = hardy::lemma31_residual(w, l31_a, l31_u);
      json j = {{"residual", hardy::encode_real(res)}, {"a", l31_a}, {"u", l31_u}};
      text = j.dump(2) + "\n";
    } else if (*sp) {
      const auto sol = hardy::solve_p0(sp_q, sp_m);
      text = hardy::to_json(sol).dump(2) + "\n";
    } else if (*as) {
      const auto w = hardy::weight_from_json(read_json_file(as_in));
      const auto grid = hardy::parse_grid(as_grid);
      hardy::ApScan scan;
      if (as_class == "prefix") {
        scan = hardy::prefix_scan(w, as_p, grid);
      } else if (as_class == "suffix") {
        // grid entries are left endpoints t of (t, hi); drop t >= hi
        const double hi = std::get_if<hardy::PowerWeight>(&w) != nullptr
                              ? 1.0
                              : hardy::domain_hi(w);
        std::vector<double> pts;
        for (double t : grid) {
          if (t >= hardy::domain_lo(w) && t < hi) pts.push_back(t);
        }
        scan = hardy::suffix_scan(w, as_p, pts, hi);
      } else {
        std::vector<std::pair<double, double>> intervals;
        for (std::size_t i = 0; i < grid.size(); ++i) {
          for (std::size_t j2 = i + 1; j2 < grid.size(); ++j2) {
            intervals.emplace_back(std::min(grid[i], grid[j2]),
                                   std::max(grid[i], grid[j2]));
          }
        }
        scan = hardy::interval_scan(w, as_p, intervals);
      }
      if (format == "csv") {
        text = scan_csv(scan);
      } else {
        json j = hardy::to_json(scan);
        j["weight"] = hardy::weight_to_json(w);
        text = j.dump(2) + "\n";
      }
    } else if (*t3) {
      const auto w = hardy::weight_from_json(read_json_file(t3_in));
      const auto res = hardy::theorem3_check(w, t3_q, t3_p, hardy::parse_grid(t3_grid));
      json j = hardy::to_json(res.report);
      j["M"] = hardy::encode_real(res.M);
      j["p0"] = res.p0;
      j["M_prime"] = hardy::encode_real(res.m_prime);
      text = j.dump(2) + "\n";
      status = exit_code_for(res.report);
    } else if (*sw) {
      const auto pts = hardy::sharpness_sweep(sw_p, sw_q, parse_list(sw_d));
      if (format == "json") {
        json rows = json::array();
        for (const auto& pt : pts) {
          rows.push_back({{"d", pt.d}, {"lhs", pt.lhs}, {"rhs", pt.rhs},
                          {"ratio", pt.ratio}});
        }
        text = rows.dump(2) + "\n";
      } else {
        text = sweep_csv(pts);
      }
    } else if (*fz) {
      const auto disc = hardy::fuzz_discrete(fz_seed, fz_discrete);
      const auto cont = hardy::fuzz_continuous(fz_seed + 1, fz_continuous);
      json j = {{"seed", fz_seed},
                {"discrete", hardy::to_json(disc)},
                {"continuous", hardy::to_json(cont)}};
      text = j.dump(2) + "\n";
      status = (disc.all_hold && cont.all_hold) ? 0 : 1;
    }

    emit(text, out_path);
    return status;
  } catch (const hardy::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
