// octg2 — octonion / G2 computational algebra workbench.
//
// Subcommands reproduce the library's experiments from the shell: the signed
// multiplication table, invariant verification suites, BCH term listings and
// convergence gaps, torus/sample/orbit/powers point-cloud exports, and
// octonion exp/log round trips.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "octg2/g2.hpp"
#include "octg2/lie.hpp"
#include "octg2/oct_bch.hpp"
#include "octg2/octonion.hpp"
#include "octg2/pointcloud.hpp"
#include "octg2/verify.hpp"

using namespace octg2;

namespace {

std::vector<double> parse_reals(const std::string& text, size_t expect, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t pos = 0;
      const double v = std::stod(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw CLI::ValidationError(flag, "cannot parse '" + tok + "' as a decimal number");
    }
  }
  if (expect && out.size() != expect)
    throw CLI::ValidationError(flag, "expected " + std::to_string(expect) + " comma-separated values, got " +
                                         std::to_string(out.size()));
  return out;
}

std::vector<int> parse_slots(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

// Generator names: C1..C14 (first basis), X1..X7 / Y1..Y7 (second basis).
Mat parse_generator(const std::string& name) {
  if (name.size() >= 2 && (name[0] == 'C' || name[0] == 'X' || name[0] == 'Y')) {
    const int idx = std::atoi(name.c_str() + 1);
    if (name[0] == 'C') return cacciatori(idx);
    if (name[0] == 'X') return arenas_x(idx);
    return arenas_y(idx);
  }
  throw CLI::ValidationError("generator", "unknown generator '" + name + "' (use C1..C14, X1..X7, Y1..Y7)");
}

Oct oct_from(const std::vector<double>& v) {
  Oct o;
  for (int i = 0; i < 8; ++i) o.c[i] = v[i];
  return o;
}

std::string out_path(const std::string& out_flag, const std::string& command, const std::string& fmt) {
  if (!out_flag.empty()) return out_flag;
  const char* dir = std::getenv("OCTG2_OUT_DIR");
  return std::string(dir ? dir : ".") + "/" + command + "." + fmt;
}

void write_cloud(const PointCloud& cloud, const std::string& path, const std::string& fmt) {
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    std::exit(1);
  }
  if (fmt == "csv")
    write_csv(os, cloud);
  else
    write_json(os, cloud);
  os.flush();
  if (!os) {
    std::cerr << "error: short write to " << path << "\n";
    std::exit(1);
  }
  std::cout << "wrote " << path << " (" << cloud.count() << " points)\n";
}

void log_config(const std::string& line) { std::cerr << "config: " << line << "\n"; }

void print_oct(const char* label, const Oct& o) {
  std::cout << label << " {";
  for (int i = 0; i < 8; ++i) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", o.c[i]);
    std::cout << (i ? ", " : "") << buf;
  }
  std::cout << "}\n";
}

int run_verify(const std::string& suite) {
  std::vector<std::string> suites;
  if (suite == "all")
    suites = verify_suite_names();
  else
    suites.push_back(suite);
  int fails = 0;
  for (const auto& s : suites) {
    for (const Check& c : verify_suite(s)) {
      if (!c.pass) ++fails;
      std::printf("%-4s %-38s measured=%-13.6g tol=%g\n", c.pass ? "ok" : "FAIL", c.name.c_str(),
                  c.measured, c.tol);
    }
  }
  std::printf("%s: %d failure(s)\n", suite.c_str(), fails);
  return fails == 0 ? 0 : 1;
}

void run_table() {
  const char* names[8] = {"e0", "e1", "e2", "e3", "e4", "e5", "e6", "e7"};
  std::printf("    ");
  for (int j = 0; j < 8; ++j) std::printf("%-5s", names[j]);
  std::printf("\n");
  for (int i = 0; i < 8; ++i) {
    std::printf("%-4s", names[i]);
    for (int j = 0; j < 8; ++j) {
      std::string cell;
      const int idx = kBasisIndex[i][j];
      const int sgn = kBasisSign[i][j];
      if (idx == 0)
        cell = (sgn > 0) ? "1" : "-1";
      else
        cell = std::string(sgn > 0 ? "" : "-") + names[idx];
      std::printf("%-5s", cell.c_str());
    }
    std::printf("\n");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"octonion & G2 computational algebra workbench"};
  app.require_subcommand(1);

  // ---- table ----
  app.add_subcommand("table", "print the signed basis multiplication table");

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "run an invariant suite; exit 0 iff all checks pass");
  std::string suite = "all";
  verify->add_option("suite", suite, "octonion|representation|g2-cacciatori|g2-arenas|dims|torus|param|all")
      ->check(CLI::IsMember({"octonion", "representation", "g2-cacciatori", "g2-arenas", "dims",
                             "torus", "param", "all"}));

  // ---- bch ----
  auto* bch = app.add_subcommand("bch", "BCH term listings and convergence gaps");
  int bch_order = 2;
  bool print_terms = false;
  std::string pair;
  std::string a_file, b_file;
  bch->add_option("--order", bch_order, "series order (1.." + std::to_string(kMaxBchOrder) + ")")
      ->required();
  bch->add_flag("--print-terms", print_terms, "print the order-n words with exact coefficients");
  bch->add_option("--pair", pair, "matrix pair for the convergence gap: Ci-Cj | zero");
  bch->add_option("--a-file", a_file, "whitespace-separated square matrix for A");
  bch->add_option("--b-file", b_file, "whitespace-separated square matrix for B");

  // ---- torus ----
  auto* torus = app.add_subcommand("torus", "two-generator orbit grid of a fixed octonion");
  std::string t_a = "C5", t_b = "C11", t_w = "1,1,2.3,1,1,1,1,1", t_slots = "2,4,6";
  std::string t_order = "AB", t_fmt = "csv", t_out;
  TorusGrid t_grid;
  torus->add_option("--a", t_a, "first generator (default C5)");
  torus->add_option("--b", t_b, "second generator (default C11)");
  torus->add_option("--w", t_w, "octonion, 8 comma-separated decimals");
  torus->add_option("--slots", t_slots, "imaginary coordinate slots (1..7) to export");
  torus->add_option("--nu", t_grid.nu, "grid points along u (default 80)");
  torus->add_option("--nv", t_grid.nv, "grid points along v (default 80)");
  torus->add_option("--umax", t_grid.u_max, "u range end (default 2*pi)");
  torus->add_option("--vmax", t_grid.v_max, "v range end (default pi*sqrt(3))");
  torus->add_option("--order", t_order, "AB | BA")->check(CLI::IsMember({"AB", "BA"}));
  torus->add_option("--format", t_fmt, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  torus->add_option("--out", t_out, "output path (default $OCTG2_OUT_DIR/torus.<fmt>)");

  // ---- sample ----
  auto* sample = app.add_subcommand("sample", "random points of the group acting on a fixed vector");
  int s_count = 4000;
  std::uint64_t s_seed = 0;
  std::string s_w, s_slots = "2,5,7", s_fmt = "json", s_out;
  sample->add_option("--count", s_count, "number of samples")->required();
  sample->add_option("--seed", s_seed, "PRNG seed (default 0)");
  sample->add_option("--w", s_w, "imaginary 7-vector (default: the built-in probe)");
  sample->add_option("--slots", s_slots, "slots to export (default 2,5,7)");
  sample->add_option("--format", s_fmt, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  sample->add_option("--out", s_out, "output path (default $OCTG2_OUT_DIR/sample.<fmt>)");

  // ---- orbit (accumulated action) ----
  auto* orbit = app.add_subcommand("orbit", "accumulated action along a parameter-space path");
  std::string o_line, o_w, o_slots = "2,5,7", o_fmt = "csv", o_out;
  int o_steps = 2000, o_count = 0;
  std::uint64_t o_seed = 0;
  bool o_random = false, o_no_normalize = false;
  orbit->add_option("--line", o_line, "line endpoint: 14 comma values in units of pi");
  orbit->add_option("--steps", o_steps, "steps along the line (default 2000)");
  orbit->add_flag("--random", o_random, "random path instead of a line");
  orbit->add_option("--count", o_count, "random path length");
  orbit->add_option("--seed", o_seed, "PRNG seed for --random");
  orbit->add_option("--w", o_w, "imaginary 7-vector (default: the built-in probe)");
  orbit->add_option("--slots", o_slots, "slots to export (default 2,5,7)");
  orbit->add_flag("--no-normalize", o_no_normalize, "skip the per-step normalization");
  orbit->add_option("--format", o_fmt, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  orbit->add_option("--out", o_out, "output path (default $OCTG2_OUT_DIR/orbit.<fmt>)");

  // ---- powers ----
  auto* powers = app.add_subcommand("powers", "orbit of one sampled group element's powers");
  std::uint64_t p_seed = 0;
  int p_n = 1700;
  std::string p_w, p_slots = "2,5,7", p_fmt = "csv", p_out;
  powers->add_option("--index-seed", p_seed, "seed for sampling the element")->required();
  powers->add_option("--n", p_n, "number of powers (default 1700)");
  powers->add_option("--w", p_w, "imaginary 7-vector (default: the built-in probe)");
  powers->add_option("--slots", p_slots, "slots to export (default 2,5,7)");
  powers->add_option("--format", p_fmt, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  powers->add_option("--out", p_out, "output path (default $OCTG2_OUT_DIR/powers.<fmt>)");

  // ---- explog ----
  auto* explog = app.add_subcommand("explog", "octonion exponential, logarithm branch, round trip");
  std::string e_x;
  int e_k = 0;
  explog->add_option("--x", e_x, "octonion, 8 comma-separated decimals")->required();
  explog->add_option("--k", e_k, "logarithm branch (default 0)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("table")) {
      log_config("command=table");
      run_table();
      return 0;
    }

    if (app.got_subcommand("verify")) {
      log_config("command=verify suite=" + suite);
      return run_verify(suite);
    }

    if (app.got_subcommand("bch")) {
      if (bch_order < 1 || bch_order > kMaxBchOrder) {
        std::cerr << "error: --order must be in 1.." << kMaxBchOrder << "\n";
        return 1;
      }
      log_config("command=bch order=" + std::to_string(bch_order) + " pair=" + pair);
      if (print_terms) std::cout << format_terms(bch_terms(bch_order));
      Mat A, B;
      bool have_pair = false;
      if (!pair.empty()) {
        if (pair == "zero") {
          A = Mat(7);
          B = Mat(7);
        } else {
          const auto dash = pair.find('-');
          if (dash == std::string::npos) {
            std::cerr << "error: --pair expects Ci-Cj or zero\n";
            return 1;
          }
          A = parse_generator(pair.substr(0, dash));
          B = parse_generator(pair.substr(dash + 1));
        }
        have_pair = true;
      } else if (!a_file.empty() && !b_file.empty()) {
        auto read_mat = [](const std::string& path) {
          std::ifstream is(path);
          if (!is) throw std::runtime_error("cannot open " + path);
          std::vector<double> v;
          double x;
          while (is >> x) v.push_back(x);
          int n = static_cast<int>(std::lround(std::sqrt(double(v.size()))));
          if (n * n != static_cast<int>(v.size()))
            throw std::runtime_error(path + ": entry count is not a perfect square");
          Mat m(n);
          for (int i = 0; i < n * n; ++i) m.data()[i] = v[i];
          return m;
        };
        A = read_mat(a_file);
        B = read_mat(b_file);
        have_pair = true;
      }
      if (have_pair) {
        const double gap = bch_convergence_gap(A, B, bch_order);
        std::printf("gap(order=%d) = %.9g\n", bch_order, gap);
      }
      if (!print_terms && !have_pair) {
        std::cerr << "error: nothing to do; pass --print-terms and/or --pair\n";
        return 1;
      }
      return 0;
    }

    if (app.got_subcommand("torus")) {
      log_config("command=torus a=" + t_a + " b=" + t_b + " w=" + t_w + " slots=" + t_slots +
                 " order=" + t_order + " format=" + t_fmt);
      const Mat A = parse_generator(t_a), B = parse_generator(t_b);
      const Oct w = oct_from(parse_reals(t_w, 8, "--w"));
      auto cloud = torus_orbit(A, B, w, t_grid, t_order == "AB" ? MulOrder::kAB : MulOrder::kBA,
                               parse_slots(t_slots));
      cloud.meta.generator = "torus " + t_a + " " + t_b + " " + t_order;
      write_cloud(cloud, out_path(t_out, "torus", t_fmt), t_fmt);
      return 0;
    }

    if (app.got_subcommand("sample")) {
      log_config("command=sample count=" + std::to_string(s_count) + " seed=" + std::to_string(s_seed) +
                 " slots=" + s_slots + " format=" + s_fmt);
      std::array<double, 7> w = shape_probe_w();
      if (!s_w.empty()) {
        const auto v = parse_reals(s_w, 7, "--w");
        std::copy(v.begin(), v.end(), w.begin());
      }
      auto cloud = sample_cloud(sample_g2(s_count, cover_g2(), s_seed), w, parse_slots(s_slots));
      cloud.meta.seed = s_seed;
      cloud.meta.grid = "count=" + std::to_string(s_count);
      write_cloud(cloud, out_path(s_out, "sample", s_fmt), s_fmt);
      return 0;
    }

    if (app.got_subcommand("orbit")) {
      std::array<double, 7> w = shape_probe_w();
      if (!o_w.empty()) {
        const auto v = parse_reals(o_w, 7, "--w");
        std::copy(v.begin(), v.end(), w.begin());
      }
      std::vector<G2Params> path;
      std::string desc;
      if (o_random) {
        if (o_count < 1) {
          std::cerr << "error: --random needs --count\n";
          return 1;
        }
        path = sample_g2(o_count, cover_g2(), o_seed);
        desc = "random count=" + std::to_string(o_count) + " seed=" + std::to_string(o_seed);
      } else {
        if (o_line.empty()) {
          std::cerr << "error: pass --line or --random\n";
          return 1;
        }
        const auto end = parse_reals(o_line, 14, "--line");
        if (o_steps < 1) {
          std::cerr << "error: --steps must be positive\n";
          return 1;
        }
        for (int s = 0; s <= o_steps; ++s) {
          G2Params p;
          const double t = static_cast<double>(s) / o_steps;
          for (int i = 0; i < 14; ++i) p[i] = t * end[i] * 3.14159265358979323846;
          path.push_back(p);
        }
        desc = "line steps=" + std::to_string(o_steps);
      }
      log_config("command=orbit " + desc + " slots=" + o_slots + " format=" + o_fmt);
      auto cloud = accumulate_action(path, w, !o_no_normalize, parse_slots(o_slots));
      cloud.meta.generator = "accumulate " + desc;
      cloud.meta.seed = o_seed;
      write_cloud(cloud, out_path(o_out, "orbit", o_fmt), o_fmt);
      return 0;
    }

    if (app.got_subcommand("powers")) {
      log_config("command=powers index-seed=" + std::to_string(p_seed) + " n=" + std::to_string(p_n) +
                 " slots=" + p_slots + " format=" + p_fmt);
      std::array<double, 7> w = shape_probe_w();
      if (!p_w.empty()) {
        const auto v = parse_reals(p_w, 7, "--w");
        std::copy(v.begin(), v.end(), w.begin());
      }
      const Mat g = g_param(sample_g2(1, cover_g2(), p_seed)[0]);
      auto cloud = power_orbit(g, w, p_n, parse_slots(p_slots));
      cloud.meta.seed = p_seed;
      write_cloud(cloud, out_path(p_out, "powers", p_fmt), p_fmt);
      return 0;
    }

    if (app.got_subcommand("explog")) {
      log_config("command=explog x=" + e_x + " k=" + std::to_string(e_k));
      const Oct x = oct_from(parse_reals(e_x, 8, "--x"));
      print_oct("exp(x) =", oct_exp(x));
      try {
        const Oct lg = oct_log(x, e_k);
        print_oct(("log(x, k=" + std::to_string(e_k) + ") =").c_str(), lg);
        const double resid = oct_norm(oct_exp(lg) - x) / oct_norm(x);
        std::printf("round-trip relative residual = %.9g\n", resid);
      } catch (const OctLogError& err) {
        std::cerr << "log error: " << err.what() << "\n";
        return 1;
      }
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  return 0;
}
