// command-line front end: solve / table / export / sweep
//
// exit codes: 0 ok, 2 usage, 3 geometry, 4 solver, 5 I/O

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ahlfors/ahlfors.hpp"

namespace {

using namespace ahlfors;

// complex literals on the command line: "0.5", "-0.5+0.2i", "-i", "2.3-1.1i"
cplx parse_complex(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty complex literal");

  auto parse_real = [](const std::string& p) -> double {
    if (p.empty() || p == "+") return 1.0;
    if (p == "-") return -1.0;
    size_t used = 0;
    double v = std::stod(p, &used);
    if (used != p.size())
      throw std::invalid_argument("bad number \"" + p + "\"");
    return v;
  };

  if (s.back() != 'i' && s.back() != 'I') return {parse_real(s), 0.0};

  s.pop_back();  // drop the i; s is now [real-part][sign]imag-part or imag-part
  // find the split: last '+'/'-' that is not the leading sign and does not
  // follow an exponent marker
  size_t split = std::string::npos;
  for (size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, parse_real(s)};
  return {parse_real(s.substr(0, split)), parse_real(s.substr(split))};
}

std::string format_complex(cplx z, int digits = 6) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.*f%+.*fi", digits, z.real(), digits,
                z.imag());
  return buf;
}

struct Options {
  std::string preset;
  std::string region_file;
  std::string a0_text;
  double r = 0.1;
  int n = 64;
  std::string mode = "least-squares";
  double t1 = 0.0, t2 = 2.0, t3 = 4.0;
  std::string out;
  std::string format = "plain";
};

Region resolve_region(const Options& opt) {
  if (!opt.region_file.empty() && !opt.preset.empty())
    throw std::invalid_argument("give either --preset or --region, not both");
  Region region = opt.region_file.empty()
                      ? preset_region(opt.preset.empty() ? "example1"
                                                         : opt.preset,
                                      opt.r)
                      : load_region(opt.region_file);
  if (!opt.a0_text.empty()) region.a0 = parse_complex(opt.a0_text);
  return region;
}

ZeroMode resolve_mode(const Options& opt) {
  if (opt.mode == "least-squares" || opt.mode == "ls")
    return ZeroMode::least_squares();
  if (opt.mode == "three-point" || opt.mode == "3pt")
    return ZeroMode::three_point(opt.t1, opt.t2, opt.t3);
  throw std::invalid_argument("mode must be least-squares or three-point");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw io_error("cannot open output file: " + out_path);
  f << text;
  if (!f) throw io_error("write failed: " + out_path);
}

// ---- solve -----------------------------------------------------------------

int cmd_solve(const Options& opt) {
  const Region region = resolve_region(opt);
  const Grid grid = build_grid(region, opt.n);
  const SzegoSolution sol = solve_boundary(region, grid);
  const ZeroEstimate est =
      solve_second_zero(region, grid, sol, resolve_mode(opt));

  std::ostringstream text;
  if (opt.format == "json") {
    text << to_json(est) << "\n";
  } else if (opt.format == "csv") {
    char buf[256];
    text << "re_a1,im_a1,s_defect,ls_residual,condition_estimate,residual_f,"
            "n,mode\n";
    std::snprintf(buf, sizeof buf, "%.16e,%.16e,%.6e,%.6e,%.6e,%.6e,%d,%s\n",
                  est.a1.real(), est.a1.imag(), est.s_defect, est.ls_residual,
                  est.condition_estimate, est.residual_f, est.n,
                  est.mode.c_str());
    text << buf;
  } else if (opt.format == "plain") {
    char buf[256];
    text << "a1         = " << format_complex(est.a1, 12) << "\n";
    std::snprintf(buf, sizeof buf,
                  "|f(a1)|    = %.3e\ns_defect   = %.3e\nls_residual= %.3e\n"
                  "cond       = %.3e\nn          = %d\nmode       = %s\n",
                  est.residual_f, est.s_defect, est.ls_residual,
                  est.condition_estimate, est.n, est.mode.c_str());
    text << buf;
  } else {
    throw std::invalid_argument("format must be json, csv, or plain");
  }
  emit(text.str(), opt.out);
  return 0;
}

// ---- table -----------------------------------------------------------------

int cmd_table(const std::string& which, const std::string& out_path) {
  std::ostringstream text;
  char buf[256];
  if (which == "1") {
    // annulus r = 0.1: the exact second zero is -r/conj(a0)
    text << "annulus r=0.1, n=64: max error in recovered a1\n";
    const double r = 0.1;
    const struct {
      const char* label;
      double a0;
    } cases[] = {{"non-symmetric a0=0.5", 0.5},
                 {"symmetric a0=sqrt(0.1)", std::sqrt(0.1)}};
    for (const auto& c : cases) {
      Region region = preset_region("example1", r);
      region.a0 = c.a0;
      const Grid grid = build_grid(region, 64);
      const ZeroEstimate est = solve_second_zero(region, grid);
      const cplx exact = -r / std::conj(cplx(c.a0));
      std::snprintf(buf, sizeof buf, "  %-24s a1 = %s  error = %.2e\n", c.label,
                    format_complex(est.a1).c_str(), std::abs(est.a1 - exact));
      text << buf;
    }
  } else if (which == "2") {
    text << "eccentric circles: a1 and |f(a1)| against n\n";
    const cplx a0s[] = {{-0.5, 0.2}, {0.0, -1.0}};
    for (const cplx& a0 : a0s) {
      text << "a0 = " << format_complex(a0, 4) << "\n";
      Region region = preset_region("example2");
      region.a0 = a0;
      for (const auto& row : convergence_sweep(region, {16, 32, 64, 128})) {
        std::snprintf(buf, sizeof buf, "  n = %4d  a1 = %s  |f(a1)| = %.2e\n",
                      row.n, format_complex(row.a1).c_str(), row.residual_f);
        text << buf;
      }
    }
  } else if (which == "3a" || which == "3b") {
    const Region region = preset_region("example" + which);
    text << "starfish (" << which
         << "): a1 and |f(a1)| against n, a0 = " << format_complex(region.a0, 4)
         << "\n";
    for (const auto& row : convergence_sweep(region, {128, 256, 512, 1024})) {
      if (!row.error.empty()) {
        std::snprintf(buf, sizeof buf, "  n = %4d  failed: %s\n", row.n,
                      row.error.c_str());
      } else {
        std::snprintf(buf, sizeof buf, "  n = %4d  a1 = %s  |f(a1)| = %.2e\n",
                      row.n, format_complex(row.a1).c_str(), row.residual_f);
      }
      text << buf;
    }
  } else {
    throw std::invalid_argument("table wants 1, 2, 3a, or 3b");
  }
  emit(text.str(), out_path);
  return 0;
}

// ---- export ----------------------------------------------------------------

int export_boundary(const Options& opt, bool theta_only) {
  const Region region = resolve_region(opt);
  const Grid grid = build_grid(region, opt.n);
  const SzegoSolution sol = solve_boundary(region, grid);
  std::ostringstream text;
  char buf[512];
  if (theta_only) {
    text << "t,curve,theta_prime\n";
    for (int i = 0; i < grid.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.16e,%d,%.16e\n", grid.t[i],
                    grid.curve[i], sol.theta_prime[i]);
      text << buf;
    }
  } else {
    text << "t,curve,re_z,im_z,re_z1,im_z1,re_S,im_S,re_Sp,im_Sp,theta_prime,"
            "re_f,im_f\n";
    for (int i = 0; i < grid.size(); ++i) {
      std::snprintf(buf, sizeof buf,
                    "%.16e,%d,%.16e,%.16e,%.16e,%.16e,%.16e,%.16e,%.16e,%.16e,"
                    "%.16e,%.16e,%.16e\n",
                    grid.t[i], grid.curve[i], grid.z[i].real(),
                    grid.z[i].imag(), grid.z1[i].real(), grid.z1[i].imag(),
                    sol.S[i].real(), sol.S[i].imag(), sol.S_p[i].real(),
                    sol.S_p[i].imag(), sol.theta_prime[i], sol.f[i].real(),
                    sol.f[i].imag());
      text << buf;
    }
  }
  emit(text.str(), opt.out);
  return 0;
}

int export_kernels(const Options& opt) {
  const Region region = resolve_region(opt);
  const Grid grid = build_grid(region, opt.n);
  const std::string prefix = opt.out.empty() ? "kernels" : opt.out;

  auto dump = [&](const std::string& name, auto&& entry, bool complex_valued,
                  const std::string& note) {
    std::ofstream f(prefix + "_" + name + ".csv");
    if (!f) throw io_error("cannot open " + prefix + "_" + name + ".csv");
    f << "# " << name << " matrix, " << grid.size() << "x" << grid.size()
      << (note.empty() ? "" : ", " + note) << "\n";
    char buf[128];
    for (int i = 0; i < grid.size(); ++i) {
      for (int j = 0; j < grid.size(); ++j) {
        if (j) f << ",";
        if (complex_valued) {
          const cplx v = entry(i, j);
          std::snprintf(buf, sizeof buf, "%.16e%+.16ei", v.real(), v.imag());
        } else {
          std::snprintf(buf, sizeof buf, "%.16e", std::real(entry(i, j)));
        }
        f << buf;
      }
      f << "\n";
    }
    if (!f) throw io_error("write failed: " + prefix + "_" + name + ".csv");
  };

  double skew = 0.0;  // max |A(i,j) + conj(A(j,i))| over the grid
  for (int i = 0; i < grid.size(); ++i)
    for (int j = 0; j < grid.size(); ++j)
      skew = std::max(skew,
                      std::abs(kerzman_stein(grid, i, j) +
                               std::conj(kerzman_stein(grid, j, i))));
  char note[96];
  std::snprintf(note, sizeof note, "max skew-hermitian deviation %.3e", skew);

  dump("kerzman_stein",
       [&](int i, int j) { return kerzman_stein(grid, i, j); }, true, note);
  dump("kerzman_stein_dt",
       [&](int i, int j) { return kerzman_stein_dt(grid, i, j); }, true, "");
  dump("neumann_adjoint",
       [&](int i, int j) { return neumann_adjoint(grid, i, j); }, false, "");
  std::cout << "wrote " << prefix << "_{kerzman_stein,kerzman_stein_dt,"
            << "neumann_adjoint}.csv\n";
  return 0;
}

// ---- sweep -----------------------------------------------------------------

int cmd_sweep(const Options& opt, const std::string& n_list_text) {
  std::vector<int> ns;
  std::stringstream ss(n_list_text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    size_t used = 0;
    const int n = std::stoi(item, &used);
    if (used != item.size())
      throw std::invalid_argument("bad n value \"" + item + "\"");
    if (n < 8 || n % 2)
      throw std::invalid_argument("sweep n values must be even and >= 8");
    ns.push_back(n);
  }
  if (ns.empty()) throw std::invalid_argument("empty n list");
  const Region region = resolve_region(opt);
  emit(sweep_csv(convergence_sweep(region, ns)), opt.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Ahlfors map of a smooth doubly connected region by boundary integral "
      "equations: solves the Kerzman-Stein equation for the Szego kernel and "
      "recovers the second zero of the map.\n"
      "Exit codes: 0 ok, 2 usage, 3 geometry, 4 solver, 5 I/O."};
  app.require_subcommand(1);
  Options opt;

  auto add_region_flags = [&](CLI::App* cmd, bool with_n = true) {
    cmd->add_option("--preset", opt.preset,
                    "built-in region: example1 example2 example3a example3b");
    cmd->add_option("--region", opt.region_file, "region JSON file");
    cmd->add_option("--a0", opt.a0_text,
                    "prescribed zero, complex literal like -0.5+0.2i");
    cmd->add_option("--r", opt.r, "inner radius for preset example1");
    if (with_n)
      cmd->add_option("--n", opt.n, "nodes per boundary curve (even, >= 8)")
          ->check(CLI::Range(8, 1 << 16));
  };

  auto* solve = app.add_subcommand("solve", "recover the second zero a1");
  add_region_flags(solve);
  solve->add_option("--mode", opt.mode, "least-squares (default) or three-point");
  solve->add_option("--t1", opt.t1, "three-point mode: first outer parameter");
  solve->add_option("--t2", opt.t2, "three-point mode: second outer parameter");
  solve->add_option("--t3", opt.t3, "three-point mode: third outer parameter");
  solve->add_option("--format", opt.format, "json, csv, or plain (default)");
  solve->add_option("--out", opt.out, "write the record here instead of stdout");

  std::string table_which;
  auto* table = app.add_subcommand("table", "rerun a built-in example table");
  table->add_option("which", table_which, "1, 2, 3a, or 3b")->required();
  std::string table_out;
  table->add_option("--out", table_out, "write the table here");

  std::string export_what;
  auto* exp = app.add_subcommand("export", "dump per-node data or kernel matrices");
  exp->add_option("what", export_what, "boundary, theta, or kernels")
      ->required();
  add_region_flags(exp);
  exp->add_option("--out", opt.out,
                  "output file (boundary/theta) or filename prefix (kernels)");

  std::string n_list_text = "16,32,64,128";
  auto* sweep = app.add_subcommand("sweep", "one solve per n, CSV output");
  add_region_flags(sweep, false);
  sweep->add_option("--n-list", n_list_text, "comma-separated n values");
  sweep->add_option("--out", opt.out, "CSV output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (solve->parsed()) {
      if (opt.n < 8 || opt.n % 2)
        throw std::invalid_argument("n must be even and >= 8");
      return cmd_solve(opt);
    }
    if (table->parsed()) return cmd_table(table_which, table_out);
    if (exp->parsed()) {
      if (opt.n < 8 || opt.n % 2)
        throw std::invalid_argument("n must be even and >= 8");
      if (export_what == "boundary") return export_boundary(opt, false);
      if (export_what == "theta") return export_boundary(opt, true);
      if (export_what == "kernels") return export_kernels(opt);
      throw std::invalid_argument("export wants boundary, theta, or kernels");
    }
    if (sweep->parsed()) return cmd_sweep(opt, n_list_text);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ahlfors::geometry_error& e) {
    std::cerr << "geometry error: " << e.what() << "\n";
    return 3;
  } catch (const ahlfors::solver_error& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return 4;
  } catch (const ahlfors::io_error& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
