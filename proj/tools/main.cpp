// Command-line front end: single-point checks, (d, k) grid sweeps with CSV
// or SVG output, wall listings and dimension reports.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cohsys/criteria.hpp"
#include "cohsys/region.hpp"
#include "cohsys/walls.hpp"

namespace {

void print_witness(std::ostream& os, const char* label, const cohsys::Witness& w) {
  os << label << ": " << cohsys::to_string(w.criterion) << " a=" << w.a;
  if (w.t) os << " t=" << *w.t;
  if (w.s) os << " s=" << *w.s;
  if (w.section_excess) os << " i=" << *w.section_excess;
  os << "\n";
  if (!w.notes.empty()) {
    os << "notes:";
    for (const auto& [name, value] : w.notes) os << " " << name << "=" << value;
    os << "\n";
  }
}

int run_check(long long g, long long n, long long d, long long k) {
  cohsys::SystemType sys{g, n, d, k};
  sys.validate();
  cohsys::Verdict v = cohsys::verdict(g, n, d, k);
  std::cout << "g=" << g << " n=" << n << " d=" << d << " k=" << k << "\n";
  std::cout << "outcome: " << cohsys::to_string(v.outcome) << "\n";
  switch (v.outcome) {
    case cohsys::Outcome::GuaranteedNonempty:
      print_witness(std::cout, "witness", *v.witness);
      if (v.expected_dim_component)
        std::cout << "expected_dim_component: " << *v.expected_dim_component << "\n";
      return 0;
    case cohsys::Outcome::CliffordInfeasible:
      std::cout << "clifford_max_k: " << cohsys::clifford_max_k(g, n, d) << "\n";
      return 3;
    default:
      if (v.conditional) {
        print_witness(std::cout, "conditional", *v.conditional);
        std::cout << "(inclusion certified; nonemptiness of the stable level "
                     "not established)\n";
      }
      return 2;
  }
}

int run_walls(long long g, long long n, long long d, long long k) {
  cohsys::SystemType sys{g, n, d, k};
  sys.validate();
  cohsys::WallSet ws = cohsys::wall_candidates(n, d, k);
  std::cout << "g=" << g << " n=" << n << " d=" << d << " k=" << k << "\n";
  std::cout << "upper_cutoff: "
            << (ws.upper_cutoff ? ws.upper_cutoff->str() : std::string("unbounded"))
            << "\n";
  std::cout << "d_sub_range: [" << ws.d_sub_min << "," << ws.d_sub_max << "]\n";
  std::cout << "walls: " << ws.walls.size() << "\n";
  for (const auto& wall : ws.walls) std::cout << wall.str() << "\n";
  return 0;
}

int run_dims(long long g, long long n, long long d, long long a,
             std::optional<long long> k) {
  cohsys::SystemType sys{g, n, d, k.value_or(0)};
  sys.validate();
  if (n < 2) throw std::domain_error("dims: requires rank n >= 2");
  long long a_cap = cohsys::max_stability_level(g, n, d);
  if (a < 0 || a > a_cap)
    throw std::domain_error("dims: a must lie in [0, " + std::to_string(a_cap) + "]");

  std::cout << "g=" << g << " n=" << n << " d=" << d << " a=" << a << "\n";
  std::cout << "eps: " << cohsys::epsilon_correction(g, n, d) << "\n";
  std::cout << "a_max: " << a_cap << "\n";
  std::cout << "k0: " << sys.k0() << "\n";
  std::cout << "rho(k0): " << cohsys::brill_noether_number(g, n, d, std::max(sys.k0(), 0LL))
            << "\n";
  if (k)
    std::cout << "rho(k=" << *k << "): " << cohsys::brill_noether_number(g, n, d, *k)
              << "\n";
  std::cout << "s_delta: " << cohsys::min_segre_gap(g, n, d, a) << "\n";
  std::cout << "unstable_locus_dim: " << cohsys::unstable_locus_dim(g, n, d, a)
            << "\n";
  std::cout << "strata (m, s_max, cap, stratum_dim):\n";
  for (long long m = 1; m <= n - 1; ++m) {
    long long s = cohsys::max_segre_value(n, d, a, m);
    cohsys::SegreStratum row{m, s, cohsys::segre_stratum_dim(g, n, d, m, s)};
    long long cap = m * (n - m) * (g - 1);
    std::cout << row.m << " " << row.s << " " << cap << " "
              << (row.dim ? std::to_string(*row.dim) : std::string("empty"))
              << "\n";
  }
  return 0;
}

int run_scan(const cohsys::ScanConfig& cfg) {
  cohsys::RegionMap map = cohsys::scan_region(cfg);
  std::string bytes = cfg.format == cohsys::ScanConfig::Format::Csv
                          ? cohsys::render_csv(map)
                          : cohsys::render_svg(map);
  if (cfg.out_path.empty()) {
    std::cout << bytes;
    if (!std::cout) throw std::runtime_error("scan: write to stdout failed");
  } else {
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("scan: cannot open " + cfg.out_path);
    out << bytes;
    if (!out) throw std::runtime_error("scan: write to " + cfg.out_path + " failed");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact non-emptiness criteria for moduli of coherent systems"};
  app.require_subcommand(1);

  long long g = 0, n = 0, d = 0, k = 0, a = 0;

  auto* check = app.add_subcommand("check", "classify a single type (g, n, d, k)");
  check->add_option("--g", g, "genus")->required();
  check->add_option("--n", n, "rank")->required();
  check->add_option("--d", d, "degree")->required();
  check->add_option("--k", k, "section count")->required();

  auto* walls = app.add_subcommand("walls", "list candidate stability walls");
  walls->add_option("--g", g, "genus")->required();
  walls->add_option("--n", n, "rank")->required();
  walls->add_option("--d", d, "degree")->required();
  walls->add_option("--k", k, "section count")->required();

  long long dims_k = 0;
  auto* dims = app.add_subcommand("dims", "dimension report at stability level a");
  dims->add_option("--g", g, "genus")->required();
  dims->add_option("--n", n, "rank")->required();
  dims->add_option("--d", d, "degree")->required();
  dims->add_option("--a", a, "stability level")->required();
  auto* dims_k_opt = dims->add_option("--k", dims_k, "section count for the expected dimension");

  cohsys::ScanConfig cfg;
  std::string format = "csv";
  auto* scan = app.add_subcommand("scan", "sweep a (d, k) rectangle");
  scan->add_option("--g", cfg.g, "genus")->required();
  scan->add_option("--n", cfg.n, "rank")->required();
  scan->add_option("--d-min", cfg.d_min, "lowest degree")->required();
  scan->add_option("--d-max", cfg.d_max, "highest degree")->required();
  scan->add_option("--k-min", cfg.k_min, "lowest section count")->required();
  scan->add_option("--k-max", cfg.k_max, "highest section count")->required();
  scan->add_option("--format", format, "csv or svg")
      ->check(CLI::IsMember({"csv", "svg"}));
  scan->add_option("--out", cfg.out_path, "output path (default stdout)");
  scan->add_option("--threads", cfg.threads, "worker threads (0 = auto)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << std::flush;
    return 1;
  }

  try {
    if (check->parsed()) return run_check(g, n, d, k);
    if (walls->parsed()) return run_walls(g, n, d, k);
    if (dims->parsed())
      return run_dims(g, n, d, a,
                      *dims_k_opt ? std::optional<long long>(dims_k) : std::nullopt);
    if (scan->parsed()) {
      cfg.format = format == "svg" ? cohsys::ScanConfig::Format::Svg
                                   : cohsys::ScanConfig::Format::Csv;
      return run_scan(cfg);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
