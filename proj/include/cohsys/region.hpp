#pragma once

#include <algorithm>
#include <ctime>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "cohsys/criteria.hpp"

namespace cohsys {

inline constexpr const char* kEngineVersion = "cohsys 0.1.0";

// Grid sweep request over an inclusive (d, k) rectangle at fixed (g, n).
struct ScanConfig {
  long long g = 2;
  long long n = 1;
  long long d_min = 1;
  long long d_max = 1;
  long long k_min = 0;
  long long k_max = 0;
  enum class Format { Csv, Svg } format = Format::Csv;
  std::string out_path;  // empty writes to stdout
  unsigned threads = 0;  // 0 picks the hardware concurrency

  void validate() const {
    if (g < 2) throw std::domain_error("scan: genus must be >= 2");
    if (n < 1) throw std::domain_error("scan: rank must be >= 1");
    if (d_min < 1) throw std::domain_error("scan: d-min must be >= 1");
    if (d_min > d_max) throw std::domain_error("scan: d-min must not exceed d-max");
    if (k_min < 0) throw std::domain_error("scan: k-min must be >= 0");
    if (k_min > k_max) throw std::domain_error("scan: k-min must not exceed k-max");
  }
};

struct RegionCell {
  Outcome outcome = Outcome::Unknown;
  std::optional<CriterionId> criterion;  // set for guaranteed cells
  std::optional<long long> witness_a;
};

// Verdict grid over a (d, k) rectangle. Cells are stored d-major. The
// scan timestamp is informational only; renderers never emit it, so
// rendered bytes are a pure function of the grid.
struct RegionMap {
  long long g = 0;
  long long n = 0;
  long long d_min = 0;
  long long d_max = 0;
  long long k_min = 0;
  long long k_max = 0;
  std::vector<RegionCell> cells;
  std::string engine_version;
  std::string scanned_at;

  long long d_count() const { return d_max - d_min + 1; }
  long long k_count() const { return k_max - k_min + 1; }

  const RegionCell& at(long long d, long long k) const {
    return cells[static_cast<size_t>((d - d_min) * k_count() + (k - k_min))];
  }
};

// One verdict per cell, evaluated independently. Work is split into
// contiguous index chunks, one thread per chunk, each writing only its
// own slots; the merged result does not depend on the thread count.
inline RegionMap scan_region(const ScanConfig& cfg) {
  cfg.validate();
  RegionMap map;
  map.g = cfg.g;
  map.n = cfg.n;
  map.d_min = cfg.d_min;
  map.d_max = cfg.d_max;
  map.k_min = cfg.k_min;
  map.k_max = cfg.k_max;
  map.engine_version = kEngineVersion;

  const long long nk = map.k_count();
  const long long total = map.d_count() * nk;
  map.cells.resize(static_cast<size_t>(total));

  auto eval_range = [&map, &cfg, nk](long long lo, long long hi) {
    for (long long idx = lo; idx < hi; ++idx) {
      long long d = cfg.d_min + idx / nk;
      long long k = cfg.k_min + idx % nk;
      Verdict v = verdict(cfg.g, cfg.n, d, k);
      RegionCell cell;
      cell.outcome = v.outcome;
      if (v.witness) {
        cell.criterion = v.witness->criterion;
        cell.witness_a = v.witness->a;
      }
      map.cells[static_cast<size_t>(idx)] = cell;
    }
  };

  unsigned threads = cfg.threads ? cfg.threads : std::thread::hardware_concurrency();
  if (threads < 1) threads = 1;
  if (static_cast<long long>(threads) > total)
    threads = static_cast<unsigned>(total);

  if (threads <= 1) {
    eval_range(0, total);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) {
      long long lo = total * i / threads;
      long long hi = total * (i + 1) / threads;
      pool.emplace_back(eval_range, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  std::time_t now = std::time(nullptr);
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  map.scanned_at = buf;
  return map;
}

// CSV emitter. Header g,n,d,k,outcome,theorem,a; rows sorted by (d, k)
// ascending; LF line endings; ASCII only. Criterion and witness columns
// are blank unless the cell is guaranteed nonempty.
inline std::string render_csv(const RegionMap& map) {
  std::string out = "g,n,d,k,outcome,theorem,a\n";
  for (long long d = map.d_min; d <= map.d_max; ++d) {
    for (long long k = map.k_min; k <= map.k_max; ++k) {
      const RegionCell& cell = map.at(d, k);
      out += std::to_string(map.g);
      out += ',';
      out += std::to_string(map.n);
      out += ',';
      out += std::to_string(d);
      out += ',';
      out += std::to_string(k);
      out += ',';
      out += to_string(cell.outcome);
      out += ',';
      if (cell.criterion) out += to_string(*cell.criterion);
      out += ',';
      if (cell.witness_a) out += std::to_string(*cell.witness_a);
      out += '\n';
    }
  }
  return out;
}

namespace svg_detail {

inline const char* fill_color(Outcome o) {
  switch (o) {
    case Outcome::GuaranteedNonempty: return "#2e7d32";
    case Outcome::CliffordInfeasible: return "#c62828";
    default: return "#9e9e9e";
  }
}

inline void append_text(std::string& out, long long x, long long y,
                        const std::string& text, const char* anchor) {
  out += "<text x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
         "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"";
  out += anchor;
  out += "\">" + text + "</text>\n";
}

}  // namespace svg_detail

// SVG emitter: one rectangle per cell, d rightwards, k upwards, fixed
// three-entry legend. All geometry is integral, so output bytes are
// deterministic.
inline std::string render_svg(const RegionMap& map) {
  using svg_detail::append_text;
  using svg_detail::fill_color;

  constexpr long long cell = 18;
  constexpr long long left = 56, top = 16, right = 16;
  constexpr long long axis_strip = 40, legend_strip = 3 * 16 + 8;

  const long long grid_w = map.d_count() * cell;
  const long long grid_h = map.k_count() * cell;
  // wide enough for the longest legend label
  const long long width = std::max(left + grid_w + right, 248LL);
  const long long height = top + grid_h + axis_strip + legend_strip;

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" viewBox=\"0 0 " + std::to_string(width) + " " +
         std::to_string(height) + "\">\n";
  out += "<!-- ";
  out += map.engine_version.empty() ? kEngineVersion : map.engine_version;
  out += " region map g=" + std::to_string(map.g) + " n=" + std::to_string(map.n) +
         " d=[" + std::to_string(map.d_min) + "," + std::to_string(map.d_max) +
         "] k=[" + std::to_string(map.k_min) + "," + std::to_string(map.k_max) +
         "] -->\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" fill=\"#ffffff\"/>\n";

  out += "<g id=\"cells\">\n";
  for (long long d = map.d_min; d <= map.d_max; ++d) {
    for (long long k = map.k_min; k <= map.k_max; ++k) {
      const RegionCell& cl = map.at(d, k);
      long long x = left + (d - map.d_min) * cell;
      long long y = top + (map.k_max - k) * cell;
      out += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
             "\" width=\"" + std::to_string(cell) + "\" height=\"" +
             std::to_string(cell) + "\" fill=\"";
      out += fill_color(cl.outcome);
      out += "\" stroke=\"#ffffff\" stroke-width=\"1\">";
      out += "<title>d=" + std::to_string(d) + " k=" + std::to_string(k) + " ";
      out += to_string(cl.outcome);
      if (cl.criterion) {
        out += " ";
        out += to_string(*cl.criterion);
      }
      if (cl.witness_a) out += " a=" + std::to_string(*cl.witness_a);
      out += "</title></rect>\n";
    }
  }
  out += "</g>\n";

  out += "<g id=\"axes\">\n";
  long long axis_y = top + grid_h + 16;
  append_text(out, left, axis_y, std::to_string(map.d_min), "start");
  append_text(out, left + grid_w, axis_y, std::to_string(map.d_max), "end");
  append_text(out, left + grid_w / 2, axis_y, "d", "middle");
  append_text(out, left - 6, top + grid_h, std::to_string(map.k_min), "end");
  append_text(out, left - 6, top + 12, std::to_string(map.k_max), "end");
  append_text(out, left - 6, top + grid_h / 2, "k", "end");
  out += "</g>\n";

  out += "<g id=\"legend\">\n";
  const Outcome legend_order[3] = {Outcome::GuaranteedNonempty, Outcome::Unknown,
                                   Outcome::CliffordInfeasible};
  long long ly = top + grid_h + axis_strip;
  for (Outcome o : legend_order) {
    out += "<rect x=\"" + std::to_string(left) + "\" y=\"" + std::to_string(ly) +
           "\" width=\"12\" height=\"12\" fill=\"";
    out += fill_color(o);
    out += "\"/>\n";
    append_text(out, left + 16, ly + 11, to_string(o), "start");
    ly += 16;
  }
  out += "</g>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace cohsys
