#include "density.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "numio.hpp"

namespace rootdense {

namespace {

using ordered_json = nlohmann::ordered_json;

// eps must tile (0,1): 1/eps a positive integer. Returns the interval count.
uint64_t interval_count(const mpq_class& eps) {
  if (eps <= 0 || eps > 1) throw std::domain_error("interval width must lie in (0, 1]");
  if (eps.get_num() != 1)
    throw std::domain_error("1/eps must be an integer so the intervals tile (0,1)");
  if (!eps.get_den().fits_ulong_p()) throw std::domain_error("interval width too small");
  return mpz_get_ui(eps.get_den().get_mpz_t());
}

double elapsed_ms(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

mpq_class star_discrepancy(std::vector<mpq_class> points) {
  for (const auto& u : points)
    if (u <= 0 || u >= 1) throw std::domain_error("star_discrepancy: points must lie in (0,1)");
  if (points.empty()) return 1;

  std::sort(points.begin(), points.end());
  const unsigned long n = points.size();
  mpq_class best = 0;
  for (unsigned long i = 1; i <= n; ++i) {
    const mpq_class& u = points[i - 1];
    mpq_class up = mpq_class(i, n) - u;
    mpq_class down = u - mpq_class(i - 1, n);
    up.canonicalize();
    down.canonicalize();
    if (up > best) best = up;
    if (down > best) best = down;
  }
  return best;
}

DensityReport cover_report_enumerative(const IntPoly& f, uint64_t x_bound, const mpq_class& eps,
                                       const AfOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  const uint64_t k = interval_count(eps);

  DensityReport report;
  report.poly = f.to_string();
  report.mode = "enumerative";
  report.eps = eps;
  report.x_bound = x_bound;
  report.seed = opt.seed;
  report.intervals.resize(k);
  for (uint64_t j = 0; j < k; ++j) {
    report.intervals[j].lo = mpq_class(j, k);
    report.intervals[j].hi = mpq_class(j + 1, k);
    report.intervals[j].lo.canonicalize();
    report.intervals[j].hi.canonicalize();
  }

  const auto points = a_f_points(f, x_bound, opt);
  std::vector<mpq_class> values;
  values.reserve(points.size());
  for (const auto& pt : points) {
    values.push_back(pt.value());
    // bucket index floor(value * k); value in (0,1) keeps it in range
    mpz_class idx = (values.back().get_num() * k) / values.back().get_den();
    ++report.intervals[mpz_get_ui(idx.get_mpz_t())].count;
    if (pt.p > report.max_p) report.max_p = static_cast<unsigned long>(pt.p);
  }
  for (auto& row : report.intervals) {
    row.covered = row.count > 0;
    if (row.covered) ++report.covered_count;
  }
  report.point_count = points.size();
  report.d_star = star_discrepancy(values);
  report.wall_ms = elapsed_ms(start);
  return report;
}

DensityReport cover_report_constructive(const IntPoly& f, const mpq_class& eps, const ScanOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  const uint64_t k = interval_count(eps);

  DensityReport report;
  report.poly = f.to_string();
  report.mode = "constructive";
  report.eps = eps;
  report.budget = opt.budget;
  report.seed = opt.seed;
  report.intervals.resize(k);

  const mpq_class half_eps = eps / 2;
  auto run_interval = [&](uint64_t j) {
    IntervalRow& row = report.intervals[j];
    row.lo = mpq_class(j, k);
    row.hi = mpq_class(j + 1, k);
    row.lo.canonicalize();
    row.hi.canonicalize();
    mpq_class mid = mpq_class(2 * j + 1, 2 * k);
    mid.canonicalize();
    ApproxResult res = approximate(f, mid, half_eps, opt.budget, derive_seed(opt.seed, j));
    row.status = res.log.stage;
    row.w_tried = res.log.w_tried;
    row.prime_tests = res.log.prime_tests;
    if (res.witness) {
      row.witness = std::move(res.witness);
      row.covered = true;
      row.count = 1;
    }
  };

  const unsigned workers = std::max(1u, opt.workers);
  if (workers == 1 || k <= 1) {
    for (uint64_t j = 0; j < k; ++j) run_interval(j);
  } else {
    std::vector<std::thread> pool;
    for (unsigned wk = 0; wk < workers; ++wk)
      pool.emplace_back([&, wk] {
        for (uint64_t j = wk; j < k; j += workers) run_interval(j);
      });
    for (auto& th : pool) th.join();
  }

  std::vector<mpq_class> values;
  for (const auto& row : report.intervals) {
    if (!row.witness) continue;
    ++report.covered_count;
    values.push_back(row.witness->value());
    if (row.witness->p > report.max_p) report.max_p = row.witness->p;
  }
  report.point_count = values.size();
  report.d_star = star_discrepancy(values);
  report.wall_ms = elapsed_ms(start);
  return report;
}

ReportFormat parse_report_format(const std::string& name) {
  if (name == "table") return ReportFormat::table;
  if (name == "csv") return ReportFormat::csv;
  if (name == "json-lines") return ReportFormat::json_lines;
  throw std::invalid_argument("unknown format \"" + name + "\" (expected table, csv or json-lines)");
}

namespace {

std::string witness_csv_fields(const IntervalRow& row) {
  if (!row.witness) return ",,,,,,,";
  const Witness& w = *row.witness;
  return std::to_string(w.a) + "," + std::to_string(w.b) + "," + std::to_string(w.t) + "," +
         std::to_string(w.w) + "," + w.p.get_str() + "," + w.z.get_str() + "," + rational_string(w.gap) +
         "," + decimal_string(w.value());
}

std::string render_table(const DensityReport& r) {
  std::string out;
  out += "poly: " + r.poly + "\n";
  out += "mode: " + r.mode + "\n";
  if (r.mode == "enumerative")
    out += "x_bound: " + std::to_string(r.x_bound) + "\n";
  else
    out += "b_max: " + std::to_string(r.budget.b_max) + "\nw_max: " + std::to_string(r.budget.w_max) + "\n";
  out += "eps: " + rational_string(r.eps) + "\n";
  out += "seed: " + std::to_string(r.seed) + "\n";
  out += "intervals: " + std::to_string(r.intervals.size()) + "\n";
  out += "covered: " + std::to_string(r.covered_count) + "/" + std::to_string(r.intervals.size()) + "\n";
  out += "points: " + std::to_string(r.point_count) + "\n";
  out += "max_p: " + r.max_p.get_str() + "\n";
  out += "d_star: " + decimal_string(r.d_star) + "\n";
  out += "d_star_exact: " + rational_string(r.d_star) + "\n";
  for (size_t j = 0; j < r.intervals.size(); ++j) {
    const IntervalRow& row = r.intervals[j];
    out += "[" + std::to_string(j) + "] " + rational_string(row.lo) + " .. " + rational_string(row.hi);
    if (r.mode == "enumerative") {
      out += " count=" + std::to_string(row.count);
      out += row.covered ? " covered" : " empty";
    } else {
      out += " " + row.status;
      if (row.witness) out += " " + row.witness->to_string();
      out += " w_tried=" + std::to_string(row.w_tried) + " prime_tests=" + std::to_string(row.prime_tests);
    }
    out += "\n";
  }
  return out;
}

std::string render_csv(const DensityReport& r) {
  std::string out;
  if (r.mode == "enumerative") {
    out = "index,lo,hi,count,covered\n";
    for (size_t j = 0; j < r.intervals.size(); ++j) {
      const IntervalRow& row = r.intervals[j];
      out += std::to_string(j) + "," + rational_string(row.lo) + "," + rational_string(row.hi) + "," +
             std::to_string(row.count) + "," + (row.covered ? "1" : "0") + "\n";
    }
  } else {
    out = "index,lo,hi,status,a,b,t,w,p,z,gap,value,w_tried,prime_tests\n";
    for (size_t j = 0; j < r.intervals.size(); ++j) {
      const IntervalRow& row = r.intervals[j];
      out += std::to_string(j) + "," + rational_string(row.lo) + "," + rational_string(row.hi) + "," +
             row.status + "," + witness_csv_fields(row) + "," + std::to_string(row.w_tried) + "," +
             std::to_string(row.prime_tests) + "\n";
    }
  }
  return out;
}

std::string render_json_lines(const DensityReport& r) {
  std::string out;
  ordered_json meta;
  meta["type"] = "meta";
  meta["poly"] = r.poly;
  meta["mode"] = r.mode;
  if (r.mode == "enumerative") {
    meta["x_bound"] = r.x_bound;
  } else {
    meta["b_max"] = r.budget.b_max;
    meta["w_max"] = r.budget.w_max;
  }
  meta["eps"] = rational_string(r.eps);
  meta["seed"] = r.seed;
  meta["intervals"] = r.intervals.size();
  meta["covered"] = r.covered_count;
  meta["points"] = r.point_count;
  meta["max_p"] = r.max_p.get_str();
  meta["d_star"] = rational_string(r.d_star);
  out += meta.dump() + "\n";

  for (size_t j = 0; j < r.intervals.size(); ++j) {
    const IntervalRow& row = r.intervals[j];
    ordered_json o;
    o["type"] = "interval";
    o["index"] = j;
    o["lo"] = rational_string(row.lo);
    o["hi"] = rational_string(row.hi);
    if (r.mode == "enumerative") {
      o["count"] = row.count;
      o["covered"] = row.covered;
    } else {
      o["status"] = row.status;
      if (row.witness) {
        const Witness& w = *row.witness;
        o["a"] = w.a;
        o["b"] = w.b;
        o["t"] = w.t;
        o["w"] = w.w;
        o["p"] = w.p.get_str();
        o["z"] = w.z.get_str();
        o["gap"] = rational_string(w.gap);
        o["value"] = decimal_string(w.value());
      }
      o["w_tried"] = row.w_tried;
      o["prime_tests"] = row.prime_tests;
    }
    out += o.dump() + "\n";
  }
  return out;
}

}  // namespace

std::string render_report(const DensityReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::table:
      return render_table(report);
    case ReportFormat::csv:
      return render_csv(report);
    case ReportFormat::json_lines:
      return render_json_lines(report);
  }
  throw std::logic_error("unreachable");
}

}  // namespace rootdense
