#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rootsmodp.hpp"
#include "witness.hpp"

namespace rootdense {

// Exact star discrepancy D*_N of points in (0,1): with the points sorted,
// max over i of max(i/N - u_i, u_i - (i-1)/N). Empty input yields 1 by
// convention. Points outside (0,1) are rejected.
mpq_class star_discrepancy(std::vector<mpq_class> points);

struct IntervalRow {
  mpq_class lo, hi;
  uint64_t count = 0;
  bool covered = false;
  // constructive scans only:
  std::string status;  // "ok", "no_fraction" or "no_witness"
  std::optional<Witness> witness;
  uint64_t w_tried = 0;
  uint64_t prime_tests = 0;
};

// Interval-coverage summary over (0,1). Wall time is diagnostic only and is
// never part of the deterministic serializations.
struct DensityReport {
  std::string poly;
  std::string mode;  // "enumerative" | "constructive"
  mpq_class eps;
  uint64_t x_bound = 0;  // enumerative
  Budget budget;         // constructive
  uint64_t seed = 0;
  std::vector<IntervalRow> intervals;
  uint64_t covered_count = 0;
  uint64_t point_count = 0;
  mpq_class d_star;
  mpz_class max_p;
  double wall_ms = 0;
};

// Buckets a_f_points(f, X) into 1/eps half-open intervals; 1/eps must be an
// integer >= 1. Reports per-interval counts, coverage and D* of all points.
DensityReport cover_report_enumerative(const IntPoly& f, uint64_t x_bound, const mpq_class& eps,
                                       const AfOptions& opt = {});

struct ScanOptions {
  Budget budget;
  uint64_t seed = 0;
  unsigned workers = 1;
};

// Runs the constructive pipeline once per interval midpoint with tolerance
// eps/2, so each success lands a verified root point inside its interval.
// Failures are recorded per interval, never raised.
DensityReport cover_report_constructive(const IntPoly& f, const mpq_class& eps, const ScanOptions& opt = {});

enum class ReportFormat { table, csv, json_lines };
ReportFormat parse_report_format(const std::string& name);  // "table" | "csv" | "json-lines"
std::string render_report(const DensityReport& report, ReportFormat format);

}  // namespace rootdense
