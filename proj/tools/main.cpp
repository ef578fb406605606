// Command-line front end. Everything goes through the public C API in
// rootdense.h; this file owns argument parsing, output and exit codes only.
//
// Exit codes: 0 success, 1 budget exhaustion or verification failure,
// 2 usage error (malformed polynomial, flags, or domain violations).

#include <rootdense.h>

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <thread>

#include <CLI11.hpp>

namespace {

struct StringOut {
  char* s = nullptr;
  ~StringOut() { rd_string_free(s); }
  char** out() { return &s; }
  std::string str() const { return s ? s : ""; }
};

struct PolyHandle {
  rd_poly* f = nullptr;
  ~PolyHandle() { rd_poly_free(f); }
};

struct WitnessHandle {
  rd_witness* w = nullptr;
  ~WitnessHandle() { rd_witness_free(w); }
};

struct ReportHandle {
  rd_report* r = nullptr;
  ~ReportHandle() { rd_report_free(r); }
};

struct ListHandle {
  rd_witness_list* l = nullptr;
  ~ListHandle() { rd_witness_list_free(l); }
};

[[noreturn]] void die(int code, const std::string& message) {
  std::cerr << "rootdense: " << message << "\n";
  std::exit(code);
}

// Maps a failed status to the documented exit codes.
[[noreturn]] void die_status(rd_status status) {
  int code = (status == RD_ERR_EXHAUSTED || status == RD_ERR_VERIFY) ? 1 : 2;
  die(code, std::string(rd_status_name(status)) + ": " + rd_last_error());
}

void check(rd_status status) {
  if (status != RD_OK) die_status(status);
}

rd_poly* parse_poly(const std::string& text) {
  rd_poly* f = nullptr;
  check(rd_poly_parse(text.c_str(), &f));
  return f;
}

unsigned default_workers() {
  unsigned n = std::thread::hardware_concurrency();
  return n ? n : 1;
}

struct CommonFlags {
  std::string poly;
  uint64_t seed = 0;
  uint64_t threshold = 100000;
  uint64_t b_max = 10000;
  uint64_t w_max = 1000000;
  uint64_t x_bound = 100000;
  std::string eps = "0.01";
  std::string format = "table";
  std::string cache;
  unsigned workers = default_workers();
  bool assume_irreducible = false;
};

void print_witness_block(const rd_poly* f, rd_witness* w, const std::string& alpha, const std::string& eps,
                         uint64_t seed, const std::string& log) {
  StringOut text;
  check(rd_witness_to_string(w, text.out()));
  std::cout << "seed: " << seed << "\n";
  if (!alpha.empty()) std::cout << "target: " << alpha << "\n";
  if (!eps.empty()) std::cout << "eps: " << eps << "\n";
  std::cout << "witness: " << text.str() << "\n";
  if (!log.empty()) std::cout << "search: " << log << "\n";
  int ok = 0;
  check(rd_verify_witness(f, w, seed, &ok));
  std::cout << "verified: " << (ok ? "true" : "false") << "\n";
  if (!ok) die(1, "constructed witness failed verification");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"normalized roots of integer polynomials modulo primes: constructive approximation, "
               "root-set enumeration and density reports"};
  app.require_subcommand(1);
  CommonFlags flags;

  // fixed-divisor
  auto* cmd_fd = app.add_subcommand("fixed-divisor", "print r_f, the gcd of all values of f");
  cmd_fd->add_option("--poly", flags.poly, "polynomial (\"1,0,1\" or \"x^2+1\")")->required();

  // irreducible
  uint64_t prime_bound = 200;
  auto* cmd_irr = app.add_subcommand("irreducible", "search a prime q with f irreducible mod q");
  cmd_irr->add_option("--poly", flags.poly)->required();
  cmd_irr->add_option("--prime-bound", prime_bound, "largest prime to try (default 200)");

  // roots
  std::string p_text;
  auto* cmd_roots = app.add_subcommand("roots", "roots of f modulo a prime");
  cmd_roots->add_option("--poly", flags.poly)->required();
  cmd_roots->add_option("--p", p_text, "prime modulus (decimal)")->required();
  cmd_roots->add_option("--threshold", flags.threshold, "exhaustive-search threshold (default 100000)");
  cmd_roots->add_option("--seed", flags.seed);

  // bf-check
  uint64_t frac_a = 0, frac_b = 0;
  auto* cmd_bf = app.add_subcommand("bf-check", "membership of a/b in B_f");
  cmd_bf->add_option("--poly", flags.poly)->required();
  cmd_bf->add_option("--a", frac_a)->required();
  cmd_bf->add_option("--b", frac_b)->required();

  // approximate
  std::string alpha;
  auto* cmd_approx = app.add_subcommand("approximate", "construct a verified root point near alpha");
  cmd_approx->add_option("--poly", flags.poly)->required();
  cmd_approx->add_option("--alpha", alpha, "target in (0,1)")->required();
  cmd_approx->add_option("--eps", flags.eps, "tolerance (default 0.01)");
  cmd_approx->add_option("--b-max", flags.b_max);
  cmd_approx->add_option("--w-max", flags.w_max);
  cmd_approx->add_option("--seed", flags.seed);
  cmd_approx->add_option("--cache", flags.cache, "append the witness to this cache file");
  cmd_approx->add_flag("--assume-irreducible", flags.assume_irreducible,
                       "skip the irreducibility-witness gate");

  // sequence
  uint64_t seq_t = 0, seq_count = 3;
  bool have_t = false;
  auto* cmd_seq = app.add_subcommand("sequence", "witnesses of ascending w toward a/b");
  cmd_seq->add_option("--poly", flags.poly)->required();
  cmd_seq->add_option("--a", frac_a)->required();
  cmd_seq->add_option("--b", frac_b)->required();
  auto* topt = cmd_seq->add_option("--t", seq_t, "shift (default: smallest solution)");
  cmd_seq->add_option("--count", seq_count, "how many witnesses (default 3)");
  cmd_seq->add_option("--w-max", flags.w_max);
  cmd_seq->add_option("--seed", flags.seed);
  cmd_seq->add_option("--cache", flags.cache);

  // scan-enumerative
  auto* cmd_se = app.add_subcommand("scan-enumerative", "interval coverage of A_f up to a modulus bound");
  cmd_se->add_option("--poly", flags.poly)->required();
  cmd_se->add_option("--x", flags.x_bound, "modulus bound (default 100000)");
  cmd_se->add_option("--eps", flags.eps, "interval width, 1/eps integral (default 0.01)");
  cmd_se->add_option("--threshold", flags.threshold);
  cmd_se->add_option("--seed", flags.seed);
  cmd_se->add_option("--workers", flags.workers);
  cmd_se->add_option("--format", flags.format, "table|csv|json-lines");

  // scan-constructive
  auto* cmd_sc = app.add_subcommand("scan-constructive", "constructive coverage, one pipeline run per interval");
  cmd_sc->add_option("--poly", flags.poly)->required();
  cmd_sc->add_option("--eps", flags.eps);
  cmd_sc->add_option("--b-max", flags.b_max);
  cmd_sc->add_option("--w-max", flags.w_max);
  cmd_sc->add_option("--seed", flags.seed);
  cmd_sc->add_option("--workers", flags.workers);
  cmd_sc->add_option("--format", flags.format, "table|csv|json-lines");
  cmd_sc->add_flag("--assume-irreducible", flags.assume_irreducible);

  // stats
  std::string points_out;
  auto* cmd_stats = app.add_subcommand("stats", "summary statistics of A_f up to a modulus bound");
  cmd_stats->add_option("--poly", flags.poly)->required();
  cmd_stats->add_option("--x", flags.x_bound);
  cmd_stats->add_option("--threshold", flags.threshold);
  cmd_stats->add_option("--seed", flags.seed);
  cmd_stats->add_option("--workers", flags.workers);
  cmd_stats->add_option("--points-out", points_out, "also write the points as CSV to this file");

  // brauer
  uint64_t brauer_b = 0, brauer_limit = 0;
  auto* cmd_brauer = app.add_subcommand("brauer", "longest run of consecutive residues/non-residues");
  auto* bopt = cmd_brauer->add_option("--b", brauer_b, "single odd prime");
  auto* lopt = cmd_brauer->add_option("--limit", brauer_limit, "scan primes b = 3 (mod 4) up to limit");

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "re-validate a witness cache file");
  cmd_verify->add_option("--cache", flags.cache)->required();
  cmd_verify->add_option("--seed", flags.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "rootdense: " << e.what() << "\n";
    return 2;
  }

  if (cmd_fd->parsed()) {
    PolyHandle f{parse_poly(flags.poly)};
    StringOut rf;
    check(rd_fixed_divisor(f.f, rf.out()));
    std::cout << rf.str() << "\n";
    return 0;
  }

  if (cmd_irr->parsed()) {
    PolyHandle f{parse_poly(flags.poly)};
    int found = 0;
    uint64_t q = 0;
    check(rd_irreducibility_witness(f.f, prime_bound, &found, &q));
    if (!found) {
      std::cout << "none\n";
      return 1;
    }
    std::cout << q << "\n";
    return 0;
  }

  if (cmd_roots->parsed()) {
    PolyHandle f{parse_poly(flags.poly)};
    StringOut roots;
    check(rd_roots_mod_p(f.f, p_text.c_str(), flags.threshold, flags.seed, roots.out()));
    std::cout << roots.str() << "\n";
    return 0;
  }

  if (cmd_bf->parsed()) {
    PolyHandle f{parse_poly(flags.poly)};
    int member = 0;
    check(rd_bf_contains(f.f, frac_a, frac_b, &member));
    std::cout << (member ? "true" : "false") << "\n";
    return member ? 0 : 1;
  }

  if (cmd_approx->parsed()) {
    PolyHandle f{parse_poly(flags.poly)};
    WitnessHandle w;
    StringOut log;
    rd_status status = rd_approximate(f.f, alpha.c_str(), flags.eps.c_str(), flags.b_max, flags.w_max,
                                      flags.seed, flags.assume_irreducible ? 1 : 0, &w.w, log.out());
    if (status == RD_ERR_EXHAUSTED) {
      std::cout << "seed: " << flags.seed << "\n";
      std::cout << "witness: none\n";
      std::cout << "search: " << log.str() << "\n";
      return 1;
    }
    check(status);
    print_witness_block(f.f, w.w, alpha, flags.eps, flags.seed, log.str());
    if (!flags.cache.empty()) check(rd_cache_append(flags.cache.c_str(), f.f, w.w, flags.seed));
    return 0;
  }

  if (cmd_seq->parsed()) {
    PolyHandle f{parse_poly(flags.poly)};
    have_t = topt->count() > 0;
    if (!have_t) check(rd_solve_t(f.f, frac_a, frac_b, &seq_t));
    ListHandle list;
    check(rd_witness_sequence(f.f, frac_a, frac_b, seq_t, seq_count, flags.w_max, flags.seed, &list.l));
    uint64_t n = rd_witness_list_size(list.l);
    std::cout << "seed: " << flags.seed << "\n";
    std::cout << "t: " << seq_t << "\n";
    std::cout << "count: " << n << "\n";
    for (uint64_t i = 0; i < n; ++i) {
      const rd_witness* w = rd_witness_list_get(list.l, i);
      StringOut text;
      check(rd_witness_to_string(w, text.out()));
      int ok = 0;
      check(rd_verify_witness(f.f, w, flags.seed, &ok));
      if (!ok) die(1, "witness failed verification");
      std::cout << text.str() << "\n";
      if (!flags.cache.empty())
        check(rd_cache_append(flags.cache.c_str(), f.f, const_cast<rd_witness*>(w), flags.seed));
    }
    return n == seq_count ? 0 : 1;
  }

  if (cmd_se->parsed() || cmd_sc->parsed()) {
    PolyHandle f{parse_poly(flags.poly)};
    ReportHandle report;
    if (cmd_se->parsed())
      check(rd_scan_enumerative(f.f, flags.x_bound, flags.eps.c_str(), flags.threshold, flags.seed,
                                flags.workers, &report.r));
    else
      check(rd_scan_constructive(f.f, flags.eps.c_str(), flags.b_max, flags.w_max, flags.seed, flags.workers,
                                 flags.assume_irreducible ? 1 : 0, &report.r));
    StringOut text;
    check(rd_report_render(report.r, flags.format.c_str(), text.out()));
    std::cout << text.str();
    std::cerr << "wall_ms: " << rd_report_wall_ms(report.r) << "\n";
    return rd_report_covered(report.r) == rd_report_intervals(report.r) ? 0 : 1;
  }

  if (cmd_stats->parsed()) {
    PolyHandle f{parse_poly(flags.poly)};
    StringOut text;
    check(rd_af_stats(f.f, flags.x_bound, flags.threshold, flags.seed, flags.workers, text.out()));
    std::cout << text.str();
    if (!points_out.empty()) {
      StringOut csv;
      check(rd_af_points_csv(f.f, flags.x_bound, flags.threshold, flags.seed, flags.workers, csv.out()));
      std::unique_ptr<std::FILE, int (*)(std::FILE*)> fp(std::fopen(points_out.c_str(), "w"), &std::fclose);
      if (!fp || std::fputs(csv.str().c_str(), fp.get()) < 0)
        die(2, "cannot write points file: " + points_out);
    }
    return 0;
  }

  if (cmd_brauer->parsed()) {
    if ((bopt->count() > 0) == (lopt->count() > 0)) die(2, "brauer: pass exactly one of --b or --limit");
    if (bopt->count() > 0) {
      uint64_t run = 0;
      check(rd_brauer_max_run(brauer_b, &run));
      std::cout << run << "\n";
      return 0;
    }
    StringOut csv;
    int within = 0;
    check(rd_brauer_scan(brauer_limit, csv.out(), &within));
    std::cout << csv.str();
    std::cout << "within_bound: " << (within ? "true" : "false") << "\n";
    return within ? 0 : 1;
  }

  if (cmd_verify->parsed()) {
    StringOut summary;
    uint64_t total = 0, ok = 0;
    check(rd_cache_verify(flags.cache.c_str(), flags.seed, summary.out(), &total, &ok));
    std::cout << summary.str();
    return ok == total ? 0 : 1;
  }

  die(2, "no subcommand");
}
