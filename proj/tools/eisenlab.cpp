// eisenlab: command-line front end for the invariant, Hecke, sweep and
// Massey machinery.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "eisenlab/corering/arith.hpp"
#include "eisenlab/error.hpp"
#include "eisenlab/harness/record.hpp"
#include "eisenlab/harness/stats.hpp"
#include "eisenlab/harness/sweep.hpp"
#include "eisenlab/harness/verify.hpp"
#include "eisenlab/invariants/invariants.hpp"
#include "eisenlab/massey/selftest.hpp"

namespace {

using namespace eisenlab;
using namespace eisenlab::harness;

enum Exit { exit_ok = 0, exit_usage = 2, exit_compute = 3, exit_verify = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_prime(u64 n, const char* what) {
  if (!is_prime(n)) throw UsageError(std::string(what) + " = " + std::to_string(n) + " is not prime");
}

void append_record(const std::string& path, const ResultRecord& r) {
  std::ofstream out(path, std::ios::app);
  out << to_json_line(r) << '\n';
  if (!out.flush()) throw IoError("cannot append to " + path);
}

std::string join(const std::vector<Valuation>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s;
}

void print_invariants(const ResultRecord& r) {
  std::cout << "N = " << r.N << ", p = " << r.p << ", t = v_p(N-1) = " << r.t << "\n";
  std::cout << "Merel's number: " << r.merel.value << " (mod " << r.N << ")\n";
  for (const auto& [s, power] : r.merel.is_power) {
    std::cout << "  s=" << s << ": " << (power ? "is" : "is not") << " a " << (s == 1 ? std::string("p") : "p^" + std::to_string(s)) << "-th power"
              << ", sum i log i = " << r.merel.log_sum.at(s) << " mod p^" << s << "\n";
  }
  for (const auto& [s, o] : r.ord_zeta)
    std::cout << "ord_" << s << "(zeta) = " << (o.capped ? ">=" : "") << o.value << "\n";
  if (r.zeta_degenerate) std::cout << "  (zeta vanished in the Sylow-p quotient; ord reported at the cap " << r.ord_cap << ")\n";
  for (const auto& [s, ok] : r.lecouturier)
    std::cout << "Lecouturier identities, s=" << s << ": " << (ok ? "hold" : "FAIL") << "\n";
}

void print_hecke(const ResultRecord& r) {
  const HeckeSummary& h = *r.hecke;
  std::cout << "N = " << r.N << ", p = " << r.p << ", t = " << r.t << "\n";
  if (r.t == 0) {
    std::cout << "p does not divide N-1: no Eisenstein-local cuspidal part, e = 0\n";
    return;
  }
  std::cout << "l = " << h.ell << ", working precision p^" << h.M << ", genus " << h.genus << "\n";
  std::cout << "e = rank T0 = " << h.e << "\n";
  std::cout << "t_1..t_{e+1} = " << join(h.t_seq) << "\n";
  std::cout << "Newton polygon vertices:";
  for (const auto& v : h.np) std::cout << " (" << v.i << "," << v.v << ")";
  std::cout << "\ncomponents:";
  for (const auto& c : h.components) {
    std::cout << " [slope " << c.slope.num;
    if (c.slope.den != 1) std::cout << "/" << c.slope.den;
    std::cout << ", rank " << c.degree << (c.resolved ? "" : ", unresolved") << "]";
  }
  std::cout << "\nv_p(f(0)) = " << h.f0_valuation.to_string() << "\n";
  for (const auto& [l, ok] : h.generator_checks)
    std::cout << "T_" << l << " - " << l << " - 1 generates the Eisenstein ideal: " << (ok ? "yes" : "no") << "\n";
  std::cout << "rank consistency across auxiliary primes: " << (h.rank_consistent ? "ok" : "MISMATCH") << "\n";
  // Read back through the t-sequence; nothing here computes a Galois cohomology class.
  if (h.e >= 2) std::cout << "derived Massey conclusions:\n";
  for (unsigned n = 1; n + 1 <= h.e; ++n)
    std::cout << "  <M>^" << n + 1 << " vanishes mod p^" << h.t_seq.at(n).to_string() << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Eisenstein ideal invariants, Hecke ranks and Massey powers"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  u64 N = 0, p = 0;
  unsigned s_max = 0;
  std::string out;
  bool timing = false;

  auto* inv = app.add_subcommand("invariants", "Merel's number, ord(zeta) and the Lecouturier identities");
  inv->add_option("--N", N, "Level (prime)")->required();
  inv->add_option("--p", p, "Prime p > 3 dividing N-1")->required();
  inv->add_option("--s-max", s_max, "Largest s (default: v_p(N-1))");
  inv->add_option("--out", out, "Append the record to this JSON-lines file");
  inv->add_flag("--timing", timing, "Record wall-clock timings");

  std::optional<u64> ell;
  std::optional<unsigned> precision;
  auto* hecke = app.add_subcommand("hecke", "Rank, t-sequence and Newton polygon of the Eisenstein-local T0");
  hecke->add_option("--N", N, "Level (prime)")->required();
  hecke->add_option("--p", p, "Prime p > 3")->required();
  hecke->add_option("--ell", ell, "Good prime l for T_l - l - 1 (default: smallest)");
  hecke->add_option("--precision", precision, "Working precision exponent M");
  hecke->add_option("--out", out, "Append the record to this JSON-lines file");
  hecke->add_flag("--timing", timing, "Record wall-clock timings");

  u64 max_N = 0;
  bool resume = false;
  unsigned threads = 0;
  auto* sweep = app.add_subcommand("sweep", "All primes N = 1 mod p below a bound, as JSON lines");
  sweep->add_option("--p", p, "Prime p > 3")->required();
  sweep->add_option("--max-N", max_N, "Exclusive bound on N")->required();
  sweep->add_option("--out", out, "Output file")->required();
  sweep->add_flag("--resume", resume, "Skip (N, p) already present in the output");
  sweep->add_option("--threads", threads, "Worker threads (default: all cores)");
  sweep->add_flag("--timing", timing, "Record wall-clock timings");
  bool invariants_only = false;
  sweep->add_flag("--invariants-only", invariants_only, "Skip the Hecke computation");

  std::string in;
  auto* stats = app.add_subcommand("stats", "Rank distribution r(d) against (p-1)/p^d");
  stats->add_option("--in", in, "JSON-lines file")->required()->check(CLI::ExistingFile);
  auto* verify = app.add_subcommand("verify", "Cross-check the proved equivalences on a record file");
  verify->add_option("--in", in, "JSON-lines file")->required()->check(CLI::ExistingFile);

  u64 seed = massey::default_selftest_seed;
  auto* selftest = app.add_subcommand("massey-selftest", "Randomized and exhaustive checks of the Massey engine");
  selftest->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*inv || *hecke) {
      require_prime(N, "N");
      require_prime(p, "p");
      if (p <= 3) throw UsageError("p must be greater than 3");
      ComputeOptions opts;
      opts.timing = timing;
      if (*inv) {
        if (N % p != 1) throw UsageError("p must divide N-1");
        opts.hecke = false;
        const unsigned t = tval(N, p);
        if (s_max > t) throw UsageError("--s-max exceeds v_p(N-1) = " + std::to_string(t));
        opts.s_max = s_max;
      } else {
        opts.ell = ell;
        opts.precision = precision;
      }
      ResultRecord r = compute_record(N, p, opts);
      if (!out.empty()) append_record(out, r);
      if (json) {
        std::cout << to_json_line(r) << "\n";
      } else {
        if (*inv) print_invariants(r);
        else print_hecke(r);
        if (r.timing) std::cout << "time: invariants " << r.timing->invariants_s << " s, hecke " << r.timing->hecke_s << " s\n";
      }
      return exit_ok;
    }
    if (*sweep) {
      require_prime(p, "p");
      if (p <= 3) throw UsageError("p must be greater than 3");
      if (max_N <= p + 1) throw UsageError("--max-N must exceed p + 1");
      SweepOptions so;
      so.p = p;
      so.max_N = max_N;
      so.out = out;
      so.resume = resume;
      so.threads = threads;
      so.compute.timing = timing;
      so.compute.hecke = !invariants_only;
      std::size_t done = 0;
      so.progress = [&](const ResultRecord& r) {
        ++done;
        std::cerr << "\r[" << done << "] N=" << r.N << std::flush;
      };
      SweepSummary s = run_sweep(so);
      if (s.computed) std::cerr << "\n";
      if (json) {
        std::cout << "{\"planned\":" << s.planned << ",\"skipped\":" << s.skipped << ",\"computed\":" << s.computed << "}\n";
      } else {
        std::cout << s.planned << " primes N < " << max_N << " with N = 1 mod " << p << "; " << s.skipped
                  << " already present, " << s.computed << " computed -> " << out << "\n";
      }
      return exit_ok;
    }
    if (*stats) {
      LoadResult lr = load_records(in);
      if (lr.truncated_tail) std::cerr << "warning: ignoring a truncated final line in " << in << "\n";
      for (const auto& r : lr.records)
        if (r.p != lr.records.front().p) throw UsageError("stats: input mixes p = " + std::to_string(lr.records.front().p) + " and " + std::to_string(r.p));
      StatsTable t = compute_stats(lr.records);
      if (json) {
        std::cout << "{\"p\":" << t.p << ",\"x\":" << t.x << ",\"n\":" << t.n << ",\"rows\":[";
        bool first = true;
        for (const auto& [d, row] : t.rows) {
          std::cout << (first ? "" : ",") << "{\"d\":" << d << ",\"count\":" << row.count << ",\"r\":\"" << row.r.str()
                    << "\",\"g\":\"" << row.g.str() << "\"}";
          first = false;
        }
        std::cout << "]}\n";
      } else {
        std::cout << format_stats(t);
      }
      return exit_ok;
    }
    if (*verify) {
      LoadResult lr = load_records(in);
      if (lr.truncated_tail) std::cerr << "warning: ignoring a truncated final line in " << in << "\n";
      VerifyReport rep = verify_records(lr.records);
      if (json) {
        std::cout << "{\"ok\":" << (rep.ok() ? "true" : "false") << ",\"records\":" << rep.records
                  << ",\"skipped\":" << rep.skipped << ",\"checks\":{";
        for (std::size_t i = 0; i < rep.checks.size(); ++i) {
          const auto& c = rep.checks[i];
          std::cout << (i ? "," : "") << "\"" << c.id << "\":{\"checked\":" << c.checked
                    << ",\"violations\":" << c.violations.size() << ",\"fatal\":" << (c.fatal ? "true" : "false") << "}";
        }
        std::cout << "},\"coincidences\":" << rep.coincidences << "}\n";
      } else {
        std::cout << format_verify(rep);
      }
      return rep.ok() ? exit_ok : exit_verify;
    }
    if (*selftest) {
      massey::SelftestReport rep = massey::run_massey_selftest(seed);
      std::cout << "seed " << rep.seed << "\n";
      for (const auto& c : rep.checks) {
        std::cout << (c.ok() ? "PASS " : "FAIL ") << c.name << ": " << c.cases << " cases";
        if (c.failures) std::cout << ", " << c.failures << " failures";
        if (!c.note.empty()) std::cout << " (" << c.note << ")";
        std::cout << "\n";
      }
      std::cout << "<a>^5 non-vanishing on Z/5: " << (rep.power5_nonvanishing ? "confirmed" : "NOT confirmed") << "\n";
      std::cout << "<a>^2 = a u a confirmed for " << rep.cup_identity_count << " cocycles\n";
      return rep.ok() ? exit_ok : exit_verify;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "computation failed: " << e.what() << "\n";
    return exit_compute;
  }
  return exit_usage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
