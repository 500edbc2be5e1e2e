// Acceptance suite: one PASS/FAIL/SKIP line per criterion.
//
//   eisenlab_acceptance [--full <dir>] [--only <k>]
//
// --full runs the hours-long p = 11, 13 sweeps below 10000 (criterion 8),
// resuming from <dir>/p11.jsonl and <dir>/p13.jsonl. Without it that
// criterion is reported as SKIP.
//
// Exit status is non-zero when any criterion fails, except those listed in
// known_failures below, which are printed as FAIL with a note and explained
// in README.md.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "eisenlab/corering/arith.hpp"
#include "eisenlab/corering/dlog.hpp"
#include "eisenlab/corering/newton.hpp"
#include "eisenlab/corering/poly.hpp"
#include "eisenlab/hecke/eisenstein.hpp"
#include "eisenlab/harness/record.hpp"
#include "eisenlab/harness/stats.hpp"
#include "eisenlab/harness/sweep.hpp"
#include "eisenlab/invariants/invariants.hpp"
#include "eisenlab/massey/selftest.hpp"
#include "oracles.hpp"

using namespace eisenlab;
using namespace eisenlab::harness;

namespace {

// Wall-clock budgets, seconds.
constexpr double budget_merel = 1.0;
constexpr double budget_golden_row = 60.0;
constexpr double budget_np_6451 = 15 * 60.0;
constexpr double budget_sweep_2000 = 30 * 60.0;
constexpr double budget_counts = 1.0;
constexpr double budget_npcontrol = 120.0;
constexpr double budget_massey = 300.0;

constexpr unsigned npcontrol_cases = 240;

bool massey_unexpected = false;

// Criterion 10 contains the converse direction of the index-shift relation,
// which fails on explicit examples (see README). It is reported, not hidden.
const std::set<int> known_failures = {10};

struct Outcome {
  enum class Status { pass, fail, skip } status = Status::pass;
  std::string detail;
};

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); }
};

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(s < 10 ? 2 : 0);
  os << std::fixed << s << "s";
  return os.str();
}

std::string key(u64 N, u64 p) { return "(" + std::to_string(N) + "," + std::to_string(p) + ")"; }

// Shared sweep records, N < 2000, computed once per p.
std::map<u64, std::vector<ResultRecord>> small_sweeps;
double small_sweep_seconds = 0;

const std::vector<ResultRecord>& small_sweep(u64 p) {
  auto it = small_sweeps.find(p);
  if (it != small_sweeps.end()) return it->second;
  Timer t;
  std::vector<ResultRecord> rs;
  for (u64 N : sweep_primes(p, 2000)) rs.push_back(compute_record(N, p));
  small_sweep_seconds += t.seconds();
  return small_sweeps.emplace(p, std::move(rs)).first->second;
}

std::vector<unsigned> degrees(const std::vector<Component>& cs) {
  std::vector<unsigned> d;
  for (const auto& c : cs) d.push_back(c.degree);
  std::sort(d.begin(), d.end());
  return d;
}

std::string list(const std::vector<unsigned>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + ")";
}

// Golden Hecke reports are shared between criteria 2, 3 and 11.
std::map<std::pair<u64, u64>, std::pair<ResultRecord, double>> golden_cache;

const std::pair<ResultRecord, double>& golden(u64 N, u64 p) {
  auto it = golden_cache.find({N, p});
  if (it != golden_cache.end()) return it->second;
  Timer t;
  ResultRecord r = compute_record(N, p);
  return golden_cache.emplace(std::pair{N, p}, std::pair{std::move(r), t.seconds()}).first->second;
}

// --- criteria ------------------------------------------------------------------------

Outcome merel_golden() {
  Timer t;
  const u64 m = merel_number(337);
  const bool power = is_power(m, 337, 7);
  const double s = t.seconds();
  Outcome o;
  o.detail = "merel(337) = " + std::to_string(m) + ", 7th power: " + (power ? "yes" : "no") + ", " + fmt_seconds(s);
  if (m != 227 || power || s > budget_merel) o.status = Outcome::Status::fail;
  return o;
}

Outcome rank_ord_golden() {
  struct Row {
    u64 N, p;
    unsigned e;
    int ord1;  // -1: not stated
  };
  const std::vector<Row> rows{{181, 5, 3, 3}, {1571, 5, 3, -1}, {2621, 5, 3, -1}, {3671, 5, 5, 3}, {3001, 5, 6, 7}};
  Outcome o;
  for (const auto& row : rows) {
    const auto& [r, secs] = golden(row.N, row.p);
    const unsigned e = r.hecke->e;
    const auto ord = r.ord1();
    bool ok = e == row.e && secs <= budget_golden_row;
    if (row.ord1 >= 0) ok = ok && ord && !ord->capped && ord->value == static_cast<unsigned>(row.ord1);
    o.detail += key(row.N, row.p) + " e=" + std::to_string(e) + " ord1=" + (ord ? std::to_string(ord->value) : "?") +
                " " + fmt_seconds(secs) + (ok ? "" : " MISMATCH") + "; ";
    if (!ok) o.status = Outcome::Status::fail;
  }
  return o;
}

Outcome newton_components() {
  Outcome o;
  auto check = [&](u64 N, u64 p, unsigned e, std::vector<unsigned> comps, std::vector<Vertex> np, int ord1,
                   double budget) {
    const auto& [r, secs] = golden(N, p);
    const auto& h = *r.hecke;
    bool ok = h.e == e && degrees(h.components) == comps && secs <= budget;
    for (const auto& c : h.components) ok = ok && c.resolved;
    if (!np.empty()) ok = ok && h.np == np;
    if (ord1 >= 0) ok = ok && r.ord1() && r.ord1()->value == static_cast<unsigned>(ord1) && !r.ord1()->capped;
    o.detail += key(N, p) + " e=" + std::to_string(h.e) + " comps=" + list(degrees(h.components)) + " " +
                fmt_seconds(secs) + (ok ? "" : " MISMATCH") + "; ";
    if (!ok) o.status = Outcome::Status::fail;
  };
  check(3001, 5, 6, {1, 2, 3}, {{0, 3}, {1, 2}, {3, 1}, {6, 0}}, -1, budget_golden_row);
  check(751, 5, 2, {1, 1}, {}, -1, budget_golden_row);
  check(5651, 5, 4, {1, 3}, {}, 5, budget_np_6451);
  check(6451, 5, 3, {1, 2}, {}, -1, budget_np_6451);
  return o;
}

Outcome congruence_law() {
  Outcome o;
  const auto& rs = small_sweep(5);
  std::size_t bad = 0;
  for (const auto& r : rs) {
    const bool ok = r.hecke && r.hecke->f0_valuation == Valuation::finite(r.t) && r.hecke->rank_consistent;
    if (!ok) {
      ++bad;
      o.detail += key(r.N, r.p) + " ";
    }
  }
  o.detail = std::to_string(rs.size()) + " records (p=5, N<2000), " + std::to_string(bad) + " violations " +
             o.detail + fmt_seconds(small_sweep_seconds);
  if (bad || rs.empty() || small_sweep_seconds > budget_sweep_2000) o.status = Outcome::Status::fail;
  return o;
}

Outcome equivalence_battery() {
  Outcome o;
  std::size_t checked = 0, bad = 0, lec = 0, lec_bad = 0;
  for (u64 p : {5u, 7u}) {
    for (const auto& r : small_sweep(p)) {
      ++checked;
      const bool big_rank = r.hecke->e >= 2;
      const bool power = r.merel.is_power.at(1);
      const bool ord2 = r.ord1()->value >= 2;
      if (big_rank != power || power != ord2) {
        ++bad;
        o.detail += key(r.N, r.p) + " ";
      }
      for (unsigned s = 1; s <= r.t; ++s) {
        ++lec;
        if (!r.lecouturier.count(s) || !r.lecouturier.at(s)) ++lec_bad;
      }
    }
  }
  o.detail = std::to_string(checked) + " records, " + std::to_string(bad) + " exceptions " + o.detail +
             "; Lecouturier " + std::to_string(lec - lec_bad) + "/" + std::to_string(lec);
  if (bad || lec_bad || checked == 0) o.status = Outcome::Status::fail;
  return o;
}

Outcome rank_two() {
  Outcome o;
  std::size_t checked = 0, rank2 = 0, bad = 0;
  for (u64 p : {5u, 7u, 11u, 13u}) {
    for (const auto& r : small_sweep(p)) {
      ++checked;
      const bool e2 = r.hecke->e == 2;
      const auto ord = *r.ord1();
      const bool o2 = !ord.capped && ord.value == 2;
      rank2 += e2;
      if (e2 != o2) {
        ++bad;
        o.detail += key(r.N, r.p) + " ";
      }
    }
  }
  o.detail = std::to_string(checked) + " records, " + std::to_string(rank2) + " of rank 2, " + std::to_string(bad) +
             " exceptions " + o.detail;
  if (bad || checked == 0) o.status = Outcome::Status::fail;
  return o;
}

Outcome sample_counts() {
  Timer t;
  const std::vector<std::pair<u64, std::size_t>> expected{{5, 306}, {7, 203}, {11, 125}, {13, 99}};
  Outcome o;
  for (auto [p, n] : expected) {
    const std::size_t got = sweep_primes(p, 10000).size();
    o.detail += "p=" + std::to_string(p) + ":" + std::to_string(got) + " ";
    if (got != n) o.status = Outcome::Status::fail;
  }
  const double s = t.seconds();
  o.detail += fmt_seconds(s);
  if (s > budget_counts) o.status = Outcome::Status::fail;
  return o;
}

Outcome full_statistics(const std::string& dir) {
  Outcome o;
  if (dir.empty()) {
    o.status = Outcome::Status::skip;
    o.detail = "opt-in: rerun with --full <dir> (hours)";
    return o;
  }
  // r(d) from the published p = 11 and p = 13 tables.
  const std::map<u64, std::vector<std::string>> published{{11, {"0.912", "0.080", "0.008"}},
                                                          {13, {"0.929", "0.061", "0.010"}}};
  const std::map<u64, std::size_t> published_n{{11, 125}, {13, 99}};
  std::filesystem::create_directories(dir);
  for (const auto& [p, rs] : published) {
    SweepOptions so;
    so.p = p;
    so.max_N = 10000;
    so.out = (std::filesystem::path(dir) / ("p" + std::to_string(p) + ".jsonl")).string();
    so.resume = true;
    run_sweep(so);
    StatsTable t = compute_stats(load_records(so.out).records);
    o.detail += "p=" + std::to_string(p) + " n=" + std::to_string(t.n) + " r=";
    bool ok = t.n == published_n.at(p) && t.rows.size() == rs.size();
    for (const auto& [d, row] : t.rows) {
      o.detail += (d > 1 ? "/" : "") + row.r.str();
      ok = ok && d >= 1 && d <= rs.size() && row.r.str() == rs[d - 1];
    }
    o.detail += ok ? "; " : " (published " + rs[0] + "/" + rs[1] + "/" + rs[2] + "); ";
    if (!ok) o.status = Outcome::Status::fail;
  }
  return o;
}

Outcome npcontrol_oracle() {
  Timer t;
  std::mt19937_64 rng(0x7e57);
  Outcome o;
  unsigned cases = 0, bad = 0;
  while (cases < npcontrol_cases) {
    const u64 p = rng() % 2 ? 5 : 7;
    // Precision at most p^3; the search over eps-expansions is p^{r(deg-1)} at
    // worst, so degree 4 is paired with precision p^2.
    const unsigned M = 1 + static_cast<unsigned>(rng() % 3);
    const unsigned deg = 1 + static_cast<unsigned>(rng() % (M == 3 ? 3 : 4));
    Modulus m(p, M);
    std::vector<i64> g(deg + 1);
    std::vector<u64> gc(deg + 1);
    for (unsigned i = 0; i < deg; ++i) {
      // Bias towards higher valuations so that long flat runs occur.
      u64 c = p * (rng() % (m.value() / p));
      if (rng() % 3 == 0) c = (c * p) % m.value();
      gc[i] = c;
      g[i] = static_cast<i64>(c);
    }
    gc[deg] = 1;
    g[deg] = 1;
    const auto t_lib = t_sequence(PadicPoly(m, gc));
    const auto t_ref = oracle::brute_force_t(g, p, M);
    ++cases;
    bool ok = t_lib.size() == t_ref.size();
    for (std::size_t i = 0; ok && i < t_ref.size(); ++i)
      ok = t_ref[i] == M ? t_lib[i].at_least_value(M) : t_lib[i] == Valuation::finite(t_ref[i]);
    if (!ok) ++bad;
  }
  const double s = t.seconds();
  o.detail = std::to_string(cases) + " random distinguished polynomials (p in {5,7}, deg <= 4, p^M <= p^3), " +
             std::to_string(bad) + " mismatches, " + fmt_seconds(s);
  if (bad || s > budget_npcontrol) o.status = Outcome::Status::fail;
  return o;
}

Outcome massey_suite() {
  Timer t;
  const auto rep = massey::run_massey_selftest();
  const double s = t.seconds();
  Outcome o;
  std::size_t passed = 0;
  std::string failing;
  for (const auto& c : rep.checks) {
    if (c.ok())
      ++passed;
    else
      failing += " [" + c.name + ": " + std::to_string(c.failures) + "/" + std::to_string(c.cases) + "]";
  }
  const auto* full = rep.find("full H^2 vanishing <=> all four coordinate relations (>= 100 systems)");
  o.detail = std::to_string(passed) + "/" + std::to_string(rep.checks.size()) + " checks pass, " + fmt_seconds(s);
  if (full) o.detail += ", coordinate lemma on " + std::to_string(full->cases) + " systems";
  if (!failing.empty()) o.detail += "; failing:" + failing;
  if (!rep.ok() || !rep.power5_nonvanishing || s > budget_massey) o.status = Outcome::Status::fail;
  // Only the converse of the index-shift relation is an accepted failure.
  for (const auto& c : rep.checks)
    if (!c.ok() && c.name.rfind("index shift (2) <=", 0) != 0) massey_unexpected = true;
  if (!rep.power5_nonvanishing || s > budget_massey) massey_unexpected = true;
  return o;
}

Outcome ell_independence() {
  const std::vector<std::pair<u64, u64>> goldens{{181, 5},  {751, 5},  {1571, 5}, {2621, 5},
                                                 {3001, 5}, {3671, 5}, {5651, 5}, {6451, 5}};
  Outcome o;
  for (auto [N, p] : goldens) {
    const auto gp = good_primes(N, p, 2);
    EisensteinOptions a, b;
    a.ell = gp[0];
    b.ell = gp[1];
    HeckeContext ctx(N, p, working_precision(N, p));
    auto ra = eisenstein_local_factor(ctx, a);
    auto rb = eisenstein_local_factor(ctx, b);
    const bool same = ra.e == rb.e && ra.t_seq == rb.t_seq && ra.np == rb.np && ra.components == rb.components;
    o.detail += key(N, p) + " l=" + std::to_string(gp[0]) + "," + std::to_string(gp[1]) + (same ? " ok; " : " DIFFER; ");
    if (!same) o.status = Outcome::Status::fail;
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::string full_dir;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--full" && i + 1 < argc)
      full_dir = argv[++i];
    else if (a == "--only" && i + 1 < argc)
      only = std::atoi(argv[++i]);
    else {
      std::cerr << "usage: " << argv[0] << " [--full <dir>] [--only <k>]\n";
      return 2;
    }
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Merel golden value", merel_golden},
      {"rank/ord golden rows", rank_ord_golden},
      {"Newton polygon and components", newton_components},
      {"congruence-number law", congruence_law},
      {"equivalence battery", equivalence_battery},
      {"rank-2 spot check", rank_two},
      {"sample-space counts", sample_counts},
      {"full-sweep statistics", [&] { return full_statistics(full_dir); }},
      {"Newton-polygon control oracle", npcontrol_oracle},
      {"Massey suite", massey_suite},
      {"l-independence", ell_independence},
  };

  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (only && id != only) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.status = Outcome::Status::fail;
      o.detail = std::string("exception: ") + e.what();
    }
    const char* tag = o.status == Outcome::Status::pass ? "PASS" : o.status == Outcome::Status::skip ? "SKIP" : "FAIL";
    std::cout << "[" << tag << "] " << id << ". " << criteria[i].first << ": " << o.detail;
    if (o.status == Outcome::Status::fail) {
      if (known_failures.count(id) && !(id == 10 && massey_unexpected))
        std::cout << " (known failure, see README)";
      else
        ++unexpected;
    }
    std::cout << std::endl;
  }
  return unexpected ? 1 : 0;
}
