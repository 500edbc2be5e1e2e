#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "eisenlab/corering/arith.hpp"
#include "eisenlab/error.hpp"
#include "eisenlab/harness/record.hpp"
#include "eisenlab/harness/stats.hpp"
#include "eisenlab/harness/sweep.hpp"
#include "eisenlab/harness/verify.hpp"

using namespace eisenlab;
using namespace eisenlab::harness;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("eisenlab_test_" + name)).string();
}

std::set<std::string> lines_of(const std::string& path) {
  std::ifstream in(path);
  std::set<std::string> out;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.insert(line);
  return out;
}

ResultRecord fake(u64 N, u64 p, unsigned e) {
  ResultRecord r;
  r.N = N;
  r.p = p;
  r.t = 1;
  HeckeSummary h;
  h.e = e;
  r.hecke = h;
  return r;
}

}  // namespace

TEST_CASE("record round trip") {
  ResultRecord r = compute_record(181, 5);
  REQUIRE(r.hecke);
  CHECK(r.hecke->e == 3);
  CHECK(parse_json_line(to_json_line(r)) == r);

  ResultRecord inv = compute_record(337, 7, ComputeOptions{0, false, {}, {}, false});
  CHECK(inv.invariants_only());
  CHECK(inv.merel.value == 227);
  CHECK(to_json_line(inv).find("\"invariants-only\"") != std::string::npos);
  CHECK(parse_json_line(to_json_line(inv)) == inv);

  // Capped and infinite valuations survive without sentinel numbers.
  ResultRecord odd = r;
  odd.hecke->t_seq = {Valuation::at_least(6), Valuation::infinite(), Valuation::finite(0)};
  odd.ord_zeta[1] = OrdValue{10, true};
  const std::string line = to_json_line(odd);
  CHECK(line.find("{\"geq\":6}") != std::string::npos);
  CHECK(line.find("\"inf\"") != std::string::npos);
  CHECK(parse_json_line(line) == odd);

  ResultRecord timed = compute_record(11, 5, ComputeOptions{0, true, {}, {}, true});
  REQUIRE(timed.timing);
  CHECK(parse_json_line(to_json_line(timed)) == timed);
}

TEST_CASE("malformed records") {
  CHECK_THROWS_AS(parse_json_line("{\"N\": 11"), DomainError);
  CHECK_THROWS_AS(parse_json_line("{\"schema_version\": 99}"), DomainError);
  CHECK_THROWS_AS(parse_json_line("{\"schema_version\": 1, \"N\": 11}"), DomainError);
}

TEST_CASE("trivial record when p does not divide N - 1") {
  ResultRecord r = compute_record(13, 5);
  CHECK(r.t == 0);
  REQUIRE(r.hecke);
  CHECK(r.hecke->e == 0);
  CHECK(r.ord_zeta.empty());
  CHECK(parse_json_line(to_json_line(r)) == r);
}

TEST_CASE("sweep primes") {
  auto n5 = sweep_primes(5, 200);
  CHECK(n5.front() == 11);
  CHECK(n5[1] == 31);
  CHECK(n5[2] == 41);
  for (u64 N : n5) CHECK((is_prime(N) && N % 5 == 1 && N < 200));
  CHECK(sweep_primes(5, 10000).size() == 306);
  CHECK(sweep_primes(7, 10000).size() == 203);
  CHECK(sweep_primes(11, 10000).size() == 125);
  CHECK(sweep_primes(13, 10000).size() == 99);
  // Exclusive bound.
  CHECK(sweep_primes(5, 11).empty());
  CHECK(sweep_primes(5, 12).size() == 1);
}

TEST_CASE("resume yields the same record set as a fresh run") {
  const std::string fresh = temp_path("fresh.jsonl"), resumed = temp_path("resumed.jsonl");
  SweepOptions o;
  o.p = 7;
  o.max_N = 400;
  o.threads = 2;
  o.out = fresh;
  auto s = run_sweep(o);
  CHECK(s.computed == s.planned);

  // A partial file: the first two records plus a line cut mid-write.
  {
    std::ifstream in(fresh);
    std::ofstream out(resumed);
    std::string line;
    for (int i = 0; i < 2 && std::getline(in, line); ++i) out << line << '\n';
    std::getline(in, line);
    out << line.substr(0, line.size() / 2);
  }
  auto partial = load_records(resumed);
  CHECK(partial.truncated_tail);
  CHECK(partial.records.size() == 2);

  o.out = resumed;
  o.resume = true;
  auto s2 = run_sweep(o);
  CHECK(s2.skipped == 2);
  CHECK(s2.computed == s.planned - 2);
  CHECK(lines_of(fresh) == lines_of(resumed));

  // Resuming a complete file computes nothing.
  auto s3 = run_sweep(o);
  CHECK(s3.computed == 0);

  // Statistics recomputed from disk equal the in-memory fold.
  auto loaded = load_records(fresh).records;
  std::vector<ResultRecord> direct;
  for (u64 N : sweep_primes(7, 400)) direct.push_back(compute_record(N, 7));
  auto a = compute_stats(loaded), b = compute_stats(direct);
  CHECK(a.n == b.n);
  for (const auto& [d, row] : a.rows) CHECK(row.count == b.rows.at(d).count);
  std::filesystem::remove(fresh);
  std::filesystem::remove(resumed);
}

TEST_CASE("a malformed line before the end is an error") {
  std::istringstream in(to_json_line(fake(11, 5, 1)) + "\n{garbage\n" + to_json_line(fake(31, 5, 1)) + "\n");
  CHECK_THROWS_AS(load_records(in), DomainError);
}

TEST_CASE("half-up rounding to three decimals") {
  CHECK(round_thousandths(1, 8).str() == "0.125");
  CHECK(round_thousandths(1, 16).str() == "0.063");  // 0.0625 rounds up
  CHECK(round_thousandths(1, 3).str() == "0.333");
  CHECK(round_thousandths(2, 3).str() == "0.667");
  CHECK(round_thousandths(114, 125).str() == "0.912");
  CHECK(round_thousandths(5, 5).str() == "1.000");
  CHECK(round_thousandths(0, 7).str() == "0.000");
  CHECK(heuristic_share(5, 1).str() == "0.800");
  CHECK(heuristic_share(5, 2).str() == "0.160");
  CHECK(heuristic_share(11, 1).str() == "0.909");
  CHECK(heuristic_share(11, 2).str() == "0.083");
  CHECK(heuristic_share(13, 5).str() == "0.000");
}

TEST_CASE("stats") {
  auto one = compute_stats({fake(11, 5, 1)});
  CHECK(one.n == 1);
  CHECK(one.rows.at(1).r.str() == "1.000");

  auto t = compute_stats({fake(11, 5, 1), fake(31, 5, 1), fake(41, 5, 2), fake(61, 5, 1)});
  CHECK(t.x == 61);
  CHECK(t.rows.at(1).r.str() == "0.750");
  CHECK(t.rows.at(2).r.str() == "0.250");
  CHECK(t.rows.at(2).g.str() == "0.160");

  CHECK_THROWS_AS(compute_stats({fake(11, 5, 1), fake(29, 7, 1)}), DomainError);
  CHECK_THROWS_AS(compute_stats({}), DomainError);
  ResultRecord inv = fake(11, 5, 1);
  inv.hecke.reset();
  CHECK_THROWS_AS(compute_stats({inv}), DomainError);
}

TEST_CASE("verify flags rank/ord disagreements") {
  auto make = [](u64 N, unsigned e, unsigned ord, bool power) {
    ResultRecord r = fake(N, 5, e);
    r.ord_zeta[1] = OrdValue{ord, false};
    r.merel.is_power[1] = power;
    r.lecouturier[1] = true;
    r.hecke->f0_valuation = Valuation::finite(1);
    return r;
  };
  auto good = verify_records({make(181, 3, 3, true), make(11, 1, 1, false), make(3671, 5, 3, true)});
  CHECK(good.ok());
  CHECK(good.coincidences == 1);
  REQUIRE(good.exceptions.size() == 1);
  CHECK(good.exceptions[0] == std::pair<u64, u64>{3671, 5});
  CHECK(good.unexpected_exceptions.empty());

  auto bad = verify_records({make(11, 1, 2, false)});
  CHECK_FALSE(bad.ok());
  auto wrong_merel = verify_records({make(41, 2, 2, false)});
  CHECK_FALSE(wrong_merel.ok());

  // Rank-2 conjecture violations are reported but not fatal.
  auto conj = verify_records({make(41, 2, 3, true)});
  CHECK(conj.ok());
  CHECK_FALSE(conj.checks[2].ok());
}
