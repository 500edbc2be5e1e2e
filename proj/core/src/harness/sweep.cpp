#include "eisenlab/harness/sweep.hpp"

#include <atomic>
#include <condition_variable>
#include <deque>
#include <exception>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>

#include "eisenlab/corering/arith.hpp"
#include "eisenlab/error.hpp"

namespace eisenlab::harness {

std::vector<u64> sweep_primes(u64 p, u64 max_N) {
  if (p < 2) throw DomainError("sweep_primes: p must be at least 2");
  std::vector<u64> out;
  for (u64 N = p + 1; N < max_N; N += p)
    if (is_prime(N)) out.push_back(N);
  return out;
}

LoadResult load_records(std::istream& in) {
  LoadResult res;
  std::string line, pending_error;
  std::size_t lineno = 0, bad_line = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (!pending_error.empty())
      throw DomainError("line " + std::to_string(bad_line) + ": " + pending_error);
    try {
      res.records.push_back(parse_json_line(line));
    } catch (const DomainError& e) {
      // Only tolerated if nothing follows it.
      pending_error = e.what();
      bad_line = lineno;
    }
  }
  res.truncated_tail = !pending_error.empty();
  return res;
}

LoadResult load_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return load_records(in);
}

namespace {

// Rewrites the file without a truncated final line so appends start clean.
void rewrite(const std::string& path, const std::vector<ResultRecord>& records) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  for (const auto& r : records) out << to_json_line(r) << '\n';
  if (!out.flush()) throw IoError("write failed: " + path);
}

}  // namespace

SweepSummary run_sweep(const SweepOptions& opts) {
  SweepSummary summary;
  const std::vector<u64> all = sweep_primes(opts.p, opts.max_N);
  summary.planned = all.size();

  std::set<std::pair<u64, u64>> done;
  if (opts.resume) {
    std::ifstream probe(opts.out);
    if (probe) {
      LoadResult existing = load_records(probe);
      probe.close();
      for (const auto& r : existing.records) done.emplace(r.N, r.p);
      if (existing.truncated_tail) rewrite(opts.out, existing.records);
    }
  } else {
    rewrite(opts.out, {});
  }

  std::vector<u64> todo;
  for (u64 N : all) {
    if (done.count({N, opts.p}))
      ++summary.skipped;
    else
      todo.push_back(N);
  }
  if (todo.empty()) return summary;

  std::ofstream out(opts.out, std::ios::app);
  if (!out) throw IoError("cannot append to " + opts.out);

  unsigned workers = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, todo.size()));

  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};
  std::mutex mu;
  std::condition_variable cv;
  std::deque<ResultRecord> ready;
  std::exception_ptr failure;
  unsigned running = workers;

  auto worker = [&] {
    while (!abort) {
      std::size_t i = next++;
      if (i >= todo.size()) break;
      try {
        ResultRecord r = compute_record(todo[i], opts.p, opts.compute);
        std::lock_guard lock(mu);
        ready.push_back(std::move(r));
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        abort = true;
      }
      cv.notify_one();
    }
    std::lock_guard lock(mu);
    --running;
    cv.notify_one();
  };

  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);

  // This thread is the only writer.
  for (;;) {
    std::unique_lock lock(mu);
    cv.wait(lock, [&] { return !ready.empty() || running == 0; });
    if (ready.empty() && running == 0) break;
    ResultRecord r = std::move(ready.front());
    ready.pop_front();
    lock.unlock();
    out << to_json_line(r) << '\n';
    out.flush();
    if (!out) {
      abort = true;
      pool.clear();
      throw IoError("write failed: " + opts.out);
    }
    ++summary.computed;
    if (opts.progress) opts.progress(r);
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return summary;
}

}  // namespace eisenlab::harness
