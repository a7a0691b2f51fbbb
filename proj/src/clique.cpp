#include "siltsms/clique.hpp"

#include "siltsms/errors.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace siltsms {

namespace {

using Bits = boost::dynamic_bitset<>;

struct Search {
  std::vector<Bits> nbr;
  CliqueMode mode;
  int size;
  long budget;
  std::atomic<long> nodes{0};
  std::atomic<bool> abort{false};

  void tick() {
    const long n = ++nodes;
    if (budget > 0 && n > budget) {
      abort = true;
      throw BudgetExceeded("clique search exceeded the node budget of " + std::to_string(budget));
    }
    if (abort) throw BudgetExceeded("clique search aborted");
  }

  void exact(std::vector<int>& r, const Bits& p, std::vector<std::vector<int>>& out) {
    tick();
    if (static_cast<int>(r.size()) == size) {
      out.push_back(r);
      return;
    }
    if (static_cast<int>(r.size() + p.count()) < size) return;
    for (auto v = p.find_first(); v != Bits::npos; v = p.find_next(v)) {
      Bits later = p & nbr[v];
      // Only extend with larger vertices so every clique appears once.
      for (auto u = later.find_first(); u != Bits::npos && u <= v; u = later.find_next(u)) later.reset(u);
      r.push_back(static_cast<int>(v));
      exact(r, later, out);
      r.pop_back();
    }
  }

  void maximal(std::vector<int>& r, Bits p, Bits x, std::vector<std::vector<int>>& out) {
    tick();
    if (p.none() && x.none()) {
      std::vector<int> c = r;
      std::sort(c.begin(), c.end());
      out.push_back(std::move(c));
      return;
    }
    // Pivot maximizing |P cap N(u)| over P cup X.
    Bits px = p | x;
    std::size_t pivot = Bits::npos, best = 0;
    for (auto u = px.find_first(); u != Bits::npos; u = px.find_next(u)) {
      const std::size_t c = (p & nbr[u]).count();
      if (pivot == Bits::npos || c > best) {
        pivot = u;
        best = c;
      }
    }
    Bits branch = p - nbr[pivot];
    for (auto v = branch.find_first(); v != Bits::npos; v = branch.find_next(v)) {
      r.push_back(static_cast<int>(v));
      maximal(r, p & nbr[v], x & nbr[v], out);
      r.pop_back();
      p.reset(v);
      x.set(v);
    }
  }
};

}  // namespace

int default_workers() {
  if (const char* env = std::getenv("SILTSMS_WORKERS")) {
    try {
      int w = std::stoi(env);
      if (w >= 1) return w;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

std::vector<std::vector<int>> find_cliques(const std::vector<std::vector<bool>>& adjacent, CliqueMode mode, int size,
                                           const SearchOptions& options) {
  const std::size_t n = adjacent.size();
  Search s;
  s.mode = mode;
  s.size = size;
  s.budget = options.budget;
  s.nbr.assign(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && adjacent[i][j]) {
        if (!adjacent[j][i]) throw std::invalid_argument("adjacency matrix is not symmetric");
        s.nbr[i].set(j);
      }
  if (mode == CliqueMode::exact_size && size <= 0) return {{}};

  // One task per first vertex; results are concatenated in task order.
  std::vector<std::vector<std::vector<int>>> results(n);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&]() {
    for (std::size_t v; (v = next++) < n;) {
      try {
        std::vector<int> r = {static_cast<int>(v)};
        if (mode == CliqueMode::exact_size) {
          Bits later = s.nbr[v];
          for (std::size_t u = 0; u <= v; ++u) later.reset(u);
          s.exact(r, later, results[v]);
        } else {
          Bits p(n), x(n);
          for (auto u = s.nbr[v].find_first(); u != Bits::npos; u = s.nbr[v].find_next(u)) (u > v ? p : x).set(u);
          s.maximal(r, p, x, results[v]);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        s.abort = true;
        return;
      }
    }
  };
  const int workers = std::max(1, std::min<int>(options.workers, static_cast<int>(n)));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<std::vector<int>> out;
  for (auto& part : results)
    for (auto& c : part) out.push_back(std::move(c));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace siltsms
