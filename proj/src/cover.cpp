#include "mdimlab/cover.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

#include "mdimlab/error.hpp"

namespace mdimlab {

CoverProblem CoverProblem::from_sets(std::size_t universe, std::vector<Bitset> sets) {
  CoverProblem p;
  p.universe = universe;
  p.coverers.assign(universe, Bitset(sets.size()));
  for (std::size_t c = 0; c < sets.size(); ++c) {
    if (sets[c].size() != universe) throw Error(Errc::BadParameters, "candidate set has wrong width");
    sets[c].for_each([&](std::size_t e) { p.coverers[e].set(c); });
  }
  p.sets = std::move(sets);
  return p;
}

std::vector<int> greedy_cover(const CoverProblem& p) {
  Bitset uncovered(p.universe);
  uncovered.set_all();
  for (std::size_t e = 0; e < p.universe; ++e)
    if (p.coverers[e].none()) throw Error(Errc::BadParameters, "element " + std::to_string(e) + " has no coverer");
  std::vector<int> chosen;
  while (uncovered.any()) {
    std::size_t best_gain = 0;
    std::size_t best = 0;
    for (std::size_t c = 0; c < p.sets.size(); ++c) {
      const std::size_t g = p.sets[c].count_and(uncovered);
      if (g > best_gain) {
        best_gain = g;
        best = c;
      }
    }
    chosen.push_back(static_cast<int>(best));
    uncovered -= p.sets[best];
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

namespace {

struct Shared {
  const CoverProblem& problem;
  const CoverOptions& options;
  std::atomic<std::size_t> best_size;
  std::mutex mutex;
  std::vector<int> best;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> exhausted{false};

  Shared(const CoverProblem& p, const CoverOptions& o, std::vector<int> initial)
      : problem(p), options(o), best_size(initial.size()), best(std::move(initial)) {}

  void offer(const std::vector<int>& chosen) {
    std::lock_guard lock(mutex);
    if (chosen.size() >= best.size()) return;
    best = chosen;
    best_size.store(chosen.size());
    if (chosen.size() <= options.lower_bound) stop.store(true);
  }
};

struct Candidate {
  std::size_t gain;
  int id;
};

class Search {
 public:
  explicit Search(Shared& shared) : sh_(shared), p_(shared.problem) {
    const std::size_t depth = p_.sets.size() + 2;
    uncovered_.assign(depth, Bitset(p_.universe));
    available_.assign(depth, Bitset(p_.sets.size()));
    siblings_.assign(depth, Bitset(p_.sets.size()));
    candidates_.resize(depth);
  }

  Bitset& uncovered(std::size_t depth) { return uncovered_[depth]; }
  Bitset& available(std::size_t depth) { return available_[depth]; }
  std::vector<int>& chosen() { return chosen_; }

  /// Computes the candidates to branch on at `depth`, best first, or an
  /// empty list when the node is closed (solution found or pruned).
  const std::vector<Candidate>& prepare(std::size_t depth) {
    auto& cand = candidates_[depth];
    cand.clear();
    const std::uint64_t count = sh_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (count > sh_.options.node_budget) {
      sh_.exhausted.store(true);
      sh_.stop.store(true);
    }
    if (sh_.stop.load(std::memory_order_relaxed)) return cand;

    const Bitset& U = uncovered_[depth];
    if (U.none()) {
      sh_.offer(chosen_);
      return cand;
    }
    const std::size_t s = chosen_.size();
    const std::size_t best = sh_.best_size.load(std::memory_order_relaxed);
    if (s + 1 >= best) return cand;

    Bitset& A = available_[depth];
    A.for_each([&](std::size_t c) {
      const std::size_t g = p_.sets[c].count_and(U);
      if (g == 0)
        A.reset(c);
      else
        cand.push_back({g, static_cast<int>(c)});
    });
    std::sort(cand.begin(), cand.end(), [](const Candidate& a, const Candidate& b) {
      return a.gain != b.gain ? a.gain > b.gain : a.id < b.id;
    });

    const std::size_t remaining = U.count();
    std::size_t sum = 0;
    std::size_t need = 0;
    while (need < cand.size() && sum < remaining) sum += cand[need++].gain;
    if (sum < remaining || s + need >= best) {
      cand.clear();
      return cand;
    }

    const std::size_t elem = pick_element(U, A);
    if (elem == kNone) {
      cand.clear();
      return cand;
    }
    std::erase_if(cand, [&](const Candidate& c) { return !p_.sets[static_cast<std::size_t>(c.id)].test(elem); });
    return cand;
  }

  void node(std::size_t depth) {
    const std::vector<Candidate>& cand = prepare(depth);
    if (cand.empty()) return;
    const std::size_t s = chosen_.size();
    Bitset& sib = siblings_[depth];
    sib = available_[depth];
    for (const Candidate& c : cand) {
      const auto id = static_cast<std::size_t>(c.id);
      sib.reset(id);
      available_[depth + 1] = sib;
      uncovered_[depth + 1] = uncovered_[depth];
      uncovered_[depth + 1] -= p_.sets[id];
      chosen_.push_back(c.id);
      node(depth + 1);
      chosen_.pop_back();
      if (sh_.stop.load(std::memory_order_relaxed)) return;
      if (s + 1 >= sh_.best_size.load(std::memory_order_relaxed)) return;
    }
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  std::size_t pick_element(const Bitset& U, const Bitset& A) const {
    std::size_t best = kNone;
    std::size_t best_count = std::numeric_limits<std::size_t>::max();
    for (std::size_t e : sh_.options.priority) {
      if (!U.test(e)) continue;
      const std::size_t cnt = p_.coverers[e].count_and(A);
      if (cnt < best_count) {
        best_count = cnt;
        best = e;
      }
    }
    if (best != kNone) return best_count == 0 ? kNone : best;
    for (std::size_t e = U.first(); e < U.size(); e = U.next(e + 1)) {
      const std::size_t cnt = p_.coverers[e].count_and(A);
      if (cnt < best_count) {
        best_count = cnt;
        best = e;
        if (cnt <= 1) break;
      }
    }
    return best_count == 0 ? kNone : best;
  }

  Shared& sh_;
  const CoverProblem& p_;
  std::vector<Bitset> uncovered_;
  std::vector<Bitset> available_;
  std::vector<Bitset> siblings_;
  std::vector<std::vector<Candidate>> candidates_;
  std::vector<int> chosen_;
};

}  // namespace

CoverResult solve_min_cover(const CoverProblem& problem, const CoverOptions& options) {
  std::vector<int> initial = greedy_cover(problem);
  if (initial.size() <= options.lower_bound) return CoverResult{std::move(initial), true, 0};

  Shared shared(problem, options, std::move(initial));
  Search root(shared);
  root.uncovered(0).set_all();
  root.available(0).set_all();

  if (options.threads <= 1) {
    root.node(0);
  } else {
    // Expand the root once, then hand its branches to the workers. Branch i
    // excludes the candidates of branches 0..i-1, as in the sequential walk.
    const std::vector<Candidate> tasks = root.prepare(0);
    std::vector<Bitset> task_available;
    Bitset sib = root.available(0);
    for (const Candidate& c : tasks) {
      sib.reset(static_cast<std::size_t>(c.id));
      task_available.push_back(sib);
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      Search s(shared);
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= tasks.size() || shared.stop.load()) return;
        if (1 >= shared.best_size.load()) return;
        const auto id = static_cast<std::size_t>(tasks[i].id);
        s.uncovered(1) = root.uncovered(0);
        s.uncovered(1) -= problem.sets[id];
        s.available(1) = task_available[i];
        s.chosen() = {tasks[i].id};
        s.node(1);
        s.chosen().clear();
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < options.threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  CoverResult out;
  out.chosen = shared.best;
  std::sort(out.chosen.begin(), out.chosen.end());
  out.optimal = !shared.exhausted.load();
  out.nodes = std::min(shared.nodes.load(), options.node_budget);
  return out;
}

}  // namespace mdimlab
