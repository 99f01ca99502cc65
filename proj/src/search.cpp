#include "factorforge/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "factorforge/combinators.hpp"
#include "factorforge/error.hpp"
#include "factorforge/exact_cover.hpp"
#include "factorforge/structure.hpp"

namespace factorforge {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Found: return "found";
    case Verdict::None: return "none";
    case Verdict::Undecided: return "undecided";
  }
  return "?";
}

SearchStats& SearchStats::operator+=(const SearchStats& o) {
  nodes += o.nodes;
  prune_normalization += o.prune_normalization;
  prune_symmetry += o.prune_symmetry;
  prune_exactness += o.prune_exactness;
  prune_divisibility += o.prune_divisibility;
  prune_exact_cover += o.prune_exact_cover;
  prune_memo += o.prune_memo;
  millis += o.millis;
  return *this;
}

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void check_shape(const GroupTable& g, const FactorShape& shape) {
  if (shape.sizes.empty()) throw Error(ErrorCode::ShapeMismatch, "empty shape");
  if (shape.product() != g.order())
    throw Error(ErrorCode::ShapeMismatch,
                "shape " + shape.to_string() + " does not multiply to " + std::to_string(g.order()));
  if (shape.length() > 1)
    for (int s : shape.sizes)
      if (s < 2) throw Error(ErrorCode::ShapeMismatch, "factor sizes must be at least 2");
}

// Flattened lookup tables shared read-only by all workers.
struct Tables {
  int n = 0;
  std::vector<Elem> rmul;  // rmul[x * n + p] = p x
  std::vector<Elem> conj;  // conj[y * n + x] = y^-1 x y
};

Tables make_tables(const GroupTable& g) {
  Tables t;
  t.n = g.order();
  const auto n = static_cast<std::size_t>(t.n);
  t.rmul.resize(n * n);
  t.conj.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t p = 0; p < n; ++p) {
      t.rmul[x * n + p] = g.mul(static_cast<Elem>(p), static_cast<Elem>(x));
      t.conj[x * n + p] = g.mul(g.mul(g.inv(static_cast<Elem>(x)), static_cast<Elem>(p)), static_cast<Elem>(x));
    }
  return t;
}

template <std::size_t W>
struct Shared {
  const GroupTable& g;
  const Tables& t;
  std::vector<int> sizes;
  SearchOptions opts;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> out_of_budget{false};
  std::atomic<std::size_t> best{SIZE_MAX};
};

template <std::size_t W>
struct Task {
  BasicBitset<W> root;
  BasicBitset<W> prefix;  // second prefix, when has_prefix
  std::vector<int> reps1;
  bool has_prefix = false;
};

template <std::size_t W>
class Worker {
 public:
  using Set = BasicBitset<W>;

  explicit Worker(Shared<W>& sh)
      : sh_(sh),
        n_(sh.t.n),
        k_(static_cast<int>(sh.sizes.size())),
        all_(Set::prefix(sh.t.n)),
        memo_(sh.sizes.size()),
        reps_(sh.sizes.size()) {}

  // Calls emit(root) for every canonical first factor in ascending order
  // until emit returns true or the search is aborted.
  void enumerate_roots(const std::function<bool(const Set&)>& emit) {
    const int a = sh_.sizes[0];
    std::vector<int> idx(static_cast<std::size_t>(a - 1));
    for (int i = 0; i < a - 1; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
      if (!tick()) return;
      Set root = Set::single(0);
      for (int v : idx) root.set(v);
      if (sh_.opts.symmetry && !root_canonical(root)) {
        ++stats.prune_normalization;
      } else if (sh_.opts.divisibility && !divides_closure(root)) {
        ++stats.prune_divisibility;
      } else if (emit(root)) {
        return;
      }
      // Next combination of a - 1 values from [1, n).
      int i = a - 2;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == n_ - (a - 1) + i) --i;
      if (i < 0) return;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < a - 1; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }

  bool run(const Task<W>& task, std::size_t index) {
    task_ = index;
    aborted_ = false;
    root_ = task.root;
    setup_root_stabilizer();
    bool ok;
    if (task.has_prefix) {
      reps_[1] = task.reps1;
      ok = descend(2, task.prefix);
    } else {
      ok = descend(1, task.root);
    }
    flush();
    return ok;
  }

  // The canonical second prefixes below `root`, in search order.
  std::vector<Task<W>> expand(const Set& root) {
    root_ = root;
    setup_root_stabilizer();
    std::vector<Task<W>> out;
    collect_ = &out;
    descend(1, root);
    collect_ = nullptr;
    flush();
    return out;
  }

  Factorization witness() const {
    Factorization f;
    f.factors.push_back(root_.template resized<ElementSet::kWords>());
    for (int level = 1; level < k_; ++level) {
      ElementSet s = ElementSet::single(0);
      for (int x : reps_[static_cast<std::size_t>(level)]) s.set(x);
      f.factors.push_back(s);
    }
    return f;
  }

  bool aborted() const { return aborted_; }

  SearchStats stats;

 private:
  struct Candidate {
    Set translate;
    int rep;
  };

  bool tick() {
    ++stats.nodes;
    if (++pending_ >= 256) flush();
    return !aborted_;
  }

  void flush() {
    const std::uint64_t total = sh_.nodes.fetch_add(pending_) + pending_;
    pending_ = 0;
    if (sh_.opts.node_budget && total > sh_.opts.node_budget) sh_.out_of_budget = true;
    if (sh_.out_of_budget || sh_.best.load() < task_) aborted_ = true;
  }

  Elem mul(int a, int b) const { return sh_.g.mul(static_cast<Elem>(a), static_cast<Elem>(b)); }

  Set conjugate(const Set& s, int y) const {
    Set out;
    const Elem* row = &sh_.t.conj[static_cast<std::size_t>(y) * n_];
    s.for_each([&](int x) { out.set(row[x]); });
    return out;
  }

  // Lexicographically least among y^-1 a^-1 A y over a in A and y in G.
  bool root_canonical(const Set& a) const {
    const auto members = a.elements();
    for (int x : members) {
      Set shifted;
      const Elem xi = sh_.g.inv(static_cast<Elem>(x));
      for (int m : members) shifted.set(mul(xi, m));
      for (int y = 0; y < n_; ++y)
        if (lex_less(y == 0 ? shifted : conjugate(shifted, y), a)) return false;
    }
    return true;
  }

  bool divides_closure(const Set& p) const {
    const int size = p.count();
    if (2 * size > n_) return true;  // <P> = G and size divides |G|
    Set h = Set::single(0);
    std::vector<int> elems{0};
    std::vector<int> gens;
    bool full = false;
    p.for_each([&](int x) {
      if (full || h.test(x)) return;
      gens.push_back(x);
      for (std::size_t i = 0; i < elems.size(); ++i)
        for (int gen : gens) {
          const int y = mul(elems[i], gen);
          if (!h.test(y)) {
            h.set(y);
            elems.push_back(y);
          }
        }
      full = static_cast<int>(elems.size()) == n_;
    });
    return static_cast<int>(elems.size()) % size == 0;
  }

  void setup_root_stabilizer() {
    stab_.clear();
    if (!sh_.opts.symmetry) return;
    for (int y = 1; y < n_; ++y)
      if (conjugate(root_, y) == root_) stab_.push_back(y);
  }

  bool stab_canonical(const Set& p) const {
    for (int y : stab_)
      if (lex_less(conjugate(p, y), p)) return false;
    return true;
  }

  Set translate(const std::vector<int>& members, int x) const {
    Set t;
    const Elem* row = &sh_.t.rmul[static_cast<std::size_t>(x) * n_];
    for (int p : members) t.set(row[p]);
    return t;
  }

  bool descend(int level, const Set& p) {
    if (level == k_ - 1) return cover(p);
    auto& memo = memo_[static_cast<std::size_t>(level)];
    const bool use_memo = sh_.opts.memo && level >= 2 && !collect_;
    if (use_memo && memo.count(p)) {
      ++stats.prune_memo;
      return false;
    }
    const auto members = p.elements();
    std::vector<Candidate> cands;
    std::unordered_set<Set, BitsetHash<W>> seen;
    for (int x = 1; x < n_; ++x) {
      if (p.test(x)) continue;
      Set t = translate(members, x);
      if (t.intersects(p)) {
        ++stats.prune_exactness;
        continue;
      }
      if (seen.insert(t).second) cands.push_back({t, x});
    }
    auto& reps = reps_[static_cast<std::size_t>(level)];
    reps.clear();
    const bool ok = choose(level, cands, 0, sh_.sizes[static_cast<std::size_t>(level)] - 1, p);
    if (!ok && !aborted_ && use_memo && memo.size() < sh_.opts.memo_cap) memo.insert(p);
    return ok;
  }

  bool choose(int level, const std::vector<Candidate>& cands, std::size_t start, int remaining, const Set& acc) {
    if (remaining == 0) return finish_level(level, acc);
    auto& reps = reps_[static_cast<std::size_t>(level)];
    for (std::size_t i = start; i + static_cast<std::size_t>(remaining) <= cands.size(); ++i) {
      if (!tick()) return false;
      const Candidate& c = cands[i];
      if (c.translate.intersects(acc)) {
        ++stats.prune_exactness;
        continue;
      }
      reps.push_back(c.rep);
      if (choose(level, cands, i + 1, remaining - 1, acc | c.translate)) return true;
      reps.pop_back();
      if (aborted_) return false;
    }
    return false;
  }

  bool finish_level(int level, const Set& p) {
    if (level == 1 && !stab_canonical(p)) {
      ++stats.prune_symmetry;
      return false;
    }
    if (sh_.opts.divisibility && !divides_closure(p)) {
      ++stats.prune_divisibility;
      return false;
    }
    if (level == 1 && collect_) {
      collect_->push_back({root_, p, reps_[1], true});
      return false;
    }
    return descend(level + 1, p);
  }

  // Last factor: cover G by pairwise-disjoint right translates of P.
  bool cover(const Set& p) {
    cover_members_ = p.elements();
    auto& reps = reps_[static_cast<std::size_t>(k_ - 1)];
    reps.clear();
    const bool ok = cover_rec(p, sh_.sizes.back() - 1);
    if (!ok && !aborted_) ++stats.prune_exact_cover;
    return ok;
  }

  bool cover_rec(const Set& covered, int need) {
    if (need == 0) return true;
    if (!tick()) return false;
    const int u = (all_ - covered).first();
    auto& reps = reps_[static_cast<std::size_t>(k_ - 1)];
    for (int p : cover_members_) {
      const int c = mul(sh_.g.inv(static_cast<Elem>(p)), u);
      const Elem* row = &sh_.t.rmul[static_cast<std::size_t>(c) * n_];
      Set t;
      bool clash = false;
      for (int q : cover_members_) {
        const int y = row[q];
        if (covered.test(y)) {
          clash = true;
          break;
        }
        t.set(y);
      }
      if (clash) continue;
      reps.push_back(c);
      if (cover_rec(covered | t, need - 1)) return true;
      reps.pop_back();
      if (aborted_) return false;
    }
    return false;
  }

  Shared<W>& sh_;
  int n_;
  int k_;
  Set all_;
  std::vector<std::unordered_set<Set, BitsetHash<W>>> memo_;
  std::vector<std::vector<int>> reps_;
  std::vector<int> cover_members_;
  std::vector<int> stab_;
  Set root_;
  std::vector<Task<W>>* collect_ = nullptr;
  std::size_t task_ = 0;
  std::uint64_t pending_ = 0;
  bool aborted_ = false;
};

template <std::size_t W>
SearchResult run_search(const GroupTable& g, const FactorShape& shape, const SearchOptions& opts) {
  const Tables tables = make_tables(g);
  Shared<W> sh{g, tables, shape.sizes, opts};
  SearchResult result;
  result.method = "search";
  int jobs = opts.jobs;
  if (jobs <= 0) jobs = std::max(1, static_cast<int>(std::thread::hardware_concurrency()));

  if (jobs == 1) {
    Worker<W> w(sh);
    std::size_t index = 0;
    bool found = false;
    w.enumerate_roots([&](const BasicBitset<W>& root) {
      Task<W> task{root, {}, {}, false};
      if (w.run(task, index++)) {
        found = true;
        return true;
      }
      return w.aborted();
    });
    result.stats = w.stats;
    if (found) {
      result.verdict = Verdict::Found;
      result.witness = w.witness();
    } else {
      result.verdict = sh.out_of_budget ? Verdict::Undecided : Verdict::None;
    }
    return result;
  }

  // Parallel: split on first factors, or on second prefixes when the first
  // level alone gives too few tasks. Tasks are numbered in sequential search
  // order and the lowest successful index wins, so the witness does not
  // depend on the number of workers.
  std::vector<Task<W>> tasks;
  {
    Worker<W> planner(sh);
    std::vector<BasicBitset<W>> roots;
    planner.enumerate_roots([&](const BasicBitset<W>& r) {
      roots.push_back(r);
      return false;
    });
    const bool expand = shape.length() >= 3 && roots.size() < 4 * static_cast<std::size_t>(jobs);
    for (const auto& r : roots) {
      if (!expand) {
        tasks.push_back({r, {}, {}, false});
        continue;
      }
      auto more = planner.expand(r);
      tasks.insert(tasks.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
    }
    result.stats = planner.stats;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::optional<Factorization>> witnesses(tasks.size());
  std::vector<SearchStats> stats(static_cast<std::size_t>(jobs));
  std::vector<std::thread> threads;
  for (int j = 0; j < jobs; ++j)
    threads.emplace_back([&, j] {
      Worker<W> w(sh);
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= tasks.size() || sh.out_of_budget) break;
        if (i > sh.best.load()) continue;
        if (w.run(tasks[i], i)) {
          witnesses[i] = w.witness();
          std::size_t cur = sh.best.load();
          while (i < cur && !sh.best.compare_exchange_weak(cur, i)) {
          }
        }
      }
      stats[static_cast<std::size_t>(j)] = w.stats;
    });
  for (auto& t : threads) t.join();
  for (const auto& s : stats) result.stats += s;
  const std::size_t best = sh.best.load();
  if (best != SIZE_MAX) {
    result.verdict = Verdict::Found;
    result.witness = witnesses[best];
  } else {
    result.verdict = sh.out_of_budget ? Verdict::Undecided : Verdict::None;
  }
  return result;
}

std::optional<Factorization> from_subgroup(const Subgroup& sub, const std::optional<Factorization>& f) {
  if (!f) return std::nullopt;
  Factorization out;
  for (const auto& factor : f->factors) {
    ElementSet s;
    factor.for_each([&](int x) { s.set(sub.to_parent[static_cast<std::size_t>(x)]); });
    out.factors.push_back(s);
  }
  return out;
}

constexpr int kFastDepth = 4;
constexpr std::size_t kFastSubgroups = 6;
constexpr int kFastSearchOrder = 64;
constexpr std::uint64_t kFastSearchBudget = 200000;

std::optional<Factorization> fast_impl(const GroupTable& g, const FactorShape& shape, int depth);

// A sub-problem in a proper subgroup or quotient: structural first, then a
// budgeted search for small groups.
std::optional<Factorization> solve_sub(const GroupTable& g, const FactorShape& shape, int depth) {
  if (shape.length() == 1) return Factorization{{g.all()}};
  if (auto f = fast_impl(g, shape, depth + 1)) return f;
  if (g.order() > kFastSearchOrder) return std::nullopt;
  SearchOptions o;
  o.fast_paths = false;
  o.node_budget = kFastSearchBudget;
  auto r = find_factorization(g, shape, o);
  return r.witness;
}

std::optional<Factorization> fast_impl(const GroupTable& g, const FactorShape& shape, int depth) {
  const int n = g.order();
  if (shape.length() == 1) return Factorization{{g.all()}};
  if (auto f = chain_factorization(g, g.all(), shape)) return f;
  if (auto f = chain_factorization(g, g.all(), shape.reversed())) return reverse_factorization(g, *f);
  if (depth >= kFastDepth) return std::nullopt;

  // Normal subgroup N filling a contiguous block of the shape.
  for (const auto& nsub : normal_subgroups(g)) {
    const int d = nsub.count();
    if (d == 1 || d == n) continue;
    for (std::size_t j = 0; j < shape.length(); ++j) {
      long long prod = 1;
      std::size_t end = j;
      while (end < shape.length() && prod < d) prod *= shape.sizes[end++];
      if (prod != d) continue;
      FactorShape outer;
      FactorShape block;
      for (std::size_t i = 0; i < shape.length(); ++i)
        (i >= j && i < end ? block : outer).sizes.push_back(shape.sizes[i]);
      const Quotient q = quotient(g, nsub);
      auto fq = solve_sub(q.table, outer, depth);
      if (!fq) continue;
      const Subgroup ns = subgroup_table(g, nsub);
      auto fn = from_subgroup(ns, solve_sub(ns.table, block, depth));
      if (!fn) continue;
      Factorization lifted = lift_by_normal_quotient(g, nsub, *fq, j);
      return refine_factor(g, lifted, j, *fn);
    }
  }

  // A subgroup whose index is the first or last size.
  for (Side side : {Side::Right, Side::Left}) {
    const int m = side == Side::Right ? shape.sizes.back() : shape.sizes.front();
    FactorShape inner = shape;
    if (side == Side::Right) inner.sizes.pop_back();
    else inner.sizes.erase(inner.sizes.begin());
    auto subs = subgroups_of_order(g, g.all(), n / m);
    if (subs.size() > kFastSubgroups) subs.resize(kFastSubgroups);
    for (const auto& h : subs) {
      const Subgroup hs = subgroup_table(g, h);
      auto fh = from_subgroup(hs, solve_sub(hs.table, inner, depth));
      if (fh) return lift_by_transversal(g, h, *fh, side);
    }
  }
  return std::nullopt;
}

template <std::size_t W>
void solve_pair_cover(const GroupTable& g, Elem x, Elem y, std::uint64_t budget, No2m2Result& out) {
  using Set = BasicBitset<W>;
  const int n = g.order();
  std::vector<Set> rows;
  std::vector<Elem> row_b;
  std::unordered_set<Set, BitsetHash<W>> seen;
  for (int bi = 0; bi < n; ++bi) {
    const auto b = static_cast<Elem>(bi);
    Set q;
    q.set(b);
    q.set(g.mul(x, b));
    q.set(g.mul(b, y));
    q.set(g.mul(g.mul(x, b), y));
    if (q.count() != 4 || !seen.insert(q).second) continue;
    rows.push_back(q);
    row_b.push_back(b);
  }
  ExactCover<Set> solver(rows, Set::prefix(n), n);
  auto sol = solver.solve(budget);
  out.stats.nodes += solver.nodes();
  if (!sol) {
    if (!solver.exhausted()) out.complete = false;
    else ++out.stats.prune_exact_cover;
    return;
  }
  ElementSet a = ElementSet::single(0);
  a.set(x);
  ElementSet c = ElementSet::single(0);
  c.set(y);
  ElementSet b;
  for (int r : *sol) b.set(row_b[static_cast<std::size_t>(r)]);
  out.exists = true;
  out.witness = Factorization{{a, b, c}};
}

}  // namespace

SearchResult find_factorization(const GroupTable& g, const FactorShape& shape, const SearchOptions& opts) {
  check_shape(g, shape);
  const auto start = Clock::now();
  SearchResult result;
  if (shape.length() == 1) {
    result.verdict = Verdict::Found;
    result.witness = Factorization{{g.all()}};
    result.method = "trivial";
  } else if (auto f = opts.fast_paths ? fast_impl(g, shape, 0) : std::nullopt) {
    result.verdict = Verdict::Found;
    result.witness = std::move(f);
    result.method = "structural";
  } else {
    const int n = g.order();
    if (n <= 64) result = run_search<1>(g, shape, opts);
    else if (n <= 128) result = run_search<2>(g, shape, opts);
    else if (n <= 256) result = run_search<4>(g, shape, opts);
    else result = run_search<16>(g, shape, opts);
  }
  if (result.witness && !verify_factorization(g, *result.witness))
    throw Error(ErrorCode::InvalidFactorization, "internal: search produced an invalid witness");
  result.stats.millis = millis_since(start);
  return result;
}

std::optional<Factorization> fast_factorization(const GroupTable& g, const FactorShape& shape) {
  check_shape(g, shape);
  return fast_impl(g, shape, 0);
}

SearchResult brute_force_oracle(const GroupTable& g, const FactorShape& shape, bool normalized) {
  const int n = g.order();
  if (n > 12 || shape.length() > 3)
    throw Error(ErrorCode::TooLarge, "brute force is limited to |G| <= 12 and three factors");
  if (shape.product() != n) throw Error(ErrorCode::ShapeMismatch, "shape does not multiply to |G|");
  const auto start = Clock::now();
  const int k = static_cast<int>(shape.length());
  std::vector<std::vector<std::vector<int>>> options(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != shape.sizes[static_cast<std::size_t>(i)]) continue;
      if (normalized && !(mask & 1u)) continue;
      std::vector<int> members;
      for (int x = 0; x < n; ++x)
        if (mask >> x & 1u) members.push_back(x);
      options[static_cast<std::size_t>(i)].push_back(members);
    }
  SearchResult result;
  result.method = normalized ? "brute-force" : "brute-force-unrestricted";
  std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
  while (true) {
    ++result.stats.nodes;
    std::vector<int> products{0};
    for (int i = 0; i < k; ++i) {
      std::vector<int> next;
      for (int p : products)
        for (int a : options[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]])
          next.push_back(g.mul(static_cast<Elem>(p), static_cast<Elem>(a)));
      products = std::move(next);
    }
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    bool bijective = true;
    for (int p : products) {
      if (hit[static_cast<std::size_t>(p)]) {
        bijective = false;
        break;
      }
      hit[static_cast<std::size_t>(p)] = true;
    }
    if (bijective) {
      Factorization f;
      for (int i = 0; i < k; ++i) {
        ElementSet s;
        for (int a : options[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]]) s.set(a);
        f.factors.push_back(s);
      }
      result.verdict = Verdict::Found;
      result.witness = f;
      break;
    }
    int i = k - 1;
    while (i >= 0 && ++pick[static_cast<std::size_t>(i)] == options[static_cast<std::size_t>(i)].size())
      pick[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) {
      result.verdict = Verdict::None;
      break;
    }
  }
  result.stats.millis = millis_since(start);
  return result;
}

No2m2Result prove_no_2m2(const GroupTable& g, std::uint64_t node_budget) {
  const int n = g.order();
  if (n % 4 != 0) throw Error(ErrorCode::NotDivisibleBy4, "|G| = " + std::to_string(n) + " is not divisible by 4");
  const auto start = Clock::now();
  No2m2Result out;
  const auto classes = conjugacy_classes(g);
  std::vector<int> class_of(static_cast<std::size_t>(n));
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (Elem x : classes[c]) class_of[x] = static_cast<int>(c);
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) order[static_cast<std::size_t>(x)] = element_order(g, static_cast<Elem>(x));

  for (const auto& cls : classes) {
    const Elem x = cls.front();
    if (order[x] % 2 != 0) continue;
    if (class_of[g.inv(x)] < class_of[x]) continue;
    // Conjugations that send x to x or x^-1 keep {e, x} up to normalization.
    std::vector<Elem> keep;
    for (int zi = 0; zi < n; ++zi) {
      const auto z = static_cast<Elem>(zi);
      const Elem c = g.mul(g.mul(g.inv(z), x), z);
      if (c == x || c == g.inv(x)) keep.push_back(z);
    }
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    for (int yi = 1; yi < n; ++yi) {
      const auto y = static_cast<Elem>(yi);
      if (done[y] || order[y] % 2 != 0) continue;
      for (Elem z : keep) {
        const Elem c = g.mul(g.mul(g.inv(z), y), z);
        done[c] = true;
        done[g.inv(c)] = true;
      }
      ++out.pairs_checked;
      std::uint64_t left = 0;
      if (node_budget) {
        if (out.stats.nodes >= node_budget) {
          out.complete = false;
          break;
        }
        left = node_budget - out.stats.nodes;
      }
      if (n <= 64) solve_pair_cover<1>(g, x, y, left, out);
      else if (n <= 128) solve_pair_cover<2>(g, x, y, left, out);
      else if (n <= 256) solve_pair_cover<4>(g, x, y, left, out);
      else solve_pair_cover<16>(g, x, y, left, out);
      if (out.exists || !out.complete) break;
    }
    if (out.exists || !out.complete) break;
  }
  if (out.witness && !verify_factorization(g, *out.witness))
    throw Error(ErrorCode::InvalidFactorization, "internal: invalid (2, n/4, 2) witness");
  out.stats.millis = millis_since(start);
  return out;
}

MultifoldResult is_multifold(const GroupTable& g, const SearchOptions& opts) {
  const auto start = Clock::now();
  MultifoldResult out;
  std::map<FactorShape, Factorization> found;
  std::optional<No2m2Result> two_ends;
  bool undecided = false;
  for (const auto& shape : prime_shapes(g.order())) {
    if (found.count(shape)) continue;
    std::optional<Factorization> f;
    if (shape.length() == 1) f = Factorization{{g.all()}};
    if (!f && opts.fast_paths) f = fast_impl(g, shape, 0);
    if (!f && shape.length() >= 3 && shape.sizes.front() == 2 && shape.sizes.back() == 2) {
      if (!two_ends) {
        two_ends = prove_no_2m2(g, opts.node_budget);
        out.stats += two_ends->stats;
      }
      if (two_ends->complete && !two_ends->exists) {
        out.verdict = Verdict::None;
        out.failing_shape = shape;
        out.failing_proof = "2m2-cover";
        break;
      }
    }
    if (!f) {
      SearchOptions o = opts;
      o.fast_paths = false;
      auto r = find_factorization(g, shape, o);
      out.stats += r.stats;
      if (r.verdict == Verdict::None) {
        out.verdict = Verdict::None;
        out.failing_shape = shape;
        out.failing_proof = "search";
        break;
      }
      if (r.verdict == Verdict::Undecided) {
        undecided = true;
        continue;
      }
      f = r.witness;
    }
    const FactorShape rev = shape.reversed();
    if (rev != shape) found.emplace(rev, reverse_factorization(g, *f));
    found.emplace(shape, std::move(*f));
  }
  if (!out.failing_shape) out.verdict = undecided ? Verdict::Undecided : Verdict::Found;
  for (auto& [shape, f] : found) out.witnesses.emplace_back(shape, std::move(f));
  out.stats.millis = millis_since(start);
  return out;
}

}  // namespace factorforge
