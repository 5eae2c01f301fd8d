#pragma once

// Exact distances over S_n as an implicit graph under {X, L, R}.
//
// States are Lehmer ranks; distances live in one byte per state (255 =
// unreached, safe since every distance at reachable degrees is far below
// that).  The search is level-synchronous: the visit-order vector doubles as
// the frontier (each level is a contiguous range), and expansion runs in two
// passes - workers scan disjoint chunks of the current level and collect
// candidate ranks privately while nobody writes, then a single thread marks
// and appends them in chunk order.  The result is byte-identical for any
// thread count.
//
// Memory is estimated up front from the distance array, the visit-order
// vector and fixed scratch; the engine refuses to start past the budget.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "lrx/error.hpp"
#include "lrx/gen_word.hpp"
#include "lrx/permutation.hpp"
#include "lrx/ranking.hpp"

namespace lrx {

inline constexpr std::uint64_t kDefaultMemoryBudget = 2ull << 30;  // 2 GiB
inline constexpr int kFullBfsDegreeCap = 12;
inline constexpr int kBidirDegreeCap = 13;

struct BfsOptions {
  std::uint64_t memory_budget_bytes = kDefaultMemoryBudget;
  int threads = 0;  // 0 = pick from hardware
};

struct DistanceTable {
  static constexpr std::uint8_t kUnreached = 255;

  int n = 1;
  Permutation source;
  std::vector<std::uint8_t> dist;              // indexed by rank
  std::uint8_t max_distance = 0;
  std::vector<std::uint64_t> max_distance_ranks;  // sorted ascending
};

enum class PairMethod { full_bfs, bidirectional };

struct DiameterResult {
  int value = 0;
  Permutation witness;
};

struct OrbitDistance {
  int value = 0;
  int argmin_rotation = 0;
};

// Bytes the full search needs at degree n: n! distance bytes, 4*n! for the
// visit order, n!/8 scratch headroom, plus a fixed allowance for transient
// candidate buffers.
inline std::uint64_t bfs_memory_estimate(int n) {
  const std::uint64_t f = factorial(n);
  return f + 4 * f + f / 8 + (64ull << 20);
}

namespace detail {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hw, 1u, 8u));
}

inline void check_full_bfs_degree(int n, const BfsOptions& opt) {
  if (n < 1 || n > kFullBfsDegreeCap)
    throw resource_limit_error("full search supports degrees 1.." +
                               std::to_string(kFullBfsDegreeCap) + ", got " +
                               std::to_string(n));
  const std::uint64_t need = bfs_memory_estimate(n);
  if (need > opt.memory_budget_bytes)
    throw resource_limit_error("degree " + std::to_string(n) + " needs about " +
                               std::to_string(need) + " bytes, budget is " +
                               std::to_string(opt.memory_budget_bytes));
}

// Appends the unvisited neighbors of every rank in [begin, end) to `sink`.
// Read-only on `dist`; duplicates are allowed and resolved by the caller.
inline void collect_candidates(const std::uint8_t* dist, const std::uint32_t* order,
                               std::size_t begin, std::size_t end, int n,
                               std::vector<std::uint32_t>& sink) {
  std::uint8_t w[16];
  std::uint8_t nb[16];
  for (std::size_t idx = begin; idx < end; ++idx) {
    const std::uint32_t u = order[idx];
    unrank_word(u, n, w);
    // X
    std::memcpy(nb, w, static_cast<std::size_t>(n));
    std::swap(nb[0], nb[1]);
    const std::uint32_t vx = static_cast<std::uint32_t>(rank_word(nb, n));
    if (dist[vx] == DistanceTable::kUnreached) sink.push_back(vx);
    // L
    for (int p = 0; p + 1 < n; ++p) nb[p] = w[p + 1];
    nb[n - 1] = w[0];
    const std::uint32_t vl = static_cast<std::uint32_t>(rank_word(nb, n));
    if (dist[vl] == DistanceTable::kUnreached) sink.push_back(vl);
    // R
    nb[0] = w[n - 1];
    for (int p = 1; p < n; ++p) nb[p] = w[p - 1];
    const std::uint32_t vr = static_cast<std::uint32_t>(rank_word(nb, n));
    if (dist[vr] == DistanceTable::kUnreached) sink.push_back(vr);
  }
}

// Full level-synchronous search.  When `target` is set the search stops once
// the target's level is complete; max_distance and witnesses are then not
// populated.
inline DistanceTable run_bfs(int n, const Permutation& source,
                             std::optional<std::uint64_t> target, const BfsOptions& opt) {
  check_full_bfs_degree(n, opt);
  if (source.degree() != n)
    throw invalid_argument("bfs: source degree " + std::to_string(source.degree()) +
                           " does not match n=" + std::to_string(n));

  const std::uint64_t fact = factorial(n);
  DistanceTable table;
  table.n = n;
  table.source = source;
  table.dist.assign(fact, DistanceTable::kUnreached);

  const std::uint32_t src = static_cast<std::uint32_t>(rank(source));
  table.dist[src] = 0;

  if (n == 1) {
    table.max_distance = 0;
    table.max_distance_ranks = {0};
    return table;
  }

  std::vector<std::uint32_t> order;
  order.reserve(fact);
  order.push_back(src);

  const int threads = resolve_threads(opt.threads);
  constexpr std::size_t kBlock = 1u << 20;
  constexpr std::size_t kParallelThreshold = 1u << 15;

  std::vector<std::vector<std::uint32_t>> buffers(static_cast<std::size_t>(threads));

  std::size_t cur_begin = 0;
  std::size_t cur_end = 1;
  std::uint8_t level = 0;

  while (true) {
    for (std::size_t bs = cur_begin; bs < cur_end; bs += kBlock) {
      const std::size_t be = std::min(bs + kBlock, cur_end);
      const std::size_t count = be - bs;
      if (threads == 1 || count < kParallelThreshold) {
        buffers[0].clear();
        collect_candidates(table.dist.data(), order.data(), bs, be, n, buffers[0]);
        for (std::uint32_t v : buffers[0])
          if (table.dist[v] == DistanceTable::kUnreached) {
            table.dist[v] = static_cast<std::uint8_t>(level + 1);
            order.push_back(v);
          }
      } else {
        const std::size_t chunk = (count + threads - 1) / threads;
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) {
          const std::size_t wb = bs + static_cast<std::size_t>(t) * chunk;
          const std::size_t we = std::min(wb + chunk, be);
          buffers[static_cast<std::size_t>(t)].clear();
          if (wb >= we) continue;
          pool.emplace_back([&, t, wb, we] {
            collect_candidates(table.dist.data(), order.data(), wb, we, n,
                               buffers[static_cast<std::size_t>(t)]);
          });
        }
        for (auto& th : pool) th.join();
        for (int t = 0; t < threads; ++t)
          for (std::uint32_t v : buffers[static_cast<std::size_t>(t)])
            if (table.dist[v] == DistanceTable::kUnreached) {
              table.dist[v] = static_cast<std::uint8_t>(level + 1);
              order.push_back(v);
            }
      }
    }
    if (order.size() == cur_end) break;  // current level produced nothing new
    cur_begin = cur_end;
    cur_end = order.size();
    ++level;
    if (target && table.dist[*target] != DistanceTable::kUnreached) {
      table.max_distance = table.dist[*target];
      return table;
    }
    if (level == DistanceTable::kUnreached - 1)
      throw construction_error("bfs: level counter overflow");
  }

  if (target) {
    table.max_distance = table.dist[*target];
    return table;
  }

  if (order.size() != fact)
    throw construction_error("bfs: reached " + std::to_string(order.size()) + " of " +
                             std::to_string(fact) + " states; graph should be connected");

  table.max_distance = level;
  table.max_distance_ranks.assign(order.begin() + static_cast<std::ptrdiff_t>(cur_begin),
                                  order.begin() + static_cast<std::ptrdiff_t>(cur_end));
  std::sort(table.max_distance_ranks.begin(), table.max_distance_ranks.end());
  return table;
}

// Bidirectional level-synchronous search between two ranks.  Store is either
// a flat byte array (small degrees) or a hash map (degrees 11..13).
template <typename Store>
int bidir_search(int n, std::uint64_t ra, std::uint64_t rb, Store& side_a, Store& side_b,
                 const BfsOptions& opt) {
  if (ra == rb) return 0;
  side_a.set(ra, 0);
  side_b.set(rb, 0);
  std::vector<std::uint64_t> cur_a{ra}, cur_b{rb}, next;
  int depth_a = 0, depth_b = 0;

  std::uint8_t w[16];
  std::uint8_t nb[16];
  while (true) {
    const bool expand_a = cur_a.size() <= cur_b.size();
    auto& cur = expand_a ? cur_a : cur_b;
    auto& own = expand_a ? side_a : side_b;
    auto& other = expand_a ? side_b : side_a;
    const int own_depth = expand_a ? depth_a : depth_b;

    long long best = -1;
    next.clear();
    for (std::uint64_t u : cur) {
      unrank_word(u, n, w);
      for (int which = 0; which < 3; ++which) {
        if (which == 0) {
          std::memcpy(nb, w, static_cast<std::size_t>(n));
          std::swap(nb[0], nb[1]);
        } else if (which == 1) {
          for (int p = 0; p + 1 < n; ++p) nb[p] = w[p + 1];
          nb[n - 1] = w[0];
        } else {
          nb[0] = w[n - 1];
          for (int p = 1; p < n; ++p) nb[p] = w[p - 1];
        }
        const std::uint64_t v = rank_word(nb, n);
        if (own.get(v) >= 0) continue;
        const int od = other.get(v);
        if (od >= 0) {
          const long long cand = static_cast<long long>(own_depth) + 1 + od;
          if (best < 0 || cand < best) best = cand;
        } else {
          own.set(v, own_depth + 1);
          next.push_back(v);
        }
      }
    }
    if (best >= 0) return static_cast<int>(best);
    if (next.empty())
      throw construction_error("bidirectional search exhausted one side without meeting");
    cur.swap(next);
    if (expand_a)
      ++depth_a;
    else
      ++depth_b;
    const std::uint64_t used = side_a.memory_bytes() + side_b.memory_bytes();
    if (used > opt.memory_budget_bytes)
      throw resource_limit_error("bidirectional search frontier exceeds memory budget (" +
                                 std::to_string(used) + " bytes used)");
  }
}

struct ArrayDepthStore {
  std::vector<std::int8_t> depth;  // -1 = absent; search depths stay tiny
  explicit ArrayDepthStore(std::uint64_t size) : depth(size, -1) {}
  int get(std::uint64_t v) const { return depth[v]; }
  void set(std::uint64_t v, int d) { depth[v] = static_cast<std::int8_t>(d); }
  std::uint64_t memory_bytes() const { return depth.size(); }
};

struct HashDepthStore {
  std::unordered_map<std::uint64_t, std::uint8_t> depth;
  int get(std::uint64_t v) const {
    auto it = depth.find(v);
    return it == depth.end() ? -1 : static_cast<int>(it->second);
  }
  void set(std::uint64_t v, int d) { depth[v] = static_cast<std::uint8_t>(d); }
  std::uint64_t memory_bytes() const {
    return depth.size() * 48ull;  // rough per-entry cost of the node-based map
  }
};

}  // namespace detail

inline DistanceTable bfs_all_distances(int n, const Permutation& source,
                                       const BfsOptions& opt = {}) {
  return detail::run_bfs(n, source, std::nullopt, opt);
}

inline DiameterResult diameter(int n, const BfsOptions& opt = {}) {
  // Cayley graphs are vertex-transitive, so the identity's eccentricity is
  // the diameter.
  const DistanceTable table = bfs_all_distances(n, identity(n), opt);
  DiameterResult out;
  out.value = table.max_distance;
  out.witness = unrank(n, table.max_distance_ranks.front());
  return out;
}

inline int pair_distance(const Permutation& a, const Permutation& b, PairMethod method,
                         const BfsOptions& opt = {}) {
  if (a.degree() != b.degree())
    throw invalid_argument("pair_distance: degree mismatch " + std::to_string(a.degree()) +
                           " vs " + std::to_string(b.degree()));
  const int n = a.degree();
  if (a == b) return 0;

  if (method == PairMethod::full_bfs) {
    const std::uint64_t target = rank(b);
    const DistanceTable t = detail::run_bfs(n, a, target, opt);
    return t.dist[target];
  }

  if (n > kBidirDegreeCap)
    throw resource_limit_error("bidirectional search supports degrees up to " +
                               std::to_string(kBidirDegreeCap) + ", got " +
                               std::to_string(n));
  // dist(a, b) = dist((), a^-1 b): the graph is invariant under left
  // multiplication and the generator set is closed under inverses.
  const Permutation g = compose(inverse(a), b);
  const std::uint64_t rg = rank(g);
  if (n <= 10) {
    const std::uint64_t fact = factorial(n);
    if (2 * fact + (1u << 20) > opt.memory_budget_bytes)
      throw resource_limit_error("bidirectional arrays exceed memory budget");
    detail::ArrayDepthStore sa(fact), sb(fact);
    return detail::bidir_search(n, 0, rg, sa, sb, opt);
  }
  detail::HashDepthStore sa, sb;
  return detail::bidir_search(n, 0, rg, sa, sb, opt);
}

inline OrbitDistance dist_to_orbit(const Permutation& pi, const Permutation& xi,
                                   const BfsOptions& opt = {}) {
  if (pi.degree() != xi.degree())
    throw invalid_argument("dist_to_orbit: degree mismatch");
  const int n = pi.degree();
  const DistanceTable table = bfs_all_distances(n, pi, opt);
  OrbitDistance out;
  out.value = std::numeric_limits<int>::max();
  for (int k = 0; k < n; ++k) {
    const int d = table.dist[rank(rotate(xi, k))];
    if (d < out.value) {
      out.value = d;
      out.argmin_rotation = k;
    }
  }
  return out;
}

// Deterministic geodesic from `from` down to the table's source; tokens are
// chosen X before L before R at every step.
inline GenWord shortest_word_to_source(const DistanceTable& table, const Permutation& from) {
  if (from.degree() != table.n)
    throw invalid_argument("shortest_word_to_source: degree mismatch");
  GenWord w;
  w.degree = table.n;
  Permutation cur = from;
  std::uint64_t cur_rank = rank(cur);
  if (table.dist[cur_rank] == DistanceTable::kUnreached)
    throw invalid_argument("shortest_word_to_source: table does not cover the start state");
  while (table.dist[cur_rank] != 0) {
    bool stepped = false;
    for (Generator g : kAllGenerators) {
      if (table.n < 2 && g == Generator::X) continue;
      const Permutation nb = apply_generator(cur, g);
      const std::uint64_t nb_rank = rank(nb);
      if (table.dist[nb_rank] + 1 == table.dist[cur_rank]) {
        w.tokens.push_back(g);
        cur = nb;
        cur_rank = nb_rank;
        stepped = true;
        break;
      }
    }
    if (!stepped)
      throw construction_error("shortest_word_to_source: no descending neighbor; corrupt table");
  }
  return w;
}

// Binary dump: magic "LRXD", u32 version, u32 n, u64 source rank, then n!
// distance bytes.  All integers little-endian.
inline void dump_distance_table(const DistanceTable& table, const std::string& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw io_error("cannot open for writing: " + path);
  auto put_u32 = [&](std::uint32_t v) {
    const char b[4] = {static_cast<char>(v), static_cast<char>(v >> 8),
                       static_cast<char>(v >> 16), static_cast<char>(v >> 24)};
    os.write(b, 4);
  };
  auto put_u64 = [&](std::uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>(v >> (8 * i));
    os.write(b, 8);
  };
  os.write("LRXD", 4);
  put_u32(1);
  put_u32(static_cast<std::uint32_t>(table.n));
  put_u64(rank(table.source));
  os.write(reinterpret_cast<const char*>(table.dist.data()),
           static_cast<std::streamsize>(table.dist.size()));
  if (!os) throw io_error("write failed: " + path);
}

inline DistanceTable load_distance_table(const std::string& path, const BfsOptions& opt = {}) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw io_error("cannot open for reading: " + path);
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, "LRXD", 4) != 0)
    throw io_error("bad magic in distance table file: " + path);
  auto get_u32 = [&]() -> std::uint32_t {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
  };
  auto get_u64 = [&]() -> std::uint64_t {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
    return v;
  };
  const std::uint32_t version = get_u32();
  const std::uint32_t n = get_u32();
  const std::uint64_t source_rank = get_u64();
  if (!is) throw io_error("truncated header in distance table file: " + path);
  if (version != 1)
    throw io_error("unsupported distance table version " + std::to_string(version) + ": " +
                   path);
  if (n < 1 || n > kFullBfsDegreeCap)
    throw io_error("distance table degree " + std::to_string(n) + " out of range: " + path);
  const std::uint64_t fact = factorial(static_cast<int>(n));
  if (fact + (1u << 20) > opt.memory_budget_bytes)
    throw resource_limit_error("distance table of degree " + std::to_string(n) +
                               " exceeds memory budget");
  if (source_rank >= fact)
    throw io_error("distance table source rank out of range: " + path);

  DistanceTable table;
  table.n = static_cast<int>(n);
  table.source = unrank(static_cast<int>(n), source_rank);
  table.dist.resize(fact);
  is.read(reinterpret_cast<char*>(table.dist.data()), static_cast<std::streamsize>(fact));
  if (!is || static_cast<std::uint64_t>(is.gcount()) != fact)
    throw io_error("distance table payload shorter than n! bytes: " + path);
  is.peek();
  if (!is.eof()) throw io_error("trailing bytes after distance table payload: " + path);

  std::uint8_t max = 0;
  for (std::uint64_t r = 0; r < fact; ++r) {
    if (table.dist[r] == DistanceTable::kUnreached)
      throw io_error("distance table contains unreached entries: " + path);
    max = std::max(max, table.dist[r]);
  }
  if (table.dist[source_rank] != 0)
    throw io_error("distance table source entry is not zero: " + path);
  table.max_distance = max;
  for (std::uint64_t r = 0; r < fact; ++r)
    if (table.dist[r] == max) table.max_distance_ranks.push_back(r);
  return table;
}

}  // namespace lrx
