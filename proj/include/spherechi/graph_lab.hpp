#pragma once

/**
 * @file graph_lab.hpp
 * @brief Explicit forbidden-product graphs at desk scale: inner-product
 * census, exact independence numbers, colourings and the mod-p polynomial
 * certificate behind the independence bound.
 */

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "error.hpp"
#include "general_bound.hpp"

namespace spherechi {

/// Fixed-size bit set over vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  [[nodiscard]] std::size_t size() const { return size_; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  [[nodiscard]] bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  void fill() {
    std::fill(words_.begin(), words_.end(), ~std::uint64_t{0});
    if (size_ % 64 != 0 && !words_.empty()) words_.back() = (std::uint64_t{1} << (size_ % 64)) - 1;
  }

  [[nodiscard]] std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  [[nodiscard]] bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  /// Index of the lowest set bit, or size() when empty.
  [[nodiscard]] std::size_t first() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
    return size_;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }

  /// this &= ~o
  VertexSet& subtract(const VertexSet& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct GraphInstance {
  ConstructionSpec spec;
  std::size_t dimension = 0;            // m, coordinates per vertex
  std::vector<std::int64_t> coords;     // vertex-major, vertex_count() x dimension
  std::int64_t forbidden_product = 0;   // a
  std::vector<VertexSet> adjacency;
  std::size_t edge_count = 0;

  [[nodiscard]] std::size_t vertex_count() const { return adjacency.size(); }

  [[nodiscard]] std::span<const std::int64_t> vertex(std::size_t i) const {
    return {coords.data() + i * dimension, dimension};
  }

  [[nodiscard]] std::int64_t inner_product(std::size_t i, std::size_t j) const {
    const auto x = vertex(i);
    const auto y = vertex(j);
    std::int64_t s = 0;
    for (std::size_t k = 0; k < dimension; ++k) s += x[k] * y[k];
    return s;
  }

  [[nodiscard]] bool adjacent(std::size_t i, std::size_t j) const { return adjacency[i].test(j); }

  [[nodiscard]] std::size_t degree(std::size_t i) const { return adjacency[i].count(); }
};

inline constexpr std::size_t kDefaultSizeCap = 10'000;

/// All arrangements of the spec's multiset in lexicographic order; two
/// vertices are adjacent when their inner product equals a.
inline GraphInstance build_graph(const ConstructionSpec& spec, std::int64_t a,
                                 std::size_t size_cap = kDefaultSizeCap) {
  spec.validate();
  const BigInt count = multinomial(spec.m(), spec.l);
  if (count > size_cap) {
    throw Error("graph size cap exceeded: " + count.str() + " vertices > cap " +
                std::to_string(size_cap));
  }
  GraphInstance g;
  g.spec = spec;
  g.dimension = spec.m();
  g.forbidden_product = a;
  std::vector<std::int64_t> word;
  for (std::size_t j = 0; j < spec.t(); ++j) word.insert(word.end(), spec.l[j], spec.b[j]);
  std::sort(word.begin(), word.end());
  do {
    g.coords.insert(g.coords.end(), word.begin(), word.end());
  } while (std::next_permutation(word.begin(), word.end()));
  const std::size_t n = g.coords.size() / std::max<std::size_t>(g.dimension, 1);
  g.adjacency.assign(n, VertexSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g.inner_product(i, j) == a) {
        g.adjacency[i].set(j);
        g.adjacency[j].set(i);
        ++g.edge_count;
      }
    }
  }
  return g;
}

/// "n m" header, then one "u v" line per edge with u < v, 0-indexed.
inline void export_edge_list(const GraphInstance& g, std::ostream& os) {
  os << g.vertex_count() << ' ' << g.edge_count << '\n';
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    g.adjacency[i].for_each([&](std::size_t j) {
      if (j > i) os << i << ' ' << j << '\n';
    });
  }
}

struct CensusReport {
  std::map<std::int64_t, std::uint64_t> counts;  // inner product -> ordered pairs
  bool congruence_ok = false;  // products == s_max (mod p) are exactly s_max and (if present) a
  bool modulus_ok = false;     // every product divisible by d
  std::vector<std::pair<std::size_t, std::size_t>> witnesses;  // up to 5 offending pairs
};

inline CensusReport census(const GraphInstance& g, std::uint64_t p, std::uint64_t d) {
  if (p == 0) throw Error("census: p must be positive");
  CensusReport out;
  const std::size_t n = g.vertex_count();
  const std::int64_t s_max = self_product(g.spec);
  const auto pp = static_cast<std::int64_t>(p);
  const auto dd = static_cast<std::int64_t>(d);
  auto residue = [pp](std::int64_t v) { return ((v % pp) + pp) % pp; };
  auto offends = [&](std::int64_t v) {
    const bool matches = residue(v) == residue(s_max);
    const bool allowed = v == s_max || v == g.forbidden_product;
    return (matches && !allowed) || (dd != 0 && v % dd != 0);
  };
  for (std::size_t i = 0; i < n; ++i) {
    ++out.counts[g.inner_product(i, i)];
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::int64_t v = g.inner_product(i, j);
      out.counts[v] += 2;
      if (out.witnesses.size() < 5 && offends(v)) out.witnesses.emplace_back(i, j);
    }
  }
  out.congruence_ok = true;
  out.modulus_ok = true;
  for (const auto& [v, c] : out.counts) {
    if (residue(v) == residue(s_max) && v != s_max && v != g.forbidden_product) {
      out.congruence_ok = false;
    }
    if (dd == 0 ? v != 0 : v % dd != 0) out.modulus_ok = false;
  }
  return out;
}

inline bool is_independent(const GraphInstance& g, std::span<const std::size_t> set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (g.adjacent(set[i], set[j])) return false;
    }
  }
  return true;
}

struct AlphaResult {
  std::size_t alpha = 0;             // size of the best independent set found
  std::vector<std::size_t> witness;  // that set
  bool exact = false;                // false: search interrupted, alpha is a lower bound only
  std::size_t upper_bound = 0;       // certified; equals alpha when exact
  std::uint64_t nodes = 0;
};

namespace detail {

// Size of a maximal matching grown from minimum-degree endpoints. Any
// matching certifies alpha <= n - |matching|.
inline std::size_t greedy_matching_size(const GraphInstance& g) {
  const std::size_t n = g.vertex_count();
  VertexSet alive(n);
  alive.fill();
  std::vector<std::size_t> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = g.degree(v);
  auto retire = [&](std::size_t v) {
    alive.reset(v);
    g.adjacency[v].for_each([&](std::size_t u) {
      if (alive.test(u)) --degree[u];
    });
  };
  std::size_t matched = 0;
  while (true) {
    std::size_t pick = n;
    alive.for_each([&](std::size_t v) {
      if (degree[v] > 0 && (pick == n || degree[v] < degree[pick])) pick = v;
    });
    if (pick == n) break;
    std::size_t mate = n;
    g.adjacency[pick].for_each([&](std::size_t u) {
      if (alive.test(u) && (mate == n || degree[u] < degree[mate])) mate = u;
    });
    retire(pick);
    retire(mate);
    ++matched;
  }
  return matched;
}

// Maximum clique of the complement with greedy colour bounds. A colour class
// of the complement is a clique of g, so classes are grown through g's
// adjacency rows directly.
class IndependentSetSearch {
 public:
  IndependentSetSearch(const GraphInstance& g, double time_limit_seconds, std::uint64_t node_limit)
      : g_(g),
        node_limit_(node_limit),
        deadline_(std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(time_limit_seconds))) {}

  AlphaResult run() {
    const std::size_t n = g_.vertex_count();
    AlphaResult out;
    if (n == 0) {
      out.exact = true;
      return out;
    }
    seed_with_greedy();
    VertexSet all(n);
    all.fill();
    std::vector<std::size_t> order;
    std::vector<std::size_t> bounds;
    colour_sort(all, order, bounds);
    root_bound_ = bounds.empty() ? 0 : bounds.back();
    std::vector<std::size_t> current;
    expand(current, all, order, bounds);
    out.alpha = best_.size();
    out.witness = best_;
    std::sort(out.witness.begin(), out.witness.end());
    out.exact = !aborted_;
    out.upper_bound =
        aborted_ ? std::max(std::min(root_bound_, n - greedy_matching_size(g_)), best_.size())
                 : best_.size();
    out.nodes = nodes_;
    return out;
  }

 private:
  void seed_with_greedy() {
    const std::size_t n = g_.vertex_count();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return g_.degree(x) < g_.degree(y);
    });
    VertexSet blocked(n);
    for (std::size_t v : order) {
      if (blocked.test(v)) continue;
      best_.push_back(v);
      blocked.set(v);
      g_.adjacency[v].for_each([&](std::size_t u) { blocked.set(u); });
    }
  }

  // Greedy colouring of the complement restricted to p; vertices come out in
  // nondecreasing colour order with the colour count so far as bound.
  void colour_sort(const VertexSet& p, std::vector<std::size_t>& order,
                   std::vector<std::size_t>& bounds) const {
    order.clear();
    bounds.clear();
    VertexSet uncoloured = p;
    std::size_t colour = 0;
    while (!uncoloured.empty()) {
      ++colour;
      VertexSet candidates = uncoloured;
      while (!candidates.empty()) {
        const std::size_t v = candidates.first();
        candidates.reset(v);
        candidates &= g_.adjacency[v];
        uncoloured.reset(v);
        order.push_back(v);
        bounds.push_back(colour);
      }
    }
  }

  void expand(std::vector<std::size_t>& current, VertexSet p, const std::vector<std::size_t>& order,
              const std::vector<std::size_t>& bounds) {
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (aborted_) return;
      ++nodes_;
      if ((node_limit_ != 0 && nodes_ > node_limit_) ||
          ((nodes_ & 1023U) == 0 && std::chrono::steady_clock::now() > deadline_)) {
        aborted_ = true;
        return;
      }
      if (current.size() + bounds[idx] <= best_.size()) return;
      const std::size_t v = order[idx];
      current.push_back(v);
      VertexSet next = p;
      next.subtract(g_.adjacency[v]);
      next.reset(v);
      if (next.empty()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        std::vector<std::size_t> child_order;
        std::vector<std::size_t> child_bounds;
        colour_sort(next, child_order, child_bounds);
        expand(current, std::move(next), child_order, child_bounds);
      }
      current.pop_back();
      p.reset(v);
    }
  }

  const GraphInstance& g_;
  std::uint64_t node_limit_ = 0;
  std::chrono::steady_clock::time_point deadline_;
  std::vector<std::size_t> best_;
  std::size_t root_bound_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace detail

/// Exact independence number by branch and bound. When the time limit is
/// hit the best set found is returned with exact = false; the certified
/// upper bound is then the smaller of the root colouring bound and
/// n - |greedy matching|. A nonzero node_limit stops the search after that
/// many nodes, which unlike the clock is reproducible.
inline AlphaResult max_independent_set_exact(const GraphInstance& g, double time_limit_seconds = 60.0,
                                             std::uint64_t node_limit = 0) {
  return detail::IndependentSetSearch(g, time_limit_seconds, node_limit).run();
}

struct AlphaBoundsReport {
  std::size_t alpha_lower = 0;
  std::size_t alpha_upper = 0;
  bool exact = false;
  BigInt binomial_bound;  // C(m, p)
  BigInt monomial_bound;  // M(m, t, p)
  bool within_binomial = false;  // alpha_upper <= C(m, p): certified
  bool within_monomial = false;  // alpha_upper <= M: certified
  BigInt slack_binomial;         // C(m, p) - alpha_upper
  BigInt slack_monomial;         // M - alpha_upper
  std::string tighter;           // which of the two bounds is smaller: "binomial", "monomial" or "equal"
};

/// Compares alpha with M(m, t, p) and C(m, p). Only M bounds alpha for every
/// construction, so a known lower bound above M is a hard failure; C(m, p)
/// is reported for comparison and does fail on some t >= 3 alphabets.
inline AlphaBoundsReport verify_alpha_bounds(const GraphInstance& g, const AlphaResult& alpha,
                                             std::uint64_t p, std::uint64_t t) {
  AlphaBoundsReport out;
  const std::uint64_t m = g.spec.m();
  out.alpha_lower = alpha.alpha;
  out.alpha_upper = alpha.exact ? alpha.alpha : alpha.upper_bound;
  out.exact = alpha.exact;
  out.binomial_bound = binomial(m, static_cast<std::int64_t>(p));
  out.monomial_bound = monomial_count_M(m, t, p);
  if (out.alpha_lower > out.monomial_bound) {
    throw Error("independence bound violated: alpha >= " + std::to_string(out.alpha_lower) +
                " exceeds M = " + out.monomial_bound.str());
  }
  const BigInt upper(out.alpha_upper);
  out.within_binomial = upper <= out.binomial_bound;
  out.within_monomial = upper <= out.monomial_bound;
  out.slack_binomial = out.binomial_bound - upper;
  out.slack_monomial = out.monomial_bound - upper;
  out.tighter = out.binomial_bound < out.monomial_bound   ? "binomial"
                : out.monomial_bound < out.binomial_bound ? "monomial"
                                                          : "equal";
  return out;
}

enum class ColoringOrder { Natural, LargestFirst, DSatur };

struct Coloring {
  std::size_t colors_used = 0;
  std::vector<std::size_t> assignment;  // colour per vertex, 0-based
};

inline bool is_proper_coloring(const GraphInstance& g, const Coloring& c) {
  if (c.assignment.size() != g.vertex_count()) return false;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    bool ok = true;
    g.adjacency[i].for_each([&](std::size_t j) {
      if (c.assignment[i] == c.assignment[j]) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

inline Coloring greedy_coloring(const GraphInstance& g, ColoringOrder order = ColoringOrder::DSatur) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kUncoloured = static_cast<std::size_t>(-1);
  Coloring out;
  out.assignment.assign(n, kUncoloured);
  auto smallest_free = [&](std::size_t v) {
    std::vector<bool> used(out.colors_used + 1, false);
    g.adjacency[v].for_each([&](std::size_t u) {
      if (out.assignment[u] != kUncoloured && out.assignment[u] < used.size()) used[out.assignment[u]] = true;
    });
    std::size_t c = 0;
    while (used[c]) ++c;
    return c;
  };
  auto paint = [&](std::size_t v) {
    const std::size_t c = smallest_free(v);
    out.assignment[v] = c;
    out.colors_used = std::max(out.colors_used, c + 1);
  };

  if (order == ColoringOrder::DSatur) {
    std::vector<std::vector<bool>> seen(n);
    std::vector<std::size_t> saturation(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t pick = kUncoloured;
      for (std::size_t v = 0; v < n; ++v) {
        if (out.assignment[v] != kUncoloured) continue;
        if (pick == kUncoloured || saturation[v] > saturation[pick] ||
            (saturation[v] == saturation[pick] && g.degree(v) > g.degree(pick))) {
          pick = v;
        }
      }
      paint(pick);
      const std::size_t c = out.assignment[pick];
      g.adjacency[pick].for_each([&](std::size_t u) {
        if (seen[u].size() <= c) seen[u].resize(c + 1, false);
        if (!seen[u][c]) {
          seen[u][c] = true;
          ++saturation[u];
        }
      });
    }
    return out;
  }

  std::vector<std::size_t> sequence(n);
  for (std::size_t i = 0; i < n; ++i) sequence[i] = i;
  if (order == ColoringOrder::LargestFirst) {
    std::stable_sort(sequence.begin(), sequence.end(), [&](std::size_t x, std::size_t y) {
      return g.degree(x) > g.degree(y);
    });
  }
  for (std::size_t v : sequence) paint(v);
  return out;
}

/// A maximal independent set grown in a random vertex order.
template <typename Rng>
std::vector<std::size_t> random_maximal_independent_set(const GraphInstance& g, Rng& rng) {
  std::vector<std::size_t> order(g.vertex_count());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  VertexSet blocked(g.vertex_count());
  std::vector<std::size_t> set;
  for (std::size_t v : order) {
    if (blocked.test(v)) continue;
    set.push_back(v);
    blocked.set(v);
    g.adjacency[v].for_each([&](std::size_t u) { blocked.set(u); });
  }
  std::sort(set.begin(), set.end());
  return set;
}

struct CertificateReport {
  std::size_t size = 0;
  bool diagonal_ok = true;      // every P_{x_i}(x_i) != 0 mod p
  bool off_diagonal_ok = true;  // every P_{x_i}(x_j) == 0 mod p, i != j
  std::optional<std::pair<std::size_t, std::size_t>> violation;  // first failing (i, j) as vertex ids

  [[nodiscard]] bool ok() const { return diagonal_ok && off_diagonal_ok; }
};

/// P_x(y) = prod over c in {0..p-1} \ {s_max mod p} of (c - <x, y>), mod p.
inline std::uint64_t certificate_polynomial(std::int64_t product, std::int64_t s_max, std::uint64_t p) {
  const auto pp = static_cast<std::int64_t>(p);
  const std::int64_t skip = ((s_max % pp) + pp) % pp;
  const std::int64_t v = ((product % pp) + pp) % pp;
  std::int64_t acc = 1 % pp;
  for (std::int64_t c = 0; c < pp; ++c) {
    if (c == skip) continue;
    acc = acc * (((c - v) % pp + pp) % pp) % pp;
  }
  return static_cast<std::uint64_t>(acc);
}

/// Evaluates the matrix P_{x_i}(x_j) over the given set: it must be
/// diagonal-nonzero and off-diagonal-zero mod p, which makes the P_{x_i}
/// linearly independent.
inline CertificateReport polynomial_certificate(const GraphInstance& g,
                                                std::span<const std::size_t> set, std::uint64_t p) {
  if (p < 2) throw Error("polynomial_certificate: p must be prime");
  if (!is_independent(g, set)) throw Error("polynomial_certificate: set is not independent");
  CertificateReport out;
  out.size = set.size();
  const std::int64_t s_max = self_product(g.spec);
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = 0; j < set.size(); ++j) {
      const std::uint64_t value = certificate_polynomial(g.inner_product(set[i], set[j]), s_max, p);
      const bool fails = i == j ? value == 0 : value != 0;
      if (!fails) continue;
      (i == j ? out.diagonal_ok : out.off_diagonal_ok) = false;
      if (!out.violation) out.violation = std::make_pair(set[i], set[j]);
    }
  }
  return out;
}

}  // namespace spherechi
