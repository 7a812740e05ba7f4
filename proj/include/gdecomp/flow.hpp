#pragma once

// Flow reduction of the subset constraints. One edge-node per pair {i,j}
// with a_ij > 0 receives 2 a_ij from the source and forwards it to its two
// endpoints; vertex-node i can pass at most 1 - a_ii to the sink. The source
// arcs saturate iff every principal sum is at most |alpha|, and the flow
// split on each edge-node is the off-diagonal part of a decomposition X.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "gdecomp/error.hpp"
#include "gdecomp/index_set.hpp"
#include "gdecomp/matrix.hpp"
#include "gdecomp/rational.hpp"

namespace gdecomp {

struct FlowArc {
  std::size_t from;
  std::size_t to;
  Rational capacity;
};

class FlowNetwork {
 public:
  FlowNetwork() = default;

  std::size_t order() const noexcept { return order_; }
  std::size_t edge_count() const noexcept { return pairs_.size(); }
  std::size_t node_count() const noexcept { return pairs_.size() + order_ + 2; }

  std::size_t source() const noexcept { return 0; }
  std::size_t edge_node(std::size_t e) const noexcept { return 1 + e; }
  std::size_t vertex_node(std::size_t i) const noexcept { return 1 + pairs_.size() + i; }
  std::size_t sink() const noexcept { return 1 + pairs_.size() + order_; }

  /// Unordered pairs (i < j), lexicographic, one per edge-node.
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const noexcept {
    return pairs_;
  }
  /// Arc order: per edge-node (source->e, e->i, e->j), then vertex->sink.
  const std::vector<FlowArc>& arcs() const noexcept { return arcs_; }

  std::size_t source_arc(std::size_t e) const noexcept { return 3 * e; }
  std::size_t edge_to_first(std::size_t e) const noexcept { return 3 * e + 1; }
  std::size_t edge_to_second(std::size_t e) const noexcept { return 3 * e + 2; }
  std::size_t sink_arc(std::size_t i) const noexcept { return 3 * pairs_.size() + i; }

  Rational source_capacity() const {
    Rational s;
    for (std::size_t e = 0; e < pairs_.size(); ++e) s += arcs_[source_arc(e)].capacity;
    return s;
  }

  std::vector<Rational> sink_capacities() const {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < order_; ++i) out.push_back(arcs_[sink_arc(i)].capacity);
    return out;
  }

  friend FlowNetwork build_flow_network(const SymMatrix& a);

 private:
  std::size_t order_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<FlowArc> arcs_;
};

/// Throws DiagonalOverflow when some a_ii > 1 (the sink arc would be negative).
inline FlowNetwork build_flow_network(const SymMatrix& a) {
  FlowNetwork net;
  const std::size_t m = a.order();
  net.order_ = m;
  for (std::size_t i = 0; i < m; ++i) {
    if (a(i, i) > 1) {
      throw Error(ErrorCode::DiagonalOverflow,
                  "a(" + std::to_string(i + 1) + "," + std::to_string(i + 1) +
                      ") = " + to_string(a(i, i)) + " > 1");
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (a(i, j) > 0) net.pairs_.emplace_back(i, j);
    }
  }
  for (std::size_t e = 0; e < net.pairs_.size(); ++e) {
    const auto [i, j] = net.pairs_[e];
    const Rational cap = 2 * a(i, j);
    net.arcs_.push_back({net.source(), net.edge_node(e), cap});
    net.arcs_.push_back({net.edge_node(e), net.vertex_node(i), cap});
    net.arcs_.push_back({net.edge_node(e), net.vertex_node(j), cap});
  }
  for (std::size_t i = 0; i < m; ++i) {
    net.arcs_.push_back({net.vertex_node(i), net.sink(), Rational(1) - a(i, i)});
  }
  return net;
}

struct FlowResult {
  Rational value;
  std::vector<Rational> arc_flow;  // parallel to FlowNetwork::arcs()
  std::vector<bool> source_side;   // residual reachability from the source

  /// Vertex indices whose vertex-node lies on the source side of the cut.
  IndexSet cut_vertices(const FlowNetwork& net) const {
    IndexSet alpha(net.order());
    for (std::size_t i = 0; i < net.order(); ++i) {
      if (source_side[net.vertex_node(i)]) alpha.insert(i);
    }
    return alpha;
  }
};

namespace detail {

/// Integer max-flow on an explicit arc list (Edmonds-Karp). Arcs are scanned
/// in insertion order during each BFS, which fixes the augmenting sequence.
class ResidualGraph {
 public:
  explicit ResidualGraph(std::size_t nodes) : adj_(nodes) {}

  std::size_t add_arc(std::size_t from, std::size_t to, BigInt capacity) {
    const std::size_t k = residual_.size() / 2;
    residual_.push_back(std::move(capacity));
    residual_.push_back(0);
    head_.push_back(to);
    head_.push_back(from);
    adj_[from].push_back(2 * k);
    adj_[to].push_back(2 * k + 1);
    return k;
  }

  BigInt run(std::size_t s, std::size_t t) {
    BigInt total = 0;
    while (true) {
      auto seen = reach(s);
      if (!seen[t]) break;
      BigInt bottleneck = -1;
      for (std::size_t v = t; v != s; v = head_[via_[v] ^ 1]) {
        if (bottleneck < 0 || residual_[via_[v]] < bottleneck) bottleneck = residual_[via_[v]];
      }
      for (std::size_t v = t; v != s; v = head_[via_[v] ^ 1]) {
        residual_[via_[v]] -= bottleneck;
        residual_[via_[v] ^ 1] += bottleneck;
      }
      total += bottleneck;
    }
    return total;
  }

  const BigInt& flow(std::size_t arc) const { return residual_[2 * arc + 1]; }

  /// Nodes reachable from s in the residual graph.
  std::vector<bool> reach(std::size_t s) {
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    const std::size_t n = adj_.size();
    via_.assign(n, kNone);
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t r : adj_[u]) {
        const std::size_t v = head_[r];
        if (!seen[v] && residual_[r] > 0) {
          seen[v] = true;
          via_[v] = r;
          queue.push_back(v);
        }
      }
    }
    return seen;
  }

 private:
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<BigInt> residual_;
  std::vector<std::size_t> head_;
  std::vector<std::size_t> via_;
};

inline BigInt common_denominator(const std::vector<Rational>& values) {
  BigInt scale = 1;
  for (const auto& v : values) {
    scale = boost::multiprecision::lcm(scale, BigInt(denominator(v)));
  }
  return scale;
}

inline BigInt scaled(const Rational& v, const BigInt& scale) {
  return numerator(v) * (scale / denominator(v));
}

}  // namespace detail

/// Exact maximum flow. Capacities are scaled to integers by the lcm of their
/// denominators; augmentation follows BFS shortest paths, scanning arcs in
/// network order, so the result is deterministic.
inline FlowResult max_flow(const FlowNetwork& net) {
  const auto& arcs = net.arcs();
  std::vector<Rational> caps;
  caps.reserve(arcs.size());
  for (const auto& arc : arcs) caps.push_back(arc.capacity);
  const BigInt scale = detail::common_denominator(caps);

  detail::ResidualGraph graph(net.node_count());
  for (const auto& arc : arcs) {
    graph.add_arc(arc.from, arc.to, detail::scaled(arc.capacity, scale));
  }
  FlowResult out;
  out.value = Rational(graph.run(net.source(), net.sink()), scale);
  out.arc_flow.reserve(arcs.size());
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    out.arc_flow.push_back(Rational(graph.flow(k), scale));
  }
  out.source_side = graph.reach(net.source());
  return out;
}

}  // namespace gdecomp
