#pragma once

// Decides A in U_m (every principal sum at most |alpha|) and A in U^m (also
// total sum exactly m), with a violating subset as certificate on failure.
// Two independent routes: exhaustive subsets, and a min cut on the flow
// reduction of flow.hpp.

#include <cstddef>
#include <optional>
#include <string>

#include "gdecomp/flow.hpp"
#include "gdecomp/index_set.hpp"
#include "gdecomp/matrix.hpp"
#include "gdecomp/matrix_ops.hpp"
#include "gdecomp/rational.hpp"
#include "gdecomp/subset_sums.hpp"

namespace gdecomp {

enum class Ambient { Um, UM };

constexpr std::string_view to_string(Ambient a) { return a == Ambient::Um ? "Um" : "UM"; }

enum class MembershipReason { Member, ViolatingSubset, TotalSumMismatch };

struct MembershipVerdict {
  bool member = false;
  MembershipReason reason = MembershipReason::Member;
  /// Present iff reason == ViolatingSubset; principal_sum > |certificate|.
  std::optional<IndexSet> certificate;
  /// min over nonempty alpha of |alpha| - principal_sum(A, alpha). Always set
  /// by the brute-force route; the min-cut route sets it only on request.
  std::optional<Rational> slack;
  Rational total_sum;
};

enum class MembershipMethod { Auto, BruteForce, MinCut };

/// Exhaustive check over all nonempty subsets.
inline MembershipVerdict check_Um_bruteforce(const SymMatrix& a,
                                             std::size_t cap = kDefaultExhaustiveCap) {
  MembershipVerdict v;
  v.total_sum = a.total_sum();
  if (a.order() == 0) {
    v.member = true;
    return v;
  }
  const SubsetExcess table(a, cap);
  v.slack = table.slack(table.argmax_excess());
  if (auto bad = table.smallest_violator()) {
    v.member = false;
    v.reason = MembershipReason::ViolatingSubset;
    v.certificate = IndexSet::from_mask(a.order(), *bad);
  } else {
    v.member = true;
  }
  return v;
}

namespace detail {

/// min over alpha containing k of (|alpha| - principal_sum(A, alpha)), as a
/// min cut: edge-nodes pay 2 a_ij unless both endpoints are on the source
/// side, vertex i on the source side pays 1 - a_ii. Negative vertex terms
/// (a_ii > 1) are moved to a source arc plus a constant.
inline Rational forced_vertex_slack(const SymMatrix& a, std::size_t k) {
  const std::size_t m = a.order();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<Rational> caps;
  for (std::size_t i = 0; i < m; ++i) {
    caps.push_back(Rational(1) - a(i, i));
    for (std::size_t j = i + 1; j < m; ++j) {
      if (a(i, j) > 0) {
        pairs.emplace_back(i, j);
        caps.push_back(2 * a(i, j));
      }
    }
  }
  const BigInt scale = common_denominator(caps);
  const std::size_t e_count = pairs.size();
  const std::size_t source = 0;
  const std::size_t sink = 1 + e_count + m;
  auto vertex = [&](std::size_t i) { return 1 + e_count + i; };

  ResidualGraph graph(sink + 1);
  BigInt infinite = 1;
  BigInt edge_total = 0;
  for (std::size_t e = 0; e < e_count; ++e) {
    const auto [i, j] = pairs[e];
    const BigInt c = scaled(2 * a(i, j), scale);
    graph.add_arc(source, 1 + e, c);
    graph.add_arc(1 + e, vertex(i), c);
    graph.add_arc(1 + e, vertex(j), c);
    edge_total += c;
    infinite += 3 * c;
  }
  BigInt constant = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const BigInt c = scaled(Rational(1) - a(i, i), scale);
    if (c >= 0) {
      graph.add_arc(vertex(i), sink, c);
      infinite += c;
    } else {
      graph.add_arc(source, vertex(i), BigInt(-c));
      constant += c;
      infinite -= c;
    }
  }
  graph.add_arc(source, vertex(k), infinite);
  const BigInt cut = graph.run(source, sink) + constant;
  return Rational(BigInt(cut - edge_total), scale);
}

}  // namespace detail

/// Min-cut route. Polynomial in m; the certificate is the set of vertex-nodes
/// on the source side of the cut and need not be of minimum size.
inline MembershipVerdict check_Um_mincut(const SymMatrix& a, bool exact_slack = false) {
  MembershipVerdict v;
  v.total_sum = a.total_sum();
  const std::size_t m = a.order();
  if (exact_slack && m > 0) {
    Rational best = detail::forced_vertex_slack(a, 0);
    for (std::size_t k = 1; k < m; ++k) {
      Rational s = detail::forced_vertex_slack(a, k);
      if (s < best) best = s;
    }
    v.slack = best;
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (a(i, i) > 1) {
      v.member = false;
      v.reason = MembershipReason::ViolatingSubset;
      v.certificate = IndexSet(m, {i});
      return v;
    }
  }
  const FlowNetwork net = build_flow_network(a);
  const FlowResult flow = max_flow(net);
  if (flow.value == net.source_capacity()) {
    v.member = true;
    return v;
  }
  v.member = false;
  v.reason = MembershipReason::ViolatingSubset;
  v.certificate = flow.cut_vertices(net);
  return v;
}

/// Brute force up to the cap, min cut beyond (Auto).
inline MembershipVerdict check_Um(const SymMatrix& a,
                                  MembershipMethod method = MembershipMethod::Auto,
                                  std::size_t cap = kDefaultExhaustiveCap) {
  switch (method) {
    case MembershipMethod::BruteForce: return check_Um_bruteforce(a, cap);
    case MembershipMethod::MinCut: return check_Um_mincut(a);
    case MembershipMethod::Auto: break;
  }
  return a.order() <= cap ? check_Um_bruteforce(a, cap) : check_Um_mincut(a);
}

/// A in U^m: a member of U_m whose total sum is exactly m.
inline MembershipVerdict check_Um_upper(const SymMatrix& a,
                                        MembershipMethod method = MembershipMethod::Auto,
                                        std::size_t cap = kDefaultExhaustiveCap) {
  MembershipVerdict v = check_Um(a, method, cap);
  if (v.member && v.total_sum != Rational(static_cast<long>(a.order()))) {
    v.member = false;
    v.reason = MembershipReason::TotalSumMismatch;
  }
  return v;
}

inline MembershipVerdict check_membership(const SymMatrix& a, Ambient ambient,
                                          MembershipMethod method = MembershipMethod::Auto,
                                          std::size_t cap = kDefaultExhaustiveCap) {
  return ambient == Ambient::Um ? check_Um(a, method, cap) : check_Um_upper(a, method, cap);
}

inline bool is_member(const SymMatrix& a, Ambient ambient,
                      std::size_t cap = kDefaultExhaustiveCap) {
  return check_membership(a, ambient, MembershipMethod::Auto, cap).member;
}

}  // namespace gdecomp
