#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ordext/relation.hpp"

namespace ordext::lazytree {

/// The countably infinite binary tree over the naturals, exposed through
/// computable predicates instead of materialized edges. Node x has children
/// 2x+1 and 2x+2; the strict order is the ancestor relation. The companion
/// comparator `l_compare` is a total order extending the ancestor order in
/// which, between unrelated nodes, the one descending from the numerically
/// larger ancestor at the divergence level comes first. That order has the
/// infinite descending chain chain_value(0), chain_value(1), ... even though
/// the ancestor order itself is well-founded.

using Node = std::uint64_t;

inline Node parent(Node x) { return (x - 1) / 2; }

/// Depth of x: the unique n with 2^n - 1 <= x <= 2^(n+1) - 2.
unsigned level(Node x);

/// Strict ancestor test: iterating parent from y reaches x.
bool is_ancestor(Node x, Node y);

enum class Cmp { before, equal, after };

/// Closed-form comparator for the non-well linear extension: equal nodes
/// compare equal, an ancestor precedes its descendants, and otherwise the
/// node whose ancestor at the divergence level is numerically greater comes
/// first (the left, larger-indexed subtree of every node precedes the right).
Cmp l_compare(Node x, Node y);

/// n-th element of the descending chain: 2^(n+2) - 3. Throws
/// std::overflow_error when the value exceeds the 64-bit range (n > 61).
Node chain_value(unsigned n);

/// Ancestor order restricted to {0 .. 2^(depth+1) - 2}, materialized as a
/// finite relation (already transitively closed). Depth is capped at 16.
FiniteRelation truncate(unsigned depth);

/// Certificate report for the tree properties over all nodes below
/// 2^depth_bound, plus randomized checks of the comparator.
struct TreeReport {
    unsigned depth_bound = 0;
    Node node_bound = 0;

    bool ancestor_paths_ok = false;      // ancestor predicate == parent-step reachability
    bool respects_numeric_order = false; // related pairs satisfy x < y
    bool level_sets_ok = false;          // level formula and cardinalities 2^n
    bool chain_antichain_ok = false;     // chain values pairwise incomparable
    unsigned max_level_observed = 0;     // level range seen (grows with the bound)

    bool l_total_ok = false;       // exactly one of before/after on distinct pairs
    bool l_transitive_ok = false;  // on sampled triples
    bool l_extends_ancestors_ok = false;

    std::uint64_t pairs_checked = 0;
    std::uint64_t samples_checked = 0;
    std::vector<std::string> violations;

    bool all_ok() const {
        return ancestor_paths_ok && respects_numeric_order && level_sets_ok &&
               chain_antichain_ok && l_total_ok && l_transitive_ok && l_extends_ancestors_ok;
    }
};

/// Exhaustively cross-checks the predicates below 2^depth_bound (bound
/// capped at 13) and runs `sample_count` randomized comparator checks with a
/// fixed-seed generator.
TreeReport verify_properties(unsigned depth_bound, std::size_t sample_count,
                             std::uint64_t seed = 0);

}  // namespace ordext::lazytree
