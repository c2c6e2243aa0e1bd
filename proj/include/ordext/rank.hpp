#pragma once

#include "ordext/relation.hpp"

namespace ordext {

/// Rank of every element of a transitive well-founded relation.
///
/// ranks[t] is 0 for minimal t and otherwise one more than the largest
/// predecessor rank; equivalently the length of the longest chain strictly
/// below t. Ranks used are exactly 0..level_count-1, and for each t every
/// value below ranks[t] occurs among t's predecessor ranks.
struct RankFunction {
    std::vector<Elem> ranks;
    Elem level_count = 0;
};

/// The rank level sets, lowest first. Levels are pairwise disjoint, all
/// nonempty, cover the universe, and each is totally unordered.
struct Decomposition {
    std::vector<std::vector<Elem>> levels;
};

/// Computes the rank function by dynamic programming along the
/// minimal-element elimination order.
///
/// Refuses non-transitive input rather than closing it; compose with
/// transitive_closure explicitly. Throws NotTransitiveError or
/// NotWellFoundedError (with witness).
RankFunction compute_rank(const FiniteRelation& rel);

/// Checks the downward witness property: whenever ranks[x] < ranks[y] some
/// predecessor z of y has ranks[z] == ranks[x].
bool verify_rank_witness(const FiniteRelation& rel, const RankFunction& rk);

/// Groups elements into rank level sets, each sorted ascending.
Decomposition decompose(const FiniteRelation& rel, const RankFunction& rk);

}  // namespace ordext
