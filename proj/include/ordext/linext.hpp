#pragma once

#include "ordext/extension.hpp"

namespace ordext {

/// A total order containing every edge of its base relation.
struct LinearExtension {
    enum class Source { enumerated, topological, antichain_construction };

    TotalOrder order;
    Source source = Source::topological;
};

/// Injective map of a listed antichain d_0..d_{k-1} onto the integers in
/// zigzag order: d_0 -> 0, d_1 -> -1, d_2 -> +1, d_3 -> -2, d_4 -> +2, ...
/// The induced order d_i < d_j iff value(i) < value(j) makes the
/// non-positive ray d_0, d_1, d_3, d_5, ... strictly decreasing.
struct ZigzagEmbedding {
    std::vector<Elem> domain;

    static std::int64_t value_at(std::size_t index) {
        if (index == 0) return 0;
        if (index % 2 == 1) return -static_cast<std::int64_t>((index + 1) / 2);
        return static_cast<std::int64_t>(index / 2);
    }

    std::int64_t value_of_position(std::size_t index) const { return value_at(index); }
};

/// Everything build_antichain_extension produces: the extension, the
/// descending witness inside it, and the integer embedding that forced it.
struct AntichainExtension {
    LinearExtension extension;
    WitnessChain descending;  // kind == descending, certified against `extension`
    ZigzagEmbedding embedding;
};

struct InversionReport {
    Elem width = 0;
    std::vector<Elem> antichain;
    std::size_t witness_length = 0;
    bool constructible = false;
};

/// Every linear extension of a strict partial order, in lexicographic
/// sequence order. Requires an irreflexive transitive relation with a
/// universe of at most 8 elements.
std::vector<LinearExtension> all_linear_extensions(const FiniteRelation& rel);

/// One linear extension by minimal-element elimination. Among the available
/// minimal elements the one earliest in `tie_break` (a permutation of the
/// universe) is taken. Throws NotWellFoundedError on cyclic input.
LinearExtension one_linear_extension(const FiniteRelation& rel, std::span<const Elem> tie_break);

/// Extracts an antichain subsequence from a sequence s that descends in the
/// linear extension L: start from the minimum-rank element of s (ties broken
/// by least element ID) and repeatedly move to the minimum-rank element of s
/// strictly L-before the current one, stopping when none is left. The result
/// has nondecreasing ranks and a pairwise incomparable range.
///
/// Preconditions checked: elements of s are distinct and each s[i+1]
/// precedes s[i] in L; L extends rel; rk matches rel.
WitnessChain extract_antichain_subsequence(const FiniteRelation& rel, const RankFunction& rk,
                                           const LinearExtension& L, std::span<const Elem> s);

/// Builds a linear extension of a transitive well-founded relation that
/// inverts half of a designated antichain: the antichain is embedded into
/// the integers in zigzag order, the induced pairs are united with the
/// relation, closed transitively, and extended topologically. The elements
/// mapped to 0, -1, -2, ... form a descending witness of length
/// floor(|D|/2) + 1 in the result.
///
/// Throws std::invalid_argument if D is not an antichain of at least two
/// distinct elements; a cycle in the closed union is a logic error.
AntichainExtension build_antichain_extension(const FiniteRelation& rel,
                                             std::span<const Elem> antichain_seq);

/// Width probe: measures the maximum antichain and, when its size is at
/// least two, runs build_antichain_extension on it to exhibit the longest
/// forced descending witness.
InversionReport forced_inversion_scan(const FiniteRelation& rel, Elem exhaustive_limit = 20);

}  // namespace ordext
