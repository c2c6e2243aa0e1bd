#pragma once

#include <cstdint>

#include "ordext/rank.hpp"

namespace ordext {

/// One enumeration per decomposition level; each sequence is a permutation
/// of its level. Deterministic stand-in for choosing a well order on every
/// level set.
struct ChoiceOrder {
    std::vector<std::vector<Elem>> level_order;
};

/// A strict total order on the universe, held as a position permutation:
/// x precedes y iff position_of(x) < position_of(y).
class TotalOrder {
public:
    /// From element-at-position-i sequence. Must be a permutation.
    static TotalOrder from_sequence(std::span<const Elem> seq);

    /// From an element -> position map. Must be a bijection onto 0..n-1.
    static TotalOrder from_positions(std::vector<Elem> positions);

    Elem size() const noexcept { return static_cast<Elem>(position_.size()); }
    Elem position_of(Elem x) const { return position_.at(x); }
    bool before(Elem x, Elem y) const { return position_.at(x) < position_.at(y); }
    const std::vector<Elem>& positions() const noexcept { return position_; }

    /// Inverse map: element at each position.
    std::vector<Elem> sequence() const;

private:
    TotalOrder() = default;
    std::vector<Elem> position_;
};

/// Enumerates every level in ascending element-ID order.
ChoiceOrder default_choice(const Decomposition& decomp);

/// Reproducible shuffled enumeration. Each level is shuffled independently
/// by Fisher-Yates over its ascending sequence, driven by
/// std::mt19937_64(seed ^ (0x9e3779b97f4a7c15 * (level_index + 1))) with
/// swap indices drawn as gen() % (i + 1). This exact recipe is part of the
/// contract: equal seeds give equal orders on every platform.
ChoiceOrder seeded_choice(const Decomposition& decomp, std::uint64_t seed);

/// Extends a transitive well-founded relation to a total order: elements are
/// keyed lexicographically by (rank, position within the level's choice
/// sequence). The result contains the relation and is total, transitive and
/// irreflexive. Throws std::invalid_argument on a choice/decomposition
/// mismatch.
TotalOrder extend_to_well_order(const FiniteRelation& rel, const Decomposition& decomp,
                                const ChoiceOrder& choice);

/// The subset member with minimal position. Throws std::invalid_argument on
/// an empty subset.
Elem least_element(const TotalOrder& order, std::span<const Elem> subset);

/// Full pipeline for a well-founded relation: transitive closure, rank,
/// decomposition, default choice, extension. Throws NotWellFoundedError
/// (with cycle witness) otherwise.
TotalOrder well_extend_from_well_founded(const FiniteRelation& rel);

/// Stage-by-stage reconstruction of the extension as explicit edge sets:
/// stage alpha contributes the choice order on level alpha plus all pairs
/// from strictly lower levels into level alpha. The union over stages must
/// equal the edge set of the materialized total order.
struct StageAudit {
    std::vector<std::size_t> stage_edge_counts;
    bool union_matches = false;
};

/// Runs the stage reconstruction against `order`. Quadratic in the universe;
/// refuses universes above 64 elements.
StageAudit audit_well_extension(const FiniteRelation& rel, const Decomposition& decomp,
                                const ChoiceOrder& choice, const TotalOrder& order);

}  // namespace ordext
