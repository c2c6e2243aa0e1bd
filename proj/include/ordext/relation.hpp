#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ordext {

using Elem = std::uint32_t;
using Edge = std::pair<Elem, Elem>;

/// A finite sequence certifying a property of a relation.
///
/// kind == descending: consecutive pairs (elements[i+1], elements[i]) are
///   edges of the certified relation (each element sits strictly below its
///   predecessor in the sequence).
/// kind == cycle: consecutive pairs (elements[i], elements[i+1]) are edges,
///   and so is (elements.back(), elements.front()).
/// kind == antichain: all distinct pairs are incomparable.
struct WitnessChain {
    enum class Kind { descending, cycle, antichain };

    Kind kind;
    std::vector<Elem> elements;
};

struct ParseError : std::runtime_error {
    ParseError(std::size_t line_number, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + what),
          line(line_number) {}

    std::size_t line;
};

struct NotWellFoundedError : std::runtime_error {
    explicit NotWellFoundedError(WitnessChain cycle_witness)
        : std::runtime_error("relation is not well-founded"),
          cycle(std::move(cycle_witness)) {}

    WitnessChain cycle;  // kind == cycle
};

struct NotTransitiveError : std::runtime_error {
    NotTransitiveError(Elem a, Elem b, Elem c)
        : std::runtime_error("relation is not transitive: (" + std::to_string(a) + "," +
                             std::to_string(b) + ") and (" + std::to_string(b) + "," +
                             std::to_string(c) + ") present, (" + std::to_string(a) + "," +
                             std::to_string(c) + ") missing"),
          witness{a, b, c} {}

    // (a,b) and (b,c) are edges while (a,c) is not.
    std::array<Elem, 3> witness;
};

/// A strict binary relation over the dense universe {0, ..., n-1}.
///
/// Immutable after construction. Edges are stored sorted and deduplicated;
/// per-element successor/predecessor lists are kept sorted ascending.
/// Labels are optional and used only at the I/O boundary.
class FiniteRelation {
public:
    FiniteRelation() = default;

    FiniteRelation(Elem universe_size, std::vector<Edge> edge_list,
                   std::vector<std::string> labels = {});

    Elem universe_size() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// True iff (a, b) is an edge. Both endpoints must be in the universe.
    bool related(Elem a, Elem b) const;

    std::span<const Elem> successors(Elem a) const;
    std::span<const Elem> predecessors(Elem b) const;

    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::string& label(Elem x) const { return labels_.at(x); }

private:
    Elem n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Elem>> succ_;
    std::vector<std::vector<Elem>> pred_;
    std::vector<std::string> labels_;
};

/// Parses the edge-list format: first nonblank line is the universe size,
/// each following nonblank line is "a b" (one edge). '#' starts a comment
/// running to end of line. Throws ParseError with a 1-based line number.
FiniteRelation parse_relation(std::string_view text);

bool is_irreflexive(const FiniteRelation& rel);

bool is_transitive(const FiniteRelation& rel);

/// If (a,b) and (b,c) are edges but (a,c) is not, returns {a,b,c}.
std::optional<std::array<Elem, 3>> find_transitivity_violation(const FiniteRelation& rel);

/// Outcome of the minimal-element elimination check.
///
/// When the relation is well-founded, elimination_order is a permutation of
/// the universe in which every element appears before its successors (a
/// topological certificate). Otherwise cycle holds a witness.
struct WellFoundedness {
    std::vector<Elem> elimination_order;
    std::optional<WitnessChain> cycle;

    bool ok() const noexcept { return !cycle.has_value(); }
};

/// Decides well-foundedness by repeatedly removing minimal elements.
/// On finite carriers this is equivalent to acyclicity.
WellFoundedness check_well_founded(const FiniteRelation& rel);

bool is_well_founded(const FiniteRelation& rel);

/// Elements of `subset` with no predecessor inside `subset`.
/// Subset entries must lie in the universe; duplicates are ignored.
std::vector<Elem> minimal_elements(const FiniteRelation& rel, std::span<const Elem> subset);

/// Smallest transitive superset (paths of length >= 1). Preserves labels.
/// Well-founded input yields a well-founded, irreflexive output.
FiniteRelation transitive_closure(const FiniteRelation& rel);

/// If the relation has a cycle, unrolls it backwards into a descending chain
/// of exactly `max_len` elements; otherwise returns nullopt.
std::optional<WitnessChain> find_descending_chain(const FiniteRelation& rel, std::size_t max_len);

/// True iff x != y and neither (x,y) nor (y,x) is an edge.
bool are_incomparable(const FiniteRelation& rel, Elem x, Elem y);

/// True iff all distinct pairs of `subset` are incomparable.
bool is_totally_unordered(const FiniteRelation& rel, std::span<const Elem> subset);

/// A maximum-cardinality totally unordered subset, sorted ascending.
///
/// Requires a transitive well-founded relation. Universes up to
/// `exhaustive_limit` are solved by exhaustive bitmask search; larger ones
/// through a minimum chain cover (Hopcroft-Karp matching plus the Koenig
/// cover construction).
std::vector<Elem> max_antichain(const FiniteRelation& rel, Elem exhaustive_limit = 20);

}  // namespace ordext
