#include "ordext/linext.hpp"

#include <algorithm>

namespace ordext {

std::vector<LinearExtension> all_linear_extensions(const FiniteRelation& rel) {
    if (rel.universe_size() > 8) {
        throw std::invalid_argument("linear extension enumeration is limited to 8 elements");
    }
    if (!is_irreflexive(rel)) throw std::invalid_argument("relation is not irreflexive");
    if (auto viol = find_transitivity_violation(rel)) {
        throw NotTransitiveError((*viol)[0], (*viol)[1], (*viol)[2]);
    }

    const Elem n = rel.universe_size();
    std::vector<std::size_t> remaining(n);
    for (Elem v = 0; v < n; ++v) remaining[v] = rel.predecessors(v).size();

    std::vector<LinearExtension> out;
    std::vector<Elem> prefix;
    std::vector<bool> used(n, false);

    // Trying candidates in ascending ID order yields lexicographic sequences.
    auto recurse = [&](auto&& self) -> void {
        if (prefix.size() == n) {
            out.push_back(LinearExtension{TotalOrder::from_sequence(prefix),
                                          LinearExtension::Source::enumerated});
            return;
        }
        for (Elem v = 0; v < n; ++v) {
            if (used[v] || remaining[v] != 0) continue;
            used[v] = true;
            prefix.push_back(v);
            for (Elem s : rel.successors(v)) --remaining[s];
            self(self);
            for (Elem s : rel.successors(v)) ++remaining[s];
            prefix.pop_back();
            used[v] = false;
        }
    };
    recurse(recurse);
    return out;
}

LinearExtension one_linear_extension(const FiniteRelation& rel, std::span<const Elem> tie_break) {
    const Elem n = rel.universe_size();
    std::vector<Elem> priority(n, n);
    for (Elem i = 0; i < tie_break.size(); ++i) {
        Elem x = tie_break[i];
        if (x >= n || priority[x] != n) {
            throw std::invalid_argument("tie break is not a permutation of the universe");
        }
        priority[x] = i;
    }
    if (tie_break.size() != n) {
        throw std::invalid_argument("tie break is not a permutation of the universe");
    }

    auto wf = check_well_founded(rel);
    if (!wf.ok()) throw NotWellFoundedError(*wf.cycle);

    std::vector<std::size_t> remaining(n);
    std::vector<bool> available(n, false);
    for (Elem v = 0; v < n; ++v) {
        remaining[v] = rel.predecessors(v).size();
        available[v] = remaining[v] == 0;
    }

    std::vector<Elem> seq;
    seq.reserve(n);
    for (Elem step = 0; step < n; ++step) {
        Elem pick = n;
        for (Elem v = 0; v < n; ++v) {
            if (available[v] && (pick == n || priority[v] < priority[pick])) pick = v;
        }
        available[pick] = false;
        seq.push_back(pick);
        for (Elem s : rel.successors(pick)) {
            if (--remaining[s] == 0) available[s] = true;
        }
    }
    return LinearExtension{TotalOrder::from_sequence(seq), LinearExtension::Source::topological};
}

namespace {

void check_extends(const FiniteRelation& rel, const TotalOrder& order) {
    if (order.size() != rel.universe_size()) {
        throw std::invalid_argument("order size does not match relation universe");
    }
    for (const auto& [a, b] : rel.edges()) {
        if (!order.before(a, b)) {
            throw std::invalid_argument("order does not extend the relation: edge (" +
                                        std::to_string(a) + "," + std::to_string(b) +
                                        ") is inverted");
        }
    }
}

}  // namespace

WitnessChain extract_antichain_subsequence(const FiniteRelation& rel, const RankFunction& rk,
                                           const LinearExtension& L, std::span<const Elem> s) {
    check_extends(rel, L.order);
    if (rk.ranks.size() != rel.universe_size()) {
        throw std::invalid_argument("rank function does not match relation universe");
    }
    if (s.empty()) throw std::invalid_argument("descending sequence is empty");
    std::vector<bool> seen(rel.universe_size(), false);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] >= rel.universe_size() || seen[s[i]]) {
            throw std::invalid_argument("sequence elements must be distinct universe members");
        }
        seen[s[i]] = true;
        if (i + 1 < s.size() && !L.order.before(s[i + 1], s[i])) {
            throw std::invalid_argument("sequence is not descending in the extension");
        }
    }

    auto rank_min = [&](auto&& admits) -> std::optional<Elem> {
        std::optional<Elem> best;
        for (Elem x : s) {
            if (!admits(x)) continue;
            if (!best || rk.ranks[x] < rk.ranks[*best] ||
                (rk.ranks[x] == rk.ranks[*best] && x < *best)) {
                best = x;
            }
        }
        return best;
    };

    WitnessChain chain{WitnessChain::Kind::antichain, {}};
    auto cur = rank_min([](Elem) { return true; });
    while (cur) {
        chain.elements.push_back(*cur);
        Elem bound = *cur;
        cur = rank_min([&](Elem x) { return L.order.before(x, bound); });
    }
    return chain;
}

AntichainExtension build_antichain_extension(const FiniteRelation& rel,
                                             std::span<const Elem> antichain_seq) {
    if (auto viol = find_transitivity_violation(rel)) {
        throw NotTransitiveError((*viol)[0], (*viol)[1], (*viol)[2]);
    }
    {
        auto wf = check_well_founded(rel);
        if (!wf.ok()) throw NotWellFoundedError(*wf.cycle);
    }
    if (antichain_seq.size() < 2) {
        throw std::invalid_argument("antichain must hold at least two elements");
    }
    for (std::size_t i = 0; i < antichain_seq.size(); ++i) {
        if (antichain_seq[i] >= rel.universe_size()) {
            throw std::invalid_argument("antichain member outside universe");
        }
        for (std::size_t j = i + 1; j < antichain_seq.size(); ++j) {
            if (!are_incomparable(rel, antichain_seq[i], antichain_seq[j])) {
                throw std::invalid_argument("designated set is not an antichain: elements " +
                                            std::to_string(antichain_seq[i]) + " and " +
                                            std::to_string(antichain_seq[j]) +
                                            " are not incomparable");
            }
        }
    }

    ZigzagEmbedding embedding;
    embedding.domain.assign(antichain_seq.begin(), antichain_seq.end());

    std::vector<Edge> edges = rel.edges();
    const std::size_t k = antichain_seq.size();
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (ZigzagEmbedding::value_at(i) < ZigzagEmbedding::value_at(j)) {
                edges.emplace_back(antichain_seq[i], antichain_seq[j]);
            }
        }
    }

    FiniteRelation united(rel.universe_size(), std::move(edges));
    FiniteRelation closed = transitive_closure(united);
    if (!is_well_founded(closed)) {
        throw std::logic_error("antichain order united with the relation closed into a cycle");
    }

    std::vector<Elem> ascending(rel.universe_size());
    for (Elem v = 0; v < rel.universe_size(); ++v) ascending[v] = v;
    LinearExtension ext = one_linear_extension(closed, ascending);
    ext.source = LinearExtension::Source::antichain_construction;

    // The elements sent to 0, -1, -2, ... sit at indices 0, 1, 3, 5, ...
    WitnessChain witness{WitnessChain::Kind::descending, {}};
    witness.elements.push_back(embedding.domain[0]);
    for (std::size_t i = 1; i < k; i += 2) witness.elements.push_back(embedding.domain[i]);
    for (std::size_t i = 0; i + 1 < witness.elements.size(); ++i) {
        if (!ext.order.before(witness.elements[i + 1], witness.elements[i])) {
            throw std::logic_error("constructed witness is not descending in the extension");
        }
    }
    return AntichainExtension{std::move(ext), std::move(witness), std::move(embedding)};
}

InversionReport forced_inversion_scan(const FiniteRelation& rel, Elem exhaustive_limit) {
    InversionReport report;
    report.antichain = max_antichain(rel, exhaustive_limit);
    report.width = static_cast<Elem>(report.antichain.size());
    if (report.width < 2) return report;

    auto built = build_antichain_extension(rel, report.antichain);
    report.witness_length = built.descending.elements.size();
    report.constructible = true;
    return report;
}

}  // namespace ordext
