#include "ordext/extension.hpp"

#include <algorithm>
#include <random>

namespace ordext {

TotalOrder TotalOrder::from_sequence(std::span<const Elem> seq) {
    const Elem n = static_cast<Elem>(seq.size());
    std::vector<Elem> positions(n, n);
    for (Elem p = 0; p < n; ++p) {
        Elem x = seq[p];
        if (x >= n || positions[x] != n) {
            throw std::invalid_argument("sequence is not a permutation of the universe");
        }
        positions[x] = p;
    }
    return from_positions(std::move(positions));
}

TotalOrder TotalOrder::from_positions(std::vector<Elem> positions) {
    const Elem n = static_cast<Elem>(positions.size());
    std::vector<bool> used(n, false);
    for (Elem p : positions) {
        if (p >= n || used[p]) {
            throw std::invalid_argument("positions are not a bijection onto 0..n-1");
        }
        used[p] = true;
    }
    TotalOrder w;
    w.position_ = std::move(positions);
    return w;
}

std::vector<Elem> TotalOrder::sequence() const {
    std::vector<Elem> seq(position_.size());
    for (Elem x = 0; x < size(); ++x) seq[position_[x]] = x;
    return seq;
}

ChoiceOrder default_choice(const Decomposition& decomp) {
    ChoiceOrder c;
    c.level_order.reserve(decomp.levels.size());
    for (const auto& level : decomp.levels) {
        auto seq = level;
        std::sort(seq.begin(), seq.end());
        c.level_order.push_back(std::move(seq));
    }
    return c;
}

ChoiceOrder seeded_choice(const Decomposition& decomp, std::uint64_t seed) {
    ChoiceOrder c = default_choice(decomp);
    for (std::size_t alpha = 0; alpha < c.level_order.size(); ++alpha) {
        std::mt19937_64 gen(seed ^ (0x9e3779b97f4a7c15ull * (alpha + 1)));
        auto& seq = c.level_order[alpha];
        for (std::size_t i = seq.size(); i > 1; --i) {
            std::size_t j = gen() % i;
            std::swap(seq[i - 1], seq[j]);
        }
    }
    return c;
}

namespace {

void check_choice_matches(const Decomposition& decomp, const ChoiceOrder& choice) {
    if (choice.level_order.size() != decomp.levels.size()) {
        throw std::invalid_argument("choice order level count differs from decomposition");
    }
    for (std::size_t alpha = 0; alpha < decomp.levels.size(); ++alpha) {
        auto a = decomp.levels[alpha];
        auto b = choice.level_order[alpha];
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) {
            throw std::invalid_argument("choice order is not a permutation of level " +
                                        std::to_string(alpha));
        }
    }
}

}  // namespace

TotalOrder extend_to_well_order(const FiniteRelation& rel, const Decomposition& decomp,
                                const ChoiceOrder& choice) {
    check_choice_matches(decomp, choice);
    std::vector<Elem> seq;
    seq.reserve(rel.universe_size());
    for (const auto& level : choice.level_order) {
        seq.insert(seq.end(), level.begin(), level.end());
    }
    if (seq.size() != rel.universe_size()) {
        throw std::invalid_argument("decomposition does not cover the universe");
    }
    return TotalOrder::from_sequence(seq);
}

Elem least_element(const TotalOrder& order, std::span<const Elem> subset) {
    if (subset.empty()) throw std::invalid_argument("least element of an empty subset");
    Elem best = subset[0];
    for (Elem x : subset.subspan(1)) {
        if (order.position_of(x) < order.position_of(best)) best = x;
    }
    return best;
}

TotalOrder well_extend_from_well_founded(const FiniteRelation& rel) {
    auto wf = check_well_founded(rel);
    if (!wf.ok()) throw NotWellFoundedError(*wf.cycle);

    FiniteRelation closed = transitive_closure(rel);
    RankFunction rk = compute_rank(closed);
    Decomposition decomp = decompose(closed, rk);
    return extend_to_well_order(closed, decomp, default_choice(decomp));
}

StageAudit audit_well_extension(const FiniteRelation& rel, const Decomposition& decomp,
                                const ChoiceOrder& choice, const TotalOrder& order) {
    const Elem n = rel.universe_size();
    if (n > 64) throw std::invalid_argument("stage audit supports universes up to 64 elements");
    check_choice_matches(decomp, choice);

    StageAudit audit;
    std::vector<Edge> union_edges;
    std::vector<Elem> lower;  // all elements of levels below the current one
    for (std::size_t alpha = 0; alpha < choice.level_order.size(); ++alpha) {
        const auto& level_seq = choice.level_order[alpha];
        std::size_t count = 0;
        for (std::size_t i = 0; i < level_seq.size(); ++i) {
            for (std::size_t j = i + 1; j < level_seq.size(); ++j) {
                union_edges.emplace_back(level_seq[i], level_seq[j]);
                ++count;
            }
        }
        for (Elem x : lower) {
            for (Elem y : level_seq) {
                union_edges.emplace_back(x, y);
                ++count;
            }
        }
        audit.stage_edge_counts.push_back(count);
        lower.insert(lower.end(), level_seq.begin(), level_seq.end());
    }

    std::vector<Edge> order_edges;
    for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
            if (x != y && order.before(x, y)) order_edges.emplace_back(x, y);
        }
    }
    std::sort(union_edges.begin(), union_edges.end());
    union_edges.erase(std::unique(union_edges.begin(), union_edges.end()), union_edges.end());
    audit.union_matches = union_edges == order_edges;
    return audit;
}

}  // namespace ordext
