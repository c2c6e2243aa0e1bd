#include "ordext/suite.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "ordext/lazy_tree.hpp"
#include "ordext/linext.hpp"

namespace ordext::suite {
namespace {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t raw() { return gen_(); }
    std::size_t below(std::size_t bound) { return gen_() % bound; }
    bool chance(double p) { return double(gen_() >> 11) * 0x1.0p-53 < p; }

    std::vector<Elem> permutation(Elem n) {
        std::vector<Elem> perm(n);
        std::iota(perm.begin(), perm.end(), 0u);
        for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[below(i)]);
        return perm;
    }

private:
    std::mt19937_64 gen_;
};

FiniteRelation random_transitive_poset(Rng& rng, Elem n, double p) {
    auto perm = rng.permutation(n);
    std::vector<Edge> edges;
    for (Elem i = 0; i < n; ++i) {
        for (Elem j = i + 1; j < n; ++j) {
            if (rng.chance(p)) edges.emplace_back(perm[i], perm[j]);
        }
    }
    return transitive_closure(FiniteRelation(n, std::move(edges)));
}

std::vector<FiniteRelation> shared_corpus() {
    Rng rng(0x0c0ffee0'00000001ull);
    const double densities[] = {0.15, 0.3, 0.5, 0.75};
    std::vector<FiniteRelation> corpus;
    corpus.reserve(520);
    for (std::size_t i = 0; i < 520; ++i) {
        Elem n = static_cast<Elem>(1 + i % 9);
        corpus.push_back(random_transitive_poset(rng, n, densities[(i / 9) % 4]));
    }
    return corpus;
}

// Oracle: longest chain strictly below t, by exhaustive path enumeration
// (deliberately without memoization; a different algorithm than the ranked
// dynamic program it checks).
Elem oracle_longest_chain_below(const FiniteRelation& rel, Elem t) {
    Elem best = 0;
    for (Elem p : rel.predecessors(t)) {
        best = std::max(best, static_cast<Elem>(1 + oracle_longest_chain_below(rel, p)));
    }
    return best;
}

// Oracle: every linear extension by filtering all permutations.
std::vector<std::vector<Elem>> oracle_all_extensions(const FiniteRelation& rel) {
    const Elem n = rel.universe_size();
    std::vector<Elem> seq(n);
    std::iota(seq.begin(), seq.end(), 0u);
    std::vector<Elem> pos(n);
    std::vector<std::vector<Elem>> out;
    do {
        for (Elem p = 0; p < n; ++p) pos[seq[p]] = p;
        bool extends = std::all_of(rel.edges().begin(), rel.edges().end(),
                                   [&](const Edge& e) { return pos[e.first] < pos[e.second]; });
        if (extends) out.push_back(seq);
    } while (std::next_permutation(seq.begin(), seq.end()));
    return out;
}

CriterionResult criterion_rank_oracle(const std::vector<FiniteRelation>& corpus) {
    std::size_t elements = 0, mismatches = 0;
    for (const auto& rel : corpus) {
        RankFunction rk = compute_rank(rel);
        for (Elem t = 0; t < rel.universe_size(); ++t) {
            ++elements;
            if (rk.ranks[t] != oracle_longest_chain_below(rel, t)) ++mismatches;
        }
    }
    return {1, "rank function equals the exhaustive longest-chain oracle", mismatches == 0,
            std::to_string(corpus.size()) + " relations (n <= 9), " + std::to_string(elements) +
                " element ranks, " + std::to_string(mismatches) + " mismatches"};
}

CriterionResult criterion_decomposition(const std::vector<FiniteRelation>& corpus) {
    std::size_t levels_checked = 0, failures = 0;
    for (const auto& rel : corpus) {
        RankFunction rk = compute_rank(rel);
        Decomposition d = decompose(rel, rk);

        std::vector<bool> covered(rel.universe_size(), false);
        bool partition_ok = d.levels.size() == rk.level_count;
        for (const auto& level : d.levels) {
            ++levels_checked;
            if (level.empty()) partition_ok = false;
            for (Elem x : level) {
                if (x >= rel.universe_size() || covered[x]) partition_ok = false;
                else covered[x] = true;
            }
            if (!is_totally_unordered(rel, level)) ++failures;
        }
        if (!std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }) &&
            rel.universe_size() > 0) {
            partition_ok = false;
        }
        if (!partition_ok) ++failures;
    }
    return {2, "rank levels partition the universe into antichains", failures == 0,
            std::to_string(levels_checked) + " levels over " + std::to_string(corpus.size()) +
                " relations, " + std::to_string(failures) + " violations"};
}

CriterionResult criterion_well_extension(const std::vector<FiniteRelation>& corpus) {
    std::size_t failures = 0, audits = 0;
    for (const auto& rel : corpus) {
        const Elem n = rel.universe_size();
        FiniteRelation closed = transitive_closure(rel);
        RankFunction rk = compute_rank(closed);
        Decomposition d = decompose(closed, rk);
        ChoiceOrder choice = default_choice(d);
        TotalOrder w = extend_to_well_order(closed, d, choice);

        bool ok = w.size() == n;
        for (const auto& [a, b] : rel.edges()) ok = ok && w.before(a, b);
        for (Elem x = 0; x < n && ok; ++x) {
            ok = !w.before(x, x);
            for (Elem y = x + 1; y < n && ok; ++y) {
                ok = w.before(x, y) != w.before(y, x);
            }
        }
        for (Elem x = 0; x < n && ok; ++x) {
            for (Elem y = 0; y < n && ok; ++y) {
                for (Elem z = 0; z < n && ok; ++z) {
                    if (w.before(x, y) && w.before(y, z)) ok = w.before(x, z);
                }
            }
        }
        if (n <= 6) {
            ++audits;
            ok = ok && audit_well_extension(closed, d, choice, w).union_matches;
        }
        if (!ok) ++failures;
    }
    return {3, "well extension is sound and matches its stage-union audit", failures == 0,
            std::to_string(corpus.size()) + " relations, " + std::to_string(audits) +
                " exhaustive stage audits (n <= 6), " + std::to_string(failures) + " failures"};
}

CriterionResult criterion_least_element() {
    Rng rng(0x0c0ffee0'00000004ull);
    std::size_t subsets = 0, failures = 0;
    for (std::size_t i = 0; i < 50; ++i) {
        Elem n = static_cast<Elem>(1 + i % 7);
        FiniteRelation rel = random_transitive_poset(rng, n, 0.4);
        RankFunction rk = compute_rank(rel);
        Decomposition d = decompose(rel, rk);
        TotalOrder w = extend_to_well_order(rel, d, default_choice(d));

        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            std::vector<Elem> subset;
            for (Elem x = 0; x < n; ++x) {
                if (mask & (1u << x)) subset.push_back(x);
            }
            Elem sigma = rk.ranks[subset[0]];
            for (Elem x : subset) sigma = std::min(sigma, rk.ranks[x]);
            // Default choice enumerates levels ascending, so the choice-least
            // member of the lowest occupied level is its least element ID.
            Elem expected = rel.universe_size();
            for (Elem x : subset) {
                if (rk.ranks[x] == sigma && x < expected) expected = x;
            }
            ++subsets;
            if (least_element(w, subset) != expected) ++failures;
        }
    }
    return {4, "least element is the choice-least of the lowest occupied level", failures == 0,
            "50 relations (n <= 7), " + std::to_string(subsets) + " nonempty subsets, " +
                std::to_string(failures) + " mismatches"};
}

CriterionResult criterion_extension_enumeration() {
    Rng rng(0x0c0ffee0'00000005ull);
    std::size_t failures = 0, enumerated = 0;

    for (std::size_t i = 0; i < 100; ++i) {
        Elem n = static_cast<Elem>(1 + i % 6);
        FiniteRelation rel = random_transitive_poset(rng, n, 0.4);
        auto got = all_linear_extensions(rel);
        auto expected = oracle_all_extensions(rel);
        enumerated += expected.size();
        bool ok = got.size() == expected.size();
        for (std::size_t e = 0; ok && e < got.size(); ++e) {
            ok = got[e].order.sequence() == expected[e];
        }
        if (!ok) ++failures;
    }

    FiniteRelation diamond(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 3}});
    auto diamond_exts = all_linear_extensions(diamond);
    bool diamond_ok = diamond_exts.size() == 2 &&
                      diamond_exts[0].order.sequence() == std::vector<Elem>{0, 1, 2, 3} &&
                      diamond_exts[1].order.sequence() == std::vector<Elem>{0, 2, 1, 3};
    if (!diamond_ok) ++failures;

    return {5, "extension enumeration equals the permutation filter", failures == 0,
            "100 relations (n <= 6) plus the diamond, " + std::to_string(enumerated) +
                " extensions compared, " + std::to_string(failures) + " mismatches"};
}

CriterionResult criterion_antichain_construction() {
    Rng rng(0x0c0ffee0'00000006ull);
    std::size_t built = 0, failures = 0;
    for (Elem k = 2; k <= 10; ++k) {
        for (int instance = 0; instance < 5; ++instance) {
            const Elem n = k + 6;
            std::vector<Edge> edges;
            // Elements below k stay sources, hence pairwise incomparable.
            for (Elem a = 0; a < n; ++a) {
                for (Elem b = std::max(a + 1, k); b < n; ++b) {
                    if (rng.chance(0.3)) edges.emplace_back(a, b);
                }
            }
            FiniteRelation rel = transitive_closure(FiniteRelation(n, std::move(edges)));

            std::vector<Elem> antichain(k);
            std::iota(antichain.begin(), antichain.end(), 0u);
            auto result = build_antichain_extension(rel, antichain);
            ++built;

            bool ok = is_totally_unordered(rel, antichain);
            for (const auto& [a, b] : rel.edges()) ok = ok && result.extension.order.before(a, b);
            ok = ok && result.descending.elements.size() == static_cast<std::size_t>(k / 2 + 1);
            const auto& wit = result.descending.elements;
            for (std::size_t i = 0; i + 1 < wit.size(); ++i) {
                ok = ok && result.extension.order.before(wit[i + 1], wit[i]);
            }
            if (!ok) ++failures;
        }
    }
    return {6, "antichain inversion yields witnesses of length floor(k/2)+1", failures == 0,
            std::to_string(built) + " constructions (k = 2..10), " + std::to_string(failures) +
                " failures"};
}

bool antichain_subsequence_ok(const FiniteRelation& rel, const RankFunction& rk,
                              const WitnessChain& h) {
    for (std::size_t i = 0; i + 1 < h.elements.size(); ++i) {
        if (rk.ranks[h.elements[i]] > rk.ranks[h.elements[i + 1]]) return false;
    }
    return is_totally_unordered(rel, h.elements);
}

CriterionResult criterion_antichain_subsequence() {
    Rng rng(0x0c0ffee0'00000007ull);
    std::size_t instances = 0, failures = 0;

    for (std::size_t i = 0; i < 60; ++i) {
        Elem n = static_cast<Elem>(2 + i % 8);
        FiniteRelation rel = random_transitive_poset(rng, n, 0.35);
        RankFunction rk = compute_rank(rel);
        LinearExtension L = one_linear_extension(rel, rng.permutation(n));

        std::vector<Elem> s;
        for (Elem x = 0; x < n; ++x) {
            if (rng.chance(0.6)) s.push_back(x);
        }
        if (s.empty()) s.push_back(static_cast<Elem>(rng.below(n)));
        std::sort(s.begin(), s.end(), [&](Elem a, Elem b) {
            return L.order.position_of(a) > L.order.position_of(b);
        });

        ++instances;
        if (!antichain_subsequence_ok(rel, rk, extract_antichain_subsequence(rel, rk, L, s))) {
            ++failures;
        }
    }

    // Witnesses coming out of the antichain construction are descending
    // sequences in their own extensions; feed them back through.
    for (Elem k = 2; k <= 10; ++k) {
        const Elem n = k + 5;
        std::vector<Edge> edges;
        for (Elem a = 0; a < n; ++a) {
            for (Elem b = std::max(a + 1, k); b < n; ++b) {
                if (rng.chance(0.35)) edges.emplace_back(a, b);
            }
        }
        FiniteRelation rel = transitive_closure(FiniteRelation(n, std::move(edges)));
        std::vector<Elem> antichain(k);
        std::iota(antichain.begin(), antichain.end(), 0u);
        auto result = build_antichain_extension(rel, antichain);
        RankFunction rk = compute_rank(rel);
        ++instances;
        if (!antichain_subsequence_ok(
                rel, rk,
                extract_antichain_subsequence(rel, rk, result.extension,
                                              result.descending.elements))) {
            ++failures;
        }
    }

    // The infinite-tree chain prefix within the depth-6 truncation.
    {
        FiniteRelation trunc = lazytree::truncate(6);
        RankFunction rk = compute_rank(trunc);
        std::vector<Elem> nodes(trunc.universe_size());
        std::iota(nodes.begin(), nodes.end(), 0u);
        std::sort(nodes.begin(), nodes.end(), [](Elem a, Elem b) {
            return lazytree::l_compare(a, b) == lazytree::Cmp::before;
        });
        LinearExtension L{TotalOrder::from_sequence(nodes),
                          LinearExtension::Source::topological};

        std::vector<Elem> s;
        for (unsigned m = 0; lazytree::chain_value(m) < trunc.universe_size(); ++m) {
            s.push_back(static_cast<Elem>(lazytree::chain_value(m)));
        }
        auto h = extract_antichain_subsequence(trunc, rk, L, s);
        ++instances;
        if (!antichain_subsequence_ok(trunc, rk, h) || h.elements != s) ++failures;
    }

    return {7, "extracted antichain subsequences: nondecreasing ranks, incomparable range",
            failures == 0,
            std::to_string(instances) + " (extension, sequence) instances, " +
                std::to_string(failures) + " failures"};
}

// Literal reconstruction of the tree's non-well extension on a truncation:
// per level, every pair of members contributes all pairs from the
// larger member's closed descendant block into the smaller member's block;
// ancestor pairs are added on top.
CriterionResult criterion_tree_certificates() {
    bool ok = true;
    std::string detail;

    auto report = lazytree::verify_properties(12, 10000);
    ok = ok && report.all_ok();
    detail += std::to_string(report.pairs_checked) + " node pairs below 2^12";

    {
        const unsigned depth = 5;
        const Elem count = (1u << (depth + 1)) - 1;
        std::vector<std::vector<Elem>> block(count);
        for (Elem v = count; v-- > 0;) {
            block[v].push_back(v);
            for (Elem c : {2 * v + 1, 2 * v + 2}) {
                if (c < count) block[v].insert(block[v].end(), block[c].begin(), block[c].end());
            }
        }
        std::vector<std::vector<bool>> lit(count, std::vector<bool>(count, false));
        for (unsigned n = 0; n <= depth; ++n) {
            const Elem lo = (1u << n) - 1;
            const Elem hi = (1u << (n + 1)) - 2;
            for (Elem xi = lo; xi <= hi; ++xi) {
                for (Elem xj = xi + 1; xj <= hi; ++xj) {
                    for (Elem a : block[xj]) {
                        for (Elem b : block[xi]) lit[a][b] = true;
                    }
                }
            }
        }
        for (Elem x = 0; x < count; ++x) {
            for (Elem y = 0; y < count; ++y) {
                if (lazytree::is_ancestor(x, y)) lit[x][y] = true;
            }
        }

        std::size_t mismatches = 0;
        for (Elem x = 0; x < count; ++x) {
            for (Elem y = 0; y < count; ++y) {
                if (x == y) {
                    if (lit[x][y]) ++mismatches;
                    continue;
                }
                bool closed_form = lazytree::l_compare(x, y) == lazytree::Cmp::before;
                if (lit[x][y] == lit[y][x] || closed_form != lit[x][y]) ++mismatches;
            }
        }
        ok = ok && mismatches == 0;
        detail += ", literal depth-5 reconstruction " +
                  std::string(mismatches == 0 ? "matches" : "MISMATCHES");
    }

    bool descending = true;
    for (unsigned n = 0; n + 1 < 20; ++n) {
        descending = descending && lazytree::l_compare(lazytree::chain_value(n + 1),
                                                       lazytree::chain_value(n)) ==
                                       lazytree::Cmp::before;
    }
    ok = ok && descending;
    detail += descending ? ", chain descending for n < 20" : ", chain NOT descending";

    bool cards_ok = true;
    for (unsigned n = 0; n < 12; ++n) {
        const lazytree::Node lo = (lazytree::Node(1) << n) - 1;
        const lazytree::Node hi = (lazytree::Node(1) << (n + 1)) - 2;
        lazytree::Node card = 0;
        for (lazytree::Node x = lo; x <= hi; ++x) {
            if (lazytree::level(x) == n) ++card;
        }
        cards_ok = cards_ok && card == (lazytree::Node(1) << n);
    }
    ok = ok && cards_ok;
    detail += cards_ok ? ", level cardinalities 2^n for n < 12" : ", level cardinality OFF";

    return {8, "infinite-tree certificates: predicates, literal comparator, chain", ok, detail};
}

}  // namespace

std::vector<CriterionResult> run_all() {
    auto corpus = shared_corpus();
    std::vector<CriterionResult> results;
    results.push_back(criterion_rank_oracle(corpus));
    results.push_back(criterion_decomposition(corpus));
    results.push_back(criterion_well_extension(corpus));
    results.push_back(criterion_least_element());
    results.push_back(criterion_extension_enumeration());
    results.push_back(criterion_antichain_construction());
    results.push_back(criterion_antichain_subsequence());
    results.push_back(criterion_tree_certificates());
    return results;
}

}  // namespace ordext::suite
