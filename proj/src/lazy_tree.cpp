#include "ordext/lazy_tree.hpp"

#include <bit>
#include <random>
#include <stdexcept>

namespace ordext::lazytree {

unsigned level(Node x) {
    // 2^n - 1 <= x <= 2^(n+1) - 2 is exactly 2^n <= x+1 < 2^(n+1).
    return std::bit_width(x + 1) - 1;
}

bool is_ancestor(Node x, Node y) {
    if (y <= x) return false;
    while (y > x) y = parent(y);
    return y == x;
}

namespace {

Node ancestor_at_level(Node x, unsigned target) {
    for (unsigned l = level(x); l > target; --l) x = parent(x);
    return x;
}

}  // namespace

Cmp l_compare(Node x, Node y) {
    if (x == y) return Cmp::equal;
    const unsigned lx = level(x);
    const unsigned ly = level(y);
    const unsigned common = lx < ly ? lx : ly;
    Node ax = ancestor_at_level(x, common);
    Node ay = ancestor_at_level(y, common);
    if (ax == ay) {
        // One is an ancestor of the other; the ancestor comes first.
        return lx < ly ? Cmp::before : Cmp::after;
    }
    while (ax != ay) {
        // Descendant blocks of same-level nodes are disjoint intervals in
        // numeric order, so any divergence level gives the same verdict;
        // compare where the chains merge.
        Node px = parent(ax);
        Node py = parent(ay);
        if (px == py) break;
        ax = px;
        ay = py;
    }
    return ax > ay ? Cmp::before : Cmp::after;
}

Node chain_value(unsigned n) {
    if (n > 61) {
        throw std::overflow_error("chain value 2^(n+2) - 3 exceeds 64 bits for n = " +
                                  std::to_string(n));
    }
    return (Node(1) << (n + 2)) - 3;
}

FiniteRelation truncate(unsigned depth) {
    if (depth > 16) throw std::invalid_argument("truncation depth is capped at 16");
    const Node count = (Node(1) << (depth + 1)) - 1;
    std::vector<Edge> edges;
    for (Node y = 1; y < count; ++y) {
        for (Node a = parent(y);; a = parent(a)) {
            edges.emplace_back(static_cast<Elem>(a), static_cast<Elem>(y));
            if (a == 0) break;
        }
    }
    return FiniteRelation(static_cast<Elem>(count), std::move(edges));
}

TreeReport verify_properties(unsigned depth_bound, std::size_t sample_count, std::uint64_t seed) {
    if (depth_bound > 13) {
        throw std::invalid_argument("exhaustive pair scan is capped at depth 13");
    }
    TreeReport report;
    report.depth_bound = depth_bound;
    const Node bound = Node(1) << depth_bound;
    report.node_bound = bound;

    auto flag = [&](std::string what) { report.violations.push_back(std::move(what)); };

    // Ancestor bitsets built from single parent steps only, then compared
    // against the predicate for every ordered pair.
    const std::size_t words = (static_cast<std::size_t>(bound) + 63) / 64;
    std::vector<std::uint64_t> anc(static_cast<std::size_t>(bound) * words, 0);
    for (Node y = 1; y < bound; ++y) {
        auto* row = anc.data() + static_cast<std::size_t>(y) * words;
        Node p = parent(y);
        const auto* prow = anc.data() + static_cast<std::size_t>(p) * words;
        for (std::size_t w = 0; w < words; ++w) row[w] = prow[w];
        row[p / 64] |= std::uint64_t(1) << (p % 64);
    }

    report.ancestor_paths_ok = true;
    report.respects_numeric_order = true;
    for (Node y = 0; y < bound; ++y) {
        const auto* row = anc.data() + static_cast<std::size_t>(y) * words;
        for (Node x = 0; x < bound; ++x) {
            bool expected = (row[x / 64] >> (x % 64)) & 1;
            bool got = is_ancestor(x, y);
            ++report.pairs_checked;
            if (expected != got) {
                report.ancestor_paths_ok = false;
                flag("ancestor mismatch at (" + std::to_string(x) + "," + std::to_string(y) + ")");
            }
            if (got && x >= y) {
                report.respects_numeric_order = false;
                flag("related pair violating numeric order at (" + std::to_string(x) + "," +
                     std::to_string(y) + ")");
            }
        }
    }

    report.level_sets_ok = true;
    for (unsigned n = 0; n <= depth_bound; ++n) {
        const Node lo = (Node(1) << n) - 1;
        const Node hi = (Node(1) << (n + 1)) - 2;
        Node cardinality = 0;
        for (Node x = lo; x <= hi && x < bound; ++x) {
            if (level(x) != n) {
                report.level_sets_ok = false;
                flag("level formula fails at " + std::to_string(x));
            }
            ++cardinality;
        }
        if (hi < bound && cardinality != (Node(1) << n)) {
            report.level_sets_ok = false;
            flag("level " + std::to_string(n) + " has cardinality " + std::to_string(cardinality));
        }
        if (lo < bound) report.max_level_observed = n;
    }

    report.chain_antichain_ok = true;
    std::vector<Node> chain_members;
    for (unsigned n = 0; chain_value(n) < bound; ++n) chain_members.push_back(chain_value(n));
    for (std::size_t i = 0; i < chain_members.size(); ++i) {
        for (std::size_t j = i + 1; j < chain_members.size(); ++j) {
            if (is_ancestor(chain_members[i], chain_members[j]) ||
                is_ancestor(chain_members[j], chain_members[i])) {
                report.chain_antichain_ok = false;
                flag("chain members " + std::to_string(chain_members[i]) + " and " +
                     std::to_string(chain_members[j]) + " are comparable");
            }
        }
    }

    std::mt19937_64 gen(seed);
    auto draw = [&]() { return gen() % bound; };

    report.l_total_ok = true;
    report.l_transitive_ok = true;
    report.l_extends_ancestors_ok = true;
    for (std::size_t i = 0; i < sample_count; ++i) {
        ++report.samples_checked;

        Node x = draw(), y = draw();
        Cmp xy = l_compare(x, y);
        Cmp yx = l_compare(y, x);
        bool consistent = x == y ? (xy == Cmp::equal && yx == Cmp::equal)
                                 : ((xy == Cmp::before && yx == Cmp::after) ||
                                    (xy == Cmp::after && yx == Cmp::before));
        if (!consistent) {
            report.l_total_ok = false;
            flag("comparator not a strict total order at (" + std::to_string(x) + "," +
                 std::to_string(y) + ")");
        }

        Node a = draw(), b = draw(), c = draw();
        if (l_compare(a, b) == Cmp::before && l_compare(b, c) == Cmp::before &&
            l_compare(a, c) != Cmp::before) {
            report.l_transitive_ok = false;
            flag("comparator transitivity fails at (" + std::to_string(a) + "," +
                 std::to_string(b) + "," + std::to_string(c) + ")");
        }

        Node d = draw();
        if (d != 0) {
            // Every strict ancestor must compare before its descendant.
            Node steps = gen() % level(d) + 1;
            Node anc_node = d;
            for (Node s = 0; s < steps; ++s) anc_node = parent(anc_node);
            if (l_compare(anc_node, d) != Cmp::before || l_compare(d, anc_node) != Cmp::after) {
                report.l_extends_ancestors_ok = false;
                flag("comparator does not extend the ancestor order at (" +
                     std::to_string(anc_node) + "," + std::to_string(d) + ")");
            }
        }
    }

    return report;
}

}  // namespace ordext::lazytree
