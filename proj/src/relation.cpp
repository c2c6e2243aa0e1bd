#include "ordext/relation.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <functional>
#include <queue>

namespace ordext {

FiniteRelation::FiniteRelation(Elem universe_size, std::vector<Edge> edge_list,
                               std::vector<std::string> labels)
    : n_(universe_size), edges_(std::move(edge_list)), labels_(std::move(labels)) {
    for (const auto& [a, b] : edges_) {
        if (a >= n_ || b >= n_) {
            throw std::invalid_argument("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                        ") has an endpoint outside universe of size " +
                                        std::to_string(n_));
        }
    }
    if (!labels_.empty() && labels_.size() != n_) {
        throw std::invalid_argument("label table size does not match universe size");
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    succ_.resize(n_);
    pred_.resize(n_);
    for (const auto& [a, b] : edges_) {
        succ_[a].push_back(b);
        pred_[b].push_back(a);
    }
    // succ_ lists come out sorted from the sorted edge sweep; pred_ may not.
    for (auto& p : pred_) std::sort(p.begin(), p.end());
}

bool FiniteRelation::related(Elem a, Elem b) const {
    if (a >= n_ || b >= n_) throw std::out_of_range("element outside universe");
    const auto& s = succ_[a];
    return std::binary_search(s.begin(), s.end(), b);
}

std::span<const Elem> FiniteRelation::successors(Elem a) const {
    if (a >= n_) throw std::out_of_range("element outside universe");
    return succ_[a];
}

std::span<const Elem> FiniteRelation::predecessors(Elem b) const {
    if (b >= n_) throw std::out_of_range("element outside universe");
    return pred_[b];
}

namespace {

std::string_view strip_comment(std::string_view line) {
    auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    return line;
}

bool blank(std::string_view line) {
    return std::all_of(line.begin(), line.end(),
                       [](unsigned char c) { return std::isspace(c); });
}

std::vector<std::uint64_t> parse_fields(std::string_view line, std::size_t line_no) {
    std::vector<std::uint64_t> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
        if (ec != std::errc{} || ptr != line.data() + j) {
            throw ParseError(line_no, "expected a decimal number, got '" +
                                          std::string(line.substr(i, j - i)) + "'");
        }
        out.push_back(value);
        i = j;
    }
    return out;
}

}  // namespace

FiniteRelation parse_relation(std::string_view text) {
    std::optional<Elem> universe;
    std::vector<Edge> edges;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                                              : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        line = strip_comment(line);
        if (blank(line)) continue;

        auto fields = parse_fields(line, line_no);
        if (!universe.has_value()) {
            if (fields.size() != 1) {
                throw ParseError(line_no, "first line must hold exactly the universe size");
            }
            if (fields[0] > 0xFFFFFFFFull) throw ParseError(line_no, "universe size too large");
            universe = static_cast<Elem>(fields[0]);
            continue;
        }
        if (fields.size() != 2) {
            throw ParseError(line_no, "expected an edge line 'a b'");
        }
        if (fields[0] >= *universe || fields[1] >= *universe) {
            throw ParseError(line_no, "endpoint out of universe of size " +
                                          std::to_string(*universe));
        }
        edges.emplace_back(static_cast<Elem>(fields[0]), static_cast<Elem>(fields[1]));
    }

    if (!universe.has_value()) throw ParseError(line_no, "missing universe size");
    return FiniteRelation(*universe, std::move(edges));
}

bool is_irreflexive(const FiniteRelation& rel) {
    return std::none_of(rel.edges().begin(), rel.edges().end(),
                        [](const Edge& e) { return e.first == e.second; });
}

std::optional<std::array<Elem, 3>> find_transitivity_violation(const FiniteRelation& rel) {
    for (const auto& [a, b] : rel.edges()) {
        for (Elem c : rel.successors(b)) {
            if (!rel.related(a, c)) return std::array<Elem, 3>{a, b, c};
        }
    }
    return std::nullopt;
}

bool is_transitive(const FiniteRelation& rel) {
    return !find_transitivity_violation(rel).has_value();
}

WellFoundedness check_well_founded(const FiniteRelation& rel) {
    const Elem n = rel.universe_size();
    std::vector<std::size_t> indegree(n);
    std::priority_queue<Elem, std::vector<Elem>, std::greater<>> ready;
    for (Elem v = 0; v < n; ++v) {
        indegree[v] = rel.predecessors(v).size();
        if (indegree[v] == 0) ready.push(v);
    }

    WellFoundedness result;
    result.elimination_order.reserve(n);
    std::vector<bool> eliminated(n, false);
    while (!ready.empty()) {
        Elem v = ready.top();
        ready.pop();
        eliminated[v] = true;
        result.elimination_order.push_back(v);
        for (Elem s : rel.successors(v)) {
            if (--indegree[s] == 0) ready.push(s);
        }
    }
    if (result.elimination_order.size() == n) return result;

    // Every leftover element keeps a leftover predecessor; walking those
    // predecessors must revisit a node, closing a cycle.
    Elem start = 0;
    while (eliminated[start]) ++start;
    std::vector<Elem> walk;
    std::vector<std::size_t> seen_at(n, SIZE_MAX);
    Elem cur = start;
    while (seen_at[cur] == SIZE_MAX) {
        seen_at[cur] = walk.size();
        walk.push_back(cur);
        Elem next = n;
        for (Elem p : rel.predecessors(cur)) {
            if (!eliminated[p]) {
                next = p;
                break;
            }
        }
        cur = next;  // guaranteed < n
    }
    // walk[k+1] -> walk[k] are edges; reversing the looped slice yields the
    // cycle in edge direction.
    std::vector<Elem> cycle(walk.begin() + static_cast<std::ptrdiff_t>(seen_at[cur]), walk.end());
    std::reverse(cycle.begin(), cycle.end());
    auto min_it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), min_it, cycle.end());

    result.elimination_order.clear();
    result.cycle = WitnessChain{WitnessChain::Kind::cycle, std::move(cycle)};
    return result;
}

bool is_well_founded(const FiniteRelation& rel) {
    return check_well_founded(rel).ok();
}

std::vector<Elem> minimal_elements(const FiniteRelation& rel, std::span<const Elem> subset) {
    std::vector<Elem> members(subset.begin(), subset.end());
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (!members.empty() && members.back() >= rel.universe_size()) {
        throw std::out_of_range("subset member outside universe");
    }

    std::vector<Elem> out;
    for (Elem t : members) {
        bool minimal = true;
        for (Elem x : rel.predecessors(t)) {
            if (std::binary_search(members.begin(), members.end(), x)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(t);
    }
    return out;
}

namespace {

constexpr std::size_t kWordBits = 64;

// Row-major bitset of n rows; row v holds the strict reachability set of v.
struct ReachBits {
    std::size_t words_per_row;
    std::vector<std::uint64_t> bits;

    explicit ReachBits(Elem n)
        : words_per_row((n + kWordBits - 1) / kWordBits), bits(std::size_t(n) * words_per_row) {}

    std::uint64_t* row(Elem v) { return bits.data() + std::size_t(v) * words_per_row; }
    void set(Elem v, Elem u) { row(v)[u / kWordBits] |= std::uint64_t(1) << (u % kWordBits); }
    void merge(Elem v, Elem u) {
        auto* dst = row(v);
        const auto* src = row(u);
        for (std::size_t w = 0; w < words_per_row; ++w) dst[w] |= src[w];
    }
};

}  // namespace

FiniteRelation transitive_closure(const FiniteRelation& rel) {
    const Elem n = rel.universe_size();
    ReachBits reach(n);

    auto wf = check_well_founded(rel);
    if (wf.ok()) {
        // Descendants first: each row is the union of successor rows.
        for (auto it = wf.elimination_order.rbegin(); it != wf.elimination_order.rend(); ++it) {
            Elem v = *it;
            for (Elem s : rel.successors(v)) {
                reach.set(v, s);
                reach.merge(v, s);
            }
        }
    } else {
        // Cyclic input: plain DFS per node over paths of length >= 1.
        std::vector<bool> visited(n);
        std::vector<Elem> stack;
        for (Elem v = 0; v < n; ++v) {
            std::fill(visited.begin(), visited.end(), false);
            stack.assign(rel.successors(v).begin(), rel.successors(v).end());
            while (!stack.empty()) {
                Elem u = stack.back();
                stack.pop_back();
                if (visited[u]) continue;
                visited[u] = true;
                reach.set(v, u);
                for (Elem s : rel.successors(u)) {
                    if (!visited[s]) stack.push_back(s);
                }
            }
        }
    }

    std::vector<Edge> closed;
    closed.reserve(rel.edge_count());
    for (Elem v = 0; v < n; ++v) {
        const auto* row = reach.row(v);
        for (std::size_t w = 0; w < reach.words_per_row; ++w) {
            std::uint64_t bitsw = row[w];
            while (bitsw != 0) {
                unsigned bit = static_cast<unsigned>(std::countr_zero(bitsw));
                bitsw &= bitsw - 1;
                closed.emplace_back(v, static_cast<Elem>(w * kWordBits + bit));
            }
        }
    }

    std::vector<std::string> labels;
    if (rel.has_labels()) {
        labels.reserve(n);
        for (Elem v = 0; v < n; ++v) labels.push_back(rel.label(v));
    }
    return FiniteRelation(n, std::move(closed), std::move(labels));
}

std::optional<WitnessChain> find_descending_chain(const FiniteRelation& rel, std::size_t max_len) {
    auto wf = check_well_founded(rel);
    if (wf.ok()) return std::nullopt;

    const auto& cycle = wf.cycle->elements;
    const std::size_t k = cycle.size();
    std::vector<Elem> chain;
    chain.reserve(max_len);
    // cycle[i] -> cycle[i+1] are edges, so walking the cycle backwards puts
    // each chain element strictly below its predecessor.
    for (std::size_t i = 0; i < max_len; ++i) {
        chain.push_back(cycle[(k - i % k) % k]);
    }
    return WitnessChain{WitnessChain::Kind::descending, std::move(chain)};
}

bool are_incomparable(const FiniteRelation& rel, Elem x, Elem y) {
    if (x == y) return false;
    return !rel.related(x, y) && !rel.related(y, x);
}

bool is_totally_unordered(const FiniteRelation& rel, std::span<const Elem> subset) {
    for (std::size_t i = 0; i < subset.size(); ++i) {
        for (std::size_t j = i + 1; j < subset.size(); ++j) {
            if (subset[i] == subset[j]) continue;
            if (!are_incomparable(rel, subset[i], subset[j])) return false;
        }
    }
    return true;
}

namespace {

std::vector<Elem> max_antichain_exhaustive(const FiniteRelation& rel) {
    const Elem n = rel.universe_size();
    std::vector<std::uint32_t> comparable(n, 0);
    for (const auto& [a, b] : rel.edges()) {
        comparable[a] |= std::uint32_t(1) << b;
        comparable[b] |= std::uint32_t(1) << a;
    }

    std::uint32_t best_mask = 0;
    int best_size = 0;
    const std::uint32_t limit = n >= 32 ? 0xFFFFFFFFu : (std::uint32_t(1) << n) - 1;
    for (std::uint32_t mask = 0; mask <= limit; ++mask) {
        if (std::popcount(mask) <= best_size) {
            if (mask == limit) break;
            continue;
        }
        bool independent = true;
        for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
            Elem x = static_cast<Elem>(std::countr_zero(rest));
            if ((comparable[x] & mask) != 0) {
                independent = false;
                break;
            }
        }
        if (independent) {
            best_mask = mask;
            best_size = std::popcount(mask);
        }
        if (mask == limit) break;
    }

    std::vector<Elem> out;
    for (std::uint32_t rest = best_mask; rest != 0; rest &= rest - 1) {
        out.push_back(static_cast<Elem>(std::countr_zero(rest)));
    }
    return out;
}

// Hopcroft-Karp maximum matching on the split graph (left copy -> right copy
// per relation edge), then the Koenig cover; elements with both copies
// uncovered form a maximum antichain of the transitive relation.
std::vector<Elem> max_antichain_matching(const FiniteRelation& rel) {
    const Elem n = rel.universe_size();
    constexpr Elem kFree = 0xFFFFFFFFu;
    std::vector<Elem> match_left(n, kFree);   // left v -> right
    std::vector<Elem> match_right(n, kFree);  // right v -> left
    std::vector<std::uint32_t> dist(n);

    auto bfs = [&]() {
        std::vector<Elem> queue;
        for (Elem v = 0; v < n; ++v) {
            if (match_left[v] == kFree) {
                dist[v] = 0;
                queue.push_back(v);
            } else {
                dist[v] = 0xFFFFFFFFu;
            }
        }
        bool found = false;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            Elem v = queue[qi];
            for (Elem u : rel.successors(v)) {
                Elem w = match_right[u];
                if (w == kFree) {
                    found = true;
                } else if (dist[w] == 0xFFFFFFFFu) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        return found;
    };

    std::function<bool(Elem)> augment = [&](Elem v) {
        for (Elem u : rel.successors(v)) {
            Elem w = match_right[u];
            if (w == kFree || (dist[w] == dist[v] + 1 && augment(w))) {
                match_left[v] = u;
                match_right[u] = v;
                return true;
            }
        }
        dist[v] = 0xFFFFFFFFu;
        return false;
    };

    while (bfs()) {
        for (Elem v = 0; v < n; ++v) {
            if (match_left[v] == kFree) augment(v);
        }
    }

    // Alternating reachability from unmatched left vertices.
    std::vector<bool> left_reached(n, false), right_reached(n, false);
    std::vector<Elem> queue;
    for (Elem v = 0; v < n; ++v) {
        if (match_left[v] == kFree) {
            left_reached[v] = true;
            queue.push_back(v);
        }
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        Elem v = queue[qi];
        for (Elem u : rel.successors(v)) {
            if (u == match_left[v] || right_reached[u]) continue;
            right_reached[u] = true;
            Elem w = match_right[u];
            if (w != kFree && !left_reached[w]) {
                left_reached[w] = true;
                queue.push_back(w);
            }
        }
    }

    // Cover = (left not reached) plus (right reached); take the uncovered.
    std::vector<Elem> out;
    for (Elem v = 0; v < n; ++v) {
        if (left_reached[v] && !right_reached[v]) out.push_back(v);
    }
    return out;
}

}  // namespace

std::vector<Elem> max_antichain(const FiniteRelation& rel, Elem exhaustive_limit) {
    if (auto viol = find_transitivity_violation(rel)) {
        throw NotTransitiveError((*viol)[0], (*viol)[1], (*viol)[2]);
    }
    auto wf = check_well_founded(rel);
    if (!wf.ok()) throw NotWellFoundedError(*wf.cycle);

    if (rel.universe_size() <= exhaustive_limit && rel.universe_size() < 32) {
        return max_antichain_exhaustive(rel);
    }
    return max_antichain_matching(rel);
}

}  // namespace ordext
