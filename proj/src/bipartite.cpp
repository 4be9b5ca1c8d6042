#include "reserve/bipartite.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace reserve {

void validate_graph(const BipartiteGraph& g) {
    if (g.n_left < 0)
        fail(Errc::PreconditionViolated, "negative left node count");
    for (int cap : g.right_capacity)
        if (cap < 0)
            fail(Errc::PreconditionViolated, "negative right capacity");
    for (const auto& [l, r] : g.edges)
        if (l < 0 || l >= g.n_left || r < 0 || r >= g.n_right())
            fail(Errc::PreconditionViolated, "edge references undeclared node");
}

namespace {

std::vector<std::vector<int>> adjacency(const BipartiteGraph& g) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(g.n_left));
    for (const auto& [l, r] : g.edges) {
        auto& row = adj[static_cast<size_t>(l)];
        if (std::find(row.begin(), row.end(), r) == row.end())
            row.push_back(r);
    }
    return adj;
}

} // namespace

BipartiteMatching max_cardinality_matching(const BipartiteGraph& g) {
    validate_graph(g);
    const auto adj = adjacency(g);

    // Expand each right node into one slot per unit of capacity.
    std::vector<int> slot_owner; // slot -> right node
    std::vector<int> first_slot(static_cast<size_t>(g.n_right()) + 1, 0);
    for (int r = 0; r < g.n_right(); ++r) {
        first_slot[static_cast<size_t>(r)] = static_cast<int>(slot_owner.size());
        for (int k = 0; k < g.right_capacity[static_cast<size_t>(r)]; ++k)
            slot_owner.push_back(r);
    }
    first_slot[static_cast<size_t>(g.n_right())] = static_cast<int>(slot_owner.size());

    std::vector<int> slot_match(slot_owner.size(), -1); // slot -> left
    std::vector<int> left_match(static_cast<size_t>(g.n_left), -1);
    std::vector<bool> visited(static_cast<size_t>(g.n_left), false);

    std::function<bool(int)> try_augment = [&](int l) -> bool {
        visited[static_cast<size_t>(l)] = true;
        // First pass: a free slot anywhere.
        for (int r : adj[static_cast<size_t>(l)])
            for (int s = first_slot[static_cast<size_t>(r)]; s < first_slot[static_cast<size_t>(r) + 1]; ++s)
                if (slot_match[static_cast<size_t>(s)] == -1) {
                    slot_match[static_cast<size_t>(s)] = l;
                    left_match[static_cast<size_t>(l)] = s;
                    return true;
                }
        // Second pass: evict and re-augment.
        for (int r : adj[static_cast<size_t>(l)])
            for (int s = first_slot[static_cast<size_t>(r)]; s < first_slot[static_cast<size_t>(r) + 1]; ++s) {
                const int other = slot_match[static_cast<size_t>(s)];
                if (!visited[static_cast<size_t>(other)] && try_augment(other)) {
                    slot_match[static_cast<size_t>(s)] = l;
                    left_match[static_cast<size_t>(l)] = s;
                    return true;
                }
            }
        return false;
    };

    BipartiteMatching result;
    result.left_to_right.assign(static_cast<size_t>(g.n_left), std::nullopt);
    for (int l = 0; l < g.n_left; ++l) {
        std::fill(visited.begin(), visited.end(), false);
        if (try_augment(l))
            ++result.size;
    }
    for (int l = 0; l < g.n_left; ++l)
        if (left_match[static_cast<size_t>(l)] != -1)
            result.left_to_right[static_cast<size_t>(l)] =
                slot_owner[static_cast<size_t>(left_match[static_cast<size_t>(l)])];
    return result;
}

AssignmentResult solve_assignment(const BipartiteGraph& g, const WeightedAssignment& w) {
    validate_graph(g);
    if (w.n_left() != g.n_left || w.n_right() != g.n_right())
        fail(Errc::PreconditionViolated, "weight table dimensions differ from graph");

    // Allowed edges: present in the graph and not forbidden by the weights.
    std::vector<std::vector<std::pair<int, LexWeight>>> adj(static_cast<size_t>(g.n_left));
    for (const auto& [l, r] : g.edges)
        if (auto weight = w.weight(l, r))
            adj[static_cast<size_t>(l)].emplace_back(r, *weight);

    std::vector<std::optional<int>> assigned(static_cast<size_t>(g.n_left), std::nullopt);
    std::vector<int> right_used(static_cast<size_t>(g.n_right()), 0);
    std::vector<std::vector<int>> right_holders(static_cast<size_t>(g.n_right()));

    const LexWeight minus_inf{std::numeric_limits<long long>::min() / 4,
                              std::numeric_limits<long long>::min() / 4};

    // Successive augmentation along the maximum-gain alternating path, found
    // by Bellman-Ford over the residual graph (gains can be negative on
    // reverse edges, the graphs are tiny). Stops when the best path gain is
    // no longer strictly positive.
    const int n_nodes = g.n_left + g.n_right();
    while (true) {
        std::vector<LexWeight> gain(static_cast<size_t>(n_nodes), minus_inf);
        // pred[node]: the residual edge used to reach it.
        std::vector<std::pair<int, int>> pred(static_cast<size_t>(n_nodes), {-1, -1});
        for (int l = 0; l < g.n_left; ++l)
            if (!assigned[static_cast<size_t>(l)])
                gain[static_cast<size_t>(l)] = LexWeight{};

        for (int pass = 0; pass < n_nodes; ++pass) {
            bool changed = false;
            for (int l = 0; l < g.n_left; ++l) {
                if (gain[static_cast<size_t>(l)] == minus_inf)
                    continue;
                for (const auto& [r, weight] : adj[static_cast<size_t>(l)]) {
                    if (assigned[static_cast<size_t>(l)] && *assigned[static_cast<size_t>(l)] == r)
                        continue; // matched edge is reverse-only
                    const LexWeight candidate = gain[static_cast<size_t>(l)] + weight;
                    const size_t node = static_cast<size_t>(g.n_left + r);
                    if (candidate > gain[node]) {
                        gain[node] = candidate;
                        pred[node] = {l, r};
                        changed = true;
                    }
                }
            }
            for (int r = 0; r < g.n_right(); ++r) {
                const size_t node = static_cast<size_t>(g.n_left + r);
                if (gain[node] == minus_inf)
                    continue;
                for (int holder : right_holders[static_cast<size_t>(r)]) {
                    LexWeight held_weight{};
                    for (const auto& [rr, weight] : adj[static_cast<size_t>(holder)])
                        if (rr == r) {
                            held_weight = weight;
                            break;
                        }
                    const LexWeight candidate = gain[node] - held_weight;
                    if (candidate > gain[static_cast<size_t>(holder)]) {
                        gain[static_cast<size_t>(holder)] = candidate;
                        pred[static_cast<size_t>(holder)] = {g.n_left + r, r};
                        changed = true;
                    }
                }
            }
            if (!changed)
                break;
        }

        int best_right = -1;
        LexWeight best_gain{};
        for (int r = 0; r < g.n_right(); ++r) {
            if (right_used[static_cast<size_t>(r)] >= g.right_capacity[static_cast<size_t>(r)])
                continue;
            const size_t node = static_cast<size_t>(g.n_left + r);
            if (gain[node] > best_gain) {
                best_gain = gain[node];
                best_right = r;
            }
        }
        if (best_right == -1)
            break;

        // Walk the path backwards, flipping assignments.
        int r = best_right;
        while (true) {
            const auto [from, via] = pred[static_cast<size_t>(g.n_left + r)];
            const int l = from; // a left node by construction
            const int previous_r = assigned[static_cast<size_t>(l)] ? *assigned[static_cast<size_t>(l)] : -1;
            assigned[static_cast<size_t>(l)] = r;
            auto& holders = right_holders[static_cast<size_t>(r)];
            holders.push_back(l);
            if (previous_r == -1)
                break;
            auto& old_holders = right_holders[static_cast<size_t>(previous_r)];
            old_holders.erase(std::find(old_holders.begin(), old_holders.end(), l));
            r = previous_r;
        }
        ++right_used[static_cast<size_t>(best_right)];
    }

    AssignmentResult result;
    result.assigned = assigned;
    for (int l = 0; l < g.n_left; ++l)
        if (assigned[static_cast<size_t>(l)])
            for (const auto& [r, weight] : adj[static_cast<size_t>(l)])
                if (r == *assigned[static_cast<size_t>(l)]) {
                    result.objective = result.objective + weight;
                    break;
                }
    return result;
}

} // namespace reserve
