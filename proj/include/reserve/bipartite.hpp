#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "reserve/error.hpp"

namespace reserve {

/// Bipartite graph with unit-demand left nodes and capacitated right nodes.
struct BipartiteGraph {
    int n_left = 0;
    std::vector<int> right_capacity;
    std::vector<std::pair<int, int>> edges; // (left, right)

    int n_right() const { return static_cast<int>(right_capacity.size()); }
};

void validate_graph(const BipartiteGraph& g);

struct BipartiteMatching {
    int size = 0;
    std::vector<std::optional<int>> left_to_right;
};

/// Maximum-cardinality matching respecting right capacities, by augmenting
/// alternating paths. Deterministic: left nodes and adjacency are scanned in
/// declaration order.
BipartiteMatching max_cardinality_matching(const BipartiteGraph& g);

/// Additive, totally ordered edge weight: a count of large units and a count
/// of small units, compared lexicographically. Models weight schemes of the
/// form "kappa much greater than epsilon" without floating point.
struct LexWeight {
    long long primary = 0;
    long long secondary = 0;

    friend LexWeight operator+(LexWeight a, LexWeight b) {
        return {a.primary + b.primary, a.secondary + b.secondary};
    }
    friend LexWeight operator-(LexWeight a, LexWeight b) {
        return {a.primary - b.primary, a.secondary - b.secondary};
    }
    LexWeight operator-() const { return {-primary, -secondary}; }
    auto operator<=>(const LexWeight&) const = default;
};

/// Edge weights for an assignment problem over a BipartiteGraph. Pairs
/// without a weight are forbidden; leaving a left node unassigned always
/// carries the zero weight.
class WeightedAssignment {
public:
    WeightedAssignment() = default;
    WeightedAssignment(int n_left, int n_right)
        : n_left_(n_left), n_right_(n_right),
          weights_(static_cast<size_t>(n_left) * static_cast<size_t>(n_right), std::nullopt) {}

    void set(int l, int r, LexWeight w) { weights_[index(l, r)] = w; }
    void set_forbidden(int l, int r) { weights_[index(l, r)] = std::nullopt; }
    std::optional<LexWeight> weight(int l, int r) const { return weights_[index(l, r)]; }

    int n_left() const { return n_left_; }
    int n_right() const { return n_right_; }

private:
    size_t index(int l, int r) const {
        return static_cast<size_t>(l) * static_cast<size_t>(n_right_) + static_cast<size_t>(r);
    }
    int n_left_ = 0;
    int n_right_ = 0;
    std::vector<std::optional<LexWeight>> weights_;
};

struct AssignmentResult {
    std::vector<std::optional<int>> assigned; // per left node
    LexWeight objective;
};

/// Capacity-respecting assignment maximizing the total weight. An edge
/// participates only if it is present in the graph and carries a weight.
/// Successive augmentation along maximum-gain alternating paths; stops once
/// no augmenting path has strictly positive gain.
AssignmentResult solve_assignment(const BipartiteGraph& g, const WeightedAssignment& w);

} // namespace reserve
