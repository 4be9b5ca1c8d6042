#include "reserve/baseline.hpp"

#include <algorithm>
#include <set>

#include "reserve/bipartite.hpp"

namespace reserve {

int BaselineInstance::total_units() const {
    int total = unreserved_capacity;
    for (int r : reserve_capacities)
        total += r;
    return total;
}

bool BaselineInstance::is_beneficiary(PatientId i, CategoryId c) const {
    if (c == unreserved_category())
        return true;
    const auto& group = beneficiaries[static_cast<size_t>(c.value)];
    return std::find(group.begin(), group.end(), i) != group.end();
}

bool BaselineInstance::beneficiary_sets_disjoint() const {
    std::vector<int> membership(static_cast<size_t>(n_patients()), 0);
    for (const auto& group : beneficiaries)
        for (PatientId i : group)
            if (++membership[static_cast<size_t>(i.value)] > 1)
                return false;
    return true;
}

void validate_baseline(const BaselineInstance& b) {
    {
        std::set<std::string> seen(b.patient_names.begin(), b.patient_names.end());
        if (seen.size() != b.patient_names.size())
            fail(Errc::InvalidBaseline, "duplicate patient id");
    }
    {
        std::set<std::string> seen(b.reserve_names.begin(), b.reserve_names.end());
        seen.insert(b.unreserved_name);
        if (seen.size() != b.reserve_names.size() + 1)
            fail(Errc::InvalidBaseline, "duplicate category id");
    }
    if (b.reserve_capacities.size() != b.reserve_names.size() ||
        b.beneficiaries.size() != b.reserve_names.size())
        fail(Errc::InvalidBaseline, "per-reserve data sizes disagree");
    if (b.unreserved_capacity < 0)
        fail(Errc::InvalidBaseline, "negative unreserved capacity");
    for (int r : b.reserve_capacities)
        if (r < 0)
            fail(Errc::InvalidBaseline, "negative reserve capacity");
    for (const auto& group : b.beneficiaries) {
        std::set<int> seen;
        for (PatientId i : group) {
            if (i.value < 0 || i.value >= b.n_patients())
                fail(Errc::InvalidBaseline, "beneficiary set references unknown patient");
            if (!seen.insert(i.value).second)
                fail(Errc::InvalidBaseline, "patient repeated within one beneficiary set");
        }
    }
}

Instance lower_instance(const BaselineInstance& b) {
    validate_baseline(b);
    const int n = b.n_patients();

    Instance inst;
    inst.patient_names = b.patient_names;
    inst.category_names = b.reserve_names;
    inst.category_names.push_back(b.unreserved_name);
    inst.capacities = b.reserve_capacities;
    inst.capacities.push_back(b.unreserved_capacity);
    inst.total_units = b.total_units();

    for (int c = 0; c < b.n_reserves(); ++c) {
        // Beneficiaries in baseline order above non-beneficiaries in baseline
        // order; patients are already stored in baseline order.
        std::vector<bool> member(static_cast<size_t>(n), false);
        for (PatientId i : b.beneficiaries[static_cast<size_t>(c)])
            member[static_cast<size_t>(i.value)] = true;
        std::vector<PatientId> ranking;
        ranking.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            if (member[static_cast<size_t>(i)])
                ranking.push_back(PatientId{i});
        const int n_members = static_cast<int>(ranking.size());
        for (int i = 0; i < n; ++i)
            if (!member[static_cast<size_t>(i)])
                ranking.push_back(PatientId{i});
        const int eligible = b.mode == ReserveMode::Soft ? n : n_members;
        inst.priorities.emplace_back(std::move(ranking), eligible);
    }

    std::vector<PatientId> baseline(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        baseline[static_cast<size_t>(i)] = PatientId{i};
    inst.priorities.emplace_back(std::move(baseline), n);

    return validate_instance(std::move(inst));
}

void validate_smart_config(const BaselineInstance& b, const SmartConfig& cfg) {
    if (cfg.n < 0 || cfg.n > b.unreserved_capacity)
        fail(Errc::PreconditionViolated,
             "n must lie between 0 and the unreserved capacity");
}

namespace {

/// Beneficiary count of a matching: patients assigned to a preferential
/// category they belong to.
int beneficiary_count(const BaselineInstance& b, const Matching& mu) {
    int count = 0;
    for (int i = 0; i < mu.n_patients(); ++i) {
        const auto c = mu.at(PatientId{i});
        if (c && *c != b.unreserved_category() && b.is_beneficiary(PatientId{i}, *c))
            ++count;
    }
    return count;
}

BipartiteGraph beneficiary_graph(const BaselineInstance& b) {
    BipartiteGraph g;
    g.n_left = b.n_patients();
    g.right_capacity = b.reserve_capacities;
    for (int c = 0; c < b.n_reserves(); ++c)
        for (PatientId i : b.beneficiaries[static_cast<size_t>(c)])
            g.edges.emplace_back(i.value, c);
    return g;
}

/// Step-2 completion: keep the committed assignments, then hand out the
/// spare units one at a time in the given order (each entry is one unit of
/// one preferential category), then the spare unreserved units, each to the
/// highest-baseline-priority uncommitted unmatched patient eligible for it.
Matching complete_matching(const BaselineInstance& b, const Instance& lowered,
                           const Matching& committed, const std::vector<bool>& is_committed,
                           const std::vector<CategoryId>& unit_sequence) {
    Matching sigma = committed;
    auto counts = counts_by_category(lowered, sigma);

    std::vector<CategoryId> units = unit_sequence;
    const CategoryId u = b.unreserved_category();
    for (int k = counts[static_cast<size_t>(u.value)]; k < lowered.capacity(u); ++k)
        units.push_back(u);

    for (CategoryId c : units) {
        if (counts[static_cast<size_t>(c.value)] >= lowered.capacity(c))
            continue;
        for (int i = 0; i < b.n_patients(); ++i) {
            const PatientId patient{i};
            if (is_committed[static_cast<size_t>(i)] || sigma.is_matched(patient))
                continue;
            if (!lowered.priority(c).eligible(patient))
                continue;
            sigma.assign(patient, c);
            ++counts[static_cast<size_t>(c.value)];
            break;
        }
    }
    return sigma;
}

} // namespace

int max_beneficiary_assignment(const BaselineInstance& b) {
    validate_baseline(b);
    return max_cardinality_matching(beneficiary_graph(b)).size;
}

bool is_maximal_in_beneficiary_assignment(const BaselineInstance& b, const Matching& mu) {
    validate_baseline(b);
    return beneficiary_count(b, mu) == max_beneficiary_assignment(b);
}

std::vector<Matching> smart_reserve_matching_exhaustive(const BaselineInstance& b,
                                                        const SmartConfig& cfg,
                                                        const SizeGuard& guard) {
    validate_baseline(b);
    validate_smart_config(b, cfg);
    const Instance lowered = lower_instance(b);
    const CategoryId u = b.unreserved_category();

    // All beneficiary-maximal matchings.
    std::vector<Matching> pool;
    int best = -1;
    for_each_matching(lowered, guard, [&](const Matching& mu) {
        const int count = beneficiary_count(b, mu);
        if (count > best) {
            best = count;
            pool.clear();
        }
        if (count == best)
            pool.push_back(mu);
        return true;
    });

    // Commit patients in baseline order.
    std::vector<bool> committed(static_cast<size_t>(b.n_patients()), false);
    int committed_to_u = 0;
    for (int k = 0; k < b.n_patients(); ++k) {
        const PatientId i{k};
        const auto matches_u = [&](const Matching& mu) { return mu.at(i) == std::optional(u); };
        const auto matches_own = [&](const Matching& mu) {
            const auto c = mu.at(i);
            return c && *c != u && b.is_beneficiary(i, *c);
        };
        if (committed_to_u < cfg.n && std::any_of(pool.begin(), pool.end(), matches_u)) {
            std::erase_if(pool, [&](const Matching& mu) { return !matches_u(mu); });
            committed[static_cast<size_t>(k)] = true;
            ++committed_to_u;
        } else if (std::any_of(pool.begin(), pool.end(), matches_own)) {
            std::erase_if(pool, [&](const Matching& mu) { return !matches_own(mu); });
            committed[static_cast<size_t>(k)] = true;
        }
    }

    // Complete each survivor, exploring every order of the spare
    // preferential units (distinct category sequences only). Survivors that
    // agree on the committed patients complete identically.
    std::set<Matching> bases;
    for (const Matching& mu : pool) {
        Matching base(b.n_patients());
        for (int i = 0; i < b.n_patients(); ++i)
            if (committed[static_cast<size_t>(i)])
                base.assign(PatientId{i}, mu.at(PatientId{i}));
        bases.insert(std::move(base));
    }

    std::set<Matching> results;
    for (const Matching& base : bases) {
        // Spare units per preferential category, as a multiset of categories.
        const auto counts = counts_by_category(lowered, base);
        std::vector<CategoryId> units;
        for (int c = 0; c < b.n_reserves(); ++c)
            for (int k = counts[static_cast<size_t>(c)]; k < lowered.capacity(CategoryId{c}); ++k)
                units.push_back(CategoryId{c});

        std::sort(units.begin(), units.end());
        do {
            results.insert(complete_matching(b, lowered, base, committed, units));
        } while (std::next_permutation(units.begin(), units.end()));
    }

    return {results.begin(), results.end()};
}

Matching smart_reserve_matching_poly(const BaselineInstance& b, const SmartConfig& cfg) {
    validate_baseline(b);
    validate_smart_config(b, cfg);
    const Instance lowered = lower_instance(b);
    const CategoryId u = b.unreserved_category();
    const int n = b.n_patients();

    const int n_b = max_beneficiary_assignment(b);

    std::vector<bool> in_ju(static_cast<size_t>(n), false); // committed to unreserved
    std::vector<bool> in_j(static_cast<size_t>(n), false);  // committed to own category
    int ju_size = 0;

    // Feasibility probe: candidate k is temporarily deemed eligible for the
    // unreserved category alone (to_unreserved) or for the categories she is
    // a beneficiary of alone. Already-committed patients keep their committed
    // side; everyone else may only serve their own beneficiary categories.
    // Committed patients and the candidate weigh (1,0), the rest (0,1), so
    // the optimum first keeps every commitment and then maximizes how many
    // other beneficiaries are served.
    const auto probe = [&](int k, bool to_unreserved) {
        BipartiteGraph g;
        g.n_left = n;
        g.right_capacity = b.reserve_capacities;
        g.right_capacity.push_back(b.unreserved_capacity);
        WeightedAssignment w(n, b.n_reserves() + 1);
        for (int i = 0; i < n; ++i) {
            const bool candidate = i == k;
            const bool uses_unreserved = in_ju[static_cast<size_t>(i)] || (candidate && to_unreserved);
            const LexWeight weight = in_ju[static_cast<size_t>(i)] || in_j[static_cast<size_t>(i)] || candidate
                                         ? LexWeight{1, 0}
                                         : LexWeight{0, 1};
            if (uses_unreserved) {
                g.edges.emplace_back(i, u.value);
                w.set(i, u.value, weight);
            } else {
                for (int c = 0; c < b.n_reserves(); ++c)
                    if (b.is_beneficiary(PatientId{i}, CategoryId{c})) {
                        g.edges.emplace_back(i, c);
                        w.set(i, c, weight);
                    }
            }
        }
        return solve_assignment(g, w);
    };

    for (int k = 0; k < n; ++k) {
        if (ju_size < cfg.n) {
            const auto result = probe(k, true);
            const int matched = static_cast<int>(result.objective.primary + result.objective.secondary);
            if (matched == n_b + ju_size + 1) {
                in_ju[static_cast<size_t>(k)] = true;
                ++ju_size;
                continue;
            }
        }
        const auto result = probe(k, false);
        const int matched = static_cast<int>(result.objective.primary + result.objective.secondary);
        bool commitments_kept = result.assigned[static_cast<size_t>(k)].has_value();
        for (int i = 0; i < n && commitments_kept; ++i)
            if (in_j[static_cast<size_t>(i)] && !result.assigned[static_cast<size_t>(i)])
                commitments_kept = false;
        if (matched == n_b + ju_size && commitments_kept)
            in_j[static_cast<size_t>(k)] = true;
    }

    // Committed patients take their units via a maximum matching restricted
    // to the committed sides; everyone else is filled in greedily, spare
    // preferential units in declaration order first, unreserved last.
    BipartiteGraph g;
    g.n_left = n;
    g.right_capacity = b.reserve_capacities;
    g.right_capacity.push_back(b.unreserved_capacity);
    for (int i = 0; i < n; ++i) {
        if (in_ju[static_cast<size_t>(i)])
            g.edges.emplace_back(i, u.value);
        else if (in_j[static_cast<size_t>(i)])
            for (int c = 0; c < b.n_reserves(); ++c)
                if (b.is_beneficiary(PatientId{i}, CategoryId{c}))
                    g.edges.emplace_back(i, c);
    }
    const auto matched = max_cardinality_matching(g);

    Matching base(n);
    std::vector<bool> committed(static_cast<size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        committed[static_cast<size_t>(i)] = in_ju[static_cast<size_t>(i)] || in_j[static_cast<size_t>(i)];
        if (matched.left_to_right[static_cast<size_t>(i)])
            base.assign(PatientId{i}, CategoryId{*matched.left_to_right[static_cast<size_t>(i)]});
    }

    const auto counts = counts_by_category(lowered, base);
    std::vector<CategoryId> units;
    for (int c = 0; c < b.n_reserves(); ++c)
        for (int k = counts[static_cast<size_t>(c)]; k < lowered.capacity(CategoryId{c}); ++k)
            units.push_back(CategoryId{c});
    return complete_matching(b, lowered, base, committed, units);
}

Prop3Report check_prop3(const BaselineInstance& b, CategoryId c, const PrecedenceOrder& order,
                        const PrecedenceOrder& order_prime) {
    validate_baseline(b);
    if (b.mode != ReserveMode::Soft)
        fail(Errc::PreconditionViolated, "comparative statics check requires soft reserves");
    if (b.n_categories() > 5)
        fail(Errc::PreconditionViolated, "comparative statics check requires at most five categories");
    if (!b.beneficiary_sets_disjoint())
        fail(Errc::PreconditionViolated, "beneficiary sets must be disjoint");
    if (c.value < 0 || c.value >= b.n_reserves())
        fail(Errc::UnknownCategory, "c must be a preferential category");

    const Instance lowered = lower_instance(b);
    validate_precedence(lowered, order);
    validate_precedence(lowered, order_prime);
    const auto& seq = order.sequence;
    const auto pos = std::find(seq.begin(), seq.end(), c);
    if (pos == seq.begin())
        fail(Errc::NotAdjacent, "c has no predecessor to swap with");
    if (order_prime != adjacent_swap(order, c, *(pos - 1)))
        fail(Errc::NotAdjacent, "order_prime must move c one position earlier");

    const Matching before = sequential_reserve_matching(lowered, order);
    const Matching after = sequential_reserve_matching(lowered, order_prime);

    Prop3Report report;
    report.matched_before = matched_set(before, b.beneficiaries[static_cast<size_t>(c.value)]);
    report.matched_after = matched_set(after, b.beneficiaries[static_cast<size_t>(c.value)]);
    std::sort(report.matched_before.begin(), report.matched_before.end());
    std::sort(report.matched_after.begin(), report.matched_after.end());
    report.inclusion_holds =
        std::includes(report.matched_before.begin(), report.matched_before.end(),
                      report.matched_after.begin(), report.matched_after.end());
    return report;
}

} // namespace reserve
