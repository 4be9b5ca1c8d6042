#include "reserve/equilibrium.hpp"

#include <algorithm>

namespace reserve {

void validate_cutoff_vector(const Instance& inst, const CutoffVector& f) {
    if (static_cast<int>(f.cutoff.size()) != inst.n_categories())
        fail(Errc::UnknownCategory, "cutoff vector size differs from category count");
    for (int c = 0; c < inst.n_categories(); ++c) {
        const auto& x = f.cutoff[static_cast<size_t>(c)];
        if (!x)
            continue;
        if (x->value < 0 || x->value >= inst.n_patients())
            fail(Errc::UnknownPatient, "cutoff references unknown patient");
        if (!inst.priority(CategoryId{c}).eligible(*x))
            fail(Errc::MalformedPriority, "cutoff patient ineligible for its category");
    }
}

std::vector<CategoryId> budget_set(const Instance& inst, const CutoffVector& f, PatientId i) {
    validate_cutoff_vector(inst, f);
    std::vector<CategoryId> out;
    for (int c = 0; c < inst.n_categories(); ++c) {
        const auto& order = inst.priority(CategoryId{c});
        if (order.key(i) <= order.cutoff_key(f.cutoff[static_cast<size_t>(c)]))
            out.push_back(CategoryId{c});
    }
    return out;
}

bool is_cutoff_equilibrium(const Instance& inst, const CutoffVector& f, const Matching& mu) {
    validate_cutoff_vector(inst, f);
    validate_matching(inst, mu);

    // Condition 2 first: a below-capacity category must have the sentinel cutoff.
    const auto counts = counts_by_category(inst, mu);
    for (int c = 0; c < inst.n_categories(); ++c)
        if (counts[static_cast<size_t>(c)] < inst.capacities[static_cast<size_t>(c)] &&
            f.cutoff[static_cast<size_t>(c)].has_value())
            return false;

    for (int i = 0; i < inst.n_patients(); ++i) {
        const PatientId patient{i};
        const auto assigned = mu.at(patient);
        bool assigned_in_budget = false;
        bool budget_nonempty = false;
        for (int c = 0; c < inst.n_categories(); ++c) {
            const auto& order = inst.priority(CategoryId{c});
            if (order.key(patient) <= order.cutoff_key(f.cutoff[static_cast<size_t>(c)])) {
                budget_nonempty = true;
                if (assigned && assigned->value == c)
                    assigned_in_budget = true;
            }
        }
        if (assigned && !assigned_in_budget)
            return false; // 1(a)
        if (!assigned && budget_nonempty)
            return false; // 1(b)
    }
    return true;
}

CutoffVector max_cutoff_vector(const Instance& inst, const Matching& mu) {
    validate_matching(inst, mu);
    const auto counts = counts_by_category(inst, mu);
    CutoffVector f;
    f.cutoff.assign(static_cast<size_t>(inst.n_categories()), std::nullopt);
    for (int c = 0; c < inst.n_categories(); ++c) {
        if (counts[static_cast<size_t>(c)] != inst.capacities[static_cast<size_t>(c)])
            continue;
        // Lowest-priority patient matched with c; a full category with zero
        // capacity keeps the sentinel.
        const auto& order = inst.priority(CategoryId{c});
        std::optional<PatientId> lowest;
        for (int i = 0; i < inst.n_patients(); ++i) {
            const auto assigned = mu.at(PatientId{i});
            if (assigned && assigned->value == c &&
                (!lowest || order.prefers(*lowest, PatientId{i})))
                lowest = PatientId{i};
        }
        f.cutoff[static_cast<size_t>(c)] = lowest;
    }
    return f;
}

CutoffVector min_cutoff_vector(const Instance& inst, const Matching& mu) {
    validate_matching(inst, mu);
    CutoffVector f;
    f.cutoff.assign(static_cast<size_t>(inst.n_categories()), std::nullopt);
    for (int c = 0; c < inst.n_categories(); ++c) {
        const auto& order = inst.priority(CategoryId{c});
        // x_c: highest element of (unmatched patients) + sentinel in this order.
        std::optional<PatientId> x;
        int x_key = order.empty_key();
        for (int i = 0; i < inst.n_patients(); ++i)
            if (!mu.is_matched(PatientId{i}) && order.key(PatientId{i}) < x_key) {
                x = PatientId{i};
                x_key = order.key(PatientId{i});
            }
        if (!x)
            continue; // all eligible patients matched
        // Lowest-priority matched patient strictly above x_c.
        std::optional<PatientId> best;
        int best_key = -1;
        for (int i = 0; i < inst.n_patients(); ++i) {
            if (!mu.is_matched(PatientId{i}))
                continue;
            const int k = order.key(PatientId{i});
            if (k < x_key && k > best_key) {
                best = PatientId{i};
                best_key = k;
            }
        }
        f.cutoff[static_cast<size_t>(c)] = best; // sentinel when no such patient exists
    }
    return f;
}

std::vector<std::vector<std::optional<PatientId>>>
equilibrium_cutoff_intervals(const Instance& inst, const Matching& mu) {
    if (!satisfies_axioms(inst, mu))
        fail(Errc::AxiomViolation, "matching does not satisfy the three axioms");
    const CutoffVector top = max_cutoff_vector(inst, mu);
    const CutoffVector bottom = min_cutoff_vector(inst, mu);

    std::vector<std::vector<std::optional<PatientId>>> intervals;
    intervals.reserve(static_cast<size_t>(inst.n_categories()));
    for (int c = 0; c < inst.n_categories(); ++c) {
        const auto& order = inst.priority(CategoryId{c});
        const int hi = order.cutoff_key(top.cutoff[static_cast<size_t>(c)]);
        const int lo = order.cutoff_key(bottom.cutoff[static_cast<size_t>(c)]);
        std::vector<std::optional<PatientId>> values;
        for (int pos = 0; pos < order.eligible_count(); ++pos) {
            const PatientId i = order.ranking()[static_cast<size_t>(pos)];
            if (order.key(i) >= hi && order.key(i) <= lo)
                values.push_back(i);
        }
        if (order.empty_key() >= hi && order.empty_key() <= lo)
            values.push_back(std::nullopt);
        intervals.push_back(std::move(values));
    }
    return intervals;
}

bool for_each_equilibrium_cutoff(const Instance& inst, const Matching& mu,
                                 const std::function<bool(const CutoffVector&)>& visit) {
    const auto intervals = equilibrium_cutoff_intervals(inst, mu);
    const int n_cats = inst.n_categories();
    CutoffVector current;
    current.cutoff.assign(static_cast<size_t>(n_cats), std::nullopt);

    std::function<bool(int)> rec = [&](int c) -> bool {
        if (c == n_cats)
            return visit(current);
        for (const auto& value : intervals[static_cast<size_t>(c)]) {
            current.cutoff[static_cast<size_t>(c)] = value;
            if (!rec(c + 1))
                return false;
        }
        return true;
    };
    return rec(0);
}

std::vector<CutoffVector> enumerate_equilibrium_cutoffs(const Instance& inst,
                                                        const Matching& mu) {
    std::vector<CutoffVector> out;
    for_each_equilibrium_cutoff(inst, mu, [&](const CutoffVector& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

} // namespace reserve
