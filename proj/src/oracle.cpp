#include "reserve/oracle.hpp"

namespace reserve {

void check_guard(const Instance& inst, const SizeGuard& guard) {
    if (inst.n_patients() > guard.max_patients)
        fail(Errc::InstanceTooLarge, "patients " + std::to_string(inst.n_patients()) +
                                         " > " + std::to_string(guard.max_patients));
    if (inst.n_categories() > guard.max_categories)
        fail(Errc::InstanceTooLarge, "categories " + std::to_string(inst.n_categories()) +
                                         " > " + std::to_string(guard.max_categories));
    if (inst.total_units > guard.max_units)
        fail(Errc::InstanceTooLarge, "units " + std::to_string(inst.total_units) + " > " +
                                         std::to_string(guard.max_units));
}

bool for_each_matching(const Instance& inst, const SizeGuard& guard,
                       const std::function<bool(const Matching&)>& visit) {
    check_guard(inst, guard);
    const int n = inst.n_patients();
    const int n_cats = inst.n_categories();
    Matching current(n);
    std::vector<int> remaining = inst.capacities;

    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == n)
            return visit(current);
        current.assign(PatientId{i}, std::nullopt);
        if (!rec(i + 1))
            return false;
        for (int c = 0; c < n_cats; ++c) {
            if (remaining[static_cast<size_t>(c)] == 0)
                continue;
            --remaining[static_cast<size_t>(c)];
            current.assign(PatientId{i}, CategoryId{c});
            const bool keep_going = rec(i + 1);
            current.assign(PatientId{i}, std::nullopt);
            ++remaining[static_cast<size_t>(c)];
            if (!keep_going)
                return false;
        }
        return true;
    };
    return rec(0);
}

std::vector<Matching> all_matchings(const Instance& inst, const SizeGuard& guard) {
    std::vector<Matching> out;
    for_each_matching(inst, guard, [&](const Matching& mu) {
        out.push_back(mu);
        return true;
    });
    return out;
}

std::vector<Matching> axiom_satisfying_set(const Instance& inst, const SizeGuard& guard) {
    std::vector<Matching> out;
    for_each_matching(inst, guard, [&](const Matching& mu) {
        if (satisfies_axioms(inst, mu))
            out.push_back(mu);
        return true;
    });
    return out;
}

bool for_each_cutoff_vector(const Instance& inst, const SizeGuard& guard,
                            const std::function<bool(const CutoffVector&)>& visit) {
    check_guard(inst, guard);
    const int n_cats = inst.n_categories();
    CutoffVector current;
    current.cutoff.assign(static_cast<size_t>(n_cats), std::nullopt);

    std::function<bool(int)> rec = [&](int c) -> bool {
        if (c == n_cats)
            return visit(current);
        const auto& order = inst.priority(CategoryId{c});
        for (int pos = 0; pos < order.eligible_count(); ++pos) {
            current.cutoff[static_cast<size_t>(c)] = order.ranking()[static_cast<size_t>(pos)];
            if (!rec(c + 1))
                return false;
        }
        current.cutoff[static_cast<size_t>(c)] = std::nullopt;
        return rec(c + 1);
    };
    return rec(0);
}

std::vector<CutoffVector> all_cutoff_vectors(const Instance& inst, const SizeGuard& guard) {
    std::vector<CutoffVector> out;
    for_each_cutoff_vector(inst, guard, [&](const CutoffVector& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

} // namespace reserve
