#include "reserve/mechanisms.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace reserve {

void validate_profile(const Instance& inst, const PreferenceProfile& prefs) {
    if (static_cast<int>(prefs.ranked.size()) != inst.n_patients())
        fail(Errc::InvalidProfile, "profile size differs from patient count");
    for (int i = 0; i < inst.n_patients(); ++i) {
        const auto& list = prefs.ranked[static_cast<size_t>(i)];
        std::vector<bool> seen(static_cast<size_t>(inst.n_categories()), false);
        for (CategoryId c : list) {
            if (c.value < 0 || c.value >= inst.n_categories())
                fail(Errc::InvalidProfile, "profile references unknown category");
            if (seen[static_cast<size_t>(c.value)])
                fail(Errc::InvalidProfile, "category listed twice for one patient");
            seen[static_cast<size_t>(c.value)] = true;
            if (!inst.priority(c).eligible(PatientId{i}))
                fail(Errc::InvalidProfile, "patient ranks a category she is ineligible for");
        }
        for (int c = 0; c < inst.n_categories(); ++c)
            if (!seen[static_cast<size_t>(c)] && inst.priority(CategoryId{c}).eligible(PatientId{i}))
                fail(Errc::InvalidProfile, "patient omits a category she is eligible for");
    }
}

void validate_precedence(const Instance& inst, const PrecedenceOrder& order) {
    if (static_cast<int>(order.sequence.size()) != inst.n_categories())
        fail(Errc::UnknownCategory, "precedence order must list every category once");
    std::vector<bool> seen(static_cast<size_t>(inst.n_categories()), false);
    for (CategoryId c : order.sequence) {
        if (c.value < 0 || c.value >= inst.n_categories())
            fail(Errc::UnknownCategory, "precedence order references unknown category");
        if (seen[static_cast<size_t>(c.value)])
            fail(Errc::UnknownCategory, "category repeated in precedence order");
        seen[static_cast<size_t>(c.value)] = true;
    }
}

Matching deferred_acceptance(const Instance& inst, const PreferenceProfile& prefs) {
    validate_profile(inst, prefs);
    const int n = inst.n_patients();

    // next[i]: position in patient i's list to propose to next.
    std::vector<size_t> next(static_cast<size_t>(n), 0);
    std::vector<std::vector<PatientId>> held(static_cast<size_t>(inst.n_categories()));
    std::vector<bool> proposing(static_cast<size_t>(n), true);

    // Each patient applies to each list position at most once, so the total
    // number of applications is bounded by |I|*(|C|+1).
    long long applications = 0;
    const long long application_bound =
        static_cast<long long>(n) * (inst.n_categories() + 1);

    bool any = true;
    while (any) {
        any = false;
        // Simultaneous round: each rejected patient applies to the category at
        // her list pointer; a held patient stays parked, with her pointer
        // still naming the category holding her.
        std::vector<std::vector<PatientId>> pool = held;
        for (int i = 0; i < n; ++i) {
            if (!proposing[static_cast<size_t>(i)])
                continue;
            const auto& list = prefs.ranked[static_cast<size_t>(i)];
            if (next[static_cast<size_t>(i)] >= list.size())
                continue; // exhausted: stays unmatched
            const CategoryId c = list[next[static_cast<size_t>(i)]];
            pool[static_cast<size_t>(c.value)].push_back(PatientId{i});
            any = true;
            if (++applications > application_bound)
                throw std::logic_error("deferred acceptance exceeded its application bound");
        }
        if (!any)
            break;

        std::fill(proposing.begin(), proposing.end(), false);
        for (int c = 0; c < inst.n_categories(); ++c) {
            auto& applicants = pool[static_cast<size_t>(c)];
            const auto& order = inst.priority(CategoryId{c});
            std::sort(applicants.begin(), applicants.end(),
                      [&](PatientId a, PatientId b) { return order.prefers(a, b); });
            const size_t cap = static_cast<size_t>(inst.capacities[static_cast<size_t>(c)]);
            if (applicants.size() > cap) {
                for (size_t k = cap; k < applicants.size(); ++k) {
                    // Permanent rejection: whether a fresh applicant or a
                    // bumped holder, the patient moves past this category.
                    const PatientId rejected = applicants[k];
                    ++next[static_cast<size_t>(rejected.value)];
                    proposing[static_cast<size_t>(rejected.value)] = true;
                }
                applicants.resize(cap);
            }
            held[static_cast<size_t>(c)] = applicants;
        }
    }

    Matching mu(n);
    for (int c = 0; c < inst.n_categories(); ++c)
        for (PatientId i : held[static_cast<size_t>(c)])
            mu.assign(i, CategoryId{c});
    return mu;
}

Matching sequential_reserve_matching(const Instance& inst, const PrecedenceOrder& order,
                                     StepTrace* trace) {
    validate_precedence(inst, order);
    Matching mu(inst.n_patients());
    if (trace)
        trace->steps.clear();
    for (CategoryId c : order.sequence) {
        const auto& priority = inst.priority(c);
        StepTrace::Step step{c, {}};
        int remaining = inst.capacity(c);
        for (int pos = 0; pos < priority.eligible_count() && remaining > 0; ++pos) {
            const PatientId i = priority.ranking()[static_cast<size_t>(pos)];
            if (mu.is_matched(i))
                continue;
            mu.assign(i, c);
            step.assigned.push_back(i);
            --remaining;
        }
        if (trace)
            trace->steps.push_back(std::move(step));
    }
    return mu;
}

PreferenceProfile profile_from_precedence(const Instance& inst, const PrecedenceOrder& order) {
    validate_precedence(inst, order);
    PreferenceProfile prefs;
    prefs.ranked.resize(static_cast<size_t>(inst.n_patients()));
    for (int i = 0; i < inst.n_patients(); ++i)
        for (CategoryId c : order.sequence)
            if (inst.priority(c).eligible(PatientId{i}))
                prefs.ranked[static_cast<size_t>(i)].push_back(c);
    return prefs;
}

std::vector<Matching> enumerate_da_induced(const Instance& inst, const SizeGuard& guard,
                                           long long max_profiles) {
    check_guard(inst, guard);

    std::vector<std::vector<CategoryId>> eligible(static_cast<size_t>(inst.n_patients()));
    long long profile_count = 1;
    for (int i = 0; i < inst.n_patients(); ++i) {
        for (int c = 0; c < inst.n_categories(); ++c)
            if (inst.priority(CategoryId{c}).eligible(PatientId{i}))
                eligible[static_cast<size_t>(i)].push_back(CategoryId{c});
        long long permutations = 1;
        for (size_t k = 2; k <= eligible[static_cast<size_t>(i)].size(); ++k)
            permutations *= static_cast<long long>(k);
        if (profile_count > max_profiles / std::max<long long>(permutations, 1))
            fail(Errc::InstanceTooLarge, "preference profile space exceeds limit");
        profile_count *= permutations;
    }
    if (profile_count > max_profiles)
        fail(Errc::InstanceTooLarge, "preference profile space exceeds limit");

    PreferenceProfile prefs;
    prefs.ranked = eligible; // each list starts in its lexicographically first order
    for (auto& list : prefs.ranked)
        std::sort(list.begin(), list.end());

    std::set<Matching> outcomes;
    // Odometer over per-patient permutations.
    std::function<void(int)> rec = [&](int i) {
        if (i == inst.n_patients()) {
            outcomes.insert(deferred_acceptance(inst, prefs));
            return;
        }
        auto& list = prefs.ranked[static_cast<size_t>(i)];
        std::sort(list.begin(), list.end());
        do {
            rec(i + 1);
        } while (std::next_permutation(list.begin(), list.end()));
    };
    rec(0);

    return {outcomes.begin(), outcomes.end()};
}

PrecedenceOrder adjacent_swap(const PrecedenceOrder& order, CategoryId c, CategoryId c_prime) {
    const auto& seq = order.sequence;
    const auto pos_c = std::find(seq.begin(), seq.end(), c);
    const auto pos_prime = std::find(seq.begin(), seq.end(), c_prime);
    if (pos_c == seq.end() || pos_prime == seq.end())
        fail(Errc::UnknownCategory, "category not present in precedence order");
    if (pos_prime + 1 != pos_c)
        fail(Errc::NotAdjacent, "swap requires c_prime to immediately precede c");
    PrecedenceOrder swapped = order;
    std::iter_swap(swapped.sequence.begin() + (pos_prime - seq.begin()),
                   swapped.sequence.begin() + (pos_c - seq.begin()));
    return swapped;
}

std::vector<PrecedenceOrder> all_precedence_orders(const Instance& inst) {
    std::vector<CategoryId> seq(static_cast<size_t>(inst.n_categories()));
    for (int c = 0; c < inst.n_categories(); ++c)
        seq[static_cast<size_t>(c)] = CategoryId{c};
    std::vector<PrecedenceOrder> out;
    do {
        out.push_back(PrecedenceOrder{seq});
    } while (std::next_permutation(seq.begin(), seq.end()));
    return out;
}

} // namespace reserve
