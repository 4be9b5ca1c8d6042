#pragma once

#include <vector>

#include "reserve/core.hpp"
#include "reserve/oracle.hpp"

namespace reserve {

/// Per patient, the categories she ranks above staying unmatched, best first.
/// A category appears in a patient's list iff she is eligible for it.
struct PreferenceProfile {
    std::vector<std::vector<CategoryId>> ranked;
};

/// The order in which categories are processed by sequential reserve matching.
struct PrecedenceOrder {
    std::vector<CategoryId> sequence;

    auto operator<=>(const PrecedenceOrder&) const = default;
};

/// One processing step: the category and the patients it matched, in the
/// order the units were filled.
struct StepTrace {
    struct Step {
        CategoryId category;
        std::vector<PatientId> assigned;
    };
    std::vector<Step> steps;
};

void validate_profile(const Instance& inst, const PreferenceProfile& prefs);
void validate_precedence(const Instance& inst, const PrecedenceOrder& order);

/// Individual-proposing deferred acceptance. Each round, every rejected
/// patient applies to the next category on her list; each category keeps the
/// top applicants by its priority order, up to capacity, and permanently
/// rejects the rest. Rounds are processed simultaneously. Terminates once no
/// application is rejected.
Matching deferred_acceptance(const Instance& inst, const PreferenceProfile& prefs);

/// Greedy category-by-category matching: each category in precedence order
/// takes the highest-priority eligible patients still unmatched, up to its
/// capacity.
Matching sequential_reserve_matching(const Instance& inst, const PrecedenceOrder& order,
                                     StepTrace* trace = nullptr);

/// The profile in which every patient ranks her eligible categories in
/// precedence order. Deferred acceptance on this profile reproduces
/// sequential_reserve_matching exactly.
PreferenceProfile profile_from_precedence(const Instance& inst, const PrecedenceOrder& order);

/// All distinct deferred-acceptance outcomes over every admissible
/// preference profile. The profile space multiplies the factorials of each
/// patient's eligible-category count; exceeding max_profiles (or the guard)
/// is an InstanceTooLarge error.
std::vector<Matching> enumerate_da_induced(const Instance& inst,
                                           const SizeGuard& guard = SizeGuard::profiles(),
                                           long long max_profiles = 1'000'000);

/// The precedence order with c and its immediate predecessor c_prime
/// transposed. NotAdjacent unless c_prime directly precedes c.
PrecedenceOrder adjacent_swap(const PrecedenceOrder& order, CategoryId c, CategoryId c_prime);

/// All |C|! precedence orders, in lexicographic category-index order.
std::vector<PrecedenceOrder> all_precedence_orders(const Instance& inst);

} // namespace reserve
