#pragma once

#include <string>
#include <vector>

#include "reserve/core.hpp"
#include "reserve/mechanisms.hpp"
#include "reserve/oracle.hpp"

namespace reserve {

enum class ReserveMode { Soft, Hard };

/// A reserve system derived from one baseline priority order: every
/// category ranks its beneficiaries (in baseline order) above everyone else
/// (in baseline order). Under soft reserves all patients are eligible for
/// all categories; under hard reserves only beneficiaries are eligible for
/// a preferential category. Patients are stored in baseline order, highest
/// priority first.
struct BaselineInstance {
    std::vector<std::string> patient_names;
    std::vector<std::string> reserve_names; // preferential categories, declaration order
    std::vector<int> reserve_capacities;
    std::vector<std::vector<PatientId>> beneficiaries; // per preferential category
    std::string unreserved_name = "u";
    int unreserved_capacity = 0;
    ReserveMode mode = ReserveMode::Soft;

    int n_patients() const { return static_cast<int>(patient_names.size()); }
    int n_reserves() const { return static_cast<int>(reserve_names.size()); }
    int n_categories() const { return n_reserves() + 1; }
    int total_units() const;

    /// Category index of the unreserved category in the lowered instance.
    CategoryId unreserved_category() const { return CategoryId{n_reserves()}; }

    bool is_beneficiary(PatientId i, CategoryId c) const;
    /// True iff no patient belongs to two beneficiary sets.
    bool beneficiary_sets_disjoint() const;
};

void validate_baseline(const BaselineInstance& b);

/// The general-form instance induced by the baseline structure. Categories
/// appear in declaration order with the unreserved category last.
Instance lower_instance(const BaselineInstance& b);

/// Number of unreserved units processed before the preferential categories
/// by smart reserve matching.
struct SmartConfig {
    int n = 0;
};

void validate_smart_config(const BaselineInstance& b, const SmartConfig& cfg);

/// Most patients that can simultaneously be matched to preferential
/// categories they are beneficiaries of.
int max_beneficiary_assignment(const BaselineInstance& b);

/// True iff mu assigns as many beneficiaries to their own categories as any
/// matching can.
bool is_maximal_in_beneficiary_assignment(const BaselineInstance& b, const Matching& mu);

/// The definitional smart reserve matching procedure, run literally: start
/// from every beneficiary-maximal matching, commit patients one by one in
/// baseline order (to the unreserved category while fewer than n of its
/// units are committed, else to a category they are beneficiaries of when
/// possible), then complete each survivor by greedily filling the remaining
/// preferential units (every order of those units is explored) and then the
/// remaining unreserved units. Returns all distinct matchings so produced,
/// sorted. Exhaustive over the matching space, hence guarded.
std::vector<Matching> smart_reserve_matching_exhaustive(const BaselineInstance& b,
                                                        const SmartConfig& cfg,
                                                        const SizeGuard& guard = SizeGuard::matchings());

/// Polynomial-time smart reserve matching. Feasibility of each commitment is
/// decided by a maximum-weight assignment probe instead of filtering the
/// matching set; remaining preferential units are filled in declaration
/// order, making the result one canonical member of the exhaustive set.
Matching smart_reserve_matching_poly(const BaselineInstance& b, const SmartConfig& cfg);

/// The two sets a comparative-statics check compares: the category's matched
/// beneficiaries before and after the swap that moves it earlier.
struct Prop3Report {
    std::vector<PatientId> matched_before; // under the original order
    std::vector<PatientId> matched_after;  // with the category moved earlier
    bool inclusion_holds = false;          // matched_after is a subset of matched_before
};

/// Verifies that moving preferential category c one position earlier (from
/// order to order_prime) cannot gain c any matched beneficiary. Requires a
/// soft-reserve system with at most five categories and disjoint beneficiary
/// sets; order_prime must be exactly the adjacent swap of order at c.
Prop3Report check_prop3(const BaselineInstance& b, CategoryId c, const PrecedenceOrder& order,
                        const PrecedenceOrder& order_prime);

} // namespace reserve
