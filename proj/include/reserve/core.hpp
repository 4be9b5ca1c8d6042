#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reserve/error.hpp"

namespace reserve {

/// Dense index of a patient within one instance.
struct PatientId {
    int value = -1;
    auto operator<=>(const PatientId&) const = default;
};

/// Dense index of a category within one instance.
struct CategoryId {
    int value = -1;
    auto operator<=>(const CategoryId&) const = default;
};

/// A strict total order over all patients of an instance plus an eligibility
/// sentinel. The sentinel sits between positions eligible_count-1 and
/// eligible_count of the ranking: exactly the first eligible_count patients
/// are ranked above it and therefore eligible.
class PriorityOrder {
public:
    PriorityOrder() = default;
    PriorityOrder(std::vector<PatientId> ranking, int eligible_count);

    int size() const { return static_cast<int>(ranking_.size()); }
    int eligible_count() const { return eligible_count_; }
    std::span<const PatientId> ranking() const { return ranking_; }

    /// Position in the ranking, 0 = highest priority.
    int rank_of(PatientId i) const { return rank_of_[static_cast<size_t>(i.value)]; }

    bool eligible(PatientId i) const { return rank_of(i) < eligible_count_; }

    /// Strictly higher priority than.
    bool prefers(PatientId a, PatientId b) const { return rank_of(a) < rank_of(b); }

    // Totally ordered keys over patients and the sentinel; smaller key means
    // higher priority. Patients map to even keys, the sentinel to the odd key
    // just below the first ineligible patient.
    int key(PatientId i) const { return 2 * rank_of(i); }
    int empty_key() const { return 2 * eligible_count_ - 1; }
    int cutoff_key(std::optional<PatientId> x) const {
        return x ? key(*x) : empty_key();
    }

    /// x weakly above y in the order extended with the sentinel.
    bool weakly_above(std::optional<PatientId> x, std::optional<PatientId> y) const {
        return cutoff_key(x) <= cutoff_key(y);
    }

private:
    std::vector<PatientId> ranking_;
    std::vector<int> rank_of_;
    int eligible_count_ = 0;
};

/// A rationing problem: patients, categories with reserved unit counts, and
/// one priority order per category. total_units must equal the sum of the
/// per-category capacities.
struct Instance {
    std::vector<std::string> patient_names;
    std::vector<std::string> category_names;
    std::vector<int> capacities;
    std::vector<PriorityOrder> priorities;
    int total_units = 0;

    int n_patients() const { return static_cast<int>(patient_names.size()); }
    int n_categories() const { return static_cast<int>(category_names.size()); }

    int capacity(CategoryId c) const { return capacities[static_cast<size_t>(c.value)]; }
    const PriorityOrder& priority(CategoryId c) const {
        return priorities[static_cast<size_t>(c.value)];
    }
};

/// Assignment of each patient to at most one category, within capacities.
class Matching {
public:
    Matching() = default;
    explicit Matching(int n_patients)
        : slots_(static_cast<size_t>(n_patients), std::nullopt) {}

    int n_patients() const { return static_cast<int>(slots_.size()); }

    std::optional<CategoryId> at(PatientId i) const {
        return slots_[static_cast<size_t>(i.value)];
    }
    void assign(PatientId i, std::optional<CategoryId> c) {
        slots_[static_cast<size_t>(i.value)] = c;
    }
    bool is_matched(PatientId i) const { return slots_[static_cast<size_t>(i.value)].has_value(); }

    const std::vector<std::optional<CategoryId>>& slots() const { return slots_; }

    auto operator<=>(const Matching&) const = default;

private:
    std::vector<std::optional<CategoryId>> slots_;
};

/// Returns the instance unchanged if every structural invariant holds.
/// Throws CapacityMismatch, DuplicatePatient, DuplicateCategory or
/// MalformedPriority otherwise.
Instance validate_instance(Instance inst);

/// Throws unless the matching's domain matches the instance and every
/// category is within capacity.
void validate_matching(const Instance& inst, const Matching& mu);

/// True iff patient i is ranked above the sentinel in category c's order.
/// Throws UnknownPatient / UnknownCategory on out-of-range ids.
bool is_eligible(const Instance& inst, PatientId i, CategoryId c);

/// Patients of `subset` that are matched under mu.
std::vector<PatientId> matched_set(const Matching& mu, std::span<const PatientId> subset);

/// All matched patients, in patient index order.
std::vector<PatientId> matched_set(const Matching& mu);

/// Number of patients assigned to each category.
std::vector<int> counts_by_category(const Instance& inst, const Matching& mu);

// The three axioms. Each validates the matching first and never mutates
// its inputs.

/// Every matched patient is eligible for her assigned category.
bool complies_with_eligibility(const Instance& inst, const Matching& mu);

/// No unmatched patient is eligible for a category with spare capacity.
bool is_non_wasteful(const Instance& inst, const Matching& mu);

/// Every matched patient outranks, in her category's order, every unmatched patient.
bool respects_priorities(const Instance& inst, const Matching& mu);

/// Conjunction of the three axioms.
bool satisfies_axioms(const Instance& inst, const Matching& mu);

} // namespace reserve
