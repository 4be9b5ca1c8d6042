#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "reserve/core.hpp"

namespace reserve {

/// One cutoff per category: a patient or the sentinel (nullopt). A patient
/// cutoff must be eligible for its category.
struct CutoffVector {
    std::vector<std::optional<PatientId>> cutoff;

    std::optional<PatientId> at(CategoryId c) const {
        return cutoff[static_cast<size_t>(c.value)];
    }

    auto operator<=>(const CutoffVector&) const = default;
};

/// Throws unless every cutoff is eligible-or-sentinel for its category.
void validate_cutoff_vector(const Instance& inst, const CutoffVector& f);

/// Categories whose cutoff patient i weakly outranks, in category index order.
std::vector<CategoryId> budget_set(const Instance& inst, const CutoffVector& f, PatientId i);

/// The equilibrium conditions: (1a) every matched patient is matched inside
/// her budget set, (1b) a patient with a non-empty budget set is matched,
/// and (2) a category below capacity has the sentinel cutoff.
bool is_cutoff_equilibrium(const Instance& inst, const CutoffVector& f, const Matching& mu);

/// Per category: the lowest-priority patient matched there when the category
/// is exactly full, else the sentinel. For an axiom-satisfying matching this
/// is the largest cutoff vector supporting it.
CutoffVector max_cutoff_vector(const Instance& inst, const Matching& mu);

/// Per category: the lowest-priority matched patient strictly above the
/// highest-priority eligible unmatched patient, or the sentinel when every
/// eligible patient is matched. For an axiom-satisfying matching this is the
/// smallest cutoff vector supporting it.
CutoffVector min_cutoff_vector(const Instance& inst, const Matching& mu);

/// Per category, the cutoff values from max_cutoff_vector down to
/// min_cutoff_vector in priority order. Requires mu to satisfy the three
/// axioms (AxiomViolation otherwise).
std::vector<std::vector<std::optional<PatientId>>>
equilibrium_cutoff_intervals(const Instance& inst, const Matching& mu);

/// Visits every cutoff vector supporting mu, as the Cartesian product of the
/// per-category intervals. Deterministic order; visitor returns false to
/// stop. Returns false iff stopped early.
bool for_each_equilibrium_cutoff(const Instance& inst, const Matching& mu,
                                 const std::function<bool(const CutoffVector&)>& visit);

std::vector<CutoffVector> enumerate_equilibrium_cutoffs(const Instance& inst, const Matching& mu);

} // namespace reserve
