#pragma once

#include <functional>
#include <vector>

#include "reserve/core.hpp"
#include "reserve/equilibrium.hpp"

namespace reserve {

/// Hard limits for the exhaustive generators. Exceeding a limit is an
/// InstanceTooLarge error, never a silent truncation.
struct SizeGuard {
    int max_patients = 6;
    int max_categories = 6;
    int max_units = 6;

    /// Default guard for matching enumeration.
    static SizeGuard matchings() { return SizeGuard{6, 6, 6}; }
    /// Tighter guard for preference-profile enumeration, whose search space
    /// grows with the factorial of each patient's eligible-category count.
    static SizeGuard profiles() { return SizeGuard{6, 3, 6}; }
};

void check_guard(const Instance& inst, const SizeGuard& guard);

/// Visits every capacity-respecting matching exactly once, in a fixed
/// deterministic order. The visitor returns false to stop early; the
/// function returns false iff it was stopped.
bool for_each_matching(const Instance& inst, const SizeGuard& guard,
                       const std::function<bool(const Matching&)>& visit);

std::vector<Matching> all_matchings(const Instance& inst, const SizeGuard& guard);

/// The matchings that pass all three axioms.
std::vector<Matching> axiom_satisfying_set(const Instance& inst, const SizeGuard& guard);

/// Visits every cutoff vector (one eligible-or-sentinel choice per category)
/// exactly once. Early exit as in for_each_matching.
bool for_each_cutoff_vector(const Instance& inst, const SizeGuard& guard,
                            const std::function<bool(const CutoffVector&)>& visit);

std::vector<CutoffVector> all_cutoff_vectors(const Instance& inst, const SizeGuard& guard);

} // namespace reserve
