#pragma once

#include <optional>
#include <string>

#include "reserve/baseline.hpp"
#include "reserve/core.hpp"
#include "reserve/oracle.hpp"

namespace reserve {

// Exhaustive ground-truth checks on one small instance. Each returns
// std::nullopt when the property holds and a description of the first
// discrepancy otherwise. They are deliberately brute-force: sets are built
// by enumeration, never by the algebraic shortcuts they are checking.

/// Every sequential reserve matching (all precedence orders) and every
/// deferred-acceptance run on a precedence-derived profile satisfies the
/// three axioms.
std::optional<std::string> verify_mechanism_axioms(const Instance& inst,
                                                   const SizeGuard& guard = SizeGuard::matchings());

/// The axiom-satisfying matchings are exactly the matchings supported by
/// some cutoff vector.
std::optional<std::string> verify_cutoff_support(const Instance& inst,
                                                 const SizeGuard& guard = SizeGuard::matchings());

/// The axiom-satisfying matchings are exactly the deferred-acceptance
/// outcomes over all admissible preference profiles.
std::optional<std::string> verify_da_characterization(const Instance& inst,
                                                      const SizeGuard& guard = SizeGuard::profiles());

/// For each axiom-satisfying matching, the supporting cutoff vectors are
/// exactly the per-category intervals between the maximum and minimum
/// cutoff vectors.
std::optional<std::string> verify_cutoff_intervals(const Instance& inst,
                                                   const SizeGuard& guard = SizeGuard::matchings());

/// Sequential reserve matching coincides, category for category, with
/// deferred acceptance under the precedence-derived profile, for every
/// precedence order.
std::optional<std::string> verify_sequential_da_equivalence(const Instance& inst);

/// Moving a category one position earlier weakly raises its maximum cutoff
/// in its own priority order, for every order and every adjacent swap.
std::optional<std::string> verify_swap_selectivity(const Instance& inst);

/// On soft baseline systems with at most five categories and disjoint
/// beneficiary sets: moving a preferential category earlier never gains it a
/// matched beneficiary, for every order and every adjacent swap.
std::optional<std::string> verify_swap_beneficiary_inclusion(const BaselineInstance& b);

/// For every n: all smart reserve matchings share the unreserved-assigned
/// set, the beneficiary-assigned set and the matched set, and the polynomial
/// algorithm reproduces those sets.
std::optional<std::string> verify_smart_set_invariance(const BaselineInstance& b,
                                                       const SizeGuard& guard = SizeGuard::matchings());

/// For every n: every smart reserve matching (and the polynomial output)
/// satisfies the three axioms and is maximal in beneficiary assignment.
std::optional<std::string> verify_smart_axioms(const BaselineInstance& b,
                                               const SizeGuard& guard = SizeGuard::matchings());

/// Among all axiom-satisfying, beneficiary-maximal matchings, the smart
/// matching with all unreserved units first has the highest unreserved
/// maximum cutoff and the one with all unreserved units last the lowest.
std::optional<std::string> verify_smart_cutoff_extremes(const BaselineInstance& b,
                                                        const SizeGuard& guard = SizeGuard::matchings());

} // namespace reserve
