#include "reserve/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "reserve/equilibrium.hpp"
#include "reserve/mechanisms.hpp"

namespace reserve {

namespace {

std::string describe(const Instance& inst, const Matching& mu) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (int i = 0; i < inst.n_patients(); ++i) {
        const auto c = mu.at(PatientId{i});
        if (!c)
            continue;
        if (!first)
            out << ", ";
        first = false;
        out << inst.patient_names[static_cast<size_t>(i)] << "->"
            << inst.category_names[static_cast<size_t>(c->value)];
    }
    out << "}";
    return out.str();
}

std::string describe(const Instance& inst, const CutoffVector& f) {
    std::ostringstream out;
    out << "(";
    for (int c = 0; c < inst.n_categories(); ++c) {
        if (c > 0)
            out << ", ";
        const auto& x = f.cutoff[static_cast<size_t>(c)];
        out << inst.category_names[static_cast<size_t>(c)] << ":"
            << (x ? inst.patient_names[static_cast<size_t>(x->value)] : "-");
    }
    out << ")";
    return out.str();
}

std::string describe_order(const Instance& inst, const PrecedenceOrder& order) {
    std::string out;
    for (CategoryId c : order.sequence) {
        if (!out.empty())
            out += ">";
        out += inst.category_names[static_cast<size_t>(c.value)];
    }
    return out;
}

std::vector<int> sorted_values(const std::vector<PatientId>& patients) {
    std::vector<int> out;
    out.reserve(patients.size());
    for (PatientId i : patients)
        out.push_back(i.value);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> unreserved_assigned(const BaselineInstance& b, const Matching& mu) {
    std::vector<int> out;
    for (int i = 0; i < mu.n_patients(); ++i)
        if (mu.at(PatientId{i}) == std::optional(b.unreserved_category()))
            out.push_back(i);
    return out;
}

std::vector<int> beneficiary_assigned(const BaselineInstance& b, const Matching& mu) {
    std::vector<int> out;
    for (int i = 0; i < mu.n_patients(); ++i) {
        const auto c = mu.at(PatientId{i});
        if (c && *c != b.unreserved_category() && b.is_beneficiary(PatientId{i}, *c))
            out.push_back(i);
    }
    return out;
}

} // namespace

std::optional<std::string> verify_mechanism_axioms(const Instance& inst, const SizeGuard& guard) {
    check_guard(inst, guard);
    for (const PrecedenceOrder& order : all_precedence_orders(inst)) {
        const Matching sequential = sequential_reserve_matching(inst, order);
        if (!satisfies_axioms(inst, sequential))
            return "sequential matching under " + describe_order(inst, order) +
                   " violates an axiom: " + describe(inst, sequential);
        const Matching da = deferred_acceptance(inst, profile_from_precedence(inst, order));
        if (!satisfies_axioms(inst, da))
            return "deferred acceptance under " + describe_order(inst, order) +
                   " violates an axiom: " + describe(inst, da);
    }
    return std::nullopt;
}

std::optional<std::string> verify_cutoff_support(const Instance& inst, const SizeGuard& guard) {
    std::optional<std::string> failure;
    for_each_matching(inst, guard, [&](const Matching& mu) {
        const bool axioms = satisfies_axioms(inst, mu);
        bool supported = false;
        for_each_cutoff_vector(inst, guard, [&](const CutoffVector& f) {
            if (is_cutoff_equilibrium(inst, f, mu)) {
                supported = true;
                return false;
            }
            return true;
        });
        if (axioms != supported) {
            failure = describe(inst, mu) + (axioms ? " satisfies the axioms but no cutoff vector supports it"
                                                   : " is supported by a cutoff vector but violates an axiom");
            return false;
        }
        return true;
    });
    return failure;
}

std::optional<std::string> verify_da_characterization(const Instance& inst,
                                                      const SizeGuard& guard) {
    const auto expected = axiom_satisfying_set(inst, guard);
    const auto induced = enumerate_da_induced(inst, guard);

    std::set<Matching> expected_set(expected.begin(), expected.end());
    std::set<Matching> induced_set(induced.begin(), induced.end());
    if (expected_set == induced_set)
        return std::nullopt;
    for (const Matching& mu : expected)
        if (!induced_set.count(mu))
            return describe(inst, mu) + " satisfies the axioms but is not an outcome of any profile";
    for (const Matching& mu : induced)
        if (!expected_set.count(mu))
            return describe(inst, mu) + " is an outcome of some profile but violates an axiom";
    return std::nullopt;
}

std::optional<std::string> verify_cutoff_intervals(const Instance& inst, const SizeGuard& guard) {
    for (const Matching& mu : axiom_satisfying_set(inst, guard)) {
        std::set<CutoffVector> enumerated;
        for_each_cutoff_vector(inst, guard, [&](const CutoffVector& f) {
            if (is_cutoff_equilibrium(inst, f, mu))
                enumerated.insert(f);
            return true;
        });
        const auto product = enumerate_equilibrium_cutoffs(inst, mu);
        const std::set<CutoffVector> interval(product.begin(), product.end());
        if (enumerated != interval) {
            for (const CutoffVector& f : enumerated)
                if (!interval.count(f))
                    return "supporting vector " + describe(inst, f) +
                           " of " + describe(inst, mu) + " lies outside the interval product";
            for (const CutoffVector& f : interval)
                if (!enumerated.count(f))
                    return "interval member " + describe(inst, f) + " does not support " +
                           describe(inst, mu);
        }
    }
    return std::nullopt;
}

std::optional<std::string> verify_sequential_da_equivalence(const Instance& inst) {
    for (const PrecedenceOrder& order : all_precedence_orders(inst)) {
        const Matching sequential = sequential_reserve_matching(inst, order);
        const Matching da = deferred_acceptance(inst, profile_from_precedence(inst, order));
        if (!(sequential == da))
            return "order " + describe_order(inst, order) + ": sequential gives " +
                   describe(inst, sequential) + " but deferred acceptance gives " +
                   describe(inst, da);
    }
    return std::nullopt;
}

std::optional<std::string> verify_swap_selectivity(const Instance& inst) {
    for (const PrecedenceOrder& order : all_precedence_orders(inst)) {
        for (size_t pos = 0; pos + 1 < order.sequence.size(); ++pos) {
            const CategoryId c = order.sequence[pos + 1]; // moved earlier
            const CategoryId c_prime = order.sequence[pos];
            const PrecedenceOrder swapped = adjacent_swap(order, c, c_prime);
            const CutoffVector before = max_cutoff_vector(inst, sequential_reserve_matching(inst, order));
            const CutoffVector after = max_cutoff_vector(inst, sequential_reserve_matching(inst, swapped));
            const auto& priority = inst.priority(c);
            if (!priority.weakly_above(after.cutoff[static_cast<size_t>(c.value)],
                                       before.cutoff[static_cast<size_t>(c.value)]))
                return "moving " + inst.category_names[static_cast<size_t>(c.value)] +
                       " earlier in " + describe_order(inst, order) +
                       " lowered its maximum cutoff";
        }
    }
    return std::nullopt;
}

std::optional<std::string> verify_swap_beneficiary_inclusion(const BaselineInstance& b) {
    const Instance lowered = lower_instance(b);
    for (const PrecedenceOrder& order : all_precedence_orders(lowered)) {
        for (size_t pos = 0; pos + 1 < order.sequence.size(); ++pos) {
            const CategoryId c = order.sequence[pos + 1];
            if (c == b.unreserved_category())
                continue; // only preferential categories are checked
            const PrecedenceOrder swapped = adjacent_swap(order, c, order.sequence[pos]);
            const Prop3Report report = check_prop3(b, c, order, swapped);
            if (!report.inclusion_holds)
                return "moving " + b.reserve_names[static_cast<size_t>(c.value)] +
                       " earlier in " + describe_order(lowered, order) +
                       " gained it a matched beneficiary";
        }
    }
    return std::nullopt;
}

std::optional<std::string> verify_smart_set_invariance(const BaselineInstance& b,
                                                       const SizeGuard& guard) {
    const Instance lowered = lower_instance(b);
    for (int n = 0; n <= b.unreserved_capacity; ++n) {
        const auto all = smart_reserve_matching_exhaustive(b, SmartConfig{n}, guard);
        if (all.empty())
            return "no smart matching produced for n=" + std::to_string(n);
        const auto u_set = unreserved_assigned(b, all.front());
        const auto benef_set = beneficiary_assigned(b, all.front());
        const auto matched = sorted_values(matched_set(all.front()));
        for (const Matching& sigma : all) {
            if (unreserved_assigned(b, sigma) != u_set)
                return "n=" + std::to_string(n) + ": members disagree on the unreserved-assigned set";
            if (beneficiary_assigned(b, sigma) != benef_set)
                return "n=" + std::to_string(n) + ": members disagree on the beneficiary-assigned set";
            if (sorted_values(matched_set(sigma)) != matched)
                return "n=" + std::to_string(n) + ": members disagree on the matched set";
        }
        const Matching poly = smart_reserve_matching_poly(b, SmartConfig{n});
        if (unreserved_assigned(b, poly) != u_set)
            return "n=" + std::to_string(n) + ": polynomial result differs on the unreserved-assigned set";
        if (beneficiary_assigned(b, poly) != benef_set)
            return "n=" + std::to_string(n) + ": polynomial result differs on the beneficiary-assigned set";
        if (sorted_values(matched_set(poly)) != matched)
            return "n=" + std::to_string(n) + ": polynomial result differs on the matched set";
        if (!std::binary_search(all.begin(), all.end(), poly))
            return "n=" + std::to_string(n) + ": polynomial result " + describe(lowered, poly) +
                   " is not a member of the exhaustive set";
    }
    return std::nullopt;
}

std::optional<std::string> verify_smart_axioms(const BaselineInstance& b, const SizeGuard& guard) {
    const Instance lowered = lower_instance(b);
    for (int n = 0; n <= b.unreserved_capacity; ++n) {
        auto all = smart_reserve_matching_exhaustive(b, SmartConfig{n}, guard);
        all.push_back(smart_reserve_matching_poly(b, SmartConfig{n}));
        for (const Matching& sigma : all) {
            if (!complies_with_eligibility(lowered, sigma))
                return "n=" + std::to_string(n) + ": " + describe(lowered, sigma) +
                       " violates eligibility";
            if (!is_non_wasteful(lowered, sigma))
                return "n=" + std::to_string(n) + ": " + describe(lowered, sigma) + " is wasteful";
            if (!respects_priorities(lowered, sigma))
                return "n=" + std::to_string(n) + ": " + describe(lowered, sigma) +
                       " violates priorities";
            if (!is_maximal_in_beneficiary_assignment(b, sigma))
                return "n=" + std::to_string(n) + ": " + describe(lowered, sigma) +
                       " is not maximal in beneficiary assignment";
        }
    }
    return std::nullopt;
}

std::optional<std::string> verify_smart_cutoff_extremes(const BaselineInstance& b,
                                                        const SizeGuard& guard) {
    if (!b.beneficiary_sets_disjoint())
        fail(Errc::PreconditionViolated, "beneficiary sets must be disjoint");
    const Instance lowered = lower_instance(b);
    const CategoryId u = b.unreserved_category();
    const auto& baseline_order = lowered.priority(u);

    const Matching first_sigma = smart_reserve_matching_poly(b, SmartConfig{b.unreserved_capacity});
    const Matching last_sigma = smart_reserve_matching_poly(b, SmartConfig{0});
    const auto top_key = baseline_order.cutoff_key(
        max_cutoff_vector(lowered, first_sigma).cutoff[static_cast<size_t>(u.value)]);
    const auto bottom_key = baseline_order.cutoff_key(
        max_cutoff_vector(lowered, last_sigma).cutoff[static_cast<size_t>(u.value)]);

    std::optional<std::string> failure;
    for_each_matching(lowered, guard, [&](const Matching& mu) {
        if (!satisfies_axioms(lowered, mu) || !is_maximal_in_beneficiary_assignment(b, mu))
            return true;
        const int key = baseline_order.cutoff_key(
            max_cutoff_vector(lowered, mu).cutoff[static_cast<size_t>(u.value)]);
        if (key < top_key)
            failure = describe(lowered, mu) +
                      " has a higher unreserved cutoff than the all-units-first smart matching";
        else if (key > bottom_key)
            failure = describe(lowered, mu) +
                      " has a lower unreserved cutoff than the all-units-last smart matching";
        return !failure.has_value();
    });
    return failure;
}

} // namespace reserve
