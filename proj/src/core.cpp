#include "reserve/core.hpp"

#include <algorithm>
#include <unordered_set>

namespace reserve {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::CapacityMismatch: return "CapacityMismatch";
    case Errc::DuplicatePatient: return "DuplicatePatient";
    case Errc::DuplicateCategory: return "DuplicateCategory";
    case Errc::MalformedPriority: return "MalformedPriority";
    case Errc::UnknownPatient: return "UnknownPatient";
    case Errc::UnknownCategory: return "UnknownCategory";
    case Errc::AxiomViolation: return "AxiomViolation";
    case Errc::InstanceTooLarge: return "InstanceTooLarge";
    case Errc::NotAdjacent: return "NotAdjacent";
    case Errc::InvalidProfile: return "InvalidProfile";
    case Errc::InvalidBaseline: return "InvalidBaseline";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::ParseError: return "ParseError";
    }
    return "UnknownError";
}

PriorityOrder::PriorityOrder(std::vector<PatientId> ranking, int eligible_count)
    : ranking_(std::move(ranking)), eligible_count_(eligible_count) {
    const int n = static_cast<int>(ranking_.size());
    if (eligible_count_ < 0 || eligible_count_ > n)
        fail(Errc::MalformedPriority, "eligible_count out of range");
    rank_of_.assign(static_cast<size_t>(n), -1);
    for (int pos = 0; pos < n; ++pos) {
        const int v = ranking_[static_cast<size_t>(pos)].value;
        if (v < 0 || v >= n)
            fail(Errc::MalformedPriority, "ranking references unknown patient");
        if (rank_of_[static_cast<size_t>(v)] != -1)
            fail(Errc::MalformedPriority, "patient listed twice in ranking");
        rank_of_[static_cast<size_t>(v)] = pos;
    }
}

Instance validate_instance(Instance inst) {
    {
        std::unordered_set<std::string> seen;
        for (const auto& name : inst.patient_names)
            if (!seen.insert(name).second)
                fail(Errc::DuplicatePatient, "patient id '" + name + "' repeated");
    }
    {
        std::unordered_set<std::string> seen;
        for (const auto& name : inst.category_names)
            if (!seen.insert(name).second)
                fail(Errc::DuplicateCategory, "category id '" + name + "' repeated");
    }
    const size_t n_cats = inst.category_names.size();
    if (inst.capacities.size() != n_cats || inst.priorities.size() != n_cats)
        fail(Errc::MalformedPriority, "per-category data sizes disagree");

    long long total = 0;
    for (int r : inst.capacities) {
        if (r < 0)
            fail(Errc::CapacityMismatch, "negative capacity");
        total += r;
    }
    if (total != inst.total_units)
        fail(Errc::CapacityMismatch,
             "capacities sum to " + std::to_string(total) + " but total_units is " +
                 std::to_string(inst.total_units));

    const int n = inst.n_patients();
    for (const auto& order : inst.priorities) {
        if (order.size() != n)
            fail(Errc::MalformedPriority, "priority order does not cover all patients");
        // PriorityOrder's constructor already guarantees a permutation of 0..size-1.
    }
    return inst;
}

void validate_matching(const Instance& inst, const Matching& mu) {
    if (mu.n_patients() != inst.n_patients())
        fail(Errc::UnknownPatient, "matching domain differs from instance patient set");
    std::vector<int> used(static_cast<size_t>(inst.n_categories()), 0);
    for (const auto& slot : mu.slots()) {
        if (!slot)
            continue;
        if (slot->value < 0 || slot->value >= inst.n_categories())
            fail(Errc::UnknownCategory, "matching references unknown category");
        ++used[static_cast<size_t>(slot->value)];
    }
    for (int c = 0; c < inst.n_categories(); ++c)
        if (used[static_cast<size_t>(c)] > inst.capacities[static_cast<size_t>(c)])
            fail(Errc::CapacityMismatch,
                 "category '" + inst.category_names[static_cast<size_t>(c)] + "' over capacity");
}

bool is_eligible(const Instance& inst, PatientId i, CategoryId c) {
    if (i.value < 0 || i.value >= inst.n_patients())
        fail(Errc::UnknownPatient, "patient index " + std::to_string(i.value));
    if (c.value < 0 || c.value >= inst.n_categories())
        fail(Errc::UnknownCategory, "category index " + std::to_string(c.value));
    return inst.priority(c).eligible(i);
}

std::vector<PatientId> matched_set(const Matching& mu, std::span<const PatientId> subset) {
    std::vector<PatientId> out;
    for (PatientId i : subset)
        if (mu.is_matched(i))
            out.push_back(i);
    return out;
}

std::vector<PatientId> matched_set(const Matching& mu) {
    std::vector<PatientId> out;
    for (int i = 0; i < mu.n_patients(); ++i)
        if (mu.is_matched(PatientId{i}))
            out.push_back(PatientId{i});
    return out;
}

std::vector<int> counts_by_category(const Instance& inst, const Matching& mu) {
    std::vector<int> counts(static_cast<size_t>(inst.n_categories()), 0);
    for (const auto& slot : mu.slots())
        if (slot)
            ++counts[static_cast<size_t>(slot->value)];
    return counts;
}

bool complies_with_eligibility(const Instance& inst, const Matching& mu) {
    validate_matching(inst, mu);
    for (int i = 0; i < inst.n_patients(); ++i) {
        const auto c = mu.at(PatientId{i});
        if (c && !inst.priority(*c).eligible(PatientId{i}))
            return false;
    }
    return true;
}

bool is_non_wasteful(const Instance& inst, const Matching& mu) {
    validate_matching(inst, mu);
    const auto counts = counts_by_category(inst, mu);
    for (int c = 0; c < inst.n_categories(); ++c) {
        if (counts[static_cast<size_t>(c)] >= inst.capacities[static_cast<size_t>(c)])
            continue;
        const auto& order = inst.priorities[static_cast<size_t>(c)];
        for (int i = 0; i < inst.n_patients(); ++i)
            if (!mu.is_matched(PatientId{i}) && order.eligible(PatientId{i}))
                return false;
    }
    return true;
}

bool respects_priorities(const Instance& inst, const Matching& mu) {
    validate_matching(inst, mu);
    for (int i = 0; i < inst.n_patients(); ++i) {
        const auto c = mu.at(PatientId{i});
        if (!c)
            continue;
        const auto& order = inst.priority(*c);
        for (int j = 0; j < inst.n_patients(); ++j)
            if (!mu.is_matched(PatientId{j}) && !order.prefers(PatientId{i}, PatientId{j}))
                return false;
    }
    return true;
}

bool satisfies_axioms(const Instance& inst, const Matching& mu) {
    return complies_with_eligibility(inst, mu) && is_non_wasteful(inst, mu) &&
           respects_priorities(inst, mu);
}

} // namespace reserve
