#pragma once

#include "reserve/baseline.hpp"
#include "reserve/core.hpp"

namespace fixtures {

using namespace reserve;

// Two patients, hard reserves: the unreserved category u and one
// preferential category c whose only beneficiary is the top patient.
// Lowered orders: pi_c = (i1 | i2), pi_u = (i1, i2 |).
inline BaselineInstance two_patient_hard() {
    BaselineInstance b;
    b.patient_names = {"i1", "i2"};
    b.reserve_names = {"c"};
    b.reserve_capacities = {1};
    b.beneficiaries = {{PatientId{0}}};
    b.unreserved_name = "u";
    b.unreserved_capacity = 1;
    b.mode = ReserveMode::Hard;
    return b;
}

// Seven patients, six single-unit categories, soft reserves. Beneficiaries:
// c: {i1,i3,i6}, cs: {i2,i5}, ct: {i4,i7}; cp and ch have none.
// The canonical counterexample where processing c earlier helps its
// beneficiaries instead of hurting them.
inline BaselineInstance six_category_soft() {
    BaselineInstance b;
    b.patient_names = {"i1", "i2", "i3", "i4", "i5", "i6", "i7"};
    b.reserve_names = {"c", "cp", "cs", "ch", "ct"};
    b.reserve_capacities = {1, 1, 1, 1, 1};
    b.beneficiaries = {
        {PatientId{0}, PatientId{2}, PatientId{5}},
        {},
        {PatientId{1}, PatientId{4}},
        {},
        {PatientId{3}, PatientId{6}},
    };
    b.unreserved_name = "u";
    b.unreserved_capacity = 1;
    b.mode = ReserveMode::Soft;
    return b;
}

// Category indices in the lowered instances.
inline constexpr CategoryId kC{0};
inline constexpr CategoryId kUTwo{1};  // u in two_patient_hard
inline constexpr CategoryId kCp{1};
inline constexpr CategoryId kCs{2};
inline constexpr CategoryId kCh{3};
inline constexpr CategoryId kCt{4};
inline constexpr CategoryId kUSix{5};  // u in six_category_soft

inline Matching make_matching(int n, std::initializer_list<std::pair<int, int>> pairs) {
    Matching mu(n);
    for (const auto& [patient, category] : pairs)
        mu.assign(PatientId{patient}, CategoryId{category});
    return mu;
}

} // namespace fixtures
