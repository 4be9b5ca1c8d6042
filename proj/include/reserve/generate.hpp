#pragma once

#include <random>

#include "reserve/baseline.hpp"
#include "reserve/core.hpp"

namespace reserve {

/// Shape of randomly drawn general-form instances. Categories always receive
/// at least one unit each; the per-category eligibility counts are uniform
/// over [0, patients].
struct RawInstanceParams {
    int min_patients = 1;
    int max_patients = 6;
    int min_categories = 1;
    int max_categories = 3;
    int max_units = 6;
};

Instance random_instance(std::mt19937_64& rng, const RawInstanceParams& params = {});

/// Shape of randomly drawn baseline instances.
struct BaselineInstanceParams {
    int min_patients = 1;
    int max_patients = 6;
    int min_reserves = 0;
    int max_reserves = 3; // preferential categories; total categories = reserves + 1
    int max_units = 6;
    bool disjoint_beneficiaries = false;
    bool soft_only = false;
};

BaselineInstance random_baseline(std::mt19937_64& rng, const BaselineInstanceParams& params = {});

} // namespace reserve
