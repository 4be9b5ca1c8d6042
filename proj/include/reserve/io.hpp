#pragma once

#include <optional>
#include <string>
#include <variant>

#include <nlohmann/json_fwd.hpp>

#include "reserve/baseline.hpp"
#include "reserve/core.hpp"
#include "reserve/equilibrium.hpp"
#include "reserve/mechanisms.hpp"

namespace reserve::io {

using Json = nlohmann::ordered_json;

/// A loaded instance file: either the general form or the baseline form,
/// discriminated by the top-level "kind" field.
struct LoadedInstance {
    std::variant<Instance, BaselineInstance> value;

    bool is_baseline() const { return std::holds_alternative<BaselineInstance>(value); }
    const BaselineInstance& baseline() const { return std::get<BaselineInstance>(value); }
    const Instance& raw() const { return std::get<Instance>(value); }

    /// The general-form instance either way (baseline instances are lowered).
    Instance general() const;
};

// Parsing throws ParseError for schema problems; semantic problems surface
// as the corresponding validation errors.
LoadedInstance parse_instance(const Json& doc);
LoadedInstance load_instance(const std::string& path);

Json serialize_instance(const Instance& inst);
Json serialize_baseline(const BaselineInstance& b);
Json serialize_loaded(const LoadedInstance& loaded);

PreferenceProfile parse_profile(const Json& doc, const Instance& inst);
PreferenceProfile load_profile(const std::string& path, const Instance& inst);

/// Precedence order from a comma-separated list of category names.
PrecedenceOrder parse_precedence(const Instance& inst, const std::string& names);

CategoryId category_by_name(const Instance& inst, const std::string& name);

Json serialize_matching(const Instance& inst, const Matching& mu);
Json serialize_cutoffs(const Instance& inst, const CutoffVector& f);
Json serialize_trace(const Instance& inst, const StepTrace& trace);

/// Matching report with supporting cutoffs and optional step trace; keys are
/// emitted in a fixed order so identical inputs produce identical bytes.
Json result_report(const Instance& inst, const Matching& mu, Json mechanism,
                   const StepTrace* trace = nullptr);

std::string to_text(const Json& report);

} // namespace reserve::io
