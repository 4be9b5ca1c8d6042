#include "reserve/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace reserve::io {

namespace {

const Json& require(const Json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key))
        fail(Errc::ParseError, std::string("missing field '") + key + "'");
    return doc.at(key);
}

std::string require_string(const Json& doc, const char* key) {
    const Json& value = require(doc, key);
    if (!value.is_string())
        fail(Errc::ParseError, std::string("field '") + key + "' must be a string");
    return value.get<std::string>();
}

int require_int(const Json& doc, const char* key) {
    const Json& value = require(doc, key);
    if (!value.is_number_integer())
        fail(Errc::ParseError, std::string("field '") + key + "' must be an integer");
    return value.get<int>();
}

std::vector<std::string> require_string_array(const Json& doc, const char* key) {
    const Json& value = require(doc, key);
    if (!value.is_array())
        fail(Errc::ParseError, std::string("field '") + key + "' must be an array");
    std::vector<std::string> out;
    for (const Json& item : value) {
        if (!item.is_string())
            fail(Errc::ParseError, std::string("field '") + key + "' must contain strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

std::vector<PatientId> to_patient_ids(const std::vector<std::string>& names,
                                      const std::vector<std::string>& patients) {
    std::vector<PatientId> out;
    for (const auto& name : names) {
        const auto pos = std::find(patients.begin(), patients.end(), name);
        if (pos == patients.end())
            fail(Errc::ParseError, "unknown patient id '" + name + "'");
        out.push_back(PatientId{static_cast<int>(pos - patients.begin())});
    }
    return out;
}

Instance parse_raw(const Json& doc) {
    Instance inst;
    inst.patient_names = require_string_array(doc, "patients");
    const Json& categories = require(doc, "categories");
    if (!categories.is_array())
        fail(Errc::ParseError, "field 'categories' must be an array");
    for (const Json& entry : categories) {
        inst.category_names.push_back(require_string(entry, "id"));
        inst.capacities.push_back(require_int(entry, "capacity"));
        const auto ranking = to_patient_ids(require_string_array(entry, "priority"), inst.patient_names);
        const int eligible = require_int(entry, "eligible_count");
        if (eligible < 0 || eligible > static_cast<int>(inst.patient_names.size()))
            fail(Errc::ParseError, "eligible_count out of range");
        inst.priorities.emplace_back(ranking, eligible);
        inst.total_units += inst.capacities.back();
    }
    return validate_instance(std::move(inst));
}

BaselineInstance parse_baseline(const Json& doc) {
    BaselineInstance b;
    b.patient_names = require_string_array(doc, "baseline");
    b.unreserved_name = require_string(doc, "unreserved");
    b.unreserved_capacity = require_int(doc, "unreserved_capacity");
    const std::string mode = require_string(doc, "mode");
    if (mode == "soft")
        b.mode = ReserveMode::Soft;
    else if (mode == "hard")
        b.mode = ReserveMode::Hard;
    else
        fail(Errc::ParseError, "mode must be \"soft\" or \"hard\"");

    const Json& reserves = require(doc, "reserves");
    if (!reserves.is_array())
        fail(Errc::ParseError, "field 'reserves' must be an array");
    for (const Json& entry : reserves) {
        b.reserve_names.push_back(require_string(entry, "id"));
        b.reserve_capacities.push_back(require_int(entry, "capacity"));
        b.beneficiaries.push_back(
            to_patient_ids(require_string_array(entry, "beneficiaries"), b.patient_names));
    }
    validate_baseline(b);
    return b;
}

} // namespace

Instance LoadedInstance::general() const {
    return is_baseline() ? lower_instance(baseline()) : raw();
}

LoadedInstance parse_instance(const Json& doc) {
    const std::string kind = require_string(doc, "kind");
    if (kind == "raw")
        return LoadedInstance{parse_raw(doc)};
    if (kind == "baseline")
        return LoadedInstance{parse_baseline(doc)};
    fail(Errc::ParseError, "kind must be \"raw\" or \"baseline\"");
}

LoadedInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail(Errc::ParseError, "cannot open '" + path + "'");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        fail(Errc::ParseError, e.what());
    }
    return parse_instance(doc);
}

Json serialize_instance(const Instance& inst) {
    Json doc;
    doc["kind"] = "raw";
    doc["patients"] = inst.patient_names;
    Json categories = Json::array();
    for (int c = 0; c < inst.n_categories(); ++c) {
        Json entry;
        entry["id"] = inst.category_names[static_cast<size_t>(c)];
        entry["capacity"] = inst.capacities[static_cast<size_t>(c)];
        Json priority = Json::array();
        for (PatientId i : inst.priority(CategoryId{c}).ranking())
            priority.push_back(inst.patient_names[static_cast<size_t>(i.value)]);
        entry["priority"] = std::move(priority);
        entry["eligible_count"] = inst.priority(CategoryId{c}).eligible_count();
        categories.push_back(std::move(entry));
    }
    doc["categories"] = std::move(categories);
    return doc;
}

Json serialize_baseline(const BaselineInstance& b) {
    Json doc;
    doc["kind"] = "baseline";
    doc["baseline"] = b.patient_names;
    doc["unreserved"] = b.unreserved_name;
    doc["unreserved_capacity"] = b.unreserved_capacity;
    doc["mode"] = b.mode == ReserveMode::Soft ? "soft" : "hard";
    Json reserves = Json::array();
    for (int c = 0; c < b.n_reserves(); ++c) {
        Json entry;
        entry["id"] = b.reserve_names[static_cast<size_t>(c)];
        entry["capacity"] = b.reserve_capacities[static_cast<size_t>(c)];
        Json group = Json::array();
        for (PatientId i : b.beneficiaries[static_cast<size_t>(c)])
            group.push_back(b.patient_names[static_cast<size_t>(i.value)]);
        entry["beneficiaries"] = std::move(group);
        reserves.push_back(std::move(entry));
    }
    doc["reserves"] = std::move(reserves);
    return doc;
}

Json serialize_loaded(const LoadedInstance& loaded) {
    return loaded.is_baseline() ? serialize_baseline(loaded.baseline())
                                : serialize_instance(loaded.raw());
}

PreferenceProfile parse_profile(const Json& doc, const Instance& inst) {
    if (require_string(doc, "kind") != "profile")
        fail(Errc::ParseError, "kind must be \"profile\"");
    const Json& preferences = require(doc, "preferences");
    if (!preferences.is_array())
        fail(Errc::ParseError, "field 'preferences' must be an array");

    PreferenceProfile prefs;
    prefs.ranked.resize(static_cast<size_t>(inst.n_patients()));
    std::vector<bool> seen(static_cast<size_t>(inst.n_patients()), false);
    for (const Json& entry : preferences) {
        const std::string name = require_string(entry, "patient");
        const auto pos = std::find(inst.patient_names.begin(), inst.patient_names.end(), name);
        if (pos == inst.patient_names.end())
            fail(Errc::ParseError, "unknown patient id '" + name + "'");
        const size_t i = static_cast<size_t>(pos - inst.patient_names.begin());
        if (seen[i])
            fail(Errc::ParseError, "patient '" + name + "' listed twice");
        seen[i] = true;
        for (const std::string& cat : require_string_array(entry, "ranking"))
            prefs.ranked[i].push_back(category_by_name(inst, cat));
    }
    validate_profile(inst, prefs);
    return prefs;
}

PreferenceProfile load_profile(const std::string& path, const Instance& inst) {
    std::ifstream in(path);
    if (!in)
        fail(Errc::ParseError, "cannot open '" + path + "'");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        fail(Errc::ParseError, e.what());
    }
    return parse_profile(doc, inst);
}

CategoryId category_by_name(const Instance& inst, const std::string& name) {
    const auto pos = std::find(inst.category_names.begin(), inst.category_names.end(), name);
    if (pos == inst.category_names.end())
        fail(Errc::UnknownCategory, "'" + name + "'");
    return CategoryId{static_cast<int>(pos - inst.category_names.begin())};
}

PrecedenceOrder parse_precedence(const Instance& inst, const std::string& names) {
    PrecedenceOrder order;
    std::stringstream stream(names);
    std::string token;
    while (std::getline(stream, token, ','))
        if (!token.empty())
            order.sequence.push_back(category_by_name(inst, token));
    validate_precedence(inst, order);
    return order;
}

Json serialize_matching(const Instance& inst, const Matching& mu) {
    Json out;
    for (int i = 0; i < inst.n_patients(); ++i) {
        const auto c = mu.at(PatientId{i});
        if (c)
            out[inst.patient_names[static_cast<size_t>(i)]] =
                inst.category_names[static_cast<size_t>(c->value)];
        else
            out[inst.patient_names[static_cast<size_t>(i)]] = nullptr;
    }
    return out;
}

Json serialize_cutoffs(const Instance& inst, const CutoffVector& f) {
    Json out;
    for (int c = 0; c < inst.n_categories(); ++c) {
        const auto& x = f.cutoff[static_cast<size_t>(c)];
        if (x)
            out[inst.category_names[static_cast<size_t>(c)]] =
                inst.patient_names[static_cast<size_t>(x->value)];
        else
            out[inst.category_names[static_cast<size_t>(c)]] = nullptr;
    }
    return out;
}

Json serialize_trace(const Instance& inst, const StepTrace& trace) {
    Json out = Json::array();
    int step = 1;
    for (const auto& entry : trace.steps) {
        Json row;
        row["step"] = step++;
        row["category"] = inst.category_names[static_cast<size_t>(entry.category.value)];
        Json assigned = Json::array();
        for (PatientId i : entry.assigned)
            assigned.push_back(inst.patient_names[static_cast<size_t>(i.value)]);
        row["patients"] = std::move(assigned);
        out.push_back(std::move(row));
    }
    return out;
}

Json result_report(const Instance& inst, const Matching& mu, Json mechanism,
                   const StepTrace* trace) {
    Json report;
    report["mechanism"] = std::move(mechanism);
    report["matching"] = serialize_matching(inst, mu);
    Json matched = Json::array();
    for (PatientId i : matched_set(mu))
        matched.push_back(inst.patient_names[static_cast<size_t>(i.value)]);
    report["matched"] = std::move(matched);
    Json cutoffs;
    cutoffs["max"] = serialize_cutoffs(inst, max_cutoff_vector(inst, mu));
    cutoffs["min"] = serialize_cutoffs(inst, min_cutoff_vector(inst, mu));
    report["cutoffs"] = std::move(cutoffs);
    if (trace)
        report["trace"] = serialize_trace(inst, *trace);
    return report;
}

namespace {

void append_text(std::ostringstream& out, const std::string& prefix, const Json& value) {
    if (value.is_object()) {
        for (const auto& [key, item] : value.items())
            append_text(out, prefix.empty() ? key : prefix + "." + key, item);
    } else if (value.is_array()) {
        out << prefix << ":";
        for (const auto& item : value)
            out << " " << (item.is_string() ? item.get<std::string>() : item.dump());
        out << "\n";
    } else if (value.is_null()) {
        out << prefix << ": -\n";
    } else if (value.is_string()) {
        out << prefix << ": " << value.get<std::string>() << "\n";
    } else {
        out << prefix << ": " << value.dump() << "\n";
    }
}

} // namespace

std::string to_text(const Json& report) {
    std::ostringstream out;
    append_text(out, "", report);
    return out.str();
}

} // namespace reserve::io
