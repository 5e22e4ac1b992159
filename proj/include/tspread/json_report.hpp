#pragma once

#include <string>

#include <json.hpp>

#include "tspread/classify.hpp"
#include "tspread/ideal.hpp"
#include "tspread/monomial.hpp"
#include "tspread/sweep.hpp"

namespace tspread {

using ordered_json = nlohmann::ordered_json;

inline void to_json(ordered_json& j, const FreimanVerdict& v) {
    j = ordered_json{{"mu", v.mu},
                     {"ell", v.ell},
                     {"mu2", v.mu2},
                     {"bound", v.bound},
                     {"is_freiman", v.is_freiman}};
}

inline void from_json(const ordered_json& j, FreimanVerdict& v) {
    j.at("mu").get_to(v.mu);
    j.at("ell").get_to(v.ell);
    j.at("mu2").get_to(v.mu2);
    j.at("bound").get_to(v.bound);
    j.at("is_freiman").get_to(v.is_freiman);
}

inline void to_json(ordered_json& j, const ClassificationResult& r) {
    j = ordered_json{{"verdict", r.is_freiman},
                     {"case_label", r.case_label},
                     {"reductions", r.reductions}};
}

inline void from_json(const ordered_json& j, ClassificationResult& r) {
    j.at("verdict").get_to(r.is_freiman);
    j.at("case_label").get_to(r.case_label);
    j.at("reductions").get_to(r.reductions);
}

inline void to_json(ordered_json& j, const MismatchRecord& r) {
    j = ordered_json{{"u", Monomial::from_indices(r.indices).str()},
                     {"indices", r.indices},
                     {"t", r.t},
                     {"reasons", r.reasons}};
    j["direct"] = r.direct ? ordered_json(*r.direct) : ordered_json(nullptr);
    j["chordal"] = r.chordal ? ordered_json(*r.chordal) : ordered_json(nullptr);
    j["closed_form"] = r.closed_form ? ordered_json(*r.closed_form) : ordered_json(nullptr);
    if (r.certificate_kind.empty()) {
        j["certificate"] = nullptr;
    } else {
        j["certificate"] = ordered_json{{"kind", r.certificate_kind},
                                        {"vertices", r.certificate_vertices}};
    }
}

inline void from_json(const ordered_json& j, MismatchRecord& r) {
    j.at("indices").get_to(r.indices);
    j.at("t").get_to(r.t);
    j.at("reasons").get_to(r.reasons);
    auto opt_bool = [&](const char* key) -> std::optional<bool> {
        if (j.at(key).is_null()) return std::nullopt;
        return j.at(key).get<bool>();
    };
    r.direct = opt_bool("direct");
    r.chordal = opt_bool("chordal");
    r.closed_form = opt_bool("closed_form");
    if (j.at("certificate").is_null()) {
        r.certificate_kind.clear();
        r.certificate_vertices.clear();
    } else {
        j.at("certificate").at("kind").get_to(r.certificate_kind);
        j.at("certificate").at("vertices").get_to(r.certificate_vertices);
    }
}

inline void to_json(ordered_json& j, const IntroDiscrepancy& r) {
    j = ordered_json{{"u", Monomial::from_indices(r.indices).str()},
                     {"indices", r.indices},
                     {"t", r.t},
                     {"truth", r.truth},
                     {"intro_verdict", r.intro_verdict}};
}

inline void from_json(const ordered_json& j, IntroDiscrepancy& r) {
    j.at("indices").get_to(r.indices);
    j.at("t").get_to(r.t);
    j.at("truth").get_to(r.truth);
    j.at("intro_verdict").get_to(r.intro_verdict);
}

inline void to_json(ordered_json& j, const SweepResult& r) {
    j = ordered_json{{"instances_checked", r.instances_checked},
                     {"agreements", r.agreements},
                     {"mismatch_count", r.mismatches.size()},
                     {"mismatches", r.mismatches},
                     {"intro_discrepancies", r.intro_discrepancies},
                     {"case_labels", r.case_label_counts},
                     {"elapsed_seconds", r.elapsed_seconds}};
}

inline void from_json(const ordered_json& j, SweepResult& r) {
    j.at("instances_checked").get_to(r.instances_checked);
    j.at("agreements").get_to(r.agreements);
    j.at("mismatches").get_to(r.mismatches);
    j.at("intro_discrepancies").get_to(r.intro_discrepancies);
    j.at("case_labels").get_to(r.case_label_counts);
    j.at("elapsed_seconds").get_to(r.elapsed_seconds);
}

/// Stable-field-order report text for any of the result types.
template <typename T>
std::string report_json(const T& value) {
    return ordered_json(value).dump(2);
}

} // namespace tspread
