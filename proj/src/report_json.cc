// Copyright 2026 The kuniform Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kuniform/report_json.h"

#include "json.hpp"

namespace kuniform {

OaSummary summarize_oa(const OrthogonalArray &a) {
    OaSummary s;
    s.strength = max_strength(a);
    s.index = oa_index(a, s.strength);
    s.tight = is_tight(a);
    for (size_t k = 1; 2 * k <= a.factors(); k++) {
        if (is_irredundant(a, k).irredundant) {
            s.irredundant_at.push_back(k);
        }
    }
    return s;
}

std::string oa_summary_json(const OaSummary &s, std::optional<size_t> requested, std::optional<bool> holds) {
    nlohmann::json j;
    j["strength"] = s.strength;
    j["index"] = s.index;
    j["tight"] = s.tight;
    j["irredundant_at"] = s.irredundant_at;
    if (requested.has_value()) {
        j["requested_strength"] = *requested;
        j["holds"] = holds.value_or(false);
    }
    return j.dump(2);
}

std::string uniformity_report_json(const UniformityReport &report) {
    nlohmann::json j;
    j["n"] = report.qudits;
    j["k"] = report.k;
    j["tol"] = report.tol;
    j["certified"] = report.certified;
    j["label_base"] = 1;
    j["failures"] = report.failure_count();
    j["max_deviation"] = report.max_deviation();
    auto subsets = nlohmann::json::array();
    for (const auto &s : report.subsets) {
        nlohmann::json e;
        std::vector<size_t> labels;
        for (size_t q : s.keep) {
            labels.push_back(q + 1);
        }
        e["qudits"] = labels;
        e["maximally_mixed"] = s.maximally_mixed;
        e["deviation"] = s.deviation;
        if (!s.eigenvalues.empty()) {
            e["eigenvalues"] = s.eigenvalues;
        }
        subsets.push_back(std::move(e));
    }
    j["subsets"] = std::move(subsets);
    return j.dump(2);
}

std::string bound_report_json(const BoundReport &report) {
    nlohmann::json j;
    j["n"] = report.n;
    j["d"] = report.d;
    j["k"] = report.k;
    j["min_runs"] = report.min_runs;
    if (report.tight.has_value()) {
        j["tight"] = *report.tight;
    }
    return j.dump(2);
}

}  // namespace kuniform
