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

#ifndef KUNIFORM_REPORT_JSON_H
#define KUNIFORM_REPORT_JSON_H

#include <optional>
#include <string>
#include <vector>

#include "kuniform/bounds.h"
#include "kuniform/orthogonal_array.h"
#include "kuniform/uniformity.h"

namespace kuniform {

struct OaSummary {
    size_t strength;
    /// r / d^strength.
    uint64_t index;
    bool tight;
    /// Every k in [1, N/2] for which is_irredundant(a, k) holds.
    std::vector<size_t> irredundant_at;
};

OaSummary summarize_oa(const OrthogonalArray &a);

/// {"strength", "index", "tight", "irredundant_at"} plus
/// {"requested_strength", "holds"} when a strength was requested.
std::string oa_summary_json(
    const OaSummary &s, std::optional<size_t> requested = std::nullopt, std::optional<bool> holds = std::nullopt);

/// Qudit labels in the report are 1-based; "label_base" records that.
///
///   {"n", "k", "tol", "certified", "label_base": 1, "failures",
///    "max_deviation", "subsets": [{"qudits", "maximally_mixed",
///    "deviation", "eigenvalues"?}]}
std::string uniformity_report_json(const UniformityReport &report);

/// {"n", "d", "k", "min_runs", "tight"?}
std::string bound_report_json(const BoundReport &report);

}  // namespace kuniform

#endif
