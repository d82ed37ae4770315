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

#include "kuniform/orthogonal_array.h"

#include <algorithm>
#include <sstream>
#include <string>
#include <unordered_map>

#include "kuniform/bounds.h"
#include "kuniform/error.h"

namespace kuniform {

namespace {

std::string restricted_key(std::span<const Symbol> row, std::span<const size_t> columns) {
    std::string key;
    key.reserve(columns.size() * 2);
    for (size_t c : columns) {
        key.push_back((char)(row[c] & 0xFF));
        key.push_back((char)(row[c] >> 8));
    }
    return key;
}

bool is_permutation_of_range(std::span<const size_t> order, size_t n) {
    if (order.size() != n) {
        return false;
    }
    std::vector<bool> seen(n, false);
    for (size_t v : order) {
        if (v >= n || seen[v]) {
            return false;
        }
        seen[v] = true;
    }
    return true;
}

}  // namespace

OrthogonalArray::OrthogonalArray(
    size_t runs, size_t factors, uint32_t levels, std::vector<Symbol> cells, std::optional<size_t> declared_strength)
    : runs_(runs), factors_(factors), levels_(levels), cells_(std::move(cells)), declared_strength_(declared_strength) {
    if (levels_ == 0) {
        throw Error(ErrorCode::kInvalidArgument, "an array needs at least one level");
    }
    if (cells_.size() != runs_ * factors_) {
        std::stringstream ss;
        ss << "expected " << runs_ << "x" << factors_ << " cells, got " << cells_.size();
        throw Error(ErrorCode::kShapeMismatch, ss.str());
    }
    for (size_t i = 0; i < cells_.size(); i++) {
        if (cells_[i] >= levels_) {
            std::stringstream ss;
            ss << "symbol " << cells_[i] << " at row " << i / factors_ << ", column " << i % factors_
               << " is not below d=" << levels_;
            throw Error(ErrorCode::kSymbolOutOfRange, ss.str());
        }
    }
    if (declared_strength_.has_value() && !verify_strength(*this, *declared_strength_)) {
        std::stringstream ss;
        ss << "rows do not form an OA(" << runs_ << "," << factors_ << "," << levels_ << "," << *declared_strength_
           << ")";
        throw Error(ErrorCode::kParameterMismatch, ss.str());
    }
}

OrthogonalArray OrthogonalArray::from_rows(
    const std::vector<std::vector<Symbol>> &rows, uint32_t levels, std::optional<size_t> declared_strength) {
    size_t factors = rows.empty() ? 0 : rows[0].size();
    std::vector<Symbol> cells;
    cells.reserve(rows.size() * factors);
    for (const auto &r : rows) {
        if (r.size() != factors) {
            throw Error(ErrorCode::kShapeMismatch, "rows have different lengths");
        }
        cells.insert(cells.end(), r.begin(), r.end());
    }
    return OrthogonalArray(rows.size(), factors, levels, std::move(cells), declared_strength);
}

std::optional<uint64_t> OrthogonalArray::declared_index() const {
    if (!declared_strength_.has_value()) {
        return std::nullopt;
    }
    return runs_ / checked_pow(levels_, *declared_strength_);
}

std::vector<std::vector<Symbol>> OrthogonalArray::rows() const {
    std::vector<std::vector<Symbol>> out;
    out.reserve(runs_);
    for (size_t i = 0; i < runs_; i++) {
        auto r = row(i);
        out.emplace_back(r.begin(), r.end());
    }
    return out;
}

std::vector<std::vector<Symbol>> OrthogonalArray::sorted_rows() const {
    auto out = rows();
    std::sort(out.begin(), out.end());
    return out;
}

bool OrthogonalArray::operator==(const OrthogonalArray &other) const {
    return runs_ == other.runs_ && factors_ == other.factors_ && levels_ == other.levels_ && cells_ == other.cells_;
}

bool same_row_set(const OrthogonalArray &a, const OrthogonalArray &b) {
    return a.factors() == b.factors() && a.levels() == b.levels() && a.sorted_rows() == b.sorted_rows();
}

bool verify_strength(const OrthogonalArray &a, size_t k) {
    if (k == 0) {
        return true;
    }
    if (k > a.factors()) {
        return false;
    }
    const uint64_t d = a.levels();
    uint64_t tuples = 1;
    for (size_t i = 0; i < k; i++) {
        tuples *= d;
        if (tuples > a.runs()) {
            return false;
        }
    }
    if (a.runs() % tuples != 0) {
        return false;
    }
    const uint64_t lambda = a.runs() / tuples;
    std::vector<uint32_t> counts(tuples);
    bool ok = true;
    for_each_subset(a.factors(), k, [&](const ColumnSet &cols) {
        std::fill(counts.begin(), counts.end(), 0);
        for (size_t i = 0; i < a.runs(); i++) {
            uint64_t idx = 0;
            for (size_t c : cols) {
                idx = idx * d + a.at(i, c);
            }
            if (++counts[idx] > lambda) {
                ok = false;
                return false;
            }
        }
        return true;
    });
    return ok;
}

size_t max_strength(const OrthogonalArray &a) {
    size_t k = 0;
    while (k < a.factors() && verify_strength(a, k + 1)) {
        k++;
    }
    return k;
}

uint64_t oa_index(const OrthogonalArray &a, size_t k) {
    if (!verify_strength(a, k)) {
        std::stringstream ss;
        ss << "array is not an orthogonal array of strength " << k;
        throw Error(ErrorCode::kNotAnOAAtStrength, ss.str());
    }
    return a.runs() / checked_pow(a.levels(), k);
}

IrredundancyResult is_irredundant(const OrthogonalArray &a, size_t k) {
    if (k > a.factors()) {
        throw Error(ErrorCode::kInvalidArgument, "cannot remove more columns than the array has");
    }
    IrredundancyResult result{true, std::nullopt};
    std::unordered_map<std::string, size_t> first_seen;
    for_each_subset(a.factors(), k, [&](const ColumnSet &removed) {
        ColumnSet kept = complement(a.factors(), removed);
        first_seen.clear();
        for (size_t i = 0; i < a.runs(); i++) {
            auto [it, inserted] = first_seen.emplace(restricted_key(a.row(i), kept), i);
            if (!inserted) {
                result.irredundant = false;
                result.witness = RedundancyWitness{removed, it->second, i};
                return false;
            }
        }
        return true;
    });
    return result;
}

bool is_tight(const OrthogonalArray &a) {
    if (a.levels() < 2 || a.factors() == 0) {
        return false;
    }
    return a.runs() == rao_min_runs(a.factors(), a.levels(), max_strength(a));
}

OrthogonalArray remove_columns(const OrthogonalArray &a, std::span<const size_t> columns) {
    for (size_t c : columns) {
        if (c >= a.factors()) {
            std::stringstream ss;
            ss << "column " << c << " out of range for " << a.factors() << " factors";
            throw Error(ErrorCode::kInvalidArgument, ss.str());
        }
    }
    ColumnSet kept = complement(a.factors(), columns);
    if (kept.empty()) {
        throw Error(ErrorCode::kEmptyResult, "all columns removed");
    }
    std::vector<Symbol> cells;
    cells.reserve(a.runs() * kept.size());
    for (size_t i = 0; i < a.runs(); i++) {
        for (size_t c : kept) {
            cells.push_back(a.at(i, c));
        }
    }
    return OrthogonalArray(a.runs(), kept.size(), a.levels(), std::move(cells));
}

OrthogonalArray derive(const OrthogonalArray &a, Symbol symbol) {
    if (symbol >= a.levels()) {
        std::stringstream ss;
        ss << "symbol " << symbol << " is not below d=" << a.levels();
        throw Error(ErrorCode::kSymbolOutOfRange, ss.str());
    }
    if (a.factors() < 2) {
        throw Error(ErrorCode::kEmptyResult, "deriving a single-column array leaves no columns");
    }
    std::vector<Symbol> cells;
    size_t runs = 0;
    for (size_t i = 0; i < a.runs(); i++) {
        if (a.at(i, 0) != symbol) {
            continue;
        }
        auto r = a.row(i);
        cells.insert(cells.end(), r.begin() + 1, r.end());
        runs++;
    }
    return OrthogonalArray(runs, a.factors() - 1, a.levels(), std::move(cells));
}

OrthogonalArray juxtapose(std::span<const OrthogonalArray> arrays) {
    if (arrays.empty()) {
        throw Error(ErrorCode::kEmptyResult, "nothing to juxtapose");
    }
    const size_t n = arrays[0].factors();
    const uint32_t d = arrays[0].levels();
    size_t runs = 0;
    size_t min_k = SIZE_MAX;
    std::vector<Symbol> cells;
    for (const auto &a : arrays) {
        if (a.factors() != n || a.levels() != d) {
            throw Error(ErrorCode::kShapeMismatch, "juxtaposed arrays need equal N and d");
        }
        cells.insert(cells.end(), a.cells().begin(), a.cells().end());
        runs += a.runs();
        min_k = std::min(min_k, max_strength(a));
    }
    OrthogonalArray out(runs, n, d, std::move(cells));
    if (!verify_strength(out, min_k)) {
        throw Error(ErrorCode::kNotAnOAAtStrength, "juxtaposition lost strength");
    }
    return out;
}

OrthogonalArray extend_with_symbol(std::span<const OrthogonalArray> arrays) {
    if (arrays.empty() || arrays.size() != arrays[0].levels()) {
        std::stringstream ss;
        ss << "expected exactly d arrays, got " << arrays.size();
        throw Error(ErrorCode::kWrongCount, ss.str());
    }
    const auto &first = arrays[0];
    size_t k = SIZE_MAX;
    for (const auto &a : arrays) {
        if (a.runs() != first.runs() || a.factors() != first.factors() || a.levels() != first.levels()) {
            throw Error(ErrorCode::kShapeMismatch, "extended arrays need identical (r, N, d)");
        }
        k = std::min(k, max_strength(a));
    }
    std::vector<Symbol> cells;
    cells.reserve(arrays.size() * first.runs() * (first.factors() + 1));
    for (size_t s = 0; s < arrays.size(); s++) {
        for (size_t i = 0; i < first.runs(); i++) {
            cells.push_back((Symbol)s);
            auto r = arrays[s].row(i);
            cells.insert(cells.end(), r.begin(), r.end());
        }
    }
    OrthogonalArray out(arrays.size() * first.runs(), first.factors() + 1, first.levels(), std::move(cells));
    if (!verify_strength(out, k)) {
        throw Error(ErrorCode::kNotAnOAAtStrength, "extension lost strength");
    }
    return out;
}

OrthogonalArray permute_rows(const OrthogonalArray &a, std::span<const size_t> order) {
    if (!is_permutation_of_range(order, a.runs())) {
        throw Error(ErrorCode::kNotAPermutation, "row order is not a permutation of the runs");
    }
    std::vector<Symbol> cells;
    cells.reserve(a.cells().size());
    for (size_t i : order) {
        auto r = a.row(i);
        cells.insert(cells.end(), r.begin(), r.end());
    }
    return OrthogonalArray(a.runs(), a.factors(), a.levels(), std::move(cells));
}

OrthogonalArray permute_columns(const OrthogonalArray &a, std::span<const size_t> order) {
    if (!is_permutation_of_range(order, a.factors())) {
        throw Error(ErrorCode::kNotAPermutation, "column order is not a permutation of the factors");
    }
    std::vector<Symbol> cells;
    cells.reserve(a.cells().size());
    for (size_t i = 0; i < a.runs(); i++) {
        for (size_t c : order) {
            cells.push_back(a.at(i, c));
        }
    }
    return OrthogonalArray(a.runs(), a.factors(), a.levels(), std::move(cells));
}

OrthogonalArray permute_levels(const OrthogonalArray &a, std::span<const std::vector<Symbol>> maps) {
    if (maps.size() != a.factors()) {
        throw Error(ErrorCode::kNotAPermutation, "need one level permutation per column");
    }
    for (const auto &m : maps) {
        std::vector<size_t> as_index(m.begin(), m.end());
        if (!is_permutation_of_range(as_index, a.levels())) {
            throw Error(ErrorCode::kNotAPermutation, "level map is not a permutation of {0..d-1}");
        }
    }
    std::vector<Symbol> cells = a.cells();
    for (size_t i = 0; i < a.runs(); i++) {
        for (size_t c = 0; c < a.factors(); c++) {
            Symbol &s = cells[i * a.factors() + c];
            s = maps[c][s];
        }
    }
    return OrthogonalArray(a.runs(), a.factors(), a.levels(), std::move(cells));
}

}  // namespace kuniform
