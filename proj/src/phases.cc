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

#include "kuniform/phases.h"

#include <algorithm>
#include <map>
#include <sstream>

#include "kuniform/error.h"
#include "kuniform/uniformity.h"

namespace kuniform {

namespace {

struct Cell {
    ColumnSet keep;
    size_t row;
    size_t col;
    /// (i, j): row i has the `row` pattern on keep, row j the `col` pattern.
    std::vector<std::pair<size_t, size_t>> pairs;
};

void check_preconditions(const OrthogonalArray &a, size_t k) {
    if (k < 1 || 2 * k > a.factors()) {
        std::stringstream ss;
        ss << "sign fixing needs 1 <= k <= N/2, got k=" << k << " for N=" << a.factors();
        throw Error(ErrorCode::kParameterViolation, ss.str());
    }
    if (!verify_strength(a, k)) {
        std::stringstream ss;
        ss << "array is not of strength " << k;
        throw Error(ErrorCode::kNotAnOAAtStrength, ss.str());
    }
    auto rows = a.sorted_rows();
    if (std::adjacent_find(rows.begin(), rows.end()) != rows.end()) {
        throw Error(ErrorCode::kDuplicateRows, "array has repeated rows");
    }
}

// Every off-diagonal cell with at least one contributing row pair, ordered
// by kept subset and then cell.
std::vector<Cell> collect_cells(const OrthogonalArray &a, size_t k) {
    std::vector<Cell> out;
    const uint64_t d = a.levels();
    for_each_subset(a.factors(), k, [&](const ColumnSet &keep) {
        ColumnSet drop = complement(a.factors(), keep);
        std::map<Word, std::vector<size_t>> groups;
        for (size_t i = 0; i < a.runs(); i++) {
            Word env;
            for (size_t c : drop) {
                env.push_back(a.at(i, c));
            }
            groups[env].push_back(i);
        }
        auto index = [&](size_t i) {
            size_t v = 0;
            for (size_t c : keep) {
                v = v * d + a.at(i, c);
            }
            return v;
        };
        std::map<std::pair<size_t, size_t>, std::vector<std::pair<size_t, size_t>>> cells;
        for (const auto &[env, members] : groups) {
            for (size_t x = 0; x < members.size(); x++) {
                for (size_t y = x + 1; y < members.size(); y++) {
                    size_t i = members[x];
                    size_t j = members[y];
                    size_t ai = index(i);
                    size_t aj = index(j);
                    if (ai > aj) {
                        std::swap(i, j);
                        std::swap(ai, aj);
                    }
                    cells[{ai, aj}].emplace_back(i, j);
                }
            }
        }
        for (auto &[key, pairs] : cells) {
            std::sort(pairs.begin(), pairs.end());
            out.push_back(Cell{keep, key.first, key.second, std::move(pairs)});
        }
        return true;
    });
    return out;
}

std::string describe(const Cell &c) {
    std::stringstream ss;
    ss << "kept columns {";
    for (size_t i = 0; i < c.keep.size(); i++) {
        ss << (i ? "," : "") << c.keep[i];
    }
    ss << "} cell (" << c.row << "," << c.col << ") has " << c.pairs.size() << " contributing row pairs";
    return ss.str();
}

bool cells_cancel(const std::vector<Cell> &cells, const std::vector<uint8_t> &bits) {
    for (const auto &c : cells) {
        int sum = 0;
        for (const auto &[i, j] : c.pairs) {
            sum += (bits[i] ^ bits[j]) ? -1 : 1;
        }
        if (sum != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace

SignConstraintSystem constraint_system(const OrthogonalArray &a, size_t k) {
    check_preconditions(a, k);
    auto cells = collect_cells(a, k);
    for (const auto &c : cells) {
        if (c.pairs.size() % 2 == 1) {
            throw Error(ErrorCode::kOddContributions, describe(c));
        }
    }
    for (const auto &c : cells) {
        if (c.pairs.size() >= 4) {
            throw Error(ErrorCode::kUnsupportedMultiplicity, describe(c));
        }
    }
    SignConstraintSystem sys;
    sys.variables = a.runs();
    for (const auto &c : cells) {
        std::vector<size_t> vars{c.pairs[0].first, c.pairs[0].second, c.pairs[1].first, c.pairs[1].second};
        std::sort(vars.begin(), vars.end());
        sys.constraints.push_back(SignConstraint{std::move(vars), 1, c.keep, c.row, c.col});
    }
    return sys;
}

std::optional<std::vector<uint8_t>> solve_signs(const SignConstraintSystem &sys) {
    const size_t n = sys.variables;
    const size_t words = (n + 63) / 64 + 1;  // last word holds the parity in bit 0
    std::vector<std::vector<uint64_t>> rows;
    bool even = true;
    for (const auto &c : sys.constraints) {
        std::vector<uint64_t> row(words, 0);
        for (size_t v : c.variables) {
            if (v >= n) {
                throw Error(ErrorCode::kInvalidArgument, "constraint references an unknown variable");
            }
            row[v / 64] ^= 1ull << (v % 64);
        }
        row[words - 1] = c.parity & 1;
        rows.push_back(std::move(row));
        even = even && c.variables.size() % 2 == 0;
    }
    if (even && n > 0) {
        std::vector<uint64_t> gauge(words, 0);
        gauge[0] = 1;
        rows.push_back(std::move(gauge));
    }

    std::vector<size_t> pivot_col;
    size_t rank = 0;
    for (size_t col = 0; col < n && rank < rows.size(); col++) {
        uint64_t mask = 1ull << (col % 64);
        size_t w = col / 64;
        size_t pivot = rank;
        while (pivot < rows.size() && !(rows[pivot][w] & mask)) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != rank && (rows[r][w] & mask)) {
                for (size_t x = 0; x < words; x++) {
                    rows[r][x] ^= rows[rank][x];
                }
            }
        }
        pivot_col.push_back(col);
        rank++;
    }
    for (size_t r = rank; r < rows.size(); r++) {
        if (rows[r][words - 1] & 1) {
            return std::nullopt;
        }
    }
    std::vector<uint8_t> bits(n, 0);
    for (size_t r = 0; r < rank; r++) {
        bits[pivot_col[r]] = (uint8_t)(rows[r][words - 1] & 1);
    }
    return bits;
}

bool satisfies(const SignConstraintSystem &sys, std::span<const uint8_t> bits) {
    if (bits.size() != sys.variables) {
        return false;
    }
    for (const auto &c : sys.constraints) {
        uint8_t acc = 0;
        for (size_t v : c.variables) {
            acc ^= bits[v] & 1;
        }
        if (acc != (c.parity & 1)) {
            return false;
        }
    }
    return true;
}

FixResult fix_state(const OrthogonalArray &a, size_t k) {
    check_preconditions(a, k);
    auto cells = collect_cells(a, k);
    FixResult result{FixStatus::kInfeasible, std::nullopt, {}, false, ""};

    bool many = false;
    for (const auto &c : cells) {
        if (c.pairs.size() % 2 == 1) {
            result.detail = describe(c) + "; no +-1 signs can cancel it";
            return result;
        }
        many = many || c.pairs.size() >= 4;
    }

    std::optional<std::vector<uint8_t>> bits;
    if (!many) {
        bits = solve_signs(constraint_system(a, k));
        if (!bits.has_value()) {
            result.detail = "sign constraint system is inconsistent";
            return result;
        }
    } else {
        if (a.runs() > kMaxExhaustiveRuns) {
            std::stringstream ss;
            ss << "cells with four or more contributing pairs and r=" << a.runs() << " > " << kMaxExhaustiveRuns;
            result.status = FixStatus::kUnsupported;
            result.detail = ss.str();
            return result;
        }
        result.exhaustive = true;
        const size_t r = a.runs();
        std::vector<uint8_t> trial(r, 0);
        for (uint64_t mask = 0; mask < (1ull << (r - 1)); mask++) {
            for (size_t i = 1; i < r; i++) {
                trial[i] = (uint8_t)((mask >> (i - 1)) & 1);
            }
            if (cells_cancel(cells, trial)) {
                bits = trial;
                break;
            }
        }
        if (!bits.has_value()) {
            result.detail = "exhaustive search found no sign assignment";
            return result;
        }
    }

    auto phases = signs_to_phases(*bits);
    PureState state = state_from_oa(a, std::span<const Phase>(phases));
    if (!is_k_uniform(state, k)) {
        throw Error(ErrorCode::kUnsupported, "sign assignment did not certify; internal inconsistency");
    }
    result.status = FixStatus::kSolved;
    result.state = std::move(state);
    result.signs = std::move(*bits);
    return result;
}

}  // namespace kuniform
