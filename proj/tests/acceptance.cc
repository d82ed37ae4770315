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

// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any
// failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "dense_oracle.h"
#include "kuniform/bounds.h"
#include "kuniform/constructions.h"
#include "kuniform/error.h"
#include "kuniform/graph.h"
#include "kuniform/hadamard.h"
#include "kuniform/ket.h"
#include "kuniform/phases.h"
#include "kuniform/reduction.h"
#include "kuniform/uniformity.h"
#include "test_util.h"

using namespace kuniform;
using namespace kuniform::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Each check appends a reason to `why` on failure.
using Check = std::function<bool(std::string &why)>;

bool certified_at(const std::string &name, size_t k, std::string &why) {
    auto report = uniformity(load_ket(name), k);
    if (!report.certified || report.max_deviation() > 1e-9) {
        why += name + " not certified at k=" + std::to_string(k) + "; ";
        return false;
    }
    return true;
}

bool criterion1(std::string &why) {
    auto t0 = Clock::now();
    const std::vector<std::pair<std::string, size_t>> cases = {
        {"five_qubit_signed_2u", 2}, {"six_qubit_signed_3u", 3}, {"three_qubit_1u", 1},
        {"four_qubit_1u", 1},        {"four_qubit_1u_a", 1},     {"four_qubit_1u_b", 1},
        {"h8_2u_n6", 2},             {"h8_2u_n7", 2},            {"five_qubit_h8_signed_2u", 2},
        {"h12_2u_n8", 2},            {"h12_2u_n9", 2},           {"h12_2u_n10", 2},
        {"h12_2u_n11", 2},           {"h16_2u_n8", 2},           {"h16_2u_n9", 2},
        {"h16_2u_n10", 2},           {"h16_2u_n11", 2},          {"h16_2u_n12", 2},
        {"h16_2u_n13", 2},           {"h16_2u_n14", 2},          {"h16_2u_n15", 2},
        {"qutrit_2u_n4", 2},         {"ququart_2u_n5", 2},       {"ququart_3u_n6", 3},
        {"d5_2u_n6", 2},             {"even_weight_n7", 1},
    };
    bool ok = true;
    for (const auto &[name, k] : cases) {
        ok &= certified_at(name, k, why);
    }
    double t = seconds_since(t0);
    if (t >= 30) {
        why += "runtime " + std::to_string(t) + " s; ";
        ok = false;
    }
    return ok;
}

bool criterion2(std::string &why) {
    auto report = uniformity(load_ket("seven_qubit_almost_3u"), 3);
    if (report.subsets.size() != 35 || report.failure_count() != 3) {
        why += "expected 3 of 35 failing subsets, got " + std::to_string(report.failure_count()) + "; ";
        return false;
    }
    for (const auto &s : report.subsets) {
        if (s.maximally_mixed) {
            continue;
        }
        size_t quarter = 0;
        for (double e : s.eigenvalues) {
            if (std::abs(e - 0.25) <= 1e-9) {
                quarter++;
            } else if (std::abs(e) >= 1e-9) {
                why += "unexpected eigenvalue; ";
                return false;
            }
        }
        if (quarter != 4) {
            why += "expected four eigenvalues of 1/4; ";
            return false;
        }
    }
    return true;
}

bool criterion3(std::string &why) {
    bool ok = true;
    if (max_uniformity(load_ket("six_qubit_layered_product")) != 0) {
        why += "layered product is 1-uniform; ";
        ok = false;
    }
    if (max_uniformity(parse_ket("+|001> +|010> +|100>")) != 0) {
        why += "W state is 1-uniform; ";
        ok = false;
    }
    auto report = uniformity(load_ket("five_qubit_oa8522"), 2);
    std::vector<ColumnSet> failing;
    for (const auto &s : report.subsets) {
        if (!s.maximally_mixed) {
            failing.push_back(s.keep);
        }
    }
    if (failing != std::vector<ColumnSet>{{1, 3}, {2, 4}}) {
        why += "OA(8,5,2,2) state failing subsets differ; ";
        ok = false;
    }
    return ok;
}

bool criterion4(std::string &why) {
    for (uint64_t n = 2; n <= 64; n++) {
        bool ok = rao_min_runs(n, 2, 1) == 2 && rao_min_runs(n, 2, 2) == n + 1;
        if (n >= 3) {
            ok &= rao_min_runs(n, 2, 3) == 2 * n;
        }
        if (n >= 4) {
            ok &= 2 * rao_min_runs(n, 2, 4) == n * n + n + 2;
        }
        if (n >= 5) {
            ok &= rao_min_runs(n, 2, 5) == n * n - n + 2;
        }
        if (!ok) {
            why += "closed form mismatch at N=" + std::to_string(n) + "; ";
            return false;
        }
    }
    for (uint64_t n = 2; n < 14; n++) {
        if (gv_holds(n, 3)) {
            why += "gv_holds(" + std::to_string(n) + ",3) already true; ";
            return false;
        }
    }
    if (!gv_holds(14, 3)) {
        why += "gv_holds(14,3) false; ";
        return false;
    }
    return true;
}

bool criterion5(std::string &why) {
    auto t0 = Clock::now();
    size_t found = 0;
    for (uint32_t mask = 0; mask < (1u << 16); mask++) {
        std::vector<std::vector<Symbol>> rows(4, std::vector<Symbol>(4));
        for (size_t i = 0; i < 16; i++) {
            rows[i / 4][i % 4] = (Symbol)((mask >> i) & 1);
        }
        if (verify_strength(OrthogonalArray::from_rows(rows, 2), 2)) {
            found++;
        }
    }
    double t = seconds_since(t0);
    if (found != 0) {
        why += std::to_string(found) + " arrays of strength 2; ";
    }
    if (t >= 5) {
        why += "runtime " + std::to_string(t) + " s; ";
    }
    return found == 0 && t < 5;
}

bool criterion6(std::string &why) {
    bool ok = true;
    std::vector<HadamardMatrix> hs;
    for (unsigned m = 1; m <= 5; m++) {
        hs.push_back(sylvester(m));
    }
    for (uint32_t q : {3u, 7u, 11u, 19u}) {
        hs.push_back(paley_type1(q));
    }
    hs.push_back(kron(paley_type1(3), sylvester(1)));
    hs.push_back(kron(paley_type1(7), paley_type1(3)));
    hs.push_back(kron(sylvester(2), paley_type1(11)));
    for (const auto &h : hs) {
        std::vector<int8_t> e(h.order() * h.order());
        for (size_t i = 0; i < h.order(); i++) {
            for (size_t j = 0; j < h.order(); j++) {
                e[i * h.order() + j] = h.at(i, j);
            }
        }
        if (!is_hadamard(h.order(), e)) {
            why += "order " + std::to_string(h.order()) + " not Hadamard; ";
            ok = false;
        }
    }
    for (uint32_t d : {3u, 4u, 5u, 7u, 8u, 9u}) {
        for (const auto &a : {rao_oa(d, 2), bush_oa(d, 2)}) {
            if (a.runs() != d * d || a.factors() != d + 1 || !verify_strength(a, 2) || oa_index(a, 2) != 1) {
                why += "index-unity array for d=" + std::to_string(d) + " fails; ";
                ok = false;
            }
        }
    }
    if (!same_row_set(bush_extended_oa(2), oa_8_4_2_3())) {
        why += "bush_extended_oa(2) row set differs; ";
        ok = false;
    }
    auto b4 = bush_extended_oa(4);
    if (b4.runs() != 64 || b4.factors() != 6 || !verify_strength(b4, 3) || oa_index(b4, 3) != 1) {
        why += "bush_extended_oa(4) is not OA(64,6,4,3); ";
        ok = false;
    }
    return ok;
}

OrthogonalArray first_columns(const OrthogonalArray &a, size_t n) {
    std::vector<size_t> drop;
    for (size_t c = n; c < a.factors(); c++) {
        drop.push_back(c);
    }
    return remove_columns(a, drop);
}

int run_cli_capture(std::vector<std::string> args, std::string &out) {
    args.insert(args.begin(), "kuniform");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::istringstream in;
    std::ostringstream o, e;
    int code = run_cli((int)argv.size(), argv.data(), in, o, e);
    out = o.str();
    return code;
}

bool criterion7(std::string &why) {
    bool ok = true;
    for (size_t kappa : {8u, 12u, 16u}) {
        OrthogonalArray full = hadamard_to_oa(hadamard_of_order(kappa));
        for (size_t n = kappa / 2 + 2; n <= kappa - 1; n++) {
            if (!is_k_uniform(state_from_oa(first_columns(full, n)), 2)) {
                why += "kappa=" + std::to_string(kappa) + " N=" + std::to_string(n) + " not 2-uniform; ";
                ok = false;
            }
        }
        OrthogonalArray edge = first_columns(full, kappa / 2 + 1);
        bool irredundant = is_irredundant(edge, 2).irredundant;
        if (irredundant && is_k_uniform(state_from_oa(edge), 2)) {
            why += "kappa=" + std::to_string(kappa) + " still works at N=kappa/2+1; ";
            ok = false;
        }
    }
    for (size_t n = 6; n <= 24; n++) {
        std::string out;
        int code = run_cli_capture({"state", "two-uniform", "--n", std::to_string(n)}, out);
        if (code != 0 || !is_k_uniform(parse_ket(out), 2)) {
            why += "two-uniform --n " + std::to_string(n) + " failed; ";
            ok = false;
        }
    }
    return ok;
}

bool criterion8(std::string &why) {
    auto a = h8_five_column_oa();
    auto r = fix_state(a, 2);
    if (r.status != FixStatus::kSolved || !is_k_uniform(*r.state, 2)) {
        why += "fix_state did not return a certified state; ";
        return false;
    }
    std::vector<uint8_t> known(8, 0);
    known[6] = known[7] = 1;
    if (!satisfies(constraint_system(a, 2), known)) {
        why += "alpha6=alpha7=1 violates the system; ";
        return false;
    }
    return true;
}

bool criterion9(std::string &why) {
    std::mt19937_64 rng(20260101);
    double worst = 0;
    for (int i = 0; i < 200; i++) {
        PureState s = random_sparse_state(rng);
        for (int j = 0; j < 3; j++) {
            ColumnSet keep = random_keep(rng, s.qudits(), s.levels());
            auto rho = reduce(s, keep);
            auto dense = dense_reduce(s, keep);
            for (size_t e = 0; e < dense.size(); e++) {
                worst = std::max(worst, std::abs(rho.entries()[e] - dense[e]));
            }
        }
    }
    if (worst > 1e-12) {
        why += "max entry difference " + std::to_string(worst) + "; ";
        return false;
    }
    return true;
}

bool criterion10(std::string &why) {
    std::vector<std::vector<Symbol>> rows;
    for (uint32_t w = 0; w < 128; w++) {
        if (__builtin_popcount(w) % 2 == 0) {
            std::vector<Symbol> row(7);
            for (size_t c = 0; c < 7; c++) {
                row[c] = (Symbol)((w >> (6 - c)) & 1);
            }
            rows.push_back(row);
        }
    }
    auto a = OrthogonalArray::from_rows(rows, 2);
    if (a.runs() != 64 || max_strength(a) != 6) {
        why += "even-weight array is not OA(64,7,2,6); ";
        return false;
    }
    PureState s = state_from_oa(a);
    for (size_t m = 2; m <= 6; m++) {
        std::optional<DensityMatrix> first;
        for (const auto &keep : all_subsets(7, m)) {
            auto rho = reduce(s, keep);
            if (reduction_rank(rho) != 2) {
                why += "rank differs at size " + std::to_string(m) + "; ";
                return false;
            }
            if (!first) {
                first = rho;
                continue;
            }
            for (size_t e = 0; e < rho.entries().size(); e++) {
                if (std::abs(rho.entries()[e] - first->entries()[e]) > 1e-12) {
                    why += "reductions differ at size " + std::to_string(m) + "; ";
                    return false;
                }
            }
        }
    }
    return true;
}

bool criterion11(std::string &why) {
    bool ok = true;
    std::vector<OrthogonalArray> unity;
    for (uint32_t d : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        unity.push_back(rao_oa(d, 2));
        for (size_t k = 1; k <= d && k <= 4; k++) {
            OrthogonalArray b = bush_oa(d, k);
            if (b.runs() <= 4096) {
                unity.push_back(b);
            }
        }
    }
    for (uint32_t d : {2u, 4u, 8u}) {
        unity.push_back(bush_extended_oa(d));
    }
    for (const auto &a : unity) {
        size_t k = max_strength(a);
        if (oa_index(a, k) != 1 || 2 * k > a.factors()) {
            continue;
        }
        if (!is_irredundant(a, k).irredundant) {
            why += "index-unity array not irredundant; ";
            ok = false;
        }
    }

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> angle(0, 2 * M_PI);
    const std::vector<std::pair<OrthogonalArray, size_t>> states = {
        {rao_oa(3, 2), 2}, {bush_oa(4, 2), 2}, {bush_oa(5, 2), 2}, {bush_extended_oa(4), 3}, {oa_4_3_2_2(), 1}};
    for (const auto &[a, k] : states) {
        PureState base = state_from_oa(a);
        for (int t = 0; t < 50; t++) {
            std::vector<double> angles(base.size() - 1);
            for (double &x : angles) {
                x = angle(rng);
            }
            if (!is_k_uniform(orbit_state(base, angles), k)) {
                why += "orbit phases broke certification; ";
                ok = false;
                break;
            }
        }
    }

    for (const auto &e : std::filesystem::directory_iterator(KUNIFORM_FIXTURE_DIR)) {
        if (e.path().extension() != ".ket") {
            continue;
        }
        PureState s = parse_ket(read_file(e.path().string()));
        bool positive = true;
        for (const auto &t : s.terms()) {
            positive &= std::abs(t.phase - Phase(1, 0)) < 1e-15;
        }
        if (!positive) {
            continue;
        }
        for (size_t k = 1; k <= s.qudits() / 2; k++) {
            if (is_k_uniform_by_graphs(s, k) != is_k_uniform(s, k)) {
                why += "graph rules disagree on " + e.path().stem().string() + "; ";
                ok = false;
            }
        }
    }
    return ok;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char *, Check>> criteria = {
        {"printed-state regression", criterion1},
        {"almost-uniform check", criterion2},
        {"negative controls", criterion3},
        {"bound reproduction", criterion4},
        {"brute-force nonexistence", criterion5},
        {"construction validity", criterion6},
        {"hadamard window", criterion7},
        {"sign-fixing pipeline", criterion8},
        {"oracle equivalence", criterion9},
        {"OA(64,7,2,6) state", criterion10},
        {"property suite", criterion11},
    };
    int failures = 0;
    for (size_t i = 0; i < criteria.size(); i++) {
        std::string why;
        bool ok = false;
        auto t0 = Clock::now();
        try {
            ok = criteria[i].second(why);
        } catch (const std::exception &e) {
            why += std::string("exception: ") + e.what();
        }
        std::printf("%s %zu %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first, seconds_since(t0),
                    why.empty() ? "" : ": ", why.c_str());
        failures += !ok;
    }
    return failures == 0 ? 0 : 1;
}
