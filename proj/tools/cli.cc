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

#include "cli.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "kuniform/bounds.h"
#include "kuniform/catalog.h"
#include "kuniform/constructions.h"
#include "kuniform/error.h"
#include "kuniform/graph.h"
#include "kuniform/hadamard.h"
#include "kuniform/ket.h"
#include "kuniform/phases.h"
#include "kuniform/report_json.h"
#include "kuniform/uniformity.h"

namespace kuniform {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitVerify = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitUnsupported = 4;

std::string read_input(const std::string &path, std::istream &in) {
    std::stringstream ss;
    if (path == "-") {
        ss << in.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) {
        throw Error(ErrorCode::kInvalidArgument, "cannot open '" + path + "'");
    }
    ss << f.rdbuf();
    return ss.str();
}

std::vector<size_t> parse_index_list(const std::string &text, const char *what) {
    std::vector<size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != item.size()) {
            throw Error(ErrorCode::kInvalidArgument, std::string("bad ") + what + " entry '" + item + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw Error(ErrorCode::kInvalidArgument, std::string("empty ") + what);
    }
    return out;
}

std::string hadamard_text(const HadamardMatrix &h) {
    std::string out = "hadamard " + std::to_string(h.order()) + "\n";
    for (size_t i = 0; i < h.order(); i++) {
        for (size_t j = 0; j < h.order(); j++) {
            out.push_back(h.at(i, j) == 1 ? '+' : '-');
        }
        out.push_back('\n');
    }
    return out;
}

struct Options {
    std::string file;
    std::optional<size_t> strength;
    std::string remove_cols;
    std::optional<unsigned> derive_symbol;
    std::vector<std::string> permute_levels;
    size_t order = 0;
    bool as_oa = false;
    uint32_t d = 0;
    uint32_t k = 0;
    uint32_t n = 0;
    std::string signs;
    double tol = 1e-9;
    bool json = false;
    std::optional<uint32_t> levels;
    uint64_t seed = 0;
    std::string keep;
    bool dot = false;
    bool graph_json = false;
};

}  // namespace

int run_cli(int argc, const char *const *argv, std::istream &in, std::ostream &out, std::ostream &err) {
    CLI::App app{"Orthogonal arrays and k-uniform states"};
    app.require_subcommand(1);
    Options o;
    std::function<int()> action;

    auto *oa = app.add_subcommand("oa", "Inspect and transform orthogonal arrays");
    oa->require_subcommand(1);
    auto *oa_verify = oa->add_subcommand("verify", "Report strength, index, tightness and irredundancy");
    oa_verify->add_option("file", o.file, "Catalog file ('-' for stdin)")->required();
    oa_verify->add_option("--strength", o.strength, "Also check this strength");
    oa_verify->callback([&] {
        action = [&] {
            OrthogonalArray a = parse_oa_file(read_input(o.file, in));
            OaSummary s = summarize_oa(a);
            std::optional<bool> holds;
            if (o.strength.has_value()) {
                holds = verify_strength(a, *o.strength);
            }
            out << oa_summary_json(s, o.strength, holds) << "\n";
            return holds.value_or(true) ? kExitOk : kExitVerify;
        };
    });

    auto *oa_transform = oa->add_subcommand("transform", "Remove columns, derive, or permute levels");
    oa_transform->add_option("file", o.file, "Catalog file ('-' for stdin)")->required();
    auto *remove_opt = oa_transform->add_option("--remove-cols", o.remove_cols, "0-based columns, comma separated");
    auto *derive_opt = oa_transform->add_option("--derive", o.derive_symbol, "Keep rows starting with this symbol");
    auto *perm_opt = oa_transform->add_option(
        "--permute-levels", o.permute_levels, "COL:p0,p1,... maps symbol s in column COL to p_s (repeatable)");
    remove_opt->excludes(derive_opt)->excludes(perm_opt);
    derive_opt->excludes(perm_opt);
    oa_transform->callback([&] {
        action = [&] {
            OrthogonalArray a = parse_oa_file(read_input(o.file, in));
            if (!o.remove_cols.empty()) {
                auto cols = parse_index_list(o.remove_cols, "column list");
                out << write_oa_file(remove_columns(a, cols));
            } else if (o.derive_symbol.has_value()) {
                out << write_oa_file(derive(a, (Symbol)*o.derive_symbol));
            } else if (!o.permute_levels.empty()) {
                std::vector<std::vector<Symbol>> maps(a.factors());
                for (size_t c = 0; c < a.factors(); c++) {
                    for (uint32_t s = 0; s < a.levels(); s++) {
                        maps[c].push_back((Symbol)s);
                    }
                }
                for (const auto &spec : o.permute_levels) {
                    auto colon = spec.find(':');
                    if (colon == std::string::npos) {
                        throw Error(ErrorCode::kInvalidArgument, "expected COL:p0,p1,... got '" + spec + "'");
                    }
                    size_t col = parse_index_list(spec.substr(0, colon), "column")[0];
                    if (col >= a.factors()) {
                        throw Error(ErrorCode::kInvalidArgument, "column out of range in '" + spec + "'");
                    }
                    auto perm = parse_index_list(spec.substr(colon + 1), "level permutation");
                    maps[col].assign(perm.begin(), perm.end());
                    if (perm.size() != a.levels()) {
                        throw Error(ErrorCode::kNotAPermutation, "level map needs d entries in '" + spec + "'");
                    }
                }
                out << write_oa_file(permute_levels(a, maps));
            } else {
                throw Error(ErrorCode::kInvalidArgument, "choose --remove-cols, --derive or --permute-levels");
            }
            return kExitOk;
        };
    });

    auto *construct = app.add_subcommand("construct", "Generate Hadamard matrices and orthogonal arrays");
    construct->require_subcommand(1);
    auto *c_had = construct->add_subcommand("hadamard", "Normalized Hadamard matrix");
    c_had->add_option("--order", o.order, "Matrix order")->required();
    c_had->add_flag("--oa", o.as_oa, "Emit the derived OA(K, K-1, 2, 2) instead");
    c_had->callback([&] {
        action = [&] {
            HadamardMatrix h = normalize(hadamard_of_order(o.order));
            out << (o.as_oa ? write_oa_file(hadamard_to_oa(h)) : hadamard_text(h));
            return kExitOk;
        };
    });
    auto *c_bush = construct->add_subcommand("bush", "Index-unity OA(d^k, d+1, d, k)");
    c_bush->add_option("--d", o.d, "Prime power")->required();
    c_bush->add_option("--k", o.k, "Strength")->required();
    c_bush->callback([&] {
        action = [&] {
            out << write_oa_file(bush_oa(o.d, o.k));
            return kExitOk;
        };
    });
    auto *c_rao = construct->add_subcommand("rao", "OA(d^n, (d^n-1)/(d-1), d, 2)");
    c_rao->add_option("--d", o.d, "Prime power")->required();
    c_rao->add_option("--n", o.n, "Dimension")->required();
    c_rao->callback([&] {
        action = [&] {
            out << write_oa_file(rao_oa(o.d, o.n));
            return kExitOk;
        };
    });
    auto *c_ext = construct->add_subcommand("bush-ext", "OA(d^3, d+2, d, 3) for d a power of two");
    c_ext->add_option("--d", o.d, "Power of two")->required();
    c_ext->callback([&] {
        action = [&] {
            out << write_oa_file(bush_extended_oa(o.d));
            return kExitOk;
        };
    });

    auto *state = app.add_subcommand("state", "Build and check states");
    state->require_subcommand(1);
    auto *s_from = state->add_subcommand("from-oa", "One term per OA row");
    s_from->add_option("file", o.file, "Catalog file ('-' for stdin)")->required();
    s_from->add_option("--signs", o.signs, "One bit per row, 1 means a minus sign");
    s_from->callback([&] {
        action = [&] {
            OrthogonalArray a = parse_oa_file(read_input(o.file, in));
            if (o.signs.empty()) {
                out << write_ket(state_from_oa(a));
                return kExitOk;
            }
            std::vector<uint8_t> bits;
            for (char c : o.signs) {
                if (c != '0' && c != '1') {
                    throw Error(ErrorCode::kInvalidArgument, "--signs takes a string of 0 and 1");
                }
                bits.push_back((uint8_t)(c - '0'));
            }
            auto phases = signs_to_phases(bits);
            out << write_ket(state_from_oa(a, std::span<const Phase>(phases)));
            return kExitOk;
        };
    });

    auto *s_check = state->add_subcommand("check", "Certify k-uniformity; exit 0 iff certified");
    s_check->add_option("file", o.file, "Ket file ('-' for stdin)")->required();
    s_check->add_option("--k", o.k, "Reduction size")->required();
    s_check->add_option("--tol", o.tol, "Entrywise tolerance")->capture_default_str();
    s_check->add_flag("--json", o.json, "Print the JSON report");
    s_check->add_option("--d", o.levels, "Level count (default: inferred)");
    s_check->callback([&] {
        action = [&] {
            PureState psi = parse_ket(read_input(o.file, in), o.levels);
            UniformityReport r = uniformity(psi, o.k, o.tol);
            if (o.json) {
                out << uniformity_report_json(r) << "\n";
            } else {
                out << (r.certified ? "certified" : "not certified") << " k=" << r.k << " N=" << r.qudits
                    << " failures=" << r.failure_count() << "/" << r.subsets.size()
                    << " max_deviation=" << r.max_deviation() << "\n";
                for (const auto &s : r.subsets) {
                    if (s.maximally_mixed) {
                        continue;
                    }
                    out << "  fails on qudits {";
                    for (size_t i = 0; i < s.keep.size(); i++) {
                        out << (i ? "," : "") << s.keep[i] + 1;
                    }
                    out << "} (1-based) deviation=" << s.deviation << "\n";
                }
            }
            return r.certified ? kExitOk : kExitVerify;
        };
    });

    auto *s_two = state->add_subcommand("two-uniform", "Hadamard-based 2-uniform qubit state");
    s_two->add_option("--n", o.n, "Number of qubits (>= 6)")->required();
    s_two->callback([&] {
        action = [&] {
            out << write_ket(hadamard_two_uniform_state(o.n));
            return kExitOk;
        };
    });

    auto *s_fix = state->add_subcommand("fix-signs", "Solve for row signs making the OA state k-uniform");
    s_fix->add_option("file", o.file, "Catalog file ('-' for stdin)")->required();
    s_fix->add_option("--k", o.k, "Reduction size")->required();
    s_fix->callback([&] {
        action = [&] {
            OrthogonalArray a = parse_oa_file(read_input(o.file, in));
            FixResult r = fix_state(a, o.k);
            switch (r.status) {
                case FixStatus::kSolved:
                    out << write_ket(*r.state);
                    return kExitOk;
                case FixStatus::kInfeasible:
                    out << "infeasible\n";
                    err << r.detail << "\n";
                    return kExitInfeasible;
                case FixStatus::kUnsupported:
                    out << "unsupported\n";
                    err << r.detail << "\n";
                    return kExitUnsupported;
            }
            return kExitUnsupported;
        };
    });

    auto *s_orbit = state->add_subcommand("orbit", "Multiply every term but the first by a random phase");
    s_orbit->add_option("file", o.file, "Ket file ('-' for stdin)")->required();
    s_orbit->add_option("--seed", o.seed, "RNG seed")->required();
    s_orbit->add_option("--d", o.levels, "Level count (default: inferred)");
    s_orbit->callback([&] {
        action = [&] {
            PureState psi = parse_ket(read_input(o.file, in), o.levels);
            std::mt19937_64 rng(o.seed);
            std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
            std::vector<double> angles(psi.size() - 1);
            for (double &a : angles) {
                a = angle(rng);
            }
            out << write_ket(orbit_state(psi, angles));
            return kExitOk;
        };
    });

    auto *graph = app.add_subcommand("graph", "Bipartite graph of a state");
    graph->require_subcommand(1);
    auto *g_export = graph->add_subcommand("export", "Write the graph for one bipartition");
    g_export->add_option("file", o.file, "Ket file ('-' for stdin)")->required();
    g_export->add_option("--keep", o.keep, "0-based kept qudits, comma separated")->required();
    auto *dot_flag = g_export->add_flag("--dot", o.dot, "Graphviz output");
    auto *json_flag = g_export->add_flag("--json", o.graph_json, "JSON output");
    dot_flag->excludes(json_flag);
    g_export->add_option("--d", o.levels, "Level count (default: inferred)");
    g_export->callback([&] {
        action = [&] {
            if (!o.dot && !o.graph_json) {
                throw Error(ErrorCode::kInvalidArgument, "choose --dot or --json");
            }
            PureState psi = parse_ket(read_input(o.file, in), o.levels);
            ColumnSet keep = parse_index_list(o.keep, "kept qudit list");
            std::sort(keep.begin(), keep.end());
            BipartiteGraph g = graph_from_state(psi, keep);
            out << (o.dot ? to_dot(g) : to_json(g) + "\n");
            return kExitOk;
        };
    });

    auto *bounds = app.add_subcommand("bounds", "Bound calculators");
    bounds->require_subcommand(1);
    auto *b_rao = bounds->add_subcommand("rao", "Minimum runs of an OA(r, N, d, k)");
    b_rao->add_option("--n", o.n, "Factors")->required();
    b_rao->add_option("--d", o.d, "Levels")->required();
    b_rao->add_option("--k", o.k, "Strength")->required();
    b_rao->callback([&] {
        action = [&] {
            out << rao_min_runs(o.n, o.d, o.k) << "\n";
            return kExitOk;
        };
    });
    auto *b_gv = bounds->add_subcommand("gv", "Gilbert-Varshamov existence test for k-uniform qubit states");
    b_gv->add_option("--n", o.n, "Qubits")->required();
    b_gv->add_option("--k", o.k, "Uniformity")->required();
    b_gv->callback([&] {
        action = [&] {
            out << (gv_holds(o.n, o.k) ? "true" : "false") << "\n";
            return kExitOk;
        };
    });
    auto *b_single = bounds->add_subcommand("singleton", "Largest possible k for N qudits");
    b_single->add_option("--n", o.n, "Qudits")->required();
    b_single->callback([&] {
        action = [&] {
            out << singleton_max_k(o.n) << "\n";
            return kExitOk;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        return action ? action() : kExitParse;
    } catch (const ParseError &e) {
        err << "error: line " << e.line() << ", column " << e.column() << ": " << e.what() << "\n";
        return kExitParse;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        switch (e.code()) {
            case ErrorCode::kParameterMismatch:
            case ErrorCode::kNotAnOAAtStrength:
                return kExitVerify;
            case ErrorCode::kUnsupported:
            case ErrorCode::kUnsupportedMultiplicity:
            case ErrorCode::kReductionTooLarge:
                return kExitUnsupported;
            case ErrorCode::kOddContributions:
                return kExitInfeasible;
            default:
                return kExitParse;
        }
    }
}

}  // namespace kuniform
