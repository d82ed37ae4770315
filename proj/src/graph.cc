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

#include "kuniform/graph.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "kuniform/error.h"

namespace kuniform {

namespace {

constexpr uint64_t kMaxListedVertices = 1u << 20;
constexpr uint64_t kMaxAdjacencyCells = 1u << 24;

uint64_t power(uint64_t d, size_t e) {
    uint64_t v = 1;
    for (size_t i = 0; i < e; i++) {
        if (v > (UINT64_MAX / d)) {
            throw Error(ErrorCode::kReductionTooLarge, "vertex count overflows 64 bits");
        }
        v *= d;
    }
    return v;
}

char digit_char(uint64_t v) {
    return (char)(v < 10 ? '0' + v : 'a' + (v - 10));
}

std::string label(uint64_t v, uint32_t d, size_t len) {
    std::string s(len, '0');
    for (size_t i = len; i-- > 0;) {
        s[i] = digit_char(v % d);
        v /= d;
    }
    return s;
}

uint64_t parse_label(const std::string &s, uint32_t d) {
    uint64_t v = 0;
    for (char c : s) {
        uint64_t x;
        if (c >= '0' && c <= '9') {
            x = (uint64_t)(c - '0');
        } else if (c >= 'a' && c <= 'z') {
            x = (uint64_t)(c - 'a' + 10);
        } else {
            throw ParseError(1, 1, "bad vertex label '" + s + "'");
        }
        if (x >= d) {
            throw ParseError(1, 1, "vertex label '" + s + "' uses a symbol >= d");
        }
        v = v * d + x;
    }
    return v;
}

void check_partition(size_t n, const ColumnSet &keep) {
    if (keep.empty() || keep.size() >= n) {
        throw Error(ErrorCode::kBadSubset, "kept set must be a nonempty proper subset");
    }
    for (size_t i = 0; i < keep.size(); i++) {
        if (keep[i] >= n || (i > 0 && keep[i] <= keep[i - 1])) {
            throw Error(ErrorCode::kBadSubset, "kept columns must be increasing and in range");
        }
    }
}

void require_equal_phases(const PureState &state) {
    if (!state.all_phases_equal()) {
        throw Error(ErrorCode::kPhasesPresent, "graph rules only apply to states with equal phases");
    }
}

std::vector<std::pair<uint64_t, uint64_t>> sorted_edges(const BipartiteGraph &g) {
    std::vector<std::pair<uint64_t, uint64_t>> out;
    out.reserve(g.edges.size());
    for (const auto &e : g.edges) {
        out.emplace_back(e.a, e.b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

uint64_t BipartiteGraph::size_a() const {
    return power(levels, keep.size());
}
uint64_t BipartiteGraph::size_b() const {
    return power(levels, drop.size());
}
std::string BipartiteGraph::label_a(uint64_t v) const {
    return label(v, levels, keep.size());
}
std::string BipartiteGraph::label_b(uint64_t v) const {
    return label(v, levels, drop.size());
}

BipartiteGraph graph_from_state(const PureState &state, const ColumnSet &keep) {
    check_partition(state.qudits(), keep);
    BipartiteGraph g{state.qudits(), state.levels(), keep, complement(state.qudits(), keep), {}};
    power(g.levels, g.drop.size());
    g.edges.reserve(state.size());
    for (const auto &t : state.terms()) {
        uint64_t a = 0;
        uint64_t b = 0;
        for (size_t c : g.keep) {
            a = a * g.levels + t.word[c];
        }
        for (size_t c : g.drop) {
            b = b * g.levels + t.word[c];
        }
        g.edges.push_back(Edge{a, b, t.phase});
    }
    return g;
}

RuleCheck check_rules(const BipartiteGraph &g) {
    std::map<uint64_t, size_t> deg_a;
    std::map<uint64_t, size_t> deg_b;
    for (const auto &e : g.edges) {
        deg_a[e.a]++;
        deg_b[e.b]++;
    }
    RuleCheck r{true, true};
    for (const auto &[v, deg] : deg_b) {
        if (deg > 1) {
            r.diagonality = false;
        }
    }
    // Vertices missing from deg_a have degree 0.
    if (deg_a.size() != g.size_a()) {
        r.uniformity = g.edges.empty();
    } else {
        size_t first = deg_a.begin()->second;
        for (const auto &[v, deg] : deg_a) {
            if (deg != first) {
                r.uniformity = false;
            }
        }
    }
    return r;
}

bool is_k_uniform_by_graphs(const PureState &state, size_t k) {
    require_equal_phases(state);
    bool ok = true;
    for_each_subset(state.qudits(), k, [&](const ColumnSet &keep) {
        RuleCheck r = check_rules(graph_from_state(state, keep));
        ok = r.diagonality && r.uniformity;
        return ok;
    });
    return ok;
}

bool graphs_identical(const PureState &state, size_t k) {
    require_equal_phases(state);
    std::optional<std::vector<std::pair<uint64_t, uint64_t>>> first;
    bool same = true;
    for_each_subset(state.qudits(), k, [&](const ColumnSet &keep) {
        auto edges = sorted_edges(graph_from_state(state, keep));
        if (!first.has_value()) {
            first = std::move(edges);
        } else if (edges != *first) {
            same = false;
        }
        return same;
    });
    return same;
}

AdjacencyMatrix adjacency(const BipartiteGraph &g) {
    uint64_t rows = g.size_a();
    uint64_t cols = g.size_b();
    if (rows * cols > kMaxAdjacencyCells) {
        throw Error(ErrorCode::kReductionTooLarge, "adjacency matrix exceeds 2^24 cells");
    }
    AdjacencyMatrix m{rows, cols, std::vector<uint8_t>(rows * cols, 0)};
    for (const auto &e : g.edges) {
        m.cells[e.a * cols + e.b] = 1;
    }
    return m;
}

PureState state_from_adjacency(const AdjacencyMatrix &m, size_t qudits, uint32_t levels, const ColumnSet &keep) {
    check_partition(qudits, keep);
    ColumnSet drop = complement(qudits, keep);
    if (m.rows != power(levels, keep.size()) || m.cols != power(levels, drop.size()) ||
        m.cells.size() != m.rows * m.cols) {
        throw Error(ErrorCode::kShapeMismatch, "adjacency matrix does not match the partition");
    }
    std::vector<Term> terms;
    for (uint64_t i = 0; i < m.rows; i++) {
        for (uint64_t j = 0; j < m.cols; j++) {
            uint8_t v = m.cells[i * m.cols + j];
            if (v > 1) {
                throw Error(ErrorCode::kInvalidArgument, "adjacency entries must be 0 or 1");
            }
            if (!v) {
                continue;
            }
            Word w(qudits);
            uint64_t a = i;
            for (size_t x = keep.size(); x-- > 0;) {
                w[keep[x]] = (Symbol)(a % levels);
                a /= levels;
            }
            uint64_t b = j;
            for (size_t x = drop.size(); x-- > 0;) {
                w[drop[x]] = (Symbol)(b % levels);
                b /= levels;
            }
            terms.push_back(Term{std::move(w), Phase(1.0, 0.0)});
        }
    }
    return PureState(qudits, levels, std::move(terms));
}

GraphAdvisory advise(const BipartiteGraph &g) {
    RuleCheck r = check_rules(g);
    std::set<uint64_t> as;
    std::set<uint64_t> bs;
    std::set<std::pair<uint64_t, uint64_t>> pairs;
    for (const auto &e : g.edges) {
        as.insert(e.a);
        bs.insert(e.b);
        pairs.emplace(e.a, e.b);
    }
    bool product = !g.edges.empty() && pairs.size() == g.edges.size() && pairs.size() == as.size() * bs.size();
    return {r.diagonality, r.uniformity, product};
}

StateAdvisory advise(const PureState &state) {
    require_equal_phases(state);
    StateAdvisory out{{}, false, 0};
    if (state.qudits() < 2) {
        return out;
    }
    for (size_t q = 0; q < state.qudits(); q++) {
        if (advise(graph_from_state(state, {q})).product_across_partition) {
            out.product_qudits.push_back(q);
        }
    }
    out.fully_separable_hint = out.product_qudits.size() == state.qudits();
    for (size_t k = 1; k <= state.qudits() / 2; k++) {
        if (!is_k_uniform_by_graphs(state, k)) {
            break;
        }
        out.graph_uniformity = k;
    }
    return out;
}

std::string to_dot(const BipartiteGraph &g) {
    if (g.size_a() + g.size_b() > kMaxListedVertices) {
        throw Error(ErrorCode::kReductionTooLarge, "too many vertices to list");
    }
    std::stringstream out;
    out << "graph kuniform {\n";
    out << "  rankdir=LR;\n";
    out << "  subgraph cluster_a {\n    label=\"A\";\n    rank=same;\n";
    for (uint64_t v = 0; v < g.size_a(); v++) {
        out << "    a" << g.label_a(v) << " [label=\"" << g.label_a(v) << "\"];\n";
    }
    out << "  }\n";
    out << "  subgraph cluster_b {\n    label=\"B\";\n    rank=same;\n";
    for (uint64_t v = 0; v < g.size_b(); v++) {
        out << "    b" << g.label_b(v) << " [label=\"" << g.label_b(v) << "\"];\n";
    }
    out << "  }\n";
    for (const auto &e : g.edges) {
        out << "  a" << g.label_a(e.a) << " -- b" << g.label_b(e.b);
        if (e.phase != Phase(1.0, 0.0)) {
            out << " [label=\"" << e.phase.real() << (e.phase.imag() < 0 ? "" : "+") << e.phase.imag() << "i\"]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_json(const BipartiteGraph &g) {
    if (g.size_a() + g.size_b() > kMaxListedVertices) {
        throw Error(ErrorCode::kReductionTooLarge, "too many vertices to list");
    }
    nlohmann::json j;
    j["n"] = g.qudits;
    j["d"] = g.levels;
    j["k"] = g.keep.size();
    j["partition"] = {{"keep", g.keep}, {"drop", g.drop}};
    auto va = nlohmann::json::array();
    for (uint64_t v = 0; v < g.size_a(); v++) {
        va.push_back(g.label_a(v));
    }
    auto vb = nlohmann::json::array();
    for (uint64_t v = 0; v < g.size_b(); v++) {
        vb.push_back(g.label_b(v));
    }
    j["vertices_a"] = std::move(va);
    j["vertices_b"] = std::move(vb);
    auto edges = nlohmann::json::array();
    for (const auto &e : g.edges) {
        edges.push_back({g.label_a(e.a), g.label_b(e.b), {e.phase.real(), e.phase.imag()}});
    }
    j["edges"] = std::move(edges);
    return j.dump();
}

BipartiteGraph graph_from_json(const std::string &text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(1, e.byte, e.what());
    }
    try {
        BipartiteGraph g;
        g.qudits = j.at("n").get<size_t>();
        g.levels = j.at("d").get<uint32_t>();
        g.keep = j.at("partition").at("keep").get<ColumnSet>();
        g.drop = j.at("partition").at("drop").get<ColumnSet>();
        if (g.levels < 1 || g.levels > 36) {
            throw ParseError(1, 1, "d must lie in [1, 36]");
        }
        check_partition(g.qudits, g.keep);
        if (g.drop != complement(g.qudits, g.keep) || j.at("k").get<size_t>() != g.keep.size()) {
            throw ParseError(1, 1, "partition is inconsistent with n and k");
        }
        for (const auto &e : j.at("edges")) {
            auto a = e.at(0).get<std::string>();
            auto b = e.at(1).get<std::string>();
            if (a.size() != g.keep.size() || b.size() != g.drop.size()) {
                throw ParseError(1, 1, "edge label length does not match the partition");
            }
            Phase ph(e.at(2).at(0).get<double>(), e.at(2).at(1).get<double>());
            g.edges.push_back(Edge{parse_label(a, g.levels), parse_label(b, g.levels), ph});
        }
        return g;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(1, 1, std::string("graph JSON: ") + e.what());
    } catch (const Error &e) {
        if (dynamic_cast<const ParseError *>(&e)) {
            throw;
        }
        throw ParseError(1, 1, e.what());
    }
}

}  // namespace kuniform
