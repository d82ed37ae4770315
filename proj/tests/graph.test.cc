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

#include <gtest/gtest.h>

#include <filesystem>

#include "kuniform/error.h"
#include "kuniform/ket.h"
#include "kuniform/uniformity.h"
#include "test_util.h"

using namespace kuniform;
using namespace kuniform::testing;

namespace {

std::vector<std::string> all_fixture_names() {
    std::vector<std::string> out;
    for (const auto &e : std::filesystem::directory_iterator(KUNIFORM_FIXTURE_DIR)) {
        if (e.path().extension() == ".ket") {
            out.push_back(e.path().stem().string());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(graph, bell) {
    auto s = parse_ket("+|00> +|11>");
    auto g = graph_from_state(s, {0});
    EXPECT_EQ(g.size_a(), 2u);
    EXPECT_EQ(g.size_b(), 2u);
    EXPECT_EQ(g.edges.size(), 2u);
    auto rc = check_rules(g);
    EXPECT_TRUE(rc.diagonality);
    EXPECT_TRUE(rc.uniformity);
    EXPECT_TRUE(is_k_uniform_by_graphs(s, 1));
}

TEST(graph, separable_fails_uniformity) {
    auto s = load_ket("three_qubit_separable");
    auto g = graph_from_state(s, {0});
    auto rc = check_rules(g);
    EXPECT_TRUE(rc.diagonality);
    EXPECT_FALSE(rc.uniformity);
    auto adv = advise(g);
    EXPECT_TRUE(adv.product_across_partition);
    auto sa = advise(s);
    EXPECT_FALSE(sa.product_qudits.empty());
    EXPECT_EQ(sa.graph_uniformity, 0u);
}

TEST(graph, w_state_fails_uniformity) {
    auto s = parse_ket("+|001> +|010> +|100>");
    auto rc = check_rules(graph_from_state(s, {0}));
    EXPECT_TRUE(rc.diagonality);
    EXPECT_FALSE(rc.uniformity);
    EXPECT_FALSE(is_k_uniform_by_graphs(s, 1));
    EXPECT_FALSE(is_k_uniform(s, 1));
}

TEST(graph, ghz_is_one_uniform) {
    auto s = parse_ket("+|000> +|111>");
    EXPECT_TRUE(is_k_uniform_by_graphs(s, 1));
    auto sa = advise(s);
    EXPECT_TRUE(sa.product_qudits.empty());
    EXPECT_FALSE(sa.fully_separable_hint);
    EXPECT_EQ(sa.graph_uniformity, 1u);
}

TEST(graph, rules_match_spectrum_on_equal_phase_fixtures) {
    size_t checked = 0;
    for (const auto &name : all_fixture_names()) {
        auto s = load_ket(name);
        if (!s.all_phases_equal()) {
            continue;
        }
        for (size_t k = 1; k <= s.qudits() / 2; k++) {
            EXPECT_EQ(is_k_uniform_by_graphs(s, k), is_k_uniform(s, k)) << name << " k=" << k;
            checked++;
        }
    }
    EXPECT_GT(checked, 20u);
}

TEST(graph, signed_states) {
    auto s = load_ket("seven_qubit_almost_3u");
    ASSERT_FALSE(s.all_phases_equal());
    EXPECT_THROW(is_k_uniform_by_graphs(s, 2), Error);
    auto g = graph_from_state(s, {0, 1, 2});
    EXPECT_EQ(g.edges.size(), s.size());
}

TEST(graph, json_round_trip) {
    for (const auto &name : {"five_qubit_signed_2u", "qutrit_2u_n4", "h8_2u_n7"}) {
        auto s = load_ket(name);
        auto g = graph_from_state(s, {0, 2});
        auto back = graph_from_json(to_json(g));
        EXPECT_EQ(back.qudits, g.qudits);
        EXPECT_EQ(back.levels, g.levels);
        EXPECT_EQ(back.keep, g.keep);
        EXPECT_EQ(back.drop, g.drop);
        ASSERT_EQ(back.edges.size(), g.edges.size());
        for (size_t i = 0; i < g.edges.size(); i++) {
            EXPECT_EQ(back.edges[i].a, g.edges[i].a);
            EXPECT_EQ(back.edges[i].b, g.edges[i].b);
            EXPECT_NEAR(std::abs(back.edges[i].phase - g.edges[i].phase), 0.0, 1e-15);
        }
    }
}

TEST(graph, json_errors) {
    EXPECT_THROW(graph_from_json("{"), ParseError);
    EXPECT_THROW(graph_from_json("{\"n\": 2}"), ParseError);
    EXPECT_THROW(graph_from_json(R"({"n":2,"d":2,"k":1,"partition":{"keep":[0],"drop":[0]},"edges":[]})"),
                 ParseError);
}

TEST(graph, adjacency_round_trip) {
    for (const auto &name : {"h8_2u_n7", "qutrit_2u_n4", "four_qubit_1u"}) {
        auto s = load_ket(name);
        ColumnSet keep{1, 2};
        auto m = adjacency(graph_from_state(s, keep));
        size_t ones = 0;
        for (uint8_t c : m.cells) {
            ones += c;
        }
        EXPECT_EQ(ones, s.size());
        auto back = state_from_adjacency(m, s.qudits(), s.levels(), keep);
        EXPECT_EQ(write_ket(back), write_ket(s)) << name;
    }
}

TEST(graph, dot_output) {
    auto s = parse_ket("+|00> -|11>");
    auto dot = to_dot(graph_from_state(s, {0}));
    EXPECT_NE(dot.find("cluster_a"), std::string::npos);
    EXPECT_NE(dot.find("cluster_b"), std::string::npos);
    EXPECT_NE(dot.find("--"), std::string::npos);
    EXPECT_NE(dot.find("label"), std::string::npos);
}
