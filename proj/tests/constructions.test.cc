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

#include "kuniform/constructions.h"

#include <gtest/gtest.h>

#include "kuniform/error.h"
#include "kuniform/hadamard.h"
#include "kuniform/uniformity.h"
#include "test_util.h"

using namespace kuniform;
using namespace kuniform::testing;

namespace {

ErrorCode code_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::kInvalidArgument;
}

OrthogonalArray oa_of_state(const PureState &s) {
    std::vector<std::vector<Symbol>> rows;
    for (const auto &t : s.terms()) {
        rows.push_back(t.word);
    }
    return OrthogonalArray::from_rows(rows, s.levels());
}

// Moves the last `count` columns to the front.
OrthogonalArray rotate_tail_to_front(const OrthogonalArray &a, size_t count) {
    std::vector<size_t> order;
    for (size_t c = a.factors() - count; c < a.factors(); c++) {
        order.push_back(c);
    }
    for (size_t c = 0; c + count < a.factors(); c++) {
        order.push_back(c);
    }
    return permute_columns(a, order);
}

}  // namespace

TEST(constructions, rao) {
    auto a = rao_oa(3, 2);
    EXPECT_EQ(a.runs(), 9u);
    EXPECT_EQ(a.factors(), 4u);
    EXPECT_EQ(oa_index(a, 2), 1u);
    EXPECT_TRUE(same_row_set(a, oa_of_state(load_ket("qutrit_2u_n4"))));

    auto b = rao_oa(2, 2);
    EXPECT_TRUE(same_row_set(b, oa_4_3_2_2()));
    auto c = rao_oa(2, 3);
    EXPECT_EQ(c.runs(), 8u);
    EXPECT_EQ(c.factors(), 7u);
    EXPECT_EQ(oa_index(c, 2), 2u);
    EXPECT_EQ(max_strength(c), 2u);

    EXPECT_EQ(code_of([] { rao_oa(6, 2); }), ErrorCode::kNotPrimePower);
    EXPECT_EQ(code_of([] { rao_oa(3, 1); }), ErrorCode::kParameterViolation);
    EXPECT_EQ(code_of([] { rao_oa(2, 15); }), ErrorCode::kParameterViolation);
}

TEST(constructions, bush) {
    auto a = bush_oa(4, 2);
    EXPECT_EQ(a.runs(), 16u);
    EXPECT_EQ(a.factors(), 5u);
    EXPECT_TRUE(same_row_set(rotate_tail_to_front(a, 1), oa_of_state(load_ket("ququart_2u_n5"))));
    auto b = bush_oa(5, 2);
    EXPECT_EQ(b.runs(), 25u);
    EXPECT_EQ(b.factors(), 6u);
    EXPECT_EQ(oa_index(b, 2), 1u);
    auto c = bush_oa(2, 1);
    EXPECT_EQ(c.runs(), 2u);
    EXPECT_EQ(c.factors(), 3u);
    EXPECT_TRUE(verify_strength(c, 1));
    auto d = bush_oa(3, 4);
    EXPECT_EQ(d.runs(), 81u);
    EXPECT_EQ(max_strength(d), 4u);

    EXPECT_EQ(code_of([] { bush_oa(2, 4); }), ErrorCode::kParameterViolation);
    EXPECT_EQ(code_of([] { bush_oa(3, 0); }), ErrorCode::kParameterViolation);
    EXPECT_EQ(code_of([] { bush_oa(10, 2); }), ErrorCode::kNotPrimePower);
}

TEST(constructions, bush_extended) {
    auto a = bush_extended_oa(2);
    EXPECT_TRUE(same_row_set(a, oa_8_4_2_3()));
    auto b = bush_extended_oa(4);
    EXPECT_EQ(b.runs(), 64u);
    EXPECT_EQ(b.factors(), 6u);
    EXPECT_EQ(max_strength(b), 3u);
    EXPECT_EQ(oa_index(b, 3), 1u);
    EXPECT_TRUE(is_irredundant(b, 3).irredundant);
    EXPECT_TRUE(same_row_set(rotate_tail_to_front(b, 2), oa_of_state(load_ket("ququart_3u_n6"))));
    auto c = bush_extended_oa(8);
    EXPECT_EQ(max_strength(c), 3u);
    EXPECT_EQ(code_of([] { bush_extended_oa(3); }), ErrorCode::kNotPowerOfTwo);
    EXPECT_EQ(code_of([] { bush_extended_oa(1); }), ErrorCode::kNotPowerOfTwo);
}

TEST(constructions, index_unity_table_rows) {
    for (uint32_t d : {3u, 4u, 5u, 7u, 8u, 9u}) {
        for (const auto &a : {rao_oa(d, 2), bush_oa(d, 2)}) {
            EXPECT_EQ(a.runs(), d * d);
            EXPECT_EQ(a.factors(), d + 1);
            EXPECT_TRUE(verify_strength(a, 2));
            EXPECT_EQ(oa_index(a, 2), 1u);
            EXPECT_TRUE(is_irredundant(a, 2).irredundant);
        }
    }
}

TEST(constructions, bush_irredundant_when_k_at_most_half) {
    for (uint32_t d : {2u, 3u, 4u, 5u, 7u}) {
        for (uint32_t k = 1; 2 * k <= d + 1; k++) {
            EXPECT_TRUE(is_irredundant(bush_oa(d, k), k).irredundant) << d << " " << k;
        }
    }
}

TEST(constructions, choose_hadamard_order) {
    EXPECT_EQ(choose_hadamard_order(6), 8u);
    EXPECT_EQ(choose_hadamard_order(7), 8u);
    EXPECT_EQ(choose_hadamard_order(8), 12u);
    EXPECT_EQ(choose_hadamard_order(9), 12u);
    for (size_t n = 10; n <= 15; n++) {
        EXPECT_EQ(choose_hadamard_order(n), 16u);
    }
    EXPECT_EQ(choose_hadamard_order(16), 24u);
    EXPECT_EQ(choose_hadamard_order(17), 24u);
    for (size_t n = 18; n <= 31; n++) {
        EXPECT_EQ(choose_hadamard_order(n), 32u);
    }
    EXPECT_EQ(choose_hadamard_order(32), 48u);
    EXPECT_EQ(choose_hadamard_order(33), 48u);
    EXPECT_EQ(code_of([] { choose_hadamard_order(5); }), ErrorCode::kUnsupported);
}

TEST(constructions, hadamard_two_uniform_states) {
    for (size_t n = 6; n <= 24; n++) {
        PureState s = hadamard_two_uniform_state(n);
        EXPECT_EQ(s.qudits(), n);
        EXPECT_EQ(s.size(), choose_hadamard_order(n));
        EXPECT_TRUE(is_k_uniform(s, 2)) << n;
    }
    EXPECT_EQ(hadamard_two_uniform_state(8).size(), 12u);
    EXPECT_EQ(code_of([] { hadamard_two_uniform_state(5); }), ErrorCode::kUnsupported);
}

TEST(constructions, hadamard_window) {
    for (size_t kappa : {8u, 12u, 16u}) {
        OrthogonalArray full = hadamard_to_oa(normalize(hadamard_of_order(kappa)));
        for (size_t n = kappa / 2 + 1; n <= kappa - 1; n++) {
            std::vector<size_t> drop;
            for (size_t c = n; c < full.factors(); c++) {
                drop.push_back(c);
            }
            OrthogonalArray a = remove_columns(full, drop);
            bool irredundant = is_irredundant(a, 2).irredundant;
            if (n >= kappa / 2 + 2) {
                EXPECT_TRUE(irredundant) << kappa << " " << n;
                EXPECT_TRUE(is_k_uniform(state_from_oa(a), 2)) << kappa << " " << n;
            } else {
                EXPECT_FALSE(irredundant) << kappa << " " << n;
                EXPECT_FALSE(is_k_uniform(state_from_oa(a), 2)) << kappa << " " << n;
            }
        }
    }
}
