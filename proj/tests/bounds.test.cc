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

#include "kuniform/bounds.h"

#include <gtest/gtest.h>

#include "kuniform/error.h"

using namespace kuniform;

TEST(bounds, rao_examples) {
    EXPECT_EQ(rao_min_runs(4, 2, 2), 5u);
    EXPECT_EQ(rao_min_runs(4, 3, 2), 9u);
    EXPECT_EQ(rao_min_runs(5, 2, 2), 6u);
    EXPECT_EQ(rao_min_runs(3, 2, 0), 1u);
    EXPECT_THROW(rao_min_runs(0, 2, 0), Error);
    EXPECT_THROW(rao_min_runs(3, 1, 1), Error);
    EXPECT_THROW(rao_min_runs(3, 2, 4), Error);
}

TEST(bounds, rao_closed_forms) {
    for (uint64_t n = 2; n <= 64; n++) {
        EXPECT_EQ(rao_min_runs(n, 2, 1), 2u);
        EXPECT_EQ(rao_min_runs(n, 2, 2), n + 1);
        if (n >= 3) {
            EXPECT_EQ(rao_min_runs(n, 2, 3), 2 * n);
        }
        if (n >= 4) {
            // N^2/2 + N/2 + 1, doubled to stay in integers.
            EXPECT_EQ(2 * rao_min_runs(n, 2, 4), n * n + n + 2);
        }
        if (n >= 5) {
            EXPECT_EQ(rao_min_runs(n, 2, 5), n * n - n + 2);
        }
    }
}

TEST(bounds, rao_report) {
    auto r = rao_report(4, 2, 2, 8);
    EXPECT_EQ(r.min_runs, 5u);
    ASSERT_TRUE(r.tight.has_value());
    EXPECT_FALSE(*r.tight);
    EXPECT_TRUE(*rao_report(3, 2, 2, 4).tight);
    EXPECT_FALSE(rao_report(3, 2, 2).tight.has_value());
}

TEST(bounds, singleton) {
    EXPECT_EQ(singleton_max_k(4), 2u);
    EXPECT_EQ(singleton_max_k(5), 2u);
    EXPECT_EQ(singleton_max_k(2), 1u);
    EXPECT_TRUE(qecc_singleton_holds(5, 1, 3));
    EXPECT_TRUE(qecc_singleton_holds(4, 1, 3));
    EXPECT_FALSE(qecc_singleton_holds(3, 1, 3));
    EXPECT_TRUE(qecc_singleton_holds(2, 1, 1));
    EXPECT_TRUE(qecc_singleton_holds(5, 2, 3));
    EXPECT_FALSE(qecc_singleton_holds(5, 4, 3));
    EXPECT_TRUE(qecc_singleton_holds(6, 3, 2, 3));
}

TEST(bounds, classical_singleton) {
    EXPECT_TRUE(cecc_singleton_holds(1, 1, 1, 2));
    EXPECT_FALSE(cecc_singleton_holds(10, 1, 1, 2));
    EXPECT_TRUE(cecc_is_mds(4, 2, 1, 2));
    EXPECT_FALSE(cecc_is_mds(3, 2, 1, 2));
    EXPECT_TRUE(cecc_singleton_holds(3, 2, 1, 2));
}

TEST(bounds, gilbert_varshamov) {
    size_t first = 0;
    for (uint64_t n = 1; n <= 40; n++) {
        if (gv_holds(n, 3)) {
            first = n;
            break;
        }
    }
    EXPECT_EQ(first, 14u);
    for (uint64_t n = 14; n <= 60; n++) {
        EXPECT_TRUE(gv_holds(n, 3)) << n;
    }
    EXPECT_TRUE(gv_holds(2, 0));
    EXPECT_FALSE(gv_holds(6, 3));
    EXPECT_TRUE(qecc_gv_holds(14, 1, 4));
    EXPECT_FALSE(qecc_gv_holds(14, 2, 4));
}
