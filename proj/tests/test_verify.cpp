// Copyright 2026 The qdel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "verify.hpp"

#include <cmath>
#include <string>

#include "gtest/gtest.h"

using namespace qdel;

namespace {

const VerificationOutcome* find(const std::vector<VerificationOutcome>& out,
                                const std::string& name) {
  for (const auto& o : out)
    if (o.check == name) return &o;
  return nullptr;
}

}  // namespace

TEST(Verify, DefaultRunPasses) {
  const auto out = run_verification(VerifyOptions{});
  ASSERT_FALSE(out.empty());
  for (const auto& o : out) {
    EXPECT_TRUE(o.passed) << o.check << " deviation " << o.deviation;
    EXPECT_FALSE(o.anchor.empty()) << o.check;
  }
  EXPECT_TRUE(all_passed(out));
  for (const char* name :
       {"transformer_unitary", "table1_row_0.5", "table2_row_1.0",
        "table2_branch_reversal", "headline_f1_balanced_blank",
        "headline_f2_special_blank", "average_pb_alone",
        "two_transformer_limit_spectrum"}) {
    EXPECT_NE(find(out, name), nullptr) << name;
  }
}

TEST(Verify, TightTableToleranceFailsOnlyTables) {
  VerifyOptions opt;
  opt.table_tolerance = 1e-20;
  const auto out = run_verification(opt);
  EXPECT_FALSE(all_passed(out));
  int failed_rows = 0;
  for (const auto& o : out) {
    if (o.check.rfind("table", 0) == 0 && o.check != "table2_branch_reversal") {
      EXPECT_LE(o.deviation, 0.01) << o.check;
      if (!o.passed) ++failed_rows;
    }
    if (o.check.rfind("oracle_", 0) == 0) EXPECT_TRUE(o.passed) << o.check;
  }
  EXPECT_GT(failed_rows, 10);
}

TEST(Verify, PerturbedTransformerIsDetected) {
  VerifyOptions opt;
  opt.transformer_perturbation = 1e-3;
  const auto out = run_verification(opt);
  EXPECT_FALSE(all_passed(out));
  const auto* u = find(out, "transformer_unitary");
  ASSERT_NE(u, nullptr);
  EXPECT_FALSE(u->passed);
  const auto* h = find(out, "headline_f2_special_blank");
  ASSERT_NE(h, nullptr);
  EXPECT_FALSE(h->passed);
}

TEST(Verify, Deterministic) {
  const auto a = run_verification(VerifyOptions{});
  const auto b = run_verification(VerifyOptions{});
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].check, b[i].check);
    EXPECT_EQ(a[i].deviation, b[i].deviation);
  }
}
