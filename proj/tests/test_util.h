// Copyright 2026 The pmlkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef PML_TESTS_TEST_UTIL_H_
#define PML_TESTS_TEST_UTIL_H_

#include <string>
#include <utility>
#include <vector>

#include <gmock/gmock.h>
#include <gtest/gtest.h>
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "pml/distribution.h"

#define PML_CONCAT_INNER(a, b) a##b
#define PML_CONCAT(a, b) PML_CONCAT_INNER(a, b)

#define PML_ASSERT_OK_AND_ASSIGN_IMPL(tmp, lhs, expr) \
  auto tmp = (expr);                                  \
  ASSERT_TRUE(tmp.ok()) << tmp.status();              \
  lhs = *std::move(tmp)

#define ASSERT_OK_AND_ASSIGN(lhs, expr) \
  PML_ASSERT_OK_AND_ASSIGN_IMPL(PML_CONCAT(status_or_, __LINE__), lhs, expr)

#define ASSERT_OK(expr) ASSERT_TRUE((expr).ok()) << (expr)
#define EXPECT_OK(expr) EXPECT_TRUE((expr).ok()) << (expr)

namespace pml::testing {

MATCHER_P(StatusHasSubstr, text, "") {
  if (arg.ok()) {
    *result_listener << "status is OK";
    return false;
  }
  return ::testing::ExplainMatchResult(::testing::HasSubstr(text),
                                       std::string(arg.status().message()),
                                       result_listener);
}

inline Pmf Binary(double p0) {
  return *Pmf::Create({"0", "1"}, {p0, 1.0 - p0});
}

inline Channel Flip(double flip) {
  return *Channel::Create({"0", "1"}, {"0", "1"},
                          {{1.0 - flip, flip}, {flip, 1.0 - flip}});
}

inline Channel IdentityBinary() {
  return Channel::Identity(*Alphabet::Create({"0", "1"}));
}

inline Channel ConstantBinary() {
  return *Channel::Create({"0", "1"}, {"a", "b"}, {{0.4, 0.6}, {0.4, 0.6}});
}

}  // namespace pml::testing

#endif  // PML_TESTS_TEST_UTIL_H_
