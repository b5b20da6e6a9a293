// Copyright 2026 The spinor_secant Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gtest/gtest.h>

#include "spinor_secant/errors.hpp"

// Asserts that `stmt` throws spinor_secant::Error carrying `expected_code`.
#define EXPECT_ERROR_CODE(stmt, expected_code)                        \
  do {                                                                \
    bool thrown_ = false;                                             \
    try {                                                             \
      stmt;                                                           \
    } catch (const ::spinor_secant::Error& e_) {                      \
      thrown_ = true;                                                 \
      EXPECT_EQ(e_.code(), expected_code) << e_.what();               \
    }                                                                 \
    EXPECT_TRUE(thrown_) << #stmt " did not throw";                   \
  } while (false)
