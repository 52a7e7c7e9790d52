// Copyright 2026 The redchar Authors.
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

#include "redchar/error.h"

#include <chrono>
#include <cstdlib>

namespace redchar {
namespace {

using Clock = std::chrono::steady_clock;

struct BudgetState {
  double secs = 0;
  Clock::time_point start = Clock::now();
  BudgetState() {
    if (const char* env = std::getenv("REDCHAR_BUDGET_SECS")) {
      secs = std::atof(env);
    }
  }
};

BudgetState& state() {
  static BudgetState s;
  return s;
}

}  // namespace

double budget_seconds() { return state().secs; }

void set_budget_seconds(double secs) {
  state().secs = secs;
  state().start = Clock::now();
}

void check_budget(const std::string& what) {
  const BudgetState& s = state();
  if (s.secs <= 0) return;
  double spent =
      std::chrono::duration<double>(Clock::now() - s.start).count();
  if (spent > s.secs) {
    throw BudgetError("time budget of " + std::to_string(s.secs) +
                      "s exceeded during " + what);
  }
}

}  // namespace redchar
