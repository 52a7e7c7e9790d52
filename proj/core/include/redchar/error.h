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

#ifndef REDCHAR_ERROR_H_
#define REDCHAR_ERROR_H_

#include <stdexcept>
#include <string>

namespace redchar {

// Caller-side contract violation (bad q, wrong domain, bad flag).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation would exceed the size or time budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Seconds allowed for oracle work, from REDCHAR_BUDGET_SECS; <= 0 means
// unlimited. The clock starts on the first call.
double budget_seconds();
void set_budget_seconds(double secs);
// Throws BudgetError naming `what` once the budget is spent.
void check_budget(const std::string& what);

}  // namespace redchar

#endif  // REDCHAR_ERROR_H_
