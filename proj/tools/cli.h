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


#ifndef REDCHAR_TOOLS_CLI_H_
#define REDCHAR_TOOLS_CLI_H_

#include <ostream>

namespace redchar::cli {

// Exit codes: 0 all checks pass, 1 a verification failed (the report is
// still written), 2 usage or precondition error.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace redchar::cli

#endif  // REDCHAR_TOOLS_CLI_H_
