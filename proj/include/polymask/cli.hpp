/*
   Copyright 2026 The polymask Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef POLYMASK_CLI_HPP
#define POLYMASK_CLI_HPP

#include <iosfwd>
#include <span>
#include <string>

namespace polymask::cli {

/// Executes one command-line request.  args holds the arguments in their
/// natural order, without the program name.  All output goes to the given
/// streams, so tests can drive the CLI in process.
///
/// Exit codes: 0 success, 1 the refinement identity does not hold (verify
/// only), 2 malformed input, 3 domain error.  Domain-error messages start
/// with the stable error name (for example "ZeroDilation") so scripts can
/// match on it.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace polymask::cli

#endif
