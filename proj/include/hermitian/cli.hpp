// SPDX-License-Identifier: Apache-2.0
#ifndef HERMITIAN_CLI_HPP
#define HERMITIAN_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hermitian {

// Full command-line surface; args excludes the program name.
// Exit codes: 0 success, 1 invalid input or failed verification,
// 2 budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hermitian

#endif
