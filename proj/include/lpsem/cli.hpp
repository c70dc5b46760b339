// Command-line front end. The entry point is stream-parameterized so tests
// can drive it in-process.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lpsem {

// Runs one invocation. `args` holds the arguments in natural order, without
// the program name. Exit codes: 0 success (including empty model lists),
// 1 parse/safety/grounding error, 2 cap exceeded, 3 semantics precondition
// violated, 70 internal error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

} // namespace lpsem
