#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polypart::cli {

// Exit codes: 0 affirmative, 1 negative verdict (not congruent, no tiling,
// invalid partition), 2 usage or input error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace polypart::cli
