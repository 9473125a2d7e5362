#pragma once

// Command-line front end. Exit codes: 0 success / Converges / Zero / pass,
// 1 Diverges / NonZero / fail, 2 usage or parse errors, 3 Inconclusive.

#include <iosfwd>
#include <string>
#include <vector>

namespace roughstat {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace roughstat
