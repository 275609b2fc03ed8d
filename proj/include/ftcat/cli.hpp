#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ftcat {

// Runs one subcommand; args excludes the program name. Exit status:
// 0 success, 1 property fails, 2 invalid input, 3 resource cap.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ftcat
