#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace piproj {

inline constexpr const char* kToolVersion = "piproj 0.1.0";

/// Command line front end. Commands: `verify <suite>`, `reconstruct`,
/// `dump <corpus|module|pipoint>`. Exit codes: 0 all assertions pass,
/// 1 a mathematical assertion failed, 2 usage or configuration error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace piproj
