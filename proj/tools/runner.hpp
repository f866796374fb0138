#pragma once

#include <string>
#include <vector>

#include "homodyn/test_functions.hpp"

namespace homodyn::cli {

// golden | sqrt2 | identity | liouville(k) | a,b,c,d
GroupElement parse_base(const std::string& spec);

// height_band(h) | disc(x,y,r) | bump(x,y,r) | angle_weight | constant(v), optionally centered(...)
TestFunction parse_function(const std::string& spec);
std::vector<TestFunction> parse_suite(const std::string& spec);

// "key = value" lines, '#' comments; returns --key=value tokens and the experiment name if given.
std::vector<std::string> read_config(const std::string& path, std::string& experiment);

// Exit status: 0 success, 1 configuration error, 2 numerical or I/O failure.
int run(int argc, char** argv);

}  // namespace homodyn::cli
