#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "terracini/render.hpp"

namespace terracini {

// Runtime cap on n: ring and determinant sizes grow quickly, so anything
// above the cap fails loudly instead of grinding; the cap itself is a flag.
struct CliLimits {
    int max_n = 8;
};

// "A..B" (or a bare integer for a single value).
std::pair<int, int> parse_range(const std::string& spec);

OutputDocument cmd_formula(int n, Format fmt, const CliLimits& limits = {});
OutputDocument cmd_eval(int n, const std::string& d, const std::string& g, Format fmt,
                        const CliLimits& limits = {});
OutputDocument cmd_table(int n, std::pair<int, int> d_range, std::pair<int, int> g_range,
                         Format fmt, const CliLimits& limits = {});
OutputDocument cmd_verify(int max_n, Format fmt, const CliLimits& limits = {});
OutputDocument cmd_oracle(int d, std::uint64_t seed, int range, double tol, int trials,
                          Format fmt);

} // namespace terracini
