#pragma once

#include <string>
#include <vector>

#include "terracini/porteous.hpp"

namespace terracini {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    int max_n = 0;
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

// Individual cross-checks, taking their inputs explicitly so that a corrupted
// input is detectable (the tests use these as negative controls).
bool chern_routes_agree(const std::vector<SymClass>& p, int level);
bool newton_roundtrip_holds(const ChernVector& cv);
bool inverse_convolution_is_identity(const std::vector<SymClass>& c);
bool determinant_routes_agree(const SymClassMatrix& m);
bool porteous_matches_inverse_series(const ChernVector& cv);

// Runs every cross-check for n = 2 .. max_n: GRR pipeline vs closed Chern
// character, the hand-derivable n = 2 anchors, Newton vs exponential Chern
// routes, Berkowitz vs cofactor determinants, the Porteous class vs the
// formal-inverse identity, integrality on an integer grid, the genus-0
// specializations, and the closed formulas for n = 2 and n = 3.
VerifyReport run_verification(int max_n);

} // namespace terracini
