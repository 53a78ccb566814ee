#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "terracini/polynomial.hpp"

namespace terracini {

enum class Format { text, json, latex, csv };

// Throws UsageError on unknown names.
Format parse_format(const std::string& name);
const char* format_name(Format f);

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Rendered output of one CLI command. JSON bodies are canonical: parsing and
// re-serializing reproduces the bytes.
struct OutputDocument {
    std::string kind; // formula | value | table | verify-report | oracle-report
    Format format = Format::text;
    std::string body;
    int exit_code = 0;
};

// LaTeX rendering with \frac for non-integer coefficients, deterministic
// (same canonical term order as Poly::str).
std::string poly_latex(const Poly& p);

// Exact term list [[exponents, coeff], ...] over the given variable order,
// canonical (graded-lex descending, matching the text rendering).
nlohmann::ordered_json poly_terms_json(const Poly& p, const std::vector<Sym>& vars);

// Inverse of poly_terms_json; used by the round-trip checks.
Poly poly_from_terms_json(const nlohmann::json& terms, const std::vector<Sym>& vars);

} // namespace terracini
