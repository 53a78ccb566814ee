#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "terracini/cli.hpp"
#include "terracini/porteous.hpp"

using namespace terracini;

namespace {

Poly closed_n2() {
    Poly d = Poly::var(Sym::d), g = Poly::var(Sym::g);
    return Poly(2) * (d - g - Poly(3)) * (d - g - Poly(4)) + Poly(8) * g * (d - Poly(5));
}

} // namespace

TEST_CASE("formula command") {
    OutputDocument doc = cmd_formula(2, Format::text);
    CHECK(doc.exit_code == 0);
    CHECK(doc.body == closed_n2().str() + "\n");

    OutputDocument doc3 = cmd_formula(3, Format::text);
    CHECK(doc3.body == terracini_formula(Context(3)).t.str() + "\n");

    CHECK_THROWS_AS(cmd_formula(1, Format::text), UsageError);
    CHECK_THROWS_AS(cmd_formula(9, Format::text), UsageError);    // above the default cap
    CHECK_THROWS_AS(cmd_formula(2, Format::csv), UsageError);     // format not offered
    CHECK_NOTHROW(cmd_formula(3, Format::text, CliLimits{3}));
    CHECK_THROWS_AS(cmd_formula(4, Format::text, CliLimits{3}), UsageError);
}

TEST_CASE("formula json round-trips byte-identically") {
    OutputDocument doc = cmd_formula(3, Format::json);
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(doc.body);
    CHECK(j.dump() + "\n" == doc.body);
    CHECK(j["kind"] == "formula");
    CHECK(j["n"] == 3);
    CHECK(j["variables"] == nlohmann::ordered_json({"d", "g"}));

    // terms regenerate both the polynomial and the canonical text
    Poly rebuilt = poly_from_terms_json(j["t"], {Sym::d, Sym::g});
    CHECK(rebuilt == terracini_formula(Context(3)).t);
    CHECK(j["text"] == rebuilt.str());
}

TEST_CASE("formula latex rendering") {
    OutputDocument doc = cmd_formula(3, Format::latex);
    CHECK(doc.body.find("\\frac{4}{3} d^{3}") != std::string::npos);
    OutputDocument doc2 = cmd_formula(2, Format::latex);
    CHECK(doc2.body == "t(C) = 2 d^{2} + 4 d g + 2 g^{2} - 14 d - 26 g + 24\n");
}

TEST_CASE("eval command") {
    CHECK(cmd_eval(2, "8", "0", Format::text).body == "40\n");
    CHECK(cmd_eval(2, "5", "1", Format::text).body == "0\n");
    // boundary d = 3n-2 carries no warning
    CHECK(cmd_eval(2, "4", "0", Format::text).body == "0\n");
    // below the bound: warning, value still exact
    OutputDocument low = cmd_eval(2, "3", "0", Format::text);
    CHECK(low.body.substr(0, 2) == "0\n");
    CHECK(low.body.find("warning:") != std::string::npos);
    CHECK(low.exit_code == 0);

    OutputDocument j = cmd_eval(2, "8", "0", Format::json);
    auto parsed = nlohmann::ordered_json::parse(j.body);
    CHECK(parsed["t"] == "40");
    CHECK(parsed["warnings"].empty());

    CHECK_THROWS_AS(cmd_eval(2, "abc", "0", Format::text), UsageError);
    CHECK_THROWS_AS(cmd_eval(2, "8", "1/0", Format::text), UsageError);

    // rational inputs evaluate exactly
    CHECK(cmd_eval(2, "9/2", "0", Format::text).body == "3/2\n");
}

TEST_CASE("eval agrees with substituting into the formula") {
    TerraciniFormula f = terracini_formula(Context(2));
    for (int d = 4; d <= 9; ++d)
        for (int g = 0; g <= 3; ++g) {
            Rational want = f.t.evaluate({{Sym::d, Rational(d)}, {Sym::g, Rational(g)}});
            OutputDocument doc =
                cmd_eval(2, std::to_string(d), std::to_string(g), Format::text);
            CHECK(doc.body.substr(0, doc.body.find('\n')) == want.str());
        }
}

TEST_CASE("table command") {
    OutputDocument doc = cmd_table(2, {4, 8}, {0, 0}, Format::csv);
    CHECK(doc.body == "d,g,t\n4,0,0\n5,0,4\n6,0,12\n7,0,24\n8,0,40\n");

    OutputDocument cell = cmd_table(2, {6, 6}, {2, 2}, Format::csv);
    CHECK(cell.body == "d,g,t\n6,2,16\n");

    OutputDocument empty = cmd_table(2, {5, 4}, {0, 0}, Format::csv);
    CHECK(empty.body == "d,g,t\n");
    CHECK(empty.exit_code == 0);

    OutputDocument j = cmd_table(2, {4, 5}, {0, 1}, Format::json);
    auto parsed = nlohmann::ordered_json::parse(j.body);
    CHECK(parsed["cells"].size() == 4);
    CHECK(parsed["cells"][0]["t"] == "0");
    CHECK(j.body == parsed.dump() + "\n");

    CHECK_THROWS_AS(cmd_table(2, {4, 8}, {0, 0}, Format::latex), UsageError);
}

TEST_CASE("range parsing") {
    CHECK(parse_range("4..8") == std::pair<int, int>{4, 8});
    CHECK(parse_range("6") == std::pair<int, int>{6, 6});
    CHECK(parse_range("-2..3") == std::pair<int, int>{-2, 3});
    CHECK_THROWS_AS(parse_range("x..3"), UsageError);
    CHECK_THROWS_AS(parse_range("4..y"), UsageError);
    CHECK_THROWS_AS(parse_range(""), UsageError);
}

TEST_CASE("verify command") {
    OutputDocument doc = cmd_verify(2, Format::text);
    CHECK(doc.exit_code == 0);
    CHECK(doc.body.find("FAIL") == std::string::npos);
    CHECK(doc.body.find("PASS  n2-closed-formula") != std::string::npos);

    OutputDocument j = cmd_verify(2, Format::json);
    auto parsed = nlohmann::ordered_json::parse(j.body);
    CHECK(parsed["all_passed"] == true);
    CHECK(j.body == parsed.dump() + "\n");

    CHECK_THROWS_AS(cmd_verify(1, Format::text), UsageError);
    CHECK_THROWS_AS(cmd_verify(99, Format::text), UsageError);
}

TEST_CASE("oracle command") {
    OutputDocument doc = cmd_oracle(5, 1, 10, 1e-8, 2, Format::json);
    auto parsed = nlohmann::ordered_json::parse(doc.body);
    CHECK(doc.body == parsed.dump() + "\n");
    CHECK(parsed["kind"] == "oracle-report");
    CHECK(parsed["trials"] == 2);
    CHECK(parsed["matched"] == 2);
    REQUIRE(parsed["runs"].size() == 2);
    CHECK(parsed["runs"][0]["d"] == 5);
    CHECK(parsed["runs"][0]["seed"] == 1);
    CHECK(parsed["runs"][0]["expected"] == 4);
    CHECK(parsed["runs"][0]["count"] == 4);
    CHECK(parsed["runs"][0]["solutions"].size() == 4);
    CHECK(parsed["runs"][0]["solutions"][0].contains("t1"));
    CHECK(parsed["runs"][0]["solutions"][0]["t1"].contains("re"));
    CHECK(parsed["runs"][0]["solutions"][0].contains("residual"));

    OutputDocument text = cmd_oracle(4, 1, 10, 1e-8, 1, Format::text);
    CHECK(text.body.find("expected=0 count=0") != std::string::npos);

    CHECK_THROWS_AS(cmd_oracle(3, 1, 10, 1e-8, 1, Format::text), UsageError);
    CHECK_THROWS_AS(cmd_oracle(5, 1, 0, 1e-8, 1, Format::text), UsageError);
    CHECK_THROWS_AS(cmd_oracle(5, 1, 10, -1.0, 1, Format::text), UsageError);
    CHECK_THROWS_AS(cmd_oracle(5, 1, 10, 1e-8, 0, Format::text), UsageError);
}
