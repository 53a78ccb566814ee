#include "terracini/cli.hpp"

#include <sstream>

#include "terracini/oracle.hpp"
#include "terracini/porteous.hpp"
#include "terracini/verify.hpp"

namespace terracini {

namespace {

using ojson = nlohmann::ordered_json;

void require_n(int n, const CliLimits& limits) {
    if (n < 2) throw UsageError("n must be >= 2");
    if (n > limits.max_n)
        throw UsageError("n=" + std::to_string(n) + " exceeds the configured limit max_n=" +
                         std::to_string(limits.max_n) + "; pass --max-n to raise it");
}

void require_format(Format fmt, std::initializer_list<Format> allowed,
                    const std::string& command) {
    for (Format f : allowed)
        if (f == fmt) return;
    throw UsageError(std::string("format '") + format_name(fmt) + "' is not supported by '" +
                     command + "'");
}

std::vector<std::string> eval_warnings(int n, const Rational& d, const Rational& t) {
    std::vector<std::string> w;
    if (d < Rational(3 * n - 2))
        w.push_back("d < 3n-2: the non-degeneracy hypothesis fails; the value is the formal "
                    "Porteous number");
    if (t.sign() < 0)
        w.push_back("negative expected count: the smoothness/genericity hypotheses cannot all "
                    "hold at these invariants");
    return w;
}

ojson complex_json(const std::complex<double>& z) {
    return ojson{{"re", z.real()}, {"im", z.imag()}};
}

} // namespace

std::pair<int, int> parse_range(const std::string& spec) {
    auto parse_int = [](const std::string& s) {
        size_t used = 0;
        int v;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            throw UsageError("malformed range bound '" + s + "'");
        }
        if (used != s.size()) throw UsageError("malformed range bound '" + s + "'");
        return v;
    };
    size_t pos = spec.find("..");
    if (pos == std::string::npos) {
        int v = parse_int(spec);
        return {v, v};
    }
    return {parse_int(spec.substr(0, pos)), parse_int(spec.substr(pos + 2))};
}

OutputDocument cmd_formula(int n, Format fmt, const CliLimits& limits) {
    require_n(n, limits);
    require_format(fmt, {Format::text, Format::json, Format::latex}, "formula");
    TerraciniFormula f = terracini_formula(Context(n));
    OutputDocument doc{"formula", fmt, "", 0};
    switch (fmt) {
        case Format::text:
            doc.body = f.t.str() + "\n";
            break;
        case Format::latex:
            doc.body = "t(C) = " + poly_latex(f.t) + "\n";
            break;
        case Format::json: {
            ojson j{{"kind", "formula"},
                    {"n", f.n},
                    {"variables", {"d", "g"}},
                    {"t", poly_terms_json(f.t, {Sym::d, Sym::g})},
                    {"text", f.t.str()}};
            doc.body = j.dump() + "\n";
            break;
        }
        default:
            break;
    }
    return doc;
}

OutputDocument cmd_eval(int n, const std::string& d, const std::string& g, Format fmt,
                        const CliLimits& limits) {
    require_n(n, limits);
    require_format(fmt, {Format::text, Format::json}, "eval");
    Rational dv, gv;
    try {
        dv = Rational::from_string(d);
        gv = Rational::from_string(g);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    TerraciniFormula f = terracini_formula(Context(n));
    Rational t = f.t.evaluate({{Sym::d, dv}, {Sym::g, gv}});
    std::vector<std::string> warnings = eval_warnings(n, dv, t);

    OutputDocument doc{"value", fmt, "", 0};
    if (fmt == Format::text) {
        std::ostringstream os;
        os << t.str() << "\n";
        for (const auto& w : warnings) os << "warning: " << w << "\n";
        doc.body = os.str();
    } else {
        ojson j{{"kind", "value"}, {"n", n},          {"d", dv.str()},
                {"g", gv.str()},   {"t", t.str()},    {"warnings", warnings}};
        doc.body = j.dump() + "\n";
    }
    return doc;
}

OutputDocument cmd_table(int n, std::pair<int, int> d_range, std::pair<int, int> g_range,
                         Format fmt, const CliLimits& limits) {
    require_n(n, limits);
    require_format(fmt, {Format::csv, Format::json}, "table");
    TerraciniFormula f = terracini_formula(Context(n));
    OutputDocument doc{"table", fmt, "", 0};
    ojson cells = ojson::array();
    std::ostringstream csv;
    csv << "d,g,t\n";
    for (int d = d_range.first; d <= d_range.second; ++d)
        for (int g = g_range.first; g <= g_range.second; ++g) {
            Rational t = f.t.evaluate({{Sym::d, Rational(d)}, {Sym::g, Rational(g)}});
            csv << d << "," << g << "," << t.str() << "\n";
            cells.push_back(ojson{{"d", d}, {"g", g}, {"t", t.str()}});
        }
    if (fmt == Format::csv) {
        doc.body = csv.str();
    } else {
        ojson j{{"kind", "table"}, {"n", n}, {"cells", cells}};
        doc.body = j.dump() + "\n";
    }
    return doc;
}

OutputDocument cmd_verify(int max_n, Format fmt, const CliLimits& limits) {
    if (max_n < 2) throw UsageError("verify needs max_n >= 2");
    if (max_n > limits.max_n)
        throw UsageError("max_n=" + std::to_string(max_n) + " exceeds the configured limit " +
                         std::to_string(limits.max_n));
    require_format(fmt, {Format::text, Format::json}, "verify");
    VerifyReport report = run_verification(max_n);
    OutputDocument doc{"verify-report", fmt, "", report.all_passed() ? 0 : 1};
    if (fmt == Format::text) {
        std::ostringstream os;
        int passed = 0;
        for (const auto& c : report.checks) {
            os << (c.passed ? "PASS  " : "FAIL  ") << c.name;
            if (!c.passed && !c.detail.empty()) os << ": " << c.detail;
            os << "\n";
            if (c.passed) ++passed;
        }
        os << "verify: " << passed << "/" << report.checks.size() << " checks passed (n = 2.."
           << max_n << ")\n";
        doc.body = os.str();
    } else {
        ojson checks = ojson::array();
        for (const auto& c : report.checks)
            checks.push_back(ojson{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        ojson j{{"kind", "verify-report"},
                {"max_n", max_n},
                {"all_passed", report.all_passed()},
                {"checks", checks}};
        doc.body = j.dump() + "\n";
    }
    return doc;
}

OutputDocument cmd_oracle(int d, std::uint64_t seed, int range, double tol, int trials,
                          Format fmt) {
    if (d < 4) throw UsageError("oracle needs d >= 4");
    if (range < 1) throw UsageError("oracle needs range >= 1");
    if (!(tol > 0)) throw UsageError("oracle needs tol > 0");
    if (trials < 1) throw UsageError("oracle needs trials >= 1");
    require_format(fmt, {Format::text, Format::json}, "oracle");

    OracleOptions opts;
    opts.tol = tol;
    std::vector<OracleRun> runs;
    int matched = 0;
    for (int k = 0; k < trials; ++k) {
        CurveParam curve = random_curve(d, seed + static_cast<std::uint64_t>(k), range);
        runs.push_back(count_terracini_pairs(curve, opts));
        if (runs.back().count == runs.back().expected) ++matched;
    }

    OutputDocument doc{"oracle-report", fmt, "", 0};
    if (fmt == Format::text) {
        std::ostringstream os;
        for (const auto& r : runs)
            os << "d=" << r.d << " seed=" << r.seed << " range=" << r.range
               << " expected=" << r.expected << " count=" << r.count
               << " resultant_degree=" << r.resultant_degree << "\n";
        os << "oracle: " << matched << "/" << trials << " runs matched 2(d-3)(d-4)\n";
        doc.body = os.str();
    } else {
        ojson jruns = ojson::array();
        for (const auto& r : runs) {
            ojson sols = ojson::array();
            for (const auto& s : r.solutions)
                sols.push_back(ojson{{"t1", complex_json(s.t1)},
                                     {"t2", complex_json(s.t2)},
                                     {"residual", s.residual}});
            jruns.push_back(ojson{{"d", r.d},
                                  {"seed", r.seed},
                                  {"expected", r.expected},
                                  {"count", r.count},
                                  {"solutions", sols}});
        }
        ojson j{{"kind", "oracle-report"}, {"d", d},           {"range", range},
                {"tol", tol},              {"trials", trials}, {"matched", matched},
                {"runs", jruns}};
        doc.body = j.dump() + "\n";
    }
    return doc;
}

} // namespace terracini
