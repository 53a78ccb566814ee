// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "support/generators.hpp"
#include "terracini/cli.hpp"
#include "terracini/oracle.hpp"
#include "terracini/porteous.hpp"
#include "terracini/verify.hpp"

using namespace terracini;

namespace {

Poly d_sym() { return Poly::var(Sym::d); }
Poly g_sym() { return Poly::var(Sym::g); }

Poly closed_n2() {
    Poly d = d_sym(), g = g_sym();
    return Poly(2) * (d - g - Poly(3)) * (d - g - Poly(4)) + Poly(8) * g * (d - Poly(5));
}

Poly closed_n3() {
    Poly g = g_sym();
    Poly A = d_sym() - g - Poly(5);
    return Rational(4, 3) * (A * (A - Poly(1)) * (A - Poly(2))) +
           Poly(8) * ((A - Poly(1)) * (A - Poly(2)) * g) +
           Poly(16) * ((A - Poly(2)) * g * (g - Poly(1))) +
           Rational(32, 3) * (g * (g - Poly(1)) * (g - Poly(2)));
}

struct Runner {
    int failures = 0;

    void run(const std::string& name, const std::function<bool(std::string&)>& body) {
        std::string detail;
        bool ok = false;
        auto start = std::chrono::steady_clock::now();
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line << (ok ? "PASS" : "FAIL") << "  " << name << "  (" << secs << " s)";
        if (!ok && !detail.empty()) line << "  " << detail;
        std::cout << line.str() << std::endl;
        if (!ok) ++failures;
    }
};

} // namespace

int main() {
    Runner r;

    r.run("criterion-1: n=2 formula reproduces 2(d-g-3)(d-g-4)+8g(d-5), < 1 s", [](std::string& detail) {
        auto start = std::chrono::steady_clock::now();
        OutputDocument doc = cmd_formula(2, Format::text);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool syntactic = doc.body == closed_n2().str() + "\n";
        bool structural = terracini_formula(Context(2)).t == closed_n2();
        if (!syntactic || !structural) detail = "formula mismatch: " + doc.body;
        if (secs >= 1.0) detail += " too slow: " + std::to_string(secs) + " s";
        return syntactic && structural && secs < 1.0;
    });

    r.run("criterion-2: GRR pipeline == closed Chern character, n=2..6, < 5 s", [](std::string& detail) {
        auto start = std::chrono::steady_clock::now();
        bool ok = true;
        for (int n = 2; n <= 6 && ok; ++n) {
            ChCharacter grr = ch_EC_grr(Context(n)), closed = ch_EC_closed(Context(n));
            for (int i = 0; i <= n; ++i) ok = ok && grr.part(i) == closed.part(i);
            if (!ok) detail = "route mismatch at n=" + std::to_string(n);
        }
        // the displayed n=2 anchors
        Poly A = d_sym() - g_sym() - Poly(3);
        SymClass anchor = SymClass(Poly(4)) + SymClass::monomial(2, Poly(2) * A, 1, 0) +
                          SymClass::monomial(2, Poly(4), 0, 1) +
                          SymClass::monomial(2, Poly(-2) * A, 2, 0) +
                          SymClass::monomial(2, Poly(-8), 1, 1);
        if (!(ch_EC_grr(Context(2)).total() == anchor)) {
            ok = false;
            detail = "n=2 character anchor mismatch";
        }
        SymClass c1 = chern_vector(ch_EC_grr(Context(2))).chern(1);
        SymClass c1_anchor =
            SymClass::monomial(2, Poly(2) * A, 1, 0) + SymClass::monomial(2, Poly(4), 0, 1);
        if (!(c1 == c1_anchor)) {
            ok = false;
            detail = "c_1 anchor mismatch";
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs >= 5.0) {
            ok = false;
            detail += " too slow: " + std::to_string(secs) + " s";
        }
        return ok;
    });

    r.run("criterion-3: Chern routes, determinant routes, inverse-series identity, n=2..6", [](std::string& detail) {
        for (int n = 2; n <= 6; ++n) {
            ChernVector cv = chern_vector(ch_EC_grr(Context(n)));
            if (!chern_routes_agree(cv.p, n)) {
                detail = "Newton vs exponential at n=" + std::to_string(n);
                return false;
            }
            if (!determinant_routes_agree(porteous_matrix(cv))) {
                detail = "Berkowitz vs cofactor at n=" + std::to_string(n);
                return false;
            }
            if (!porteous_matches_inverse_series(cv)) {
                detail = "Porteous vs inverse series at n=" + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    r.run("criterion-4: n=2 numeric table", [](std::string& detail) {
        const std::vector<std::tuple<int, int, long>> cells{
            {4, 0, 0}, {5, 0, 4}, {5, 1, 0}, {6, 0, 12}, {6, 2, 16}, {7, 1, 28}, {8, 0, 40}};
        TerraciniFormula f = terracini_formula(Context(2));
        for (const auto& [d, g, want] : cells) {
            Rational got = f.t.evaluate({{Sym::d, Rational(d)}, {Sym::g, Rational(g)}});
            if (got != Rational(want)) {
                detail = "t(" + std::to_string(d) + "," + std::to_string(g) + ") = " + got.str() +
                         ", want " + std::to_string(want);
                return false;
            }
        }
        return true;
    });

    r.run("criterion-5: n=3 formula and its zeros", [](std::string& detail) {
        TerraciniFormula f = terracini_formula(Context(3));
        if (!(f.t == closed_n3())) {
            detail = "n=3 formula mismatch: " + f.t.str();
            return false;
        }
        // independent route before trusting: inverse series
        ChernVector cv = chern_vector(ch_EC_grr(Context(3)));
        if (!(eval_top(terracini_class_inverse_route(cv)) == f.t)) {
            detail = "inverse-series route disagrees at n=3";
            return false;
        }
        for (const auto& [d, g] : std::vector<std::pair<int, int>>{{7, 0}, {8, 1}}) {
            Rational v = f.t.evaluate({{Sym::d, Rational(d)}, {Sym::g, Rational(g)}});
            if (!v.is_zero()) {
                detail = "t(" + std::to_string(d) + "," + std::to_string(g) + ") != 0";
                return false;
            }
        }
        return true;
    });

    r.run("criterion-6: brute-force oracle, d in {4,5,6}, 10 seeds each, >= 9 matches", [](std::string& detail) {
        std::ostringstream log;
        bool ok = true;
        double worst = 0;
        for (int d : {4, 5, 6}) {
            int matched = 0;
            for (std::uint64_t seed = 1; seed <= 10; ++seed) {
                auto start = std::chrono::steady_clock::now();
                OracleRun run = count_terracini_pairs(random_curve(d, seed, 10));
                double secs =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                worst = std::max(worst, secs);
                if (secs >= 120.0) {
                    ok = false;
                    log << " run d=" << d << " seed=" << seed << " took " << secs << " s;";
                }
                if (run.count == run.expected) ++matched;
            }
            log << " d=" << d << ": " << matched << "/10;";
            if (matched < 9) ok = false;
        }
        detail = log.str() + " worst run " + std::to_string(worst) + " s";
        if (ok) std::cout << "        oracle detail:" << detail << std::endl;
        return ok;
    });

    r.run("criterion-7: property suites", [](std::string& detail) {
        testgen::Gen gen(987654321);
        std::vector<Sym> vars{Sym::d, Sym::g, Sym::t1, Sym::t2};
        for (int it = 0; it < 1000; ++it) {
            Poly a = gen.poly(vars), b = gen.poly(vars), c = gen.poly(vars);
            bool ok = (a + b) + c == a + (b + c) && a * b == b * a &&
                      (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c;
            if (!ok) {
                detail = "ring axioms failed";
                return false;
            }
        }
        for (int it = 0; it < 500; ++it) {
            int n = gen.uniform(2, 3);
            SymClass alpha = gen.sym_class(n);
            ProdClass beta = gen.prod_class(n);
            if (!(pushforward(ProdClass(alpha) * beta) == alpha * pushforward(beta))) {
                detail = "projection formula failed";
                return false;
            }
        }
        for (int it = 0; it < 100; ++it) {
            int n = gen.uniform(2, 4);
            SymClass a = gen.sym_class(n + 1), b = gen.sym_class(n + 1);
            if (!((a * b).truncated(n) == a.truncated(n) * b.truncated(n))) {
                detail = "truncation coherence failed";
                return false;
            }
        }
        for (int n = 2; n <= 5; ++n) {
            TerraciniFormula f = terracini_formula(Context(n));
            for (int d = 3 * n - 2; d <= 3 * n + 10; ++d)
                for (int g = 0; g <= 8; ++g) {
                    Rational v = f.t.evaluate({{Sym::d, Rational(d)}, {Sym::g, Rational(g)}});
                    if (!v.is_integer()) {
                        detail = "non-integer t at n=" + std::to_string(n) + ", d=" +
                                 std::to_string(d) + ", g=" + std::to_string(g);
                        return false;
                    }
                }
        }
        for (int n = 2; n <= 4; ++n) {
            SymClass cls = terracini_class(Context(n));
            Poly full = eval_top(cls).substitute({{Sym::g, Rational(0)}});
            Poly killed = eval_top(cls.killed_theta()).substitute({{Sym::g, Rational(0)}});
            if (!(full == killed)) {
                detail = "g=0 specialization failed at n=" + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    std::cout << (r.failures == 0 ? "acceptance: all criteria passed"
                                  : "acceptance: " + std::to_string(r.failures) + " criteria FAILED")
              << std::endl;
    return r.failures == 0 ? 0 : 1;
}
