#include "terracini/verify.hpp"

#include <sstream>

namespace terracini {

bool chern_routes_agree(const std::vector<SymClass>& p, int level) {
    std::vector<SymClass> a = chern_newton(p, level);
    std::vector<SymClass> b = chern_exp(p, level);
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

bool newton_roundtrip_holds(const ChernVector& cv) {
    // Reconstruct the power sums from the elementary classes via the same
    // identities, run forward.
    std::vector<SymClass> p;
    for (int i = 1; i <= cv.n; ++i) {
        SymClass acc = SymClass::zero(cv.n);
        Rational sign(-1);
        for (int j = 1; j < i; ++j) {
            acc += sign * (cv.chern(j) * p[static_cast<size_t>(i - j - 1)]);
            sign = -sign;
        }
        // p_i = -sum_{j=1}^{i-1} (-1)^j c_j p_{i-j} - (-1)^i i c_i
        Rational tail = (i % 2 == 0) ? Rational(-i) : Rational(i);
        p.push_back(-acc + tail * cv.chern(i));
        if (!(p.back() == cv.power_sum(i))) return false;
    }
    return true;
}

bool inverse_convolution_is_identity(const std::vector<SymClass>& c) {
    std::vector<SymClass> s = inverse_series(c);
    for (size_t k = 0; k < c.size(); ++k) {
        SymClass conv = c[0] - c[0];
        for (size_t j = 0; j <= k; ++j) conv += c[j] * s[k - j];
        SymClass want = (k == 0) ? SymClass(1) : SymClass();
        if (!(conv == want)) return false;
    }
    return true;
}

bool determinant_routes_agree(const SymClassMatrix& m) {
    return det_berkowitz<SymClass>(m) == det_cofactor<SymClass>(m);
}

bool porteous_matches_inverse_series(const ChernVector& cv) {
    return terracini_class_from(cv) == terracini_class_inverse_route(cv);
}

namespace {

Poly d_sym() { return Poly::var(Sym::d); }
Poly g_sym() { return Poly::var(Sym::g); }

Poly closed_formula_n2() {
    Poly d = d_sym(), g = g_sym();
    return Poly(2) * (d - g - Poly(3)) * (d - g - Poly(4)) + Poly(8) * g * (d - Poly(5));
}

Poly closed_formula_n3() {
    Poly g = g_sym();
    Poly A = d_sym() - g - Poly(5);
    return Rational(4, 3) * (A * (A - Poly(1)) * (A - Poly(2))) +
           Poly(8) * ((A - Poly(1)) * (A - Poly(2)) * g) +
           Poly(16) * ((A - Poly(2)) * g * (g - Poly(1))) +
           Rational(32, 3) * (g * (g - Poly(1)) * (g - Poly(2)));
}

SymClass ch_anchor_n2() {
    // 4 + 2(d-g-3)x + 4 theta - 2(d-g-3)x^2 - 8 theta x
    Poly A = d_sym() - g_sym() - Poly(3);
    return SymClass(Poly(4)) + SymClass::monomial(2, Poly(2) * A, 1, 0) +
           SymClass::monomial(2, Poly(4), 0, 1) +
           SymClass::monomial(2, Poly(-2) * A, 2, 0) +
           SymClass::monomial(2, Poly(-8), 1, 1);
}

SymClass c1_anchor_n2() {
    Poly A = d_sym() - g_sym() - Poly(3);
    return SymClass::monomial(2, Poly(2) * A, 1, 0) + SymClass::monomial(2, Poly(4), 0, 1);
}

struct PerN {
    Context ctx;
    ChCharacter grr, closed;
    ChernVector cv;
    std::vector<SymClass> c_exp;
    SymClassMatrix porteous;
    SymClass t_class;
    Poly t;
};

PerN compute(int n) {
    Context ctx(n);
    PerN out{ctx, ch_EC_grr(ctx), ch_EC_closed(ctx), {}, {}, {}, {}, {}};
    out.cv = chern_vector(out.grr);
    out.c_exp = chern_exp(out.cv.p, n);
    out.porteous = porteous_matrix(out.cv);
    out.t_class = det_berkowitz<SymClass>(out.porteous);
    out.t = eval_top(out.t_class);
    return out;
}

void add(VerifyReport& report, const std::string& name, bool passed,
         const std::string& detail = "") {
    report.checks.push_back(CheckResult{name, passed, passed ? "" : detail});
}

std::string tag(const std::string& base, int n) {
    return base + "[n=" + std::to_string(n) + "]";
}

} // namespace

VerifyReport run_verification(int max_n) {
    if (max_n < 2) throw std::invalid_argument("run_verification: max_n must be >= 2");
    VerifyReport report;
    report.max_n = max_n;

    for (int n = 2; n <= max_n; ++n) {
        PerN data = compute(n);

        bool grr_eq = true;
        for (int i = 0; i <= n; ++i)
            grr_eq = grr_eq && data.grr.part(i) == data.closed.part(i);
        add(report, tag("grr-vs-closed", n), grr_eq,
            "GRR pushforward disagrees with the closed Chern character");

        add(report, tag("rank-2n", n),
            data.grr.part(0) == SymClass(Poly(2 * n)) && data.grr.well_formed(),
            "ch_0 != 2n or parts not homogeneous");

        bool support = true;
        for (int i = 1; i <= n; ++i)
            for (const auto& [key, coeff] : data.grr.part(i).terms())
                support = support && (key == SymClass::Key{i, 0} || key == SymClass::Key{i - 1, 1});
        add(report, tag("ch-support", n), support,
            "ch_i contains monomials other than x^i and x^{i-1} theta");

        bool chern_eq = data.c_exp.size() == data.cv.c.size();
        for (size_t i = 0; chern_eq && i < data.c_exp.size(); ++i)
            chern_eq = data.cv.c[i] == data.c_exp[i];
        add(report, tag("newton-vs-exp", n), chern_eq,
            "Newton and exponential Chern routes disagree");

        add(report, tag("newton-roundtrip", n), newton_roundtrip_holds(data.cv),
            "power sums are not reproduced from the Chern classes");

        add(report, tag("inverse-convolution", n), inverse_convolution_is_identity(data.cv.c),
            "c * c^{-1} != 1");

        add(report, tag("det-routes", n), determinant_routes_agree(data.porteous),
            "Berkowitz and cofactor determinants disagree");

        add(report, tag("porteous-vs-inverse", n), porteous_matches_inverse_series(data.cv),
            "Porteous class differs from (-1)^n [c^{-1}]_n");

        bool integral = true;
        std::ostringstream bad;
        for (int dv = 3 * n - 2; dv <= 3 * n + 10; ++dv)
            for (int gv = 0; gv <= 8; ++gv) {
                Rational v = data.t.evaluate({{Sym::d, Rational(dv)}, {Sym::g, Rational(gv)}});
                if (!v.is_integer()) {
                    integral = false;
                    bad << " (" << dv << "," << gv << ")->" << v.str();
                }
            }
        add(report, tag("integer-grid", n), integral, "non-integer values:" + bad.str());

        bool g0 = true;
        std::vector<SymClass> pool = data.cv.c;
        pool.insert(pool.end(), data.grr.parts.begin(), data.grr.parts.end());
        pool.push_back(data.t_class);
        for (const SymClass& cls : pool) {
            Poly full = eval_top(cls).substitute({{Sym::g, Rational(0)}});
            Poly killed = eval_top(cls.killed_theta()).substitute({{Sym::g, Rational(0)}});
            g0 = g0 && full == killed;
        }
        add(report, tag("g0-specialization", n), g0,
            "killing theta first disagrees with substituting g=0 last");

        Poly tg0 = data.t.substitute({{Sym::g, Rational(0)}});
        Poly A = d_sym() - Poly(2 * n - 1);
        Poly prod(1);
        Rational coeff(1);
        for (int i = 0; i < n; ++i) {
            prod *= A - Poly(i);
            coeff *= Rational(2, i + 1);
        }
        add(report, tag("g0-falling-pattern", n), tg0 == coeff * prod,
            "genus-0 slice departs from (2^n/n!) A(A-1)...(A-n+1), A = d-2n+1");

        Rational rnc = data.t.evaluate({{Sym::d, Rational(3 * n - 2)}, {Sym::g, Rational(0)}});
        add(report, tag("rational-normal-curve-zero", n), rnc.is_zero(),
            "t != 0 on the rational normal curve, got " + rnc.str());

        if (n == 2) {
            add(report, "n2-closed-formula", data.t == closed_formula_n2(),
                "n=2 output differs from 2(d-g-3)(d-g-4)+8g(d-5)");
            add(report, "n2-ch-anchor", data.grr.total() == ch_anchor_n2(),
                "n=2 Chern character differs from the displayed anchor");
            add(report, "n2-c1-anchor", data.cv.chern(1) == c1_anchor_n2(),
                "c_1 differs from 2(d-g-3)x + 4 theta");
        }
        if (n == 3) {
            add(report, "n3-closed-formula", data.t == closed_formula_n3(),
                "n=3 output differs from the pinned closed form");
        }
    }
    return report;
}

} // namespace terracini
