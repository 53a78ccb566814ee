#include "terracini/oracle.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace Eigen {

// mpz_class scalars are used for the integer determinants inside the
// resultant's evaluation-interpolation path.
template <>
struct NumTraits<mpz_class> {
    using Real = mpz_class;
    using NonInteger = mpz_class;
    using Literal = mpz_class;
    using Nested = mpz_class;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 8,
        MulCost = 16
    };
    static inline Real epsilon() { return mpz_class(0); }
    static inline Real dummy_precision() { return mpz_class(0); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen

namespace terracini {

namespace {

using cd = std::complex<double>;
using cld = std::complex<long double>;

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Deterministic across platforms; std:: distributions are not.
long draw_in_range(std::uint64_t& state, int range) {
    std::uint64_t span = 2 * static_cast<std::uint64_t>(range) + 1;
    return static_cast<long>(splitmix64(state) % span) - range;
}

Poly row_poly(const CurveParam& curve, int i, Sym param, bool derivative) {
    Poly p;
    for (int k = 0; k <= curve.d; ++k) {
        long c = curve.coeffs(i, k);
        if (c == 0) continue;
        if (derivative) {
            if (k == 0) continue;
            p += Poly(Rational(c * k)) * Poly::var(param, k - 1);
        } else {
            p += Poly(Rational(c)) * Poly::var(param, k);
        }
    }
    return p;
}

std::vector<Rational> dense_coeffs(const Poly& p, Sym s) {
    std::vector<Poly> cs = p.coeffs_in(s);
    std::vector<Rational> out(cs.size());
    for (size_t i = 0; i < cs.size(); ++i) out[i] = cs[i].constant_value();
    return out;
}

// --- resultant support ------------------------------------------------------

PolyMatrix sylvester_matrix(const std::vector<Poly>& ca, const std::vector<Poly>& cb) {
    int da = static_cast<int>(ca.size()) - 1;
    int db = static_cast<int>(cb.size()) - 1;
    int m = da + db;
    PolyMatrix s(m, m);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) s(r, c) = Poly();
    for (int r = 0; r < db; ++r)
        for (int j = 0; j <= da; ++j) s(r, r + j) = ca[static_cast<size_t>(da - j)];
    for (int r = 0; r < da; ++r)
        for (int j = 0; j <= db; ++j) s(db + r, r + j) = cb[static_cast<size_t>(db - j)];
    return s;
}

Rational horner(const std::vector<Rational>& coeffs, const Rational& u) {
    Rational acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * u + *it;
    return acc;
}

// Exact Newton interpolation through (nodes[i], values[i]).
Poly interpolate(const std::vector<Rational>& nodes, std::vector<Rational> values, Sym s) {
    size_t n = nodes.size();
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i)
            values[i] = (values[i] - values[i - 1]) / (nodes[i] - nodes[i - j]);
    Poly acc, basis(1);
    for (size_t i = 0; i < n; ++i) {
        acc += basis * Poly(values[i]);
        basis *= Poly::var(s) - Poly(nodes[i]);
    }
    return acc;
}

// --- numeric root extraction -------------------------------------------------

// Parlett-Reinsch balancing by powers of two; similarity-transforms the
// matrix so the eigenvalue QR iteration sees comparable row/column norms.
void balance_matrix(Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>& a) {
    const long double radix = 2.0L;
    const auto n = a.rows();
    bool done = false;
    while (!done) {
        done = true;
        for (Eigen::Index i = 0; i < n; ++i) {
            long double r = 0, c = 0;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::abs(a(j, i));
                r += std::abs(a(i, j));
            }
            if (c == 0 || r == 0) continue;
            long double f = 1, s = c + r;
            while (c < r / radix) {
                c *= radix;
                r /= radix;
                f *= radix;
            }
            while (c >= r * radix) {
                c /= radix;
                r *= radix;
                f /= radix;
            }
            if ((c + r) < 0.95L * s) {
                done = false;
                for (Eigen::Index j = 0; j < n; ++j) a(i, j) /= f;
                for (Eigen::Index j = 0; j < n; ++j) a(j, i) *= f;
            }
        }
    }
}

cld horner_cld(const std::vector<long double>& coeffs, cld z) {
    cld acc(0, 0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

cld horner_deriv_cld(const std::vector<long double>& coeffs, cld z) {
    cld acc(0, 0);
    for (size_t k = coeffs.size(); k-- > 1;)
        acc = acc * z + static_cast<long double>(k) * coeffs[k];
    return acc;
}

} // namespace

long expected_pairs(int d) { return 2L * (d - 3) * (d - 4); }

CurveParam random_curve(int d, std::uint64_t seed, int range) {
    if (d < 4) throw std::invalid_argument("random_curve: d must be >= 4");
    if (range < 1) throw std::invalid_argument("random_curve: range must be >= 1");
    std::uint64_t state = seed ^ (0xA24BAED4963EE407ULL + 0x9552FB1214E1ULL * static_cast<std::uint64_t>(d) +
                                  0x100000001B3ULL * static_cast<std::uint64_t>(range));
    for (int attempt = 0; attempt < 64; ++attempt) {
        CurveParam curve;
        curve.d = d;
        curve.seed = seed;
        curve.range = range;
        curve.coeffs.resize(5, d + 1);
        for (int i = 0; i < 5; ++i)
            for (int k = 0; k <= d; ++k) curve.coeffs(i, k) = draw_in_range(state, range);
        bool top_nonzero = false;
        for (int i = 0; i < 5; ++i) top_nonzero = top_nonzero || curve.coeffs(i, d) != 0;
        if (!top_nonzero) continue;
        RationalMatrix m(5, d + 1);
        for (int i = 0; i < 5; ++i)
            for (int k = 0; k <= d; ++k) m(i, k) = Rational(curve.coeffs(i, k));
        if (rank_exact(m) == 5) return curve;
    }
    throw std::runtime_error("random_curve: could not draw independent coefficients");
}

int rank_exact(const RationalMatrix& m) {
    RationalMatrix a = m;
    const auto rows = a.rows(), cols = a.cols();
    int rank = 0;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = row; r < rows; ++r)
            if (!a(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row)
            for (Eigen::Index c = col; c < cols; ++c) std::swap(a(row, c), a(pivot, c));
        for (Eigen::Index r = row + 1; r < rows; ++r) {
            if (a(r, col).is_zero()) continue;
            Rational f = a(r, col) / a(row, col);
            for (Eigen::Index c = col; c < cols; ++c) a(r, c) -= f * a(row, c);
        }
        ++row;
        ++rank;
    }
    return rank;
}

Eigen::Matrix<Poly, 4, 5> contact_matrix(const CurveParam& curve) {
    Eigen::Matrix<Poly, 4, 5> m;
    for (int i = 0; i < 5; ++i) {
        m(0, i) = row_poly(curve, i, Sym::t1, false);
        m(1, i) = row_poly(curve, i, Sym::t1, true);
        m(2, i) = row_poly(curve, i, Sym::t2, false);
        m(3, i) = row_poly(curve, i, Sym::t2, true);
    }
    return m;
}

RationalMatrix contact_matrix_value(const CurveParam& curve, const Rational& t1,
                                    const Rational& t2) {
    Eigen::Matrix<Poly, 4, 5> sym = contact_matrix(curve);
    std::map<Sym, Rational> assign{{Sym::t1, t1}, {Sym::t2, t2}};
    RationalMatrix m(4, 5);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 5; ++c) m(r, c) = sym(r, c).evaluate(assign);
    return m;
}

std::array<Poly, 5> rank_drop_minors(const CurveParam& curve) {
    Eigen::Matrix<Poly, 4, 5> m = contact_matrix(curve);
    std::array<Poly, 5> minors;
    for (int k = 0; k < 5; ++k) {
        PolyMatrix sub(4, 4);
        int cc = 0;
        for (int c = 0; c < 5; ++c) {
            if (c == k) continue;
            for (int r = 0; r < 4; ++r) sub(r, cc) = m(r, c);
            ++cc;
        }
        minors[static_cast<size_t>(k)] = det_cofactor<Poly>(sub);
    }
    return minors;
}

Poly remove_diagonal_factor(const Poly& minor, int order) {
    Poly p = minor;
    Poly t1 = Poly::var(Sym::t1);
    for (int step = 0; step < order; ++step) {
        if (p.is_zero()) return p;
        std::vector<Poly> cs = p.coeffs_in(Sym::t2);
        int m = static_cast<int>(cs.size()) - 1;
        if (m < 1)
            throw std::domain_error("remove_diagonal_factor: not divisible by t2 - t1");
        std::vector<Poly> q(static_cast<size_t>(m));
        q[static_cast<size_t>(m - 1)] = cs[static_cast<size_t>(m)];
        for (int j = m - 1; j >= 1; --j)
            q[static_cast<size_t>(j - 1)] = cs[static_cast<size_t>(j)] + t1 * q[static_cast<size_t>(j)];
        Poly remainder = cs[0] + t1 * q[0];
        if (!remainder.is_zero())
            throw std::domain_error("remove_diagonal_factor: nonzero remainder");
        p = Poly::from_coeffs(q, Sym::t2);
    }
    return p;
}

std::array<Poly, 5> reduced_minors(const CurveParam& curve) {
    std::array<Poly, 5> minors = rank_drop_minors(curve);
    for (Poly& m : minors) m = remove_diagonal_factor(m, 4);
    return minors;
}

Poly sylvester_resultant(const Poly& a, const Poly& b, Sym eliminate, Sym keep) {
    int da = a.degree_in(eliminate), db = b.degree_in(eliminate);
    if (a.is_zero() || b.is_zero() || da < 1 || db < 1)
        throw std::invalid_argument(
            "sylvester_resultant: inputs must be nonzero with positive degree in the "
            "eliminated symbol");
    std::vector<Poly> ca = a.coeffs_in(eliminate), cb = b.coeffs_in(eliminate);
    int m = da + db;
    if (m <= 8) return det_berkowitz<Poly>(sylvester_matrix(ca, cb));

    // Larger systems: evaluate the same determinant at integer nodes and
    // reconstruct exactly. Evaluation commutes with the determinant, so the
    // fixed-size Sylvester matrix needs no leading-coefficient care.
    int dka = a.degree_in(keep), dkb = b.degree_in(keep);
    int bound = dka * db + dkb * da;
    std::vector<std::vector<Rational>> ca_dense, cb_dense;
    for (const Poly& c : ca) ca_dense.push_back(dense_coeffs(c, keep));
    for (const Poly& c : cb) cb_dense.push_back(dense_coeffs(c, keep));

    std::vector<Rational> nodes, values;
    nodes.reserve(static_cast<size_t>(bound) + 1);
    values.reserve(static_cast<size_t>(bound) + 1);
    for (int i = 0; i <= bound; ++i) {
        Rational u(i - bound / 2);
        std::vector<Rational> va(ca.size()), vb(cb.size());
        for (size_t j = 0; j < ca.size(); ++j) va[j] = horner(ca_dense[j], u);
        for (size_t j = 0; j < cb.size(); ++j) vb[j] = horner(cb_dense[j], u);
        bool integral = true;
        for (const Rational& v : va) integral = integral && v.is_integer();
        for (const Rational& v : vb) integral = integral && v.is_integer();
        Rational det;
        if (integral) {
            SquareMatrix<mpz_class> s(m, m);
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < m; ++c) s(r, c) = mpz_class(0);
            for (int r = 0; r < db; ++r)
                for (int j = 0; j <= da; ++j) s(r, r + j) = va[static_cast<size_t>(da - j)].numerator();
            for (int r = 0; r < da; ++r)
                for (int j = 0; j <= db; ++j) s(db + r, r + j) = vb[static_cast<size_t>(db - j)].numerator();
            det = Rational(det_berkowitz<mpz_class>(s));
        } else {
            RationalMatrix s(m, m);
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < m; ++c) s(r, c) = Rational(0);
            for (int r = 0; r < db; ++r)
                for (int j = 0; j <= da; ++j) s(r, r + j) = va[static_cast<size_t>(da - j)];
            for (int r = 0; r < da; ++r)
                for (int j = 0; j <= db; ++j) s(db + r, r + j) = vb[static_cast<size_t>(db - j)];
            det = det_berkowitz<Rational>(s);
        }
        nodes.push_back(u);
        values.push_back(det);
    }
    return interpolate(nodes, std::move(values), keep);
}

std::vector<cd> complex_roots(const std::vector<Rational>& ascending) {
    // Strip exact leading zeros.
    size_t hi = ascending.size();
    while (hi > 0 && ascending[hi - 1].is_zero()) --hi;
    if (hi <= 1) return {};
    // Exact zero roots at the origin.
    size_t lo = 0;
    while (lo < hi && ascending[lo].is_zero()) ++lo;
    std::vector<cd> roots(lo, cd(0, 0));
    size_t deg = hi - 1 - lo;
    if (deg == 0) return roots;

    Rational mx(0);
    for (size_t k = lo; k < hi; ++k) {
        Rational a = ascending[k].abs();
        if (a > mx) mx = a;
    }
    std::vector<long double> c(deg + 1);
    for (size_t k = lo; k < hi; ++k)
        c[k - lo] = static_cast<long double>((ascending[k] / mx).to_double());

    // Substitute z = sigma * u so the leading coefficient is comparable to
    // the largest one; keeps the monic companion matrix entries bounded.
    long double sigma = 1.0L;
    {
        size_t imax = 0;
        long double amax = 0;
        for (size_t k = 0; k <= deg; ++k)
            if (std::abs(c[k]) > amax) {
                amax = std::abs(c[k]);
                imax = k;
            }
        if (imax < deg && std::abs(c[deg]) > 0) {
            long double ratio = amax / std::abs(c[deg]);
            sigma = std::pow(ratio, 1.0L / static_cast<long double>(deg - imax));
            sigma = std::clamp(sigma, 1.0L, 1.0e6L);
        }
    }
    std::vector<long double> cs(deg + 1);
    long double scale_pow = 1.0L;
    for (size_t k = 0; k <= deg; ++k) {
        cs[k] = c[k] * scale_pow;
        scale_pow *= sigma;
    }
    long double mx2 = 0;
    for (long double v : cs) mx2 = std::max(mx2, std::abs(v));
    for (long double& v : cs) v /= mx2;

    Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic> comp(deg, deg);
    comp.setZero();
    for (size_t r = 0; r + 1 < deg; ++r) comp(static_cast<Eigen::Index>(r + 1), static_cast<Eigen::Index>(r)) = 1.0L;
    for (size_t r = 0; r < deg; ++r)
        comp(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(deg - 1)) = -cs[r] / cs[deg];
    balance_matrix(comp);
    Eigen::EigenSolver<Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>> solver(comp, false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("complex_roots: eigenvalue iteration failed");

    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        cld u(solver.eigenvalues()(i).real(), solver.eigenvalues()(i).imag());
        // Newton refinement against the exact (normalized) coefficients.
        cld z = u;
        for (int it = 0; it < 8; ++it) {
            cld val = horner_cld(cs, z);
            cld der = horner_deriv_cld(cs, z);
            if (std::abs(der) < 1e-300L) break;
            cld step = val / der;
            z -= step;
            if (std::abs(step) < 1e-17L * (1.0L + std::abs(z))) break;
        }
        if (std::abs(horner_cld(cs, z)) > std::abs(horner_cld(cs, u))) z = u;
        cld back = z * sigma;
        roots.emplace_back(static_cast<double>(back.real()), static_cast<double>(back.imag()));
    }
    return roots;
}

bool osculating_full_rank(const CurveParam& curve, int sample_radius) {
    for (int t = -sample_radius; t <= sample_radius; ++t) {
        RationalMatrix m(4, 5);
        for (int i = 0; i < 5; ++i) {
            // f, f', f'', f''' at the integer parameter t.
            std::vector<Rational> cs(static_cast<size_t>(curve.d) + 1);
            for (int k = 0; k <= curve.d; ++k) cs[static_cast<size_t>(k)] = Rational(curve.coeffs(i, k));
            for (int row = 0; row < 4; ++row) {
                m(row, i) = horner(cs, Rational(t));
                // Differentiate in place for the next row.
                for (size_t k = 1; k < cs.size(); ++k) cs[k - 1] = Rational(static_cast<long>(k)) * cs[k];
                if (!cs.empty()) cs.pop_back();
            }
        }
        if (rank_exact(m) < 4) return false;
    }
    return true;
}

namespace {

// Dense complex coefficient grid for fast numeric evaluation of a bivariate
// polynomial and its first partials.
struct BiGrid {
    int d1 = 0, d2 = 0;
    std::vector<double> c; // (d1+1) x (d2+1), row-major in t1

    static BiGrid from_poly(const Poly& p) {
        BiGrid g;
        g.d1 = p.degree_in(Sym::t1);
        g.d2 = p.degree_in(Sym::t2);
        g.c.assign(static_cast<size_t>(g.d1 + 1) * static_cast<size_t>(g.d2 + 1), 0.0);
        Rational mx(0);
        for (const auto& [e, coeff] : p.terms()) {
            Rational a = coeff.abs();
            if (a > mx) mx = a;
        }
        if (mx.is_zero()) return g;
        for (const auto& [e, coeff] : p.terms()) {
            int i = e[static_cast<int>(Sym::t1)];
            int j = e[static_cast<int>(Sym::t2)];
            g.c[static_cast<size_t>(i) * static_cast<size_t>(g.d2 + 1) + static_cast<size_t>(j)] =
                (coeff / mx).to_double();
        }
        return g;
    }

    // Sum of |c_ij| |z1|^i |z2|^j: the monomial mass at the point, the natural
    // scale against which a genuinely vanishing value must cancel.
    double abs_mass(cd z1, cd z2) const {
        double a1 = std::abs(z1), a2 = std::abs(z2);
        double acc = 0;
        for (int i = d1; i >= 0; --i) {
            double inner = 0;
            const double* row = &c[static_cast<size_t>(i) * static_cast<size_t>(d2 + 1)];
            for (int j = d2; j >= 0; --j) inner = inner * a2 + std::abs(row[j]);
            acc = acc * a1 + inner;
        }
        return acc;
    }

    cd value(cd z1, cd z2) const {
        cd acc(0, 0);
        for (int i = d1; i >= 0; --i) {
            cd inner(0, 0);
            const double* row = &c[static_cast<size_t>(i) * static_cast<size_t>(d2 + 1)];
            for (int j = d2; j >= 0; --j) inner = inner * z2 + row[j];
            acc = acc * z1 + inner;
        }
        return acc;
    }

    cd d_t1(cd z1, cd z2) const {
        cd acc(0, 0);
        for (int i = d1; i >= 1; --i) {
            cd inner(0, 0);
            const double* row = &c[static_cast<size_t>(i) * static_cast<size_t>(d2 + 1)];
            for (int j = d2; j >= 0; --j) inner = inner * z2 + row[j];
            acc = acc * z1 + static_cast<double>(i) * inner;
        }
        return acc;
    }

    cd d_t2(cd z1, cd z2) const {
        cd acc(0, 0);
        for (int i = d1; i >= 0; --i) {
            cd inner(0, 0);
            const double* row = &c[static_cast<size_t>(i) * static_cast<size_t>(d2 + 1)];
            for (int j = d2; j >= 1; --j) inner = inner * z2 + static_cast<double>(j) * row[j];
            acc = acc * z1 + inner;
        }
        return acc;
    }
};

// Numeric curve evaluation: position and velocity rows at a complex value.
struct NumericCurve {
    std::array<std::vector<double>, 5> f;

    static NumericCurve from(const CurveParam& curve) {
        NumericCurve nc;
        for (int i = 0; i < 5; ++i) {
            nc.f[static_cast<size_t>(i)].resize(static_cast<size_t>(curve.d) + 1);
            for (int k = 0; k <= curve.d; ++k)
                nc.f[static_cast<size_t>(i)][static_cast<size_t>(k)] = static_cast<double>(curve.coeffs(i, k));
        }
        return nc;
    }

    cd eval(int i, cd z) const {
        const auto& cs = f[static_cast<size_t>(i)];
        cd acc(0, 0);
        for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    cd eval_deriv(int i, cd z) const {
        const auto& cs = f[static_cast<size_t>(i)];
        cd acc(0, 0);
        for (size_t k = cs.size(); k-- > 1;) acc = acc * z + static_cast<double>(k) * cs[k];
        return acc;
    }
};

// Max over the five 4x4 minors of |det| scaled by the product of the
// subrow norms (Hadamard normalization).
double contact_residual(const NumericCurve& nc, cd z1, cd z2) {
    Eigen::Matrix<cd, 4, 5> m;
    for (int i = 0; i < 5; ++i) {
        m(0, i) = nc.eval(i, z1);
        m(1, i) = nc.eval_deriv(i, z1);
        m(2, i) = nc.eval(i, z2);
        m(3, i) = nc.eval_deriv(i, z2);
    }
    double worst = 0.0;
    for (int k = 0; k < 5; ++k) {
        Eigen::Matrix<cd, 4, 4> sub;
        int cc = 0;
        for (int c = 0; c < 5; ++c) {
            if (c == k) continue;
            for (int r = 0; r < 4; ++r) sub(r, cc) = m(r, c);
            ++cc;
        }
        double scale = 1.0;
        for (int r = 0; r < 4; ++r) scale *= sub.row(r).norm();
        double res = std::abs(sub.determinant()) / std::max(scale, 1e-300);
        worst = std::max(worst, res);
    }
    return worst;
}

std::vector<cd> roots_univariate_cd(std::vector<cd> coeffs) {
    double mx = 0;
    for (const cd& v : coeffs) mx = std::max(mx, std::abs(v));
    if (mx == 0) return {};
    size_t hi = coeffs.size();
    while (hi > 1 && std::abs(coeffs[hi - 1]) < 1e-12 * mx) --hi;
    coeffs.resize(hi);
    if (coeffs.size() <= 1) return {};
    size_t deg = coeffs.size() - 1;
    Eigen::MatrixXcd comp(deg, deg);
    comp.setZero();
    for (size_t r = 0; r + 1 < deg; ++r) comp(static_cast<Eigen::Index>(r + 1), static_cast<Eigen::Index>(r)) = 1.0;
    for (size_t r = 0; r < deg; ++r)
        comp(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(deg - 1)) = -coeffs[r] / coeffs[deg];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
    std::vector<cd> roots;
    if (solver.info() != Eigen::Success) return roots;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) roots.push_back(solver.eigenvalues()(i));
    return roots;
}

std::vector<cd> back_solve_t2(const BiGrid& grid, cd r) {
    std::vector<cd> coeffs(static_cast<size_t>(grid.d2) + 1, cd(0, 0));
    // Coefficients of t2^j after substituting t1 = r.
    for (int j = 0; j <= grid.d2; ++j) {
        cd acc(0, 0);
        for (int i = grid.d1; i >= 0; --i)
            acc = acc * r + grid.c[static_cast<size_t>(i) * static_cast<size_t>(grid.d2 + 1) + static_cast<size_t>(j)];
        coeffs[static_cast<size_t>(j)] = acc;
    }
    return roots_univariate_cd(std::move(coeffs));
}

bool newton_polish(const BiGrid& a, const BiGrid& b, cd& z1, cd& z2) {
    for (int it = 0; it < 24; ++it) {
        cd fa = a.value(z1, z2), fb = b.value(z1, z2);
        cd j11 = a.d_t1(z1, z2), j12 = a.d_t2(z1, z2);
        cd j21 = b.d_t1(z1, z2), j22 = b.d_t2(z1, z2);
        cd det = j11 * j22 - j12 * j21;
        if (std::abs(det) < 1e-280) return it > 0;
        cd s1 = (fa * j22 - fb * j12) / det;
        cd s2 = (fb * j11 - fa * j21) / det;
        z1 -= s1;
        z2 -= s2;
        if (!std::isfinite(z1.real()) || !std::isfinite(z1.imag()) ||
            !std::isfinite(z2.real()) || !std::isfinite(z2.imag()))
            return false;
        if (std::abs(z1) > 1e12 || std::abs(z2) > 1e12) return false;
        if (std::abs(s1) + std::abs(s2) < 1e-14 * (1.0 + std::abs(z1) + std::abs(z2))) return true;
    }
    return true;
}

} // namespace

OracleRun count_terracini_pairs(const CurveParam& curve, const OracleOptions& opts) {
    OracleRun run;
    run.d = curve.d;
    run.seed = curve.seed;
    run.range = curve.range;
    run.expected = expected_pairs(curve.d);

    std::array<Poly, 5> reduced = reduced_minors(curve);

    Poly combo_a, combo_b, resultant;
    bool have = false;
    for (int attempt = 0; attempt < opts.max_combo_retries && !have; ++attempt) {
        std::uint64_t state = curve.seed ^ (0xD1B54A32D192ED03ULL + 0x632BE59BD9B4E019ULL * static_cast<std::uint64_t>(attempt + 1));
        Poly a, b;
        bool a_zero = true, b_zero = true;
        for (int k = 0; k < 5; ++k) {
            long wa = draw_in_range(state, 9), wb = draw_in_range(state, 9);
            if (wa != 0) a_zero = false;
            if (wb != 0) b_zero = false;
            a += Poly(Rational(wa)) * reduced[static_cast<size_t>(k)];
            b += Poly(Rational(wb)) * reduced[static_cast<size_t>(k)];
        }
        run.combo_retries = attempt;
        if (a_zero || b_zero || a.is_zero() || b.is_zero()) continue;
        int da2 = a.degree_in(Sym::t2), db2 = b.degree_in(Sym::t2);
        Poly r;
        if (da2 >= 1 && db2 >= 1) {
            r = sylvester_resultant(a, b, Sym::t2, Sym::t1);
        } else if (da2 == 0 && db2 == 0) {
            continue; // no elimination possible; draw again
        } else {
            // One combination is already free of t2: it is the eliminant.
            r = da2 == 0 ? a : b;
        }
        if (r.is_zero()) continue;
        combo_a = a;
        combo_b = b;
        resultant = r;
        have = true;
    }
    if (!have)
        throw std::runtime_error(
            "count_terracini_pairs: resultant vanished identically for all retries");

    run.resultant_degree = resultant.degree_in(Sym::t1);

    std::vector<cd> t1_roots = complex_roots(dense_coeffs(resultant, Sym::t1));

    BiGrid grid_a = BiGrid::from_poly(combo_a);
    BiGrid grid_b = BiGrid::from_poly(combo_b);
    std::array<BiGrid, 5> minor_grids;
    for (int k = 0; k < 5; ++k)
        minor_grids[static_cast<size_t>(k)] = BiGrid::from_poly(reduced[static_cast<size_t>(k)]);
    NumericCurve nc = NumericCurve::from(curve);

    // A candidate must cancel every reduced minor relative to its monomial
    // mass; the contact-matrix residual alone cannot separate spurious
    // combination intersections near the diagonal or near parameter infinity,
    // where the removed (t2 - t1)^4 factor or the row scaling masks them.
    auto reduced_residual = [&minor_grids](cd z1, cd z2) {
        double worst = 0;
        for (const BiGrid& g : minor_grids) {
            double mass = g.abs_mass(z1, z2);
            double val = std::abs(g.value(z1, z2));
            worst = std::max(worst, val / std::max(mass, 1e-300));
        }
        return worst;
    };

    for (cd r : t1_roots) {
        std::vector<cd> candidates = back_solve_t2(grid_a, r);
        if (candidates.empty()) candidates = back_solve_t2(grid_b, r);
        for (cd s : candidates) {
            cd z1 = r, z2 = s;
            if (!newton_polish(grid_a, grid_b, z1, z2)) continue;
            if (std::abs(z1 - z2) <= opts.sep_tol) continue;
            if (!(reduced_residual(z1, z2) <= opts.tol)) continue;
            double residual = contact_residual(nc, z1, z2);
            if (!(residual <= opts.tol)) continue;
            run.raw_solutions.push_back(PairSolution{z1, z2, residual});
        }
    }

    // Cluster into distinct unordered pairs (tolerance-aware, so conjugate
    // coordinates that differ only in the last bits cannot split a pair).
    auto close = [&opts](cd a, cd b) {
        return std::abs(a - b) <= opts.sep_tol * std::max(1.0, std::abs(b));
    };
    for (const PairSolution& p : run.raw_solutions) {
        bool merged = false;
        for (PairSolution& q : run.solutions) {
            bool direct = close(p.t1, q.t1) && close(p.t2, q.t2);
            bool swapped = close(p.t1, q.t2) && close(p.t2, q.t1);
            if (direct || swapped) {
                q.residual = std::min(q.residual, p.residual);
                merged = true;
                break;
            }
        }
        if (!merged) {
            PairSolution canon = p;
            double r1 = canon.t1.real(), r2 = canon.t2.real();
            bool swap_order = (std::abs(r1 - r2) <= opts.sep_tol * std::max(1.0, std::abs(r2)))
                                  ? canon.t2.imag() < canon.t1.imag()
                                  : r2 < r1;
            if (swap_order) std::swap(canon.t1, canon.t2);
            run.solutions.push_back(canon);
        }
    }
    run.count = static_cast<long>(run.solutions.size());
    return run;
}

} // namespace terracini
