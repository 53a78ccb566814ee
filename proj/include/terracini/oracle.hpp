#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "terracini/determinant.hpp"
#include "terracini/polynomial.hpp"

namespace terracini {

// Brute-force verification of the n = 2, genus-0 count: a rational curve in
// P^4 is given by five integer polynomials f_0 ... f_4 in one parameter, and
// a pair {t1, t2} lies in the Terracini locus exactly when the rows
// f(t1), f'(t1), f(t2), f'(t2) of the contact matrix drop below rank 4,
// i.e. when the two tangent lines meet.

struct CurveParam {
    int d = 0;
    std::uint64_t seed = 0;
    int range = 0;
    // coeffs(i, k) = coefficient of t^k in f_i; rows are linearly independent.
    Eigen::Matrix<long, 5, Eigen::Dynamic> coeffs;
};

// Deterministic curve generation: coefficients uniform in [-range, range],
// regenerated (bounded retries) until the five rows are independent and the
// top-degree column is nonzero.
CurveParam random_curve(int d, std::uint64_t seed, int range);

// The 4 x 5 contact matrix with exact bivariate polynomial entries in t1, t2.
Eigen::Matrix<Poly, 4, 5> contact_matrix(const CurveParam& curve);

// Exact specialization at rational parameter values.
RationalMatrix contact_matrix_value(const CurveParam& curve, const Rational& t1,
                                    const Rational& t2);

// The five 4 x 4 minors of the contact matrix (column k deleted in minor k);
// their common vanishing off the diagonal is the Terracini condition.
std::array<Poly, 5> rank_drop_minors(const CurveParam& curve);

// Every contact minor vanishes identically to order 4 on the diagonal
// t1 = t2 (confluent rows); this divides out (t2 - t1)^order exactly and
// throws if the division leaves a remainder.
Poly remove_diagonal_factor(const Poly& minor, int order = 4);

// Reduced minors with the universal diagonal factor removed; their common
// zeros are the honest Terracini pairs (plus degenerate osculating points).
std::array<Poly, 5> reduced_minors(const CurveParam& curve);

// Exact Sylvester resultant eliminating `eliminate`; the result is a
// polynomial in `keep`. Small systems are expanded directly with the
// division-free determinant; larger ones are evaluated at integer nodes
// (division-free integer determinants) and reconstructed by exact
// interpolation. Both routes agree and are cross-checked in the tests.
Poly sylvester_resultant(const Poly& a, const Poly& b, Sym eliminate, Sym keep);

// Numeric roots of an exact univariate polynomial (ascending coefficients)
// via a balanced companion-matrix eigenvalue computation in extended
// precision, with Newton refinement.
std::vector<std::complex<double>> complex_roots(const std::vector<Rational>& ascending);

// Exact rank over the rationals (Gaussian elimination with exact pivots).
int rank_exact(const RationalMatrix& m);

// Diagnostic for the excluded diagonal: the osculating matrix
// [f, f', f'', f'''](t) must have full rank 4 at the sampled parameters,
// otherwise a degenerate point could hide in the discarded locus.
bool osculating_full_rank(const CurveParam& curve, int sample_radius = 8);

struct PairSolution {
    std::complex<double> t1, t2; // canonical order: lexicographic by (re, im)
    double residual = 0.0;       // max minor magnitude, scaled by row norms
};

struct OracleOptions {
    double tol = 1e-8;      // relative residual filter on all five minors
    double sep_tol = 1e-6;  // diagonal exclusion and pair deduplication
    int max_combo_retries = 8;
};

struct OracleRun {
    int d = 0;
    std::uint64_t seed = 0;
    int range = 0;
    long expected = 0; // 2(d-3)(d-4), the degree-genus count at g = 0
    long count = 0;    // distinct unordered complex pairs found
    std::vector<PairSolution> solutions;      // deduplicated
    std::vector<PairSolution> raw_solutions;  // pre-dedup, closed under swap
    int resultant_degree = 0;
    int combo_retries = 0;
};

long expected_pairs(int d);

// Counts distinct unordered complex parameter pairs where the tangent lines
// meet: random linear combinations of the reduced minors, elimination of t2
// by exact resultant, numeric root extraction, back-substitution, Newton
// polishing on the combination system, then the five-minor residual filter.
OracleRun count_terracini_pairs(const CurveParam& curve, const OracleOptions& opts = {});

} // namespace terracini
