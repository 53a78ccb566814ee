#pragma once

#include <Eigen/Core>

#include "terracini/polynomial.hpp"
#include "terracini/sym_class.hpp"

// NumTraits so that Eigen dense matrices can carry the exact ring scalars.
// Arithmetic on these matrices is done by the free functions in
// determinant.hpp; Eigen is the container and indexing layer.

namespace Eigen {

template <>
struct NumTraits<terracini::Rational> {
    using Real = terracini::Rational;
    using NonInteger = terracini::Rational;
    using Literal = terracini::Rational;
    using Nested = terracini::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 16,
        MulCost = 16
    };
    static inline Real epsilon() { return terracini::Rational(0); }
    static inline Real dummy_precision() { return terracini::Rational(0); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<terracini::Poly> {
    using Real = terracini::Poly;
    using NonInteger = terracini::Poly;
    using Literal = terracini::Poly;
    using Nested = terracini::Poly;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 16,
        AddCost = 64,
        MulCost = 256
    };
    static inline Real epsilon() { return terracini::Poly(); }
    static inline Real dummy_precision() { return terracini::Poly(); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<terracini::SymClass> {
    using Real = terracini::SymClass;
    using NonInteger = terracini::SymClass;
    using Literal = terracini::SymClass;
    using Nested = terracini::SymClass;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 32,
        AddCost = 128,
        MulCost = 512
    };
    static inline Real epsilon() { return terracini::SymClass(); }
    static inline Real dummy_precision() { return terracini::SymClass(); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen

namespace terracini {

template <typename Scalar>
using SquareMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalMatrix = SquareMatrix<Rational>;
using PolyMatrix = SquareMatrix<Poly>;
using SymClassMatrix = SquareMatrix<SymClass>;

} // namespace terracini
