#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <string>

namespace stackyq {

// Exact scalars. All integer arithmetic is arbitrary precision; rationals are
// kept in canonical form (positive denominator, reduced) by GMP.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;
using Index = Eigen::Index;

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

inline Int numerator(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int denominator(const Rat& x) { return boost::multiprecision::denominator(x); }

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

/** Largest integer <= x. */
inline Int floor_rat(const Rat& x)
{
    Int n = numerator(x), d = denominator(x);
    Int q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

/** Smallest integer >= x. */
inline Int ceil_rat(const Rat& x)
{
    Int n = numerator(x), d = denominator(x);
    Int q = n / d;
    if (n % d != 0 && n > 0) ++q;
    return q;
}

/** Representative of a modulo m in [0, m), m > 0. */
inline Int mod_floor(const Int& a, const Int& m)
{
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

inline RatMatrix to_rational(const IntMatrix& a) { return a.cast<Rat>(); }
inline RatVector to_rational(const IntVector& a) { return a.cast<Rat>(); }

template <typename Derived, typename Other>
bool same_matrix(const Eigen::MatrixBase<Derived>& a, const Eigen::MatrixBase<Other>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

/** "p" for integers, "p/q" otherwise. */
inline std::string rat_str(const Rat& x) { return x.str(); }

} // namespace stackyq
