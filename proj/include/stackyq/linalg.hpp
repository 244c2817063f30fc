#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stackyq/types.hpp"

namespace stackyq {

/**
 * Smith decomposition U * A * V = D of an integer matrix A.
 *
 * U and V are unimodular (determinant +-1), D is diagonal with nonnegative
 * entries d_1, d_2, ... satisfying d_i | d_{i+1}. D is unique given A; the
 * transforms are not.
 */
struct SnfDecomposition {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
};

/**
 * A finitely generated abelian group Z^free_rank + Z/q_1 + ... + Z/q_k in
 * invariant-factor normal form: every q_i >= 2 and q_i | q_{i+1}.
 */
struct FgAbGroup {
    Index free_rank = 0;
    std::vector<Int> torsion;

    bool operator==(const FgAbGroup&) const = default;
    bool is_free() const { return torsion.empty(); }

    /** e.g. "Z^2 + Z/2 + Z/4", "Z", "0". */
    std::string str() const;
};

/**
 * A quotient Z^ambient_rank / image(relations) together with the projection
 * onto its normal form.
 *
 * Normal-form coordinates are ordered torsion first (one coordinate per
 * invariant factor, valued in [0, q_i)), then free coordinates. `projection`
 * has one row per normal-form coordinate; `project` applies it and reduces
 * the torsion rows modulo their factors.
 */
struct PresentedQuotient {
    Index ambient_rank = 0;
    IntMatrix relations;
    FgAbGroup normal_form;
    IntMatrix projection;

    IntVector project(const IntVector& x) const;
};

/** Integral solution set of A*x = b: one particular solution plus a basis of
 *  the integer kernel lattice (as columns). */
struct DiophantineSolution {
    IntVector particular;
    IntMatrix kernel;
};

/**
 * Smith normal form of an arbitrary integer matrix (any shape, including
 * empty). Pivots are chosen with minimal absolute value to limit coefficient
 * growth.
 */
SnfDecomposition smith_normal_form(const IntMatrix& a);

/**
 * Row-style Hermite normal form: the canonical basis of the row lattice of A.
 * Pivots are positive, entries above a pivot are reduced into [0, pivot), and
 * zero rows sink to the bottom. Two integer matrices have equal row lattices
 * iff their Hermite forms are equal.
 */
IntMatrix hermite_normal_form(IntMatrix a);

/**
 * Cokernel Z^rows(A) / im(A) presented in invariant-factor normal form.
 * The projection is derived from the left Smith transform; its free block is
 * canonicalised by Hermite reduction so the result is deterministic.
 */
PresentedQuotient cokernel(const IntMatrix& a);

/**
 * Basis of the integer kernel lattice {x | A*x = 0}, as columns. The basis is
 * saturated (the quotient of Z^cols by it is torsion-free on the image side)
 * and each column is sign-normalised so its first nonzero entry is positive.
 */
IntMatrix kernel_basis(const IntMatrix& a);

/**
 * Solve A*x = b over the integers. Returns std::nullopt when no integral
 * solution exists; absence of a solution is a legitimate outcome, not an
 * error.
 */
std::optional<DiophantineSolution> solve_diophantine(const IntMatrix& a, const IntVector& b);

/** Rank over Q by fraction-field Gaussian elimination. */
Index rank_rational(const RatMatrix& a);
Index rank_rational(const IntMatrix& a);

/** Exact determinant (Bareiss fraction-free elimination). */
Int determinant(const IntMatrix& a);

/** Unique solution of a square rational system, or std::nullopt if singular. */
std::optional<RatVector> solve_unique(RatMatrix a, RatVector b);

} // namespace stackyq
