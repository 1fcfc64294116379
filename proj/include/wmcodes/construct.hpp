#ifndef WMCODES_CONSTRUCT_HPP
#define WMCODES_CONSTRUCT_HPP

#include <optional>

#include "wmcodes/matrix.hpp"

namespace wmc {

/// A validated weighing matrix W(n,m): entries in {0,+-1}, WW^T = mI over Z,
/// m nonzero entries per row and column.  The flags are computed once at
/// validation time.
struct WeighingMatrix {
    IntMatrix w;
    unsigned n = 0;
    unsigned m = 0;
    bool is_skew = false;               // W^T = -W
    bool is_hadamard = false;           // m = n
    bool is_skew_type_hadamard = false; // Hadamard with H + H^T = 2I
    bool is_conference = false;         // m = n-1, zero diagonal
};

/// A validated (r,lambda)-design incidence matrix: v x b, 0/1 entries, every
/// row sum r, BB^T = (r-lambda)I + lambda*J.
struct DesignIncidence {
    IntMatrix b;
    unsigned v = 0;
    unsigned blocks = 0;
    unsigned r = 0;
    unsigned lambda = 0;
};

/// An F_q-weighing matrix W(n,m;F_q), q in {2,3,4}: m nonzero entries per
/// row and column, WW* = (m mod p) I over GF(q).
struct FqWeighingMatrix {
    GfMatrix w;
    unsigned n = 0;
    unsigned m = 0;
};

/// chi(x): 0 at 0, +1 on nonzero squares of GF(pi), -1 otherwise.
/// pi must be odd.
int quadratic_character(const Field& f, Fel x);

/// The quadratic-character core A = [chi(y - x)], rows/columns indexed by
/// the canonical element order of GF(pi).
IntMatrix paley_core(const Field& f);

/// Paley type I Hadamard matrix of order pi+1 for a prime power
/// pi = 3 (mod 4): [[1, -j^T], [j, -A+I]].  Skew-type, all-ones diagonal.
WeighingMatrix paley_type_I(unsigned pi);

/// Symmetric conference matrix W(pi+1, pi) for a prime power pi = 1 (mod 4):
/// core A bordered by a zero corner and all-ones first row/column.
WeighingMatrix paley_conference(unsigned pi);

WeighingMatrix validate_weighing(const IntMatrix& w,
                                 std::optional<unsigned> expect_m = std::nullopt);

DesignIncidence validate_design(const IntMatrix& b, unsigned r, unsigned lambda);

/// First t rows of a design; the Gram identity with I_t, J_t is hereditary
/// but is re-verified anyway.
DesignIncidence row_subset_design(const DesignIncidence& d, unsigned t);

FqWeighingMatrix validate_fq_weighing(const GfMatrix& w,
                                      std::optional<unsigned> expect_m = std::nullopt);

}  // namespace wmc

#endif
