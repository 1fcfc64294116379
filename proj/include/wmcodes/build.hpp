#ifndef WMCODES_BUILD_HPP
#define WMCODES_BUILD_HPP

#include <optional>
#include <string>
#include <vector>

#include "wmcodes/construct.hpp"
#include "wmcodes/matrix.hpp"

namespace wmc {

enum class BuildVariant { PLAIN, SKEW, SKEW_HADAMARD, ORBIT, ORBIT_SKEW, HERMITIAN };

enum class PredictedClass { LCD, SELF_DUAL, UNDETERMINED };

/// One factor of the determinant condition, with the integer value (when the
/// ingredients are integral) and its residue mod p for auditing.
struct ConditionFactor {
    std::string label;
    bool has_integer = false;
    long long integer_value = 0;
    Fel residue = 0;

    std::string to_text(unsigned p) const;
};

/// Output of a theorem-level build: the generator G = [M | B], the explicit
/// dual generator Gbar = [M | beta I] in the identity-design case, and the
/// condition verdict.
///
/// predicted LCD    <=> every condition factor is nonzero mod p.
/// predicted SELF_DUAL (identity case only) <=> the single factor vanishes.
/// A vanished factor with a proper design gives UNDETERMINED.
///
/// `dual_spans` records whether Gbar has full rank; it can fail only when
/// beta = 0 mod p with the left block singular over GF(q), in which case
/// Gbar spans a proper subcode of the dual.
struct BuildResult {
    GfMatrix G;
    std::optional<GfMatrix> Gbar;
    PredictedClass predicted = PredictedClass::UNDETERMINED;
    std::vector<ConditionFactor> trace;
    BuildVariant variant;
    bool identity_design = true;
    bool hermitian = false;
    unsigned block_rows = 0;  // rows of G (the order n, or orbit count t)
    bool dual_spans = false;

    std::string trace_text() const;
};

/// G = [W | B] (Theorem: factors r+(n-1)c+m and r-c+m; identity case m+1).
BuildResult build_plain(const WeighingMatrix& w, const std::optional<DesignIncidence>& b,
                        const Field& f);

/// G = [W + aI | B] for skew W (factors gain +a^2); dual scalar
/// beta = -(a^2 + m).
BuildResult build_skew(const WeighingMatrix& w, const std::optional<DesignIncidence>& b,
                       Fel alpha, const Field& f);

/// G = [H + aI | B] for a skew-type Hadamard H; identity-case factor
/// n + (a+1)^2, dual scalar beta = -((a+1)^2 + n - 1).
BuildResult build_skew_hadamard(const WeighingMatrix& h, const std::optional<DesignIncidence>& b,
                                Fel alpha, const Field& f);

/// G = [R | B] for a row orbit matrix with RR^T = mI over Z (equal orbit
/// lengths); identical condition shapes to the plain case with n = t.
BuildResult build_orbit(const IntMatrix& r, const std::optional<DesignIncidence>& b,
                        const Field& f);

/// G = [R + aI | B] for a skew orbit matrix.
BuildResult build_orbit_skew(const IntMatrix& r, const std::optional<DesignIncidence>& b,
                             Fel alpha, const Field& f);

/// Hermitian variant over q in {2,3,4}: G = [R | B] with RR* = c I over
/// GF(q); the LCD verdict is det(GG*) != 0.  `m_integer`, when known, goes
/// into the trace.
BuildResult build_hermitian(const GfMatrix& r, const std::optional<DesignIncidence>& b,
                            std::optional<unsigned> m_integer = std::nullopt);
BuildResult build_hermitian(const FqWeighingMatrix& w, const std::optional<DesignIncidence>& b);

}  // namespace wmc

#endif
