#ifndef WMCODES_CODE_HPP
#define WMCODES_CODE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "wmcodes/matrix.hpp"

namespace wmc {

enum class DistStatus { EXACT, LOWER_BOUND };

struct DistancePolicy {
    /// Work cap, counted in codeword evaluations.  Full enumeration is used
    /// when q^k fits; otherwise information-set enumeration runs within the
    /// same budget.
    std::uint64_t enum_cap = std::uint64_t(1) << 26;
    /// Cap on the information-set message weight (0 = no cap).
    unsigned max_weight = 0;
    /// Stop early once the certified lower bound reaches this value
    /// (0 = run to an exact answer or to the cap).
    unsigned target = 0;
};

struct DistanceResult {
    unsigned best_found = 0;    // least nonzero codeword weight seen (upper bound on d)
    unsigned certified_lb = 1;  // proven lower bound on d
    DistStatus status = DistStatus::LOWER_BOUND;
    bool exact() const { return status == DistStatus::EXACT; }
};

/// A linear code over GF(q), held as a rank-normalized generator basis
/// (reduced row echelon form, which is canonical for the row space).
/// Instances are immutable; lazily computed results (dual basis, hull,
/// weight distribution) are cached behind a lock, so codes can be shared
/// freely across threads.
class LinearCode {
  public:
    /// Rank-normalizes g.  Throws validation_error on an all-zero matrix.
    static LinearCode from_generator(const GfMatrix& g);

    const Field& field() const { return basis_.field(); }
    unsigned n() const { return static_cast<unsigned>(basis_.cols()); }
    unsigned k() const { return static_cast<unsigned>(basis_.rows()); }

    /// RREF basis, k x n.
    const GfMatrix& basis() const { return basis_; }
    /// The generator matrix as originally given (before normalization).
    const GfMatrix& raw_generator() const { return raw_; }

    LinearCode dual() const;

    /// Dual under the inverse dot product <u,v> = u . v*; q in {2,3,4}.
    /// Coincides with dual() for q in {2,3}.
    LinearCode hermitian_dual() const;

    /// k - rank(G G^T), or k - rank(G G*) in the Hermitian case.
    unsigned hull_dimension(bool hermitian = false) const;
    bool is_lcd(bool hermitian = false) const { return hull_dimension(hermitian) == 0; }
    bool is_self_orthogonal() const;
    bool is_self_dual() const;

    bool contains(const std::vector<Fel>& v) const;
    bool same_code(const LinearCode& o) const;

    DistanceResult min_distance(const DistancePolicy& policy = {}) const;

    /// Exact counts [w_0..w_n]; throws cap_exceeded_error when q^k > cap.
    std::vector<std::uint64_t> weight_distribution(
        std::uint64_t cap = std::uint64_t(1) << 26) const;

    /// q^k clamped to 2^63-1 (enough to compare against any cap).
    std::uint64_t codeword_count() const;

  private:
    explicit LinearCode(GfMatrix raw);

    GfMatrix raw_;
    GfMatrix basis_;
    struct Cache;
    std::shared_ptr<Cache> cache_;
};

/// Basis of the intersection of two row spaces over the same field.
GfMatrix intersection_basis(const GfMatrix& a, const GfMatrix& b);
unsigned intersection_dimension(const LinearCode& a, const LinearCode& b);

/// Weight distribution of the dual code via the MacWilliams identity,
/// computed exactly.  `wdist` must be a full distribution (sums to q^k).
std::vector<mpz_class> macwilliams_transform(const std::vector<std::uint64_t>& wdist,
                                             unsigned q);

/// The structural formal-self-duality criterion: the raw generator has
/// shape [M | I_k] with n = 2k and [M | aI_k] spans the dual for some
/// nonzero scalar a.
bool formally_self_dual_structural(const LinearCode& c);

/// Weight-distribution equality of C and its dual, by full enumeration of
/// both.  Throws cap_exceeded_error if either side exceeds the cap.
bool formally_self_dual_exact(const LinearCode& c,
                              std::uint64_t cap = std::uint64_t(1) << 26);

enum class FsdStatus { EXACT, STRUCTURAL, UNKNOWN };

struct CodeReport {
    unsigned n = 0, k = 0, q = 0;
    DistanceResult d;
    bool has_distance = false;
    unsigned hull = 0;
    bool hermitian = false;
    bool lcd = false, self_dual = false, self_orthogonal = false;
    bool fsd = false;
    FsdStatus fsd_status = FsdStatus::UNKNOWN;
    std::optional<std::vector<std::uint64_t>> wdist;

    /// `n k d[status] q hull lcd self_dual fsd[status]` (+ optional wdist line).
    std::string to_text() const;
};

struct ReportOptions {
    bool distance = true;
    bool wdist = false;
    bool hermitian = false;
    DistancePolicy policy;
};

CodeReport analyze(const LinearCode& c, const ReportOptions& opt = {});

}  // namespace wmc

#endif
