#ifndef WMCODES_ORBIT_HPP
#define WMCODES_ORBIT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "wmcodes/construct.hpp"
#include "wmcodes/matrix.hpp"

namespace wmc {

/// A permutation automorphism (P,Q) of a square matrix M, stored as 0-based
/// image lists: M[row[i]][col[j]] = M[i][j] for all i,j (i.e. PMQ^T = M).
struct PermAutGenerator {
    std::vector<unsigned> row, col;

    bool operator==(const PermAutGenerator&) const = default;
    bool operator<(const PermAutGenerator& o) const {
        return row != o.row ? row < o.row : col < o.col;
    }
};

PermAutGenerator identity_generator(unsigned n);
bool is_identity(const PermAutGenerator& g);

/// (P1,Q1)(P2,Q2) = (P1 P2, Q1 Q2); as image maps i -> b(a(i)).
PermAutGenerator compose(const PermAutGenerator& a, const PermAutGenerator& b);

/// All powers of g up to the identity, identity first.
std::vector<PermAutGenerator> cyclic_group(const PermAutGenerator& g);

/// Distinct cyclic subgroups <g> over all g in the given automorphism list
/// (the trivial group included), each returned as its full element list.
std::vector<std::vector<PermAutGenerator>> cyclic_subgroups(
    const std::vector<PermAutGenerator>& auts);

bool verify_generator(const IntMatrix& m, const PermAutGenerator& g);
bool verify_generator(const GfMatrix& m, const PermAutGenerator& g);

/// Orbit decomposition of rows and columns under the group generated by the
/// given automorphisms, plus the row/column orbit matrices R = [Gamma_ij]
/// and C = [gamma_ij].  Orbits are canonically ordered by least member.
struct OrbitStructure {
    std::vector<std::vector<unsigned>> row_orbits, col_orbits;
    std::vector<unsigned> row_sizes, col_sizes;  // Omega_i, omega_j
    IntMatrix R, C;

    OrbitStructure() : R(0, 0), C(0, 0) {}
    unsigned t() const { return static_cast<unsigned>(row_orbits.size()); }
    /// All row orbits one length, all column orbits one length.
    bool equal_lengths() const;
    /// Row and column orbits are the same index-set partition, pairwise.
    bool aligned() const;
};

/// Throws validation_error if a generator fails verify_generator, if the
/// row/column orbit counts differ, or if any submatrix M_ij has
/// non-constant row or column sums.
OrbitStructure orbit_structure(const IntMatrix& m, const std::vector<PermAutGenerator>& gens);

/// F_q-weighing variant: the same decomposition with the orbit sums carried
/// out over GF(q).
struct GfOrbitStructure {
    std::vector<std::vector<unsigned>> row_orbits, col_orbits;
    std::vector<unsigned> row_sizes, col_sizes;
    GfMatrix R, C;
    GfOrbitStructure(const Field& f) : R(f, 0, 0), C(f, 0, 0) {}
    unsigned t() const { return static_cast<unsigned>(row_orbits.size()); }
    bool equal_lengths() const;
};
GfOrbitStructure orbit_structure(const GfMatrix& m, const std::vector<PermAutGenerator>& gens);

/// sum_j Gamma_ij gamma_sj = delta_is, where Gamma comes from s.R and gamma
/// is the column orbit matrix of (M^{-1})^T, recomputed here in exact
/// rational arithmetic.  Throws singular_matrix_error when M is singular.
bool verify_delta_identity(const IntMatrix& m, const OrbitStructure& s);

/// sum_j (Omega_s/omega_j) Gamma_ij Gamma_sj = delta_is * m, in exact
/// rational arithmetic.
bool verify_weighted_orthogonality(const WeighingMatrix& w, const OrbitStructure& s);

/// For a skew weighing matrix and an aligned equal-length orbit structure:
/// R^T = -R.  Throws on a non-skew matrix or misaligned orbits.
bool skew_orbit_check(const WeighingMatrix& w, const OrbitStructure& s);

/// Brute-force PAut(W): enumerates all row permutations P and solves
/// Q^T = (1/m) W^T P^{-1} W, keeping pairs where Q is a permutation matrix.
/// Returns the full group, sorted; throws when n exceeds max_n.
std::vector<PermAutGenerator> paut_search(const WeighingMatrix& w, unsigned max_n = 10);

/// Group file: line 1 `n_gens n`, then per generator two lines of n
/// one-based images (row permutation, then column permutation).
std::vector<PermAutGenerator> read_group(std::istream& in);
std::vector<PermAutGenerator> read_group_file(const std::string& path);
void write_group(std::ostream& out, const std::vector<PermAutGenerator>& gens, unsigned n);
void write_group_file(const std::string& path, const std::vector<PermAutGenerator>& gens,
                      unsigned n);

}  // namespace wmc

#endif
