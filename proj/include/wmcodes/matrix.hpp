#ifndef WMCODES_MATRIX_HPP
#define WMCODES_MATRIX_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "wmcodes/gf.hpp"

namespace wmc {

/// Dense exact matrix over GF(q).  Immutable value semantics: operations
/// return fresh matrices, so instances are safe to share between threads.
class GfMatrix {
  public:
    GfMatrix(const Field& f, std::size_t rows, std::size_t cols)
        : f_(&f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static GfMatrix identity(const Field& f, std::size_t n);
    static GfMatrix ones(const Field& f, std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return *f_; }

    Fel operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    Fel& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const std::vector<Fel>& data() const { return a_; }

    std::vector<Fel> row(std::size_t i) const;

    bool operator==(const GfMatrix& o) const;
    bool is_zero() const;

    GfMatrix operator*(const GfMatrix& o) const;
    GfMatrix operator+(const GfMatrix& o) const;
    GfMatrix operator-(const GfMatrix& o) const;
    GfMatrix scaled(Fel c) const;
    GfMatrix transpose() const;

    /// Entry-wise dagger (no transpose).
    GfMatrix conjugate() const;

    /// M* = [dagger(m_ji)]; equals the transpose for {0,+-1}-valued entries.
    GfMatrix conj_transpose() const { return conjugate().transpose(); }

    Fel det() const;
    std::size_t rank() const;
    GfMatrix inverse() const;  // throws singular_matrix_error

    /// Reduced row echelon form.  Optionally reports rank and pivot columns.
    GfMatrix rref(std::size_t* rank_out = nullptr,
                  std::vector<std::size_t>* pivots_out = nullptr) const;

    /// Basis of the right null space {x : Mx = 0}, one vector per row
    /// ((cols - rank) x cols; zero rows if the kernel is trivial).
    GfMatrix kernel_basis() const;

    std::vector<Fel> mul_vector(const std::vector<Fel>& x) const;      // M x
    std::vector<Fel> vector_mul(const std::vector<Fel>& x) const;      // x M

    struct LinSolveResult {
        bool consistent = false;
        std::vector<Fel> x;      // one solution of M x = b when consistent
        std::size_t free_vars = 0;
    };
    LinSolveResult solve(const std::vector<Fel>& b) const;

  private:
    const Field* f_;
    std::size_t rows_, cols_;
    std::vector<Fel> a_;
};

GfMatrix hcat(const GfMatrix& a, const GfMatrix& b);
GfMatrix vcat(const GfMatrix& a, const GfMatrix& b);

/// det(aJ_n + xI_n) = (x + n*a) * x^(n-1), evaluated without elimination.
Fel det_rank_one_shift(const Field& f, Fel a, Fel x, std::size_t n);
mpz_class det_rank_one_shift_int(long long a, long long x, std::size_t n);

/// Dense exact integer matrix.  Inputs at this layer are small (weighing and
/// incidence matrices, orbit sums); determinants are exact via gmp.
class IntMatrix {
  public:
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix ones(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    long long operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    long long& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const;

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix scaled(long long c) const;
    IntMatrix transpose() const;

    mpz_class det() const;     // Bareiss fraction-free elimination
    std::size_t rank() const;  // exact elimination over the rationals

    /// Entries embedded in GF(q) through z -> z mod p.
    GfMatrix reduce(const Field& f) const;

  private:
    std::size_t rows_, cols_;
    std::vector<long long> a_;
};

/// Small exact rational matrix; carries the (M^{-1})^T computations behind
/// the orbit-matrix identities.
class QMatrix {
  public:
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
    explicit QMatrix(const IntMatrix& m);

    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const mpq_class& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    mpq_class& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

    bool operator==(const QMatrix& o) const;
    QMatrix operator*(const QMatrix& o) const;
    QMatrix transpose() const;
    QMatrix inverse() const;  // throws singular_matrix_error
    std::size_t rank() const;

  private:
    std::size_t rows_, cols_;
    std::vector<mpq_class> a_;
};

/// Matrix text format, shared by every tool:
///   line 1: `rows cols domain` with domain `Z` or `Fq` (e.g. `F4`);
///   then rows x cols whitespace-separated entry tokens; `#` starts a comment.
/// Z accepts general integers (orbit matrices); Fq accepts canonical
/// encodings 0..q-1 only.
using AnyMatrix = std::variant<IntMatrix, GfMatrix>;

AnyMatrix read_matrix(std::istream& in);
AnyMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const IntMatrix& m);
void write_matrix(std::ostream& out, const GfMatrix& m);
void write_matrix_file(const std::string& path, const AnyMatrix& m);

const IntMatrix& expect_int(const AnyMatrix& m, const std::string& what);
const GfMatrix& expect_gf(const AnyMatrix& m, const std::string& what);

}  // namespace wmc

#endif
