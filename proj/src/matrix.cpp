#include "wmcodes/matrix.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "wmcodes/errors.hpp"

namespace wmc {

namespace {

void check_same_field(const GfMatrix& a, const GfMatrix& b) {
    if (a.field() != b.field())
        throw field_mismatch_error("matrices over different field contexts");
}

}  // namespace

GfMatrix GfMatrix::identity(const Field& f, std::size_t n) {
    GfMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

GfMatrix GfMatrix::ones(const Field& f, std::size_t rows, std::size_t cols) {
    GfMatrix m(f, rows, cols);
    for (auto& e : m.a_) e = 1;
    return m;
}

std::vector<Fel> GfMatrix::row(std::size_t i) const {
    return {a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_};
}

bool GfMatrix::operator==(const GfMatrix& o) const {
    return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool GfMatrix::is_zero() const {
    for (Fel e : a_)
        if (e) return false;
    return true;
}

GfMatrix GfMatrix::operator*(const GfMatrix& o) const {
    check_same_field(*this, o);
    if (cols_ != o.rows_) throw shape_error("matmul: inner dimensions disagree");
    GfMatrix r(*f_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            Fel aik = (*this)(i, k);
            if (!aik) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r(i, j) = f_->add(r(i, j), f_->mul(aik, o(k, j)));
        }
    return r;
}

GfMatrix GfMatrix::operator+(const GfMatrix& o) const {
    check_same_field(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw shape_error("matrix add: shape mismatch");
    GfMatrix r(*f_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->add(a_[i], o.a_[i]);
    return r;
}

GfMatrix GfMatrix::operator-(const GfMatrix& o) const {
    check_same_field(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw shape_error("matrix sub: shape mismatch");
    GfMatrix r(*f_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->sub(a_[i], o.a_[i]);
    return r;
}

GfMatrix GfMatrix::scaled(Fel c) const {
    GfMatrix r(*f_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->mul(a_[i], c);
    return r;
}

GfMatrix GfMatrix::transpose() const {
    GfMatrix r(*f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

GfMatrix GfMatrix::conjugate() const {
    GfMatrix r(*f_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->dagger(a_[i]);
    return r;
}

GfMatrix GfMatrix::rref(std::size_t* rank_out, std::vector<std::size_t>* pivots_out) const {
    GfMatrix m = *this;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t piv = rank;
        while (piv < rows_ && m(piv, col) == 0) ++piv;
        if (piv == rows_) continue;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(m(rank, j), m(piv, j));
        Fel s = f_->inv(m(rank, col));
        for (std::size_t j = 0; j < cols_; ++j) m(rank, j) = f_->mul(m(rank, j), s);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == rank || m(i, col) == 0) continue;
            Fel c = m(i, col);
            for (std::size_t j = 0; j < cols_; ++j)
                m(i, j) = f_->sub(m(i, j), f_->mul(c, m(rank, j)));
        }
        pivots.push_back(col);
        ++rank;
    }
    if (rank_out) *rank_out = rank;
    if (pivots_out) *pivots_out = pivots;
    return m;
}

std::size_t GfMatrix::rank() const {
    std::size_t r;
    rref(&r);
    return r;
}

Fel GfMatrix::det() const {
    if (rows_ != cols_) throw shape_error("det: matrix not square");
    GfMatrix m = *this;
    Fel d = 1;
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t piv = col;
        while (piv < rows_ && m(piv, col) == 0) ++piv;
        if (piv == rows_) return 0;
        if (piv != col) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m(col, j), m(piv, j));
            d = f_->neg(d);
        }
        d = f_->mul(d, m(col, col));
        Fel s = f_->inv(m(col, col));
        for (std::size_t i = col + 1; i < rows_; ++i) {
            if (m(i, col) == 0) continue;
            Fel c = f_->mul(m(i, col), s);
            for (std::size_t j = col; j < cols_; ++j)
                m(i, j) = f_->sub(m(i, j), f_->mul(c, m(col, j)));
        }
    }
    return d;
}

GfMatrix GfMatrix::inverse() const {
    if (rows_ != cols_) throw shape_error("inverse: matrix not square");
    std::size_t rank;
    GfMatrix aug = hcat(*this, identity(*f_, rows_));
    GfMatrix red = aug.rref(&rank);
    if (rank < rows_) throw singular_matrix_error("inverse of singular matrix");
    GfMatrix inv(*f_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) inv(i, j) = red(i, cols_ + j);
    return inv;
}

GfMatrix GfMatrix::kernel_basis() const {
    std::size_t rank;
    std::vector<std::size_t> pivots;
    GfMatrix red = rref(&rank, &pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    GfMatrix basis(*f_, cols_ - rank, cols_);
    std::size_t bi = 0;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        basis(bi, free) = 1;
        for (std::size_t pr = 0; pr < rank; ++pr)
            basis(bi, pivots[pr]) = f_->neg(red(pr, free));
        ++bi;
    }
    return basis;
}

std::vector<Fel> GfMatrix::mul_vector(const std::vector<Fel>& x) const {
    if (x.size() != cols_) throw shape_error("mul_vector: length mismatch");
    std::vector<Fel> y(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            y[i] = f_->add(y[i], f_->mul((*this)(i, j), x[j]));
    return y;
}

std::vector<Fel> GfMatrix::vector_mul(const std::vector<Fel>& x) const {
    if (x.size() != rows_) throw shape_error("vector_mul: length mismatch");
    std::vector<Fel> y(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (!x[i]) continue;
        for (std::size_t j = 0; j < cols_; ++j)
            y[j] = f_->add(y[j], f_->mul(x[i], (*this)(i, j)));
    }
    return y;
}

GfMatrix::LinSolveResult GfMatrix::solve(const std::vector<Fel>& b) const {
    if (b.size() != rows_) throw shape_error("solve: rhs length mismatch");
    GfMatrix aug(*f_, rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
        aug(i, cols_) = b[i];
    }
    std::size_t rank;
    std::vector<std::size_t> pivots;
    GfMatrix red = aug.rref(&rank, &pivots);
    LinSolveResult res;
    if (!pivots.empty() && pivots.back() == cols_) return res;  // 0 = nonzero row
    res.consistent = true;
    res.x.assign(cols_, 0);
    for (std::size_t pr = 0; pr < rank; ++pr) res.x[pivots[pr]] = red(pr, cols_);
    res.free_vars = cols_ - rank;
    return res;
}

GfMatrix hcat(const GfMatrix& a, const GfMatrix& b) {
    if (a.field() != b.field()) throw field_mismatch_error("hcat: field mismatch");
    if (a.rows() != b.rows()) throw shape_error("hcat: row counts disagree");
    GfMatrix r(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

GfMatrix vcat(const GfMatrix& a, const GfMatrix& b) {
    if (a.field() != b.field()) throw field_mismatch_error("vcat: field mismatch");
    if (a.cols() != b.cols()) throw shape_error("vcat: column counts disagree");
    GfMatrix r(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, j) = b(i, j);
    return r;
}

Fel det_rank_one_shift(const Field& f, Fel a, Fel x, std::size_t n) {
    Fel na = f.mul(f.embed(static_cast<long long>(n)), a);
    Fel first = f.add(x, na);
    return f.mul(first, f.pow(x, n - 1));
}

mpz_class det_rank_one_shift_int(long long a, long long x, std::size_t n) {
    mpz_class first = mpz_class(x) + mpz_class(a) * static_cast<unsigned long>(n);
    mpz_class xp = 1, xm(x);
    for (std::size_t i = 1; i < n; ++i) xp *= xm;
    return first * xp;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::ones(std::size_t rows, std::size_t cols) {
    IntMatrix m(rows, cols);
    for (auto& e : m.a_) e = 1;
    return m;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw shape_error("matmul: inner dimensions disagree");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            long long aik = (*this)(i, k);
            if (!aik) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw shape_error("matrix add: shape mismatch");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw shape_error("matrix sub: shape mismatch");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

IntMatrix IntMatrix::scaled(long long c) const {
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

mpz_class IntMatrix::det() const {
    if (rows_ != cols_) throw shape_error("det: matrix not square");
    std::size_t n = rows_;
    if (n == 0) return 1;
    std::vector<mpz_class> m(n * n);
    for (std::size_t i = 0; i < n * n; ++i) m[i] = a_[i];
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k * n + k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv * n + k] == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[piv * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j];
                m[i * n + j] = num / prev;  // Bareiss: division is exact
            }
        prev = m[k * n + k];
    }
    return sign * m[(n - 1) * n + (n - 1)];
}

std::size_t IntMatrix::rank() const { return QMatrix(*this).rank(); }

GfMatrix IntMatrix::reduce(const Field& f) const {
    GfMatrix r(f, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(i, j) = f.embed((*this)(i, j));
    return r;
}

QMatrix::QMatrix(const IntMatrix& m) : rows_(m.rows()), cols_(m.cols()), a_(rows_ * cols_) {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) a_[i * cols_ + j] = m(i, j);
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool QMatrix::operator==(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw shape_error("matmul: inner dimensions disagree");
    QMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpq_class& aik = (*this)(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
        }
    return r;
}

QMatrix QMatrix::transpose() const {
    QMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

QMatrix QMatrix::inverse() const {
    if (rows_ != cols_) throw shape_error("inverse: matrix not square");
    std::size_t n = rows_;
    QMatrix m = *this;
    QMatrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m(piv, col) == 0) ++piv;
        if (piv == n) throw singular_matrix_error("inverse of singular rational matrix");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(col, j), m(piv, j));
                std::swap(inv(col, j), inv(piv, j));
            }
        mpq_class s = 1 / m(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            m(col, j) *= s;
            inv(col, j) *= s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m(i, col) == 0) continue;
            mpq_class c = m(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= c * m(col, j);
                inv(i, j) -= c * inv(col, j);
            }
        }
    }
    return inv;
}

std::size_t QMatrix::rank() const {
    QMatrix m = *this;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t piv = rank;
        while (piv < rows_ && m(piv, col) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m(rank, j), m(piv, j));
        mpq_class s = 1 / m(rank, col);
        for (std::size_t j = col; j < cols_; ++j) m(rank, j) *= s;
        for (std::size_t i = rank + 1; i < rows_; ++i) {
            if (m(i, col) == 0) continue;
            mpq_class c = m(i, col);
            for (std::size_t j = col; j < cols_; ++j) m(i, j) -= c * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

namespace {

// Strips # comments, yields tokens.
std::vector<std::string> tokenize_matrix_stream(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    return tokens;
}

long long parse_ll(const std::string& tok) {
    try {
        std::size_t pos;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw parse_error("bad integer token '" + tok + "'");
        return v;
    } catch (const std::invalid_argument&) {
        throw parse_error("bad integer token '" + tok + "'");
    } catch (const std::out_of_range&) {
        throw parse_error("integer token out of range '" + tok + "'");
    }
}

}  // namespace

AnyMatrix read_matrix(std::istream& in) {
    auto tokens = tokenize_matrix_stream(in);
    if (tokens.size() < 3) throw parse_error("matrix header missing ('rows cols domain')");
    long long rows = parse_ll(tokens[0]), cols = parse_ll(tokens[1]);
    if (rows <= 0 || cols <= 0) throw parse_error("matrix dimensions must be positive");
    const std::string& dom = tokens[2];
    std::size_t need = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    if (tokens.size() != 3 + need)
        throw parse_error("matrix body has " + std::to_string(tokens.size() - 3) +
                          " entries, expected " + std::to_string(need));
    if (dom == "Z") {
        IntMatrix m(rows, cols);
        for (std::size_t k = 0; k < need; ++k) m(k / cols, k % cols) = parse_ll(tokens[3 + k]);
        return m;
    }
    if (dom.size() >= 2 && dom[0] == 'F') {
        long long q = parse_ll(dom.substr(1));
        const Field& f = Field::get(static_cast<unsigned>(q));
        GfMatrix m(f, rows, cols);
        for (std::size_t k = 0; k < need; ++k) {
            long long v = parse_ll(tokens[3 + k]);
            if (v < 0 || v >= static_cast<long long>(f.q()))
                throw parse_error("GF(" + std::to_string(f.q()) + ") token out of range: '" +
                                  tokens[3 + k] + "'");
            m(k / cols, k % cols) = static_cast<Fel>(v);
        }
        return m;
    }
    throw parse_error("unknown matrix domain '" + dom + "'");
}

AnyMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open matrix file " + path);
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const IntMatrix& m) {
    out << m.rows() << ' ' << m.cols() << " Z\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
        out << '\n';
    }
}

void write_matrix(std::ostream& out, const GfMatrix& m) {
    out << m.rows() << ' ' << m.cols() << " F" << m.field().q() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << unsigned(m(i, j));
        out << '\n';
    }
}

void write_matrix_file(const std::string& path, const AnyMatrix& m) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open " + path + " for writing");
    std::visit([&](const auto& mm) { write_matrix(out, mm); }, m);
}

const IntMatrix& expect_int(const AnyMatrix& m, const std::string& what) {
    if (const auto* p = std::get_if<IntMatrix>(&m)) return *p;
    throw shape_error(what + ": expected an integer (Z) matrix");
}

const GfMatrix& expect_gf(const AnyMatrix& m, const std::string& what) {
    if (const auto* p = std::get_if<GfMatrix>(&m)) return *p;
    throw shape_error(what + ": expected a GF(q) matrix");
}

}  // namespace wmc
