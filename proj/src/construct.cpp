#include "wmcodes/construct.hpp"

#include <string>

#include "wmcodes/errors.hpp"

namespace wmc {

int quadratic_character(const Field& f, Fel x) {
    if (f.p() == 2) throw std::invalid_argument("quadratic character needs odd characteristic");
    if (x == 0) return 0;
    // x is a square iff x^((q-1)/2) = 1
    return f.pow(x, (f.q() - 1) / 2) == 1 ? 1 : -1;
}

IntMatrix paley_core(const Field& f) {
    unsigned pi = f.q();
    IntMatrix a(pi, pi);
    for (unsigned x = 0; x < pi; ++x)
        for (unsigned y = 0; y < pi; ++y)
            a(x, y) = quadratic_character(f, f.sub(static_cast<Fel>(y), static_cast<Fel>(x)));
    return a;
}

WeighingMatrix paley_type_I(unsigned pi) {
    if (pi % 4 != 3)
        throw std::invalid_argument("Paley type I requires pi = 3 (mod 4), got " +
                                    std::to_string(pi));
    const Field& f = Field::get(pi);
    IntMatrix a = paley_core(f);
    unsigned n = pi + 1;
    IntMatrix h(n, n);
    h(0, 0) = 1;
    for (unsigned j = 0; j < pi; ++j) h(0, j + 1) = -1;
    for (unsigned i = 0; i < pi; ++i) h(i + 1, 0) = 1;
    for (unsigned i = 0; i < pi; ++i)
        for (unsigned j = 0; j < pi; ++j) h(i + 1, j + 1) = -a(i, j) + (i == j ? 1 : 0);
    return validate_weighing(h, n);
}

WeighingMatrix paley_conference(unsigned pi) {
    if (pi % 4 != 1)
        throw std::invalid_argument("conference matrix requires pi = 1 (mod 4), got " +
                                    std::to_string(pi));
    const Field& f = Field::get(pi);
    IntMatrix a = paley_core(f);
    unsigned n = pi + 1;
    IntMatrix w(n, n);
    w(0, 0) = 0;
    for (unsigned j = 0; j < pi; ++j) w(0, j + 1) = 1;
    for (unsigned i = 0; i < pi; ++i) w(i + 1, 0) = 1;
    for (unsigned i = 0; i < pi; ++i)
        for (unsigned j = 0; j < pi; ++j) w(i + 1, j + 1) = a(i, j);
    return validate_weighing(w, pi);
}

WeighingMatrix validate_weighing(const IntMatrix& w, std::optional<unsigned> expect_m) {
    if (w.rows() != w.cols()) throw validation_error("weighing matrix must be square");
    unsigned n = w.rows();
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            long long e = w(i, j);
            if (e != 0 && e != 1 && e != -1)
                throw validation_error("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                       ") = " + std::to_string(e) + " not in {0,1,-1}");
        }

    long long m = 0;
    for (unsigned j = 0; j < n; ++j) m += w(0, j) * w(0, j);
    if (expect_m && *expect_m != static_cast<unsigned>(m))
        throw validation_error("weight is " + std::to_string(m) + ", expected " +
                               std::to_string(*expect_m));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned s = i; s < n; ++s) {
            long long dot = 0;
            for (unsigned j = 0; j < n; ++j) dot += w(i, j) * w(s, j);
            long long want = (i == s) ? m : 0;
            if (dot != want)
                throw validation_error("rows " + std::to_string(i) + " and " + std::to_string(s) +
                                       ": inner product " + std::to_string(dot) + ", expected " +
                                       std::to_string(want));
        }
    for (unsigned j = 0; j < n; ++j) {
        long long cnt = 0;
        for (unsigned i = 0; i < n; ++i) cnt += (w(i, j) != 0);
        if (cnt != m)
            throw validation_error("column " + std::to_string(j) + " has " + std::to_string(cnt) +
                                   " nonzero entries, expected " + std::to_string(m));
    }

    WeighingMatrix res{w, n, static_cast<unsigned>(m)};
    res.is_hadamard = (res.m == n);
    res.is_skew = true;
    res.is_skew_type_hadamard = res.is_hadamard;
    res.is_conference = (res.m == n - 1);
    for (unsigned i = 0; i < n; ++i) {
        if (w(i, i) != 0) res.is_conference = false;
        for (unsigned j = 0; j < n; ++j) {
            if (w(j, i) != -w(i, j)) res.is_skew = false;
            if (w(i, j) + w(j, i) != (i == j ? 2 : 0)) res.is_skew_type_hadamard = false;
        }
    }
    return res;
}

DesignIncidence validate_design(const IntMatrix& b, unsigned r, unsigned lambda) {
    unsigned v = b.rows(), blocks = b.cols();
    for (unsigned i = 0; i < v; ++i)
        for (unsigned j = 0; j < blocks; ++j)
            if (b(i, j) != 0 && b(i, j) != 1)
                throw validation_error("incidence entry (" + std::to_string(i) + "," +
                                       std::to_string(j) + ") not in {0,1}");
    for (unsigned i = 0; i < v; ++i) {
        long long sum = 0;
        for (unsigned j = 0; j < blocks; ++j) sum += b(i, j);
        if (sum != static_cast<long long>(r))
            throw validation_error("point " + std::to_string(i) + " lies on " +
                                   std::to_string(sum) + " blocks, expected r = " +
                                   std::to_string(r));
    }
    for (unsigned i = 0; i < v; ++i)
        for (unsigned s = i + 1; s < v; ++s) {
            long long dot = 0;
            for (unsigned j = 0; j < blocks; ++j) dot += b(i, j) * b(s, j);
            if (dot != static_cast<long long>(lambda))
                throw validation_error("points " + std::to_string(i) + " and " +
                                       std::to_string(s) + " share " + std::to_string(dot) +
                                       " blocks, expected lambda = " + std::to_string(lambda));
        }
    return DesignIncidence{b, v, blocks, r, lambda};
}

DesignIncidence row_subset_design(const DesignIncidence& d, unsigned t) {
    if (t < 1 || t > d.v)
        throw std::invalid_argument("row subset size " + std::to_string(t) + " out of [1, " +
                                    std::to_string(d.v) + "]");
    IntMatrix bt(t, d.blocks);
    for (unsigned i = 0; i < t; ++i)
        for (unsigned j = 0; j < d.blocks; ++j) bt(i, j) = d.b(i, j);
    return validate_design(bt, d.r, d.lambda);
}

FqWeighingMatrix validate_fq_weighing(const GfMatrix& w, std::optional<unsigned> expect_m) {
    const Field& f = w.field();
    if (f.q() != 2 && f.q() != 3 && f.q() != 4)
        throw std::invalid_argument("F_q-weighing matrices are defined for q in {2,3,4}");
    if (w.rows() != w.cols()) throw validation_error("F_q-weighing matrix must be square");
    unsigned n = w.rows();

    unsigned m = 0;
    for (unsigned j = 0; j < n; ++j) m += (w(0, j) != 0);
    if (expect_m && *expect_m != m)
        throw validation_error("weight is " + std::to_string(m) + ", expected " +
                               std::to_string(*expect_m));
    for (unsigned i = 0; i < n; ++i) {
        unsigned cnt = 0;
        for (unsigned j = 0; j < n; ++j) cnt += (w(i, j) != 0);
        if (cnt != m)
            throw validation_error("row " + std::to_string(i) + " has " + std::to_string(cnt) +
                                   " nonzero entries, expected " + std::to_string(m));
    }
    for (unsigned j = 0; j < n; ++j) {
        unsigned cnt = 0;
        for (unsigned i = 0; i < n; ++i) cnt += (w(i, j) != 0);
        if (cnt != m)
            throw validation_error("column " + std::to_string(j) + " has " + std::to_string(cnt) +
                                   " nonzero entries, expected " + std::to_string(m));
    }
    GfMatrix gram = w * w.conj_transpose();
    GfMatrix want = GfMatrix::identity(f, n).scaled(f.embed(m));
    if (!(gram == want))
        throw validation_error("WW* != (m mod p) I over GF(" + std::to_string(f.q()) + ")");
    return FqWeighingMatrix{w, n, m};
}

}  // namespace wmc
