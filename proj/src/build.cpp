#include "wmcodes/build.hpp"

#include <sstream>

#include "wmcodes/errors.hpp"

namespace wmc {

std::string ConditionFactor::to_text(unsigned) const {
    std::ostringstream os;
    os << label;
    if (has_integer) os << '=' << integer_value;
    os << "≡" << unsigned(residue);
    os << (residue != 0 ? "≠0" : " SINGULAR");
    return os.str();
}

std::string BuildResult::trace_text() const {
    std::ostringstream os;
    unsigned p = G.field().p();
    for (std::size_t i = 0; i < trace.size(); ++i) os << (i ? " " : "") << trace[i].to_text(p);
    switch (predicted) {
        case PredictedClass::LCD: os << " LCD"; break;
        case PredictedClass::SELF_DUAL: os << " SELF_DUAL"; break;
        case PredictedClass::UNDETERMINED: os << " UNDETERMINED"; break;
    }
    return os.str();
}

namespace {

struct Core {
    GfMatrix m;            // left block over GF(q)
    Fel c_res;             // MM^T = c I (or MM* = c I) over GF(q)
    bool c_has_int = false;
    long long c_int = 0;   // integer value of c when meaningful
    std::string c_label;   // e.g. "m", "m+a^2", "n-1+(a+1)^2"
    std::string id_label;  // rendering of c+1 for the identity case, values inlined
};

ConditionFactor make_factor(const Field& f, const std::string& label, const Core& core,
                            long long add_int) {
    ConditionFactor fac;
    fac.label = label;
    fac.has_integer = core.c_has_int;
    if (fac.has_integer) fac.integer_value = core.c_int + add_int;
    fac.residue = f.add(core.c_res, f.embed(add_int));
    return fac;
}

// Shared assembly for every variant: verify the Gram shape of the left
// block, join the design (or identity) block, evaluate the condition
// factors, and produce the explicit dual generator in the identity case.
BuildResult assemble(BuildVariant variant, const Core& core,
                     const std::optional<DesignIncidence>& b, bool hermitian) {
    const Field& f = core.m.field();
    unsigned n = static_cast<unsigned>(core.m.rows());

    GfMatrix gram = hermitian ? core.m * core.m.conj_transpose()
                              : core.m * core.m.transpose();
    if (!(gram == GfMatrix::identity(f, n).scaled(core.c_res)))
        throw validation_error("left block fails its Gram identity over GF(" +
                               std::to_string(f.q()) + ")");

    BuildResult res{GfMatrix(f, 0, 0), std::nullopt, PredictedClass::UNDETERMINED, {}, variant,
                    !b.has_value(), hermitian, n, false};

    if (b) {
        if (b->v != n)
            throw shape_error("design has " + std::to_string(b->v) + " points, left block has " +
                              std::to_string(n) + " rows");
        res.G = hcat(core.m, b->b.reduce(f));
        long long r = b->r, lam = b->lambda;
        ConditionFactor f1 = make_factor(f, core.c_label + "+r+(n-1)l", core,
                                         r + static_cast<long long>(n - 1) * lam);
        ConditionFactor f2 = make_factor(f, core.c_label + "+r-l", core, r - lam);
        res.trace = {f1, f2};
        res.predicted = (f1.residue != 0 && f2.residue != 0) ? PredictedClass::LCD
                                                             : PredictedClass::UNDETERMINED;
        // Gram shape from the theorem proofs: GG^T = lam J + (c + r - lam) I
        GfMatrix g_gram = hermitian ? res.G * res.G.conj_transpose()
                                    : res.G * res.G.transpose();
        GfMatrix want = GfMatrix::ones(f, n, n).scaled(f.embed(lam)) +
                        GfMatrix::identity(f, n).scaled(f2.residue);
        if (!(g_gram == want))
            throw validation_error("assembled generator fails the predicted Gram shape");
    } else {
        res.G = hcat(core.m, GfMatrix::identity(f, n));
        ConditionFactor fac = make_factor(
            f, core.id_label.empty() ? core.c_label + "+1" : core.id_label, core, 1);
        res.trace = {fac};
        res.predicted = fac.residue != 0 ? PredictedClass::LCD : PredictedClass::SELF_DUAL;
        // dual generator [M | beta I]; orthogonality needs c + dagger(beta) = 0,
        // i.e. beta = dagger(-c) (dagger is the identity on prime subfields)
        Fel beta = f.dagger(f.neg(core.c_res));
        res.Gbar = hcat(core.m, GfMatrix::identity(f, n).scaled(beta));
        GfMatrix cross = hermitian ? res.G * res.Gbar->conj_transpose()
                                   : res.G * res.Gbar->transpose();
        if (!cross.is_zero())
            throw validation_error("dual generator is not orthogonal to G");
        res.dual_spans = (res.Gbar->rank() == n);
    }

    if (res.predicted == PredictedClass::LCD) {
        // rank n follows from the nonsingular Gram; downgrade if an
        // ingredient slipped past expectations
        if (res.G.rank() != n) res.predicted = PredictedClass::UNDETERMINED;
    }
    return res;
}

IntMatrix add_alpha_int(const IntMatrix& w, long long a) {
    IntMatrix m = w;
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) += a;
    return m;
}

GfMatrix add_alpha(const GfMatrix& w, Fel a) {
    GfMatrix m = w;
    const Field& f = m.field();
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) = f.add(m(i, i), a);
    return m;
}

// Re-validate file-borne orbit matrices: RR^T = mI over Z.
unsigned check_orbit_gram(const IntMatrix& r) {
    if (r.rows() != r.cols()) throw shape_error("orbit matrix must be square");
    IntMatrix gram = r * r.transpose();
    long long m = gram(0, 0);
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j)
            if (gram(i, j) != ((i == j) ? m : 0))
                throw validation_error("RR^T != mI over Z (rows " + std::to_string(i) + "," +
                                       std::to_string(j) + ")");
    if (m <= 0) throw validation_error("orbit matrix has zero rows");
    return static_cast<unsigned>(m);
}

}  // namespace

BuildResult build_plain(const WeighingMatrix& w, const std::optional<DesignIncidence>& b,
                        const Field& f) {
    WeighingMatrix checked = validate_weighing(w.w, w.m);
    Core core{checked.w.reduce(f), f.embed(checked.m), true, checked.m, "m",
              std::to_string(checked.m) + "+1"};
    return assemble(BuildVariant::PLAIN, core, b, false);
}

BuildResult build_skew(const WeighingMatrix& w, const std::optional<DesignIncidence>& b,
                       Fel alpha, const Field& f) {
    WeighingMatrix checked = validate_weighing(w.w, w.m);
    if (!checked.is_skew) throw std::invalid_argument("build_skew needs W^T = -W");
    Core core;
    core.m = add_alpha(checked.w.reduce(f), alpha);
    core.c_res = f.add(f.embed(checked.m), f.mul(alpha, alpha));
    core.c_has_int = alpha < f.p();  // alpha in the prime subfield has an integer reading
    core.c_int = checked.m + static_cast<long long>(alpha) * alpha;
    core.c_label = "m+a^2";
    core.id_label = core.c_has_int ? std::to_string(checked.m) + "+" + std::to_string(alpha) +
                                         "^2+1"
                                   : "m+a^2+1";
    return assemble(BuildVariant::SKEW, core, b, false);
}

BuildResult build_skew_hadamard(const WeighingMatrix& h, const std::optional<DesignIncidence>& b,
                                Fel alpha, const Field& f) {
    WeighingMatrix checked = validate_weighing(h.w, h.m);
    if (!checked.is_skew_type_hadamard)
        throw std::invalid_argument("build_skew_hadamard needs H + H^T = 2I");
    unsigned n = checked.n;
    Core core;
    core.m = add_alpha(checked.w.reduce(f), alpha);
    Fel ap1 = f.add(alpha, 1);
    core.c_res = f.add(f.embed(static_cast<long long>(n) - 1), f.mul(ap1, ap1));
    core.c_has_int = alpha < f.p();
    core.c_int = static_cast<long long>(n) - 1 +
                 (static_cast<long long>(alpha) + 1) * (static_cast<long long>(alpha) + 1);
    core.c_label = "n-1+(a+1)^2";
    core.id_label = core.c_has_int ? std::to_string(n) + "+(" + std::to_string(alpha) + "+1)^2"
                                   : "n+(a+1)^2";
    return assemble(BuildVariant::SKEW_HADAMARD, core, b, false);
}

BuildResult build_orbit(const IntMatrix& r, const std::optional<DesignIncidence>& b,
                        const Field& f) {
    unsigned m = check_orbit_gram(r);
    Core core{r.reduce(f), f.embed(m), true, m, "m", std::to_string(m) + "+1"};
    return assemble(BuildVariant::ORBIT, core, b, false);
}

BuildResult build_orbit_skew(const IntMatrix& r, const std::optional<DesignIncidence>& b,
                             Fel alpha, const Field& f) {
    unsigned m = check_orbit_gram(r);
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j)
            if (r(j, i) != -r(i, j))
                throw std::invalid_argument("build_orbit_skew needs R^T = -R");
    Core core;
    core.m = add_alpha(r.reduce(f), alpha);
    core.c_res = f.add(f.embed(m), f.mul(alpha, alpha));
    core.c_has_int = alpha < f.p();
    core.c_int = m + static_cast<long long>(alpha) * alpha;
    core.c_label = "m+a^2";
    return assemble(BuildVariant::ORBIT_SKEW, core, b, false);
}

BuildResult build_hermitian(const GfMatrix& r, const std::optional<DesignIncidence>& b,
                            std::optional<unsigned> m_integer) {
    const Field& f = r.field();
    if (f.q() != 2 && f.q() != 3 && f.q() != 4)
        throw std::invalid_argument("Hermitian builds are defined for q in {2,3,4}");
    if (r.rows() != r.cols()) throw shape_error("Hermitian left block must be square");
    GfMatrix gram = r * r.conj_transpose();
    Fel c = gram(0, 0);
    Core core{r, c, false, 0, "m"};
    if (m_integer) {
        if (f.embed(*m_integer) != c)
            throw validation_error("declared weight disagrees with RR* diagonal");
        core.c_has_int = true;
        core.c_int = *m_integer;
    }
    BuildResult res = assemble(BuildVariant::HERMITIAN, core, b, true);
    // Lemma cross-check: LCD verdict is det(GG*) != 0
    GfMatrix g_gram = res.G * res.G.conj_transpose();
    bool lemma_lcd = g_gram.det() != 0;
    if ((res.predicted == PredictedClass::LCD) != lemma_lcd)
        throw std::logic_error("condition factors disagree with det(GG*)");
    return res;
}

BuildResult build_hermitian(const FqWeighingMatrix& w, const std::optional<DesignIncidence>& b) {
    FqWeighingMatrix checked = validate_fq_weighing(w.w, w.m);
    return build_hermitian(checked.w, b, checked.m);
}

}  // namespace wmc
