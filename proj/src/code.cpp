#include "wmcodes/code.hpp"

#include <algorithm>
#include <climits>
#include <cstring>
#include <mutex>
#include <sstream>
#include <thread>

#include "wmcodes/errors.hpp"

namespace wmc {

namespace {

// Row-add strategies for the enumeration kernels.  Characteristic 2 is a
// plain XOR of the canonical encodings, prime fields reduce mod q, odd
// extension fields go through the addition table.
enum class AddKind { XOR, MODQ, TABLE };

AddKind add_kind(const Field& f) {
    if (f.p() == 2) return AddKind::XOR;
    if (f.r() == 1) return AddKind::MODQ;
    return AddKind::TABLE;
}

template <AddKind K>
inline unsigned add_row_count(Fel* cw, const Fel* row, std::size_t n, unsigned q,
                              const Fel* tbl) {
    unsigned w = 0;
    if constexpr (K == AddKind::XOR) {
        for (std::size_t j = 0; j < n; ++j) {
            Fel t = static_cast<Fel>(cw[j] ^ row[j]);
            cw[j] = t;
            w += (t != 0);
        }
    } else if constexpr (K == AddKind::MODQ) {
        for (std::size_t j = 0; j < n; ++j) {
            unsigned t = static_cast<unsigned>(cw[j]) + row[j];
            t = t >= q ? t - q : t;
            cw[j] = static_cast<Fel>(t);
            w += (t != 0);
        }
    } else {
        for (std::size_t j = 0; j < n; ++j) {
            Fel t = tbl[static_cast<std::size_t>(cw[j]) * q + row[j]];
            cw[j] = t;
            w += (t != 0);
        }
    }
    return w;
}

// One reflected-Gray sweep over the first `kk` rows starting from the
// current contents of `cw` (whose weight is reported first).  Exactly one
// row is added or subtracted per step, so the whole row space offset by the
// start word is visited in q^kk steps.
template <AddKind K, class Fn>
void gray_pass(const std::vector<std::vector<Fel>>& rup,
               const std::vector<std::vector<Fel>>& rdn, std::size_t kk,
               std::vector<Fel>& cw, unsigned q, const Fel* tbl, Fn&& fn) {
    std::size_t n = cw.size();
    unsigned w0 = 0;
    for (Fel e : cw) w0 += (e != 0);
    fn(w0);
    if (kk == 0) return;
    std::vector<unsigned> digit(kk, 0);
    std::vector<int> dir(kk, 1);
    while (true) {
        std::size_t i = 0;
        while (i < kk) {
            int nd = static_cast<int>(digit[i]) + dir[i];
            if (nd < 0 || nd >= static_cast<int>(q)) {
                dir[i] = -dir[i];
                ++i;
            } else {
                break;
            }
        }
        if (i == kk) break;
        digit[i] = static_cast<unsigned>(static_cast<int>(digit[i]) + dir[i]);
        const Fel* rowp = (dir[i] > 0 ? rup[i] : rdn[i]).data();
        fn(add_row_count<K>(cw.data(), rowp, n, q, tbl));
    }
}

struct EnumRows {
    std::vector<std::vector<Fel>> up, dn;
};

EnumRows make_enum_rows(const GfMatrix& basis) {
    const Field& f = basis.field();
    EnumRows r;
    r.up.resize(basis.rows());
    r.dn.resize(basis.rows());
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        r.up[i] = basis.row(i);
        r.dn[i] = r.up[i];
        for (auto& e : r.dn[i]) e = f.neg(e);
    }
    return r;
}

// Full histogram of codeword weights.  Splits the top generator digit over
// a few workers for large spaces; the merged counts are independent of the
// partitioning.
template <AddKind K>
std::vector<std::uint64_t> full_histogram_impl(const GfMatrix& basis, std::uint64_t count) {
    const Field& f = basis.field();
    unsigned q = f.q();
    std::size_t k = basis.rows(), n = basis.cols();
    const Fel* tbl = f.add_table();
    std::vector<std::uint64_t> hist(n + 1, 0);
    if (k == 0) {
        hist[0] = 1;
        return hist;
    }
    EnumRows rows = make_enum_rows(basis);

    auto run_range = [&](unsigned vlo, unsigned vhi, std::vector<std::uint64_t>& out) {
        std::vector<Fel> cw(n);
        for (unsigned v = vlo; v < vhi; ++v) {
            const std::vector<Fel>& top = rows.up[k - 1];
            for (std::size_t j = 0; j < n; ++j) cw[j] = f.mul(top[j], static_cast<Fel>(v));
            gray_pass<K>(rows.up, rows.dn, k - 1, cw, q, tbl,
                         [&](unsigned w) { ++out[w]; });
        }
    };

    unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(), q);
    if (count >= (std::uint64_t(1) << 22) && workers > 1 && k >= 2) {
        std::vector<std::vector<std::uint64_t>> parts(workers,
                                                      std::vector<std::uint64_t>(n + 1, 0));
        std::vector<std::thread> threads;
        for (unsigned t = 0; t < workers; ++t) {
            unsigned lo = q * t / workers, hi = q * (t + 1) / workers;
            threads.emplace_back([&, lo, hi, t] { run_range(lo, hi, parts[t]); });
        }
        for (auto& th : threads) th.join();
        for (auto& part : parts)
            for (std::size_t w = 0; w <= n; ++w) hist[w] += part[w];
    } else {
        run_range(0, q, hist);
    }
    return hist;
}

std::vector<std::uint64_t> full_histogram(const GfMatrix& basis, std::uint64_t count) {
    switch (add_kind(basis.field())) {
        case AddKind::XOR: return full_histogram_impl<AddKind::XOR>(basis, count);
        case AddKind::MODQ: return full_histogram_impl<AddKind::MODQ>(basis, count);
        default: return full_histogram_impl<AddKind::TABLE>(basis, count);
    }
}

// --- information-set (Brouwer-Zimmermann style) machinery ---

struct SystematicForm {
    GfMatrix g;
    unsigned deficiency;  // k - rank on this form's fresh column set
};

std::vector<SystematicForm> systematic_forms(const GfMatrix& basis) {
    const Field& f = basis.field();
    std::size_t k = basis.rows(), n = basis.cols();
    std::vector<bool> used(n, false);
    std::vector<SystematicForm> forms;
    while (true) {
        GfMatrix work = basis;
        std::size_t rank_here = 0;
        std::vector<std::size_t> pivots;
        for (std::size_t col = 0; col < n && rank_here < k; ++col) {
            if (used[col]) continue;
            std::size_t piv = rank_here;
            while (piv < k && work(piv, col) == 0) ++piv;
            if (piv == k) continue;
            for (std::size_t j = 0; j < n; ++j) std::swap(work(rank_here, j), work(piv, j));
            Fel s = f.inv(work(rank_here, col));
            for (std::size_t j = 0; j < n; ++j) work(rank_here, j) = f.mul(work(rank_here, j), s);
            for (std::size_t i = 0; i < k; ++i) {
                if (i == rank_here || work(i, col) == 0) continue;
                Fel c = work(i, col);
                for (std::size_t j = 0; j < n; ++j)
                    work(i, j) = f.sub(work(i, j), f.mul(c, work(rank_here, j)));
            }
            pivots.push_back(col);
            ++rank_here;
        }
        if (rank_here == 0) break;
        for (std::size_t c : pivots) used[c] = true;
        forms.push_back({work, static_cast<unsigned>(k - rank_here)});
    }
    return forms;
}

// Enumerate every codeword spanned by exactly `w` rows of g, first nonzero
// coefficient normalized to 1 (weights are scalar-invariant).  Returns false
// when the budget runs out mid-pass.
template <AddKind K, class Fn>
bool combo_pass(const GfMatrix& g, unsigned w, std::uint64_t& budget, const Fel* tbl,
                Fn&& fn) {
    const Field& f = g.field();
    unsigned q = f.q();
    std::size_t k = g.rows(), n = g.cols();
    // scaled[i][c-1] = c * row_i
    std::vector<std::vector<std::vector<Fel>>> scaled(k);
    for (std::size_t i = 0; i < k; ++i) {
        scaled[i].resize(q - 1);
        auto row = g.row(i);
        for (unsigned c = 1; c < q; ++c) {
            scaled[i][c - 1].resize(n);
            for (std::size_t j = 0; j < n; ++j)
                scaled[i][c - 1][j] = f.mul(row[j], static_cast<Fel>(c));
        }
    }
    std::vector<std::vector<Fel>> acc(w + 1, std::vector<Fel>(n, 0));
    bool ok = true;

    auto rec = [&](auto&& self, unsigned depth, std::size_t start) -> void {
        if (!ok) return;
        for (std::size_t pos = start; pos + (w - depth - 1) < k && ok; ++pos) {
            unsigned cmax = (depth == 0) ? 1u : q - 1;
            for (unsigned c = 1; c <= cmax; ++c) {
                std::copy(acc[depth].begin(), acc[depth].end(), acc[depth + 1].begin());
                unsigned wt = add_row_count<K>(acc[depth + 1].data(), scaled[pos][c - 1].data(),
                                               n, q, tbl);
                if (depth + 1 == w) {
                    if (budget == 0) { ok = false; return; }
                    --budget;
                    fn(wt);
                } else {
                    self(self, depth + 1, pos + 1);
                    if (!ok) return;
                }
            }
        }
    };
    if (w <= k) rec(rec, 0, 0);
    return ok;
}

template <class Fn>
bool combo_pass_dispatch(const GfMatrix& g, unsigned w, std::uint64_t& budget, Fn&& fn) {
    const Fel* tbl = g.field().add_table();
    switch (add_kind(g.field())) {
        case AddKind::XOR: return combo_pass<AddKind::XOR>(g, w, budget, tbl, fn);
        case AddKind::MODQ: return combo_pass<AddKind::MODQ>(g, w, budget, tbl, fn);
        default: return combo_pass<AddKind::TABLE>(g, w, budget, tbl, fn);
    }
}

DistanceResult bz_distance(const GfMatrix& basis, const DistancePolicy& policy) {
    unsigned k = static_cast<unsigned>(basis.rows());
    auto forms = systematic_forms(basis);
    std::uint64_t budget = policy.enum_cap;
    unsigned best = UINT_MAX;
    unsigned lb = 1;

    for (unsigned w = 1; w <= k; ++w) {
        if (policy.max_weight && w > policy.max_weight) break;
        bool completed = true;
        for (const auto& form : forms) {
            if (!combo_pass_dispatch(form.g, w, budget, [&](unsigned wt) {
                    if (wt && wt < best) best = wt;
                })) {
                completed = false;
                break;
            }
        }
        if (!completed) break;
        unsigned bound = 0;
        for (const auto& form : forms)
            bound += (w + 1 > form.deficiency) ? (w + 1 - form.deficiency) : 0;
        lb = std::max(lb, bound);
        if (w == k) lb = std::max(lb, best);  // space exhausted
        if (best != UINT_MAX && lb >= best) break;
        if (policy.target && lb >= policy.target) break;
    }

    DistanceResult res;
    res.best_found = (best == UINT_MAX) ? 0 : best;
    if (res.best_found) lb = std::min(lb, res.best_found);
    res.certified_lb = lb;
    res.status = (res.best_found && res.certified_lb >= res.best_found)
                     ? DistStatus::EXACT
                     : DistStatus::LOWER_BOUND;
    return res;
}

}  // namespace

struct LinearCode::Cache {
    std::mutex mtx;
    std::optional<GfMatrix> dual_basis;
    std::optional<unsigned> hull, hull_hermitian;
    std::optional<std::vector<std::uint64_t>> wdist;
    std::optional<DistanceResult> exact_d;
};

LinearCode::LinearCode(GfMatrix raw)
    : raw_(std::move(raw)), basis_(raw_.field(), 0, raw_.cols()),
      cache_(std::make_shared<Cache>()) {
    std::size_t rank;
    GfMatrix red = raw_.rref(&rank);
    GfMatrix b(raw_.field(), rank, raw_.cols());
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < raw_.cols(); ++j) b(i, j) = red(i, j);
    basis_ = std::move(b);
}

LinearCode LinearCode::from_generator(const GfMatrix& g) {
    if (g.rows() == 0 || g.is_zero())
        throw validation_error("generator matrix is zero");
    return LinearCode(g);
}

std::uint64_t LinearCode::codeword_count() const {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < k(); ++i) {
        if (count > (std::uint64_t(1) << 62) / field().q()) return UINT64_MAX;
        count *= field().q();
    }
    return count;
}

LinearCode LinearCode::dual() const {
    std::lock_guard<std::mutex> lock(cache_->mtx);
    if (!cache_->dual_basis) cache_->dual_basis = basis_.kernel_basis();
    return LinearCode(*cache_->dual_basis);
}

LinearCode LinearCode::hermitian_dual() const {
    unsigned q = field().q();
    if (q != 2 && q != 3 && q != 4)
        throw std::invalid_argument("Hermitian dual is defined for q in {2,3,4}");
    return LinearCode(basis_.conjugate().kernel_basis());
}

unsigned LinearCode::hull_dimension(bool hermitian) const {
    if (hermitian) {
        unsigned q = field().q();
        if (q != 2 && q != 3 && q != 4)
            throw std::invalid_argument("Hermitian hull is defined for q in {2,3,4}");
    }
    std::lock_guard<std::mutex> lock(cache_->mtx);
    auto& slot = hermitian ? cache_->hull_hermitian : cache_->hull;
    if (!slot) {
        GfMatrix gram = hermitian ? basis_ * basis_.conj_transpose()
                                  : basis_ * basis_.transpose();
        slot = k() - static_cast<unsigned>(gram.rank());
    }
    return *slot;
}

bool LinearCode::is_self_orthogonal() const {
    return (basis_ * basis_.transpose()).is_zero();
}

bool LinearCode::is_self_dual() const { return 2 * k() == n() && is_self_orthogonal(); }

bool LinearCode::contains(const std::vector<Fel>& v) const {
    if (v.size() != n()) throw shape_error("contains: vector length mismatch");
    const Field& f = field();
    std::vector<Fel> r = v;
    // basis is in RREF: sweep once per row using its leading column
    for (unsigned i = 0; i < k(); ++i) {
        std::size_t lead = 0;
        while (lead < n() && basis_(i, lead) == 0) ++lead;
        if (lead == n()) continue;
        Fel c = f.mul(r[lead], f.inv(basis_(i, lead)));
        if (c == 0) continue;
        for (std::size_t j = lead; j < n(); ++j)
            r[j] = f.sub(r[j], f.mul(c, basis_(i, j)));
    }
    for (Fel e : r)
        if (e) return false;
    return true;
}

bool LinearCode::same_code(const LinearCode& o) const {
    return field() == o.field() && n() == o.n() && basis_ == o.basis_;
}

std::vector<std::uint64_t> LinearCode::weight_distribution(std::uint64_t cap) const {
    std::uint64_t count = codeword_count();
    if (count > cap)
        throw cap_exceeded_error("weight distribution needs " + std::to_string(count) +
                                 " codeword evaluations, cap is " + std::to_string(cap));
    std::lock_guard<std::mutex> lock(cache_->mtx);
    if (!cache_->wdist) cache_->wdist = full_histogram(basis_, count);
    return *cache_->wdist;
}

DistanceResult LinearCode::min_distance(const DistancePolicy& policy) const {
    if (k() == 0) throw std::invalid_argument("minimum distance of the zero code");
    {
        std::lock_guard<std::mutex> lock(cache_->mtx);
        if (cache_->exact_d) return *cache_->exact_d;
    }
    std::uint64_t count = codeword_count();
    DistanceResult res;
    if (count <= policy.enum_cap) {
        auto wd = weight_distribution(policy.enum_cap);
        unsigned d = 0;
        for (unsigned w = 1; w <= n(); ++w)
            if (wd[w]) { d = w; break; }
        res = DistanceResult{d, d, DistStatus::EXACT};
    } else {
        res = bz_distance(basis_, policy);
    }
    if (res.exact()) {
        std::lock_guard<std::mutex> lock(cache_->mtx);
        cache_->exact_d = res;
    }
    return res;
}

GfMatrix intersection_basis(const GfMatrix& a, const GfMatrix& b) {
    if (a.field() != b.field()) throw field_mismatch_error("intersection: field mismatch");
    if (a.cols() != b.cols()) throw shape_error("intersection: length mismatch");
    // independent row bases first
    LinearCode ca = LinearCode::from_generator(a);
    LinearCode cb = LinearCode::from_generator(b);
    const GfMatrix& A = ca.basis();
    const GfMatrix& B = cb.basis();
    // x in both spaces: x = lambda A = mu B; kernel of [A^T | -B^T]
    GfMatrix stacked = hcat(A.transpose(), B.transpose().scaled(A.field().neg(1)));
    GfMatrix ker = stacked.kernel_basis();  // rows (lambda, mu)
    GfMatrix result(A.field(), ker.rows(), A.cols());
    for (std::size_t r = 0; r < ker.rows(); ++r) {
        std::vector<Fel> lambda(A.rows());
        for (std::size_t i = 0; i < A.rows(); ++i) lambda[i] = ker(r, i);
        auto x = A.vector_mul(lambda);
        for (std::size_t j = 0; j < A.cols(); ++j) result(r, j) = x[j];
    }
    return result;
}

unsigned intersection_dimension(const LinearCode& a, const LinearCode& b) {
    if (a.field() != b.field() || a.n() != b.n())
        throw shape_error("intersection: codes not comparable");
    if (a.k() == 0 || b.k() == 0) return 0;
    std::size_t stacked_rank = vcat(a.basis(), b.basis()).rank();
    return a.k() + b.k() - static_cast<unsigned>(stacked_rank);
}

std::vector<mpz_class> macwilliams_transform(const std::vector<std::uint64_t>& wdist,
                                             unsigned q) {
    if (wdist.empty()) throw std::invalid_argument("empty weight distribution");
    std::size_t n = wdist.size() - 1;
    mpz_class size = 0;
    for (auto w : wdist) size += mpz_class(static_cast<unsigned long>(w));
    if (size == 0) throw std::invalid_argument("weight distribution sums to zero");

    std::vector<std::vector<mpz_class>> binom(n + 1, std::vector<mpz_class>(n + 1, 0));
    for (std::size_t i = 0; i <= n; ++i) {
        binom[i][0] = 1;
        for (std::size_t j = 1; j <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
    }
    std::vector<mpz_class> qm1pow(n + 1);
    qm1pow[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) qm1pow[i] = qm1pow[i - 1] * (q - 1);

    std::vector<mpz_class> out(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        mpz_class acc = 0;
        for (std::size_t i = 0; i <= n; ++i) {
            if (wdist[i] == 0) continue;
            mpz_class kraw = 0;
            for (std::size_t s = 0; s <= j; ++s) {
                if (s > i || j - s > n - i) continue;
                mpz_class term = binom[i][s] * binom[n - i][j - s] * qm1pow[j - s];
                if (s % 2) kraw -= term;
                else kraw += term;
            }
            acc += mpz_class(static_cast<unsigned long>(wdist[i])) * kraw;
        }
        mpz_class quot, rem;
        mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), acc.get_mpz_t(), size.get_mpz_t());
        if (rem != 0)
            throw std::logic_error("MacWilliams transform not integral: input is not a "
                                   "full weight distribution");
        out[j] = quot;
    }
    return out;
}

bool formally_self_dual_structural(const LinearCode& c) {
    const GfMatrix& raw = c.raw_generator();
    const Field& f = c.field();
    std::size_t kr = raw.rows();
    if (raw.cols() != 2 * kr || c.k() != kr) return false;
    for (std::size_t i = 0; i < kr; ++i)
        for (std::size_t j = 0; j < kr; ++j)
            if (raw(i, kr + j) != (i == j ? 1 : 0)) return false;
    GfMatrix m(f, kr, kr);
    for (std::size_t i = 0; i < kr; ++i)
        for (std::size_t j = 0; j < kr; ++j) m(i, j) = raw(i, j);
    LinearCode d = c.dual();
    for (unsigned a = 1; a < f.q(); ++a) {
        GfMatrix cand = hcat(m, GfMatrix::identity(f, kr).scaled(static_cast<Fel>(a)));
        if (LinearCode::from_generator(cand).same_code(d)) return true;
    }
    return false;
}

bool formally_self_dual_exact(const LinearCode& c, std::uint64_t cap) {
    auto wc = c.weight_distribution(cap);
    auto wd = c.dual().weight_distribution(cap);
    return wc == wd;
}

CodeReport analyze(const LinearCode& c, const ReportOptions& opt) {
    CodeReport rep;
    rep.n = c.n();
    rep.k = c.k();
    rep.q = c.field().q();
    rep.hermitian = opt.hermitian;
    rep.hull = c.hull_dimension(opt.hermitian);
    rep.lcd = (rep.hull == 0);
    rep.self_orthogonal = c.is_self_orthogonal();
    rep.self_dual = c.is_self_dual();
    if (opt.distance && c.k() > 0) {
        rep.d = c.min_distance(opt.policy);
        rep.has_distance = true;
    }
    if (opt.wdist) rep.wdist = c.weight_distribution(opt.policy.enum_cap);

    if (rep.self_dual) {
        rep.fsd = true;
        rep.fsd_status = FsdStatus::EXACT;
    } else {
        bool exact_feasible = c.codeword_count() <= opt.policy.enum_cap;
        if (exact_feasible) {
            LinearCode d = c.dual();
            exact_feasible = d.codeword_count() <= opt.policy.enum_cap;
            if (exact_feasible) {
                rep.fsd = formally_self_dual_exact(c, opt.policy.enum_cap);
                rep.fsd_status = FsdStatus::EXACT;
            }
        }
        if (!exact_feasible) {
            if (formally_self_dual_structural(c)) {
                rep.fsd = true;
                rep.fsd_status = FsdStatus::STRUCTURAL;
            } else {
                rep.fsd = false;
                rep.fsd_status = FsdStatus::UNKNOWN;
            }
        }
    }
    return rep;
}

std::string CodeReport::to_text() const {
    std::ostringstream os;
    os << n << ' ' << k << ' ';
    if (!has_distance)
        os << "-";
    else if (d.status == DistStatus::EXACT)
        os << d.best_found << "[EXACT]";
    else
        os << d.certified_lb << "[LOWER_BOUND]";
    os << ' ' << q << ' ' << hull;
    os << " lcd=" << (lcd ? "yes" : "no");
    os << " self_dual=" << (self_dual ? "yes" : "no");
    os << " fsd=";
    switch (fsd_status) {
        case FsdStatus::EXACT: os << (fsd ? "yes" : "no") << "[EXACT]"; break;
        case FsdStatus::STRUCTURAL: os << (fsd ? "yes" : "no") << "[STRUCTURAL]"; break;
        case FsdStatus::UNKNOWN: os << "?[UNKNOWN]"; break;
    }
    if (wdist) {
        os << "\nwdist:";
        for (auto w : *wdist) os << ' ' << w;
    }
    return os.str();
}

}  // namespace wmc
