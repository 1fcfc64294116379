#include "wmcodes/orbit.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "wmcodes/errors.hpp"

namespace wmc {

PermAutGenerator identity_generator(unsigned n) {
    PermAutGenerator g;
    g.row.resize(n);
    g.col.resize(n);
    std::iota(g.row.begin(), g.row.end(), 0u);
    std::iota(g.col.begin(), g.col.end(), 0u);
    return g;
}

bool is_identity(const PermAutGenerator& g) {
    for (unsigned i = 0; i < g.row.size(); ++i)
        if (g.row[i] != i || g.col[i] != i) return false;
    return true;
}

PermAutGenerator compose(const PermAutGenerator& a, const PermAutGenerator& b) {
    if (a.row.size() != b.row.size())
        throw shape_error("compose: permutation degrees disagree");
    unsigned n = static_cast<unsigned>(a.row.size());
    PermAutGenerator g;
    g.row.resize(n);
    g.col.resize(n);
    for (unsigned i = 0; i < n; ++i) {
        g.row[i] = b.row[a.row[i]];
        g.col[i] = b.col[a.col[i]];
    }
    return g;
}

std::vector<PermAutGenerator> cyclic_group(const PermAutGenerator& g) {
    std::vector<PermAutGenerator> elems{identity_generator(static_cast<unsigned>(g.row.size()))};
    PermAutGenerator cur = g;
    while (!is_identity(cur)) {
        elems.push_back(cur);
        cur = compose(cur, g);
    }
    return elems;
}

std::vector<std::vector<PermAutGenerator>> cyclic_subgroups(
    const std::vector<PermAutGenerator>& auts) {
    std::vector<std::vector<PermAutGenerator>> out;
    std::vector<std::vector<PermAutGenerator>> seen;
    for (const auto& g : auts) {
        auto grp = cyclic_group(g);
        std::sort(grp.begin(), grp.end());
        if (std::find(seen.begin(), seen.end(), grp) != seen.end()) continue;
        seen.push_back(grp);
        out.push_back(grp);
    }
    return out;
}

namespace {

bool is_permutation(const std::vector<unsigned>& p) {
    std::vector<bool> hit(p.size(), false);
    for (unsigned v : p) {
        if (v >= p.size() || hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

template <class M>
bool verify_generator_impl(const M& m, const PermAutGenerator& g) {
    if (m.rows() != m.cols()) throw shape_error("automorphisms need a square matrix");
    unsigned n = static_cast<unsigned>(m.rows());
    if (g.row.size() != n || g.col.size() != n)
        throw shape_error("permutation degree does not match matrix order");
    if (!is_permutation(g.row) || !is_permutation(g.col))
        throw validation_error("image list is not a permutation");
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            if (m(g.row[i], g.col[j]) != m(i, j)) return false;
    return true;
}

// Orbits of {0..n-1} under all the given image maps, canonically ordered.
std::vector<std::vector<unsigned>> orbits_of(unsigned n,
                                             const std::vector<const std::vector<unsigned>*>& maps) {
    std::vector<unsigned> parent(n);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](unsigned x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto* map : maps)
        for (unsigned i = 0; i < n; ++i) {
            unsigned a = find(i), b = find((*map)[i]);
            if (a != b) parent[a] = b;
        }
    std::map<unsigned, std::vector<unsigned>> buckets;
    for (unsigned i = 0; i < n; ++i) buckets[find(i)].push_back(i);
    std::vector<std::vector<unsigned>> orbits;
    for (auto& [root, members] : buckets) orbits.push_back(std::move(members));
    std::sort(orbits.begin(), orbits.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return orbits;
}

}  // namespace

bool verify_generator(const IntMatrix& m, const PermAutGenerator& g) {
    return verify_generator_impl(m, g);
}
bool verify_generator(const GfMatrix& m, const PermAutGenerator& g) {
    return verify_generator_impl(m, g);
}

bool OrbitStructure::equal_lengths() const {
    for (unsigned s : row_sizes)
        if (s != row_sizes.front()) return false;
    for (unsigned s : col_sizes)
        if (s != col_sizes.front()) return false;
    return true;
}

bool OrbitStructure::aligned() const {
    return row_orbits == col_orbits;
}

bool GfOrbitStructure::equal_lengths() const {
    for (unsigned s : row_sizes)
        if (s != row_sizes.front()) return false;
    for (unsigned s : col_sizes)
        if (s != col_sizes.front()) return false;
    return true;
}

OrbitStructure orbit_structure(const IntMatrix& m, const std::vector<PermAutGenerator>& gens) {
    for (const auto& g : gens)
        if (!verify_generator(m, g))
            throw validation_error("generator is not an automorphism of the matrix");
    unsigned n = static_cast<unsigned>(m.rows());
    std::vector<const std::vector<unsigned>*> rmaps, cmaps;
    for (const auto& g : gens) {
        rmaps.push_back(&g.row);
        cmaps.push_back(&g.col);
    }
    OrbitStructure s;
    s.row_orbits = orbits_of(n, rmaps);
    s.col_orbits = orbits_of(n, cmaps);
    if (s.row_orbits.size() != s.col_orbits.size())
        throw validation_error("row and column orbit counts differ (" +
                               std::to_string(s.row_orbits.size()) + " vs " +
                               std::to_string(s.col_orbits.size()) + ")");
    for (const auto& o : s.row_orbits) s.row_sizes.push_back(static_cast<unsigned>(o.size()));
    for (const auto& o : s.col_orbits) s.col_sizes.push_back(static_cast<unsigned>(o.size()));
    unsigned t = s.t();
    s.R = IntMatrix(t, t);
    s.C = IntMatrix(t, t);
    for (unsigned i = 0; i < t; ++i)
        for (unsigned j = 0; j < t; ++j) {
            long long gamma = 0;
            bool first = true;
            for (unsigned x : s.row_orbits[i]) {
                long long sum = 0;
                for (unsigned z : s.col_orbits[j]) sum += m(x, z);
                if (first) { gamma = sum; first = false; }
                else if (sum != gamma)
                    throw validation_error("row sums in submatrix M_" + std::to_string(i) + "," +
                                           std::to_string(j) + " are not constant");
            }
            long long small = 0;
            first = true;
            for (unsigned y : s.col_orbits[j]) {
                long long sum = 0;
                for (unsigned w : s.row_orbits[i]) sum += m(w, y);
                if (first) { small = sum; first = false; }
                else if (sum != small)
                    throw validation_error("column sums in submatrix M_" + std::to_string(i) +
                                           "," + std::to_string(j) + " are not constant");
            }
            s.R(i, j) = gamma;
            s.C(i, j) = small;
        }
    return s;
}

GfOrbitStructure orbit_structure(const GfMatrix& m, const std::vector<PermAutGenerator>& gens) {
    for (const auto& g : gens)
        if (!verify_generator(m, g))
            throw validation_error("generator is not an automorphism of the matrix");
    const Field& f = m.field();
    unsigned n = static_cast<unsigned>(m.rows());
    std::vector<const std::vector<unsigned>*> rmaps, cmaps;
    for (const auto& g : gens) {
        rmaps.push_back(&g.row);
        cmaps.push_back(&g.col);
    }
    GfOrbitStructure s(f);
    s.row_orbits = orbits_of(n, rmaps);
    s.col_orbits = orbits_of(n, cmaps);
    if (s.row_orbits.size() != s.col_orbits.size())
        throw validation_error("row and column orbit counts differ");
    for (const auto& o : s.row_orbits) s.row_sizes.push_back(static_cast<unsigned>(o.size()));
    for (const auto& o : s.col_orbits) s.col_sizes.push_back(static_cast<unsigned>(o.size()));
    unsigned t = s.t();
    s.R = GfMatrix(f, t, t);
    s.C = GfMatrix(f, t, t);
    for (unsigned i = 0; i < t; ++i)
        for (unsigned j = 0; j < t; ++j) {
            Fel gamma = 0;
            bool first = true;
            for (unsigned x : s.row_orbits[i]) {
                Fel sum = 0;
                for (unsigned z : s.col_orbits[j]) sum = f.add(sum, m(x, z));
                if (first) { gamma = sum; first = false; }
                else if (sum != gamma)
                    throw validation_error("row sums in GF submatrix are not constant");
            }
            Fel small = 0;
            first = true;
            for (unsigned y : s.col_orbits[j]) {
                Fel sum = 0;
                for (unsigned w : s.row_orbits[i]) sum = f.add(sum, m(w, y));
                if (first) { small = sum; first = false; }
                else if (sum != small)
                    throw validation_error("column sums in GF submatrix are not constant");
            }
            s.R(i, j) = gamma;
            s.C(i, j) = small;
        }
    return s;
}

bool verify_delta_identity(const IntMatrix& m, const OrbitStructure& s) {
    QMatrix inv = QMatrix(m).inverse();  // throws on singular input
    QMatrix n_mat = inv.transpose();
    unsigned t = s.t();
    // column orbit matrix of N = (M^{-1})^T, rational entries
    QMatrix gamma(t, t);
    for (unsigned i = 0; i < t; ++i)
        for (unsigned j = 0; j < t; ++j) {
            mpq_class val;
            bool first = true;
            for (unsigned y : s.col_orbits[j]) {
                mpq_class sum = 0;
                for (unsigned w : s.row_orbits[i]) sum += n_mat(w, y);
                if (first) { val = sum; first = false; }
                else if (sum != val)
                    throw validation_error("(M^-1)^T column sums not constant on orbits");
            }
            gamma(i, j) = val;
        }
    for (unsigned i = 0; i < t; ++i)
        for (unsigned sdx = 0; sdx < t; ++sdx) {
            mpq_class acc = 0;
            for (unsigned j = 0; j < t; ++j) acc += mpq_class(s.R(i, j)) * gamma(sdx, j);
            if (acc != (i == sdx ? 1 : 0)) return false;
        }
    return true;
}

bool verify_weighted_orthogonality(const WeighingMatrix& w, const OrbitStructure& s) {
    unsigned t = s.t();
    for (unsigned i = 0; i < t; ++i)
        for (unsigned sdx = 0; sdx < t; ++sdx) {
            mpq_class acc = 0;
            for (unsigned j = 0; j < t; ++j)
                acc += mpq_class(s.row_sizes[sdx], s.col_sizes[j]) *
                       mpq_class(s.R(i, j) * s.R(sdx, j));
            mpq_class want = (i == sdx) ? mpq_class(static_cast<long>(w.m)) : mpq_class(0);
            if (acc != want) return false;
        }
    return true;
}

bool skew_orbit_check(const WeighingMatrix& w, const OrbitStructure& s) {
    if (!w.is_skew) throw std::invalid_argument("skew_orbit_check needs a skew weighing matrix");
    if (!s.equal_lengths())
        throw validation_error("orbit lengths are not all equal");
    if (!s.aligned())
        throw validation_error("row and column orbits are not aligned (r_s in R_i iff c_s in C_i)");
    IntMatrix rt = s.R.transpose();
    unsigned t = s.t();
    for (unsigned i = 0; i < t; ++i)
        for (unsigned j = 0; j < t; ++j)
            if (rt(i, j) != -s.R(i, j)) return false;
    return true;
}

std::vector<PermAutGenerator> paut_search(const WeighingMatrix& wm, unsigned max_n) {
    unsigned n = wm.n;
    if (n > max_n)
        throw std::invalid_argument("paut_search: order " + std::to_string(n) +
                                    " exceeds bound " + std::to_string(max_n));
    const IntMatrix& w = wm.w;
    long long m = wm.m;
    std::vector<unsigned> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0u);
    std::vector<PermAutGenerator> found;

    std::vector<unsigned> sigma_inv(n);
    do {
        for (unsigned i = 0; i < n; ++i) sigma_inv[sigma[i]] = i;
        // T = W^T P^{-1} W = m Q^T; entries must be 0 or m, one m per row/col.
        std::vector<unsigned> tau(n, n);
        std::vector<bool> row_used(n, false);
        bool ok = true;
        for (unsigned j = 0; j < n && ok; ++j) {
            unsigned hit = n;
            for (unsigned i = 0; i < n && ok; ++i) {
                long long tij = 0;
                for (unsigned t = 0; t < n; ++t) tij += w(t, i) * w(sigma_inv[t], j);
                if (tij == m) {
                    if (hit != n || row_used[i]) ok = false;
                    hit = i;
                } else if (tij != 0) {
                    ok = false;
                }
            }
            if (hit == n) ok = false;
            if (ok) {
                tau[j] = hit;
                row_used[hit] = true;
            }
        }
        if (!ok) continue;
        PermAutGenerator g{sigma, tau};
        if (verify_generator(w, g)) found.push_back(std::move(g));
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    std::sort(found.begin(), found.end());
    return found;
}

std::vector<PermAutGenerator> read_group(std::istream& in) {
    std::vector<std::string> tokens;
    {
        std::string line;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream ls(line);
            std::string tok;
            while (ls >> tok) tokens.push_back(tok);
        }
    }
    std::size_t pos = 0;
    auto next = [&]() -> long long {
        if (pos >= tokens.size()) throw parse_error("group file truncated");
        try {
            return std::stoll(tokens[pos++]);
        } catch (...) {
            throw parse_error("bad token in group file: '" + tokens[pos - 1] + "'");
        }
    };
    long long n_gens = next(), n = next();
    if (n_gens < 0 || n <= 0) throw parse_error("bad group file header");
    std::vector<PermAutGenerator> gens;
    for (long long g = 0; g < n_gens; ++g) {
        PermAutGenerator gen;
        gen.row.resize(n);
        gen.col.resize(n);
        for (auto* perm : {&gen.row, &gen.col})
            for (long long i = 0; i < n; ++i) {
                long long img = next();
                if (img < 1 || img > n)
                    throw parse_error("image " + std::to_string(img) + " out of 1.." +
                                      std::to_string(n));
                (*perm)[i] = static_cast<unsigned>(img - 1);
            }
        if (!is_permutation(gen.row) || !is_permutation(gen.col))
            throw validation_error("group file contains a non-permutation image list");
        gens.push_back(std::move(gen));
    }
    return gens;
}

std::vector<PermAutGenerator> read_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open group file " + path);
    return read_group(in);
}

void write_group(std::ostream& out, const std::vector<PermAutGenerator>& gens, unsigned n) {
    out << gens.size() << ' ' << n << '\n';
    for (const auto& g : gens) {
        for (unsigned i = 0; i < n; ++i) out << (i ? " " : "") << g.row[i] + 1;
        out << '\n';
        for (unsigned i = 0; i < n; ++i) out << (i ? " " : "") << g.col[i] + 1;
        out << '\n';
    }
}

void write_group_file(const std::string& path, const std::vector<PermAutGenerator>& gens,
                      unsigned n) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open " + path + " for writing");
    write_group(out, gens, n);
}

}  // namespace wmc
