#pragma once

#include "liaison/ideal.hpp"

namespace liaison {

using PolyMatrix = std::vector<std::vector<Polynomial>>;  // [row][col]

inline int matrix_rows(const PolyMatrix& m) { return static_cast<int>(m.size()); }
inline int matrix_cols(const PolyMatrix& m) {
    return m.empty() ? 0 : static_cast<int>(m[0].size());
}

inline PolyMatrix matrix_product(const PolyMatrix& a, const PolyMatrix& b, const RingPtr& ring) {
    PolyMatrix out(matrix_rows(a), std::vector<Polynomial>(matrix_cols(b), Polynomial::zero(ring)));
    for (int r = 0; r < matrix_rows(a); ++r)
        for (int c = 0; c < matrix_cols(b); ++c)
            for (int k = 0; k < matrix_cols(a); ++k)
                out[r][c] = out[r][c] + a[r][k] * b[k][c];
    return out;
}

inline bool matrix_is_zero(const PolyMatrix& m) {
    for (const auto& row : m)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

inline PolyMatrix transpose(const PolyMatrix& m, const RingPtr& ring) {
    PolyMatrix out(matrix_cols(m), std::vector<Polynomial>(matrix_rows(m), Polynomial::zero(ring)));
    for (int r = 0; r < matrix_rows(m); ++r)
        for (int c = 0; c < matrix_cols(m); ++c) out[c][r] = m[r][c];
    return out;
}

/// Graded Betti numbers plus the derived statistics the linkage arguments use.
struct BettiTable {
    std::map<std::pair<int, int>, long> entries;  // (homological i, twist j) -> beta
    int grade = 0;

    long beta(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
    int proj_dim() const {
        int pd = 0;
        for (const auto& [k, v] : entries)
            if (v > 0) pd = std::max(pd, k.first);
        return pd;
    }
    long total(int i) const {
        long t = 0;
        for (const auto& [k, v] : entries)
            if (k.first == i) t += v;
        return t;
    }
    std::vector<long> totals() const {
        std::vector<long> t(proj_dim() + 1, 0);
        for (const auto& [k, v] : entries) t[k.first] += v;
        return t;
    }
    long deviation() const { return total(1) - grade; }
    long cm_type() const { return total(proj_dim()); }
    int max_socle_shift() const {
        int pd = proj_dim(), m = 0;
        for (const auto& [k, v] : entries)
            if (k.first == pd && v > 0) m = std::max(m, k.second);
        return m;
    }

    /// Spec equality: identical (i, j) -> beta maps, differentials ignored.
    friend bool operator==(const BettiTable& a, const BettiTable& b) {
        auto strip = [](const BettiTable& t) {
            std::map<std::pair<int, int>, long> m;
            for (const auto& [k, v] : t.entries)
                if (v != 0) m[k] = v;
            return m;
        };
        return strip(a) == strip(b);
    }
};

/// A chain of graded free modules F_0 <- F_1 <- ... with differentials
/// diffs[i] = d_{i+1} : F_{i+1} -> F_i (rows indexed by F_i).
struct GradedResolution {
    RingPtr ring;
    std::vector<FreeModule> modules;
    std::vector<PolyMatrix> diffs;
    bool minimal = false;

    int length() const { return static_cast<int>(modules.size()) - 1; }
    const FreeModule& module(int i) const { return modules[i]; }
    const PolyMatrix& diff(int i) const { return diffs[i - 1]; }  // d_i

    BettiTable betti() const {
        BettiTable t;
        for (int i = 0; i < static_cast<int>(modules.size()); ++i)
            for (int s : modules[i].shifts) ++t.entries[{i, s}];
        return t;
    }

    /// d_{i-1} ∘ d_i = 0 for all i, and every entry homogeneous of the degree
    /// dictated by the shifts.
    bool is_complex() const {
        for (std::size_t i = 0; i + 1 < diffs.size(); ++i)
            if (!matrix_is_zero(matrix_product(diffs[i], diffs[i + 1], ring))) return false;
        for (std::size_t i = 0; i < diffs.size(); ++i) {
            const auto& src = modules[i + 1];
            const auto& dst = modules[i];
            for (int r = 0; r < dst.rank(); ++r)
                for (int c = 0; c < src.rank(); ++c) {
                    const Polynomial& e = diffs[i][r][c];
                    if (e.is_zero()) continue;
                    int want = src.shifts[c] - dst.shifts[r];
                    if (!e.is_homogeneous() || e.degree() != want) return false;
                }
        }
        return true;
    }

    bool has_constant_entry() const {
        for (const auto& m : diffs)
            for (const auto& row : m)
                for (const auto& e : row)
                    if (!e.is_zero() && e.degree() == 0) return true;
        return false;
    }
};

/// Minimal generating set of the submodule generated by vs in F, selected
/// from vs in list order within ascending degree. Degreewise linear algebra:
/// a degree-d candidate is kept iff it lies outside the span of monomial
/// multiples of the kept lower-degree generators plus the kept same-degree
/// ones (the kept set generates the same submodule as all candidates seen).
inline std::vector<ModVec> minimal_module_generators(const std::vector<ModVec>& vs,
                                                     const FreeModule& f, const RingPtr& ring) {
    std::vector<int> degrees;
    for (const auto& v : vs)
        if (!v.is_zero()) degrees.push_back(v.degree(f));
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

    // module monomial basis of F in degree d: pairs (component, monomial)
    auto module_basis = [&](int d) {
        std::vector<std::pair<int, Monomial>> basis;
        for (int c = 0; c < f.rank(); ++c) {
            int e = d - f.shifts[c];
            if (e < 0) continue;
            for (const auto& m : monomials_of_degree(ring->nvars(), e, ring->order()))
                basis.emplace_back(c, m);
        }
        return basis;
    };

    std::vector<ModVec> out;
    for (int d : degrees) {
        auto basis = module_basis(d);
        std::map<std::pair<int, ExpVec>, std::size_t> index;
        for (std::size_t i = 0; i < basis.size(); ++i)
            index[{basis[i].first, basis[i].second.exponents()}] = i;
        auto densify = [&](const ModVec& v) {
            FpVec dense(basis.size(), 0);
            for (const auto& t : v.terms())
                dense[index.at({t.comp, t.mono.exponents()})] = t.coeff.value();
            return dense;
        };
        RowSpan span(basis.size(), ring->modulus());
        for (const auto& v : out) {
            int e = d - v.degree(f);
            if (e <= 0) continue;
            for (const auto& m : monomials_of_degree(ring->nvars(), e, ring->order()))
                span.add(densify(v.times_term(ring->one(), m)));
        }
        for (const auto& v : vs) {
            if (v.is_zero() || v.degree(f) != d) continue;
            if (span.add(densify(v))) out.push_back(v);
        }
    }
    return out;
}

struct SyzygyResult {
    FreeModule module;   // F with one shift per syzygy column
    PolyMatrix matrix;   // columns generate ker of the presented map
};

/// Columns of `presentation` live in the graded free module `rows`; returns a
/// minimal generating set of their syzygy module. When `degree_cap` is set,
/// the syzygy module must be known to be generated in degrees <= cap (true
/// with cap = top + i for step-i syzygies of an m-primary quotient whose
/// Hilbert function vanishes beyond top, by the Koszul Tor bound).
inline SyzygyResult syzygies(const PolyMatrix& presentation, const FreeModule& rows,
                             const RingPtr& ring, std::optional<int> degree_cap = std::nullopt) {
    int ncols = matrix_cols(presentation);
    std::vector<ModVec> cols;
    for (int c = 0; c < ncols; ++c) {
        std::vector<Polynomial> col;
        for (int r = 0; r < matrix_rows(presentation); ++r) col.push_back(presentation[r][c]);
        ModVec v = ModVec::from_column(col, ring);
        if (!v.is_homogeneous(rows))
            throw input_error("presentation column " + std::to_string(c) +
                              " is not homogeneous for the given grading");
        cols.push_back(std::move(v));
    }
    FreeModule colmod;
    for (const auto& v : cols) colmod.shifts.push_back(v.degree(rows));

    TrackedGroebner t = tracked_groebner(cols, rows, degree_cap.value_or(INT_MAX));
    std::vector<ModVec> syz;
    for (const auto& s : t.syzygies) {
        ModVec v = ModVec::from_column(s, ring);
        if (degree_cap && !v.is_zero() && v.degree(colmod) > *degree_cap) continue;
        syz.push_back(std::move(v));
    }
    syz = minimal_module_generators(syz, colmod, ring);

    SyzygyResult out;
    for (const auto& s : syz) out.module.shifts.push_back(s.degree(colmod));
    out.matrix.assign(ncols, std::vector<Polynomial>(syz.size(), Polynomial::zero(ring)));
    for (std::size_t c = 0; c < syz.size(); ++c) {
        auto col = syz[c].to_column(ncols);
        for (int r = 0; r < ncols; ++r) out.matrix[r][c] = col[r];
    }
    return out;
}

/// Graded free resolution of R/I by iterated syzygies. Each step takes a
/// minimal generating set of the kernel, so the result is minimal.
inline GradedResolution free_resolution(const Ideal& ideal) {
    if (ideal.is_unit()) throw input_error("free resolution requires a proper ideal");
    const RingPtr& ring = ideal.ring();
    GradedResolution res;
    res.ring = ring;
    res.modules.push_back(FreeModule{{0}});
    if (ideal.is_zero_ideal()) {
        res.minimal = true;
        return res;
    }

    const auto& gens = ideal.minimal_generators();
    FreeModule f1;
    PolyMatrix d1(1);
    for (const auto& g : gens) {
        f1.shifts.push_back(g.degree());
        d1[0].push_back(g);
    }
    res.modules.push_back(f1);
    res.diffs.push_back(d1);

    // Tor degree bound for m-primary quotients: beta_{i,j} != 0 forces
    // (R/I)_{j-i} != 0, so step-i syzygies live in degrees <= top + i.
    std::optional<int> top;
    if (ideal.is_m_primary()) top = ideal.socle_bound() - 1;

    while (true) {
        const FreeModule& prev = res.modules[res.modules.size() - 2];
        std::optional<int> cap;
        if (top) cap = *top + res.length() + 1;
        SyzygyResult s = syzygies(res.diffs.back(), prev, ring, cap);
        if (s.module.rank() == 0) break;
        res.modules.push_back(s.module);
        res.diffs.push_back(s.matrix);
        if (res.length() > ring->nvars())
            throw internal_error("resolution exceeded the global dimension");
    }
    res.minimal = true;
    return res;
}

/// Cancels one constant entry at (r, c) of d_i (1-based homological index).
inline void cancel_unit(GradedResolution& res, int i, int r, int c) {
    const RingPtr& ring = res.ring;
    PolyMatrix& d = res.diffs[i - 1];
    Fp u = d[r][c].lead_coeff();
    Fp uinv = u.inverse();

    // adjust and drop row c of d_{i+1}
    if (i < res.length()) {
        PolyMatrix& up = res.diffs[i];
        for (int col = 0; col < matrix_cols(up); ++col) {
            Polynomial adjusted = up[c][col];
            for (int cp = 0; cp < matrix_cols(d); ++cp) {
                if (cp == c) continue;
                adjusted = adjusted + d[r][cp].times_scalar(uinv) * up[cp][col];
            }
            if (!adjusted.is_zero())
                throw internal_error("trim of a non-exact complex position");
        }
        up.erase(up.begin() + c);
    }

    // Gaussian update of d_i, then drop row r and column c
    PolyMatrix nd;
    for (int rp = 0; rp < matrix_rows(d); ++rp) {
        if (rp == r) continue;
        std::vector<Polynomial> row;
        for (int cp = 0; cp < matrix_cols(d); ++cp) {
            if (cp == c) continue;
            row.push_back(d[rp][cp] - d[r][cp].times_scalar(uinv) * d[rp][c]);
        }
        nd.push_back(std::move(row));
    }
    res.diffs[i - 1] = std::move(nd);

    // drop column r of d_{i-1}
    if (i >= 2) {
        PolyMatrix& down = res.diffs[i - 2];
        for (auto& row : down) row.erase(row.begin() + r);
    }

    res.modules[i].shifts.erase(res.modules[i].shifts.begin() + c);
    res.modules[i - 1].shifts.erase(res.modules[i - 1].shifts.begin() + r);
    (void)ring;
}

/// Unit-entry cancellation to a minimal complex: scan differentials from the
/// highest homological index down, cancel the first unit found, repeat.
inline GradedResolution minimalize(GradedResolution res) {
    bool found = true;
    while (found) {
        found = false;
        for (int i = res.length(); i >= 1 && !found; --i) {
            const PolyMatrix& d = res.diffs[i - 1];
            for (int c = 0; c < matrix_cols(d) && !found; ++c)
                for (int r = 0; r < matrix_rows(d) && !found; ++r)
                    if (!d[r][c].is_zero() && d[r][c].degree() == 0) {
                        cancel_unit(res, i, r, c);
                        found = true;
                    }
        }
    }
    while (!res.modules.empty() && res.modules.back().rank() == 0) {
        res.modules.pop_back();
        if (!res.diffs.empty()) res.diffs.pop_back();
    }
    res.minimal = true;
    return res;
}

inline BettiTable betti_table(const Ideal& ideal) {
    GradedResolution res = free_resolution(ideal);
    BettiTable t = res.betti();
    t.grade = ideal.grade();
    return t;
}

} // namespace liaison
