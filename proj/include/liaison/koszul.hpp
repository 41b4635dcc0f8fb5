#pragma once

#include "liaison/resolution.hpp"

namespace liaison {

struct KoszulBetti {
    BettiTable table;
    int j_max = 0;
    bool complete = true;  // false when nonzero entries touch the degree cap
};

/// Independent Betti oracle: beta_{i,j} is the degree-j dimension of the
/// homology of the Koszul complex on the variables tensored with R/I,
/// computed by dense rank computations on standard-monomial bases. No
/// syzygy machinery is involved.
inline KoszulBetti koszul_betti_oracle(const Ideal& ideal, int j_max) {
    const RingPtr& ring = ideal.ring();
    const int n = ring->nvars();
    const std::uint32_t p = ring->modulus();

    // standard monomial bases of (R/I)_e for e <= j_max, with index lookup
    std::vector<std::vector<Monomial>> std_basis(j_max + 1);
    std::vector<std::map<ExpVec, std::size_t>> std_index(j_max + 1);
    for (int e = 0; e <= j_max; ++e) {
        std_basis[e] = ideal.standard_monomials(e);
        for (std::size_t i = 0; i < std_basis[e].size(); ++i)
            std_index[e][std_basis[e][i].exponents()] = i;
    }
    // multiplication maps x_v : (R/I)_e -> (R/I)_{e+1} as dense columns
    // mul[e][v][k] = coefficient vector of NF(x_v * m_k)
    std::vector<std::vector<std::vector<FpVec>>> mul(j_max);
    for (int e = 0; e + 1 <= j_max; ++e) {
        mul[e].assign(n, {});
        for (int v = 0; v < n; ++v) {
            mul[e][v].reserve(std_basis[e].size());
            for (const auto& m : std_basis[e]) {
                Polynomial xm =
                    Polynomial::monomial(ring, m * Monomial::variable(v, n), ring->one());
                Polynomial nf = ideal.reduce(xm, false).remainder;
                FpVec col(std_basis[e + 1].size(), 0);
                for (const auto& t : nf.terms())
                    col[std_index[e + 1].at(t.mono.exponents())] = t.coeff.value();
                mul[e][v].push_back(std::move(col));
            }
        }
    }

    // subsets of {0..n-1} of size i, sorted, with index lookup
    std::vector<std::vector<std::vector<int>>> subsets(n + 1);
    std::vector<std::map<std::vector<int>, std::size_t>> subset_index(n + 1);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) s.push_back(v);
        subsets[s.size()].push_back(s);
    }
    for (int i = 0; i <= n; ++i) {
        std::sort(subsets[i].begin(), subsets[i].end());
        for (std::size_t k = 0; k < subsets[i].size(); ++k)
            subset_index[i][subsets[i][k]] = k;
    }

    // the Koszul differential K_i -> K_{i-1} in homogeneous degree j,
    // as a list of matrix rows (row space = K_{i-1} degree-j basis)
    auto koszul_rank = [&](int i, int j) -> long {
        if (i < 1 || i > n) return 0;
        int e_src = j - i, e_dst = j - i + 1;
        if (e_src < 0 || e_dst > j_max) return 0;
        std::size_t src_monos = std_basis[e_src].size();
        std::size_t dst_monos = std_basis[e_dst].size();
        std::size_t nrows = subsets[i - 1].size() * dst_monos;
        std::size_t ncols = subsets[i].size() * src_monos;
        if (nrows == 0 || ncols == 0) return 0;
        std::vector<FpVec> rows(nrows, FpVec(ncols, 0));
        for (std::size_t sk = 0; sk < subsets[i].size(); ++sk) {
            const auto& s = subsets[i][sk];
            for (std::size_t pos = 0; pos < s.size(); ++pos) {
                int v = s[pos];
                std::vector<int> rest;
                for (std::size_t q = 0; q < s.size(); ++q)
                    if (q != pos) rest.push_back(s[q]);
                std::size_t rk = subset_index[i - 1].at(rest);
                bool negative = (pos % 2 == 1);
                for (std::size_t mk = 0; mk < src_monos; ++mk) {
                    const FpVec& img = mul[e_src][v][mk];
                    std::size_t col = sk * src_monos + mk;
                    for (std::size_t d = 0; d < dst_monos; ++d) {
                        if (img[d] == 0) continue;
                        std::uint32_t val = negative ? p - img[d] : img[d];
                        std::size_t row = rk * dst_monos + d;
                        rows[row][col] = (rows[row][col] + val) % p;
                    }
                }
            }
        }
        RowSpan span(ncols, p);
        long rank = 0;
        // rank of the matrix = rank of its row space
        for (auto& r : rows)
            if (span.add(std::move(r))) ++rank;
        return rank;
    };

    KoszulBetti out;
    out.j_max = j_max;
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= j_max; ++j) {
            int e = j - i;
            if (e < 0) continue;
            long dim = static_cast<long>(subsets[i].size()) *
                       static_cast<long>(std_basis[e].size());
            if (dim == 0) continue;
            long rank_out = koszul_rank(i, j);
            long rank_in = koszul_rank(i + 1, j);
            long beta = dim - rank_out - rank_in;
            if (beta < 0) throw internal_error("negative Koszul homology dimension");
            if (beta > 0) {
                out.table.entries[{i, j}] = beta;
                if (j == j_max && i >= 0) out.complete = false;
            }
        }
    }
    out.table.grade = ideal.grade();
    return out;
}

/// Default oracle cap: sum of the three largest generator degrees plus the
/// number of variables.
inline int koszul_default_cap(const Ideal& ideal) {
    std::vector<int> degs;
    for (const auto& g : ideal.generators()) degs.push_back(g.degree());
    std::sort(degs.rbegin(), degs.rend());
    int s = 0;
    for (std::size_t i = 0; i < degs.size() && i < 3; ++i) s += degs[i];
    return s + ideal.ring()->nvars();
}

} // namespace liaison
