#pragma once

#include <map>
#include <optional>

#include "liaison/polynomial.hpp"

namespace liaison {

using FpVec = std::vector<std::uint32_t>;

/// Incremental row-echelon span over F_p. Rows are kept reduced; optional
/// tracking records each stored row as a combination of the added vectors.
class RowSpan {
public:
    RowSpan(std::size_t width, std::uint32_t p, bool track = false)
        : width_(width), p_(p), track_(track) {}

    std::size_t rank() const { return rows_.size(); }
    std::size_t width() const { return width_; }

    /// Reduces v against the span in place; returns the combination of
    /// previously added vectors used (empty when not tracking).
    FpVec reduce(FpVec& v) const {
        FpVec used(track_ ? added_ : 0, 0);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            std::uint32_t c = v[pivots_[i]];
            if (c == 0) continue;
            sub_scaled(v, rows_[i], c);
            if (track_) add_scaled_into(used, history_[i], c);
        }
        return used;
    }

    /// Adds v to the span. Returns true if the rank grew.
    /// Invariant: rows_[i] == sum_j history_[i][j] * (j-th added vector).
    bool add(FpVec v) {
        FpVec hist;
        if (track_) {
            hist.assign(added_ + 1, 0);
            hist[added_] = 1;
        }
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            std::uint32_t c = v[pivots_[i]];
            if (c == 0) continue;
            sub_scaled(v, rows_[i], c);
            if (track_) {
                history_[i].resize(added_ + 1, 0);
                sub_scaled(hist, history_[i], c);
            }
        }
        ++added_;
        std::size_t piv = first_nonzero(v);
        if (piv == width_) return false;
        // normalize pivot to 1
        std::uint64_t inv = Fp(v[piv], p_).inverse().value();
        for (auto& x : v) x = static_cast<std::uint32_t>(x * inv % p_);
        if (track_)
            for (auto& x : hist) x = static_cast<std::uint32_t>(x * inv % p_);
        // back-substitute into existing rows so the basis stays fully reduced
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            std::uint32_t c = rows_[i][piv];
            if (c == 0) continue;
            sub_scaled(rows_[i], v, c);
            if (track_) {
                history_[i].resize(added_, 0);
                sub_scaled(history_[i], hist, c);
            }
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(piv);
        if (track_) history_.push_back(std::move(hist));
        return true;
    }

    bool contains(FpVec v) const {
        reduce(v);
        return first_nonzero(v) == width_;
    }

    /// Coordinates of v over the added vectors, if v lies in the span.
    std::optional<FpVec> coordinates(FpVec v) const {
        if (!track_) throw internal_error("RowSpan built without tracking");
        FpVec used = reduce(v);
        if (first_nonzero(v) != width_) return std::nullopt;
        used.resize(added_, 0);
        return used;
    }

    const std::vector<FpVec>& rows() const { return rows_; }

private:
    static std::size_t first_nonzero(const FpVec& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) return i;
        return v.size();
    }
    void sub_scaled(FpVec& a, const FpVec& b, std::uint32_t c) const {
        // a -= c * b
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t t = a[i] + static_cast<std::uint64_t>(p_ - c) * b[i] % p_;
            a[i] = static_cast<std::uint32_t>(t >= p_ ? t - p_ : t);
        }
    }
    void add_scaled_into(FpVec& a, const FpVec& b, std::uint32_t c) const {
        if (a.size() < b.size()) a.resize(b.size(), 0);
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::uint64_t t = a[i] + static_cast<std::uint64_t>(c) * b[i] % p_;
            a[i] = static_cast<std::uint32_t>(t >= p_ ? t - p_ : t);
        }
    }

    std::size_t width_;
    std::uint32_t p_;
    bool track_;
    std::size_t added_ = 0;
    std::vector<FpVec> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<FpVec> history_;
};

/// Kernel basis of the linear map x -> A x, where the rows of A are given.
/// Returns vectors of length ncols.
inline std::vector<FpVec> kernel_basis(const std::vector<FpVec>& rows, std::size_t ncols,
                                       std::uint32_t p) {
    // rref of A
    std::vector<FpVec> m = rows;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
        std::size_t sel = m.size();
        for (std::size_t i = r; i < m.size(); ++i)
            if (m[i][c] != 0) { sel = i; break; }
        if (sel == m.size()) continue;
        std::swap(m[r], m[sel]);
        std::uint64_t inv = Fp(m[r][c], p).inverse().value();
        for (auto& x : m[r]) x = static_cast<std::uint32_t>(x * inv % p);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            std::uint64_t f = m[i][c];
            for (std::size_t j = 0; j < ncols; ++j) {
                std::uint64_t t = m[i][j] + (p - f) * m[r][j] % p;
                m[i][j] = static_cast<std::uint32_t>(t >= p ? t - p : t);
            }
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::vector<FpVec> ker;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        FpVec v(ncols, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) {
            std::uint32_t val = m[i][free];
            v[pivot_col[i]] = val == 0 ? 0 : p - val;
        }
        ker.push_back(std::move(v));
    }
    return ker;
}

/// The degree-d monomial basis of R, with index lookup and conversions
/// between polynomials and dense coefficient vectors.
class DegreeBasis {
public:
    DegreeBasis(const RingPtr& ring, int d) : ring_(ring), degree_(d) {
        if (d >= 0) monos_ = monomials_of_degree(ring->nvars(), d, ring->order());
        for (std::size_t i = 0; i < monos_.size(); ++i) index_[monos_[i].exponents()] = i;
    }

    int degree() const { return degree_; }
    std::size_t size() const { return monos_.size(); }
    const std::vector<Monomial>& monomials() const { return monos_; }

    std::size_t index_of(const Monomial& m) const {
        auto it = index_.find(m.exponents());
        if (it == index_.end()) throw internal_error("monomial outside degree basis");
        return it->second;
    }

    FpVec densify(const Polynomial& f) const {
        FpVec v(monos_.size(), 0);
        for (const auto& t : f.terms()) {
            if (t.mono.degree() != degree_)
                throw internal_error("densify: polynomial degree mismatch");
            v[index_of(t.mono)] = t.coeff.value();
        }
        return v;
    }

    Polynomial polynomial(const FpVec& v) const {
        std::vector<Term> terms;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) terms.push_back({monos_[i], ring_->element(v[i])});
        return Polynomial(ring_, std::move(terms));
    }

private:
    RingPtr ring_;
    int degree_;
    std::vector<Monomial> monos_;
    std::map<ExpVec, std::size_t> index_;
};

inline long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

/// dim_k R_d for R a polynomial ring in n variables.
inline long dim_rd(int nvars, int d) {
    if (d < 0) return 0;
    return binomial(d + nvars - 1, nvars - 1);
}

} // namespace liaison
