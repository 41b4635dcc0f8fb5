#pragma once

#include <algorithm>
#include <boost/container/small_vector.hpp>
#include <numeric>
#include <vector>

#include "liaison/field.hpp"

namespace liaison {

/// Exponent vector with inline storage for the common small-N case.
using ExpVec = boost::container::small_vector<int, 6>;

/// Monomial as an exponent vector of fixed length nvars.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int nvars) : e_(nvars, 0) {}
    explicit Monomial(ExpVec exps) : e_(std::move(exps)) {
        for (int v : e_)
            if (v < 0) throw input_error("negative exponent in monomial");
    }
    explicit Monomial(std::initializer_list<int> exps) : e_(exps) {
        for (int v : e_)
            if (v < 0) throw input_error("negative exponent in monomial");
    }

    int nvars() const { return static_cast<int>(e_.size()); }
    int exponent(int i) const { return e_[i]; }
    const ExpVec& exponents() const { return e_; }
    int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
    bool is_one() const {
        return std::all_of(e_.begin(), e_.end(), [](int v) { return v == 0; });
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r(a.nvars());
        for (int i = 0; i < a.nvars(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
        return r;
    }

    bool divides(const Monomial& b) const {
        for (int i = 0; i < nvars(); ++i)
            if (e_[i] > b.e_[i]) return false;
        return true;
    }

    /// this / b, assuming b divides this.
    Monomial quotient(const Monomial& b) const {
        Monomial r(nvars());
        for (int i = 0; i < nvars(); ++i) {
            r.e_[i] = e_[i] - b.e_[i];
            if (r.e_[i] < 0) throw internal_error("monomial quotient not exact");
        }
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.nvars());
        for (int i = 0; i < a.nvars(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
        return r;
    }
    friend Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r(a.nvars());
        for (int i = 0; i < a.nvars(); ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
        return r;
    }
    friend bool coprime(const Monomial& a, const Monomial& b) {
        for (int i = 0; i < a.nvars(); ++i)
            if (a.e_[i] > 0 && b.e_[i] > 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

    static Monomial variable(int i, int nvars, int power = 1) {
        Monomial r(nvars);
        r.e_[i] = power;
        return r;
    }

private:
    ExpVec e_;
};

/// Graded monomial order: grevlex (default) or grlex, with a variable
/// precedence permutation. precedence[0] is the most significant variable.
class MonomialOrder {
public:
    enum class Kind { grevlex, grlex };

    MonomialOrder() = default;
    explicit MonomialOrder(Kind kind, std::vector<int> precedence = {})
        : kind_(kind), prec_(std::move(precedence)) {}

    static MonomialOrder grevlex(int nvars) {
        return MonomialOrder(Kind::grevlex, identity(nvars));
    }
    static MonomialOrder grlex(int nvars) {
        return MonomialOrder(Kind::grlex, identity(nvars));
    }

    Kind kind() const { return kind_; }
    const std::vector<int>& precedence() const { return prec_; }

    /// -1 if a < b, 0 if equal, +1 if a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db ? -1 : 1;
        if (kind_ == Kind::grlex) {
            for (int k = 0; k < static_cast<int>(prec_.size()); ++k) {
                int v = prec_[k];
                if (a.exponent(v) != b.exponent(v))
                    return a.exponent(v) < b.exponent(v) ? -1 : 1;
            }
            return 0;
        }
        // grevlex: scan from the least significant variable; the monomial
        // with the smaller exponent at the first difference is the larger.
        for (int k = static_cast<int>(prec_.size()) - 1; k >= 0; --k) {
            int v = prec_[k];
            if (a.exponent(v) != b.exponent(v))
                return a.exponent(v) < b.exponent(v) ? 1 : -1;
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind_ == b.kind_ && a.prec_ == b.prec_;
    }

private:
    static std::vector<int> identity(int n) {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        return p;
    }
    Kind kind_ = Kind::grevlex;
    std::vector<int> prec_;
};

/// Monomials of total degree d in nvars variables, sorted descending in the
/// given order. Deterministic basis for all degreewise linear algebra.
inline std::vector<Monomial> monomials_of_degree(int nvars, int d, const MonomialOrder& order) {
    std::vector<Monomial> out;
    ExpVec e(nvars, 0);
    // enumerate all exponent vectors summing to d
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == nvars - 1) {
            e[pos] = rem;
            out.emplace_back(e);
            return;
        }
        for (int v = rem; v >= 0; --v) {
            e[pos] = v;
            self(self, pos + 1, rem - v);
        }
        e[pos] = 0;
    };
    if (nvars == 0) {
        if (d == 0) out.emplace_back(e);
        return out;
    }
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
    return out;
}

} // namespace liaison
