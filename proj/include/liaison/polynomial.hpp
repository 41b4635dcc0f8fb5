#pragma once

#include <cassert>
#include <optional>
#include <sstream>

#include "liaison/ring.hpp"

namespace liaison {

struct Term {
    Monomial mono;
    Fp coeff;
};

/// Homogeneous-friendly sparse polynomial: terms strictly descending in the
/// ring's monomial order, no zero coefficients, no duplicate monomials.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr ring, std::vector<Term> terms)
        : ring_(std::move(ring)), terms_(std::move(terms)) {
        normalize();
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const Term& lead() const {
        if (terms_.empty()) throw internal_error("lead term of zero polynomial");
        return terms_.front();
    }
    const Monomial& lead_monomial() const { return lead().mono; }
    Fp lead_coeff() const { return lead().coeff; }

    /// Total degree of the lead term (== degree of every term if homogeneous).
    int degree() const { return is_zero() ? -1 : lead().mono.degree(); }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = terms_.front().mono.degree();
        for (const auto& t : terms_)
            if (t.mono.degree() != d) return false;
        return true;
    }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
    }
    /// Nonzero constant, i.e. a unit of R.
    bool is_unit() const { return terms_.size() == 1 && terms_[0].mono.is_one(); }

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, Fp c) {
        Polynomial p(ring);
        if (!c.is_zero()) p.terms_.push_back({Monomial(ring->nvars()), c});
        return p;
    }
    static Polynomial monomial(RingPtr ring, Monomial m, Fp c) {
        Polynomial p(ring);
        if (!c.is_zero()) p.terms_.push_back({std::move(m), c});
        return p;
    }
    static Polynomial variable(const RingPtr& ring, int i, int power = 1) {
        return monomial(ring, Monomial::variable(i, ring->nvars(), power), ring->one());
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        require_same_ring(*a.ring_, *b.ring_);
        const MonomialOrder& ord = a.ring_->order();
        Polynomial r(a.ring_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            int c = ord.compare(a.terms_[i].mono, b.terms_[j].mono);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back(b.terms_[j++]);
            } else {
                Fp s = a.terms_[i].coeff + b.terms_[j].coeff;
                if (!s.is_zero()) r.terms_.push_back({a.terms_[i].mono, s});
                ++i; ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    Polynomial operator-() const {
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
        return r;
    }

    /// this * (c * m); the workhorse of reduction loops.
    Polynomial times_term(Fp c, const Monomial& m) const {
        Polynomial r(ring_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
        return r;
    }
    Polynomial times_scalar(Fp c) const { return times_term(c, Monomial(ring_->nvars())); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        require_same_ring(*a.ring_, *b.ring_);
        Polynomial r(a.ring_);
        for (const auto& t : b.terms_) r = r + a.times_term(t.coeff, t.mono);
        return r;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return times_scalar(lead_coeff().inverse());
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
                return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Coefficient of a given monomial (zero if absent).
    Fp coefficient(const Monomial& m) const {
        for (const auto& t : terms_)
            if (t.mono == m) return t.coeff;
        return ring_->zero();
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& t : terms_) {
            std::int64_t c = t.coeff.balanced();
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            std::int64_t ac = c < 0 ? -c : c;
            bool printed_coeff = false;
            if (ac != 1 || t.mono.is_one()) {
                os << ac;
                printed_coeff = true;
            }
            bool first_var = !printed_coeff;
            for (int v = 0; v < ring_->nvars(); ++v) {
                int e = t.mono.exponent(v);
                if (e == 0) continue;
                if (!first_var) os << "*";
                os << ring_->name(v);
                if (e > 1) os << "^" << e;
                first_var = false;
            }
            first = false;
        }
        return os.str();
    }

private:
    void normalize() {
        const MonomialOrder& ord = ring_->order();
        std::sort(terms_.begin(), terms_.end(),
                  [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().mono == t.mono) {
                out.back().coeff += t.coeff;
                if (out.back().coeff.is_zero()) out.pop_back();
            } else if (!t.coeff.is_zero()) {
                out.push_back(std::move(t));
            }
        }
        terms_ = std::move(out);
    }

    RingPtr ring_;
    std::vector<Term> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

} // namespace liaison
