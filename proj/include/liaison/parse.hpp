#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "liaison/polynomial.hpp"

namespace liaison {

/// Recursive-descent parser for the ASCII polynomial grammar:
/// terms joined by +/-, a term is [coeff*]var(^exp)(*var(^exp))*.
class PolyParser {
public:
    PolyParser(std::string_view text, RingPtr ring) : s_(text), ring_(std::move(ring)) {}

    Polynomial parse_polynomial() {
        Polynomial p = parse_poly_body();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

    std::vector<Polynomial> parse_ideal() {
        std::vector<Polynomial> out;
        out.push_back(parse_poly_body());
        skip_ws();
        while (pos_ < s_.size() && s_[pos_] == ',') {
            ++pos_;
            out.push_back(parse_poly_body());
            skip_ws();
        }
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return out;
    }

private:
    Polynomial parse_poly_body() {
        Polynomial p(ring_);
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] == ',') fail("empty polynomial");
        bool negative = false;
        if (peek_sign(negative)) {}
        p = p + parse_term(negative);
        while (true) {
            skip_ws();
            if (pos_ >= s_.size() || s_[pos_] == ',') break;
            bool neg = false;
            if (!peek_sign(neg)) fail("expected '+' or '-' between terms");
            p = p + parse_term(neg);
        }
        return p;
    }

    bool peek_sign(bool& negative) {
        skip_ws();
        if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
            negative = (s_[pos_] == '-');
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial parse_term(bool negative) {
        skip_ws();
        Fp coeff = ring_->one();
        Monomial mono(ring_->nvars());
        bool any = false;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            coeff = ring_->element(parse_int());
            any = true;
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                parse_factors(mono);
            }
        } else {
            parse_factors(mono);
            any = true;
        }
        if (!any) fail("expected a term");
        if (negative) coeff = -coeff;
        return Polynomial::monomial(ring_, std::move(mono), coeff);
    }

    void parse_factors(Monomial& mono) {
        while (true) {
            skip_ws();
            int v = match_variable();
            int e = 1;
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                skip_ws();
                e = static_cast<int>(parse_int());
                if (e < 0) fail("negative exponent");
            }
            mono = mono * Monomial::variable(v, ring_->nvars(), e);
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                continue;
            }
            break;
        }
    }

    int match_variable() {
        skip_ws();
        int best = -1;
        std::size_t best_len = 0;
        for (int i = 0; i < ring_->nvars(); ++i) {
            const std::string& n = ring_->name(i);
            if (n.size() > best_len && s_.substr(pos_, n.size()) == n) {
                best = i;
                best_len = n.size();
            }
        }
        if (best < 0) fail("unknown variable");
        pos_ += best_len;
        return best;
    }

    std::int64_t parse_int() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected an integer");
        std::int64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > (std::int64_t{1} << 52)) fail("integer literal too large");
            ++pos_;
        }
        return v;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw input_error("parse error at position " + std::to_string(pos_) + ": " + msg);
    }

    std::string_view s_;
    RingPtr ring_;
    std::size_t pos_ = 0;
};

inline Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
    return PolyParser(text, ring).parse_polynomial();
}

/// Parses a comma-separated generator list; every generator must be
/// homogeneous and nonzero (the whole theory is graded).
inline std::vector<Polynomial> parse_generators(std::string_view text, const RingPtr& ring) {
    auto gens = PolyParser(text, ring).parse_ideal();
    for (const auto& g : gens) {
        if (g.is_zero()) throw input_error("zero generator");
        if (!g.is_homogeneous())
            throw input_error("inhomogeneous generator: " + g.str());
    }
    return gens;
}

} // namespace liaison
