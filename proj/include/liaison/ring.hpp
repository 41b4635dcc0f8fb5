#pragma once

#include <memory>
#include <string>
#include <vector>

#include "liaison/monomial.hpp"

namespace liaison {

inline constexpr std::uint32_t kDefaultModulus = 32003;

/// Immutable description of R = F_p[x_1..x_N] with a fixed monomial order.
/// Shared by every polynomial built over it.
class Ring {
public:
    Ring(int nvars, std::uint32_t modulus, MonomialOrder order,
         std::vector<std::string> names)
        : nvars_(nvars), p_(modulus), order_(std::move(order)), names_(std::move(names)) {
        if (nvars < 1) throw input_error("ring needs at least one variable");
        if (!is_prime(p_)) throw input_error("modulus must be prime");
        if (static_cast<int>(names_.size()) != nvars)
            throw input_error("variable name count does not match nvars");
    }

    static std::shared_ptr<const Ring> make(int nvars = 3,
                                            std::uint32_t modulus = kDefaultModulus,
                                            MonomialOrder order = MonomialOrder(),
                                            std::vector<std::string> names = {}) {
        if (order.precedence().empty()) order = MonomialOrder::grevlex(nvars);
        if (names.empty()) names = default_names(nvars, false);
        return std::make_shared<const Ring>(nvars, modulus, std::move(order), std::move(names));
    }

    int nvars() const { return nvars_; }
    std::uint32_t modulus() const { return p_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_[i]; }

    Fp element(std::int64_t v) const { return Fp(v, p_); }
    Fp zero() const { return Fp(0, p_); }
    Fp one() const { return Fp(1, p_); }

    /// The dual ring T = F_p[X_1..X_N]: same arithmetic, uppercased names.
    std::shared_ptr<const Ring> dual() const {
        std::vector<std::string> up;
        up.reserve(names_.size());
        for (const auto& n : names_) {
            std::string s = n;
            for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
            up.push_back(s);
        }
        return std::make_shared<const Ring>(nvars_, p_, order_, std::move(up));
    }

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.nvars_ == b.nvars_ && a.p_ == b.p_ && a.order_ == b.order_ &&
               a.names_ == b.names_;
    }
    friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

    static std::vector<std::string> default_names(int nvars, bool dual) {
        static const char* low[] = {"x", "y", "z"};
        static const char* up[] = {"X", "Y", "Z"};
        std::vector<std::string> names;
        for (int i = 0; i < nvars; ++i) {
            if (nvars <= 3) {
                names.push_back(dual ? up[i] : low[i]);
            } else {
                names.push_back((dual ? "X" : "x") + std::to_string(i + 1));
            }
        }
        return names;
    }

private:
    int nvars_;
    std::uint32_t p_;
    MonomialOrder order_;
    std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline void require_same_ring(const Ring& a, const Ring& b) {
    if (a != b) throw input_error("operands live in different rings");
}

} // namespace liaison
