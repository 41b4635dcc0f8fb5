#pragma once

#include <cstdint>
#include <stdexcept>

namespace liaison {

/// Error in user-supplied input (bad syntax, violated precondition, ...).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A random construction failed repeatedly; distinct from "no such object exists".
struct genericity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An internal invariant failed; indicates a bug, not bad input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Element of the prime field F_p. Carries its modulus; mixed-modulus
/// arithmetic is rejected.
class Fp {
public:
    Fp() : val_(0), p_(2) {}
    Fp(std::int64_t v, std::uint32_t p) : p_(p) {
        std::int64_t r = v % static_cast<std::int64_t>(p);
        if (r < 0) r += p;
        val_ = static_cast<std::uint32_t>(r);
    }

    std::uint32_t value() const { return val_; }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return val_ == 0; }
    bool is_one() const { return val_ == 1; }

    friend Fp operator+(Fp a, Fp b) {
        a.check(b);
        std::uint64_t s = static_cast<std::uint64_t>(a.val_) + b.val_;
        if (s >= a.p_) s -= a.p_;
        return Fp::raw(static_cast<std::uint32_t>(s), a.p_);
    }
    friend Fp operator-(Fp a, Fp b) {
        a.check(b);
        std::uint64_t s = static_cast<std::uint64_t>(a.val_) + a.p_ - b.val_;
        if (s >= a.p_) s -= a.p_;
        return Fp::raw(static_cast<std::uint32_t>(s), a.p_);
    }
    friend Fp operator*(Fp a, Fp b) {
        a.check(b);
        std::uint64_t s = static_cast<std::uint64_t>(a.val_) * b.val_ % a.p_;
        return Fp::raw(static_cast<std::uint32_t>(s), a.p_);
    }
    Fp operator-() const { return Fp::raw(val_ == 0 ? 0 : p_ - val_, p_); }

    Fp inverse() const {
        if (val_ == 0) throw input_error("division by zero in F_p");
        // extended Euclid
        std::int64_t a = val_, b = p_, x0 = 1, x1 = 0;
        while (b != 0) {
            std::int64_t q = a / b;
            std::int64_t t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        return Fp(x0, p_);
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }

    Fp& operator+=(Fp b) { return *this = *this + b; }
    Fp& operator-=(Fp b) { return *this = *this - b; }
    Fp& operator*=(Fp b) { return *this = *this * b; }

    friend bool operator==(Fp a, Fp b) { return a.val_ == b.val_ && a.p_ == b.p_; }
    friend bool operator!=(Fp a, Fp b) { return !(a == b); }

    /// Signed representative in (-p/2, p/2]; keeps printed coefficients small.
    std::int64_t balanced() const {
        if (val_ > p_ / 2) return static_cast<std::int64_t>(val_) - p_;
        return val_;
    }

private:
    static Fp raw(std::uint32_t v, std::uint32_t p) {
        Fp r; r.val_ = v; r.p_ = p; return r;
    }
    void check(const Fp& b) const {
        if (p_ != b.p_) throw internal_error("F_p arithmetic with mixed moduli");
    }
    std::uint32_t val_;
    std::uint32_t p_;
};

} // namespace liaison
