#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "ech/errors.hpp"

namespace ech {

using Integer = mpz_class;

std::string to_string(const Integer& n);

// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(const Integer& n) : q_(n) {}
    // Throws ZeroValue when den == 0.
    Rational(const Integer& num, const Integer& den);

    // Accepts "p" or "p/q" with an optional leading '-', ASCII digits only,
    // no whitespace. The result is reduced.
    static Rational parse(std::string_view text);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }

    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Integer floor() const;
    Integer ceil() const;

    // Approximation for display only; never used in computations.
    double to_double() const { return q_.get_d(); }

    // "p/q", or "p" when the denominator is 1.
    std::string str() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational x, const Rational& y) { return x += y; }
    friend Rational operator-(Rational x, const Rational& y) { return x -= y; }
    friend Rational operator*(Rational x, const Rational& y) { return x *= y; }
    friend Rational operator/(Rational x, const Rational& y) { return x /= y; }
    friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.q_)); }

    friend bool operator==(const Rational& x, const Rational& y) { return cmp(x.q_, y.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
        const int c = cmp(x.q_, y.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpq_class& raw() const { return q_; }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);

enum class Tilt : int { Minus = -1, None = 0, Plus = 1 };

inline Tilt flip(Tilt t) { return static_cast<Tilt>(-static_cast<int>(t)); }
inline int to_int(Tilt t) { return static_cast<int>(t); }

// "+", "-" or "0".
std::string tilt_str(Tilt t);
Tilt parse_tilt(std::string_view text);

// value + tilt*eps for an infinitesimal eps > 0. Lets exact rationals stand in
// for the irrational ratios a/b that keep ellipsoid contact forms
// nondegenerate.
struct PerturbedRational {
    Rational value;
    Tilt tilt = Tilt::None;

    friend bool operator==(const PerturbedRational&, const PerturbedRational&) = default;
    friend std::strong_ordering operator<=>(const PerturbedRational& x, const PerturbedRational& y) {
        if (auto c = x.value <=> y.value; c != 0) return c;
        return to_int(x.tilt) <=> to_int(y.tilt);
    }

    // "p/q" followed by the tilt symbol, e.g. "3/2+".
    std::string str() const { return value.str() + tilt_str(tilt); }
};

// floor(k * (value + tilt*eps)). Throws PreconditionViolation for k < 1 and
// DegenerateRatio when k*value is an integer and tilt is 0.
Integer floor_multiple(const PerturbedRational& r, std::int64_t k);

// (1/value, -tilt). Throws ZeroValue for value == 0.
PerturbedRational reciprocal(const PerturbedRational& r);

}  // namespace ech
