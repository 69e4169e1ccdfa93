#pragma once

#include <cstdint>
#include <string>

#include "ordcomplete/errors.hpp"

namespace ordcomplete {

/// Exact rational number with a 64-bit numerator and positive denominator.
/// Arithmetic goes through 128-bit intermediates and throws on overflow, so
/// order comparisons are never approximate.
class Rational {
public:
    Rational() = default;
    Rational(long long numerator) : num_(numerator) {}  // NOLINT(google-explicit-constructor)
    Rational(long long numerator, long long denominator);

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& other);
    Rational& operator-=(const Rational& other);
    Rational& operator*=(const Rational& other);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }

    Rational pow(unsigned exponent) const;
    Rational abs() const;
    /// 1 over this; throws on zero.
    Rational reciprocal() const;

    bool operator==(const Rational&) const = default;
    bool operator<(const Rational& other) const;
    bool operator<=(const Rational& other) const { return *this == other || *this < other; }

    /// "3", "-2" or "3/2"; the canonical wire form.
    std::string str() const;

    /// Accepts "3", "-3/2" and decimal strings such as "0.25".
    static Rational parse(const std::string& text);

private:
    long long num_ = 0;
    long long den_ = 1;
};

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace ordcomplete
