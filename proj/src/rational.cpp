#include "ordcomplete/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>
#include <numeric>

namespace ordcomplete {

namespace {

using int128 = __int128;

long long narrow(int128 v, const char* what) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min()) {
        throw InvalidInputError(std::string("rational overflow in ") + what);
    }
    return static_cast<long long>(v);
}

int128 gcd128(int128 a, int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Rational::Rational(long long numerator, long long denominator) {
    if (denominator == 0) throw InvalidInputError("rational with zero denominator");
    int128 n = numerator;
    int128 d = denominator;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num_ = narrow(n, "construction");
    den_ = narrow(d, "construction");
}

Rational Rational::operator-() const {
    Rational out;
    out.num_ = narrow(-int128{num_}, "negation");
    out.den_ = den_;
    return out;
}

Rational& Rational::operator+=(const Rational& other) {
    int128 n = int128{num_} * other.den_ + int128{other.num_} * den_;
    int128 d = int128{den_} * other.den_;
    int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num_ = narrow(n, "addition");
    den_ = narrow(d, "addition");
    return *this;
}

Rational& Rational::operator-=(const Rational& other) {
    return *this += -other;
}

Rational& Rational::operator*=(const Rational& other) {
    int128 n = int128{num_} * other.num_;
    int128 d = int128{den_} * other.den_;
    int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num_ = narrow(n, "multiplication");
    den_ = narrow(d, "multiplication");
    return *this;
}

Rational Rational::pow(unsigned exponent) const {
    Rational out{1};
    Rational base = *this;
    for (;;) {
        if (exponent & 1u) out *= base;
        exponent >>= 1u;
        if (exponent == 0) break;
        base *= base;
    }
    return out;
}

Rational Rational::abs() const {
    return num_ < 0 ? -*this : *this;
}

Rational Rational::reciprocal() const {
    if (num_ == 0) throw InvalidInputError("reciprocal of zero");
    return Rational(den_, num_);
}

bool Rational::operator<(const Rational& other) const {
    return int128{num_} * other.den_ < int128{other.num_} * den_;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
    auto fail = [&]() -> Rational {
        throw InvalidInputError("cannot parse rational '" + text + "'");
    };
    if (text.empty()) return fail();

    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::size_t pos_n = 0;
        std::size_t pos_d = 0;
        long long n = 0;
        long long d = 0;
        try {
            n = std::stoll(text.substr(0, slash), &pos_n);
            d = std::stoll(text.substr(slash + 1), &pos_d);
        } catch (const std::exception&) {
            return fail();
        }
        if (pos_n != slash || pos_d != text.size() - slash - 1) return fail();
        return Rational(n, d);
    }

    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        std::size_t frac_len = text.size() - dot - 1;
        if (frac_len == 0 || digits.empty()) return fail();
        long long n = 0;
        std::size_t pos = 0;
        try {
            n = std::stoll(digits, &pos);
        } catch (const std::exception&) {
            return fail();
        }
        if (pos != digits.size()) return fail();
        long long d = 1;
        for (std::size_t i = 0; i < frac_len; ++i) {
            d = narrow(int128{d} * 10, "decimal parse");
        }
        return Rational(n, d);
    }

    long long n = 0;
    std::size_t pos = 0;
    try {
        n = std::stoll(text, &pos);
    } catch (const std::exception&) {
        return fail();
    }
    if (pos != text.size()) return fail();
    return Rational(n);
}

}  // namespace ordcomplete
