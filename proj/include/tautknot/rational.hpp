// Copyright 2026 The tautknot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <ostream>
#include <string>

#include "tautknot/errors.hpp"

namespace tautknot {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt big_abs(const BigInt& a) {
    return a < 0 ? BigInt(-a) : a;
}

inline int sgn(const BigInt& a) {
    return a < 0 ? -1 : (a > 0 ? 1 : 0);
}

inline int sgn(long long a) {
    return a < 0 ? -1 : (a > 0 ? 1 : 0);
}

// Exact fraction of arbitrary-precision integers.  Always kept normalized:
// den > 0 and gcd(|num|, den) == 1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {} // NOLINT(google-explicit-constructor)
    Rational(long long n) : num_(n), den_(1) {}         // NOLINT(google-explicit-constructor)

    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_ == 0) throw DivisionByZero("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = big_gcd(big_abs(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return sgn(num_); }

    Rational reciprocal() const {
        if (num_ == 0) throw DivisionByZero("reciprocal of zero");
        return Rational(den_, num_);
    }

    Rational operator-() const { return Rational(-num_, den_, already_normalized_tag{}); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw DivisionByZero("division by zero rational");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

    // Text form "num/den".
    std::string str() const {
        return num_.str() + "/" + den_.str();
    }

    // Accepts "n" or "n/d".
    static Rational parse(const std::string& text) {
        auto slash = text.find('/');
        try {
            if (slash == std::string::npos) return Rational(BigInt(text));
            return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
        } catch (const std::exception& e) {
            throw InputError(std::string("cannot parse rational '") + text + "': " + e.what());
        }
    }

    double to_double() const {
        return num_.convert_to<double>() / den_.convert_to<double>();
    }

private:
    struct already_normalized_tag {};
    Rational(BigInt n, BigInt d, already_normalized_tag) : num_(std::move(n)), den_(std::move(d)) {}

    BigInt num_;
    BigInt den_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace tautknot
