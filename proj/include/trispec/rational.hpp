#pragma once

#include <gmpxx.h>

#include <string>

#include "trispec/errors.hpp"

namespace trispec {

using Int = mpz_class;

// Exact rational, always in lowest terms with positive denominator.
// Thin wrapper over mpq_class whose canonical form is exactly that invariant.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}                           // NOLINT(google-explicit-constructor)
    Rational(const Int& n) : v_(n) {}                     // NOLINT(google-explicit-constructor)
    Rational(const Int& num, const Int& den) : v_(num, den) {
        if (den == 0) throw Error("Rational: zero denominator");
        v_.canonicalize();
    }

    const Int numerator() const { return Int(v_.get_num()); }
    const Int denominator() const { return Int(v_.get_den()); }
    bool is_integer() const { return v_.get_den() == 1; }

    // Parses "p/q" or "p" with optional sign.
    static Rational parse(const std::string& s);
    std::string str() const;

    Rational operator-() const { Rational r; r.v_ = -v_; return r; }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.v_ == 0) throw Error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    int sign() const { return sgn(v_); }

private:
    mpq_class v_;
};

std::string int_str(const Int& v);
Int int_parse(const std::string& s);

// p^e for nonnegative integer exponents.
Int int_pow(const Int& base, unsigned long e);

} // namespace trispec
