#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cofrob {

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Text form is "p/q", or "p" when q = 1.
class Scalar {
public:
    Scalar() = default;
    Scalar(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    Scalar(long p, long q);
    explicit Scalar(mpq_class v);

    /// Accepts "p" or "p/q" with q > 0 and gcd(|p|, q) = 1. Throws
    /// ParseError otherwise.
    static Scalar parse(std::string_view text);

    std::string str() const;

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    int sign() const { return sgn(value_); }
    bool is_integer() const { return value_.get_den() == 1; }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    /// Throws std::domain_error on division by zero.
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const;

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

    /// this += a * b without a temporary Scalar.
    void add_product(const Scalar& a, const Scalar& b);
    void sub_product(const Scalar& a, const Scalar& b);

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace cofrob
