#include "cofrob/scalar.hpp"

#include <stdexcept>

#include "cofrob/error.hpp"

namespace cofrob {

Scalar::Scalar(long p, long q)
{
    if (q == 0)
        throw std::domain_error("Scalar: zero denominator");
    value_ = mpq_class(p, q);
    value_.canonicalize();
}

Scalar::Scalar(mpq_class v) : value_(std::move(v))
{
    value_.canonicalize();
}

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign)
{
    if (!s.empty() && allow_sign && s.front() == '-')
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char ch : s)
        if (ch < '0' || ch > '9')
            return false;
    return true;
}

}  // namespace

Scalar Scalar::parse(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!is_integer_literal(num, true))
        throw ParseError("", "malformed scalar \"" + std::string(text) + "\"");
    mpz_class p(std::string(num), 10);
    if (slash == std::string_view::npos)
        return Scalar(mpq_class(p));

    std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(den, false))
        throw ParseError("", "malformed scalar \"" + std::string(text) + "\"");
    mpz_class q(std::string(den), 10);
    if (q == 0)
        throw ParseError("", "zero denominator in \"" + std::string(text) + "\"");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (g != 1)
        throw ParseError("", "scalar \"" + std::string(text) + "\" is not in lowest terms");
    return Scalar(mpq_class(p, q));
}

std::string Scalar::str() const
{
    if (value_.get_den() == 1)
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    value_ += o.value_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    value_ -= o.value_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    value_ *= o.value_;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    if (o.is_zero())
        throw std::domain_error("Scalar: division by zero");
    value_ /= o.value_;
    return *this;
}

Scalar Scalar::operator-() const
{
    return Scalar(mpq_class(-value_));
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b)
{
    int c = cmp(a.value_, b.value_);
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

void Scalar::add_product(const Scalar& a, const Scalar& b)
{
    if (a.is_zero() || b.is_zero())
        return;
    mpq_class t = a.value_ * b.value_;
    value_ += t;
}

void Scalar::sub_product(const Scalar& a, const Scalar& b)
{
    if (a.is_zero() || b.is_zero())
        return;
    mpq_class t = a.value_ * b.value_;
    value_ -= t;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s)
{
    return os << s.str();
}

}  // namespace cofrob
