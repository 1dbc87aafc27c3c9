// Exact scalar types shared by every module.
#ifndef LGTORIC_NUMERIC_HPP
#define LGTORIC_NUMERIC_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace lgtoric {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Base class of every error thrown by the library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Raised when an input violates an operation's precondition.
class DomainError : public Error
{
  public:
    using Error::Error;
};

/// Malformed text input; line and column are 1-based.
class ParseError : public DomainError
{
  public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : DomainError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column)
    {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

/// Raised when an internal invariant fails (a bug, not bad input).
class InternalError : public Error
{
  public:
    using Error::Error;
};

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }
inline bool is_integral(const Rational& r) { return denominator(r) == 1; }

inline Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }
inline Integer lcm(const Integer& a, const Integer& b) { return boost::multiprecision::lcm(a, b); }

template <class T>
T abs_value(const T& v) { return v < 0 ? T(-v) : v; }

template <class T>
T gcd_generic(T a, T b)
{
    a = abs_value(a);
    b = abs_value(b);
    while (b != 0) {
        T t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// Prints "p" or "p/q".
inline std::string to_string(const Rational& r)
{
    if (is_integral(r))
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline std::string to_string(const Integer& i) { return i.str(); }

/// Converts to int64, throwing when the value does not fit.
inline std::int64_t to_int64(const Integer& i)
{
    if (i > Integer(INT64_MAX) || i < Integer(INT64_MIN))
        throw DomainError("integer " + i.str() + " does not fit in 64 bits");
    return i.convert_to<std::int64_t>();
}

inline Rational rational_pow(const Rational& r, unsigned e)
{
    return Rational(boost::multiprecision::pow(numerator(r), e), boost::multiprecision::pow(denominator(r), e));
}

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

} // namespace lgtoric

#endif
