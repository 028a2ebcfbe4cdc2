// Scalar backends shared by every computation: exact arbitrary-precision
// rationals, plain float64, and log-space float64 for values that underflow.
#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace purebirth {

// Exact rational number. Always held in canonical form: denominator > 0,
// gcd(|num|, den) = 1, zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long num) : v_(num) {}
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpz_class& num) : v_(num) {}
    explicit Rational(mpq_class q);

    // Parses "num/den" or a plain integer string.
    static Rational from_string(std::string_view s);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    // Canonical decimal string, "num/den" with the denominator omitted when 1.
    std::string str() const { return v_.get_str(); }

    // Correctly rounded (nearest-even) float64 value. Throws
    // std::overflow_error when the magnitude exceeds the float64 range.
    double to_double() const;

    Rational pow(unsigned long e) const;

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_;
};

// Nonnegative value stored as its natural logarithm, with exact zero kept
// apart. Supports multiplication, division, integer powers and nonnegative
// addition only; subtraction is deliberately not provided.
class LogFloat {
public:
    LogFloat() : log_(0.0), zero_(true) {}

    static LogFloat zero() { return LogFloat(); }
    static LogFloat from_value(double x);
    static LogFloat from_log(double lg) { LogFloat r; r.log_ = lg; r.zero_ = false; return r; }

    bool is_zero() const { return zero_; }

    // ln of the stored value; undefined for zero.
    double log() const;

    // exp(log); may round to 0 or inf outside the float64 range.
    double value() const { return zero_ ? 0.0 : std::exp(log_); }

    friend LogFloat operator*(const LogFloat& a, const LogFloat& b);
    friend LogFloat operator/(const LogFloat& a, const LogFloat& b);
    // Stable log-sum-exp addition of nonnegative values.
    friend LogFloat operator+(const LogFloat& a, const LogFloat& b);
    LogFloat& operator+=(const LogFloat& o) { *this = *this + o; return *this; }
    LogFloat& operator*=(const LogFloat& o) { *this = *this * o; return *this; }

    LogFloat pow(unsigned long e) const;

    friend bool operator==(const LogFloat& a, const LogFloat& b) { return a.zero_ == b.zero_ && (a.zero_ || a.log_ == b.log_); }
    friend bool operator<(const LogFloat& a, const LogFloat& b);

private:
    double log_;
    bool zero_;
};

enum class Backend { Exact, Float, Log };

const char* backend_name(Backend b);

// Tagged scalar spanning the three backends. Arithmetic between mismatched
// backends throws; float results are checked for finiteness.
class Scalar {
public:
    Scalar() : v_(Rational()) {}
    explicit Scalar(Rational r) : v_(std::move(r)) {}
    explicit Scalar(double d) : v_(d) {}
    explicit Scalar(LogFloat l) : v_(l) {}

    Backend backend() const { return static_cast<Backend>(v_.index()); }

    const Rational& exact() const;
    double flt() const;
    const LogFloat& lg() const;

    bool is_zero() const;

    // "num/den" in exact mode, shortest round-trip decimal otherwise.
    std::string str() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b);

private:
    std::variant<Rational, double, LogFloat> v_;
};

enum class ArithOp { Add, Sub, Mul, Div };

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op);

// Correctly rounded float64 quotient numerator/denominator.
double rational_to_float(const Rational& r);

// Shortest decimal that round-trips to the same float64.
std::string float_to_string(double x);

// --- support for code generic over the backend value type ---------------

template <class T>
inline constexpr Backend backend_of = Backend::Exact;
template <>
inline constexpr Backend backend_of<double> = Backend::Float;
template <>
inline constexpr Backend backend_of<LogFloat> = Backend::Log;

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_rational(const Rational& r) { return r; }
    static Rational from_fraction(long num, long den) { return Rational(num, den); }
    static Rational pow(const Rational& x, unsigned long e) { return x.pow(e); }
    static double to_double(const Rational& x) { return x.to_double(); }
    static bool is_zero(const Rational& x) { return x.is_zero(); }
};

template <>
struct scalar_traits<double> {
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_rational(const Rational& r) { return r.to_double(); }
    static double from_fraction(long num, long den) { return static_cast<double>(num) / static_cast<double>(den); }
    static double pow(double x, unsigned long e) { return std::pow(x, static_cast<double>(e)); }
    static double to_double(double x) { return x; }
    static bool is_zero(double x) { return x == 0.0; }
};

template <>
struct scalar_traits<LogFloat> {
    static LogFloat zero() { return LogFloat::zero(); }
    static LogFloat one() { return LogFloat::from_log(0.0); }
    static LogFloat from_rational(const Rational& r) { return LogFloat::from_value(r.to_double()); }
    static LogFloat from_fraction(long num, long den) { return LogFloat::from_value(scalar_traits<double>::from_fraction(num, den)); }
    static LogFloat pow(const LogFloat& x, unsigned long e) { return x.pow(e); }
    static double to_double(const LogFloat& x) { return x.value(); }
    static bool is_zero(const LogFloat& x) { return x.is_zero(); }
};

}  // namespace purebirth
