#include "purebirth/numerics.hpp"

#include <mpfr.h>

#include <charconv>
#include <cstdio>

namespace purebirth {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class q) : v_(std::move(q)) {
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
    mpq_class q;
    if (q.set_str(std::string(s), 10) != 0) {
        throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
    }
    if (sgn(q.get_den()) == 0) throw std::domain_error("Rational: zero denominator");
    q.canonicalize();
    return Rational(std::move(q));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

Rational Rational::pow(unsigned long e) const {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), e);
    Rational r;
    r.v_ = mpq_class(num, den);  // powers of a canonical fraction stay coprime
    return r;
}

double Rational::to_double() const {
    if (is_zero()) return 0.0;
    // 53-bit round-to-nearest via MPFR, with the exponent range pinned to
    // float64 so subnormals round once rather than twice.
    mpfr_exp_t emin = mpfr_get_emin(), emax = mpfr_get_emax();
    mpfr_set_emin(-1073);
    mpfr_set_emax(1024);
    mpfr_t x;
    mpfr_init2(x, 53);
    int t = mpfr_set_q(x, v_.get_mpq_t(), MPFR_RNDN);
    t = mpfr_check_range(x, t, MPFR_RNDN);
    mpfr_subnormalize(x, t, MPFR_RNDN);
    double d = mpfr_get_d(x, MPFR_RNDN);
    mpfr_clear(x);
    mpfr_set_emin(emin);
    mpfr_set_emax(emax);
    if (std::isinf(d)) throw std::overflow_error("rational_to_float: magnitude exceeds float64 range");
    return d;
}

double rational_to_float(const Rational& r) { return r.to_double(); }

LogFloat LogFloat::from_value(double x) {
    if (x < 0.0 || std::isnan(x)) throw std::domain_error("LogFloat: negative or NaN value");
    if (x == 0.0) return zero();
    return from_log(std::log(x));
}

double LogFloat::log() const {
    if (zero_) throw std::domain_error("LogFloat: log of zero");
    return log_;
}

LogFloat operator*(const LogFloat& a, const LogFloat& b) {
    if (a.zero_ || b.zero_) return LogFloat::zero();
    return LogFloat::from_log(a.log_ + b.log_);
}

LogFloat operator/(const LogFloat& a, const LogFloat& b) {
    if (b.zero_) throw std::domain_error("LogFloat: division by zero");
    if (a.zero_) return LogFloat::zero();
    return LogFloat::from_log(a.log_ - b.log_);
}

LogFloat operator+(const LogFloat& a, const LogFloat& b) {
    if (a.zero_) return b;
    if (b.zero_) return a;
    double hi = a.log_, lo = b.log_;
    if (hi < lo) std::swap(hi, lo);
    return LogFloat::from_log(hi + std::log1p(std::exp(lo - hi)));
}

LogFloat LogFloat::pow(unsigned long e) const {
    if (zero_) return e == 0 ? from_log(0.0) : zero();
    return from_log(log_ * static_cast<double>(e));
}

bool operator<(const LogFloat& a, const LogFloat& b) {
    if (a.zero_) return !b.zero_;
    if (b.zero_) return false;
    return a.log_ < b.log_;
}

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::Exact: return "exact";
        case Backend::Float: return "float";
        case Backend::Log: return "logfloat";
    }
    return "?";
}

const Rational& Scalar::exact() const {
    if (backend() != Backend::Exact) throw std::domain_error("Scalar: not an exact value");
    return std::get<Rational>(v_);
}

double Scalar::flt() const {
    if (backend() != Backend::Float) throw std::domain_error("Scalar: not a float value");
    return std::get<double>(v_);
}

const LogFloat& Scalar::lg() const {
    if (backend() != Backend::Log) throw std::domain_error("Scalar: not a log-space value");
    return std::get<LogFloat>(v_);
}

bool Scalar::is_zero() const {
    switch (backend()) {
        case Backend::Exact: return std::get<Rational>(v_).is_zero();
        case Backend::Float: return std::get<double>(v_) == 0.0;
        case Backend::Log: return std::get<LogFloat>(v_).is_zero();
    }
    return false;
}

std::string Scalar::str() const {
    switch (backend()) {
        case Backend::Exact: return std::get<Rational>(v_).str();
        case Backend::Float: return float_to_string(std::get<double>(v_));
        case Backend::Log: return float_to_string(std::get<LogFloat>(v_).value());
    }
    return {};
}

namespace {

double checked(double x, const char* what) {
    if (!std::isfinite(x)) throw std::overflow_error(std::string("Scalar: non-finite float result in ") + what);
    return x;
}

}  // namespace

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
    if (a.backend() != b.backend()) {
        throw std::domain_error(std::string("Scalar: mixed backends ") + backend_name(a.backend()) + " and " + backend_name(b.backend()));
    }
    switch (a.backend()) {
        case Backend::Exact: {
            const Rational &x = a.exact(), &y = b.exact();
            switch (op) {
                case ArithOp::Add: return Scalar(x + y);
                case ArithOp::Sub: return Scalar(x - y);
                case ArithOp::Mul: return Scalar(x * y);
                case ArithOp::Div: return Scalar(x / y);
            }
            break;
        }
        case Backend::Float: {
            double x = a.flt(), y = b.flt();
            switch (op) {
                case ArithOp::Add: return Scalar(checked(x + y, "add"));
                case ArithOp::Sub: return Scalar(checked(x - y, "sub"));
                case ArithOp::Mul: return Scalar(checked(x * y, "mul"));
                case ArithOp::Div:
                    if (y == 0.0) throw std::domain_error("Scalar: division by zero");
                    return Scalar(checked(x / y, "div"));
            }
            break;
        }
        case Backend::Log: {
            const LogFloat &x = a.lg(), &y = b.lg();
            switch (op) {
                case ArithOp::Add: return Scalar(x + y);
                case ArithOp::Sub: throw std::domain_error("Scalar: subtraction is not supported in log space");
                case ArithOp::Mul: return Scalar(x * y);
                case ArithOp::Div: return Scalar(x / y);
            }
            break;
        }
    }
    throw std::logic_error("scalar_arith: unreachable");
}

Scalar operator+(const Scalar& a, const Scalar& b) { return scalar_arith(a, b, ArithOp::Add); }
Scalar operator-(const Scalar& a, const Scalar& b) { return scalar_arith(a, b, ArithOp::Sub); }
Scalar operator*(const Scalar& a, const Scalar& b) { return scalar_arith(a, b, ArithOp::Mul); }
Scalar operator/(const Scalar& a, const Scalar& b) { return scalar_arith(a, b, ArithOp::Div); }

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.backend() != b.backend()) return false;
    switch (a.backend()) {
        case Backend::Exact: return a.exact() == b.exact();
        case Backend::Float: return a.flt() == b.flt();
        case Backend::Log: return a.lg() == b.lg();
    }
    return false;
}

std::string float_to_string(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc()) throw std::runtime_error("float_to_string: conversion failed");
    return std::string(buf, end);
}

}  // namespace purebirth
