#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace swlab {

struct field_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct division_by_zero : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Strip the square part of d, returning (s, d') with d = s^2 * d' and d' square-free.
inline std::pair<unsigned long, unsigned long> squarefree_split(unsigned long d) {
    unsigned long s = 1;
    for (unsigned long f = 2; f * f <= d; ++f) {
        while (d % (f * f) == 0) {
            d /= f * f;
            s *= f;
        }
    }
    return {s, d};
}

/**
 * QuadScalar: exact element (a + b*sqrt(d)) / c of a real quadratic field.
 *
 * a, b, c are arbitrary-precision integers with c > 0 and gcd(a,b,c) = 1
 * after normalization; d is a square-free nonnegative discriminant shared
 * by every element of one computation. d = 0 means plain rational (b = 0).
 * Elements of different fields may only meet if one of them is rational.
 */
class QuadScalar {
  public:
    QuadScalar() : a_(0), b_(0), c_(1), d_(0) {}
    QuadScalar(long v) : a_(v), b_(0), c_(1), d_(0) {}
    QuadScalar(mpz_class a, mpz_class b, mpz_class c, unsigned long d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(d) {
        if (c_ == 0) throw division_by_zero("QuadScalar: zero denominator");
        normalize();
    }

    static QuadScalar rational(mpz_class num, mpz_class den) {
        return QuadScalar(std::move(num), 0, std::move(den), 0);
    }

    /// sqrt(d) as an exact element; the square part of d is pulled out front.
    static QuadScalar sqrt_of(unsigned long d) {
        auto [s, df] = squarefree_split(d);
        if (df <= 1) return QuadScalar(mpz_class(s) * (df == 0 ? 0 : 1), 0, 1, 0);
        return QuadScalar(0, mpz_class(s), 1, df);
    }

    const mpz_class& num_rat() const { return a_; }
    const mpz_class& num_irr() const { return b_; }
    const mpz_class& den() const { return c_; }
    unsigned long disc() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_one() const { return b_ == 0 && a_ == c_; }
    bool is_rational() const { return b_ == 0; }

    friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ &&
               (x.d_ == y.d_ || x.b_ == 0);
    }
    friend bool operator!=(const QuadScalar& x, const QuadScalar& y) { return !(x == y); }

    QuadScalar operator-() const {
        QuadScalar r = *this;
        r.a_ = -r.a_;
        r.b_ = -r.b_;
        return r;
    }

    friend QuadScalar operator+(const QuadScalar& x, const QuadScalar& y) {
        unsigned long d = joined_disc(x, y);
        return QuadScalar(x.a_ * y.c_ + y.a_ * x.c_, x.b_ * y.c_ + y.b_ * x.c_,
                          x.c_ * y.c_, d);
    }
    friend QuadScalar operator-(const QuadScalar& x, const QuadScalar& y) { return x + (-y); }
    friend QuadScalar operator*(const QuadScalar& x, const QuadScalar& y) {
        unsigned long d = joined_disc(x, y);
        mpz_class a = x.a_ * y.a_ + x.b_ * y.b_ * mpz_class(d);
        mpz_class b = x.a_ * y.b_ + x.b_ * y.a_;
        return QuadScalar(std::move(a), std::move(b), x.c_ * y.c_, d);
    }
    friend QuadScalar operator/(const QuadScalar& x, const QuadScalar& y) {
        return x * y.inverse();
    }

    QuadScalar& operator+=(const QuadScalar& y) { return *this = *this + y; }
    QuadScalar& operator-=(const QuadScalar& y) { return *this = *this - y; }
    QuadScalar& operator*=(const QuadScalar& y) { return *this = *this * y; }
    QuadScalar& operator/=(const QuadScalar& y) { return *this = *this / y; }

    /// 1/x via the conjugate: c*(a - b*sqrt(d)) / (a^2 - b^2 d).
    QuadScalar inverse() const {
        if (is_zero()) throw division_by_zero("QuadScalar: division by zero");
        mpz_class norm = a_ * a_ - b_ * b_ * mpz_class(d_);
        // d square-free, so a^2 = b^2 d only for a = b = 0.
        return QuadScalar(c_ * a_, -c_ * b_, norm, d_);
    }

    QuadScalar conjugate() const { return QuadScalar(a_, -b_, c_, d_); }

    QuadScalar pow(unsigned long e) const {
        QuadScalar acc(1), base = *this;
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    double to_double() const {
        double rad = d_ == 0 ? 0.0 : std::sqrt(static_cast<double>(d_));
        return (a_.get_d() + b_.get_d() * rad) / c_.get_d();
    }

    std::string str() const {
        std::ostringstream os;
        if (b_ == 0) {
            os << a_;
            if (c_ != 1) os << "/" << c_;
            return os.str();
        }
        os << "(" << a_;
        if (b_ > 0) os << "+";
        if (b_ == -1)
            os << "-";
        else if (b_ != 1)
            os << b_ << "*";
        os << "sqrt(" << d_ << "))";
        if (c_ != 1) os << "/" << c_;
        return os.str();
    }

  private:
    static unsigned long joined_disc(const QuadScalar& x, const QuadScalar& y) {
        if (x.b_ == 0 || x.d_ == 0) return y.d_;
        if (y.b_ == 0 || y.d_ == 0) return x.d_;
        if (x.d_ != y.d_)
            throw field_mismatch("QuadScalar: incompatible discriminants " +
                                 std::to_string(x.d_) + " vs " + std::to_string(y.d_));
        return x.d_;
    }

    void normalize() {
        if (c_ < 0) {
            a_ = -a_;
            b_ = -b_;
            c_ = -c_;
        }
        if (a_ == 0 && b_ == 0) {
            c_ = 1;
            d_ = 0;
            return;
        }
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c_.get_mpz_t());
        if (g > 1) {
            a_ /= g;
            b_ /= g;
            c_ /= g;
        }
        if (b_ == 0) d_ = 0;
    }

    mpz_class a_, b_, c_;
    unsigned long d_;
};

inline QuadScalar operator*(long x, const QuadScalar& y) { return QuadScalar(x) * y; }

/// Uniform hooks so the linear algebra templates work over QuadScalar and double.
template <class T>
struct scalar_ops;

template <>
struct scalar_ops<QuadScalar> {
    static constexpr bool exact = true;
    static QuadScalar zero() { return QuadScalar(); }
    static QuadScalar one() { return QuadScalar(1); }
    static QuadScalar from_long(long v) { return QuadScalar(v); }
    static bool is_zero(const QuadScalar& x, double = 0.0) { return x.is_zero(); }
    static double to_double(const QuadScalar& x) { return x.to_double(); }
};

template <>
struct scalar_ops<double> {
    static constexpr bool exact = false;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_long(long v) { return static_cast<double>(v); }
    static bool is_zero(double x, double eps = 1e-12) { return std::abs(x) <= eps; }
    static double to_double(double x) { return x; }
};

}  // namespace swlab
