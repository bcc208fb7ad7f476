#pragma once

#include <iosfwd>
#include <string>

#include "pim/rational.hpp"

namespace pim {

// Exact coefficient type used throughout: a rational number, or an element
// a + b*sqrt(d) of a real quadratic field Q(sqrt(d)).  d == 0 marks the
// rational case; elements of different quadratic fields never combine.
class Scalar {
public:
    Scalar() : a_(0), b_(0), d_(0) {}
    Scalar(long n) : a_(n), b_(0), d_(0) {}
    Scalar(const Int& n) : a_(n), b_(0), d_(0) {}
    Scalar(const Rat& r) : a_(r), b_(0), d_(0) {}
    Scalar(Rat a, Rat b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) { normalize(); }

    static Scalar sqrt_term(const Rat& b, long d) { return Scalar(Rat(0), b, d); }

    bool is_rational() const { return d_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    const Rat& rational_part() const { return a_; }
    const Rat& sqrt_part() const { return b_; }
    long disc() const { return d_; }

    // Exact rational value; throws if a sqrt(d) component is present.
    const Rat& rat() const {
        if (d_ != 0) throw FieldMismatch("value " + str() + " is not rational");
        return a_;
    }

    Scalar conj() const { return Scalar(a_, -b_, d_); }
    Rat norm() const { return a_ * a_ - Rat(d_) * b_ * b_; }

    Scalar operator-() const { return Scalar(-a_, -b_, d_); }

    friend Scalar operator+(const Scalar& x, const Scalar& y) {
        long d = merge_disc(x.d_, y.d_, "+");
        return Scalar(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend Scalar operator-(const Scalar& x, const Scalar& y) {
        long d = merge_disc(x.d_, y.d_, "-");
        return Scalar(x.a_ - y.a_, x.b_ - y.b_, d);
    }
    friend Scalar operator*(const Scalar& x, const Scalar& y) {
        long d = merge_disc(x.d_, y.d_, "*");
        if (d == 0) return Scalar(x.a_ * y.a_);
        return Scalar(x.a_ * y.a_ + Rat(d) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

    Scalar inverse() const {
        if (is_zero()) throw Error("division by zero Scalar");
        if (d_ == 0) return Scalar(Rat(1) / a_);
        Rat n = norm();
        if (n == 0) throw Error("zero norm in Q(sqrt(" + std::to_string(d_) + ")): d not squarefree?");
        return Scalar(a_ / n, -b_ / n, d_);
    }

    Scalar pow(unsigned long e) const {
        Scalar r(1), base(*this);
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
    Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
    Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

    friend bool operator==(const Scalar& x, const Scalar& y) {
        if (x.d_ != y.d_) return x.is_rational() && y.is_rational() && x.a_ == y.a_;
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    // "p/q" for rationals, "(p+q*sqrt(d))/r" with gcd(p,q,r)=1, r>0 otherwise.
    std::string str() const;

    static Scalar parse(const std::string& s);

private:
    void normalize() {
        if (b_ == 0) d_ = 0;
        if (d_ < 0) throw Error("negative disc in Scalar");
    }
    static long merge_disc(long dx, long dy, const char* op) {
        if (dx == 0) return dy;
        if (dy == 0 || dx == dy) return dx;
        throw FieldMismatch(std::string("Scalar ") + op + ": sqrt(" + std::to_string(dx) +
                            ") vs sqrt(" + std::to_string(dy) + ")");
    }

    Rat a_, b_;
    long d_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace pim
