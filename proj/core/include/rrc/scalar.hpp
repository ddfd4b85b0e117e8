#pragma once

#include <gmpxx.h>

#include <string>

#include "rrc/errors.hpp"

namespace rrc {

using Rational = mpq_class;

// Builds num/den in lowest terms. Throws std::domain_error when den == 0.
Rational make_rational(long num, long den = 1);

// Parses "p", "-p", or "p/q" (q > 0 after reduction). Throws ParseError.
Rational parse_rational(const std::string& text);

// Lowest-terms rendering, "/1" suppressed.
std::string to_string(const Rational& x);

// True when x == p^n for a rational p; on success stores p in root.
bool rational_nth_root(const Rational& x, long n, Rational& root);

/*
 * Element of Q or of a fixed quadratic extension Q(sqrt(d)), stored as
 * a + b*sqrt(d) with a, b rational.
 *
 * Invariants: d is squarefree, d not in {0, 1}, and b == 0 forces d == 0,
 * so every plain rational has exactly one representation. An operation
 * mixing two distinct nonzero discriminants throws FieldMismatch; rational
 * operands combine with either side.
 */
class Scalar {
   public:
    Scalar() : a_(0), b_(0), d_(0) {}
    Scalar(long n) : a_(n), b_(0), d_(0) {}
    Scalar(const Rational& a) : a_(a), b_(0), d_(0) {}
    Scalar(Rational a, Rational b, long d);

    // 0 + 1*sqrt(d).
    static Scalar sqrt_of(long d);

    const Rational& rat() const { return a_; }
    const Rational& irr() const { return b_; }
    long disc() const { return d_; }
    bool is_rational() const { return d_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_one() const { return b_ == 0 && a_ == 1; }

    // Ring automorphism b -> -b; identity on rationals.
    Scalar conj() const;
    // a^2 - b^2 d; nonzero whenever the element is nonzero.
    Rational norm() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    Scalar inverse() const;
    Scalar pow(long e) const;

    /*
     * Partial n-th root inside the element's own field. Rationals: exact
     * integer roots of numerator and denominator, sign fixed by parity.
     * Quadratic elements with b != 0: n a power of two, via square roots
     * p + q*sqrt(d) with p^2 = (a +- sqrt(a^2 - b^2 d))/2. The root with
     * positive rational part is preferred when both signs work. Throws
     * NotAPower otherwise.
     */
    Scalar nth_root(long n) const;

    // "a/b", "a/b+c/e*sqrt(d)", "a/b-c/e*sqrt(d)", "c/e*sqrt(d)".
    std::string str() const;
    static Scalar parse(const std::string& text);

   private:
    // Restores b == 0 => d == 0 after arithmetic.
    void normalize();
    static long join_disc(const Scalar& x, const Scalar& y);

    Rational a_, b_;
    long d_;
};

}  // namespace rrc
