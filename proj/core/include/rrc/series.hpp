#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rrc/scalar.hpp"

namespace rrc {

// Upper bound on known exponents; nullopt means every coefficient is known
// (exact polynomial element).
using Prec = std::optional<Rational>;

inline Prec min_prec(const Prec& p, const Prec& q) {
    if (!p) return q;
    if (!q) return p;
    return *p < *q ? p : q;
}
inline Prec shift_prec(const Prec& p, const Rational& s) {
    if (!p) return p;
    return Prec(*p + s);
}

// Generalized binomial coefficient: x(x-1)...(x-k+1)/k! for rational x.
Rational binomial_coeff(const Rational& x, long k);

/*
 * Truncated Puiseux series over Scalar coefficients: finitely many terms
 * c * x^(e/denom) together with a precision bound.
 *
 * Invariants: denom >= 1; terms are keyed by the scaled exponent e and hold
 * no zero coefficients; when prec is finite every stored e/denom lies
 * strictly below it. Negative exponents are allowed (finite pole order).
 * Reading a coefficient at exponent >= prec throws PrecisionError; equality
 * compares coefficients strictly below the joint precision. Precision flows
 * through each operation by the valuation rules stated on that operation.
 */
class PuiseuxSeries {
   public:
    PuiseuxSeries() : denom_(1), prec_(std::nullopt) {}

    static PuiseuxSeries zero(Prec prec = std::nullopt);
    static PuiseuxSeries one(Prec prec = std::nullopt);
    static PuiseuxSeries monomial(const Scalar& c, const Rational& exp,
                                  Prec prec = std::nullopt);
    // Variable x itself.
    static PuiseuxSeries x(Prec prec = std::nullopt);

    long denom() const { return denom_; }
    const Prec& precision() const { return prec_; }
    bool exact() const { return !prec_.has_value(); }
    bool is_zero() const { return terms_.empty(); }

    // Smallest stored exponent; nullopt when no term is stored.
    std::optional<Rational> valuation() const;
    // Largest stored exponent; nullopt when no term is stored.
    std::optional<Rational> top_exponent() const;

    // Coefficient of x^e; zero for absent exponents below prec.
    Scalar coeff(const Rational& e) const;
    Scalar coeff(long num, long den = 1) const { return coeff(make_rational(num, den)); }

    // Ordered (exponent, coefficient) view of the stored terms.
    std::vector<std::pair<Rational, Scalar>> terms() const;

    // Raw grid access for serialization; keys are scaled exponents.
    const std::map<long, Scalar>& raw_terms() const { return terms_; }
    static PuiseuxSeries from_raw(long denom, std::map<long, Scalar> terms, Prec prec);

    // Canonical grid: denom minimal for the stored exponents.
    void reduce_grid();

    PuiseuxSeries operator-() const;
    PuiseuxSeries& operator+=(const PuiseuxSeries& o);
    PuiseuxSeries& operator-=(const PuiseuxSeries& o);
    friend PuiseuxSeries operator+(PuiseuxSeries a, const PuiseuxSeries& b) { return a += b; }
    friend PuiseuxSeries operator-(PuiseuxSeries a, const PuiseuxSeries& b) { return a -= b; }

    // Precision: min(val_a + prec_b, val_b + prec_a), a zero factor counting
    // its precision as valuation.
    friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);
    PuiseuxSeries& operator*=(const PuiseuxSeries& o) { return *this = *this * o; }

    PuiseuxSeries scaled(const Scalar& c) const;
    PuiseuxSeries mul_monomial(const Scalar& c, const Rational& e) const;

    /*
     * Long division. Precision: min(prec_a - val_b, val_a - 2 val_b + prec_b).
     * Exact by exact requires the division to terminate within the degree
     * bound (exact divisibility); otherwise truncate an operand first.
     */
    friend PuiseuxSeries operator/(const PuiseuxSeries& a, const PuiseuxSeries& b);

    // d/dx; precision drops by one.
    PuiseuxSeries derive() const;
    // x d/dx; precision unchanged.
    PuiseuxSeries theta() const;

    PuiseuxSeries pow_int(long k) const;
    // f^(num/den) via den-th root then integer power.
    PuiseuxSeries pow_rat(long num, long den) const;

    /*
     * n-th root with leading coefficient rooted in the scalar field.
     * Precision: prec - (n-1)/n * valuation. Exact input must be a monomial.
     */
    PuiseuxSeries nth_root(long n) const;

    // exp of a series with positive valuation; precision preserved.
    PuiseuxSeries exp() const;
    // log of a series with constant term 1; precision preserved.
    PuiseuxSeries log() const;

    // Copy with precision lowered to p (never raised); terms >= p dropped.
    PuiseuxSeries truncated(const Rational& p) const;

    // Agreement below the joint precision.
    friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) {
        return (a - b).is_zero();
    }
    friend bool operator!=(const PuiseuxSeries& a, const PuiseuxSeries& b) {
        return !(a == b);
    }

    std::string str(const std::string& var = "x") const;

   private:
    void insert_term(long key, const Scalar& c);
    void drop_beyond_prec();
    PuiseuxSeries lifted(long new_denom) const;
    static long lcm_long(long a, long b);

    long denom_;
    std::map<long, Scalar> terms_;
    Prec prec_;
};

/*
 * Substitution outer(inner); inner must have positive valuation. Either
 * inner is a monomial (exponents transform termwise) or outer has integer
 * exponents (Horner). Precision: min(val_in * prec_out,
 * (val_out - 1) * val_in + prec_in).
 */
PuiseuxSeries compose(const PuiseuxSeries& outer, const PuiseuxSeries& inner);

// Compositional inverse of a series with valuation exactly 1 on the integer
// grid; finite precision required and preserved.
PuiseuxSeries revert(const PuiseuxSeries& f);

// Serialization: {"denom":D,"prec":"p/q"|"inf","terms":[[e,"coeff"],...]}
// with terms ascending by scaled exponent; byte-deterministic.
std::string series_to_json(const PuiseuxSeries& s);
PuiseuxSeries series_from_json(const std::string& text);

}  // namespace rrc
