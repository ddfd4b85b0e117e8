#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rrc/report.hpp"
#include "rrc/scalar.hpp"
#include "rrc/series.hpp"

namespace rrc {

// Names and weights of the generators of a free graded polynomial algebra.
// weights2, when nonempty, has the same length as weights and carries a
// second independent grading.
struct AlgebraSpec {
    std::vector<std::string> names;
    std::vector<Rational> weights;
    std::vector<Rational> weights2;

    std::size_t rank() const { return names.size(); }
    bool bigraded() const { return !weights2.empty(); }
    // Index of a generator by name, or -1 when absent.
    long index_of(const std::string& name) const;

    bool operator==(const AlgebraSpec&) const = default;
};

using SpecPtr = std::shared_ptr<const AlgebraSpec>;

SpecPtr make_spec(std::vector<std::string> names, std::vector<Rational> weights,
                  std::vector<Rational> weights2 = {});

// Polynomial over Scalar in the generators of a fixed AlgebraSpec.
// Invariants: every exponent vector has length spec->rank() and nonnegative
// entries, and no stored coefficient is zero.
class GradedPoly {
  public:
    explicit GradedPoly(SpecPtr spec) : spec_(std::move(spec)) {}

    static GradedPoly zero(SpecPtr spec) { return GradedPoly(std::move(spec)); }
    static GradedPoly constant(SpecPtr spec, const Scalar& c);
    static GradedPoly generator(SpecPtr spec, std::size_t i);
    static GradedPoly monomial(SpecPtr spec, std::vector<int> exps, const Scalar& c);

    const SpecPtr& spec() const { return spec_; }
    const std::map<std::vector<int>, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    GradedPoly operator-() const;
    GradedPoly& operator+=(const GradedPoly& rhs);
    GradedPoly& operator-=(const GradedPoly& rhs);
    friend GradedPoly operator+(GradedPoly lhs, const GradedPoly& rhs) { return lhs += rhs; }
    friend GradedPoly operator-(GradedPoly lhs, const GradedPoly& rhs) { return lhs -= rhs; }
    friend GradedPoly operator*(const GradedPoly& lhs, const GradedPoly& rhs);
    GradedPoly scaled(const Scalar& c) const;
    GradedPoly pow(long n) const;

    bool operator==(const GradedPoly& rhs) const { return (*this - rhs).is_zero(); }
    bool operator!=(const GradedPoly& rhs) const { return !(*this == rhs); }

    // Formal partial derivative with respect to generator i.
    GradedPoly partial(std::size_t i) const;
    bool depends_on(std::size_t i) const;

    // Weight of one monomial in grading component 0 or 1.
    Rational monomial_weight(const std::vector<int>& exps, int component = 0) const;
    // True when every term has weight w in the given component; the zero
    // polynomial is homogeneous of every weight.
    bool homogeneous_of(const Rational& w, int component = 0) const;
    bool is_homogeneous(int component = 0) const;
    // Common weight of all terms; throws ShapeError when inhomogeneous or zero.
    Rational weight(int component = 0) const;

    // Substitute one series per generator.
    PuiseuxSeries eval(const std::vector<PuiseuxSeries>& values) const;
    // Substitute one scalar per generator.
    Scalar eval_scalar(const std::vector<Scalar>& values) const;

    // Deterministic rendering readable back by parse().
    std::string str() const;
    // Parse an expression in the spec's generator names.  Grammar: sums of
    // products of powers, rational and sqrt(d) literals, explicit '*', '^'
    // with nonnegative integer exponents, parentheses.
    static GradedPoly parse(SpecPtr spec, const std::string& text);

  private:
    SpecPtr spec_;
    std::map<std::vector<int>, Scalar> terms_;

    void insert_term(const std::vector<int>& exps, const Scalar& c);
    void check_compatible(const GradedPoly& rhs) const;
};

// Derivation of the algebra, determined by its images on the generators.
// shift is the amount the derivation adds to the principal weight; shift2
// applies to the second grading when the spec carries one.
class Derivation {
  public:
    Derivation(SpecPtr spec, std::vector<GradedPoly> images, Rational shift,
               Rational shift2 = Rational(0));

    const SpecPtr& spec() const { return spec_; }
    const std::vector<GradedPoly>& images() const { return images_; }
    const Rational& shift() const { return shift_; }
    const Rational& shift2() const { return shift2_; }

    // Extension to the whole algebra by the Leibniz rule.
    GradedPoly apply(const GradedPoly& p) const;

  private:
    SpecPtr spec_;
    std::vector<GradedPoly> images_;
    Rational shift_;
    Rational shift2_;
};

// Commutator A.B - B.A, again a derivation; shifts add.
Derivation lie_bracket(const Derivation& a, const Derivation& b);

// Differential system D t_j = image_j on a graded algebra, with the
// distinguished quasi-modular generator at index t1.
struct RRCSystem {
    SpecPtr spec;
    std::size_t t1 = 0;
    std::vector<GradedPoly> images;

    Derivation derivation() const;
};

// Shape test: weight(t1) = 2, D t1 = t1^2 + p1 and D t_j = w_j t1 t_j + p_j
// with every p_j free of t1 and homogeneous of weight w_j + 2.
Report rrc_shape_check(const RRCSystem& sys);

// Euler field W t_j = w_j t_j, shift 0.
Derivation euler_field(const SpecPtr& spec);
// Lowering field d t1 = -1, zero on the other generators, shift -2.
Derivation lowering_operator(const RRCSystem& sys);

// Checks [D,delta] = W, [W,D] = 2D, [W,delta] = -2 delta.
Report sl2_check(const Derivation& d, const Derivation& w, const Derivation& delta);
Report sl2_check(const RRCSystem& sys);

// Weight-2 data equivalent to an RRC system: a derivation of the algebra
// generated by everything except t1, together with the weight-4 element Phi
// such that the extension satisfies D t1 = t1^2 + Phi.
struct CanonicalPair {
    SpecPtr spec;
    Derivation partial;
    GradedPoly phi;
};

// Restriction of sys to the t1-free subalgebra; requires rrc shape.
CanonicalPair canonical_from_rrc(const RRCSystem& sys);
// Inverse construction: adjoin a weight-2 generator t1name and set
// D t_j = w_j t1 t_j + partial(t_j), D t1 = t1^2 + phi.
RRCSystem extend_algebra(const CanonicalPair& pair, const std::string& t1name);

// Shape test for a bigraded system with two quasi-modular generators p1, p2
// and a distinguished bi-weight (2,-2) element phi2 standing in for the
// second multiplier: D p1 = p1^2 + q1, D p2 = p2^2 phi2 + q2, and for every
// other generator f of bi-weight (k,l),
// D f = (k p1 + l p2 phi2) f + q_f with q_f free of p1, p2 and bi-homogeneous
// of weight (k+2, l).
Report bigraded_serre_check(const RRCSystem& sys, std::size_t p1, std::size_t p2,
                            const GradedPoly& phi2);

// Text form of a system, one line per generator:
//   name : weight = expression
// with weight "(a,b)" when bigraded.  The distinguished generator is
// emitted first and is taken to be the first line when reading.
std::string system_to_text(const RRCSystem& sys);
RRCSystem system_from_text(const std::string& text);

}  // namespace rrc
