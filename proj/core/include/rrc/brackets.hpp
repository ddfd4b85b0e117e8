#pragma once

#include <vector>

#include "rrc/graded.hpp"
#include "rrc/report.hpp"
#include "rrc/scalar.hpp"
#include "rrc/series.hpp"

namespace rrc {

/*
 * n-th Rankin-Cohen bracket of q-expansions f, g of weights k, l:
 *   [f,g]_n = sum_{r+s=n} (-1)^r C(k+n-1,s) C(l+n-1,r) D^r f D^s g
 * with D = q d/dq and generalized binomial coefficients, so rational
 * weights are allowed. The result transforms with weight k + l + 2n.
 */
PuiseuxSeries rc_bracket(const PuiseuxSeries& f, const Rational& k, const PuiseuxSeries& g,
                         const Rational& l, long n);

// Same bracket with an arbitrary derivation in place of q d/dq.
GradedPoly rc_bracket(const Derivation& d, const GradedPoly& f, const Rational& k,
                      const GradedPoly& g, const Rational& l, long n);
// Weights inferred from homogeneity.
GradedPoly rc_bracket(const Derivation& d, const GradedPoly& f, const GradedPoly& g, long n);

/*
 * Chain f_0 = f, f_1 = partial(f, k), and
 *   f_{r+1} = partial(f_r, k + 2r) + r (r + k - 1) phi f_{r-1},
 * the higher Serre derivatives of f with respect to the weight-2 datum
 * (partial, phi). partial receives the element together with its weight.
 */
template <typename T, typename PartialFn>
std::vector<T> canonical_chain(const PartialFn& partial, const T& phi, const T& f,
                               const Rational& k, long n) {
    std::vector<T> chain{f};
    for (long r = 0; r < n; ++r) {
        T next = partial(chain.back(), k + 2 * r);
        if (r >= 1) {
            Rational c = Rational(r) * (Rational(r) + k - 1);
            next += (phi * chain[static_cast<std::size_t>(r - 1)]).scaled(Scalar(c));
        }
        chain.push_back(next);
    }
    return chain;
}

/*
 * Canonical n-th bracket built from the chains of f and g:
 *   [f,g]_n = sum_{r+s=n} (-1)^r C(k+n-1,s) C(l+n-1,r) f_r g_s.
 * Each chain uses its own element's weight.
 */
template <typename T, typename PartialFn>
T canonical_bracket(const PartialFn& partial, const T& phi, const T& f, const Rational& k,
                    const T& g, const Rational& l, long n) {
    std::vector<T> fc = canonical_chain(partial, phi, f, k, n);
    std::vector<T> gc = canonical_chain(partial, phi, g, l, n);
    T acc = (f * g).scaled(Scalar(0));
    for (long r = 0; r <= n; ++r) {
        long s = n - r;
        Rational c = binomial_coeff(k + n - 1, s) * binomial_coeff(l + n - 1, r);
        if (r % 2 != 0) c = -c;
        acc += (fc[static_cast<std::size_t>(r)] * gc[static_cast<std::size_t>(s)])
                   .scaled(Scalar(c));
    }
    return acc;
}

// Canonical bracket over a polynomial algebra, with a weight-independent
// derivation standing in for the Serre derivative.
GradedPoly canonical_bracket(const Derivation& partial, const GradedPoly& phi,
                             const GradedPoly& f, const Rational& k, const GradedPoly& g,
                             const Rational& l, long n);

/*
 * Formal identities of the bracket family, checked for elements f, g, h of
 * weights wf, wg, wh under any bracket functor br(f, wf, g, wg, n):
 *  - antisymmetry [f,g]_n = (-1)^n [g,f]_n for n <= nmax,
 *  - the Jacobi identity for [.,.]_1,
 *  - the mixed identity
 *    [[g,h]_0,f]_2 - [[h,f]_0,g]_2 + [[g,h]_2,f]_0 - [[h,f]_2,g]_0
 *      = [[f,g]_1,h]_1.
 * Nested arguments carry weight wf + wg + 2n.
 */
template <typename T, typename BracketFn>
Report identity_suite(const BracketFn& br, const T& f, const Rational& wf, const T& g,
                      const Rational& wg, const T& h, const Rational& wh, long nmax = 4) {
    Report rep;
    for (long n = 0; n <= nmax; ++n) {
        T lhs = br(f, wf, g, wg, n);
        T rhs = br(g, wg, f, wf, n);
        if (n % 2 != 0) rhs = rhs.scaled(Scalar(-1));
        rep.add("antisymmetry n=" + std::to_string(n), (lhs - rhs).is_zero());
    }
    {
        auto nest = [&](const T& a, const Rational& wa, const T& b, const Rational& wb,
                        const T& c, const Rational& wc) {
            return br(br(a, wa, b, wb, 1), wa + wb + 2, c, wc, 1);
        };
        T jac = nest(f, wf, g, wg, h, wh) + nest(g, wg, h, wh, f, wf) +
                nest(h, wh, f, wf, g, wg);
        rep.add("jacobi", jac.is_zero());
    }
    {
        T lhs = br(br(g, wg, h, wh, 0), wg + wh, f, wf, 2) -
                br(br(h, wh, f, wf, 0), wh + wf, g, wg, 2) +
                br(br(g, wg, h, wh, 2), wg + wh + 4, f, wf, 0) -
                br(br(h, wh, f, wf, 2), wh + wf + 4, g, wg, 0);
        T rhs = br(br(f, wf, g, wg, 1), wf + wg + 2, h, wh, 1);
        rep.add("mixed", (lhs - rhs).is_zero());
    }
    return rep;
}

/*
 * Tests whether a t1-free homogeneous F of weight w generates brackets of
 * the special closed form: dF = 0 for the canonical derivation of the
 * system, [F,t_j]_1 = w F dt_j for every other generator, and
 * [F,F]_2 = w^2 (w+1) phi F^2.
 */
Report special_element_form(const RRCSystem& sys, const GradedPoly& f);

}  // namespace rrc
