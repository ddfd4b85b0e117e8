#include "rrc/brackets.hpp"

#include "rrc/errors.hpp"

namespace rrc {

PuiseuxSeries rc_bracket(const PuiseuxSeries& f, const Rational& k, const PuiseuxSeries& g,
                         const Rational& l, long n) {
    if (n < 0) throw ShapeError("bracket order must be nonnegative");
    std::vector<PuiseuxSeries> df{f}, dg{g};
    for (long r = 0; r < n; ++r) {
        df.push_back(df.back().theta());
        dg.push_back(dg.back().theta());
    }
    PuiseuxSeries acc = PuiseuxSeries::zero(min_prec(f.precision(), g.precision()));
    for (long r = 0; r <= n; ++r) {
        long s = n - r;
        Rational c = binomial_coeff(k + n - 1, s) * binomial_coeff(l + n - 1, r);
        if (r % 2 != 0) c = -c;
        acc += (df[static_cast<std::size_t>(r)] * dg[static_cast<std::size_t>(s)])
                   .scaled(Scalar(c));
    }
    return acc;
}

GradedPoly rc_bracket(const Derivation& d, const GradedPoly& f, const Rational& k,
                      const GradedPoly& g, const Rational& l, long n) {
    if (n < 0) throw ShapeError("bracket order must be nonnegative");
    std::vector<GradedPoly> df{f}, dg{g};
    for (long r = 0; r < n; ++r) {
        df.push_back(d.apply(df.back()));
        dg.push_back(d.apply(dg.back()));
    }
    GradedPoly acc = GradedPoly::zero(f.spec());
    for (long r = 0; r <= n; ++r) {
        long s = n - r;
        Rational c = binomial_coeff(k + n - 1, s) * binomial_coeff(l + n - 1, r);
        if (r % 2 != 0) c = -c;
        acc += (df[static_cast<std::size_t>(r)] * dg[static_cast<std::size_t>(s)])
                   .scaled(Scalar(c));
    }
    return acc;
}

GradedPoly rc_bracket(const Derivation& d, const GradedPoly& f, const GradedPoly& g, long n) {
    if (f.is_zero() || g.is_zero()) return GradedPoly::zero(f.spec());
    return rc_bracket(d, f, f.weight(), g, g.weight(), n);
}

GradedPoly canonical_bracket(const Derivation& partial, const GradedPoly& phi,
                             const GradedPoly& f, const Rational& k, const GradedPoly& g,
                             const Rational& l, long n) {
    auto step = [&partial](const GradedPoly& p, const Rational&) { return partial.apply(p); };
    return canonical_bracket(step, phi, f, k, g, l, n);
}

Report special_element_form(const RRCSystem& sys, const GradedPoly& f) {
    Report rep;
    if (f.depends_on(sys.t1)) {
        rep.add("free of " + sys.spec->names[sys.t1], false);
        return rep;
    }
    CanonicalPair pair = canonical_from_rrc(sys);
    std::vector<long> pos(sys.spec->rank(), -1);
    {
        long next = 0;
        for (std::size_t j = 0; j < sys.spec->rank(); ++j)
            if (j != sys.t1) pos[j] = next++;
    }
    GradedPoly base_f = GradedPoly::zero(pair.spec);
    for (const auto& [e, c] : f.terms()) {
        std::vector<int> exps(pair.spec->rank(), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) exps[static_cast<std::size_t>(pos[i])] = e[i];
        base_f += GradedPoly::monomial(pair.spec, exps, c);
    }
    if (!base_f.is_homogeneous()) {
        rep.add("homogeneous", false);
        return rep;
    }
    Rational w = base_f.weight();
    rep.add("dF = 0", pair.partial.apply(base_f).is_zero());
    for (std::size_t j = 0; j < pair.spec->rank(); ++j) {
        GradedPoly tj = GradedPoly::generator(pair.spec, j);
        GradedPoly lhs =
            canonical_bracket(pair.partial, pair.phi, base_f, w, tj, pair.spec->weights[j], 1);
        GradedPoly rhs = (base_f * pair.partial.images()[j]).scaled(Scalar(w));
        rep.add("[F," + pair.spec->names[j] + "]_1 = w F d" + pair.spec->names[j],
                lhs == rhs);
    }
    {
        GradedPoly lhs = canonical_bracket(pair.partial, pair.phi, base_f, w, base_f, w, 2);
        GradedPoly rhs = (pair.phi * base_f * base_f).scaled(Scalar(w * w * (w + 1)));
        rep.add("[F,F]_2 = w^2(w+1) phi F^2", lhs == rhs);
    }
    return rep;
}

}  // namespace rrc
