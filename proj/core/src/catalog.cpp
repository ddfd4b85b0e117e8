#include "rrc/catalog.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "rrc/errors.hpp"
#include "rrc/rrc_system.hpp"

namespace rrc {

namespace {

std::mutex cache_mutex;

std::map<std::pair<std::string, long>, PuiseuxSeries>& cache() {
    static std::map<std::pair<std::string, long>, PuiseuxSeries> c;
    return c;
}

// Build runs outside the lock so cached entries may build each other.
template <typename Fn>
PuiseuxSeries cached(const std::string& name, long order, Fn&& build) {
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache().find({name, order});
        if (it != cache().end()) return it->second;
    }
    PuiseuxSeries s = build();
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache().emplace(std::make_pair(name, order), std::move(s)).first->second;
}

long ceil_long(const Rational& x) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q.get_si();
}

PuiseuxSeries stretch(const PuiseuxSeries& f, const Rational& factor) {
    if (factor == 1) return f;
    return compose(f, PuiseuxSeries::monomial(Scalar(1), factor, Prec{}));
}

void check_order(long order) {
    if (order < 1) throw std::domain_error("expansion order must be positive");
}

PuiseuxSeries eisenstein_build(long k, long order) {
    long p = k - 1;
    long factor = k == 2 ? -24 : (k == 4 ? 240 : -504);
    std::vector<mpz_class> sig(static_cast<std::size_t>(order), 0);
    for (long d = 1; d < order; ++d) {
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(d),
                      static_cast<unsigned long>(p));
        for (long md = d; md < order; md += d) sig[md] += pw;
    }
    std::map<long, Scalar> terms{{0, Scalar(1)}};
    for (long n = 1; n < order; ++n) terms[n] = Scalar(Rational(factor * sig[n]));
    return PuiseuxSeries::from_raw(1, terms, Prec{Rational(order)});
}

PuiseuxSeries theta_build(int which, long order) {
    std::map<long, Scalar> terms;
    if (which == 3) {
        terms[0] = Scalar(1);
        for (long n = 1; n * n < order; ++n) terms[4 * n * n] = Scalar(2);
    } else {
        for (long n = 0; (2 * n + 1) * (2 * n + 1) < 4 * order; ++n)
            terms[(2 * n + 1) * (2 * n + 1)] = Scalar(2);
    }
    return PuiseuxSeries::from_raw(4, terms, Prec{Rational(order)});
}

bool integral(const PuiseuxSeries& f) {
    for (const auto& [e, c] : f.terms()) {
        (void)e;
        if (!c.is_rational() || c.rat().get_den() != 1) return false;
    }
    return true;
}

PuiseuxSeries conj_series(const PuiseuxSeries& f) {
    std::map<long, Scalar> terms;
    for (const auto& [e, c] : f.raw_terms()) terms[e] = c.conj();
    return PuiseuxSeries::from_raw(f.denom(), terms, f.precision());
}

}  // namespace

PuiseuxSeries eisenstein(long k, long order) {
    if (k != 2 && k != 4 && k != 6)
        throw std::domain_error("eisenstein weight must be 2, 4, or 6");
    check_order(order);
    return cached("E" + std::to_string(k), order,
                  [&] { return eisenstein_build(k, order); });
}

PuiseuxSeries delta(long order) {
    check_order(order);
    return cached("DELTA", order, [&] {
        PuiseuxSeries e4 = eisenstein(4, order), e6 = eisenstein(6, order);
        return (e4.pow_int(3) - e6.pow_int(2)).scaled(Scalar(make_rational(1, 1728)));
    });
}

PuiseuxSeries theta(int which, long order, const Rational& nome) {
    if (which != 2 && which != 3)
        throw std::domain_error("theta index must be 2 or 3");
    check_order(order);
    if (nome <= 0) throw std::domain_error("nome must be positive");
    if (nome == 1)
        return cached("THETA" + std::to_string(which), order,
                      [&] { return theta_build(which, order); });
    Rational inv = Rational(1) / nome;
    return stretch(theta(which, ceil_long(Rational(order * nome)), 1), inv);
}

PuiseuxSeries serre_derivative(const PuiseuxSeries& f, const Rational& k) {
    Prec p = f.precision();
    if (!p) throw std::domain_error("serre derivative needs a truncated expansion");
    long order = std::max(1L, ceil_long(*p));
    return f.theta() - (eisenstein(2, order) * f).scaled(Scalar(Rational(k / 12)));
}

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names{"E2",    "E4",     "E6",
                                                "DELTA", "THETA2", "THETA3"};
    return names;
}

CatalogForm catalog_form(const std::string& name, long order, const Rational& nome) {
    check_order(order);
    if (nome <= 0) throw std::domain_error("nome must be positive");
    Rational inv = Rational(1) / nome;
    long base_order = ceil_long(Rational(order * nome));
    auto eis = [&](long k) { return stretch(eisenstein(k, base_order), inv); };
    if (name == "E2") return {name, Rational(2), nome, eis(2)};
    if (name == "E4") return {name, Rational(4), nome, eis(4)};
    if (name == "E6") return {name, Rational(6), nome, eis(6)};
    if (name == "DELTA") return {name, Rational(12), nome, stretch(delta(base_order), inv)};
    if (name == "THETA2") return {name, make_rational(1, 2), nome, theta(2, order, nome)};
    if (name == "THETA3") return {name, make_rational(1, 2), nome, theta(3, order, nome)};
    throw std::domain_error("unknown catalog form '" + name + "'");
}

void require_same_nome(const CatalogForm& a, const CatalogForm& b) {
    if (a.nome != b.nome)
        throw FieldMismatch("nome mismatch between " + a.name + " and " + b.name);
}

Report verify_33(long order) {
    if (order < 6)
        throw std::domain_error("verify_33 tabulates coefficients through order 5");
    Rational half = make_rational(1, 2);
    PuiseuxSeries th3 = theta(3, order, half);
    PuiseuxSeries th2 = theta(2, order, half);
    PuiseuxSeries P = catalog_form("E2", order, half).series.scaled(
        Scalar(make_rational(1, 6)));
    Scalar two_s3(Rational(0), Rational(2), -3);
    PuiseuxSeries sym = th3.pow_int(4) + th2.pow_int(4);
    PuiseuxSeries cross = (th3 * th2).pow_int(2);
    PuiseuxSeries Q = sym + cross.scaled(two_s3);
    PuiseuxSeries R = sym - cross.scaled(two_s3);

    Report rep;
    auto tab = [](const PuiseuxSeries& f, const std::vector<Scalar>& expect) {
        for (std::size_t j = 0; j < expect.size(); ++j)
            if (f.coeff(static_cast<long>(j), 1) != expect[j]) return false;
        return true;
    };
    Scalar s3_8(Rational(0), Rational(8), -3), s3_32(Rational(0), Rational(32), -3),
        s3_48(Rational(0), Rational(48), -3);
    rep.add("P tabulated through q^5",
            tab(P, {Scalar(make_rational(1, 6)), Scalar(0), Scalar(-4), Scalar(0),
                    Scalar(-12), Scalar(0)}));
    rep.add("Q tabulated through q^5",
            tab(Q, {Scalar(1), s3_8, Scalar(24), s3_32, Scalar(24), s3_48}));
    rep.add("R tabulated through q^5",
            tab(R, {Scalar(1), -s3_8, Scalar(24), -s3_32, Scalar(24), -s3_48}));

    TriangleRRC t33 = build_system(make_signature(3, 3, 1, 1));
    SeriesSolution sol{t33.sig, "q", P, Q, R, PuiseuxSeries::x(P.precision())};
    rep.absorb(verify_system(t33, sol));

    auto third = Scalar(make_rational(1, 3));
    PuiseuxSeries Qh = (Q + R).scaled(Scalar(half));
    PuiseuxSeries Rh = Q * R;
    rep.add("D P = P^2 - QR/36 (symmetrized)",
            (P.theta() - (P * P - Rh.scaled(Scalar(make_rational(1, 36))))).is_zero());
    rep.add("D Qh = 2 P Qh - (2 Qh^2 - Rh)/3",
            (Qh.theta() -
             ((P * Qh).scaled(Scalar(2)) -
              ((Qh * Qh).scaled(Scalar(2)) - Rh).scaled(third)))
                .is_zero());
    rep.add("D Rh = 4 P Rh - (8 Qh^3 - 6 Qh Rh)/3",
            (Rh.theta() -
             ((P * Rh).scaled(Scalar(4)) -
              (Qh.pow_int(3).scaled(Scalar(8)) - (Qh * Rh).scaled(Scalar(6)))
                  .scaled(third)))
                .is_zero());

    PuiseuxSeries u = Q + R;
    rep.add("D u = 2 P u - (u^2 - 2 QR)/3",
            (u.theta() -
             ((P * u).scaled(Scalar(2)) - (u * u - Rh.scaled(Scalar(2))).scaled(third)))
                .is_zero());
    rep.add("D (QR) = 4 P QR - (u^3 - 3 u QR)/3",
            (Rh.theta() -
             ((P * Rh).scaled(Scalar(4)) -
              (u.pow_int(3) - (u * Rh).scaled(Scalar(3))).scaled(third)))
                .is_zero());

    rep.add("Q R = E4 of the squared variable",
            Rh == catalog_form("E4", order, half).series);
    rep.add("(Q + R)/2 = theta3^4 + theta2^4", Qh == sym);
    rep.add("R is the conjugate of Q", conj_series(Q) == R);

    rep.add("(Q + R)/2 has integer coefficients", integral(Qh));
    rep.add("Q R has integer coefficients", integral(Rh));
    PuiseuxSeries tail = P.scaled(Scalar(6)) - PuiseuxSeries::one(P.precision());
    rep.add("6 P - 1 is an integral cusp tail",
            integral(tail) && tail.coeff(0, 1) == Scalar(0));
    return rep;
}

BigradedSystem s25_system() {
    SpecPtr spec = make_spec(
        {"P1", "P2", "B", "Q2", "R2"},
        {Rational(2), Rational(0), Rational(1), Rational(0), Rational(0)},
        {Rational(0), Rational(2), Rational(-3), Rational(4), Rational(10)});
    GradedPoly P1 = GradedPoly::generator(spec, 0);
    GradedPoly P2 = GradedPoly::generator(spec, 1);
    GradedPoly B = GradedPoly::generator(spec, 2);
    GradedPoly Q2 = GradedPoly::generator(spec, 3);
    GradedPoly R2 = GradedPoly::generator(spec, 4);
    GradedPoly phi2 = B * B * Q2;
    RRCSystem sys;
    sys.spec = spec;
    sys.t1 = 0;
    sys.images = {
        P1 * P1 + (Q2.pow(3) * B.pow(4)).scaled(Scalar(make_rational(-9, 400))),
        P2 * P2 * phi2 + (Q2 * Q2 * B * B).scaled(Scalar(make_rational(-1, 400))),
        P1 * B + (P2 * B.pow(3) * Q2).scaled(Scalar(-3)),
        (P2 * phi2 * Q2).scaled(Scalar(4)) + (R2 * B * B).scaled(Scalar(make_rational(-1, 5))),
        (P2 * phi2 * R2).scaled(Scalar(10)) +
            (Q2.pow(4) * B * B).scaled(Scalar(make_rational(-1, 2)))};
    return {sys, 0, 1, phi2};
}

}  // namespace rrc
