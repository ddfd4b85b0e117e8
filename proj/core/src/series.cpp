#include "rrc/series.hpp"

#include <numeric>
#include <sstream>

namespace rrc {

Rational binomial_coeff(const Rational& x, long k) {
    if (k < 0) return Rational(0);
    Rational num(1);
    for (long i = 0; i < k; ++i) num *= (x - i);
    Rational den(1);
    for (long i = 2; i <= k; ++i) den *= i;
    Rational r = num / den;
    r.canonicalize();
    return r;
}

namespace {

Rational ratio(long n, long d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

long ceil_to_long(const Rational& x) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    if (!q.fits_slong_p()) throw std::domain_error("precision bound overflow");
    return q.get_si();
}

// Valuation for precision bookkeeping: a series with no stored terms counts
// its own precision bound as valuation.
Prec val_or_prec(const PuiseuxSeries& s) {
    auto v = s.valuation();
    if (v) return Prec(*v);
    return s.precision();
}

Prec add_ext(const Prec& a, const Prec& b) {
    if (!a || !b) return std::nullopt;
    return Prec(*a + *b);
}

}  // namespace

long PuiseuxSeries::lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

void PuiseuxSeries::insert_term(long key, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void PuiseuxSeries::drop_beyond_prec() {
    if (!prec_) return;
    Rational bound = *prec_ * denom_;
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (Rational(it->first) >= bound)
            it = terms_.erase(it);
        else
            ++it;
    }
}

PuiseuxSeries PuiseuxSeries::lifted(long new_denom) const {
    if (new_denom == denom_) return *this;
    long f = new_denom / denom_;
    PuiseuxSeries r;
    r.denom_ = new_denom;
    r.prec_ = prec_;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e * f, c);
    return r;
}

void PuiseuxSeries::reduce_grid() {
    long g = denom_;
    for (const auto& [e, c] : terms_) g = std::gcd(g, std::labs(e));
    if (g <= 1) return;
    std::map<long, Scalar> reduced;
    for (const auto& [e, c] : terms_) reduced.emplace(e / g, c);
    terms_ = std::move(reduced);
    denom_ /= g;
}

PuiseuxSeries PuiseuxSeries::zero(Prec prec) {
    PuiseuxSeries s;
    s.prec_ = std::move(prec);
    return s;
}

PuiseuxSeries PuiseuxSeries::one(Prec prec) {
    return monomial(Scalar(1), Rational(0), std::move(prec));
}

PuiseuxSeries PuiseuxSeries::x(Prec prec) {
    return monomial(Scalar(1), Rational(1), std::move(prec));
}

PuiseuxSeries PuiseuxSeries::monomial(const Scalar& c, const Rational& exp, Prec prec) {
    PuiseuxSeries s;
    s.prec_ = std::move(prec);
    if (!exp.get_den().fits_slong_p() || !exp.get_num().fits_slong_p())
        throw std::domain_error("exponent overflow");
    s.denom_ = exp.get_den().get_si();
    if (!c.is_zero() && !(s.prec_ && !(exp < *s.prec_)))
        s.terms_.emplace(exp.get_num().get_si(), c);
    return s;
}

PuiseuxSeries PuiseuxSeries::from_raw(long denom, std::map<long, Scalar> terms, Prec prec) {
    if (denom < 1) throw ParseError("series denom must be >= 1");
    PuiseuxSeries s;
    s.denom_ = denom;
    s.prec_ = std::move(prec);
    for (const auto& [e, c] : terms) {
        if (c.is_zero()) continue;
        if (s.prec_ && !(ratio(e, denom) < *s.prec_))
            throw ParseError("series term at exponent >= prec");
        s.terms_.emplace(e, c);
    }
    return s;
}

std::optional<Rational> PuiseuxSeries::valuation() const {
    if (terms_.empty()) return std::nullopt;
    return ratio(terms_.begin()->first, denom_);
}

std::optional<Rational> PuiseuxSeries::top_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return ratio(terms_.rbegin()->first, denom_);
}

Scalar PuiseuxSeries::coeff(const Rational& e) const {
    if (prec_ && !(e < *prec_))
        throw PrecisionError("coefficient at exponent " + to_string(e) +
                             " requested beyond precision " + to_string(*prec_));
    Rational key = e * denom_;
    if (key.get_den() != 1) return Scalar(0);
    long k = key.get_num().get_si();
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar(0) : it->second;
}

std::vector<std::pair<Rational, Scalar>> PuiseuxSeries::terms() const {
    std::vector<std::pair<Rational, Scalar>> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.emplace_back(ratio(e, denom_), c);
    return out;
}

PuiseuxSeries PuiseuxSeries::operator-() const {
    PuiseuxSeries r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

PuiseuxSeries& PuiseuxSeries::operator+=(const PuiseuxSeries& o) {
    long L = lcm_long(denom_, o.denom_);
    PuiseuxSeries a = lifted(L), b = o.lifted(L);
    a.prec_ = min_prec(a.prec_, b.prec_);
    for (const auto& [e, c] : b.terms_) a.insert_term(e, c);
    a.drop_beyond_prec();
    return *this = std::move(a);
}

PuiseuxSeries& PuiseuxSeries::operator-=(const PuiseuxSeries& o) { return *this += -o; }

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    Prec p = min_prec(add_ext(val_or_prec(a), b.precision()),
                      add_ext(val_or_prec(b), a.precision()));
    long L = PuiseuxSeries::lcm_long(a.denom(), b.denom());
    PuiseuxSeries la = a.lifted(L), lb = b.lifted(L);
    PuiseuxSeries r;
    r.denom_ = L;
    r.prec_ = p;
    std::optional<Rational> bound;
    if (p) bound = *p * L;
    for (const auto& [ea, ca] : la.terms_) {
        for (const auto& [eb, cb] : lb.terms_) {
            long e = ea + eb;
            if (bound && Rational(e) >= *bound) break;
            r.insert_term(e, ca * cb);
        }
    }
    return r;
}

PuiseuxSeries PuiseuxSeries::scaled(const Scalar& c) const {
    PuiseuxSeries r;
    r.denom_ = denom_;
    r.prec_ = prec_;
    if (c.is_zero()) return r;
    for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
    return r;
}

PuiseuxSeries PuiseuxSeries::mul_monomial(const Scalar& c, const Rational& e) const {
    return *this * monomial(c, e);
}

PuiseuxSeries operator/(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    if (b.is_zero()) throw std::domain_error("division by a series with no known leading term");
    long L = PuiseuxSeries::lcm_long(a.denom(), b.denom());
    PuiseuxSeries rem = a.lifted(L), g = b.lifted(L);
    long eg = g.terms_.begin()->first;
    Scalar cg = g.terms_.begin()->second;

    Prec p = min_prec(shift_prec(a.precision(), -ratio(eg, L)),
                      add_ext(shift_prec(val_or_prec(a), -ratio(2 * eg, L)), b.precision()));

    PuiseuxSeries q;
    q.denom_ = L;
    q.prec_ = p;
    std::optional<Rational> bound;
    if (p) bound = *p * L;
    // Exact divisibility bound: a terminating quotient never needs exponents
    // above top(a) - lead(b) on the common grid.
    long top_bound = rem.terms_.empty() ? 0 : rem.terms_.rbegin()->first - eg;
    while (!rem.terms_.empty()) {
        long er = rem.terms_.begin()->first;
        long eq = er - eg;
        if (bound && Rational(eq) >= *bound) break;
        if (!bound && eq > top_bound)
            throw std::domain_error("series division does not terminate; truncate an operand");
        Scalar cq = rem.terms_.begin()->second / cg;
        q.insert_term(eq, cq);
        for (const auto& [e, c] : g.terms_) rem.insert_term(e + eq, -(c * cq));
    }
    q.drop_beyond_prec();
    return q;
}

PuiseuxSeries PuiseuxSeries::derive() const {
    PuiseuxSeries r;
    r.denom_ = denom_;
    r.prec_ = shift_prec(prec_, Rational(-1));
    for (const auto& [e, c] : terms_) {
        if (e == 0) continue;
        r.insert_term(e - denom_, c * Scalar(ratio(e, denom_)));
    }
    r.drop_beyond_prec();
    return r;
}

PuiseuxSeries PuiseuxSeries::theta() const {
    PuiseuxSeries r;
    r.denom_ = denom_;
    r.prec_ = prec_;
    for (const auto& [e, c] : terms_) {
        if (e == 0) continue;
        r.terms_.emplace(e, c * Scalar(ratio(e, denom_)));
    }
    return r;
}

PuiseuxSeries PuiseuxSeries::pow_int(long k) const {
    if (k < 0) return one() / pow_int(-k);
    PuiseuxSeries acc = one();
    PuiseuxSeries base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

PuiseuxSeries PuiseuxSeries::pow_rat(long num, long den) const {
    if (den <= 0) throw std::invalid_argument("pow_rat: positive denominator required");
    long g = std::gcd(std::labs(num), den);
    num /= g;
    den /= g;
    PuiseuxSeries r = den == 1 ? *this : nth_root(den);
    return r.pow_int(num);
}

PuiseuxSeries PuiseuxSeries::nth_root(long n) const {
    if (n <= 0) throw std::invalid_argument("root index must be positive");
    if (n == 1) return *this;
    if (terms_.empty()) throw std::domain_error("n-th root of a series with no known leading term");
    if (!prec_) {
        if (terms_.size() == 1) {
            auto [e, c] = *terms_.begin();
            return monomial(c.nth_root(n), ratio(e, denom_ * n));
        }
        throw std::domain_error("n-th root of an exact series requires truncation");
    }

    long L = denom_ * n;
    PuiseuxSeries f = lifted(L);
    long e0 = f.terms_.begin()->first;
    Scalar c0 = f.terms_.begin()->second;
    Scalar c0root = c0.nth_root(n);

    // Normalized s = f / (c0 x^e0) has s_0 = 1; r = s^(1/n) solves
    // n s (theta r) = r (theta s), giving for e > 0:
    //   n e r_e = sum_{a>=1} s_a r_{e-a} (a - n(e-a)).
    std::map<long, Scalar> s;
    Scalar inv = c0.inverse();
    for (const auto& [e, c] : f.terms_) s.emplace(e - e0, c * inv);

    Rational scaled_bound = (*prec_ - ratio(e0, L)) * L;
    long ebound = ceil_to_long(scaled_bound);
    std::map<long, Scalar> r;
    r.emplace(0, Scalar(1));
    for (long e = 1; e < ebound; ++e) {
        Scalar acc(0);
        for (const auto& [a, sa] : s) {
            if (a < 1) continue;
            if (a > e) break;
            auto it = r.find(e - a);
            if (it == r.end()) continue;
            acc += sa * it->second * Scalar(make_rational(a - n * (e - a)));
        }
        if (acc.is_zero()) continue;
        r.emplace(e, acc / Scalar(make_rational(n * e)));
    }

    // Lead key e0 on the lifted grid is n times the original key, so the
    // root's lead sits at e0/n and precision drops by val*(n-1)/n.
    PuiseuxSeries out;
    out.denom_ = L;
    out.prec_ = shift_prec(prec_, -ratio(e0 * (n - 1), L * n));
    for (const auto& [e, c] : r) out.insert_term(e + e0 / n, c * c0root);
    out.drop_beyond_prec();
    out.reduce_grid();
    return out;
}

PuiseuxSeries PuiseuxSeries::exp() const {
    if (terms_.empty() && !prec_) return one();
    auto v = valuation();
    if (v && !(*v > 0)) throw std::domain_error("exp requires positive valuation");
    if (!prec_) throw std::domain_error("exp of an exact series requires truncation");

    // g = exp(f) solves theta g = g theta f:
    //   e g_e = sum_{a>=1} a f_a g_{e-a}.
    long ebound = ceil_to_long(*prec_ * denom_);
    std::map<long, Scalar> g;
    g.emplace(0, Scalar(1));
    for (long e = 1; e < ebound; ++e) {
        Scalar acc(0);
        for (const auto& [a, fa] : terms_) {
            if (a < 1) continue;
            if (a > e) break;
            auto it = g.find(e - a);
            if (it == g.end()) continue;
            acc += fa * it->second * Scalar(make_rational(a));
        }
        if (acc.is_zero()) continue;
        g.emplace(e, acc / Scalar(make_rational(e)));
    }
    PuiseuxSeries out;
    out.denom_ = denom_;
    out.prec_ = prec_;
    out.terms_ = std::move(g);
    out.drop_beyond_prec();
    out.reduce_grid();
    return out;
}

PuiseuxSeries PuiseuxSeries::log() const {
    bool unit_head = !terms_.empty() && terms_.begin()->first == 0 && terms_.begin()->second.is_one();
    if (!unit_head) throw std::domain_error("log requires constant term 1");
    if (!prec_) {
        if (terms_.size() == 1) return zero();
        throw std::domain_error("log of an exact series requires truncation");
    }
    // theta(log f) = theta f / f; divide each coefficient by its exponent.
    PuiseuxSeries t = theta() / *this;
    PuiseuxSeries out;
    out.denom_ = t.denom_;
    out.prec_ = t.prec_;
    for (const auto& [e, c] : t.terms_) {
        if (e == 0) continue;
        out.insert_term(e, c * Scalar(ratio(t.denom_, e)));
    }
    out.drop_beyond_prec();
    return out;
}

PuiseuxSeries PuiseuxSeries::truncated(const Rational& p) const {
    PuiseuxSeries r = *this;
    r.prec_ = min_prec(r.prec_, Prec(p));
    r.drop_beyond_prec();
    return r;
}

std::string PuiseuxSeries::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (e != 0) os << "*" << var << "^(" << to_string(e) << ")";
    }
    if (first) os << "0";
    if (prec_) os << " + O(" << var << "^(" << to_string(*prec_) << "))";
    return os.str();
}

PuiseuxSeries compose(const PuiseuxSeries& outer, const PuiseuxSeries& inner) {
    auto vi = inner.valuation();
    if (!vi || !(*vi > 0)) throw std::domain_error("compose requires inner valuation > 0");

    // Monomial inner: exponents transform termwise, coefficients pick up
    // exact powers of the monomial coefficient.
    if (inner.raw_terms().size() == 1 && inner.exact()) {
        Rational s = *vi;
        Scalar ci = inner.raw_terms().begin()->second;
        Prec p = outer.precision() ? Prec(*outer.precision() * s) : Prec{};
        PuiseuxSeries r = PuiseuxSeries::zero(p);
        for (const auto& [e, c] : outer.terms()) {
            Scalar factor = c;
            if (!ci.is_one()) {
                long den = static_cast<long>(e.get_den().get_si());
                long num = static_cast<long>(e.get_num().get_si());
                factor = c * ci.nth_root(den).pow(num);
            }
            r += PuiseuxSeries::monomial(factor, e * s, p);
        }
        return r;
    }

    PuiseuxSeries f = outer;
    f.reduce_grid();
    if (f.denom() != 1)
        throw std::domain_error("compose requires integer outer exponents or a monomial inner");

    auto vf = f.valuation();
    Prec p = min_prec(f.precision() ? Prec(*vi * *f.precision()) : Prec{},
                      shift_prec(inner.precision(), *vi * ((vf ? *vf : Rational(0)) - 1)));

    long top = f.is_zero() ? 0 : f.raw_terms().rbegin()->first;
    long bottom = f.is_zero() ? 0 : f.raw_terms().begin()->first;
    long lo = std::min(bottom, 0L);
    // Horner over exponents top..lo, then one shift by inner^lo.
    PuiseuxSeries acc = PuiseuxSeries::zero();
    for (long e = top; e >= lo; --e) {
        acc = acc * inner;
        auto it = f.raw_terms().find(e);
        if (it != f.raw_terms().end())
            acc += PuiseuxSeries::monomial(it->second, Rational(0));
    }
    if (lo < 0) acc = acc * inner.pow_int(lo);
    if (p) acc = acc.truncated(*p);
    return acc;
}

PuiseuxSeries revert(const PuiseuxSeries& f) {
    PuiseuxSeries g = f;
    g.reduce_grid();
    if (g.denom() != 1) throw std::domain_error("revert requires integer exponents");
    auto v = g.valuation();
    if (!v || *v != 1) throw std::domain_error("revert requires valuation exactly 1");
    if (g.exact()) throw std::domain_error("revert requires finite precision");
    Rational P = *g.precision();

    // Newton iteration for f(h) = x, doubling the agreement order each step.
    Scalar c1 = g.coeff(Rational(1));
    PuiseuxSeries h = PuiseuxSeries::monomial(c1.inverse(), Rational(1), Prec(P));
    PuiseuxSeries xvar = PuiseuxSeries::x(Prec(P));
    PuiseuxSeries df = g.derive();
    for (int i = 0; i < 64; ++i) {
        PuiseuxSeries resid = compose(g, h) - xvar;
        if (resid.is_zero()) return h;
        h = (h - resid / compose(df, h)).truncated(P);
    }
    throw std::logic_error("series reversion failed to converge");
}

}  // namespace rrc
