#include "rrc/triangle.hpp"

#include <algorithm>
#include <numeric>

#include "rrc/errors.hpp"

namespace rrc {

Signature make_signature(long n, long m, long k, long r) {
    if (n < 2 || m < 2 || k < 1 || r < 1)
        throw std::domain_error("signature requires n, m >= 2 and k, r >= 1");
    Signature sig{n, m, k, r};
    if (sig.N() <= 0) throw std::domain_error("signature is not hyperbolic");
    return sig;
}

namespace {

// min(x mod 2M, 2M - x mod 2M), the cosine fold of a residue.
long fold(long x, long M) {
    long y = x % (2 * M);
    if (y < 0) y += 2 * M;
    return std::min(y, 2 * M - y);
}

}  // namespace

std::vector<Signature> candidate_embeddings(long n, long m) {
    if (n < 2 || m < 2 || n * m - m - n <= 0)
        throw std::domain_error("triangle (n,m,infinity) is not hyperbolic");
    long L = std::lcm(n, m);
    std::vector<Signature> out;
    for (long u = 1; u <= L; ++u) {
        if (std::gcd(u, 2 * L) != 1) continue;
        long kp = fold(u, n);
        long r1 = fold(u, m), r2 = m - r1;
        bool ok1 = Rational(kp) / n + Rational(r1) / m < 1;
        bool ok2 = Rational(kp) / n + Rational(r2) / m < 1;
        if (ok1 == ok2)
            throw std::domain_error("ambiguous fold for residue " + std::to_string(u) +
                                    ": " + (ok1 ? "both" : "neither") +
                                    " cone choices are hyperbolic");
        Signature sig = make_signature(n, m, kp, ok1 ? r1 : r2);
        if (std::find(out.begin(), out.end(), sig) == out.end()) out.push_back(sig);
    }
    std::sort(out.begin(), out.end(), [](const Signature& a, const Signature& b) {
        int ra = (a.k == 1 && a.r == 1) ? 0 : 1;
        int rb = (b.k == 1 && b.r == 1) ? 0 : 1;
        if (ra != rb) return ra < rb;
        if (a.r != b.r) return a.r < b.r;
        return a.k < b.k;
    });
    return out;
}

std::pair<Rational, Rational> generator_weights(const Signature& sig) {
    return {make_rational(2 * sig.n, sig.N()), make_rational(2 * sig.m, sig.N())};
}

Rational mod1(const Rational& x) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return x - Rational(fl);
}

bool admissible_weight(const Signature& sig, const Rational& w) {
    long g = std::gcd(sig.n, sig.m);
    Rational t = w * sig.N() / (2 * g);
    return t >= 0 && t.get_den() == 1;
}

long dim_pure_weight(const Signature& sig, const Rational& w) {
    if (!admissible_weight(sig, w)) return 0;
    long g = std::gcd(sig.n, sig.m);
    long np = sig.n / g, mp = sig.m / g;
    Rational t = w * sig.N() / (2 * g);
    long T = mpz_class(t.get_num()).get_si();
    long cell = np * mp;
    long whole = T / cell, frac = T % cell;
    // frac/cell = a/n' + b/m' demands a mp + b np = frac in nonnegatives.
    bool representable = false;
    for (long a = 0; a * mp <= frac; ++a)
        if ((frac - a * mp) % np == 0) {
            representable = true;
            break;
        }
    return representable ? whole + 1 : whole;
}

std::vector<std::pair<long, long>> monomial_basis(const Signature& sig, const Rational& w) {
    std::vector<std::pair<long, long>> out;
    Rational wn = w * sig.N();
    if (wn < 0 || wn.get_den() != 1) return out;
    long target = mpz_class(wn.get_num()).get_si();
    for (long a = 0; 2 * a * sig.n <= target; ++a) {
        long rem = target - 2 * a * sig.n;
        if (rem % (2 * sig.m) == 0) out.emplace_back(a, rem / (2 * sig.m));
    }
    return out;
}

std::pair<Rational, Rational> multipliers(const Signature& sig) {
    return {mod1(make_rational(-sig.k, sig.N())),
            mod1(make_rational(-(sig.m - sig.r), sig.N()))};
}

Rational monomial_rotation(const Signature& sig, long a, long b) {
    auto [rq, rr] = multipliers(sig);
    return mod1(rq * a + rr * b);
}

Rational valence_degree(const std::vector<Signature>& sigs,
                        const std::vector<Rational>& weights) {
    if (sigs.size() != weights.size())
        throw std::domain_error("one weight per signature required");
    Rational total(0);
    for (std::size_t j = 0; j < sigs.size(); ++j)
        total += weights[j] * sigs[j].N() / (2 * sigs[j].n * sigs[j].m);
    return total;
}

namespace {

using Poly = std::vector<Rational>;

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// Exact quotient; a nonzero remainder is a programming error here.
Poly poly_div_exact(Poly num, const Poly& den) {
    Poly out(num.size() - den.size() + 1, Rational(0));
    for (long i = static_cast<long>(out.size()) - 1; i >= 0; --i) {
        Rational c = num[i + den.size() - 1] / den.back();
        out[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (const Rational& c : num)
        if (c != 0) throw std::logic_error("cyclotomic division left a remainder");
    return out;
}

Poly cyclotomic(long M) {
    Poly num(M + 1, Rational(0));
    num[0] = -1;
    num[M] = 1;
    if (M == 1) return num;
    Poly den{Rational(1)};
    for (long d = 1; d < M; ++d)
        if (M % d == 0) den = poly_mul(den, cyclotomic(d));
    return poly_div_exact(num, den);
}

/*
 * Folds the palindromic cyclotomic polynomial of even degree d to the
 * minimal polynomial of z + 1/z, through the Chebyshev-like basis
 * C_0 = 2, C_1 = x, C_{i+1} = x C_i - C_{i-1} with C_i(z + 1/z) =
 * z^i + z^-i.
 */
Poly fold_palindrome(const Poly& phi) {
    std::size_t half = (phi.size() - 1) / 2;
    Poly psi(half + 1, Rational(0));
    psi[0] = phi[half];
    Poly prev{Rational(2)}, cur{Rational(0), Rational(1)};
    for (std::size_t i = 1; i <= half; ++i) {
        for (std::size_t j = 0; j < cur.size(); ++j) psi[j] += phi[half + i] * cur[j];
        Poly next(cur.size() + 1, Rational(0));
        for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] = cur[j];
        for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return psi;
}

}  // namespace

std::string CosSymbol::str() const {
    return "2cos(pi*" + std::to_string(p) + "/" + std::to_string(q) + ")";
}

CosSymbol cos_symbol(long p, long q) {
    if (q < 1) throw std::domain_error("cosine denominator must be positive");
    // 2cos is even and 2pi-periodic: normalize p into [0, q].
    p %= 2 * q;
    if (p < 0) p += 2 * q;
    if (p > q) p = 2 * q - p;
    long g = std::gcd(p, q);
    if (p == 0) g = q;
    CosSymbol sym{p / g, q / g, std::nullopt, {}};
    if (sym.p == 0) {
        sym.q = 1;
        sym.value = Rational(2);
        sym.minpoly = {Rational(-2), Rational(1)};
        return sym;
    }
    if (sym.p == sym.q) {
        sym.value = Rational(-2);
        sym.minpoly = {Rational(2), Rational(1)};
        return sym;
    }
    // 2cos(pi p/q) = z + 1/z for z = e^(2 pi i p / 2q) of exact order M.
    long M = sym.p % 2 == 0 ? sym.q : 2 * sym.q;
    sym.minpoly = fold_palindrome(cyclotomic(M));
    if (sym.minpoly.size() == 2) sym.value = -sym.minpoly[0] / sym.minpoly[1];
    return sym;
}

GroupGenerators group_generators(const Signature& sig) {
    return {cos_symbol(sig.k, sig.n), cos_symbol(sig.r, sig.m)};
}

Rational word_rotation(const Rational& rot_s,
                       const std::vector<std::pair<char, long>>& word) {
    Rational total(0);
    for (const auto& [letter, exponent] : word) {
        if (letter == 'S')
            total += rot_s * exponent;
        else if (letter != 'T')
            throw std::domain_error("word letters must be S or T");
    }
    return mod1(total);
}

Report cocycle_check(const Signature& sig) {
    const std::vector<std::pair<char, long>> word{{'S', -2}, {'T', -2}, {'S', -1}};
    auto [rq, rr] = multipliers(sig);
    Report rep;
    Rational gq = word_rotation(rq, word);
    rep.add("v_Q(S^-2 T^-2 S^-1) = 1", gq == 0, "rotation " + to_string(gq));
    Rational gr = word_rotation(rr, word);
    rep.add("v_R(S^-2 T^-2 S^-1) = 1", gr == 0, "rotation " + to_string(gr));
    return rep;
}

}  // namespace rrc
