#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <numeric>
#include <set>

#include "rrc/triangle.hpp"

using namespace rrc;

namespace {

// 2x2 matrices over the rationals, enough to exercise the generator
// relations for signatures whose cosines are rational.
using Mat = std::array<Rational, 4>;

Mat mul(const Mat& a, const Mat& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat gen_s(const Rational& s) { return {-s, Rational(1), Rational(-1), Rational(0)}; }

// Independent counting oracle: lattice points with 2an + 2bm = wN.
long count_monomials(const Signature& sig, const Rational& w) {
    Rational wn = w * sig.N();
    if (wn < 0 || wn.get_den() != 1) return 0;
    long target = mpz_class(wn.get_num()).get_si();
    long count = 0;
    for (long b = 0; 2 * b * sig.m <= target; ++b)
        if ((target - 2 * b * sig.m) % (2 * sig.n) == 0) ++count;
    return count;
}

}  // namespace

TEST_CASE("signatures and their degrees") {
    CHECK(make_signature(2, 3, 1, 1).N() == 1);
    CHECK(make_signature(3, 3, 1, 1).N() == 3);
    CHECK(make_signature(2, 5, 1, 1).N() == 3);
    CHECK(make_signature(2, 5, 1, 2).N() == 1);
    CHECK(make_signature(2, 7, 1, 1).N() == 5);
    CHECK(make_signature(2, 7, 1, 2).N() == 3);
    CHECK(make_signature(2, 7, 1, 3).N() == 1);

    CHECK_THROWS_AS(make_signature(1, 3, 1, 1), std::domain_error);
    CHECK_THROWS_AS(make_signature(2, 3, 0, 1), std::domain_error);
    CHECK_THROWS_AS(make_signature(2, 2, 1, 1), std::domain_error);
    CHECK_THROWS_AS(make_signature(2, 5, 1, 3), std::domain_error);
}

TEST_CASE("candidate embeddings from folded units") {
    using V = std::vector<Signature>;
    CHECK(candidate_embeddings(2, 3) == V{{2, 3, 1, 1}});
    CHECK(candidate_embeddings(3, 3) == V{{3, 3, 1, 1}});
    CHECK(candidate_embeddings(2, 5) == V{{2, 5, 1, 1}, {2, 5, 1, 2}});
    CHECK(candidate_embeddings(2, 7) == V{{2, 7, 1, 1}, {2, 7, 1, 2}, {2, 7, 1, 3}});
    CHECK(candidate_embeddings(3, 4) == V{{3, 4, 1, 1}});

    CHECK_THROWS_AS(candidate_embeddings(2, 2), std::domain_error);
    // For (3,7) the fold of the unit 5 leaves both cone choices hyperbolic.
    CHECK_THROWS_AS(candidate_embeddings(3, 7), std::domain_error);
}

TEST_CASE("generator weights") {
    CHECK(generator_weights(make_signature(2, 3, 1, 1)) ==
          std::pair{Rational(4), Rational(6)});
    CHECK(generator_weights(make_signature(3, 3, 1, 1)) ==
          std::pair{Rational(2), Rational(2)});
    CHECK(generator_weights(make_signature(2, 5, 1, 1)) ==
          std::pair{make_rational(4, 3), make_rational(10, 3)});
    CHECK(generator_weights(make_signature(2, 5, 1, 2)) ==
          std::pair{Rational(4), Rational(10)});
}

TEST_CASE("pure weight dimensions match the classical graded ring") {
    Signature cl = make_signature(2, 3, 1, 1);
    const long expected[] = {1, 0, 1, 1, 1, 1, 2, 1, 2, 2, 2, 2, 3};
    for (long i = 0; i <= 12; ++i) CHECK(dim_pure_weight(cl, Rational(2 * i)) == expected[i]);
    CHECK(dim_pure_weight(cl, Rational(3)) == 0);
    CHECK(dim_pure_weight(cl, Rational(-4)) == 0);
    CHECK(dim_pure_weight(cl, make_rational(1, 2)) == 0);
}

TEST_CASE("dimension formula agrees with monomial counting") {
    std::vector<Signature> sigs;
    for (auto nm : {std::pair<long, long>{2, 3}, {3, 3}, {2, 5}, {2, 7}})
        for (const Signature& sig : candidate_embeddings(nm.first, nm.second))
            sigs.push_back(sig);
    sigs.push_back(make_signature(4, 5, 2, 1));
    sigs.push_back(make_signature(4, 5, 1, 3));
    sigs.push_back(make_signature(4, 6, 1, 1));
    for (const Signature& sig : sigs) {
        long g = std::gcd(sig.n, sig.m);
        // Admissible weights are the multiples of 2g/N up to wN = 240.
        for (long s = 0; s * 2 * g <= 240; ++s) {
            Rational w = make_rational(2 * g * s, sig.N());
            CHECK(admissible_weight(sig, w));
            CHECK(dim_pure_weight(sig, w) == count_monomials(sig, w));
            CHECK(static_cast<long>(monomial_basis(sig, w).size()) ==
                  count_monomials(sig, w));
        }
        CHECK(dim_pure_weight(sig, make_rational(1, sig.N() * 2 + 1)) == 0);
    }
}

TEST_CASE("monomial basis ordering and content") {
    Signature cl = make_signature(2, 3, 1, 1);
    using B = std::vector<std::pair<long, long>>;
    CHECK(monomial_basis(cl, Rational(12)) == B{{0, 2}, {3, 0}});
    CHECK(monomial_basis(cl, Rational(0)) == B{{0, 0}});
    CHECK(monomial_basis(cl, Rational(2)) == B{});

    Signature s33 = make_signature(3, 3, 1, 1);
    CHECK(dim_pure_weight(s33, Rational(2)) == 2);
    CHECK(monomial_basis(s33, Rational(2)) == B{{0, 1}, {1, 0}});
}

TEST_CASE("multipliers and monomial rotations") {
    Signature cl = make_signature(2, 3, 1, 1);
    CHECK(multipliers(cl) == std::pair{Rational(0), Rational(0)});

    Signature s33 = make_signature(3, 3, 1, 1);
    CHECK(multipliers(s33) == std::pair{make_rational(2, 3), make_rational(1, 3)});
    CHECK(monomial_rotation(s33, 0, 1) == make_rational(1, 3));
    CHECK(monomial_rotation(s33, 1, 0) == make_rational(2, 3));
    CHECK(monomial_rotation(s33, 1, 1) == 0);

    // When gcd(n, m) = 1 every monomial of one weight rotates the same way.
    std::vector<Signature> coprime;
    for (auto nm : {std::pair<long, long>{2, 5}, {2, 7}})
        for (const Signature& sig : candidate_embeddings(nm.first, nm.second))
            coprime.push_back(sig);
    coprime.push_back(make_signature(4, 5, 2, 1));
    coprime.push_back(make_signature(4, 5, 1, 3));
    for (const Signature& sig : coprime)
        for (long s = 0; s * 2 <= 60; ++s) {
            Rational w = make_rational(2 * s, sig.N());
            std::set<Rational> rots;
            for (auto [a, b] : monomial_basis(sig, w))
                rots.insert(monomial_rotation(sig, a, b));
            CHECK(rots.size() <= 1);
        }

    // gcd(3, 3) = 3 splits weight 2 into distinct rotation classes.
    std::set<Rational> rots;
    for (auto [a, b] : monomial_basis(s33, Rational(2)))
        rots.insert(monomial_rotation(s33, a, b));
    CHECK(rots == std::set<Rational>{make_rational(1, 3), make_rational(2, 3)});
}

TEST_CASE("valence degree") {
    Signature cl = make_signature(2, 3, 1, 1);
    CHECK(valence_degree({cl}, {Rational(12)}) == 1);
    CHECK(valence_degree({cl}, {Rational(4)}) == make_rational(1, 3));
    Signature a = make_signature(2, 5, 1, 1), b = make_signature(2, 5, 1, 2);
    CHECK(valence_degree({a, b}, {Rational(2), Rational(2)}) ==
          make_rational(3, 10) + make_rational(1, 10));
    CHECK_THROWS_AS(valence_degree({a}, {}), std::domain_error);
}

TEST_CASE("cosine symbols") {
    CHECK(cos_symbol(0, 1).value == Rational(2));
    CHECK(cos_symbol(1, 1).value == Rational(-2));
    CHECK(cos_symbol(1, 2).value == Rational(0));
    CHECK(cos_symbol(1, 3).value == Rational(1));
    CHECK(cos_symbol(2, 3).value == Rational(-1));
    CHECK(cos_symbol(1, 2).minpoly == std::vector<Rational>{Rational(0), Rational(1)});

    // Normalization: evenness, periodicity, reduction.
    CHECK(cos_symbol(-1, 3).value == Rational(1));
    CHECK(cos_symbol(7, 3).value == Rational(1));
    CHECK(cos_symbol(2, 6).value == Rational(1));
    CHECK(cos_symbol(5, 3).value == Rational(1));

    CosSymbol golden = cos_symbol(1, 5);
    CHECK(!golden.value.has_value());
    CHECK(golden.minpoly == std::vector<Rational>{Rational(-1), Rational(-1), Rational(1)});
    CHECK(golden.str() == "2cos(pi*1/5)");

    CHECK(cos_symbol(1, 7).minpoly ==
          std::vector<Rational>{Rational(1), Rational(-2), Rational(-1), Rational(1)});
    CHECK(cos_symbol(2, 7).minpoly ==
          std::vector<Rational>{Rational(-1), Rational(-2), Rational(1), Rational(1)});

    CHECK_THROWS_AS(cos_symbol(1, 0), std::domain_error);
}

TEST_CASE("group generators satisfy the expected relations") {
    GroupGenerators g23 = group_generators(make_signature(2, 3, 1, 1));
    REQUIRE(g23.s.value.has_value());
    REQUIRE(g23.t.value.has_value());
    CHECK(*g23.s.value == 0);
    CHECK(*g23.t.value == 1);
    Mat s = gen_s(*g23.s.value);
    Mat s2 = mul(s, s);
    CHECK(s2 == Mat{Rational(-1), Rational(0), Rational(0), Rational(-1)});

    GroupGenerators g33 = group_generators(make_signature(3, 3, 1, 1));
    CHECK(*g33.s.value == 1);
    CHECK(*g33.t.value == 1);
    s = gen_s(*g33.s.value);
    Mat s3 = mul(mul(s, s), s);
    CHECK(s3 == Mat{Rational(1), Rational(0), Rational(0), Rational(1)});

    // The half-shift entry of T is s + t.
    CHECK(*g33.s.value + *g33.t.value == 2);

    GroupGenerators g27 = group_generators(make_signature(2, 7, 1, 2));
    CHECK(*g27.s.value == 0);
    CHECK(g27.t.minpoly.size() == 4);
}

TEST_CASE("multiplier cocycle on the distinguished word") {
    CHECK(word_rotation(make_rational(2, 3), {{'S', -2}, {'T', -2}, {'S', -1}}) == 0);
    CHECK(word_rotation(make_rational(1, 4), {{'S', 1}}) == make_rational(1, 4));
    CHECK(word_rotation(make_rational(1, 4), {{'S', -1}}) == make_rational(3, 4));
    CHECK_THROWS_AS(word_rotation(Rational(0), {{'U', 1}}), std::domain_error);

    CHECK(cocycle_check(make_signature(3, 3, 1, 1)).ok());
    CHECK(cocycle_check(make_signature(2, 3, 1, 1)).ok());
    Report rep = cocycle_check(make_signature(3, 3, 1, 1));
    REQUIRE(rep.checks.size() == 2);
    CHECK(rep.checks[0].name == "v_Q(S^-2 T^-2 S^-1) = 1");
}
