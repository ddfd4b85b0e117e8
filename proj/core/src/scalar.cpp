#include "rrc/scalar.hpp"

#include <cctype>
#include <cstdlib>
#include <optional>

namespace rrc {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Rational r(mpz_class(s, 10));
            return r;
        }
        mpz_class num(s.substr(0, slash), 10);
        mpz_class den(s.substr(slash + 1), 10);
        if (den == 0) throw ParseError("zero denominator in '" + text + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    } catch (const ParseError&) {
        throw;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal '" + text + "'");
    }
}

std::string to_string(const Rational& x) { return x.get_str(); }

namespace {

// Exact n-th root of a nonnegative integer; true when z == root^n.
bool mpz_exact_root(const mpz_class& z, long n, mpz_class& root) {
    mpz_class r;
    int exact = mpz_root(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(n));
    root = r;
    return exact != 0;
}

void check_discriminant(long d) {
    if (d == 0 || d == 1) throw std::domain_error("discriminant must avoid {0,1}");
    long a = std::labs(d);
    for (long p = 2; p * p <= a; ++p)
        if (a % (p * p) == 0)
            throw std::domain_error("discriminant must be squarefree: " + std::to_string(d));
}

}  // namespace

bool rational_nth_root(const Rational& x, long n, Rational& root) {
    if (n <= 0) throw std::invalid_argument("root index must be positive");
    if (n == 1) {
        root = x;
        return true;
    }
    if (x == 0) {
        root = 0;
        return true;
    }
    bool neg = x < 0;
    if (neg && n % 2 == 0) return false;
    mpz_class num = abs(x.get_num()), den = x.get_den();
    mpz_class rn, rd;
    if (!mpz_exact_root(num, n, rn) || !mpz_exact_root(den, n, rd)) return false;
    root = Rational(neg ? -rn : rn, rd);
    root.canonicalize();
    return true;
}

Scalar::Scalar(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (b_ == 0) {
        d_ = 0;
    } else {
        check_discriminant(d_);
    }
}

Scalar Scalar::sqrt_of(long d) { return Scalar(Rational(0), Rational(1), d); }

Scalar Scalar::conj() const {
    Scalar r = *this;
    r.b_ = -r.b_;
    return r;
}

Rational Scalar::norm() const { return a_ * a_ - b_ * b_ * d_; }

void Scalar::normalize() {
    if (b_ == 0) d_ = 0;
}

long Scalar::join_disc(const Scalar& x, const Scalar& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0 || y.d_ == x.d_) return x.d_;
    throw FieldMismatch("cannot combine sqrt(" + std::to_string(x.d_) + ") with sqrt(" +
                        std::to_string(y.d_) + ")");
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    d_ = join_disc(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    d_ = join_disc(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    normalize();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    long d = join_disc(*this, o);
    Rational a = a_ * o.a_ + b_ * o.b_ * d;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    d_ = d;
    normalize();
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero scalar");
    if (d_ == 0) return Scalar(Rational(1) / a_);
    Rational nrm = norm();
    return Scalar(a_ / nrm, -b_ / nrm, d_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar acc(1), base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

namespace {

// Square root of a + b*sqrt(d) with b != 0, inside Q(sqrt(d)); the branch
// with positive rational part wins when both square to the input.
bool quad_sqrt(const Rational& a, const Rational& b, long d, Rational& p, Rational& q) {
    Rational s = a * a - b * b * d;
    Rational rs;
    if (!rational_nth_root(s, 2, rs)) return false;
    if (rs < 0) rs = -rs;
    for (int branch = 0; branch < 2; ++branch) {
        Rational x = branch == 0 ? Rational((a + rs) / 2) : Rational((a - rs) / 2);
        Rational pc;
        if (!rational_nth_root(x, 2, pc)) continue;
        if (pc == 0) continue;
        if (pc < 0) pc = -pc;
        p = pc;
        q = b / (2 * pc);
        if (p * p + q * q * d == a && 2 * p * q == b) return true;
    }
    return false;
}

// Square root inside the fixed field Q(sqrt(d)), covering rational inputs
// whose root is rational or a pure multiple of sqrt(d).
std::optional<Scalar> field_sqrt(const Scalar& x, long d) {
    if (x.disc() != 0) {
        Rational p, q;
        if (!quad_sqrt(x.rat(), x.irr(), d, p, q)) return std::nullopt;
        return Scalar(p, q, d);
    }
    Rational r;
    if (rational_nth_root(x.rat(), 2, r)) return Scalar(r < 0 ? Rational(-r) : r);
    Rational q;
    if (rational_nth_root(Rational(x.rat() / d), 2, q))
        return Scalar(Rational(0), q < 0 ? Rational(-q) : q, d);
    return std::nullopt;
}

// Iterated square roots with backtracking over the sign at each level: both
// square roots of an intermediate stay candidates, since only one branch may
// admit further roots.
std::optional<Scalar> pow2_root_search(const Scalar& x, long levels, long d) {
    if (levels == 0) return x;
    auto s = field_sqrt(x, d);
    if (!s) return std::nullopt;
    for (const Scalar& cand : {*s, -*s}) {
        auto r = pow2_root_search(cand, levels - 1, d);
        if (r) return r;
    }
    return std::nullopt;
}

}  // namespace

Scalar Scalar::nth_root(long n) const {
    if (n <= 0) throw std::invalid_argument("root index must be positive");
    if (n == 1) return *this;
    if (d_ == 0) {
        Rational r;
        if (!rational_nth_root(a_, n, r))
            throw NotAPower("no rational " + std::to_string(n) + "-th root of " + str());
        return Scalar(r);
    }
    long levels = 0;
    for (long m = n; m > 1; m /= 2) {
        if (m % 2 != 0)
            throw NotAPower("quadratic scalar roots support power-of-two indices only");
        ++levels;
    }
    auto r = pow2_root_search(*this, levels, d_);
    if (!r) throw NotAPower("no " + std::to_string(n) + "-th root of " + str() + " in its field");
    // Prefer positive rational part; pure-irrational roots normalize b > 0.
    Scalar root = *r;
    if (root.a_ < 0 || (root.a_ == 0 && root.b_ < 0)) root = -root;
    return root;
}

std::string Scalar::str() const {
    if (d_ == 0) return to_string(a_);
    Rational babs = b_ < 0 ? Rational(-b_) : b_;
    std::string tail = to_string(babs) + "*sqrt(" + std::to_string(d_) + ")";
    if (a_ == 0) return (b_ < 0 ? "-" : "") + tail;
    return to_string(a_) + (b_ < 0 ? "-" : "+") + tail;
}

Scalar Scalar::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty scalar literal");

    auto pos = s.find("sqrt(");
    if (pos == std::string::npos) return Scalar(parse_rational(s));

    if (s.back() != ')') throw ParseError("unterminated sqrt in '" + text + "'");
    std::string dstr = s.substr(pos + 5, s.size() - pos - 6);
    long d = 0;
    try {
        size_t used = 0;
        d = std::stol(dstr, &used);
        if (used != dstr.size()) throw std::invalid_argument(dstr);
    } catch (const std::exception&) {
        throw ParseError("bad discriminant in '" + text + "'");
    }

    // Everything before "sqrt(" is "", "-", "+", "c*", "a+c*", "a-c*", ...
    std::string before = s.substr(0, pos);
    Rational a(0), b(1);
    if (!before.empty()) {
        std::string head = before;
        if (head.back() == '*') {
            head.pop_back();
            // Trailing rational is |b|; an explicit sign may precede it.
            size_t cut = head.size();
            while (cut > 0 && (std::isdigit(static_cast<unsigned char>(head[cut - 1])) ||
                               head[cut - 1] == '/'))
                --cut;
            if (cut == head.size()) throw ParseError("missing sqrt coefficient in '" + text + "'");
            b = parse_rational(head.substr(cut));
            head = head.substr(0, cut);
        }
        if (!head.empty()) {
            char sign = head.back();
            if (sign != '+' && sign != '-')
                throw ParseError("malformed scalar literal '" + text + "'");
            head.pop_back();
            if (sign == '-') b = -b;
            if (!head.empty()) a = parse_rational(head);
        }
    }
    if (b == 0) return Scalar(a);
    return Scalar(a, b, d);
}

}  // namespace rrc
