#include "rrc/graded.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "rrc/errors.hpp"

namespace rrc {

long AlgebraSpec::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<long>(i);
    return -1;
}

SpecPtr make_spec(std::vector<std::string> names, std::vector<Rational> weights,
                  std::vector<Rational> weights2) {
    if (names.size() != weights.size())
        throw ShapeError("spec needs one weight per generator");
    if (!weights2.empty() && weights2.size() != names.size())
        throw ShapeError("second grading needs one weight per generator");
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j]) throw ShapeError("duplicate generator name " + names[i]);
    AlgebraSpec spec{std::move(names), std::move(weights), std::move(weights2)};
    return std::make_shared<const AlgebraSpec>(std::move(spec));
}

GradedPoly GradedPoly::constant(SpecPtr spec, const Scalar& c) {
    GradedPoly p(std::move(spec));
    p.insert_term(std::vector<int>(p.spec_->rank(), 0), c);
    return p;
}

GradedPoly GradedPoly::generator(SpecPtr spec, std::size_t i) {
    if (i >= spec->rank()) throw ShapeError("generator index out of range");
    GradedPoly p(std::move(spec));
    std::vector<int> exps(p.spec_->rank(), 0);
    exps[i] = 1;
    p.insert_term(exps, Scalar(1));
    return p;
}

GradedPoly GradedPoly::monomial(SpecPtr spec, std::vector<int> exps, const Scalar& c) {
    if (exps.size() != spec->rank()) throw ShapeError("exponent vector length mismatch");
    for (int e : exps)
        if (e < 0) throw ShapeError("negative exponent in monomial");
    GradedPoly p(std::move(spec));
    p.insert_term(exps, c);
    return p;
}

void GradedPoly::insert_term(const std::vector<int>& exps, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void GradedPoly::check_compatible(const GradedPoly& rhs) const {
    if (spec_ == rhs.spec_) return;
    if (!spec_ || !rhs.spec_ || !(*spec_ == *rhs.spec_))
        throw ShapeError("operands live over different algebras");
}

GradedPoly GradedPoly::operator-() const {
    GradedPoly out(spec_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) insert_term(e, c);
    return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) insert_term(e, -c);
    return *this;
}

GradedPoly operator*(const GradedPoly& lhs, const GradedPoly& rhs) {
    lhs.check_compatible(rhs);
    GradedPoly out(lhs.spec_);
    std::vector<int> exps(lhs.spec_->rank(), 0);
    for (const auto& [ea, ca] : lhs.terms_)
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = ea[i] + eb[i];
            out.insert_term(exps, ca * cb);
        }
    return out;
}

GradedPoly GradedPoly::scaled(const Scalar& c) const {
    GradedPoly out(spec_);
    if (c.is_zero()) return out;
    for (const auto& [e, t] : terms_) out.terms_.emplace(e, t * c);
    return out;
}

GradedPoly GradedPoly::pow(long n) const {
    if (n < 0) throw ShapeError("negative power of a polynomial");
    GradedPoly acc = constant(spec_, Scalar(1));
    GradedPoly base = *this;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

GradedPoly GradedPoly::partial(std::size_t i) const {
    if (i >= spec_->rank()) throw ShapeError("generator index out of range");
    GradedPoly out(spec_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        std::vector<int> exps = e;
        exps[i] -= 1;
        out.insert_term(exps, c * Scalar(e[i]));
    }
    return out;
}

bool GradedPoly::depends_on(std::size_t i) const {
    if (i >= spec_->rank()) throw ShapeError("generator index out of range");
    for (const auto& [e, c] : terms_)
        if (e[i] != 0) return true;
    return false;
}

Rational GradedPoly::monomial_weight(const std::vector<int>& exps, int component) const {
    const std::vector<Rational>* w = nullptr;
    if (component == 0) {
        w = &spec_->weights;
    } else if (component == 1) {
        if (!spec_->bigraded()) throw ShapeError("algebra has no second grading");
        w = &spec_->weights2;
    } else {
        throw ShapeError("grading component out of range");
    }
    Rational total(0);
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] != 0) total += (*w)[i] * exps[i];
    return total;
}

bool GradedPoly::homogeneous_of(const Rational& w, int component) const {
    for (const auto& [e, c] : terms_)
        if (monomial_weight(e, component) != w) return false;
    return true;
}

bool GradedPoly::is_homogeneous(int component) const {
    if (terms_.empty()) return true;
    return homogeneous_of(monomial_weight(terms_.begin()->first, component), component);
}

Rational GradedPoly::weight(int component) const {
    if (terms_.empty()) throw ShapeError("zero polynomial has no weight");
    Rational w = monomial_weight(terms_.begin()->first, component);
    if (!homogeneous_of(w, component)) throw ShapeError("polynomial is not homogeneous");
    return w;
}

PuiseuxSeries GradedPoly::eval(const std::vector<PuiseuxSeries>& values) const {
    if (values.size() != spec_->rank()) throw ShapeError("one series per generator required");
    PuiseuxSeries acc = PuiseuxSeries::zero();
    for (const auto& [e, c] : terms_) {
        PuiseuxSeries term = PuiseuxSeries::monomial(c, Rational(0));
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) term *= values[i].pow_int(e[i]);
        acc += term;
    }
    return acc;
}

Scalar GradedPoly::eval_scalar(const std::vector<Scalar>& values) const {
    if (values.size() != spec_->rank()) throw ShapeError("one value per generator required");
    Scalar acc(0);
    for (const auto& [e, c] : terms_) {
        Scalar term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) term *= values[i].pow(e[i]);
        acc += term;
    }
    return acc;
}

namespace {

// Sign-split rendering of one term; rational and pure-irrational
// coefficients expose their sign to the surrounding sum, mixed quadratic
// coefficients stay parenthesized inside the term.
struct RenderedTerm {
    bool negative;
    std::string body;
};

RenderedTerm render_term(const AlgebraSpec& spec, const std::vector<int>& exps, const Scalar& c) {
    std::string mono;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += spec.names[i];
        if (exps[i] > 1) mono += "^" + std::to_string(exps[i]);
    }
    bool negative = false;
    std::string coeff;
    if (c.is_rational()) {
        negative = c.rat() < 0;
        Rational mag = abs(c.rat());
        if (!(mag == 1 && !mono.empty())) coeff = to_string(mag);
    } else if (c.rat() == 0) {
        negative = c.irr() < 0;
        coeff = Scalar(Rational(0), abs(c.irr()), c.disc()).str();
    } else {
        coeff = "(" + c.str() + ")";
    }
    std::string body;
    if (coeff.empty())
        body = mono;
    else if (mono.empty())
        body = coeff;
    else
        body = coeff + "*" + mono;
    if (body.empty()) body = "1";
    return {negative, body};
}

}  // namespace

std::string GradedPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        RenderedTerm t = render_term(*spec_, e, c);
        if (first) {
            out += (t.negative ? "-" : "") + t.body;
            first = false;
        } else {
            out += (t.negative ? " - " : " + ") + t.body;
        }
    }
    return out;
}

namespace {

// Tokens of the polynomial expression grammar. A Number covers an integer
// or a rational written with '/', read as a single token.
struct Token {
    enum Kind { End, Ident, Number, Plus, Minus, Star, Caret, LParen, RParen } kind;
    std::string text;
};

class Lexer {
   public:
    explicit Lexer(const std::string& s) : text_(s) { advance(); }

    const Token& peek() const { return current_; }
    Token next() {
        Token t = current_;
        advance();
        return t;
    }

   private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ >= text_.size()) {
            current_ = {Token::End, ""};
            return;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
                std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
                ++pos_;
                while (pos_ < text_.size() &&
                       std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
            }
            current_ = {Token::Number, text_.substr(start, pos_ - start)};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            current_ = {Token::Ident, text_.substr(start, pos_ - start)};
            return;
        }
        ++pos_;
        switch (c) {
            case '+': current_ = {Token::Plus, "+"}; return;
            case '-': current_ = {Token::Minus, "-"}; return;
            case '*': current_ = {Token::Star, "*"}; return;
            case '^': current_ = {Token::Caret, "^"}; return;
            case '(': current_ = {Token::LParen, "("}; return;
            case ')': current_ = {Token::RParen, ")"}; return;
            default: throw ParseError(std::string("unexpected character '") + c + "'");
        }
    }

    std::string text_;
    std::size_t pos_ = 0;
    Token current_{Token::End, ""};
};

class PolyParser {
   public:
    PolyParser(SpecPtr spec, const std::string& text) : spec_(std::move(spec)), lex_(text) {}

    GradedPoly run() {
        GradedPoly p = parse_expr();
        if (lex_.peek().kind != Token::End)
            throw ParseError("trailing input '" + lex_.peek().text + "'");
        return p;
    }

   private:
    GradedPoly parse_expr() {
        bool negative = false;
        if (lex_.peek().kind == Token::Minus) {
            lex_.next();
            negative = true;
        } else if (lex_.peek().kind == Token::Plus) {
            lex_.next();
        }
        GradedPoly acc = parse_term();
        if (negative) acc = -acc;
        while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
            bool minus = lex_.next().kind == Token::Minus;
            GradedPoly t = parse_term();
            if (minus)
                acc -= t;
            else
                acc += t;
        }
        return acc;
    }

    GradedPoly parse_term() {
        GradedPoly acc = parse_factor();
        while (lex_.peek().kind == Token::Star) {
            lex_.next();
            acc = acc * parse_factor();
        }
        return acc;
    }

    GradedPoly parse_factor() {
        GradedPoly base = parse_atom();
        if (lex_.peek().kind == Token::Caret) {
            lex_.next();
            Token t = lex_.next();
            if (t.kind != Token::Number || t.text.find('/') != std::string::npos)
                throw ParseError("exponent must be a nonnegative integer");
            base = base.pow(std::stol(t.text));
        }
        return base;
    }

    GradedPoly parse_atom() {
        Token t = lex_.next();
        switch (t.kind) {
            case Token::LParen: {
                GradedPoly inner = parse_expr();
                if (lex_.next().kind != Token::RParen) throw ParseError("expected ')'");
                return inner;
            }
            case Token::Number:
                return GradedPoly::constant(spec_, Scalar(parse_rational(t.text)));
            case Token::Ident: {
                if (t.text == "sqrt") return parse_sqrt();
                long idx = spec_->index_of(t.text);
                if (idx < 0) throw ParseError("unknown generator '" + t.text + "'");
                return GradedPoly::generator(spec_, static_cast<std::size_t>(idx));
            }
            default:
                throw ParseError("unexpected token '" + t.text + "'");
        }
    }

    GradedPoly parse_sqrt() {
        if (lex_.next().kind != Token::LParen) throw ParseError("expected '(' after sqrt");
        bool negative = false;
        if (lex_.peek().kind == Token::Minus) {
            lex_.next();
            negative = true;
        }
        Token t = lex_.next();
        if (t.kind != Token::Number || t.text.find('/') != std::string::npos)
            throw ParseError("sqrt takes an integer discriminant");
        if (lex_.next().kind != Token::RParen) throw ParseError("expected ')' after sqrt");
        long d = std::stol(t.text);
        return GradedPoly::constant(spec_, Scalar::sqrt_of(negative ? -d : d));
    }

    SpecPtr spec_;
    Lexer lex_;
};

}  // namespace

GradedPoly GradedPoly::parse(SpecPtr spec, const std::string& text) {
    return PolyParser(std::move(spec), text).run();
}

Derivation::Derivation(SpecPtr spec, std::vector<GradedPoly> images, Rational shift,
                       Rational shift2)
    : spec_(std::move(spec)), images_(std::move(images)), shift_(std::move(shift)),
      shift2_(std::move(shift2)) {
    if (images_.size() != spec_->rank()) throw ShapeError("one image per generator required");
    for (const auto& img : images_)
        if (!(img.spec() == spec_ || *img.spec() == *spec_))
            throw ShapeError("derivation image over a different algebra");
}

GradedPoly Derivation::apply(const GradedPoly& p) const {
    if (!(p.spec() == spec_ || *p.spec() == *spec_))
        throw ShapeError("operands live over different algebras");
    GradedPoly acc = GradedPoly::zero(spec_);
    for (std::size_t i = 0; i < spec_->rank(); ++i) {
        if (images_[i].is_zero()) continue;
        GradedPoly dp = p.partial(i);
        if (dp.is_zero()) continue;
        acc += images_[i] * dp;
    }
    return acc;
}

Derivation lie_bracket(const Derivation& a, const Derivation& b) {
    std::vector<GradedPoly> images;
    images.reserve(a.spec()->rank());
    for (std::size_t i = 0; i < a.spec()->rank(); ++i)
        images.push_back(a.apply(b.images()[i]) - b.apply(a.images()[i]));
    return Derivation(a.spec(), std::move(images), a.shift() + b.shift(),
                      a.shift2() + b.shift2());
}

Derivation RRCSystem::derivation() const {
    return Derivation(spec, images, Rational(2), Rational(0));
}

Report rrc_shape_check(const RRCSystem& sys) {
    Report rep;
    if (sys.images.size() != sys.spec->rank() || sys.t1 >= sys.spec->rank()) {
        rep.add("system-shape", false, "image count or t1 index out of range");
        return rep;
    }
    const auto& spec = sys.spec;
    const std::string& t1name = spec->names[sys.t1];
    GradedPoly t1 = GradedPoly::generator(spec, sys.t1);
    rep.add("weight[" + t1name + "]", spec->weights[sys.t1] == 2,
            "distinguished generator must have weight 2");
    {
        GradedPoly p1 = sys.images[sys.t1] - t1 * t1;
        bool free = !p1.depends_on(sys.t1);
        bool homog = p1.homogeneous_of(Rational(4));
        rep.add("shape[" + t1name + "]", free && homog,
                free ? (homog ? "" : "remainder not of weight 4")
                     : "remainder depends on " + t1name);
    }
    for (std::size_t j = 0; j < spec->rank(); ++j) {
        if (j == sys.t1) continue;
        const Rational& wj = spec->weights[j];
        GradedPoly pj =
            sys.images[j] - (t1 * GradedPoly::generator(spec, j)).scaled(Scalar(wj));
        bool free = !pj.depends_on(sys.t1);
        bool homog = pj.homogeneous_of(wj + 2);
        rep.add("shape[" + spec->names[j] + "]", free && homog,
                free ? (homog ? "" : "remainder not of weight " + to_string(wj + 2))
                     : "remainder depends on " + t1name);
    }
    return rep;
}

Derivation euler_field(const SpecPtr& spec) {
    std::vector<GradedPoly> images;
    images.reserve(spec->rank());
    for (std::size_t i = 0; i < spec->rank(); ++i)
        images.push_back(GradedPoly::generator(spec, i).scaled(Scalar(spec->weights[i])));
    return Derivation(spec, std::move(images), Rational(0));
}

Derivation lowering_operator(const RRCSystem& sys) {
    std::vector<GradedPoly> images(sys.spec->rank(), GradedPoly::zero(sys.spec));
    images[sys.t1] = GradedPoly::constant(sys.spec, Scalar(-1));
    Rational shift2(0);
    if (sys.spec->bigraded()) shift2 = -sys.spec->weights2[sys.t1];
    return Derivation(sys.spec, std::move(images), -sys.spec->weights[sys.t1], shift2);
}

namespace {

// Empty string when the derivations agree; otherwise the offending parts.
std::string derivation_diff(const Derivation& x, const Derivation& y) {
    std::string diff;
    auto note = [&diff](const std::string& what) {
        if (!diff.empty()) diff += ", ";
        diff += what;
    };
    for (std::size_t i = 0; i < x.spec()->rank(); ++i)
        if (x.images()[i] != y.images()[i]) note(x.spec()->names[i]);
    if (x.shift() != y.shift()) note("shift");
    return diff;
}

Derivation derivation_scaled(const Derivation& x, const Scalar& c) {
    std::vector<GradedPoly> images;
    images.reserve(x.spec()->rank());
    for (const auto& img : x.images()) images.push_back(img.scaled(c));
    return Derivation(x.spec(), std::move(images), x.shift(), x.shift2());
}

}  // namespace

Report sl2_check(const Derivation& d, const Derivation& w, const Derivation& delta) {
    Report rep;
    std::string diff = derivation_diff(lie_bracket(d, delta), w);
    rep.add("[D,delta] = W", diff.empty(), diff);
    diff = derivation_diff(lie_bracket(w, d), derivation_scaled(d, Scalar(2)));
    rep.add("[W,D] = 2D", diff.empty(), diff);
    diff = derivation_diff(lie_bracket(w, delta), derivation_scaled(delta, Scalar(-2)));
    rep.add("[W,delta] = -2delta", diff.empty(), diff);
    return rep;
}

Report sl2_check(const RRCSystem& sys) {
    return sl2_check(sys.derivation(), euler_field(sys.spec), lowering_operator(sys));
}

namespace {

// Re-expresses p over another spec; pos[i] is the target index of source
// generator i, with -1 requiring exponent zero there.
GradedPoly map_poly(const GradedPoly& p, const SpecPtr& to, const std::vector<long>& pos) {
    GradedPoly out = GradedPoly::zero(to);
    for (const auto& [e, c] : p.terms()) {
        std::vector<int> exps(to->rank(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (pos[i] < 0)
                throw ShapeError("polynomial depends on a dropped generator");
            exps[static_cast<std::size_t>(pos[i])] = e[i];
        }
        out += GradedPoly::monomial(to, exps, c);
    }
    return out;
}

}  // namespace

CanonicalPair canonical_from_rrc(const RRCSystem& sys) {
    Report shape = rrc_shape_check(sys);
    if (!shape.ok()) throw ShapeError("system is not of differential Serre shape");
    std::vector<std::string> names;
    std::vector<Rational> weights, weights2;
    std::vector<long> pos(sys.spec->rank(), -1);
    for (std::size_t j = 0; j < sys.spec->rank(); ++j) {
        if (j == sys.t1) continue;
        pos[j] = static_cast<long>(names.size());
        names.push_back(sys.spec->names[j]);
        weights.push_back(sys.spec->weights[j]);
        if (sys.spec->bigraded()) weights2.push_back(sys.spec->weights2[j]);
    }
    SpecPtr base = make_spec(std::move(names), std::move(weights), std::move(weights2));
    GradedPoly t1 = GradedPoly::generator(sys.spec, sys.t1);
    std::vector<GradedPoly> images;
    for (std::size_t j = 0; j < sys.spec->rank(); ++j) {
        if (j == sys.t1) continue;
        GradedPoly pj = sys.images[j] - (t1 * GradedPoly::generator(sys.spec, j))
                                            .scaled(Scalar(sys.spec->weights[j]));
        images.push_back(map_poly(pj, base, pos));
    }
    GradedPoly phi = map_poly(sys.images[sys.t1] - t1 * t1, base, pos);
    return {base, Derivation(base, std::move(images), Rational(2)), std::move(phi)};
}

RRCSystem extend_algebra(const CanonicalPair& pair, const std::string& t1name) {
    const SpecPtr& base = pair.spec;
    std::vector<std::string> names{t1name};
    std::vector<Rational> weights{Rational(2)}, weights2;
    if (base->bigraded()) weights2.push_back(Rational(0));
    std::vector<long> pos(base->rank());
    for (std::size_t i = 0; i < base->rank(); ++i) {
        pos[i] = static_cast<long>(i + 1);
        names.push_back(base->names[i]);
        weights.push_back(base->weights[i]);
        if (base->bigraded()) weights2.push_back(base->weights2[i]);
    }
    SpecPtr spec = make_spec(std::move(names), std::move(weights), std::move(weights2));
    GradedPoly t1 = GradedPoly::generator(spec, 0);
    std::vector<GradedPoly> images;
    images.push_back(t1 * t1 + map_poly(pair.phi, spec, pos));
    for (std::size_t i = 0; i < base->rank(); ++i) {
        GradedPoly tj = GradedPoly::generator(spec, i + 1);
        images.push_back((t1 * tj).scaled(Scalar(base->weights[i])) +
                         map_poly(pair.partial.images()[i], spec, pos));
    }
    return {spec, 0, std::move(images)};
}

Report bigraded_serre_check(const RRCSystem& sys, std::size_t p1, std::size_t p2,
                            const GradedPoly& phi2) {
    Report rep;
    const auto& spec = sys.spec;
    if (!spec->bigraded()) {
        rep.add("bigraded", false, "algebra has only one grading");
        return rep;
    }
    if (p1 >= spec->rank() || p2 >= spec->rank() || p1 == p2 ||
        sys.images.size() != spec->rank()) {
        rep.add("system-shape", false, "index or image count out of range");
        return rep;
    }
    rep.add("weight[" + spec->names[p1] + "]",
            spec->weights[p1] == 2 && spec->weights2[p1] == 0,
            "first quasi-modular generator must have bi-weight (2,0)");
    rep.add("weight[" + spec->names[p2] + "]",
            spec->weights[p2] == 0 && spec->weights2[p2] == 2,
            "second quasi-modular generator must have bi-weight (0,2)");
    rep.add("weight[phi2]",
            phi2.homogeneous_of(Rational(2), 0) && phi2.homogeneous_of(Rational(-2), 1),
            "companion element must have bi-weight (2,-2)");
    GradedPoly g1 = GradedPoly::generator(spec, p1);
    GradedPoly g2 = GradedPoly::generator(spec, p2);
    auto examine = [&](std::size_t j, const GradedPoly& remainder, const Rational& w1,
                       const Rational& w2) {
        bool free = !remainder.depends_on(p1) && !remainder.depends_on(p2);
        bool homog = remainder.homogeneous_of(w1, 0) && remainder.homogeneous_of(w2, 1);
        rep.add("shape[" + spec->names[j] + "]", free && homog,
                free ? (homog ? ""
                              : "remainder not of bi-weight (" + to_string(w1) + "," +
                                    to_string(w2) + ")")
                     : "remainder depends on a quasi-modular generator");
    };
    examine(p1, sys.images[p1] - g1 * g1, Rational(4), Rational(0));
    examine(p2, sys.images[p2] - g2 * g2 * phi2, Rational(2), Rational(2));
    for (std::size_t j = 0; j < spec->rank(); ++j) {
        if (j == p1 || j == p2) continue;
        const Rational& k = spec->weights[j];
        const Rational& l = spec->weights2[j];
        GradedPoly linear = g1.scaled(Scalar(k)) + (g2 * phi2).scaled(Scalar(l));
        examine(j, sys.images[j] - linear * GradedPoly::generator(spec, j), k + 2, l);
    }
    return rep;
}

std::string system_to_text(const RRCSystem& sys) {
    std::ostringstream out;
    for (std::size_t j = 0; j < sys.spec->rank(); ++j) {
        std::size_t i = (j + sys.t1) % sys.spec->rank();
        out << sys.spec->names[i] << " : ";
        if (sys.spec->bigraded())
            out << "(" << to_string(sys.spec->weights[i]) << ","
                << to_string(sys.spec->weights2[i]) << ")";
        else
            out << to_string(sys.spec->weights[i]);
        out << " = " << sys.images[i].str() << "\n";
    }
    return out.str();
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

RRCSystem system_from_text(const std::string& text) {
    struct Line {
        std::string name, weight, expr;
    };
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        std::size_t colon = line.find(':');
        std::size_t eq = line.find('=', colon == std::string::npos ? 0 : colon + 1);
        if (colon == std::string::npos || eq == std::string::npos)
            throw ParseError("expected 'name : weight = expression' in line: " + line);
        lines.push_back({trim(line.substr(0, colon)),
                         trim(line.substr(colon + 1, eq - colon - 1)),
                         trim(line.substr(eq + 1))});
    }
    if (lines.empty()) throw ParseError("system text contains no generator lines");
    bool bigraded = lines.front().weight.front() == '(';
    std::vector<std::string> names;
    std::vector<Rational> weights, weights2;
    for (const auto& l : lines) {
        if (l.name.empty()) throw ParseError("generator line without a name");
        if ((l.weight.front() == '(') != bigraded)
            throw ParseError("mixed single- and bi-graded weight entries");
        names.push_back(l.name);
        if (bigraded) {
            if (l.weight.back() != ')') throw ParseError("unterminated weight pair");
            std::string body = l.weight.substr(1, l.weight.size() - 2);
            std::size_t comma = body.find(',');
            if (comma == std::string::npos) throw ParseError("weight pair needs a comma");
            weights.push_back(parse_rational(trim(body.substr(0, comma))));
            weights2.push_back(parse_rational(trim(body.substr(comma + 1))));
        } else {
            weights.push_back(parse_rational(l.weight));
        }
    }
    SpecPtr spec = make_spec(std::move(names), std::move(weights), std::move(weights2));
    std::vector<GradedPoly> images;
    images.reserve(lines.size());
    for (const auto& l : lines) images.push_back(GradedPoly::parse(spec, l.expr));
    return {spec, 0, std::move(images)};
}

}  // namespace rrc
