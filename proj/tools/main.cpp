#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rrc/brackets.hpp"
#include "rrc/catalog.hpp"
#include "rrc/errors.hpp"
#include "rrc/graded.hpp"
#include "rrc/hypergeom.hpp"
#include "rrc/rrc_system.hpp"
#include "rrc/series.hpp"
#include "rrc/triangle.hpp"

using namespace rrc;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const char* kUsage = R"(usage: rrc <verb> [flags]

verbs:
  solve     --n INT --m INT [--k INT --r INT] --order INT --coord q|z
  verify    ramanujan|triangle|d33|inversion|ohyama [--n --m --k --r] --order INT
  bracket   --f EXPR --g EXPR --n INT --order INT
  dims      --n INT --m INT [--k INT --r INT] --wmax RAT
  hypergeom --alpha RAT --beta RAT [--gamma RAT] --order INT
  sl2check  --file PATH
  inversion --n INT --m INT --order INT
  catalog   --name NAME --order INT [--nome RAT]

Rational flags accept exact values like 5/12.  EXPR is a polynomial in
E4, E6, DELTA, THETA2, THETA3 with rational or sqrt(d) coefficients.
Set RRC_OUTPUT_ORDER to cap the order of emitted series.
)";

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

using Flags = std::map<std::string, std::string>;

Flags parse_flags(const std::vector<std::string>& args, std::size_t start,
                  const std::set<std::string>& allowed) {
    Flags kv;
    for (std::size_t i = start; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a.rfind("--", 0) != 0) throw UsageError("unexpected argument '" + a + "'");
        std::string key = a.substr(2), val;
        auto eq = key.find('=');
        if (eq != std::string::npos) {
            val = key.substr(eq + 1);
            key = key.substr(0, eq);
        } else {
            if (++i >= args.size()) throw UsageError("flag --" + key + " needs a value");
            val = args[i];
        }
        if (!allowed.count(key)) throw UsageError("unknown flag --" + key);
        if (kv.count(key)) throw UsageError("duplicate flag --" + key);
        kv[key] = val;
    }
    return kv;
}

std::string need(const Flags& f, const std::string& key) {
    auto it = f.find(key);
    if (it == f.end()) throw UsageError("missing required flag --" + key);
    return it->second;
}

long to_long(const std::string& s, const std::string& what) {
    Rational r;
    try {
        r = parse_rational(s);
    } catch (const std::exception&) {
        throw UsageError("invalid " + what + " '" + s + "'");
    }
    if (r.get_den() != 1 || !r.get_num().fits_slong_p())
        throw UsageError(what + " must be an integer, got '" + s + "'");
    return r.get_num().get_si();
}

Rational to_rational(const std::string& s, const std::string& what) {
    try {
        return parse_rational(s);
    } catch (const std::exception&) {
        throw UsageError("invalid " + what + " '" + s + "'");
    }
}

long get_long(const Flags& f, const std::string& key) { return to_long(need(f, key), key); }

long get_long_or(const Flags& f, const std::string& key, long dflt) {
    auto it = f.find(key);
    return it == f.end() ? dflt : to_long(it->second, key);
}

std::optional<long> output_cap() {
    const char* v = std::getenv("RRC_OUTPUT_ORDER");
    if (!v) return std::nullopt;
    return to_long(v, "RRC_OUTPUT_ORDER");
}

std::string emit_series(const PuiseuxSeries& s) {
    if (auto cap = output_cap()) {
        Rational c(*cap);
        if (!s.precision() || *s.precision() > c) return series_to_json(s.truncated(c));
    }
    return series_to_json(s);
}

std::string checks_json(const Report& rep) {
    std::ostringstream out;
    out << "{\"ok\":" << (rep.ok() ? "true" : "false") << ",\"checks\":[";
    bool first = true;
    for (const Check& c : rep.checks) {
        if (!first) out << ",";
        first = false;
        out << "{\"name\":\"" << json_escape(c.name) << "\",\"ok\":"
            << (c.ok ? "true" : "false");
        if (!c.detail.empty()) out << ",\"detail\":\"" << json_escape(c.detail) << "\"";
        out << "}";
    }
    out << "]}";
    return out.str();
}

int finish_report(const Report& rep) {
    std::cerr << rep.str();
    std::cout << checks_json(rep) << "\n";
    return rep.ok() ? 0 : 1;
}

Signature flags_signature(const Flags& f) {
    return make_signature(get_long(f, "n"), get_long(f, "m"), get_long_or(f, "k", 1),
                          get_long_or(f, "r", 1));
}

int cmd_solve(const std::vector<std::string>& args) {
    Flags f = parse_flags(args, 1, {"n", "m", "k", "r", "order", "coord"});
    Signature sig = flags_signature(f);
    long order = get_long(f, "order");
    std::string coord = need(f, "coord");
    SeriesSolution sol = [&] {
        if (coord == "z") return solve_z(sig, order);
        if (coord == "q") {
            if (sig.k != 1 || sig.r != 1)
                throw UsageError("q expansions are defined for k = r = 1");
            return solve_q(sig.n, sig.m, order);
        }
        throw UsageError("--coord must be q or z");
    }();
    std::cout << "{\"n\":" << sig.n << ",\"m\":" << sig.m << ",\"k\":" << sig.k
              << ",\"r\":" << sig.r << ",\"N\":" << sig.N() << ",\"coordinate\":\""
              << coord << "\",\"P\":" << emit_series(sol.P)
              << ",\"Q\":" << emit_series(sol.Q) << ",\"R\":" << emit_series(sol.R)
              << "}\n";
    return 0;
}

int cmd_verify(const std::vector<std::string>& args) {
    if (args.size() < 2) throw UsageError("verify needs a mode: ramanujan, triangle, d33, inversion, or ohyama");
    std::string mode = args[1];
    if (mode == "ramanujan") {
        Flags f = parse_flags(args, 2, {"order"});
        long order = get_long(f, "order");
        if (order < 1) throw UsageError("order must be positive");
        TriangleRRC t = build_system(make_signature(2, 3, 1, 1));
        Prec prec{Rational(order)};
        SeriesSolution sol{t.sig, "q",
                           eisenstein(2, order).scaled(Scalar(make_rational(1, 12))),
                           eisenstein(4, order), eisenstein(6, order),
                           PuiseuxSeries::x(prec)};
        Report rep = verify_system(t, sol);
        std::cerr << rep.str();
        std::cout << "{\"residual_max_order\":" << order
                  << ",\"ok\":" << (rep.ok() ? "true" : "false") << "}\n";
        return rep.ok() ? 0 : 1;
    }
    if (mode == "triangle") {
        Flags f = parse_flags(args, 2, {"n", "m", "k", "r", "order"});
        Signature sig = flags_signature(f);
        long order = get_long(f, "order");
        TriangleRRC t = build_system(sig);
        SeriesSolution sol = solve_z(sig, order);
        Report rep = verify_system(t, sol);
        rep.absorb(hauptmodul_check(sol));
        rep.absorb(rrc_shape_check(t.sys));
        return finish_report(rep);
    }
    if (mode == "d33") {
        Flags f = parse_flags(args, 2, {"order"});
        return finish_report(verify_33(get_long(f, "order")));
    }
    if (mode == "inversion") {
        Flags f = parse_flags(args, 2, {"n", "m", "order"});
        std::vector<Signature> family =
            candidate_embeddings(get_long(f, "n"), get_long(f, "m"));
        return finish_report(verify_inversion(family, get_long(f, "order")));
    }
    if (mode == "ohyama") {
        Flags f = parse_flags(args, 2, {"n", "m", "k", "r", "order"});
        return finish_report(ohyama_roundtrip(flags_signature(f), get_long(f, "order")));
    }
    throw UsageError("unknown verify mode '" + mode + "'");
}

int cmd_bracket(const std::vector<std::string>& args) {
    Flags f = parse_flags(args, 1, {"f", "g", "n", "order"});
    long n = get_long(f, "n");
    if (n < 0) throw UsageError("bracket index must be nonnegative");
    long order = get_long(f, "order");
    if (order < 1) throw UsageError("order must be positive");
    SpecPtr spec = make_spec(
        {"E4", "E6", "DELTA", "THETA2", "THETA3"},
        {Rational(4), Rational(6), Rational(12), make_rational(1, 2), make_rational(1, 2)});
    auto parse_form = [&](const std::string& text, const char* which) {
        GradedPoly p = GradedPoly::parse(spec, text);
        if (p.is_zero() || !p.is_homogeneous())
            throw UsageError(std::string(which) +
                             " must be a nonzero weight-homogeneous expression");
        return p;
    };
    GradedPoly fp = parse_form(need(f, "f"), "--f");
    GradedPoly gp = parse_form(need(f, "g"), "--g");
    std::vector<PuiseuxSeries> gens{eisenstein(4, order), eisenstein(6, order),
                                    delta(order), theta(2, order), theta(3, order)};
    PuiseuxSeries fs = fp.eval(gens), gs = gp.eval(gens);
    Rational wf = fp.weight(), wg = gp.weight();
    PuiseuxSeries br = rc_bracket(fs, wf, gs, wg, n);
    std::cout << "{\"n\":" << n << ",\"f_weight\":\"" << to_string(wf)
              << "\",\"g_weight\":\"" << to_string(wg) << "\",\"weight\":\""
              << to_string(Rational(wf + wg + 2 * n)) << "\",\"series\":" << emit_series(br)
              << "}\n";
    return 0;
}

int cmd_dims(const std::vector<std::string>& args) {
    Flags f = parse_flags(args, 1, {"n", "m", "k", "r", "wmax"});
    Signature sig = flags_signature(f);
    Rational wmax = to_rational(need(f, "wmax"), "wmax");
    long g = std::gcd(sig.n, sig.m);
    Rational step = make_rational(2 * g, sig.N());
    std::ostringstream out;
    out << "[";
    bool first = true;
    for (Rational w(0); w <= wmax; w = Rational(w + step)) {
        auto basis = monomial_basis(sig, w);
        long dim = dim_pure_weight(sig, w);
        if (!first) out << ",";
        first = false;
        out << "{\"w\":\"" << to_string(w) << "\",\"dim\":" << dim << ",\"basis\":[";
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (i) out << ",";
            out << "[" << basis[i].first << "," << basis[i].second << "]";
        }
        out << "],\"rotation\":";
        if (basis.empty())
            out << "null";
        else
            out << "\"" << to_string(monomial_rotation(sig, basis[0].first, basis[0].second))
                << "\"";
        out << "}";
    }
    out << "]";
    std::cout << out.str() << "\n";
    return 0;
}

int cmd_hypergeom(const std::vector<std::string>& args) {
    Flags f = parse_flags(args, 1, {"alpha", "beta", "gamma", "order"});
    HGParams p{to_rational(need(f, "alpha"), "alpha"), to_rational(need(f, "beta"), "beta"),
               f.count("gamma") ? to_rational(f.at("gamma"), "gamma") : Rational(1)};
    PuiseuxSeries F = hg_series(p, get_long(f, "order"));
    std::cout << "{\"alpha\":\"" << to_string(p.alpha) << "\",\"beta\":\""
              << to_string(p.beta) << "\",\"gamma\":\"" << to_string(p.gamma)
              << "\",\"F\":" << emit_series(F) << "}\n";
    return 0;
}

int cmd_sl2check(const std::vector<std::string>& args) {
    Flags f = parse_flags(args, 1, {"file"});
    std::string path = need(f, "file");
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    RRCSystem sys = system_from_text(buf.str());
    Report rep = rrc_shape_check(sys);
    rep.absorb(sl2_check(sys));
    return finish_report(rep);
}

int cmd_catalog(const std::vector<std::string>& args) {
    Flags f = parse_flags(args, 1, {"name", "order", "nome"});
    Rational nome =
        f.count("nome") ? to_rational(f.at("nome"), "nome") : Rational(1);
    CatalogForm form = catalog_form(need(f, "name"), get_long(f, "order"), nome);
    std::cout << "{\"name\":\"" << json_escape(form.name) << "\",\"weight\":\""
              << to_string(form.weight) << "\",\"nome\":\"" << to_string(form.nome)
              << "\",\"series\":" << emit_series(form.series) << "}\n";
    return 0;
}

int run(const std::vector<std::string>& args) {
    if (args.empty()) throw UsageError("no verb given; try 'rrc help'");
    const std::string& verb = args[0];
    if (verb == "help" || verb == "--help" || verb == "-h") {
        std::cout << kUsage;
        return 0;
    }
    if (verb == "solve") return cmd_solve(args);
    if (verb == "verify") return cmd_verify(args);
    if (verb == "bracket") return cmd_bracket(args);
    if (verb == "dims") return cmd_dims(args);
    if (verb == "hypergeom") return cmd_hypergeom(args);
    if (verb == "sl2check") return cmd_sl2check(args);
    if (verb == "catalog") return cmd_catalog(args);
    if (verb == "inversion") {
        std::vector<std::string> fwd{"verify", "inversion"};
        fwd.insert(fwd.end(), args.begin() + 1, args.end());
        return cmd_verify(fwd);
    }
    throw UsageError("unknown verb '" + verb + "'");
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(std::vector<std::string>(argv + 1, argv + argc));
    } catch (const std::exception& e) {
        std::cout << "{\"error\":\"" << json_escape(e.what()) << "\"}\n";
        return 2;
    }
}
