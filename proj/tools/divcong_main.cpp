// divcong: exact arithmetic on divided congruences of modular forms.
//
// Every number printed by this tool is an exact rational; there are no
// floating point values anywhere. Exit codes: 0 success, 1 infeasible
// input (no virtual weight, not p-torsion), 2 usage or expression error,
// 3 not enough precision.

#include <CLI11.hpp>
#include <json.hpp>

#include "dc/congruence.hpp"
#include "dc/eisenstein.hpp"
#include "dc/errors.hpp"
#include "dc/expr.hpp"
#include "dc/toda.hpp"

#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

using namespace dc;
using Json = nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------- formatting

std::string rstr(const Rational& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

Json rat_pair(const Rational& r) {
    return Json::array({num(r).str(), den(r).str()});
}

Json coeff_list(const Series& s) {
    Json a = Json::array();
    for (int n = 0; n <= s.prec(); ++n) a.push_back(rat_pair(s.coeff(n)));
    return a;
}

Json coeff_rows(const Series2& F) {
    Json rows = Json::array();
    for (int i = 0; i <= F.prec(); ++i) {
        Json row = Json::array();
        for (int j = 0; j <= F.prec(); ++j) row.push_back(rat_pair(F.coeff(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json fingerprint_json(const Fingerprint& fp) {
    Json tail = Json::array();
    for (const Rational& e : fp.tail) tail.push_back(rat_pair(e));
    return Json{{"n", fp.weight}, {"tail", std::move(tail)}};
}

void print_series(std::ostream& os, const Series& s) {
    bool any = false;
    for (int n = 0; n <= s.prec(); ++n) {
        if (s.coeff(n) == 0) continue;
        os << "q^" << n << "\t" << rstr(s.coeff(n)) << "\n";
        any = true;
    }
    if (!any) os << "0\n";
}

void print_series2(std::ostream& os, const Series2& F) {
    bool any = false;
    for (int i = 0; i <= F.prec(); ++i)
        for (int j = 0; j <= F.prec(); ++j) {
            if (F.coeff(i, j) == 0) continue;
            os << "q1^" << i << " q2^" << j << "\t" << rstr(F.coeff(i, j)) << "\n";
            any = true;
        }
    if (!any) os << "0\n";
}

void print_fingerprint(std::ostream& os, const Fingerprint& fp) {
    os << "fingerprint (weight " << fp.weight << ", level " << fp.level << "):";
    if (fp.is_zero()) {
        os << " zero\n";
        return;
    }
    for (std::size_t t = 0; t < fp.tail.size(); ++t)
        if (fp.tail[t] != 0) os << "  q^" << (fp.start + static_cast<int>(t)) << ": " << rstr(fp.tail[t]);
    os << "\n";
}

// ------------------------------------------------------------- shared state

struct Options {
    int level = 1;
    int prec = 64;
    std::string format = "text";

    bool json() const { return format == "json"; }
};

Json value_header(const std::string& expr, const Options& opt) {
    return Json{{"expr", expr}, {"level", opt.level}, {"prec", opt.prec}};
}

int emit_value(const std::string& expr, const Value& v, const Options& opt) {
    if (opt.json()) {
        Json out = value_header(expr, opt);
        if (std::holds_alternative<Rational>(v)) {
            out["coeffs"] = Json::array({rat_pair(std::get<Rational>(v))});
        } else if (std::holds_alternative<Series>(v)) {
            out["coeffs"] = coeff_list(std::get<Series>(v));
        } else {
            out["coeffs"] = coeff_rows(std::get<Series2>(v));
        }
        std::cout << out.dump() << "\n";
        return 0;
    }
    if (std::holds_alternative<Rational>(v)) {
        std::cout << rstr(std::get<Rational>(v)) << "\n";
    } else if (std::holds_alternative<Series>(v)) {
        print_series(std::cout, std::get<Series>(v));
    } else {
        print_series2(std::cout, std::get<Series2>(v));
    }
    return 0;
}

Series series_value(const Value& v, int prec, const char* what) {
    if (std::holds_alternative<Series2>(v))
        throw EvalError(std::string(what) + " needs a one-variable expression");
    if (std::holds_alternative<Rational>(v))
        return Series::constant(std::get<Rational>(v), prec);
    return std::get<Series>(v);
}

// --------------------------------------------------------------- commands

int cmd_expand(const std::string& expr, const Options& opt) {
    return emit_value(expr, eval(expr, opt.level, opt.prec), opt);
}

int cmd_bracket(const std::string& expr, int n, const Options& opt) {
    Value v = eval(expr, opt.level, opt.prec);
    if (std::holds_alternative<Series2>(v))
        return emit_value(expr, bracket2(std::get<Series2>(v), opt.level, n), opt);
    return emit_value(expr, bracket1(series_value(v, opt.prec, "bracket"), opt.level, n), opt);
}

int cmd_order(const std::string& expr, int n, const Options& opt) {
    Series x = series_value(eval(expr, opt.level, opt.prec), opt.prec, "order");
    Fingerprint fp = fingerprint(x, opt.level, n);
    Int ord = order_of(x, opt.level, n);
    if (opt.json()) {
        Json out = value_header(expr, opt);
        out["weight"] = n;
        out["fingerprint"] = fingerprint_json(fp);
        out["order"] = ord.str();
        std::cout << out.dump() << "\n";
        return 0;
    }
    print_fingerprint(std::cout, fp);
    std::cout << "order: " << ord.str() << "\n";
    return 0;
}

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

IndeterminacySpec parse_indet(const std::vector<std::string>& args, const Options& opt) {
    IndeterminacySpec spec;
    for (const std::string& raw : args) {
        std::string text = raw;
        Dom dom = Dom::Z;
        std::size_t colon = raw.rfind(':');
        if (colon != std::string::npos) {
            std::string tag = raw.substr(colon + 1);
            if (tag == "Z" || tag == "z") {
                text = raw.substr(0, colon);
            } else if (tag == "Q" || tag == "q") {
                dom = Dom::Q;
                text = raw.substr(0, colon);
            }
        }
        // "cycles_W" or "cycles_W/D" expands to the weight-W cycle basis at
        // the current level, each generator divided by D
        if (text.rfind("cycles_", 0) == 0) {
            std::string rest = text.substr(7);
            Rational scale(1);
            std::size_t slash = rest.find('/');
            if (slash != std::string::npos) {
                std::string d = rest.substr(slash + 1);
                if (!all_digits(d)) throw EvalError("bad cycle divisor in '" + raw + "'");
                scale = Rational(1, Int(d));
                rest = rest.substr(0, slash);
            }
            if (!all_digits(rest)) throw EvalError("bad cycle weight in '" + raw + "'");
            for (const Series& c : cycle_basis(space(opt.level, std::stoi(rest), opt.prec)))
                spec.add(scale * c, dom, text);
            continue;
        }
        Series g = series_value(eval(text, opt.level, opt.prec), opt.prec, "--indet");
        spec.add(std::move(g), dom, text);
    }
    return spec;
}

int cmd_eq(const std::string& e1, const std::string& e2, int n,
           const std::vector<std::string>& indet_args, const Options& opt) {
    Series x = series_value(eval(e1, opt.level, opt.prec), opt.prec, "eq");
    Series y = series_value(eval(e2, opt.level, opt.prec), opt.prec, "eq");
    IndeterminacySpec indet = parse_indet(indet_args, opt);
    bool equal = class_eq(x, y, opt.level, n, indet);
    if (opt.json()) {
        Json out{{"expr", e1},
                 {"expr2", e2},
                 {"level", opt.level},
                 {"prec", opt.prec},
                 {"weight", n},
                 {"indeterminacy_generators", indet.gens.size()},
                 {"equal", equal}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << (equal ? "equal" : "not equal") << "\n";
    }
    return 0;
}

// ------------------------------------------------------------ toda parsing

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

const EInvariant* find_e(const Catalog& cat, const std::string& name) {
    if (name == "eta") return &cat.eta;
    if (name == "nu") return &cat.nu;
    if (name == "sigma") return &cat.sigma;
    if (name == "2sigma") return &cat.two_sigma;
    return nullptr;
}

const FInvariantClass* find_f(const Catalog& cat, const std::string& name) {
    if (name == "fnu2") return &cat.f_nu_sq;
    if (name == "fsigma2") return &cat.f_sigma_sq;
    return nullptr;
}

Int parse_p(const std::string& tok) {
    if (tok.empty()) throw EvalError("empty multiplier in bracket spec");
    for (char c : tok)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw EvalError("multiplier '" + tok + "' is not a positive integer");
    Int p(tok);
    if (p < 2) throw EvalError("multiplier must be at least 2");
    return p;
}

[[noreturn]] void bad_spec(const std::string& spec, const std::string& why) {
    throw EvalError("bad bracket spec '" + spec + "': " + why);
}

struct TodaOutput {
    FInvariantClass cls;
    IndeterminacySpec indet;
};

TodaOutput run_toda3(const std::string& spec, const Options& opt) {
    std::vector<std::string> top = split(spec, ':');
    if (top.size() != 2) bad_spec(spec, "expected KIND:ARG,ARG,ARG");
    const std::string& kind = top[0];
    std::vector<std::string> a = split(top[1], ',');
    if (a.size() != 3) bad_spec(spec, "expected three comma-separated entries");

    Catalog cat = catalog(opt.prec);

    if (kind == "odd") {
        const EInvariant* x = find_e(cat, a[0]);
        const EInvariant* y = find_e(cat, a[1]);
        const EInvariant* z = find_e(cat, a[2]);
        if (!x || !y || !z) bad_spec(spec, "odd takes three odd-stem names");
        FInvariantClass cls = toda3_odd(*x, *y, *z);
        return {cls, odd_bracket_indeterminacy(*x, *y, *z, opt.prec)};
    }
    if (kind == "center") {
        Int p = parse_p(a[1]);
        if (const FInvariantClass* f = find_f(cat, a[0])) {
            const EInvariant* e = find_e(cat, a[2]);
            if (!e) bad_spec(spec, "unknown odd-stem name '" + a[2] + "'");
            FInvariantClass cls = toda3_center_p(*f, p, *e, PSide::left);
            return {cls, center_p_indeterminacy(*f, *e, cls.level, opt.prec)};
        }
        if (const EInvariant* e = find_e(cat, a[0])) {
            const FInvariantClass* f = find_f(cat, a[2]);
            if (!f) bad_spec(spec, "unknown even-class name '" + a[2] + "'");
            FInvariantClass cls = toda3_center_p(*f, p, *e, PSide::right);
            return {cls, center_p_indeterminacy(*f, *e, cls.level, opt.prec)};
        }
        bad_spec(spec, "center takes F,P,E or E,P,F");
    }

    // remaining kinds place the identity multiple at one end
    auto shape_args = [&](PShape shape, const std::string& ft, const std::string& et,
                          const std::string& pt) -> TodaOutput {
        const FInvariantClass* f = find_f(cat, ft);
        const EInvariant* e = find_e(cat, et);
        if (!f) bad_spec(spec, "unknown even-class name '" + ft + "'");
        if (!e) bad_spec(spec, "unknown odd-stem name '" + et + "'");
        Int p = parse_p(pt);
        FInvariantClass cls = toda3_with_p(shape, *f, *e, p);
        return {cls, p_divided_indeterminacy(p, cls.level, cls.weight, opt.prec)};
    };
    if (kind == "fep") return shape_args(PShape::fep, a[0], a[1], a[2]);
    if (kind == "pef") return shape_args(PShape::pef, a[2], a[1], a[0]);
    if (kind == "efp") return shape_args(PShape::efp, a[1], a[0], a[2]);
    if (kind == "pfe") return shape_args(PShape::pfe, a[1], a[2], a[0]);
    bad_spec(spec, "unknown kind '" + kind + "'");
}

TodaOutput run_toda4(const std::string& spec, const Options& opt) {
    std::vector<std::string> a = split(spec, ',');
    if (a.size() != 3) bad_spec(spec, "expected FA,FB,P");
    Catalog cat = catalog(opt.prec);
    const FInvariantClass* fa = find_f(cat, a[0]);
    const FInvariantClass* fb = find_f(cat, a[1]);
    if (!fa || !fb) bad_spec(spec, "unknown even-class name");
    Int p = parse_p(a[2]);
    FInvariantClass cls = toda4(*fa, *fb, p);
    return {cls, four_fold_indeterminacy(*fa, *fb, p, opt.prec)};
}

int emit_toda(const TodaOutput& t, const Options& opt) {
    const FInvariantClass& c = t.cls;
    Fingerprint fp = fingerprint(c.representative, c.level, c.weight);
    Int ord = order_of(c.representative, c.level, c.weight);
    Int ord_mod = order_of(c.representative, c.level, c.weight, t.indet);
    if (opt.json()) {
        Json out{{"bracket", c.name},
                 {"stem", c.stem},
                 {"level", c.level},
                 {"weight", c.weight},
                 {"prec", opt.prec},
                 {"coeffs", coeff_list(c.representative)},
                 {"fingerprint", fingerprint_json(fp)},
                 {"order", ord.str()},
                 {"order_mod_indeterminacy", ord_mod.str()},
                 {"indeterminacy_generators", t.indet.gens.size()}};
        std::cout << out.dump() << "\n";
        return 0;
    }
    std::cout << c.name << "\n";
    std::cout << "stem " << c.stem << "  level " << c.level << "  weight " << c.weight << "\n";
    std::cout << "representative:\n";
    print_series(std::cout, c.representative);
    print_fingerprint(std::cout, fp);
    std::cout << "order: " << ord.str() << "\n";
    std::cout << "order modulo indeterminacy: " << ord_mod.str() << " ("
              << t.indet.gens.size() << " generators)\n";
    return 0;
}

// --------------------------------------------------------------- examples

struct Check {
    std::string name;
    std::function<std::pair<bool, std::string>()> run;
};

int run_checks(const std::vector<Check>& checks) {
    bool all = true;
    for (const Check& c : checks) {
        bool ok = false;
        std::string detail;
        try {
            auto [o, d] = c.run();
            ok = o;
            detail = d;
        } catch (const std::exception& err) {
            detail = std::string("exception: ") + err.what();
        }
        std::cout << (ok ? "[ok]   " : "[FAIL] ") << c.name;
        if (!detail.empty()) std::cout << "  (" << detail << ")";
        std::cout << "\n";
        all = all && ok;
    }
    std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
    return all ? 0 : 1;
}

int cmd_examples(const Options& opt) {
    const int P = opt.prec;
    Series one = Series::constant(1, P);
    Series a = (eisenstein(1, 4, P) - one) / Rational(240);   // sum of sigma_3 q^n
    Series e6 = eisenstein(1, 6, P);
    Series e1 = eisenstein(3, 1, P);
    Series d12 = (e1 * e1 - one) / Rational(12);
    Series c4 = (e1 * e1 - one) / Rational(4);
    Catalog cat = catalog(P);

    std::vector<Check> checks;

    checks.push_back({"divisor sums satisfy d^3 = d^5 mod 8", [=]() {
        Series diff = a - (one - e6) / Rational(504);
        for (int n = 0; n < P; ++n) {
            Rational c = diff.coeff(n);
            if (den(c) != 1 || num(c) % 8 != 0)
                return std::pair{false, "failed at q^" + std::to_string(n)};
        }
        return std::pair{true, std::to_string(P) + " coefficients"};
    }});

    checks.push_back({"[E4/240]_5 = 0", [=]() {
        return std::pair{bracket1(eisenstein(1, 4, P) / Rational(240), 1, 5).is_zero(),
                         std::string("no odd-weight forms at level 1")};
    }});

    checks.push_back({"q0([E4/1440]_6) = -1/3024", [=]() {
        Rational got = bracket1(eisenstein(1, 4, P) / Rational(1440), 1, 6).q0();
        return std::pair{got == Rational(-1, 3024), "got " + rstr(got)};
    }});

    checks.push_back({"[2*E4/240^2]_8 represents E4^2/240^2", [=]() {
        Series b = bracket1(Rational(2, 57600) * eisenstein(1, 4, P), 1, 8);
        Series target = eisenstein(1, 4, P).pow(2) / Rational(57600);
        return std::pair{class_eq(b, target, 1, 8), std::string("class comparison at weight 8")};
    }});

    checks.push_back({"<sigma, 2sigma, eta> = 1/2 A^2 with A = (E4-1)/240", [=]() {
        FInvariantClass t = toda3_odd(cat.sigma, cat.two_sigma, cat.eta);
        bool ok = class_eq(t.representative, Rational(1, 2) * a * a, 1, 9);
        return std::pair{ok, std::string("empty indeterminacy")};
    }});

    checks.push_back({"<f(sigma^2), 2 iota, eta> = -1/2 A^2", [=]() {
        FInvariantClass t = toda3_center_p(cat.f_sigma_sq, 2, cat.eta, PSide::left);
        bool ok = class_eq(t.representative, Rational(-1, 2) * a * a, 1, 9);
        return std::pair{ok, std::string("empty indeterminacy")};
    }});

    checks.push_back({"shuffled three-fold brackets agree at weight 9", [=]() {
        FInvariantClass odd = toda3_odd(cat.sigma, cat.two_sigma, cat.eta);
        FInvariantClass ctr = toda3_center_p(cat.f_sigma_sq, 2, cat.eta, PSide::left);
        bool ok = class_eq(odd.representative, ctr.representative, 1, 9);
        return std::pair{ok, std::string("difference is an integral series")};
    }});

    checks.push_back({"-1/2 A^2 matches 1/2 C^4 + 1/2 C^3 at level 3, C = (E1^2-1)/4", [=]() {
        Series lhs = Rational(-1, 2) * a * a;
        Series rhs = Rational(1, 2) * c4.pow(4) + Rational(1, 2) * c4.pow(3);
        IndeterminacySpec indet = center_p_indeterminacy(cat.f_sigma_sq, cat.eta, 3, P);
        bool ok = class_eq(lhs, rhs, 3, 9, indet);
        return std::pair{ok, std::string("modulo eta-scaled weight-8 cycles")};
    }});

    checks.push_back({"<sigma, 2sigma, nu> has order 4", [=]() {
        FInvariantClass t = toda3_odd(cat.sigma, cat.two_sigma, cat.nu);
        Series e4 = eisenstein(1, 4, P);
        Series target = Rational(1, Int(6) * 240 * 240) *
                        (Rational(-31, 21) * e4 + Rational(1, 2) * e4 * e4);
        if (t.representative != target) return std::pair{false, std::string("representative mismatch")};
        IndeterminacySpec indet = odd_bracket_indeterminacy(cat.sigma, cat.two_sigma, cat.nu, P);
        Int ord = order_of(t.representative, 1, 10, indet);
        return std::pair{ord == 4, "order " + ord.str() + " modulo indeterminacy"};
    }});

    checks.push_back({"<f(nu^2), 2 iota, eta> = -1/2 D^2 with D = (E1^2-1)/12", [=]() {
        FInvariantClass t = toda3_center_p(cat.f_nu_sq, 2, cat.eta, PSide::left);
        bool ok = class_eq(t.representative, Rational(-1, 2) * d12 * d12, 3, 5);
        return std::pair{ok, std::string("empty indeterminacy")};
    }});

    checks.push_back({"four-fold bracket of f(sigma^2) has order 2 and class 1/2 A^4", [=]() {
        FInvariantClass t = toda4(cat.f_sigma_sq, cat.f_sigma_sq, 2);
        Int ord = order_of(t.representative, 1, 16);
        if (ord != 2) return std::pair{false, "order " + ord.str()};
        IndeterminacySpec indet = four_fold_indeterminacy(cat.f_sigma_sq, cat.f_sigma_sq, 2, P);
        bool ok = class_eq(t.representative, Rational(1, 2) * a.pow(4), 1, 16, indet);
        return std::pair{ok, std::string("order 2, modulo four-fold indeterminacy")};
    }});

    return run_checks(checks);
}

// --------------------------------------------------------------- selftest

int cmd_selftest(const Options& opt) {
    std::vector<Check> checks;

    checks.push_back({"Eisenstein coefficients match divisor sums", []() {
        Series e4 = eisenstein(1, 4, 33), e6 = eisenstein(1, 6, 33), e1 = eisenstein(3, 1, 33);
        for (int n = 1; n < 33; ++n) {
            Int s3 = 0, s5 = 0, chi = 0;
            for (int d = 1; d <= n; ++d) {
                if (n % d != 0) continue;
                s3 += Int(d) * d * d;
                s5 += Int(d) * d * d * d * d;
                chi += d % 3 == 1 ? 1 : d % 3 == 2 ? -1 : 0;
            }
            if (e4.coeff(n) != Rational(240 * s3)) return std::pair{false, std::string("E4")};
            if (e6.coeff(n) != Rational(-504 * s5)) return std::pair{false, std::string("E6")};
            if (e1.coeff(n) != Rational(6 * chi)) return std::pair{false, std::string("E1")};
        }
        return std::pair{true, std::string("n <= 32")};
    }});

    checks.push_back({"echelon bases have unit pivots", []() {
        int spaces = 0;
        for (int level : {1, 3})
            for (int k = 1; k <= 16; ++k) {
                const FormSpace& S = space(level, k, 40);
                for (int i = 0; i < S.dim(); ++i)
                    for (int j = 0; j < S.dim(); ++j)
                        if (S.basis[j].coeff(i) != Rational(i == j ? 1 : 0))
                            return std::pair{false,
                                             "level " + std::to_string(level) + " weight " +
                                                 std::to_string(k)};
                if (S.dim() > 0) ++spaces;
            }
        return std::pair{true, std::to_string(spaces) + " spaces"};
    }});

    checks.push_back({"fingerprints ignore forms, constants and integral series", []() {
        std::mt19937_64 rng(20260823);
        auto rnd = [&rng](int den_bound) {
            std::uniform_int_distribution<int> numd(-30, 30), dend(1, den_bound);
            return Rational(numd(rng), dend(rng));
        };
        const int trials = 25, B = 40;
        std::uniform_int_distribution<int> zd(-9, 9);
        for (auto [level, n] : {std::pair{1, 8}, std::pair{3, 2}}) {
            const FormSpace& S = space(level, n, B);
            for (int t = 0; t < trials; ++t) {
                std::vector<Rational> xc(B + 1), zc(B + 1);
                for (int i = 0; i <= B; ++i) {
                    xc[i] = rnd(12);
                    zc[i] = Rational(zd(rng));
                }
                Series x = Series::from_coeffs(xc, B);
                Series y = x + Series::constant(rnd(12), B) + Series::from_coeffs(zc, B);
                for (const Series& f : S.basis) y = y + rnd(6) * f;
                if (fingerprint(x, level, n) != fingerprint(y, level, n))
                    return std::pair{false, "level " + std::to_string(level)};
            }
        }
        return std::pair{true, std::to_string(2 * trials) + " trials"};
    }});

    checks.push_back({"bracket outputs satisfy the defining congruence", []() {
        auto integral_tail = [](const Series& s) {
            for (int i = 1; i <= s.prec(); ++i)
                if (den(s.coeff(i)) != 1) return false;
            return true;
        };
        Series e4 = eisenstein(1, 4, 32);
        for (const auto& [f, n] : {std::pair{e4 / Rational(1440), 6},
                                   std::pair{Rational(2, 57600) * e4, 8},
                                   std::pair{e4 / Rational(240), 5}}) {
            if (!integral_tail(f - bracket1(f, 1, n)))
                return std::pair{false, "weight " + std::to_string(n)};
        }
        return std::pair{true, std::string("3 brackets")};
    }});

    checks.push_back({"expression parser round-trips", []() {
        for (const std::string text :
             {"(E4-1)/240", "[2*E4/240^2]_8", "E4@1 - 1@E4", "q0([E4/1440]_6)", "-E4^2 + E6/504"}) {
            std::string once = print(parse(text));
            if (print(parse(once)) != once) return std::pair{false, text};
        }
        return std::pair{true, std::string("5 expressions")};
    }});

    (void)opt;
    return run_checks(checks);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic on divided congruences of modular forms"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--level", opt.level, "arithmetic level")
        ->check(CLI::IsMember({1, 3}))
        ->capture_default_str();
    app.add_option("--prec", opt.prec, "number of q-expansion coefficients")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string arg_expr, arg_expr2, arg_spec;
    int arg_weight = 0;
    std::vector<std::string> arg_indet;

    CLI::App* c_expand = app.add_subcommand("expand", "evaluate an expression exactly");
    c_expand->add_option("EXPR", arg_expr, "expression")->required();

    CLI::App* c_bracket =
        app.add_subcommand("bracket", "virtual weight-N representative of an expression");
    c_bracket->add_option("EXPR", arg_expr, "expression")->required();
    c_bracket->add_option("N", arg_weight, "virtual weight")->required()->check(CLI::NonNegativeNumber);

    CLI::App* c_order =
        app.add_subcommand("order", "fingerprint and order of a class at weight N");
    c_order->add_option("EXPR", arg_expr, "expression")->required();
    c_order->add_option("N", arg_weight, "weight")->required()->check(CLI::NonNegativeNumber);

    CLI::App* c_eq = app.add_subcommand("eq", "compare two classes at weight N");
    c_eq->add_option("EXPR1", arg_expr, "first expression")->required();
    c_eq->add_option("EXPR2", arg_expr2, "second expression")->required();
    c_eq->add_option("N", arg_weight, "weight")->required()->check(CLI::NonNegativeNumber);
    c_eq->add_option("--indet", arg_indet,
                     "extra indeterminacy generator EXPR[:Z|:Q], repeatable");

    CLI::App* c_toda3 = app.add_subcommand(
        "toda3", "three-fold bracket; SPEC is KIND:X,Y,Z written in bracket order, "
                 "e.g. odd:sigma,2sigma,eta or center:fsigma2,2,eta or fep:fnu2,eta,2");
    c_toda3->add_option("SPEC", arg_spec, "bracket spec")->required();

    CLI::App* c_toda4 =
        app.add_subcommand("toda4", "four-fold bracket; SPEC is FA,FB,P, e.g. fsigma2,fsigma2,2");
    c_toda4->add_option("SPEC", arg_spec, "bracket spec")->required();

    CLI::App* c_examples =
        app.add_subcommand("examples", "recompute the worked examples and report pass/fail");
    CLI::App* c_selftest = app.add_subcommand("selftest", "run internal invariant checks");

    for (CLI::App* sub : {c_expand, c_bracket, c_order, c_eq, c_toda3, c_toda4, c_examples, c_selftest})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*c_expand) return cmd_expand(arg_expr, opt);
        if (*c_bracket) return cmd_bracket(arg_expr, arg_weight, opt);
        if (*c_order) return cmd_order(arg_expr, arg_weight, opt);
        if (*c_eq) return cmd_eq(arg_expr, arg_expr2, arg_weight, arg_indet, opt);
        if (*c_toda3) return emit_toda(run_toda3(arg_spec, opt), opt);
        if (*c_toda4) return emit_toda(run_toda4(arg_spec, opt), opt);
        if (*c_examples) return cmd_examples(opt);
        if (*c_selftest) return cmd_selftest(opt);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const EvalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NoVirtualWeight& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 1;
    } catch (const NotPTorsion& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 1;
    } catch (const PrecisionTooLow& e) {
        std::cerr << "precision: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
