#include "trispec/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "trispec/lifts.hpp"

namespace trispec::catalog {

namespace {

Int p2(long e) { return int_pow(2, (unsigned long)e); }
Int p3(long e) { return int_pow(3, (unsigned long)e); }
Int pm2(long e) { // (-2)^e
    Int v = p2(e);
    return (e % 2 == 0) ? v : -v;
}

struct FamilyInfo {
    const char* name;
    bool uses_h, uses_m, uses_eps;
};

const std::map<Family, FamilyInfo>& family_info() {
    static const std::map<Family, FamilyInfo> info = {
        {Family::PR1, {"PR1", true, false, false}},
        {Family::PR2a, {"PR2a", true, true, false}},
        {Family::PR2b, {"PR2b", true, true, false}},
        {Family::PR2c, {"PR2c", true, true, false}},
        {Family::PR2d, {"PR2d", true, true, false}},
        {Family::PR3, {"PR3", true, true, true}},
        {Family::PR4, {"PR4", true, true, false}},
        {Family::PR5, {"PR5", true, true, true}},
        {Family::PR6, {"PR6", true, true, false}},
        {Family::PR7a, {"PR7a", false, false, false}},
        {Family::PR7b, {"PR7b", false, false, false}},
        {Family::PR7c, {"PR7c", false, false, false}},
        {Family::PR7d, {"PR7d", false, false, false}},
        {Family::PR7e, {"PR7e", false, false, false}},
        {Family::PR8, {"PR8", true, false, false}},
        {Family::PR9, {"PR9", true, false, false}},
        {Family::PR10, {"PR10", true, false, false}},
        {Family::PR11, {"PR11", true, false, false}},
        {Family::PR12, {"PR12", true, false, false}},
        {Family::PR13, {"PR13", false, false, false}},
        {Family::PR14, {"PR14", false, false, false}},
        {Family::PR15, {"PR15", false, false, false}},
        {Family::PR16, {"PR16", false, false, false}},
        {Family::PR17, {"PR17", false, false, false}},
        {Family::PR18, {"PR18", false, false, false}},
        {Family::PR19, {"PR19", false, false, false}},
    };
    return info;
}

} // namespace

const std::vector<Family>& all_families() {
    static const std::vector<Family> fams = [] {
        std::vector<Family> v;
        for (const auto& [f, info] : family_info()) v.push_back(f);
        return v;
    }();
    return fams;
}

std::string family_name(Family f) { return family_info().at(f).name; }

std::optional<Family> family_from_name(const std::string& name) {
    for (const auto& [f, info] : family_info())
        if (name == info.name) return f;
    return std::nullopt;
}

bool family_uses_h(Family f) { return family_info().at(f).uses_h; }
bool family_uses_m(Family f) { return family_info().at(f).uses_m; }
bool family_uses_eps(Family f) { return family_info().at(f).uses_eps; }

std::string CentralType::str() const {
    std::string out = family_name(family);
    std::vector<std::string> args;
    if (family_uses_h(family)) args.push_back("h=" + std::to_string(h));
    if (family_uses_m(family)) args.push_back("m=" + std::to_string(m));
    if (family_uses_eps(family)) args.push_back(std::string("eps=") + (eps > 0 ? "+" : "-"));
    if (!args.empty()) {
        out += "(";
        for (std::size_t i = 0; i < args.size(); ++i) out += (i ? "," : "") + args[i];
        out += ")";
    }
    return out;
}

CentralType CentralType::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace((unsigned char)c)) s += c;
    std::size_t paren = s.find('(');
    std::string name = s.substr(0, paren);
    auto fam = family_from_name(name);
    if (!fam) throw ParseError("unknown family '" + name + "'");
    CentralType ct;
    ct.family = *fam;
    bool got_h = false, got_m = false, got_eps = false;
    if (paren != std::string::npos) {
        if (s.back() != ')') throw ParseError("missing ')' in '" + text + "'");
        std::string inner = s.substr(paren + 1, s.size() - paren - 2);
        std::stringstream ss(inner);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            auto eq = tok.find('=');
            if (eq == std::string::npos) throw ParseError("expected key=value in '" + tok + "'");
            std::string key = tok.substr(0, eq);
            std::string val = tok.substr(eq + 1);
            auto to_long = [&](const std::string& v) {
                try {
                    std::size_t pos = 0;
                    long out = std::stol(v, &pos);
                    if (pos != v.size()) throw ParseError("bad number '" + v + "'");
                    return out;
                } catch (const std::exception&) {
                    throw ParseError("bad number '" + v + "'");
                }
            };
            if (key == "h") {
                ct.h = to_long(val);
                got_h = true;
            } else if (key == "m") {
                ct.m = to_long(val);
                got_m = true;
            } else if (key == "eps") {
                if (val == "+" || val == "+1" || val == "1")
                    ct.eps = 1;
                else if (val == "-" || val == "-1")
                    ct.eps = -1;
                else
                    throw ParseError("bad eps value '" + val + "'");
                got_eps = true;
            } else {
                throw ParseError("unknown parameter '" + key + "'");
            }
        }
    }
    if (family_uses_h(ct.family) != got_h)
        throw ParseError(name + (got_h ? " takes no h" : " requires h"));
    if (family_uses_m(ct.family) != got_m)
        throw ParseError(name + (got_m ? " takes no m" : " requires m"));
    if (family_uses_eps(ct.family) != got_eps)
        throw ParseError(name + (got_eps ? " takes no eps" : " requires eps"));
    return ct;
}

void validate(const CentralType& ct) {
    auto fail = [&](const std::string& why) {
        throw OutOfRangeError(ct.str() + ": " + why);
    };
    if (family_uses_h(ct.family) && ct.h < 0) fail("h must be >= 0");
    switch (ct.family) {
    case Family::PR2a:
    case Family::PR2b:
    case Family::PR2c:
    case Family::PR2d:
        if (ct.m < 4) fail("m must be >= 4");
        break;
    case Family::PR3:
        if (ct.m < 2) fail("m must be >= 2");
        break;
    case Family::PR4:
        if (ct.m < 1) fail("m must be >= 1");
        break;
    case Family::PR5:
        if (ct.m < 3) fail("m must be >= 3");
        break;
    case Family::PR6:
        if (ct.m < 3) fail("m must be >= 3");
        break;
    default:
        break;
    }
    if (family_uses_eps(ct.family) && ct.eps != 1 && ct.eps != -1) fail("eps must be +/-");
}

bool is_central_representative(const CentralType& ct) {
    switch (ct.family) {
    case Family::PR1: return true;
    case Family::PR2a: return ct.m >= 4;
    case Family::PR2b:
    case Family::PR2c:
    case Family::PR2d: return ct.m >= 4 && ct.h >= 1;
    case Family::PR3: return ct.m >= 3 && !(ct.m == 3 && ct.eps == 1);
    case Family::PR4: return ct.m >= 3;
    case Family::PR5: return ct.m >= 5;
    case Family::PR6: return ct.m >= 3;
    case Family::PR8:
    case Family::PR9:
    case Family::PR10:
    case Family::PR11:
    case Family::PR12: return ct.h >= 1;
    case Family::PR13:
    case Family::PR14:
    case Family::PR15:
    case Family::PR16:
    case Family::PR17:
    case Family::PR18:
    case Family::PR19: return false; // same central type as the PR5/PR6 host
    default: return true;
    }
}

namespace {

struct BaseSpectrum {
    Spectrum spec;
    Int n;
};

BaseSpectrum sym_base(long m) {
    if (m == 2) return {normalize({{Rational(0), 1}}, 1, 0), 1};
    Int n = Int(m) * (m - 1) / 2;
    Rational k = Rational(2 * (m - 2));
    std::vector<std::pair<Rational, Int>> raw = {
        {k, 1}, {Rational(m - 4), Int(m - 1)}, {Rational(-2), Int(m) * (m - 3) / 2}};
    return {normalize(std::move(raw), n, k), n};
}

BaseSpectrum sp2_base(long m) {
    Int n = p2(2 * m) - 1;
    Rational k = Rational(p2(2 * m - 1));
    std::vector<std::pair<Rational, Int>> raw = {
        {k, 1},
        {Rational(p2(m - 1)), p2(2 * m - 1) - p2(m - 1) - 1},
        {Rational(-p2(m - 1)), p2(2 * m - 1) + p2(m - 1) - 1}};
    return {normalize(std::move(raw), n, k), n};
}

BaseSpectrum o2_base(long m, int eps) {
    Int n = p2(2 * m - 1) - eps * p2(m - 1);
    Rational k = Rational(p2(2 * m - 2) - eps * p2(m - 1));
    std::vector<std::pair<Rational, Int>> raw = {
        {k, 1},
        {Rational(eps * p2(m - 1)), (p2(m) - eps) * (p2(m - 1) - eps) / 3},
        {Rational(-eps * p2(m - 2)), (p2(2 * m) - 4) / 3}};
    return {normalize(std::move(raw), n, k), n};
}

BaseSpectrum su4_base(long m) {
    Int n = (p2(2 * m - 1) - 1 - pm2(m - 1)) / 3;
    Rational k = Rational(p2(2 * m - 3));
    Int d = 8 * (p2(2 * m - 3) - 1 - pm2(m - 2)) / 9;
    Int e = 4 * (p2(2 * m - 3) - 1 - 7 * pm2(m - 3)) / 9;
    std::vector<std::pair<Rational, Int>> raw = {
        {k, 1}, {Rational(-pm2(m - 3)), d}, {Rational(-pm2(m - 2)), e}};
    return {normalize(std::move(raw), n, k), n};
}

BaseSpectrum o3_base(long m, int eps) {
    if (m % 2 == 1) {
        Int n = (p3(m - 1) - eps * p3((m - 1) / 2)) / 2;
        Rational k = Rational(p3(m - 2) - 2 * eps * p3((m - 3) / 2) - 1);
        Int f = (p3(m - 1) - 1 - Int(eps - 1) * (p3((m - 1) / 2) - 1)) / 4;
        Int g = (p3(m - 1) - 1 - Int(eps + 1) * (p3((m - 1) / 2) + 1)) / 4;
        std::vector<std::pair<Rational, Int>> raw = {
            {k, 1},
            {Rational(p3((m - 3) / 2) - 1), f},
            {Rational(-p3((m - 3) / 2) - 1), g}};
        return {normalize(std::move(raw), n, k), n};
    }
    Int n = (p3(m - 1) - eps * p3((m - 2) / 2)) / 2;
    Rational k = Rational(p3(m - 2) - 1);
    Int d = (p3(m / 2) - eps) * (p3((m - 2) / 2) - eps) / 8;
    Int e = (p3(m) - 9) / 8;
    std::vector<std::pair<Rational, Int>> raw = {
        {k, 1},
        {Rational(-eps * p3((m - 2) / 2) - 1), d},
        {Rational(eps * p3((m - 4) / 2) - 1), e}};
    return {normalize(std::move(raw), n, k), n};
}

srg::ExtendedParams fischer_params(Family f) {
    switch (f) {
    case Family::PR7a: return srg::make_params(3510, 2816, 2248, 2304);
    case Family::PR7b: return srg::make_params(31671, 28160, 25000, 25344);
    case Family::PR7c: return srg::make_params(306936, 275264, 246832, 247104);
    default: throw Error("not a Fischer family");
    }
}

BaseSpectrum fischer_base(Family f) {
    srg::ExtendedParams p = fischer_params(f);
    return {p.spectrum(), p.n};
}

BaseSpectrum triality_base(Family f) {
    if (f == Family::PR7d) {
        BaseSpectrum base = o2_base(4, +1);
        return {lifts::triple_spectrum(base.spec, base.n, 56), 3 * base.n};
    }
    BaseSpectrum base = o3_base(8, +1); // (1080, 728, 484, 504)
    return {lifts::triple_spectrum(base.spec, base.n, 728), 3 * base.n};
}

BaseSpectrum lifted(BaseSpectrum base, int p, unsigned long h) {
    auto [spec, n] = lifts::lift_spectrum(base.spec, base.n, p, h);
    return {spec, n};
}

BaseSpectrum spectrum_impl(const CentralType& ct) {
    validate(ct);
    unsigned long h = (unsigned long)ct.h;
    long m = ct.m;
    int eps = ct.eps;
    switch (ct.family) {
    case Family::PR1: return lifted(sym_base(2), 3, h);
    case Family::PR2a: return lifted(sym_base(m), 2, h);
    case Family::PR2b: return lifted(sym_base(m), 3, h);
    case Family::PR2c: return lifted(lifted(sym_base(m), 2, 1), 3, h);
    case Family::PR2d: return lifted(lifted(sym_base(m), 3, 1), 2, 2 * h);
    case Family::PR3: return lifted(o2_base(m, eps), 2, h);
    case Family::PR4: return lifted(sp2_base(m), 2, h);
    case Family::PR5: return lifted(o3_base(m, eps), 3, h);
    case Family::PR6: return lifted(su4_base(m), 2, 2 * h);
    case Family::PR7a:
    case Family::PR7b:
    case Family::PR7c: return fischer_base(ct.family);
    case Family::PR7d:
    case Family::PR7e: return triality_base(ct.family);
    case Family::PR8: return lifted(o3_base(6, -1), 2, 2 * h);
    case Family::PR9: return lifted(sp2_base(3), 3, h);
    case Family::PR10: return lifted(o2_base(4, +1), 3, h);
    case Family::PR11: return lifted(su4_base(5), 3, 2 * h);
    case Family::PR12: return lifted(lifted(su4_base(3), 2, 2), 3, 2 * h);
    default: return spectrum_impl(resolve_aliases(ct));
    }
}

} // namespace

Spectrum spectrum(const CentralType& ct) { return spectrum_impl(ct).spec; }

Int size(const CentralType& ct) { return spectrum_impl(ct).n; }

Int min_eigenvalue(const CentralType& ct) {
    Rational r = spectrum(ct).min_eigenvalue();
    if (!r.is_integer()) throw Error("catalog spectrum with non-integral eigenvalue");
    return r.numerator();
}

CentralType resolve_aliases(const CentralType& ct) {
    switch (ct.family) {
    case Family::PR13: return make_type(Family::PR5, 2, 5, -1);
    case Family::PR14: return make_type(Family::PR5, 2, 6, -1);
    case Family::PR15: return make_type(Family::PR5, 1, 7, -1);
    case Family::PR16: return make_type(Family::PR5, 1, 8, -1);
    case Family::PR17: return make_type(Family::PR6, 2, 5);
    case Family::PR18: return make_type(Family::PR6, 1, 7);
    case Family::PR19: return make_type(Family::PR6, 3, 3);
    case Family::PR5:
        if (ct.h == 0 && ct.m == 5 && ct.eps == 1) return make_type(Family::PR3, 0, 3, -1);
        return ct;
    case Family::PR6:
        if (ct.h == 0 && ct.m == 4) return make_type(Family::PR5, 0, 5, -1);
        if (ct.h == 0 && ct.m == 3) return make_type(Family::PR1, 2);
        return ct;
    default: return ct;
    }
}

bool symplectic_type(const CentralType& ct) {
    switch (ct.family) {
    case Family::PR1: return ct.h == 1; // Sym(3) only
    case Family::PR2a:
    case Family::PR3:
    case Family::PR4: return true;
    default: return false;
    }
}

bool is_moufang(const CentralType& ct) {
    Spectrum s = spectrum(ct);
    return s.entries().size() == 1 || s.min_eigenvalue() == Rational(-1);
}

srg::ExtendedParams extended_params(const CentralType& ct, Side side) {
    validate(ct);
    bool rank3 = false;
    Int n, k, lambda, mu;
    switch (ct.family) {
    case Family::PR2a:
        if (ct.h == 0) {
            long m = ct.m;
            n = Int(m) * (m - 1) / 2;
            k = 2 * (m - 2);
            lambda = m - 2;
            mu = 4;
            rank3 = true;
        }
        break;
    case Family::PR3:
        if (ct.h == 0) {
            long m = ct.m;
            int e = ct.eps;
            n = p2(2 * m - 1) - e * p2(m - 1);
            k = p2(2 * m - 2) - e * p2(m - 1);
            lambda = p2(2 * m - 3) - e * p2(m - 2);
            mu = p2(2 * m - 3) - e * p2(m - 1);
            rank3 = true;
        }
        break;
    case Family::PR4:
        if (ct.h == 0) {
            long m = ct.m;
            n = p2(2 * m) - 1;
            k = p2(2 * m - 1);
            lambda = p2(2 * m - 2);
            mu = p2(2 * m - 2);
            rank3 = true;
        }
        break;
    case Family::PR5:
        if (ct.h == 0) {
            long m = ct.m;
            int e = ct.eps;
            if (m % 2 == 1) {
                n = (p3(m - 1) - e * p3((m - 1) / 2)) / 2;
                k = p3(m - 2) - 2 * e * p3((m - 3) / 2) - 1;
                lambda = 2 * (p3(m - 3) - e * p3((m - 3) / 2) - 1);
                mu = 2 * (p3(m - 3) - e * p3((m - 3) / 2));
            } else {
                n = (p3(m - 1) - e * p3((m - 2) / 2)) / 2;
                k = p3(m - 2) - 1;
                lambda = 2 * (p3(m - 3) - 1);
                mu = 2 * (p3(m - 3) + e * p3((m - 4) / 2));
            }
            rank3 = true;
        }
        break;
    case Family::PR6:
        if (ct.h == 0) {
            long m = ct.m;
            n = (p2(2 * m - 1) - 1 - pm2(m - 1)) / 3;
            k = p2(2 * m - 3);
            // lambda sign settled by the GF(4) oracle: "+" as in the theorem,
            // against the "-" printed in the parameter table.
            lambda = 3 * p2(2 * m - 5) + pm2(m - 3);
            mu = 3 * p2(2 * m - 5);
            rank3 = true;
        }
        break;
    case Family::PR7a:
    case Family::PR7b:
    case Family::PR7c: {
        srg::ExtendedParams p = fischer_params(ct.family);
        return side == Side::diagram ? p : srg::complement_params(p);
    }
    default:
        break;
    }
    if (!rank3)
        throw NotRank3Error(ct.str() + " is not a rank-3 base entry");
    if (k >= n - 1)
        throw NotRank3Error(ct.str() + " has a complete diagram (rank 2)");
    if (k <= 0)
        throw NotRank3Error(ct.str() + " has an empty diagram");
    srg::ExtendedParams p = srg::make_params(n, k, lambda, mu);
    return side == Side::diagram ? p : srg::complement_params(p);
}

namespace {

std::string pow_str(const std::string& base, long e) {
    return "(" + base + ")^" + std::to_string(e);
}

} // namespace

std::string display_name(const CentralType& ct) {
    long h = ct.h;
    long m = ct.m;
    std::string e = ct.eps > 0 ? "+" : "-";
    auto lift_prefix = [&](const std::string& module, const std::string& core) {
        if (h == 0) return core;
        if (h == 1) return module + ":" + core;
        return pow_str(module, h) + ":" + core;
    };
    switch (ct.family) {
    case Family::PR1:
        if (h == 0) return "Sym(2)";
        if (h == 1) return "Sym(3)";
        return "3^." + std::to_string(h) + ":Sym(2)";
    case Family::PR2a:
        return lift_prefix("2^" + std::to_string(m - 1), "Sym(" + std::to_string(m) + ")");
    case Family::PR2b:
        return lift_prefix("3^" + std::to_string(m - 1), "Sym(" + std::to_string(m) + ")");
    case Family::PR2c:
        return "3^." + std::to_string(h) + " 2^.1:Sym(" + std::to_string(m) + ")";
    case Family::PR2d:
        return "4^." + std::to_string(h) + " 3^.1:Sym(" + std::to_string(m) + ")";
    case Family::PR3:
        return lift_prefix("2^" + std::to_string(2 * m),
                           "O" + std::to_string(2 * m) + e + "(2)");
    case Family::PR4:
        return lift_prefix("2^" + std::to_string(2 * m), "Sp" + std::to_string(2 * m) + "(2)");
    case Family::PR5:
        return lift_prefix("3^" + std::to_string(m),
                           "Omega" + std::to_string(m) + e + "(3)");
    case Family::PR6: {
        std::string core = "SU" + std::to_string(m) + "(2)" + (m == 3 ? "'" : "");
        return lift_prefix("4^" + std::to_string(m), core);
    }
    case Family::PR7a: return "Fi22";
    case Family::PR7b: return "Fi23";
    case Family::PR7c: return "Fi24";
    case Family::PR7d: return "POmega8+(2):Sym(3)";
    case Family::PR7e: return "POmega8+(3):Sym(3)";
    case Family::PR8: return lift_prefix("4^6", "(3.Omega6-(3))");
    case Family::PR9: return lift_prefix("3^7", "(2xSp6(2))");
    case Family::PR10: return lift_prefix("3^8", "(2.O8+(2))");
    case Family::PR11: return lift_prefix("9^5", "(2xSU5(2))");
    case Family::PR12: return "9^." + std::to_string(h) + " 4^.1:SU3(2)'";
    case Family::PR13: return "(3^5.3^5):Omega5-(3)";
    case Family::PR14: return "(3^6.3^6):(3.Omega6-(3))";
    case Family::PR15: return "3^7.Omega7-(3)";
    case Family::PR16: return "3^8.Omega8-(3)";
    case Family::PR17: return "(4^5.4^5):SU5(2)";
    case Family::PR18: return "4^7.SU7(2)";
    case Family::PR19: return "4^(3+(3+3)):SU3(2)'";
    }
    return "?";
}

std::vector<std::string> alias_names(const CentralType& ct) {
    std::vector<std::string> out;
    const long h = ct.h, m = ct.m;
    const int eps = ct.eps;
    switch (ct.family) {
    case Family::PR1:
        if (h == 2) out.push_back("SU3(2)'");
        break;
    case Family::PR2a:
        if (h == 0) {
            out.push_back("W(A" + std::to_string(m - 1) + ")");
            if (m == 5) out.push_back("O4-(2)");
            if (m == 6) out.push_back("Sp4(2)");
            if (m == 8) out.push_back("O6+(2)");
        }
        if (h == 1) out.push_back("W(D" + std::to_string(m) + ")");
        break;
    case Family::PR2b:
        if (h == 1) out.push_back("W_3(~A" + std::to_string(m - 1) + ")");
        break;
    case Family::PR2c:
        if (h == 1) out.push_back("W_3(~D" + std::to_string(m) + ")");
        break;
    case Family::PR3:
        if (h == 0 && m == 3 && eps == -1) {
            out.push_back("W(E6)");
            out.push_back("Omega5+(3)");
        }
        if (h == 1 && m == 3 && eps == -1) out.push_back("W_2(~E6)");
        if (h == 0 && m == 4 && eps == 1) out.push_back("W(E8)/2");
        if (h == 1 && m == 4 && eps == 1) out.push_back("W_2(~E8)/2");
        break;
    case Family::PR4:
        if (h == 0 && m == 3) out.push_back("W(E7)/2");
        if (h == 1 && m == 3) out.push_back("W_2(~E7)/2");
        break;
    case Family::PR5:
        if (h == 0 && m == 5 && eps == 1) {
            out.push_back("O6-(2)");
            out.push_back("W(E6)");
        }
        if (h == 0 && m == 5 && eps == -1) out.push_back("2xSU4(2)");
        break;
    case Family::PR6:
        if (h == 0 && m == 4) out.push_back("Omega5-(3)/2");
        if (h == 0 && m == 3) out.push_back("3^.2:Sym(2)");
        break;
    case Family::PR9:
        if (h == 1) out.push_back("W_3(~E7)");
        break;
    case Family::PR10:
        if (h == 1) out.push_back("W_3(~E8)");
        break;
    case Family::PR13:
    case Family::PR14:
    case Family::PR15:
    case Family::PR16:
    case Family::PR17:
    case Family::PR18:
    case Family::PR19:
        out.push_back(resolve_aliases(ct).str());
        break;
    default:
        break;
    }
    return out;
}

std::vector<CatalogRow> registry() {
    std::vector<CatalogRow> rows;
    auto add = [&](Family f, const std::string& ranges, const std::string& alias,
                   const std::string& note) {
        CatalogRow row;
        row.family = family_name(f);
        row.param_ranges = ranges;
        row.symplectic = symplectic_type(make_type(f, f == Family::PR1 ? 1 : 0, 4));
        if (!alias.empty()) row.aliases.push_back(alias);
        row.note = note;
        rows.push_back(row);
    };
    add(Family::PR1, "h>=0", "3^u:2 (Moufang)", "");
    add(Family::PR2a, "h>=0, m>=4", "(2^{m-1})^h:Sym(m)", "");
    add(Family::PR2b, "h>=1 (evaluates at h=0), m>=4", "(3^{m-1})^h:Sym(m)", "");
    add(Family::PR2c, "h>=1 (evaluates at h=0), m>=4", "3^.h 2^.1:Sym(m)", "");
    add(Family::PR2d, "h>=1 (evaluates at h=0), m>=4", "4^.h 3^.1:Sym(m)", "");
    add(Family::PR3, "h>=0, m>=3, (m,eps)!=(3,+); evaluates at m=2 and (3,+)",
        "2^.h:O_{2m}^eps(2)",
        "m=2 and (m,eps)=(3,+) are diagram-only (Sym(5)/Sym(8) repetitions; O4+(2) is "
        "disconnected)");
    add(Family::PR4, "h>=0, m>=3; evaluates at m=1,2", "2^.h:Sp_{2m}(2)",
        "m<3 is diagram-only (Sym(3)/Sym(6) repetitions)");
    add(Family::PR5, "h>=0, m>=5, eps=+/-; evaluates at m=3,4", "3^.h Omega_m^eps(3)", "");
    add(Family::PR6, "h>=0, m>=3", "4^.h SU_m(2)'",
        "diagram lambda = 3*2^(2m-5) + (-2)^(m-3); the parameter table prints the sign of "
        "(-2)^(m-3) and the codiagram lambda' row incorrectly, settled by the GF(4) oracle "
        "at m=4,5");
    add(Family::PR7a, "-", "Fi22", "");
    add(Family::PR7b, "-", "Fi23", "");
    add(Family::PR7c, "-", "Fi24", "");
    add(Family::PR7d, "-", "POmega8+(2):Sym(3)", "triality; not rank 3");
    add(Family::PR7e, "-", "POmega8+(3):Sym(3)",
        "triality; not rank 3; degree 2888 = k+2n (the printed 2511 fails the trace identity)");
    add(Family::PR8, "h>=1 (evaluates at h=0)", "4^.h:(3.Omega6-(3))", "");
    add(Family::PR9, "h>=1 (evaluates at h=0)", "3^.h:(2xSp6(2))", "");
    add(Family::PR10, "h>=1 (evaluates at h=0)", "3^.h:(2.O8+(2))", "");
    add(Family::PR11, "h>=1 (evaluates at h=0)", "9^.h:(2xSU5(2))", "");
    add(Family::PR12, "h>=1 (evaluates at h=0)", "9^.h 4^.1:SU3(2)'",
        "shape also written 9^.h 2^.2; identical diagram");
    auto add_exotic = [&](Family f) {
        CentralType ct = make_type(f);
        add(f, "-", display_name(ct), "same diagram as " + resolve_aliases(ct).str());
    };
    add_exotic(Family::PR13);
    add_exotic(Family::PR14);
    add_exotic(Family::PR15);
    add_exotic(Family::PR16);
    add_exotic(Family::PR17);
    add_exotic(Family::PR18);
    add_exotic(Family::PR19);
    return rows;
}

} // namespace trispec::catalog
