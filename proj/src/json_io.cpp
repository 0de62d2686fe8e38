#include "trispec/json_io.hpp"

namespace trispec::json_io {

Json int_json(const Int& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(int_str(v));
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(long(j.get<long long>()));
    if (j.is_string()) return int_parse(j.get<std::string>());
    throw ParseError("expected integer or decimal string");
}

Json spectrum_json(const Spectrum& s) {
    Json j;
    j["n"] = int_json(s.total_multiplicity());
    j["degree"] = s.degree().str();
    Json entries = Json::array();
    for (const auto& e : s.entries()) {
        Json je;
        je["eig"] = e.eig.str();
        je["mult"] = int_json(e.mult);
        entries.push_back(je);
    }
    j["entries"] = entries;
    return j;
}

Spectrum spectrum_from_json(const Json& j) {
    Int n = int_from_json(j.at("n"));
    Rational degree = Rational::parse(j.at("degree").get<std::string>());
    std::vector<std::pair<Rational, Int>> raw;
    for (const auto& je : j.at("entries"))
        raw.emplace_back(Rational::parse(je.at("eig").get<std::string>()),
                         int_from_json(je.at("mult")));
    return normalize(std::move(raw), n, degree);
}

Json params_json(const srg::ExtendedParams& p) {
    Json j;
    j["n"] = int_json(p.n);
    j["k"] = int_json(p.k);
    j["lambda"] = int_json(p.lambda);
    j["mu"] = int_json(p.mu);
    j["l"] = int_json(p.l);
    j["lambda_c"] = int_json(p.lambda_c);
    j["mu_c"] = int_json(p.mu_c);
    j["r"] = int_json(p.r);
    j["s"] = int_json(p.s);
    j["f"] = int_json(p.f);
    j["g"] = int_json(p.g);
    j["imprimitive"] = p.imprimitive;
    return j;
}

srg::ExtendedParams params_from_json(const Json& j) {
    return srg::make_params(int_from_json(j.at("n")), int_from_json(j.at("k")),
                            int_from_json(j.at("lambda")), int_from_json(j.at("mu")));
}

namespace {

std::string family_display(const catalog::CentralType& ct) {
    std::string h = std::to_string(ct.h);
    switch (ct.family) {
    case catalog::Family::PR2a:
        return ct.h == 0 ? "Sym(m), m>=4" : "(2^{m-1})^" + h + ":Sym(m), m>=4";
    case catalog::Family::PR2b: return "(3^{m-1})^" + h + ":Sym(m), m>=4";
    case catalog::Family::PR2c: return "3^." + h + " 2^.1:Sym(m), m>=4";
    case catalog::Family::PR2d: return "4^." + h + " 3^.1:Sym(m), m>=4";
    default: return catalog::display_name(ct);
    }
}

Json family_entry_json(const eigclass::FamilyEntry& f) {
    Json j;
    j["type"] = eigclass::family_label(f.ct);
    j["rho"] = int_json(f.rho);
    j["display"] = family_display(f.ct);
    j["symplectic"] = catalog::symplectic_type(f.ct);
    return j;
}

Json individual_json(const eigclass::IndividualEntry& e) {
    Json j;
    j["type"] = e.ct.str();
    j["rho"] = int_json(e.rho);
    j["display"] = catalog::display_name(e.ct);
    j["counted"] = e.counted;
    if (!e.alias_of.empty()) j["alias_of"] = e.alias_of;
    if (!e.duplicate_of.empty()) j["duplicate_of"] = e.duplicate_of;
    auto aliases = catalog::alias_names(e.ct);
    if (!aliases.empty()) j["aliases"] = aliases;
    return j;
}

} // namespace

Json enumeration_json(const eigclass::EnumerationReport& rep) {
    Json j;
    j["t"] = rep.t;
    j["moufang_class"] = rep.moufang_class;
    Json fams = Json::array();
    for (const auto& f : rep.symmetric_families) fams.push_back(family_entry_json(f));
    j["symmetric_families"] = fams;
    Json inds = Json::array();
    for (const auto& e : rep.individuals) inds.push_back(individual_json(e));
    j["individuals"] = inds;
    // grouped view keyed by canonical central-type strings, one bucket per rho
    Json by_rho = Json::object();
    for (const auto& f : rep.symmetric_families) {
        std::string key = int_str(f.rho);
        if (!by_rho.contains(key)) by_rho[key] = Json::array();
        by_rho[key].push_back(eigclass::family_label(f.ct));
    }
    for (const auto& e : rep.individuals) {
        std::string key = int_str(e.rho);
        if (!by_rho.contains(key)) by_rho[key] = Json::array();
        by_rho[key].push_back(e.ct.str());
    }
    j["by_rho"] = by_rho;
    j["S"] = rep.S;
    j["I"] = rep.I;
    return j;
}

eigclass::EnumerationReport enumeration_from_json(const Json& j) {
    eigclass::EnumerationReport rep;
    rep.t = j.at("t").get<long>();
    rep.moufang_class = j.at("moufang_class").get<bool>();
    for (const auto& jf : j.at("symmetric_families")) {
        eigclass::FamilyEntry f;
        std::string label = jf.at("type").get<std::string>();
        auto paren = label.find('(');
        auto fam = catalog::family_from_name(label.substr(0, paren));
        auto heq = label.find("h=");
        if (!fam || paren == std::string::npos || heq == std::string::npos)
            throw ParseError("bad family label '" + label + "'");
        long h = std::stol(label.substr(heq + 2));
        f.ct = catalog::make_type(*fam, h);
        f.rho = int_from_json(jf.at("rho"));
        rep.symmetric_families.push_back(f);
    }
    for (const auto& je : j.at("individuals")) {
        eigclass::IndividualEntry e;
        e.ct = catalog::CentralType::parse(je.at("type").get<std::string>());
        e.rho = int_from_json(je.at("rho"));
        e.counted = je.at("counted").get<bool>();
        if (je.contains("alias_of")) e.alias_of = je.at("alias_of").get<std::string>();
        if (je.contains("duplicate_of")) e.duplicate_of = je.at("duplicate_of").get<std::string>();
        rep.individuals.push_back(e);
    }
    rep.S = j.at("S").get<long>();
    rep.I = j.at("I").get<long>();
    return rep;
}

Json matsuo_json(const eigclass::MatsuoReport& rep) {
    Json j;
    j["eta"] = rep.eta.str();
    j["min_rho"] = int_json(rep.min_rho);
    j["symplectic_filter"] = rep.symplectic_filter;
    j["moufang"] = rep.moufang;
    if (rep.moufang) j["moufang_entry"] = rep.moufang_display;
    Json fams = Json::array();
    for (const auto& f : rep.families) fams.push_back(family_entry_json(f));
    j["families"] = fams;
    Json inds = Json::array();
    for (const auto& e : rep.individuals) inds.push_back(individual_json(e));
    j["individuals"] = inds;
    j["S"] = rep.S;
    j["I"] = rep.I;
    return j;
}

Json gram_json(const eigclass::GramReport& rep) {
    Json j;
    j["eta"] = rep.eta.str();
    j["rho"] = int_json(rep.rho);
    j["status"] = eigclass::gram_status_name(rep.status);
    j["radical_dim"] = int_json(rep.radical_dim);
    return j;
}

Json registry_json() {
    Json rows = Json::array();
    for (const auto& row : catalog::registry()) {
        Json j;
        j["family"] = row.family;
        j["param_ranges"] = row.param_ranges;
        j["symplectic_type"] = row.symplectic;
        j["aliases"] = row.aliases;
        if (!row.note.empty()) j["note"] = row.note;
        rows.push_back(j);
    }
    return rows;
}

} // namespace trispec::json_io
