#include "trispec/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <ostream>
#include <sstream>

#include "trispec/catalog.hpp"
#include "trispec/eigclass.hpp"
#include "trispec/json_io.hpp"
#include "trispec/oracle.hpp"

namespace trispec::cli {

namespace {

using catalog::CentralType;
using json_io::Json;

std::size_t default_cap() {
    if (const char* env = std::getenv("TRISPEC_CAP")) {
        long v = std::atol(env);
        if (v > 0) return (std::size_t)v;
    }
    return oracle::kDefaultCap;
}

void print_params_table(std::ostream& os, const srg::ExtendedParams& p, const char* side) {
    os << side << ": (" << int_str(p.n) << ", " << int_str(p.k) << ", " << int_str(p.lambda)
       << ", " << int_str(p.mu) << "; [" << int_str(p.r) << "]^" << int_str(p.f) << ", ["
       << int_str(p.s) << "]^" << int_str(p.g) << ")"
       << (p.imprimitive ? "  [imprimitive]" : "") << "\n";
}

int cmd_spectrum(const std::string& type_str, bool json, std::ostream& os) {
    CentralType ct = CentralType::parse(type_str);
    Spectrum s = catalog::spectrum(ct);
    if (json) {
        Json j;
        j["type"] = ct.str();
        j["display"] = catalog::display_name(ct);
        j["size"] = json_io::int_json(catalog::size(ct));
        j["min_eigenvalue"] = json_io::int_json(catalog::min_eigenvalue(ct));
        j["central_representative"] = catalog::is_central_representative(ct);
        j["spectrum"] = json_io::spectrum_json(s);
        os << j.dump(2) << "\n";
    } else {
        os << ct.str() << "  " << catalog::display_name(ct) << "\n";
        os << "size " << int_str(catalog::size(ct)) << "  spectrum " << s.str()
           << "  min eigenvalue " << int_str(catalog::min_eigenvalue(ct)) << "\n";
        if (!catalog::is_central_representative(ct))
            os << "note: outside the central-type parameter range (diagram only)\n";
    }
    return 0;
}

int cmd_params(const std::string& type_str, bool json, std::ostream& os) {
    CentralType ct = CentralType::parse(type_str);
    auto diagram = catalog::extended_params(ct, catalog::Side::diagram);
    auto codiagram = catalog::extended_params(ct, catalog::Side::codiagram);
    if (json) {
        Json j;
        j["type"] = ct.str();
        j["diagram"] = json_io::params_json(diagram);
        j["codiagram"] = json_io::params_json(codiagram);
        os << j.dump(2) << "\n";
    } else {
        os << ct.str() << "  " << catalog::display_name(ct) << "\n";
        print_params_table(os, diagram, "diagram");
        print_params_table(os, codiagram, "codiagram");
    }
    return 0;
}

int cmd_verify(const std::string& type_str, std::size_t cap, bool quiet, std::ostream& os) {
    CentralType ct = CentralType::parse(type_str);
    Spectrum expected = catalog::spectrum(ct);
    BitMatrix m = oracle::oracle_matrix(ct, cap);
    Spectrum got = oracle::exact_spectrum(m, cap);
    if (got == expected) {
        if (!quiet)
            os << "match: " << ct.str() << " on " << m.size() << " vertices, spectrum "
               << got.str() << "\n";
        return 0;
    }
    os << "MISMATCH for " << ct.str() << "\n";
    os << "  catalog: " << expected.str() << "\n";
    os << "  oracle:  " << got.str() << "\n";
    return 1;
}

int cmd_enumerate(long t, bool json, std::ostream& os) {
    auto rep = eigclass::enumerate_min_eig(t);
    if (json) {
        os << json_io::enumeration_json(rep).dump(2) << "\n";
        return 0;
    }
    os << "t = " << t << ": Moufang class (rho = -1), S = " << rep.S << ", I = " << rep.I
       << "\n";
    os << "symmetric families:\n";
    for (const auto& f : rep.symmetric_families)
        os << "  rho=" << int_str(f.rho) << "  " << eigclass::family_label(f.ct) << "\n";
    os << "individuals:\n";
    for (const auto& e : rep.individuals) {
        os << "  rho=" << int_str(e.rho) << "  " << e.ct.str() << "  "
           << catalog::display_name(e.ct);
        if (!e.alias_of.empty()) os << "  [same diagram as " << e.alias_of << "]";
        if (!e.duplicate_of.empty()) os << "  [same group as " << e.duplicate_of << "]";
        os << "\n";
    }
    return 0;
}

int cmd_matsuo(const std::string& eta_str, bool symplectic, bool json, std::ostream& os) {
    Rational eta = Rational::parse(eta_str);
    auto rep = eigclass::matsuo_candidates(eta, symplectic);
    if (json) {
        os << json_io::matsuo_json(rep).dump(2) << "\n";
        return 0;
    }
    os << "eta = " << eta.str() << ", admissible rho >= " << int_str(rep.min_rho)
       << (symplectic ? " (symplectic type only)" : "") << "\n";
    if (rep.moufang) os << "Moufang: " << rep.moufang_display << "\n";
    os << "families (" << rep.S << "):\n";
    for (const auto& f : rep.families)
        os << "  rho=" << int_str(f.rho) << "  " << eigclass::family_label(f.ct) << "\n";
    os << "individuals (" << rep.I << " counted):\n";
    for (const auto& e : rep.individuals)
        os << "  rho=" << int_str(e.rho) << "  " << e.ct.str() << "  "
           << catalog::display_name(e.ct) << (e.counted ? "" : "  [not counted]") << "\n";
    return 0;
}

int cmd_catalog_list(bool json, std::ostream& os) {
    if (json) {
        os << json_io::registry_json().dump(2) << "\n";
        return 0;
    }
    for (const auto& row : catalog::registry()) {
        os << row.family << "  " << row.param_ranges
           << (row.symplectic ? "  [symplectic]" : "");
        for (const auto& a : row.aliases) os << "  " << a;
        if (!row.note.empty()) os << "\n    note: " << row.note;
        os << "\n";
    }
    return 0;
}

int cmd_export(const std::string& type_str, std::size_t cap, std::ostream& os) {
    CentralType ct = CentralType::parse(type_str);
    BitMatrix m = oracle::oracle_matrix(ct, cap);
    oracle::export_graph(m, os);
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& os, std::ostream& err) {
    CLI::App app{"exact spectra of 3-transposition diagrams"};
    app.require_subcommand(1);

    std::string format = "table";
    std::size_t cap = default_cap();
    bool quiet = false;
    app.add_option("--format", format, "output format: table or json")
        ->check(CLI::IsMember({"table", "json"}));
    app.add_option("--cap", cap, "oracle dimension cap");
    app.add_flag("--quiet", quiet, "suppress success chatter");

    std::string type_str;
    long t = 8;
    std::string eta = "1/4";
    bool symplectic = false;

    auto* sp = app.add_subcommand("spectrum", "closed-form spectrum of a central type");
    sp->add_option("type", type_str, "central type, e.g. PR4(h=0,m=3)")->required();
    auto* pa = app.add_subcommand("params", "extended SRG parameters of a rank-3 type");
    pa->add_option("type", type_str)->required();
    auto* ve = app.add_subcommand("verify", "rebuild the diagram and compare spectra");
    ve->add_option("type", type_str)->required();
    auto* en = app.add_subcommand("enumerate", "central types with min eigenvalue >= -t");
    en->add_option("-t,--t", t, "threshold t >= 1")->required();
    auto* ma = app.add_subcommand("matsuo", "compactness candidates for eta");
    ma->add_option("--eta", eta, "eta as p/q")->required();
    ma->add_flag("--symplectic", symplectic, "restrict to symplectic type");
    auto* ca = app.add_subcommand("catalog", "catalog registry");
    ca->add_subcommand("list", "list families");
    auto* ex = app.add_subcommand("export-graph", "emit an edge list for a central type");
    ex->add_option("type", type_str)->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            os << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    bool json = format == "json";
    try {
        if (sp->parsed()) return cmd_spectrum(type_str, json, os);
        if (pa->parsed()) return cmd_params(type_str, json, os);
        if (ve->parsed()) return cmd_verify(type_str, cap, quiet, os);
        if (en->parsed()) return cmd_enumerate(t, json, os);
        if (ma->parsed()) return cmd_matsuo(eta, symplectic, json, os);
        if (ca->parsed()) return cmd_catalog_list(json, os);
        if (ex->parsed()) return cmd_export(type_str, cap, os);
    } catch (const NoOracleError& e) {
        err << "error: no oracle at this scale: " << e.what() << "\n";
        return 2;
    } catch (const DimensionCapError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace trispec::cli
