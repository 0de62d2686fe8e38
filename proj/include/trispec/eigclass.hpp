#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trispec/bitmatrix.hpp"
#include "trispec/catalog.hpp"

namespace trispec::eigclass {

// The four-way split of attainable minimal eigenvalues; -4 belongs to both
// the characteristic 2 and the characteristic 3 case.
struct FourCase {
    bool moufang = false;               // rho = -1
    std::optional<long> char2_exp;      // rho = -2^a
    std::optional<long> char3_exp;      // rho = -3^b - 1
    bool sporadic352 = false;           // rho = -352
};

FourCase four_case_classify(const Int& rho);

struct FamilyEntry {
    catalog::CentralType ct; // m unused: the entry ranges over all m >= 4
    Int rho;
};

// "PR2a(h=1)" — the family-over-m form of a symmetric entry.
std::string family_label(const catalog::CentralType& ct);

struct IndividualEntry {
    catalog::CentralType ct;
    Int rho;
    bool counted = true;       // false for alias/duplicate entries
    std::string alias_of;      // canonical host when this is an exotic shape
    std::string duplicate_of;  // same group listed under an earlier family
};

struct EnumerationReport {
    long t = 0;
    bool moufang_class = true;
    std::vector<FamilyEntry> symmetric_families;
    std::vector<IndividualEntry> individuals;
    long S = 0;
    long I = 0;
};

// Exhaustive enumeration of central types with minimal eigenvalue >= -t,
// driven by the catalog's rho formulas (monotone in h and m).
EnumerationReport enumerate_min_eig(long t);

enum class GramStatus { positive_definite, positive_semidefinite, indefinite };

std::string gram_status_name(GramStatus s);

struct GramReport {
    Rational eta;
    Int rho;
    GramStatus status = GramStatus::positive_definite;
    Int radical_dim = 0;
};

// Definiteness of I + (eta/2)H from the catalog spectrum (signs of
// 1 + (eta/2)lambda across the spectrum; radical = total multiplicity at 0).
GramReport gram_status(const catalog::CentralType& ct, const Rational& eta);

// Independent verification by fraction-free symmetric elimination of the
// integer matrix 2q I + p A (eta = p/q); rho comes from exact_spectrum.
GramReport gram_matrix_check(const BitMatrix& m, const Rational& eta, std::size_t cap = 2500);

struct MatsuoReport {
    Rational eta;
    Int min_rho;              // smallest admissible minimal eigenvalue
    bool symplectic_filter = false;
    bool moufang = true;
    std::string moufang_display;
    std::vector<FamilyEntry> families;
    std::vector<IndividualEntry> individuals;
    long S = 0;
    long I = 0;
};

// Central types whose Matsuo algebra at eta is compact or semidefinite
// (rho >= -2/eta), optionally restricted to symplectic type.
MatsuoReport matsuo_candidates(const Rational& eta, bool symplectic_filter);

} // namespace trispec::eigclass
