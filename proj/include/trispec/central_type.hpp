#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trispec/rational.hpp"

namespace trispec::catalog {

enum class Family {
    PR1,
    PR2a,
    PR2b,
    PR2c,
    PR2d,
    PR3,
    PR4,
    PR5,
    PR6,
    PR7a,
    PR7b,
    PR7c,
    PR7d,
    PR7e,
    PR8,
    PR9,
    PR10,
    PR11,
    PR12,
    PR13,
    PR14,
    PR15,
    PR16,
    PR17,
    PR18,
    PR19,
};

const std::vector<Family>& all_families();
std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

// Which parameters a family takes.
bool family_uses_h(Family f);
bool family_uses_m(Family f);
bool family_uses_eps(Family f);

// A central type: family tag plus the parameters it uses (h >= 0, m, eps = +/-1).
struct CentralType {
    Family family = Family::PR1;
    long h = 0;
    long m = 0;
    int eps = 0;

    // Canonical string, grammar FAMILY[(h=H[,m=M][,eps=±])].
    std::string str() const;
    static CentralType parse(const std::string& text);

    friend bool operator==(const CentralType& a, const CentralType& b) {
        return a.family == b.family && a.h == b.h && a.m == b.m && a.eps == b.eps;
    }
    friend bool operator!=(const CentralType& a, const CentralType& b) { return !(a == b); }
    friend bool operator<(const CentralType& a, const CentralType& b) {
        if (a.family != b.family) return a.family < b.family;
        if (a.eps != b.eps) return a.eps > b.eps; // + before -
        if (a.m != b.m) return a.m < b.m;
        return a.h < b.h;
    }
};

inline CentralType make_type(Family f, long h = 0, long m = 0, int eps = 0) {
    return CentralType{f, h, m, eps};
}

// Group-style display name, e.g. "(2^6)^2:Sp6(2)" or "Fi23".
std::string display_name(const CentralType& ct);

// Extra display aliases (Weyl-group names, stated isomorphisms).
std::vector<std::string> alias_names(const CentralType& ct);

} // namespace trispec::catalog
