#pragma once

#include "trispec/central_type.hpp"
#include "trispec/spectrum.hpp"
#include "trispec/srg.hpp"

namespace trispec::catalog {

enum class Side { diagram, codiagram };

// Rejects parameters outside the natural evaluation range of the family.
void validate(const CentralType& ct);

// True when ct lies in the classification's central-type parameter range;
// entries outside it (e.g. O4+(2), Sp4(2), h=0 lifted shapes) still evaluate
// but only as diagrams.
bool is_central_representative(const CentralType& ct);

Int size(const CentralType& ct);
Spectrum spectrum(const CentralType& ct);
Int min_eigenvalue(const CentralType& ct);

// Extended SRG parameters for the rank-3 base entries (h = 0 families and the
// Fischer groups).  Throws NotRank3Error for lifted shapes and triality.
srg::ExtendedParams extended_params(const CentralType& ct, Side side);

// Canonical representative whose diagram is identical (exotic PR13-19 map to
// their PR5/PR6 hosts, the stated repetitions map to the earlier family).
CentralType resolve_aliases(const CentralType& ct);

// Whether the group embeds in some Sp_{2n}(2) with its transvection class
// (data from the classification, not computed).
bool symplectic_type(const CentralType& ct);

// True when the diagram is complete (minimal eigenvalue -1 or a single vertex).
bool is_moufang(const CentralType& ct);

struct CatalogRow {
    std::string family;
    std::string param_ranges;
    bool symplectic;
    std::vector<std::string> aliases;
    std::string note; // documented table discrepancies, alias targets
};

// One row per family, for `catalog list`.
std::vector<CatalogRow> registry();

} // namespace trispec::catalog
