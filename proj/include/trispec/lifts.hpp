#pragma once

#include <utility>

#include "trispec/bitmatrix.hpp"
#include "trispec/spectrum.hpp"

namespace trispec::lifts {

// M (x) J_2, the doubled diagram of a shape-2 normal subgroup.
BitMatrix lift2_matrix(const BitMatrix& m);

// (M + I) (x) J_3 - I, the tripled diagram of a shape-3 normal subgroup.
BitMatrix lift3_matrix(const BitMatrix& m);

// Diagonal blocks M, all-ones blocks elsewhere (the triality construction).
BitMatrix triple_matrix(const BitMatrix& m);

// Spectrum image of h iterations of the p-lift, with coincident eigenvalues
// merged.  Returns the lifted spectrum and the lifted size p^h * n.
std::pair<Spectrum, Int> lift_spectrum(const Spectrum& spec, const Int& n, int p, unsigned long h);

// Spectrum of M x 3 for a connected regular graph of degree k on n vertices:
// degree k + 2n, the value -(n-k) twice, restricted multiplicities tripled.
Spectrum triple_spectrum(const Spectrum& spec, const Int& n, const Int& k);

} // namespace trispec::lifts
