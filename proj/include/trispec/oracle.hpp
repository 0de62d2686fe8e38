#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "trispec/bitmatrix.hpp"
#include "trispec/central_type.hpp"
#include "trispec/spectrum.hpp"
#include "trispec/srg.hpp"

namespace trispec::oracle {

inline constexpr std::size_t kDefaultCap = 2500;

enum class Field { GF2, GF3, GF4 };
enum class FormKind { symplectic, quadratic, hermitian, symmetric_bilinear };

// A standard nondegenerate form over GF(2)/GF(3)/GF(4); eps picks the Witt
// type where the kind has one.
struct FormSpec {
    Field field;
    int dim;
    FormKind kind;
    int eps = 0;
};

FormSpec symplectic_form(int dim2m);
FormSpec quadratic_form(int dim2m, int eps);
FormSpec hermitian_form(int dim);
FormSpec gf3_form(int dim, int eps);

// Brute-force count of singular (isotropic) 1-spaces.
Int count_singular_points(const FormSpec& form);
// The closed form the count must reproduce.
Int singular_points_closed_form(const FormSpec& form);

// Diagram builders: vertices in deterministic (lexicographic representative)
// order, edge where the corresponding transpositions do not commute.
BitMatrix build_symmetric(int m);               // 2-subsets of {1..m}
BitMatrix build_symplectic2(int m);             // nonzero vectors of GF(2)^{2m}
BitMatrix build_orthogonal2(int m, int eps);    // nonsingular points, GF(2)^{2m}
BitMatrix build_unitary4(int m);                // isotropic points, GF(4)^m
BitMatrix build_orthogonal3(int m, int eps);    // +points, GF(3)^m

// Complete exact integer spectrum.  Throws NonIntegralSpectrumError when the
// multiplicities of the integer eigenvalues do not sum to n.
Spectrum exact_spectrum(const BitMatrix& m, std::size_t cap = kDefaultCap);

// Checks M^2 = kI + lambda M + mu(J - I - M) exactly and completes the
// parameters through the srg module.
srg::ExtendedParams verify_srg(const BitMatrix& m);

// Explicit diagram for a catalog entry, built from the base construction plus
// matrix lifts.  Throws NoOracleError for the Fischer groups and
// DimensionCapError above the cap.
BitMatrix oracle_matrix(const catalog::CentralType& ct, std::size_t cap = kDefaultCap);
bool has_oracle(const catalog::CentralType& ct);

// Plain-text edge list with a "p edge n m" header; byte-stable.
void export_graph(const BitMatrix& m, std::ostream& os);

} // namespace trispec::oracle
