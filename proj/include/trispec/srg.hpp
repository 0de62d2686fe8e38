#pragma once

#include "trispec/spectrum.hpp"

namespace trispec::srg {

// Extended parameter list (n, k, lambda, mu; [r]^f, [s]^g) of a strongly
// regular graph together with the complement-side values.
struct ExtendedParams {
    Int n, k, lambda, mu;
    Int l, lambda_c, mu_c; // complement side
    Int r, s;              // restricted eigenvalues, s <= 0 <= r
    Int f, g;              // multiplicities of r and s
    bool imprimitive = false;

    Spectrum spectrum() const;
    friend bool operator==(const ExtendedParams& a, const ExtendedParams& b) {
        return a.n == b.n && a.k == b.k && a.lambda == b.lambda && a.mu == b.mu;
    }
};

struct EigenData {
    Int r, s, f, g;
};

// Restricted eigenvalues and multiplicities from (n,k,lambda,mu).
// Throws HalfCaseError when the discriminant is not a perfect square,
// InfeasibleParamsError when the basic identities fail.
EigenData eigen_from_params(const Int& n, const Int& k, const Int& lambda, const Int& mu);

// Full extended parameters, with every identity validated eagerly.
ExtendedParams make_params(const Int& n, const Int& k, const Int& lambda, const Int& mu);

// Inversion from a two-eigenvalue spectrum via mu = k + rs, lambda = mu + r + s.
ExtendedParams params_from_spectrum(const Spectrum& spec, const Int& n);

ExtendedParams complement_params(const ExtendedParams& p);

Spectrum complement_spectrum(const Spectrum& spec, const Int& n);

// n = 1 + k' + k'(k'-1-lambda')/mu' from local (codiagram) parameters.
Int size_from_local(const Int& kp, const Int& lambdap, const Int& mup);

} // namespace trispec::srg
