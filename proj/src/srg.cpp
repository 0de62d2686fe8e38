#include "trispec/srg.hpp"

namespace trispec::srg {

namespace {

// Exact integer square root when v is a perfect square.
bool perfect_sqrt(const Int& v, Int& root) {
    if (v < 0) return false;
    mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
    return root * root == v;
}

} // namespace

EigenData eigen_from_params(const Int& n, const Int& k, const Int& lambda, const Int& mu) {
    if (!(0 < k && k < n - 1))
        throw InfeasibleParamsError("need 0 < k < n-1");
    if (mu > k || lambda > k - 1 || lambda < 0 || mu < 0)
        throw InfeasibleParamsError("need n > k >= mu and k-1 >= lambda");
    if (mu * (n - k - 1) != k * (k - 1 - lambda))
        throw InfeasibleParamsError("mu*l != k(k-1-lambda)");

    // Roots of x^2 + (mu-lambda)x + (mu-k).
    Int disc = (mu - lambda) * (mu - lambda) + 4 * (k - mu);
    Int d;
    if (!perfect_sqrt(disc, d))
        throw HalfCaseError("irrational restricted eigenvalues (half case)");
    Int r = (lambda - mu + d) / 2;
    Int s = (lambda - mu - d) / 2;
    if ((lambda - mu + d) % 2 != 0)
        throw HalfCaseError("non-integral restricted eigenvalues");
    if (!(s <= 0 && 0 <= r && r <= k && s < r))
        throw InfeasibleParamsError("eigenvalues outside s <= 0 <= r <= k");

    // f = (r-s)^{-1}(-sn+s-k), g = (r-s)^{-1}(rn-r+k).
    Int fn = -s * n + s - k;
    Int gn = r * n - r + k;
    if (fn % (r - s) != 0 || gn % (r - s) != 0)
        throw InfeasibleParamsError("non-integral multiplicities");
    Int f = fn / (r - s);
    Int g = gn / (r - s);
    if (f < 0 || g < 0 || 1 + f + g != n || k + f * r + g * s != 0)
        throw InfeasibleParamsError("multiplicity identities fail");
    return {r, s, f, g};
}

ExtendedParams make_params(const Int& n, const Int& k, const Int& lambda, const Int& mu) {
    EigenData e = eigen_from_params(n, k, lambda, mu);
    ExtendedParams p;
    p.n = n;
    p.k = k;
    p.lambda = lambda;
    p.mu = mu;
    p.l = n - k - 1;
    p.lambda_c = n - 2 * k + mu - 2;
    p.mu_c = n - 2 * k + lambda;
    p.r = e.r;
    p.s = e.s;
    p.f = e.f;
    p.g = e.g;
    p.imprimitive = (mu == 0 || mu == k);
    if (p.lambda_c < 0 || p.mu_c < 0)
        throw InfeasibleParamsError("complement parameters negative");
    return p;
}

Spectrum ExtendedParams::spectrum() const {
    std::vector<std::pair<Rational, Int>> raw = {
        {Rational(k), 1}, {Rational(r), f}, {Rational(s), g}};
    return normalize(std::move(raw), n, Rational(k));
}

ExtendedParams params_from_spectrum(const Spectrum& spec, const Int& n) {
    if (spec.total_multiplicity() != n)
        throw InfeasibleParamsError("spectrum total != n");
    auto restricted = spec.restricted_entries();
    if (restricted.size() != 2)
        throw NotTwoEigenvalueError("expected exactly two restricted eigenvalues, got " +
                                    std::to_string(restricted.size()));
    for (const auto& e : restricted)
        if (!e.eig.is_integer())
            throw NotTwoEigenvalueError("restricted eigenvalues not integral");
    if (!spec.degree().is_integer())
        throw InfeasibleParamsError("degree not integral");
    Int k = spec.degree().numerator();
    Int r = restricted[0].eig.numerator();
    Int s = restricted[1].eig.numerator();
    Int mu = k + r * s;
    Int lambda = mu + r + s;
    ExtendedParams p = make_params(n, k, lambda, mu);
    if (p.f != restricted[0].mult || p.g != restricted[1].mult)
        throw InfeasibleParamsError("multiplicities disagree with spectrum");
    return p;
}

ExtendedParams complement_params(const ExtendedParams& p) {
    return make_params(p.n, p.l, p.lambda_c, p.mu_c);
}

Spectrum complement_spectrum(const Spectrum& spec, const Int& n) {
    if (spec.total_multiplicity() != n)
        throw ChecksumError("complement_spectrum: total != n");
    Rational l = Rational(n - 1) - spec.degree();
    std::vector<std::pair<Rational, Int>> raw = {{l, 1}};
    for (const auto& e : spec.restricted_entries())
        raw.emplace_back(Rational(-1) - e.eig, e.mult);
    return normalize(std::move(raw), n, l);
}

Int size_from_local(const Int& kp, const Int& lambdap, const Int& mup) {
    if (mup <= 0) throw NonIntegralError("mu' must be positive");
    Int num = kp * (kp - 1 - lambdap);
    if (num % mup != 0)
        throw NonIntegralError("mu' does not divide k'(k'-1-lambda')");
    return 1 + kp + num / mup;
}

} // namespace trispec::srg
