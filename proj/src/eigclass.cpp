#include "trispec/eigclass.hpp"

#include <algorithm>

#include "trispec/oracle.hpp"

namespace trispec::eigclass {

using catalog::CentralType;
using catalog::Family;
using catalog::make_type;

FourCase four_case_classify(const Int& rho) {
    if (rho >= 0) throw OutOfRangeError("four_case_classify: rho must be negative");
    FourCase out;
    if (rho == -1) out.moufang = true;
    Int v = -rho;
    long a = 0;
    Int t = v;
    while (t % 2 == 0) {
        t /= 2;
        ++a;
    }
    if (t == 1 && a >= 1) out.char2_exp = a;
    Int u = v - 1; // rho = -3^b - 1
    long b = 0;
    while (u > 1 && u % 3 == 0) {
        u /= 3;
        ++b;
    }
    if (u == 1 && b >= 1) out.char3_exp = b;
    if (rho == -352) out.sporadic352 = true;
    if (!out.moufang && !out.char2_exp && !out.char3_exp && !out.sporadic352)
        throw UnrealizableError("rho = " + int_str(rho) +
                                " is not -1, -2^a, -3^b-1 or -352: no diagram attains it");
    return out;
}

namespace {

// Closed-form minimal eigenvalue per family; matches catalog::min_eigenvalue
// but cheap enough to drive the enumeration bounds.
Int family_rho(Family f, long h, long m, int eps) {
    switch (f) {
    case Family::PR2a: return -int_pow(2, h + 1);
    case Family::PR2b: return -int_pow(3, h) - 1;
    case Family::PR2c: return -int_pow(3, h + 1) - 1;
    case Family::PR2d: return -int_pow(4, h + 1);
    case Family::PR3:
        return eps > 0 ? -int_pow(2, h + m - 2) : -int_pow(2, h + m - 1);
    case Family::PR4: return -int_pow(2, h + m - 1);
    case Family::PR5:
        if (m % 2 == 1) return -int_pow(3, h + (m - 3) / 2) - 1;
        return eps > 0 ? -int_pow(3, h + (m - 2) / 2) - 1
                       : -int_pow(3, h + (m - 4) / 2) - 1;
    case Family::PR6:
        return m % 2 == 0 ? -int_pow(2, 2 * h + m - 2) : -int_pow(2, 2 * h + m - 3);
    case Family::PR8: return -int_pow(4, h + 1);
    case Family::PR9:
    case Family::PR10: return -int_pow(3, h + 1) - 1;
    case Family::PR11:
    case Family::PR12: return -int_pow(3, 2 * h + 1) - 1;
    default: throw Error("family_rho: fixed-spectrum family");
    }
}

struct Cmp {
    bool operator()(const IndividualEntry& a, const IndividualEntry& b) const {
        if (a.rho != b.rho) return a.rho > b.rho;
        return a.ct < b.ct;
    }
};

} // namespace

EnumerationReport enumerate_min_eig(long t) {
    if (t < 1) throw OutOfRangeError("enumerate_min_eig: t >= 1 required");
    EnumerationReport rep;
    rep.t = t;
    rep.moufang_class = true;
    const Int bound = Int(-t);

    // Symmetric-quotient families: one entry per (family, h), ranging over m.
    auto add_family = [&](Family f, long h0) {
        for (long h = h0;; ++h) {
            Int rho = family_rho(f, h, 4, 0);
            if (rho < bound) break;
            rep.symmetric_families.push_back({make_type(f, h, 0), rho});
        }
    };
    add_family(Family::PR2a, 0);
    add_family(Family::PR2b, 1);
    add_family(Family::PR2c, 1);
    add_family(Family::PR2d, 1);

    auto add_individual = [&](CentralType ct, const Int& rho) {
        IndividualEntry e;
        e.ct = ct;
        e.rho = rho;
        if (ct.family == Family::PR5 && ct.h == 0 && ct.m == 5 && ct.eps == 1) {
            // Omega5+(3) = O6-(2): the same group under PR3(h=0,m=3,eps=-).
            e.counted = false;
            e.duplicate_of = make_type(Family::PR3, 0, 3, -1).str();
        }
        rep.individuals.push_back(std::move(e));
    };

    // PR3 / PR4: rho = -2^{h+m-c}.
    for (int eps : {+1, -1}) {
        for (long m = 3;; ++m) {
            if (m == 3 && eps > 0) continue; // O6+(2) = Sym(8), not a PR3 type
            if (family_rho(Family::PR3, 0, m, eps) < bound) break;
            for (long h = 0; family_rho(Family::PR3, h, m, eps) >= bound; ++h)
                add_individual(make_type(Family::PR3, h, m, eps),
                               family_rho(Family::PR3, h, m, eps));
        }
    }
    for (long m = 3; family_rho(Family::PR4, 0, m, 0) >= bound; ++m)
        for (long h = 0; family_rho(Family::PR4, h, m, 0) >= bound; ++h)
            add_individual(make_type(Family::PR4, h, m), family_rho(Family::PR4, h, m, 0));

    // PR5: both parities interleave, so scan m with a generous cutoff.
    for (int eps : {+1, -1}) {
        for (long m = 5;; ++m) {
            // The slowest-shrinking branch is even m, eps = -, with exponent
            // (m-4)/2; once even that branch passes -t nothing larger fits.
            if (m % 2 == 0 && family_rho(Family::PR5, 0, m, -1) < bound) break;
            if (family_rho(Family::PR5, 0, m, eps) < bound) continue;
            for (long h = 0; family_rho(Family::PR5, h, m, eps) >= bound; ++h)
                add_individual(make_type(Family::PR5, h, m, eps),
                               family_rho(Family::PR5, h, m, eps));
        }
    }

    // PR6: base rho is nonincreasing in m (the parity branches alternate but
    // never recover), so a plain scan terminates.  (h,m) = (0,3) is the
    // Moufang SU3(2)' and belongs to class (a), not the individuals.
    for (long m = 3; family_rho(Family::PR6, 0, m, 0) >= bound; ++m)
        for (long h = 0; family_rho(Family::PR6, h, m, 0) >= bound; ++h) {
            if (h == 0 && m == 3) continue;
            add_individual(make_type(Family::PR6, h, m), family_rho(Family::PR6, h, m, 0));
        }

    // Sporadic and triality entries.
    for (Family f : {Family::PR7a, Family::PR7b, Family::PR7c, Family::PR7d, Family::PR7e}) {
        Int rho = (f == Family::PR7a || f == Family::PR7d) ? Int(-64) : Int(-352);
        if (rho >= bound) add_individual(make_type(f), rho);
    }

    for (Family f : {Family::PR8, Family::PR9, Family::PR10, Family::PR11, Family::PR12})
        for (long h = 1; family_rho(f, h, 0, 0) >= bound; ++h)
            add_individual(make_type(f, h), family_rho(f, h, 0, 0));

    // Exotic nonsplit shapes: same diagrams as PR5/PR6 hosts, never counted.
    for (Family f : {Family::PR13, Family::PR14, Family::PR15, Family::PR16, Family::PR17,
                     Family::PR18, Family::PR19}) {
        CentralType ct = make_type(f);
        CentralType host = catalog::resolve_aliases(ct);
        Int rho = family_rho(host.family, host.h, host.m, host.eps);
        if (rho < bound) continue;
        IndividualEntry e;
        e.ct = ct;
        e.rho = rho;
        e.counted = false;
        e.alias_of = host.str();
        rep.individuals.push_back(std::move(e));
    }

    std::sort(rep.individuals.begin(), rep.individuals.end(), Cmp{});
    std::sort(rep.symmetric_families.begin(), rep.symmetric_families.end(),
              [](const FamilyEntry& a, const FamilyEntry& b) {
                  if (a.rho != b.rho) return a.rho > b.rho;
                  return a.ct < b.ct;
              });
    rep.S = (long)rep.symmetric_families.size();
    rep.I = (long)std::count_if(rep.individuals.begin(), rep.individuals.end(),
                                [](const IndividualEntry& e) { return e.counted; });
    return rep;
}

std::string family_label(const catalog::CentralType& ct) {
    return catalog::family_name(ct.family) + "(h=" + std::to_string(ct.h) + ")";
}

std::string gram_status_name(GramStatus s) {
    switch (s) {
    case GramStatus::positive_definite: return "positive_definite";
    case GramStatus::positive_semidefinite: return "positive_semidefinite";
    case GramStatus::indefinite: return "indefinite";
    }
    return "?";
}

GramReport gram_status(const catalog::CentralType& ct, const Rational& eta) {
    if (eta == Rational(0)) throw OutOfRangeError("gram_status: eta must be nonzero");
    Spectrum s = catalog::spectrum(ct);
    GramReport rep;
    rep.eta = eta;
    rep.rho = s.min_eigenvalue().numerator();
    Rational half = eta / Rational(2);
    bool zero = false, negative = false;
    Int radical = 0;
    for (const auto& e : s.entries()) {
        Rational v = Rational(1) + half * e.eig;
        if (v.sign() < 0) negative = true;
        if (v.sign() == 0) {
            zero = true;
            radical += e.mult;
        }
    }
    rep.status = negative ? GramStatus::indefinite
                          : (zero ? GramStatus::positive_semidefinite
                                  : GramStatus::positive_definite);
    rep.radical_dim = negative ? Int(0) : radical;
    return rep;
}

GramReport gram_matrix_check(const BitMatrix& m, const Rational& eta, std::size_t cap) {
    if (eta == Rational(0)) throw OutOfRangeError("gram_matrix_check: eta must be nonzero");
    const std::size_t n = m.size();
    if (n == 0 || n > cap) throw DimensionCapError("gram_matrix_check: size outside cap");

    // Scale I + (eta/2) A by 2q > 0: G = 2q I + p A, same inertia.
    Int p = eta.numerator();
    Int q = eta.denominator();
    std::vector<Int> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i * n + j] = (i == j) ? 2 * q : (m.test(i, j) ? p : Int(0));

    // Symmetric fraction-free elimination with diagonal pivoting.  Entries of
    // the working matrix are D_{k-1}-scaled Schur complements (Bareiss), so
    // the true k-th pivot sign is sgn(a_kk) * sgn(D_{k-1}).
    GramReport rep;
    rep.eta = eta;
    rep.status = GramStatus::positive_definite;
    rep.radical_dim = 0;
    Int prev = 1;
    int prev_sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = n;
        for (std::size_t i = k; i < n; ++i)
            if (a[i * n + i] != 0) {
                piv = i;
                break;
            }
        if (piv == n) {
            bool all_zero = true;
            for (std::size_t i = k; i < n && all_zero; ++i)
                for (std::size_t j = k; j < n && all_zero; ++j)
                    if (a[i * n + j] != 0) all_zero = false;
            if (all_zero) {
                rep.status = GramStatus::positive_semidefinite;
                rep.radical_dim = Int((long)(n - k));
            } else {
                // zero diagonal with a nonzero off-diagonal entry: indefinite
                rep.status = GramStatus::indefinite;
                rep.radical_dim = 0;
            }
            break;
        }
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[k * n + j]);
            for (std::size_t i = 0; i < n; ++i) std::swap(a[i * n + piv], a[i * n + k]);
        }
        int pivot_sign = sgn(a[k * n + k]) * prev_sign;
        if (pivot_sign < 0) {
            rep.status = GramStatus::indefinite;
            rep.radical_dim = 0;
            break;
        }
        const Int pivot = a[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                Int t = pivot * a[i * n + j] - a[i * n + k] * a[j * n + k];
                mpz_divexact(a[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                if (j != i) a[j * n + i] = a[i * n + j];
            }
        }
        prev = pivot;
        prev_sign = sgn(pivot);
    }

    rep.rho = oracle::exact_spectrum(m, cap).min_eigenvalue().numerator();
    return rep;
}

MatsuoReport matsuo_candidates(const Rational& eta, bool symplectic_filter) {
    if (eta == Rational(1) || eta.sign() <= 0)
        throw OutOfRangeError("matsuo_candidates: eta must be a positive rational != 1");
    MatsuoReport rep;
    rep.eta = eta;
    rep.symplectic_filter = symplectic_filter;

    // rho >= -2/eta for integer rho means rho >= -floor(2/eta).
    Rational two_over = Rational(2) / eta;
    Int t;
    mpz_fdiv_q(t.get_mpz_t(), two_over.numerator().get_mpz_t(),
               two_over.denominator().get_mpz_t());
    rep.min_rho = -t;
    if (t < 1) {
        rep.moufang = false;
        rep.moufang_display = "";
        rep.S = 0;
        rep.I = 0;
        return rep;
    }
    if (t > 1000000)
        throw OutOfRangeError("matsuo_candidates: eta too small, enumeration unbounded");
    EnumerationReport en = enumerate_min_eig((long)t.get_si());
    rep.moufang = true;
    rep.moufang_display = symplectic_filter ? "Sym(3)" : "3^u:2 (all Moufang types)";
    for (const auto& f : en.symmetric_families)
        if (!symplectic_filter || catalog::symplectic_type(f.ct))
            rep.families.push_back(f);
    for (const auto& e : en.individuals)
        if (!symplectic_filter || catalog::symplectic_type(e.ct))
            rep.individuals.push_back(e);
    rep.S = (long)rep.families.size();
    rep.I = (long)std::count_if(rep.individuals.begin(), rep.individuals.end(),
                                [](const IndividualEntry& e) { return e.counted; });
    return rep;
}

} // namespace trispec::eigclass
