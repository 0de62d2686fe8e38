#include "trispec/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>

#include "trispec/catalog.hpp"
#include "trispec/lifts.hpp"

namespace trispec::oracle {

namespace {

// --------------------------------------------------------------------------
// Finite field scaffolding.  GF(4) = {0, 1, w, w^2} encoded 0..3, addition is
// xor, conj(a) = a^2.

inline int gf4_mul(int a, int b) {
    static const int tab[4][4] = {
        {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    return tab[a][b];
}
inline int gf4_conj(int a) { return gf4_mul(a, a); }

using Vec = std::vector<int>; // coordinates over the field

// Enumerate all vectors of GF(q)^dim in lexicographic order (first coordinate
// most significant).
template <typename F>
void for_each_vector(int q, int dim, F&& fn) {
    Vec v(dim, 0);
    while (true) {
        fn(v);
        int i = dim - 1;
        while (i >= 0 && v[i] == q - 1) v[i--] = 0;
        if (i < 0) return;
        ++v[i];
    }
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](int c) { return c == 0; });
}

// Lexicographically least representative of <v>: first nonzero coordinate 1.
bool is_projective_rep(const Vec& v) {
    for (int c : v) {
        if (c == 0) continue;
        return c == 1;
    }
    return false;
}

int gf2_symplectic(const Vec& x, const Vec& y) {
    int s = 0;
    for (std::size_t i = 0; i + 1 < x.size(); i += 2)
        s ^= (x[i] & y[i + 1]) ^ (x[i + 1] & y[i]);
    return s;
}

int gf2_quadratic(const Vec& x, int eps) {
    int s = 0;
    for (std::size_t i = 0; i + 1 < x.size(); i += 2) s ^= x[i] & x[i + 1];
    if (eps < 0) s ^= x[0] ^ x[1]; // x1^2 + x2^2 makes the first 2-space asingular
    return s;
}

int gf4_hermitian(const Vec& x, const Vec& y) {
    int s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s ^= gf4_mul(x[i], gf4_conj(y[i]));
    return s;
}

int gf3_bilinear(const Vec& x, const Vec& y, const Vec& coef) {
    int s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s = (s + coef[i] * x[i] * y[i]) % 3;
    return s;
}

Int gf3_singular_points(int dim, const Vec& coef) {
    Int vectors = 0;
    for_each_vector(3, dim, [&](const Vec& v) {
        if (!is_zero(v) && gf3_bilinear(v, v, coef) == 0) ++vectors;
    });
    return vectors / 2;
}

Int gf3_plus_points(int dim, const Vec& coef) {
    Int count = 0;
    for_each_vector(3, dim, [&](const Vec& v) {
        if (is_projective_rep(v) && gf3_bilinear(v, v, coef) == 1) ++count;
    });
    return count;
}

// Diagonal coefficients of the GF(3) form of requested Witt sign.  The sign
// is read off the space empirically: singular-point count for even dim (the
// counts differ), +point count for odd dim (singular counts coincide there).
Vec gf3_form_coefficients(int dim, int eps) {
    for (int variant = 0; variant < 2; ++variant) {
        Vec coef(dim, 1);
        if (variant == 1) coef[dim - 1] = 2;
        int found;
        if (dim % 2 == 0) {
            Int s = gf3_singular_points(dim, coef);
            Int base = (int_pow(3, dim - 1) - 1) / 2;
            if (s == base)
                continue; // cannot happen for even dim, but keep the guard
            found = (s > base) ? +1 : -1;
            if ((s - base) != Int(found) * int_pow(3, (dim - 2) / 2))
                throw Error("GF(3) singular count matches neither Witt type");
        } else {
            Int np = gf3_plus_points(dim, coef);
            Int half = int_pow(3, (dim - 1) / 2);
            // n = (3^{m-1} - eps 3^{(m-1)/2})/2
            if (np == (int_pow(3, dim - 1) - half) / 2)
                found = +1;
            else if (np == (int_pow(3, dim - 1) + half) / 2)
                found = -1;
            else
                throw Error("GF(3) +point count matches neither Witt type");
        }
        if (found == eps) return coef;
    }
    throw Error("no GF(3) form of the requested sign");
}

} // namespace

FormSpec symplectic_form(int dim2m) {
    if (dim2m < 2 || dim2m % 2) throw OutOfRangeError("symplectic form needs even dim >= 2");
    return {Field::GF2, dim2m, FormKind::symplectic, 0};
}
FormSpec quadratic_form(int dim2m, int eps) {
    if (dim2m < 2 || dim2m % 2) throw OutOfRangeError("quadratic form needs even dim >= 2");
    if (eps != 1 && eps != -1) throw OutOfRangeError("quadratic form needs eps = +/-");
    return {Field::GF2, dim2m, FormKind::quadratic, eps};
}
FormSpec hermitian_form(int dim) {
    if (dim < 1) throw OutOfRangeError("hermitian form needs dim >= 1");
    return {Field::GF4, dim, FormKind::hermitian, 0};
}
FormSpec gf3_form(int dim, int eps) {
    if (dim < 1) throw OutOfRangeError("GF(3) form needs dim >= 1");
    if (eps != 1 && eps != -1) throw OutOfRangeError("GF(3) form needs eps = +/-");
    return {Field::GF3, dim, FormKind::symmetric_bilinear, eps};
}

Int count_singular_points(const FormSpec& form) {
    switch (form.kind) {
    case FormKind::symplectic: {
        Int count = 0;
        for_each_vector(2, form.dim, [&](const Vec& v) {
            if (!is_zero(v) && gf2_symplectic(v, v) == 0) ++count;
        });
        return count;
    }
    case FormKind::quadratic: {
        Int count = 0;
        for_each_vector(2, form.dim, [&](const Vec& v) {
            if (!is_zero(v) && gf2_quadratic(v, form.eps) == 0) ++count;
        });
        return count;
    }
    case FormKind::hermitian: {
        Int count = 0;
        for_each_vector(4, form.dim, [&](const Vec& v) {
            if (is_projective_rep(v) && gf4_hermitian(v, v) == 0) ++count;
        });
        return count;
    }
    case FormKind::symmetric_bilinear: {
        Vec coef = gf3_form_coefficients(form.dim, form.eps);
        return gf3_singular_points(form.dim, coef);
    }
    }
    throw Error("unreachable");
}

Int singular_points_closed_form(const FormSpec& form) {
    int m;
    switch (form.kind) {
    case FormKind::symplectic:
        return int_pow(2, form.dim) - 1;
    case FormKind::quadratic:
        m = form.dim / 2;
        return int_pow(2, 2 * m - 1) + Int(form.eps) * int_pow(2, m - 1) - 1;
    case FormKind::hermitian: {
        m = form.dim;
        Int alt = int_pow(2, m - 1);
        if ((m - 1) % 2) alt = -alt;
        return (int_pow(2, 2 * m - 1) - 1 - alt) / 3;
    }
    case FormKind::symmetric_bilinear: {
        m = form.dim;
        Int base = (int_pow(3, m - 1) - 1) / 2;
        if (m % 2 == 0) base += Int(form.eps) * int_pow(3, (m - 2) / 2);
        return base;
    }
    }
    throw Error("unreachable");
}

// --------------------------------------------------------------------------
// Builders

BitMatrix build_symmetric(int m) {
    if (m < 2) throw OutOfRangeError("build_symmetric: m >= 2");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
    BitMatrix out(pairs.size());
    for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = a + 1; b < pairs.size(); ++b) {
            auto [i, j] = pairs[a];
            auto [k, l] = pairs[b];
            int shared = (i == k) + (i == l) + (j == k) + (j == l);
            if (shared == 1) out.set_edge(a, b);
        }
    return out;
}

namespace {

BitMatrix graph_from_points(const std::vector<Vec>& pts,
                            const std::function<bool(const Vec&, const Vec&)>& adjacent) {
    BitMatrix out(pts.size());
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b)
            if (adjacent(pts[a], pts[b])) out.set_edge(a, b);
    return out;
}

} // namespace

BitMatrix build_symplectic2(int m) {
    if (m < 1) throw OutOfRangeError("build_symplectic2: m >= 1");
    std::vector<Vec> pts;
    for_each_vector(2, 2 * m, [&](const Vec& v) {
        if (!is_zero(v)) pts.push_back(v);
    });
    return graph_from_points(pts, [](const Vec& x, const Vec& y) {
        return gf2_symplectic(x, y) == 1;
    });
}

BitMatrix build_orthogonal2(int m, int eps) {
    if (m < 2) throw OutOfRangeError("build_orthogonal2: m >= 2");
    if (eps != 1 && eps != -1) throw OutOfRangeError("build_orthogonal2: eps = +/-");
    Int singular = count_singular_points(quadratic_form(2 * m, eps));
    if (singular != singular_points_closed_form(quadratic_form(2 * m, eps)))
        throw Error("build_orthogonal2: Witt type verification failed");
    std::vector<Vec> pts;
    for_each_vector(2, 2 * m, [&](const Vec& v) {
        if (!is_zero(v) && gf2_quadratic(v, eps) == 1) pts.push_back(v);
    });
    return graph_from_points(pts, [](const Vec& x, const Vec& y) {
        return gf2_symplectic(x, y) == 1;
    });
}

BitMatrix build_unitary4(int m) {
    if (m < 3) throw OutOfRangeError("build_unitary4: m >= 3");
    std::vector<Vec> pts;
    for_each_vector(4, m, [&](const Vec& v) {
        if (is_projective_rep(v) && gf4_hermitian(v, v) == 0) pts.push_back(v);
    });
    return graph_from_points(pts, [](const Vec& x, const Vec& y) {
        return gf4_hermitian(x, y) != 0;
    });
}

BitMatrix build_orthogonal3(int m, int eps) {
    if (m < 3) throw OutOfRangeError("build_orthogonal3: m >= 3");
    if (eps != 1 && eps != -1) throw OutOfRangeError("build_orthogonal3: eps = +/-");
    Vec coef = gf3_form_coefficients(m, eps);
    std::vector<Vec> pts;
    for_each_vector(3, m, [&](const Vec& v) {
        if (is_projective_rep(v) && gf3_bilinear(v, v, coef) == 1) pts.push_back(v);
    });
    return graph_from_points(pts, [&coef](const Vec& x, const Vec& y) {
        return gf3_bilinear(x, y, coef) != 0;
    });
}

// --------------------------------------------------------------------------
// Exact spectrum

namespace {

std::vector<Int> matvec(const BitMatrix& m, const std::vector<Int>& v) {
    std::size_t n = m.size();
    std::vector<Int> out(n, Int(0));
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t* r = m.row(i);
        Int acc = 0;
        for (std::size_t w = 0; w < m.words_per_row(); ++w) {
            std::uint64_t bits = r[w];
            while (bits) {
                std::size_t j = (w << 6) + std::size_t(__builtin_ctzll(bits));
                bits &= bits - 1;
                acc += v[j];
            }
        }
        out[i] = acc;
    }
    return out;
}

// Local minimal polynomial of M at v: the monic integer polynomial of least
// degree with p(M)v = 0, found by exact elimination on the Krylov sequence.
std::vector<Int> krylov_min_poly(const BitMatrix& m, std::vector<Int> v, std::size_t max_deg) {
    std::size_t n = m.size();
    // Echelon basis rows over Q with coefficient tracking.
    struct Row {
        std::vector<Rational> vec;   // length n
        std::vector<Rational> coef;  // combination of Krylov vectors
        std::size_t pivot;
    };
    std::vector<Row> basis;
    std::vector<Int> w = std::move(v);
    for (std::size_t step = 0; step <= max_deg; ++step) {
        std::vector<Rational> cur(n);
        for (std::size_t i = 0; i < n; ++i) cur[i] = Rational(w[i]);
        std::vector<Rational> coef(step + 1);
        coef[step] = Rational(1);
        for (const Row& row : basis) {
            Rational factor = cur[row.pivot];
            if (factor == Rational(0)) continue;
            Rational scale = factor / row.vec[row.pivot];
            for (std::size_t i = 0; i < n; ++i)
                if (row.vec[i] != Rational(0)) cur[i] -= scale * row.vec[i];
            for (std::size_t i = 0; i < row.coef.size() && i < coef.size(); ++i)
                coef[i] -= scale * row.coef[i];
        }
        std::size_t pivot = n;
        for (std::size_t i = 0; i < n; ++i)
            if (cur[i] != Rational(0)) {
                pivot = i;
                break;
            }
        if (pivot == n) {
            // Dependence found; coef gives the monic polynomial (integer by
            // Gauss's lemma since it divides the characteristic polynomial).
            std::vector<Int> poly(step + 1);
            for (std::size_t i = 0; i <= step; ++i) {
                if (!coef[i].is_integer())
                    throw Error("krylov: non-integer minimal polynomial coefficient");
                poly[i] = coef[i].numerator();
            }
            return poly;
        }
        basis.push_back({std::move(cur), std::move(coef), pivot});
        w = matvec(m, w);
    }
    return {}; // no dependence within max_deg
}

std::vector<Int> integer_roots(const std::vector<Int>& poly, const Int& bound) {
    std::vector<Int> roots;
    if (poly.empty()) return roots;
    for (Int r = -bound; r <= bound; ++r) {
        Int acc = 0;
        for (std::size_t i = poly.size(); i-- > 0;) acc = acc * r + poly[i];
        if (acc == 0) roots.push_back(r);
    }
    return roots;
}

// Rank of (M - rI) by fraction-free integer elimination (Bareiss).
std::size_t bareiss_rank(const BitMatrix& m, const Int& r) {
    std::size_t n = m.size();
    std::vector<Int> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i * n + j] = (i == j) ? -r : Int(int(m.test(i, j)));
    Int prev = 1;
    std::size_t rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t piv = row;
        while (piv < n && a[piv * n + col] == 0) ++piv;
        if (piv == n) continue;
        if (piv != row)
            for (std::size_t j = col; j < n; ++j) std::swap(a[piv * n + j], a[row * n + j]);
        const Int pivot = a[row * n + col];
        for (std::size_t i = row + 1; i < n; ++i) {
            const Int head = a[i * n + col];
            for (std::size_t j = col + 1; j < n; ++j) {
                Int t = pivot * a[i * n + j] - head * a[row * n + j];
                mpz_divexact(a[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i * n + col] = 0;
        }
        prev = pivot;
        ++rank;
        ++row;
    }
    return rank;
}

// Rank of (M - rI) modulo a 16-bit prime.  Entries are kept as lazily reduced
// uint64 accumulators; each pivot update adds < 2^32, so n <= 2^31 rows of
// updates never overflow.
std::size_t modp_rank(const BitMatrix& m, const Int& r, std::uint64_t p) {
    std::size_t n = m.size();
    Int d = (-r) % Int((long)p);
    if (d < 0) d += Int((long)p);
    const std::uint64_t diag = d.get_ui();
    std::vector<std::uint64_t> a(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t* bits = m.row(i);
        std::uint64_t* out = a.data() + i * n;
        for (std::size_t j = 0; j < n; ++j) out[j] = (bits[j >> 6] >> (j & 63)) & 1u;
        out[i] = diag;
    }
    auto inv_mod = [&](std::uint64_t x) {
        std::uint64_t res = 1, base = x % p, e = p - 2;
        while (e) {
            if (e & 1) res = res * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return res;
    };
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t piv = n;
        for (std::size_t i = rank; i < n; ++i) {
            a[i * n + col] %= p;
            if (a[i * n + col]) {
                piv = i;
                break;
            }
        }
        if (piv == n) continue;
        if (piv != rank)
            for (std::size_t j = col; j < n; ++j) std::swap(a[piv * n + j], a[rank * n + j]);
        std::uint64_t* prow = a.data() + rank * n;
        std::uint64_t inv = inv_mod(prow[col]);
        for (std::size_t j = col; j < n; ++j) prow[j] = prow[j] % p * inv % p;
        for (std::size_t i = rank + 1; i < n; ++i) {
            std::uint64_t* irow = a.data() + i * n;
            std::uint64_t f = irow[col] % p;
            if (!f) continue;
            std::uint64_t c = p - f;
            for (std::size_t j = col; j < n; ++j) irow[j] += c * prow[j];
        }
        ++rank;
    }
    return rank;
}

struct Moments {
    Int edges2;    // tr M^2 = 2|E|
    Int triangles; // tr M^3 = 6 * #triangles
};

Moments graph_moments(const BitMatrix& m) {
    Moments mo{Int(0), Int(0)};
    std::size_t n = m.size();
    unsigned long long pair_walks = 0; // sum over adjacent pairs of common neighbors = 3T
    for (std::size_t i = 0; i < n; ++i) {
        mo.edges2 += (long)m.row_degree(i);
        const std::uint64_t* r = m.row(i);
        for (std::size_t w = 0; w < m.words_per_row(); ++w) {
            std::uint64_t bits = r[w];
            while (bits) {
                std::size_t j = (w << 6) + std::size_t(__builtin_ctzll(bits));
                bits &= bits - 1;
                if (j > i) pair_walks += m.common_neighbors(i, j);
            }
        }
    }
    mo.triangles = Int(2) * Int((unsigned long)pair_walks); // tr M^3 = 6T = 2 * (3T)
    return mo;
}

constexpr std::size_t kBareissLimit = 128;
const std::uint64_t kPrimes[] = {65521, 65519, 65497};

} // namespace

Spectrum exact_spectrum(const BitMatrix& m, std::size_t cap) {
    std::size_t n = m.size();
    if (n == 0) throw MatrixShapeError("exact_spectrum: empty matrix");
    if (n > cap)
        throw DimensionCapError("exact_spectrum: n = " + std::to_string(n) +
                                " exceeds cap " + std::to_string(cap));
    if (n == 1) return normalize({{Rational(0), 1}}, 1, 0);

    std::size_t kmax = 0;
    for (std::size_t i = 0; i < n; ++i) kmax = std::max(kmax, m.row_degree(i));
    auto regular = m.regular_degree();
    bool connected = m.is_connected();

    const std::size_t max_deg = std::min<std::size_t>(n, 64);
    auto roots_of_vector = [&](std::vector<Int> v) {
        std::vector<Int> poly = krylov_min_poly(m, std::move(v), max_deg);
        return integer_roots(poly, Int((long)kmax));
    };

    std::vector<Int> roots;
    auto add_roots = [&](const std::vector<Int>& more) {
        for (const Int& r : more)
            if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    };

    std::vector<std::vector<Int>> starts;
    starts.emplace_back(n, Int(1)); // all-ones: catches the degree
    {
        std::vector<Int> e0(n, Int(0));
        e0[0] = 1;
        starts.push_back(std::move(e0));
        std::vector<Int> ramp(n);
        for (std::size_t i = 0; i < n; ++i) ramp[i] = Int((long)(i + 1));
        starts.push_back(std::move(ramp));
        std::vector<Int> rnd(n);
        std::uint64_t state = 0x9e3779b97f4a7c15ULL;
        for (std::size_t i = 0; i < n; ++i) {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            rnd[i] = Int((long)(state % 7) - 3);
        }
        starts.push_back(std::move(rnd));
    }
    for (auto& v : starts) add_roots(roots_of_vector(v));
    std::sort(roots.begin(), roots.end(), [](const Int& a, const Int& b) { return a > b; });

    Moments mo = graph_moments(m);

    auto try_mults = [&](std::size_t prime_idx, std::vector<Int>& mults) {
        mults.assign(roots.size(), Int(0));
        Int total = 0;
        for (std::size_t i = 0; i < roots.size(); ++i) {
            if (connected && regular && roots[i] == Int((long)*regular)) {
                mults[i] = 1; // Perron eigenvalue of a connected regular graph
            } else {
                std::size_t rank = (n <= kBareissLimit)
                                       ? bareiss_rank(m, roots[i])
                                       : modp_rank(m, roots[i], kPrimes[prime_idx]);
                mults[i] = Int((long)(n - rank));
            }
            total += mults[i];
        }
        if (total != Int((long)n)) return total < Int((long)n) ? -1 : +1;
        // Moment certificate: the mod-p ranks can only overstate multiplicity,
        // so matching n plus the first three power sums pins them exactly.
        Int s1 = 0, s2 = 0, s3 = 0;
        for (std::size_t i = 0; i < roots.size(); ++i) {
            s1 += mults[i] * roots[i];
            s2 += mults[i] * roots[i] * roots[i];
            s3 += mults[i] * roots[i] * roots[i] * roots[i];
        }
        if (s1 != 0 || s2 != mo.edges2 || s3 != mo.triangles) return +1;
        return 0;
    };

    std::vector<Int> mults;
    int verdict = try_mults(0, mults);
    for (std::size_t pi = 1; verdict > 0 && pi < 3; ++pi) verdict = try_mults(pi, mults);

    if (verdict < 0 && n <= 200) {
        // Exhaustive completeness sweep: extend the root set from every basis
        // vector whose Krylov polynomial brings new integer roots.
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<Int> e(n, Int(0));
                e[i] = 1;
                std::size_t before = roots.size();
                add_roots(roots_of_vector(std::move(e)));
                if (roots.size() > before) grew = true;
            }
        }
        std::sort(roots.begin(), roots.end(), [](const Int& a, const Int& b) { return a > b; });
        verdict = try_mults(0, mults);
        for (std::size_t pi = 1; verdict > 0 && pi < 3; ++pi) verdict = try_mults(pi, mults);
    }
    if (verdict != 0)
        throw NonIntegralSpectrumError(
            "integer eigenvalue multiplicities sum to less than n; spectrum not integral");

    std::vector<std::pair<Rational, Int>> raw;
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (mults[i] > 0) raw.emplace_back(Rational(roots[i]), mults[i]);
    Rational degree = regular ? Rational((long)*regular) : raw.front().first;
    return normalize(std::move(raw), Int((long)n), degree);
}

srg::ExtendedParams verify_srg(const BitMatrix& m) {
    std::size_t n = m.size();
    if (n == 0) throw NotRegularError("empty graph");
    auto k = m.regular_degree();
    if (!k) throw NotRegularError("graph is not regular");
    if (*k == 0 || *k == n - 1)
        throw NotStronglyRegularError("complete or empty graph excluded (0 < k < n-1)");
    long lambda = -1, mu = -1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            long c = (long)m.common_neighbors(i, j);
            long& slot = m.test(i, j) ? lambda : mu;
            if (slot == -1) slot = c;
            if (slot != c)
                throw NotStronglyRegularError("common-neighbor counts not constant");
        }
    return srg::make_params(Int((long)n), Int((long)*k), Int(lambda), Int(mu));
}

bool has_oracle(const catalog::CentralType& ct) {
    using catalog::Family;
    switch (ct.family) {
    case Family::PR7a:
    case Family::PR7b:
    case Family::PR7c: return false;
    default: return true;
    }
}

BitMatrix oracle_matrix(const catalog::CentralType& ct, std::size_t cap) {
    using catalog::Family;
    catalog::validate(ct);
    if (!has_oracle(ct)) throw NoOracleError("no oracle for " + ct.str());
    Int sz = catalog::size(ct);
    if (sz > Int((unsigned long)cap))
        throw DimensionCapError(ct.str() + " has " + int_str(sz) +
                                " vertices, above the cap " + std::to_string(cap));
    auto lift2h = [](BitMatrix b, long h) {
        for (long i = 0; i < h; ++i) b = lifts::lift2_matrix(b);
        return b;
    };
    auto lift3h = [](BitMatrix b, long h) {
        for (long i = 0; i < h; ++i) b = lifts::lift3_matrix(b);
        return b;
    };
    const long h = ct.h;
    const long m = ct.m;
    const int eps = ct.eps;
    switch (ct.family) {
    case Family::PR1: return lift3h(BitMatrix(1), h);
    case Family::PR2a: return lift2h(build_symmetric((int)m), h);
    case Family::PR2b: return lift3h(build_symmetric((int)m), h);
    case Family::PR2c: return lift3h(lift2h(build_symmetric((int)m), 1), h);
    case Family::PR2d: return lift2h(lift3h(build_symmetric((int)m), 1), 2 * h);
    case Family::PR3: return lift2h(build_orthogonal2((int)m, eps), h);
    case Family::PR4: return lift2h(build_symplectic2((int)m), h);
    case Family::PR5: return lift3h(build_orthogonal3((int)m, eps), h);
    case Family::PR6: return lift2h(build_unitary4((int)m), 2 * h);
    case Family::PR7d: return lifts::triple_matrix(build_orthogonal2(4, +1));
    case Family::PR7e: return lifts::triple_matrix(build_orthogonal3(8, +1));
    case Family::PR8: return lift2h(build_orthogonal3(6, -1), 2 * h);
    case Family::PR9: return lift3h(build_symplectic2(3), h);
    case Family::PR10: return lift3h(build_orthogonal2(4, +1), h);
    case Family::PR11: return lift3h(build_unitary4(5), 2 * h);
    case Family::PR12: return lift3h(lift2h(build_unitary4(3), 2), 2 * h);
    default: return oracle_matrix(catalog::resolve_aliases(ct), cap);
    }
}

void export_graph(const BitMatrix& m, std::ostream& os) {
    os << "p edge " << m.size() << " " << m.edge_count() << "\n";
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (m.test(i, j)) os << "e " << (i + 1) << " " << (j + 1) << "\n";
}

} // namespace trispec::oracle
