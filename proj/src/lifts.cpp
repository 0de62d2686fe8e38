#include "trispec/lifts.hpp"

namespace trispec::lifts {

BitMatrix lift2_matrix(const BitMatrix& m) {
    std::size_t n = m.size();
    BitMatrix out(2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (m.test(i, j))
                for (std::size_t a = 0; a < 2; ++a)
                    for (std::size_t b = 0; b < 2; ++b)
                        if (a * n + i < b * n + j) out.set_edge(a * n + i, b * n + j);
    return out;
}

BitMatrix lift3_matrix(const BitMatrix& m) {
    std::size_t n = m.size();
    BitMatrix out(3 * n);
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = a; b < 3; ++b)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    std::size_t u = a * n + i, v = b * n + j;
                    if (u >= v) continue;
                    bool edge = (a == b) ? m.test(i, j) : (i == j || m.test(i, j));
                    if (edge) out.set_edge(u, v);
                }
    return out;
}

BitMatrix triple_matrix(const BitMatrix& m) {
    std::size_t n = m.size();
    BitMatrix out(3 * n);
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = a; b < 3; ++b)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    std::size_t u = a * n + i, v = b * n + j;
                    if (u >= v) continue;
                    bool edge = (a == b) ? m.test(i, j) : true;
                    if (edge) out.set_edge(u, v);
                }
    return out;
}

std::pair<Spectrum, Int> lift_spectrum(const Spectrum& spec, const Int& n, int p, unsigned long h) {
    if (p != 2 && p != 3) throw Error("lift_spectrum: p must be 2 or 3");
    if (spec.total_multiplicity() != n) throw ChecksumError("lift_spectrum: total != n");
    if (h == 0) return {spec, n};

    Int ph = int_pow(Int(p), h);
    Int new_n = ph * n;
    std::vector<std::pair<Rational, Int>> raw;
    Rational new_degree;
    if (p == 2) {
        // <2^h k; ..., [2^h r_i]^{m_i}, ..., [0]^{(2^h-1) n}>
        new_degree = Rational(ph) * spec.degree();
        raw.emplace_back(new_degree, 1);
        for (const auto& e : spec.restricted_entries())
            raw.emplace_back(Rational(ph) * e.eig, e.mult);
        raw.emplace_back(Rational(0), (ph - 1) * n);
    } else {
        // <3^h(k+1)-1; ..., [3^h(r_i+1)-1]^{m_i}, ..., [-1]^{(3^h-1) n}>
        new_degree = Rational(ph) * (spec.degree() + Rational(1)) - Rational(1);
        raw.emplace_back(new_degree, 1);
        for (const auto& e : spec.restricted_entries())
            raw.emplace_back(Rational(ph) * (e.eig + Rational(1)) - Rational(1), e.mult);
        raw.emplace_back(Rational(-1), (ph - 1) * n);
    }
    return {normalize(std::move(raw), new_n, new_degree), new_n};
}

Spectrum triple_spectrum(const Spectrum& spec, const Int& n, const Int& k) {
    if (spec.total_multiplicity() != n) throw ChecksumError("triple_spectrum: total != n");
    if (spec.degree() != Rational(k)) throw ChecksumError("triple_spectrum: degree != k");
    Rational new_degree = Rational(k + 2 * n);
    std::vector<std::pair<Rational, Int>> raw = {{new_degree, 1},
                                                 {Rational(k - n), 2}};
    for (const auto& e : spec.restricted_entries())
        raw.emplace_back(e.eig, 3 * e.mult);
    return normalize(std::move(raw), 3 * n, new_degree);
}

} // namespace trispec::lifts
