#include <doctest.h>

#include "trispec/lifts.hpp"
#include "trispec/oracle.hpp"

using namespace trispec;
using namespace trispec::lifts;

namespace {

Spectrum spec_of(std::vector<std::pair<long, Int>> pairs, long n, long degree) {
    std::vector<std::pair<Rational, Int>> raw;
    for (auto& [e, m] : pairs) raw.emplace_back(Rational(e), m);
    return normalize(std::move(raw), Int(n), Rational(degree));
}

BitMatrix triangle() {
    return BitMatrix::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
}

} // namespace

TEST_CASE("matrix lifts on tiny inputs") {
    BitMatrix single(1);
    BitMatrix doubled = lift2_matrix(single);
    CHECK(doubled.size() == 2);
    CHECK(doubled.edge_count() == 0); // two isolated vertices

    BitMatrix tripled = lift3_matrix(single);
    CHECK(tripled.size() == 3);
    CHECK(tripled.edge_count() == 3); // triangle

    CHECK(lift3_matrix(triangle()).edge_count() == 36); // K9

    BitMatrix k9 = triple_matrix(triangle());
    CHECK(k9.size() == 9);
    CHECK(k9.edge_count() == 36); // K3 x 3 = K9

    CHECK(triple_matrix(BitMatrix(1)).edge_count() == 3); // single vertex -> triangle
}

TEST_CASE("doubling the triangle gives the octahedron") {
    BitMatrix oct = lift2_matrix(triangle());
    CHECK(oct.size() == 6);
    CHECK(oct.regular_degree() == 4);
    CHECK(oracle::exact_spectrum(oct) == spec_of({{4, 1}, {0, 3}, {-2, 2}}, 6, 4));

    BitMatrix twice = lift2_matrix(oct);
    CHECK(twice.size() == 12);
    CHECK(oracle::exact_spectrum(twice) == spec_of({{8, 1}, {0, 9}, {-4, 2}}, 12, 8));
}

TEST_CASE("lift_spectrum matches the worked small groups") {
    Spectrum k3 = spec_of({{2, 1}, {-1, 2}}, 3, 2);

    auto [oct, n6] = lift_spectrum(k3, 3, 2, 1);
    CHECK(n6 == 6);
    CHECK(oct == spec_of({{4, 1}, {0, 3}, {-2, 2}}, 6, 4));

    // 3^.2 applied to a single vertex: SU3(2)' = K9
    auto [k9, n9] = lift_spectrum(spec_of({{0, 1}}, 1, 0), 1, 3, 2);
    CHECK(n9 == 9);
    CHECK(k9 == spec_of({{8, 1}, {-1, 8}}, 9, 8));

    // h = 0 is the identity
    auto [same, n3] = lift_spectrum(k3, 3, 2, 0);
    CHECK(n3 == 3);
    CHECK(same == k3);

    // octahedron under 3^.1: 18 vertices
    auto [l3, n18] = lift_spectrum(spec_of({{4, 1}, {0, 3}, {-2, 2}}, 6, 4), 6, 3, 1);
    CHECK(n18 == 18);
    CHECK(l3 == spec_of({{14, 1}, {2, 3}, {-1, 12}, {-4, 2}}, 18, 14));
}

TEST_CASE("lift_spectrum composes") {
    Spectrum base = spec_of({{6, 1}, {1, 4}, {-2, 5}}, 10, 6);
    for (int p : {2, 3}) {
        auto [two, n2] = lift_spectrum(base, 10, p, 2);
        auto [one, n1] = lift_spectrum(base, 10, p, 1);
        auto [onetwo, n12] = lift_spectrum(one, n1, p, 1);
        CHECK(n2 == n12);
        CHECK(two == onetwo);
    }
}

TEST_CASE("lifted eigenvector bases hold exactly") {
    BitMatrix oct = lift2_matrix(triangle());
    auto matvec = [&](const std::vector<long>& v) {
        std::vector<long> out(oct.size(), 0);
        for (std::size_t i = 0; i < oct.size(); ++i)
            for (std::size_t j = 0; j < oct.size(); ++j)
                if (oct.test(i, j)) out[i] += v[j];
        return out;
    };
    // triangle eigenvector v = (1,-1,0) with eigenvalue -1 lifts to
    // (v,v) with eigenvalue -2 and (v,-v) with eigenvalue 0
    std::vector<long> vv = {1, -1, 0, 1, -1, 0};
    std::vector<long> vm = {1, -1, 0, -1, 1, 0};
    auto got_vv = matvec(vv);
    auto got_vm = matvec(vm);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(got_vv[i] == -2 * vv[i]);
        CHECK(got_vm[i] == 0);
    }
}

TEST_CASE("triple_spectrum") {
    // K3 x 3 = K9
    CHECK(triple_spectrum(spec_of({{2, 1}, {-1, 2}}, 3, 2), 3, 2) ==
          spec_of({{8, 1}, {-1, 8}}, 9, 8));

    // O8+(2) diagram x 3: the 360-vertex triality diagram
    Spectrum o8 = spec_of({{56, 1}, {8, 35}, {-4, 84}}, 120, 56);
    CHECK(triple_spectrum(o8, 120, 56) ==
          spec_of({{296, 1}, {8, 105}, {-4, 252}, {-64, 2}}, 360, 296));

    // Omega8+(3) diagram x 3 (degree k + 2n = 2888)
    Spectrum om8 = spec_of({{728, 1}, {8, 819}, {-28, 260}}, 1080, 728);
    Spectrum tri3 = triple_spectrum(om8, 1080, 728);
    CHECK(tri3 == spec_of({{2888, 1}, {8, 2457}, {-28, 780}, {-352, 2}}, 3240, 2888));
    CHECK(spectrum_checksums(tri3, 3240, 2888).empty());
}

TEST_CASE("spectral commuting square on oracle bases") {
    std::vector<BitMatrix> bases = {triangle(), oracle::build_symmetric(4),
                                    oracle::build_symmetric(5), oracle::build_symplectic2(2)};
    for (const auto& base : bases) {
        Spectrum bs = oracle::exact_spectrum(base);
        Int n = Int((long)base.size());
        for (int p : {2, 3}) {
            BitMatrix m = base;
            for (unsigned long h = 1; h <= 2; ++h) {
                m = (p == 2) ? lift2_matrix(m) : lift3_matrix(m);
                auto [expect, nn] = lift_spectrum(bs, n, p, h);
                CHECK(oracle::exact_spectrum(m) == expect);
                CHECK(nn == Int((long)m.size()));
            }
        }
    }
    // triple square on Sym(4): octahedron x 3
    BitMatrix oct = oracle::build_symmetric(4);
    Spectrum direct = oracle::exact_spectrum(triple_matrix(oct));
    CHECK(direct == triple_spectrum(oracle::exact_spectrum(oct), 6, 4));
}
