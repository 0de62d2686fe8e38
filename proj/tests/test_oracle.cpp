#include <doctest.h>

#include <sstream>

#include "trispec/catalog.hpp"
#include "trispec/lifts.hpp"
#include "trispec/oracle.hpp"

using namespace trispec;
using namespace trispec::oracle;

namespace {

Spectrum spec_of(std::vector<std::pair<long, Int>> pairs, long n, long degree) {
    std::vector<std::pair<Rational, Int>> raw;
    for (auto& [e, m] : pairs) raw.emplace_back(Rational(e), m);
    return normalize(std::move(raw), Int(n), Rational(degree));
}

BitMatrix cycle(std::size_t n) {
    BitMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set_edge(i, (i + 1) % n);
    return m;
}

} // namespace

TEST_CASE("symmetric group diagrams") {
    BitMatrix k3 = build_symmetric(3);
    CHECK(k3.size() == 3);
    CHECK(k3.edge_count() == 3);

    BitMatrix oct = build_symmetric(4);
    CHECK(oct.size() == 6);
    CHECK(exact_spectrum(oct) == spec_of({{4, 1}, {0, 3}, {-2, 2}}, 6, 4));

    BitMatrix t5 = build_symmetric(5);
    CHECK(exact_spectrum(t5) == spec_of({{6, 1}, {1, 4}, {-2, 5}}, 10, 6));
}

TEST_CASE("symplectic diagrams over GF(2)") {
    CHECK(exact_spectrum(build_symplectic2(1)) == spec_of({{2, 1}, {-1, 2}}, 3, 2));
    CHECK(exact_spectrum(build_symplectic2(2)) == spec_of({{8, 1}, {2, 5}, {-2, 9}}, 15, 8));
    CHECK(exact_spectrum(build_symplectic2(3)) == spec_of({{32, 1}, {4, 27}, {-4, 35}}, 63, 32));
    // Sym(6) = Sp4(2)
    CHECK(exact_spectrum(build_symmetric(6)) == exact_spectrum(build_symplectic2(2)));
}

TEST_CASE("orthogonal diagrams over GF(2)") {
    CHECK(exact_spectrum(build_orthogonal2(3, -1)) ==
          spec_of({{20, 1}, {2, 20}, {-4, 15}}, 36, 20));
    srg::ExtendedParams o8 = verify_srg(build_orthogonal2(4, +1));
    CHECK(o8.n == 120);
    CHECK(o8.k == 56);
    CHECK(o8.lambda == 28);
    CHECK(o8.mu == 24);
    CHECK(o8.r == 8);
    CHECK(o8.f == 35);
    CHECK(o8.s == -4);
    CHECK(o8.g == 84);
    // Sym(5) = O4-(2)
    CHECK(exact_spectrum(build_orthogonal2(2, -1)) == spec_of({{6, 1}, {1, 4}, {-2, 5}}, 10, 6));
    // O4+(2) is two disjoint triangles
    BitMatrix o4p = build_orthogonal2(2, +1);
    CHECK(o4p.size() == 6);
    CHECK(o4p.component_count() == 2);
    CHECK(exact_spectrum(o4p) == spec_of({{2, 2}, {-1, 4}}, 6, 2));
    // Sym(8) = O6+(2)
    CHECK(exact_spectrum(build_orthogonal2(3, +1)) == exact_spectrum(build_symmetric(8)));
}

TEST_CASE("unitary diagrams over GF(4)") {
    CHECK(exact_spectrum(build_unitary4(3)) == spec_of({{8, 1}, {-1, 8}}, 9, 8));
    CHECK(exact_spectrum(build_unitary4(4)) == spec_of({{32, 1}, {2, 24}, {-4, 20}}, 45, 32));
    CHECK(exact_spectrum(build_unitary4(5)) == spec_of({{128, 1}, {8, 44}, {-4, 120}}, 165, 128));
}

TEST_CASE("orthogonal diagrams over GF(3)") {
    CHECK(exact_spectrum(build_orthogonal3(4, +1)) == spec_of({{8, 1}, {0, 9}, {-4, 2}}, 12, 8));
    CHECK(exact_spectrum(build_orthogonal3(5, -1)) ==
          spec_of({{32, 1}, {2, 24}, {-4, 20}}, 45, 32));
    srg::ExtendedParams om6 = verify_srg(build_orthogonal3(6, -1));
    CHECK(om6.n == 126);
    CHECK(om6.k == 80);
    CHECK(om6.lambda == 52);
    CHECK(om6.mu == 48);
    CHECK(om6.r == 8);
    CHECK(om6.f == 35);
    CHECK(om6.s == -4);
    CHECK(om6.g == 90);
    // Omega5-(3) = 2 x SU4(2): same diagram as SU4(2)
    CHECK(exact_spectrum(build_orthogonal3(5, -1)) == exact_spectrum(build_unitary4(4)));
    // Omega5+(3) = O6-(2)
    CHECK(exact_spectrum(build_orthogonal3(5, +1)) == exact_spectrum(build_orthogonal2(3, -1)));
    // Omega3-(3) = Sym(4), Omega4-(3) = Sym(6) diagrams
    CHECK(exact_spectrum(build_orthogonal3(3, -1)) == exact_spectrum(build_symmetric(4)));
    CHECK(exact_spectrum(build_orthogonal3(4, -1)) == exact_spectrum(build_symmetric(6)));
}

TEST_CASE("exact_spectrum error and edge paths") {
    CHECK_THROWS_AS(exact_spectrum(cycle(5)), NonIntegralSpectrumError); // half case
    CHECK_THROWS_AS(exact_spectrum(cycle(7)), NonIntegralSpectrumError);
    CHECK(exact_spectrum(cycle(6)) ==
          spec_of({{2, 1}, {1, 2}, {-1, 2}, {-2, 1}}, 6, 2));
    CHECK(exact_spectrum(cycle(4)) == spec_of({{2, 1}, {0, 2}, {-2, 1}}, 4, 2));
    CHECK(exact_spectrum(BitMatrix(1)) == spec_of({{0, 1}}, 1, 0));
    CHECK(exact_spectrum(BitMatrix(4)) == spec_of({{0, 4}}, 4, 0));
    CHECK_THROWS_AS(exact_spectrum(build_symmetric(5), 5), DimensionCapError);
    // star K_{1,4} is irregular but has an integer spectrum
    BitMatrix star(5);
    for (std::size_t i = 1; i < 5; ++i) star.set_edge(0, i);
    CHECK(exact_spectrum(star) == spec_of({{2, 1}, {0, 3}, {-2, 1}}, 5, 2));
}

TEST_CASE("verify_srg") {
    srg::ExtendedParams sp6 = verify_srg(build_symplectic2(3));
    CHECK(sp6.n == 63);
    CHECK(sp6.k == 32);
    CHECK(sp6.lambda == 16);
    CHECK(sp6.mu == 16);

    srg::ExtendedParams t5 = verify_srg(build_symmetric(5));
    CHECK(t5.lambda == 3);
    CHECK(t5.mu == 4);

    // 2^.1[Sym(5)] has three restricted eigenvalues {2, 0, -4}
    CHECK_THROWS_AS(verify_srg(lifts::lift2_matrix(build_symmetric(5))),
                    NotStronglyRegularError);
    // 2^.1[Sym(4)] is K_{4,4,4}: still strongly regular (the lifted 0 merges)
    CHECK(verify_srg(lifts::lift2_matrix(build_symmetric(4))).imprimitive);
    CHECK_THROWS_AS(verify_srg(build_unitary4(3)), NotStronglyRegularError); // complete
    BitMatrix star(5);
    for (std::size_t i = 1; i < 5; ++i) star.set_edge(0, i);
    CHECK_THROWS_AS(verify_srg(star), NotRegularError);

    // codiagram = complement: parameters related by complement_params
    srg::ExtendedParams diag = verify_srg(build_orthogonal2(3, -1));
    srg::ExtendedParams codiag = verify_srg(build_orthogonal2(3, -1).complement());
    CHECK(srg::complement_params(diag) == codiag);

    // verify_srg and params_from_spectrum agree when both succeed
    for (const BitMatrix& m : {build_symmetric(6), build_symplectic2(2),
                               build_orthogonal3(5, +1)}) {
        CHECK(verify_srg(m) ==
              srg::params_from_spectrum(exact_spectrum(m), Int((long)m.size())));
    }
}

TEST_CASE("singular point counts") {
    CHECK(count_singular_points(gf3_form(5, +1)) == 40);
    CHECK(count_singular_points(gf3_form(5, -1)) == 40);
    CHECK(count_singular_points(gf3_form(4, +1)) == 16);
    CHECK(count_singular_points(gf3_form(4, -1)) == 10);
    CHECK(count_singular_points(hermitian_form(3)) == 9);
    CHECK(count_singular_points(symplectic_form(6)) == 63);
    CHECK(count_singular_points(quadratic_form(6, +1)) == 35);
    CHECK(count_singular_points(quadratic_form(6, -1)) == 27);
}

TEST_CASE("singular point closed forms and recursion, dim <= 7") {
    // brute force == closed form
    for (int d = 2; d <= 7; d += 2) {
        CHECK(count_singular_points(symplectic_form(d)) ==
              singular_points_closed_form(symplectic_form(d)));
        for (int eps : {+1, -1})
            CHECK(count_singular_points(quadratic_form(d, eps)) ==
                  singular_points_closed_form(quadratic_form(d, eps)));
    }
    for (int d = 1; d <= 7; ++d) {
        CHECK(count_singular_points(hermitian_form(d)) ==
              singular_points_closed_form(hermitian_form(d)));
        for (int eps : {+1, -1})
            if (d >= 2)
                CHECK(count_singular_points(gf3_form(d, eps)) ==
                      singular_points_closed_form(gf3_form(d, eps)));
    }
    // s_i = 1 + (s_2 - 1) q^{i-2} + q s_{i-2}, with s_2 the hyperbolic count
    auto recursion = [](const Int& s2_hyp, long q, const Int& prev2, long i, const Int& got) {
        CHECK(got == 1 + (s2_hyp - 1) * int_pow(q, i - 2) + q * prev2);
    };
    for (int d = 4; d <= 6; d += 2) {
        recursion(3, 2, count_singular_points(symplectic_form(d - 2)), d,
                  count_singular_points(symplectic_form(d)));
        for (int eps : {+1, -1})
            recursion(2, 2, count_singular_points(quadratic_form(d - 2, eps)), d,
                      count_singular_points(quadratic_form(d, eps)));
    }
    for (int d = 3; d <= 7; ++d)
        recursion(3, 4, count_singular_points(hermitian_form(d - 2)), d,
                  count_singular_points(hermitian_form(d)));
    for (int d = 4; d <= 7; ++d)
        for (int eps : {+1, -1})
            recursion(2, 3, count_singular_points(gf3_form(d - 2, eps)), d,
                      count_singular_points(gf3_form(d, eps)));
}

TEST_CASE("codiagram spectra via matrix complement") {
    for (const BitMatrix& m : {build_symmetric(5), build_orthogonal2(3, -1),
                               build_unitary4(4), build_symplectic2(2)}) {
        Spectrum s = exact_spectrum(m);
        CHECK(exact_spectrum(m.complement()) ==
              srg::complement_spectrum(s, Int((long)m.size())));
    }
}

TEST_CASE("triality matrix") {
    BitMatrix tri = lifts::triple_matrix(build_orthogonal2(4, +1));
    CHECK(tri.size() == 360);
    CHECK(exact_spectrum(tri) ==
          spec_of({{296, 1}, {8, 105}, {-4, 252}, {-64, 2}}, 360, 296));
}

TEST_CASE("oracle_matrix covers the catalog families") {
    using catalog::CentralType;
    auto check = [&](const char* s) {
        CentralType ct = CentralType::parse(s);
        BitMatrix m = oracle_matrix(ct);
        CHECK(exact_spectrum(m) == catalog::spectrum(ct));
    };
    check("PR1(h=2)");
    check("PR2a(h=1,m=4)");
    check("PR2b(h=1,m=4)");
    check("PR2c(h=1,m=4)");
    check("PR2d(h=1,m=4)");
    check("PR3(h=1,m=3,eps=-)");
    check("PR4(h=1,m=2)");
    check("PR5(h=1,m=4,eps=+)");
    check("PR6(h=1,m=3)");
    check("PR8(h=1)");
    check("PR9(h=1)");
    check("PR12(h=1)");
    check("PR7d");
    CHECK_THROWS_AS(oracle_matrix(CentralType::parse("PR7a")), NoOracleError);
    CHECK_THROWS_AS(oracle_matrix(CentralType::parse("PR4(h=8,m=4)")), DimensionCapError);
}

TEST_CASE("export_graph is deterministic") {
    std::ostringstream a, b;
    export_graph(build_symmetric(4), a);
    export_graph(build_symmetric(4), b);
    CHECK(a.str() == b.str());
    CHECK(a.str().substr(0, 12) == "p edge 6 12\n");
    std::string first_edge = a.str().substr(12, 6);
    CHECK(first_edge == "e 1 2\n");
}
