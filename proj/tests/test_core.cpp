#include <doctest.h>

#include "trispec/bitmatrix.hpp"
#include "trispec/spectrum.hpp"

using namespace trispec;

namespace {

Spectrum spec_of(std::vector<std::pair<long, Int>> pairs, long n, long degree) {
    std::vector<std::pair<Rational, Int>> raw;
    for (auto& [e, m] : pairs) raw.emplace_back(Rational(e), m);
    return normalize(std::move(raw), Int(n), Rational(degree));
}

} // namespace

TEST_CASE("rational arithmetic and parsing") {
    Rational a(1, 4);
    Rational b(2, 8);
    CHECK(a == b);
    CHECK((a + b) == Rational(1, 2));
    CHECK(Rational::parse("-3/9") == Rational(-1, 3));
    CHECK(Rational::parse("7").is_integer());
    CHECK(Rational(5, -10).str() == "-1/2");
    CHECK(Rational(6, 3).str() == "2");
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK((Rational(1) + Rational(1, 32) * Rational(-64)) == Rational(-1));
}

TEST_CASE("normalize resolves the star convention") {
    // <4; [-2]^2, [0]^*> on 6 vertices
    Spectrum s = normalize({{Rational(4), 1}, {Rational(-2), 2}, {Rational(0), kStarMult}},
                           6, Rational(4));
    CHECK(s == spec_of({{4, 1}, {0, 3}, {-2, 2}}, 6, 4));
    CHECK(s.degree() == Rational(4));
    CHECK(s.entries()[s.degree_index()].mult == 1);

    // single vertex
    Spectrum v = normalize({{Rational(0), 1}}, 1, Rational(0));
    CHECK(v.total_multiplicity() == 1);

    // <2; [-1]^*> on 3 vertices (triangle)
    Spectrum t = normalize({{Rational(2), 1}, {Rational(-1), kStarMult}}, 3, Rational(2));
    CHECK(t == spec_of({{2, 1}, {-1, 2}}, 3, 2));
}

TEST_CASE("normalize merges coincident eigenvalues and drops zero multiplicities") {
    Spectrum s = normalize({{Rational(2), 1}, {Rational(2), 1}, {Rational(-1), 4},
                            {Rational(5), 0}},
                           6, Rational(2));
    CHECK(s.entries().size() == 2);
    CHECK(s.multiplicity_of(Rational(2)) == 2);
}

TEST_CASE("normalize error paths") {
    CHECK_THROWS_AS(normalize({{Rational(4), 1}, {Rational(0), kStarMult},
                               {Rational(-2), kStarMult}},
                              6, Rational(4)),
                    StarError);
    // star would need negative multiplicity
    CHECK_THROWS_AS(normalize({{Rational(4), 3}, {Rational(0), 4}, {Rational(-2), kStarMult}},
                              6, Rational(4)),
                    StarError);
    // totals off without a star
    CHECK_THROWS_AS(normalize({{Rational(4), 1}, {Rational(-2), 2}}, 6, Rational(4)),
                    ChecksumError);
    // degree value missing
    CHECK_THROWS_AS(normalize({{Rational(1), 6}}, 6, Rational(4)), ChecksumError);
}

TEST_CASE("normalize is idempotent") {
    std::uint64_t state = 42;
    auto next = [&] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int trial = 0; trial < 50; ++trial) {
        // random multiset of eigenvalues with a designated degree
        std::vector<std::pair<Rational, Int>> raw;
        long degree = long(next() % 20);
        Int n = 1;
        raw.emplace_back(Rational(degree), 1);
        int parts = 1 + int(next() % 4);
        for (int i = 0; i < parts; ++i) {
            long eig = long(next() % 41) - 20;
            Int mult = long(next() % 5);
            raw.push_back({Rational(eig), mult});
            n += mult;
        }
        Spectrum once = normalize(raw, n, Rational(degree));
        std::vector<std::pair<Rational, Int>> again;
        for (const auto& e : once.entries()) again.emplace_back(e.eig, e.mult);
        Spectrum twice = normalize(again, n, Rational(degree));
        CHECK(once == twice);
    }
}

TEST_CASE("spectrum checksums") {
    // <32; [4]^27, [-4]^35> on 63 vertices, k = 32
    Spectrum sp6 = spec_of({{32, 1}, {4, 27}, {-4, 35}}, 63, 32);
    CHECK(spectrum_checksums(sp6, 63, 32).empty());

    // <8; [-1]^8> on 9
    Spectrum k9 = spec_of({{8, 1}, {-1, 8}}, 9, 8);
    CHECK(spectrum_checksums(k9, 9, 8).empty());

    // deliberately broken: <4; [-2]^2, [0]^2> claimed on 6 vertices
    Spectrum broken = spec_of({{4, 1}, {0, 2}, {-2, 2}}, 5, 4);
    auto violations = spectrum_checksums(broken, 6, 4);
    CHECK(!violations.empty());
    CHECK(violations[0].find("total multiplicity") != std::string::npos);
}

TEST_CASE("bitmatrix construction validates shape") {
    CHECK_THROWS_AS(BitMatrix::from_rows({{0, 1}, {0, 0}}), MatrixShapeError);
    CHECK_THROWS_AS(BitMatrix::from_rows({{1, 0}, {0, 0}}), MatrixShapeError);
    CHECK_THROWS_AS(BitMatrix::from_rows({{0, 2}, {2, 0}}), MatrixShapeError);
    BitMatrix m = BitMatrix::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    CHECK(m.row_degree(0) == 2);
    CHECK(m.is_connected());
    CHECK(m.edge_count() == 3);
    CHECK(m.complement().edge_count() == 0);
}

TEST_CASE("bitmatrix connectivity and complement") {
    BitMatrix two_triangles(6);
    for (int base : {0, 3})
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) two_triangles.set_edge(base + i, base + j);
    CHECK(two_triangles.component_count() == 2);
    CHECK(!two_triangles.is_connected());
    BitMatrix c = two_triangles.complement(); // K_{3,3}
    CHECK(c.is_connected());
    CHECK(c.regular_degree() == 3);
    CHECK(c.common_neighbors(0, 1) == 3);
    CHECK(c.common_neighbors(0, 3) == 0);
}
