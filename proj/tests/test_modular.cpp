#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "charta/error.hpp"
#include "charta/modular.hpp"

using namespace charta;

namespace {

const double PHI = (1.0 + std::sqrt(5.0)) / 2.0;

CycNumber golden_cyc() {
    return CycNumber::from_int(1) + CycNumber::root_of_unity(5, 1) + CycNumber::root_of_unity(5, 4);
}

// 2 sin(72 deg) = -i (zeta_5 - zeta_5^4), written inside Q(zeta_20); this is
// also sqrt(1 + phi^2), the positive square root of the Fibonacci global
// dimension.
CycNumber two_sin_72() {
    return CycNumber::root_of_unity(20, 15) *
           (CycNumber::root_of_unity(20, 4) - CycNumber::root_of_unity(20, 16));
}

// Unitary Fibonacci S-matrix (1/sqrt(1+phi^2)) [[1, phi], [phi, -1]], exact.
ModularDatum fibonacci_datum() {
    CycNumber inv = two_sin_72().inverse();
    CycNumber phi = golden_cyc();
    ModularDatum m;
    m.s = {{Scalar(inv), Scalar(inv * phi)},
           {Scalar(inv * phi), Scalar(inv * CycNumber::from_int(-1))}};
    return m;
}

// Unitary Ising S-matrix (1/2) [[1, 1, r2], [1, 1, -r2], [r2, -r2, 0]], exact.
ModularDatum ising_datum() {
    CycNumber h = CycNumber::from_rational(rat(1, 2));
    CycNumber r2 = CycNumber::root_of_unity(8, 1) + CycNumber::root_of_unity(8, 7);
    CycNumber z = CycNumber();
    ModularDatum m;
    m.s = {{Scalar(h), Scalar(h), Scalar(h * r2)},
           {Scalar(h), Scalar(h), Scalar(CycNumber() - h * r2)},
           {Scalar(h * r2), Scalar(CycNumber() - h * r2), Scalar(z)}};
    return m;
}

ModularDatum float_datum(const std::vector<std::vector<double>>& rows) {
    ModularDatum m;
    for (const auto& row : rows) {
        std::vector<Scalar> out;
        for (double v : row) out.push_back(Scalar(std::complex<double>(v, 0)));
        m.s.push_back(std::move(out));
    }
    return m;
}

}  // namespace

TEST_CASE("the exact Fibonacci S-matrix embeds where it should") {
    CycNumber c = two_sin_72();
    CHECK(std::abs(c.embed() - 2.0 * std::sin(2.0 * M_PI / 5.0)) < 1e-12);
    CHECK((c * c.inverse()) == CycNumber::from_int(1));
    ModularDatum m = fibonacci_datum();
    CHECK(std::abs(m.s[0][0].embed() - 1.0 / std::sqrt(1.0 + PHI * PHI)) < 1e-12);
    CHECK(std::abs(m.s[1][0].embed() - PHI / std::sqrt(1.0 + PHI * PHI)) < 1e-12);
}

TEST_CASE("verlinde fusion recovers the Fibonacci ring with exact dimensions") {
    FusionRing f = verlinde_fusion(fibonacci_datum());
    REQUIRE(f.rank == 2);
    CHECK(f.dual == std::vector<int>{0, 1});
    CHECK(f.n(0, 0, 0) == 1);
    CHECK(f.n(0, 1, 1) == 1);
    CHECK(f.n(1, 0, 1) == 1);
    CHECK(f.n(1, 1, 0) == 1);
    CHECK(f.n(1, 1, 1) == 1);
    CHECK(f.n(0, 0, 1) == 0);
    CHECK(f.n(0, 1, 0) == 0);
    REQUIRE(f.dims.size() == 2);
    CHECK(f.dims[0].exact());
    CHECK(f.dims[0].cyc() == CycNumber::from_int(1));
    CHECK(f.dims[1].exact());
    CHECK(f.dims[1].cyc() == golden_cyc());
    CHECK(validate_fusion_ring(f).ok);
}

TEST_CASE("verlinde fusion recovers the Ising ring exactly") {
    FusionRing f = verlinde_fusion(ising_datum());
    REQUIRE(f.rank == 3);
    CHECK(f.dual == std::vector<int>{0, 1, 2});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                long expected = 0;
                if (i == 0)
                    expected = (j == k) ? 1 : 0;
                else if (j == 0)
                    expected = (i == k) ? 1 : 0;
                else if (i == 1 && j == 1)
                    expected = (k == 0) ? 1 : 0;
                else if ((i == 1 && j == 2) || (i == 2 && j == 1))
                    expected = (k == 2) ? 1 : 0;
                else if (i == 2 && j == 2)
                    expected = (k == 0 || k == 1) ? 1 : 0;
                CHECK(f.n(i, j, k) == expected);
            }
    CHECK(f.dims[2].exact());
    CHECK(f.dims[2].cyc() == CycNumber::root_of_unity(8, 1) + CycNumber::root_of_unity(8, 7));
    CHECK(validate_fusion_ring(f).ok);
}

TEST_CASE("rank-one datum gives the trivial ring and table") {
    ModularDatum m;
    m.s = {{Scalar::from_int(1)}};
    FusionRing f = verlinde_fusion(m);
    CHECK(f.rank == 1);
    CHECK(f.n(0, 0, 0) == 1);
    CharacterTable t = smatrix_chartable(m);
    CHECK(t.table[0][0] == Cplx(1, 0));
    CrossCheckReport cc = cross_check(m);
    CHECK(cc.pass);
    CHECK(cc.permutation == std::vector<int>{0});
}

TEST_CASE("the S-matrix table matches the closed Fibonacci form") {
    CharacterTable t = smatrix_chartable(fibonacci_datum());
    REQUIRE(t.rank() == 2);
    CHECK(std::abs(t.table[0][0] - Cplx(1, 0)) < 1e-9);
    CHECK(std::abs(t.table[0][1] - Cplx(1, 0)) < 1e-9);
    CHECK(std::abs(t.table[1][0] - Cplx(PHI, 0)) < 1e-9);
    CHECK(std::abs(t.table[1][1] - Cplx(1 - PHI, 0)) < 1e-9);
    CHECK(std::abs(t.class_sizes[0] - Cplx(1, 0)) < 1e-9);
    CHECK(std::abs(t.class_sizes[1] - Cplx(PHI * PHI, 0)) < 1e-9);
}

TEST_CASE("the S-matrix table matches the closed Ising form") {
    CharacterTable t = smatrix_chartable(ising_datum());
    REQUIRE(t.rank() == 3);
    const double R2 = std::sqrt(2.0);
    std::vector<std::vector<double>> expected{{1, 1, 1}, {1, 1, -1}, {R2, -R2, 0}};
    for (int i = 0; i < 3; ++i)
        for (int r = 0; r < 3; ++r)
            CHECK(std::abs(t.table[i][r] - Cplx(expected[i][r], 0)) < 1e-9);
    CHECK(std::abs(t.class_sizes[0] - Cplx(1, 0)) < 1e-9);
    CHECK(std::abs(t.class_sizes[1] - Cplx(1, 0)) < 1e-9);
    CHECK(std::abs(t.class_sizes[2] - Cplx(2, 0)) < 1e-9);
}

TEST_CASE("both table pipelines agree column by column") {
    for (const ModularDatum& m : {fibonacci_datum(), ising_datum()}) {
        CrossCheckReport cc = cross_check(m);
        CHECK(cc.pass);
        CHECK(cc.max_residual <= 1e-9);
        std::vector<int> identity(m.rank());
        for (int i = 0; i < m.rank(); ++i) identity[i] = i;
        CHECK(cc.permutation == identity);
    }
}

TEST_CASE("a float-entry S-matrix goes through the same pipeline") {
    const double c = 1.0 / std::sqrt(1.0 + PHI * PHI);
    ModularDatum m = float_datum({{c, c * PHI}, {c * PHI, -c}});
    FusionRing f = verlinde_fusion(m);
    CHECK(f.n(1, 1, 1) == 1);
    CHECK_FALSE(f.dims[1].exact());
    CHECK(std::abs(f.dims[1].embed() - Cplx(PHI, 0)) < 1e-12);
    CrossCheckReport cc = cross_check(m);
    CHECK(cc.pass);
    CHECK(cc.max_residual <= 1e-9);
}

TEST_CASE("the row-ratio map is multiplicative on modular data") {
    for (const ModularDatum& m : {fibonacci_datum(), ising_datum()}) {
        QHomReport rep = check_q_homomorphism(m);
        CHECK(rep.pass);
        CHECK(rep.max_residual <= 1e-9);
        CHECK(rep.notes.empty());
    }
}

TEST_CASE("a perturbed S-matrix is reported, not rounded away") {
    ModularDatum m = fibonacci_datum();
    m.s[1][1] = m.s[1][1] + Scalar(std::complex<double>(1e-2, 0));
    CHECK_THROWS_AS(verlinde_fusion(m), Error);
    try {
        verlinde_fusion(m);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrKind::computation);
        CHECK(std::string(e.what()).find("not modular") != std::string::npos);
        CHECK(std::string(e.what()).find("integer") != std::string::npos);
    }
    QHomReport rep = check_q_homomorphism(m);
    CHECK_FALSE(rep.pass);
    CHECK(rep.notes.size() == 1);
    CHECK(rep.notes[0].find("fusion reconstruction failed") != std::string::npos);
}

TEST_CASE("a rescaled S-matrix is rejected through the ring axioms") {
    ModularDatum m = fibonacci_datum();
    for (auto& row : m.s)
        for (auto& v : row) v = v * Scalar::from_int(2);
    try {
        verlinde_fusion(m);
        FAIL("expected a computation error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrKind::computation);
        CHECK(std::string(e.what()).find("not modular") != std::string::npos);
    }
}

TEST_CASE("degenerate matrices are rejected as not modular") {
    auto expect_computation = [](const ModularDatum& m, const char* needle) {
        try {
            verlinde_fusion(m);
            FAIL("expected a computation error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrKind::computation);
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_computation(float_datum({{1, 1}, {1, 1}}), "singular");
    expect_computation(float_datum({{1, 0.5}, {0.7, -1}}), "symmetric");
    expect_computation(float_datum({{1, 0}, {0, -1}}), "vanishes");
    expect_computation(float_datum({{0, 1}, {1, 0}}), "vanishes");
}

TEST_CASE("ragged input is rejected before any numerics") {
    ModularDatum m;
    m.s = {{Scalar::from_int(1), Scalar::from_int(1)}, {Scalar::from_int(1)}};
    try {
        verlinde_fusion(m);
        FAIL("expected a validation error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrKind::validation);
    }
}

TEST_CASE("modular data round-trips through json with exact entries intact") {
    ModularDatum m = fibonacci_datum();
    nlohmann::ordered_json j = modular_to_json(m);
    ModularDatum back = modular_from_json(nlohmann::json::parse(j.dump()));
    REQUIRE(back.rank() == 2);
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) {
            CHECK(back.s[i][k].exact());
            CHECK(back.s[i][k].cyc() == m.s[i][k].cyc());
        }
    FusionRing f = verlinde_fusion(back);
    CHECK(f.n(1, 1, 1) == 1);
    CHECK(f.dims[1].cyc() == golden_cyc());
}

TEST_CASE("malformed modular json is a parse error") {
    auto expect_parse = [](const char* text) {
        try {
            modular_from_json(nlohmann::json::parse(text));
            FAIL("expected a parse error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrKind::parse);
        }
    };
    expect_parse("{}");
    expect_parse("{\"s\": []}");
    expect_parse("{\"s\": [[1, 2]]}");
    expect_parse("{\"s\": [[1, 2], [3]]}");
    expect_parse("{\"s\": 7}");
}
