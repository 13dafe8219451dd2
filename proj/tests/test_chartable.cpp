#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "charta/chartable.hpp"
#include "charta/error.hpp"

using namespace charta;

namespace {

const double PHI = (1.0 + std::sqrt(5.0)) / 2.0;

FusionRing make_ring(int rank, std::vector<int> dual, std::vector<Scalar> dims) {
    FusionRing f;
    f.rank = rank;
    f.dual = std::move(dual);
    f.dims = std::move(dims);
    f.fusion.assign((size_t)rank * rank * rank, 0);
    for (int i = 0; i < rank; ++i) f.labels.push_back("X" + std::to_string(i));
    for (int j = 0; j < rank; ++j) {
        f.n(0, j, j) = 1;
        if (j != 0) f.n(j, 0, j) = 1;
    }
    return f;
}

CycNumber golden_cyc() {
    return CycNumber::from_int(1) + CycNumber::root_of_unity(5, 1) + CycNumber::root_of_unity(5, 4);
}

FusionRing fibonacci_ring() {
    FusionRing f = make_ring(2, {0, 1}, {Scalar::from_int(1), Scalar(golden_cyc())});
    f.n(1, 1, 0) = 1;
    f.n(1, 1, 1) = 1;
    return f;
}

FusionRing ising_ring() {
    Scalar rt2(CycNumber::root_of_unity(8, 1) + CycNumber::root_of_unity(8, 7));
    FusionRing f = make_ring(3, {0, 1, 2}, {Scalar::from_int(1), Scalar::from_int(1), rt2});
    f.n(1, 1, 0) = 1;
    f.n(1, 2, 2) = 1;
    f.n(2, 1, 2) = 1;
    f.n(2, 2, 0) = 1;
    f.n(2, 2, 1) = 1;
    return f;
}

FusionRing s3_rep_ring() {
    FusionRing f = make_ring(3, {0, 1, 2},
                             {Scalar::from_int(1), Scalar::from_int(1), Scalar::from_int(2)});
    f.n(1, 1, 0) = 1;
    f.n(1, 2, 2) = 1;
    f.n(2, 1, 2) = 1;
    f.n(2, 2, 0) = 1;
    f.n(2, 2, 1) = 1;
    f.n(2, 2, 2) = 1;
    return f;
}

FusionRing cyclic_rep_ring(int n) {
    std::vector<int> dual(n);
    for (int i = 0; i < n; ++i) dual[i] = (n - i) % n;
    FusionRing f = make_ring(n, dual, std::vector<Scalar>(n, Scalar::from_int(1)));
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) f.n(i, j, (i + j) % n) = 1;
    return f;
}

FusionRing s3_group_ring() {
    FusionRing f = make_ring(6, {0, 2, 1, 3, 4, 5}, std::vector<Scalar>(6, Scalar::from_int(1)));
    // r = index 1 (3-cycle), r2 = 2, s = 3, sr = 4, sr2 = 5, with s r s = r2.
    auto set = [&](int i, int j, int k) { f.n(i, j, k) = 1; };
    int mul[6][6] = {
        {0, 1, 2, 3, 4, 5},
        {1, 2, 0, 5, 3, 4},
        {2, 0, 1, 4, 5, 3},
        {3, 4, 5, 0, 1, 2},
        {4, 5, 3, 2, 0, 1},
        {5, 3, 4, 1, 2, 0},
    };
    for (int i = 1; i < 6; ++i)
        for (int j = 1; j < 6; ++j) set(i, j, mul[i][j]);
    return f;
}

bool close(const Cplx& a, const Cplx& b, double tol = 1e-9) { return std::abs(a - b) <= tol; }

} // namespace

TEST_CASE("trivial ring has the one-by-one table") {
    FusionRing triv = make_ring(1, {0}, {Scalar::from_int(1)});
    auto t = compute_character_table(triv);
    REQUIRE(t.rank() == 1);
    CHECK(t.table[0][0] == Cplx(1, 0));
    CHECK(close(t.class_sizes[0], Cplx(1, 0)));

    auto fr = idempotents(t, triv);
    REQUIRE(fr.size() == 1);
    CHECK(close(fr[0][0], Cplx(1, 0)));

    auto can = canonical_elements(t, triv);
    CHECK(close(can.integral[0], Cplx(1, 0)));
    CHECK(close(can.cointegral[0], Cplx(1, 0)));
    CHECK(close(can.class_sums[0][0], Cplx(1, 0)));
    CHECK(integrality_check(t, triv, 1e-9).pass);
}

TEST_CASE("Fibonacci table, class sizes, and idempotents") {
    FusionRing fib = fibonacci_ring();
    auto t = compute_character_table(fib);
    REQUIRE(t.rank() == 2);

    CHECK(close(t.table[0][0], Cplx(1, 0)));
    CHECK(close(t.table[0][1], Cplx(1, 0)));
    CHECK(close(t.table[1][0], Cplx(PHI, 0)));
    CHECK(close(t.table[1][1], Cplx(1 - PHI, 0)));

    CHECK(close(t.class_sizes[0], Cplx(1, 0)));
    CHECK(close(t.class_sizes[1], Cplx(PHI * PHI, 0)));
    double dimc = 2 + PHI;
    CHECK(close(t.class_sizes[0] + t.class_sizes[1], Cplx(dimc, 0)));

    auto fr = idempotents(t, fib);
    CHECK(close(fr[0][0], Cplx(1 / dimc, 0)));
    CHECK(close(fr[0][1], Cplx(PHI / dimc, 0)));
    CHECK(close(fr[1][0], Cplx(PHI * PHI / dimc, 0)));
    CHECK(close(fr[1][1], Cplx(PHI * PHI * (1 - PHI) / dimc, 0)));

    // f_r * f_s = delta f_r under the fusion product, and the f_r sum to chi_0.
    for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) {
            auto prod = cf_product(fib, fr[r], fr[s]);
            for (int k = 0; k < 2; ++k)
                CHECK(close(prod[k], r == s ? fr[r][k] : Cplx(0, 0)));
        }
    CHECK(close(fr[0][0] + fr[1][0], Cplx(1, 0)));
    CHECK(close(fr[0][1] + fr[1][1], Cplx(0, 0)));
}

TEST_CASE("Fibonacci cointegral is the first idempotent") {
    FusionRing fib = fibonacci_ring();
    auto t = compute_character_table(fib);
    auto can = canonical_elements(t, fib);
    auto fr = idempotents(t, fib);
    CHECK(close(can.cointegral[0], fr[0][0]));
    CHECK(close(can.cointegral[1], fr[0][1]));
    CHECK(can.pairing_residual <= 1e-9);

    // g_0 recovers e-basis coordinates of the unit class: <chi_i, g_0> = d_i.
    CHECK(close(can.class_sums[0][0], Cplx(1, 0)));
    CHECK(close(can.class_sums[0][1], Cplx(1, 0)));
}

TEST_CASE("Fibonacci exact hints identify the golden ratio") {
    FusionRing fib = fibonacci_ring();
    auto t = compute_character_table(fib);
    REQUIRE(t.exact_hints.size() == 2);
    REQUIRE(t.exact_hints[0][0].has_value());
    CHECK(*t.exact_hints[0][0] == CycNumber::from_int(1));
    REQUIRE(t.exact_hints[1][0].has_value());
    CHECK(*t.exact_hints[1][0] == golden_cyc());
    REQUIRE(t.exact_hints[1][1].has_value());
    CHECK(*t.exact_hints[1][1] == CycNumber::from_int(1) - golden_cyc());
}

TEST_CASE("Ising table matches the closed form") {
    FusionRing isg = ising_ring();
    auto t = compute_character_table(isg);
    REQUIRE(t.rank() == 3);
    double rt2 = std::sqrt(2.0);

    CHECK(close(t.table[0][0], Cplx(1, 0)));
    CHECK(close(t.table[0][1], Cplx(1, 0)));
    CHECK(close(t.table[0][2], Cplx(1, 0)));
    CHECK(close(t.table[1][0], Cplx(1, 0)));
    CHECK(close(t.table[1][1], Cplx(1, 0)));
    CHECK(close(t.table[1][2], Cplx(-1, 0)));
    CHECK(close(t.table[2][0], Cplx(rt2, 0)));
    CHECK(close(t.table[2][1], Cplx(-rt2, 0)));
    CHECK(close(t.table[2][2], Cplx(0, 0)));

    CHECK(close(t.class_sizes[0], Cplx(1, 0)));
    CHECK(close(t.class_sizes[1], Cplx(1, 0)));
    CHECK(close(t.class_sizes[2], Cplx(2, 0)));

    REQUIRE(t.exact_hints[2][0].has_value());
    CHECK(*t.exact_hints[2][0] == CycNumber::root_of_unity(8, 1) + CycNumber::root_of_unity(8, 7));
    REQUIRE(t.exact_hints[2][2].has_value());
    CHECK(t.exact_hints[2][2]->is_zero());
}

TEST_CASE("orthogonality holds on the bundled rings") {
    for (const FusionRing& f : {fibonacci_ring(), ising_ring(), s3_rep_ring(), cyclic_rep_ring(4),
                                cyclic_rep_ring(5)}) {
        auto t = compute_character_table(f);
        auto rep = verify_orthogonality(t, f, 1e-9);
        INFO("first " << rep.max_first << " second " << rep.max_second
                      << " cob " << rep.max_change_of_basis);
        CHECK(rep.pass);
    }
}

TEST_CASE("a perturbed table entry is flagged where it was injected") {
    FusionRing fib = fibonacci_ring();
    auto t = compute_character_table(fib);
    t.table[1][1] += 1e-3;
    auto rep = verify_orthogonality(t, fib, 1e-9);
    CHECK(!rep.pass);
    CHECK(rep.max_first > 1e-5);
    CHECK((rep.first_i == 1 || rep.first_j == 1));
}

TEST_CASE("S3 representation ring reproduces the classical character table") {
    FusionRing s3 = s3_rep_ring();
    auto t = compute_character_table(s3);
    REQUIRE(t.rank() == 3);

    // Canonical column order puts class sizes ascending: 1, 2, 3.
    CHECK(close(t.class_sizes[0], Cplx(1, 0)));
    CHECK(close(t.class_sizes[1], Cplx(2, 0)));
    CHECK(close(t.class_sizes[2], Cplx(3, 0)));

    CHECK(close(t.table[1][0], Cplx(1, 0)));
    CHECK(close(t.table[1][1], Cplx(1, 0)));
    CHECK(close(t.table[1][2], Cplx(-1, 0)));
    CHECK(close(t.table[2][0], Cplx(2, 0)));
    CHECK(close(t.table[2][1], Cplx(-1, 0)));
    CHECK(close(t.table[2][2], Cplx(0, 0)));

    auto can = canonical_elements(t, s3);
    CHECK(can.pairing_residual <= 1e-9);
}

TEST_CASE("Z/2 idempotents are the halved characters") {
    FusionRing z2 = cyclic_rep_ring(2);
    auto t = compute_character_table(z2);
    auto fr = idempotents(t, z2);
    CHECK(close(fr[0][0], Cplx(0.5, 0)));
    CHECK(close(fr[0][1], Cplx(0.5, 0)));
    CHECK(close(fr[1][0], Cplx(0.5, 0)));
    CHECK(close(fr[1][1], Cplx(-0.5, 0)));
}

TEST_CASE("Z/4 has complex entries recognized as roots of unity") {
    FusionRing z4 = cyclic_rep_ring(4);
    auto t = compute_character_table(z4);
    REQUIRE(t.rank() == 4);

    int found_i = 0, found_minus_i = 0;
    for (int i = 0; i < 4; ++i)
        for (int r = 0; r < 4; ++r) {
            if (close(t.table[i][r], Cplx(0, 1))) {
                ++found_i;
                REQUIRE(t.exact_hints[i][r].has_value());
                CHECK(*t.exact_hints[i][r] == CycNumber::root_of_unity(4, 1));
            }
            if (close(t.table[i][r], Cplx(0, -1))) {
                ++found_minus_i;
                REQUIRE(t.exact_hints[i][r].has_value());
                CHECK(*t.exact_hints[i][r] == CycNumber::root_of_unity(4, 3));
            }
        }
    CHECK(found_i == 2);
    CHECK(found_minus_i == 2);

    for (const Cplx& s : t.class_sizes) CHECK(close(s, Cplx(1, 0)));
}

TEST_CASE("characters act on idempotents by their table values") {
    for (const FusionRing& f : {fibonacci_ring(), s3_rep_ring(), ising_ring()}) {
        auto t = compute_character_table(f);
        auto fr = idempotents(t, f);
        for (int i = 0; i < f.rank; ++i) {
            ClassFunctionVector chi(f.rank, Cplx(0, 0));
            chi[i] = Cplx(1, 0);
            for (int r = 0; r < f.rank; ++r) {
                auto prod = cf_product(f, chi, fr[r]);
                for (int k = 0; k < f.rank; ++k)
                    CHECK(close(prod[k], t.table[i][r] * fr[r][k], 1e-8));
            }
        }
    }
}

TEST_CASE("integrality holds with the expected characteristic polynomials") {
    FusionRing fib = fibonacci_ring();
    auto t = compute_character_table(fib);
    CHECK(integrality_check(t, fib, 1e-9).pass);

    Matrix<Rational> n1(2, 2, Rational(0));
    n1.at(0, 1) = 1;
    n1.at(1, 0) = 1;
    n1.at(1, 1) = 1;
    CHECK(charpoly(n1) == std::vector<Rational>{Rational(-1), Rational(-1), Rational(1)});

    FusionRing isg = ising_ring();
    auto ti = compute_character_table(isg);
    CHECK(integrality_check(ti, isg, 1e-9).pass);

    Matrix<Rational> ns(3, 3, Rational(0));
    ns.at(0, 2) = 1;
    ns.at(1, 2) = 1;
    ns.at(2, 0) = 1;
    ns.at(2, 1) = 1;
    CHECK(charpoly(ns) == std::vector<Rational>{Rational(0), Rational(-2), Rational(0), Rational(1)});

    auto rep = integrality_check(ti, isg, 1e-9);
    CHECK(rep.notes.size() == 1);
}

TEST_CASE("relabeling non-unit objects permutes rows but not content") {
    FusionRing s3 = s3_rep_ring();
    // Swap simple objects 1 and 2.
    FusionRing sw = make_ring(3, {0, 1, 2},
                              {Scalar::from_int(1), Scalar::from_int(2), Scalar::from_int(1)});
    auto p = [](int i) { return i == 0 ? 0 : 3 - i; };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) sw.n(p(i), p(j), p(k)) = s3.n(i, j, k);

    auto t1 = compute_character_table(s3);
    auto t2 = compute_character_table(sw);
    for (int i = 0; i < 3; ++i)
        for (int r = 0; r < 3; ++r) CHECK(close(t1.table[i][r], t2.table[p(i)][r]));
}

TEST_CASE("non-commutative and invalid rings are rejected") {
    CHECK_THROWS_AS(compute_character_table(s3_group_ring()), Error);
    try {
        compute_character_table(s3_group_ring());
    } catch (const Error& e) {
        CHECK(e.kind() == ErrKind::computation);
        CHECK(std::string(e.what()).find("commutative") != std::string::npos);
    }

    FusionRing bad = fibonacci_ring();
    bad.dims[1] = Scalar::from_int(1);
    CHECK_THROWS_AS(compute_character_table(bad), Error);
    try {
        compute_character_table(bad);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrKind::validation);
    }
}

TEST_CASE("class size recomputation matches the stored sizes") {
    for (const FusionRing& f : {fibonacci_ring(), ising_ring(), s3_rep_ring()}) {
        auto t = compute_character_table(f);
        auto recomputed = class_sizes(t, f);
        REQUIRE(recomputed.size() == t.class_sizes.size());
        for (size_t r = 0; r < recomputed.size(); ++r)
            CHECK(close(recomputed[r], t.class_sizes[r]));
    }
}

TEST_CASE("character table JSON carries table, sizes, ordering, and hints") {
    FusionRing fib = fibonacci_ring();
    auto t = compute_character_table(fib);
    auto j = t.to_json();
    REQUIRE(j.contains("table"));
    REQUIRE(j.contains("class_sizes"));
    REQUIRE(j.contains("ordering"));
    REQUIRE(j.contains("exact_hints"));
    CHECK(j["table"].size() == 2);
    CHECK(j["table"][0][0][0].get<double>() == 1.0);
    CHECK(j["ordering"].size() == 2);
    CHECK(!j["exact_hints"][1][0].is_null());
}
