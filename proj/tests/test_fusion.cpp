#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>

#include "charta/error.hpp"
#include "charta/fusion.hpp"
#include "charta/json_io.hpp"

using namespace charta;

namespace {

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

Scalar golden_ratio() {
    return Scalar(CycNumber::from_int(1) + CycNumber::root_of_unity(5, 1)
                  + CycNumber::root_of_unity(5, 4));
}

Scalar sqrt2() {
    return Scalar(CycNumber::root_of_unity(8, 1) + CycNumber::root_of_unity(8, 7));
}

FusionRing fibonacci_ring(Scalar tau) {
    FusionRing f = make_ring(2, {0, 1}, {Scalar::from_int(1), tau});
    f.n(1, 1, 0) = 1;
    f.n(1, 1, 1) = 1;
    return f;
}

FusionRing ising_ring() {
    FusionRing f = make_ring(3, {0, 1, 2}, {Scalar::from_int(1), Scalar::from_int(1), sqrt2()});
    f.n(1, 1, 0) = 1;
    f.n(1, 2, 2) = 1;
    f.n(2, 1, 2) = 1;
    f.n(2, 2, 0) = 1;
    f.n(2, 2, 1) = 1;
    return f;
}

// Representation ring of S3: trivial, sign, and the 2-dimensional irrep.
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

// Group ring of S3 on the basis of group elements; the smallest
// non-commutative based ring.
FusionRing s3_group_ring() {
    using Perm = std::array<int, 3>;
    std::vector<Perm> g{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    auto compose = [](const Perm& a, const Perm& b) {
        return Perm{a[b[0]], a[b[1]], a[b[2]]};
    };
    auto find = [&](const Perm& p) {
        for (int i = 0; i < 6; ++i)
            if (g[i] == p) return i;
        return -1;
    };
    FusionRing f = make_ring(6, {0, 0, 0, 0, 0, 0},
                             std::vector<Scalar>(6, Scalar::from_int(1)));
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            f.fusion[((size_t)i * 6 + j) * 6 + find(compose(g[i], g[j]))] = 1;
        }
        for (int j = 0; j < 6; ++j)
            if (find(compose(g[i], g[j])) == 0) f.dual[i] = j;
    }
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

const AxiomCheck& find_check(const ValidationReport& rep, const std::string& name) {
    for (const auto& c : rep.checks)
        if (c.name == name) return c;
    throw std::runtime_error("missing axiom check " + name);
}

} // namespace

TEST_CASE("Fibonacci ring passes all six axioms") {
    auto rep = validate_fusion_ring(fibonacci_ring(golden_ratio()));
    CHECK(rep.ok);
    REQUIRE(rep.checks.size() == 6);
    for (const auto& c : rep.checks) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.pass);
    }
    CHECK(rep.notes.size() == 2);
}

TEST_CASE("Fibonacci ring with unit dims fails the homomorphism axiom at (1,1)") {
    auto rep = validate_fusion_ring(fibonacci_ring(Scalar::from_int(1)));
    CHECK(!rep.ok);
    const auto& bad = find_check(rep, "dims_homomorphism");
    CHECK(!bad.pass);
    CHECK(bad.detail.find("(1,1)") != std::string::npos);
    for (const char* name : {"unit", "involution", "rigidity", "associativity", "unit_dimension"})
        CHECK(find_check(rep, name).pass);
}

TEST_CASE("Ising and S3 rings validate") {
    CHECK(validate_fusion_ring(ising_ring()).ok);
    CHECK(validate_fusion_ring(s3_rep_ring()).ok);
    CHECK(validate_fusion_ring(s3_group_ring()).ok);
    CHECK(validate_fusion_ring(cyclic_rep_ring(4)).ok);
}

TEST_CASE("malformed shapes are rejected before axiom checks") {
    FusionRing f = fibonacci_ring(golden_ratio());
    f.dual.pop_back();
    CHECK_THROWS_AS(validate_fusion_ring(f), Error);

    FusionRing g = fibonacci_ring(golden_ratio());
    g.fusion.push_back(0);
    CHECK_THROWS_AS(validate_fusion_ring(g), Error);

    FusionRing h = fibonacci_ring(golden_ratio());
    h.fusion[3] = -1;
    CHECK_THROWS_AS(validate_fusion_ring(h), Error);
}

TEST_CASE("corrupting associativity is caught with indices") {
    FusionRing f = ising_ring();
    f.n(2, 2, 1) = 2;
    auto rep = validate_fusion_ring(f);
    CHECK(!rep.ok);
    const auto& assoc = find_check(rep, "associativity");
    CHECK(!assoc.pass);
    CHECK(!assoc.detail.empty());
}

TEST_CASE("fusion matrices realize left multiplication") {
    auto fib = fusion_matrices(fibonacci_ring(golden_ratio()));
    REQUIRE(fib.size() == 2);
    CHECK(fib[0].a == std::vector<long>{1, 0, 0, 1});
    CHECK(fib[1].a == std::vector<long>{0, 1, 1, 1});

    auto isg = fusion_matrices(ising_ring());
    CHECK(isg[0].a == std::vector<long>{1, 0, 0, 0, 1, 0, 0, 0, 1});
    CHECK(isg[2].a == std::vector<long>{0, 0, 1, 0, 0, 1, 1, 1, 0});
}

TEST_CASE("duality transposes fusion matrices") {
    for (const FusionRing& f : {fibonacci_ring(golden_ratio()), ising_ring(), s3_rep_ring(),
                                s3_group_ring(), cyclic_rep_ring(5)}) {
        auto mats = fusion_matrices(f);
        for (int i = 0; i < f.rank; ++i)
            for (int r = 0; r < f.rank; ++r)
                for (int c = 0; c < f.rank; ++c)
                    CHECK(mats[f.dual[i]].at(r, c) == mats[i].at(c, r));
    }
}

TEST_CASE("commutativity detection") {
    CHECK(is_commutative(fibonacci_ring(golden_ratio())));
    CHECK(is_commutative(ising_ring()));
    CHECK(is_commutative(s3_rep_ring()));
    CHECK(!is_commutative(s3_group_ring()));

    FusionRing f = s3_rep_ring();
    f.n(1, 2, 2) = 0;
    f.n(1, 2, 1) = 1;
    CHECK(!is_commutative(f));
}

TEST_CASE("global dimension of the bundled rings") {
    FusionRing triv = make_ring(1, {0}, {Scalar::from_int(1)});
    auto gd1 = global_dimension(triv);
    CHECK(gd1.value.exact());
    CHECK(gd1.value.cyc() == CycNumber::from_int(1));
    CHECK(gd1.nondegenerate);

    // 1 + phi^2 = 2 + phi = 3 + zeta5 + zeta5^4 = (5 + sqrt5)/2
    auto gdf = global_dimension(fibonacci_ring(golden_ratio()));
    CHECK(gdf.value.exact());
    CycNumber want = CycNumber::from_int(3) + CycNumber::root_of_unity(5, 1)
                     + CycNumber::root_of_unity(5, 4);
    CHECK(gdf.value.cyc() == want);
    CHECK(std::abs(gdf.value.embed().real() - (5.0 + std::sqrt(5.0)) / 2.0) <= 1e-9);
    CHECK(gdf.nondegenerate);

    auto gdi = global_dimension(ising_ring());
    CHECK(gdi.value.cyc() == CycNumber::from_int(4));

    CHECK(global_dimension(s3_rep_ring()).value.cyc() == CycNumber::from_int(6));
    CHECK(global_dimension(s3_group_ring()).value.cyc() == CycNumber::from_int(6));
}

TEST_CASE("semisimplicity in characteristic zero matches global dimension") {
    for (const FusionRing& f : {fibonacci_ring(golden_ratio()), ising_ring(), s3_rep_ring(),
                                s3_group_ring(), cyclic_rep_ring(2), cyclic_rep_ring(3)}) {
        bool ss = grothendieck_semisimple(f, FieldSpec{0});
        CHECK(ss == global_dimension(f).nondegenerate);
        CHECK(ss);
    }
}

TEST_CASE("characteristic p semisimplicity via the Frobenius kernel") {
    FusionRing z2 = cyclic_rep_ring(2);
    CHECK(grothendieck_semisimple(z2, FieldSpec{0}));
    CHECK(!grothendieck_semisimple(z2, FieldSpec{2}));
    CHECK(grothendieck_semisimple(z2, FieldSpec{3}));

    FusionRing z3 = cyclic_rep_ring(3);
    CHECK(!grothendieck_semisimple(z3, FieldSpec{3}));
    CHECK(grothendieck_semisimple(z3, FieldSpec{2}));

    // dim(C) mod p vanishes exactly when the ring degenerates: |Z/2| = 2, |Z/3| = 3.
    CHECK(global_dimension(z2).value.cyc() == CycNumber::from_int(2));
    CHECK(global_dimension(z3).value.cyc() == CycNumber::from_int(3));

    CHECK(grothendieck_semisimple(fibonacci_ring(golden_ratio()), FieldSpec{7}));
}

TEST_CASE("characteristic p with a non-commutative ring is unsupported") {
    CHECK_THROWS_AS(grothendieck_semisimple(s3_group_ring(), FieldSpec{3}), Error);
    try {
        grothendieck_semisimple(s3_group_ring(), FieldSpec{3});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrKind::computation);
    }
    CHECK_THROWS_AS(grothendieck_semisimple(cyclic_rep_ring(2), FieldSpec{4}), Error);
}

TEST_CASE("fusion ring JSON round trip") {
    for (const FusionRing& f : {ising_ring(), s3_group_ring()}) {
        FusionRing back = fusion_ring_from_json(fusion_ring_to_json(f));
        CHECK(back.rank == f.rank);
        CHECK(back.dual == f.dual);
        CHECK(back.fusion == f.fusion);
        CHECK(back.labels == f.labels);
        REQUIRE(back.dims.size() == f.dims.size());
        for (size_t i = 0; i < f.dims.size(); ++i) CHECK(Scalar::eq(back.dims[i], f.dims[i], 0.0));
    }
}

TEST_CASE("fusion ring JSON rejects malformed input") {
    nlohmann::json good = fusion_ring_to_json(ising_ring());

    nlohmann::json missing = good;
    missing.erase("dual");
    CHECK_THROWS_AS(fusion_ring_from_json(missing), Error);

    nlohmann::json negative = good;
    negative["fusion"][1][1][0] = -1;
    CHECK_THROWS_AS(fusion_ring_from_json(negative), Error);

    nlohmann::json ragged = good;
    ragged["fusion"][2].erase(2);
    CHECK_THROWS_AS(fusion_ring_from_json(ragged), Error);

    nlohmann::json badlabels = good;
    badlabels["labels"] = {"only-one"};
    CHECK_THROWS_AS(fusion_ring_from_json(badlabels), Error);

    try {
        fusion_ring_from_json(missing);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrKind::parse);
    }
}
