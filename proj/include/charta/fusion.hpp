#pragma once

#include <string>
#include <vector>

#include "charta/matrix.hpp"
#include "charta/scalar.hpp"

namespace charta {

// A based ring with non-negative integer structure constants N_{ij}^k on the
// basis {0..rank-1}, index 0 the unit, a duality involution, and a vector of
// pivotal dimensions. Values are immutable once built; all operations on them
// are pure.
struct FusionRing {
    int rank = 0;
    std::vector<std::string> labels;
    std::vector<int> dual;
    std::vector<long> fusion; // dense rank^3 tensor, N_{ij}^k at [(i*rank + j)*rank + k]
    std::vector<Scalar> dims;

    long n(int i, int j, int k) const {
        return fusion[((size_t)i * rank + j) * rank + k];
    }
    long& n(int i, int j, int k) {
        return fusion[((size_t)i * rank + j) * rank + k];
    }
};

struct AxiomCheck {
    std::string name;
    bool pass = false;
    std::string detail; // first counterexample location when failing
};

struct ValidationReport {
    bool ok = false;
    std::vector<AxiomCheck> checks;
    std::vector<std::string> notes;
};

// Checks the six ring axioms (unit, involution, rigidity, associativity,
// dimension homomorphism, unit dimension). Malformed tensor shapes throw
// before any axiom runs. Exact dims are compared exactly; float dims within tol.
ValidationReport validate_fusion_ring(const FusionRing& f, double tol = 1e-9);

// Left-multiplication matrices: (N_i)_{kj} = N_{ij}^k, so N_i applied to a
// coefficient column vector implements multiplication by basis element i.
std::vector<Matrix<long>> fusion_matrices(const FusionRing& f);

bool is_commutative(const FusionRing& f);

struct GlobalDimension {
    Scalar value;        // sum of d_i * d_{i*}
    bool nondegenerate;  // nonzero (exactly, or beyond tol for float dims)
};

GlobalDimension global_dimension(const FusionRing& f, double tol = 1e-9);

// Coefficient field for semisimplicity questions: p = 0 means characteristic
// zero, otherwise a prime.
struct FieldSpec {
    long p = 0;
};

// Characteristic 0: nondegeneracy of the regular trace form Tr(L_a L_b).
// Characteristic p (commutative rings only): triviality of the kernel of the
// iterated Frobenius map a -> a^(p^K), p^K >= rank, which equals the nilradical.
bool grothendieck_semisimple(const FusionRing& f, const FieldSpec& field);

} // namespace charta
