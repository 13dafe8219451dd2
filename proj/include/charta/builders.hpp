#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "charta/chartable.hpp"
#include "charta/fusion.hpp"
#include "charta/hopf.hpp"
#include "charta/modular.hpp"

namespace charta {

// Finite group by its multiplication table; index 0 is the identity.
struct CayleyTable {
    int order = 0;
    std::vector<std::vector<int>> table; // table[i][j] = index of g_i g_j
};

// Group axioms checked exactly; throws validation_error with the first
// counterexample.
void check_cayley(const CayleyTable& c);

CayleyTable cayley_from_json(const nlohmann::json& j);
nlohmann::ordered_json cayley_to_json(const CayleyTable& c);

// Coefficient field selector: p != 0 picks F_p, otherwise Q(zeta_conductor)
// with conductor 1 meaning the plain rationals.
struct HopfField {
    long p = 0;
    int conductor = 1;
};

// Group algebra kG with Delta(g) = g (x) g, eps(g) = 1, S(g) = g^{-1}.
HopfAny group_algebra(const CayleyTable& c, const HopfField& field);

struct ConjugacyData {
    std::vector<std::vector<int>> classes; // identity class first, then by first appearance
    // Class-sum algebra packaged in the FusionRing container: basis = class
    // sums, coefficients = non-negative integer class constants, dims = class
    // sizes (the distinguished homomorphism). Not a fusion ring in the strict
    // sense; consumed by the character-table engine directly.
    FusionRing class_ring;
};

ConjugacyData conjugacy_data(const CayleyTable& c);

// Classical character table of the group: rows = irreducible characters
// (trivial first, then by degree and entry order), columns = conjugacy
// classes in conjugacy_data order. Eigenvalues of the class-sum matrices are
// converted through omega_{ir} = |C_r| chi_i(C_r) / chi_i(1), with chi_i(1)
// recovered as an integer square root.
CharacterTable burnside_chartable(const CayleyTable& c, double tol = 1e-9, uint64_t seed = 0);

// Taft algebra on basis {g^a x^b : 0 <= a, b < n} over Q(zeta_n) with
// omega = zeta_n^omega_power: g^n = 1, x^n = 0, g x = omega x g,
// Delta(x) = x (x) g + 1 (x) x, S(x) = -x g^{-1}. Ships its n one-dimensional
// simple modules and the pivotal element g.
HopfQ taft_algebra(int n, int omega_power = 1);

// Drinfeld double on the basis {f_alpha (x) b_a} of H* (x) H; the dual copy
// carries the opposite coproduct. Requires an invertible antipode.
template <class K>
HopfAlgebra<K> drinfeld_double(const HopfAlgebra<K>& h);

// 27-dimensional pointed Hopf algebra over Q(zeta_3) whose squared antipode
// is not inner by any grouplike: group Z/3 = <g> and two skew-primitives with
// x_i^3 = 0, g x_i = zeta_3 x_i g, x_1 x_2 = zeta_3 x_2 x_1.
HopfQ nonpivotal_fixture();

struct Fixtures {
    std::vector<std::pair<std::string, FusionRing>> rings;
    std::vector<std::pair<std::string, ModularDatum>> modular;
    std::vector<std::pair<std::string, CayleyTable>> cayley;
    std::vector<std::pair<std::string, HopfAny>> hopf;
};

// Every bundled object, constructed fresh: fusion rings (fibonacci, ising,
// rep rings of Z/2..Z/6, S3, Q8, and the non-commutative S3 group ring),
// exact modular data for fibonacci and ising, Cayley tables, and the Hopf
// fixtures (Taft 2/3/4, kZ/3 with its simples, kS3, the doubles of kZ/2 and
// of the Taft algebra at n = 2, and the 27-dimensional pivotal-free algebra).
Fixtures fixtures();

} // namespace charta
