#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "charta/cyclotomic.hpp"
#include "charta/fusion.hpp"
#include "charta/matrix.hpp"
#include "charta/primefield.hpp"

namespace charta {

// Module over a Hopf algebra, given by the matrix of every basis element:
// action[i] is the dim x dim row-major matrix of b_i.
template <class K>
struct HModule {
    int dim = 0;
    std::vector<std::vector<K>> action;
};

// Finite-dimensional Hopf algebra by structure constants over an exact field:
// K = CycNumber works over Q(zeta_conductor) and K = Fp over a prime field.
//   b_i b_j = sum_k mult[(i n + j) n + k] b_k
//   Delta(b_i) = sum_{jk} comult[(i n + j) n + k] b_j (x) b_k
//   S(b_j) = sum_i antipode[i n + j] b_i
template <class K>
struct HopfAlgebra {
    int dim = 0;
    int conductor = 1; // CycNumber kernel only; 1 means plain rationals
    long p = 0;        // Fp kernel only
    std::vector<K> mult;
    std::vector<K> unit;
    std::vector<K> comult;
    std::vector<K> counit;
    std::vector<K> antipode;
    std::optional<std::vector<K>> pivotal; // claimed pivotal element, verified on demand
    std::vector<HModule<K>> modules;

    const K& m(int i, int j, int k) const { return mult[((size_t)i * dim + j) * dim + k]; }
    K& m(int i, int j, int k) { return mult[((size_t)i * dim + j) * dim + k]; }
    const K& d(int i, int j, int k) const { return comult[((size_t)i * dim + j) * dim + k]; }
    K& d(int i, int j, int k) { return comult[((size_t)i * dim + j) * dim + k]; }
    const K& s(int i, int j) const { return antipode[(size_t)i * dim + j]; }
    K& s(int i, int j) { return antipode[(size_t)i * dim + j]; }

    K zero() const;
    K one() const;
};

using HopfQ = HopfAlgebra<CycNumber>;
using HopfP = HopfAlgebra<Fp>;
using HopfAny = std::variant<HopfQ, HopfP>;

template <>
inline CycNumber HopfAlgebra<CycNumber>::zero() const { return CycNumber(conductor); }
template <>
inline CycNumber HopfAlgebra<CycNumber>::one() const {
    return CycNumber::from_int(1, conductor);
}
template <>
inline Fp HopfAlgebra<Fp>::zero() const { return Fp(p, 0); }
template <>
inline Fp HopfAlgebra<Fp>::one() const { return Fp(p, 1); }

// Exact check of every axiom: associativity, unit, coassociativity, counit,
// bialgebra compatibility, and both antipode laws. Failures pinpoint the first
// offending basis indices.
template <class K>
ValidationReport validate_hopf(const HopfAlgebra<K>& h);

// Exact basis of {f in H* : f(b_i b_j) = f(b_j S^2(b_i)) for all i, j}, the
// class functions.
template <class K>
std::vector<std::vector<K>> class_functions(const HopfAlgebra<K>& h);

// Exact basis of {a : b_i a = a b_i for all i}.
template <class K>
std::vector<std::vector<K>> center(const HopfAlgebra<K>& h);

// Convolution product on H*: (f * g)(b_i) = sum_{jk} Delta_i^{jk} f(b_j) g(b_k).
template <class K>
std::vector<K> convolution(const HopfAlgebra<K>& h, const std::vector<K>& f,
                           const std::vector<K>& g);

// Product of two elements written in coordinates.
template <class K>
std::vector<K> algebra_product(const HopfAlgebra<K>& h, const std::vector<K>& a,
                               const std::vector<K>& b);

template <class K>
struct IntegralSpaces {
    std::vector<std::vector<K>> left;        // {t : a t = eps(a) t}
    std::vector<std::vector<K>> right;       // {t : t a = eps(a) t}
    std::vector<std::vector<K>> categorical; // left integrals in the center
    bool unimodular_algebra = false;         // left and right spaces coincide
    bool unimodular_category = false;        // categorical space is nonzero
};

template <class K>
IntegralSpaces<K> integrals(const HopfAlgebra<K>& h);

template <class K>
struct CointegralSpaces {
    std::vector<std::vector<K>> right;        // {lam : a_(1) <lam, a_(2)> = <lam, a> 1}
    std::vector<std::vector<K>> ad_invariant; // {lam : <lam, h_(1) a S(h_(2))> = eps(h) <lam, a>}
    std::vector<std::vector<K>> categorical;  // intersection of the two
};

template <class K>
CointegralSpaces<K> cointegrals(const HopfAlgebra<K>& h);

// Grouplike g with S^2 = conjugation by g. Enumerates grouplikes exactly:
// basis-aligned candidates closed under multiplication always; for rational
// coefficient fields additionally the complete character enumeration of the
// dual algebra. Empty result means no pivotal structure was found.
template <class K>
std::vector<std::vector<K>> pivotal_elements(const HopfAlgebra<K>& h);

// Exact test of the pivotal axioms for one candidate vector.
template <class K>
bool is_pivotal(const HopfAlgebra<K>& h, const std::vector<K>& g);

// Exact test of Delta(g) = g (x) g and eps(g) = 1.
template <class K>
bool is_grouplike(const HopfAlgebra<K>& h, const std::vector<K>& g);

// Exact list of all grouplike elements found by the enumeration backing
// pivotal_elements (complete over rational coefficient fields).
template <class K>
std::vector<std::vector<K>> grouplike_elements(const HopfAlgebra<K>& h);

// Representation axioms of one module, checked exactly.
template <class K>
ValidationReport validate_module(const HopfAlgebra<K>& h, const HModule<K>& x);

// Tensor product module through Delta.
template <class K>
HModule<K> tensor_module(const HopfAlgebra<K>& h, const HModule<K>& x, const HModule<K>& y);

// Internal character <ch(X), a> = Trace_X(g a) for a pivotal element g.
template <class K>
std::vector<K> internal_character(const HopfAlgebra<K>& h, const std::vector<K>& g,
                                  const HModule<K>& x);

struct CharacterLawReport {
    bool multiplicative = false; // ch(X (x) Y) = ch(X) * ch(Y) for all pairs
    int fail_i = -1, fail_j = -1;
    bool independent = false;        // the listed characters are linearly independent
    bool in_class_functions = false; // every ch lies in the class-function space
    bool pass = false;
    std::vector<std::string> notes;
};

// simples = true asserts the modules are pairwise non-isomorphic simples, so
// independence failure is reported as a law violation rather than skipped.
template <class K>
CharacterLawReport check_character_laws(const HopfAlgebra<K>& h, const std::vector<K>& g,
                                        const std::vector<HModule<K>>& modules, bool simples);

template <class K>
struct FourierPair {
    std::vector<K> cointegral; // lambda, a categorical cointegral
    std::vector<K> integral;   // Lambda, the categorical integral with <lambda, Lambda> = 1
};

// Canonical normalized pair for the Fourier theory. Throws computation_error
// when H is not unimodular (either categorical space is zero) or the pairing
// <lambda, Lambda> vanishes so no normalization exists.
template <class K>
FourierPair<K> fourier_pair(const HopfAlgebra<K>& h);

// Fourier transform F_lambda(a) = lambda <- S^{-1}(a), a functional on H.
template <class K>
std::vector<K> fourier(const HopfAlgebra<K>& h, const std::vector<K>& lambda,
                       const std::vector<K>& a);

// Inverse transform F^{-1}(f) = <f, Lambda_(2)> Lambda_(1), an element of H.
template <class K>
std::vector<K> fourier_inv(const HopfAlgebra<K>& h, const std::vector<K>& integral,
                           const std::vector<K>& f);

template <class K>
struct RadfordReport {
    K trace;    // trace of a -> S^2(a_(1)) <f, a_(2)>
    K expected; // <f, Lambda> <lambda, 1>
    bool pass = false;
};

template <class K>
RadfordReport<K> radford_check(const HopfAlgebra<K>& h, const std::vector<K>& lambda,
                               const std::vector<K>& integral, const std::vector<K>& f);

// <eps, Lambda>; nonzero exactly when H-mod is semisimple, for unimodular H.
template <class K>
K maschke_indicator(const HopfAlgebra<K>& h, const std::vector<K>& integral);

// JSON wire format:
// {"dim": n, "field": {"type": "rational"} | {"type": "cyclotomic", "conductor": N}
//                   | {"type": "prime", "p": p},
//  "mult": [[i, j, k, literal] ...] sparse, "unit": [literal ...],
//  "comult": [[i, j, k, literal] ...] sparse, "counit": [literal ...],
//  "antipode": [[literal ...] ...] dense rows,
//  "pivotal": optional [literal ...],
//  "modules": optional [{"dim": d, "action": [matrix per basis element]} ...]}
// Exact literals only: integers, "p/q" strings, or {"conductor", "coeffs"}
// objects over cyclotomic fields; integers over prime fields.
HopfAny hopf_from_json(const nlohmann::json& j);
nlohmann::ordered_json hopf_to_json(const HopfAny& h);

} // namespace charta
