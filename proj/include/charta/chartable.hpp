#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "charta/cyclotomic.hpp"
#include "charta/fusion.hpp"

namespace charta {

using Cplx = std::complex<double>;

// Character table of a commutative split-semisimple based ring: entry (i, r)
// is the value of the i-th irreducible character on the r-th class element.
// Column 0 is the dimension homomorphism; the rest are ordered by class size
// ascending with lexicographic tie-breaks, so equal inputs give equal tables.
struct CharacterTable {
    std::vector<std::vector<Cplx>> table; // [character i][class r]
    std::vector<Cplx> class_sizes;
    std::vector<int> ordering; // ordering[r] = position of canonical column r in the raw eigenvector list
    double tol = 1e-9;
    // Best-effort exact readings of the float entries, validated against the
    // rows' characteristic polynomials; the floats stay authoritative.
    std::vector<std::vector<std::optional<CycNumber>>> exact_hints;

    int rank() const { return (int)table.size(); }
    nlohmann::ordered_json to_json() const;
};

// Coefficient vector in the character basis {chi_0..chi_m} of class functions.
using ClassFunctionVector = std::vector<Cplx>;
// Coefficient vector in the dual idempotent basis {e_0..e_m} of the
// adjoint-algebra center.
using CentralElementVector = std::vector<Cplx>;

CharacterTable compute_character_table(const FusionRing& f, double tol = 1e-9, uint64_t seed = 0);

// Canonicalizes raw joint-eigenvalue columns (raw_columns[r][i] = value of
// character i on class r) into a CharacterTable. Shared by the fusion-matrix
// eigenvector pipeline and the S-matrix ratio pipeline.
CharacterTable assemble_table(const FusionRing& f, const std::vector<std::vector<Cplx>>& raw_columns,
                              double tol);

// Class sizes recomputed from the table through the codegree sums
// |C_r| = dim(C) / sum_i <chi_i, g_r><chi_i*, g_r>.
std::vector<Cplx> class_sizes(const CharacterTable& t, const FusionRing& f);

// Primitive idempotents of the class-function algebra in the character basis:
// f_r = (|C_r|/dim C) sum_i <chi_i*, g_r> chi_i.
std::vector<ClassFunctionVector> idempotents(const CharacterTable& t, const FusionRing& f);

// Product of class functions through the fusion coefficients:
// (u * v)_k = sum_{ij} u_i v_j N_{ij}^k.
ClassFunctionVector cf_product(const FusionRing& f, const ClassFunctionVector& u,
                               const ClassFunctionVector& v);

struct OrthogonalityReport {
    double max_first = 0;        // rows against rows
    int first_i = -1, first_j = -1;
    double max_second = 0;       // columns against columns
    int second_r = -1, second_s = -1;
    double max_change_of_basis = 0; // chi_i = sum_r <chi_i, g_r> f_r
    bool pass = false;
};

OrthogonalityReport verify_orthogonality(const CharacterTable& t, const FusionRing& f, double tol);

struct CanonicalElements {
    CentralElementVector integral;      // e_0
    ClassFunctionVector cointegral;     // coefficients d_i* / dim C
    std::vector<CentralElementVector> class_sums; // class averages g_r in the e-basis
    double pairing_residual = 0; // max |<chi_i, g_r> recovered - table entry|
};

CanonicalElements canonical_elements(const CharacterTable& t, const FusionRing& f);

struct IntegralityReport {
    double max_residual = 0; // normalized characteristic-polynomial residual
    bool pass = false;
    std::vector<std::string> notes;
};

// Every table entry in row i must be a root of the characteristic polynomial
// of the integer matrix N_i, witnessing algebraic integrality.
IntegralityReport integrality_check(const CharacterTable& t, const FusionRing& f, double tol);

// Exact characteristic polynomial, constant term first, of a rational matrix.
std::vector<Rational> charpoly(const Matrix<Rational>& m);

} // namespace charta
