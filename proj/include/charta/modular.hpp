#pragma once

#include <json.hpp>

#include "charta/chartable.hpp"
#include "charta/fusion.hpp"
#include "charta/scalar.hpp"

namespace charta {

// Modular input data: a symmetric invertible S-matrix with unit index 0,
// accepted in whatever normalization the file provides.
struct ModularDatum {
    std::vector<std::vector<Scalar>> s;
    int rank() const { return (int)s.size(); }
};

ModularDatum modular_from_json(const nlohmann::json& j);
nlohmann::ordered_json modular_to_json(const ModularDatum& m);

// Fusion coefficients N_{ij}^k = sum_r s_{ir} s_{jr} conj(s_{kr}) / s_{0r},
// rounded to non-negative integers; duality read off N_{ij}^0 and dimensions
// as s_{0j}/s_{00}. Rounding residual above round_tol means the datum is not
// modular.
FusionRing verlinde_fusion(const ModularDatum& m, double round_tol = 1e-6);

// Character table (s_{ij}/d_j), canonicalized with the chartable conventions.
CharacterTable smatrix_chartable(const ModularDatum& m, double tol = 1e-9);

struct QHomReport {
    double max_residual = 0;
    int arg_i = -1, arg_j = -1;
    bool pass = false;
    std::vector<std::string> notes;
};

// Verifies that the row-ratio map chi_i -> (s_{ij}/d_j)_j turns the character
// product into the componentwise product: Q(chi_i * chi_j) = Q(chi_i) . Q(chi_j).
QHomReport check_q_homomorphism(const ModularDatum& m, double tol = 1e-9);

struct CrossCheckReport {
    std::vector<int> permutation; // column of the eigenvector table matching each ratio column
    double max_residual = 0;
    bool pass = false;
};

// Matches the S-matrix table against the eigenvector-pipeline table of the
// Verlinde ring, column by column.
CrossCheckReport cross_check(const ModularDatum& m, double tol = 1e-9);

} // namespace charta
