#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <vector>

namespace charta {

struct EigPair {
    Eigen::VectorXcd vec;
    std::vector<std::complex<double>> vals; // one Rayleigh-quotient eigenvalue per input matrix
};

// Simultaneous diagonalization of a commuting family: eigen-decompose a
// random integer-coefficient combination, then read off each matrix's
// eigenvalue on every eigenvector as a Rayleigh quotient. Resamples the
// combination (up to max_resample times) whenever collisions leave the
// eigenvectors unusable; persistent failure means the family is defective.
std::vector<EigPair> simuldiag(const std::vector<Eigen::MatrixXcd>& mats,
                               double tol = 1e-9,
                               int max_resample = 8,
                               uint64_t seed = 0);

} // namespace charta
