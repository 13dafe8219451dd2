#include "charta/simuldiag.hpp"

#include <random>

#include "charta/error.hpp"

namespace charta {

namespace {

double maxnorm(const Eigen::MatrixXcd& m) {
    return m.cwiseAbs().maxCoeff();
}

} // namespace

std::vector<EigPair> simuldiag(const std::vector<Eigen::MatrixXcd>& mats,
                               double tol, int max_resample, uint64_t seed) {
    if (mats.empty()) throw computation_error("simuldiag: empty matrix list");
    const Eigen::Index n = mats[0].rows();
    for (const auto& m : mats)
        if (m.rows() != n || m.cols() != n)
            throw computation_error("simuldiag: matrices must be square and same size");

    for (size_t i = 0; i < mats.size(); ++i)
        for (size_t j = i + 1; j < mats.size(); ++j) {
            double bound = tol * maxnorm(mats[i]) * maxnorm(mats[j]);
            double dev = maxnorm(mats[i] * mats[j] - mats[j] * mats[i]);
            if (dev > std::max(bound, tol))
                throw computation_error("simuldiag: matrices " + std::to_string(i) + " and " +
                                        std::to_string(j) + " do not commute (deviation " +
                                        std::to_string(dev) + ")");
        }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(1, 1000);

    std::string last_failure = "no attempt";
    for (int attempt = 0; attempt <= max_resample; ++attempt) {
        Eigen::MatrixXcd combo = Eigen::MatrixXcd::Zero(n, n);
        for (const auto& m : mats) combo += std::complex<double>((double)coeff(rng), 0.0) * m;

        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(combo);
        if (es.info() != Eigen::Success) {
            last_failure = "eigensolver did not converge";
            continue;
        }
        const Eigen::MatrixXcd& V = es.eigenvectors();

        // A defective combination shows up as a (numerically) singular
        // eigenvector matrix; such a basis cannot separate joint eigenspaces.
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(V);
        double smin = svd.singularValues()(n - 1), smax = svd.singularValues()(0);
        if (!(smin > 1e-9 * (double)n * smax)) {
            last_failure = "eigenvector basis numerically singular";
            continue;
        }

        std::vector<EigPair> out((size_t)n);
        bool ok = true;
        for (Eigen::Index c = 0; c < n && ok; ++c) {
            Eigen::VectorXcd v = V.col(c);
            EigPair pair;
            pair.vec = v;
            double vnorm = v.cwiseAbs().maxCoeff();
            double vv = v.squaredNorm();
            for (const auto& m : mats) {
                std::complex<double> lam = (v.adjoint() * (m * v))(0, 0) / vv;
                double resid = (m * v - lam * v).cwiseAbs().maxCoeff();
                double bound = tol * std::max(1.0, maxnorm(m)) * std::max(1.0, vnorm);
                if (resid > bound) {
                    last_failure = "eigenvector residual " + std::to_string(resid) +
                                   " exceeds bound (eigenvalues collide)";
                    ok = false;
                    break;
                }
                pair.vals.push_back(lam);
            }
            out[(size_t)c] = std::move(pair);
        }
        if (ok) return out;
    }
    throw computation_error("simuldiag: degenerate family after resampling (" + last_failure +
                            "); the underlying algebra is not split semisimple");
}

} // namespace charta
