#include "charta/modular.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "charta/error.hpp"

namespace charta {

namespace {

constexpr double kShapeTol = 1e-9;

Eigen::MatrixXcd embed_matrix(const ModularDatum& m) {
    const int n = m.rank();
    if (n < 1) throw validation_error("modular datum must have rank at least 1");
    Eigen::MatrixXcd e(n, n);
    for (int i = 0; i < n; ++i) {
        if ((int)m.s[i].size() != n)
            throw validation_error("modular S-matrix must be square: row " + std::to_string(i) +
                                   " has length " + std::to_string(m.s[i].size()) + ", expected " +
                                   std::to_string(n));
        for (int j = 0; j < n; ++j) e(i, j) = m.s[i][j].embed();
    }
    return e;
}

// Symmetry, nonvanishing first row, and numerical invertibility; every later
// formula divides by s_{0r} or inverts S.
void require_modular_shape(const Eigen::MatrixXcd& e) {
    const int n = (int)e.rows();
    double scale = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) scale = std::max(scale, std::abs(e(i, j)));
    if (scale == 0) throw computation_error("not modular: S is the zero matrix");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(e(i, j) - e(j, i)) > kShapeTol * scale)
                throw computation_error("not modular: S is not symmetric at (" + std::to_string(i) +
                                        ", " + std::to_string(j) + ")");
    for (int j = 0; j < n; ++j)
        if (std::abs(e(0, j)) <= kShapeTol * scale)
            throw computation_error("not modular: s_{0," + std::to_string(j) +
                                    "} vanishes, so the column ratios are undefined");
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(e);
    const auto& sv = svd.singularValues();
    if (sv(n - 1) <= kShapeTol * n * sv(0))
        throw computation_error("not modular: S is numerically singular");
}

}  // namespace

ModularDatum modular_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("s"))
        throw parse_error("modular datum must be an object with an \"s\" matrix");
    const auto& js = j.at("s");
    if (!js.is_array() || js.empty())
        throw parse_error("modular \"s\" must be a non-empty array of rows");
    const size_t n = js.size();
    ModularDatum m;
    for (const auto& row : js) {
        if (!row.is_array() || row.size() != n)
            throw parse_error("modular \"s\" must be a square matrix");
        std::vector<Scalar> out;
        out.reserve(n);
        for (const auto& cell : row) out.push_back(Scalar::from_json(cell));
        m.s.push_back(std::move(out));
    }
    return m;
}

nlohmann::ordered_json modular_to_json(const ModularDatum& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : m.s) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const auto& c : row) r.push_back(c.to_json());
        rows.push_back(std::move(r));
    }
    nlohmann::ordered_json out;
    out["s"] = std::move(rows);
    return out;
}

FusionRing verlinde_fusion(const ModularDatum& m, double round_tol) {
    const Eigen::MatrixXcd e = embed_matrix(m);
    require_modular_shape(e);
    const int n = (int)e.rows();

    FusionRing f;
    f.rank = n;
    f.labels.resize(n);
    for (int i = 0; i < n; ++i) f.labels[i] = "X" + std::to_string(i);
    f.fusion.assign((size_t)n * n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Cplx v = 0;
                for (int r = 0; r < n; ++r) v += e(i, r) * e(j, r) * std::conj(e(k, r)) / e(0, r);
                const long c = std::lround(v.real());
                const double residual = std::abs(v - Cplx((double)c, 0));
                if (residual > round_tol) {
                    std::ostringstream os;
                    os << "not modular: fusion coefficient at (" << i << ", " << j << ", " << k
                       << ") is " << v.real();
                    if (v.imag() != 0) os << " + " << v.imag() << "i";
                    os << ", distance " << residual << " from the nearest integer";
                    throw computation_error(os.str());
                }
                if (c < 0)
                    throw computation_error("not modular: fusion coefficient at (" +
                                            std::to_string(i) + ", " + std::to_string(j) + ", " +
                                            std::to_string(k) + ") rounds to a negative integer");
                f.n(i, j, k) = c;
            }

    f.dual.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        int d = -1;
        for (int j = 0; j < n; ++j) {
            const long c = f.n(i, j, 0);
            if (c == 0) continue;
            if (c == 1 && d == -1)
                d = j;
            else
                throw computation_error("not modular: the coefficients N_{i j}^0 in row " +
                                        std::to_string(i) + " do not define a duality permutation");
        }
        if (d == -1)
            throw computation_error("not modular: the coefficients N_{i j}^0 in row " +
                                    std::to_string(i) + " do not define a duality permutation");
        f.dual[i] = d;
    }

    f.dims.clear();
    f.dims.reserve(n);
    for (int j = 0; j < n; ++j) f.dims.push_back(m.s[0][j] / m.s[0][0]);

    ValidationReport rep = validate_fusion_ring(f);
    if (!rep.ok) {
        std::ostringstream os;
        os << "not modular: the rounded fusion ring fails";
        for (const auto& c : rep.checks)
            if (!c.pass) os << " " << c.name;
        throw computation_error(os.str());
    }
    return f;
}

CharacterTable smatrix_chartable(const ModularDatum& m, double tol) {
    const FusionRing f = verlinde_fusion(m);
    const Eigen::MatrixXcd e = embed_matrix(m);
    const int n = f.rank;
    std::vector<std::vector<Cplx>> cols(n, std::vector<Cplx>(n));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i < n; ++i) cols[r][i] = e(i, r) / e(0, r);
    return assemble_table(f, cols, tol);
}

QHomReport check_q_homomorphism(const ModularDatum& m, double tol) {
    QHomReport rep;
    FusionRing f;
    Eigen::MatrixXcd e;
    try {
        e = embed_matrix(m);
        f = verlinde_fusion(m);
    } catch (const Error& err) {
        rep.pass = false;
        rep.max_residual = std::numeric_limits<double>::infinity();
        rep.notes.push_back(std::string("fusion reconstruction failed: ") + err.what());
        return rep;
    }
    const int n = f.rank;
    std::vector<std::vector<Cplx>> q(n, std::vector<Cplx>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) q[i][j] = e(i, j) / e(0, j);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int c = 0; c < n; ++c) {
                Cplx lhs = 0;
                for (int k = 0; k < n; ++k)
                    if (f.n(i, j, k) != 0) lhs += (double)f.n(i, j, k) * q[k][c];
                const double r = std::abs(lhs - q[i][c] * q[j][c]);
                if (r > rep.max_residual) {
                    rep.max_residual = r;
                    rep.arg_i = i;
                    rep.arg_j = j;
                }
            }
    rep.pass = rep.max_residual <= tol;
    if (!rep.pass)
        rep.notes.push_back("the row-ratio map fails multiplicativity at characters (" +
                            std::to_string(rep.arg_i) + ", " + std::to_string(rep.arg_j) + ")");
    return rep;
}

CrossCheckReport cross_check(const ModularDatum& m, double tol) {
    const CharacterTable a = smatrix_chartable(m, tol);
    const FusionRing f = verlinde_fusion(m);
    const CharacterTable b = compute_character_table(f, tol);
    const int n = f.rank;

    CrossCheckReport rep;
    rep.permutation.assign(n, -1);
    std::vector<char> used(n, 0);
    for (int r = 0; r < n; ++r) {
        int best = -1;
        double best_dev = std::numeric_limits<double>::infinity();
        for (int s = 0; s < n; ++s) {
            if (used[s]) continue;
            double dev = 0;
            for (int i = 0; i < n; ++i) dev = std::max(dev, std::abs(a.table[i][r] - b.table[i][s]));
            if (dev < best_dev) {
                best_dev = dev;
                best = s;
            }
        }
        if (best == -1 || best_dev > tol) {
            std::ostringstream os;
            os << "cross-check mismatch: S-matrix column " << r
               << " matches no eigenvector column within " << tol << " (closest differs by "
               << best_dev << ")";
            throw computation_error(os.str());
        }
        used[best] = 1;
        rep.permutation[r] = best;
        rep.max_residual = std::max(rep.max_residual, best_dev);
    }
    rep.pass = true;
    return rep;
}

}  // namespace charta
