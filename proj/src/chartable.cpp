#include "charta/chartable.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "charta/error.hpp"
#include "charta/simuldiag.hpp"

namespace charta {

std::vector<Rational> charpoly(const Matrix<Rational>& m) {
    if (m.rows != m.cols) throw validation_error("characteristic polynomial needs a square matrix");
    int n = m.rows;
    // Faddeev–LeVerrier: M_1 = A, c_{n-1} = -tr M_1,
    // M_k = A(M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k.
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    Matrix<Rational> mk = m;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            Matrix<Rational> shifted = mk;
            for (int i = 0; i < n; ++i) shifted.at(i, i) += c[n - k + 1];
            mk = m * shifted;
        }
        Rational tr(0);
        for (int i = 0; i < n; ++i) tr += mk.at(i, i);
        c[n - k] = -tr / k;
    }
    return c;
}

namespace {

double cabs(const Cplx& z) { return std::abs(z); }

// Smallest-denominator rational within rtol of x.
std::optional<Rational> small_rational(double x, long maxden, double rtol) {
    for (long q = 1; q <= maxden; ++q) {
        double pf = std::round(x * (double)q);
        if (std::abs(pf) > 1e15) return std::nullopt;
        long p = (long)pf;
        if (std::abs(x - (double)p / (double)q) <= rtol) return rat(p, q);
    }
    return std::nullopt;
}

double poly_residual(const std::vector<Rational>& poly, const Cplx& z) {
    Cplx acc(0, 0);
    double scale = 1.0, zp = 1.0;
    for (int i = (int)poly.size() - 1; i >= 0; --i) acc = acc * z + to_double(poly[i]);
    for (const Rational& c : poly) {
        scale += std::abs(to_double(c)) * zp;
        zp *= std::max(1.0, cabs(z));
    }
    return cabs(acc) / scale;
}

// Best-effort exact reading of one float entry: a small rational multiple of
// 1, of a root of unity, or of zeta^k +- zeta^-k, validated first against the
// float and then against the row's characteristic polynomial.
std::optional<CycNumber> recognize_entry(const Cplx& z, const std::vector<Rational>& poly,
                                         double tol) {
    const double rtol = 1e-8;
    const double match = std::max(rtol, tol) * std::max(1.0, cabs(z));
    const double polytol = std::max(1e-7, tol);
    auto accept = [&](const CycNumber& cand) -> std::optional<CycNumber> {
        if (cabs(cand.embed() - z) > match) return std::nullopt;
        if (poly_residual(poly, cand.embed()) > polytol) return std::nullopt;
        return cand;
    };

    if (std::abs(z.imag()) <= rtol) {
        if (auto q = small_rational(z.real(), 16, rtol))
            if (auto got = accept(CycNumber::from_rational(*q))) return got;
    }
    for (int n = 3; n <= 24; ++n) {
        for (int k = 1; k < n; ++k) {
            Cplx base = std::polar(1.0, 2 * M_PI * k / n);
            Cplx ratio = z / base;
            if (std::abs(ratio.imag()) <= rtol) {
                if (auto q = small_rational(ratio.real(), 16, rtol)) {
                    if (*q == 0) continue;
                    CycNumber cand = CycNumber::from_rational(*q, n) * CycNumber::root_of_unity(n, k);
                    if (auto got = accept(cand)) return got;
                }
            }
            if (2 * k != n && std::abs(z.imag()) <= rtol) {
                double cosbase = 2 * std::cos(2 * M_PI * k / n);
                if (std::abs(cosbase) > 1e-6) {
                    if (auto q = small_rational(z.real() / cosbase, 16, rtol)) {
                        if (*q == 0) continue;
                        CycNumber cand = CycNumber::from_rational(*q, n)
                                         * (CycNumber::root_of_unity(n, k) + CycNumber::root_of_unity(n, n - k));
                        if (auto got = accept(cand)) return got;
                    }
                }
            }
            if (std::abs(z.real()) <= rtol && std::abs(z.imag()) > rtol) {
                double sinbase = 2 * std::sin(2 * M_PI * k / n);
                if (std::abs(sinbase) > 1e-6) {
                    if (auto q = small_rational(z.imag() / sinbase, 16, rtol)) {
                        if (*q == 0) continue;
                        CycNumber cand = CycNumber::from_rational(*q, n)
                                         * (CycNumber::root_of_unity(n, k) - CycNumber::root_of_unity(n, n - k));
                        if (auto got = accept(cand)) return got;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

// Three-way epsilon comparison on (real, imaginary) pairs.
int cplx_cmp(const Cplx& a, const Cplx& b, double eps) {
    if (a.real() < b.real() - eps) return -1;
    if (a.real() > b.real() + eps) return 1;
    if (a.imag() < b.imag() - eps) return -1;
    if (a.imag() > b.imag() + eps) return 1;
    return 0;
}

std::vector<Cplx> sizes_from_columns(const FusionRing& f, const std::vector<std::vector<Cplx>>& cols,
                                     const Cplx& dimc) {
    int m = f.rank;
    std::vector<Cplx> sizes((size_t)cols.size());
    for (size_t r = 0; r < cols.size(); ++r) {
        Cplx den(0, 0);
        for (int i = 0; i < m; ++i) den += cols[r][i] * cols[r][f.dual[i]];
        if (cabs(den) < 1e-9)
            throw computation_error("inconsistent character table: vanishing codegree denominator");
        sizes[r] = dimc / den;
    }
    return sizes;
}

} // namespace

CharacterTable compute_character_table(const FusionRing& f, double tol, uint64_t seed) {
    auto rep = validate_fusion_ring(f, tol);
    if (!rep.ok) {
        std::ostringstream os;
        os << "fusion ring fails validation:";
        for (const auto& c : rep.checks)
            if (!c.pass) os << " [" << c.name << "] " << c.detail;
        throw validation_error(os.str());
    }
    if (!is_commutative(f))
        throw computation_error("character table is defined only for commutative rings");
    if (!grothendieck_semisimple(f, FieldSpec{0}))
        throw computation_error("character table is defined only for semisimple rings "
                                "(regular trace form is degenerate)");

    int m = f.rank;
    auto nmats = fusion_matrices(f);
    std::vector<Eigen::MatrixXcd> cmats;
    cmats.reserve(m);
    for (const auto& nm : nmats) {
        Eigen::MatrixXcd cm(m, m);
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c) cm(r, c) = (double)nm.at(r, c);
        cmats.push_back(std::move(cm));
    }
    auto pairs = simuldiag(cmats, tol, 8, seed);

    std::vector<std::vector<Cplx>> cols(m, std::vector<Cplx>(m));
    for (int r = 0; r < m; ++r)
        for (int i = 0; i < m; ++i) cols[r][i] = pairs[r].vals[i];
    return assemble_table(f, cols, tol);
}

CharacterTable assemble_table(const FusionRing& f, const std::vector<std::vector<Cplx>>& raw_columns,
                              double tol) {
    int m = f.rank;
    if ((int)raw_columns.size() != m)
        throw computation_error("expected one eigenvalue column per basis element");
    std::vector<std::vector<Cplx>> cols = raw_columns;

    std::vector<Cplx> dvec(m);
    double dmax = 1.0;
    for (int i = 0; i < m; ++i) {
        dvec[i] = f.dims[i].embed();
        dmax = std::max(dmax, cabs(dvec[i]));
    }
    int dimcol = -1;
    double best = 1e300;
    for (int r = 0; r < m; ++r) {
        double dev = 0;
        for (int i = 0; i < m; ++i) dev = std::max(dev, cabs(cols[r][i] - dvec[i]));
        if (dev < best) {
            best = dev;
            dimcol = r;
        }
    }
    if (best > 1e-6 * dmax)
        throw computation_error("no eigenvalue column matches the dimension homomorphism");
    cols[dimcol] = dvec;

    Cplx dimc = global_dimension(f, tol).value.embed();
    std::vector<Cplx> rawsizes = sizes_from_columns(f, cols, dimc);

    const double eps = 1e-6;
    std::vector<int> rest;
    for (int r = 0; r < m; ++r)
        if (r != dimcol) rest.push_back(r);
    std::sort(rest.begin(), rest.end(), [&](int a, int b) {
        int c = cplx_cmp(rawsizes[a], rawsizes[b], eps);
        if (c != 0) return c < 0;
        for (int i = 1; i < m; ++i) {
            c = cplx_cmp(cols[a][i], cols[b][i], eps);
            if (c != 0) return c < 0;
        }
        return a < b;
    });

    CharacterTable t;
    t.tol = tol;
    t.ordering.push_back(dimcol);
    for (int r : rest) t.ordering.push_back(r);
    t.table.assign(m, std::vector<Cplx>(m));
    for (int r = 0; r < m; ++r)
        for (int i = 0; i < m; ++i) t.table[i][r] = cols[t.ordering[r]][i];

    for (int r = 0; r < m; ++r) {
        if (cabs(t.table[0][r] - Cplx(1, 0)) > 1e-6)
            throw computation_error("inconsistent character table: unit row is not all ones");
        t.table[0][r] = Cplx(1, 0);
    }

    t.class_sizes = sizes_from_columns(f, [&] {
        std::vector<std::vector<Cplx>> bycol(m, std::vector<Cplx>(m));
        for (int r = 0; r < m; ++r)
            for (int i = 0; i < m; ++i) bycol[r][i] = t.table[i][r];
        return bycol;
    }(), dimc);
    for (const Cplx& s : t.class_sizes)
        if (cabs(s) <= tol)
            throw computation_error("inconsistent character table: vanishing class size");
    Cplx total(0, 0);
    for (const Cplx& s : t.class_sizes) total += s;
    if (cabs(total - dimc) > 1e-6 * std::max(1.0, cabs(dimc)))
        throw computation_error("inconsistent character table: class sizes do not sum to the dimension");

    auto nmats = fusion_matrices(f);
    std::vector<std::vector<Rational>> polys(m);
    for (int i = 0; i < m; ++i) {
        Matrix<Rational> qm(m, m, Rational(0));
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c) qm.at(r, c) = Rational(nmats[i].at(r, c));
        polys[i] = charpoly(qm);
    }
    t.exact_hints.assign(m, std::vector<std::optional<CycNumber>>(m));
    for (int i = 0; i < m; ++i)
        for (int r = 0; r < m; ++r) {
            if (i == 0) {
                t.exact_hints[i][r] = CycNumber::from_int(1);
            } else if (r == 0 && f.dims[i].exact()) {
                t.exact_hints[i][r] = f.dims[i].cyc();
            } else {
                t.exact_hints[i][r] = recognize_entry(t.table[i][r], polys[i], tol);
            }
        }
    return t;
}

std::vector<Cplx> class_sizes(const CharacterTable& t, const FusionRing& f) {
    int m = t.rank();
    Cplx dimc = global_dimension(f).value.embed();
    std::vector<std::vector<Cplx>> bycol(m, std::vector<Cplx>(m));
    for (int r = 0; r < m; ++r)
        for (int i = 0; i < m; ++i) bycol[r][i] = t.table[i][r];
    return sizes_from_columns(f, bycol, dimc);
}

std::vector<ClassFunctionVector> idempotents(const CharacterTable& t, const FusionRing& f) {
    int m = t.rank();
    Cplx dimc = global_dimension(f).value.embed();
    std::vector<ClassFunctionVector> out(m, ClassFunctionVector(m));
    for (int r = 0; r < m; ++r)
        for (int i = 0; i < m; ++i)
            out[r][i] = t.class_sizes[r] / dimc * t.table[f.dual[i]][r];
    return out;
}

ClassFunctionVector cf_product(const FusionRing& f, const ClassFunctionVector& u,
                               const ClassFunctionVector& v) {
    int m = f.rank;
    ClassFunctionVector out(m, Cplx(0, 0));
    for (int i = 0; i < m; ++i) {
        if (u[i] == Cplx(0, 0)) continue;
        for (int j = 0; j < m; ++j) {
            if (v[j] == Cplx(0, 0)) continue;
            for (int k = 0; k < m; ++k) {
                long c = f.n(i, j, k);
                if (c != 0) out[k] += u[i] * v[j] * (double)c;
            }
        }
    }
    return out;
}

OrthogonalityReport verify_orthogonality(const CharacterTable& t, const FusionRing& f, double tol) {
    int m = t.rank();
    Cplx dimc = global_dimension(f).value.embed();
    OrthogonalityReport rep;

    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Cplx s(0, 0);
            for (int r = 0; r < m; ++r)
                s += t.class_sizes[r] / dimc * t.table[i][r] * t.table[f.dual[j]][r];
            double resid = cabs(s - (i == j ? Cplx(1, 0) : Cplx(0, 0)));
            if (resid > rep.max_first) {
                rep.max_first = resid;
                rep.first_i = i;
                rep.first_j = j;
            }
        }

    for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s) {
            Cplx v(0, 0);
            for (int i = 0; i < m; ++i)
                v += t.class_sizes[r] / dimc * t.table[i][r] * t.table[f.dual[i]][s];
            double resid = cabs(v - (r == s ? Cplx(1, 0) : Cplx(0, 0)));
            if (resid > rep.max_second) {
                rep.max_second = resid;
                rep.second_r = r;
                rep.second_s = s;
            }
        }

    auto fr = idempotents(t, f);
    for (int i = 0; i < m; ++i) {
        std::vector<Cplx> acc(m, Cplx(0, 0));
        for (int r = 0; r < m; ++r)
            for (int k = 0; k < m; ++k) acc[k] += t.table[i][r] * fr[r][k];
        for (int k = 0; k < m; ++k) {
            double resid = cabs(acc[k] - (k == i ? Cplx(1, 0) : Cplx(0, 0)));
            rep.max_change_of_basis = std::max(rep.max_change_of_basis, resid);
        }
    }

    rep.pass = rep.max_first <= tol && rep.max_second <= tol && rep.max_change_of_basis <= tol;
    return rep;
}

CanonicalElements canonical_elements(const CharacterTable& t, const FusionRing& f) {
    int m = t.rank();
    Cplx dimc = global_dimension(f).value.embed();
    CanonicalElements out;
    out.integral.assign(m, Cplx(0, 0));
    out.integral[0] = Cplx(1, 0);

    out.cointegral.assign(m, Cplx(0, 0));
    for (int i = 0; i < m; ++i) out.cointegral[i] = f.dims[f.dual[i]].embed() / dimc;

    auto a = idempotents(t, f);
    out.class_sums.assign(m, CentralElementVector(m, Cplx(0, 0)));
    for (int r = 0; r < m; ++r)
        for (int i = 0; i < m; ++i)
            out.class_sums[r][f.dual[i]] += a[r][i] * dimc / f.dims[i].embed() / t.class_sizes[r];

    for (int r = 0; r < m; ++r)
        for (int i = 0; i < m; ++i) {
            Cplx recovered = out.class_sums[r][i] * f.dims[i].embed();
            out.pairing_residual = std::max(out.pairing_residual, cabs(recovered - t.table[i][r]));
        }
    return out;
}

IntegralityReport integrality_check(const CharacterTable& t, const FusionRing& f, double tol) {
    int m = t.rank();
    auto nmats = fusion_matrices(f);
    IntegralityReport rep;
    for (int i = 0; i < m; ++i) {
        Matrix<Rational> qm(m, m, Rational(0));
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c) qm.at(r, c) = Rational(nmats[i].at(r, c));
        auto poly = charpoly(qm);
        for (int r = 0; r < m; ++r)
            rep.max_residual = std::max(rep.max_residual, poly_residual(poly, t.table[i][r]));
    }
    rep.pass = rep.max_residual <= tol;
    rep.notes.push_back("entries are verified as algebraic integers; cyclotomicity is assumed, not checked");
    return rep;
}

nlohmann::ordered_json CharacterTable::to_json() const {
    nlohmann::ordered_json j;
    auto pair = [](const Cplx& z) { return nlohmann::ordered_json::array({z.real(), z.imag()}); };
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const Cplx& z : row) r.push_back(pair(z));
        rows.push_back(r);
    }
    j["table"] = rows;
    nlohmann::ordered_json cs = nlohmann::ordered_json::array();
    for (const Cplx& z : class_sizes) cs.push_back(pair(z));
    j["class_sizes"] = cs;
    j["ordering"] = ordering;
    j["tol"] = tol;
    nlohmann::ordered_json hints = nlohmann::ordered_json::array();
    for (const auto& row : exact_hints) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const auto& h : row) {
            if (h) r.push_back(Scalar(*h).to_json());
            else r.push_back(nullptr);
        }
        hints.push_back(r);
    }
    j["exact_hints"] = hints;
    return j;
}

} // namespace charta
