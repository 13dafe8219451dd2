#include "charta/builders.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "charta/error.hpp"
#include "charta/matrix.hpp"
#include "charta/simuldiag.hpp"

namespace charta {

namespace {

std::string at2(int i, int j) {
    std::ostringstream os;
    os << "(" << i << ", " << j << ")";
    return os.str();
}

// Coordinate product u * v in H, read from the dense mult tensor.
template <class K>
std::vector<K> coord_product(const HopfAlgebra<K>& h, const std::vector<K>& u,
                             const std::vector<K>& v) {
    const int n = h.dim;
    std::vector<K> out((size_t)n, h.zero());
    for (int i = 0; i < n; ++i) {
        if (is_zero(u[i])) continue;
        for (int j = 0; j < n; ++j) {
            if (is_zero(v[j])) continue;
            const K uv = u[i] * v[j];
            for (int k = 0; k < n; ++k) {
                const K& c = h.m(i, j, k);
                if (!is_zero(c)) out[k] += uv * c;
            }
        }
    }
    return out;
}

// Product in H (x) H of vectors indexed by flat pairs i * n + j.
template <class K>
std::vector<K> tensor_square_product(const HopfAlgebra<K>& h, const std::vector<K>& u,
                                     const std::vector<K>& v) {
    const int n = h.dim;
    std::vector<K> out((size_t)n * n, h.zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const K& uij = u[(size_t)i * n + j];
            if (is_zero(uij)) continue;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    const K& vkl = v[(size_t)k * n + l];
                    if (is_zero(vkl)) continue;
                    const K uv = uij * vkl;
                    for (int p = 0; p < n; ++p) {
                        const K& m1 = h.m(i, k, p);
                        if (is_zero(m1)) continue;
                        for (int q = 0; q < n; ++q) {
                            const K& m2 = h.m(j, l, q);
                            if (!is_zero(m2)) out[(size_t)p * n + q] += uv * m1 * m2;
                        }
                    }
                }
        }
    return out;
}

template <class K>
std::vector<K> basis_vector(const HopfAlgebra<K>& h, int i) {
    std::vector<K> e((size_t)h.dim, h.zero());
    e[i] = h.one();
    return e;
}

template <class K>
HopfAlgebra<K> make_group_algebra(const CayleyTable& c, int conductor, long p) {
    const int n = c.order;
    HopfAlgebra<K> h;
    h.dim = n;
    h.conductor = conductor;
    h.p = p;
    const size_t n3 = (size_t)n * n * n;
    h.mult.assign(n3, h.zero());
    h.comult.assign(n3, h.zero());
    h.unit.assign(n, h.zero());
    h.counit.assign(n, h.one());
    h.antipode.assign((size_t)n * n, h.zero());
    h.unit[0] = h.one();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) h.m(i, j, c.table[i][j]) = h.one();
        h.d(i, i, i) = h.one();
        int inv = -1;
        for (int t = 0; t < n; ++t)
            if (c.table[i][t] == 0) { inv = t; break; }
        h.s(inv, i) = h.one();
    }
    return h;
}

int inverse_of(const CayleyTable& c, int g) {
    for (int t = 0; t < c.order; ++t)
        if (c.table[g][t] == 0) return t;
    return -1; // unreachable after check_cayley
}

struct PermSorter {
    // Three-way float comparison with a band of equality, matching the
    // deterministic ordering conventions of the character-table engine.
    static int cmp(double a, double b, double eps) {
        if (a < b - eps) return -1;
        if (a > b + eps) return 1;
        return 0;
    }
    static int cmp_row(const std::vector<std::complex<double>>& x,
                       const std::vector<std::complex<double>>& y, double eps) {
        for (size_t t = 0; t < x.size(); ++t) {
            int c = cmp(x[t].real(), y[t].real(), eps);
            if (c != 0) return c;
            c = cmp(x[t].imag(), y[t].imag(), eps);
            if (c != 0) return c;
        }
        return 0;
    }
};

FusionRing cyclic_rep_ring(int n) {
    FusionRing f;
    f.rank = n;
    for (int i = 0; i < n; ++i) f.labels.push_back("X" + std::to_string(i));
    f.dual.resize(n);
    for (int i = 0; i < n; ++i) f.dual[i] = (n - i) % n;
    f.fusion.assign((size_t)n * n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) f.n(i, j, (i + j) % n) = 1;
    f.dims.assign(n, Scalar::from_int(1));
    return f;
}

FusionRing group_ring(const CayleyTable& c, const std::string& prefix) {
    FusionRing f;
    f.rank = c.order;
    for (int i = 0; i < c.order; ++i) f.labels.push_back(prefix + std::to_string(i));
    f.dual.resize(c.order);
    for (int i = 0; i < c.order; ++i) f.dual[i] = inverse_of(c, i);
    f.fusion.assign((size_t)c.order * c.order * c.order, 0);
    for (int i = 0; i < c.order; ++i)
        for (int j = 0; j < c.order; ++j) f.n(i, j, c.table[i][j]) = 1;
    f.dims.assign(c.order, Scalar::from_int(1));
    return f;
}

FusionRing fibonacci_ring() {
    FusionRing f;
    f.rank = 2;
    f.labels = {"1", "tau"};
    f.dual = {0, 1};
    f.fusion.assign(8, 0);
    f.n(0, 0, 0) = 1;
    f.n(0, 1, 1) = 1;
    f.n(1, 0, 1) = 1;
    f.n(1, 1, 0) = 1;
    f.n(1, 1, 1) = 1;
    CycNumber phi = CycNumber::from_int(1) + CycNumber::root_of_unity(5, 1) +
                    CycNumber::root_of_unity(5, 4);
    f.dims = {Scalar::from_int(1), Scalar(phi)};
    return f;
}

FusionRing ising_ring() {
    FusionRing f;
    f.rank = 3;
    f.labels = {"1", "psi", "sigma"};
    f.dual = {0, 1, 2};
    f.fusion.assign(27, 0);
    for (int i = 0; i < 3; ++i) {
        f.n(0, i, i) = 1;
        f.n(i, 0, i) = 1;
    }
    f.n(1, 1, 0) = 1;
    f.n(1, 2, 2) = 1;
    f.n(2, 1, 2) = 1;
    f.n(2, 2, 0) = 1;
    f.n(2, 2, 1) = 1;
    CycNumber r2 = CycNumber::root_of_unity(8, 1) + CycNumber::root_of_unity(8, 7);
    f.dims = {Scalar::from_int(1), Scalar::from_int(1), Scalar(r2)};
    return f;
}

FusionRing s3_rep_ring() {
    FusionRing f;
    f.rank = 3;
    f.labels = {"triv", "sgn", "std"};
    f.dual = {0, 1, 2};
    f.fusion.assign(27, 0);
    for (int i = 0; i < 3; ++i) {
        f.n(0, i, i) = 1;
        f.n(i, 0, i) = 1;
    }
    f.n(1, 1, 0) = 1;
    f.n(1, 2, 2) = 1;
    f.n(2, 1, 2) = 1;
    f.n(2, 2, 0) = 1;
    f.n(2, 2, 1) = 1;
    f.n(2, 2, 2) = 1;
    f.dims = {Scalar::from_int(1), Scalar::from_int(1), Scalar::from_int(2)};
    return f;
}

FusionRing q8_rep_ring() {
    FusionRing f;
    f.rank = 5;
    f.labels = {"triv", "chi_i", "chi_j", "chi_k", "E"};
    f.dual = {0, 1, 2, 3, 4};
    f.fusion.assign(125, 0);
    for (int i = 0; i < 5; ++i) {
        f.n(0, i, i) = 1;
        f.n(i, 0, i) = 1;
    }
    // Klein four-group on the one-dimensional characters.
    const int k[3] = {1, 2, 3};
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            if (a == b)
                f.n(k[a], k[b], 0) = 1;
            else
                f.n(k[a], k[b], k[3 - a - b]) = 1;
        }
    for (int a = 0; a < 3; ++a) {
        f.n(k[a], 4, 4) = 1;
        f.n(4, k[a], 4) = 1;
    }
    for (int t = 0; t < 4; ++t) f.n(4, 4, t) = 1;
    f.dims = {Scalar::from_int(1), Scalar::from_int(1), Scalar::from_int(1),
              Scalar::from_int(1), Scalar::from_int(2)};
    return f;
}

ModularDatum fibonacci_modular() {
    CycNumber phi = CycNumber::from_int(1) + CycNumber::root_of_unity(5, 1) +
                    CycNumber::root_of_unity(5, 4);
    // 2 sin(72 deg) = sqrt(1 + phi^2) inside Q(zeta_20).
    CycNumber norm = CycNumber::root_of_unity(20, 15) *
                     (CycNumber::root_of_unity(20, 4) - CycNumber::root_of_unity(20, 16));
    CycNumber inv = norm.inverse();
    ModularDatum m;
    m.s = {{Scalar(inv), Scalar(inv * phi)},
           {Scalar(inv * phi), Scalar(inv * CycNumber::from_int(-1))}};
    return m;
}

ModularDatum ising_modular() {
    CycNumber h = CycNumber::from_rational(rat(1, 2));
    CycNumber r2 = CycNumber::root_of_unity(8, 1) + CycNumber::root_of_unity(8, 7);
    ModularDatum m;
    m.s = {{Scalar(h), Scalar(h), Scalar(h * r2)},
           {Scalar(h), Scalar(h), Scalar(CycNumber() - h * r2)},
           {Scalar(h * r2), Scalar(CycNumber() - h * r2), Scalar(CycNumber())}};
    return m;
}

CayleyTable cyclic_cayley(int n) {
    CayleyTable c;
    c.order = n;
    c.table.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c.table[i][j] = (i + j) % n;
    return c;
}

// Element order: identity, the three transpositions, then the 3-cycles, so
// the conjugacy classes appear in the textbook order of sizes 1, 3, 2.
CayleyTable s3_cayley() {
    const std::vector<std::vector<int>> perms = {
        {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    const int n = (int)perms.size();
    CayleyTable c;
    c.order = n;
    c.table.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> comp(3);
            for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
            for (int t = 0; t < n; ++t)
                if (perms[t] == comp) { c.table[i][j] = t; break; }
        }
    return c;
}

// Elements (sign, axis) with axis in {1, i, j, k}, listed +1, -1, +i, -i, ...
CayleyTable q8_cayley() {
    // axis products: table over {1, i, j, k}, value (sign, axis)
    auto unit_mul = [](int a, int b) -> std::pair<int, int> {
        if (a == 0) return {1, b};
        if (b == 0) return {1, a};
        if (a == b) return {-1, 0};
        // i j = k, j k = i, k i = j and the reversals pick up a sign
        static const int third[4][4] = {{0, 0, 0, 0}, {0, 0, 3, 2}, {0, 3, 0, 1}, {0, 2, 1, 0}};
        int c = third[a][b];
        bool forward = (a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1);
        return {forward ? 1 : -1, c};
    };
    CayleyTable c;
    c.order = 8;
    c.table.assign(8, std::vector<int>(8, -1));
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            int sa = (i % 2 == 0) ? 1 : -1, ua = i / 2;
            int sb = (j % 2 == 0) ? 1 : -1, ub = j / 2;
            auto [sc, uc] = unit_mul(ua, ub);
            int sign = sa * sb * sc;
            c.table[i][j] = 2 * uc + (sign > 0 ? 0 : 1);
        }
    return c;
}

} // namespace

void check_cayley(const CayleyTable& c) {
    const int n = c.order;
    if (n < 1) throw validation_error("group order must be positive, got " + std::to_string(n));
    if ((int)c.table.size() != n)
        throw validation_error("multiplication table has " + std::to_string(c.table.size()) +
                               " rows, expected " + std::to_string(n));
    for (int i = 0; i < n; ++i) {
        if ((int)c.table[i].size() != n)
            throw validation_error("row " + std::to_string(i) + " has " +
                                   std::to_string(c.table[i].size()) + " entries, expected " +
                                   std::to_string(n));
        for (int j = 0; j < n; ++j) {
            int v = c.table[i][j];
            if (v < 0 || v >= n)
                throw validation_error("entry " + at2(i, j) + " = " + std::to_string(v) +
                                       " is outside 0.." + std::to_string(n - 1));
        }
    }
    for (int j = 0; j < n; ++j) {
        if (c.table[0][j] != j)
            throw validation_error("element 0 is not a left identity at " + at2(0, j));
        if (c.table[j][0] != j)
            throw validation_error("element 0 is not a right identity at " + at2(j, 0));
    }
    for (int i = 0; i < n; ++i) {
        std::vector<bool> seen_row(n, false), seen_col(n, false);
        for (int j = 0; j < n; ++j) {
            if (seen_row[c.table[i][j]])
                throw validation_error("row " + std::to_string(i) +
                                       " repeats element " + std::to_string(c.table[i][j]));
            seen_row[c.table[i][j]] = true;
            if (seen_col[c.table[j][i]])
                throw validation_error("column " + std::to_string(i) +
                                       " repeats element " + std::to_string(c.table[j][i]));
            seen_col[c.table[j][i]] = true;
        }
    }
    for (int i = 0; i < n; ++i) {
        bool has_inverse = false;
        for (int t = 0; t < n; ++t)
            if (c.table[i][t] == 0 && c.table[t][i] == 0) { has_inverse = true; break; }
        if (!has_inverse)
            throw validation_error("element " + std::to_string(i) + " has no two-sided inverse");
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (c.table[c.table[i][j]][k] != c.table[i][c.table[j][k]])
                    throw validation_error("associativity fails at (" + std::to_string(i) + ", " +
                                           std::to_string(j) + ", " + std::to_string(k) + ")");
}

CayleyTable cayley_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw parse_error("Cayley table must be a JSON object");
    if (!j.contains("order") || !j["order"].is_number_integer())
        throw parse_error("Cayley table needs an integer \"order\"");
    if (!j.contains("table") || !j["table"].is_array())
        throw parse_error("Cayley table needs an array \"table\"");
    CayleyTable c;
    c.order = j["order"].get<int>();
    for (const auto& row : j["table"]) {
        if (!row.is_array()) throw parse_error("\"table\" rows must be arrays");
        std::vector<int> out;
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw parse_error("\"table\" entries must be integers");
            out.push_back(v.get<int>());
        }
        c.table.push_back(std::move(out));
    }
    return c;
}

nlohmann::ordered_json cayley_to_json(const CayleyTable& c) {
    nlohmann::ordered_json j;
    j["order"] = c.order;
    j["table"] = c.table;
    return j;
}

HopfAny group_algebra(const CayleyTable& c, const HopfField& field) {
    check_cayley(c);
    if (field.p != 0) {
        if (!is_prime(field.p))
            throw validation_error("field characteristic must be prime, got " +
                                   std::to_string(field.p));
        return make_group_algebra<Fp>(c, 1, field.p);
    }
    if (field.conductor < 1)
        throw validation_error("conductor must be at least 1, got " +
                               std::to_string(field.conductor));
    return make_group_algebra<CycNumber>(c, field.conductor, 0);
}

ConjugacyData conjugacy_data(const CayleyTable& c) {
    check_cayley(c);
    const int n = c.order;
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[i] = inverse_of(c, i);
    std::vector<int> class_of(n, -1);
    ConjugacyData cd;
    for (int e = 0; e < n; ++e) {
        if (class_of[e] >= 0) continue;
        std::vector<bool> in_class(n, false);
        for (int x = 0; x < n; ++x) in_class[c.table[c.table[x][e]][inv[x]]] = true;
        std::vector<int> cls;
        for (int g = 0; g < n; ++g)
            if (in_class[g]) {
                cls.push_back(g);
                class_of[g] = (int)cd.classes.size();
            }
        cd.classes.push_back(std::move(cls));
    }
    const int m = (int)cd.classes.size();
    FusionRing& f = cd.class_ring;
    f.rank = m;
    for (int r = 0; r < m; ++r) f.labels.push_back("C" + std::to_string(r));
    f.dual.resize(m);
    for (int r = 0; r < m; ++r) f.dual[r] = class_of[inv[cd.classes[r][0]]];
    f.fusion.assign((size_t)m * m * m, 0);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            std::vector<long> cnt(n, 0);
            for (int x : cd.classes[a])
                for (int y : cd.classes[b]) ++cnt[c.table[x][y]];
            for (int r = 0; r < m; ++r) {
                long v = cnt[cd.classes[r][0]];
                for (int g : cd.classes[r])
                    if (cnt[g] != v)
                        throw computation_error("class product is not constant on class " +
                                                std::to_string(r));
                f.n(a, b, r) = v;
            }
        }
    for (int r = 0; r < m; ++r) f.dims.push_back(Scalar::from_int((long)cd.classes[r].size()));
    return cd;
}

CharacterTable burnside_chartable(const CayleyTable& c, double tol, uint64_t seed) {
    const ConjugacyData cd = conjugacy_data(c);
    const int m = (int)cd.classes.size();
    const double n_g = (double)c.order;
    std::vector<Eigen::MatrixXcd> mats;
    for (int r = 0; r < m; ++r) {
        Eigen::MatrixXcd mr = Eigen::MatrixXcd::Zero(m, m);
        for (int s = 0; s < m; ++s)
            for (int t = 0; t < m; ++t) mr(t, s) = (double)cd.class_ring.n(r, s, t);
        mats.push_back(std::move(mr));
    }
    auto pairs = simuldiag(mats, tol, 8, seed);
    if ((int)pairs.size() != m)
        throw computation_error("class algebra produced " + std::to_string(pairs.size()) +
                                " joint eigenvectors, expected " + std::to_string(m));

    struct Row {
        int raw = 0;
        long degree = 0;
        std::vector<std::complex<double>> values;
    };
    std::vector<Row> rows(m);
    const double kDegreeTol = 1e-6;
    for (int i = 0; i < m; ++i) {
        rows[i].raw = i;
        double den = 0.0;
        for (int r = 0; r < m; ++r)
            den += std::norm(pairs[i].vals[r]) / (double)cd.classes[r].size();
        double chi1 = std::sqrt(n_g / den);
        long k = std::lround(chi1);
        if (k < 1 || std::abs(chi1 - (double)k) > kDegreeTol) {
            std::ostringstream os;
            os << "character degree " << chi1 << " is not within " << kDegreeTol
               << " of a positive integer";
            throw computation_error(os.str());
        }
        rows[i].degree = k;
        rows[i].values.resize(m);
        for (int r = 0; r < m; ++r)
            rows[i].values[r] = pairs[i].vals[r] * (double)k / (double)cd.classes[r].size();
    }

    auto is_trivial = [&](const Row& row) {
        for (int r = 0; r < m; ++r)
            if (std::abs(row.values[r] - std::complex<double>(1.0, 0.0)) > kDegreeTol)
                return false;
        return true;
    };
    std::stable_sort(rows.begin(), rows.end(), [&](const Row& x, const Row& y) {
        bool tx = is_trivial(x), ty = is_trivial(y);
        if (tx != ty) return tx;
        if (x.degree != y.degree) return x.degree < y.degree;
        return PermSorter::cmp_row(x.values, y.values, kDegreeTol) < 0;
    });
    if (rows.empty() || !is_trivial(rows[0]))
        throw computation_error("no joint eigenvector matches the trivial character");

    CharacterTable t;
    t.tol = tol;
    for (const Row& row : rows) {
        t.table.push_back(row.values);
        t.ordering.push_back(row.raw);
    }
    for (int r = 0; r < m; ++r)
        t.class_sizes.push_back(std::complex<double>((double)cd.classes[r].size(), 0.0));
    t.exact_hints.assign(m, std::vector<std::optional<CycNumber>>(m, std::nullopt));
    return t;
}

HopfQ taft_algebra(int n, int omega_power) {
    if (n < 2) throw validation_error("Taft parameter n must be at least 2, got " +
                                      std::to_string(n));
    long w = ((omega_power % n) + n) % n;
    if (std::gcd(w, (long)n) != 1)
        throw validation_error("omega_power " + std::to_string(omega_power) +
                               " does not give a primitive root of unity modulo " +
                               std::to_string(n));
    HopfQ h;
    h.dim = n * n;
    h.conductor = n;
    const int dim = h.dim;
    const size_t n3 = (size_t)dim * dim * dim;
    h.mult.assign(n3, h.zero());
    h.comult.assign(n3, h.zero());
    h.unit.assign(dim, h.zero());
    h.counit.assign(dim, h.zero());
    h.antipode.assign((size_t)dim * dim, h.zero());

    auto idx = [n](int a, int b) { return a * n + b; };
    auto omega_pow = [&](long e) {
        long u = ((w * e) % n + n) % n;
        return CycNumber::root_of_unity(n, u);
    };

    // (g^a x^b)(g^c x^d) = omega^{-bc} g^{a+c} x^{b+d}, zero past x^{n-1}.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    if (b + d >= n) continue;
                    h.m(idx(a, b), idx(c, d), idx((a + c) % n, b + d)) =
                        omega_pow(-(long)b * c);
                }
    h.unit[idx(0, 0)] = h.one();
    for (int a = 0; a < n; ++a) h.counit[idx(a, 0)] = h.one();

    std::vector<CycNumber> tg((size_t)dim * dim, h.zero());
    tg[(size_t)idx(1, 0) * dim + idx(1, 0)] = h.one();
    std::vector<CycNumber> tx((size_t)dim * dim, h.zero());
    tx[(size_t)idx(0, 1) * dim + idx(1, 0)] = h.one();
    tx[(size_t)idx(0, 0) * dim + idx(0, 1)] = h.one();
    std::vector<CycNumber> tunit((size_t)dim * dim, h.zero());
    tunit[(size_t)idx(0, 0) * dim + idx(0, 0)] = h.one();

    std::vector<CycNumber> ta = tunit;
    for (int a = 0; a < n; ++a) {
        std::vector<CycNumber> cur = ta;
        for (int b = 0; b < n; ++b) {
            const int i = idx(a, b);
            for (int j = 0; j < dim; ++j)
                for (int k = 0; k < dim; ++k) h.d(i, j, k) = cur[(size_t)j * dim + k];
            if (b + 1 < n) cur = tensor_square_product(h, cur, tx);
        }
        if (a + 1 < n) ta = tensor_square_product(h, ta, tg);
    }

    const std::vector<CycNumber> sg = basis_vector(h, idx(n - 1, 0));
    std::vector<CycNumber> sx =
        coord_product(h, basis_vector(h, idx(0, 1)), basis_vector(h, idx(n - 1, 0)));
    for (auto& v : sx) v = -v;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<CycNumber> acc = basis_vector(h, idx(0, 0));
            for (int t = 0; t < b; ++t) acc = coord_product(h, acc, sx);
            for (int t = 0; t < a; ++t) acc = coord_product(h, acc, sg);
            for (int i = 0; i < dim; ++i) h.s(i, idx(a, b)) = acc[i];
        }

    h.pivotal = basis_vector(h, idx(1, 0));
    for (int i = 0; i < n; ++i) {
        HModule<CycNumber> v;
        v.dim = 1;
        v.action.assign(dim, {h.zero()});
        for (int a = 0; a < n; ++a) v.action[idx(a, 0)] = {omega_pow((long)i * a)};
        h.modules.push_back(std::move(v));
    }
    return h;
}

template <class K>
HopfAlgebra<K> drinfeld_double(const HopfAlgebra<K>& h) {
    const int n = h.dim;
    Matrix<K> smat(n, n, h.zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) smat.at(i, j) = h.s(i, j);
    auto sin = inverse(smat);
    if (!sin)
        throw computation_error("the antipode matrix is not invertible, so the double "
                                "does not exist");

    HopfAlgebra<K> d;
    d.dim = n * n;
    d.conductor = h.conductor;
    d.p = h.p;
    const int nd = d.dim;
    d.mult.assign((size_t)nd * nd * nd, h.zero());
    d.comult.assign((size_t)nd * nd * nd, h.zero());
    d.unit.assign(nd, h.zero());
    d.counit.assign(nd, h.zero());
    d.antipode.assign((size_t)nd * nd, h.zero());
    auto idxd = [n](int alpha, int a) { return alpha * n + a; };

    // Iterated coproduct Delta^2(b_a) as sparse (u, v, w) triples.
    struct Trip {
        int u, v, w;
        K c;
    };
    std::vector<std::vector<Trip>> d2(n);
    for (int a = 0; a < n; ++a)
        for (int u = 0; u < n; ++u)
            for (int t = 0; t < n; ++t) {
                const K& c1 = h.d(a, u, t);
                if (is_zero(c1)) continue;
                for (int v = 0; v < n; ++v)
                    for (int w = 0; w < n; ++w) {
                        const K& c2 = h.d(t, v, w);
                        if (!is_zero(c2)) d2[a].push_back({u, v, w, c1 * c2});
                    }
            }

    // triple[(w * n + k) * n + u] = coordinates of S^{-1}(b_w) b_k b_u.
    std::vector<std::vector<K>> triple((size_t)n * n * n);
    for (int w = 0; w < n; ++w) {
        std::vector<K> sw((size_t)n, h.zero());
        for (int e = 0; e < n; ++e) sw[e] = sin->at(e, w);
        for (int k = 0; k < n; ++k) {
            std::vector<K> p1 = coord_product(h, sw, basis_vector(h, k));
            for (int u = 0; u < n; ++u)
                triple[((size_t)w * n + k) * n + u] =
                    coord_product(h, p1, basis_vector(h, u));
        }
    }

    // (f_alpha >< b_a)(f_beta >< b_b)
    //   = sum f_alpha (b_(a1) -> f_beta <- S^{-1}(b_(a3))) >< b_(a2) b_b
    for (int a = 0; a < n; ++a)
        for (const Trip& t : d2[a])
            for (int b = 0; b < n; ++b)
                for (int beta = 0; beta < n; ++beta) {
                    std::vector<K> y((size_t)n, h.zero());
                    for (int k = 0; k < n; ++k)
                        y[k] = triple[((size_t)t.w * n + k) * n + t.u][beta];
                    for (int alpha = 0; alpha < n; ++alpha) {
                        std::vector<K> conv((size_t)n, h.zero());
                        for (int gamma = 0; gamma < n; ++gamma)
                            for (int k = 0; k < n; ++k) {
                                const K& dc = h.d(gamma, alpha, k);
                                if (!is_zero(dc) && !is_zero(y[k])) conv[gamma] += dc * y[k];
                            }
                        for (int cidx = 0; cidx < n; ++cidx) {
                            const K& mv = h.m(t.v, b, cidx);
                            if (is_zero(mv)) continue;
                            for (int gamma = 0; gamma < n; ++gamma)
                                if (!is_zero(conv[gamma]))
                                    d.m(idxd(alpha, a), idxd(beta, b), idxd(gamma, cidx)) +=
                                        t.c * conv[gamma] * mv;
                        }
                    }
                }

    // Delta_D(f_beta >< b_a) = (f_(2) >< b_(1)) (x) (f_(1) >< b_(2)), with the
    // dual coproduct read off the multiplication tensor.
    for (int beta = 0; beta < n; ++beta)
        for (int a = 0; a < n; ++a)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    const K& mc = h.m(j, k, beta);
                    if (is_zero(mc)) continue;
                    for (int s = 0; s < n; ++s)
                        for (int t = 0; t < n; ++t) {
                            const K& dc = h.d(a, s, t);
                            if (!is_zero(dc))
                                d.d(idxd(beta, a), idxd(k, s), idxd(j, t)) += mc * dc;
                        }
                }

    for (int beta = 0; beta < n; ++beta)
        for (int a = 0; a < n; ++a) {
            d.counit[idxd(beta, a)] = h.unit[beta] * h.counit[a];
            d.unit[idxd(beta, a)] = h.counit[beta] * h.unit[a];
        }

    // S_D(f_beta >< b_a) = (eps >< S(b_a)) (f_beta o S^{-1} >< 1), computed
    // with the double's own multiplication.
    auto dprod = [&](const std::vector<K>& u, const std::vector<K>& v) {
        std::vector<K> out((size_t)nd, h.zero());
        for (int x = 0; x < nd; ++x) {
            if (is_zero(u[x])) continue;
            for (int y = 0; y < nd; ++y) {
                if (is_zero(v[y])) continue;
                const K uv = u[x] * v[y];
                for (int z = 0; z < nd; ++z) {
                    const K& c = d.m(x, y, z);
                    if (!is_zero(c)) out[z] += uv * c;
                }
            }
        }
        return out;
    };
    for (int beta = 0; beta < n; ++beta)
        for (int a = 0; a < n; ++a) {
            std::vector<K> v1((size_t)nd, h.zero());
            std::vector<K> v2((size_t)nd, h.zero());
            for (int alpha = 0; alpha < n; ++alpha)
                for (int cidx = 0; cidx < n; ++cidx) {
                    v1[idxd(alpha, cidx)] = h.counit[alpha] * h.s(cidx, a);
                    v2[idxd(alpha, cidx)] = sin->at(beta, alpha) * h.unit[cidx];
                }
            std::vector<K> col = dprod(v1, v2);
            for (int i = 0; i < nd; ++i) d.s(i, idxd(beta, a)) = col[i];
        }
    return d;
}

template HopfAlgebra<CycNumber> drinfeld_double(const HopfAlgebra<CycNumber>&);
template HopfAlgebra<Fp> drinfeld_double(const HopfAlgebra<Fp>&);

HopfQ nonpivotal_fixture() {
    HopfQ h;
    h.dim = 27;
    h.conductor = 3;
    const int dim = h.dim;
    h.mult.assign((size_t)dim * dim * dim, h.zero());
    h.comult.assign((size_t)dim * dim * dim, h.zero());
    h.unit.assign(dim, h.zero());
    h.counit.assign(dim, h.zero());
    h.antipode.assign((size_t)dim * dim, h.zero());

    auto idx = [](int a, int b, int c) { return (a * 3 + b) * 3 + c; };
    auto zpow = [](long e) { return CycNumber::root_of_unity(3, ((e % 3) + 3) % 3); };

    // (g^a x1^b x2^c)(g^d x1^e x2^f) = zeta^{-d(b+c)-ce} g^{a+d} x1^{b+e} x2^{c+f}
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int e = 0; e < 3; ++e)
                    for (int f = 0; f < 3; ++f) {
                        if (b + e >= 3 || c + f >= 3) continue;
                        for (int dd = 0; dd < 3; ++dd)
                            h.m(idx(a, b, c), idx(dd, e, f),
                                idx((a + dd) % 3, b + e, c + f)) =
                                zpow(-(long)dd * (b + c) - (long)c * e);
                    }
    h.unit[idx(0, 0, 0)] = h.one();
    for (int a = 0; a < 3; ++a) h.counit[idx(a, 0, 0)] = h.one();

    std::vector<CycNumber> tg((size_t)dim * dim, h.zero());
    tg[(size_t)idx(1, 0, 0) * dim + idx(1, 0, 0)] = h.one();
    std::vector<CycNumber> tx1((size_t)dim * dim, h.zero());
    tx1[(size_t)idx(0, 1, 0) * dim + idx(1, 0, 0)] = h.one();
    tx1[(size_t)idx(0, 0, 0) * dim + idx(0, 1, 0)] = h.one();
    std::vector<CycNumber> tx2((size_t)dim * dim, h.zero());
    tx2[(size_t)idx(0, 0, 1) * dim + idx(2, 0, 0)] = h.one();
    tx2[(size_t)idx(0, 0, 0) * dim + idx(0, 0, 1)] = h.one();
    std::vector<CycNumber> tunit((size_t)dim * dim, h.zero());
    tunit[(size_t)idx(0, 0, 0) * dim + idx(0, 0, 0)] = h.one();

    std::vector<CycNumber> ta = tunit;
    for (int a = 0; a < 3; ++a) {
        std::vector<CycNumber> tb = ta;
        for (int b = 0; b < 3; ++b) {
            std::vector<CycNumber> cur = tb;
            for (int c = 0; c < 3; ++c) {
                const int i = idx(a, b, c);
                for (int j = 0; j < dim; ++j)
                    for (int k = 0; k < dim; ++k) h.d(i, j, k) = cur[(size_t)j * dim + k];
                if (c + 1 < 3) cur = tensor_square_product(h, cur, tx2);
            }
            if (b + 1 < 3) tb = tensor_square_product(h, tb, tx1);
        }
        if (a + 1 < 3) ta = tensor_square_product(h, ta, tg);
    }

    const std::vector<CycNumber> sg = basis_vector(h, idx(2, 0, 0));
    std::vector<CycNumber> sx1 =
        coord_product(h, basis_vector(h, idx(0, 1, 0)), basis_vector(h, idx(2, 0, 0)));
    std::vector<CycNumber> sx2 =
        coord_product(h, basis_vector(h, idx(0, 0, 1)), basis_vector(h, idx(1, 0, 0)));
    for (auto& v : sx1) v = -v;
    for (auto& v : sx2) v = -v;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                std::vector<CycNumber> acc = basis_vector(h, idx(0, 0, 0));
                for (int t = 0; t < c; ++t) acc = coord_product(h, acc, sx2);
                for (int t = 0; t < b; ++t) acc = coord_product(h, acc, sx1);
                for (int t = 0; t < a; ++t) acc = coord_product(h, acc, sg);
                for (int i = 0; i < dim; ++i) h.s(i, idx(a, b, c)) = acc[i];
            }
    return h;
}

Fixtures fixtures() {
    Fixtures fx;
    fx.rings.emplace_back("fibonacci", fibonacci_ring());
    fx.rings.emplace_back("ising", ising_ring());
    for (int n = 2; n <= 6; ++n)
        fx.rings.emplace_back("rep_z" + std::to_string(n), cyclic_rep_ring(n));
    fx.rings.emplace_back("rep_s3", s3_rep_ring());
    fx.rings.emplace_back("rep_q8", q8_rep_ring());
    fx.rings.emplace_back("s3_group", group_ring(s3_cayley(), "g"));

    fx.modular.emplace_back("fibonacci", fibonacci_modular());
    fx.modular.emplace_back("ising", ising_modular());

    for (int n = 2; n <= 6; ++n)
        fx.cayley.emplace_back("z" + std::to_string(n), cyclic_cayley(n));
    fx.cayley.emplace_back("s3", s3_cayley());
    fx.cayley.emplace_back("q8", q8_cayley());

    fx.hopf.emplace_back("taft2", taft_algebra(2, 1));
    fx.hopf.emplace_back("taft3", taft_algebra(3, 1));
    fx.hopf.emplace_back("taft4", taft_algebra(4, 1));

    HopfQ kz3 = std::get<HopfQ>(group_algebra(cyclic_cayley(3), HopfField{0, 3}));
    for (int i = 0; i < 3; ++i) {
        HModule<CycNumber> v;
        v.dim = 1;
        v.action.assign(3, {kz3.zero()});
        for (int a = 0; a < 3; ++a)
            v.action[a] = {CycNumber::root_of_unity(3, (long)((i * a) % 3))};
        kz3.modules.push_back(std::move(v));
    }
    fx.hopf.emplace_back("kz3", std::move(kz3));
    fx.hopf.emplace_back("ks3", group_algebra(s3_cayley(), HopfField{0, 1}));
    fx.hopf.emplace_back(
        "double_kz2",
        drinfeld_double(std::get<HopfQ>(group_algebra(cyclic_cayley(2), HopfField{0, 1}))));
    HopfQ sweedler = taft_algebra(2, 1);
    sweedler.modules.clear();
    sweedler.pivotal.reset();
    fx.hopf.emplace_back("double_sweedler", drinfeld_double(sweedler));
    fx.hopf.emplace_back("nonpivotal27", nonpivotal_fixture());
    return fx;
}

} // namespace charta
