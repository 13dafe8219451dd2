#include "charta/hopf.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>
#include <utility>

#include "charta/error.hpp"
#include "charta/scalar.hpp"

namespace charta {

namespace {

template <class K>
using Vec = std::vector<K>;
template <class K>
using VecList = std::vector<std::vector<K>>;

// Nonzero entries of the rank-3 tensors, for sparse evaluation:
// mrows[i*n+j] lists (k, m_{ij}^k), drows[i] lists (j, k, Delta_i^{jk}),
// scols[j] lists (i, antipode_{ij}), the coordinates of S(b_j).
template <class K>
std::vector<std::vector<std::pair<int, K>>> build_mrows(const HopfAlgebra<K>& h) {
    const int n = h.dim;
    std::vector<std::vector<std::pair<int, K>>> rows((size_t)n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (!is_zero(h.m(i, j, k))) rows[(size_t)i * n + j].emplace_back(k, h.m(i, j, k));
    return rows;
}

template <class K>
std::vector<std::vector<std::tuple<int, int, K>>> build_drows(const HopfAlgebra<K>& h) {
    const int n = h.dim;
    std::vector<std::vector<std::tuple<int, int, K>>> rows(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (!is_zero(h.d(i, j, k))) rows[i].emplace_back(j, k, h.d(i, j, k));
    return rows;
}

template <class K>
std::vector<std::vector<std::pair<int, K>>> build_scols(const HopfAlgebra<K>& h) {
    const int n = h.dim;
    std::vector<std::vector<std::pair<int, K>>> cols(n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (!is_zero(h.s(i, j))) cols[j].emplace_back(i, h.s(i, j));
    return cols;
}

template <class K>
Matrix<K> antipode_matrix(const HopfAlgebra<K>& h) {
    Matrix<K> a(h.dim, h.dim, h.zero());
    for (int i = 0; i < h.dim; ++i)
        for (int j = 0; j < h.dim; ++j) a.at(i, j) = h.s(i, j);
    return a;
}

std::string at2(int i, int j) {
    return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

std::string at3(int i, int j, int k) {
    return "(" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) + ")";
}

template <class K>
void check_shapes(const HopfAlgebra<K>& h) {
    const size_t n = (size_t)h.dim;
    if (h.dim < 1) throw validation_error("hopf algebra dimension must be at least 1");
    if (h.mult.size() != n * n * n || h.comult.size() != n * n * n)
        throw validation_error("hopf mult and comult tensors must have dim^3 entries");
    if (h.unit.size() != n || h.counit.size() != n)
        throw validation_error("hopf unit and counit must have dim entries");
    if (h.antipode.size() != n * n)
        throw validation_error("hopf antipode must be a dim x dim matrix");
    if (h.pivotal && h.pivotal->size() != n)
        throw validation_error("hopf pivotal element must have dim entries");
    for (size_t x = 0; x < h.modules.size(); ++x) {
        const auto& mod = h.modules[x];
        if (mod.dim < 1 || mod.action.size() != n)
            throw validation_error("hopf module " + std::to_string(x) +
                                   " must carry one action matrix per basis element");
        for (const auto& mat : mod.action)
            if (mat.size() != (size_t)mod.dim * mod.dim)
                throw validation_error("hopf module " + std::to_string(x) +
                                       " action matrices must be dim x dim");
    }
}

// First index where the two sparse accumulations differ, comparing exactly.
template <class K>
std::optional<size_t> first_diff(const std::map<size_t, K>& a, const std::map<size_t, K>& b) {
    for (const auto& [idx, val] : a) {
        auto it = b.find(idx);
        if (it == b.end()) {
            if (!is_zero(val)) return idx;
        } else if (val != it->second) {
            return idx;
        }
    }
    for (const auto& [idx, val] : b)
        if (!a.count(idx) && !is_zero(val)) return idx;
    return std::nullopt;
}

template <class K>
bool is_grouplike_impl(const HopfAlgebra<K>& h,
                       const std::vector<std::vector<std::tuple<int, int, K>>>& drows,
                       const Vec<K>& g) {
    const int n = h.dim;
    if ((int)g.size() != n) return false;
    K e = h.zero();
    for (int i = 0; i < n; ++i) e += h.counit[i] * g[i];
    if (e != h.one()) return false;
    Vec<K> acc((size_t)n * n, h.zero());
    for (int i = 0; i < n; ++i) {
        if (is_zero(g[i])) continue;
        for (const auto& [j, k, v] : drows[i]) acc[(size_t)j * n + k] += g[i] * v;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (acc[(size_t)a * n + b] != g[a] * g[b]) return false;
    return true;
}

// --- exact grouplike enumeration over the rationals ---------------------
//
// Grouplikes of H are the algebra characters of the dual algebra H* (product
// = convolution, unit = counit). Characters kill the commutator ideal and the
// nilradical, so they factor through the largest semisimple commutative
// quotient, where a primitive element reduces the search to rational roots of
// one minimal polynomial. Complete whenever the primitive element and the
// root enumeration succeed; callers fall back to the basis-aligned stage
// otherwise.

struct RAlg {
    int dim = 0;
    std::vector<std::vector<std::vector<Rational>>> mul; // mul[a][b] = coords of e_a e_b
    std::vector<Rational> unit;
};

std::vector<Rational> ralg_product(const RAlg& a, const std::vector<Rational>& u,
                                   const std::vector<Rational>& v) {
    std::vector<Rational> out(a.dim, Rational(0));
    for (int x = 0; x < a.dim; ++x) {
        if (is_zero(u[x])) continue;
        for (int y = 0; y < a.dim; ++y) {
            if (is_zero(v[y])) continue;
            const auto& row = a.mul[x][y];
            for (int c = 0; c < a.dim; ++c)
                if (!is_zero(row[c])) out[c] += u[x] * v[y] * row[c];
        }
    }
    return out;
}

std::vector<std::vector<Rational>> reduce_rows(const std::vector<std::vector<Rational>>& rows,
                                               int width) {
    if (rows.empty()) return {};
    Matrix<Rational> m((int)rows.size(), width, Rational(0));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < width; ++j) m.at(i, j) = rows[i][j];
    rref(m);
    std::vector<std::vector<Rational>> out;
    for (int i = 0; i < m.rows; ++i) {
        bool nonzero = false;
        for (int j = 0; j < width; ++j)
            if (!is_zero(m.at(i, j))) { nonzero = true; break; }
        if (!nonzero) continue;
        std::vector<Rational> row(width);
        for (int j = 0; j < width; ++j) row[j] = m.at(i, j);
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<std::vector<Rational>> commutator_ideal(const RAlg& a) {
    const int n = a.dim;
    std::vector<std::vector<Rational>> cur;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            std::vector<Rational> gen(n);
            for (int c = 0; c < n; ++c) gen[c] = a.mul[x][y][c] - a.mul[y][x][c];
            cur.push_back(std::move(gen));
        }
    cur = reduce_rows(cur, n);
    while (true) {
        std::vector<std::vector<Rational>> cand = cur;
        for (const auto& v : cur)
            for (int x = 0; x < n; ++x) {
                std::vector<Rational> ex(n, Rational(0));
                ex[x] = Rational(1);
                cand.push_back(ralg_product(a, ex, v));
                cand.push_back(ralg_product(a, v, ex));
            }
        auto next = reduce_rows(cand, n);
        if (next.size() == cur.size()) return cur;
        cur = std::move(next);
    }
}

struct QuotientStep {
    RAlg alg;
    Matrix<Rational> proj; // new coordinates = proj * old coordinates
};

// Quotient by a two-sided ideal given by a spanning set (closed under the
// algebra action); coset coordinates are the rref complement.
QuotientStep quotient_by_ideal(const RAlg& a, const std::vector<std::vector<Rational>>& ideal) {
    const int n = a.dim;
    auto rows = reduce_rows(ideal, n);
    std::vector<int> piv;
    for (const auto& r : rows)
        for (int j = 0; j < n; ++j)
            if (!is_zero(r[j])) { piv.push_back(j); break; }
    std::vector<bool> is_piv(n, false);
    for (int p : piv) is_piv[p] = true;
    std::vector<int> comp;
    for (int j = 0; j < n; ++j)
        if (!is_piv[j]) comp.push_back(j);

    auto project = [&](std::vector<Rational> v) {
        for (size_t r = 0; r < rows.size(); ++r) {
            Rational c = v[piv[r]];
            if (is_zero(c)) continue;
            for (int j = 0; j < n; ++j) v[j] -= c * rows[r][j];
        }
        std::vector<Rational> out(comp.size());
        for (size_t t = 0; t < comp.size(); ++t) out[t] = v[comp[t]];
        return out;
    };

    QuotientStep q;
    q.alg.dim = (int)comp.size();
    q.proj = Matrix<Rational>(q.alg.dim, n, Rational(0));
    for (int j = 0; j < n; ++j) {
        std::vector<Rational> e(n, Rational(0));
        e[j] = Rational(1);
        auto col = project(std::move(e));
        for (int t = 0; t < q.alg.dim; ++t) q.proj.at(t, j) = col[t];
    }
    q.alg.mul.assign(q.alg.dim, std::vector<std::vector<Rational>>(q.alg.dim));
    for (int x = 0; x < q.alg.dim; ++x)
        for (int y = 0; y < q.alg.dim; ++y) q.alg.mul[x][y] = project(a.mul[comp[x]][comp[y]]);
    q.alg.unit = project(a.unit);
    return q;
}

// Kernel of the trace form of a commutative algebra; over the rationals this
// is exactly the nilradical.
std::vector<std::vector<Rational>> nilradical0(const RAlg& a) {
    const int n = a.dim;
    std::vector<Rational> tr(n, Rational(0));
    for (int c = 0; c < n; ++c)
        for (int e = 0; e < n; ++e) tr[c] += a.mul[c][e][e];
    Matrix<Rational> g(n, n, Rational(0));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            Rational v(0);
            for (int c = 0; c < n; ++c)
                if (!is_zero(a.mul[x][y][c])) v += a.mul[x][y][c] * tr[c];
            g.at(x, y) = v;
        }
    return kernel_basis(std::move(g));
}

std::optional<std::vector<mpz_class>> small_divisors(mpz_class v) {
    if (v < 0) v = -v;
    if (v == 0) return std::nullopt;
    std::vector<std::pair<mpz_class, int>> factors;
    for (long d = 2; d <= 1000000 && mpz_class(d) * d <= v; ++d) {
        if (!mpz_divisible_ui_p(v.get_mpz_t(), (unsigned long)d)) continue;
        int e = 0;
        while (mpz_divisible_ui_p(v.get_mpz_t(), (unsigned long)d)) {
            v /= (unsigned long)d;
            ++e;
        }
        factors.emplace_back(d, e);
    }
    if (v > 1) {
        // any remaining cofactor below 10^12 is prime, since trial division
        // covered every divisor up to 10^6
        if (v > mpz_class("1000000000000")) return std::nullopt;
        factors.emplace_back(v, 1);
    }
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : factors) {
        size_t base = divs.size();
        mpz_class pk = 1;
        for (int t = 1; t <= e; ++t) {
            pk *= p;
            for (size_t s = 0; s < base; ++s) divs.push_back(divs[s] * pk);
        }
        if (divs.size() > 4096) return std::nullopt;
    }
    return divs;
}

// All rational roots of the monic polynomial mu (constant term first).
std::optional<std::vector<Rational>> rational_roots(const std::vector<Rational>& mu) {
    auto eval = [&](const Rational& x) {
        Rational acc(0);
        for (size_t t = mu.size(); t-- > 0;) acc = acc * x + mu[t];
        return acc;
    };
    std::vector<Rational> roots;
    std::vector<Rational> work = mu;
    if (is_zero(work[0]) && work.size() > 1) {
        roots.push_back(Rational(0));
        while (is_zero(work[0]) && work.size() > 1) work.erase(work.begin());
    }
    if (work.size() <= 1) return roots;
    mpz_class den(1);
    for (const auto& c : work) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> ic(work.size());
    for (size_t t = 0; t < work.size(); ++t) {
        Rational scaled = work[t] * Rational(den);
        ic[t] = scaled.get_num();
    }
    auto lows = small_divisors(ic.front());
    auto highs = small_divisors(ic.back());
    if (!lows || !highs) return std::nullopt;
    for (const auto& p : *lows)
        for (const auto& q : *highs)
            for (int sign = -1; sign <= 1; sign += 2) {
                Rational cand(sign * p, q);
                cand.canonicalize();
                if (!is_zero(eval(cand))) continue;
                if (std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
    return roots;
}

// Values of every rational character of a commutative semisimple algebra on
// its basis; empty optional when the search was not exhaustive.
std::optional<std::vector<std::vector<Rational>>> rational_characters(const RAlg& r) {
    const int n = r.dim;
    std::vector<std::vector<Rational>> chars;
    if (n == 0) return chars;
    for (int attempt = 1; attempt <= 12; ++attempt) {
        std::vector<Rational> z(n);
        for (int c = 0; c < n; ++c) z[c] = Rational((long)attempt * (c + 1) + (attempt + c) % 3);
        std::vector<std::vector<Rational>> powers{r.unit};
        while ((int)powers.size() <= n) {
            auto next = ralg_product(r, powers.back(), z);
            auto probe = powers;
            probe.push_back(next);
            if (span_rank(probe, Rational(0)) != (int)probe.size()) break;
            powers.push_back(std::move(next));
        }
        const int deg = (int)powers.size();
        if (deg != n) continue; // not a primitive element, try another
        Matrix<Rational> kry(n, deg, Rational(0));
        for (int t = 0; t < deg; ++t)
            for (int c = 0; c < n; ++c) kry.at(c, t) = powers[t][c];
        auto zd = ralg_product(r, powers.back(), z);
        auto mu_tail = solve(kry, zd);
        if (!mu_tail) continue;
        std::vector<Rational> mu(deg + 1);
        for (int t = 0; t < deg; ++t) mu[t] = -(*mu_tail)[t];
        mu[deg] = Rational(1);
        auto roots = rational_roots(mu);
        if (!roots) return std::nullopt;
        auto inv = inverse(kry);
        if (!inv) continue;
        for (const auto& rho : *roots) {
            std::vector<Rational> rho_pow(deg);
            rho_pow[0] = Rational(1);
            for (int t = 1; t < deg; ++t) rho_pow[t] = rho_pow[t - 1] * rho;
            std::vector<Rational> vals(n, Rational(0));
            for (int c = 0; c < n; ++c)
                for (int t = 0; t < deg; ++t)
                    if (!is_zero(inv->at(t, c))) vals[c] += inv->at(t, c) * rho_pow[t];
            chars.push_back(std::move(vals));
        }
        return chars;
    }
    return std::nullopt;
}

template <class K>
void push_unique(VecList<K>& out, const Vec<K>& v) {
    for (const auto& w : out)
        if (w == v) return;
    out.push_back(v);
}

// Basis-aligned grouplikes plus closure under multiplication.
template <class K>
VecList<K> stage_a_grouplikes(const HopfAlgebra<K>& h) {
    const int n = h.dim;
    auto drows = build_drows(h);
    VecList<K> out;
    if (is_grouplike_impl(h, drows, h.unit)) push_unique(out, h.unit);
    for (int i = 0; i < n; ++i) {
        Vec<K> e(n, h.zero());
        e[i] = h.one();
        if (is_grouplike_impl(h, drows, e)) push_unique(out, e);
    }
    bool grew = true;
    while (grew && (int)out.size() <= n) {
        grew = false;
        const size_t sz = out.size();
        for (size_t x = 0; x < sz; ++x)
            for (size_t y = 0; y < sz; ++y) {
                Vec<K> p = algebra_product(h, out[x], out[y]);
                bool known = false;
                for (const auto& w : out)
                    if (w == p) { known = true; break; }
                if (known) continue;
                if (is_grouplike_impl(h, drows, p)) {
                    out.push_back(std::move(p));
                    grew = true;
                }
            }
    }
    return out;
}

// Complete enumeration through the dual algebra, rational fields only.
inline void stage_b_grouplikes(const HopfQ& h, VecList<CycNumber>& out) {
    if (h.conductor > 2) return;
    const int n = h.dim;
    RAlg dual;
    dual.dim = n;
    dual.mul.assign(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0))));
    dual.unit.assign(n, Rational(0));
    for (int i = 0; i < n; ++i) {
        if (!h.counit[i].is_rational()) return;
        dual.unit[i] = h.counit[i].rational_part();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (!h.d(i, a, b).is_rational()) return;
                dual.mul[a][b][i] = h.d(i, a, b).rational_part();
            }
    }
    QuotientStep q1 = quotient_by_ideal(dual, commutator_ideal(dual));
    QuotientStep q2 = quotient_by_ideal(q1.alg, nilradical0(q1.alg));
    Matrix<Rational> ptot = q2.proj * q1.proj;
    auto chars = rational_characters(q2.alg);
    if (!chars) return;
    auto drows = build_drows(h);
    for (const auto& vals : *chars) {
        Vec<CycNumber> g(n, h.zero());
        for (int j = 0; j < n; ++j) {
            Rational gj(0);
            for (int c = 0; c < q2.alg.dim; ++c)
                if (!is_zero(ptot.at(c, j))) gj += ptot.at(c, j) * vals[c];
            g[j] = CycNumber::from_rational(gj, h.conductor);
        }
        if (is_grouplike_impl(h, drows, g)) push_unique(out, g);
    }
}

template <class K>
Matrix<K> left_mult_matrix(const HopfAlgebra<K>& h, const Vec<K>& v) {
    const int n = h.dim;
    Matrix<K> out(n, n, h.zero());
    for (int i = 0; i < n; ++i) {
        if (is_zero(v[i])) continue;
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (!is_zero(h.m(i, j, k))) out.at(k, j) += v[i] * h.m(i, j, k);
    }
    return out;
}

template <class K>
Matrix<K> right_mult_matrix(const HopfAlgebra<K>& h, const Vec<K>& v) {
    const int n = h.dim;
    Matrix<K> out(n, n, h.zero());
    for (int i = 0; i < n; ++i) {
        if (is_zero(v[i])) continue;
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (!is_zero(h.m(j, i, k))) out.at(k, j) += h.m(j, i, k) * v[i];
    }
    return out;
}

template <class K>
std::vector<Matrix<K>> module_matrices(const HopfAlgebra<K>& h, const HModule<K>& x) {
    std::vector<Matrix<K>> mats;
    mats.reserve(h.dim);
    for (int i = 0; i < h.dim; ++i) {
        Matrix<K> m(x.dim, x.dim, h.zero());
        for (int p = 0; p < x.dim; ++p)
            for (int q = 0; q < x.dim; ++q) m.at(p, q) = x.action[i][(size_t)p * x.dim + q];
        mats.push_back(std::move(m));
    }
    return mats;
}

} // namespace

template <class K>
ValidationReport validate_hopf(const HopfAlgebra<K>& h) {
    check_shapes(h);
    ValidationReport rep;
    const int n = h.dim;
    const K zero = h.zero(), one = h.one();
    auto mrows = build_mrows(h);
    auto drows = build_drows(h);
    auto scols = build_scols(h);

    {
        AxiomCheck c{"associativity", true, ""};
        for (int i = 0; i < n && c.pass; ++i)
            for (int j = 0; j < n && c.pass; ++j)
                for (int k = 0; k < n && c.pass; ++k) {
                    Vec<K> lhs(n, zero), rhs(n, zero);
                    for (const auto& [l, v] : mrows[(size_t)i * n + j])
                        for (const auto& [p, w] : mrows[(size_t)l * n + k]) lhs[p] += v * w;
                    for (const auto& [l, v] : mrows[(size_t)j * n + k])
                        for (const auto& [p, w] : mrows[(size_t)i * n + l]) rhs[p] += v * w;
                    for (int p = 0; p < n; ++p)
                        if (lhs[p] != rhs[p]) {
                            c.pass = false;
                            c.detail = "first failure at " + at3(i, j, k);
                            break;
                        }
                }
        rep.checks.push_back(std::move(c));
    }
    {
        AxiomCheck c{"unit", true, ""};
        for (int j = 0; j < n && c.pass; ++j) {
            Vec<K> left(n, zero), right(n, zero);
            for (int i = 0; i < n; ++i) {
                if (!is_zero(h.unit[i]))
                    for (const auto& [k, v] : mrows[(size_t)i * n + j]) left[k] += h.unit[i] * v;
                if (!is_zero(h.unit[i]))
                    for (const auto& [k, v] : mrows[(size_t)j * n + i]) right[k] += v * h.unit[i];
            }
            for (int k = 0; k < n; ++k) {
                K want = (k == j) ? one : zero;
                if (left[k] != want || right[k] != want) {
                    c.pass = false;
                    c.detail = "unit law fails on basis element " + std::to_string(j);
                    break;
                }
            }
        }
        rep.checks.push_back(std::move(c));
    }
    {
        AxiomCheck c{"coassociativity", true, ""};
        for (int i = 0; i < n && c.pass; ++i) {
            std::map<size_t, K> lhs, rhs;
            for (const auto& [a, p, v] : drows[i])
                for (const auto& [j, k, w] : drows[a]) {
                    size_t key = ((size_t)j * n + k) * n + p;
                    auto it = lhs.find(key);
                    if (it == lhs.end()) lhs.emplace(key, v * w);
                    else it->second += v * w;
                }
            for (const auto& [j, a, v] : drows[i])
                for (const auto& [k, p, w] : drows[a]) {
                    size_t key = ((size_t)j * n + k) * n + p;
                    auto it = rhs.find(key);
                    if (it == rhs.end()) rhs.emplace(key, v * w);
                    else it->second += v * w;
                }
            if (auto bad = first_diff(lhs, rhs)) {
                c.pass = false;
                c.detail = "first failure on basis element " + std::to_string(i) +
                           ", tensor slot " + std::to_string(*bad);
            }
        }
        rep.checks.push_back(std::move(c));
    }
    {
        AxiomCheck c{"counit", true, ""};
        for (int i = 0; i < n && c.pass; ++i) {
            Vec<K> left(n, zero), right(n, zero);
            for (const auto& [j, k, v] : drows[i]) {
                left[k] += h.counit[j] * v;
                right[j] += v * h.counit[k];
            }
            for (int k = 0; k < n; ++k) {
                K want = (k == i) ? one : zero;
                if (left[k] != want || right[k] != want) {
                    c.pass = false;
                    c.detail = "counit law fails on basis element " + std::to_string(i);
                    break;
                }
            }
        }
        rep.checks.push_back(std::move(c));
    }
    {
        AxiomCheck c{"bialgebra", true, ""};
        for (int i = 0; i < n && c.pass; ++i)
            for (int j = 0; j < n && c.pass; ++j) {
                std::map<size_t, K> lhs, rhs;
                for (const auto& [k, v] : mrows[(size_t)i * n + j])
                    for (const auto& [p, q, w] : drows[k]) {
                        size_t key = (size_t)p * n + q;
                        auto it = lhs.find(key);
                        if (it == lhs.end()) lhs.emplace(key, v * w);
                        else it->second += v * w;
                    }
                for (const auto& [a, b, v] : drows[i])
                    for (const auto& [cc, dd, w] : drows[j]) {
                        K coef = v * w;
                        for (const auto& [p, u1] : mrows[(size_t)a * n + cc])
                            for (const auto& [q, u2] : mrows[(size_t)b * n + dd]) {
                                size_t key = (size_t)p * n + q;
                                K add = coef * u1 * u2;
                                auto it = rhs.find(key);
                                if (it == rhs.end()) rhs.emplace(key, std::move(add));
                                else it->second += add;
                            }
                    }
                if (auto bad = first_diff(lhs, rhs)) {
                    (void)bad;
                    c.pass = false;
                    c.detail = "comultiplication is not multiplicative at " + at2(i, j);
                }
                if (c.pass) {
                    K lhs_e = zero;
                    for (const auto& [k, v] : mrows[(size_t)i * n + j]) lhs_e += v * h.counit[k];
                    if (lhs_e != h.counit[i] * h.counit[j]) {
                        c.pass = false;
                        c.detail = "counit is not multiplicative at " + at2(i, j);
                    }
                }
            }
        if (c.pass) {
            std::map<size_t, K> dunit;
            for (int i = 0; i < n; ++i) {
                if (is_zero(h.unit[i])) continue;
                for (const auto& [j, k, v] : drows[i]) {
                    size_t key = (size_t)j * n + k;
                    auto it = dunit.find(key);
                    if (it == dunit.end()) dunit.emplace(key, h.unit[i] * v);
                    else it->second += h.unit[i] * v;
                }
            }
            std::map<size_t, K> uu;
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    K v = h.unit[j] * h.unit[k];
                    if (!is_zero(v)) uu.emplace((size_t)j * n + k, std::move(v));
                }
            if (first_diff(dunit, uu)) {
                c.pass = false;
                c.detail = "comultiplication does not send the unit to its tensor square";
            }
            K eps1 = zero;
            for (int i = 0; i < n; ++i) eps1 += h.unit[i] * h.counit[i];
            if (c.pass && eps1 != one) {
                c.pass = false;
                c.detail = "counit of the unit is not 1";
            }
        }
        rep.checks.push_back(std::move(c));
    }
    {
        AxiomCheck c{"antipode", true, ""};
        for (int i = 0; i < n && c.pass; ++i) {
            Vec<K> left(n, zero), right(n, zero);
            for (const auto& [j, k, v] : drows[i]) {
                for (const auto& [l, a] : scols[j])
                    for (const auto& [p, w] : mrows[(size_t)l * n + k]) left[p] += v * a * w;
                for (const auto& [l, a] : scols[k])
                    for (const auto& [p, w] : mrows[(size_t)j * n + l]) right[p] += v * a * w;
            }
            for (int p = 0; p < n; ++p) {
                K want = h.counit[i] * h.unit[p];
                if (left[p] != want || right[p] != want) {
                    c.pass = false;
                    c.detail = "antipode law fails on basis element " + std::to_string(i);
                    break;
                }
            }
        }
        rep.checks.push_back(std::move(c));
    }

    rep.ok = true;
    for (const auto& c : rep.checks) rep.ok = rep.ok && c.pass;
    return rep;
}

template <class K>
Vec<K> algebra_product(const HopfAlgebra<K>& h, const Vec<K>& a, const Vec<K>& b) {
    const int n = h.dim;
    Vec<K> out(n, h.zero());
    for (int i = 0; i < n; ++i) {
        if (is_zero(a[i])) continue;
        for (int j = 0; j < n; ++j) {
            if (is_zero(b[j])) continue;
            for (int k = 0; k < n; ++k)
                if (!is_zero(h.m(i, j, k))) out[k] += a[i] * b[j] * h.m(i, j, k);
        }
    }
    return out;
}

template <class K>
VecList<K> class_functions(const HopfAlgebra<K>& h) {
    check_shapes(h);
    const int n = h.dim;
    Matrix<K> a = antipode_matrix(h);
    Matrix<K> a2 = a * a;
    auto mrows = build_mrows(h);
    Matrix<K> sys(n * n, n, h.zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int row = i * n + j;
            for (const auto& [k, v] : mrows[(size_t)i * n + j]) sys.at(row, k) += v;
            for (int l = 0; l < n; ++l) {
                if (is_zero(a2.at(l, i))) continue;
                for (const auto& [k, v] : mrows[(size_t)j * n + l]) sys.at(row, k) -= a2.at(l, i) * v;
            }
        }
    return kernel_basis(std::move(sys));
}

template <class K>
VecList<K> center(const HopfAlgebra<K>& h) {
    check_shapes(h);
    const int n = h.dim;
    Matrix<K> sys(n * n, n, h.zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int p = 0; p < n; ++p) {
                K diff = h.m(i, j, p) - h.m(j, i, p);
                if (!is_zero(diff)) sys.at(i * n + p, j) += diff;
            }
    return kernel_basis(std::move(sys));
}

template <class K>
Vec<K> convolution(const HopfAlgebra<K>& h, const Vec<K>& f, const Vec<K>& g) {
    const int n = h.dim;
    Vec<K> out(n, h.zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (is_zero(f[j])) continue;
            for (int k = 0; k < n; ++k)
                if (!is_zero(h.d(i, j, k)) && !is_zero(g[k])) out[i] += h.d(i, j, k) * f[j] * g[k];
        }
    return out;
}

namespace {

template <class K>
Matrix<K> left_integral_system(const HopfAlgebra<K>& h) {
    const int n = h.dim;
    Matrix<K> sys(n * n, n, h.zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (!is_zero(h.m(i, j, k))) sys.at(i * n + k, j) += h.m(i, j, k);
    for (int i = 0; i < n; ++i)
        for (int p = 0; p < n; ++p) sys.at(i * n + p, p) -= h.counit[i];
    return sys;
}

template <class K>
Matrix<K> right_integral_system(const HopfAlgebra<K>& h) {
    const int n = h.dim;
    Matrix<K> sys(n * n, n, h.zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (!is_zero(h.m(j, i, k))) sys.at(i * n + k, j) += h.m(j, i, k);
    for (int i = 0; i < n; ++i)
        for (int p = 0; p < n; ++p) sys.at(i * n + p, p) -= h.counit[i];
    return sys;
}

template <class K>
Matrix<K> center_system(const HopfAlgebra<K>& h) {
    const int n = h.dim;
    Matrix<K> sys(n * n, n, h.zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int p = 0; p < n; ++p) {
                K diff = h.m(i, j, p) - h.m(j, i, p);
                if (!is_zero(diff)) sys.at(i * n + p, j) += diff;
            }
    return sys;
}

template <class K>
Matrix<K> stack(const Matrix<K>& a, const Matrix<K>& b, const K& zero) {
    Matrix<K> out(a.rows + b.rows, a.cols, zero);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) out.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < b.cols; ++j) out.at(a.rows + i, j) = b.at(i, j);
    return out;
}

} // namespace

template <class K>
IntegralSpaces<K> integrals(const HopfAlgebra<K>& h) {
    check_shapes(h);
    IntegralSpaces<K> out;
    Matrix<K> left_sys = left_integral_system(h);
    Matrix<K> right_sys = right_integral_system(h);
    out.left = kernel_basis(left_sys);
    out.right = kernel_basis(right_sys);
    out.categorical = kernel_basis(stack(left_sys, center_system(h), h.zero()));
    out.unimodular_algebra = same_span(out.left, out.right, h.zero());
    out.unimodular_category = !out.categorical.empty();
    return out;
}

template <class K>
CointegralSpaces<K> cointegrals(const HopfAlgebra<K>& h) {
    check_shapes(h);
    const int n = h.dim;
    const K zero = h.zero();
    auto mrows = build_mrows(h);
    auto drows = build_drows(h);
    auto scols = build_scols(h);

    Matrix<K> right_sys(n * n, n, zero);
    for (int i = 0; i < n; ++i) {
        for (const auto& [p, k, v] : drows[i]) right_sys.at(i * n + p, k) += v;
        for (int p = 0; p < n; ++p) right_sys.at(i * n + p, i) -= h.unit[p];
    }

    Matrix<K> ad_sys(n * n, n, zero);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec<K> coeff(n, zero);
            for (const auto& [c, dd, v] : drows[i])
                for (const auto& [f, v2] : mrows[(size_t)c * n + j])
                    for (const auto& [e, a] : scols[dd])
                        for (const auto& [k, v3] : mrows[(size_t)f * n + e])
                            coeff[k] += v * v2 * a * v3;
            coeff[j] -= h.counit[i];
            for (int k = 0; k < n; ++k)
                if (!is_zero(coeff[k])) ad_sys.at(i * n + j, k) = coeff[k];
        }

    CointegralSpaces<K> out;
    out.right = kernel_basis(right_sys);
    out.ad_invariant = kernel_basis(ad_sys);
    out.categorical = kernel_basis(stack(right_sys, ad_sys, zero));
    return out;
}

template <class K>
bool is_grouplike(const HopfAlgebra<K>& h, const Vec<K>& g) {
    check_shapes(h);
    return is_grouplike_impl(h, build_drows(h), g);
}

template <class K>
VecList<K> grouplike_elements(const HopfAlgebra<K>& h) {
    check_shapes(h);
    VecList<K> out = stage_a_grouplikes(h);
    if constexpr (std::is_same_v<K, CycNumber>) stage_b_grouplikes(h, out);
    return out;
}

template <class K>
bool is_pivotal(const HopfAlgebra<K>& h, const Vec<K>& g) {
    check_shapes(h);
    const int n = h.dim;
    if ((int)g.size() != n) return false;
    if (!is_grouplike_impl(h, build_drows(h), g)) return false;
    Matrix<K> lg = left_mult_matrix(h, g);
    auto ginv = solve(lg, h.unit);
    if (!ginv) return false;
    if (algebra_product(h, *ginv, g) != h.unit) return false;
    if (algebra_product(h, g, *ginv) != h.unit) return false;
    Matrix<K> a = antipode_matrix(h);
    Matrix<K> a2 = a * a;
    Matrix<K> conj = lg * right_mult_matrix(h, *ginv);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a2.at(i, j) != conj.at(i, j)) return false;
    return true;
}

template <class K>
VecList<K> pivotal_elements(const HopfAlgebra<K>& h) {
    VecList<K> out;
    for (const auto& g : grouplike_elements(h))
        if (is_pivotal(h, g)) out.push_back(g);
    return out;
}

template <class K>
ValidationReport validate_module(const HopfAlgebra<K>& h, const HModule<K>& x) {
    check_shapes(h);
    const size_t n = (size_t)h.dim;
    if (x.dim < 1 || x.action.size() != n)
        throw validation_error("module must carry one action matrix per basis element");
    for (const auto& mat : x.action)
        if (mat.size() != (size_t)x.dim * x.dim)
            throw validation_error("module action matrices must be dim x dim");
    ValidationReport rep;
    auto mats = module_matrices(h, x);
    {
        AxiomCheck c{"module_mult", true, ""};
        for (int i = 0; i < h.dim && c.pass; ++i)
            for (int j = 0; j < h.dim && c.pass; ++j) {
                Matrix<K> lhs = mats[i] * mats[j];
                Matrix<K> rhs(x.dim, x.dim, h.zero());
                for (int k = 0; k < h.dim; ++k) {
                    if (is_zero(h.m(i, j, k))) continue;
                    for (int p = 0; p < x.dim; ++p)
                        for (int q = 0; q < x.dim; ++q) rhs.at(p, q) += h.m(i, j, k) * mats[k].at(p, q);
                }
                for (int p = 0; p < x.dim && c.pass; ++p)
                    for (int q = 0; q < x.dim; ++q)
                        if (lhs.at(p, q) != rhs.at(p, q)) {
                            c.pass = false;
                            c.detail = "action is not multiplicative at " + at2(i, j);
                            break;
                        }
            }
        rep.checks.push_back(std::move(c));
    }
    {
        AxiomCheck c{"module_unit", true, ""};
        Matrix<K> u(x.dim, x.dim, h.zero());
        for (int i = 0; i < h.dim; ++i) {
            if (is_zero(h.unit[i])) continue;
            for (int p = 0; p < x.dim; ++p)
                for (int q = 0; q < x.dim; ++q) u.at(p, q) += h.unit[i] * mats[i].at(p, q);
        }
        for (int p = 0; p < x.dim && c.pass; ++p)
            for (int q = 0; q < x.dim; ++q) {
                K want = (p == q) ? h.one() : h.zero();
                if (u.at(p, q) != want) {
                    c.pass = false;
                    c.detail = "unit does not act as the identity";
                    break;
                }
            }
        rep.checks.push_back(std::move(c));
    }
    rep.ok = rep.checks[0].pass && rep.checks[1].pass;
    return rep;
}

template <class K>
HModule<K> tensor_module(const HopfAlgebra<K>& h, const HModule<K>& x, const HModule<K>& y) {
    const int n = h.dim, dx = x.dim, dy = y.dim, d = dx * dy;
    HModule<K> out;
    out.dim = d;
    out.action.assign(n, Vec<K>((size_t)d * d, h.zero()));
    auto drows = build_drows(h);
    for (int i = 0; i < n; ++i)
        for (const auto& [j, k, v] : drows[i])
            for (int xp = 0; xp < dx; ++xp)
                for (int xr = 0; xr < dx; ++xr) {
                    const K& a = x.action[j][(size_t)xp * dx + xr];
                    if (is_zero(a)) continue;
                    K coef = v * a;
                    for (int yq = 0; yq < dy; ++yq)
                        for (int ys = 0; ys < dy; ++ys) {
                            const K& b = y.action[k][(size_t)yq * dy + ys];
                            if (is_zero(b)) continue;
                            out.action[i][(size_t)(xp * dy + yq) * d + (xr * dy + ys)] += coef * b;
                        }
                }
    return out;
}

template <class K>
Vec<K> internal_character(const HopfAlgebra<K>& h, const Vec<K>& g, const HModule<K>& x) {
    const int n = h.dim, d = x.dim;
    Vec<K> gmat((size_t)d * d, h.zero());
    for (int i = 0; i < n; ++i) {
        if (is_zero(g[i])) continue;
        for (size_t t = 0; t < gmat.size(); ++t)
            if (!is_zero(x.action[i][t])) gmat[t] += g[i] * x.action[i][t];
    }
    Vec<K> ch(n, h.zero());
    for (int j = 0; j < n; ++j)
        for (int p = 0; p < d; ++p)
            for (int q = 0; q < d; ++q) {
                const K& a = gmat[(size_t)p * d + q];
                const K& b = x.action[j][(size_t)q * d + p];
                if (!is_zero(a) && !is_zero(b)) ch[j] += a * b;
            }
    return ch;
}

template <class K>
CharacterLawReport check_character_laws(const HopfAlgebra<K>& h, const Vec<K>& g,
                                        const std::vector<HModule<K>>& modules, bool simples) {
    CharacterLawReport rep;
    for (size_t i = 0; i < modules.size(); ++i) {
        ValidationReport v = validate_module(h, modules[i]);
        if (!v.ok) {
            rep.notes.push_back("module " + std::to_string(i) + " fails its representation axioms");
            return rep;
        }
    }
    VecList<K> chs;
    for (const auto& x : modules) chs.push_back(internal_character(h, g, x));

    rep.multiplicative = true;
    for (size_t i = 0; i < modules.size() && rep.multiplicative; ++i)
        for (size_t j = 0; j < modules.size(); ++j) {
            Vec<K> lhs = internal_character(h, g, tensor_module(h, modules[i], modules[j]));
            Vec<K> rhs = convolution(h, chs[i], chs[j]);
            if (lhs != rhs) {
                rep.multiplicative = false;
                rep.fail_i = (int)i;
                rep.fail_j = (int)j;
                rep.notes.push_back("ch(X_" + std::to_string(i) + " (x) X_" + std::to_string(j) +
                                    ") differs from the convolution of the characters");
                break;
            }
        }

    VecList<K> cf = class_functions(h);
    const int cf_rank = span_rank(cf, h.zero());
    rep.in_class_functions = true;
    for (size_t i = 0; i < chs.size(); ++i) {
        VecList<K> family = cf;
        family.push_back(chs[i]);
        if (span_rank(family, h.zero()) != cf_rank) {
            rep.in_class_functions = false;
            rep.notes.push_back("ch(X_" + std::to_string(i) + ") is not a class function");
            break;
        }
    }

    rep.independent = span_rank(chs, h.zero()) == (int)chs.size();
    if (simples && !rep.independent)
        rep.notes.push_back("the listed simple characters are linearly dependent");
    rep.pass = rep.multiplicative && rep.in_class_functions && (rep.independent || !simples);
    return rep;
}

template <class K>
FourierPair<K> fourier_pair(const HopfAlgebra<K>& h) {
    IntegralSpaces<K> ints = integrals(h);
    CointegralSpaces<K> coints = cointegrals(h);
    if (ints.categorical.empty() || coints.categorical.empty())
        throw computation_error(
            "not unimodular: the categorical integral or cointegral space is zero");
    FourierPair<K> out;
    out.cointegral = coints.categorical[0];
    Vec<K> integral = ints.categorical[0];
    K pairing = h.zero();
    for (int i = 0; i < h.dim; ++i) pairing += out.cointegral[i] * integral[i];
    if (is_zero(pairing))
        throw computation_error(
            "the categorical cointegral pairs to zero with the categorical integral; no "
            "normalization with <lambda, Lambda> = 1 exists");
    for (auto& v : integral) v = v / pairing;
    out.integral = std::move(integral);
    return out;
}

template <class K>
Vec<K> fourier(const HopfAlgebra<K>& h, const Vec<K>& lambda, const Vec<K>& a) {
    check_shapes(h);
    const int n = h.dim;
    auto inv = inverse(antipode_matrix(h));
    if (!inv) throw computation_error("the antipode matrix is not invertible");
    Vec<K> b = inv->apply(a);
    Vec<K> out(n, h.zero());
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            if (is_zero(b[i])) continue;
            for (int k = 0; k < n; ++k)
                if (!is_zero(h.m(i, j, k)) && !is_zero(lambda[k])) out[j] += b[i] * h.m(i, j, k) * lambda[k];
        }
    return out;
}

// <f, Lambda_(2)> Lambda_(1): this leg order, read off the dual-object
// structure 1 -> Lambda_(2) (x) S^{-1}(Lambda_(1)), inverts the transform on
// every element; the opposite order is off by the central defect
// lambda(Lambda_(1)) Lambda_(2), invisible when Delta(Lambda) is symmetric.
template <class K>
Vec<K> fourier_inv(const HopfAlgebra<K>& h, const Vec<K>& integral, const Vec<K>& f) {
    check_shapes(h);
    const int n = h.dim;
    Vec<K> out(n, h.zero());
    auto drows = build_drows(h);
    for (int i = 0; i < n; ++i) {
        if (is_zero(integral[i])) continue;
        for (const auto& [j, k, v] : drows[i])
            if (!is_zero(f[k])) out[j] += integral[i] * v * f[k];
    }
    return out;
}

template <class K>
RadfordReport<K> radford_check(const HopfAlgebra<K>& h, const Vec<K>& lambda,
                               const Vec<K>& integral, const Vec<K>& f) {
    check_shapes(h);
    const int n = h.dim;
    Matrix<K> a = antipode_matrix(h);
    Matrix<K> a2 = a * a;
    RadfordReport<K> rep{h.zero(), h.zero(), false};
    auto drows = build_drows(h);
    for (int i = 0; i < n; ++i)
        for (const auto& [j, k, v] : drows[i])
            if (!is_zero(f[k]) && !is_zero(a2.at(i, j))) rep.trace += v * f[k] * a2.at(i, j);
    K f_int = h.zero(), lam_one = h.zero();
    for (int i = 0; i < n; ++i) {
        f_int += f[i] * integral[i];
        lam_one += lambda[i] * h.unit[i];
    }
    rep.expected = f_int * lam_one;
    rep.pass = rep.trace == rep.expected;
    return rep;
}

template <class K>
K maschke_indicator(const HopfAlgebra<K>& h, const Vec<K>& integral) {
    check_shapes(h);
    K out = h.zero();
    for (int i = 0; i < h.dim; ++i) out += h.counit[i] * integral[i];
    return out;
}

// --- JSON ----------------------------------------------------------------

namespace {

CycNumber cyc_literal(const nlohmann::json& cell) {
    Scalar s = Scalar::from_json(cell);
    if (!s.exact())
        throw parse_error("hopf scalars must be exact literals: integers, \"p/q\" strings, or "
                          "{\"conductor\", \"coeffs\"} objects");
    return s.cyc();
}

Fp fp_literal(const nlohmann::json& cell, long p) {
    if (!cell.is_number_integer())
        throw parse_error("prime-field hopf scalars must be integer literals");
    return Fp(p, cell.get<long>());
}

template <class K, class Lit>
void fill_hopf(HopfAlgebra<K>& h, const nlohmann::json& j, const Lit& lit) {
    const int n = h.dim;
    h.mult.assign((size_t)n * n * n, h.zero());
    h.comult.assign((size_t)n * n * n, h.zero());
    h.unit.assign(n, h.zero());
    h.counit.assign(n, h.zero());
    h.antipode.assign((size_t)n * n, h.zero());

    auto fill_sparse = [&](const char* key, std::vector<K>& tensor) {
        if (!j.contains(key) || !j.at(key).is_array())
            throw parse_error(std::string("hopf json requires a sparse \"") + key + "\" array");
        for (const auto& entry : j.at(key)) {
            if (!entry.is_array() || entry.size() != 4 || !entry[0].is_number_integer() ||
                !entry[1].is_number_integer() || !entry[2].is_number_integer())
                throw parse_error(std::string("each \"") + key +
                                  "\" entry must be [i, j, k, literal]");
            int a = entry[0].get<int>(), b = entry[1].get<int>(), c = entry[2].get<int>();
            if (a < 0 || a >= n || b < 0 || b >= n || c < 0 || c >= n)
                throw parse_error(std::string("index out of range in \"") + key + "\"");
            tensor[((size_t)a * n + b) * n + c] += lit(entry[3]);
        }
    };
    fill_sparse("mult", h.mult);
    fill_sparse("comult", h.comult);

    auto fill_vector = [&](const char* key, std::vector<K>& out) {
        if (!j.contains(key) || !j.at(key).is_array() || j.at(key).size() != (size_t)n)
            throw parse_error(std::string("hopf json requires \"") + key + "\" with dim entries");
        for (int i = 0; i < n; ++i) out[i] = lit(j.at(key)[i]);
    };
    fill_vector("unit", h.unit);
    fill_vector("counit", h.counit);

    const auto& ant = j.contains("antipode") ? j.at("antipode") : nlohmann::json();
    if (!ant.is_array() || ant.size() != (size_t)n)
        throw parse_error("hopf json requires an \"antipode\" matrix with dim rows");
    for (int i = 0; i < n; ++i) {
        if (!ant[i].is_array() || ant[i].size() != (size_t)n)
            throw parse_error("hopf antipode rows must have dim entries");
        for (int jj = 0; jj < n; ++jj) h.antipode[(size_t)i * n + jj] = lit(ant[i][jj]);
    }

    if (j.contains("pivotal")) {
        const auto& piv = j.at("pivotal");
        if (!piv.is_array() || piv.size() != (size_t)n)
            throw parse_error("hopf pivotal vector must have dim entries");
        std::vector<K> g(n, h.zero());
        for (int i = 0; i < n; ++i) g[i] = lit(piv[i]);
        h.pivotal = std::move(g);
    }

    if (j.contains("modules")) {
        const auto& mods = j.at("modules");
        if (!mods.is_array()) throw parse_error("hopf \"modules\" must be an array");
        for (const auto& mj : mods) {
            if (!mj.is_object() || !mj.contains("dim") || !mj.at("dim").is_number_integer() ||
                mj.at("dim").get<int>() < 1 || !mj.contains("action") || !mj.at("action").is_array() ||
                mj.at("action").size() != (size_t)n)
                throw parse_error("each module needs \"dim\" >= 1 and one action matrix per basis "
                                  "element");
            HModule<K> mod;
            mod.dim = mj.at("dim").get<int>();
            for (const auto& mat : mj.at("action")) {
                if (!mat.is_array() || mat.size() != (size_t)mod.dim)
                    throw parse_error("module action matrices must have dim rows");
                std::vector<K> flat((size_t)mod.dim * mod.dim, h.zero());
                for (int p = 0; p < mod.dim; ++p) {
                    if (!mat[p].is_array() || mat[p].size() != (size_t)mod.dim)
                        throw parse_error("module action rows must have dim entries");
                    for (int q = 0; q < mod.dim; ++q) flat[(size_t)p * mod.dim + q] = lit(mat[p][q]);
                }
                mod.action.push_back(std::move(flat));
            }
            h.modules.push_back(std::move(mod));
        }
    }
}

nlohmann::ordered_json rational_literal(const Rational& r) {
    if (r.get_den() == 1 && r.get_num().fits_slong_p())
        return nlohmann::ordered_json(r.get_num().get_si());
    return nlohmann::ordered_json(format_rational(r));
}

nlohmann::ordered_json cyc_emit(const CycNumber& v) {
    if (v.is_rational()) return rational_literal(v.rational_part());
    nlohmann::ordered_json out;
    out["conductor"] = v.conductor();
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const auto& c : v.coeffs()) coeffs.push_back(rational_literal(c));
    out["coeffs"] = std::move(coeffs);
    return out;
}

nlohmann::ordered_json fp_emit(const Fp& v) { return nlohmann::ordered_json(v.v); }

template <class K, class Emit>
nlohmann::ordered_json emit_hopf(const HopfAlgebra<K>& h, nlohmann::ordered_json field,
                                 const Emit& emit) {
    const int n = h.dim;
    nlohmann::ordered_json out;
    out["dim"] = n;
    out["field"] = std::move(field);
    auto sparse = [&](const std::vector<K>& tensor) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    const K& v = tensor[((size_t)i * n + j) * n + k];
                    if (is_zero(v)) continue;
                    arr.push_back(nlohmann::ordered_json::array({i, j, k, emit(v)}));
                }
        return arr;
    };
    out["mult"] = sparse(h.mult);
    auto vec = [&](const std::vector<K>& v) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& x : v) arr.push_back(emit(x));
        return arr;
    };
    out["unit"] = vec(h.unit);
    out["comult"] = sparse(h.comult);
    out["counit"] = vec(h.counit);
    nlohmann::ordered_json ant = nlohmann::ordered_json::array();
    for (int i = 0; i < n; ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 0; j < n; ++j) row.push_back(emit(h.s(i, j)));
        ant.push_back(std::move(row));
    }
    out["antipode"] = std::move(ant);
    if (h.pivotal) out["pivotal"] = vec(*h.pivotal);
    if (!h.modules.empty()) {
        nlohmann::ordered_json mods = nlohmann::ordered_json::array();
        for (const auto& mod : h.modules) {
            nlohmann::ordered_json mj;
            mj["dim"] = mod.dim;
            nlohmann::ordered_json acts = nlohmann::ordered_json::array();
            for (const auto& flat : mod.action) {
                nlohmann::ordered_json mat = nlohmann::ordered_json::array();
                for (int p = 0; p < mod.dim; ++p) {
                    nlohmann::ordered_json row = nlohmann::ordered_json::array();
                    for (int q = 0; q < mod.dim; ++q) row.push_back(emit(flat[(size_t)p * mod.dim + q]));
                    mat.push_back(std::move(row));
                }
                acts.push_back(std::move(mat));
            }
            mj["action"] = std::move(acts);
            mods.push_back(std::move(mj));
        }
        out["modules"] = std::move(mods);
    }
    return out;
}

} // namespace

HopfAny hopf_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("field") || !j.at("field").is_object() ||
        !j.at("field").contains("type"))
        throw parse_error("hopf json requires a \"field\" object with a \"type\"");
    if (!j.contains("dim") || !j.at("dim").is_number_integer() || j.at("dim").get<int>() < 1)
        throw parse_error("hopf json requires an integer \"dim\" >= 1");
    const std::string type = j.at("field").at("type").get<std::string>();
    if (type == "rational" || type == "cyclotomic") {
        HopfQ h;
        h.dim = j.at("dim").get<int>();
        h.conductor = 1;
        if (type == "cyclotomic") {
            if (!j.at("field").contains("conductor") ||
                !j.at("field").at("conductor").is_number_integer() ||
                j.at("field").at("conductor").get<int>() < 1)
                throw parse_error("cyclotomic field requires an integer \"conductor\" >= 1");
            h.conductor = j.at("field").at("conductor").get<int>();
        }
        fill_hopf(h, j, cyc_literal);
        return h;
    }
    if (type == "prime") {
        if (!j.at("field").contains("p") || !j.at("field").at("p").is_number_integer())
            throw parse_error("prime field requires an integer \"p\"");
        long p = j.at("field").at("p").get<long>();
        if (!is_prime(p)) throw validation_error("field characteristic must be prime, got " +
                                                 std::to_string(p));
        HopfP h;
        h.dim = j.at("dim").get<int>();
        h.p = p;
        fill_hopf(h, j, [p](const nlohmann::json& cell) { return fp_literal(cell, p); });
        return h;
    }
    throw parse_error("unknown hopf field type \"" + type + "\"");
}

nlohmann::ordered_json hopf_to_json(const HopfAny& any) {
    if (std::holds_alternative<HopfQ>(any)) {
        const HopfQ& h = std::get<HopfQ>(any);
        nlohmann::ordered_json field;
        if (h.conductor <= 1) {
            field["type"] = "rational";
        } else {
            field["type"] = "cyclotomic";
            field["conductor"] = h.conductor;
        }
        return emit_hopf(h, std::move(field), cyc_emit);
    }
    const HopfP& h = std::get<HopfP>(any);
    nlohmann::ordered_json field;
    field["type"] = "prime";
    field["p"] = h.p;
    return emit_hopf(h, std::move(field), fp_emit);
}

#define CHARTA_INSTANTIATE_HOPF(K)                                                                \
    template ValidationReport validate_hopf<K>(const HopfAlgebra<K>&);                            \
    template std::vector<std::vector<K>> class_functions<K>(const HopfAlgebra<K>&);               \
    template std::vector<std::vector<K>> center<K>(const HopfAlgebra<K>&);                        \
    template std::vector<K> convolution<K>(const HopfAlgebra<K>&, const std::vector<K>&,          \
                                           const std::vector<K>&);                                \
    template std::vector<K> algebra_product<K>(const HopfAlgebra<K>&, const std::vector<K>&,      \
                                               const std::vector<K>&);                            \
    template IntegralSpaces<K> integrals<K>(const HopfAlgebra<K>&);                               \
    template CointegralSpaces<K> cointegrals<K>(const HopfAlgebra<K>&);                           \
    template std::vector<std::vector<K>> pivotal_elements<K>(const HopfAlgebra<K>&);              \
    template bool is_pivotal<K>(const HopfAlgebra<K>&, const std::vector<K>&);                    \
    template bool is_grouplike<K>(const HopfAlgebra<K>&, const std::vector<K>&);                  \
    template std::vector<std::vector<K>> grouplike_elements<K>(const HopfAlgebra<K>&);            \
    template ValidationReport validate_module<K>(const HopfAlgebra<K>&, const HModule<K>&);       \
    template HModule<K> tensor_module<K>(const HopfAlgebra<K>&, const HModule<K>&,                \
                                         const HModule<K>&);                                      \
    template std::vector<K> internal_character<K>(const HopfAlgebra<K>&, const std::vector<K>&,   \
                                                  const HModule<K>&);                             \
    template CharacterLawReport check_character_laws<K>(const HopfAlgebra<K>&,                    \
                                                        const std::vector<K>&,                    \
                                                        const std::vector<HModule<K>>&, bool);    \
    template FourierPair<K> fourier_pair<K>(const HopfAlgebra<K>&);                               \
    template std::vector<K> fourier<K>(const HopfAlgebra<K>&, const std::vector<K>&,              \
                                       const std::vector<K>&);                                    \
    template std::vector<K> fourier_inv<K>(const HopfAlgebra<K>&, const std::vector<K>&,          \
                                           const std::vector<K>&);                                \
    template RadfordReport<K> radford_check<K>(const HopfAlgebra<K>&, const std::vector<K>&,      \
                                               const std::vector<K>&, const std::vector<K>&);     \
    template K maschke_indicator<K>(const HopfAlgebra<K>&, const std::vector<K>&);

CHARTA_INSTANTIATE_HOPF(CycNumber)
CHARTA_INSTANTIATE_HOPF(Fp)

#undef CHARTA_INSTANTIATE_HOPF

} // namespace charta
