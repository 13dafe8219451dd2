#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "charta/builders.hpp"
#include "charta/chartable.hpp"
#include "charta/cli.hpp"
#include "charta/fusion.hpp"
#include "charta/hopf.hpp"
#include "charta/matrix.hpp"
#include "charta/modular.hpp"

using namespace charta;

namespace {

int failed = 0;
Fixtures fx;

template <class F>
void criterion(int n, const char* name, F&& f) {
    std::string detail;
    bool ok = false;
    try {
        ok = f(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    std::printf("%s  criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", n, name,
                ok || detail.empty() ? "" : " -- ", ok ? "" : detail.c_str());
    if (!ok) ++failed;
}

template <class T>
const T& by_name(const std::vector<std::pair<std::string, T>>& xs, const std::string& name) {
    for (const auto& [n, x] : xs)
        if (n == name) return x;
    throw std::runtime_error("missing fixture " + name);
}

bool near(Cplx a, Cplx b, double tol) { return std::abs(a - b) <= tol; }

bool rows_match_from(const CharacterTable& a, const CharacterTable& b,
                     const std::vector<int>& sigma, std::vector<bool>& used, int i, double tol) {
    const int n = a.rank();
    if (i == n) return true;
    for (int j = 0; j < n; ++j) {
        if (used[j]) continue;
        bool ok = true;
        for (int r = 0; r < n && ok; ++r)
            if (!near(a.table[i][r], b.table[j][sigma[r]], tol)) ok = false;
        if (!ok) continue;
        used[j] = true;
        if (rows_match_from(a, b, sigma, used, i + 1, tol)) return true;
        used[j] = false;
    }
    return false;
}

bool cols_match_from(const CharacterTable& a, const CharacterTable& b, std::vector<int>& sigma,
                     std::vector<bool>& used, int r, double tol) {
    const int n = a.rank();
    if (r == n) {
        std::vector<bool> row_used(n, false);
        return rows_match_from(a, b, sigma, row_used, 0, tol);
    }
    for (int c = 0; c < n; ++c) {
        if (used[c] || !near(a.class_sizes[r], b.class_sizes[c], tol)) continue;
        sigma[r] = c;
        used[c] = true;
        if (cols_match_from(a, b, sigma, used, r + 1, tol)) return true;
        used[c] = false;
    }
    return false;
}

bool tables_match(const CharacterTable& a, const CharacterTable& b, double tol) {
    if (a.rank() != b.rank()) return false;
    std::vector<int> sigma(a.rank(), -1);
    std::vector<bool> used(a.rank(), false);
    return cols_match_from(a, b, sigma, used, 0, tol);
}

bool named_check_fails(const ValidationReport& v, const std::string& name, std::string& detail) {
    if (v.ok) {
        detail = "mutated ring passed validation";
        return false;
    }
    for (const auto& c : v.checks)
        if (c.name == name && !c.pass) {
            if (c.detail.empty()) {
                detail = name + " failed without a counterexample";
                return false;
            }
            return true;
        }
    detail = name + " did not fail";
    return false;
}

}  // namespace

int main() {
    fx = fixtures();

    criterion(1, "fibonacci table, class sizes, global dimension, orthogonality < 1e-9",
              [](std::string& d) {
        const FusionRing& f = by_name(fx.rings, "fibonacci");
        CharacterTable t = compute_character_table(f);
        const double phi = (1 + std::sqrt(5.0)) / 2;
        if (!near(t.table[0][0], {1, 0}, 1e-9) || !near(t.table[0][1], {1, 0}, 1e-9)) {
            d = "trivial row is not (1, 1)";
            return false;
        }
        if (!near(t.table[1][0], {phi, 0}, 1e-9) || !near(t.table[1][1], {1 - phi, 0}, 1e-9)) {
            d = "second row is not (phi, 1-phi)";
            return false;
        }
        if (!near(t.class_sizes[0], {1, 0}, 1e-9) || !near(t.class_sizes[1], {phi * phi, 0}, 1e-9)) {
            d = "class sizes are not (1, phi^2)";
            return false;
        }
        Cplx total = t.class_sizes[0] + t.class_sizes[1];
        if (!near(total, {(5 + std::sqrt(5.0)) / 2, 0}, 1e-9)) {
            d = "class sizes do not sum to the global dimension";
            return false;
        }
        auto o = verify_orthogonality(t, f, 1e-9);
        if (!o.pass) {
            d = "orthogonality residual too large";
            return false;
        }
        return true;
    });

    criterion(2, "ising sigma row (sqrt2, -sqrt2, 0), orthogonality and x^3-2x integrality",
              [](std::string& d) {
        const FusionRing& f = by_name(fx.rings, "ising");
        CharacterTable t = compute_character_table(f);
        const double rt2 = std::sqrt(2.0);
        if (!near(t.table[2][0], {rt2, 0}, 1e-9) || !near(t.table[2][1], {-rt2, 0}, 1e-9) ||
            !near(t.table[2][2], {0, 0}, 1e-9)) {
            d = "sigma row is not (sqrt2, -sqrt2, 0)";
            return false;
        }
        if (!verify_orthogonality(t, f, 1e-9).pass) {
            d = "orthogonality fails";
            return false;
        }
        for (int r = 0; r < 3; ++r) {
            Cplx z = t.table[2][r];
            if (std::abs(z * z * z - 2.0 * z) >= 1e-9) {
                d = "sigma row entry is not a root of x^3 - 2x";
                return false;
            }
        }
        auto rep = integrality_check(t, f, 1e-9);
        if (!rep.pass) {
            d = "integrality residual " + std::to_string(rep.max_residual);
            return false;
        }
        return true;
    });

    criterion(3, "rep-ring and burnside tables agree for Z/2..Z/6, S3, Q8 within 1e-8",
              [](std::string& d) {
        const std::pair<const char*, const char*> pairs[] = {
            {"rep_z2", "z2"}, {"rep_z3", "z3"}, {"rep_z4", "z4"}, {"rep_z5", "z5"},
            {"rep_z6", "z6"}, {"rep_s3", "s3"}, {"rep_q8", "q8"},
        };
        for (const auto& [ring_name, cayley_name] : pairs) {
            const CayleyTable& c = by_name(fx.cayley, cayley_name);
            CharacterTable from_ring = compute_character_table(by_name(fx.rings, ring_name));
            CharacterTable from_group = burnside_chartable(c);
            if (!tables_match(from_ring, from_group, 1e-8)) {
                d = std::string(ring_name) + " does not match the burnside table";
                return false;
            }
            ConjugacyData cd = conjugacy_data(c);
            std::vector<long> true_sizes, ring_sizes;
            for (const auto& cls : cd.classes) true_sizes.push_back((long)cls.size());
            for (const auto& s : from_ring.class_sizes) {
                long r = std::lround(s.real());
                if (std::abs(s - Cplx((double)r, 0)) > 1e-8) {
                    d = std::string(ring_name) + " class size is not near an integer";
                    return false;
                }
                ring_sizes.push_back(r);
            }
            std::sort(true_sizes.begin(), true_sizes.end());
            std::sort(ring_sizes.begin(), ring_sizes.end());
            if (true_sizes != ring_sizes) {
                d = std::string(ring_name) + " class sizes do not match the group";
                return false;
            }
        }
        return true;
    });

    criterion(4, "s-matrix tables match the verlinde rings and the q-homomorphism holds",
              [](std::string& d) {
        for (const char* name : {"fibonacci", "ising"}) {
            const ModularDatum& m = by_name(fx.modular, name);
            CrossCheckReport c = cross_check(m, 1e-9);
            if (!c.pass) {
                d = std::string(name) + " column match residual " + std::to_string(c.max_residual);
                return false;
            }
            if (!check_q_homomorphism(m, 1e-9).pass) {
                d = std::string(name) + " q-homomorphism fails";
                return false;
            }
        }
        return true;
    });

    criterion(5, "kZ/2 is non-semisimple over F2 and semisimple in characteristic zero",
              [](std::string& d) {
        CayleyTable z2 = by_name(fx.cayley, "z2");
        HopfP h2 = std::get<HopfP>(group_algebra(z2, HopfField{2, 1}));
        IntegralSpaces<Fp> is2 = integrals(h2);
        if (is2.categorical.empty()) {
            d = "no categorical integral over F2";
            return false;
        }
        if (!is_zero(maschke_indicator(h2, is2.categorical[0]))) {
            d = "maschke indicator is nonzero over F2";
            return false;
        }
        HopfQ hq = std::get<HopfQ>(group_algebra(z2, HopfField{0, 1}));
        if (maschke_indicator(hq, fourier_pair(hq).integral) != CycNumber::from_int(2)) {
            d = "maschke indicator is not 2 in characteristic zero";
            return false;
        }
        const FusionRing& rz2 = by_name(fx.rings, "rep_z2");
        Scalar dimc = rz2.dims[0] * rz2.dims[rz2.dual[0]];
        for (int i = 1; i < rz2.rank; ++i) dimc = dimc + rz2.dims[i] * rz2.dims[rz2.dual[i]];
        if (!near(dimc.embed(), {2, 0}, 1e-12)) {
            d = "global dimension of rep(Z/2) is not 2";
            return false;
        }
        return true;
    });

    criterion(6, "taft algebras N=2,3,4: N class functions, skew integrals, no categorical one",
              [](std::string& d) {
        for (int n = 2; n <= 4; ++n) {
            HopfQ h = taft_algebra(n);
            if ((int)class_functions(h).size() != n) {
                d = "class function dimension is not " + std::to_string(n);
                return false;
            }
            IntegralSpaces<CycNumber> is = integrals(h);
            if (same_span(is.left, is.right, h.zero())) {
                d = "left and right integrals coincide at N = " + std::to_string(n);
                return false;
            }
            if (!is.categorical.empty()) {
                d = "categorical integral exists at N = " + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    criterion(7, "fourier round-trip, radford identity, and maschke values on the unimodular suite",
              [](std::string& d) {
        std::mt19937 rng(987654321u);
        for (const char* name : {"kz3", "ks3", "double_kz2", "double_sweedler"}) {
            const HopfQ& h = std::get<HopfQ>(by_name(fx.hopf, name));
            FourierPair<CycNumber> p = fourier_pair(h);
            auto ce = center(h);
            for (const auto& z : ce) {
                if (fourier_inv(h, p.integral, fourier(h, p.cointegral, z)) != z) {
                    d = std::string(name) + " fourier round-trip is not the identity";
                    return false;
                }
            }
            auto cf = class_functions(h);
            for (int trial = 0; trial < 10; ++trial) {
                std::vector<CycNumber> f(h.dim, h.zero());
                for (const auto& basis : cf) {
                    long coeff = (long)(rng() % 19) - 9;
                    for (int i = 0; i < h.dim; ++i)
                        f[i] += CycNumber::from_int(coeff, h.conductor) * basis[i];
                }
                if (!radford_check(h, p.cointegral, p.integral, f).pass) {
                    d = std::string(name) + " radford identity fails on a random class function";
                    return false;
                }
            }
            CycNumber m = maschke_indicator(h, p.integral);
            if (std::string(name) == "kz3" && m != CycNumber::from_int(3, h.conductor)) {
                d = "maschke of kZ/3 is not 3";
                return false;
            }
            if (std::string(name) == "ks3" && m != CycNumber::from_int(6)) {
                d = "maschke of kS3 is not 6";
                return false;
            }
            if (std::string(name) == "double_sweedler" && !m.is_zero()) {
                d = "maschke of the sweedler double is not 0";
                return false;
            }
        }
        return true;
    });

    criterion(8, "characters multiply through tensor products and stay independent",
              [](std::string& d) {
        const HopfQ& kz3 = std::get<HopfQ>(by_name(fx.hopf, "kz3"));
        CharacterLawReport a = check_character_laws(kz3, kz3.unit, kz3.modules, true);
        if (!a.multiplicative || !a.independent) {
            d = "kZ/3 character laws fail";
            return false;
        }
        HopfQ taft = taft_algebra(2);
        CharacterLawReport b = check_character_laws(taft, *taft.pivotal, taft.modules, true);
        if (!b.multiplicative || !b.independent) {
            d = "taft N=2 character laws fail";
            return false;
        }
        return true;
    });

    criterion(9, "six single-fault fibonacci mutations are rejected with counterexamples",
              [](std::string& d) {
        const FusionRing& fib = by_name(fx.rings, "fibonacci");
        {
            FusionRing m = fib;
            m.n(0, 1, 1) = 0;
            if (!named_check_fails(validate_fusion_ring(m), "unit", d)) return false;
        }
        {
            FusionRing m = fib;
            m.dual = {0, 0};
            if (!named_check_fails(validate_fusion_ring(m), "involution", d)) return false;
        }
        {
            FusionRing m = fib;
            m.n(1, 1, 0) = 2;
            if (!named_check_fails(validate_fusion_ring(m), "rigidity", d)) return false;
        }
        {
            // Rank 2 with intact unit rows is associative for free, so the
            // associativity fault has to land on a unit slot.
            FusionRing m = fib;
            m.n(1, 0, 1) = 2;
            if (!named_check_fails(validate_fusion_ring(m), "associativity", d)) return false;
        }
        {
            FusionRing m = fib;
            m.dims[1] = Scalar::from_int(2);
            if (!named_check_fails(validate_fusion_ring(m), "dims_homomorphism", d)) return false;
        }
        {
            FusionRing m = fib;
            m.dims[0] = Scalar::from_int(2);
            if (!named_check_fails(validate_fusion_ring(m), "unit_dimension", d)) return false;
        }
        return true;
    });

    criterion(10, "chartable runs with a fixed seed emit byte-identical json reports",
              [](std::string& d) {
        const std::string fib = std::string(CHARTA_DATA_DIR) + "/fibonacci.json";
        const std::string q8 = std::string(CHARTA_DATA_DIR) + "/rep_q8.json";
        std::string a = cmd_chartable(fib, 1e-9, 0).to_json().dump();
        std::string b = cmd_chartable(fib, 1e-9, 0).to_json().dump();
        if (a != b) {
            d = "fibonacci reports differ between runs";
            return false;
        }
        std::string c = cmd_chartable(q8, 1e-9, 5).to_json().dump();
        std::string e = cmd_chartable(q8, 1e-9, 5).to_json().dump();
        if (c != e) {
            d = "rep_q8 reports differ between runs at seed 5";
            return false;
        }
        return true;
    });

    if (failed == 0) std::printf("acceptance: all 10 criteria passed\n");
    else std::printf("acceptance: %d of 10 criteria FAILED\n", failed);
    return failed == 0 ? 0 : 1;
}
