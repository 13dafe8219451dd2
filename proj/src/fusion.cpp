#include "charta/fusion.hpp"

#include <sstream>

#include "charta/error.hpp"
#include "charta/primefield.hpp"

namespace charta {

namespace {

std::string idx2(int i, int j) {
    std::ostringstream os;
    os << "(i,j)=(" << i << "," << j << ")";
    return os.str();
}

void check_shape(const FusionRing& f) {
    if (f.rank < 1) throw validation_error("fusion ring must have rank >= 1");
    size_t r = (size_t)f.rank;
    if (f.dual.size() != r) throw validation_error("dual involution has wrong length");
    if (f.fusion.size() != r * r * r) throw validation_error("fusion tensor has wrong shape");
    if (f.dims.size() != r) throw validation_error("dims vector has wrong length");
    for (int i = 0; i < f.rank; ++i)
        if (f.dual[i] < 0 || f.dual[i] >= f.rank)
            throw validation_error("dual index out of range at " + std::to_string(i));
    for (long c : f.fusion)
        if (c < 0) throw validation_error("fusion coefficients must be non-negative");
}

} // namespace

ValidationReport validate_fusion_ring(const FusionRing& f, double tol) {
    check_shape(f);
    ValidationReport rep;
    int m = f.rank;

    {
        AxiomCheck c{"unit", true, ""};
        for (int j = 0; j < m && c.pass; ++j)
            for (int k = 0; k < m && c.pass; ++k) {
                long want = j == k ? 1 : 0;
                if (f.n(0, j, k) != want || f.n(j, 0, k) != want) {
                    c.pass = false;
                    c.detail = "N_{0j}^k or N_{j0}^k wrong at (j,k)=(" + std::to_string(j) + "," + std::to_string(k) + ")";
                }
            }
        rep.checks.push_back(c);
    }

    {
        AxiomCheck c{"involution", true, ""};
        if (f.dual[0] != 0) {
            c.pass = false;
            c.detail = "dual(0) != 0";
        }
        for (int i = 0; i < m && c.pass; ++i)
            if (f.dual[f.dual[i]] != i) {
                c.pass = false;
                c.detail = "dual(dual(" + std::to_string(i) + ")) != " + std::to_string(i);
            }
        rep.checks.push_back(c);
    }

    {
        AxiomCheck c{"rigidity", true, ""};
        for (int i = 0; i < m && c.pass; ++i)
            for (int j = 0; j < m && c.pass; ++j) {
                long want = f.dual[i] == j ? 1 : 0;
                if (f.n(i, j, 0) != want) {
                    c.pass = false;
                    c.detail = "N_{ij}^0 != delta_{i*,j} at " + idx2(i, j);
                }
            }
        rep.checks.push_back(c);
    }

    {
        AxiomCheck c{"associativity", true, ""};
        for (int i = 0; i < m && c.pass; ++i)
            for (int j = 0; j < m && c.pass; ++j)
                for (int k = 0; k < m && c.pass; ++k)
                    for (int l = 0; l < m && c.pass; ++l) {
                        long lhs = 0, rhs = 0;
                        for (int e = 0; e < m; ++e) lhs += f.n(i, j, e) * f.n(e, k, l);
                        for (int e = 0; e < m; ++e) rhs += f.n(j, k, e) * f.n(i, e, l);
                        if (lhs != rhs) {
                            c.pass = false;
                            c.detail = "((i j) k != i (j k)) at (i,j,k,l)=(" + std::to_string(i) + ","
                                     + std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(l) + ")";
                        }
                    }
        rep.checks.push_back(c);
    }

    {
        AxiomCheck c{"dims_homomorphism", true, ""};
        for (int i = 0; i < m && c.pass; ++i)
            for (int j = 0; j < m && c.pass; ++j) {
                Scalar sum;
                for (int k = 0; k < m; ++k) {
                    long nk = f.n(i, j, k);
                    if (nk != 0) sum = sum + Scalar::from_int(nk) * f.dims[k];
                }
                if (!Scalar::eq(sum, f.dims[i] * f.dims[j], tol)) {
                    c.pass = false;
                    c.detail = "sum_k N_{ij}^k d_k != d_i d_j at " + idx2(i, j);
                }
            }
        rep.checks.push_back(c);
    }

    {
        AxiomCheck c{"unit_dimension", true, ""};
        if (!Scalar::eq(f.dims[0], Scalar::from_int(1), tol)) {
            c.pass = false;
            c.detail = "d_0 != 1";
        }
        rep.checks.push_back(c);
    }

    rep.ok = true;
    for (const auto& c : rep.checks) rep.ok = rep.ok && c.pass;
    rep.notes.push_back("semisimplicity of the induced algebra in the center: not decidable from input");
    rep.notes.push_back("multiplicity-freeness of the induced algebra: not decidable from input");
    return rep;
}

std::vector<Matrix<long>> fusion_matrices(const FusionRing& f) {
    check_shape(f);
    std::vector<Matrix<long>> mats;
    mats.reserve(f.rank);
    for (int i = 0; i < f.rank; ++i) {
        Matrix<long> ni(f.rank, f.rank, 0L);
        for (int k = 0; k < f.rank; ++k)
            for (int j = 0; j < f.rank; ++j) ni.at(k, j) = f.n(i, j, k);
        mats.push_back(std::move(ni));
    }
    return mats;
}

bool is_commutative(const FusionRing& f) {
    check_shape(f);
    for (int i = 0; i < f.rank; ++i)
        for (int j = 0; j < i; ++j)
            for (int k = 0; k < f.rank; ++k)
                if (f.n(i, j, k) != f.n(j, i, k)) return false;
    return true;
}

GlobalDimension global_dimension(const FusionRing& f, double tol) {
    check_shape(f);
    Scalar sum;
    for (int i = 0; i < f.rank; ++i) sum = sum + f.dims[i] * f.dims[f.dual[i]];
    bool nondeg = sum.exact() ? !sum.exactly_zero() : std::abs(sum.embed()) > tol;
    return {sum, nondeg};
}

namespace {

// Multiplication of coefficient vectors over F_p through the structure constants.
std::vector<Fp> mult_fp(const FusionRing& f, long p, const std::vector<Fp>& u, const std::vector<Fp>& v) {
    std::vector<Fp> out(f.rank, Fp(p, 0));
    for (int i = 0; i < f.rank; ++i) {
        if (u[i].v == 0) continue;
        for (int j = 0; j < f.rank; ++j) {
            if (v[j].v == 0) continue;
            for (int k = 0; k < f.rank; ++k) {
                long c = f.n(i, j, k) % p;
                if (c != 0) out[k] = out[k] + u[i] * v[j] * Fp(p, c);
            }
        }
    }
    return out;
}

std::vector<Fp> power_fp(const FusionRing& f, long p, std::vector<Fp> base, long e) {
    std::vector<Fp> acc(f.rank, Fp(p, 0));
    acc[0] = Fp(p, 1);
    while (e > 0) {
        if (e & 1) acc = mult_fp(f, p, acc, base);
        base = mult_fp(f, p, base, base);
        e >>= 1;
    }
    return acc;
}

} // namespace

bool grothendieck_semisimple(const FusionRing& f, const FieldSpec& field) {
    check_shape(f);
    int m = f.rank;
    if (field.p == 0) {
        // Trace form of the regular representation: B_{ab} = Tr(N_a N_b).
        // Nondegeneracy is equivalent to semisimplicity and is unchanged by
        // extending the characteristic-zero scalar field.
        auto mats = fusion_matrices(f);
        Matrix<Rational> b(m, m, Rational(0));
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y) {
                long tr = 0;
                for (int k = 0; k < m; ++k)
                    for (int l = 0; l < m; ++l) tr += mats[x].at(k, l) * mats[y].at(l, k);
                b.at(x, y) = Rational(tr);
            }
        return rank(std::move(b)) == m;
    }

    if (!is_prime(field.p))
        throw validation_error("characteristic must be 0 or a prime");
    if (!is_commutative(f))
        throw computation_error("semisimplicity over characteristic p is only decided for "
                                "commutative rings; the Frobenius map is not linear otherwise");

    long p = field.p;
    long q = 1;
    while (q < m) {
        if (q > (1L << 40)) throw computation_error("Frobenius exponent overflow");
        q *= p;
    }
    // Column i is e_i^(p^K); the kernel of this linear map is the nilradical.
    Matrix<Fp> frob(m, m, Fp(p, 0));
    for (int i = 0; i < m; ++i) {
        std::vector<Fp> e(m, Fp(p, 0));
        e[i] = Fp(p, 1);
        std::vector<Fp> img = power_fp(f, p, e, q);
        for (int k = 0; k < m; ++k) frob.at(k, i) = img[k];
    }
    return kernel_basis(std::move(frob)).empty();
}

} // namespace charta
