#include "charta/cyclotomic.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace charta {

namespace {

// Dense univariate polynomials over Q, constant term first.
using Poly = std::vector<Rational>;

int pdeg(const Poly& p) {
    for (int i = (int)p.size() - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

void ptrim(Poly& p) {
    int d = pdeg(p);
    p.resize(d + 1 < 1 ? 1 : d + 1, Rational(0));
    if (p.empty()) p.push_back(Rational(0));
}

// Remainder of a modulo b, b nonzero.
Poly pmod(Poly a, const Poly& b) {
    int db = pdeg(b);
    for (int da = pdeg(a); da >= db && da >= 0; da = pdeg(a)) {
        Rational q = a[da] / b[db];
        for (int i = 0; i <= db; ++i) a[da - db + i] -= q * b[i];
    }
    ptrim(a);
    return a;
}

} // namespace

int euler_phi(int n) {
    int result = n, m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

const std::vector<mpz_class>& cyclotomic_polynomial(int n) {
    static std::map<int, std::vector<mpz_class>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);

    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, by exact division over Z.
    std::function<const std::vector<mpz_class>&(int)> get = [&](int m) -> const std::vector<mpz_class>& {
        auto found = cache.find(m);
        if (found != cache.end()) return found->second;
        std::vector<mpz_class> num(m + 1, 0);
        num[0] = -1;
        num[m] = 1;
        for (int d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            const std::vector<mpz_class>& phid = get(d);
            // num /= phid (exact; divisor is monic)
            int dn = (int)num.size() - 1, dd = (int)phid.size() - 1;
            std::vector<mpz_class> quot(dn - dd + 1, 0);
            for (int i = dn - dd; i >= 0; --i) {
                quot[i] = num[i + dd];
                for (int j = 0; j <= dd; ++j) num[i + j] -= quot[i] * phid[j];
            }
            num = std::move(quot);
        }
        return cache.emplace(m, std::move(num)).first->second;
    };
    return get(n);
}

struct CycNumber::Ctx {
    int n;
    int deg;
    Poly phi;                       // Phi_n over Q
    std::vector<Poly> xpow;        // x^j mod Phi_n, j = 0 .. max(2deg-2, n-1)
};

std::shared_ptr<const CycNumber::Ctx> CycNumber::context(int n) {
    static std::map<int, std::shared_ptr<const Ctx>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);

    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n < 1) throw validation_error("conductor must be positive");

    auto ctx = std::make_shared<Ctx>();
    ctx->n = n;
    const std::vector<mpz_class>& phiz = cyclotomic_polynomial(n);
    ctx->deg = (int)phiz.size() - 1;
    ctx->phi.resize(phiz.size());
    for (size_t i = 0; i < phiz.size(); ++i) ctx->phi[i] = Rational(phiz[i]);

    int d = ctx->deg;
    int maxj = std::max(2 * d - 2, n - 1);
    ctx->xpow.resize(maxj + 1);
    Poly cur(d, Rational(0));
    cur[0] = 1;
    ctx->xpow[0] = cur;
    for (int j = 1; j <= maxj; ++j) {
        // multiply by x, fold the x^d term back using x^d = -(phi - x^d)
        Rational top = cur[d - 1];
        for (int i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (int i = 0; i < d; ++i) cur[i] -= top * ctx->phi[i];
        ctx->xpow[j] = cur;
    }

    cache.emplace(n, ctx);
    return ctx;
}

CycNumber::CycNumber(int conductor) : n_(conductor), ctx_(context(conductor)) {
    c_.assign(ctx_->deg, Rational(0));
}

CycNumber::CycNumber(int conductor, std::vector<Rational> coeffs)
    : n_(conductor), c_(std::move(coeffs)), ctx_(context(conductor)) {
    if ((int)c_.size() != ctx_->deg)
        throw validation_error("cyclotomic coefficient vector has wrong length");
}

CycNumber CycNumber::from_rational(const Rational& r, int conductor) {
    CycNumber z(conductor);
    z.c_[0] = r;
    return z;
}

CycNumber CycNumber::root_of_unity(int conductor, long power) {
    CycNumber z(conductor);
    long k = power % conductor;
    if (k < 0) k += conductor;
    const Poly& p = z.ctx_->xpow[k];
    for (int i = 0; i < (int)p.size() && i < (int)z.c_.size(); ++i) z.c_[i] = p[i];
    return z;
}

bool CycNumber::is_zero() const {
    for (const Rational& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycNumber::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

CycNumber CycNumber::lifted(int m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw validation_error("conductor lift target must be a multiple");
    CycNumber out(m);
    long step = m / n_;
    for (int k = 0; k < (int)c_.size(); ++k) {
        if (c_[k] == 0) continue;
        const Poly& p = out.ctx_->xpow[(k * step) % m];
        for (int i = 0; i < (int)p.size(); ++i) out.c_[i] += c_[k] * p[i];
    }
    return out;
}

std::complex<double> CycNumber::embed() const {
    const double tau = 6.283185307179586476925286766559;
    std::complex<double> zeta = std::polar(1.0, tau / n_);
    std::complex<double> acc(0.0, 0.0);
    for (int i = (int)c_.size() - 1; i >= 0; --i) acc = acc * zeta + to_double(c_[i]);
    return acc;
}

CycNumber CycNumber::conjugate() const {
    CycNumber out(n_);
    for (int k = 0; k < (int)c_.size(); ++k) {
        if (c_[k] == 0) continue;
        const Poly& p = ctx_->xpow[(n_ - k) % n_];
        for (int i = 0; i < (int)p.size(); ++i) out.c_[i] += c_[k] * p[i];
    }
    return out;
}

CycNumber CycNumber::inverse() const {
    if (is_zero()) throw computation_error("division by zero in Q(zeta_" + std::to_string(n_) + ")");
    // Extended Euclid against Phi_n; Phi_n irreducible over Q, so the gcd
    // is a nonzero constant c with t*this = c (mod Phi_n).
    Poly r0 = ctx_->phi, r1(c_.begin(), c_.end());
    ptrim(r1);
    Poly t0{Rational(0)}, t1{Rational(1)};
    while (pdeg(r1) > 0) {
        int d0 = pdeg(r0), d1 = pdeg(r1);
        Poly q(d0 - d1 + 1, Rational(0));
        Poly rem = r0;
        for (int da = pdeg(rem); da >= d1; da = pdeg(rem)) {
            Rational f = rem[da] / r1[d1];
            q[da - d1] = f;
            for (int i = 0; i <= d1; ++i) rem[da - d1 + i] -= f * r1[i];
        }
        ptrim(rem);
        // t_next = t0 - q * t1
        Poly tn(std::max(t0.size(), q.size() + t1.size()), Rational(0));
        for (size_t i = 0; i < t0.size(); ++i) tn[i] = t0[i];
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < t1.size(); ++j) tn[i + j] -= q[i] * t1[j];
        ptrim(tn);
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(tn);
    }
    if (pdeg(r1) != 0) throw computation_error("inverse failed: gcd with Phi_n not constant");
    Rational c = r1[0];
    CycNumber out(n_);
    Poly red = pmod(t1, ctx_->phi);
    for (int i = 0; i < (int)red.size() && i < (int)out.c_.size(); ++i) out.c_[i] = red[i] / c;
    return out;
}

CycNumber CycNumber::operator-() const {
    CycNumber out = *this;
    for (Rational& x : out.c_) x = -x;
    return out;
}

namespace {
int lcm_conductor(int a, int b) {
    long l = std::lcm((long)a, (long)b);
    if (l > 1000000) throw computation_error("conductor lcm exceeds supported bound");
    return (int)l;
}
} // namespace

CycNumber operator+(const CycNumber& a, const CycNumber& b) {
    if (a.n_ != b.n_) {
        int m = lcm_conductor(a.n_, b.n_);
        return a.lifted(m) + b.lifted(m);
    }
    CycNumber out = a;
    for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += b.c_[i];
    return out;
}

CycNumber operator-(const CycNumber& a, const CycNumber& b) {
    if (a.n_ != b.n_) {
        int m = lcm_conductor(a.n_, b.n_);
        return a.lifted(m) - b.lifted(m);
    }
    CycNumber out = a;
    for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] -= b.c_[i];
    return out;
}

CycNumber operator*(const CycNumber& a, const CycNumber& b) {
    if (a.n_ != b.n_) {
        int m = lcm_conductor(a.n_, b.n_);
        return a.lifted(m) * b.lifted(m);
    }
    int d = (int)a.c_.size();
    std::vector<Rational> conv(2 * d - 1, Rational(0));
    for (int i = 0; i < d; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (b.c_[j] == 0) continue;
            conv[i + j] += a.c_[i] * b.c_[j];
        }
    }
    CycNumber out(a.n_);
    for (int i = 0; i < d; ++i) out.c_[i] = conv[i];
    for (int j = d; j < 2 * d - 1; ++j) {
        if (conv[j] == 0) continue;
        const std::vector<Rational>& p = a.ctx_->xpow[j];
        for (int i = 0; i < (int)p.size(); ++i) out.c_[i] += conv[j] * p[i];
    }
    return out;
}

CycNumber operator/(const CycNumber& a, const CycNumber& b) { return a * b.inverse(); }

bool operator==(const CycNumber& a, const CycNumber& b) {
    if (a.n_ != b.n_) {
        int m = lcm_conductor(a.n_, b.n_);
        return a.lifted(m) == b.lifted(m);
    }
    return a.c_ == b.c_;
}

std::string CycNumber::str() const {
    if (is_rational()) return format_rational(c_[0]);
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < (int)c_.size(); ++k) {
        if (c_[k] == 0) continue;
        if (!first) os << " + ";
        os << format_rational(c_[k]);
        if (k > 0) os << "*z" << n_ << "^" << k;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace charta
