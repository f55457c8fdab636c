#include "expsum/cyclo.hpp"

#include <cmath>
#include <complex>
#include <sstream>

namespace expsum {

mpz_class mpz_from_i128(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? (unsigned __int128)(-v) : (unsigned __int128)v;
    mpz_class hi((unsigned long)(u >> 64));
    mpz_class lo((unsigned long)(u & 0xffffffffffffffffULL));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

void CycloElem::check_compat(const CycloElem& b) const {
    if (p_ != b.p_) throw FieldMismatch("Z[zeta_p] elements with different p");
}

CycloElem CycloElem::from_int(u64 p, const mpz_class& n) {
    CycloElem a(p);
    a.c_[0] = n;
    return a;
}

CycloElem CycloElem::zeta_power(u64 p, u64 e) {
    CycloElem a(p);
    e %= p;
    if (e < p - 1) {
        a.c_[e] = 1;
    } else {
        for (auto& x : a.c_) x = -1;
    }
    return a;
}

bool CycloElem::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycloElem::is_rational_integer() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

mpz_class CycloElem::rational_integer() const {
    if (!is_rational_integer()) throw IdentityFailure("element is not a rational integer");
    return c_[0];
}

CycloElem operator+(const CycloElem& a, const CycloElem& b) {
    a.check_compat(b);
    CycloElem r(a.p_);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
}

CycloElem operator-(const CycloElem& a, const CycloElem& b) {
    a.check_compat(b);
    CycloElem r(a.p_);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
}

CycloElem CycloElem::operator-() const {
    CycloElem r(p_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

CycloElem operator*(const CycloElem& a, const CycloElem& b) {
    a.check_compat(b);
    u64 p = a.p_;
    // accumulate in the exponent-mod-p group ring, then canonicalize
    std::vector<mpz_class> g(p, 0);
    for (size_t i = 0; i < p - 1; ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < p - 1; ++j) {
            if (b.c_[j] == 0) continue;
            g[(i + j) % p] += a.c_[i] * b.c_[j];
        }
    }
    CycloElem r(p);
    for (size_t i = 0; i < p - 1; ++i) r.c_[i] = g[i] - g[p - 1];
    return r;
}

CycloElem CycloElem::scaled(const mpz_class& n) const {
    CycloElem r(p_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * n;
    return r;
}

CycloElem CycloElem::divided_exact(const mpz_class& n) const {
    if (n == 0) throw NotAUnit("division by zero integer");
    CycloElem r(p_);
    for (size_t i = 0; i < c_.size(); ++i) {
        mpz_class q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c_[i].get_mpz_t(), n.get_mpz_t());
        if (rem != 0) throw DivisionInexact("coordinate not divisible by " + n.get_str());
        r.c_[i] = q;
    }
    return r;
}

std::string CycloElem::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << (c_[i] > 0 ? " + " : " - ");
        else if (c_[i] < 0) os << "-";
        mpz_class a = abs(c_[i]);
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

CycloElem zeta_accumulate(u64 p, const std::vector<mpz_class>& counts) {
    if (counts.size() != p) throw DegreeMismatch("counts vector must have length p");
    CycloElem r(p);
    for (size_t i = 0; i < p - 1; ++i) r[i] = counts[i] - counts[p - 1];
    return r;
}

CycloElem zeta_accumulate_i64(u64 p, const std::vector<i64>& counts) {
    std::vector<mpz_class> c(counts.begin(), counts.end());
    return zeta_accumulate(p, c);
}

CycloElem zeta_accumulate_i128(u64 p, const std::vector<__int128>& counts) {
    if (counts.size() != p) throw DegreeMismatch("counts vector must have length p");
    std::vector<mpz_class> c(p);
    for (size_t i = 0; i < p; ++i) c[i] = mpz_from_i128(counts[i]);
    return zeta_accumulate(p, c);
}

CycloElem zeta_accumulate_multiset(u64 p, const std::vector<u64>& exponents) {
    std::vector<mpz_class> counts(p, 0);
    for (u64 e : exponents) counts[e % p] += 1;
    return zeta_accumulate(p, counts);
}

CycloElem galois_apply(const CycloElem& a, u64 t) {
    u64 p = a.p();
    t %= p;
    if (t == 0) throw NotAUnit("galois_apply with p | t");
    std::vector<mpz_class> g(p, 0);
    for (size_t i = 0; i < p - 1; ++i) g[(i * t) % p] += a[i];
    std::vector<mpz_class> counts(g.begin(), g.end());
    return zeta_accumulate(p, counts);
}

CycloElem conj(const CycloElem& a) { return galois_apply(a, a.p() - 1); }

u64 primitive_root(u64 p) {
    std::vector<u64> pf = distinct_prime_factors(p - 1);
    for (u64 g = 2; g < p; ++g) {
        bool ok = true;
        for (u64 l : pf)
            if (powp(g, (p - 1) / l, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw NonConvergent("no primitive root (impossible for prime p)");
}

bool in_index_r_subfield(const CycloElem& a, u64 r) {
    u64 p = a.p();
    if (r == 0 || (p - 1) % r != 0)
        throw BadIndex("r must divide p-1; got r=" + std::to_string(r));
    u64 g = primitive_root(p);
    u64 t = powp(g, r, p);
    return galois_apply(a, t) == a;
}

i64 pi_valuation(const CycloElem& a0) {
    if (a0.is_zero()) return -1;
    u64 p = a0.p();
    CycloElem a = a0;
    i64 v = 0;
    for (;;) {
        // residue at the prime (1-ζ): map ζ -> 1, i.e. Σ coords mod p
        mpz_class s = 0;
        for (size_t i = 0; i < p - 1; ++i) s += a[i];
        if (s % (long)p != 0) return v;
        // divide exactly by (ζ - 1): solve (ζ-1)b = a coordinatewise.
        // With b_{-1} := 0 and the fold ζ^{p-1} = -Σζ^j, the coordinates of
        // (ζ-1)b are a_i = b_{i-1} - b_{p-2} - b_i, which gives
        // b_i = -(i+1)t - Σ_{j<=i} a_j with t := b_{p-2} = -(Σ_j a_j)/p.
        mpz_class t = -s / (long)p;
        CycloElem b(p);
        mpz_class prefix = 0;
        for (size_t i = 0; i < p - 1; ++i) {
            prefix += a[i];
            b[i] = -t * (long)(i + 1) - prefix;
        }
        a = b;
        ++v;
        if (a.is_zero())
            throw IdentityFailure("nonzero element became zero during (1-ζ) division");
    }
}

std::vector<double> complex_abs_all(const CycloElem& a) {
    u64 p = a.p();
    std::vector<double> out;
    out.reserve(p - 1);
    const double tau = 6.283185307179586476925286766559;
    for (u64 t = 1; t < p; ++t) {
        std::complex<double> v = 0;
        for (size_t j = 0; j < p - 1; ++j) {
            double cj = a[j].get_d();
            double ang = tau * (double)((j * t) % p) / (double)p;
            v += cj * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        out.push_back(std::abs(v));
    }
    return out;
}

}  // namespace expsum
