#include "expsum/padic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>

namespace expsum {

namespace {

constexpr i64 kInfVal = INT64_MAX / 4;

inline u64 addm(u64 a, u64 b, u64 m) {
    u64 r = a + b;
    return r >= m ? r - m : r;
}
inline u64 subm(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }
inline u64 mulm(u64 a, u64 b, u64 m) {
    return (u64)((unsigned __int128)a * b % m);
}

// inverse of a modulo m for gcd(a, m) = 1 (m need not be prime)
u64 invm(u64 a, u64 m) {
    __int128 r0 = m, r1 = a % m, s0 = 0, s1 = 1;
    while (r1 != 0) {
        __int128 q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    if (r0 != 1) throw NotAUnit("modular inverse of a non-unit");
    __int128 s = s0 % (__int128)m;
    if (s < 0) s += m;
    return (u64)s;
}

u64 digit_sum_base_p(u64 r, u64 p) {
    u64 s = 0;
    while (r) {
        s += r % p;
        r /= p;
    }
    return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// PadicRing

PadicRing::PadicRing(u64 p, u64 s, i64 storage_pi_digits)
    : p_(p), s_(s), ff_(p, s) {
    if (storage_pi_digits < 1) throw BadIndex("storage precision must be >= 1");
    N0_ = (storage_pi_digits + (i64)p - 2) / (i64)(p - 1);
    // p^{N0} must stay below 2^62 so coordinate products fit in __int128
    unsigned __int128 m = 1;
    for (i64 i = 0; i < N0_; ++i) {
        m *= p;
        if (m >= ((unsigned __int128)1 << 62))
            throw TooLarge("p^{N0} exceeds the u64 coordinate budget");
    }
    pN0_ = (u64)m;
    modlift_ = ff_.modulus();
    fact_unit_cache_.push_back(1);
}

PadicElem::PadicElem(const PadicRing& R)
    : R_(&R), c_((R.p() - 1) * R.s(), 0), cert_(R.prec()) {}

const PadicRing& PadicElem::ring() const {
    if (!R_) throw EmptyInput("uninitialized PadicElem");
    return *R_;
}

void PadicElem::check_compat(const PadicElem& b) const {
    if (!R_ || R_ != b.R_) throw FieldMismatch("PadicElems from different rings");
}

PadicElem PadicRing::zero() const { return PadicElem(*this); }

PadicElem PadicRing::one() const { return from_int(1); }

PadicElem PadicRing::pi() const {
    PadicElem x(*this);
    x.c_[1 * s_] = 1;
    return x;
}

PadicElem PadicRing::from_int(i64 n) const {
    __int128 v = (__int128)n % (__int128)pN0_;
    if (v < 0) v += pN0_;
    PadicElem x(*this);
    x.c_[0] = (u64)v;
    return x;
}

PadicElem PadicRing::from_mpz(const mpz_class& n) const {
    mpz_class m;
    mpz_fdiv_r_ui(m.get_mpz_t(), n.get_mpz_t(), (unsigned long)pN0_);
    PadicElem x(*this);
    x.c_[0] = mpz_get_ui(m.get_mpz_t());
    return x;
}

PadicElem PadicRing::from_ff(const FqElem& x) const {
    if (x.size() != s_) throw FieldMismatch("FqElem of wrong degree");
    PadicElem r(*this);
    for (u64 l = 0; l < s_; ++l) r.c_[l] = x[l];
    return r;
}

FqElem PadicRing::residue(const PadicElem& x) const {
    if (x.R_ != this) throw FieldMismatch("element from another ring");
    FqElem r(s_);
    for (u64 l = 0; l < s_; ++l) r[l] = x.c_[l] % p_;
    return r;
}

// W(F_q) product of two coordinate slices (length s), reduced by the monic
// modulus lift Y^s = −Σ modlift_[l] Y^l, all modulo p^{N0}.
void PadicRing::wmul(u64* out, const u64* a, const u64* b) const {
    if (s_ == 1) {
        out[0] = mulm(a[0], b[0], pN0_);
        return;
    }
    std::vector<u64> t(2 * s_ - 1, 0);
    for (u64 i = 0; i < s_; ++i) {
        if (a[i] == 0) continue;
        for (u64 j = 0; j < s_; ++j)
            t[i + j] = addm(t[i + j], mulm(a[i], b[j], pN0_), pN0_);
    }
    for (u64 d = 2 * s_ - 2; d >= s_; --d) {
        u64 v = t[d];
        if (v == 0) continue;
        t[d] = 0;
        for (u64 l = 0; l < s_; ++l)
            t[d - s_ + l] = subm(t[d - s_ + l], mulm(v, modlift_[l], pN0_), pN0_);
    }
    for (u64 l = 0; l < s_; ++l) out[l] = t[l];
}

std::vector<u64> PadicRing::mul_digits(const std::vector<u64>& a,
                                       const std::vector<u64>& b) const {
    u64 nd = p_ - 1;
    std::vector<u64> acc((2 * nd - 1) * s_, 0);
    std::vector<u64> scratch(s_);
    auto digit_zero = [&](const std::vector<u64>& v, u64 j) {
        for (u64 l = 0; l < s_; ++l)
            if (v[j * s_ + l]) return false;
        return true;
    };
    for (u64 j = 0; j < nd; ++j) {
        if (digit_zero(a, j)) continue;
        for (u64 k = 0; k < nd; ++k) {
            if (digit_zero(b, k)) continue;
            wmul(scratch.data(), &a[j * s_], &b[k * s_]);
            for (u64 l = 0; l < s_; ++l)
                acc[(j + k) * s_ + l] = addm(acc[(j + k) * s_ + l], scratch[l], pN0_);
        }
    }
    // fold π^{j} = −p·π^{j−(p−1)} for j ≥ p−1
    for (u64 j = 2 * nd - 2; j >= nd; --j)
        for (u64 l = 0; l < s_; ++l) {
            u64 v = acc[j * s_ + l];
            if (v)
                acc[(j - nd) * s_ + l] =
                    subm(acc[(j - nd) * s_ + l], mulm(p_, v, pN0_), pN0_);
        }
    acc.resize(nd * s_);
    return acc;
}

// ---------------------------------------------------------------------------
// PadicElem: valuation, normalization, arithmetic

i64 PadicElem::raw_pi_valuation() const {
    const PadicRing& R = ring();
    i64 best = kInfVal;
    for (u64 j = 0; j + 1 < R.p(); ++j)
        for (u64 l = 0; l < R.s(); ++l) {
            u64 c = c_[j * R.s() + l];
            if (c == 0) continue;
            i64 vp = 0;
            while (c % R.p() == 0) {
                c /= R.p();
                ++vp;
            }
            best = std::min(best, (i64)j + (i64)(R.p() - 1) * vp);
        }
    return best;
}

namespace {
// mask coordinates above the certified precision so stored digits never
// carry uncertified residue (keeps divisibility checks meaningful)
void mask_to_cert(const PadicRing& R, std::vector<u64>& c, i64& cert) {
    cert = std::min(cert, R.prec());
    if (cert < 0) cert = 0;
    for (u64 j = 0; j + 1 < R.p(); ++j) {
        i64 mj = cert - (i64)j;
        mj = mj <= 0 ? 0 : (mj + (i64)R.p() - 2) / (i64)(R.p() - 1);
        if (mj >= R.N0()) continue;
        u64 pm = 1;
        for (i64 i = 0; i < mj; ++i) pm *= R.p();
        for (u64 l = 0; l < R.s(); ++l) c[j * R.s() + l] %= pm;
    }
}
}  // namespace

bool PadicElem::is_zero() const { return raw_pi_valuation() >= cert_; }

i64 PadicElem::pi_valuation() const {
    i64 v = raw_pi_valuation();
    if (v >= cert_)
        throw PrecisionExhausted("element is 0 mod π^" + std::to_string(cert_) +
                                 "; valuation not determined");
    return v;
}

i64 PadicElem::pi_val_floor() const { return std::min(raw_pi_valuation(), cert_); }

Rat PadicElem::valuation() const { return Rat(pi_valuation(), (i64)ring().p() - 1); }

bool PadicElem::ord_at_least(i64 m) const {
    return cert_ >= m && raw_pi_valuation() >= m;
}

PadicElem PadicElem::operator-() const {
    const PadicRing& R = ring();
    PadicElem r = *this;
    for (auto& x : r.c_) x = subm(0, x, R.pN0());
    return r;
}

PadicElem operator+(const PadicElem& a, const PadicElem& b) {
    a.check_compat(b);
    const PadicRing& R = a.ring();
    PadicElem r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = addm(r.c_[i], b.c_[i], R.pN0());
    r.cert_ = std::min(a.cert_, b.cert_);
    mask_to_cert(R, r.c_, r.cert_);
    return r;
}

PadicElem operator-(const PadicElem& a, const PadicElem& b) {
    a.check_compat(b);
    const PadicRing& R = a.ring();
    PadicElem r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = subm(r.c_[i], b.c_[i], R.pN0());
    r.cert_ = std::min(a.cert_, b.cert_);
    mask_to_cert(R, r.c_, r.cert_);
    return r;
}

PadicElem operator*(const PadicElem& a, const PadicElem& b) {
    a.check_compat(b);
    const PadicRing& R = a.ring();
    PadicElem r(R);
    r.c_ = R.mul_digits(a.c_, b.c_);
    i64 va = std::min(a.raw_pi_valuation(), a.cert_);
    i64 vb = std::min(b.raw_pi_valuation(), b.cert_);
    r.cert_ = std::min({va + b.cert_, vb + a.cert_, R.prec()});
    if (r.cert_ <= 0) throw PrecisionExhausted("product retains no certified digits");
    mask_to_cert(R, r.c_, r.cert_);
    return r;
}

PadicElem PadicElem::scaled_int(i64 n) const {
    const PadicRing& R = ring();
    __int128 v = (__int128)n % (__int128)R.pN0();
    if (v < 0) v += R.pN0();
    PadicElem r = *this;
    for (auto& x : r.c_) x = mulm(x, (u64)v, R.pN0());
    mask_to_cert(R, r.c_, r.cert_);
    return r;
}

PadicElem PadicElem::pow_u64(u64 e) const {
    const PadicRing& R = ring();
    PadicElem acc = R.one();
    acc.cert_ = cert_;  // conservative: powers inherit the base certificate
    PadicElem base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

PadicElem PadicElem::inv() const {
    const PadicRing& R = ring();
    if (is_zero()) throw NotAUnit("inverse of (certified) zero");
    if (raw_pi_valuation() != 0) throw NotAUnit("inverse of a non-unit");
    PadicElem x = R.from_ff(R.ff().inv(R.residue(*this)));
    PadicElem two = R.from_int(2);
    int iters = 2;
    for (i64 c = 1; c < R.prec(); c *= 2) ++iters;
    for (int i = 0; i < iters; ++i) x = x * (two - *this * x);
    x.cert_ = std::min(cert_, R.prec());
    mask_to_cert(R, x.c_, x.cert_);
    if (!(*this * x == R.one().with_cert(x.cert_)))
        throw NonConvergent("unit inverse iteration failed");
    return x;
}

PadicElem PadicElem::div_exact(const PadicElem& b) const {
    check_compat(b);
    if (b.is_zero()) throw NotAUnit("division by (certified) zero");
    i64 t = b.raw_pi_valuation();
    if (t == 0) return *this * b.inv();
    return (*this * b.div_pi(t).inv()).div_pi(t);
}

PadicElem PadicElem::mul_pi(i64 t) const {
    if (t < 0) throw BadIndex("mul_pi exponent must be >= 0");
    const PadicRing& R = ring();
    u64 nd = R.p() - 1, s = R.s();
    i64 q = t / (i64)nd, r = t % (i64)nd;
    PadicElem out(R);
    // (−p)^q scaling of every coordinate
    u64 scale = 1;
    for (i64 i = 0; i < std::min(q, R.N0()); ++i) scale = mulm(scale, R.p(), R.pN0());
    if (q >= R.N0()) scale = 0;
    bool neg = (q % 2) != 0;
    for (u64 j = 0; j < nd; ++j) {
        u64 jn = (u64)(((i64)j + r) % (i64)nd);
        bool fold = (i64)j + r >= (i64)nd;  // one extra π^{p−1} = −p factor
        for (u64 l = 0; l < s; ++l) {
            u64 v = mulm(c_[j * s + l], scale, R.pN0());
            if (fold) v = mulm(v, R.p(), R.pN0());
            bool vneg = neg ^ fold;
            out.c_[jn * s + l] =
                vneg ? subm(out.c_[jn * s + l], v, R.pN0())
                     : addm(out.c_[jn * s + l], v, R.pN0());
        }
    }
    out.cert_ = std::min(cert_ + t, R.prec());
    mask_to_cert(R, out.c_, out.cert_);
    return out;
}

PadicElem PadicElem::div_pi(i64 t) const {
    if (t < 0) throw BadIndex("div_pi exponent must be >= 0");
    if (t == 0) return *this;
    const PadicRing& R = ring();
    if (cert_ < t + 1)
        throw PrecisionExhausted("division by π^" + std::to_string(t) +
                                 " leaves no certified digits");
    u64 nd = R.p() - 1, s = R.s();
    i64 q = t / (i64)nd, r = t % (i64)nd;
    PadicElem out(R);
    // step 1: divide by π^r
    for (u64 j = 0; j < nd; ++j)
        for (u64 l = 0; l < s; ++l) {
            u64 v = c_[j * s + l];
            if ((i64)j >= r) {
                out.c_[(j - r) * s + l] = v;
            } else if (v != 0) {
                if (v % R.p() != 0)
                    throw DivisionInexact("digit not divisible in division by π");
                out.c_[(j + nd - r) * s + l] = subm(0, v / R.p(), R.pN0());
            }
        }
    // step 2: divide by (−p)^q coordinate-wise
    if (q > 0) {
        u64 pq = 1;
        for (i64 i = 0; i < q; ++i) pq *= R.p();
        for (auto& v : out.c_) {
            if (v % pq != 0)
                throw DivisionInexact("digit not divisible in division by p^" +
                                      std::to_string(q));
            v /= pq;
        }
        if (q % 2)
            for (auto& v : out.c_) v = subm(0, v, R.pN0());
    }
    out.cert_ = cert_ - t;
    mask_to_cert(R, out.c_, out.cert_);
    return out;
}

PadicElem PadicElem::with_cert(i64 c) const {
    if (c < 1) throw BadIndex("certificate must be >= 1");
    PadicElem r = *this;
    r.cert_ = std::min(c, ring().prec());
    mask_to_cert(ring(), r.c_, r.cert_);
    return r;
}

std::string PadicElem::str(i64 max_digits) const {
    const PadicRing& R = ring();
    std::ostringstream os;
    bool first = true;
    i64 shown = 0;
    for (u64 j = 0; j + 1 < R.p(); ++j) {
        bool nz = false;
        for (u64 l = 0; l < R.s(); ++l) nz = nz || c_[j * R.s() + l];
        if (!nz) continue;
        if (max_digits >= 0 && shown >= max_digits) {
            os << " + ...";
            break;
        }
        if (!first) os << " + ";
        os << "(";
        bool f2 = true;
        for (u64 l = 0; l < R.s(); ++l) {
            if (!c_[j * R.s() + l]) continue;
            if (!f2) os << "+";
            os << c_[j * R.s() + l];
            if (l >= 1) os << "Y";
            if (l > 1) os << "^" << l;
            f2 = false;
        }
        os << ")";
        if (j >= 1) os << "*pi";
        if (j > 1) os << "^" << j;
        first = false;
        ++shown;
    }
    if (first) os << "0";
    os << " [cert " << cert_ << "]";
    return os.str();
}

bool agree_mod(const PadicElem& a, const PadicElem& b, i64 m) {
    PadicElem d = a - b;
    if (d.cert() < m)
        throw PrecisionExhausted("agreement mod π^" + std::to_string(m) +
                                 " requested but only " + std::to_string(d.cert()) +
                                 " digits certified");
    return d.ord_at_least(m);
}

// ---------------------------------------------------------------------------
// π^r / r!, splitting coefficients, ζ_p

u64 PadicRing::fact_unit(u64 r) const {
    while (fact_unit_cache_.size() <= r) {
        u64 n = (u64)fact_unit_cache_.size();
        while (n % p_ == 0) n /= p_;
        fact_unit_cache_.push_back(mulm(fact_unit_cache_.back(), n % pN0_, pN0_));
    }
    return fact_unit_cache_[r];
}

PadicElem PadicRing::pi_pow_over_fact(u64 r) const {
    u64 b = r % (p_ - 1);
    u64 a = r / (p_ - 1);
    u64 e = (digit_sum_base_p(r, p_) - b) / (p_ - 1);
    PadicElem x(*this);
    if ((i64)e < N0_) {
        u64 v = 1;
        for (u64 i = 0; i < e; ++i) v *= p_;
        v = mulm(v, invm(fact_unit(r), pN0_), pN0_);
        if (a % 2) v = subm(0, v, pN0_);
        x.c_[b * s_] = v;
    }
    return x;  // cert = full storage: the discarded case has ord ≥ capacity
}

void PadicRing::ensure_theta(u64 n) const {
    while (theta_cache_.size() <= n) {
        u64 m = (u64)theta_cache_.size();
        PadicElem t = zero();
        for (u64 j = 0; j * p_ <= m; ++j) {
            PadicElem term = pi_pow_over_fact(m - j * p_) * pi_pow_over_fact(j);
            if (j % 2)
                t -= term;
            else
                t += term;
        }
        theta_cache_.push_back(t);
    }
}

PadicElem PadicRing::theta_coeff(u64 i) const {
    ensure_theta(i);
    return theta_cache_[i];
}

PadicElem PadicRing::theta_eval(const PadicElem& t) const {
    // tail: ord θ_i ≥ (p−1)²·i/p² π-digits, so stopping at I with
    // (p−1)²·(I+1) ≥ p²·prec certifies the drop at full storage precision
    u64 I = (u64)((prec() * (i64)(p_ * p_)) / (i64)((p_ - 1) * (p_ - 1))) + 1;
    ensure_theta(I);
    PadicElem v = theta_cache_[I];
    for (u64 i = I; i-- > 0;) v = v * t + theta_cache_[i];
    return v;
}

PadicElem PadicRing::zeta_p() const {
    if (!zeta_cache_) zeta_cache_ = theta_eval(one());
    return *zeta_cache_;
}

SplittingCoeffs splitting_coeffs(const PadicRing& R, u64 n) {
    SplittingCoeffs sc;
    for (u64 i = 0; i <= n; ++i) sc.theta.push_back(R.theta_coeff(i));
    return sc;
}

// ---------------------------------------------------------------------------
// Teichmüller lifts and Gauss sums

PadicElem PadicRing::teichmuller(const FqElem& xbar) const {
    PadicElem x = from_ff(xbar);
    if (ff_.is_zero(xbar)) return x;
    // x ↦ x^q gains one p-digit of Teichmüller agreement per round
    for (i64 i = 0; i <= N0_; ++i) x = x.pow_u64(q());
    if (!(x.pow_u64(q()) == x)) throw NonConvergent("Teichmüller iteration unstable");
    return x;
}

PadicElem gauss_sum(const PadicRing& R, i64 j) {
    const FqCtx& F = R.ff();
    if (F.q() > (1u << 22)) throw TooLarge("Gauss-sum enumeration too large");
    u64 qm1 = F.q() - 1;
    u64 jr = (u64)(((j % (i64)qm1) + (i64)qm1) % (i64)qm1);
    PadicElem acc = R.zero();
    FqElem g = F.generator();
    FqElem x = F.one();
    for (u64 idx = 0; idx < qm1; ++idx) {
        // t = Teich(x); t^{−j}·θ(t)θ(t^p)···θ(t^{p^{s−1}})
        PadicElem term = R.teichmuller(F.pow(x, (qm1 - jr) % qm1));
        FqElem xf = x;
        for (u64 l = 0; l < R.s(); ++l) {
            term = term * R.theta_eval(R.teichmuller(xf));
            xf = F.frobenius(xf);
        }
        acc += term;
        x = F.mul(x, g);
    }
    return -acc;
}

// ---------------------------------------------------------------------------
// embeddings

PadicElem embed_padic(const CycloElem& x, const PadicRing& R) {
    if (x.p() != R.p()) throw FieldMismatch("Z[zeta_p] element with wrong p");
    PadicElem z = R.zeta_p();
    PadicElem v = R.zero();
    for (u64 i = R.p() - 1; i-- > 0;) v = v * z + R.from_mpz(x[i]);
    return v;
}

PadicElem embed_prime_subring(const PadicElem& x, const PadicRing& R2) {
    const PadicRing& R1 = x.ring();
    if (R1.s() != 1 || R1.p() != R2.p())
        throw FieldMismatch("prime-subring embedding needs matching p and s=1 source");
    PadicElem r = R2.zero();
    i64 c = std::min(x.cert(), R2.prec());
    // coordinates are plain Z_p integers; p^{N0} budgets are nested powers of
    // p, so reduction mod the target budget is the correct transport
    for (u64 j = 0; j + 1 < R1.p(); ++j) r.c_[j * R2.s()] = x.c_[j] % R2.pN0();
    return r.with_cert(c);
}

// ---------------------------------------------------------------------------
// square roots and κ

PadicElem hensel_sqrt(const PadicElem& a) {
    const PadicRing& R = a.ring();
    if (a.is_zero()) throw NotAUnit("sqrt of (certified) zero");
    if (a.raw_pi_valuation() != 0) throw NotAUnit("sqrt of a non-unit");
    const FqCtx& F = R.ff();
    FqElem res = R.residue(a);
    bool found = false;
    FqElem root = F.zero();
    for (u64 i = 0; i < F.q(); ++i) {
        FqElem y = F.from_index(i);
        if (F.mul(y, y) == res) {
            root = y;
            found = true;
            break;
        }
    }
    if (!found) throw HypothesisFailed("residue is not a square in F_q");
    PadicElem x = R.from_ff(root);
    PadicElem inv2 = R.from_int(2).inv();
    int iters = 2;
    for (i64 c = 1; c < R.prec(); c *= 2) ++iters;
    for (int i = 0; i < iters; ++i) x = (x + a * x.inv()) * inv2;
    if (!(x * x == a)) throw NonConvergent("sqrt iteration failed");
    return x;
}

u64 kappa_ring_degree(u64 p) { return p % 12 == 1 ? 1 : 2; }

PadicElem kappa(const PadicRing& R) {
    PadicElem i = hensel_sqrt(R.from_int(-1));
    PadicElem s3 = hensel_sqrt(R.from_int(3));
    PadicElem k = R.from_int(2) * i * (R.from_int(3) * s3).inv();
    if (!(R.from_int(27) * k * k + R.from_int(4) == R.zero().with_cert(k.cert())))
        throw IdentityFailure("κ² ≠ −4/27");
    return k;
}

// ---------------------------------------------------------------------------
// exp and log on their p-adic convergence domains

PadicElem padic_exp(const PadicElem& x) {
    const PadicRing& R = x.ring();
    if (!x.is_zero() && x.pi_valuation() < 2)
        throw NonConvergent("exp needs ord > 1/(p−1), i.e. ≥ 2 π-digits");
    // Σ x^n/n! = Σ (x/π)^n · π^n/n!; ord of the n-th term ≥ n + S_p(n)
    PadicElem y = x.div_pi(1);
    PadicElem acc = R.zero(), ypow = R.one().with_cert(y.cert());
    for (i64 n = 0; n <= R.prec(); ++n) {
        acc += ypow * R.pi_pow_over_fact((u64)n);
        if (n < R.prec()) ypow = ypow * y;
    }
    return acc;
}

PadicElem padic_log(const PadicElem& x) {
    const PadicRing& R = x.ring();
    PadicElem u = x - R.one();
    if (!u.is_zero() && u.pi_valuation() < 2)
        throw NonConvergent("log needs x ≡ 1 with ord(x−1) ≥ 2 π-digits");
    PadicElem acc = R.zero(), upow = R.one().with_cert(u.cert());
    for (i64 n = 1; n <= R.prec(); ++n) {
        upow = upow * u;
        u64 m = (u64)n;
        i64 w = 0;
        while (m % R.p() == 0) {
            m /= R.p();
            ++w;
        }
        PadicElem term = upow.scaled_int((n % 2) ? 1 : -1) * R.from_int((i64)m).inv();
        if (w > 0) {
            term = term.div_pi(w * (i64)(R.p() - 1));
            if (w % 2) term = -term;
        }
        acc += term;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// interned rings

const PadicRing& padic_ring_cache(u64 p, u64 s, i64 storage_pi_digits) {
    static std::mutex mu;
    static std::map<std::tuple<u64, u64, i64>, std::unique_ptr<PadicRing>> pool;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(p, s, storage_pi_digits);
    auto it = pool.find(key);
    if (it == pool.end())
        it = pool.emplace(key, std::make_unique<PadicRing>(p, s, storage_pi_digits)).first;
    return *it->second;
}

}  // namespace expsum
