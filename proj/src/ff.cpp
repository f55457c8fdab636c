#include "expsum/ff.hpp"

#include <algorithm>
#include <numeric>

namespace expsum {

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 d : {2ull, 3ull, 5ull, 7ull}) {
        if (n == d) return true;
        if (n % d == 0) return false;
    }
    for (u64 d = 11; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

u64 powp(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulp(r, a, p);
        a = mulp(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invp(u64 a, u64 p) {
    a %= p;
    if (a == 0) throw NotAUnit("inverse of 0 mod " + std::to_string(p));
    // extended Euclid
    i64 t = 0, newt = 1;
    i64 r = (i64)p, newr = (i64)a;
    while (newr != 0) {
        i64 qq = r / newr;
        std::swap(t -= qq * newt, newt);
        std::swap(r -= qq * newr, newr);
    }
    if (r != 1) throw NotAUnit("not a unit mod " + std::to_string(p));
    return t < 0 ? (u64)(t + (i64)p) : (u64)t;
}

std::vector<u64> distinct_prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// ------------------------------------------------ polynomial helpers -------
// Dense polynomials over F_p, index = degree.  Used only for modulus
// selection and irreducibility, so clarity beats speed here.

namespace {

using Poly = std::vector<u64>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, u64 p) {
    // m is monic of degree s (coeff vector length s+1)
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = addp(r[i + j], mulp(a[i], b[j], p), p);
    size_t s = m.size() - 1;
    for (size_t d = r.size(); d-- > s;) {
        u64 c = r[d];
        if (c == 0) continue;
        r[d] = 0;
        for (size_t j = 0; j < s; ++j)
            r[d - s + j] = subp(r[d - s + j], mulp(c, m[j], p), p);
    }
    r.resize(s);
    trim(r);
    return r;
}

Poly poly_powmod(Poly a, u64 e, const Poly& m, u64 p) {
    Poly r{1};
    while (e) {
        if (e & 1) r = poly_mulmod(r, a, m, p);
        a = poly_mulmod(a, a, m, p);
        e >>= 1;
    }
    return r;
}

// a^(p^k) mod m via k repeated p-th powers
Poly poly_frob_iter(Poly a, unsigned k, const Poly& m, u64 p) {
    for (unsigned i = 0; i < k; ++i) a = poly_powmod(a, p, m, p);
    return a;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        u64 lead_inv = invp(b.back(), p);
        while (a.size() >= b.size()) {
            u64 c = mulp(a.back(), lead_inv, p);
            size_t shift = a.size() - b.size();
            for (size_t j = 0; j < b.size(); ++j)
                a[shift + j] = subp(a[shift + j], mulp(c, b[j], p), p);
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

}  // namespace

bool is_irreducible_monic(u64 p, const std::vector<u64>& c) {
    unsigned s = (unsigned)c.size();
    if (s == 0) throw DegreeZero("modulus of degree 0");
    Poly m(c);
    m.push_back(1);  // monic
    Poly y{0, 1};
    if (s == 1) return true;
    // Y^{p^s} == Y mod m
    Poly yq = poly_frob_iter(y, s, m, p);
    Poly diff = yq;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = subp(diff[1], 1, p);
    trim(diff);
    if (!diff.empty()) return false;
    // gcd(Y^{p^{s/l}} - Y, m) == 1 for each prime l | s
    for (u64 l : distinct_prime_factors(s)) {
        Poly yk = poly_frob_iter(y, s / (unsigned)l, m, p);
        Poly d = yk;
        d.resize(std::max<size_t>(d.size(), 2), 0);
        d[1] = subp(d[1], 1, p);
        trim(d);
        Poly g = poly_gcd(m, d, p);
        if (!(g.size() == 1)) return false;
    }
    return true;
}

// ------------------------------------------------------------------ FqCtx --

FqCtx::FqCtx(u64 p, unsigned s) : p_(p), s_(s) {
    if (!is_prime_u64(p)) throw CompositeP("p = " + std::to_string(p));
    if (s == 0) throw DegreeZero("extension degree 0");
    q_ = 1;
    for (unsigned i = 0; i < s; ++i) {
        if (q_ > (u64)1 << 62 || q_ * p / p != q_)
            throw TooLarge("p^s exceeds 2^63");
        q_ *= p;
    }
    // canonical modulus: smallest (c_{s-1}, ..., c_0) tuple, ascending
    if (s == 1) {
        mod_ = {0};
        return;
    }
    std::vector<u64> c(s, 0);
    // odometer over the tuple (c_{s-1},...,c_0): increment c_0 fastest?  No:
    // ascending tuple order means c_{s-1} is the most significant digit,
    // c_0 the least significant.
    u64 total = 1;
    for (unsigned i = 0; i < s; ++i) total *= p;  // p^s candidates
    for (u64 n = 0; n < total; ++n) {
        u64 t = n;
        // decode n so that c_0 is the least significant digit
        for (unsigned i = 0; i < s; ++i) {
            c[i] = t % p;
            t /= p;
        }
        if (is_irreducible_monic(p, c)) {
            mod_ = c;
            return;
        }
    }
    throw NonConvergent("no irreducible modulus found (impossible)");
}

FqElem FqCtx::one() const {
    FqElem a(s_, 0);
    a[0] = 1 % p_;
    return a;
}

FqElem FqCtx::from_u64(u64 c) const {
    FqElem a(s_, 0);
    a[0] = c % p_;
    return a;
}

bool FqCtx::is_zero(const FqElem& a) const {
    return std::all_of(a.begin(), a.end(), [](u64 x) { return x == 0; });
}

FqElem FqCtx::add(const FqElem& a, const FqElem& b) const {
    FqElem r(s_);
    for (unsigned i = 0; i < s_; ++i) r[i] = addp(a[i], b[i], p_);
    return r;
}

FqElem FqCtx::sub(const FqElem& a, const FqElem& b) const {
    FqElem r(s_);
    for (unsigned i = 0; i < s_; ++i) r[i] = subp(a[i], b[i], p_);
    return r;
}

FqElem FqCtx::neg(const FqElem& a) const {
    FqElem r(s_);
    for (unsigned i = 0; i < s_; ++i) r[i] = a[i] ? p_ - a[i] : 0;
    return r;
}

void FqCtx::reduce_in_place(std::vector<u64>& r) const {
    for (size_t d = r.size(); d-- > s_;) {
        u64 c = r[d];
        if (c == 0) continue;
        r[d] = 0;
        for (unsigned j = 0; j < s_; ++j)
            r[d - s_ + j] = subp(r[d - s_ + j], mulp(c, mod_[j], p_), p_);
    }
    r.resize(s_);
}

FqElem FqCtx::mul(const FqElem& a, const FqElem& b) const {
    std::vector<u64> r(2 * s_ - 1, 0);
    for (unsigned i = 0; i < s_; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < s_; ++j)
            r[i + j] = addp(r[i + j], mulp(a[i], b[j], p_), p_);
    }
    reduce_in_place(r);
    return r;
}

FqElem FqCtx::pow(const FqElem& a, u64 e) const {
    FqElem r = one(), base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

FqElem FqCtx::inv(const FqElem& a) const {
    if (is_zero(a)) throw NotAUnit("inverse of 0 in F_q");
    return pow(a, q_ - 2);
}

FqElem FqCtx::frobenius(const FqElem& a) const { return pow(a, p_); }

FqElem FqCtx::frobenius_iter(const FqElem& a, unsigned k) const {
    FqElem r = a;
    for (unsigned i = 0; i < k; ++i) r = frobenius(r);
    return r;
}

u64 FqCtx::trace_to_prime(const FqElem& a) const {
    FqElem acc = a, cur = a;
    for (unsigned i = 1; i < s_; ++i) {
        cur = frobenius(cur);
        acc = add(acc, cur);
    }
    // trace lies in the prime field: all higher coefficients must vanish
    for (unsigned i = 1; i < s_; ++i)
        if (acc[i] != 0) throw IdentityFailure("trace not in prime field");
    return acc[0];
}

unsigned FqCtx::degree_over_prime(const FqElem& a) const {
    FqElem cur = a;
    for (unsigned e = 1; e <= s_; ++e) {
        cur = frobenius(cur);
        if (cur == a) return e;
    }
    throw NonConvergent("frobenius orbit did not close");
}

FqElem FqCtx::from_index(u64 n) const {
    FqElem a(s_);
    for (unsigned i = 0; i < s_; ++i) {
        a[i] = n % p_;
        n /= p_;
    }
    return a;
}

u64 FqCtx::to_index(const FqElem& a) const {
    u64 n = 0;
    for (unsigned i = s_; i-- > 0;) n = n * p_ + a[i];
    return n;
}

std::vector<FqElem> FqCtx::enumerate() const {
    if (q_ > (1ull << 24)) throw TooLarge("enumeration of F_q with q > 2^24");
    std::vector<FqElem> all;
    all.reserve(q_);
    for (u64 n = 0; n < q_; ++n) all.push_back(from_index(n));
    return all;
}

FqElem embed_into(const FqCtx& F1, const FqElem& x, const FqCtx& F2) {
    if (F1.p() != F2.p()) throw FieldMismatch("embed_into across characteristics");
    u64 p = F1.p();
    if (F1.is_zero(x)) return F2.zero();
    unsigned e = F1.degree_over_prime(x);
    if (F2.s() % e != 0)
        throw FieldMismatch("element of degree " + std::to_string(e) +
                            " has no image in F_p^" + std::to_string(F2.s()));

    // Minimal polynomial of x over F_p: Π_{i<e} (Y - x^{p^i}).  The product
    // is Frobenius-stable, so every coefficient lands in the prime field.
    std::vector<FqElem> mp{F1.one()};
    FqElem conj_x = x;
    for (unsigned i = 0; i < e; ++i) {
        std::vector<FqElem> nx(mp.size() + 1, F1.zero());
        for (size_t j = 0; j < mp.size(); ++j) {
            nx[j + 1] = F1.add(nx[j + 1], mp[j]);
            nx[j] = F1.sub(nx[j], F1.mul(conj_x, mp[j]));
        }
        mp = std::move(nx);
        conj_x = F1.frobenius(conj_x);
    }
    std::vector<u64> mc(e + 1);
    for (size_t j = 0; j <= e; ++j) {
        for (size_t i = 1; i < mp[j].size(); ++i)
            if (mp[j][i] != 0)
                throw IdentityFailure("minimal polynomial coefficient outside F_p");
        mc[j] = mp[j].empty() ? 0 : mp[j][0];
    }

    // The roots all lie in the subfield of order p^e, i.e. among 0 and the
    // powers of G^{(Q-1)/(p^e-1)} for a generator G of F2^*.
    auto eval = [&](const FqElem& y) {
        FqElem v = F2.zero();
        for (size_t j = e + 1; j-- > 0;)
            v = F2.add(F2.mul(v, y), F2.from_u64(mc[j]));
        return v;
    };
    u64 qe = 1;
    for (unsigned i = 0; i < e; ++i) qe *= p;
    FqElem step = F2.pow(F2.generator(), (F2.q() - 1) / (qe - 1));
    FqElem best;  // empty = none yet
    FqElem y = F2.one();
    for (u64 j = 0; j + 1 < qe; ++j, y = F2.mul(y, step))
        if (F2.is_zero(eval(y)) && (best.empty() || F2.to_index(y) < F2.to_index(best)))
            best = y;
    if (best.empty())
        throw IdentityFailure("minimal polynomial has no root in the target field");
    return best;
}

const FqElem& FqCtx::generator() const {
    if (!gen_.empty()) return gen_;
    std::vector<u64> pf = distinct_prime_factors(q_ - 1);
    for (u64 n = 1; n < q_; ++n) {
        FqElem a = from_index(n);
        bool ok = true;
        for (u64 l : pf) {
            if (pow(a, (q_ - 1) / l) == one()) {
                ok = false;
                break;
            }
        }
        if (ok) {
            gen_ = a;
            return gen_;
        }
    }
    throw NonConvergent("no generator found (impossible)");
}

}  // namespace expsum
