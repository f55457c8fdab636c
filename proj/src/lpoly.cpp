#include "expsum/lpoly.hpp"

#include <cmath>
#include <sstream>

namespace expsum {

i64 CycloPoly::degree() const {
    for (size_t i = c_.size(); i-- > 0;)
        if (!c_[i].is_zero()) return (i64)i;
    return -1;
}

CycloElem CycloPoly::coeff(size_t i) const {
    if (i < c_.size()) return c_[i];
    return CycloElem(p_);
}

void CycloPoly::set_coeff(size_t i, const CycloElem& v) {
    if (v.p() != p_) throw FieldMismatch("coefficient from wrong Z[zeta_p]");
    if (i >= c_.size()) c_.resize(i + 1, CycloElem(p_));
    c_[i] = v;
}

CycloPoly CycloPoly::one(u64 p) {
    CycloPoly f(p);
    f.set_coeff(0, CycloElem::from_int(p, 1));
    return f;
}

CycloPoly CycloPoly::linear(u64 p, const CycloElem& c1) {
    CycloPoly f = one(p);
    f.set_coeff(1, c1);
    return f;
}

CycloPoly operator+(const CycloPoly& a, const CycloPoly& b) {
    if (a.p_ != b.p_) throw FieldMismatch("polynomials over different Z[zeta_p]");
    CycloPoly r(a.p_);
    size_t n = std::max(a.c_.size(), b.c_.size());
    for (size_t i = 0; i < n; ++i) r.set_coeff(i, a.coeff(i) + b.coeff(i));
    return r;
}

CycloPoly operator-(const CycloPoly& a, const CycloPoly& b) {
    if (a.p_ != b.p_) throw FieldMismatch("polynomials over different Z[zeta_p]");
    CycloPoly r(a.p_);
    size_t n = std::max(a.c_.size(), b.c_.size());
    for (size_t i = 0; i < n; ++i) r.set_coeff(i, a.coeff(i) - b.coeff(i));
    return r;
}

CycloPoly operator*(const CycloPoly& a, const CycloPoly& b) {
    if (a.p_ != b.p_) throw FieldMismatch("polynomials over different Z[zeta_p]");
    CycloPoly r(a.p_);
    if (a.c_.empty() || b.c_.empty()) return r;
    size_t n = a.c_.size() + b.c_.size() - 1;
    std::vector<CycloElem> c(n, CycloElem(a.p_));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return CycloPoly(a.p_, std::move(c));
}

bool operator==(const CycloPoly& a, const CycloPoly& b) {
    if (a.p_ != b.p_) return false;
    size_t n = std::max(a.c_.size(), b.c_.size());
    for (size_t i = 0; i < n; ++i)
        if (!(a.coeff(i) == b.coeff(i))) return false;
    return true;
}

CycloPoly CycloPoly::conjugated() const {
    CycloPoly r(p_);
    for (size_t i = 0; i < c_.size(); ++i) r.set_coeff(i, conj(c_[i]));
    return r;
}

bool CycloPoly::has_real_coefficients() const { return conjugated() == *this; }

CycloElem CycloPoly::eval_scaled(const mpz_class& num, const mpz_class& den) const {
    i64 d = degree();
    if (d < 0) return CycloElem(p_);
    // Horner in num, then one den power per step: v_d = c_d,
    // v_{m} = v_{m+1}·num + c_m·den^{d−m}.
    CycloElem v = c_[(size_t)d];
    mpz_class dp = 1;
    for (i64 m = d - 1; m >= 0; --m) {
        dp *= den;
        v = v.scaled(num) + c_[(size_t)m].scaled(dp);
    }
    return v;
}

std::string CycloPoly::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c_[i].str() << ")";
        if (i == 1) os << "*T";
        if (i > 1) os << "*T^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

CycloPoly poly_from_log_coeffs(u64 p, const std::vector<CycloElem>& b, size_t deg) {
    CycloPoly f = CycloPoly::one(p);
    for (size_t m = 1; m <= deg; ++m) {
        if (b.size() < m) throw DegreeMismatch("need " + std::to_string(m) + " log coefficients");
        CycloElem s(p);
        for (size_t j = 1; j <= m; ++j) s += b[j - 1] * f.coeff(m - j);
        f.set_coeff(m, s.divided_exact((long)m));
    }
    return f;
}

std::vector<CycloElem> log_coeffs_from_poly(const CycloPoly& f, size_t n) {
    u64 p = f.p();
    if (!(f.coeff(0) == CycloElem::from_int(p, 1)))
        throw DegreeMismatch("log expansion needs constant term 1");
    std::vector<CycloElem> b;
    b.reserve(n);
    for (size_t m = 1; m <= n; ++m) {
        CycloElem s = f.coeff(m).scaled((long)m);
        for (size_t j = 1; j < m; ++j) s -= b[j - 1] * f.coeff(m - j);
        b.push_back(s);
    }
    return b;
}

CycloPoly divide_exact(const CycloPoly& A, const CycloPoly& B) {
    u64 p = A.p();
    if (B.p() != p) throw FieldMismatch("polynomials over different Z[zeta_p]");
    i64 da = A.degree(), db = B.degree();
    if (db < 0) throw DivisionInexact("division by zero polynomial");
    if (!(B.coeff(0) == CycloElem::from_int(p, 1)))
        throw DivisionInexact("divisor must have constant term 1");
    if (da < db) throw DivisionInexact("degree of divisor exceeds degree of dividend");
    size_t dq = (size_t)(da - db);
    CycloPoly Q(p);
    for (size_t m = 0; m <= dq; ++m) {
        CycloElem s = A.coeff(m);
        for (size_t j = 1; j <= m && (i64)j <= db; ++j) s -= B.coeff(j) * Q.coeff(m - j);
        Q.set_coeff(m, s);
    }
    if (!(B * Q == A)) throw DivisionInexact("nonzero remainder in exact polynomial division");
    return Q;
}

CycloElem check_fe_exact(const CycloPoly& M, u64 w) {
    u64 p = M.p();
    i64 d = M.degree();
    if (d < 0) throw FEViolation("zero polynomial has no functional equation");
    if (!(M.coeff(0) == CycloElem::from_int(p, 1)))
        throw FEViolation("constant term must be 1");
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), (unsigned long)p, (unsigned long)w);
    const CycloElem cd = M.coeff((size_t)d);
    mpz_class scale = 1;  // (p^w)^{δ−m}, built from m = δ downward
    for (i64 m = d; m >= 0; --m) {
        if (!(cd * conj(M.coeff((size_t)(d - m))) == M.coeff((size_t)m).scaled(scale)))
            throw FEViolation("functional equation fails at coefficient m=" + std::to_string(m));
        scale *= pw;
    }
    return cd;
}

std::vector<std::complex<double>> poly_complex_roots(std::vector<std::complex<double>> coeffs,
                                                    double trim) {
    while (!coeffs.empty() && std::abs(coeffs.back()) < trim) coeffs.pop_back();
    if (coeffs.size() <= 1) return {};
    size_t n = coeffs.size() - 1;
    std::complex<double> lead = coeffs.back();
    for (auto& c : coeffs) c /= lead;
    auto eval = [&](std::complex<double> z) {
        std::complex<double> v = 0;
        for (size_t i = coeffs.size(); i-- > 0;) v = v * z + coeffs[i];
        return v;
    };
    std::vector<std::complex<double>> z(n);
    std::complex<double> seed(0.4, 0.9), w(1.0, 0.0);
    for (size_t i = 0; i < n; ++i) {
        w *= seed;
        z[i] = w;
    }
    for (int it = 0; it < 500; ++it) {
        double worst = 0;
        for (size_t i = 0; i < n; ++i) {
            std::complex<double> den = 1;
            for (size_t j = 0; j < n; ++j)
                if (j != i) den *= z[i] - z[j];
            std::complex<double> delta = eval(z[i]) / den;
            z[i] -= delta;
            worst = std::max(worst, std::abs(delta));
        }
        if (worst < 1e-14) break;
    }
    return z;
}

std::vector<double> reciprocal_root_moduli(const CycloPoly& f, u64 t) {
    u64 p = f.p();
    const double tau = 6.283185307179586476925286766559;
    i64 d = f.degree();
    std::vector<std::complex<double>> c;
    for (i64 m = 0; m <= d; ++m) {
        const CycloElem cm = f.coeff((size_t)m);
        std::complex<double> v = 0;
        for (size_t j = 0; j + 1 < p; ++j) {
            double ang = tau * (double)((j * t) % p) / (double)p;
            v += cm[j].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        c.push_back(v);
    }
    std::vector<double> out;
    for (const auto& r : poly_complex_roots(c)) out.push_back(1.0 / std::abs(r));
    return out;
}

bool weil_check(const CycloPoly& f, double target, double rel_tol) {
    for (u64 t = 1; t < f.p(); ++t)
        for (double m : reciprocal_root_moduli(f, t))
            if (std::abs(m - target) > rel_tol * target) return false;
    return true;
}

}  // namespace expsum
