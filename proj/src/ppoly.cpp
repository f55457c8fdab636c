#include "expsum/ppoly.hpp"

#include <algorithm>
#include <sstream>

namespace expsum {

PadicPoly::PadicPoly(const PadicRing& R, std::vector<PadicElem> c)
    : R_(&R), c_(std::move(c)) {}

PadicPoly PadicPoly::one(const PadicRing& R) { return PadicPoly(R, {R.one()}); }

const PadicRing& PadicPoly::ring() const {
    if (!R_) throw FieldMismatch("uninitialized polynomial");
    return *R_;
}

PadicElem PadicPoly::coeff(size_t i) const {
    if (i < c_.size()) return c_[i];
    return ring().zero();
}

void PadicPoly::set_coeff(size_t i, const PadicElem& v) {
    if (i >= c_.size()) c_.resize(i + 1, ring().zero());
    c_[i] = v;
}

PadicPoly PadicPoly::operator-() const {
    PadicPoly r(*this);
    for (auto& e : r.c_) e = -e;
    return r;
}

PadicPoly operator+(const PadicPoly& a, const PadicPoly& b) {
    const PadicRing& R = a.ring();
    PadicPoly r(R);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), R.zero());
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
    return r;
}

PadicPoly operator-(const PadicPoly& a, const PadicPoly& b) { return a + (-b); }

PadicPoly operator*(const PadicPoly& a, const PadicPoly& b) {
    const PadicRing& R = a.ring();
    if (a.c_.empty() || b.c_.empty()) return PadicPoly(R);
    PadicPoly r(R);
    r.c_.assign(a.c_.size() + b.c_.size() - 1, R.zero());
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    return r;
}

PadicPoly PadicPoly::scale(const PadicElem& c) const {
    PadicPoly r(*this);
    for (auto& e : r.c_) e = e * c;
    return r;
}

PadicPoly PadicPoly::scale_T(const PadicElem& c) const {
    PadicPoly r(*this);
    PadicElem pw = ring().one();
    for (size_t i = 0; i < r.c_.size(); ++i) {
        if (i) pw = pw * c;
        r.c_[i] = r.c_[i] * pw;
    }
    return r;
}

PadicPoly PadicPoly::truncate_deg(i64 n) const {
    PadicPoly r(*this);
    if ((i64)r.c_.size() > n + 1) r.c_.resize(n + 1, ring().zero());
    return r;
}

PadicElem PadicPoly::eval(const PadicElem& t) const {
    PadicElem acc = ring().zero();
    for (size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc;
}

std::string PadicPoly::str(i64 max_digits) const {
    std::ostringstream os;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << " + ";
        os << "(" << c_[i].str(max_digits) << ")T^" << i;
    }
    return os.str();
}

bool polys_agree_mod(const PadicPoly& a, const PadicPoly& b, i64 m) {
    size_t n = std::max(a.len(), b.len());
    for (size_t i = 0; i < n; ++i)
        if (!agree_mod(a.coeff(i), b.coeff(i), m)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// small dense linear algebra

PadicElem det_small(const PadicMatrix& M) {
    size_t n = M.size();
    if (n == 0) throw EmptyInput("determinant of an empty matrix");
    if (n > 8) throw TooLarge("Laplace determinant limited to n <= 8");
    if (n == 1) return M[0][0];
    const PadicRing& R = M[0][0].ring();
    PadicElem acc = R.zero();
    for (size_t k = 0; k < n; ++k) {
        PadicMatrix sub;
        sub.reserve(n - 1);
        for (size_t r = 1; r < n; ++r) {
            std::vector<PadicElem> row;
            row.reserve(n - 1);
            for (size_t c = 0; c < n; ++c)
                if (c != k) row.push_back(M[r][c]);
            sub.push_back(std::move(row));
        }
        PadicElem term = M[0][k] * det_small(sub);
        acc += (k % 2) ? -term : term;
    }
    return acc;
}

PadicMatrix mat_mul(const PadicMatrix& A, const PadicMatrix& B) {
    size_t n = A.size(), m = B.size(), w = m ? B[0].size() : 0;
    if (n == 0 || m == 0) throw EmptyInput("empty matrix product");
    if (A[0].size() != m) throw DegreeMismatch("inner dimensions differ");
    const PadicRing& R = A[0][0].ring();
    PadicMatrix C(n, std::vector<PadicElem>(w, R.zero()));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < m; ++k)
            for (size_t j = 0; j < w; ++j) C[i][j] += A[i][k] * B[k][j];
    return C;
}

PadicPoly charpoly_minors(const PadicRing& R, const PadicMatrix& M) {
    size_t n = M.size();
    if (n > 8) throw TooLarge("principal-minor charpoly limited to n <= 8");
    std::vector<PadicElem> c(n + 1, R.zero());
    c[0] = R.one();
    for (u64 mask = 1; mask < (1u << n); ++mask) {
        std::vector<size_t> idx;
        for (size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        PadicMatrix sub(idx.size(), std::vector<PadicElem>(idx.size(), R.zero()));
        for (size_t r = 0; r < idx.size(); ++r)
            for (size_t s = 0; s < idx.size(); ++s) sub[r][s] = M[idx[r]][idx[s]];
        PadicElem d = det_small(sub);
        c[idx.size()] += (idx.size() % 2) ? -d : d;
    }
    return PadicPoly(R, std::move(c));
}

PadicPoly charpoly_traces(const PadicRing& R, const PadicMatrix& M, i64 tdeg) {
    if (tdeg >= (i64)R.p())
        throw TooLarge("trace charpoly needs tdeg < p for unit divisions");
    size_t n = M.size();
    tdeg = std::min<i64>(tdeg, (i64)n);
    std::vector<PadicElem> pk;  // tr(M^k), k = 1..tdeg
    PadicMatrix P = M;
    for (i64 k = 1; k <= tdeg; ++k) {
        if (k > 1) P = mat_mul(P, M);
        PadicElem t = R.zero();
        for (size_t i = 0; i < n; ++i) t += P[i][i];
        pk.push_back(t);
    }
    // det(1 − MT) = exp(−Σ tr(M^k) T^k / k):  m·c_m = −Σ_{k≤m} p_k c_{m−k}
    std::vector<PadicElem> c(tdeg + 1, R.zero());
    c[0] = R.one();
    for (i64 m = 1; m <= tdeg; ++m) {
        PadicElem acc = R.zero();
        for (i64 k = 1; k <= m; ++k) acc += pk[k - 1] * c[m - k];
        c[m] = -(acc * R.from_int(m).inv());
    }
    return PadicPoly(R, std::move(c));
}

PadicPoly power_series_div(const PadicPoly& a, const PadicPoly& b, i64 maxdeg) {
    const PadicRing& R = a.ring();
    PadicElem b0inv = b.coeff(0).inv();
    std::vector<PadicElem> q(maxdeg + 1, R.zero());
    for (i64 m = 0; m <= maxdeg; ++m) {
        PadicElem acc = a.coeff(m);
        for (i64 k = 1; k <= m; ++k) acc -= b.coeff(k) * q[m - k];
        q[m] = acc * b0inv;
    }
    return PadicPoly(R, std::move(q));
}

PadicPoly embed_poly(const CycloPoly& f, const PadicRing& R) {
    if (f.p() != R.p()) throw FieldMismatch("cyclotomic p differs from ring p");
    std::vector<PadicElem> c;
    i64 d = f.degree();
    for (i64 i = 0; i <= d; ++i) c.push_back(embed_padic(f.coeff(i), R));
    return PadicPoly(R, std::move(c));
}

}  // namespace expsum
