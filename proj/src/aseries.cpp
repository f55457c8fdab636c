#include "expsum/aseries.hpp"

#include <algorithm>
#include <sstream>

namespace expsum {

namespace {

// certified π-digit lower bound for the value coefficient of a^i
bool floor_violated(const PadicElem& e, i64 pishift, Rat required_ord_p, u64 pm1) {
    i64 fl = e.pi_val_floor();
    if (fl >= e.cert()) return false;  // zero through cert: nothing certified below
    // fl < cert means fl is the exact stored valuation
    return Rat(fl - pishift, 1) < Rat((i64)pm1, 1) * required_ord_p;
}

}  // namespace

PadicSeriesA::PadicSeriesA(const PadicRing& R, u64 d, std::vector<PadicElem> stored,
                           Rat rho, i64 pishift, bool entire)
    : R_(&R), d_(d), stored_(std::move(stored)), rho_(rho), pishift_(pishift),
      entire_(entire) {
    if (d < 2) throw BadIndex("series parameter d must be >= 2");
    if (pishift < 0) throw BadIndex("pishift must be >= 0");
    trim();
    check_floor();
}

PadicSeriesA PadicSeriesA::zero(const PadicRing& R, u64 d, Rat rho) {
    return PadicSeriesA(R, d, {}, rho);
}

PadicSeriesA PadicSeriesA::constant(const PadicRing& R, u64 d, const PadicElem& c,
                                    Rat rho) {
    return PadicSeriesA(R, d, {c}, rho);
}

const PadicRing& PadicSeriesA::ring() const {
    if (!R_) throw FieldMismatch("uninitialized series");
    return *R_;
}

Rat PadicSeriesA::slope() const {
    const u64 p = ring().p();
    return Rat((i64)((p - 1) * (d_ - 1)), (i64)(p * p * d_));
}

bool PadicSeriesA::is_zero() const {
    for (const auto& e : stored_)
        if (!e.is_zero()) return false;
    return true;
}

PadicElem PadicSeriesA::stored(size_t i) const {
    if (i < stored_.size()) return stored_[i];
    return ring().zero();
}

PadicElem PadicSeriesA::value(size_t i) const {
    return stored(i).div_pi(pishift_);
}

void PadicSeriesA::trim() {
    // drop trailing coefficients that are exact zeros at full storage
    // precision (weaker certified zeros must be retained: dropping them would
    // silently strengthen their certificate)
    while (!stored_.empty() && stored_.back().is_zero() &&
           stored_.back().cert() == ring().prec())
        stored_.pop_back();
}

void PadicSeriesA::check_floor() const {
    const Rat sl = slope();
    const u64 pm1 = ring().p() - 1;
    for (size_t i = 0; i < stored_.size(); ++i) {
        if (floor_violated(stored_[i], pishift_, sl * Rat((i64)i, 1) + rho_, pm1)) {
            std::ostringstream os;
            os << "growth floor violated at a^" << i << ": ord(B_i) = "
               << Rat(stored_[i].pi_val_floor() - pishift_, (i64)pm1).str()
               << " < " << (sl * Rat((i64)i, 1) + rho_).str();
            throw IdentityFailure(os.str());
        }
    }
}

void PadicSeriesA::check_compat(const PadicSeriesA& b) const {
    if (R_ != b.R_ || d_ != b.d_)
        throw FieldMismatch("series from different rings or exponents d");
}

PadicSeriesA PadicSeriesA::operator-() const {
    PadicSeriesA r(*this);
    for (auto& e : r.stored_) e = -e;
    return r;
}

PadicSeriesA operator+(const PadicSeriesA& a, const PadicSeriesA& b) {
    a.check_compat(b);
    const PadicRing& R = a.ring();
    const i64 S = std::max(a.pishift_, b.pishift_);
    size_t len;
    if (a.entire_ && b.entire_) len = std::max(a.len(), b.len());
    else if (!a.entire_ && !b.entire_) len = std::min(a.len(), b.len());
    else len = a.entire_ ? b.len() : a.len();
    std::vector<PadicElem> c;
    c.reserve(len);
    for (size_t i = 0; i < len; ++i)
        c.push_back(a.stored(i).mul_pi(S - a.pishift_) +
                    b.stored(i).mul_pi(S - b.pishift_));
    return PadicSeriesA(R, a.d_, std::move(c), std::min(a.rho_, b.rho_), S,
                        a.entire_ && b.entire_);
}

PadicSeriesA operator-(const PadicSeriesA& a, const PadicSeriesA& b) {
    return a + (-b);
}

PadicSeriesA operator*(const PadicSeriesA& a, const PadicSeriesA& b) {
    a.check_compat(b);
    const PadicRing& R = a.ring();
    if (a.len() == 0 || b.len() == 0)
        return PadicSeriesA(R, a.d_, {}, a.rho_ + b.rho_, a.pishift_ + b.pishift_,
                            a.entire_ && b.entire_);
    size_t len;
    if (a.entire_ && b.entire_) len = a.len() + b.len() - 1;
    else if (!a.entire_ && !b.entire_) len = std::min(a.len(), b.len());
    else len = a.entire_ ? b.len() : a.len();
    len = std::min(len, a.len() + b.len() - 1);
    const i64 cap = R.prec();
    // exact stored zeros (full-precision) contribute nothing; weaker certified
    // zeros must still be multiplied so their certificates reach the slot
    auto exact_zero = [cap](const PadicElem& e) {
        return e.is_zero() && e.cert() == cap;
    };
    std::vector<PadicElem> c(len, R.zero());
    for (size_t i = 0; i < a.len(); ++i) {
        if (exact_zero(a.stored_[i])) continue;
        for (size_t j = 0; j < b.len() && i + j < len; ++j) {
            if (exact_zero(b.stored_[j])) continue;
            c[i + j] += a.stored_[i] * b.stored_[j];
        }
    }
    return PadicSeriesA(R, a.d_, std::move(c), a.rho_ + b.rho_,
                        a.pishift_ + b.pishift_, a.entire_ && b.entire_);
}

PadicSeriesA PadicSeriesA::scale(const PadicElem& c) const {
    std::vector<PadicElem> v;
    v.reserve(stored_.size());
    for (const auto& e : stored_) v.push_back(e * c);
    Rat extra((i64)c.pi_val_floor(), (i64)(ring().p() - 1));
    return PadicSeriesA(ring(), d_, std::move(v), rho_ + extra, pishift_, entire_);
}

PadicSeriesA PadicSeriesA::scale_int(i64 n) const {
    std::vector<PadicElem> v;
    v.reserve(stored_.size());
    for (const auto& e : stored_) v.push_back(e.scaled_int(n));
    return PadicSeriesA(ring(), d_, std::move(v), rho_, pishift_, entire_);
}

PadicSeriesA PadicSeriesA::mul_a_pow(u64 k) const {
    std::vector<PadicElem> v(k, ring().zero());
    v.insert(v.end(), stored_.begin(), stored_.end());
    Rat r = rho_ - slope() * Rat((i64)k, 1);
    return PadicSeriesA(ring(), d_, std::move(v), r, pishift_, entire_);
}

PadicSeriesA PadicSeriesA::div_a_pow(u64 k) const {
    if (!entire_ && stored_.size() < k)
        throw DivisionInexact("a-power division past the retained range");
    for (size_t i = 0; i < k && i < stored_.size(); ++i)
        if (!stored_[i].is_zero())
            throw DivisionInexact("series not divisible by a^k");
    std::vector<PadicElem> v(stored_.begin() + std::min((size_t)k, stored_.size()),
                             stored_.end());
    Rat r = rho_ + slope() * Rat((i64)k, 1);
    return PadicSeriesA(ring(), d_, std::move(v), r, pishift_, entire_);
}

PadicSeriesA PadicSeriesA::mul_pi(i64 t) const {
    if (t < 0) throw BadIndex("mul_pi needs t >= 0");
    i64 cancel = std::min(pishift_, t), rest = t - cancel;
    std::vector<PadicElem> v = stored_;
    if (rest > 0)
        for (auto& e : v) e = e.mul_pi(rest);
    Rat r = rho_ + Rat(t, (i64)(ring().p() - 1));
    return PadicSeriesA(ring(), d_, std::move(v), r, pishift_ - cancel, entire_);
}

PadicSeriesA PadicSeriesA::div_pi(i64 t) const {
    if (t < 0) throw BadIndex("div_pi needs t >= 0");
    Rat r = rho_ - Rat(t, (i64)(ring().p() - 1));
    return PadicSeriesA(ring(), d_, stored_, r, pishift_ + t, entire_);
}

PadicSeriesA PadicSeriesA::psi_a() const {
    const u64 p = ring().p();
    std::vector<PadicElem> v;
    v.reserve(stored_.size() / p + 1);
    for (size_t i = 0; p * i < stored_.size(); ++i) v.push_back(stored_[p * i]);
    // ord(B_{pi}) ≥ slope·p·i + rho ≥ slope·i + rho: the recorded floor stays
    // sound (the image actually lives in the smaller space with slope b·(1−1/d))
    return PadicSeriesA(ring(), d_, std::move(v), rho_, pishift_, entire_);
}

PadicSeriesA PadicSeriesA::truncate_len(size_t n) const {
    if (n >= stored_.size()) return *this;
    std::vector<PadicElem> v(stored_.begin(), stored_.begin() + n);
    return PadicSeriesA(ring(), d_, std::move(v), rho_, pishift_, false);
}

PadicSeriesA PadicSeriesA::materialize() const {
    std::vector<PadicElem> v;
    v.reserve(stored_.size());
    for (const auto& e : stored_) v.push_back(e.div_pi(pishift_));
    return PadicSeriesA(ring(), d_, std::move(v), rho_, 0, entire_);
}

PadicSeriesA PadicSeriesA::with_rho(Rat r) const {
    return PadicSeriesA(ring(), d_, stored_, r, pishift_, entire_);
}

PadicElem PadicSeriesA::eval(const PadicElem& a) const {
    const PadicRing& R = ring();
    PadicElem acc = R.zero();
    for (size_t i = stored_.size(); i-- > 0;) acc = acc * a + stored_[i];
    if (!entire_) {
        // first dropped coefficient has stored ord ≥ (p−1)(slope·len + rho) + shift
        Rat req = Rat((i64)(R.p() - 1), 1) *
                      (slope() * Rat((i64)stored_.size(), 1) + rho_) +
                  Rat(pishift_, 1);
        i64 cap = req.ceil();
        if (cap < 1)
            throw PrecisionExhausted("truncated-tail bound leaves no certified digits");
        if (cap < acc.cert()) acc = acc.with_cert(cap);
    }
    return acc.div_pi(pishift_);
}

std::string PadicSeriesA::str(size_t max_terms) const {
    std::ostringstream os;
    if (pishift_ != 0) os << "pi^-" << pishift_ << " * ";
    os << "[";
    for (size_t i = 0; i < stored_.size() && i < max_terms; ++i) {
        if (i) os << " + ";
        os << "(" << stored_[i].str(4) << ")a^" << i;
    }
    if (stored_.size() > max_terms) os << " + ... (" << stored_.size() << " terms)";
    os << "], rho=" << rho_.str() << (entire_ ? "" : ", truncated");
    return os.str();
}

void verify_floor(const PadicSeriesA& s, Rat required_rho) {
    const Rat sl = s.slope();
    const u64 pm1 = s.ring().p() - 1;
    for (size_t i = 0; i < s.len(); ++i) {
        if (floor_violated(s.stored(i), s.pishift(),
                           sl * Rat((i64)i, 1) + required_rho, pm1)) {
            std::ostringstream os;
            os << "required floor violated at a^" << i;
            throw IdentityFailure(os.str());
        }
    }
}

}  // namespace expsum
