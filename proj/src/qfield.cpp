#include "dio/qfield.hpp"

#include <sstream>

namespace dio {

// ---------------------------------------------------------------- Rational

Rational Rational::parse(const std::string& s) {
    if (s.empty()) fail(Err::ParseError, "empty rational");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(s));
        }
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) fail(Err::ParseError, "zero denominator in '" + s + "'");
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        fail(Err::ParseError, "bad rational '" + s + "'");
    }
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::string Rational::wire() const {
    return num().get_str() + "/" + den().get_str();
}

std::optional<Rational> rat_sqrt(const Rational& x) {
    if (x.sign() < 0) return std::nullopt;
    BigInt n = x.num(), d = x.den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
    BigInt rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(rn, rd);
}

// ---------------------------------------------------------------- QuadField

QuadField::QuadField(BigInt d) : d_(std::move(d)) {
    if (d_ == 0) fail(Err::DegenerateRadicand, "field radicand 0");
    // Squarefreeness screen for externally supplied tags: small prime squares
    // plus a perfect-square test. Full normalization happens in
    // field_from_radicand, which builds d from a factorization.
    BigInt a = d_ < 0 ? BigInt(-d_) : d_;
    if (a != 1 && mpz_perfect_square_p(a.get_mpz_t()))
        fail(Err::DegenerateRadicand, "radicand " + d_.get_str() + " is not squarefree");
    for (long p = 2; p < 1000; p = (p == 2 ? 3 : p + 2)) {
        BigInt sq = BigInt(p) * p;
        if (sq > a) break;
        if (d_ % sq == 0)
            fail(Err::DegenerateRadicand, "radicand " + d_.get_str() + " is not squarefree");
    }
}

std::string QuadField::str() const {
    if (is_rational()) return "Q";
    if (d_ == -1) return "Q(i)";
    return "Q(sqrt(" + d_.get_str() + "))";
}

RadicandSplit field_from_radicand(const Rational& rho, const FactorBudget& budget) {
    if (rho.is_zero()) fail(Err::DegenerateRadicand, "radicand is zero");
    BigInt d = square_class(rho, budget);
    Rational sc2 = rho / Rational(d);
    auto sc = rat_sqrt(sc2);
    if (!sc) fail(Err::DegenerateRadicand, "internal: class extraction failed");
    return RadicandSplit{QuadField(d), *sc};
}

// ----------------------------------------------------------------- QuadElem

QuadElem::QuadElem(QuadField field, Rational p, Rational q)
    : field_(std::move(field)), p_(std::move(p)), q_(std::move(q)) {
    if (field_.is_rational() && !q_.is_zero())
        fail(Err::FieldMismatch, "irrational part in Q");
}

QuadElem QuadElem::embedded(const QuadField& k) const {
    if (field_ == k) return *this;
    if (is_rational_value()) return QuadElem(k, p_);
    fail(Err::FieldMismatch,
         "cannot embed element of " + field_.str() + " into " + k.str());
}

void QuadElem::check_same_field(const QuadElem& o) const {
    if (field_ != o.field_)
        fail(Err::FieldMismatch, field_.str() + " vs " + o.field_.str());
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
    check_same_field(o);
    p_ += o.p_;
    q_ += o.q_;
    return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
    check_same_field(o);
    p_ -= o.p_;
    q_ -= o.q_;
    return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
    check_same_field(o);
    Rational d(field_.d());
    Rational np = p_ * o.p_ + d * q_ * o.q_;
    Rational nq = p_ * o.q_ + q_ * o.p_;
    p_ = np;
    q_ = nq;
    return *this;
}

QuadElem& QuadElem::operator/=(const QuadElem& o) {
    check_same_field(o);
    if (o.is_zero()) fail(Err::DivByZero, "division by zero element");
    Rational n = o.norm();
    // x / y = x * conj(y) / norm(y)
    *this *= o.conj();
    p_ /= n;
    q_ /= n;
    return *this;
}

std::string QuadElem::str() const {
    if (q_.is_zero()) return p_.str();
    std::ostringstream os;
    std::string rad = "sqrt(" + field_.d().get_str() + ")";
    if (field_.d() == -1) rad = "i";
    if (!p_.is_zero()) {
        os << p_.str() << (q_.sign() < 0 ? " - " : " + ");
        Rational aq = abs(q_);
        if (aq == Rational(1))
            os << rad;
        else
            os << aq.str() << "*" << rad;
    } else {
        if (q_ == Rational(1))
            os << rad;
        else if (q_ == Rational(-1))
            os << "-" << rad;
        else
            os << q_.str() << "*" << rad;
    }
    return os.str();
}

QuadElem canonical_sign(const QuadElem& x) {
    if (x.p().sign() < 0 || (x.p().is_zero() && x.q().sign() < 0)) return -x;
    return x;
}

std::optional<QuadElem> sqrt_in_field(const QuadElem& x) {
    const QuadField& k = x.field();
    if (x.is_zero()) return QuadElem::zero(k);
    if (x.q().is_zero()) {
        // Rational value: either the square of a rational, or of a pure
        // sqrt(d) multiple (p/d a square).
        if (auto r = rat_sqrt(x.p())) return QuadElem(k, *r);
        if (!k.is_rational()) {
            if (auto r = rat_sqrt(x.p() / Rational(k.d())))
                return canonical_sign(QuadElem(k, Rational(0), *r));
        }
        return std::nullopt;
    }
    // x = p + q sqrt(d), q != 0: x = (s + t sqrt(d))^2 forces
    // norm(x) = (s^2 - d t^2)^2, so norm must be a rational square n^2,
    // and then s^2 is (p + n)/2 or (p - n)/2.
    auto n = rat_sqrt(x.norm());
    if (!n) return std::nullopt;
    for (const Rational& nn : {*n, -*n}) {
        Rational s2 = (x.p() + nn) / Rational(2);
        auto s = rat_sqrt(s2);
        if (s && !s->is_zero()) {
            QuadElem beta(k, *s, x.q() / (Rational(2) * *s));
            beta = canonical_sign(beta);
            if (beta * beta == x) return beta;
        }
    }
    return std::nullopt;
}

} // namespace dio
