#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace orbicoh {

using Int = mpz_class;

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Arbitrary-precision rational, always stored reduced with positive denominator.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    Int num() const { return Int(v_.get_num()); }
    Int den() const { return Int(v_.get_den()); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return mpq_sgn(v_.get_mpq_t()); }

    Int floor() const {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

/// Parses "n" or "n/d" with optional sign.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s), Int(1));
    return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

/// An element of Q/Z, i.e. the phase e^{2*pi*i*q}. Canonical representative in [0,1).
class PhaseQZ {
public:
    PhaseQZ() : q_(0) {}
    explicit PhaseQZ(const Rational& r) : q_(reduce(r)) {}
    PhaseQZ(long num, long den) : q_(reduce(Rational(num, den))) {}

    const Rational& value() const { return q_; }
    bool is_zero() const { return q_.is_zero(); }
    Int denominator() const { return q_.den(); }

    PhaseQZ operator+(const PhaseQZ& o) const { return PhaseQZ(q_ + o.q_); }
    PhaseQZ operator-(const PhaseQZ& o) const { return PhaseQZ(q_ - o.q_); }
    PhaseQZ operator-() const { return PhaseQZ(-q_); }
    PhaseQZ scaled(const Int& k) const { return PhaseQZ(q_ * Rational(k)); }

    bool operator==(const PhaseQZ& o) const { return q_ == o.q_; }
    bool operator!=(const PhaseQZ& o) const { return q_ != o.q_; }
    bool operator<(const PhaseQZ& o) const { return q_ < o.q_; }

    /// k such that this phase equals k/N; requires N * q integral.
    Int exponent_at_level(const Int& N) const {
        Rational scaled = q_ * Rational(N);
        if (!scaled.is_integer())
            throw std::invalid_argument("PhaseQZ: phase " + q_.str() + " has no exponent at level " + N.get_str());
        return scaled.num();
    }

    std::string str() const { return q_.str(); }

private:
    static Rational reduce(const Rational& r) { return r - Rational(r.floor()); }
    Rational q_;
};

}  // namespace orbicoh
