#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <vector>

#include "orbicoh/rational.hpp"

namespace orbicoh {

namespace detail {

inline long euler_phi(long n) {
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

// Dense integer polynomials, coefficients ascending in degree.
using ZPoly = std::vector<Int>;

inline int zpoly_degree(const ZPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

// Exact division by a monic divisor; remainder must vanish.
inline ZPoly zpoly_div_monic(const ZPoly& a, const ZPoly& b) {
    int da = zpoly_degree(a), db = zpoly_degree(b);
    if (db < 0 || b[db] != 1) throw std::logic_error("zpoly_div_monic: divisor not monic");
    ZPoly rem = a;
    ZPoly quot(std::max(0, da - db + 1), Int(0));
    for (int d = da; d >= db; --d) {
        Int c = rem[d];
        if (c == 0) continue;
        quot[d - db] = c;
        for (int j = 0; j <= db; ++j) rem[d - db + j] -= c * b[j];
    }
    if (zpoly_degree(rem) >= 0) throw std::logic_error("zpoly_div_monic: nonzero remainder");
    return quot;
}

// Phi_N(x) via x^N - 1 = prod_{d | N} Phi_d(x).
inline const ZPoly& cyclotomic_polynomial(long N) {
    static std::map<long, ZPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;

    std::function<const ZPoly&(long)> get = [&](long n) -> const ZPoly& {
        auto hit = cache.find(n);
        if (hit != cache.end()) return hit->second;
        ZPoly poly(n + 1, Int(0));
        poly[0] = -1;
        poly[n] = 1;  // x^n - 1
        for (long d = 1; d < n; ++d)
            if (n % d == 0) poly = zpoly_div_monic(poly, get(d));
        return cache.emplace(n, std::move(poly)).first->second;
    };
    return get(N);
}

// Per-level data: phi(N), Phi_N, and x^j mod Phi_N for all j needed by
// multiplication (2*phi - 2) and by power substitution (N - 1).
struct CycLevel {
    long N = 1;
    long phi = 1;
    ZPoly Phi;
    std::vector<std::vector<Int>> pow_rows;  // pow_rows[j][k]: coeff of x^k in x^j mod Phi_N
};

inline const CycLevel& cyc_level(long N) {
    static std::map<long, CycLevel> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;

    CycLevel lvl;
    lvl.N = N;
    lvl.phi = euler_phi(N);
    lvl.Phi = cyclotomic_polynomial(N);
    long rows = std::max(N - 1, 2 * lvl.phi - 2) + 1;
    lvl.pow_rows.resize(rows);
    for (long j = 0; j < rows; ++j) {
        std::vector<Int> row(lvl.phi, Int(0));
        if (j < lvl.phi) {
            row[j] = 1;
        } else {
            // x^j = x * x^{j-1}, reduced against monic Phi_N
            const auto& prev = lvl.pow_rows[j - 1];
            Int lead = prev[lvl.phi - 1];
            for (long k = lvl.phi - 1; k >= 1; --k) row[k] = prev[k - 1];
            row[0] = 0;
            if (lead != 0)
                for (long k = 0; k < lvl.phi; ++k) row[k] -= lead * lvl.Phi[k];
        }
        lvl.pow_rows[j] = std::move(row);
    }
    return cache.emplace(N, std::move(lvl)).first->second;
}

}  // namespace detail

/// An element of the cyclotomic field Q(zeta_N), stored in the power basis
/// 1, zeta, ..., zeta^{phi(N)-1} reduced modulo the N-th cyclotomic polynomial.
class Cyclotomic {
public:
    Cyclotomic() : level_(1), c_(1, Rational(0)) {}

    explicit Cyclotomic(long level) : level_(level), c_(detail::cyc_level(level).phi, Rational(0)) {
        if (level < 1) throw std::invalid_argument("Cyclotomic: level must be >= 1");
    }

    Cyclotomic(long level, std::vector<Rational> coeffs) : level_(level), c_(std::move(coeffs)) {
        if (static_cast<long>(c_.size()) != detail::cyc_level(level).phi)
            throw std::invalid_argument("Cyclotomic: coefficient count must equal phi(level)");
    }

    static Cyclotomic from_rational(long level, const Rational& r) {
        Cyclotomic z(level);
        z.c_[0] = r;
        return z;
    }

    /// zeta_N^k.
    static Cyclotomic root(long level, long k) {
        const auto& lvl = detail::cyc_level(level);
        long e = ((k % level) + level) % level;
        Cyclotomic z(level);
        for (long j = 0; j < lvl.phi; ++j) z.c_[j] = Rational(lvl.pow_rows[e][j]);
        return z;
    }

    long level() const { return level_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
    }
    bool is_one() const { return is_rational() && c_[0] == Rational(1); }
    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }
    std::optional<Rational> rational() const {
        if (!is_rational()) return std::nullopt;
        return c_[0];
    }

    Cyclotomic operator-() const {
        Cyclotomic r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }
    Cyclotomic operator+(const Cyclotomic& o) const {
        check_level(o);
        Cyclotomic r(*this);
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
        return r;
    }
    Cyclotomic operator-(const Cyclotomic& o) const {
        check_level(o);
        Cyclotomic r(*this);
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
        return r;
    }
    Cyclotomic operator*(const Cyclotomic& o) const {
        check_level(o);
        const auto& lvl = detail::cyc_level(level_);
        long phi = lvl.phi;
        std::vector<Rational> conv(2 * phi - 1, Rational(0));
        for (long i = 0; i < phi; ++i) {
            if (c_[i].is_zero()) continue;
            for (long j = 0; j < phi; ++j) {
                if (o.c_[j].is_zero()) continue;
                conv[i + j] += c_[i] * o.c_[j];
            }
        }
        Cyclotomic r(level_);
        for (long d = 0; d < 2 * phi - 1; ++d) {
            if (conv[d].is_zero()) continue;
            const auto& row = lvl.pow_rows[d];
            for (long k = 0; k < phi; ++k)
                if (row[k] != 0) r.c_[k] += conv[d] * Rational(row[k]);
        }
        return r;
    }
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    bool operator==(const Cyclotomic& o) const {
        check_level(o);
        return c_ == o.c_;
    }
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    /// Field inverse via extended Euclid on the power-basis polynomial and Phi_N.
    Cyclotomic inverse() const {
        if (is_zero()) throw std::domain_error("Cyclotomic: inverse of zero");
        using QPoly = std::vector<Rational>;
        const auto& lvl = detail::cyc_level(level_);
        QPoly f(c_.begin(), c_.end());
        QPoly g(lvl.Phi.size());
        for (size_t i = 0; i < lvl.Phi.size(); ++i) g[i] = Rational(lvl.Phi[i]);

        auto deg = [](const QPoly& p) {
            for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
                if (!p[i].is_zero()) return i;
            return -1;
        };
        // r0 = Phi, r1 = f; track s only against f: s0*f == r0 ignored, s1 = 1.
        QPoly r0 = g, r1 = f;
        QPoly s0{Rational(0)}, s1{Rational(1)};
        while (deg(r1) > 0 || (deg(r1) == 0 && deg(r0) > 0)) {
            int d0 = deg(r0), d1 = deg(r1);
            if (d1 < 0) throw std::logic_error("Cyclotomic: gcd degenerated (Phi not irreducible?)");
            if (d0 < d1) {
                std::swap(r0, r1);
                std::swap(s0, s1);
                continue;
            }
            Rational c = r0[d0] / r1[d1];
            int shift = d0 - d1;
            for (int j = 0; j <= d1; ++j) r0[j + shift] -= c * r1[j];
            if (static_cast<int>(s0.size()) < static_cast<int>(s1.size()) + shift)
                s0.resize(s1.size() + shift, Rational(0));
            for (size_t j = 0; j < s1.size(); ++j) s0[j + shift] -= c * s1[j];
        }
        // Now r1 is a nonzero constant c with s1 * f == c (mod Phi).
        int d1 = deg(r1);
        if (d1 != 0) throw std::logic_error("Cyclotomic: inverse failed");
        Rational scale = Rational(1) / r1[0];
        Cyclotomic inv(level_);
        for (size_t j = 0; j < s1.size() && j < static_cast<size_t>(lvl.phi); ++j)
            inv.c_[j] = s1[j] * scale;
        // s1 may exceed the basis length; reduce properly if so.
        for (size_t j = lvl.phi; j < s1.size(); ++j) {
            if (s1[j].is_zero()) continue;
            const auto& row = lvl.pow_rows[j];
            for (long k = 0; k < lvl.phi; ++k)
                if (row[k] != 0) inv.c_[k] += s1[j] * scale * Rational(row[k]);
        }
        return inv;
    }

    Cyclotomic operator/(const Cyclotomic& o) const { return *this * o.inverse(); }

    /// Complex conjugation: zeta |-> zeta^{N-1}.
    Cyclotomic conj() const { return substitute_power(level_ - 1); }

    /// Image of this element under zeta |-> zeta^e.
    Cyclotomic substitute_power(long e) const {
        const auto& lvl = detail::cyc_level(level_);
        Cyclotomic r(level_);
        for (long k = 0; k < lvl.phi; ++k) {
            if (c_[k].is_zero()) continue;
            long idx = static_cast<long>((static_cast<long long>(k) * (((e % level_) + level_) % level_)) % level_);
            const auto& row = lvl.pow_rows[idx];
            for (long j = 0; j < lvl.phi; ++j)
                if (row[j] != 0) r.c_[j] += c_[k] * Rational(row[j]);
        }
        return r;
    }

    Cyclotomic pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Cyclotomic acc = from_rational(level_, Rational(1));
        Cyclotomic base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    /// Same element viewed in Q(zeta_M) for a multiple M of the level.
    Cyclotomic embed(long M) const {
        if (M == level_) return *this;
        if (M % level_ != 0) throw std::invalid_argument("Cyclotomic::embed: target level not a multiple");
        const auto& tgt = detail::cyc_level(M);
        long stride = M / level_;
        Cyclotomic r(M);
        for (long k = 0; k < static_cast<long>(c_.size()); ++k) {
            if (c_[k].is_zero()) continue;
            const auto& row = tgt.pow_rows[k * stride];
            for (long j = 0; j < tgt.phi; ++j)
                if (row[j] != 0) r.c_[j] += c_[k] * Rational(row[j]);
        }
        return r;
    }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (size_t k = 0; k < c_.size(); ++k) {
            if (c_[k].is_zero()) continue;
            if (!first) os << " + ";
            os << c_[k].str();
            if (k > 0) os << "*z" << level_ << "^" << k;
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }

private:
    void check_level(const Cyclotomic& o) const {
        if (level_ != o.level_) throw std::logic_error("Cyclotomic: mixed levels (align first)");
    }

    long level_;
    std::vector<Rational> c_;
};

/// Embeds both operands into Q(zeta_lcm).
inline std::pair<Cyclotomic, Cyclotomic> align(const Cyclotomic& a, const Cyclotomic& b) {
    long L = static_cast<long>(lcm(Int(a.level()), Int(b.level())).get_si());
    return {a.embed(L), b.embed(L)};
}

inline bool equal_aligned(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = align(a, b);
    return x == y;
}

/// If z is a root of unity of order <= order_bound, returns q in Q/Z with
/// z = e^{2*pi*i*q}; otherwise nullopt. Roots of unity inside Q(zeta_N) all
/// have order dividing lcm(2, N), so a finite scan is exhaustive.
inline std::optional<PhaseQZ> phase_of_root(const Cyclotomic& z, long order_bound) {
    if (z.is_zero()) throw std::invalid_argument("phase_of_root: zero input");
    long Np = static_cast<long>(lcm(Int(2), Int(z.level())).get_si());
    Cyclotomic w = z.embed(Np);
    for (long k = 0; k < Np; ++k) {
        if (w == Cyclotomic::root(Np, k)) {
            long g = static_cast<long>(gcd(Int(k), Int(Np)).get_si());
            long order = Np / g;
            if (order <= order_bound) return PhaseQZ(Rational(k, Np));
            return std::nullopt;
        }
    }
    return std::nullopt;
}

}  // namespace orbicoh
