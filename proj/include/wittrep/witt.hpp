#pragma once

// Length-2 Witt vectors W_2(R) over a commutative ring R of prime
// characteristic p:
//   (a0, a1) + (b0, b1) = (a0 + b0, a1 + b1 + F(a0, b0))
//   (a0, a1) * (b0, b1) = (a0 b0, a0^p b1 + b0^p a1)
// with F(X, Y) = (X^p + Y^p - (X + Y)^p) / p reduced mod p.

#include "wittrep/ring.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wittrep {

/// The carry polynomial F(X, Y) = sum_{i=1}^{p-1} c_i X^i Y^(p-i).
struct WittFPoly {
    unsigned p = 0;
    /// coeffs[i] = c_i for 1 <= i <= p - 1; coeffs[0] is unused and zero.
    std::vector<unsigned> coeffs;

    template <CommutativeRing R>
    R evaluate(const R& x, const R& y) const {
        // x^i and y^i for i < p
        std::vector<R> xp{x.one_like()}, yp{y.one_like()};
        for (unsigned i = 1; i < p; ++i) {
            xp.push_back(xp.back() * x);
            yp.push_back(yp.back() * y);
        }
        R acc = x.zero_like();
        for (unsigned i = 1; i < p; ++i) {
            R term = xp[i] * yp[p - i];
            if (!term.is_zero()) acc = acc + term * x.from_int(coeffs[i]);
        }
        return acc;
    }
};

/// Computes c_i = -binom(p, i) / p mod p in exact integer arithmetic.
WittFPoly f_poly(unsigned p);
/// Shared table of f_poly for primes below 64.
const WittFPoly& cached_f_poly(unsigned p);

template <CommutativeRing R>
class Witt2 {
public:
    Witt2() = default;
    Witt2(R a0, R a1) : a0_(std::move(a0)), a1_(std::move(a1)) {}
    /// The Teichmuller-style embedding t -> (t, 0).
    static Witt2 teichmuller(const R& t) { return {t, t.zero_like()}; }

    const R& a0() const noexcept { return a0_; }
    const R& a1() const noexcept { return a1_; }
    unsigned p() const { return static_cast<unsigned>(a0_.characteristic()); }

    Witt2 operator+(const Witt2& o) const {
        return {a0_ + o.a0_, a1_ + o.a1_ + cached_f_poly(p()).evaluate(a0_, o.a0_)};
    }

    Witt2 operator*(const Witt2& o) const {
        const unsigned pp = p();
        return {a0_ * o.a0_, power(a0_, pp) * o.a1_ + power(o.a0_, pp) * a1_};
    }

    /// Closed form solved from the addition law: (-a0, -a1 - F(a0, -a0)).
    /// F(a0, -a0) vanishes for odd p.
    Witt2 operator-() const {
        const R n0 = -a0_;
        return {n0, -a1_ - cached_f_poly(p()).evaluate(a0_, n0)};
    }

    Witt2 operator-(const Witt2& o) const { return *this + (-o); }
    bool operator==(const Witt2& o) const { return a0_ == o.a0_ && a1_ == o.a1_; }

    Witt2 zero_like() const { return {a0_.zero_like(), a0_.zero_like()}; }
    Witt2 one_like() const { return {a0_.one_like(), a0_.zero_like()}; }
    Witt2 from_int(std::int64_t n) const {
        Witt2 unit = one_like();
        if (n < 0) {
            unit = -unit;
            n = -n;
        }
        Witt2 acc = zero_like();
        for (; n != 0; n >>= 1) {
            if (n & 1) acc = acc + unit;
            unit = unit + unit;
        }
        return acc;
    }
    bool is_zero() const { return a0_.is_zero() && a1_.is_zero(); }
    std::uint64_t characteristic() const { return a0_.characteristic() * a0_.characteristic(); }

    bool is_unit() const
        requires UnitTestableRing<R>
    {
        return a0_.is_unit();
    }

    /// (a0^-1, -a1 a0^(-2p)).
    Witt2 inverse() const
        requires UnitTestableRing<R>
    {
        if (!a0_.is_unit()) throw Error(ErrorKind::NotUnit, "Witt vector with non-unit first component");
        const R inv0 = a0_.inverse();
        return {inv0, -(a1_ * power(inv0, 2ULL * p()))};
    }

private:
    R a0_{};
    R a1_{};
};

using WittFq = Witt2<Fq>;

/// Additive order of w: 1, p or p^2, found by repeated addition.
template <CommutativeRing R>
std::uint64_t witt_additive_order(const Witt2<R>& w) {
    std::uint64_t n = 1;
    Witt2<R> acc = w;
    while (!acc.is_zero()) {
        acc = acc + w;
        ++n;
    }
    return n;
}

/// All q^2 elements of W_2(F_q), ordered by index a0 * q + a1.
std::vector<WittFq> witt_elements(const FieldContext& ctx);
std::uint32_t witt_index(const WittFq& w);

struct WittZmodIsoReport {
    unsigned p = 0;
    bool passed = false;
    /// image[a0 * p + a1] = omega(a0) + p omega(a1) in Z/p^2
    std::vector<std::uint64_t> image;
    std::uint64_t checks = 0;
    std::optional<std::string> failure;
};

/// Exhaustively checks that (a0, a1) -> omega(a0) + p omega(a1) is a ring
/// isomorphism W_2(F_p) -> Z/p^2 (bijective and compatible with + and * on
/// all p^4 pairs).
WittZmodIsoReport witt2_zmod_iso_check(unsigned p);

}  // namespace wittrep
