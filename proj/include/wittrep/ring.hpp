#pragma once

// Exact coefficient rings: GF(p^r) in a polynomial basis, residue rings
// Z/p^n, dual numbers R[eps]/(eps^2) and quotients of the Gaussian integers.

#include "wittrep/errors.hpp"

#include <concepts>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wittrep {

/// The contract every coefficient ring in the library satisfies. Elements
/// carry their own context, so the neutral elements and the image of Z are
/// produced from an existing element.
template <class R>
concept CommutativeRing = std::copyable<R> && requires(const R& a, const R& b, std::int64_t n) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a == b } -> std::convertible_to<bool>;
    { a.zero_like() } -> std::convertible_to<R>;
    { a.one_like() } -> std::convertible_to<R>;
    { a.from_int(n) } -> std::convertible_to<R>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.characteristic() } -> std::convertible_to<std::uint64_t>;
};

template <class R>
concept UnitTestableRing = CommutativeRing<R> && requires(const R& a) {
    { a.is_unit() } -> std::convertible_to<bool>;
    { a.inverse() } -> std::convertible_to<R>;
};

template <CommutativeRing R>
R power(const R& x, std::uint64_t e) {
    R result = x.one_like();
    R base = x;
    while (e != 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e != 0) base = base * base;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Integer helpers

bool is_prime(std::uint64_t n) noexcept;
std::uint64_t ipow(std::uint64_t base, unsigned exp);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// ---------------------------------------------------------------------------
// Finite fields

class FieldContext;
using FieldPtr = std::shared_ptr<const FieldContext>;

/// Element of GF(p^r). The value is the base-p encoding sum c_i p^i of the
/// coefficient vector in the basis 1, x, ..., x^(r-1); it is always canonical.
/// The owning FieldContext must outlive the element.
class Fq {
public:
    Fq() = default;
    Fq(const FieldContext* ctx, std::uint32_t index) : ctx_(ctx), v_(index) {}

    const FieldContext& context() const { return *ctx_; }
    const FieldContext* context_ptr() const noexcept { return ctx_; }
    std::uint32_t index() const noexcept { return v_; }
    std::vector<unsigned> coeffs() const;

    Fq operator+(const Fq& o) const;
    Fq operator-(const Fq& o) const;
    Fq operator*(const Fq& o) const;
    Fq operator-() const;
    Fq& operator+=(const Fq& o) { return *this = *this + o; }
    Fq& operator-=(const Fq& o) { return *this = *this - o; }
    Fq& operator*=(const Fq& o) { return *this = *this * o; }
    bool operator==(const Fq& o) const noexcept { return v_ == o.v_; }

    Fq zero_like() const { return {ctx_, 0}; }
    Fq one_like() const { return {ctx_, 1}; }
    Fq from_int(std::int64_t n) const;
    bool is_zero() const noexcept { return v_ == 0; }
    bool is_unit() const noexcept { return v_ != 0; }
    Fq inverse() const;
    std::uint64_t characteristic() const;
    Fq pow(std::uint64_t e) const { return power(*this, e); }

private:
    const FieldContext* ctx_ = nullptr;
    std::uint32_t v_ = 0;
};

class FieldContext {
public:
    unsigned p() const noexcept { return p_; }
    unsigned r() const noexcept { return r_; }
    std::uint32_t q() const noexcept { return q_; }
    /// Monic modulus, lowest coefficient first, length r + 1.
    const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

    Fq zero() const { return {this, 0}; }
    Fq one() const { return {this, 1}; }
    Fq from_int(std::int64_t n) const;
    Fq element(std::span<const unsigned> coeffs) const;
    Fq from_index(std::uint32_t index) const;
    /// 1, x, ..., x^(r-1): a basis of GF(q) over the prime field.
    std::vector<Fq> power_basis() const;
    std::vector<Fq> elements() const;

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::vector<unsigned> digits(std::uint32_t a) const;

    std::string describe() const;

private:
    friend FieldPtr make_field_context(unsigned, unsigned, std::optional<std::vector<unsigned>>);
    FieldContext(unsigned p, unsigned r, std::vector<unsigned> modulus);

    std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg_slow(std::uint32_t a) const;
    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;

    unsigned p_;
    unsigned r_;
    std::uint32_t q_;
    std::vector<unsigned> modulus_;
    bool tabulated_ = false;
    std::vector<std::uint16_t> add_table_;
    std::vector<std::uint16_t> mul_table_;
    std::vector<std::uint32_t> neg_table_;
    std::vector<std::uint32_t> inv_table_;
};

/// Builds GF(p^r). Without a modulus the lexicographically smallest monic
/// irreducible polynomial of degree r is used (smallest base-p encoding of
/// its non-leading coefficients, highest coefficient most significant).
FieldPtr make_field_context(unsigned p, unsigned r, std::optional<std::vector<unsigned>> modulus = std::nullopt);

/// GF(q) for q a prime power; throws NotPrime when q is not one.
FieldPtr make_field_context_for_order(std::uint64_t q, std::optional<std::vector<unsigned>> modulus = std::nullopt);

bool is_irreducible_mod_p(std::span<const unsigned> monic, unsigned p);

Fq frobenius(const Fq& x);
std::uint64_t multiplicative_order(const Fq& x);
Fq primitive_element(const FieldContext& ctx);

// ---------------------------------------------------------------------------
// Z / p^n

class ZmodM {
public:
    ZmodM() = default;
    ZmodM(unsigned p, unsigned n, std::int64_t value);

    std::uint64_t value() const noexcept { return value_; }
    std::uint64_t modulus() const noexcept { return m_; }
    unsigned p() const noexcept { return p_; }
    unsigned n() const noexcept { return n_; }

    ZmodM operator+(const ZmodM& o) const { return with(value_ + o.value_); }
    ZmodM operator-(const ZmodM& o) const { return with(value_ + m_ - o.value_); }
    ZmodM operator*(const ZmodM& o) const;
    ZmodM operator-() const { return with(m_ - value_); }
    bool operator==(const ZmodM& o) const noexcept { return value_ == o.value_ && m_ == o.m_; }

    ZmodM zero_like() const { return with(0); }
    ZmodM one_like() const { return with(1); }
    ZmodM from_int(std::int64_t n) const { return ZmodM(p_, n_, n); }
    bool is_zero() const noexcept { return value_ == 0; }
    bool is_unit() const noexcept { return value_ % p_ != 0; }
    ZmodM inverse() const;
    std::uint64_t characteristic() const noexcept { return m_; }

private:
    ZmodM with(std::uint64_t v) const;

    unsigned p_ = 2;
    unsigned n_ = 1;
    std::uint64_t m_ = 2;
    std::uint64_t value_ = 0;
};

/// The multiplicative lift of a in Z/p^2: the fixed point of x -> x^p
/// reached from a.
ZmodM teichmuller_lift(unsigned p, std::uint64_t a);

// ---------------------------------------------------------------------------
// Dual numbers R[eps]/(eps^2)

template <CommutativeRing R>
class DualNumber {
public:
    DualNumber() = default;
    DualNumber(R a, R b) : a_(std::move(a)), b_(std::move(b)) {}
    static DualNumber constant(const R& a) { return {a, a.zero_like()}; }
    static DualNumber epsilon(const R& proto) { return {proto.zero_like(), proto.one_like()}; }

    const R& real() const noexcept { return a_; }
    const R& eps() const noexcept { return b_; }

    DualNumber operator+(const DualNumber& o) const { return {a_ + o.a_, b_ + o.b_}; }
    DualNumber operator-(const DualNumber& o) const { return {a_ - o.a_, b_ - o.b_}; }
    DualNumber operator*(const DualNumber& o) const { return {a_ * o.a_, a_ * o.b_ + b_ * o.a_}; }
    DualNumber operator-() const { return {-a_, -b_}; }
    bool operator==(const DualNumber& o) const { return a_ == o.a_ && b_ == o.b_; }

    DualNumber zero_like() const { return {a_.zero_like(), a_.zero_like()}; }
    DualNumber one_like() const { return {a_.one_like(), a_.zero_like()}; }
    DualNumber from_int(std::int64_t n) const { return {a_.from_int(n), a_.zero_like()}; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    std::uint64_t characteristic() const { return a_.characteristic(); }

    bool is_unit() const
        requires UnitTestableRing<R>
    {
        return a_.is_unit();
    }
    DualNumber inverse() const
        requires UnitTestableRing<R>
    {
        if (!a_.is_unit()) throw Error(ErrorKind::NotUnit, "dual number with non-unit real part");
        R ai = a_.inverse();
        return {ai, -(b_ * ai * ai)};
    }

private:
    R a_{};
    R b_{};
};

// ---------------------------------------------------------------------------
// Gaussian integers modulo an ideal

class GaussianContext;
using GaussianPtr = std::shared_ptr<const GaussianContext>;

/// x + y i, canonical modulo the context's ideal.
class GaussianResidue {
public:
    GaussianResidue() = default;
    GaussianResidue(const GaussianContext* ctx, std::int64_t x, std::int64_t y);

    std::int64_t x() const noexcept { return x_; }
    std::int64_t y() const noexcept { return y_; }
    const GaussianContext& context() const { return *ctx_; }

    GaussianResidue operator+(const GaussianResidue& o) const { return {ctx_, x_ + o.x_, y_ + o.y_}; }
    GaussianResidue operator-(const GaussianResidue& o) const { return {ctx_, x_ - o.x_, y_ - o.y_}; }
    GaussianResidue operator*(const GaussianResidue& o) const {
        return {ctx_, x_ * o.x_ - y_ * o.y_, x_ * o.y_ + y_ * o.x_};
    }
    GaussianResidue operator-() const { return {ctx_, -x_, -y_}; }
    bool operator==(const GaussianResidue& o) const noexcept { return x_ == o.x_ && y_ == o.y_; }

    GaussianResidue zero_like() const { return {ctx_, 0, 0}; }
    GaussianResidue one_like() const { return {ctx_, 1, 0}; }
    GaussianResidue from_int(std::int64_t n) const { return {ctx_, n, 0}; }
    bool is_zero() const noexcept { return x_ == 0 && y_ == 0; }
    std::uint64_t characteristic() const;

private:
    const GaussianContext* ctx_ = nullptr;
    std::int64_t x_ = 0;
    std::int64_t y_ = 0;
};

/// Z[i]/I with I given by generators; the ideal's Z^2-lattice is held in
/// Hermite normal form {(alpha, beta), (0, gamma)}, 0 <= beta < gamma, so a
/// canonical representative has 0 <= x < alpha and 0 <= y < gamma.
class GaussianContext {
public:
    /// Principal ideal generated by a + b i.
    GaussianContext(std::int64_t a, std::int64_t b, std::string label);

    std::int64_t alpha() const noexcept { return alpha_; }
    std::int64_t beta() const noexcept { return beta_; }
    std::int64_t gamma() const noexcept { return gamma_; }
    std::uint64_t size() const noexcept { return static_cast<std::uint64_t>(alpha_ * gamma_); }
    const std::string& label() const noexcept { return label_; }

    void reduce(std::int64_t& x, std::int64_t& y) const noexcept;
    GaussianResidue make(std::int64_t x, std::int64_t y) const { return {this, x, y}; }
    GaussianResidue from_index(std::uint64_t index) const;
    std::uint64_t index_of(const GaussianResidue& g) const noexcept;
    std::uint64_t characteristic() const;

private:
    std::int64_t alpha_ = 1;
    std::int64_t beta_ = 0;
    std::int64_t gamma_ = 1;
    std::string label_;
};

struct GaussianQuotient {
    unsigned p = 0;
    unsigned k = 0;
    bool split = false;
    std::int64_t pi_re = 0;  ///< prime factor a + b i when split
    std::int64_t pi_im = 0;
    GaussianPtr ring;
};

/// Z[i]/P^k for p = 1 mod 4 (P = (a + b i), a^2 + b^2 = p, a > b > 0 found by
/// search) or Z[i]/(p^k) for p = 3 mod 4. k must be 1 or 2.
GaussianQuotient gaussian_quotient(unsigned p, unsigned k);

}  // namespace wittrep
