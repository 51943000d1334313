#pragma once

// The group SL_2(W_2(R)): 2x2 matrices over length-2 Witt vectors with
// determinant (1, 0), its generators, the reduction map to SL_2(R), the
// radical coordinates and enumeration of the finite groups SL_2(W_2(F_q)).

#include "wittrep/ring.hpp"
#include "wittrep/witt.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace wittrep {

/// 2x2 matrix over a commutative ring.
template <CommutativeRing R>
struct Mat2 {
    R a, b, c, d;

    static Mat2 identity(const R& proto) { return {proto.one_like(), proto.zero_like(), proto.zero_like(), proto.one_like()}; }

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
    R det() const { return a * d - b * c; }
    R trace() const { return a + d; }
    /// Adjugate; the inverse when det = 1.
    Mat2 adjugate() const { return {d, -b, -c, a}; }
};

using Sl2k = Mat2<Fq>;

/// Trace-zero matrix [[x, y], [z, -x]].
struct Sl2Lie {
    Fq x, y, z;

    static Sl2Lie zero(const Fq& proto) { return {proto.zero_like(), proto.zero_like(), proto.zero_like()}; }
    static Sl2Lie from_matrix(const Sl2k& m);
    Sl2k to_matrix() const { return {x, y, z, -x}; }
    Sl2Lie operator+(const Sl2Lie& o) const { return {x + o.x, y + o.y, z + o.z}; }
    bool operator==(const Sl2Lie& o) const = default;
    bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }
};

Sl2k frobenius(const Sl2k& m);
/// Ad^[1](a) v = Frob(a) v Frob(a)^-1 for a in SL_2(F_q).
Sl2Lie twisted_adjoint(const Sl2k& a, const Sl2Lie& v);
std::vector<Sl2k> enumerate_sl2(const FieldContext& ctx);

template <CommutativeRing R>
class GroupElement {
public:
    using W = Witt2<R>;

    GroupElement() = default;

    /// Checked construction: throws NotInGroup unless det = (1, 0).
    static GroupElement from_entries(W a, W b, W c, W d) {
        GroupElement g = unchecked(std::move(a), std::move(b), std::move(c), std::move(d));
        if (!(g.det() == g.a_.one_like())) throw Error(ErrorKind::NotInGroup, "determinant is not (1,0)");
        return g;
    }

    /// Construction without the determinant check, for entries known to lie
    /// in the group (products, inverses, generators).
    static GroupElement unchecked(W a, W b, W c, W d) {
        GroupElement g;
        g.a_ = std::move(a);
        g.b_ = std::move(b);
        g.c_ = std::move(c);
        g.d_ = std::move(d);
        return g;
    }

    static GroupElement identity(const R& proto) {
        const W one = W::teichmuller(proto.one_like());
        const W zero = one.zero_like();
        return unchecked(one, zero, zero, one);
    }

    const W& a() const noexcept { return a_; }
    const W& b() const noexcept { return b_; }
    const W& c() const noexcept { return c_; }
    const W& d() const noexcept { return d_; }

    W det() const { return a_ * d_ - b_ * c_; }

    GroupElement operator*(const GroupElement& o) const {
        return unchecked(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
    }

    /// Adjugate [[d, -b], [-c, a]], valid since det = 1.
    GroupElement inverse() const { return unchecked(d_, -b_, -c_, a_); }

    GroupElement pow(std::int64_t e) const {
        GroupElement base = e < 0 ? inverse() : *this;
        std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
        GroupElement result = identity(a_.a0());
        for (; n != 0; n >>= 1U) {
            if (n & 1U) result = result * base;
            if (n > 1) base = base * base;
        }
        return result;
    }

    bool operator==(const GroupElement& o) const { return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_; }
    bool is_identity() const { return *this == identity(a_.a0()); }

private:
    W a_, b_, c_, d_;
};

using GroupFq = GroupElement<Fq>;

/// X(w) = [[1, w], [0, 1]]
template <CommutativeRing R>
GroupElement<R> gen_x(const Witt2<R>& w) {
    const auto one = w.one_like();
    return GroupElement<R>::unchecked(one, w, w.zero_like(), one);
}

/// Y(w) = [[1, 0], [w, 1]]
template <CommutativeRing R>
GroupElement<R> gen_y(const Witt2<R>& w) {
    const auto one = w.one_like();
    return GroupElement<R>::unchecked(one, w.zero_like(), w, one);
}

/// phi(t) = diag((t, 0), (1/t, 0)); t must be a unit.
template <UnitTestableRing R>
GroupElement<R> gen_phi(const R& t) {
    if (!t.is_unit()) throw Error(ErrorKind::ZeroTorusParameter, "torus parameter must be invertible");
    using W = Witt2<R>;
    const W zero(t.zero_like(), t.zero_like());
    return GroupElement<R>::unchecked(W::teichmuller(t), zero, zero, W::teichmuller(t.inverse()));
}

/// Z(s) = diag((1, s), (1, -s)).
template <CommutativeRing R>
GroupElement<R> gen_z(const R& s) {
    using W = Witt2<R>;
    const W zero(s.zero_like(), s.zero_like());
    return GroupElement<R>::unchecked(W(s.one_like(), s), zero, zero, W(s.one_like(), -s));
}

/// Int(g) h = g h g^-1
template <CommutativeRing R>
GroupElement<R> conjugate(const GroupElement<R>& g, const GroupElement<R>& h) {
    return g * h * g.inverse();
}

/// Entrywise residue map (a0, a1) -> a0.
template <CommutativeRing R>
Mat2<R> eta(const GroupElement<R>& g) {
    return {g.a().a0(), g.b().a0(), g.c().a0(), g.d().a0()};
}

/// Coordinates of the radical: [[(1,x),(0,y)],[(0,z),(1,-x)]] -> [[x,y],[z,-x]].
Sl2Lie gamma_map(const GroupFq& r);
/// Inverse of gamma_map.
GroupFq radical_element(const Sl2Lie& v);

/// Multiplicative order of g, by repeated multiplication.
std::uint64_t element_order(const GroupFq& g, std::uint64_t limit = 1'000'000);

/// Packs the eight coordinates into a 64-bit key (q <= 256).
std::uint64_t element_key(const GroupFq& g);

std::string to_string(const GroupFq& g);

// ---------------------------------------------------------------------------
// Enumeration

enum class EnumerationMethod { Auto, BruteForce, Fiber };

std::uint64_t group_order(std::uint64_t q);

/// Lift of a in SL_2(F_q) to SL_2(W_2(F_q)): Teichmuller entries with the
/// first row rescaled so the determinant is (1, 0).
GroupFq lift_sl2(const Sl2k& a);

/// Visits each element of SL_2(W_2(F_q)) exactly once. Auto filters all q^8
/// candidate matrices for q <= 3 and walks the fibers of eta otherwise.
/// Throws BudgetExceeded when the group order exceeds budget.
void for_each_group_element(const FieldContext& ctx, std::uint64_t budget, const std::function<void(const GroupFq&)>& visit,
                            EnumerationMethod method = EnumerationMethod::Auto);
std::vector<GroupFq> enumerate_group(const FieldContext& ctx, std::uint64_t budget,
                                     EnumerationMethod method = EnumerationMethod::Auto);
/// The q^3 elements of ker(eta).
std::vector<GroupFq> radical_elements(const FieldContext& ctx);

GroupFq random_element(const FieldContext& ctx, std::mt19937_64& rng);

// ---------------------------------------------------------------------------
// Invariant subgroups of the radical

struct LemmaGenerateReport {
    /// F_p-dimension of the span of the orbit of gamma(X(0,1)).
    std::size_t orbit_span_dim = 0;
    std::size_t full_dim = 0;  ///< 3r
    bool part1 = false;
    std::size_t vectors_checked = 0;
    bool part2 = false;
    std::size_t equivariance_checks = 0;
    bool equivariance = false;
    std::optional<std::string> failure;
    bool passed() const { return part1 && part2 && equivariance; }
};

/// (1) the orbit of gamma(X(0,1)) under Ad^[1](eta(g)) spans all of
/// sl_2(F_q) additively; (2) every nonzero orbit span contains gamma(Z(1));
/// along the way gamma(g r g^-1) = Ad^[1](eta g) gamma(r) is checked for
/// every r in the radical and equivariance_samples random g.
LemmaGenerateReport lemma_generate_check(const FieldContext& ctx, std::size_t equivariance_samples = 100,
                                         std::uint64_t seed = 1);

// ---------------------------------------------------------------------------
// sl_2(F_q) x| SL_2(F_q) with the Frobenius-twisted adjoint action

struct HatElement {
    Sl2Lie v;
    Sl2k a;
    bool operator==(const HatElement& o) const { return v == o.v && a == o.a; }
};

/// (v, a)(w, b) = (v + Ad^[1](a) w, ab)
HatElement hat_group_mul(const HatElement& x, const HatElement& y);
HatElement hat_identity(const FieldContext& ctx);
std::vector<HatElement> enumerate_hat_group(const FieldContext& ctx, std::uint64_t budget);

// ---------------------------------------------------------------------------
// Element expressions
//
//   expr := term { "*" term } ; term := gen [ "^" integer ] ;
//   gen  := "X(" witt ")" | "Y(" witt ")" | "Phi(" fe ")" | "Z(" fe ")" | "I" ;
//   witt := fe "," fe ; fe := integer | "[" integer { "," integer } "]" .

GroupFq parse_element(std::string_view expr, const FieldContext& ctx);

}  // namespace wittrep
