#pragma once

// The (p+3)-dimensional representation rho_p on the span of the monomials
// A0^i B0^j (i + j = p), A1, B1 in the coordinates of W_2 + W_2, acting by
// (rho(g) f)(w) = f(g^-1 w); its differential through dual numbers; and the
// 4-dimensional representation of sl_2 x| SL_2 on sl_2 + k.

#include "wittrep/group.hpp"
#include "wittrep/matrix.hpp"
#include "wittrep/poly.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wittrep {

/// Variables are ordered A0, A1, B0, B1. Monomials are
/// A0^p, A0^(p-1) B0, ..., B0^p, A1, B1 in that order.
struct RepBasis {
    unsigned p = 0;
    Vars vars;
    std::vector<Exponents> monomials;
    std::vector<std::string> names;
    std::size_t dim() const noexcept { return monomials.size(); }
};

RepBasis make_rep_basis(unsigned p);

/// Matrix of f -> f(h w) in the basis; columns are images of basis vectors.
/// h need not have determinant one.
template <CommutativeRing R>
Matrix<R> pullback_matrix(const RepBasis& basis, const GroupElement<R>& h) {
    using P = MultiPoly<R>;
    using WP = Witt2<P>;
    const R& proto = h.a().a0();
    const auto var = [&](std::size_t i) { return P::variable(basis.vars, proto, i); };
    const auto lift = [&](const Witt2<R>& w) {
        return WP(P::constant(basis.vars, w.a0()), P::constant(basis.vars, w.a1()));
    };
    const WP a(var(0), var(1)), b(var(2), var(3));
    const WP a2 = lift(h.a()) * a + lift(h.b()) * b;
    const WP b2 = lift(h.c()) * a + lift(h.d()) * b;
    const std::vector<P> bind{a2.a0(), a2.a1(), b2.a0(), b2.a1()};

    const std::size_t n = basis.dim();
    Matrix<R> out(n, n, proto);
    for (std::size_t j = 0; j < n; ++j) {
        const P f = P::monomial(basis.vars, proto.one_like(), basis.monomials[j]);
        const auto coords = express_in_basis(substitute(f, std::span<const P>(bind)), basis.monomials);
        for (std::size_t i = 0; i < n; ++i) out(i, j) = coords[i];
    }
    return out;
}

template <CommutativeRing R>
Matrix<R> rho_matrix(const GroupElement<R>& g) {
    return pullback_matrix(make_rep_basis(g.a().p()), g.inverse());
}

/// rho_p over F_q with the pullback precomputed once for a generic matrix;
/// evaluating it costs one polynomial evaluation per entry.
class RhoEvaluator {
public:
    explicit RhoEvaluator(FieldPtr ctx);

    const RepBasis& basis() const noexcept { return basis_; }
    const FieldContext& field() const noexcept { return *ctx_; }
    std::size_t dim() const noexcept { return basis_.dim(); }

    Matrix<Fq> operator()(const GroupFq& g) const;
    /// Row-major field indices of rho(g).
    void indices(const GroupFq& g, std::vector<std::uint32_t>& out) const;

private:
    struct Term {
        std::uint32_t coeff;
        std::array<std::uint8_t, 8> exps;
    };

    FieldPtr ctx_;
    RepBasis basis_;
    unsigned max_degree_ = 0;
    std::vector<std::vector<Term>> entries_;
};

// ---------------------------------------------------------------------------
// Differential

using DualFq = DualNumber<Fq>;
using GroupDual = GroupElement<DualFq>;

enum class LieTag { e, f, h, e1, f1, z };
inline constexpr std::array<LieTag, 6> all_lie_tags{LieTag::e, LieTag::f, LieTag::h, LieTag::e1, LieTag::f1, LieTag::z};

std::string_view to_string(LieTag tag);
std::optional<LieTag> parse_lie_tag(std::string_view name);

/// X((eps,0)), Y((eps,0)), phi(1+eps), X((0,eps)), Y((0,eps)), Z(eps).
GroupDual lie_realization(LieTag tag, const FieldContext& ctx);

/// M for a matrix I + eps M; NotFirstOrder when the real part is not I.
Matrix<Fq> first_order_part(const Matrix<DualFq>& m);
Matrix<Fq> drho_of(const GroupDual& g);
Matrix<Fq> drho(LieTag tag, const FieldContext& ctx);

struct LieKernel {
    std::size_t dimension = 0;
    /// Kernel basis in coordinates over (e, f, h, e1, f1, z).
    std::vector<std::vector<Fq>> basis;
};

LieKernel drho_kernel(const FieldContext& ctx);
std::size_t drho_kernel_dimension(const FieldContext& ctx);

/// Lifts an F_q element of the group to dual numbers with zero eps part.
GroupDual to_dual(const GroupFq& g);

// ---------------------------------------------------------------------------
// The representation of sl_2(F_q) x| SL_2(F_q) on sl_2 + F_q

/// Ad^[1](a) on coordinates (x, y, z) of [[x, y], [z, -x]].
Matrix<Fq> twisted_adjoint_matrix(const Sl2k& a);
/// [[Ad^[1](a), v], [0, 1]]: (w, alpha) -> (Ad^[1](a) w + alpha v, alpha).
Matrix<Fq> hat_rep_matrix(const HatElement& x);

// ---------------------------------------------------------------------------
// Homomorphism checks

struct HomomorphismReport {
    std::uint64_t pairs_checked = 0;
    bool passed = true;
    std::optional<std::pair<GroupFq, GroupFq>> witness;
};

/// rho(gh) = rho(g) rho(h) over all ordered pairs of the group; throws
/// BudgetExceeded when |G|^2 exceeds pair_budget.
HomomorphismReport homomorphism_check_exhaustive(const RhoEvaluator& rho, std::uint64_t element_budget,
                                                 std::uint64_t pair_budget);
HomomorphismReport homomorphism_check_pairs(const RhoEvaluator& rho, std::span<const std::pair<GroupFq, GroupFq>> pairs);

/// Generators X(w), Y(w), Phi(t), Z(s) with arguments swept over the field.
std::vector<GroupFq> generator_sweep(const FieldContext& ctx);

}  // namespace wittrep
