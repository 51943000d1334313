#include "wittrep/rep.hpp"

#include <unordered_map>

namespace wittrep {

RepBasis make_rep_basis(unsigned p) {
    RepBasis b;
    b.p = p;
    b.vars = make_vars({"A0", "A1", "B0", "B1"});
    for (unsigned i = p + 1; i-- > 0;) b.monomials.push_back({i, 0, p - i, 0});
    b.monomials.push_back({0, 1, 0, 0});
    b.monomials.push_back({0, 0, 0, 1});
    for (const auto& m : b.monomials) b.names.push_back(monomial_text(*b.vars, m));
    return b;
}

RhoEvaluator::RhoEvaluator(FieldPtr ctx) : ctx_(std::move(ctx)), basis_(make_rep_basis(ctx_->p())) {
    using P = MultiPoly<Fq>;
    const Vars hv = make_vars({"a0", "a1", "b0", "b1", "c0", "c1", "d0", "d1"});
    const auto v = [&](std::size_t i) { return P::variable(hv, ctx_->zero(), i); };
    using W = Witt2<P>;
    const auto h = GroupElement<P>::unchecked(W(v(0), v(1)), W(v(2), v(3)), W(v(4), v(5)), W(v(6), v(7)));
    const Matrix<P> generic = pullback_matrix(basis_, h);
    for (const P& entry : generic.data()) {
        std::vector<Term> terms;
        for (const auto& [e, c] : entry.terms()) {
            Term t{c.index(), {}};
            for (std::size_t i = 0; i < 8; ++i) {
                t.exps[i] = static_cast<std::uint8_t>(e[i]);
                max_degree_ = std::max(max_degree_, e[i]);
            }
            terms.push_back(t);
        }
        entries_.push_back(std::move(terms));
    }
}

void RhoEvaluator::indices(const GroupFq& g, std::vector<std::uint32_t>& out) const {
    const GroupFq h = g.inverse();
    const std::array<std::uint32_t, 8> point{h.a().a0().index(), h.a().a1().index(), h.b().a0().index(),
                                             h.b().a1().index(), h.c().a0().index(), h.c().a1().index(),
                                             h.d().a0().index(), h.d().a1().index()};
    const FieldContext& f = *ctx_;
    // pw[i * (max_degree_ + 1) + k] = point[i]^k
    const std::size_t stride = max_degree_ + 1;
    std::vector<std::uint32_t> pw(8 * stride);
    for (std::size_t i = 0; i < 8; ++i) {
        pw[i * stride] = 1;
        for (std::size_t k = 1; k < stride; ++k) pw[i * stride + k] = f.mul(pw[i * stride + k - 1], point[i]);
    }
    out.assign(entries_.size(), 0);
    for (std::size_t e = 0; e < entries_.size(); ++e) {
        std::uint32_t acc = 0;
        for (const Term& t : entries_[e]) {
            std::uint32_t term = t.coeff;
            for (std::size_t i = 0; i < 8 && term != 0; ++i)
                if (t.exps[i] != 0) term = f.mul(term, pw[i * stride + t.exps[i]]);
            acc = f.add(acc, term);
        }
        out[e] = acc;
    }
}

Matrix<Fq> RhoEvaluator::operator()(const GroupFq& g) const {
    std::vector<std::uint32_t> idx;
    indices(g, idx);
    const std::size_t n = dim();
    Matrix<Fq> m(n, n, ctx_->zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = ctx_->from_index(idx[i * n + j]);
    return m;
}

// ---------------------------------------------------------------------------
// Differential

std::string_view to_string(LieTag tag) {
    switch (tag) {
        case LieTag::e: return "e";
        case LieTag::f: return "f";
        case LieTag::h: return "h";
        case LieTag::e1: return "e1";
        case LieTag::f1: return "f1";
        case LieTag::z: return "z";
    }
    return "?";
}

std::optional<LieTag> parse_lie_tag(std::string_view name) {
    for (LieTag t : all_lie_tags)
        if (to_string(t) == name) return t;
    return std::nullopt;
}

GroupDual lie_realization(LieTag tag, const FieldContext& ctx) {
    using W = Witt2<DualFq>;
    const DualFq zero = DualFq::constant(ctx.zero());
    const DualFq eps = DualFq::epsilon(ctx.zero());
    switch (tag) {
        case LieTag::e: return gen_x(W(eps, zero));
        case LieTag::f: return gen_y(W(eps, zero));
        case LieTag::h: return gen_phi(zero.one_like() + eps);
        case LieTag::e1: return gen_x(W(zero, eps));
        case LieTag::f1: return gen_y(W(zero, eps));
        case LieTag::z: return gen_z(eps);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown Lie basis tag");
}

Matrix<Fq> first_order_part(const Matrix<DualFq>& m) {
    const Fq zero = m.proto().real().zero_like();
    Matrix<Fq> real(m.rows(), m.cols(), zero), eps(m.rows(), m.cols(), zero);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            real(i, j) = m(i, j).real();
            eps(i, j) = m(i, j).eps();
        }
    }
    if (!real.is_identity()) throw Error(ErrorKind::NotFirstOrder, "eps^0 part is not the identity");
    return eps;
}

Matrix<Fq> drho_of(const GroupDual& g) { return first_order_part(rho_matrix(g)); }

Matrix<Fq> drho(LieTag tag, const FieldContext& ctx) { return drho_of(lie_realization(tag, ctx)); }

LieKernel drho_kernel(const FieldContext& ctx) {
    std::vector<std::vector<Fq>> cols;
    std::size_t n2 = 0;
    for (LieTag t : all_lie_tags) {
        const Matrix<Fq> m = drho(t, ctx);
        n2 = m.data().size();
        cols.push_back(m.data());
    }
    const Matrix<Fq> map = Matrix<Fq>::from_columns(cols, n2, ctx.zero());
    LieKernel k;
    k.basis = nullspace(map);
    k.dimension = k.basis.size();
    return k;
}

std::size_t drho_kernel_dimension(const FieldContext& ctx) { return drho_kernel(ctx).dimension; }

GroupDual to_dual(const GroupFq& g) {
    const auto lift = [](const WittFq& w) {
        return Witt2<DualFq>(DualFq::constant(w.a0()), DualFq::constant(w.a1()));
    };
    return GroupDual::unchecked(lift(g.a()), lift(g.b()), lift(g.c()), lift(g.d()));
}

// ---------------------------------------------------------------------------
// Hat representation

Matrix<Fq> twisted_adjoint_matrix(const Sl2k& a) {
    const Fq zero = a.a.zero_like();
    const Fq one = a.a.one_like();
    const std::array<Sl2Lie, 3> unit{Sl2Lie{one, zero, zero}, Sl2Lie{zero, one, zero}, Sl2Lie{zero, zero, one}};
    Matrix<Fq> m(3, 3, zero);
    for (std::size_t j = 0; j < 3; ++j) {
        const Sl2Lie img = twisted_adjoint(a, unit[j]);
        m(0, j) = img.x;
        m(1, j) = img.y;
        m(2, j) = img.z;
    }
    return m;
}

Matrix<Fq> hat_rep_matrix(const HatElement& x) {
    const Matrix<Fq> ad = twisted_adjoint_matrix(x.a);
    Matrix<Fq> m(4, 4, x.a.a.zero_like());
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = ad(i, j);
    m(0, 3) = x.v.x;
    m(1, 3) = x.v.y;
    m(2, 3) = x.v.z;
    m(3, 3) = x.a.a.one_like();
    return m;
}

// ---------------------------------------------------------------------------
// Homomorphism checks

namespace {

void mul_indices(const FieldContext& f, std::size_t n, const std::vector<std::uint32_t>& a,
                 const std::vector<std::uint32_t>& b, std::vector<std::uint32_t>& out) {
    out.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const std::uint32_t x = a[i * n + k];
            if (x == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const std::uint32_t y = b[k * n + j];
                if (y != 0) out[i * n + j] = f.add(out[i * n + j], f.mul(x, y));
            }
        }
    }
}

}  // namespace

HomomorphismReport homomorphism_check_exhaustive(const RhoEvaluator& rho, std::uint64_t element_budget,
                                                 std::uint64_t pair_budget) {
    const FieldContext& f = rho.field();
    const std::uint64_t order = group_order(f.q());
    if (order * order > pair_budget)
        throw Error(ErrorKind::BudgetExceeded, std::to_string(order * order) + " pairs exceed the pair budget " +
                                                   std::to_string(pair_budget));
    const std::vector<GroupFq> els = enumerate_group(f, element_budget);
    std::vector<std::vector<std::uint32_t>> mats(els.size());
    std::unordered_map<std::uint64_t, std::size_t> where;
    where.reserve(els.size() * 2);
    for (std::size_t i = 0; i < els.size(); ++i) {
        rho.indices(els[i], mats[i]);
        where.emplace(element_key(els[i]), i);
    }
    HomomorphismReport rep;
    const std::size_t n = rho.dim();
    std::vector<std::uint32_t> prod;
    for (std::size_t i = 0; i < els.size(); ++i) {
        for (std::size_t j = 0; j < els.size(); ++j) {
            ++rep.pairs_checked;
            const std::size_t k = where.at(element_key(els[i] * els[j]));
            mul_indices(f, n, mats[i], mats[j], prod);
            if (prod != mats[k]) {
                rep.passed = false;
                rep.witness = std::make_pair(els[i], els[j]);
                return rep;
            }
        }
    }
    return rep;
}

HomomorphismReport homomorphism_check_pairs(const RhoEvaluator& rho,
                                            std::span<const std::pair<GroupFq, GroupFq>> pairs) {
    HomomorphismReport rep;
    const std::size_t n = rho.dim();
    std::vector<std::uint32_t> a, b, ab, prod;
    for (const auto& [g, h] : pairs) {
        ++rep.pairs_checked;
        rho.indices(g, a);
        rho.indices(h, b);
        rho.indices(g * h, ab);
        mul_indices(rho.field(), n, a, b, prod);
        if (prod != ab) {
            rep.passed = false;
            rep.witness = std::make_pair(g, h);
            return rep;
        }
    }
    return rep;
}

std::vector<GroupFq> generator_sweep(const FieldContext& ctx) {
    std::vector<GroupFq> out;
    const auto ws = witt_elements(ctx);
    for (const auto& w : ws) out.push_back(gen_x(w));
    for (const auto& w : ws) out.push_back(gen_y(w));
    for (const auto& t : ctx.elements()) {
        if (!t.is_zero()) out.push_back(gen_phi(t));
        out.push_back(gen_z(t));
    }
    return out;
}

}  // namespace wittrep
