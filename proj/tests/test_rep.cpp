#include "doctest.h"
#include "support.hpp"
#include "wittrep/rep.hpp"

using namespace wittrep;
using testing::error_kind;

namespace {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

WittFq w(const FieldContext& ctx, std::int64_t a0, std::int64_t a1) { return {ctx.from_int(a0), ctx.from_int(a1)}; }

// rho_3 at q = 3, frozen from the point-evaluation oracle.
const IntMatrix kRhoX10{
    {1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 1, 0}, {0, 1, 1, 0, 2, 0},
    {2, 1, 2, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 2, 1},
};
const IntMatrix kRhoZ1{
    {1, 0, 0, 0, 2, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
    {0, 0, 0, 1, 0, 1}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1},
};
const IntMatrix kRhoX01{
    {1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
    {0, 0, 0, 1, 2, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1},
};

std::vector<Fq> column(const Matrix<Fq>& m, std::size_t j) { return m.column(j); }

}  // namespace

TEST_CASE("basis") {
    const auto b3 = make_rep_basis(3);
    CHECK(b3.dim() == 6);
    CHECK(b3.names == std::vector<std::string>{"A0^3", "A0^2*B0", "A0*B0^2", "B0^3", "A1", "B1"});
    for (unsigned p : {2U, 5U, 7U}) CHECK(make_rep_basis(p).dim() == p + 3);
}

TEST_CASE("frozen matrices at p = 3") {
    const auto f3 = make_field_context(3, 1);
    CHECK(testing::to_ints(rho_matrix(gen_x(w(*f3, 1, 0)))) == kRhoX10);
    CHECK(testing::to_ints(rho_matrix(gen_z(f3->one()))) == kRhoZ1);
    CHECK(testing::to_ints(rho_matrix(gen_x(w(*f3, 0, 1)))) == kRhoX01);
}

TEST_CASE("symbolic pullback agrees with point evaluation on the whole group for q = 2, 3") {
    for (unsigned p : {2U, 3U}) {
        const auto ctx = make_field_context(p, 1);
        const RhoEvaluator rho(ctx);
        for (const auto& g : enumerate_group(*ctx, 1'000'000)) {
            const IntMatrix expect = oracle::rho(p, testing::to_zp2(g));
            CHECK(testing::to_ints(rho_matrix(g)) == expect);
            CHECK(testing::to_ints(rho(g)) == expect);
        }
    }
}

TEST_CASE("symbolic pullback agrees with point evaluation on random elements for q = 5, 7") {
    testing::Gen gen(41);
    for (unsigned p : {5U, 7U}) {
        const auto ctx = make_field_context(p, 1);
        const RhoEvaluator rho(ctx);
        for (int k = 0; k < 60; ++k) {
            const GroupFq g = gen.group(*ctx);
            CHECK(testing::to_ints(rho(g)) == oracle::rho(p, testing::to_zp2(g)));
        }
    }
}

TEST_CASE("evaluator matches the symbolic pullback over extension fields") {
    testing::Gen gen(43);
    for (std::uint64_t q : {4, 8, 9, 25}) {
        const auto ctx = make_field_context_for_order(q);
        const RhoEvaluator rho(ctx);
        std::vector<std::uint32_t> idx;
        for (int k = 0; k < 40; ++k) {
            const GroupFq g = gen.group(*ctx);
            const Matrix<Fq> m = rho_matrix(g);
            CHECK(rho(g) == m);
            rho.indices(g, idx);
            for (std::size_t i = 0; i < m.data().size(); ++i) CHECK(idx[i] == m.data()[i].index());
        }
    }
}

TEST_CASE("the torus acts diagonally with weights -p, -p+2, ..., p on A0^.. and -p, p on A1, B1") {
    const auto f9 = make_field_context(3, 2);
    for (const auto& t : f9->elements()) {
        if (t.is_zero()) continue;
        const Matrix<Fq> m = rho_matrix(gen_phi(t));
        CHECK(m.is_diagonal());
        const Fq ti = t.inverse();
        const std::vector<Fq> expect{ti.pow(3), ti, t, t.pow(3), ti.pow(3), t.pow(3)};
        for (std::size_t i = 0; i < 6; ++i) CHECK(m(i, i) == expect[i]);
    }
}

TEST_CASE("Z is a one-parameter subgroup of order p in the representation") {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        const auto ctx = make_field_context_for_order(q);
        const RhoEvaluator rho(ctx);
        for (const auto& s : ctx->elements())
            for (const auto& t : ctx->elements()) CHECK(rho(gen_z(s)) * rho(gen_z(t)) == rho(gen_z(s + t)));
        const Matrix<Fq> z1 = rho(gen_z(ctx->one()));
        CHECK_FALSE(z1.is_identity());
        CHECK(z1.pow(ctx->p()).is_identity());
    }
}

TEST_CASE("rho is a homomorphism on seeded random pairs") {
    testing::Gen gen(47);
    for (std::uint64_t q : {4, 5, 7, 9, 25, 27}) {
        const auto ctx = make_field_context_for_order(q);
        const RhoEvaluator rho(ctx);
        std::vector<std::pair<GroupFq, GroupFq>> pairs;
        for (int k = 0; k < 300; ++k) pairs.emplace_back(gen.group(*ctx), gen.group(*ctx));
        const auto rep = homomorphism_check_pairs(rho, pairs);
        CHECK(rep.passed);
        CHECK(rep.pairs_checked == 300);
    }
}

TEST_CASE("exhaustive homomorphism sweep and its budget") {
    const auto f2 = make_field_context(2, 1);
    const RhoEvaluator rho(f2);
    const auto rep = homomorphism_check_exhaustive(rho, 1'000'000, 10'000);
    CHECK(rep.passed);
    CHECK(rep.pairs_checked == 48 * 48);
    CHECK(error_kind([&] { homomorphism_check_exhaustive(rho, 1'000'000, 100); }) == ErrorKind::BudgetExceeded);
}

TEST_CASE("differential on the six Lie directions at p = 3") {
    const auto f3 = make_field_context(3, 1);
    const Fq one = f3->one(), zero = f3->zero(), minus = -one;
    const std::size_t A1 = 4, A03 = 0, B03 = 3;

    const Matrix<Fq> dz = drho(LieTag::z, *f3);
    for (std::size_t j = 0; j < 4; ++j)
        for (const auto& x : column(dz, j)) CHECK(x.is_zero());
    const auto z_a1 = column(dz, A1);
    for (std::size_t i = 0; i < 6; ++i) CHECK(z_a1[i] == (i == A03 ? minus : zero));

    const auto e1_a1 = column(drho(LieTag::e1, *f3), A1);
    for (std::size_t i = 0; i < 6; ++i) CHECK(e1_a1[i] == (i == B03 ? minus : zero));

    const Matrix<Fq> dh = drho(LieTag::h, *f3);
    CHECK(dh.is_diagonal());
    const std::vector<int> weights{-3, -1, 1, 3, -3, 3};
    for (std::size_t i = 0; i < 6; ++i) CHECK(dh(i, i) == f3->from_int(weights[i]));
}

TEST_CASE("kernel of the differential") {
    CHECK(drho_kernel_dimension(*make_field_context(3, 1)) == 0);
    CHECK(drho_kernel_dimension(*make_field_context(5, 1)) == 0);
    CHECK(drho_kernel_dimension(*make_field_context(3, 2)) == 0);
    const auto k2 = drho_kernel(*make_field_context(2, 1));
    REQUIRE(k2.dimension == 1);
    // only the h coordinate is nonzero
    const auto& v = k2.basis.at(0);
    for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i].is_zero() == (i != 2));
    CHECK(to_string(all_lie_tags[2]) == "h");
    CHECK(parse_lie_tag("e1") == LieTag::e1);
    CHECK_FALSE(parse_lie_tag("q"));
}

TEST_CASE("the differential is additive on products of the realizations") {
    for (std::uint64_t q : {3, 5}) {
        const auto ctx = make_field_context_for_order(q);
        const auto& tags = all_lie_tags;
        for (std::size_t i = 0; i < tags.size(); ++i)
            for (std::size_t j = i + 1; j < tags.size(); ++j) {
                const GroupDual prod = lie_realization(tags[i], *ctx) * lie_realization(tags[j], *ctx);
                CHECK(drho_of(prod) == drho(tags[i], *ctx) + drho(tags[j], *ctx));
            }
    }
}

TEST_CASE("first-order parts need an identity real part") {
    const auto f3 = make_field_context(3, 1);
    CHECK(error_kind([&] { drho_of(to_dual(gen_x(w(*f3, 1, 0)))); }) == ErrorKind::NotFirstOrder);
    CHECK(drho_of(to_dual(GroupFq::identity(f3->one()))).is_zero());
}

TEST_CASE("the 4-dimensional representation of sl_2(F_3) x SL_2(F_3)") {
    const auto f3 = make_field_context(3, 1);
    const auto els = enumerate_hat_group(*f3, 1'000'000);
    std::vector<Matrix<Fq>> mats;
    for (const auto& x : els) mats.push_back(hat_rep_matrix(x));
    std::size_t kernel = 0;
    const Sl2k minus_i{-f3->one(), f3->zero(), f3->zero(), -f3->one()};
    for (std::size_t i = 0; i < els.size(); ++i) {
        CHECK(mats[i].rows() == 4);
        if (mats[i].is_identity()) {
            ++kernel;
            CHECK(els[i].v.is_zero());
            CHECK((els[i].a == Sl2k::identity(f3->one()) || els[i].a == minus_i));
        }
    }
    CHECK(kernel == 2);
    for (std::size_t i = 0; i < els.size(); ++i)
        for (std::size_t j = 0; j < els.size(); ++j)
            if (!(hat_rep_matrix(hat_group_mul(els[i], els[j])) == mats[i] * mats[j])) FAIL("not a homomorphism");
}
