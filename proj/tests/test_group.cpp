#include "doctest.h"
#include "support.hpp"
#include "wittrep/group.hpp"

#include <set>

using namespace wittrep;
using testing::error_kind;

namespace {

WittFq w(const FieldContext& ctx, std::int64_t a0, std::int64_t a1) { return {ctx.from_int(a0), ctx.from_int(a1)}; }

}  // namespace

TEST_CASE("generator matrices over F_3") {
    const auto f3 = make_field_context(3, 1);
    const GroupFq x = gen_x(w(*f3, 1, 0));
    CHECK(x.a() == w(*f3, 1, 0));
    CHECK(x.b() == w(*f3, 1, 0));
    CHECK(x.c() == w(*f3, 0, 0));
    CHECK(x.d() == w(*f3, 1, 0));

    const GroupFq ph = gen_phi(f3->from_int(2));
    CHECK(ph.a() == w(*f3, 2, 0));
    CHECK(ph.d() == w(*f3, 2, 0));
    CHECK(ph.b().is_zero());

    const GroupFq z = gen_z(f3->one());
    CHECK(z.a() == w(*f3, 1, 1));
    CHECK(z.d() == w(*f3, 1, 2));
    CHECK(z.b().is_zero());
    CHECK(z.c().is_zero());

    CHECK(x * x == gen_x(w(*f3, 2, 1)));
    for (const auto& v : witt_elements(*f3)) {
        CHECK(gen_x(v).inverse() == gen_x(-v));
        CHECK(gen_y(v).inverse() == gen_y(-v));
    }
    CHECK(error_kind([&] { gen_phi(f3->zero()); }) == ErrorKind::ZeroTorusParameter);
    CHECK(error_kind([&] { GroupFq::from_entries(w(*f3, 1, 0), w(*f3, 1, 0), w(*f3, 1, 0), w(*f3, 1, 0)); }) ==
          ErrorKind::NotInGroup);
}

TEST_CASE("reduction and radical coordinates") {
    const auto f9 = make_field_context(3, 2);
    const Sl2k id = Sl2k::identity(f9->one());
    for (const auto& s : f9->elements()) {
        CHECK(eta(gen_z(s)) == id);
        const auto g = gamma_map(gen_z(s));
        CHECK(g.x == s);
        CHECK(g.y.is_zero());
        CHECK(g.z.is_zero());
        const auto gx = gamma_map(gen_x(WittFq(f9->zero(), s)));
        CHECK(gx.x.is_zero());
        CHECK(gx.y == s);
        CHECK(gx.z.is_zero());
    }
    for (const auto& v : witt_elements(*f9)) {
        const Sl2k e = eta(gen_x(v));
        CHECK(e == Sl2k{f9->one(), v.a0(), f9->zero(), f9->one()});
    }
    CHECK(error_kind([&] { gamma_map(gen_x(w(*f9, 1, 0))); }) == ErrorKind::NotInRadical);
    // gamma and radical_element are inverse to each other
    for (const auto& r : radical_elements(*f9)) CHECK(radical_element(gamma_map(r)) == r);
}

TEST_CASE("group orders match a brute-force count over Z/p^2") {
    CHECK(group_order(2) == 48);
    CHECK(group_order(3) == 648);
    CHECK(group_order(5) == 15000);
    CHECK(oracle::sl2_zp2_count(2) == 48);
    CHECK(oracle::sl2_zp2_count(3) == 648);
    CHECK(oracle::sl2_zp2_count(5) == 15000);

    for (std::uint64_t q : {2, 3, 4, 5}) {
        const auto ctx = make_field_context_for_order(q);
        const auto els = enumerate_group(*ctx, 1'000'000);
        CHECK(els.size() == group_order(q));
        std::set<std::uint64_t> keys;
        for (const auto& g : els) keys.insert(element_key(g));
        CHECK(keys.size() == els.size());
        std::uint64_t kernel = 0;
        const Sl2k id = Sl2k::identity(ctx->one());
        for (const auto& g : els) kernel += eta(g) == id ? 1 : 0;
        CHECK(kernel == q * q * q);
        CHECK(radical_elements(*ctx).size() == q * q * q);
    }
}

TEST_CASE("enumerated elements over F_3 are exactly SL_2(Z/9)") {
    const auto f3 = make_field_context(3, 1);
    std::set<oracle::Mat> seen;
    for (const auto& g : enumerate_group(*f3, 1'000'000)) {
        const auto m = testing::to_zp2(g);
        CHECK(oracle::mod(m[0] * m[3] - m[1] * m[2], 9) == 1);
        seen.insert(m);
    }
    CHECK(seen.size() == oracle::sl2_zp2_count(3));
}

TEST_CASE("fiber enumeration and brute force agree") {
    for (std::uint64_t q : {2, 3}) {
        const auto ctx = make_field_context_for_order(q);
        std::set<std::uint64_t> brute, fiber;
        for (const auto& g : enumerate_group(*ctx, 1'000'000, EnumerationMethod::BruteForce))
            brute.insert(element_key(g));
        for (const auto& g : enumerate_group(*ctx, 1'000'000, EnumerationMethod::Fiber)) fiber.insert(element_key(g));
        CHECK(brute == fiber);
    }
    const auto f5 = make_field_context(5, 1);
    CHECK(error_kind([&] { enumerate_group(*f5, 1000); }) == ErrorKind::BudgetExceeded);
}

TEST_CASE("torus conjugation of X and Z, exhaustively for q <= 9") {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        const auto ctx = make_field_context_for_order(q);
        const unsigned p = ctx->p();
        for (const auto& t : ctx->elements()) {
            if (t.is_zero()) continue;
            const GroupFq ph = gen_phi(t);
            const Fq t2 = t * t;
            for (const auto& v : witt_elements(*ctx))
                CHECK(conjugate(ph, gen_x(v)) == gen_x(WittFq(t2 * v.a0(), t2.pow(p) * v.a1())));
            for (const auto& s : ctx->elements()) CHECK(conjugate(ph, gen_z(s)) == gen_z(s));
        }
    }
}

TEST_CASE("reduction is a homomorphism on seeded random pairs") {
    testing::Gen gen(23);
    for (std::uint64_t q : {2, 3, 4, 9, 25}) {
        const auto ctx = make_field_context_for_order(q);
        for (int k = 0; k < 2500; ++k) {
            const GroupFq g = gen.group(*ctx), h = gen.group(*ctx);
            CHECK(eta(g * h) == eta(g) * eta(h));
            CHECK((g * h).inverse() == h.inverse() * g.inverse());
        }
    }
}

TEST_CASE("radical coordinates are equivariant for the twisted adjoint action") {
    testing::Gen gen(29);
    for (std::uint64_t q : {3, 4, 9}) {
        const auto ctx = make_field_context_for_order(q);
        const auto rad = radical_elements(*ctx);
        for (int k = 0; k < 100; ++k) {
            const GroupFq g = gen.group(*ctx);
            for (const auto& r : rad) CHECK(gamma_map(conjugate(g, r)) == twisted_adjoint(eta(g), gamma_map(r)));
        }
        // the radical is abelian and gamma turns its product into a sum
        for (int k = 0; k < 200; ++k) {
            const auto& r = rad[gen.below(rad.size())];
            const auto& s = rad[gen.below(rad.size())];
            CHECK(r * s == s * r);
            CHECK(gamma_map(r * s) == gamma_map(r) + gamma_map(s));
        }
    }
}

TEST_CASE("unipotent X orders") {
    for (std::uint64_t q : {2, 3, 4, 5}) {
        const auto ctx = make_field_context_for_order(q);
        const std::uint64_t p = ctx->p();
        for (const auto& v : witt_elements(*ctx)) {
            const std::uint64_t expect = !v.a0().is_zero() ? p * p : (v.a1().is_zero() ? 1 : p);
            CHECK(element_order(gen_x(v)) == expect);
        }
    }
    const auto f3 = make_field_context(3, 1);
    CHECK(error_kind([&] { element_order(gen_x(w(*f3, 1, 0)), 5); }) == ErrorKind::BudgetExceeded);
}

TEST_CASE("invariant subgroups of the radical") {
    for (std::uint64_t q : {3, 5, 9}) {
        const auto rep = lemma_generate_check(*make_field_context_for_order(q));
        CHECK(rep.passed());
        CHECK(rep.orbit_span_dim == rep.full_dim);
    }
    const auto rep3 = lemma_generate_check(*make_field_context(3, 1));
    CHECK(rep3.orbit_span_dim == 3);
    CHECK(rep3.vectors_checked == 26);
}

TEST_CASE("at p = 2 some invariant subgroup of the radical misses Z(1)") {
    // Over F_2 the span of the orbit of v = [[0,1],[1,0]] under the twisted
    // adjoint action is a proper invariant subspace without gamma(Z(1)) = I.
    const auto f2 = make_field_context(2, 1);
    const Fq o = f2->one(), z = f2->zero();
    const Sl2Lie v{z, o, o};
    std::set<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> span{{0, 0, 0}};
    for (const auto& a : enumerate_sl2(*f2)) {
        const Sl2Lie img = twisted_adjoint(a, v);
        std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> add;
        for (const auto& [x, y, zz] : span)
            add.emplace_back((x + img.x.index()) % 2, (y + img.y.index()) % 2, (zz + img.z.index()) % 2);
        span.insert(add.begin(), add.end());
    }
    const Sl2Lie zdir = gamma_map(gen_z(o));
    CHECK(span.count({zdir.x.index(), zdir.y.index(), zdir.z.index()}) == 0);
    CHECK_FALSE(lemma_generate_check(*f2).part2);
}

TEST_CASE("the semidirect product sl_2(F_3) x SL_2(F_3)") {
    const auto f3 = make_field_context(3, 1);
    const auto els = enumerate_hat_group(*f3, 1'000'000);
    CHECK(els.size() == 648);
    const HatElement e = hat_identity(*f3);
    testing::Gen gen(31);
    for (int k = 0; k < 500; ++k) {
        const auto& x = els[gen.below(els.size())];
        const auto& y = els[gen.below(els.size())];
        const auto& u = els[gen.below(els.size())];
        CHECK(hat_group_mul(hat_group_mul(x, y), u) == hat_group_mul(x, hat_group_mul(y, u)));
        CHECK(hat_group_mul(e, x) == x);
        CHECK(hat_group_mul(x, e) == x);
    }
}

TEST_CASE("element expressions") {
    const auto f3 = make_field_context(3, 1);
    const Fq one = f3->one(), two = f3->from_int(2);
    CHECK(parse_element("Phi(2)*Z(1)", *f3) == gen_phi(two) * gen_z(one));
    CHECK(parse_element("X(1,0)", *f3) == gen_x(w(*f3, 1, 0)));
    CHECK(parse_element("Y(0,2)^2", *f3) == gen_y(w(*f3, 0, 1)));
    CHECK(parse_element("X(1,0)^-1", *f3) == gen_x(w(*f3, 1, 0)).inverse());
    CHECK(parse_element("I", *f3).is_identity());

    const auto f9 = make_field_context(3, 2);
    const Fq x = f9->element(std::vector<unsigned>{0, 1});
    CHECK(parse_element("X([0,1],1)", *f9) == gen_x(WittFq(x, f9->one())));
    CHECK(parse_element("Z([1,2])", *f9) == gen_z(f9->element(std::vector<unsigned>{1, 2})));

    try {
        parse_element("X(1)", *f3);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 3);
    }
    CHECK(error_kind([&] { parse_element("Phi(0)", *f3); }) == ErrorKind::ZeroTorusParameter);
    CHECK(error_kind([&] { parse_element("X(3,0)", *f3); }) == ErrorKind::ParseError);
    CHECK(error_kind([&] { parse_element("Q(1)", *f3); }) == ErrorKind::ParseError);
    CHECK(error_kind([&] { parse_element("X(1,0) junk", *f3); }) == ErrorKind::ParseError);
    CHECK(error_kind([&] { parse_element("Z([1,1,1])", *f9); }) == ErrorKind::ParseError);
}

TEST_CASE("parsed generators match the constructors for every argument") {
    const auto f5 = make_field_context(5, 1);
    for (const auto& v : witt_elements(*f5)) {
        const std::string args = std::to_string(v.a0().index()) + "," + std::to_string(v.a1().index());
        CHECK(parse_element("X(" + args + ")", *f5) == gen_x(v));
        CHECK(parse_element("Y(" + args + ")", *f5) == gen_y(v));
    }
}
