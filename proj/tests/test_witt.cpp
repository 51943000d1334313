#include "doctest.h"
#include "support.hpp"
#include "wittrep/poly.hpp"
#include "wittrep/witt.hpp"

using namespace wittrep;
using testing::error_kind;

namespace {

WittFq w(const FieldContext& ctx, std::int64_t a0, std::int64_t a1) { return {ctx.from_int(a0), ctx.from_int(a1)}; }

}  // namespace

TEST_CASE("carry polynomial coefficients") {
    CHECK(f_poly(2).coeffs == std::vector<unsigned>{0, 1});
    CHECK(f_poly(3).coeffs == std::vector<unsigned>{0, 2, 2});
    CHECK(f_poly(5).coeffs == std::vector<unsigned>{0, 4, 3, 3, 4});
    // independent: -binom(p, i) / p mod p by Pascal's triangle
    for (unsigned p : {7U, 11U, 13U}) {
        std::vector<std::uint64_t> row{1};
        for (unsigned n = 1; n <= p; ++n) {
            std::vector<std::uint64_t> next(n + 1, 1);
            for (unsigned i = 1; i < n; ++i) next[i] = row[i - 1] + row[i];
            row = next;
        }
        const auto f = f_poly(p);
        for (unsigned i = 1; i < p; ++i) CHECK(f.coeffs[i] == (p - (row[i] / p) % p) % p);
    }
}

TEST_CASE("worked examples over F_3 and F_2") {
    const auto f3 = make_field_context(3, 1);
    CHECK(w(*f3, 1, 0) + w(*f3, 1, 0) == w(*f3, 2, 1));
    CHECK(w(*f3, 1, 0) + w(*f3, 2, 0) == w(*f3, 0, 0));
    CHECK(w(*f3, 1, 1) * w(*f3, 1, 1) == w(*f3, 1, 2));
    CHECK(w(*f3, 2, 0) * w(*f3, 1, 1) == w(*f3, 2, 2));
    CHECK(w(*f3, 2, 1).inverse() == w(*f3, 2, 2));
    CHECK(witt_additive_order(w(*f3, 0, 1)) == 3);
    CHECK(witt_additive_order(w(*f3, 1, 0)) == 9);
    CHECK(error_kind([&] { w(*f3, 0, 1).inverse(); }) == ErrorKind::NotUnit);

    const auto f2 = make_field_context(2, 1);
    CHECK(-w(*f2, 1, 0) == w(*f2, 1, 1));
    CHECK(w(*f2, 1, 0) + w(*f2, 1, 1) == w(*f2, 0, 0));
}

TEST_CASE("W_2(F_p) agrees with Z/p^2 through the digit map") {
    for (unsigned p : {2U, 3U, 5U, 7U}) {
        const auto ctx = make_field_context(p, 1);
        const oracle::Digits dg{p};
        const std::int64_t m = static_cast<std::int64_t>(p) * p;
        const auto to_int = [&](const WittFq& x) { return dg.to_int(x.a0().index(), x.a1().index()); };
        const auto els = witt_elements(*ctx);
        for (const auto& x : els)
            for (const auto& y : els) {
                CHECK(to_int(x + y) == oracle::mod(to_int(x) + to_int(y), m));
                CHECK(to_int(x * y) == oracle::mod(to_int(x) * to_int(y), m));
                CHECK(to_int(x - y) == oracle::mod(to_int(x) - to_int(y), m));
            }
    }
}

TEST_CASE("digit-map report") {
    const auto rep = witt2_zmod_iso_check(3);
    CHECK(rep.passed);
    CHECK(rep.checks == 162);
    CHECK(rep.image[0 * 3 + 1] == 3);
    CHECK(rep.image[2 * 3 + 1] == 2);
    for (unsigned p : {5U, 7U, 11U, 13U}) CHECK(witt2_zmod_iso_check(p).passed);
    CHECK(error_kind([] { witt2_zmod_iso_check(17); }) == ErrorKind::TooLarge);
    CHECK(error_kind([] { witt2_zmod_iso_check(9); }) == ErrorKind::NotPrime);
}

TEST_CASE("ring axioms of W_2(F_q) hold exhaustively for q <= 9") {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        const auto ctx = make_field_context_for_order(q);
        const auto els = witt_elements(*ctx);
        const WittFq zero = els.front().zero_like();
        for (const auto& a : els) {
            CHECK(a + (-a) == zero);
            for (const auto& b : els) {
                CHECK(a + b == b + a);
                CHECK(a * b == b * a);
            }
        }
        for (const auto& a : els)
            for (const auto& b : els) {
                const WittFq ab = a + b, amb = a * b;
                for (const auto& c : els) {
                    if (!(ab + c == a + (b + c)) || !(amb * c == a * (b * c)) || !(a * (b + c) == amb + a * c)) {
                        FAIL("ring axiom fails at q = " << q);
                    }
                }
            }
    }
}

TEST_CASE("torus scaling and Teichmuller multiplicativity") {
    for (std::uint64_t q : {3, 4, 9}) {
        const auto ctx = make_field_context_for_order(q);
        const unsigned p = ctx->p();
        const auto els = ctx->elements();
        for (const auto& t : els) {
            for (const auto& s : els) CHECK(WittFq::teichmuller(s) * WittFq::teichmuller(t) == WittFq::teichmuller(s * t));
            for (const auto& x : witt_elements(*ctx))
                CHECK(WittFq::teichmuller(t) * x == WittFq(t * x.a0(), t.pow(p) * x.a1()));
        }
    }
}

TEST_CASE("units are exactly the vectors with a0 != 0") {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        const auto ctx = make_field_context_for_order(q);
        const auto els = witt_elements(*ctx);
        const WittFq one = els.front().one_like();
        std::uint64_t units = 0;
        for (const auto& x : els) {
            bool has_inverse = false;
            for (const auto& y : els) has_inverse = has_inverse || x * y == one;
            CHECK(has_inverse == x.is_unit());
            if (has_inverse) {
                ++units;
                CHECK(x * x.inverse() == one);
            }
        }
        CHECK(units == q * (q - 1));
    }
}

TEST_CASE("Witt operations on polynomial components specialize pointwise") {
    testing::Gen gen(11);
    for (std::uint64_t q : {3, 4, 5, 9}) {
        const auto ctx = make_field_context_for_order(q);
        const Vars vars = make_vars({"u0", "u1", "v0", "v1"});
        using P = MultiPoly<Fq>;
        const auto var = [&](std::size_t i) { return P::variable(vars, ctx->one(), i); };
        const Witt2<P> u(var(0), var(1)), v(var(2), var(3));
        const Witt2<P> sum = u + v, prod = u * v, neg = -u;
        for (int k = 0; k < 100; ++k) {
            const WittFq x = gen.witt(*ctx), y = gen.witt(*ctx);
            const std::vector<Fq> pt{x.a0(), x.a1(), y.a0(), y.a1()};
            const auto at = [&](const Witt2<P>& z) { return WittFq(z.a0().evaluate(pt), z.a1().evaluate(pt)); };
            CHECK(at(sum) == x + y);
            CHECK(at(prod) == x * y);
            CHECK(at(neg) == -x);
        }
    }
}
