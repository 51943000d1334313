#include "doctest.h"
#include "support.hpp"
#include "wittrep/finite_ring.hpp"
#include "wittrep/ring.hpp"

#include <set>

using namespace wittrep;
using testing::error_kind;

namespace {

const std::vector<std::uint64_t> kSmallOrders{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49};

/// Smallest monic polynomial of degree r <= 3 without roots mod p, in the
/// documented order (non-leading coefficients read as a base-p number,
/// highest coefficient most significant).
std::vector<unsigned> smallest_rootless(unsigned p, unsigned r) {
    for (unsigned code = 0;; ++code) {
        std::vector<unsigned> c(r + 1, 0);
        c[r] = 1;
        unsigned rest = code;
        for (unsigned i = 0; i < r; ++i, rest /= p) c[i] = rest % p;
        bool root = false;
        for (unsigned x = 0; x < p && !root; ++x) {
            std::int64_t v = 0;
            for (unsigned i = r + 1; i-- > 0;) v = (v * x + c[i]) % p;
            root = v == 0;
        }
        if (!root) return c;
    }
}

}  // namespace

TEST_CASE("field arithmetic agrees with schoolbook polynomials modulo the stored modulus") {
    for (auto q : kSmallOrders) {
        const auto ctx = make_field_context_for_order(q);
        const oracle::Poly ref{ctx->p(), ctx->modulus()};
        const auto els = ctx->elements();
        REQUIRE(els.size() == q);
        for (const auto& a : els)
            for (const auto& b : els) {
                CHECK((a * b).coeffs() == ref.mul(a.coeffs(), b.coeffs()));
                CHECK((a + b).coeffs() == ref.add(a.coeffs(), b.coeffs()));
            }
    }
}

TEST_CASE("field axioms hold exhaustively for q <= 49") {
    for (auto q : kSmallOrders) {
        const auto ctx = make_field_context_for_order(q);
        const auto els = ctx->elements();
        const Fq one = ctx->one();
        for (const auto& x : els) {
            CHECK(x + (-x) == ctx->zero());
            if (!x.is_zero()) CHECK(x * x.inverse() == one);
        }
        if (q > 16) continue;  // triples below cost q^3
        for (const auto& a : els)
            for (const auto& b : els)
                for (const auto& c : els) {
                    CHECK((a * b) * c == a * (b * c));
                    CHECK((a + b) + c == a + (b + c));
                    CHECK(a * (b + c) == a * b + a * c);
                }
    }
}

TEST_CASE("field axioms on seeded random triples for the larger fields") {
    testing::Gen gen(7);
    for (std::uint64_t q : {25, 27, 32, 49, 121, 243}) {
        const auto ctx = make_field_context_for_order(q);
        for (int k = 0; k < 2000; ++k) {
            const Fq a = gen.field(*ctx), b = gen.field(*ctx), c = gen.field(*ctx);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
        }
    }
}

TEST_CASE("default moduli are the smallest irreducible ones") {
    for (unsigned p : {2U, 3U, 5U, 7U})
        for (unsigned r : {2U, 3U}) CHECK(make_field_context(p, r)->modulus() == smallest_rootless(p, r));
    CHECK(make_field_context(3, 2)->modulus() == std::vector<unsigned>{1, 0, 1});
    CHECK(make_field_context(2, 2)->modulus() == std::vector<unsigned>{1, 1, 1});
}

TEST_CASE("field contexts reject bad input") {
    CHECK(error_kind([] { make_field_context(4, 1); }) == ErrorKind::NotPrime);
    CHECK(error_kind([] { make_field_context_for_order(12); }) == ErrorKind::NotPrime);
    CHECK(error_kind([] { make_field_context(3, 2, std::vector<unsigned>{1, 2, 1}); }) == ErrorKind::Reducible);
    CHECK_FALSE(error_kind([] { make_field_context(3, 2, std::vector<unsigned>{1, 0, 1}); }));
    CHECK(make_field_context(3, 1)->q() == 3);
}

TEST_CASE("frobenius") {
    const auto f9 = make_field_context(3, 2, std::vector<unsigned>{1, 0, 1});
    const Fq x = f9->element(std::vector<unsigned>{0, 1});
    CHECK(frobenius(x) == -x);

    for (auto q : kSmallOrders) {
        const auto ctx = make_field_context_for_order(q);
        std::set<std::uint32_t> fixed;
        for (const auto& a : ctx->elements()) {
            if (frobenius(a) == a) fixed.insert(a.index());
            for (const auto& b : ctx->elements()) {
                CHECK(frobenius(a + b) == frobenius(a) + frobenius(b));
                CHECK(frobenius(a * b) == frobenius(a) * frobenius(b));
            }
        }
        // exactly the prime subfield, whose indices are 0..p-1
        CHECK(fixed.size() == ctx->p());
        CHECK(*fixed.rbegin() == ctx->p() - 1);
    }
    for (const auto& a : f9->elements()) CHECK(frobenius(frobenius(a)) == a);
}

TEST_CASE("primitive elements") {
    CHECK(primitive_element(*make_field_context(3, 1)).index() == 2);
    CHECK(primitive_element(*make_field_context(5, 1)).index() == 2);
    const auto f9 = make_field_context(3, 2, std::vector<unsigned>{2, 1, 1});
    const Fq x = f9->element(std::vector<unsigned>{0, 1});
    CHECK(primitive_element(*f9) == x);
    // listing the powers of x reaches every unit once
    std::set<std::uint32_t> seen;
    Fq y = f9->one();
    for (int k = 0; k < 8; ++k, y = y * x) seen.insert(y.index());
    CHECK(seen.size() == 8);
    for (auto q : kSmallOrders) {
        const auto ctx = make_field_context_for_order(q);
        CHECK(multiplicative_order(primitive_element(*ctx)) == q - 1);
    }
}

TEST_CASE("Teichmuller lifts") {
    CHECK(teichmuller_lift(3, 0).value() == 0);
    CHECK(teichmuller_lift(3, 1).value() == 1);
    CHECK(teichmuller_lift(3, 2).value() == 8);
    for (unsigned p : {2U, 3U, 5U, 7U}) {
        for (unsigned a = 0; a < p; ++a) {
            CHECK(static_cast<std::int64_t>(teichmuller_lift(p, a).value()) == oracle::teichmuller(p, a));
            for (unsigned b = 0; b < p; ++b)
                CHECK(teichmuller_lift(p, a) * teichmuller_lift(p, b) == teichmuller_lift(p, a * b % p));
        }
    }
    CHECK(error_kind([] { teichmuller_lift(3, 3); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("dual numbers square eps to zero") {
    const auto ctx = make_field_context(5, 1);
    using D = DualNumber<Fq>;
    const D eps = D::epsilon(ctx->one());
    CHECK((eps * eps).is_zero());
    const D u(ctx->from_int(2), ctx->from_int(3));
    CHECK(u * u.inverse() == u.one_like());
    CHECK(error_kind([&] { eps.inverse(); }) == ErrorKind::NotUnit);
}

TEST_CASE("Gaussian quotients have norm many elements") {
    CHECK(gaussian_quotient(5, 1).ring->size() == 5);
    CHECK(gaussian_quotient(5, 2).ring->size() == 25);
    CHECK(gaussian_quotient(3, 1).ring->size() == 9);
    CHECK(gaussian_quotient(3, 2).ring->size() == 81);
    CHECK(gaussian_quotient(13, 2).ring->size() == 169);
    CHECK(error_kind([] { gaussian_quotient(2, 1); }) == ErrorKind::BadPrime);
    CHECK(error_kind([] { gaussian_quotient(5, 3); }) == ErrorKind::InvalidArgument);

    const auto q5 = gaussian_quotient(5, 1);
    CHECK(q5.split);
    CHECK(q5.pi_re * q5.pi_re + q5.pi_im * q5.pi_im == 5);
}

TEST_CASE("Gaussian residues: classes counted by ideal membership match the canonical form") {
    // x + y i lies in (a + b i) iff (x + y i)(a - b i) is divisible by a^2 + b^2.
    struct Case {
        unsigned p, k;
        std::int64_t a, b;
    };
    for (auto [p, k, a, b] : {Case{5, 1, 0, 0}, Case{5, 2, 0, 0}, Case{3, 2, 9, 0}, Case{13, 1, 0, 0}}) {
        const auto gq = gaussian_quotient(p, k);
        if (gq.split) {
            // generator pi^k
            a = gq.pi_re;
            b = gq.pi_im;
            if (k == 2) {
                const std::int64_t re = a * a - b * b, im = 2 * a * b;
                a = re;
                b = im;
            }
        }
        const std::int64_t norm = a * a + b * b;
        const auto in_ideal = [&](std::int64_t x, std::int64_t y) {
            return (x * a + y * b) % norm == 0 && (y * a - x * b) % norm == 0;
        };
        const auto& ring = *gq.ring;
        CHECK(ring.size() == static_cast<std::uint64_t>(norm));
        // every lattice point in a box is equivalent to its canonical form,
        // and canonical forms are idempotent
        std::set<std::pair<std::int64_t, std::int64_t>> classes;
        const std::int64_t box = static_cast<std::int64_t>(p) * p + 3;
        for (std::int64_t x = -3; x < box; ++x)
            for (std::int64_t y = -3; y < box; ++y) {
                const auto g = ring.make(x, y);
                CHECK(in_ideal(x - g.x(), y - g.y()));
                const auto again = ring.make(g.x(), g.y());
                CHECK(again == g);
                classes.insert({g.x(), g.y()});
            }
        CHECK(classes.size() == ring.size());
        // distinct canonical forms are inequivalent
        std::vector<std::pair<std::int64_t, std::int64_t>> reps(classes.begin(), classes.end());
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = i + 1; j < reps.size(); ++j)
                CHECK_FALSE(in_ideal(reps[i].first - reps[j].first, reps[i].second - reps[j].second));
    }
}

TEST_CASE("unital isomorphism search") {
    const auto f3 = make_field_context(3, 1);
    const auto z9_w = unital_iso_check(zmod_ring(9), witt_ring(f3));
    REQUIRE(z9_w.found);
    // the forced map is n -> n * (1,0); check it against the digit map
    const auto w = witt_ring(f3);
    for (std::uint64_t n = 0; n < 9; ++n) {
        const auto [a0, a1] = oracle::Digits{3}.from_int(static_cast<std::int64_t>(n));
        CHECK(z9_w.table[n] == static_cast<std::uint64_t>(a0 * 3 + a1));
    }

    const auto z9_f9 = unital_iso_check(zmod_ring(9), field_ring(make_field_context(3, 2)));
    CHECK_FALSE(z9_f9.found);
    CHECK(z9_f9.reason.find("characteristic") != std::string::npos);

    const auto z4_z2z2 = unital_iso_check(zmod_ring(4), product_ring(zmod_ring(2), zmod_ring(2)));
    CHECK_FALSE(z4_z2z2.found);

    CHECK(error_kind([] { unital_iso_check(zmod_ring(20000), zmod_ring(20000)); }) == ErrorKind::TooLarge);

    // Z[i]/(9) and W_2(F_9): i must go to a square root of -1
    const auto g9 = gaussian_quotient(3, 2);
    const auto target = witt_ring(make_field_context(3, 2));
    const auto iso = unital_iso_check(gaussian_ring(g9.ring), target, square_root_of_minus_one(target));
    REQUIRE(iso.found);
    REQUIRE(iso.generator_images.size() == 1);
    const auto img = iso.generator_images[0];
    CHECK(target.mul(img, img) == target.neg(target.one));
}
