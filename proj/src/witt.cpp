#include "wittrep/witt.hpp"

#include <array>
#include <sstream>

namespace wittrep {

WittFPoly f_poly(unsigned p) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (p >= 64) throw Error(ErrorKind::TooLarge, "carry polynomial supported for p < 64");
    WittFPoly out;
    out.p = p;
    out.coeffs.assign(p, 0);
    unsigned __int128 binom = 1;  // binom(p, i)
    for (unsigned i = 1; i < p; ++i) {
        binom = binom * (p - i + 1) / i;
        if (binom % p != 0) throw Error(ErrorKind::InvalidArgument, "binom(p, i) not divisible by p");
        const auto quotient = static_cast<std::uint64_t>(binom / p);
        out.coeffs[i] = static_cast<unsigned>((p - quotient % p) % p);
    }
    return out;
}

const WittFPoly& cached_f_poly(unsigned p) {
    static const std::array<WittFPoly, 64> table = [] {
        std::array<WittFPoly, 64> t{};
        for (unsigned n = 2; n < 64; ++n)
            if (is_prime(n)) t[n] = f_poly(n);
        return t;
    }();
    if (p >= table.size() || table[p].p == 0)
        throw Error(ErrorKind::InvalidArgument, "no carry polynomial for characteristic " + std::to_string(p));
    return table[p];
}

std::vector<WittFq> witt_elements(const FieldContext& ctx) {
    std::vector<WittFq> out;
    out.reserve(static_cast<std::size_t>(ctx.q()) * ctx.q());
    for (std::uint32_t a0 = 0; a0 < ctx.q(); ++a0)
        for (std::uint32_t a1 = 0; a1 < ctx.q(); ++a1) out.emplace_back(ctx.from_index(a0), ctx.from_index(a1));
    return out;
}

std::uint32_t witt_index(const WittFq& w) { return w.a0().index() * w.a0().context().q() + w.a1().index(); }

WittZmodIsoReport witt2_zmod_iso_check(unsigned p) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (p > 13) throw Error(ErrorKind::TooLarge, "exhaustive W2(F_p) check limited to p <= 13");
    const FieldPtr field = make_field_context(p, 1);
    const auto elements = witt_elements(*field);

    WittZmodIsoReport rep;
    rep.p = p;
    const std::uint64_t n = static_cast<std::uint64_t>(p) * p;
    rep.image.resize(n);
    std::vector<bool> hit(n, false);
    for (const auto& w : elements) {
        const ZmodM img = teichmuller_lift(p, w.a0().index()) +
                          ZmodM(p, 2, p) * teichmuller_lift(p, w.a1().index());
        rep.image[witt_index(w)] = img.value();
        if (hit[img.value()]) {
            rep.failure = "digit map not injective at value " + std::to_string(img.value());
            return rep;
        }
        hit[img.value()] = true;
    }

    const auto fail = [&](const char* op, const WittFq& a, const WittFq& b) {
        std::ostringstream os;
        os << op << " mismatch at (" << a.a0().index() << "," << a.a1().index() << ") , (" << b.a0().index()
           << "," << b.a1().index() << ")";
        rep.failure = os.str();
    };
    for (const auto& a : elements) {
        const std::uint64_t ia = rep.image[witt_index(a)];
        for (const auto& b : elements) {
            const std::uint64_t ib = rep.image[witt_index(b)];
            ++rep.checks;
            if (rep.image[witt_index(a + b)] != (ia + ib) % n) {
                fail("addition", a, b);
                return rep;
            }
            ++rep.checks;
            if (rep.image[witt_index(a * b)] != ia * ib % n) {
                fail("multiplication", a, b);
                return rep;
            }
        }
    }
    rep.passed = true;
    return rep;
}

}  // namespace wittrep
