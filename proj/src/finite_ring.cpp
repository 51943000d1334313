#include "wittrep/finite_ring.hpp"

#include "wittrep/poly.hpp"
#include "wittrep/witt.hpp"

#include <numeric>

namespace wittrep {

std::uint64_t FiniteRing::scale(std::int64_t n, std::uint64_t x) const {
    const bool negative = n < 0;
    std::uint64_t k = negative ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
    std::uint64_t acc = zero;
    std::uint64_t base = x;
    for (; k != 0; k >>= 1U) {
        if (k & 1U) acc = add(acc, base);
        base = add(base, base);
    }
    return negative ? neg(acc) : acc;
}

std::uint64_t FiniteRing::neg(std::uint64_t x) const {
    // -x = (characteristic - 1) x
    return scale(static_cast<std::int64_t>(characteristic - 1), x);
}

FiniteRing zmod_ring(std::uint64_t n) {
    FiniteRing r;
    r.name = "Z/" + std::to_string(n);
    r.size = n;
    r.characteristic = n;
    r.zero = 0;
    r.one = 1 % n;
    r.add = [n](std::uint64_t a, std::uint64_t b) { return (a + b) % n; };
    r.mul = [n](std::uint64_t a, std::uint64_t b) { return a * b % n; };
    r.describe = [](std::uint64_t a) { return std::to_string(a); };
    r.coordinates = [](std::uint64_t a) { return std::vector<std::int64_t>{static_cast<std::int64_t>(a)}; };
    return r;
}

FiniteRing field_ring(FieldPtr ctx) {
    FiniteRing r;
    r.name = "GF(" + std::to_string(ctx->q()) + ")";
    r.size = ctx->q();
    r.characteristic = ctx->p();
    r.zero = 0;
    r.one = 1;
    r.add = [ctx](std::uint64_t a, std::uint64_t b) {
        return ctx->add(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
    };
    r.mul = [ctx](std::uint64_t a, std::uint64_t b) {
        return ctx->mul(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
    };
    r.describe = [ctx](std::uint64_t a) { return coefficient_text(ctx->from_index(static_cast<std::uint32_t>(a))); };
    return r;
}

FiniteRing witt_ring(FieldPtr ctx) {
    const std::uint64_t q = ctx->q();
    const auto decode = [ctx, q](std::uint64_t i) {
        return WittFq(ctx->from_index(static_cast<std::uint32_t>(i / q)), ctx->from_index(static_cast<std::uint32_t>(i % q)));
    };
    const auto encode = [q](const WittFq& w) { return static_cast<std::uint64_t>(w.a0().index()) * q + w.a1().index(); };
    FiniteRing r;
    r.name = "W2(GF(" + std::to_string(q) + "))";
    r.size = q * q;
    r.characteristic = static_cast<std::uint64_t>(ctx->p()) * ctx->p();
    r.zero = 0;
    r.one = q;
    r.add = [=](std::uint64_t a, std::uint64_t b) { return encode(decode(a) + decode(b)); };
    r.mul = [=](std::uint64_t a, std::uint64_t b) { return encode(decode(a) * decode(b)); };
    r.describe = [=](std::uint64_t a) {
        const WittFq w = decode(a);
        return "(" + coefficient_text(w.a0()) + "," + coefficient_text(w.a1()) + ")";
    };
    return r;
}

FiniteRing gaussian_ring(GaussianPtr ctx) {
    FiniteRing r;
    r.name = "Z[i]/" + ctx->label();
    r.size = ctx->size();
    r.characteristic = ctx->characteristic();
    r.zero = ctx->index_of(ctx->make(0, 0));
    r.one = ctx->index_of(ctx->make(1, 0));
    r.add = [ctx](std::uint64_t a, std::uint64_t b) { return ctx->index_of(ctx->from_index(a) + ctx->from_index(b)); };
    r.mul = [ctx](std::uint64_t a, std::uint64_t b) { return ctx->index_of(ctx->from_index(a) * ctx->from_index(b)); };
    r.describe = [ctx](std::uint64_t a) {
        const GaussianResidue g = ctx->from_index(a);
        return std::to_string(g.x()) + "+" + std::to_string(g.y()) + "i";
    };
    r.coordinates = [ctx](std::uint64_t a) {
        const GaussianResidue g = ctx->from_index(a);
        return std::vector<std::int64_t>{g.x(), g.y()};
    };
    r.generator_names = {"i"};
    return r;
}

FiniteRing product_ring(const FiniteRing& a, const FiniteRing& b) {
    FiniteRing r;
    const std::uint64_t nb = b.size;
    r.name = a.name + " x " + b.name;
    r.size = a.size * b.size;
    r.characteristic = std::lcm(a.characteristic, b.characteristic);
    r.zero = a.zero * nb + b.zero;
    r.one = a.one * nb + b.one;
    r.add = [a, b, nb](std::uint64_t x, std::uint64_t y) { return a.add(x / nb, y / nb) * nb + b.add(x % nb, y % nb); };
    r.mul = [a, b, nb](std::uint64_t x, std::uint64_t y) { return a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb); };
    r.describe = [a, b, nb](std::uint64_t x) { return "(" + a.describe(x / nb) + ", " + b.describe(x % nb) + ")"; };
    return r;
}

std::function<bool(std::uint64_t)> square_root_of_minus_one(const FiniteRing& ring) {
    const std::uint64_t minus_one = ring.neg(ring.one);
    return [&ring, minus_one](std::uint64_t t) { return ring.mul(t, t) == minus_one; };
}

IsoSearchResult unital_iso_check(const FiniteRing& source, const FiniteRing& target,
                                 const std::function<bool(std::uint64_t)>& candidate_filter,
                                 std::uint64_t element_bound) {
    if (source.size > element_bound || target.size > element_bound)
        throw Error(ErrorKind::TooLarge, "rings with " + std::to_string(source.size) + " and " +
                                             std::to_string(target.size) + " elements exceed the bound " +
                                             std::to_string(element_bound));
    if (!source.coordinates) throw Error(ErrorKind::InvalidArgument, source.name + " has no generator coordinates");
    IsoSearchResult res;
    if (source.size != target.size) {
        res.reason = "sizes differ: " + std::to_string(source.size) + " vs " + std::to_string(target.size);
        return res;
    }
    if (source.characteristic != target.characteristic) {
        res.reason = "characteristics differ: " + std::to_string(source.characteristic) + " vs " +
                     std::to_string(target.characteristic);
        return res;
    }

    std::vector<std::uint64_t> candidates;
    for (std::uint64_t t = 0; t < target.size; ++t)
        if (!candidate_filter || candidate_filter(t)) candidates.push_back(t);

    const std::size_t k = source.generator_names.size();
    std::vector<std::vector<std::int64_t>> coords(source.size);
    for (std::uint64_t x = 0; x < source.size; ++x) coords[x] = source.coordinates(x);

    // Odometer over candidate tuples for the k generators.
    std::vector<std::size_t> choice(k, 0);
    if (k > 0 && candidates.empty()) {
        res.reason = "no candidate images for the generators";
        return res;
    }
    for (;;) {
        ++res.candidates_tried;
        std::vector<std::uint64_t> basis{target.one};
        for (std::size_t g = 0; g < k; ++g) basis.push_back(candidates[choice[g]]);

        std::vector<std::uint64_t> table(source.size);
        std::vector<bool> hit(target.size, false);
        bool ok = true;
        for (std::uint64_t x = 0; x < source.size && ok; ++x) {
            std::uint64_t img = target.zero;
            for (std::size_t c = 0; c < coords[x].size(); ++c) img = target.add(img, target.scale(coords[x][c], basis[c]));
            table[x] = img;
            if (hit[img]) ok = false;
            hit[img] = true;
        }
        for (std::uint64_t x = 0; x < source.size && ok; ++x) {
            for (std::uint64_t y = 0; y < source.size && ok; ++y) {
                ok = table[source.add(x, y)] == target.add(table[x], table[y]) &&
                     table[source.mul(x, y)] == target.mul(table[x], table[y]);
            }
        }
        if (ok) {
            res.found = true;
            res.table = std::move(table);
            res.generator_images.assign(basis.begin() + 1, basis.end());
            return res;
        }
        std::size_t pos = 0;
        while (pos < k && ++choice[pos] == candidates.size()) choice[pos++] = 0;
        if (pos == k) break;
    }
    res.reason = "no candidate generator images give an isomorphism (" + std::to_string(res.candidates_tried) + " tried)";
    return res;
}

}  // namespace wittrep
