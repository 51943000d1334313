#pragma once

// Shared helpers for the unit tests: error-kind capture and a seeded
// generator of random field, Witt and group values.

#include "oracle.hpp"
#include "wittrep/group.hpp"
#include "wittrep/matrix.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace testing {

template <class Fn>
std::optional<wittrep::ErrorKind> error_kind(Fn&& fn) {
    try {
        fn();
    } catch (const wittrep::Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_); }
    wittrep::Fq field(const wittrep::FieldContext& ctx) { return ctx.from_index(static_cast<std::uint32_t>(below(ctx.q()))); }
    wittrep::Fq unit(const wittrep::FieldContext& ctx) {
        return ctx.from_index(static_cast<std::uint32_t>(1 + below(ctx.q() - 1)));
    }
    wittrep::WittFq witt(const wittrep::FieldContext& ctx) { return {field(ctx), field(ctx)}; }
    wittrep::GroupFq group(const wittrep::FieldContext& ctx) { return wittrep::random_element(ctx, rng_); }
    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// A group element over a prime field as a matrix over Z/p^2.
inline oracle::Mat to_zp2(const wittrep::GroupFq& g) {
    const oracle::Digits dg{static_cast<std::int64_t>(g.a().a0().characteristic())};
    const auto v = [&](const wittrep::WittFq& w) { return dg.to_int(w.a0().index(), w.a1().index()); };
    return {v(g.a()), v(g.b()), v(g.c()), v(g.d())};
}

/// Library matrix entries over a prime field as integers.
inline std::vector<std::vector<std::int64_t>> to_ints(const wittrep::Matrix<wittrep::Fq>& m) {
    std::vector<std::vector<std::int64_t>> out(m.rows(), std::vector<std::int64_t>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).index();
    return out;
}

}  // namespace testing
