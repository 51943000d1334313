#pragma once

// Finite rings seen through their element indices, and a search for unital
// ring isomorphisms determined by the images of a few generators.

#include "wittrep/ring.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace wittrep {

struct FiniteRing {
    std::string name;
    std::uint64_t size = 0;
    std::uint64_t characteristic = 0;
    std::uint64_t zero = 0;
    std::uint64_t one = 0;
    std::function<std::uint64_t(std::uint64_t, std::uint64_t)> add;
    std::function<std::uint64_t(std::uint64_t, std::uint64_t)> mul;
    std::function<std::string(std::uint64_t)> describe;
    /// Integer coordinates of an element on (1, g_1, ..., g_k) when the ring
    /// is generated additively by 1 and the generators, e.g. x + y i -> {x, y}.
    std::function<std::vector<std::int64_t>(std::uint64_t)> coordinates;
    std::vector<std::string> generator_names;

    /// n * x by doubling.
    std::uint64_t scale(std::int64_t n, std::uint64_t x) const;
    std::uint64_t neg(std::uint64_t x) const;
};

FiniteRing zmod_ring(std::uint64_t n);
FiniteRing field_ring(FieldPtr ctx);
/// W_2(F_q), element (a0, a1) at index a0 * q + a1.
FiniteRing witt_ring(FieldPtr ctx);
FiniteRing gaussian_ring(GaussianPtr ctx);
FiniteRing product_ring(const FiniteRing& a, const FiniteRing& b);

struct IsoSearchResult {
    bool found = false;
    /// table[i] is the image of source element i.
    std::vector<std::uint64_t> table;
    /// Images of the source generators, in generator_names order.
    std::vector<std::uint64_t> generator_images;
    std::uint64_t candidates_tried = 0;
    std::string reason;
};

/// Searches for a unital isomorphism source -> target. The map is forced by
/// 1 -> 1 and the generator images; each generator ranges over the target
/// elements accepted by candidate_filter (all elements when empty). Every
/// candidate map is checked for additivity and multiplicativity on all
/// pairs and for bijectivity. TooLarge when either ring exceeds
/// element_bound.
IsoSearchResult unital_iso_check(const FiniteRing& source, const FiniteRing& target,
                                 const std::function<bool(std::uint64_t)>& candidate_filter = {},
                                 std::uint64_t element_bound = 10'000);

/// Filter accepting t with t^2 = -1 in the ring.
std::function<bool(std::uint64_t)> square_root_of_minus_one(const FiniteRing& ring);

}  // namespace wittrep
