#pragma once

// Reference computations that share no code with the library: integer
// arithmetic in Z/p^2 and GF(p^r) by schoolbook polynomials, and rho_p over
// a prime field by evaluating the basis functions at every point and
// solving for the coefficients.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

inline std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

inline std::int64_t pow_mod(std::int64_t b, std::uint64_t e, std::int64_t m) {
    std::int64_t r = 1 % m;
    b = mod(b, m);
    for (; e != 0; e >>= 1U) {
        if (e & 1U) r = r * b % m;
        b = b * b % m;
    }
    return r;
}

inline std::int64_t inv_mod_p(std::int64_t a, std::int64_t p) { return pow_mod(a, static_cast<std::uint64_t>(p - 2), p); }

/// The x = a mod p with x^p = x mod p^2, found by trying a + k p.
inline std::int64_t teichmuller(std::int64_t p, std::int64_t a) {
    const std::int64_t m = p * p;
    for (std::int64_t k = 0; k < p; ++k) {
        const std::int64_t x = mod(a, p) + k * p;
        if (pow_mod(x, static_cast<std::uint64_t>(p), m) == x) return x;
    }
    throw std::logic_error("no Teichmuller lift");
}

/// Witt coordinates (a0, a1) <-> omega(a0) + p omega(a1) in Z/p^2.
struct Digits {
    std::int64_t p;
    std::int64_t to_int(std::int64_t a0, std::int64_t a1) const {
        return mod(teichmuller(p, a0) + p * teichmuller(p, a1), p * p);
    }
    std::pair<std::int64_t, std::int64_t> from_int(std::int64_t x) const {
        x = mod(x, p * p);
        const std::int64_t a0 = x % p;
        const std::int64_t rest = mod(x - teichmuller(p, a0), p * p) / p;
        return {a0, rest};
    }
};

// ---------------------------------------------------------------------------
// GF(p^r) on coefficient vectors, lowest degree first

struct Poly {
    unsigned p;
    std::vector<unsigned> modulus;  // monic, length r + 1

    std::vector<unsigned> mul(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
        const std::size_t r = modulus.size() - 1;
        std::vector<unsigned> prod(2 * r, 0);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
        for (std::size_t d = prod.size(); d-- > r;) {
            const unsigned c = prod[d];
            if (c == 0) continue;
            for (std::size_t k = 0; k <= r; ++k) prod[d - r + k] = (prod[d - r + k] + p * p - c * modulus[k] % p) % p;
        }
        prod.resize(r);
        return prod;
    }

    std::vector<unsigned> add(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
        std::vector<unsigned> out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + b[i]) % p;
        return out;
    }
};

// ---------------------------------------------------------------------------
// SL_2(Z/p^2) and rho_p at q = p

/// Row-major [a, b, c, d] over Z/p^2.
using Mat = std::array<std::int64_t, 4>;

inline std::uint64_t sl2_zp2_count(std::int64_t p) {
    const std::int64_t m = p * p;
    std::uint64_t n = 0;
    for (std::int64_t a = 0; a < m; ++a)
        for (std::int64_t b = 0; b < m; ++b)
            for (std::int64_t c = 0; c < m; ++c)
                for (std::int64_t d = 0; d < m; ++d)
                    if (mod(a * d - b * c, m) == 1) ++n;
    return n;
}

/// Basis functions A0^(p-i) B0^i (0 <= i <= p), A1, B1 of a point (A, B).
inline std::vector<std::int64_t> basis_values(std::int64_t p, const Digits& dg, std::int64_t A, std::int64_t B) {
    const auto [a0, a1] = dg.from_int(A);
    const auto [b0, b1] = dg.from_int(B);
    std::vector<std::int64_t> v;
    for (std::int64_t i = 0; i <= p; ++i)
        v.push_back(pow_mod(a0, static_cast<std::uint64_t>(p - i), p) * pow_mod(b0, static_cast<std::uint64_t>(i), p) % p);
    v.push_back(a1);
    v.push_back(b1);
    return v;
}

/// The matrix of f -> f(g^-1 w), columns = images of the basis functions,
/// entries mod p. The basis functions are linearly independent as functions
/// on (Z/p^2)^2, so the coefficients are determined by the values.
inline std::vector<std::vector<std::int64_t>> rho(std::int64_t p, const Mat& g) {
    const std::int64_t m = p * p;
    const Digits dg{p};
    const Mat h{g[3], mod(-g[1], m), mod(-g[2], m), g[0]};
    const std::size_t n = static_cast<std::size_t>(p) + 3;

    // Augmented rows [f_0(w) ... f_{n-1}(w) | f_0(hw) ... f_{n-1}(hw)].
    std::vector<std::vector<std::int64_t>> rows;
    for (std::int64_t A = 0; A < m; ++A)
        for (std::int64_t B = 0; B < m; ++B) {
            auto row = basis_values(p, dg, A, B);
            const auto img = basis_values(p, dg, mod(h[0] * A + h[1] * B, m), mod(h[2] * A + h[3] * B, m));
            row.insert(row.end(), img.begin(), img.end());
            rows.push_back(std::move(row));
        }

    std::size_t r = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) throw std::logic_error("basis functions are dependent");
        std::swap(rows[r], rows[piv]);
        const std::int64_t inv = inv_mod_p(rows[r][col], p);
        for (auto& x : rows[r]) x = x * inv % p;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            const std::int64_t f = rows[i][col];
            for (std::size_t k = 0; k < 2 * n; ++k) rows[i][k] = mod(rows[i][k] - f * rows[r][k], p);
        }
        ++r;
    }
    for (std::size_t i = n; i < rows.size(); ++i)
        for (std::size_t k = n; k < 2 * n; ++k)
            if (rows[i][k] != 0) throw std::logic_error("image not in the span of the basis");

    std::vector<std::vector<std::int64_t>> out(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = rows[i][n + j];
    return out;
}

}  // namespace oracle
