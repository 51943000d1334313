#include "wittrep/ring.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <tuple>
#include <utility>
#include <numeric>
#include <sstream>

namespace wittrep {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::Reducible: return "Reducible";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::NotUnit: return "NotUnit";
        case ErrorKind::BadPrime: return "BadPrime";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::UnboundVariable: return "UnboundVariable";
        case ErrorKind::NotInSpan: return "NotInSpan";
        case ErrorKind::ZeroTorusParameter: return "ZeroTorusParameter";
        case ErrorKind::NotInGroup: return "NotInGroup";
        case ErrorKind::NotInRadical: return "NotInRadical";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::NotFirstOrder: return "NotFirstOrder";
        case ErrorKind::WindowTooSmall: return "WindowTooSmall";
        case ErrorKind::NoWitness: return "NoWitness";
        case ErrorKind::NonTerminating: return "NonTerminating";
        case ErrorKind::CollisionFound: return "CollisionFound";
        case ErrorKind::NotUnipotent: return "NotUnipotent";
    }
    return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// ---------------------------------------------------------------------------
// Polynomials over Z/p as coefficient vectors, lowest degree first.

namespace {

using Coeffs = std::vector<unsigned>;

void trim(Coeffs& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

unsigned inv_mod_p(unsigned a, unsigned p) {
    unsigned r = 1;
    for (unsigned e = p - 2, b = a % p; e != 0; e >>= 1U, b = b * b % p)
        if (e & 1U) r = r * b % p;
    return r;
}

// Remainder of f modulo a nonzero g.
Coeffs poly_mod(Coeffs f, const Coeffs& g, unsigned p) {
    trim(f);
    const std::size_t dg = g.size() - 1;
    const unsigned lead_inv = inv_mod_p(g.back(), p);
    while (f.size() >= g.size()) {
        const unsigned c = f.back() * lead_inv % p;
        const std::size_t shift = f.size() - 1 - dg;
        for (std::size_t i = 0; i <= dg; ++i) f[shift + i] = (f[shift + i] + p - c * g[i] % p) % p;
        trim(f);
    }
    return f;
}

Coeffs decode(std::uint64_t index, unsigned p, unsigned len) {
    Coeffs c(len);
    for (unsigned i = 0; i < len; ++i) {
        c[i] = static_cast<unsigned>(index % p);
        index /= p;
    }
    return c;
}

constexpr std::uint32_t kTableLimit = 1024;

}  // namespace

bool is_irreducible_mod_p(std::span<const unsigned> monic, unsigned p) {
    const Coeffs f(monic.begin(), monic.end());
    const unsigned deg = static_cast<unsigned>(f.size()) - 1;
    for (unsigned d = 1; d <= deg / 2; ++d) {
        const std::uint64_t count = ipow(p, d);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Coeffs g = decode(idx, p, d);
            g.push_back(1);
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// FieldContext

FieldContext::FieldContext(unsigned p, unsigned r, std::vector<unsigned> modulus)
    : p_(p), r_(r), q_(static_cast<std::uint32_t>(ipow(p, r))), modulus_(std::move(modulus)) {
    if (q_ <= kTableLimit) {
        add_table_.resize(static_cast<std::size_t>(q_) * q_);
        mul_table_.resize(static_cast<std::size_t>(q_) * q_);
        for (std::uint32_t a = 0; a < q_; ++a) {
            for (std::uint32_t b = 0; b < q_; ++b) {
                add_table_[a * q_ + b] = static_cast<std::uint16_t>(add_slow(a, b));
                mul_table_[a * q_ + b] = static_cast<std::uint16_t>(mul_slow(a, b));
            }
        }
        tabulated_ = true;
    }
    neg_table_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) neg_table_[a] = neg_slow(a);
    inv_table_.assign(q_, 0);
    // x^(q-2) is the inverse on GF(q)^x
    for (std::uint32_t a = 1; a < q_; ++a) {
        std::uint32_t res = 1;
        std::uint32_t base = a;
        for (std::uint64_t e = q_ - 2; e != 0; e >>= 1U) {
            if (e & 1U) res = mul(res, base);
            base = mul(base, base);
        }
        inv_table_[a] = res;
    }
}

std::uint32_t FieldContext::add_slow(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t out = 0;
    std::uint32_t place = 1;
    for (unsigned i = 0; i < r_; ++i) {
        out += ((a % p_ + b % p_) % p_) * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return out;
}

std::uint32_t FieldContext::neg_slow(std::uint32_t a) const {
    std::uint32_t out = 0;
    std::uint32_t place = 1;
    for (unsigned i = 0; i < r_; ++i) {
        out += ((p_ - a % p_) % p_) * place;
        a /= p_;
        place *= p_;
    }
    return out;
}

std::uint32_t FieldContext::mul_slow(std::uint32_t a, std::uint32_t b) const {
    const Coeffs da = decode(a, p_, r_);
    const Coeffs db = decode(b, p_, r_);
    Coeffs prod(2 * r_ - 1, 0);
    for (unsigned i = 0; i < r_; ++i)
        for (unsigned j = 0; j < r_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    const Coeffs red = poly_mod(prod, modulus_, p_);
    std::uint32_t out = 0;
    for (std::size_t i = red.size(); i-- > 0;) out = out * p_ + red[i];
    return out;
}

std::uint32_t FieldContext::add(std::uint32_t a, std::uint32_t b) const {
    return tabulated_ ? add_table_[a * q_ + b] : add_slow(a, b);
}
std::uint32_t FieldContext::neg(std::uint32_t a) const { return neg_table_[a]; }
std::uint32_t FieldContext::mul(std::uint32_t a, std::uint32_t b) const {
    return tabulated_ ? mul_table_[a * q_ + b] : mul_slow(a, b);
}
std::uint32_t FieldContext::inv(std::uint32_t a) const {
    if (a == 0) throw Error(ErrorKind::NotUnit, "zero has no inverse in " + describe());
    return inv_table_[a];
}

std::vector<unsigned> FieldContext::digits(std::uint32_t a) const { return decode(a, p_, r_); }

Fq FieldContext::from_int(std::int64_t n) const {
    const std::int64_t pp = p_;
    return {this, static_cast<std::uint32_t>(((n % pp) + pp) % pp)};
}

Fq FieldContext::element(std::span<const unsigned> coeffs) const {
    if (coeffs.size() > r_)
        throw Error(ErrorKind::InvalidArgument,
                    "field element has " + std::to_string(coeffs.size()) + " coefficients, degree is " +
                        std::to_string(r_));
    std::uint32_t out = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) out = out * p_ + coeffs[i] % p_;
    return {this, out};
}

Fq FieldContext::from_index(std::uint32_t index) const {
    if (index >= q_) throw Error(ErrorKind::InvalidArgument, "field index out of range");
    return {this, index};
}

std::vector<Fq> FieldContext::power_basis() const {
    std::vector<Fq> out;
    std::uint32_t place = 1;
    for (unsigned i = 0; i < r_; ++i, place *= p_) out.emplace_back(this, place);
    return out;
}

std::vector<Fq> FieldContext::elements() const {
    std::vector<Fq> out;
    out.reserve(q_);
    for (std::uint32_t i = 0; i < q_; ++i) out.emplace_back(this, i);
    return out;
}

std::string FieldContext::describe() const {
    std::ostringstream os;
    os << "GF(" << q_ << ")";
    if (r_ > 1) {
        os << " = F" << p_ << "[x]/(";
        bool first = true;
        for (std::size_t i = modulus_.size(); i-- > 0;) {
            if (modulus_[i] == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (modulus_[i] != 1 || i == 0) os << modulus_[i];
            if (modulus_[i] != 1 && i > 0) os << "*";
            if (i > 0) os << "x";
            if (i > 1) os << "^" << i;
        }
        os << ")";
    }
    return os.str();
}

FieldPtr make_field_context(unsigned p, unsigned r, std::optional<std::vector<unsigned>> modulus) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (r == 0) throw Error(ErrorKind::InvalidArgument, "extension degree must be at least 1");
    if (ipow(p, r) > (1ULL << 31) || p > 65535)
        throw Error(ErrorKind::TooLarge, "field order " + std::to_string(p) + "^" + std::to_string(r) +
                                             " exceeds the supported range");
    std::vector<unsigned> mod;
    if (modulus) {
        mod = *modulus;
        if (mod.size() != r + 1 || mod.back() != 1)
            throw Error(ErrorKind::InvalidArgument,
                        "modulus must be a monic coefficient list of length r+1, lowest degree first");
        for (unsigned c : mod)
            if (c >= p) throw Error(ErrorKind::InvalidArgument, "modulus coefficient out of range");
        if (!is_irreducible_mod_p(mod, p)) throw Error(ErrorKind::Reducible, "supplied modulus factors mod " + std::to_string(p));
    } else if (r == 1) {
        mod = {0, 1};
    } else {
        const std::uint64_t count = ipow(p, r);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Coeffs cand = decode(idx, p, r);
            cand.push_back(1);
            if (is_irreducible_mod_p(cand, p)) {
                mod = std::move(cand);
                break;
            }
        }
    }
    return FieldPtr(new FieldContext(p, r, std::move(mod)));
}

FieldPtr make_field_context_for_order(std::uint64_t q, std::optional<std::vector<unsigned>> modulus) {
    const auto factors = prime_factors(q);
    if (q < 2 || factors.size() != 1)
        throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
    const auto p = static_cast<unsigned>(factors.front());
    unsigned r = 0;
    for (std::uint64_t t = q; t > 1; t /= p) ++r;
    return make_field_context(p, r, std::move(modulus));
}

// ---------------------------------------------------------------------------
// Fq

std::vector<unsigned> Fq::coeffs() const { return ctx_->digits(v_); }
Fq Fq::operator+(const Fq& o) const { return {ctx_, ctx_->add(v_, o.v_)}; }
Fq Fq::operator-(const Fq& o) const { return {ctx_, ctx_->add(v_, ctx_->neg(o.v_))}; }
Fq Fq::operator*(const Fq& o) const { return {ctx_, ctx_->mul(v_, o.v_)}; }
Fq Fq::operator-() const { return {ctx_, ctx_->neg(v_)}; }
Fq Fq::from_int(std::int64_t n) const { return ctx_->from_int(n); }
Fq Fq::inverse() const { return {ctx_, ctx_->inv(v_)}; }
std::uint64_t Fq::characteristic() const { return ctx_->p(); }

Fq frobenius(const Fq& x) { return x.pow(x.context().p()); }

std::uint64_t multiplicative_order(const Fq& x) {
    if (x.is_zero()) throw Error(ErrorKind::NotUnit, "zero has no multiplicative order");
    const std::uint64_t n = x.context().q() - 1;
    std::uint64_t order = n;
    for (std::uint64_t l : prime_factors(n)) {
        while (order % l == 0 && x.pow(order / l) == x.one_like()) order /= l;
    }
    return order;
}

Fq primitive_element(const FieldContext& ctx) {
    for (std::uint32_t i = 1; i < ctx.q(); ++i) {
        const Fq cand = ctx.from_index(i);
        if (multiplicative_order(cand) == ctx.q() - 1) return cand;
    }
    throw Error(ErrorKind::InvalidArgument, "no primitive element found");  // unreachable for a field
}

// ---------------------------------------------------------------------------
// Z / p^n

ZmodM::ZmodM(unsigned p, unsigned n, std::int64_t value) : p_(p), n_(n), m_(ipow(p, n)) {
    const auto m = static_cast<std::int64_t>(m_);
    value_ = static_cast<std::uint64_t>(((value % m) + m) % m);
}

ZmodM ZmodM::with(std::uint64_t v) const {
    ZmodM out = *this;
    out.value_ = v % m_;
    return out;
}

ZmodM ZmodM::operator*(const ZmodM& o) const {
    return with(static_cast<std::uint64_t>(static_cast<unsigned __int128>(value_) * o.value_ % m_));
}

ZmodM ZmodM::inverse() const {
    if (!is_unit()) throw Error(ErrorKind::NotUnit, std::to_string(value_) + " is not a unit mod " + std::to_string(m_));
    // extended Euclid
    std::int64_t r0 = static_cast<std::int64_t>(m_), r1 = static_cast<std::int64_t>(value_);
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t t = r0 / r1;
        std::tie(r0, r1) = std::pair{r1, r0 - t * r1};
        std::tie(s0, s1) = std::pair{s1, s0 - t * s1};
    }
    return from_int(s0);
}

ZmodM teichmuller_lift(unsigned p, std::uint64_t a) {
    if (a >= p) throw Error(ErrorKind::InvalidArgument, "Teichmuller lift needs 0 <= a < p");
    ZmodM x(p, 2, static_cast<std::int64_t>(a));
    for (;;) {
        const ZmodM next = power(x, p);
        if (next == x) return x;
        x = next;
    }
}

// ---------------------------------------------------------------------------
// Gaussian residues

GaussianResidue::GaussianResidue(const GaussianContext* ctx, std::int64_t x, std::int64_t y) : ctx_(ctx), x_(x), y_(y) {
    ctx_->reduce(x_, y_);
}

std::uint64_t GaussianResidue::characteristic() const { return ctx_->characteristic(); }

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

}  // namespace

GaussianContext::GaussianContext(std::int64_t a, std::int64_t b, std::string label) : label_(std::move(label)) {
    if (a == 0 && b == 0) throw Error(ErrorKind::InvalidArgument, "zero ideal has infinite quotient");
    // The ideal (a + b i) is the Z-span of (a + b i) and i (a + b i) = -b + a i.
    std::vector<std::array<std::int64_t, 2>> rows = {{a, b}, {-b, a}};
    // Euclid on the first column.
    for (;;) {
        std::size_t pivot = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i][0] == 0) continue;
            if (pivot == rows.size() || std::abs(rows[i][0]) < std::abs(rows[pivot][0])) pivot = i;
        }
        bool reduced = false;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == pivot || rows[i][0] == 0) continue;
            const std::int64_t t = rows[i][0] / rows[pivot][0];
            rows[i][0] -= t * rows[pivot][0];
            rows[i][1] -= t * rows[pivot][1];
            reduced = true;
        }
        if (!reduced) {
            std::int64_t g = 0;
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (i != pivot) g = std::gcd(g, rows[i][1]);
            alpha_ = std::abs(rows[pivot][0]);
            const std::int64_t sign = rows[pivot][0] < 0 ? -1 : 1;
            gamma_ = std::abs(g);
            beta_ = floor_mod(sign * rows[pivot][1], gamma_);
            break;
        }
    }
}

void GaussianContext::reduce(std::int64_t& x, std::int64_t& y) const noexcept {
    const std::int64_t k = floor_div(x, alpha_);
    x -= k * alpha_;
    y = floor_mod(y - k * beta_, gamma_);
}

GaussianResidue GaussianContext::from_index(std::uint64_t index) const {
    const auto g = static_cast<std::uint64_t>(gamma_);
    return make(static_cast<std::int64_t>(index / g), static_cast<std::int64_t>(index % g));
}

std::uint64_t GaussianContext::index_of(const GaussianResidue& g) const noexcept {
    return static_cast<std::uint64_t>(g.x() * gamma_ + g.y());
}

std::uint64_t GaussianContext::characteristic() const {
    std::uint64_t n = 1;
    GaussianResidue acc = make(1, 0);
    const GaussianResidue one = make(1, 0);
    while (!acc.is_zero()) {
        acc = acc + one;
        ++n;
    }
    return n;
}

GaussianQuotient gaussian_quotient(unsigned p, unsigned k) {
    if (p == 2) throw Error(ErrorKind::BadPrime, "p = 2 ramifies in Z[i]");
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (k != 1 && k != 2) throw Error(ErrorKind::InvalidArgument, "exponent must be 1 or 2");
    GaussianQuotient out;
    out.p = p;
    out.k = k;
    if (p % 4 == 1) {
        out.split = true;
        for (std::int64_t b = 1; b * b < static_cast<std::int64_t>(p); ++b) {
            const std::int64_t rest = static_cast<std::int64_t>(p) - b * b;
            std::int64_t a = 0;
            while ((a + 1) * (a + 1) <= rest) ++a;
            if (a * a == rest && a > b) {
                out.pi_re = a;
                out.pi_im = b;
                break;
            }
        }
        std::int64_t re = out.pi_re, im = out.pi_im;
        if (k == 2) {
            const std::int64_t re2 = re * re - im * im;
            const std::int64_t im2 = 2 * re * im;
            re = re2;
            im = im2;
        }
        std::ostringstream label;
        label << "Z[i]/(" << out.pi_re << "+" << out.pi_im << "i)" << (k == 2 ? "^2" : "");
        out.ring = std::make_shared<GaussianContext>(re, im, label.str());
    } else {
        const auto n = static_cast<std::int64_t>(ipow(p, k));
        out.ring = std::make_shared<GaussianContext>(n, 0, "Z[i]/(" + std::to_string(n) + ")");
    }
    return out;
}

}  // namespace wittrep
