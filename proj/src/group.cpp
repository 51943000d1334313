#include "wittrep/group.hpp"
#include "wittrep/poly.hpp"

#include <cctype>
#include <sstream>

namespace wittrep {

Sl2Lie Sl2Lie::from_matrix(const Sl2k& m) {
    if (!m.trace().is_zero()) throw Error(ErrorKind::InvalidArgument, "matrix is not trace-free");
    return {m.a, m.b, m.c};
}

Sl2k frobenius(const Sl2k& m) { return {frobenius(m.a), frobenius(m.b), frobenius(m.c), frobenius(m.d)}; }

Sl2Lie twisted_adjoint(const Sl2k& a, const Sl2Lie& v) {
    const Sl2k f = frobenius(a);
    return Sl2Lie::from_matrix(f * v.to_matrix() * f.adjugate());
}

std::vector<Sl2k> enumerate_sl2(const FieldContext& ctx) {
    std::vector<Sl2k> out;
    const auto els = ctx.elements();
    const Fq one = ctx.one();
    for (const auto& a : els)
        for (const auto& b : els)
            for (const auto& c : els)
                for (const auto& d : els)
                    if (a * d - b * c == one) out.push_back({a, b, c, d});
    return out;
}

Sl2Lie gamma_map(const GroupFq& r) {
    const Mat2<Fq> red = eta(r);
    if (!(red == Mat2<Fq>::identity(red.a)))
        throw Error(ErrorKind::NotInRadical, "element does not reduce to the identity: " + to_string(r));
    const Fq& x = r.a().a1();
    if (!(r.d().a1() == -x)) throw Error(ErrorKind::NotInRadical, "diagonal radical coordinates are not (x, -x)");
    return {x, r.b().a1(), r.c().a1()};
}

GroupFq radical_element(const Sl2Lie& v) {
    const Fq zero = v.x.zero_like();
    const Fq one = v.x.one_like();
    return GroupFq::unchecked({one, v.x}, {zero, v.y}, {zero, v.z}, {one, -v.x});
}

std::uint64_t element_order(const GroupFq& g, std::uint64_t limit) {
    GroupFq acc = g;
    for (std::uint64_t n = 1; n <= limit; ++n) {
        if (acc.is_identity()) return n;
        acc = acc * g;
    }
    throw Error(ErrorKind::BudgetExceeded, "element order exceeds " + std::to_string(limit));
}

std::uint64_t element_key(const GroupFq& g) {
    std::uint64_t key = 0;
    for (const WittFq* w : {&g.a(), &g.b(), &g.c(), &g.d()}) {
        key = (key << 8U) | w->a0().index();
        key = (key << 8U) | w->a1().index();
    }
    return key;
}

std::string to_string(const GroupFq& g) {
    std::ostringstream os;
    const auto w = [&](const WittFq& x) {
        os << "(" << coefficient_text(x.a0()) << "," << coefficient_text(x.a1()) << ")";
    };
    os << "[[";
    w(g.a());
    os << ",";
    w(g.b());
    os << "],[";
    w(g.c());
    os << ",";
    w(g.d());
    os << "]]";
    return os.str();
}

// ---------------------------------------------------------------------------
// Enumeration

std::uint64_t group_order(std::uint64_t q) { return q * q * q * q * (q * q - 1); }

GroupFq lift_sl2(const Sl2k& m) {
    using W = WittFq;
    W a = W::teichmuller(m.a), b = W::teichmuller(m.b);
    const W c = W::teichmuller(m.c), d = W::teichmuller(m.d);
    const W det = a * d - b * c;
    const W fix = det.inverse();
    a = fix * a;
    b = fix * b;
    return GroupFq::unchecked(a, b, c, d);
}

std::vector<GroupFq> radical_elements(const FieldContext& ctx) {
    std::vector<GroupFq> out;
    const auto els = ctx.elements();
    out.reserve(els.size() * els.size() * els.size());
    for (const auto& x : els)
        for (const auto& y : els)
            for (const auto& z : els) out.push_back(radical_element({x, y, z}));
    return out;
}

void for_each_group_element(const FieldContext& ctx, std::uint64_t budget, const std::function<void(const GroupFq&)>& visit,
                            EnumerationMethod method) {
    const std::uint64_t order = group_order(ctx.q());
    if (order > budget)
        throw Error(ErrorKind::BudgetExceeded, "group of order " + std::to_string(order) + " exceeds budget " +
                                                   std::to_string(budget));
    if (ctx.q() > 256) throw Error(ErrorKind::TooLarge, "enumeration supports q <= 256");
    if (method == EnumerationMethod::Auto)
        method = ctx.q() <= 3 ? EnumerationMethod::BruteForce : EnumerationMethod::Fiber;

    if (method == EnumerationMethod::BruteForce) {
        const auto ws = witt_elements(ctx);
        const WittFq one = WittFq::teichmuller(ctx.one());
        for (const auto& a : ws)
            for (const auto& b : ws)
                for (const auto& c : ws)
                    for (const auto& d : ws)
                        if (a * d - b * c == one) visit(GroupFq::unchecked(a, b, c, d));
        return;
    }
    const auto fiber = radical_elements(ctx);
    for (const auto& m : enumerate_sl2(ctx)) {
        const GroupFq base = lift_sl2(m);
        for (const auto& r : fiber) visit(base * r);
    }
}

std::vector<GroupFq> enumerate_group(const FieldContext& ctx, std::uint64_t budget, EnumerationMethod method) {
    std::vector<GroupFq> out;
    out.reserve(group_order(ctx.q()) <= budget ? group_order(ctx.q()) : 0);
    for_each_group_element(ctx, budget, [&](const GroupFq& g) { out.push_back(g); }, method);
    return out;
}

GroupFq random_element(const FieldContext& ctx, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> pick(0, ctx.q() - 1);
    const auto rnd = [&] { return ctx.from_index(pick(rng)); };
    for (;;) {
        const Sl2k m{rnd(), rnd(), rnd(), rnd()};
        if (m.det() == ctx.one()) return lift_sl2(m) * radical_element({rnd(), rnd(), rnd()});
    }
}

// ---------------------------------------------------------------------------
// Invariant subgroups of the radical

namespace {

// Incremental row-echelon span over F_p.
class FpSpan {
public:
    explicit FpSpan(unsigned p) : p_(p) {}

    std::size_t dim() const { return rows_.size(); }

    bool insert(std::vector<unsigned> v) {
        reduce(v);
        std::size_t lead = 0;
        while (lead < v.size() && v[lead] == 0) ++lead;
        if (lead == v.size()) return false;
        const unsigned inv = inverse(v[lead]);
        for (auto& x : v) x = x * inv % p_;
        rows_.push_back(std::move(v));
        leads_.push_back(lead);
        return true;
    }

    bool contains(std::vector<unsigned> v) const {
        reduce(v);
        for (auto x : v)
            if (x != 0) return false;
        return true;
    }

private:
    void reduce(std::vector<unsigned>& v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const unsigned c = v[leads_[i]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j) v[j] = (v[j] + (p_ - c) * rows_[i][j]) % p_;
        }
    }

    unsigned inverse(unsigned a) const {
        for (unsigned b = 1; b < p_; ++b)
            if (a * b % p_ == 1) return b;
        return 0;
    }

    unsigned p_;
    std::vector<std::vector<unsigned>> rows_;
    std::vector<std::size_t> leads_;
};

std::vector<unsigned> fp_coords(const Sl2Lie& v) {
    std::vector<unsigned> out;
    for (const Fq* c : {&v.x, &v.y, &v.z}) {
        const auto d = c->coeffs();
        out.insert(out.end(), d.begin(), d.end());
    }
    return out;
}

std::string describe(const Sl2Lie& v) {
    return "[[" + coefficient_text(v.x) + "," + coefficient_text(v.y) + "],[" + coefficient_text(v.z) + "," +
           coefficient_text(-v.x) + "]]";
}

}  // namespace

LemmaGenerateReport lemma_generate_check(const FieldContext& ctx, std::size_t equivariance_samples, std::uint64_t seed) {
    LemmaGenerateReport rep;
    rep.full_dim = 3 * static_cast<std::size_t>(ctx.r());
    const Fq zero = ctx.zero();
    const Fq one = ctx.one();

    // Frob(a) and its inverse for every a in SL_2(F_q).
    std::vector<std::pair<Sl2k, Sl2k>> twists;
    for (const auto& a : enumerate_sl2(ctx)) {
        const Sl2k f = frobenius(a);
        twists.emplace_back(f, f.adjugate());
    }
    const auto act = [](const std::pair<Sl2k, Sl2k>& t, const Sl2Lie& v) {
        const Sl2k m = t.first * v.to_matrix() * t.second;
        return Sl2Lie{m.a, m.b, m.c};
    };

    // Equivariance of gamma on the whole radical for sampled g.
    const auto radical = radical_elements(ctx);
    std::mt19937_64 rng(seed);
    rep.equivariance = true;
    for (std::size_t s = 0; s < equivariance_samples && rep.equivariance; ++s) {
        const GroupFq g = random_element(ctx, rng);
        const GroupFq g_inv = g.inverse();
        const Sl2k eg = eta(g);
        for (const auto& r : radical) {
            ++rep.equivariance_checks;
            if (!(gamma_map(g * r * g_inv) == twisted_adjoint(eg, gamma_map(r)))) {
                rep.equivariance = false;
                rep.failure = "gamma not equivariant at g = " + to_string(g) + ", r = " + to_string(r);
                break;
            }
        }
    }

    // (1) orbit of gamma(X(0,1))
    const Sl2Lie e = gamma_map(gen_x(WittFq(zero, one)));
    {
        FpSpan span(ctx.p());
        for (const auto& t : twists) {
            span.insert(fp_coords(act(t, e)));
            if (span.dim() == rep.full_dim) break;
        }
        rep.orbit_span_dim = span.dim();
        rep.part1 = span.dim() == rep.full_dim;
        if (!rep.part1 && !rep.failure) rep.failure = "orbit of gamma(X(0,1)) spans a proper subgroup";
    }

    // (2) every nonzero v generates a subgroup containing gamma(Z(1))
    const auto target = fp_coords(gamma_map(gen_z(one)));
    rep.part2 = true;
    const auto els = ctx.elements();
    for (const auto& x : els) {
        for (const auto& y : els) {
            for (const auto& z : els) {
                const Sl2Lie v{x, y, z};
                if (v.is_zero()) continue;
                ++rep.vectors_checked;
                FpSpan span(ctx.p());
                bool found = false;
                for (const auto& t : twists) {
                    span.insert(fp_coords(act(t, v)));
                    if (span.contains(target)) {
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    rep.part2 = false;
                    if (!rep.failure) rep.failure = "orbit span of " + describe(v) + " misses gamma(Z(1))";
                }
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Hat group

HatElement hat_group_mul(const HatElement& x, const HatElement& y) {
    return {x.v + twisted_adjoint(x.a, y.v), x.a * y.a};
}

HatElement hat_identity(const FieldContext& ctx) { return {Sl2Lie::zero(ctx.zero()), Sl2k::identity(ctx.zero())}; }

std::vector<HatElement> enumerate_hat_group(const FieldContext& ctx, std::uint64_t budget) {
    const std::uint64_t q = ctx.q();
    const std::uint64_t order = q * q * q * q * (q * q - 1);
    if (order > budget)
        throw Error(ErrorKind::BudgetExceeded, "hat group of order " + std::to_string(order) + " exceeds budget");
    std::vector<HatElement> out;
    out.reserve(order);
    const auto sl2 = enumerate_sl2(ctx);
    const auto els = ctx.elements();
    for (const auto& x : els)
        for (const auto& y : els)
            for (const auto& z : els)
                for (const auto& a : sl2) out.push_back({{x, y, z}, a});
    return out;
}

// ---------------------------------------------------------------------------
// Element expressions

namespace {

class ExprParser {
public:
    ExprParser(std::string_view src, const FieldContext& ctx) : src_(src), ctx_(ctx) {}

    GroupFq parse() {
        GroupFq acc = term();
        skip_ws();
        while (peek() == '*') {
            ++pos_;
            acc = acc * term();
            skip_ws();
        }
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return acc;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool consume_word(std::string_view w) {
        if (src_.substr(pos_, w.size()) == w) {
            pos_ += w.size();
            return true;
        }
        return false;
    }

    std::int64_t integer(bool allow_sign) {
        skip_ws();
        bool neg = false;
        if (allow_sign && peek() == '-') {
            neg = true;
            ++pos_;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
        std::int64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (src_[pos_] - '0');
            if (v > 1'000'000'000) fail("integer too large");
            ++pos_;
        }
        return neg ? -v : v;
    }

    unsigned digit() {
        const std::size_t at = pos_;
        const std::int64_t v = integer(false);
        if (v >= ctx_.p()) throw ParseError(at, "digit " + std::to_string(v) + " is not below p = " + std::to_string(ctx_.p()));
        return static_cast<unsigned>(v);
    }

    Fq field_element() {
        skip_ws();
        if (peek() != '[') return ctx_.from_int(digit());
        ++pos_;
        std::vector<unsigned> coeffs{digit()};
        skip_ws();
        while (peek() == ',') {
            ++pos_;
            coeffs.push_back(digit());
            skip_ws();
        }
        if (coeffs.size() > ctx_.r()) fail("too many coefficients for GF(" + std::to_string(ctx_.q()) + ")");
        expect(']');
        return ctx_.element(coeffs);
    }

    WittFq witt() {
        Fq a0 = field_element();
        expect(',');
        Fq a1 = field_element();
        return {a0, a1};
    }

    GroupFq generator() {
        skip_ws();
        const std::size_t at = pos_;
        if (consume_word("Phi")) {
            expect('(');
            const Fq t = field_element();
            expect(')');
            return gen_phi(t);  // ZeroTorusParameter for Phi(0)
        }
        if (consume_word("X") || consume_word("Y")) {
            const bool is_x = src_[at] == 'X';
            expect('(');
            const WittFq w = witt();
            expect(')');
            return is_x ? gen_x(w) : gen_y(w);
        }
        if (consume_word("Z")) {
            expect('(');
            const Fq s = field_element();
            expect(')');
            return gen_z(s);
        }
        if (consume_word("I")) return GroupFq::identity(ctx_.zero());
        fail("expected one of X, Y, Phi, Z, I");
    }

    GroupFq term() {
        GroupFq g = generator();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            g = g.pow(integer(true));
        }
        return g;
    }

    std::string_view src_;
    const FieldContext& ctx_;
    std::size_t pos_ = 0;
};

}  // namespace

GroupFq parse_element(std::string_view expr, const FieldContext& ctx) { return ExprParser(expr, ctx).parse(); }

}  // namespace wittrep
