#include "wittrep/analysis.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

namespace wittrep {

// ---------------------------------------------------------------------------
// Weights

std::map<int, std::size_t> WeightDecomposition::multiset() const {
    std::map<int, std::size_t> out;
    for (const auto& [w, idx] : spaces) out[w] = idx.size();
    return out;
}

std::size_t WeightDecomposition::max_multiplicity() const {
    std::size_t m = 0;
    for (const auto& [w, idx] : spaces) m = std::max(m, idx.size());
    return m;
}

bool WeightDecomposition::symmetric() const {
    for (const auto& [w, idx] : spaces) {
        auto it = spaces.find(-w);
        if (it == spaces.end() || it->second.size() != idx.size()) return false;
    }
    return true;
}

WeightDecomposition weight_decomposition(const FieldPtr& ctx) {
    const std::uint64_t q = ctx->q();
    const unsigned p = ctx->p();
    if (q <= 2ULL * p + 1)
        throw Error(ErrorKind::WindowTooSmall, "weights need q >= 2p+2 (q = " + std::to_string(q) + ", p = " +
                                                   std::to_string(p) + ")");
    WeightDecomposition wd;
    wd.generator = primitive_element(*ctx);
    const Matrix<Fq> m = rho_matrix(gen_phi(wd.generator));
    if (!m.is_diagonal()) throw Error(ErrorKind::InvalidArgument, "rho(phi(t0)) is not diagonal in the monomial basis");

    std::unordered_map<std::uint32_t, std::uint64_t> log;
    Fq acc = ctx->one();
    for (std::uint64_t k = 0; k + 1 < q; ++k) {
        log.emplace(acc.index(), k);
        acc = acc * wd.generator;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const auto k = static_cast<std::int64_t>(log.at(m(i, i).index()));
        const std::int64_t w = 2 * k > static_cast<std::int64_t>(q - 1) ? k - static_cast<std::int64_t>(q - 1) : k;
        wd.basis_weights.push_back(static_cast<int>(w));
        wd.spaces[static_cast<int>(w)].push_back(i);
    }
    return wd;
}

// ---------------------------------------------------------------------------
// Coefficient operators

Matrix<Fq> DistTable::specialize(const Fq& a, const Fq& b) const {
    const std::size_t n = psi.begin()->second.rows();
    Matrix<Fq> out(n, n, ctx->zero());
    for (const auto& [ij, m] : psi) out = out + m.scale(a.pow(ij.first) * b.pow(ij.second));
    return out;
}

DistTable distribution_table(const FieldPtr& ctx) {
    using P = MultiPoly<Fq>;
    const Vars ab = make_vars({"a", "b"});
    const P a = P::variable(ab, ctx->zero(), 0);
    const P b = P::variable(ab, ctx->zero(), 1);
    const Matrix<P> m = rho_matrix(gen_x(Witt2<P>(a, b)));
    DistTable t;
    t.ctx = ctx;
    const std::size_t n = m.rows();
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            for (const auto& [e, coef] : m(r, c).terms()) {
                auto [it, fresh] = t.psi.try_emplace({e[0], e[1]}, n, n, ctx->zero());
                it->second(r, c) = coef;
            }
        }
    }
    return t;
}

namespace {

std::string ij_text(std::pair<unsigned, unsigned> ij) {
    return "psi_{" + std::to_string(ij.first) + "," + std::to_string(ij.second) + "}";
}

}  // namespace

std::vector<LawResult> distribution_laws(const DistTable& table, const std::optional<WeightDecomposition>& wd,
                                         std::size_t specializations, std::uint64_t seed) {
    const FieldContext& f = *table.ctx;
    const unsigned p = f.p();
    const std::size_t n = table.psi.begin()->second.rows();
    std::vector<LawResult> out;

    {
        LawResult r{"psi00_identity", true, 0, {}};
        r.checks = 1;
        auto it = table.psi.find({0, 0});
        r.passed = it != table.psi.end() && it->second.is_identity();
        if (!r.passed) r.witness = "psi_{0,0} != I";
        out.push_back(r);
    }
    {
        LawResult r{"pairwise_commute", true, 0, {}};
        for (auto x = table.psi.begin(); x != table.psi.end() && r.passed; ++x) {
            for (auto y = std::next(x); y != table.psi.end(); ++y) {
                ++r.checks;
                if (!(x->second * y->second == y->second * x->second)) {
                    r.passed = false;
                    r.witness = ij_text(x->first) + " and " + ij_text(y->first);
                    break;
                }
            }
        }
        out.push_back(r);
    }
    {
        LawResult r{"nilpotent_p_squared", true, 0, {}};
        for (const auto& [ij, m] : table.psi) {
            if (ij == std::pair<unsigned, unsigned>{0, 0}) continue;
            ++r.checks;
            if (!m.pow(static_cast<std::uint64_t>(p) * p).is_zero()) {
                r.passed = false;
                r.witness = ij_text(ij);
                break;
            }
        }
        out.push_back(r);
    }
    if (wd) {
        LawResult r{"weight_homogeneity", true, 0, {}};
        for (const auto& [ij, m] : table.psi) {
            const int shift = static_cast<int>(2 * ij.first + 2 * p * ij.second);
            for (std::size_t row = 0; row < n && r.passed; ++row) {
                for (std::size_t col = 0; col < n; ++col) {
                    if (m(row, col).is_zero()) continue;
                    ++r.checks;
                    if (wd->basis_weights[row] - wd->basis_weights[col] != shift) {
                        r.passed = false;
                        r.witness = ij_text(ij) + " entry (" + std::to_string(row) + "," + std::to_string(col) +
                                    ") does not shift weight by " + std::to_string(shift);
                        break;
                    }
                }
            }
        }
        out.push_back(r);
    }
    {
        LawResult r{"frobenius_sum", true, 0, {}};
        r.checks = 1;
        Matrix<Fq> sum(n, n, f.zero());
        for (const auto& [ij, m] : table.psi)
            if (ij.second == 0) sum = sum + m.pow(p);
        r.passed = sum == rho_matrix(gen_x(WittFq(f.zero(), f.one())));
        if (!r.passed) r.witness = "sum_i psi_{i,0}^p != rho(X((0,1)))";
        out.push_back(r);
    }
    {
        LawResult r{"specializations", true, 0, {}};
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::uint32_t> pick(0, f.q() - 1);
        for (std::size_t k = 0; k < specializations; ++k) {
            const Fq a = f.from_index(pick(rng));
            const Fq b = f.from_index(pick(rng));
            ++r.checks;
            if (!(table.specialize(a, b) == rho_matrix(gen_x(WittFq(a, b))))) {
                r.passed = false;
                r.witness = "(a,b) = (" + coefficient_text(a) + "," + coefficient_text(b) + ")";
                break;
            }
        }
        out.push_back(r);
    }
    return out;
}

WeightChain weight_chain_witness(const DistTable& table, const WeightDecomposition& wd) {
    const unsigned p = table.ctx->p();
    for (const auto& [ij, m] : table.psi) {
        if (ij.second != 0 || ij.first == 0) continue;
        const Matrix<Fq> top = m.pow(p);
        for (std::size_t c = 0; c < top.cols(); ++c) {
            bool moves = false;
            for (std::size_t r = 0; r < top.rows(); ++r) moves = moves || !top(r, c).is_zero();
            if (!moves) continue;
            WeightChain chain;
            chain.s = ij.first;
            chain.lambda = wd.basis_weights[c];
            chain.start_basis_index = c;
            bool ok = true;
            for (unsigned j = 0; j <= p; ++j) {
                const int w = chain.lambda + static_cast<int>(2 * chain.s * j);
                chain.weights.push_back(w);
                ok = ok && wd.spaces.count(w) != 0;
            }
            if (ok) return chain;
        }
    }
    throw Error(ErrorKind::NoWitness, "no s > 0 with psi_{s,0}^p nonzero on a weight vector");
}

// ---------------------------------------------------------------------------
// Filtration

std::size_t FiltrationReport::total() const {
    std::size_t s = 0;
    for (auto d : layers) s += d;
    return s;
}

std::vector<GroupFq> radical_generators(const FieldContext& ctx) {
    std::vector<GroupFq> out;
    const Fq zero = ctx.zero();
    for (const Fq& e : ctx.power_basis()) {
        out.push_back(gen_x(WittFq(zero, e)));
        out.push_back(gen_y(WittFq(zero, e)));
        out.push_back(gen_z(e));
    }
    return out;
}

FiltrationReport fixed_space_filtration(const FieldPtr& ctx) {
    const RhoEvaluator rho(ctx);
    const std::size_t n = rho.dim();
    const Fq zero = ctx->zero();
    const Matrix<Fq> id = Matrix<Fq>::identity(n, zero);
    std::vector<Matrix<Fq>> ns;
    for (const auto& g : radical_generators(*ctx)) ns.push_back(rho(g) - id);

    FiltrationReport rep;
    {
        Matrix<Fq> stacked;
        for (const auto& m : ns) stacked = stacked.stack(m);
        rep.fixed_dim_rank_check = n - rank(stacked);
    }

    std::vector<std::vector<Fq>> current;  // basis of V_k
    while (current.size() < n) {
        // rows annihilating V_k
        Matrix<Fq> ann = Matrix<Fq>::identity(n, zero);
        if (!current.empty()) {
            const auto rows = nullspace(Matrix<Fq>::from_columns(current, n, zero).transpose());
            ann = Matrix<Fq>::from_columns(rows, n, zero).transpose();
        }
        Matrix<Fq> system;
        for (const auto& m : ns) system = system.stack(ann * m);
        const auto next = nullspace(system);
        if (next.size() <= current.size())
            throw Error(ErrorKind::NonTerminating, "no new fixed vectors on a quotient of dimension " +
                                                       std::to_string(n - current.size()));
        bool trivial = true;
        for (const auto& m : ns) {
            for (const auto& v : next) {
                const auto image = m * v;
                bool is_zero = true;
                for (const auto& x : image) is_zero = is_zero && x.is_zero();
                if (!is_zero && (current.empty() || !in_span(current, image, zero))) trivial = false;
            }
        }
        rep.layers.push_back(next.size() - current.size());
        rep.trivial_on_layer.push_back(trivial);
        current = next;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Faithfulness

namespace {

GroupFq decode_key(const FieldContext& ctx, std::uint64_t key) {
    std::array<Fq, 8> c;
    for (std::size_t i = 8; i-- > 0;) {
        c[i] = ctx.from_index(static_cast<std::uint32_t>(key & 0xffU));
        key >>= 8U;
    }
    return GroupFq::unchecked({c[0], c[1]}, {c[2], c[3]}, {c[4], c[5]}, {c[6], c[7]});
}

std::uint64_t fingerprint(const std::vector<std::uint32_t>& idx) {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : idx) {
        h ^= x;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace

FaithfulnessEnumReport faithfulness_enum(const RhoEvaluator& rho, std::uint64_t budget) {
    const FieldContext& f = rho.field();
    FaithfulnessEnumReport rep;
    std::unordered_multimap<std::uint64_t, std::uint64_t> seen;
    seen.reserve(std::min<std::uint64_t>(group_order(f.q()), budget));
    std::vector<std::uint32_t> img, other;
    for_each_group_element(f, budget, [&](const GroupFq& g) {
        ++rep.elements;
        if (rep.collision) return;
        rho.indices(g, img);
        const std::uint64_t fp = fingerprint(img);
        auto [lo, hi] = seen.equal_range(fp);
        for (auto it = lo; it != hi; ++it) {
            const GroupFq h = decode_key(f, it->second);
            rho.indices(h, other);
            if (other == img) {
                rep.collision = std::make_pair(h, g);
                return;
            }
            ++rep.hash_collisions;
        }
        seen.emplace(fp, element_key(g));
        ++rep.distinct_images;
    });
    return rep;
}

FaithfulnessLemmaReport faithfulness_lemma(const FieldContext& ctx, const GroupRep& rep) {
    FaithfulnessLemmaReport out;
    out.torus_faithful = true;
    for (const Fq& t : ctx.elements()) {
        if (t.is_zero() || t == ctx.one()) continue;
        if (rep(gen_phi(t)).is_identity()) {
            out.torus_faithful = false;
            out.torus_witness = t;
            break;
        }
    }
    out.z_nontrivial = !rep(gen_z(ctx.one())).is_identity();
    return out;
}

GroupRep trivial_rep(const FieldContext& ctx) {
    const Fq zero = ctx.zero();
    return [zero](const GroupFq&) { return Matrix<Fq>::identity(1, zero); };
}

// ---------------------------------------------------------------------------
// Unipotent matrices

JordanType jordan_type(const Matrix<Fq>& m) {
    const std::size_t n = m.rows();
    const Matrix<Fq> nil = m - Matrix<Fq>::identity(n, m.proto());
    std::vector<std::size_t> ranks{n};
    Matrix<Fq> power = Matrix<Fq>::identity(n, m.proto());
    while (ranks.back() != 0) {
        if (ranks.size() > n) throw Error(ErrorKind::NotUnipotent, "m - I is not nilpotent");
        power = power * nil;
        ranks.push_back(rank(power));
    }
    // at_least[k] = number of blocks of size >= k = ranks[k-1] - ranks[k]
    JordanType jt;
    const std::size_t top = ranks.size() - 1;
    for (std::size_t k = top; k >= 1; --k) {
        const std::size_t at_least = ranks[k - 1] - ranks[k];
        const std::size_t bigger = k < top ? ranks[k] - ranks[k + 1] : 0;
        for (std::size_t c = 0; c < at_least - bigger; ++c) jt.partition.push_back(k);
    }
    const unsigned p = static_cast<unsigned>(m.proto().characteristic());
    const std::size_t largest = jt.partition.empty() ? 1 : jt.partition.front();
    jt.order = 1;
    while (jt.order < largest) jt.order *= p;
    if (!m.pow(jt.order).is_identity()) throw Error(ErrorKind::NotUnipotent, "order does not match block sizes");
    return jt;
}

std::size_t centralizer_dim(const Matrix<Fq>& m) {
    const std::size_t n = m.rows();
    const Fq zero = m.proto();
    Matrix<Fq> map(n * n, n * n, zero);
    Matrix<Fq> unit(n, n, zero);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            unit(a, b) = zero.one_like();
            const Matrix<Fq> img = unit * m - m * unit;
            unit(a, b) = zero;
            for (std::size_t k = 0; k < n * n; ++k) map(k, a * n + b) = img.data()[k];
        }
    }
    return n * n - rank(map);
}

Matrix<Fq> jordan_matrix(const FieldContext& ctx, const std::vector<std::size_t>& blocks) {
    std::size_t n = 0;
    for (auto b : blocks) n += b;
    Matrix<Fq> m = Matrix<Fq>::identity(n, ctx.zero());
    std::size_t start = 0;
    for (auto b : blocks) {
        for (std::size_t i = start; i + 1 < start + b; ++i) m(i, i + 1) = ctx.one();
        start += b;
    }
    return m;
}

// ---------------------------------------------------------------------------
// Gaussian integers

GaussianReport gaussian_example_report(unsigned p) {
    GaussianReport rep;
    rep.p = p;
    if (p == 2) {
        rep.note = "BadPrime: 2 ramifies in Z[i]";
        return rep;
    }
    if (!is_prime(p) || p > 7) {
        rep.note = "only odd primes up to 7 are covered";
        return rep;
    }
    rep.applicable = true;
    const GaussianQuotient residue = gaussian_quotient(p, 1);
    const GaussianQuotient square = gaussian_quotient(p, 2);
    rep.split = residue.split;
    rep.pi_re = residue.pi_re;
    rep.pi_im = residue.pi_im;
    rep.residue_field_size = residue.ring->size();
    rep.quotient_size = square.ring->size();
    rep.quotient_characteristic = square.ring->characteristic();

    const FiniteRing quotient = gaussian_ring(square.ring);
    const FieldPtr fp2 = make_field_context(p, 2);
    const FiniteRing w2fp2 = witt_ring(fp2);
    const std::uint64_t p2 = static_cast<std::uint64_t>(p) * p;
    const std::string ideal = rep.split ? "P^2 with P = (" + std::to_string(rep.pi_re) + "+" +
                                              std::to_string(rep.pi_im) + "i)"
                                        : "(" + std::to_string(p2) + ")";
    if (rep.split) {
        rep.iso_target = "Z/" + std::to_string(p2);
        rep.iso = unital_iso_check(zmod_ring(p2), quotient);
        rep.iso_vs_w2_fp2 = unital_iso_check(quotient, w2fp2, square_root_of_minus_one(w2fp2));
        rep.findings.push_back("A/P has " + std::to_string(rep.residue_field_size) + " elements, so the residue field is F_" +
                               std::to_string(rep.residue_field_size));
        rep.findings.push_back("A/" + ideal + " has " + std::to_string(rep.quotient_size) + " elements and characteristic " +
                               std::to_string(rep.quotient_characteristic));
        rep.findings.push_back(std::string("A/P^2 ") + (rep.iso.found ? "is" : "is not") + " isomorphic to Z/" +
                               std::to_string(p2) + " = W_2(F_" + std::to_string(p) + ")");
        rep.findings.push_back(std::string("A/P^2 ") + (rep.iso_vs_w2_fp2->found ? "is" : "is not") +
                               " isomorphic to W_2(F_" + std::to_string(p2) + "): " + rep.iso_vs_w2_fp2->reason);
    } else {
        rep.iso_target = "W2(F_" + std::to_string(p2) + ")";
        rep.iso = unital_iso_check(quotient, w2fp2, square_root_of_minus_one(w2fp2));
        for (auto g : rep.iso.generator_images) rep.generator_images.push_back(w2fp2.describe(g));
        rep.findings.push_back("A/(" + std::to_string(p) + ") has " + std::to_string(rep.residue_field_size) +
                               " elements, so the residue field is F_" + std::to_string(rep.residue_field_size));
        rep.findings.push_back("A/" + ideal + " has " + std::to_string(rep.quotient_size) + " elements and characteristic " +
                               std::to_string(rep.quotient_characteristic));
        rep.findings.push_back("A/" + ideal + (rep.iso.found ? " is" : " is not") + " isomorphic to W_2(F_" +
                               std::to_string(p2) + ")" + (rep.iso.found ? "" : ": " + rep.iso.reason));
    }
    return rep;
}

}  // namespace wittrep
