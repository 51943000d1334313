#include "wittrep/report.hpp"

#include <chrono>
#include <random>
#include <set>

namespace wittrep {

json to_json(const Fq& x) { return x.coeffs(); }

json to_json(const WittFq& w) { return json::array({to_json(w.a0()), to_json(w.a1())}); }

json to_json(const GroupFq& g) {
    return json::array({json::array({to_json(g.a()), to_json(g.b())}), json::array({to_json(g.c()), to_json(g.d())})});
}

json to_json(const Matrix<Fq>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json rep_matrix_json(const Matrix<Fq>& m, const RepBasis& basis, const FieldContext& ctx) {
    return {{"p", ctx.p()}, {"q", ctx.q()}, {"dim", basis.dim()}, {"basis", basis.names}, {"matrix", to_json(m)}};
}

std::string_view to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skipped: return "skipped";
    }
    return "?";
}

json to_json(const CheckReport& r) {
    json j = {{"check", r.check}, {"p", r.p}, {"q", r.q}, {"status", to_string(r.status)}};
    if (!r.witness.is_null()) j["witness"] = r.witness;
    if (!r.details.is_null()) j["details"] = r.details;
    j["timing_ms"] = r.timing_ms;
    return j;
}

json to_json(const GaussianReport& r) {
    json j = {{"p", r.p}, {"applicable", r.applicable}};
    if (!r.note.empty()) j["note"] = r.note;
    if (!r.applicable) return j;
    j["split"] = r.split;
    if (r.split) j["prime_factor"] = std::to_string(r.pi_re) + "+" + std::to_string(r.pi_im) + "i";
    j["residue_field_size"] = r.residue_field_size;
    j["quotient_size"] = r.quotient_size;
    j["quotient_characteristic"] = r.quotient_characteristic;
    j["iso_target"] = r.iso_target;
    j["isomorphic"] = r.iso.found;
    if (!r.iso.found) j["iso_reason"] = r.iso.reason;
    if (!r.generator_images.empty()) j["image_of_i"] = r.generator_images;
    if (r.iso_vs_w2_fp2) {
        j["isomorphic_to_w2_fp2"] = r.iso_vs_w2_fp2->found;
        j["w2_fp2_reason"] = r.iso_vs_w2_fp2->reason;
    }
    j["findings"] = r.findings;
    return j;
}

// ---------------------------------------------------------------------------
// Suites

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"witt-iso", "group-identities", "faithfulness", "weights", "distops",
                                                "lie",      "filtration",       "jordan",       "gauss",   "hat-rep"};
    return names;
}

bool is_suite(const std::string& name) {
    for (const auto& s : suite_names())
        if (s == name) return true;
    return false;
}

std::string suite_inapplicable(const std::string& name, const FieldContext& ctx, const SuiteOptions& opts) {
    const unsigned p = ctx.p();
    const std::uint64_t q = ctx.q();
    if (name == "witt-iso" && p > 13) return "the Z/p^2 comparison covers p <= 13";
    if ((name == "faithfulness" || name == "hat-rep") && group_order(q) > opts.budget)
        return "group order " + std::to_string(group_order(q)) + " exceeds the budget " + std::to_string(opts.budget);
    if (name == "weights" && q <= 2ULL * p + 1)
        return "WindowTooSmall: integer weights need q >= 2p+2, got q = " + std::to_string(q);
    if (name == "gauss" && p == 2) return "BadPrime: 2 ramifies in Z[i]";
    if (name == "gauss" && p > 7) return "the Gaussian example covers odd p <= 7";
    if (q > 256 && name != "witt-iso" && name != "gauss") return "fields above 256 elements are not supported";
    return {};
}

namespace {

using Clock = std::chrono::steady_clock;

class SuiteRun {
public:
    SuiteRun(std::string suite, const FieldContext& ctx) : suite_(std::move(suite)), ctx_(ctx) {}

    /// fn fills details and witness and returns whether the check passed.
    template <class Fn>
    void check(const std::string& name, Fn&& fn) {
        CheckReport r;
        r.check = suite_ + "/" + name;
        r.p = ctx_.p();
        r.q = ctx_.q();
        const auto t0 = Clock::now();
        const bool ok = fn(r);
        r.timing_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        r.status = ok ? Status::Pass : Status::Fail;
        out.push_back(std::move(r));
    }

    void skip(const std::string& name, const std::string& reason) {
        CheckReport r;
        r.check = suite_ + "/" + name;
        r.p = ctx_.p();
        r.q = ctx_.q();
        r.status = Status::Skipped;
        r.witness = {{"reason", reason}};
        out.push_back(std::move(r));
    }

    std::vector<CheckReport> out;

private:
    std::string suite_;
    const FieldContext& ctx_;
};

json pair_json(const std::pair<GroupFq, GroupFq>& w) { return {{"g", to_string(w.first)}, {"h", to_string(w.second)}}; }

void suite_witt_iso(SuiteRun& run, const FieldContext& ctx) {
    run.check("digit_map_isomorphism", [&](CheckReport& r) {
        const auto rep = witt2_zmod_iso_check(ctx.p());
        r.details = {{"ring", "W2(F_" + std::to_string(ctx.p()) + ") -> Z/" + std::to_string(ctx.p() * ctx.p())},
                     {"checks", rep.checks}};
        if (rep.failure) r.witness = *rep.failure;
        return rep.passed;
    });
}

void suite_group_identities(SuiteRun& run, const FieldContext& ctx, const SuiteOptions& opts) {
    const auto ws = witt_elements(ctx);
    const auto els = ctx.elements();
    const unsigned p = ctx.p();

    run.check("torus_conjugates_x", [&](CheckReport& r) {
        std::uint64_t n = 0;
        for (const Fq& t : els) {
            if (t.is_zero()) continue;
            const GroupFq ph = gen_phi(t);
            const Fq t2 = t * t;
            const Fq t2p = t2.pow(p);
            for (const WittFq& w : ws) {
                ++n;
                if (!(conjugate(ph, gen_x(w)) == gen_x(WittFq(t2 * w.a0(), t2p * w.a1())))) {
                    r.witness = {{"t", to_json(t)}, {"w", to_json(w)}};
                    return false;
                }
            }
        }
        r.details = {{"checks", n}};
        return true;
    });

    run.check("torus_centralizes_z", [&](CheckReport& r) {
        std::uint64_t n = 0;
        for (const Fq& t : els) {
            if (t.is_zero()) continue;
            for (const Fq& s : els) {
                ++n;
                if (!(conjugate(gen_phi(t), gen_z(s)) == gen_z(s))) {
                    r.witness = {{"t", to_json(t)}, {"s", to_json(s)}};
                    return false;
                }
            }
        }
        r.details = {{"checks", n}};
        return true;
    });

    run.check("eta_homomorphism", [&](CheckReport& r) {
        std::mt19937_64 rng(opts.seed);
        std::uint64_t n = 0;
        const auto test = [&](const GroupFq& g, const GroupFq& h) {
            ++n;
            return eta(g * h) == eta(g) * eta(h);
        };
        for (int k = 0; k < 10'000; ++k) {
            const GroupFq g = random_element(ctx, rng), h = random_element(ctx, rng);
            if (!test(g, h)) {
                r.witness = pair_json({g, h});
                return false;
            }
        }
        const auto gens = generator_sweep(ctx);
        if (gens.size() * gens.size() <= opts.pair_budget) {
            for (const auto& g : gens)
                for (const auto& h : gens)
                    if (!test(g, h)) {
                        r.witness = pair_json({g, h});
                        return false;
                    }
        }
        r.details = {{"pairs", n}};
        return true;
    });

    run.check("x_element_orders", [&](CheckReport& r) {
        for (const WittFq& w : ws) {
            const std::uint64_t ord = element_order(gen_x(w));
            const std::uint64_t expect = !w.a0().is_zero() ? p * p : (w.a1().is_zero() ? 1 : p);
            if (ord != expect) {
                r.witness = {{"w", to_json(w)}, {"order", ord}};
                return false;
            }
        }
        r.details = {{"elements", ws.size()}, {"order_x_10", p * p}, {"order_x_01", p}};
        return true;
    });

    if (group_order(ctx.q()) <= opts.budget) {
        run.check("group_order", [&](CheckReport& r) {
            std::uint64_t n = 0, radical = 0;
            std::set<std::uint64_t> keys;
            const Sl2k id = Sl2k::identity(ctx.zero());
            for_each_group_element(ctx, opts.budget, [&](const GroupFq& g) {
                ++n;
                keys.insert(element_key(g));
                if (eta(g) == id) ++radical;
            });
            const std::uint64_t q = ctx.q();
            r.details = {{"order", n}, {"distinct", keys.size()}, {"expected", group_order(q)},
                         {"radical_order", radical}};
            return n == group_order(q) && keys.size() == n && radical == q * q * q;
        });
    } else {
        run.skip("group_order", "group order exceeds the enumeration budget");
    }

    if (p == 2) {
        run.skip("radical_invariant_subgroups",
                 "for p = 2 the finite-field orbit spans need not contain gamma(Z(1)); checked for odd p only");
    } else if (ctx.q() > 9) {
        run.skip("radical_invariant_subgroups", "exhaustive over sl_2(F_q) only for q <= 9");
    } else {
        run.check("radical_invariant_subgroups", [&](CheckReport& r) {
            const auto rep = lemma_generate_check(ctx, 100, opts.seed);
            r.details = {{"orbit_span_dim", rep.orbit_span_dim},   {"full_dim", rep.full_dim},
                         {"orbit_spans_all", rep.part1},           {"vectors_checked", rep.vectors_checked},
                         {"all_contain_z1", rep.part2},            {"equivariance_checks", rep.equivariance_checks},
                         {"gamma_equivariant", rep.equivariance}};
            if (rep.failure) r.witness = *rep.failure;
            return rep.passed();
        });
    }
}

void suite_faithfulness(SuiteRun& run, const FieldPtr& ctx, const SuiteOptions& opts) {
    const RhoEvaluator rho(ctx);
    bool enum_ok = false;
    run.check("injective", [&](CheckReport& r) {
        const auto rep = faithfulness_enum(rho, opts.budget);
        r.details = {{"dim", rho.dim()}, {"elements", rep.elements}, {"images", rep.distinct_images},
                     {"fingerprint_collisions", rep.hash_collisions}};
        if (rep.collision) r.witness = pair_json(*rep.collision);
        enum_ok = rep.passed();
        return enum_ok;
    });
    run.check("torus_and_z_criterion", [&](CheckReport& r) {
        const auto rep = faithfulness_lemma(*ctx, [&](const GroupFq& g) { return rho(g); });
        r.details = {{"torus_faithful", rep.torus_faithful}, {"z_nontrivial", rep.z_nontrivial},
                     {"agrees_with_enumeration", rep.passed() == enum_ok}};
        if (rep.torus_witness) r.witness = {{"t", to_json(*rep.torus_witness)}};
        return rep.passed() && rep.passed() == enum_ok;
    });
    run.check("homomorphism", [&](CheckReport& r) {
        const std::uint64_t order = group_order(ctx->q());
        HomomorphismReport rep;
        std::string mode;
        if (order * order <= opts.pair_budget) {
            mode = "exhaustive";
            rep = homomorphism_check_exhaustive(rho, opts.budget, opts.pair_budget);
        } else {
            mode = "sampled";
            std::mt19937_64 rng(opts.seed);
            std::vector<std::pair<GroupFq, GroupFq>> pairs;
            for (int k = 0; k < 10'000; ++k) pairs.emplace_back(random_element(*ctx, rng), random_element(*ctx, rng));
            const auto gens = generator_sweep(*ctx);
            for (const auto& g : gens)
                for (const auto& h : gens)
                    if (pairs.size() < opts.pair_budget) pairs.emplace_back(g, h);
            rep = homomorphism_check_pairs(rho, pairs);
        }
        r.details = {{"mode", mode}, {"pairs", rep.pairs_checked}};
        if (rep.witness) r.witness = pair_json(*rep.witness);
        return rep.passed;
    });
}

void suite_weights(SuiteRun& run, const FieldPtr& ctx) {
    const unsigned p = ctx->p();
    const WeightDecomposition wd = weight_decomposition(ctx);
    json multiset = json::object();
    for (const auto& [w, d] : wd.multiset()) multiset[std::to_string(w)] = d;
    run.check("multiset", [&](CheckReport& r) {
        r.details = {{"multiset", multiset}, {"basis_weights", wd.basis_weights}, {"t0", to_json(wd.generator)}};
        return wd.basis_weights.size() == p + 3;
    });
    run.check("symmetric", [&](CheckReport& r) {
        r.details = {{"multiset", multiset}};
        return wd.symmetric();
    });
    run.check("distinct_weights", [&](CheckReport& r) {
        r.details = {{"distinct", wd.distinct()}, {"lower_bound", p + 1}};
        return wd.distinct() >= p + 1;
    });
    run.check("repeated_weight", [&](CheckReport& r) {
        r.details = {{"max_multiplicity", wd.max_multiplicity()}};
        return wd.max_multiplicity() >= 2;
    });
    run.check("weight_chain", [&](CheckReport& r) {
        try {
            const auto chain = weight_chain_witness(distribution_table(ctx), wd);
            r.details = {{"s", chain.s}, {"lambda", chain.lambda}, {"weights", chain.weights},
                         {"start", make_rep_basis(p).names[chain.start_basis_index]}};
            return chain.weights.size() == p + 1;
        } catch (const Error& e) {
            r.witness = e.what();
            return false;
        }
    });
}

void suite_distops(SuiteRun& run, const FieldPtr& ctx, const SuiteOptions& opts) {
    const DistTable table = distribution_table(ctx);
    std::optional<WeightDecomposition> wd;
    if (ctx->q() > 2ULL * ctx->p() + 1) wd = weight_decomposition(ctx);
    json indices = json::array();
    for (const auto& [ij, m] : table.psi) indices.push_back({ij.first, ij.second});
    for (const auto& law : distribution_laws(table, wd, 20, opts.seed)) {
        run.check(law.law, [&](CheckReport& r) {
            r.details = {{"checks", law.checks}, {"operators", indices}};
            if (!law.passed) r.witness = law.witness;
            return law.passed;
        });
    }
    if (!wd) run.skip("weight_homogeneity", "integer weights need q >= 2p+2");
}

void suite_lie(SuiteRun& run, const FieldPtr& ctx) {
    const unsigned p = ctx->p();
    const RepBasis basis = make_rep_basis(p);
    const std::size_t a1 = p + 1, top_a = 0, top_b = p;
    run.check("kernel", [&](CheckReport& r) {
        const LieKernel k = drho_kernel(*ctx);
        json vecs = json::array();
        for (const auto& v : k.basis) {
            json vec = json::array();
            for (const auto& x : v) vec.push_back(to_json(x));
            vecs.push_back(vec);
        }
        r.details = {{"dimension", k.dimension}, {"kernel", vecs}, {"coordinates", {"e", "f", "h", "e1", "f1", "z"}}};
        if (p > 2) return k.dimension == 0;
        // p = 2: spanned by the h-direction
        bool h_only = k.dimension == 1;
        for (std::size_t i = 0; h_only && i < 6; ++i) h_only = (i == 2) != k.basis[0][i].is_zero();
        return h_only;
    });
    const auto single_image = [&](LieTag tag, std::size_t col, std::size_t row, CheckReport& r) {
        const Matrix<Fq> m = drho(tag, *ctx);
        const auto column = m.column(col);
        bool ok = !column[row].is_zero();
        for (std::size_t i = 0; i < column.size(); ++i)
            if (i != row) ok = ok && column[i].is_zero();
        r.details = {{"image_of", basis.names[col]}, {"multiple_of", basis.names[row]}, {"coefficient", to_json(column[row])}};
        return ok;
    };
    run.check("z_on_A1", [&](CheckReport& r) { return single_image(LieTag::z, a1, top_a, r); });
    run.check("e1_on_A1", [&](CheckReport& r) { return single_image(LieTag::e1, a1, top_b, r); });
    run.check("first_order_additivity", [&](CheckReport& r) {
        std::uint64_t n = 0;
        for (std::size_t i = 0; i < all_lie_tags.size(); ++i) {
            for (std::size_t j = i + 1; j < all_lie_tags.size(); ++j) {
                ++n;
                const auto x = lie_realization(all_lie_tags[i], *ctx), y = lie_realization(all_lie_tags[j], *ctx);
                if (!(drho_of(x * y) == drho_of(x) + drho_of(y))) {
                    r.witness = {{"pair", {to_string(all_lie_tags[i]), to_string(all_lie_tags[j])}}};
                    return false;
                }
            }
        }
        r.details = {{"pairs", n}};
        return true;
    });
    if (p == 2) {
        run.skip("radical_acts_trivially", "stated for p > 2");
    } else {
        run.check("radical_acts_trivially", [&](CheckReport& r) {
            const GroupDual c = to_dual(gen_x(WittFq(ctx->zero(), ctx->one())));
            for (LieTag t : all_lie_tags) {
                const GroupDual x = lie_realization(t, *ctx);
                if (!(drho_of(conjugate(c, x)) == drho_of(x))) {
                    r.witness = {{"tag", to_string(t)}};
                    return false;
                }
            }
            r.details = {{"conjugator", "X((0,1))"}, {"realizations", 6}};
            return true;
        });
    }
}

void suite_filtration(SuiteRun& run, const FieldPtr& ctx) {
    run.check("fixed_point_layers", [&](CheckReport& r) {
        try {
            const auto rep = fixed_space_filtration(ctx);
            bool trivial = true;
            for (bool t : rep.trivial_on_layer) trivial = trivial && t;
            bool nonzero = true;
            for (auto d : rep.layers) nonzero = nonzero && d > 0;
            r.details = {{"layers", rep.layers},
                         {"total", rep.total()},
                         {"dim", ctx->p() + 3},
                         {"fixed_dim_by_rank", rep.fixed_dim_rank_check},
                         {"radical_trivial_on_layers", trivial}};
            return trivial && nonzero && rep.total() == ctx->p() + 3 && rep.layers.front() == rep.fixed_dim_rank_check;
        } catch (const Error& e) {
            r.witness = e.what();
            return false;
        }
    });
}

void suite_jordan(SuiteRun& run, const FieldPtr& ctx) {
    const unsigned p = ctx->p();
    const Fq zero = ctx->zero(), one = ctx->one();
    run.check("x_orders", [&](CheckReport& r) {
        const auto o10 = element_order(gen_x(WittFq(one, zero)));
        const auto o01 = element_order(gen_x(WittFq(zero, one)));
        r.details = {{"order_x_10", o10}, {"order_x_01", o01}};
        return o10 == p * p && o01 == p;
    });
    run.check("regular_block_order", [&](CheckReport& r) {
        const auto fp = make_field_context(p, 1);
        const auto jt = jordan_type(jordan_matrix(*fp, {p + 1}));
        r.details = {{"size", p + 1}, {"order", jt.order}};
        return jt.order == p * p;
    });
    run.check("rho_x10_jordan_type", [&](CheckReport& r) {
        const auto jt = jordan_type(rho_matrix(gen_x(WittFq(one, zero))));
        r.details = {{"partition", jt.partition}, {"order", jt.order}};
        return jt.partition.front() >= p + 1 && jt.order == p * p;
    });
    run.check("rho_x01_jordan_type", [&](CheckReport& r) {
        const auto jt = jordan_type(rho_matrix(gen_x(WittFq(zero, one))));
        r.details = {{"partition", jt.partition}, {"order", jt.order}};
        return jt.order == p;
    });
    run.check("regular_centralizers", [&](CheckReport& r) {
        json dims = json::object();
        bool ok = true;
        for (std::size_t n = 2; n <= 6; ++n) {
            const std::size_t d = centralizer_dim(jordan_matrix(*ctx, {n}));
            dims[std::to_string(n)] = d;
            ok = ok && d == n;
        }
        r.details = {{"dims", dims}};
        return ok;
    });
}

void suite_gauss(SuiteRun& run, const FieldContext& ctx) {
    run.check("example", [&](CheckReport& r) {
        const auto rep = gaussian_example_report(ctx.p());
        r.details = to_json(rep);
        const std::uint64_t p2 = static_cast<std::uint64_t>(ctx.p()) * ctx.p();
        const std::uint64_t expected_residue = rep.split ? ctx.p() : p2;
        return rep.applicable && rep.iso.found && rep.residue_field_size == expected_residue &&
               rep.quotient_size == (rep.split ? p2 : p2 * p2);
    });
}

void suite_hat_rep(SuiteRun& run, const FieldContext& ctx, const SuiteOptions& opts) {
    const auto group = enumerate_hat_group(ctx, opts.budget);
    run.check("kernel", [&](CheckReport& r) {
        std::vector<HatElement> kernel;
        for (const auto& x : group)
            if (hat_rep_matrix(x).is_identity()) kernel.push_back(x);
        const Sl2k id = Sl2k::identity(ctx.zero());
        const Sl2k minus{-id.a, id.b, id.c, -id.d};
        bool ok = kernel.size() == (ctx.p() == 2 ? 1U : 2U);
        json ks = json::array();
        for (const auto& x : kernel) {
            ok = ok && x.v.is_zero() && (x.a == id || x.a == minus);
            ks.push_back({{"v", {to_json(x.v.x), to_json(x.v.y), to_json(x.v.z)}},
                          {"a", {to_json(x.a.a), to_json(x.a.b), to_json(x.a.c), to_json(x.a.d)}}});
        }
        r.details = {{"group_order", group.size()}, {"kernel_size", kernel.size()}, {"kernel", ks},
                     {"dim", 4}, {"faithful_dim", ctx.p() + 3}};
        return ok && 4 < ctx.p() + 3;
    });
    run.check("homomorphism", [&](CheckReport& r) {
        std::vector<Matrix<Fq>> mats;
        mats.reserve(group.size());
        for (const auto& x : group) mats.push_back(hat_rep_matrix(x));
        std::uint64_t n = 0;
        const auto test = [&](std::size_t i, std::size_t j) {
            ++n;
            return hat_rep_matrix(hat_group_mul(group[i], group[j])) == mats[i] * mats[j];
        };
        const std::uint64_t size = group.size();
        if (size * size <= opts.pair_budget) {
            for (std::size_t i = 0; i < size; ++i)
                for (std::size_t j = 0; j < size; ++j)
                    if (!test(i, j)) {
                        r.witness = {{"i", i}, {"j", j}};
                        return false;
                    }
            r.details = {{"mode", "exhaustive"}, {"pairs", n}};
        } else {
            std::mt19937_64 rng(opts.seed);
            std::uniform_int_distribution<std::size_t> pick(0, size - 1);
            for (int k = 0; k < 100'000; ++k) {
                const std::size_t i = pick(rng), j = pick(rng);
                if (!test(i, j)) {
                    r.witness = {{"i", i}, {"j", j}};
                    return false;
                }
            }
            r.details = {{"mode", "sampled"}, {"pairs", n}};
        }
        return true;
    });
}

}  // namespace

std::vector<CheckReport> run_suite(const std::string& name, const FieldPtr& ctx, const SuiteOptions& opts) {
    if (!is_suite(name)) throw Error(ErrorKind::InvalidArgument, "unknown suite " + name);
    if (const std::string why = suite_inapplicable(name, *ctx, opts); !why.empty())
        throw Error(ErrorKind::InvalidArgument, name + ": " + why);
    SuiteRun run(name, *ctx);
    if (name == "witt-iso") suite_witt_iso(run, *ctx);
    else if (name == "group-identities") suite_group_identities(run, *ctx, opts);
    else if (name == "faithfulness") suite_faithfulness(run, ctx, opts);
    else if (name == "weights") suite_weights(run, ctx);
    else if (name == "distops") suite_distops(run, ctx, opts);
    else if (name == "lie") suite_lie(run, ctx);
    else if (name == "filtration") suite_filtration(run, ctx);
    else if (name == "jordan") suite_jordan(run, ctx);
    else if (name == "gauss") suite_gauss(run, *ctx);
    else if (name == "hat-rep") suite_hat_rep(run, *ctx, opts);
    return std::move(run.out);
}

}  // namespace wittrep
