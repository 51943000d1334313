#pragma once

// Checks run against rho_p and the group: torus weights, the coefficient
// operators of rho(X((a,b))), weight chains, the filtration by R-fixed
// points, faithfulness, Jordan types and the Gaussian-integer example.

#include "wittrep/finite_ring.hpp"
#include "wittrep/rep.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wittrep {

// ---------------------------------------------------------------------------
// Weights

struct WeightDecomposition {
    Fq generator;                      ///< primitive t0 used for phi(t0)
    std::vector<int> basis_weights;    ///< weight of each basis vector
    std::map<int, std::vector<std::size_t>> spaces;  ///< weight -> basis indices

    std::map<int, std::size_t> multiset() const;
    std::size_t distinct() const { return spaces.size(); }
    std::size_t max_multiplicity() const;
    bool symmetric() const;
};

/// Reads rho_p(phi(t0)) (asserted diagonal) by discrete logarithm and lifts
/// exponents to the window (-(q-1)/2, (q-1)/2]. WindowTooSmall if q <= 2p+1.
WeightDecomposition weight_decomposition(const FieldPtr& ctx);

// ---------------------------------------------------------------------------
// Coefficient operators psi_{i,j}: rho(X((a,b))) = sum a^i b^j psi_{i,j}

struct DistTable {
    FieldPtr ctx;
    std::map<std::pair<unsigned, unsigned>, Matrix<Fq>> psi;

    /// sum a^i b^j psi_{i,j}
    Matrix<Fq> specialize(const Fq& a, const Fq& b) const;
};

DistTable distribution_table(const FieldPtr& ctx);

struct LawResult {
    std::string law;
    bool passed = true;
    std::uint64_t checks = 0;
    std::string witness;
};

/// psi_00 = I; pairwise commutativity; psi^(p^2) = 0 off (0,0); each psi_{i,j}
/// raises weights by 2i + 2pj (in the phi(t) eigenvalue exponents used here);
/// sum_i psi_{i,0}^p = rho(X((0,1))); and random specializations agree with
/// direct evaluation. Weight homogeneity needs a weight decomposition.
std::vector<LawResult> distribution_laws(const DistTable& table, const std::optional<WeightDecomposition>& wd,
                                         std::size_t specializations, std::uint64_t seed);

struct WeightChain {
    unsigned s = 0;
    int lambda = 0;
    std::size_t start_basis_index = 0;
    std::vector<int> weights;  ///< lambda + 2 s j, 0 <= j <= p
};

/// Finds s > 0 with psi_{s,0}^p != 0 and a basis weight vector v with
/// psi_{s,0}^p v != 0; the vectors psi_{s,0}^j v are nonzero of weights
/// lambda + 2 s j. NoWitness if none exists.
WeightChain weight_chain_witness(const DistTable& table, const WeightDecomposition& wd);

// ---------------------------------------------------------------------------
// R-fixed filtration

struct FiltrationReport {
    std::vector<std::size_t> layers;
    /// Per layer: every radical generator maps the new fixed space into the
    /// previous one.
    std::vector<bool> trivial_on_layer;
    std::size_t fixed_dim_rank_check = 0;  ///< dim - rank of stacked (rho(x) - I)
    std::size_t total() const;
};

/// Radical generators X((0,e)), Y((0,e)), Z(e) for e in the power basis of F_q.
std::vector<GroupFq> radical_generators(const FieldContext& ctx);

/// Iterates V_0 = 0, V_{k+1} = {v : (rho(x) - 1) v in V_k for all radical
/// generators x}. NonTerminating if some step is stationary short of V.
FiltrationReport fixed_space_filtration(const FieldPtr& ctx);

// ---------------------------------------------------------------------------
// Faithfulness

struct FaithfulnessEnumReport {
    std::uint64_t elements = 0;
    std::uint64_t distinct_images = 0;
    std::uint64_t hash_collisions = 0;  ///< equal fingerprints, different matrices
    std::optional<std::pair<GroupFq, GroupFq>> collision;
    bool passed() const { return !collision && distinct_images == elements; }
};

/// Maps every group element through rho_p, fingerprinting each image;
/// equal fingerprints are resolved by full comparison.
FaithfulnessEnumReport faithfulness_enum(const RhoEvaluator& rho, std::uint64_t budget);

struct FaithfulnessLemmaReport {
    bool torus_faithful = false;  ///< rho(phi(t)) != I for t != 1
    std::optional<Fq> torus_witness;
    bool z_nontrivial = false;  ///< rho(Z(1)) != I
    bool passed() const { return torus_faithful && z_nontrivial; }
};

using GroupRep = std::function<Matrix<Fq>(const GroupFq&)>;

FaithfulnessLemmaReport faithfulness_lemma(const FieldContext& ctx, const GroupRep& rep);
/// The one-dimensional trivial representation.
GroupRep trivial_rep(const FieldContext& ctx);

// ---------------------------------------------------------------------------
// Unipotent matrices

struct JordanType {
    std::vector<std::size_t> partition;  ///< block sizes, largest first
    std::uint64_t order = 1;
};

/// Block sizes from the ranks of (m - I)^j; NotUnipotent if m - I is not
/// nilpotent. The order is checked by direct powering.
JordanType jordan_type(const Matrix<Fq>& m);

/// dim {X : X m = m X}
std::size_t centralizer_dim(const Matrix<Fq>& m);

/// Block diagonal unipotent matrix with the given Jordan block sizes.
Matrix<Fq> jordan_matrix(const FieldContext& ctx, const std::vector<std::size_t>& blocks);

// ---------------------------------------------------------------------------
// Gaussian integers

struct GaussianReport {
    unsigned p = 0;
    bool applicable = false;
    std::string note;
    bool split = false;
    std::int64_t pi_re = 0, pi_im = 0;
    std::uint64_t residue_field_size = 0;  ///< |A/P| (split) or |A/(p)| (inert)
    std::uint64_t quotient_size = 0;       ///< |A/P^2| or |A/(p^2)|
    std::uint64_t quotient_characteristic = 0;
    std::string iso_target;
    IsoSearchResult iso;
    std::vector<std::string> generator_images;  ///< images of i, as target elements
    /// The quotient compared with W_2(F_{p^2}) as well, recording the reading
    /// in which the residue field is F_{p^2}.
    std::optional<IsoSearchResult> iso_vs_w2_fp2;
    std::vector<std::string> findings;
};

GaussianReport gaussian_example_report(unsigned p);

}  // namespace wittrep
