#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "localh/polynomial.hpp"
#include "localh/simplicial.hpp"

namespace localh {

/// A face of the base complex as a bit set over base vertex ids.
using BaseMask = std::uint64_t;

inline constexpr std::size_t kMaxBaseVertices = 64;

inline int mask_size(BaseMask m) noexcept { return __builtin_popcountll(m); }
inline bool mask_subset(BaseMask a, BaseMask b) noexcept { return (a & ~b) == 0; }

/// Subdivision with every face and carrier spelled out by label. This is the
/// form constructions edit and files store.
struct LabeledSubdivision {
    SimplicialComplex base;
    std::vector<LabelSet> facets;
    /// Carrier of every nonempty face of the total complex.
    std::map<LabelSet, LabelSet> carrier;
};

/// A simplicial complex Γ (the total complex) with a carrier map σ from its
/// nonempty faces onto nonempty faces of a base complex Δ. Carriers are stored
/// for every face, parallel to total().faces(dim).
///
/// Construction checks totality and that carriers are base faces; the
/// topological conditions are checked by validate().
class Subdivision {
public:
    Subdivision(SimplicialComplex base, SimplicialComplex total,
                std::vector<std::vector<BaseMask>> carriers);

    /// Γ = Δ with σ the identity.
    static Subdivision trivial(const SimplicialComplex& base);
    /// Trivial subdivision of the simplex on v1..vd.
    static Subdivision trivial_simplex(std::size_t d);
    /// Throws MissingCarrier when a face has no carrier and NotAFace when a
    /// carrier key is not a face.
    static Subdivision from_labeled(const LabeledSubdivision& labeled);
    LabeledSubdivision to_labeled() const;

    const SimplicialComplex& base() const noexcept { return base_; }
    const SimplicialComplex& total() const noexcept { return total_; }

    bool base_is_simplex() const noexcept { return base_.facets().size() == 1; }
    /// Mask with every base vertex set.
    BaseMask full_mask() const noexcept;

    BaseMask carrier(const Face& face) const;
    BaseMask carrier_at(int dim, std::size_t index) const { return carriers_.at(static_cast<std::size_t>(dim)).at(index); }
    const std::vector<std::vector<BaseMask>>& carriers() const noexcept { return carriers_; }

    BaseMask to_mask(const LabelSet& base_face) const;
    BaseMask to_mask(const Face& base_face) const;
    Face mask_face(BaseMask m) const;
    LabelSet mask_labels(BaseMask m) const;
    bool is_base_face(BaseMask m) const;
    /// Every face of the base including the empty one, by size then value.
    std::vector<BaseMask> base_faces() const;

private:
    SimplicialComplex base_;
    SimplicialComplex total_;
    std::vector<std::vector<BaseMask>> carriers_;  // [dim][index]
};

/// f-vectors of all restrictions Γ_F, built from one pass over the carriers.
class RestrictionCounts {
public:
    explicit RestrictionCounts(const Subdivision& s);

    /// f-vector of Γ_F, including the empty face. {∅} for F = ∅.
    FVector f_vector(BaseMask f) const;
    Polynomial h(BaseMask f) const { return h_from_f(f_vector(f)); }

private:
    std::vector<std::pair<BaseMask, std::vector<std::size_t>>> buckets_;
};

/// Γ_F = σ^{-1}(2^F) as a complex. Throws NotASubcomplex when the faces with
/// carrier inside F are not closed under inclusion.
SimplicialComplex restricted_complex(const Subdivision& s, BaseMask f);

/// The subdivision Γ_F of the simplex 2^F.
Subdivision restriction(const Subdivision& s, const LabelSet& base_face);
Subdivision restriction(const Subdivision& s, BaseMask base_face);

struct BaseFaceReport {
    LabelSet face;
    bool nonvoid = false;
    bool subcomplex = false;
    bool pure = false;
    bool dimension_ok = false;
    bool pseudomanifold = false;
    bool betti_ball = false;
    bool boundary_betti_sphere = false;
    bool interior_condition = false;

    bool ok() const;
    std::vector<std::string> failures() const;
};

/// Outcome of the weak ball check: purity, pseudomanifold, trivial reduced
/// GF(2) homology, sphere homology of the boundary, and the interior
/// condition on every restriction, plus monotonicity of the carrier map.
/// Passing is necessary for a topological subdivision, not sufficient.
struct ValidityReport {
    std::vector<BaseFaceReport> faces;
    bool carrier_monotone = true;
    std::optional<std::pair<LabelSet, LabelSet>> monotone_witness;  // (smaller, larger)

    bool valid_weak() const;
    /// "valid-weak" or "invalid(<reason>@{face}; ...)".
    std::string verdict() const;
    std::vector<std::string> reasons() const;
};

ValidityReport validate(const Subdivision& s);

struct PredicateResult {
    bool holds = true;
    LabelSet witness_face;
    LabelSet witness_base_face;

    explicit operator bool() const noexcept { return holds; }
};

/// No face E and base face F with dim F < dim E such that every vertex of E
/// has its carrier inside F.
PredicateResult is_quasi_geometric(const Subdivision& s);
/// For every face E and base face F: if every vertex of E lies in Γ_F then E does.
PredicateResult is_vertex_induced(const Subdivision& s);

/// ℓ_V(Γ,x) = Σ_{F⊆V} (-1)^{d-|F|} h(Γ_F,x). Requires a simplex base.
Polynomial local_h(const Subdivision& s);
/// ℓ_F(Γ_F,x) for a face F of an arbitrary base.
Polynomial local_h_of(const Subdivision& s, const RestrictionCounts& counts, BaseMask f);
GammaVector local_gamma(const Subdivision& s);

/// Σ_{F∈Δ} ℓ_F(Γ_F,x) h(link_Δ F, x). Requires a pure base.
Polynomial h_via_locality(const Subdivision& s);

}  // namespace localh
