#pragma once

#include <optional>
#include <string>
#include <vector>

#include "localh/polynomial.hpp"
#include "localh/subdivision.hpp"

namespace localh {

/// h(∂Δ) of a simplicial (d-1)-ball from h(Δ) alone:
/// h_i(∂Δ) = Σ_{j≤i} (h_j − h_{d−j}), i = 0..d-1. Requires h_d = 0.
Polynomial boundary_h_from_h(const Polynomial& h, std::size_t d);

/// h(Δ) − h(∂Δ) from h(Δ): coefficient i is Σ_{j<i} (h_{d−j−1} − h_j).
Polynomial ball_h_difference_from_h(const Polynomial& h, std::size_t d);

/// h(Γ_F) − h(∂Γ_F) computed from the complexes, with the value 1 for F = ∅.
Polynomial restriction_h_difference(const Subdivision& s, BaseMask f);

/// ℓ_V = h(Γ) − h(∂Γ) + Σ_{F⊊V} ℓ_F(Γ_F) (x + ... + x^{d−|F|−1}), with the
/// ℓ_F themselves evaluated by the same recursion.
Polynomial lemma41_local_h(const Subdivision& s);

/// ℓ_V = Σ_{F⊆V} [h(Γ_F) − h(∂Γ_F)] 𝔡_{|V∖F|}.
Polynomial thm44_local_h(const Subdivision& s);

struct IdentityRecord {
    std::string name;
    /// Base face the record is about, when it is per restriction.
    std::optional<LabelSet> face;
    Polynomial lhs;
    Polynomial rhs;
    bool match = false;
    /// Set when one side could not be evaluated; match is then false.
    std::string error;
};

struct IdentityReport {
    std::vector<IdentityRecord> records;
    Polynomial local_h;
    std::size_t d = 0;
    bool symmetric = false;
    bool nonnegative = false;
    bool unimodal = false;
    GammaVector gamma;

    bool all_match() const;
    std::string to_table() const;
};

/// Checks every identity that applies to s. Identities needing a simplex base
/// are skipped for other bases; the derangement identities are run when d is
/// within the enumeration bound.
IdentityReport verify_all(const Subdivision& s);

}  // namespace localh
