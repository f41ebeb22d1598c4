#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "localh/polynomial.hpp"
#include "localh/simplicial.hpp"
#include "localh/subdivision.hpp"

namespace localh {

struct PosetElement {
    std::string id;
    int dim = 0;

    friend bool operator==(const PosetElement&, const PosetElement&) = default;
};

/// Face poset of a regular CW complex: cells with dimensions and cover
/// relations, graded by dimension. Optionally carries a carrier map onto the
/// faces of a base simplicial complex.
///
/// Regularity of the attaching maps cannot be seen from the poset and is
/// taken on trust.
class FacePoset {
public:
    using Cover = std::pair<std::string, std::string>;  // (lower, upper)

    FacePoset() = default;
    /// Throws Ungraded when a cover does not raise the dimension by exactly
    /// one or a cell of positive dimension covers nothing. Without an explicit
    /// base, a carrier map is read over the simplex on the union of its labels.
    FacePoset(std::vector<PosetElement> elements, std::vector<Cover> covers,
              std::map<std::string, LabelSet> carrier = {},
              std::optional<SimplicialComplex> base = std::nullopt);

    std::size_t size() const noexcept { return elements_.size(); }
    const std::vector<PosetElement>& elements() const noexcept { return elements_; }
    const std::vector<Cover>& covers() const noexcept { return covers_; }
    /// Largest cell dimension plus one; 0 for the empty poset.
    std::size_t rank() const noexcept { return rank_; }

    std::optional<std::uint32_t> index(const std::string& id) const;
    const std::vector<std::uint32_t>& lower_covers(std::uint32_t i) const { return lower_.at(i); }
    const std::vector<std::uint32_t>& upper_covers(std::uint32_t i) const { return upper_.at(i); }
    /// Elements strictly below i, sorted.
    const std::vector<std::uint32_t>& down_set(std::uint32_t i) const { return down_.at(i); }

    bool has_carrier() const noexcept { return !carrier_.empty(); }
    const std::map<std::string, LabelSet>& carrier() const noexcept { return carrier_; }
    const SimplicialComplex& base() const noexcept { return base_; }

    /// Every cell's closure is a simplex (boolean interval).
    bool is_simplicial() const;
    /// Subposet of everything at or below the given elements; no carrier.
    FacePoset order_ideal(const std::vector<std::uint32_t>& generators) const;

    friend bool operator==(const FacePoset& a, const FacePoset& b) {
        return a.elements_ == b.elements_ && a.covers_ == b.covers_ && a.carrier_ == b.carrier_ &&
               a.base_ == b.base_;
    }

private:
    std::vector<PosetElement> elements_;
    std::vector<Cover> covers_;
    std::map<std::string, LabelSet> carrier_;
    SimplicialComplex base_;
    std::size_t rank_ = 0;
    std::map<std::string, std::uint32_t> index_;
    std::vector<std::vector<std::uint32_t>> lower_, upper_, down_;
};

/// Cell ids are the face's labels joined with '|'.
std::string face_id(const LabelSet& face);
FacePoset face_poset(const SimplicialComplex& k);
/// Face poset of the total complex with its carriers and base.
FacePoset face_poset(const Subdivision& s);

/// Order complex: vertices are cell ids, faces are chains.
SimplicialComplex sd(const FacePoset& p);

/// Barycentric subdivision with the carrier of a chain taken from its top cell.
Subdivision sd_subdivision(const FacePoset& p);
Subdivision sd_subdivision(const Subdivision& s);

/// Flag f- and h-numbers indexed by S ⊆ {1..rank}, encoded as a bit mask
/// with bit i-1 standing for i.
struct FlagVectors {
    std::size_t rank = 0;
    std::vector<Integer> f;
    std::vector<Integer> h;

    static std::uint64_t mask(const std::vector<std::size_t>& s);
};

FlagVectors flag_vectors(const FacePoset& p);

/// Homogeneous polynomial in noncommuting a, b; words all have length degree.
struct AbPolynomial {
    std::size_t degree = 0;
    std::map<std::string, Integer> coeffs;  // zero coefficients never stored

    void add(const std::string& word, const Integer& c);
    /// Appends the letter to every word.
    AbPolynomial times(char letter) const;
    /// a -> 1, b -> x.
    Polynomial at_a_one() const;
    std::string to_string() const;

    friend AbPolynomial operator-(const AbPolynomial& p, const AbPolynomial& q);
    friend bool operator==(const AbPolynomial&, const AbPolynomial&) = default;
};

/// Homogeneous polynomial in noncommuting c (degree 1) and d (degree 2).
struct CdPolynomial {
    std::size_t degree = 0;
    std::map<std::string, Integer> coeffs;

    /// c -> a+b, d -> ab+ba.
    AbPolynomial expand() const;
    /// c -> 1+x, d -> 2x.
    Polynomial evaluate() const;
    bool is_nonnegative() const;
    std::string to_string() const;

    friend bool operator==(const CdPolynomial&, const CdPolynomial&) = default;
};

struct NotExpressible {
    /// An ab-word whose coefficient the best cd candidate misses.
    std::string residual_word;
    Integer residual;
    std::string reason;
};

using CdResult = std::variant<CdPolynomial, NotExpressible>;

/// Ψ = Σ_S h_S u_S, with u_S carrying b exactly at the positions in S.
AbPolynomial ab_index(const FacePoset& p);
std::vector<std::string> cd_words(std::size_t degree);
CdResult cd_extract(const AbPolynomial& psi);

/// The boundary of a poset ball: the order ideal of the (rank-2)-cells
/// covered by exactly one top cell. Throws BoundaryUndetermined when the
/// poset is not pure or a (rank-2)-cell lies in three or more top cells.
FacePoset poset_boundary(const FacePoset& p);

struct EkDifference {
    AbPolynomial psi_difference;  // Ψ_Γ − Ψ_∂Γ · a
    CdResult phi;
    Polynomial h_difference;      // h(sd Γ) − h(∂ sd Γ)
    /// The poset is not simplicial, so the boundary is the poset convention.
    bool boundary_by_convention = false;
};

EkDifference ek_difference(const FacePoset& p);

}  // namespace localh
