#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "localh/polynomial.hpp"

namespace localh {

using VertexId = std::uint32_t;
/// Sorted vertex ids of a face. Ids index the owning complex's label table.
using Face = std::vector<VertexId>;
/// Sorted vertex labels.
using LabelSet = std::vector<std::string>;

LabelSet make_label_set(std::vector<std::string> labels);
std::string join_labels(const LabelSet& labels, char sep = ',');

/// f_{-1}, f_0, ..., f_{dim}. Empty only for the void complex.
struct FVector {
    std::vector<Integer> counts;

    /// Number of faces of dimension dim, dim >= -1.
    Integer f(int dim) const;
    /// dim + 1 of the complex the vector was taken from.
    std::size_t d() const { return counts.empty() ? 0 : counts.size() - 1; }
    friend bool operator==(const FVector&, const FVector&) = default;
};

/// Abstract simplicial complex stored by its facets. Vertex ids follow the
/// lexicographic order of the labels, so comparing id-faces lexicographically
/// is the same as comparing their label sequences.
///
/// The void complex has no faces at all; the empty complex {∅} has exactly
/// one face, the empty set. The full face table is computed eagerly at
/// construction and shared between copies.
class SimplicialComplex {
public:
    /// The void complex.
    SimplicialComplex();

    static SimplicialComplex void_complex() { return {}; }
    static SimplicialComplex empty_complex();
    static SimplicialComplex simplex(std::vector<std::string> vertices);
    /// Complex generated by the given faces; non-maximal faces are dropped.
    /// Every vertex must occur in some face.
    static SimplicialComplex from_facets(const std::vector<LabelSet>& faces);
    /// Same, with faces given as ids into a sorted unique label table. Labels
    /// not used by any face are dropped and ids renumbered.
    static SimplicialComplex from_id_faces(const std::vector<std::string>& sorted_labels,
                                           const std::vector<Face>& faces);

    bool is_void() const noexcept { return facets_.empty(); }
    /// Largest face dimension, -1 for {∅}. Throws VoidComplex for the void complex.
    int dimension() const;
    bool is_pure() const;

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::size_t num_vertices() const noexcept { return labels_.size(); }
    std::optional<VertexId> find_vertex(std::string_view label) const;
    const std::string& label(VertexId v) const { return labels_.at(v); }

    const std::vector<Face>& facets() const noexcept { return facets_; }
    /// All faces of the given dimension, sorted. Empty outside [-1, dim].
    const std::vector<Face>& faces(int dim) const;
    std::size_t num_faces() const noexcept;
    bool contains(const Face& face) const;
    /// Position of the face within faces(|face|-1).
    std::optional<std::size_t> face_index(const Face& face) const;

    /// Ids of the given labels, sorted. Throws NotAFace on an unknown label.
    Face to_face(const LabelSet& labels) const;
    LabelSet to_labels(const Face& face) const;
    std::vector<LabelSet> labeled_facets() const;

    /// Subcomplex generated by the given faces of this complex.
    SimplicialComplex generated_by(const std::vector<Face>& faces) const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.labels_ == b.labels_ && a.facets_ == b.facets_;
    }

private:
    std::vector<std::string> labels_;
    std::vector<Face> facets_;
    std::shared_ptr<const std::vector<std::vector<Face>>> table_;  // index dim+1
};

/// All faces of dimension dim (downward closure of the facets).
const std::vector<Face>& faces(const SimplicialComplex& k, int dim);

FVector f_vector(const SimplicialComplex& k);
/// h_i = sum_j (-1)^(i-j) C(d-j, i-j) f_{j-1}, with d = f.d().
Polynomial h_from_f(const FVector& f);
Polynomial h_polynomial(const SimplicialComplex& k);

SimplicialComplex link(const SimplicialComplex& k, const Face& face);
SimplicialComplex link(const SimplicialComplex& k, const LabelSet& face);
SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l);
/// Cone with a fresh apex label.
SimplicialComplex cone(const SimplicialComplex& k, const std::string& apex);

/// Subcomplex generated by the ridges lying in exactly one facet. Requires a
/// pure complex whose ridges lie in at most two facets. The boundary of a
/// single point is {∅}; a closed pseudomanifold has void boundary.
SimplicialComplex boundary_complex(const SimplicialComplex& k);

/// Reduced Betti numbers over GF(2) in dimensions 0..dim(k).
std::vector<std::size_t> betti_z2(const SimplicialComplex& k);

/// Rank over GF(2) of a sparse matrix given by columns of sorted row indices.
std::size_t rank_z2(std::vector<std::vector<std::uint32_t>> columns);

}  // namespace localh
