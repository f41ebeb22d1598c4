#include "localh/simplicial.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <unordered_map>
#include <utility>

#include "localh/error.hpp"

namespace localh {

namespace {

const std::vector<Face>& empty_face_list() {
    static const std::vector<Face> empty;
    return empty;
}

std::vector<Face> codim1_subfaces(const Face& face) {
    std::vector<Face> out;
    out.reserve(face.size());
    for (std::size_t skip = 0; skip < face.size(); ++skip) {
        Face sub;
        sub.reserve(face.size() - 1);
        for (std::size_t i = 0; i < face.size(); ++i)
            if (i != skip) sub.push_back(face[i]);
        out.push_back(std::move(sub));
    }
    return out;
}

struct Built {
    std::vector<Face> facets;
    std::vector<std::vector<Face>> table;
};

// Level k holds faces of size k. Each level is the union of the input faces of
// that size and the codim-1 subfaces of the level above; a face no face above
// covers is a facet.
Built build_table(std::vector<Face> input) {
    Built out;
    if (input.empty()) return out;
    std::size_t top = 0;
    for (auto& f : input) {
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            fail(ErrorKind::InvalidArgument, "face with a repeated vertex");
        top = std::max(top, f.size());
    }
    std::vector<std::vector<Face>> by_size(top + 1);
    for (auto& f : input) by_size[f.size()].push_back(std::move(f));

    out.table.resize(top + 1);
    std::vector<Face> covered_from_above;
    for (std::size_t k = top + 1; k-- > 0;) {
        std::vector<std::pair<Face, bool>> level;
        level.reserve(by_size[k].size() + covered_from_above.size());
        for (auto& f : by_size[k]) level.emplace_back(std::move(f), false);
        for (auto& f : covered_from_above) level.emplace_back(std::move(f), true);
        std::sort(level.begin(), level.end());
        std::vector<Face> faces;
        faces.reserve(level.size());
        for (std::size_t i = 0; i < level.size();) {
            std::size_t j = i;
            bool covered = false;
            while (j < level.size() && level[j].first == level[i].first) covered |= level[j++].second;
            if (!covered) out.facets.push_back(level[i].first);
            faces.push_back(std::move(level[i].first));
            i = j;
        }
        covered_from_above.clear();
        if (k > 0)
            for (const auto& f : faces)
                for (auto& s : codim1_subfaces(f)) covered_from_above.push_back(std::move(s));
        out.table[k] = std::move(faces);
    }
    std::sort(out.facets.begin(), out.facets.end());
    return out;
}

}  // namespace

LabelSet make_label_set(std::vector<std::string> labels) {
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
        fail(ErrorKind::InvalidArgument, "repeated vertex label in a face");
    return labels;
}

std::string join_labels(const LabelSet& labels, char sep) {
    std::string out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += sep;
        out += labels[i];
    }
    return out;
}

Integer FVector::f(int dim) const {
    const auto idx = static_cast<std::size_t>(dim + 1);
    return dim >= -1 && idx < counts.size() ? counts[idx] : Integer(0);
}

SimplicialComplex::SimplicialComplex()
    : table_(std::make_shared<const std::vector<std::vector<Face>>>()) {}

SimplicialComplex SimplicialComplex::empty_complex() { return from_id_faces({}, {Face{}}); }

SimplicialComplex SimplicialComplex::simplex(std::vector<std::string> vertices) {
    return from_facets({make_label_set(std::move(vertices))});
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<LabelSet>& faces) {
    std::vector<std::string> labels;
    for (const auto& f : faces) labels.insert(labels.end(), f.begin(), f.end());
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    std::vector<Face> ids;
    ids.reserve(faces.size());
    for (const auto& f : faces) {
        Face face;
        face.reserve(f.size());
        for (const auto& l : f)
            face.push_back(static_cast<VertexId>(
                std::lower_bound(labels.begin(), labels.end(), l) - labels.begin()));
        ids.push_back(std::move(face));
    }
    return from_id_faces(labels, ids);
}

SimplicialComplex SimplicialComplex::from_id_faces(const std::vector<std::string>& sorted_labels,
                                                   const std::vector<Face>& faces) {
    std::vector<char> used(sorted_labels.size(), 0);
    for (const auto& f : faces)
        for (VertexId v : f) {
            if (v >= sorted_labels.size()) fail(ErrorKind::InvalidArgument, "vertex id out of range");
            used[v] = 1;
        }
    std::vector<VertexId> remap(sorted_labels.size(), 0);
    SimplicialComplex k;
    for (std::size_t i = 0; i < sorted_labels.size(); ++i) {
        if (!used[i]) continue;
        if (!k.labels_.empty() && !(k.labels_.back() < sorted_labels[i]))
            fail(ErrorKind::InvalidArgument, "label table is not sorted and unique");
        remap[i] = static_cast<VertexId>(k.labels_.size());
        k.labels_.push_back(sorted_labels[i]);
    }
    std::vector<Face> input;
    input.reserve(faces.size());
    for (const auto& f : faces) {
        Face g;
        g.reserve(f.size());
        for (VertexId v : f) g.push_back(remap[v]);
        input.push_back(std::move(g));
    }
    Built built = build_table(std::move(input));
    k.facets_ = std::move(built.facets);
    k.table_ = std::make_shared<const std::vector<std::vector<Face>>>(std::move(built.table));
    return k;
}

int SimplicialComplex::dimension() const {
    if (is_void()) fail(ErrorKind::VoidComplex, "the void complex has no dimension");
    return static_cast<int>(table_->size()) - 2;
}

bool SimplicialComplex::is_pure() const {
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const Face& f) { return f.size() == facets_.front().size(); });
}

std::optional<VertexId> SimplicialComplex::find_vertex(std::string_view label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return std::nullopt;
    return static_cast<VertexId>(it - labels_.begin());
}

const std::vector<Face>& SimplicialComplex::faces(int dim) const {
    const auto idx = static_cast<std::size_t>(dim + 1);
    if (dim < -1 || idx >= table_->size()) return empty_face_list();
    return (*table_)[idx];
}

std::size_t SimplicialComplex::num_faces() const noexcept {
    std::size_t n = 0;
    for (const auto& level : *table_) n += level.size();
    return n;
}

std::optional<std::size_t> SimplicialComplex::face_index(const Face& face) const {
    const auto& level = faces(static_cast<int>(face.size()) - 1);
    auto it = std::lower_bound(level.begin(), level.end(), face);
    if (it == level.end() || *it != face) return std::nullopt;
    return static_cast<std::size_t>(it - level.begin());
}

bool SimplicialComplex::contains(const Face& face) const { return face_index(face).has_value(); }

Face SimplicialComplex::to_face(const LabelSet& labels) const {
    Face face;
    face.reserve(labels.size());
    for (const auto& l : labels) {
        auto v = find_vertex(l);
        if (!v) fail(ErrorKind::NotAFace, "unknown vertex label '" + l + "'");
        face.push_back(*v);
    }
    std::sort(face.begin(), face.end());
    if (std::adjacent_find(face.begin(), face.end()) != face.end())
        fail(ErrorKind::InvalidArgument, "repeated vertex label in face {" + join_labels(labels) + "}");
    return face;
}

LabelSet SimplicialComplex::to_labels(const Face& face) const {
    LabelSet out;
    out.reserve(face.size());
    for (VertexId v : face) out.push_back(labels_.at(v));
    return out;
}

std::vector<LabelSet> SimplicialComplex::labeled_facets() const {
    std::vector<LabelSet> out;
    out.reserve(facets_.size());
    for (const auto& f : facets_) out.push_back(to_labels(f));
    return out;
}

SimplicialComplex SimplicialComplex::generated_by(const std::vector<Face>& faces) const {
    return from_id_faces(labels_, faces);
}

const std::vector<Face>& faces(const SimplicialComplex& k, int dim) { return k.faces(dim); }

FVector f_vector(const SimplicialComplex& k) {
    if (k.is_void()) fail(ErrorKind::VoidComplex, "f-vector of the void complex");
    FVector f;
    for (int dim = -1; dim <= k.dimension(); ++dim) f.counts.emplace_back(k.faces(dim).size());
    return f;
}

Polynomial h_from_f(const FVector& f) {
    if (f.counts.empty()) fail(ErrorKind::VoidComplex, "h-polynomial of the void complex");
    const long long d = static_cast<long long>(f.d());
    std::vector<Integer> h(static_cast<std::size_t>(d) + 1);
    for (long long i = 0; i <= d; ++i) {
        Integer acc = 0;
        for (long long j = 0; j <= i; ++j) {
            Integer term = binomial(d - j, i - j) * f.counts[static_cast<std::size_t>(j)];
            if ((i - j) % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
        h[static_cast<std::size_t>(i)] = std::move(acc);
    }
    return Polynomial(std::move(h));
}

Polynomial h_polynomial(const SimplicialComplex& k) { return h_from_f(f_vector(k)); }

SimplicialComplex link(const SimplicialComplex& k, const Face& face) {
    if (!k.contains(face)) fail(ErrorKind::NotAFace, "link: {" + join_labels(k.to_labels(face)) + "} is not a face");
    std::vector<Face> rest;
    for (const auto& facet : k.facets()) {
        if (!std::includes(facet.begin(), facet.end(), face.begin(), face.end())) continue;
        Face g;
        std::set_difference(facet.begin(), facet.end(), face.begin(), face.end(), std::back_inserter(g));
        rest.push_back(std::move(g));
    }
    return k.generated_by(rest);
}

SimplicialComplex link(const SimplicialComplex& k, const LabelSet& face) { return link(k, k.to_face(face)); }

SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l) {
    for (const auto& label : l.labels())
        if (k.find_vertex(label)) fail(ErrorKind::LabelCollision, "join: vertex label '" + label + "' occurs in both complexes");
    if (k.is_void() || l.is_void()) return {};
    std::vector<LabelSet> facets;
    for (const auto& a : k.labeled_facets())
        for (const auto& b : l.labeled_facets()) {
            LabelSet u = a;
            u.insert(u.end(), b.begin(), b.end());
            facets.push_back(make_label_set(std::move(u)));
        }
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex cone(const SimplicialComplex& k, const std::string& apex) {
    return join(k, SimplicialComplex::simplex({apex}));
}

SimplicialComplex boundary_complex(const SimplicialComplex& k) {
    if (k.is_void()) fail(ErrorKind::VoidComplex, "boundary of the void complex");
    if (!k.is_pure()) fail(ErrorKind::NotPure, "boundary_complex: complex is not pure");
    const int dim = k.dimension();
    if (dim < 0) return {};
    const auto& ridges = k.faces(dim - 1);
    std::vector<unsigned> count(ridges.size(), 0);
    for (const auto& facet : k.facets())
        for (const auto& r : codim1_subfaces(facet)) {
            auto idx = k.face_index(r);
            if (++count[*idx] > 2)
                fail(ErrorKind::RidgeInThreeFacets,
                     "boundary_complex: ridge {" + join_labels(k.to_labels(r)) + "} lies in three or more facets");
        }
    std::vector<Face> free;
    for (std::size_t i = 0; i < ridges.size(); ++i)
        if (count[i] == 1) free.push_back(ridges[i]);
    return k.generated_by(free);
}

std::size_t rank_z2(std::vector<std::vector<std::uint32_t>> columns) {
    std::unordered_map<std::uint32_t, std::size_t> pivot;
    std::vector<std::uint32_t> scratch;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        auto& col = columns[c];
        while (!col.empty()) {
            auto it = pivot.find(col.back());
            if (it == pivot.end()) {
                pivot.emplace(col.back(), c);
                ++rank;
                break;
            }
            const auto& other = columns[it->second];
            scratch.clear();
            std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                          std::back_inserter(scratch));
            col.swap(scratch);
        }
    }
    return rank;
}

std::vector<std::size_t> betti_z2(const SimplicialComplex& k) {
    if (k.is_void()) fail(ErrorKind::VoidComplex, "betti_z2 of the void complex");
    const int dim = k.dimension();
    if (dim < 0) return {};
    // rank[i] = rank of the boundary map out of dimension i; dimension 0 maps
    // onto the augmentation.
    std::vector<std::size_t> rank(static_cast<std::size_t>(dim) + 2, 0);
    rank[0] = k.faces(0).empty() ? 0 : 1;
    for (int i = 1; i <= dim; ++i) {
        std::vector<std::vector<std::uint32_t>> cols;
        cols.reserve(k.faces(i).size());
        for (const auto& f : k.faces(i)) {
            std::vector<std::uint32_t> col;
            for (const auto& s : codim1_subfaces(f)) col.push_back(static_cast<std::uint32_t>(*k.face_index(s)));
            std::sort(col.begin(), col.end());
            cols.push_back(std::move(col));
        }
        rank[static_cast<std::size_t>(i)] = rank_z2(std::move(cols));
    }
    std::vector<std::size_t> betti;
    for (int i = 0; i <= dim; ++i) {
        const auto n = k.faces(i).size();
        betti.push_back(n - rank[static_cast<std::size_t>(i)] - rank[static_cast<std::size_t>(i) + 1]);
    }
    return betti;
}

}  // namespace localh
