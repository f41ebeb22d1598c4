#include "localh/subdivision.hpp"

#include <algorithm>
#include <unordered_map>

#include "localh/error.hpp"

namespace localh {

namespace {

std::string braces(const LabelSet& labels) { return "{" + join_labels(labels) + "}"; }

// Subsets of `f` in increasing numeric order, including 0 and f.
template <typename Fn>
void for_each_subset(BaseMask f, Fn&& fn) {
    BaseMask sub = 0;
    while (true) {
        fn(sub);
        if (sub == f) break;
        sub = (sub - f) & f;
    }
}

BaseMask compress(BaseMask m, BaseMask onto) {
    BaseMask out = 0;
    int bit = 0;
    for (int i = 0; i < 64; ++i) {
        if (!(onto >> i & 1ULL)) continue;
        if (m >> i & 1ULL) out |= 1ULL << bit;
        ++bit;
    }
    return out;
}

BaseMask base_mask(const SimplicialComplex& base, const LabelSet& labels) {
    BaseMask m = 0;
    for (VertexId v : base.to_face(labels)) {
        if (v >= kMaxBaseVertices) fail(ErrorKind::InvalidArgument, "base complexes are limited to 64 vertices");
        m |= BaseMask{1} << v;
    }
    return m;
}

}  // namespace

Subdivision::Subdivision(SimplicialComplex base, SimplicialComplex total,
                         std::vector<std::vector<BaseMask>> carriers)
    : base_(std::move(base)), total_(std::move(total)), carriers_(std::move(carriers)) {
    if (base_.is_void()) fail(ErrorKind::InvalidArgument, "subdivision base is void");
    if (total_.is_void()) fail(ErrorKind::InvalidArgument, "subdivision total complex is void");
    if (base_.num_vertices() > kMaxBaseVertices)
        fail(ErrorKind::InvalidArgument, "base complexes are limited to 64 vertices");
    const int dim = total_.dimension();
    if (carriers_.size() != static_cast<std::size_t>(std::max(dim + 1, 0)))
        fail(ErrorKind::MissingCarrier, "carrier table does not cover every dimension");
    for (int k = 0; k <= dim; ++k) {
        const auto& level = total_.faces(k);
        const auto& cs = carriers_[static_cast<std::size_t>(k)];
        if (cs.size() != level.size())
            fail(ErrorKind::MissingCarrier, "carrier table does not cover every face of dimension " + std::to_string(k));
        for (std::size_t i = 0; i < cs.size(); ++i)
            if (cs[i] == 0 || !is_base_face(cs[i]))
                fail(ErrorKind::NotAFace,
                     "carrier of " + braces(total_.to_labels(level[i])) + " is not a nonempty base face");
    }
}

Subdivision Subdivision::trivial(const SimplicialComplex& base) {
    std::vector<std::vector<BaseMask>> carriers;
    const int dim = base.dimension();
    for (int k = 0; k <= dim; ++k) {
        std::vector<BaseMask> level;
        for (const auto& f : base.faces(k)) {
            BaseMask m = 0;
            for (VertexId v : f) m |= 1ULL << v;
            level.push_back(m);
        }
        carriers.push_back(std::move(level));
    }
    return Subdivision(base, base, std::move(carriers));
}

Subdivision Subdivision::trivial_simplex(std::size_t d) {
    if (d == 0) fail(ErrorKind::InvalidArgument, "a simplex needs at least one vertex");
    std::vector<std::string> vs;
    for (std::size_t i = 1; i <= d; ++i) vs.push_back("v" + std::to_string(i));
    return trivial(SimplicialComplex::simplex(vs));
}

Subdivision Subdivision::from_labeled(const LabeledSubdivision& labeled) {
    SimplicialComplex total = SimplicialComplex::from_facets(labeled.facets);
    if (total.is_void()) fail(ErrorKind::InvalidArgument, "subdivision total complex is void");
    const bool only_vertices = std::all_of(labeled.carrier.begin(), labeled.carrier.end(),
                                           [](const auto& kv) { return kv.first.size() == 1; });
    std::vector<std::vector<BaseMask>> carriers;
    std::size_t used = 0;
    for (int k = 0; k <= total.dimension(); ++k) {
        std::vector<BaseMask> level;
        for (const auto& f : total.faces(k)) {
            LabelSet key = total.to_labels(f);
            auto it = labeled.carrier.find(key);
            if (it == labeled.carrier.end()) {
                if (only_vertices)
                    fail(ErrorKind::MissingCarrier,
                         "carriers are given for vertices only; a carrier is required on every face, first missing: " +
                             braces(key));
                fail(ErrorKind::MissingCarrier, "no carrier for face " + braces(key));
            }
            level.push_back(base_mask(labeled.base, it->second));
            ++used;
        }
        carriers.push_back(std::move(level));
    }
    if (used != labeled.carrier.size()) {
        for (const auto& [face, _] : labeled.carrier) {
            bool known = std::all_of(face.begin(), face.end(), [&](const auto& l) { return total.find_vertex(l).has_value(); });
            if (!known || !total.contains(total.to_face(face)))
                fail(ErrorKind::NotAFace, "carrier given for " + braces(face) + ", which is not a face");
        }
    }
    return Subdivision(labeled.base, std::move(total), std::move(carriers));
}

LabeledSubdivision Subdivision::to_labeled() const {
    LabeledSubdivision out;
    out.base = base_;
    out.facets = total_.labeled_facets();
    for (int k = 0; k <= total_.dimension(); ++k) {
        const auto& level = total_.faces(k);
        for (std::size_t i = 0; i < level.size(); ++i)
            out.carrier.emplace(total_.to_labels(level[i]), mask_labels(carriers_[static_cast<std::size_t>(k)][i]));
    }
    return out;
}

BaseMask Subdivision::full_mask() const noexcept {
    const auto n = base_.num_vertices();
    return n >= 64 ? ~BaseMask{0} : ((BaseMask{1} << n) - 1);
}

BaseMask Subdivision::carrier(const Face& face) const {
    auto idx = total_.face_index(face);
    if (!idx || face.empty()) fail(ErrorKind::NotAFace, "carrier: " + braces(total_.to_labels(face)) + " is not a nonempty face");
    return carriers_[face.size() - 1][*idx];
}

BaseMask Subdivision::to_mask(const LabelSet& base_face) const { return base_mask(base_, base_face); }

BaseMask Subdivision::to_mask(const Face& base_face) const {
    BaseMask m = 0;
    for (VertexId v : base_face) m |= BaseMask{1} << v;
    return m;
}

Face Subdivision::mask_face(BaseMask m) const {
    Face f;
    for (VertexId v = 0; v < 64; ++v)
        if (m >> v & 1ULL) f.push_back(v);
    return f;
}

LabelSet Subdivision::mask_labels(BaseMask m) const { return base_.to_labels(mask_face(m)); }

bool Subdivision::is_base_face(BaseMask m) const {
    if (!mask_subset(m, full_mask())) return false;
    return base_.contains(mask_face(m));
}

std::vector<BaseMask> Subdivision::base_faces() const {
    std::vector<BaseMask> out;
    for (int k = -1; k <= base_.dimension(); ++k)
        for (const auto& f : base_.faces(k)) out.push_back(to_mask(f));
    std::stable_sort(out.begin(), out.end(), [](BaseMask a, BaseMask b) {
        return mask_size(a) != mask_size(b) ? mask_size(a) < mask_size(b) : a < b;
    });
    return out;
}

RestrictionCounts::RestrictionCounts(const Subdivision& s) {
    std::unordered_map<BaseMask, std::size_t> slot;
    const int dim = s.total().dimension();
    for (int k = 0; k <= dim; ++k)
        for (BaseMask m : s.carriers()[static_cast<std::size_t>(k)]) {
            auto [it, inserted] = slot.emplace(m, buckets_.size());
            if (inserted) buckets_.emplace_back(m, std::vector<std::size_t>(static_cast<std::size_t>(dim) + 1, 0));
            ++buckets_[it->second].second[static_cast<std::size_t>(k)];
        }
}

FVector RestrictionCounts::f_vector(BaseMask f) const {
    std::vector<std::size_t> sum;
    for (const auto& [m, counts] : buckets_) {
        if (!mask_subset(m, f)) continue;
        if (sum.size() < counts.size()) sum.resize(counts.size(), 0);
        for (std::size_t i = 0; i < counts.size(); ++i) sum[i] += counts[i];
    }
    while (!sum.empty() && sum.back() == 0) sum.pop_back();
    FVector out;
    out.counts.emplace_back(1);
    for (auto c : sum) out.counts.emplace_back(c);
    return out;
}

SimplicialComplex restricted_complex(const Subdivision& s, BaseMask f) {
    std::vector<Face> inside;
    const auto& total = s.total();
    for (int k = 0; k <= total.dimension(); ++k) {
        const auto& level = total.faces(k);
        for (std::size_t i = 0; i < level.size(); ++i)
            if (mask_subset(s.carrier_at(k, i), f)) inside.push_back(level[i]);
    }
    if (inside.empty()) return SimplicialComplex::empty_complex();
    SimplicialComplex k = total.generated_by(inside);
    if (k.num_faces() != inside.size() + 1)
        fail(ErrorKind::NotASubcomplex,
             "faces with carrier inside " + braces(s.mask_labels(f)) + " are not closed under inclusion");
    return k;
}

Subdivision restriction(const Subdivision& s, const LabelSet& base_face) {
    return restriction(s, s.to_mask(base_face));
}

Subdivision restriction(const Subdivision& s, BaseMask f) {
    if (f == 0 || !s.is_base_face(f))
        fail(ErrorKind::NotAFace, "restriction: " + braces(s.mask_labels(f & s.full_mask())) + " is not a nonempty base face");
    SimplicialComplex sub = restricted_complex(s, f);
    if (sub.is_void() || sub.dimension() < 0)
        fail(ErrorKind::NotASubcomplex, "restriction to " + braces(s.mask_labels(f)) + " is empty");
    std::vector<VertexId> to_total;
    for (const auto& l : sub.labels()) to_total.push_back(*s.total().find_vertex(l));
    std::vector<std::vector<BaseMask>> carriers;
    for (int k = 0; k <= sub.dimension(); ++k) {
        std::vector<BaseMask> level;
        for (const auto& face : sub.faces(k)) {
            Face t;
            for (VertexId v : face) t.push_back(to_total[v]);
            level.push_back(compress(s.carrier(t), f));
        }
        carriers.push_back(std::move(level));
    }
    return Subdivision(SimplicialComplex::simplex(s.mask_labels(f)), std::move(sub), std::move(carriers));
}

bool BaseFaceReport::ok() const { return failures().empty(); }

std::vector<std::string> BaseFaceReport::failures() const {
    std::vector<std::string> out;
    if (!nonvoid) out.emplace_back("nonvoid");
    if (!subcomplex) out.emplace_back("subcomplex");
    if (!pure) out.emplace_back("pure");
    if (!dimension_ok) out.emplace_back("dimension");
    if (!pseudomanifold) out.emplace_back("pseudomanifold");
    if (!betti_ball) out.emplace_back("betti-ball");
    if (!boundary_betti_sphere) out.emplace_back("boundary-betti-sphere");
    if (!interior_condition) out.emplace_back("interior-condition");
    return out;
}

bool ValidityReport::valid_weak() const { return reasons().empty(); }

std::vector<std::string> ValidityReport::reasons() const {
    std::vector<std::string> out;
    for (const auto& r : faces)
        for (const auto& why : r.failures()) out.push_back(why + "@" + braces(r.face));
    if (!carrier_monotone) {
        std::string w = "monotone";
        if (monotone_witness) w += "@" + braces(monotone_witness->first) + "<" + braces(monotone_witness->second);
        out.push_back(w);
    }
    return out;
}

std::string ValidityReport::verdict() const {
    auto why = reasons();
    if (why.empty()) return "valid-weak";
    std::string out = "invalid(";
    for (std::size_t i = 0; i < why.size(); ++i) out += (i ? "; " : "") + why[i];
    return out + ")";
}

ValidityReport validate(const Subdivision& s) {
    ValidityReport report;
    const auto& total = s.total();
    const int dim = total.dimension();

    for (int k = 1; k <= dim && report.carrier_monotone; ++k) {
        const auto& level = total.faces(k);
        for (std::size_t i = 0; i < level.size() && report.carrier_monotone; ++i) {
            const BaseMask top = s.carrier_at(k, i);
            for (std::size_t skip = 0; skip < level[i].size(); ++skip) {
                Face sub = level[i];
                sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(skip));
                if (!mask_subset(s.carrier(sub), top)) {
                    report.carrier_monotone = false;
                    report.monotone_witness.emplace(total.to_labels(sub), total.to_labels(level[i]));
                    break;
                }
            }
        }
    }

    for (BaseMask f : s.base_faces()) {
        if (f == 0) continue;
        BaseFaceReport r;
        r.face = s.mask_labels(f);
        const int want_dim = mask_size(f) - 1;

        std::vector<Face> inside;
        std::vector<BaseMask> inside_carrier;
        for (int k = 0; k <= dim; ++k) {
            const auto& level = total.faces(k);
            for (std::size_t i = 0; i < level.size(); ++i)
                if (mask_subset(s.carrier_at(k, i), f)) {
                    inside.push_back(level[i]);
                    inside_carrier.push_back(s.carrier_at(k, i));
                }
        }
        r.nonvoid = !inside.empty();
        if (!r.nonvoid) {
            report.faces.push_back(std::move(r));
            continue;
        }
        SimplicialComplex ball = total.generated_by(inside);
        r.subcomplex = ball.num_faces() == inside.size() + 1;
        r.pure = ball.is_pure();
        r.dimension_ok = ball.dimension() == want_dim;
        r.betti_ball = [&] {
            auto b = betti_z2(ball);
            return std::all_of(b.begin(), b.end(), [](std::size_t x) { return x == 0; });
        }();
        std::optional<SimplicialComplex> boundary;
        if (r.pure) {
            try {
                boundary = boundary_complex(ball);
                r.pseudomanifold = true;
            } catch (const Error&) {
                r.pseudomanifold = false;
            }
        }
        if (boundary) {
            if (want_dim == 0) {
                r.boundary_betti_sphere = !boundary->is_void() && boundary->dimension() == -1;
            } else if (!boundary->is_void() && boundary->dimension() == want_dim - 1) {
                auto b = betti_z2(*boundary);
                std::vector<std::size_t> sphere(static_cast<std::size_t>(want_dim), 0);
                sphere.back() = 1;
                r.boundary_betti_sphere = b == sphere;
            }
            r.interior_condition = true;
            for (std::size_t i = 0; i < inside.size() && r.interior_condition; ++i) {
                const LabelSet labels = total.to_labels(inside[i]);
                bool on_boundary = std::all_of(labels.begin(), labels.end(),
                                               [&](const auto& l) { return boundary->find_vertex(l).has_value(); }) &&
                                   boundary->contains(boundary->to_face(labels));
                const bool carried_by_f = inside_carrier[i] == f;
                r.interior_condition = carried_by_f == !on_boundary;
            }
        }
        report.faces.push_back(std::move(r));
    }
    return report;
}

PredicateResult is_quasi_geometric(const Subdivision& s) {
    const auto& total = s.total();
    const auto base_faces = s.base_faces();
    const bool simplex = s.base_is_simplex();
    for (int k = 0; k <= total.dimension(); ++k)
        for (const auto& e : total.faces(k)) {
            BaseMask span = 0;
            for (VertexId v : e) span |= s.carrier_at(0, v);
            // smallest base face containing every vertex carrier of e
            std::optional<BaseMask> smallest;
            if (simplex) {
                smallest = span;
            } else {
                for (BaseMask f : base_faces)
                    if (mask_subset(span, f)) {
                        smallest = f;
                        break;
                    }
            }
            if (smallest && mask_size(*smallest) < static_cast<int>(e.size()))
                return {false, total.to_labels(e), s.mask_labels(*smallest)};
        }
    return {};
}

PredicateResult is_vertex_induced(const Subdivision& s) {
    const auto& total = s.total();
    const auto base_faces = s.base_faces();
    for (int k = 0; k <= total.dimension(); ++k) {
        const auto& level = total.faces(k);
        for (std::size_t i = 0; i < level.size(); ++i) {
            BaseMask span = 0;
            for (VertexId v : level[i]) span |= s.carrier_at(0, v);
            const BaseMask own = s.carrier_at(k, i);
            for (BaseMask f : base_faces)
                if (mask_subset(span, f) && !mask_subset(own, f))
                    return {false, total.to_labels(level[i]), s.mask_labels(f)};
        }
    }
    return {};
}

Polynomial local_h(const Subdivision& s) {
    if (!s.base_is_simplex()) fail(ErrorKind::NotASimplex, "local_h: base is not a simplex");
    RestrictionCounts counts(s);
    return local_h_of(s, counts, s.full_mask());
}

Polynomial local_h_of(const Subdivision& s, const RestrictionCounts& counts, BaseMask f) {
    if (!s.is_base_face(f)) fail(ErrorKind::NotAFace, "local_h_of: not a base face");
    Polynomial out;
    const int d = mask_size(f);
    for_each_subset(f, [&](BaseMask g) {
        Polynomial h = counts.h(g);
        if ((d - mask_size(g)) % 2 == 0)
            out += h;
        else
            out -= h;
    });
    return out;
}

GammaVector local_gamma(const Subdivision& s) {
    return gamma_extract(local_h(s), s.base().num_vertices());
}

Polynomial h_via_locality(const Subdivision& s) {
    if (!s.base().is_pure()) fail(ErrorKind::NotPure, "h_via_locality: base is not pure");
    RestrictionCounts counts(s);
    Polynomial out;
    for (BaseMask f : s.base_faces())
        out += local_h_of(s, counts, f) * h_polynomial(link(s.base(), s.mask_face(f)));
    return out;
}

}  // namespace localh
