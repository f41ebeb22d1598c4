#include "localh/constructions.hpp"

#include <algorithm>
#include <random>

#include "localh/error.hpp"

namespace localh {

namespace {

std::string braces(const LabelSet& labels) { return "{" + join_labels(labels) + "}"; }

LabelSet with(LabelSet face, const std::string& v) {
    face.push_back(v);
    return make_label_set(std::move(face));
}

// Every subset of `face` except `face` itself, the empty set included.
std::vector<LabelSet> proper_subsets(const LabelSet& face) {
    std::vector<LabelSet> out;
    const std::size_t n = face.size();
    for (std::uint64_t m = 0; m + 1 < (std::uint64_t{1} << n); ++m) {
        LabelSet sub;
        for (std::size_t i = 0; i < n; ++i)
            if (m >> i & 1u) sub.push_back(face[i]);
        out.push_back(std::move(sub));
    }
    return out;
}

LabelSet union_of(const LabelSet& a, const LabelSet& b) {
    LabelSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

void require_simplex_base(const Subdivision& s, const char* what) {
    if (!s.base_is_simplex()) fail(ErrorKind::NotASimplex, std::string(what) + ": base is not a simplex");
}

void require_pushable(const Subdivision& s, const LabelSet& ridge, const char* what) {
    require_simplex_base(s, what);
    const std::size_t d = s.base().num_vertices();
    if (d < 4) fail(ErrorKind::Precondition, std::string(what) + ": pushing needs d >= 4 base vertices, got " + std::to_string(d));
    Face g = s.total().to_face(ridge);
    if (!s.total().contains(g)) fail(ErrorKind::NotAFace, std::string(what) + ": " + braces(ridge) + " is not a face");
    if (g.size() != d - 1)
        fail(ErrorKind::Precondition, std::string(what) + ": " + braces(ridge) + " is not (d-2)-dimensional");
    if (static_cast<std::size_t>(mask_size(s.carrier(g))) != d - 1)
        fail(ErrorKind::Precondition,
             std::string(what) + ": carrier of " + braces(ridge) + " is not (d-2)-dimensional");
}

}  // namespace

std::string to_string(OpKind op) {
    switch (op) {
        case OpKind::O1: return "o1";
        case OpKind::O2: return "o2";
        case OpKind::O3: return "o3";
        case OpKind::L32: return "l32";
    }
    return "?";
}

OpKind op_from_string(const std::string& name) {
    if (name == "o1") return OpKind::O1;
    if (name == "o2") return OpKind::O2;
    if (name == "o3") return OpKind::O3;
    if (name == "l32") return OpKind::L32;
    fail(ErrorKind::Schema, "unknown operation '" + name + "' (expected o1, o2, o3 or l32)");
}

std::size_t next_fresh_index(const Subdivision& s) {
    std::size_t top = 0;
    auto scan = [&](const std::vector<std::string>& labels) {
        for (const auto& l : labels) {
            if (l.size() < 2 || std::string_view("wzmpq").find(l[0]) == std::string_view::npos) continue;
            if (!std::all_of(l.begin() + 1, l.end(), [](char c) { return c >= '0' && c <= '9'; })) continue;
            if (l.size() > 19) continue;
            top = std::max<std::size_t>(top, std::stoull(l.substr(1)));
        }
    };
    scan(s.total().labels());
    scan(s.base().labels());
    return top + 1;
}

Subdivision o1_stellar(const Subdivision& s, const LabelSet& facet) {
    const Face f = s.total().to_face(facet);
    if (!std::binary_search(s.total().facets().begin(), s.total().facets().end(), f))
        fail(ErrorKind::NotAFace, "o1: " + braces(facet) + " is not a facet");
    const std::string z = "z" + std::to_string(next_fresh_index(s));
    LabeledSubdivision l = s.to_labeled();
    const LabelSet carrier = l.carrier.at(facet);

    l.facets.erase(std::find(l.facets.begin(), l.facets.end(), facet));
    for (std::size_t skip = 0; skip < facet.size(); ++skip) {
        LabelSet ridge = facet;
        ridge.erase(ridge.begin() + static_cast<std::ptrdiff_t>(skip));
        l.facets.push_back(with(std::move(ridge), z));
    }
    l.carrier.erase(facet);
    for (const auto& e : proper_subsets(facet)) l.carrier[with(e, z)] = carrier;
    return Subdivision::from_labeled(l);
}

Subdivision o2_push(const Subdivision& s, const LabelSet& ridge) {
    require_pushable(s, ridge, "o2");
    const std::string w = "w" + std::to_string(next_fresh_index(s));
    LabeledSubdivision l = s.to_labeled();
    const LabelSet all = s.base().labels();
    const LabelSet old = l.carrier.at(ridge);

    const LabelSet pushed = with(ridge, w);
    l.facets.push_back(pushed);
    l.carrier[ridge] = all;
    l.carrier[pushed] = all;
    for (const auto& e : proper_subsets(ridge)) l.carrier[with(e, w)] = old;
    return Subdivision::from_labeled(l);
}

Subdivision o3_join_edge(const Subdivision& s) {
    require_simplex_base(s, "o3");
    const std::size_t n = next_fresh_index(s);
    const std::string p = "p" + std::to_string(n);
    const std::string q = "q" + std::to_string(n + 1);
    const std::string m = "m" + std::to_string(n + 2);

    LabeledSubdivision src = s.to_labeled();
    src.carrier.emplace(LabelSet{}, LabelSet{});

    LabeledSubdivision l;
    std::vector<std::string> base_vertices = s.base().labels();
    base_vertices.push_back(p);
    base_vertices.push_back(q);
    l.base = SimplicialComplex::simplex(base_vertices);

    const std::vector<std::pair<LabelSet, LabelSet>> omega = {
        {{}, {}}, {{p}, {p}}, {{q}, {q}}, {{m}, make_label_set({p, q})},
        {make_label_set({p, m}), make_label_set({p, q})}, {make_label_set({m, q}), make_label_set({p, q})},
    };
    for (const auto& a : src.facets) {
        l.facets.push_back(union_of(a, make_label_set({p, m})));
        l.facets.push_back(union_of(a, make_label_set({m, q})));
    }
    for (const auto& [e, carrier] : src.carrier)
        for (const auto& [wface, wcarrier] : omega) {
            LabelSet face = union_of(e, wface);
            if (face.empty()) continue;
            l.carrier[face] = union_of(carrier, wcarrier);
        }
    return Subdivision::from_labeled(l);
}

Subdivision lemma32_op(const Subdivision& s, const LabelSet& ridge) {
    require_pushable(s, ridge, "l32");
    const std::string w = "w" + std::to_string(next_fresh_index(s));
    Subdivision pushed = o2_push(s, ridge);
    return o1_stellar(pushed, with(ridge, w));
}

LabelSet auto_facet(const Subdivision& s) { return s.total().to_labels(s.total().facets().front()); }

std::vector<LabelSet> pushable_faces(const Subdivision& s) {
    std::vector<LabelSet> out;
    if (!s.base_is_simplex()) return out;
    const std::size_t d = s.base().num_vertices();
    if (d < 4) return out;
    const int dim = static_cast<int>(d) - 2;
    const auto& level = s.total().faces(dim);
    for (std::size_t i = 0; i < level.size(); ++i)
        if (static_cast<std::size_t>(mask_size(s.carrier_at(dim, i))) == d - 1)
            out.push_back(s.total().to_labels(level[i]));
    return out;
}

Subdivision apply_step(const Subdivision& s, OpStep& step) {
    switch (step.op) {
        case OpKind::O1:
            if (!step.face) step.face = auto_facet(s);
            return o1_stellar(s, *step.face);
        case OpKind::O2:
        case OpKind::L32: {
            if (!step.face) {
                auto candidates = pushable_faces(s);
                if (candidates.empty())
                    fail(ErrorKind::Precondition,
                         to_string(step.op) + ": no (d-2)-face with (d-2)-dimensional carrier (needs d >= 4)");
                step.face = candidates.front();
            }
            return step.op == OpKind::O2 ? o2_push(s, *step.face) : lemma32_op(s, *step.face);
        }
        case OpKind::O3:
            step.face.reset();
            return o3_join_edge(s);
    }
    fail(ErrorKind::InvalidArgument, "unknown operation");
}

Polynomial effect_delta(OpKind op, std::size_t d) {
    const auto dd = static_cast<long long>(d);
    switch (op) {
        case OpKind::O1: return geometric_block(1, dd - 1);
        case OpKind::O2: return -geometric_block(2, dd - 2);
        case OpKind::L32: return Polynomial::monomial(1) + Polynomial::monomial(d - 1);
        case OpKind::O3: break;
    }
    fail(ErrorKind::InvalidArgument, "o3 does not act additively on the local h-vector");
}

BuildResult replay(const OpWord& word) {
    BuildResult out{Subdivision::trivial_simplex(word.seed_vertices), word};
    for (auto& step : out.word.steps) out.subdivision = apply_step(out.subdivision, step);
    return out;
}

BuildResult realize_local_h(const std::vector<long long>& target) {
    return realize_local_h(std::vector<Integer>(target.begin(), target.end()));
}

BuildResult realize_local_h(const std::vector<Integer>& target) {
    if (target.size() < 2) fail(ErrorKind::InvalidTarget, "target needs at least two entries (d >= 1)");
    const std::size_t d = target.size() - 1;
    if (target.front() != 0 || target.back() != 0)
        fail(ErrorKind::InvalidTarget, "target must have l_0 = l_d = 0");
    for (std::size_t i = 0; i <= d; ++i) {
        if (target[i] != target[d - i])
            fail(ErrorKind::InvalidTarget, "target is not symmetric (l_i != l_{d-i} at i = " + std::to_string(i) + ")");
        if (target[i] < 0) fail(ErrorKind::InvalidTarget, "target has a negative entry at i = " + std::to_string(i));
    }

    auto times = [](const Integer& n) { return static_cast<std::size_t>(n); };

    OpWord word;
    word.seed_vertices = d == 1 ? 1 : (d % 2 == 0 ? 2 : 3);
    Subdivision s = Subdivision::trivial_simplex(word.seed_vertices);
    auto run = [&](OpStep step) {
        s = apply_step(s, step);
        word.steps.push_back(std::move(step));
    };

    if (d >= 2) {
        const std::size_t centre = d / 2;
        for (std::size_t i = 0; i < times(target[centre]); ++i) run({OpKind::O1, std::nullopt});
        for (std::size_t k = centre - 1; k >= 1; --k) {
            const LabelSet before = auto_facet(s);
            const std::string p = "p" + std::to_string(next_fresh_index(s));
            run({OpKind::O3, std::nullopt});
            LabelSet g = with(before, p);
            for (std::size_t i = 0; i < times(target[k]); ++i) {
                const std::string w = "w" + std::to_string(next_fresh_index(s));
                run({OpKind::L32, g});
                g.pop_back();
                g = with(g, w);
            }
        }
    }

    const Polynomial want(target);
    const Polynomial got = local_h(s);
    if (got != want)
        fail(ErrorKind::InternalMismatch, "realize: local h " + got.to_string() + " differs from target " + want.to_string());
    if (const auto report = validate(s); !report.valid_weak())
        fail(ErrorKind::InternalMismatch, "realize: result fails the weak validity check: " + report.verdict());
    if (const auto qg = is_quasi_geometric(s); !qg)
        fail(ErrorKind::InternalMismatch, "realize: result is not quasi-geometric, witness " + braces(qg.witness_face));
    return {std::move(s), std::move(word)};
}

BuildResult random_subdivision(std::uint64_t seed, std::size_t d_max, std::size_t steps) {
    if (d_max < 2) fail(ErrorKind::InvalidArgument, "random_subdivision: d_max must be >= 2");
    // raw engine output keeps the stream identical across standard libraries
    std::mt19937_64 rng(seed);
    auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

    OpWord word;
    word.seed_vertices = 1 + pick(std::min<std::size_t>(3, d_max));
    Subdivision s = Subdivision::trivial_simplex(word.seed_vertices);
    for (std::size_t i = 0; i < steps; ++i) {
        const std::size_t d = s.base().num_vertices();
        std::vector<OpKind> ops = {OpKind::O1};
        if (d + 2 <= d_max) ops.push_back(OpKind::O3);
        auto pushable = pushable_faces(s);
        if (!pushable.empty()) ops.push_back(OpKind::L32);

        OpStep step{ops[pick(ops.size())], std::nullopt};
        if (step.op == OpKind::O1) {
            const auto& facets = s.total().facets();
            step.face = s.total().to_labels(facets[pick(facets.size())]);
        } else if (step.op == OpKind::L32) {
            step.face = pushable[pick(pushable.size())];
        }
        s = apply_step(s, step);
        word.steps.push_back(std::move(step));
    }
    return {std::move(s), std::move(word)};
}

}  // namespace localh
