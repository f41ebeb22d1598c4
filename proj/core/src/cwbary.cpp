#include "localh/cwbary.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "localh/error.hpp"

namespace localh {

namespace {

std::string format_words(const std::map<std::string, Integer>& coeffs) {
    if (coeffs.empty()) return "0";
    std::string out;
    for (const auto& [word, c] : coeffs) {
        const bool negative = c < 0;
        const Integer magnitude = negative ? Integer(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (word.empty())
            out += magnitude.str();
        else if (magnitude != 1)
            out += magnitude.str() + word;
        else
            out += word;
    }
    return out;
}

BaseMask carrier_mask(const SimplicialComplex& base, const LabelSet& labels, const std::string& where) {
    BaseMask m = 0;
    for (const auto& l : labels) {
        const auto v = base.find_vertex(l);
        if (!v) fail(ErrorKind::NotAFace, "carrier of " + where + " uses unknown base vertex '" + l + "'");
        m |= BaseMask{1} << *v;
    }
    return m;
}

}  // namespace

FacePoset::FacePoset(std::vector<PosetElement> elements, std::vector<Cover> covers,
                     std::map<std::string, LabelSet> carrier, std::optional<SimplicialComplex> base)
    : elements_(std::move(elements)), covers_(std::move(covers)) {
    std::sort(elements_.begin(), elements_.end(),
              [](const PosetElement& a, const PosetElement& b) { return std::tie(a.dim, a.id) < std::tie(b.dim, b.id); });
    for (std::uint32_t i = 0; i < elements_.size(); ++i) {
        const auto& e = elements_[i];
        if (e.id.empty()) fail(ErrorKind::Schema, "poset element with empty id");
        if (e.dim < 0) fail(ErrorKind::Schema, "poset element '" + e.id + "' has negative dimension");
        if (!index_.emplace(e.id, i).second) fail(ErrorKind::LabelCollision, "duplicate poset element '" + e.id + "'");
        rank_ = std::max(rank_, static_cast<std::size_t>(e.dim) + 1);
    }

    std::sort(covers_.begin(), covers_.end());
    covers_.erase(std::unique(covers_.begin(), covers_.end()), covers_.end());
    lower_.assign(elements_.size(), {});
    upper_.assign(elements_.size(), {});
    for (const auto& [lo, hi] : covers_) {
        const auto l = index(lo), u = index(hi);
        if (!l || !u) fail(ErrorKind::Schema, "cover (" + lo + ", " + hi + ") names an unknown element");
        if (elements_[*u].dim != elements_[*l].dim + 1)
            fail(ErrorKind::Ungraded, "cover (" + lo + ", " + hi + ") does not raise the dimension by one");
        lower_[*u].push_back(*l);
        upper_[*l].push_back(*u);
    }

    down_.assign(elements_.size(), {});
    for (std::uint32_t i = 0; i < elements_.size(); ++i) {
        if (elements_[i].dim > 0 && lower_[i].empty())
            fail(ErrorKind::Ungraded, "cell '" + elements_[i].id + "' of positive dimension has an empty boundary");
        std::sort(lower_[i].begin(), lower_[i].end());
        std::sort(upper_[i].begin(), upper_[i].end());
        std::vector<std::uint32_t> below;
        for (auto l : lower_[i]) {
            below.push_back(l);
            below.insert(below.end(), down_[l].begin(), down_[l].end());
        }
        std::sort(below.begin(), below.end());
        below.erase(std::unique(below.begin(), below.end()), below.end());
        down_[i] = std::move(below);
    }

    if (carrier.empty()) return;
    if (base) {
        base_ = std::move(*base);
    } else {
        std::set<std::string> vertices;
        for (const auto& [id, face] : carrier) vertices.insert(face.begin(), face.end());
        base_ = SimplicialComplex::simplex({vertices.begin(), vertices.end()});
    }
    for (auto& [id, face] : carrier) {
        if (!index(id)) fail(ErrorKind::Schema, "carrier given for unknown element '" + id + "'");
        face = make_label_set(std::move(face));
        if (face.empty()) fail(ErrorKind::NotAFace, "carrier of '" + id + "' is empty");
        if (!base_.contains(base_.to_face(face)))
            fail(ErrorKind::NotAFace, "carrier of '" + id + "' is not a face of the base");
    }
    carrier_ = std::move(carrier);
}

std::optional<std::uint32_t> FacePoset::index(const std::string& id) const {
    const auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool FacePoset::is_simplicial() const {
    for (std::uint32_t i = 0; i < elements_.size(); ++i) {
        const int k = elements_[i].dim;
        if (k >= 63) return false;
        const auto vertices = std::count_if(down_[i].begin(), down_[i].end(),
                                            [&](std::uint32_t j) { return elements_[j].dim == 0; });
        if (k > 0 && vertices != k + 1) return false;
        if (down_[i].size() != (std::size_t{1} << (k + 1)) - 2) return false;
    }
    return true;
}

FacePoset FacePoset::order_ideal(const std::vector<std::uint32_t>& generators) const {
    std::vector<bool> keep(elements_.size(), false);
    for (auto g : generators) {
        keep.at(g) = true;
        for (auto j : down_.at(g)) keep[j] = true;
    }
    std::vector<PosetElement> elements;
    std::vector<Cover> covers;
    for (std::uint32_t i = 0; i < elements_.size(); ++i) {
        if (!keep[i]) continue;
        elements.push_back(elements_[i]);
        for (auto l : lower_[i]) covers.emplace_back(elements_[l].id, elements_[i].id);
    }
    return FacePoset(std::move(elements), std::move(covers));
}

std::string face_id(const LabelSet& face) { return join_labels(face, '|'); }

namespace {

FacePoset face_poset_impl(const SimplicialComplex& k, const Subdivision* s) {
    if (k.is_void()) fail(ErrorKind::VoidComplex, "face poset of the void complex");
    std::vector<PosetElement> elements;
    std::vector<FacePoset::Cover> covers;
    std::map<std::string, LabelSet> carrier;
    for (int dim = 0; dim <= k.dimension(); ++dim) {
        const auto& level = k.faces(dim);
        for (std::size_t i = 0; i < level.size(); ++i) {
            const Face& f = level[i];
            const std::string id = face_id(k.to_labels(f));
            elements.push_back({id, dim});
            if (s != nullptr) carrier[id] = s->mask_labels(s->carrier_at(dim, i));
            if (dim == 0) continue;
            for (std::size_t skip = 0; skip < f.size(); ++skip) {
                Face sub = f;
                sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(skip));
                covers.emplace_back(face_id(k.to_labels(sub)), id);
            }
        }
    }
    if (s == nullptr) return FacePoset(std::move(elements), std::move(covers));
    return FacePoset(std::move(elements), std::move(covers), std::move(carrier), s->base());
}

}  // namespace

FacePoset face_poset(const SimplicialComplex& k) { return face_poset_impl(k, nullptr); }

FacePoset face_poset(const Subdivision& s) { return face_poset_impl(s.total(), &s); }

SimplicialComplex sd(const FacePoset& p) {
    if (p.size() == 0) return SimplicialComplex::empty_complex();
    std::vector<std::string> labels;
    for (const auto& e : p.elements()) labels.push_back(e.id);
    std::vector<std::uint32_t> order(labels.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return labels[a] < labels[b]; });
    std::vector<VertexId> position(labels.size());
    for (std::uint32_t r = 0; r < order.size(); ++r) position[order[r]] = r;
    std::vector<std::string> sorted_labels;
    for (auto i : order) sorted_labels.push_back(labels[i]);

    std::vector<Face> chains;
    Face chain;
    std::function<void(std::uint32_t)> descend = [&](std::uint32_t x) {
        chain.push_back(position[x]);
        if (p.lower_covers(x).empty()) {
            Face f = chain;
            std::sort(f.begin(), f.end());
            chains.push_back(std::move(f));
        }
        for (auto y : p.lower_covers(x)) descend(y);
        chain.pop_back();
    };
    for (std::uint32_t x = 0; x < p.size(); ++x)
        if (p.upper_covers(x).empty()) descend(x);
    return SimplicialComplex::from_id_faces(sorted_labels, chains);
}

Subdivision sd_subdivision(const FacePoset& p) {
    if (!p.has_carrier()) fail(ErrorKind::MissingCarrier, "barycentric subdivision needs a carrier on every cell");
    std::vector<BaseMask> cell_mask(p.size());
    for (std::uint32_t i = 0; i < p.size(); ++i) {
        const auto& id = p.elements()[i].id;
        const auto it = p.carrier().find(id);
        if (it == p.carrier().end()) fail(ErrorKind::MissingCarrier, "cell '" + id + "' has no carrier");
        cell_mask[i] = carrier_mask(p.base(), it->second, "'" + id + "'");
    }
    SimplicialComplex total = sd(p);
    std::vector<std::uint32_t> cell_of(total.num_vertices());
    for (VertexId v = 0; v < total.num_vertices(); ++v) cell_of[v] = *p.index(total.label(v));

    std::vector<std::vector<BaseMask>> carriers;
    for (int dim = 0; dim <= total.dimension(); ++dim) {
        std::vector<BaseMask> level;
        for (const Face& f : total.faces(dim)) {
            std::uint32_t top = cell_of[f.front()];
            for (auto v : f)
                if (p.elements()[cell_of[v]].dim > p.elements()[top].dim) top = cell_of[v];
            level.push_back(cell_mask[top]);
        }
        carriers.push_back(std::move(level));
    }
    return Subdivision(p.base(), std::move(total), std::move(carriers));
}

Subdivision sd_subdivision(const Subdivision& s) { return sd_subdivision(face_poset(s)); }

std::uint64_t FlagVectors::mask(const std::vector<std::size_t>& s) {
    std::uint64_t m = 0;
    for (auto i : s) {
        if (i == 0 || i > 63) fail(ErrorKind::InvalidArgument, "flag index out of range");
        m |= std::uint64_t{1} << (i - 1);
    }
    return m;
}

FlagVectors flag_vectors(const FacePoset& p) {
    const std::size_t r = p.rank();
    if (r > 30) fail(ErrorKind::InvalidArgument, "flag vectors limited to rank 30");
    FlagVectors out;
    out.rank = r;
    out.f.assign(std::size_t{1} << r, 0);
    out.f[0] = 1;
    // chains[x][T] counts chains with top x whose other cells have dimension set T
    std::vector<std::vector<Integer>> chains(p.size());
    for (std::uint32_t x = 0; x < p.size(); ++x) {
        const auto dim = static_cast<std::size_t>(p.elements()[x].dim);
        auto& mine = chains[x];
        mine.assign(std::size_t{1} << dim, 0);
        mine[0] = 1;
        for (auto y : p.down_set(x)) {
            const auto ydim = static_cast<std::size_t>(p.elements()[y].dim);
            const std::uint64_t top = std::uint64_t{1} << ydim;
            for (std::size_t t = 0; t < chains[y].size(); ++t)
                if (chains[y][t] != 0) mine[t | top] += chains[y][t];
        }
        const std::uint64_t self = std::uint64_t{1} << dim;
        for (std::size_t t = 0; t < mine.size(); ++t) out.f[t | self] += mine[t];
    }
    out.h = out.f;
    for (std::size_t bit = 0; bit < r; ++bit)
        for (std::size_t m = 0; m < out.h.size(); ++m)
            if (m >> bit & 1u) out.h[m] -= out.h[m ^ (std::size_t{1} << bit)];
    return out;
}

void AbPolynomial::add(const std::string& word, const Integer& c) {
    if (word.size() != degree)
        fail(ErrorKind::InvalidArgument, "ab-word '" + word + "' does not have length " + std::to_string(degree));
    if (c == 0) return;
    auto& slot = coeffs[word];
    slot += c;
    if (slot == 0) coeffs.erase(word);
}

AbPolynomial AbPolynomial::times(char letter) const {
    AbPolynomial out{degree + 1, {}};
    for (const auto& [w, c] : coeffs) out.coeffs.emplace(w + letter, c);
    return out;
}

Polynomial AbPolynomial::at_a_one() const {
    Polynomial p;
    for (const auto& [w, c] : coeffs)
        p += Polynomial::monomial(static_cast<std::size_t>(std::count(w.begin(), w.end(), 'b')), c);
    return p;
}

std::string AbPolynomial::to_string() const { return format_words(coeffs); }

AbPolynomial operator-(const AbPolynomial& p, const AbPolynomial& q) {
    if (p.degree != q.degree) fail(ErrorKind::InvalidArgument, "ab-polynomials of different degree");
    AbPolynomial out = p;
    for (const auto& [w, c] : q.coeffs) out.add(w, -c);
    return out;
}

namespace {

std::map<std::string, Integer> expand_word(const std::string& cd) {
    std::map<std::string, Integer> words{{"", 1}};
    for (char letter : cd) {
        std::map<std::string, Integer> next;
        for (const auto& [w, c] : words) {
            if (letter == 'c') {
                next[w + 'a'] += c;
                next[w + 'b'] += c;
            } else {
                next[w + "ab"] += c;
                next[w + "ba"] += c;
            }
        }
        words = std::move(next);
    }
    return words;
}

// Lexicographically largest term (b > a) of the expansion of a cd-word.
std::string leading_word(const std::string& cd) {
    std::string out;
    for (char letter : cd) out += letter == 'c' ? "b" : "ba";
    return out;
}

}  // namespace

AbPolynomial CdPolynomial::expand() const {
    AbPolynomial out{degree, {}};
    for (const auto& [w, c] : coeffs)
        for (const auto& [ab, k] : expand_word(w)) out.add(ab, c * k);
    return out;
}

Polynomial CdPolynomial::evaluate() const {
    const Polynomial c_value{1, 1};
    const Polynomial d_value{0, 2};
    Polynomial out;
    for (const auto& [w, coeff] : coeffs) {
        Polynomial term = Polynomial::constant(coeff);
        for (char letter : w) term *= letter == 'c' ? c_value : d_value;
        out += term;
    }
    return out;
}

bool CdPolynomial::is_nonnegative() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const auto& kv) { return kv.second >= 0; });
}

std::string CdPolynomial::to_string() const { return format_words(coeffs); }

AbPolynomial ab_index(const FacePoset& p) {
    const FlagVectors flags = flag_vectors(p);
    AbPolynomial psi{flags.rank, {}};
    for (std::size_t s = 0; s < flags.h.size(); ++s) {
        std::string word(flags.rank, 'a');
        for (std::size_t i = 0; i < flags.rank; ++i)
            if (s >> i & 1u) word[i] = 'b';
        psi.add(word, flags.h[s]);
    }
    return psi;
}

std::vector<std::string> cd_words(std::size_t degree) {
    std::vector<std::vector<std::string>> by_degree = {{""}, {"c"}};
    for (std::size_t n = 2; n <= degree; ++n) {
        std::vector<std::string> words;
        for (const auto& w : by_degree[n - 1]) words.push_back("c" + w);
        for (const auto& w : by_degree[n - 2]) words.push_back("d" + w);
        std::sort(words.begin(), words.end());
        by_degree.push_back(std::move(words));
    }
    return by_degree.at(degree);
}

CdResult cd_extract(const AbPolynomial& psi) {
    std::map<std::string, std::string> cd_by_leading;
    for (const auto& w : cd_words(psi.degree)) cd_by_leading.emplace(leading_word(w), w);

    // Each cd-word has a distinct leading ab-word with coefficient one, so
    // peeling off the largest remaining word solves the system exactly.
    CdPolynomial phi{psi.degree, {}};
    AbPolynomial residual = psi;
    while (!residual.coeffs.empty()) {
        const auto& [word, c] = *residual.coeffs.rbegin();
        const auto it = cd_by_leading.find(word);
        if (it == cd_by_leading.end())
            return NotExpressible{word, c, "ab-word " + word + " is not the leading term of any cd-word"};
        const Integer coeff = c;
        phi.coeffs[it->second] = coeff;
        for (const auto& [ab, k] : expand_word(it->second)) residual.add(ab, -coeff * k);
    }
    return phi;
}

FacePoset poset_boundary(const FacePoset& p) {
    const std::size_t r = p.rank();
    if (r == 0) fail(ErrorKind::BoundaryUndetermined, "the empty poset has no boundary");
    for (std::uint32_t x = 0; x < p.size(); ++x)
        if (p.upper_covers(x).empty() && static_cast<std::size_t>(p.elements()[x].dim) + 1 != r)
            fail(ErrorKind::BoundaryUndetermined, "poset is not pure: maximal cell '" + p.elements()[x].id + "'");
    if (r == 1) {
        if (p.size() != 1) fail(ErrorKind::BoundaryUndetermined, "a 0-ball is a single point");
        return FacePoset();
    }
    std::vector<std::uint32_t> generators;
    for (std::uint32_t x = 0; x < p.size(); ++x) {
        if (static_cast<std::size_t>(p.elements()[x].dim) + 2 != r) continue;
        const std::size_t n = p.upper_covers(x).size();
        if (n > 2)
            fail(ErrorKind::BoundaryUndetermined, "cell '" + p.elements()[x].id + "' lies in " + std::to_string(n) + " top cells");
        if (n == 1) generators.push_back(x);
    }
    if (generators.empty()) fail(ErrorKind::BoundaryUndetermined, "the boundary is void, so the poset is not a ball");
    return p.order_ideal(generators);
}

EkDifference ek_difference(const FacePoset& p) {
    const FacePoset boundary = poset_boundary(p);
    EkDifference out;
    out.psi_difference = ab_index(p) - ab_index(boundary).times('a');
    out.phi = cd_extract(out.psi_difference);
    const SimplicialComplex k = sd(p);
    out.h_difference = h_polynomial(k) - h_polynomial(boundary_complex(k));
    out.boundary_by_convention = !p.is_simplicial();
    return out;
}

}  // namespace localh
