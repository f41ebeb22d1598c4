// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "localh/constructions.hpp"
#include "localh/cwbary.hpp"
#include "localh/error.hpp"
#include "localh/identities.hpp"
#include "localh/permstats.hpp"
#include "localh/subdivision.hpp"
#include "oracle.hpp"

using namespace localh;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Check {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok && failures_.size() < 5) failures_.push_back(what);
        if (!ok) ++failed_;
    }
    Outcome outcome(const std::string& summary) const {
        Outcome o;
        o.pass = failed_ == 0;
        std::ostringstream os;
        os << summary << " (" << checks_ << " checks";
        if (failed_) {
            os << ", " << failed_ << " failed:";
            for (const auto& f : failures_) os << " [" << f << "]";
        }
        os << ")";
        o.detail = os.str();
        return o;
    }

private:
    std::size_t checks_ = 0;
    std::size_t failed_ = 0;
    std::vector<std::string> failures_;
};

std::string str(const Polynomial& p) { return p.to_string(); }

std::vector<Subdivision> corpus() {
    std::vector<Subdivision> out;
    for (std::uint64_t seed = 0; seed < 100; ++seed) out.push_back(random_subdivision(seed, 5, 1 + seed % 6).subdivision);
    return out;
}

const std::vector<Subdivision>& shared_corpus() {
    static const std::vector<Subdivision> c = corpus();
    return c;
}

Outcome criterion1() {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t d = 1; d <= 7; ++d) {
        const Polynomial l = local_h(sd_subdivision(Subdivision::trivial_simplex(d)));
        const Polynomial e = derangement_enum(d);
        c.expect(l == e, "d=" + std::to_string(d) + " local " + str(l) + " vs enum " + str(e));
        c.expect(e == oracle::poly(oracle::derangements(static_cast<int>(d))), "oracle d=" + std::to_string(d));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(secs < 30.0, "runtime " + std::to_string(secs) + " s");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f s", secs);
    return c.outcome(std::string("local h of sd(simplex) equals derangement polynomial, d=1..7, ") + buf);
}

Outcome criterion2() {
    Check c;
    for (std::size_t d = 1; d <= 7; ++d) {
        const Polynomial h = h_polynomial(sd_subdivision(Subdivision::trivial_simplex(d)).total());
        std::vector<Integer> a;
        for (std::size_t i = 0; i < d; ++i) a.push_back(oracle::eulerian(static_cast<long long>(d), static_cast<long long>(i)));
        c.expect(h == Polynomial(a), "d=" + std::to_string(d) + " h " + str(h));
        c.expect(h == eulerian_polynomial(d), "descent enumeration d=" + std::to_string(d));
    }
    return c.outcome("h of sd(simplex) equals Eulerian numbers, d=1..7");
}

Outcome criterion3() {
    Check c;
    for (std::size_t d = 0; d <= 8; ++d) {
        const std::string tag = "d=" + std::to_string(d);
        const Polynomial r = derangement_recurrence(d);
        c.expect(r == derangement_enum(d), tag + " recurrence " + str(r));
        c.expect(is_symmetric(r, d), tag + " symmetric");
        c.expect(is_unimodal(r.padded(d + 1)), tag + " unimodal");
        c.expect(gamma_extract(r, d).is_nonnegative(), tag + " gamma");
    }
    return c.outcome("derangement recurrence equals enumeration, d=0..8; symmetric, unimodal, gamma-nonnegative");
}

Outcome criterion4() {
    Check c;
    const auto s = sd_subdivision(o1_stellar(Subdivision::trivial_simplex(3), {"v1", "v2", "v3"}));
    const Polynomial h = h_polynomial(s.total());
    const Polynomial dh = h_polynomial(boundary_complex(s.total()));
    c.expect(h == Polynomial({1, 10, 7}), "h " + str(h));
    c.expect(dh == Polynomial({1, 4, 1}), "boundary h " + str(dh));
    c.expect(boundary_h_from_h(h, 3) == dh, "boundary h from h");
    c.expect(h - dh == Polynomial({0, 6, 6}), "difference " + str(h - dh));
    c.expect(ball_h_difference_from_h(h, 3) == Polynomial({0, 6, 6}), "difference from h");
    c.expect(restriction_h_difference(s, s.full_mask()) == Polynomial({0, 6, 6}), "restriction difference");
    c.expect(local_h(s) == Polynomial({0, 7, 7}), "local h " + str(local_h(s)));
    c.expect(thm44_local_h(s) == Polynomial({0, 7, 7}), "difference expansion");
    return c.outcome("sd(stellar triangle): h=(1,10,7), boundary h=(1,4,1), difference 6x+6x^2, local h 7x+7x^2");
}

Outcome criterion5() {
    Check c;
    const auto s = lemma32_op(Subdivision::trivial_simplex(4), {"v1", "v2", "v3"});
    const auto l = local_h(s).padded(5);
    c.expect(l == std::vector<Integer>{0, 1, 0, 1, 0}, "local h " + str(local_h(s)));
    c.expect(static_cast<bool>(is_quasi_geometric(s)), "quasi-geometric");
    c.expect(!is_unimodal(l), "not unimodal");
    c.expect(local_gamma(s).gammas == std::vector<Integer>{0, 1, -2}, "gamma");
    c.expect(!is_vertex_induced(s), "not vertex-induced");
    c.expect(validate(s).valid_weak(), "valid");
    return c.outcome("ridge push plus stellar on the 3-simplex: local h (0,1,0,1,0), quasi-geometric, gamma (0,1,-2)");
}

Outcome criterion6() {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    std::size_t targets = 0;
    for (std::size_t d = 1; d <= 6; ++d) {
        const std::size_t free = d / 2;  // ℓ_1..ℓ_{⌊d/2⌋}; ℓ_0 = ℓ_d = 0
        std::size_t combos = 1;
        for (std::size_t i = 0; i < free; ++i) combos *= 4;
        for (std::size_t code = 0; code < combos; ++code) {
            std::vector<Integer> target(d + 1, 0);
            std::size_t rest = code;
            for (std::size_t i = 1; i <= free && i < d; ++i) {
                target[i] = target[d - i] = static_cast<long long>(rest % 4);
                rest /= 4;
            }
            ++targets;
            std::string tag = "(";
            for (std::size_t i = 0; i <= d; ++i) tag += (i ? "," : "") + target[i].str();
            tag += ")";
            try {
                const auto built = realize_local_h(target);
                const auto& s = built.subdivision;
                c.expect(s.base().num_vertices() == d, tag + " base size");
                c.expect(validate(s).valid_weak(), tag + " valid");
                c.expect(static_cast<bool>(is_quasi_geometric(s)), tag + " quasi-geometric");
                c.expect(local_h(s).padded(d + 1) == target, tag + " local h " + str(local_h(s)));
            } catch (const Error& e) {
                c.expect(false, tag + " threw " + e.what());
            }
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(targets == 105, "target count " + std::to_string(targets));
    c.expect(secs < 120.0, "runtime " + std::to_string(secs) + " s");
    char buf[96];
    std::snprintf(buf, sizeof buf, "%zu targets, %.2f s", targets, secs);
    return c.outcome(std::string("every symmetric target with d<=6 and entries<=3 is realized: ") + buf);
}

Outcome criterion7() {
    Check c;
    std::size_t n = 0;
    for (std::size_t i = 0; i < shared_corpus().size(); ++i) {
        const auto& base = shared_corpus()[i];
        for (const auto& s : {base, sd_subdivision(base)}) {
            ++n;
            const std::string tag = "seed " + std::to_string(i) + (n % 2 ? "" : " sd");
            const Polynomial l = local_h(s);
            c.expect(lemma41_local_h(s) == l, tag + " recursion");
            c.expect(thm44_local_h(s) == l, tag + " difference expansion");
            c.expect(oracle::poly(oracle::local_h(s)) == l, tag + " oracle");
            c.expect(h_via_locality(s) == h_polynomial(s.total()), tag + " locality");
        }
    }
    return c.outcome("local h, recursion and difference expansion agree; locality holds; " + std::to_string(n) +
                     " subdivisions");
}

Outcome criterion8() {
    Check c;
    std::size_t balls = 0;
    for (std::size_t i = 0; i < shared_corpus().size(); ++i) {
        const auto& s = shared_corpus()[i];
        const std::string tag = "seed " + std::to_string(i);
        c.expect(local_gamma(sd_subdivision(s)).is_nonnegative(), tag + " local gamma of sd");
        const auto report = validate(s);
        for (BaseMask f : s.base_faces()) {
            if (f == 0 || mask_size(f) > 4) continue;
            const auto k = restricted_complex(s, f);
            const auto face = s.mask_labels(f);
            bool ball = false;
            for (const auto& r : report.faces)
                if (r.face == face) ball = r.ok();
            if (!ball) continue;
            ++balls;
            const std::string ftag = tag + " {" + join_labels(face) + "}";
            try {
                const auto ek = ek_difference(face_poset(k));
                const auto* phi = std::get_if<CdPolynomial>(&ek.phi);
                c.expect(phi != nullptr, ftag + " cd-expressible");
                if (!phi) continue;
                c.expect(phi->is_nonnegative(), ftag + " cd nonnegative " + phi->to_string());
                const auto sdk = sd(face_poset(k));
                const Polynomial diff = h_polynomial(sdk) - h_polynomial(boundary_complex(sdk));
                c.expect(ek.h_difference == diff, ftag + " h difference");
                c.expect(phi->evaluate() == diff, ftag + " evaluation " + str(phi->evaluate()) + " vs " + str(diff));
            } catch (const Error& e) {
                c.expect(false, ftag + " threw " + e.what());
            }
        }
    }
    return c.outcome("local gamma of sd nonnegative on the corpus; " + std::to_string(balls) +
                     " ball restrictions have nonnegative cd difference matching h(sd)-h(boundary)");
}

Outcome criterion9() {
    Check c;
    std::mt19937_64 rng(20261015);
    const OpKind ops[] = {OpKind::O1, OpKind::O2, OpKind::O3, OpKind::L32};
    for (OpKind op : ops) {
        std::size_t applied = 0;
        std::uint64_t seed = 0;
        while (applied < 50) {
            Subdivision s = random_subdivision(rng(), 5, 1 + (seed++ % 5)).subdivision;
            if (op == OpKind::O2 || op == OpKind::L32)
                while (s.base().num_vertices() < 4) s = o3_join_edge(s);
            const std::size_t d = s.base().num_vertices();
            const Polynomial before = local_h(s);
            Subdivision after = s;
            const std::string tag = to_string(op) + " #" + std::to_string(applied);
            if (op == OpKind::O1) {
                const auto facets = s.total().facets();
                after = o1_stellar(s, s.total().to_labels(facets[rng() % facets.size()]));
            } else if (op == OpKind::O3) {
                after = o3_join_edge(s);
            } else {
                const auto faces = pushable_faces(s);
                if (faces.empty()) continue;
                const auto& g = faces[rng() % faces.size()];
                after = op == OpKind::O2 ? o2_push(s, g) : lemma32_op(s, g);
            }
            const Polynomial delta = local_h(after) - before;
            if (op == OpKind::O3)
                c.expect(local_h(after) == before.shifted(1), tag + " join shift");
            else
                c.expect(delta == effect_delta(op, d), tag + " delta " + str(delta));
            c.expect(validate(after).valid_weak(), tag + " valid");
            if (op != OpKind::O2) c.expect(static_cast<bool>(is_quasi_geometric(after)), tag + " quasi-geometric");
            ++applied;
        }
    }
    return c.outcome("50 random applications each of O1, O2, O3 and L32 change local h as stated");
}

Outcome criterion10() {
    Check c;
    std::size_t balls = 0;
    for (std::size_t i = 0; i < shared_corpus().size(); ++i) {
        const auto& base = shared_corpus()[i];
        for (const auto& s : {base, sd_subdivision(base)}) {
            const auto report = validate(s);
            for (const auto& r : report.faces) {
                if (!r.ok()) continue;
                const BaseMask f = s.to_mask(r.face);
                const auto k = restricted_complex(s, f);
                const auto n = static_cast<std::size_t>(mask_size(f));
                ++balls;
                c.expect(boundary_h_from_h(h_polynomial(k), n) == h_polynomial(boundary_complex(k)),
                         "seed " + std::to_string(i) + " {" + join_labels(r.face) + "}");
            }
        }
    }
    return c.outcome("boundary h from h matches the boundary complex on " + std::to_string(balls) + " ball restrictions");
}

}  // namespace

int main() {
    const std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                            criterion6, criterion7, criterion8, criterion9, criterion10};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::cout << "criterion " << (i + 1) << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail << std::endl;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << std::endl;
    return failed ? 1 : 0;
}
