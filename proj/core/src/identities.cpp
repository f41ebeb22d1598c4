#include "localh/identities.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "localh/cwbary.hpp"
#include "localh/error.hpp"
#include "localh/permstats.hpp"

namespace localh {

namespace {

void require_ball_h(const Polynomial& h, std::size_t d) {
    if (h.degree() && *h.degree() > d)
        fail(ErrorKind::DegreeTooLarge, "h-polynomial " + h.to_string() + " has degree above " + std::to_string(d));
    if (h.coeff(d) != 0) fail(ErrorKind::Precondition, "a ball has h_d = 0, got h_d = " + h.coeff(d).str());
}

void require_simplex(const Subdivision& s, const char* what) {
    if (!s.base_is_simplex()) fail(ErrorKind::NotASimplex, std::string(what) + " needs a simplex base");
    if (s.base().num_vertices() > 24) fail(ErrorKind::InvalidArgument, std::string(what) + " limited to 24 base vertices");
}

std::vector<Polynomial> restriction_differences(const Subdivision& s) {
    const std::size_t n = std::size_t{1} << s.base().num_vertices();
    std::vector<Polynomial> out(n);
    for (BaseMask f = 0; f < n; ++f) out[f] = restriction_h_difference(s, f);
    return out;
}

}  // namespace

Polynomial boundary_h_from_h(const Polynomial& h, std::size_t d) {
    require_ball_h(h, d);
    std::vector<Integer> out;
    Integer running = 0;
    for (std::size_t i = 0; i < d; ++i) {
        running += h.coeff(i) - h.coeff(d - i);
        out.push_back(running);
    }
    return Polynomial(std::move(out));
}

Polynomial ball_h_difference_from_h(const Polynomial& h, std::size_t d) {
    require_ball_h(h, d);
    std::vector<Integer> out;
    Integer running = 0;
    for (std::size_t i = 0; i <= d; ++i) {
        out.push_back(running);
        if (i < d) running += h.coeff(d - i - 1) - h.coeff(i);
    }
    return Polynomial(std::move(out));
}

Polynomial restriction_h_difference(const Subdivision& s, BaseMask f) {
    if (f == 0) return Polynomial{1};
    const SimplicialComplex k = restricted_complex(s, f);
    return h_polynomial(k) - h_polynomial(boundary_complex(k));
}

Polynomial lemma41_local_h(const Subdivision& s) {
    require_simplex(s, "lemma41_local_h");
    const auto diff = restriction_differences(s);
    std::vector<Polynomial> local(diff.size());
    // masks in increasing order visit every proper subset first
    for (BaseMask v = 0; v < diff.size(); ++v) {
        if (v == 0) {
            local[v] = Polynomial{1};
            continue;
        }
        const long long d = mask_size(v);
        Polynomial l = diff[v];
        for (BaseMask f = (v - 1) & v;; f = (f - 1) & v) {
            l += local[f] * geometric_block(1, d - mask_size(f) - 1);
            if (f == 0) break;
        }
        local[v] = std::move(l);
    }
    return local.back();
}

Polynomial thm44_local_h(const Subdivision& s) {
    require_simplex(s, "thm44_local_h");
    const auto diff = restriction_differences(s);
    const BaseMask v = diff.size() - 1;
    Polynomial l;
    for (BaseMask f = 0; f <= v; ++f)
        l += diff[f] * derangement_recurrence(static_cast<std::size_t>(mask_size(v & ~f)));
    return l;
}

bool IdentityReport::all_match() const {
    return std::all_of(records.begin(), records.end(), [](const IdentityRecord& r) { return r.match; });
}

std::string IdentityReport::to_table() const {
    std::ostringstream out;
    std::size_t width = 8;
    auto label = [](const IdentityRecord& r) { return r.face ? r.name + "{" + join_labels(*r.face) + "}" : r.name; };
    for (const auto& r : records) width = std::max(width, label(r).size());
    for (const auto& r : records) {
        out << label(r) << std::string(width - label(r).size() + 2, ' ') << (r.match ? "ok      " : "MISMATCH")
            << "  " << r.lhs << "  |  " << r.rhs;
        if (!r.error.empty()) out << "  (" << r.error << ")";
        out << "\n";
    }
    out << "local h: " << local_h << "  symmetric=" << symmetric << " nonnegative=" << nonnegative
        << " unimodal=" << unimodal << " gamma=" << gamma << "\n";
    return out.str();
}

IdentityReport verify_all(const Subdivision& s) {
    IdentityReport report;
    auto check = [&](std::string name, std::optional<LabelSet> face, auto&& sides) {
        IdentityRecord r{std::move(name), std::move(face), {}, {}, false, {}};
        try {
            std::tie(r.lhs, r.rhs) = sides();
            r.match = r.lhs == r.rhs;
        } catch (const Error& e) {
            r.error = std::string(to_string(e.kind())) + ": " + e.what();
        }
        report.records.push_back(std::move(r));
    };
    using Sides = std::pair<Polynomial, Polynomial>;

    check("locality", std::nullopt, [&] { return Sides{h_polynomial(s.total()), h_via_locality(s)}; });
    if (!s.base_is_simplex()) return report;

    const std::size_t d = s.base().num_vertices();
    report.d = d;
    report.local_h = local_h(s);
    check("lemma41", std::nullopt, [&] { return Sides{report.local_h, lemma41_local_h(s)}; });
    check("thm44", std::nullopt, [&] { return Sides{report.local_h, thm44_local_h(s)}; });
    check("symmetry", std::nullopt, [&] {
        std::vector<Integer> reversed = report.local_h.padded(d + 1);
        std::reverse(reversed.begin(), reversed.end());
        return Sides{report.local_h, Polynomial(reversed)};
    });

    for (BaseMask f : s.base_faces()) {
        if (f == 0) continue;
        const std::size_t k = static_cast<std::size_t>(mask_size(f));
        check("remark48", s.mask_labels(f), [&] {
            const SimplicialComplex gamma_f = restricted_complex(s, f);
            return Sides{h_polynomial(boundary_complex(gamma_f)), boundary_h_from_h(h_polynomial(gamma_f), k)};
        });
        check("remark48-difference", s.mask_labels(f), [&] {
            const SimplicialComplex gamma_f = restricted_complex(s, f);
            const Polynomial h = h_polynomial(gamma_f);
            return Sides{h - h_polynomial(boundary_complex(gamma_f)), ball_h_difference_from_h(h, k)};
        });
    }

    const std::size_t bound = enumeration_bound();
    if (d <= bound)
        check("cor42", std::nullopt, [&] { return Sides{derangement_enum(d, bound), derangement_recurrence(d)}; });
    if (d <= std::min<std::size_t>(bound, 7))
        check("eq23", std::nullopt, [&] {
            return Sides{local_h(sd_subdivision(Subdivision::trivial_simplex(d))), derangement_enum(d, bound)};
        });

    report.symmetric = is_symmetric(report.local_h, d);
    report.nonnegative = is_nonnegative(report.local_h);
    report.unimodal = is_unimodal(report.local_h.padded(d + 1));
    if (report.symmetric) report.gamma = gamma_extract(report.local_h, d);
    return report;
}

}  // namespace localh
