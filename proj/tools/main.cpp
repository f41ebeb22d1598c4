#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "localh/constructions.hpp"
#include "localh/cwbary.hpp"
#include "localh/error.hpp"
#include "localh/identities.hpp"
#include "localh/io.hpp"
#include "localh/permstats.hpp"
#include "localh/search.hpp"

using namespace localh;
using io::Json;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kInputError = 2, kInternal = 3 };

struct Output {
    bool table = false;

    void emit(const Json& j) const { std::cout << j.dump(2) << "\n"; }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Subdivision load_subdivision(const std::string& path) {
    const Json j = io::read_file(path);
    if (io::detect(j) != io::FileKind::Subdivision) fail(ErrorKind::Schema, path + ": expected a subdivision file");
    return io::subdivision_from_json(j);
}

void warn_o2(const OpWord& w) {
    for (const auto& s : w.steps)
        if (s.op == OpKind::O2) {
            std::cerr << "warning: the word uses o2, which need not preserve quasi-geometricity\n";
            return;
        }
}

std::vector<long long> parse_target(const std::string& text) {
    std::vector<long long> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            fail(ErrorKind::InvalidTarget, "target entry '" + item + "' is not an integer");
        }
    }
    return out;
}

int cmd_compute(const Output& out, const std::string& path) {
    const Json j = io::read_file(path);
    if (io::detect(j) == io::FileKind::Complex) {
        const SimplicialComplex k = io::complex_from_json(j);
        Json r;
        r["f_vector"] = io::to_json(f_vector(k));
        r["h"] = io::to_json(h_polynomial(k));
        if (out.table)
            std::cout << "f: " << io::to_json(f_vector(k)).dump() << "\nh: " << h_polynomial(k) << "\n";
        else
            out.emit(r);
        return kOk;
    }
    const Subdivision s = io::subdivision_from_json(j);
    const ValidityReport validity = validate(s);
    const PredicateResult qg = is_quasi_geometric(s);
    const PredicateResult vi = is_vertex_induced(s);
    Json r;
    r["f_vector"] = io::to_json(f_vector(s.total()));
    r["h"] = io::to_json(h_polynomial(s.total()));
    r["validity"] = io::to_json(validity);
    r["quasi_geometric"] = qg.holds;
    r["vertex_induced"] = vi.holds;
    if (!qg.holds) r["quasi_geometric_witness"] = io::to_json(qg);
    if (!vi.holds) r["vertex_induced_witness"] = io::to_json(vi);
    if (s.base_is_simplex()) {
        const std::size_t d = s.base().num_vertices();
        const Polynomial l = local_h(s);
        r["d"] = d;
        r["local_h"] = io::to_json(l, d + 1);
        r["symmetric"] = is_symmetric(l, d);
        r["unimodal"] = is_unimodal(l.padded(d + 1));
        if (is_symmetric(l, d)) r["local_gamma"] = io::to_json(gamma_extract(l, d));
    }
    if (!out.table) {
        out.emit(r);
        return kOk;
    }
    std::cout << "f:               " << r["f_vector"].dump() << "\n"
              << "h:               " << h_polynomial(s.total()) << "\n";
    if (r.contains("local_h"))
        std::cout << "local h:         " << r["local_h"].dump() << "\n"
                  << "local gamma:     " << (r.contains("local_gamma") ? r["local_gamma"].dump() : "-") << "\n"
                  << "unimodal:        " << yes_no(r["unimodal"].get<bool>()) << "\n";
    std::cout << "validity:        " << validity.verdict() << "\n"
              << "quasi-geometric: " << yes_no(qg.holds) << "\n"
              << "vertex-induced:  " << yes_no(vi.holds) << "\n";
    return kOk;
}

int cmd_realize(const Output& out, const std::string& target_text, const std::string& output) {
    const auto target = parse_target(target_text);
    const BuildResult built = realize_local_h(target);
    const Subdivision& s = built.subdivision;
    const std::size_t d = s.base().num_vertices();
    Json r;
    r["target"] = target;
    r["local_h"] = io::to_json(local_h(s), d + 1);
    r["self_check"] = "pass";
    r["validity"] = validate(s).verdict();
    r["quasi_geometric"] = is_quasi_geometric(s).holds;
    r["word"] = io::to_json(built.word);
    if (!output.empty()) {
        io::write_file(output, io::to_json(s));
        r["written"] = output;
    }
    if (out.table) {
        std::cout << "target:          " << r["target"].dump() << "\n"
                  << "local h:         " << r["local_h"].dump() << "\n"
                  << "self-check:      pass\n"
                  << "validity:        " << r["validity"].get<std::string>() << "\n"
                  << "quasi-geometric: " << yes_no(r["quasi_geometric"].get<bool>()) << "\n"
                  << "steps:           " << built.word.steps.size() << "\n";
        if (output.empty()) std::cout << io::to_json(s).dump() << "\n";
    } else {
        if (output.empty()) r["subdivision"] = io::to_json(s);
        out.emit(r);
    }
    return kOk;
}

int cmd_bary(const std::string& path, const std::string& output) {
    const Json j = io::read_file(path);
    Subdivision s = [&] {
        switch (io::detect(j)) {
            case io::FileKind::Poset: return sd_subdivision(io::poset_from_json(j));
            case io::FileKind::Subdivision: return sd_subdivision(io::subdivision_from_json(j));
            default: fail(ErrorKind::Schema, path + ": expected a subdivision or a poset with carriers");
        }
    }();
    if (output.empty())
        std::cout << io::to_json(s).dump(2) << "\n";
    else
        io::write_file(output, io::to_json(s));
    return kOk;
}

int cmd_identities(const Output& out, const std::string& path) {
    const IdentityReport report = verify_all(load_subdivision(path));
    if (out.table)
        std::cout << report.to_table();
    else
        out.emit(io::to_json(report));
    return report.all_match() ? kOk : kCheckFailed;
}

int cmd_derangement(const Output& out, std::size_t max_d) {
    bool all = true;
    if (out.table) std::cout << "d  match  enumeration | recurrence\n";
    for (std::size_t d = 0; d <= max_d; ++d) {
        const Polynomial e = derangement_enum(d);
        const Polynomial r = derangement_recurrence(d);
        all = all && e == r;
        if (out.table) {
            std::cout << d << (d < 10 ? "  " : " ") << (e == r ? "true " : "FALSE") << "  " << e << " | " << r << "\n";
        } else {
            Json row;
            row["d"] = d;
            row["enum"] = io::to_json(e);
            row["recurrence"] = io::to_json(r);
            row["match"] = e == r;
            std::cout << row.dump() << "\n";
        }
    }
    return all ? kOk : kCheckFailed;
}

int cmd_cdindex(const Output& out, const std::string& path) {
    const Json j = io::read_file(path);
    const FacePoset p = [&] {
        switch (io::detect(j)) {
            case io::FileKind::Poset: return io::poset_from_json(j);
            case io::FileKind::Subdivision: return face_poset(io::subdivision_from_json(j).total());
            case io::FileKind::Complex: return face_poset(io::complex_from_json(j));
            default: fail(ErrorKind::Schema, path + ": expected a poset, complex or subdivision");
        }
    }();
    const AbPolynomial psi = ab_index(p);
    const std::size_t d = p.rank();
    std::optional<EkDifference> ek;
    try {
        ek = ek_difference(p);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::BoundaryUndetermined) throw;
        std::cerr << "note: " << e.what() << "; treating the poset as closed\n";
    }
    // Closed posets: Φ comes from Ψ itself and evaluates to h(sd P).
    const CdResult phi_result = ek ? ek->phi : cd_extract(psi);
    const Polynomial target = ek ? ek->h_difference : h_polynomial(sd(p));
    const auto* phi = std::get_if<CdPolynomial>(&phi_result);
    const bool evaluation_matches = phi != nullptr && phi->evaluate() == target;
    const bool symmetric = is_symmetric(target, d);
    Json r;
    r["rank"] = d;
    r["closed"] = !ek.has_value();
    r["psi"] = io::to_json(psi);
    if (ek) r["psi_difference"] = io::to_json(ek->psi_difference);
    r["phi"] = io::to_json(phi_result);
    r[ek ? "h_difference" : "h_sd"] = io::to_json(target, d + 1);
    if (symmetric) {
        const GammaVector g = gamma_extract(target, d);
        r["gamma"] = io::to_json(g);
        r["gamma_nonnegative"] = g.is_nonnegative();
    }
    r["phi_nonnegative"] = phi != nullptr && phi->is_nonnegative();
    r["phi_evaluation_matches"] = evaluation_matches;
    r["boundary_by_convention"] = ek && ek->boundary_by_convention;
    if (out.table) {
        std::cout << "psi:             " << psi.to_string() << "\n";
        if (ek) std::cout << "psi - psi_bd*a:  " << ek->psi_difference.to_string() << "\n";
        std::cout << "phi:             "
                  << (phi ? phi->to_string() : "not cd-expressible (" + std::get<NotExpressible>(phi_result).reason + ")")
                  << "\n"
                  << (ek ? "h(sd) - h(bd sd): " : "h(sd):           ") << target << "\n"
                  << "gamma:           " << (r.contains("gamma") ? r["gamma"].dump() : "-") << "\n"
                  << "phi(1+x,2x) ok:  " << yes_no(evaluation_matches) << "\n";
        if (ek && ek->boundary_by_convention) std::cout << "note: boundary taken by the poset convention\n";
    } else {
        out.emit(r);
    }
    return evaluation_matches ? kOk : kCheckFailed;
}

Json record_json(const SearchRecord& r) {
    Json j;
    j["seed"] = r.seed;
    j["max_d"] = r.max_d;
    j["steps"] = r.steps;
    j["barycentric"] = r.barycentric;
    j["word"] = io::to_json(r.word);
    j["d"] = r.d;
    j["local_h"] = io::to_json(r.local_h, r.d + 1);
    if (r.gamma) j["local_gamma"] = io::to_json(*r.gamma);
    j["quasi_geometric"] = r.quasi_geometric;
    j["vertex_induced"] = r.vertex_induced;
    j["unimodal"] = r.unimodal;
    return j;
}

int cmd_search(const Output& out, const SearchOptions& options) {
    std::size_t relevant = 0;
    run_search(options, [&](const SearchRecord& r, const Subdivision& s) {
        Json j = record_json(r);
        if (r.conjecture_relevant()) {
            ++relevant;
            j["flag"] = "CONJECTURE-RELEVANT";
            j["instance"] = io::to_json(s);
        }
        if (out.table) {
            std::cout << "seed " << r.seed << "  d=" << r.d << "  local_h=" << j["local_h"].dump()
                      << "  qg=" << yes_no(r.quasi_geometric) << "  vi=" << yes_no(r.vertex_induced)
                      << "  unimodal=" << yes_no(r.unimodal) << "\n";
            if (r.conjecture_relevant()) std::cout << "CONJECTURE-RELEVANT " << j["instance"].dump() << "\n";
        } else {
            std::cout << j.dump() << "\n";
        }
    });
    if (relevant > 0) std::cerr << relevant << " CONJECTURE-RELEVANT instance(s) found\n";
    return kOk;
}

int cmd_replay(const Output& out, const std::string& path) {
    const OpWord word = io::opword_from_json(io::read_file(path));
    warn_o2(word);
    const BuildResult built = replay(word);
    const Subdivision& s = built.subdivision;
    const ValidityReport validity = validate(s);
    const IdentityReport identities = verify_all(s);
    const std::size_t d = s.base().num_vertices();
    Json r;
    r["word"] = io::to_json(built.word);
    r["d"] = d;
    r["local_h"] = io::to_json(identities.local_h, d + 1);
    r["validity"] = validity.verdict();
    r["quasi_geometric"] = is_quasi_geometric(s).holds;
    r["vertex_induced"] = is_vertex_induced(s).holds;
    r["identities_match"] = identities.all_match();
    if (out.table) {
        std::cout << "local h:          " << r["local_h"].dump() << "\n"
                  << "validity:         " << validity.verdict() << "\n"
                  << "quasi-geometric:  " << yes_no(r["quasi_geometric"].get<bool>()) << "\n"
                  << "vertex-induced:   " << yes_no(r["vertex_induced"].get<bool>()) << "\n"
                  << "identities match: " << yes_no(identities.all_match()) << "\n";
    } else {
        r["subdivision"] = io::to_json(s);
        out.emit(r);
    }
    return validity.valid_weak() && identities.all_match() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local h-vectors of subdivisions of simplices"};
    app.require_subcommand(1);
    Output out;
    bool json = false;
    app.add_flag("--table", out.table, "Human-readable output");
    app.add_flag("--json", json, "JSON output (default)");

    std::string file, output, target;
    std::size_t max_d = 8;
    SearchOptions search;
    std::string require;

    auto* compute = app.add_subcommand("compute", "f, h, local h, local gamma, validity and predicates of a subdivision");
    compute->add_option("file", file, "Subdivision or complex JSON")->required()->check(CLI::ExistingFile);

    auto* realize = app.add_subcommand("realize", "Quasi-geometric subdivision with a prescribed local h-vector");
    realize->add_option("--target", target, "Comma-separated local h-vector, e.g. 0,2,3,2,0")->required();
    realize->add_option("-o,--output", output, "Write the subdivision here");

    auto* bary = app.add_subcommand("bary", "Barycentric subdivision with induced carriers");
    bary->add_option("file", file, "Subdivision or poset JSON")->required()->check(CLI::ExistingFile);
    bary->add_option("-o,--output", output, "Write the subdivision here");

    auto* identities = app.add_subcommand("identities", "Check every identity on a subdivision");
    identities->add_option("file", file, "Subdivision JSON")->required()->check(CLI::ExistingFile);

    auto* derangement = app.add_subcommand("derangement", "Derangement polynomials by enumeration and recurrence");
    derangement->add_option("--max-d", max_d, "Largest order")->check(CLI::Range(0, 12));

    auto* cdindex = app.add_subcommand("cdindex", "ab-index, cd-index and h-difference of a ball or closed poset");
    cdindex->add_option("file", file, "Poset, complex or subdivision JSON")->required()->check(CLI::ExistingFile);

    auto* search_cmd = app.add_subcommand("search", "Random corpus search for non-unimodal vertex-induced subdivisions");
    search_cmd->add_option("--seed", search.seed, "First seed");
    search_cmd->add_option("--count", search.count, "Number of seeds");
    search_cmd->add_option("--max-d", search.max_d, "Largest number of base vertices")->check(CLI::Range(2, 64));
    search_cmd->add_option("--steps", search.steps, "Operations per instance");
    search_cmd->add_option("--require", require, "Only report instances with this property")
        ->check(CLI::IsMember({"vertex-induced"}));
    search_cmd->add_flag("--bary", search.barycentric, "Search barycentric subdivisions of the instances");
    search_cmd->add_option("--workers", search.workers, "Worker threads (0: one per core)");

    auto* replay_cmd = app.add_subcommand("replay", "Rebuild a subdivision from an operation word and re-verify it");
    replay_cmd->add_option("file", file, "Operation word JSON")->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }
    if (json && out.table) {
        std::cerr << "--json and --table are exclusive\n";
        return kInputError;
    }
    search.require_vertex_induced = require == "vertex-induced";

    try {
        if (*compute) return cmd_compute(out, file);
        if (*realize) return cmd_realize(out, target, output);
        if (*bary) return cmd_bary(file, output);
        if (*identities) return cmd_identities(out, file);
        if (*derangement) return cmd_derangement(out, max_d);
        if (*cdindex) return cmd_cdindex(out, file);
        if (*search_cmd) return cmd_search(out, search);
        if (*replay_cmd) return cmd_replay(out, file);
    } catch (const Error& e) {
        std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
        return e.kind() == ErrorKind::InternalMismatch ? kInternal : kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
