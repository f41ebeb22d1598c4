#include "localh/io.hpp"

#include <fstream>
#include <limits>
#include <set>

#include "localh/error.hpp"

namespace localh::io {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& what) { fail(ErrorKind::Schema, path + ": " + what); }

std::string key_path(const std::string& path, const std::string& key) { return path + "." + key; }
std::string item_path(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

void expect_object(const Json& j, const std::string& path, const std::set<std::string>& allowed,
                   const std::set<std::string>& required) {
    if (!j.is_object()) schema(path, "expected an object");
    for (const auto& [key, value] : j.items()) {
        if (!allowed.count(key) && key != "format") schema(key_path(path, key), "unknown key");
    }
    for (const auto& key : required)
        if (!j.contains(key)) schema(key_path(path, key), "missing required key");
    if (j.contains("format")) {
        const auto& f = j.at("format");
        if (!f.is_string() || f.get<std::string>() != kFormat)
            schema(key_path(path, "format"), std::string("expected \"") + kFormat + "\"");
    }
}

const Json& expect_array(const Json& j, const std::string& path) {
    if (!j.is_array()) schema(path, "expected an array");
    return j;
}

std::string label_from_json(const Json& j, const std::string& path) {
    if (!j.is_string()) schema(path, "expected a string label");
    auto s = j.get<std::string>();
    if (s.empty()) schema(path, "empty label");
    if (s.find(',') != std::string::npos) schema(path, "labels may not contain ','");
    return s;
}

LabelSet labels_from_json(const Json& j, const std::string& path) {
    expect_array(j, path);
    LabelSet out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(label_from_json(j[i], item_path(path, i)));
    const std::size_t n = out.size();
    out = make_label_set(std::move(out));
    if (out.size() != n) schema(path, "repeated label");
    return out;
}

std::vector<LabelSet> facets_from_json(const Json& j, const std::string& path) {
    expect_array(j, path);
    std::vector<LabelSet> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(labels_from_json(j[i], item_path(path, i)));
    return out;
}

Json labels_json(const LabelSet& labels) {
    Json out = Json::array();
    for (const auto& l : labels) {
        if (l.find(',') != std::string::npos)
            fail(ErrorKind::Schema, "label '" + l + "' contains ',' and cannot be written");
        out.push_back(l);
    }
    return out;
}

Json facets_json(const std::vector<LabelSet>& facets) {
    Json out = Json::array();
    for (const auto& f : facets) out.push_back(labels_json(f));
    return out;
}

SimplicialComplex complex_from_facets(const std::vector<LabelSet>& facets) {
    if (facets.empty()) return SimplicialComplex::void_complex();
    return SimplicialComplex::from_facets(facets);
}

}  // namespace

FileKind detect(const Json& j) {
    if (!j.is_object()) schema("$", "expected an object");
    if (j.contains("elements")) return FileKind::Poset;
    if (j.contains("steps")) return FileKind::OpWord;
    if (j.contains("carrier") || j.contains("total")) return FileKind::Subdivision;
    if (j.contains("facets")) return FileKind::Complex;
    schema("$", "cannot tell the document kind (expected elements, steps, total or facets)");
}

Json read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::InvalidArgument, "cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorKind::Schema, path.string() + ": " + e.what());
    }
}

void write_file(const std::filesystem::path& path, const Json& j) {
    std::ofstream out(path);
    if (!out) fail(ErrorKind::InvalidArgument, "cannot write " + path.string());
    out << j.dump(2) << "\n";
}

Json to_json(const Integer& n) {
    if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(n);
    return n.str();
}

Integer integer_from_json(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        const bool digits = !s.empty() && s.find_first_not_of("0123456789", s[0] == '-' ? 1 : 0) == std::string::npos &&
                            s != "-";
        if (digits) return Integer(s);
    }
    schema(path, "expected an integer");
}

Json to_json(const Polynomial& p) {
    if (p.is_zero()) return Json::array({0});
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_json(c));
    return out;
}

Json to_json(const Polynomial& p, std::size_t length) {
    Json out = Json::array();
    for (const auto& c : p.padded(length)) out.push_back(to_json(c));
    return out;
}

Polynomial polynomial_from_json(const Json& j, const std::string& path) {
    expect_array(j, path);
    std::vector<Integer> coeffs;
    for (std::size_t i = 0; i < j.size(); ++i) coeffs.push_back(integer_from_json(j[i], item_path(path, i)));
    return Polynomial(std::move(coeffs));
}

Json to_json(const GammaVector& g) {
    Json out = Json::array();
    for (const auto& c : g.gammas) out.push_back(to_json(c));
    return out;
}

Json to_json(const FVector& f) {
    Json out = Json::array();
    for (const auto& c : f.counts) out.push_back(to_json(c));
    return out;
}

Json to_json(const SimplicialComplex& k) {
    Json out;
    out["format"] = kFormat;
    out["facets"] = facets_json(k.labeled_facets());
    return out;
}

SimplicialComplex complex_from_json(const Json& j, const std::string& path) {
    expect_object(j, path, {"facets"}, {"facets"});
    return complex_from_facets(facets_from_json(j.at("facets"), key_path(path, "facets")));
}

Json to_json(const Subdivision& s) {
    const LabeledSubdivision l = s.to_labeled();
    Json out;
    out["format"] = kFormat;
    out["base"] = Json{{"facets", facets_json(l.base.labeled_facets())}};
    out["total"] = Json{{"facets", facets_json(l.facets)}};
    Json carrier = Json::object();
    for (const auto& [face, c] : l.carrier) carrier[join_labels(face)] = labels_json(c);
    out["carrier"] = std::move(carrier);
    return out;
}

Subdivision subdivision_from_json(const Json& j) {
    expect_object(j, "$", {"base", "total", "carrier"}, {"base", "total", "carrier"});
    LabeledSubdivision l;
    l.base = complex_from_json(j.at("base"), "$.base");
    expect_object(j.at("total"), "$.total", {"facets"}, {"facets"});
    l.facets = facets_from_json(j.at("total").at("facets"), "$.total.facets");
    const Json& carrier = j.at("carrier");
    if (!carrier.is_object()) schema("$.carrier", "expected an object keyed by comma-joined faces");
    for (const auto& [key, value] : carrier.items()) {
        const std::string path = "$.carrier[\"" + key + "\"]";
        LabelSet face;
        std::size_t start = 0;
        while (true) {
            const auto comma = key.find(',', start);
            const std::string part = key.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            if (part.empty()) schema(path, "malformed face key");
            face.push_back(part);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        const std::size_t n = face.size();
        face = make_label_set(std::move(face));
        if (face.size() != n) schema(path, "repeated label in face key");
        if (!l.carrier.emplace(face, labels_from_json(value, path)).second) schema(path, "face listed twice");
    }
    return Subdivision::from_labeled(l);
}

Json to_json(const FacePoset& p) {
    Json out;
    out["format"] = kFormat;
    Json elements = Json::array();
    for (const auto& e : p.elements()) elements.push_back({{"id", e.id}, {"dim", e.dim}});
    out["elements"] = std::move(elements);
    Json covers = Json::array();
    for (const auto& [lo, hi] : p.covers()) covers.push_back({lo, hi});
    out["covers"] = std::move(covers);
    if (p.has_carrier()) {
        Json carrier = Json::object();
        for (const auto& [id, face] : p.carrier()) carrier[id] = labels_json(face);
        out["carrier"] = std::move(carrier);
        out["base"] = Json{{"facets", facets_json(p.base().labeled_facets())}};
    }
    return out;
}

FacePoset poset_from_json(const Json& j) {
    expect_object(j, "$", {"elements", "covers", "carrier", "base"}, {"elements"});
    std::vector<PosetElement> elements;
    const Json& el = expect_array(j.at("elements"), "$.elements");
    for (std::size_t i = 0; i < el.size(); ++i) {
        const std::string path = item_path("$.elements", i);
        expect_object(el[i], path, {"id", "dim"}, {"id", "dim"});
        if (!el[i].at("id").is_string()) schema(path + ".id", "expected a string");
        if (!el[i].at("dim").is_number_integer()) schema(path + ".dim", "expected an integer");
        elements.push_back({el[i].at("id").get<std::string>(), el[i].at("dim").get<int>()});
    }
    std::vector<FacePoset::Cover> covers;
    if (j.contains("covers")) {
        const Json& cv = expect_array(j.at("covers"), "$.covers");
        for (std::size_t i = 0; i < cv.size(); ++i) {
            const std::string path = item_path("$.covers", i);
            if (!cv[i].is_array() || cv[i].size() != 2 || !cv[i][0].is_string() || !cv[i][1].is_string())
                schema(path, "expected [lower, upper]");
            covers.emplace_back(cv[i][0].get<std::string>(), cv[i][1].get<std::string>());
        }
    }
    std::map<std::string, LabelSet> carrier;
    if (j.contains("carrier")) {
        const Json& c = j.at("carrier");
        if (!c.is_object()) schema("$.carrier", "expected an object keyed by element id");
        for (const auto& [id, face] : c.items()) carrier[id] = labels_from_json(face, "$.carrier[\"" + id + "\"]");
    }
    std::optional<SimplicialComplex> base;
    if (j.contains("base")) {
        if (!j.contains("carrier")) schema("$.base", "a base needs a carrier");
        base = complex_from_json(j.at("base"), "$.base");
    }
    return FacePoset(std::move(elements), std::move(covers), std::move(carrier), std::move(base));
}

Json to_json(const OpWord& w) {
    Json out;
    out["format"] = kFormat;
    out["seed_vertices"] = w.seed_vertices;
    Json steps = Json::array();
    for (const auto& step : w.steps) {
        Json s;
        s["op"] = to_string(step.op);
        if (step.op != OpKind::O3) s["face"] = step.face ? labels_json(*step.face) : Json("auto");
        steps.push_back(std::move(s));
    }
    out["steps"] = std::move(steps);
    return out;
}

OpWord opword_from_json(const Json& j) {
    expect_object(j, "$", {"seed_vertices", "steps"}, {"seed_vertices", "steps"});
    OpWord w;
    const Json& seed = j.at("seed_vertices");
    if (!seed.is_number_unsigned() || seed.get<std::uint64_t>() == 0 || seed.get<std::uint64_t>() > kMaxBaseVertices)
        schema("$.seed_vertices", "expected an integer between 1 and 64");
    w.seed_vertices = seed.get<std::size_t>();
    const Json& steps = expect_array(j.at("steps"), "$.steps");
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const std::string path = item_path("$.steps", i);
        expect_object(steps[i], path, {"op", "face"}, {"op"});
        if (!steps[i].at("op").is_string()) schema(path + ".op", "expected a string");
        OpStep step;
        try {
            step.op = op_from_string(steps[i].at("op").get<std::string>());
        } catch (const Error& e) {
            schema(path + ".op", e.what());
        }
        if (steps[i].contains("face")) {
            const Json& face = steps[i].at("face");
            if (step.op == OpKind::O3) schema(path + ".face", "o3 takes no face");
            if (face.is_string() && face.get<std::string>() == "auto")
                step.face.reset();
            else
                step.face = labels_from_json(face, path + ".face");
        }
        w.steps.push_back(std::move(step));
    }
    return w;
}

Json to_json(const ValidityReport& r) {
    Json out;
    out["verdict"] = r.verdict();
    out["valid_weak"] = r.valid_weak();
    out["carrier_monotone"] = r.carrier_monotone;
    if (r.monotone_witness) {
        out["monotone_witness"] = {labels_json(r.monotone_witness->first), labels_json(r.monotone_witness->second)};
    }
    Json faces = Json::array();
    for (const auto& f : r.faces) {
        if (f.ok()) continue;
        faces.push_back({{"face", labels_json(f.face)}, {"failures", f.failures()}});
    }
    out["failing_faces"] = std::move(faces);
    return out;
}

Json to_json(const PredicateResult& r) {
    Json out;
    out["holds"] = r.holds;
    if (!r.holds) {
        out["witness_face"] = labels_json(r.witness_face);
        out["witness_base_face"] = labels_json(r.witness_base_face);
    }
    return out;
}

Json to_json(const IdentityReport& r) {
    Json out;
    out["format"] = kFormat;
    out["all_match"] = r.all_match();
    Json records = Json::array();
    for (const auto& rec : r.records) {
        Json j;
        j["name"] = rec.name;
        if (rec.face) j["face"] = labels_json(*rec.face);
        j["lhs"] = to_json(rec.lhs);
        j["rhs"] = to_json(rec.rhs);
        j["match"] = rec.match;
        if (!rec.error.empty()) j["error"] = rec.error;
        records.push_back(std::move(j));
    }
    out["records"] = std::move(records);
    if (r.d > 0) {
        out["d"] = r.d;
        out["local_h"] = to_json(r.local_h, r.d + 1);
        out["symmetric"] = r.symmetric;
        out["nonnegative"] = r.nonnegative;
        out["unimodal"] = r.unimodal;
        if (r.symmetric) out["local_gamma"] = to_json(r.gamma);
    }
    return out;
}

Json to_json(const AbPolynomial& p) {
    Json out = Json::object();
    for (const auto& [w, c] : p.coeffs) out[w] = to_json(c);
    return out;
}

Json to_json(const CdResult& r) {
    Json out;
    if (const auto* phi = std::get_if<CdPolynomial>(&r)) {
        out["expressible"] = true;
        Json coeffs = Json::object();
        for (const auto& [w, c] : phi->coeffs) coeffs[w] = to_json(c);
        out["coefficients"] = std::move(coeffs);
        out["text"] = phi->to_string();
    } else {
        const auto& ne = std::get<NotExpressible>(r);
        out["expressible"] = false;
        out["residual_word"] = ne.residual_word;
        out["residual"] = to_json(ne.residual);
        out["reason"] = ne.reason;
    }
    return out;
}

}  // namespace localh::io
