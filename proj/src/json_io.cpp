#include "conmat/json_io.hpp"

#include <algorithm>
#include <fstream>

namespace conmat {

using nlohmann::json;

json simplex_to_json(const Simplex& s) {
    json out = json::array();
    for (const std::string& v : s.vertices()) out.push_back(v);
    return out;
}

Simplex simplex_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw validation_error("a simplex must be a nonempty array of vertex strings");
    std::vector<std::string> verts;
    for (const auto& v : j) {
        if (!v.is_string())
            throw validation_error("a simplex must be a nonempty array of vertex strings");
        verts.push_back(v.get<std::string>());
    }
    return Simplex(std::move(verts));
}

namespace {

std::vector<Simplex> simplex_list(const json& j, const char* what) {
    if (!j.is_array()) throw validation_error(std::string(what) + " must be an array");
    std::vector<Simplex> out;
    for (const auto& s : j) out.push_back(simplex_from_json(s));
    return out;
}

int resolve_simplex(const SimplicialComplex& k, const json& j) {
    const Simplex s = simplex_from_json(j);
    auto id = k.find(s);
    if (!id) throw validation_error("unknown simplex " + s.to_string());
    return *id;
}

std::vector<std::vector<int>> resolve_blocks(const SimplicialComplex& k, const json& j,
                                             const char* what) {
    if (!j.is_array()) throw validation_error(std::string(what) + " must be an array of arrays");
    std::vector<std::vector<int>> out;
    for (const auto& block : j) {
        if (!block.is_array())
            throw validation_error(std::string(what) + " must be an array of arrays");
        std::vector<int> ids;
        for (const auto& s : block) ids.push_back(resolve_simplex(k, s));
        out.push_back(std::move(ids));
    }
    return out;
}

} // namespace

SimplicialComplex complex_from_json(const json& j) {
    if (!j.is_object())
        throw validation_error("\"complex\" must be an object with \"facets\" or \"simplices\"");
    if (j.contains("facets"))
        return SimplicialComplex::from_facets(simplex_list(j["facets"], "\"facets\""));
    if (j.contains("simplices"))
        return SimplicialComplex::from_simplices(simplex_list(j["simplices"], "\"simplices\""));
    throw validation_error("\"complex\" must contain \"facets\" or \"simplices\"");
}

ProblemInput parse_problem(const json& j) {
    if (!j.is_object()) throw validation_error("input must be a JSON object");
    if (!j.contains("format") || j["format"] != 1)
        throw validation_error("input must declare \"format\": 1");
    if (!j.contains("complex")) throw validation_error("input must contain \"complex\"");

    ProblemInput in;
    in.complex = complex_from_json(j["complex"]);

    if (!j.contains("multivectors"))
        throw validation_error("input must contain \"multivectors\"");
    in.multivectors = resolve_blocks(in.complex, j["multivectors"], "\"multivectors\"");

    if (j.contains("morse_sets"))
        in.morse_sets = resolve_blocks(in.complex, j["morse_sets"], "\"morse_sets\"");

    if (j.contains("intra_order")) {
        const json& io = j["intra_order"];
        if (io.is_object()) {
            for (auto it = io.begin(); it != io.end(); ++it) {
                int set_id = 0;
                try {
                    set_id = std::stoi(it.key());
                } catch (const std::exception&) {
                    throw validation_error("intra_order keys must be Morse set ids");
                }
                std::vector<int> ids;
                for (const auto& s : it.value()) ids.push_back(resolve_simplex(in.complex, s));
                in.keyed_intra[set_id] = std::move(ids);
            }
        } else if (io.is_array()) {
            in.unkeyed_intra = resolve_blocks(in.complex, io, "\"intra_order\"");
        } else {
            throw validation_error("\"intra_order\" must be an object or an array");
        }
    }

    if (j.contains("linext_seed")) {
        if (!j["linext_seed"].is_number_unsigned())
            throw validation_error("\"linext_seed\" must be an unsigned integer");
        in.linext_seed = j["linext_seed"].get<std::uint64_t>();
    }
    return in;
}

ProblemInput load_problem(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw validation_error("cannot open input file: " + path);
    json j;
    try {
        j = json::parse(f);
    } catch (const json::parse_error& e) {
        throw validation_error(std::string("JSON parse error: ") + e.what());
    }
    return parse_problem(j);
}

IntraOrders resolve_intra_orders(const ProblemInput& input, const MorseDecomposition& decomp) {
    IntraOrders intra;
    for (const auto& [set_id, ids] : input.keyed_intra) {
        if (set_id < 0 || set_id >= decomp.n_sets())
            throw validation_error("intra_order references Morse set " + std::to_string(set_id) +
                                   " but the decomposition has " +
                                   std::to_string(decomp.n_sets()) + " sets");
        intra[set_id] = ids;
    }
    for (const auto& ids : input.unkeyed_intra) {
        std::vector<int> sorted = ids;
        std::sort(sorted.begin(), sorted.end());
        int found = -1;
        for (int p = 0; p < decomp.n_sets(); ++p) {
            if (decomp.set(p) == sorted) {
                found = p;
                break;
            }
        }
        if (found == -1)
            throw validation_error("an intra_order list does not match any Morse set");
        intra[found] = ids;
    }
    return intra;
}

json morse_to_json(const MorseDecomposition& decomp, const SimplicialComplex& k) {
    json sets = json::array();
    for (const auto& set : decomp.sets()) {
        json members = json::array();
        for (int id : set) members.push_back(simplex_to_json(k.simplex(id)));
        sets.push_back(std::move(members));
    }
    json pairs = json::array();
    for (auto [p, q] : decomp.covering_pairs()) pairs.push_back(json::array({p, q}));
    return json{{"format", 1}, {"sets", std::move(sets)}, {"order_pairs", std::move(pairs)}};
}

json connection_to_json(const PipelineResult& result, const SimplicialComplex& k,
                        bool emit_trace, bool emit_matrix) {
    const ConnectionMatrix& cm = result.connection;
    const AdmissibleBasis& basis = result.input.basis;

    json basis_json = json::array();
    for (Index p = 1; p <= basis.n(); ++p)
        basis_json.push_back(simplex_to_json(k.simplex(basis.simplex_at(p))));

    json grades = json::array();
    for (Index p = 1; p <= basis.n(); ++p) grades.push_back(basis.nu_at(p));

    json surviving = json::array();
    for (Index p : cm.surviving) surviving.push_back(p);

    json entries = json::array();
    for (Index b = 1; b <= cm.size(); ++b) {
        const Index col = cm.surviving[static_cast<std::size_t>(b - 1)];
        for (Index i : cm.entries.column(b))
            entries.push_back(json::array({cm.surviving[static_cast<std::size_t>(i - 1)], col}));
    }

    json labels = json::object();
    for (Index b = 1; b <= cm.size(); ++b)
        labels[std::to_string(cm.surviving[static_cast<std::size_t>(b - 1)])] =
            simplex_to_json(cm.labels[static_cast<std::size_t>(b - 1)]);

    json out{{"format", 1},
             {"basis", std::move(basis_json)},
             {"grades", std::move(grades)},
             {"surviving", std::move(surviving)},
             {"entries", std::move(entries)},
             {"labels", std::move(labels)},
             {"report",
              {{"n", result.report.n},
               {"sets", result.report.n_sets},
               {"events", result.report.events},
               {"surviving_count", result.report.n_surviving}}}};

    if (emit_trace) {
        json trace = json::array();
        for (const TraceEvent& e : result.state.trace)
            trace.push_back(json::array(
                {k.simplex(basis.simplex_at(e.source)).to_string(),
                 k.simplex(basis.simplex_at(e.target)).to_string()}));
        out["trace"] = std::move(trace);
    }
    if (emit_matrix) {
        json cols = json::array();
        for (Index j = 1; j <= result.input.matrix.n_cols(); ++j) {
            json col = json::array();
            for (Index i : result.input.matrix.column(j)) col.push_back(i);
            cols.push_back(std::move(col));
        }
        out["matrix"] = std::move(cols);
    }
    return out;
}

LoadedConnection connection_from_json(const json& j) {
    if (!j.is_object() || !j.contains("format") || j["format"] != 1)
        throw validation_error("connection matrix file must declare \"format\": 1");
    for (const char* key : {"basis", "grades", "surviving", "entries"})
        if (!j.contains(key))
            throw validation_error(std::string("connection matrix file is missing \"") + key +
                                   "\"");

    LoadedConnection out;
    for (const auto& s : j["basis"]) out.basis.push_back(simplex_from_json(s));
    for (const auto& g : j["grades"]) {
        if (!g.is_number_integer())
            throw validation_error("\"grades\" must be an array of integers");
        out.grades.push_back(g.get<int>());
    }
    if (out.grades.size() != out.basis.size())
        throw validation_error("\"grades\" must match \"basis\" in length");

    const Index n = static_cast<Index>(out.basis.size());
    for (const auto& p : j["surviving"]) {
        if (!p.is_number_integer() || p.get<Index>() < 1 || p.get<Index>() > n)
            throw validation_error("\"surviving\" must list basis positions");
        out.surviving.push_back(p.get<Index>());
    }
    for (const auto& e : j["entries"]) {
        if (!e.is_array() || e.size() != 2)
            throw validation_error("\"entries\" must be an array of [row, column] pairs");
        const Index r = e[0].get<Index>();
        const Index c = e[1].get<Index>();
        if (r < 1 || r > n || c < 1 || c > n)
            throw validation_error("entry position out of range");
        out.entries.push_back({r, c});
    }
    return out;
}

json certificate_to_json(const Certificate& cert) {
    json checks = json::object();
    std::string witness;
    for (const auto& c : cert.checks) {
        checks[c.name] = c.ok;
        if (!c.ok && witness.empty()) witness = c.name + ": " + c.witness;
    }
    json out{{"format", 1}, {"checks", std::move(checks)}};
    out["witness"] = witness.empty() ? json() : json(witness);
    return out;
}

json violations_to_json(const SimplicialComplex& k, const std::vector<FieldViolation>& field,
                        const std::vector<MorseViolation>& morse) {
    json list = json::array();
    for (const auto& v : field) list.push_back(v.describe(k));
    for (const auto& v : morse) list.push_back(v.describe(k));
    return json{{"format", 1}, {"valid", list.empty()}, {"violations", std::move(list)}};
}

} // namespace conmat
