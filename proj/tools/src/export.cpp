#include <sstream>

#include "glci/error.hpp"
#include "glci_cli/cli.hpp"
#include "json.hpp"

namespace glci::cli {

using nlohmann::json;

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out.push_back('\\');
        out.push_back(ch);
    }
    return out;
}

json quiver_json(const Quiver& q) {
    json j;
    j["d"] = q.d;
    j["weights"] = q.weights;
    j["vertices"] = json::array();
    for (const auto& v : q.vertices) j["vertices"].push_back({{"torsion", v.torsion}, {"free", v.free}});
    j["arrows"] = json::array();
    for (const auto& a : q.arrows) {
        json ja{{"from", a.source}, {"to", a.target}, {"label", a.label}};
        if (a.cut) ja["cut"] = true;
        j["arrows"].push_back(ja);
    }
    j["relations"] = json::array();
    for (const auto& r : q.relations) {
        json coeffs = json::array();
        for (const auto& c : r.coeffs) coeffs.push_back(c.to_string());
        j["relations"].push_back({{"paths", r.paths}, {"coeffs", coeffs}});
    }
    return j;
}

Rational entry_to_rational(const json& e) {
    if (e.is_number_integer()) return Rational(static_cast<long>(e.get<std::int64_t>()));
    if (e.is_string()) return parse_rational(e.get<std::string>());
    throw InvalidInput("lambda entries must be integers or rational strings");
}

}  // namespace

std::string export_quiver(const Quiver& q, Format format) {
    if (format == Format::Json) return quiver_json(q).dump(2) + "\n";
    std::ostringstream out;
    if (format == Format::Dot) {
        out << "digraph quiver {\n  rankdir=LR;\n";
        for (std::size_t v = 0; v < q.vertices.size(); ++v)
            out << "  v" << v << " [label=\"" << dot_escape(to_string(q.vertices[v])) << "\"];\n";
        for (const auto& a : q.arrows) {
            out << "  v" << a.source << " -> v" << a.target << " [label=\"x" << a.label << "\"";
            if (a.cut) out << ", style=dashed";
            out << "];\n";
        }
        out << "}\n";
        return out.str();
    }
    out << "vertices: " << q.vertices.size() << "\n";
    for (std::size_t v = 0; v < q.vertices.size(); ++v) out << "  " << v << ": " << to_string(q.vertices[v]) << "\n";
    out << "arrows: " << q.arrows.size() << "\n";
    for (std::size_t i = 0; i < q.arrows.size(); ++i) {
        const auto& a = q.arrows[i];
        out << "  " << i << ": " << a.source << " -> " << a.target << " [x" << a.label << "]" << (a.cut ? " cut" : "")
            << "\n";
    }
    out << "relations: " << q.relations.size() << "\n";
    for (std::size_t i = 0; i < q.relations.size(); ++i) {
        const auto& r = q.relations[i];
        const auto src = q.arrows[r.paths.front().front()].source;
        const auto dst = q.arrows[r.paths.front().back()].target;
        out << "  " << i << ": " << to_string(q.vertices[src]) << " -> " << to_string(q.vertices[dst]) << ":";
        for (std::size_t k = 0; k < r.paths.size(); ++k) {
            out << " " << r.coeffs[k].to_string() << "*[";
            for (std::size_t s = 0; s < r.paths[k].size(); ++s)
                out << (s ? "," : "") << q.arrows[r.paths[k][s]].label;
            out << "]";
        }
        out << "\n";
    }
    return out.str();
}

Quiver quiver_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("quiver JSON does not parse: ") + e.what());
    }
    try {
        Quiver q;
        q.d = j.at("d").get<int>();
        q.weights = j.at("weights").get<std::vector<int>>();
        const auto p = make_weight_system(q.d, q.weights);
        for (const auto& v : j.at("vertices")) {
            GroupElement x{v.at("torsion").get<std::vector<std::int64_t>>(), v.at("free").get<std::int64_t>()};
            if (x.torsion.size() != p.n() || normal_form(p, x.torsion, x.free) != x)
                throw InvalidInput("vertex is not a normal form: " + v.dump());
            q.vertices.push_back(std::move(x));
        }
        for (const auto& a : j.at("arrows")) {
            Arrow arr{a.at("from").get<std::size_t>(), a.at("to").get<std::size_t>(), a.at("label").get<int>(),
                      a.value("cut", false)};
            if (arr.source >= q.vertices.size() || arr.target >= q.vertices.size())
                throw InvalidInput("arrow endpoint out of range");
            if (arr.label < 1 || static_cast<std::size_t>(arr.label) > p.n()) throw InvalidInput("arrow label out of range");
            q.arrows.push_back(arr);
        }
        for (const auto& r : j.at("relations")) {
            Relation rel;
            rel.paths = r.at("paths").get<std::vector<std::vector<std::size_t>>>();
            for (const auto& c : r.at("coeffs")) rel.coeffs.push_back(Coefficient::parse(c.get<std::string>()));
            if (rel.paths.size() != rel.coeffs.size() || rel.paths.empty())
                throw InvalidInput("relation needs one coefficient per path");
            for (const auto& path : rel.paths) {
                if (path.empty()) throw InvalidInput("empty relation path");
                for (auto a : path)
                    if (a >= q.arrows.size()) throw InvalidInput("relation arrow out of range");
            }
            q.relations.push_back(std::move(rel));
        }
        return q;
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed quiver JSON: ") + e.what());
    }
}

RationalMatrix lambda_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("lambda JSON does not parse: ") + e.what());
    }
    if (j.is_object()) {
        if (!j.contains("lambda")) throw InvalidInput("lambda JSON object needs a \"lambda\" key");
        j = j["lambda"];
    }
    if (!j.is_array() || j.empty() || !j[0].is_array()) throw InvalidInput("lambda must be a nonempty array of rows");
    const std::size_t cols = j[0].size();
    RationalMatrix m(j.size(), cols);
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw InvalidInput("lambda rows must have equal length");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = entry_to_rational(j[i][k]);
    }
    return m;
}

}  // namespace glci::cli
