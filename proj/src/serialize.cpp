#include "orbitatlas/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace orbitatlas {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json matrix_to_json(const QMatrix& m) {
    ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    std::vector<std::string> data;
    data.reserve(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) data.push_back(rat_to_string(m.at(r, c)));
    j["data"] = data;
    return j;
}

QMatrix matrix_from_json(const json& j) {
    QMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    const auto& data = j.at("data");
    if (data.size() != m.rows() * m.cols())
        throw std::invalid_argument("matrix data length mismatch");
    std::size_t i = 0;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            m.at(r, c) = rat_from_string(data.at(i++).get<std::string>());
    return m;
}

ordered_json tangent_to_json(const TangentElement& x) {
    ordered_json j;
    j["sigma"] = matrix_to_json(x.sigma);
    j["H"] = matrix_to_json(x.H);
    return j;
}

TangentElement tangent_from_json(const IsoContext& ctx, const json& j) {
    TangentElement x{matrix_from_json(j.at("sigma")), matrix_from_json(j.at("H"))};
    check_dims(ctx, x);
    return x;
}

ordered_json triplet_to_json(const OrbitTriplet& o) { return ordered_json{o.r, o.h, o.t}; }

OrbitTriplet triplet_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3)
        throw std::invalid_argument("orbit triplet must be a 3-array");
    return OrbitTriplet{j.at(0).get<long>(), j.at(1).get<long>(), j.at(2).get<long>()};
}

ordered_json hasse_to_json(const HasseDiagram& d) {
    ordered_json nodes = ordered_json::array();
    for (const auto& n : d.nodes) {
        ordered_json jn;
        jn["id"] = n.id;
        jn["label"] = n.display;
        if (n.dim) jn["dim"] = *n.dim;
        for (const auto& [k, v] : n.attrs) jn[k] = v;
        nodes.push_back(jn);
    }
    ordered_json edges = ordered_json::array();
    for (const auto& e : d.edges) {
        ordered_json je;
        je["lower"] = d.nodes[e.lower].id;
        je["upper"] = d.nodes[e.upper].id;
        if (!e.witness.empty()) je["witness"] = e.witness;
        edges.push_back(je);
    }
    ordered_json j;
    j["nodes"] = nodes;
    j["edges"] = edges;
    return j;
}

std::string hasse_to_dot(const HasseDiagram& d, const std::string& graph_name) {
    std::ostringstream out;
    out << "digraph \"" << graph_name << "\" {\n";
    out << "  rankdir=BT;\n  node [shape=box];\n";
    for (const auto& n : d.nodes) {
        out << "  \"" << n.id << "\" [label=\"" << n.display;
        if (n.dim) out << "\\ndim " << *n.dim;
        out << "\"];\n";
    }
    for (const auto& e : d.edges) {
        out << "  \"" << d.nodes[e.lower].id << "\" -> \"" << d.nodes[e.upper].id << "\"";
        if (!e.witness.empty()) out << " [label=\"" << e.witness << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

ordered_json family_to_json(const LociReport& rep) {
    const CominusculeFamily& fam = rep.family;
    ordered_json j;
    j["type"] = fam.dynkin.name();
    j["node"] = fam.node;
    j["family"] = to_string(fam.name);
    j["display"] = fam.display();
    j["dim_X"] = fam.dim_x;
    j["ambient_proj_dim"] = fam.ambient_proj_dim;
    j["d"] = fam.d;
    j["dim_sigma2"] = fam.dim_sigma2;
    j["fill_status"] = to_string(fam.fill);
    if (rep.decomposition_locus_dim)
        j["decomposition_locus_dim"] = *rep.decomposition_locus_dim;
    j["singular_locus"] = to_string(rep.sing_set);
    j["singular_locus_dim"] = rep.sing_dim;
    j["terracini_locus"] = to_string(rep.terracini);
    ordered_json orbits = ordered_json::array();
    for (const auto& v : rep.orbits) {
        ordered_json jo;
        jo["id"] = v.id;
        jo["label"] = v.display;
        if (v.dim) jo["dim"] = *v.dim;
        jo["identifiable"] = to_string(v.identifiable);
        if (v.smooth_in_secant) jo["smooth"] = *v.smooth_in_secant;
        jo["terracini"] = v.in_terracini_image;
        orbits.push_back(jo);
    }
    j["orbits"] = orbits;
    return j;
}

std::string loci_to_tsv(const LociReport& rep) {
    std::ostringstream out;
    out << "label\tdim\tidentifiable\tsmooth\tterracini\n";
    for (const auto& v : rep.orbits) {
        out << v.display << "\t";
        if (v.dim)
            out << *v.dim;
        else
            out << "unknown";
        out << "\t" << to_string(v.identifiable) << "\t";
        if (v.smooth_in_secant)
            out << (*v.smooth_in_secant ? "smooth" : "singular");
        else
            out << "n/a";
        out << "\t" << (v.in_terracini_image ? "yes" : "no") << "\n";
    }
    return out.str();
}

std::string triplets_to_tsv(const IsoContext& ctx, const std::vector<OrbitTriplet>& orbits) {
    std::ostringstream out;
    out << "r\th\tt\tdim\n";
    for (const auto& o : orbits)
        out << o.r << "\t" << o.h << "\t" << o.t << "\t" << orbit_dim(ctx, o) << "\n";
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << content;
    if (!f) throw std::runtime_error("write failed for " + path);
}

} // namespace orbitatlas
