#include "tpverify/json_io.hpp"

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tpv {

namespace {

using nlohmann::json;

json tag_to_json(ArcTag tag) {
    switch (tag) {
        case ArcTag::left:
            return json("l");
        case ArcTag::right:
            return json("r");
        default:
            return json(nullptr);
    }
}

ArcTag tag_from_json(const json& j) {
    if (j.is_null()) return ArcTag::none;
    const auto text = j.get<std::string>();
    if (text == "l") return ArcTag::left;
    if (text == "r") return ArcTag::right;
    throw std::invalid_argument("unrecognized arc tag \"" + text + "\"");
}

const char* segment_kind_name(SegmentKind kind) {
    switch (kind) {
        case SegmentKind::forward:
            return "forward";
        case SegmentKind::diagonal:
            return "diagonal";
        default:
            return "mirrored";
    }
}

VertexId vertex_id_from_json(const json& j) {
    const auto text = j.get<std::string>();
    const auto id = parse_vertex_id(text);
    if (!id) throw std::invalid_argument("unrecognized vertex id \"" + text + "\"");
    return *id;
}

std::vector<QPoly> poly_list_from_json(const json& j) {
    std::vector<QPoly> out;
    out.reserve(j.size());
    for (const auto& entry : j) out.push_back(qpoly_from_json(entry));
    return out;
}

}  // namespace

json to_json(const QPoly& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
    return coeffs;
}

json to_json(const PolyMatrix& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) entries.push_back(to_json(m.at(i, j)));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

json to_json(const RecurrenceData& data) {
    json r = json::array();
    json s = json::array();
    json t = json::array();
    for (const auto& p : data.r_sequence) r.push_back(to_json(p));
    for (const auto& p : data.s_sequence) s.push_back(to_json(p));
    for (const auto& p : data.t_sequence) t.push_back(to_json(p));
    return json{{"r", std::move(r)}, {"s", std::move(s)}, {"t", std::move(t)}};
}

json to_json(const Network& net) {
    json vertices = json::array();
    for (std::size_t i = 0; i < net.vertex_count(); ++i) {
        const auto& v = net.vertex(static_cast<int>(i));
        vertices.push_back(
            json{{"id", to_string(v.id)}, {"label", v.label}, {"x", v.x}, {"y", v.y}});
    }
    json arcs = json::array();
    for (std::size_t i = 0; i < net.arc_count(); ++i) {
        const auto& a = net.arc(static_cast<int>(i));
        arcs.push_back(json{{"id", i},
                            {"tail", to_string(net.vertex(a.tail).id)},
                            {"head", to_string(net.vertex(a.head).id)},
                            {"weight", to_json(a.weight)},
                            {"tag", tag_to_json(a.tag)}});
    }
    return json{{"vertices", std::move(vertices)}, {"arcs", std::move(arcs)}};
}

json to_json(const SegmentedNetwork& seg) {
    json out = to_json(seg.ported.net);
    json segments = json::array();
    for (const auto& segment : seg.segments) {
        json vertices = json::array();
        for (const auto& id : segment.vertices) vertices.push_back(to_string(id));
        segments.push_back(json{{"kind", segment_kind_name(segment.kind)},
                                {"index", segment.index},
                                {"vertices", std::move(vertices)}});
    }
    out["segments"] = std::move(segments);
    return out;
}

json to_json(const PathFamily& family) {
    json out = json::array();
    for (const auto& path : family.paths) {
        json arcs = json::array();
        for (int arc : path.arcs) arcs.push_back(arc);
        out.push_back(std::move(arcs));
    }
    return out;
}

json to_json(const PropertyTag& tag) { return json(to_string(tag)); }

json to_json(const CheckResult& check) {
    return json{{"name", check.name},
                {"inputs", check.inputs},
                {"lhs", to_json(check.lhs)},
                {"rhs", to_json(check.rhs)},
                {"pass", check.pass}};
}

json to_json(const Certificate& cert) {
    json checks = json::array();
    for (const auto& check : cert.checks) checks.push_back(to_json(check));
    return json{{"subject", cert.subject},
                {"checks", std::move(checks)},
                {"pass", cert.pass},
                {"elapsed_ms", cert.elapsed_ms}};
}

QPoly qpoly_from_json(const json& j) {
    std::vector<mpz_class> coeffs;
    coeffs.reserve(j.size());
    for (const auto& entry : j) coeffs.emplace_back(entry.get<std::string>());
    return QPoly::from_coeffs(std::move(coeffs));
}

PolyMatrix polymatrix_from_json(const json& j) {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (entries.size() != rows * cols)
        throw std::invalid_argument("matrix JSON entry count does not match rows*cols");
    PolyMatrix m(rows, cols);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = qpoly_from_json(entries[pos++]);
    return m;
}

RecurrenceData recurrence_from_json(const json& j) {
    RecurrenceData data;
    data.r_sequence = poly_list_from_json(j.at("r"));
    data.s_sequence = poly_list_from_json(j.at("s"));
    data.t_sequence = poly_list_from_json(j.at("t"));
    return data;
}

Network network_from_json(const json& j) {
    NetworkBuilder builder;
    for (const auto& v : j.at("vertices")) {
        builder.add_vertex(vertex_id_from_json(v.at("id")), v.at("label").get<std::string>(),
                           v.at("x").get<int>(), v.at("y").get<int>());
    }
    const auto& arcs = j.at("arcs");
    std::vector<std::size_t> order(arcs.size());
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const auto id = arcs[i].at("id").get<std::size_t>();
        if (id >= arcs.size()) throw std::invalid_argument("arc id out of range in network JSON");
        order[i] = id;
    }
    std::vector<std::size_t> by_id(arcs.size());
    std::iota(by_id.begin(), by_id.end(), std::size_t{0});
    std::sort(by_id.begin(), by_id.end(),
              [&](std::size_t a, std::size_t b) { return order[a] < order[b]; });
    for (std::size_t i = 0; i < by_id.size(); ++i) {
        if (order[by_id[i]] != i) throw std::invalid_argument("arc ids in network JSON are not dense");
        const auto& a = arcs[by_id[i]];
        builder.add_arc(vertex_id_from_json(a.at("tail")), vertex_id_from_json(a.at("head")),
                        qpoly_from_json(a.at("weight")), tag_from_json(a.at("tag")));
    }
    return builder.finish();
}

void write_json_file(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open \"" + path + "\" for writing");
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("failed while writing \"" + path + "\"");
}

}  // namespace tpv
