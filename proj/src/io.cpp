#include "gridfree/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace gridfree {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::string trihyper_to_json(const TripartiteHypergraph& h) {
    ordered_json j;
    j["format"] = "trihyper-v1";
    j["p"] = h.modulus();
    j["construction"] = h.provenance().construction;
    j["x_set"] = h.provenance().x_set;
    j["a_set"] = h.provenance().a_set;
    j["note"] = h.provenance().note;
    j["parts"]["X"] = h.part(Part::X);
    j["parts"]["Y"] = h.part(Part::Y);
    j["parts"]["Z"] = h.part(Part::Z);
    ordered_json edges = ordered_json::array();
    for (const auto& e : h.edges())
        edges.push_back({e.val[0], e.val[1], e.val[2]});
    j["edges"] = std::move(edges);
    return j.dump(2) + "\n";
}

TripartiteHypergraph trihyper_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    if (j.value("format", "") != std::string("trihyper-v1"))
        throw std::runtime_error("not a trihyper-v1 document");
    Provenance prov;
    prov.p = j.at("p").get<std::uint64_t>();
    prov.construction = j.value("construction", "");
    prov.x_set = j.value("x_set", "");
    prov.a_set = j.value("a_set", "");
    prov.note = j.value("note", "");
    std::array<std::vector<std::uint64_t>, 3> parts;
    parts[0] = j.at("parts").at("X").get<std::vector<std::uint64_t>>();
    parts[1] = j.at("parts").at("Y").get<std::vector<std::uint64_t>>();
    parts[2] = j.at("parts").at("Z").get<std::vector<std::uint64_t>>();
    std::vector<std::array<std::uint64_t, 3>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 3)
            throw std::runtime_error("bad edge entry");
        edges.push_back({e[0].get<std::uint64_t>(), e[1].get<std::uint64_t>(),
                         e[2].get<std::uint64_t>()});
    }
    return TripartiteHypergraph::from_parts_edges(prov.p, std::move(parts), edges,
                                                  std::move(prov));
}

std::string trihyper_to_text(const TripartiteHypergraph& h) {
    std::ostringstream out;
    out << "# format trihyper-v1\n";
    out << "# p " << h.modulus() << "\n";
    out << "# construction " << h.provenance().construction << "\n";
    out << "# x_set " << h.provenance().x_set << "\n";
    out << "# a_set " << h.provenance().a_set << "\n";
    out << "# note " << h.provenance().note << "\n";
    for (int s = 0; s < 3; ++s) {
        Part part = static_cast<Part>(s);
        out << "# part " << part_name(part);
        for (auto v : h.part(part)) out << " " << v;
        out << "\n";
    }
    for (const auto& e : h.edges())
        out << e.val[0] << " " << e.val[1] << " " << e.val[2] << "\n";
    return out.str();
}

TripartiteHypergraph trihyper_from_text(const std::string& text) {
    Provenance prov;
    std::array<std::vector<std::uint64_t>, 3> parts;
    std::vector<std::array<std::uint64_t, 3>> edges;
    bool saw_format = false;

    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream ls(line.substr(1));
            std::string key;
            ls >> key;
            if (key == "format") {
                std::string v;
                ls >> v;
                if (v != "trihyper-v1")
                    throw std::runtime_error("not a trihyper-v1 edge list");
                saw_format = true;
            } else if (key == "p") {
                ls >> prov.p;
            } else if (key == "construction") {
                ls >> prov.construction;
            } else if (key == "x_set") {
                ls >> prov.x_set;
            } else if (key == "a_set") {
                ls >> prov.a_set;
            } else if (key == "note") {
                std::string rest;
                std::getline(ls, rest);
                if (!rest.empty() && rest.front() == ' ') rest.erase(0, 1);
                prov.note = rest;
            } else if (key == "part") {
                std::string side;
                ls >> side;
                int s = side == "X" ? 0 : side == "Y" ? 1 : side == "Z" ? 2 : -1;
                if (s < 0) throw std::runtime_error("bad part header: " + line);
                std::uint64_t v;
                while (ls >> v) parts[s].push_back(v);
            }
            continue;
        }
        std::istringstream ls(line);
        std::array<std::uint64_t, 3> e{};
        if (!(ls >> e[0] >> e[1] >> e[2]))
            throw std::runtime_error("bad edge line: " + line);
        edges.push_back(e);
    }
    if (!saw_format) throw std::runtime_error("missing trihyper-v1 header");
    return TripartiteHypergraph::from_parts_edges(prov.p, std::move(parts), edges,
                                                  std::move(prov));
}

void save_trihyper(const TripartiteHypergraph& h, const std::string& path,
                   bool as_text) {
    write_file(path, as_text ? trihyper_to_text(h) : trihyper_to_json(h));
}

TripartiteHypergraph load_trihyper(const std::string& path) {
    std::string text = read_file(path);
    auto pos = text.find_first_not_of(" \t\r\n");
    if (pos == std::string::npos) throw std::runtime_error("empty file " + path);
    return text[pos] == '{' ? trihyper_from_json(text) : trihyper_from_text(text);
}

std::string pattern_to_json(const Pattern& f) {
    ordered_json j;
    j["format"] = "pattern-v1";
    j["name"] = f.name;
    j["vertices"] = f.n;
    ordered_json edges = ordered_json::array();
    for (const auto& e : f.edges) edges.push_back({e[0], e[1], e[2]});
    j["edges"] = std::move(edges);
    return j.dump(2) + "\n";
}

Pattern pattern_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    if (j.value("format", "") != std::string("pattern-v1"))
        throw std::runtime_error("not a pattern-v1 document");
    Pattern f;
    f.name = j.value("name", "");
    f.n = j.at("vertices").get<int>();
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 3)
            throw std::runtime_error("bad pattern edge");
        f.edges.push_back({e[0].get<std::uint8_t>(), e[1].get<std::uint8_t>(),
                           e[2].get<std::uint8_t>()});
    }
    f.validate();
    return f;
}

void save_pattern(const Pattern& f, const std::string& path) {
    write_file(path, pattern_to_json(f));
}

Pattern load_pattern(const std::string& path) {
    return pattern_from_json(read_file(path));
}

Pattern resolve_pattern(const std::string& name_or_path) {
    if (name_or_path == "grid" || name_or_path == "grid3x3")
        return Pattern::grid3x3();
    if (name_or_path == "triangle") return Pattern::triangle();
    return load_pattern(name_or_path);
}

void save_catalog(const CoreCatalog& catalog, const std::string& dir) {
    fs::create_directories(dir);
    ordered_json idx;
    idx["format"] = "core-catalog-v1";
    idx["max_vertices"] = catalog.max_vertices;
    ordered_json entries = ordered_json::array();
    for (const auto& entry : catalog.entries) {
        ordered_json e;
        e["name"] = entry.name;
        e["vertices"] = entry.pattern.n;
        e["edges"] = entry.pattern.edges.size();
        e["canonical"] = entry.canonical_hex;
        e["min_degree"] = entry.min_degree;
        e["contains_triangle"] = entry.contains_triangle;
        e["is_grid"] = entry.is_grid;
        e["contains_grid"] = entry.contains_grid;
        e["minimal"] = entry.minimal;
        e["file"] = entry.name + ".json";
        entries.push_back(std::move(e));
        save_pattern(entry.pattern, (fs::path(dir) / (entry.name + ".json")).string());
    }
    idx["entries"] = std::move(entries);
    write_file((fs::path(dir) / "index.json").string(), idx.dump(2) + "\n");
}

CoreCatalog load_catalog(const std::string& dir) {
    ordered_json idx =
        ordered_json::parse(read_file((fs::path(dir) / "index.json").string()));
    if (idx.value("format", "") != std::string("core-catalog-v1"))
        throw std::runtime_error("not a core-catalog-v1 index");
    CoreCatalog cat;
    cat.max_vertices = idx.at("max_vertices").get<int>();
    std::unordered_map<std::string, bool> seen_canon;
    for (const auto& e : idx.at("entries")) {
        CoreEntry entry;
        entry.name = e.at("name").get<std::string>();
        entry.canonical_hex = e.at("canonical").get<std::string>();
        entry.min_degree = e.at("min_degree").get<int>();
        entry.contains_triangle = e.at("contains_triangle").get<bool>();
        entry.is_grid = e.at("is_grid").get<bool>();
        entry.contains_grid = e.value("contains_grid", false);
        entry.minimal = e.value("minimal", false);
        entry.pattern = load_pattern(
            (fs::path(dir) / e.at("file").get<std::string>()).string());

        // Re-validate on load.
        if (entry.pattern.n > cat.max_vertices)
            throw std::runtime_error(entry.name + ": vertex count exceeds catalog cap");
        if (!pattern_is_linear(entry.pattern))
            throw std::runtime_error(entry.name + ": entry is not linear");
        if (pattern_min_degree(entry.pattern) < 2)
            throw std::runtime_error(entry.name + ": entry has degree-1 vertex");
        if (canonical_hex(entry.pattern) != entry.canonical_hex)
            throw std::runtime_error(entry.name + ": canonical form mismatch");
        if (seen_canon.count(entry.canonical_hex))
            throw std::runtime_error(entry.name + ": duplicate isomorphism class");
        seen_canon[entry.canonical_hex] = true;
        cat.entries.push_back(std::move(entry));
    }
    return cat;
}

}  // namespace gridfree
