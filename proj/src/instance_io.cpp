#include "gkflow/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "gkflow/corollaries.hpp"

namespace gkflow {

namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> parse_elements(const json& doc) {
    if (!doc.contains("elements") || !doc["elements"].is_array())
        throw ParseError("instance file needs an \"elements\" array");
    std::vector<std::string> elements;
    for (const auto& item : doc["elements"]) {
        if (!item.is_string()) throw ParseError("element names must be strings");
        elements.push_back(item.get<std::string>());
    }
    return elements;
}

std::vector<NamePair> parse_name_pairs(const json& arr, const char* what) {
    std::vector<NamePair> pairs;
    for (const auto& item : arr) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_string() ||
            !item[1].is_string())
            throw ParseError(std::string(what) + " entries must be [name, name] pairs");
        pairs.emplace_back(item[0].get<std::string>(), item[1].get<std::string>());
    }
    return pairs;
}

} // namespace

InstanceFile parse_instance_file(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("instance file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("instance file must be a JSON object");

    std::vector<std::string> elements = parse_elements(doc);
    const int n = static_cast<int>(elements.size());

    std::vector<NamePair> covers;
    if (doc.contains("covers")) {
        if (!doc["covers"].is_array()) throw ParseError("\"covers\" must be an array");
        covers = parse_name_pairs(doc["covers"], "covers");
    }
    Poset poset = transitive_closure(elements, covers);

    std::optional<Labeling> labeling;
    if (doc.contains("h") && !(doc["h"].is_string() && doc["h"] == "auto")) {
        if (!doc["h"].is_object())
            throw ParseError("\"h\" must be a name-to-rank object or \"auto\"");
        std::vector<int> ranks(n, 0);
        std::vector<char> assigned(n, 0);
        for (const auto& [name, value] : doc["h"].items()) {
            if (!value.is_number_integer())
                throw ParseError("rank of \"" + name + "\" must be an integer");
            ElementId e = poset.id_of(name);
            if (assigned[e]) throw ParseError("element \"" + name + "\" labeled twice");
            assigned[e] = 1;
            ranks[e] = value.get<int>();
        }
        for (int e = 0; e < n; ++e)
            if (!assigned[e])
                throw ParseError("element \"" + poset.name(e) + "\" has no rank");
        try {
            labeling.emplace(std::move(ranks));
        } catch (const Error& e) {
            throw ParseError(std::string("bad labeling: ") + e.what());
        }
    }

    InstanceFile file{std::move(poset), std::move(labeling),
                      InstanceFile::CpSpec::Minimal, {}};
    if (doc.contains("cp")) {
        const auto& cp = doc["cp"];
        if (cp.is_string()) {
            std::string mode = cp.get<std::string>();
            if (mode == "minimal")
                file.cp_spec = InstanceFile::CpSpec::Minimal;
            else if (mode == "full")
                file.cp_spec = InstanceFile::CpSpec::Full;
            else
                throw ParseError("\"cp\" must be \"minimal\", \"full\" or a pair list");
        } else if (cp.is_array()) {
            file.cp_spec = InstanceFile::CpSpec::Explicit;
            for (const auto& [a, b] : parse_name_pairs(cp, "cp"))
                file.cp_pairs.emplace_back(file.poset.id_of(a), file.poset.id_of(b));
        } else {
            throw ParseError("\"cp\" must be \"minimal\", \"full\" or a pair list");
        }
    }
    return file;
}

Instance resolve_instance(const InstanceFile& file) {
    const int n = file.poset.size();
    Labeling h = file.labeling ? *file.labeling : default_linear_extension(file.poset);

    std::vector<IdPair> pairs;
    switch (file.cp_spec) {
    case InstanceFile::CpSpec::Minimal:
        pairs = forced_pairs(file.poset, h);
        break;
    case InstanceFile::CpSpec::Full:
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (x != y && h.rank(x) < h.rank(y)) pairs.emplace_back(x, y);
        break;
    case InstanceFile::CpSpec::Explicit:
        pairs = file.cp_pairs;
        break;
    }
    return validate_instance(file.poset, std::move(h), CompatRelation(n, std::move(pairs)));
}

Instance parse_instance(const std::string& text) {
    return resolve_instance(parse_instance_file(text));
}

std::string render_instance(const Instance& inst) {
    const Poset& poset = inst.poset();
    json doc;
    doc["elements"] = poset.element_names();
    json covers = json::array();
    for (auto [x, y] : poset.cover_pairs())
        covers.push_back({poset.name(x), poset.name(y)});
    doc["covers"] = std::move(covers);
    json h = json::object();
    for (int e = 0; e < poset.size(); ++e) h[poset.name(e)] = inst.rank(e);
    doc["h"] = std::move(h);
    json cp = json::array();
    for (auto [x, y] : inst.cp().pairs())
        cp.push_back({poset.name(x), poset.name(y)});
    doc["cp"] = std::move(cp);
    return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace gkflow
