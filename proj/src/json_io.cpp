#include "cartanlift/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cartanlift {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

std::shared_ptr<const SimplicialSetBase> parse_space_json(const std::string& json_text) {
    json j = json::parse(json_text);
    if (!j.contains("simplices")) throw std::runtime_error("space JSON: missing 'simplices'");
    std::vector<std::vector<std::string>> names;
    for (const auto& level : j.at("simplices")) {
        names.emplace_back();
        for (const auto& nm : level) names.back().push_back(nm.get<std::string>());
    }
    // name -> (dim, idx), for resolving face entries
    std::map<std::string, std::pair<int, int>> where;
    for (size_t d = 0; d < names.size(); ++d)
        for (size_t i = 0; i < names[d].size(); ++i) {
            if (where.count(names[d][i]))
                throw std::runtime_error("space JSON: duplicate simplex name " + names[d][i]);
            where[names[d][i]] = {static_cast<int>(d), static_cast<int>(i)};
        }
    std::map<std::string, std::vector<ExplicitSet::FaceEntry>> faces;
    if (j.contains("faces"))
        for (const auto& [name, list] : j.at("faces").items()) {
            std::vector<ExplicitSet::FaceEntry> entries;
            for (const auto& fe : list) {
                ExplicitSet::FaceEntry entry;
                std::string base;
                if (fe.is_string()) {
                    base = fe.get<std::string>();
                } else {
                    base = fe.at("base").get<std::string>();
                    if (fe.contains("degeneracies"))
                        for (const auto& w : fe.at("degeneracies"))
                            entry.word.push_back(w.get<int>());
                    for (size_t q = 0; q + 1 < entry.word.size(); ++q)
                        if (entry.word[q] <= entry.word[q + 1])
                            throw std::runtime_error(
                                "space JSON: degeneracy word not in normal form for a face of " +
                                name);
                }
                auto it = where.find(base);
                if (it == where.end())
                    throw std::runtime_error("space JSON: unknown face '" + base + "'");
                entry.base_dim = it->second.first;
                entry.base_idx = it->second.second;
                entries.push_back(std::move(entry));
            }
            faces[name] = std::move(entries);
        }
    return std::make_shared<ExplicitSet>(std::move(names), std::move(faces));
}

std::shared_ptr<const SimplicialSetBase> load_space(const std::string& spec_text) {
    if (spec_text.rfind("delta:", 0) == 0)
        return std::make_shared<StandardSimplex>(std::stoi(spec_text.substr(6)));
    if (spec_text.rfind("boundary:", 0) == 0)
        return std::make_shared<BoundarySimplex>(std::stoi(spec_text.substr(9)));
    return parse_space_json(read_file(spec_text));
}

Cochain parse_cochain_json(const std::string& json_text, const SimplicialSetBase* host) {
    json j = json::parse(json_text);
    int degree = j.at("degree").get<int>();
    Cochain c(host, degree);
    for (const auto& [name, value] : j.at("values").items())
        c.set(host->index_of(degree, name), BigInt(value.get<long long>()));
    return c;
}

std::string cochain_to_json(const Cochain& c) {
    json values = json::object();
    for (const auto& [idx, v] : c.values()) values[c.host()->name(c.cdeg(), idx)] = v.str();
    json j{{"degree", c.cdeg()}, {"values", values}};
    return j.dump();
}

}  // namespace cartanlift
