#pragma once

#include <memory>
#include <string>

#include "cartanlift/simplicial.hpp"

namespace cartanlift {

/* Simplicial sets from JSON:
   {
     "simplices": [["v0","v1","v2"], ["a","b","c"], ["T"]],   // per dimension
     "faces": { "a": ["v1","v0"],                              // d_0, d_1, ...
                "T": [{"base":"b"}, {"base":"c","degeneracies":[0]}, ...] }
   }
   A face entry is a name (nondegenerate) or an object with a normal-form
   degeneracy word.  Simplicial identities are validated on load.

   Built-ins by flag: "delta:N" and "boundary:N". */
std::shared_ptr<const SimplicialSetBase> load_space(const std::string& spec_text);
std::shared_ptr<const SimplicialSetBase> parse_space_json(const std::string& json_text);

/* Cochains: { "degree": 1, "values": { "a": 1, "b": -2 } } */
Cochain parse_cochain_json(const std::string& json_text, const SimplicialSetBase* host);
std::string cochain_to_json(const Cochain& c);

// Canonical JSON list of {coeff, key} pairs, same order as the text form.
template <class K>
std::string sum_to_json(const FormalSum<K>& fs) {
    std::vector<std::pair<std::string, std::string>> parts;
    for (const auto& [k, c] : fs) parts.emplace_back(k.str(), c.str());
    std::sort(parts.begin(), parts.end());
    std::string out = "[";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += "{\"coeff\":" + parts[i].second + ",\"key\":\"";
        for (char ch : parts[i].first) {
            if (ch == '"' || ch == '\\') out += '\\';
            out += ch;
        }
        out += "\"}";
    }
    return out + "]";
}

}  // namespace cartanlift
