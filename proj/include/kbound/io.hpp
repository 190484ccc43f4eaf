#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "kbound/complex.hpp"

namespace kbound::io {

using Json = nlohmann::json;

// Complex files:
//   {"n": 2, "vertices": ["1", ...],
//    "simplices": [{"dim": 1, "id": "e12", "vertices": ["1","2"],
//                   "faces": ["1","2"]}, ...]}
// "faces" is optional per record. Chains: {"dim": 1, "simplices": [ids]}.
// Cycle lists: {"cycles": [chain, ...]}.

RawComplex parse_complex(const Json& j);
Json to_json(const RawComplex& raw);
Json to_json(const Complex& k);

Chain parse_chain(const Complex& k, const Json& j);
Json to_json(const Complex& k, const Chain& c);

std::vector<Chain> parse_cycle_list(const Complex& k, const Json& j);
Json cycle_list_to_json(const Complex& k, std::span<const Chain> cycles);

Json read_json_file(const std::filesystem::path& path);
Complex read_complex(const std::filesystem::path& path,
                     BuildOptions options = {});
/// Stable two-space indented text with a trailing newline.
std::string dump(const Json& j);

}  // namespace kbound::io
