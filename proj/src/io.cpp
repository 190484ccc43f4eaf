#include "kbound/io.hpp"

#include <fstream>
#include <sstream>

#include "kbound/errors.hpp"

namespace kbound::io {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw Error(ErrorKind::Parse, what);
}

const Json& field(const Json& j, const char* name, const char* where) {
  if (!j.is_object()) fail(std::string(where) + " must be a JSON object");
  auto it = j.find(name);
  if (it == j.end()) fail(std::string(where) + " is missing \"" + name + "\"");
  return *it;
}

int as_dim(const Json& j, const char* where) {
  if (!j.is_number_integer()) {
    fail(std::string(where) + ": \"dim\"/\"n\" must be an integer");
  }
  const auto v = j.get<long long>();
  if (v < -1 || v > 1'000'000) fail(std::string(where) + ": dimension out of range");
  return static_cast<int>(v);
}

// Ids may be written as strings or as integers; both become strings.
std::string as_id(const Json& j, const char* where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  fail(std::string(where) + ": ids must be strings or integers");
}

std::vector<std::string> as_ids(const Json& j, const char* where) {
  if (!j.is_array()) fail(std::string(where) + " must be an array of ids");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(as_id(e, where));
  return out;
}

}  // namespace

RawComplex parse_complex(const Json& j) {
  RawComplex raw;
  raw.n = as_dim(field(j, "n", "complex"), "complex");
  raw.vertices = as_ids(field(j, "vertices", "complex"), "vertices");
  const Json& simplices = field(j, "simplices", "complex");
  if (!simplices.is_array()) fail("\"simplices\" must be an array");
  for (const auto& s : simplices) {
    RawSimplex r;
    r.dim = as_dim(field(s, "dim", "simplex"), "simplex");
    r.id = as_id(field(s, "id", "simplex"), "simplex id");
    r.vertices = as_ids(field(s, "vertices", "simplex"), "simplex vertices");
    if (auto it = s.find("faces"); it != s.end() && !it->is_null()) {
      r.faces = as_ids(*it, "simplex faces");
    }
    raw.simplices.push_back(std::move(r));
  }
  return raw;
}

Json to_json(const RawComplex& raw) {
  Json simplices = Json::array();
  for (const auto& s : raw.simplices) {
    Json r = {{"dim", s.dim}, {"id", s.id}, {"vertices", s.vertices}};
    if (s.faces) r["faces"] = *s.faces;
    simplices.push_back(std::move(r));
  }
  return {{"n", raw.n}, {"vertices", raw.vertices}, {"simplices", simplices}};
}

Json to_json(const Complex& k) { return to_json(k.to_raw()); }

Chain parse_chain(const Complex& k, const Json& j) {
  const int dim = as_dim(field(j, "dim", "chain"), "chain");
  if (dim < 0 || dim > k.top_dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "chain dimension " + std::to_string(dim) +
                    " outside 0.." + std::to_string(k.top_dim()));
  }
  const auto ids = as_ids(field(j, "simplices", "chain"), "chain simplices");
  return k.chain(dim, ids);
}

Json to_json(const Complex& k, const Chain& c) {
  return {{"dim", c.dim}, {"simplices", k.ids(c)}};
}

std::vector<Chain> parse_cycle_list(const Complex& k, const Json& j) {
  const Json& cycles = field(j, "cycles", "cycle list");
  if (!cycles.is_array()) fail("\"cycles\" must be an array");
  std::vector<Chain> out;
  for (const auto& c : cycles) out.push_back(parse_chain(k, c));
  return out;
}

Json cycle_list_to_json(const Complex& k, std::span<const Chain> cycles) {
  Json arr = Json::array();
  for (const auto& c : cycles) arr.push_back(to_json(k, c));
  return {{"cycles", arr}};
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail("'" + path.string() + "': " + e.what());
  }
}

Complex read_complex(const std::filesystem::path& path, BuildOptions options) {
  return Complex::build(parse_complex(read_json_file(path)), options);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace kbound::io
