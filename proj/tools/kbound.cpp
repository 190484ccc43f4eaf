// kbound: command-line front end for the k-boundance library.
//
// Exit codes: 0 affirmative, 1 negative decision, 2 input error,
// 3 a characterization disagreement (with a JSON reproducer on stdout).

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "kbound/boundance.hpp"
#include "kbound/complex.hpp"
#include "kbound/errors.hpp"
#include "kbound/fixtures.hpp"
#include "kbound/graph.hpp"
#include "kbound/invariants.hpp"
#include "kbound/io.hpp"

namespace {

using kbound::Chain;
using kbound::Complex;
using kbound::Error;
using kbound::ErrorKind;
using kbound::io::Json;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kInputError = 2;
constexpr int kViolation = 3;

// Accepts plain complex files and reproducers ({"complex": ..., ...}).
Complex load_complex(const std::string& path, bool create_faces) {
  Json j = kbound::io::read_json_file(path);
  if (j.is_object() && j.contains("complex")) j = j["complex"];
  return Complex::build(kbound::io::parse_complex(j),
                        {.create_missing_faces = create_faces});
}

// A {"cycles": [...]} list or a single chain.
std::vector<Chain> load_cycles(const Complex& k, const std::string& path) {
  const Json j = kbound::io::read_json_file(path);
  if (j.is_object() && j.contains("cycles")) {
    return kbound::io::parse_cycle_list(k, j);
  }
  return {kbound::io::parse_chain(k, j)};
}

Chain load_chain(const Complex& k, const std::string& path) {
  return kbound::io::parse_chain(k, kbound::io::read_json_file(path));
}

std::size_t vertex_index(const Complex& k, const std::string& id) {
  const auto ref = k.find(id);
  if (!ref || ref->dim != 0) {
    throw Error(ErrorKind::UnknownVertex, "no vertex '" + id + "'");
  }
  return ref->index;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  out << text;
  if (!out) throw Error(ErrorKind::BadArgument, "cannot write '" + out_path + "'");
}

std::string sizes_line(const Complex& k) {
  std::string s;
  for (int d = 0; d <= k.top_dim(); ++d) {
    if (d > 0) s += ' ';
    s += "S" + std::to_string(d) + "=" + std::to_string(k.size(d));
  }
  return s;
}

std::map<std::size_t, std::size_t> degree_histogram(const Complex& k) {
  std::map<std::size_t, std::size_t> h;
  if (k.top_dim() >= 1) {
    for (auto d : k.degrees()) ++h[d];
  }
  return h;
}

Json histogram_json(const Complex& k) {
  Json j = Json::object();
  for (auto [deg, count] : degree_histogram(k)) j[std::to_string(deg)] = count;
  return j;
}

Json chains_json(const Complex& k, const std::vector<Chain>& chains) {
  Json out = Json::array();
  for (const auto& c : chains) out.push_back(kbound::io::to_json(k, c));
  return out;
}

std::string ids_text(const Complex& k, const Chain& c) {
  std::string s;
  for (const auto& id : k.ids(c)) s += (s.empty() ? "" : " ") + id;
  return s.empty() ? "(empty)" : s;
}

std::string bound_text(std::size_t b) {
  return b == kbound::kUnbounded ? "UNBOUNDED" : std::to_string(b);
}

int cmd_validate(const std::string& file, bool create_faces) {
  const Complex k = load_complex(file, create_faces);
  std::cout << sizes_line(k) << "\n";
  for (auto [deg, count] : degree_histogram(k)) {
    std::cout << "degree " << deg << ": " << count << "\n";
  }
  return kYes;
}

int cmd_boundary(const std::string& file, const std::string& chain_file,
                 std::optional<int> dim) {
  const Complex k = load_complex(file, false);
  if (!chain_file.empty()) {
    const Chain c = load_chain(k, chain_file);
    if (c.dim == 0) {
      std::cout << kbound::io::dump({{"dim", -1}, {"augmentation", c.support.count() % 2}});
    } else {
      std::cout << kbound::io::dump(kbound::io::to_json(k, k.boundary(c)));
    }
    return kYes;
  }
  const int d = dim.value_or(k.top_dim());
  if (d < 0 || d > k.top_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "no boundary map in dimension " + std::to_string(d));
  }
  const auto m = k.boundary_matrix(d);
  for (std::size_t r = 0; r < m.rows(); ++r) std::cout << m.row(r).to_string() << "\n";
  return kYes;
}

int cmd_homology(const std::string& file, bool reduced, bool json) {
  const Complex k = load_complex(file, false);
  Json dims = Json::array();
  for (int d = 0; d <= k.top_dim(); ++d) dims.push_back(kbound::homology_dim(k, d, reduced));
  if (json) {
    std::cout << kbound::io::dump({{"reduced", reduced}, {"homology", dims}});
  } else {
    for (int d = 0; d <= k.top_dim(); ++d) {
      std::cout << "H" << d << "=" << dims[static_cast<std::size_t>(d)] << "\n";
    }
  }
  return kYes;
}

int cmd_boundant(const std::string& file, const std::string& cycles_file,
                 std::size_t count, kbound::Method method, bool json) {
  using kbound::Method;
  const Complex k = load_complex(file, false);
  const auto cycles = load_cycles(k, cycles_file);
  kbound::require_cycle_list(k, cycles);

  // Throws MethodDisagreement before anything is printed.
  const bool verdict = kbound::is_k_boundant(k, cycles, count, method);

  Json out = {{"k", count}, {"method", kbound::to_string(method)}, {"boundant", verdict}};
  if (method == Method::all) {
    Json verdicts = Json::object();
    verdicts["primal"] = kbound::is_k_boundant(k, cycles, count, Method::primal);
    verdicts["dual"] = kbound::is_k_boundant(k, cycles, count, Method::dual);
    try {
      verdicts["recursive"] = kbound::is_k_boundant(k, cycles, count, Method::recursive);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BadArgument) throw;  // not applicable
    }
    out["verdicts"] = verdicts;
  }
  std::optional<kbound::BoundanceWitness> witness;
  if (verdict && (method == Method::primal || method == Method::all)) {
    witness = kbound::disjoint_chains(k, cycles, count);
    Json w = Json::array();
    for (std::size_t i = 0; i < witness->chains.size(); ++i) {
      w.push_back({{"cycle", witness->assignment[i]},
                   {"chain", kbound::io::to_json(k, witness->chains[i])}});
    }
    out["witness"] = w;
  }

  if (json) {
    std::cout << kbound::io::dump(out);
  } else {
    std::cout << count << "-boundant: " << (verdict ? "yes" : "no") << "\n";
    if (out.contains("verdicts")) {
      for (const auto& [name, v] : out["verdicts"].items()) {
        std::cout << "  " << name << ": " << (v.get<bool>() ? "yes" : "no") << "\n";
      }
    }
    if (witness) {
      for (std::size_t i = 0; i < witness->chains.size(); ++i) {
        std::cout << "  chain " << i + 1 << " bounds cycle " << witness->assignment[i]
                  << ": " << ids_text(k, witness->chains[i]) << "\n";
      }
    }
  }
  return verdict ? kYes : kNo;
}

int cmd_max_boundance(const std::string& file, const std::string& cycles_file,
                      kbound::Method method, bool json) {
  const Complex k = load_complex(file, false);
  const auto cycles = load_cycles(k, cycles_file);
  const auto b = kbound::max_boundance(k, cycles, method);
  if (json) {
    Json value = b == kbound::kUnbounded ? Json("UNBOUNDED") : Json(b);
    std::cout << kbound::io::dump({{"max_boundance", value}});
  } else {
    std::cout << bound_text(b) << "\n";
  }
  return kYes;
}

int cmd_cobordant(const std::string& file, const std::string& c1,
                  const std::string& c2, std::size_t count, kbound::Method method) {
  const Complex k = load_complex(file, false);
  const bool yes = kbound::cobordant(k, load_chain(k, c1), load_chain(k, c2), count, method);
  std::cout << count << "-cobordant: " << (yes ? "yes" : "no") << "\n";
  return yes ? kYes : kNo;
}

std::vector<std::size_t> parse_k_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw Error(ErrorKind::BadArgument, "bad k value '" + item + "'");
    }
  }
  return out;
}

int cmd_invariants(const std::string& file, const std::string& k_list, bool json) {
  const Complex k = load_complex(file, false);
  if (k.top_dim() < 1) {
    throw Error(ErrorKind::DimensionMismatch, "invariants need n >= 1");
  }
  const Complex skeleton = kbound::irregularity_skeleton(k);
  Json homology = Json::array();
  for (int d = 0; d <= k.top_dim(); ++d) homology.push_back(kbound::homology_dim(k, d));
  const auto basis = kbound::gamma_basis(k);

  Json reports = Json::array();
  for (auto count : parse_k_list(k_list)) {
    const auto r = kbound::gamma_k(k, count);
    Json j = {{"k", count},
              {"gamma_k_elements", r.elements.size()},
              {"closed_under_addition", r.closed_under_addition}};
    if (r.gamma_k_basis) {
      j["gamma_k_dim"] = r.gamma_k_basis->size();
      j["gamma_k_basis"] = chains_json(k, *r.gamma_k_basis);
    }
    reports.push_back(std::move(j));
  }

  if (json) {
    Json sk = Json::array();
    for (int d = 0; d <= skeleton.top_dim(); ++d) sk.push_back(skeleton.size(d));
    std::cout << kbound::io::dump({{"degree_histogram", histogram_json(k)},
                                   {"skeleton_sizes", sk},
                                   {"homology", homology},
                                   {"gamma_dim", basis.size()},
                                   {"gamma_basis", chains_json(k, basis)},
                                   {"gamma_k", reports}});
    return kYes;
  }
  std::cout << sizes_line(k) << "\n";
  for (auto [deg, count] : degree_histogram(k)) {
    std::cout << "degree " << deg << ": " << count << "\n";
  }
  std::cout << "skeleton " << sizes_line(skeleton) << "\n";
  for (std::size_t d = 0; d < homology.size(); ++d) {
    std::cout << "H" << d << "=" << homology[d] << "\n";
  }
  std::cout << "gamma_dim " << basis.size() << "\n";
  for (const auto& c : basis) std::cout << "  " << ids_text(k, c) << "\n";
  for (const auto& r : reports) {
    std::cout << "gamma_" << r["k"] << ": ";
    if (r.contains("gamma_k_dim")) {
      std::cout << "dim " << r["gamma_k_dim"] << "\n";
    } else {
      std::cout << r["gamma_k_elements"] << " elements, not closed under addition\n";
    }
  }
  return kYes;
}

int cmd_skeleton(const std::string& file, const std::string& out_path) {
  const Complex k = load_complex(file, false);
  emit(kbound::io::dump(kbound::io::to_json(kbound::irregularity_skeleton(k))), out_path);
  return kYes;
}

int cmd_extract_path(const std::string& file, const std::string& chain_file,
                     const std::string& u, const std::string& v) {
  const Complex g = load_complex(file, false);
  const auto p = kbound::graph::extract_path(g, load_chain(g, chain_file),
                                             vertex_index(g, u), vertex_index(g, v));
  std::cout << g.vertex_id(p.vertices[0]);
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    std::cout << " " << g.table(1)[p.edges[i]].id << " " << g.vertex_id(p.vertices[i + 1]);
  }
  std::cout << "\n";
  return kYes;
}

int cmd_edge_connectivity(const std::string& file, const std::string& u,
                          const std::string& v, std::optional<std::size_t> count) {
  const Complex g = load_complex(file, false);
  kbound::graph::require_graph(g);
  const auto a = vertex_index(g, u);
  const auto b = vertex_index(g, v);
  if (count) {
    const bool yes = kbound::graph::k_edge_connected_flow(g, a, b, *count);
    std::cout << *count << "-edge-connected: " << (yes ? "yes" : "no") << "\n";
    return yes ? kYes : kNo;
  }
  if (a == b) {
    std::cout << "UNBOUNDED\n";
  } else {
    std::cout << kbound::graph::edge_disjoint_paths(g, a, b, g.size(1)) << "\n";
  }
  return kYes;
}

struct GenParams {
  std::string family;
  std::optional<std::size_t> k;
  std::optional<int> n;
  std::optional<std::size_t> v;
  std::optional<double> density;
  std::uint64_t seed = 0;
  std::string out;
};

template <typename T>
T required(const std::optional<T>& value, const std::string& flag,
           const std::string& family) {
  if (!value) throw Error(ErrorKind::BadArgument, family + " needs --" + flag);
  return *value;
}

int cmd_gen(const GenParams& p) {
  namespace fx = kbound::fixtures;
  std::optional<Complex> k;
  if (p.family == "sheets") {
    k = fx::sheets(required(p.k, "k", p.family));
  } else if (p.family == "par-edges") {
    k = fx::par_edges(required(p.k, "k", p.family));
  } else if (p.family == "hollow-simplex") {
    k = fx::hollow_simplex(required(p.n, "n", p.family));
  } else if (p.family == "tetra2") {
    k = fx::tetra2();
  } else if (p.family == "tetra2-subdiv") {
    k = fx::tetra2_subdiv();
  } else if (p.family == "random") {
    k = fx::random_complex(required(p.n, "n", p.family), required(p.v, "v", p.family),
                           required(p.density, "density", p.family), p.seed);
  } else {
    throw Error(ErrorKind::BadArgument, "unknown family '" + p.family + "'");
  }
  emit(kbound::io::dump(kbound::io::to_json(*k)), p.out);
  return kYes;
}

// Outcome of one corpus instance; `reproducer` is set on disagreement.
struct CorpusResult {
  bool primal = false;
  bool dual = false;
  std::optional<std::string> reproducer;
};

CorpusResult run_instance(std::uint64_t seed) {
  const auto inst = kbound::fixtures::corpus_instance(seed);
  CorpusResult r;
  r.primal = kbound::is_k_boundant(inst.complex, inst.cycles, inst.k, kbound::Method::primal);
  r.dual = kbound::is_k_boundant(inst.complex, inst.cycles, inst.k, kbound::Method::dual);
  if (r.primal != r.dual) {
    try {
      kbound::is_k_boundant(inst.complex, inst.cycles, inst.k, kbound::Method::all);
    } catch (const kbound::TheoremViolation& e) {
      r.reproducer = e.reproducer();
    }
  }
  return r;
}

int cmd_corpus(std::uint64_t seed, std::size_t count, unsigned jobs) {
  std::vector<CorpusResult> results(count);
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += jobs) results[i] = run_instance(seed + i);
    });
  }
  for (auto& t : workers) t.join();

  std::size_t yes = 0;
  std::size_t disagree = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (results[i].primal) ++yes;
    if (results[i].primal != results[i].dual) {
      ++disagree;
      std::cerr << "seed " << seed + i << ": primal " << results[i].primal
                << ", dual " << results[i].dual << "\n";
      if (results[i].reproducer) std::cout << *results[i].reproducer << "\n";
    }
  }
  std::cerr << "instances=" << count << " boundant=" << yes
            << " disagreements=" << disagree << "\n";
  return disagree == 0 ? kYes : kViolation;
}

kbound::Method method_from(const std::string& name) {
  auto m = kbound::parse_method(name);
  if (!m) throw Error(ErrorKind::BadArgument, "unknown method '" + name + "'");
  return *m;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-boundance of cycles in simplicial complexes"};
  app.require_subcommand(1);

  std::string file, second, third, out_path, method_name = "primal";
  std::string u, v, k_list = "3";
  std::size_t count = 1;
  bool json = false, create_faces = false, reduced = true;
  std::optional<int> dim;
  std::optional<std::size_t> opt_k;
  GenParams gen;
  std::uint64_t corpus_seed = 1;
  std::size_t corpus_count = 200;
  unsigned jobs = 0;
  std::function<int()> action;

  auto* validate = app.add_subcommand("validate", "Check a complex file and summarize it");
  validate->add_option("file", file)->required();
  validate->add_flag("--create-faces", create_faces, "Create missing faces instead of failing");
  validate->callback([&] { action = [&] { return cmd_validate(file, create_faces); }; });

  auto* boundary = app.add_subcommand("boundary", "Boundary of a chain, or a boundary matrix");
  boundary->add_option("file", file)->required();
  boundary->add_option("chain", second, "Chain file");
  boundary->add_option("--d", dim, "Dimension of the boundary matrix");
  boundary->callback([&] { action = [&] { return cmd_boundary(file, second, dim); }; });

  auto* homology = app.add_subcommand("homology", "F2 homology dimensions");
  homology->add_option("file", file)->required();
  homology->add_flag("--reduced,!--unreduced", reduced,
                     "Reduced (default) or unreduced homology in dimension 0");
  homology->add_flag("--json", json);
  homology->callback([&] {
    action = [&] { return cmd_homology(file, reduced, json); };
  });

  auto* boundant = app.add_subcommand("boundant", "Decide k-boundance of a cycle list");
  boundant->add_option("file", file)->required();
  boundant->add_option("cycles", second, "Cycle list or single cycle")->required();
  boundant->add_option("--k", count)->required()->check(CLI::PositiveNumber);
  boundant->add_option("--method", method_name, "primal|dual|recursive|all");
  boundant->add_flag("--json", json);
  boundant->callback([&] {
    action = [&] { return cmd_boundant(file, second, count, method_from(method_name), json); };
  });

  auto* maxb = app.add_subcommand("max-boundance", "Largest k for which a list is k-boundant");
  maxb->add_option("file", file)->required();
  maxb->add_option("cycles", second)->required();
  maxb->add_option("--method", method_name);
  maxb->add_flag("--json", json);
  maxb->callback([&] {
    action = [&] { return cmd_max_boundance(file, second, method_from(method_name), json); };
  });

  auto* cob = app.add_subcommand("cobordant", "Decide k-cobordance of two cycles");
  cob->add_option("file", file)->required();
  cob->add_option("c1", second)->required();
  cob->add_option("c2", third)->required();
  cob->add_option("--k", count)->required()->check(CLI::PositiveNumber);
  cob->add_option("--method", method_name);
  cob->callback([&] {
    action = [&] { return cmd_cobordant(file, second, third, count, method_from(method_name)); };
  });

  auto* inv = app.add_subcommand("invariants", "Degree strata, homology and Gamma_k");
  inv->add_option("file", file)->required();
  inv->add_option("--k", k_list, "Comma-separated k values");
  inv->add_flag("--json", json);
  inv->callback([&] { action = [&] { return cmd_invariants(file, k_list, json); }; });

  auto* skel = app.add_subcommand("skeleton", "Write the irregularity skeleton");
  skel->add_option("file", file)->required();
  skel->add_option("--o", out_path);
  skel->callback([&] { action = [&] { return cmd_skeleton(file, out_path); }; });

  auto* path = app.add_subcommand("extract-path", "u-v path inside a 1-chain of a graph");
  path->add_option("file", file)->required();
  path->add_option("chain", second)->required();
  path->add_option("--u", u)->required();
  path->add_option("--v", v)->required();
  path->callback([&] { action = [&] { return cmd_extract_path(file, second, u, v); }; });

  auto* conn = app.add_subcommand("edge-connectivity", "Edge-disjoint u-v paths by max flow");
  conn->add_option("file", file)->required();
  conn->add_option("--u", u)->required();
  conn->add_option("--v", v)->required();
  conn->add_option("--k", opt_k);
  conn->callback([&] { action = [&] { return cmd_edge_connectivity(file, u, v, opt_k); }; });

  auto* g = app.add_subcommand("gen", "Generate a fixture complex");
  g->add_option("family", gen.family, "sheets|par-edges|hollow-simplex|tetra2|tetra2-subdiv|random")
      ->required();
  g->add_option("--k", gen.k);
  g->add_option("--n", gen.n);
  g->add_option("--v", gen.v);
  g->add_option("--density", gen.density);
  g->add_option("--seed", gen.seed);
  g->add_option("--o", gen.out);
  g->callback([&] { action = [&] { return cmd_gen(gen); }; });

  auto* corpus = app.add_subcommand("corpus", "Compare primal and dual verdicts on random instances");
  corpus->add_option("--seed", corpus_seed);
  corpus->add_option("--count", corpus_count);
  corpus->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
  corpus->callback([&] { action = [&] { return cmd_corpus(corpus_seed, corpus_count, jobs); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    return action();
  } catch (const kbound::TheoremViolation& e) {
    std::cerr << "violation: " << e.what() << "\n";
    std::cout << e.reproducer() << "\n";
    return kViolation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
