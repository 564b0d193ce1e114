#include "picketlab/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace picketlab {

using nlohmann::json;

Embedding parse_embedding(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("embedding file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("p") || !j.contains("beta") ||
      !j.contains("generators"))
    throw std::invalid_argument(
        "embedding file: need object keys p, beta, generators");

  const std::int64_t p = j.at("p").get<std::int64_t>();
  Partition beta(j.at("beta").get<std::vector<int>>());
  const auto& gens_rows = j.at("generators");
  if (!gens_rows.is_array())
    throw std::invalid_argument("embedding file: generators must be an array");

  const int n = beta.size();
  MatZ gens(n, static_cast<int>(gens_rows.size()));
  int c = 0;
  for (const auto& row : gens_rows) {
    const auto entries = row.get<std::vector<std::int64_t>>();
    if (static_cast<int>(entries.size()) != n)
      throw std::invalid_argument(
          "embedding file: generator length must match beta");
    for (int i = 0; i < n; ++i) gens(i, c) = entries[static_cast<std::size_t>(i)];
    ++c;
  }
  return make_embedding(p, std::move(beta), std::move(gens));
}

Embedding read_embedding(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_embedding(ss.str());
}

std::string serialize_embedding(const Embedding& M) {
  json j;
  j["p"] = M.p;
  j["beta"] = M.beta.parts();
  json rows = json::array();
  for (int c = 0; c < M.num_gens(); ++c) {
    json row = json::array();
    for (int i = 0; i < M.ambient_rank(); ++i) row.push_back(M.gens(i, c));
    rows.push_back(std::move(row));
  }
  j["generators"] = std::move(rows);
  return j.dump(2) + "\n";
}

void write_embedding(const std::string& path, const Embedding& M) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open " + path);
  out << serialize_embedding(M);
}

std::string tableau_chain_json(const LRTableau& t) {
  json chain = json::array();
  for (const Partition& g : t.chain()) chain.push_back(g.parts());
  json j;
  j["chain"] = std::move(chain);
  j["alpha"] = t.alpha().parts();
  j["beta"] = t.beta().parts();
  j["gamma"] = t.gamma0().parts();
  return j.dump(2) + "\n";
}

namespace {

// Entry of the diagram in row m (1-based), column i (0-based part index):
// 0 for an unlabelled box of gamma^0, l for a box added at step l, -1 outside.
int box_label(const LRTableau& t, int part_index, int m) {
  if (m > t.beta().part(part_index)) return -1;
  if (m <= t.gamma0().part(part_index)) return 0;
  for (int l = 1; l <= t.s(); ++l)
    if (m <= t.gamma(l).part(part_index)) return l;
  return -1;  // unreachable for valid chains
}

}  // namespace

std::string render_tableau(const LRTableau& t, bool transposed) {
  const Partition& beta = t.beta();
  std::ostringstream os;
  if (!transposed) {
    // Parts as columns, row 1 at the top.
    const int depth = beta.part(0);
    for (int m = 1; m <= depth; ++m) {
      std::string line;
      for (int i = 0; i < beta.size(); ++i) {
        const int label = box_label(t, i, m);
        if (label < 0) break;
        if (!line.empty()) line += ' ';
        line += label == 0 ? "." : std::to_string(label);
      }
      os << line << '\n';
    }
  } else {
    for (int i = 0; i < beta.size(); ++i) {
      std::string line;
      for (int m = 1; m <= beta.part(i); ++m) {
        if (!line.empty()) line += ' ';
        const int label = box_label(t, i, m);
        line += label == 0 ? "." : std::to_string(label);
      }
      os << line << '\n';
    }
  }
  return os.str();
}

}  // namespace picketlab
