#pragma once

#include <iosfwd>
#include <string>

#include "picketlab/embedding.hpp"

namespace picketlab {

// Embedding file: {"p": 2, "beta": [5,3,1], "generators": [[4,2,0],[0,2,1]]}
// Generators are rows; coordinates follow beta order; entries are canonical
// representatives mod p^{beta_i}.
Embedding parse_embedding(const std::string& json_text);
Embedding read_embedding(const std::string& path);
std::string serialize_embedding(const Embedding& M);  // canonical form
void write_embedding(const std::string& path, const Embedding& M);

std::string tableau_chain_json(const LRTableau& t);

// ASCII diagram with parts drawn as columns and row 1 at the top;
// transposed = true draws parts as rows instead.
std::string render_tableau(const LRTableau& t, bool transposed = false);

}  // namespace picketlab
