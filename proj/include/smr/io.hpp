#ifndef SMR_IO_HPP
#define SMR_IO_HPP

// Text grammars and JSON forms for the domain types. Text pairs and JSON
// pairs are 1-based; everything else is positional. Only the JSON forms are
// a compatibility surface.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "smr/ideal_matrices.hpp"
#include "smr/matrices.hpp"
#include "smr/relations.hpp"
#include "smr/rings.hpp"
#include "smr/subring_set.hpp"

namespace smr {

using Json = nlohmann::ordered_json;

// "i,j i,j ..." with 1-based indices, whitespace-separated.
std::vector<std::pair<int, int>> parse_pairs(const std::string& text);

// "n; i,j i,j ..." .
Relation parse_relation_text(const std::string& text);
std::string relation_text(const Relation& r);
Json relation_to_json(const Relation& r);
Relation relation_from_json(const Json& j);

// Rows separated by ';', entries by whitespace, e.g. "1 2; 0 1".
Matrix parse_matrix_text(const std::string& text, RingCtx ctx);
std::string matrix_text(const Matrix& a);
Json matrix_to_json(const Matrix& a);

// Same grid of canonical generators, e.g. "1 2; 4 1". Entries are
// canonicalized through the ideal they generate.
IdealMatrix parse_imat_text(const std::string& text, RingCtx ctx);
std::string imat_text(const IdealMatrix& u);
Json imat_to_json(const IdealMatrix& u);
IdealMatrix imat_from_json(const Json& j);

std::string ideal_text(const Ideal& ideal);

// Member lists longer than 4096 are replaced by the FNV-1a digest of the
// ascending encoding stream.
Json subring_to_json(const SubringSet& s);

}  // namespace smr

#endif  // SMR_IO_HPP
