#ifndef FMZV_JSON_IO_HPP
#define FMZV_JSON_IO_HPP

#include "fmzv/oracle.hpp"
#include "fmzv/reduce.hpp"
#include "fmzv/tree.hpp"
#include "fmzv/word.hpp"

#include <json.hpp>

#include <string>
#include <utility>

namespace fmzv {

using json = nlohmann::ordered_json;

// {"vertices":[{"id":"v1","color":"bullet"},...],
//  "edges":[{"a":"v1","b":"c","k":2},...],"root":"v1"}
// Parsing validates the tree and rejects ids containing '#' (reserved for
// vertices minted by the transforms). Errors: BadTreeJson,
// ReservedVertexId, plus everything validate() throws.
std::pair<Tree, IndexMap> tree_from_json(const json& j);
std::pair<Tree, IndexMap> load_tree_file(const std::string& path);
json tree_to_json(const Tree& t, const IndexMap& k);

// [{"word":"yxyx","coeff":"2"},...]
json lincomb_words_json(const LinComb& a);

// [{"index":[2,2],"coeff":"2"},...]; requires every monomial in yH.
json lincomb_zform_json(const LinComb& a);

// {"sign":-1,"terms":[{"index":[2,1],"coeff":"1"}]}
json reduction_to_json(const SignedReduction& r);

// {"pass":true,"primes":[{"p":7,"lhs":6,"rhs":6,"pass":true},...]}
json report_to_json(const VerificationReport& r);

} // namespace fmzv

#endif // FMZV_JSON_IO_HPP
