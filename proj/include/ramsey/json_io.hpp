#pragma once

// JSON forms of the workbench's values.
//
//   Structure        {"signature":[["E",2]],"size":3,"tuples":{"E":[[0,1]]},"order":[0,1,2]}
//   RigidSurjection  {"dom":5,"cod":3,"values":[0,1,0,2,1]}
//   ParameterWord    {"alphabet":2,"symbols":["L0","V0","L1","V0"]}
//   Stage            Structure fields plus "stage_meta"
//
// Shape problems (missing keys, wrong types, bad symbol spelling) raise
// ParseError; semantic problems (a non-rigid surjection, say) raise Error.

#include "ramsey/fraisse.hpp"
#include "ramsey/paramwords.hpp"
#include "ramsey/relstruct.hpp"
#include "ramsey/rigidsurj.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace ramsey {

using Json = nlohmann::json;

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json to_json(const Structure& s);
Structure structure_from_json(const Json& j);

Json to_json(const RigidSurjection& f);
RigidSurjection rsurj_from_json(const Json& j);

Json to_json(const ParameterWord& w);
ParameterWord word_from_json(const Json& j);
Symbol symbol_from_string(const std::string& s);

Json to_json(const EnumeratedStructure& stage);
EnumeratedStructure stage_from_json(const Json& j);

/// Parses text, turning syntax errors into ParseError.
Json parse_json(const std::string& text);

}  // namespace ramsey
