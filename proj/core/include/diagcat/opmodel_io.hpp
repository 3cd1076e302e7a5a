#pragma once

#include <string>

#include "diagcat/opmodel.hpp"

namespace diagcat {

struct ModelFile {
  Inclusion inclusion;
  AlgebraState state;
  bool canonical_state = false;
};

// JSON shape:
//   {
//     "B": {"blocks": [1, 1]},
//     "D": {"blocks": [1, 1, 1, 1]},
//     "multiplicity": [[1, 0], [1, 0], [0, 1], [0, 1]],
//     "state": {"Q": [[[0.25]], [[0.25]], [[0.25]], [[0.25]]]}
//   }
// "state" may also be the string "canonical" (or {"Q": "canonical"}), meaning
// the canonical trace of D.  Throws ParseError on malformed input.
ModelFile load_model(const std::string& json_text);
ModelFile load_model_file(const std::string& path);

}  // namespace diagcat
