#pragma once

#include <string>
#include <vector>

#include "diagcat/algebra.hpp"

namespace diagcat {

// Named identity between words over the generators; all listed expressions
// must agree after identity padding.
struct Relation {
  std::string id;
  std::vector<std::string> words;
};

struct RelationResult {
  std::string id;
  bool holds;
  std::string detail;  // empty when the relation holds
};

struct SuiteReport {
  std::string suite;
  std::vector<RelationResult> results;
  bool all_hold;
};

// Suites: T1 (uncolored generators and relations), T2 (colored generators
// and relations), BJ (Jones projection tower up to max_index), reduced
// (two-projection form), star (adjoint identities), useful (multiplication
// absorption), aux (derived identities: idempotence of f, corrected
// commutator forms, selfadjointness).
const std::vector<std::string>& suite_names();
Kind suite_kind(const std::string& name);
std::vector<Relation> relation_suite(const std::string& name, int max_index = 4);

SuiteReport verify_suite(const std::string& name, int max_index = 4);

}  // namespace diagcat
