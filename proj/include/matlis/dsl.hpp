#pragma once

#include <variant>

#include "matlis/suite.hpp"

namespace matlis {

struct RunOptions {
  FieldSpec default_field = FieldSpec::rationals();
  uint64_t seed = 42;
  int cases = 25;
  int s_max = 5;
  int i_max = 3;
  bool json = true;  // false: aligned table output
};

struct RunResult {
  int exit_code = 0;  // 0 ok, 1 failed verification/preset, 2 usage or parse error
  std::string output;
  std::string diagnostics;
};

using Value = std::variant<RingPtr, Ideal, GradedModule, ArtinianModule>;

// Named bindings of a script run; names are unique, every value serializable.
struct Session {
  std::map<std::string, Value> bindings;
  RingPtr active_ring;
};

RunResult run_script(const std::string& script, const RunOptions& opt);

// Preset batteries reproducing the worked examples; each emits one JSON line
// per comparison and reports overall success.
bool run_preset(const std::string& name, const std::vector<long>& params, const RunOptions& opt,
                std::string& out);

}  // namespace matlis
