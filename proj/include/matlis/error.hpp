#pragma once

#include <stdexcept>
#include <string>

namespace matlis {

enum class Errc {
  division_by_zero,
  field_mismatch,
  ring_mismatch,
  not_homogeneous,
  degree_inconsistent,
  monomial_scope,
  not_finite_length,
  tensor_non_torsion,
  unknown_name,
  parse_error,
  usage_error,
  no_stabilization,
  internal,
};

class MatlisError : public std::runtime_error {
 public:
  MatlisError(Errc c, const std::string& what) : std::runtime_error(what), code(c) {}
  Errc code;
};

[[noreturn]] inline void fail(Errc c, const std::string& what) { throw MatlisError(c, what); }

}  // namespace matlis
