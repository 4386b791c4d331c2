#pragma once

#include "matlis/json_io.hpp"

namespace matlis {

struct RingProfile {
  int max_vars = 3;
  bool allow_binomial = true;
  int max_gen_degree = 3;
};

struct ModuleProfile {
  int max_gens = 3;
  int max_rel_degree = 4;
};

struct InstanceSpec {
  uint64_t seed = 0;
  FieldSpec field = FieldSpec::prime_field(32003);
  RingProfile ring_profile;
  ModuleProfile module_profile;
};

// Deterministic instance: a graded-local ring with batches of finitely
// generated, finite-length, and artinian-dual modules over it.
struct Instance {
  uint64_t seed = 0;
  RingPtr ring;
  bool monomial = false;  // every relation and the defining ideal are monomial
  std::vector<GradedModule> fg;
  std::vector<GradedModule> finite;
  std::vector<ArtinianModule> artinian;
};

Instance gen_instance(const InstanceSpec& spec);
Json instance_to_json(const Instance& inst);

enum class Verdict { pass, fail, scope };

struct CheckRecord {
  std::string check_id;
  std::string paper_tag;
  uint64_t seed = 0;
  Verdict verdict = Verdict::pass;
  std::string witness;  // replay data on failure
};

struct SuiteReport {
  uint64_t seed = 0;
  int cases = 0;
  std::vector<CheckRecord> records;
  long passed = 0;
  long failed = 0;
  long scoped = 0;

  bool ok() const { return failed == 0; }
};

struct SuiteOptions {
  int i_max = 3;
  int s_max = 5;
  FieldSpec field = FieldSpec::prime_field(32003);
};

SuiteReport run_suite(uint64_t seed, int cases, const SuiteOptions& opt = SuiteOptions{});
Json suite_report_to_json(const SuiteReport& r);
std::string suite_report_table(const SuiteReport& r);

struct CheckInfo {
  std::string id;
  std::string paper_tag;
};
// Static registry: every in-scope theorem has a check, every check a tag.
const std::vector<CheckInfo>& check_registry();

// Individual checks, exposed so tests can drive them with corrupted inputs
// (mutation tests). Each returns a verdict and appends a witness on failure.
Verdict check_bass_betti_pair(const GradedModule& v, const GradedModule& dual_v, int imax,
                              std::string* witness);
Verdict check_length_bound(const ArtinianModule& a, const GradedModule& n, int s_override,
                           bool use_override, std::string* witness, bool* tight);
Verdict check_theta_dims(const GradedModule& v, const GradedModule& dual_vp, const GradedModule& vp,
                         int imax, std::string* witness);
Verdict check_ext_duality_dims(const GradedModule& v, const GradedModule& vp,
                               const GradedModule& dual_v, const GradedModule& dual_vp, int imax,
                               std::string* witness);
Verdict check_tensor_bounds(const ArtinianModule& a, const ArtinianModule& l, std::string* witness);

// Independent brute-force route for Ass in monomial scope: enumerate variable
// subsets and search for a witness monomial via Groebner membership.
PrimeSet ass_bruteforce(const GradedModule& n);

}  // namespace matlis
