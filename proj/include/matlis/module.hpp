#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "matlis/ring.hpp"

namespace matlis {

// Finitely generated graded R-module given by a presentation: free generator
// degrees plus homogeneous relation columns. Computations are carried out over
// S with the defining ideal absorbed into every submodule generating set.
class GradedModule {
 public:
  GradedModule() = default;
  GradedModule(RingPtr ring, std::vector<int> gen_degrees, std::vector<VecPoly> relations);

  static GradedModule free_module(const RingPtr& ring, int rank, std::vector<int> degrees = {});
  static GradedModule cyclic(const RingPtr& ring, const std::vector<Polynomial>& anns);  // R/(anns)
  static GradedModule residue_field(const RingPtr& ring);                                // k = R/m
  static GradedModule zero(const RingPtr& ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<int>& gen_degrees() const { return degs_; }
  const std::vector<VecPoly>& relations() const { return rels_; }
  int rank0() const { return static_cast<int>(degs_.size()); }
  ModLayout layout() const { return ModLayout::plain(degs_); }

  // Groebner basis over S of relations + I*F0; write-once.
  const GBasis& rel_gb() const;
  VecPoly nf(const VecPoly& v) const { return rel_gb().normal_form(v); }
  bool element_is_zero(const VecPoly& v) const { return rel_gb().contains(v); }
  bool is_zero_module() const;

  long hilbert(int d) const;

  struct FiniteData {
    bool finite = false;
    long length = 0;
    std::map<int, long> hilbert;                     // degree -> dimension
    int ann_power = 0;                               // m^ann_power annihilates M
    std::vector<std::pair<int, Monomial>> basis;     // standard module monomials
  };
  const FiniteData& finite_data() const;
  bool finite_length() const { return finite_data().finite; }
  long length() const;  // throws when not finite length

  // Internal caches shared across copies.
  struct Cache;
  const std::shared_ptr<Cache>& cache() const { return cache_; }

 private:
  RingPtr ring_;
  std::vector<int> degs_;
  std::vector<VecPoly> rels_;
  std::shared_ptr<Cache> cache_;
};

// Homogeneous map of graded modules, given on generators: cols[j] in F0(tgt)
// is the image of generator j, of degree src.deg[j] + deg.
struct ModMap {
  GradedModule src;
  GradedModule tgt;
  std::vector<VecPoly> cols;
  int deg = 0;

  bool well_defined() const;
  static ModMap zero_map(const GradedModule& src, const GradedModule& tgt);
  static ModMap identity(const GradedModule& m);
};

// Graded free resolution: d[i] : F_{i+1} -> F_i, with F_0 described by
// f0_degs. minimal == true means every differential entry lies in m.
struct Resolution {
  RingPtr ring;
  std::vector<int> f0_degs;
  std::vector<std::vector<int>> step_degs;    // degrees of F_i, i >= 1
  std::vector<std::vector<VecPoly>> diffs;    // diffs[i] = columns of d_{i+1} in F_i
  std::vector<VecPoly> gen_images;            // original generators of M expressed in F_0
  std::vector<int> f0_kept;                   // original generator index behind each F_0 slot
  bool minimal = true;

  int steps() const { return static_cast<int>(diffs.size()); }
  long betti(int i) const;
  const std::vector<int>& degrees_of(int i) const;  // degrees of F_i
};

// Columns f*e_j for f in the reduced basis of the defining ideal.
std::vector<VecPoly> ideal_columns(const RingPtr& ring, const ModLayout& F);

// Generators over R of { u in F_src : sum u_j cols[j] lies in <tgt_cols> }.
std::vector<VecPoly> preimage_generators(const RingPtr& ring, const ModLayout& F_src,
                                         const std::vector<VecPoly>& cols, const ModLayout& F_tgt,
                                         const std::vector<VecPoly>& tgt_cols);

// Minimal generators over R of the submodule generated by cols: a subset of
// cols, selected degree by degree with exact linear algebra.
std::vector<VecPoly> minimal_generators(const RingPtr& ring, const ModLayout& F,
                                        const std::vector<VecPoly>& cols);

struct TrimResult {
  GradedModule mod;
  std::vector<VecPoly> old_gen_images;  // image of each original generator in F0(mod)
  std::vector<int> kept;                // original index of each generator of mod
};
TrimResult trim(const GradedModule& m);

Resolution min_resolution(const GradedModule& m, int n_steps);

// Presentation of the submodule generated by cols inside m; incl receives the
// inclusion columns when non-null.
GradedModule submodule_from_columns(const GradedModule& m, const std::vector<VecPoly>& cols);

GradedModule map_kernel(const ModMap& f, std::vector<VecPoly>* incl_out = nullptr);
GradedModule map_cokernel(const ModMap& f);

// Homology at Q of P --phi--> Q --psi--> T, with generator witnesses and the
// ability to express further cycles in terms of the homology generators.
class Homology {
 public:
  Homology(const ModMap& phi, const ModMap& psi);

  const GradedModule& module() const { return H_; }
  const std::vector<VecPoly>& witnesses() const { return witnesses_; }
  // Coefficient column over F0(H) for the class of a cycle in F0(Q).
  std::optional<VecPoly> express(const VecPoly& cycle) const;

 private:
  GradedModule H_;
  std::vector<VecPoly> witnesses_;
  std::shared_ptr<SyzygyTable> lift_;  // over [witnesses | Q rels | phi cols | I F0(Q)]
  int n_witness_ = 0;
};

// Direct sum of twists: component t is m(twists[t]), generators (t, l) with
// degree m.deg[l] - twists[t], flat index t * m.rank0() + l.
GradedModule direct_sum_twists(const GradedModule& m, const std::vector<int>& twists);

// Hom(F, m) where F is free with the given shifts; generator (j, l) at flat
// index j * m.rank0() + l has degree m.deg[l] - shifts[j].
GradedModule hom_free_into(const RingPtr& ring, const std::vector<int>& shifts, const GradedModule& m);
// Hom(d, m) : Hom(F_this, m) -> Hom(F_next, m) for d : F_next -> F_this.
ModMap hom_transpose_map(const RingPtr& ring, const std::vector<int>& shifts_this,
                         const std::vector<int>& shifts_next, const std::vector<VecPoly>& d_cols,
                         const GradedModule& m);
// F (x) m with the given shifts; generator (j, l) degree m.deg[l] + shifts[j].
GradedModule tensor_free(const RingPtr& ring, const std::vector<int>& shifts, const GradedModule& m);
// d (x) m : F_from (x) m -> F_to (x) m for d : F_from -> F_to.
ModMap tensor_diff_map(const RingPtr& ring, const std::vector<int>& shifts_from,
                       const std::vector<int>& shifts_to, const std::vector<VecPoly>& d_cols,
                       const GradedModule& m);

GradedModule tensor_fg(const GradedModule& a, const GradedModule& b);
GradedModule hom_fg(const GradedModule& a, const GradedModule& b);
GradedModule ext_fg(int i, const GradedModule& a, const GradedModule& b);
GradedModule tor_fg(int i, const GradedModule& a, const GradedModule& b);

// Homology with witnesses for the Hom complex Hom(F(a), b) at position i;
// exposed for the functorial stage machinery.
std::shared_ptr<Homology> ext_homology(int i, const GradedModule& a, const GradedModule& b);

enum class SubOp { colon, scale, quotient_by_scale };
// colon: (0 :_m a^s); scale: a^s m; quotient_by_scale: m / a^s m.
GradedModule submodule_op(const GradedModule& m, const Ideal& a, int s, SubOp op,
                          std::vector<VecPoly>* incl_out = nullptr);
// Gamma_m(m) = (0 :_m m^j) for the stabilizing j; returns the exponent too.
std::pair<GradedModule, int> gamma_m(const GradedModule& m);

// Betti numbers via Tor_i(k, m) and Bass numbers via Ext^i(k, m); the Betti
// sequence is cross-checked against the ranks of a minimal resolution of m.
std::pair<std::vector<long>, std::vector<long>> betti_bass(const GradedModule& m, int imax);

std::vector<long> resolution_betti(const GradedModule& m, int imax);

GradedModule twist(const GradedModule& m, int a);  // m(a): degrees shifted down by a

// Evaluate a map given by generator-image columns on an element.
VecPoly apply_columns(const ModLayout& tgt_layout, const std::vector<VecPoly>& cols, const VecPoly& v);

// Chain map between minimal resolutions lifting f : V -> V', through
// homological degree upto: result[t] = columns of phi_t : F_t(V) -> F_t(V').
std::vector<std::vector<VecPoly>> lift_chain_map(const ModMap& f, const Resolution& rv,
                                                 const Resolution& rvp, int upto);

bool hilbert_equal_upto(const GradedModule& a, const GradedModule& b, int dmax);
// Degree range that can support generators of either module.
std::pair<int, int> degree_window(const GradedModule& a);

long dim_of(const GradedModule& finite_length_module);  // length, checked finite

// Annihilator ideal of m over S (contains the defining ideal).
Ideal annihilator(const GradedModule& m);

}  // namespace matlis
