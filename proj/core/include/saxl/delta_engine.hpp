#pragma once

#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "saxl/action_space.hpp"
#include "saxl/incidence.hpp"
#include "saxl/perm_group.hpp"
#include "saxl/report.hpp"
#include "saxl/subgroup.hpp"
#include "saxl/subgroup_lattice.hpp"
#include "saxl/suborbits.hpp"

namespace saxl {

// One arc stabiliser H ∩ H^g up to H-conjugacy, with its delta/Delta counts.
struct ArcStabiliserClass {
  Subgroup representative;
  std::size_t class_index = 0; // in the SubgroupClassTable of H
  std::size_t h_class_size = 0;
  std::size_t h_normalizer_order = 0;
  std::size_t tilde_class_size = 1;
  std::vector<std::size_t> fused_classes; // class indices making up the ~-class
  BigInt delta_size = 0;
  BigInt Delta_size = 0;
};

// Stabilisers of one representative per suborbit, deduplicated up to
// H-conjugacy, plus the trivial group and H; in table order.
std::vector<ArcStabiliserClass> arc_stabilisers(const ActionSpace &space, const PermGroup &G,
                                                const Subgroup &H, const SubgroupClassTable &table);
std::vector<ArcStabiliserClass> arc_stabilisers(const SuborbitPartition &part, const ActionSpace &space,
                                                const Subgroup &H, const SubgroupClassTable &table);

// Conjugation orbits of subgroups in G, materialized once per subgroup class.
class ConjugacyOracle {
public:
  ConjugacyOracle(const PermGroup &G, std::size_t cap) : G_(G), cap_(cap) {}
  BigInt normalizer_order(const Subgroup &A);
  bool conjugate(const Subgroup &A, const Subgroup &B);
  // Records a normalizer order known by other means, e.g. |N_G(H)| = |H| times
  // the number of labels fixed by H.
  void hint_normalizer_order(const Subgroup &A, BigInt order);
  // Sorted cycle types of the elements; equal for conjugate subgroups.
  static std::vector<std::vector<std::size_t>> signature(const Subgroup &A);

private:
  const ActionSpace &space_for(const Subgroup &A);
  const PermGroup &G_;
  std::size_t cap_;
  std::deque<std::pair<Subgroup, ActionSpace>> spaces_;
  std::vector<std::pair<Subgroup, BigInt>> hints_;
};

// Groups classes by (E1) G-conjugacy, (E2) equal normalizer order in H and
// (E3) equal eta rows and columns against every other class.
std::vector<ArcStabiliserClass> fuse_equivalent(const std::vector<ArcStabiliserClass> &classes,
                                                const SubgroupClassTable &table, ConjugacyOracle &oracle);

// The linear system of the method, in a form that can also be filled from
// external data when Omega is too large to build.
struct DeltaSystem {
  std::string group_name;
  BigInt order_G;
  BigInt order_H;
  std::vector<std::string> labels;             // one per ~-class, in linear-extension order
  std::vector<std::size_t> orders;             // |A|
  std::vector<std::size_t> h_normalizer_orders; // |N_H(A)|
  std::vector<std::size_t> tilde_sizes;        // |Ã|
  IncidenceMatrix M;                           // entries of the tilde-eta matrix
  std::vector<BigInt> Delta;
};

struct DeltaEngineResult {
  std::vector<ArcStabiliserClass> classes;
  IncidenceMatrix M;
  IncidenceMatrix M_inv;
  std::vector<BigInt> Delta;
  std::vector<BigInt> delta;
  SubdegreeReport report;
  // Negative or non-integral solved quantities; empty on a consistent run.
  std::vector<std::string> inconsistencies;
};

DeltaEngineResult solve_delta_system(const DeltaSystem &sys);

DeltaEngineResult delta_engine(const PermGroup &G, const Subgroup &H, const SubgroupClassTable &table,
                               std::vector<ArcStabiliserClass> tilde_classes, const std::string &group_name,
                               ConjugacyOracle &oracle);

// Arc stabilisers, fusion and solve in one call.
DeltaEngineResult run_delta_engine(const ActionSpace &space, const PermGroup &G, const Subgroup &H,
                                   const std::string &group_name, std::size_t cap = kDefaultLabelCap);

struct CrossValidation {
  SubdegreeReport bruteforce;
  std::optional<DeltaEngineResult> engine; // absent for imprimitive input
  bool primitive = false;
  SubdegreeReport combined; // engine report with the agreement flag, or brute force alone
};

CrossValidation cross_validate(const ActionSpace &space, const PermGroup &G, const Subgroup &H,
                               const std::string &group_name, std::size_t cap = kDefaultLabelCap);

} // namespace saxl
