#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "twoclosure/oracle.hpp"
#include "twoclosure/perm_group.hpp"

namespace twoclosure {

enum class StepKind {
  Validate,
  TrivialBase,
  TransitiveBase,
  SylowSplit,
  ZelNotInside,
  ZelReduce,
  OrbitRemoval,
};

std::string_view step_name(StepKind kind);

struct TraceStep {
  StepKind kind;
  std::size_t degree;  // of the group the step inspected
  std::size_t order;
  std::uint64_t part = 0;  // Sylow prime the step belongs to; 0 before a split
  std::vector<std::uint64_t> primes;      // SylowSplit
  std::vector<std::size_t> orbit_sizes;   // ZelReduce: sizes of the zel orbits
  PointSet removed;                       // OrbitRemoval
};

struct ReductionTrace {
  std::vector<TraceStep> steps;
  bool verdict = false;
};

/// Decides 2-closedness of a group whose transitive constituents are all
/// cyclic.
///
///  - trivial groups and transitive groups are 2-closed;
///  - otherwise split into Sylow subgroups, each decided separately;
///  - for a p-group P: if Z = zel(P) is nontrivial, P is 2-closed iff Z ≤ P
///    and P^{orb(Z)} is; if Z is trivial, drop the orbit holding the minimal
///    point and continue with P^{Ω∖Δ}.
///
/// Every reduction lowers the degree, so a chain has at most `degree` steps.
/// Throws PreconditionFailed when some constituent is not cyclic.
ReductionTrace decide_2_closed(const PermGroup& group);

struct OracleReport {
  ReductionTrace trace;
  bool criterion = false;
  bool oracle = false;
  bool mismatch = false;
  std::size_t group_order = 0;
  std::size_t closure_order = 0;
};

OracleReport decide_with_oracle_check(const PermGroup& group,
                                      const SearchLimits& limits = {});

/// One line per step, then a verdict line.
std::string render(const ReductionTrace& trace);

}  // namespace twoclosure
