#include "twoclosure/decider.hpp"

#include <cassert>
#include <sstream>

#include "twoclosure/errors.hpp"
#include "twoclosure/reduction.hpp"

namespace twoclosure {

namespace {

TraceStep make_step(StepKind kind, const PermGroup& group, std::uint64_t part) {
  return TraceStep{kind, group.degree(), group.order(), part, {}, {}, {}};
}

bool decide_p_group(PermGroup current, std::uint64_t prime,
                    std::vector<TraceStep>& steps) {
  const std::size_t max_steps = current.degree() + 1;
  for (std::size_t round = 0; round < max_steps; ++round) {
    assert(cyclic_constituents(current));
    if (current.degree() == 0 || current.is_trivial()) {
      steps.push_back(make_step(StepKind::TrivialBase, current, prime));
      return true;
    }
    const OrbitPartition partition = orbits(current);
    if (partition.size() == 1) {
      steps.push_back(make_step(StepKind::TransitiveBase, current, prime));
      return true;
    }
    const PermGroup z = zel(current);
    if (!z.is_trivial()) {
      if (!is_subgroup(z, current)) {
        steps.push_back(make_step(StepKind::ZelNotInside, current, prime));
        return false;
      }
      TraceStep step = make_step(StepKind::ZelReduce, current, prime);
      step.orbit_sizes = orbits(z).class_sizes();
      steps.push_back(std::move(step));
      current = induced_on_orbits(current, z);
    } else {
      TraceStep step = make_step(StepKind::OrbitRemoval, current, prime);
      step.removed = partition.classes.front();
      steps.push_back(std::move(step));
      current = remove_orbit(current, partition.classes.front());
    }
  }
  throw Error("reduction chain did not terminate within the degree bound");
}

}  // namespace

std::string_view step_name(StepKind kind) {
  switch (kind) {
    case StepKind::Validate: return "Validate";
    case StepKind::TrivialBase: return "TrivialBase";
    case StepKind::TransitiveBase: return "TransitiveBase";
    case StepKind::SylowSplit: return "SylowSplit";
    case StepKind::ZelNotInside: return "ZelNotInside";
    case StepKind::ZelReduce: return "ZelReduce";
    case StepKind::OrbitRemoval: return "OrbitRemoval";
  }
  return "?";
}

ReductionTrace decide_2_closed(const PermGroup& group) {
  if (!cyclic_constituents(group)) {
    throw PreconditionFailed("some transitive constituent is not cyclic");
  }
  ReductionTrace trace;
  trace.steps.push_back(make_step(StepKind::Validate, group, 0));

  if (group.degree() == 0 || group.is_trivial()) {
    trace.steps.push_back(make_step(StepKind::TrivialBase, group, 0));
    trace.verdict = true;
    return trace;
  }
  if (is_transitive(group)) {
    trace.steps.push_back(make_step(StepKind::TransitiveBase, group, 0));
    trace.verdict = true;
    return trace;
  }
  if (const auto p = p_group_prime(group)) {
    trace.verdict = decide_p_group(group, *p, trace.steps);
    return trace;
  }

  const SylowDecomposition sylow = sylow_decomposition(group);
  TraceStep split = make_step(StepKind::SylowSplit, group, 0);
  split.primes = sylow.primes();
  trace.steps.push_back(std::move(split));

  const auto count = static_cast<std::int64_t>(sylow.parts.size());
  std::vector<std::vector<TraceStep>> part_steps(sylow.parts.size());
  std::vector<char> part_verdicts(sylow.parts.size(), 0);
  // Each chain is sequential; chains of different primes are independent.
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t k = 0; k < count; ++k) {
    const auto& part = sylow.parts[k];
    part_verdicts[k] = decide_p_group(part.group, part.prime, part_steps[k]);
  }
  trace.verdict = true;
  for (std::size_t k = 0; k < part_steps.size(); ++k) {
    trace.steps.insert(trace.steps.end(), part_steps[k].begin(), part_steps[k].end());
    trace.verdict = trace.verdict && part_verdicts[k];
  }
  return trace;
}

OracleReport decide_with_oracle_check(const PermGroup& group,
                                      const SearchLimits& limits) {
  OracleReport report;
  report.trace = decide_2_closed(group);
  report.criterion = report.trace.verdict;
  report.group_order = group.order();
  report.closure_order = two_closure(group, limits).order();
  report.oracle = report.closure_order == report.group_order;
  report.mismatch = report.criterion != report.oracle;
  return report;
}

std::string render(const ReductionTrace& trace) {
  std::ostringstream out;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const TraceStep& step = trace.steps[i];
    out << i << ": " << step_name(step.kind) << " degree=" << step.degree
        << " order=" << step.order;
    if (step.part != 0) out << " part=" << step.part;
    if (!step.primes.empty()) {
      out << " primes=";
      for (std::size_t k = 0; k < step.primes.size(); ++k) {
        out << (k ? "," : "") << step.primes[k];
      }
    }
    if (!step.orbit_sizes.empty()) {
      out << " zel-orbits=";
      for (std::size_t k = 0; k < step.orbit_sizes.size(); ++k) {
        out << (k ? "," : "") << step.orbit_sizes[k];
      }
    }
    if (step.kind == StepKind::OrbitRemoval) {
      out << " removed=";
      for (std::size_t k = 0; k < step.removed.size(); ++k) {
        out << (k ? "," : "") << step.removed[k];
      }
    }
    out << '\n';
  }
  out << "verdict: " << (trace.verdict ? "2-closed" : "not 2-closed") << '\n';
  return out.str();
}

}  // namespace twoclosure
