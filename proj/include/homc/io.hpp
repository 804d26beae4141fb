#ifndef HOMC_IO_HPP
#define HOMC_IO_HPP

#include <string>

#include "homc/classify.hpp"
#include "homc/limits.hpp"
#include "homc/reduced.hpp"
#include "homc/simulate.hpp"
#include "homc/tensor.hpp"

namespace homc {

/// Tensor JSON, both accepted forms (1-based indices throughout):
///   { "order": m, "dim": n, "values": [v_1, ..., v_{n^m}] }
/// with position p holding the entry for from_linear(p, n, m), or
///   { "order": m, "dim": n, "entries": [{"index": [i_1..i_m], "value": v}, ...] }
/// where unlisted entries are zero. A file carrying both forms is rejected,
/// as are duplicate entry indices.
StochasticTensor parse_tensor(const std::string& text, const Caps& caps = {});
StochasticTensor load_tensor(const std::string& path, const Caps& caps = {});

/// Joint distribution JSON over length-(m-1) multi-indices ordered by
/// linear indexing, most recent state first:
///   { "order": m, "dim": n, "probs": [w_1, ..., w_{n^{m-1}}] }
JointDistribution parse_joint(const std::string& text, int order, int dim);
JointDistribution load_joint(const std::string& path, int order, int dim);

/// Serialization. All numbers are written with 17 significant digits so
/// doubles round-trip exactly; outputs are byte-stable across runs.
std::string emit_tensor(const StochasticTensor& t);
std::string emit_reduced(const ReducedMatrix& q);
std::string emit_validation(const ValidationReport& report);
std::string emit_classification(const ClassificationReport& report);
/// pi_eigen, when present, reports the eigenvector-route distribution next
/// to the tensor-power one.
std::string emit_limit_outcome(const LimitOutcome& outcome, const StateDistribution* pi_eigen = nullptr);
/// Marginals x_{first_t}, x_{first_t + 1}, ...
std::string emit_evolution(const std::vector<StateDistribution>& marginals, int first_t);
std::string emit_simulation(const Trajectory& traj, const StateDistribution& empirical,
                            std::int64_t burn_in);

}  // namespace homc

#endif  // HOMC_IO_HPP
