#pragma once

#include "ecm/edge_model.hpp"
#include "ecm/graph.hpp"
#include "ecm/poly.hpp"
#include "ecm/quantum_graph.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ecm {

/// Evaluation exceeded one of the EvalLimits.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EvalLimits {
  /// Upper bound on d^(free edges) for the enumerators.
  std::uint64_t max_states = 100'000'000;
  /// Largest vertex degree the tensor evaluator materializes.
  unsigned max_arity = 12;
  /// Largest tensor (in entries) the contraction may create.
  std::uint64_t max_tensor_entries = std::uint64_t{1} << 24;

  /// Defaults, with max_states taken from EMODEL_MAX_STATES when set.
  static EvalLimits from_environment();
};

/// Colors of the open ends: colors[label-1] is in [0, d).
struct BoundaryColoring {
  std::vector<unsigned> colors;
};

enum class Method { enumerate, tensor, automatic };

/// Sum over all edge colorings of the product of vertex weights. Each circle
/// contributes a factor d. The graph must be closed.
Scalar eval_enum(const EdgeModel& model, const OpenGraph& g, const EvalLimits& limits = {});

/// Same sum restricted to colorings that agree with chi on the open ends.
Scalar eval_boundary(const EdgeModel& model, const OpenGraph& g, const BoundaryColoring& chi,
                     const EvalLimits& limits = {});

/// One pairwise merge of the contraction. Tensors are named by the lowest
/// vertex they contain (bare edges come after the vertices).
struct ContractionStep {
  unsigned left;
  unsigned right;
  unsigned result_rank;
  unsigned shared;  // indices summed over; 0 for an outer product
};

struct ContractionPlan {
  std::vector<ContractionStep> steps;
  unsigned peak_rank = 0;
};

/// Greedy pairwise order: always merge the pair of tensors sharing an edge
/// whose result has the fewest indices, then the smaller combined size, then
/// the lowest tensor ids. Disconnected pieces are multiplied last.
ContractionPlan plan_contraction(const OpenGraph& g, unsigned colors);

/// Partition function by contracting one symmetric tensor per vertex.
/// The graph must be closed. Throws CapExceeded when a vertex degree or an
/// intermediate tensor is too large; eval_enum is the fallback.
Scalar eval_tensor(const EdgeModel& model, const OpenGraph& g, const EvalLimits& limits = {});

/// t_chi(G) for every boundary coloring at once, by contraction.
struct BoundaryTensor {
  unsigned colors = 0;
  unsigned k = 0;
  std::vector<Scalar> values;  // label 1 is the most significant digit

  const Scalar& at(const BoundaryColoring& chi) const;
};

BoundaryTensor boundary_tensor(const EdgeModel& model, const OpenGraph& g, const EvalLimits& limits = {});

/// Tensor contraction when it fits the limits, enumeration otherwise.
Scalar evaluate(const EdgeModel& model, const OpenGraph& g, Method method = Method::automatic,
                const EvalLimits& limits = {});

/// The partition function of the universal model t_d(v) = x_v.
Poly eval_universal(const OpenGraph& g, unsigned colors, const EvalLimits& limits = {});

/// Linear extension over the terms of a closed quantum graph.
Scalar eval_quantum(const EdgeModel& model, const QuantumGraph& q, Method method = Method::automatic,
                    const EvalLimits& limits = {});

}  // namespace ecm
