// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <quarkcap/common/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace quarkcap::netsim
{

/*! \brief Transfer function O = f(S).
 *
 * heaviside is 1 for S > 0 and 0 otherwise; step is 1 for S >= 0.
 * sign(0) is +1 and raises a trace warning.
 */
enum class activation : std::uint8_t
{
  identity,
  heaviside,
  sign,
  step,
  relu,
  logistic,
  tanh,
  exp,
  log
};

std::string_view to_string( activation a );
activation parse_activation( std::string_view text );

/*! \brief f(S) in double precision; throws domain_error for log(S <= 0). */
double apply_activation( activation a, double s );

struct neuron
{
  std::string id;
  activation act = activation::identity;
  rational bias = 0;
};

inline constexpr std::string_view additive_attention_tag = "additive-attention";

struct edge
{
  std::string from;
  std::string to;
  rational weight = 1;
  /*! \brief Empty, or "additive-attention" for multiplexing signals. */
  std::string tag;
};

/*! \brief The gater's output multiplies the gated neuron's output before broadcast.
 *
 * Gates sharing a non-empty group count as one gating operation.
 */
struct output_gate
{
  std::string gater;
  std::string gated;
  std::string group;
};

/*! \brief The gater's output multiplies the weight of one edge (index into edges). */
struct synaptic_gate
{
  std::string gater;
  std::size_t edge = 0;
  std::string group;
};

/*! \brief Feedforward network of SM neurons with output and synaptic gating.
 *
 * Neurons listed in `inputs` take the external value and have no incoming
 * edges. By default each neuron carries at most one output gate and each
 * edge at most one synaptic gate; `allow_multiplicity` lifts this and
 * multiplies all gaters.
 */
class gating_network
{
public:
  std::vector<neuron> neurons;
  std::vector<edge> edges;
  std::vector<output_gate> output_gates;
  std::vector<synaptic_gate> synaptic_gates;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  bool allow_multiplicity = false;

  neuron& add_neuron( std::string id, activation act = activation::identity, rational bias = 0 );
  std::size_t add_edge( std::string const& from, std::string const& to, rational weight = 1, std::string tag = {} );
  void add_output_gate( std::string const& gater, std::string const& gated, std::string group = {} );
  void add_synaptic_gate( std::string const& gater, std::size_t edge_index, std::string group = {} );
  std::string const& add_input( std::string id );
  void add_output( std::string const& id );

  bool has_neuron( std::string_view id ) const;
  std::size_t index_of( std::string_view id ) const;

  /*! \brief Returns a neuron id not yet in use, derived from `base`. */
  std::string fresh_id( std::string const& base ) const;

  /*! \brief Checks references, multiplicity and acyclicity; throws usage_error. */
  void validate() const;

  /*! \brief Neuron indices in a dependency order (edges and gates); throws on cycles. */
  std::vector<std::size_t> topological_order() const;
};

/*! \brief Random layered network with a few output and synaptic gates.
 *
 * Activations are drawn from identity, relu, tanh and logistic so that the
 * input-output map is continuous.
 */
gating_network random_network( std::uint64_t seed, unsigned inputs, unsigned layers, unsigned width, unsigned outputs );

} // namespace quarkcap::netsim
