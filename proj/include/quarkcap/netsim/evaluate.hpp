// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <quarkcap/common/rational.hpp>
#include <quarkcap/netsim/network.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace quarkcap::netsim
{

/*! \brief Everything one forward pass computed. */
template<typename Value>
struct eval_trace
{
  std::vector<Value> activation; /*!< S per neuron */
  std::vector<Value> output;     /*!< O per neuron, after output gating */
  std::vector<Value> output_gate_multiplier;
  std::vector<Value> synaptic_gate_multiplier;
  /*! \brief Gating operations; grouped gates count once. */
  std::uint64_t output_gating_ops = 0;
  std::uint64_t synaptic_gating_ops = 0;
  /*! \brief Individual gate applications. */
  std::uint64_t output_gate_applications = 0;
  std::uint64_t synaptic_gate_applications = 0;
  std::vector<std::string> warnings;
};

template<typename Value>
struct eval_result
{
  std::vector<Value> outputs;
  eval_trace<Value> trace;
};

/*! \brief Network prepared for repeated evaluation. */
class compiled_network
{
public:
  explicit compiled_network( gating_network net );

  gating_network const& network() const { return net_; }

  eval_result<double> evaluate( std::span<double const> input ) const;

  /*! \brief Exact pass; only identity, heaviside, sign, step and relu neurons are allowed. */
  eval_result<rational> evaluate_exact( std::span<rational const> input ) const;

  /*! \brief Outputs only, skipping the trace bookkeeping of unused fields. */
  std::vector<double> outputs( std::span<double const> input ) const { return evaluate( input ).outputs; }

private:
  template<typename Value>
  eval_result<Value> run( std::span<Value const> input ) const;

  gating_network net_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> input_slot_;                       /* per neuron, or npos */
  std::vector<std::vector<std::size_t>> incoming_;            /* edge indices per neuron */
  std::vector<std::vector<std::size_t>> edge_gates_;          /* synaptic gate indices per edge */
  std::vector<std::vector<std::size_t>> neuron_gates_;        /* output gate indices per neuron */
  std::vector<std::size_t> edge_from_, edge_to_, og_gater_, sg_gater_;
  std::vector<double> weight_d_, bias_d_;
  std::vector<std::size_t> output_index_;
};

/*! \brief One-shot double evaluation. */
eval_result<double> evaluate( gating_network const& net, std::span<double const> input );

/*! \brief Samples f(S) * g(S) over the grid: the activation a gated unit acquires
 *  when gated by a unit with the same weights. */
std::vector<double> shape_activation( activation f, activation g, std::span<double const> xs );

} // namespace quarkcap::netsim
