// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <quarkcap/netsim/network.hpp>

#include <cstdint>

namespace quarkcap::netsim
{

enum class gating_mode : std::uint8_t
{
  output,
  synaptic
};

/*! \brief Depth-4 SM network for u.v on positive vectors: log units, pairwise sums,
 *  exp units, unit-weight sum. Inputs u_1..u_dim then v_1..v_dim, output "dot". */
gating_network build_sm_dot_product( unsigned dim );

/*! \brief u.v with one gating operation per coordinate and a unit-weight linear sum.
 *
 * Output mode: identity copies of u_i output-gated by v_i. Synaptic mode:
 * the unit weights u_i -> sum are gated by v_i.
 */
gating_network build_gated_dot_product( unsigned dim, gating_mode mode );

/*! \brief SM softmax: exp units, log of their sum, exp(u_i - L). */
gating_network build_sm_softmax( unsigned dim );

/*! \brief SM normalization of positive vectors: exp(2 log u_i), log of the sum, exp(log u_i - L/2). */
gating_network build_sm_normalization( unsigned dim );

} // namespace quarkcap::netsim
