// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <quarkcap/netsim/network.hpp>

namespace quarkcap::netsim
{

/*! \brief Replaces every output gate by synaptic gates on all outgoing edges of the gated neuron.
 *
 * When the gated value is also read as a declared output or as a gater, an
 * identity twin fed by a synaptically gated unit-weight edge takes over that role.
 */
gating_network output_to_synaptic( gating_network const& net );

/*! \brief Replaces every synaptic gate on an edge i -> k by an identity twin i'
 *  (unit-weight edge i -> i'), rerouting the edge through i' and output-gating i'. */
gating_network synaptic_to_output( gating_network const& net );

} // namespace quarkcap::netsim
