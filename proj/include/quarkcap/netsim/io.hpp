// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <quarkcap/netsim/network.hpp>

#include <json.hpp>

#include <string>

namespace quarkcap::netsim
{

/*! \brief Network file: arrays "neurons", "edges", "output_gates", "synaptic_gates",
 *  "inputs", "outputs"; weights and biases as lossless decimal (or p/q) strings. */
nlohmann::ordered_json to_json( gating_network const& net );
gating_network from_json( nlohmann::json const& j );

void save_network( gating_network const& net, std::string const& path );
gating_network load_network( std::string const& path );

} // namespace quarkcap::netsim
