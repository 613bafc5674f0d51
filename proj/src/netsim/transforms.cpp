// SPDX-License-Identifier: Apache-2.0
#include <quarkcap/netsim/transforms.hpp>

#include <algorithm>

namespace quarkcap::netsim
{

gating_network output_to_synaptic( gating_network const& net )
{
  net.validate();
  gating_network out = net;
  while ( !out.output_gates.empty() )
  {
    auto const g = out.output_gates.front();
    out.output_gates.erase( out.output_gates.begin() );
    auto const gates_with = [&]( auto const& gates ) {
      return std::any_of( gates.begin(), gates.end(), [&]( auto const& h ) { return h.gater == g.gated; } );
    };
    bool const read_directly = std::find( out.outputs.begin(), out.outputs.end(), g.gated ) != out.outputs.end() ||
                               gates_with( out.output_gates ) || gates_with( out.synaptic_gates );

    /* gate every outgoing edge */
    auto const edge_count = out.edges.size();
    for ( std::size_t e = 0; e < edge_count; ++e )
    {
      if ( out.edges[e].from != g.gated )
      {
        continue;
      }
      if ( std::any_of( out.synaptic_gates.begin(), out.synaptic_gates.end(), [&]( auto const& s ) { return s.edge == e; } ) )
      {
        out.allow_multiplicity = true;
      }
      out.add_synaptic_gate( g.gater, e, g.group );
    }

    if ( read_directly )
    {
      auto const twin = out.fresh_id( g.gated + "'" );
      out.add_neuron( twin );
      auto const e = out.add_edge( g.gated, twin, 1 );
      out.add_synaptic_gate( g.gater, e, g.group );
      std::replace( out.outputs.begin(), out.outputs.end(), g.gated, twin );
      for ( auto& h : out.output_gates )
      {
        if ( h.gater == g.gated )
        {
          h.gater = twin;
        }
      }
      for ( auto& h : out.synaptic_gates )
      {
        if ( h.gater == g.gated )
        {
          h.gater = twin;
        }
      }
    }
  }
  out.validate();
  return out;
}

gating_network synaptic_to_output( gating_network const& net )
{
  net.validate();
  gating_network out = net;
  out.synaptic_gates.clear();
  for ( auto const& g : net.synaptic_gates )
  {
    auto const& from = out.edges[g.edge].from;
    auto const twin = out.fresh_id( from + "'" );
    out.add_neuron( twin );
    out.add_edge( from, twin, 1 );
    out.edges[g.edge].from = twin;
    out.add_output_gate( g.gater, twin, g.group );
  }
  out.validate();
  return out;
}

} // namespace quarkcap::netsim
