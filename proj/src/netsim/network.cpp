// SPDX-License-Identifier: Apache-2.0
#include <quarkcap/common/error.hpp>
#include <quarkcap/common/random.hpp>
#include <quarkcap/netsim/network.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <set>

namespace quarkcap::netsim
{

namespace
{

struct name_entry
{
  activation act;
  std::string_view name;
};

constexpr name_entry activation_names[] = {
    { activation::identity, "identity" }, { activation::heaviside, "heaviside" }, { activation::sign, "sign" },
    { activation::step, "step" },         { activation::relu, "relu" },           { activation::logistic, "logistic" },
    { activation::tanh, "tanh" },         { activation::exp, "exp" },             { activation::log, "log" } };

} // namespace

std::string_view to_string( activation a )
{
  for ( auto const& e : activation_names )
  {
    if ( e.act == a )
    {
      return e.name;
    }
  }
  return "identity";
}

activation parse_activation( std::string_view text )
{
  if ( text == "linear" )
  {
    return activation::identity;
  }
  for ( auto const& e : activation_names )
  {
    if ( e.name == text )
    {
      return e.act;
    }
  }
  throw usage_error( "unknown activation '" + std::string( text ) + "'" );
}

double apply_activation( activation a, double s )
{
  switch ( a )
  {
  case activation::identity:
    return s;
  case activation::heaviside:
    return s > 0 ? 1.0 : 0.0;
  case activation::sign:
    return s >= 0 ? 1.0 : -1.0;
  case activation::step:
    return s >= 0 ? 1.0 : 0.0;
  case activation::relu:
    return s > 0 ? s : 0.0;
  case activation::logistic:
    return 1.0 / ( 1.0 + std::exp( -s ) );
  case activation::tanh:
    return std::tanh( s );
  case activation::exp:
    return std::exp( s );
  case activation::log:
    if ( !( s > 0 ) )
    {
      throw domain_error( "log activation on non-positive input " + std::to_string( s ) );
    }
    return std::log( s );
  }
  return s;
}

neuron& gating_network::add_neuron( std::string id, activation act, rational bias )
{
  if ( has_neuron( id ) )
  {
    throw usage_error( "duplicate neuron id '" + id + "'" );
  }
  neurons.push_back( { std::move( id ), act, std::move( bias ) } );
  return neurons.back();
}

std::size_t gating_network::add_edge( std::string const& from, std::string const& to, rational weight, std::string tag )
{
  edges.push_back( { from, to, std::move( weight ), std::move( tag ) } );
  return edges.size() - 1;
}

void gating_network::add_output_gate( std::string const& gater, std::string const& gated, std::string group )
{
  output_gates.push_back( { gater, gated, std::move( group ) } );
}

void gating_network::add_synaptic_gate( std::string const& gater, std::size_t edge_index, std::string group )
{
  synaptic_gates.push_back( { gater, edge_index, std::move( group ) } );
}

std::string const& gating_network::add_input( std::string id )
{
  inputs.push_back( id );
  add_neuron( std::move( id ) );
  return inputs.back();
}

void gating_network::add_output( std::string const& id )
{
  outputs.push_back( id );
}

bool gating_network::has_neuron( std::string_view id ) const
{
  return std::any_of( neurons.begin(), neurons.end(), [&]( auto const& n ) { return n.id == id; } );
}

std::size_t gating_network::index_of( std::string_view id ) const
{
  for ( std::size_t i = 0; i < neurons.size(); ++i )
  {
    if ( neurons[i].id == id )
    {
      return i;
    }
  }
  throw usage_error( "unknown neuron id '" + std::string( id ) + "'" );
}

std::string gating_network::fresh_id( std::string const& base ) const
{
  if ( !has_neuron( base ) )
  {
    return base;
  }
  for ( unsigned k = 1;; ++k )
  {
    auto candidate = base + "#" + std::to_string( k );
    if ( !has_neuron( candidate ) )
    {
      return candidate;
    }
  }
}

void gating_network::validate() const
{
  std::set<std::string_view> ids;
  for ( auto const& n : neurons )
  {
    if ( n.id.empty() )
    {
      throw usage_error( "neuron with empty id" );
    }
    if ( !ids.insert( n.id ).second )
    {
      throw usage_error( "duplicate neuron id '" + n.id + "'" );
    }
  }
  std::set<std::string_view> input_ids;
  for ( auto const& id : inputs )
  {
    index_of( id );
    if ( !input_ids.insert( id ).second )
    {
      throw usage_error( "input '" + id + "' declared twice" );
    }
  }
  for ( auto const& id : outputs )
  {
    index_of( id );
  }
  for ( auto const& e : edges )
  {
    index_of( e.from );
    index_of( e.to );
    if ( input_ids.contains( e.to ) )
    {
      throw usage_error( "input neuron '" + e.to + "' has an incoming edge" );
    }
    if ( !e.tag.empty() && e.tag != additive_attention_tag )
    {
      throw usage_error( "unknown edge tag '" + e.tag + "'" );
    }
  }
  std::set<std::string_view> gated;
  for ( auto const& g : output_gates )
  {
    index_of( g.gater );
    index_of( g.gated );
    if ( !gated.insert( g.gated ).second && !allow_multiplicity )
    {
      throw usage_error( "neuron '" + g.gated + "' has more than one output gate" );
    }
  }
  std::set<std::size_t> gated_edges;
  for ( auto const& g : synaptic_gates )
  {
    index_of( g.gater );
    if ( g.edge >= edges.size() )
    {
      throw usage_error( "synaptic gate refers to missing edge " + std::to_string( g.edge ) );
    }
    if ( !gated_edges.insert( g.edge ).second && !allow_multiplicity )
    {
      throw usage_error( "edge " + std::to_string( g.edge ) + " has more than one synaptic gate" );
    }
  }
  topological_order();
}

std::vector<std::size_t> gating_network::topological_order() const
{
  auto const count = neurons.size();
  std::vector<std::vector<std::size_t>> succ( count );
  std::vector<std::size_t> indegree( count, 0 );
  auto depend = [&]( std::size_t before, std::size_t after ) {
    succ[before].push_back( after );
    ++indegree[after];
  };
  for ( auto const& e : edges )
  {
    depend( index_of( e.from ), index_of( e.to ) );
  }
  for ( auto const& g : output_gates )
  {
    depend( index_of( g.gater ), index_of( g.gated ) );
  }
  for ( auto const& g : synaptic_gates )
  {
    depend( index_of( g.gater ), index_of( edges.at( g.edge ).to ) );
  }
  /* Kahn's algorithm, smallest declaration index first for a canonical order */
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for ( std::size_t i = 0; i < count; ++i )
  {
    if ( indegree[i] == 0 )
    {
      ready.push( i );
    }
  }
  std::vector<std::size_t> order;
  order.reserve( count );
  while ( !ready.empty() )
  {
    auto const i = ready.top();
    ready.pop();
    order.push_back( i );
    for ( auto j : succ[i] )
    {
      if ( --indegree[j] == 0 )
      {
        ready.push( j );
      }
    }
  }
  if ( order.size() != count )
  {
    throw usage_error( "network has a cycle through edges or gates" );
  }
  return order;
}

gating_network random_network( std::uint64_t seed, unsigned inputs, unsigned layers, unsigned width, unsigned outputs )
{
  counter_rng rng( seed, "netsim.random_network" );
  constexpr activation choices[] = { activation::identity, activation::relu, activation::tanh, activation::logistic };
  gating_network net;
  std::vector<std::string> previous;
  for ( unsigned i = 0; i < inputs; ++i )
  {
    previous.push_back( net.add_input( "x" + std::to_string( i ) ) );
  }
  auto weight = [&]() { return from_double( std::round( rng.uniform( -2.0, 2.0 ) * 1024.0 ) / 1024.0 ); };
  for ( unsigned l = 0; l <= layers; ++l )
  {
    bool const last = l == layers;
    unsigned const size = last ? outputs : width;
    std::vector<std::string> current;
    for ( unsigned u = 0; u < size; ++u )
    {
      auto const id = ( last ? "y" : "h" + std::to_string( l ) + "_" ) + std::to_string( u );
      auto const act = last ? activation::identity : choices[rng.uniform_int( 0, 3 )];
      net.add_neuron( id, act, weight() );
      for ( auto const& from : previous )
      {
        if ( rng.uniform() < 0.8 )
        {
          net.add_edge( from, id, weight() );
        }
      }
      current.push_back( id );
    }
    if ( l > 0 )
    {
      /* a unit of this layer output-gated by one of the previous layer */
      auto const gated = current[rng.uniform_int( 0, size - 1 )];
      auto const gater = previous[rng.uniform_int( 0, previous.size() - 1 )];
      net.add_output_gate( gater, gated );
    }
    previous = std::move( current );
  }
  /* a couple of synaptic gates on edges into the last two layers, gaters taken from earlier layers */
  std::set<std::size_t> used;
  for ( unsigned s = 0; s < 2 && !net.edges.empty(); ++s )
  {
    auto const e = static_cast<std::size_t>( rng.uniform_int( 0, static_cast<std::int64_t>( net.edges.size() ) - 1 ) );
    if ( used.contains( e ) )
    {
      continue;
    }
    auto const from = net.index_of( net.edges[e].from );
    /* any neuron declared before the edge source is a safe gater */
    auto const gater = static_cast<std::size_t>( rng.uniform_int( 0, static_cast<std::int64_t>( from ) ) );
    net.add_synaptic_gate( net.neurons[gater].id, e );
    used.insert( e );
  }
  for ( unsigned u = 0; u < outputs; ++u )
  {
    net.add_output( "y" + std::to_string( u ) );
  }
  net.validate();
  return net;
}

} // namespace quarkcap::netsim
