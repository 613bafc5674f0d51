// SPDX-License-Identifier: Apache-2.0
#include <quarkcap/common/error.hpp>
#include <quarkcap/netsim/io.hpp>

#include <fstream>

namespace quarkcap::netsim
{

namespace
{

rational number_field( nlohmann::json const& j, char const* key, rational fallback )
{
  if ( !j.contains( key ) )
  {
    return fallback;
  }
  auto const& v = j.at( key );
  if ( v.is_string() )
  {
    return parse_rational( v.get<std::string>() );
  }
  if ( v.is_number_integer() )
  {
    return rational( v.get<long>() );
  }
  if ( v.is_number() )
  {
    return from_double( v.get<double>() );
  }
  throw usage_error( std::string( "field '" ) + key + "' must be a number or a decimal string" );
}

std::string string_field( nlohmann::json const& j, char const* key )
{
  if ( !j.contains( key ) || !j.at( key ).is_string() )
  {
    throw usage_error( std::string( "missing string field '" ) + key + "'" );
  }
  return j.at( key ).get<std::string>();
}

} // namespace

nlohmann::ordered_json to_json( gating_network const& net )
{
  nlohmann::ordered_json j;
  auto& neurons = j["neurons"] = nlohmann::ordered_json::array();
  for ( auto const& n : net.neurons )
  {
    neurons.push_back( { { "id", n.id }, { "activation", std::string( to_string( n.act ) ) }, { "bias", quarkcap::to_string( n.bias ) } } );
  }
  auto& edges = j["edges"] = nlohmann::ordered_json::array();
  for ( auto const& e : net.edges )
  {
    nlohmann::ordered_json je = { { "from", e.from }, { "to", e.to }, { "weight", quarkcap::to_string( e.weight ) } };
    if ( !e.tag.empty() )
    {
      je["tag"] = e.tag;
    }
    edges.push_back( std::move( je ) );
  }
  auto& og = j["output_gates"] = nlohmann::ordered_json::array();
  for ( auto const& g : net.output_gates )
  {
    nlohmann::ordered_json jg = { { "gater", g.gater }, { "gated", g.gated } };
    if ( !g.group.empty() )
    {
      jg["group"] = g.group;
    }
    og.push_back( std::move( jg ) );
  }
  auto& sg = j["synaptic_gates"] = nlohmann::ordered_json::array();
  for ( auto const& g : net.synaptic_gates )
  {
    nlohmann::ordered_json jg = { { "gater", g.gater }, { "edge", g.edge } };
    if ( !g.group.empty() )
    {
      jg["group"] = g.group;
    }
    sg.push_back( std::move( jg ) );
  }
  j["inputs"] = net.inputs;
  j["outputs"] = net.outputs;
  if ( net.allow_multiplicity )
  {
    j["allow_multiplicity"] = true;
  }
  return j;
}

gating_network from_json( nlohmann::json const& j )
{
  if ( !j.is_object() )
  {
    throw usage_error( "network file must hold a JSON object" );
  }
  gating_network net;
  try
  {
    for ( auto const& n : j.value( "neurons", nlohmann::json::array() ) )
    {
      net.add_neuron( string_field( n, "id" ), parse_activation( n.value( "activation", std::string( "identity" ) ) ), number_field( n, "bias", 0 ) );
    }
    for ( auto const& e : j.value( "edges", nlohmann::json::array() ) )
    {
      net.add_edge( string_field( e, "from" ), string_field( e, "to" ), number_field( e, "weight", 1 ), e.value( "tag", std::string() ) );
    }
    for ( auto const& g : j.value( "output_gates", nlohmann::json::array() ) )
    {
      net.add_output_gate( string_field( g, "gater" ), string_field( g, "gated" ), g.value( "group", std::string() ) );
    }
    for ( auto const& g : j.value( "synaptic_gates", nlohmann::json::array() ) )
    {
      if ( !g.contains( "edge" ) || !g.at( "edge" ).is_number_unsigned() )
      {
        throw usage_error( "synaptic gate needs a non-negative integer 'edge'" );
      }
      net.add_synaptic_gate( string_field( g, "gater" ), g.at( "edge" ).get<std::size_t>(), g.value( "group", std::string() ) );
    }
    net.inputs = j.value( "inputs", std::vector<std::string>{} );
    net.outputs = j.value( "outputs", std::vector<std::string>{} );
    net.allow_multiplicity = j.value( "allow_multiplicity", false );
  }
  catch ( nlohmann::json::exception const& ex )
  {
    throw usage_error( std::string( "malformed network file: " ) + ex.what() );
  }
  net.validate();
  return net;
}

void save_network( gating_network const& net, std::string const& path )
{
  std::ofstream out( path );
  if ( !out )
  {
    throw usage_error( "cannot write '" + path + "'" );
  }
  out << to_json( net ).dump( 2 ) << '\n';
}

gating_network load_network( std::string const& path )
{
  std::ifstream in( path );
  if ( !in )
  {
    throw usage_error( "cannot read '" + path + "'" );
  }
  nlohmann::json j;
  try
  {
    in >> j;
  }
  catch ( nlohmann::json::exception const& ex )
  {
    throw usage_error( "malformed JSON in '" + path + "': " + ex.what() );
  }
  return from_json( j );
}

} // namespace quarkcap::netsim
