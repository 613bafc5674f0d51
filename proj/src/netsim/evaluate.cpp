// SPDX-License-Identifier: Apache-2.0
#include <quarkcap/common/error.hpp>
#include <quarkcap/netsim/evaluate.hpp>

#include <limits>
#include <set>

namespace quarkcap::netsim
{

namespace
{

constexpr auto npos = std::numeric_limits<std::size_t>::max();

rational apply_exact( activation a, rational const& s, bool& sign_zero )
{
  switch ( a )
  {
  case activation::identity:
    return s;
  case activation::heaviside:
    return sgn( s ) > 0 ? 1 : 0;
  case activation::sign:
    sign_zero = sgn( s ) == 0;
    return sgn( s ) >= 0 ? 1 : -1;
  case activation::step:
    return sgn( s ) >= 0 ? 1 : 0;
  case activation::relu:
    return sgn( s ) > 0 ? s : rational( 0 );
  default:
    throw domain_error( "exact evaluation does not support activation '" + std::string( to_string( a ) ) + "'" );
  }
}

double apply_value( activation a, double s, bool& sign_zero )
{
  sign_zero = a == activation::sign && s == 0;
  return apply_activation( a, s );
}

rational apply_value( activation a, rational const& s, bool& sign_zero )
{
  return apply_exact( a, s, sign_zero );
}

template<typename Value>
Value weight_of( rational const& w, double wd )
{
  if constexpr ( std::is_same_v<Value, double> )
  {
    return wd;
  }
  else
  {
    return w;
  }
}

} // namespace

compiled_network::compiled_network( gating_network net )
    : net_( std::move( net ) )
{
  net_.validate();
  order_ = net_.topological_order();
  auto const count = net_.neurons.size();
  input_slot_.assign( count, npos );
  for ( std::size_t i = 0; i < net_.inputs.size(); ++i )
  {
    input_slot_[net_.index_of( net_.inputs[i] )] = i;
  }
  incoming_.resize( count );
  edge_gates_.resize( net_.edges.size() );
  neuron_gates_.resize( count );
  for ( std::size_t e = 0; e < net_.edges.size(); ++e )
  {
    edge_from_.push_back( net_.index_of( net_.edges[e].from ) );
    edge_to_.push_back( net_.index_of( net_.edges[e].to ) );
    incoming_[edge_to_.back()].push_back( e );
    weight_d_.push_back( to_double( net_.edges[e].weight ) );
  }
  for ( std::size_t g = 0; g < net_.output_gates.size(); ++g )
  {
    og_gater_.push_back( net_.index_of( net_.output_gates[g].gater ) );
    neuron_gates_[net_.index_of( net_.output_gates[g].gated )].push_back( g );
  }
  for ( std::size_t g = 0; g < net_.synaptic_gates.size(); ++g )
  {
    sg_gater_.push_back( net_.index_of( net_.synaptic_gates[g].gater ) );
    edge_gates_[net_.synaptic_gates[g].edge].push_back( g );
  }
  for ( auto const& n : net_.neurons )
  {
    bias_d_.push_back( to_double( n.bias ) );
  }
  for ( auto const& id : net_.outputs )
  {
    output_index_.push_back( net_.index_of( id ) );
  }
}

template<typename Value>
eval_result<Value> compiled_network::run( std::span<Value const> input ) const
{
  if ( input.size() != net_.inputs.size() )
  {
    throw usage_error( "expected " + std::to_string( net_.inputs.size() ) + " inputs, got " + std::to_string( input.size() ) );
  }
  auto const count = net_.neurons.size();
  eval_result<Value> res;
  auto& tr = res.trace;
  tr.activation.assign( count, Value( 0 ) );
  tr.output.assign( count, Value( 0 ) );
  tr.output_gate_multiplier.assign( net_.output_gates.size(), Value( 0 ) );
  tr.synaptic_gate_multiplier.assign( net_.synaptic_gates.size(), Value( 0 ) );

  for ( auto const i : order_ )
  {
    auto const& nr = net_.neurons[i];
    Value out;
    if ( input_slot_[i] != npos )
    {
      tr.activation[i] = input[input_slot_[i]];
      out = tr.activation[i];
    }
    else
    {
      Value s = weight_of<Value>( nr.bias, bias_d_[i] );
      for ( auto const e : incoming_[i] )
      {
        Value w = weight_of<Value>( net_.edges[e].weight, weight_d_[e] );
        for ( auto const g : edge_gates_[e] )
        {
          tr.synaptic_gate_multiplier[g] = tr.output[sg_gater_[g]];
          w *= tr.output[sg_gater_[g]];
        }
        s += w * tr.output[edge_from_[e]];
      }
      tr.activation[i] = s;
      bool sign_zero = false;
      out = apply_value( nr.act, s, sign_zero );
      if ( sign_zero )
      {
        tr.warnings.push_back( "sign(0) at neuron '" + nr.id + "' taken as +1" );
      }
    }
    for ( auto const g : neuron_gates_[i] )
    {
      tr.output_gate_multiplier[g] = tr.output[og_gater_[g]];
      out *= tr.output[og_gater_[g]];
    }
    tr.output[i] = out;
  }

  /* every gate is applied exactly once per pass; grouped gates count as one operation */
  auto count_ops = []( auto const& gates ) {
    std::set<std::string> groups;
    std::uint64_t ops = 0;
    for ( auto const& g : gates )
    {
      if ( g.group.empty() )
      {
        ++ops;
      }
      else if ( groups.insert( g.group ).second )
      {
        ++ops;
      }
    }
    return ops;
  };
  tr.output_gate_applications = net_.output_gates.size();
  tr.synaptic_gate_applications = net_.synaptic_gates.size();
  tr.output_gating_ops = count_ops( net_.output_gates );
  tr.synaptic_gating_ops = count_ops( net_.synaptic_gates );

  for ( auto const i : output_index_ )
  {
    res.outputs.push_back( tr.output[i] );
  }
  return res;
}

eval_result<double> compiled_network::evaluate( std::span<double const> input ) const
{
  return run<double>( input );
}

eval_result<rational> compiled_network::evaluate_exact( std::span<rational const> input ) const
{
  return run<rational>( input );
}

eval_result<double> evaluate( gating_network const& net, std::span<double const> input )
{
  return compiled_network( net ).evaluate( input );
}

std::vector<double> shape_activation( activation f, activation g, std::span<double const> xs )
{
  std::vector<double> out;
  out.reserve( xs.size() );
  for ( auto const s : xs )
  {
    out.push_back( apply_activation( f, s ) * apply_activation( g, s ) );
  }
  return out;
}

} // namespace quarkcap::netsim
