// SPDX-License-Identifier: Apache-2.0
#include <quarkcap/common/error.hpp>
#include <quarkcap/netsim/builders.hpp>

namespace quarkcap::netsim
{

namespace
{

void check_dim( unsigned dim )
{
  if ( dim == 0 )
  {
    throw usage_error( "vector dimension must be positive" );
  }
}

std::string idx( std::string const& base, unsigned i )
{
  return base + std::to_string( i + 1 );
}

} // namespace

gating_network build_sm_dot_product( unsigned dim )
{
  check_dim( dim );
  gating_network net;
  for ( unsigned i = 0; i < dim; ++i )
  {
    net.add_input( idx( "u", i ) );
  }
  for ( unsigned i = 0; i < dim; ++i )
  {
    net.add_input( idx( "v", i ) );
  }
  net.add_neuron( "dot" );
  for ( unsigned i = 0; i < dim; ++i )
  {
    net.add_neuron( idx( "log_u", i ), activation::log );
    net.add_neuron( idx( "log_v", i ), activation::log );
    net.add_neuron( idx( "sum", i ) );
    net.add_neuron( idx( "prod", i ), activation::exp );
    net.add_edge( idx( "u", i ), idx( "log_u", i ) );
    net.add_edge( idx( "v", i ), idx( "log_v", i ) );
    net.add_edge( idx( "log_u", i ), idx( "sum", i ) );
    net.add_edge( idx( "log_v", i ), idx( "sum", i ) );
    net.add_edge( idx( "sum", i ), idx( "prod", i ) );
    net.add_edge( idx( "prod", i ), "dot" );
  }
  net.add_output( "dot" );
  return net;
}

gating_network build_gated_dot_product( unsigned dim, gating_mode mode )
{
  check_dim( dim );
  gating_network net;
  for ( unsigned i = 0; i < dim; ++i )
  {
    net.add_input( idx( "u", i ) );
  }
  for ( unsigned i = 0; i < dim; ++i )
  {
    net.add_input( idx( "v", i ) );
  }
  net.add_neuron( "dot" );
  for ( unsigned i = 0; i < dim; ++i )
  {
    if ( mode == gating_mode::output )
    {
      net.add_neuron( idx( "uv", i ) );
      net.add_edge( idx( "u", i ), idx( "uv", i ) );
      net.add_output_gate( idx( "v", i ), idx( "uv", i ) );
      net.add_edge( idx( "uv", i ), "dot" );
    }
    else
    {
      auto const e = net.add_edge( idx( "u", i ), "dot" );
      net.add_synaptic_gate( idx( "v", i ), e );
    }
  }
  net.add_output( "dot" );
  return net;
}

gating_network build_sm_softmax( unsigned dim )
{
  check_dim( dim );
  gating_network net;
  for ( unsigned i = 0; i < dim; ++i )
  {
    net.add_input( idx( "u", i ) );
  }
  net.add_neuron( "log_sum", activation::log );
  for ( unsigned i = 0; i < dim; ++i )
  {
    net.add_neuron( idx( "exp_u", i ), activation::exp );
    net.add_edge( idx( "u", i ), idx( "exp_u", i ) );
    net.add_edge( idx( "exp_u", i ), "log_sum" );
  }
  for ( unsigned i = 0; i < dim; ++i )
  {
    net.add_neuron( idx( "softmax", i ), activation::exp );
    net.add_edge( idx( "u", i ), idx( "softmax", i ) );
    net.add_edge( "log_sum", idx( "softmax", i ), -1 );
    net.add_output( idx( "softmax", i ) );
  }
  return net;
}

gating_network build_sm_normalization( unsigned dim )
{
  check_dim( dim );
  gating_network net;
  for ( unsigned i = 0; i < dim; ++i )
  {
    net.add_input( idx( "u", i ) );
  }
  net.add_neuron( "log_norm2", activation::log );
  for ( unsigned i = 0; i < dim; ++i )
  {
    net.add_neuron( idx( "log_u", i ), activation::log );
    net.add_neuron( idx( "square", i ), activation::exp );
    net.add_edge( idx( "u", i ), idx( "log_u", i ) );
    net.add_edge( idx( "log_u", i ), idx( "square", i ), 2 );
    net.add_edge( idx( "square", i ), "log_norm2" );
  }
  for ( unsigned i = 0; i < dim; ++i )
  {
    net.add_neuron( idx( "unit", i ), activation::exp );
    net.add_edge( idx( "log_u", i ), idx( "unit", i ) );
    net.add_edge( "log_norm2", idx( "unit", i ), rational( -1, 2 ) );
    net.add_output( idx( "unit", i ) );
  }
  return net;
}

} // namespace quarkcap::netsim
