// SPDX-License-Identifier: Apache-2.0
#include <quarkcap/common/error.hpp>
#include <quarkcap/constructs/corner.hpp>
#include <quarkcap/constructs/multiplex.hpp>
#include <quarkcap/threshold/threshold.hpp>

#include <algorithm>
#include <bit>

namespace quarkcap::constructs
{

addressing parse_addressing( std::string_view text )
{
  if ( text == "dense" )
  {
    return addressing::dense;
  }
  if ( text == "sparse" )
  {
    return addressing::sparse;
  }
  throw usage_error( "unknown addressing '" + std::string( text ) + "' (expected dense or sparse)" );
}

readout parse_readout( std::string_view text )
{
  if ( text == "or" || text == "OR" )
  {
    return readout::or_op;
  }
  if ( text == "and" || text == "AND" )
  {
    return readout::and_op;
  }
  if ( text == "product" || text == "PRODUCT" )
  {
    return readout::product;
  }
  throw usage_error( "unknown readout '" + std::string( text ) + "' (expected or, and, product)" );
}

std::string_view to_string( readout r )
{
  switch ( r )
  {
  case readout::or_op:
    return "or";
  case readout::and_op:
    return "and";
  case readout::product:
    return "product";
  }
  return "or";
}

unsigned attention_width( unsigned m, addressing addr )
{
  if ( m == 0 )
  {
    throw usage_error( "multiplexing needs at least one function" );
  }
  if ( addr == addressing::sparse )
  {
    return m - 1;
  }
  return m <= 1 ? 0u : static_cast<unsigned>( std::bit_width( m - 1 ) );
}

boolfn::assignment multiplex_network::code( unsigned i ) const
{
  if ( i >= size() )
  {
    throw usage_error( "unit index beyond the multiplexed functions" );
  }
  if ( addr == addressing::dense )
  {
    return i;
  }
  return i == 0 ? 0 : boolfn::assignment{ 1 } << ( i - 1 );
}

std::vector<int> multiplex_network::hidden_outputs( boolfn::assignment x ) const
{
  std::vector<int> out;
  out.reserve( hidden.size() );
  for ( auto const& h : hidden )
  {
    out.push_back( threshold::evaluate( h, threshold::threshold_kind::sign, x ) );
  }
  return out;
}

int multiplex_network::output( boolfn::assignment x ) const
{
  auto const h = hidden_outputs( x );
  switch ( ro )
  {
  case readout::or_op:
    return std::find( h.begin(), h.end(), 1 ) != h.end() ? 1 : -1;
  case readout::and_op:
    return std::find( h.begin(), h.end(), -1 ) != h.end() ? -1 : 1;
  case readout::product:
  {
    int p = 1;
    for ( auto v : h )
    {
      p *= v;
    }
    return p;
  }
  }
  return 0;
}

boolfn::truth_table multiplex_network::table() const
{
  return boolfn::tabulate( arity(), [&]( boolfn::assignment x ) { return output( x ) > 0; } );
}

netsim::gating_network multiplex_network::to_network() const
{
  netsim::gating_network net;
  for ( unsigned b = 0; b < attention_bits; ++b )
  {
    net.add_input( "s" + std::to_string( b + 1 ) );
  }
  for ( unsigned i = 0; i < n_plus; ++i )
  {
    net.add_input( "x" + std::to_string( i + 1 ) );
  }
  for ( unsigned j = 0; j < size(); ++j )
  {
    if ( hidden[j].degree() > 1 )
    {
      throw usage_error( "network form needs affine base functions" );
    }
    auto const id = "h" + std::to_string( j + 1 );
    net.add_neuron( id, netsim::activation::sign, hidden[j].bias() );
    for ( unsigned b = 0; b < attention_bits; ++b )
    {
      auto const w = hidden[j].coeff( threshold::monomial{ 1 } << b );
      if ( w != 0 )
      {
        net.add_edge( "s" + std::to_string( b + 1 ), id, w, std::string( netsim::additive_attention_tag ) );
      }
    }
    for ( unsigned i = 0; i < n_plus; ++i )
    {
      auto const w = hidden[j].coeff( threshold::monomial{ 1 } << ( attention_bits + i ) );
      if ( w != 0 )
      {
        net.add_edge( "x" + std::to_string( i + 1 ), id, w );
      }
    }
  }
  auto const m = static_cast<long>( size() );
  if ( ro == readout::product )
  {
    /* chain of identity units, each output-gated by the next hidden unit */
    std::string prev = "h1";
    for ( unsigned j = 1; j < size(); ++j )
    {
      auto const id = "p" + std::to_string( j + 1 );
      net.add_neuron( id );
      net.add_edge( prev, id );
      net.add_output_gate( "h" + std::to_string( j + 1 ), id );
      prev = id;
    }
    net.add_output( prev );
  }
  else
  {
    rational const bias = ro == readout::or_op ? rational( m - 1 ) : rational( 1 - m );
    net.add_neuron( "out", netsim::activation::sign, bias );
    for ( unsigned j = 0; j < size(); ++j )
    {
      net.add_edge( "h" + std::to_string( j + 1 ), "out" );
    }
    net.add_output( "out" );
  }
  return net;
}

multiplex_network build_multiplex( std::vector<threshold::poly_weights> const& fs, addressing addr, std::vector<bool> const& mask, readout ro )
{
  if ( fs.empty() )
  {
    throw usage_error( "multiplexing needs at least one function" );
  }
  if ( mask.size() != fs.size() )
  {
    throw usage_error( "mask length must match the number of functions" );
  }
  bool const identity = ro != readout::or_op;
  for ( auto const b : mask )
  {
    if ( b != identity )
    {
      throw usage_error( "mask is incompatible with the readout (false mask needs OR, true mask needs AND or product)" );
    }
  }
  multiplex_network mn;
  mn.base = fs;
  mn.addr = addr;
  mn.mask = mask;
  mn.ro = ro;
  mn.n_plus = fs.front().arity();
  mn.attention_bits = attention_width( static_cast<unsigned>( fs.size() ), addr );
  if ( mn.arity() > 26 )
  {
    throw arity_error( "multiplexed network exceeds 26 inputs" );
  }
  for ( unsigned j = 0; j < fs.size(); ++j )
  {
    auto const& p = fs[j];
    if ( p.arity() != mn.n_plus || p.degree_bound() != fs.front().degree_bound() )
    {
      throw usage_error( "multiplexed functions must share arity and degree" );
    }
    if ( p.min_abs_on_cube() == 0 )
    {
      throw domain_error( "multiplexed function lacks a strict sign certificate" );
    }
    rational const big = p.max_abs_on_cube() + 1;
    auto const sep = make_corner_separator( mn.attention_bits, mn.code( j ), big, 0 );
    auto const selector = sep.weights.shifted( 0, mn.arity() );
    auto h = p.shifted( mn.attention_bits, mn.arity() ) + ( mask[j] ? selector.negated() : selector );
    mn.hidden.push_back( std::move( h ) );
  }
  return mn;
}

} // namespace quarkcap::constructs
