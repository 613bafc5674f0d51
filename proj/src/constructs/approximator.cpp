// SPDX-License-Identifier: Apache-2.0
#include <quarkcap/common/error.hpp>
#include <quarkcap/constructs/approximator.hpp>

#include <algorithm>
#include <cmath>

namespace quarkcap::constructs
{

slice_variant parse_slice_variant( std::string_view text )
{
  if ( text == "linear" )
  {
    return slice_variant::linear;
  }
  if ( text == "constant" )
  {
    return slice_variant::constant;
  }
  throw usage_error( "unknown approximator variant '" + std::string( text ) + "' (expected linear or constant)" );
}

slice_approximator build_slice_approximator( std::span<double const> samples, slice_variant variant )
{
  if ( samples.size() < 2 )
  {
    throw domain_error( "the approximator needs at least two samples" );
  }
  slice_approximator sa;
  sa.n = static_cast<unsigned>( samples.size() - 1 );
  sa.samples.assign( samples.begin(), samples.end() );
  sa.variant = variant;
  auto const abscissa = [&]( unsigned k ) { return from_double( static_cast<double>( k ) / sa.n ); };
  rational prev_slope = 0, prev_offset = 0;
  for ( unsigned k = 1; k <= sa.n; ++k )
  {
    /* running target on slice k, minus what units 1..k-1 already contribute */
    auto const left = abscissa( k - 1 );
    auto const f_left = from_double( samples[k - 1] );
    rational slope = 0, offset = f_left;
    if ( variant == slice_variant::linear )
    {
      slope = ( from_double( samples[k] ) - f_left ) / ( abscissa( k ) - left );
      offset = f_left - slope * left;
    }
    sa.slope_exact.push_back( slope - prev_slope );
    sa.offset_exact.push_back( offset - prev_offset );
    sa.attention_bias_exact.push_back( -left );
    sa.slope.push_back( to_double( sa.slope_exact.back() ) );
    sa.offset.push_back( to_double( sa.offset_exact.back() ) );
    sa.attention_bias.push_back( to_double( sa.attention_bias_exact.back() ) );
    prev_slope = slope;
    prev_offset = offset;
  }
  return sa;
}

double slice_approximator::evaluate( double x ) const
{
  if ( !( x >= 0.0 && x <= 1.0 ) )
  {
    throw domain_error( "approximator input outside [0, 1]" );
  }
  double sum = 0;
  for ( unsigned k = 0; k < n; ++k )
  {
    if ( x + attention_bias[k] >= 0 )
    {
      sum += slope[k] * x + offset[k];
    }
  }
  return sum;
}

netsim::gating_network slice_approximator::to_network() const
{
  netsim::gating_network net;
  net.add_input( "x" );
  net.add_neuron( "y" );
  for ( unsigned k = 0; k < n; ++k )
  {
    auto const a = "a" + std::to_string( k + 1 );
    auto const u = "y" + std::to_string( k + 1 );
    net.add_neuron( a, netsim::activation::step, attention_bias_exact[k] );
    net.add_edge( "x", a );
    net.add_neuron( u, netsim::activation::identity, offset_exact[k] );
    net.add_edge( "x", u, slope_exact[k] );
    net.add_output_gate( a, u );
    net.add_edge( u, "y" );
  }
  net.add_output( "y" );
  return net;
}

std::vector<double> sample_function( std::function<double( double )> const& f, unsigned n )
{
  if ( n == 0 )
  {
    throw domain_error( "need at least one slice" );
  }
  std::vector<double> out;
  for ( unsigned k = 0; k <= n; ++k )
  {
    out.push_back( f( static_cast<double>( k ) / n ) );
  }
  return out;
}

double sup_error( slice_approximator const& sa, std::function<double( double )> const& f, unsigned points )
{
  if ( points < 2 )
  {
    throw domain_error( "grid needs at least two points" );
  }
  double worst = 0;
  for ( unsigned i = 0; i < points; ++i )
  {
    double const x = static_cast<double>( i ) / ( points - 1 );
    worst = std::max( worst, std::abs( sa.evaluate( x ) - f( x ) ) );
  }
  return worst;
}

} // namespace quarkcap::constructs
