// SPDX-License-Identifier: Apache-2.0
#include <quarkcap/common/error.hpp>
#include <quarkcap/constructs/corner.hpp>
#include <quarkcap/constructs/decomposition.hpp>
#include <quarkcap/threshold/threshold.hpp>

namespace quarkcap::constructs
{

product_decomposition_result product_decomposition( boolfn::truth_table const& t )
{
  product_decomposition_result res;
  res.target = t;
  auto const n = t.arity();
  if ( n > 20 )
  {
    throw arity_error( "product decomposition is limited to n <= 20" );
  }
  for ( boolfn::assignment x = 0; x < t.size(); ++x )
  {
    if ( !t.get( x ) )
    {
      res.off_set.push_back( x );
      res.factors.push_back( make_corner_separator( n, x, 1, 1 ).negated() );
    }
  }
  res.claimed_bound = n < 2 ? 1u : std::uint64_t{ 1 } << ( n - 2 );
  res.exceeds_claimed_bound = res.factors.size() > res.claimed_bound;
  return res;
}

boolfn::truth_table multiply_factors( std::vector<threshold::poly_weights> const& factors, unsigned n, boolfn::encoding enc )
{
  boolfn::truth_table out( n, enc );
  for ( boolfn::assignment x = 0; x < out.size(); ++x )
  {
    /* 0/1: product of bits; -/+: product of signs. Both read true iff no factor is false */
    int value = 1;
    for ( auto const& f : factors )
    {
      if ( f.arity() != n )
      {
        throw arity_error( "factor arity differs from the table arity" );
      }
      if ( enc == boolfn::encoding::zero_one )
      {
        value *= threshold::evaluate( f, threshold::threshold_kind::heaviside, x );
      }
      else
      {
        value *= threshold::evaluate( f, threshold::threshold_kind::sign, x );
      }
    }
    out.set( x, value > 0 );
  }
  return out;
}

netsim::gating_network product_network( product_decomposition_result const& d )
{
  auto const n = d.target.arity();
  bool const zero_one = d.target.enc() == boolfn::encoding::zero_one;
  auto const act = zero_one ? netsim::activation::heaviside : netsim::activation::sign;
  netsim::gating_network net;
  for ( unsigned i = 0; i < n; ++i )
  {
    net.add_input( "x" + std::to_string( i + 1 ) );
  }
  if ( d.factors.empty() )
  {
    net.add_neuron( "g1", act, 1 );
    net.add_output( "g1" );
    return net;
  }
  for ( std::size_t f = 0; f < d.factors.size(); ++f )
  {
    auto const id = "g" + std::to_string( f + 1 );
    net.add_neuron( id, act, d.factors[f].bias() );
    for ( unsigned i = 0; i < n; ++i )
    {
      auto const w = d.factors[f].coeff( threshold::monomial{ 1 } << i );
      if ( w != 0 )
      {
        net.add_edge( "x" + std::to_string( i + 1 ), id, w );
      }
    }
  }
  /* g1 gated by g2; further factors through identity units p_k gated by g_k */
  if ( d.factors.size() >= 2 )
  {
    net.add_output_gate( "g2", "g1" );
  }
  std::string last = "g1";
  for ( std::size_t f = 2; f < d.factors.size(); ++f )
  {
    auto const id = "p" + std::to_string( f + 1 );
    net.add_neuron( id );
    net.add_edge( last, id );
    net.add_output_gate( "g" + std::to_string( f + 1 ), id );
    last = id;
  }
  net.add_output( last );
  return net;
}

} // namespace quarkcap::constructs
