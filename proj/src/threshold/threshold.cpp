// SPDX-License-Identifier: Apache-2.0
#include <quarkcap/common/error.hpp>
#include <quarkcap/threshold/lp.hpp>
#include <quarkcap/threshold/threshold.hpp>

#include <cmath>

namespace quarkcap::threshold
{

std::string_view to_string( threshold_kind k )
{
  return k == threshold_kind::sign ? "sign" : "heaviside";
}

threshold_kind parse_threshold_kind( std::string_view text )
{
  if ( text == "sign" )
  {
    return threshold_kind::sign;
  }
  if ( text == "heaviside" )
  {
    return threshold_kind::heaviside;
  }
  throw usage_error( "unknown threshold kind '" + std::string( text ) + "'" );
}

int apply_threshold( threshold_kind kind, rational const& value )
{
  int const s = sgn( value );
  if ( kind == threshold_kind::heaviside )
  {
    return s > 0 ? 1 : 0;
  }
  if ( s == 0 )
  {
    throw ambiguous_sign();
  }
  return s;
}

int evaluate( poly_weights const& w, threshold_kind kind, boolfn::assignment x )
{
  if ( x >> w.arity() )
  {
    throw arity_error( "assignment has more inputs than the gate" );
  }
  return apply_threshold( kind, w.value( x ) );
}

boolfn::truth_table tabulate( poly_weights const& w, threshold_kind kind )
{
  auto const enc = kind == threshold_kind::sign ? boolfn::encoding::plus_minus : boolfn::encoding::zero_one;
  return boolfn::tabulate( w.arity(), [&]( auto x ) { return evaluate( w, kind, x ) > 0; }, enc );
}

std::optional<poly_weights> realize( boolfn::truth_table const& t, unsigned d )
{
  /* constants get the plain certificate +-1 */
  auto const ones = t.count_ones();
  if ( ones == 0 || ones == t.size() )
  {
    poly_weights w( t.arity(), d );
    w.set( 0, ones == 0 ? -1 : 1 );
    return w;
  }
  return separability_lp( t.arity(), d ).solve( t ).weights;
}

double reference_formula( std::string_view name, unsigned n, unsigned d, unsigned m )
{
  double const nn = n;
  auto const factorial = []( unsigned k ) {
    double f = 1;
    for ( unsigned i = 2; i <= k; ++i )
    {
      f *= i;
    }
    return f;
  };
  if ( name == "zuev_upper" )
  {
    return nn * nn;
  }
  if ( name == "komlos" )
  {
    return n == 0 ? 0.0 : nn * nn - nn * std::log2( nn );
  }
  if ( name == "poly_main" )
  {
    double binom = 1, sum = 0;
    for ( unsigned k = 0; k <= d && k <= n; ++k )
    {
      sum += binom;
      binom = binom * ( nn - k ) / ( k + 1 );
    }
    return nn * sum;
  }
  if ( name == "poly_fixed_d" )
  {
    return std::pow( nn, d + 1 ) / factorial( d );
  }
  if ( name == "gated_pair" )
  {
    return 2 * nn * nn;
  }
  if ( name == "gated_pair_poly" )
  {
    return 2 * std::pow( nn, d + 1 ) / factorial( d );
  }
  if ( name == "layer_gated" )
  {
    return 2.0 * m * nn * nn;
  }
  throw usage_error( "unknown reference formula '" + std::string( name ) + "'" );
}

std::vector<std::string> reference_formula_names()
{
  return { "zuev_upper", "komlos", "poly_main", "poly_fixed_d", "gated_pair", "gated_pair_poly", "layer_gated" };
}

} // namespace quarkcap::threshold
