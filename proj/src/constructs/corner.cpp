// SPDX-License-Identifier: Apache-2.0
#include <quarkcap/common/error.hpp>
#include <quarkcap/constructs/corner.hpp>

#include <bit>
#include <vector>

namespace quarkcap::constructs
{

rational value_on_pm_cube( threshold::poly_weights const& w, boolfn::assignment x )
{
  std::vector<rational> point( w.arity() );
  for ( unsigned i = 0; i < w.arity(); ++i )
  {
    point[i] = boolfn::input_bit( x, i ) ? 1 : -1;
  }
  return w.value_at( point );
}

rational corner_separator::value( boolfn::assignment x ) const
{
  return cube == boolfn::encoding::zero_one ? weights.value( x ) : value_on_pm_cube( weights, x );
}

bool corner_separator::holds() const
{
  for ( boolfn::assignment x = 0; x < ( boolfn::assignment{ 1 } << n ); ++x )
  {
    auto const v = value( x );
    if ( x == corner ? v != margin_k : v > -margin_m )
    {
      return false;
    }
  }
  return true;
}

corner_separator make_corner_separator( unsigned n, boolfn::assignment corner, rational const& m, rational const& k, boolfn::encoding cube )
{
  if ( sgn( m ) <= 0 || sgn( k ) < 0 )
  {
    throw domain_error( "corner separator needs M > 0 and K >= 0" );
  }
  if ( n > boolfn::max_arity || ( corner >> n ) != 0 )
  {
    throw arity_error( "corner outside the cube" );
  }
  rational const mk = m + k;
  auto const zeros = n - static_cast<unsigned>( std::popcount( corner ) );

  /* 0/1 form: a_i = +(M+K) where c_i = 1, -(M+K) where c_i = 0 */
  std::vector<rational> a( n );
  for ( unsigned i = 0; i < n; ++i )
  {
    a[i] = boolfn::input_bit( corner, i ) ? mk : rational( -mk );
  }
  rational bias = -mk * n + k + mk * zeros;

  if ( cube == boolfn::encoding::plus_minus )
  {
    /* x_i = (u_i + 1) / 2 */
    for ( auto& ai : a )
    {
      bias += ai / 2;
      ai /= 2;
    }
  }
  corner_separator cs;
  cs.n = n;
  cs.corner = corner;
  cs.margin_m = m;
  cs.margin_k = k;
  cs.cube = cube;
  cs.weights = threshold::poly_weights::affine( bias, a );
  return cs;
}

} // namespace quarkcap::constructs
