// SPDX-License-Identifier: Apache-2.0
#include <quarkcap/common/error.hpp>
#include <quarkcap/constructs/embedding.hpp>
#include <quarkcap/threshold/threshold.hpp>

namespace quarkcap::constructs
{

restriction restriction_signs( boolfn::boolean_op const& b, unsigned i )
{
  auto const k1 = b.arity();
  if ( i >= k1 )
  {
    throw usage_error( "argument index beyond the operator arity" );
  }
  /* enumerate assignments of the other k arguments, packed without bit i */
  for ( std::uint64_t rest = 0; rest < ( std::uint64_t{ 1 } << ( k1 - 1 ) ); ++rest )
  {
    auto const low = rest & ( ( std::uint64_t{ 1 } << i ) - 1 );
    auto const high = ( rest >> i ) << ( i + 1 );
    auto const args = low | high;
    bool const at_false = b.apply( args );
    bool const at_true = b.apply( args | ( std::uint64_t{ 1 } << i ) );
    if ( at_false == at_true )
    {
      continue;
    }
    restriction r;
    r.index = i;
    r.theta = at_true ? 1 : -1;
    r.others.assign( k1, 0 );
    for ( unsigned j = 0; j < k1; ++j )
    {
      if ( j != i )
      {
        r.others[j] = ( ( args >> j ) & 1u ) ? 1 : -1;
      }
    }
    return r;
  }
  throw domain_error( "operator does not depend on argument " + std::to_string( i ) + " (reducible)" );
}

threshold::poly_weights fit_affine( unsigned k, unsigned j, std::vector<int> const& theta )
{
  if ( j > k || theta.size() != k + 1 )
  {
    throw usage_error( "fit_affine needs j <= k and k + 1 signs" );
  }
  threshold::poly_weights q( k, 1 );
  if ( j == 0 )
  {
    /* q(0) = 0, q(e_i) = theta_i */
    for ( unsigned i = 1; i <= k; ++i )
    {
      q.set( threshold::monomial{ 1 } << ( i - 1 ), theta[i] );
    }
    return q;
  }
  /* q(z) = theta_0 - theta_0 z_j + sum_{i not in {0, j}} (theta_i - theta_0) z_i */
  q.set( 0, theta[0] );
  q.set( threshold::monomial{ 1 } << ( j - 1 ), -theta[0] );
  for ( unsigned i = 1; i <= k; ++i )
  {
    if ( i != j )
    {
      q.set( threshold::monomial{ 1 } << ( i - 1 ), theta[i] - theta[0] );
    }
  }
  return q;
}

threshold::poly_weights extend_function( threshold::poly_weights const& p, unsigned k, unsigned j, int theta, std::vector<int> const& signs )
{
  if ( p.min_abs_on_cube() == 0 )
  {
    throw domain_error( "function to extend lacks a sign certificate (p vanishes on the cube)" );
  }
  rational const m = p.max_abs_on_cube() + 1;
  auto const n = k + p.arity();
  auto const q = fit_affine( k, j, signs );
  auto const lifted_q = threshold::poly_weights( q.shifted( 0, n ) ).scaled( m );
  threshold::poly_weights lifted_p = p.shifted( k, n ).scaled( rational( theta ) );
  return lifted_q + lifted_p;
}

boolfn::truth_table embedding_tuple::composed() const
{
  auto const n = F.front().arity();
  return boolfn::tabulate( n, [&]( boolfn::assignment x ) {
    std::uint64_t args = 0;
    for ( unsigned j = 0; j < F.size(); ++j )
    {
      if ( threshold::evaluate( F[j], threshold::threshold_kind::sign, x ) > 0 )
      {
        args |= std::uint64_t{ 1 } << j;
      }
    }
    return op.apply( args );
  } );
}

embedding_tuple composition_embedding( boolfn::boolean_op const& b, std::vector<threshold::poly_weights> const& fs )
{
  if ( !boolfn::is_irreducible( b ) )
  {
    throw domain_error( "composition embedding needs an irreducible operator" );
  }
  if ( fs.size() != b.arity() )
  {
    throw usage_error( "need one function per operator argument" );
  }
  embedding_tuple et;
  et.op = b;
  et.k = b.arity() - 1;
  et.fs = fs;
  auto const m = fs.front().arity();
  for ( auto const& f : fs )
  {
    if ( f.arity() != m )
    {
      throw usage_error( "embedded functions must share arity" );
    }
  }
  if ( et.k + m > 26 )
  {
    throw arity_error( "embedding exceeds 26 inputs" );
  }
  for ( unsigned i = 0; i <= et.k; ++i )
  {
    et.restrictions.push_back( restriction_signs( b, i ) );
  }
  for ( unsigned j = 0; j <= et.k; ++j )
  {
    /* F_j must equal theta_{ij} when e_i is selected, i != j */
    std::vector<int> signs( et.k + 1, 0 );
    for ( unsigned i = 0; i <= et.k; ++i )
    {
      if ( i != j )
      {
        signs[i] = et.restrictions[i].others[j];
      }
    }
    et.q.push_back( fit_affine( et.k, j, signs ) );
    et.margins.push_back( fs[j].max_abs_on_cube() + 1 );
    et.F.push_back( extend_function( fs[j], et.k, j, et.restrictions[j].theta, signs ) );
  }

  auto const composed = et.composed();
  for ( unsigned i = 0; i <= et.k; ++i )
  {
    for ( boolfn::assignment x = 0; x < ( boolfn::assignment{ 1 } << m ); ++x )
    {
      auto const want = threshold::evaluate( fs[i], threshold::threshold_kind::sign, x ) > 0;
      if ( composed.get( unit_code( i ) | ( x << et.k ) ) != want )
      {
        throw internal_error( "embedding identity failed for operator " + b.name() );
      }
    }
  }
  return et;
}

} // namespace quarkcap::constructs
