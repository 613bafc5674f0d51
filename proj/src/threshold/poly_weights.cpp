// SPDX-License-Identifier: Apache-2.0
#include <quarkcap/common/error.hpp>
#include <quarkcap/threshold/poly_weights.hpp>

#include <algorithm>
#include <bit>
#include <sstream>

namespace quarkcap::threshold
{

bool monomial_less( monomial a, monomial b )
{
  /* compare the sorted index lists element by element; a proper prefix sorts first */
  while ( a != 0 && b != 0 )
  {
    auto const ia = std::countr_zero( a ), ib = std::countr_zero( b );
    if ( ia != ib )
    {
      return ia < ib;
    }
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

std::string monomial_label( monomial m )
{
  std::string out;
  while ( m != 0 )
  {
    if ( !out.empty() )
    {
      out.push_back( ',' );
    }
    out += std::to_string( std::countr_zero( m ) + 1 );
    m &= m - 1;
  }
  return out;
}

monomial parse_monomial( std::string const& label )
{
  monomial m = 0;
  if ( label.empty() )
  {
    return m;
  }
  std::stringstream ss( label );
  std::string item;
  while ( std::getline( ss, item, ',' ) )
  {
    unsigned long idx = 0;
    try
    {
      idx = std::stoul( item );
    }
    catch ( std::exception const& )
    {
      throw usage_error( "malformed monomial label '" + label + "'" );
    }
    if ( idx == 0 || idx > 32 )
    {
      throw usage_error( "monomial index out of range in '" + label + "'" );
    }
    m |= monomial{ 1 } << ( idx - 1 );
  }
  return m;
}

std::vector<monomial> monomials( unsigned n, unsigned d )
{
  if ( n > 26 )
  {
    throw arity_error( "monomial enumeration supports at most 26 variables" );
  }
  std::vector<monomial> out;
  for ( monomial m = 0; m < ( monomial{ 1 } << n ); ++m )
  {
    if ( static_cast<unsigned>( std::popcount( m ) ) <= d )
    {
      out.push_back( m );
    }
  }
  std::sort( out.begin(), out.end(), monomial_less );
  return out;
}

poly_weights::poly_weights( unsigned n, unsigned d )
    : n_( n ), d_( d )
{
  if ( n > 26 )
  {
    throw arity_error( "polynomial arity exceeds 26" );
  }
}

poly_weights poly_weights::affine( rational const& bias, std::span<rational const> linear )
{
  poly_weights p( static_cast<unsigned>( linear.size() ), 1 );
  p.set( 0, bias );
  for ( std::size_t i = 0; i < linear.size(); ++i )
  {
    p.set( monomial{ 1 } << i, linear[i] );
  }
  return p;
}

unsigned poly_weights::degree() const
{
  unsigned deg = 0;
  for ( auto const& [m, c] : terms_ )
  {
    deg = std::max( deg, static_cast<unsigned>( std::popcount( m ) ) );
  }
  return deg;
}

rational poly_weights::coeff( monomial m ) const
{
  auto it = std::lower_bound( terms_.begin(), terms_.end(), m, []( auto const& t, monomial key ) { return monomial_less( t.first, key ); } );
  return ( it != terms_.end() && it->first == m ) ? it->second : rational( 0 );
}

void poly_weights::set( monomial m, rational const& value )
{
  if ( ( m >> n_ ) != 0 )
  {
    throw arity_error( "monomial uses a variable beyond the polynomial arity" );
  }
  if ( static_cast<unsigned>( std::popcount( m ) ) > d_ )
  {
    throw arity_error( "monomial exceeds the degree bound" );
  }
  auto it = std::lower_bound( terms_.begin(), terms_.end(), m, []( auto const& t, monomial key ) { return monomial_less( t.first, key ); } );
  bool const present = it != terms_.end() && it->first == m;
  if ( value == 0 )
  {
    if ( present )
    {
      terms_.erase( it );
    }
    return;
  }
  if ( present )
  {
    it->second = value;
  }
  else
  {
    terms_.insert( it, { m, value } );
  }
}

void poly_weights::add( monomial m, rational const& value )
{
  set( m, coeff( m ) + value );
}

rational poly_weights::value( boolfn::assignment x ) const
{
  rational sum = 0;
  for ( auto const& [m, c] : terms_ )
  {
    if ( ( m & x ) == m )
    {
      sum += c;
    }
  }
  return sum;
}

rational poly_weights::value_at( std::span<rational const> point ) const
{
  if ( point.size() != n_ )
  {
    throw arity_error( "point dimension does not match polynomial arity" );
  }
  rational sum = 0;
  for ( auto const& [m, c] : terms_ )
  {
    rational term = c;
    for ( auto rest = m; rest != 0; rest &= rest - 1 )
    {
      term *= point[static_cast<std::size_t>( std::countr_zero( rest ) )];
    }
    sum += term;
  }
  return sum;
}

rational poly_weights::max_abs_on_cube() const
{
  rational best = 0;
  for ( boolfn::assignment x = 0; x < ( boolfn::assignment{ 1 } << n_ ); ++x )
  {
    auto const v = quarkcap::abs( value( x ) );
    if ( v > best )
    {
      best = v;
    }
  }
  return best;
}

rational poly_weights::min_abs_on_cube() const
{
  rational best = quarkcap::abs( value( 0 ) );
  for ( boolfn::assignment x = 1; x < ( boolfn::assignment{ 1 } << n_ ); ++x )
  {
    auto const v = quarkcap::abs( value( x ) );
    if ( v < best )
    {
      best = v;
    }
  }
  return best;
}

poly_weights poly_weights::negated() const
{
  return scaled( rational( -1 ) );
}

poly_weights poly_weights::scaled( rational const& factor ) const
{
  poly_weights out( n_, d_ );
  if ( factor == 0 )
  {
    return out;
  }
  out.terms_ = terms_;
  for ( auto& [m, c] : out.terms_ )
  {
    c *= factor;
  }
  return out;
}

poly_weights poly_weights::shifted( unsigned offset, unsigned n ) const
{
  if ( offset + n_ > n )
  {
    throw arity_error( "shifted polynomial does not fit the target arity" );
  }
  poly_weights out( n, d_ );
  for ( auto const& [m, c] : terms_ )
  {
    out.set( m << offset, c );
  }
  return out;
}

poly_weights operator+( poly_weights const& a, poly_weights const& b )
{
  if ( a.n_ != b.n_ )
  {
    throw arity_error( "cannot add polynomials of different arity" );
  }
  poly_weights out( a.n_, std::max( a.d_, b.d_ ) );
  out.terms_ = a.terms_;
  for ( auto const& [m, c] : b.terms_ )
  {
    out.add( m, c );
  }
  return out;
}

} // namespace quarkcap::threshold
