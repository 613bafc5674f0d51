// SPDX-License-Identifier: Apache-2.0
#include <quarkcap/common/error.hpp>
#include <quarkcap/common/rational.hpp>

#include <cctype>
#include <cmath>

namespace quarkcap
{

namespace
{

/* number of decimal digits needed, or -1 if the denominator has a prime other than 2 and 5 */
int decimal_places( mpz_class den )
{
  int twos = 0, fives = 0;
  while ( mpz_divisible_ui_p( den.get_mpz_t(), 2u ) )
  {
    den /= 2;
    ++twos;
  }
  while ( mpz_divisible_ui_p( den.get_mpz_t(), 5u ) )
  {
    den /= 5;
    ++fives;
  }
  if ( den != 1 )
  {
    return -1;
  }
  return std::max( twos, fives );
}

} // namespace

std::string to_string( rational const& q )
{
  auto const places = decimal_places( q.get_den() );
  if ( places < 0 )
  {
    return q.get_str();
  }
  if ( places == 0 )
  {
    return q.get_num().get_str();
  }
  mpz_class scale;
  mpz_ui_pow_ui( scale.get_mpz_t(), 10u, static_cast<unsigned long>( places ) );
  mpz_class const scaled = q.get_num() * ( scale / q.get_den() );
  mpz_class const magnitude = abs( scaled );
  auto digits = magnitude.get_str();
  if ( digits.size() <= static_cast<std::size_t>( places ) )
  {
    digits.insert( 0, static_cast<std::size_t>( places ) + 1 - digits.size(), '0' );
  }
  digits.insert( digits.size() - static_cast<std::size_t>( places ), 1, '.' );
  return ( sgn( scaled ) < 0 ? "-" : "" ) + digits;
}

rational parse_rational( std::string_view text )
{
  auto fail = [&]() -> rational { throw usage_error( "malformed rational: '" + std::string( text ) + "'" ); };
  if ( text.empty() )
  {
    return fail();
  }
  if ( auto slash = text.find( '/' ); slash != std::string_view::npos )
  {
    rational q;
    if ( q.set_str( std::string( text ), 10 ) != 0 || q.get_den() == 0 )
    {
      return fail();
    }
    q.canonicalize();
    return q;
  }

  std::size_t pos = 0;
  bool negative = false;
  if ( text[pos] == '+' || text[pos] == '-' )
  {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string digits;
  long exponent = 0;
  bool seen_digit = false, seen_point = false;
  for ( ; pos < text.size(); ++pos )
  {
    char const c = text[pos];
    if ( std::isdigit( static_cast<unsigned char>( c ) ) )
    {
      digits.push_back( c );
      seen_digit = true;
      if ( seen_point )
      {
        --exponent;
      }
    }
    else if ( c == '.' && !seen_point )
    {
      seen_point = true;
    }
    else
    {
      break;
    }
  }
  if ( !seen_digit )
  {
    return fail();
  }
  if ( pos < text.size() )
  {
    if ( text[pos] != 'e' && text[pos] != 'E' )
    {
      return fail();
    }
    auto const exp_text = std::string( text.substr( pos + 1 ) );
    if ( exp_text.empty() )
    {
      return fail();
    }
    std::size_t used = 0;
    long e = 0;
    try
    {
      e = std::stol( exp_text, &used );
    }
    catch ( std::exception const& )
    {
      return fail();
    }
    if ( used != exp_text.size() || e > 4096 || e < -4096 )
    {
      return fail();
    }
    exponent += e;
  }

  mpz_class mantissa( digits, 10 );
  mpz_class scale;
  mpz_ui_pow_ui( scale.get_mpz_t(), 10u, static_cast<unsigned long>( exponent < 0 ? -exponent : exponent ) );
  rational q = exponent < 0 ? rational( mantissa, scale ) : rational( mantissa * scale );
  q.canonicalize();
  return negative ? rational( -q ) : q;
}

rational from_double( double value )
{
  if ( !std::isfinite( value ) )
  {
    throw domain_error( "cannot represent a non-finite value as a rational" );
  }
  return rational( value );
}

rational abs( rational const& q )
{
  return sgn( q ) < 0 ? rational( -q ) : q;
}

} // namespace quarkcap
