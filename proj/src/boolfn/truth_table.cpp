// SPDX-License-Identifier: Apache-2.0
#include <quarkcap/boolfn/truth_table.hpp>
#include <quarkcap/common/error.hpp>

#include <bit>
#include <charconv>

namespace quarkcap::boolfn
{

std::string_view to_string( encoding e )
{
  return e == encoding::zero_one ? "01" : "pm";
}

encoding parse_encoding( std::string_view text )
{
  if ( text == "01" )
  {
    return encoding::zero_one;
  }
  if ( text == "pm" )
  {
    return encoding::plus_minus;
  }
  throw usage_error( "unknown encoding '" + std::string( text ) + "' (expected 01 or pm)" );
}

truth_table::truth_table( unsigned n, encoding enc )
    : n_( n ), enc_( enc )
{
  if ( n > max_arity )
  {
    throw arity_error( "truth table arity " + std::to_string( n ) + " exceeds the limit of " + std::to_string( max_arity ) );
  }
  words_.assign( n <= 6 ? 1u : ( std::size_t{ 1 } << ( n - 6 ) ), 0u );
}

truth_table truth_table::from_word( unsigned n, std::uint64_t bits, encoding enc )
{
  if ( n > 6 )
  {
    throw arity_error( "packed word tables hold at most 6 variables" );
  }
  truth_table t( n, enc );
  t.words_[0] = bits & word_mask( n );
  return t;
}

truth_table truth_table::from_bits( std::initializer_list<int> bits, encoding enc )
{
  auto const size = bits.size();
  if ( size == 0 || !std::has_single_bit( size ) )
  {
    throw arity_error( "bit count must be a power of two" );
  }
  truth_table t( static_cast<unsigned>( std::countr_zero( size ) ), enc );
  assignment x = 0;
  for ( int b : bits )
  {
    t.set( x++, b != 0 );
  }
  return t;
}

truth_table truth_table::from_values( std::span<int const> values, encoding enc )
{
  auto const size = values.size();
  if ( size == 0 || !std::has_single_bit( size ) )
  {
    throw arity_error( "value count must be a power of two" );
  }
  truth_table t( static_cast<unsigned>( std::countr_zero( size ) ), enc );
  for ( assignment x = 0; x < size; ++x )
  {
    int const v = values[x];
    bool const ok = enc == encoding::zero_one ? ( v == 0 || v == 1 ) : ( v == -1 || v == 1 );
    if ( !ok )
    {
      throw domain_error( "value " + std::to_string( v ) + " is not valid in encoding " + std::string( boolfn::to_string( enc ) ) );
    }
    t.set( x, v == 1 );
  }
  return t;
}

void truth_table::set( assignment x, bool value )
{
  auto& w = words_[x >> 6];
  auto const bit = std::uint64_t{ 1 } << ( x & 63u );
  w = value ? ( w | bit ) : ( w & ~bit );
}

int truth_table::value( assignment x ) const
{
  bool const b = get( x );
  return enc_ == encoding::zero_one ? ( b ? 1 : 0 ) : ( b ? 1 : -1 );
}

std::uint64_t truth_table::word() const
{
  if ( n_ > 6 )
  {
    throw arity_error( "word() requires n <= 6" );
  }
  return words_[0];
}

truth_table truth_table::reencoded( encoding enc ) const
{
  truth_table t = *this;
  t.enc_ = enc;
  return t;
}

truth_table truth_table::operator~() const
{
  truth_table t = *this;
  for ( auto& w : t.words_ )
  {
    w = ~w;
  }
  t.mask_tail();
  return t;
}

void truth_table::mask_tail()
{
  if ( n_ < 6 )
  {
    words_[0] &= word_mask( n_ );
  }
}

std::uint64_t truth_table::count_ones() const
{
  std::uint64_t c = 0;
  for ( auto w : words_ )
  {
    c += static_cast<std::uint64_t>( std::popcount( w ) );
  }
  return c;
}

std::string truth_table::to_string() const
{
  static constexpr char hex[] = "0123456789abcdef";
  std::string out = "n:" + std::to_string( n_ ) + ";enc:" + std::string( boolfn::to_string( enc_ ) ) + ";bits:";
  auto const nibbles = n_ < 2 ? std::uint64_t{ 1 } : size() / 4;
  out.reserve( out.size() + nibbles );
  for ( std::uint64_t k = 0; k < nibbles; ++k )
  {
    auto const bit0 = 4 * k;
    auto const nib = ( words_[bit0 >> 6] >> ( bit0 & 63u ) ) & 0xfu;
    out.push_back( hex[nib] );
  }
  return out;
}

std::string truth_table::to_values_string() const
{
  std::string out = "(";
  for ( assignment x = 0; x < size(); ++x )
  {
    if ( x )
    {
      out.push_back( ',' );
    }
    out += std::to_string( value( x ) );
  }
  out.push_back( ')' );
  return out;
}

truth_table truth_table::parse( std::string_view text )
{
  auto bad = [&]() -> truth_table { throw usage_error( "malformed truth table '" + std::string( text ) + "'" ); };
  if ( !text.starts_with( "n:" ) )
  {
    return bad();
  }
  auto const semi1 = text.find( ';' );
  if ( semi1 == std::string_view::npos )
  {
    return bad();
  }
  unsigned n = 0;
  auto const arity_text = text.substr( 2, semi1 - 2 );
  auto [ptr, ec] = std::from_chars( arity_text.data(), arity_text.data() + arity_text.size(), n );
  if ( ec != std::errc{} || ptr != arity_text.data() + arity_text.size() )
  {
    return bad();
  }
  auto rest = text.substr( semi1 + 1 );
  if ( !rest.starts_with( "enc:" ) )
  {
    return bad();
  }
  auto const semi2 = rest.find( ';' );
  if ( semi2 == std::string_view::npos )
  {
    return bad();
  }
  auto const enc = parse_encoding( rest.substr( 4, semi2 - 4 ) );
  rest = rest.substr( semi2 + 1 );
  if ( !rest.starts_with( "bits:" ) )
  {
    return bad();
  }
  auto const hex = rest.substr( 5 );
  truth_table t( n, enc );
  auto const nibbles = n < 2 ? std::uint64_t{ 1 } : t.size() / 4;
  if ( hex.size() != nibbles )
  {
    return bad();
  }
  for ( std::uint64_t k = 0; k < nibbles; ++k )
  {
    char const c = hex[k];
    unsigned nib;
    if ( c >= '0' && c <= '9' )
    {
      nib = static_cast<unsigned>( c - '0' );
    }
    else if ( c >= 'a' && c <= 'f' )
    {
      nib = static_cast<unsigned>( c - 'a' + 10 );
    }
    else if ( c >= 'A' && c <= 'F' )
    {
      nib = static_cast<unsigned>( c - 'A' + 10 );
    }
    else
    {
      return bad();
    }
    for ( unsigned b = 0; b < 4; ++b )
    {
      auto const x = 4 * k + b;
      if ( x < t.size() )
      {
        t.set( x, ( nib >> b ) & 1u );
      }
      else if ( ( nib >> b ) & 1u )
      {
        return bad();
      }
    }
  }
  return t;
}

std::strong_ordering operator<=>( truth_table const& a, truth_table const& b )
{
  if ( auto c = a.n_ <=> b.n_; c != 0 )
  {
    return c;
  }
  if ( auto c = a.enc_ <=> b.enc_; c != 0 )
  {
    return c;
  }
  /* compare from the highest word so that n <= 6 tables order like their packed integers */
  for ( auto i = a.words_.size(); i-- > 0; )
  {
    if ( auto c = a.words_[i] <=> b.words_[i]; c != 0 )
    {
      return c;
    }
  }
  return std::strong_ordering::equal;
}

std::size_t truth_table::hash() const
{
  std::uint64_t h = 0x84222325cbf29ce4ull ^ ( std::uint64_t{ n_ } << 1 ) ^ static_cast<std::uint64_t>( enc_ );
  for ( auto w : words_ )
  {
    h ^= w + 0x9e3779b97f4a7c15ull + ( h << 6 ) + ( h >> 2 );
  }
  return static_cast<std::size_t>( h );
}

} // namespace quarkcap::boolfn
