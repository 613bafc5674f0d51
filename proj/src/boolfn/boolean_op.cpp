// SPDX-License-Identifier: Apache-2.0
#include <quarkcap/boolfn/boolean_op.hpp>
#include <quarkcap/common/error.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>

namespace quarkcap::boolfn
{

namespace
{

struct named_op
{
  std::string_view name;
  unsigned k;
  std::uint64_t table;
};

/* first match wins when naming, so canonical names come first */
constexpr std::array<named_op, 20> named_ops{ {
    { "F", 2, 0b0000 },
    { "AND", 2, 0b1000 },
    { "P_AND_NOT_Q", 2, 0b0010 },
    { "P", 2, 0b1010 },
    { "NOT_P_AND_Q", 2, 0b0100 },
    { "Q", 2, 0b1100 },
    { "XOR", 2, 0b0110 },
    { "OR", 2, 0b1110 },
    { "NOR", 2, 0b0001 },
    { "NXOR", 2, 0b1001 },
    { "NOT_Q", 2, 0b0011 },
    { "P_OR_NOT_Q", 2, 0b1011 },
    { "NOT_P", 2, 0b0101 },
    { "NOT_P_OR_Q", 2, 0b1101 },
    { "NAND", 2, 0b0111 },
    { "T", 2, 0b1111 },
    { "XNOR", 2, 0b1001 },
    { "NOT", 1, 0b01 },
    { "ID", 1, 0b10 },
    { "FALSE", 2, 0b0000 },
} };

std::string upper( std::string_view s )
{
  std::string out( s );
  std::transform( out.begin(), out.end(), out.begin(), []( unsigned char c ) { return static_cast<char>( std::toupper( c ) ); } );
  return out;
}

std::uint64_t table_mask( unsigned k )
{
  return k >= 6 ? ~std::uint64_t{ 0 } : ( ( std::uint64_t{ 1 } << ( 1u << k ) ) - 1u );
}

} // namespace

boolean_op::boolean_op( unsigned k, std::uint64_t table )
    : k_( k ), table_( table )
{
  if ( k > max_arity )
  {
    throw arity_error( "boolean operator arity " + std::to_string( k ) + " exceeds " + std::to_string( max_arity ) );
  }
  if ( ( table & ~table_mask( k ) ) != 0 )
  {
    throw arity_error( "boolean operator table has bits beyond 2^k entries" );
  }
}

boolean_op boolean_op::parse( std::string_view text, encoding enc )
{
  auto const name = upper( text );
  if ( name == "PRODUCT" || name == "MUL" )
  {
    return enc == encoding::plus_minus ? boolean_op( 2, 0b1001 ) : boolean_op( 2, 0b1000 );
  }
  if ( name == "TRUE" )
  {
    return boolean_op( 2, 0b1111 );
  }
  for ( auto const& op : named_ops )
  {
    if ( op.name == name )
    {
      return boolean_op( op.k, op.table );
    }
  }
  auto digits = std::string_view( name );
  if ( digits.starts_with( "0X" ) )
  {
    digits.remove_prefix( 2 );
  }
  if ( !digits.empty() && digits.size() <= 1 && std::isxdigit( static_cast<unsigned char>( digits[0] ) ) )
  {
    return boolean_op( 2, std::stoull( std::string( digits ), nullptr, 16 ) );
  }
  throw usage_error( "unknown boolean operator '" + std::string( text ) + "'" );
}

std::vector<boolean_op> boolean_op::all_binary()
{
  std::vector<boolean_op> ops;
  for ( std::uint64_t t = 0; t < 16; ++t )
  {
    ops.emplace_back( 2, t );
  }
  return ops;
}

bool boolean_op::depends_on( unsigned i ) const
{
  if ( i >= k_ )
  {
    throw arity_error( "argument index out of range" );
  }
  for ( std::uint64_t e = 0; e < ( std::uint64_t{ 1 } << k_ ); ++e )
  {
    if ( apply( e ) != apply( e ^ ( std::uint64_t{ 1 } << i ) ) )
    {
      return true;
    }
  }
  return false;
}

bool boolean_op::is_symmetric() const
{
  for ( unsigned i = 0; i + 1 < k_; ++i )
  {
    for ( std::uint64_t e = 0; e < ( std::uint64_t{ 1 } << k_ ); ++e )
    {
      bool const a = ( e >> i ) & 1u, b = ( e >> ( i + 1 ) ) & 1u;
      auto const swapped = a == b ? e : ( e ^ ( std::uint64_t{ 3 } << i ) );
      if ( apply( e ) != apply( swapped ) )
      {
        return false;
      }
    }
  }
  return true;
}

boolean_op boolean_op::negated() const
{
  return boolean_op( k_, ~table_ & table_mask( k_ ) );
}

std::string boolean_op::name() const
{
  for ( auto const& op : named_ops )
  {
    if ( op.k == k_ && op.table == table_ )
    {
      return std::string( op.name );
    }
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out = "k" + std::to_string( k_ ) + ":0x";
  auto const digits = std::max<unsigned>( 1u, ( 1u << k_ ) / 4 );
  for ( auto d = digits; d-- > 0; )
  {
    out.push_back( hex[( table_ >> ( 4 * d ) ) & 0xfu] );
  }
  return out;
}

bool is_irreducible( boolean_op const& op )
{
  for ( unsigned i = 0; i < op.arity(); ++i )
  {
    if ( !op.depends_on( i ) )
    {
      return false;
    }
  }
  return true;
}

std::uint64_t combine_words( boolean_op const& op, std::span<std::uint64_t const> args, unsigned n )
{
  if ( args.size() != op.arity() )
  {
    throw arity_error( "operator arity " + std::to_string( op.arity() ) + " does not match " + std::to_string( args.size() ) + " arguments" );
  }
  auto const mask = word_mask( n );
  std::uint64_t out = 0;
  for ( std::uint64_t e = 0; e < ( std::uint64_t{ 1 } << op.arity() ); ++e )
  {
    if ( !op.apply( e ) )
    {
      continue;
    }
    std::uint64_t term = mask;
    for ( unsigned i = 0; i < op.arity(); ++i )
    {
      term &= ( ( e >> i ) & 1u ) ? args[i] : ~args[i];
    }
    out |= term;
  }
  return out & mask;
}

truth_table combine( boolean_op const& op, std::span<truth_table const> args )
{
  if ( args.size() != op.arity() )
  {
    throw arity_error( "operator arity " + std::to_string( op.arity() ) + " does not match " + std::to_string( args.size() ) + " arguments" );
  }
  if ( args.empty() )
  {
    throw arity_error( "combine needs at least one argument" );
  }
  auto const n = args.front().arity();
  auto const enc = args.front().enc();
  for ( auto const& a : args )
  {
    if ( a.arity() != n )
    {
      throw arity_error( "combine arguments have different arities" );
    }
    if ( a.enc() != enc )
    {
      throw domain_error( "combine arguments mix 0/1 and -/+ encodings" );
    }
  }

  truth_table out( n, encoding::plus_minus );
  std::vector<std::uint64_t> column( args.size() );
  auto const words = args.front().words().size();
  for ( std::size_t w = 0; w < words; ++w )
  {
    for ( std::size_t i = 0; i < args.size(); ++i )
    {
      column[i] = args[i].words()[w];
    }
    auto const packed = combine_words( op, column, n >= 6 ? 6 : n );
    for ( unsigned b = 0; b < 64 && w * 64 + b < out.size(); ++b )
    {
      if ( ( packed >> b ) & 1u )
      {
        out.set( w * 64 + b, true );
      }
    }
  }
  return out;
}

} // namespace quarkcap::boolfn
