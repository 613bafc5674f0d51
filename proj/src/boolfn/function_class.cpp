// SPDX-License-Identifier: Apache-2.0
#include <quarkcap/boolfn/function_class.hpp>
#include <quarkcap/common/error.hpp>

#include <algorithm>
#include <cmath>

namespace quarkcap::boolfn
{

function_class::function_class( unsigned n, encoding enc )
    : n_( n ), enc_( enc )
{
  if ( n > max_arity )
  {
    throw arity_error( "class arity exceeds the table limit" );
  }
}

function_class function_class::from_words( unsigned n, std::span<std::uint64_t const> words, encoding enc )
{
  function_class c( n, enc );
  for ( auto w : words )
  {
    c.members_.insert( c.members_.end(), truth_table::from_word( n, w, enc ) );
  }
  return c;
}

void function_class::check( truth_table const& t ) const
{
  if ( t.arity() != n_ )
  {
    throw arity_error( "member arity " + std::to_string( t.arity() ) + " differs from class arity " + std::to_string( n_ ) );
  }
  if ( t.enc() != enc_ )
  {
    throw domain_error( "member encoding differs from class encoding" );
  }
}

bool function_class::insert( truth_table const& t )
{
  check( t );
  return members_.insert( t ).second;
}

bool function_class::contains( truth_table const& t ) const
{
  return t.arity() == n_ && t.enc() == enc_ && members_.count( t ) != 0;
}

void function_class::merge( function_class&& other )
{
  if ( other.n_ != n_ || other.enc_ != enc_ )
  {
    throw arity_error( "cannot merge classes of different arity or encoding" );
  }
  members_.merge( other.members_ );
}

bool function_class::is_subset_of( function_class const& other ) const
{
  return n_ == other.n_ && enc_ == other.enc_ && std::includes( other.members_.begin(), other.members_.end(), members_.begin(), members_.end() );
}

std::vector<std::uint64_t> function_class::words() const
{
  std::vector<std::uint64_t> out;
  out.reserve( members_.size() );
  for ( auto const& t : members_ )
  {
    out.push_back( t.word() );
  }
  return out;
}

double capacity( function_class const& c )
{
  if ( c.empty() )
  {
    throw domain_error( "capacity of an empty class is undefined" );
  }
  return std::log2( static_cast<double>( c.size() ) );
}

} // namespace quarkcap::boolfn
