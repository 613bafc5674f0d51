// SPDX-License-Identifier: Apache-2.0
#include <quarkcap/common/random.hpp>

namespace quarkcap
{

namespace
{
constexpr std::uint64_t golden = 0x9e3779b97f4a7c15ull;

std::uint64_t fnv1a( std::string_view s )
{
  std::uint64_t h = 0xcbf29ce484222325ull;
  for ( unsigned char c : s )
  {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}
} // namespace

std::uint64_t counter_rng::mix( std::uint64_t x )
{
  x = ( x ^ ( x >> 30 ) ) * 0xbf58476d1ce4e5b9ull;
  x = ( x ^ ( x >> 27 ) ) * 0x94d049bb133111ebull;
  return x ^ ( x >> 31 );
}

counter_rng::counter_rng( std::uint64_t seed, std::string_view stream )
    : key_( mix( seed ^ mix( fnv1a( stream ) ) ) )
{
}

std::uint64_t counter_rng::next_u64()
{
  ++counter_;
  return mix( key_ + counter_ * golden );
}

double counter_rng::uniform()
{
  return static_cast<double>( next_u64() >> 11 ) * 0x1.0p-53;
}

double counter_rng::uniform( double lo, double hi )
{
  return lo + ( hi - lo ) * uniform();
}

std::int64_t counter_rng::uniform_int( std::int64_t lo, std::int64_t hi )
{
  auto const span = static_cast<std::uint64_t>( hi - lo ) + 1u;
  if ( span == 0 )
  {
    return static_cast<std::int64_t>( next_u64() );
  }
  /* rejection keeps the draw unbiased */
  auto const limit = ~std::uint64_t{ 0 } - ( ~std::uint64_t{ 0 } % span );
  std::uint64_t r;
  do
  {
    r = next_u64();
  } while ( r >= limit );
  return lo + static_cast<std::int64_t>( r % span );
}

} // namespace quarkcap
