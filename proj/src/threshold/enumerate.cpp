// SPDX-License-Identifier: Apache-2.0
#include <quarkcap/common/error.hpp>
#include <quarkcap/common/parallel.hpp>
#include <quarkcap/common/random.hpp>
#include <quarkcap/threshold/lp.hpp>
#include <quarkcap/threshold/threshold.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace quarkcap::threshold
{

enumeration_strategy parse_strategy( std::string_view text )
{
  if ( text == "auto" )
  {
    return enumeration_strategy::automatic;
  }
  if ( text == "sweep" )
  {
    return enumeration_strategy::sweep;
  }
  if ( text == "weights" )
  {
    return enumeration_strategy::weights;
  }
  throw usage_error( "unknown strategy '" + std::string( text ) + "' (expected sweep or weights)" );
}

namespace
{

using words = std::vector<std::uint64_t>;

void append( words& acc, words&& part )
{
  acc.insert( acc.end(), part.begin(), part.end() );
}

/* every dichotomy with its top bit clear goes through the oracle; the complement shares the verdict */
boolfn::function_class sweep( unsigned n, unsigned d, unsigned jobs )
{
  if ( n > 4 )
  {
    throw arity_error( "the dichotomy sweep is limited to n <= 4" );
  }
  separability_lp const lp( n, d );
  auto const points = std::uint64_t{ 1 } << n;
  auto const half = std::uint64_t{ 1 } << ( points - 1 );
  auto const mask = boolfn::word_mask( n );

  auto found = chunked_reduce<words>(
      half, resolve_jobs( jobs ),
      [&]( std::size_t begin, std::size_t end ) {
        words local;
        for ( auto w = begin; w < end; ++w )
        {
          if ( lp.separable( boolfn::truth_table::from_word( n, w ) ) )
          {
            local.push_back( w );
            local.push_back( ~w & mask );
          }
        }
        return local;
      },
      append );
  return boolfn::function_class::from_words( n, found );
}

/* table of x -> f(pi(x) ^ flip) for all input permutations and negations */
std::vector<std::vector<std::uint8_t>> symmetry_maps( unsigned n )
{
  std::vector<unsigned> perm( n );
  std::iota( perm.begin(), perm.end(), 0u );
  std::vector<std::vector<std::uint8_t>> maps;
  auto const points = 1u << n;
  do
  {
    for ( unsigned flip = 0; flip < points; ++flip )
    {
      std::vector<std::uint8_t> map( points );
      for ( unsigned x = 0; x < points; ++x )
      {
        unsigned y = 0;
        for ( unsigned i = 0; i < n; ++i )
        {
          y |= ( ( x >> i ) & 1u ) << perm[i];
        }
        map[x] = static_cast<std::uint8_t>( y ^ flip );
      }
      maps.push_back( std::move( map ) );
    }
  } while ( std::next_permutation( perm.begin(), perm.end() ) );
  return maps;
}

/* nondecreasing nonnegative weights w_1 <= ... <= w_n in [0, W] and every threshold,
 * i.e. the canonical representatives of all sign patterns and biases, closed
 * afterwards under input permutation and negation */
boolfn::function_class integer_weights( unsigned n, unsigned bound )
{
  if ( n == 0 || n > 5 )
  {
    throw arity_error( "the weights strategy supports 1 <= n <= 5" );
  }
  auto const points = 1u << n;
  std::set<std::uint64_t> reps;
  std::vector<unsigned> w( n, 0 );
  for ( ;; )
  {
    unsigned const total = std::accumulate( w.begin(), w.end(), 0u );
    std::vector<unsigned> sums( points );
    for ( unsigned x = 0; x < points; ++x )
    {
      for ( unsigned i = 0; i < n; ++i )
      {
        sums[x] += ( ( x >> i ) & 1u ) * w[i];
      }
    }
    for ( unsigned theta = 0; theta <= total + 1; ++theta )
    {
      std::uint64_t word = 0;
      for ( unsigned x = 0; x < points; ++x )
      {
        word |= std::uint64_t{ sums[x] >= theta } << x;
      }
      reps.insert( word );
    }
    /* next nondecreasing vector */
    int i = static_cast<int>( n ) - 1;
    while ( i >= 0 && w[i] == bound )
    {
      --i;
    }
    if ( i < 0 )
    {
      break;
    }
    ++w[i];
    for ( auto j = static_cast<unsigned>( i ) + 1; j < n; ++j )
    {
      w[j] = w[i];
    }
  }

  auto const maps = symmetry_maps( n );
  std::vector<std::uint64_t> all;
  all.reserve( reps.size() * maps.size() );
  for ( auto const rep : reps )
  {
    for ( auto const& map : maps )
    {
      std::uint64_t word = 0;
      for ( unsigned x = 0; x < points; ++x )
      {
        word |= ( ( rep >> map[x] ) & 1u ) << x;
      }
      all.push_back( word );
    }
  }
  std::sort( all.begin(), all.end() );
  all.erase( std::unique( all.begin(), all.end() ), all.end() );
  return boolfn::function_class::from_words( n, all );
}

void cross_check( boolfn::function_class const& c, unsigned samples, std::uint64_t seed )
{
  auto const n = c.arity();
  separability_lp const lp( n, 1 );
  counter_rng rng( seed, "enumerate.cross_check" );
  auto const mask = boolfn::word_mask( n );
  for ( unsigned s = 0; s < samples; )
  {
    auto const t = boolfn::truth_table::from_word( n, rng.next_u64() & mask );
    if ( c.contains( t ) )
    {
      continue;
    }
    if ( lp.separable( t ) )
    {
      throw internal_error( "weights strategy missed the separable function " + t.to_string() );
    }
    ++s;
  }
}

} // namespace

boolfn::function_class enumerate_class( unsigned n, unsigned d, enumeration_options const& options )
{
  if ( d == 0 )
  {
    throw arity_error( "degree must be at least 1" );
  }
  auto strategy = options.strategy;
  if ( strategy == enumeration_strategy::automatic )
  {
    strategy = n <= 4 ? enumeration_strategy::sweep : enumeration_strategy::weights;
  }
  if ( strategy == enumeration_strategy::sweep )
  {
    return sweep( n, d, options.jobs );
  }
  if ( d != 1 )
  {
    throw arity_error( "the weights strategy only generates linear threshold functions (d = 1)" );
  }
  auto c = integer_weights( n, options.weight_bound );
  if ( options.cross_check > 0 )
  {
    cross_check( c, options.cross_check, options.seed );
  }
  return c;
}

boolfn::function_class const& threshold_class( unsigned n, unsigned d )
{
  static std::mutex guard;
  static std::map<std::pair<unsigned, unsigned>, boolfn::function_class> cache;
  std::lock_guard lock( guard );
  auto it = cache.find( { n, d } );
  if ( it == cache.end() )
  {
    it = cache.emplace( std::pair{ n, d }, enumerate_class( n, d ) ).first;
  }
  return it->second;
}

boolfn::function_class enumerate_binary_weight_ltfs( unsigned n )
{
  if ( n % 2 == 0 )
  {
    throw arity_error( "binary weights without bias need odd n (tie-prone configuration)" );
  }
  if ( n > boolfn::max_arity )
  {
    throw arity_error( "arity exceeds the table limit" );
  }
  if ( n > 20 )
  {
    throw arity_error( "binary-weight enumeration is limited to n <= 20" );
  }
  boolfn::function_class c( n, boolfn::encoding::plus_minus );
  for ( std::uint64_t eps = 0; eps < ( std::uint64_t{ 1 } << n ); ++eps )
  {
    c.insert( boolfn::tabulate( n, [&]( boolfn::assignment x ) {
      int sum = 0;
      for ( unsigned i = 0; i < n; ++i )
      {
        int const e = ( ( eps >> i ) & 1u ) ? 1 : -1;
        int const xi = boolfn::input_bit( x, i ) ? 1 : -1;
        sum += e * xi;
      }
      return sum > 0;
    } ) );
  }
  return c;
}

} // namespace quarkcap::threshold
