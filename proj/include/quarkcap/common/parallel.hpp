// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace quarkcap
{

/*! \brief Worker count: explicit value, else QUARKCAP_JOBS, else hardware concurrency. */
inline unsigned resolve_jobs( unsigned requested = 0 )
{
  if ( requested > 0 )
  {
    return requested;
  }
  if ( char const* env = std::getenv( "QUARKCAP_JOBS" ) )
  {
    try
    {
      auto const value = std::stoul( env );
      if ( value > 0 )
      {
        return static_cast<unsigned>( value );
      }
    }
    catch ( std::exception const& )
    {
    }
  }
  return std::max( 1u, std::thread::hardware_concurrency() );
}

/*! \brief Splits [0, total) into contiguous chunks, runs `work(begin, end)` on each
 *  and folds the partial results left to right with `merge`.
 *
 * The fold order is the chunk order, so the result does not depend on the
 * number of workers as long as `merge` is associative.
 */
template<typename Result, typename Work, typename Merge>
Result chunked_reduce( std::size_t total, unsigned jobs, Work&& work, Merge&& merge )
{
  jobs = std::max( 1u, std::min<unsigned>( jobs, static_cast<unsigned>( std::max<std::size_t>( total, 1 ) ) ) );
  if ( jobs == 1 )
  {
    return work( std::size_t{ 0 }, total );
  }
  std::vector<Result> partial( jobs );
  std::vector<std::exception_ptr> errors( jobs );
  {
    std::vector<std::jthread> workers;
    workers.reserve( jobs );
    for ( unsigned w = 0; w < jobs; ++w )
    {
      auto const begin = total * w / jobs;
      auto const end = total * ( w + 1 ) / jobs;
      workers.emplace_back( [&, w, begin, end]() {
        try
        {
          partial[w] = work( begin, end );
        }
        catch ( ... )
        {
          errors[w] = std::current_exception();
        }
      } );
    }
  }
  for ( auto const& e : errors )
  {
    if ( e )
    {
      std::rethrow_exception( e );
    }
  }
  Result acc = std::move( partial.front() );
  for ( unsigned w = 1; w < jobs; ++w )
  {
    merge( acc, std::move( partial[w] ) );
  }
  return acc;
}

} // namespace quarkcap
