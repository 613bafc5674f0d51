// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string_view>

namespace quarkcap
{

/*! \brief Counter-based generator keyed by (seed, stream).
 *
 * The i-th draw is splitmix64( key + i * golden ), so any draw can be
 * reproduced without replaying earlier ones, and streams with different
 * names never share state.
 */
class counter_rng
{
public:
  counter_rng( std::uint64_t seed, std::string_view stream = {} );

  std::uint64_t next_u64();

  /*! \brief Uniform in [0, 1). */
  double uniform();

  /*! \brief Uniform in [lo, hi). */
  double uniform( double lo, double hi );

  /*! \brief Uniform integer in [lo, hi]. */
  std::int64_t uniform_int( std::int64_t lo, std::int64_t hi );

  std::uint64_t counter() const { return counter_; }

  static std::uint64_t mix( std::uint64_t x );

private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

} // namespace quarkcap
