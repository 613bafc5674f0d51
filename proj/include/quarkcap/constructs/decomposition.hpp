// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <quarkcap/boolfn/truth_table.hpp>
#include <quarkcap/netsim/network.hpp>
#include <quarkcap/threshold/poly_weights.hpp>

#include <cstdint>
#include <vector>

namespace quarkcap::constructs
{

/*! \brief One threshold gate per off-set point whose pointwise product is the function. */
struct product_decomposition_result
{
  boolfn::truth_table target;
  /*! \brief Factor i is false exactly at off_set[i] (0 under 0/1, -1 under -/+). */
  std::vector<threshold::poly_weights> factors;
  std::vector<boolfn::assignment> off_set;
  /*! \brief 2^(n-2), the factor count claimed sufficient; 1 for n < 2. */
  std::uint64_t claimed_bound = 1;
  bool exceeds_claimed_bound = false;
};

/*! \brief Factor for point c is the negated corner separator (M = K = 1) of c. */
product_decomposition_result product_decomposition( boolfn::truth_table const& t );

/*! \brief Pointwise product of the factors as gates in the target's encoding
 *  (0/1 product is AND, -/+ product is NXOR); the empty product is true. */
boolfn::truth_table multiply_factors( std::vector<threshold::poly_weights> const& factors, unsigned n, boolfn::encoding enc );

/*! \brief Network form: heaviside (0/1) or sign (-/+) factor units combined by a chain of output gates.
 *
 * Requires n >= 1 inputs named x1..xn; the output is the last unit of the chain.
 */
netsim::gating_network product_network( product_decomposition_result const& d );

} // namespace quarkcap::constructs
