// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <quarkcap/boolfn/truth_table.hpp>
#include <quarkcap/common/rational.hpp>
#include <quarkcap/netsim/network.hpp>
#include <quarkcap/threshold/poly_weights.hpp>

#include <cstdint>
#include <string_view>
#include <vector>

namespace quarkcap::constructs
{

enum class addressing : std::uint8_t
{
  dense, /*!< ceil(log2 m) attention bits holding the binary code of i */
  sparse /*!< m - 1 attention bits; code e_0 = 0, e_i the i-th unit vector */
};

enum class readout : std::uint8_t
{
  or_op,  /*!< pairs with a mask of false values */
  and_op, /*!< pairs with a mask of true values */
  product /*!< -/+ product, pairs with a mask of true values */
};

addressing parse_addressing( std::string_view text );
readout parse_readout( std::string_view text );
std::string_view to_string( readout r );

/*! \brief m sign gates over x+ selected by attention bits (the low input indices).
 *
 * Hidden unit j adds a corner separator on the attention bits (K = 0, M
 * larger than max |p_j| over the cube) to p_j, negated when the mask is
 * true, so it computes f_j when its code is presented and the mask otherwise.
 */
class multiplex_network
{
public:
  std::vector<threshold::poly_weights> base;
  addressing addr = addressing::dense;
  std::vector<bool> mask;
  readout ro = readout::or_op;
  unsigned attention_bits = 0;
  unsigned n_plus = 0;
  std::vector<threshold::poly_weights> hidden;

  unsigned arity() const { return attention_bits + n_plus; }
  unsigned size() const { return static_cast<unsigned>( base.size() ); }

  /*! \brief Attention pattern selecting unit i. */
  boolfn::assignment code( unsigned i ) const;

  /*! \brief Extended input: attention pattern in the low bits, x+ above. */
  boolfn::assignment extended( unsigned i, boolfn::assignment x_plus ) const { return code( i ) | ( x_plus << attention_bits ); }

  /*! \brief Hidden sign outputs (-1/+1) at an extended input. */
  std::vector<int> hidden_outputs( boolfn::assignment x ) const;

  int output( boolfn::assignment x ) const;

  /*! \brief -/+ table over all extended inputs. */
  boolfn::truth_table table() const;

  /*! \brief Network form with additive-attention edges; base functions must be affine. */
  netsim::gating_network to_network() const;
};

/*! \brief Builds the multiplexing network; fs must share arity and carry sign certificates. */
multiplex_network build_multiplex( std::vector<threshold::poly_weights> const& fs, addressing addr, std::vector<bool> const& mask, readout ro );

/*! \brief Attention bits needed for m units. */
unsigned attention_width( unsigned m, addressing addr );

} // namespace quarkcap::constructs
