// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <quarkcap/common/rational.hpp>
#include <quarkcap/netsim/network.hpp>

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace quarkcap::constructs
{

enum class slice_variant : std::uint8_t
{
  linear,  /*!< secant line on each slice */
  constant /*!< left sample on each slice */
};

slice_variant parse_slice_variant( std::string_view text );

/*! \brief n linear units y_k(x) = slope_k x + offset_k, each output-gated by the
 *  attention unit [x >= (k-1)/n]; the output is the sum of the gated units.
 *
 * Slice k is [(k-1)/n, k/n), the last slice closed at 1. On slice k units
 * 1..k are attended, so the y_k telescope to the secant through
 * f((k-1)/n), f(k/n) (linear) or to f((k-1)/n) (constant).
 */
struct slice_approximator
{
  unsigned n = 0;
  std::vector<double> samples;
  slice_variant variant = slice_variant::linear;
  /*! \brief Exact unit parameters; abscissae are the sample points k/n as doubles. */
  std::vector<rational> slope_exact;
  std::vector<rational> offset_exact;
  std::vector<rational> attention_bias_exact; /*!< -(k-1)/n */
  std::vector<double> slope;
  std::vector<double> offset;
  std::vector<double> attention_bias;

  /*! \brief Closed-form value; throws for x outside [0, 1]. */
  double evaluate( double x ) const;

  /*! \brief Network with step attention units, identity y units and a unit-weight sum. */
  netsim::gating_network to_network() const;
};

/*! \brief samples = f(0), f(1/n), ..., f(1); at least two. */
slice_approximator build_slice_approximator( std::span<double const> samples, slice_variant variant );

/*! \brief Samples f on the n + 1 slice boundaries. */
std::vector<double> sample_function( std::function<double( double )> const& f, unsigned n );

/*! \brief Largest |approximation - f| over an evenly spaced grid of `points` points on [0, 1]. */
double sup_error( slice_approximator const& sa, std::function<double( double )> const& f, unsigned points );

} // namespace quarkcap::constructs
