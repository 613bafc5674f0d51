// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <quarkcap/boolfn/truth_table.hpp>
#include <quarkcap/common/rational.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace quarkcap::threshold
{

/*! \brief Multilinear monomial as a variable mask; bit i stands for x_{i+1}, 0 is the bias. */
using monomial = std::uint32_t;

/*! \brief Lexicographic order on the sorted index lists ({} < {1} < {1,2} < {1,3} < {2}). */
bool monomial_less( monomial a, monomial b );

/*! \brief "1,2" style label of a monomial ("" for the bias). */
std::string monomial_label( monomial m );
monomial parse_monomial( std::string const& label );

/*! \brief All monomials of n variables of degree <= d, in canonical order. */
std::vector<monomial> monomials( unsigned n, unsigned d );

/*! \brief Coefficients of a multilinear polynomial p of degree <= d over n inputs.
 *
 * On 0/1 inputs x^2 = x, so a subset of variables per monomial suffices.
 * Coefficients are exact rationals; absent monomials are zero.
 */
class poly_weights
{
public:
  poly_weights() = default;
  poly_weights( unsigned n, unsigned d );

  /*! \brief Affine form a_0 + sum a_i x_i. */
  static poly_weights affine( rational const& bias, std::span<rational const> linear );

  unsigned arity() const { return n_; }
  unsigned degree_bound() const { return d_; }

  /*! \brief Largest degree with a nonzero coefficient (0 for constants). */
  unsigned degree() const;

  rational coeff( monomial m ) const;
  void set( monomial m, rational const& value );
  void add( monomial m, rational const& value );
  rational bias() const { return coeff( 0 ); }

  /*! \brief Nonzero coefficients in canonical monomial order. */
  std::vector<std::pair<monomial, rational>> const& terms() const { return terms_; }

  /*! \brief p(x) at a 0/1 cube point. */
  rational value( boolfn::assignment x ) const;

  /*! \brief p at an arbitrary real point (e.g. a -/+ vertex). */
  rational value_at( std::span<rational const> point ) const;

  /*! \brief max |p(x)| over the 0/1 cube. */
  rational max_abs_on_cube() const;

  /*! \brief min |p(x)| over the 0/1 cube; zero means no strict certificate. */
  rational min_abs_on_cube() const;

  poly_weights negated() const;
  poly_weights scaled( rational const& factor ) const;

  /*! \brief Re-indexes variable i to variable offset + i inside an arity-`n` polynomial. */
  poly_weights shifted( unsigned offset, unsigned n ) const;

  /*! \brief Sum of two polynomials over the same arity; the degree bound is the max. */
  friend poly_weights operator+( poly_weights const& a, poly_weights const& b );

  friend bool operator==( poly_weights const&, poly_weights const& ) = default;

private:
  unsigned n_ = 0;
  unsigned d_ = 0;
  std::vector<std::pair<monomial, rational>> terms_;
};

} // namespace quarkcap::threshold
