// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <quarkcap/boolfn/truth_table.hpp>
#include <quarkcap/common/rational.hpp>
#include <quarkcap/threshold/poly_weights.hpp>

namespace quarkcap::constructs
{

/*! \brief Affine form equal to K at one cube vertex and at most -M at every other vertex.
 *
 * On the 0/1 cube the weights act on x directly. On the -/+ cube they act on
 * u = 2x - 1, so the form is evaluated at points of {-1,+1}^n; the vertex
 * with index c has u_i = +1 exactly where bit i of c is set.
 */
struct corner_separator
{
  unsigned n = 0;
  boolfn::assignment corner = 0;
  rational margin_m = 1;
  rational margin_k = 0;
  boolfn::encoding cube = boolfn::encoding::zero_one;
  threshold::poly_weights weights;

  /*! \brief Value of the form at the vertex with index x. */
  rational value( boolfn::assignment x ) const;

  /*! \brief Exhaustive check of the defining margins. */
  bool holds() const;

  /*! \brief The form -p, with value -K at c and at least M elsewhere. */
  threshold::poly_weights negated() const { return weights.negated(); }
};

/*! \brief For the all-ones corner the form is sum (M+K) x_i - (M+K) n + K; other corners
 *  flip x_i to 1 - x_i, and the -/+ cube substitutes x_i = (u_i + 1) / 2. */
corner_separator make_corner_separator( unsigned n, boolfn::assignment corner, rational const& m, rational const& k,
                                        boolfn::encoding cube = boolfn::encoding::zero_one );

/*! \brief Value of a form over the -/+ cube at vertex x. */
rational value_on_pm_cube( threshold::poly_weights const& w, boolfn::assignment x );

} // namespace quarkcap::constructs
