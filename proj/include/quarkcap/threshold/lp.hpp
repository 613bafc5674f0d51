// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <quarkcap/boolfn/truth_table.hpp>
#include <quarkcap/common/rational.hpp>
#include <quarkcap/threshold/poly_weights.hpp>

#include <optional>
#include <vector>

namespace quarkcap::threshold
{

/*! \brief Exact separability oracle for degree-d threshold functions of n inputs.
 *
 * A table t is a degree-d threshold function iff some coefficient vector a
 * satisfies s_x * phi(x) . a >= 1 on every cube point x, where phi lists the
 * monomials and s_x = +1 on true points, -1 elsewhere. By Gordan's
 * alternative this fails iff a convex combination of the rows s_x phi(x)
 * vanishes, which is what Phase I of a Bland-rule simplex decides. The
 * optimal Phase I duals give a; the vanishing combination is returned on
 * the other side. Both verdicts are re-checked exactly before returning.
 */
class separability_lp
{
public:
  separability_lp( unsigned n, unsigned d );

  unsigned arity() const { return n_; }
  unsigned degree() const { return d_; }
  std::vector<monomial> const& basis() const { return monomials_; }

  struct result
  {
    /*! \brief Primitive integer certificate when separable. */
    std::optional<poly_weights> weights;
    /*! \brief Convex multipliers over cube points proving inseparability. */
    std::vector<rational> infeasibility;
    unsigned pivots = 0;
  };

  result solve( boolfn::truth_table const& t ) const;

  bool separable( boolfn::truth_table const& t ) const { return solve( t ).weights.has_value(); }

private:
  unsigned n_;
  unsigned d_;
  std::vector<monomial> monomials_;
};

} // namespace quarkcap::threshold
