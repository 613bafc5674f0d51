// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <quarkcap/boolfn/boolean_op.hpp>
#include <quarkcap/boolfn/truth_table.hpp>
#include <quarkcap/common/rational.hpp>
#include <quarkcap/threshold/poly_weights.hpp>

#include <vector>

namespace quarkcap::constructs
{

/*! \brief B(z_0, ..., z_k) = theta z_i whenever z_j = others[j] for all j != i. */
struct restriction
{
  unsigned index = 0;
  int theta = 1;
  /*! \brief -1/+1 per argument; the entry at `index` is 0. */
  std::vector<int> others;
};

/*! \brief First assignment of the other arguments (false before true, z_0 lowest)
 *  under which B is not constant in z_i. Throws if B ignores z_i. */
restriction restriction_signs( boolfn::boolean_op const& b, unsigned i );

/*! \brief Affine q over z_1..z_k with q(e_j) = 0 and q(e_i) = theta[i] for i != j (e_0 = 0).
 *  `theta` has k + 1 entries; theta[j] is ignored. */
threshold::poly_weights fit_affine( unsigned k, unsigned j, std::vector<int> const& theta );

/*! \brief F(z (+) x) = sign(M q(z) + theta p(x)) over z_1..z_k (low inputs) and x, M = max|p| + 1.
 *
 * `signs` has k + 1 entries; signs[j] is ignored. Throws when p vanishes on a
 * cube point (no sign certificate).
 */
threshold::poly_weights extend_function( threshold::poly_weights const& p, unsigned k, unsigned j, int theta, std::vector<int> const& signs );

/*! \brief Everything the extension pipeline produced for one (k+1)-ary operator. */
struct embedding_tuple
{
  boolfn::boolean_op op{ 1, 0b10 };
  unsigned k = 0;
  std::vector<restriction> restrictions;
  std::vector<threshold::poly_weights> fs;
  std::vector<threshold::poly_weights> q;
  std::vector<rational> margins;
  std::vector<threshold::poly_weights> F;

  /*! \brief -/+ table of B(F_0, ..., F_k) over all n inputs. */
  boolfn::truth_table composed() const;
};

/*! \brief Extends f_0..f_k (same arity n - k) to F_0..F_k of arity n with
 *  B(F_0, ..., F_k)(e_i (+) x) = f_i(x); the identity is verified exhaustively. */
embedding_tuple composition_embedding( boolfn::boolean_op const& b, std::vector<threshold::poly_weights> const& fs );

/*! \brief The selector code of e_i over k bits: 0 for i = 0, bit i-1 otherwise. */
inline boolfn::assignment unit_code( unsigned i )
{
  return i == 0 ? 0 : boolfn::assignment{ 1 } << ( i - 1 );
}

} // namespace quarkcap::constructs
