// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <quarkcap/boolfn/boolean_op.hpp>
#include <quarkcap/boolfn/function_class.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace quarkcap::gating
{

/*! \brief The class T_B(n; d_1, ..., d_k). */
struct composition_spec
{
  boolfn::boolean_op op{ 2, 0b1000 };
  std::vector<unsigned> degrees;
  unsigned n = 2;
  boolfn::encoding enc = boolfn::encoding::plus_minus;
};

/*! \brief {B(f_1, ..., f_k) : f_j in T(n; d_j)}, deduplicated (n <= 4). */
boolfn::function_class compose_class( composition_spec const& spec, unsigned jobs = 0 );

struct bounds_report
{
  std::uint64_t lower = 0; /*!< prod |T(n-k+1; d_j)| */
  std::uint64_t exact = 0;
  std::uint64_t upper = 0; /*!< prod |T(n; d_j)| */
  bool verdict = false;
};

/*! \brief Exact check of the composition bounds; B must be irreducible and n >= k. */
bounds_report verify_composition_bounds( composition_spec const& spec, unsigned jobs = 0 );

struct table2_row
{
  boolfn::boolean_op op{ 2, 0 };
  bool irreducible = false;
  bool symmetric = false;
  bool ltg_implementable = false;
  std::uint64_t count = 0;
  double capacity = 0;
  /*! \brief The class equals T(n;1) (projection rows). */
  bool equals_single_class = false;
};

struct table2_result
{
  unsigned n = 0;
  std::vector<table2_row> rows; /*!< the 16 binary operators in table order */
  /*! \brief |T_B union T_notB| for the row pairs (B, not B), keyed by the smaller table value. */
  std::vector<std::pair<boolfn::boolean_op, std::uint64_t>> pair_counts;
  unsigned irreducible_count = 0;
  unsigned symmetric_count = 0;
  unsigned ltg_count = 0;
  bool and_equals_or = false;
  bool xor_equals_nxor = false;
  bool single_class_in_and_or = false;
};

/*! \brief All 16 binary operators at degree (1,1), n <= 3. */
table2_result table2_report( unsigned n, unsigned jobs = 0 );

struct closure_result
{
  unsigned n = 0;
  unsigned d = 1;
  /*! \brief classes[m-1] holds products of at most m gates. */
  std::vector<boolfn::function_class> classes;
  /*! \brief Smallest m reaching all 2^(2^n) functions, if reached within max_factors. */
  std::optional<unsigned> saturated_at;
  std::uint64_t claimed_bound = 1; /*!< 2^(n-2) */
};

/*! \brief -/+ products of up to max_factors degree-d gates (n <= 3); stops at the fixpoint. */
closure_result product_closure( unsigned n, unsigned d, unsigned max_factors );

struct intersection_result
{
  unsigned n = 0;
  std::vector<boolfn::truth_table> witnesses;
  std::uint64_t expected = 0; /*!< |T(n-1;d0)| |T(n-1;d1)| */
  bool distinct = false;
  bool all_members = false;     /*!< every witness lies in all ten classes */
  bool embedding_agrees = false; /*!< B(F_0, F_1) = witness for every B and F_j in T(n; d_j) */
};

/*! \brief F(0 (+) x) = f_0(x), F(1 (+) x) = f_1(x) over all certified pairs, built
 *  through the embedding pipeline for each irreducible binary B (n <= 3). */
intersection_result intersection_witnesses( unsigned n, unsigned d0, unsigned d1 );

/*! \brief The ten irreducible binary operators in table order. */
std::vector<boolfn::boolean_op> irreducible_binary_ops();

} // namespace quarkcap::gating
