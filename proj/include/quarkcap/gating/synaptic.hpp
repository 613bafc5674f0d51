// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <quarkcap/boolfn/function_class.hpp>
#include <quarkcap/threshold/threshold.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace quarkcap::gating
{

struct synaptic_counterexample
{
  boolfn::truth_table f;
  boolfn::truth_table g;
  boolfn::assignment x = 0;
  int expected = 0;
  int actual = 0;
};

struct full_synaptic_report
{
  unsigned n = 0;
  unsigned d = 1;
  threshold::threshold_kind f_kind = threshold::threshold_kind::sign;
  threshold::threshold_kind g_kind = threshold::threshold_kind::sign;
  std::uint64_t pairs = 0;
  std::uint64_t points_checked = 0;
  /*! \brief Points where g is false (-1 or 0): where the mixed rules differ from plain gating. */
  std::uint64_t gated_off_points = 0;
  std::vector<synaptic_counterexample> counterexamples;
  bool verdict() const { return counterexamples.empty(); }
};

/*! \brief For every pair (f, g) of degree-d gates, compares the fully gated gate
 *  threshold(g(x) p_f(x)) with the output-gated prediction:
 *  f g when the encodings match, f g with sign(0) = 0 for a -/+ f gated by a 0/1 g,
 *  and f or 1 - f (where g = -1) for a 0/1 f gated by a -/+ g. */
full_synaptic_report full_synaptic_gating_check( unsigned n, unsigned d, threshold::threshold_kind f_kind, threshold::threshold_kind g_kind,
                                                 std::size_t max_counterexamples = 16 );

struct single_weight_report
{
  unsigned n = 0;
  unsigned gated_index = 0;
  boolfn::function_class cls;
  std::uint64_t weight_vectors = 0;
  std::uint64_t skipped_ambiguous = 0; /*!< (w, g) combinations where the gated sum hits 0 */
  std::uint64_t single_count = 0;      /*!< |T(n;1)| */
  bool contains_single_class = false;
  bool within_upper = false; /*!< |class| <= |T(n;1)|^2 */
  bool verdict() const { return contains_single_class && within_upper; }
};

/*! \brief Class of x -> sign(w_0 + sum_{i != j} w_i x_i + g(x) w_j x_j) over margin
 *  certificates of T(n;1) plus all integer vectors in [-3, 3]^(n+1) with p != 0 on
 *  the cube, and all -/+ gates g in T(n;1) (n <= 3, j is 0-based). */
single_weight_report single_weight_gating_class( unsigned n, unsigned gated_index );

} // namespace quarkcap::gating
