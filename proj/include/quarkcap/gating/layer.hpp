// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <quarkcap/boolfn/function_class.hpp>

#include <cstdint>
#include <optional>

namespace quarkcap::gating
{

struct layer_gating_report
{
  unsigned n = 0;
  unsigned m = 0;
  bool exact = false;          /*!< false: sampled lower bound only */
  std::uint64_t samples = 0;   /*!< sampled (h, g, phi) configurations */
  boolfn::function_class cls;  /*!< phi(h_1 g_1, ..., h_m g_m), -/+ gates */
  std::uint64_t pair_count = 0; /*!< |T_NXOR(n;1,1)| */
  std::uint64_t hidden_maps = 0;
  std::uint64_t upper = 0;     /*!< pair_count^m |T(m;1)| */
  std::uint64_t ungated_count = 0;
  bool ungated_subset = false;      /*!< T(n,m,1) without gating is contained */
  bool contains_pair_class = false; /*!< T_NXOR(n;1,1) via a projection readout */
  /*! \brief Multiplexing witnesses: dense attention on the low ceil(log2 m) inputs,
   *  h layer with a false mask, g layer with a true mask, OR readout. */
  std::uint64_t witness_expected = 0; /*!< |T_NXOR(n+;1,1)|^m */
  std::uint64_t witness_distinct = 0;
  bool witnesses_members = false;
  std::uint64_t lower = 0; /*!< max(ungated_count, witness_distinct) */
  bool verdict = false;
};

/*! \brief Exact class for n = 2, m <= 2; otherwise requires `sample` (n <= 4, m <= 5)
 *  and reports a lower bound from seeded random configurations. */
layer_gating_report layer_output_gating_class( unsigned n, unsigned m, std::optional<std::uint64_t> sample = std::nullopt, std::uint64_t seed = 0 );

} // namespace quarkcap::gating
