// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <quarkcap/boolfn/function_class.hpp>
#include <quarkcap/boolfn/truth_table.hpp>
#include <quarkcap/common/rational.hpp>
#include <quarkcap/threshold/poly_weights.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace quarkcap::threshold
{

/*! \brief Output rule of a threshold gate. */
enum class threshold_kind : std::uint8_t
{
  sign,     /*!< -1/+1 output; sign(0) is rejected */
  heaviside /*!< 0/1 output; H(0) = 0 */
};

std::string_view to_string( threshold_kind k );
threshold_kind parse_threshold_kind( std::string_view text );

/*! \brief sign(p) or H(p) of an exact value. Throws ambiguous_sign for sign(0). */
int apply_threshold( threshold_kind kind, rational const& value );

/*! \brief Gate output at a 0/1 cube point. */
int evaluate( poly_weights const& w, threshold_kind kind, boolfn::assignment x );

/*! \brief Truth table of the gate; -/+ for sign, 0/1 for Heaviside. */
boolfn::truth_table tabulate( poly_weights const& w, threshold_kind kind );

/*! \brief Margin-1 certificate of t as a degree-d threshold function, if one exists. */
std::optional<poly_weights> realize( boolfn::truth_table const& t, unsigned d );

enum class enumeration_strategy : std::uint8_t
{
  automatic, /*!< sweep for n <= 4, weights for n = 5 */
  sweep,     /*!< every dichotomy through the exact oracle */
  weights    /*!< bounded integer weights closed under input symmetries (d = 1) */
};

enumeration_strategy parse_strategy( std::string_view text );

struct enumeration_options
{
  enumeration_strategy strategy = enumeration_strategy::automatic;
  /*! \brief Integer weight bound of the weights strategy. */
  unsigned weight_bound = 12;
  /*! \brief Random non-members re-checked as inseparable by the weights strategy (0 = off). */
  unsigned cross_check = 0;
  std::uint64_t seed = 0;
  unsigned jobs = 0;
};

/*! \brief The class T(n;d) in -/+ encoding. */
boolfn::function_class enumerate_class( unsigned n, unsigned d, enumeration_options const& options = {} );

/*! \brief Memoized T(n;d) for n <= 4 (default options); thread safe. */
boolfn::function_class const& threshold_class( unsigned n, unsigned d );

/*! \brief Functions sign(sum e_i x_i), e_i in {-1,+1}, on -/+ inputs without bias; n odd. */
boolfn::function_class enumerate_binary_weight_ltfs( unsigned n );

using boolfn::capacity;

/*! \brief Asymptotic reference curves: zuev_upper, komlos, poly_main, poly_fixed_d,
 *  gated_pair, gated_pair_poly, layer_gated (uses m). */
double reference_formula( std::string_view name, unsigned n, unsigned d = 1, unsigned m = 1 );

std::vector<std::string> reference_formula_names();

} // namespace quarkcap::threshold
