// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <quarkcap/netsim/evaluate.hpp>
#include <quarkcap/netsim/network.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace quarkcap::transformer
{

using matrix = std::vector<std::vector<double>>;
using tokens = std::vector<std::vector<double>>;

/*! \brief Single-head encoder: shared Q/K/V projections, row softmax, convex combination of values.
 *
 * No score scaling, residuals or feed-forward sublayer.
 */
struct encoder_config
{
  unsigned n = 1;    /*!< token count */
  unsigned d_in = 1; /*!< input vector size */
  unsigned m = 1;    /*!< Q/K/V size */
  matrix w_q, w_k, w_v; /*!< m x d_in each */
  std::optional<std::vector<double>> b_q, b_k, b_v;

  /*! \brief Throws usage_error on a dimension mismatch. */
  void validate() const;
};

/*! \brief Seeded config with weights that are multiples of 1/1024 in [-1, 1]. */
encoder_config random_config( std::uint64_t seed, unsigned n, unsigned d_in, unsigned m, bool with_bias = false );

/*! \brief Seeded tokens with entries in [-1, 1]. */
tokens random_tokens( std::uint64_t seed, unsigned n, unsigned d_in );

/*! \brief The encoder as a gating network.
 *
 * Inputs are x<k>_<j> (token k, coordinate j); outputs o<l>_<a>. Each dot
 * product Q(l).K(k) uses m output gates on copies of Q(l); each value edge
 * V(k) -> o(l) is synaptically gated by the softmax weight w(l,k), all m
 * coordinates sharing one gating operation.
 */
netsim::gating_network build_encoder( encoder_config const& cfg );

struct forward_result
{
  tokens outputs;
  matrix weights; /*!< softmax weights w(l,k) read from the trace */
  netsim::eval_trace<double> trace;
};

/*! \brief Encoder that keeps its compiled network for repeated passes. */
class encoder
{
public:
  explicit encoder( encoder_config cfg );

  encoder_config const& config() const { return cfg_; }
  netsim::gating_network const& network() const { return net_.network(); }

  forward_result forward( tokens const& inputs ) const;

  /*! \brief forward(x permuted) equals forward(x) permuted within `tol`.
   *
   * perm[i] is the source position of token i. With offsets, offsets[i] is
   * added to whatever token sits at position i, after permuting.
   */
  bool permutation_check( tokens const& inputs, std::vector<unsigned> const& perm, std::optional<tokens> const& offsets = std::nullopt, double tol = 1e-9 ) const;

private:
  encoder_config cfg_;
  netsim::compiled_network net_;
  std::vector<std::size_t> weight_index_;
};

/*! \brief softmax(Q K^T) V computed directly, with a max-shifted softmax. */
tokens direct_attention( encoder_config const& cfg, tokens const& inputs );

} // namespace quarkcap::transformer
