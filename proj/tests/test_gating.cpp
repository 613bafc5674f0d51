// SPDX-License-Identifier: Apache-2.0
#include "oracle.hpp"

#include <quarkcap/common/error.hpp>
#include <quarkcap/gating/composition.hpp>
#include <quarkcap/gating/layer.hpp>
#include <quarkcap/gating/synaptic.hpp>
#include <quarkcap/threshold/threshold.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace quarkcap;
using boolfn::boolean_op;
using boolfn::encoding;
using gating::composition_spec;

namespace
{

std::set<std::uint64_t> as_set( boolfn::function_class const& c )
{
  auto const w = c.words();
  return { w.begin(), w.end() };
}

composition_spec pair_spec( std::uint64_t table, unsigned n, encoding enc = encoding::plus_minus )
{
  composition_spec s;
  s.op = boolean_op( 2, table );
  s.degrees = { 1, 1 };
  s.n = n;
  s.enc = enc;
  return s;
}

} // namespace

TEST( composition, and_of_two_ltfs_at_three_inputs )
{
  auto const cls = gating::compose_class( pair_spec( 0b1000, 3 ) );
  EXPECT_EQ( cls.size(), 246u );
  auto const t = oracle::ltf_words( 3, 3 );
  EXPECT_EQ( as_set( cls ), oracle::compose( 0b1000, t, t, 3 ) );
}

TEST( composition, every_binary_operator_matches_oracle )
{
  for ( unsigned n = 2; n <= 3; ++n )
  {
    auto const t = oracle::ltf_words( n, 3 );
    for ( unsigned table = 0; table < 16; ++table )
    {
      auto const cls = gating::compose_class( pair_spec( table, n ) );
      EXPECT_EQ( as_set( cls ), oracle::compose( table, t, t, n ) ) << "n = " << n << " table = " << table;
    }
  }
}

TEST( composition, product_is_nxor_under_plus_minus )
{
  for ( unsigned n = 1; n <= 3; ++n )
  {
    auto const nxor = gating::compose_class( pair_spec( 0b1001, n ) );
    auto const product = gating::compose_class( pair_spec( boolean_op::parse( "PRODUCT" ).table(), n ) );
    EXPECT_EQ( nxor, product );
  }
  EXPECT_EQ( gating::compose_class( pair_spec( 0b1001, 3 ) ).size(), 254u );
  EXPECT_EQ( boolean_op::parse( "PRODUCT", encoding::zero_one ).table(), 0b1000u );
}

TEST( composition, bounds_hold_for_irreducible_ops )
{
  auto const ops = gating::irreducible_binary_ops();
  ASSERT_EQ( ops.size(), 10u );
  for ( unsigned n = 2; n <= 3; ++n )
  {
    for ( auto const& op : ops )
    {
      auto s = pair_spec( op.table(), n );
      auto const r = gating::verify_composition_bounds( s );
      EXPECT_TRUE( r.verdict ) << op.name() << " n = " << n;
      EXPECT_LE( r.lower, r.exact );
      EXPECT_LE( r.exact, r.upper );
    }
  }
  auto const r = gating::verify_composition_bounds( pair_spec( 0b1000, 3 ) );
  EXPECT_EQ( r.lower, 196u );
  EXPECT_EQ( r.exact, 246u );
  EXPECT_EQ( r.upper, 104u * 104u );
}

TEST( composition, reducible_op_is_rejected )
{
  EXPECT_THROW( gating::verify_composition_bounds( pair_spec( 0b1010, 3 ) ), domain_error );
}

TEST( composition, table2_identities )
{
  for ( unsigned n = 2; n <= 3; ++n )
  {
    auto const r = gating::table2_report( n );
    ASSERT_EQ( r.rows.size(), 16u );
    EXPECT_EQ( r.irreducible_count, 10u );
    EXPECT_EQ( r.symmetric_count, 8u );
    EXPECT_EQ( r.ltg_count, 14u );
    EXPECT_TRUE( r.and_equals_or );
    EXPECT_TRUE( r.xor_equals_nxor );
    EXPECT_TRUE( r.single_class_in_and_or );
    for ( auto const& row : r.rows )
    {
      if ( !row.irreducible && row.op.table() != 0 && row.op.table() != 15 )
      {
        EXPECT_TRUE( row.equals_single_class ) << row.op.name();
      }
    }
  }
}

TEST( composition, product_closure_saturates )
{
  auto const r = gating::product_closure( 3, 1, 4 );
  ASSERT_GE( r.classes.size(), 3u );
  EXPECT_EQ( r.classes[0].size(), 104u );
  EXPECT_EQ( r.classes[1].size(), 254u );
  EXPECT_EQ( r.classes[2].size(), 256u );
  ASSERT_TRUE( r.saturated_at );
  EXPECT_EQ( *r.saturated_at, 3u );
  EXPECT_EQ( r.claimed_bound, 2u );
}

TEST( composition, intersection_witnesses )
{
  for ( unsigned n = 2; n <= 3; ++n )
  {
    auto const r = gating::intersection_witnesses( n, 1, 1 );
    auto const base = threshold::threshold_class( n - 1, 1 ).size();
    EXPECT_EQ( r.expected, base * base );
    EXPECT_EQ( r.witnesses.size(), r.expected );
    EXPECT_TRUE( r.distinct );
    EXPECT_TRUE( r.all_members );
    EXPECT_TRUE( r.embedding_agrees );
  }
}

TEST( synaptic, full_gating_matches_output_gating )
{
  using threshold::threshold_kind;
  for ( unsigned n = 2; n <= 3; ++n )
  {
    for ( auto f : { threshold_kind::sign, threshold_kind::heaviside } )
    {
      for ( auto g : { threshold_kind::sign, threshold_kind::heaviside } )
      {
        auto const r = gating::full_synaptic_gating_check( n, 1, f, g );
        EXPECT_TRUE( r.verdict() ) << "n = " << n;
        auto const c = threshold::threshold_class( n, 1 ).size();
        EXPECT_EQ( r.pairs, c * c );
        EXPECT_EQ( r.points_checked, c * c << n );
      }
    }
  }
}

TEST( synaptic, single_weight_class )
{
  auto const r = gating::single_weight_gating_class( 3, 0 );
  EXPECT_TRUE( r.verdict() );
  EXPECT_EQ( r.single_count, 104u );
  EXPECT_EQ( r.cls.size(), 208u );
  EXPECT_TRUE( threshold::threshold_class( 3, 1 ).is_subset_of( r.cls ) );
  EXPECT_THROW( gating::single_weight_gating_class( 3, 3 ), usage_error );
}

TEST( layer, exact_small_case )
{
  auto const r = gating::layer_output_gating_class( 2, 2 );
  EXPECT_TRUE( r.exact );
  EXPECT_EQ( r.cls.size(), 16u );
  EXPECT_TRUE( r.ungated_subset );
  EXPECT_TRUE( r.contains_pair_class );
  EXPECT_TRUE( r.witnesses_members );
  EXPECT_TRUE( r.verdict );
}

TEST( layer, sampled_lower_bound )
{
  EXPECT_THROW( gating::layer_output_gating_class( 3, 2 ), usage_error );
  auto const a = gating::layer_output_gating_class( 3, 2, 500, 7 );
  auto const b = gating::layer_output_gating_class( 3, 2, 500, 7 );
  EXPECT_FALSE( a.exact );
  EXPECT_EQ( a.cls, b.cls );
  EXPECT_EQ( a.witness_distinct, a.witness_expected );
  EXPECT_EQ( a.witness_expected, 256u );
  EXPECT_LE( a.cls.size(), a.upper );
  EXPECT_TRUE( a.verdict );
}
