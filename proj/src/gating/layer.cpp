// SPDX-License-Identifier: Apache-2.0
#include <quarkcap/common/error.hpp>
#include <quarkcap/common/random.hpp>
#include <quarkcap/constructs/multiplex.hpp>
#include <quarkcap/gating/composition.hpp>
#include <quarkcap/gating/layer.hpp>
#include <quarkcap/threshold/threshold.hpp>

#include <algorithm>
#include <cmath>
#include <set>

namespace quarkcap::gating
{

namespace
{

using words = std::vector<std::uint64_t>;

std::uint64_t ipow( std::uint64_t b, unsigned e )
{
  std::uint64_t r = 1;
  while ( e-- )
  {
    r *= b;
  }
  return r;
}

/* phi applied pointwise to m hidden tables */
std::uint64_t readout( std::uint64_t phi, std::vector<std::uint64_t> const& hidden, unsigned n )
{
  std::uint64_t out = 0;
  for ( unsigned x = 0; x < ( 1u << n ); ++x )
  {
    unsigned idx = 0;
    for ( unsigned i = 0; i < hidden.size(); ++i )
    {
      idx |= static_cast<unsigned>( ( hidden[i] >> x ) & 1u ) << i;
    }
    out |= ( ( phi >> idx ) & 1u ) << x;
  }
  return out;
}

/* all phi(t_1, ..., t_m) for t_i drawn from `layer` */
words all_readouts( words const& layer, words const& phis, unsigned n, unsigned m )
{
  std::set<std::uint64_t> out;
  std::vector<std::size_t> idx( m, 0 );
  std::vector<std::uint64_t> hidden( m );
  for ( ;; )
  {
    for ( unsigned i = 0; i < m; ++i )
    {
      hidden[i] = layer[idx[i]];
    }
    for ( auto const phi : phis )
    {
      out.insert( readout( phi, hidden, n ) );
    }
    unsigned i = 0;
    while ( i < m && ++idx[i] == layer.size() )
    {
      idx[i++] = 0;
    }
    if ( i == m )
    {
      break;
    }
  }
  return { out.begin(), out.end() };
}

} // namespace

layer_gating_report layer_output_gating_class( unsigned n, unsigned m, std::optional<std::uint64_t> sample, std::uint64_t seed )
{
  if ( m == 0 || n == 0 )
  {
    throw usage_error( "layer gating needs n >= 1 and m >= 1" );
  }
  bool const exact = n == 2 && m <= 2;
  if ( !exact && !sample )
  {
    throw usage_error( "exact layer gating is limited to n = 2, m <= 2; pass --sample for larger sizes" );
  }
  if ( n > 4 || m > 5 )
  {
    throw arity_error( "layer gating supports n <= 4 and m <= 5" );
  }
  layer_gating_report rep;
  rep.n = n;
  rep.m = m;
  rep.exact = exact;
  auto const nxor = boolfn::boolean_op::parse( "NXOR" );
  auto const pairs = compose_class( { nxor, { 1, 1 }, n, boolfn::encoding::plus_minus } ).words();
  auto const single = threshold::threshold_class( n, 1 ).words();
  auto const phis = ( m <= 4 ? threshold::threshold_class( m, 1 ) : threshold::enumerate_class( m, 1 ) ).words();
  auto const mask = boolfn::word_mask( n );
  rep.pair_count = pairs.size();
  rep.hidden_maps = ipow( pairs.size(), m );
  rep.upper = rep.hidden_maps * phis.size();

  words found;
  if ( exact )
  {
    found = all_readouts( pairs, phis, n, m );
    auto const ungated = all_readouts( single, phis, n, m );
    rep.ungated_count = ungated.size();
    rep.ungated_subset = std::includes( found.begin(), found.end(), ungated.begin(), ungated.end() );
  }
  else
  {
    counter_rng rng( seed, "gating.layer" );
    std::set<std::uint64_t> out;
    std::vector<std::uint64_t> hidden( m );
    auto pick = [&]( words const& w ) { return w[static_cast<std::size_t>( rng.uniform_int( 0, static_cast<std::int64_t>( w.size() ) - 1 ) )]; };
    for ( std::uint64_t s = 0; s < *sample; ++s )
    {
      for ( unsigned i = 0; i < m; ++i )
      {
        hidden[i] = ~( pick( single ) ^ pick( single ) ) & mask;
      }
      out.insert( readout( pick( phis ), hidden, n ) );
    }
    rep.samples = *sample;
    found.assign( out.begin(), out.end() );
  }
  rep.cls = boolfn::function_class::from_words( n, found );

  /* projection readout phi = z_1 reproduces every gated pair */
  std::uint64_t projection = 0;
  for ( unsigned idx = 0; idx < ( 1u << m ); ++idx )
  {
    projection |= std::uint64_t{ idx & 1u } << idx;
  }
  if ( exact )
  {
    rep.contains_pair_class = std::all_of( pairs.begin(), pairs.end(), [&]( auto p ) {
      std::vector<std::uint64_t> hidden( m, p );
      return std::binary_search( found.begin(), found.end(), readout( projection, hidden, n ) );
    } );
  }

  /* multiplexing witnesses */
  auto const a = constructs::attention_width( m, constructs::addressing::dense );
  if ( a < n )
  {
    auto const n_plus = n - a;
    auto const pair_plus = compose_class( { nxor, { 1, 1 }, n_plus, boolfn::encoding::plus_minus } );
    auto const& single_plus = threshold::threshold_class( n_plus, 1 );
    /* one (h+, g+) decomposition per gated pair, with certificates */
    std::vector<std::pair<threshold::poly_weights, threshold::poly_weights>> decomposition;
    for ( auto const& q : pair_plus )
    {
      bool done = false;
      for ( auto const& h : single_plus )
      {
        for ( auto const& g : single_plus )
        {
          if ( !done && ~( h.word() ^ g.word() ) == ( q.word() | ~boolfn::word_mask( n_plus ) ) )
          {
            decomposition.emplace_back( *threshold::realize( h, 1 ), *threshold::realize( g, 1 ) );
            done = true;
          }
        }
      }
    }
    rep.witness_expected = ipow( decomposition.size(), m );
    std::set<std::uint64_t> witnesses;
    bool members = exact;
    std::vector<std::size_t> idx( m, 0 );
    for ( ;; )
    {
      std::vector<threshold::poly_weights> hs, gs;
      for ( unsigned i = 0; i < m; ++i )
      {
        hs.push_back( decomposition[idx[i]].first );
        gs.push_back( decomposition[idx[i]].second );
      }
      auto const hl = constructs::build_multiplex( hs, constructs::addressing::dense, std::vector<bool>( m, false ), constructs::readout::or_op );
      auto const gl = constructs::build_multiplex( gs, constructs::addressing::dense, std::vector<bool>( m, true ), constructs::readout::and_op );
      std::uint64_t w = 0;
      for ( boolfn::assignment x = 0; x < ( boolfn::assignment{ 1 } << n ); ++x )
      {
        auto const hv = hl.hidden_outputs( x );
        auto const gv = gl.hidden_outputs( x );
        bool any = false;
        for ( unsigned i = 0; i < m; ++i )
        {
          any = any || hv[i] * gv[i] > 0;
        }
        w |= std::uint64_t{ any } << x;
      }
      if ( exact && !std::binary_search( found.begin(), found.end(), w ) )
      {
        members = false;
      }
      witnesses.insert( w );
      unsigned i = 0;
      while ( i < m && ++idx[i] == decomposition.size() )
      {
        idx[i++] = 0;
      }
      if ( i == m )
      {
        break;
      }
    }
    rep.witness_distinct = witnesses.size();
    rep.witnesses_members = members;
  }

  rep.lower = std::max( rep.ungated_count, rep.witness_distinct );
  if ( exact )
  {
    rep.verdict = rep.lower <= rep.cls.size() && rep.cls.size() <= rep.upper && rep.ungated_subset && rep.contains_pair_class &&
                  rep.witnesses_members && rep.witness_distinct == rep.witness_expected;
  }
  else
  {
    rep.verdict = rep.cls.size() <= rep.upper && rep.witness_distinct == rep.witness_expected;
  }
  return rep;
}

} // namespace quarkcap::gating
