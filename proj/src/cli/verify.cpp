// SPDX-License-Identifier: Apache-2.0
#include <quarkcap/cli/verify.hpp>
#include <quarkcap/common/error.hpp>
#include <quarkcap/common/random.hpp>
#include <quarkcap/constructs/approximator.hpp>
#include <quarkcap/constructs/corner.hpp>
#include <quarkcap/constructs/decomposition.hpp>
#include <quarkcap/constructs/embedding.hpp>
#include <quarkcap/constructs/multiplex.hpp>
#include <quarkcap/gating/composition.hpp>
#include <quarkcap/gating/synaptic.hpp>
#include <quarkcap/netsim/builders.hpp>
#include <quarkcap/netsim/evaluate.hpp>
#include <quarkcap/netsim/transforms.hpp>
#include <quarkcap/threshold/threshold.hpp>
#include <quarkcap/transformer/encoder.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace quarkcap::cli
{

namespace
{

using boolfn::assignment;
using boolfn::encoding;
using boolfn::truth_table;
using threshold::poly_weights;
using threshold::threshold_kind;

/* regression fixtures, frozen from an independent brute force */
struct count_fixture
{
  unsigned n, d;
  std::uint64_t count;
};
constexpr count_fixture class_fixtures[] = { { 1, 1, 4 }, { 2, 1, 14 }, { 3, 1, 104 }, { 4, 1, 1882 }, { 2, 2, 16 } };

std::vector<poly_weights> certificates( unsigned n )
{
  std::vector<poly_weights> out;
  for ( auto const& t : threshold::threshold_class( n, 1 ) )
  {
    out.push_back( *threshold::realize( t, 1 ) );
  }
  return out;
}

int sign_at( poly_weights const& w, assignment x )
{
  return w.value( x ) > 0 ? 1 : -1;
}

criterion_result enumeration( verify_level level )
{
  criterion_result r{ 1, "enumeration fixtures", true, json::object() };
  json rows = json::array();
  for ( auto const& f : class_fixtures )
  {
    if ( level == verify_level::quick && f.n > 3 )
    {
      continue;
    }
    auto const& c = threshold::threshold_class( f.n, f.d );
    bool ok = c.size() == f.count;
    /* certificates reproduce every member at small n */
    if ( f.n <= 3 )
    {
      for ( auto const& t : c )
      {
        auto const w = threshold::realize( t, f.d );
        ok = ok && w && threshold::tabulate( *w, threshold_kind::sign ) == t;
      }
    }
    rows.push_back( { { "n", f.n }, { "d", f.d }, { "exact_count", c.size() }, { "expected", f.count }, { "verdict", ok } } );
    r.verdict = r.verdict && ok;
  }
  r.details["classes"] = rows;
  return r;
}

criterion_result composition( verify_level level, unsigned jobs )
{
  criterion_result r{ 2, "composition bounds", true, json::object() };
  json rows = json::array();
  for ( unsigned n = 2; n <= ( level == verify_level::desk ? 3u : 2u ); ++n )
  {
    for ( auto const& op : gating::irreducible_binary_ops() )
    {
      auto const b = gating::verify_composition_bounds( { op, { 1, 1 }, n, encoding::plus_minus }, jobs );
      rows.push_back( { { "b", op.name() }, { "n", n }, { "lower", b.lower }, { "exact", b.exact }, { "upper", b.upper }, { "verdict", b.verdict } } );
      r.verdict = r.verdict && b.verdict;
    }
  }
  r.details["rows"] = rows;
  return r;
}

criterion_result table2( verify_level level, unsigned jobs )
{
  criterion_result r{ 3, "binary composition identities", true, json::object() };
  json rows = json::array();
  for ( unsigned n = 2; n <= ( level == verify_level::desk ? 3u : 2u ); ++n )
  {
    auto const t = gating::table2_report( n, jobs );
    bool const ok = t.and_equals_or && t.xor_equals_nxor && t.ltg_count == 14 && t.irreducible_count == 10 && t.single_class_in_and_or;
    rows.push_back( { { "n", n },
                      { "and_equals_or", t.and_equals_or },
                      { "xor_equals_nxor", t.xor_equals_nxor },
                      { "ltg_implementable", t.ltg_count },
                      { "irreducible", t.irreducible_count },
                      { "single_class_in_and_or", t.single_class_in_and_or },
                      { "verdict", ok } } );
    r.verdict = r.verdict && ok;
  }
  r.details["rows"] = rows;
  return r;
}

criterion_result decomposition()
{
  criterion_result r{ 4, "product decomposition", true, json::object() };
  std::uint64_t checked = 0, over_bound = 0;
  for ( unsigned n = 1; n <= 3; ++n )
  {
    for ( auto enc : { encoding::zero_one, encoding::plus_minus } )
    {
      for ( std::uint64_t w = 0; w < ( std::uint64_t{ 1 } << ( 1u << n ) ); ++w )
      {
        auto const t = truth_table::from_word( n, w, enc );
        auto const d = constructs::product_decomposition( t );
        bool const ok = constructs::multiply_factors( d.factors, n, enc ) == t && d.factors.size() == t.size() - t.count_ones();
        r.verdict = r.verdict && ok;
        over_bound += d.exceeds_claimed_bound;
        ++checked;
      }
    }
  }
  /* XOR = OR x NAND */
  auto const xor01 = truth_table::from_bits( { 0, 1, 1, 0 }, encoding::zero_one );
  auto const d = constructs::product_decomposition( xor01 );
  std::set<truth_table> factor_tables;
  for ( auto const& f : d.factors )
  {
    factor_tables.insert( threshold::tabulate( f, threshold_kind::heaviside ) );
  }
  bool const xor_ok = factor_tables == std::set<truth_table>{ truth_table::from_bits( { 0, 1, 1, 1 }, encoding::zero_one ),
                                                               truth_table::from_bits( { 1, 1, 1, 0 }, encoding::zero_one ) } &&
                      constructs::multiply_factors( d.factors, 2, encoding::plus_minus ).to_values_string() == "(-1,1,1,-1)";
  r.verdict = r.verdict && xor_ok;
  r.details["functions_checked"] = checked;
  r.details["exceeding_claimed_bound"] = over_bound;
  r.details["xor_as_or_times_nand"] = xor_ok;
  return r;
}

criterion_result synaptic( verify_level level )
{
  criterion_result r{ 5, "full synaptic gating", true, json::object() };
  json rows = json::array();
  for ( unsigned n = 2; n <= ( level == verify_level::desk ? 3u : 2u ); ++n )
  {
    for ( auto fk : { threshold_kind::sign, threshold_kind::heaviside } )
    {
      for ( auto gk : { threshold_kind::sign, threshold_kind::heaviside } )
      {
        auto const rep = gating::full_synaptic_gating_check( n, 1, fk, gk );
        rows.push_back( { { "n", n },
                          { "f_kind", threshold::to_string( fk ) },
                          { "g_kind", threshold::to_string( gk ) },
                          { "pairs", rep.pairs },
                          { "counterexamples", rep.counterexamples.size() },
                          { "verdict", rep.verdict() } } );
        r.verdict = r.verdict && rep.verdict();
      }
    }
  }
  r.details["rows"] = rows;
  return r;
}

criterion_result multiplexing( verify_level level, std::uint64_t seed )
{
  criterion_result r{ 6, "corner separators and multiplexing", true, json::object() };
  /* corner separators */
  std::uint64_t separators = 0;
  bool corners_ok = true;
  for ( unsigned n = 1; n <= ( level == verify_level::desk ? 6u : 4u ); ++n )
  {
    for ( assignment c = 0; c < ( assignment{ 1 } << n ); ++c )
    {
      for ( int m : { 1, 10 } )
      {
        for ( int k : { 0, 1 } )
        {
          for ( auto cube : { encoding::zero_one, encoding::plus_minus } )
          {
            corners_ok = corners_ok && constructs::make_corner_separator( n, c, m, k, cube ).holds();
            ++separators;
          }
        }
      }
    }
  }
  r.details["corner_separators"] = { { "checked", separators }, { "verdict", corners_ok } };

  /* multiplex networks on seeded base tuples */
  counter_rng rng( seed, "verify.multiplex" );
  unsigned const tuples = level == verify_level::desk ? 8 : 2;
  std::uint64_t networks = 0;
  bool mux_ok = true;
  struct convention
  {
    bool mask;
    constructs::readout ro;
  };
  for ( unsigned n = 1; n <= 3; ++n )
  {
    auto const certs = certificates( n );
    for ( unsigned m = 1; m <= 4; ++m )
    {
      for ( auto addr : { constructs::addressing::dense, constructs::addressing::sparse } )
      {
        for ( auto conv : { convention{ false, constructs::readout::or_op }, convention{ true, constructs::readout::and_op }, convention{ true, constructs::readout::product } } )
        {
          for ( unsigned s = 0; s < tuples; ++s )
          {
            std::vector<poly_weights> fs;
            for ( unsigned j = 0; j < m; ++j )
            {
              fs.push_back( certs[static_cast<std::size_t>( rng.uniform_int( 0, static_cast<std::int64_t>( certs.size() ) - 1 ) )] );
            }
            auto const mx = constructs::build_multiplex( fs, addr, std::vector<bool>( m, conv.mask ), conv.ro );
            std::optional<netsim::compiled_network> net;
            if ( s == 0 )
            {
              net.emplace( mx.to_network() );
            }
            for ( unsigned i = 0; i < m; ++i )
            {
              for ( assignment xp = 0; xp < ( assignment{ 1 } << n ); ++xp )
              {
                auto const x = mx.extended( i, xp );
                auto const h = mx.hidden_outputs( x );
                for ( unsigned j = 0; j < m; ++j )
                {
                  int const expected = j == i ? sign_at( fs[j], xp ) : ( conv.mask ? 1 : -1 );
                  mux_ok = mux_ok && h[j] == expected;
                }
                mux_ok = mux_ok && mx.output( x ) == sign_at( fs[i], xp );
                if ( net )
                {
                  std::vector<rational> in;
                  for ( unsigned b = 0; b < mx.arity(); ++b )
                  {
                    in.emplace_back( static_cast<int>( ( x >> b ) & 1u ) );
                  }
                  mux_ok = mux_ok && net->evaluate_exact( in ).outputs.front() == sign_at( fs[i], xp );
                }
              }
            }
            ++networks;
          }
        }
      }
    }
  }
  r.details["multiplex"] = { { "networks", networks }, { "verdict", mux_ok } };

  /* injectivity of the multiplexing map at n = 2, m = 2 */
  auto const certs2 = certificates( 2 );
  std::set<truth_table> images;
  for ( auto const& f0 : certs2 )
  {
    for ( auto const& f1 : certs2 )
    {
      images.insert( constructs::build_multiplex( { f0, f1 }, constructs::addressing::dense, { false, false }, constructs::readout::or_op ).table() );
    }
  }
  bool const injective = images.size() == certs2.size() * certs2.size();
  r.details["injectivity"] = { { "pairs", certs2.size() * certs2.size() }, { "distinct_maps", images.size() }, { "verdict", injective } };
  r.verdict = corners_ok && mux_ok && injective;
  return r;
}

criterion_result embedding( verify_level level )
{
  criterion_result r{ 7, "embedding pipeline and intersection witnesses", true, json::object() };
  std::uint64_t embeddings = 0;
  bool identity_ok = true;
  for ( unsigned a = 1; a <= 2; ++a )
  {
    auto const certs = certificates( a );
    for ( auto const& op : gating::irreducible_binary_ops() )
    {
      for ( auto const& f0 : certs )
      {
        for ( auto const& f1 : certs )
        {
          try
          {
            auto const e = constructs::composition_embedding( op, { f0, f1 } );
            auto const t = e.composed();
            for ( unsigned i = 0; i < 2; ++i )
            {
              auto const& f = i == 0 ? f0 : f1;
              for ( assignment x = 0; x < ( assignment{ 1 } << a ); ++x )
              {
                identity_ok = identity_ok && t.value( constructs::unit_code( i ) | ( x << 1 ) ) == sign_at( f, x );
              }
            }
          }
          catch ( internal_error const& )
          {
            identity_ok = false;
          }
          ++embeddings;
        }
      }
    }
  }
  r.details["embeddings"] = { { "checked", embeddings }, { "verdict", identity_ok } };
  json rows = json::array();
  bool witnesses_ok = true;
  for ( unsigned n = 2; n <= ( level == verify_level::desk ? 3u : 2u ); ++n )
  {
    auto const w = gating::intersection_witnesses( n, 1, 1 );
    bool const ok = w.distinct && w.all_members && w.embedding_agrees && w.witnesses.size() == w.expected;
    rows.push_back( { { "n", n },
                      { "witnesses", w.witnesses.size() },
                      { "expected", w.expected },
                      { "distinct", w.distinct },
                      { "members_of_all_ten", w.all_members },
                      { "embedding_agrees", w.embedding_agrees },
                      { "verdict", ok } } );
    witnesses_ok = witnesses_ok && ok;
  }
  r.details["intersection"] = rows;
  r.verdict = identity_ok && witnesses_ok;
  return r;
}

criterion_result approximation()
{
  criterion_result r{ 8, "slice approximator", true, json::object() };
  auto const line = []( double x ) { return x; };
  auto const square = []( double x ) { return x * x; };
  unsigned const grid = 10000;

  double line_err = 0;
  for ( unsigned n = 1; n <= 16; ++n )
  {
    auto const sa = constructs::build_slice_approximator( constructs::sample_function( line, n ), constructs::slice_variant::linear );
    line_err = std::max( line_err, constructs::sup_error( sa, line, grid ) );
  }
  auto const lin = constructs::build_slice_approximator( constructs::sample_function( square, 10 ), constructs::slice_variant::linear );
  auto const cst = constructs::build_slice_approximator( constructs::sample_function( square, 10 ), constructs::slice_variant::constant );
  double const square_err = constructs::sup_error( lin, square, grid );
  double const constant_err = constructs::sup_error( cst, square, grid );

  netsim::compiled_network net( lin.to_network() );
  double network_gap = 0;
  for ( unsigned i = 0; i < grid; ++i )
  {
    double const x = static_cast<double>( i ) / ( grid - 1 );
    std::vector<double> in{ x };
    network_gap = std::max( network_gap, std::abs( net.outputs( in ).front() - lin.evaluate( x ) ) );
  }
  r.details["identity_sup_error"] = line_err;
  r.details["square_sup_error"] = square_err;
  r.details["square_constant_sup_error"] = constant_err;
  r.details["network_vs_closed_form"] = network_gap;
  r.verdict = line_err == 0.0 && square_err <= 0.0025 + 1e-9 && constant_err <= 0.19 + 1e-9 && network_gap <= 1e-12;
  return r;
}

criterion_result transformer_checks( verify_level level, std::uint64_t seed )
{
  criterion_result r{ 9, "transformer from quarks", true, json::object() };
  bool const desk = level == verify_level::desk;
  unsigned const max_n = desk ? 6 : 3, max_m = desk ? 8 : 4;

  bool counts_ok = true;
  for ( unsigned n = 1; n <= max_n; ++n )
  {
    for ( unsigned m = 1; m <= max_m; ++m )
    {
      transformer::encoder enc( transformer::random_config( seed + 131 * n + m, n, 2, m ) );
      auto const f = enc.forward( transformer::random_tokens( seed + n, n, 2 ) );
      counts_ok = counts_ok && f.trace.output_gating_ops == std::uint64_t{ m } * n * n && f.trace.synaptic_gating_ops == std::uint64_t{ n } * n;
    }
  }
  r.details["counts"] = { { "grid", { max_n, max_m } }, { "verdict", counts_ok } };

  counter_rng rng( seed, "verify.transformer" );
  unsigned const instances = desk ? 100 : 20;
  double worst = 0;
  for ( unsigned i = 0; i < instances; ++i )
  {
    auto const n = static_cast<unsigned>( rng.uniform_int( 1, 6 ) );
    auto const d = static_cast<unsigned>( rng.uniform_int( 1, 5 ) );
    auto const m = static_cast<unsigned>( rng.uniform_int( 1, 8 ) );
    auto const cfg = transformer::random_config( rng.next_u64(), n, d, m, rng.uniform() < 0.5 );
    auto const x = transformer::random_tokens( rng.next_u64(), n, d );
    auto const got = transformer::encoder( cfg ).forward( x ).outputs;
    auto const want = transformer::direct_attention( cfg, x );
    for ( unsigned l = 0; l < n; ++l )
    {
      for ( unsigned a = 0; a < m; ++a )
      {
        worst = std::max( worst, std::abs( got[l][a] - want[l][a] ) );
      }
    }
  }
  bool const oracle_ok = worst <= 1e-9;
  r.details["oracle"] = { { "instances", instances }, { "max_abs_error", worst }, { "verdict", oracle_ok } };

  bool perm_ok = true;
  std::uint64_t perms = 0;
  for ( unsigned n = 1; n <= ( desk ? 4u : 3u ); ++n )
  {
    transformer::encoder enc( transformer::random_config( seed + 7 * n, n, 3, 3 ) );
    auto const x = transformer::random_tokens( seed + 11 * n, n, 3 );
    std::vector<unsigned> p( n );
    std::iota( p.begin(), p.end(), 0u );
    do
    {
      perm_ok = perm_ok && enc.permutation_check( x, p );
      ++perms;
    } while ( std::next_permutation( p.begin(), p.end() ) );
  }
  r.details["equivariance"] = { { "permutations", perms }, { "verdict", perm_ok } };

  /* distinct positional offsets: every nontrivial permutation must fail */
  unsigned const n = 3;
  transformer::encoder enc( transformer::random_config( seed + 99, n, 3, 3 ) );
  auto const x = transformer::random_tokens( seed + 98, n, 3 );
  transformer::tokens offsets( n, std::vector<double>( 3 ) );
  for ( unsigned i = 0; i < n; ++i )
  {
    for ( unsigned j = 0; j < 3; ++j )
    {
      offsets[i][j] = std::sin( ( i + 1 ) * ( j + 2.0 ) );
    }
  }
  std::vector<unsigned> p{ 0, 1, 2 };
  bool breaks = enc.permutation_check( x, p, offsets );
  while ( std::next_permutation( p.begin(), p.end() ) )
  {
    breaks = breaks && !enc.permutation_check( x, p, offsets );
  }
  r.details["positional_offsets_break"] = breaks;
  r.verdict = counts_ok && oracle_ok && perm_ok && breaks;
  return r;
}

double max_gap( std::vector<double> const& a, std::vector<double> const& b )
{
  if ( a.size() != b.size() )
  {
    return INFINITY;
  }
  double g = 0;
  for ( std::size_t i = 0; i < a.size(); ++i )
  {
    g = std::max( g, std::abs( a[i] - b[i] ) );
  }
  return g;
}

criterion_result netsim_checks( verify_level level, std::uint64_t seed )
{
  criterion_result r{ 10, "gating network equivalences", true, json::object() };
  counter_rng rng( seed, "verify.netsim" );
  unsigned const nets = level == verify_level::desk ? 100 : 20;
  double transform_gap = 0;
  bool shapes_ok = true;
  for ( unsigned i = 0; i < nets; ++i )
  {
    auto const net = netsim::random_network( rng.next_u64(), 3, 2, 4, 2 );
    auto const o2s = netsim::output_to_synaptic( net );
    auto const s2o = netsim::synaptic_to_output( net );
    auto const round = netsim::synaptic_to_output( o2s );
    shapes_ok = shapes_ok && o2s.output_gates.empty() && s2o.synaptic_gates.empty() && round.synaptic_gates.empty();
    netsim::compiled_network a( net ), b( o2s ), c( s2o ), d( round );
    for ( unsigned s = 0; s < 5; ++s )
    {
      std::vector<double> in{ rng.uniform( -2, 2 ), rng.uniform( -2, 2 ), rng.uniform( -2, 2 ) };
      auto const ref = a.outputs( in );
      transform_gap = std::max( { transform_gap, max_gap( ref, b.outputs( in ) ), max_gap( ref, c.outputs( in ) ), max_gap( ref, d.outputs( in ) ) } );
    }
  }
  bool const transforms_ok = shapes_ok && transform_gap <= 1e-9;
  r.details["transforms"] = { { "networks", nets }, { "max_abs_gap", transform_gap }, { "verdict", transforms_ok } };

  double sm_gap = 0;
  for ( unsigned dim = 1; dim <= 5; ++dim )
  {
    netsim::compiled_network dot( netsim::build_sm_dot_product( dim ) );
    netsim::compiled_network dot_o( netsim::build_gated_dot_product( dim, netsim::gating_mode::output ) );
    netsim::compiled_network dot_s( netsim::build_gated_dot_product( dim, netsim::gating_mode::synaptic ) );
    netsim::compiled_network soft( netsim::build_sm_softmax( dim ) );
    netsim::compiled_network norm( netsim::build_sm_normalization( dim ) );
    for ( unsigned s = 0; s < 20; ++s )
    {
      std::vector<double> uv( 2 * dim ), z( dim );
      for ( auto& v : uv )
      {
        v = rng.uniform( 0.1, 5.0 );
      }
      for ( auto& v : z )
      {
        v = rng.uniform( -5.0, 5.0 );
      }
      double want = 0;
      for ( unsigned k = 0; k < dim; ++k )
      {
        want += uv[k] * uv[dim + k];
      }
      for ( auto* net : { &dot, &dot_o, &dot_s } )
      {
        sm_gap = std::max( sm_gap, std::abs( net->outputs( uv ).front() - want ) );
      }
      double const top = *std::max_element( z.begin(), z.end() );
      double zsum = 0, norm2 = 0;
      for ( unsigned k = 0; k < dim; ++k )
      {
        zsum += std::exp( z[k] - top );
        norm2 += uv[k] * uv[k];
      }
      std::vector<double> soft_want( dim ), norm_want( dim ), u( uv.begin(), uv.begin() + dim );
      for ( unsigned k = 0; k < dim; ++k )
      {
        soft_want[k] = std::exp( z[k] - top ) / zsum;
        norm_want[k] = uv[k] / std::sqrt( norm2 );
      }
      sm_gap = std::max( { sm_gap, max_gap( soft.outputs( z ), soft_want ), max_gap( norm.outputs( u ), norm_want ) } );
    }
  }
  bool const sm_ok = sm_gap <= 1e-9;
  r.details["sm_networks"] = { { "max_abs_gap", sm_gap }, { "verdict", sm_ok } };

  std::vector<double> xs;
  for ( int i = -40; i <= 40; ++i )
  {
    xs.push_back( i / 8.0 );
  }
  auto const relu = netsim::shape_activation( netsim::activation::identity, netsim::activation::heaviside, xs );
  auto const wedge = netsim::shape_activation( netsim::activation::identity, netsim::activation::sign, xs );
  bool shape_ok = true;
  for ( std::size_t i = 0; i < xs.size(); ++i )
  {
    shape_ok = shape_ok && relu[i] == netsim::apply_activation( netsim::activation::relu, xs[i] ) && wedge[i] == std::abs( xs[i] );
  }
  r.details["activation_shaping"] = { { "grid_points", xs.size() }, { "verdict", shape_ok } };
  r.verdict = transforms_ok && sm_ok && shape_ok;
  return r;
}

} // namespace

verify_level parse_level( std::string_view text )
{
  if ( text == "desk" )
  {
    return verify_level::desk;
  }
  if ( text == "quick" )
  {
    return verify_level::quick;
  }
  throw usage_error( "unknown level '" + std::string( text ) + "' (expected desk or quick)" );
}

criterion_result verify_criterion( unsigned id, verify_level level, std::uint64_t seed, unsigned jobs )
{
  switch ( id )
  {
  case 1:
    return enumeration( level );
  case 2:
    return composition( level, jobs );
  case 3:
    return table2( level, jobs );
  case 4:
    return decomposition();
  case 5:
    return synaptic( level );
  case 6:
    return multiplexing( level, seed );
  case 7:
    return embedding( level );
  case 8:
    return approximation();
  case 9:
    return transformer_checks( level, seed );
  case 10:
    return netsim_checks( level, seed );
  default:
    throw usage_error( "criterion must be in 1.." + std::to_string( criterion_count ) );
  }
}

std::vector<criterion_result> verify_all( verify_level level, std::uint64_t seed, unsigned jobs )
{
  std::vector<criterion_result> out;
  for ( unsigned id = 1; id <= criterion_count; ++id )
  {
    out.push_back( verify_criterion( id, level, seed, jobs ) );
  }
  return out;
}

} // namespace quarkcap::cli
