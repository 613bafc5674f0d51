// SPDX-License-Identifier: Apache-2.0
/* Acceptance suite: one PASS/FAIL line per criterion, exit code 1 if any fails. */
#include "oracle.hpp"

#include <quarkcap/boolfn/boolean_op.hpp>
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
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace quarkcap;
using boolfn::assignment;
using boolfn::encoding;
using boolfn::truth_table;
using threshold::poly_weights;

namespace
{

using word_set = std::set<std::uint64_t>;

word_set as_set( boolfn::function_class const& c )
{
  auto const w = c.words();
  return { w.begin(), w.end() };
}

/* sign of a margin certificate at a 0/1 point, straight from its terms */
int sign_at( poly_weights const& w, assignment x )
{
  rational s = 0;
  for ( auto const& [m, c] : w.terms() )
  {
    if ( ( x & m ) == m )
    {
      s += c;
    }
  }
  if ( sgn( s ) == 0 )
  {
    throw std::runtime_error( "certificate vanishes on the cube" );
  }
  return sgn( s );
}

std::vector<poly_weights> certificates( unsigned n )
{
  std::vector<poly_weights> out;
  for ( auto const& t : threshold::threshold_class( n, 1 ) )
  {
    out.push_back( *threshold::realize( t, 1 ) );
  }
  return out;
}

std::vector<rational> bits_of( assignment x, unsigned n )
{
  std::vector<rational> in;
  for ( unsigned b = 0; b < n; ++b )
  {
    in.emplace_back( static_cast<int>( ( x >> b ) & 1u ) );
  }
  return in;
}

struct check
{
  bool ok = true;
  std::ostringstream notes;
  void expect( bool cond, std::string const& what )
  {
    if ( !cond && ok )
    {
      notes << what;
    }
    ok = ok && cond;
  }
};

/* 1: enumeration fixtures */
void enumeration( check& c )
{
  std::vector<std::tuple<unsigned, unsigned, std::size_t>> const fixtures{ { 2, 1, 14 }, { 1, 1, 4 }, { 3, 1, 104 }, { 4, 1, 1882 }, { 2, 2, 16 } };
  for ( auto [n, d, count] : fixtures )
  {
    auto const& cls = threshold::threshold_class( n, d );
    c.expect( cls.size() == count, "count T(" + std::to_string( n ) + ";" + std::to_string( d ) + ")" );
    auto const oracle_set = d == 1 ? oracle::ltf_words( n, 3 ) : oracle::quadratic_words( n, 2 );
    c.expect( as_set( cls ) == oracle_set, "oracle set T(" + std::to_string( n ) + ";" + std::to_string( d ) + ")" );
  }
}

/* 2: composition bounds for the ten irreducible binary operators */
void composition( check& c )
{
  for ( unsigned n = 2; n <= 3; ++n )
  {
    auto const small = oracle::ltf_words( n - 1, 3 ).size();
    auto const full = oracle::ltf_words( n, 3 );
    for ( auto const& op : gating::irreducible_binary_ops() )
    {
      gating::composition_spec s;
      s.op = op;
      s.degrees = { 1, 1 };
      s.n = n;
      auto const cls = gating::compose_class( s );
      auto const expected = oracle::compose( static_cast<unsigned>( op.table() ), full, full, n );
      c.expect( as_set( cls ) == expected, "class mismatch for " + op.name() );
      c.expect( small * small <= cls.size() && cls.size() <= full.size() * full.size(), "bounds for " + op.name() );
    }
  }
}

/* 3: Table 2 identities */
void table2( check& c )
{
  for ( unsigned n = 2; n <= 3; ++n )
  {
    auto const t = oracle::ltf_words( n, 3 );
    c.expect( oracle::compose( 0b1000, t, t, n ).size() == oracle::compose( 0b1110, t, t, n ).size(), "|AND| = |OR|" );
    c.expect( oracle::compose( 0b0110, t, t, n ) == oracle::compose( 0b1001, t, t, n ), "XOR = NXOR" );
    auto const r = gating::table2_report( n );
    c.expect( r.and_equals_or && r.xor_equals_nxor, "table2 flags" );
    c.expect( r.ltg_count == 14 && r.irreducible_count == 10, "table2 counts" );
  }
  auto const t2 = oracle::ltf_words( 2, 3 );
  unsigned ltg = 0, irreducible = 0;
  for ( std::uint64_t table = 0; table < 16; ++table )
  {
    ltg += t2.count( table );
    bool const on_p = ( ( table >> 0 ) & 1 ) != ( ( table >> 1 ) & 1 ) || ( ( table >> 2 ) & 1 ) != ( ( table >> 3 ) & 1 );
    bool const on_q = ( ( table >> 0 ) & 1 ) != ( ( table >> 2 ) & 1 ) || ( ( table >> 1 ) & 1 ) != ( ( table >> 3 ) & 1 );
    irreducible += on_p && on_q;
    c.expect( boolfn::is_irreducible( boolfn::boolean_op( 2, table ) ) == ( on_p && on_q ), "irreducibility" );
  }
  c.expect( ltg == 14 && irreducible == 10, "14 LTG, 10 irreducible" );
}

/* 4: product decomposition */
void decomposition( check& c )
{
  for ( unsigned n = 1; n <= 3; ++n )
  {
    for ( std::uint64_t w = 0; w < ( std::uint64_t{ 1 } << ( 1u << n ) ); ++w )
    {
      for ( auto enc : { encoding::zero_one, encoding::plus_minus } )
      {
        auto const t = truth_table::from_word( n, w, enc );
        auto const d = constructs::product_decomposition( t );
        c.expect( d.factors.size() == t.size() - t.count_ones(), "factor count" );
        for ( assignment x = 0; x < t.size(); ++x )
        {
          /* 0/1 product of heaviside outputs, -/+ product of sign outputs */
          int prod = 1;
          for ( auto const& f : d.factors )
          {
            int const s = sign_at( f, x );
            prod *= enc == encoding::zero_one ? ( s > 0 ) : s;
          }
          c.expect( prod == t.value( x ), "product at " + t.to_string() );
        }
      }
    }
  }
  auto const x = truth_table::from_bits( { 0, 1, 1, 0 } );
  auto const d = constructs::product_decomposition( x );
  std::set<std::string> factors;
  for ( auto const& f : d.factors )
  {
    factors.insert( threshold::tabulate( f, threshold::threshold_kind::sign ).to_values_string() );
  }
  c.expect( factors == std::set<std::string>{ "(-1,1,1,1)", "(1,1,1,-1)" }, "XOR factors are OR and NAND" );
  c.expect( constructs::multiply_factors( d.factors, 2, encoding::plus_minus ).to_values_string() == "(-1,1,1,-1)", "XOR product" );
}

/* 5: full synaptic gating */
void synaptic( check& c )
{
  using threshold::threshold_kind;
  for ( unsigned n = 2; n <= 3; ++n )
  {
    auto const certs = certificates( n );
    /* matched -/+ encodings: sign(g p_f) = f g, checked directly */
    for ( auto const& f : certs )
    {
      for ( auto const& g : certs )
      {
        for ( assignment x = 0; x < ( assignment{ 1 } << n ); ++x )
        {
          int const gx = sign_at( g, x );
          rational s = 0;
          for ( auto const& [m, coef] : f.terms() )
          {
            if ( ( x & m ) == m )
            {
              s += gx * coef;
            }
          }
          c.expect( sgn( s ) == sign_at( f, x ) * gx, "sign(g p_f) = f g" );
        }
      }
    }
    for ( auto fk : { threshold_kind::sign, threshold_kind::heaviside } )
    {
      for ( auto gk : { threshold_kind::sign, threshold_kind::heaviside } )
      {
        auto const r = gating::full_synaptic_gating_check( n, 1, fk, gk );
        c.expect( r.verdict() && r.pairs == certs.size() * certs.size(), "synaptic check" );
      }
    }
    c.expect( certs.size() == ( n == 2 ? 14u : 104u ), "pair count" );
  }
}

/* 6: corner separators and multiplexing */
void multiplexing( check& c )
{
  for ( unsigned n = 1; n <= 6; ++n )
  {
    for ( assignment corner = 0; corner < ( assignment{ 1 } << n ); ++corner )
    {
      for ( auto cube : { encoding::zero_one, encoding::plus_minus } )
      {
        for ( auto [m, k] : { std::pair{ 1, 0 }, std::pair{ 1, 1 }, std::pair{ 3, 2 } } )
        {
          auto const s = constructs::make_corner_separator( n, corner, m, k, cube );
          for ( assignment x = 0; x < ( assignment{ 1 } << n ); ++x )
          {
            rational v = 0;
            if ( cube == encoding::zero_one )
            {
              v = s.weights.value( x );
            }
            else
            {
              v = constructs::value_on_pm_cube( s.weights, x );
            }
            c.expect( x == corner ? v == k : v <= -m, "corner margin" );
          }
        }
      }
    }
  }

  /* each hidden unit depends on its own gate only, so every (position, gate) pair covers all tuples */
  using constructs::addressing;
  using constructs::readout;
  std::mt19937_64 rng( 0 );
  for ( unsigned n = 1; n <= 3; ++n )
  {
    auto const certs = certificates( n );
    for ( unsigned m = 1; m <= 4; ++m )
    {
      for ( auto addr : { addressing::dense, addressing::sparse } )
      {
        for ( auto [mask, ro] : { std::pair{ false, readout::or_op }, std::pair{ true, readout::and_op }, std::pair{ true, readout::product } } )
        {
          for ( unsigned j = 0; j < m; ++j )
          {
            for ( auto const& f : certs )
            {
              std::vector<poly_weights> fs( m );
              for ( auto& g : fs )
              {
                g = certs[rng() % certs.size()];
              }
              fs[j] = f;
              auto const mx = constructs::build_multiplex( fs, addr, std::vector<bool>( m, mask ), ro );
              for ( unsigned i = 0; i < m; ++i )
              {
                for ( assignment xp = 0; xp < ( assignment{ 1 } << n ); ++xp )
                {
                  auto const x = mx.extended( i, xp );
                  auto const h = mx.hidden_outputs( x );
                  c.expect( h[j] == ( i == j ? sign_at( f, xp ) : ( mask ? 1 : -1 ) ), "hidden unit value" );
                  if ( i == j )
                  {
                    c.expect( mx.output( x ) == sign_at( f, xp ), "readout value" );
                  }
                }
              }
            }
          }
          /* the network form on a few seeded tuples */
          for ( int trial = 0; trial < 4; ++trial )
          {
            std::vector<poly_weights> fs( m );
            for ( auto& g : fs )
            {
              g = certs[rng() % certs.size()];
            }
            auto const mx = constructs::build_multiplex( fs, addr, std::vector<bool>( m, mask ), ro );
            netsim::compiled_network net( mx.to_network() );
            for ( unsigned i = 0; i < m; ++i )
            {
              for ( assignment xp = 0; xp < ( assignment{ 1 } << n ); ++xp )
              {
                auto const x = mx.extended( i, xp );
                c.expect( net.evaluate_exact( bits_of( x, mx.arity() ) ).outputs.front() == sign_at( fs[i], xp ), "network value" );
              }
            }
          }
        }
      }
    }
  }

  /* injectivity at n = 2, m = 2 */
  auto const certs = certificates( 2 );
  for ( auto [mask, ro] : { std::pair{ false, readout::or_op }, std::pair{ true, readout::and_op } } )
  {
    std::set<truth_table> images;
    for ( auto const& f0 : certs )
    {
      for ( auto const& f1 : certs )
      {
        images.insert( constructs::build_multiplex( { f0, f1 }, addressing::dense, { mask, mask }, ro ).table() );
      }
    }
    c.expect( images.size() == certs.size() * certs.size(), "multiplexing map injective" );
  }
}

/* 7: composition embedding and intersection witnesses */
void embedding( check& c )
{
  for ( unsigned nx = 1; nx <= 2; ++nx )
  {
    auto const certs = certificates( nx );
    for ( auto const& op : gating::irreducible_binary_ops() )
    {
      for ( auto const& f0 : certs )
      {
        for ( auto const& f1 : certs )
        {
          auto const e = constructs::composition_embedding( op, { f0, f1 } );
          for ( unsigned i = 0; i < 2; ++i )
          {
            for ( assignment x = 0; x < ( assignment{ 1 } << nx ); ++x )
            {
              auto const z = constructs::unit_code( i ) | ( x << 1 );
              std::uint64_t args = 0;
              for ( unsigned a = 0; a < 2; ++a )
              {
                args |= std::uint64_t( sign_at( e.F[a], z ) > 0 ) << a;
              }
              int const expected = sign_at( i == 0 ? f0 : f1, x );
              c.expect( ( op.apply( args ) ? 1 : -1 ) == expected, "embedding identity for " + op.name() );
            }
          }
        }
      }
    }
  }
  auto const w = gating::intersection_witnesses( 2, 1, 1 );
  auto const t = oracle::ltf_words( 2, 3 );
  c.expect( w.witnesses.size() == 16 && w.distinct, "witness count" );
  for ( auto const& op : gating::irreducible_binary_ops() )
  {
    auto const cls = oracle::compose( static_cast<unsigned>( op.table() ), t, t, 2 );
    for ( auto const& wt : w.witnesses )
    {
      c.expect( cls.count( wt.word() ) == 1, "witness in T_" + op.name() );
    }
  }
}

/* 8: slice approximator */
void approximation( check& c )
{
  unsigned const grid = 10000;
  auto const sup = []( constructs::slice_approximator const& sa, std::function<double( double )> const& f ) {
    double e = 0;
    for ( unsigned i = 0; i < grid; ++i )
    {
      double const x = static_cast<double>( i ) / ( grid - 1 );
      e = std::max( e, std::abs( sa.evaluate( x ) - f( x ) ) );
    }
    return e;
  };
  auto const id = []( double x ) { return x; };
  auto const sq = []( double x ) { return x * x; };
  auto const lin_id = constructs::build_slice_approximator( constructs::sample_function( id, 10 ), constructs::slice_variant::linear );
  auto const lin_sq = constructs::build_slice_approximator( constructs::sample_function( sq, 10 ), constructs::slice_variant::linear );
  c.expect( sup( lin_id, id ) == 0.0, "identity exact" );
  c.expect( sup( lin_sq, sq ) <= 0.0025 + 1e-9, "square within 0.0025" );
  netsim::compiled_network net( lin_sq.to_network() );
  double gap = 0;
  for ( unsigned i = 0; i < grid; ++i )
  {
    double const x = static_cast<double>( i ) / ( grid - 1 );
    std::vector<double> in{ x };
    gap = std::max( gap, std::abs( net.outputs( in ).front() - lin_sq.evaluate( x ) ) );
  }
  c.expect( gap <= 1e-12, "network agrees with closed form" );
}

/* 9: transformer encoder */
void transformer_check( check& c )
{
  using namespace quarkcap::transformer;
  for ( unsigned n = 1; n <= 6; ++n )
  {
    for ( unsigned m = 1; m <= 8; ++m )
    {
      encoder enc( random_config( 1000 + 10 * n + m, n, 2, m ) );
      auto const r = enc.forward( random_tokens( n + m, n, 2 ) );
      c.expect( r.trace.output_gating_ops == std::uint64_t{ m } * n * n && r.trace.synaptic_gating_ops == std::uint64_t{ n } * n, "op counts" );
    }
  }
  for ( std::uint64_t seed = 0; seed < 100; ++seed )
  {
    unsigned const n = 1 + seed % 6, d = 1 + seed % 4, m = 1 + seed % 5;
    auto const cfg = random_config( seed, n, d, m );
    auto const x = random_tokens( seed + 7777, n, d );
    auto const got = encoder( cfg ).forward( x ).outputs;
    auto const expected = oracle::attention( cfg.w_q, cfg.w_k, cfg.w_v, x );
    for ( unsigned l = 0; l < n; ++l )
    {
      for ( unsigned a = 0; a < m; ++a )
      {
        c.expect( std::abs( got[l][a] - expected[l][a] ) <= 1e-9, "oracle agreement" );
      }
    }
  }
  for ( unsigned n = 1; n <= 4; ++n )
  {
    encoder enc( random_config( 40 + n, n, 3, 2 ) );
    auto const x = random_tokens( 50 + n, n, 3 );
    std::vector<unsigned> perm( n );
    std::iota( perm.begin(), perm.end(), 0u );
    do
    {
      c.expect( enc.permutation_check( x, perm ), "equivariance" );
    } while ( std::next_permutation( perm.begin(), perm.end() ) );
  }
  encoder enc( random_config( 60, 3, 3, 2 ) );
  auto const x = random_tokens( 61, 3, 3 );
  tokens offsets;
  for ( unsigned i = 0; i < 3; ++i )
  {
    offsets.push_back( { std::sin( i + 1.0 ), std::sin( 2 * i + 1.0 ), std::sin( 3 * i + 1.0 ) } );
  }
  std::vector<unsigned> perm{ 0, 1, 2 };
  while ( std::next_permutation( perm.begin(), perm.end() ) )
  {
    c.expect( !enc.permutation_check( x, perm, offsets ), "offsets break equivariance" );
  }
}

/* 10: netsim equivalences */
void netsim_check( check& c )
{
  std::mt19937_64 rng( 10 );
  std::uniform_real_distribution<double> u( -2, 2 ), pos( 0.1, 3 );
  auto const close = []( double a, double b ) { return std::abs( a - b ) <= 1e-9 * std::max( 1.0, std::abs( b ) ); };
  for ( std::uint64_t seed = 0; seed < 100; ++seed )
  {
    auto const net = netsim::random_network( seed, 3, 3, 4, 2 );
    netsim::compiled_network c0( net ), c1( netsim::output_to_synaptic( net ) ), c2( netsim::synaptic_to_output( net ) ),
        c3( netsim::synaptic_to_output( netsim::output_to_synaptic( net ) ) );
    for ( int k = 0; k < 5; ++k )
    {
      std::vector<double> x{ u( rng ), u( rng ), u( rng ) };
      auto const y = c0.outputs( x );
      for ( auto const* other : { &c1, &c2, &c3 } )
      {
        auto const z = other->outputs( x );
        for ( std::size_t i = 0; i < y.size(); ++i )
        {
          c.expect( close( z[i], y[i] ), "transform preserves I/O" );
        }
      }
    }
  }
  for ( unsigned dim = 1; dim <= 5; ++dim )
  {
    for ( int trial = 0; trial < 10; ++trial )
    {
      std::vector<double> uv( 2 * dim ), s( dim );
      for ( auto& v : uv )
      {
        v = pos( rng );
      }
      for ( auto& v : s )
      {
        v = u( rng );
      }
      double dot = 0, z = 0, norm = 0;
      for ( unsigned i = 0; i < dim; ++i )
      {
        dot += uv[i] * uv[dim + i];
        z += std::exp( s[i] );
        norm += uv[i] * uv[i];
      }
      c.expect( close( netsim::evaluate( netsim::build_sm_dot_product( dim ), uv ).outputs.front(), dot ), "SM dot product" );
      for ( auto mode : { netsim::gating_mode::output, netsim::gating_mode::synaptic } )
      {
        c.expect( close( netsim::evaluate( netsim::build_gated_dot_product( dim, mode ), uv ).outputs.front(), dot ), "gated dot product" );
      }
      auto const sm = netsim::evaluate( netsim::build_sm_softmax( dim ), s ).outputs;
      std::vector<double> head( uv.begin(), uv.begin() + dim );
      auto const nr = netsim::evaluate( netsim::build_sm_normalization( dim ), head ).outputs;
      for ( unsigned i = 0; i < dim; ++i )
      {
        c.expect( close( sm[i], std::exp( s[i] ) / z ), "softmax" );
        c.expect( close( nr[i], uv[i] / std::sqrt( norm ) ), "normalization" );
      }
    }
  }
  std::vector<double> xs;
  for ( int i = -16; i <= 16; ++i )
  {
    xs.push_back( i / 8.0 );
  }
  auto const relu = netsim::shape_activation( netsim::activation::heaviside, netsim::activation::identity, xs );
  auto const wedge = netsim::shape_activation( netsim::activation::identity, netsim::activation::sign, xs );
  for ( std::size_t i = 0; i < xs.size(); ++i )
  {
    c.expect( relu[i] == std::max( 0.0, xs[i] ), "ReLU shape" );
    c.expect( wedge[i] == std::abs( xs[i] ), "wedge shape" );
  }
}

/* 11: byte-identical reports from two runs of the same command */
void determinism( check& c )
{
  auto const path = ( std::filesystem::temp_directory_path() / "quarkcap_acceptance_report.json" ).string();
  std::string const cmd = std::string( "\"" ) + QUARKCAP_TOOL + "\" --seed 0 --out \"" + path + "\" verify all --level desk 2>/dev/null";
  auto const run_once = [&] {
    std::remove( path.c_str() );
    c.expect( std::system( cmd.c_str() ) == 0, "verify all exits 0" );
    std::ifstream is( path, std::ios::binary );
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
  };
  auto const first = run_once();
  auto const second = run_once();
  c.expect( !first.empty(), "no report written" );
  c.expect( first == second, "reports differ" );
  std::remove( path.c_str() );
}

} // namespace

int main()
{
  std::vector<std::pair<std::string, std::function<void( check& )>>> const criteria{
      { "enumeration fixtures", enumeration },
      { "composition bounds", composition },
      { "binary composition identities", table2 },
      { "product decomposition", decomposition },
      { "full synaptic gating", synaptic },
      { "corner separators and multiplexing", multiplexing },
      { "composition embedding", embedding },
      { "slice approximation", approximation },
      { "transformer encoder", transformer_check },
      { "netsim equivalences", netsim_check },
      { "determinism", determinism } };

  bool all = true;
  for ( std::size_t i = 0; i < criteria.size(); ++i )
  {
    check c;
    auto const start = std::chrono::steady_clock::now();
    try
    {
      criteria[i].second( c );
    }
    catch ( std::exception const& ex )
    {
      c.expect( false, std::string( "exception: " ) + ex.what() );
    }
    double const secs = std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();
    std::printf( "criterion %zu: %s  %s (%.2f s)%s%s\n", i + 1, c.ok ? "PASS" : "FAIL", criteria[i].first.c_str(), secs, c.ok ? "" : "  first failure: ",
                 c.notes.str().c_str() );
    std::fflush( stdout );
    all = all && c.ok;
  }
  return all ? 0 : 1;
}
