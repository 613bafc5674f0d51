// SPDX-License-Identifier: Apache-2.0
#include <quarkcap/cli/commands.hpp>
#include <quarkcap/cli/verify.hpp>
#include <quarkcap/common/error.hpp>
#include <quarkcap/common/random.hpp>
#include <quarkcap/constructs/approximator.hpp>
#include <quarkcap/constructs/decomposition.hpp>
#include <quarkcap/constructs/embedding.hpp>
#include <quarkcap/constructs/multiplex.hpp>
#include <quarkcap/gating/composition.hpp>
#include <quarkcap/gating/layer.hpp>
#include <quarkcap/gating/synaptic.hpp>
#include <quarkcap/netsim/evaluate.hpp>
#include <quarkcap/netsim/io.hpp>
#include <quarkcap/threshold/threshold.hpp>
#include <quarkcap/transformer/encoder.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <numeric>
#include <sstream>

namespace quarkcap::cli
{

namespace
{

using boolfn::assignment;
using boolfn::encoding;
using boolfn::truth_table;
using threshold::poly_weights;

std::vector<unsigned> parse_degrees( std::string const& text )
{
  std::vector<unsigned> out;
  std::stringstream ss( text );
  std::string item;
  while ( std::getline( ss, item, ',' ) )
  {
    try
    {
      std::size_t used = 0;
      auto const v = std::stoul( item, &used );
      if ( used != item.size() )
      {
        throw std::invalid_argument( item );
      }
      out.push_back( static_cast<unsigned>( v ) );
    }
    catch ( std::exception const& )
    {
      throw usage_error( "bad degree list '" + text + "'" );
    }
  }
  if ( out.empty() )
  {
    throw usage_error( "empty degree list" );
  }
  return out;
}

std::string degree_list( std::vector<unsigned> const& ds )
{
  std::string s;
  for ( std::size_t i = 0; i < ds.size(); ++i )
  {
    s += ( i ? "," : "" ) + std::to_string( ds[i] );
  }
  return s;
}

/* canonical form, or a value list such as "0,1,1,0" or "(-1,1,1,-1)" */
truth_table parse_table( std::string const& text )
{
  if ( text.find( "bits:" ) != std::string::npos )
  {
    return truth_table::parse( text );
  }
  std::string body;
  for ( auto ch : text )
  {
    if ( ch != '(' && ch != ')' && ch != ' ' )
    {
      body += ch;
    }
  }
  std::vector<int> values;
  std::stringstream ss( body );
  std::string item;
  bool pm = false;
  while ( std::getline( ss, item, ',' ) )
  {
    if ( item != "0" && item != "1" && item != "-1" && item != "+1" )
    {
      throw usage_error( "bad truth-table value '" + item + "'" );
    }
    values.push_back( std::stoi( item ) );
    pm = pm || item == "-1";
  }
  return truth_table::from_values( values, pm ? encoding::plus_minus : encoding::zero_one );
}

json weights_json( poly_weights const& w )
{
  json j = json::object();
  for ( auto const& [mono, c] : w.terms() )
  {
    std::string key = "bias";
    if ( mono != 0 )
    {
      key.clear();
      for ( unsigned i = 0; i < 32; ++i )
      {
        if ( ( mono >> i ) & 1u )
        {
          key += ( key.empty() ? "x" : "*x" ) + std::to_string( i + 1 );
        }
      }
    }
    j[key] = quarkcap::to_string( c );
  }
  return j;
}

std::optional<std::uint64_t> capped_product( std::vector<std::uint64_t> const& xs )
{
  std::uint64_t p = 1;
  for ( auto x : xs )
  {
    if ( x != 0 && p > ~std::uint64_t{ 0 } / x )
    {
      return std::nullopt;
    }
    p *= x;
  }
  return p;
}

/* network output for a 0/1 assignment, exactly */
rational exact_output( netsim::compiled_network const& net, assignment x, unsigned n )
{
  std::vector<rational> in;
  for ( unsigned i = 0; i < n; ++i )
  {
    in.emplace_back( static_cast<int>( ( x >> i ) & 1u ) );
  }
  return net.evaluate_exact( in ).outputs.back();
}

void emit_network( netsim::gating_network const& net, global_options const& g, outcome& o )
{
  if ( !g.out.empty() )
  {
    netsim::save_network( net, g.out );
    o.results["network_file"] = g.out;
    o.out_consumed = true;
  }
  else
  {
    o.results["network"] = netsim::to_json( net );
  }
}

std::vector<poly_weights> random_ltfs( std::uint64_t seed, unsigned n, unsigned count )
{
  auto const& cls = threshold::threshold_class( n, 1 );
  std::vector<truth_table> members( cls.begin(), cls.end() );
  counter_rng rng( seed, "construct.base" );
  std::vector<poly_weights> out;
  for ( unsigned i = 0; i < count; ++i )
  {
    auto const& t = members[static_cast<std::size_t>( rng.uniform_int( 0, static_cast<std::int64_t>( members.size() ) - 1 ) )];
    out.push_back( *threshold::realize( t, 1 ) );
  }
  return out;
}

std::optional<poly_weights> realize_low_degree( truth_table const& t )
{
  for ( unsigned d = 1; d <= std::max( 1u, t.arity() ); ++d )
  {
    if ( auto w = threshold::realize( t.reencoded( encoding::plus_minus ), d ) )
    {
      return w;
    }
  }
  return std::nullopt;
}

/* B(z0, z1) on -/+ values as c0 + c1 z0 + c2 z1 + c3 z0 z1 */
std::array<rational, 4> fourier( boolfn::boolean_op const& op )
{
  std::array<rational, 4> c;
  for ( unsigned s = 0; s < 4; ++s )
  {
    rational acc = 0;
    for ( unsigned e = 0; e < 4; ++e )
    {
      int const v = op.apply( e ) ? 1 : -1;
      int const z0 = ( e & 1u ) ? 1 : -1, z1 = ( e & 2u ) ? 1 : -1;
      int const chi = ( ( s & 1u ) ? z0 : 1 ) * ( ( s & 2u ) ? z1 : 1 );
      acc += v * chi;
    }
    c[s] = acc / 4;
  }
  return c;
}

netsim::gating_network embedding_network( constructs::embedding_tuple const& e, unsigned n )
{
  netsim::gating_network net;
  for ( unsigned i = 0; i < n; ++i )
  {
    net.add_input( "x" + std::to_string( i + 1 ) );
  }
  for ( unsigned j = 0; j < e.F.size(); ++j )
  {
    if ( e.F[j].degree() > 1 )
    {
      throw usage_error( "network form needs affine extended functions" );
    }
    auto const id = "F" + std::to_string( j );
    net.add_neuron( id, netsim::activation::sign, e.F[j].bias() );
    for ( unsigned i = 0; i < n; ++i )
    {
      auto const w = e.F[j].coeff( threshold::monomial{ 1 } << i );
      if ( w != 0 )
      {
        net.add_edge( "x" + std::to_string( i + 1 ), id, w );
      }
    }
  }
  auto const c = fourier( e.op );
  net.add_neuron( "F0F1" );
  net.add_edge( "F0", "F0F1" );
  net.add_output_gate( "F1", "F0F1" );
  net.add_neuron( "out", netsim::activation::sign, c[0] );
  net.add_edge( "F0", "out", c[1] );
  net.add_edge( "F1", "out", c[2] );
  net.add_edge( "F0F1", "out", c[3] );
  net.add_output( "out" );
  return net;
}

std::function<double( double )> named_function( std::string const& name )
{
  if ( name == "identity" || name == "x" )
  {
    return []( double x ) { return x; };
  }
  if ( name == "square" || name == "x2" )
  {
    return []( double x ) { return x * x; };
  }
  if ( name == "sin" )
  {
    return []( double x ) { return std::sin( 2 * std::numbers::pi * x ); };
  }
  if ( name == "sqrt" )
  {
    return []( double x ) { return std::sqrt( x ); };
  }
  if ( name == "abs" )
  {
    return []( double x ) { return std::abs( x - 0.5 ); };
  }
  throw usage_error( "unknown function '" + name + "' (identity, square, sin, sqrt, abs)" );
}

std::vector<std::string> split_csv_line( std::string const& line )
{
  std::vector<std::string> out;
  std::stringstream ss( line );
  std::string item;
  while ( std::getline( ss, item, ',' ) )
  {
    auto const b = item.find_first_not_of( " \t\r" );
    auto const e = item.find_last_not_of( " \t\r" );
    out.push_back( b == std::string::npos ? std::string() : item.substr( b, e - b + 1 ) );
  }
  return out;
}

template<typename Value>
json trace_json( netsim::gating_network const& net, netsim::eval_trace<Value> const& t )
{
  auto num = []( Value const& v ) -> json {
    if constexpr ( std::is_same_v<Value, double> )
    {
      return v;
    }
    else
    {
      return quarkcap::to_string( v );
    }
  };
  json s = json::object(), o = json::object();
  for ( std::size_t i = 0; i < net.neurons.size(); ++i )
  {
    s[net.neurons[i].id] = num( t.activation[i] );
    o[net.neurons[i].id] = num( t.output[i] );
  }
  return { { "output_gating_ops", t.output_gating_ops },
           { "synaptic_gating_ops", t.synaptic_gating_ops },
           { "output_gate_applications", t.output_gate_applications },
           { "synaptic_gate_applications", t.synaptic_gate_applications },
           { "activation", s },
           { "output", o },
           { "warnings", t.warnings } };
}

} // namespace

outcome cmd_enumerate( enumerate_args const& a, global_options const& g )
{
  threshold::enumeration_options opts;
  opts.strategy = threshold::parse_strategy( a.strategy );
  opts.weight_bound = a.weight_bound;
  opts.cross_check = a.cross_check;
  opts.seed = g.seed;
  opts.jobs = g.jobs;
  auto const cls = threshold::enumerate_class( a.n, a.d, opts );
  outcome o;
  auto const name = "T(" + std::to_string( a.n ) + ";" + std::to_string( a.d ) + ")";
  o.results = class_summary( name, cls, { a.d } );
  o.results["strategy"] = a.strategy;
  if ( a.members || g.csv || !g.out.empty() )
  {
    json members = json::array();
    table t{ { "table", "certificate" }, {} };
    for ( auto const& f : cls )
    {
      auto const w = threshold::realize( f, a.d );
      if ( !w )
      {
        throw internal_error( "member without a certificate: " + f.to_string() );
      }
      auto const cert = weights_json( *w );
      members.push_back( { { "table", f.to_string() }, { "certificate", cert } } );
      t.rows.push_back( { f.to_string(), cert.dump() } );
    }
    if ( !g.out.empty() )
    {
      json file;
      file["schema"] = schema_tag;
      file["class"] = name;
      file["n"] = a.n;
      file["d"] = a.d;
      file["exact_count"] = cls.size();
      file["members"] = members;
      write_text( g.out, file.dump( 2 ) + "\n" );
      o.results["class_file"] = g.out;
      o.out_consumed = true;
    }
    if ( a.members )
    {
      o.results["members"] = members;
    }
    o.csv = std::move( t );
  }
  return o;
}

outcome cmd_compose( compose_args const& a, global_options const& g )
{
  auto const enc = boolfn::parse_encoding( a.encoding );
  auto const op = boolfn::boolean_op::parse( a.b, enc );
  auto const degrees = parse_degrees( a.degrees );
  gating::composition_spec spec{ op, degrees, a.n, enc };
  auto const cls = gating::compose_class( spec, g.jobs );
  outcome o;
  o.results = class_summary( "T_" + op.name() + "(" + std::to_string( a.n ) + ";" + degree_list( degrees ) + ")", cls, degrees );
  o.results["b"] = op.name();
  o.results["encoding"] = boolfn::to_string( enc );
  std::vector<std::uint64_t> ups, lows;
  for ( auto d : degrees )
  {
    ups.push_back( threshold::threshold_class( a.n, d ).size() );
  }
  auto const upper = capped_product( ups );
  bool const has_lower = boolfn::is_irreducible( op ) && a.n >= op.arity();
  std::optional<std::uint64_t> lower;
  if ( has_lower )
  {
    for ( auto d : degrees )
    {
      lows.push_back( threshold::threshold_class( a.n - op.arity() + 1, d ).size() );
    }
    lower = capped_product( lows );
  }
  o.results["lower"] = lower ? json( *lower ) : json( nullptr );
  o.results["upper"] = upper ? json( *upper ) : json( nullptr );
  o.verdict = ( !upper || cls.size() <= *upper ) && ( !lower || *lower <= cls.size() );
  o.results["verdict"] = o.verdict;
  table t{ { "table" }, {} };
  for ( auto const& f : cls )
  {
    t.rows.push_back( { f.to_string() } );
  }
  o.csv = std::move( t );
  return o;
}

outcome cmd_table2( unsigned n, global_options const& g )
{
  auto const rep = gating::table2_report( n, g.jobs );
  outcome o;
  json rows = json::array();
  table t{ { "b", "table", "irreducible", "symmetric", "ltg_implementable", "exact_count", "capacity_bits", "equals_single_class" }, {} };
  for ( auto const& r : rep.rows )
  {
    auto const cap = capacity_string( r.capacity );
    rows.push_back( { { "b", r.op.name() },
                      { "table", r.op.table() },
                      { "irreducible", r.irreducible },
                      { "symmetric", r.symmetric },
                      { "ltg_implementable", r.ltg_implementable },
                      { "exact_count", r.count },
                      { "capacity_bits", cap },
                      { "equals_single_class", r.equals_single_class } } );
    t.rows.push_back( { r.op.name(), std::to_string( r.op.table() ), r.irreducible ? "true" : "false", r.symmetric ? "true" : "false",
                        r.ltg_implementable ? "true" : "false", std::to_string( r.count ), cap, r.equals_single_class ? "true" : "false" } );
  }
  json pairs = json::array();
  for ( auto const& [op, count] : rep.pair_counts )
  {
    pairs.push_back( { { "b", op.name() }, { "negated", op.negated().name() }, { "union_count", count }, { "capacity_bits", capacity_string( std::log2( static_cast<double>( count ) ) ) } } );
  }
  o.results["n"] = n;
  o.results["rows"] = rows;
  o.results["pair_unions"] = pairs;
  o.results["irreducible_count"] = rep.irreducible_count;
  o.results["symmetric_count"] = rep.symmetric_count;
  o.results["ltg_implementable_count"] = rep.ltg_count;
  o.results["and_equals_or"] = rep.and_equals_or;
  o.results["xor_equals_nxor"] = rep.xor_equals_nxor;
  o.results["single_class_in_and_or"] = rep.single_class_in_and_or;
  o.verdict = rep.and_equals_or && rep.xor_equals_nxor && rep.irreducible_count == 10 && rep.ltg_count == 14 && rep.single_class_in_and_or;
  o.results["verdict"] = o.verdict;
  o.csv = std::move( t );
  return o;
}

outcome cmd_verify( verify_args const& a, global_options const& g )
{
  outcome o;
  auto const degrees = parse_degrees( a.degrees );
  if ( a.what == "composition" )
  {
    auto const op = boolfn::boolean_op::parse( a.b );
    auto const rep = gating::verify_composition_bounds( { op, degrees, a.n, encoding::plus_minus }, g.jobs );
    o.results = { { "class", "T_" + op.name() + "(" + std::to_string( a.n ) + ";" + degree_list( degrees ) + ")" },
                  { "n", a.n },
                  { "degrees", degrees },
                  { "exact_count", rep.exact },
                  { "capacity_bits", capacity_string( std::log2( static_cast<double>( rep.exact ) ) ) },
                  { "lower", rep.lower },
                  { "upper", rep.upper },
                  { "verdict", rep.verdict } };
    o.verdict = rep.verdict;
  }
  else if ( a.what == "synaptic" )
  {
    auto const fk = threshold::parse_threshold_kind( a.f_kind );
    auto const gk = threshold::parse_threshold_kind( a.g_kind );
    auto const rep = gating::full_synaptic_gating_check( a.n, degrees.front(), fk, gk );
    json ces = json::array();
    for ( auto const& c : rep.counterexamples )
    {
      ces.push_back( { { "f", c.f.to_string() }, { "g", c.g.to_string() }, { "x", c.x }, { "expected", c.expected }, { "actual", c.actual } } );
    }
    o.results = { { "n", a.n },
                  { "d", degrees.front() },
                  { "f_kind", threshold::to_string( fk ) },
                  { "g_kind", threshold::to_string( gk ) },
                  { "pairs", rep.pairs },
                  { "points_checked", rep.points_checked },
                  { "gated_off_points", rep.gated_off_points },
                  { "counterexamples", ces },
                  { "verdict", rep.verdict() } };
    o.verdict = rep.verdict();
  }
  else if ( a.what == "single-weight" )
  {
    if ( a.gated_index == 0 || a.gated_index > a.n )
    {
      throw usage_error( "--index must be in 1..n" );
    }
    auto const rep = gating::single_weight_gating_class( a.n, a.gated_index - 1 );
    o.results = class_summary( "single-weight gated T(" + std::to_string( a.n ) + ";1)", rep.cls, { 1 } );
    o.results["gated_index"] = a.gated_index;
    o.results["weight_vectors"] = rep.weight_vectors;
    o.results["skipped_ambiguous"] = rep.skipped_ambiguous;
    o.results["lower"] = rep.single_count;
    o.results["upper"] = rep.single_count * rep.single_count;
    o.results["mode"] = "certified lower bound";
    o.results["contains_single_class"] = rep.contains_single_class;
    o.results["verdict"] = rep.verdict();
    o.verdict = rep.verdict();
  }
  else if ( a.what == "layer" )
  {
    auto const rep = gating::layer_output_gating_class( a.n, a.m, a.sample, g.seed );
    o.results = class_summary( "T(" + std::to_string( a.n ) + "," + std::to_string( a.m ) + ",1;x)", rep.cls, { 1 } );
    o.results["m"] = a.m;
    o.results["mode"] = rep.exact ? "exact" : "sampled lower bound";
    if ( !rep.exact )
    {
      /* the sampled class is only part of the true class */
      o.results.erase( "exact_count" );
      o.results.erase( "capacity_bits" );
      o.results["sampled_count"] = rep.cls.size();
      o.results["samples"] = rep.samples;
    }
    o.results["gated_pair_count"] = rep.pair_count;
    o.results["hidden_maps"] = rep.hidden_maps;
    o.results["lower"] = rep.lower;
    o.results["upper"] = rep.upper;
    if ( rep.exact )
    {
      o.results["ungated_count"] = rep.ungated_count;
      o.results["ungated_subset"] = rep.ungated_subset;
      o.results["contains_gated_pair_class"] = rep.contains_pair_class;
    }
    o.results["multiplex_witnesses"] = { { "expected", rep.witness_expected }, { "distinct", rep.witness_distinct } };
    if ( rep.exact )
    {
      o.results["multiplex_witnesses"]["members"] = rep.witnesses_members;
    }
    o.results["verdict"] = rep.verdict;
    o.verdict = rep.verdict;
  }
  else if ( a.what == "intersection" )
  {
    if ( degrees.size() != 2 )
    {
      throw usage_error( "intersection needs two degrees" );
    }
    auto const rep = gating::intersection_witnesses( a.n, degrees[0], degrees[1] );
    json ws = json::array();
    for ( auto const& w : rep.witnesses )
    {
      ws.push_back( w.to_string() );
    }
    o.verdict = rep.distinct && rep.all_members && rep.embedding_agrees && rep.witnesses.size() == rep.expected;
    o.results = { { "n", a.n },
                  { "degrees", degrees },
                  { "expected", rep.expected },
                  { "exact_count", rep.witnesses.size() },
                  { "distinct", rep.distinct },
                  { "members_of_all_ten", rep.all_members },
                  { "embedding_agrees", rep.embedding_agrees },
                  { "witnesses", ws },
                  { "verdict", o.verdict } };
  }
  else if ( a.what == "closure" )
  {
    auto const rep = gating::product_closure( a.n, degrees.front(), std::max( 1u, a.m ) );
    json sizes = json::array();
    for ( auto const& c : rep.classes )
    {
      sizes.push_back( c.size() );
    }
    o.results = { { "n", a.n },
                  { "d", degrees.front() },
                  { "class_sizes", sizes },
                  { "saturated_at", rep.saturated_at ? json( *rep.saturated_at ) : json( nullptr ) },
                  { "claimed_bound", rep.claimed_bound },
                  { "exceeds_claimed_bound", rep.saturated_at && *rep.saturated_at > rep.claimed_bound } };
    o.verdict = rep.saturated_at.has_value();
    o.results["verdict"] = o.verdict;
  }
  else if ( a.what == "all" )
  {
    auto const level = parse_level( a.level );
    std::vector<criterion_result> results;
    if ( a.criterion != 0 )
    {
      results.push_back( verify_criterion( a.criterion, level, g.seed, g.jobs ) );
    }
    else
    {
      results = verify_all( level, g.seed, g.jobs );
    }
    json rows = json::array();
    table t{ { "criterion", "name", "verdict" }, {} };
    for ( auto const& r : results )
    {
      rows.push_back( { { "criterion", r.id }, { "name", r.name }, { "verdict", r.verdict }, { "details", r.details } } );
      t.rows.push_back( { std::to_string( r.id ), r.name, r.verdict ? "true" : "false" } );
      o.verdict = o.verdict && r.verdict;
    }
    o.results = { { "level", a.level }, { "criteria", rows }, { "verdict", o.verdict } };
    o.csv = std::move( t );
  }
  else
  {
    throw usage_error( "unknown verify target '" + a.what + "'" );
  }
  return o;
}

outcome cmd_construct( construct_args const& a, global_options const& g )
{
  outcome o;
  if ( a.what == "mux" )
  {
    auto const addr = constructs::parse_addressing( a.addressing );
    auto const ro = constructs::parse_readout( a.readout );
    bool const mask = ro != constructs::readout::or_op;
    if ( a.n == 0 || a.n > 4 )
    {
      throw usage_error( "mux base arity must be in 1..4" );
    }
    auto const fs = random_ltfs( g.seed, a.n, a.m );
    auto const mx = constructs::build_multiplex( fs, addr, std::vector<bool>( a.m, mask ), ro );
    netsim::compiled_network net( mx.to_network() );
    json bases = json::array();
    bool ok = true;
    for ( unsigned i = 0; i < a.m; ++i )
    {
      auto const t = threshold::tabulate( fs[i], threshold::threshold_kind::sign );
      bases.push_back( { { "table", t.to_string() }, { "certificate", weights_json( fs[i] ) }, { "code", mx.code( i ) } } );
      for ( assignment xp = 0; xp < t.size(); ++xp )
      {
        auto const x = mx.extended( i, xp );
        ok = ok && mx.output( x ) == t.value( xp ) && exact_output( net, x, mx.arity() ) == t.value( xp );
      }
    }
    o.results = { { "construct", "mux" },
                  { "m", a.m },
                  { "n_plus", a.n },
                  { "addressing", a.addressing },
                  { "readout", std::string( constructs::to_string( ro ) ) },
                  { "mask", mask },
                  { "attention_bits", mx.attention_bits },
                  { "base", bases },
                  { "table", mx.table().to_string() },
                  { "verdict", ok } };
    o.verdict = ok;
    emit_network( net.network(), g, o );
  }
  else if ( a.what == "product" || a.what == "xor" )
  {
    auto const t = a.what == "xor" ? truth_table::from_bits( { 0, 1, 1, 0 }, encoding::zero_one ) : parse_table( a.table );
    if ( t.arity() == 0 )
    {
      throw usage_error( "product decomposition needs at least one input" );
    }
    auto const d = constructs::product_decomposition( t );
    auto const network = constructs::product_network( d );
    netsim::compiled_network net( network );
    std::vector<int> values;
    for ( assignment x = 0; x < t.size(); ++x )
    {
      values.push_back( static_cast<int>( exact_output( net, x, t.arity() ).get_d() ) );
    }
    auto const realized = truth_table::from_values( values, t.enc() );
    json factors = json::array();
    for ( std::size_t i = 0; i < d.factors.size(); ++i )
    {
      auto const kind = t.enc() == encoding::zero_one ? threshold::threshold_kind::heaviside : threshold::threshold_kind::sign;
      factors.push_back( { { "off_point", d.off_set[i] }, { "table", threshold::tabulate( d.factors[i], kind ).to_values_string() }, { "certificate", weights_json( d.factors[i] ) } } );
    }
    o.verdict = realized == t && constructs::multiply_factors( d.factors, t.arity(), t.enc() ) == t;
    o.results = { { "construct", a.what },
                  { "target", t.to_string() },
                  { "factors", factors },
                  { "factor_count", d.factors.size() },
                  { "claimed_bound", d.claimed_bound },
                  { "exceeds_claimed_bound", d.exceeds_claimed_bound },
                  { "table", realized.to_values_string() },
                  { "verdict", o.verdict } };
    emit_network( network, g, o );
  }
  else if ( a.what == "embed" )
  {
    auto const op = boolfn::boolean_op::parse( a.b );
    if ( op.arity() != 2 )
    {
      throw usage_error( "embed takes a binary operator" );
    }
    auto const t0 = parse_table( a.f0 ), t1 = parse_table( a.f1 );
    if ( t0.arity() != t1.arity() )
    {
      throw usage_error( "f0 and f1 must share their arity" );
    }
    auto const w0 = realize_low_degree( t0 ), w1 = realize_low_degree( t1 );
    auto const e = constructs::composition_embedding( op, { *w0, *w1 } );
    auto const n = t0.arity() + 1;
    json fs = json::array();
    for ( std::size_t j = 0; j < e.F.size(); ++j )
    {
      fs.push_back( { { "certificate", weights_json( e.F[j] ) }, { "margin", quarkcap::to_string( e.margins[j] ) }, { "theta", e.restrictions[j].theta } } );
    }
    o.results = { { "construct", "embed" }, { "b", op.name() }, { "n", n }, { "f0", t0.to_string() }, { "f1", t1.to_string() }, { "F", fs }, { "composed", e.composed().to_string() } };
    bool ok = true;
    if ( std::all_of( e.F.begin(), e.F.end(), []( auto const& f ) { return f.degree() <= 1; } ) )
    {
      auto const network = embedding_network( e, n );
      netsim::compiled_network net( network );
      auto const composed = e.composed();
      for ( assignment x = 0; x < composed.size(); ++x )
      {
        ok = ok && exact_output( net, x, n ) == composed.value( x );
      }
      emit_network( network, g, o );
    }
    o.verdict = ok;
    o.results["verdict"] = ok;
  }
  else if ( a.what == "approx" )
  {
    auto const f = named_function( a.function );
    auto const sa = constructs::build_slice_approximator( constructs::sample_function( f, a.slices ), constructs::parse_slice_variant( a.variant ) );
    auto const network = sa.to_network();
    netsim::compiled_network net( network );
    double gap = 0;
    for ( unsigned i = 0; i < a.grid; ++i )
    {
      double const x = a.grid == 1 ? 0.0 : static_cast<double>( i ) / ( a.grid - 1 );
      std::vector<double> in{ x };
      gap = std::max( gap, std::abs( net.outputs( in ).front() - sa.evaluate( x ) ) );
    }
    double boundary = 0;
    if ( sa.variant == constructs::slice_variant::linear )
    {
      for ( unsigned k = 0; k <= sa.n; ++k )
      {
        double const x = static_cast<double>( k ) / sa.n;
        boundary = std::max( boundary, std::abs( sa.evaluate( x ) - sa.samples[k] ) );
      }
    }
    o.verdict = gap <= 1e-12 && boundary <= 1e-12;
    o.results = { { "construct", "approx" },
                  { "function", a.function },
                  { "slices", a.slices },
                  { "variant", a.variant },
                  { "grid_points", a.grid },
                  { "sup_error", constructs::sup_error( sa, f, std::max( 2u, a.grid ) ) },
                  { "boundary_error", boundary },
                  { "network_vs_closed_form", gap },
                  { "verdict", o.verdict } };
    emit_network( network, g, o );
  }
  else
  {
    throw usage_error( "unknown construct '" + a.what + "' (mux, product, xor, embed, approx)" );
  }
  return o;
}

outcome cmd_simulate( simulate_args const& a, global_options const& )
{
  auto const network = netsim::load_network( a.net );
  netsim::compiled_network net( network );
  std::string text = a.input;
  if ( std::filesystem::exists( a.input ) )
  {
    std::ifstream is( a.input );
    std::stringstream ss;
    ss << is.rdbuf();
    text = ss.str();
  }
  else
  {
    /* inline rows may be separated by ';' */
    std::replace( text.begin(), text.end(), ';', '\n' );
  }
  json rows = json::array();
  table t{ network.inputs, {} };
  t.header.insert( t.header.end(), network.outputs.begin(), network.outputs.end() );
  std::stringstream lines( text );
  std::string line;
  while ( std::getline( lines, line ) )
  {
    if ( line.find_first_not_of( " \t\r" ) == std::string::npos || line[line.find_first_not_of( " \t\r" )] == '#' )
    {
      continue;
    }
    auto const fields = split_csv_line( line );
    if ( fields.size() != network.inputs.size() )
    {
      throw usage_error( "input row has " + std::to_string( fields.size() ) + " values, network expects " + std::to_string( network.inputs.size() ) );
    }
    std::vector<std::string> csv_row = fields;
    if ( a.exact )
    {
      std::vector<rational> in;
      for ( auto const& f : fields )
      {
        in.push_back( parse_rational( f ) );
      }
      auto const r = net.evaluate_exact( in );
      json outs = json::array();
      for ( auto const& v : r.outputs )
      {
        outs.push_back( quarkcap::to_string( v ) );
        csv_row.push_back( quarkcap::to_string( v ) );
      }
      rows.push_back( { { "input", fields }, { "outputs", outs }, { "trace", trace_json( network, r.trace ) } } );
    }
    else
    {
      std::vector<double> in;
      for ( auto const& f : fields )
      {
        in.push_back( to_double( parse_rational( f ) ) );
      }
      auto const r = net.evaluate( in );
      for ( auto v : r.outputs )
      {
        std::ostringstream os;
        os.precision( 17 );
        os << v;
        csv_row.push_back( os.str() );
      }
      rows.push_back( { { "input", fields }, { "outputs", r.outputs }, { "trace", trace_json( network, r.trace ) } } );
    }
    t.rows.push_back( std::move( csv_row ) );
  }
  outcome o;
  o.results = { { "net", a.net }, { "inputs", network.inputs }, { "outputs", network.outputs }, { "rows", rows } };
  o.csv = std::move( t );
  return o;
}

outcome cmd_transformer( transformer_args const& a, global_options const& g )
{
  if ( a.check != "all" && a.check != "perm" && a.check != "oracle" && a.check != "counts" )
  {
    throw usage_error( "--check must be perm, oracle, counts or all" );
  }
  auto const cfg = transformer::random_config( g.seed, a.n, a.din, a.m, a.bias );
  transformer::encoder enc( cfg );
  auto const x = transformer::random_tokens( g.seed + 1, a.n, a.din );
  outcome o;
  o.results = { { "n", a.n }, { "m", a.m }, { "din", a.din }, { "bias", a.bias } };
  bool const all = a.check == "all";
  if ( all || a.check == "counts" )
  {
    auto const f = enc.forward( x );
    std::uint64_t const want_o = std::uint64_t{ a.m } * a.n * a.n, want_s = std::uint64_t{ a.n } * a.n;
    bool const ok = f.trace.output_gating_ops == want_o && f.trace.synaptic_gating_ops == want_s;
    o.results["counts"] = { { "output_gating_ops", f.trace.output_gating_ops },
                            { "expected_output_gating_ops", want_o },
                            { "synaptic_gating_ops", f.trace.synaptic_gating_ops },
                            { "expected_synaptic_gating_ops", want_s },
                            { "synaptic_gate_applications", f.trace.synaptic_gate_applications },
                            { "verdict", ok } };
    o.verdict = o.verdict && ok;
  }
  if ( all || a.check == "oracle" )
  {
    double worst = 0;
    unsigned const instances = 20;
    for ( unsigned i = 0; i < instances; ++i )
    {
      auto const xi = transformer::random_tokens( g.seed + 1 + i, a.n, a.din );
      auto const got = enc.forward( xi ).outputs;
      auto const want = transformer::direct_attention( cfg, xi );
      for ( unsigned l = 0; l < a.n; ++l )
      {
        for ( unsigned c = 0; c < a.m; ++c )
        {
          worst = std::max( worst, std::abs( got[l][c] - want[l][c] ) );
        }
      }
    }
    bool const ok = worst <= 1e-9;
    o.results["oracle"] = { { "instances", instances }, { "max_abs_error", worst }, { "verdict", ok } };
    o.verdict = o.verdict && ok;
  }
  if ( all || a.check == "perm" )
  {
    std::vector<unsigned> p( a.n );
    std::iota( p.begin(), p.end(), 0u );
    std::uint64_t checked = 0;
    bool equivariant = true;
    counter_rng rng( g.seed, "transformer.perm" );
    auto const exhaustive = a.n <= 6;
    for ( unsigned trial = 0; exhaustive || trial < 200; ++trial )
    {
      if ( !exhaustive )
      {
        std::iota( p.begin(), p.end(), 0u );
        for ( unsigned i = a.n; i > 1; --i )
        {
          std::swap( p[i - 1], p[static_cast<std::size_t>( rng.uniform_int( 0, i - 1 ) )] );
        }
      }
      equivariant = equivariant && enc.permutation_check( x, p );
      ++checked;
      if ( exhaustive && !std::next_permutation( p.begin(), p.end() ) )
      {
        break;
      }
    }
    json perm = { { "permutations", checked }, { "exhaustive", exhaustive }, { "equivariant", equivariant } };
    bool ok = equivariant;
    if ( a.n >= 2 )
    {
      transformer::tokens offsets( a.n, std::vector<double>( a.din ) );
      for ( auto& row : offsets )
      {
        for ( auto& v : row )
        {
          v = rng.uniform( -1.0, 1.0 );
        }
      }
      std::vector<unsigned> swap( a.n );
      std::iota( swap.begin(), swap.end(), 0u );
      std::swap( swap[0], swap[1] );
      bool const broken = !enc.permutation_check( x, swap, offsets );
      perm["positional_offsets_break"] = broken;
      ok = ok && broken;
    }
    perm["verdict"] = ok;
    o.results["perm"] = perm;
    o.verdict = o.verdict && ok;
  }
  o.results["verdict"] = o.verdict;
  return o;
}

outcome cmd_capacity_report( capacity_args const& a, global_options const& g )
{
  if ( a.max_n == 0 || a.max_n > 4 )
  {
    throw usage_error( "--max-n must be in 1..4" );
  }
  outcome o;
  table t{ { "class", "n", "d", "exact_count", "capacity_bits", "reference", "reference_bits", "ratio" }, {} };
  json rows = json::array();
  auto add_row = [&]( std::string const& cls, unsigned n, unsigned d, std::uint64_t count, double bits, std::string const& ref, std::optional<double> ref_bits ) {
    json ratio = nullptr;
    std::string ratio_s;
    if ( ref_bits && *ref_bits > 0 )
    {
      ratio = capacity_string( bits / *ref_bits );
      ratio_s = capacity_string( bits / *ref_bits );
    }
    auto const ref_s = ref_bits ? capacity_string( *ref_bits ) : std::string();
    rows.push_back( { { "class", cls },
                      { "n", n },
                      { "d", d },
                      { "exact_count", count },
                      { "capacity_bits", capacity_string( bits ) },
                      { "reference", ref },
                      { "reference_bits", ref_bits ? json( ref_s ) : json( nullptr ) },
                      { "ratio", ratio } } );
    t.rows.push_back( { cls, std::to_string( n ), std::to_string( d ), std::to_string( count ), capacity_string( bits ), ref, ref_s, ratio_s } );
  };
  json hierarchy = json::array();
  bool contained = true;
  for ( unsigned n = 1; n <= a.max_n; ++n )
  {
    auto const& ltf = threshold::threshold_class( n, 1 );
    auto const pair = gating::compose_class( { boolfn::boolean_op::parse( "NXOR" ), { 1, 1 }, n, encoding::plus_minus }, g.jobs );
    for ( auto const* ref : { "komlos", "zuev_upper" } )
    {
      add_row( "T(n;1)", n, 1, ltf.size(), boolfn::capacity( ltf ), ref, threshold::reference_formula( ref, n, 1 ) );
    }
    add_row( "T_NXOR(n;1,1)", n, 1, pair.size(), boolfn::capacity( pair ), "gated_pair", threshold::reference_formula( "gated_pair", n, 1 ) );
    json h = { { "n", n }, { "ltf_bits", capacity_string( boolfn::capacity( ltf ) ) }, { "gated_pair_bits", capacity_string( boolfn::capacity( pair ) ) } };
    bool chain = ltf.is_subset_of( pair );
    bool strict = ltf.size() < pair.size();
    double const all_bits = std::ldexp( 1.0, static_cast<int>( n ) );
    auto const& quad = threshold::threshold_class( n, 2 );
    for ( auto const* ref : { "poly_fixed_d", "poly_main" } )
    {
      add_row( "T(n;2)", n, 2, quad.size(), boolfn::capacity( quad ), ref, threshold::reference_formula( ref, n, 2 ) );
    }
    chain = chain && pair.is_subset_of( quad );
    strict = strict && pair.size() < quad.size() && boolfn::capacity( quad ) < all_bits;
    h["quadratic_bits"] = capacity_string( boolfn::capacity( quad ) );
    add_row( "B_n", n, 0, std::uint64_t{ 1 } << ( 1u << n ), all_bits, "", std::nullopt );
    h["all_functions_bits"] = capacity_string( all_bits );
    h["contained"] = chain;
    h["strict"] = strict;
    hierarchy.push_back( h );
    contained = contained && chain;
  }
  o.results = { { "note", "asymptotic reference, not a small-n claim" }, { "rows", rows }, { "hierarchy", hierarchy }, { "verdict", contained } };
  o.verdict = contained;
  o.csv = std::move( t );
  return o;
}

} // namespace quarkcap::cli
