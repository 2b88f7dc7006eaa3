#pragma once

#include "decision.hpp"
#include "io.hpp"
#include "parser.hpp"
#include "translation.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include <unistd.h>

namespace rnmx::cli
{

struct Result
{
  int exit_code{ 0 };
  std::string out;
  std::string err;
};

enum class ExitCode : int
{
  ok = 0,
  invalid = 1,
  usage = 2,
  disagree = 3
};

namespace detail
{

/// RNMX_COLOR: auto, always or never. Unknown values fall back to auto with a warning.
inline bool color_enabled( std::string& warnings )
{
  const char* env = std::getenv( "RNMX_COLOR" );
  std::string mode = env ? env : "auto";
  if ( mode == "always" )
    return true;
  if ( mode == "never" )
    return false;
  if ( mode != "auto" )
    warnings += "warning: unknown RNMX_COLOR value '" + mode + "', using auto\n";
  return ::isatty( STDERR_FILENO ) != 0;
}

inline std::string paint( bool on, const char* code, const std::string& s )
{
  return on ? std::string( "\033[" ) + code + "m" + s + "\033[0m" : s;
}

struct Options
{
  std::string logic = "ipl";
  std::string format;
  std::string style;
  std::string mode = "designated";
  std::string matrix = "reduced";
  bool trace = false;
  std::vector<std::string> premises;
  std::string formula;
  std::vector<std::string> formulas;
};

inline Signature signature_of( const Options& o ) { return o.logic == "s4" ? Signature::s4 : Signature::ipl; }

inline Style style_of( const Options& o, const std::string& format )
{
  if ( o.style.empty() )
    return format == "md" ? Style::unicode : Style::ascii;
  return o.style == "unicode" ? Style::unicode : Style::ascii;
}

inline std::vector<Formula> parse_all( const std::vector<std::string>& texts, Signature sig )
{
  std::vector<Formula> out;
  for ( const auto& t : texts )
    out.push_back( parse( t, sig ) );
  return out;
}

inline std::string render_record( const json& obj, const std::string& format )
{
  if ( format == "md" )
    return record_to_markdown( obj );
  if ( format == "csv" )
    return record_to_csv( obj );
  return obj.dump( 2 ) + "\n";
}

inline Result cmd_decide( const Options& o )
{
  const std::string format = o.format.empty() ? "json" : o.format;
  const Signature sig = signature_of( o );
  auto premises = parse_all( o.premises, sig );
  Formula goal = parse( o.formula, sig );
  Verdict v = sig == Signature::ipl
                  ? decide_ipl( premises, goal )
                  : decide_s4( premises, goal, o.mode == "necessity" ? S4Mode::necessity : S4Mode::designated );
  return { v.valid ? 0 : 1, render_record( verdict_to_json( v, style_of( o, format ) ), format ), {} };
}

inline Table initial_table( const Options& o, Signature sig )
{
  std::vector<Formula> roots = parse_all( o.premises, sig );
  for ( const auto& f : parse_all( o.formulas, sig ) )
    roots.push_back( f );
  MatrixKind kind = sig == Signature::ipl ? MatrixKind::ipl
                    : o.matrix == "original" ? MatrixKind::s4
                                             : MatrixKind::s4_reduced;
  return generate_table( subformula_closure( roots ), kind );
}

inline Result cmd_table( const Options& o )
{
  const std::string format = o.format.empty() ? "md" : o.format;
  const Style style = style_of( o, format );
  Table initial = initial_table( o, signature_of( o ) );
  auto [final_table, trace] = refine_fixpoint( initial, RefineOptions{ o.trace } );
  if ( format == "json" )
    return { 0, refinement_to_json( initial, final_table, trace, o.trace, style ).dump( 2 ) + "\n", {} };
  if ( format == "csv" )
    return { 0, table_to_csv( o.trace ? initial : final_table, style ), {} };
  return { 0, refinement_to_markdown( initial, final_table, trace, o.trace, style ), {} };
}

inline Result cmd_translate( const Options& o )
{
  const std::string format = o.format.empty() ? "json" : o.format;
  const Style style = style_of( o, format );
  TranslationResult t = translate( parse( o.formula, Signature::ipl ) );
  json obj{ { "source", print( t.source, style ) }, { "boxed", print( t.boxed, style ) }, { "semi", print( t.semi, style ) } };
  return { 0, render_record( obj, format ), {} };
}

inline Result cmd_bounds( const Options& o )
{
  const std::string format = o.format.empty() ? "json" : o.format;
  Table initial = initial_table( o, signature_of( o ) );
  auto [final_table, trace] = refine_fixpoint( initial, RefineOptions{ false } );
  json obj{ { "matrix", initial.matrix->name },
            { "columns", initial.columns() },
            { "lb", lower_bound( initial.closure, *initial.matrix ) },
            { "ub", upper_bound( initial.closure, *initial.matrix ) },
            { "initial_rows", initial.rows.size() },
            { "final_rows", final_table.rows.size() },
            { "cycles", trace.cycles.size() } };
  return { 0, render_record( obj, format ), {} };
}

inline Result cmd_oracle( const Options& o )
{
  const std::string format = o.format.empty() ? "json" : o.format;
  auto premises = parse_all( o.premises, Signature::ipl );
  Formula goal = parse( o.formula, Signature::ipl );
  bool provable = g4ip_prove( premises, goal );
  json obj{ { "formula", print( goal, style_of( o, format ) ) }, { "provable", provable } };
  return { provable ? 0 : 1, render_record( obj, format ), {} };
}

inline Result cmd_xcheck( const Options& o )
{
  const std::string format = o.format.empty() ? "json" : o.format;
  CrossCheckReport r = cross_check( parse( o.formula, Signature::ipl ) );
  return { r.agree() ? 0 : 3, render_record( cross_check_to_json( r, style_of( o, format ) ), format ), {} };
}

} // namespace detail

/// Runs one invocation. `args` excludes the program name.
inline Result run( std::vector<std::string> args )
{
  std::string warnings;
  const bool color = detail::color_enabled( warnings );
  auto fail = [&]( int code, const std::string& msg ) {
    return Result{ code, {}, warnings + detail::paint( color, "1;31", "error:" ) + " " + msg + "\n" };
  };

  CLI::App app{ "Decide IPL and S4 formulas with refined non-deterministic truth tables", "rnmx" };
  app.require_subcommand( 1 );
  detail::Options o;

  const std::vector<std::string> logics{ "ipl", "s4" };
  const std::vector<std::string> formats{ "md", "csv", "json" };
  const std::vector<std::string> styles{ "ascii", "unicode" };

  auto common = [&]( CLI::App* sub, bool with_logic, bool many ) {
    if ( with_logic )
      sub->add_option( "--logic", o.logic, "ipl or s4" )->check( CLI::IsMember( logics ) );
    sub->add_option( "--format", o.format, "md, csv or json" )->check( CLI::IsMember( formats ) );
    sub->add_option( "--style", o.style, "ascii or unicode" )->check( CLI::IsMember( styles ) );
    if ( many )
      sub->add_option( "formula", o.formulas, "formulas (closure roots)" )->required();
    else
      sub->add_option( "formula", o.formula, "formula" )->required();
  };

  auto* decide = app.add_subcommand( "decide", "validity or entailment verdict" );
  common( decide, true, false );
  decide->add_option( "--premise", o.premises, "premise (repeatable)" )->take_all();
  decide->add_option( "--mode", o.mode, "S4 acceptance: designated or necessity" )
      ->check( CLI::IsMember( { "designated", "necessity" } ) );

  auto* table = app.add_subcommand( "table", "initial and final truth tables" );
  common( table, true, true );
  table->add_option( "--premise", o.premises, "extra closure root (repeatable)" )->take_all();
  table->add_flag( "--trace", o.trace, "print every cycle and validators table" );
  table->add_option( "--matrix", o.matrix, "S4 matrix: reduced or original" )
      ->check( CLI::IsMember( { "reduced", "original" } ) );

  auto* tr = app.add_subcommand( "translate", "box translation and semi-translation of an IPL formula" );
  common( tr, false, false );

  auto* bounds = app.add_subcommand( "bounds", "row-count bounds and actual counts" );
  common( bounds, true, true );
  bounds->add_option( "--premise", o.premises, "extra closure root (repeatable)" )->take_all();
  bounds->add_option( "--matrix", o.matrix, "S4 matrix: reduced or original" )
      ->check( CLI::IsMember( { "reduced", "original" } ) );

  auto* oracle = app.add_subcommand( "oracle", "sequent-calculus verdict for an IPL formula" );
  common( oracle, false, false );
  oracle->add_option( "--premise", o.premises, "premise (repeatable)" )->take_all();

  auto* xcheck = app.add_subcommand( "xcheck", "compare table, S4 translation and sequent verdicts" );
  common( xcheck, false, false );

  if ( !args.empty() && !args.front().empty() && args.front()[0] != '-' )
  {
    const auto& subs = app.get_subcommands( []( CLI::App* ) { return true; } );
    if ( std::none_of( subs.begin(), subs.end(), [&]( CLI::App* s ) { return s->get_name() == args.front(); } ) )
      return fail( static_cast<int>( ExitCode::usage ), "unknown subcommand '" + args.front() + "'" );
  }

  try
  {
    std::reverse( args.begin(), args.end() );
    app.parse( args );
  }
  catch ( const CLI::CallForHelp& )
  {
    return { 0, app.help(), warnings };
  }
  catch ( const CLI::CallForAllHelp& )
  {
    return { 0, app.help( "", CLI::AppFormatMode::All ), warnings };
  }
  catch ( const CLI::ParseError& e )
  {
    std::string msg = e.what();
    if ( msg.empty() )
      msg = e.get_name();
    return fail( static_cast<int>( ExitCode::usage ), msg );
  }

  try
  {
    Result r;
    if ( decide->parsed() )
      r = detail::cmd_decide( o );
    else if ( table->parsed() )
      r = detail::cmd_table( o );
    else if ( tr->parsed() )
      r = detail::cmd_translate( o );
    else if ( bounds->parsed() )
      r = detail::cmd_bounds( o );
    else if ( oracle->parsed() )
      r = detail::cmd_oracle( o );
    else
      r = detail::cmd_xcheck( o );
    r.err = warnings + r.err;
    return r;
  }
  catch ( const parse_error& e )
  {
    return fail( static_cast<int>( ExitCode::usage ), std::string( e.what() ) + ": '" + e.token() + "'" );
  }
  catch ( const std::invalid_argument& e )
  {
    return fail( static_cast<int>( ExitCode::usage ), e.what() );
  }
}

} // namespace rnmx::cli
