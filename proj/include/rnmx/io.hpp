#pragma once

#include "decision.hpp"
#include "formula.hpp"
#include "refinement.hpp"
#include "table.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace rnmx
{

using json = nlohmann::ordered_json;

inline const std::string& value_name( const Table& t, Value v ) { return t.matrix->value_names.at( v ); }

// ---------------------------------------------------------------- markdown

namespace detail
{

inline std::string md_header( const Table& t, Style style )
{
  std::string out = "| Row (ID) |";
  for ( const auto& f : t.closure.formulas() )
    out += " " + print( f, style ) + " |";
  out += "\n|:---:|";
  for ( std::size_t i = 0; i < t.columns(); ++i )
    out += ":---:|";
  return out + "\n";
}

inline std::string row_label( RowId id ) { return "(" + std::to_string( id ) + ")"; }

inline std::string witness_list( const std::vector<RowId>& ids )
{
  std::string out;
  for ( std::size_t i = 0; i < ids.size(); ++i )
    out += ( i ? ", " : "" ) + std::to_string( ids[i] );
  return out;
}

inline std::string ordinal( std::size_t n )
{
  static const char* names[] = { "First", "Second", "Third",   "Fourth", "Fifth",
                                 "Sixth", "Seventh", "Eighth", "Ninth",  "Tenth" };
  return n >= 1 && n <= 10 ? names[n - 1] : "Cycle " + std::to_string( n );
}

} // namespace detail

/// Value table in the paper's layout; every value is set in bold.
inline std::string table_to_markdown( const Table& t, Style style = Style::unicode )
{
  std::string out = detail::md_header( t, style );
  for ( const Row& r : t.rows )
  {
    out += "| " + detail::row_label( r.id ) + " |";
    for ( Value v : r.values )
      out += " **" + value_name( t, v ) + "** |";
    out += "\n";
  }
  return out;
}

/// Validators table of one cycle: × for non-gap cells, witness ids, or ∅.
inline std::string cycle_to_markdown( const Table& t, const CycleRecord& c, Style style = Style::unicode )
{
  if ( c.cells.size() != c.rows.size() )
    throw std::invalid_argument( "cycle record has no witness cells" );
  std::string out = detail::md_header( t, style );
  for ( std::size_t i = 0; i < c.rows.size(); ++i )
  {
    out += "| " + detail::row_label( c.rows[i] ) + " |";
    for ( const ValidatorCell& cell : c.cells[i] )
    {
      switch ( cell.kind )
      {
      case ValidatorCell::Kind::skip:
        out += " × |";
        break;
      case ValidatorCell::Kind::supported:
        out += " " + detail::witness_list( cell.witnesses ) + " |";
        break;
      case ValidatorCell::Kind::unsupported:
        out += " ∅ |";
        break;
      }
    }
    out += "\n";
  }
  return out;
}

namespace detail
{

inline void captioned( std::string& out, const std::string& caption, const std::string& body )
{
  if ( !out.empty() )
    out += "\n";
  out += caption + ".\n\n" + body;
}

inline Table restrict_to( const Table& initial, const std::vector<RowId>& ids )
{
  Table t{ initial.closure, initial.matrix, {} };
  for ( RowId id : ids )
    t.rows.push_back( *initial.find( id ) );
  return t;
}

} // namespace detail

/*! \brief Initial and final tables, or with `trace` the whole refinement.

  The traced layout is: Initial table, then for each removing cycle its
  validators table followed by the resulting Intermediate or Final table,
  and last the Validators table of the confirming cycle.
*/
inline std::string refinement_to_markdown( const Table& initial, const Table& final_table, const ValidatorsTrace& trace,
                                           bool with_trace, Style style = Style::unicode )
{
  std::string out;
  detail::captioned( out, "Initial table", table_to_markdown( initial, style ) );
  if ( !with_trace )
  {
    detail::captioned( out, "Final table", table_to_markdown( final_table, style ) );
    return out;
  }
  const std::size_t n = trace.cycles.size();
  for ( std::size_t k = 0; k + 1 < n; ++k )
  {
    detail::captioned( out, detail::ordinal( k + 1 ) + " cycle", cycle_to_markdown( initial, trace.cycles[k], style ) );
    Table after = detail::restrict_to( initial, trace.cycles[k + 1].rows );
    detail::captioned( out, k + 2 < n ? "Intermediate table" : "Final table", table_to_markdown( after, style ) );
  }
  if ( n <= 1 )
    detail::captioned( out, "Final table", table_to_markdown( final_table, style ) );
  if ( n >= 1 )
    detail::captioned( out, "Validators", cycle_to_markdown( initial, trace.cycles.back(), style ) );
  return out;
}

// ---------------------------------------------------------------- csv

inline std::string csv_field( const std::string& s )
{
  if ( s.find_first_of( ",\"\n" ) == std::string::npos )
    return s;
  std::string out = "\"";
  for ( char c : s )
  {
    if ( c == '"' )
      out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string table_to_csv( const Table& t, Style style = Style::ascii )
{
  std::string out = "id";
  for ( const auto& f : t.closure.formulas() )
    out += "," + csv_field( print( f, style ) );
  out += "\n";
  for ( const Row& r : t.rows )
  {
    out += std::to_string( r.id );
    for ( Value v : r.values )
      out += "," + value_name( t, v );
    out += "\n";
  }
  return out;
}

// ---------------------------------------------------------------- json

inline json closure_to_json( const SubformulaClosure& c, Style style )
{
  json arr = json::array();
  for ( const auto& f : c.formulas() )
    arr.push_back( print( f, style ) );
  return arr;
}

inline json rows_to_json( const Table& t )
{
  json rows = json::array();
  for ( const Row& r : t.rows )
  {
    json values = json::array();
    for ( Value v : r.values )
      values.push_back( value_name( t, v ) );
    rows.push_back( json{ { "id", r.id }, { "values", std::move( values ) } } );
  }
  return rows;
}

inline json table_to_json( const Table& t, Style style = Style::ascii )
{
  return json{ { "matrix", t.matrix->name }, { "closure", closure_to_json( t.closure, style ) }, { "rows", rows_to_json( t ) } };
}

/// Cells are null (skip), a list of witness ids (supported) or an empty list (unsupported).
inline json cycle_to_json( const CycleRecord& c )
{
  json rows = json::array();
  for ( std::size_t i = 0; i < c.rows.size(); ++i )
  {
    json cells = json::array();
    if ( i < c.cells.size() )
      for ( const ValidatorCell& cell : c.cells[i] )
        cells.push_back( cell.kind == ValidatorCell::Kind::skip ? json( nullptr ) : json( cell.witnesses ) );
    rows.push_back( json{ { "id", c.rows[i] }, { "cells", std::move( cells ) } } );
  }
  return json{ { "rows", std::move( rows ) }, { "removed", c.removed } };
}

inline json refinement_to_json( const Table& initial, const Table& final_table, const ValidatorsTrace& trace,
                                bool with_trace, Style style = Style::ascii )
{
  json out{ { "matrix", initial.matrix->name },
            { "closure", closure_to_json( initial.closure, style ) },
            { "initial", rows_to_json( initial ) },
            { "final", rows_to_json( final_table ) } };
  if ( with_trace )
  {
    json cycles = json::array();
    for ( const auto& c : trace.cycles )
      cycles.push_back( cycle_to_json( c ) );
    out["cycles"] = std::move( cycles );
  }
  return out;
}

/// {valid, logic, countermodel: {id, assignment} | null, initial_rows, final_rows, cycles, lb, ub}
inline json verdict_to_json( const Verdict& v, Style style = Style::ascii )
{
  const Nmatrix& m = v.logic == Logic::ipl ? m_ipl() : m_s4_reduced();
  json cm = nullptr;
  if ( v.countermodel )
  {
    json assignment = json::object();
    for ( std::size_t i = 0; i < v.closure.size(); ++i )
      assignment[print( v.closure[i], style )] = m.value_names.at( v.countermodel->values[i] );
    cm = json{ { "id", v.countermodel->id }, { "assignment", std::move( assignment ) } };
  }
  return json{ { "valid", v.valid },
               { "logic", std::string( logic_name( v.logic ) ) },
               { "countermodel", std::move( cm ) },
               { "initial_rows", v.initial_rows },
               { "final_rows", v.final_rows },
               { "cycles", v.cycles },
               { "lb", v.lb },
               { "ub", v.ub } };
}

inline json cross_check_to_json( const CrossCheckReport& r, Style style = Style::ascii )
{
  return json{ { "formula", print( r.formula, style ) },
               { "ipl", r.ipl_valid },
               { "s4", r.s4_valid },
               { "oracle", r.oracle_valid },
               { "agree", r.agree() } };
}

// ---------------------------------------------------------------- flat records

namespace detail
{

inline std::string scalar_text( const json& j ) { return j.is_string() ? j.get<std::string>() : j.dump(); }

} // namespace detail

/// A flat JSON object as a two-column markdown table.
inline std::string record_to_markdown( const json& obj )
{
  std::string out = "| key | value |\n|---|---|\n";
  for ( const auto& [k, v] : obj.items() )
    out += "| " + k + " | " + detail::scalar_text( v ) + " |\n";
  return out;
}

/// A flat JSON object as a header line and one data line.
inline std::string record_to_csv( const json& obj )
{
  std::string head, body;
  bool first = true;
  for ( const auto& [k, v] : obj.items() )
  {
    head += ( first ? "" : "," ) + csv_field( k );
    body += ( first ? "" : "," ) + csv_field( detail::scalar_text( v ) );
    first = false;
  }
  return head + "\n" + body + "\n";
}

} // namespace rnmx
