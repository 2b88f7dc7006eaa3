#pragma once

#include "formula.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace rnmx
{

/// Index of a truth value inside its matrix (0-based, ascending order).
using Value = std::uint8_t;

/// Set of truth values as a bit mask. Matrices have at most 8 values.
class ValueSet
{
public:
  constexpr ValueSet() = default;
  constexpr ValueSet( std::initializer_list<Value> values )
  {
    for ( Value v : values )
      bits_ |= static_cast<std::uint8_t>( 1u << v );
  }

  static constexpr ValueSet from_bits( std::uint8_t bits )
  {
    ValueSet s;
    s.bits_ = bits;
    return s;
  }

  constexpr bool contains( Value v ) const noexcept { return ( bits_ >> v ) & 1u; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::size_t size() const noexcept { return static_cast<std::size_t>( std::popcount( bits_ ) ); }
  constexpr std::uint8_t bits() const noexcept { return bits_; }
  constexpr bool subset_of( ValueSet o ) const noexcept { return ( bits_ & ~o.bits_ ) == 0; }

  void insert( Value v ) noexcept { bits_ |= static_cast<std::uint8_t>( 1u << v ); }

  /// Members in ascending order.
  std::vector<Value> values() const
  {
    std::vector<Value> out;
    for ( Value v = 0; v < 8; ++v )
      if ( contains( v ) )
        out.push_back( v );
    return out;
  }

  friend constexpr bool operator==( ValueSet a, ValueSet b ) noexcept { return a.bits_ == b.bits_; }

private:
  std::uint8_t bits_{ 0 };
};

/// Truth table of one connective: a non-empty value set per argument tuple.
struct OpTable
{
  int arity{ 0 };
  std::vector<ValueSet> cells; // row-major, size n^arity
};

/*! \brief A non-deterministic matrix: values, designated subset, and one
  multioperation per connective.

  `atom_values` restricts what atoms may take in a table row; `gap`, `top`
  and `bottom` drive the refinement (rows with a `gap` entry need a witness
  that sends the column to `bottom` while keeping every `top` entry).
*/
struct Nmatrix
{
  std::string name;
  Signature signature{ Signature::ipl };
  std::vector<std::string> value_names;
  ValueSet designated;
  ValueSet atom_values;
  Value bottom{ 0 };
  Value gap{ 1 };
  Value top{ 2 };
  std::map<Connective, OpTable> ops;

  std::size_t size() const noexcept { return value_names.size(); }

  bool has( Connective c ) const { return ops.count( c ) != 0; }

  ValueSet lookup( Connective c, std::initializer_list<Value> args ) const
  {
    return lookup( c, std::vector<Value>( args ) );
  }

  ValueSet lookup( Connective c, const std::vector<Value>& args ) const
  {
    auto it = ops.find( c );
    if ( it == ops.end() )
      throw std::invalid_argument( "connective not interpreted by matrix " + name );
    const OpTable& t = it->second;
    if ( static_cast<int>( args.size() ) != t.arity )
      throw std::invalid_argument( "arity mismatch for matrix " + name );
    std::size_t index = 0;
    for ( Value a : args )
    {
      if ( a >= size() )
        throw std::invalid_argument( "value out of range for matrix " + name );
      index = index * size() + a;
    }
    return t.cells[index];
  }

  /// Unchecked fast path used by table generation.
  ValueSet cell( Connective c, Value a, Value b = 0 ) const
  {
    const OpTable& t = ops.at( c );
    return t.arity == 1 ? t.cells[a] : t.cells[a * size() + b];
  }

  void validate() const
  {
    if ( value_names.empty() || value_names.size() > 8 )
      throw std::invalid_argument( "matrix needs between 1 and 8 values" );
    std::uint8_t all = static_cast<std::uint8_t>( ( 1u << size() ) - 1 );
    if ( designated.empty() || designated.bits() == all || !designated.subset_of( ValueSet::from_bits( all ) ) )
      throw std::invalid_argument( "designated set must be a non-empty proper subset" );
    for ( const auto& [c, t] : ops )
    {
      if ( t.arity != arity( c ) )
        throw std::invalid_argument( "table arity does not match connective" );
      std::size_t expected = t.arity == 1 ? size() : size() * size();
      if ( t.cells.size() != expected )
        throw std::invalid_argument( "table is not total" );
      for ( ValueSet s : t.cells )
        if ( s.empty() || !s.subset_of( ValueSet::from_bits( all ) ) )
          throw std::invalid_argument( "table cell must be a non-empty set of values" );
    }
  }
};

/// Maximum cell cardinality over all tables.
inline std::size_t branching_factor( const Nmatrix& m )
{
  std::size_t k = 1;
  for ( const auto& [c, t] : m.ops )
    for ( ValueSet s : t.cells )
      k = std::max( k, s.size() );
  return k;
}

enum class S4Value : Value
{
  zero = 0,
  one = 1,
  two = 2
};

enum class IplValue : Value
{
  F = 0,
  U = 1,
  T = 2
};

enum class MatrixKind : std::uint8_t
{
  s4,         ///< Gratz's matrix for S4
  s4_reduced, ///< reduced matrix for S4 over the full signature
  ipl         ///< intuitionistic matrix
};

namespace detail
{

// Shorthands for literal tables: bit i set <=> value i in the cell.
inline constexpr std::uint8_t v0 = 0b001, v1 = 0b010, v2 = 0b100, v12 = 0b110;

inline OpTable unary_table( std::array<std::uint8_t, 3> cells )
{
  OpTable t{ 1, {} };
  for ( auto c : cells )
    t.cells.push_back( ValueSet::from_bits( c ) );
  return t;
}

inline OpTable binary_table( std::array<std::array<std::uint8_t, 3>, 3> rows )
{
  OpTable t{ 2, {} };
  for ( const auto& r : rows )
    for ( auto c : r )
      t.cells.push_back( ValueSet::from_bits( c ) );
  return t;
}

inline Nmatrix make_s4( bool reduced )
{
  Nmatrix m;
  m.name = reduced ? "M'_S4" : "M_S4";
  m.signature = Signature::s4;
  m.value_names = { "0", "1", "2" };
  m.designated = { 1, 2 };
  m.atom_values = { 0, 1, 2 };
  m.ops[Connective::neg] = unary_table( { v12, v0, v0 } );
  m.ops[Connective::box] = unary_table( { v0, v0, v2 } );
  if ( !reduced )
  {
    m.ops[Connective::imp] = binary_table( { { { v12, v12, v12 }, { v0, v12, v12 }, { v0, v1, v12 } } } );
    m.ops[Connective::disj] = binary_table( { { { v0, v12, v12 }, { v12, v12, v12 }, { v12, v12, v12 } } } );
    m.ops[Connective::conj] = binary_table( { { { v0, v0, v0 }, { v0, v12, v12 }, { v0, v12, v12 } } } );
  }
  else
  {
    m.ops[Connective::imp] = binary_table( { { { v12, v12, v2 }, { v0, v12, v2 }, { v0, v1, v2 } } } );
    m.ops[Connective::disj] = binary_table( { { { v0, v12, v2 }, { v12, v12, v2 }, { v2, v2, v2 } } } );
    m.ops[Connective::conj] = binary_table( { { { v0, v0, v0 }, { v0, v1, v1 }, { v0, v1, v2 } } } );
  }
  m.validate();
  return m;
}

inline Nmatrix make_ipl()
{
  // Values F, U, T at indices 0, 1, 2.
  Nmatrix m;
  m.name = "M_IPL";
  m.signature = Signature::ipl;
  m.value_names = { "F", "U", "T" };
  m.designated = { 2 };
  m.atom_values = { 0, 2 };
  m.ops[Connective::neg] = unary_table( { v12, v12, v0 } );
  m.ops[Connective::imp] = binary_table( { { { v12, v12, v2 }, { v12, v12, v2 }, { v0, v0, v2 } } } );
  m.ops[Connective::disj] = binary_table( { { { v0, v0, v2 }, { v0, v0, v2 }, { v2, v2, v2 } } } );
  m.ops[Connective::conj] = binary_table( { { { v0, v0, v0 }, { v0, v0, v0 }, { v0, v0, v2 } } } );
  m.validate();
  return m;
}

} // namespace detail

/// Built-in matrices; the returned pointers are process-lifetime singletons.
inline std::shared_ptr<const Nmatrix> builtin( MatrixKind kind )
{
  static const auto s4 = std::make_shared<const Nmatrix>( detail::make_s4( false ) );
  static const auto s4r = std::make_shared<const Nmatrix>( detail::make_s4( true ) );
  static const auto ipl = std::make_shared<const Nmatrix>( detail::make_ipl() );
  switch ( kind )
  {
  case MatrixKind::s4:
    return s4;
  case MatrixKind::s4_reduced:
    return s4r;
  default:
    return ipl;
  }
}

inline const Nmatrix& m_s4() { return *builtin( MatrixKind::s4 ); }
inline const Nmatrix& m_s4_reduced() { return *builtin( MatrixKind::s4_reduced ); }
inline const Nmatrix& m_ipl() { return *builtin( MatrixKind::ipl ); }

inline ValueSet lookup( const Nmatrix& m, Connective c, std::initializer_list<Value> args ) { return m.lookup( c, args ); }

inline std::string connective_symbol( Connective c, Style s = Style::unicode )
{
  switch ( c )
  {
  case Connective::neg:
    return s == Style::unicode ? "¬" : "~";
  case Connective::box:
    return s == Style::unicode ? "□" : "[]";
  case Connective::conj:
    return s == Style::unicode ? "∧" : "/\\";
  case Connective::disj:
    return s == Style::unicode ? "∨" : "\\/";
  case Connective::imp:
    return s == Style::unicode ? "→" : "->";
  default:
    return "";
  }
}

inline std::string format_value_set( const Nmatrix& m, ValueSet s )
{
  std::string out = "{";
  bool first = true;
  for ( Value v : s.values() )
  {
    if ( !first )
      out += ", ";
    out += m.value_names[v];
    first = false;
  }
  return out + "}";
}

/// One markdown table per connective, laid out like the printed matrices.
inline std::string dump_markdown( const Nmatrix& m, Style style = Style::unicode )
{
  static constexpr Connective order[] = { Connective::neg, Connective::box, Connective::imp, Connective::disj,
                                          Connective::conj };
  std::string out;
  for ( Connective c : order )
  {
    if ( !m.has( c ) )
      continue;
    const OpTable& t = m.ops.at( c );
    std::string sym = connective_symbol( c, style );
    if ( t.arity == 1 )
    {
      out += "|   | " + sym + " |\n|---|---|\n";
      for ( Value a = 0; a < m.size(); ++a )
        out += "| " + m.value_names[a] + " | " + format_value_set( m, t.cells[a] ) + " |\n";
    }
    else
    {
      out += "| " + sym + " |";
      for ( Value b = 0; b < m.size(); ++b )
        out += " " + m.value_names[b] + " |";
      out += "\n|---|";
      for ( Value b = 0; b < m.size(); ++b )
        out += "---|";
      out += "\n";
      for ( Value a = 0; a < m.size(); ++a )
      {
        out += "| " + m.value_names[a] + " |";
        for ( Value b = 0; b < m.size(); ++b )
          out += " " + format_value_set( m, t.cells[a * m.size() + b] ) + " |";
        out += "\n";
      }
    }
    out += "\n";
  }
  return out;
}

} // namespace rnmx
