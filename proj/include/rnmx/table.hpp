#pragma once

#include "formula.hpp"
#include "nmatrix.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <memory>
#include <stdexcept>
#include <vector>

namespace rnmx
{

using RowId = std::uint32_t;

/// A partial valuation: one value per closure column. Ids are stable across refinement.
struct Row
{
  RowId id{ 0 };
  std::vector<Value> values;

  friend bool operator==( const Row&, const Row& ) = default;
};

/// Rows over a subformula closure, ordered lexicographically by value.
struct Table
{
  SubformulaClosure closure;
  std::shared_ptr<const Nmatrix> matrix;
  std::vector<Row> rows;

  std::size_t columns() const noexcept { return closure.size(); }

  const Row* find( RowId id ) const
  {
    auto it = std::find_if( rows.begin(), rows.end(), [id]( const Row& r ) { return r.id == id; } );
    return it == rows.end() ? nullptr : &*it;
  }
};

/// True iff `values` satisfies the atom restriction and every column's local table constraint.
inline bool locally_consistent( const SubformulaClosure& closure, const Nmatrix& m, const std::vector<Value>& values )
{
  if ( values.size() != closure.size() )
    return false;
  for ( std::size_t i = 0; i < closure.size(); ++i )
  {
    const auto& ch = closure.children( i );
    Connective op = closure[i].op();
    Value v = values[i];
    if ( v >= m.size() )
      return false;
    if ( ch.empty() )
    {
      if ( !m.atom_values.contains( v ) )
        return false;
    }
    else if ( ch.size() == 1 )
    {
      if ( !m.cell( op, values[ch[0]] ).contains( v ) )
        return false;
    }
    else if ( !m.cell( op, values[ch[0]], values[ch[1]] ).contains( v ) )
    {
      return false;
    }
  }
  return true;
}

namespace detail
{

inline void require_interpreted( const SubformulaClosure& closure, const Nmatrix& m )
{
  if ( closure.signature() != m.signature )
    throw std::invalid_argument( "closure signature does not match matrix " + m.name );
  for ( const auto& f : closure.formulas() )
    if ( !f.is_atom() && !m.has( f.op() ) )
      throw std::invalid_argument( "matrix " + m.name + " does not interpret a connective of the closure" );
}

} // namespace detail

/*! \brief All partial valuations over `closure` in matrix `m`.

  Rows are produced by tree expansion: atoms first, then each column in
  closure order, branching on every value of the multioperation cell. Because
  columns are expanded left to right with values in ascending order, the
  output is already in lexicographic order; ids are 1..n in that order.
*/
inline Table generate_table( const SubformulaClosure& closure, std::shared_ptr<const Nmatrix> m )
{
  detail::require_interpreted( closure, *m );

  Table table{ closure, m, {} };
  const std::size_t n = closure.size();
  std::vector<Value> current( n, 0 );

  // Candidate values for column i, given columns < i.
  auto candidates = [&]( std::size_t i ) -> ValueSet {
    const auto& ch = closure.children( i );
    if ( ch.empty() )
      return m->atom_values;
    if ( ch.size() == 1 )
      return m->cell( closure[i].op(), current[ch[0]] );
    return m->cell( closure[i].op(), current[ch[0]], current[ch[1]] );
  };

  // Iterative DFS; pending[i] holds the values of column i still to try.
  std::vector<std::uint8_t> pending( n, 0 );
  std::size_t depth = 0;
  pending[0] = candidates( 0 ).bits();
  while ( true )
  {
    if ( pending[depth] == 0 )
    {
      if ( depth == 0 )
        break;
      --depth;
      continue;
    }
    auto v = static_cast<Value>( std::countr_zero( pending[depth] ) );
    pending[depth] &= static_cast<std::uint8_t>( pending[depth] - 1 );
    current[depth] = v;
    if ( depth + 1 == n )
    {
      table.rows.push_back( { static_cast<RowId>( table.rows.size() + 1 ), current } );
      continue;
    }
    ++depth;
    pending[depth] = candidates( depth ).bits();
  }
  return table;
}

inline Table generate_table( const SubformulaClosure& closure, MatrixKind kind )
{
  return generate_table( closure, builtin( kind ) );
}

namespace detail
{

inline std::uint64_t saturating_pow( std::uint64_t base, std::size_t exp )
{
  std::uint64_t r = 1;
  for ( std::size_t i = 0; i < exp; ++i )
  {
    if ( base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base )
      return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

inline std::uint64_t saturating_mul( std::uint64_t a, std::uint64_t b )
{
  if ( a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a )
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

inline std::size_t atom_count( const SubformulaClosure& c )
{
  return static_cast<std::size_t>(
      std::count_if( c.formulas().begin(), c.formulas().end(), []( const Formula& f ) { return f.is_atom(); } ) );
}

} // namespace detail

/// |atom values|^|atoms|. The atom base is 2 for the intuitionistic matrix, |V| otherwise.
inline std::uint64_t lower_bound( const SubformulaClosure& c, const Nmatrix& m )
{
  return detail::saturating_pow( m.atom_values.size(), detail::atom_count( c ) );
}

/// kappa^(|sub| - |atoms|) * |atom values|^|atoms|.
inline std::uint64_t upper_bound( const SubformulaClosure& c, const Nmatrix& m )
{
  std::size_t a = detail::atom_count( c );
  return detail::saturating_mul( detail::saturating_pow( branching_factor( m ), c.size() - a ), lower_bound( c, m ) );
}

inline std::uint64_t lower_bound( const Formula& f, const Nmatrix& m )
{
  return lower_bound( subformula_closure( { f } ), m );
}

inline std::uint64_t upper_bound( const Formula& f, const Nmatrix& m )
{
  return upper_bound( subformula_closure( { f } ), m );
}

} // namespace rnmx
