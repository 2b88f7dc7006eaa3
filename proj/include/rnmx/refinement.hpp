#pragma once

#include "table.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rnmx
{

/// Row `v` is compatible with `w` iff every top-valued column of `v` is top-valued in `w`.
inline bool is_compatible( const Row& v, const Row& w, Value top )
{
  if ( v.values.size() != w.values.size() )
    throw std::invalid_argument( "rows range over different closures" );
  for ( std::size_t i = 0; i < v.values.size(); ++i )
    if ( v.values[i] == top && w.values[i] != top )
      return false;
  return true;
}

inline bool is_compatible( const Table& t, const Row& v, const Row& w )
{
  return is_compatible( v, w, t.matrix->top );
}

/// Ids of the rows of `table` that send `column` to bottom and keep every top entry of `row`.
inline std::vector<RowId> find_validators( const Table& table, const Row& row, std::size_t column )
{
  const Nmatrix& m = *table.matrix;
  if ( column >= row.values.size() || row.values[column] != m.gap )
    throw std::invalid_argument( "find_validators: the cell does not hold the gap value" );
  std::vector<RowId> ids;
  for ( const Row& w : table.rows )
    if ( w.values[column] == m.bottom && is_compatible( row, w, m.top ) )
      ids.push_back( w.id );
  return ids;
}

/// One cell of a validators table.
struct ValidatorCell
{
  enum class Kind : std::uint8_t
  {
    skip,        ///< value is not the gap value
    supported,   ///< at least one witness
    unsupported, ///< no witness; the row is removed
  };
  Kind kind{ Kind::skip };
  std::vector<RowId> witnesses; ///< ascending; only filled when witnesses are recorded

  friend bool operator==( const ValidatorCell&, const ValidatorCell& ) = default;
};

struct CycleRecord
{
  std::vector<RowId> rows;                       ///< rows alive at cycle start, in table order
  std::vector<std::vector<ValidatorCell>> cells; ///< cells[i][c] for rows[i]; empty unless recorded
  std::vector<RowId> removed;                    ///< ascending
};

struct ValidatorsTrace
{
  std::vector<CycleRecord> cycles;
};

struct RefineOptions
{
  /// Fill CycleRecord::cells with per-column witness lists. Costs O(n^2 m) memory in the worst case.
  bool record_witnesses{ true };
};

namespace detail
{

/// Bit mask over closure columns.
class ColumnMask
{
public:
  explicit ColumnMask( std::size_t columns ) : words_( ( columns + 63 ) / 64, 0 ) {}

  void set( std::size_t i ) { words_[i / 64] |= std::uint64_t{ 1 } << ( i % 64 ); }
  bool test( std::size_t i ) const { return ( words_[i / 64] >> ( i % 64 ) ) & 1u; }

  bool any() const
  {
    for ( auto w : words_ )
      if ( w )
        return true;
    return false;
  }

  bool subset_of( const ColumnMask& o ) const
  {
    for ( std::size_t i = 0; i < words_.size(); ++i )
      if ( words_[i] & ~o.words_[i] )
        return false;
    return true;
  }

  /// Clears every bit that is set in `o`; returns true if anything remains.
  bool subtract( const ColumnMask& o )
  {
    bool rest = false;
    for ( std::size_t i = 0; i < words_.size(); ++i )
    {
      words_[i] &= ~o.words_[i];
      rest = rest || words_[i];
    }
    return rest;
  }

private:
  std::vector<std::uint64_t> words_;
};

struct RowMasks
{
  ColumnMask top;
  ColumnMask bottom;
  ColumnMask gap;
};

inline RowMasks masks_of( const Row& r, const Nmatrix& m )
{
  RowMasks k{ ColumnMask( r.values.size() ), ColumnMask( r.values.size() ), ColumnMask( r.values.size() ) };
  for ( std::size_t i = 0; i < r.values.size(); ++i )
  {
    if ( r.values[i] == m.top )
      k.top.set( i );
    else if ( r.values[i] == m.bottom )
      k.bottom.set( i );
    else if ( r.values[i] == m.gap )
      k.gap.set( i );
  }
  return k;
}

} // namespace detail

/*! \brief One refinement cycle with batch semantics.

  Every row is checked against the table as it stands at cycle start; rows
  with at least one unsupported gap cell are removed together afterwards.
  Survivors keep their ids and order.
*/
inline std::pair<Table, CycleRecord> refine_cycle( const Table& table, const RefineOptions& opts = {} )
{
  const Nmatrix& m = *table.matrix;
  const std::size_t n = table.rows.size();
  const std::size_t cols = table.columns();

  std::vector<detail::RowMasks> masks;
  masks.reserve( n );
  for ( const Row& r : table.rows )
    masks.push_back( detail::masks_of( r, m ) );

  CycleRecord record;
  record.rows.reserve( n );
  std::vector<bool> keep( n, true );

  for ( std::size_t i = 0; i < n; ++i )
  {
    const Row& v = table.rows[i];
    record.rows.push_back( v.id );

    if ( opts.record_witnesses )
    {
      std::vector<ValidatorCell> cells( cols );
      bool unsupported = false;
      if ( masks[i].gap.any() )
      {
        std::vector<std::size_t> compatible;
        for ( std::size_t j = 0; j < n; ++j )
          if ( masks[i].top.subset_of( masks[j].top ) )
            compatible.push_back( j );
        for ( std::size_t c = 0; c < cols; ++c )
        {
          if ( !masks[i].gap.test( c ) )
            continue;
          for ( std::size_t j : compatible )
            if ( masks[j].bottom.test( c ) )
              cells[c].witnesses.push_back( table.rows[j].id );
          std::sort( cells[c].witnesses.begin(), cells[c].witnesses.end() );
          cells[c].kind = cells[c].witnesses.empty() ? ValidatorCell::Kind::unsupported : ValidatorCell::Kind::supported;
          unsupported = unsupported || cells[c].witnesses.empty();
        }
      }
      keep[i] = !unsupported;
      record.cells.push_back( std::move( cells ) );
    }
    else if ( masks[i].gap.any() )
    {
      detail::ColumnMask need = masks[i].gap;
      bool open = true;
      for ( std::size_t j = 0; j < n && open; ++j )
        if ( masks[i].top.subset_of( masks[j].top ) )
          open = need.subtract( masks[j].bottom );
      keep[i] = !open;
    }
  }

  Table next{ table.closure, table.matrix, {} };
  for ( std::size_t i = 0; i < n; ++i )
  {
    if ( keep[i] )
      next.rows.push_back( table.rows[i] );
    else
      record.removed.push_back( table.rows[i].id );
  }
  std::sort( record.removed.begin(), record.removed.end() );
  return { std::move( next ), std::move( record ) };
}

/*! \brief Repeats refine_cycle until a cycle removes nothing.

  The result is the set of partial level valuations over the closure. The
  trace ends with the confirming cycle that removed nothing.
*/
inline std::pair<Table, ValidatorsTrace> refine_fixpoint( const Table& table, const RefineOptions& opts = {} )
{
  ValidatorsTrace trace;
  Table current = table;
  const std::size_t bound = table.rows.size() + 1;
  while ( true )
  {
    auto [next, record] = refine_cycle( current, opts );
    bool done = record.removed.empty();
    trace.cycles.push_back( std::move( record ) );
    current = std::move( next );
    if ( done )
      break;
    if ( trace.cycles.size() > bound )
      throw std::logic_error( "refinement did not converge" );
  }
  return { std::move( current ), std::move( trace ) };
}

} // namespace rnmx
