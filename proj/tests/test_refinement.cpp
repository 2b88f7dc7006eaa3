#include <rnmx/parser.hpp>
#include <rnmx/refinement.hpp>

#include "support/corpus.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace rnmx;

namespace
{

Formula ipl( const char* s ) { return parse( s, Signature::ipl ); }

Table worked_example() { return generate_table( subformula_closure( { ipl( "~~(p \\/ ~p)" ) } ), MatrixKind::ipl ); }

std::vector<RowId> ids( const Table& t )
{
  std::vector<RowId> out;
  for ( const Row& r : t.rows )
    out.push_back( r.id );
  return out;
}

using Kind = ValidatorCell::Kind;

ValidatorCell skip() { return { Kind::skip, {} }; }
ValidatorCell none() { return { Kind::unsupported, {} }; }
ValidatorCell w( std::vector<RowId> ids ) { return { Kind::supported, std::move( ids ) }; }

} // namespace

TEST( Compatibility, Examples )
{
  Table t = worked_example();
  const Row& r1 = *t.find( 1 );
  EXPECT_TRUE( is_compatible( t, r1, *t.find( 7 ) ) );
  EXPECT_FALSE( is_compatible( t, *t.find( 3 ), *t.find( 2 ) ) );
  EXPECT_TRUE( is_compatible( t, *t.find( 5 ), *t.find( 5 ) ) );
  Row v{ 0, { 0, 1, 0, 1, 1 } }, x{ 0, { 2, 0, 2, 0, 2 } };
  EXPECT_TRUE( is_compatible( v, x, 2 ) );
  EXPECT_THROW( is_compatible( v, Row{ 0, { 0 } }, 2 ), std::invalid_argument );
}

TEST( FindValidators, Examples )
{
  Table t = worked_example();
  EXPECT_EQ( find_validators( t, *t.find( 1 ), 1 ), ( std::vector<RowId>{ 6, 7 } ) );
  EXPECT_EQ( find_validators( t, *t.find( 1 ), 3 ), ( std::vector<RowId>{ 4, 5, 6, 7 } ) );
  EXPECT_EQ( find_validators( t, *t.find( 1 ), 4 ), ( std::vector<RowId>{ 3 } ) );
  EXPECT_TRUE( find_validators( t, *t.find( 4 ), 4 ).empty() );
  EXPECT_THROW( find_validators( t, *t.find( 1 ), 0 ), std::invalid_argument );
}

TEST( Refinement, WorkedExampleTrace )
{
  Table initial = worked_example();
  auto [final_table, trace] = refine_fixpoint( initial );
  ASSERT_EQ( trace.cycles.size(), 3u );

  const auto& c1 = trace.cycles[0];
  EXPECT_EQ( c1.rows, ( std::vector<RowId>{ 1, 2, 3, 4, 5, 6, 7 } ) );
  EXPECT_EQ( c1.removed, ( std::vector<RowId>{ 3, 4, 6 } ) );
  using Cells = std::vector<ValidatorCell>;
  EXPECT_EQ( c1.cells[0], ( Cells{ skip(), w( { 6, 7 } ), skip(), w( { 4, 5, 6, 7 } ), w( { 3 } ) } ) );
  EXPECT_EQ( c1.cells[1], ( Cells{ skip(), w( { 7 } ), skip(), w( { 5, 7 } ), skip() } ) );
  EXPECT_EQ( c1.cells[2], ( Cells{ skip(), none(), skip(), skip(), skip() } ) );
  EXPECT_EQ( c1.cells[3], ( Cells{ skip(), skip(), skip(), skip(), none() } ) );
  EXPECT_EQ( c1.cells[4], Cells( 5, skip() ) );
  EXPECT_EQ( c1.cells[5], ( Cells{ skip(), skip(), skip(), skip(), none() } ) );
  EXPECT_EQ( c1.cells[6], Cells( 5, skip() ) );

  const auto& c2 = trace.cycles[1];
  EXPECT_EQ( c2.rows, ( std::vector<RowId>{ 1, 2, 5, 7 } ) );
  EXPECT_EQ( c2.removed, ( std::vector<RowId>{ 1 } ) );
  EXPECT_EQ( c2.cells[0], ( Cells{ skip(), w( { 7 } ), skip(), w( { 5, 7 } ), none() } ) );
  EXPECT_EQ( c2.cells[1], ( Cells{ skip(), w( { 7 } ), skip(), w( { 5, 7 } ), skip() } ) );

  const auto& c3 = trace.cycles[2];
  EXPECT_EQ( c3.rows, ( std::vector<RowId>{ 2, 5, 7 } ) );
  EXPECT_TRUE( c3.removed.empty() );
  EXPECT_EQ( c3.cells[0], ( Cells{ skip(), w( { 7 } ), skip(), w( { 5, 7 } ), skip() } ) );

  EXPECT_EQ( ids( final_table ), ( std::vector<RowId>{ 2, 5, 7 } ) );
  EXPECT_EQ( final_table.rows[0].values, initial.find( 2 )->values );
}

TEST( Refinement, SingleCycleMatchesPrintedSurvivors )
{
  Table initial = worked_example();
  auto [t1, r1] = refine_cycle( initial );
  EXPECT_EQ( ids( t1 ), ( std::vector<RowId>{ 1, 2, 5, 7 } ) );
  auto [t2, r2] = refine_cycle( t1 );
  EXPECT_EQ( ids( t2 ), ( std::vector<RowId>{ 2, 5, 7 } ) );
  auto [t3, r3] = refine_cycle( t2 );
  EXPECT_EQ( ids( t3 ), ids( t2 ) );
  EXPECT_TRUE( r3.removed.empty() );
}

TEST( Refinement, AtomTableUnchanged )
{
  Table t = generate_table( subformula_closure( { ipl( "p" ) } ), MatrixKind::ipl );
  auto [f, trace] = refine_fixpoint( t );
  EXPECT_EQ( f.rows, t.rows );
  EXPECT_EQ( trace.cycles.size(), 1u );
}

TEST( Refinement, FastPathAgreesWithRecordedPath )
{
  std::mt19937 rng( 41 );
  for ( int i = 0; i < 300; ++i )
  {
    Signature sig = i % 2 ? Signature::s4 : Signature::ipl;
    Formula f = ref::random_formula( rng, 7, 3, sig );
    Table t = generate_table( subformula_closure( { f } ), sig == Signature::ipl ? MatrixKind::ipl : MatrixKind::s4_reduced );
    auto [a, ta] = refine_fixpoint( t, RefineOptions{ true } );
    auto [b, tb] = refine_fixpoint( t, RefineOptions{ false } );
    ASSERT_EQ( a.rows, b.rows );
    ASSERT_EQ( ta.cycles.size(), tb.cycles.size() );
    for ( std::size_t k = 0; k < ta.cycles.size(); ++k )
      ASSERT_EQ( ta.cycles[k].removed, tb.cycles[k].removed );
  }
}

TEST( Refinement, TraceInvariants )
{
  std::mt19937 rng( 43 );
  for ( int i = 0; i < 300; ++i )
  {
    Table t = generate_table( subformula_closure( { ref::random_formula( rng, 8 ) } ), MatrixKind::ipl );
    auto [f, trace] = refine_fixpoint( t );
    std::set<RowId> removed;
    auto all = ids( t );
    std::set<RowId> alive( all.begin(), all.end() );
    for ( const auto& c : trace.cycles )
    {
      ASSERT_EQ( std::set<RowId>( c.rows.begin(), c.rows.end() ), alive );
      for ( std::size_t r = 0; r < c.rows.size(); ++r )
      {
        bool unsupported = std::any_of( c.cells[r].begin(), c.cells[r].end(),
                                        []( const ValidatorCell& x ) { return x.kind == Kind::unsupported; } );
        bool listed = std::binary_search( c.removed.begin(), c.removed.end(), c.rows[r] );
        ASSERT_EQ( unsupported, listed );
      }
      for ( RowId id : c.removed )
      {
        ASSERT_TRUE( removed.insert( id ).second );
        alive.erase( id );
      }
    }
    ASSERT_LE( trace.cycles.size(), t.rows.size() );
  }
}

TEST( Refinement, FixpointProperties )
{
  std::vector<Formula> corpus = ref::exhaustive( { "p", "q" }, 3 );
  std::mt19937 rng( 47 );
  for ( int i = 0; i < 300; ++i )
    corpus.push_back( ref::random_formula( rng, 9 ) );
  for ( const auto& f : corpus )
  {
    Table t = generate_table( subformula_closure( { f } ), MatrixKind::ipl );
    auto [fix, trace] = refine_fixpoint( t, RefineOptions{ false } );
    ASSERT_FALSE( fix.rows.empty() ) << print( f );
    ASSERT_LE( trace.cycles.size(), t.rows.size() );
    // Post-fixpoint soundness.
    for ( const Row& r : fix.rows )
      for ( std::size_t c = 0; c < r.values.size(); ++c )
        if ( r.values[c] == m_ipl().gap )
          ASSERT_FALSE( find_validators( fix, r, c ).empty() ) << print( f );
    // Local consistency survives.
    for ( const Row& r : fix.rows )
      ASSERT_TRUE( locally_consistent( fix.closure, *fix.matrix, r.values ) );
  }
}

TEST( Refinement, BatchEqualsOneAtATimeRemoval )
{
  std::mt19937 rng( 53 );
  int closures = 0;
  for ( int i = 0; i < 600 && closures < 150; ++i )
  {
    Signature sig = i % 3 == 2 ? Signature::s4 : Signature::ipl;
    Formula f = ref::random_formula( rng, 5, 2, sig );
    auto closure = subformula_closure( { f } );
    if ( closure.size() > 6 )
      continue;
    ++closures;
    const auto& lit = sig == Signature::ipl ? ref::literal_ipl() : ref::literal_s4_reduced();
    auto rows = ref::brute_force_rows( lit, closure.formulas() );
    Table t = generate_table( closure, sig == Signature::ipl ? MatrixKind::ipl : MatrixKind::s4_reduced );
    auto [fix, trace] = refine_fixpoint( t );
    std::set<std::size_t> batch;
    for ( const Row& r : fix.rows )
      batch.insert( r.id - 1 );
    for ( int k = 0; k < 20; ++k )
      ASSERT_EQ( ref::one_at_a_time_fixpoint( rows, lit.values[2], lit.values[1], lit.values[0], rng ), batch )
          << print( f );
  }
  EXPECT_GE( closures, 100 );
}

TEST( AppendixA, FixpointTablesMatchGolden )
{
  auto goldens = ref::load_golden_tables( RNMX_TEST_DATA "/appendix_a.txt" );
  ASSERT_EQ( goldens.size(), 8u );
  const std::vector<std::size_t> expected_rows{ 5, 5, 18, 4, 4, 15, 13, 7 };
  for ( std::size_t g = 0; g < goldens.size(); ++g )
  {
    const auto& golden = goldens[g];
    ASSERT_EQ( golden.rows.size(), expected_rows[g] );
    auto roots = ref::maximal_columns( golden.columns );
    auto closure = subformula_closure( roots );
    ASSERT_EQ( closure.size(), golden.columns.size() );

    // Map every golden column to its closure column by formula identity.
    std::vector<std::size_t> where;
    for ( const auto& f : golden.columns )
    {
      ASSERT_TRUE( closure.contains( f ) ) << print( f );
      where.push_back( closure.index_of( f ) );
    }

    auto [fix, trace] = refine_fixpoint( generate_table( closure, MatrixKind::ipl ) );
    std::multiset<std::string> got, want( golden.rows.begin(), golden.rows.end() );
    for ( const Row& r : fix.rows )
    {
      std::string s;
      for ( std::size_t k : where )
        s += m_ipl().value_names[r.values[k]];
      got.insert( s );
    }
    EXPECT_EQ( got, want ) << "table " << g;

    for ( const auto& root : roots )
      for ( const Row& r : fix.rows )
        EXPECT_EQ( r.values[closure.index_of( root )], m_ipl().top );
  }
}
