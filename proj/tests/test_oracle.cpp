#include <rnmx/oracle.hpp>
#include <rnmx/parser.hpp>

#include "support/corpus.hpp"

#include <gtest/gtest.h>

using namespace rnmx;

namespace
{

bool proves( const char* s ) { return g4ip_prove( parse( s, Signature::ipl ) ); }

} // namespace

TEST( G4ip, Examples )
{
  EXPECT_TRUE( proves( "p -> p" ) );
  EXPECT_FALSE( proves( "p \\/ ~p" ) );
  EXPECT_TRUE( proves( "~~(p \\/ ~p)" ) );
  EXPECT_TRUE( proves( "(q -> p) -> ((q -> ~p) -> ~q)" ) );
}

TEST( G4ip, ClassicalGap )
{
  EXPECT_FALSE( proves( "p \\/ ~p" ) );
  EXPECT_FALSE( proves( "~~p -> p" ) );
  EXPECT_FALSE( proves( "((p -> q) -> p) -> p" ) );
  EXPECT_TRUE( proves( "~~(p \\/ ~p)" ) );
  EXPECT_TRUE( proves( "~~(~~p -> p)" ) );
  EXPECT_TRUE( proves( "~~(((p -> q) -> p) -> p)" ) );
  EXPECT_TRUE( proves( "p -> ~~p" ) );
  EXPECT_TRUE( proves( "~~~p -> ~p" ) );
}

TEST( G4ip, HilbertAxioms )
{
  for ( const char* ax : { "p -> (q -> p)", "p -> (q -> p /\\ q)", "(p -> (q -> r)) -> ((p -> q) -> (p -> r))",
                           "p /\\ q -> p", "p /\\ q -> q", "p -> p \\/ q", "q -> p \\/ q",
                           "(p -> r) -> ((q -> r) -> (p \\/ q -> r))", "(q -> p) -> ((q -> ~p) -> ~q)",
                           "p -> (~p -> q)" } )
    EXPECT_TRUE( proves( ax ) ) << ax;
}

TEST( G4ip, Premises )
{
  auto f = []( const char* s ) { return parse( s, Signature::ipl ); };
  EXPECT_TRUE( g4ip_prove( { f( "p" ), f( "p -> q" ) }, f( "q" ) ) );
  EXPECT_TRUE( g4ip_prove( { f( "p \\/ ~p" ) }, f( "~~p -> p" ) ) );
  EXPECT_FALSE( g4ip_prove( { f( "p -> q" ) }, f( "q -> p" ) ) );
  EXPECT_TRUE( g4ip_prove( { f( "p" ), f( "~p" ) }, f( "r" ) ) );
}

TEST( G4ip, KnownNonTheorems )
{
  EXPECT_FALSE( proves( "(p -> q) \\/ (q -> p)" ) );
  EXPECT_FALSE( proves( "(~p -> q \\/ r) -> (~p -> q) \\/ (~p -> r)" ) );
  EXPECT_FALSE( proves( "~(p /\\ q) -> ~p \\/ ~q" ) );
  EXPECT_TRUE( proves( "~(p \\/ q) -> ~p /\\ ~q" ) );
  EXPECT_TRUE( proves( "~p \\/ ~q -> ~(p /\\ q)" ) );
}

TEST( G4ip, RejectsModalFormulas ) { EXPECT_THROW( g4ip_prove( parse( "[]p", Signature::s4 ) ), std::invalid_argument ); }

TEST( G4ip, TerminatesOnCorpus )
{
  std::size_t provable = 0;
  auto corpus = ref::exhaustive( { "p", "q" }, 3 );
  for ( const auto& f : corpus )
    provable += g4ip_prove( f );
  EXPECT_GT( provable, 0u );
  EXPECT_LT( provable, corpus.size() );
}
