#pragma once

#include "formula.hpp"
#include "nmatrix.hpp"
#include "oracle.hpp"
#include "refinement.hpp"
#include "table.hpp"
#include "translation.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace rnmx
{

enum class Logic : std::uint8_t
{
  ipl,
  s4
};

inline constexpr std::string_view logic_name( Logic l ) noexcept { return l == Logic::ipl ? "ipl" : "s4"; }

/// S4 acceptance criterion: value in the designated set, or value 2 in every row.
enum class S4Mode : std::uint8_t
{
  designated,
  necessity
};

struct Verdict
{
  bool valid{ false };
  Logic logic{ Logic::ipl };
  SubformulaClosure closure;
  std::optional<Row> countermodel; ///< lowest-id fixpoint row refuting the claim
  std::size_t initial_rows{ 0 };
  std::size_t final_rows{ 0 };
  std::size_t cycles{ 0 };
  std::uint64_t lb{ 0 };
  std::uint64_t ub{ 0 };
};

/// Folds premises into b1 -> (b2 -> (... -> (bn -> conclusion))).
inline Formula fold_premises( const std::vector<Formula>& premises, const Formula& conclusion )
{
  Formula f = conclusion;
  for ( auto it = premises.rbegin(); it != premises.rend(); ++it )
    f = Formula::imp( *it, f );
  return f;
}

namespace detail
{

inline void require_signature( const std::vector<Formula>& premises, const Formula& conclusion, Signature sig )
{
  if ( conclusion.signature() != sig )
    throw std::invalid_argument( std::string( "conclusion is not a formula of signature " ) +
                                 std::string( signature_name( sig ) ) );
  for ( const auto& p : premises )
    if ( p.signature() != sig )
      throw std::invalid_argument( std::string( "premise is not a formula of signature " ) +
                                   std::string( signature_name( sig ) ) );
}

/// Builds the table, refines it, and looks for a row where every premise is accepted but the conclusion is not.
template <typename Accept>
Verdict decide_over( Logic logic, MatrixKind kind, const std::vector<Formula>& premises, const Formula& conclusion,
                     Accept&& accept )
{
  std::vector<Formula> roots = premises;
  roots.push_back( conclusion );
  Verdict v;
  v.logic = logic;
  v.closure = subformula_closure( roots );

  auto m = builtin( kind );
  Table initial = generate_table( v.closure, m );
  auto [final_table, trace] = refine_fixpoint( initial, RefineOptions{ false } );

  v.initial_rows = initial.rows.size();
  v.final_rows = final_table.rows.size();
  v.cycles = trace.cycles.size();
  v.lb = lower_bound( v.closure, *m );
  v.ub = upper_bound( v.closure, *m );

  std::vector<std::size_t> premise_cols;
  for ( const auto& p : premises )
    premise_cols.push_back( v.closure.index_of( p ) );
  std::size_t goal_col = v.closure.index_of( conclusion );

  for ( const Row& r : final_table.rows )
  {
    bool premises_hold = true;
    for ( std::size_t c : premise_cols )
      premises_hold = premises_hold && accept( r.values[c] );
    if ( premises_hold && !accept( r.values[goal_col] ) )
    {
      v.countermodel = r;
      break;
    }
  }
  v.valid = !v.countermodel.has_value();
  return v;
}

} // namespace detail

/// Intuitionistic consequence over the refined truth table: premises T imply conclusion T.
inline Verdict decide_ipl( const std::vector<Formula>& premises, const Formula& conclusion )
{
  detail::require_signature( premises, conclusion, Signature::ipl );
  const Value top = m_ipl().top;
  return detail::decide_over( Logic::ipl, MatrixKind::ipl, premises, conclusion,
                              [top]( Value v ) { return v == top; } );
}

inline Verdict decide_ipl( const Formula& f ) { return decide_ipl( {}, f ); }

/*! \brief S4 consequence via the reduced matrix.

  Premises are folded into a nested implication whose theoremhood is decided.
  `designated` accepts values 1 and 2; `necessity` accepts only 2.
*/
inline Verdict decide_s4( const std::vector<Formula>& premises, const Formula& conclusion,
                          S4Mode mode = S4Mode::designated )
{
  detail::require_signature( premises, conclusion, Signature::s4 );
  const Nmatrix& m = m_s4_reduced();
  Formula goal = fold_premises( premises, conclusion );
  if ( mode == S4Mode::designated )
    return detail::decide_over( Logic::s4, MatrixKind::s4_reduced, {}, goal,
                                [&m]( Value v ) { return m.designated.contains( v ); } );
  return detail::decide_over( Logic::s4, MatrixKind::s4_reduced, {}, goal, [&m]( Value v ) { return v == m.top; } );
}

inline Verdict decide_s4( const Formula& f, S4Mode mode = S4Mode::designated ) { return decide_s4( {}, f, mode ); }

/// S4 consequence checked row by row: designated premises force a designated conclusion.
inline Verdict decide_s4_direct( const std::vector<Formula>& premises, const Formula& conclusion )
{
  detail::require_signature( premises, conclusion, Signature::s4 );
  const Nmatrix& m = m_s4_reduced();
  return detail::decide_over( Logic::s4, MatrixKind::s4_reduced, premises, conclusion,
                              [&m]( Value v ) { return m.designated.contains( v ); } );
}

/// Decides the nested implication of premises and conclusion with no premises.
inline Verdict entail_via_deduction( const std::vector<Formula>& premises, const Formula& conclusion, Logic logic )
{
  Formula goal = fold_premises( premises, conclusion );
  return logic == Logic::ipl ? decide_ipl( {}, goal ) : decide_s4( {}, goal, S4Mode::designated );
}

struct CrossCheckReport
{
  Formula formula;
  bool ipl_valid{ false };
  bool s4_valid{ false };
  bool oracle_valid{ false };

  bool agree() const noexcept { return ipl_valid == s4_valid && s4_valid == oracle_valid; }
};

/// Table verdict, verdict on the box translation in S4, and the sequent prover.
inline CrossCheckReport cross_check( const Formula& f )
{
  CrossCheckReport r{ f };
  r.ipl_valid = decide_ipl( {}, f ).valid;
  r.s4_valid = decide_s4( {}, box_translate( f ), S4Mode::designated ).valid;
  r.oracle_valid = g4ip_prove( {}, f );
  return r;
}

} // namespace rnmx
