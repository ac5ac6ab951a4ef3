// Geodesic reduction, the word problem, canonical forms and cyclic reduction
// for Artin groups of extra-large type.
//
// Reduction appends one letter at a time to a geodesic prefix w. If w a is
// not geodesic then either it freely reduces, or w has a factorisation
// alpha u_1 ... u_k such that u_1 and each l(tau(u_{i-1})) u_i are critical
// and tau of the last one ends in a^-1; applying the tau-moves left to right
// and cancelling gives a geodesic of length |w| - 1. The search for such a
// factorisation runs from the right end of w, memoised on (position, wanted
// last letter).

#ifndef XLART_REWRITING_HPP_
#define XLART_REWRITING_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dihedral.hpp"
#include "group_context.hpp"

namespace xlart {

  enum class Move { tau_critical, tau_over_critical, free_cancel };

  struct ReductionStep {
    //! Start of the rewritten subword in the word being rewritten.
    std::size_t position;
    Move        move;
  };

  struct ReductionTrace {
    std::vector<ReductionStep> steps;
    std::size_t                result_length = 0;
  };

  struct Reduction {
    Word           word;
    ReductionTrace trace;
  };

  //! A geodesic word for \p w, with the moves that produced it.
  Reduction reduce_to_geodesic(std::span<Letter const> w, GroupContext const& ctx);

  //! Shorthand for reduce_to_geodesic(w, ctx).word.
  Word geodesic(std::span<Letter const> w, GroupContext const& ctx);

  //! Geodesic for w a, given geodesic \p w.
  Word append_reduce(std::span<Letter const> w, Letter a, GroupContext const& ctx);
  //! Geodesic for a w, given geodesic \p w.
  Word prepend_reduce(Letter a, std::span<Letter const> w, GroupContext const& ctx);

  //! True iff |a^-1 w| < |w| for geodesic \p w, i.e. some geodesic for w
  //! starts with a.
  bool is_left_divisor(Letter a, std::span<Letter const> w, GroupContext const& ctx);
  //! True iff some geodesic for the geodesic word \p w ends with a.
  bool is_right_divisor(std::span<Letter const> w, Letter a, GroupContext const& ctx);

  bool equal_elements(std::span<Letter const> u,
                      std::span<Letter const> v,
                      GroupContext const&     ctx);

  inline constexpr std::size_t default_closure_cap = 1'000'000;

  //! All words reachable from the geodesic \p w by tau-moves on critical
  //! subwords, sorted shortlex. Throws CapExceeded past \p cap words.
  std::vector<Word> geodesic_closure(std::span<Letter const> w,
                                     GroupContext const&     ctx,
                                     std::size_t cap = default_closure_cap);

  //! The shortlex-least geodesic for \p w under ctx.letter_order(). Built
  //! greedily: the first letter is the least left divisor, and so on.
  Word normal_form(std::span<Letter const> w, GroupContext const& ctx);

  //! A word together with a conjugator: word =_G conjugator^-1 * w * conjugator.
  struct Conjugated {
    Word word;
    Word conjugator;
  };

  //! Conjugates by single letters while that shortens; the result is a
  //! geodesic for a cyclically reduced element.
  Conjugated cyclic_reduce_element(std::span<Letter const> w,
                                   GroupContext const&     ctx);

  //! As cyclic_reduce_element, and further until every cyclic permutation of
  //! the result is geodesic and cyclically reduced as an element.
  Conjugated specially_cyclically_reduce(std::span<Letter const> w,
                                         GroupContext const&     ctx);

  namespace detail {

    //! What the fast scanner reports for a candidate subword: the kind it
    //! matched and the last letter of its tau image.
    struct ScanHit {
      CriticalKind kind;
      Letter       tau_last;
    };

    //! Classification of w[s, e) (or of lead * w[s, e)) computed from run
    //! statistics only. Exposed for cross-checking against
    //! classify_critical.
    std::vector<std::optional<ScanHit>>
    scan_suffixes(std::span<Letter const> w,
                  std::size_t             e,
                  std::optional<Letter>   lead,
                  GroupContext const&     ctx);

  }  // namespace detail

}  // namespace xlart

#endif  // XLART_REWRITING_HPP_
