// Two-generator machinery: the p/n statistics of a word, the geodesic
// criterion for dihedral Artin groups, critical words and the tau and delta
// maps.
//
// All functions here accept words over any two generator names, so they
// apply equally to the dihedral group G(m) on {x1, x2} and to two-generator
// subwords of a word in a larger Artin group.

#ifndef XLART_DIHEDRAL_HPP_
#define XLART_DIHEDRAL_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "group_context.hpp"

namespace xlart {

  //! An unordered pair of distinct generators.
  struct GeneratorPair {
    GeneratorId first = 0;
    GeneratorId second = 1;

    GeneratorId other(GeneratorId g) const noexcept {
      return g == first ? second : first;
    }
    bool contains(GeneratorId g) const noexcept {
      return g == first || g == second;
    }
  };

  //! Longest positive alternating subword, capped at \p m when finite.
  std::size_t p_value(std::span<Letter const> w, EdgeLabel m);
  //! Longest negative alternating subword, capped at \p m when finite.
  std::size_t n_value(std::span<Letter const> w, EdgeLabel m);

  enum class DihedralGeodesy { unique, non_unique, non_geodesic };

  std::string_view to_string(DihedralGeodesy g);

  //! Geodesic iff p + n <= m; the geodesic is the only one iff p + n < m.
  DihedralGeodesy is_geodesic_dihedral(std::span<Letter const> w, EdgeLabel m);

  enum class CriticalKind {
    unsigned_pos_neg,  // _p(x,y) xi (z^-1,t^-1)_n
    unsigned_neg_pos,  // _n(x^-1,y^-1) xi (z,t)_p
    all_pos_full,      // _m(x,y)
    all_neg_full,      // _m(x^-1,y^-1)
    pos_left,          // _m(x,y) xi
    pos_right,         // xi (x,y)_m
    neg_left,          // _m(x^-1,y^-1) xi
    neg_right,         // xi (x^-1,y^-1)_m
    over_critical_pos_neg,
    over_critical_neg_pos
  };

  std::string_view to_string(CriticalKind k);

  constexpr bool is_over_critical(CriticalKind k) noexcept {
    return k == CriticalKind::over_critical_pos_neg
           || k == CriticalKind::over_critical_neg_pos;
  }

  //! Decomposition of a critical or over-critical word. The roles x, y, z, t
  //! are generator names; {x, y} = {z, t} is the pair the word is written
  //! over, and core is the middle subword xi.
  struct CriticalForm {
    CriticalKind kind;
    std::size_t  p = 0;
    std::size_t  n = 0;
    GeneratorId  x = 0;
    GeneratorId  y = 0;
    GeneratorId  z = 0;
    GeneratorId  t = 0;
    Word         core;

    GeneratorPair pair() const noexcept {
      return {x, y};
    }
  };

  //! Recognises the critical and over-critical shapes. A word matching several
  //! shapes gets the first kind in the order all_pos_full, all_neg_full,
  //! unsigned_pos_neg, unsigned_neg_pos, pos_left, pos_right, neg_left,
  //! neg_right. Words over a single name, and all words when m is infinite,
  //! are never critical.
  std::optional<CriticalForm> classify_critical(std::span<Letter const> w,
                                                EdgeLabel               m);

  //! The image of a classified word under tau. Equal in the group to the
  //! classified word; of the same length for critical kinds and strictly
  //! shorter for over-critical ones.
  Word tau(CriticalForm const& form, EdgeLabel m);

  //! classify_critical followed by tau; nullopt when \p w is not critical.
  std::optional<Word> tau(std::span<Letter const> w, EdgeLabel m);

  //! Letter-wise conjugation by Delta = _m(x,y): identity when m is even, swaps
  //! the two names of \p pair when m is odd. Letters outside \p pair are
  //! rejected.
  Word delta(std::span<Letter const> w, GeneratorPair pair, EdgeLabel m);
  //! As above with the pair {x1, x2}.
  Word delta(std::span<Letter const> w, EdgeLabel m);

  //! The Delta element of the pair as the word _m(x,y).
  Word delta_word(GeneratorPair pair, EdgeLabel m);

}  // namespace xlart

#endif  // XLART_DIHEDRAL_HPP_
