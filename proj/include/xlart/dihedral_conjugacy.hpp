// Conjugacy in the dihedral Artin group G(m) on x1, x2, decided in the
// quotient by the centre.
//
// With y1 = x1, y2 = x1 x2 (m even) or y1 = _m(x1,x2), y2 = x1 x2 (m odd),
// G(m) / <z> is the free product <y1> * <y2> / (y2^{m/2}) resp.
// <y1 | y1^2> * <y2 | y2^m>, where z = y2^{m/2} (m even) or z = y1^2 = y2^m
// (m odd) generates the centre. For m infinite the group is free on
// y1 = x1, y2 = x2 and z is trivial.

#ifndef XLART_DIHEDRAL_CONJUGACY_HPP_
#define XLART_DIHEDRAL_CONJUGACY_HPP_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "group_context.hpp"

namespace xlart {

  enum class Factor { y1, y2 };

  struct YSyllable {
    Factor factor;
    long   exponent;

    friend bool operator==(YSyllable const&, YSyllable const&) = default;
  };

  //! A product of powers of y1 and y2; neighbours may share a factor.
  using YWord = std::vector<YSyllable>;

  //! Free product normal form times a power of z. Neighbouring syllables
  //! have different factors and every exponent lies in its canonical range:
  //! y2 in [1, m/2 - 1] (m even) or [1, m - 1] (m odd), y1 exactly 1 when m
  //! is odd; unrestricted when m is infinite, where z_exp is always 0.
  struct FPNormalForm {
    std::vector<YSyllable> syllables;
    long                   z_exp = 0;

    friend bool operator==(FPNormalForm const&, FPNormalForm const&) = default;
  };

  //! Rewrites a word over x1, x2 in the y generators.
  YWord x_to_y(std::span<Letter const> w, EdgeLabel m);
  //! Expands y1, y2 as words over x1, x2.
  Word  y_to_x(YWord const& w, EdgeLabel m);

  YWord invert(YWord const& w);

  //! Merges neighbours, reduces exponents into range and moves the emitted
  //! powers of z to the end.
  FPNormalForm collect(YWord const& w, EdgeLabel m);

  //! The YWord spelling out a normal form, z included as y2^{m/2} or y2^m.
  YWord to_yword(FPNormalForm const& g, EdgeLabel m);

  //! A YWord c with c^-1 g c = h modulo z, if the images of g and h in the
  //! free product are conjugate.
  std::optional<YWord> fp_conjugacy(FPNormalForm const& g,
                                    FPNormalForm const& h,
                                    EdgeLabel           m);

  enum class CaseTag {
    equal,
    power,
    two_generator,
    general,
    support_mismatch,
    length_mismatch
  };

  std::string_view to_string(CaseTag t);

  struct ConjugacyOutcome {
    bool                conjugate = false;
    //! Present iff conjugate; witness^-1 u witness = v.
    std::optional<Word> witness;
    CaseTag             tag = CaseTag::general;
  };

  //! Decides whether u and v, words over x1 and x2, are conjugate in G(m).
  //! Any witness returned has been checked exactly in G(m).
  ConjugacyOutcome conjugacy_dihedral(std::span<Letter const> u,
                                      std::span<Letter const> v,
                                      EdgeLabel               m);

  //! Equality in G(m) by comparing normal forms.
  bool equal_dihedral(std::span<Letter const> u,
                      std::span<Letter const> v,
                      EdgeLabel               m);

}  // namespace xlart

#endif  // XLART_DIHEDRAL_CONJUGACY_HPP_
