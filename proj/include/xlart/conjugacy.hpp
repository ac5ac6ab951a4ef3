// The conjugacy problem for Artin groups of extra-large type.
//
// Both words are first replaced by specially cyclically reduced conjugates.
// Powers of a generator are conjugate exactly to the same power of a
// generator joined to it by a path of odd edges; elements supported on two
// generators are handled in the dihedral subgroup; otherwise conjugate
// elements have the same support and length, and some cyclic conjugate of
// one is a^n (cyclic conjugate of the other) a^-n with n at most the length.

#ifndef XLART_CONJUGACY_HPP_
#define XLART_CONJUGACY_HPP_

#include <cstddef>
#include <functional>
#include <span>

#include "dihedral_conjugacy.hpp"
#include "group_context.hpp"

namespace xlart {

  //! A match in the general search: w_n = normal_form(a^n u* a^-n) equals the
  //! normal form of some cyclic conjugate v* of v.
  struct SearchHit {
    Letter      letter;
    std::size_t exponent;
    std::size_t length;      // |u|
    std::size_t u_rotation;  // u* = rotation of u by this many letters
    std::size_t v_rotation;
  };

  struct ConjugacyOptions {
    //! Largest exponent n tried; 0 means |u|.
    std::size_t exponent_limit = 0;
    //! Keep searching after the first hit, reporting every hit.
    bool all_hits = false;
    //! Called for each hit in the general case.
    std::function<void(SearchHit const&)> on_hit;
  };

  //! True iff witness^-1 u witness = v.
  bool verify_witness(std::span<Letter const> u,
                      std::span<Letter const> v,
                      std::span<Letter const> witness,
                      GroupContext const&     ctx);

  //! u is x_i^k as a word. Conjugate iff v is x_j^k with i, j in the same
  //! odd component; the witness is the product of _m(x_s,x_t) along a path.
  ConjugacyOutcome conjugacy_power_case(std::span<Letter const> u,
                                        std::span<Letter const> v,
                                        GroupContext const&     ctx);

  //! u cyclically reduced over exactly two names, not a generator power.
  ConjugacyOutcome conjugacy_two_generator_case(std::span<Letter const> u,
                                                std::span<Letter const> v,
                                                GroupContext const&     ctx);

  //! u, v specially cyclically reduced with the same support of at least
  //! three names and the same length.
  ConjugacyOutcome conjugacy_general_case(std::span<Letter const> u,
                                          std::span<Letter const> v,
                                          GroupContext const&     ctx,
                                          ConjugacyOptions const& options = {});

  //! Decides conjugacy of arbitrary words; any witness has been verified.
  ConjugacyOutcome conjugacy(std::span<Letter const> u,
                             std::span<Letter const> v,
                             GroupContext const&     ctx,
                             ConjugacyOptions const& options = {});

}  // namespace xlart

#endif  // XLART_CONJUGACY_HPP_
