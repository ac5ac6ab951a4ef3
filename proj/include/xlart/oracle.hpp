// Brute-force ground truth from the presentation alone: words are rewritten
// by replacing a subword of a relator rotation with the inverse of the rest
// of the rotation, and freely reduced. Nothing here uses critical words or
// tau, so it can be used to check the rewriting engine.

#ifndef XLART_ORACLE_HPP_
#define XLART_ORACLE_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "group_context.hpp"

namespace xlart {

  inline constexpr std::size_t default_oracle_cap = 10'000'000;

  //! All rotations of _m(x_i,x_j) (_m(x_j,x_i))^-1 and of its inverse, for
  //! every pair with a finite label, indexed by prefix: a subword s of a word
  //! may be replaced by s' whenever s s'^-1 is one of the stored relators.
  class RelatorMoveSet {
   public:
    explicit RelatorMoveSet(GroupContext const& ctx);

    std::vector<Word> const& relators() const noexcept {
      return _relators;
    }
    //! Replacements for the subword \p s, words written as strings of
    //! letter indices; empty if there are none.
    std::vector<std::string> const& replacements(std::string_view s) const;
    //! Longest s with a replacement (twice the largest finite label).
    std::size_t max_subword() const noexcept {
      return _max;
    }

   private:
    std::vector<Word>                                  _relators;
    struct Hash {
      using is_transparent = void;
      std::size_t operator()(std::string_view s) const noexcept {
        return std::hash<std::string_view>{}(s);
      }
    };
    std::unordered_map<std::string, std::vector<std::string>, Hash, std::equal_to<>>
        _moves;
    std::size_t                                        _max = 0;
  };

  //! Exponent sum per odd component, summed in absolute value. A lower bound
  //! for the length of any word equal to \p w.
  std::size_t abelian_lower_bound(std::span<Letter const> w, GroupContext const& ctx);

  class Oracle {
   public:
    //! Searches for geodesics may pass through words up to \p slack letters
    //! longer than the start; the default is the largest finite label.
    explicit Oracle(GroupContext const&        ctx,
                    std::size_t                cap = default_oracle_cap,
                    std::optional<std::size_t> slack = std::nullopt);

    //! Every freely reduced word reachable from free_reduce(w) by relator
    //! moves and free reduction through words of length at most \p bound,
    //! sorted shortlex.
    std::vector<Word> closure(std::span<Letter const> w, std::size_t bound) const;

    //! A geodesic for \p w, built letter by letter: after appending a letter
    //! to the geodesic so far, the closure with the configured slack is
    //! searched for a word two letters shorter.
    Word some_geodesic(std::span<Letter const> w) const;

    std::size_t geodesic_length(std::span<Letter const> w) const;

    bool equal(std::span<Letter const> u, std::span<Letter const> v) const;

    //! First f in shortlex order with |f| <= bound and f^-1 u f = v, testing
    //! each candidate with equal().
    std::optional<Word> conjugate(std::span<Letter const> u,
                                  std::span<Letter const> v,
                                  std::size_t             bound) const;

    //! Shortlex-least word of least length in the closure of \p w; two words
    //! are equal in the group iff these agree.
    Word least_geodesic(std::span<Letter const> w) const;

    GroupContext const& context() const noexcept {
      return _ctx;
    }

   private:
    template <typename Stop>
    std::vector<Word> search(Word start, std::size_t bound, Stop&& stop) const;

    GroupContext const& _ctx;
    RelatorMoveSet      _moves;
    std::size_t         _cap;
    std::size_t         _slack;
    // one-letter steps already taken by some_geodesic; not thread-safe
    mutable std::unordered_map<std::string, std::string> _step_cache;
  };

  //! The elements f^-1 u f for |f| <= bound, each keyed by its least
  //! geodesic and paired with the shortlex-first f that reaches it. Answers
  //! the same question as Oracle::conjugate for many v at once.
  class ConjugacyBall {
   public:
    ConjugacyBall(Oracle const& oracle, std::span<Letter const> u, std::size_t bound);

    std::optional<Word> witness(std::span<Letter const> v) const;
    std::size_t         size() const noexcept {
      return _first.size();
    }
    //! Least geodesic (as a string of letter indices) to first conjugator.
    std::map<std::string, Word> const& entries() const noexcept {
      return _first;
    }

   private:
    Oracle const&                     _oracle;
    std::map<std::string, Word>       _first;
  };

  //! Some f with |f| <= bound and f^-1 u f = v, found where the ball of
  //! radius ceil(bound/2) around u meets the ball of radius floor(bound/2)
  //! around v. Exists iff Oracle::conjugate finds one, but need not be the
  //! shortlex-first witness.
  std::optional<Word> oracle_conjugate_meet(Oracle const&           oracle,
                                            std::span<Letter const> u,
                                            std::span<Letter const> v,
                                            std::size_t             bound);

  // Convenience wrappers building an Oracle per call.
  std::vector<Word>   oracle_closure(std::span<Letter const> w,
                                     std::size_t             bound,
                                     GroupContext const&     ctx,
                                     std::size_t             cap = default_oracle_cap);
  std::size_t         oracle_geodesic_length(std::span<Letter const> w,
                                             GroupContext const&     ctx);
  bool                oracle_equal(std::span<Letter const> u,
                                   std::span<Letter const> v,
                                   GroupContext const&     ctx);
  std::optional<Word> oracle_conjugate(std::span<Letter const> u,
                                       std::span<Letter const> v,
                                       std::size_t             bound,
                                       GroupContext const&     ctx);

}  // namespace xlart

#endif  // XLART_ORACLE_HPP_
