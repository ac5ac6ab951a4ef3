// Letters, words and the Coxeter data of an Artin group of extra-large type.

#ifndef XLART_GROUP_CONTEXT_HPP_
#define XLART_GROUP_CONTEXT_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace xlart {

  //! Index of a standard generator, in [0, n).
  using GeneratorId = std::uint32_t;

  //! A generator or the inverse of a generator.
  struct Letter {
    GeneratorId name = 0;
    bool        inverse = false;

    static constexpr Letter pos(GeneratorId g) noexcept {
      return {g, false};
    }
    static constexpr Letter neg(GeneratorId g) noexcept {
      return {g, true};
    }

    constexpr int sign() const noexcept {
      return inverse ? -1 : 1;
    }
    constexpr bool positive() const noexcept {
      return !inverse;
    }
    constexpr Letter inv() const noexcept {
      return {name, !inverse};
    }
    //! Dense index 2*name + inverse; this is the default letter order.
    constexpr std::size_t index() const noexcept {
      return 2 * static_cast<std::size_t>(name) + (inverse ? 1 : 0);
    }
    static constexpr Letter from_index(std::size_t i) noexcept {
      return {static_cast<GeneratorId>(i / 2), (i % 2) == 1};
    }

    friend constexpr bool operator==(Letter, Letter) = default;
  };

  using Word = std::vector<Letter>;

  //! Thrown for any violated precondition on words or Coxeter data.
  class Error : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  //! Thrown when a bounded enumeration exceeds its configured cap.
  class CapExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! An entry of a Coxeter matrix: a finite integer or infinity.
  class EdgeLabel {
   public:
    constexpr EdgeLabel() noexcept = default;  // infinity
    constexpr explicit EdgeLabel(unsigned m) noexcept : _m(m) {}

    static constexpr EdgeLabel infinity() noexcept {
      return EdgeLabel();
    }

    constexpr bool is_infinite() const noexcept {
      return !_m.has_value();
    }
    constexpr bool is_finite() const noexcept {
      return _m.has_value();
    }
    constexpr bool is_odd() const noexcept {
      return _m.has_value() && (*_m % 2) == 1;
    }
    constexpr bool is_even() const noexcept {
      return _m.has_value() && (*_m % 2) == 0;
    }
    //! Only valid when finite.
    unsigned value() const {
      if (!_m) {
        throw Error("edge label is infinite");
      }
      return *_m;
    }

    friend constexpr bool operator==(EdgeLabel, EdgeLabel) = default;

   private:
    std::optional<unsigned> _m;
  };

  std::string to_string(EdgeLabel m);

  //! Symmetric matrix of edge labels. Construction rejects any off-diagonal
  //! entry below 4.
  class CoxeterMatrix {
   public:
    //! All off-diagonal entries infinite.
    explicit CoxeterMatrix(std::size_t n);

    std::size_t rank() const noexcept {
      return _n;
    }
    EdgeLabel operator()(GeneratorId i, GeneratorId j) const;
    void      set(GeneratorId i, GeneratorId j, EdgeLabel m);

   private:
    std::size_t            _n;
    std::vector<EdgeLabel> _m;
  };

  //! Immutable group data shared by all algorithms.
  class GroupContext {
   public:
    explicit GroupContext(CoxeterMatrix             matrix,
                          std::vector<std::string> names = {});

    //! Every pair of distinct generators gets the label \p m.
    static GroupContext uniform(std::size_t n, EdgeLabel m);
    //! The dihedral Artin group G(m) on x1, x2.
    static GroupContext dihedral(EdgeLabel m);

    std::size_t rank() const noexcept {
      return _matrix.rank();
    }
    std::size_t letter_count() const noexcept {
      return 2 * rank();
    }
    CoxeterMatrix const& matrix() const noexcept {
      return _matrix;
    }
    EdgeLabel m(GeneratorId i, GeneratorId j) const {
      return _matrix(i, j);
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    //! Letter order used for shortlex comparisons. Default: x1 < x1^-1 < x2
    //! < x2^-1 < ...
    std::vector<Letter> const& letter_order() const noexcept {
      return _order;
    }
    void        set_letter_order(std::vector<Letter> order);
    std::size_t rank_of(Letter a) const noexcept {
      return _rank_of[a.index()];
    }
    //! Shortlex comparison: shorter first, then letter order.
    bool shortlex_less(std::span<Letter const> u,
                       std::span<Letter const> v) const;

    //! Component of the graph whose edges are the finite odd labels.
    std::size_t odd_component(GeneratorId g) const {
      return _component.at(g);
    }
    std::size_t odd_component_count() const noexcept {
      return _component_count;
    }
    //! Path of generators from \p from to \p to along odd edges, both ends
    //! included; empty if they lie in different components.
    std::vector<GeneratorId> odd_path(GeneratorId from, GeneratorId to) const;

    //! Throws unless every letter names a generator of this context.
    void check_word(std::span<Letter const> w) const;

   private:
    CoxeterMatrix            _matrix;
    std::vector<std::string> _names;
    std::vector<Letter>      _order;
    std::vector<std::size_t> _rank_of;
    std::vector<std::size_t> _component;
    std::size_t              _component_count = 0;
  };

  ////////////////////////////////////////////////////////////////////////
  // Word operations
  ////////////////////////////////////////////////////////////////////////

  Word free_reduce(std::span<Letter const> w);
  Word invert(std::span<Letter const> w);
  bool is_freely_reduced(std::span<Letter const> w);
  bool is_cyclically_reduced(std::span<Letter const> w);
  Word concat(std::span<Letter const> u, std::span<Letter const> v);
  Word power(Letter a, std::size_t k);

  //! a b a b ... of length k, starting with a. The letters must have distinct
  //! names.
  Word alt_left(Letter a, Letter b, std::size_t k);
  //! ... a b of length k, ending with b. The letters must have distinct names.
  Word alt_right(Letter a, Letter b, std::size_t k);

  struct Rotation {
    Word word;
    //! rotation == prefix^-1 * w * prefix as words.
    Word prefix;
  };

  //! All |w| rotations of a cyclically reduced word, in order of shift.
  std::vector<Rotation> cyclic_conjugates(std::span<Letter const> w);

  std::set<GeneratorId> generators_of(std::span<Letter const> w);

  //! Debug form such as "x1 x2^-1"; the CLI has its own formatter.
  std::string to_string(std::span<Letter const> w);

}  // namespace xlart

#endif  // XLART_GROUP_CONTEXT_HPP_
