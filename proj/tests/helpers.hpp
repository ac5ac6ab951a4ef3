// Shared test utilities.

#ifndef XLART_TESTS_HELPERS_HPP_
#define XLART_TESTS_HELPERS_HPP_

#include <functional>
#include <string>
#include <vector>

#include "xlart/group_context.hpp"
#include "xlart/io.hpp"

namespace xlart::test {

  //! Parses a word like "x1 x2^-1" against the default names x1, x2, ...
  inline Word W(GroupContext const& ctx, std::string const& text) {
    return parse_word(text, ctx);
  }

  inline GroupContext three_generator(unsigned m12, unsigned m13, unsigned m23) {
    CoxeterMatrix cm(3);
    auto          label = [](unsigned m) { return m == 0 ? EdgeLabel::infinity() : EdgeLabel(m); };
    cm.set(0, 1, label(m12));
    cm.set(0, 2, label(m13));
    cm.set(1, 2, label(m23));
    return GroupContext(std::move(cm));
  }

  //! Calls f on every freely reduced word of length at most max_len over
  //! the first `rank` generators.
  inline void for_each_word(std::size_t                             rank,
                            std::size_t                             max_len,
                            std::function<void(Word const&)> const& f) {
    Word                         w;
    std::function<void()> rec = [&] {
      f(w);
      if (w.size() == max_len) {
        return;
      }
      for (std::size_t i = 0; i < 2 * rank; ++i) {
        Letter a = Letter::from_index(i);
        if (!w.empty() && w.back() == a.inv()) {
          continue;
        }
        w.push_back(a);
        rec();
        w.pop_back();
      }
    };
    rec();
  }

  inline std::vector<Word> all_words(std::size_t rank, std::size_t max_len) {
    std::vector<Word> out;
    for_each_word(rank, max_len, [&](Word const& w) { out.push_back(w); });
    return out;
  }

}  // namespace xlart::test

#endif  // XLART_TESTS_HELPERS_HPP_
