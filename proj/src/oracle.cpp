#include "xlart/oracle.hpp"

#include <algorithm>
#include <unordered_set>

namespace xlart {

  namespace {

    std::string key_of(std::span<Letter const> w) {
      std::string k;
      k.reserve(w.size());
      for (Letter a : w) {
        k.push_back(static_cast<char>(a.index()));
      }
      return k;
    }

    Word word_of(std::string const& k) {
      Word w;
      w.reserve(k.size());
      for (char c : k) {
        w.push_back(Letter::from_index(static_cast<unsigned char>(c)));
      }
      return w;
    }

    std::vector<std::string> const no_moves;

    // All freely reduced words of length k, shortlex order.
    void words_of_length(GroupContext const& ctx, std::size_t k, Word& prefix,
                         std::vector<Word>& out) {
      if (prefix.size() == k) {
        out.push_back(prefix);
        return;
      }
      for (Letter a : ctx.letter_order()) {
        if (!prefix.empty() && prefix.back() == a.inv()) {
          continue;
        }
        prefix.push_back(a);
        words_of_length(ctx, k, prefix, out);
        prefix.pop_back();
      }
    }

  }  // namespace

  RelatorMoveSet::RelatorMoveSet(GroupContext const& ctx) {
    for (GeneratorId i = 0; i < ctx.rank(); ++i) {
      for (GeneratorId j = i + 1; j < ctx.rank(); ++j) {
        EdgeLabel m = ctx.m(i, j);
        if (m.is_infinite()) {
          continue;
        }
        std::size_t const M = m.value();
        Word lhs = alt_left(Letter::pos(i), Letter::pos(j), M);
        Word rhs = alt_left(Letter::pos(j), Letter::pos(i), M);
        Word r = concat(lhs, invert(rhs));
        for (Word const& base : {r, invert(r)}) {
          for (std::size_t k = 0; k < base.size(); ++k) {
            Word rot(base.begin() + k, base.end());
            rot.insert(rot.end(), base.begin(), base.begin() + k);
            _relators.push_back(std::move(rot));
          }
        }
        _max = std::max(_max, 2 * M);
      }
    }
    for (Word const& r : _relators) {
      for (std::size_t k = 0; k <= r.size(); ++k) {
        std::span<Letter const> s(r.data(), k);
        std::string replacement
            = key_of(invert(std::span<Letter const>(r.data() + k, r.size() - k)));
        auto& list = _moves[key_of(s)];
        if (std::find(list.begin(), list.end(), replacement) == list.end()) {
          list.push_back(std::move(replacement));
        }
      }
    }
  }

  std::vector<std::string> const& RelatorMoveSet::replacements(std::string_view s) const {
    auto it = _moves.find(s);
    return it == _moves.end() ? no_moves : it->second;
  }

  std::size_t abelian_lower_bound(std::span<Letter const> w, GroupContext const& ctx) {
    std::vector<long> sums(ctx.odd_component_count(), 0);
    for (Letter a : w) {
      sums[ctx.odd_component(a.name)] += a.sign();
    }
    std::size_t total = 0;
    for (long s : sums) {
      total += static_cast<std::size_t>(s < 0 ? -s : s);
    }
    return total;
  }

  ////////////////////////////////////////////////////////////////////////
  // Oracle
  ////////////////////////////////////////////////////////////////////////

  Oracle::Oracle(GroupContext const& ctx, std::size_t cap, std::optional<std::size_t> slack)
      : _ctx(ctx), _moves(ctx), _cap(cap), _slack(slack.value_or(_moves.max_subword() / 2)) {}

  // Explores shortest words first so that searches stopping at a target
  // length stop early; without a stop the visited set is the same as
  // breadth-first order would give. Words are handled as byte strings of
  // letter indices; inverting a letter flips the low bit.
  template <typename Stop>
  std::vector<Word> Oracle::search(Word start, std::size_t bound, Stop&& stop) const {
    _ctx.check_word(start);
    start = free_reduce(start);
    if (start.size() > bound) {
      throw Error("oracle: word longer than the length bound");
    }
    std::unordered_set<std::string>       seen;
    std::vector<std::vector<std::string>> buckets(bound + 1);
    std::vector<Word>                     found;
    auto visit = [&](std::string k) {
      if (seen.contains(k)) {
        return false;
      }
      seen.insert(k);
      if (seen.size() > _cap) {
        throw CapExceeded("oracle closure exceeds " + std::to_string(_cap)
                          + " words");
      }
      found.push_back(word_of(k));
      buckets[k.size()].push_back(std::move(k));
      return stop(found.back());
    };
    if (visit(key_of(start))) {
      return found;
    }
    auto inv = [](char c) { return static_cast<char>(c ^ 1); };
    std::size_t const max_sub = _moves.max_subword();
    std::size_t       low = 0;
    std::string       next;
    while (true) {
      while (low <= bound && buckets[low].empty()) {
        ++low;
      }
      if (low > bound) {
        break;
      }
      std::string const cur = std::move(buckets[low].back());
      buckets[low].pop_back();
      std::size_t const L = cur.size();
      for (std::size_t i = 0; i <= L; ++i) {
        for (std::size_t k = 0; k <= max_sub && i + k <= L; ++k) {
          auto const& reps = _moves.replacements(std::string_view(cur).substr(i, k));
          for (std::string const& rep : reps) {
            // letters cancelled at the two junctions, while rep survives
            std::size_t left = 0;
            while (left < i && left < rep.size() && cur[i - 1 - left] == inv(rep[left])) {
              ++left;
            }
            std::size_t right = 0;
            while (i + k + right < L && left + right < rep.size()
                   && cur[i + k + right] == inv(rep[rep.size() - 1 - right])) {
              ++right;
            }
            bool const consumed = left + right == rep.size();
            if (!consumed && L - k + rep.size() - 2 * (left + right) > bound) {
              continue;
            }
            next.assign(cur, 0, i - left);
            next.append(rep, left, rep.size() - left - right);
            next.append(cur, i + k + right);
            if (consumed) {
              std::string reduced;
              for (char c : next) {
                if (!reduced.empty() && reduced.back() == inv(c)) {
                  reduced.pop_back();
                } else {
                  reduced.push_back(c);
                }
              }
              next = std::move(reduced);
            }
            if (next.size() <= bound) {
              if (next.size() < low) {
                low = next.size();
              }
              if (visit(next)) {
                return found;
              }
            }
          }
        }
      }
    }
    return found;
  }

  std::vector<Word> Oracle::closure(std::span<Letter const> w, std::size_t bound) const {
    auto out = search(Word(w.begin(), w.end()), bound, [](Word const&) { return false; });
    std::sort(out.begin(), out.end(), [this](Word const& a, Word const& b) {
      return _ctx.shortlex_less(a, b);
    });
    return out;
  }

  Word Oracle::some_geodesic(std::span<Letter const> w) const {
    _ctx.check_word(w);
    // Appending a letter to a geodesic changes the length by exactly one, so
    // it suffices to look for a word two letters shorter after each letter.
    Word v;
    for (Letter a : w) {
      if (!v.empty() && v.back() == a.inv()) {
        v.pop_back();
        continue;
      }
      v.push_back(a);
      if (v.size() < 2 || abelian_lower_bound(v, _ctx) == v.size()) {
        continue;
      }
      std::string const key = key_of(v);
      if (auto it = _step_cache.find(key); it != _step_cache.end()) {
        v = word_of(it->second);
        continue;
      }
      std::size_t const   target = v.size() - 2;
      std::optional<Word> shorter;
      search(v, v.size() + _slack, [&](Word const& x) {
        if (x.size() == target) {
          shorter = x;
          return true;
        }
        return false;
      });
      if (shorter) {
        v = std::move(*shorter);
      }
      _step_cache.emplace(key, key_of(v));
    }
    return v;
  }

  std::size_t Oracle::geodesic_length(std::span<Letter const> w) const {
    return some_geodesic(w).size();
  }

  bool Oracle::equal(std::span<Letter const> u, std::span<Letter const> v) const {
    Word x = free_reduce(concat(u, invert(v)));
    if (abelian_lower_bound(x, _ctx) > 0) {
      return false;
    }
    return geodesic_length(x) == 0;
  }

  std::optional<Word> Oracle::conjugate(std::span<Letter const> u,
                                        std::span<Letter const> v,
                                        std::size_t             bound) const {
    Word const uu = free_reduce(u);
    Word const vv = free_reduce(v);
    // abelianisation is a conjugacy invariant
    std::vector<long> su(_ctx.odd_component_count()), sv(su);
    for (Letter a : uu) {
      su[_ctx.odd_component(a.name)] += a.sign();
    }
    for (Letter a : vv) {
      sv[_ctx.odd_component(a.name)] += a.sign();
    }
    if (su != sv) {
      return std::nullopt;
    }
    for (std::size_t k = 0; k <= bound; ++k) {
      std::vector<Word> fs;
      Word              prefix;
      words_of_length(_ctx, k, prefix, fs);
      for (Word const& f : fs) {
        if (equal(concat(concat(invert(f), uu), f), vv)) {
          return f;
        }
      }
    }
    return std::nullopt;
  }

  Word Oracle::least_geodesic(std::span<Letter const> w) const {
    Word start = free_reduce(w);
    auto all = closure(start, start.size() + _slack);
    return all.front();
  }

  ////////////////////////////////////////////////////////////////////////
  // ConjugacyBall
  ////////////////////////////////////////////////////////////////////////

  ConjugacyBall::ConjugacyBall(Oracle const&           oracle,
                               std::span<Letter const> u,
                               std::size_t             bound)
      : _oracle(oracle) {
    struct Node {
      Word f;
      Word element;  // least geodesic of f^-1 u f
    };
    Word               start = oracle.least_geodesic(u);
    std::vector<Node>  level{{Word{}, start}};
    _first.emplace(key_of(start), Word{});
    for (std::size_t k = 1; k <= bound && !level.empty(); ++k) {
      std::vector<Node> next;
      for (Node const& node : level) {
        for (Letter a : oracle.context().letter_order()) {
          if (!node.f.empty() && node.f.back() == a.inv()) {
            continue;
          }
          Word x = free_reduce(concat(concat(Word{a.inv()}, node.element), Word{a}));
          Word g = oracle.least_geodesic(x);
          auto [it, fresh] = _first.emplace(key_of(g), Word{});
          if (fresh) {
            it->second = node.f;
            it->second.push_back(a);
            next.push_back({it->second, std::move(g)});
          }
        }
      }
      level = std::move(next);
    }
  }

  std::optional<Word> ConjugacyBall::witness(std::span<Letter const> v) const {
    auto it = _first.find(key_of(_oracle.least_geodesic(v)));
    if (it == _first.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::optional<Word> oracle_conjugate_meet(Oracle const&           oracle,
                                            std::span<Letter const> u,
                                            std::span<Letter const> v,
                                            std::size_t             bound) {
    ConjugacyBall const bu(oracle, u, bound - bound / 2);
    ConjugacyBall const bv(oracle, v, bound / 2);
    for (auto const& [key, f2] : bv.entries()) {
      auto it = bu.entries().find(key);
      if (it != bu.entries().end()) {
        return free_reduce(concat(it->second, invert(f2)));
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Wrappers
  ////////////////////////////////////////////////////////////////////////

  std::vector<Word> oracle_closure(std::span<Letter const> w,
                                   std::size_t             bound,
                                   GroupContext const&     ctx,
                                   std::size_t             cap) {
    return Oracle(ctx, cap).closure(w, bound);
  }

  std::size_t oracle_geodesic_length(std::span<Letter const> w, GroupContext const& ctx) {
    return Oracle(ctx).geodesic_length(w);
  }

  bool oracle_equal(std::span<Letter const> u,
                    std::span<Letter const> v,
                    GroupContext const&     ctx) {
    return Oracle(ctx).equal(u, v);
  }

  std::optional<Word> oracle_conjugate(std::span<Letter const> u,
                                       std::span<Letter const> v,
                                       std::size_t             bound,
                                       GroupContext const&     ctx) {
    return Oracle(ctx).conjugate(u, v, bound);
  }

}  // namespace xlart
