#include "xlart/rewriting.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace xlart {

  namespace {

    ////////////////////////////////////////////////////////////////////////
    // Views over words, so the searches below can run on w^-1 or w a
    // without copying.
    ////////////////////////////////////////////////////////////////////////

    struct PlainView {
      std::span<Letter const> w;
      std::size_t             size() const noexcept {
        return w.size();
      }
      Letter operator[](std::size_t i) const noexcept {
        return w[i];
      }
    };

    struct InverseView {
      std::span<Letter const> w;
      std::size_t             size() const noexcept {
        return w.size();
      }
      Letter operator[](std::size_t i) const noexcept {
        return w[w.size() - 1 - i].inv();
      }
    };

    template <typename View>
    struct AppendView {
      View   base;
      Letter a;
      std::size_t size() const noexcept {
        return base.size() + 1;
      }
      Letter operator[](std::size_t i) const noexcept {
        return i == base.size() ? a : base[i];
      }
    };

    template <typename View>
    Word materialize(View const& v, std::size_t begin, std::size_t end) {
      Word out;
      out.reserve(end - begin);
      for (std::size_t i = begin; i < end; ++i) {
        out.push_back(v[i]);
      }
      return out;
    }

    ////////////////////////////////////////////////////////////////////////
    // Run statistics of a two-generator subword
    ////////////////////////////////////////////////////////////////////////

    struct Stats {
      std::size_t len = 0;
      Letter      first;
      Letter      last;
      std::size_t pre_pos = 0;  // alternating run starting at first
      std::size_t pre_neg = 0;
      std::size_t suf_pos = 0;  // alternating run ending at last
      std::size_t suf_neg = 0;
      std::size_t max_pos = 0;
      std::size_t max_neg = 0;
      std::size_t full_pos = 0;  // start positions of runs of length >= m
      std::size_t full_neg = 0;
    };

    struct Block {
      std::size_t   begin;
      GeneratorPair pair;
      unsigned      m;
    };

    // Maximal suffix of v[0, e) over at most two names, when it has exactly
    // two names with a finite label.
    template <typename View>
    std::optional<Block>
    block_ending_at(View const& v, std::size_t e, GroupContext const& ctx) {
      std::array<GeneratorId, 2> names{};
      std::size_t                count = 0;
      std::size_t                i = e;
      while (i > 0) {
        GeneratorId g = v[i - 1].name;
        if (count == 0 || (names[0] != g && (count == 1 || names[1] != g))) {
          if (count == 2) {
            break;
          }
          names[count++] = g;
        }
        --i;
      }
      if (count < 2) {
        return std::nullopt;
      }
      EdgeLabel m = ctx.m(names[0], names[1]);
      if (m.is_infinite()) {
        return std::nullopt;
      }
      return Block{i, GeneratorPair{names[0], names[1]}, m.value()};
    }

    template <typename At>
    std::optional<detail::ScanHit>
    classify_stats(Stats const& st, GeneratorPair pair, unsigned M, At&& at) {
      bool const even = M % 2 == 0;
      auto other = [&pair](Letter a, bool inverse) {
        return Letter{pair.other(a.name), inverse};
      };
      auto delta = [&](Letter a) {
        return even ? a : Letter{pair.other(a.name), a.inverse};
      };
      std::size_t const L = st.len;
      GeneratorId const x = st.first.name;
      if (L == M && st.pre_pos >= M) {
        return detail::ScanHit{CriticalKind::all_pos_full,
                               Letter{even ? x : pair.other(x), false}};
      }
      if (L == M && st.pre_neg >= M) {
        return detail::ScanHit{CriticalKind::all_neg_full,
                               Letter{even ? x : pair.other(x), true}};
      }
      std::size_t const p = std::min<std::size_t>(st.max_pos, M);
      std::size_t const n = std::min<std::size_t>(st.max_neg, M);
      if (st.max_pos > 0 && st.max_neg > 0) {
        if (p + n < M) {
          return std::nullopt;
        }
        bool const over = p + n > M;
        if (st.first.positive() && st.pre_pos >= p && st.suf_neg >= n) {
          return detail::ScanHit{over ? CriticalKind::over_critical_pos_neg
                                      : CriticalKind::unsigned_pos_neg,
                                 other(st.last, false)};
        }
        if (!st.first.positive() && st.pre_neg >= n && st.suf_pos >= p) {
          return detail::ScanHit{over ? CriticalKind::over_critical_neg_pos
                                      : CriticalKind::unsigned_neg_pos,
                                 other(st.last, true)};
        }
        return std::nullopt;
      }
      if (L <= M) {
        return std::nullopt;
      }
      bool const positive = st.max_pos > 0;
      if ((positive ? st.full_pos : st.full_neg) != 1) {
        return std::nullopt;
      }
      if ((positive ? st.pre_pos : st.pre_neg) >= M) {
        return detail::ScanHit{
            positive ? CriticalKind::pos_left : CriticalKind::neg_left,
            other(st.last, !positive)};
      }
      if ((positive ? st.suf_pos : st.suf_neg) >= M) {
        return detail::ScanHit{
            positive ? CriticalKind::pos_right : CriticalKind::neg_right,
            delta(at(L - M - 1))};
      }
      return std::nullopt;
    }

    // Walks s = e-1, e-2, ... over the block ending at e, keeping the
    // statistics of v[s, e) current. visit(s, stats, lead_stats) may return
    // true to stop; lead_stats(b) gives the statistics of b v[s, e).
    template <typename View, typename Visit>
    void scan_block(View const& v, std::size_t e, Block const& blk, Visit&& visit) {
      unsigned const M = blk.m;
      // runs ending at e-1
      std::size_t suf_pos_total = 0, suf_neg_total = 0;
      for (bool positive : {true, false}) {
        std::size_t len = 0;
        for (std::size_t i = e; i > blk.begin; --i) {
          Letter c = v[i - 1];
          if (c.positive() != positive || (len > 0 && c.name == v[i].name)) {
            break;
          }
          ++len;
        }
        (positive ? suf_pos_total : suf_neg_total) = len;
      }

      Stats st;
      st.last = v[e - 1];
      std::size_t run_pos = 0, run_neg = 0;  // runs starting at s + 1
      for (std::size_t s = e; s-- > blk.begin;) {
        Letter const c = v[s];
        bool const   has_next = s + 1 < e;
        std::size_t  rp = 0, rn = 0;
        if (c.positive()) {
          rp = (has_next && v[s + 1].positive() && v[s + 1].name != c.name)
                   ? run_pos + 1
                   : 1;
        } else {
          rn = (has_next && !v[s + 1].positive() && v[s + 1].name != c.name)
                   ? run_neg + 1
                   : 1;
        }
        run_pos = rp;
        run_neg = rn;
        st.len = e - s;
        st.first = c;
        st.pre_pos = rp;
        st.pre_neg = rn;
        st.suf_pos = std::min(suf_pos_total, st.len);
        st.suf_neg = std::min(suf_neg_total, st.len);
        st.max_pos = std::max(st.max_pos, rp);
        st.max_neg = std::max(st.max_neg, rn);
        st.full_pos += rp >= M ? 1 : 0;
        st.full_neg += rn >= M ? 1 : 0;

        auto lead_stats = [&st, c, M](Letter b) {
          Stats lt = st;
          std::size_t bp = 0, bn = 0;
          if (b.positive()) {
            bp = (c.positive() && c.name != b.name) ? st.pre_pos + 1 : 1;
          } else {
            bn = (!c.positive() && c.name != b.name) ? st.pre_neg + 1 : 1;
          }
          lt.len = st.len + 1;
          lt.first = b;
          lt.pre_pos = bp;
          lt.pre_neg = bn;
          if (bp == lt.len) {
            lt.suf_pos = lt.len;
          }
          if (bn == lt.len) {
            lt.suf_neg = lt.len;
          }
          lt.max_pos = std::max(lt.max_pos, bp);
          lt.max_neg = std::max(lt.max_neg, bn);
          lt.full_pos += bp >= M ? 1 : 0;
          lt.full_neg += bn >= M ? 1 : 0;
          return lt;
        };
        if (visit(s, st, lead_stats)) {
          return;
        }
      }
    }

    template <typename View>
    std::optional<detail::ScanHit> hit_plain(View const&   v,
                                             std::size_t   s,
                                             Stats const&  st,
                                             Block const&  blk) {
      return classify_stats(st, blk.pair, blk.m,
                            [&](std::size_t k) { return v[s + k]; });
    }

    template <typename View>
    std::optional<detail::ScanHit> hit_lead(View const&  v,
                                            std::size_t  s,
                                            Letter       b,
                                            Stats const& st,
                                            Block const& blk) {
      return classify_stats(st, blk.pair, blk.m, [&](std::size_t k) {
        return k == 0 ? b : v[s + k - 1];
      });
    }

    ////////////////////////////////////////////////////////////////////////
    // Rightward reducing sequences
    ////////////////////////////////////////////////////////////////////////

    struct Link {
      std::size_t           start;
      std::size_t           end;
      std::optional<Letter> lead;
    };

    template <typename View>
    class ChainSearch {
     public:
      ChainSearch(View const& v, GroupContext const& ctx) : _v(v), _ctx(ctx) {}

      // A factorisation of the whole view whose last tau image ends in
      // target, as links in left-to-right order.
      std::optional<std::vector<Link>> find(Letter target) {
        if (_v.size() == 0 || !reach(_v.size(), target)) {
          return std::nullopt;
        }
        std::vector<Link> links;
        std::size_t       e = _v.size();
        Letter            t = target;
        while (true) {
          Link const& l = _memo.at(key(e, t)).link;
          links.push_back(l);
          if (!l.lead) {
            break;
          }
          e = l.start;
          t = *l.lead;
        }
        std::reverse(links.begin(), links.end());
        return links;
      }

     private:
      struct Entry {
        bool ok;
        Link link;
      };

      std::uint64_t key(std::size_t e, Letter t) const {
        return static_cast<std::uint64_t>(e) * _ctx.letter_count() + t.index();
      }

      bool reach(std::size_t e, Letter t) {
        auto k = key(e, t);
        if (auto it = _memo.find(k); it != _memo.end()) {
          return it->second.ok;
        }
        Entry result{false, {}};
        auto  blk = e > 0 ? block_ending_at(_v, e, _ctx) : std::nullopt;
        if (blk && blk->pair.contains(t.name)) {
          std::array<Letter, 4> const leads{Letter::pos(blk->pair.first),
                                            Letter::neg(blk->pair.first),
                                            Letter::pos(blk->pair.second),
                                            Letter::neg(blk->pair.second)};
          scan_block(_v, e, *blk, [&](std::size_t s, Stats const& st, auto&& lead_stats) {
            auto h = hit_plain(_v, s, st, *blk);
            if (h && !is_over_critical(h->kind) && h->tau_last == t) {
              result = {true, Link{s, e, std::nullopt}};
              return true;
            }
            for (Letter b : leads) {
              if (b == _v[s].inv()) {
                continue;
              }
              auto hb = hit_lead(_v, s, b, lead_stats(b), *blk);
              if (hb && !is_over_critical(hb->kind) && hb->tau_last == t
                  && reach(s, b)) {
                result = {true, Link{s, e, b}};
                return true;
              }
            }
            return false;
          });
        }
        _memo.emplace(k, result);
        return result.ok;
      }

      View const&                              _v;
      GroupContext const&                      _ctx;
      std::unordered_map<std::uint64_t, Entry> _memo;
    };

    // Start of an over-critical suffix of v (one of the two unsigned shapes).
    template <typename View>
    std::optional<std::size_t> over_critical_suffix(View const&         v,
                                                    GroupContext const& ctx) {
      std::size_t const e = v.size();
      auto              blk = e > 0 ? block_ending_at(v, e, ctx) : std::nullopt;
      if (!blk) {
        return std::nullopt;
      }
      std::optional<std::size_t> found;
      scan_block(v, e, *blk, [&](std::size_t s, Stats const& st, auto&&) {
        auto h = hit_plain(v, s, st, *blk);
        if (h && is_over_critical(h->kind)) {
          found = s;
          return true;
        }
        return false;
      });
      return found;
    }

    Word checked_tau(std::span<Letter const> c, GroupContext const& ctx) {
      auto names = generators_of(c);
      if (names.size() != 2) {
        throw std::logic_error("tau applied to a word not over two generators: "
                               + to_string(c));
      }
      EdgeLabel m = ctx.m(*names.begin(), *names.rbegin());
      auto      img = tau(c, m);
      if (!img) {
        throw std::logic_error("scanner and classifier disagree on "
                               + to_string(c));
      }
      return *img;
    }

    // Rewrites v via the links; the final carry letter is dropped.
    template <typename View>
    Word apply_links(View const&              v,
                     std::vector<Link> const& links,
                     Letter                   target,
                     GroupContext const&      ctx,
                     ReductionTrace*          trace) {
      Word out = materialize(v, 0, links.front().start);
      for (std::size_t i = 0; i < links.size(); ++i) {
        Link const& l = links[i];
        Word        c;
        if (l.lead) {
          c.push_back(*l.lead);
        }
        for (std::size_t j = l.start; j < l.end; ++j) {
          c.push_back(v[j]);
        }
        Word   img = checked_tau(c, ctx);
        Letter expected = i + 1 < links.size() ? *links[i + 1].lead : target;
        if (img.back() != expected) {
          throw std::logic_error("reducing sequence broke at " + to_string(c));
        }
        if (trace != nullptr) {
          trace->steps.push_back(
              {l.lead ? l.start - 1 : l.start, Move::tau_critical});
        }
        out.insert(out.end(), img.begin(), img.end() - 1);
      }
      return out;
    }

    // Geodesic for v a when v is geodesic; nullopt when v a is geodesic
    // already.
    template <typename View>
    std::optional<Word> shorten_append(View const&         v,
                                       Letter              a,
                                       GroupContext const& ctx,
                                       ReductionTrace*     trace) {
      std::size_t const L = v.size();
      if (L > 0 && v[L - 1] == a.inv()) {
        if (trace != nullptr) {
          trace->steps.push_back({L - 1, Move::free_cancel});
        }
        return materialize(v, 0, L - 1);
      }
      AppendView<View> va{v, a};
      if (auto s = over_critical_suffix(va, ctx)) {
        Word out = materialize(va, 0, *s);
        Word c = materialize(va, *s, va.size());
        Word img = checked_tau(c, ctx);
        out.insert(out.end(), img.begin(), img.end());
        if (trace != nullptr) {
          trace->steps.push_back({*s, Move::tau_over_critical});
        }
        return out;
      }
      ChainSearch<View> search(v, ctx);
      if (auto links = search.find(a.inv())) {
        Word out = apply_links(v, *links, a.inv(), ctx, trace);
        if (trace != nullptr) {
          trace->steps.push_back({L - 1, Move::free_cancel});
        }
        return out;
      }
      return std::nullopt;
    }

    template <typename View>
    bool append_shortens(View const& v, Letter a, GroupContext const& ctx) {
      std::size_t const L = v.size();
      if (L > 0 && v[L - 1] == a.inv()) {
        return true;
      }
      if (over_critical_suffix(AppendView<View>{v, a}, ctx)) {
        return true;
      }
      ChainSearch<View> search(v, ctx);
      return search.find(a.inv()).has_value();
    }

    // Encodes a word as bytes for hashing.
    std::string key_of(std::span<Letter const> w) {
      std::string k;
      k.reserve(w.size());
      for (Letter a : w) {
        k.push_back(static_cast<char>(a.index()));
      }
      return k;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Reduction
  ////////////////////////////////////////////////////////////////////////

  Reduction reduce_to_geodesic(std::span<Letter const> w, GroupContext const& ctx) {
    ctx.check_word(w);
    Reduction r;
    r.word.reserve(w.size());
    for (Letter a : w) {
      auto shorter = shorten_append(PlainView{r.word}, a, ctx, &r.trace);
      if (shorter) {
        r.word = std::move(*shorter);
      } else {
        r.word.push_back(a);
      }
    }
    r.trace.result_length = r.word.size();
    return r;
  }

  Word geodesic(std::span<Letter const> w, GroupContext const& ctx) {
    return reduce_to_geodesic(w, ctx).word;
  }

  Word append_reduce(std::span<Letter const> w, Letter a, GroupContext const& ctx) {
    if (auto shorter = shorten_append(PlainView{w}, a, ctx, nullptr)) {
      return std::move(*shorter);
    }
    Word out(w.begin(), w.end());
    out.push_back(a);
    return out;
  }

  Word prepend_reduce(Letter a, std::span<Letter const> w, GroupContext const& ctx) {
    if (auto shorter = shorten_append(InverseView{w}, a.inv(), ctx, nullptr)) {
      return invert(*shorter);
    }
    Word out;
    out.reserve(w.size() + 1);
    out.push_back(a);
    out.insert(out.end(), w.begin(), w.end());
    return out;
  }

  bool is_left_divisor(Letter a, std::span<Letter const> w, GroupContext const& ctx) {
    // a^-1 w shortens iff w^-1 a shortens
    return append_shortens(InverseView{w}, a, ctx);
  }

  bool is_right_divisor(std::span<Letter const> w, Letter a, GroupContext const& ctx) {
    return append_shortens(PlainView{w}, a.inv(), ctx);
  }

  bool equal_elements(std::span<Letter const> u,
                      std::span<Letter const> v,
                      GroupContext const&     ctx) {
    return geodesic(concat(u, invert(v)), ctx).empty();
  }

  ////////////////////////////////////////////////////////////////////////
  // Closure and normal form
  ////////////////////////////////////////////////////////////////////////

  std::vector<Word> geodesic_closure(std::span<Letter const> w,
                                     GroupContext const&     ctx,
                                     std::size_t             cap) {
    ctx.check_word(w);
    std::unordered_set<std::string> seen;
    std::vector<Word>               found;
    std::queue<Word>                todo;
    seen.insert(key_of(w));
    found.emplace_back(w.begin(), w.end());
    todo.emplace(w.begin(), w.end());
    while (!todo.empty()) {
      Word cur = std::move(todo.front());
      todo.pop();
      for (std::size_t i = 0; i < cur.size(); ++i) {
        std::set<GeneratorId> names;
        for (std::size_t j = i; j < cur.size(); ++j) {
          names.insert(cur[j].name);
          if (names.size() > 2) {
            break;
          }
          if (names.size() < 2) {
            continue;
          }
          std::span<Letter const> sub(cur.data() + i, j + 1 - i);
          EdgeLabel m = ctx.m(*names.begin(), *names.rbegin());
          auto      form = classify_critical(sub, m);
          if (!form || is_over_critical(form->kind)) {
            continue;
          }
          Word next(cur.begin(), cur.begin() + i);
          Word img = tau(*form, m);
          next.insert(next.end(), img.begin(), img.end());
          next.insert(next.end(), cur.begin() + j + 1, cur.end());
          if (seen.insert(key_of(next)).second) {
            if (found.size() >= cap) {
              throw CapExceeded("geodesic closure of " + to_string(w)
                                + " exceeds " + std::to_string(cap)
                                + " words");
            }
            found.push_back(next);
            todo.push(std::move(next));
          }
        }
      }
    }
    std::sort(found.begin(), found.end(), [&ctx](Word const& a, Word const& b) {
      return ctx.shortlex_less(a, b);
    });
    return found;
  }

  Word normal_form(std::span<Letter const> w, GroupContext const& ctx) {
    Word        cur = geodesic(w, ctx);
    std::size_t off = 0;
    Word        out;
    out.reserve(cur.size());
    auto const& order = ctx.letter_order();
    while (off < cur.size()) {
      std::span<Letter const> rest(cur.data() + off, cur.size() - off);
      std::size_t const       first_rank = ctx.rank_of(rest.front());
      std::optional<Letter>   better;
      for (std::size_t r = 0; r < first_rank; ++r) {
        if (is_left_divisor(order[r], rest, ctx)) {
          better = order[r];
          break;
        }
      }
      if (!better) {
        out.push_back(rest.front());
        ++off;
        continue;
      }
      out.push_back(*better);
      cur = prepend_reduce(better->inv(), rest, ctx);
      off = 0;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cyclic reduction
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Geodesic for a r a^-1 given geodesic r.
    Word conjugate_by_letter(Letter a, std::span<Letter const> r, GroupContext const& ctx) {
      Word t = prepend_reduce(a, r, ctx);
      return append_reduce(t, a.inv(), ctx);
    }

  }  // namespace

  Conjugated cyclic_reduce_element(std::span<Letter const> w,
                                   GroupContext const&     ctx) {
    Conjugated out{geodesic(w, ctx), {}};
    bool       improved = true;
    while (improved) {
      improved = false;
      for (Letter a : ctx.letter_order()) {
        Word t = conjugate_by_letter(a, out.word, ctx);
        if (t.size() < out.word.size()) {
          out.word = std::move(t);
          out.conjugator.push_back(a.inv());
          improved = true;
          break;
        }
      }
    }
    out.conjugator = free_reduce(out.conjugator);
    return out;
  }

  Conjugated specially_cyclically_reduce(std::span<Letter const> w,
                                         GroupContext const&     ctx) {
    Conjugated out = cyclic_reduce_element(w, ctx);
    while (true) {
      std::optional<Conjugated> shorter;
      Word const&               r = out.word;
      Word                      g = r;  // geodesic for the k-th rotation
      for (std::size_t k = 0; k < r.size() && !shorter; ++k) {
        if (k > 0) {
          Letter a = r[k - 1];
          g = append_reduce(prepend_reduce(a.inv(), g, ctx), a, ctx);
        }
        Word prefix(r.begin(), r.begin() + k);
        if (g.size() < r.size()) {
          shorter = Conjugated{g, prefix};
          break;
        }
        for (Letter a : ctx.letter_order()) {
          Word t = conjugate_by_letter(a, g, ctx);
          if (t.size() < g.size()) {
            prefix.push_back(a.inv());
            shorter = Conjugated{std::move(t), std::move(prefix)};
            break;
          }
        }
      }
      if (!shorter) {
        break;
      }
      Conjugated again = cyclic_reduce_element(shorter->word, ctx);
      out.conjugator = free_reduce(
          concat(concat(out.conjugator, shorter->conjugator), again.conjugator));
      out.word = std::move(again.word);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // detail
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::optional<detail::ScanHit>>
  detail::scan_suffixes(std::span<Letter const> w,
                        std::size_t             e,
                        std::optional<Letter>   lead,
                        GroupContext const&     ctx) {
    std::vector<std::optional<ScanHit>> out(e);
    PlainView                           v{w};
    auto blk = e > 0 ? block_ending_at(v, e, ctx) : std::nullopt;
    if (!blk) {
      return out;
    }
    scan_block(v, e, *blk, [&](std::size_t s, Stats const& st, auto&& lead_stats) {
      if (!lead) {
        out[s] = hit_plain(v, s, st, *blk);
      } else if (blk->pair.contains(lead->name) && *lead != v[s].inv()) {
        out[s] = hit_lead(v, s, *lead, lead_stats(*lead), *blk);
      }
      return false;
    });
    return out;
  }

}  // namespace xlart
