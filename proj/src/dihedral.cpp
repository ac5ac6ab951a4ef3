#include "xlart/dihedral.hpp"

#include <algorithm>
#include <vector>

namespace xlart {

  namespace {

    // The names occurring in w, at most two; throws on a third.
    std::vector<GeneratorId> two_names(std::span<Letter const> w) {
      std::vector<GeneratorId> names;
      for (Letter a : w) {
        if (std::find(names.begin(), names.end(), a.name) == names.end()) {
          if (names.size() == 2) {
            throw Error("expected a word over two generators, found "
                        + to_string(w));
          }
          names.push_back(a.name);
        }
      }
      return names;
    }

    void require_two_generator_reduced(std::span<Letter const> w) {
      two_names(w);
      if (!is_freely_reduced(w)) {
        throw Error("expected a freely reduced word, found " + to_string(w));
      }
    }

    bool continues(Letter prev, Letter next, bool positive) {
      return prev.positive() == positive && next.positive() == positive
             && prev.name != next.name;
    }

    // run[i] = length of the alternating run of the given sign starting at i.
    std::vector<std::size_t> runs_from(std::span<Letter const> w, bool positive) {
      std::vector<std::size_t> run(w.size(), 0);
      for (std::size_t i = w.size(); i-- > 0;) {
        if (w[i].positive() != positive) {
          continue;
        }
        run[i] = (i + 1 < w.size() && continues(w[i], w[i + 1], positive))
                     ? run[i + 1] + 1
                     : 1;
      }
      return run;
    }

    std::size_t run_to_end(std::span<Letter const> w, bool positive) {
      std::size_t len = 0;
      for (std::size_t i = w.size(); i-- > 0;) {
        if (w[i].positive() != positive) {
          break;
        }
        if (len > 0 && w[i].name == w[i + 1].name) {
          break;
        }
        ++len;
      }
      return len;
    }

    std::size_t cap(std::size_t v, EdgeLabel m) {
      return m.is_finite() ? std::min<std::size_t>(v, m.value()) : v;
    }

    std::size_t longest_run(std::span<Letter const> w, bool positive) {
      auto run = runs_from(w, positive);
      return run.empty() ? 0 : *std::max_element(run.begin(), run.end());
    }

    Letter letter(GeneratorId g, bool inverse) {
      return Letter{g, inverse};
    }

    Word cat(std::initializer_list<Word> parts) {
      Word out;
      for (auto const& p : parts) {
        out.insert(out.end(), p.begin(), p.end());
      }
      return out;
    }

  }  // namespace

  std::size_t p_value(std::span<Letter const> w, EdgeLabel m) {
    require_two_generator_reduced(w);
    return cap(longest_run(w, true), m);
  }

  std::size_t n_value(std::span<Letter const> w, EdgeLabel m) {
    require_two_generator_reduced(w);
    return cap(longest_run(w, false), m);
  }

  std::string_view to_string(DihedralGeodesy g) {
    switch (g) {
      case DihedralGeodesy::unique:
        return "geodesic-unique";
      case DihedralGeodesy::non_unique:
        return "geodesic-non-unique";
      case DihedralGeodesy::non_geodesic:
        return "non-geodesic";
    }
    return "?";
  }

  DihedralGeodesy is_geodesic_dihedral(std::span<Letter const> w, EdgeLabel m) {
    std::size_t const s = p_value(w, m) + n_value(w, m);
    if (m.is_infinite() || s < m.value()) {
      return DihedralGeodesy::unique;
    }
    return s == m.value() ? DihedralGeodesy::non_unique
                          : DihedralGeodesy::non_geodesic;
  }

  std::string_view to_string(CriticalKind k) {
    switch (k) {
      case CriticalKind::unsigned_pos_neg:
        return "UnsignedPosNeg";
      case CriticalKind::unsigned_neg_pos:
        return "UnsignedNegPos";
      case CriticalKind::all_pos_full:
        return "AllPosFull";
      case CriticalKind::all_neg_full:
        return "AllNegFull";
      case CriticalKind::pos_left:
        return "PosLeft";
      case CriticalKind::pos_right:
        return "PosRight";
      case CriticalKind::neg_left:
        return "NegLeft";
      case CriticalKind::neg_right:
        return "NegRight";
      case CriticalKind::over_critical_pos_neg:
        return "OverCriticalPosNeg";
      case CriticalKind::over_critical_neg_pos:
        return "OverCriticalNegPos";
    }
    return "?";
  }

  std::optional<CriticalForm> classify_critical(std::span<Letter const> w,
                                                EdgeLabel               m) {
    require_two_generator_reduced(w);
    auto names = two_names(w);
    if (m.is_infinite() || names.size() < 2) {
      return std::nullopt;
    }
    GeneratorPair const pair{names[0], names[1]};
    std::size_t const   M = m.value();
    std::size_t const   L = w.size();

    auto const pos_run = runs_from(w, true);
    auto const neg_run = runs_from(w, false);
    std::size_t const max_pos = *std::max_element(pos_run.begin(), pos_run.end());
    std::size_t const max_neg = *std::max_element(neg_run.begin(), neg_run.end());
    std::size_t const p = std::min(max_pos, M);
    std::size_t const n = std::min(max_neg, M);
    bool const has_pos = max_pos > 0;
    bool const has_neg = max_neg > 0;

    CriticalForm f;
    f.p = p;
    f.n = n;
    f.x = w.front().name;
    f.y = pair.other(f.x);

    if (L == M && pos_run[0] >= M) {
      f.kind = CriticalKind::all_pos_full;
      f.z = f.x;
      f.t = f.y;
      return f;
    }
    if (L == M && neg_run[0] >= M) {
      f.kind = CriticalKind::all_neg_full;
      f.z = f.x;
      f.t = f.y;
      return f;
    }

    if (has_pos && has_neg && p + n >= M) {
      bool const over = p + n > M;
      f.t = w.back().name;
      f.z = pair.other(f.t);
      if (w.front().positive() && pos_run[0] >= p
          && run_to_end(w, false) >= n) {
        f.kind = over ? CriticalKind::over_critical_pos_neg
                      : CriticalKind::unsigned_pos_neg;
        f.core.assign(w.begin() + p, w.end() - n);
        return f;
      }
      if (!w.front().positive() && neg_run[0] >= n
          && run_to_end(w, true) >= p) {
        f.kind = over ? CriticalKind::over_critical_neg_pos
                      : CriticalKind::unsigned_neg_pos;
        f.core.assign(w.begin() + n, w.end() - p);
        return f;
      }
      return std::nullopt;
    }

    if (L <= M || (has_pos && has_neg)) {
      return std::nullopt;
    }
    // Signed words of length > m with exactly one alternating subword of
    // length m, at one end.
    bool const               positive = has_pos;
    auto const&              run = positive ? pos_run : neg_run;
    std::size_t const        full
        = static_cast<std::size_t>(std::count_if(
            run.begin(), run.end(), [M](std::size_t r) { return r >= M; }));
    if (full != 1) {
      return std::nullopt;
    }
    if (run[0] >= M) {
      f.kind = positive ? CriticalKind::pos_left : CriticalKind::neg_left;
      f.core.assign(w.begin() + M, w.end());
      f.z = f.core.back().name;
      f.t = pair.other(f.z);
      return f;
    }
    if (run_to_end(w, positive) >= M) {
      f.kind = positive ? CriticalKind::pos_right : CriticalKind::neg_right;
      f.y = w.back().name;
      f.x = pair.other(f.y);
      f.core.assign(w.begin(), w.end() - M);
      f.z = f.core.front().name;
      f.t = pair.other(f.z);
      return f;
    }
    return std::nullopt;
  }

  Word tau(CriticalForm const& f, EdgeLabel m) {
    std::size_t const M = m.value();
    GeneratorPair const pair = f.pair();
    Word const d = delta(f.core, pair, m);
    auto P = [](GeneratorId g) { return letter(g, false); };
    auto N = [](GeneratorId g) { return letter(g, true); };
    switch (f.kind) {
      case CriticalKind::unsigned_pos_neg:
        return cat({alt_left(N(f.y), N(f.x), f.n), d, alt_right(P(f.t), P(f.z), f.p)});
      case CriticalKind::unsigned_neg_pos:
        return cat({alt_left(P(f.y), P(f.x), f.p), d, alt_right(N(f.t), N(f.z), f.n)});
      case CriticalKind::all_pos_full:
        return alt_left(P(f.y), P(f.x), M);
      case CriticalKind::all_neg_full:
        return alt_left(N(f.y), N(f.x), M);
      case CriticalKind::pos_left:
        return cat({d, alt_right(P(f.z), P(f.t), M)});
      case CriticalKind::pos_right:
        return cat({alt_left(P(f.t), P(f.z), M), d});
      case CriticalKind::neg_left:
        return cat({d, alt_right(N(f.z), N(f.t), M)});
      case CriticalKind::neg_right:
        return cat({alt_left(N(f.t), N(f.z), M), d});
      case CriticalKind::over_critical_pos_neg:
        return cat({alt_left(N(f.y), N(f.x), M - f.p),
                    d,
                    alt_right(P(f.t), P(f.z), M - f.n)});
      case CriticalKind::over_critical_neg_pos:
        return cat({alt_left(P(f.y), P(f.x), M - f.n),
                    d,
                    alt_right(N(f.t), N(f.z), M - f.p)});
    }
    throw Error("unknown critical kind");
  }

  std::optional<Word> tau(std::span<Letter const> w, EdgeLabel m) {
    auto f = classify_critical(w, m);
    if (!f) {
      return std::nullopt;
    }
    return tau(*f, m);
  }

  Word delta(std::span<Letter const> w, GeneratorPair pair, EdgeLabel m) {
    if (m.is_infinite()) {
      throw Error("delta is undefined when m is infinite");
    }
    Word out;
    out.reserve(w.size());
    for (Letter a : w) {
      if (!pair.contains(a.name)) {
        throw Error("delta: letter outside the generator pair in "
                    + to_string(w));
      }
      out.push_back(m.is_odd() ? Letter{pair.other(a.name), a.inverse} : a);
    }
    return out;
  }

  Word delta(std::span<Letter const> w, EdgeLabel m) {
    return delta(w, GeneratorPair{0, 1}, m);
  }

  Word delta_word(GeneratorPair pair, EdgeLabel m) {
    return alt_left(Letter::pos(pair.first), Letter::pos(pair.second), m.value());
  }

}  // namespace xlart
