#include "xlart/dihedral_conjugacy.hpp"

#include <deque>

namespace xlart {

  namespace {

    constexpr GeneratorId x1 = 0;
    constexpr GeneratorId x2 = 1;

    // Order of the factor modulo z; 0 when infinite.
    long period(Factor f, EdgeLabel m) {
      if (m.is_infinite()) {
        return 0;
      }
      long const M = m.value();
      if (f == Factor::y1) {
        return M % 2 == 1 ? 2 : 0;
      }
      return M % 2 == 0 ? M / 2 : M;
    }

    // Reduces e into [0, P) and returns the number of wraps.
    long wrap(long& e, long P) {
      if (P == 0) {
        return 0;
      }
      long r = e % P;
      if (r < 0) {
        r += P;
      }
      long const q = (e - r) / P;
      e = r;
      return q;
    }

    void require_dihedral_word(std::span<Letter const> w) {
      for (Letter a : w) {
        if (a.name != x1 && a.name != x2) {
          throw Error("expected a word over x1, x2, found " + to_string(w));
        }
      }
    }

    void append(YWord& w, Factor f, long e) {
      if (e != 0) {
        w.push_back({f, e});
      }
    }

    // Cyclically reduces g in the free product; c collects the conjugator,
    // so that c^-1 g c is the result.
    FPNormalForm cyclic_reduce_fp(FPNormalForm const& g, EdgeLabel m, YWord& c) {
      std::deque<YSyllable> s(g.syllables.begin(), g.syllables.end());
      long                  z = g.z_exp;
      while (s.size() >= 2 && s.front().factor == s.back().factor) {
        YSyllable const a = s.front();
        s.pop_front();
        c.push_back(a);
        long e = s.back().exponent + a.exponent;
        z += wrap(e, period(a.factor, m));
        if (e == 0) {
          s.pop_back();
        } else {
          s.back().exponent = e;
        }
      }
      return FPNormalForm{{s.begin(), s.end()}, z};
    }

    // Least j with rotate(g, j) == h, by a KMP scan of g g.
    std::optional<std::size_t> rotation_of(std::vector<YSyllable> const& g,
                                           std::vector<YSyllable> const& h) {
      std::size_t const n = g.size();
      if (h.size() != n) {
        return std::nullopt;
      }
      if (n == 0) {
        return 0;
      }
      std::vector<std::size_t> fail(n, 0);
      for (std::size_t i = 1, k = 0; i < n; ++i) {
        while (k > 0 && h[i] != h[k]) {
          k = fail[k - 1];
        }
        if (h[i] == h[k]) {
          ++k;
        }
        fail[i] = k;
      }
      for (std::size_t i = 0, k = 0; i + 1 < 2 * n; ++i) {
        YSyllable const& x = g[i % n];
        while (k > 0 && x != h[k]) {
          k = fail[k - 1];
        }
        if (x == h[k]) {
          ++k;
        }
        if (k == n) {
          return i + 1 - n;
        }
      }
      return std::nullopt;
    }

  }  // namespace

  YWord x_to_y(std::span<Letter const> w, EdgeLabel m) {
    require_dihedral_word(w);
    YWord out;
    for (Letter a : w) {
      long const s = a.sign();
      if (m.is_infinite()) {
        append(out, a.name == x1 ? Factor::y1 : Factor::y2, s);
        continue;
      }
      long const M = m.value();
      YWord      image;
      if (M % 2 == 0) {
        if (a.name == x1) {
          image = {{Factor::y1, 1}};
        } else {
          image = {{Factor::y1, -1}, {Factor::y2, 1}};
        }
      } else if (a.name == x1) {
        image = {{Factor::y2, -(M - 1) / 2}, {Factor::y1, 1}};
      } else {
        image = {{Factor::y1, -1}, {Factor::y2, (M + 1) / 2}};
      }
      if (s < 0) {
        image = invert(image);
      }
      out.insert(out.end(), image.begin(), image.end());
    }
    return out;
  }

  Word y_to_x(YWord const& w, EdgeLabel m) {
    Word y1;
    Word y2;
    if (m.is_infinite()) {
      y1 = {Letter::pos(x1)};
      y2 = {Letter::pos(x2)};
    } else {
      y1 = m.is_even() ? Word{Letter::pos(x1)}
                       : alt_left(Letter::pos(x1), Letter::pos(x2), m.value());
      y2 = {Letter::pos(x1), Letter::pos(x2)};
    }
    Word const y1i = xlart::invert(y1);
    Word const y2i = xlart::invert(y2);
    Word       out;
    for (YSyllable const& s : w) {
      Word const& piece = s.factor == Factor::y1 ? (s.exponent > 0 ? y1 : y1i)
                                                 : (s.exponent > 0 ? y2 : y2i);
      long const k = s.exponent > 0 ? s.exponent : -s.exponent;
      for (long i = 0; i < k; ++i) {
        out.insert(out.end(), piece.begin(), piece.end());
      }
    }
    return free_reduce(out);
  }

  YWord invert(YWord const& w) {
    YWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      out.push_back({it->factor, -it->exponent});
    }
    return out;
  }

  FPNormalForm collect(YWord const& w, EdgeLabel m) {
    FPNormalForm out;
    auto&        s = out.syllables;
    for (YSyllable const& y : w) {
      if (y.exponent == 0) {
        continue;
      }
      if (!s.empty() && s.back().factor == y.factor) {
        s.back().exponent += y.exponent;
      } else {
        s.push_back(y);
      }
      long e = s.back().exponent;
      out.z_exp += wrap(e, period(y.factor, m));
      if (e == 0) {
        s.pop_back();
      } else {
        s.back().exponent = e;
      }
    }
    return out;
  }

  YWord to_yword(FPNormalForm const& g, EdgeLabel m) {
    YWord out = g.syllables;
    if (g.z_exp != 0) {
      append(out, Factor::y2, g.z_exp * period(Factor::y2, m));
    }
    return out;
  }

  std::optional<YWord> fp_conjugacy(FPNormalForm const& g,
                                    FPNormalForm const& h,
                                    EdgeLabel           m) {
    YWord        cg;
    YWord        ch;
    FPNormalForm gr = cyclic_reduce_fp(g, m, cg);
    FPNormalForm hr = cyclic_reduce_fp(h, m, ch);
    auto         j = rotation_of(gr.syllables, hr.syllables);
    if (!j) {
      return std::nullopt;
    }
    YWord out = cg;
    out.insert(out.end(), gr.syllables.begin(), gr.syllables.begin() + *j);
    YWord chi = invert(ch);
    out.insert(out.end(), chi.begin(), chi.end());
    return out;
  }

  std::string_view to_string(CaseTag t) {
    switch (t) {
      case CaseTag::equal:
        return "equal";
      case CaseTag::power:
        return "power";
      case CaseTag::two_generator:
        return "two-generator";
      case CaseTag::general:
        return "general";
      case CaseTag::support_mismatch:
        return "support-mismatch";
      case CaseTag::length_mismatch:
        return "length-mismatch";
    }
    return "?";
  }

  bool equal_dihedral(std::span<Letter const> u,
                      std::span<Letter const> v,
                      EdgeLabel               m) {
    return collect(x_to_y(u, m), m) == collect(x_to_y(v, m), m);
  }

  ConjugacyOutcome conjugacy_dihedral(std::span<Letter const> u,
                                      std::span<Letter const> v,
                                      EdgeLabel               m) {
    ConjugacyOutcome   out;
    out.tag = CaseTag::two_generator;
    FPNormalForm const g = collect(x_to_y(u, m), m);
    FPNormalForm const h = collect(x_to_y(v, m), m);
    if (g.syllables.empty() || h.syllables.empty()) {
      // central elements are conjugate only to themselves
      if (g == h) {
        out.conjugate = true;
        out.witness = Word{};
      }
      return out;
    }
    auto c = fp_conjugacy(g, h, m);
    if (!c) {
      return out;
    }
    YWord conj = invert(*c);
    YWord gy = to_yword(g, m);
    conj.insert(conj.end(), gy.begin(), gy.end());
    conj.insert(conj.end(), c->begin(), c->end());
    if (collect(conj, m) != h) {
      return out;
    }
    Word f = y_to_x(*c, m);
    if (!equal_dihedral(concat(concat(xlart::invert(f), u), f), v, m)) {
      throw std::logic_error("dihedral witness failed verification");
    }
    out.conjugate = true;
    out.witness = std::move(f);
    return out;
  }

}  // namespace xlart
