#include "xlart/conjugacy.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>

#include "xlart/rewriting.hpp"

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

    // The letter and exponent when w is a nonzero power of one generator.
    std::optional<std::pair<Letter, std::size_t>>
    generator_power(std::span<Letter const> w) {
      if (w.empty()) {
        return std::nullopt;
      }
      for (Letter a : w) {
        if (a != w.front()) {
          return std::nullopt;
        }
      }
      return std::pair{w.front(), w.size()};
    }

    Word compose(std::span<Letter const> a,
                 std::span<Letter const> b,
                 std::span<Letter const> c) {
      return free_reduce(concat(concat(a, b), c));
    }

    ConjugacyOutcome no(CaseTag tag) {
      return ConjugacyOutcome{false, std::nullopt, tag};
    }

    ConjugacyOutcome yes(Word witness, CaseTag tag) {
      return ConjugacyOutcome{true, std::move(witness), tag};
    }

  }  // namespace

  bool verify_witness(std::span<Letter const> u,
                      std::span<Letter const> v,
                      std::span<Letter const> witness,
                      GroupContext const&     ctx) {
    return equal_elements(concat(concat(invert(witness), u), witness), v, ctx);
  }

  ConjugacyOutcome conjugacy_power_case(std::span<Letter const> u,
                                        std::span<Letter const> v,
                                        GroupContext const&     ctx) {
    auto pu = generator_power(u);
    if (!pu) {
      throw Error("power case: " + to_string(u) + " is not a generator power");
    }
    auto pv = generator_power(v);
    if (!pv || pv->second != pu->second || pv->first.inverse != pu->first.inverse) {
      return no(CaseTag::power);
    }
    GeneratorId const i = pu->first.name;
    GeneratorId const j = pv->first.name;
    auto const        path = ctx.odd_path(i, j);
    if (path.empty()) {
      return no(CaseTag::power);
    }
    Word f;
    for (std::size_t s = 0; s + 1 < path.size(); ++s) {
      Word d = alt_left(Letter::pos(path[s]), Letter::pos(path[s + 1]),
                        ctx.m(path[s], path[s + 1]).value());
      f.insert(f.end(), d.begin(), d.end());
    }
    return yes(std::move(f), CaseTag::power);
  }

  ConjugacyOutcome conjugacy_two_generator_case(std::span<Letter const> u,
                                                std::span<Letter const> v,
                                                GroupContext const&     ctx) {
    auto const su = generators_of(u);
    if (su.size() != 2) {
      throw Error("two-generator case: " + to_string(u)
                  + " does not involve exactly two generators");
    }
    if (generators_of(v) != su) {
      return no(CaseTag::two_generator);
    }
    GeneratorId const gi = *su.begin();
    GeneratorId const gj = *su.rbegin();
    auto to_dihedral = [&](std::span<Letter const> w) {
      Word out;
      out.reserve(w.size());
      for (Letter a : w) {
        out.push_back(Letter{a.name == gi ? 0u : 1u, a.inverse});
      }
      return out;
    };
    ConjugacyOutcome r = conjugacy_dihedral(to_dihedral(u), to_dihedral(v), ctx.m(gi, gj));
    if (r.witness) {
      for (Letter& a : *r.witness) {
        a.name = a.name == 0 ? gi : gj;
      }
    }
    r.tag = CaseTag::two_generator;
    return r;
  }

  ConjugacyOutcome conjugacy_general_case(std::span<Letter const> u,
                                          std::span<Letter const> v,
                                          GroupContext const&     ctx,
                                          ConjugacyOptions const& options) {
    std::size_t const len = u.size();
    if (v.size() != len) {
      throw Error("general case: words of different lengths");
    }
    auto const support = generators_of(u);
    if (generators_of(v) != support) {
      throw Error("general case: words with different supports");
    }
    auto const u_rot = cyclic_conjugates(u);
    auto const v_rot = cyclic_conjugates(v);

    std::unordered_map<std::string, std::size_t> lookup;
    for (std::size_t j = 0; j < v_rot.size(); ++j) {
      lookup.emplace(key_of(normal_form(v_rot[j].word, ctx)), j);
    }

    std::size_t const limit = options.exponent_limit == 0 ? len : options.exponent_limit;
    std::optional<Word> found;

    auto hit = [&](Letter a, std::size_t n, std::size_t i, std::size_t j) {
      if (options.exponent_limit == 0 && n > len) {
        throw std::logic_error("general case searched past the exponent bound");
      }
      if (options.on_hit) {
        options.on_hit(SearchHit{a, n, len, i, j});
      }
      if (!found) {
        // f = p a^-n q^-1
        Word f = u_rot[i].prefix;
        for (std::size_t k = 0; k < n; ++k) {
          f.push_back(a.inv());
        }
        Word qi = invert(v_rot[j].prefix);
        found = compose(f, qi, {});
      }
      return !options.all_hits;
    };

    // n = 0: plain cyclic conjugacy
    for (std::size_t i = 0; i < u_rot.size(); ++i) {
      auto it = lookup.find(key_of(normal_form(u_rot[i].word, ctx)));
      if (it != lookup.end() && hit(Letter{}, 0, i, it->second)) {
        return yes(std::move(*found), CaseTag::general);
      }
    }
    for (GeneratorId g : support) {
      for (Letter a : {Letter::pos(g), Letter::neg(g)}) {
        for (std::size_t i = 0; i < u_rot.size(); ++i) {
          Word w = u_rot[i].word;
          for (std::size_t n = 1; n <= limit; ++n) {
            w = append_reduce(prepend_reduce(a, w, ctx), a.inv(), ctx);
            if (w.size() != len) {
              continue;
            }
            auto it = lookup.find(key_of(normal_form(w, ctx)));
            if (it != lookup.end() && hit(a, n, i, it->second)) {
              return yes(std::move(*found), CaseTag::general);
            }
          }
        }
      }
    }
    if (found) {
      return yes(std::move(*found), CaseTag::general);
    }
    return no(CaseTag::general);
  }

  ConjugacyOutcome conjugacy(std::span<Letter const> u,
                             std::span<Letter const> v,
                             GroupContext const&     ctx,
                             ConjugacyOptions const& options) {
    Conjugated const ru = specially_cyclically_reduce(u, ctx);
    Conjugated const rv = specially_cyclically_reduce(v, ctx);
    Word const&      a = ru.word;
    Word const&      b = rv.word;

    ConjugacyOutcome r;
    auto const       sa = generators_of(a);
    auto const       sb = generators_of(b);
    if (a.empty() && b.empty()) {
      r = yes(Word{}, CaseTag::equal);
    } else if (a.empty() || b.empty()) {
      r = no(CaseTag::length_mismatch);
    } else if (generator_power(a)) {
      r = conjugacy_power_case(a, b, ctx);
    } else if (generator_power(b)) {
      r = no(CaseTag::power);
    } else if (sa.size() == 2) {
      r = conjugacy_two_generator_case(a, b, ctx);
    } else if (sa != sb) {
      r = no(CaseTag::support_mismatch);
    } else if (a.size() != b.size()) {
      r = no(CaseTag::length_mismatch);
    } else {
      r = conjugacy_general_case(a, b, ctx, options);
    }
    if (r.conjugate) {
      Word f = compose(ru.conjugator, *r.witness, invert(rv.conjugator));
      if (!verify_witness(u, v, f, ctx)) {
        throw std::logic_error("conjugacy witness failed verification for "
                               + to_string(u) + " and " + to_string(v));
      }
      r.witness = std::move(f);
    }
    return r;
  }

}  // namespace xlart
