// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "xlart/bench.hpp"
#include "xlart/conjugacy.hpp"
#include "xlart/dihedral.hpp"
#include "xlart/oracle.hpp"
#include "xlart/rewriting.hpp"

using namespace xlart;

namespace {

  struct Tally {
    std::size_t        checked = 0;
    std::size_t        failed = 0;
    std::ostringstream notes;

    void check(bool ok, std::string const& what) {
      ++checked;
      if (!ok) {
        if (failed < 5) {
          notes << "\n    " << what;
        }
        ++failed;
      }
    }
  };

  Word conjugated(Word const& w, Word const& f, GroupContext const& ctx) {
    return geodesic(concat(concat(invert(f), w), f), ctx);
  }

  // m12 = 5, m23 = 4, m13 = inf
  GroupContext path_context() {
    return test::three_generator(5, 0, 4);
  }

  std::string geodesic_criterion(Tally& t) {
    for (unsigned m : {4u, 5u}) {
      auto   ctx = GroupContext::dihedral(EdgeLabel(m));
      Oracle oracle(ctx);
      test::for_each_word(2, 7, [&](Word const& w) {
        bool const claim = is_geodesic_dihedral(w, EdgeLabel(m)) != DihedralGeodesy::non_geodesic;
        bool const truth = oracle.geodesic_length(w) == w.size();
        t.check(claim == truth, "m=" + std::to_string(m) + " " + to_string(w));
      });
    }
    return "two-generator words of length <= 7, m in {4,5}";
  }

  std::string tau_correctness(Tally& t) {
    std::size_t critical = 0;
    std::size_t over = 0;
    for (unsigned m : {4u, 5u}) {
      EdgeLabel const label(m);
      auto            ctx = GroupContext::dihedral(label);
      Oracle          oracle(ctx);
      test::for_each_word(2, 8, [&](Word const& w) {
        auto f = classify_critical(w, label);
        if (!f) {
          return;
        }
        Word const  img = tau(*f, label);
        std::string tag = "m=" + std::to_string(m) + " " + to_string(w);
        t.check(oracle.equal(w, img), tag + " not equal to its image");
        if (is_over_critical(f->kind)) {
          ++over;
          t.check(img.size() < w.size(), tag + " over-critical image not shorter");
        } else {
          ++critical;
          auto g = classify_critical(img, label);
          t.check(g && !is_over_critical(g->kind) && tau(*g, label) == w,
                  tag + " tau is not an involution here");
        }
      });
    }
    return std::to_string(critical) + " critical and " + std::to_string(over)
           + " over-critical words of length <= 8";
  }

  std::string multi_generator_reduction(Tally& t) {
    std::mt19937_64                            rng(3);
    std::uniform_int_distribution<std::size_t> len(0, 8);
    for (auto const& ctx : {GroupContext::uniform(3, EdgeLabel(4)), test::three_generator(4, 5, 0)}) {
      Oracle oracle(ctx);
      for (int i = 0; i < 10000; ++i) {
        Word w = random_word(rng, ctx, len(rng));
        Word g = geodesic(w, ctx);
        t.check(g.size() == oracle.geodesic_length(w) && oracle.equal(w, g), to_string(w));
      }
    }
    return "10000 random words of length <= 8 each for all m = 4 and m = (4, 5, inf)";
  }

  std::string dihedral_conjugacy(Tally& t) {
    std::ostringstream out;
    for (unsigned m : {4u, 5u}) {
      EdgeLabel const label(m);
      auto            ctx = GroupContext::dihedral(label);
      Oracle          oracle(ctx);
      auto const      words = test::all_words(2, 4);
      std::size_t     oracle_yes = 0;
      std::size_t     solver_yes = 0;
      for (Word const& u : words) {
        ConjugacyBall ball(oracle, u, 4);
        for (Word const& v : words) {
          auto       r = conjugacy_dihedral(u, v, label);
          bool const bounded = ball.witness(v).has_value();
          oracle_yes += bounded;
          solver_yes += r.conjugate;
          std::string tag = "m=" + std::to_string(m) + " " + to_string(u) + " ~ " + to_string(v);
          if (bounded) {
            t.check(r.conjugate, tag + ": oracle finds a witness, solver says no");
          }
          if (r.conjugate) {
            t.check(r.witness && equal_elements(concat(concat(invert(*r.witness), u), *r.witness), v, ctx),
                    tag + ": witness fails");
          }
        }
      }
      Word x1{Letter::pos(0)};
      Word x2{Letter::pos(1)};
      bool const gen = conjugacy_dihedral(x1, x2, label).conjugate;
      t.check(gen == (m % 2 == 1), "x1 ~ x2 verdict for m=" + std::to_string(m));
      out << "m=" << m << ": oracle yes " << oracle_yes << ", solver yes " << solver_yes << "; ";
    }
    return out.str() + "pairs of length <= 4, oracle bound 4";
  }

  std::string solver_recall(Tally& t) {
    auto                                       ctx = test::three_generator(4, 5, 4);
    Oracle                                     oracle(ctx);
    std::mt19937_64                            rng(5);
    std::uniform_int_distribution<std::size_t> wl(1, 8);
    std::uniform_int_distribution<std::size_t> fl(0, 4);
    for (int i = 0; i < 500; ++i) {
      Word w = random_word(rng, ctx, wl(rng));
      Word v = conjugated(w, random_word(rng, ctx, fl(rng)), ctx);
      auto r = conjugacy(w, v, ctx);
      t.check(r.conjugate && verify_witness(w, v, *r.witness, ctx),
              "constructed " + to_string(w) + " ~ " + to_string(v));
    }
    std::uniform_int_distribution<std::size_t> rl(1, 5);
    std::size_t                                yes = 0;
    std::size_t                                searched = 0;
    for (int i = 0; i < 500; ++i) {
      Word u = random_word(rng, ctx, rl(rng));
      // draw v with the same abelianisation half of the time
      Word v = random_word(rng, ctx, rl(rng));
      if (i % 2 == 0) {
        v = conjugated(u, random_word(rng, ctx, 2), ctx);
        std::shuffle(v.begin(), v.end(), rng);
        v = free_reduce(v);
      }
      auto r = conjugacy(u, v, ctx);
      if (r.conjugate) {
        ++yes;
        t.check(verify_witness(u, v, *r.witness, ctx), "random pair witness " + to_string(u));
      } else if (abelian_lower_bound(concat(u, invert(v)), ctx) == 0) {
        ++searched;
        t.check(!oracle_conjugate_meet(oracle, u, v, 5),
                "oracle finds a witness for " + to_string(u) + " ~ " + to_string(v));
      }
    }
    return "500 constructed pairs; 500 random pairs (" + std::to_string(yes) + " conjugate, "
           + std::to_string(searched) + " negatives searched to bound 5)";
  }

  std::string generator_powers(Tally& t) {
    auto ctx = path_context();
    Word d = alt_left(Letter::pos(0), Letter::pos(1), 5);
    for (int k = -3; k <= 3; ++k) {
      if (k == 0) {
        continue;
      }
      std::size_t const a = static_cast<std::size_t>(k < 0 ? -k : k);
      Word u = power(k > 0 ? Letter::pos(0) : Letter::neg(0), a);
      Word v = power(k > 0 ? Letter::pos(1) : Letter::neg(1), a);
      auto r = conjugacy(u, v, ctx);
      t.check(r.conjugate && r.tag == CaseTag::power && r.witness == d
                  && verify_witness(u, v, *r.witness, ctx),
              "x1^" + std::to_string(k) + " ~ x2^" + std::to_string(k));
    }
    t.check(!conjugacy(Word{Letter::pos(0)}, Word{Letter::pos(2)}, ctx).conjugate, "x1 ~ x3");
    t.check(!conjugacy(Word{Letter::pos(0)}, power(Letter::pos(0), 2), ctx).conjugate, "x1 ~ x1^2");
    return "m12=5, m23=4, m13=inf";
  }

  std::string search_bound(Tally& t) {
    std::mt19937_64 rng(7);
    std::size_t     hits = 0;
    std::size_t     beyond = 0;
    std::size_t     mismatched = 0;
    for (auto const& ctx : {GroupContext::uniform(3, EdgeLabel(4)), test::three_generator(4, 5, 4),
                            test::three_generator(5, 5, 7)}) {
      Oracle oracle(ctx);
      for (int i = 0; i < 200; ++i) {
        Word u0 = random_word(rng, ctx, 3 + i % 8);
        Word v0 = i % 2 == 0 ? conjugated(u0, random_word(rng, ctx, 1 + i % 4), ctx)
                             : random_word(rng, ctx, 3 + i % 8);
        Conjugated cu = specially_cyclically_reduce(u0, ctx);
        Conjugated cv = specially_cyclically_reduce(v0, ctx);
        Word const& u = cu.word;
        Word const& v = cv.word;

        ConjugacyOptions plain;
        plain.all_hits = true;
        plain.on_hit = [&](SearchHit const& h) {
          ++hits;
          t.check(h.exponent <= h.length, "hit past |u| for " + to_string(u));
        };
        auto r = conjugacy(u0, v0, ctx, plain);
        if (r.conjugate && r.tag == CaseTag::general) {
          t.check(u.size() == v.size(), "conjugate verdict with different lengths " + to_string(u));
        }
        bool const general = generators_of(u).size() >= 3 && generators_of(u) == generators_of(v);
        if (general && u.size() != v.size() && mismatched < 60) {
          ++mismatched;
          t.check(!r.conjugate && !oracle_conjugate_meet(oracle, u0, v0, 4),
                  "different reduced lengths yet conjugate: " + to_string(u0));
        }
        if (general && u.size() == v.size()) {
          auto const       ur = cyclic_conjugates(u);
          auto const       vr = cyclic_conjugates(v);
          ConjugacyOptions wide;
          wide.exponent_limit = 3 * u.size();
          wide.all_hits = true;
          wide.on_hit = [&](SearchHit const& h) {
            if (h.exponent > h.length) {
              ++beyond;
              t.check(equal_elements(ur[h.u_rotation].word, vr[h.v_rotation].word, ctx),
                      "hit past |u| without plain cyclic conjugacy for " + to_string(u));
            }
          };
          conjugacy_general_case(u, v, ctx, wide);
        }
      }
    }
    return std::to_string(hits) + " hits within the bound, " + std::to_string(beyond)
           + " hits past it in widened runs, " + std::to_string(mismatched)
           + " length-mismatched pairs checked by the oracle";
  }

  std::string scaling(Tally& t) {
    std::ostringstream out;
    auto fit = [&](GroupContext const& ctx, std::string const& op,
                   std::vector<std::size_t> lengths, std::size_t samples, double limit) {
      BenchOptions opts;
      opts.lengths = std::move(lengths);
      opts.samples = samples;
      opts.seed = 8;
      opts.operations = {op};
      std::vector<std::pair<double, double>> pts;
      for (auto const& row : run_bench(ctx, opts)) {
        pts.emplace_back(static_cast<double>(row.length), row.mean_seconds);
      }
      double const e = fit_exponent(pts);
      t.check(e <= limit, op + " exponent " + std::to_string(e));
      char buf[64];
      std::snprintf(buf, sizeof buf, "%s %.2f", op.c_str(), e);
      out << buf << "; ";
    };
    fit(GroupContext::dihedral(EdgeLabel(5)), "dihedral-conjugate", {64, 128, 256, 512}, 200, 1.5);
    fit(GroupContext::dihedral(EdgeLabel(4)), "dihedral-conjugate", {64, 128, 256, 512}, 200, 1.5);
    auto ctx = GroupContext::uniform(3, EdgeLabel(4));
    fit(ctx, "conjugate", {16, 32, 64}, 10, 4.0);
    fit(ctx, "conjugate-negative", {16, 32, 64}, 10, 4.0);
    return out.str() + "fit exponents, limits 1.5 and 4.0";
  }

}  // namespace

int main() {
  struct Criterion {
    char const*                         name;
    std::function<std::string(Tally&)> run;
  };
  std::vector<Criterion> const criteria{
      {"dihedral geodesic criterion", geodesic_criterion},
      {"tau correctness", tau_correctness},
      {"multi-generator reduction", multi_generator_reduction},
      {"dihedral conjugacy", dihedral_conjugacy},
      {"full solver recall", solver_recall},
      {"generator-power case", generator_powers},
      {"search-bound property", search_bound},
      {"scaling trend", scaling},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Tally       t;
    auto const  start = std::chrono::steady_clock::now();
    std::string summary;
    try {
      summary = criteria[i].run(t);
    } catch (std::exception const& e) {
      t.check(false, std::string("exception: ") + e.what());
    }
    double const secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool const ok = t.failed == 0;
    failures += !ok;
    std::printf("%s %zu %s: %zu checks, %zu failed (%.1fs) %s%s\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].name, t.checked, t.failed, secs, summary.c_str(), t.notes.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
