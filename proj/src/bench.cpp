#include "xlart/bench.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "xlart/conjugacy.hpp"
#include "xlart/dihedral_conjugacy.hpp"
#include "xlart/rewriting.hpp"

namespace xlart {

  namespace {

    using Clock = std::chrono::steady_clock;

    std::uint64_t mix(std::uint64_t seed, std::string const& op, std::size_t length) {
      std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ULL;
      for (char c : op) {
        h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
      }
      return h ^ (length * 0xbf58476d1ce4e5b9ULL);
    }

    // A specially cyclically reduced word of the given length on all
    // generators, together with one of the same length and support that is
    // not conjugate to it (the abelianisations differ).
    std::pair<Word, Word> negative_pair(std::mt19937_64& rng,
                                        GroupContext const& ctx,
                                        std::size_t         length) {
      while (true) {
        Word w = specially_cyclically_reduce(random_word(rng, ctx, length), ctx).word;
        if (w.size() != length || generators_of(w).size() != ctx.rank()) {
          continue;
        }
        for (std::size_t k = w.size(); k-- > 0;) {
          Word v = w;
          v[k] = v[k].inv();
          v = specially_cyclically_reduce(v, ctx).word;
          if (v.size() == w.size() && generators_of(v) == generators_of(w)) {
            return {w, v};
          }
        }
      }
    }

  }  // namespace

  Word random_word(std::mt19937_64& rng, GroupContext const& ctx, std::size_t length) {
    std::uniform_int_distribution<std::size_t> pick(0, ctx.letter_count() - 1);
    Word                                       w;
    while (w.size() < length) {
      Letter a = Letter::from_index(pick(rng));
      if (!w.empty() && w.back() == a.inv()) {
        continue;
      }
      w.push_back(a);
    }
    return w;
  }

  std::vector<std::string> bench_operations(GroupContext const& ctx) {
    std::vector<std::string> ops{"reduce", "normal-form", "conjugate"};
    ops.push_back(ctx.rank() == 2 ? "dihedral-conjugate" : "conjugate-negative");
    return ops;
  }

  std::vector<BenchRow> run_bench(GroupContext const& ctx, BenchOptions const& options) {
    auto const ops = options.operations.empty() ? bench_operations(ctx) : options.operations;
    std::vector<BenchRow> rows;
    for (auto const& op : ops) {
      for (std::size_t len : options.lengths) {
        std::mt19937_64 rng(mix(options.seed, op, len));
        double          total = 0;
        for (std::size_t s = 0; s < options.samples; ++s) {
          Clock::time_point start;
          if (op == "reduce" || op == "normal-form") {
            Word w = random_word(rng, ctx, len);
            start = Clock::now();
            Word r = op == "reduce" ? geodesic(w, ctx) : normal_form(w, ctx);
            (void) r;
          } else if (op == "conjugate" || op == "dihedral-conjugate") {
            Word u = random_word(rng, ctx, len);
            Word f = random_word(rng, ctx, len / 2);
            Word v = free_reduce(concat(concat(invert(f), u), f));
            start = Clock::now();
            bool yes = op == "conjugate"
                           ? conjugacy(u, v, ctx).conjugate
                           : conjugacy_dihedral(u, v, ctx.m(0, 1)).conjugate;
            if (!yes) {
              throw std::logic_error("bench: constructed pair reported not conjugate");
            }
          } else if (op == "conjugate-negative") {
            auto [u, v] = negative_pair(rng, ctx, len);
            start = Clock::now();
            if (conjugacy(u, v, ctx).conjugate) {
              throw std::logic_error("bench: negative pair reported conjugate");
            }
          } else {
            throw Error("unknown bench operation '" + op + "'");
          }
          total += std::chrono::duration<double>(Clock::now() - start).count();
        }
        rows.push_back({op, len, options.samples,
                        options.samples ? total / static_cast<double>(options.samples) : 0.0});
      }
    }
    return rows;
  }

  double fit_exponent(std::vector<std::pair<double, double>> const& length_time) {
    std::size_t const n = length_time.size();
    if (n < 2) {
      throw Error("fit_exponent needs at least two points");
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto const& [l, t] : length_time) {
      double const x = std::log(l);
      double const y = std::log(t);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    double const d = static_cast<double>(n);
    return (d * sxy - sx * sy) / (d * sxx - sx * sx);
  }

}  // namespace xlart
