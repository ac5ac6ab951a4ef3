// Timing harness behind `xlart bench` and the scaling checks.

#ifndef XLART_BENCH_HPP_
#define XLART_BENCH_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "group_context.hpp"

namespace xlart {

  //! A freely reduced word of exactly \p length letters, uniform at each step.
  Word random_word(std::mt19937_64& rng, GroupContext const& ctx, std::size_t length);

  struct BenchOptions {
    std::vector<std::size_t> lengths;
    std::size_t              samples = 10;
    std::uint64_t            seed = 1;
    //! Empty means bench_operations(ctx).
    std::vector<std::string> operations;
  };

  struct BenchRow {
    std::string operation;
    std::size_t length;
    std::size_t samples;
    double      mean_seconds;
  };

  //! reduce, normal-form and conjugate; dihedral-conjugate on two
  //! generators; conjugate-negative (a general-case search that finds
  //! nothing) on three or more.
  std::vector<std::string> bench_operations(GroupContext const& ctx);

  //! Inputs depend only on the seed, the operation and the length.
  std::vector<BenchRow> run_bench(GroupContext const& ctx, BenchOptions const& options);

  //! Least-squares slope of log(time) against log(length).
  double fit_exponent(std::vector<std::pair<double, double>> const& length_time);

}  // namespace xlart

#endif  // XLART_BENCH_HPP_
