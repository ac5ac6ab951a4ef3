// Command-line front end: reductions, normal forms and conjugacy queries on
// a group file, plus the brute-force oracle and a timing bench.

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

#include "xlart/bench.hpp"
#include "xlart/conjugacy.hpp"
#include "xlart/io.hpp"
#include "xlart/oracle.hpp"
#include "xlart/rewriting.hpp"

namespace {

  constexpr int exit_yes = 0;
  constexpr int exit_no = 1;
  constexpr int exit_error = 2;

  std::vector<std::size_t> parse_lengths(std::string const& text) {
    std::vector<std::size_t> out;
    std::stringstream        in(text);
    std::string              item;
    while (std::getline(in, item, ',')) {
      std::size_t pos = 0;
      long        v = -1;
      try {
        v = std::stol(item, &pos);
      } catch (std::exception const&) {
        pos = 0;
      }
      if (pos != item.size() || v <= 0) {
        throw xlart::Error("invalid length '" + item + "' in --lengths");
      }
      out.push_back(static_cast<std::size_t>(v));
    }
    if (out.empty()) {
      throw xlart::Error("--lengths needs at least one length");
    }
    return out;
  }

}  // namespace

int main(int argc, char** argv) {
  using namespace xlart;

  CLI::App app{"Word and conjugacy problems in Artin groups of extra-large type"};
  app.require_subcommand(1);

  std::string group_path;
  std::string word1;
  std::string word2;
  std::size_t bound = 4;
  std::string lengths = "16,32,64";
  std::size_t samples = 10;
  std::uint64_t seed = 1;

  auto one_word = [&](std::string const& name, std::string const& help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("group", group_path, "group file")->required();
    cmd->add_option("word", word1, "word")->required();
    return cmd;
  };
  auto two_words = [&](std::string const& name, std::string const& help) {
    auto* cmd = one_word(name, help);
    cmd->add_option("word2", word2, "second word")->required();
    return cmd;
  };

  auto* reduce = one_word("reduce", "print a geodesic word");
  auto* nf = one_word("normal-form", "print the shortlex-least geodesic");
  auto* equal = two_words("equal", "test equality (exit 0 equal, 1 not)");
  auto* cyc = one_word("cyclic-reduce", "print a cyclically reduced conjugate and the conjugator");
  auto* conj = two_words("conjugate", "decide conjugacy (exit 0 yes, 1 no)");
  auto* oeq = two_words("oracle-equal", "equality by brute-force relator search");
  auto* oconj = two_words("oracle-conjugate", "search conjugators up to a length bound");
  oconj->add_option("--bound", bound, "largest conjugator length")->capture_default_str();
  auto* bench = app.add_subcommand("bench", "time operations over word lengths");
  bench->add_option("group", group_path, "group file")->required();
  bench->add_option("--lengths", lengths, "comma separated lengths")->capture_default_str();
  bench->add_option("--samples", samples, "samples per length")->capture_default_str();
  bench->add_option("--seed", seed, "random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_error;
  }

  try {
    GroupContext const ctx = load_group_file(group_path);
    auto               fmt = [&ctx](std::span<Letter const> w) { return format_word(w, ctx); };

    if (bench->parsed()) {
      BenchOptions opts;
      opts.lengths = parse_lengths(lengths);
      opts.samples = samples;
      opts.seed = seed;
      std::cout << std::left << std::setw(20) << "operation" << std::setw(8) << "length"
                << std::setw(9) << "samples" << "mean_seconds\n";
      for (auto const& row : run_bench(ctx, opts)) {
        std::cout << std::left << std::setw(20) << row.operation << std::setw(8)
                  << row.length << std::setw(9) << row.samples << std::scientific
                  << std::setprecision(4) << row.mean_seconds << std::defaultfloat << "\n";
      }
      return exit_yes;
    }

    Word const u = parse_word(word1, ctx);
    bool const pair = equal->parsed() || conj->parsed() || oeq->parsed() || oconj->parsed();
    Word const v = pair ? parse_word(word2, ctx) : Word{};

    if (reduce->parsed()) {
      std::cout << fmt(geodesic(u, ctx)) << "\n";
    } else if (nf->parsed()) {
      std::cout << fmt(normal_form(u, ctx)) << "\n";
    } else if (equal->parsed()) {
      bool const same = equal_elements(u, v, ctx);
      std::cout << (same ? "equal" : "not-equal") << "\n";
      return same ? exit_yes : exit_no;
    } else if (cyc->parsed()) {
      Conjugated r = specially_cyclically_reduce(u, ctx);
      std::cout << fmt(r.word) << "\n" << fmt(r.conjugator) << "\n";
    } else if (conj->parsed()) {
      ConjugacyOutcome r = conjugacy(u, v, ctx);
      std::cout << "conjugate: " << (r.conjugate ? "yes" : "no") << "\n";
      if (r.conjugate) {
        std::cout << "witness: " << fmt(*r.witness) << "\n";
      }
      return r.conjugate ? exit_yes : exit_no;
    } else if (oeq->parsed()) {
      bool const same = Oracle(ctx).equal(u, v);
      std::cout << (same ? "equal" : "not-equal") << "\n";
      return same ? exit_yes : exit_no;
    } else if (oconj->parsed()) {
      auto f = Oracle(ctx).conjugate(u, v, bound);
      std::cout << "conjugate: " << (f ? "yes" : "no witness within bound") << "\n";
      if (f) {
        std::cout << "witness: " << fmt(*f) << "\n";
      }
      return f ? exit_yes : exit_no;
    }
  } catch (std::exception const& e) {
    std::cerr << "xlart: " << e.what() << "\n";
    return exit_error;
  }
  return exit_yes;
}
