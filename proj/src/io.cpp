#include "xlart/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace xlart {

  namespace {

    bool is_identifier(std::string_view s) {
      if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) {
        return false;
      }
      return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
      });
    }

    std::vector<std::string> split(std::string_view s) {
      std::vector<std::string> out;
      std::istringstream       in{std::string(s)};
      std::string              tok;
      while (in >> tok) {
        out.push_back(tok);
      }
      return out;
    }

    [[noreturn]] void fail(std::size_t line, std::string const& what) {
      throw Error("line " + std::to_string(line) + ": " + what);
    }

    std::optional<GeneratorId> find_name(std::vector<std::string> const& names,
                                         std::string_view                name) {
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) {
        return std::nullopt;
      }
      return static_cast<GeneratorId>(it - names.begin());
    }

  }  // namespace

  GroupContext parse_group_file(std::string_view text) {
    std::vector<std::string>                  names;
    bool                                      have_names = false;
    std::vector<std::tuple<GeneratorId, GeneratorId, EdgeLabel>> edges;
    std::set<std::pair<GeneratorId, GeneratorId>> seen;

    std::istringstream in{std::string(text)};
    std::string        raw;
    std::size_t        line_no = 0;
    while (std::getline(in, raw)) {
      ++line_no;
      std::string_view line(raw);
      line = line.substr(0, line.find('#'));
      auto colon = line.find(':');
      if (colon == std::string_view::npos) {
        if (!split(line).empty()) {
          fail(line_no, "expected 'generators:' or 'm:'");
        }
        continue;
      }
      auto head = split(line.substr(0, colon));
      if (head.size() != 1) {
        fail(line_no, "expected a single key before ':'");
      }
      std::string const key = head.front();
      auto const        fields = split(line.substr(colon + 1));
      if (key == "generators") {
        if (have_names) {
          fail(line_no, "duplicate generators line");
        }
        for (auto const& f : fields) {
          if (!is_identifier(f)) {
            fail(line_no, "invalid generator name '" + f + "'");
          }
          if (find_name(names, f)) {
            fail(line_no, "duplicate generator name '" + f + "'");
          }
          names.push_back(f);
        }
        if (names.size() < 2) {
          fail(line_no, "need at least 2 generators, found "
                            + std::to_string(names.size()));
        }
        have_names = true;
      } else if (key == "m") {
        if (!have_names) {
          fail(line_no, "edge before the generators line");
        }
        if (fields.size() != 3) {
          fail(line_no, "expected 'm: NAME NAME VALUE'");
        }
        auto a = find_name(names, fields[0]);
        auto b = find_name(names, fields[1]);
        if (!a || !b) {
          fail(line_no, "unknown generator '" + (a ? fields[1] : fields[0]) + "'");
        }
        std::string const pair = fields[0] + " " + fields[1];
        if (*a == *b) {
          fail(line_no, "edge from a generator to itself: " + pair);
        }
        if (!seen.insert(std::minmax(*a, *b)).second) {
          fail(line_no, "duplicate edge " + pair);
        }
        EdgeLabel m;
        if (fields[2] != "inf") {
          unsigned    value = 0;
          auto const& s = fields[2];
          auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
          if (ec != std::errc() || p != s.data() + s.size()) {
            fail(line_no, "invalid label '" + s + "' on pair " + pair);
          }
          if (value < 4) {
            fail(line_no, "label " + s + " on pair " + pair
                              + " is not extra-large (need m >= 4 or inf)");
          }
          m = EdgeLabel(value);
        }
        edges.emplace_back(*a, *b, m);
      } else {
        fail(line_no, "unknown key '" + key + "'");
      }
    }
    if (!have_names) {
      throw Error("missing 'generators:' line");
    }
    CoxeterMatrix cm(names.size());
    for (auto const& [a, b, m] : edges) {
      cm.set(a, b, m);
    }
    return GroupContext(std::move(cm), std::move(names));
  }

  GroupContext load_group_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot read group file " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      return parse_group_file(buf.str());
    } catch (Error const& e) {
      throw Error(path + ": " + e.what());
    }
  }

  Word parse_word(std::string_view text, GroupContext const& ctx) {
    Word out;
    for (auto const& tok : split(text)) {
      auto        caret = tok.find('^');
      std::string name = tok.substr(0, caret);
      auto        g = find_name(ctx.names(), name);
      if (!g) {
        throw Error("unknown generator '" + name + "' in token '" + tok + "'");
      }
      long k = 1;
      if (caret != std::string::npos) {
        std::string_view e(tok);
        e.remove_prefix(caret + 1);
        auto [p, ec] = std::from_chars(e.data(), e.data() + e.size(), k);
        if (e.empty() || ec != std::errc() || p != e.data() + e.size()) {
          throw Error("malformed exponent in token '" + tok + "'");
        }
        if (k == 0) {
          throw Error("zero exponent in token '" + tok + "'");
        }
      }
      Letter a{*g, k < 0};
      for (long i = 0; i < (k < 0 ? -k : k); ++i) {
        out.push_back(a);
      }
    }
    return out;
  }

  std::string format_word(std::span<Letter const> w, GroupContext const& ctx) {
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) {
        ++j;
      }
      long const k = static_cast<long>(j - i) * w[i].sign();
      if (!out.empty()) {
        out += ' ';
      }
      out += ctx.names()[w[i].name];
      if (k != 1) {
        out += '^' + std::to_string(k);
      }
      i = j;
    }
    return out;
  }

}  // namespace xlart
