#include "xlart/group_context.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace xlart {

  std::string to_string(EdgeLabel m) {
    return m.is_infinite() ? std::string("inf") : std::to_string(m.value());
  }

  ////////////////////////////////////////////////////////////////////////
  // CoxeterMatrix
  ////////////////////////////////////////////////////////////////////////

  CoxeterMatrix::CoxeterMatrix(std::size_t n) : _n(n), _m(n * n) {
    if (n < 2) {
      throw Error("a Coxeter matrix needs at least 2 generators, found "
                  + std::to_string(n));
    }
  }

  EdgeLabel CoxeterMatrix::operator()(GeneratorId i, GeneratorId j) const {
    if (i >= _n || j >= _n) {
      throw Error("generator index out of range");
    }
    if (i == j) {
      throw Error("diagonal Coxeter matrix entries are not edge labels");
    }
    return _m[i * _n + j];
  }

  void CoxeterMatrix::set(GeneratorId i, GeneratorId j, EdgeLabel m) {
    if (i >= _n || j >= _n || i == j) {
      throw Error("invalid generator pair (" + std::to_string(i) + ", "
                  + std::to_string(j) + ")");
    }
    if (m.is_finite() && m.value() < 4) {
      throw Error("label " + std::to_string(m.value()) + " on pair ("
                  + std::to_string(i) + ", " + std::to_string(j)
                  + ") is not extra-large (need m >= 4 or inf)");
    }
    _m[i * _n + j] = m;
    _m[j * _n + i] = m;
  }

  ////////////////////////////////////////////////////////////////////////
  // GroupContext
  ////////////////////////////////////////////////////////////////////////

  GroupContext::GroupContext(CoxeterMatrix matrix, std::vector<std::string> names)
      : _matrix(std::move(matrix)), _names(std::move(names)) {
    std::size_t const n = _matrix.rank();
    if (_names.empty()) {
      for (std::size_t i = 0; i < n; ++i) {
        _names.push_back("x" + std::to_string(i + 1));
      }
    } else if (_names.size() != n) {
      throw Error("expected " + std::to_string(n) + " generator names, found "
                  + std::to_string(_names.size()));
    }
    std::vector<Letter> order;
    for (std::size_t i = 0; i < 2 * n; ++i) {
      order.push_back(Letter::from_index(i));
    }
    set_letter_order(std::move(order));

    // union-find over odd edges
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    for (GeneratorId i = 0; i < n; ++i) {
      for (GeneratorId j = i + 1; j < n; ++j) {
        if (_matrix(i, j).is_odd()) {
          parent[find(i)] = find(j);
        }
      }
    }
    _component.assign(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t r = find(i);
      if (_component[r] == n) {
        _component[r] = _component_count++;
      }
      _component[i] = _component[r];
    }
  }

  GroupContext GroupContext::uniform(std::size_t n, EdgeLabel m) {
    CoxeterMatrix cm(n);
    for (GeneratorId i = 0; i < n; ++i) {
      for (GeneratorId j = i + 1; j < n; ++j) {
        cm.set(i, j, m);
      }
    }
    return GroupContext(std::move(cm));
  }

  GroupContext GroupContext::dihedral(EdgeLabel m) {
    return uniform(2, m);
  }

  void GroupContext::set_letter_order(std::vector<Letter> order) {
    std::size_t const k = letter_count();
    if (order.size() != k) {
      throw Error("letter order must list all " + std::to_string(k)
                  + " letters");
    }
    std::vector<std::size_t> rank(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t idx = order[i].index();
      if (idx >= k || rank[idx] != k) {
        throw Error("letter order is not a permutation of the letters");
      }
      rank[idx] = i;
    }
    _order = std::move(order);
    _rank_of = std::move(rank);
  }

  bool GroupContext::shortlex_less(std::span<Letter const> u,
                                   std::span<Letter const> v) const {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] != v[i]) {
        return rank_of(u[i]) < rank_of(v[i]);
      }
    }
    return false;
  }

  std::vector<GeneratorId> GroupContext::odd_path(GeneratorId from,
                                                  GeneratorId to) const {
    std::size_t const n = rank();
    if (from >= n || to >= n) {
      throw Error("generator index out of range");
    }
    if (_component[from] != _component[to]) {
      return {};
    }
    std::vector<std::size_t> prev(n, n);
    std::queue<GeneratorId>  q;
    prev[from] = from;
    q.push(from);
    while (!q.empty()) {
      GeneratorId g = q.front();
      q.pop();
      if (g == to) {
        break;
      }
      for (GeneratorId h = 0; h < n; ++h) {
        if (h != g && prev[h] == n && _matrix(g, h).is_odd()) {
          prev[h] = g;
          q.push(h);
        }
      }
    }
    std::vector<GeneratorId> path{to};
    while (path.back() != from) {
      path.push_back(static_cast<GeneratorId>(prev[path.back()]));
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

  void GroupContext::check_word(std::span<Letter const> w) const {
    for (Letter a : w) {
      if (a.name >= rank()) {
        throw Error("letter names generator " + std::to_string(a.name + 1)
                    + " but the group has " + std::to_string(rank()));
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  Word free_reduce(std::span<Letter const> w) {
    Word out;
    out.reserve(w.size());
    for (Letter a : w) {
      if (!out.empty() && out.back() == a.inv()) {
        out.pop_back();
      } else {
        out.push_back(a);
      }
    }
    return out;
  }

  Word invert(std::span<Letter const> w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      out.push_back(it->inv());
    }
    return out;
  }

  bool is_freely_reduced(std::span<Letter const> w) {
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i] == w[i - 1].inv()) {
        return false;
      }
    }
    return true;
  }

  bool is_cyclically_reduced(std::span<Letter const> w) {
    return is_freely_reduced(w)
           && (w.size() < 2 || w.front() != w.back().inv());
  }

  Word concat(std::span<Letter const> u, std::span<Letter const> v) {
    Word out(u.begin(), u.end());
    out.insert(out.end(), v.begin(), v.end());
    return out;
  }

  Word power(Letter a, std::size_t k) {
    return Word(k, a);
  }

  Word alt_left(Letter a, Letter b, std::size_t k) {
    if (a.name == b.name) {
      throw Error("alternating words need letters with distinct names");
    }
    Word out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      out.push_back(i % 2 == 0 ? a : b);
    }
    return out;
  }

  Word alt_right(Letter a, Letter b, std::size_t k) {
    if (a.name == b.name) {
      throw Error("alternating words need letters with distinct names");
    }
    Word out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      out.push_back((k - i) % 2 == 1 ? b : a);
    }
    return out;
  }

  std::vector<Rotation> cyclic_conjugates(std::span<Letter const> w) {
    if (!is_cyclically_reduced(w)) {
      throw Error("cyclic_conjugates: " + to_string(w)
                  + " is not a cyclically reduced word");
    }
    std::vector<Rotation> out;
    out.reserve(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) {
      Rotation r;
      r.word.assign(w.begin() + k, w.end());
      r.word.insert(r.word.end(), w.begin(), w.begin() + k);
      r.prefix.assign(w.begin(), w.begin() + k);
      out.push_back(std::move(r));
    }
    return out;
  }

  std::set<GeneratorId> generators_of(std::span<Letter const> w) {
    std::set<GeneratorId> out;
    for (Letter a : w) {
      out.insert(a.name);
    }
    return out;
  }

  std::string to_string(std::span<Letter const> w) {
    if (w.empty()) {
      return "e";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0) {
        out += ' ';
      }
      out += 'x' + std::to_string(w[i].name + 1);
      if (w[i].inverse) {
        out += "^-1";
      }
    }
    return out;
  }

}  // namespace xlart
