#pragma once

// Brute-force reference implementations used only by the tests. They work on
// plain vectors of element indices and share no code with the library.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using Set = std::set<int>;
using Blocks = std::vector<Set>;
using Family = std::set<Set>;

inline Set universe(int n) {
  Set u;
  for (int i = 0; i < n; ++i) u.insert(i);
  return u;
}

inline Set from_bits(std::uint64_t bits) {
  Set s;
  for (int i = 0; i < 64; ++i) {
    if ((bits >> i) & 1U) s.insert(i);
  }
  return s;
}

inline std::uint64_t to_bits(const Set& s) {
  std::uint64_t bits = 0;
  for (int i : s) bits |= std::uint64_t{1} << i;
  return bits;
}

inline bool subset_of(const Set& a, const Set& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline Set unite(const Set& a, const Set& b) {
  Set out = a;
  out.insert(b.begin(), b.end());
  return out;
}

inline Set intersect(const Set& a, const Set& b) {
  Set out;
  for (int x : a) {
    if (b.count(x) != 0) out.insert(x);
  }
  return out;
}

inline Set minus(const Set& a, const Set& b) {
  Set out;
  for (int x : a) {
    if (b.count(x) == 0) out.insert(x);
  }
  return out;
}

inline std::vector<Set> powerset(int n) {
  std::vector<Set> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) out.push_back(from_bits(m));
  return out;
}

/// Bell numbers from the Bell triangle.
inline std::vector<std::uint64_t> bell_numbers(int count) {
  std::vector<std::uint64_t> bell{1};
  std::vector<std::uint64_t> row{1};
  while (static_cast<int>(bell.size()) < count) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto v : row) next.push_back(next.back() + v);
    row = next;
    bell.push_back(row.front());
  }
  return bell;
}

/// All set partitions of {0..n-1}, built by inserting each element into an
/// existing block or a new one.
inline std::vector<Blocks> partitions(int n) {
  std::vector<Blocks> out{Blocks{}};
  for (int x = 0; x < n; ++x) {
    std::vector<Blocks> grown;
    for (const auto& p : out) {
      for (std::size_t b = 0; b < p.size(); ++b) {
        Blocks q = p;
        q[b].insert(x);
        grown.push_back(q);
      }
      Blocks q = p;
      q.push_back(Set{x});
      grown.push_back(q);
    }
    out = grown;
  }
  return out;
}

inline Set lower(const Blocks& p, const Set& x) {
  Set out;
  for (const auto& b : p) {
    if (subset_of(b, x)) out = unite(out, b);
  }
  return out;
}

inline Set upper(const Blocks& p, const Set& x) {
  Set out;
  for (const auto& b : p) {
    if (!intersect(b, x).empty()) out = unite(out, b);
  }
  return out;
}

struct Space {
  int n = 0;
  Blocks blocks;
  Set x;
  Family open;
};

inline Space space(int n, const Blocks& p, const Set& x) {
  Space s{n, p, x, {}};
  const Set lo = lower(p, x);
  const Set up = upper(p, x);
  s.open = {Set{}, universe(n), lo, up, minus(up, lo)};
  return s;
}

inline Family closed(const Space& s) {
  Family out;
  for (const auto& o : s.open) out.insert(minus(universe(s.n), o));
  return out;
}

inline Set interior(const Space& s, const Set& b) {
  Set out;
  for (const auto& o : s.open) {
    if (subset_of(o, b)) out = unite(out, o);
  }
  return out;
}

inline Set closure(const Space& s, const Set& b) {
  Set out = universe(s.n);
  for (const auto& c : closed(s)) {
    if (subset_of(b, c)) out = intersect(out, c);
  }
  return out;
}

/// B is h-open when B <= nInt(B u O) for every open O other than {} and U.
inline bool h_open(const Space& s, const Set& b) {
  for (const auto& o : s.open) {
    if (o.empty() || o == universe(s.n)) continue;
    if (!subset_of(b, interior(s, unite(b, o)))) return false;
  }
  return true;
}

inline bool h_closed(const Space& s, const Set& b) { return h_open(s, minus(universe(s.n), b)); }

inline Family h_family(const Space& s) {
  Family out;
  for (const auto& b : powerset(s.n)) {
    if (h_open(s, b)) out.insert(b);
  }
  return out;
}

inline Set h_interior(const Space& s, const Set& b) {
  Set out;
  for (const auto& g : h_family(s)) {
    if (subset_of(g, b)) out = unite(out, g);
  }
  return out;
}

inline Set h_closure(const Space& s, const Set& b) {
  Set out = universe(s.n);
  for (const auto& g : powerset(s.n)) {
    if (subset_of(b, g) && h_closed(s, g)) out = intersect(out, g);
  }
  return out;
}

/// Every space on {0..n-1}.
inline std::vector<Space> spaces(int n) {
  std::vector<Space> out;
  for (const auto& p : partitions(n)) {
    for (const auto& x : powerset(n)) out.push_back(space(n, p, x));
  }
  return out;
}

using Map = std::vector<int>;

inline Set pre(const Map& f, const Set& c) {
  Set out;
  for (int i = 0; i < static_cast<int>(f.size()); ++i) {
    if (c.count(f[i]) != 0) out.insert(i);
  }
  return out;
}

inline Set img(const Map& f, const Set& b) {
  Set out;
  for (int i : b) out.insert(f[i]);
  return out;
}

inline bool bijective(const Map& f, int codomain_size) {
  return static_cast<int>(f.size()) == codomain_size &&
         static_cast<int>(img(f, universe(codomain_size)).size()) == codomain_size;
}

/// The eleven classes, in declaration order of the library enum.
struct Classes {
  bool continuous, open, homeo, totally, contra;
  bool h_continuous, h_open_map, h_irresolute, h_homeo, h_totally, h_contra;
};

inline Classes classify(const Space& d, const Space& v, const Map& f) {
  auto preimages_of = [&](const Family& sources, auto&& pred) {
    for (const auto& c : sources) {
      if (!pred(pre(f, c))) return false;
    }
    return true;
  };
  const Family vh = h_family(v);
  const Family dclosed = closed(d);
  auto is_open = [&](const Set& s) { return d.open.count(s) != 0; };
  auto is_closed = [&](const Set& s) { return dclosed.count(s) != 0; };
  auto is_clopen = [&](const Set& s) { return is_open(s) && is_closed(s); };
  auto is_h_open = [&](const Set& s) { return h_open(d, s); };
  auto is_h_closed = [&](const Set& s) { return h_closed(d, s); };

  Classes c{};
  c.continuous = preimages_of(v.open, is_open);
  c.totally = preimages_of(v.open, is_clopen);
  c.contra = preimages_of(v.open, is_closed);
  c.h_continuous = preimages_of(v.open, is_h_open);
  c.h_contra = preimages_of(v.open, is_h_closed);
  c.h_irresolute = preimages_of(vh, is_h_open);
  c.h_totally = preimages_of(vh, is_clopen);
  c.open = true;
  c.h_open_map = true;
  for (const auto& o : d.open) {
    c.open = c.open && v.open.count(img(f, o)) != 0;
    c.h_open_map = c.h_open_map && h_open(v, img(f, o));
  }
  const bool bij = bijective(f, v.n);
  c.homeo = bij && c.continuous && c.open;
  c.h_homeo = bij && c.h_continuous && c.h_open_map;
  return c;
}

/// Every map {0..m-1} -> {0..k-1}.
inline std::vector<Map> maps(int m, int k) {
  std::vector<Map> out{Map{}};
  for (int i = 0; i < m; ++i) {
    std::vector<Map> grown;
    for (const auto& f : out) {
      for (int y = 0; y < k; ++y) {
        Map g = f;
        g.push_back(y);
        grown.push_back(g);
      }
    }
    out = grown;
  }
  return out;
}

}  // namespace oracle
