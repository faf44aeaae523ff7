#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace trisys {

enum class FactorKind { Cyclic, Dihedral };

/// One direct factor of a group. Cyclic(m) is Z_m (order m); Dihedral(m) is
/// D_2m = <x, y | y^2 = x^m = 1, yx = x^-1 y> (order 2m).
struct Factor {
  FactorKind kind = FactorKind::Cyclic;
  int modulus = 1;  // m

  int order() const { return kind == FactorKind::Cyclic ? modulus : 2 * modulus; }
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Coordinate in one factor: residue r for a cyclic factor (j stays 0),
/// x^r y^j with j in {0,1} for a dihedral factor.
struct Coord {
  int r = 0;
  int j = 0;
  friend auto operator<=>(const Coord&, const Coord&) = default;
};

/// Group element, one coordinate per factor. Comparison is lexicographic and
/// agrees with enumeration order, so elements work as ordered set/map keys.
struct Element {
  std::vector<Coord> coords;
  friend auto operator<=>(const Element&, const Element&) = default;
};

/// Sorted element list containing the identity, closed under the group ops.
using Subgroup = std::vector<Element>;

inline std::string to_string(const Element& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(a.coords[i].r);
    if (a.coords[i].j) out += "*";  // reflection marker, display only
  }
  return out + "]";
}

/// A finite group presented as a direct product of cyclic and dihedral
/// factors. Immutable after construction; all operations are pure.
class GroupSpec {
 public:
  GroupSpec() : factors_{Factor{FactorKind::Cyclic, 1}} {}

  explicit GroupSpec(std::vector<Factor> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) factors_ = {Factor{FactorKind::Cyclic, 1}};
    for (const Factor& f : factors_)
      if (f.modulus < 1) throw std::invalid_argument("group factor needs modulus >= 1");
  }

  /// Parses descriptors like "Z4xZ12", "D6xZ9", "Z2xZ2xZ7". "D<k>" requires
  /// even k and denotes the dihedral group of order k.
  static GroupSpec parse(std::string_view text) {
    std::vector<Factor> factors;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find_first_of("xX", pos);
      std::string_view tok = text.substr(pos, next == std::string_view::npos ? next : next - pos);
      if (tok.size() < 2 || (tok[0] != 'Z' && tok[0] != 'D'))
        throw std::invalid_argument("bad group descriptor token: '" + std::string(tok) + "'");
      long long value = 0;
      for (char c : tok.substr(1)) {
        if (c < '0' || c > '9')
          throw std::invalid_argument("bad group descriptor token: '" + std::string(tok) + "'");
        value = value * 10 + (c - '0');
        if (value > 1'000'000) throw std::invalid_argument("group factor too large");
      }
      if (tok[0] == 'Z') {
        if (value < 1) throw std::invalid_argument("Z factor needs order >= 1");
        factors.push_back({FactorKind::Cyclic, static_cast<int>(value)});
      } else {
        if (value < 2 || value % 2 != 0)
          throw std::invalid_argument("D factor needs even order >= 2");
        factors.push_back({FactorKind::Dihedral, static_cast<int>(value / 2)});
      }
      if (next == std::string_view::npos) break;
      pos = next + 1;
      if (pos == text.size()) throw std::invalid_argument("trailing separator in group descriptor");
    }
    if (factors.empty()) throw std::invalid_argument("empty group descriptor");
    return GroupSpec(std::move(factors));
  }

  std::string descriptor() const {
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) out += "x";
      out += factors_[i].kind == FactorKind::Cyclic ? "Z" : "D";
      out += std::to_string(factors_[i].order());
    }
    return out;
  }

  const std::vector<Factor>& factors() const { return factors_; }

  long long order() const {
    long long n = 1;
    for (const Factor& f : factors_) n *= f.order();
    return n;
  }

  Element identity() const { return Element{std::vector<Coord>(factors_.size())}; }

  /// Builds an element from raw per-factor values, reducing residues into
  /// canonical range (negative r allowed).
  Element make(const std::vector<Coord>& raw) const {
    if (raw.size() != factors_.size()) throw std::invalid_argument("coordinate arity mismatch");
    Element out;
    out.coords.resize(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
      int m = factors_[i].modulus;
      int r = raw[i].r % m;
      if (r < 0) r += m;
      int j = raw[i].j;
      if (factors_[i].kind == FactorKind::Cyclic) {
        if (j != 0) throw std::invalid_argument("cyclic coordinate with reflection part");
      } else if (j != 0 && j != 1) {
        throw std::invalid_argument("dihedral reflection part must be 0 or 1");
      }
      out.coords[i] = {r, j};
    }
    return out;
  }

  void check_element(const Element& a) const {
    if (a.coords.size() != factors_.size()) throw std::invalid_argument("coordinate arity mismatch");
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
      const auto& [r, j] = a.coords[i];
      bool ok = r >= 0 && r < factors_[i].modulus &&
                (factors_[i].kind == FactorKind::Cyclic ? j == 0 : (j == 0 || j == 1));
      if (!ok) throw std::invalid_argument("coordinate out of range at factor " + std::to_string(i));
    }
  }

  /// Factor-wise product. Dihedral factors follow
  /// x^r1 y^j1 * x^r2 y^j2 = x^(r1 + (-1)^j1 r2) y^(j1 xor j2).
  Element compose(const Element& a, const Element& b) const {
    check_element(a);
    check_element(b);
    Element out;
    out.coords.resize(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      int m = factors_[i].modulus;
      const Coord& ca = a.coords[i];
      const Coord& cb = b.coords[i];
      if (factors_[i].kind == FactorKind::Cyclic) {
        out.coords[i] = {(ca.r + cb.r) % m, 0};
      } else {
        int r = ca.j ? (ca.r - cb.r) % m : (ca.r + cb.r) % m;
        if (r < 0) r += m;
        out.coords[i] = {r, ca.j ^ cb.j};
      }
    }
    return out;
  }

  /// Cyclic: -r. Dihedral: rotations invert to x^(m-r), reflections are
  /// involutions.
  Element inverse(const Element& a) const {
    check_element(a);
    Element out;
    out.coords.resize(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      int m = factors_[i].modulus;
      const Coord& c = a.coords[i];
      if (c.j)
        out.coords[i] = c;
      else
        out.coords[i] = {(m - c.r) % m, 0};
    }
    return out;
  }

  /// Right difference x * y^-1; invariant under right translation of both
  /// arguments, which is what makes delta lists develop correctly.
  Element right_difference(const Element& x, const Element& y) const {
    return compose(x, inverse(y));
  }

  bool is_identity(const Element& a) const {
    for (const Coord& c : a.coords)
      if (c.r != 0 || c.j != 0) return false;
    return true;
  }

  /// All elements in canonical (lexicographic) order.
  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(order()));
    Element cur = identity();
    while (true) {
      out.push_back(cur);
      // mixed-radix increment, last factor fastest
      std::size_t i = factors_.size();
      while (i > 0) {
        --i;
        Coord& c = cur.coords[i];
        if (factors_[i].kind == FactorKind::Dihedral && c.j == 0) {
          c.j = 1;
          break;
        }
        c.j = 0;
        if (++c.r < factors_[i].modulus) break;
        c.r = 0;
        if (i == 0) return out;
      }
    }
  }

  /// Position of `a` in elements(); consistent with Element ordering.
  long long index_of(const Element& a) const {
    check_element(a);
    long long idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      int digits = factors_[i].order();
      int digit = factors_[i].kind == FactorKind::Cyclic ? a.coords[i].r
                                                         : a.coords[i].r * 2 + a.coords[i].j;
      idx = idx * digits + digit;
    }
    return idx;
  }

  Element element_at(long long idx) const {
    Element out = identity();
    for (std::size_t i = factors_.size(); i-- > 0;) {
      int digits = factors_[i].order();
      int digit = static_cast<int>(idx % digits);
      idx /= digits;
      if (factors_[i].kind == FactorKind::Cyclic)
        out.coords[i] = {digit, 0};
      else
        out.coords[i] = {digit / 2, digit % 2};
    }
    return out;
  }

  int element_order(const Element& a) const {
    check_element(a);
    Element cur = a;
    int n = 1;
    while (!is_identity(cur)) {
      cur = compose(cur, a);
      ++n;
    }
    return n;
  }

  bool is_involution(const Element& a) const {
    return !is_identity(a) && is_identity(compose(a, a));
  }

  /// All g != identity with g*g = identity, in canonical order.
  std::vector<Element> involutions() const {
    std::vector<Element> out;
    for (const Element& g : elements())
      if (is_involution(g)) out.push_back(g);
    return out;
  }

  Subgroup cyclic_subgroup(const Element& g) const {
    Subgroup s{identity()};
    Element cur = g;
    while (!is_identity(cur)) {
      s.push_back(cur);
      cur = compose(cur, g);
    }
    std::sort(s.begin(), s.end());
    return s;
  }

  /// Every subgroup of order p, for p in {2,3}, sorted deterministically.
  std::vector<Subgroup> subgroups_of_prime_order(int p) const {
    if (p != 2 && p != 3) throw std::invalid_argument("only order 2 and 3 subgroups supported");
    std::set<Subgroup> found;
    for (const Element& g : elements())
      if (!is_identity(g) && element_order(g) == p) found.insert(cyclic_subgroup(g));
    return {found.begin(), found.end()};
  }

  /// Membership-table subgroup check: contains identity and is closed under
  /// composition (finiteness then gives inverses).
  bool is_subgroup(const Subgroup& s) const {
    if (s.empty() || !std::is_sorted(s.begin(), s.end())) return false;
    if (!std::binary_search(s.begin(), s.end(), identity())) return false;
    for (const Element& a : s)
      for (const Element& b : s)
        if (!std::binary_search(s.begin(), s.end(), compose(a, b))) return false;
    return true;
  }

  /// One representative from each pair {h, h^-1} of non-identity elements of
  /// an odd-order group; the symmetric 2-subsets these pairs form are the
  /// patterned starter.
  std::vector<Element> patterned_starter() const {
    if (order() % 2 == 0) throw std::domain_error("patterned starter needs an odd-order group");
    std::vector<Element> out;
    for (const Element& g : elements()) {
      if (is_identity(g)) continue;
      if (g < inverse(g)) out.push_back(g);
    }
    return out;
  }

 private:
  std::vector<Factor> factors_;
};

}  // namespace trisys
