#pragma once

#include <map>
#include <string>
#include <vector>

#include "trisys/common.hpp"
#include "trisys/difference_family.hpp"
#include "trisys/group.hpp"
#include "trisys/sequences.hpp"

namespace trisys {

/// A difference family together with the partial spread it is relative to.
struct RelativeDifferenceFamily {
  DifferenceFamily family;
  PartialSpread spread;
};

namespace detail {

// Spreads are always re-derived from coverage and cross-checked against the
// type the construction is supposed to produce, so a wrong block never
// certifies itself.
inline RelativeDifferenceFamily certify(DifferenceFamily fam, const std::map<int, int>& want_type,
                                        const std::vector<int>& allowed, const std::string& tag) {
  std::sort(fam.blocks.begin(), fam.blocks.end());
  auto spread = infer_spread(fam, allowed);
  if (!spread)
    throw ConstructionError(tag + ": differences repeat or the remainder is not a spread");
  if (spread->type() != want_type) {
    std::string got;
    for (auto [d, c] : spread->type()) got += std::to_string(d) + "^" + std::to_string(c) + " ";
    throw ConstructionError(tag + ": spread type mismatch, got {" + got + "}");
  }
  if (!validate_spread(*spread)) throw ConstructionError(tag + ": inferred spread invalid");
  if (DfCheck chk = validate_df(fam, *spread); !chk.ok)
    throw ConstructionError(tag + ": " + chk.reason);
  return {std::move(fam), std::move(*spread)};
}

inline ExtendedSkolemSequence need_skolem(int n, int k, const std::string& tag) {
  auto r = find_extended_skolem(n, k);
  if (r.status != SearchStatus::Found)
    throw ConstructionError(tag + ": no " + std::to_string(k) + "-extended Skolem sequence of order " +
                            std::to_string(n));
  return *r.sequence;
}

inline ExtendedLangfordSequence need_langford(int n, int d, int k, const std::string& tag) {
  auto r = find_extended_langford(n, d, k);
  if (r.status != SearchStatus::Found)
    throw ConstructionError(tag + ": no extended Langford sequence (n=" + std::to_string(n) +
                            ", d=" + std::to_string(d) + ", k=" + std::to_string(k) + ")");
  return *r.sequence;
}

// Z_m factors with m = 1 contribute nothing; dropping them keeps descriptors
// in the shape the conclusion table uses.
inline std::vector<Factor> drop_trivial(std::vector<Factor> factors) {
  std::erase_if(factors, [](const Factor& f) {
    return f.kind == FactorKind::Cyclic && f.modulus == 1;
  });
  return factors;
}

}  // namespace detail

/// Difference family equivalent of a cyclic STS(v'): relative to the trivial
/// spread for v' = 1 (mod 6), to the order-3 subgroup for v' = 3 (mod 6).
/// v' = 9 is the classical exception and is refused.
inline RelativeDifferenceFamily cyclic_df(int v) {
  if (v < 1 || (v % 6 != 1 && v % 6 != 3) || v == 9)
    throw std::domain_error("cyclic STS(v') needs v' = 1,3 (mod 6), v' != 9");
  GroupSpec g(std::vector<Factor>{{FactorKind::Cyclic, v}});
  if (v % 6 == 1) {
    int n = v / 6;
    int k = (n % 4 == 0 || n % 4 == 1) ? 2 * n + 1 : 2 * n;
    DifferenceFamily fam{g, {}};
    if (n > 0) {
      ExtendedSkolemSequence seq = detail::need_skolem(n, k, "cyclic_df");
      for (int i = 1; i <= n; ++i)
        fam.blocks.push_back(make_block(g.identity(), g.make({{i, 0}}),
                                        g.make({{n + seq.entries[static_cast<std::size_t>(i - 1)] + i, 0}})));
    }
    return detail::certify(std::move(fam), {}, {2, 3}, "cyclic_df");
  }
  // v' = 3 (mod 6): no closed form is used; the search oracle fills in.
  PartialSpread spread{g, {g.cyclic_subgroup(g.make({{v / 3, 0}}))}};
  auto r = df_search(g, spread);
  if (r.status != SearchStatus::Found)
    throw ConstructionError("cyclic_df: search failed over Z" + std::to_string(v));
  return detail::certify(std::move(*r.family), {{3, 1}}, {2, 3}, "cyclic_df");
}

/// Constructor for v = 7 or 15 (mod 24): a family over Z2 x Z2 x H built
/// from an (H,{h},3,1)-DF and the patterned starter of H.
inline RelativeDifferenceFamily df_v7_v15(long long v) {
  bool is7 = v % 24 == 7;
  if (!is7 && v % 24 != 15) throw std::domain_error("df_v7_v15 needs v = 7 or 15 (mod 24)");
  long long n = (v - (is7 ? 7 : 15)) / 24;

  std::vector<Factor> h_factors;
  if (is7) {
    h_factors = {{FactorKind::Cyclic, static_cast<int>(6 * n + 1)}};
  } else {
    h_factors = {{FactorKind::Cyclic, 3}, {FactorKind::Cyclic, static_cast<int>(2 * n + 1)}};
  }
  h_factors = detail::drop_trivial(h_factors);
  GroupSpec h(h_factors);

  std::vector<Factor> g_factors{{FactorKind::Cyclic, 2}, {FactorKind::Cyclic, 2}};
  g_factors.insert(g_factors.end(), h_factors.begin(), h_factors.end());
  GroupSpec g(g_factors);

  auto lift = [&](int a, int b, const Element& hel) {
    std::vector<Coord> coords{{a, 0}, {b, 0}};
    coords.insert(coords.end(), hel.coords.begin(), hel.coords.end());
    return g.make(coords);
  };

  DifferenceFamily fam{g, {}};
  if (is7) {
    for (const Block& blk : cyclic_df(static_cast<int>(6 * n + 1)).family.blocks)
      fam.blocks.push_back(make_block(lift(0, 0, blk[0]), lift(0, 0, blk[1]), lift(0, 0, blk[2])));
  } else if (n >= 1) {
    // (H,{3},3,1)-DF: {(0,0),(1,i),(1,-i)} for 1 <= i <= n
    for (int i = 1; i <= n; ++i) {
      Element b0 = h.make({{0, 0}, {0, 0}});
      Element b1 = h.make({{1, 0}, {i, 0}});
      Element b2 = h.make({{1, 0}, {-i, 0}});
      fam.blocks.push_back(make_block(lift(0, 0, b0), lift(0, 0, b1), lift(0, 0, b2)));
    }
  }
  for (const Element& hel : h.patterned_starter())
    fam.blocks.push_back(make_block(lift(0, 1, h.identity()), lift(1, 0, hel), lift(1, 1, h.inverse(hel))));

  std::map<int, int> want{{2, 3}};
  if (!is7) want[3] = 1;
  return detail::certify(std::move(fam), want, {2, 3}, "df_v7_v15");
}

/// Constructor for v = 9 (mod 24), v >= 33: family over D6 x Z_{4n+1}. The
/// base-block table branches on n mod 4; for n = 0 and 2 (mod 4) one index
/// swaps between the two reflection rows.
inline RelativeDifferenceFamily df_v9(long long v) {
  if (v % 24 != 9 || v < 33) throw std::domain_error("df_v9 needs v = 9 (mod 24), v >= 33");
  int n = static_cast<int>((v - 9) / 24);
  GroupSpec g(std::vector<Factor>{{FactorKind::Dihedral, 3}, {FactorKind::Cyclic, 4 * n + 1}});
  auto el = [&](int r, int j, int z) { return g.make({{r, j}, {z, 0}}); };

  DifferenceFamily fam{g, {}};
  auto add = [&](Element a, Element b, Element c) {
    fam.blocks.push_back(make_block(std::move(a), std::move(b), std::move(c)));
  };

  add(el(0, 0, 0), el(1, 0, n), el(1, 0, 2 * n));
  if (n % 2 == 1)
    add(el(0, 1, 0), el(0, 0, -(n + 1) / 2), el(0, 0, (3 * n + 1) / 2));
  else
    add(el(0, 0, 0), el(1, 0, -n / 2), el(1, 0, 3 * n / 2));

  for (int i = 1; i <= n; ++i) {
    if (n % 2 == 1 && i == (n + 1) / 2) continue;
    add(el(0, 1, 0), el(0, 0, i), el(0, 0, 2 * n + 1 - i));
  }

  int swap_index = n % 4 == 0 ? n / 4 : (n % 4 == 2 ? (7 * n + 2) / 4 : -1);
  for (int i = 1; i <= 2 * n; ++i) {
    bool low_form = i <= n;                       // {(y,0),(x,i),(x^2,-i)}
    if (i == swap_index) low_form = !low_form;    // the exchanged index
    if (low_form)
      add(el(0, 1, 0), el(1, 0, i), el(2, 0, -i));
    else
      add(el(0, 1, 0), el(1, 0, -i), el(2, 0, i));
  }

  for (int i = 1; i <= n - 1; ++i) {
    if (n % 2 == 0 && i == n / 2) continue;
    add(el(0, 0, 0), el(1, 0, i), el(1, 0, 2 * n - i));
  }

  auto out = detail::certify(std::move(fam), {{2, 3}, {3, 1}}, {2, 3}, "df_v9");
  Subgroup rotations = g.cyclic_subgroup(el(1, 0, 0));
  for (const Subgroup& s : out.spread.members)
    if (s.size() == 3 && s != rotations)
      throw ConstructionError("df_v9: order-3 spread member is not the rotation subgroup");
  return out;
}

namespace detail {

// Small-case b-vectors for the (Z_12n,{3,4},3,1) families, B_i = {0, i, b_i}.
inline const std::map<int, std::vector<int>>& lemma_z12n_table() {
  static const std::map<int, std::vector<int>> table{
      {2, {5, 9, 13}},
      {4, {40, 37, 34, 30, 38, 29, 28}},
      {6, {13, 16, 20, 19, 26, 28, 30, 39, 34, 37, 40}},
      {8, {17, 20, 22, 25, 28, 33, 36, 34, 39, 47, 46, 52, 54, 45, 53}},
      {12, {66, 63, 37, 64, 38, 62, 39, 58, 40, 59, 41, 67,
            42, 68, 43, 69, 44, 70, 45, 71, 46, 57, 47}},
      {14, {76, 74, 43, 70, 44, 77, 45, 73, 46, 68, 47, 69, 48, 78,
            49, 79, 50, 80, 51, 81, 52, 82, 53, 83, 54, 67, 55}},
      {20, {110, 103, 61, 108, 62, 102, 63, 100, 64, 105, 65, 106, 66, 107, 67, 98, 68, 99, 69, 111,
            70, 112, 71, 113, 72, 114, 73, 115, 74, 116, 75, 117, 76, 118, 77, 119, 78, 97, 79}},
  };
  return table;
}

}  // namespace detail

/// (Z_12n, {3,4}, 3, 1) difference family for even n >= 2: table families for
/// the small cases, otherwise a Skolem/Langford splice.
inline RelativeDifferenceFamily df_lemma_z12n(int n) {
  if (n < 2 || n % 2 != 0) throw std::domain_error("df_lemma_z12n needs even n >= 2");
  GroupSpec g(std::vector<Factor>{{FactorKind::Cyclic, 12 * n}});
  DifferenceFamily fam{g, {}};

  const auto& table = detail::lemma_z12n_table();
  if (auto it = table.find(n); it != table.end()) {
    for (int i = 1; i <= 2 * n - 1; ++i)
      fam.blocks.push_back(make_block(g.identity(), g.make({{i, 0}}),
                                      g.make({{it->second[static_cast<std::size_t>(i - 1)], 0}})));
  } else {
    int m = n / 2;
    int r = m % 4;
    int eps = r + (r % 2 == 0 ? 1 : -1);
    ExtendedSkolemSequence sk = detail::need_skolem(m + eps, 2 * m + 1, "df_lemma_z12n");
    ExtendedLangfordSequence lf =
        detail::need_langford(3 * m - eps - 1, m + eps + 1, 2 * m - 2 * eps, "df_lemma_z12n");
    for (int i = 1; i <= m + eps; ++i)
      fam.blocks.push_back(make_block(
          g.identity(), g.make({{-i, 0}}),
          g.make({{sk.entries[static_cast<std::size_t>(i - 1)] + 4 * m - 1, 0}})));
    for (int i = 1; i <= 3 * m - eps - 1; ++i)
      fam.blocks.push_back(make_block(
          g.identity(), g.make({{-(m + eps + i), 0}}),
          g.make({{lf.entries[static_cast<std::size_t>(i - 1)] + 6 * m + 2 * eps, 0}})));
  }

  auto out = detail::certify(std::move(fam), {{3, 1}, {4, 1}}, {3, 4}, "df_lemma_z12n");
  Subgroup s3 = g.cyclic_subgroup(g.make({{4 * n, 0}}));
  Subgroup s4 = g.cyclic_subgroup(g.make({{3 * n, 0}}));
  for (const Subgroup& s : out.spread.members)
    if (s != (s.size() == 3 ? s3 : s4))
      throw ConstructionError("df_lemma_z12n: unexpected spread member");
  return out;
}

/// Constructor for v = 3 (mod 48), v = 48n+3 with n >= 1: family over
/// Z4 x Z_12n. Odd n uses the direct block lists; even n splices the
/// (Z_12n,{3,4}) family in through the {0} x B embedding.
inline RelativeDifferenceFamily df_v3mod48(long long v) {
  if (v % 48 != 3 || v < 51) throw std::domain_error("df_v3mod48 needs v = 3 (mod 48), v >= 51");
  int n = static_cast<int>((v - 3) / 48);
  GroupSpec g(std::vector<Factor>{{FactorKind::Cyclic, 4}, {FactorKind::Cyclic, 12 * n}});
  auto el = [&](int a, int b) { return g.make({{a, 0}, {b, 0}}); };
  DifferenceFamily fam{g, {}};
  auto add = [&](Element a, Element b, Element c) {
    fam.blocks.push_back(make_block(std::move(a), std::move(b), std::move(c)));
  };

  if (n % 2 == 1) {
    int t = (n - 1) / 2;
    ExtendedSkolemSequence sk = detail::need_skolem(2 * n - 1, 2 * n + 1, "df_v3mod48");
    add(el(0, 0), el(1, 0), el(3, 6 * t + 3));
    add(el(0, 0), el(1, 3 * t + 2), el(1, -9 * t - 5));
    for (int i = 1; i <= 6 * t + 3; ++i) {
      if (i == 3 * t + 2) continue;
      add(el(0, 0), el(1, i), el(3, 12 * t + 7 - i));
    }
    for (int i = 1; i <= 6 * t + 2; ++i) add(el(0, 0), el(1, 6 * t + 3 + i), el(3, 6 * t + 3 - i));
    for (int i = 1; i <= 4 * t + 1; ++i)
      add(el(0, 0), el(0, i), el(0, -sk.entries[static_cast<std::size_t>(i - 1)] - 4 * t - 1));
  } else {
    RelativeDifferenceFamily inner = df_lemma_z12n(n);
    for (const Block& blk : inner.family.blocks)
      add(el(0, blk[0].coords[0].r), el(0, blk[1].coords[0].r), el(0, blk[2].coords[0].r));
    add(el(0, 0), el(1, 0), el(1, 9 * n));
    for (int i = 1; i <= 3 * n; ++i) add(el(0, 0), el(1, i), el(3, 6 * n + 1 - i));
    for (int i = 3 * n + 1; i <= 6 * n - 1; ++i) add(el(0, 0), el(1, i), el(3, 6 * n - i));
  }

  return detail::certify(std::move(fam), {{2, 3}, {3, 1}}, {2, 3}, "df_v3mod48");
}

/// Constructor for v = 19 (mod 48), v = 48n+19 with n >= 0: family over
/// Z4 x Z_{12n+4} relative to a {2^3} spread (no order-3 member).
inline RelativeDifferenceFamily df_v19mod48(long long v) {
  if (v % 48 != 19 || v < 19) throw std::domain_error("df_v19mod48 needs v = 19 (mod 48)");
  int n = static_cast<int>((v - 19) / 48);
  GroupSpec g(std::vector<Factor>{{FactorKind::Cyclic, 4}, {FactorKind::Cyclic, 12 * n + 4}});
  auto el = [&](int a, int b) { return g.make({{a, 0}, {b, 0}}); };
  DifferenceFamily fam{g, {}};
  auto add = [&](Element a, Element b, Element c) {
    fam.blocks.push_back(make_block(std::move(a), std::move(b), std::move(c)));
  };

  add(el(0, 0), el(1, 0), el(1, 3 * n + 1));
  if (n >= 1) {
    ExtendedSkolemSequence sk = detail::need_skolem(2 * n, n + 1, "df_v19mod48");
    for (int i = 1; i <= 2 * n; ++i)
      add(el(0, 0), el(0, i), el(0, -sk.entries[static_cast<std::size_t>(i - 1)] - 2 * n));
  }
  for (int i = 1; i <= 3 * n; ++i) add(el(0, 0), el(1, i), el(3, 6 * n + 2 - i));
  for (int i = 1; i <= 3 * n + 1; ++i) add(el(0, 0), el(1, 6 * n + 3 - i), el(3, i));

  return detail::certify(std::move(fam), {{2, 3}}, {2}, "df_v19mod48");
}

/// The empty family over Z_2^n; every non-zero element is an involution, so
/// the spread consists of all 2^n - 1 order-2 subgroups.
inline RelativeDifferenceFamily df_projective(int n) {
  if (n < 1) throw std::domain_error("df_projective needs n >= 1");
  GroupSpec g(std::vector<Factor>(static_cast<std::size_t>(n), Factor{FactorKind::Cyclic, 2}));
  return detail::certify(DifferenceFamily{g, {}}, {{2, (1 << n) - 1}}, {2}, "df_projective");
}

/// Image of the cyclic family under i -> x^i inside the dihedral group D_2f;
/// the reflections supply the f order-2 spread members.
inline RelativeDifferenceFamily df_dihedral(int f) {
  if (f < 1 || (f % 6 != 1 && f % 6 != 3) || f == 9)
    throw std::domain_error("df_dihedral needs f = 1,3 (mod 6), f != 9");
  GroupSpec g(std::vector<Factor>{{FactorKind::Dihedral, f}});
  RelativeDifferenceFamily base = cyclic_df(f);
  DifferenceFamily fam{g, {}};
  for (const Block& blk : base.family.blocks)
    fam.blocks.push_back(make_block(g.make({{blk[0].coords[0].r, 0}}),
                                    g.make({{blk[1].coords[0].r, 0}}),
                                    g.make({{blk[2].coords[0].r, 0}})));
  std::map<int, int> want{{2, f}};
  if (f % 6 == 3) want[3] = 1;
  return detail::certify(std::move(fam), want, {2, 3}, "df_dihedral");
}

}  // namespace trisys
