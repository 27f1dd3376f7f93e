#include "census/polygon.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "census/common.hpp"

namespace census {

namespace {

void check_k(int k) {
  if (k < 1) throw std::invalid_argument("polygon requires k >= 1");
}

}  // namespace

EdgePairing EdgePairing::from_pairs(int k, const std::vector<std::pair<int, int>>& pairs) {
  check_k(k);
  EdgePairing p;
  p.k = k;
  p.partner.assign(2 * k, -1);
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= 2 * k || b >= 2 * k || a == b)
      throw std::invalid_argument("bad edge pair");
    if (p.partner[a] != -1 || p.partner[b] != -1)
      throw std::invalid_argument("edge label used twice");
    p.partner[a] = b;
    p.partner[b] = a;
  }
  if (!p.valid()) throw std::invalid_argument("not a perfect matching of the edges");
  return p;
}

bool EdgePairing::valid() const {
  if (k < 1 || partner.size() != static_cast<std::size_t>(2 * k)) return false;
  for (int i = 0; i < 2 * k; ++i) {
    const int j = partner[i];
    if (j < 0 || j >= 2 * k || j == i || partner[j] != i) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> EdgePairing::sorted_pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(k);
  for (int i = 0; i < 2 * k; ++i)
    if (i < partner[i]) out.emplace_back(i, partner[i]);
  std::sort(out.begin(), out.end());
  return out;
}

bool pairing_less(const EdgePairing& a, const EdgePairing& b) {
  return a.sorted_pairs() < b.sorted_pairs();
}

std::uint64_t polygon_pairing_count(int k) {
  check_k(k);
  std::uint64_t n = 1;
  for (int i = 3; i <= 2 * k - 1; i += 2)
    n = static_cast<std::uint64_t>(checked_mul(static_cast<std::int64_t>(n), i));
  return n;
}

std::vector<EdgePairing> enumerate_polygon_pairings(int k) {
  check_k(k);
  std::vector<EdgePairing> out;
  std::vector<int> partner(2 * k, -1);

  // Pair the first free label with every larger free label, recursively.
  auto rec = [&](auto&& self, int used) -> void {
    if (used == 2 * k) {
      EdgePairing p;
      p.k = k;
      p.partner = partner;
      out.push_back(std::move(p));
      return;
    }
    int a = 0;
    while (partner[a] != -1) ++a;
    for (int b = a + 1; b < 2 * k; ++b) {
      if (partner[b] != -1) continue;
      partner[a] = b;
      partner[b] = a;
      self(self, used + 2);
      partner[a] = -1;
      partner[b] = -1;
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<DihedralElement> dihedral_group(int k) {
  check_k(k);
  const int n = 2 * k;
  std::vector<DihedralElement> group;
  group.reserve(4 * k);
  for (int s = 0; s < n; ++s) {
    DihedralElement g{DihedralKind::rotation, s, std::vector<int>(n)};
    for (int i = 0; i < n; ++i) g.edge_map[i] = (i + s) % n;
    group.push_back(std::move(g));
  }
  for (int c = 0; c < n; ++c) {
    DihedralElement g{DihedralKind::reflection, c, std::vector<int>(n)};
    for (int i = 0; i < n; ++i) g.edge_map[i] = ((c - i) % n + n) % n;
    group.push_back(std::move(g));
  }
  return group;
}

EdgePairing apply(const DihedralElement& g, const EdgePairing& p) {
  EdgePairing q;
  q.k = p.k;
  q.partner.assign(p.partner.size(), -1);
  for (int i = 0; i < 2 * p.k; ++i) q.partner[g.edge_map[i]] = g.edge_map[p.partner[i]];
  return q;
}

EdgePairing canonical_pairing(const EdgePairing& p) {
  if (!p.valid()) throw std::invalid_argument("invalid pairing");
  EdgePairing best = p;
  auto best_enc = best.sorted_pairs();
  for (const auto& g : dihedral_group(p.k)) {
    EdgePairing q = apply(g, p);
    auto enc = q.sorted_pairs();
    if (enc < best_enc) {
      best = std::move(q);
      best_enc = std::move(enc);
    }
  }
  return best;
}

SurfaceSignature polygon_surface(const EdgePairing& p) {
  if (!p.valid()) throw std::invalid_argument("invalid pairing");
  const int n = 2 * p.k;
  // Vertex i sits between edges i-1 and i; gluing edge a to edge b reversing
  // orientation identifies head with tail: a ~ b+1 and a+1 ~ b.
  UnionFind uf(n);
  for (int a = 0; a < n; ++a) {
    const int b = p.partner[a];
    if (a > b) continue;
    uf.unite(a, (b + 1) % n);
    uf.unite((a + 1) % n, b);
  }
  std::set<int> roots;
  for (int v = 0; v < n; ++v) roots.insert(uf.find(v));
  const int chi = static_cast<int>(roots.size()) - p.k + 1;
  require(chi <= 2 && (2 - chi) % 2 == 0, "polygon surface has invalid Euler characteristic");
  const int genus = (2 - chi) / 2;
  require(genus <= p.k / 2, "polygon surface genus above k/2");
  SurfaceSignature s;
  s.components.push_back({genus, true});
  return s;
}

PolygonCensus polygon_census(int k) {
  check_k(k);
  PolygonCensus census;
  census.gluings = polygon_pairing_count(k);

  const auto group = dihedral_group(k);
  const auto all = enumerate_polygon_pairings(k);
  require(all.size() == census.gluings, "enumeration size differs from double factorial");

  std::set<int> genera;
  for (const auto& p : all) {
    // p represents its class exactly when it is the least element of its
    // own orbit; this needs no global storage.
    const auto enc = p.sorted_pairs();
    bool least = true;
    for (const auto& g : group) {
      if (apply(g, p).sorted_pairs() < enc) {
        least = false;
        break;
      }
    }
    if (!least) continue;
    const int genus = polygon_surface(p).components.front().genus;
    genera.insert(genus);
    census.class_reps.push_back(p);
    census.class_genus.push_back(genus);
  }
  census.classes = census.class_reps.size();
  census.surfaces = genera.size();
  return census;
}

}  // namespace census
