#pragma once

#include <string>
#include <vector>

namespace census {

struct SurfaceComponent {
  int genus = 0;
  bool orientable = true;
  auto operator<=>(const SurfaceComponent&) const = default;
};

// Multiset of closed-surface components, kept sorted by descending genus.
struct SurfaceSignature {
  std::vector<SurfaceComponent> components;

  void normalize();
  std::vector<int> genera() const;
  bool empty() const { return components.empty(); }
  bool operator==(const SurfaceSignature&) const = default;
};

SurfaceSignature make_signature(std::vector<int> genera);

// Removes every genus-0 component; an empty result means the capped space
// is closed.
SurfaceSignature cap_spheres(const SurfaceSignature& s);

// "S", "T", "Sigma2+T", ..., "empty" for no components.
std::string signature_name(const SurfaceSignature& s);

// Canonical row order for reports: lexicographic on the descending genus
// vectors, so spheres-only rows come first and higher genus last.
bool signature_less(const SurfaceSignature& a, const SurfaceSignature& b);

}  // namespace census
