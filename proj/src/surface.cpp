#include "census/surface.hpp"

#include <algorithm>

namespace census {

void SurfaceSignature::normalize() {
  std::sort(components.begin(), components.end(),
            [](const SurfaceComponent& a, const SurfaceComponent& b) {
              if (a.genus != b.genus) return a.genus > b.genus;
              return a.orientable > b.orientable;
            });
}

std::vector<int> SurfaceSignature::genera() const {
  std::vector<int> g;
  g.reserve(components.size());
  for (const auto& c : components) g.push_back(c.genus);
  return g;
}

SurfaceSignature make_signature(std::vector<int> genera) {
  SurfaceSignature s;
  s.components.reserve(genera.size());
  for (int g : genera) s.components.push_back({g, true});
  s.normalize();
  return s;
}

SurfaceSignature cap_spheres(const SurfaceSignature& s) {
  SurfaceSignature out;
  for (const auto& c : s.components)
    if (!(c.orientable && c.genus == 0)) out.components.push_back(c);
  out.normalize();
  return out;
}

std::string signature_name(const SurfaceSignature& s) {
  if (s.components.empty()) return "empty";
  std::string name;
  for (const auto& c : s.components) {
    if (!name.empty()) name += '+';
    if (!c.orientable)
      name += 'N' + std::to_string(c.genus);
    else if (c.genus == 0)
      name += 'S';
    else if (c.genus == 1)
      name += 'T';
    else
      name += "Sigma" + std::to_string(c.genus);
  }
  return name;
}

bool signature_less(const SurfaceSignature& a, const SurfaceSignature& b) {
  return a.genera() < b.genera();
}

}  // namespace census
