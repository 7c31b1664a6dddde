#include "csmcalc/scene.hpp"

#include <algorithm>
#include <functional>

#include "csmcalc/error.hpp"

namespace csmcalc::cfun {

StrataScene::StrataScene(chow::AmbientSpace ambient, std::vector<chow::Multidegree> degrees,
                         std::vector<Stratum> strata, std::optional<poly::Polynomial> polynomial)
    : ambient_(std::move(ambient)),
      degrees_(std::move(degrees)),
      strata_(std::move(strata)),
      polynomial_(std::move(polynomial)) {
  if (strata_.empty()) throw ValidationError("scene needs at least one stratum");
  for (const auto& d : degrees_) {
    if (d.size() != ambient_.num_factors())
      throw ValidationError("multidegree length does not match the ambient factors");
    if (std::all_of(d.begin(), d.end(), [](int a) { return a == 0; }))
      throw ValidationError("zero multidegree");
  }
  for (std::size_t i = 0; i < strata_.size(); ++i) {
    if (!index_.emplace(strata_[i].id, i).second)
      throw ValidationError("duplicate stratum id '" + strata_[i].id + "'");
    if (strata_[i].dim < 0) throw ValidationError("stratum '" + strata_[i].id + "' has negative dim");
    if (strata_[i].csm_class && !(strata_[i].csm_class->ambient() == ambient_))
      throw ValidationError("csm_class of stratum '" + strata_[i].id + "' lives in another ambient");
  }

  const std::size_t n = strata_.size();
  std::vector<std::vector<std::size_t>> parents(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& p : strata_[i].parents) {
      auto it = index_.find(p);
      if (it == index_.end())
        throw ValidationError("stratum '" + strata_[i].id + "' names unknown parent '" + p + "'");
      if (it->second == i) throw ValidationError("stratum '" + p + "' is its own parent");
      if (strata_[it->second].dim <= strata_[i].dim)
        throw ValidationError("parent '" + p + "' must have larger dimension than '" + strata_[i].id + "'");
      parents[i].push_back(it->second);
    }
  }

  // Kahn's algorithm over child -> parent edges, emitting parents first.
  std::vector<std::size_t> pending(n, 0);
  std::vector<std::vector<std::size_t>> children(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p : parents[i]) {
      children[p].push_back(i);
      ++pending[i];
    }
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (pending[i] == 0) ready.push_back(i);
  while (!ready.empty()) {
    std::size_t v = ready.front();
    ready.erase(ready.begin());
    top_down_.push_back(v);
    for (std::size_t c : children[v])
      if (--pending[c] == 0) ready.push_back(c);
  }
  if (top_down_.size() != n) throw ValidationError("stratum parent relation has a cycle");

  below_.assign(n, std::vector<bool>(n, false));
  for (auto it = top_down_.rbegin(); it != top_down_.rend(); ++it) {
    std::size_t v = *it;
    for (std::size_t c : children[v]) {
      below_[v][c] = true;
      for (std::size_t k = 0; k < n; ++k)
        if (below_[c][k]) below_[v][k] = true;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t sum = 0;
    bool known = true;
    for (std::size_t k : closure(i)) {
      if (!strata_[k].chi_c) {
        known = false;
        break;
      }
      sum += *strata_[k].chi_c;
    }
    auto& s = strata_[i];
    if (known) {
      if (s.closure_chi && *s.closure_chi != sum)
        throw ValidationError("stratum '" + s.id + "': closure_chi " + std::to_string(*s.closure_chi) +
                              " differs from the sum of chi_c over its closure (" + std::to_string(sum) + ")");
      s.closure_chi = sum;
    }
  }
}

std::size_t StrataScene::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw ValidationError("unknown stratum '" + id + "'");
  return it->second;
}

std::vector<std::size_t> StrataScene::closure(std::size_t i) const {
  std::vector<std::size_t> out{i};
  for (std::size_t k = 0; k < strata_.size(); ++k)
    if (below_[i][k]) out.push_back(k);
  return out;
}

bool StrataScene::has_chi_data() const {
  return std::all_of(strata_.begin(), strata_.end(), [](const Stratum& s) { return s.chi_c.has_value(); });
}

ScenePtr make_scene(chow::AmbientSpace ambient, std::vector<chow::Multidegree> degrees,
                    std::vector<Stratum> strata, std::optional<poly::Polynomial> polynomial) {
  return std::make_shared<const StrataScene>(std::move(ambient), std::move(degrees), std::move(strata),
                                             std::move(polynomial));
}

ScenePtr point_scene() {
  Stratum pt{.id = "pt", .dim = 0, .chi_c = 1, .closure_chi = 1, .csm_class = std::nullopt, .parents = {}};
  return make_scene(chow::AmbientSpace({0}), {}, {pt});
}

ScenePtr smooth_scene(const chow::AmbientSpace& ambient, const std::vector<chow::Multidegree>& degrees) {
  Stratum x;
  x.id = "X";
  x.dim = ambient.dim() - static_cast<int>(degrees.size());
  if (x.dim < 0) throw ValidationError("more equations than ambient dimensions");
  return make_scene(ambient, degrees, {x});
}

std::optional<chow::ChowClass> closure_csm(const StrataScene& scene, std::size_t i) {
  const Stratum& s = scene.stratum(i);
  if (s.csm_class) return s.csm_class;
  if (s.dim == 0) return chow::ChowClass::point(scene.ambient()) * chow::Integer(s.closure_chi.value_or(1));
  return std::nullopt;
}

ScenePtr product_with_projective(const ScenePtr& scene, int m) {
  if (m < 0) throw ValidationError("projective factor dimension must be >= 0");
  const std::size_t position = scene->ambient().num_factors();
  chow::AmbientSpace ambient = scene->ambient().with_factor(position, m);
  std::vector<chow::Multidegree> degrees = scene->degrees();
  for (auto& d : degrees) d.push_back(0);
  const chow::BundleClass fiber_tangent = chow::factor_tangent_class(ambient, position);

  std::vector<Stratum> strata;
  for (std::size_t i = 0; i < scene->size(); ++i) {
    const Stratum& s = scene->stratum(i);
    Stratum p;
    p.id = s.id + "xP" + std::to_string(m);
    p.dim = s.dim + m;
    if (s.chi_c) p.chi_c = *s.chi_c * (m + 1);
    if (s.closure_chi) p.closure_chi = *s.closure_chi * (m + 1);
    if (auto c = closure_csm(*scene, i))
      p.csm_class = fiber_tangent.value() * chow::pullback_projection(*c, position, m);
    for (const auto& parent : s.parents) p.parents.push_back(parent + "xP" + std::to_string(m));
    strata.push_back(std::move(p));
  }
  return make_scene(std::move(ambient), std::move(degrees), std::move(strata));
}

}  // namespace csmcalc::cfun
