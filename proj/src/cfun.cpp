#include "csmcalc/cfun.hpp"

#include <algorithm>

#include "csmcalc/error.hpp"

namespace csmcalc::cfun {

ConstructibleFunction::ConstructibleFunction(ScenePtr scene, Representation rep, std::vector<std::int64_t> values)
    : scene_(std::move(scene)), rep_(rep), values_(std::move(values)) {
  if (!scene_) throw ValidationError("constructible function needs a scene");
  if (values_.size() != scene_->size()) throw ValidationError("one value per stratum required");
}

ConstructibleFunction::ConstructibleFunction(ScenePtr scene, Representation rep,
                                             const std::map<std::string, std::int64_t>& values)
    : scene_(std::move(scene)), rep_(rep) {
  if (!scene_) throw ValidationError("constructible function needs a scene");
  values_.assign(scene_->size(), 0);
  for (const auto& [id, v] : values) values_[scene_->index_of(id)] = v;
}

ConstructibleFunction ConstructibleFunction::zero(ScenePtr scene, Representation rep) {
  const std::size_t n = scene->size();
  return ConstructibleFunction(std::move(scene), rep, std::vector<std::int64_t>(n, 0));
}

ConstructibleFunction ConstructibleFunction::one(ScenePtr scene) {
  const std::size_t n = scene->size();
  return ConstructibleFunction(std::move(scene), Representation::Stratumwise, std::vector<std::int64_t>(n, 1));
}

ConstructibleFunction ConstructibleFunction::closure_indicator(ScenePtr scene, const std::string& id) {
  std::vector<std::int64_t> v(scene->size(), 0);
  v[scene->index_of(id)] = 1;
  return ConstructibleFunction(std::move(scene), Representation::Indicator, std::move(v));
}

std::int64_t ConstructibleFunction::value(const std::string& id) const { return value(scene_->index_of(id)); }

std::int64_t ConstructibleFunction::value(std::size_t index) const {
  if (rep_ == Representation::Stratumwise) return values_.at(index);
  std::int64_t sum = values_.at(index);
  for (std::size_t t = 0; t < values_.size(); ++t)
    if (scene_->is_below(index, t)) sum += values_[t];
  return sum;
}

std::int64_t ConstructibleFunction::indicator_coefficient(std::size_t index) const {
  if (rep_ == Representation::Indicator) return values_.at(index);
  return to_indicator().values_.at(index);
}

ConstructibleFunction ConstructibleFunction::to_stratumwise() const {
  if (rep_ == Representation::Stratumwise) return *this;
  std::vector<std::int64_t> v(values_.size());
  for (std::size_t s = 0; s < v.size(); ++s) v[s] = value(s);
  return ConstructibleFunction(scene_, Representation::Stratumwise, std::move(v));
}

ConstructibleFunction ConstructibleFunction::to_indicator() const {
  if (rep_ == Representation::Indicator) return *this;
  // Moebius inversion on the closure poset, from the top strata down.
  std::vector<std::int64_t> n(values_.size(), 0);
  for (std::size_t t : scene_->top_down()) {
    std::int64_t above = 0;
    for (std::size_t u = 0; u < n.size(); ++u)
      if (scene_->is_below(t, u)) above += n[u];
    n[t] = values_[t] - above;
  }
  return ConstructibleFunction(scene_, Representation::Indicator, std::move(n));
}

ConstructibleFunction ConstructibleFunction::converted() const {
  return rep_ == Representation::Stratumwise ? to_indicator() : to_stratumwise();
}

bool ConstructibleFunction::is_zero() const {
  // Both representations vanish together.
  return std::all_of(values_.begin(), values_.end(), [](std::int64_t v) { return v == 0; });
}

void ConstructibleFunction::require_same_scene(const ConstructibleFunction& other) const {
  if (scene_ != other.scene_) throw ValidationError("constructible functions live on different scenes");
}

ConstructibleFunction ConstructibleFunction::operator-() const { return -1 * *this; }

ConstructibleFunction operator+(const ConstructibleFunction& a, const ConstructibleFunction& b) {
  a.require_same_scene(b);
  ConstructibleFunction bb = b.rep_ == a.rep_ ? b : b.converted();
  std::vector<std::int64_t> v(a.values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.values_[i] + bb.values_[i];
  return ConstructibleFunction(a.scene_, a.rep_, std::move(v));
}

ConstructibleFunction operator-(const ConstructibleFunction& a, const ConstructibleFunction& b) {
  return a + (-1 * b);
}

ConstructibleFunction operator*(std::int64_t c, const ConstructibleFunction& a) {
  std::vector<std::int64_t> v = a.values_;
  for (auto& x : v) x *= c;
  return ConstructibleFunction(a.scene_, a.rep_, std::move(v));
}

ConstructibleFunction pointwise_product(const ConstructibleFunction& a, const ConstructibleFunction& b) {
  a.require_same_scene(b);
  std::vector<std::int64_t> v(a.values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.value(i) * b.value(i);
  return ConstructibleFunction(a.scene_, Representation::Stratumwise, std::move(v));
}

bool operator==(const ConstructibleFunction& a, const ConstructibleFunction& b) {
  if (a.scene_ != b.scene_) return false;
  return a.to_stratumwise().values_ == b.to_stratumwise().values_;
}

std::int64_t euler(const ConstructibleFunction& alpha) {
  const auto& scene = *alpha.scene();
  std::int64_t total = 0;
  for (std::size_t s = 0; s < scene.size(); ++s) {
    std::int64_t v = alpha.value(s);
    if (v == 0) continue;
    const auto& chi = scene.stratum(s).chi_c;
    if (!chi) throw ValidationError("stratum '" + scene.stratum(s).id + "' has no chi_c");
    total += v * *chi;
  }
  return total;
}

SceneMap::SceneMap(ScenePtr source, ScenePtr target, std::vector<std::size_t> image,
                   std::vector<std::int64_t> fiber_chi_c)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)), fiber_(std::move(fiber_chi_c)) {
  if (!source_ || !target_) throw ValidationError("scene map needs source and target");
  if (image_.size() != source_->size() || fiber_.size() != source_->size())
    throw ValidationError("scene map needs image and fiber data for every source stratum");
  for (std::size_t t : image_)
    if (t >= target_->size()) throw ValidationError("scene map image out of range");
}

SceneMap SceneMap::identity(const ScenePtr& scene) {
  std::vector<std::size_t> image(scene->size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = i;
  return SceneMap(scene, scene, std::move(image), std::vector<std::int64_t>(scene->size(), 1));
}

SceneMap SceneMap::to_point(const ScenePtr& source) {
  std::vector<std::int64_t> fiber;
  for (const auto& s : source->strata()) {
    if (!s.chi_c) throw ValidationError("map to a point needs chi_c on stratum '" + s.id + "'");
    fiber.push_back(*s.chi_c);
  }
  return SceneMap(source, point_scene(), std::vector<std::size_t>(source->size(), 0), std::move(fiber));
}

SceneMap SceneMap::projection(const ScenePtr& product, const ScenePtr& base, int m) {
  if (product->size() != base->size() || product->ambient().num_factors() != base->ambient().num_factors() + 1)
    throw ValidationError("incompatible scenes for a projection");
  std::vector<std::size_t> image(base->size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = i;
  return SceneMap(product, base, std::move(image), std::vector<std::int64_t>(base->size(), m + 1));
}

SceneMap compose(const SceneMap& g, const SceneMap& f) {
  if (f.target() != g.source()) throw ValidationError("incompatible scenes for composition");
  std::vector<std::size_t> image(f.source()->size());
  std::vector<std::int64_t> fiber(image.size());
  for (std::size_t s = 0; s < image.size(); ++s) {
    std::size_t mid = f.image(s);
    image[s] = g.image(mid);
    fiber[s] = f.fiber_chi_c(s) * g.fiber_chi_c(mid);
  }
  return SceneMap(f.source(), g.target(), std::move(image), std::move(fiber));
}

ConstructibleFunction pushforward(const ConstructibleFunction& alpha, const SceneMap& f) {
  if (alpha.scene() != f.source()) throw ValidationError("incompatible scenes for pushforward");
  std::vector<std::int64_t> out(f.target()->size(), 0);
  for (std::size_t s = 0; s < f.source()->size(); ++s) out[f.image(s)] += alpha.value(s) * f.fiber_chi_c(s);
  return ConstructibleFunction(f.target(), Representation::Stratumwise, std::move(out));
}

ConstructibleFunction pullback(const ConstructibleFunction& alpha, const SceneMap& f) {
  if (alpha.scene() != f.target()) throw ValidationError("incompatible scenes for pullback");
  std::vector<std::int64_t> out(f.source()->size());
  for (std::size_t s = 0; s < out.size(); ++s) out[s] = alpha.value(f.image(s));
  return ConstructibleFunction(f.source(), Representation::Stratumwise, std::move(out));
}

IsolatedMu mu_isolated(const poly::Polynomial& F, const chow::AmbientSpace& ambient, std::size_t chart,
                       std::stop_token stop) {
  if (ambient.num_factors() != 1) throw ValidationError("isolated-singularity mu needs a single P^n ambient");
  const int n = ambient.factor_dim(0);
  if (F.num_variables() != static_cast<std::size_t>(n + 1))
    throw ValidationError("polynomial must have n+1 homogeneous variables");
  poly::MilnorResult milnor = poly::total_milnor_number(F, chart, stop);

  Stratum smooth;
  smooth.id = "smooth";
  smooth.dim = n - 1;
  std::vector<Stratum> strata{smooth};
  if (milnor.total_milnor > 0) {
    Stratum sing;
    sing.id = "sing";
    sing.dim = 0;
    sing.parents = {"smooth"};
    strata.push_back(sing);
  }
  ScenePtr scene = make_scene(ambient, {{F.total_degree()}}, std::move(strata), F);

  std::vector<std::int64_t> values(scene->size(), 0);
  if (milnor.total_milnor > 0) {
    const std::int64_t sign = (n - 1) % 2 == 0 ? 1 : -1;
    values[1] = sign * static_cast<std::int64_t>(milnor.total_milnor);
  }
  return {ConstructibleFunction(scene, Representation::Stratumwise, std::move(values)), milnor};
}

MonodromicCF::MonodromicCF(ConstructibleFunction pi_part, ConstructibleFunction zero_part)
    : pi_part_(std::move(pi_part)), zero_part_(std::move(zero_part)) {
  if (pi_part_.scene() != zero_part_.scene()) throw ValidationError("monodromic parts live on different scenes");
}

MonodromicCF operator+(const MonodromicCF& a, const MonodromicCF& b) {
  return MonodromicCF(a.pi_part_ + b.pi_part_, a.zero_part_ + b.zero_part_);
}

MonodromicCF operator*(std::int64_t c, const MonodromicCF& a) {
  return MonodromicCF(c * a.pi_part_, c * a.zero_part_);
}

MonodromicCF phi_codim1(const ConstructibleFunction& mu) { return MonodromicCF(mu, -mu); }

ConstructibleFunction restrict_to_vertex(const MonodromicCF& phi) {
  return phi.pi_part().to_stratumwise() + phi.zero_part();
}

}  // namespace csmcalc::cfun
