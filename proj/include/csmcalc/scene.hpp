#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "csmcalc/chow.hpp"
#include "csmcalc/polynomial.hpp"

namespace csmcalc::cfun {

struct Stratum {
  std::string id;
  int dim = 0;
  // Compactly supported Euler characteristic of the locally closed stratum.
  std::optional<std::int64_t> chi_c;
  // Euler characteristic of the closure.
  std::optional<std::int64_t> closure_chi;
  // Pushed-forward CSM class of the closure.
  std::optional<chow::ChowClass> csm_class;
  // Strata whose closures contain this one.
  std::vector<std::string> parents;
};

// Finite closure poset of strata of a subvariety X of a multiprojective
// ambient, cut out by one or more multidegrees.
//
// Validation at construction: ids are unique, parent ids exist, the parent
// relation is acyclic, each parent has larger dimension, and where chi data is
// present closure_chi equals the sum of chi_c over the closure.  A missing
// closure_chi is filled in when chi_c is known on the whole closure.
class StrataScene {
 public:
  StrataScene(chow::AmbientSpace ambient, std::vector<chow::Multidegree> degrees,
              std::vector<Stratum> strata, std::optional<poly::Polynomial> polynomial = std::nullopt);

  const chow::AmbientSpace& ambient() const noexcept { return ambient_; }
  const std::vector<chow::Multidegree>& degrees() const noexcept { return degrees_; }
  const std::vector<Stratum>& strata() const noexcept { return strata_; }
  const std::optional<poly::Polynomial>& polynomial() const noexcept { return polynomial_; }

  std::size_t size() const noexcept { return strata_.size(); }
  const Stratum& stratum(std::size_t i) const { return strata_.at(i); }
  std::size_t index_of(const std::string& id) const;
  bool contains(const std::string& id) const { return index_.count(id) > 0; }

  // True when stratum a lies in the closure of stratum b (a != b).
  bool is_below(std::size_t a, std::size_t b) const { return below_[b][a]; }
  // Indices of the strata making up the closure of i (including i).
  std::vector<std::size_t> closure(std::size_t i) const;
  // Indices ordered so that every stratum precedes the strata below it.
  const std::vector<std::size_t>& top_down() const noexcept { return top_down_; }

  int codim() const { return static_cast<int>(degrees_.size()); }
  bool has_chi_data() const;

 private:
  chow::AmbientSpace ambient_;
  std::vector<chow::Multidegree> degrees_;
  std::vector<Stratum> strata_;
  std::optional<poly::Polynomial> polynomial_;
  std::map<std::string, std::size_t> index_;
  // below_[b][a]: a is in the closure of b, a != b.
  std::vector<std::vector<bool>> below_;
  std::vector<std::size_t> top_down_;
};

using ScenePtr = std::shared_ptr<const StrataScene>;

ScenePtr make_scene(chow::AmbientSpace ambient, std::vector<chow::Multidegree> degrees,
                    std::vector<Stratum> strata, std::optional<poly::Polynomial> polynomial = std::nullopt);

// Single point stratum (chi = 1) in P^0.
ScenePtr point_scene();

// One stratum "X" of the expected dimension, no Euler data.
ScenePtr smooth_scene(const chow::AmbientSpace& ambient, const std::vector<chow::Multidegree>& degrees);

// X x P^m inside ambient x P^m: strata S x P^m with chi scaled by m+1, csm
// classes multiplied by c(T P^m), and multidegrees extended by 0.  Point strata
// without a csm class use their point-class default before the product.
ScenePtr product_with_projective(const ScenePtr& scene, int m);

// csm class of the closure of stratum i: the supplied class, or for a
// zero-dimensional stratum closure_chi (default 1) times the point class.
// nullopt when neither applies.
std::optional<chow::ChowClass> closure_csm(const StrataScene& scene, std::size_t i);

}  // namespace csmcalc::cfun
