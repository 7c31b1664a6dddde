#include "csmcalc/chow.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "csmcalc/error.hpp"

namespace csmcalc::chow {

AmbientSpace::AmbientSpace(std::vector<int> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw ValidationError("ambient space needs at least one factor");
  for (int n : factors_)
    if (n < 0) throw ValidationError("projective factor dimension must be >= 0");
}

int AmbientSpace::dim() const { return std::accumulate(factors_.begin(), factors_.end(), 0); }

AmbientSpace AmbientSpace::with_factor(std::size_t position, int n) const {
  if (position > factors_.size()) throw ValidationError("factor position out of range");
  std::vector<int> f = factors_;
  f.insert(f.begin() + static_cast<std::ptrdiff_t>(position), n);
  return AmbientSpace(std::move(f));
}

AmbientSpace AmbientSpace::without_factor(std::size_t position) const {
  if (position >= factors_.size() || factors_.size() == 1)
    throw ValidationError("cannot remove factor " + std::to_string(position));
  std::vector<int> f = factors_;
  f.erase(f.begin() + static_cast<std::ptrdiff_t>(position));
  return AmbientSpace(std::move(f));
}

ChowClass::ChowClass(AmbientSpace ambient) : ambient_(std::move(ambient)) {}

ChowClass::ChowClass(AmbientSpace ambient, const std::map<Exponent, Integer>& coefficients)
    : ambient_(std::move(ambient)) {
  for (const auto& [e, c] : coefficients) {
    if (e.size() != ambient_.num_factors() ||
        std::any_of(e.begin(), e.end(), [](int a) { return a < 0; }))
      throw ValidationError("malformed exponent in class coefficients");
    if (c != 0 && in_box(e)) coeffs_[e] += c;
  }
  std::erase_if(coeffs_, [](const auto& kv) { return kv.second == 0; });
}

ChowClass ChowClass::one(const AmbientSpace& ambient) { return constant(ambient, 1); }

ChowClass ChowClass::constant(const AmbientSpace& ambient, const Integer& c) {
  return monomial(ambient, Exponent(ambient.num_factors(), 0), c);
}

ChowClass ChowClass::hyperplane(const AmbientSpace& ambient, std::size_t factor) {
  Exponent e(ambient.num_factors(), 0);
  e.at(factor) = 1;
  return monomial(ambient, std::move(e));
}

ChowClass ChowClass::monomial(const AmbientSpace& ambient, Exponent e, const Integer& c) {
  return ChowClass(ambient, {{std::move(e), c}});
}

ChowClass ChowClass::point(const AmbientSpace& ambient) { return monomial(ambient, ambient.factors()); }

Integer ChowClass::coefficient(const Exponent& e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

bool ChowClass::in_box(const Exponent& e) const {
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > ambient_.factor_dim(i)) return false;
  return true;
}

void ChowClass::require_same_ambient(const ChowClass& other) const {
  if (!(ambient_ == other.ambient_)) throw ValidationError("ambient mismatch");
}

ChowClass ChowClass::component(int codim) const {
  ChowClass r(ambient_);
  for (const auto& [e, c] : coeffs_)
    if (std::accumulate(e.begin(), e.end(), 0) == codim) r.coeffs_.emplace(e, c);
  return r;
}

ChowClass ChowClass::operator-() const {
  ChowClass r(*this);
  for (auto& [e, c] : r.coeffs_) c = -c;
  return r;
}

ChowClass& ChowClass::operator+=(const ChowClass& other) {
  require_same_ambient(other);
  for (const auto& [e, c] : other.coeffs_) {
    Integer& v = coeffs_[e];
    v += c;
    if (v == 0) coeffs_.erase(e);
  }
  return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& other) { return *this += -other; }

ChowClass& ChowClass::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [e, v] : coeffs_) v *= c;
  return *this;
}

ChowClass& ChowClass::operator*=(const ChowClass& other) {
  require_same_ambient(other);
  std::map<Exponent, Integer> out;
  const std::size_t k = ambient_.num_factors();
  Exponent e(k);
  for (const auto& [ea, ca] : coeffs_) {
    for (const auto& [eb, cb] : other.coeffs_) {
      bool keep = true;
      for (std::size_t i = 0; i < k && keep; ++i) {
        e[i] = ea[i] + eb[i];
        keep = e[i] <= ambient_.factor_dim(i);
      }
      if (keep) out[e] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  coeffs_ = std::move(out);
  return *this;
}

std::string ChowClass::to_string() const {
  if (coeffs_.empty()) return "0";
  const std::size_t k = ambient_.num_factors();
  auto name = [k](std::size_t i) {
    if (k <= 2) return std::string(i == 0 ? "H" : "K");
    return "H" + std::to_string(i + 1);
  };
  std::vector<std::pair<Exponent, Integer>> terms(coeffs_.begin(), coeffs_.end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int da = std::accumulate(a.first.begin(), a.first.end(), 0);
    int db = std::accumulate(b.first.begin(), b.first.end(), 0);
    if (da != db) return da < db;
    return a.first > b.first;
  });

  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    Integer mag = abs(c);
    std::string mono;
    for (std::size_t i = 0; i < k; ++i) {
      if (e[i] == 0) continue;
      mono += name(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      out << mag.get_str();
    else
      out << (mag == 1 ? "" : mag.get_str()) << mono;
  }
  return out.str();
}

BundleClass::BundleClass(ChowClass c) : value_(std::move(c)) {
  if (value_.coefficient(Exponent(value_.ambient().num_factors(), 0)) != 1)
    throw ValidationError("bundle class must have constant coefficient 1");
}

ChowClass unit_inverse(const ChowClass& u) {
  const AmbientSpace& a = u.ambient();
  if (u.coefficient(Exponent(a.num_factors(), 0)) != 1) throw ValidationError("class is not a unit");
  // u = 1 + r with r nilpotent; u^{-1} = sum_k (-r)^k.
  ChowClass minus_r = ChowClass::one(a) - u;
  ChowClass sum = ChowClass::one(a);
  ChowClass power = ChowClass::one(a);
  for (int k = 0; k < a.dim(); ++k) {
    power *= minus_r;
    if (power.is_zero()) break;
    sum += power;
  }
  return sum;
}

BundleClass unit_inverse(const BundleClass& u) { return BundleClass(unit_inverse(u.value())); }

Integer degree(const ChowClass& x) { return x.coefficient(x.ambient().factors()); }

BundleClass factor_tangent_class(const AmbientSpace& ambient, std::size_t factor) {
  ChowClass base = ChowClass::one(ambient) + ChowClass::hyperplane(ambient, factor);
  ChowClass r = ChowClass::one(ambient);
  for (int j = 0; j <= ambient.factor_dim(factor); ++j) r *= base;
  return BundleClass(std::move(r));
}

BundleClass tangent_class(const AmbientSpace& ambient) {
  ChowClass r = ChowClass::one(ambient);
  for (std::size_t i = 0; i < ambient.num_factors(); ++i) r *= factor_tangent_class(ambient, i).value();
  return BundleClass(std::move(r));
}

ChowClass divisor_class(const AmbientSpace& ambient, const Multidegree& d) {
  if (d.size() != ambient.num_factors()) throw ValidationError("multidegree length does not match ambient");
  ChowClass r(ambient);
  for (std::size_t i = 0; i < d.size(); ++i) r += ChowClass::hyperplane(ambient, i) * Integer(d[i]);
  return r;
}

BundleClass line_bundle_class(const AmbientSpace& ambient, const Multidegree& d) {
  return BundleClass(ChowClass::one(ambient) + divisor_class(ambient, d));
}

ChowClass pullback_projection(const ChowClass& x, std::size_t position, int m) {
  AmbientSpace target = x.ambient().with_factor(position, m);
  std::map<Exponent, Integer> out;
  for (const auto& [e, c] : x.coefficients()) {
    Exponent f = e;
    f.insert(f.begin() + static_cast<std::ptrdiff_t>(position), 0);
    out.emplace(std::move(f), c);
  }
  return ChowClass(std::move(target), out);
}

ChowClass pushforward_projection(const ChowClass& x, std::size_t position) {
  AmbientSpace target = x.ambient().without_factor(position);
  const int m = x.ambient().factor_dim(position);
  std::map<Exponent, Integer> out;
  for (const auto& [e, c] : x.coefficients()) {
    if (e[position] != m) continue;
    Exponent f = e;
    f.erase(f.begin() + static_cast<std::ptrdiff_t>(position));
    out.emplace(std::move(f), c);
  }
  return ChowClass(std::move(target), out);
}

ChowClass embed_factors(const ChowClass& x, const AmbientSpace& ambient, std::size_t offset) {
  const auto& sub = x.ambient().factors();
  if (offset + sub.size() > ambient.num_factors() ||
      !std::equal(sub.begin(), sub.end(), ambient.factors().begin() + static_cast<std::ptrdiff_t>(offset)))
    throw ValidationError("sub-ambient does not match the target factors");
  std::map<Exponent, Integer> out;
  for (const auto& [e, c] : x.coefficients()) {
    Exponent f(ambient.num_factors(), 0);
    std::copy(e.begin(), e.end(), f.begin() + static_cast<std::ptrdiff_t>(offset));
    out.emplace(std::move(f), c);
  }
  return ChowClass(ambient, out);
}

namespace {

// Divisor model: k_* is the identity on pushed-forward classes and k^* is
// multiplication by the divisor class.
ChowClass gysin_after_pushforward(const ChowClass& x, const ChowClass& divisor) { return divisor * x; }

ChowClass cap_first_chern(const ChowClass& x, const BundleClass& normal) {
  return normal.value().component(1) * x;
}

}  // namespace

bool self_intersection_check(const AmbientSpace& ambient, const Multidegree& d) {
  ChowClass divisor = divisor_class(ambient, d);
  BundleClass normal = line_bundle_class(ambient, d);
  Exponent e(ambient.num_factors(), 0);
  while (true) {
    ChowClass basis = ChowClass::monomial(ambient, e);
    if (!(gysin_after_pushforward(basis, divisor) == cap_first_chern(basis, normal))) return false;
    std::size_t i = 0;
    while (i < e.size()) {
      if (++e[i] <= ambient.factor_dim(i)) break;
      e[i] = 0;
      ++i;
    }
    if (i == e.size()) break;
  }
  return true;
}

}  // namespace csmcalc::chow
