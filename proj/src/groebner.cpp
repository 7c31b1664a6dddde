#include "csmcalc/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "csmcalc/error.hpp"

namespace csmcalc::poly {

int compare_monomials(const Exponent& a, const Exponent& b, MonomialOrder order) {
  const std::size_t n = a.size();
  auto grevlex_range = [&](std::size_t from) {
    unsigned da = 0, db = 0;
    for (std::size_t i = from; i < n; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = n; i-- > from;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  };
  switch (order) {
    case MonomialOrder::Lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    case MonomialOrder::GrevLex:
      return grevlex_range(0);
    case MonomialOrder::EliminateFirst:
      if (n > 0 && a[0] != b[0]) return a[0] > b[0] ? 1 : -1;
      return grevlex_range(n > 0 ? 1 : 0);
  }
  return 0;
}

namespace {

struct Term {
  Exponent exp;
  Rational coef;
};

// Terms sorted by strictly descending monomial.
using Terms = std::vector<Term>;

Terms to_terms(const Polynomial& p, MonomialOrder order) {
  Terms t;
  t.reserve(p.terms().size());
  for (const auto& [e, c] : p.terms()) t.push_back({e, c});
  std::sort(t.begin(), t.end(), [order](const Term& a, const Term& b) {
    return compare_monomials(a.exp, b.exp, order) > 0;
  });
  return t;
}

Polynomial from_terms(const std::vector<std::string>& vars, const Terms& t) {
  std::map<Exponent, Rational> m;
  for (const auto& term : t) m.emplace(term.exp, term.coef);
  return Polynomial(vars, std::move(m));
}

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponent quotient_exp(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool coprime(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

// p - c * x^shift * g, merging two descending term lists.
Terms sub_scaled_shift(const Terms& p, const Rational& c, const Exponent& shift, const Terms& g,
                       MonomialOrder order) {
  Terms out;
  out.reserve(p.size() + g.size());
  std::size_t i = 0, j = 0;
  const std::size_t n = shift.size();
  Exponent e(n);
  while (i < p.size() || j < g.size()) {
    if (j < g.size())
      for (std::size_t k = 0; k < n; ++k) e[k] = g[j].exp[k] + shift[k];
    int cmp = j >= g.size() ? 1 : i >= p.size() ? -1 : compare_monomials(p[i].exp, e, order);
    if (cmp > 0) {
      out.push_back(p[i++]);
    } else if (cmp < 0) {
      out.push_back({e, -c * g[j].coef});
      ++j;
    } else {
      Rational v = p[i].coef - c * g[j].coef;
      if (v != 0) out.push_back({e, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

Terms reduce_full(Terms p, const std::vector<Terms>& divisors, MonomialOrder order) {
  Terms rem;
  while (!p.empty()) {
    const Term& lead = p.front();
    const Terms* hit = nullptr;
    for (const auto& g : divisors) {
      if (!g.empty() && divides(g.front().exp, lead.exp)) {
        hit = &g;
        break;
      }
    }
    if (hit) {
      Rational c = lead.coef / hit->front().coef;
      Exponent shift = quotient_exp(lead.exp, hit->front().exp);
      p = sub_scaled_shift(p, c, shift, *hit, order);
    } else {
      rem.push_back(lead);
      p.erase(p.begin());
    }
  }
  return rem;
}

void make_monic(Terms& t) {
  if (t.empty()) return;
  Rational lc = t.front().coef;
  for (auto& term : t) term.coef /= lc;
}

Terms spoly(const Terms& f, const Terms& g, MonomialOrder order) {
  Exponent l = lcm(f.front().exp, g.front().exp);
  Terms a = sub_scaled_shift({}, Rational(-1) / f.front().coef, quotient_exp(l, f.front().exp), f, order);
  return sub_scaled_shift(a, Rational(1) / g.front().coef, quotient_exp(l, g.front().exp), g, order);
}

std::string fresh_tag(const std::vector<std::string>& vars) {
  std::string tag = "_t";
  while (std::find(vars.begin(), vars.end(), tag) != vars.end()) tag += "_";
  return tag;
}

PolyIdeal as_ideal(const GroebnerBasis& g) {
  if (g.basis().empty()) return PolyIdeal({Polynomial(g.variables())});
  return PolyIdeal(g.basis());
}

}  // namespace

PolyIdeal::PolyIdeal(std::vector<Polynomial> generators) : generators_(std::move(generators)) {
  if (generators_.empty()) throw ValidationError("ideal needs at least one generator");
  for (const auto& g : generators_)
    if (g.variables() != generators_.front().variables())
      throw ValidationError("ideal generators must share a variable list");
}

GroebnerBasis::GroebnerBasis(std::vector<std::string> variables, MonomialOrder order,
                             std::vector<Polynomial> basis)
    : variables_(std::move(variables)), order_(order), basis_(std::move(basis)) {
  for (const auto& b : basis_)
    if (b.variables() != variables_) throw ValidationError("basis variable-list mismatch");
}

bool GroebnerBasis::is_unit_ideal() const {
  return std::any_of(basis_.begin(), basis_.end(),
                     [](const Polynomial& p) { return !p.is_zero() && p.is_constant(); });
}

Polynomial GroebnerBasis::normal_form(const Polynomial& p) const {
  if (p.variables() != variables_) throw ValidationError("variable-list mismatch");
  return divide_remainder(p, basis_, order_);
}

std::vector<Exponent> GroebnerBasis::leading_monomials() const {
  std::vector<Exponent> out;
  for (const auto& b : basis_) out.push_back(leading_monomial(b, order_));
  return out;
}

Exponent leading_monomial(const Polynomial& p, MonomialOrder order) {
  if (p.is_zero()) throw ValidationError("zero polynomial has no leading monomial");
  const Exponent* best = nullptr;
  for (const auto& [e, c] : p.terms())
    if (!best || compare_monomials(e, *best, order) > 0) best = &e;
  return *best;
}

Rational leading_coefficient(const Polynomial& p, MonomialOrder order) {
  return p.coefficient(leading_monomial(p, order));
}

Polynomial divide_remainder(const Polynomial& p, const std::vector<Polynomial>& divisors,
                            MonomialOrder order) {
  std::vector<Terms> ds;
  for (const auto& d : divisors) {
    if (d.variables() != p.variables()) throw ValidationError("variable-list mismatch");
    ds.push_back(to_terms(d, order));
  }
  return from_terms(p.variables(), reduce_full(to_terms(p, order), ds, order));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order) {
  if (f.is_zero() || g.is_zero()) throw ValidationError("S-polynomial of zero");
  return from_terms(f.variables(), spoly(to_terms(f, order), to_terms(g, order), order));
}

GroebnerBasis groebner(const PolyIdeal& ideal, MonomialOrder order, std::stop_token stop) {
  const auto& vars = ideal.variables();
  std::vector<Terms> g;
  for (const auto& p : ideal.generators()) {
    if (p.is_zero()) continue;
    Terms t = to_terms(p, order);
    make_monic(t);
    g.push_back(std::move(t));
  }

  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.insert({i, j});

  auto in_pairs = [&](std::size_t a, std::size_t b) {
    return pairs.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  if (stop.stop_requested()) throw Cancelled();
  while (!pairs.empty()) {
    if (stop.stop_requested()) throw Cancelled();
    // Normal selection strategy: smallest lcm first.
    auto pick = pairs.begin();
    Exponent best = lcm(g[pick->first].front().exp, g[pick->second].front().exp);
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
      Exponent l = lcm(g[it->first].front().exp, g[it->second].front().exp);
      if (compare_monomials(l, best, order) < 0) {
        best = std::move(l);
        pick = it;
      }
    }
    auto [i, j] = *pick;
    pairs.erase(pick);

    const Exponent& li = g[i].front().exp;
    const Exponent& lj = g[j].front().exp;
    if (coprime(li, lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (divides(g[k].front().exp, best) && !in_pairs(i, k) && !in_pairs(j, k)) chain = true;
    }
    if (chain) continue;

    Terms r = reduce_full(spoly(g[i], g[j], order), g, order);
    if (r.empty()) continue;
    make_monic(r);
    const std::size_t k = g.size();
    g.push_back(std::move(r));
    for (std::size_t a = 0; a < k; ++a) pairs.insert({a, k});
  }

  // Minimalize, then interreduce.
  std::vector<Terms> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Exponent& a = g[j].front().exp;
      const Exponent& b = g[i].front().exp;
      if (divides(a, b) && (a != b || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Terms> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Terms> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Terms tail(minimal[i].begin() + 1, minimal[i].end());
    Terms r = reduce_full(std::move(tail), others, order);
    r.insert(r.begin(), minimal[i].front());
    make_monic(r);
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(), [order](const Terms& a, const Terms& b) {
    return compare_monomials(a.front().exp, b.front().exp, order) < 0;
  });

  std::vector<Polynomial> basis;
  for (const auto& t : reduced) basis.push_back(from_terms(vars, t));
  return GroebnerBasis(vars, order, std::move(basis));
}

std::optional<std::size_t> quotient_dim(const GroebnerBasis& g) {
  const std::size_t n = g.variables().size();
  auto lms = g.leading_monomials();
  if (lms.empty()) {
    if (n == 0) return 1;
    return std::nullopt;
  }
  for (const auto& e : lms)
    if (std::all_of(e.begin(), e.end(), [](unsigned a) { return a == 0; })) return 0;

  Exponent bound(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& e : lms) {
      bool pure = true;
      for (std::size_t k = 0; k < n; ++k)
        if (k != i && e[k] != 0) pure = false;
      if (pure && e[i] > 0 && (bound[i] == 0 || e[i] < bound[i])) bound[i] = e[i];
    }
    if (bound[i] == 0) return std::nullopt;
  }

  std::size_t count = 0;
  Exponent cur(n, 0);
  while (true) {
    bool standard = std::none_of(lms.begin(), lms.end(), [&](const Exponent& e) { return divides(e, cur); });
    if (standard) ++count;
    std::size_t k = 0;
    while (k < n) {
      if (++cur[k] < bound[k]) break;
      cur[k] = 0;
      ++k;
    }
    if (k == n) break;
  }
  return count;
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& divisor) {
  if (divisor.is_zero()) throw MathError("division by the zero polynomial");
  if (p.variables() != divisor.variables()) throw ValidationError("variable-list mismatch");
  constexpr auto order = MonomialOrder::GrevLex;
  Terms rest = to_terms(p, order);
  Terms d = to_terms(divisor, order);
  Terms q;
  while (!rest.empty()) {
    if (!divides(d.front().exp, rest.front().exp)) throw MathError("polynomial division is not exact");
    Rational c = rest.front().coef / d.front().coef;
    Exponent shift = quotient_exp(rest.front().exp, d.front().exp);
    q.push_back({shift, c});
    rest = sub_scaled_shift(rest, c, shift, d, order);
  }
  return from_terms(p.variables(), q);
}

PolyIdeal ideal_quotient(const PolyIdeal& ideal, const Polynomial& f, std::stop_token stop) {
  const auto& vars = ideal.variables();
  if (f.variables() != vars) throw ValidationError("variable-list mismatch");
  if (f.is_zero()) throw ValidationError("quotient by the zero polynomial");
  if (f.is_constant()) return ideal;

  const std::string tag = fresh_tag(vars);
  std::vector<Polynomial> gens;
  Polynomial f_ext = f.with_variables_inserted(0, {tag});
  const auto& ext_vars = f_ext.variables();
  Polynomial t = Polynomial::variable(ext_vars, 0);
  for (const auto& g : ideal.generators()) gens.push_back(t * g.with_variables_inserted(0, {tag}));
  gens.push_back((Polynomial::constant(ext_vars, 1) - t) * f_ext);

  GroebnerBasis elim = groebner(PolyIdeal(std::move(gens)), MonomialOrder::EliminateFirst, stop);
  std::vector<Polynomial> out;
  for (const auto& b : elim.basis()) {
    bool has_tag = std::any_of(b.terms().begin(), b.terms().end(),
                               [](const auto& term) { return term.first[0] != 0; });
    if (has_tag) continue;
    out.push_back(exact_divide(b.specialize(0, 0), f));
  }
  if (out.empty()) out.push_back(Polynomial(vars));
  return PolyIdeal(std::move(out));
}

PolyIdeal saturate(const PolyIdeal& ideal, const Polynomial& f, std::stop_token stop) {
  GroebnerBasis current = groebner(ideal, MonomialOrder::GrevLex, stop);
  while (true) {
    GroebnerBasis next = groebner(ideal_quotient(as_ideal(current), f, stop), MonomialOrder::GrevLex, stop);
    if (next == current) return as_ideal(next);
    current = std::move(next);
  }
}

}  // namespace csmcalc::poly
