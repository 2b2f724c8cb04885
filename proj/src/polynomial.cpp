#include "cmbal/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "cmbal/errors.hpp"

namespace cmbal {

Monomial::Monomial(std::vector<std::uint8_t> exponents) : exponents_(std::move(exponents)) {}

Monomial Monomial::variable(std::size_t num_variables, std::size_t v) {
  Monomial m(num_variables);
  m.exponents_[v] = 1;
  return m;
}

Monomial Monomial::squarefree(std::size_t num_variables, VertexSet support) {
  Monomial m(num_variables);
  support.for_each([&](int v) { m.exponents_[static_cast<std::size_t>(v)] = 1; });
  return m;
}

int Monomial::degree() const { return std::accumulate(exponents_.begin(), exponents_.end(), 0); }

bool Monomial::is_squarefree() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](std::uint8_t e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

VertexSet Monomial::support() const {
  VertexSet s;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > 0) s.insert(static_cast<int>(i));
  }
  return s;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < a.exponents_.size(); ++i) {
    const int e = a.exponents_[i] + b.exponents_[i];
    if (e > 255) throw InputError("monomial exponent exceeds 255");
    out.exponents_[i] = static_cast<std::uint8_t>(e);
  }
  return out;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < a.exponents_.size(); ++i) out.exponents_[i] -= b.exponents_[i];
  return out;
}

TermOrder::TermOrder(std::vector<std::size_t> sequence)
    : sequence_(std::move(sequence)), position_(sequence_.size(), sequence_.size()) {
  for (std::size_t k = 0; k < sequence_.size(); ++k) {
    if (sequence_[k] >= sequence_.size() || position_[sequence_[k]] != sequence_.size()) {
      throw InputError("term order is not a permutation of the variables");
    }
    position_[sequence_[k]] = k;
  }
}

TermOrder TermOrder::natural(std::size_t num_variables) {
  std::vector<std::size_t> seq(num_variables);
  std::iota(seq.begin(), seq.end(), 0);
  return TermOrder(std::move(seq));
}

std::vector<std::size_t> TermOrder::last(std::size_t d) const {
  if (d > sequence_.size()) throw InputError("more parameters than variables");
  return {sequence_.end() - static_cast<long>(d), sequence_.end()};
}

std::strong_ordering revlex_compare(const Monomial& a, const Monomial& b, const TermOrder& order) {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da <=> db;
  for (std::size_t pos = order.num_variables(); pos-- > 0;) {
    const std::size_t v = order.variable_at(pos);
    if (a.exponent(v) != b.exponent(v)) {
      return a.exponent(v) > b.exponent(v) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

Monomial support_part(const Monomial& m, const std::vector<bool>& subset) {
  std::vector<std::uint8_t> e = m.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!subset[i]) e[i] = 0;
  }
  return Monomial(std::move(e));
}

namespace {

void enumerate(std::size_t var, int remaining, const std::vector<bool>& allowed, std::vector<std::uint8_t>& current,
               std::vector<Monomial>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  if (var == current.size()) return;
  if (allowed[var]) {
    for (int e = remaining; e >= 1; --e) {
      current[var] = static_cast<std::uint8_t>(e);
      enumerate(var + 1, remaining - e, allowed, current, out);
    }
    current[var] = 0;
  }
  enumerate(var + 1, remaining, allowed, current, out);
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (std::uint8_t e : m.exponents()) h = (h ^ e) * 1099511628211ULL;
    return h;
  }
};

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t num_variables, const std::vector<bool>& allowed, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  std::vector<std::uint8_t> current(num_variables, 0);
  enumerate(0, degree, allowed, current, out);
  return out;
}

Polynomial::Polynomial(const Monomial& m, Rational coefficient) {
  if (coefficient != 0) terms_.emplace(m, std::move(coefficient));
}

int Polynomial::homogeneous_degree() const {
  if (terms_.empty()) throw InputError("the zero polynomial has no degree");
  const int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) {
    if (m.degree() != d) throw InputError("polynomial is not homogeneous");
  }
  return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Monomial Polynomial::leading_monomial(const TermOrder& order) const {
  if (terms_.empty()) throw InputError("the zero polynomial has no leading monomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
    if (revlex_compare(it->first, best->first, order) == std::strong_ordering::greater) best = it;
  }
  return best->first;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial operator*(const Monomial& m, const Polynomial& p) {
  Polynomial out;
  for (const auto& [t, c] : p.terms_) out.terms_.emplace(m * t, c);
  return out;
}

LinearAutomorphism LinearAutomorphism::inverse() const {
  auto inv = cmbal::inverse(matrix);
  if (!inv) throw InputError("linear map is singular");
  return {*inv};
}

Polynomial LinearAutomorphism::image_of_variable(std::size_t j) const {
  Polynomial out;
  for (std::size_t i = 0; i < size(); ++i) out.add_term(Monomial::variable(size(), i), matrix(i, j));
  return out;
}

Polynomial apply_automorphism(const LinearAutomorphism& g, const Polynomial& p) {
  const std::size_t n = g.size();
  std::vector<Polynomial> images(n);
  std::vector<bool> ready(n, false);
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    if (m.num_variables() != n) throw InputError("polynomial and automorphism use different variable sets");
    Polynomial term(Monomial(n), c);
    for (std::size_t j = 0; j < n; ++j) {
      if (m.exponent(j) == 0) continue;
      if (!ready[j]) {
        images[j] = g.image_of_variable(j);
        ready[j] = true;
      }
      for (int e = 0; e < m.exponent(j); ++e) term = term * images[j];
    }
    out = out + term;
  }
  return out;
}

std::vector<Monomial> stanley_reisner_generators(const SimplicialComplex& complex,
                                                 const std::vector<std::string>& universe) {
  const std::size_t n = universe.size();
  std::vector<int> to_universe(complex.num_vertices(), -1);
  std::vector<bool> present(n, false);
  for (std::size_t u = 0; u < n; ++u) {
    if (auto v = complex.find_vertex(universe[u])) {
      to_universe[*v] = static_cast<int>(u);
      present[u] = true;
    }
  }
  for (int v = 0; v < complex.num_vertices(); ++v) {
    if (to_universe[v] < 0) throw InputError("vertex '" + complex.vertices()[v] + "' is not in the variable set");
  }
  std::vector<Monomial> out;
  for (std::size_t u = 0; u < n; ++u) {
    if (!present[u]) out.push_back(Monomial::variable(n, u));
  }
  for (VertexSet s : minimal_nonfaces(complex)) {
    VertexSet image;
    s.for_each([&](int v) { image.insert(to_universe[v]); });
    out.push_back(Monomial::squarefree(n, image));
  }
  return out;
}

std::vector<Monomial> stanley_reisner_generators(const SimplicialComplex& complex) {
  return stanley_reisner_generators(complex, complex.vertices());
}

DegreePiece initial_ideal_by_degree(const std::vector<Polynomial>& generators, const TermOrder& order, int degree,
                                    bool want_leading) {
  const std::size_t n = order.num_variables();
  std::vector<Monomial> monomial_gens;
  std::vector<const Polynomial*> other_gens;
  std::vector<bool> free(n, true);
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    const int e = g.homogeneous_degree();
    if (e > degree) continue;
    if (g.is_monomial()) {
      const Monomial& m = g.terms().begin()->first;
      if (m.num_variables() != n) throw InputError("generator uses a different variable set");
      if (e == 1) {
        free[static_cast<std::size_t>(m.support().min())] = false;
      } else {
        monomial_gens.push_back(m);
      }
    } else {
      other_gens.push_back(&g);
    }
  }
  auto in_monomial_ideal = [&](const Monomial& m) {
    for (std::size_t v = 0; v < n; ++v) {
      if (!free[v] && m.exponent(v) > 0) return true;
    }
    return std::any_of(monomial_gens.begin(), monomial_gens.end(), [&](const Monomial& g) { return g.divides(m); });
  };
  auto descending = [&](const Monomial& a, const Monomial& b) {
    return revlex_compare(a, b, order) == std::strong_ordering::greater;
  };

  std::vector<Monomial> columns;
  for (auto& m : monomials_of_degree(n, free, degree)) {
    if (!in_monomial_ideal(m)) columns.push_back(std::move(m));
  }
  std::sort(columns.begin(), columns.end(), descending);
  std::unordered_map<Monomial, std::size_t, MonomialHash> column_of;
  column_of.reserve(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) column_of.emplace(columns[c], c);

  SparseEchelon echelon(columns.size());
  for (const Polynomial* g : other_gens) {
    const int e = g->homogeneous_degree();
    for (const Monomial& m : monomials_of_degree(n, free, degree - e)) {
      if (in_monomial_ideal(m)) continue;
      std::vector<std::pair<std::size_t, Rational>> row;
      for (const auto& [t, c] : g->terms()) {
        const Monomial mt = m * t;
        auto it = column_of.find(mt);
        if (it != column_of.end()) row.emplace_back(it->second, c);
      }
      if (row.empty()) continue;
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      echelon.insert(integer_row(row));
    }
  }

  DegreePiece piece;
  std::vector<bool> is_standard(columns.size(), false);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (!echelon.is_pivot(c)) {
      piece.standard.push_back(columns[c]);
      is_standard[c] = true;
    }
  }
  if (want_leading) {
    std::vector<bool> all(n, true);
    for (auto& m : monomials_of_degree(n, all, degree)) {
      auto it = column_of.find(m);
      if (it == column_of.end() || !is_standard[it->second]) piece.leading.push_back(std::move(m));
    }
    std::sort(piece.leading.begin(), piece.leading.end(), descending);
  }
  return piece;
}

Multicomplex::Multicomplex(std::size_t num_variables, std::vector<Monomial> monomials)
    : num_variables_(num_variables), monomials_(std::move(monomials)) {
  for (const auto& m : monomials_) {
    if (m.num_variables() != num_variables_) throw InputError("multicomplex monomials use different variable sets");
  }
  std::sort(monomials_.begin(), monomials_.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a > b;
  });
  monomials_.erase(std::unique(monomials_.begin(), monomials_.end()), monomials_.end());
}

bool Multicomplex::contains(const Monomial& m) const {
  return std::find(monomials_.begin(), monomials_.end(), m) != monomials_.end();
}

bool Multicomplex::contains_unit() const { return contains(Monomial(num_variables_)); }

bool Multicomplex::is_divisibility_closed() const {
  for (const auto& m : monomials_) {
    for (std::size_t v = 0; v < num_variables_; ++v) {
      if (m.exponent(v) == 0) continue;
      if (!contains(m / Monomial::variable(num_variables_, v))) return false;
    }
  }
  return true;
}

bool Multicomplex::is_squarefree() const {
  return std::all_of(monomials_.begin(), monomials_.end(), [](const Monomial& m) { return m.is_squarefree(); });
}

VertexSet Multicomplex::support() const {
  VertexSet s;
  for (const auto& m : monomials_) s |= m.support();
  return s;
}

std::vector<std::int64_t> f_vector_of_multicomplex(const Multicomplex& m) {
  std::vector<std::int64_t> out;
  for (const auto& mono : m.monomials()) {
    const auto d = static_cast<std::size_t>(mono.degree());
    if (out.size() <= d) out.resize(d + 1, 0);
    ++out[d];
  }
  return out;
}

Multicomplex standard_monomial_basis(const SimplicialComplex& complex, const std::vector<std::string>& universe,
                                     const LinearAutomorphism& g, const TermOrder& order) {
  const std::size_t n = universe.size();
  if (g.size() != n || order.num_variables() != n) throw InputError("automorphism, order and variables disagree in size");
  const int d = complex.dimension() + 1;

  std::vector<Polynomial> generators;
  for (const Monomial& nu : stanley_reisner_generators(complex, universe)) {
    generators.push_back(apply_automorphism(g, Polynomial(nu)));
  }
  for (std::size_t t : order.last(static_cast<std::size_t>(d))) generators.emplace_back(Monomial::variable(n, t));

  std::vector<Monomial> basis;
  for (int i = 0;; ++i) {
    DegreePiece piece = initial_ideal_by_degree(generators, order, i, false);
    if (piece.standard.empty()) break;
    if (i > d) {
      throw VerificationError("standard monomials persist in degree " + std::to_string(i) +
                              ": the last " + std::to_string(d) +
                              " variables are not a system of parameters under this automorphism");
    }
    basis.insert(basis.end(), piece.standard.begin(), piece.standard.end());
  }
  Multicomplex out(n, std::move(basis));
  if (!out.is_divisibility_closed()) throw VerificationError("standard monomials are not closed under divisibility");
  return out;
}

std::string format_monomial(const Monomial& m, const std::vector<std::string>& universe) {
  std::string out;
  for (std::size_t v = 0; v < m.num_variables(); ++v) {
    if (m.exponent(v) == 0) continue;
    if (!out.empty()) out += "*";
    out += universe[v];
    if (m.exponent(v) > 1) out += "^" + std::to_string(m.exponent(v));
  }
  return out.empty() ? "1" : out;
}

}  // namespace cmbal
