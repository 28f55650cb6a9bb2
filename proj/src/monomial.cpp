#include "equinoether/monomial.hpp"

#include <algorithm>

#include "equinoether/errors.hpp"

namespace equinoether {

namespace {

void validate_variable(VarShape shape, Variable v) {
  if (v.col < 1 || v.row < 1)
    throw ShapeError("variable indices must be positive");
  (void)shape;
}

}  // namespace

Monomial Monomial::variable(VarShape shape, Variable v, int exp) {
  return product(shape, {{v, exp}});
}

Monomial Monomial::product(VarShape shape,
                           std::vector<std::pair<Variable, int>> factors) {
  Monomial m;
  std::sort(factors.begin(), factors.end(),
            [](const auto& a, const auto& b) { return var_less(a.first, b.first); });
  for (auto& [v, e] : factors) {
    validate_variable(shape, v);
    if (!m.factors_.empty() && m.factors_.back().first == v)
      m.factors_.back().second += e;
    else
      m.factors_.emplace_back(v, e);
  }
  for (const auto& [v, e] : m.factors_)
    if (e <= 0) throw ShapeError("exponents must be positive");
  if (!m.factors_.empty()) m.shape_ = shape;
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

int Monomial::exponent(Variable v) const {
  for (const auto& [w, e] : factors_)
    if (w == v) return e;
  return 0;
}

std::vector<int> Monomial::columns() const {
  std::vector<int> out;
  for (const auto& [v, e] : factors_)
    if (out.empty() || out.back() != v.col) out.push_back(v.col);
  return out;  // factors ascend by (col, row), so cols come out sorted
}

std::vector<int> Monomial::rows_used() const {
  std::vector<int> out;
  for (const auto& [v, e] : factors_) out.push_back(v.row);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int Monomial::width() const { return static_cast<int>(columns().size()); }

int Monomial::max_col() const {
  return factors_.empty() ? 0 : factors_.back().first.col;
}

namespace {

std::optional<VarShape> join_shapes(std::optional<VarShape> a,
                                    std::optional<VarShape> b) {
  if (!a) return b;
  if (b && *a != *b) throw ShapeError("variable shape mismatch");
  return a;
}

}  // namespace

Monomial Monomial::times(const Monomial& other) const {
  auto shape = join_shapes(shape_, other.shape_);
  std::vector<std::pair<Variable, int>> merged = factors_;
  merged.insert(merged.end(), other.factors_.begin(), other.factors_.end());
  if (!shape) return Monomial();
  return product(*shape, std::move(merged));
}

bool Monomial::divisible_by(const Monomial& d) const {
  join_shapes(shape_, d.shape_);
  for (const auto& [v, e] : d.factors_)
    if (exponent(v) < e) return false;
  return true;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& d) const {
  if (!divisible_by(d)) return std::nullopt;
  std::vector<std::pair<Variable, int>> out;
  for (const auto& [v, e] : factors_) {
    int r = e - d.exponent(v);
    if (r > 0) out.emplace_back(v, r);
  }
  if (out.empty()) return Monomial();
  return product(*shape_, std::move(out));
}

Monomial Monomial::lcm(const Monomial& other) const {
  auto shape = join_shapes(shape_, other.shape_);
  std::vector<std::pair<Variable, int>> out = factors_;
  for (const auto& [v, e] : other.factors_) {
    int mine = exponent(v);
    if (mine == 0)
      out.emplace_back(v, e);
    else if (e > mine)
      for (auto& [w, f] : out)
        if (w == v) f = e;
  }
  if (out.empty()) return Monomial();
  return product(*shape, std::move(out));
}

Monomial Monomial::gcd(const Monomial& other) const {
  auto shape = join_shapes(shape_, other.shape_);
  std::vector<std::pair<Variable, int>> out;
  for (const auto& [v, e] : factors_) {
    int both = std::min(e, other.exponent(v));
    if (both > 0) out.emplace_back(v, both);
  }
  if (out.empty()) return Monomial();
  return product(*shape, std::move(out));
}

bool Monomial::coprime(const Monomial& other) const {
  return gcd(other).is_one();
}

Monomial Monomial::apply_columns(const FinitePartialInjection& pi) const {
  if (is_one()) return *this;
  if (shape_ == VarShape::Pair)
    throw ShapeError("column relabeling applies to row-column variables");
  std::vector<std::pair<Variable, int>> out;
  out.reserve(factors_.size());
  for (const auto& [v, e] : factors_) {
    auto img = pi.image(v.col);
    if (!img)
      throw ShapeError("column map undefined on support column " +
                       std::to_string(v.col));
    out.emplace_back(Variable{v.row, *img}, e);
  }
  return product(*shape_, std::move(out));
}

Monomial Monomial::apply_pair(const FinitePartialInjection& first,
                              const FinitePartialInjection& second) const {
  if (is_one()) return *this;
  if (shape_ != VarShape::Pair)
    throw ShapeError("pair relabeling applies to pair variables");
  std::vector<std::pair<Variable, int>> out;
  out.reserve(factors_.size());
  for (const auto& [v, e] : factors_) {
    auto a = first.image(v.row), b = second.image(v.col);
    if (!a || !b) throw ShapeError("pair map undefined on support");
    out.emplace_back(Variable{*a, *b}, e);
  }
  return product(*shape_, std::move(out));
}

Ordering compare(TermOrder order, const Monomial& m1, const Monomial& m2) {
  (void)order;  // only LexColMajor
  if (m1.shape() && m2.shape() && *m1.shape() != *m2.shape())
    throw ShapeError("comparing monomials of different shapes");
  const auto& a = m1.factors();
  const auto& b = m2.factors();
  auto ia = a.rbegin(), ib = b.rbegin();  // walk from most significant
  while (ia != a.rend() || ib != b.rend()) {
    if (ia == a.rend()) return Ordering::Less;     // m2 still has variables
    if (ib == b.rend()) return Ordering::Greater;  // m1 still has variables
    if (ia->first == ib->first) {
      if (ia->second != ib->second)
        return ia->second > ib->second ? Ordering::Greater : Ordering::Less;
      ++ia, ++ib;
    } else if (var_less(ib->first, ia->first)) {
      return Ordering::Greater;  // m1 holds the more significant variable
    } else {
      return Ordering::Less;
    }
  }
  return Ordering::Equal;
}

bool monomial_less(const Monomial& m1, const Monomial& m2) {
  return compare(TermOrder::LexColMajor, m1, m2) == Ordering::Less;
}

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  const char letter = m.shape() == VarShape::Pair ? 'y' : 'x';
  std::string out;
  for (const auto& [v, e] : m.factors()) {
    if (!out.empty()) out += "*";
    out += letter;
    out += "[" + std::to_string(v.row) + "," + std::to_string(v.col) + "]";
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace equinoether
