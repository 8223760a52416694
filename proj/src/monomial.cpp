#include "lexbetti/monomial.hpp"

#include <numeric>
#include <sstream>

#include "lexbetti/errors.hpp"

namespace lexbetti {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  if (exps_.empty()) throw InputError("monomial needs at least one variable");
  for (int e : exps_)
    if (e < 0) throw InputError("negative exponent in monomial");
  degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

int Monomial::exponent(int i) const {
  if (i < 1 || i > vars())
    throw PreconditionError("variable index out of range: " + std::to_string(i));
  return exps_[static_cast<std::size_t>(i) - 1];
}

int Monomial::max_index() const {
  for (int i = vars(); i >= 1; --i)
    if (exps_[static_cast<std::size_t>(i) - 1] > 0) return i;
  throw PreconditionError("max index undefined for the constant monomial");
}

Monomial Monomial::multiplied_by_var(int i) const {
  if (i < 1 || i > vars())
    throw PreconditionError("variable index out of range: " + std::to_string(i));
  std::vector<int> e = exps_;
  ++e[static_cast<std::size_t>(i) - 1];
  return Monomial(std::move(e));
}

Monomial Monomial::elementary_move(int i, int j) const {
  if (i < 1 || j > vars() || i >= j)
    throw PreconditionError("invalid move: need 1 <= i < j <= vars");
  if (exps_[static_cast<std::size_t>(j) - 1] == 0)
    throw PreconditionError("invalid move: X" + std::to_string(j) +
                            " does not divide the monomial");
  std::vector<int> e = exps_;
  ++e[static_cast<std::size_t>(i) - 1];
  --e[static_cast<std::size_t>(j) - 1];
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (vars() != other.vars())
    throw PreconditionError("divides: variable count mismatch");
  for (int k = 0; k < vars(); ++k)
    if (exps_[k] > other.exps_[k]) return false;
  return true;
}

Monomial Monomial::fold_last_var() const {
  if (vars() < 2)
    throw PreconditionError("cannot fold a one-variable monomial");
  std::vector<int> e(exps_.begin(), exps_.end() - 1);
  e.back() += exps_.back();
  return Monomial(std::move(e));
}

std::string Monomial::str() const {
  if (is_constant()) return "1";
  std::ostringstream out;
  bool first = true;
  for (int i = 1; i <= vars(); ++i) {
    int e = exps_[static_cast<std::size_t>(i) - 1];
    if (e == 0) continue;
    if (!first) out << "*";
    out << "X" << i;
    if (e > 1) out << "^" << e;
    first = false;
  }
  return out.str();
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (vars() != other.vars())
    throw PreconditionError("lex comparison: variable count mismatch");
  for (int k = 0; k < vars(); ++k) {
    if (exps_[k] != other.exps_[k])
      return exps_[k] <=> other.exps_[k];
  }
  return std::strong_ordering::equal;
}

}  // namespace lexbetti
