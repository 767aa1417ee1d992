#include "dsym/stats.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dsym {

void MultiPoly::add_term(const std::vector<int>& expo, const Int& c) {
  if (static_cast<int>(expo.size()) != nvars)
    throw std::invalid_argument("exponent vector length must equal nvars");
  auto it = terms.find(expo);
  if (it == terms.end()) {
    if (c != 0) terms.emplace(expo, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

MultiPoly poly_constant(int nvars, char symbol, const Int& c) {
  MultiPoly p;
  p.nvars = nvars;
  p.symbol = symbol;
  if (c != 0) p.terms.emplace(std::vector<int>(static_cast<size_t>(nvars), 0), c);
  return p;
}

MultiPoly eulerian_poly(int n, int k) {
  if (n < 0 || k < 1) throw std::invalid_argument("eulerian_poly requires n >= 0, k >= 1");
  MultiPoly p;
  p.nvars = k;
  p.symbol = 't';
  for (const auto& sigma : PermutationRange(n)) {
    KCode c = recoil_code(sigma, k);
    std::vector<int> expo(static_cast<size_t>(k), 0);
    for (int l = 2; l <= n; ++l) ++expo[static_cast<size_t>(c.digits[static_cast<size_t>(l - 1)] - 1)];
    p.add_term(expo, 1);
  }
  return p;
}

MultiPoly major_poly(int n, int k) {
  if (n < 0 || k < 1) throw std::invalid_argument("major_poly requires n >= 0, k >= 1");
  MultiPoly p;
  p.nvars = k;
  p.symbol = 'q';
  for (const auto& sigma : PermutationRange(n)) {
    KCode c = recoil_code(sigma, k);
    std::vector<int> expo(static_cast<size_t>(k), 0);
    for (int i = 1; i <= n; ++i) expo[static_cast<size_t>(c.digits[static_cast<size_t>(i - 1)] - 1)] += i - 1;
    p.add_term(expo, 1);
  }
  return p;
}

MultiPoly specialize(const MultiPoly& p, const std::vector<VarImage>& images,
                     int target_nvars, char target_symbol) {
  if (static_cast<int>(images.size()) != p.nvars)
    throw std::invalid_argument("assignment must cover every variable");
  for (const auto& im : images)
    if (const int* v = std::get_if<int>(&im); v && (*v < 0 || *v >= target_nvars))
      throw std::invalid_argument("target variable index out of range");
  MultiPoly out;
  out.nvars = target_nvars;
  out.symbol = target_symbol;
  for (const auto& [expo, coeff] : p.terms) {
    Int c = coeff;
    std::vector<int> target_expo(static_cast<size_t>(target_nvars), 0);
    for (int v = 0; v < p.nvars; ++v) {
      const int e = expo[static_cast<size_t>(v)];
      if (e == 0) continue;
      if (const Int* value = std::get_if<Int>(&images[static_cast<size_t>(v)])) {
        Int pw = 1;
        for (int i = 0; i < e; ++i) pw *= *value;
        c *= pw;
      } else {
        target_expo[static_cast<size_t>(std::get<int>(images[static_cast<size_t>(v)]))] += e;
      }
    }
    out.add_term(target_expo, c);
  }
  return out;
}

std::string to_string(const MultiPoly& p) {
  if (p.terms.empty()) return "0";
  // Graded lexicographic: total degree first, then exponents.
  std::vector<const std::pair<const std::vector<int>, Int>*> order;
  for (const auto& term : p.terms) order.push_back(&term);
  auto total = [](const std::vector<int>& e) { return std::accumulate(e.begin(), e.end(), 0); };
  // Degree first; within a degree the t1-heaviest monomial leads.
  std::sort(order.begin(), order.end(), [&](auto* a, auto* b) {
    const int da = total(a->first), db = total(b->first);
    if (da != db) return da < db;
    return a->first > b->first;
  });
  std::ostringstream os;
  bool first = true;
  for (auto* term : order) {
    const auto& [expo, coeff] = *term;
    Int c = coeff;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (c < 0) c = -c;
    first = false;
    const bool constant = total(expo) == 0;
    if (c != 1 || constant) {
      os << c;
      if (!constant) os << "*";
    }
    bool firstv = true;
    for (int v = 0; v < p.nvars; ++v) {
      const int e = expo[static_cast<size_t>(v)];
      if (e == 0) continue;
      if (!firstv) os << "*";
      firstv = false;
      os << p.symbol << (v + 1);
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace dsym
