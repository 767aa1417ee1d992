#include "dsym/fqsym.hpp"

#include <algorithm>
#include <stdexcept>

namespace dsym {

std::string basis_name(PermBasis b) {
  switch (b) {
    case PermBasis::F: return "F";
    case PermBasis::G: return "G";
    case PermBasis::S: return "S";
    case PermBasis::E: return "E";
  }
  return "?";
}

void HopfElement::add_term(const Permutation& p, const Int& c) {
  auto it = coeffs.find(p);
  if (it == coeffs.end()) {
    if (c != 0) coeffs.emplace(p, c);
    return;
  }
  it->second += c;
  if (it->second == 0) coeffs.erase(it);
}

void TensorElement::add_term(const Permutation& l, const Permutation& r, const Int& c) {
  auto key = std::make_pair(l, r);
  auto it = coeffs.find(key);
  if (it == coeffs.end()) {
    if (c != 0) coeffs.emplace(std::move(key), c);
    return;
  }
  it->second += c;
  if (it->second == 0) coeffs.erase(it);
}

HopfElement basis_term(PermBasis basis, const Permutation& p, const Int& c) {
  HopfElement e;
  e.basis = basis;
  e.add_term(p, c);
  return e;
}

HopfElement hopf_unit(PermBasis basis) { return basis_term(basis, Permutation()); }

namespace {

void require_basis(const HopfElement& a, const HopfElement& b, const char* what) {
  if (a.basis != b.basis) throw std::invalid_argument(std::string(what) + ": basis mismatch");
}

}  // namespace

HopfElement hopf_add(const HopfElement& a, const HopfElement& b) {
  require_basis(a, b, "hopf_add");
  HopfElement out = a;
  for (const auto& [p, c] : b.coeffs) out.add_term(p, c);
  return out;
}

HopfElement hopf_sub(const HopfElement& a, const HopfElement& b) {
  require_basis(a, b, "hopf_sub");
  HopfElement out = a;
  for (const auto& [p, c] : b.coeffs) out.add_term(p, -c);
  return out;
}

HopfElement hopf_scale(const HopfElement& a, const Int& c) {
  HopfElement out;
  out.basis = a.basis;
  if (c == 0) return out;
  for (const auto& [p, coeff] : a.coeffs) out.coeffs.emplace(p, coeff * c);
  return out;
}

Int counit(const HopfElement& a) {
  auto it = a.coeffs.find(Permutation());
  return it == a.coeffs.end() ? Int(0) : it->second;
}

std::vector<Word> shuffle_words(const Word& a, const Word& b) {
  std::vector<Word> out;
  Word cur;
  cur.reserve(a.size() + b.size());
  auto rec = [&](auto&& self, size_t i, size_t j) -> void {
    if (i == a.size() && j == b.size()) {
      out.push_back(cur);
      return;
    }
    if (i < a.size()) {
      cur.push_back(a[i]);
      self(self, i + 1, j);
      cur.pop_back();
    }
    if (j < b.size()) {
      cur.push_back(b[j]);
      self(self, i, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

HopfElement f_product(const HopfElement& a, const HopfElement& b) {
  require_basis(a, b, "f_product");
  if (a.basis != PermBasis::F) throw std::invalid_argument("f_product requires the F basis");
  HopfElement out;
  out.basis = PermBasis::F;
  for (const auto& [sigma, ca] : a.coeffs)
    for (const auto& [tau, cb] : b.coeffs)
      for (const auto& w : shuffle_words(sigma.word(), shift(tau, sigma.size())))
        out.add_term(Permutation(w), ca * cb);
  return out;
}

namespace {

HopfElement invert_indices(const HopfElement& a, PermBasis to) {
  HopfElement out;
  out.basis = to;
  for (const auto& [p, c] : a.coeffs) out.coeffs.emplace(inverse(p), c);
  return out;
}

}  // namespace

HopfElement g_product(const HopfElement& a, const HopfElement& b) {
  require_basis(a, b, "g_product");
  if (a.basis != PermBasis::G) throw std::invalid_argument("g_product requires the G basis");
  return invert_indices(
      f_product(invert_indices(a, PermBasis::F), invert_indices(b, PermBasis::F)), PermBasis::G);
}

TensorElement f_coproduct(const HopfElement& a) {
  if (a.basis != PermBasis::F) throw std::invalid_argument("f_coproduct requires the F basis");
  TensorElement out;
  out.basis = PermBasis::F;
  for (const auto& [sigma, c] : a.coeffs) {
    const Word& w = sigma.word();
    for (int i = 0; i <= sigma.size(); ++i) {
      Word left(w.begin(), w.begin() + i);
      Word right(w.begin() + i, w.end());
      out.add_term(standardize(left), standardize(right), c);
    }
  }
  return out;
}

TensorElement g_coproduct(const HopfElement& a) {
  if (a.basis != PermBasis::G) throw std::invalid_argument("g_coproduct requires the G basis");
  TensorElement out;
  out.basis = PermBasis::G;
  for (const auto& [sigma, c] : a.coeffs) {
    const int n = sigma.size();
    for (int i = 0; i <= n; ++i) {
      Word left = restrict_to_values(sigma, 1, i);
      Word right = restrict_to_values(sigma, i + 1, n);
      out.add_term(standardize(left), standardize(right), c);
    }
  }
  return out;
}

TensorElement g_coproduct_via_duality(const HopfElement& a) {
  if (a.basis != PermBasis::G) throw std::invalid_argument("g_coproduct requires the G basis");
  TensorElement f = f_coproduct(invert_indices(a, PermBasis::F));
  TensorElement out;
  out.basis = PermBasis::G;
  for (const auto& [pr, c] : f.coeffs)
    out.add_term(inverse(pr.first), inverse(pr.second), c);
  return out;
}

HopfElement s_elem(const Permutation& sigma) {
  HopfElement out;
  out.basis = PermBasis::G;
  for (const auto& tau : weak_ideal(sigma, Side::Left)) out.coeffs.emplace(tau, 1);
  return out;
}

HopfElement e_elem(const Permutation& sigma) {
  HopfElement out;
  out.basis = PermBasis::G;
  for (const auto& tau : weak_filter(sigma, Side::Left)) out.coeffs.emplace(tau, 1);
  return out;
}

Permutation s_product_index(const Permutation& sigma, const Permutation& tau) {
  return shifted_concat_top(sigma, tau);
}

Permutation e_product_index(const Permutation& sigma, const Permutation& tau) {
  return shifted_concat_bottom(sigma, tau);
}

HopfElement to_g(const HopfElement& a) {
  switch (a.basis) {
    case PermBasis::G: return a;
    case PermBasis::F: return invert_indices(a, PermBasis::G);
    case PermBasis::S: {
      HopfElement out;
      out.basis = PermBasis::G;
      for (const auto& [p, c] : a.coeffs) out = hopf_add(out, hopf_scale(s_elem(p), c));
      return out;
    }
    case PermBasis::E: {
      HopfElement out;
      out.basis = PermBasis::G;
      for (const auto& [p, c] : a.coeffs) out = hopf_add(out, hopf_scale(e_elem(p), c));
      return out;
    }
  }
  throw std::logic_error("unknown basis");
}

HopfElement g_to_f(const HopfElement& a) {
  if (a.basis != PermBasis::G) throw std::invalid_argument("g_to_f requires the G basis");
  return invert_indices(a, PermBasis::F);
}

namespace {

int inversion_count(const Permutation& p, bool of_inverse) {
  Permutation q = of_inverse ? inverse(p) : p;
  return static_cast<int>(inversion_set(q).size());
}

// Peels an element expressed in G into the unitriangular basis given by
// `expand` (S: ideal sums, peel from most inversions down; E: filter sums,
// peel from fewest inversions up).
HopfElement solve_triangular(const HopfElement& a, PermBasis to, bool peel_max) {
  HopfElement rest = a;
  HopfElement out;
  out.basis = to;
  while (!rest.is_zero()) {
    auto pick = rest.coeffs.begin();
    int best = inversion_count(pick->first, /*of_inverse=*/true);
    for (auto it = std::next(rest.coeffs.begin()); it != rest.coeffs.end(); ++it) {
      const int inv = inversion_count(it->first, true);
      if (peel_max ? inv > best : inv < best) {
        best = inv;
        pick = it;
      }
    }
    const Permutation idx = pick->first;
    const Int c = pick->second;
    out.add_term(idx, c);
    HopfElement expanded = (to == PermBasis::S) ? s_elem(idx) : e_elem(idx);
    rest = hopf_sub(rest, hopf_scale(expanded, c));
  }
  return out;
}

}  // namespace

HopfElement g_to_s(const HopfElement& a) {
  if (a.basis != PermBasis::G) throw std::invalid_argument("g_to_s requires the G basis");
  return solve_triangular(a, PermBasis::S, /*peel_max=*/true);
}

HopfElement g_to_e(const HopfElement& a) {
  if (a.basis != PermBasis::G) throw std::invalid_argument("g_to_e requires the G basis");
  return solve_triangular(a, PermBasis::E, /*peel_max=*/false);
}

TensorElement tensor_f_product(const TensorElement& a, const TensorElement& b) {
  if (a.basis != PermBasis::F || b.basis != PermBasis::F)
    throw std::invalid_argument("tensor_f_product requires the F basis");
  TensorElement out;
  out.basis = PermBasis::F;
  for (const auto& [pa, ca] : a.coeffs)
    for (const auto& [pb, cb] : b.coeffs) {
      HopfElement left = f_product(basis_term(PermBasis::F, pa.first),
                                   basis_term(PermBasis::F, pb.first));
      HopfElement right = f_product(basis_term(PermBasis::F, pa.second),
                                    basis_term(PermBasis::F, pb.second));
      for (const auto& [pl, cl] : left.coeffs)
        for (const auto& [pr, cr] : right.coeffs)
          out.add_term(pl, pr, ca * cb * cl * cr);
    }
  return out;
}

}  // namespace dsym
