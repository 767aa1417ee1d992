#include "dsym/dsym.hpp"

#include <algorithm>
#include <sstream>

namespace dsym {

std::string basis_name(CodeBasis b) {
  switch (b) {
    case CodeBasis::R: return "R";
    case CodeBasis::S: return "S";
    case CodeBasis::E: return "E";
    case CodeBasis::F: return "F";
  }
  return "?";
}

void CodeElement::add_term(const KCode& c, const Int& coeff) {
  auto it = coeffs.find(c);
  if (it == coeffs.end()) {
    if (coeff != 0) coeffs.emplace(c, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) coeffs.erase(it);
}

void CodeTensorElement::add_term(const KCode& l, const KCode& r, const Int& coeff) {
  auto key = std::make_pair(l, r);
  auto it = coeffs.find(key);
  if (it == coeffs.end()) {
    if (coeff != 0) coeffs.emplace(std::move(key), coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) coeffs.erase(it);
}

namespace {

std::string describe_witness(int k, const KCode& code, const Permutation& a, const Int& ca,
                             const Permutation& b, const Int& cb) {
  std::ostringstream os;
  os << "element is not constant on the k=" << k << " descent class " << code << ": G["
     << a << "] has coefficient " << ca << " but G[" << b << "] has coefficient " << cb;
  return os.str();
}

}  // namespace

NotInSubalgebraError::NotInSubalgebraError(int k, KCode code, Permutation a, Int coeff_a,
                                           Permutation b, Int coeff_b)
    : std::runtime_error(describe_witness(k, code, a, coeff_a, b, coeff_b)),
      k_(k),
      code_(std::move(code)),
      a_(std::move(a)),
      b_(std::move(b)),
      ca_(std::move(coeff_a)),
      cb_(std::move(coeff_b)) {}

std::vector<Permutation> descent_class_members(const KCode& code) {
  EquivClass rc = recoil_class(min_rep(code), code.k);
  std::vector<Permutation> out;
  out.reserve(rc.members.size());
  for (const auto& m : rc.members) out.push_back(inverse(m));
  std::sort(out.begin(), out.end());
  return out;
}

Permutation descent_class_min(const KCode& code) { return inverse(min_rep(code)); }
Permutation descent_class_max(const KCode& code) { return inverse(max_rep(code)); }

HopfElement ribbon_to_g(const KCode& code) {
  HopfElement out;
  out.basis = PermBasis::G;
  for (const auto& m : descent_class_members(code)) out.coeffs.emplace(m, 1);
  return out;
}

HopfElement scode_to_g(const KCode& code) { return s_elem(descent_class_max(code)); }
HopfElement ecode_to_g(const KCode& code) { return e_elem(descent_class_min(code)); }

CodeElement g_to_ribbons(const HopfElement& a, int k) {
  if (a.basis != PermBasis::G) throw std::invalid_argument("g_to_ribbons requires the G basis");
  CodeElement out;
  out.k = k;
  out.basis = CodeBasis::R;
  std::map<KCode, Permutation> seen;  // class -> first member encountered
  for (const auto& [sigma, c] : a.coeffs) {
    KCode code = descent_code(sigma, k);
    if (seen.contains(code)) continue;
    seen.emplace(code, sigma);
    for (const auto& member : descent_class_members(code)) {
      auto it = a.coeffs.find(member);
      const Int cm = (it == a.coeffs.end()) ? Int(0) : it->second;
      if (cm != c) throw NotInSubalgebraError(k, code, sigma, c, member, cm);
    }
    out.add_term(code, c);
  }
  return out;
}

CodeElement ribbon_product(const KCode& a, const KCode& b) {
  if (a.k != b.k) throw std::invalid_argument("ribbon_product requires equal widths");
  return g_to_ribbons(g_product(ribbon_to_g(a), ribbon_to_g(b)), a.k);
}

CodeTensorElement ribbon_coproduct(const KCode& code) {
  const int k = code.k;
  TensorElement t = g_coproduct(ribbon_to_g(code));
  // Regroup both tensor legs classwise, checking constancy on products of
  // classes.
  CodeTensorElement out;
  out.k = k;
  out.basis = CodeBasis::R;
  std::map<std::pair<KCode, KCode>, std::pair<Permutation, Permutation>> seen;
  for (const auto& [pr, c] : t.coeffs) {
    KCode cl = descent_code(pr.first, k);
    KCode cr = descent_code(pr.second, k);
    auto key = std::make_pair(cl, cr);
    if (seen.contains(key)) continue;
    seen.emplace(key, pr);
    for (const auto& ml : descent_class_members(cl))
      for (const auto& mr : descent_class_members(cr)) {
        auto it = t.coeffs.find(std::make_pair(ml, mr));
        const Int cm = (it == t.coeffs.end()) ? Int(0) : it->second;
        if (cm != c)
          throw NotInSubalgebraError(k, cl, pr.first, c, ml, cm);
      }
    out.add_term(cl, cr, c);
  }
  return out;
}

KCode scode_product_index(const KCode& a, const KCode& b) {
  if (a.k != b.k) throw std::invalid_argument("scode_product_index requires equal widths");
  return descent_code(shifted_concat_top(descent_class_max(a), descent_class_max(b)), a.k);
}

KCode ecode_product_index(const KCode& a, const KCode& b) {
  if (a.k != b.k) throw std::invalid_argument("ecode_product_index requires equal widths");
  return descent_code(shifted_concat_bottom(descent_class_min(a), descent_class_min(b)), a.k);
}

CodeElement scode_expand_in_ribbons(const KCode& code) {
  return g_to_ribbons(scode_to_g(code), code.k);
}

CodeElement ribbons_to_scodes(const CodeElement& a) {
  if (a.basis != CodeBasis::R) throw std::invalid_argument("ribbons_to_scodes requires the R basis");
  // S^C = R_C + ribbons strictly below omega_C; peel the term whose class
  // maximum has the most inversions.
  CodeElement rest = a;
  CodeElement out;
  out.k = a.k;
  out.basis = CodeBasis::S;
  auto rank = [&](const KCode& c) {
    return inversion_set(descent_class_max(c)).size();
  };
  while (!rest.is_zero()) {
    auto pick = rest.coeffs.begin();
    size_t best = rank(pick->first);
    for (auto it = std::next(rest.coeffs.begin()); it != rest.coeffs.end(); ++it) {
      const size_t r = rank(it->first);
      if (r > best) {
        best = r;
        pick = it;
      }
    }
    const KCode idx = pick->first;
    const Int c = pick->second;
    out.add_term(idx, c);
    CodeElement expanded = scode_expand_in_ribbons(idx);
    for (const auto& [cc, coeff] : expanded.coeffs) rest.add_term(cc, -c * coeff);
  }
  return out;
}

long long count_free_generators(int n, int k, GenSide side) {
  if (n < 1 || k < 1) throw std::invalid_argument("count_free_generators requires n, k >= 1");
  // An S index factors over the top concatenation iff some suffix occupies
  // an initial value segment (mirror not connected); an E index factors over
  // the bottom concatenation iff some prefix does (not connected). The class
  // extremes are taken in the left weak order, i.e. on the inverse.
  long long count = 0;
  for (const auto& sigma : PermutationRange(n)) {
    const bool irreducible =
        (side == GenSide::S) ? is_connected(mirror(sigma)) : is_connected(sigma);
    if (!irreducible) continue;
    const Permutation inv = inverse(sigma);
    const bool extreme =
        (side == GenSide::S) ? is_max_element(inv, k) : is_min_element(inv, k);
    if (extreme) ++count;
  }
  return count;
}

PowerSeries hilbert_series(int k, int order) {
  if (k < 1 || order < 0) throw std::invalid_argument("hilbert_series requires k >= 1, order >= 0");
  // H_k(t) = sum_{j<k} j! t^j + k! t^k / (1 - k t)
  PowerSeries h(order);
  Int fact = 1;
  for (int j = 0; j <= std::min(order, k - 1); ++j) {
    if (j > 0) fact *= j;
    h[j] = fact;
  }
  if (k <= order) {
    Int kfact = fact * k;  // fact == (k-1)! after the loop when k-1 <= order
    Int pw = kfact;
    for (int j = k; j <= order; ++j) {
      h[j] = pw;
      pw *= k;
    }
  }
  return h;
}

PowerSeries generator_series(int k, int order) {
  PowerSeries h = hilbert_series(k, order);
  PowerSeries g = series_sub(PowerSeries::one(order), series_inverse(h));
  g[0] = 0;
  return g;
}

KCode f_class(const Permutation& sigma, int k) { return descent_code(sigma, k); }

Permutation class_representative(const KCode& code) { return inverse(min_rep(code)); }

CodeElement project_to_classes(const HopfElement& a, int k) {
  if (a.basis != PermBasis::F) throw std::invalid_argument("projection acts on the F basis");
  CodeElement out;
  out.k = k;
  out.basis = CodeBasis::F;
  for (const auto& [p, c] : a.coeffs) out.add_term(descent_code(p, k), c);
  return out;
}

CodeTensorElement project_to_classes(const TensorElement& a, int k) {
  if (a.basis != PermBasis::F) throw std::invalid_argument("projection acts on the F basis");
  CodeTensorElement out;
  out.k = k;
  out.basis = CodeBasis::F;
  for (const auto& [pr, c] : a.coeffs)
    out.add_term(descent_code(pr.first, k), descent_code(pr.second, k), c);
  return out;
}

CodeElement fq_product(const KCode& a, const KCode& b) {
  if (a.k != b.k) throw std::invalid_argument("fq_product requires equal widths");
  HopfElement fa = basis_term(PermBasis::F, class_representative(a));
  HopfElement fb = basis_term(PermBasis::F, class_representative(b));
  return project_to_classes(f_product(fa, fb), a.k);
}

CodeTensorElement fq_coproduct(const KCode& code) {
  HopfElement f = basis_term(PermBasis::F, class_representative(code));
  return project_to_classes(f_coproduct(f), code.k);
}

}  // namespace dsym
