#include "dsym/render.hpp"

#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace dsym {

namespace {

std::vector<int> parse_letters(const std::string& text) {
  if (text.empty() || text == "e") return {};
  std::vector<int> letters;
  if (text.find(',') != std::string::npos) {
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
      if (item.empty()) throw std::invalid_argument("empty entry in '" + text + "'");
      letters.push_back(std::stoi(item));
    }
    return letters;
  }
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw std::invalid_argument("unexpected character in '" + text + "'");
    letters.push_back(ch - '0');
  }
  return letters;
}

}  // namespace

Permutation parse_permutation(const std::string& text) {
  return Permutation(parse_letters(text));
}

KCode parse_code(const std::string& text, int k) {
  KCode c{k, parse_letters(text)};
  if (!c.valid()) throw std::invalid_argument("'" + text + "' is not a valid width-" + std::to_string(k) + " code");
  return c;
}

namespace {

void append_coeff(std::ostringstream& os, bool first, Int c, bool unit_index) {
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (c < 0) c = -c;
  if (c != 1 || unit_index) {
    os << c;
    if (!unit_index) os << "*";
  }
}

template <typename Map, typename Render>
std::string render_terms(const Map& coeffs, Render&& render) {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : coeffs) {
    render(os, first, idx, c);
    first = false;
  }
  return os.str();
}

}  // namespace

std::string to_string(const HopfElement& a) {
  return render_terms(a.coeffs, [&](std::ostringstream& os, bool first, const Permutation& p, const Int& c) {
    append_coeff(os, first, c, p.empty());
    if (!p.empty()) os << basis_name(a.basis) << "[" << p << "]";
  });
}

std::string to_string(const TensorElement& a) {
  const std::string name = basis_name(a.basis);
  auto leg = [&](std::ostringstream& os, const Permutation& p) {
    if (p.empty())
      os << "1";
    else
      os << name << "[" << p << "]";
  };
  return render_terms(a.coeffs, [&](std::ostringstream& os, bool first,
                                    const std::pair<Permutation, Permutation>& pr, const Int& c) {
    append_coeff(os, first, c, false);
    leg(os, pr.first);
    os << " (x) ";
    leg(os, pr.second);
  });
}

std::string to_string(const CodeElement& a) {
  return render_terms(a.coeffs, [&](std::ostringstream& os, bool first, const KCode& c, const Int& coeff) {
    append_coeff(os, first, coeff, c.digits.empty());
    if (!c.digits.empty()) os << basis_name(a.basis) << "[" << c << "]";
  });
}

std::string to_string(const CodeTensorElement& a) {
  const std::string name = basis_name(a.basis);
  auto leg = [&](std::ostringstream& os, const KCode& c) {
    if (c.digits.empty())
      os << "1";
    else
      os << name << "[" << c << "]";
  };
  return render_terms(a.coeffs, [&](std::ostringstream& os, bool first,
                                    const std::pair<KCode, KCode>& pr, const Int& c) {
    append_coeff(os, first, c, false);
    leg(os, pr.first);
    os << " (x) ";
    leg(os, pr.second);
  });
}

json coeff_to_json(const Int& c) {
  static const Int lo = Int(std::numeric_limits<long long>::min());
  static const Int hi = Int(std::numeric_limits<long long>::max());
  if (c >= lo && c <= hi) return static_cast<long long>(c);
  return c.str();
}

json to_json(const Permutation& p) { return json(p.word()); }

json to_json(const KCode& c) { return json{{"k", c.k}, {"digits", c.digits}}; }

json to_json(const KPattern& p) {
  json windows = json::array();
  for (const auto& w : p.windows) windows.push_back(to_json(w));
  return json{{"k", p.k}, {"windows", windows}};
}

json to_json(const EquivClass& c) {
  json members = json::array();
  for (const auto& m : c.members) members.push_back(to_json(m));
  return json{{"k", c.k},
              {"kind", c.kind == ClassKind::Recoil ? "recoil" : "descent"},
              {"code", c.code.digits},
              {"size", c.members.size()},
              {"min", to_json(c.min_rep)},
              {"max", to_json(c.max_rep)},
              {"members", members}};
}

json to_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [expo, c] : p.terms)
    terms.push_back(json{{"exponents", expo}, {"coeff", coeff_to_json(c)}});
  return json{{"vars", std::string(1, p.symbol)}, {"nvars", p.nvars}, {"terms", terms}};
}

json to_json(const PowerSeries& s) {
  json coeffs = json::array();
  for (int i = 0; i <= s.order(); ++i) coeffs.push_back(coeff_to_json(s[i]));
  return json{{"order", s.order()}, {"coeffs", coeffs}};
}

json to_json(const HopfElement& a) {
  json terms = json::array();
  for (const auto& [p, c] : a.coeffs)
    terms.push_back(json{{"perm", p.word()}, {"coeff", coeff_to_json(c)}});
  return json{{"basis", basis_name(a.basis)}, {"terms", terms}};
}

json to_json(const TensorElement& a) {
  json terms = json::array();
  for (const auto& [pr, c] : a.coeffs)
    terms.push_back(json{{"left", pr.first.word()}, {"right", pr.second.word()},
                         {"coeff", coeff_to_json(c)}});
  return json{{"basis", basis_name(a.basis)}, {"terms", terms}};
}

json to_json(const CodeElement& a) {
  json terms = json::array();
  for (const auto& [c, coeff] : a.coeffs)
    terms.push_back(json{{"code", c.digits}, {"coeff", coeff_to_json(coeff)}});
  return json{{"k", a.k}, {"basis", basis_name(a.basis)}, {"terms", terms}};
}

json to_json(const CodeTensorElement& a) {
  json terms = json::array();
  for (const auto& [pr, coeff] : a.coeffs)
    terms.push_back(json{{"left", pr.first.digits}, {"right", pr.second.digits},
                         {"coeff", coeff_to_json(coeff)}});
  return json{{"k", a.k}, {"basis", basis_name(a.basis)}, {"terms", terms}};
}

}  // namespace dsym
