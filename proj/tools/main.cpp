#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dsym/dsym.hpp"
#include "dsym/fqsym.hpp"
#include "dsym/kcode.hpp"
#include "dsym/perm.hpp"
#include "dsym/render.hpp"
#include "dsym/series.hpp"
#include "dsym/stats.hpp"
#include "dsym/verify.hpp"

namespace {

using dsym::json;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) out.push_back(std::stoi(item));
  return out;
}

std::string class_line(const dsym::EquivClass& c, bool summary) {
  std::ostringstream os;
  os << "code=" << dsym::to_string(c.code) << " size=" << c.members.size()
     << " min=" << c.min_rep << " max=" << c.max_rep;
  if (!summary) {
    os << " members=";
    for (size_t i = 0; i < c.members.size(); ++i) os << (i ? "," : "") << c.members[i];
  }
  return os.str();
}

dsym::HopfElement parse_operand(dsym::PermBasis basis, const std::string& text) {
  return dsym::basis_term(basis, dsym::parse_permutation(text));
}

int run(int argc, char** argv) {
  CLI::App app{"Exact combinatorics of generalized descent codes on permutations"};
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  // code
  auto* cmd_code = app.add_subcommand("code", "descent or recoil code of a permutation");
  int code_k = 0;
  std::string code_perm;
  bool code_recoil = false;
  cmd_code->add_option("--k", code_k, "window width")->required();
  cmd_code->add_option("--perm", code_perm, "permutation")->required();
  cmd_code->add_flag("--recoil", code_recoil, "recoil code instead of descent code");

  // classes
  auto* cmd_classes = app.add_subcommand("classes", "all equivalence classes of S_n");
  int cls_k = 0, cls_n = 0;
  bool cls_summary = false;
  std::string cls_kind = "recoil";
  cmd_classes->add_option("--k", cls_k, "window width")->required();
  cmd_classes->add_option("--n", cls_n, "symmetric group degree")->required();
  cmd_classes->add_flag("--summary", cls_summary, "omit member lists");
  cmd_classes->add_option("--kind", cls_kind, "recoil|descent")->check(CLI::IsMember({"recoil", "descent"}));

  // class-of
  auto* cmd_class_of = app.add_subcommand("class-of", "equivalence class of one permutation");
  int co_k = 0;
  std::string co_perm, co_kind = "recoil";
  cmd_class_of->add_option("--k", co_k, "window width")->required();
  cmd_class_of->add_option("--perm", co_perm, "permutation")->required();
  cmd_class_of->add_option("--kind", co_kind, "recoil|descent")->check(CLI::IsMember({"recoil", "descent"}));

  // eulerian / major
  auto* cmd_eulerian = app.add_subcommand("eulerian", "multivariate Eulerian polynomial");
  auto* cmd_major = app.add_subcommand("major", "multivariate major-index polynomial");
  int eu_k = 0, eu_n = 0, ma_k = 0, ma_n = 0;
  cmd_eulerian->add_option("--k", eu_k, "window width")->required();
  cmd_eulerian->add_option("--n", eu_n, "symmetric group degree")->required();
  cmd_major->add_option("--k", ma_k, "window width")->required();
  cmd_major->add_option("--n", ma_n, "symmetric group degree")->required();

  // series
  auto* cmd_series = app.add_subcommand("series", "Hilbert or generator series");
  int se_k = 0, se_order = 13;
  bool se_generators = false, se_hilbert = false;
  cmd_series->add_option("--k", se_k, "window width")->required();
  cmd_series->add_option("--order", se_order, "truncation order");
  cmd_series->add_flag("--generators", se_generators, "generator counts by degree");
  cmd_series->add_flag("--hilbert", se_hilbert, "graded dimensions (default)");

  // hopf
  auto* cmd_hopf = app.add_subcommand("hopf", "products and coproducts of basis elements");
  auto* hopf_mul = cmd_hopf->add_subcommand("mul", "product of two basis elements");
  auto* hopf_cop = cmd_hopf->add_subcommand("cop", "coproduct of one basis element");
  cmd_hopf->require_subcommand(1);
  std::string mul_basis = "F", cop_basis = "F";
  int hopf_mul_k = 0, hopf_cop_k = 0;
  std::vector<std::string> mul_args;
  std::string cop_arg;
  hopf_mul->add_option("--basis", mul_basis, "F|G|S|E|R")->check(CLI::IsMember({"F", "G", "S", "E", "R"}));
  hopf_mul->add_option("--k", hopf_mul_k, "window width (R basis)");
  hopf_mul->add_option("operands", mul_args, "two indices")->expected(2);
  hopf_cop->add_option("--basis", cop_basis, "F|G|R")->check(CLI::IsMember({"F", "G", "R"}));
  hopf_cop->add_option("--k", hopf_cop_k, "window width (R basis)");
  hopf_cop->add_option("operand", cop_arg, "one index")->required();

  // quotient
  auto* cmd_quotient = app.add_subcommand("quotient", "product and coproduct of the quotient");
  auto* q_mul = cmd_quotient->add_subcommand("mul", "product of two class indices");
  auto* q_cop = cmd_quotient->add_subcommand("cop", "coproduct of one class index");
  cmd_quotient->require_subcommand(1);
  int q_mul_k = 0, q_cop_k = 0;
  std::vector<std::string> q_mul_args;
  std::string q_cop_arg;
  q_mul->add_option("--k", q_mul_k, "window width")->required();
  q_mul->add_option("operands", q_mul_args, "two codes")->expected(2);
  q_cop->add_option("--k", q_cop_k, "window width")->required();
  q_cop->add_option("operand", q_cop_arg, "one code")->required();

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "run the verification suites");
  std::string ve_suite = "all", ve_ks = "1,2,3,4,5";
  int ve_max_n = -1, ve_order = 13;
  cmd_verify->add_option("--suite", ve_suite, "codes|classes|intervals|ideals|stats|hopf|dsym|quotient|series|all");
  cmd_verify->add_option("--k", ve_ks, "comma-separated widths");
  cmd_verify->add_option("--max-n", ve_max_n, "cap the exhaustive scales");
  cmd_verify->add_option("--order", ve_order, "series truncation order");

  // Let --json (declared on the root) be given after a subcommand too.
  std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* cmd) {
    for (auto* sub : cmd->get_subcommands([](CLI::App*) { return true; })) {
      sub->fallthrough();
      allow_fallthrough(sub);
    }
  };
  allow_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  std::ostringstream out;

  if (*cmd_code) {
    dsym::Permutation p = dsym::parse_permutation(code_perm);
    dsym::KCode c = code_recoil ? dsym::recoil_code(p, code_k) : dsym::descent_code(p, code_k);
    if (as_json)
      out << dsym::to_json(c).dump() << "\n";
    else
      out << dsym::to_string(c) << "\n";
  } else if (*cmd_classes) {
    auto kind = (cls_kind == "recoil") ? dsym::ClassKind::Recoil : dsym::ClassKind::Descent;
    auto classes = dsym::classes_of_sn(cls_n, cls_k, kind);
    if (as_json) {
      json arr = json::array();
      for (const auto& c : classes) arr.push_back(dsym::to_json(c));
      out << arr.dump() << "\n";
    } else {
      for (const auto& c : classes) out << class_line(c, cls_summary) << "\n";
    }
  } else if (*cmd_class_of) {
    auto kind = (co_kind == "recoil") ? dsym::ClassKind::Recoil : dsym::ClassKind::Descent;
    dsym::Permutation p = dsym::parse_permutation(co_perm);
    dsym::EquivClass c =
        (kind == dsym::ClassKind::Recoil) ? dsym::recoil_class(p, co_k) : dsym::descent_class(p, co_k);
    if (as_json)
      out << dsym::to_json(c).dump() << "\n";
    else
      out << class_line(c, false) << "\n";
  } else if (*cmd_eulerian) {
    dsym::MultiPoly p = dsym::eulerian_poly(eu_n, eu_k);
    out << (as_json ? dsym::to_json(p).dump() : dsym::to_string(p)) << "\n";
  } else if (*cmd_major) {
    dsym::MultiPoly p = dsym::major_poly(ma_n, ma_k);
    out << (as_json ? dsym::to_json(p).dump() : dsym::to_string(p)) << "\n";
  } else if (*cmd_series) {
    if (se_generators && se_hilbert) throw std::invalid_argument("choose one of --generators/--hilbert");
    dsym::PowerSeries s = se_generators ? dsym::generator_series(se_k, se_order)
                                        : dsym::hilbert_series(se_k, se_order);
    if (as_json) {
      out << dsym::to_json(s).dump() << "\n";
    } else {
      // Generator counts start at degree 1; dimensions at degree 0.
      bool first = true;
      for (int i = se_generators ? 1 : 0; i <= s.order(); ++i) {
        out << (first ? "" : ",") << s[i];
        first = false;
      }
      out << "\n";
    }
  } else if (*cmd_hopf) {
    if (*hopf_mul) {
      if (mul_basis == "R") {
        if (hopf_mul_k < 1) throw std::invalid_argument("--k is required for the R basis");
        dsym::CodeElement r = dsym::ribbon_product(dsym::parse_code(mul_args[0], hopf_mul_k),
                                                   dsym::parse_code(mul_args[1], hopf_mul_k));
        out << (as_json ? dsym::to_json(r).dump() : dsym::to_string(r)) << "\n";
      } else {
        dsym::HopfElement result;
        if (mul_basis == "F") {
          result = dsym::f_product(parse_operand(dsym::PermBasis::F, mul_args[0]),
                                   parse_operand(dsym::PermBasis::F, mul_args[1]));
        } else if (mul_basis == "G") {
          result = dsym::g_product(parse_operand(dsym::PermBasis::G, mul_args[0]),
                                   parse_operand(dsym::PermBasis::G, mul_args[1]));
        } else {
          // S and E multiply in G and convert back; the result is a single term.
          auto a = dsym::parse_permutation(mul_args[0]);
          auto b = dsym::parse_permutation(mul_args[1]);
          if (mul_basis == "S")
            result = dsym::g_to_s(dsym::g_product(dsym::s_elem(a), dsym::s_elem(b)));
          else
            result = dsym::g_to_e(dsym::g_product(dsym::e_elem(a), dsym::e_elem(b)));
        }
        out << (as_json ? dsym::to_json(result).dump() : dsym::to_string(result)) << "\n";
      }
    } else {
      if (cop_basis == "R") {
        if (hopf_cop_k < 1) throw std::invalid_argument("--k is required for the R basis");
        dsym::CodeTensorElement t = dsym::ribbon_coproduct(dsym::parse_code(cop_arg, hopf_cop_k));
        out << (as_json ? dsym::to_json(t).dump() : dsym::to_string(t)) << "\n";
      } else if (cop_basis == "F") {
        dsym::TensorElement t = dsym::f_coproduct(parse_operand(dsym::PermBasis::F, cop_arg));
        out << (as_json ? dsym::to_json(t).dump() : dsym::to_string(t)) << "\n";
      } else {
        dsym::TensorElement t = dsym::g_coproduct(parse_operand(dsym::PermBasis::G, cop_arg));
        out << (as_json ? dsym::to_json(t).dump() : dsym::to_string(t)) << "\n";
      }
    }
  } else if (*cmd_quotient) {
    if (*q_mul) {
      dsym::CodeElement r = dsym::fq_product(dsym::parse_code(q_mul_args[0], q_mul_k),
                                             dsym::parse_code(q_mul_args[1], q_mul_k));
      out << (as_json ? dsym::to_json(r).dump() : dsym::to_string(r)) << "\n";
    } else {
      dsym::CodeTensorElement t = dsym::fq_coproduct(dsym::parse_code(q_cop_arg, q_cop_k));
      out << (as_json ? dsym::to_json(t).dump() : dsym::to_string(t)) << "\n";
    }
  } else if (*cmd_verify) {
    dsym::VerifyOptions opts;
    opts.max_n = ve_max_n;
    opts.ks = parse_int_list(ve_ks);
    opts.order = ve_order;
    std::vector<dsym::VerificationReport> reports;
    if (ve_suite == "all")
      reports = dsym::run_all_suites(opts);
    else
      reports.push_back(dsym::run_suite(ve_suite, opts));
    bool ok = true;
    if (as_json) {
      json arr = json::array();
      for (const auto& r : reports) {
        json checks = json::array();
        for (const auto& c : r.checks) {
          json jc{{"id", c.id}, {"params", c.params}, {"status", c.pass ? "pass" : "fail"},
                  {"elapsed_ms", c.millis}};
          if (!c.pass) jc["witness"] = c.witness;
          checks.push_back(jc);
        }
        arr.push_back(json{{"suite", r.suite}, {"passed", r.passed()}, {"checks", checks}});
        ok = ok && r.passed();
      }
      out << arr.dump() << "\n";
    } else {
      for (const auto& r : reports) {
        for (const auto& c : r.checks) {
          out << (c.pass ? "[PASS] " : "[FAIL] ") << r.suite << "/" << c.id << " (" << c.params
              << ") " << static_cast<long long>(c.millis) << "ms\n";
          if (!c.pass) out << "       witness: " << c.witness << "\n";
        }
        out << "suite " << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
        ok = ok && r.passed();
      }
      out << "overall: " << (ok ? "PASS" : "FAIL") << "\n";
    }
    std::cout << out.str();
    return ok ? 0 : 2;
  }

  std::cout << out.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const dsym::NotInSubalgebraError& e) {
    std::cerr << "closure violation: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
