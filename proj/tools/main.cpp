// thetalift: command-line front end.
// Exit status: 0 ok, 1 mismatch (or zero lift with --expect-nonzero),
// 2 usage or input error.

#include "thetalift/enumerate.hpp"
#include "thetalift/exact.hpp"
#include "thetalift/ktypes.hpp"
#include "thetalift/langlands.hpp"
#include "thetalift/lkt.hpp"
#include "thetalift/notation.hpp"
#include "thetalift/tables.hpp"
#include "thetalift/theta.hpp"
#include "thetalift/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace tl;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<int, int> parse_sig(const std::string& s) {
  std::string t = s;
  if (t.rfind("O(", 0) == 0 && t.back() == ')') t = t.substr(2, t.size() - 3);
  auto comma = t.find(',');
  if (comma == std::string::npos) throw UsageError("signature must be p,q");
  try {
    std::size_t a = 0, b = 0;
    int p = std::stoi(t.substr(0, comma), &a);
    int q = std::stoi(t.substr(comma + 1), &b);
    if (a != comma || b != t.size() - comma - 1 || p < 0 || q < 0) throw UsageError("bad signature " + s);
    return {p, q};
  } catch (const std::logic_error&) {
    throw UsageError("bad signature " + s);
  }
}

json uk_json(const std::vector<UKType>& v) {
  json a = json::array();
  for (const auto& t : v) a.push_back(to_string(t));
  return a;
}

std::string uk_text(const std::vector<UKType>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return out + "}";
}

template <class P>
P checked(const P& x) {
  auto bad = validate(x);
  if (!bad.empty()) {
    std::string msg = "invalid parameters:";
    for (auto& b : bad) msg += "\n  " + b;
    throw UsageError(msg);
  }
  return canonicalize(x);
}

AnyParams checked_any(const std::string& text) {
  AnyParams a = parse_params(text);
  if (auto* s = std::get_if<SpParams>(&a)) return checked(*s);
  return checked(std::get<OParams>(a));
}

OParams checked_o(const std::string& text) {
  AnyParams a = checked_any(text);
  if (!std::holds_alternative<OParams>(a)) throw UsageError("expected O(p,q) parameters (pi_{zeta}(...) @ O(p,q))");
  return std::get<OParams>(a);
}

void emit(bool as_json, const json& j, const std::string& text) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

json report_json(const VerificationReport& r) {
  json j;
  j["suite"] = r.suite;
  j["cases"] = r.cases.size();
  j["failed"] = r.failed();
  json counts = json::object();
  for (const auto& [k, v] : r.counts) counts[k] = v;
  j["counts"] = counts;
  json fails = json::array();
  for (const auto& c : r.cases)
    if (!c.ok) fails.push_back({{"name", c.name}, {"detail", c.detail}});
  j["failures"] = fails;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Theta lifts for O(p,q) x Sp(2n,R) with p+q = 4, lowest K-types and parameter lists"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  std::string table_dir;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--table-dir", table_dir, "read lift tables from this directory")->envname("THETALIFT_TABLE_DIR");

  std::string params_text, sp_text, ktype_text, sig_text, dir, infchar_text, beta_text, suite;
  int n = -1;
  bool expect_nonzero = false, verbose = false;

  auto* lift = app.add_subcommand("lift", "theta_n of O(p,q) parameters, p+q = 4");
  lift->add_option("--params", params_text, "O(p,q) parameters")->required();
  lift->add_option("--n", n, "rank of Sp(2n,R)")->required()->check(CLI::NonNegativeNumber);
  lift->add_flag("--expect-nonzero", expect_nonzero, "exit 1 when the lift is zero");

  auto* inf = app.add_subcommand("infchar", "infinitesimal character of parameters");
  inf->add_option("--params", params_text, "Sp or O parameters")->required();

  auto* lkt = app.add_subcommand("lkt", "lowest K-types of parameters");
  lkt->add_option("--params", params_text, "Sp or O parameters")->required();

  auto* phi = app.add_subcommand("phi", "joint harmonics correspondence of K-types");
  phi->add_option("--dir", dir, "o2u or u2o")->required()->check(CLI::IsMember({"o2u", "u2o"}));
  phi->add_option("--ktype", ktype_text, "K-type, e.g. (2,0;-1)x(0;-1) or (1,0,-1)")->required();
  phi->add_option("--sig", sig_text, "p,q")->required();
  phi->add_option("--n", n, "rank of Sp(2n,R)")->required()->check(CLI::NonNegativeNumber);

  auto* en = app.add_subcommand("enumerate", "all Sp(2n,R) parameters with an infinitesimal character");
  en->add_option("--n", n, "rank, at most 4")->required()->check(CLI::Range(0, kMaxEnumN));
  en->add_option("--infchar", infchar_text, "entries; 'b' stands for --beta")->required();
  en->add_option("--beta", beta_text, "value of b, or 'generic'");

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  ver->add_flag("--verbose", verbose, "list passing cases too");

  auto* fo = app.add_subcommand("first-occurrence", "first occurrence index, p+q = 4");
  fo->add_option("--params", params_text, "O(p,q) parameters")->required();

  auto* inv = app.add_subcommand("inverse-lookup", "O(p,q) parameters lifting to given Sp parameters");
  inv->add_option("--sp-params", sp_text, "Sp parameters")->required();
  inv->add_option("--sig", sig_text, "p,q")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (!table_dir.empty()) use_table_dir(table_dir);

    if (*lift) {
      OParams x = checked_o(params_text);
      ThetaResult r = theta_n(x, n);
      json j{{"input", render(x)}, {"n", n}, {"zero", r.zero}};
      std::string text;
      if (r.zero) {
        text = "0\n";
      } else {
        j["lift"] = render(r.params);
        j["provenance"] = r.provenance;
        j["lowest_ktypes"] = uk_json(lowest_ktypes_sp(r.params));
        text = render(r.params) + "\n  from " + r.provenance + "\n";
      }
      emit(as_json, j, text);
      return r.zero && expect_nonzero ? 1 : 0;
    }

    if (*inf) {
      AnyParams x = checked_any(params_text);
      InfChar c = std::visit([](const auto& y) { return infchar_of(y); }, x);
      emit(as_json, json{{"input", render(x)}, {"infchar", to_string(c)}}, to_string(c) + "\n");
      return 0;
    }

    if (*lkt) {
      AnyParams x = checked_any(params_text);
      json j{{"input", render(x)}};
      std::string text;
      if (auto* s = std::get_if<SpParams>(&x)) {
        auto v = lowest_ktypes_sp(*s);
        j["lowest_ktypes"] = uk_json(v);
        text = uk_text(v) + "\n";
      } else {
        auto v = lowest_ktypes_o(std::get<OParams>(x));
        json a = json::array();
        text = "{";
        for (std::size_t i = 0; i < v.size(); ++i) {
          a.push_back(to_string(v[i]));
          text += (i ? "," : "") + to_string(v[i]);
        }
        text += "}\n";
        j["lowest_ktypes"] = a;
      }
      emit(as_json, j, text);
      return 0;
    }

    if (*phi) {
      auto [p, q] = parse_sig(sig_text);
      if ((p + q) % 2) throw UsageError("p+q must be even");
      json j{{"dir", dir}, {"sig", {p, q}}, {"n", n}};
      std::string out;
      if (dir == "o2u") {
        OKType s = parse_oktype(ktype_text, p, q);
        check_oktype(s);
        auto u = phi_n(s, n);
        j["input"] = to_string(s.canonical());
        j["image"] = u ? json(to_string(*u)) : json(nullptr);
        out = u ? to_string(*u) : "0";
      } else {
        UKType u = parse_uktype(ktype_text);
        check_uktype(u);
        if (static_cast<int>(u.w.size()) != n) throw UsageError("U(n)-type must have n entries");
        auto s = phi_pq(u, p, q);
        j["input"] = to_string(u);
        j["image"] = s ? json(to_string(*s)) : json(nullptr);
        out = s ? to_string(*s) : "0";
      }
      emit(as_json, j, out + "\n");
      return 0;
    }

    if (*en) {
      Scalar beta = generic_scalar();
      bool has_beta = !beta_text.empty();
      if (has_beta && beta_text != "generic") beta = parse_scalar(beta_text);
      std::vector<Scalar> entries;
      std::string body = infchar_text;
      if (!body.empty() && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
      std::stringstream ss(body);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        tok.erase(0, tok.find_first_not_of(' '));
        tok.erase(tok.find_last_not_of(' ') + 1);
        if (tok == "b" || tok == "beta") {
          if (!has_beta) throw UsageError("'b' in --infchar needs --beta");
          entries.push_back(beta);
        } else if (!tok.empty()) {
          entries.push_back(parse_scalar(tok));
        }
      }
      InfChar target = canonical_infchar(entries);
      if (static_cast<int>(target.size()) != n) throw UsageError("--infchar must have n entries");
      auto list = enumerate_sp_reps(n, target);
      json a = json::array();
      std::string text;
      for (const auto& x : list) {
        auto l = lowest_ktypes_sp(x);
        a.push_back({{"params", render(x)}, {"lowest_ktypes", uk_json(l)}});
        text += render(x) + "  " + uk_text(l) + "\n";
      }
      text += std::to_string(list.size()) + " parameter(s)\n";
      emit(as_json, json{{"n", n}, {"infchar", to_string(target)}, {"count", list.size()}, {"params", a}}, text);
      return 0;
    }

    if (*ver) {
      VerificationReport r = run_suite(suite);
      std::string text;
      for (const auto& c : r.cases)
        if (!c.ok || verbose) text += std::string(c.ok ? "ok   " : "FAIL ") + c.name + (c.detail.empty() ? "" : "  " + c.detail) + "\n";
      for (const auto& [k, v] : r.counts) text += "  " + k + ": " + std::to_string(v) + "\n";
      text += r.suite + ": " + std::to_string(r.cases.size() - r.failed()) + "/" + std::to_string(r.cases.size()) + " passed\n";
      emit(as_json, report_json(r), text);
      return r.ok() ? 0 : 1;
    }

    if (*fo) {
      OParams x = checked_o(params_text);
      int k = first_occurrence(x);
      emit(as_json, json{{"input", render(x)}, {"first_occurrence", k}}, std::to_string(k) + "\n");
      return 0;
    }

    if (*inv) {
      auto [p, q] = parse_sig(sig_text);
      AnyParams a = checked_any(sp_text);
      if (!std::holds_alternative<SpParams>(a)) throw UsageError("--sp-params must be Sp parameters");
      auto found = inverse_lookup(std::get<SpParams>(a), p, q);
      json arr = json::array();
      std::string text;
      for (const auto& x : found) {
        arr.push_back(render(x));
        text += render(x) + "\n";
      }
      if (found.empty()) text = "no preimage found\n";
      emit(as_json, json{{"input", render(a)}, {"sig", {p, q}}, {"preimages", arr}}, text);
      return found.empty() ? 1 : 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ThetaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
