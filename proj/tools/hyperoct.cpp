// hyperoct: enumeration dumps, element construction, φ_λ tables, θ_n images
// and the verification harness.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage or
// configuration error (including the n guardrails), 3 value not available
// (ζ̃ of an even-order element, θ outside the Mantaci-Reutenauer algebra,
// no scalar action), 4 internal assertion failure.

#include <hyperoct/hyperoct.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace hyperoct;

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kNotAvailable = 3, kInternal = 4 };

constexpr int kVerifySoftCap = 4;

struct RunConfig {
  int n = 0;
  std::string kind;
  std::string p;
  std::string lambda;
  std::string checks = "all";
  std::string format = "table";
  std::string perm;
  unsigned jobs = 1;
  bool force = false;
  std::uint64_t seed = 1;
  int sign = 1;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

int hard_cap() {
  if (const char* env = std::getenv("HYPEROCT_MAX_N")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("HYPEROCT_MAX_N must be a positive integer, got '") + env + "'");
  }
  return kDefaultEnumerationLimit;
}

void guard_n(const RunConfig& cfg, int cap) {
  if (cfg.n < 1) throw UsageError("--n must be at least 1");
  if (cfg.n > cap && !cfg.force) {
    throw UsageError("n = " + std::to_string(cfg.n) + " exceeds the cap " + std::to_string(cap) +
                     " (|W_n| = " + hyperoctahedral_order(cfg.n).get_str() + "); pass --force or set HYPEROCT_MAX_N");
  }
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// rows of equal length; first row is the header
void print_rows(const std::vector<std::vector<std::string>>& rows, const std::string& format) {
  if (format == "csv") {
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) std::cout << (i ? "," : "") << csv_field(r[i]);
      std::cout << '\n';
    }
    return;
  }
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    width.resize(std::max(width.size(), r.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) line += "  ";
      line += i == 0 ? pad_right(r[i], width[i]) : pad_left(r[i], width[i]);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    std::cout << line << '\n';
  }
}

template <class Coeff>
void print_element(const AlgebraElement<Coeff>& u, const std::string& format) {
  if (format == "json") {
    std::cout << to_json(u).dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> rows{{"perm", "coeff"}};
  for (const auto& [idx, c] : u.terms()) rows.push_back({u.group().element(idx).one_row(), to_string(c)});
  print_rows(rows, format);
}

void print_class_function(const ClassFunction& f, const std::string& format) {
  if (format == "json") {
    std::cout << to_json(f).dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> rows{{"class", "value"}};
  for (std::size_t c = 0; c < f.values().size(); ++c) rows.push_back({f.labels()[c].label(), f[c].to_string()});
  print_rows(rows, format);
}

SignedComposition require_p(const RunConfig& cfg) {
  if (cfg.p.empty()) throw UsageError("--p is required for kind '" + cfg.kind + "'");
  SignedComposition p = parse_composition(cfg.p);
  if (p.n() != cfg.n) throw UsageError("--p " + p.label() + " is a composition of " + std::to_string(p.n()) + ", not of n = " + std::to_string(cfg.n));
  return p;
}

SignedPartition require_lambda(const RunConfig& cfg) {
  if (cfg.lambda.empty()) throw UsageError("--lambda is required for kind '" + cfg.kind + "'");
  SignedPartition l = parse_partition(cfg.lambda);
  if (l.n() != cfg.n) throw UsageError("--lambda " + l.label() + " is a partition of " + std::to_string(l.n()) + ", not of n = " + std::to_string(cfg.n));
  return l;
}

SignedPermutation require_perm(const RunConfig& cfg) {
  if (cfg.perm.empty()) throw UsageError("--perm is required for kind '" + cfg.kind + "'");
  SignedPermutation g = parse_one_row(cfg.perm);
  if (g.n() != cfg.n) throw UsageError("--perm has " + std::to_string(g.n()) + " entries, expected " + std::to_string(cfg.n));
  return g;
}

// Parses the parameters of a kind before any enumeration happens, so a
// well-formed request for a large n fails only at the guardrail.
void validate_parameters(const RunConfig& cfg) {
  static const std::vector<std::string> with_p = {"x", "xv", "e", "I-oracle"};
  static const std::vector<std::string> with_lambda = {"E", "etilde"};
  if (std::find(with_p.begin(), with_p.end(), cfg.kind) != with_p.end()) {
    const auto p = require_p(cfg);
    std::cerr << "composition " << p.label() << " of " << p.n() << " (" << p.length() << " parts)\n";
  } else if (std::find(with_lambda.begin(), with_lambda.end(), cfg.kind) != with_lambda.end()) {
    require_lambda(cfg);
  } else if (cfg.kind == "zeta" || cfg.kind == "zeta-tilde") {
    require_perm(cfg);
  } else if (cfg.kind == "eps") {
    if (cfg.sign != 1 && cfg.sign != -1) throw UsageError("--sign must be 1 or -1");
  } else if (cfg.kind != "r") {
    throw UsageError("unknown element kind '" + cfg.kind + "'");
  }
}

int cmd_enumerate(const RunConfig& cfg) {
  guard_n(cfg, hard_cap());
  const std::string kind = cfg.kind.empty() ? "classes" : cfg.kind;
  if (kind == "compositions") {
    const auto ps = enumerate_signed_compositions(cfg.n);
    if (cfg.format == "json") {
      Json out = Json::array();
      for (const auto& p : ps) out.push_back(Json{{"p", to_json(p)}, {"stab", integer_json(stab_order(p))}});
      std::cout << out.dump(2) << '\n';
      return kOk;
    }
    std::vector<std::vector<std::string>> rows{{"p", "stab"}};
    for (const auto& p : ps) rows.push_back({p.label(), stab_order(p).get_str()});
    print_rows(rows, cfg.format);
  } else if (kind == "classes") {
    const auto& labels = class_labels(cfg.n);
    const BigInt order = hyperoctahedral_order(cfg.n);
    if (cfg.format == "json") {
      Json out = Json::array();
      for (const auto& l : labels) {
        out.push_back(Json{{"lambda", l.label()},
                           {"centralizer", integer_json(centralizer_order(l))},
                           {"size", integer_json(order / centralizer_order(l))}});
      }
      std::cout << out.dump(2) << '\n';
      return kOk;
    }
    std::vector<std::vector<std::string>> rows{{"lambda", "centralizer", "size"}};
    for (const auto& l : labels) rows.push_back({l.label(), centralizer_order(l).get_str(), BigInt(order / centralizer_order(l)).get_str()});
    print_rows(rows, cfg.format);
  } else if (kind == "group") {
    const auto& G = hyperoctahedral_group(cfg.n);
    if (cfg.format == "json") {
      Json out = Json::array();
      for (const auto& w : G.elements()) {
        out.push_back(Json{{"perm", to_json(w)}, {"length", coxeter_length(w)}, {"class", signed_cycle_type(w).label()}});
      }
      std::cout << out.dump(2) << '\n';
      return kOk;
    }
    std::vector<std::vector<std::string>> rows{{"perm", "length", "class"}};
    for (const auto& w : G.elements()) rows.push_back({w.one_row(), std::to_string(coxeter_length(w)), signed_cycle_type(w).label()});
    print_rows(rows, cfg.format);
  } else {
    throw UsageError("unknown enumerate kind '" + kind + "' (compositions, classes, group)");
  }
  return kOk;
}

int cmd_element(const RunConfig& cfg) {
  if (cfg.kind.empty()) throw UsageError("--kind is required");
  if (cfg.n < 1) throw UsageError("--n must be at least 1");
  validate_parameters(cfg);
  guard_n(cfg, hard_cap());
  const std::string& k = cfg.kind;
  if (k == "etilde") {
    print_element(e_tilde_elem(require_lambda(cfg)), cfg.format);
  } else if (k == "zeta") {
    print_element(zeta(require_perm(cfg)), cfg.format);
  } else if (k == "zeta-tilde") {
    print_element(zeta_tilde(require_perm(cfg)), cfg.format);
  } else {
    RationalElement u(cfg.n);
    if (k == "x") u = x_elem(require_p(cfg));
    if (k == "xv") u = x_v_elem(require_p(cfg));
    if (k == "r") u = reutenauer_idem(cfg.n);
    if (k == "eps") u = eps_elem(cfg.n, Block{1, cfg.n}, cfg.sign);
    if (k == "e") u = e_elem(require_p(cfg));
    if (k == "E") u = E_elem(require_lambda(cfg));
    if (k == "I-oracle") u = vazirani_oracle(require_p(cfg));
    print_element(u, cfg.format);
  }
  return kOk;
}

// The class whose indicator θ(E_λ) is, if it is one.
std::optional<SignedPartition> indicator_label(const ClassFunction& f) {
  const auto support = f.support();
  if (support.size() == 1 && f.at(support.front()) == Cyclotomic(1)) return support.front();
  return std::nullopt;
}

int cmd_characters(const RunConfig& cfg) {
  guard_n(cfg, hard_cap());
  std::vector<SignedPartition> lambdas;
  if (cfg.lambda.empty()) {
    lambdas = class_labels(cfg.n);
  } else {
    lambdas.push_back(require_lambda(cfg));
  }
  std::vector<std::optional<PhiData>> phis(lambdas.size());
  std::vector<std::string> images(lambdas.size());
  parallel_for(lambdas.size(), cfg.jobs, [&](std::size_t i) {
    phis[i] = phi_fn(lambdas[i]);
    const auto label = indicator_label(theta(E_elem(lambdas[i])));
    images[i] = label ? label->label() : "none";
  });
  if (cfg.format == "json") {
    Json out = Json::array();
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      Json gens = Json::array();
      for (const auto& g : phis[i]->generators) {
        gens.push_back(Json{{"generator", g.generator.name()},
                            {"order", g.order},
                            {"phi", to_json(g.computed)},
                            {"expected", to_json(g.expected)},
                            {"match", g.computed == g.expected}});
      }
      out.push_back(Json{{"lambda", lambdas[i].label()}, {"generators", gens}, {"theta_E", images[i]}});
    }
    std::cout << out.dump(2) << '\n';
    return kOk;
  }
  std::vector<std::vector<std::string>> rows{{"lambda", "generator", "order", "phi", "expected", "theta(E)"}};
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    for (const auto& g : phis[i]->generators) {
      rows.push_back({lambdas[i].label(), g.generator.name(), std::to_string(g.order), g.computed.to_string(), g.expected.to_string(), images[i]});
    }
  }
  print_rows(rows, cfg.format);
  return kOk;
}

int cmd_theta(const RunConfig& cfg) {
  guard_n(cfg, hard_cap());
  const std::string kind = cfg.kind.empty() ? "E" : cfg.kind;
  RationalElement u(cfg.n);
  RunConfig c = cfg;
  c.kind = kind;
  if (kind == "x") u = x_elem(require_p(c));
  else if (kind == "xv") u = x_v_elem(require_p(c));
  else if (kind == "e") u = e_elem(require_p(c));
  else if (kind == "E") u = E_elem(require_lambda(c));
  else if (kind == "r") u = reutenauer_idem(cfg.n);
  else if (kind == "eps") u = eps_elem(cfg.n, Block{1, cfg.n}, cfg.sign);
  else throw UsageError("unknown theta kind '" + kind + "' (x, xv, e, E, r, eps)");
  print_class_function(theta(u), cfg.format);
  return kOk;
}

std::string join_pairs(const KeyValues& kv) {
  std::string s;
  for (const auto& [k, v] : kv) {
    if (!s.empty()) s += ' ';
    s += k + "=" + v;
  }
  return s;
}

int cmd_verify(const RunConfig& cfg) {
  const auto checks = parse_check_selector(cfg.checks);
  const int cap = hard_cap();
  if (cfg.n < 1) throw UsageError("--n must be at least 1");
  // everything but even-induction multiplies in the group algebra of W_n
  const bool heavy = std::any_of(checks.begin(), checks.end(), [](const std::string& c) { return c != "even-induction"; });
  const int soft = heavy ? std::min(kVerifySoftCap, cap) : cap;
  if (cfg.n > soft) {
    if (!cfg.force) {
      throw UsageError("verify at n = " + std::to_string(cfg.n) + " exceeds the cap " + std::to_string(soft) +
                       " for the selected checks; pass --force to run anyway");
    }
    if (cfg.n > cap) throw UsageError("n = " + std::to_string(cfg.n) + " exceeds the hard cap " + std::to_string(cap) + "; set HYPEROCT_MAX_N");
    std::cerr << "warning: verify at n = " << cfg.n << " may take minutes or more\n";
  }
  std::size_t done = 0;
  const auto report = verify_suite(cfg.n, checks, cfg.jobs, cfg.seed, [&](const CheckResult& r) {
    ++done;
    std::cerr << "[" << done << "] " << (r.passed ? "pass " : "FAIL ") << r.check << ' ' << join_pairs(r.parameters) << '\n';
  });

  if (cfg.format == "json") {
    Json out = to_json(report);
    out["checks"] = checks;
    out["seed"] = cfg.seed;
    std::cout << out.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    std::cout << "check,parameters,passed,witness\n";
    for (const auto& r : report.results) {
      std::cout << csv_field(r.check) << ',' << csv_field(join_pairs(r.parameters)) << ',' << (r.passed ? "true" : "false") << ','
                << csv_field(join_pairs(r.witness)) << '\n';
    }
  } else {
    for (const auto& r : report.results) {
      std::cout << (r.passed ? "PASS  " : "FAIL  ") << pad_right(r.check, 18) << join_pairs(r.parameters) << '\n';
      if (!r.passed) std::cout << "      " << join_pairs(r.witness) << '\n';
    }
    std::cout << "n=" << report.n << " tasks=" << report.results.size() << " failures=" << report.failures() << '\n';
  }
  return report.all_passed() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the group algebra of the hyperoctahedral group W_n"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "rank n of W_n")->required();
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1u, 256u));
    sub->add_flag("--force", cfg.force, "allow n above the default caps");
  };

  auto* enumerate = app.add_subcommand("enumerate", "list signed compositions, classes or group elements");
  add_common(enumerate);
  enumerate->add_option("--kind", cfg.kind, "compositions | classes | group");

  auto* element = app.add_subcommand("element", "build an element of the group algebra");
  add_common(element);
  element->add_option("--kind", cfg.kind, "x | xv | r | eps | e | E | etilde | I-oracle | zeta | zeta-tilde")->required();
  element->add_option("--p", cfg.p, "signed composition, e.g. -1,3,-2");
  element->add_option("--lambda", cfg.lambda, "signed partition, e.g. 2,-1");
  element->add_option("--sign", cfg.sign, "sign for eps (1 or -1)");
  element->add_option("--perm", cfg.perm, "signed permutation in one-row form, e.g. 2,-1,3");

  auto* characters = app.add_subcommand("characters", "phi_lambda on centralizer generators and theta(E_lambda)");
  add_common(characters);
  characters->add_option("--lambda", cfg.lambda, "signed partition (default: all)");

  auto* theta_cmd = app.add_subcommand("theta", "image of an element of the Mantaci-Reutenauer algebra under theta_n");
  add_common(theta_cmd);
  theta_cmd->add_option("--kind", cfg.kind, "x | xv | e | E | r | eps (default E)");
  theta_cmd->add_option("--p", cfg.p, "signed composition");
  theta_cmd->add_option("--lambda", cfg.lambda, "signed partition");
  theta_cmd->add_option("--sign", cfg.sign, "sign for eps (1 or -1)");

  auto* verify = app.add_subcommand("verify", "run the verification checks");
  add_common(verify);
  verify->add_option("--checks", cfg.checks, "all, a comma list of check names, or letters a-g");
  verify->add_option("--seed", cfg.seed, "seed for randomized property checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    set_enumeration_limit(hard_cap());
    if (enumerate->parsed()) return cmd_enumerate(cfg);
    if (element->parsed()) return cmd_element(cfg);
    if (characters->parsed()) return cmd_characters(cfg);
    if (theta_cmd->parsed()) return cmd_theta(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const LimitExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const AssertionFailure& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const Error& e) {
    std::cerr << "not available: " << e.what() << '\n';
    return kNotAvailable;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
