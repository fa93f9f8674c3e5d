#pragma once

// Mechanical verification of the identities satisfied by e_p, E_λ, ẽ_λ,
// φ_λ and θ_n for a fixed n. Each check expands into independent tasks;
// results come back in task order whatever the number of threads.

#include <hyperoct/algebra_element.hpp>
#include <hyperoct/centralizer.hpp>
#include <hyperoct/characters.hpp>
#include <hyperoct/class_function.hpp>
#include <hyperoct/combinatorics.hpp>
#include <hyperoct/errors.hpp>
#include <hyperoct/idempotents.hpp>
#include <hyperoct/linear_algebra.hpp>
#include <hyperoct/mantaci_reutenauer.hpp>
#include <hyperoct/parallel.hpp>

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hyperoct {

using KeyValues = std::vector<std::pair<std::string, std::string>>;

struct CheckResult {
  std::string check;
  KeyValues parameters;
  bool passed = true;
  KeyValues witness;  // empty when passed
};

struct VerifyReport {
  int n = 0;
  std::vector<CheckResult> results;

  bool all_passed() const {
    for (const auto& r : results) {
      if (!r.passed) return false;
    }
    return true;
  }
  std::size_t failures() const {
    std::size_t k = 0;
    for (const auto& r : results) k += r.passed ? 0 : 1;
    return k;
  }
};

/// Check names in execution order. Letters a-g are accepted as aliases
/// for induced, regular, even-induction, theta-quasi, theta-idempotents,
/// homomorphism and ideals.
inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "idempotents", "reutenauer",  "oracle",           "scalar-action", "induced", "regular", "even-induction",
      "theta-r",     "theta-quasi", "theta-idempotents", "homomorphism", "ideals",  "structure"};
  return names;
}

inline std::vector<std::string> parse_check_selector(std::string_view text) {
  static const std::vector<std::pair<std::string, std::string>> aliases = {
      {"a", "induced"},     {"b", "regular"},           {"c", "even-induction"}, {"d", "theta-quasi"},
      {"e", "theta-idempotents"}, {"f", "homomorphism"}, {"g", "ideals"}};
  std::vector<bool> chosen(check_names().size(), false);
  std::string token;
  auto flush = [&] {
    if (token.empty()) throw InvalidArgument("empty entry in check list");
    if (token == "all") {
      chosen.assign(chosen.size(), true);
    } else {
      std::string name = token;
      for (const auto& [alias, full] : aliases) {
        if (token == alias) name = full;
      }
      auto it = std::find(check_names().begin(), check_names().end(), name);
      if (it == check_names().end()) throw InvalidArgument("unknown check '" + token + "'");
      chosen[static_cast<std::size_t>(it - check_names().begin())] = true;
    }
    token.clear();
  };
  for (char ch : text) {
    if (ch == ' ') continue;
    if (ch == ',') {
      flush();
    } else {
      token += ch;
    }
  }
  flush();
  std::vector<std::string> out;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    if (chosen[i]) out.push_back(check_names()[i]);
  }
  return out;
}

/// Lazily computed e_p, E_λ and φ_λ for one n, safe to share between threads.
class Workspace {
 public:
  explicit Workspace(int n)
      : n_(n),
        compositions_(enumerate_signed_compositions(n)),
        partitions_(class_labels(n)),
        e_(compositions_.size(), std::nullopt),
        e_once_(std::make_unique<std::once_flag[]>(compositions_.size())),
        E_(partitions_.size(), std::nullopt),
        E_once_(std::make_unique<std::once_flag[]>(partitions_.size())),
        phi_(partitions_.size(), std::nullopt),
        phi_once_(std::make_unique<std::once_flag[]>(partitions_.size())) {
    hyperoctahedral_group(n);
  }

  int n() const { return n_; }
  const std::vector<SignedComposition>& compositions() const { return compositions_; }
  const std::vector<SignedPartition>& partitions() const { return partitions_; }

  const RationalElement& e(const SignedComposition& p) const {
    const std::size_t i = composition_index(p);
    std::call_once(e_once_[i], [&] { e_[i] = e_elem(p); });
    return *e_[i];
  }

  const RationalElement& E(const SignedPartition& lambda) const {
    const std::size_t i = class_position(lambda);
    std::call_once(E_once_[i], [&] { E_[i] = E_elem(lambda); });
    return *E_[i];
  }

  /// φ_λ; a failure to act by scalars is rethrown on every call.
  const PhiData& phi(const SignedPartition& lambda) const {
    const std::size_t i = class_position(lambda);
    std::call_once(phi_once_[i], [&] {
      try {
        phi_[i] = phi_fn(lambda);
      } catch (const Error& err) {
        phi_error_[i] = err.what();
      }
    });
    if (!phi_[i]) throw ScalarActionFailure(phi_error_.at(i));
    return *phi_[i];
  }

 private:
  std::size_t composition_index(const SignedComposition& p) const {
    auto it = std::find(compositions_.begin(), compositions_.end(), p);
    if (it == compositions_.end()) throw InvalidArgument("not a signed composition of " + std::to_string(n_));
    return static_cast<std::size_t>(it - compositions_.begin());
  }

  int n_;
  std::vector<SignedComposition> compositions_;
  std::vector<SignedPartition> partitions_;
  mutable std::vector<std::optional<RationalElement>> e_;
  std::unique_ptr<std::once_flag[]> e_once_;
  mutable std::vector<std::optional<RationalElement>> E_;
  std::unique_ptr<std::once_flag[]> E_once_;
  mutable std::vector<std::optional<PhiData>> phi_;
  mutable std::map<std::size_t, std::string> phi_error_;
  std::unique_ptr<std::once_flag[]> phi_once_;
};

namespace detail {

struct Outcome {
  bool passed = true;
  KeyValues witness;
};

inline Outcome pass() { return {}; }
inline Outcome fail(KeyValues witness) { return {false, std::move(witness)}; }

template <class Coeff>
KeyValues element_difference(const std::string& claim, const AlgebraElement<Coeff>& left, const AlgebraElement<Coeff>& right) {
  const auto& G = left.group();
  for (HyperoctahedralGroup::Index k = 0; k < G.order(); ++k) {
    const Coeff a = left.coefficient(k);
    const Coeff b = right.coefficient(k);
    if (a != b) {
      return {{"claim", claim}, {"perm", G.element(k).one_row()}, {"left", to_string(a)}, {"right", to_string(b)}};
    }
  }
  return {{"claim", claim}};
}

inline KeyValues class_difference(const std::string& claim, const ClassFunction& left, const ClassFunction& right) {
  for (std::size_t c = 0; c < left.values().size(); ++c) {
    if (left[c] != right[c]) {
      return {{"claim", claim}, {"class", left.labels()[c].label()}, {"left", left[c].to_string()}, {"right", right[c].to_string()}};
    }
  }
  return {{"claim", claim}};
}

struct Task {
  std::string check;
  KeyValues parameters;
  std::function<Outcome()> run;
};

inline KeyValues params(int n) { return {{"n", std::to_string(n)}}; }
inline KeyValues params(int n, const std::string& key, const std::string& value) {
  return {{"n", std::to_string(n)}, {key, value}};
}

inline ClassFunction u_sum(const std::vector<SignedPartition>& labels) {
  ClassFunction f(labels.front().n());
  for (const auto& l : labels) f += u_fn(l);
  return f;
}

/// a^{ℓ-1} (ℓ-1)! 2^{ℓ-1} μ(a) on (a^ℓ) and its negative on (ā^ℓ), a odd, m = aℓ.
inline ClassFunction even_induction_closed_form(int m) {
  ClassFunction f(m);
  for (int a = 1; a <= m; a += 2) {
    if (m % a != 0) continue;
    const int ell = m / a;
    BigInt v = 1;
    for (int i = 0; i < ell - 1; ++i) v *= a;
    v *= factorial(ell - 1) * pow2(ell - 1) * mobius(a);
    f.at(SignedPartition(std::vector<int>(static_cast<std::size_t>(ell), a))) = Cyclotomic(Rational(v));
    f.at(SignedPartition(std::vector<int>(static_cast<std::size_t>(ell), -a))) = Cyclotomic(Rational(-v));
  }
  return f;
}

inline Outcome check_power_types(int m) {
  const Block all{1, m};
  const SignedPermutation c = positive_cycle(m, all);
  const SignedPermutation w0c_base = longest_element(m);
  const SignedPermutation d = negative_cycle(m, all);
  for (int j = 1; j <= 2 * m; ++j) {
    std::vector<std::pair<PowerKind, SignedPermutation>> cases;
    if (j <= m) {
      cases.emplace_back(PowerKind::C, c.pow(j));
      cases.emplace_back(PowerKind::W0C, w0c_base * c.pow(j));
    }
    cases.emplace_back(PowerKind::D, d.pow(j));
    for (const auto& [kind, g] : cases) {
      const auto predicted = power_cycle_type(kind, m, j);
      const auto actual = signed_cycle_type(g);
      if (!(predicted == actual)) {
        const char* name = kind == PowerKind::C ? "c" : kind == PowerKind::W0C ? "w0c" : "d";
        return fail({{"claim", "power cycle type"},
                     {"kind", name},
                     {"j", std::to_string(j)},
                     {"predicted", predicted.label()},
                     {"actual", actual.label()}});
      }
    }
  }
  return pass();
}

inline Outcome check_even_induction(int m) {
  Outcome types = check_power_types(m);
  if (!types.passed) return types;
  const Block all{1, m};
  const SignedPermutation c = positive_cycle(m, all);
  const SignedPermutation w0 = longest_element(m);
  const SignedPermutation d = negative_cycle(m, all);
  const CyclotomicElement ez = to_cyclotomic(eps_elem(m, all, -1)) * zeta(c);
  const CyclotomicElement zd = zeta(d);
  const ClassFunction from_c = induce(scalar_character(ez, {c, w0}));
  const ClassFunction from_d = induce(scalar_character(zd, {d}));
  const ClassFunction closed = even_induction_closed_form(m);
  if (from_c != chi_of_idempotent(ez)) return fail(class_difference("induced from <c,w0> vs right ideal character", from_c, chi_of_idempotent(ez)));
  if (from_d != chi_of_idempotent(zd)) return fail(class_difference("induced from <d> vs right ideal character", from_d, chi_of_idempotent(zd)));
  if (from_c != from_d) return fail(class_difference("induced from <c,w0> vs induced from <d>", from_c, from_d));
  if (from_c != closed) return fail(class_difference("induced from <c,w0> vs closed form", from_c, closed));
  if (from_d != closed) return fail(class_difference("induced from <d> vs closed form", from_d, closed));
  for (const auto& l : from_c.support()) {
    const int a = std::abs(l.part(0));
    for (int x : l.parts()) {
      if (x != l.part(0) || a * l.length() != m) return fail({{"claim", "support in (a^l), (-a^l)"}, {"class", l.label()}});
    }
  }
  return pass();
}

inline Outcome check_theta_r(int m) {
  const Block all{1, m};
  const SignedPartition pos({m});
  const SignedPartition neg({-m});
  const RationalElement r = reutenauer_idem(m);
  const ClassFunction tr = theta(r);
  const ClassFunction both = u_fn(pos) + u_fn(neg);
  if (tr != both) return fail(class_difference("theta(r_m) = u_(m) + u_(-m)", tr, both));
  const ClassFunction tp = theta(eps_elem(m, all, 1) * r);
  const ClassFunction tm = theta(eps_elem(m, all, -1) * r);
  const ClassFunction want_p = u_fn(m % 2 == 1 ? pos : neg);
  const ClassFunction want_m = u_fn(m % 2 == 0 ? pos : neg);
  if (tp != want_p) return fail(class_difference("theta(eps+ r_m)", tp, want_p));
  if (tm != want_m) return fail(class_difference("theta(eps- r_m)", tm, want_m));
  return pass();
}

inline Outcome check_structure_basis(int n) {
  const auto& B = mr_basis(n);
  if (!B.independent()) {
    return fail({{"claim", "x_p linearly independent"}, {"rank", std::to_string(B.rank())}, {"size", std::to_string(B.compositions().size())}});
  }
  const auto& G = hyperoctahedral_group(n);
  RationalMatrix V(B.compositions().size(), G.order());
  for (std::size_t j = 0; j < B.compositions().size(); ++j) {
    const RationalElement xv = x_v_elem(B.compositions()[j]);
    B.coordinates(xv);  // throws NotInSubalgebra outside the span of x_p
    for (const auto& [idx, c] : xv.terms()) V.at(j, idx) = c;
  }
  if (rank(V) != B.compositions().size()) return fail({{"claim", "x_p^v span the span of x_p"}, {"rank", std::to_string(rank(V))}});
  const auto& labels = class_labels(n);
  RationalMatrix T(B.compositions().size(), labels.size());
  for (std::size_t j = 0; j < B.compositions().size(); ++j) {
    const ClassFunction t = theta(B.elements()[j]);
    for (std::size_t c = 0; c < labels.size(); ++c) T.at(j, c) = t[c].to_rational();
  }
  if (rank(T) != labels.size()) return fail({{"claim", "theta_n surjective"}, {"rank", std::to_string(rank(T))}});
  return pass();
}

inline Outcome check_class_equation(int n) {
  const auto& G = hyperoctahedral_group(n);
  const BigInt order = hyperoctahedral_order(n);
  BigInt total = 0;
  for (const auto& l : class_labels(n)) {
    const BigInt size = order / centralizer_order(l);
    total += size;
    if (BigInt(static_cast<unsigned long>(G.class_members(G.class_index(l)).size())) != size) {
      return fail({{"claim", "class size = |W_n|/|Z(w_lambda)|"}, {"class", l.label()}});
    }
  }
  if (total != order) return fail({{"claim", "class equation"}, {"sum", total.get_str()}});
  return pass();
}

inline Outcome check_centralizer(const SignedPartition& lambda) {
  const auto cyc = make_cycles(lambda);
  if (!(signed_cycle_type(cyc.w) == lambda)) {
    return fail({{"claim", "cycle type of w_lambda"}, {"actual", signed_cycle_type(cyc.w).label()}});
  }
  for (const auto& g : centralizer_generators(lambda)) {
    if (g.element * cyc.w != cyc.w * g.element) return fail({{"claim", "generator commutes with w_lambda"}, {"generator", g.name()}});
  }
  const auto Z = centralizer_elements(lambda);
  if (BigInt(static_cast<unsigned long>(Z.size())) != centralizer_order(lambda)) {
    return fail({{"claim", "generated subgroup order"}, {"actual", std::to_string(Z.size())}, {"expected", centralizer_order(lambda).get_str()}});
  }
  return pass();
}

inline std::vector<Task> build_tasks(const Workspace& ws, const std::vector<std::string>& checks, std::uint64_t seed) {
  const int n = ws.n();
  const auto& G = hyperoctahedral_group(n);
  std::vector<Task> tasks;
  auto selected = [&](const char* name) { return std::find(checks.begin(), checks.end(), name) != checks.end(); };

  if (selected("idempotents")) {
    for (const auto& p : ws.compositions()) {
      tasks.push_back({"idempotents", params(n, "p", p.label()), [&ws, p] {
                         const RationalElement& e = ws.e(p);
                         const RationalElement sq = e * e;
                         const RationalElement want = e * Rational(stab_order(p));
                         if (sq != want) return fail(element_difference("e_p^2 = |Stab(p)| e_p", sq, want));
                         for (const auto& q : rearrangements(rearrange(p))) {
                           const RationalElement pq = e * ws.e(q);
                           const RationalElement w = ws.e(q) * Rational(stab_order(q));
                           if (pq != w) {
                             auto wit = element_difference("e_p e_q = |Stab(q)| e_q", pq, w);
                             wit.emplace_back("q", q.label());
                             return fail(wit);
                           }
                         }
                         return pass();
                       }});
    }
    for (const auto& l : ws.partitions()) {
      tasks.push_back({"idempotents", params(n, "lambda", l.label()), [&ws, l] {
                         const RationalElement& E = ws.E(l);
                         const RationalElement sq = E * E;
                         if (sq != E) return fail(element_difference("E^2 = E", sq, E));
                         for (const auto& mu : ws.partitions()) {
                           if (mu == l) continue;
                           const RationalElement prod = E * ws.E(mu);
                           if (!prod.is_zero()) {
                             auto wit = element_difference("E_lambda E_mu = 0", prod, RationalElement(prod.group()));
                             wit.emplace_back("mu", mu.label());
                             return fail(wit);
                           }
                         }
                         return pass();
                       }});
    }
    tasks.push_back({"idempotents", params(n, "claim", "sum of E_lambda"), [&ws, n] {
                       RationalElement S(n);
                       for (const auto& l : ws.partitions()) S += ws.E(l);
                       const RationalElement id = RationalElement::identity(n);
                       if (S != id) return fail(element_difference("sum E_lambda = id", S, id));
                       return pass();
                     }});
  }

  if (selected("reutenauer")) {
    for (int m = 1; m <= n; ++m) {
      tasks.push_back({"reutenauer", params(n, "m", std::to_string(m)), [m] {
                         const RationalElement a = reutenauer_idem(m);
                         const RationalElement b = reutenauer_idem_via_compositions(m);
                         if (a != b) return fail(element_difference("descent-class and composition forms agree", a, b));
                         const RationalElement sq = a * a;
                         if (sq != a) return fail(element_difference("r_m^2 = r_m", sq, a));
                         return pass();
                       }});
    }
  }

  if (selected("oracle")) {
    for (const auto& p : ws.compositions()) {
      tasks.push_back({"oracle", params(n, "p", p.label()), [&ws, p] {
                         const RationalElement I = vazirani_oracle(p);
                         if (I != ws.e(p)) return fail(element_difference("I_p = e_p", I, ws.e(p)));
                         if (p.all_positive() && min_coset_reps(p) != concatenation_reps(p)) {
                           return fail({{"claim", "X_p = {w_(J_1,...,J_k)}"}});
                         }
                         return pass();
                       }});
    }
  }

  if (selected("scalar-action")) {
    for (std::size_t li = 0; li < ws.partitions().size(); ++li) {
      const SignedPartition l = ws.partitions()[li];
      const std::uint64_t task_seed = seed + li;
      tasks.push_back({"scalar-action", params(n, "lambda", l.label()), [&ws, &G, l, task_seed] {
                         const PhiData& phi = ws.phi(l);
                         for (const auto& g : phi.generators) {
                           if (g.computed != g.expected) {
                             return fail({{"claim", "generator scalar"},
                                          {"generator", g.generator.name()},
                                          {"computed", g.computed.to_string()},
                                          {"expected", g.expected.to_string()}});
                           }
                         }
                         // multiplicativity on random pairs of centralizer elements
                         std::mt19937_64 rng(task_seed);
                         const auto& H = phi.character;
                         std::uniform_int_distribution<std::size_t> pick(0, H.order() - 1);
                         for (int trial = 0; trial < 200; ++trial) {
                           const std::size_t a = pick(rng);
                           const std::size_t b = pick(rng);
                           const auto prod = G.multiply(H.elements[a], H.elements[b]);
                           if (H.value(prod) != H.values[a] * H.values[b]) {
                             return fail({{"claim", "phi(z1 z2) = phi(z1) phi(z2)"},
                                          {"z1", G.element(H.elements[a]).one_row()},
                                          {"z2", G.element(H.elements[b]).one_row()}});
                           }
                         }
                         return pass();
                       }});
    }
  }

  if (selected("induced")) {
    for (const auto& l : ws.partitions()) {
      tasks.push_back({"induced", params(n, "lambda", l.label()), [&ws, l, n] {
                         const ClassFunction chi = chi_of_idempotent(ws.E(l), false);
                         const ClassFunction ind = induce(ws.phi(l).character);
                         if (chi != ind) return fail(class_difference("character of E_lambda CW_n = Ind(phi_lambda)", chi, ind));
                         const SignedPartition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
                         const Cyclotomic degree(make_rational(hyperoctahedral_order(n), centralizer_order(l)));
                         if (ind.at(ones) != degree) {
                           return fail({{"claim", "degree = [W_n : Z(w_lambda)]"}, {"left", ind.at(ones).to_string()}, {"right", degree.to_string()}});
                         }
                         return pass();
                       }});
    }
  }

  if (selected("regular")) {
    tasks.push_back({"regular", params(n), [&ws, n] {
                       ClassFunction total(n);
                       for (const auto& l : ws.partitions()) total += induce(ws.phi(l).character);
                       const ClassFunction rho = regular_character(n);
                       if (total != rho) return fail(class_difference("sum of Ind(phi_lambda) = regular character", total, rho));
                       return pass();
                     }});
  }

  if (selected("even-induction")) {
    for (int m = 1; m <= n; ++m) {
      tasks.push_back({"even-induction", params(n, "m", std::to_string(m)), [m] { return check_even_induction(m); }});
    }
  }

  if (selected("theta-r")) {
    for (int m = 1; m <= n; ++m) {
      tasks.push_back({"theta-r", params(n, "m", std::to_string(m)), [m] { return check_theta_r(m); }});
    }
  }

  if (selected("theta-quasi")) {
    for (const auto& p : ws.compositions()) {
      tasks.push_back({"theta-quasi", params(n, "p", p.label()), [&ws, p] {
                         const ClassFunction t = theta(ws.e(p));
                         const SignedPartition target = rearrange(prime(p));
                         BigInt denom = pow2(p.length());
                         for (int x : p.parts()) denom *= std::abs(x);
                         for (const auto& mu : class_labels(p.n())) {
                           const Cyclotomic got = inner_product(t, u_fn(mu));
                           const Cyclotomic want = mu == target ? Cyclotomic(make_rational(BigInt(1), denom)) : Cyclotomic();
                           if (got != want) {
                             return fail({{"claim", "<theta(e_p), u_mu>"}, {"class", mu.label()}, {"left", got.to_string()}, {"right", want.to_string()}});
                           }
                         }
                         return pass();
                       }});
    }
  }

  if (selected("theta-idempotents")) {
    for (const auto& l : ws.partitions()) {
      tasks.push_back({"theta-idempotents", params(n, "lambda", l.label()), [&ws, l] {
                         const ClassFunction t = theta(ws.E(l));
                         const ClassFunction want = u_fn(rearrange(prime(l)));
                         if (t != want) return fail(class_difference("theta(E_lambda) = u_<-lambda'", t, want));
                         const ClassFunction viae = theta(ws.e(l)) * Cyclotomic(make_rational(BigInt(1), stab_order(l)));
                         if (t != viae) return fail(class_difference("theta(E_lambda) = theta(e_lambda)/|Stab(lambda)|", t, viae));
                         return pass();
                       }});
    }
  }

  if (selected("homomorphism")) {
    for (std::size_t j = 0; j < ws.compositions().size(); ++j) {
      const SignedComposition p = ws.compositions()[j];
      tasks.push_back({"homomorphism", params(n, "p", p.label()), [n, j] {
                         const auto& B = mr_basis(n);
                         const auto& chars = detail::permutation_characters(n);
                         for (std::size_t k = 0; k < B.compositions().size(); ++k) {
                           const ClassFunction left = theta(B.elements()[j] * B.elements()[k]);
                           const ClassFunction right = chars[j] * chars[k];
                           if (left != right) {
                             auto wit = class_difference("theta(x_p x_q) = theta(x_p) theta(x_q)", left, right);
                             wit.emplace_back("q", B.compositions()[k].label());
                             return fail(wit);
                           }
                         }
                         return pass();
                       }});
    }
  }

  if (selected("ideals")) {
    for (const auto& l : ws.partitions()) {
      tasks.push_back({"ideals", params(n, "lambda", l.label()), [&ws, l] {
                         const RationalElement& E = ws.E(l);
                         const RationalElement& e = ws.e(l);
                         const RationalElement Ee = E * e;
                         if (Ee != e) return fail(element_difference("E_lambda e_lambda = e_lambda", Ee, e));
                         const RationalElement eE = e * E;
                         const RationalElement want = E * Rational(stab_order(l));
                         if (eE != want) return fail(element_difference("e_lambda E_lambda = |Stab(lambda)| E_lambda", eE, want));
                         return pass();
                       }});
    }
  }

  if (selected("structure")) {
    tasks.push_back({"structure", params(n, "claim", "class equation"), [n] { return check_class_equation(n); }});
    tasks.push_back({"structure", params(n, "claim", "Mantaci-Reutenauer basis"), [n] { return check_structure_basis(n); }});
    for (const auto& l : ws.partitions()) {
      tasks.push_back({"structure", params(n, "lambda", l.label()), [&ws, l, n] {
                         Outcome c = check_centralizer(l);
                         if (!c.passed) return c;
                         const BigInt order = hyperoctahedral_order(n);
                         const Rational rank_E = identity_coefficient(ws.E(l)) * Rational(order);
                         const Rational want = make_rational(order, centralizer_order(l));
                         if (rank_E != want) {
                           return fail({{"claim", "|W_n| * coefficient of id in E_lambda = |W_n|/|Z(w_lambda)|"}, {"left", to_string(rank_E)}, {"right", to_string(want)}});
                         }
                         return pass();
                       }});
    }
  }
  return tasks;
}

}  // namespace detail

/// Runs the selected checks for W_n on `jobs` threads. Failures, including
/// exceptions raised inside a check, become report entries.
inline VerifyReport verify_suite(int n, const std::vector<std::string>& checks, unsigned jobs = 1, std::uint64_t seed = 1,
                                 const std::function<void(const CheckResult&)>& progress = {}) {
  const Workspace ws(n);
  const auto tasks = detail::build_tasks(ws, checks, seed);
  VerifyReport report;
  report.n = n;
  report.results.resize(tasks.size());
  std::mutex progress_mutex;
  parallel_for(tasks.size(), jobs, [&](std::size_t i) {
    CheckResult r{tasks[i].check, tasks[i].parameters, true, {}};
    try {
      detail::Outcome o = tasks[i].run();
      r.passed = o.passed;
      r.witness = std::move(o.witness);
    } catch (const std::exception& err) {
      r.passed = false;
      r.witness = {{"error", err.what()}};
    }
    if (progress) {
      std::lock_guard<std::mutex> lock(progress_mutex);
      progress(r);
    }
    report.results[i] = std::move(r);
  });
  return report;
}

}  // namespace hyperoct
