// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <hyperoct/hyperoct.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <deque>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace hyperoct;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

unsigned g_jobs = 4;

// Runs the named checks for each n and folds the reports together.
Outcome suite(const std::vector<std::string>& checks, int max_n) {
  std::size_t tasks = 0;
  for (int n = 1; n <= max_n; ++n) {
    const auto report = verify_suite(n, checks, g_jobs);
    tasks += report.results.size();
    for (const auto& r : report.results) {
      if (!r.passed) {
        std::ostringstream out;
        out << r.check << " failed at " << to_json(r.parameters).dump() << ": " << to_json(r.witness).dump();
        return {false, out.str()};
      }
    }
  }
  return {true, std::to_string(tasks) + " tasks"};
}

Outcome combine(std::vector<std::function<Outcome()>> parts) {
  std::string detail;
  for (auto& part : parts) {
    Outcome o = part();
    if (!o.passed) return o;
    if (!detail.empty()) detail += "; ";
    detail += o.detail;
  }
  return {true, detail};
}

Outcome even_induction() {
  for (int m = 1; m <= 6; ++m) {
    const auto types = detail::check_power_types(m);
    if (!types.passed) return {false, "m=" + std::to_string(m) + " " + to_json(types.witness).dump()};
  }
  for (int m : {2, 4, 6}) {
    const auto o = detail::check_even_induction(m);
    if (!o.passed) return {false, "m=" + std::to_string(m) + " " + to_json(o.witness).dump()};
  }
  return {true, "power types m<=6, characters m=2,4,6"};
}

Outcome theta_r() {
  for (int m = 1; m <= 5; ++m) {
    const auto o = detail::check_theta_r(m);
    if (!o.passed) return {false, "m=" + std::to_string(m) + " " + to_json(o.witness).dump()};
  }
  return {true, "m<=5"};
}

Outcome lengths_by_search() {
  std::size_t checked = 0;
  for (int n = 1; n <= 3; ++n) {
    std::map<SignedPermutation, int> dist;
    std::deque<SignedPermutation> queue{SignedPermutation::identity(n)};
    dist[queue.front()] = 0;
    while (!queue.empty()) {
      const auto w = queue.front();
      queue.pop_front();
      for (const auto& s : coxeter_generators(n)) {
        if (dist.emplace(w * s, dist[w] + 1).second) queue.push_back(w * s);
      }
    }
    for (const auto& [w, d] : dist) {
      ++checked;
      if (coxeter_length(w) != d) return {false, "length of " + w.one_row()};
    }
  }
  return {true, std::to_string(checked) + " lengths"};
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Outcome determinism() {
  std::vector<std::uint64_t> hashes;
  for (unsigned jobs : {1u, 4u, 1u, 3u}) hashes.push_back(fnv1a(to_json(verify_suite(3, check_names(), jobs, 7)).dump()));
  for (auto h : hashes) {
    if (h != hashes.front()) return {false, "report hashes differ across runs"};
  }
  std::ostringstream out;
  out << "4 runs, hash " << std::hex << hashes.front();
  return {true, out.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  app.add_option("--jobs", g_jobs, "worker threads")->check(CLI::Range(1u, 256u));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"idempotent family, n<=4", [] { return suite({"idempotents"}, 4); }},
      {"oracle I_p = e_p, n<=4", [] { return suite({"oracle"}, 4); }},
      {"generator scalars on e~_lambda, n<=4", [] { return suite({"scalar-action"}, 4); }},
      {"chi(E_lambda) = Ind phi_lambda and sum = rho_n, n<=4", [] { return suite({"induced", "regular"}, 4); }},
      {"even induction and power cycle types, m<=6", even_induction},
      {"theta_m(r_m) and eps table, m<=5", theta_r},
      {"theta(e_p) and theta(E_lambda), n<=4", [] { return suite({"theta-quasi", "theta-idempotents"}, 4); }},
      {"structure, n<=4; homomorphism, n<=3; lengths, n<=3",
       [] { return combine({[] { return suite({"structure"}, 4); }, [] { return suite({"homomorphism"}, 3); }, lengths_by_search}); }},
      {"determinism across runs and --jobs", determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += o.passed ? 0 : 1;
    std::cout << (o.passed ? "PASS" : "FAIL") << "  " << (i + 1) << "  " << criteria[i].first << "  (" << o.detail << ", ";
    std::cout.precision(2);
    std::cout << std::fixed << secs << " s)" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
