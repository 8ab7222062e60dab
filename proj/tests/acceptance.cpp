// One PASS/FAIL line per acceptance criterion, each with its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "chowlab/chowlab.hpp"

using namespace chowlab;

namespace {

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<RunReport()> run;
};

std::vector<NamedMatroid> oracle_matroids() {
  std::vector<NamedMatroid> ms;
  for (int k = 1; k <= 4; ++k) ms.push_back({"B_" + std::to_string(k), make_boolean(k)});
  ms.push_back({"U_{3,2}", make_uniform(3, 2)});
  ms.push_back({"U_{4,2}", make_uniform(4, 2)});
  ms.push_back({"U_{4,3}", make_uniform(4, 3)});
  return ms;
}

RunReport generic_agreement() {
  RunReport r{"generic", {}};
  for (int k = 1; k <= 5; ++k) {
    const Matroid b = make_boolean(k);
    const FiniteLattice l = lattice_of_flats(b);
    r.add("B_" + std::to_string(k) + " (L, maximal) = FY(B_n)",
          translate_basis(l, fy_basis_lattice(l, maximal_building_set(l))) == fy_basis_matroid(b));
  }
  std::vector<NamedMatroid> ms;
  for (int k = 1; k <= 4; ++k) ms.push_back({"B_" + std::to_string(k), make_boolean(k)});
  ms.push_back({"U_{3,2}", make_uniform(3, 2)});
  for (const NamedMatroid& nm : ms) {
    const FiniteLattice la = augmented_lattice(nm.matroid);
    const BuildingSet g = aug_building_set(nm.matroid, la);
    r.add(nm.name + " aug building set is a building set", is_building_set(la, g));
    r.add(nm.name + " (aug L, aug G) = aug FY(M)", translate_basis(la, fy_basis_lattice(la, g)) == aug_fy_basis(nm.matroid));
  }
  return r;
}

RunReport fan_structure() {
  std::vector<NamedMatroid> ms;
  for (int k = 1; k <= 4; ++k) ms.push_back({"B_" + std::to_string(k), make_boolean(k)});
  ms.push_back({"U_{3,2}", make_uniform(3, 2)});
  return verify_fans(ms, 4, 5);
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "code counts equal A_n(t) for n <= 7; C_3 listing", 10, [] { return verify_codes(7, Family::Plain); }},
      {2, "extended code counts equal binomial A_n(t) for n <= 7; extended C_3 listing", 30,
       [] { return verify_codes(7, Family::Extended); }},
      {3, "phi: bijective, degree to index, equivariant; n=4 degree-2 table", 120,
       [] { return verify_bijection(7, Family::Plain, 5, 100); }},
      {4, "phi_tilde: bijective, degree-1 to index, equivariant; worked examples", 120,
       [] { return verify_bijection(7, Family::Extended, 5, 100); }},
      {5, "Hilbert oracle equals basis counts for A(M) and augmented A(M)", 300,
       [] { return verify_oracle(oracle_matroids()); }},
      {6, "generic nested-set basis equals the matroid bases", 60, generic_agreement},
      {7, "fan structure: B_2 picture, nested sets vs compatible pairs, star complex", 120, fan_structure},
      {8, "Frobenius identities and dimension specializations", 60, [] { return verify_frobenius(7, 6); }},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    RunReport report;
    std::string error;
    try {
      report = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.limit_seconds;
    const bool ok = error.empty() && report.passed() && in_time;
    failures += !ok;
    std::printf("%s criterion %d: %s [%zu checks, %.2f s, limit %.0f s]\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(),
                report.checks.size(), secs, c.limit_seconds);
    if (!error.empty()) std::printf("    error: %s\n", error.c_str());
    if (!in_time) std::printf("    time limit exceeded\n");
    for (const Check& k : report.checks) {
      if (!k.pass) std::printf("    failed: %s expected=%s actual=%s\n", k.name.c_str(), k.expected.c_str(), k.actual.c_str());
    }
  }
  std::printf("%s: %zu/%zu criteria passed\n", failures ? "FAIL" : "PASS", criteria.size() - failures, criteria.size());
  return failures ? 1 : 0;
}
