// One line per acceptance criterion: [PASS] or [FAIL], wall time, detail.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "apolar/apolar.hpp"
#include "random_systems.hpp"

using namespace apolar;
using namespace apolar::testing;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail << "failed: ";
      else detail << "; ";
      detail << what;
      ok = false;
    }
  }
};

std::vector<Poly> parse_all(std::initializer_list<const char*> src, const VariableNames& names) {
  std::vector<Poly> out;
  for (const char* s : src) out.push_back(parse(s, names));
  return out;
}

InputFile input(VariableNames names, std::vector<Poly> polys) { return InputFile{std::move(names), std::move(polys)}; }

void golden_xy_cubes(Check& c) {
  const VariableNames xy({"x", "y"});
  const Report r = analyze(input(xy, parse_all({"x^3", "y^3"}, xy)));
  c.expect(r.hvector == HVector{1, 2, 2, 2}, "hvector " + to_string(r.hvector));
  c.expect(r.type == 2, "type");
  c.expect(r.is_level, "level");
  c.expect(r.is_compressed == std::optional<bool>(false), "compressed flag");
  c.expect(r.graded_status == GradedStatus::graded, "graded status " + to_string(r.graded_status));
  std::vector<std::string> gens;
  if (r.apolar_generators)
    for (const auto& g : *r.apolar_generators) gens.push_back(to_string(g, xy));
  c.expect(gens == std::vector<std::string>{"x*y", "x^4", "y^4"}, "apolar generators");
  if (c.ok) c.detail << "(1,2,2,2) type 2 level, not compressed, graded, Ann = (xy, x^4, y^4)";
}

void golden_tail_t2(Check& c) {
  const VariableNames n({"x", "y", "z", "t"});
  const Report r = analyze(input(n, parse_all({"x^3 + t^2", "x^2*y", "x*y^2", "z^3", "x*z^2", "y^3"}, n)));
  c.expect(r.hvector == HVector{1, 4, 5, 6}, "hvector " + to_string(r.hvector));
  c.expect(r.is_level && r.type == 6, "level type 6");
  c.expect(r.q0_hvector == HVector{1, 3, 5, 6}, "q0 " + to_string(r.q0_hvector));
  c.expect(r.c_table.size() > 1 && r.c_table[1][1] == 1, "C(1)_1");
  c.expect(r.graded_status == GradedStatus::not_graded, "status " + to_string(r.graded_status));
  if (c.ok) c.detail << "(1,4,5,6) level type 6, Q(0) (1,3,5,6), dim C(1)_1 = 1, not_graded";
}

void golden_binary_cubics(Check& c) {
  const VariableNames n(4);
  const Report r = analyze(input(n, parse_all({"x1^3", "x1^2*x2", "x1*x2^2", "x2^3", "x3^3", "x4^3"}, n)));
  c.expect(r.hvector == HVector{1, 4, 5, 6}, "hvector " + to_string(r.hvector));
  c.expect(r.is_level, "level");
  c.expect(r.graded_status == GradedStatus::graded, "status " + to_string(r.graded_status));
  if (c.ok) c.detail << "(1,4,5,6) level, graded";
}

void golden_quartic13(Check& c) {
  const VariableNames n({"x", "y", "z", "a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8", "a9", "a10"});
  const Poly f = parse(
      "a1*x^3 + a2*x^2*y + a3*x^2*z + a4*x*y^2 + a5*x*y*z + a6*x*z^2 + a7*y^3 + a8*y^2*z + a9*y*z^2 + a10*z^3", n);
  const auto is = build({f}, 13);
  const HVector h = hilbert_function(is);
  c.expect(h == HVector{1, 13, 12, 13, 1}, "quartic " + to_string(h));
  const auto tr = truncation(is);
  const HVector ht = hilbert_function(tr);
  c.expect(ht == HVector{1, 13, 12, 13}, "truncation " + to_string(ht));
  std::vector<Poly> wider;
  for (const auto& g : tr.generators()) wider.push_back(g.embedded(15));
  wider.push_back(parse("x14^3 + x15^3", 15));
  const HVector hw = hilbert_function(build(wider, 15));
  c.expect(hw == HVector{1, 15, 14, 14}, "with y1^3+y2^3 " + to_string(hw));
  if (c.ok) c.detail << to_string(h) << ", " << to_string(ht) << ", " << to_string(hw);
}

void constructor_sweep(Check& c) {
  std::size_t n3 = 0, n2 = 0;
  auto verify = [&](const HVector& h) {
    try {
      const auto rep = construct(h);
      const auto is = build(rep.generators, h[1]);
      const auto lvl = is_level(is);
      c.expect(hilbert_function(is) == h && lvl.level && lvl.type == h[h.socle_degree()], "construct " + to_string(h));
    } catch (const std::exception& e) {
      c.expect(false, to_string(h) + ": " + e.what());
    }
  };
  for (std::size_t m = 1; m <= 5; ++m)
    for (const auto& e : enumerate_admissible(m, 3)) {
      verify(e.h);
      ++n3;
    }
  for (std::size_t m = 1; m <= 6; ++m)
    for (const auto& e : enumerate_admissible(m, 2)) {
      verify(e.h);
      ++n2;
    }
  if (c.ok) c.detail << n3 << " socle-3 and " << n2 << " socle-2 h-vectors constructed and re-verified";
}

void compressed_graded(Check& c) {
  std::mt19937 rng(20240601);
  const std::pair<std::size_t, std::size_t> shapes[] = {{2, 1}, {3, 1}, {3, 2}, {4, 2}, {3, 3}};
  std::size_t graded = 0, unknown = 0, other = 0;
  for (int t = 0; t < 100; ++t) {
    const auto [m, tau] = shapes[t % 5];
    const auto inst = random_compressed(rng, m, tau);
    const auto is = build(inst.generators(), m);
    if (!is_level(is).level || !is_compressed_s3(is)) {
      ++other;
      continue;
    }
    const auto r = certify_graded_s3(is);
    if (r.verdict == GradedVerdict::graded && r.certificate && r.certificate->verified)
      ++graded;
    else if (r.verdict == GradedVerdict::unknown)
      ++unknown;
    else
      ++other;
  }
  c.expect(graded == 100, std::to_string(graded) + " graded, " + std::to_string(unknown) + " unknown, " +
                              std::to_string(other) + " other");
  if (c.ok) c.detail << "100/100 compressed instances graded with verified certificates, 0 unknown";
}

void transpose_identity(Check& c) {
  std::mt19937 rng(500);
  std::size_t bad = 0;
  for (int t = 0; t < 500; ++t) {
    const Poly f = random_nonzero_form(rng, 1 + t % 5, 3);
    if (!transpose_check(f)) ++bad;
  }
  c.expect(bad == 0, std::to_string(bad) + " cubics violate Delta1 = Delta2^t");
  if (c.ok) c.detail << "500 random cubics, m <= 5";
}

void oracle_equivalence(Check& c) {
  std::mt19937 rng(200);
  for (int t = 0; t < 200 && c.ok; ++t) {
    const std::size_t m = 1 + t % 3;
    const unsigned s = 1 + (t / 3) % 3;
    std::vector<Poly> gens{random_poly(rng, m, s)};
    for (std::size_t j = 0, extra = t % 3; j < extra; ++j) gens.push_back(random_poly(rng, m, 1 + (t + j) % s));
    const auto is = build(gens, m);
    const HVector h = hilbert_function(is);
    const auto ai = apolar_ideal_upto(is);
    const auto qd = q_decomposition(is);
    c.expect(is.length() == h.length(), "closure dim vs sum HF at instance " + std::to_string(t));
    c.expect(ai.colength == is.length(), "apolar colength at instance " + std::to_string(t));
    for (std::size_t i = 0; i <= s; ++i) {
      std::size_t sum = 0;
      for (const auto& row : qd.q) sum += row[i];
      c.expect(sum == h[i], "sum_a Q(a)_" + std::to_string(i) + " at instance " + std::to_string(t));
    }
  }
  if (c.ok) c.detail << "200 random systems: dim <f> = sum HF = colength of Ann, sum_a Q(a)_i = HF(i)";
}

void necessity_bound(Check& c) {
  std::mt19937 rng(9);
  std::size_t tested = 0;
  while (tested < 500 && c.ok) {
    const std::size_t m = 1 + rng() % 4;
    const std::size_t tau = 1 + rng() % std::min<std::size_t>(4, binomial(m + 2, 3));
    std::vector<Poly> gens;
    for (std::size_t j = 0; j < tau; ++j) gens.push_back(random_poly(rng, m, 3));
    if (!detail::leading_forms_independent(gens)) continue;
    const auto is = build(gens, m);
    const auto lvl = is_level(is);
    if (!lvl.level) continue;
    const HVector h = hilbert_function(is);
    c.expect(h[2] <= lvl.type * h[1], "HF(2) > tau*m for " + to_string(h));
    ++tested;
  }
  if (c.ok) c.detail << tested << " random level socle-3 systems satisfy HF(2) <= tau*m";
}

void admissibility_ledger(Check& c) {
  c.expect(is_admissible_level_local(HVector{1, 3, 2, 1}), "(1,3,2,1) rejected");
  try {
    const auto rep = construct(HVector{1, 3, 2, 1});
    c.expect(rep.verified_hvector == HVector{1, 3, 2, 1} && rep.verified_level, "(1,3,2,1) construction");
  } catch (const std::exception& e) {
    c.expect(false, std::string("(1,3,2,1): ") + e.what());
  }
  std::size_t rejected = 0;
  for (std::size_t m = 1; m <= 8; ++m)
    for (std::size_t tau = 1; tau * m + 1 <= binomial(m + 1, 2); ++tau) {
      const HVector h{1, m, tau * m + 1, tau};
      c.expect(!is_admissible_level_local(h), to_string(h) + " accepted");
      ++rejected;
    }
  if (c.ok) c.detail << "(1,3,2,1) admitted and constructed; " << rejected << " vectors (1,m,tau*m+1,tau) rejected";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_s;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria{
      {"golden x^3, y^3", 0.1, golden_xy_cubes},
      {"golden x^3+t^2 tail", 0.5, golden_tail_t2},
      {"golden binary cubics", 0.5, golden_binary_cubics},
      {"golden 13-variable quartic", 30, golden_quartic13},
      {"constructor sweep", 60, constructor_sweep},
      {"compressed implies graded", 60, compressed_graded},
      {"transpose identity", 5, transpose_identity},
      {"oracle equivalence", 30, oracle_equivalence},
      {"necessity bound", 10, necessity_bound},
      {"admissibility ledger", 1, admissibility_ledger},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > criteria[i].budget_s)
      c.expect(false, "took " + std::to_string(secs) + " s, budget " + std::to_string(criteria[i].budget_s) + " s");
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3fs", secs);
    std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << (i + 1) << ". " << criteria[i].name << " (" << timing
              << "): " << c.detail.str() << "\n";
    failures += !c.ok;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
