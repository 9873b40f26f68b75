// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. All checks are exact; time limits are wall-clock.

#include <boost/multiprecision/cpp_int.hpp>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "permpoly/permpoly.hpp"

namespace {

using namespace permpoly;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

// Words compiled under criteria 1-3, collected for the degree bound.
struct CompiledRecord {
  std::uint32_t q;
  std::optional<std::size_t> degree;
  std::string origin;
};
std::vector<CompiledRecord> g_compiled;

void record_compiled(const GenWord& w, const std::string& origin) {
  g_compiled.push_back({w.field().order(), compile(w).degree(), origin});
}

int g_failures = 0;

void report_line(int id, const char* title, const Outcome& o, double seconds, double limit_seconds) {
  Outcome final = o;
  if (limit_seconds > 0 && seconds > limit_seconds) {
    std::ostringstream why;
    why << "took " << seconds << " s, limit " << limit_seconds << " s";
    final.fail(why.str());
  }
  if (!final.ok) ++g_failures;
  std::ostringstream timing;
  timing << std::fixed << std::setprecision(2) << seconds << " s";
  if (limit_seconds > 0) timing << " / limit " << static_cast<int>(limit_seconds) << " s";
  std::printf("[%s] AC%d %s: %s (%s)\n", final.ok ? "PASS" : "FAIL", id, title,
              final.detail.empty() ? "ok" : final.detail.c_str(), timing.str().c_str());
  std::fflush(stdout);
}

void run_criterion(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  report_line(id, title, o, seconds, limit_seconds);
}

Outcome theorem_verification() {
  Outcome o;
  std::size_t checked = 0;
  for (auto q : testing::prime_powers(3, 64)) {
    const Field f = Field::of_order(q);
    for (ElementIndex a = 1; a < q; ++a) {
      const auto expected = Permutation::transposition(q, 0, a);
      for (auto gadget : {Gadget::kZieve, Gadget::kCarlitz}) {
        if (word_to_permutation(word_transposition(f, a, gadget)) != expected) {
          o.fail(f.name() + " a=" + std::to_string(a) + (gadget == Gadget::kZieve ? " zieve" : " carlitz"));
        }
        ++checked;
      }
    }
  }
  o.detail = o.ok ? std::to_string(checked) + " gadget words" : o.detail;
  return o;
}

Outcome full_generation(std::vector<GenWord>& decomposed) {
  Outcome o;
  std::size_t count = 0;
  auto check = [&](const Field& f, const Permutation& perm) {
    for (auto gadget : {Gadget::kZieve, Gadget::kCarlitz}) {
      auto w = decompose(f, perm, gadget);
      if (word_to_permutation(w) != perm) o.fail(f.name() + " " + perm.to_cycle_string());
      decomposed.push_back(std::move(w));
    }
    ++count;
  };
  for (std::uint32_t q : {3u, 4u, 5u}) {
    const Field f = Field::of_order(q);
    std::vector<std::uint32_t> images(q);
    for (std::uint32_t i = 0; i < q; ++i) images[i] = i;
    do {
      check(f, Permutation(images));
    } while (std::next_permutation(images.begin(), images.end()));
  }
  std::mt19937_64 rng(20240601);
  for (std::uint32_t q : {7u, 8u, 9u, 11u, 13u, 16u, 25u, 27u}) {
    const Field f = Field::of_order(q);
    for (int i = 0; i < 100; ++i) check(f, testing::random_permutation(q, rng));
  }
  if (count != 150 + 800) o.fail("expected 950 permutations, checked " + std::to_string(count));
  if (o.ok) o.detail = std::to_string(count) + " permutations x 2 gadgets";
  return o;
}

Outcome compiler_oracle() {
  Outcome o;
  std::mt19937_64 rng(777);
  for (std::uint32_t q : {3u, 4u, 5u, 7u, 9u, 16u, 27u}) {
    const Field f = Field::of_order(q);
    for (int i = 0; i < 100; ++i) {
      const auto w = testing::random_word(f, 30, rng);
      const Poly compiled = compile(w);
      g_compiled.push_back({q, compiled.degree(), "AC3 random word"});
      const Poly oracle = interpolate(f, testing::graph(word_to_permutation(w)));
      if (!(compiled == oracle)) o.fail(f.name() + " word #" + std::to_string(i));
    }
  }
  if (o.ok) o.detail = "700 words";
  return o;
}

Outcome hermite_bound(const std::vector<GenWord>& decomposed) {
  for (auto q : testing::prime_powers(3, 64)) {
    const Field f = Field::of_order(q);
    for (ElementIndex a = 1; a < q; ++a) {
      record_compiled(word_transposition_zieve(f, a), "AC1 zieve");
      record_compiled(word_transposition_carlitz(f, a), "AC1 carlitz");
    }
  }
  for (const auto& w : decomposed) record_compiled(w, "AC2 decompose");

  Outcome o;
  for (const auto& rec : g_compiled) {
    if (!rec.degree || *rec.degree > rec.q - 2) {
      o.fail(rec.origin + " over q=" + std::to_string(rec.q) + " has degree " +
             (rec.degree ? std::to_string(*rec.degree) : std::string("-inf")));
    }
  }
  if (o.ok) o.detail = std::to_string(g_compiled.size()) + " compiled words";
  return o;
}

bool exact_gcd_permits(std::uint64_t q, std::uint64_t k) {
  using boost::multiprecision::cpp_int;
  cpp_int power = 1;
  for (std::uint64_t i = 0; i < k; ++i) power *= q;
  return boost::multiprecision::gcd(cpp_int(q - 2), power - 1) == 1;
}

Outcome exceptional_criterion() {
  Outcome o;
  for (std::uint64_t q = 3; q <= 1000; ++q) {
    if (!prime_power(q)) continue;
    for (std::uint64_t k = 1; k <= 30; ++k) {
      if (permits_degree(q, k) != exact_gcd_permits(q, k)) {
        o.fail("gcd oracle disagrees at q=" + std::to_string(q) + " k=" + std::to_string(k));
      }
    }
  }
  std::size_t brute = 0;
  for (std::uint64_t q : {3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27}) {
    for (std::uint64_t k = 1, order = q; order <= kMaxBruteOrder; ++k, order *= q) {
      if (permits_degree(q, k) != brute_check(q, k)) {
        o.fail("brute force disagrees at q=" + std::to_string(q) + " k=" + std::to_string(k));
      }
      ++brute;
    }
  }
  for (std::uint64_t k = 1; k <= 10; ++k) {
    if (permits_degree(5, k) != (k % 2 == 1)) o.fail("q=5 spot value k=" + std::to_string(k));
    if (permits_degree(7, k) != (k % 4 != 0)) o.fail("q=7 spot value k=" + std::to_string(k));
    if (!permits_degree(4, k)) o.fail("q=4 spot value k=" + std::to_string(k));
  }
  if (o.ok) o.detail = "gcd oracle q<=1000 k<=30, " + std::to_string(brute) + " brute-force fields";
  return o;
}

Outcome simplify_laws() {
  Outcome o;
  std::mt19937_64 rng(4242);
  for (std::uint32_t q : {5u, 9u, 16u}) {
    const Field f = Field::of_order(q);
    for (int i = 0; i < 1000; ++i) {
      const auto w = testing::random_word(f, 30, rng);
      const auto s = simplify(w);
      if (word_to_permutation(s) != word_to_permutation(w)) o.fail(f.name() + ": permutation changed");
      if (!(simplify(s) == s)) o.fail(f.name() + ": not idempotent");
      for (std::size_t t = 1; t < s.size(); ++t) {
        if (s.tokens()[t].kind() == s.tokens()[t - 1].kind()) o.fail(f.name() + ": adjacent same-kind tokens");
      }
    }
  }
  if (o.ok) o.detail = "3000 words";
  return o;
}

Outcome q_equals_two() {
  Outcome o;
  const Field f2 = Field::of_order(2);
  auto expect_reject = [&](const char* name, const std::function<void()>& call) {
    try {
      call();
      o.fail(std::string(name) + " accepted q = 2");
    } catch (const std::invalid_argument&) {
    }
  };
  expect_reject("word_h", [&] { word_h(f2); });
  expect_reject("word_swap01", [&] { word_swap01(f2); });
  expect_reject("word_transposition_zieve", [&] { word_transposition_zieve(f2, 1); });
  expect_reject("word_transposition_carlitz", [&] { word_transposition_carlitz(f2, 1); });
  expect_reject("GenWord::inv", [&] { GenWord(f2).inv(); });

  for (const auto& perm : {Permutation::identity(2), Permutation::transposition(2, 0, 1)}) {
    for (auto gadget : {Gadget::kZieve, Gadget::kCarlitz}) {
      const auto w = decompose(f2, perm, gadget);
      for (const auto& t : w.tokens()) {
        if (!t.is_linear()) o.fail("decompose over F_2 emitted Inv");
      }
      if (word_to_permutation(w) != perm) o.fail("decompose over F_2 is wrong for " + perm.to_cycle_string());
    }
  }
  return o;
}

}  // namespace

int main() {
  std::vector<GenWord> decomposed;
  run_criterion(1, "theorem verification: both gadgets induce (0 a), all 3 <= q <= 64", 10, theorem_verification);
  run_criterion(2, "full generation: decompose + verify", 30, [&] { return full_generation(decomposed); });
  run_criterion(3, "compiler-oracle equivalence", 0, compiler_oracle);
  run_criterion(4, "Hermite degree bound on compiled words", 0, [&] { return hermite_bound(decomposed); });
  run_criterion(5, "exceptional-degree criterion", 10, exceptional_criterion);
  run_criterion(6, "simplify laws", 0, simplify_laws);
  run_criterion(7, "q = 2 behaviour", 0, q_equals_two);
  std::printf("%s: %d failing criteria\n", g_failures == 0 ? "ACCEPTED" : "REJECTED", g_failures);
  return g_failures == 0 ? 0 : 1;
}
