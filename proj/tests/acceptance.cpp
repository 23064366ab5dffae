// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "oracles.hpp"
#include "polynorm/algebra.hpp"
#include "polynorm/grothendieck.hpp"
#include "polynorm/laurent.hpp"
#include "polynorm/normdecomp.hpp"
#include "polynorm/random.hpp"

namespace {

using namespace polynorm;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::size_t random_dim(random::Engine& rng) {
  return std::uniform_int_distribution<std::size_t>(1, 3)(rng);
}

Polytope quad(long k) {
  return canonical_hull({LatticePoint{k, 0}, LatticePoint{k, 1}, LatticePoint{-k, 0}, LatticePoint{-k, -1}}, 2);
}

Polytope interval(long lo, long hi) { return canonical_hull({LatticePoint{lo}, LatticePoint{hi}}, 1); }

std::string fraction(std::size_t good, std::size_t total) {
  return std::to_string(good) + "/" + std::to_string(total);
}

Outcome theorem_constructive() {
  random::Engine rng(101);
  const auto start = Clock::now();
  std::size_t good = 0;
  for (int i = 0; i < 300; ++i) {
    const Polytope p = random::symmetric_polytope(rng, random_dim(rng), 5, 5);
    try {
      const NormDecomposition d = decompose(p);
      if (verify_norm_identity(p, d.q, d.r)) ++good;
    } catch (const std::exception&) {
    }
  }
  const double t = seconds_since(start);
  char buf[64];
  std::snprintf(buf, sizeof buf, " in %.1fs", t);
  return {good == 300 && t < 60.0, fraction(good, 300) + buf};
}

Outcome counterexample_family() {
  bool ok = true;
  std::string detail;
  auto check = [&](const std::string& name, const Polytope& p) {
    const auto start = Clock::now();
    const auto witness = is_integral_norm(p);
    const double t = seconds_since(start);
    const NormDecomposition d = decompose(p);
    const bool certified = verify_norm_identity(p, d.q, d.r);
    ok = ok && !witness && t <= 10.0 && certified;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s: %s %.2fs, decompose %s; ", name.c_str(),
                  witness ? "norm" : "none", t, certified ? "ok" : "FAILED");
    detail += buf;
  };
  for (long k = 1; k <= 3; ++k) check("k=" + std::to_string(k), quad(k));
  check("k=1 in R^3", embed_at_zero(quad(1)));
  return {ok, detail};
}

Outcome intervals_are_norms() {
  std::size_t good = 0;
  for (long x = 0; x <= 10; ++x) {
    const Polytope p = interval(-x, x);
    const Polytope q = interval(0, x);
    if (is_integral_norm(p, 32) && equal(q + mirror(q), p) &&
        verify_norm_identity(p, Polytope::origin(1), q)) {
      ++good;
    }
  }
  return {good == 11, fraction(good, 11)};
}

Outcome stretch_claim() {
  random::Engine rng(404);
  std::size_t good = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = random_dim(rng);
    const Polytope p = random::polytope(rng, n, 5, 4);
    const StretchData s = stretch(p);
    std::set<LatticePoint> cut;
    for (const auto& z : oracle::lattice_points(s.y.vertices())) {
      if (z[n - 1] == 0) cut.insert(z);
    }
    const Polytope embedded = embed_at_zero(project_drop_last(p));
    if (cut == oracle::lattice_points(embedded.vertices())) ++good;
  }
  return {good == 100, fraction(good, 100)};
}

Outcome halves_identity() {
  random::Engine rng(505);
  std::size_t good = 0;
  for (int i = 0; i < 100; ++i) {
    const Polytope p = random::symmetric_polytope(rng, random_dim(rng), 5, 5);
    const StretchData s = stretch(p);
    const Polytope upper = nonnegative_half(s.y, s.slice);
    if (equal(upper + mirror(upper), s.y + embed_at_zero(s.slice))) ++good;
  }
  return {good == 100, fraction(good, 100)};
}

Outcome newton_homomorphism() {
  random::Engine rng(606);
  std::size_t good = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = random_dim(rng);
    const LaurentPolynomial f = random::laurent(rng, n, 6, 4);
    const LaurentPolynomial g = random::laurent(rng, n, 6, 4);
    const LaurentPolynomial fg = multiply(f, g);
    if (!fg.is_zero() && equal(newton_polytope(fg), newton_polytope(f) + newton_polytope(g))) ++good;
  }
  return {good == 100, fraction(good, 100)};
}

Outcome grothendieck_layer() {
  random::Engine rng(707);
  std::size_t laws = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = random_dim(rng);
    auto rand_poly = [&] { return random::polytope(rng, n, 4, 3); };
    const GrothendieckElement x = element(rand_poly(), rand_poly());
    const GrothendieckElement y = element(rand_poly(), rand_poly());
    const Polytope t = rand_poly();
    const GrothendieckElement x2 = element(x.plus() + t, x.minus() + t);
    const Polytope a = rand_poly();
    const Polytope b = i % 2 ? a : rand_poly();
    const bool ok = element_eq(x, x) && element_eq(x, x2) && element_eq(x2, x) &&
                    element_eq(x, y) == element_eq(y, x) &&
                    element_eq(add(x, negate(x)), GrothendieckElement::zero(n)) &&
                    element_eq(GrothendieckElement::embed(a), GrothendieckElement::embed(b)) == equal(a, b);
    if (ok) ++laws;
  }
  std::size_t certs = 0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = random_dim(rng);
    const GrothendieckElement base =
        element(random::polytope(rng, n, 4, 3), random::polytope(rng, n, 4, 3));
    const GrothendieckElement x = add(base, mirror_element(base));
    try {
      if (verify_certificate(x, norm_difference(x))) ++certs;
    } catch (const std::exception&) {
    }
  }
  return {laws == 100 && certs == 50, "laws " + fraction(laws, 100) + ", certificates " + fraction(certs, 50)};
}

Outcome norm_round_trip() {
  random::Engine rng(808);
  std::size_t good = 0;
  std::size_t tried = 0;
  std::size_t drawn = 0;
  while (tried < 50 && drawn < 100000) {
    ++drawn;
    const std::size_t n = random_dim(rng);
    Polytope q0 = random::polytope(rng, n, 4, 2);
    q0 = translate(q0, -q0.vertices().front());
    const Polytope p = q0 + mirror(q0);
    if (lattice_points(p).size() > 8) continue;
    ++tried;
    const auto w = is_integral_norm(p);
    if (w && equal(*w + mirror(*w), p)) ++good;
  }
  return {tried == 50 && good == 50, fraction(good, tried)};
}

Outcome edge_shadow() {
  random::Engine rng(909);
  std::size_t good = 0;
  for (int i = 0; i < 100; ++i) {
    const Polytope p = random::polytope(rng, 2, 6, 4);
    const Polytope q = random::polytope(rng, 2, 6, 4);
    const auto sum_edges = edges_2d(p + q);
    bool all = true;
    for (const auto& e : edges_2d(p)) {
      const Integer len = lattice_length(e.direction);
      bool found = false;
      for (const auto& f : sum_edges) {
        const Integer flen = lattice_length(f.direction);
        if (e.direction[0] * flen == f.direction[0] * len && e.direction[1] * flen == f.direction[1] * len &&
            flen >= len) {
          found = true;
          break;
        }
      }
      all = all && found;
    }
    if (all) ++good;
  }
  return {good == 100, fraction(good, 100)};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"1 decomposition of 300 random symmetric polytopes", theorem_constructive},
      {"2 counterexample family is not a norm but decomposes", counterexample_family},
      {"3 symmetric intervals are integral norms", intervals_are_norms},
      {"4 stretched slice matches the projection", stretch_claim},
      {"5 halves identity on stretched data", halves_identity},
      {"6 Newton polytope is multiplicative", newton_homomorphism},
      {"7 Grothendieck group laws and certificates", grothendieck_layer},
      {"8 norm search recovers random norms", norm_round_trip},
      {"9 planar edges survive Minkowski sums", edge_shadow},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o{false, ""};
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.ok) ++failures;
    std::printf("%s  %s  (%s)\n", o.ok ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of 9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
