#include <catch2/catch_amalgamated.hpp>

#include "ctc/group.hpp"
#include "ctc/library.hpp"
#include "oracle.hpp"

using namespace ctc;

TEST_CASE("permutations act on the right") {
  Perm a = Perm::from_cycles(3, "(0 1)");
  Perm b = Perm::from_cycles(3, "(1 2)");
  Perm ab = a * b;
  REQUIRE(ab[0] == b[a[0]]);
  REQUIRE(ab == Perm::from_cycles(3, "(0 2 1)"));
  REQUIRE((a * a).is_identity());
  REQUIRE(ab.order() == 3);
  REQUIRE(ab.inverse() * ab == Perm(3));
  REQUIRE(a.conjugate_by(b) == b.inverse() * a * b);
  REQUIRE(Perm::from_cycles(4, "()").is_identity());
  REQUIRE_THROWS_AS(Perm::from_cycles(3, "(0 3)"), InputError);
  REQUIRE_THROWS_AS(Perm::from_cycles(3, "(0 1 0)"), InputError);
}

TEST_CASE("group orders") {
  std::vector<std::pair<std::string, std::size_t>> cases{
      {"C1", 1},   {"C2", 2},   {"C7", 7},  {"V4", 4},  {"S3", 6},     {"D8", 8},   {"Q8", 8},
      {"A4", 12},  {"S4", 24},  {"A5", 60}, {"S5", 120}, {"SL23", 24}, {"F20", 20}, {"F21", 21},
      {"D10", 10}, {"S3xC2", 12}, {"M(9,3,4)", 27}};
  for (const auto& [name, order] : cases) {
    INFO(name);
    REQUIRE(library_group(name)->order() == order);
  }
}

TEST_CASE("classes agree with brute force") {
  for (const char* name : {"S4", "A5", "Q8", "SL23", "D12", "F21", "S3xC3"}) {
    INFO(name);
    auto g = library_group(name);
    auto brute = oracle::classes(*g);
    REQUIRE(brute.size() == g->classes().size());
    REQUIRE(g->classes()[0].rep.is_identity());
    std::multiset<std::size_t> a, b;
    for (const auto& c : brute) a.insert(c.size());
    for (const auto& c : g->classes()) {
      b.insert(c.size);
      REQUIRE(c.size * c.centralizer_order == g->order());
    }
    REQUIRE(a == b);
    for (const auto& c : brute)
      for (const auto& x : c) REQUIRE(g->class_of(x) == g->class_of(c.front()));
  }
}

TEST_CASE("class_of rejects non-members") {
  auto g = library_group("A4");
  REQUIRE_THROWS_AS(g->class_of(Perm::from_cycles(4, "(0 1)")), InputError);
}

TEST_CASE("normalizer, center and O_p against brute force") {
  for (const char* name : {"S4", "A5", "D8xC2", "SL23", "F20"}) {
    INFO(name);
    auto g = library_group(name);
    REQUIRE(center(*g).elements() == oracle::center(*g));
    for (unsigned p : {2u, 3u, 5u}) {
      if (g->order() % p) continue;
      auto subs = oracle::all_p_subgroups(*g, p);
      for (const auto& h : subs) REQUIRE(normalizer(*g, h).elements() == oracle::normalizer(*g, h));
      // O_p is the largest normal p-subgroup
      Subgroup op = p_core(*g, p);
      std::size_t best = 1;
      for (const auto& h : subs)
        if (is_normal(*g, h)) {
          best = std::max(best, h.order());
          REQUIRE(h.is_subgroup_of(op));
        }
      REQUIRE(op.order() == best);
    }
  }
}

TEST_CASE("Sylow subgroups and their number") {
  struct Case { const char* name; unsigned p; std::size_t order, count; };
  for (auto [name, p, order, count] : {Case{"S4", 2, 8, 3}, Case{"S4", 3, 3, 4}, Case{"A5", 2, 4, 5},
                                       Case{"A5", 5, 5, 6}, Case{"A4", 2, 4, 1}, Case{"F21", 3, 3, 7}}) {
    INFO(name << " p=" << p);
    auto g = library_group(name);
    Subgroup s = sylow(*g, p);
    REQUIRE(s.order() == order);
    REQUIRE(g->order() / normalizer(*g, s).order() == count);
    REQUIRE(count % p == 1);
  }
}

TEST_CASE("p-subgroup classes against brute force") {
  for (const char* name : {"S4", "A5", "D8", "Q8", "SL23", "D8xC2", "S3xS3"}) {
    auto g = library_group(name);
    for (unsigned p : {2u, 3u}) {
      if (g->order() % p) continue;
      INFO(name << " p=" << p);
      auto subs = oracle::all_p_subgroups(*g, p);
      std::set<Subgroup> reps;
      for (const auto& h : subs) reps.insert(canonical_conjugate(*g, h));
      auto classes = p_subgroup_classes(*g, p);
      REQUIRE(classes.size() == reps.size());
      std::size_t total = 0;
      for (const auto& c : classes) {
        REQUIRE(reps.count(c.rep));
        REQUIRE(c.class_size * c.normalizer.order() == g->order());
        total += c.class_size;
      }
      REQUIRE(total == subs.size());
    }
  }
}

TEST_CASE("canonical conjugate is a class invariant") {
  auto g = library_group("S4");
  Subgroup h = Subgroup::generated_by(4, {Perm::from_cycles(4, "(0 1)")});
  Perm x;
  Subgroup c = canonical_conjugate(*g, h, &x);
  REQUIRE(h.conjugate(x) == c);
  for (const auto& y : g->elements()) REQUIRE(canonical_conjugate(*g, h.conjugate(y)) == c);
}

TEST_CASE("order ceiling") {
  REQUIRE_THROWS_AS(library_group("S7"), ResourceError);
  Limits wide;
  wide.max_order = 6000;
  REQUIRE(library_group("S7", wide)->order() == 5040);
}

TEST_CASE("number theory helpers") {
  REQUIRE(is_prime(2));
  REQUIRE(is_prime(97));
  REQUIRE_FALSE(is_prime(1));
  REQUIRE_FALSE(is_prime(91));
  REQUIRE(p_part(120, 2) == 8);
  REQUIRE(log_p(81, 3) == 4);
  REQUIRE_THROWS_AS(log_p(12, 2), InputError);
}
