#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "ctc/char_table.hpp"
#include "ctc/library.hpp"

using namespace ctc;

namespace {

std::vector<std::uint64_t> sorted_degrees(const CharTable& t) {
  auto d = t.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("C2 table") {
  auto t = character_table(library_group("C2"));
  REQUIRE(t->size() == 2);
  REQUIRE(t->value(0, 1) == Cyclo(1));
  REQUIRE(t->value(1, 0) == Cyclo(1));
  REQUIRE(t->value(1, 1) == Cyclo(-1));
}

TEST_CASE("degrees of small groups") {
  using D = std::vector<std::uint64_t>;
  REQUIRE(sorted_degrees(*character_table(library_group("S3"))) == D{1, 1, 2});
  REQUIRE(sorted_degrees(*character_table(library_group("Q8"))) == D{1, 1, 1, 1, 2});
  REQUIRE(sorted_degrees(*character_table(library_group("A4"))) == D{1, 1, 1, 3});
  REQUIRE(sorted_degrees(*character_table(library_group("S4"))) == D{1, 1, 2, 3, 3});
  REQUIRE(sorted_degrees(*character_table(library_group("A5"))) == D{1, 3, 3, 4, 5});
  REQUIRE(sorted_degrees(*character_table(library_group("SL23"))) == D{1, 1, 1, 2, 2, 2, 3});
  REQUIRE(sorted_degrees(*character_table(library_group("F20"))) == D{1, 1, 1, 1, 4});
}

TEST_CASE("A5 has the golden ratio on 5-cycles") {
  auto g = library_group("A5");
  auto t = character_table(g);
  std::size_t k = g->class_of(Perm::from_cycles(5, "(0 1 2 3 4)"));
  int found = 0;
  for (std::size_t chi = 0; chi < t->size(); ++chi) {
    if (t->degree(chi) != 3) continue;
    const Cyclo& v = t->value(chi, k);
    REQUIRE(v * v == v + Cyclo(1));
    ++found;
  }
  REQUIRE(found == 2);
}

TEST_CASE("trivial character first, degrees ascending") {
  for (const char* name : {"S4", "A5", "SL23", "D12"}) {
    auto t = character_table(library_group(name));
    for (std::size_t k = 0; k < t->size(); ++k) REQUIRE(t->value(0, k) == Cyclo(1));
    REQUIRE(std::is_sorted(t->degrees().begin(), t->degrees().end()));
  }
}

TEST_CASE("orthogonality and degree sums") {
  for (const char* name : {"C6", "D10", "Q8", "A4", "S4", "A5", "SL23", "F21", "M(9,3,4)", "S3xC3", "C4xC4"}) {
    INFO(name);
    auto g = library_group(name);
    auto t = character_table(g);
    REQUIRE(t->size() == g->classes().size());
    REQUIRE(t->orthogonality_holds());
    std::uint64_t s = 0;
    for (auto d : t->degrees()) s += d * d;
    REQUIRE(s == g->order());
    // column relations, computed here directly
    for (std::size_t a = 0; a < t->size(); ++a)
      for (std::size_t b = 0; b < t->size(); ++b) {
        Cyclo sum(0);
        for (std::size_t chi = 0; chi < t->size(); ++chi) sum += t->value(chi, a) * t->value(chi, b).conj();
        Cyclo want = a == b ? Cyclo(static_cast<long>(g->classes()[a].centralizer_order)) : Cyclo(0);
        REQUIRE(sum == want);
      }
  }
}

TEST_CASE("the table is stable under Galois action") {
  for (const char* name : {"A5", "F21", "C5", "SL23"}) {
    INFO(name);
    auto t = character_table(library_group(name));
    std::size_t e = t->exponent();
    for (std::size_t k = 1; k < e; ++k) {
      if (std::gcd(k, e) != 1) continue;
      for (std::size_t chi = 0; chi < t->size(); ++chi) {
        bool hit = false;
        for (std::size_t psi = 0; psi < t->size() && !hit; ++psi) {
          hit = true;
          for (std::size_t c = 0; c < t->size() && hit; ++c) hit = t->value(chi, c).galois(k) == t->value(psi, c);
        }
        REQUIRE(hit);
      }
    }
  }
}

TEST_CASE("JSON round trip") {
  auto g = library_group("SL23");
  auto t = character_table(g);
  auto back = CharTable::from_json(t->to_json(), g);
  REQUIRE(back->size() == t->size());
  for (std::size_t chi = 0; chi < t->size(); ++chi)
    for (std::size_t k = 0; k < t->size(); ++k) REQUIRE(back->value(chi, k) == t->value(chi, k));
  REQUIRE(back->to_json() == t->to_json());
}

TEST_CASE("inner products") {
  auto t = character_table(library_group("S4"));
  for (std::size_t a = 0; a < t->size(); ++a)
    for (std::size_t b = 0; b < t->size(); ++b)
      REQUIRE(inner_product(*t, t->row_copy(a), t->row_copy(b)) == Cyclo(a == b ? 1 : 0));
}
