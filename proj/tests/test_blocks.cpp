#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "ctc/blocks.hpp"
#include "ctc/library.hpp"

using namespace ctc;

namespace {

std::multiset<std::uint64_t> degrees_of(const BlockSystem& bs, std::size_t b) {
  std::multiset<std::uint64_t> out;
  for (auto chi : bs.block(b).members) out.insert(bs.table().degree(chi));
  return out;
}

// Linkage through p-regular classes: chi ~ psi when sum over p-regular g of
// chi(g) conj(psi(g)) is nonzero; blocks are the connected components.
std::vector<std::size_t> linkage_components(const CharTable& t, unsigned p) {
  const Group& g = t.group();
  std::size_t n = t.size();
  std::vector<std::size_t> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](std::size_t x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Cyclo s(0);
      for (std::size_t k = 0; k < n; ++k) {
        if (g.classes()[k].rep.order() % p == 0) continue;
        s += t.value(a, k) * t.value(b, k).conj() * mpq_class(g.classes()[k].size);
      }
      if (!s.is_zero()) comp[find(a)] = find(b);
    }
  std::vector<std::size_t> out(n);
  for (std::size_t x = 0; x < n; ++x) out[x] = find(x);
  return out;
}

}  // namespace

TEST_CASE("A5 at p = 2 and p = 3") {
  auto g = library_group("A5");
  LocalContext c2(g, 2);
  REQUIRE(c2.top().blocks().size() == 2);
  REQUIRE(degrees_of(c2.top(), 0) == std::multiset<std::uint64_t>{1, 3, 3, 5});
  REQUIRE(c2.top().block(0).defect == 2);
  REQUIRE(c2.top().block(0).defect_group.order() == 4);
  REQUIRE(degrees_of(c2.top(), 1) == std::multiset<std::uint64_t>{4});
  REQUIRE(c2.top().block(1).defect == 0);

  LocalContext c3(g, 3);
  REQUIRE(c3.top().blocks().size() == 3);
  REQUIRE(degrees_of(c3.top(), 0) == std::multiset<std::uint64_t>{1, 4, 5});
  REQUIRE(c3.top().block(0).defect == 1);
  REQUIRE(c3.top().block(1).defect == 0);
  REQUIRE(c3.top().block(2).defect == 0);
}

TEST_CASE("S4 at p = 2 is a single block") {
  LocalContext ctx(library_group("S4"), 2);
  REQUIRE(ctx.top().blocks().size() == 1);
  std::vector<unsigned> heights;
  for (const auto& h : ctx.top().heights(0)) heights.push_back(h.height);
  REQUIRE(heights == std::vector<unsigned>{0, 0, 1, 0, 0});
  REQUIRE(ctx.top().height_zero(0).size() == 4);
}

TEST_CASE("central character of the 2-dimensional character of S3") {
  auto g = library_group("S3");
  auto t = character_table(g);
  std::size_t chi = 2;
  REQUIRE(t->degree(chi) == 2);
  auto omega = central_character(*t, chi);
  std::size_t k3 = g->class_of(Perm::from_cycles(3, "(0 1 2)"));
  std::size_t k2 = g->class_of(Perm::from_cycles(3, "(0 1)"));
  REQUIRE(omega[0] == Cyclo(1));
  REQUIRE(omega[k3] == Cyclo(-1));
  REQUIRE(omega[k2] == Cyclo(0));
}

TEST_CASE("C2 has one block of defect 1") {
  LocalContext ctx(library_group("C2"), 2);
  REQUIRE(ctx.top().blocks().size() == 1);
  REQUIRE(ctx.top().block(0).defect == 1);
}

TEST_CASE("blocks agree with p-regular linkage") {
  for (const char* name : {"S4", "A5", "SL23", "D12", "F20", "F21", "S3xS3", "A4xC2", "M(13,3,3)"}) {
    auto g = library_group(name);
    for (unsigned p : {2u, 3u, 5u, 7u}) {
      if (g->order() % p) continue;
      INFO(name << " p=" << p);
      LocalContext ctx(g, p);
      const auto& bs = ctx.top();
      auto comp = linkage_components(bs.table(), p);
      for (std::size_t a = 0; a < comp.size(); ++a)
        for (std::size_t b = 0; b < comp.size(); ++b)
          REQUIRE((comp[a] == comp[b]) == (bs.block_of(a) == bs.block_of(b)));
    }
  }
}

TEST_CASE("block axioms") {
  for (const char* name : {"S4", "A5", "SL23", "Q8", "D8xC2", "F21", "S3xC3", "A4xC3"}) {
    auto g = library_group(name);
    for (unsigned p : {2u, 3u, 5u, 7u}) {
      if (g->order() % p) continue;
      INFO(name << " p=" << p);
      LocalContext ctx(g, p);
      const auto& bs = ctx.top();
      Subgroup op = p_core(*g, p);
      std::size_t covered = 0, principals = 0;
      for (const auto& b : bs.blocks()) {
        covered += b.members.size();
        principals += b.principal;
        unsigned mx = 0;
        for (auto chi : b.members) mx = std::max(mx, bs.char_defect(chi));
        REQUIRE(b.defect == mx);
        REQUIRE(b.defect_group.order() == static_cast<std::size_t>(std::pow(p, b.defect) + 0.5));
        REQUIRE(op.is_subgroup_of(b.defect_group));
      }
      REQUIRE(covered == bs.table().size());
      REQUIRE(principals == 1);
      REQUIRE(bs.block(0).principal);
      REQUIRE(bs.block(0).defect_group.order() == p_part(g->order(), p));
    }
  }
}

TEST_CASE("Brauer induction is transitive and fixes principal blocks") {
  auto g = library_group("A5");
  LocalContext ctx(g, 2);
  Subgroup v4 = Subgroup::generated_by(5, {Perm::from_cycles(5, "(0 1)(2 3)"), Perm::from_cycles(5, "(0 2)(1 3)")});
  Subgroup a4 = Subgroup::generated_by(5, {Perm::from_cycles(5, "(0 1 2)"), Perm::from_cycles(5, "(0 1)(2 3)")});
  auto bv = ctx.blocks_of(v4);
  auto ba = ctx.blocks_of(a4);
  for (std::size_t b = 0; b < bv->blocks().size(); ++b) {
    auto via = brauer_induce(*bv, b, *ba);
    auto direct = brauer_induce(*bv, b, ctx.top());
    if (via && direct) REQUIRE(brauer_induce(*ba, *via, ctx.top()) == direct);
  }
  REQUIRE(brauer_induce(*bv, 0, ctx.top()) == std::optional<std::size_t>(0));
  REQUIRE(brauer_induce(*ba, 0, ctx.top()) == std::optional<std::size_t>(0));
}

TEST_CASE("Brauer correspondents induce back") {
  for (const char* name : {"S4", "A5", "SL23", "F20", "S3xS3"}) {
    auto g = library_group(name);
    for (unsigned p : {2u, 3u, 5u}) {
      if (g->order() % p) continue;
      INFO(name << " p=" << p);
      LocalContext ctx(g, p);
      for (std::size_t b = 0; b < ctx.top().blocks().size(); ++b) {
        auto [nb, idx] = ctx.brauer_correspondent(b);
        REQUIRE(nb->block(idx).defect == ctx.top().block(b).defect);
        REQUIRE(brauer_induce(*nb, idx, ctx.top()) == std::optional<std::size_t>(b));
      }
    }
  }
}

TEST_CASE("conjugate blocks") {
  auto g = library_group("S4");
  LocalContext ctx(g, 2);
  Subgroup h = Subgroup::generated_by(4, {Perm::from_cycles(4, "(0 1)"), Perm::from_cycles(4, "(2 3)")});
  Perm x = Perm::from_cycles(4, "(1 2)");
  auto bh = ctx.blocks_of(h);
  auto bx = ctx.blocks_of(h.conjugate(x));
  for (std::size_t b = 0; b < bh->blocks().size(); ++b) {
    std::size_t c = conjugate_block(*bh, b, *bx, x);
    REQUIRE(brauer_induce(*bh, b, ctx.top()) == brauer_induce(*bx, c, ctx.top()));
  }
}

TEST_CASE("reduction metadata") {
  LocalContext ctx(library_group("A5"), 2);
  auto j = ctx.environment();
  REQUIRE(j["group_order"] == 60);
  REQUIRE(j["reduction"]["prime"] == 2);
  REQUIRE(j["reduction"].contains("modulus"));
  REQUIRE_THROWS_AS(LocalContext(library_group("A5"), 4), InputError);
}
