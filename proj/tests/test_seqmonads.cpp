#include <doctest.h>

#include <map>
#include <set>

#include "lnlcat/enumerate.hpp"
#include "lnlcat/seqmonads.hpp"
#include "support.hpp"

using namespace lnlcat;
using testcats::seq;

TEST_SUITE("seqmonads") {

TEST_CASE("hom cardinalities over ONE match the factorial / power oracles") {
  ViewPtr one = testcats::one();
  ViewPtr s = free_view(one, Flavor::S);
  ViewPtr c = free_view(one, Flavor::C);
  auto dots = [](int n) {
    Value::List items;
    for (int i = 0; i < n; ++i) items.push_back(Value("•"));
    return Value(std::move(items));
  };
  std::size_t factorial[5] = {1, 1, 2, 6, 24};
  for (int n = 0; n <= 4; ++n) {
    CHECK(s->hom(dots(n), dots(n)).size() == factorial[n]);
    CHECK(s->hom(dots(n), dots(n)).size() ==
          oracle::hom_count(*one, oracle::Mode::S, dots(n), dots(n)));
  }
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m) {
      std::size_t expected = 1;
      for (int j = 0; j < m; ++j) expected *= static_cast<std::size_t>(n);
      CHECK(c->hom(dots(n), dots(m)).size() == expected);
      CHECK(c->hom(dots(n), dots(m)).size() ==
            oracle::hom_count(*one, oracle::Mode::C, dots(n), dots(m)));
    }
}

TEST_CASE("S over ONE: two endomorphisms of the pair") {
  ViewPtr s = free_view(testcats::one(), Flavor::S);
  CHECK(s->hom(seq({"•", "•"}), seq({"•", "•"})).size() == 2);
}

TEST_CASE("C over ONE: one morphism from the singleton to the pair") {
  ViewPtr c = free_view(testcats::one(), Flavor::C);
  CHECK(c->hom(seq({"•"}), seq({"•", "•"})).size() == 1);
}

TEST_CASE("S over ARROW: each bijection <0,1> -> <1,1> admits one component family") {
  ViewPtr arrow = testcats::arrow();
  ViewPtr s = free_view(arrow, Flavor::S);
  auto hom = s->hom(seq({"0", "1"}), seq({"1", "1"}));
  CHECK(hom.size() == 2);
  CHECK(hom.size() == oracle::hom_count(*arrow, oracle::Mode::S, seq({"0", "1"}), seq({"1", "1"})));
}

TEST_CASE("unit takes an object to the singleton and is fully faithful on the sweep") {
  ViewPtr arrow = testcats::arrow();
  for (Flavor flavor : {Flavor::S, Flavor::C}) {
    MonadPresentation monad = flavor == Flavor::S ? monad_S() : monad_C();
    Functor eta = monad.unit(arrow);
    CHECK(eta.ob(Value("0")) == seq({"0"}));
    CHECK(eta.ob(Value("•")).str() == "[\"•\"]");
    SeqMor image = unpack_mor(eta.mor(Value("u")));
    CHECK(image.reindex == std::vector<std::size_t>{0});
    CHECK(image.comps == std::vector<Value>{Value("u")});
    // Full and faithful: hom(a,b) -> hom(<a>,<b>) is a bijection.
    ViewPtr tx = monad.at(arrow);
    std::vector<Value> base_objs = *arrow->objects();
    for (const Value& a : base_objs)
      for (const Value& b : base_objs) {
        auto base_hom = arrow->hom(a, b);
        auto image_hom = tx->hom(eta.ob(a), eta.ob(b));
        CHECK(base_hom.size() == image_hom.size());
        std::set<Value> images;
        for (const Value& m : base_hom) images.insert(eta.mor(m));
        CHECK(images.size() == base_hom.size());
      }
  }
}

TEST_CASE("multiplication concatenates") {
  ViewPtr chain = testcats::chain3();
  MonadPresentation s = monad_S();
  Functor mu = s.mult(chain);
  Value nested(Value::List{seq({"0"}), seq({"1", "2"})});
  CHECK(mu.ob(nested) == seq({"0", "1", "2"}));
  CHECK(mu.ob(Value(Value::List{})) == Value(Value::List{}));
}

TEST_CASE("multiplication flattens block reindexing by position arithmetic") {
  ViewPtr one = testcats::one();
  MonadPresentation c = monad_C();
  ViewPtr cx = c.at(one);
  Functor mu = c.mult(one);

  Value dot = Value("•");
  Value block1 = seq({"•"});
  Value block2 = seq({"•", "•"});
  Value id_dot = one->identity(dot);
  Value diagonal = pack_mor({block1, block2, {0, 0}, {id_dot, id_dot}});

  // Outer: constant [2] -> [1] onto the single source block, inner diagonal.
  Value outer_src(Value::List{block1});
  Value outer_tgt(Value::List{block2, block2});
  Value outer = pack_mor({outer_src, outer_tgt, {0, 0}, {diagonal, diagonal}});

  SeqMor flat = unpack_mor(mu.mor(outer));
  // Independent position arithmetic: target position (j,k) draws from
  // offset(src block of j) + inner reindex, all of which are 0 here.
  std::vector<std::size_t> expected;
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t k = 0; k < 2; ++k) expected.push_back(0 * j + 0 + 0 * k);
  CHECK(flat.reindex == expected);
  CHECK(flat.src == block1);
  CHECK(flat.tgt == seq({"•", "•", "•", "•"}));
}

TEST_CASE("monad laws by exhaustive sweep") {
  CHECK(check_monad_laws(monad_S(), testcats::one(), 3).ok());
  CHECK(check_monad_laws(monad_C(), testcats::arrow(), 2).ok());
  Report empty_sweep = check_monad_laws(monad_S(), testcats::one(), 0);
  CHECK(empty_sweep.ok());
  CHECK_FALSE(empty_sweep.truncated);
}

TEST_CASE("composition of sequence morphisms is associative and unital") {
  ViewPtr arrow = testcats::arrow();
  for (Flavor flavor : {Flavor::S, Flavor::C}) {
    ViewPtr tx = free_view(arrow, flavor);
    // Complete sweep at length <= 2.
    std::vector<Value> objs = sequences_upto(*arrow->objects(), 2);
    bool truncated = false;
    std::vector<Value> mors = morphisms_between(*tx, objs, Sweep{objs, 100000, 100000}, &truncated);
    REQUIRE_FALSE(truncated);
    std::map<std::pair<Value, Value>, std::vector<Value>> by_boundary;
    for (const Value& m : mors) by_boundary[{tx->source(m), tx->target(m)}].push_back(m);
    for (const Value& m : mors) {
      CHECK(tx->compose(tx->identity(tx->source(m)), m) == m);
      CHECK(tx->compose(m, tx->identity(tx->target(m))) == m);
    }
    // Associativity over all composable triples in the complete sweep.
    for (const auto& [fg_key, fs] : by_boundary)
      for (const Value& f : fs)
        for (const auto& [gh_key, gs] : by_boundary) {
          if (gh_key.first != fg_key.second) continue;
          for (const Value& g : gs) {
            Value fg = tx->compose(f, g);
            for (const auto& [hk_key, hs] : by_boundary) {
              if (hk_key.first != gh_key.second) continue;
              for (const Value& h : hs)
                CHECK(tx->compose(fg, h) == tx->compose(f, tx->compose(g, h)));
            }
          }
        }
  }
}

TEST_CASE("lambda is a strict monad map and a literal inclusion") {
  ViewPtr one = testcats::one();
  MonadMap lambda = lambda_map();
  CHECK(check_monad_map(lambda, one, 3).ok());
  CHECK(check_monad_map(lambda, testcats::arrow(), 2).ok());

  Functor lam = lambda.at(one);
  CHECK(lam.ob(seq({"•", "•"})) == seq({"•", "•"}));
  ViewPtr s = free_view(one, Flavor::S);
  ViewPtr c = free_view(one, Flavor::C);
  Value pair = seq({"•", "•"});
  for (const Value& m : s->hom(pair, pair)) CHECK(lam.mor(m) == m);
}

TEST_CASE("lambda is injective and jointly surjective onto bijective reindexes") {
  ViewPtr one = testcats::one();
  ViewPtr s = free_view(one, Flavor::S);
  ViewPtr c = free_view(one, Flavor::C);
  Functor lam = lambda_map().at(one);
  std::vector<Value> objs = sequences_upto(*one->objects(), 3);
  for (const Value& x : objs)
    for (const Value& y : objs) {
      std::set<Value> image;
      for (const Value& m : s->hom(x, y)) image.insert(lam.mor(m));
      CHECK(image.size() == s->hom(x, y).size());  // injective
      std::set<Value> bijective;
      for (const Value& m : c->hom(x, y)) {
        SeqMor sm = unpack_mor(m);
        if (oracle::is_bijection(sm.reindex, x.size())) bijective.insert(m);
      }
      CHECK(image == bijective);  // jointly surjective
    }
}

TEST_CASE("restrict_scalars") {
  ViewPtr chain = testcats::chain3();
  Sweep carrier_sweep{*chain->objects()};

  SUBCASE("identity monad map returns the same algebra") {
    MonadMap id_map{monad_C(), monad_C(),
                    [](ViewPtr base) { return identity_functor(free_view(base, Flavor::C)); }};
    StrictAlgebra alg = testcats::min_algebra();
    StrictAlgebra restricted = restrict_scalars(id_map, alg, carrier_sweep, 2);
    Report cmp;
    check_functors_equal(restricted.structure, alg.structure,
                         {monad_C().objects_upto(carrier_sweep.objects, 2)}, "same", cmp);
    CHECK(cmp.ok());
  }

  SUBCASE("min over Chain3 restricts along lambda to the min tensor S-algebra") {
    StrictAlgebra restricted = restrict_scalars(lambda_map(), testcats::min_algebra(), carrier_sweep, 2);
    CHECK(check_strict_algebra(restricted, carrier_sweep, 2).ok());
    CHECK(restricted.structure.ob(seq({"1", "2"})) == Value("1"));
    CHECK(restricted.structure.ob(seq({"0", "2"})) == Value("0"));
    CHECK(restricted.structure.ob(Value(Value::List{})) == Value("2"));
  }

  SUBCASE("free C-algebra restricts to a lawful S-algebra") {
    ViewPtr arrow = testcats::arrow();
    ViewPtr ca = free_view(arrow, Flavor::C);
    StrictAlgebra free_c{monad_C(), ca, monad_C().mult(arrow)};
    Sweep ca_sweep{sequences_upto(*arrow->objects(), 2)};
    StrictAlgebra restricted = restrict_scalars(lambda_map(), free_c, ca_sweep, 2);
    CHECK(check_strict_algebra(restricted, ca_sweep, 2).ok());
  }

  SUBCASE("an algebra failing its laws is rejected with the failing instance") {
    ViewPtr chain3 = testcats::chain3();
    ViewPtr cx = free_view(chain3, Flavor::C);
    // Deflate after taking the minimum: a perfectly good functor, but
    // z(<1>) = 0 breaks the unit law.
    Functor f = testcats::chain_deflation();
    auto z_ob = [f](const Value& s) -> Value {
      int best = 2;
      for (const Value& e : s.items()) best = std::min(best, std::stoi(e.atom()));
      return f.ob(Value(std::to_string(best)));
    };
    Functor structure{cx, chain3, z_ob, [chain3, cx, z_ob](const Value& m) {
                        return testcats::forced(*chain3, z_ob(cx->source(m)), z_ob(cx->target(m)));
                      }};
    StrictAlgebra bad{monad_C(), chain3, structure};
    try {
      restrict_scalars(lambda_map(), bad, carrier_sweep, 2);
      FAIL("expected rejection");
    } catch (const Rejected& r) {
      CHECK_FALSE(r.report().ok());
      CHECK(r.report().findings[0].law.rfind("algebra.unit", 0) == 0);
    }
  }
}

// The unit of the extension-of-scalars adjunction on a free algebra:
// lambda_A is a strict map from (S A, mu_S) to the restriction of (C A, mu_C).
TEST_CASE("lambda_A is an algebra map from the free S-algebra to the restricted free C-algebra") {
  ViewPtr arrow = testcats::arrow();
  MonadPresentation s = monad_S();
  Functor lam = lambda_map().at(arrow);
  // p . z_a = z_b . S(p) with p = lambda_A, z_a = mu_S and z_b the structure
  // of the restricted algebra, lambda_{C A} ; mu_C.
  Functor lhs = compose_functors(s.mult(arrow), lam);
  Functor rhs = compose_functors(
      s.map(lam),
      compose_functors(lambda_map().at(free_view(arrow, Flavor::C)), monad_C().mult(arrow)));
  std::vector<Value> s2_objs;
  for (const Value& x : s.objects_upto(s.objects_upto(*arrow->objects(), 2), 2))
    if (leaf_count(x) <= 2) s2_objs.push_back(x);
  Report cmp;
  check_functors_equal(lhs, rhs, {s2_objs}, "unit_of_adjunction", cmp);
  CHECK(cmp.ok());
}

}  // TEST_SUITE
