#include <doctest.h>

#include "lnlcat/colax.hpp"
#include "lnlcat/lnlmonad.hpp"
#include "support.hpp"

using namespace lnlcat;
using testcats::seq;

namespace {

Functor constant_functor(ViewPtr src, ViewPtr tgt, const Value& at) {
  return {src, tgt, [at](const Value&) { return at; },
          [tgt, at](const Value&) { return tgt->identity(at); }};
}

}  // namespace

TEST_SUITE("colax") {

TEST_CASE("carrier hom-sets of the colimit") {
  SUBCASE("identity on the point") {
    ColaxColimit col = build_colimit(identity_functor(testcats::one()));
    Value dot("•");
    CHECK(col.carrier->hom(colimit_inr(dot), colimit_inl(dot)).size() == 1);
    CHECK(col.carrier->hom(colimit_inl(dot), colimit_inr(dot)).empty());
    CHECK(col.carrier->objects()->size() == 2);
  }
  SUBCASE("collapse of the arrow to the point") {
    ViewPtr arrow = testcats::arrow();
    ViewPtr one = testcats::one();
    ColaxColimit col = build_colimit(constant_functor(arrow, one, Value("•")));
    for (const char* a : {"0", "1"})
      CHECK(col.carrier->hom(colimit_inr(Value("•")), colimit_inl(Value(a))).size() == 1);
  }
  SUBCASE("identity on the arrow: mixed homs mirror B(b, F a)") {
    ViewPtr arrow = testcats::arrow();
    ColaxColimit col = build_colimit(identity_functor(arrow));
    CHECK(col.carrier->hom(colimit_inr(Value("0")), colimit_inl(Value("1"))).size() == 1);
    CHECK(col.carrier->hom(colimit_inr(Value("1")), colimit_inl(Value("0"))).empty());
  }
}

TEST_CASE("mixed homs are in bijection with B(b, F a) via explicit inverse maps") {
  ViewPtr arrow = testcats::arrow();
  ViewPtr chain = testcats::chain3();
  Functor f{arrow, chain, [](const Value& x) { return x; }, [chain](const Value& m) {
              if (m == Value("u")) return testcats::forced(*chain, Value("0"), Value("1"));
              return m;
            }};
  ColaxColimit col = build_colimit(f);
  auto b_objs = *chain->objects();
  auto a_objs = *arrow->objects();
  for (const Value& b : b_objs)
    for (const Value& a : a_objs) {
      std::vector<Value> mixed = col.carrier->hom(colimit_inr(b), colimit_inl(a));
      std::vector<Value> witnesses = chain->hom(b, f.ob(a));
      REQUIRE(mixed.size() == witnesses.size());
      for (const Value& m : mixed) {
        Value w = m.at(2);  // to the witness...
        CHECK(colimit_mix(a, w) == m);  // ...and back
        bool found = false;
        for (const Value& v : witnesses) found = found || v == w;
        CHECK(found);
      }
    }
}

TEST_CASE("carrier composition is associative over all composable triples") {
  ViewPtr arrow = testcats::arrow();
  ColaxColimit col = build_colimit(identity_functor(arrow));
  std::vector<Value> objs = *col.carrier->objects();
  bool truncated = false;
  std::vector<Value> mors =
      morphisms_between(*col.carrier, objs, Sweep{objs, 1000, 1000}, &truncated);
  REQUIRE_FALSE(truncated);
  for (const Value& f : mors)
    for (const Value& g : mors) {
      if (col.carrier->target(f) != col.carrier->source(g)) continue;
      Value fg = col.carrier->compose(f, g);
      for (const Value& h : mors) {
        if (col.carrier->target(g) != col.carrier->source(h)) continue;
        CHECK(col.carrier->compose(fg, h) == col.carrier->compose(f, col.carrier->compose(g, h)));
      }
    }
}

TEST_CASE("the universal cocone mediates to the identity") {
  ViewPtr arrow = testcats::arrow();
  ColaxColimit col = build_colimit(identity_functor(arrow));
  ColaxCocone universal{col.inj_a, col.inj_b, col.beta};
  Functor r = mediate_cocone(col, universal);
  Sweep a_sweep{*arrow->objects()};
  CHECK(check_mediator(col, universal, r, a_sweep, a_sweep).ok());
  std::vector<Value> objs = *col.carrier->objects();
  Report cmp;
  check_functors_equal(r, identity_functor(col.carrier), {objs}, "universal_identity", cmp);
  CHECK(cmp.ok());
}

TEST_CASE("collapsing cocone over the identity functor") {
  ViewPtr arrow = testcats::arrow();
  ColaxColimit col = build_colimit(identity_functor(arrow));
  Functor id_a = identity_functor(arrow);
  ColaxCocone collapse{id_a, id_a, identity_transform(id_a)};
  Functor r = mediate_cocone(col, collapse);
  Sweep a_sweep{*arrow->objects()};
  CHECK(check_mediator(col, collapse, r, a_sweep, a_sweep).ok());
  CHECK(r.ob(colimit_inl(Value("0"))) == Value("0"));
  CHECK(r.ob(colimit_inr(Value("0"))) == Value("0"));
  // Re-mediating the mediated data returns r.
  ColaxCocone derived{compose_functors(col.inj_a, r), compose_functors(col.inj_b, r),
                      NatTransform{compose_functors(col.input, compose_functors(col.inj_b, r)),
                                   compose_functors(col.inj_a, r),
                                   [col, r](const Value& a) { return r.mor(col.beta.at(a)); }}};
  Functor r2 = mediate_cocone(col, derived);
  Report cmp;
  check_functors_equal(r, r2, {*col.carrier->objects()}, "remediate", cmp);
  CHECK(cmp.ok());
}

TEST_CASE("a non-natural comparison 2-cell is rejected") {
  ViewPtr arrow = testcats::arrow();
  ViewPtr pp = testcats::parallel();
  ColaxColimit col = build_colimit(identity_functor(arrow));
  Functor f{arrow, pp, [](const Value& x) { return x; }, [](const Value& m) { return m; }};
  Functor g{arrow, pp, [](const Value& x) { return x; },
            [](const Value& m) {
              if (m == Value("u")) return Value("v");
              return m;
            }};
  ColaxCocone bad{f, g,
                  NatTransform{compose_functors(identity_functor(arrow), g), f,
                               [pp](const Value& x) { return pp->identity(x); }}};
  CHECK_THROWS_AS(mediate_cocone(col, bad), Rejected);
}

TEST_CASE("poset targets: every boundary-correct cocone mediates uniquely") {
  ViewPtr arrow = testcats::arrow();
  ViewPtr chain = testcats::chain3();
  ColaxColimit col = build_colimit(identity_functor(arrow));
  for (const Functor& f : enumerate_functors(arrow, chain))
    for (const Functor& g : enumerate_functors(arrow, chain))
      for (const NatTransform& phi :
           enumerate_transforms(compose_functors(identity_functor(arrow), g), f)) {
        ColaxCocone cc{f, g, phi};
        Functor r = mediate_cocone(col, cc);
        Sweep a_sweep{*arrow->objects()};
        CHECK(check_mediator(col, cc, r, a_sweep, a_sweep).ok());
        CHECK(check_mediator_unique(col, cc, r).ok());
      }
}

TEST_CASE("non-thin target: mediator and its uniqueness oracle") {
  ViewPtr one = testcats::one();
  ViewPtr arrow = testcats::arrow();
  ViewPtr pp = testcats::parallel();
  Functor embed = constant_functor(one, arrow, Value("0"));
  ColaxColimit col = build_colimit(embed);
  int cocones = 0;
  for (const Functor& f : enumerate_functors(one, pp))
    for (const Functor& g : enumerate_functors(arrow, pp))
      for (const NatTransform& phi : enumerate_transforms(compose_functors(embed, g), f)) {
        ColaxCocone cc{f, g, phi};
        Functor r = mediate_cocone(col, cc);
        Sweep a_sweep{*one->objects()};
        Sweep b_sweep{*arrow->objects()};
        CHECK(check_mediator(col, cc, r, a_sweep, b_sweep).ok());
        CHECK(check_mediator_unique(col, cc, r).ok());
        ++cocones;
      }
  CHECK(cocones > 0);
}

TEST_CASE("2-cell mediation") {
  ViewPtr one = testcats::one();
  ViewPtr pp = testcats::parallel();
  ColaxColimit col = build_colimit(identity_functor(one));
  Value dot("•");

  Functor f0 = constant_functor(one, pp, Value("0"));
  Functor f1 = constant_functor(one, pp, Value("1"));
  auto id_phi = [&](const Functor& f) {
    return NatTransform{compose_functors(identity_functor(one), f), f,
                        [f, pp](const Value& x) { return pp->identity(f.ob(x)); }};
  };
  ColaxCocone cc{f0, f0, id_phi(f0)};
  ColaxCocone cc2{f1, f1, id_phi(f1)};

  SUBCASE("identity 2-cells mediate to the identity") {
    NatTransform rho{f0, f0, [pp](const Value&) { return pp->identity(Value("0")); }};
    NatTransform tau = mediate_2cell(col, cc, cc, rho, rho);
    CHECK(tau.at(colimit_inl(dot)) == pp->identity(Value("0")));
    CHECK(tau.at(colimit_inr(dot)) == pp->identity(Value("0")));
    CHECK(check_2cell_unique(col, mediate_cocone(col, cc), mediate_cocone(col, cc), rho, rho, tau)
              .ok());
  }

  SUBCASE("a compatible non-identity pair mediates, with whiskering equalities") {
    NatTransform rho{f0, f1, [](const Value&) { return Value("u"); }};
    NatTransform sigma{f0, f1, [](const Value&) { return Value("u"); }};
    NatTransform tau = mediate_2cell(col, cc, cc2, rho, sigma);
    CHECK(tau.at(colimit_inl(dot)) == Value("u"));
    CHECK(tau.at(colimit_inr(dot)) == Value("u"));
    Functor r = mediate_cocone(col, cc);
    Functor r2 = mediate_cocone(col, cc2);
    std::vector<Value> objs = *col.carrier->objects();
    CHECK(validate_nat_transform(NatTransform{r, r2, tau.component}, Sweep{objs}).ok());
    CHECK(check_2cell_unique(col, r, r2, rho, sigma, tau).ok());
  }

  SUBCASE("an incompatible pair is rejected with the failing component") {
    NatTransform rho{f0, f1, [](const Value&) { return Value("u"); }};
    NatTransform sigma{f0, f1, [](const Value&) { return Value("v"); }};
    CHECK_THROWS_AS(mediate_2cell(col, cc, cc2, rho, sigma), Rejected);
  }
}

TEST_CASE("C+ carrier over ONE") {
  ViewPtr one = testcats::one();
  ColaxColimit col = cplus_colimit(one);
  Value dot("•");
  // hom(<•,•>_B, •_A) ~ C(ONE)(<•,•>, <•>), which has two elements.
  CHECK(col.carrier->hom(colimit_inr(seq({"•", "•"})), colimit_inl(dot)).size() == 2);
  MonadPresentation cp = cplus_monad();
  CHECK(cp.unit(one).ob(dot) == colimit_inl(dot));
}

TEST_CASE("C+ monad laws over ONE, bounded") {
  Report r = check_monad_laws(cplus_monad(), testcats::one(), 2);
  CHECK(r.ok());
}

TEST_CASE("a left-semi C-algebra induces a C+-algebra and comes back unchanged") {
  StrictAlgebra min_alg = testcats::min_algebra();
  Sweep sweep{*min_alg.carrier->objects()};
  LeftSemiAlgebra lsa = lsa_from_comonad(min_alg, testcats::chain_deflation(),
                                         testcats::chain_deflation_counit(), sweep, 2);

  StrictAlgebra cplus_alg = cplus_algebra_from_lsa(lsa, sweep, 2);
  CHECK(check_strict_algebra(cplus_alg, sweep, 2).ok());

  LeftSemiAlgebra back = lsa_from_cplus_algebra(cplus_alg);
  Report cmp;
  check_functors_equal(back.structure, lsa.structure,
                       {monad_C().objects_upto(sweep.objects, 2)}, "extracted_z", cmp);
  CHECK(cmp.ok());
  for (const Value& x : sweep.objects) CHECK(back.counit(x) == lsa.counit(x));
  CHECK(check_left_semi_algebra(back, sweep, 2).ok());
}

}  // TEST_SUITE
