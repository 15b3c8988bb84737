#include "doctest.h"
#include "holoforms/nullcone.hpp"
#include "holoforms/oracle.hpp"
#include "holoforms/parser.hpp"
#include "holoforms/rng.hpp"

#include <stdexcept>
#include <string>

using namespace holoforms;

namespace {

int pm(int k) { return (k & 1) ? -1 : 1; }

// Left-nested k-th curlywedge power.
Form curly_power(const NullForm& base, int k) {
  Form acc = base.form();
  for (int i = 1; i < k; ++i) acc = curlywedge(NullForm(acc), base);
  return acc;
}

// e^- wedge (transverse volume), bits 0 and 2..2+nt-1.
Mask null_volume_mask(int nt) { return (((Mask(1) << nt) - 1) << 2) | 1u; }

int random_null_degree(SplitMix64& rng, const FrameContext& f, int max_deg = 5) {
  int top = std::min(max_deg, f.dim - 1);
  return 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(top)));
}

}  // namespace

TEST_SUITE_BEGIN("nullcone");

TEST_CASE("null predicate checks both kappa conditions") {
  FrameContext lc = lightcone_frame(10);
  Form k = kappa_form(lc);
  Form wb = parse_form("e12+e34+e56+e78", lc);
  Form along_minus = wedge(k, wb);
  Form along_plus = wedge(parse_form("ep", lc), wb);

  CHECK(is_null_along(k, along_minus));
  CHECK_FALSE(is_null_along(k, along_plus));
  CHECK_FALSE(is_null_along(k, wb));
  CHECK(is_null_along(k, Form(lc, 3)));  // zero form

  CHECK_NOTHROW(NullForm{along_minus});
  CHECK_THROWS_AS(NullForm{along_plus}, std::invalid_argument);
  CHECK_THROWS_AS(NullForm{wb}, std::invalid_argument);
  CHECK_THROWS_AS(NullForm(Form::basis(euclidean_frame(4), 1u)), std::invalid_argument);
  CHECK(NullForm(along_minus).kappa_index() == 0);

  CHECK_THROWS_AS(is_null_along(wb, along_minus), std::invalid_argument);  // deg kappa != 1
  CHECK_THROWS_AS(is_null_along(Form(lc, 1), along_minus), std::invalid_argument);
  CHECK_THROWS_AS(is_null_along(kappa_form(lightcone_frame(6)), along_minus),
                  std::invalid_argument);
  CHECK_THROWS_AS(kappa_form(euclidean_frame(4)), std::invalid_argument);
}

TEST_CASE("breve strips the minus factor and round-trips") {
  FrameContext lc = lightcone_frame(10);
  Form wb = parse_form("e12+e34+e56+e78", lc);
  CHECK(breve(NullForm(wedge(kappa_form(lc), wb))) == wb);

  Form bk = breve(NullForm(kappa_form(lc)));
  CHECK(bk.degree() == 0);
  CHECK(bk.coefficient(0) == Scalar(1));

  SplitMix64 rng(101);
  for (int t = 0; t < 100; ++t) {
    FrameContext f = lightcone_frame(4 + 2 * static_cast<int>(rng.below(4)));
    NullForm phi = random_null_form(rng, f, random_null_degree(rng, f));
    Form b = breve(phi);
    CHECK(b.degree() == phi.degree() - 1);
    for (const auto& [mask, c] : b.terms()) CHECK((mask & 3u) == 0u);
    CHECK(wedge(kappa_form(f), b) == phi.form());
  }
}

TEST_CASE("curlywedge expands hermitian squares and has kappa as unit") {
  FrameContext lc = lightcone_frame(10);
  Form wb = parse_form("e12+e34+e56+e78", lc);
  NullForm omega(wedge(kappa_form(lc), wb));
  CHECK(curlywedge(omega, omega) == wedge(omega.form(), wb));

  SplitMix64 rng(103);
  NullForm kap(kappa_form(lc));
  for (int t = 0; t < 50; ++t) {
    NullForm phi = random_null_form(rng, lc, random_null_degree(rng, lc));
    CHECK(curlywedge(kap, phi) == phi.form());
    CHECK(curlywedge(phi, kap) == phi.form());
    CHECK_NOTHROW(NullForm(curlywedge(phi, omega)));  // results stay null
  }
}

TEST_CASE("curlywedge powers of the hermitian form count permutations") {
  for (int n = 2; n <= 4; ++n) {
    FrameContext lc = lightcone_frame(2 * n + 2);
    Form wb(lc, 2);
    for (int a = 2; a + 1 < lc.dim; a += 2) wb.add_term(Mask(3) << a, Scalar(1));
    NullForm omega(wedge(kappa_form(lc), wb));
    Form expected =
        Form::basis(lc, null_volume_mask(2 * n), Scalar(Rational::factorial(unsigned(n))));
    CHECK(curly_power(omega, n) == expected);
  }
}

TEST_CASE("curlywedge associates on random null forms") {
  SplitMix64 rng(107);
  for (int t = 0; t < 100; ++t) {
    FrameContext f = lightcone_frame(4 + 2 * static_cast<int>(rng.below(4)));
    NullForm a = random_null_form(rng, f, random_null_degree(rng, f));
    NullForm b = random_null_form(rng, f, random_null_degree(rng, f));
    NullForm c = random_null_form(rng, f, random_null_degree(rng, f));
    CHECK(curlywedge(NullForm(curlywedge(a, b)), c) ==
          curlywedge(a, NullForm(curlywedge(b, c))));
  }
}

TEST_CASE("kappa barcurlywedges to zero on both sides") {
  FrameContext lc = lightcone_frame(8);
  SplitMix64 rng(109);
  NullForm kap(kappa_form(lc));
  NullForm kap3(kappa_form(lc) * Scalar(-3));
  for (int t = 0; t < 30; ++t) {
    NullForm phi = random_null_form(rng, lc, random_null_degree(rng, lc));
    CHECK(barcurlywedge(kap, phi).is_zero());
    CHECK(barcurlywedge(phi, kap).is_zero());
    CHECK(barcurlywedge(kap3, phi).is_zero());
  }
  CHECK(barcurlywedge(kap, kap).is_zero());
}

TEST_CASE("su(2) frame bracket constants") {
  FrameContext lc = lightcone_frame(6);
  NullForm omega(parse_form("em12+em34", lc));
  NullForm chi1(parse_form("em13-em24", lc));
  NullForm chi2(parse_form("em14+em23", lc));

  CHECK(barcurlywedge(omega, chi1) == chi2.form() * Scalar(2));
  CHECK(barcurlywedge(omega, chi2) == chi1.form() * Scalar(-2));
  // central element: curly-power 1 of omega is omega itself, constant 2/0!.
  CHECK(barcurlywedge(chi1, chi2) == omega.form() * Scalar(2));
  CHECK(barcurlywedge(omega, omega).is_zero());
  CHECK(barcurlywedge(chi1, chi1).is_zero());
  CHECK(barcurlywedge(chi2, chi2).is_zero());
}

TEST_CASE("su(3) frame bracket constants") {
  FrameContext lc = lightcone_frame(8);
  NullForm omega(parse_form("em12+em34+em56", lc));
  NullForm chi1(parse_form("em135-em146-em236-em245", lc));
  NullForm chi2(parse_form("em136+em145+em235-em246", lc));

  CHECK(barcurlywedge(omega, chi1) == chi2.form() * Scalar(3));
  CHECK(barcurlywedge(omega, chi2) == chi1.form() * Scalar(-3));
  // Odd transverse degree: the diagonal entries survive and the off-diagonal
  // one vanishes; the central element is the curlywedge square of omega with
  // constant 2/1!.
  Form central = curly_power(omega, 2);
  CHECK(barcurlywedge(chi1, chi1) == central * Scalar(2));
  CHECK(barcurlywedge(chi2, chi2) == central * Scalar(2));
  CHECK(barcurlywedge(chi1, chi2).is_zero());
  CHECK(barcurlywedge(omega, omega).is_zero());
}

TEST_CASE("barwedge of null forms vanishes") {
  SplitMix64 rng(113);
  for (int t = 0; t < 100; ++t) {
    FrameContext f = lightcone_frame(4 + 2 * static_cast<int>(rng.below(4)));
    NullForm a = random_null_form(rng, f, random_null_degree(rng, f));
    NullForm b = random_null_form(rng, f, random_null_degree(rng, f));
    CHECK(barwedge(a.form(), b.form()).is_zero());
  }
}

TEST_CASE("barcurlywedge symmetry and degree bookkeeping") {
  SplitMix64 rng(127);
  int nontrivial = 0;
  for (int t = 0; t < 100; ++t) {
    FrameContext f = lightcone_frame(8 + 2 * static_cast<int>(rng.below(2)));
    NullForm a = random_null_form(rng, f, random_null_degree(rng, f));
    NullForm b = random_null_form(rng, f, random_null_degree(rng, f));
    Form ab = barcurlywedge(a, b);
    Form ba = barcurlywedge(b, a);
    int at = a.degree() - 1, bt = b.degree() - 1;
    CHECK(ab == ba * Scalar(Rational(pm((at - 1) * (bt - 1)))));
    if (!ab.is_zero()) {
      ++nontrivial;
      CHECK(ab.degree() == a.degree() + b.degree() - 3);
      CHECK_NOTHROW(NullForm{ab});
    }
  }
  CHECK(nontrivial > 40);
}

TEST_CASE("null bracket is a superbracket: antisymmetry and jacobi") {
  SplitMix64 rng(131);
  int antisym_nontrivial = 0;
  for (int t = 0; t < 100; ++t) {
    FrameContext f = lightcone_frame(8 + 2 * static_cast<int>(rng.below(2)));
    NullForm a = random_null_form(rng, f, random_null_degree(rng, f));
    NullForm b = random_null_form(rng, f, random_null_degree(rng, f));
    Form lhs = null_bracket(a, b);
    Form rhs = null_bracket(b, a) * Scalar(Rational(-pm(null_parity(a) * null_parity(b))));
    CHECK(lhs == rhs);
    if (!lhs.is_zero()) ++antisym_nontrivial;
  }
  CHECK(antisym_nontrivial > 40);

  int jacobi_nontrivial = 0;
  for (int t = 0; t < 100; ++t) {
    FrameContext f = lightcone_frame(10);
    NullForm a = random_null_form(rng, f, 2 + static_cast<int>(rng.below(4)), 4);
    NullForm b = random_null_form(rng, f, 2 + static_cast<int>(rng.below(4)), 4);
    NullForm c = random_null_form(rng, f, 2 + static_cast<int>(rng.below(4)), 4);
    int pa = null_parity(a), pb = null_parity(b), pc = null_parity(c);
    Form t1 = null_bracket(a, NullForm(null_bracket(b, c))) * Scalar(Rational(pm(pa * pc)));
    Form t2 = null_bracket(b, NullForm(null_bracket(c, a))) * Scalar(Rational(pm(pb * pa)));
    Form t3 = null_bracket(c, NullForm(null_bracket(a, b))) * Scalar(Rational(pm(pc * pb)));
    if (!t1.is_zero() || !t2.is_zero() || !t3.is_zero()) ++jacobi_nontrivial;
    CHECK((t1 + t2 + t3).is_zero());
  }
  CHECK(jacobi_nontrivial > 20);
}

TEST_CASE("patch transforms fix e-minus and the metric") {
  SplitMix64 rng(137);
  for (int t = 0; t < 50; ++t) {
    FrameContext f = lightcone_frame(4 + 2 * static_cast<int>(rng.below(5)));
    PatchTransform tr = random_patch_transform(rng, f);

    Mat s = patch_substitution(tr, f);
    Mat g = metric_matrix(f);
    CHECK(s.transposed() * g * s == g);

    CHECK(patch_transform(kappa_form(f), tr) == kappa_form(f));

    int deg = 1 + static_cast<int>(rng.below(3));
    Form phi = oracle::random_form(rng, f, deg);  // arbitrary, not null
    PatchTransform ident(Mat::identity(f.dim - 2), Vec(f.dim - 2));
    CHECK(patch_transform(phi, ident) == phi);
  }

  Mat bad = Mat::identity(2);
  bad(0, 1) = 1;
  CHECK_THROWS_AS(PatchTransform(bad, Vec(2)), std::invalid_argument);
  CHECK_THROWS_AS(PatchTransform(Mat::identity(2), Vec(3)), std::invalid_argument);

  for (int size = 1; size <= 8; ++size) {
    SplitMix64 r2(size);
    Mat o = random_orthogonal(r2, size);
    CHECK(o.transposed() * o == Mat::identity(size));
  }
}

TEST_CASE("breve representatives are patch dependent") {
  FrameContext lc = lightcone_frame(4);
  NullForm phi(parse_form("em1", lc));
  PatchTransform tr(Mat::identity(2), Vec{Rational(1), Rational(0)});

  Form moved_breve = patch_transform(breve(phi), tr);
  Form breve_moved = breve(NullForm(patch_transform(phi.form(), tr)));
  CHECK(moved_breve != breve_moved);
  // The two representatives differ by a multiple of e^-.
  CHECK(wedge(kappa_form(lc), moved_breve - breve_moved).is_zero());
}

TEST_CASE("curlywedge and barcurlywedge are patch invariant") {
  SplitMix64 rng(139);
  int curly_nontrivial = 0, barcurly_nontrivial = 0;
  for (int t = 0; t < 200; ++t) {
    FrameContext f = lightcone_frame(4 + 2 * static_cast<int>(rng.below(4)));
    NullForm a = random_null_form(rng, f, random_null_degree(rng, f, 4), 4);
    NullForm b = random_null_form(rng, f, random_null_degree(rng, f), 4);
    PatchTransform tr = random_patch_transform(rng, f);
    NullForm ta(patch_transform(a.form(), tr));  // transforms preserve nullity
    NullForm tb(patch_transform(b.form(), tr));

    Form curly = curlywedge(a, b);
    CHECK(patch_transform(curly, tr) == curlywedge(ta, tb));
    if (!curly.is_zero()) ++curly_nontrivial;

    Form barcurly = barcurlywedge(a, b);
    CHECK(patch_transform(barcurly, tr) == barcurlywedge(ta, tb));
    if (!barcurly.is_zero()) ++barcurly_nontrivial;
  }
  CHECK(curly_nontrivial > 120);
  CHECK(barcurly_nontrivial > 60);
}

TEST_SUITE_END();
