#include "doctest.h"
#include "holoforms/clifford.hpp"
#include "holoforms/combinatorics.hpp"
#include "holoforms/nullcone.hpp"
#include "holoforms/parser.hpp"
#include "holoforms/rng.hpp"

#include <stdexcept>
#include <vector>

using namespace holoforms;

namespace {

Spinor sp(const SpinorModel& m, const char* text) { return parse_spinor(text, m); }

// Random element of the orthogonal algebra: a short rational combination of
// plane rotation generators.
Mat random_so(SplitMix64& rng, const SpinorModel& m) {
  const int n = m.dim();
  Mat x(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  const int picks = 2 + static_cast<int>(rng.below(3));
  for (int t = 0; t < picks; ++t) {
    int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    int b = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    if (a == b) continue;
    Rational c = random_rational(rng, 3, 2);
    if (c.is_zero()) c = 1;
    x = x + so_generator(m, a, b).scaled(c);
  }
  return x;
}

}  // namespace

TEST_SUITE_BEGIN("clifford");

TEST_CASE("gamma action on generators and squares") {
  const SpinorModel m = ten_d_model();
  const Spinor one = Spinor::basis(m, 0);
  CHECK(gamma_apply(1, one) == sp(m, "e1"));
  CHECK(gamma_apply(1, sp(m, "e1")) == one);
  CHECK(gamma_apply(0, one) == sp(m, "-e5"));
  CHECK(gamma_apply(0, sp(m, "-e5")) == -one);
  CHECK(gamma_apply(6, one) == sp(m, "ie1"));
  CHECK_THROWS_AS(gamma_apply(10, one), std::out_of_range);
  CHECK_THROWS_AS(gamma_apply(-1, one), std::out_of_range);
  CHECK_THROWS_AS(gamma_apply(8, Spinor::basis(eight_d_model(), 0)), std::out_of_range);

  // Linearity over Scalars.
  SplitMix64 rng(11);
  for (int t = 0; t < 20; ++t) {
    const Spinor z = random_spinor(rng, m);
    const Spinor w = random_spinor(rng, m);
    const Scalar c = random_scalar(rng, 3, 2);
    const int a = static_cast<int>(rng.below(10));
    CHECK(gamma_apply(a, z * c + w) == gamma_apply(a, z) * c + gamma_apply(a, w));
  }
}

TEST_CASE("exhaustive Clifford relations and chirality flip") {
  for (const SpinorModel m : {ten_d_model(), eight_d_model()}) {
    const int n = m.dim();
    const Mask basis_count = Mask(1) << m.k();
    for (int a = 0; a < n; ++a) {
      for (int b = a; b < n; ++b) {
        for (Mask s = 0; s < basis_count; ++s) {
          const Spinor z = Spinor::basis(m, s);
          const Spinor anti = gamma_apply(a, gamma_apply(b, z)) + gamma_apply(b, gamma_apply(a, z));
          CHECK(anti == z * Scalar(2 * m.metric(a, b)));
        }
      }
    }
    for (int a = 0; a < n; ++a)
      for (Mask s = 0; s < basis_count; ++s)
        CHECK(chirality(gamma_apply(a, Spinor::basis(m, s))) == -chirality(Spinor::basis(m, s)));
  }
}

TEST_CASE("chirality grading") {
  const SpinorModel m = ten_d_model();
  CHECK(chirality(sp(m, "1+e1234")) == 1);
  CHECK(chirality(sp(m, "e1+e234")) == -1);
  CHECK(chirality(Spinor(m)) == 0);
  CHECK_THROWS_AS(chirality(sp(m, "1+e1")), std::invalid_argument);
}

TEST_CASE("spin action: zero, plane-rotation phases, commutators") {
  const SpinorModel m = ten_d_model();
  const Spinor one = Spinor::basis(m, 0);
  CHECK(spin_act(Mat(10, 10), one).is_zero());

  // A rotation mixing a generator with its imaginary partner acts on the
  // vacuum by a phase; one mixing two imaginary directions moves it.
  CHECK(spin_act(so_generator(m, 1, 6), one) == one * (Scalar::i() * Scalar(Rational(1, 2))));
  CHECK(spin_act(so_generator(m, 6, 7), one) == sp(m, "-1/2*e12"));

  Mat bad(10, 10);
  bad(0, 0) = 1;
  CHECK_THROWS_AS(spin_act(bad, one), std::invalid_argument);
  CHECK_THROWS_AS(spin_act(Mat(8, 8), one), std::invalid_argument);

  for (const SpinorModel mm : {ten_d_model(), eight_d_model()}) {
    SplitMix64 rng(23);
    for (int t = 0; t < 50; ++t) {
      const Mat x = random_so(rng, mm);
      const Mat y = random_so(rng, mm);
      const Spinor eps = random_spinor(rng, mm);
      const Spinor lhs = spin_act(x * y - y * x, eps);
      const Spinor rhs = spin_act(x, spin_act(y, eps)) - spin_act(y, spin_act(x, eps));
      CHECK(lhs == rhs);
      const Spinor moved = spin_act(x, random_spinor(rng, mm, +1));
      if (!moved.is_zero()) CHECK(chirality(moved) == 1);
    }
  }
}

TEST_CASE("reality map: frozen values, involution, Majorana split") {
  const SpinorModel m = ten_d_model();
  CHECK(reality_map(sp(m, "1")) == sp(m, "e1234"));
  CHECK(reality_map(sp(m, "e1234")) == sp(m, "1"));
  CHECK(reality_map(sp(m, "e12")) == sp(m, "-e34"));
  CHECK(reality_map(sp(m, "e13")) == sp(m, "e24"));
  CHECK(reality_map(sp(m, "e15")) == sp(m, "e2345"));
  CHECK(is_majorana(sp(m, "1+e1234")));
  CHECK_FALSE(is_majorana(sp(m, "1")));

  const SpinorModel e8 = eight_d_model();
  CHECK(reality_map(sp(e8, "e1")) == sp(e8, "e234"));
  CHECK(is_majorana(sp(e8, "1+e1234")));

  for (const SpinorModel mm : {ten_d_model(), eight_d_model()}) {
    SplitMix64 rng(37);
    for (int t = 0; t < 100; ++t) {
      const Spinor eps = random_spinor(rng, mm);
      CHECK(reality_map(reality_map(eps)) == eps);
      const Scalar c = random_scalar(rng, 3, 2);
      CHECK(reality_map(eps * c) == reality_map(eps) * c.conj());
      CHECK(is_majorana(real_part(eps)));
      CHECK(is_majorana(imag_part(eps)));
      CHECK(real_part(eps) + imag_part(eps) * Scalar::i() == eps);
    }
  }

  // Parts of the complex representative "1".
  CHECK(real_part(sp(m, "1")) == sp(m, "1/2+1/2*e1234"));
  CHECK(majorana_parts(sp(m, "1")).size() == 2);
  const Spinor maj = sp(m, "1+e1234");
  const auto parts = majorana_parts(maj * Scalar::i());
  REQUIRE(parts.size() == 1);
  CHECK(parts[0] == maj);
}

TEST_CASE("dirac product: invariance, sesquilinearity, frozen values") {
  for (const SpinorModel m : {ten_d_model(), eight_d_model()}) {
    SplitMix64 rng(41);
    const auto gens = so_basis(m);
    CHECK(gens.size() == (m.kind == SpinorKind::ten_d ? 45u : 28u));
    for (const Mat& x : gens) {
      for (int t = 0; t < 3; ++t) {
        const Spinor a = random_spinor(rng, m);
        const Spinor b = random_spinor(rng, m);
        CHECK(dirac(spin_act(x, a), b) + dirac(a, spin_act(x, b)) == Scalar(0));
      }
    }
    for (int t = 0; t < 40; ++t) {
      const Spinor a = random_spinor(rng, m);
      const Spinor b = random_spinor(rng, m);
      const Spinor c = random_spinor(rng, m);
      const Scalar z = random_scalar(rng, 3, 2);
      CHECK(dirac(a * z, b) == z.conj() * dirac(a, b));
      CHECK(dirac(a, b * z) == z * dirac(a, b));
      CHECK(dirac(a + c, b) == dirac(a, b) + dirac(c, b));
    }
  }

  const SpinorModel ten = ten_d_model();
  const SpinorModel e8 = eight_d_model();
  CHECK(dirac(sp(e8, "1+e1234"), sp(e8, "1+e1234")) == Scalar(2));
  CHECK(dirac(sp(ten, "e5"), sp(ten, "1")) == Scalar(-1));
  // The gamma-0 sandwich flips chirality, so the product pairs the two
  // chirality halves and vanishes on same-chirality pairs.
  SplitMix64 rng(43);
  for (int t = 0; t < 100; ++t) {
    const int chi = (t & 1) ? -1 : 1;
    const Spinor a = random_spinor(rng, ten, chi);
    const Spinor b = random_spinor(rng, ten, chi);
    CHECK(dirac(a, b) == Scalar(0));
  }
  CHECK_THROWS_AS(dirac(sp(ten, "1"), sp(e8, "1")), std::invalid_argument);
}

TEST_CASE("model frame conversion carries the metric exactly") {
  for (const SpinorModel m : {ten_d_model(), eight_d_model()}) {
    const Mat s = model_to_frame(m);
    const Mat gf = metric_matrix(bilinear_frame(m));
    CHECK(s * gf * s.transposed() == model_metric_matrix(m));
    SplitMix64 rng(47);
    for (int t = 0; t < 20; ++t)
      CHECK(in_orthogonal_algebra(algebra_to_frame(m, random_so(rng, m)), bilinear_frame(m)));
  }
}

TEST_CASE("one-form bilinear of 1+e1234 is twice the null coframe direction") {
  const SpinorModel m = ten_d_model();
  const FrameContext lc = bilinear_frame(m);
  const Spinor eps = sp(m, "1+e1234");
  const Form kappa = bilinear(eps, eps, 1);
  CHECK(kappa == Form::basis(lc, 1u, Scalar(2)));
  // Null: contracting the raised form back in gives g(k,k) = 0.
  CHECK(barwedge(kappa, kappa).is_zero());
  CHECK(is_null_along(kappa_form(lc), kappa));
}

TEST_CASE("bilinears of even pairs vanish in even degree") {
  const SpinorModel m = ten_d_model();
  SplitMix64 rng(53);
  for (int t = 0; t < 20; ++t) {
    const Spinor a = random_spinor(rng, m, +1);
    const Spinor b = random_spinor(rng, m, +1);
    for (int k : {0, 2, 4}) CHECK(bilinear(a, b, k).is_zero());
  }
  // In the euclidean model the product does not flip chirality, so the
  // parity pattern is reversed: odd degrees vanish instead.
  const SpinorModel e8 = eight_d_model();
  for (int t = 0; t < 20; ++t) {
    const Spinor a = random_spinor(rng, e8, +1);
    const Spinor b = random_spinor(rng, e8, +1);
    for (int k : {1, 3, 5}) CHECK(bilinear(a, b, k).is_zero());
  }
  const Spinor eps = sp(e8, "1+e1234");
  CHECK(bilinear(eps, eps, 0) == Form::basis(euclidean_frame(8), 0, Scalar(2)));
  CHECK_FALSE(bilinear(eps, eps, 4).is_zero());
}

TEST_CASE("bilinear equivariance under the spin action") {
  for (const SpinorModel m : {ten_d_model(), eight_d_model()}) {
    SplitMix64 rng(59);
    for (int t = 0; t < 25; ++t) {
      const Mat x = random_so(rng, m);
      const Spinor a = random_spinor(rng, m);
      const Spinor b = random_spinor(rng, m);
      const int k = 1 + static_cast<int>(rng.below(3));
      const Form lhs = bilinear(spin_act(x, a), b, k) + bilinear(a, spin_act(x, b), k);
      CHECK(lhs == so_act(algebra_to_frame(m, x), bilinear(a, b, k)));
    }
  }
}

TEST_CASE("all bilinears of the real vacuum pair are null along kappa") {
  const SpinorModel m = ten_d_model();
  const Form kappa = kappa_form(bilinear_frame(m));
  const std::vector<Spinor> set = majorana_parts(sp(m, "1"));
  REQUIRE(set.size() == 2);
  int nonzero = 0;
  for (const Spinor& a : set) {
    for (const Spinor& b : set) {
      for (int k = 1; k <= 6; ++k) {
        const Form phi = bilinear(a, b, k);
        if (!phi.is_zero()) ++nonzero;
        CHECK(is_null_along(kappa, phi));
      }
    }
  }
  CHECK(nonzero > 0);
}

TEST_CASE("one-form bilinear space of the G2 spinor pair has dimension 3") {
  const SpinorModel m = ten_d_model();
  const std::vector<Spinor> set{sp(m, "1+e1234"), sp(m, "e15+e2345")};
  Span span(20);
  for (const Spinor& a : set) {
    for (const Spinor& b : set) {
      const Form phi = bilinear(a, b, 1);
      Vec v(20);
      for (const auto& [s, c] : phi.terms()) {
        const int idx = mask_tuple(s)[0];
        v[static_cast<std::size_t>(idx)] = c.re;
        v[static_cast<std::size_t>(10 + idx)] = c.im;
      }
      span.add(v);
    }
  }
  CHECK(span.dim() == 3);
}

TEST_CASE("spinor text round-trips through the grammar") {
  CHECK(sp(ten_d_model(), "i(e12+e34)") ==
        Spinor::basis(ten_d_model(), 0b00011u, Scalar::i()) +
            Spinor::basis(ten_d_model(), 0b01100u, Scalar::i()));
  CHECK(Spinor(ten_d_model()).str() == "0");
  CHECK(parse_spinor("0", ten_d_model()).is_zero());
  CHECK(sp(ten_d_model(), "1+e1234").str() == "1+e1234");
  CHECK(sp(ten_d_model(), "1/2*e12+3/4i*e12").str() == "1/2*e12+3/4i*e12");

  for (const SpinorModel m : {ten_d_model(), eight_d_model()}) {
    SplitMix64 rng(61);
    for (int t = 0; t < 200; ++t) {
      const Spinor z = random_spinor(rng, m);
      CHECK(parse_spinor(z.str(), m) == z);
    }
  }
}

TEST_SUITE_END();
