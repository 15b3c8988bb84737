#include "doctest.h"
#include "holoforms/liealg.hpp"
#include "holoforms/nullcone.hpp"
#include "holoforms/structures.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

using namespace holoforms;

namespace {

Form random_euclid_form(SplitMix64& rng, const FrameContext& frame, int deg, int terms = 5) {
  Form f(frame, deg);
  for (int t = 0; t < terms; ++t) {
    Mask m = 0;
    while (mask_size(m) < static_cast<std::size_t>(deg)) m |= Mask(1) << rng.below(frame.dim);
    f.add_term(m, random_scalar(rng));
  }
  return f;
}

Closure closed_structure(const std::string& name, int n = 0) {
  const StructureSpec spec = Catalog::standard().resolve(name, n);
  return close(reduced_seeds(fundamental_forms(spec)), BracketKind::barcurlywedge);
}

// The coefficient of generator `out` in [left, right].
Rational coef(const Presentation& p, const std::string& left, const std::string& right,
              const std::string& out) {
  return p.bracket(p.index_of(left), p.index_of(right))[p.index_of(out)];
}

const Form& named_form(const std::vector<NamedForm>& forms, const std::string& label) {
  for (const NamedForm& nf : forms)
    if (nf.label == label) return nf.form;
  throw std::out_of_range("no generator " + label);
}

Presentation sp1_rotations() {
  std::vector<Generator> gens = {{"o1", 2, 0}, {"o2", 2, 0}, {"o3", 2, 0}};
  std::map<std::pair<int, int>, Vec> rows;
  rows[{0, 1}] = {Rational(0), Rational(0), Rational(2)};
  rows[{0, 2}] = {Rational(0), Rational(-2), Rational(0)};
  rows[{1, 2}] = {Rational(2), Rational(0), Rational(0)};
  return Presentation(BracketKind::barcurlywedge, std::move(gens), std::move(rows));
}

}  // namespace

TEST_SUITE_BEGIN("liealg");

TEST_CASE("bracket kinds round-trip through their names") {
  CHECK(bracket_kind_name(BracketKind::barwedge) == "barwedge");
  CHECK(bracket_kind_name(BracketKind::barcurlywedge) == "barcurlywedge");
  CHECK(bracket_kind_from_name("barwedge") == BracketKind::barwedge);
  CHECK(bracket_kind_from_name("barcurlywedge") == BracketKind::barcurlywedge);
  CHECK_THROWS_AS((void)bracket_kind_from_name("wedge"), std::invalid_argument);
}

TEST_CASE("bracket parities follow the inner-derivation grading") {
  // curlywedge forms act through a (deg-2)-form's derivation: parity deg-1
  CHECK(bracket_parity(BracketKind::barcurlywedge, 3) == 0);
  CHECK(bracket_parity(BracketKind::barcurlywedge, 4) == 1);
  // barwedge forms act as i_{raise(phi)}: parity deg
  CHECK(bracket_parity(BracketKind::barwedge, 1) == 1);
  CHECK(bracket_parity(BracketKind::barwedge, 2) == 0);
  // a degree-1 form has a nonzero barwedge square, so it must be odd
  const FrameContext frame = euclidean_frame(4);
  Form e1(frame, 1);
  e1.add_term(Mask(1), Scalar(Rational(1)));
  const Form sq = bracket_form(BracketKind::barwedge, e1, e1);
  CHECK(sq.degree() == 0);
  CHECK(sq.coefficient(0) == Scalar(Rational(-1)));
}

TEST_CASE("the barwedge bracket is a super Lie bracket on euclidean forms") {
  SplitMix64 rng(7);
  const FrameContext frame = euclidean_frame(5);
  const auto br = [](const Form& x, const Form& y) {
    return bracket_form(BracketKind::barwedge, x, y);
  };
  for (int t = 0; t < 100; ++t) {
    const int da = 1 + static_cast<int>(rng.below(3));
    const int db = 1 + static_cast<int>(rng.below(3));
    const int dc = 1 + static_cast<int>(rng.below(3));
    const Form a = random_euclid_form(rng, frame, da);
    const Form b = random_euclid_form(rng, frame, db);
    const Form c = random_euclid_form(rng, frame, dc);
    const int pa = bracket_parity(BracketKind::barwedge, da);
    const int pb = bracket_parity(BracketKind::barwedge, db);
    const int pc = bracket_parity(BracketKind::barwedge, dc);

    const Form lhs = br(a, b);
    const Form rhs = br(b, a);
    CHECK(((pa * pb) ? lhs - rhs : lhs + rhs).is_zero());

    Form j1 = br(a, br(b, c));
    Form j2 = br(b, br(c, a));
    Form j3 = br(c, br(a, b));
    if (pa * pc) j1 = -j1;
    if (pb * pa) j2 = -j2;
    if (pc * pb) j3 = -j3;
    CHECK((j1 + j2 + j3).is_zero());
  }
}

TEST_CASE("presentations validate their structure constants") {
  std::vector<Generator> gens = {{"a", 2, 0}, {"b", 3, 1}};
  const Vec za = {Rational(1), Rational(0)};
  const Vec zb = {Rational(0), Rational(1)};

  SUBCASE("empty generator lists are rejected") {
    CHECK_THROWS_AS(Presentation(BracketKind::barwedge, {}, {}),
                    std::invalid_argument);
  }
  SUBCASE("duplicate labels are rejected") {
    CHECK_THROWS_AS(Presentation(BracketKind::barwedge, {{"a", 2, 0}, {"a", 3, 1}}, {}),
                    std::invalid_argument);
  }
  SUBCASE("a nonzero even square is rejected") {
    std::map<std::pair<int, int>, Vec> rows{{{0, 0}, za}};
    CHECK_THROWS_AS(Presentation(BracketKind::barwedge, gens, rows), std::invalid_argument);
  }
  SUBCASE("grading violations name the offending generator") {
    std::map<std::pair<int, int>, Vec> rows{{{0, 1}, za}};  // [even, odd] = even
    CHECK_THROWS_WITH_AS(Presentation(BracketKind::barwedge, gens, rows),
                         doctest::Contains("grading"), std::invalid_argument);
  }
  SUBCASE("zero rows are dropped, stored rows keep i <= j") {
    std::map<std::pair<int, int>, Vec> rows{{{0, 0}, Vec{Rational(0), Rational(0)}},
                                            {{0, 1}, zb},
                                            {{1, 1}, za}};
    const Presentation p(BracketKind::barwedge, gens, rows);
    CHECK(p.stored_brackets().size() == 2);
    CHECK(p.even_dim() == 1);
    CHECK(p.odd_dim() == 1);
    CHECK(p.index_of("b") == 1);
    CHECK_THROWS_AS((void)p.index_of("c"), std::out_of_range);
  }
}

TEST_CASE("swapped and bilinear brackets carry the graded signs") {
  const Presentation p = sp1_rotations();
  // even-even swap flips the sign
  CHECK(p.bracket(1, 0)[2] == Rational(-2));
  CHECK(p.bracket(0, 1)[2] == Rational(2));

  // odd-odd swap keeps it
  std::vector<Generator> gens = {{"H", 2, 0}, {"q1", 3, 1}, {"q2", 3, 1}};
  std::map<std::pair<int, int>, Vec> rows;
  rows[{1, 2}] = {Rational(1), Rational(0), Rational(0)};
  const Presentation s(BracketKind::barcurlywedge, gens, rows);
  CHECK(s.bracket(2, 1)[0] == Rational(1));

  // bilinearity against expansion by hand
  const Vec x = {Rational(1), Rational(2), Rational(0)};
  const Vec y = {Rational(0), Rational(1), Rational(-1)};
  const Vec got = p.bracket_vec(x, y);
  // [o1 + 2 o2, o2 - o3] = 2 o3 + 2 o2 - 2*2 o1
  CHECK(got[0] == Rational(-4));
  CHECK(got[1] == Rational(2));
  CHECK(got[2] == Rational(2));
}

TEST_CASE("jacobi_check accepts sp(1) and pins the triple count") {
  const JacobiReport rep = jacobi_check(sp1_rotations());
  CHECK(rep.ok());
  CHECK(rep.triples == 10);  // multisets of size 3 from 3 generators
}

TEST_CASE("jacobi_check catches corrupted tables, repeated indices included") {
  SUBCASE("off-diagonal corruption of the rotation algebra") {
    std::vector<Generator> gens = {{"o1", 2, 0}, {"o2", 2, 0}, {"o3", 2, 0}};
    std::map<std::pair<int, int>, Vec> rows;
    rows[{0, 1}] = {Rational(0), Rational(0), Rational(2)};
    rows[{0, 2}] = {Rational(0), Rational(-2), Rational(1)};
    rows[{1, 2}] = {Rational(2), Rational(0), Rational(0)};
    const Presentation bad(BracketKind::barcurlywedge, gens, rows);
    const JacobiReport rep = jacobi_check(bad);
    CHECK_FALSE(rep.ok());
    CHECK(rep.failures.front().detail == "(o1, o2, o3)");
    CHECK_THROWS_AS((void)identify(bad), std::domain_error);
  }
  SUBCASE("a bad odd square fails at a repeated-index triple") {
    std::vector<Generator> gens = {{"H", 2, 0}, {"q", 3, 1}};
    std::map<std::pair<int, int>, Vec> rows;
    rows[{0, 1}] = {Rational(0), Rational(1)};
    rows[{1, 1}] = {Rational(1), Rational(0)};
    const Presentation bad(BracketKind::barcurlywedge, gens, rows);
    const JacobiReport rep = jacobi_check(bad);
    CHECK_FALSE(rep.ok());
    CHECK(rep.failures.front().i == 0);
    CHECK(rep.failures.front().j == 1);
    CHECK(rep.failures.front().k == 1);
  }
}

TEST_CASE("ten-dimensional null structures close onto the recorded algebras") {
  const struct {
    const char* name;
    int dim;
    const char* algebra;
  } rows[] = {
      {"Spin7xR8", 1, "R"},        {"SU4xR8", 4, "e_hat(2)"}, {"Sp2xR8", 3, "sp(1)"},
      {"Sp1Sp1xR8", 6, "sp(1)+sp(1)"}, {"Sp1xR8", 10, "so(5)"},   {"U1xR8", 16, "u(4)"},
      {"1xR8", 28, "so(8)"},
  };
  for (const auto& row : rows) {
    CAPTURE(row.name);
    const Closure c = closed_structure(row.name);
    CHECK(c.presentation.dim() == row.dim);
    CHECK(jacobi_check(c.presentation).ok());
    CHECK(identify(c.presentation) == row.algebra);
    CHECK(c.elements.size() == static_cast<std::size_t>(row.dim));

    // the catalog records the same answer
    const StructureSpec spec = Catalog::standard().resolve(row.name);
    const std::optional<ClosureRule> rule = spec.closure();
    REQUIRE(rule.has_value());
    CHECK(rule->algebra == row.algebra);
    CHECK(rule->dim == row.dim);
  }
}

TEST_CASE("the SU4 closure adjoins the cubic curlywedge power") {
  const Closure c = closed_structure("SU4xR8");
  const Presentation& p = c.presentation;
  REQUIRE(p.dim() == 4);
  CHECK(p.generators()[3].label == "curly^3(omega)");
  CHECK(p.generators()[3].degree == 7);
  CHECK(coef(p, "omega", "chi1", "chi2") == Rational(4));
  CHECK(coef(p, "omega", "chi2", "chi1") == Rational(-4));
  CHECK(coef(p, "chi1", "chi2", "curly^3(omega)") == Rational(4, 3));

  // the adjoined element really is the iterated curlywedge power
  const std::vector<NamedForm> seeds = reduced_seeds(
      fundamental_forms(Catalog::standard().resolve("SU4xR8")));
  const Form& omega = seeds.front().form;
  const Form cube = curlywedge(NullForm(curlywedge(NullForm(omega), NullForm(omega))),
                               NullForm(omega));
  CHECK(c.elements[3].form == cube);
  CHECK(c.elements[3].label == "curly^3(omega)");
}

TEST_CASE("family structures close onto the recorded algebras for small n") {
  SUBCASE("volume forms and kaehler forms are abelian lines") {
    for (int n = 2; n <= 5; ++n) {
      CAPTURE(n);
      const Closure c = closed_structure("SO(n)", n);
      CHECK(c.presentation.dim() == 1);
      CHECK(identify(c.presentation) == "R");
    }
    for (int n = 1; n <= 5; ++n) {
      CAPTURE(n);
      CHECK(identify(closed_structure("U(n)", n).presentation) == "R");
    }
    for (int n = 1; n <= 3; ++n) {
      CAPTURE(n);
      CHECK(identify(closed_structure("Sp(n).Sp(1)", n).presentation) == "R");
    }
  }

  SUBCASE("special unitary structures alternate with the parity of n") {
    const Closure c2 = closed_structure("SU(n)", 2);
    CHECK(identify(c2.presentation) == "sp(1)");
    CHECK(coef(c2.presentation, "omega", "chi1", "chi2") == Rational(2));
    CHECK(coef(c2.presentation, "omega", "chi2", "chi1") == Rational(-2));
    CHECK(coef(c2.presentation, "chi1", "chi2", "omega") == Rational(2));

    for (int n : {4, 6}) {
      CAPTURE(n);
      const Closure c = closed_structure("SU(n)", n);
      const Presentation& p = c.presentation;
      CHECK(identify(p) == "e_hat(2)");
      const std::string power = "curly^" + std::to_string(n - 1) + "(omega)";
      CHECK(p.generators()[3].label == power);
      CHECK(coef(p, "omega", "chi1", "chi2") == Rational(n));
      CHECK(coef(p, "omega", "chi2", "chi1") == Rational(-n));
      // 2^{n-1}/(n-1)! against the curlywedge power of omega
      const Rational c_n = n == 4 ? Rational(4, 3) : Rational(4, 15);
      CHECK(coef(p, "chi1", "chi2", power) == c_n);
      CHECK(coef(p, "chi1", "chi1", power) == Rational(0));
    }

    for (int n : {3, 5}) {
      CAPTURE(n);
      const Closure c = closed_structure("SU(n)", n);
      const Presentation& p = c.presentation;
      CHECK(identify(p) == "s(2)");
      CHECK(p.even_dim() == 2);
      CHECK(p.odd_dim() == 2);
      const std::string power = "curly^" + std::to_string(n - 1) + "(omega)";
      CHECK(coef(p, "omega", "chi1", "chi2") == Rational(n));
      // odd generators square onto the top power with the twisted sign
      const Rational c_n = n == 3 ? Rational(-2) : Rational(-2, 3);
      CHECK(coef(p, "chi1", "chi1", power) == c_n);
      CHECK(coef(p, "chi2", "chi2", power) == c_n);
      CHECK(coef(p, "chi1", "chi2", power) == Rational(0));
    }
  }

  SUBCASE("quaternionic triples close onto sp(1) at every n") {
    for (int n = 1; n <= 3; ++n) {
      CAPTURE(n);
      const Closure c = closed_structure("Sp(n)", n);
      const Presentation& p = c.presentation;
      CHECK(identify(p) == "sp(1)");
      CHECK(coef(p, "omega1", "omega2", "omega3") == Rational(2));
      CHECK(coef(p, "omega2", "omega3", "omega1") == Rational(2));
      CHECK(coef(p, "omega3", "omega1", "omega2") == Rational(2));
    }
  }

  SUBCASE("the exceptional structure closes onto s(1)") {
    const Closure c = closed_structure("G2xR7");
    const Presentation& p = c.presentation;
    CHECK(identify(p) == "s(1)");
    CHECK(p.generators()[0].parity == 1);  // phi, degree 4
    CHECK(p.generators()[1].parity == 0);  // phi4, degree 5
    CHECK(coef(p, "phi", "phi", "phi4") == Rational(-6));
    CHECK(coef(p, "phi", "phi4", "phi") == Rational(0));

    // seeded with phi alone the bracket word is adjoined verbatim
    const std::vector<NamedForm> seeds = reduced_seeds(
        fundamental_forms(Catalog::standard().resolve("G2xR7")));
    const Closure solo = close({seeds.front()}, BracketKind::barcurlywedge);
    REQUIRE(solo.presentation.dim() == 2);
    CHECK(solo.presentation.generators()[1].label == "[phi,phi]");
    CHECK(identify(solo.presentation) == "s(1)");
    CHECK(solo.elements[1].form == Rational(-6) * named_form(seeds, "phi4"));
  }
}

TEST_CASE("closure input validation") {
  const std::vector<NamedForm> seeds = reduced_seeds(
      fundamental_forms(Catalog::standard().resolve("SU4xR8")));

  SUBCASE("empty input") {
    CHECK_THROWS_AS((void)close({}, BracketKind::barcurlywedge), std::invalid_argument);
  }
  SUBCASE("duplicate labels") {
    CHECK_THROWS_AS((void)close({seeds[0], {"omega", seeds[1].form}},
                                BracketKind::barcurlywedge),
                    std::invalid_argument);
  }
  SUBCASE("zero forms") {
    CHECK_THROWS_AS((void)close({{"z", Form(seeds[0].form.frame(), 3)}},
                                BracketKind::barcurlywedge),
                    std::invalid_argument);
  }
  SUBCASE("dependent generators are named") {
    std::vector<NamedForm> dep = seeds;
    dep.push_back({"again", Rational(2) * seeds[0].form});
    CHECK_THROWS_WITH_AS((void)close(dep, BracketKind::barcurlywedge),
                         doctest::Contains("again"), std::invalid_argument);
  }
  SUBCASE("a too-small bound names the runaway word") {
    CHECK_THROWS_WITH_AS((void)close(seeds, BracketKind::barcurlywedge, 3),
                         doctest::Contains("curly^3(omega)"), std::runtime_error);
  }
}

TEST_CASE("kappa splits off as a central abelian line") {
  const std::vector<NamedForm> full =
      fundamental_forms(Catalog::standard().resolve("SU4xR8"));
  CHECK(full.size() == reduced_seeds(full).size() + 1);
  CHECK(full.front().label == "kappa");

  const Closure c = close(full, BracketKind::barcurlywedge);
  const Presentation& p = c.presentation;
  CHECK(p.dim() == 5);
  const int k = p.index_of("kappa");
  for (int j = 0; j < p.dim(); ++j) {
    const Vec v = p.bracket(k, j);
    for (const Rational& x : v) CHECK(x == Rational(0));
  }
  CHECK(fingerprint(p).center_dim == 2);  // kappa plus the e_hat(2) center
}

TEST_CASE("null fundamental forms are abelian under the barwedge bracket") {
  for (const char* name : {"Spin7xR8", "SU4xR8", "Sp2xR8", "G2xR7"}) {
    CAPTURE(name);
    const std::vector<NamedForm> full =
        fundamental_forms(Catalog::standard().resolve(name));
    const Closure c = close(full, BracketKind::barwedge);
    CHECK(c.presentation.dim() == static_cast<int>(full.size()));
    CHECK(fingerprint(c.presentation).abelian);
    const std::string expect =
        full.size() == 1 ? "R" : "R^" + std::to_string(full.size());
    CHECK(identify(c.presentation) == expect);
  }
}

TEST_CASE("fingerprints are invariant under random parity-preserving basis changes") {
  SplitMix64 rng(20260816);
  const struct {
    const char* name;
    int param;
    const char* algebra;
  } rows[] = {
      {"Sp2xR8", 0, "sp(1)"},    {"Sp1Sp1xR8", 0, "sp(1)+sp(1)"}, {"Sp1xR8", 0, "so(5)"},
      {"U1xR8", 0, "u(4)"},      {"SU4xR8", 0, "e_hat(2)"},       {"G2xR7", 0, "s(1)"},
      {"SU(n)", 3, "s(2)"},      {"SO(n)", 4, "R"},
  };
  for (const auto& row : rows) {
    CAPTURE(row.name);
    const Closure c = closed_structure(row.name, row.param);
    const Fingerprint fp = fingerprint(c.presentation);
    for (int t = 0; t < 8; ++t) {
      const Presentation q = random_basis_change(c.presentation, rng);
      CHECK(fingerprint(q) == fp);
      CHECK(identify(q) == row.algebra);
    }
  }
  // heavier spin on the richest fingerprint
  const Closure c = closed_structure("1xR8");
  for (int t = 0; t < 8; ++t)
    CHECK(identify(random_basis_change(c.presentation, rng)) == "so(8)");
}

TEST_CASE("lookalike tables stay unrecognized") {
  SUBCASE("the untwisted plane isometries plus a line") {
    std::vector<Generator> gens = {{"J", 2, 0}, {"P1", 2, 0}, {"P2", 2, 0}, {"Z", 2, 0}};
    std::map<std::pair<int, int>, Vec> rows;
    rows[{0, 1}] = {Rational(0), Rational(0), Rational(1), Rational(0)};
    rows[{0, 2}] = {Rational(0), Rational(-1), Rational(0), Rational(0)};
    const Presentation p(BracketKind::barcurlywedge, gens, rows);
    const Fingerprint fp = fingerprint(p);
    CHECK(fp.center_dim == 1);
    CHECK(fp.center_in_derived_dim == 0);  // e_hat(2) has its center inside
    CHECK(identify(p) == "unrecognized");
  }
  SUBCASE("the heisenberg algebra") {
    std::vector<Generator> gens = {{"x", 2, 0}, {"y", 2, 0}, {"z", 2, 0}};
    std::map<std::pair<int, int>, Vec> rows;
    rows[{0, 1}] = {Rational(0), Rational(0), Rational(1)};
    const Presentation p(BracketKind::barcurlywedge, gens, rows);
    CHECK(identify(p) == "unrecognized");
  }
}

TEST_CASE("closures are deterministic and label-stable under seed permutation") {
  const std::vector<NamedForm> seeds = reduced_seeds(
      fundamental_forms(Catalog::standard().resolve("SU4xR8")));
  std::vector<NamedForm> permuted = {seeds[2], seeds[0], seeds[1]};
  const Closure a = close(seeds, BracketKind::barcurlywedge);
  const Closure b = close(permuted, BracketKind::barcurlywedge);
  CHECK(a.presentation.dim() == b.presentation.dim());
  CHECK(b.presentation.generators()[3].label == "curly^3(omega)");
  CHECK(identify(b.presentation) == "e_hat(2)");
  CHECK(coef(b.presentation, "chi1", "chi2", "curly^3(omega)") == Rational(4, 3));
  // rerunning is byte-identical
  CHECK(presentation_to_json(a.presentation) ==
        presentation_to_json(close(seeds, BracketKind::barcurlywedge).presentation));
}

TEST_CASE("structure constants round-trip through json") {
  for (const char* name : {"SU4xR8", "G2xR7", "Sp2xR8"}) {
    CAPTURE(name);
    const Closure c = closed_structure(name);
    const std::string doc = presentation_to_json(c.presentation);
    const Presentation back = presentation_from_json(doc);
    CHECK(back == c.presentation);
    CHECK(presentation_to_json(back) == doc);
  }
}

TEST_CASE("json import accepts swapped rows and rejects malformed documents") {
  SUBCASE("a handwritten superalgebra with a reversed row") {
    const char* doc = R"({
      "bracket": "barcurlywedge",
      "generators": [
        {"label": "H", "degree": 5, "parity": 0},
        {"label": "q", "degree": 4, "parity": 1}
      ],
      "brackets": [
        {"left": "q", "right": "q", "result": [{"coef": "-6", "gen": "H"}]}
      ]
    })";
    const Presentation p = presentation_from_json(doc);
    CHECK(identify(p) == "s(1)");
    CHECK(p.bracket(1, 1)[0] == Rational(-6));
  }
  SUBCASE("reversed even-odd rows pick up the graded swap sign") {
    const char* doc = R"({
      "bracket": "barcurlywedge",
      "generators": [
        {"label": "H", "degree": 3, "parity": 0},
        {"label": "q1", "degree": 4, "parity": 1},
        {"label": "q2", "degree": 4, "parity": 1}
      ],
      "brackets": [
        {"left": "q2", "right": "H", "result": [{"coef": "1", "gen": "q1"}]}
      ]
    })";
    const Presentation p = presentation_from_json(doc);
    CHECK(p.bracket(0, 2)[1] == Rational(-1));  // [H, q2] = -[q2, H]
  }
  SUBCASE("malformed documents are rejected with context") {
    CHECK_THROWS_AS((void)presentation_from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS((void)presentation_from_json("{}"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        (void)presentation_from_json(R"({"bracket": "wedge", "generators": []})"),
        doctest::Contains("wedge"), std::invalid_argument);
    CHECK_THROWS_WITH_AS((void)presentation_from_json(R"({
          "bracket": "barwedge",
          "generators": [{"label": "a", "degree": 2, "parity": 0}],
          "brackets": [{"left": "a", "right": "missing", "result": []}]
        })"),
                         doctest::Contains("missing"), std::invalid_argument);
    CHECK_THROWS_AS((void)presentation_from_json(R"({
          "bracket": "barwedge",
          "generators": [{"label": "a", "degree": 2, "parity": 3}]
        })"),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)presentation_from_json(R"({
          "bracket": "barwedge",
          "generators": [{"label": "a", "degree": 1, "parity": 1}],
          "brackets": [{"left": "a", "right": "a", "result": [{"coef": "1/0", "gen": "a"}]}]
        })"),
                    std::invalid_argument);
  }
}

TEST_SUITE_END();
