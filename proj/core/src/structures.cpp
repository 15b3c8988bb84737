#include "holoforms/structures.hpp"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

#include "holoforms/nullcone.hpp"
#include "holoforms/parser.hpp"

namespace holoforms {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& message) {
  throw std::runtime_error("catalog " + origin + ": " + message);
}

std::string normalize_name(std::string_view name) {
  std::string out;
  for (char c : name)
    if (std::isalnum(static_cast<unsigned char>(c)))
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

Mask index_mask(std::initializer_list<int> user_indices) {
  Mask m = 0;
  for (int i : user_indices) m |= Mask(1) << (i - 1);
  return m;
}

// --- transverse recipes -----------------------------------------------------
//
// Every recipe builds a real form on the euclidean transverse frame; the
// null structures then wedge e^- onto it.

Form kaehler_form(const FrameContext& e) {
  if (e.dim % 2) throw std::domain_error("kaehler recipe needs an even transverse dimension");
  Form w(e, 2);
  for (int a = 0; a + 1 < e.dim; a += 2) w.add_term(Mask(3) << a, Scalar(1));
  return w;
}

// Real/imaginary part of (e1 + i e2) ^ (e3 + i e4) ^ ... : the subset of
// factors contributing their imaginary leg determines the term's index set
// and i-power.
Form su_chi(const FrameContext& e, bool imaginary) {
  if (e.dim % 2) throw std::domain_error("chi recipe needs an even transverse dimension");
  int n = e.dim / 2;
  Form chi(e, n);
  for (Mask pick = 0; pick < (Mask(1) << n); ++pick) {
    Mask idx = 0;
    for (int a = 0; a < n; ++a) idx |= Mask(1) << (2 * a + ((pick >> a) & 1));
    switch (mask_size(pick) % 4) {
      case 0:
        if (!imaginary) chi.add_term(idx, Scalar(1));
        break;
      case 2:
        if (!imaginary) chi.add_term(idx, Scalar(-1));
        break;
      case 1:
        if (imaginary) chi.add_term(idx, Scalar(1));
        break;
      case 3:
        if (imaginary) chi.add_term(idx, Scalar(-1));
        break;
    }
  }
  return chi;
}

Form quaternion_form(const FrameContext& e, int r) {
  if (e.dim % 4) throw std::domain_error("quaternion recipe needs transverse dimension 4n");
  Form w(e, 2);
  for (int b = 0; b < e.dim; b += 4) {
    switch (r) {
      case 1:
        w.add_term(Mask(3) << b, Scalar(1));
        w.add_term(Mask(3) << (b + 2), Scalar(1));
        break;
      case 2:
        w.add_term((Mask(1) << b) | (Mask(1) << (b + 2)), Scalar(1));
        w.add_term((Mask(1) << (b + 1)) | (Mask(1) << (b + 3)), Scalar(-1));
        break;
      case 3:
        w.add_term((Mask(1) << b) | (Mask(1) << (b + 3)), Scalar(1));
        w.add_term((Mask(1) << (b + 1)) | (Mask(1) << (b + 2)), Scalar(1));
        break;
      default:
        throw std::domain_error("quaternion recipe index out of range");
    }
  }
  return w;
}

Form quaternion_four_form(const FrameContext& e) {
  Form out(e, 4);
  for (int r = 1; r <= 3; ++r) {
    Form w = quaternion_form(e, r);
    out += wedge(w, w);
  }
  return out;
}

Form so_volume(const FrameContext& e) {
  return Form::basis(e, (Mask(1) << e.dim) - 1);
}

Form g2_three_form(const FrameContext& e) {
  if (e.dim != 7) throw std::domain_error("g2 recipe needs transverse dimension 7");
  Form phi(e, 3);
  phi.add_term(index_mask({1, 2, 3}), Scalar(1));
  phi.add_term(index_mask({1, 4, 5}), Scalar(1));
  phi.add_term(index_mask({1, 6, 7}), Scalar(1));
  phi.add_term(index_mask({2, 4, 6}), Scalar(1));
  phi.add_term(index_mask({2, 5, 7}), Scalar(-1));
  phi.add_term(index_mask({3, 4, 7}), Scalar(-1));
  phi.add_term(index_mask({3, 5, 6}), Scalar(-1));
  return phi;
}

// Euclidean Hodge star: *e^S = sign(S, S^c) e^{S^c}.
Form euclidean_star(const Form& f) {
  const FrameContext& e = f.frame();
  Mask full = (Mask(1) << e.dim) - 1;
  Form out(e, e.dim - f.degree());
  for (const auto& [m, c] : f.terms()) {
    Mask comp = full ^ m;
    out.add_term(comp, c * Scalar(Rational(merge_sign(m, comp))));
  }
  return out;
}

Form cayley_form(const FrameContext& e) {
  if (e.dim != 8) throw std::domain_error("cayley recipe needs transverse dimension 8");
  Form w = kaehler_form(e);
  return su_chi(e, false) - wedge(w, w) * Scalar(Rational(1, 2));
}

const std::set<std::string>& known_recipes() {
  static const std::set<std::string> r{
      "kaehler",        "su-chi1",      "su-chi2", "quaternion-1",       "quaternion-2",
      "quaternion-3",   "quaternion-4form", "so-volume", "g2-3form",    "g2-4form",
      "cayley",         "commutant-2-forms"};
  return r;
}

Form recipe_form(const std::string& recipe, const FrameContext& e) {
  if (recipe == "kaehler") return kaehler_form(e);
  if (recipe == "su-chi1") return su_chi(e, false);
  if (recipe == "su-chi2") return su_chi(e, true);
  if (recipe == "quaternion-1") return quaternion_form(e, 1);
  if (recipe == "quaternion-2") return quaternion_form(e, 2);
  if (recipe == "quaternion-3") return quaternion_form(e, 3);
  if (recipe == "quaternion-4form") return quaternion_four_form(e);
  if (recipe == "so-volume") return so_volume(e);
  if (recipe == "g2-3form") return g2_three_form(e);
  if (recipe == "g2-4form") return euclidean_star(g2_three_form(e));
  if (recipe == "cayley") return cayley_form(e);
  throw std::domain_error("unknown generator recipe \"" + recipe + "\"");
}

// e^- ^ (transverse form), bit 0 prepended with no sign to pay.
Form lift_null(const Form& transverse) {
  FrameContext lc = lightcone_frame(transverse.frame().dim + 2);
  Form out(lc, transverse.degree() + 1);
  for (const auto& [m, c] : transverse.terms()) out.add_term((m << 2) | Mask(1), c);
  return out;
}

std::vector<Form> commutant_two_forms(const StructureSpec& spec) {
  Subalgebra h = isotropy_algebra(spinor_representatives(spec));
  return invariant_forms(transverse_part(h), 2);
}

// --- file parsing ------------------------------------------------------------

StructureKind parse_kind(const std::string& s, const std::string& origin) {
  if (s == "null") return StructureKind::null_structure;
  if (s == "compact") return StructureKind::compact;
  if (s == "euclidean") return StructureKind::euclidean;
  if (s == "family") return StructureKind::family;
  fail(origin, "unknown structure kind \"" + s + "\"");
}

FrameKind parse_frame_kind(const std::string& s, const std::string& origin) {
  if (s == "lightcone") return FrameKind::lightcone;
  if (s == "euclidean") return FrameKind::euclidean;
  fail(origin, "unknown frame kind \"" + s + "\"");
}

void parse_closure_rules(const json& j, StructureSpec& spec, const std::string& origin) {
  for (const json& jr : j) {
    ClosureRule rule;
    rule.when = jr.at("when").get<std::string>();
    rule.algebra = jr.at("algebra").get<std::string>();
    rule.dim = jr.at("dim").get<std::size_t>();
    bool ok = rule.when == "*" || rule.when == "even" || rule.when == "odd";
    if (!ok && rule.when.rfind("n=", 0) == 0) {
      ok = rule.when.size() > 2 &&
           rule.when.find_first_not_of("0123456789", 2) == std::string::npos;
    }
    if (!ok) fail(origin, spec.name + ": bad closure selector \"" + rule.when + "\"");
    if (!spec.is_family() && rule.when != "*")
      fail(origin, spec.name + ": fixed rows may only use the \"*\" closure selector");
    spec.closure_rules.push_back(std::move(rule));
  }
}

StructureSpec parse_entry(const json& je, const std::string& origin) {
  StructureSpec spec;
  spec.name = je.at("name").get<std::string>();
  if (spec.name.empty()) fail(origin, "entry with empty name");
  spec.group = je.at("group").get<std::string>();
  spec.kind = parse_kind(je.at("kind").get<std::string>(), origin);

  const json& jf = je.at("frame");
  spec.frame_kind = parse_frame_kind(jf.at("kind").get<std::string>(), origin);
  const json& jd = jf.at("dim");
  if (jd.is_number_integer()) {
    spec.dim_const = jd.get<int>();
  } else {
    if (!spec.is_family())
      fail(origin, spec.name + ": only families may use a parametrized frame dimension");
    spec.dim_coef = jd.at(0).get<int>();
    spec.dim_const = jd.at(1).get<int>();
    if (spec.dim_coef <= 0) fail(origin, spec.name + ": frame dimension must grow with n");
  }

  if (spec.is_family()) {
    const json& jp = je.at("params");
    spec.param_min = jp.at(0).get<int>();
    spec.param_max = jp.at(1).get<int>();
    if (spec.param_min < 1 || spec.param_max < spec.param_min)
      fail(origin, spec.name + ": bad parameter range");
    if (spec.dim_coef == 0)
      fail(origin, spec.name + ": families need a parametrized frame dimension");
  } else {
    int d = spec.dim_const;
    int least = spec.frame_kind == FrameKind::lightcone ? 3 : 1;
    if (d < least) fail(origin, spec.name + ": frame dimension too small");
  }

  if (je.contains("spinors")) {
    for (const json& js : je.at("spinors")) spec.spinor_exprs.push_back(js.get<std::string>());
    if (spec.spinor_exprs.empty()) fail(origin, spec.name + ": empty spinor list");
    spec.spinor_count = je.at("L").get<std::size_t>();
  } else if (je.contains("L")) {
    fail(origin, spec.name + ": spinor count without spinors");
  }

  for (const json& jg : je.at("generators")) {
    GeneratorSpec gen;
    gen.label = jg.at("label").get<std::string>();
    if (jg.contains("recipe")) gen.recipe = jg.at("recipe").get<std::string>();
    if (jg.contains("expr")) gen.expr = jg.at("expr").get<std::string>();
    if (jg.contains("count")) gen.count = jg.at("count").get<std::size_t>();
    if (gen.label.empty()) fail(origin, spec.name + ": generator with empty label");
    if (gen.recipe.empty() && gen.expr.empty())
      fail(origin, spec.name + ": generator " + gen.label + " has neither recipe nor expression");
    if (!gen.recipe.empty() && !known_recipes().count(gen.recipe))
      fail(origin, spec.name + ": unknown recipe \"" + gen.recipe + "\"");
    if (gen.count != 1 && gen.recipe != "commutant-2-forms")
      fail(origin, spec.name + ": only commutant recipes may expand to several forms");
    if (spec.is_family() && !gen.expr.empty())
      fail(origin, spec.name + ": family generators cannot carry fixed expressions");
    spec.generators.push_back(std::move(gen));
  }

  if (je.contains("isotropy")) {
    const json& ji = je.at("isotropy");
    IsotropyExpectation iso;
    iso.algebra = ji.at("algebra").get<std::string>();
    iso.dim = ji.at("dim").get<std::size_t>();
    iso.transverse_dim = ji.at("transverse_dim").get<std::size_t>();
    spec.isotropy = iso;
  }
  if (je.contains("one_form_bilinears"))
    spec.one_form_bilinears = je.at("one_form_bilinears").get<std::size_t>();
  if (je.contains("closure")) parse_closure_rules(je.at("closure"), spec, origin);
  return spec;
}

// Structural cross-checks that need the whole entry: expressions parse,
// recipes rebuild the stored expressions, spinor counts match, stabilizer
// dimensions are mutually consistent.
void validate_entry(const StructureSpec& spec, const std::string& origin) {
  std::set<std::string> labels;
  for (const GeneratorSpec& gen : spec.generators)
    if (!labels.insert(gen.label).second)
      fail(origin, spec.name + ": duplicate generator label " + gen.label);

  if (spec.has_spinors()) {
    SpinorModel model;
    try {
      model = spec.spinor_model();
    } catch (const std::exception& e) {
      fail(origin, spec.name + ": " + e.what());
    }
    std::vector<Spinor> reps;
    try {
      reps = spinor_representatives(spec);
    } catch (const std::exception& e) {
      fail(origin, spec.name + ": bad spinor expression: " + e.what());
    }
    if (reps.size() != spec.spinor_count) {
      std::ostringstream os;
      os << spec.name << ": " << reps.size() << " independent real spinors, expected "
         << spec.spinor_count;
      fail(origin, os.str());
    }
  }

  if (!spec.is_family()) {
    FrameContext fc = spec.frame();
    for (const GeneratorSpec& gen : spec.generators) {
      if (gen.recipe == "commutant-2-forms") {
        if (!spec.has_spinors())
          fail(origin, spec.name + ": commutant recipe without spinor representatives");
        continue;  // needs the full stabilizer solve; checked by the test suite
      }
      Form from_expr(fc, 0);
      if (!gen.expr.empty()) {
        try {
          from_expr = parse_form(gen.expr, fc);
          if (spec.frame_kind == FrameKind::lightcone) (void)NullForm{from_expr};
        } catch (const std::exception& e) {
          fail(origin, spec.name + "." + gen.label + ": " + e.what());
        }
      }
      if (!gen.recipe.empty() && !gen.expr.empty()) {
        Form built = lift_null(recipe_form(gen.recipe, euclidean_frame(fc.dim - 2)));
        if (!(built == from_expr))
          fail(origin,
               spec.name + "." + gen.label + ": stored expression does not match its recipe");
      }
    }
  }

  if (spec.isotropy) {
    std::size_t translations =
        spec.kind == StructureKind::null_structure ? std::size_t(spec.dim_const - 2) : 0;
    if (spec.isotropy->dim != spec.isotropy->transverse_dim + translations)
      fail(origin, spec.name + ": stabilizer dimension inconsistent with its transverse part");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("catalog " + path + ": cannot open");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int StructureSpec::frame_dim() const {
  if (!resolved()) throw std::logic_error(name + ": family not resolved to a parameter");
  return is_family() ? dim_coef * param + dim_const : dim_const;
}

FrameContext StructureSpec::frame() const {
  int d = frame_dim();
  return frame_kind == FrameKind::lightcone ? lightcone_frame(d) : euclidean_frame(d);
}

SpinorModel StructureSpec::spinor_model() const {
  FrameContext fc = frame();
  if (fc.kind == FrameKind::lightcone && fc.dim == 10) return ten_d_model();
  if (fc.kind == FrameKind::euclidean && fc.dim == 8) return eight_d_model();
  throw std::domain_error(name + ": no spinor module on this frame");
}

std::optional<ClosureRule> StructureSpec::closure() const {
  for (const ClosureRule& rule : closure_rules) {
    if (rule.when == "*") return rule;
    if (rule.when == "even" && param % 2 == 0) return rule;
    if (rule.when == "odd" && param % 2 == 1) return rule;
    if (rule.when.rfind("n=", 0) == 0 && std::stoi(rule.when.substr(2)) == param) return rule;
  }
  return std::nullopt;
}

Catalog Catalog::parse_text(std::string_view text, const std::string& origin) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    fail(origin, e.what());
  }

  Catalog cat;
  try {
    cat.version_ = root.at("version").get<int>();
    if (cat.version_ != 1) fail(origin, "unsupported version " + std::to_string(cat.version_));
    std::set<std::string> seen;
    for (const json& je : root.at("structures")) {
      StructureSpec spec = parse_entry(je, origin);
      if (!seen.insert(normalize_name(spec.name)).second)
        fail(origin, "duplicate structure name " + spec.name);
      validate_entry(spec, origin);
      cat.entries_.push_back(std::move(spec));
    }
  } catch (const json::exception& e) {
    fail(origin, e.what());
  }
  if (cat.entries_.empty()) fail(origin, "no structures");
  return cat;
}

Catalog Catalog::load_file(const std::string& path) {
  return parse_text(read_file(path), path);
}

const Catalog& Catalog::standard() {
  static const Catalog cat = [] {
    if (const char* env = std::getenv("HOLOFORMS_CATALOG")) return load_file(env);
    std::vector<std::string> candidates;
#ifdef HOLOFORMS_SOURCE_CATALOG
    candidates.push_back(HOLOFORMS_SOURCE_CATALOG);
#endif
#ifdef HOLOFORMS_INSTALL_CATALOG
    candidates.push_back(HOLOFORMS_INSTALL_CATALOG);
#endif
    for (const std::string& c : candidates)
      if (std::filesystem::exists(c)) return load_file(c);
    std::string tried;
    for (const std::string& c : candidates) tried += " " + c;
    throw std::runtime_error("no catalog file found; tried:" + tried);
  }();
  return cat;
}

const StructureSpec* Catalog::find(std::string_view name) const {
  std::string key = normalize_name(name);
  for (const StructureSpec& spec : entries_)
    if (normalize_name(spec.name) == key) return &spec;
  return nullptr;
}

StructureSpec Catalog::resolve(std::string_view name, int n) const {
  const StructureSpec* spec = find(name);
  if (!spec) throw std::out_of_range("unknown structure \"" + std::string(name) + "\"");
  StructureSpec out = *spec;
  if (out.is_family()) {
    if (n < out.param_min || n > out.param_max) {
      std::ostringstream os;
      os << out.name << ": parameter n=" << n << " outside [" << out.param_min << ", "
         << out.param_max << "]";
      throw std::invalid_argument(os.str());
    }
    out.param = n;
  } else if (n != 0) {
    throw std::invalid_argument(out.name + ": not a parametrized family");
  }
  return out;
}

FrameContext catalog_frame(const StructureSpec& spec) { return spec.frame(); }

std::vector<NamedForm> fundamental_forms(const StructureSpec& spec) {
  if (spec.kind == StructureKind::compact || spec.kind == StructureKind::euclidean) return {};
  FrameContext lc = spec.frame();
  FrameContext tv = euclidean_frame(lc.dim - 2);
  std::vector<NamedForm> out;
  out.push_back({"kappa", kappa_form(lc)});
  for (const GeneratorSpec& gen : spec.generators) {
    if (gen.recipe == "commutant-2-forms") {
      std::vector<Form> forms = commutant_two_forms(spec);
      if (forms.size() != gen.count) {
        std::ostringstream os;
        os << spec.name << ": commutant recipe produced " << forms.size() << " forms, expected "
           << gen.count;
        throw std::domain_error(os.str());
      }
      for (std::size_t i = 0; i < forms.size(); ++i)
        out.push_back({gen.label + std::to_string(i + 1), lift_null(forms[i])});
    } else if (!gen.expr.empty()) {
      out.push_back({gen.label, parse_form(gen.expr, lc)});
    } else {
      out.push_back({gen.label, lift_null(recipe_form(gen.recipe, tv))});
    }
  }
  return out;
}

std::vector<Spinor> spinor_representatives(const StructureSpec& spec) {
  if (!spec.has_spinors())
    throw std::domain_error(spec.name + ": no spinor representatives recorded");
  SpinorModel model = spec.spinor_model();
  std::vector<Spinor> reps;
  for (const std::string& expr : spec.spinor_exprs) reps.push_back(parse_spinor(expr, model));

  // Keep each majorana part exactly when it grows the real span, so listed
  // complex representatives sharing parts do not inflate the set.
  std::vector<Spinor> out;
  Span span(2 * std::size_t(model.dim_complex()));
  for (const Spinor& part : majorana_spinor_set(reps)) {
    Vec v(span.ambient_dim());
    for (const auto& [mask, c] : part.coeffs()) {
      v[mask] = c.re;
      v[mask + std::size_t(model.dim_complex())] = c.im;
    }
    if (span.add(std::move(v))) out.push_back(part);
  }
  return out;
}

std::vector<Mat> form_stabilizer(const FrameContext& frame, const std::vector<Form>& forms) {
  if (frame.kind != FrameKind::euclidean)
    throw std::invalid_argument("form_stabilizer expects a euclidean frame");
  std::vector<Mat> basis;
  for (int a = 0; a < frame.dim; ++a)
    for (int b = a + 1; b < frame.dim; ++b) {
      Mat m(frame.dim, frame.dim);
      m(a, b) = Rational(1);
      m(b, a) = Rational(-1);
      basis.push_back(std::move(m));
    }

  // Row index per (form, term mask, re/im); columns are so-basis coords.
  std::vector<Form> images;
  images.reserve(basis.size() * forms.size());
  std::map<std::pair<std::size_t, Mask>, std::size_t> row_of;
  for (const Mat& x : basis)
    for (std::size_t fi = 0; fi < forms.size(); ++fi) {
      Form img = so_act(x, forms[fi]);
      for (const auto& [mask, c] : img.terms()) {
        (void)c;
        row_of.emplace(std::make_pair(fi, mask), 2 * row_of.size());
      }
      images.push_back(std::move(img));
    }

  Mat a(2 * row_of.size(), basis.size());
  std::size_t col = 0;
  auto image = images.begin();
  for (std::size_t bi = 0; bi < basis.size(); ++bi, ++col)
    for (std::size_t fi = 0; fi < forms.size(); ++fi, ++image)
      for (const auto& [mask, c] : image->terms()) {
        std::size_t r = row_of.at({fi, mask});
        a(r, col) = c.re;
        a(r + 1, col) = c.im;
      }

  std::vector<Mat> out;
  for (const Vec& coords : nullspace(a)) {
    Mat x(frame.dim, frame.dim);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (!coords[i].is_zero()) x = x + basis[i].scaled(coords[i]);
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<Mat> structure_symmetry_basis(const StructureSpec& spec) {
  if (spec.has_spinors()) {
    Subalgebra h = isotropy_algebra(spinor_representatives(spec));
    if (h.frame().kind == FrameKind::lightcone) return transverse_part(h).basis();
    return h.basis();
  }
  FrameContext tv = euclidean_frame(spec.frame_dim() - 2);
  std::vector<Form> gens;
  for (const GeneratorSpec& gen : spec.generators) gens.push_back(recipe_form(gen.recipe, tv));
  return form_stabilizer(tv, gens);
}

}  // namespace holoforms
