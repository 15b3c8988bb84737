#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holoforms/clifford.hpp"
#include "holoforms/form.hpp"
#include "holoforms/frame.hpp"
#include "holoforms/isotropy.hpp"
#include "holoforms/linalg.hpp"

namespace holoforms {

// The catalog of special metric structures: for each one a frame, spinor
// representatives when the structure is cut out by spinors, distinguished
// generator forms when it is cut out by forms, and the expected invariants
// (stabilizer dimensions, bilinear counts, bracket-closure targets).
//
// The data lives in a versioned JSON file shipped with the library;
// loading re-derives every generator from its construction recipe and
// cross-checks the stored expression, so the file cannot drift silently.

// One named generator.  Fixed rows carry both the expanded lightcone
// expression and the recipe that rebuilds it; parametrized rows carry only
// the recipe.  `count` > 1 marks recipes that expand to a whole basis
// (labels get a running suffix: f1, f2, ...).
struct GeneratorSpec {
  std::string label;
  std::string recipe;
  std::string expr;
  std::size_t count = 1;
};

struct IsotropyExpectation {
  std::string algebra;      // display name of the transverse stabilizer
  std::size_t dim = 0;      // full stabilizer dimension
  std::size_t transverse_dim = 0;
};

// Expected bracket closure of the generators; `when` selects by family
// parameter: "*", "even", "odd", or "n=<value>" (first match wins).
struct ClosureRule {
  std::string when;
  std::string algebra;
  std::size_t dim = 0;
};

enum class StructureKind { null_structure, compact, euclidean, family };

struct StructureSpec {
  std::string name;
  std::string group;
  StructureKind kind = StructureKind::null_structure;
  FrameKind frame_kind = FrameKind::lightcone;
  // Frame dimension dim_coef * n + dim_const; dim_coef is 0 for fixed rows.
  int dim_coef = 0;
  int dim_const = 0;
  int param_min = 0;
  int param_max = 0;
  int param = 0;  // set by Catalog::resolve on family instances
  std::vector<std::string> spinor_exprs;
  std::size_t spinor_count = 0;  // independent real spinors (the table's L)
  std::vector<GeneratorSpec> generators;
  std::optional<IsotropyExpectation> isotropy;
  std::optional<std::size_t> one_form_bilinears;
  std::vector<ClosureRule> closure_rules;

  bool is_family() const { return kind == StructureKind::family; }
  bool has_spinors() const { return !spinor_exprs.empty(); }
  bool resolved() const { return !is_family() || param > 0; }

  // Throws std::logic_error on an unresolved family.
  int frame_dim() const;
  FrameContext frame() const;
  // ten_d for the 10-dim lightcone rows, eight_d for the euclidean ones;
  // throws std::domain_error otherwise.
  SpinorModel spinor_model() const;
  // First closure rule matching this instance, if any.
  std::optional<ClosureRule> closure() const;
};

class Catalog {
 public:
  static Catalog load_file(const std::string& path);
  static Catalog parse_text(std::string_view text, const std::string& origin);

  // The copy named by the HOLOFORMS_CATALOG environment variable when set
  // (no fallback: an explicit override must not be silently ignored),
  // otherwise the source-tree file, otherwise the installed file.  Loaded
  // once and shared.
  static const Catalog& standard();

  int version() const { return version_; }
  const std::vector<StructureSpec>& entries() const { return entries_; }

  // Lookup ignoring case and punctuation: "Sp(2)xR8" and "{1}xR8" find the
  // rows stored as Sp2xR8 and 1xR8.  Null when nothing matches.
  const StructureSpec* find(std::string_view name) const;

  // Fixed rows resolve as-is (n must be 0); families instantiate at n.
  // Throws std::out_of_range for unknown names, std::invalid_argument for
  // a missing or out-of-range family parameter.
  StructureSpec resolve(std::string_view name, int n = 0) const;

 private:
  int version_ = 0;
  std::vector<StructureSpec> entries_;
};

FrameContext catalog_frame(const StructureSpec& spec);

struct NamedForm {
  std::string label;
  Form form;
};

// Distinguished null forms of a lightcone structure: kappa first, then the
// lift e^- ^ (transverse generator) for every catalog generator, recipes
// expanded on the transverse block.  Empty for the euclidean and compact
// rows, which carry no null forms.
std::vector<NamedForm> fundamental_forms(const StructureSpec& spec);

// Independent real (Majorana) spinors spanning the representative set:
// the majorana parts of the listed expressions in order, each kept exactly
// when it grows the real span.  The size equals the structure's recorded
// spinor count.  Throws std::domain_error for rows without spinor content
// (the form families and G2xR7).
std::vector<Spinor> spinor_representatives(const StructureSpec& spec);

// All x in so(dim) with so_act(x, f) = 0 for every listed form, solved
// exactly.  The forms must share one euclidean frame.
std::vector<Mat> form_stabilizer(const FrameContext& frame, const std::vector<Form>& forms);

// Transverse symmetry algebra the structure is invariant under: for spinor
// rows the transverse part of the spinor stabilizer, for form rows and
// families the joint stabilizer of the transverse generators.
std::vector<Mat> structure_symmetry_basis(const StructureSpec& spec);

}  // namespace holoforms
