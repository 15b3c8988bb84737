#include "holoforms/liealg.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>

#include "holoforms/frame.hpp"
#include "holoforms/nullcone.hpp"
#include "holoforms/parser.hpp"
#include "json.hpp"

namespace holoforms {

namespace {

using ordered_json = nlohmann::ordered_json;

Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

bool vec_is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& c) { return c.is_zero(); });
}

// Incremental row space over form coefficients with coordinate tracking:
// every reduced row remembers its expression in the added elements, so
// membership tests double as exact coordinate solves.
class CoordSpan {
 public:
  // Coordinates of f over the added elements, or nullopt if independent.
  std::optional<Vec> coordinates(const Form& f) {
    Vec v = vectorize(f);
    Vec alpha;
    reduce(v, alpha);
    if (!vec_is_zero(v)) return std::nullopt;
    Vec coords = zero_vec(count_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (std::size_t k = 0; k < count_; ++k) coords[k] += alpha[r] * exprs_[r][k];
    return coords;
  }

  // Adds f as element number count(); f must be independent of the span.
  void add(const Form& f) {
    Vec v = vectorize(f);
    Vec alpha;
    reduce(v, alpha);
    if (vec_is_zero(v)) throw std::logic_error("adding a dependent element to a coordinate span");
    Vec expr = zero_vec(count_ + 1);
    expr[count_] = Rational(1);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      exprs_[r].push_back(Rational(0));
      for (std::size_t k = 0; k < count_; ++k) expr[k] -= alpha[r] * exprs_[r][k];
    }
    ++count_;
    std::size_t piv = 0;
    while (v[piv].is_zero()) ++piv;
    // keep earlier rows clean at the new pivot column
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r].size() <= piv || rows_[r][piv].is_zero()) continue;
      Rational c = rows_[r][piv] / v[piv];
      for (std::size_t k = 0; k < v.size(); ++k) rows_[r][k] -= c * v[k];
      for (std::size_t k = 0; k < count_; ++k) exprs_[r][k] -= c * expr[k];
    }
    rows_.push_back(std::move(v));
    exprs_.push_back(std::move(expr));
    pivots_.push_back(piv);
  }

  std::size_t count() const { return count_; }

 private:
  Vec vectorize(const Form& f) {
    for (const auto& [mask, c] : f.terms())
      if (!columns_.contains(mask)) {
        columns_.emplace(mask, columns_.size());
        for (auto& row : rows_) row.push_back(Rational(0));
      }
    Vec v = zero_vec(columns_.size());
    for (const auto& [mask, c] : f.terms()) {
      if (!c.is_real())
        throw std::domain_error("bracket closure needs real coefficients, got " + c.str());
      v[columns_.at(mask)] = c.re;
    }
    return v;
  }

  void reduce(Vec& v, Vec& alpha) const {
    alpha = zero_vec(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      std::size_t piv = pivots_[r];
      if (piv >= v.size() || v[piv].is_zero()) continue;
      Rational c = v[piv] / rows_[r][piv];
      alpha[r] = c;
      for (std::size_t k = 0; k < rows_[r].size(); ++k) v[k] -= c * rows_[r][k];
    }
  }

  std::map<Mask, std::size_t> columns_;
  std::vector<Vec> rows_;
  std::vector<Vec> exprs_;
  std::vector<std::size_t> pivots_;
  std::size_t count_ = 0;
};

// f == c * p for a single rational c, with identical term masks.
std::optional<Rational> proportion(const Form& f, const Form& p) {
  if (p.is_zero() || f.terms().size() != p.terms().size()) return std::nullopt;
  Scalar c = f.terms().begin()->second / p.terms().begin()->second;
  if (!c.is_real() || c.is_zero()) return std::nullopt;
  auto itf = f.terms().begin();
  for (auto itp = p.terms().begin(); itp != p.terms().end(); ++itp, ++itf) {
    if (itf->first != itp->first) return std::nullopt;
    if (!(itf->second == itp->second * c)) return std::nullopt;
  }
  return c.re;
}

}  // namespace

std::string bracket_kind_name(BracketKind k) {
  return k == BracketKind::barwedge ? "barwedge" : "barcurlywedge";
}

BracketKind bracket_kind_from_name(std::string_view name) {
  if (name == "barwedge") return BracketKind::barwedge;
  if (name == "barcurlywedge") return BracketKind::barcurlywedge;
  throw std::invalid_argument("unknown bracket kind '" + std::string(name) +
                              "' (expected barwedge or barcurlywedge)");
}

int bracket_parity(BracketKind kind, int degree) {
  if (degree < 0) throw std::invalid_argument("negative form degree");
  return kind == BracketKind::barcurlywedge ? (degree + 1) % 2 : degree % 2;
}

Form bracket_form(BracketKind kind, const Form& a, const Form& b) {
  if (!(a.frame() == b.frame()))
    throw std::invalid_argument("bracket of forms on different frames");
  if (kind == BracketKind::barcurlywedge) return null_bracket(NullForm(a), NullForm(b));
  // Degree-0 forms are the kernel of phi -> i_{raise(phi)}: contraction by a
  // scalar is the zero operator, so they bracket to zero with everything.
  if (a.degree() == 0 || b.degree() == 0) return Form(a.frame(), 0);
  Form r = barwedge(a, b);
  return a.degree() % 2 ? -r : r;
}

Presentation::Presentation(BracketKind kind, std::vector<Generator> generators,
                           std::map<std::pair<int, int>, Vec> brackets)
    : kind_(kind), gens_(std::move(generators)) {
  if (gens_.empty()) throw std::invalid_argument("presentation needs at least one generator");
  std::set<std::string> seen;
  for (const auto& g : gens_) {
    if (g.label.empty()) throw std::invalid_argument("generator label is empty");
    if (!seen.insert(g.label).second)
      throw std::invalid_argument("duplicate generator label '" + g.label + "'");
    if (g.parity != 0 && g.parity != 1)
      throw std::invalid_argument("generator '" + g.label + "' has parity outside {0,1}");
    if (g.degree < 0)
      throw std::invalid_argument("generator '" + g.label + "' has negative degree");
  }
  const int n = dim();
  for (auto& [ij, v] : brackets) {
    const auto [i, j] = ij;
    if (i < 0 || j < i || j >= n) throw std::invalid_argument("bracket row index out of range");
    if (static_cast<int>(v.size()) != n)
      throw std::invalid_argument("bracket row for [" + gens_[i].label + "," + gens_[j].label +
                                  "] has wrong length");
    if (vec_is_zero(v)) continue;
    if (i == j && gens_[i].parity == 0)
      throw std::invalid_argument("even generator '" + gens_[i].label +
                                  "' has a nonzero square");
    const int want = gens_[i].parity ^ gens_[j].parity;
    for (int k = 0; k < n; ++k)
      if (!v[k].is_zero() && gens_[k].parity != want)
        throw std::invalid_argument("bracket [" + gens_[i].label + "," + gens_[j].label +
                                    "] violates the grading at '" + gens_[k].label + "'");
    brackets_.emplace(ij, std::move(v));
  }
}

int Presentation::even_dim() const {
  return static_cast<int>(
      std::count_if(gens_.begin(), gens_.end(), [](const Generator& g) { return g.parity == 0; }));
}

int Presentation::odd_dim() const { return dim() - even_dim(); }

int Presentation::index_of(std::string_view label) const {
  for (int i = 0; i < dim(); ++i)
    if (gens_[i].label == label) return i;
  throw std::out_of_range("no generator labeled '" + std::string(label) + "'");
}

Vec Presentation::bracket(int i, int j) const {
  const int n = dim();
  if (i < 0 || j < 0 || i >= n || j >= n)
    throw std::out_of_range("generator index out of range");
  const bool swapped = i > j;
  if (swapped) std::swap(i, j);
  Vec v = zero_vec(n);
  if (auto it = brackets_.find({i, j}); it != brackets_.end()) v = it->second;
  // [x_j, x_i] = -(-1)^{p_i p_j} [x_i, x_j]
  if (swapped && !(gens_[i].parity && gens_[j].parity))
    for (auto& c : v) c = -c;
  return v;
}

Vec Presentation::bracket_vec(const Vec& x, const Vec& y) const {
  const int n = dim();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw std::invalid_argument("coefficient vector has wrong length");
  Vec out = zero_vec(n);
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Vec w = bracket(i, j);
      const Rational c = x[i] * y[j];
      for (int k = 0; k < n; ++k) out[k] += c * w[k];
    }
  }
  return out;
}

JacobiReport jacobi_check(const Presentation& p) {
  const int n = p.dim();
  const auto& gens = p.generators();
  JacobiReport rep;
  auto ad = [&](int i, const Vec& w) {
    Vec out = zero_vec(n);
    for (int k = 0; k < n; ++k) {
      if (w[k].is_zero()) continue;
      const Vec v = p.bracket(i, k);
      for (int t = 0; t < n; ++t) out[t] += w[k] * v[t];
    }
    return out;
  };
  auto sign = [&](int a, int b) { return gens[a].parity * gens[b].parity ? -1 : 1; };
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k) {
        ++rep.triples;
        Vec r = zero_vec(n);
        const Vec t1 = ad(i, p.bracket(j, k));
        const Vec t2 = ad(j, p.bracket(k, i));
        const Vec t3 = ad(k, p.bracket(i, j));
        const int s1 = sign(i, k), s2 = sign(j, i), s3 = sign(k, j);
        for (int t = 0; t < n; ++t)
          r[t] = (s1 > 0 ? t1[t] : -t1[t]) + (s2 > 0 ? t2[t] : -t2[t]) +
                 (s3 > 0 ? t3[t] : -t3[t]);
        if (!vec_is_zero(r))
          rep.failures.push_back({i, j, k,
                                  "(" + gens[i].label + ", " + gens[j].label + ", " +
                                      gens[k].label + ")"});
      }
  return rep;
}

Fingerprint fingerprint(const Presentation& p) {
  const int n = p.dim();
  Fingerprint fp;
  fp.total_dim = n;
  fp.even_dim = p.even_dim();
  fp.odd_dim = p.odd_dim();
  fp.abelian = p.stored_brackets().empty();

  // center: x with [x, e_j] = 0 for every j
  Mat m(static_cast<std::size_t>(n) * n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec v = p.bracket(i, j);
      for (int k = 0; k < n; ++k) m(static_cast<std::size_t>(j) * n + k, i) = v[k];
    }
  const std::vector<Vec> center = nullspace(m);
  fp.center_dim = static_cast<int>(center.size());

  // derived series
  auto bracket_span = [&](const std::vector<Vec>& rows) {
    Span s(n);
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (std::size_t b = a; b < rows.size(); ++b) s.add(p.bracket_vec(rows[a], rows[b]));
    return s;
  };
  std::vector<Vec> cur;
  for (int i = 0; i < n; ++i) {
    Vec e = zero_vec(n);
    e[i] = Rational(1);
    cur.push_back(std::move(e));
  }
  std::vector<Vec> derived1;
  while (true) {
    Span s = bracket_span(cur);
    const int d = static_cast<int>(s.dim());
    if (fp.derived_series.empty()) derived1 = s.reduced_rows();
    if (!fp.derived_series.empty() && d == fp.derived_series.back()) break;
    fp.derived_series.push_back(d);
    if (d == 0) break;
    cur = s.reduced_rows();
  }

  if (!center.empty() && !derived1.empty()) {
    std::vector<Vec> stacked = center;
    stacked.insert(stacked.end(), derived1.begin(), derived1.end());
    fp.center_in_derived_dim = fp.center_dim + static_cast<int>(derived1.size()) -
                               static_cast<int>(rank(Mat::from_rows(stacked)));
  }

  // Killing form of the even subalgebra
  std::vector<int> evens;
  for (int i = 0; i < n; ++i)
    if (p.generators()[i].parity == 0) evens.push_back(i);
  const int n0 = static_cast<int>(evens.size());
  if (n0 > 0) {
    Mat killing(n0, n0);
    for (int a = 0; a < n0; ++a)
      for (int b = a; b < n0; ++b) {
        Rational tr(0);
        for (int c = 0; c < n0; ++c) {
          const Vec inner = p.bracket(evens[b], evens[c]);
          Vec outer = zero_vec(n);
          for (int k = 0; k < n; ++k) {
            if (inner[k].is_zero()) continue;
            const Vec v = p.bracket(evens[a], k);
            for (int t = 0; t < n; ++t) outer[t] += inner[k] * v[t];
          }
          tr += outer[evens[c]];
        }
        killing(a, b) = tr;
        killing(b, a) = tr;
      }
    fp.even_killing_signature = congruence_signature(killing);
    fp.even_killing_rank = static_cast<int>(fp.even_killing_signature.pos +
                                            fp.even_killing_signature.neg);
  }

  // [odd, odd]
  Span odd_sq(n);
  for (int i = 0; i < n; ++i) {
    if (p.generators()[i].parity != 1) continue;
    for (int j = i; j < n; ++j) {
      if (p.generators()[j].parity != 1) continue;
      odd_sq.add(p.bracket(i, j));
    }
  }
  fp.odd_square_dim = static_cast<int>(odd_sq.dim());
  return fp;
}

std::string Fingerprint::str() const {
  std::string s = "dim " + std::to_string(total_dim) + " = " + std::to_string(even_dim) +
                  " even + " + std::to_string(odd_dim) + " odd; center " +
                  std::to_string(center_dim) + " (" + std::to_string(center_in_derived_dim) +
                  " in derived); derived series [";
  for (std::size_t i = 0; i < derived_series.size(); ++i)
    s += (i ? ", " : "") + std::to_string(derived_series[i]);
  s += "]; even killing rank " + std::to_string(even_killing_rank) + ", signature (" +
       std::to_string(even_killing_signature.pos) + ", " +
       std::to_string(even_killing_signature.neg) + ", " +
       std::to_string(even_killing_signature.zero) + "); abelian " +
       (abelian ? "yes" : "no") + "; [odd,odd] dim " + std::to_string(odd_square_dim);
  return s;
}

namespace {

Fingerprint make_fingerprint(int total, int even, int odd, int center, int cid,
                             std::vector<int> series, int krank, Signature sig, bool abelian,
                             int oddsq) {
  Fingerprint fp;
  fp.total_dim = total;
  fp.even_dim = even;
  fp.odd_dim = odd;
  fp.center_dim = center;
  fp.center_in_derived_dim = cid;
  fp.derived_series = std::move(series);
  fp.even_killing_rank = krank;
  fp.even_killing_signature = sig;
  fp.abelian = abelian;
  fp.odd_square_dim = oddsq;
  return fp;
}

const std::vector<std::pair<std::string, Fingerprint>>& answer_catalog() {
  static const std::vector<std::pair<std::string, Fingerprint>> table = {
      {"sp(1)", make_fingerprint(3, 3, 0, 0, 0, {3}, 3, {0, 3, 0}, false, 0)},
      {"sp(1)+sp(1)", make_fingerprint(6, 6, 0, 0, 0, {6}, 6, {0, 6, 0}, false, 0)},
      {"so(5)", make_fingerprint(10, 10, 0, 0, 0, {10}, 10, {0, 10, 0}, false, 0)},
      {"u(4)", make_fingerprint(16, 16, 0, 1, 0, {15}, 15, {0, 15, 1}, false, 0)},
      {"so(8)", make_fingerprint(28, 28, 0, 0, 0, {28}, 28, {0, 28, 0}, false, 0)},
      {"e_hat(2)", make_fingerprint(4, 4, 0, 1, 1, {3, 1, 0}, 1, {0, 1, 3}, false, 0)},
      {"s(1)", make_fingerprint(2, 1, 1, 1, 1, {1, 0}, 0, {0, 0, 1}, false, 1)},
      {"s(2)", make_fingerprint(4, 2, 2, 1, 1, {3, 1, 0}, 0, {0, 0, 2}, false, 1)},
  };
  return table;
}

}  // namespace

std::string identify(const Presentation& p) {
  const JacobiReport rep = jacobi_check(p);
  if (!rep.ok())
    throw std::domain_error("bracket table fails the graded Jacobi identity at " +
                            rep.failures.front().detail);
  const Fingerprint fp = fingerprint(p);
  if (fp.abelian)
    return fp.total_dim == 1 ? "R" : "R^" + std::to_string(fp.total_dim);
  for (const auto& [name, expect] : answer_catalog())
    if (fp == expect) return name;
  return "unrecognized";
}

Presentation random_basis_change(const Presentation& p, SplitMix64& rng) {
  const int n = p.dim();
  std::vector<std::vector<Vec>> t(n, std::vector<Vec>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = p.bracket(i, j);

  std::vector<int> klass[2];
  for (int i = 0; i < n; ++i) klass[p.generators()[i].parity].push_back(i);

  auto nonzero_rational = [&rng](int max_num, int max_den) {
    Rational c;
    do {
      c = random_rational(rng, max_num, max_den);
    } while (c.is_zero());
    return c;
  };

  const int moves = std::min(2 * n + 4, 24);
  for (int m = 0; m < moves; ++m) {
    const int par = static_cast<int>(rng.below(2));
    const auto& cls = klass[par];
    if (cls.size() >= 2 && rng.below(4) != 0) {
      // shear: f_i = e_i + lambda e_j within one parity class
      const int i = cls[rng.below(cls.size())];
      int j = i;
      while (j == i) j = cls[rng.below(cls.size())];
      const Rational lam = nonzero_rational(2, 2);
      for (int b = 0; b < n; ++b)
        for (int k = 0; k < n; ++k) t[i][b][k] += lam * t[j][b][k];
      for (int a = 0; a < n; ++a)
        for (int k = 0; k < n; ++k) t[a][i][k] += lam * t[a][j][k];
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b][j] -= lam * t[a][b][i];
    } else {
      // scale: f_i = c e_i
      const int i = static_cast<int>(rng.below(n));
      const Rational c = nonzero_rational(3, 3);
      for (int b = 0; b < n; ++b)
        for (int k = 0; k < n; ++k) t[i][b][k] *= c;
      for (int a = 0; a < n; ++a)
        for (int k = 0; k < n; ++k) t[a][i][k] *= c;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b][i] /= c;
    }
  }

  std::vector<Generator> gens;
  for (int i = 0; i < n; ++i)
    gens.push_back({"b" + std::to_string(i + 1), p.generators()[i].degree,
                    p.generators()[i].parity});
  std::map<std::pair<int, int>, Vec> rows;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (!vec_is_zero(t[i][j])) rows[{i, j}] = t[i][j];
  return Presentation(p.kind(), std::move(gens), std::move(rows));
}

Closure close(const std::vector<NamedForm>& generators, BracketKind kind, int max_dim) {
  if (generators.empty()) throw std::invalid_argument("closure needs at least one generator");
  if (max_dim < static_cast<int>(generators.size()))
    throw std::invalid_argument("closure bound is smaller than the generator count");

  struct Elem {
    std::string label;
    Form form;
    int parity;
  };
  const FrameContext frame = generators.front().form.frame();
  std::vector<Elem> elems;
  std::set<std::string> labels;
  CoordSpan span;
  for (const auto& g : generators) {
    if (g.label.empty()) throw std::invalid_argument("generator label is empty");
    if (!labels.insert(g.label).second)
      throw std::invalid_argument("duplicate generator label '" + g.label + "'");
    if (g.form.is_zero())
      throw std::invalid_argument("generator '" + g.label + "' is the zero form");
    if (!(g.form.frame() == frame))
      throw std::invalid_argument("generator '" + g.label + "' lives on a different frame");
    if (span.coordinates(g.form))
      throw std::invalid_argument("generator '" + g.label +
                                  "' is linearly dependent on earlier generators");
    span.add(g.form);
    elems.push_back({g.label, g.form, bracket_parity(kind, g.form.degree())});
  }
  const std::size_t nseeds = elems.size();

  // ⋏-powers of the input generators, extended on demand, for naming new
  // elements (barcurlywedge only; barwedge closures of null forms never
  // extend).
  std::vector<std::vector<Form>> powers(nseeds);
  auto power_name = [&](const Form& f) -> std::optional<std::tuple<std::string, Form, Rational>> {
    if (kind != BracketKind::barcurlywedge) return std::nullopt;
    for (std::size_t s = 0; s < nseeds; ++s) {
      const Form& g = elems[s].form;
      auto& pw = powers[s];
      if (pw.empty()) pw.push_back(g);
      while (!pw.back().is_zero() && pw.back().degree() < f.degree() && pw.size() < 64) {
        Form nxt = curlywedge(NullForm(pw.back()), NullForm(g));
        if (!nxt.is_zero() && nxt.degree() <= pw.back().degree()) break;
        pw.push_back(std::move(nxt));
      }
      for (std::size_t t = 1; t < pw.size(); ++t) {
        if (pw[t].is_zero() || pw[t].degree() != f.degree()) continue;
        if (auto c = proportion(f, pw[t]))
          return std::make_tuple("curly^" + std::to_string(t + 1) + "(" + elems[s].label + ")",
                                 pw[t], *c);
      }
    }
    return std::nullopt;
  };

  auto label_less = [&elems](const std::pair<int, int>& a, const std::pair<int, int>& b) {
    return std::tie(elems[a.first].label, elems[a.second].label) <
           std::tie(elems[b.first].label, elems[b.second].label);
  };
  std::set<std::pair<int, int>, decltype(label_less)> pending(label_less);
  auto enqueue_with = [&](int m) {
    for (int a = 0; a <= m; ++a) pending.insert({a, m});
  };
  for (int m = 0; m < static_cast<int>(elems.size()); ++m) enqueue_with(m);

  std::map<std::pair<int, int>, Vec> rows;
  while (!pending.empty()) {
    const auto [i, j] = *pending.begin();
    pending.erase(pending.begin());
    const Form f = bracket_form(kind, elems[i].form, elems[j].form);
    if (i == j && elems[i].parity == 0) {
      if (!f.is_zero())
        throw std::logic_error("even generator '" + elems[i].label +
                               "' has a nonzero self-bracket");
      continue;
    }
    if (f.is_zero()) continue;
    std::optional<Vec> coords = span.coordinates(f);
    if (!coords) {
      std::string label;
      Form elem_form = f;
      Rational coef(1);
      if (auto named = power_name(f)) {
        std::tie(label, elem_form, coef) = *named;
      } else {
        label = "[" + elems[i].label + "," + elems[j].label + "]";
      }
      if (static_cast<int>(elems.size()) >= max_dim)
        throw std::runtime_error("closure did not terminate within " + std::to_string(max_dim) +
                                 " generators; runaway word " + label);
      if (!labels.insert(label).second)
        throw std::logic_error("duplicate closure label '" + label + "'");
      const int m = static_cast<int>(elems.size());
      elems.push_back({label, elem_form, bracket_parity(kind, elem_form.degree())});
      span.add(elem_form);
      coords = zero_vec(m + 1);
      (*coords)[m] = coef;
      enqueue_with(m);
    }
    rows[{i, j}] = *coords;
  }

  const std::size_t n = elems.size();
  for (auto& [ij, v] : rows) v.resize(n, Rational(0));
  std::vector<Generator> gens;
  std::vector<NamedForm> out;
  for (const auto& e : elems) {
    gens.push_back({e.label, e.form.degree(), e.parity});
    out.push_back({e.label, e.form});
  }
  return {Presentation(kind, std::move(gens), std::move(rows)), std::move(out)};
}

std::vector<NamedForm> reduced_seeds(const std::vector<NamedForm>& fundamental) {
  std::vector<NamedForm> out;
  for (const auto& f : fundamental)
    if (f.label != "kappa") out.push_back(f);
  return out;
}

std::string presentation_to_json(const Presentation& p) {
  ordered_json root;
  root["bracket"] = bracket_kind_name(p.kind());
  ordered_json gens = ordered_json::array();
  for (const auto& g : p.generators()) {
    ordered_json e;
    e["label"] = g.label;
    e["degree"] = g.degree;
    e["parity"] = g.parity;
    gens.push_back(std::move(e));
  }
  root["generators"] = std::move(gens);
  ordered_json rows = ordered_json::array();
  for (const auto& [ij, v] : p.stored_brackets()) {
    ordered_json row;
    row["left"] = p.generators()[ij.first].label;
    row["right"] = p.generators()[ij.second].label;
    ordered_json result = ordered_json::array();
    for (int k = 0; k < p.dim(); ++k) {
      if (v[k].is_zero()) continue;
      ordered_json term;
      term["coef"] = v[k].str();
      term["gen"] = p.generators()[k].label;
      result.push_back(std::move(term));
    }
    row["result"] = std::move(result);
    rows.push_back(std::move(row));
  }
  root["brackets"] = std::move(rows);
  root["convention"] = {{"contraction_sign", kContractionSign},
                        {"reality_sign", kRealitySign}};
  return root.dump(2) + "\n";
}

Presentation presentation_from_json(std::string_view text) {
  auto fail = [](const std::string& msg) -> void {
    throw std::invalid_argument("structure constants: " + msg);
  };
  ordered_json root;
  try {
    root = ordered_json::parse(text);
  } catch (const std::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) fail("top level must be an object");
  if (!root.contains("bracket") || !root["bracket"].is_string())
    fail("missing string field 'bracket'");
  const BracketKind kind = bracket_kind_from_name(root["bracket"].get<std::string>());

  if (!root.contains("generators") || !root["generators"].is_array())
    fail("missing array field 'generators'");
  std::vector<Generator> gens;
  std::map<std::string, int> index;
  for (const auto& e : root["generators"]) {
    if (!e.is_object() || !e.contains("label") || !e["label"].is_string() ||
        !e.contains("degree") || !e["degree"].is_number_integer() || !e.contains("parity") ||
        !e["parity"].is_number_integer())
      fail("each generator needs a string 'label' and integer 'degree' and 'parity'");
    Generator g{e["label"].get<std::string>(), e["degree"].get<int>(), e["parity"].get<int>()};
    if (index.contains(g.label)) fail("duplicate generator label '" + g.label + "'");
    index.emplace(g.label, static_cast<int>(gens.size()));
    gens.push_back(std::move(g));
  }
  const int n = static_cast<int>(gens.size());

  std::map<std::pair<int, int>, Vec> rows;
  if (root.contains("brackets")) {
    if (!root["brackets"].is_array()) fail("'brackets' must be an array");
    for (const auto& row : root["brackets"]) {
      if (!row.is_object() || !row.contains("left") || !row["left"].is_string() ||
          !row.contains("right") || !row["right"].is_string() || !row.contains("result") ||
          !row["result"].is_array())
        fail("each bracket row needs string 'left'/'right' and an array 'result'");
      const std::string left = row["left"].get<std::string>();
      const std::string right = row["right"].get<std::string>();
      if (!index.contains(left)) fail("unknown generator '" + left + "' in a bracket row");
      if (!index.contains(right)) fail("unknown generator '" + right + "' in a bracket row");
      int i = index[left], j = index[right];
      Vec v = zero_vec(n);
      for (const auto& term : row["result"]) {
        if (!term.is_object() || !term.contains("coef") || !term["coef"].is_string() ||
            !term.contains("gen") || !term["gen"].is_string())
          fail("each result term needs a string 'coef' and 'gen'");
        const std::string gen = term["gen"].get<std::string>();
        if (!index.contains(gen)) fail("unknown generator '" + gen + "' in a result term");
        Rational c;
        try {
          c = parse_rational(term["coef"].get<std::string>());
        } catch (const std::exception& e) {
          fail("bad coefficient '" + term["coef"].get<std::string>() + "': " + e.what());
        }
        v[index[gen]] += c;
      }
      if (i > j) {
        std::swap(i, j);
        if (!(gens[i].parity && gens[j].parity))
          for (auto& c : v) c = -c;
      }
      if (rows.contains({i, j}))
        fail("duplicate bracket row for [" + gens[i].label + "," + gens[j].label + "]");
      rows.emplace(std::pair{i, j}, std::move(v));
    }
  }
  if (root.contains("convention")) {
    if (!root["convention"].is_object()) fail("'convention' must be an object");
    for (const auto& [key, value] : root["convention"].items())
      if (!value.is_string()) fail("convention field '" + key + "' must be a string");
  }
  return Presentation(kind, std::move(gens), std::move(rows));
}

}  // namespace holoforms
