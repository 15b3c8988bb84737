#include "holoforms/parser.hpp"

#include <cctype>
#include <vector>

namespace holoforms {

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos); }
};

BigInt read_int(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.pos;
  if (c.pos < c.s.size() && (c.s[c.pos] == '+' || c.s[c.pos] == '-')) ++c.pos;
  std::size_t digits = c.pos;
  while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
  if (c.pos == digits) {
    c.pos = start;
    c.fail("expected integer");
  }
  return BigInt(std::string(c.s.substr(start, c.pos - start)));
}

Rational read_rational(Cursor& c) {
  BigInt num = read_int(c);
  if (c.eat('/')) {
    BigInt den = read_int(c);
    if (den == 0) c.fail("zero denominator");
    return Rational(num, den);
  }
  return Rational(num);
}

// Unsigned scalar literal: [int[/int]]['i'] with at least one component.
// Returns false when the cursor does not start a literal.
bool read_scalar_literal(Cursor& c, Scalar& out) {
  c.skip_ws();
  bool have_number = c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]));
  bool have_i = c.pos < c.s.size() && c.s[c.pos] == 'i';
  if (!have_number && !have_i) return false;
  Rational mag(1);
  if (have_number) mag = read_rational(c);
  if (c.pos < c.s.size() && c.s[c.pos] == 'i') {
    ++c.pos;
    out = Scalar(Rational(0), mag);
  } else {
    if (!have_number) return false;
    out = Scalar(mag);
  }
  return true;
}

Scalar read_signed_scalar(Cursor& c) {
  bool neg = false;
  if (c.eat('-'))
    neg = true;
  else
    c.eat('+');
  Scalar v;
  if (!read_scalar_literal(c, v)) c.fail("expected scalar");
  if (neg) v = -v;
  if (c.peek() == '+' || c.peek() == '-') {
    bool neg2 = c.eat('-');
    if (!neg2) c.eat('+');
    Scalar w;
    if (!read_scalar_literal(c, w)) c.fail("expected imaginary part");
    if (v.is_real() == w.is_real()) c.fail("malformed complex literal");
    v += neg2 ? -w : w;
  }
  return v;
}

// Index run after 'e'.  Accepts characters m, p, 0-9 and '.'; when a dot is
// present every dot-separated piece is one whole token.
std::vector<int> read_index_run(Cursor& c, const FrameContext& frame) {
  std::size_t start = c.pos;
  std::string run;
  while (c.pos < c.s.size()) {
    char ch = c.s[c.pos];
    if (ch == 'm' || ch == 'p' || ch == '.' || std::isdigit(static_cast<unsigned char>(ch))) {
      run += ch;
      ++c.pos;
    } else {
      break;
    }
  }
  if (run.empty()) throw ParseError("expected frame indices", start);
  std::vector<std::string> tokens;
  if (run.find('.') == std::string::npos && frame_has_wide_names(frame)) {
    // Frames with multi-character index names take dotted runs only; a
    // dotless run is one single index.
    tokens.push_back(run);
  } else if (run.find('.') != std::string::npos) {
    std::string piece;
    for (char ch : run) {
      if (ch == '.') {
        if (piece.empty()) throw ParseError("empty index between dots", start);
        tokens.push_back(piece);
        piece.clear();
      } else {
        piece += ch;
      }
    }
    if (piece.empty()) throw ParseError("trailing dot in index run", start);
    tokens.push_back(piece);
  } else {
    for (char ch : run) tokens.emplace_back(1, ch);
  }
  std::vector<int> internal;
  for (const std::string& t : tokens) {
    int idx;
    if (t == "m" || t == "p") {
      if (frame.kind != FrameKind::lightcone)
        throw ParseError("lightcone index in a euclidean frame", start);
      idx = (t == "m") ? 0 : 1;
    } else {
      for (char ch : t)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          throw ParseError("bad index token '" + t + "'", start);
      int user = std::stoi(t);
      if (user < 1) throw ParseError("index must be positive", start);
      idx = frame.kind == FrameKind::lightcone ? user + 1 : user - 1;
      if (idx >= frame.dim) throw ParseError("index out of frame range", start);
    }
    if (!internal.empty() && idx <= internal.back())
      throw ParseError("non-increasing index run", start);
    internal.push_back(idx);
  }
  return internal;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  Cursor c{text};
  Rational r = read_rational(c);
  if (!c.done()) c.fail("trailing input after rational");
  return r;
}

Scalar parse_scalar(std::string_view text) {
  Cursor c{text};
  Scalar v = read_signed_scalar(c);
  if (!c.done()) c.fail("trailing input after scalar");
  return v;
}

Form parse_form(std::string_view text, const FrameContext& frame) {
  Cursor c{text};
  Form out;
  bool have_degree = false;
  bool first = true;
  while (true) {
    bool neg = false;
    if (c.eat('-'))
      neg = true;
    else if (!c.eat('+') && !first)
      break;
    c.skip_ws();
    if (c.done()) c.fail("expected term");
    Scalar coef(1);
    bool have_coef = false;
    if (c.peek() == '(') {
      c.eat('(');
      coef = read_signed_scalar(c);
      if (!c.eat(')')) c.fail("expected ')'");
      have_coef = true;
    } else if (c.peek() != 'e') {
      if (!read_scalar_literal(c, coef)) c.fail("expected term");
      have_coef = true;
    }
    if (have_coef) c.eat('*');
    Mask mask = 0;
    int degree = 0;
    if (c.peek() == 'e') {
      ++c.pos;
      std::vector<int> idx = read_index_run(c, frame);
      for (int i : idx) mask |= Mask(1) << i;
      degree = static_cast<int>(idx.size());
    } else if (!have_coef) {
      c.fail("expected term");
    }
    if (neg) coef = -coef;
    if (!have_degree) {
      out = Form(frame, degree);
      have_degree = true;
    } else if (degree != out.degree() && !coef.is_zero()) {
      c.fail("mixed degrees in form expression");
    }
    out.add_term(mask, coef);
    first = false;
    if (c.done()) break;
  }
  if (!c.done()) c.fail("trailing input after form");
  return out;
}

namespace {

using SpinorCoeffs = std::map<Mask, Scalar>;

void spinor_add(SpinorCoeffs& acc, Mask m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

SpinorCoeffs read_spinor_expr(Cursor& c, int k);

// basis '1' | 'e' digits | '(' expr ')'
bool read_spinor_atom(Cursor& c, int k, SpinorCoeffs& out) {
  char ch = c.peek();
  if (ch == '(') {
    c.eat('(');
    out = read_spinor_expr(c, k);
    if (!c.eat(')')) c.fail("expected ')'");
    return true;
  }
  if (ch == 'e') {
    std::size_t start = c.pos;
    ++c.pos;
    Mask m = 0;
    int last = 0;
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
      int d = c.s[c.pos] - '0';
      if (d < 1 || d > k) throw ParseError("spinor index out of range", c.pos);
      if (d <= last) throw ParseError("non-increasing index run", c.pos);
      m |= Mask(1) << (d - 1);
      last = d;
      ++c.pos;
    }
    if (m == 0) throw ParseError("expected spinor indices", start);
    out.clear();
    out.emplace(m, Scalar(1));
    return true;
  }
  return false;
}

SpinorCoeffs read_spinor_term(Cursor& c, int k) {
  Scalar coef(1);
  bool have_coef = false;
  c.skip_ws();
  // A leading literal also covers the basis symbol '1' (empty subset).
  if (c.peek() != 'e' && c.peek() != '(') {
    if (!read_scalar_literal(c, coef)) c.fail("expected spinor term");
    have_coef = true;
  }
  if (have_coef) c.eat('*');
  SpinorCoeffs atom;
  if (read_spinor_atom(c, k, atom)) {
    if (have_coef && coef != Scalar(1)) {
      for (auto& [m, v] : atom) v *= coef;
    }
    return atom;
  }
  if (!have_coef) c.fail("expected spinor term");
  SpinorCoeffs single;
  spinor_add(single, 0, coef);
  return single;
}

SpinorCoeffs read_spinor_expr(Cursor& c, int k) {
  SpinorCoeffs acc;
  bool first = true;
  while (true) {
    bool neg = false;
    if (c.eat('-'))
      neg = true;
    else if (!c.eat('+') && !first)
      break;
    SpinorCoeffs term = read_spinor_term(c, k);
    for (const auto& [m, v] : term) spinor_add(acc, m, neg ? -v : v);
    first = false;
    c.skip_ws();
    char ch = c.peek();
    if (ch != '+' && ch != '-') break;
  }
  return acc;
}

}  // namespace

std::map<Mask, Scalar> parse_spinor_coeffs(std::string_view text, int k) {
  Cursor c{text};
  SpinorCoeffs out = read_spinor_expr(c, k);
  if (!c.done()) c.fail("trailing input after spinor expression");
  return out;
}

}  // namespace holoforms
