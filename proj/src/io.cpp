#include "novbi/io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "novbi/error.hpp"

namespace novbi {

namespace {

enum class Tok { Num, Id, Op, End };

struct Token {
  Tok kind;
  std::string text;
};

bool id_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool id_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Token> tokenize(const std::string& s, std::size_t line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Num, s.substr(i, j - i)});
      i = j;
    } else if (id_start(c)) {
      std::size_t j = i;
      while (j < s.size() && id_char(s[j])) ++j;
      out.push_back({Tok::Id, s.substr(i, j - i)});
      i = j;
    } else if (std::string("+-*/^()").find(c) != std::string::npos) {
      out.push_back({Tok::Op, std::string(1, c)});
      ++i;
    } else {
      throw ParseError(line, std::string("malformed scalar: unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, ""});
  return out;
}

// Recursive-descent reader for scalars and linear combinations of basis tensors.
class Reader {
 public:
  Reader(std::vector<Token> toks, std::size_t line, Ring ring, const Space* space)
      : t_(std::move(toks)), line_(line), ring_(ring), space_(space) {}

  bool at_end() const { return t_[pos_].kind == Tok::End; }

  Poly scalar() {
    Poly acc;
    bool neg = false;
    if (is_op("-") || is_op("+")) neg = take().text == "-";
    acc = product_term();
    if (neg) acc = -acc;
    while (is_op("+") || is_op("-")) {
      bool minus = take().text == "-";
      Poly t = product_term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  /// Terms with `order` basis names each, keyed by basis index tuple.
  std::vector<std::pair<std::vector<std::size_t>, Poly>> lincomb(std::size_t order) {
    std::vector<std::pair<std::vector<std::size_t>, Poly>> out;
    if (t_[pos_].kind == Tok::Num && t_[pos_].text == "0" && t_[pos_ + 1].kind == Tok::End) {
      ++pos_;
      return out;
    }
    bool first = true;
    std::set<std::vector<std::size_t>> seen;
    while (!at_end()) {
      bool neg = false;
      if (is_op("+") || is_op("-")) {
        neg = take().text == "-";
      } else if (!first) {
        fail("malformed scalar: expected '+' or '-' between terms");
      }
      first = false;
      Poly coef(1);
      if (!is_basis()) {
        coef = coefficient();
      }
      std::vector<std::size_t> idx;
      for (std::size_t k = 0; k < order; ++k) {
        if (t_[pos_].kind != Tok::Id) fail("expected " + std::to_string(order) + " basis name(s) in each term");
        idx.push_back(basis(take().text));
      }
      if (!seen.insert(idx).second) fail("duplicate term in one entry");
      out.emplace_back(idx, neg ? -coef : coef);
    }
    return out;
  }

  std::size_t basis(const std::string& name) const {
    if (name == "q") throw ParseError(line_, "malformed scalar: 'q' where a basis name was expected");
    auto i = space_->index_of(name);
    if (!i) throw ParseError(line_, "unknown basis name '" + name + "'");
    return *i;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, msg); }

 private:
  bool is_op(const char* s) const { return t_[pos_].kind == Tok::Op && t_[pos_].text == s; }
  bool is_basis() const { return t_[pos_].kind == Tok::Id && t_[pos_].text != "q"; }
  const Token& take() { return t_[pos_++]; }

  // Factors joined by '*' and '/'. A trailing '*' before a basis name ends it.
  Poly coefficient() {
    Poly acc = factor();
    while (true) {
      if (is_op("*")) {
        if (t_[pos_ + 1].kind == Tok::Id && t_[pos_ + 1].text != "q") {
          ++pos_;
          break;
        }
        ++pos_;
        acc = acc * factor();
      } else if (is_op("/")) {
        ++pos_;
        acc = divide(acc, factor());
      } else {
        break;
      }
    }
    return acc;
  }

  Poly product_term() {
    Poly acc = unary();
    while (is_op("*") || is_op("/")) {
      bool div = take().text == "/";
      Poly f = unary();
      acc = div ? divide(acc, f) : acc * f;
    }
    return acc;
  }

  Poly unary() {
    if (is_op("-")) {
      ++pos_;
      return -unary();
    }
    return factor();
  }

  Poly divide(const Poly& a, const Poly& b) const {
    if (!b.is_constant() || b.is_zero()) fail("malformed scalar: division by a non-constant or zero");
    return a * Poly(Rational(1) / b.coeff(0));
  }

  Poly factor() {
    Poly base;
    const Token& tok = t_[pos_];
    if (tok.kind == Tok::Num) {
      ++pos_;
      base = Poly(Rational(tok.text));
    } else if (tok.kind == Tok::Id && tok.text == "q") {
      if (ring_ != Ring::Poly) fail("malformed scalar: 'q' appears in a file over Q");
      ++pos_;
      base = Poly::q();
    } else if (is_op("(")) {
      ++pos_;
      base = scalar();
      if (!is_op(")")) fail("malformed scalar: missing ')'");
      ++pos_;
    } else if (tok.kind == Tok::Id) {
      fail("malformed scalar: unexpected name '" + tok.text + "'");
    } else {
      fail("malformed scalar" + (tok.text.empty() ? std::string(": unexpected end") : ": unexpected '" + tok.text + "'"));
    }
    if (is_op("^")) {
      ++pos_;
      if (t_[pos_].kind != Tok::Num) fail("malformed scalar: exponent must be a natural number");
      unsigned long e = std::stoul(take().text);
      Poly p(1);
      for (unsigned long k = 0; k < e; ++k) p = p * base;
      base = p;
    }
    return base;
  }

  std::vector<Token> t_;
  std::size_t pos_ = 0;
  std::size_t line_;
  Ring ring_;
  const Space* space_;
};

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

bool valid_identifier(const std::string& s) {
  if (s.empty() || !id_start(s[0])) return false;
  for (char c : s)
    if (!id_char(c)) return false;
  return true;
}

enum class Section { None, Product, Coproduct, Map, Form, RElement };

Scalar lift(const Poly& p, Ring r) { return r == Ring::Poly ? Scalar::poly(p) : Scalar(p.coeff(0)); }

}  // namespace

Scalar parse_scalar(const std::string& text, Ring ring) {
  Reader r(tokenize(text, 0), 0, ring, nullptr);
  Poly p = r.scalar();
  if (!r.at_end()) throw ParseError(0, "malformed scalar '" + text + "'");
  return lift(p, ring);
}

Presentation parse_presentation(const std::string& text) {
  Presentation p;
  bool have_space = false, have_ring = false;
  Section section = Section::None;
  std::string current;
  std::set<std::vector<std::size_t>> filled;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;

  auto need_space = [&](std::size_t line) {
    if (!have_space) throw ParseError(line, "'space' must come before any section");
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    auto w = words(line);
    if (w.empty()) continue;
    auto arrow = line.find("->");
    if (arrow == std::string::npos) {
      const std::string& kw = w[0];
      if (kw == "ring") {
        if (w.size() != 2 || (w[1] != "Q" && w[1] != "Q[q]")) throw ParseError(lineno, "ring must be Q or Q[q]");
        if (have_ring || have_space) throw ParseError(lineno, "'ring' must appear once, before 'space'");
        p.ring = w[1] == "Q" ? Ring::Rational : Ring::Poly;
        have_ring = true;
      } else if (kw == "space") {
        if (have_space) throw ParseError(lineno, "duplicate 'space' line");
        if (w.size() < 2) throw ParseError(lineno, "space needs at least one basis name");
        std::set<std::string> seen;
        for (std::size_t i = 1; i < w.size(); ++i) {
          if (w[i] == "q") throw ParseError(lineno, "'q' is reserved and cannot name a basis vector");
          if (!valid_identifier(w[i])) throw ParseError(lineno, "invalid basis name '" + w[i] + "'");
          if (!seen.insert(w[i]).second) throw ParseError(lineno, "basis name '" + w[i] + "' repeated");
          p.space.names.push_back(w[i]);
        }
        have_space = true;
      } else if (kw == "product" || kw == "coproduct" || kw == "map" || kw == "form" || kw == "relement") {
        need_space(lineno);
        if (w.size() != 2 || !valid_identifier(w[1])) throw ParseError(lineno, kw + " needs one name");
        std::size_t n = p.dim();
        current = w[1];
        bool fresh = true;
        if (kw == "product") {
          section = Section::Product;
          fresh = p.products.emplace(current, Bilinear(n, p.ring)).second;
        } else if (kw == "coproduct") {
          section = Section::Coproduct;
          fresh = p.coproducts.emplace(current, Coproduct(n, p.ring)).second;
        } else if (kw == "map") {
          section = Section::Map;
          fresh = p.maps.emplace(current, LinMap(n, n, p.ring)).second;
        } else if (kw == "form") {
          section = Section::Form;
          fresh = p.forms.emplace(current, Tensor({n, n}, p.ring)).second;
        } else {
          section = Section::RElement;
          fresh = p.relements.emplace(current, Tensor({n, n}, p.ring)).second;
        }
        if (!fresh) throw ParseError(lineno, "duplicate " + kw + " named '" + current + "'");
        filled.clear();
      } else {
        throw ParseError(lineno, "unknown keyword '" + kw + "'");
      }
      continue;
    }

    if (section == Section::None) throw ParseError(lineno, "entry outside any section");
    auto lhs = words(line.substr(0, arrow));
    std::string rhs = line.substr(arrow + 2);
    Reader reader(tokenize(rhs, lineno), lineno, p.ring, &p.space);
    std::size_t want = (section == Section::Product || section == Section::Form || section == Section::RElement) ? 2 : 1;
    if (lhs.size() != want) throw ParseError(lineno, "expected " + std::to_string(want) + " basis name(s) before '->'");
    std::vector<std::size_t> key;
    for (const auto& name : lhs) key.push_back(reader.basis(name));
    if (!filled.insert(key).second) throw ParseError(lineno, "duplicate entry for '" + line.substr(0, arrow) + "'");

    if (section == Section::Form || section == Section::RElement) {
      Poly v = reader.scalar();
      if (!reader.at_end()) reader.fail("malformed scalar");
      Tensor& t = section == Section::Form ? p.forms[current] : p.relements[current];
      t.set({key[0], key[1]}, lift(v, p.ring));
      continue;
    }
    auto terms = reader.lincomb(section == Section::Coproduct ? 2 : 1);
    for (const auto& [idx, coef] : terms) {
      Scalar c = lift(coef, p.ring);
      if (section == Section::Product) p.products[current].set(key[0], key[1], idx[0], c);
      else if (section == Section::Map) p.maps[current].set(idx[0], key[0], c);
      else p.coproducts[current].set(key[0], idx[0], idx[1], c);
    }
  }
  if (!have_space) throw ParseError(lineno, "missing 'space' line");
  p.validate();
  return p;
}

Presentation load_presentation(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot read '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_presentation(buf.str());
}

namespace {

// "e1", "2*e1", "-1/2*e1", "(2+6*q)*e1"; sign handled by the caller.
std::string coefficient_prefix(const Poly& c) {
  if (c.is_constant()) {
    Rational v = c.coeff(0);
    if (v == 1) return "";
    return to_string(v) + "*";
  }
  return "(" + c.str() + ")*";
}

std::string join_terms(const std::vector<std::pair<Poly, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    Poly c = terms[i].first;
    bool neg = c.is_constant() && c.coeff(0) < 0;
    if (neg) c = -c;
    if (i == 0) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    s += coefficient_prefix(c) + terms[i].second;
  }
  return s;
}

}  // namespace

std::string render_tensor(const Tensor& t, const std::vector<std::string>& names) {
  std::vector<std::pair<Poly, std::string>> terms;
  std::vector<std::size_t> idx(t.order());
  for (std::size_t f = 0; f < t.size(); ++f) {
    if (t[f].is_zero()) continue;
    t.unflatten(f, idx);
    std::string basis;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k) basis += " (x) ";
      basis += idx[k] < names.size() ? names[idx[k]] : "#" + std::to_string(idx[k] + 1);
    }
    if (idx.empty()) basis = "1";
    terms.emplace_back(t[f].value(), basis);
  }
  return join_terms(terms);
}

std::string render_tuple(const std::vector<std::size_t>& tuple, const std::vector<std::string>& names) {
  std::string s = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) s += ", ";
    s += tuple[i] < names.size() ? names[tuple[i]] : "#" + std::to_string(tuple[i] + 1);
  }
  return s + ")";
}

std::string emit_presentation(const Presentation& p) {
  const auto& nm = p.space.names;
  std::ostringstream out;
  out << "ring " << to_string(p.ring) << "\n";
  out << "space";
  for (const auto& n : nm) out << " " << n;
  out << "\n";
  std::size_t n = p.dim();
  for (const auto& [name, b] : p.products) {
    out << "product " << name << "\n";
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::pair<Poly, std::string>> terms;
        for (std::size_t k = 0; k < n; ++k)
          if (!b(i, j, k).is_zero()) terms.emplace_back(b(i, j, k).value(), nm[k]);
        if (!terms.empty()) out << "  " << nm[i] << " " << nm[j] << " -> " << join_terms(terms) << "\n";
      }
  }
  for (const auto& [name, d] : p.coproducts) {
    out << "coproduct " << name << "\n";
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::pair<Poly, std::string>> terms;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (!d(i, j, k).is_zero()) terms.emplace_back(d(i, j, k).value(), nm[j] + " " + nm[k]);
      if (!terms.empty()) out << "  " << nm[i] << " -> " << join_terms(terms) << "\n";
    }
  }
  for (const auto& [name, m] : p.maps) {
    out << "map " << name << "\n";
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::pair<Poly, std::string>> terms;
      for (std::size_t i = 0; i < n; ++i)
        if (!m(i, j).is_zero()) terms.emplace_back(m(i, j).value(), nm[i]);
      if (!terms.empty()) out << "  " << nm[j] << " -> " << join_terms(terms) << "\n";
    }
  }
  auto pairs = [&](const char* kw, const std::map<std::string, Tensor>& m) {
    for (const auto& [name, t] : m) {
      out << kw << " " << name << "\n";
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!t.at({i, j}).is_zero()) out << "  " << nm[i] << " " << nm[j] << " -> " << t.at({i, j}).str() << "\n";
    }
  };
  pairs("form", p.forms);
  pairs("relement", p.relements);
  return out.str();
}

}  // namespace novbi
