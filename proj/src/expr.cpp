#include "superrigid/expr.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace superrigid {

namespace {

struct Gen {
  bool odd = false;
  int index = 0;
};

class Parser {
 public:
  Parser(const std::string& s, const Ambient& amb) : s_(s), amb_(amb) {}

  Elem parse() {
    Elem out;
    skip();
    if (at_end()) throw ParseError("empty expression", pos_);
    bool first = true;
    while (!at_end()) {
      Scalar sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      first = false;
      auto [slot, jet] = term();
      Jet scaled = jet * sign;
      for (const auto& [mono, c] : scaled.terms()) elem_add(out, Elem{{Term{mono, slot}, c}});
      skip();
    }
    return out;
  }

 private:
  const std::string& s_;
  const Ambient& amb_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  long integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", pos_);
    return std::stol(s_.substr(start, pos_ - start));
  }

  Scalar rational() {
    std::size_t start = pos_;
    long p = integer();
    skip();
    if (peek() == '/') {
      ++pos_;
      skip();
      long q = integer();
      if (q == 0) throw ParseError("zero denominator", start);
      return frac(p, q);
    }
    return Scalar(p);
  }

  std::string ident() {
    std::size_t start = pos_;
    while (!at_end() && (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  Gen lookup(const std::string& name, std::size_t at) const {
    for (int i = 0; i < amb_.m; ++i)
      if (name == "x" + std::to_string(i + 1) || name == amb_.even_name(i)) return {false, i};
    for (int j = 0; j < amb_.n; ++j)
      if (name == "xi" + std::to_string(j + 1) || name == amb_.odd_name(j)) return {true, j};
    if (name == "tau") {
      if (amb_.tau < 0) throw ParseError("no tau in this ambient", at);
      return {true, amb_.tau};
    }
    if (!name.empty() && (name[0] == 'p' || name[0] == 'q')) {
      std::string rest = name.substr(1);
      int k = 1;
      if (!rest.empty()) {
        for (char c : rest)
          if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("unknown generator '" + name + "'", at);
        k = std::stoi(rest);
      }
      int i = 2 * (k - 1) + (name[0] == 'q' ? 1 : 0);
      if (k >= 1 && i < amb_.m) return {false, i};
    }
    throw ParseError("unknown generator '" + name + "'", at);
  }

  Jet gen_jet(const Gen& g) const { return g.odd ? Jet::xi(amb_, g.index) : Jet::x(amb_, g.index); }

  // returns (slot, jet): slot -1 for a function term
  std::pair<int, Jet> term() {
    Jet out = Jet::constant(amb_, 1);
    int slot = -1;
    bool any = false;
    skip();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      out = out * rational();
      any = true;
    }
    while (true) {
      skip();
      std::size_t save = pos_;
      if (peek() == '*') {
        if (!any) throw ParseError("unexpected '*'", pos_);
        ++pos_;
        skip();
      }
      if (!std::isalpha(static_cast<unsigned char>(peek()))) {
        pos_ = save;
        break;
      }
      if (slot >= 0) throw ParseError("nothing may follow D(...)", pos_);
      std::size_t at = pos_;
      std::string name = ident();
      if (name == "D") {
        skip();
        if (peek() != '(') throw ParseError("expected '(' after D", pos_);
        ++pos_;
        skip();
        std::size_t gat = pos_;
        Gen g = lookup(ident(), gat);
        skip();
        if (peek() != ')') throw ParseError("expected ')'", pos_);
        ++pos_;
        slot = g.odd ? amb_.m + g.index : g.index;
        any = true;
        continue;
      }
      Gen g = lookup(name, at);
      skip();
      long e = 1;
      if (peek() == '^') {
        ++pos_;
        skip();
        e = integer();
      }
      for (long k = 0; k < e; ++k) out = mul(out, gen_jet(g));
      any = true;
    }
    if (!any) throw ParseError("expected a term", pos_);
    return {slot, out};
  }
};

}  // namespace

Scalar parse_rational(const std::string& text) {
  std::string t = text;
  Scalar sign = 1;
  std::size_t i = 0;
  while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
  if (i < t.size() && (t[i] == '-' || t[i] == '+')) {
    if (t[i] == '-') sign = -1;
    ++i;
  }
  std::string body = t.substr(i);
  auto slash = body.find('/');
  auto digits = [&](const std::string& s, std::size_t at) {
    if (s.empty()) throw ParseError("expected integer", at);
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad rational '" + text + "'", at);
    return std::stol(s);
  };
  if (slash == std::string::npos) return sign * Scalar(digits(body, i));
  long q = digits(body.substr(slash + 1), i + slash + 1);
  if (q == 0) throw ParseError("zero denominator", i + slash);
  return sign * frac(digits(body.substr(0, slash), i), q);
}

Elem parse_elem(const std::string& text, const Ambient& amb) { return Parser(text, amb).parse(); }

Jet parse_jet(const std::string& text, const Ambient& amb) {
  Elem e = parse_elem(text, amb);
  for (const auto& [t, c] : e)
    if (t.slot >= 0) throw ParseError("D(...) term in a function expression", 0);
  return to_jet(amb, e);
}

std::string render_elem(const Ambient& amb, const Elem& e) {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // function terms first, then fields slot by slot
  std::map<int, Jet> by_slot;
  for (const auto& [t, c] : e) {
    auto it = by_slot.find(t.slot);
    if (it == by_slot.end()) it = by_slot.emplace(t.slot, Jet(amb)).first;
    it->second.add_term(t.mono, c);
  }
  for (const auto& [slot, jet] : by_slot) {
    std::string dname;
    if (slot >= 0) dname = "D(" + (slot < amb.m ? amb.even_name(slot) : amb.odd_name(slot - amb.m)) + ")";
    for (const auto& [mono, c] : jet.terms()) {
      Jet one = Jet::monomial(amb, mono, abs(c));
      std::string body = one.str();
      if (!dname.empty()) body = (body == "1") ? dname : body + "*" + dname;
      if (first) os << (sgn(c) < 0 ? "-" : "") << body;
      else os << (sgn(c) < 0 ? " - " : " + ") << body;
      first = false;
    }
  }
  return os.str();
}

}  // namespace superrigid
