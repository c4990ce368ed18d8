#pragma once

#include <stdexcept>
#include <string>

#include "superrigid/superjet.hpp"
#include "superrigid/vfield.hpp"

namespace superrigid {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t pos() const { return pos_; }

 private:
  std::size_t pos_;
};

// expr := term (('+'|'-') term)*
// term := rational? ('*'? atom)* ('*'? 'D(' gen ')')?
// atom := gen ('^' int)?
// gen  := x<i> | xi<j> | tau | p<i> | q<i> (p<i> = x_{2i-1}, q<i> = x_{2i}), or an ambient name
Jet parse_jet(const std::string& text, const Ambient& amb);
// terms with a D(gen) suffix become vector-field terms, the rest function terms
Elem parse_elem(const std::string& text, const Ambient& amb);
// inverse of parse_elem (fields written as coefficient*monomial*D(gen))
std::string render_elem(const Ambient& amb, const Elem& e);

// rational literal "p", "p/q" or "-p/q"
Scalar parse_rational(const std::string& text);

}  // namespace superrigid
