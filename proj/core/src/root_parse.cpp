#include "clifft/root_parse.hpp"

#include <cctype>
#include <stdexcept>

namespace clifft {
namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;
  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  char next() { return s[pos++]; }
  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) next();
  }
};

[[noreturn]] void fail(const Cursor& c, const std::string& msg) {
  throw std::invalid_argument("multivector expression '" + c.s + "': " + msg + " at position " +
                              std::to_string(c.pos));
}

bool digit(char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }

double parse_number(Cursor& c) {
  std::string digits;
  while (!c.done() && digit(c.peek())) digits.push_back(c.next());
  if (!c.done() && c.peek() == '.') {
    digits.push_back(c.next());
    while (!c.done() && digit(c.peek())) digits.push_back(c.next());
  }
  if (digits.empty() || digits == ".") fail(c, "expected a number");
  return std::stod(digits);
}

Multivector parse_blade(Cursor& c, int m) {
  c.next();  // consume 'e'
  Multivector blade = scalar_mv(m, 1.0);
  int count = 0;
  while (!c.done() && digit(c.peek())) {
    const int d = c.next() - '0';
    if (d < 1 || d > m)
      fail(c, "generator index " + std::to_string(d) + " outside e1..e" + std::to_string(m));
    blade = blade * basis_blade(m, 1u << (d - 1));
    ++count;
  }
  if (count == 0) fail(c, "expected generator indices after 'e'");
  return blade;
}

}  // namespace

Multivector parse_multivector(const std::string& expr, int m) {
  if (m < 1 || m > 9)
    throw std::invalid_argument("multivector expression: generator count must be in [1, 9]");
  Cursor c{expr};
  Multivector acc(m);
  bool first = true;
  while (true) {
    c.skip_space();
    if (c.done()) {
      if (first) fail(c, "empty expression");
      break;
    }
    double sign = 1.0;
    if (c.peek() == '+' || c.peek() == '-') {
      sign = (c.next() == '-') ? -1.0 : 1.0;
      c.skip_space();
    } else if (!first) {
      fail(c, "expected '+' or '-' between terms");
    }
    double coeff = 1.0;
    bool have_coeff = false;
    if (!c.done() && (digit(c.peek()) || c.peek() == '.')) {
      coeff = parse_number(c);
      have_coeff = true;
      c.skip_space();  // allow "2.5 e1"
    }
    Multivector blade = scalar_mv(m, 1.0);
    if (!c.done() && c.peek() == 'e') {
      blade = parse_blade(c, m);
    } else if (!have_coeff) {
      fail(c, "expected a coefficient or a blade");
    }
    acc = acc + blade * cplx(sign * coeff, 0.0);
    first = false;
  }
  return acc;
}

RootOfMinusOne parse_root(const std::string& expr, int m) {
  return RootOfMinusOne(parse_multivector(expr, m));
}

std::vector<RootOfMinusOne> parse_root_list(const std::string& list, int m) {
  std::vector<RootOfMinusOne> roots;
  size_t start = 0;
  while (true) {
    const size_t comma = list.find(',', start);
    const std::string item = list.substr(start, comma == std::string::npos ? comma : comma - start);
    roots.push_back(parse_root(item, m));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return roots;
}

}  // namespace clifft
