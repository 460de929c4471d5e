#include "elc/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "elc/error.hpp"

namespace elc {

Rational::Rational(long n, long d) : v_(n, d) {
  if (d == 0) throw invariant_error("rational with zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw invariant_error("division by zero rational");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::string buf(text);
  buf.erase(std::remove_if(buf.begin(), buf.end(), [](unsigned char c) { return std::isspace(c); }),
            buf.end());
  if (buf.empty()) throw parse_error("empty rational literal");
  const auto ok_char = [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+';
  };
  if (!std::all_of(buf.begin(), buf.end(), ok_char)) throw parse_error("bad rational literal: " + buf);
  auto slash = buf.find('/');
  if (slash != std::string::npos && (slash == 0 || slash + 1 == buf.size()))
    throw parse_error("bad rational literal: " + buf);
  try {
    mpq_class v(buf);
    if (v.get_den() == 0) throw parse_error("zero denominator in: " + buf);
    v.canonicalize();
    return Rational(v);
  } catch (const std::invalid_argument&) {
    throw parse_error("bad rational literal: " + buf);
  }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Polynomial::Polynomial(int dim) : dim_(dim) {
  if (dim < 1 || dim > 9) throw invariant_error("polynomial dimension out of range");
}

Polynomial Polynomial::constant(int dim, const Rational& c) {
  Polynomial p(dim);
  if (!c.is_zero()) p.terms_.emplace(Expo(p.num_vars(), 0), c);
  return p;
}

Polynomial Polynomial::variable(int dim, int var) {
  Polynomial p(dim);
  if (var < 0 || var >= p.num_vars()) throw invariant_error("variable index out of range");
  Expo e(p.num_vars(), 0);
  e[var] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

Polynomial Polynomial::coordinate(int dim, int i) {
  if (i < 0 || i >= dim) throw invariant_error("coordinate index out of range");
  return variable(dim, i);
}

void Polynomial::insert(const Expo& e, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Polynomial::depends_on(int var) const {
  for (const auto& [e, c] : terms_)
    if (e[var] != 0) return true;
  return false;
}

int Polynomial::degree_in(int var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return d;
}

int Polynomial::coordinate_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int i = 0; i < dim_; ++i) s += static_cast<int>(e[i]);
    d = std::max(d, s);
  }
  return d;
}

Rational Polynomial::coefficient(const Expo& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Expo(num_vars(), 0)); }

Polynomial Polynomial::operator-() const {
  Polynomial r(dim_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (dim_ != o.dim_) throw invariant_error("polynomial dimension mismatch");
  for (const auto& [e, c] : o.terms_) insert(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (dim_ != o.dim_) throw invariant_error("polynomial dimension mismatch");
  for (const auto& [e, c] : o.terms_) insert(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.dim_ != b.dim_) throw invariant_error("polynomial dimension mismatch");
  Polynomial r(a.dim_);
  Polynomial::Expo e(a.num_vars());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.insert(e, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r(dim_);
  if (c.is_zero()) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(dim_, Rational(1));
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= num_vars()) throw invariant_error("unknown variable");
  Polynomial r(dim_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Expo d = e;
    d[var] -= 1;
    r.insert(d, c * Rational(static_cast<long>(e[var])));
  }
  return r;
}

Polynomial Polynomial::antiderivative(int var) const {
  if (var < 0 || var >= num_vars()) throw invariant_error("unknown variable");
  Polynomial r(dim_);
  for (const auto& [e, c] : terms_) {
    Expo d = e;
    d[var] += 1;
    r.insert(d, c / Rational(static_cast<long>(d[var])));
  }
  return r;
}

Polynomial Polynomial::substitute(int var, const Polynomial& value) const {
  if (var < 0 || var >= num_vars()) throw invariant_error("unknown variable");
  if (value.depends_on(var)) throw invariant_error("substitution value depends on the variable");
  Polynomial r(dim_);
  for (const auto& [e, c] : terms_) {
    Expo base = e;
    unsigned p = base[var];
    base[var] = 0;
    Polynomial term(dim_);
    term.terms_.emplace(base, c);
    r += term * value.pow(p);
  }
  return r;
}

Polynomial Polynomial::definite_integral(int var, const Polynomial& lower,
                                         const Polynomial& upper) const {
  if (lower.depends_on(var) || upper.depends_on(var))
    throw invariant_error("integration bounds depend on the integration variable");
  Polynomial f = antiderivative(var);
  return f.substitute(var, upper) - f.substitute(var, lower);
}

Polynomial Polynomial::scale_substitute(int factor) const {
  if (factor < dim_ || factor >= num_vars())
    throw invariant_error("scale factor must be an auxiliary variable");
  if (depends_on(factor)) throw invariant_error("name collision: polynomial already uses the factor");
  Polynomial r(dim_);
  for (const auto& [e, c] : terms_) {
    Expo d = e;
    unsigned total = 0;
    for (int i = 0; i < dim_; ++i) total += e[i];
    d[factor] += total;
    r.terms_.emplace(std::move(d), c);
  }
  return r;
}

Rational Polynomial::eval_origin() const {
  if (depends_on(var_t()) || depends_on(var_s()))
    throw invariant_error("auxiliary variables not integrated out");
  return constant_term();
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() { return text[pos]; }
};

} // namespace

Polynomial Polynomial::parse(int dim, std::string_view text) {
  Polynomial result(dim);
  Cursor c{text};
  if (c.done()) throw parse_error("empty polynomial");
  bool first = true;
  while (!c.done()) {
    int sign = 1;
    c.skip_ws();
    if (c.peek() == '+' || c.peek() == '-') {
      sign = c.peek() == '-' ? -1 : 1;
      ++c.pos;
    } else if (!first) {
      throw parse_error("expected '+' or '-' between terms");
    }
    c.skip_ws();
    if (c.pos >= c.text.size()) throw parse_error("dangling sign in polynomial");

    Rational coeff(1);
    bool have_any = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      std::size_t start = c.pos;
      while (c.pos < c.text.size() &&
             (std::isdigit(static_cast<unsigned char>(c.text[c.pos])) || c.text[c.pos] == '/'))
        ++c.pos;
      coeff = Rational::parse(c.text.substr(start, c.pos - start));
      have_any = true;
    }

    Expo expo(dim + 2, 0);
    while (true) {
      c.skip_ws();
      if (c.pos >= c.text.size() || c.peek() == '+' || c.peek() == '-') break;
      if (c.peek() != 'x') throw parse_error(std::string("unexpected character '") + c.peek() + "'");
      ++c.pos;
      if (c.pos >= c.text.size() || !std::isdigit(static_cast<unsigned char>(c.peek())))
        throw parse_error("variable index expected after 'x'");
      std::size_t start = c.pos;
      while (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos]))) ++c.pos;
      int vi = std::stoi(std::string(c.text.substr(start, c.pos - start)));
      if (vi < 1 || vi > dim) throw parse_error("variable x" + std::to_string(vi) + " out of range");
      unsigned e = 1;
      if (c.pos < c.text.size() && c.text[c.pos] == '^') {
        ++c.pos;
        if (c.pos >= c.text.size() || !std::isdigit(static_cast<unsigned char>(c.peek())))
          throw parse_error("exponent expected after '^'");
        start = c.pos;
        while (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos]))) ++c.pos;
        e = static_cast<unsigned>(std::stoul(std::string(c.text.substr(start, c.pos - start))));
      }
      expo[vi - 1] += e;
      have_any = true;
    }
    if (!have_any) throw parse_error("empty term in polynomial");
    result.insert(expo, sign < 0 ? -coeff : coeff);
    first = false;
  }
  return result;
}

std::string Polynomial::str() const {
  if (depends_on(var_t()) || depends_on(var_s()))
    throw invariant_error("cannot print a polynomial with live auxiliary variables");
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending exponent order puts leading monomials first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = c;
    if (first) {
      if (a.sign() < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    os << a.str();
    for (int i = 0; i < dim_; ++i) {
      if (e[i] == 0) continue;
      os << " x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
    first = false;
  }
  return os.str();
}

} // namespace elc
