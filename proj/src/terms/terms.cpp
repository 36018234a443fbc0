// Copyright 2026 The pcskit Authors
// SPDX-License-Identifier: Apache-2.0

#include "pcskit/terms.hpp"

#include <algorithm>
#include <cctype>

#include "pcskit/error.hpp"

namespace pcs {

  Term Term::variable(char name) {
    if (name < 'a' || name > 'z') {
      throw Error(ErrorCode::InvalidArgument,
                  std::string("variable must be a lowercase letter, got '")
                      + name + "'");
    }
    Term t;
    t.kind_ = Kind::variable;
    t.name_ = name;
    return t;
  }

  Term Term::concat(std::vector<Term> factors) {
    if (factors.empty()) {
      throw Error(ErrorCode::EmptyTerm, "empty concatenation");
    }
    std::vector<Term> flat;
    for (auto& f : factors) {
      if (f.kind_ == Kind::concat) {
        for (auto& g : f.children_) {
          flat.push_back(std::move(g));
        }
      } else {
        flat.push_back(std::move(f));
      }
    }
    if (flat.size() == 1) {
      return std::move(flat.front());
    }
    Term t;
    t.kind_     = Kind::concat;
    t.children_ = std::move(flat);
    return t;
  }

  Term Term::omega(Term base, long offset) {
    Term t;
    t.kind_     = Kind::omega_power;
    t.exponent_ = offset;
    t.children_.push_back(std::move(base));
    return t;
  }

  Term Term::power(Term base, long exponent) {
    if (exponent < 2) {
      throw Error(ErrorCode::InvalidArgument, "integer exponent must be >= 2");
    }
    Term t;
    t.kind_     = Kind::int_power;
    t.exponent_ = exponent;
    t.children_.push_back(std::move(base));
    return t;
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {

    class Parser {
     public:
      explicit Parser(std::string_view text) : text_(text) {}

      Term parse_whole_term() {
        Term t = parse_term();
        skip_ws();
        if (pos_ != text_.size()) {
          fail("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
        }
        return t;
      }

      Pseudoidentity parse_whole_identity() {
        Term lhs = parse_term();
        skip_ws();
        if (pos_ == text_.size()) {
          fail("expected '=' in pseudoidentity", pos_);
        }
        if (text_[pos_] != '=') {
          fail("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
        }
        ++pos_;
        Term rhs = parse_term();
        skip_ws();
        if (pos_ != text_.size()) {
          fail("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
        }
        return {std::move(lhs), std::move(rhs), {}};
      }

     private:
      [[noreturn]] void fail(std::string const& what, std::size_t at) const {
        throw Error(ErrorCode::SyntaxError,
                    "syntax error at offset " + std::to_string(at) + ": " + what,
                    static_cast<long>(at));
      }

      void skip_ws() {
        while (pos_ < text_.size()
               && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
      }

      bool at_factor_start() {
        skip_ws();
        if (pos_ >= text_.size()) {
          return false;
        }
        char c = text_[pos_];
        return c == '(' || (c >= 'a' && c <= 'z');
      }

      Term parse_term() {
        skip_ws();
        std::size_t       start = pos_;
        std::vector<Term> factors;
        while (at_factor_start()) {
          factors.push_back(parse_factor());
        }
        if (factors.empty()) {
          skip_ws();
          if (pos_ < text_.size() && text_[pos_] != ')' && text_[pos_] != '=') {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
          }
          throw Error(ErrorCode::EmptyTerm,
                      "empty term at offset " + std::to_string(start),
                      static_cast<long>(start));
        }
        return Term::concat(std::move(factors));
      }

      Term parse_factor() {
        skip_ws();
        Term t = parse_atom();
        while (true) {
          skip_ws();
          if (pos_ >= text_.size() || text_[pos_] != '^') {
            break;
          }
          t = parse_exponent(std::move(t));
        }
        return t;
      }

      Term parse_atom() {
        char c = text_[pos_];
        if (c >= 'a' && c <= 'z') {
          ++pos_;
          return Term::variable(c);
        }
        std::size_t open = pos_++;
        Term        t    = parse_term();
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != ')') {
          fail("unbalanced '(' opened at offset " + std::to_string(open),
               pos_ < text_.size() ? pos_ : text_.size());
        }
        ++pos_;
        return t;
      }

      long parse_integer() {
        std::size_t start = pos_;
        long        value = 0;
        while (pos_ < text_.size()
               && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          value = value * 10 + (text_[pos_] - '0');
          if (value > 1'000'000'000L) {
            fail("exponent too large", start);
          }
          ++pos_;
        }
        if (pos_ == start) {
          fail("expected an integer", pos_);
        }
        return value;
      }

      Term parse_exponent(Term base) {
        std::size_t caret = pos_++;
        skip_ws();
        if (pos_ >= text_.size()) {
          fail("dangling exponent", caret);
        }
        char c = text_[pos_];
        if (c == 'w') {
          ++pos_;
          return Term::omega(std::move(base), 0);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
          std::size_t at = pos_;
          long        k  = parse_integer();
          if (k < 2) {
            fail("integer exponent must be >= 2", at);
          }
          return Term::power(std::move(base), k);
        }
        if (c == '(') {
          ++pos_;
          skip_ws();
          if (pos_ >= text_.size() || text_[pos_] != 'w') {
            fail("expected 'w' in exponent", pos_);
          }
          ++pos_;
          skip_ws();
          if (pos_ >= text_.size() || (text_[pos_] != '+' && text_[pos_] != '-')) {
            fail("expected '+' or '-' in exponent", pos_);
          }
          long sign = text_[pos_] == '+' ? 1 : -1;
          ++pos_;
          skip_ws();
          long k = parse_integer();
          skip_ws();
          if (pos_ >= text_.size() || text_[pos_] != ')') {
            fail("expected ')' closing exponent", pos_);
          }
          ++pos_;
          return Term::omega(std::move(base), sign * k);
        }
        fail("dangling exponent", caret);
      }

      std::string_view text_;
      std::size_t      pos_ = 0;
    };

  }  // namespace

  Term parse_term(std::string_view text) {
    return Parser(text).parse_whole_term();
  }

  Pseudoidentity parse_identity(std::string_view text) {
    return Parser(text).parse_whole_identity();
  }

  ////////////////////////////////////////////////////////////////////////
  // Formatting
  ////////////////////////////////////////////////////////////////////////

  std::string format(Term const& t) {
    switch (t.kind()) {
      case Term::Kind::variable: return std::string(1, t.name());
      case Term::Kind::concat: {
        std::string out;
        bool        after_power = false;
        for (auto const& f : t.children()) {
          std::string piece = format(f);
          if (after_power && std::isalpha(static_cast<unsigned char>(piece[0]))) {
            out += ' ';
          }
          out += piece;
          after_power = f.kind() == Term::Kind::omega_power
                        || f.kind() == Term::Kind::int_power;
        }
        return out;
      }
      case Term::Kind::omega_power:
      case Term::Kind::int_power: {
        std::string base = format(t.base());
        if (t.base().kind() != Term::Kind::variable) {
          base = "(" + base + ")";
        }
        if (t.kind() == Term::Kind::int_power) {
          return base + "^" + std::to_string(t.exponent());
        }
        if (t.exponent() == 0) {
          return base + "^w";
        }
        return base + (t.exponent() > 0 ? "^(w+" : "^(w-")
               + std::to_string(std::labs(t.exponent())) + ")";
      }
    }
    return {};
  }

  std::string format(Pseudoidentity const& id) {
    return format(id.lhs) + " = " + format(id.rhs);
  }

  ////////////////////////////////////////////////////////////////////////
  // Variables and substitution
  ////////////////////////////////////////////////////////////////////////

  namespace {

    void collect(Term const& t, std::vector<char>& out) {
      if (t.kind() == Term::Kind::variable) {
        if (std::find(out.begin(), out.end(), t.name()) == out.end()) {
          out.push_back(t.name());
        }
        return;
      }
      for (auto const& c : t.children()) {
        collect(c, out);
      }
    }

  }  // namespace

  std::vector<char> variables(Term const& t) {
    std::vector<char> out;
    collect(t, out);
    return out;
  }

  std::vector<char> variables(Pseudoidentity const& id) {
    std::vector<char> out;
    collect(id.lhs, out);
    collect(id.rhs, out);
    return out;
  }

  Term substitute(Term const& t, std::array<std::optional<Term>, 26> const& sub) {
    switch (t.kind()) {
      case Term::Kind::variable: {
        auto const& s = sub[t.name() - 'a'];
        return s ? *s : t;
      }
      case Term::Kind::concat: {
        std::vector<Term> factors;
        for (auto const& c : t.children()) {
          factors.push_back(substitute(c, sub));
        }
        return Term::concat(std::move(factors));
      }
      case Term::Kind::omega_power:
        return Term::omega(substitute(t.base(), sub), t.exponent());
      case Term::Kind::int_power:
        return Term::power(substitute(t.base(), sub), t.exponent());
    }
    return t;
  }

  Pseudoidentity canonical_renaming(Pseudoidentity const& id) {
    std::array<std::optional<Term>, 26> sub;
    auto                                vars = variables(id);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      sub[vars[i] - 'a'] = Term::variable(static_cast<char>('a' + i));
    }
    return {substitute(id.lhs, sub), substitute(id.rhs, sub), id.name};
  }

  ////////////////////////////////////////////////////////////////////////
  // Evaluation
  ////////////////////////////////////////////////////////////////////////

  Assignment empty_assignment() {
    Assignment a;
    a.fill(unbound);
    return a;
  }

  Element evaluate(Semigroup const& s, Term const& t, Assignment const& alpha) {
    switch (t.kind()) {
      case Term::Kind::variable: {
        Element v = alpha[t.name() - 'a'];
        if (v == unbound) {
          throw Error(ErrorCode::UnboundVariable,
                      std::string("variable '") + t.name() + "' is unbound");
        }
        if (v >= s.order()) {
          throw Error(ErrorCode::IndexOutOfRange,
                      std::string("value of '") + t.name() + "' out of range");
        }
        return v;
      }
      case Term::Kind::concat: {
        auto const& c   = t.children();
        Element     acc = evaluate(s, c[0], alpha);
        for (std::size_t i = 1; i < c.size(); ++i) {
          acc = s.product(acc, evaluate(s, c[i], alpha));
        }
        return acc;
      }
      case Term::Kind::omega_power:
        return omega_power(s, evaluate(s, t.base(), alpha), t.exponent());
      case Term::Kind::int_power: {
        Element b   = evaluate(s, t.base(), alpha);
        Element acc = b;
        for (long k = 1; k < t.exponent(); ++k) {
          acc = s.product(acc, b);
        }
        return acc;
      }
    }
    return 0;
  }

  CheckResult check(Semigroup const& s, Pseudoidentity const& id) {
    auto const  vars = variables(id);
    std::size_t n    = s.order();
    Assignment  alpha = empty_assignment();
    for (char v : vars) {
      alpha[v - 'a'] = 0;
    }
    CheckResult result;
    while (true) {
      Element lhs = evaluate(s, id.lhs, alpha);
      Element rhs = evaluate(s, id.rhs, alpha);
      if (lhs != rhs) {
        Counterexample ce;
        for (char v : vars) {
          ce.assignment.emplace_back(v, alpha[v - 'a']);
        }
        ce.lhs_value            = lhs;
        ce.rhs_value            = rhs;
        result.satisfied        = false;
        result.counterexample   = std::move(ce);
        return result;
      }
      // Odometer; the last variable moves fastest.
      std::size_t k = vars.size();
      while (k > 0) {
        Element& slot = alpha[vars[k - 1] - 'a'];
        if (++slot < n) {
          break;
        }
        slot = 0;
        --k;
      }
      if (k == 0) {
        return result;
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Bases
  ////////////////////////////////////////////////////////////////////////

  std::vector<Pseudoidentity> transform_star_rz(Pseudoidentity const& id) {
    auto vars = variables(id);
    char fresh = 0;
    for (char c = 'a'; c <= 'z'; ++c) {
      if (std::find(vars.begin(), vars.end(), c) == vars.end()) {
        fresh = c;
        break;
      }
    }
    if (fresh == 0) {
      throw Error(ErrorCode::FreshVariableExhausted,
                  "all 26 variables are in use; no fresh variable left");
    }
    Term const                  x = Term::variable(fresh);
    std::vector<Pseudoidentity> out;
    std::size_t const           n = vars.size();
    for (std::size_t empty = 0; empty < (std::size_t{1} << n); ++empty) {
      std::array<std::optional<Term>, 26> sub;
      for (std::size_t i = 0; i < n; ++i) {
        if (empty >> i & 1U) {
          sub[vars[i] - 'a'] = x;
        } else {
          sub[vars[i] - 'a'] = Term::concat({Term::variable(vars[i]), x});
        }
      }
      Pseudoidentity t{Term::concat({x, substitute(id.lhs, sub)}),
                       Term::concat({x, substitute(id.rhs, sub)}),
                       id.name.empty() ? std::string()
                                       : id.name + "*rz#" + std::to_string(empty)};
      out.push_back(std::move(t));
    }
    return out;
  }

  namespace {

    struct BuiltinEntry {
      std::string_view name;
      std::string_view text;
    };

    constexpr BuiltinEntry builtin_table[] = {
        {"bg", "(x^w y^w)^w = (y^w x^w)^w"},
        {"er", "(x^w y^w)^w = (x^w y^w)^w x^w"},
        {"el", "(y^w x^w)^w = x^w (y^w x^w)^w"},
        {"pcs-i", "((sxt)^w(syt)^w)^w = ((syt)^w(sxt)^w)^w"},
        {"pcs-i-prime", "((st)^w(syt)^w)^w = ((syt)^w(st)^w)^w"},
        {"pcs-ii-1", "((ax)^w(bx)^w)^w = ((ax)^w(bx)^w)^w(ax)^w"},
        {"pcs-ii-2", "((xb)^w(xa)^w)^w = (xa)^w((xb)^w(xa)^w)^w"},
        {"pcs-iii", "x((ax)^w(bx)^w)^w = x((bx)^w(ax)^w)^w"},
        {"star", "x((yx)^w(zx)^w)^w = x((zx)^w(yx)^w)^w"},
    };

  }  // namespace

  std::vector<std::string> builtin_names() {
    std::vector<std::string> out;
    for (auto const& e : builtin_table) {
      out.emplace_back(e.name);
    }
    return out;
  }

  Pseudoidentity builtin(std::string_view name) {
    for (auto const& e : builtin_table) {
      if (e.name == name) {
        Pseudoidentity id = parse_identity(e.text);
        id.name           = std::string(e.name);
        return id;
      }
    }
    throw Error(ErrorCode::UnknownName,
                "unknown builtin identity '" + std::string(name) + "'");
  }

}  // namespace pcs
