// Copyright 2026 The robsel Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "robsel/lp_format.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace robsel {

namespace {

// Scale factor turning every coefficient of the row into an integer.
mpz_class denominator_lcm(const LpRow& row) {
  mpz_class l = 1;
  auto fold = [&](const Rational& r) {
    mpz_class d = r.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  };
  for (const auto& c : row.coeffs) fold(c);
  fold(row.rhs);
  return l;
}

bool row_has_finite_decimals(const LpRow& row) {
  for (const auto& c : row.coeffs)
    if (!c.has_finite_decimal()) return false;
  return row.rhs.has_finite_decimal();
}

void append_term(std::string& out, const Rational& coeff, const std::string& name, bool first) {
  const bool neg = coeff.sign() < 0;
  Rational mag = neg ? -coeff : coeff;
  if (first)
    out += neg ? "- " : "";
  else
    out += neg ? " - " : " + ";
  out += mag.to_decimal_string();
  out += ' ';
  out += name;
}

const char* relation_text(Relation rel) {
  switch (rel) {
    case Relation::LessEqual:
      return "<=";
    case Relation::GreaterEqual:
      return ">=";
    default:
      return "=";
  }
}

}  // namespace

std::string write_lp_text(const MipModel& m) {
  const LpModel& lp = m.lp;
  std::string out;
  out += "\\ robsel exported model\n";
  out += "Minimize\n obj:";
  bool first = true;
  for (int v = 0; v < lp.num_vars(); ++v) {
    if (lp.objective[v].is_zero()) continue;
    if (!lp.objective[v].has_finite_decimal())
      throw std::domain_error("write_lp_text: objective coefficient has no finite decimal form");
    out += ' ';
    append_term(out, lp.objective[v], lp.names[v], first);
    first = false;
  }
  out += "\nSubject To\n";
  for (int r = 0; r < lp.num_rows(); ++r) {
    LpRow row = lp.rows[r];
    if (!row_has_finite_decimals(row)) {
      const Rational scale{mpq_class(denominator_lcm(row))};
      for (auto& c : row.coeffs) c *= scale;
      row.rhs *= scale;
    }
    out += " c" + std::to_string(r + 1) + ":";
    bool first_term = true;
    for (int v = 0; v < lp.num_vars(); ++v) {
      if (row.coeffs[v].is_zero()) continue;
      out += ' ';
      append_term(out, row.coeffs[v], lp.names[v], first_term);
      first_term = false;
    }
    out += ' ';
    out += relation_text(row.rel);
    out += ' ';
    out += row.rhs.to_decimal_string();
    out += '\n';
  }
  out += "Bounds\n";
  std::vector<char> is_binary(lp.num_vars(), 0);
  for (int v : m.binaries) is_binary[v] = 1;
  for (int v = 0; v < lp.num_vars(); ++v) {
    if (is_binary[v]) continue;
    const auto& lo = lp.lower[v];
    const auto& up = lp.upper[v];
    if (lo && lo->is_zero() && !up) continue;  // LP format default
    if (!lo && !up) {
      out += ' ' + lp.names[v] + " free\n";
      continue;
    }
    out += ' ';
    if (lo) out += lo->to_decimal_string() + " <= ";
    out += lp.names[v];
    if (up) out += " <= " + up->to_decimal_string();
    out += '\n';
  }
  out += "Binary\n";
  for (int v : m.binaries) out += ' ' + lp.names[v];
  out += "\nEnd\n";
  return out;
}

int GenericMip::var_index(const std::string& name) const {
  for (int v = 0; v < lp.num_vars(); ++v)
    if (lp.names[v] == name) return v;
  return -1;
}

namespace {

struct Token {
  enum Kind { Word, Number, Sign, RelOp, Colon } kind;
  std::string text;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\\') {  // comment to end of line
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '+' || c == '-') {
      out.push_back({Token::Sign, std::string(1, c)});
      ++i;
      continue;
    }
    if (c == ':') {
      out.push_back({Token::Colon, ":"});
      ++i;
      continue;
    }
    if (c == '<' || c == '>' || c == '=') {
      std::string op(1, c);
      if (i + 1 < text.size() && text[i + 1] == '=') {
        op += '=';
        ++i;
      }
      out.push_back({Token::RelOp, op});
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      size_t j = i;
      while (j < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '.'))
        ++j;
      out.push_back({Token::Number, text.substr(i, j - i)});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                 text[j] == '_'))
        ++j;
      out.push_back({Token::Word, text.substr(i, j - i)});
      i = j;
      continue;
    }
    throw std::invalid_argument(std::string("parse_lp_text: unexpected character '") + c + "'");
  }
  return out;
}

bool word_is(const Token& t, const char* w) {
  if (t.kind != Token::Word) return false;
  if (t.text.size() != std::string(w).size()) return false;
  for (size_t i = 0; i < t.text.size(); ++i)
    if (std::tolower(static_cast<unsigned char>(t.text[i])) != w[i]) return false;
  return true;
}

}  // namespace

GenericMip parse_lp_text(const std::string& text) {
  const auto tokens = tokenize(text);
  GenericMip mip;
  std::map<std::string, int> vars;
  auto var_of = [&](const std::string& name) {
    auto it = vars.find(name);
    if (it != vars.end()) return it->second;
    const int v = mip.lp.add_var(name, Rational(0), std::nullopt, Rational(0));
    vars.emplace(name, v);
    return v;
  };

  size_t i = 0;
  auto at_section = [&](size_t j) {
    if (j >= tokens.size()) return true;
    const Token& t = tokens[j];
    return word_is(t, "minimize") || word_is(t, "maximize") ||
           (word_is(t, "subject") && j + 1 < tokens.size() && word_is(tokens[j + 1], "to")) ||
           word_is(t, "bounds") || word_is(t, "binary") || word_is(t, "end");
  };

  // Linear expression up to a relation operator or section keyword. Returns
  // accumulated terms per variable.
  auto parse_expr = [&](std::map<int, Rational>& terms) {
    int sign = 1;
    bool have_coeff = false;
    Rational coeff;
    while (i < tokens.size() && !at_section(i)) {
      const Token& t = tokens[i];
      if (t.kind == Token::RelOp) break;
      if (t.kind == Token::Sign) {
        sign = t.text == "-" ? -sign : sign;
        ++i;
        continue;
      }
      if (t.kind == Token::Number) {
        coeff = Rational::parse(t.text);
        have_coeff = true;
        ++i;
        continue;
      }
      if (t.kind == Token::Word) {
        // row label "name:" handled by the caller; here a bare word is a var
        Rational c = have_coeff ? coeff : Rational(1);
        if (sign < 0) c = -c;
        terms[var_of(t.text)] += c;
        sign = 1;
        have_coeff = false;
        ++i;
        continue;
      }
      throw std::invalid_argument("parse_lp_text: malformed expression");
    }
    if (have_coeff) throw std::invalid_argument("parse_lp_text: dangling coefficient");
  };

  while (i < tokens.size()) {
    if (word_is(tokens[i], "end")) break;
    if (word_is(tokens[i], "minimize") || word_is(tokens[i], "maximize")) {
      mip.lp.sense = word_is(tokens[i], "maximize") ? Sense::Maximize : Sense::Minimize;
      ++i;
      if (i + 1 < tokens.size() && tokens[i].kind == Token::Word &&
          tokens[i + 1].kind == Token::Colon)
        i += 2;
      std::map<int, Rational> terms;
      parse_expr(terms);
      for (auto& [v, c] : terms) mip.lp.objective[v] = c;
      continue;
    }
    if (word_is(tokens[i], "subject")) {
      i += 2;
      while (i < tokens.size() && !at_section(i)) {
        if (tokens[i].kind == Token::Word && i + 1 < tokens.size() &&
            tokens[i + 1].kind == Token::Colon)
          i += 2;  // row label
        std::map<int, Rational> terms;
        parse_expr(terms);
        if (i >= tokens.size() || tokens[i].kind != Token::RelOp)
          throw std::invalid_argument("parse_lp_text: constraint lacks a relation");
        const std::string op = tokens[i].text;
        ++i;
        int sign = 1;
        while (i < tokens.size() && tokens[i].kind == Token::Sign) {
          if (tokens[i].text == "-") sign = -sign;
          ++i;
        }
        if (i >= tokens.size() || tokens[i].kind != Token::Number)
          throw std::invalid_argument("parse_lp_text: constraint lacks a right-hand side");
        Rational rhs = Rational::parse(tokens[i].text);
        if (sign < 0) rhs = -rhs;
        ++i;
        Relation rel = op == "<=" ? Relation::LessEqual
                                  : op == ">=" ? Relation::GreaterEqual : Relation::Equal;
        std::vector<std::pair<int, Rational>> sparse(terms.begin(), terms.end());
        mip.lp.add_row_sparse(sparse, rel, rhs);
      }
      continue;
    }
    if (word_is(tokens[i], "bounds")) {
      ++i;
      while (i < tokens.size() && !at_section(i)) {
        // forms: "v free"  |  "lo <= v <= hi"  |  "v <= hi"  |  "lo <= v"
        std::optional<Rational> lo, hi;
        std::string name;
        auto read_number = [&]() {
          int sign = 1;
          while (tokens[i].kind == Token::Sign) {
            if (tokens[i].text == "-") sign = -sign;
            ++i;
          }
          Rational v = Rational::parse(tokens[i].text);
          ++i;
          return sign < 0 ? -v : v;
        };
        if (tokens[i].kind == Token::Number || tokens[i].kind == Token::Sign) {
          lo = read_number();
          if (tokens[i].kind != Token::RelOp) throw std::invalid_argument("bad bound line");
          ++i;
        }
        if (tokens[i].kind != Token::Word) throw std::invalid_argument("bad bound line");
        name = tokens[i].text;
        ++i;
        if (i < tokens.size() && word_is(tokens[i], "free")) {
          ++i;
          const int v = var_of(name);
          mip.lp.lower[v] = std::nullopt;
          mip.lp.upper[v] = std::nullopt;
          continue;
        }
        if (i < tokens.size() && tokens[i].kind == Token::RelOp) {
          const std::string op = tokens[i].text;
          ++i;
          Rational bound = read_number();
          if (op == "<=")
            hi = bound;
          else
            lo = bound;
        }
        const int v = var_of(name);
        if (lo) mip.lp.lower[v] = *lo;
        if (hi) mip.lp.upper[v] = *hi;
      }
      continue;
    }
    if (word_is(tokens[i], "binary")) {
      ++i;
      while (i < tokens.size() && !at_section(i)) {
        if (tokens[i].kind != Token::Word)
          throw std::invalid_argument("parse_lp_text: malformed binary section");
        const int v = var_of(tokens[i].text);
        mip.binaries.push_back(v);
        mip.lp.lower[v] = Rational(0);
        mip.lp.upper[v] = Rational(1);
        ++i;
      }
      continue;
    }
    throw std::invalid_argument("parse_lp_text: unexpected token '" + tokens[i].text + "'");
  }
  return mip;
}

Rational evaluate_fixed_lp(const GenericMip& mip, const SelectionSolution& x, int n) {
  LpModel lp = mip.lp;
  const auto in_x = x.indicator(n);
  for (int i = 0; i < n; ++i) {
    const int v = mip.var_index("x_" + std::to_string(i + 1));
    if (v < 0) throw std::invalid_argument("evaluate_fixed_lp: missing first-stage variable");
    const Rational val = in_x[i] ? Rational(1) : Rational(0);
    lp.lower[v] = val;
    lp.upper[v] = val;
  }
  LpSolution sol = solve_lp(lp);
  if (!sol.optimal()) throw std::invalid_argument("evaluate_fixed_lp: model not optimal");
  return sol.objective;
}

}  // namespace robsel
