#include "bck/terms.hpp"

#include <algorithm>
#include <cctype>

namespace bck {

Term Term::variable(std::string name) {
  return Term(std::make_shared<const Node>(
      Node{Kind::variable, std::move(name), nullptr, nullptr}));
}

Term Term::zero() {
  static const auto node =
      std::make_shared<const Node>(Node{Kind::zero, {}, nullptr, nullptr});
  return Term(node);
}

Term Term::difference(Term left, Term right) {
  return Term(std::make_shared<const Node>(Node{
      Kind::difference, {}, std::move(left.node_), std::move(right.node_)}));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::variable: return a.name() == b.name();
    case Term::Kind::zero: return true;
    case Term::Kind::difference:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

namespace {

void collect_variables(const Term& t, std::vector<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::variable:
      if (std::find(out.begin(), out.end(), t.name()) == out.end())
        out.push_back(t.name());
      break;
    case Term::Kind::zero: break;
    case Term::Kind::difference:
      collect_variables(t.left(), out);
      collect_variables(t.right(), out);
      break;
  }
}

}  // namespace

std::vector<std::string> Term::variables() const {
  std::vector<std::string> out;
  collect_variables(*this, out);
  return out;
}

ParseError::ParseError(std::string message, std::size_t position)
    : std::runtime_error("parse error at position " +
                         std::to_string(position) + ": " + message),
      position_(position) {}

namespace {

enum class Token { identifier, zero, minus, lparen, rparen, equals, leq,
                   conj, implies, end };

class Parser {
 public:
  explicit Parser(std::string_view input) : input_(input) { advance(); }

  Term term() {
    Term result = primary();
    while (token_ == Token::minus) {
      advance();
      result = result - primary();
    }
    return result;
  }

  Identity atom() {
    Term lhs = term();
    if (token_ == Token::equals) {
      advance();
      return Identity{std::move(lhs), term()};
    }
    if (token_ == Token::leq) {
      advance();
      return Identity{lhs - term(), Term::zero()};
    }
    fail("expected '=' or '<='");
  }

  Sentence sentence() {
    std::vector<Identity> premises{atom()};
    while (token_ == Token::conj) {
      advance();
      premises.push_back(atom());
    }
    if (token_ == Token::implies) {
      advance();
      Identity conclusion = atom();
      return QuasiIdentity{std::move(premises), std::move(conclusion)};
    }
    if (premises.size() > 1) fail("expected '=>' after premises");
    return std::move(premises.front());
  }

  bool at_end() const { return token_ == Token::end; }
  bool at_relation() const {
    return token_ == Token::equals || token_ == Token::leq;
  }
  void expect_end() {
    if (token_ != Token::end) fail("unexpected trailing input");
  }

 private:
  Term primary() {
    switch (token_) {
      case Token::identifier: {
        auto name = std::string(text_);
        advance();
        return Term::variable(std::move(name));
      }
      case Token::zero:
        advance();
        return Term::zero();
      case Token::lparen: {
        advance();
        Term inner = term();
        if (token_ != Token::rparen) fail("expected ')'");
        advance();
        return inner;
      }
      default:
        fail("expected a variable, '0' or '('");
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, start_);
  }

  void advance() {
    while (pos_ < input_.size() &&
           std::isspace(static_cast<unsigned char>(input_[pos_])))
      ++pos_;
    start_ = pos_;
    if (pos_ == input_.size()) {
      token_ = Token::end;
      return;
    }
    const char c = input_[pos_];
    auto rest = input_.substr(pos_);
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      auto end = pos_ + 1;
      while (end < input_.size() &&
             (std::isalnum(static_cast<unsigned char>(input_[end])) ||
              input_[end] == '_'))
        ++end;
      text_ = input_.substr(pos_, end - pos_);
      pos_ = end;
      token_ = Token::identifier;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      if (c != '0' || (pos_ + 1 < input_.size() &&
                       std::isalnum(static_cast<unsigned char>(input_[pos_ + 1]))))
        fail("the only constant is 0");
      ++pos_;
      token_ = Token::zero;
      return;
    }
    if (rest.starts_with("−")) {
      pos_ += 3;
      token_ = Token::minus;
      return;
    }
    if (rest.starts_with("<=")) {
      pos_ += 2;
      token_ = Token::leq;
      return;
    }
    if (rest.starts_with("=>")) {
      pos_ += 2;
      token_ = Token::implies;
      return;
    }
    ++pos_;
    switch (c) {
      case '-': token_ = Token::minus; return;
      case '(': token_ = Token::lparen; return;
      case ')': token_ = Token::rparen; return;
      case '=': token_ = Token::equals; return;
      case '&': token_ = Token::conj; return;
      default: fail(std::string("unexpected character '") + c + "'");
    }
  }

  std::string_view input_;
  std::size_t pos_ = 0;
  std::size_t start_ = 0;
  Token token_ = Token::end;
  std::string_view text_;
};

}  // namespace

Term parse_term(std::string_view input) {
  Parser parser(input);
  Term t = parser.term();
  parser.expect_end();
  return t;
}

Sentence parse_sentence(std::string_view input) {
  Parser parser(input);
  Sentence s = parser.sentence();
  parser.expect_end();
  return s;
}

std::variant<Term, Sentence> parse(std::string_view input) {
  Parser parser(input);
  Term first = parser.term();
  if (parser.at_end()) return first;
  if (!parser.at_relation()) parser.expect_end();
  // Re-parse from the start; terms are cheap.
  return parse_sentence(input);
}

std::string to_string(const Term& term) {
  switch (term.kind()) {
    case Term::Kind::variable: return term.name();
    case Term::Kind::zero: return "0";
    case Term::Kind::difference: {
      auto rhs = term.right();
      auto right = to_string(rhs);
      if (rhs.kind() == Term::Kind::difference) right = "(" + right + ")";
      return to_string(term.left()) + "-" + right;
    }
  }
  return {};
}

std::string to_string(const Identity& identity) {
  return to_string(identity.lhs) + " = " + to_string(identity.rhs);
}

std::string to_string(const Sentence& sentence) {
  if (const auto* id = std::get_if<Identity>(&sentence)) return to_string(*id);
  const auto& q = std::get<QuasiIdentity>(sentence);
  std::string out;
  for (std::size_t i = 0; i < q.premises.size(); ++i)
    out += (i ? " & " : "") + to_string(q.premises[i]);
  return out + " => " + to_string(q.conclusion);
}

std::vector<std::string> variables(const Sentence& sentence) {
  std::vector<std::string> out;
  auto add = [&](const Identity& id) {
    collect_variables(id.lhs, out);
    collect_variables(id.rhs, out);
  };
  std::visit(
      [&](const auto& s) {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, Identity>) {
          add(s);
        } else {
          for (const auto& p : s.premises) add(p);
          add(s.conclusion);
        }
      },
      sentence);
  std::sort(out.begin(), out.end());
  return out;
}

Element evaluate(const Term& term, const Algebra& algebra,
                 const Environment& env) {
  switch (term.kind()) {
    case Term::Kind::variable: {
      auto it = env.find(term.name());
      if (it == env.end()) throw UnboundVariable(term.name());
      if (it->second >= algebra.size())
        throw RangeError("variable '" + term.name() + "' bound to " +
                         std::to_string(it->second) + ", outside the carrier");
      return it->second;
    }
    case Term::Kind::zero: return 0;
    case Term::Kind::difference:
      return algebra(evaluate(term.left(), algebra, env),
                     evaluate(term.right(), algebra, env));
  }
  return 0;
}

namespace {

// Postfix code: slot index for a variable, or one of the opcodes below.
constexpr int op_zero = -1;
constexpr int op_sub = -2;

void compile(const Term& t, const std::vector<std::string>& slots,
             std::vector<int>& code) {
  switch (t.kind()) {
    case Term::Kind::variable:
      code.push_back(static_cast<int>(
          std::find(slots.begin(), slots.end(), t.name()) - slots.begin()));
      break;
    case Term::Kind::zero: code.push_back(op_zero); break;
    case Term::Kind::difference:
      compile(t.left(), slots, code);
      compile(t.right(), slots, code);
      code.push_back(op_sub);
      break;
  }
}

struct CompiledIdentity {
  std::vector<int> lhs, rhs;
};

CompiledIdentity compile(const Identity& id,
                         const std::vector<std::string>& slots) {
  CompiledIdentity out;
  compile(id.lhs, slots, out.lhs);
  compile(id.rhs, slots, out.rhs);
  return out;
}

Element run(const std::vector<int>& code, const Algebra& algebra,
            const std::vector<Element>& values, std::vector<Element>& stack) {
  stack.clear();
  for (int op : code) {
    if (op >= 0) {
      stack.push_back(values[op]);
    } else if (op == op_zero) {
      stack.push_back(0);
    } else {
      const Element b = stack.back();
      stack.pop_back();
      stack.back() = algebra(stack.back(), b);
    }
  }
  return stack.back();
}

}  // namespace

std::optional<Assignment> find_counterexample(const Sentence& sentence,
                                              const Algebra& algebra) {
  const auto slots = variables(sentence);
  std::vector<CompiledIdentity> premises;
  CompiledIdentity conclusion;
  if (const auto* id = std::get_if<Identity>(&sentence)) {
    conclusion = compile(*id, slots);
  } else {
    const auto& q = std::get<QuasiIdentity>(sentence);
    for (const auto& p : q.premises) premises.push_back(compile(p, slots));
    conclusion = compile(q.conclusion, slots);
  }

  const auto n = algebra.size();
  std::vector<Element> values(slots.size(), 0);
  std::vector<Element> stack;
  auto satisfied = [&](const CompiledIdentity& c) {
    return run(c.lhs, algebra, values, stack) ==
           run(c.rhs, algebra, values, stack);
  };
  while (true) {
    bool premises_hold = std::all_of(premises.begin(), premises.end(),
                                     satisfied);
    if (premises_hold && !satisfied(conclusion)) {
      Assignment witness;
      for (std::size_t i = 0; i < slots.size(); ++i)
        witness.emplace_back(slots[i], values[i]);
      return witness;
    }
    // Odometer step; the last variable varies fastest.
    std::size_t i = values.size();
    while (i > 0 && ++values[i - 1] == n) values[--i] = 0;
    if (i == 0) return std::nullopt;
  }
}

Element iter_power(const Algebra& algebra, Element a, Element b,
                   std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) {
    const Element next = algebra(a, b);
    if (next == a) break;
    a = next;
  }
  return a;
}

std::vector<std::pair<std::string, Sentence>> bck_laws() {
  std::vector<std::pair<std::string, Sentence>> out;
  for (auto axiom : {Axiom::bck_identity, Axiom::right_zero, Axiom::left_zero,
                     Axiom::antisymmetry, Axiom::self_zero, Axiom::contraction,
                     Axiom::exchange}) {
    std::string law(axiom_law(axiom));
    if (axiom == Axiom::antisymmetry) law = "x-y = 0 & y-x = 0 => x = y";
    if (axiom == Axiom::self_zero) law = "x-x = 0";
    out.emplace_back(std::string(axiom_label(axiom)), parse_sentence(law));
  }
  return out;
}

}  // namespace bck
