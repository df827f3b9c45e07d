#include "symdist/family.hpp"

#include <cctype>

#include "symdist/errors.hpp"

namespace symdist {

FamilySpec FamilySpec::copies(int m, const FamilySpec& g) {
  if (m < 1) throw InvalidGraph("copy count must be >= 1");
  if (m == 1) return g;
  return union_of(std::vector<FamilySpec>(static_cast<std::size_t>(m), g));
}

namespace {

int single_param(const FamilySpec& spec, const char* what) {
  if (spec.params.size() != 1) throw InvalidGraph(std::string(what) + " takes exactly one parameter");
  return spec.params[0];
}

void need_operands(const FamilySpec& spec, std::size_t at_least, const char* what) {
  if (spec.operands.size() < at_least) {
    throw InvalidGraph(std::string(what) + " needs at least " + std::to_string(at_least) + " operand(s)");
  }
}

}  // namespace

Graph construct_family(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::Path: return path_graph(single_param(spec, "path"));
    case FamilyKind::Cycle: return cycle_graph(single_param(spec, "cycle"));
    case FamilyKind::Complete: return complete_graph(single_param(spec, "complete graph"));
    case FamilyKind::Empty: return empty_graph(single_param(spec, "empty graph"));
    case FamilyKind::CompleteBipartite:
      if (spec.params.size() != 2) throw InvalidGraph("complete bipartite graph takes two parameters");
      return complete_bipartite(spec.params[0], spec.params[1]);
    case FamilyKind::CompleteMultipartite: return complete_multipartite(spec.params);
    case FamilyKind::BroomTree: return broom_tree(single_param(spec, "broom tree"));
    case FamilyKind::HouseC5Prime:
      if (!spec.params.empty()) throw InvalidGraph("C5' takes no parameters");
      return house_graph();
    case FamilyKind::Complement:
      if (spec.operands.size() != 1) throw InvalidGraph("complement takes one operand");
      return complement(construct_family(spec.operands[0]));
    case FamilyKind::Union:
    case FamilyKind::Join: {
      need_operands(spec, 1, spec.kind == FamilyKind::Union ? "union" : "join");
      Graph acc = construct_family(spec.operands[0]);
      for (std::size_t i = 1; i < spec.operands.size(); ++i) {
        const Graph next = construct_family(spec.operands[i]);
        acc = spec.kind == FamilyKind::Union ? disjoint_union(acc, next) : join(acc, next);
      }
      return acc;
    }
    case FamilyKind::BlowUp:
      if (spec.operands.size() != 1) throw InvalidGraph("blow-up takes one base graph");
      return blow_up(construct_family(spec.operands[0]), spec.parts);
  }
  throw InvalidGraph("unknown family kind");
}

namespace {

std::string join_list(const std::vector<FamilySpec>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ',';
    out += to_expression(items[i]);
  }
  return out;
}

std::string int_list(const std::vector<int>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(items[i]);
  }
  return out;
}

}  // namespace

std::string to_expression(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::Path: return "P" + int_list(spec.params);
    case FamilyKind::Cycle: return "C" + int_list(spec.params);
    case FamilyKind::Complete: return "K" + int_list(spec.params);
    case FamilyKind::Empty: return "E" + int_list(spec.params);
    case FamilyKind::CompleteBipartite:
    case FamilyKind::CompleteMultipartite: return "K(" + int_list(spec.params) + ")";
    case FamilyKind::BroomTree: return "T" + int_list(spec.params);
    case FamilyKind::HouseC5Prime: return "C5'";
    case FamilyKind::Complement: return "co(" + join_list(spec.operands) + ")";
    case FamilyKind::Union: return "U(" + join_list(spec.operands) + ")";
    case FamilyKind::Join: return "J(" + join_list(spec.operands) + ")";
    case FamilyKind::BlowUp: {
      std::string out = "B(" + join_list(spec.operands) + ";";
      for (std::size_t i = 0; i < spec.parts.size(); ++i) {
        if (i) out += ',';
        out += (spec.parts[i].complete ? "K" : "E") + std::to_string(spec.parts[i].size);
      }
      return out + ")";
    }
  }
  return "?";
}

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
    }
  }

  FamilySpec parse() {
    FamilySpec spec = expr();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("family expression: " + what + " at offset " + std::to_string(pos_) + " in \"" +
                     text_ + "\"");
  }

  bool at(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  bool accept(char c) {
    if (!at(c)) return false;
    ++pos_;
    return true;
  }
  bool accept(std::string_view word) {
    if (text_.compare(pos_, word.size(), word) != 0) return false;
    pos_ += word.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

  int integer() {
    if (!at_digit()) fail("expected a number");
    long value = 0;
    while (at_digit()) {
      value = value * 10 + (text_[pos_++] - '0');
      if (value > 1000) fail("number too large");
    }
    return static_cast<int>(value);
  }

  // Accepts "5" or "(5)".
  int size_argument() {
    if (accept('(')) {
      const int v = integer();
      expect(')');
      return v;
    }
    return integer();
  }

  FamilySpec expr() {
    if (at_digit()) {
      const int count = integer();
      expect('*');
      return FamilySpec::copies(count, atom());
    }
    return atom();
  }

  std::vector<FamilySpec> operand_list() {
    expect('(');
    std::vector<FamilySpec> items{expr()};
    while (accept(',')) items.push_back(expr());
    expect(')');
    return items;
  }

  FamilySpec atom() {
    if (accept("co(")) {
      FamilySpec inner = expr();
      expect(')');
      return FamilySpec::complement_of(std::move(inner));
    }
    if (accept("C5'")) return FamilySpec::house();
    if (at('U') || at('J')) {
      const bool is_union = text_[pos_++] == 'U';
      auto items = operand_list();
      if (items.size() < 2) fail("union/join needs at least two operands");
      return is_union ? FamilySpec::union_of(std::move(items)) : FamilySpec::join_of(std::move(items));
    }
    if (accept('B')) {
      expect('(');
      FamilySpec base = expr();
      expect(';');
      std::vector<BlowUpPart> parts;
      do {
        bool complete = false;
        if (accept('K')) {
          complete = true;
        } else if (!accept('E')) {
          fail("blow-up parts must be K<n> or E<n>");
        }
        parts.push_back({size_argument(), complete});
      } while (accept(','));
      expect(')');
      return FamilySpec::blow_up_of(std::move(base), std::move(parts));
    }
    if (accept('K')) {
      if (accept('(')) {
        std::vector<int> sizes{integer()};
        while (accept(',')) sizes.push_back(integer());
        expect(')');
        if (sizes.size() == 1) return FamilySpec::complete(sizes[0]);
        if (sizes.size() == 2) return FamilySpec::bipartite(sizes[0], sizes[1]);
        return FamilySpec::multipartite(std::move(sizes));
      }
      return FamilySpec::complete(integer());
    }
    if (accept('E')) return FamilySpec::empty(size_argument());
    if (accept('P')) return FamilySpec::path(size_argument());
    if (accept('C')) return FamilySpec::cycle(size_argument());
    if (accept('T')) return FamilySpec::broom(size_argument());
    if (accept('H')) return FamilySpec::house();
    fail("unknown graph name");
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

FamilySpec parse_family_expression(std::string_view text) { return ExpressionParser(text).parse(); }

}  // namespace symdist
