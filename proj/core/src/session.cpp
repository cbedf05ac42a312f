#include "basym/session.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "basym/error.hpp"

namespace basym {

namespace {

// Error text without the "kind: " prefix added by Error.
std::string bare(const Error& e) {
  std::string w = e.what();
  const std::string prefix = std::string(to_string(e.kind())) + ": ";
  return w.rfind(prefix, 0) == 0 ? w.substr(prefix.size()) : w;
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  std::string_view text() const { return text_; }

  void skip() {
    for (;;) {
      while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
        continue;
      }
      return;
    }
  }

  bool at_end() {
    skip();
    return pos_ >= text_.size();
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(std::string_view lit) {
    skip();
    if (text_.substr(pos_, lit.size()) != lit) return false;
    pos_ += lit.size();
    return true;
  }

  void expect(std::string_view lit) {
    if (!accept(lit)) error(pos_, "expected '" + std::string(lit) + "'");
  }

  std::string word() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_ || std::isdigit(static_cast<unsigned char>(text_[start]))) error(start, "expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t integer() {
    skip();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string s(text_.substr(start, pos_ - start));
    if (s.empty() || s == "-") error(start, "expected an integer");
    try {
      return std::stoll(s);
    } catch (const std::out_of_range&) {
      error(start, "integer out of range");
    }
  }

  Rational rational() {
    const std::int64_t n = integer();
    if (!accept("/")) return Rational(n);
    const std::size_t at = pos_;
    const std::int64_t d = integer();
    if (d <= 0) error(at, "denominator must be positive");
    return Rational(n, d);
  }

  /// Raw text up to the next ',', ';' or ']' outside parentheses.
  std::pair<std::size_t, std::string_view> item() {
    skip();
    const std::size_t start = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth == 0 && (c == ',' || c == ';' || c == ']')) break;
      if (c == '#') break;
      ++pos_;
    }
    std::size_t end = pos_;
    while (end > start && std::isspace(static_cast<unsigned char>(text_[end - 1]))) --end;
    if (end == start) error(start, "expected an expression");
    return {start, text_.substr(start, end - start)};
  }

  [[noreturn]] void error(std::size_t offset, const std::string& msg) const {
    throw SyntaxError(offset, describe_offset(text_, offset) + ": " + msg);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class SessionParser {
 public:
  explicit SessionParser(std::string_view text) : in_(text) {}

  Session run() {
    while (!in_.at_end()) {
      const std::size_t at = in_.pos();
      const std::string kw = in_.word();
      if (kw == "field") field(at);
      else if (kw == "grading") grading();
      else if (kw == "ring") ring_decl(at);
      else if (kw == "phi") phi(at);
      else if (kw == "ideal") ideal(at);
      else if (kw == "module") module(at);
      else if (kw == "powers") powers(at);
      else if (kw == "window") window(at);
      else in_.error(at, "unknown statement '" + kw + "'");
      in_.expect(";");
    }
    if (!s_.group) s_.group = make_group(1);
    build_ring(in_.pos());
    if (!powers_seen_)
      for (const auto& I : s_.ideals) s_.powers.push_back(I.name);
    return std::move(s_);
  }

 private:
  void field(std::size_t at) {
    if (s_.ring) in_.error(at, "field must precede ideals and modules");
    const std::int64_t p = in_.integer();
    if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(static_cast<std::uint64_t>(p)))
      in_.error(at, "field characteristic must be a prime below 2^31");
    s_.characteristic = static_cast<std::uint32_t>(p);
  }

  void grading() {
    const std::size_t at = in_.pos();
    if (s_.ring || !names_.empty()) in_.error(at, "grading must precede the ring");
    in_.expect("Z");
    int rank = 1;
    if (in_.accept("^")) rank = static_cast<int>(in_.integer());
    if (rank < 0) in_.error(at, "free rank must be nonnegative");
    std::vector<std::int64_t> torsion;
    while (in_.accept("+")) {
      const std::size_t t = in_.pos();
      in_.expect("Z");
      in_.expect("/");
      const std::int64_t m = in_.integer();
      if (m < 2) in_.error(t, "torsion modulus must be at least 2");
      torsion.push_back(m);
    }
    s_.group = make_group(rank, torsion);
  }

  Degree degree() {
    const std::size_t at = in_.pos();
    std::vector<std::int64_t> c;
    if (in_.accept("(")) {
      do c.push_back(in_.integer());
      while (in_.accept(","));
      in_.expect(")");
    } else {
      c.push_back(in_.integer());
    }
    if (c.size() != s_.group->size())
      in_.error(at, "degree needs " + std::to_string(s_.group->size()) + " coordinates");
    return Degree(s_.group, c);
  }

  void ring_decl(std::size_t at) {
    if (s_.ring || !names_.empty()) in_.error(at, "ring declared twice");
    if (!s_.group) s_.group = make_group(1);
    while (in_.peek() != ';' && !in_.at_end()) {
      const std::size_t v = in_.pos();
      std::string name = in_.word();
      for (const auto& n : names_)
        if (n == name) in_.error(v, "variable '" + name + "' declared twice");
      names_.push_back(std::move(name));
      in_.expect(":");
      degrees_.push_back(degree());
    }
    if (names_.empty()) in_.error(at, "ring needs at least one variable");
    if (names_.size() > kMaxVars) in_.error(at, "at most " + std::to_string(kMaxVars) + " variables");
  }

  void phi(std::size_t at) {
    if (s_.ring) in_.error(at, "phi must precede ideals and modules");
    if (!s_.group) s_.group = make_group(1);
    std::vector<Rational> w;
    while (in_.peek() != ';' && !in_.at_end()) w.push_back(in_.rational());
    if (w.size() != static_cast<std::size_t>(s_.group->free_rank()))
      in_.error(at, "phi needs " + std::to_string(s_.group->free_rank()) + " weights");
    phi_ = PositivityFunctional(w);
  }

  void build_ring(std::size_t at) {
    if (s_.ring) return;
    if (names_.empty()) in_.error(at, "no ring declared");
    PositivityFunctional phi = phi_ ? *phi_ : PositivityFunctional::all_ones(s_.group->free_rank());
    try {
      s_.ring = make_ring(PrimeField(s_.characteristic), names_, degrees_, phi);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Syntax) throw;
      throw Error(e.kind(), describe_offset(in_.text(), at) + ": " + bare(e));
    }
  }

  Polynomial poly(std::size_t& at) {
    auto [start, raw] = in_.item();
    at = start;
    try {
      return parse_polynomial(s_.ring, raw);
    } catch (const SyntaxError& e) {
      in_.error(start + e.offset(), bare(e));
    }
  }

  void check_name(std::size_t at, const std::string& name) {
    for (const auto& I : s_.ideals)
      if (I.name == name) in_.error(at, "name '" + name + "' already used");
    for (const auto& M : s_.modules)
      if (M.name == name) in_.error(at, "name '" + name + "' already used");
  }

  void ideal(std::size_t at) {
    build_ring(at);
    const std::size_t n = in_.pos();
    NamedIdeal I{in_.word(), {}};
    check_name(n, I.name);
    in_.expect("=");
    do {
      std::size_t where = 0;
      Polynomial f = poly(where);
      if (!f.is_zero()) {
        try {
          f.homogeneous_degree();
        } catch (const Error& e) {
          throw Error(e.kind(), describe_offset(in_.text(), where) + ": ideal " + I.name + " generator " +
                                    std::to_string(I.generators.size() + 1) + " (" + f.to_string() + "): " + bare(e));
        }
      }
      I.generators.push_back(std::move(f));
    } while (in_.accept(","));
    s_.ideals.push_back(std::move(I));
  }

  void module(std::size_t at) {
    build_ring(at);
    const std::size_t n = in_.pos();
    NamedModule M{in_.word(), {}, {}};
    check_name(n, M.name);
    if (!in_.accept("shifts")) in_.error(in_.pos(), "expected 'shifts'");
    do M.shifts.push_back(degree());
    while (in_.accept(","));
    if (in_.accept("relations")) {
      do {
        const std::size_t r = in_.pos();
        in_.expect("[");
        std::vector<Polynomial> col;
        do {
          std::size_t where = 0;
          col.push_back(poly(where));
        } while (in_.accept(","));
        in_.expect("]");
        if (col.size() != M.shifts.size())
          in_.error(r, "relation needs " + std::to_string(M.shifts.size()) + " entries");
        M.relations.push_back(std::move(col));
        try {
          s_.presentation(M);
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::Syntax) throw;
          throw Error(e.kind(), describe_offset(in_.text(), r) + ": module " + M.name + " relation " +
                                    std::to_string(M.relations.size()) + ": " + bare(e));
        }
      } while (in_.accept(","));
    }
    s_.modules.push_back(std::move(M));
  }

  void powers(std::size_t at) {
    build_ring(at);
    powers_seen_ = true;
    do {
      const std::size_t n = in_.pos();
      std::string name = in_.word();
      bool found = false;
      for (const auto& I : s_.ideals) found = found || I.name == name;
      if (!found) in_.error(n, "unknown ideal '" + name + "'");
      s_.powers.push_back(std::move(name));
    } while (in_.accept(","));
    if (in_.accept("of")) {
      const std::size_t n = in_.pos();
      s_.module_name = in_.word();
      bool found = false;
      for (const auto& M : s_.modules) found = found || M.name == s_.module_name;
      if (!found) in_.error(n, "unknown module '" + s_.module_name + "'");
    }
  }

  void window(std::size_t at) {
    while (in_.peek() != ';' && !in_.at_end()) {
      const std::size_t k = in_.pos();
      const std::string key = in_.word();
      in_.expect("=");
      if (key == "t") {
        s_.window.t_min = in_.integer();
        in_.expect("..");
        s_.window.t_max = in_.integer();
      } else if (key == "wcap") {
        s_.window.wcap = in_.rational();
      } else {
        in_.error(k, "unknown window key '" + key + "'");
      }
    }
    if (s_.window.t_min < 0 || s_.window.t_max < s_.window.t_min) in_.error(at, "window needs 0 <= a <= b in t=a..b");
    if (s_.window.wcap.sign() <= 0) in_.error(at, "wcap must be positive");
  }

  Reader in_;
  Session s_;
  std::vector<std::string> names_;
  std::vector<Degree> degrees_;
  std::optional<PositivityFunctional> phi_;
  bool powers_seen_ = false;
};

}  // namespace

std::string describe_offset(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

Session parse_session(std::string_view text) { return SessionParser(text).run(); }

const NamedIdeal& Session::ideal(const std::string& name) const {
  for (const auto& I : ideals)
    if (I.name == name) return I;
  fail(ErrorKind::InvalidArgument, "unknown ideal '" + name + "'");
}

const NamedModule& Session::module(const std::string& name) const {
  for (const auto& M : modules)
    if (M.name == name) return M;
  fail(ErrorKind::InvalidArgument, "unknown module '" + name + "'");
}

Presentation Session::presentation(const NamedModule& m) const {
  ModulePtr F = make_free_module(ring, m.shifts);
  Presentation p{F, {}};
  for (const auto& col : m.relations) {
    Vector v(F);
    for (std::size_t k = 0; k < col.size(); ++k) v = v + col[k].as_vector(F, k);
    if (v.is_zero()) continue;
    v.homogeneous_degree();
    p.relations.push_back(std::move(v));
  }
  return p;
}

Presentation Session::base_module() const {
  if (module_name.empty()) return free_presentation(ring_as_module(ring));
  return presentation(module(module_name));
}

std::vector<std::vector<Polynomial>> Session::power_ideals() const {
  std::vector<std::vector<Polynomial>> out;
  for (const auto& n : powers) out.push_back(ideal(n).generators);
  return out;
}

ReesSetup Session::rees_setup(bool shifted) const {
  if (powers.empty()) fail(ErrorKind::InvalidArgument, "session declares no ideals");
  return make_rees_setup(ring, power_ideals(), shifted);
}

std::string print_session(const Session& s) {
  std::ostringstream os;
  os << "field " << s.characteristic << ";\n";
  os << "grading Z^" << s.group->free_rank();
  for (auto m : s.group->torsion()) os << " + Z/" << m;
  os << ";\n";
  os << "ring";
  for (std::size_t v = 0; v < s.ring->nvars(); ++v)
    os << " " << s.ring->names()[v] << ":" << s.ring->var_degrees()[v].to_string();
  os << ";\n";
  os << "phi";
  for (const auto& w : s.ring->phi().weights()) os << " " << w.to_string();
  os << ";\n";
  for (const auto& I : s.ideals) {
    os << "ideal " << I.name << " =";
    for (std::size_t k = 0; k < I.generators.size(); ++k)
      os << (k ? ", " : " ") << I.generators[k].to_string();
    os << ";\n";
  }
  for (const auto& M : s.modules) {
    os << "module " << M.name << " shifts";
    for (std::size_t k = 0; k < M.shifts.size(); ++k) os << (k ? ", " : " ") << M.shifts[k].to_string();
    if (!M.relations.empty()) {
      os << " relations";
      for (std::size_t r = 0; r < M.relations.size(); ++r) {
        os << (r ? ", [" : " [");
        for (std::size_t k = 0; k < M.relations[r].size(); ++k)
          os << (k ? ", " : "") << M.relations[r][k].to_string();
        os << "]";
      }
    }
    os << ";\n";
  }
  if (!s.powers.empty()) {
    os << "powers";
    for (std::size_t k = 0; k < s.powers.size(); ++k) os << (k ? ", " : " ") << s.powers[k];
    if (!s.module_name.empty()) os << " of " << s.module_name;
    os << ";\n";
  }
  os << "window t=" << s.window.t_min << ".." << s.window.t_max << " wcap=" << s.window.wcap.to_string() << ";\n";
  return os.str();
}

bool operator==(const Session& a, const Session& b) {
  if (a.characteristic != b.characteristic || *a.group != *b.group || !a.ring->same_as(*b.ring)) return false;
  if (a.powers != b.powers || a.module_name != b.module_name || !(a.window == b.window)) return false;
  if (a.ideals.size() != b.ideals.size() || a.modules.size() != b.modules.size()) return false;
  for (std::size_t i = 0; i < a.ideals.size(); ++i) {
    if (a.ideals[i].name != b.ideals[i].name || a.ideals[i].generators.size() != b.ideals[i].generators.size())
      return false;
    for (std::size_t k = 0; k < a.ideals[i].generators.size(); ++k)
      if (a.ideals[i].generators[k].terms() != b.ideals[i].generators[k].terms()) return false;
  }
  for (std::size_t i = 0; i < a.modules.size(); ++i) {
    const auto &x = a.modules[i], &y = b.modules[i];
    if (x.name != y.name || x.shifts != y.shifts || x.relations.size() != y.relations.size()) return false;
    for (std::size_t r = 0; r < x.relations.size(); ++r)
      for (std::size_t k = 0; k < x.relations[r].size(); ++k)
        if (x.relations[r][k].terms() != y.relations[r][k].terms()) return false;
  }
  return true;
}

}  // namespace basym
