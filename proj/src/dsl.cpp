#include "matlis/dsl.hpp"

#include <cctype>
#include <sstream>

namespace matlis {

namespace {

struct Tok {
  enum Kind { ident, number, punct, end } kind = end;
  std::string text;
  size_t pos = 0;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  Tok peek() {
    if (!has_peek_) {
      next_ = lex();
      has_peek_ = true;
    }
    return next_;
  }
  Tok get() {
    Tok t = peek();
    has_peek_ = false;
    return t;
  }
  bool at_end() { return peek().kind == Tok::end; }

  // Raw slice from the current position to the next top-level ',' or ')',
  // used for polynomial arguments.
  std::string poly_slice() {
    if (has_peek_) {
      // rewind to the start of the cached token
      i_ = next_.pos;
      line_ = next_.line;
      col_ = next_.col;
      has_peek_ = false;
    }
    skip_ws();
    size_t start = i_;
    int depth = 0;
    while (i_ < s_.size()) {
      char c = s_[i_];
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') {
        if (depth == 0) break;
        --depth;
      }
      if (c == ',' && depth == 0) break;
      if (c == ';') break;
      advance();
    }
    return s_.substr(start, i_ - start);
  }

  [[noreturn]] void error(const std::string& what) {
    Tok t = peek();
    fail(Errc::parse_error,
         what + " at line " + std::to_string(t.line) + ", column " + std::to_string(t.col));
  }

 private:
  void advance() {
    if (s_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }
  void skip_ws() {
    while (i_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[i_]))) {
        advance();
      } else if (s_[i_] == '#') {
        while (i_ < s_.size() && s_[i_] != '\n') advance();
      } else {
        break;
      }
    }
  }
  Tok lex() {
    skip_ws();
    Tok t;
    t.pos = i_;
    t.line = line_;
    t.col = col_;
    if (i_ >= s_.size()) {
      t.kind = Tok::end;
      return t;
    }
    char c = s_[i_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' ||
                                s_[i_] == '-')) {
        // identifiers may contain '-' for preset names
        if (s_[i_] == '-' && i_ + 1 < s_.size() && !std::isalnum(static_cast<unsigned char>(s_[i_ + 1])))
          break;
        advance();
      }
      t.kind = Tok::ident;
      t.text = s_.substr(start, i_ - start);
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) advance();
      t.kind = Tok::number;
      t.text = s_.substr(start, i_ - start);
      return t;
    }
    t.kind = Tok::punct;
    t.text = std::string(1, c);
    advance();
    return t;
  }

  const std::string& s_;
  size_t i_ = 0;
  int line_ = 1, col_ = 1;
  bool has_peek_ = false;
  Tok next_;
};

struct Interp {
  Session session;
  const RunOptions& opt;
  std::ostringstream out;
  bool any_failure = false;

  explicit Interp(const RunOptions& o) : opt(o) {}

  void expect_punct(Lexer& lx, const std::string& p) {
    Tok t = lx.get();
    if (t.kind != Tok::punct || t.text != p)
      fail(Errc::parse_error, "expected '" + p + "' at line " + std::to_string(t.line) + ", column " +
                                  std::to_string(t.col) + " (got '" + t.text + "')");
  }
  std::string expect_ident(Lexer& lx) {
    Tok t = lx.get();
    if (t.kind != Tok::ident)
      fail(Errc::parse_error, "expected identifier at line " + std::to_string(t.line));
    return t.text;
  }
  long expect_number(Lexer& lx) {
    Tok t = lx.get();
    bool neg = false;
    if (t.kind == Tok::punct && t.text == "-") {
      neg = true;
      t = lx.get();
    }
    if (t.kind != Tok::number)
      fail(Errc::parse_error, "expected integer at line " + std::to_string(t.line));
    long v = std::stol(t.text);
    return neg ? -v : v;
  }

  const Value& lookup(const std::string& name) {
    auto it = session.bindings.find(name);
    if (it == session.bindings.end()) fail(Errc::unknown_name, "unknown name '" + name + "'");
    return it->second;
  }
  RingPtr ring_of(const Value& v) {
    if (std::holds_alternative<RingPtr>(v)) return std::get<RingPtr>(v);
    if (std::holds_alternative<GradedModule>(v)) return std::get<GradedModule>(v).ring();
    if (std::holds_alternative<ArtinianModule>(v)) return std::get<ArtinianModule>(v).ring();
    fail(Errc::usage_error, "value has no ring");
  }
  RingPtr ring_arg(Lexer& lx) {
    std::string name = expect_ident(lx);
    const Value& v = lookup(name);
    if (!std::holds_alternative<RingPtr>(v)) fail(Errc::usage_error, "'" + name + "' is not a ring");
    return std::get<RingPtr>(v);
  }

  FieldSpec parse_field(Lexer& lx) {
    std::string kw = expect_ident(lx);
    if (kw == "rationals" || kw == "q") return FieldSpec::rationals();
    if (kw == "fp" || kw == "prime") {
      expect_punct(lx, "(");
      long p = expect_number(lx);
      expect_punct(lx, ")");
      return FieldSpec::prime_field(p);
    }
    fail(Errc::parse_error, "unknown field '" + kw + "'");
  }

  RingPtr parse_ring_expr(Lexer& lx) {
    std::string kw = expect_ident(lx);
    if (kw != "quotient") fail(Errc::parse_error, "expected quotient(...) for a ring");
    expect_punct(lx, "(");
    FieldSpec field = opt.default_field;
    // optional leading field argument
    Tok t = lx.peek();
    std::vector<std::string> vars;
    if (t.kind == Tok::ident && (t.text == "rationals" || t.text == "q" || t.text == "fp" || t.text == "prime")) {
      field = parse_field(lx);
      expect_punct(lx, ",");
    }
    expect_punct(lx, "[");
    while (true) {
      vars.push_back(expect_ident(lx));
      Tok n = lx.get();
      if (n.kind == Tok::punct && n.text == ",") continue;
      if (n.kind == Tok::punct && n.text == "]") break;
      fail(Errc::parse_error, "expected ',' or ']' in variable list");
    }
    expect_punct(lx, ",");
    std::string ik = expect_ident(lx);
    if (ik != "ideal") fail(Errc::parse_error, "expected ideal(...) in quotient");
    expect_punct(lx, "(");
    std::vector<std::string> gens;
    if (!(lx.peek().kind == Tok::punct && lx.peek().text == ")")) {
      while (true) {
        gens.push_back(lx.poly_slice());
        Tok n = lx.get();
        if (n.kind == Tok::punct && n.text == ",") continue;
        if (n.kind == Tok::punct && n.text == ")") break;
        fail(Errc::parse_error, "expected ',' or ')' in ideal generators");
      }
    } else {
      lx.get();
    }
    expect_punct(lx, ")");
    return make_quotient_ring(field, vars, gens);
  }

  Polynomial parse_poly_arg(Lexer& lx, const RingPtr& ring) {
    std::string text = lx.poly_slice();
    return parse_polynomial(ring->field(), ring->vars(), text);
  }

  Value parse_value_expr(Lexer& lx) {
    Tok t = lx.peek();
    if (t.kind != Tok::ident) fail(Errc::parse_error, "expected a value expression");
    std::string kw = t.text;
    if (kw == "free") {
      lx.get();
      expect_punct(lx, "(");
      RingPtr r = ring_arg(lx);
      expect_punct(lx, ",");
      long n = expect_number(lx);
      expect_punct(lx, ")");
      if (n < 0) fail(Errc::usage_error, "negative rank");
      return GradedModule::free_module(r, static_cast<int>(n));
    }
    if (kw == "cyclic") {
      lx.get();
      expect_punct(lx, "(");
      RingPtr r = ring_arg(lx);
      std::vector<Polynomial> anns;
      while (lx.peek().kind == Tok::punct && lx.peek().text == ",") {
        lx.get();
        anns.push_back(parse_poly_arg(lx, r));
      }
      expect_punct(lx, ")");
      return GradedModule::cyclic(r, anns);
    }
    if (kw == "module") {
      lx.get();
      expect_punct(lx, "(");
      RingPtr r = ring_arg(lx);
      expect_punct(lx, ",");
      expect_punct(lx, "[");
      std::vector<int> degs;
      if (!(lx.peek().kind == Tok::punct && lx.peek().text == "]")) {
        while (true) {
          degs.push_back(static_cast<int>(expect_number(lx)));
          Tok n = lx.get();
          if (n.kind == Tok::punct && n.text == ",") continue;
          if (n.kind == Tok::punct && n.text == "]") break;
          fail(Errc::parse_error, "expected ',' or ']' in degree list");
        }
      } else {
        lx.get();
      }
      expect_punct(lx, ",");
      expect_punct(lx, "[");
      std::vector<VecPoly> rels;
      ModLayout L = ModLayout::plain(degs);
      while (!(lx.peek().kind == Tok::punct && lx.peek().text == "]")) {
        expect_punct(lx, "[");
        std::vector<Polynomial> entries;
        if (!(lx.peek().kind == Tok::punct && lx.peek().text == "]")) {
          while (true) {
            entries.push_back(parse_poly_arg(lx, r));
            Tok n = lx.get();
            if (n.kind == Tok::punct && n.text == ",") continue;
            if (n.kind == Tok::punct && n.text == "]") break;
            fail(Errc::parse_error, "expected ',' or ']' in relation column");
          }
        } else {
          lx.get();
        }
        if (static_cast<int>(entries.size()) != static_cast<int>(degs.size()))
          fail(Errc::usage_error, "relation column length must equal the generator count");
        rels.push_back(vp_from_columns(L, entries));
        if (lx.peek().kind == Tok::punct && lx.peek().text == ",") lx.get();
      }
      lx.get();  // ']'
      expect_punct(lx, ")");
      return GradedModule(r, degs, rels);
    }
    if (kw == "dual") {
      lx.get();
      expect_punct(lx, "(");
      Value inner = parse_value_expr(lx);
      expect_punct(lx, ")");
      if (std::holds_alternative<GradedModule>(inner))
        return artinian_dual(std::get<GradedModule>(inner));
      if (std::holds_alternative<ArtinianModule>(inner))
        return dual_witness(std::get<ArtinianModule>(inner));
      fail(Errc::usage_error, "dual() expects a module or artinian value");
    }
    if (kw == "ideal") {
      lx.get();
      expect_punct(lx, "(");
      RingPtr r = ring_arg(lx);
      std::vector<Polynomial> gens;
      while (lx.peek().kind == Tok::punct && lx.peek().text == ",") {
        lx.get();
        gens.push_back(parse_poly_arg(lx, r));
      }
      expect_punct(lx, ")");
      return Ideal(r->poly_ptr(), gens);
    }
    // plain name
    lx.get();
    return lookup(kw);
  }

  void emit(const Json& j) { out << j.dump() << "\n"; }

  GradedModule as_module(const Value& v, const std::string& what) {
    if (!std::holds_alternative<GradedModule>(v)) fail(Errc::usage_error, what + " must be a module");
    return std::get<GradedModule>(v);
  }
  ArtinianModule as_artinian(const Value& v, const std::string& what) {
    if (!std::holds_alternative<ArtinianModule>(v))
      fail(Errc::usage_error, what + " must be an artinian value");
    return std::get<ArtinianModule>(v);
  }

  void compute(Lexer& lx) {
    std::string op = expect_ident(lx);
    expect_punct(lx, "(");
    if (op == "hom" || op == "tensor") {
      Value x = parse_value_expr(lx);
      expect_punct(lx, ",");
      Value y = parse_value_expr(lx);
      expect_punct(lx, ")");
      check_same_ring(ring_of(x), ring_of(y));
      Json j;
      j["op"] = op;
      if (op == "hom") {
        if (std::holds_alternative<ArtinianModule>(x) && std::holds_alternative<GradedModule>(y)) {
          HomArtinianResult r = hom_artinian_to_fg(std::get<ArtinianModule>(x), std::get<GradedModule>(y));
          j["route"] = "artinian-to-fg";
          j["s"] = r.s;
          j["result"] = finite_summary(r.hom);
        } else if (std::holds_alternative<ArtinianModule>(x) && std::holds_alternative<ArtinianModule>(y)) {
          GradedModule h = ext_artinian_pair(0, std::get<ArtinianModule>(x), std::get<ArtinianModule>(y));
          j["route"] = "artinian-pair";
          j["result"] = module_summary(h);
        } else if (std::holds_alternative<GradedModule>(x) && std::holds_alternative<ArtinianModule>(y)) {
          ArtinianModule h = ext_fg_to_artinian(0, std::get<GradedModule>(x), std::get<ArtinianModule>(y));
          j["route"] = "fg-to-artinian";
          j["result"] = artinian_to_json(h);
        } else {
          j["route"] = "fg-pair";
          j["result"] = module_summary(hom_fg(as_module(x, "hom"), as_module(y, "hom")));
        }
      } else {
        if (std::holds_alternative<ArtinianModule>(x) && std::holds_alternative<ArtinianModule>(y)) {
          j["route"] = "artinian-pair";
          j["result"] = finite_summary(
              tensor_artinian_pair(std::get<ArtinianModule>(x), std::get<ArtinianModule>(y)));
        } else if (std::holds_alternative<ArtinianModule>(x) && std::holds_alternative<GradedModule>(y)) {
          j["route"] = "artinian-fl";
          j["result"] =
              finite_summary(tensor_artinian_fl(std::get<ArtinianModule>(x), std::get<GradedModule>(y)));
        } else if (std::holds_alternative<GradedModule>(x) && std::holds_alternative<ArtinianModule>(y)) {
          j["route"] = "artinian-fl";
          j["result"] =
              finite_summary(tensor_artinian_fl(std::get<ArtinianModule>(y), std::get<GradedModule>(x)));
        } else {
          j["route"] = "fg-pair";
          j["result"] = module_summary(tensor_fg(as_module(x, "tensor"), as_module(y, "tensor")));
        }
      }
      emit(j);
      return;
    }
    if (op == "ext" || op == "tor") {
      long i = expect_number(lx);
      expect_punct(lx, ",");
      Value x = parse_value_expr(lx);
      expect_punct(lx, ",");
      Value y = parse_value_expr(lx);
      expect_punct(lx, ")");
      check_same_ring(ring_of(x), ring_of(y));
      Json j;
      j["op"] = op;
      j["i"] = i;
      if (op == "ext") {
        if (std::holds_alternative<GradedModule>(x) && std::holds_alternative<GradedModule>(y)) {
          j["route"] = "fg-pair";
          j["result"] = module_summary(ext_fg(static_cast<int>(i), std::get<GradedModule>(x),
                                              std::get<GradedModule>(y)));
        } else if (std::holds_alternative<ArtinianModule>(x) && std::holds_alternative<ArtinianModule>(y)) {
          j["route"] = "artinian-pair";
          j["result"] = module_summary(ext_artinian_pair(static_cast<int>(i), std::get<ArtinianModule>(x),
                                                         std::get<ArtinianModule>(y)));
        } else if (std::holds_alternative<GradedModule>(x) && std::holds_alternative<ArtinianModule>(y)) {
          j["route"] = "fg-to-artinian";
          j["result"] = artinian_to_json(ext_fg_to_artinian(static_cast<int>(i), std::get<GradedModule>(x),
                                                            std::get<ArtinianModule>(y)));
        } else {
          j["route"] = "stages";
          j["result"] = stage_sequence_to_json(hard_direction_stages_ext(
              static_cast<int>(i), std::get<ArtinianModule>(x), std::get<GradedModule>(y), opt.s_max));
        }
      } else {
        if (std::holds_alternative<GradedModule>(x) && std::holds_alternative<GradedModule>(y)) {
          j["route"] = "fg-pair";
          j["result"] = module_summary(tor_fg(static_cast<int>(i), std::get<GradedModule>(x),
                                              std::get<GradedModule>(y)));
        } else if (std::holds_alternative<GradedModule>(x) && std::holds_alternative<ArtinianModule>(y)) {
          j["route"] = "fg-with-artinian";
          j["result"] = artinian_to_json(tor_fg_with_artinian(static_cast<int>(i), std::get<GradedModule>(x),
                                                              std::get<ArtinianModule>(y)));
        } else if (std::holds_alternative<ArtinianModule>(x) && std::holds_alternative<GradedModule>(y)) {
          j["route"] = "fg-with-artinian";
          j["result"] = artinian_to_json(tor_fg_with_artinian(static_cast<int>(i), std::get<GradedModule>(y),
                                                              std::get<ArtinianModule>(x)));
        } else {
          j["route"] = "stages";
          j["result"] = stage_sequence_to_json(hard_direction_stages_tor(
              static_cast<int>(i), std::get<ArtinianModule>(x), std::get<ArtinianModule>(y), opt.s_max));
        }
      }
      emit(j);
      return;
    }
    if (op == "depth" || op == "width") {
      Value first = parse_value_expr(lx);
      Ideal a;
      Value target = first;
      bool have_ideal = false;
      if (std::holds_alternative<Ideal>(first)) {
        a = std::get<Ideal>(first);
        have_ideal = true;
        expect_punct(lx, ",");
        target = parse_value_expr(lx);
      }
      expect_punct(lx, ")");
      RingPtr ring = ring_of(target);
      if (!have_ideal) a = ring->maximal_ideal();
      int bound = default_depth_bound(ring);
      DW kind = op == "depth" ? DW::depth : DW::width;
      DepthWidth dw = std::holds_alternative<ArtinianModule>(target)
                          ? depth_width_art(kind, a, std::get<ArtinianModule>(target), bound)
                          : depth_width_fg(kind, a, as_module(target, op), bound);
      Json j;
      j["op"] = op;
      j["value"] = dw.to_string();
      emit(j);
      return;
    }
    if (op == "betti" || op == "bass") {
      Value x = parse_value_expr(lx);
      long imax = opt.i_max;
      if (lx.peek().kind == Tok::punct && lx.peek().text == ",") {
        lx.get();
        imax = expect_number(lx);
      }
      expect_punct(lx, ")");
      std::vector<long> beta, mu;
      if (std::holds_alternative<ArtinianModule>(x)) {
        // beta_i(A) = mu^i(witness), mu^i(A) = beta_i(witness)
        auto [b, m] = betti_bass(std::get<ArtinianModule>(x).witness, static_cast<int>(imax));
        beta = m;
        mu = b;
      } else {
        auto [b, m] = betti_bass(as_module(x, op), static_cast<int>(imax));
        beta = b;
        mu = m;
      }
      Json j;
      j["op"] = op;
      j["betti"] = beta;
      j["bass"] = mu;
      emit(j);
      return;
    }
    if (op == "ass" || op == "att") {
      Value x = parse_value_expr(lx);
      expect_punct(lx, ")");
      PrimeSet ps = op == "ass" ? ass_fg(as_module(x, "ass"))
                                : att_artinian(as_artinian(x, "att"));
      Json j;
      j["op"] = op;
      j["primes"] = primes_to_json(ps, ring_of(x));
      emit(j);
      return;
    }
    if (op == "stages") {
      long i = expect_number(lx);
      expect_punct(lx, ",");
      Value a = parse_value_expr(lx);
      expect_punct(lx, ",");
      Value y = parse_value_expr(lx);
      long smax = opt.s_max;
      if (lx.peek().kind == Tok::punct && lx.peek().text == ",") {
        lx.get();
        smax = expect_number(lx);
      }
      expect_punct(lx, ")");
      StageSequence seq =
          std::holds_alternative<ArtinianModule>(y)
              ? hard_direction_stages_tor(static_cast<int>(i), as_artinian(a, "stages"),
                                          std::get<ArtinianModule>(y), static_cast<int>(smax))
              : hard_direction_stages_ext(static_cast<int>(i), as_artinian(a, "stages"),
                                          std::get<GradedModule>(y), static_cast<int>(smax));
      Json j;
      j["op"] = "stages";
      j["result"] = stage_sequence_to_json(seq);
      emit(j);
      return;
    }
    fail(Errc::parse_error, "unknown compute operation '" + op + "'");
  }

  void statement(Lexer& lx) {
    std::string kw = expect_ident(lx);
    if (kw == "ring" || kw == "ideal" || kw == "module" || kw == "artinian") {
      std::string name = expect_ident(lx);
      if (session.bindings.count(name)) fail(Errc::usage_error, "name '" + name + "' already bound");
      expect_punct(lx, "=");
      Value v;
      if (kw == "ring") {
        RingPtr r = parse_ring_expr(lx);
        session.active_ring = r;
        v = r;
      } else {
        v = parse_value_expr(lx);
        if (kw == "ideal" && !std::holds_alternative<Ideal>(v))
          fail(Errc::usage_error, "'" + name + "' is not an ideal");
        if (kw == "module" && !std::holds_alternative<GradedModule>(v))
          fail(Errc::usage_error, "'" + name + "' is not a module");
        if (kw == "artinian" && !std::holds_alternative<ArtinianModule>(v))
          fail(Errc::usage_error, "'" + name + "' is not artinian");
      }
      session.bindings.emplace(name, std::move(v));
      return;
    }
    if (kw == "compute") {
      compute(lx);
      return;
    }
    if (kw == "verify") {
      std::string what = expect_ident(lx);
      if (what != "suite") fail(Errc::parse_error, "expected 'verify suite'");
      SuiteOptions sopt;
      sopt.i_max = opt.i_max;
      sopt.s_max = opt.s_max;
      sopt.field = opt.default_field;
      SuiteReport rep = run_suite(opt.seed, opt.cases, sopt);
      if (!rep.ok()) any_failure = true;
      if (opt.json)
        emit(suite_report_to_json(rep));
      else
        out << suite_report_table(rep);
      return;
    }
    if (kw == "preset") {
      std::string name = expect_ident(lx);
      std::vector<long> params;
      if (lx.peek().kind == Tok::punct && lx.peek().text == "(") {
        lx.get();
        while (true) {
          params.push_back(expect_number(lx));
          Tok t = lx.get();
          if (t.kind == Tok::punct && t.text == ",") continue;
          if (t.kind == Tok::punct && t.text == ")") break;
          fail(Errc::parse_error, "expected ',' or ')' in preset parameters");
        }
      }
      std::string text;
      if (!run_preset(name, params, opt, text)) any_failure = true;
      out << text;
      return;
    }
    fail(Errc::parse_error, "unknown statement '" + kw + "'");
  }
};

}  // namespace

RunResult run_script(const std::string& script, const RunOptions& opt) {
  Interp interp(opt);
  Lexer lx(script);
  RunResult result;
  try {
    while (!lx.at_end()) {
      interp.statement(lx);
      interp.expect_punct(lx, ";");
    }
  } catch (const MatlisError& e) {
    result.exit_code = 2;
    Json diag;
    diag["error"] = static_cast<int>(e.code);
    diag["message"] = e.what();
    result.diagnostics = diag.dump() + "\n";
    result.output = interp.out.str();
    return result;
  }
  result.output = interp.out.str();
  result.exit_code = interp.any_failure ? 1 : 0;
  return result;
}

}  // namespace matlis
