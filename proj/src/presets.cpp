#include <sstream>

#include "matlis/dsl.hpp"
#include "matlis/util.hpp"

namespace matlis {

namespace {

struct PresetCtx {
  std::ostringstream out;
  bool ok = true;

  void line(const std::string& name, const std::string& what, bool pass, const std::string& got,
            const std::string& expect) {
    Json j;
    j["preset"] = name;
    j["case"] = what;
    j["verdict"] = pass ? "pass" : "fail";
    j["got"] = got;
    j["expect"] = expect;
    out << j.dump() << "\n";
    ok = ok && pass;
  }
};

std::string len_str(const GradedModule& m) {
  return m.finite_data().finite ? std::to_string(m.finite_data().length) : std::string("infinite");
}

// Stage dims as "d1,d2,..."
std::string dims_str(const StageSequence& s) {
  std::vector<std::string> parts;
  for (const FiniteLengthModule& w : s.stages) parts.push_back(std::to_string(w.dim()));
  return join(parts, ",");
}

bool stages_all_zero(const StageSequence& s) {
  for (const FiniteLengthModule& w : s.stages)
    if (w.dim() != 0) return false;
  return true;
}

// W_s has the Hilbert shape of a length-s cyclic truncation: s basis vectors
// in s consecutive degrees.
bool truncation_shape(const FiniteLengthModule& w, int s) {
  if (w.dim() != s) return false;
  auto h = w.hilbert();
  if (static_cast<int>(h.size()) != s) return false;
  int prev = 0;
  bool first = true;
  for (auto& [d, c] : h) {
    if (c != 1) return false;
    if (!first && d != prev + 1) return false;
    prev = d;
    first = false;
  }
  return true;
}

void preset_6_2(PresetCtx& ctx, const RunOptions& opt) {
  const FieldSpec& f = opt.default_field;
  const std::string name = "example-6-2";
  {
    auto R = make_polynomial_ring(f, {"x"});
    auto Dx = artinian_dual(GradedModule::cyclic(R, {parse_polynomial(f, {"x"}, "x")}));
    std::vector<long> expect{1, 1, 0, 0};
    for (int i = 0; i <= 3; ++i) {
      GradedModule e = ext_artinian_pair(i, Dx, Dx);
      long got = e.finite_data().finite ? e.finite_data().length : -1;
      ctx.line(name, "k[x]: dim Ext^" + std::to_string(i) + "(D(R/x), D(R/x))", got == expect[i],
               std::to_string(got), std::to_string(expect[i]));
    }
    auto E = injective_hull(R);
    std::vector<long> expect2{0, 1, 0, 0};
    for (int i = 0; i <= 3; ++i) {
      GradedModule e = ext_artinian_pair(i, E, Dx);
      long got = e.finite_data().finite ? e.finite_data().length : -1;
      ctx.line(name, "k[x]: dim Ext^" + std::to_string(i) + "(E, (0:_E x))", got == expect2[i],
               std::to_string(got), std::to_string(expect2[i]));
    }
  }
  {
    auto R = make_polynomial_ring(f, {"x", "y"});
    auto Dy = artinian_dual(GradedModule::cyclic(R, {parse_polynomial(f, {"x", "y"}, "y")}));
    auto Dx = artinian_dual(GradedModule::cyclic(R, {parse_polynomial(f, {"x", "y"}, "x")}));
    std::vector<long> expect{0, 1, 0, 0};
    for (int i = 0; i <= 3; ++i) {
      GradedModule e = ext_artinian_pair(i, Dy, Dx);
      long got = e.finite_data().finite ? e.finite_data().length : -1;
      ctx.line(name, "k[x,y]: dim Ext^" + std::to_string(i) + "((0:_E y), (0:_E x))", got == expect[i],
               std::to_string(got), std::to_string(expect[i]));
    }
  }
}

void preset_6_3(PresetCtx& ctx, const RunOptions& opt) {
  const FieldSpec& f = opt.default_field;
  const std::string name = "example-6-3";
  int smax = std::max(3, opt.s_max);
  {
    // d = 1, D = R over k[x]
    auto R = make_polynomial_ring(f, {"x"});
    auto E = injective_hull(R);
    auto free1 = GradedModule::free_module(R, 1);
    auto seq0 = hard_direction_stages_ext(0, E, free1, smax);
    ctx.line(name, "k[x]: Ext^0(E, D) stages vanish", stages_all_zero(seq0), dims_str(seq0), "all 0");
    auto seq1 = hard_direction_stages_ext(1, E, free1, smax);
    bool shapes = true;
    for (int s = 1; s <= smax; ++s) shapes = shapes && truncation_shape(seq1.stages[s - 1], s);
    ctx.line(name, "k[x]: Ext^1(E, D) stage s is the truncation A^v/m^s A^v", shapes, dims_str(seq1),
             "1.." + std::to_string(smax));
    bool surj = true;
    for (const FLMap& t : seq1.transitions) surj = surj && rank(t.mat) == t.mat.rows;
    ctx.line(name, "k[x]: Ext^1(E, D) transitions surjective", surj, surj ? "yes" : "no", "yes");

    auto Rx = GradedModule::cyclic(R, {parse_polynomial(f, {"x"}, "x")});
    auto sq0 = hard_direction_stages_ext(0, E, Rx, smax);
    bool zero_trans = true;
    for (const FLMap& t : sq0.transitions) zero_trans = zero_trans && t.mat.is_zero();
    ctx.line(name, "k[x]: Ext^0(E, D/xD) transitions vanish (limit (0:_Av x) = 0)", zero_trans,
             zero_trans ? "zero maps" : "nonzero map", "zero maps");
    auto sq1 = hard_direction_stages_ext(1, E, Rx, smax);
    bool det1 = sq1.detected_from && sq1.detected_limit->length() == 1;
    ctx.line(name, "k[x]: Ext^1(E, D/xD) detected limit = A^v/xA^v", det1,
             sq1.detected_from ? "limit len " + std::to_string(sq1.detected_limit->length())
                               : "not stabilized",
             "limit len 1");

    auto Dx = artinian_dual(Rx);
    std::vector<long> expect{1, 1, 0};
    for (int i = 0; i <= 2; ++i) {
      auto sq = hard_direction_stages_ext(i, Dx, Rx, smax);
      bool good;
      std::string got;
      if (expect[i] == 0) {
        good = stages_all_zero(sq);
        got = dims_str(sq);
      } else {
        good = sq.detected_from && sq.detected_limit->length() == expect[i];
        got = sq.detected_from ? "limit len " + std::to_string(sq.detected_limit->length())
                               : "not stabilized";
      }
      ctx.line(name, "k[x]: Ext^" + std::to_string(i) + "((0:_E x), D/xD)", good, got,
               expect[i] == 0 ? "all 0" : "limit len " + std::to_string(expect[i]));
    }
  }
  {
    // d = 2 over k[x,y]
    auto R = make_polynomial_ring(f, {"x", "y"});
    auto Dy = artinian_dual(GradedModule::cyclic(R, {parse_polynomial(f, {"x", "y"}, "y")}));
    auto Rx = GradedModule::cyclic(R, {parse_polynomial(f, {"x", "y"}, "x")});
    auto sq0 = hard_direction_stages_ext(0, Dy, Rx, smax);
    ctx.line(name, "k[x,y]: Ext^0((0:_E y), D/xD) stages vanish", stages_all_zero(sq0), dims_str(sq0),
             "all 0");
    auto sq1 = hard_direction_stages_ext(1, Dy, Rx, smax);
    bool zero_trans = true;
    for (const FLMap& t : sq1.transitions) zero_trans = zero_trans && t.mat.is_zero();
    ctx.line(name, "k[x,y]: Ext^1((0:_E y), D/xD) transitions vanish (limit (0:_Av x) = 0)", zero_trans,
             zero_trans ? "zero maps" : "nonzero map", "zero maps");
    auto sq2 = hard_direction_stages_ext(2, Dy, Rx, smax);
    bool det2 = sq2.detected_from && sq2.detected_limit->length() == 1;
    ctx.line(name, "k[x,y]: Ext^2((0:_E y), D/xD) detected limit = A^v/xA^v", det2,
             sq2.detected_from ? "limit len " + std::to_string(sq2.detected_limit->length())
                               : "not stabilized",
             "limit len 1");
  }
}

void preset_6_4(PresetCtx& ctx, const RunOptions& opt) {
  const FieldSpec& f = opt.default_field;
  const std::string name = "example-6-4";
  int smax = std::max(3, std::min(opt.s_max, 5));
  auto R = make_polynomial_ring(f, {"x"});
  auto E = injective_hull(R);

  auto seq1 = hard_direction_stages_tor(1, E, E, smax);
  bool shapes = true;
  for (int s = 1; s <= smax; ++s) shapes = shapes && truncation_shape(seq1.stages[s - 1], s);
  ctx.line(name, "k[x]: Tor_1(E, E) stage s = (0:_E x^s)", shapes, dims_str(seq1),
           "1.." + std::to_string(smax));
  bool inj = true;
  for (const FLMap& t : seq1.transitions) inj = inj && t.is_injective();
  ctx.line(name, "k[x]: Tor_1(E, E) transitions injective", inj, inj ? "yes" : "no", "yes");
  ctx.line(name, "k[x]: Tor_1(E, E) does not falsely stabilize", !seq1.detected_from.has_value(),
           seq1.detected_from ? "stabilized" : "open", "open");

  auto seq0 = hard_direction_stages_tor(0, E, E, smax);
  ctx.line(name, "k[x]: Tor_0(E, E) stages vanish", stages_all_zero(seq0), dims_str(seq0), "all 0");
  long t0 = tensor_artinian_pair(E, E).dim();
  ctx.line(name, "k[x]: E (x) E = 0", t0 == 0, std::to_string(t0), "0");

  auto Dx = artinian_dual(GradedModule::cyclic(R, {parse_polynomial(f, {"x"}, "x")}));
  long tx = tensor_artinian_pair(E, Dx).dim();
  ctx.line(name, "k[x]: Tor_0(E, (0:_E x)) = A/xA = 0", tx == 0, std::to_string(tx), "0");
  auto sq1 = hard_direction_stages_tor(1, E, Dx, smax);
  bool det = sq1.detected_from && sq1.detected_limit->length() == 1;
  ctx.line(name, "k[x]: Tor_1(E, (0:_E x)) detected limit = (0:_A x)", det,
           sq1.detected_from ? "limit len " + std::to_string(sq1.detected_limit->length())
                             : "not stabilized",
           "limit len 1");

  long dd0 = tensor_artinian_pair(Dx, Dx).dim();
  ctx.line(name, "k[x]: Tor_0((0:_E x), (0:_E x)) = (0:_E x)", dd0 == 1, std::to_string(dd0), "1");
  auto sq2 = hard_direction_stages_tor(1, Dx, Dx, smax);
  bool det2 = sq2.detected_from && sq2.detected_limit->length() == 1;
  ctx.line(name, "k[x]: Tor_1((0:_E x), (0:_E x)) detected limit len", det2,
           sq2.detected_from ? std::to_string(sq2.detected_limit->length()) : "not stabilized", "1");
  auto sq3 = hard_direction_stages_tor(2, Dx, Dx, smax);
  ctx.line(name, "k[x]: Tor_2((0:_E x), (0:_E x)) stages vanish", stages_all_zero(sq3), dims_str(sq3),
           "all 0");
}

void preset_6_5(PresetCtx& ctx, const RunOptions& opt, long a, long b, long c) {
  const FieldSpec& f = opt.default_field;
  const std::string name = a == 1 && b == 1 && c == 2 ? "example-6-5" : "example-6-5-general";
  std::string spec = "(a,b,c)=(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
  std::vector<std::string> vars{"x", "y"};
  std::string g1 = "x^" + std::to_string(a) + "*y^" + std::to_string(b);
  std::string g2 = "y^" + std::to_string(c);
  auto S = make_quotient_ring(f, vars, {g1, g2});
  auto E = injective_hull(S);
  FiniteLengthModule t = tensor_artinian_pair(E, E);
  long expect_len = a * (c - b);
  ctx.line(name, spec + ": len(E (x) E)", t.dim() == expect_len, std::to_string(t.dim()),
           std::to_string(expect_len));
  GradedModule closed = GradedModule::cyclic(
      S, {parse_polynomial(f, vars, "x^" + std::to_string(a)),
          parse_polynomial(f, vars, "y^" + std::to_string(c - b))});
  FiniteLengthModule cf = make_finite(closed);
  bool hilb = t.hilbert() == cf.hilbert();
  ctx.line(name, spec + ": Hilbert(E (x) E) = Hilbert(S/(x^a, y^(c-b)))", hilb, hilb ? "equal" : "differs",
           "equal");
}

}  // namespace

bool run_preset(const std::string& name, const std::vector<long>& params, const RunOptions& opt,
                std::string& out) {
  PresetCtx ctx;
  if (name == "example-6-2") {
    preset_6_2(ctx, opt);
  } else if (name == "example-6-3") {
    preset_6_3(ctx, opt);
  } else if (name == "example-6-4") {
    preset_6_4(ctx, opt);
  } else if (name == "example-6-5") {
    preset_6_5(ctx, opt, 1, 1, 2);
  } else if (name == "example-6-5-general") {
    if (params.size() != 3) fail(Errc::usage_error, "example-6-5-general expects (a,b,c)");
    long a = params[0], b = params[1], c = params[2];
    if (!(a >= 1 && b >= 1 && c > b)) fail(Errc::usage_error, "require a >= 1, b >= 1, c > b");
    preset_6_5(ctx, opt, a, b, c);
  } else {
    fail(Errc::usage_error, "unknown preset '" + name + "'");
  }
  Json summary;
  summary["preset"] = name;
  summary["verdict"] = ctx.ok ? "pass" : "fail";
  ctx.out << summary.dump() << "\n";
  out = ctx.out.str();
  return ctx.ok;
}

}  // namespace matlis
