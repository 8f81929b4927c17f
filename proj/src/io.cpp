#include "gitstab/io.hpp"

#include "gitstab/virtual_profile.hpp"

namespace gitstab {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw Error(path + ": " + what); }

const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path + "." + key, "missing field");
  return *it;
}

i64 read_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<i64>();
}

Rational read_rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<i64>()));
  if (!j.is_string()) fail(path, "expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

std::vector<Rational> read_rationals(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  std::vector<Rational> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(read_rational(j[k], path + "[" + std::to_string(k) + "]"));
  return out;
}

std::vector<i64> read_ints(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  std::vector<i64> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(read_int(j[k], path + "[" + std::to_string(k) + "]"));
  return out;
}

json rationals(const std::vector<Rational>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(rational_json(x));
  return out;
}

}  // namespace

json rational_json(const Rational& x) { return to_string(x); }

json scenario_to_json(const Scenario& s) {
  const auto& f = s.filtration;
  const auto& ctx = f.ctx;
  json out;
  out["context"] = {{"g", ctx.g}, {"d", ctx.d}, {"N", ctx.N}, {"n", ctx.n}, {"q", ctx.q}};
  if (ctx.h1 != 0) out["context"]["h1"] = ctx.h1;
  if (!ctx.complete) out["context"]["complete"] = false;
  json lin = {{"gamma", rational_json(s.lin.gamma)}, {"b", rationals(s.lin.b)}, {"epsilon", rational_json(s.lin.epsilon)}};
  if (s.lin.nu) lin["nu"] = *s.lin.nu;
  if (s.lin.a) lin["a"] = rationals(*s.lin.a);
  out["linearization"] = lin;
  out["filtration"] = {{"z", f.z}, {"r", rationals(f.r)}, {"c", f.c}, {"B", rationals(f.B)}};
  out["run"] = {{"u", s.u}, {"v", s.v}};
  return out;
}

Scenario scenario_from_json(const json& j) {
  Scenario s;
  auto& f = s.filtration;
  const json& ctx = field(j, "context", "scenario");
  f.ctx.g = static_cast<int>(read_int(field(ctx, "g", "context"), "context.g"));
  f.ctx.d = read_int(field(ctx, "d", "context"), "context.d");
  f.ctx.N = read_int(field(ctx, "N", "context"), "context.N");
  f.ctx.n = static_cast<int>(read_int(field(ctx, "n", "context"), "context.n"));
  f.ctx.q = static_cast<int>(read_int(field(ctx, "q", "context"), "context.q"));
  if (ctx.contains("h1")) f.ctx.h1 = read_int(ctx["h1"], "context.h1");
  if (ctx.contains("complete")) {
    if (!ctx["complete"].is_boolean()) fail("context.complete", "expected a boolean");
    f.ctx.complete = ctx["complete"].get<bool>();
  }

  const json& lin = field(j, "linearization", "scenario");
  s.lin.gamma = read_rational(field(lin, "gamma", "linearization"), "linearization.gamma");
  s.lin.b = read_rationals(field(lin, "b", "linearization"), "linearization.b");
  s.lin.epsilon = read_rational(field(lin, "epsilon", "linearization"), "linearization.epsilon");
  if (lin.contains("nu")) s.lin.nu = read_int(lin["nu"], "linearization.nu");
  if (lin.contains("a")) s.lin.a = read_rationals(lin["a"], "linearization.a");

  const json& fj = field(j, "filtration", "scenario");
  f.z = read_ints(field(fj, "z", "filtration"), "filtration.z");
  f.r = read_rationals(field(fj, "r", "filtration"), "filtration.r");
  const json& c = field(fj, "c", "filtration");
  if (!c.is_array()) fail("filtration.c", "expected an array of rows");
  for (std::size_t k = 0; k < c.size(); ++k) f.c.push_back(read_ints(c[k], "filtration.c[" + std::to_string(k) + "]"));
  f.B = read_rationals(field(fj, "B", "filtration"), "filtration.B");

  if (j.contains("run")) {
    const json& run = j["run"];
    s.u = read_int(field(run, "u", "run"), "run.u");
    s.v = read_int(field(run, "v", "run"), "run.v");
  }
  return s;
}

Scenario parse_scenario(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
  return scenario_from_json(j);
}

json report_to_json(const StabilityReport& rep) {
  json out;
  out["u"] = rep.u;
  out["v"] = rep.v;
  out["m"] = (rep.u + 1) * rep.v;
  out["case"] = std::string(1, case_name(rep.case_label));
  out["verdict"] = verdict_name(rep.verdict);
  out["hypothesis_failures"] = rep.hypothesis_failures;
  out["warnings"] = rep.warnings;
  out["epsilon"] = rational_json(rep.epsilon);
  out["epsilon_max"] = rep.epsilon_max ? rational_json(*rep.epsilon_max) : json(nullptr);
  out["creep"] = {{"lhs", rational_json(rep.creep.lhs)},
                  {"rhs", rational_json(rep.creep.rhs)},
                  {"holds", rep.creep.holds},
                  {"mode", creep_mode_name(rep.creep.used)}};
  out["tail"] = {{"tail", rational_json(rep.tail.tail)},
                 {"bound", rational_json(rep.tail.bound)},
                 {"holds", rep.tail.holds}};
  auto opt = [](const std::optional<Rational>& x) { return x ? rational_json(*x) : json(nullptr); };
  out["totals"] = {{"A_bound", rational_json(rep.A_bound)},
                   {"A_vir", rational_json(rep.A_vir)},
                   {"marked", rational_json(rep.marked)},
                   {"T_vir", rational_json(rep.T_vir)},
                   {"delta_bound", rational_json(rep.delta_bound)},
                   {"T_vir_case_bound", opt(rep.T_vir_case_bound)},
                   {"T_bound", opt(rep.T_bound)},
                   {"T_chain", rational_json(rep.T_chain)},
                   {"T_direct", rational_json(rep.T_direct)},
                   {"T_sound", rational_json(rep.T_sound)},
                   {"rhs", rational_json(rep.rhs)},
                   {"margin", rational_json(rep.margin)},
                   {"bound_margin", opt(rep.bound_margin)}};
  return out;
}

json stages_to_json(const XTildeProfile& xt) {
  json out = json::array();
  for (const auto& st : xt.stages) {
    json members = json::array();
    for (const auto& sp : st.members)
      members.push_back({{"space", sp.notation()}, {"weight", rational_json(sp.weight)}, {"mult", sp.mult}});
    json row = {{"k", st.k},
                {"w", st.w},
                {"terminal", st.terminal},
                {"codim", st.codim_bound},
                {"codim_exact", st.codim_exact ? json(*st.codim_exact) : json(nullptr)},
                {"weight", rational_json(st.weight)},
                {"contrib", st.contrib},
                {"members", members}};
    out.push_back(row);
  }
  return out;
}

json vertices_to_json(const MultFiltration& mf) {
  json out = json::array();
  for (const auto& vx : virtual_vertices(mf))
    out.push_back({{"codim", rational_json(vx.codim)}, {"weight", rational_json(vx.weight)}});
  return out;
}

}  // namespace gitstab
