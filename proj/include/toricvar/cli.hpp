#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "toricvar/arrangement.hpp"
#include "toricvar/chambers.hpp"
#include "toricvar/error.hpp"
#include "toricvar/hyperkahler.hpp"
#include "toricvar/io.hpp"
#include "toricvar/quotient.hpp"
#include "toricvar/svg.hpp"
#include "toricvar/variation.hpp"

namespace toricvar::cli {

using io::json;

struct Problem {
  FanInput fan;
  std::optional<RatVector> lift, alpha, alpha_plus, alpha_minus, alpha1;
  std::optional<std::vector<int>> orientation;
  std::optional<std::size_t> cap;
  std::string plot = "arrangement";
};

inline Problem parse_problem(const json& j) {
  if (!j.is_object()) io::bad("problem file must be a JSON object");
  static const std::set<std::string> known{"n",      "rays",       "lift",        "alpha", "alpha_plus",
                                           "alpha_minus", "alpha1", "orientation", "cap",   "plot"};
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) io::bad("unknown field '" + key + "'");
  Problem p;
  io::field(j, "n", p.fan.n);
  io::field(j, "rays", p.fan.u);
  io::field(j, "lift", p.lift);
  io::field(j, "alpha", p.alpha);
  io::field(j, "alpha_plus", p.alpha_plus);
  io::field(j, "alpha_minus", p.alpha_minus);
  io::field(j, "alpha1", p.alpha1);
  io::field(j, "orientation", p.orientation);
  io::field(j, "cap", p.cap);
  if (j.contains("plot")) {
    if (!j.at("plot").is_string()) io::bad("'plot' must be a string");
    p.plot = j.at("plot").get<std::string>();
  }
  return p;
}

struct Options {
  std::optional<std::size_t> cap;
  bool text = false;
};

struct Outcome {
  int exit_code = 0;
  std::string report;              // JSON (or text) document for standard output
  std::optional<std::string> svg;  // figure, when the command produces one
  std::string diagnostic;          // one line for standard error on failure
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> all{"quotient",  "arrangement", "chambers",     "locate",
                                            "variation", "flip",        "fibred",       "hk-walls",
                                            "hk-core",   "hk-variation", "mukai-flop", "plot"};
  return all;
}

// Plain indented text view of a report.
inline void render_text(const json& j, std::ostringstream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar_array = [](const json& a) {
    for (const auto& x : a)
      if (x.is_structured()) return false;
    return true;
  };
  auto scalar = [](const json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (!v.is_structured()) out << pad << k << ": " << scalar(v) << "\n";
      else if (v.is_array() && scalar_array(v)) {
        out << pad << k << ": [";
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar(v[i]);
        out << "]\n";
      } else {
        out << pad << k << ":\n";
        render_text(v, out, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_array() && scalar_array(v)) {
        out << pad << "- [";
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar(v[i]);
        out << "]\n";
      } else if (v.is_structured()) {
        out << pad << "-\n";
        render_text(v, out, indent + 2);
      } else {
        out << pad << "- " << scalar(v) << "\n";
      }
    }
  } else {
    out << pad << scalar(j) << "\n";
  }
}

namespace detail {

inline const RatVector& need(const std::optional<RatVector>& v, const char* key) {
  if (!v) io::bad(std::string("this command needs '") + key + "'");
  return *v;
}

inline std::size_t resolve_cap(const Problem& p, const Options& opt) {
  if (opt.cap) return *opt.cap;
  if (p.cap) return *p.cap;
  if (const char* env = std::getenv("TORICVAR_CAP")) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    io::bad("TORICVAR_CAP must be a nonnegative integer");
  }
  return default_sweep_cap;
}

// Lift and moment value from exactly one of `lift` / `alpha`.
inline std::pair<RatVector, RatVector> lift_and_alpha(const QuotientData& q, const Problem& p) {
  if (p.lift.has_value() == p.alpha.has_value()) io::bad("give exactly one of 'lift' and 'alpha'");
  if (p.lift) {
    if (p.lift->size() != q.d()) throw Error(ErrorCode::LengthMismatch, "lift length differs from d");
    return {*p.lift, moment_value(q, *p.lift)};
  }
  return {lift_of(q, *p.alpha), *p.alpha};
}

inline OrientedArrangement oriented(const QuotientData& q, const Problem& p, const RatVector& lift) {
  return arrangement_from_lift(q, lift, p.orientation.value_or(std::vector<int>{}));
}

inline json run_command(const std::string& cmd, const Problem& p, const Options& opt, std::optional<std::string>& svg) {
  const QuotientData q = build_quotient(p.fan);
  json r = json::object();
  if (cmd == "quotient") {
    r["quotient"] = io::encode(q);
    r["regularity"] = io::encode(check_regular_fan(p.fan));
  } else if (cmd == "arrangement") {
    auto [lift, alpha] = lift_and_alpha(q, p);
    OrientedArrangement arr = oriented(q, p, lift);
    r["alpha"] = io::encode(alpha);
    r["lift"] = io::encode(lift);
    r["arrangement"] = io::encode(arr);
    r["polytope"] = io::encode(polytope_of(arr));
    r["classification"] = io::encode(classify(arr));
    if (arr.n <= 2) svg = svg::plot_arrangement(arr);
  } else if (cmd == "chambers") {
    r["m_rank"] = q.m_rank;
    r["walls"] = io::encode(enumerate_walls(q));
    r["chambers"] = io::encode(enumerate_chambers(q));
    if (q.m_rank >= 1 && q.m_rank <= 2) svg = svg::plot_chambers(q);
  } else if (cmd == "locate") {
    const RatVector& alpha = need(p.alpha, "alpha");
    const auto walls = enumerate_walls(q);
    r["alpha"] = io::encode(alpha);
    r["location"] = io::encode(locate(q, walls, alpha));
    r["walls"] = io::encode(walls);
  } else if (cmd == "variation") {
    r["report"] = io::encode(natural_morphism(q, need(p.alpha_plus, "alpha_plus"), need(p.alpha1, "alpha1")));
  } else if (cmd == "flip") {
    r["report"] = io::encode(flip_report(q, need(p.alpha_plus, "alpha_plus"), need(p.alpha_minus, "alpha_minus")));
  } else if (cmd == "fibred") {
    auto fd = is_fibred(q, need(p.alpha, "alpha"));
    r["fibred"] = fd.has_value();
    r["decomposition"] = io::encode(fd);
  } else if (cmd == "hk-walls") {
    r["walls"] = io::encode(hk_walls(q));
    r["chambers"] = io::encode(hk_chambers(q));
    if (q.m_rank >= 1 && q.m_rank <= 2) svg = svg::plot_hk_chambers(q);
  } else if (cmd == "hk-core") {
    auto [lift, alpha] = lift_and_alpha(q, p);
    const std::size_t cap = resolve_cap(p, opt);
    if (!hk_locate(hk_walls(q), alpha).regular()) throw Error(ErrorCode::SingularAlpha, "alpha lies on a hk wall");
    OrientedArrangement arr = arrangement_from_lift(q, lift);
    auto comps = extended_core_of(arr, cap);
    std::size_t bounded = 0;
    for (const auto& c : comps) bounded += c.bounded;
    r["alpha"] = io::encode(alpha);
    r["lift"] = io::encode(lift);
    r["component_count"] = comps.size();
    r["bounded_count"] = bounded;
    r["components"] = io::encode(comps);
    if (arr.n <= 2) svg = svg::plot_arrangement(arr);
  } else if (cmd == "hk-variation") {
    r["report"] = io::encode(
        hk_natural_morphism(q, need(p.alpha_plus, "alpha_plus"), need(p.alpha1, "alpha1"), resolve_cap(p, opt)));
  } else if (cmd == "mukai-flop") {
    r["report"] = io::encode(
        mukai_flop(q, need(p.alpha_plus, "alpha_plus"), need(p.alpha_minus, "alpha_minus"), resolve_cap(p, opt)));
  } else if (cmd == "plot") {
    r["target"] = p.plot;
    if (p.plot == "arrangement") {
      auto [lift, alpha] = lift_and_alpha(q, p);
      svg = svg::plot_arrangement(oriented(q, p, lift));
    } else if (p.plot == "chambers") {
      svg = svg::plot_chambers(q);
    } else if (p.plot == "hk-chambers") {
      svg = svg::plot_hk_chambers(q);
    } else {
      io::bad("unknown plot target '" + p.plot + "'");
    }
  }
  return r;
}

}  // namespace detail

inline Outcome run(const std::string& command, const std::string& problem_text, const Options& opt = {}) {
  Outcome out;
  json report;
  try {
    if (std::find(commands().begin(), commands().end(), command) == commands().end())
      io::bad("unknown command '" + command + "'");
    json input;
    try {
      input = json::parse(problem_text);
    } catch (const json::parse_error& e) {
      io::bad(std::string("malformed JSON: ") + e.what());
    }
    Problem p = parse_problem(input);
    json result = detail::run_command(command, p, opt, out.svg);
    report = {{"command", command}, {"result", std::move(result)}};
  } catch (const Error& e) {
    out.exit_code = is_input_error(e.code()) ? 2 : 3;
    out.diagnostic = std::string("toricvar: error ") + e.what();
    out.svg.reset();
    report = {{"command", command}, {"error", {{"code", error_name(e.code())}, {"message", e.what()}}}};
  }
  if (opt.text) {
    std::ostringstream s;
    render_text(report, s, 0);
    out.report = s.str();
  } else {
    out.report = report.dump(2) + "\n";
  }
  return out;
}

}  // namespace toricvar::cli
