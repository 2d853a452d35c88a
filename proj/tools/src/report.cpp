#include "knotguts_cli/report.hpp"

#include "knotguts/states.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace knotguts::cli {

double round12(double v) {
  if (!std::isfinite(v)) return v;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

json rational_json(const Rational& v) {
  if (is_integer(v)) return big_json(numerator(v));
  return to_string(v);
}

json error_json(const Error& e) {
  json j;
  j["code"] = std::string(error_code_name(e.code()));
  j["kind"] = error_kind(e.code()) == ErrorKind::Input ? "input" : "hypothesis";
  j["message"] = e.what();
  if (e.position()) j["position"] = *e.position();
  return j;
}

json diagram_json(const LinkDiagram& d) {
  auto twist = twist_regions(d);
  auto prime = primeness(d);
  json j;
  j["crossings"] = d.crossing_count();
  j["components"] = d.component_count();
  j["writhe"] = d.writhe();
  j["faces"] = d.face_count();
  j["twist_number"] = twist.twist_number;
  j["twist_reduced"] = twist.twist_reduced;
  json regions = json::array();
  for (const auto& r : twist.regions) regions.push_back(r);
  j["twist_regions"] = regions;
  j["prime"] = prime.is_prime;
  j["nugatory"] = prime.has_nugatory;
  j["turaev_genus"] = turaev_genus(d);
  return j;
}

json state_block_json(const LinkDiagram& d) {
  auto h = resolve(d, all_a(d));
  auto g = state_graph(h);
  auto reduced = reduce(g);
  auto e = euler_data(g, reduced);
  json j;
  j["circles"] = h.circle_count;
  j["adequate"] = is_adequate(g);
  j["homogeneous"] = homogeneity(h).homogeneous;
  j["vertices"] = e.vertices;
  j["edges"] = e.edges;
  j["reduced_edges"] = e.reduced_edges;
  j["chi"] = e.chi;
  j["chi_reduced"] = e.chi_reduced;
  j["chi_minus"] = e.chi_minus;
  j["chi_plus"] = e.chi_plus;
  j["bridges"] = e.bridges;
  j["orientable"] = is_bipartite(g);
  j["reduced_tree"] = is_tree(reduced);
  j["essential"] = essential_state_surface(d, all_a(d));
  auto regions = polyhedral_regions(d, h);
  auto census = nonprime_census(regions);
  j["polyhedral_regions"] = regions.size();
  j["nonprime_arcs"] = census.arc_count;
  if (is_adequate(g)) {
    auto twist = twist_regions(d);
    auto counts = spanning_counts(g, reduced, twist);
    j["b"] = counts.bigons;
    j["m"] = counts.excess;
    j["spanning_edges"] = counts.spanning;
    auto loops = two_edge_loops(g, twist);
    int same = 0;
    for (const auto& l : loops) same += l.same_twist_region ? 1 : 0;
    j["two_edge_loops"] = {{"total", loops.size()}, {"same_twist_region", same}};
  }
  return j;
}

json guts_json(const GutsInterval& g) {
  return {{"lo", g.lo}, {"hi", g.hi}, {"exact", g.exact}, {"tag", guts_tag_name(g.tag)}};
}

json jones_json(const JonesReport& r) {
  json coeffs = json::object();
  for (const auto& [deg, c] : r.polynomial.half_degrees().terms()) coeffs[degree_label(deg)] = big_json(c);
  json j;
  j["polynomial"] = to_string(r.polynomial);
  j["coefficients"] = coeffs;
  j["max_degree"] = degree_label(r.max_half_degree);
  j["min_degree"] = degree_label(r.min_half_degree);
  j["alpha"] = big_json(r.alpha);
  j["beta"] = big_json(r.beta);
  j["alpha_prime"] = big_json(r.alpha_prime);
  j["beta_prime"] = big_json(r.beta_prime);
  j["epsilon"] = r.epsilon ? 1 : 0;
  j["epsilon_prime"] = r.epsilon_prime ? 1 : 0;
  j["value_at_one"] = big_json(r.value_at_one);
  auto ob = adequacy_obstruction(r);
  j["obstruction"] = {{"a_side_possible", ob.a_side_possible}, {"b_side_possible", ob.b_side_possible}};
  return j;
}

json bounds_json(const VolumeBounds& b) {
  json j;
  j["lower"] = round12(b.lower);
  j["upper"] = b.upper ? json(round12(*b.upper)) : json(nullptr);
  j["upper_strict"] = b.upper_strict;
  j["methods"] = b.methods;
  j["assumptions"] = b.assumptions;
  j["flags"] = b.flags;
  j["notes"] = b.notes;
  if (b.jones_form) {
    j["jones_form"] = {{"lower", round12(b.jones_form->lower)},
                       {"upper", round12(b.jones_form->upper)},
                       {"upper_strict", b.jones_form->upper_strict},
                       {"source", b.jones_form->source}};
  }
  return j;
}

json normal_form_json(const MontesinosNormalForm& n) {
  json slopes = json::array(), fractional = json::array(), cfs = json::array();
  for (const auto& q : n.slopes) {
    slopes.push_back(to_string(q));
    cfs.push_back(continued_fraction(q));
  }
  for (const auto& q : n.fractional_parts) fractional.push_back(to_string(q));
  json j;
  j["slopes"] = slopes;
  j["text"] = to_string(MontesinosVector{n.slopes});
  j["positive_count"] = n.positive_count;
  j["negative_count"] = n.negative_count;
  j["sum"] = to_string(n.sum);
  j["fractional_parts"] = fractional;
  j["continued_fractions"] = cfs;
  return j;
}

json montesinos_report_json(const MontesinosReport& r) {
  json j;
  j["normal_form"] = normal_form_json(r.normal_form);
  j["r"] = r.normal_form.positive_count;
  j["s"] = r.normal_form.negative_count;
  j["crossings"] = r.crossings;
  j["twist_number"] = r.twist_number;
  j["components"] = r.components;
  j["half_count"] = r.half_count;
  j["a_adequate"] = r.a_adequate;
  j["b_adequate"] = r.b_adequate;
  j["chi_reduced_a"] = r.chi_reduced_a;
  j["chi_reduced_b"] = r.chi_reduced_b;
  j["hyperbolic_sufficient"] = r.hyperbolic_sufficient;
  if (r.predicted_a_adequate) j["predicted_a_adequate"] = *r.predicted_a_adequate;
  if (r.predicted_b_adequate) j["predicted_b_adequate"] = *r.predicted_b_adequate;
  if (r.guts_a) j["guts_a"] = guts_json(*r.guts_a);
  else j["guts_a"] = {{"unavailable", "diagram is not A-adequate"}};
  if (r.guts_b) j["guts_b"] = guts_json(*r.guts_b);
  else j["guts_b"] = {{"unavailable", "diagram is not B-adequate"}};
  const std::string why = "needs r >= 3 and s >= 3";
  if (r.identity_holds) j["identity_holds"] = *r.identity_holds;
  else j["identity_holds"] = {{"unavailable", why}};
  if (r.inequality_holds) j["inequality_holds"] = *r.inequality_holds;
  else j["inequality_holds"] = {{"unavailable", why}};
  return j;
}

json taxonomy_json(const LoopTaxonomy& t) {
  json j;
  j["twist_loops"] = {{"predicted", t.twist_loops_predicted}, {"found", t.twist_loops_found}};
  j["negative_tangle_loops"] = {{"predicted", t.negative_tangles_predicted}, {"found", t.negative_tangles_found}};
  j["two_positive_loops"] = {{"predicted", t.two_positive_predicted}, {"found", t.two_positive_found}};
  j["unexplained"] = t.unexplained;
  j["matches"] = t.matches;
  return j;
}

std::optional<MontesinosHint> hint_a(const LoadedInput& in) {
  if (!in.montesinos) return std::nullopt;
  return MontesinosHint{true, in.montesinos->positive_count};
}

std::optional<MontesinosHint> hint_b(const LoadedInput& in) {
  if (!in.montesinos) return std::nullopt;
  return MontesinosHint{true, in.montesinos->negative_count};
}

json guts_pair_json(const LoadedInput& in) {
  json j;
  try {
    j["A"] = guts_json(guts_interval(in.diagram, hint_a(in)));
  } catch (const Error& e) {
    j["A"] = {{"error", error_json(e)}};
  }
  try {
    j["B"] = guts_json(guts_interval_b(in.diagram, hint_b(in)));
  } catch (const Error& e) {
    j["B"] = {{"error", error_json(e)}};
  }
  return j;
}

json volume_json(const LoadedInput& in, const BracketOptions& opts) {
  json j = json::object();
  auto attempt = [&](const std::string& key, auto&& fn) {
    try {
      j[key] = bounds_json(fn());
    } catch (const Error& e) {
      j[key] = {{"error", error_json(e)}};
    }
  };
  attempt("general", [&] { return general_bounds(in.diagram, opts); });
  if (in.braid) attempt("positive_braid", [&] { return positive_braid_bounds(*in.braid, opts); });
  if (in.montesinos) attempt("montesinos", [&] { return montesinos_bounds(*in.montesinos, opts); });
  return j;
}

namespace {

json fiber_json(const LinkDiagram& d) {
  try {
    auto f = fiber_report(d, all_a(d));
    json j;
    j["is_fiber"] = f.is_fiber;
    j["orientable"] = f.orientable;
    if (f.genus) j["genus"] = rational_json(*f.genus);
    return j;
  } catch (const Error& e) {
    return {{"error", error_json(e)}};
  }
}

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

}  // namespace

json fiber_pair_json(const LinkDiagram& d) { return {{"A", fiber_json(d)}, {"B", fiber_json(mirror(d))}}; }

json analysis_json(const LoadedInput& in, const BracketOptions& opts) {
  const LinkDiagram& d = in.diagram;
  const LinkDiagram m = mirror(d);
  json j;
  j["input"] = {{"kind", kind_name(in.kind)}, {"text", in.text}};
  if (!in.name.empty()) j["input"]["name"] = in.name;
  j["diagram"] = diagram_json(d);
  j["states"] = {{"A", state_block_json(d)}, {"B", state_block_json(m)}};
  j["fiber"] = fiber_pair_json(d);
  j["guts"] = guts_pair_json(in);
  if (in.montesinos) j["montesinos"] = montesinos_report_json(montesinos_report(*in.montesinos));

  json warnings = json::array();
  std::vector<std::string> failures;
  std::optional<JonesReport> jr;
  try {
    jr = jones_report(jones_polynomial(d, opts));
    json jj = jones_json(*jr);
    if (j["states"]["A"]["adequate"].get<bool>()) {
      auto s = stable_identity_a(d, *jr);
      jj["identity_a"] = {{"holds", s.holds}, {"expected", big_json(s.expected)}, {"observed", big_json(s.observed)}};
      if (!s.holds) failures.push_back("A-adequate but |beta'| != 1 - chi(G'_A) or |alpha'| != 1");
    }
    if (j["states"]["B"]["adequate"].get<bool>()) {
      auto s = stable_identity_b(d, *jr);
      jj["identity_b"] = {{"holds", s.holds}, {"expected", big_json(s.expected)}, {"observed", big_json(s.observed)}};
      if (!s.holds) failures.push_back("B-adequate but |beta| != 1 - chi(G'_B) or |alpha| != 1");
    }
    j["jones"] = jj;
    BigInt expected = 1;
    for (int i = 1; i < d.component_count(); ++i) expected *= -2;
    if (jr->value_at_one != expected) failures.push_back("J(1) != (-2)^(#K-1)");
  } catch (const Error& e) {
    j["jones"] = {{"error", error_json(e)}};
    warnings.push_back(std::string("Jones polynomial skipped: ") + e.what());
  }

  // fiber => guts exactly 0 => beta' = 0, and exact guts agree with the Jones side.
  for (const std::string side : {"A", "B"}) {
    const json& fib = j["fiber"][side];
    const json& guts = j["guts"][side];
    const bool fibered = fib.contains("is_fiber") && fib["is_fiber"].get<bool>();
    if (fibered && !(guts.contains("exact") && guts["exact"].get<bool>() && guts["hi"].get<long long>() == 0))
      failures.push_back(side + ": fibered but guts interval is not exactly 0");
    if (!jr || !guts.contains("exact") || !guts["exact"].get<bool>()) continue;
    const BigInt& b = side == "A" ? jr->beta_prime : jr->beta;
    const bool eps = side == "A" ? jr->epsilon_prime : jr->epsilon;
    if (fibered && b != 0) failures.push_back(side + ": fibered but the stable coefficient is nonzero");
    const std::string tag = guts["tag"].get<std::string>();
    if (tag == "OnlyBigonLoops" || tag == "Montesinos") {
      BigInt predicted = abs_big(b) - 1 + (eps ? 1 : 0);
      if (predicted != BigInt(guts["hi"].get<long long>()))
        failures.push_back(side + ": exact guts differs from |beta| - 1 + epsilon");
    }
  }

  j["volume"] = volume_json(in, opts);
  for (const auto& [method, b] : j["volume"].items())
    if (b.contains("flags"))
      for (const auto& f : b["flags"]) warnings.push_back(method + ": " + f.get<std::string>());
  if (j["diagram"]["nugatory"].get<bool>()) warnings.push_back("diagram has a nugatory crossing");
  j["warnings"] = warnings;
  j["consistency"] = {{"passed", failures.empty()}, {"failures", failures}};
  return j;
}

namespace {

void render(const json& j, int indent, std::ostringstream& out) {
  const std::string pad(indent, ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << pad << key << ":\n";
      render(value, indent + 2, out);
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << pad << key << ":\n";
      for (const auto& item : value) {
        out << pad << "  -\n";
        render(item, indent + 4, out);
      }
    } else if (value.is_string()) {
      out << pad << key << ": " << value.get<std::string>() << "\n";
    } else {
      out << pad << key << ": " << value.dump() << "\n";
    }
  }
}

}  // namespace

std::string to_text(const json& j) {
  std::ostringstream out;
  if (j.is_object()) render(j, 0, out);
  else if (j.is_array()) {
    for (const auto& item : j) {
      out << "-\n";
      if (item.is_object()) render(item, 2, out);
      else out << "  " << (item.is_string() ? item.get<std::string>() : item.dump()) << "\n";
    }
  } else {
    out << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
  return out.str();
}

}  // namespace knotguts::cli
