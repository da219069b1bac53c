#include "cohom/atlas.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cohom {
namespace {

using Json = nlohmann::ordered_json;

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json basis_json(const Subspace& s) {
  Json out = Json::array();
  for (const auto& v : s.vectors()) out.push_back(vector_json(v));
  return out;
}

Json spec_json(const ActionSpec& spec) {
  Json out;
  out["kind"] = kind_name(spec.kind);
  Json data;
  std::visit(
      [&data](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, FhData>) {
          data["line"] = vector_json(d.line);
        } else if constexpr (std::is_same_v<T, FsData>) {
          data["root"] = d.root + 1;
          data["line"] = vector_json(d.line);
        } else if constexpr (std::is_same_v<T, CeiData>) {
          data["phi"] = mask_label(d.phi);
          data["name"] = d.name;
          data["h_phi_dim"] = d.h_phi.dim();
        } else if constexpr (std::is_same_v<T, CerData>) {
          data["left"] = d.left + 1;
          data["right"] = d.right + 1;
          data["factor_level"] = d.factor_level;
          data["theta_equivariant"] = d.theta_equivariant;
          data["h_phi_dim"] = d.h_phi.dim();
        } else if constexpr (std::is_same_v<T, NcData>) {
          data["removed"] = d.removed + 1;
          data["v"] = basis_json(d.v);
          data["theta_dual_holds"] = d.theta_dual_holds;
        } else if constexpr (std::is_same_v<T, ProductData>) {
          data["factor"] = d.factor + 1;
          data["offset"] = d.offset;
          data["inner"] = spec_json(*d.inner);
        }
      },
      spec.data);
  out["data"] = std::move(data);
  out["algebra_dim"] = spec.algebra.dim();
  out["algebra_basis"] = basis_json(spec.algebra);
  return out;
}

Json report_json(const VerificationReport& r) {
  Json out;
  out["dim_m"] = r.dim_m;
  out["orbit_dim_at_o"] = r.orbit_dim_at_o;
  out["codim_at_o"] = r.codim_at_o;
  out["cohomogeneity"] = r.cohomogeneity();
  out["certainty"] = to_string(r.slice.certainty);
  out["normal_dim"] = r.slice.normal_dim;
  out["isotropy_dim"] = r.slice.isotropy_dim;
  out["slice_max_rank"] = r.slice.max_rank;
  out["totally_geodesic"] = to_string(r.totally_geodesic);
  out["tg_scope"] = r.tg_scope;
  out["nc1"] = to_string(r.nc1);
  out["nc2"] = to_string(r.nc2);
  out["nc2_certificate"] = to_string(r.nc2_certificate);
  Json notes = Json::array();
  for (const auto& n : r.notes) notes.push_back({{"name", n.name}, {"passed", n.passed}});
  out["notes"] = std::move(notes);
  return out;
}

Json oracle_json(const OracleReport& o) {
  Json out;
  out["n"] = o.n;
  out["j"] = o.j;
  out["grade_one_dim"] = o.grade_one_dim;
  out["subsets"] = o.subsets;
  out["probes"] = o.probes;
  out["rejected_small"] = o.rejected_small;
  out["passing"] = o.passing;
  out["unmatched"] = o.unmatched;
  Json cands = Json::array();
  for (const auto& c : o.candidates) {
    Json j;
    j["source"] = c.source;
    if (c.source == "coordinate") j["coords"] = c.coords;
    j["dim"] = c.v.dim();
    j["nc1"] = to_string(c.nc1);
    j["nc2"] = to_string(c.nc2);
    j["nc2_certificate"] = to_string(c.nc2_certificate);
    j["match"] = c.match;
    cands.push_back(std::move(j));
  }
  out["candidates"] = std::move(cands);
  return out;
}

std::vector<std::string> features(const RunConfig& c) {
  std::vector<std::string> out;
  if (c.su1n) out.emplace_back("su1n");
  return out;
}

/// Own summary of the orbit-equivalence classes on a product of two real
/// hyperbolic spaces.
std::string rh_pair_note(std::size_t n, std::size_t m) {
  std::ostringstream s;
  s << "Moduli on RH^" << n << " x RH^" << m << " up to orbit equivalence: ";
  if (n == m) {
    s << "factor actions with a totally geodesic singular orbit RH^k, k = 0.." << n - 1
      << ", one class per k since swapping the isometric factors identifies the two placements; "
         "FH lines form RP^1 modulo the swap; one diagonal CER class, independent of sigma.";
  } else {
    s << "factor actions with a totally geodesic singular orbit RH^k, k = 0.." << n - 1 << " in the first factor and "
      << "k = 0.." << m - 1 << " in the second; FH lines form RP^1; no CER class.";
  }
  s << " FS and NC entries are orbit equivalent to factor actions of this list.";
  return s.str();
}

bool all_rank_one(const SpaceSpec& spec) {
  for (const auto& f : spec.factors)
    if (f.kind == FactorKind::sl) return false;
  return true;
}

std::string cell(std::string s) {
  for (auto& c : s)
    if (c == '|') c = '/';
  return s;
}

}  // namespace

SpaceParseError::SpaceParseError(std::size_t offset, const std::string& what)
    : std::invalid_argument("at byte " + std::to_string(offset) + ": " + what), offset_(offset) {}

SpaceSpec parse_space(std::string_view text, const SpaceBounds& bounds) {
  SpaceSpec out;
  out.source = std::string(text);
  std::size_t pos = 0;
  auto expect = [&](char c) {
    if (pos >= text.size()) throw SpaceParseError(pos, std::string("expected '") + c + "', got end of input");
    if (text[pos] != c)
      throw SpaceParseError(pos, std::string("expected '") + c + "', got '" + text[pos] + "'");
    ++pos;
  };
  for (;;) {
    const std::size_t name_start = pos;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
    const std::string_view name = text.substr(name_start, pos - name_start);
    if (name.empty()) {
      if (pos >= text.size()) throw SpaceParseError(pos, "expected a factor name, got end of input");
      throw SpaceParseError(pos, std::string("expected a factor name, got '") + text[pos] + "'");
    }
    FactorSpec f;
    std::size_t lo = 0, hi = 0;
    if (name == "sl") {
      f.kind = FactorKind::sl;
      lo = bounds.sl_min;
      hi = bounds.sl_max;
    } else if (name == "rh") {
      f.kind = FactorKind::rh;
      lo = bounds.rh_min;
      hi = bounds.rh_max;
    } else if (name == "ch") {
      f.kind = FactorKind::ch;
      lo = bounds.ch_min;
      hi = bounds.ch_max;
    } else {
      throw SpaceParseError(name_start, "unknown factor name '" + std::string(name) + "'");
    }
    expect('(');
    const std::size_t int_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == int_start) {
      if (pos >= text.size()) throw SpaceParseError(pos, "expected an integer, got end of input");
      throw SpaceParseError(pos, std::string("expected an integer, got '") + text[pos] + "'");
    }
    const std::string digits(text.substr(int_start, pos - int_start));
    const std::size_t value = digits.size() > 6 ? hi + 1 : std::stoul(digits);
    if (value < lo || value > hi)
      throw SpaceParseError(int_start, std::string(name) + " parameter " + digits + " outside " + std::to_string(lo) +
                                           ".." + std::to_string(hi));
    f.param = value;
    expect(')');
    out.factors.push_back(f);
    if (out.factors.size() > bounds.max_factors)
      throw SpaceParseError(name_start, "more than " + std::to_string(bounds.max_factors) + " factors");
    if (pos == text.size()) break;
    expect('*');
  }
  return out;
}

RunResult run(const SpaceSpec& spec, const RunConfig& config) {
  if (spec.factors.empty()) throw std::invalid_argument("run: empty space");
  CatalogOptions opts;
  opts.seed = config.seed;
  opts.samples = config.samples;
  opts.nc_search = config.nc_search;
  opts.su1n = config.su1n;

  RunResult out;
  if (spec.factors.size() == 1 && spec.factors[0].kind == FactorKind::sl) {
    out.catalog = enumerate_sl(spec.factors[0].param - 1, opts);
  } else if (all_rank_one(spec)) {
    out.catalog = enumerate_rank1_product(spec.factors, opts);
    if (spec.factors.size() == 2 && spec.factors[0].kind == FactorKind::rh && spec.factors[1].kind == FactorKind::rh)
      out.catalog.notes.push_back(rh_pair_note(spec.factors[0].param, spec.factors[1].param));
  } else {
    out.catalog = enumerate_mixed_product(spec.factors, opts);
  }
  if (config.nc_search && !(spec.factors.size() == 1 && spec.factors[0].kind == FactorKind::sl))
    out.catalog.notes.push_back("nilpotent oracle search applies to sl(k) only; skipped");

  out.output = config.format == OutputFormat::json ? render_json(out.catalog, spec, config)
                                                   : render_markdown(out.catalog, spec, config);
  if (config.output_path) {
    std::ofstream f(*config.output_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + *config.output_path + " for writing");
    f << out.output;
    if (!f) throw std::runtime_error("write to " + *config.output_path + " failed");
  }
  out.exit_code = out.catalog.passed() ? 0 : 1;
  return out;
}

std::string render_json(const Catalog& catalog, const SpaceSpec& spec, const RunConfig& config) {
  Json root;
  root["schema"] = 1;
  root["space"] = spec.source;
  root["model"] = catalog.space;
  root["config"] = {{"seed", config.seed},
                    {"samples", config.samples},
                    {"nc_search", config.nc_search},
                    {"features", features(config)}};
  Json entries = Json::array();
  for (const auto& e : catalog.entries) {
    Json j;
    j["label"] = e.label;
    j["kind"] = kind_name(e.spec->kind);
    j["phi"] = e.phi;
    j["codim"] = e.report.codim_at_o;
    j["expected_codim"] = e.expected_codim;
    j["h"] = e.h_name;
    j["boundary"] = e.boundary;
    j["comment"] = e.comment;
    j["report"] = report_json(e.report);
    j["spec"] = spec_json(*e.spec);
    entries.push_back(std::move(j));
  }
  root["entries"] = std::move(entries);
  Json ids = Json::array();
  for (const auto& i : catalog.identities) ids.push_back({{"name", i.name}, {"passed", i.passed}, {"detail", i.detail}});
  root["identities"] = std::move(ids);
  root["notes"] = catalog.notes;
  if (!catalog.oracle.empty()) {
    Json o = Json::array();
    for (const auto& r : catalog.oracle) o.push_back(oracle_json(r));
    root["oracle"] = std::move(o);
  }
  root["passed"] = catalog.passed();
  return root.dump(2) + "\n";
}

std::string render_markdown(const Catalog& catalog, const SpaceSpec& spec, const RunConfig& config) {
  std::ostringstream s;
  s << "# Cohomogeneity one actions on " << spec.source << "\n\n";
  s << "seed " << config.seed << ", samples " << config.samples;
  for (const auto& f : features(config)) s << ", feature " << f;
  s << "\n\n";
  s << "| label | h | Phi | B_Phi | codim | comments |\n";
  s << "|---|---|---|---|---|---|\n";
  for (const auto& e : catalog.entries) {
    std::string comment = e.comment;
    auto add = [&comment](const std::string& x) {
      if (!comment.empty()) comment += "; ";
      comment += x;
    };
    add("cohomogeneity 1 (" + to_string(e.report.slice.certainty) + ")");
    if (e.report.totally_geodesic == TriState::yes) add("totally geodesic singular orbit (" + e.report.tg_scope + ")");
    if (e.report.nc1 != TriState::not_checked)
      add("NC1 " + to_string(e.report.nc1) + ", NC2 " + to_string(e.report.nc2) + " [" +
          to_string(e.report.nc2_certificate) + "]");
    s << "| " << cell(e.label) << " | " << cell(e.h_name) << " | " << e.phi << " | " << e.boundary << " | "
      << e.report.codim_at_o << " | " << cell(comment) << " |\n";
  }
  std::size_t failed = 0;
  for (const auto& i : catalog.identities) failed += i.passed ? 0 : 1;
  s << "\n## Identities\n\n" << catalog.identities.size() - failed << " of " << catalog.identities.size()
    << " passed\n";
  for (const auto& i : catalog.identities)
    if (!i.passed) s << "\n- FAILED " << i.name << ": " << i.detail;
  if (failed > 0) s << "\n";
  if (!catalog.notes.empty()) {
    s << "\n## Notes\n\n";
    for (const auto& n : catalog.notes) s << "- " << n << "\n";
  }
  if (!catalog.oracle.empty()) {
    s << "\n## Nilpotent construction oracle\n\n";
    s << "| j | dim n^1 | subsets | probes | rejected | passing | unmatched |\n";
    s << "|---|---|---|---|---|---|---|\n";
    std::size_t standalone = 0;
    for (const auto& o : catalog.oracle) {
      s << "| " << o.j << " | " << o.grade_one_dim << " | " << o.subsets << " | " << o.probes << " | "
        << o.rejected_small << " | " << o.passing << " | " << o.unmatched << " |\n";
      standalone += o.unmatched;
    }
    s << "\nStandalone NC rows: " << standalone << "\n";
  }
  return s.str();
}

}  // namespace cohom
