#include "gelfand/io.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gelfand/version.hpp"

namespace gelfand {

namespace {

json exponents_json(const MultiIndex& I) {
  json a = json::array();
  for (int j = 0; j < I.size(); ++j) a.push_back(I[j]);
  return a;
}

MultiIndex exponents_from_json(const json& a) {
  if (!a.is_array()) throw ValidationError("'exp' must be an array of integers");
  std::vector<int> e;
  for (const auto& v : a) {
    if (!v.is_number_integer() || v.get<long>() < 0)
      throw ValidationError("'exp' entries must be non-negative integers");
    e.push_back(v.get<int>());
  }
  return MultiIndex(std::move(e));
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) {
        ok = true;
        break;
      }
    if (!ok) throw ValidationError("unknown key '" + it.key() + "' in " + where);
  }
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

json poly_to_json(const PolyQ& p) {
  json terms = json::array();
  for (const auto& [I, c] : p.terms())
    terms.push_back({{"exp", exponents_json(I)}, {"coeff", rat_to_string(c)}});
  return {{"n", p.nvars()}, {"terms", terms}};
}

json poly_to_json(const PolyG& p) {
  json terms = json::array();
  for (const auto& [I, c] : p.terms())
    terms.push_back(
        {{"exp", exponents_json(I)},
         {"coeff", json::array({rat_to_string(c.re), rat_to_string(c.im)})}});
  return {{"n", p.nvars()}, {"terms", terms}};
}

json poly_to_json(const PolyC& p) {
  json terms = json::array();
  for (const auto& [I, c] : p.terms())
    terms.push_back(
        {{"exp", exponents_json(I)}, {"coeff", json::array({c.real(), c.imag()})}});
  return {{"n", p.nvars()}, {"terms", terms}};
}

PolyQ poly_rat_from_json(const json& j) {
  reject_unknown_keys(j, {"n", "terms"}, "polynomial spec");
  if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<int>() <= 0)
    throw ValidationError("polynomial spec needs a positive integer 'n'");
  PolyQ p(j["n"].get<int>());
  if (!j.contains("terms") || !j["terms"].is_array())
    throw ValidationError("polynomial spec needs a 'terms' array");
  for (const auto& t : j["terms"]) {
    reject_unknown_keys(t, {"exp", "coeff"}, "polynomial term");
    if (!t.contains("exp") || !t.contains("coeff"))
      throw ValidationError("polynomial term needs 'exp' and 'coeff'");
    if (!t["coeff"].is_string())
      throw ValidationError("rational polynomial coefficients must be fraction strings");
    MultiIndex I = exponents_from_json(t["exp"]);
    if (I.size() != p.nvars()) throw ValidationError("term arity differs from 'n'");
    p.add_term(std::move(I), parse_rat(t["coeff"].get<std::string>()));
  }
  return p;
}

json group_to_json(const CompactGroup& g) {
  json j;
  j["n"] = g.n();
  switch (g.kind()) {
    case CompactGroup::Kind::finite: {
      j["kind"] = "finite";
      json mats = json::array();
      for (const MatQ& m : g.elements()) {
        json rows = json::array();
        for (int r = 0; r < m.rows(); ++r) {
          json row = json::array();
          for (int c = 0; c < m.cols(); ++c) row.push_back(rat_to_string(m(r, c)));
          rows.push_back(row);
        }
        mats.push_back(rows);
      }
      j["matrices"] = mats;
      break;
    }
    case CompactGroup::Kind::so2:
      j["kind"] = "so2";
      j["quadrature_points"] = g.quadrature_points();
      break;
    case CompactGroup::Kind::so3:
      j["kind"] = "so3";
      j["resolution"] = g.resolution();
      j["rule"] = g.rule();
      break;
  }
  return j;
}

CompactGroup group_from_json(const json& j) {
  reject_unknown_keys(j, {"n", "kind", "matrices", "quadrature_points", "resolution", "rule"},
                      "group spec");
  if (!j.contains("kind") || !j["kind"].is_string())
    throw ValidationError("group spec needs a 'kind' string");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw ValidationError("group spec needs an integer 'n'");
  RawGroup raw;
  raw.kind = j["kind"].get<std::string>();
  raw.n = j["n"].get<int>();
  if (raw.kind == "finite") {
    if (!j.contains("matrices") || !j["matrices"].is_array())
      throw ValidationError("finite group spec needs a 'matrices' array");
    for (const auto& mj : j["matrices"]) {
      if (!mj.is_array() || static_cast<int>(mj.size()) != raw.n)
        throw ValidationError("group matrix must have n rows");
      MatQ m(raw.n, raw.n);
      for (int r = 0; r < raw.n; ++r) {
        const auto& rowj = mj[r];
        if (!rowj.is_array() || static_cast<int>(rowj.size()) != raw.n)
          throw ValidationError("group matrix must have n columns");
        for (int c = 0; c < raw.n; ++c) {
          if (!rowj[c].is_string())
            throw ValidationError("group matrix entries must be fraction strings");
          m(r, c) = parse_rat(rowj[c].get<std::string>());
        }
      }
      raw.matrices.push_back(std::move(m));
    }
  } else {
    if (j.contains("matrices"))
      throw ValidationError("'matrices' is only valid for finite groups");
  }
  if (j.contains("quadrature_points")) {
    if (raw.kind != "so2") throw ValidationError("'quadrature_points' is only valid for so2");
    raw.quadrature_points = j["quadrature_points"].get<int>();
  }
  if (j.contains("resolution")) {
    if (raw.kind != "so3") throw ValidationError("'resolution' is only valid for so3");
    raw.resolution = j["resolution"].get<int>();
  }
  if (j.contains("rule")) {
    if (raw.kind != "so3") throw ValidationError("'rule' is only valid for so3");
    raw.rule = j["rule"].get<std::string>();
  }
  return validate_group(raw);
}

PairSpec pair_spec_from_json(const json& j) {
  reject_unknown_keys(j, {"version", "name", "group", "generators", "defaults"},
                      "pair spec");
  if (!j.contains("version") || !j["version"].is_number_integer() ||
      j["version"].get<int>() != 1)
    throw ValidationError("pair spec needs \"version\": 1");
  if (!j.contains("group")) throw ValidationError("pair spec needs a 'group'");
  if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
    throw ValidationError("pair spec needs a nonempty 'generators' array");
  CompactGroup g = group_from_json(j["group"]);
  std::vector<PolyQ> gens;
  for (const auto& pj : j["generators"]) gens.push_back(poly_rat_from_json(pj));
  std::string name = j.value("name", std::string{});
  PairSpec spec{validate_pair(std::move(g), std::move(gens), std::move(name)), {}, {}, {}, {}};
  if (j.contains("defaults")) {
    const json& d = j["defaults"];
    reject_unknown_keys(d, {"max_degree", "quad_radius", "quad_nodes", "tol"},
                        "pair spec defaults");
    if (d.contains("max_degree")) spec.max_degree = d["max_degree"].get<long>();
    if (d.contains("quad_radius")) spec.quad_radius = d["quad_radius"].get<double>();
    if (d.contains("quad_nodes")) spec.quad_nodes = d["quad_nodes"].get<int>();
    if (d.contains("tol")) spec.tol = d["tol"].get<double>();
  }
  return spec;
}

PairSpec load_pair_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read pair spec '" + path.string() + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ValidationError("pair spec '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return pair_spec_from_json(j);
}

json pair_spec_to_json(const GelfandPair& pair) {
  json j;
  j["version"] = 1;
  if (!pair.name.empty()) j["name"] = pair.name;
  j["group"] = group_to_json(pair.group);
  json gens = json::array();
  for (const auto& g : pair.generators) gens.push_back(poly_to_json(g));
  j["generators"] = gens;
  return j;
}

json h_series_to_json(const HSeries& h) {
  json terms = json::array();
  for (const auto& [J, c] : h.terms)
    terms.push_back({{"J", exponents_json(J)}, {"re", c.real()}, {"im", c.imag()}});
  return {{"xi", h.xi}, {"M", h.M}, {"terms", terms}};
}

json schwarz_report_to_json(const SchwarzReport& rep) {
  json pts = json::array();
  for (const auto& p : rep.points)
    pts.push_back({{"x", p.x},
                   {"f", json::array({p.f.real(), p.f.imag()})},
                   {"h_rho", json::array({p.h_rho.real(), p.h_rho.imag()})},
                   {"err", p.err}});
  return {{"pair", rep.pair_name},
          {"M", rep.M},
          {"quad", {{"R", rep.quad_radius}, {"nodes", rep.quad_nodes}}},
          {"max_abs_error", rep.max_abs_error},
          {"max_abs_f", rep.max_abs_f},
          {"tail_mass", rep.tail_mass},
          {"points", pts}};
}

std::string schwarz_report_to_csv(const SchwarzReport& rep) {
  std::ostringstream os;
  int dim = rep.points.empty() ? 0 : static_cast<int>(rep.points.front().x.size());
  for (int a = 0; a < dim; ++a) os << "x" << (a + 1) << ",";
  os << "f_re,f_im,h_re,h_im,err\n";
  for (const auto& p : rep.points) {
    for (double v : p.x) os << fmt_double(v) << ",";
    os << fmt_double(p.f.real()) << "," << fmt_double(p.f.imag()) << ","
       << fmt_double(p.h_rho.real()) << "," << fmt_double(p.h_rho.imag()) << ","
       << fmt_double(p.err) << "\n";
  }
  return os.str();
}

namespace {

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string index_plain(const MultiIndex& I) {
  std::string s;
  for (int j = 0; j < I.size(); ++j) {
    if (j) s += " ";
    s += std::to_string(I[j]);
  }
  return s;
}

}  // namespace

std::string coefficient_table_to_csv(const CoefficientTable& table) {
  std::ostringstream os;
  os << "kind,index,degree,poly\n";
  for (const auto& [I, q] : table.b)
    os << "b," << csv_quote(index_plain(I)) << "," << I.degree() << ","
       << csv_quote(poly_to_json(q).dump()) << "\n";
  for (const auto& [J, q] : table.a)
    os << "a," << csv_quote(index_plain(J)) << ","
       << graded_degree(J, table.pair.degrees).value << ","
       << csv_quote(poly_to_json(q).dump()) << "\n";
  return os.str();
}

json coefficient_table_to_json(const CoefficientTable& table) {
  json b = json::array(), a = json::array();
  for (const auto& [I, q] : table.b)
    b.push_back({{"I", exponents_json(I)}, {"q", poly_to_json(q)}});
  for (const auto& [J, q] : table.a)
    a.push_back({{"J", exponents_json(J)}, {"q", poly_to_json(q)}});
  return {{"pair", table.pair.name},
          {"M", table.max_degree},
          {"degrees", table.pair.degrees},
          {"b", b},
          {"a", a}};
}

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void atomic_write_file(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + tmp.string() + "'");
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

RunManifest::RunManifest(std::string command, json inputs, json params)
    : start_(std::chrono::steady_clock::now()) {
  doc_["command"] = std::move(command);
  doc_["inputs"] = std::move(inputs);
  doc_["params"] = std::move(params);
  doc_["library_version"] = kVersion;
  doc_["outputs"] = json::array();
}

void RunManifest::emit(const std::filesystem::path& dir, const std::string& name,
                       const std::string& content) {
  atomic_write_file(dir / name, content);
  doc_["outputs"].push_back({{"path", name}, {"digest", "fnv1a64:" + fnv1a64_hex(content)}});
}

void RunManifest::finalize(const std::filesystem::path& dir) {
  auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_);
  doc_["wall_clock_seconds"] = elapsed.count();
  atomic_write_file(dir / "manifest.json", doc_.dump(2) + "\n");
}

}  // namespace gelfand
