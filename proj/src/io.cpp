#include "momentforge/io.hpp"

#include <json.hpp>

#include <sstream>

#include "momentforge/errors.hpp"

namespace momentforge {

using nlohmann::json;

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void fail(int lineno, const std::string& what) {
  throw ParseError("line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

MomentData parse_input(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  std::vector<Circle> circles;
  std::vector<Poly> polys;
  int nvars = 0;
  std::vector<Rat> seed;
  std::vector<int> groups, dims;
  bool have_seed = false;
  while (std::getline(is, line)) {
    lineno++;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    try {
      if (toks[0] == "circle") {
        if (toks.size() != 9 || toks[2] != "center" || toks[5] != "radius" ||
            toks[7] != "orientation")
          fail(lineno, "expected: circle <id> center <x> <y> radius <r> orientation <o>");
        Circle c;
        c.id = std::stoi(toks[1]);
        c.cx = Rat::parse(toks[3]);
        c.cy = Rat::parse(toks[4]);
        c.radius = Rat::parse(toks[6]);
        if (toks[8] == "inside")
          c.orient = Orientation::Inside;
        else if (toks[8] == "outside")
          c.orient = Orientation::Outside;
        else
          fail(lineno, "orientation must be 'inside' or 'outside'");
        if (c.radius.sign() <= 0) fail(lineno, "radius must be positive");
        for (auto& other : circles)
          if (other.id == c.id) fail(lineno, "duplicate circle id " + toks[1]);
        circles.push_back(std::move(c));
      } else if (toks[0] == "nvars") {
        if (toks.size() != 2) fail(lineno, "expected: nvars <n>");
        nvars = std::stoi(toks[1]);
        if (nvars < 2) fail(lineno, "nvars must be at least 2");
      } else if (toks[0] == "poly") {
        if (nvars == 0) fail(lineno, "nvars must come before poly lines");
        std::vector<std::string> vars;
        for (int i = 1; i <= nvars; ++i) vars.push_back("x" + std::to_string(i));
        std::string body = line.substr(line.find("poly") + 4);
        polys.push_back(Poly::parse(body, vars));
      } else if (toks[0] == "seed") {
        seed.clear();
        for (size_t i = 1; i < toks.size(); ++i) seed.push_back(Rat::parse(toks[i]));
        if (seed.size() < 2) fail(lineno, "seed needs at least two coordinates");
        have_seed = true;
      } else if (toks[0] == "groups") {
        groups.clear();
        for (size_t i = 1; i < toks.size(); ++i) groups.push_back(std::stoi(toks[i]));
      } else if (toks[0] == "dims") {
        dims.clear();
        for (size_t i = 1; i < toks.size(); ++i) dims.push_back(std::stoi(toks[i]));
      } else {
        fail(lineno, "unknown directive '" + toks[0] + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      fail(lineno, e.what());
    }
  }
  if (!have_seed) throw ParseError("missing 'seed' line");
  if (dims.empty()) throw ParseError("missing 'dims' line");
  if (!circles.empty() && !polys.empty())
    throw ParseError("a document holds either circles or general polynomials, not both");
  if (circles.empty() && polys.empty()) throw ParseError("no circles or polynomials given");
  if (groups.empty()) throw ParseError("missing 'groups' line");
  if (!circles.empty()) {
    if (seed.size() != 2) throw ParseError("circle data takes a two-coordinate seed");
    std::sort(circles.begin(), circles.end(),
              [](const Circle& a, const Circle& b) { return a.id < b.id; });
    for (size_t i = 0; i < circles.size(); ++i)
      if (circles[i].id != (int)i + 1)
        throw ParseError("circle ids must be contiguous starting at 1");
    if (groups.size() != circles.size())
      throw ParseError("'groups' must list one group per circle");
    Region region = region_from_seed(circles, seed[0], seed[1]);
    return MomentData::from_region(std::move(region), groups, dims);
  }
  GeneralRegion gr;
  gr.nvars = nvars;
  gr.polys = polys;
  gr.seed = seed;
  if (groups.size() != polys.size())
    throw ParseError("'groups' must list one group per polynomial");
  return MomentData::from_general(std::move(gr), groups, dims);
}

std::string serialize_input(const MomentData& d) {
  std::ostringstream os;
  if (d.region) {
    for (auto& c : d.region->circles) {
      os << "circle " << c.id << " center " << c.cx.str_slash() << " " << c.cy.str_slash()
         << " radius " << c.radius.str_slash() << " orientation "
         << (c.orient == Orientation::Inside ? "inside" : "outside") << "\n";
    }
    os << "seed " << d.region->seed_x.str_slash() << " " << d.region->seed_y.str_slash() << "\n";
  } else {
    os << "nvars " << d.general->nvars << "\n";
    for (auto& p : d.general->polys) os << "poly " << p.str() << "\n";
    os << "seed";
    for (auto& s : d.general->seed) os << " " << s.str_slash();
    os << "\n";
  }
  os << "groups";
  for (int g : d.group_map) os << " " << g;
  os << "\n";
  os << "dims";
  for (int v : d.dim_map) os << " " << v;
  os << "\n";
  return os.str();
}

namespace {

json poly_json(const Poly& p) {
  json terms = json::array();
  for (auto& [e, c] : p.terms()) {
    json t;
    t["coeff"] = c.str_slash();
    t["exponents"] = e;
    terms.push_back(t);
  }
  return terms;
}

}  // namespace

std::string manifest_json(const MomentData& d) {
  EmittedSystem sys = emit_system(d);
  json j;
  j["n"] = d.n;
  j["l1"] = d.l1;
  j["l2"] = d.l2;
  j["m"] = d.m;
  j["ambient_dim"] = sys.ambient_dim;
  j["hypotheses_verified"] = d.hypotheses_verified;
  j["variables"] = sys.variables;
  json system = json::array();
  for (size_t i = 0; i < sys.polys.size(); ++i) {
    json entry;
    entry["group"] = i + 1;
    entry["text"] = sys.polys[i].str();
    entry["factored"] = sys.factored[i];
    entry["terms"] = poly_json(sys.polys[i]);
    system.push_back(entry);
  }
  j["system"] = system;
  return j.dump(2) + "\n";
}

std::string system_text(const MomentData& d) {
  EmittedSystem sys = emit_system(d);
  std::ostringstream os;
  for (auto& p : sys.polys) os << p.str() << "\n";
  return os.str();
}

std::string reeb_json(const MomentData& d, const ReebGraph& g) {
  json j;
  json verts = json::array();
  for (auto& v : g.vertices) {
    json jv;
    jv["id"] = v.id;
    jv["x_exact"] = v.x.str();
    jv["x_decimal"] = v.x.decimal(12);
    jv["kind"] = reeb_kind_name(v.kind);
    verts.push_back(jv);
  }
  json edges = json::array();
  for (auto& e : g.edges) {
    json je;
    je["id"] = e.id;
    je["u"] = e.u;
    je["v"] = e.v;
    je["fiber"] = e.fiber.sphere_dims;
    je["lower"] = {{"circle", e.lower.circle}, {"branch", e.lower.upper ? "upper" : "lower"}};
    je["upper"] = {{"circle", e.upper.circle}, {"branch", e.upper.upper ? "upper" : "lower"}};
    edges.push_back(je);
  }
  j["vertices"] = verts;
  j["edges"] = edges;
  j["vertex_count"] = g.vertices.size();
  j["edge_count"] = g.edges.size();
  j["betti1"] = (int)g.edges.size() - (int)g.vertices.size() + 1;
  if (d.region) j["hole_count"] = d.region->hole_count;
  return j.dump(2) + "\n";
}

std::string reeb_dot(const ReebGraph& g) {
  std::ostringstream os;
  os << "reeb {\n";
  for (auto& v : g.vertices)
    os << "  v" << v.id << " [x=\"" << v.x.decimal(12) << "\" kind=" << reeb_kind_name(v.kind)
       << "]\n";
  for (auto& e : g.edges) {
    os << "  v" << e.u << " -- v" << e.v << " [fiber=\"";
    for (size_t i = 0; i < e.fiber.sphere_dims.size(); ++i)
      os << (i ? "," : "") << e.fiber.sphere_dims[i];
    os << "\"]\n";
  }
  os << "}\n";
  return os.str();
}

std::string validation_json(const ValidationReport& arrangement, const ValidationReport& maps) {
  json j;
  j["arrangement_pass"] = arrangement.passed();
  j["maps_pass"] = maps.passed();
  json issues = json::array();
  for (auto& i : arrangement.issues) issues.push_back({{"code", i.code}, {"message", i.message}});
  for (auto& i : maps.issues) issues.push_back({{"code", i.code}, {"message", i.message}});
  j["issues"] = issues;
  return j.dump(2) + "\n";
}

namespace {

json fiber_rows(const MomentData& d) {
  json rows = json::array();
  auto push = [&](const std::string& name, const std::vector<int>& stratum) {
    FiberClass fc = fiber_class_for_stratum(d, stratum);
    json r;
    r["stratum"] = name;
    r["fiber"] = fc.sphere_dims;
    r["description"] = fc.str();
    r["dim"] = fc.total_dim();
    rows.push_back(r);
  };
  push("interior", {});
  if (d.region) {
    for (auto& c : d.region->circles) push("circle " + std::to_string(c.id), {c.id});
    for (auto& cr : d.region->crossings) {
      if (!cr.in_closure) continue;
      push("crossing of " + std::to_string(cr.c1) + "," + std::to_string(cr.c2) + " at x=" +
               cr.x.decimal(6),
           {cr.c1, cr.c2});
    }
  }
  return rows;
}

}  // namespace

std::string fiber_table_text(const MomentData& d) {
  std::ostringstream os;
  os << "fiber dimension bound m - n = " << fiber_dim_bound(d) << "\n";
  for (auto& r : fiber_rows(d)) {
    os << r["stratum"].get<std::string>() << ": " << r["description"].get<std::string>()
       << " (dim " << r["dim"].get<int>() << ")\n";
  }
  return os.str();
}

std::string fiber_table_json(const MomentData& d) {
  json j;
  j["bound"] = fiber_dim_bound(d);
  j["strata"] = fiber_rows(d);
  return j.dump(2) + "\n";
}

std::string graph_text(const MultiGraph& g) { return g.str(); }

}  // namespace momentforge
