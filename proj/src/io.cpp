#include "qgb/io.hpp"

#include <fstream>

#include "qgb/error.hpp"
#include "qgb/parse.hpp"

namespace qgb {

namespace {

const Json& member(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw input_error(where + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw input_error(where + "/" + key + ": missing");
  return *it;
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw input_error(where + ": expected a string");
  return j.get<std::string>();
}

std::size_t as_count(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() || j.get<std::size_t>() == 0)
    throw input_error(where + ": expected a positive integer");
  return j.get<std::size_t>();
}

Polynomial parse_at(const std::string& text, const Alphabet& alphabet, const std::string& where) {
  try {
    return parse_poly(text, alphabet);
  } catch (const input_error& e) {
    throw input_error(where + ": " + e.what());
  }
}

}  // namespace

Json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    throw input_error("invalid JSON in '" + path.string() + "': " + e.what());
  }
}

void save_json_file(const Json& j, const std::filesystem::path& path) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw input_error("cannot write '" + tmp.string() + "'");
    out << j.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

Problem problem_from_json(const Json& j, const std::filesystem::path& base_dir) {
  Alphabet alphabet;
  const Json& jalpha = member(j, "alphabet", "");
  if (!jalpha.is_array() || jalpha.empty()) throw input_error("/alphabet: expected a nonempty array");
  for (std::size_t i = 0; i < jalpha.size(); ++i) {
    const std::string name = as_string(jalpha[i], "/alphabet/" + std::to_string(i));
    if (alphabet.find(name)) throw input_error("/alphabet/" + std::to_string(i) + ": duplicate symbol");
    alphabet.intern(name);
  }

  const Json& jq = member(j, "quiver", "");
  const Json& jverts = member(jq, "vertices", "/quiver");
  if (!jverts.is_array() || jverts.empty())
    throw input_error("/quiver/vertices: expected a nonempty array");
  std::vector<std::string> vertex_names;
  for (std::size_t i = 0; i < jverts.size(); ++i)
    vertex_names.push_back(as_string(jverts[i], "/quiver/vertices/" + std::to_string(i)));

  LabelledQuiver quiver(alphabet, vertex_names);
  const Json& jedges = member(jq, "edges", "/quiver");
  if (!jedges.is_array()) throw input_error("/quiver/edges: expected an array");
  for (std::size_t i = 0; i < jedges.size(); ++i) {
    const std::string where = "/quiver/edges/" + std::to_string(i);
    const auto& je = jedges[i];
    const std::string src = as_string(member(je, "src", where), where + "/src");
    const std::string tgt = as_string(member(je, "tgt", where), where + "/tgt");
    const std::string label = as_string(member(je, "label", where), where + "/label");
    const auto vs = quiver.find_vertex(src);
    const auto vt = quiver.find_vertex(tgt);
    if (!vs) throw input_error(where + "/src: unknown vertex '" + src + "'");
    if (!vt) throw input_error(where + "/tgt: unknown vertex '" + tgt + "'");
    const auto lbl = quiver.alphabet().find(label);
    if (!lbl) throw input_error(where + "/label: undeclared symbol '" + label + "'");
    quiver.add_edge(*vs, *vt, *lbl);
  }

  Problem p{std::move(quiver), {}, {}, {}, {}, {}, {}};

  const Json& jorder = member(j, "order", "");
  const std::string kind = as_string(member(jorder, "type", "/order"), "/order/type");
  if (kind != "deglex") throw input_error("/order/type: only 'deglex' is supported");
  const Json& jprec = member(jorder, "precedence", "/order");
  if (!jprec.is_array()) throw input_error("/order/precedence: expected an array");
  for (std::size_t i = 0; i < jprec.size(); ++i) {
    const std::string name = as_string(jprec[i], "/order/precedence/" + std::to_string(i));
    const auto id = p.quiver.alphabet().find(name);
    if (!id) throw input_error("/order/precedence/" + std::to_string(i) + ": undeclared symbol '" +
                               name + "'");
    p.precedence.push_back(*id);
  }
  try {
    DegLexOrder probe(p.quiver.alphabet(), p.precedence);  // complete and duplicate-free
  } catch (const input_error& e) {
    throw input_error(std::string("/order/precedence: ") + e.what());
  }

  const Json& jassume = member(j, "assumptions", "");
  if (!jassume.is_array()) throw input_error("/assumptions: expected an array");
  for (std::size_t i = 0; i < jassume.size(); ++i) {
    const std::string where = "/assumptions/" + std::to_string(i);
    const auto& ja = jassume[i];
    Generator g;
    g.name = as_string(member(ja, "name", where), where + "/name");
    g.poly = parse_at(as_string(member(ja, "poly", where), where + "/poly"),
                      p.quiver.alphabet(), where + "/poly");
    for (const auto& other : p.assumptions)
      if (other.name == g.name) throw input_error(where + "/name: duplicate name '" + g.name + "'");
    p.assumptions.push_back(std::move(g));
  }

  p.claim = parse_at(as_string(member(j, "claim", ""), "/claim"), p.quiver.alphabet(), "/claim");

  if (j.contains("options")) {
    const Json& jopt = j["options"];
    if (!jopt.is_object()) throw input_error("/options: expected an object");
    if (jopt.contains("completion")) {
      const Json& jc = jopt["completion"];
      if (jc.contains("max_new_elements"))
        p.completion.max_new_elements = as_count(jc["max_new_elements"], "/options/completion/max_new_elements");
      if (jc.contains("max_ambiguities"))
        p.completion.max_ambiguities = as_count(jc["max_ambiguities"], "/options/completion/max_ambiguities");
      if (jc.contains("max_source_degree"))
        p.completion.max_source_degree = as_count(jc["max_source_degree"], "/options/completion/max_source_degree");
    }
    if (jopt.contains("dm")) {
      const DegLexOrder ord(p.quiver.alphabet(), p.precedence);
      p.dm = divisor_map_from_json(jopt["dm"], p.assumptions, p.quiver.alphabet(), ord);
    }
    if (jopt.contains("representation"))
      p.representation_path = base_dir / as_string(jopt["representation"], "/options/representation");
  }
  return p;
}

Problem load_problem(const std::filesystem::path& path) {
  return problem_from_json(load_json_file(path), path.parent_path());
}

Json certificate_to_json(const Certificate& cert, const Alphabet& alphabet,
                         const std::string& mode, const MonomialOrder* ord) {
  Json j;
  j["claim"] = format_poly(cert.claim, alphabet, ord);
  Json jgens = Json::array();
  for (const auto& g : cert.generators) {
    Json jg;
    jg["id"] = g.name;
    jg["poly"] = format_poly(g.poly, alphabet, ord);
    jgens.push_back(std::move(jg));
  }
  j["generators"] = std::move(jgens);
  Json jterms = Json::array();
  for (const auto& t : cert.terms) {
    Json jt;
    Rational coeff = 1;
    std::string left, right;
    if (t.left.term_count() == 1) {
      const auto& [m, c] = *t.left.terms().begin();
      coeff *= c;
      left = format_monomial(m, alphabet);
    } else {
      left = format_poly(t.left, alphabet, ord);
    }
    if (t.right.term_count() == 1) {
      const auto& [m, c] = *t.right.terms().begin();
      coeff *= c;
      right = format_monomial(m, alphabet);
    } else {
      right = format_poly(t.right, alphabet, ord);
    }
    jt["coeff"] = coeff.str();
    jt["left"] = left;
    jt["gen"] = cert.generators.at(t.gen).name;
    jt["right"] = right;
    jterms.push_back(std::move(jt));
  }
  j["terms"] = std::move(jterms);
  Json jwit = Json::object();
  for (const auto& [gi, m] : cert.witnesses)
    jwit[cert.generators.at(gi).name] = format_monomial(m, alphabet);
  j["witnesses"] = std::move(jwit);
  j["mode"] = mode;
  return j;
}

Certificate certificate_from_json(const Json& j, const Alphabet& alphabet) {
  Certificate cert;
  cert.claim = parse_at(as_string(member(j, "claim", ""), "/claim"), alphabet, "/claim");
  const Json& jgens = member(j, "generators", "");
  if (!jgens.is_array()) throw input_error("/generators: expected an array");
  for (std::size_t i = 0; i < jgens.size(); ++i) {
    const std::string where = "/generators/" + std::to_string(i);
    Generator g;
    g.name = as_string(member(jgens[i], "id", where), where + "/id");
    g.poly = parse_at(as_string(member(jgens[i], "poly", where), where + "/poly"), alphabet,
                      where + "/poly");
    if (cert.find_generator(g.name))
      throw input_error(where + "/id: duplicate generator '" + g.name + "'");
    cert.generators.push_back(std::move(g));
  }
  const Json& jterms = member(j, "terms", "");
  if (!jterms.is_array()) throw input_error("/terms: expected an array");
  for (std::size_t i = 0; i < jterms.size(); ++i) {
    const std::string where = "/terms/" + std::to_string(i);
    const auto& jt = jterms[i];
    Rational coeff;
    try {
      coeff = Rational::parse(as_string(member(jt, "coeff", where), where + "/coeff"));
    } catch (const input_error& e) {
      throw input_error(where + "/coeff: " + e.what());
    }
    const std::string gen_name = as_string(member(jt, "gen", where), where + "/gen");
    const auto gi = cert.find_generator(gen_name);
    if (!gi) throw input_error(where + "/gen: unknown generator '" + gen_name + "'");
    Polynomial left = parse_at(as_string(member(jt, "left", where), where + "/left"), alphabet,
                               where + "/left");
    Polynomial right = parse_at(as_string(member(jt, "right", where), where + "/right"), alphabet,
                                where + "/right");
    left = coeff * left;
    if (left.is_zero() || right.is_zero())
      throw input_error(where + ": zero cofactor");
    cert.terms.push_back(CertTerm{std::move(left), *gi, std::move(right)});
  }
  if (j.contains("witnesses")) {
    const Json& jwit = j["witnesses"];
    if (!jwit.is_object()) throw input_error("/witnesses: expected an object");
    for (const auto& [name, jm] : jwit.items()) {
      const auto gi = cert.find_generator(name);
      if (!gi) throw input_error("/witnesses/" + name + ": unknown generator");
      try {
        cert.witnesses[*gi] = parse_monomial(as_string(jm, "/witnesses/" + name), alphabet);
      } catch (const input_error& e) {
        throw input_error("/witnesses/" + name + ": " + e.what());
      }
    }
  }
  return cert;
}

Representation representation_from_json(const Json& j, const LabelledQuiver& q) {
  Representation rep;
  rep.dims.assign(q.vertex_count(), 0);
  const Json& jdims = member(j, "dims", "");
  if (!jdims.is_object()) throw input_error("/dims: expected an object");
  for (const auto& [name, jd] : jdims.items()) {
    const auto v = q.find_vertex(name);
    if (!v) throw input_error("/dims/" + name + ": unknown vertex");
    rep.dims[*v] = as_count(jd, "/dims/" + name);
  }
  for (VertexId v = 0; v < q.vertex_count(); ++v)
    if (rep.dims[v] == 0)
      throw input_error("/dims: missing dimension for vertex '" + q.vertex_name(v) + "'");

  rep.mats.assign(q.edges().size(), RatMatrix());
  std::vector<bool> seen(q.edges().size(), false);
  const Json& jedges = member(j, "edges", "");
  if (!jedges.is_array()) throw input_error("/edges: expected an array");
  for (std::size_t i = 0; i < jedges.size(); ++i) {
    const std::string where = "/edges/" + std::to_string(i);
    const auto& je = jedges[i];
    const std::string src = as_string(member(je, "src", where), where + "/src");
    const std::string tgt = as_string(member(je, "tgt", where), where + "/tgt");
    const std::string label = as_string(member(je, "label", where), where + "/label");
    const auto vs = q.find_vertex(src);
    const auto vt = q.find_vertex(tgt);
    const auto lbl = q.alphabet().find(label);
    if (!vs || !vt || !lbl) throw input_error(where + ": unknown vertex or label");
    std::size_t edge_index = q.edges().size();
    for (std::size_t e = 0; e < q.edges().size(); ++e) {
      if (q.edges()[e] == Edge{*vs, *vt, *lbl}) {
        edge_index = e;
        break;
      }
    }
    if (edge_index == q.edges().size())
      throw input_error(where + ": the quiver has no such edge");
    if (seen[edge_index]) throw input_error(where + ": duplicate edge");
    seen[edge_index] = true;

    const Json& jm = member(je, "matrix", where);
    const std::size_t nrows = rep.dims[*vt], ncols = rep.dims[*vs];
    if (!jm.is_array() || jm.size() != nrows)
      throw input_error(where + "/matrix: expected " + std::to_string(nrows) + " rows");
    RatMatrix m(nrows, ncols);
    for (std::size_t r = 0; r < nrows; ++r) {
      if (!jm[r].is_array() || jm[r].size() != ncols)
        throw input_error(where + "/matrix/" + std::to_string(r) + ": expected " +
                          std::to_string(ncols) + " entries");
      for (std::size_t c = 0; c < ncols; ++c) {
        try {
          m.at(r, c) = Rational::parse(as_string(jm[r][c], where + "/matrix"));
        } catch (const input_error& e) {
          throw input_error(where + "/matrix/" + std::to_string(r) + "/" + std::to_string(c) +
                            ": " + e.what());
        }
      }
    }
    rep.mats[edge_index] = std::move(m);
  }
  for (std::size_t e = 0; e < q.edges().size(); ++e)
    if (!seen[e]) throw input_error("/edges: missing matrix for edge " + std::to_string(e));
  return rep;
}

Representation load_representation(const std::filesystem::path& path, const LabelledQuiver& q) {
  return representation_from_json(load_json_file(path), q);
}

DivisorMap divisor_map_from_json(const Json& j, std::span<const Generator> gens,
                                 const Alphabet& alphabet, const MonomialOrder& ord) {
  if (!j.is_object()) throw input_error("/dm: expected an object");
  std::vector<Polynomial> polys;
  polys.reserve(gens.size());
  for (const auto& g : gens) polys.push_back(g.poly);
  DivisorMap dm = DivisorMap::leading_monomials(polys, ord);
  for (const auto& [name, jlist] : j.items()) {
    GenIndex gi = gens.size();
    for (GenIndex i = 0; i < gens.size(); ++i)
      if (gens[i].name == name) gi = i;
    if (gi == gens.size()) throw input_error("/dm/" + name + ": unknown generator");
    if (!jlist.is_array() || jlist.empty())
      throw input_error("/dm/" + name + ": expected a nonempty array of monomials");
    std::set<Monomial> divisors;
    for (const auto& jm : jlist) {
      try {
        divisors.insert(parse_monomial(as_string(jm, "/dm/" + name), alphabet));
      } catch (const input_error& e) {
        throw input_error("/dm/" + name + ": " + e.what());
      }
    }
    try {
      dm.set(gi, std::move(divisors), polys);
    } catch (const input_error& e) {
      throw input_error("/dm/" + name + ": " + e.what());
    }
  }
  return dm;
}

}  // namespace qgb
