#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nullkit/cli.hpp"
#include "nullkit/noether.hpp"
#include "nullkit/nullsatz.hpp"
#include "nullkit/oracle.hpp"
#include "nullkit/resultant.hpp"

namespace nullkit::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
  bool json = false;
  std::uint64_t seed = 0;
  std::string input;
  std::string poly;
  std::string f, g, var;
  std::size_t ext = 0;
};

std::vector<std::string> render_all(const std::vector<MultiPoly>& polys) {
  std::vector<std::string> out;
  for (const MultiPoly& p : polys) out.push_back(p.to_string());
  return out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

ordered_json header(const std::string& command, const Ideal& ideal) {
  ordered_json j;
  j["command"] = command;
  j["field"] = ideal.ring()->field()->name();
  j["vars"] = ideal.ring()->vars();
  return j;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string point_text(const std::vector<Scalar>& pt) {
  std::vector<std::string> c;
  for (const Scalar& x : pt) c.push_back(x.to_string());
  return "(" + join(c, ", ") + ")";
}

std::vector<std::string> map_images(const MonicizingMap& map, const RingPtr& ring) {
  return render_all(forward_images(map, ring));
}

// Text form of x_i -> image for the variables the map moves.
std::string map_text(const MonicizingMap& map, const RingPtr& ring) {
  std::vector<std::string> parts;
  auto imgs = forward_images(map, ring);
  for (std::size_t i = 0; i + 1 < imgs.size(); ++i) parts.push_back(ring->var(i) + " -> " + imgs[i].to_string());
  return join(parts, ", ");
}

void emit_points(const std::string& command, const Ideal& ideal, const FieldPtr& field, std::size_t k,
                 const std::vector<std::vector<Scalar>>& points, const std::vector<std::vector<std::size_t>>& orbits,
                 const Options& o, std::ostream& out) {
  if (o.json) {
    ordered_json j = header(command, ideal);
    j["k"] = k;
    j["point_field"] = field->name();
    ordered_json pts = ordered_json::array();
    for (const auto& pt : points) {
      std::vector<std::string> c;
      for (const Scalar& x : pt) c.push_back(x.to_string());
      pts.push_back(c);
    }
    j["points"] = pts;
    j["orbits"] = orbits;
    out << j.dump(2) << "\n";
    return;
  }
  out << "field: " << field->name() << "\n";
  out << "points: " << points.size() << "\n";
  for (const auto& pt : points) out << "  " << point_text(pt) << "\n";
  out << "orbits:\n";
  for (const auto& orb : orbits) {
    std::vector<std::string> idx;
    for (std::size_t i : orb) idx.push_back(std::to_string(i));
    out << "  [" << join(idx, ", ") << "]\n";
  }
}

int cmd_gb(const Ideal& ideal, const Options& o, std::ostream& out) {
  auto basis = render_all(ideal.basis().elements());
  if (o.json) {
    ordered_json j = header("gb", ideal);
    j["basis"] = basis;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& b : basis) out << b << "\n";
  }
  return kOk;
}

int cmd_proper(const Ideal& ideal, const Options& o, std::ostream& out) {
  const bool proper = is_proper(ideal);
  if (o.json) {
    ordered_json j = header("proper", ideal);
    j["proper"] = proper;
    out << j.dump(2) << "\n";
  } else {
    out << bool_text(proper) << "\n";
  }
  return kOk;
}

int cmd_member(const Ideal& ideal, const Options& o, std::ostream& out) {
  const MultiPoly f = parse_poly(o.poly, ideal.ring());
  const MultiPoly nf = reduce(f, ideal.basis());
  if (o.json) {
    ordered_json j = header("member", ideal);
    j["poly"] = f.to_string();
    j["member"] = nf.is_zero();
    j["normal_form"] = nf.to_string();
    out << j.dump(2) << "\n";
  } else {
    out << bool_text(nf.is_zero()) << "\n";
  }
  return kOk;
}

int cmd_radical_member(const Ideal& ideal, const Options& o, std::ostream& out) {
  const MultiPoly f = parse_poly(o.poly, ideal.ring());
  const bool r = radical_member(f, ideal);
  if (o.json) {
    ordered_json j = header("radical-member", ideal);
    j["poly"] = f.to_string();
    j["radical_member"] = r;
    out << j.dump(2) << "\n";
  } else {
    out << bool_text(r) << "\n";
  }
  return kOk;
}

int cmd_maxideal(const Ideal& ideal, const Options& o, std::ostream& out) {
  MaxIdealOptions opts;
  opts.seed = o.seed;
  const MaximalIdealResult m = maximal_ideal_containing(ideal, opts);
  const RingPtr& ring = ideal.ring();
  const VerificationReport& v = m.verification;
  if (o.json) {
    ordered_json j = header("maxideal", ideal);
    j["seed"] = o.seed;
    j["chain"] = render_all(m.chain.polys);
    ordered_json autos = ordered_json::array();
    for (const auto& a : m.automorphisms) {
      ordered_json aj;
      aj["level"] = a.level;
      aj["base"] = a.map.base;
      aj["images"] = map_images(a.map, ring->prefix(a.level));
      autos.push_back(aj);
    }
    j["automorphisms"] = autos;
    j["generators"] = render_all(m.generators);
    j["residue_degree"] = m.residue_degree;
    ordered_json vj;
    vj["contains_input"] = v.contains_input;
    vj["proper"] = v.proper;
    vj["dimension"] = v.dimension ? ordered_json(*v.dimension) : ordered_json(nullptr);
    vj["is_field"] = v.is_field;
    j["verification"] = vj;
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "chain:\n";
  for (const auto& c : m.chain.polys) out << "  " << c.to_string() << "\n";
  out << "automorphisms:";
  if (m.automorphisms.empty()) out << " none";
  out << "\n";
  for (const auto& a : m.automorphisms) {
    out << "  level " << a.level << ", m = " << a.map.base << ": " << map_text(a.map, ring->prefix(a.level)) << "\n";
  }
  out << "generators:\n";
  for (const auto& g : m.generators) out << "  " << g.to_string() << "\n";
  out << "residue degree: " << m.residue_degree << "\n";
  out << "verification: contains input " << bool_text(v.contains_input) << ", proper " << bool_text(v.proper)
      << ", dimension " << (v.dimension ? std::to_string(*v.dimension) : "infinite") << ", field "
      << bool_text(v.is_field) << "\n";
  return kOk;
}

int cmd_dim(const Ideal& ideal, const Options& o, std::ostream& out) {
  const QuotientDimension d = quotient_dimension(ideal);
  if (o.json) {
    ordered_json j = header("dim", ideal);
    j["finite"] = d.has_value();
    j["dimension"] = d ? ordered_json(*d) : ordered_json(nullptr);
    out << j.dump(2) << "\n";
  } else {
    out << (d ? std::to_string(*d) : "infinite") << "\n";
  }
  return kOk;
}

int cmd_normalize(const Ideal& ideal, const Options& o, std::ostream& out) {
  const RingPtr& ring = ideal.ring();
  const MultiPoly f = parse_poly(o.poly, ring);
  const MonicizingMap map = build_monicizer(f);
  const MultiPoly t = apply_monicizer(map, f);
  const std::size_t last = ring->nvars() - 1;
  const std::uint64_t pred = predicted_degree(map, f);
  if (o.json) {
    ordered_json j = header("normalize", ideal);
    j["poly"] = f.to_string();
    j["base"] = map.base;
    j["images"] = map_images(map, ring);
    j["transformed"] = t.to_string();
    j["predicted_degree"] = pred;
    j["degree"] = t.degree_in(last);
    j["monic"] = is_monic_in(t, last);
    out << j.dump(2) << "\n";
  } else {
    out << "m: " << map.base << "\n";
    out << "map: " << map_text(map, ring) << "\n";
    out << "transformed: " << t.to_string() << "\n";
    out << "predicted degree: " << pred << "\n";
  }
  return kOk;
}

int cmd_resultant(const Ideal& ideal, const Options& o, std::ostream& out) {
  const RingPtr& ring = ideal.ring();
  const MultiPoly f = parse_poly(o.f, ring);
  const MultiPoly g = parse_poly(o.g, ring);
  const std::size_t var = ring->index_of(o.var);
  if (var == ring->nvars()) fail(ErrorKind::UnknownVariable, "'" + o.var + "' is not declared");
  const MultiPoly r = resultant(f, make_monic_in(g, var), var);
  if (o.json) {
    ordered_json j = header("resultant", ideal);
    j["f"] = f.to_string();
    j["g"] = g.to_string();
    j["var"] = o.var;
    j["resultant"] = r.to_string();
    j["free_of_var"] = !r.involves(var);
    j["in_ideal"] = member(r, Ideal(ring, {f, g}));
    out << j.dump(2) << "\n";
  } else {
    out << r.to_string() << "\n";
  }
  return kOk;
}

int cmd_points(const Ideal& ideal, const Options& o, std::ostream& out) {
  if (o.ext > 0) {
    VarietySlice s = variety_slice(ideal, o.ext);
    emit_points("points", ideal, s.field, s.k, s.points, frobenius_orbits(s.points), o, out);
    return kOk;
  }
  MaxIdealOptions opts;
  opts.seed = o.seed;
  const MaximalIdealResult m = maximal_ideal_containing(ideal, opts);
  const PointSet ps = points_of_maximal_ideal(m, o.seed);
  emit_points("points", ideal, ps.field, ps.k, ps.points, ps.orbits, o, out);
  return kOk;
}

std::string read_input(const Options& o, std::istream& in) {
  if (o.input.empty() || o.input == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream file(o.input, std::ios::binary);
  if (!file) fail(ErrorKind::ParseError, "cannot read " + o.input);
  return std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
}

}  // namespace

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::UnsupportedField:
      return kUnsupported;
    case ErrorKind::Internal:
      return kInternal;
    default:
      return kUsage;
  }
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Ideals, maximal ideals and the Nullstellensatz over GF(p) and QQ", "nullkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Print JSON instead of text");
  app.add_option("--seed", o.seed, "Seed for randomized factorization (default 0)");
  app.add_option("--input", o.input, "Ideal file (default: stdin)");

  using Handler = int (*)(const Ideal&, const Options&, std::ostream&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, h);
    return sub;
  };
  add("gb", "Reduced lex Groebner basis", cmd_gb);
  add("proper", "Is the ideal proper (1 not in I)?", cmd_proper);
  add("member", "Ideal membership of a polynomial", cmd_member)->add_option("poly", o.poly)->required();
  add("radical-member", "Radical membership of a polynomial", cmd_radical_member)
      ->add_option("poly", o.poly)
      ->required();
  add("maxideal", "A maximal ideal containing the ideal (GF(p) only)", cmd_maxideal);
  add("dim", "Dimension of the quotient as a vector space", cmd_dim);
  add("normalize", "Monicizing substitution for a polynomial", cmd_normalize)
      ->add_option("poly", o.poly)
      ->required();
  CLI::App* res = add("resultant", "Resultant of f and monic g with respect to var", cmd_resultant);
  res->add_option("f", o.f)->required();
  res->add_option("g", o.g)->required();
  res->add_option("var", o.var)->required();
  add("points", "Conjugate points of a maximal ideal, or all points over GF(p^k)", cmd_points)
      ->add_option("--ext", o.ext, "Enumerate all common zeros over GF(p^k)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Ideal ideal = parse_ideal(read_input(o, in));
    for (const auto& [sub, handler] : commands) {
      if (sub->parsed()) return handler(ideal, o, out);
    }
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace nullkit::cli
