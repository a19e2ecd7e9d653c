#include "hopfrec/io.hpp"

#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hopfrec/errors.hpp"

namespace hopfrec {

namespace {

using Json = nlohmann::ordered_json;

// A malformed scalar literal; converted to ParseError once the source text
// is available to locate it.
struct BadScalar {
  std::string literal;
  std::string message;
};

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// ---------------------------------------------------------------- writing

Json scalar_json(const Scalar& s) {
  if (s.is_rational()) return rational_to_string(s.rational_part());
  Json coeffs = Json::array();
  for (const Rational& c : s.coeffs()) coeffs.push_back(rational_to_string(c));
  return Json{{"conductor", s.conductor()}, {"coeffs", coeffs}};
}

Json vec_json(const std::vector<Scalar>& v) {
  Json a = Json::array();
  for (const Scalar& s : v) a.push_back(scalar_json(s));
  return a;
}

Json matrix_json(const Matrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m(i, j)));
    a.push_back(row);
  }
  return a;
}

Json cube_json(const std::vector<Scalar>& t, std::size_t n) {
  Json a = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json b = Json::array();
    for (std::size_t j = 0; j < n; ++j) {
      Json c = Json::array();
      for (std::size_t k = 0; k < n; ++k) c.push_back(scalar_json(t[(i * n + j) * n + k]));
      b.push_back(c);
    }
    a.push_back(b);
  }
  return a;
}

Json to_json(const HopfDocument& d) {
  const HopfPresentation& h = d.hopf;
  const std::size_t n = h.dim();
  Json j;
  j["kind"] = "hopf";
  j["dim"] = n;
  j["mult"] = cube_json(h.alg.mult, n);
  j["unit"] = vec_json(h.alg.unit);
  j["comult"] = cube_json(h.comult, n);
  j["counit"] = vec_json(h.counit);
  j["antipode"] = matrix_json(h.antipode);
  if (!d.basis.empty()) {
    Json b = Json::array();
    for (const auto& l : d.basis) b.push_back(Json{l[0], l[1], l[2]});
    j["basis"] = b;
  }
  return j;
}

Json to_json(const FusionSkeleton& k) {
  const std::size_t r = k.rank();
  Json j;
  j["kind"] = "fusion";
  j["simples"] = k.simples;
  j["unit"] = k.unit;
  j["dual"] = k.dual;
  Json fus = Json::array();
  for (std::size_t a = 0; a < r; ++a) {
    Json fa = Json::array();
    for (std::size_t b = 0; b < r; ++b) {
      Json fb = Json::array();
      for (std::size_t c = 0; c < r; ++c) fb.push_back(k.N(a, b, c));
      fa.push_back(fb);
    }
    fus.push_back(fa);
  }
  j["fusion"] = fus;
  Json as = Json::array();
  for (std::size_t a = 0; a < r; ++a) {
    Json xa = Json::array();
    for (std::size_t b = 0; b < r; ++b) {
      Json xb = Json::array();
      for (std::size_t c = 0; c < r; ++c) {
        Json xc = Json::array();
        for (std::size_t d = 0; d < r; ++d) xc.push_back(matrix_json(k.F(a, b, c, d)));
        xb.push_back(xc);
      }
      xa.push_back(xb);
    }
    as.push_back(xa);
  }
  j["assoc"] = as;
  return j;
}

Json to_json(const FiberData& f) {
  const std::size_t r = f.dims.size();
  Json j;
  j["kind"] = "fiber";
  j["dims"] = f.dims;
  j["iota"] = scalar_json(f.iota);
  Json t = Json::array();
  for (std::size_t a = 0; a < r; ++a) {
    Json ta = Json::array();
    for (std::size_t b = 0; b < r; ++b) ta.push_back(matrix_json(f.J(a, b)));
    t.push_back(ta);
  }
  j["tensorator"] = t;
  Json ev = Json::array(), coev = Json::array();
  for (const auto& v : f.ev_coeff) ev.push_back(vec_json(v));
  for (const auto& v : f.coev_coeff) coev.push_back(vec_json(v));
  j["ev"] = ev;
  j["coev"] = coev;
  return j;
}

Json to_json(const ModulesDocument& d) {
  Json j;
  j["kind"] = "modules";
  j["algebra_dim"] = d.algebra_dim;
  Json mods = Json::array();
  for (const ModuleRep& v : d.modules) {
    Json m;
    m["label"] = v.label;
    m["dim"] = v.dim;
    Json act = Json::array();
    for (const Matrix& x : v.action) act.push_back(matrix_json(x));
    m["action"] = act;
    mods.push_back(m);
  }
  j["modules"] = mods;
  return j;
}

Json to_json(const GroupTable& g) {
  Json j;
  j["kind"] = "group";
  j["names"] = g.names();
  j["table"] = g.table();
  return j;
}

bool is_leaf_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const Json& x : j)
    if (x.is_array()) return false;
  return true;
}

// Two-space indentation; arrays without nested arrays stay on one line.
void write_json(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    bool inline_obj = true;
    for (const auto& [k, v] : j.items())
      if (v.is_structured() && !is_leaf_array(v)) inline_obj = false;
    if (inline_obj && j.size() <= 2) {
      os << j.dump();
      return;
    }
    os << "{\n";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      if (!first) os << ",\n";
      first = false;
      os << pad << Json(k).dump() << ": ";
      write_json(os, v, indent + 2);
    }
    os << "\n" << close << "}";
  } else if (j.is_array()) {
    if (is_leaf_array(j)) {
      os << "[";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ", ";
        os << j[i].dump();
      }
      os << "]";
      return;
    }
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) os << ",\n";
      os << pad;
      write_json(os, j[i], indent + 2);
    }
    os << "\n" << close << "]";
  } else {
    os << j.dump();
  }
}

// ---------------------------------------------------------------- reading

class Reader {
 public:
  Reader(const Json& j, std::string path) : j_(j), path_(std::move(path)) {}

  const Json& json() const { return j_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void fail(const std::string& what) const { throw SchemaError(path_, what); }

  Reader at(const std::string& key) const {
    if (!j_.is_object()) fail("expected an object");
    auto it = j_.find(key);
    if (it == j_.end()) throw SchemaError(sub(key), "missing field");
    return Reader(*it, sub(key));
  }
  bool has(const std::string& key) const { return j_.is_object() && j_.contains(key); }

  Reader at(std::size_t i) const { return Reader(j_[i], path_ + "[" + std::to_string(i) + "]"); }

  void allow_only(std::initializer_list<const char*> keys) const {
    if (!j_.is_object()) fail("expected an object");
    std::set<std::string> ok(keys.begin(), keys.end());
    for (const auto& [k, v] : j_.items())
      if (!ok.count(k)) throw SchemaError(sub(k), "unknown field");
  }

  std::size_t array(std::optional<std::size_t> expected = std::nullopt) const {
    if (!j_.is_array()) fail("expected an array");
    if (expected && j_.size() != *expected)
      fail("expected " + std::to_string(*expected) + " entries, found " +
           std::to_string(j_.size()));
    return j_.size();
  }

  std::size_t index() const {
    if (!j_.is_number_unsigned()) fail("expected a non-negative integer");
    return j_.get<std::size_t>();
  }
  int integer() const {
    if (!j_.is_number_integer()) fail("expected an integer");
    return j_.get<int>();
  }
  std::string string() const {
    if (!j_.is_string()) fail("expected a string");
    return j_.get<std::string>();
  }

  Rational rational() const {
    if (!j_.is_string()) fail("expected a scalar string");
    const std::string s = j_.get<std::string>();
    try {
      return parse_rational(s);
    } catch (const Error& e) {
      throw BadScalar{s, e.what()};
    }
  }

  Scalar scalar() const {
    if (j_.is_string()) return Scalar(rational());
    if (!j_.is_object()) fail("expected a scalar");
    allow_only({"conductor", "coeffs"});
    const int n = at("conductor").integer();
    if (n < 1) at("conductor").fail("conductor must be positive");
    Reader c = at("coeffs");
    std::vector<Rational> coeffs(c.array());
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = c.at(i).rational();
    return Scalar(n, std::move(coeffs));
  }

  std::vector<Scalar> vec(std::optional<std::size_t> expected = std::nullopt) const {
    std::vector<Scalar> v(array(expected));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = at(i).scalar();
    return v;
  }

  Matrix matrix(std::optional<std::size_t> rows = std::nullopt,
                std::optional<std::size_t> cols = std::nullopt) const {
    const std::size_t r = array(rows);
    std::size_t c = cols.value_or(0);
    if (r > 0 && !cols) c = at(0).array();
    std::vector<Scalar> entries;
    entries.reserve(r * c);
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<Scalar> row = at(i).vec(c);
      for (Scalar& s : row) entries.push_back(std::move(s));
    }
    return Matrix(r, c, std::move(entries));
  }

  std::vector<Scalar> cube(std::size_t n) const {
    std::vector<Scalar> t;
    t.reserve(n * n * n);
    array(n);
    for (std::size_t i = 0; i < n; ++i) {
      Reader ri = at(i);
      ri.array(n);
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<Scalar> row = ri.at(j).vec(n);
        for (Scalar& s : row) t.push_back(std::move(s));
      }
    }
    return t;
  }

 private:
  std::string sub(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

  const Json& j_;
  std::string path_;
};

HopfDocument read_hopf(const Reader& r) {
  r.allow_only({"kind", "dim", "mult", "unit", "comult", "counit", "antipode", "basis"});
  const std::size_t n = r.at("dim").index();
  HopfDocument d;
  HopfPresentation& h = d.hopf;
  h.alg.dim = n;
  h.alg.mult = r.at("mult").cube(n);
  h.alg.unit = r.at("unit").vec(n);
  h.comult = r.at("comult").cube(n);
  h.counit = r.at("counit").vec(n);
  h.antipode = r.at("antipode").matrix(n, n);
  if (r.has("basis")) {
    Reader b = r.at("basis");
    b.array(n);
    for (std::size_t p = 0; p < n; ++p) {
      Reader l = b.at(p);
      l.array(3);
      d.basis.push_back({l.at(0).index(), l.at(1).index(), l.at(2).index()});
    }
  }
  return d;
}

FusionSkeleton read_fusion(const Reader& r) {
  r.allow_only({"kind", "simples", "unit", "dual", "fusion", "assoc"});
  Reader s = r.at("simples");
  const std::size_t n = s.array();
  if (n == 0) s.fail("at least one simple is required");
  FusionSkeleton k = FusionSkeleton::with_rank(n);
  for (std::size_t a = 0; a < n; ++a) k.simples[a] = s.at(a).string();
  k.unit = r.at("unit").index();
  if (k.unit >= n) r.at("unit").fail("unit out of range");
  Reader du = r.at("dual");
  du.array(n);
  for (std::size_t a = 0; a < n; ++a) {
    k.dual[a] = du.at(a).index();
    if (k.dual[a] >= n) du.at(a).fail("dual out of range");
  }
  Reader fu = r.at("fusion");
  fu.array(n);
  for (std::size_t a = 0; a < n; ++a) {
    Reader fa = fu.at(a);
    fa.array(n);
    for (std::size_t b = 0; b < n; ++b) {
      Reader fb = fa.at(b);
      fb.array(n);
      for (std::size_t c = 0; c < n; ++c) {
        const int v = fb.at(c).integer();
        if (v < 0) fb.at(c).fail("negative multiplicity");
        k.N(a, b, c) = v;
      }
    }
  }
  Reader as = r.at("assoc");
  as.array(n);
  for (std::size_t a = 0; a < n; ++a) {
    Reader xa = as.at(a);
    xa.array(n);
    for (std::size_t b = 0; b < n; ++b) {
      Reader xb = xa.at(b);
      xb.array(n);
      for (std::size_t c = 0; c < n; ++c) {
        Reader xc = xb.at(c);
        xc.array(n);
        for (std::size_t d = 0; d < n; ++d) {
          const std::size_t lm = k.left_multiplicity(a, b, c, d);
          const std::size_t rm = k.right_multiplicity(a, b, c, d);
          Reader m = xc.at(d);
          if (lm == 0 && rm == 0) {
            m.array(0);
            k.F(a, b, c, d) = Matrix();
          } else {
            k.F(a, b, c, d) = m.matrix(rm, lm);
          }
        }
      }
    }
  }
  return k;
}

FiberData read_fiber(const Reader& r) {
  r.allow_only({"kind", "dims", "iota", "tensorator", "ev", "coev"});
  Reader di = r.at("dims");
  const std::size_t n = di.array();
  FiberData f;
  for (std::size_t a = 0; a < n; ++a) f.dims.push_back(di.at(a).index());
  f.iota = r.at("iota").scalar();
  Reader t = r.at("tensorator");
  t.array(n);
  for (std::size_t a = 0; a < n; ++a) {
    Reader ta = t.at(a);
    ta.array(n);
    for (std::size_t b = 0; b < n; ++b)
      f.tensorator.push_back(ta.at(b).matrix(std::nullopt, f.dims[a] * f.dims[b]));
  }
  Reader ev = r.at("ev"), coev = r.at("coev");
  ev.array(n);
  coev.array(n);
  for (std::size_t a = 0; a < n; ++a) {
    f.ev_coeff.push_back(ev.at(a).vec());
    f.coev_coeff.push_back(coev.at(a).vec());
  }
  return f;
}

ModulesDocument read_modules(const Reader& r) {
  r.allow_only({"kind", "algebra_dim", "modules"});
  ModulesDocument d;
  d.algebra_dim = r.at("algebra_dim").index();
  Reader ms = r.at("modules");
  const std::size_t count = ms.array();
  for (std::size_t i = 0; i < count; ++i) {
    Reader m = ms.at(i);
    m.allow_only({"label", "dim", "action"});
    ModuleRep v;
    v.label = m.has("label") ? m.at("label").string() : std::string();
    v.dim = m.at("dim").index();
    Reader act = m.at("action");
    act.array(d.algebra_dim);
    for (std::size_t e = 0; e < d.algebra_dim; ++e)
      v.action.push_back(act.at(e).matrix(v.dim, v.dim));
    d.modules.push_back(std::move(v));
  }
  return d;
}

GroupTable read_group(const Reader& r) {
  r.allow_only({"kind", "names", "table"});
  Reader t = r.at("table");
  const std::size_t n = t.array();
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    Reader ta = t.at(a);
    ta.array(n);
    for (std::size_t b = 0; b < n; ++b) table[a][b] = ta.at(b).index();
  }
  std::vector<std::string> names;
  if (r.has("names")) {
    Reader nm = r.at("names");
    nm.array(n);
    for (std::size_t a = 0; a < n; ++a) names.push_back(nm.at(a).string());
  }
  try {
    return GroupTable(std::move(table), std::move(names));
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError("table", e.what());
  }
}

Document read_document(const Json& j) {
  Reader r(j, "");
  if (!j.is_object()) throw SchemaError("", "top level must be an object");
  const std::string kind = r.at("kind").string();
  if (kind == "hopf") return read_hopf(r);
  if (kind == "fusion") return read_fusion(r);
  if (kind == "fiber") return read_fiber(r);
  if (kind == "modules") return read_modules(r);
  if (kind == "group") return read_group(r);
  throw SchemaError("kind", "unknown kind '" + kind + "'");
}

ModulesDocument modules_doc(std::vector<ModuleRep> mods, std::size_t dim) {
  return ModulesDocument{dim, std::move(mods)};
}

}  // namespace

std::string document_kind(const Document& doc) {
  static const char* names[] = {"hopf", "fusion", "fiber", "modules", "group"};
  return names[doc.index()];
}

Document parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    auto [line, col] = line_column(text, byte);
    std::string msg = e.what();
    throw ParseError("malformed JSON: " + msg, line, col);
  }
  try {
    return read_document(j);
  } catch (const BadScalar& b) {
    const std::string needle = Json(b.literal).dump();
    const std::size_t pos = text.find(needle);
    auto [line, col] = line_column(text, pos == std::string::npos ? 0 : pos);
    throw ParseError(b.message, line, col);
  }
}

std::string serialize(const Document& doc) {
  Json j = std::visit([](const auto& x) { return to_json(x); }, doc);
  std::ostringstream os;
  write_json(os, j, 0);
  os << "\n";
  return os.str();
}

Document load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

void save_document(const std::string& path, const Document& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << serialize(doc);
  if (!out) throw Error("write failed for " + path);
}

Document named_example(const std::string& name) {
  const GroupTable z2 = cyclic_group(2);
  if (name == "z2") return z2;
  if (name == "s3") return symmetric_group(3);
  if (name == "kz2") return HopfDocument{gen_group_algebra(z2), {}};
  if (name == "kz2-modules") return modules_doc(*group_algebra_irreps(z2), 2);
  const GroupTable v4 = direct_product(z2, z2);
  if (name == "kz2xz2") return HopfDocument{gen_group_algebra(v4), {}};
  if (name == "kz2xz2-modules") return modules_doc(*group_algebra_irreps(v4), 4);
  if (name == "ks3") return HopfDocument{gen_group_algebra(symmetric_group(3)), {}};
  if (name == "ks3-modules") return modules_doc(*group_algebra_irreps(symmetric_group(3)), 6);
  if (name == "ks4") return HopfDocument{gen_group_algebra(symmetric_group(4)), {}};
  if (name == "ks4-modules")
    return modules_doc(*group_algebra_irreps(symmetric_group(4)), 24);
  if (name == "funz2") return HopfDocument{gen_function_algebra(z2), {}};
  if (name == "funz2-modules") return modules_doc(function_algebra_irreps(z2), 2);
  if (name == "funs3") return HopfDocument{gen_function_algebra(symmetric_group(3)), {}};
  if (name == "funs3-modules")
    return modules_doc(function_algebra_irreps(symmetric_group(3)), 6);
  if (name == "dz2") return HopfDocument{gen_drinfeld_double(z2), {}};
  if (name == "dz2-modules") return modules_doc(drinfeld_double_irreps(z2), 4);
  if (name == "ds3") return HopfDocument{gen_drinfeld_double(symmetric_group(3)), {}};
  if (name == "vecz2") return gen_pointed_category(z2, ThreeCochain(8, 1)).skeleton;
  if (name == "vecz2-fiber") return *gen_pointed_category(z2, ThreeCochain(8, 1)).fiber;
  if (name == "vecz2-omega") return gen_pointed_category(z2, z2_nontrivial_cocycle()).skeleton;
  throw Error("unknown example '" + name + "'");
}

}  // namespace hopfrec
