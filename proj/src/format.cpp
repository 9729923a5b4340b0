#include "vinerep/format.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

#include "vinerep/error.hpp"

namespace vinerep {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string& what) { fail("ParseError", what); }

void require_keys(const json& obj, const std::string& where,
                  const std::vector<std::string>& keys) {
  if (!obj.is_object()) parse_fail(where + " must be an object");
  for (const auto& k : keys)
    if (!obj.contains(k)) parse_fail(where + " is missing key \"" + k + "\"");
  for (const auto& [k, v] : obj.items()) {
    (void)v;
    if (std::find(keys.begin(), keys.end(), k) == keys.end())
      parse_fail(where + " has unknown key \"" + k + "\"");
  }
}

Rat parse_rat(const json& j, const std::string& where) {
  std::string s;
  if (j.is_string())
    s = j.get<std::string>();
  else if (j.is_number_integer())
    s = std::to_string(j.get<long long>());
  else
    parse_fail(where + " must be an exact rational string or integer");
  auto r = rat_from_string(s);
  if (!r) parse_fail(where + ": malformed rational \"" + s + "\"");
  return *r;
}

Scalar parse_scalar(const Field& f, const json& j, const std::string& where) {
  std::string s;
  if (j.is_string())
    s = j.get<std::string>();
  else if (j.is_number_integer())
    s = std::to_string(j.get<long long>());
  else
    parse_fail(where + " must be a scalar string or integer");
  auto v = Scalar::from_string(f, s);
  if (!v) parse_fail(where + ": malformed scalar \"" + s + "\" for field " + f.to_string());
  return *v;
}

Field parse_field(const json& j) {
  if (!j.is_object() || !j.contains("type")) parse_fail("field must have a \"type\"");
  std::string type = j.at("type").get<std::string>();
  if (type == "rational") {
    require_keys(j, "field", {"type"});
    return Field::rationals();
  }
  if (type == "prime") {
    require_keys(j, "field", {"type", "p"});
    if (!j.at("p").is_number_integer()) parse_fail("field \"p\" must be an integer");
    long long p = j.at("p").get<long long>();
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
      parse_fail("field \"p\" = " + std::to_string(p) + " is not prime");
    return Field::gf(static_cast<std::uint64_t>(p));
  }
  parse_fail("unknown field type \"" + type + "\"");
}

// Barcode construction without the duplicate check; validation reports
// duplicates through validate_module.
Barcode raw_barcode(const Vineyard& v, std::size_t i) {
  Barcode bc;
  bc.slots.resize(v.vine_count());
  for (std::size_t p = 0; p < v.vine_count(); ++p)
    if (v.vines[p].supported_at(i)) bc.slots[p] = v.vines[p].interval_at(i);
  return bc;
}

MorphismMatrix parse_pair_matrix(const json& entries, const Vineyard& vy, const Field& f,
                                 std::size_t pair, bool is_alpha) {
  std::string where = std::string(is_alpha ? "alpha" : "beta") + "[" + std::to_string(pair) + "]";
  if (!entries.is_array()) parse_fail(where + " must be an array of sparse entries");
  const std::size_t n = vy.vine_count();
  Matrix mat(f, n, n);
  std::set<std::pair<int, int>> seen;
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 3)
      parse_fail(where + " entries must be [row, col, value] triples");
    if (!e[0].is_number_integer() || !e[1].is_number_integer())
      parse_fail(where + " row/col must be vine ids");
    int row_id = e[0].get<int>(), col_id = e[1].get<int>();
    auto rp = vy.position_of(row_id);
    auto cp = vy.position_of(col_id);
    if (!rp || !cp) parse_fail(where + " references an unknown vine id");
    if (!seen.insert({row_id, col_id}).second)
      parse_fail(where + " has a duplicate entry for (" + std::to_string(row_id) + "," +
                 std::to_string(col_id) + ")");
    mat.set(*rp, *cp, parse_scalar(f, e[2], where));
  }
  Barcode lo = raw_barcode(vy, pair), hi = raw_barcode(vy, pair + 1);
  Rat eps = Rat(vy.grid[pair + 1] - vy.grid[pair]);
  if (is_alpha) return MorphismMatrix{std::move(mat), eps, std::move(lo), std::move(hi)};
  return MorphismMatrix{std::move(mat), eps, std::move(hi), std::move(lo)};
}

}  // namespace

VineyardModuleRep parse_module(const std::string& text, bool validate) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    parse_fail(e.what());
  }
  require_keys(doc, "document", {"field", "times", "vines", "alpha", "beta"});

  VineyardModuleRep rep;
  rep.field = parse_field(doc.at("field"));

  const json& times = doc.at("times");
  if (!times.is_array() || times.size() < 2)
    parse_fail("times must be an array of at least 2 entries");
  for (std::size_t i = 0; i < times.size(); ++i)
    rep.vy.grid.times.push_back(parse_rat(times[i], "times[" + std::to_string(i) + "]"));
  for (std::size_t i = 0; i + 1 < rep.vy.grid.size(); ++i)
    if (!(rep.vy.grid[i] < rep.vy.grid[i + 1]))
      parse_fail("times must be strictly increasing");

  const json& vines = doc.at("vines");
  if (!vines.is_array()) parse_fail("vines must be an array");
  for (std::size_t vi = 0; vi < vines.size(); ++vi) {
    std::string where = "vines[" + std::to_string(vi) + "]";
    const json& jv = vines[vi];
    require_keys(jv, where, {"id", "support", "birth", "death"});
    Vine vn;
    if (!jv.at("id").is_number_integer()) parse_fail(where + " id must be an integer");
    vn.id = jv.at("id").get<int>();
    const json& sup = jv.at("support");
    if (!sup.is_array() || sup.size() != 2 || !sup[0].is_number_unsigned() ||
        !sup[1].is_number_unsigned())
      parse_fail(where + " support must be [lo, hi] grid indices");
    vn.lo = sup[0].get<std::size_t>();
    vn.hi = sup[1].get<std::size_t>();
    if (vn.lo > vn.hi || vn.hi >= rep.vy.grid.size())
      parse_fail(where + " support out of range");
    const json& jb = jv.at("birth");
    const json& jd = jv.at("death");
    std::size_t len = vn.hi - vn.lo + 1;
    if (!jb.is_array() || !jd.is_array() || jb.size() != len || jd.size() != len)
      parse_fail(where + " birth/death lists must match the support length");
    for (std::size_t s = 0; s < len; ++s) {
      vn.births.push_back(parse_rat(jb[s], where + " birth"));
      vn.deaths.push_back(parse_rat(jd[s], where + " death"));
    }
    rep.vy.vines.push_back(std::move(vn));
  }
  std::sort(rep.vy.vines.begin(), rep.vy.vines.end(),
            [](const Vine& a, const Vine& b) { return a.id < b.id; });
  for (std::size_t p = 0; p + 1 < rep.vy.vines.size(); ++p)
    if (rep.vy.vines[p].id == rep.vy.vines[p + 1].id)
      parse_fail("duplicate vine id " + std::to_string(rep.vy.vines[p].id));

  const std::size_t pairs = rep.vy.grid.size() - 1;
  const json& ja = doc.at("alpha");
  const json& jb = doc.at("beta");
  if (!ja.is_array() || ja.size() != pairs)
    parse_fail("alpha must have one entry list per consecutive grid pair");
  if (!jb.is_array() || jb.size() != pairs)
    parse_fail("beta must have one entry list per consecutive grid pair");
  for (std::size_t m = 0; m < pairs; ++m) {
    rep.alpha.push_back(parse_pair_matrix(ja[m], rep.vy, rep.field, m, true));
    rep.beta.push_back(parse_pair_matrix(jb[m], rep.vy, rep.field, m, false));
  }

  if (validate) {
    Report vr = validate_vineyard(rep.vy);
    Report mr = validate_module(rep);
    vr.merge(mr);
    if (!vr.ok()) fail("ValidationError", vr.to_string());
  }
  return rep;
}

std::string serialize_module(const VineyardModuleRep& m) {
  json doc = json::object();
  if (m.field.is_prime_field())
    doc["field"] = {{"type", "prime"}, {"p", m.field.p}};
  else
    doc["field"] = {{"type", "rational"}};

  json times = json::array();
  for (const Rat& t : m.vy.grid.times) times.push_back(rat_to_string(t));
  doc["times"] = std::move(times);

  json vines = json::array();
  std::vector<const Vine*> sorted;
  for (const Vine& vn : m.vy.vines) sorted.push_back(&vn);
  std::sort(sorted.begin(), sorted.end(),
            [](const Vine* a, const Vine* b) { return a->id < b->id; });
  for (const Vine* vn : sorted) {
    json jv = json::object();
    jv["id"] = vn->id;
    jv["support"] = {vn->lo, vn->hi};
    json jb = json::array(), jd = json::array();
    for (const Rat& r : vn->births) jb.push_back(rat_to_string(r));
    for (const Rat& r : vn->deaths) jd.push_back(rat_to_string(r));
    jv["birth"] = std::move(jb);
    jv["death"] = std::move(jd);
    vines.push_back(std::move(jv));
  }
  doc["vines"] = std::move(vines);

  auto emit = [&](const std::vector<MorphismMatrix>& mats) {
    json out = json::array();
    for (const MorphismMatrix& mm : mats) {
      std::vector<std::tuple<int, int, std::string>> entries;
      for (std::size_t j = 0; j < mm.mat.rows(); ++j)
        for (std::size_t i = 0; i < mm.mat.cols(); ++i)
          if (!mm.mat.at(j, i).is_zero())
            entries.push_back({m.vy.vines[j].id, m.vy.vines[i].id, mm.mat.at(j, i).to_string()});
      std::sort(entries.begin(), entries.end());
      json lst = json::array();
      for (const auto& [r, c, v] : entries) lst.push_back(json::array({r, c, v}));
      out.push_back(std::move(lst));
    }
    return out;
  };
  doc["alpha"] = emit(m.alpha);
  doc["beta"] = emit(m.beta);
  return doc.dump(2) + "\n";
}

}  // namespace vinerep
