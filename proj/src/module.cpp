#include "vinerep/module.hpp"

#include <algorithm>
#include <set>

#include "vinerep/error.hpp"

namespace vinerep {

namespace {

std::vector<bool> common_support(const Vineyard& v, std::size_t m) {
  auto a = v.support_at(m);
  auto b = v.support_at(m + 1);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] && b[i];
  return a;
}

}  // namespace

VineyardModuleRep trivial_module(const Vineyard& v, const Field& f) {
  Report vr = validate_vineyard(v);
  if (!vr.ok()) fail("NonCompliantVineyard", vr.to_string());
  VineyardModuleRep rep;
  rep.vy = v;
  rep.field = f;
  for (std::size_t m = 0; m + 1 < v.grid.size(); ++m) {
    Barcode lo = barcode_at(v, m);
    Barcode hi = barcode_at(v, m + 1);
    Rat eps = Rat(v.grid[m + 1] - v.grid[m]);
    Matrix pi = projection(f, common_support(v, m));
    rep.alpha.push_back(truncate(pi, lo, hi, eps));
    rep.beta.push_back(truncate(pi, hi, lo, eps));
  }
  return rep;
}

VineyardModuleRep direct_sum(const VineyardModuleRep& a, const VineyardModuleRep& b) {
  if (!(a.vy.grid == b.vy.grid)) fail("GridMismatch", "direct sum needs a shared grid");
  if (!(a.field == b.field)) fail("FieldMismatch", "direct sum needs a shared field");
  std::set<int> ids;
  for (const Vine& vn : a.vy.vines) ids.insert(vn.id);
  for (const Vine& vn : b.vy.vines)
    if (!ids.insert(vn.id).second)
      fail("IdCollision", "vine id " + std::to_string(vn.id) + " present in both summands");

  VineyardModuleRep out;
  out.field = a.field;
  out.vy.grid = a.vy.grid;
  out.vy.vines = a.vy.vines;
  out.vy.vines.insert(out.vy.vines.end(), b.vy.vines.begin(), b.vy.vines.end());
  std::sort(out.vy.vines.begin(), out.vy.vines.end(),
            [](const Vine& x, const Vine& y) { return x.id < y.id; });

  // position maps from each summand into the union
  auto embed = [&](const Vineyard& sub) {
    std::vector<std::size_t> map(sub.vines.size());
    for (std::size_t p = 0; p < sub.vines.size(); ++p)
      map[p] = *out.vy.position_of(sub.vines[p].id);
    return map;
  };
  auto map_a = embed(a.vy);
  auto map_b = embed(b.vy);

  for (std::size_t m = 0; m + 1 < out.vy.grid.size(); ++m) {
    Barcode lo = barcode_at(out.vy, m);
    Barcode hi = barcode_at(out.vy, m + 1);
    Rat eps = Rat(out.vy.grid[m + 1] - out.vy.grid[m]);
    auto block = [&](const Matrix& ma, const std::vector<std::size_t>& ia, const Matrix& mb,
                     const std::vector<std::size_t>& ib) {
      Matrix big(out.field, out.vy.vine_count(), out.vy.vine_count());
      for (std::size_t r = 0; r < ma.rows(); ++r)
        for (std::size_t c = 0; c < ma.cols(); ++c) big.set(ia[r], ia[c], ma.at(r, c));
      for (std::size_t r = 0; r < mb.rows(); ++r)
        for (std::size_t c = 0; c < mb.cols(); ++c) big.set(ib[r], ib[c], mb.at(r, c));
      return big;
    };
    out.alpha.push_back(
        truncate(block(a.alpha[m].mat, map_a, b.alpha[m].mat, map_b), lo, hi, eps));
    out.beta.push_back(
        truncate(block(a.beta[m].mat, map_a, b.beta[m].mat, map_b), hi, lo, eps));
  }
  return out;
}

Report validate_module(const VineyardModuleRep& m) {
  Report rep;
  const std::size_t pairs = m.vy.grid.size() >= 1 ? m.vy.grid.size() - 1 : 0;
  if (m.alpha.size() != pairs || m.beta.size() != pairs) {
    rep.add("ListSize", "module", "need one alpha and one beta per consecutive grid pair");
    return rep;
  }
  for (std::size_t i = 0; i < pairs; ++i) {
    std::string where = "pair " + std::to_string(i);
    Barcode lo, hi;
    try {
      lo = barcode_at(m.vy, i);
      hi = barcode_at(m.vy, i + 1);
    } catch (const error& e) {
      rep.add("DuplicateInterval", where, e.what());
      continue;
    }
    Rat eps = Rat(m.vy.grid[i + 1] - m.vy.grid[i]);
    const MorphismMatrix& al = m.alpha[i];
    const MorphismMatrix& be = m.beta[i];
    if (!(al.mat.field() == m.field) || !(be.mat.field() == m.field)) {
      rep.add("FieldMismatch", where, "matrix field differs from the module field");
      continue;
    }
    if (!(al.src == lo && al.dst == hi && be.src == hi && be.dst == lo)) {
      rep.add("BarcodeMismatch", where, "matrix barcodes do not match the vineyard slices");
      continue;
    }
    if (al.eps != eps || be.eps != eps) {
      rep.add("ShiftMismatch", where, "matrix shift differs from the grid gap");
      continue;
    }
    Report ra = validate_morphism(al);
    for (auto& v : ra.items) v.where = where + " alpha " + v.where;
    rep.merge(ra);
    Report rb = validate_morphism(be);
    for (auto& v : rb.items) v.where = where + " beta " + v.where;
    rep.merge(rb);
    if (!ra.ok() || !rb.ok()) continue;
    Rat two_eps = Rat(eps * 2);
    if (!(compose(be, al) == truncated_identity(m.field, lo, two_eps)))
      rep.add("InterleavingIdentity", where, "beta.alpha differs from the 2eps transition");
    if (!(compose(al, be) == truncated_identity(m.field, hi, two_eps)))
      rep.add("InterleavingIdentity", where, "alpha.beta differs from the 2eps transition");
  }
  return rep;
}

VineyardModuleRep change_basis(const VineyardModuleRep& m, std::size_t i, const Matrix& t) {
  if (i >= m.vy.grid.size()) fail("IndexOutOfRange", "grid index out of range");
  Barcode bc = barcode_at(m.vy, i);
  if (!is_basis_transformation(t, bc))
    fail("InvalidTransform", "matrix is not a basis transformation at index " + std::to_string(i));
  Matrix tinv = inverse_on_support(t, bc.support());
  VineyardModuleRep out = m;
  if (i < m.pair_count()) {  // source at i
    out.alpha[i] = truncate(m.alpha[i].mat * t, m.alpha[i].src, m.alpha[i].dst, m.alpha[i].eps);
    out.beta[i] = truncate(tinv * m.beta[i].mat, m.beta[i].src, m.beta[i].dst, m.beta[i].eps);
  }
  if (i > 0) {  // target at i
    std::size_t p = i - 1;
    out.alpha[p] = truncate(tinv * m.alpha[p].mat, m.alpha[p].src, m.alpha[p].dst, m.alpha[p].eps);
    out.beta[p] = truncate(m.beta[p].mat * t, m.beta[p].src, m.beta[p].dst, m.beta[p].eps);
  }
  return out;
}

VineyardModuleRep restrict_to(const VineyardModuleRep& m, const std::vector<int>& vine_ids) {
  std::set<int> keep(vine_ids.begin(), vine_ids.end());
  std::vector<std::size_t> positions;
  for (int id : vine_ids) {
    auto p = m.vy.position_of(id);
    if (!p) fail("IndexOutOfRange", "unknown vine id " + std::to_string(id));
  }
  for (std::size_t p = 0; p < m.vy.vine_count(); ++p)
    if (keep.count(m.vy.vines[p].id)) positions.push_back(p);

  // block compatibility: no coupling between the set and its complement
  for (std::size_t pair = 0; pair < m.pair_count(); ++pair) {
    for (const MorphismMatrix* mm : {&m.alpha[pair], &m.beta[pair]}) {
      for (std::size_t j = 0; j < mm->mat.rows(); ++j) {
        for (std::size_t i = 0; i < mm->mat.cols(); ++i) {
          if (mm->mat.at(j, i).is_zero()) continue;
          bool in_j = keep.count(m.vy.vines[j].id) > 0;
          bool in_i = keep.count(m.vy.vines[i].id) > 0;
          if (in_j != in_i)
            fail("NotBlockCompatible",
                 "pair " + std::to_string(pair) + " couples the block to its complement");
        }
      }
    }
  }

  VineyardModuleRep out;
  out.field = m.field;
  out.vy.grid = m.vy.grid;
  for (std::size_t p : positions) out.vy.vines.push_back(m.vy.vines[p]);
  for (std::size_t pair = 0; pair < m.pair_count(); ++pair) {
    Barcode lo = barcode_at(out.vy, pair);
    Barcode hi = barcode_at(out.vy, pair + 1);
    auto project = [&](const Matrix& big) {
      Matrix sm(m.field, positions.size(), positions.size());
      for (std::size_t r = 0; r < positions.size(); ++r)
        for (std::size_t c = 0; c < positions.size(); ++c)
          sm.set(r, c, big.at(positions[r], positions[c]));
      return sm;
    };
    out.alpha.push_back(truncate(project(m.alpha[pair].mat), lo, hi, m.alpha[pair].eps));
    out.beta.push_back(truncate(project(m.beta[pair].mat), hi, lo, m.beta[pair].eps));
  }
  return out;
}

bool reps_equal(const VineyardModuleRep& a, const VineyardModuleRep& b) {
  if (!(a.field == b.field) || !(a.vy == b.vy)) return false;
  if (a.alpha.size() != b.alpha.size() || a.beta.size() != b.beta.size()) return false;
  for (std::size_t i = 0; i < a.alpha.size(); ++i)
    if (!(a.alpha[i] == b.alpha[i]) || !(a.beta[i] == b.beta[i])) return false;
  return true;
}

}  // namespace vinerep
