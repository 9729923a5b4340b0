#include "vinerep/simplify.hpp"

#include <algorithm>
#include <numeric>

#include "vinerep/error.hpp"

namespace vinerep {

namespace {

std::vector<bool> common_support(const Vineyard& v, std::size_t m) {
  auto a = v.support_at(m);
  auto b = v.support_at(m + 1);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] && b[i];
  return a;
}

void require_simplifiable(const VineyardModuleRep& m) {
  Report vr = validate_vineyard(m.vy);
  if (!vr.ok()) fail("NonCompliantVineyard", vr.to_string());
  Report mr = validate_module(m);
  if (!mr.ok()) fail("InvalidModule", mr.to_string());
}

struct PairContext {
  Barcode lo, hi;
  Rat eps;
  std::vector<bool> common;
  Matrix pi;
};

PairContext pair_context(const VineyardModuleRep& m, std::size_t pair) {
  PairContext c;
  c.lo = barcode_at(m.vy, pair);
  c.hi = barcode_at(m.vy, pair + 1);
  c.eps = Rat(m.vy.grid[pair + 1] - m.vy.grid[pair]);
  c.common = common_support(m.vy, pair);
  c.pi = projection(m.field, c.common);
  return c;
}

// Positions of the incompatibility pair (k, l) given as vine ids.
std::pair<std::size_t, std::size_t> positions_of(const Vineyard& v, std::pair<int, int> kl) {
  auto kp = v.position_of(kl.first);
  auto lp = v.position_of(kl.second);
  if (!kp || !lp) fail("InternalError", "incompatibility names an unknown vine");
  return {*kp, *lp};
}

}  // namespace

PassResult forward_simplify(const VineyardModuleRep& m) {
  require_simplifiable(m);
  PassResult out;
  out.rep = m;
  const std::size_t n = m.vy.vine_count();
  out.transforms.assign(m.vy.grid.size(), Matrix::identity(m.field, n));

  for (std::size_t pair = 0; pair < out.rep.pair_count(); ++pair) {
    PairContext c = pair_context(out.rep, pair);
    const Matrix a = out.rep.alpha[pair].mat;
    auto inc = incompatibility(m.vy, pair, Direction::forward);

    Matrix t = Matrix::identity(m.field, n);
    MorphismMatrix new_alpha = truncate(c.pi, c.lo, c.hi, c.eps);
    MorphismMatrix new_beta = truncate(c.pi, c.hi, c.lo, c.eps);
    if (inc) {
      auto [kp, lp] = positions_of(m.vy, *inc);
      const Scalar& diag = a.at(lp, lp);
      if (diag.is_zero())
        fail("DivisionByZeroDiagonal",
             "zero diagonal at pair " + std::to_string(pair) + " vine position " +
                 std::to_string(lp));
      Scalar lf = a.at(lp, kp) / diag;
      t = tilde(a * elementary(m.field, n, lp, kp, -lf), c.common);
      new_alpha = truncate(elementary(m.field, n, lp, kp, lf) * c.pi, c.lo, c.hi, c.eps);
      new_beta = truncate(elementary(m.field, n, lp, kp, -lf) * c.pi, c.hi, c.lo, c.eps);
      out.residuals.push_back(
          {m.vy.grid[pair], pair, inc->first, inc->second, lf});
    } else {
      t = tilde(a, c.common);
    }
    if (!is_basis_transformation(t, c.hi))
      fail("NotAbsorbable", "pair " + std::to_string(pair) +
                                ": interleaving matrix cannot be absorbed into the basis");

    // the absorbed matrix must agree with the directly-set one
    MorphismMatrix check = truncate(out.rep.beta[pair].mat * t, c.hi, c.lo, c.eps);
    if (!(check == new_beta))
      fail("InternalError", "beta rebasing cross-check failed at pair " + std::to_string(pair));

    out.rep.alpha[pair] = std::move(new_alpha);
    out.rep.beta[pair] = std::move(new_beta);
    out.transforms[pair + 1] = out.transforms[pair + 1] * t;
    if (pair + 1 < out.rep.pair_count()) {
      Matrix tinv = inverse_on_support(t, c.hi.support());
      MorphismMatrix& up_a = out.rep.alpha[pair + 1];
      MorphismMatrix& up_b = out.rep.beta[pair + 1];
      up_a = truncate(up_a.mat * t, up_a.src, up_a.dst, up_a.eps);
      up_b = truncate(tinv * up_b.mat, up_b.src, up_b.dst, up_b.eps);
    }
  }
  return out;
}

PassResult backward_simplify(const VineyardModuleRep& m) {
  require_simplifiable(m);
  PassResult out;
  out.rep = m;
  const std::size_t n = m.vy.vine_count();
  out.transforms.assign(m.vy.grid.size(), Matrix::identity(m.field, n));

  for (std::size_t pair = out.rep.pair_count(); pair-- > 0;) {
    PairContext c = pair_context(out.rep, pair);
    const Matrix a = out.rep.beta[pair].mat;
    auto inc = incompatibility(m.vy, pair + 1, Direction::backward);

    Matrix t = Matrix::identity(m.field, n);
    MorphismMatrix new_alpha = truncate(c.pi, c.lo, c.hi, c.eps);
    MorphismMatrix new_beta = truncate(c.pi, c.hi, c.lo, c.eps);
    if (inc) {
      auto [kp, lp] = positions_of(m.vy, *inc);
      const Scalar& diag = a.at(lp, lp);
      if (diag.is_zero())
        fail("DivisionByZeroDiagonal",
             "zero diagonal at pair " + std::to_string(pair) + " vine position " +
                 std::to_string(lp));
      Scalar lam = a.at(lp, kp) / diag;
      t = tilde(a * elementary(m.field, n, lp, kp, -lam), c.common);
      new_beta = truncate(elementary(m.field, n, lp, kp, lam) * c.pi, c.hi, c.lo, c.eps);
      new_alpha = truncate(elementary(m.field, n, lp, kp, -lam) * c.pi, c.lo, c.hi, c.eps);
      out.residuals.push_back(
          {m.vy.grid[pair + 1], pair + 1, inc->first, inc->second, lam});
    } else {
      t = tilde(a, c.common);
    }
    if (!is_basis_transformation(t, c.lo))
      fail("NotAbsorbable", "pair " + std::to_string(pair) +
                                ": interleaving matrix cannot be absorbed into the basis");

    MorphismMatrix check = truncate(out.rep.alpha[pair].mat * t, c.lo, c.hi, c.eps);
    if (!(check == new_alpha))
      fail("InternalError", "alpha rebasing cross-check failed at pair " + std::to_string(pair));

    out.rep.alpha[pair] = std::move(new_alpha);
    out.rep.beta[pair] = std::move(new_beta);
    out.transforms[pair] = out.transforms[pair] * t;
    if (pair > 0) {
      Matrix tinv = inverse_on_support(t, c.lo.support());
      MorphismMatrix& dn_a = out.rep.alpha[pair - 1];
      MorphismMatrix& dn_b = out.rep.beta[pair - 1];
      dn_b = truncate(dn_b.mat * t, dn_b.src, dn_b.dst, dn_b.eps);
      dn_a = truncate(tinv * dn_a.mat, dn_a.src, dn_a.dst, dn_a.eps);
    }
  }
  std::reverse(out.residuals.begin(), out.residuals.end());
  return out;
}

namespace {

// rep.alpha/beta must equal truncate(T_dst^{-1} . original . T_src) with the
// accumulated transforms; exact, entrywise.
void assert_conjugation_identity(const VineyardModuleRep& original,
                                 const VineyardModuleRep& simplified,
                                 const std::vector<Matrix>& transforms) {
  for (std::size_t pair = 0; pair < original.pair_count(); ++pair) {
    Barcode lo = barcode_at(original.vy, pair);
    Barcode hi = barcode_at(original.vy, pair + 1);
    Matrix inv_lo = inverse_on_support(transforms[pair], lo.support());
    Matrix inv_hi = inverse_on_support(transforms[pair + 1], hi.support());
    MorphismMatrix alpha_conj =
        truncate(inv_hi * original.alpha[pair].mat * transforms[pair], lo, hi,
                 original.alpha[pair].eps);
    MorphismMatrix beta_conj =
        truncate(inv_lo * original.beta[pair].mat * transforms[pair + 1], hi, lo,
                 original.beta[pair].eps);
    if (!(alpha_conj == simplified.alpha[pair]) || !(beta_conj == simplified.beta[pair]))
      fail("InternalError", "conjugation identity failed at pair " + std::to_string(pair));
  }
}

// After both passes every matrix is a truncated projection except at pairs
// immediately below a backwards-incompatible time, which carry the recorded
// elementary residual.
void assert_residual_shape(const VineyardModuleRep& rep,
                           const std::vector<ResidualEntry>& lambda) {
  const std::size_t n = rep.vy.vine_count();
  for (std::size_t pair = 0; pair < rep.pair_count(); ++pair) {
    auto common = common_support(rep.vy, pair);
    Matrix pi = projection(rep.field, common);
    Barcode lo = barcode_at(rep.vy, pair);
    Barcode hi = barcode_at(rep.vy, pair + 1);
    Rat eps = Rat(rep.vy.grid[pair + 1] - rep.vy.grid[pair]);
    const ResidualEntry* res = nullptr;
    for (const auto& r : lambda)
      if (r.grid_index == pair + 1) res = &r;
    Matrix want_alpha = pi, want_beta = pi;
    if (res) {
      auto kp = rep.vy.position_of(res->k);
      auto lp = rep.vy.position_of(res->l);
      want_beta = elementary(rep.field, n, *lp, *kp, res->value) * pi;
      want_alpha = elementary(rep.field, n, *lp, *kp, -res->value) * pi;
    }
    if (!(rep.alpha[pair] == truncate(want_alpha, lo, hi, eps)) ||
        !(rep.beta[pair] == truncate(want_beta, hi, lo, eps)))
      fail("InternalError",
           "unexpected residual shape after simplification at pair " + std::to_string(pair));
  }
}

}  // namespace

SimplifiedModule simplify(const VineyardModuleRep& m) {
  PassResult fwd = forward_simplify(m);
  PassResult bwd = backward_simplify(fwd.rep);
  SimplifiedModule s;
  s.rep = std::move(bwd.rep);
  s.lambda = std::move(bwd.residuals);
  s.forward_residuals = std::move(fwd.residuals);
  s.transforms.reserve(fwd.transforms.size());
  for (std::size_t i = 0; i < fwd.transforms.size(); ++i)
    s.transforms.push_back(fwd.transforms[i] * bwd.transforms[i]);
  assert_conjugation_identity(m, s.rep, s.transforms);
  assert_residual_shape(s.rep, s.lambda);
  return s;
}

std::vector<Scalar> lambda_vector(const SimplifiedModule& s) {
  std::vector<Scalar> v;
  v.reserve(s.lambda.size());
  for (const auto& r : s.lambda) v.push_back(r.value);
  return v;
}

TrivialityResult is_trivial(const SimplifiedModule& s) {
  for (const auto& r : s.lambda)
    if (!r.value.is_zero()) return {false, std::nullopt};
  return {true, s.transforms};
}

std::vector<std::vector<int>> block_partition(const VineyardModuleRep& m) {
  const std::size_t n = m.vy.vine_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t x, std::size_t y) { parent[find(x)] = find(y); };

  for (std::size_t pair = 0; pair < m.pair_count(); ++pair)
    for (const MorphismMatrix* mm : {&m.alpha[pair], &m.beta[pair]})
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
          if (j != i && !mm->mat.at(j, i).is_zero()) unite(j, i);

  std::vector<std::vector<int>> blocks;
  std::vector<long> block_of(n, -1);
  for (std::size_t p = 0; p < n; ++p) {
    std::size_t root = find(p);
    if (block_of[root] < 0) {
      block_of[root] = static_cast<long>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(block_of[root])].push_back(m.vy.vines[p].id);
  }
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

namespace {

// All valid basis transformations at a barcode over a small prime field:
// free nonzero diagonal on supported slots, free values at strictly
// staircase-ordered positions, identity elsewhere.
std::vector<Matrix> enumerate_transforms(const Field& f, const Barcode& bc,
                                         std::size_t budget) {
  const std::size_t n = bc.size();
  std::vector<std::size_t> diag_slots;
  std::vector<std::pair<std::size_t, std::size_t>> free_slots;
  for (std::size_t i = 0; i < n; ++i)
    if (bc.present(i)) diag_slots.push_back(i);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (j != i && bc.present(j) && bc.present(i) && staircase_leq(bc.at(j), bc.at(i)))
        free_slots.push_back({j, i});

  const std::uint64_t p = f.p;
  double count = 1;
  for (std::size_t s = 0; s < diag_slots.size(); ++s) count *= static_cast<double>(p - 1);
  for (std::size_t s = 0; s < free_slots.size(); ++s) count *= static_cast<double>(p);
  if (count > static_cast<double>(budget))
    fail("TooLarge", "transform enumeration exceeds the oracle budget");

  std::vector<Matrix> out;
  std::vector<std::uint64_t> diag(diag_slots.size(), 1), off(free_slots.size(), 0);
  for (;;) {
    Matrix t = Matrix::identity(f, n);
    for (std::size_t s = 0; s < diag_slots.size(); ++s)
      t.set(diag_slots[s], diag_slots[s], Scalar::from_int(f, static_cast<long>(diag[s])));
    for (std::size_t s = 0; s < free_slots.size(); ++s)
      if (off[s])
        t.set(free_slots[s].first, free_slots[s].second,
              Scalar::from_int(f, static_cast<long>(off[s])));
    out.push_back(std::move(t));

    std::size_t s = 0;
    for (; s < off.size(); ++s) {
      if (++off[s] < p) break;
      off[s] = 0;
    }
    if (s < off.size()) continue;
    for (s = 0; s < diag.size(); ++s) {
      if (++diag[s] < p) break;
      diag[s] = 1;
    }
    if (s == diag.size()) break;
  }
  return out;
}

}  // namespace

bool brute_force_trivial(const VineyardModuleRep& m) {
  if (!m.field.is_prime_field()) fail("TooLarge", "oracle requires a prime field");
  if (m.vy.vine_count() > 3) fail("TooLarge", "oracle bound: at most 3 vines");
  if (m.vy.grid.size() > 10) fail("TooLarge", "oracle bound: at most 10 grid points");

  VineyardModuleRep triv = trivial_module(m.vy, m.field);
  const std::size_t levels = m.vy.grid.size();
  std::vector<std::vector<Matrix>> candidates(levels);
  std::vector<Barcode> bcs(levels);
  for (std::size_t i = 0; i < levels; ++i) {
    bcs[i] = barcode_at(m.vy, i);
    candidates[i] = enumerate_transforms(m.field, bcs[i], 1 << 16);
  }

  std::size_t nodes = 0;
  constexpr std::size_t kNodeBudget = 4000000;

  // depth-first over transform families with per-pair pruning
  std::vector<const Matrix*> chosen(levels, nullptr);
  auto pair_matches = [&](std::size_t pair, const Matrix& t_lo, const Matrix& t_hi) {
    if (++nodes > kNodeBudget) fail("TooLarge", "oracle search exceeded the node budget");
    Matrix inv_hi = inverse_on_support(t_hi, bcs[pair + 1].support());
    MorphismMatrix a = truncate(inv_hi * m.alpha[pair].mat * t_lo, bcs[pair], bcs[pair + 1],
                                m.alpha[pair].eps);
    if (!(a == triv.alpha[pair])) return false;
    Matrix inv_lo = inverse_on_support(t_lo, bcs[pair].support());
    MorphismMatrix b = truncate(inv_lo * m.beta[pair].mat * t_hi, bcs[pair + 1], bcs[pair],
                                m.beta[pair].eps);
    return b == triv.beta[pair];
  };

  auto search = [&](auto&& self, std::size_t level) -> bool {
    if (level == levels) return true;
    for (const Matrix& t : candidates[level]) {
      if (level > 0 && !pair_matches(level - 1, *chosen[level - 1], t)) continue;
      chosen[level] = &t;
      if (self(self, level + 1)) return true;
    }
    return false;
  };
  return search(search, 0);
}

}  // namespace vinerep
