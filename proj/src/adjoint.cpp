#include "g2rs/adjoint.hpp"

#include "g2rs/commutators.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace g2rs {

// ---------------------------------------------------------------------------
// AdjointMatrix

AdjointMatrix::AdjointMatrix() : entries_(adjoint_dim * adjoint_dim) {}

AdjointMatrix AdjointMatrix::identity() {
  AdjointMatrix m;
  for (int i = 0; i < adjoint_dim; ++i) m(i, i) = 1;
  return m;
}

AdjointMatrix operator*(const AdjointMatrix &a, const AdjointMatrix &b) {
  AdjointMatrix c;
  for (int i = 0; i < adjoint_dim; ++i)
    for (int k = 0; k < adjoint_dim; ++k) {
      const Rational &aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (int j = 0; j < adjoint_dim; ++j) {
        const Rational &bkj = b(k, j);
        if (sgn(bkj) != 0) c(i, j) += aik * bkj;
      }
    }
  return c;
}

AdjointMatrix operator+(const AdjointMatrix &a, const AdjointMatrix &b) {
  AdjointMatrix c;
  for (int i = 0; i < adjoint_dim; ++i)
    for (int j = 0; j < adjoint_dim; ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

AdjointMatrix operator-(const AdjointMatrix &a, const AdjointMatrix &b) {
  AdjointMatrix c;
  for (int i = 0; i < adjoint_dim; ++i)
    for (int j = 0; j < adjoint_dim; ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

AdjointMatrix operator*(const Rational &s, const AdjointMatrix &a) {
  AdjointMatrix c;
  if (sgn(s) == 0) return c;
  for (int i = 0; i < adjoint_dim; ++i)
    for (int j = 0; j < adjoint_dim; ++j)
      if (sgn(a(i, j)) != 0) c(i, j) = s * a(i, j);
  return c;
}

bool AdjointMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational &r) { return sgn(r) == 0; });
}

bool AdjointMatrix::is_identity() const { return *this == identity(); }

AdjointMatrix AdjointMatrix::transpose() const {
  AdjointMatrix t;
  for (int i = 0; i < adjoint_dim; ++i)
    for (int j = 0; j < adjoint_dim; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Rational AdjointMatrix::determinant() const {
  AdjointMatrix m = *this;
  Rational det = 1;
  for (int col = 0; col < adjoint_dim; ++col) {
    int pivot = -1;
    for (int r = col; r < adjoint_dim; ++r)
      if (sgn(m(r, col)) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < adjoint_dim; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (int r = col + 1; r < adjoint_dim; ++r) {
      if (sgn(m(r, col)) == 0) continue;
      Rational f = m(r, col) / m(col, col);
      for (int j = col; j < adjoint_dim; ++j) m(r, j) -= f * m(col, j);
    }
  }
  return det;
}

AdjointMatrix AdjointMatrix::inverse() const {
  AdjointMatrix m = *this;
  AdjointMatrix inv = identity();
  for (int col = 0; col < adjoint_dim; ++col) {
    int pivot = -1;
    for (int r = col; r < adjoint_dim; ++r)
      if (sgn(m(r, col)) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::domain_error("AdjointMatrix::inverse: singular matrix");
    for (int j = 0; j < adjoint_dim; ++j) {
      std::swap(m(pivot, j), m(col, j));
      std::swap(inv(pivot, j), inv(col, j));
    }
    Rational p = m(col, col);
    for (int j = 0; j < adjoint_dim; ++j) {
      m(col, j) /= p;
      inv(col, j) /= p;
    }
    for (int r = 0; r < adjoint_dim; ++r) {
      if (r == col || sgn(m(r, col)) == 0) continue;
      Rational f = m(r, col);
      for (int j = 0; j < adjoint_dim; ++j) {
        m(r, j) -= f * m(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Structure constants

namespace {

using Sparse = std::vector<std::pair<int, int>>;

// Largest p with s - p r a root.
int string_length_below(Root r, Root s) {
  int p = 0;
  while (is_root(s - (p + 1) * r)) ++p;
  return p;
}

Sparse basis_bracket(const std::array<std::array<int, 12>, 12> &n, int i, int j) {
  if (i >= 12 && j >= 12) return {};
  if (i >= 12) {
    Root r = all_roots()[j];
    int c = pairing(r, i == h_alpha_index ? roots::alpha : roots::beta);
    if (c == 0) return {};
    return {{j, c}};
  }
  if (j >= 12) {
    Sparse s = basis_bracket(n, j, i);
    for (auto &[k, c] : s) c = -c;
    return s;
  }
  Root a = all_roots()[i], b = all_roots()[j];
  Root sum = a + b;
  if (sum == Root{0, 0}) {
    auto [ca, cb] = coroot_coordinates(a);
    Sparse s;
    if (ca) s.push_back({h_alpha_index, ca});
    if (cb) s.push_back({h_beta_index, cb});
    return s;
  }
  if (is_root(sum) && n[i][j] != 0) return {{root_index(sum), n[i][j]}};
  return {};
}

Sparse bracket_sparse(const std::array<std::array<int, 12>, 12> &n, const Sparse &u,
                      const Sparse &v) {
  std::map<int, int> acc;
  for (auto [i, a] : u)
    for (auto [j, b] : v)
      for (auto [k, c] : basis_bracket(n, i, j)) acc[k] += a * b * c;
  Sparse out;
  for (auto [k, c] : acc)
    if (c) out.push_back({k, c});
  return out;
}

// Returns false when a triple fails; triples that touch an unassigned pair are skipped.
bool jacobi_partial(const std::array<std::array<int, 12>, 12> &n,
                    const std::array<std::array<bool, 12>, 12> &assigned) {
  auto touches_unassigned = [&](int i, int j) {
    if (i >= 12 || j >= 12) return false;
    Root s = all_roots()[i] + all_roots()[j];
    return is_root(s) && !assigned[i][j];
  };
  for (int x = 0; x < adjoint_dim; ++x)
    for (int y = x + 1; y < adjoint_dim; ++y)
      for (int z = y + 1; z < adjoint_dim; ++z) {
        // All brackets that may occur involve pairs among x, y, z and their sums.
        bool skip = touches_unassigned(x, y) || touches_unassigned(y, z) || touches_unassigned(x, z);
        if (!skip) {
          for (auto [p, q] : {std::pair{x, y}, std::pair{y, z}, std::pair{z, x}}) {
            int third = x ^ y ^ z ^ p ^ q;
            for (auto [k, c] : basis_bracket(n, p, q)) {
              (void)c;
              if (touches_unassigned(third, k) || touches_unassigned(k, third)) skip = true;
            }
          }
        }
        if (skip) continue;
        Sparse t1 = bracket_sparse(n, {{x, 1}}, bracket_sparse(n, {{y, 1}}, {{z, 1}}));
        Sparse t2 = bracket_sparse(n, {{y, 1}}, bracket_sparse(n, {{z, 1}}, {{x, 1}}));
        Sparse t3 = bracket_sparse(n, {{z, 1}}, bracket_sparse(n, {{x, 1}}, {{y, 1}}));
        std::map<int, int> total;
        for (const auto *t : {&t1, &t2, &t3})
          for (auto [k, c] : *t) total[k] += c;
        for (auto [k, c] : total)
          if (c != 0) return false;
      }
  return true;
}

AdjointMatrix ad_matrix(const std::array<std::array<int, 12>, 12> &n, int x) {
  AdjointMatrix m;
  for (int j = 0; j < adjoint_dim; ++j)
    for (auto [k, c] : basis_bracket(n, x, j)) m(k, j) += c;
  return m;
}

void fill_matrices(ChevalleyBasis &b) {
  for (int i = 0; i < 12; ++i) b.e[i] = ad_matrix(b.structure_constants, i);
  b.h_alpha = ad_matrix(b.structure_constants, h_alpha_index);
  b.h_beta = ad_matrix(b.structure_constants, h_beta_index);
}

} // namespace

std::vector<std::pair<int, int>> ChevalleyBasis::bracket(int i, int j) const {
  return basis_bracket(structure_constants, i, j);
}

bool ChevalleyBasis::jacobi_holds() const {
  std::array<std::array<bool, 12>, 12> all{};
  for (auto &row : all) row.fill(true);
  return jacobi_partial(structure_constants, all);
}

AdjointMatrix ChevalleyBasis::killing_gram() const {
  std::array<AdjointMatrix, adjoint_dim> ads;
  for (int i = 0; i < 12; ++i) ads[i] = e[i];
  ads[h_alpha_index] = h_alpha;
  ads[h_beta_index] = h_beta;
  AdjointMatrix gram;
  for (int i = 0; i < adjoint_dim; ++i)
    for (int j = i; j < adjoint_dim; ++j) {
      AdjointMatrix p = ads[i] * ads[j];
      Rational tr = 0;
      for (int k = 0; k < adjoint_dim; ++k) tr += p(k, k);
      gram(i, j) = tr;
      gram(j, i) = tr;
    }
  return gram;
}

ChevalleyBasis build_basis() {
  // Unordered pairs {r, s} (index i < j) whose sum is a root.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 12; ++i)
    for (int j = i + 1; j < 12; ++j)
      if (is_root(all_roots()[i] + all_roots()[j])) pairs.push_back({i, j});

  ChevalleyBasis basis;
  auto &n = basis.structure_constants;
  std::array<std::array<bool, 12>, 12> assigned{};

  std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
    if (k == pairs.size()) return true;
    auto [i, j] = pairs[k];
    int magnitude = string_length_below(all_roots()[i], all_roots()[j]) + 1;
    for (int sign : {1, -1}) {
      n[i][j] = sign * magnitude;
      n[j][i] = -sign * magnitude;
      assigned[i][j] = assigned[j][i] = true;
      if (jacobi_partial(n, assigned) && search(k + 1)) return true;
      assigned[i][j] = assigned[j][i] = false;
      n[i][j] = n[j][i] = 0;
    }
    return false;
  };
  if (!search(0)) throw ConstructionError("no sign assignment satisfies the Jacobi identity");
  fill_matrices(basis);
  return basis;
}

namespace {

ChevalleyBasis rescaled(const ChevalleyBasis &base, const std::array<int, 6> &signs) {
  std::array<int, 12> c{};
  for (int i = 0; i < 6; ++i) c[i] = c[i + 6] = signs[i];
  ChevalleyBasis out;
  out.signs = signs;
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) {
      int v = base.structure_constants[i][j];
      if (v == 0) continue;
      int k = root_index(all_roots()[i] + all_roots()[j]);
      out.structure_constants[i][j] = c[i] * c[j] * c[k] * v;
    }
  fill_matrices(out);
  return out;
}

Rational power(const Rational &x, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

// Name of each checked relation plus whether it holds at the sample (x, y).
std::vector<std::pair<std::string, bool>> commutator_checks(const AdjointModel &model,
                                                            const Rational &x, const Rational &y) {
  std::vector<std::pair<std::string, bool>> out;
  for (std::size_t i = 0; i < positive_roots.size(); ++i)
    for (std::size_t j = i + 1; j < positive_roots.size(); ++j) {
      Root r = positive_roots[i], s = positive_roots[j];
      AdjointMatrix lhs = model.x(r, -x) * model.x(s, -y) * model.x(r, x) * model.x(s, y);
      AdjointMatrix rhs = AdjointMatrix::identity();
      if (auto rule = find_commutator_rule(r, s))
        for (const auto &t : rule->terms)
          rhs = rhs * model.x(t.root, t.coeff * power(x, t.x_power) * power(y, t.y_power));
      out.push_back({"[x_" + to_string(r) + ", x_" + to_string(s) + "]", lhs == rhs});
    }
  return out;
}

} // namespace

ChevalleyBasis calibrate_signs(const ChevalleyBasis &basis) {
  const std::array<std::pair<Rational, Rational>, 2> samples{
      std::pair{Rational(2), Rational(3)}, std::pair{make_rational(-5, 3), make_rational(7, 2)}};
  std::vector<std::string> best;
  for (int mask = 0; mask < 64; ++mask) {
    std::array<int, 6> signs{};
    for (int i = 0; i < 6; ++i) signs[i] = (mask >> i) & 1 ? -1 : 1;
    ChevalleyBasis candidate = rescaled(basis, signs);
    AdjointModel model(candidate);
    std::vector<std::string> satisfied;
    bool all = true;
    std::map<std::string, bool> ok;
    for (const auto &[x, y] : samples)
      for (const auto &[name, pass] : commutator_checks(model, x, y)) {
        auto [it, inserted] = ok.insert({name, pass});
        if (!inserted) it->second = it->second && pass;
      }
    for (const auto &[name, pass] : ok) {
      if (pass) satisfied.push_back(name);
      all = all && pass;
    }
    if (all) return candidate;
    if (satisfied.size() > best.size()) best = satisfied;
  }
  throw CalibrationError("no root-vector sign choice reproduces the commutator table", best);
}

// ---------------------------------------------------------------------------
// AdjointModel

AdjointModel::AdjointModel(ChevalleyBasis basis) : basis_(std::move(basis)) {
  for (int i = 0; i < 12; ++i) {
    AdjointMatrix p = AdjointMatrix::identity();
    for (int k = 1; k <= adjoint_dim; ++k) {
      p = make_rational(1, k) * (p * basis_.e[i]);
      if (p.is_zero()) break;
      exp_terms_[i].push_back(p);
    }
  }
}

const AdjointModel &AdjointModel::calibrated() {
  static const AdjointModel model(calibrate_signs(build_basis()));
  return model;
}

AdjointMatrix AdjointModel::x(Root r, const Rational &t) const {
  AdjointMatrix m = AdjointMatrix::identity();
  if (sgn(t) == 0) return m;
  Rational tk = 1;
  for (const auto &term : exp_terms_[root_index(r)]) {
    tk *= t;
    m = m + tk * term;
  }
  return m;
}

AdjointMatrix AdjointModel::w(Root r, const Rational &t) const {
  if (sgn(t) == 0) throw std::domain_error("w_r(t) requires t != 0");
  Rational inv = -1 / t;
  return x(r, t) * x(-r, inv) * x(r, t);
}

AdjointMatrix AdjointModel::h_root(Root r, const Rational &t) const {
  return w(r, t) * w_inv(r);
}

AdjointMatrix AdjointModel::h(const Rational &t1, const Rational &t2) const {
  if (sgn(t1) == 0 || sgn(t2) == 0) throw std::domain_error("h(t1,t2) requires nonzero arguments");
  return h_root(roots::alpha, t1 * t2) * h_root(roots::beta, t1 * t1 * t2);
}

AdjointMatrix AdjointModel::evaluate(const GroupWord<Rational> &word) const {
  AdjointMatrix m = AdjointMatrix::identity();
  for (const auto &g : word.generators()) {
    std::visit(
        [&](const auto &v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, XGen<Rational>>) m = m * x(v.root, v.t);
          else if constexpr (std::is_same_v<T, HGen<Rational>>) m = m * h(v.t1, v.t2);
          else m = m * (v.inverse ? w_inv(v.root) : w(v.root));
        },
        g);
  }
  return m;
}

std::optional<std::array<Rational, 12>> unipotent_log_coordinates(const ChevalleyBasis &basis,
                                                                  const AdjointMatrix &m) {
  AdjointMatrix n = m - AdjointMatrix::identity();
  AdjointMatrix log;
  AdjointMatrix p = AdjointMatrix::identity();
  bool nilpotent = false;
  for (int k = 1; k <= adjoint_dim; ++k) {
    p = p * n;
    if (p.is_zero()) {
      nilpotent = true;
      break;
    }
    log = log + make_rational(k % 2 ? 1 : -1, k) * p;
  }
  if (!nilpotent) return std::nullopt;
  // The h-component of [X, e_{-r}] comes only from the e_r part of X.
  std::array<Rational, 12> coords;
  AdjointMatrix rebuilt;
  for (int i = 0; i < 12; ++i) {
    Root r = all_roots()[i];
    int col = root_index(-r);
    auto [ca, cb] = coroot_coordinates(r);
    coords[i] = ca != 0 ? Rational(log(h_alpha_index, col) / ca) : Rational(log(h_beta_index, col) / cb);
    if (sgn(coords[i]) != 0) rebuilt = rebuilt + coords[i] * basis.e[i];
  }
  if (!(rebuilt == log)) return std::nullopt;
  return coords;
}

std::optional<Rational> AdjointModel::root_subgroup_parameter(const AdjointMatrix &m, Root r) const {
  auto coords = unipotent_log_coordinates(basis_, m);
  if (!coords) return std::nullopt;
  int idx = root_index(r);
  for (int i = 0; i < 12; ++i)
    if (i != idx && sgn((*coords)[i]) != 0) return std::nullopt;
  return (*coords)[idx];
}

std::optional<std::array<Rational, 5>> AdjointModel::v_coordinates(const AdjointMatrix &m) const {
  std::array<Rational, 5> out;
  AdjointMatrix rest = m;
  for (std::size_t k = 0; k < v_roots.size(); ++k) {
    auto coords = unipotent_log_coordinates(basis_, rest);
    if (!coords) return std::nullopt;
    out[k] = (*coords)[root_index(v_roots[k])];
    rest = x(v_roots[k], -out[k]) * rest;
  }
  if (!rest.is_identity()) return std::nullopt;
  return out;
}

int AdjointModel::weyl_sign(Root s, Root r) const {
  Root image = reflect(r, s);
  AdjointMatrix conj = w(s) * x(r, 1) * w_inv(s);
  auto c = root_subgroup_parameter(conj, image);
  if (!c || (*c != 1 && *c != -1))
    throw ConstructionError("Weyl conjugation does not map root subgroups to root subgroups");
  return *c == 1 ? 1 : -1;
}

std::vector<bool> AdjointModel::verify_identity(const WordBuilder &lhs, const WordBuilder &rhs, int nparams,
                                                const std::vector<std::vector<Rational>> &samples) const {
  std::vector<bool> out;
  for (const auto &p : samples) {
    if (static_cast<int>(p.size()) != nparams)
      throw std::invalid_argument("verify_identity: sample assigns " + std::to_string(p.size()) + " of " +
                                  std::to_string(nparams) + " parameters");
    out.push_back(evaluate(lhs(p)) == evaluate(rhs(p)));
  }
  return out;
}

} // namespace g2rs
