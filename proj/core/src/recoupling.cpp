#include "superracah/recoupling.hpp"

#include <algorithm>
#include <stdexcept>

namespace sr::lab {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::sqrt;
using Vec = std::vector<Decimal>;
using Mat = std::vector<Vec>;  // row-major

struct Entry {
  int r, c;
  Decimal v;
};
using Sparse = std::vector<Entry>;

Vec apply_n(const Sparse& s, const Vec& x, int rows) {
  Vec y(rows, Decimal(0));
  for (const auto& e : s)
    if (x[e.c] != 0) y[e.r] += e.v * x[e.c];
  return y;
}

// Graded module with the generators needed for coupling and the invariant form.
struct Module {
  int n = 0;
  std::vector<int> m2, par;
  Sparse Fp, Fm, Jp, Jm, J0;
};

Module irrep(int t) {
  Module R;
  std::vector<int> L2;
  for (int k = 0; k <= t; ++k) {
    L2.push_back(t);
    R.m2.push_back(t - 2 * k);
    R.par.push_back(0);
  }
  for (int k = 0; k < t; ++k) {
    L2.push_back(t - 1);
    R.m2.push_back(t - 1 - 2 * k);
    R.par.push_back(1);
  }
  R.n = static_cast<int>(R.m2.size());
  auto index = [&](int l2, int m2) -> int {
    for (int i = 0; i < R.n; ++i)
      if (L2[i] == l2 && R.m2[i] == m2) return i;
    return -1;
  };
  const Decimal half = Decimal(1) / 2;
  for (int i = 0; i < R.n; ++i) {
    int l = L2[i], m = R.m2[i];
    R.J0.push_back({i, i, Decimal(m) / 2});
    if (int k = index(l, m + 2); k >= 0) R.Jp.push_back({k, i, sqrt(Decimal((l - m) * (l + m + 2)) / 4)});
    if (int k = index(l, m - 2); k >= 0) R.Jm.push_back({k, i, sqrt(Decimal((l + m) * (l - m + 2)) / 4)});
    if (R.par[i] == 0) {
      if (int k = index(t - 1, m + 1); k >= 0) R.Fp.push_back({k, i, half * sqrt(Decimal(t - m) / 2)});
      if (int k = index(t - 1, m - 1); k >= 0) R.Fm.push_back({k, i, half * sqrt(Decimal(t + m) / 2)});
    } else {
      if (int k = index(t, m + 1); k >= 0) R.Fp.push_back({k, i, half * sqrt(Decimal(t + m + 1) / 2)});
      if (int k = index(t, m - 1); k >= 0) R.Fm.push_back({k, i, -half * sqrt(Decimal(t - m + 1) / 2)});
    }
  }
  return R;
}

// Graded tensor product: even generators X (x) 1 + 1 (x) X, odd ones X (x) 1 + P (x) X.
Module tensor(const Module& A, const Module& B) {
  Module M;
  M.n = A.n * B.n;
  for (int i = 0; i < A.n; ++i)
    for (int j = 0; j < B.n; ++j) {
      M.m2.push_back(A.m2[i] + B.m2[j]);
      M.par.push_back((A.par[i] + B.par[j]) & 1);
    }
  auto lift = [&](const Sparse& a, const Sparse& b, bool odd, Sparse& out) {
    for (const auto& e : a)
      for (int j = 0; j < B.n; ++j) out.push_back({e.r * B.n + j, e.c * B.n + j, e.v});
    for (int i = 0; i < A.n; ++i) {
      int sg = (odd && A.par[i]) ? -1 : 1;
      for (const auto& e : b) out.push_back({i * B.n + e.r, i * B.n + e.c, sg * e.v});
    }
  };
  lift(A.Fp, B.Fp, true, M.Fp);
  lift(A.Fm, B.Fm, true, M.Fm);
  lift(A.Jp, B.Jp, false, M.Jp);
  lift(A.Jm, B.Jm, false, M.Jm);
  lift(A.J0, B.J0, false, M.J0);
  return M;
}

// Nullspace basis of a dense matrix by reduced row echelon form.
std::vector<Vec> nullspace(Mat A, int cols, const Decimal& eps) {
  int rows = static_cast<int>(A.size());
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int best = r;
    for (int i = r + 1; i < rows; ++i)
      if (abs(A[i][c]) > abs(A[best][c])) best = i;
    if (abs(A[best][c]) <= eps) continue;
    std::swap(A[r], A[best]);
    Decimal p = A[r][c];
    for (int k = c; k < cols; ++k) A[r][k] /= p;
    for (int i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      Decimal f = A[i][c];
      for (int k = c; k < cols; ++k) A[i][k] -= f * A[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<Vec> out;
  for (int fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    Vec v(cols, Decimal(0));
    v[fc] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -A[i][fc];
    out.push_back(std::move(v));
  }
  return out;
}

// Solves A X = B for square A by Gaussian elimination with partial pivoting.
Mat solve(Mat A, Mat B, const Decimal& eps) {
  int n = static_cast<int>(A.size());
  int m = n == 0 ? 0 : static_cast<int>(B[0].size());
  for (int c = 0; c < n; ++c) {
    int best = c;
    for (int i = c + 1; i < n; ++i)
      if (abs(A[i][c]) > abs(A[best][c])) best = i;
    if (abs(A[best][c]) <= eps) throw std::runtime_error("recoupling: singular normal equations");
    std::swap(A[c], A[best]);
    std::swap(B[c], B[best]);
    for (int i = c + 1; i < n; ++i) {
      Decimal f = A[i][c] / A[c][c];
      if (f == 0) continue;
      for (int k = c; k < n; ++k) A[i][k] -= f * A[c][k];
      for (int k = 0; k < m; ++k) B[i][k] -= f * B[c][k];
    }
  }
  Mat X(n, Vec(m, Decimal(0)));
  for (int i = n - 1; i >= 0; --i)
    for (int k = 0; k < m; ++k) {
      Decimal acc = B[i][k];
      for (int j = i + 1; j < n; ++j) acc -= A[i][j] * X[j][k];
      X[i][k] = acc / A[i][i];
    }
  return X;
}

Decimal working_eps(unsigned digits) { return tolerance_from_exponent(static_cast<int>(digits) / 2); }

// Highest-weight vector of twice-weight c2 in M, unit norm, first nonzero coefficient positive.
Vec highest_weight(const Module& M, int c2, const Decimal& eps) {
  std::vector<int> sel;
  for (int i = 0; i < M.n; ++i)
    if (M.m2[i] == c2) sel.push_back(i);
  std::vector<int> pos(M.n, -1);
  for (std::size_t s = 0; s < sel.size(); ++s) pos[sel[s]] = static_cast<int>(s);
  Mat A(M.n, Vec(sel.size(), Decimal(0)));
  for (const auto& e : M.Fp)
    if (pos[e.c] >= 0) A[e.r][pos[e.c]] += e.v;
  auto null = nullspace(A, static_cast<int>(sel.size()), eps);
  if (null.size() != 1) throw std::logic_error("recoupling: highest-weight space is not one-dimensional");
  Vec w(M.n, Decimal(0));
  Decimal norm = 0;
  for (std::size_t s = 0; s < sel.size(); ++s) {
    w[sel[s]] = null[0][s];
    norm += null[0][s] * null[0][s];
  }
  norm = sqrt(norm);
  int sign = 0;
  for (const auto& x : w)
    if (abs(x) > eps) {
      sign = x > 0 ? 1 : -1;
      break;
    }
  for (auto& x : w) x = x * sign / norm;
  return w;
}

struct Coupling {
  std::vector<Vec> cols;  // image of each state of the coupled irrep
  int parity = 0;
};

// Intertwiner from irrep t into M with the given top vector; odd maps anticommute with F.
Coupling embed(const Module& M, const Vec& w, int t, const Decimal& eps) {
  Module R = irrep(t);
  Coupling c;
  for (int i = 0; i < M.n; ++i)
    if (abs(w[i]) > eps) {
      c.parity = M.par[i];
      break;
    }
  int s = c.parity ? -1 : 1;
  c.cols.assign(R.n, Vec());
  std::vector<bool> done(R.n, false);
  c.cols[0] = w;
  done[0] = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < R.n; ++i) {
      if (!done[i]) continue;
      for (auto [X, MX, sg] : {std::tuple{&R.Fm, &M.Fm, s}, std::tuple{&R.Jm, &M.Jm, 1}})
        for (const auto& e : *X) {
          if (e.c != i || done[e.r]) continue;
          Vec img = apply_n(*MX, c.cols[i], M.n);
          for (auto& x : img) x = sg * x / e.v;
          c.cols[e.r] = std::move(img);
          done[e.r] = true;
          changed = true;
        }
    }
  }
  if (!std::all_of(done.begin(), done.end(), [](bool b) { return b; }))
    throw std::logic_error("recoupling: embedding did not reach every state");
  return c;
}

Coupling couple(int ta, int tb, int tc, const Decimal& eps) {
  Module M = tensor(irrep(ta), irrep(tb));
  return embed(M, highest_weight(M, tc, eps), tc, eps);
}

// Invariant bilinear form: X^T B + S B X = 0 with S = P for odd X; B[top][bottom] = 1.
Mat invariant_form(int t, const Decimal& eps) {
  Module R = irrep(t);
  int n = R.n;
  std::vector<std::pair<int, int>> unknowns;
  std::vector<std::vector<int>> uid(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (R.m2[i] + R.m2[k] == 0) {
        uid[i][k] = static_cast<int>(unknowns.size());
        unknowns.push_back({i, k});
      }
  int nu = static_cast<int>(unknowns.size());
  Mat eqs;
  auto dense = [&](const Sparse& s) {
    Mat D(n, Vec(n, Decimal(0)));
    for (const auto& e : s) D[e.r][e.c] += e.v;
    return D;
  };
  for (auto [X, odd] : {std::pair{&R.J0, false}, std::pair{&R.Jp, false}, std::pair{&R.Jm, false},
                        std::pair{&R.Fp, true}, std::pair{&R.Fm, true}}) {
    Mat D = dense(*X);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Vec row(nu, Decimal(0));
        bool any = false;
        for (int k = 0; k < n; ++k)
          if (D[k][i] != 0 && uid[k][j] >= 0) {
            row[uid[k][j]] += D[k][i];
            any = true;
          }
        int sg = (odd && R.par[i]) ? -1 : 1;
        for (int l = 0; l < n; ++l)
          if (D[l][j] != 0 && uid[i][l] >= 0) {
            row[uid[i][l]] += sg * D[l][j];
            any = true;
          }
        if (any) eqs.push_back(std::move(row));
      }
  }
  auto null = nullspace(eqs, nu, eps);
  if (null.size() != 1) throw std::logic_error("recoupling: invariant form is not unique");
  Mat B(n, Vec(n, Decimal(0)));
  Decimal norm = null[0][uid[0][t]];
  for (int u = 0; u < nu; ++u) B[unknowns[u].first][unknowns[u].second] = null[0][u] / norm;
  return B;
}

struct FormData {
  Mat B;
  std::vector<std::vector<std::pair<int, Decimal>>> rows;  // nonzero B[i][.]
  std::vector<int> par;
};

FormData form_data(int t, const Decimal& eps) {
  FormData f;
  f.B = invariant_form(t, eps);
  f.par = irrep(t).par;
  f.rows.resize(f.B.size());
  for (std::size_t i = 0; i < f.B.size(); ++i)
    for (std::size_t k = 0; k < f.B.size(); ++k)
      if (abs(f.B[i][k]) > eps) f.rows[i].push_back({static_cast<int>(k), f.B[i][k]});
  return f;
}

// Form on V_a (x) V_b (x) V_d: sign (-1)^{p(v3)(p(w1)+p(w2)) + p(v2)p(w1)}.
Decimal triple_form(const FormData& fa, const FormData& fb, const FormData& fd, const Vec& v, const Vec& w,
                    const Decimal& eps) {
  int nb = static_cast<int>(fb.B.size()), nd = static_cast<int>(fd.B.size());
  int na = static_cast<int>(fa.B.size());
  Decimal acc = 0;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      for (int k = 0; k < nd; ++k) {
        const Decimal& vv = v[(i * nb + j) * nd + k];
        if (abs(vv) <= eps) continue;
        for (const auto& [i2, ba] : fa.rows[i])
          for (const auto& [j2, bb] : fb.rows[j])
            for (const auto& [k2, bd] : fd.rows[k]) {
              const Decimal& ww = w[(i2 * nb + j2) * nd + k2];
              if (ww == 0) continue;
              int e = fd.par[k] * (fa.par[i2] + fb.par[j2]) + fb.par[j] * fa.par[i2];
              Decimal t = vv * ww * ba * bb * bd;
              acc += (e & 1) ? -t : t;
            }
      }
  return acc;
}

int fl(int t) { return t / 2; }

}  // namespace

RecouplingMatrix recoupling_matrix(int a, int b, int d, int e, unsigned digits) {
  PrecisionScope scope(digits);
  const Decimal eps = working_eps(digits);
  RecouplingMatrix out;
  out.xs = family_x_range(a, b, d, e);
  out.fs = family_f_range(a, b, d, e);
  out.fit_residual = 0;
  if (out.xs.empty() || out.fs.empty()) {
    if (out.xs.size() != out.fs.size()) throw std::logic_error("recoupling: unbalanced family");
    return out;
  }
  if (out.xs.size() != out.fs.size()) throw std::logic_error("recoupling: non-square recoupling matrix");
  const int na = 2 * a + 1, nb = 2 * b + 1, nd = 2 * d + 1;
  const int ntot = na * nb * nd;
  FormData fa = form_data(a, eps), fb = form_data(b, eps), fd = form_data(d, eps);
  const int bottom = e;  // even state with m = -e

  auto normalize = [&](Vec top, const Vec& low, std::vector<Vec>& cols, std::vector<int>& signs) {
    Decimal n = triple_form(fa, fb, fd, top, low, eps);
    if (abs(n) <= eps) throw std::logic_error("recoupling: degenerate composite map");
    Decimal s = sqrt(abs(n));
    for (auto& x : top) x /= s;
    cols.push_back(std::move(top));
    signs.push_back(n > 0 ? 1 : -1);
  };

  std::vector<Vec> c1, c2;
  for (int x : out.xs) {
    Coupling px = couple(a, b, x, eps), pe = couple(x, d, e, eps);
    const int nx = 2 * x + 1;
    auto image = [&](int col) {
      Vec psi(ntot, Decimal(0));
      const Vec& ph = pe.cols[col];
      for (int s = 0; s < nx; ++s)
        for (int k = 0; k < nd; ++k) {
          const Decimal& c = ph[s * nd + k];
          if (c == 0) continue;
          for (int ij = 0; ij < na * nb; ++ij)
            if (px.cols[s][ij] != 0) psi[ij * nd + k] += px.cols[s][ij] * c;
        }
      return psi;
    };
    normalize(image(0), image(bottom), c1, out.s1);
  }
  for (int f : out.fs) {
    Coupling pf = couple(b, d, f, eps), pe = couple(a, f, e, eps);
    const int nf = 2 * f + 1;
    std::vector<int> pa = irrep(a).par;
    auto image = [&](int col) {
      Vec psi(ntot, Decimal(0));
      const Vec& ph = pe.cols[col];
      for (int i = 0; i < na; ++i) {
        int sg = (pf.parity && pa[i]) ? -1 : 1;
        for (int s = 0; s < nf; ++s) {
          const Decimal& c = ph[i * nf + s];
          if (c == 0) continue;
          for (int jk = 0; jk < nb * nd; ++jk)
            if (pf.cols[s][jk] != 0) psi[i * nb * nd + jk] += sg * pf.cols[s][jk] * c;
        }
      }
      return psi;
    };
    normalize(image(0), image(bottom), c2, out.s2);
  }

  const std::size_t nx = out.xs.size(), nf = out.fs.size();
  Mat N(nf, Vec(nf, Decimal(0))), R(nf, Vec(nx, Decimal(0)));
  for (std::size_t p = 0; p < nf; ++p) {
    for (std::size_t q = 0; q < nf; ++q)
      for (int r = 0; r < ntot; ++r) N[p][q] += c2[p][r] * c2[q][r];
    for (std::size_t q = 0; q < nx; ++q)
      for (int r = 0; r < ntot; ++r) R[p][q] += c2[p][r] * c1[q][r];
  }
  Mat Um = solve(N, R, eps);
  for (std::size_t q = 0; q < nx; ++q)
    for (int r = 0; r < ntot; ++r) {
      Decimal fit = -c1[q][r];
      for (std::size_t p = 0; p < nf; ++p) fit += c2[p][r] * Um[p][q];
      out.fit_residual = std::max<Decimal>(out.fit_residual, abs(fit));
    }
  if (out.fit_residual > eps) throw std::logic_error("recoupling: coupled bases do not span the same space");
  out.U.assign(nx, Vec(nf));
  for (std::size_t q = 0; q < nx; ++q)
    for (std::size_t p = 0; p < nf; ++p) out.U[q][p] = Um[p][q];
  return out;
}

ExperimentalProvider::ExperimentalProvider(int twice_max, unsigned digits) : twice_max_(twice_max), digits_(digits) {
  if (twice_max < 0) throw DomainError("experimental provider: twice_max must be >= 0");
}

ExperimentalProvider::~ExperimentalProvider() = default;

const ExperimentalProvider::FamilyTable& ExperimentalProvider::family(const std::array<int, 4>& fam) const {
  {
    std::lock_guard lock(mu_);
    auto it = cache_.find(fam);
    if (it != cache_.end()) return *it->second;
  }
  auto [a, b, d, e] = fam;
  auto table = std::make_shared<FamilyTable>();
  {
    RecouplingMatrix rm = recoupling_matrix(a, b, d, e, digits_ + 20);
    PrecisionScope scope(digits_ + 20);
    Decimal zero_tol = tolerance_from_exponent(static_cast<int>(digits_));
    for (std::size_t i = 0; i < rm.xs.size(); ++i)
      for (std::size_t j = 0; j < rm.fs.size(); ++j) {
        int x = rm.xs[i];
        int ph = sign_of_exponent(fl(a + b + x) + fl(x + d + e) + x);
        Decimal v = ph * rm.U[i][j];
        (*table)[{x, rm.fs[j]}] =
            abs(v) < zero_tol ? ProviderValue::of_exact(ExactValue()) : ProviderValue::of_decimal(v, digits_);
      }
  }
  std::lock_guard lock(mu_);
  return *cache_.try_emplace(fam, std::move(table)).first->second;
}

std::optional<ProviderValue> ExperimentalProvider::find(const SixKey& k) const {
  for (int x : k)
    if (x > twice_max_) return std::nullopt;
  const auto& t = family({k[0], k[1], k[3], k[4]});
  auto it = t.find({k[2], k[5]});
  if (it == t.end()) return std::nullopt;
  return it->second;
}

std::vector<std::array<int, 4>> ExperimentalProvider::families() const {
  std::vector<std::array<int, 4>> out;
  for (int a = 0; a <= twice_max_; ++a)
    for (int b = 0; b <= twice_max_; ++b)
      for (int d = 0; d <= twice_max_; ++d)
        for (int e = 0; e <= twice_max_; ++e) {
          auto xs = family_x_range(a, b, d, e);
          auto fs = family_f_range(a, b, d, e);
          bool inside = !xs.empty() && xs.back() <= twice_max_ && !fs.empty() && fs.back() <= twice_max_;
          if (inside) out.push_back({a, b, d, e});
        }
  return out;
}

std::map<SixKey, ProviderValue> ExperimentalProvider::materialize() const {
  std::map<SixKey, ProviderValue> out;
  for (const auto& fam : families()) {
    auto [a, b, d, e] = fam;
    for (const auto& [xf, v] : family(fam)) out[{a, b, xf[0], d, e, xf[1]}] = v;
  }
  return out;
}

}  // namespace sr::lab
