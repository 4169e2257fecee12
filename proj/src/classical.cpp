#include "atlas/classical.hpp"

#include <map>

#include "atlas/error.hpp"

namespace atlas {

namespace {

RatMatrix unit(Index n, Index i, Index j) {
  RatMatrix m = RatMatrix::Zero(n, n);
  m(i, j) = 1;
  return m;
}

int eps(int i, int N) { return i < N / 2 ? 1 : -1; }

// One orthogonal summand of the block model: a nilpotent on a local space
// with a local anti-diagonal form, scaled by `sign`.
struct Block {
  int size = 0;
  bool pair = false;  // W + W* for two equal Jordan blocks
  int sign = 1;
  RatMatrix e;
  std::vector<int> h;  // characteristic eigenvalues in local order
};

Block single_block(int m, bool symplectic) {
  Block b;
  b.size = m;
  b.e = RatMatrix::Zero(m, m);
  for (int i = 0; i + 1 < m; ++i) {
    // superdiagonal index i+1 (1-based); sign flips past the middle
    const bool first_half = symplectic ? (i + 1 <= m / 2) : (i + 1 <= (m - 1) / 2);
    b.e(i, i + 1) = first_half ? 1 : -1;
  }
  for (int i = 0; i < m; ++i) b.h.push_back(m - 1 - 2 * i);
  return b;
}

Block pair_block(int m) {
  Block b;
  b.size = 2 * m;
  b.pair = true;
  b.e = RatMatrix::Zero(2 * m, 2 * m);
  for (int i = 0; i + 1 < m; ++i) {
    b.e(i, i + 1) = 1;
    b.e(2 * m - 2 - i, 2 * m - 1 - i) = -1;
  }
  for (int rep = 0; rep < 2; ++rep)
    for (int i = 0; i < m; ++i) b.h.push_back(m - 1 - 2 * i);
  return b;
}

}  // namespace

RatMatrix antidiagonal_form(int N, bool symplectic) {
  RatMatrix J = RatMatrix::Zero(N, N);
  for (int i = 0; i < N; ++i) J(i, N - 1 - i) = symplectic ? eps(i, N) : 1;
  return J;
}

MatrixLieAlgebra build_form_algebra(int N, bool symplectic, const LieType& t) {
  std::vector<RatMatrix> basis;
  for (int i = 0; i < N; ++i)
    for (int j = 0; i + j < N - 1; ++j) {
      // E_ij paired with E_{j'i'}
      const int ip = N - 1 - i, jp = N - 1 - j;
      RatMatrix x = unit(N, i, j);
      x(jp, ip) -= symplectic ? eps(i, N) * eps(j, N) : 1;
      basis.push_back(x);
    }
  if (symplectic)
    for (int i = 0; i < N; ++i) basis.push_back(unit(N, i, N - 1 - i));
  std::string name = (symplectic ? "sp_" : "so_") + std::to_string(N);
  return MatrixLieAlgebra(name, std::move(basis), antidiagonal_form(N, symplectic), {SimpleFactor{t, {}, {}}});
}

MatrixLieAlgebra build_classical(const LieType& t, int rank_bound) {
  if (!t.classical()) throw Error(ErrorKind::ExceptionalType, t.name() + " has no classical model");
  if (t.rank > rank_bound) throw Error(ErrorKind::RankBound, t.name() + " exceeds the rank bound");
  const int N = t.defining_dim();
  std::vector<RatMatrix> basis;
  MatrixLieAlgebra g;
  if (t.family == Family::A) {
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        if (i != j) basis.push_back(unit(N, i, j));
    for (int i = 0; i + 1 < N; ++i) basis.push_back(unit(N, i, i) - unit(N, i + 1, i + 1));
    std::vector<Index> all(basis.size());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = static_cast<Index>(k);
    return MatrixLieAlgebra("sl_" + std::to_string(N), std::move(basis), RatMatrix(), {SimpleFactor{t, all, {}}});
  }
  g = build_form_algebra(N, t.family == Family::C, t);
  return g;
}

namespace {

// Builds the block model for p and the isometry T into the global basis.
// Returns e and h in global coordinates.
std::pair<RatMatrix, RatMatrix> assemble(const LieType& t, const Partition& p) {
  const int N = t.defining_dim();
  if (t.family == Family::A) {
    RatMatrix e = RatMatrix::Zero(N, N), h = RatMatrix::Zero(N, N);
    int off = 0;
    for (int m : p.parts) {
      for (int i = 0; i + 1 < m; ++i) e(off + i, off + i + 1) = 1;
      for (int i = 0; i < m; ++i) h(off + i, off + i) = m - 1 - 2 * i;
      off += m;
    }
    return {e, h};
  }
  const bool symplectic = t.family == Family::C;
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < p.parts.size();) {
    const int m = p.parts[i];
    const int mult = p.multiplicity(m);
    const bool paired_parity = symplectic ? (m % 2 == 1) : (m % 2 == 0);
    if (paired_parity) {
      for (int k = 0; k < mult / 2; ++k) blocks.push_back(pair_block(m));
    } else {
      for (int k = 0; k < mult; ++k) blocks.push_back(single_block(m, symplectic));
    }
    i += static_cast<std::size_t>(mult);
  }
  // Alternate the form sign on odd orthogonal blocks so their middle vectors
  // pair into hyperbolic planes.
  if (!symplectic) {
    int s = 1;
    for (Block& b : blocks)
      if (!b.pair && b.size % 2 == 1) {
        b.sign = s;
        s = -s;
      }
  }
  // Local space: direct sum of blocks, local form block-diagonal.
  RatMatrix e_loc = RatMatrix::Zero(N, N), h_loc = RatMatrix::Zero(N, N);
  RatMatrix T = RatMatrix::Zero(N, N);  // columns: images of local basis vectors
  int off = 0, next = 0;                // next free global index in the first half
  std::vector<std::pair<int, int>> middles;  // (local index, sign)
  for (const Block& b : blocks) {
    e_loc.block(off, off, b.size, b.size) = b.e;
    for (int i = 0; i < b.size; ++i) h_loc(off + i, off + i) = b.h[static_cast<std::size_t>(i)];
    for (int l = 0; l < b.size / 2; ++l) {
      const int lp = b.size - 1 - l;
      T(next, off + l) = 1;
      // local pairing (l, lp) has value b.sign * eps; global (next, next') has eps
      T(N - 1 - next, off + lp) = b.sign;
      ++next;
    }
    if (b.size % 2 == 1) middles.emplace_back(off + b.size / 2, b.sign);
    off += b.size;
  }
  // Middles alternate +1, -1, ...: pair consecutive ones as p = (u+w)/2, q = u-w.
  std::size_t k = 0;
  for (; k + 1 < middles.size(); k += 2) {
    const int u = middles[k].first, w = middles[k + 1].first;
    // u = p + q/2, w = p - q/2 with p -> e_next, q -> e_next'
    T(next, u) = 1;
    T(N - 1 - next, u) = Rational(1, 2);
    T(next, w) = 1;
    T(N - 1 - next, w) = Rational(-1, 2);
    ++next;
  }
  if (k < middles.size()) T(N / 2, middles[k].first) = 1;
  RatMatrix Tinv = *inverse(T);
  return {T * e_loc * Tinv, T * h_loc * Tinv};
}

}  // namespace

RatMatrix standard_characteristic(const LieType& t, const Partition& p) {
  RatMatrix h = assemble(t, p).second;
  if (t.family == Family::D && p.all_even() && very_even_tag_from_characteristic(h) != p.tag) {
    const int n = t.rank;
    RatMatrix s = RatMatrix::Identity(2 * n, 2 * n);
    s(n - 1, n - 1) = 0;
    s(n, n) = 0;
    s(n - 1, n) = 1;
    s(n, n - 1) = 1;
    h = s * h * s;
  }
  return h;
}

VeryEvenTag very_even_tag_from_characteristic(const RatMatrix& h) {
  const Index n = h.rows() / 2;
  int negatives = 0;
  for (Index i = 0; i < n; ++i)
    if (h(i, i) < 0) ++negatives;
  return negatives % 2 ? VeryEvenTag::I : VeryEvenTag::II;
}

VeryEvenTag very_even_tag(const RatMatrix& x) {
  const Index N = x.rows(), n = N / 2;
  static thread_local std::map<Index, MatrixLieAlgebra> cache;
  auto it = cache.find(N);
  if (it == cache.end())
    it = cache.emplace(N, build_form_algebra(static_cast<int>(N), false, LieType{Family::D, static_cast<int>(n)})).first;
  const Sl2Triple tr = complete_sl2(it->second, x);
  std::vector<RatVector> span;
  for (int lam = 1; lam < N; lam += 2)
    for (RatVector& v : kernel_basis(RatMatrix(tr.h - Rational(lam) * RatMatrix::Identity(N, N))))
      span.push_back(std::move(v));
  if (static_cast<Index>(span.size()) != n)
    throw Error(ErrorKind::Unsupported, "element is not very even");
  RatMatrix joint = RatMatrix::Zero(N, 2 * n);
  for (Index j = 0; j < n; ++j) {
    joint.col(j) = span[static_cast<std::size_t>(j)];
    joint(j, n + j) = 1;
  }
  const Index meet = 2 * n - rank(joint);
  return (n - meet) % 2 ? VeryEvenTag::I : VeryEvenTag::II;
}

RatMatrix standard_representative(const LieType& t, const Partition& p) {
  if (!validate_partition(t, p))
    throw Error(ErrorKind::RepresentativeUnavailable, "(" + p.to_string() + ") is not an orbit of " + t.name());
  if (p.tag == VeryEvenTag::Undetermined)
    throw Error(ErrorKind::RepresentativeUnavailable, "very even tag must be I or II");
  auto [e, h] = assemble(t, p);
  if (t.family == Family::D && p.all_even() && very_even_tag_from_characteristic(h) != p.tag) {
    // Reflection swapping e_n and e_{n+1}: lies in O_N, switches I and II.
    const int n = t.rank;
    RatMatrix s = RatMatrix::Identity(2 * n, 2 * n);
    s(n - 1, n - 1) = 0;
    s(n, n) = 0;
    s(n - 1, n) = 1;
    s(n, n - 1) = 1;
    e = s * e * s;
  }
  return e;
}

std::vector<RatMatrix> weight_graded_part(const MatrixLieAlgebra& g, const std::vector<int>& w, int sign) {
  return weight_subspace(g, w, [sign](int d) { return sign * d > 0; });
}

std::vector<RatMatrix> weight_subspace(const MatrixLieAlgebra& g, const std::vector<int>& w,
                                       const std::function<bool(int)>& keep) {
  const Index n = g.ambient_dim();
  std::vector<std::pair<Index, Index>> banned;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (!keep(w[static_cast<std::size_t>(i)] - w[static_cast<std::size_t>(j)])) banned.emplace_back(i, j);
  RatMatrix m(static_cast<Index>(banned.size()), g.dim());
  for (Index c = 0; c < g.dim(); ++c)
    for (std::size_t r = 0; r < banned.size(); ++r)
      m(static_cast<Index>(r), c) = g.basis()[static_cast<std::size_t>(c)](banned[r].first, banned[r].second);
  std::vector<RatMatrix> out;
  for (const RatVector& k : kernel_basis(m)) out.push_back(g.element(k));
  return out;
}

std::vector<int> regular_weights(int N) {
  std::vector<int> w;
  for (int i = 0; i < N; ++i) w.push_back(N - 1 - 2 * i);
  return w;
}

}  // namespace atlas
