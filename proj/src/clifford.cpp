#include "atlas/clifford.hpp"

#include <bit>
#include <map>

#include "atlas/classical.hpp"
#include "atlas/error.hpp"

namespace atlas {

namespace {

constexpr int kSpinorDim = 8;

int wedge_sign(unsigned mask, int i) {
  return std::popcount(mask & ((1u << i) - 1u)) % 2 ? -1 : 1;
}

RatMatrix creator(int i) {
  RatMatrix m = RatMatrix::Zero(kSpinorDim, kSpinorDim);
  for (unsigned s = 0; s < kSpinorDim; ++s)
    if (!(s & (1u << i))) m(s | (1u << i), s) = wedge_sign(s, i);
  return m;
}

RatMatrix annihilator(int i) {
  RatMatrix m = RatMatrix::Zero(kSpinorDim, kSpinorDim);
  for (unsigned s = 0; s < kSpinorDim; ++s)
    if (s & (1u << i)) m(s ^ (1u << i), s) = wedge_sign(s, i);
  return m;
}

std::vector<Index> iota(Index n) {
  std::vector<Index> v(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

// spin_7 in monomial coordinates on the spinor space.
const std::vector<RatMatrix>& spin7_monomial_basis() {
  static const std::vector<RatMatrix> basis = [] {
    const CliffordModel& c = clifford_model();
    std::vector<RatMatrix> gens;
    for (std::size_t a = 0; a < c.vectors.size(); ++a)
      for (std::size_t b = a + 1; b < c.vectors.size(); ++b) gens.push_back(commutator(c.vectors[a], c.vectors[b]));
    return independent_span(gens);
  }();
  return basis;
}

}  // namespace

CliffordModel clifford_model() {
  CliffordModel c;
  for (int i = 0; i < 3; ++i) {
    c.annihilators.push_back(annihilator(i));
    c.creators.push_back(creator(i));
  }
  c.parity = RatMatrix::Zero(kSpinorDim, kSpinorDim);
  for (unsigned s = 0; s < kSpinorDim; ++s) c.parity(s, s) = std::popcount(s) % 2 ? -1 : 1;
  c.vectors = {c.annihilators[0], c.annihilators[1], c.annihilators[2], c.parity,
               Rational(2) * c.creators[2], Rational(2) * c.creators[1], Rational(2) * c.creators[0]};
  return c;
}

RatMatrix CliffordModel::vector_action(const RatMatrix& x) const {
  const RatMatrix span = stack_columns(vectors);
  RatMatrix images(span.rows(), static_cast<Index>(vectors.size()));
  for (std::size_t b = 0; b < vectors.size(); ++b)
    images.col(static_cast<Index>(b)) = flatten(commutator(x, vectors[b]));
  auto out = solve(span, images);
  if (!out) throw Error(ErrorKind::NotInSpan, "element does not normalize the vector span");
  return *out;
}

const RatMatrix& spinor_frame() {
  static const RatMatrix frame = [] {
    const auto& basis = spin7_monomial_basis();
    // x^T B + B x = 0 for all x, as a linear system in vec(B).
    const Index n = kSpinorDim;
    RatMatrix sys(static_cast<Index>(basis.size()) * n * n, n * n);
    Index row = 0;
    for (const RatMatrix& x : basis) {
      for (Index j = 0; j < n; ++j)
        for (Index i = 0; i < n; ++i, ++row)
          for (Index k = 0; k < n; ++k) {
            // (x^T B)_{ij} = sum_k x_{ki} B_{kj};  (B x)_{ij} = sum_k B_{ik} x_{kj}
            sys(row, k + j * n) += x(k, i);
            sys(row, i + k * n) += x(k, j);
          }
    }
    auto ker = kernel_basis(sys);
    if (ker.size() != 1) throw Error(ErrorKind::NoSolution, "spinor form is not unique");
    RatMatrix B(n, n);
    for (Index j = 0; j < n; ++j)
      for (Index i = 0; i < n; ++i) B(i, j) = ker[0](i + j * n);
    // Order monomials by a regular torus weight so complements sit opposite.
    std::vector<std::pair<int, unsigned>> order;
    const int t[3] = {4, 2, 1};
    for (unsigned s = 0; s < kSpinorDim; ++s) {
      int w = 0;
      for (int i = 0; i < 3; ++i) w += (s & (1u << i)) ? -t[i] : t[i];
      order.emplace_back(-w, s);
    }
    std::sort(order.begin(), order.end());
    RatMatrix F = RatMatrix::Zero(n, n);
    for (Index k = 0; k < n / 2; ++k) {
      const unsigned s = order[static_cast<std::size_t>(k)].second;
      const unsigned comp = s ^ 7u;
      if (B(s, comp) == 0) throw Error(ErrorKind::NoSolution, "spinor form does not pair complements");
      F(s, k) = 1;
      F(comp, n - 1 - k) = Rational(1) / B(s, comp);
    }
    return F;
  }();
  return frame;
}

MatrixLieAlgebra build_spin7_in_so8() {
  const CliffordModel c = clifford_model();
  const RatMatrix& F = spinor_frame();
  const RatMatrix Finv = *inverse(F);
  std::vector<RatMatrix> basis, rep;
  for (const RatMatrix& x : spin7_monomial_basis()) {
    basis.push_back(Finv * x * F);
    rep.push_back(c.vector_action(x));
  }
  const Index d = static_cast<Index>(basis.size());
  return MatrixLieAlgebra("spin_7", std::move(basis), antidiagonal_form(8, false),
                          {SimpleFactor{LieType{Family::B, 3}, iota(d), std::move(rep)}});
}

MatrixLieAlgebra build_g2_in_so7() {
  const CliffordModel c = clifford_model();
  const auto& spin = spin7_monomial_basis();
  RatVector s = RatVector::Zero(kSpinorDim);
  s(0) = 1;
  s(7) = 1;
  RatMatrix act(kSpinorDim, static_cast<Index>(spin.size()));
  for (std::size_t j = 0; j < spin.size(); ++j) act.col(static_cast<Index>(j)) = spin[j] * s;
  std::vector<RatMatrix> basis;
  for (const RatVector& k : kernel_basis(act)) {
    RatMatrix x = RatMatrix::Zero(kSpinorDim, kSpinorDim);
    for (std::size_t j = 0; j < spin.size(); ++j)
      if (k(static_cast<Index>(j)) != 0) x += k(static_cast<Index>(j)) * spin[j];
    basis.push_back(c.vector_action(x));
  }
  const Index d = static_cast<Index>(basis.size());
  return MatrixLieAlgebra("g2", std::move(basis), antidiagonal_form(7, false),
                          {SimpleFactor{LieType{Family::G2, 2}, iota(d), {}}});
}

std::vector<int> g2_regular_weights() { return {-1, -3, 4, 0, -4, 3, 1}; }

MatrixLieAlgebra build_sl3_in_g2() {
  const MatrixLieAlgebra g2 = build_g2_in_so7();
  const std::vector<int> w = g2_regular_weights();
  auto basis = weight_subspace(g2, w, [](int d) {
    const int a = d < 0 ? -d : d;
    return a == 0 || a == 2 || a == 5 || a == 7;
  });
  const Index d = static_cast<Index>(basis.size());
  return MatrixLieAlgebra("sl_3", std::move(basis), antidiagonal_form(7, false),
                          {SimpleFactor{LieType{Family::A, 2}, iota(d), {}}});
}

RatMatrix g2_representative(const std::string& label) {
  static const std::map<int, RatMatrix> by_cz = [] {
    const MatrixLieAlgebra g2 = build_g2_in_so7();
    const std::vector<int> w = g2_regular_weights();
    std::vector<RatMatrix> roots;
    for (int lam = 1; lam <= 14; ++lam)
      for (const RatMatrix& r : weight_subspace(g2, w, [lam](int d) { return d == lam; })) roots.push_back(r);
    std::map<int, RatMatrix> found;
    found.emplace(14, RatMatrix::Zero(7, 7));
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (std::size_t j = i; j < roots.size(); ++j) {
        RatMatrix x = i == j ? roots[i] : RatMatrix(roots[i] + roots[j]);
        found.emplace(static_cast<int>(g2.centralizer_dim(x)), x);
      }
    return found;
  }();
  const int cz = 14 - [&] {
    if (label == "0") return 0;
    if (label == "A1") return 6;
    if (label == "Ã1") return 8;
    if (label == "G2(a1)" || label == "Osub") return 10;
    if (label == "G2") return 12;
    throw Error(ErrorKind::UnknownLabel, "G2 has no orbit '" + label + "'");
  }();
  auto it = by_cz.find(cz);
  if (it == by_cz.end()) throw Error(ErrorKind::RepresentativeUnavailable, "no representative for " + label);
  return it->second;
}

}  // namespace atlas
