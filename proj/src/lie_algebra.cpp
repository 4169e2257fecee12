#include "atlas/lie_algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "atlas/classical.hpp"
#include "atlas/error.hpp"
#include "atlas/exceptional.hpp"

namespace atlas {

namespace {

// Incremental row-reduced span of flattened matrices.
class SpanBuilder {
 public:
  explicit SpanBuilder(Index length) : length_(length) {}

  // Adds v if it is independent of the current span; returns whether it was.
  bool add(RatVector v) {
    reduce(v);
    Index p = 0;
    while (p < length_ && v(p) == 0) ++p;
    if (p == length_) return false;
    v /= Rational(v(p));
    for (auto& [q, row] : rows_)
      if (row(p) != 0) row -= Rational(row(p)) * v;
    rows_.emplace(p, std::move(v));
    return true;
  }

  bool contains(RatVector v) const {
    reduce(v);
    return is_zero(v);
  }

  std::size_t size() const { return rows_.size(); }

 private:
  void reduce(RatVector& v) const {
    for (const auto& [p, row] : rows_)
      if (v(p) != 0) v -= Rational(v(p)) * row;
  }

  Index length_;
  std::map<Index, RatVector> rows_;
};

}  // namespace

MatrixLieAlgebra::MatrixLieAlgebra(std::string name, std::vector<RatMatrix> basis, RatMatrix form,
                                   std::vector<SimpleFactor> factors)
    : name_(std::move(name)), basis_(std::move(basis)), form_(std::move(form)), factors_(std::move(factors)) {
  const Index d = dim();
  if (d == 0) return;
  RatMatrix rows(d, basis_.front().size());
  for (Index j = 0; j < d; ++j) rows.row(j) = flatten(basis_[static_cast<std::size_t>(j)]).transpose();
  Echelon ech = fraction_free_echelon(rows);
  if (ech.rank() != d) throw Error(ErrorKind::NotInSpan, name_ + ": basis is linearly dependent");
  pivot_positions_ = ech.pivots;
  RatMatrix sel(d, d);
  for (Index i = 0; i < d; ++i) sel.row(i) = rows.col(pivot_positions_[static_cast<std::size_t>(i)]).transpose();
  pivot_inverse_ = *inverse(sel);
}

const RatMatrix& MatrixLieAlgebra::trace_form_gram() const {
  if (!gram_) {
    const Index d = dim();
    RatMatrix g(d, d);
    for (Index i = 0; i < d; ++i)
      for (Index j = i; j < d; ++j) {
        Rational t = sparse_product(basis_[static_cast<std::size_t>(i)], basis_[static_cast<std::size_t>(j)]).trace();
        g(i, j) = t;
        g(j, i) = t;
      }
    gram_ = std::move(g);
  }
  return *gram_;
}

RatMatrix MatrixLieAlgebra::element(const RatVector& c) const {
  const Index n = ambient_dim();
  RatMatrix out = RatMatrix::Zero(n, n);
  for (Index j = 0; j < dim(); ++j)
    if (c(j) != 0) out += c(j) * basis_[static_cast<std::size_t>(j)];
  return out;
}

std::optional<RatVector> MatrixLieAlgebra::coordinates(const RatMatrix& x) const {
  const Index d = dim();
  const Index n = ambient_dim();
  RatMatrix sel(d, 1);
  for (Index i = 0; i < d; ++i) {
    const Index pos = pivot_positions_[static_cast<std::size_t>(i)];
    sel(i, 0) = x(pos % n, pos / n);
  }
  RatVector c = sparse_product(pivot_inverse_, sel).col(0);
  RatMatrix back = element(c);
  if (back != x) return std::nullopt;
  return c;
}

RatVector MatrixLieAlgebra::coords(const RatMatrix& x) const {
  auto c = coordinates(x);
  if (!c) throw Error(ErrorKind::NotInSpan, "matrix is not in " + name_);
  return *c;
}

RatVector MatrixLieAlgebra::bracket(const RatVector& x, const RatVector& y) const {
  return coords(commutator(element(x), element(y)));
}

RatMatrix MatrixLieAlgebra::ad(const RatMatrix& x) const {
  const Index d = dim();
  RatMatrix out(d, d);
  for (Index j = 0; j < d; ++j) out.col(j) = coords(commutator(x, basis_[static_cast<std::size_t>(j)]));
  return out;
}

Index MatrixLieAlgebra::centralizer_dim(const RatMatrix& x, const std::vector<Index>& subset) const {
  std::vector<RatMatrix> images;
  images.reserve(subset.size());
  for (Index j : subset) images.push_back(commutator(basis_[static_cast<std::size_t>(j)], x));
  return static_cast<Index>(subset.size()) - rank(stack_columns(images));
}

Index MatrixLieAlgebra::centralizer_dim(const RatMatrix& x) const {
  std::vector<Index> all(static_cast<std::size_t>(dim()));
  for (Index j = 0; j < dim(); ++j) all[static_cast<std::size_t>(j)] = j;
  if (!contains(x)) return centralizer_dim(x, all);
  // Brackets stay in the algebra, where the pivot entries are faithful.
  const Index d = dim();
  const Index n = ambient_dim();
  RatMatrix sel(d, d);
  for (Index j = 0; j < d; ++j) {
    RatMatrix c = commutator(basis_[static_cast<std::size_t>(j)], x);
    for (Index i = 0; i < d; ++i) {
      const Index pos = pivot_positions_[static_cast<std::size_t>(i)];
      sel(i, j) = c(pos % n, pos / n);
    }
  }
  return d - rank(sel);
}

std::vector<RatMatrix> MatrixLieAlgebra::centralizer(const RatMatrix& x) const {
  std::vector<RatMatrix> images;
  for (const RatMatrix& b : basis_) images.push_back(commutator(b, x));
  std::vector<RatMatrix> out;
  for (const RatVector& k : kernel_basis(stack_columns(images))) out.push_back(element(k));
  return out;
}

RatMatrix MatrixLieAlgebra::rep_image(std::size_t factor, const RatMatrix& x) const {
  const SimpleFactor& f = factors_.at(factor);
  if (f.rep.empty()) return x;
  RatVector c = coords(x);
  const Index n = f.rep.front().rows();
  RatMatrix out = RatMatrix::Zero(n, n);
  for (Index j = 0; j < dim(); ++j)
    if (c(j) != 0) out += c(j) * f.rep[static_cast<std::size_t>(j)];
  return out;
}

Sl2Triple complete_sl2(const MatrixLieAlgebra& g, const RatMatrix& e) {
  if (!is_nilpotent(e)) throw Error(ErrorKind::NotNilpotent, "sl2 completion needs a nilpotent element");
  const Index d = g.dim();
  RatVector ec = g.coords(e);
  RatMatrix ade = g.ad(e);
  // [[e, f0], e] = -ad(e)^2 f0 = 2e
  auto f0 = solve(RatMatrix(ade * ade), RatVector(Rational(-2) * ec));
  if (!f0) throw Error(ErrorKind::NoSolution, "no h with [h, e] = 2e");
  RatVector hc = ade * (*f0);
  RatMatrix h = g.element(hc);
  RatMatrix adh = g.ad(h);
  RatMatrix sys(2 * d, d);
  sys << ade, adh + Rational(2) * RatMatrix::Identity(d, d);
  RatVector rhs(2 * d);
  rhs << hc, RatVector::Zero(d);
  auto fc = solve(sys, rhs);
  if (!fc) throw Error(ErrorKind::NoSolution, "no f completing the triple");
  return Sl2Triple{e, h, g.element(*fc)};
}

std::vector<int> ad_eigenvalues(const MatrixLieAlgebra& g, const RatMatrix& h) {
  const Index n = h.rows();
  std::vector<int> defining;
  Index found = 0;
  for (int lam = static_cast<int>(n); lam >= -static_cast<int>(n); --lam) {
    RatMatrix shifted = h - Rational(lam) * RatMatrix::Identity(n, n);
    const Index mult = n - rank(shifted);
    defining.insert(defining.end(), static_cast<std::size_t>(mult), lam);
    found += mult;
  }
  if (found != n) throw Error(ErrorKind::Unsupported, "h is not diagonalizable over the integers");
  const int top = defining.front() - defining.back();
  RatMatrix adh = g.ad(h);
  const Index d = g.dim();
  std::vector<int> out;
  found = 0;
  for (int lam = top; lam >= -top; --lam) {
    RatMatrix shifted = adh - Rational(lam) * RatMatrix::Identity(d, d);
    const Index mult = d - rank(shifted);
    out.insert(out.end(), static_cast<std::size_t>(mult), lam);
    found += mult;
  }
  if (found != d) throw Error(ErrorKind::Unsupported, "ad(h) is not diagonalizable over the integers");
  return out;
}

OrbitId identify_in_factor(const MatrixLieAlgebra& g, std::size_t factor, const RatMatrix& x) {
  const SimpleFactor& f = g.factors().at(factor);
  const bool has_defining = !f.rep.empty() || (g.factors().size() == 1 && f.type.classical() &&
                                               g.ambient_dim() == f.type.defining_dim());
  if (f.type.classical() && has_defining) {
    const RatMatrix image = g.rep_image(factor, x);
    Partition p(jordan_type_nilpotent(image).parts);
    if (f.type.family == Family::D && p.all_even()) p.tag = very_even_tag(image);
    return OrbitId::classical(f.type, p);
  }
  if (!is_nilpotent(x)) throw Error(ErrorKind::NotNilpotent, "orbit identification needs a nilpotent element");
  const int cz = static_cast<int>(g.centralizer_dim(x, f.basis_indices));
  if (f.type.family == Family::G2) return OrbitId::exceptional(f.type, g2_orbit_by_centralizer(cz).label);
  if (f.type.classical()) {
    const int target = f.type.algebra_dim() - cz;
    std::optional<Partition> match;
    for (const Partition& p : enumerate_orbits(f.type)) {
      if (orbit_dimension(f.type, p) != target) continue;
      if (match && match->parts != p.parts)
        throw Error(ErrorKind::UnknownCentralizerDim, "centralizer dimension does not separate orbits");
      match = p;
    }
    if (!match) throw Error(ErrorKind::UnknownCentralizerDim, "no orbit of dimension " + std::to_string(target));
    if (match->tag != VeryEvenTag::None) match->tag = VeryEvenTag::Undetermined;
    return OrbitId::classical(f.type, *match);
  }
  throw Error(ErrorKind::Unsupported, "no identification for " + f.type.name());
}

ElementOrbitWitness identify_orbit(const MatrixLieAlgebra& g, const RatMatrix& x) {
  if (!is_nilpotent(x)) throw Error(ErrorKind::NotNilpotent, "orbit identification needs a nilpotent element");
  ElementOrbitWitness w;
  w.element = x;
  w.centralizer_dim = g.centralizer_dim(x);
  for (std::size_t i = 0; i < g.factors().size(); ++i) {
    w.orbits.push_back(identify_in_factor(g, i, x));
    if (g.factors().size() == 1 && g.factors()[i].type.classical() && w.orbits.back().partition)
      w.jordan_type_defining = JordanType{w.orbits.back().partition->parts};
  }
  return w;
}

std::string ElementOrbitWitness::to_string() const {
  std::vector<std::string> parts;
  for (const OrbitId& o : orbits) parts.push_back(o.to_string());
  return product_orbit_string(parts);
}

int ElementOrbitWitness::orbit_dim() const {
  int s = 0;
  for (const OrbitId& o : orbits) s += orbit_id_dimension(o);
  return s;
}

int orbit_id_dimension(const OrbitId& o) {
  if (o.partition) return orbit_dimension(o.type, *o.partition);
  return lookup_exceptional(o.type, o.label).dim;
}

int orbit_id_height(const OrbitId& o) {
  if (o.partition) {
    if (o.partition->parts.front() == 1) return 0;
    return orbit_height(o.type, *o.partition);
  }
  return lookup_exceptional(o.type, o.label).height;
}

int orbit_id_pi1(const OrbitId& o) {
  if (o.partition) return fundamental_group_order(o.type, *o.partition, GroupForm::SimplyConnected);
  const auto& r = lookup_exceptional(o.type, o.label);
  if (!r.pi1_order) throw Error(ErrorKind::Unsupported, "no fundamental group recorded for " + o.label);
  return *r.pi1_order;
}

std::vector<RatMatrix> independent_span(const std::vector<RatMatrix>& mats) {
  std::vector<RatMatrix> out;
  if (mats.empty()) return out;
  SpanBuilder span(mats.front().size());
  for (const RatMatrix& m : mats)
    if (span.add(flatten(m))) out.push_back(m);
  return out;
}

std::vector<RatMatrix> lie_closure(const std::vector<RatMatrix>& generators) {
  std::vector<RatMatrix> basis;
  if (generators.empty()) return basis;
  SpanBuilder span(generators.front().size());
  for (const RatMatrix& m : generators)
    if (span.add(flatten(m))) basis.push_back(m);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      RatMatrix c = commutator(basis[i], basis[j]);
      if (span.add(flatten(c))) basis.push_back(c);
    }
  return basis;
}

int matrix_height(const MatrixLieAlgebra& g, const RatMatrix& x) {
  RatMatrix adx = g.ad(x);
  RatMatrix p = adx;
  int k = 0;
  while (!is_zero(p)) {
    ++k;
    p = sparse_product(p, adx);
  }
  return k;
}

}  // namespace atlas
