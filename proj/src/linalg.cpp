#include "atlas/linalg.hpp"

#include <gmp.h>

#include <algorithm>
#include <sstream>

#include "atlas/error.hpp"

namespace atlas {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::ExceptionalType: return "ExceptionalType";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::BoxMismatch: return "BoxMismatch";
    case ErrorKind::ZeroOrbit: return "ZeroOrbit";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::RankBound: return "RankBound";
    case ErrorKind::NotInSpan: return "NotInSpan";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::UnknownCentralizerDim: return "UnknownCentralizerDim";
    case ErrorKind::NoSatakeData: return "NoSatakeData";
    case ErrorKind::RepresentativeUnavailable: return "RepresentativeUnavailable";
    case ErrorKind::NotAWitness: return "NotAWitness";
    case ErrorKind::AmbientExceptionalUnsupported: return "AmbientExceptionalUnsupported";
    case ErrorKind::NonIntegerRatio: return "NonIntegerRatio";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::UnknownCase: return "UnknownCase";
    case ErrorKind::Usage: return "Usage";
  }
  return "Error";
}

RatMatrix stack_columns(const std::vector<RatMatrix>& mats) {
  if (mats.empty()) return RatMatrix(0, 0);
  RatMatrix out(mats.front().size(), static_cast<Index>(mats.size()));
  for (std::size_t j = 0; j < mats.size(); ++j) out.col(static_cast<Index>(j)) = flatten(mats[j]);
  return out;
}

int JordanType::size() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

namespace {

MatrixX<Integer> clear_denominators(const RatMatrix& m) {
  MatrixX<Integer> out(m.rows(), m.cols());
  Integer scale;
  for (Index i = 0; i < m.rows(); ++i) {
    scale = 1;
    for (Index j = 0; j < m.cols(); ++j) {
      const Rational& q = m(i, j);
      if (q == 0) continue;
      mpz_lcm(scale.backend().data(), scale.backend().data(), mpq_denref(q.backend().data()));
    }
    for (Index j = 0; j < m.cols(); ++j) {
      const Rational& q = m(i, j);
      if (q == 0) {
        out(i, j) = 0;
        continue;
      }
      mpz_ptr dst = out(i, j).backend().data();
      mpz_divexact(dst, scale.backend().data(), mpq_denref(q.backend().data()));
      mpz_mul(dst, dst, mpq_numref(q.backend().data()));
    }
  }
  return out;
}

// Bareiss elimination in place on `a`, skipping pivot-free columns. Entries
// below and right of each pivot stay exact minors, so division by the
// previous pivot is exact.
std::vector<Index> bareiss(MatrixX<Integer>& a, Index col_limit) {
  std::vector<Index> pivots;
  const Index rows = a.rows();
  const Index cols = a.cols();
  Integer prev = 1;
  Integer tmp;
  Index r = 0;
  for (Index c = 0; c < col_limit && r < rows; ++c) {
    Index p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) a.row(p).swap(a.row(r));
    mpz_srcptr piv = a(r, c).backend().data();
    for (Index i = r + 1; i < rows; ++i) {
      mpz_srcptr lead = a(i, c).backend().data();
      const bool lead_zero = mpz_sgn(lead) == 0;
      for (Index j = c + 1; j < cols; ++j) {
        mpz_ptr x = a(i, j).backend().data();
        mpz_mul(x, x, piv);
        if (!lead_zero) {
          mpz_srcptr y = a(r, j).backend().data();
          if (mpz_sgn(y) != 0) {
            mpz_mul(tmp.backend().data(), lead, y);
            mpz_sub(x, x, tmp.backend().data());
          }
        }
        if (mpz_cmp_ui(prev.backend().data(), 1) != 0 && mpz_sgn(x) != 0)
          mpz_divexact(x, x, prev.backend().data());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Back substitution on an integer echelon form. `rhs` gives the value of the
// augmented column (or zero), `free_values` fixes the non-pivot unknowns.
RatVector back_substitute(const MatrixX<Integer>& e, const std::vector<Index>& pivots,
                          Index unknowns, const RatVector& free_values, Index rhs_col) {
  RatVector x = free_values;
  Rational acc;
  for (Index k = static_cast<Index>(pivots.size()) - 1; k >= 0; --k) {
    const Index pc = pivots[static_cast<std::size_t>(k)];
    acc = 0;
    if (rhs_col >= 0) acc = Rational(e(k, rhs_col));
    for (Index j = pc + 1; j < unknowns; ++j) {
      if (e(k, j) == 0 || x(j) == 0) continue;
      acc -= Rational(e(k, j)) * x(j);
    }
    x(pc) = acc / Rational(e(k, pc));
  }
  return x;
}

}  // namespace

Echelon fraction_free_echelon(const RatMatrix& m) {
  Echelon out;
  out.rows = clear_denominators(m);
  out.pivots = bareiss(out.rows, m.cols());
  return out;
}

Index rank(const RatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Eliminate along the shorter side.
  if (m.rows() < m.cols()) {
    RatMatrix t = m.transpose();
    return fraction_free_echelon(t).rank();
  }
  return fraction_free_echelon(m).rank();
}

std::optional<Index> rank_mod_prime(const RatMatrix& m) {
  using u64 = std::uint64_t;
  using u128 = unsigned __int128;
  constexpr u64 p = (u64{1} << 61) - 1;
  auto mulmod = [](u64 a, u64 b) {
    u128 z = static_cast<u128>(a) * b;
    u64 lo = static_cast<u64>(z & p) + static_cast<u64>(z >> 61);
    return lo >= p ? lo - p : lo;
  };
  auto powmod = [&](u64 a, u64 e) {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  const Index rows = m.rows(), cols = m.cols();
  std::vector<u64> a(static_cast<std::size_t>(rows * cols));
  bool ok = true;
  for (Index i = 0; i < rows && ok; ++i)
    for (Index j = 0; j < cols; ++j) {
      const Rational& q = m(i, j);
      if (q == 0) {
        a[static_cast<std::size_t>(i * cols + j)] = 0;
        continue;
      }
      u64 den = mpz_fdiv_ui(mpq_denref(q.backend().data()), p);
      if (den == 0) {
        ok = false;
        break;
      }
      u64 num = mpz_fdiv_ui(mpq_numref(q.backend().data()), p);
      a[static_cast<std::size_t>(i * cols + j)] = mulmod(num, powmod(den, p - 2));
    }
  if (!ok) return std::nullopt;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index piv = r;
    while (piv < rows && a[static_cast<std::size_t>(piv * cols + c)] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (Index j = 0; j < cols; ++j)
        std::swap(a[static_cast<std::size_t>(piv * cols + j)], a[static_cast<std::size_t>(r * cols + j)]);
    const u64 inv = powmod(a[static_cast<std::size_t>(r * cols + c)], p - 2);
    for (Index i = r + 1; i < rows; ++i) {
      u64 f = a[static_cast<std::size_t>(i * cols + c)];
      if (f == 0) continue;
      f = mulmod(f, inv);
      for (Index j = c; j < cols; ++j) {
        u64 s = mulmod(f, a[static_cast<std::size_t>(r * cols + j)]);
        u64& x = a[static_cast<std::size_t>(i * cols + j)];
        x = x >= s ? x - s : x + p - s;
      }
    }
    ++r;
  }
  return r;
}

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  const Index n = m.cols();
  std::vector<RatVector> basis;
  if (m.rows() == 0) {
    for (Index j = 0; j < n; ++j) {
      RatVector v = RatVector::Zero(n);
      v(j) = 1;
      basis.push_back(v);
    }
    return basis;
  }
  Echelon ech = fraction_free_echelon(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    RatVector fixed = RatVector::Zero(n);
    fixed(f) = 1;
    basis.push_back(back_substitute(ech.rows, ech.pivots, n, fixed, -1));
  }
  return basis;
}

std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& b) {
  const Index n = a.cols();
  RatMatrix aug(a.rows(), n + b.cols());
  aug << a, b;
  MatrixX<Integer> e = clear_denominators(aug);
  std::vector<Index> pivots = bareiss(e, n);
  const Index r = static_cast<Index>(pivots.size());
  // Consistency: rows below the rank must vanish on the right-hand side.
  for (Index i = r; i < e.rows(); ++i)
    for (Index j = n; j < e.cols(); ++j)
      if (e(i, j) != 0) return std::nullopt;
  RatMatrix x(n, b.cols());
  for (Index c = 0; c < b.cols(); ++c)
    x.col(c) = back_substitute(e, pivots, n, RatVector::Zero(n), n + c);
  return x;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  RatMatrix rhs = b;
  auto x = solve(a, rhs);
  if (!x) return std::nullopt;
  return RatVector(x->col(0));
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, RatMatrix(RatMatrix::Identity(m.rows(), m.cols())));
}

bool is_nilpotent(const RatMatrix& m) {
  const Index n = m.rows();
  if (n == 0) return true;
  RatMatrix p = m;
  Index reach = 1;
  while (reach < n) {
    if (is_zero(p)) return true;
    p = sparse_product(p, p);
    reach *= 2;
  }
  return is_zero(p);
}

JordanType jordan_type_from_ranks(const std::vector<Index>& ranks) {
  // blocks_at_least[k] = r_{k-1} - r_k
  JordanType out;
  const std::size_t K = ranks.size();
  for (std::size_t k = 1; k < K; ++k) {
    const Index at_least_k = ranks[k - 1] - ranks[k];
    const Index at_least_next = (k + 1 < K) ? ranks[k] - ranks[k + 1] : 0;
    for (Index c = 0; c < at_least_k - at_least_next; ++c) out.parts.push_back(static_cast<int>(k));
  }
  std::sort(out.parts.rbegin(), out.parts.rend());
  return out;
}

std::vector<Index> rank_sequence(const JordanType& type) {
  std::vector<Index> ranks;
  const int n = type.size();
  for (int k = 0;; ++k) {
    Index r = 0;
    for (int p : type.parts) r += std::max(0, p - k);
    ranks.push_back(r);
    if (r == 0) break;
  }
  if (n == 0) return {0};
  return ranks;
}

JordanType jordan_type_nilpotent(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::NotNilpotent, "matrix is not square");
  if (!is_nilpotent(m)) throw Error(ErrorKind::NotNilpotent, "m^dim != 0");
  std::vector<Index> ranks{m.rows()};
  RatMatrix p = m;
  while (ranks.back() != 0) {
    ranks.push_back(rank(p));
    p = sparse_product(p, m);
  }
  return jordan_type_from_ranks(ranks);
}

RatMatrix cayley(const RatMatrix& s) {
  const Index n = s.rows();
  RatMatrix id = RatMatrix::Identity(n, n);
  RatMatrix minus = id - s;
  auto inv = inverse(minus);
  if (!inv) throw Error(ErrorKind::Singular, "I - s is not invertible");
  return (id + s) * (*inv);
}

RatMatrix cayley_orthogonal(const RatMatrix& s, const RatMatrix& form) {
  RatMatrix skew = s.transpose() * form + form * s;
  if (!is_zero(skew)) throw Error(ErrorKind::Singular, "s is not skew for the form");
  return cayley(s);
}

bool preserves_form(const RatMatrix& g, const RatMatrix& form) {
  RatMatrix d = g.transpose() * form * g - form;
  return is_zero(d);
}

RatMatrix exp_nilpotent(const RatMatrix& s) {
  const Index n = s.rows();
  RatMatrix out = RatMatrix::Identity(n, n);
  RatMatrix term = out;
  for (Index k = 1; k <= n; ++k) {
    term = sparse_product(term, s) / Rational(k);
    if (is_zero(term)) break;
    out += term;
  }
  return out;
}

std::string to_string(const RatVector& v) {
  std::ostringstream os;
  os << "(";
  for (Index i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v(i);
  os << ")";
  return os.str();
}

}  // namespace atlas
