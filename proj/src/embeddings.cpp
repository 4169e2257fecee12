#include "atlas/embeddings.hpp"

#include <numeric>
#include <sstream>

#include "atlas/classical.hpp"
#include "atlas/clifford.hpp"
#include "atlas/error.hpp"

namespace atlas {

std::string to_string(P1Route route) {
  switch (route) {
    case P1Route::P2Certificate: return "P2-certificate";
    case P1Route::Satake: return "satake";
    case P1Route::Chain: return "chain";
    case P1Route::DataOnly: return "data-only";
  }
  return "?";
}

Index EmbeddingCase::dim_h() const {
  if (sub) return sub->dim();
  Index d = 0;
  for (const LieType& t : sub_types) d += t.algebra_dim();
  return d;
}

Index EmbeddingCase::dim_m() const {
  if (ambient) return static_cast<Index>(complement.size());
  return ambient_type.algebra_dim() - dim_h();
}

int EmbeddingCase::rank_h() const {
  int r = 0;
  for (const LieType& t : sub_types) r += t.rank;
  return r;
}

Projection project(const EmbeddingCase& c, const RatMatrix& x) {
  if (!c.split) throw Error(ErrorKind::Unsupported, c.id + " has no matrix model");
  const RatVector coords = c.split->coords(x);
  const Index dh = c.sub->dim();
  const Index n = x.rows();
  Projection p{RatMatrix::Zero(n, n), RatMatrix::Zero(n, n)};
  for (Index j = 0; j < coords.size(); ++j) {
    if (coords(j) == 0) continue;
    const RatMatrix& v = c.split->basis()[static_cast<std::size_t>(j)];
    if (j < dh) p.a += coords(j) * v;
    else p.b += coords(j) * v;
  }
  return p;
}

RatMatrix involution_matrix(const EmbeddingCase& c) {
  if (!c.ambient) throw Error(ErrorKind::Unsupported, c.id + " has no matrix model");
  const MatrixLieAlgebra& g = *c.ambient;
  RatMatrix s(g.dim(), g.dim());
  for (Index j = 0; j < g.dim(); ++j) {
    Projection p = project(c, g.basis()[static_cast<std::size_t>(j)]);
    s.col(j) = g.coords(RatMatrix(p.a - p.b));
  }
  return s;
}

bool satake_meets_criterion(const EmbeddingCase& c, const Partition& o) {
  if (!c.satake) throw Error(ErrorKind::NoSatakeData, c.id + " carries no Satake diagram");
  const WeightedDynkinDiagram d = weighted_dynkin(c.ambient_type, o);
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0 && !c.satake->white[i]) return false;
  for (auto [i, j] : c.satake->arrows)
    if (d[static_cast<std::size_t>(i)] != d[static_cast<std::size_t>(j)]) return false;
  return true;
}

std::vector<Partition> good_orbits_via_satake(const EmbeddingCase& c) {
  const LieType& t = c.ambient_type;
  const std::vector<Partition> orbits = enumerate_orbits(t);
  std::vector<bool> meets;
  for (const Partition& p : orbits) meets.push_back(p.parts.front() > 1 && satake_meets_criterion(c, p));
  std::vector<Partition> good;
  for (const Partition& p : orbits) {
    if (p.parts.front() == 1) continue;
    bool ok = true;
    for (std::size_t i = 0; i < orbits.size() && ok; ++i)
      if (meets[i] && closure_leq(t, orbits[i], p)) ok = false;
    if (ok) good.push_back(p);
  }
  return good;
}

RatMatrix embed_even_in_odd(const RatMatrix& x) {
  const Index n2 = x.rows(), n = n2 / 2;
  RatMatrix out = RatMatrix::Zero(n2 + 1, n2 + 1);
  auto g = [n](Index i) { return i < n ? i : i + 1; };
  for (Index i = 0; i < n2; ++i)
    for (Index j = 0; j < n2; ++j)
      if (x(i, j) != 0) out(g(i), g(j)) = x(i, j);
  return out;
}

RatMatrix embed_odd_in_even(const RatMatrix& x) {
  const Index N = x.rows(), n = N / 2;
  // Columns: images of the old basis (pulled-back form is twice the old one),
  // then u = e_{n+1} - e_{n+2} spanning the orthogonal line.
  static thread_local std::map<Index, std::pair<RatMatrix, RatMatrix>> cache;
  auto it = cache.find(N);
  if (it == cache.end()) {
    RatMatrix P = RatMatrix::Zero(N + 1, N + 1);
    for (Index i = 0; i < n; ++i) P(i, i) = 2;
    P(n, n) = 1;
    P(n + 1, n) = 1;
    for (Index i = n + 1; i < N; ++i) P(i + 1, i) = 1;
    P(n, N) = 1;
    P(n + 1, N) = -1;
    it = cache.emplace(N, std::make_pair(P, *inverse(P))).first;
  }
  RatMatrix big = RatMatrix::Zero(N + 1, N + 1);
  big.topLeftCorner(N, N) = x;
  return it->second.first * big * it->second.second;
}

namespace {

std::vector<Index> iota(Index from, Index to) {
  std::vector<Index> v;
  for (Index i = from; i < to; ++i) v.push_back(i);
  return v;
}

SatakeDiagram one_white(int nodes, int white_node) {
  SatakeDiagram s;
  s.white.assign(static_cast<std::size_t>(nodes), false);
  s.white[static_cast<std::size_t>(white_node)] = true;
  return s;
}

// Simple subalgebra h embedded through `embed`, keeping the original
// matrices as the defining representation when they differ in size.
MatrixLieAlgebra embedded(const std::string& name, const MatrixLieAlgebra& h, const RatMatrix& ambient_form,
                          const std::function<RatMatrix(const RatMatrix&)>& embed) {
  std::vector<RatMatrix> basis;
  for (const RatMatrix& b : h.basis()) basis.push_back(embed(b));
  std::vector<SimpleFactor> factors;
  for (const SimpleFactor& f : h.factors()) {
    SimpleFactor nf = f;
    if (nf.basis_indices.empty()) nf.basis_indices = iota(0, h.dim());
    if (nf.rep.empty() && f.type.classical()) nf.rep = h.basis();
    factors.push_back(nf);
  }
  return MatrixLieAlgebra(name, std::move(basis), ambient_form, std::move(factors));
}

void finish(EmbeddingCase& c, const std::vector<int>& weights) {
  const MatrixLieAlgebra& g = *c.ambient;
  const MatrixLieAlgebra& h = *c.sub;
  for (const SimpleFactor& f : h.factors()) c.sub_types.push_back(f.type);
  for (const RatMatrix& b : h.basis())
    if (!g.contains(b)) throw Error(ErrorKind::NotInSpan, c.id + ": subalgebra leaves the ambient algebra");
  // m = trace-form orthogonal of h inside g
  RatMatrix pairing(h.dim(), g.dim());
  for (Index i = 0; i < h.dim(); ++i)
    for (Index j = 0; j < g.dim(); ++j)
      pairing(i, j) = sparse_product(h.basis()[static_cast<std::size_t>(i)], g.basis()[static_cast<std::size_t>(j)]).trace();
  for (const RatVector& k : kernel_basis(pairing)) c.complement.push_back(g.element(k));
  std::vector<RatMatrix> both = h.basis();
  both.insert(both.end(), c.complement.begin(), c.complement.end());
  c.split = MatrixLieAlgebra(c.id + ":h+m", std::move(both), RatMatrix(), {});
  c.n_plus = weight_graded_part(g, weights, 1);
  c.n_minus = weight_graded_part(g, weights, -1);
}

EmbeddingCase base(const std::string& id, const std::string& golden, std::vector<int> params, LieType ambient) {
  EmbeddingCase c;
  c.id = id;
  c.golden_id = golden;
  c.params = std::move(params);
  c.ambient_type = ambient;
  if (ambient.classical()) c.default_orbit = OrbitId::classical(ambient, minimal_orbit(ambient));
  else c.default_orbit = OrbitId::exceptional(ambient, "A1");
  return c;
}

std::string with_params(const std::string& name, const std::vector<int>& p) {
  if (p.empty()) return name;
  std::ostringstream os;
  os << name << "(";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ")";
  return os.str();
}

void require_params(const std::string& id, const std::vector<int>& p, std::size_t count, int min_value) {
  if (p.size() != count) throw Error(ErrorKind::Usage, id + " expects " + std::to_string(count) + " parameter(s)");
  for (int v : p)
    if (v < min_value) throw Error(ErrorKind::Usage, id + ": parameter out of range");
}

// so_{2n+1} > so_{2n}
EmbeddingCase odd_over_even(const std::string& id, const std::string& golden, std::vector<int> params, int n) {
  const LieType gt{Family::B, n}, ht{Family::D, n};
  EmbeddingCase c = base(id, golden, std::move(params), gt);
  c.description = "so_" + std::to_string(2 * n + 1) + " > so_" + std::to_string(2 * n) + " (standard)";
  c.ambient = build_classical(gt);
  c.sub = embedded("so_" + std::to_string(2 * n), build_form_algebra(2 * n, false, ht), c.ambient->form(),
                   embed_even_in_odd);
  c.symmetric = true;
  c.satake = one_white(n, 0);
  finish(c, regular_weights(2 * n + 1));
  return c;
}

// so_{2n+2} > so_{2n+1}
EmbeddingCase even_over_odd(const std::string& id, const std::string& golden, std::vector<int> params, int n) {
  const LieType gt{Family::D, n + 1}, ht{Family::B, n};
  EmbeddingCase c = base(id, golden, std::move(params), gt);
  c.description = "so_" + std::to_string(2 * n + 2) + " > so_" + std::to_string(2 * n + 1) + " (standard)";
  c.ambient = build_classical(gt);
  c.sub = embedded("so_" + std::to_string(2 * n + 1), build_classical(ht), c.ambient->form(), embed_odd_in_even);
  c.symmetric = true;
  c.satake = one_white(n + 1, 0);
  finish(c, regular_weights(2 * n + 2));
  return c;
}

}  // namespace

std::pair<std::string, std::vector<int>> parse_case_id(const std::string& id) {
  auto open = id.find('(');
  if (open == std::string::npos) return {id, {}};
  if (id.back() != ')') throw Error(ErrorKind::UnknownCase, "malformed case id " + id);
  std::vector<int> params;
  std::stringstream ss(id.substr(open + 1, id.size() - open - 2));
  std::string item;
  try {
    while (std::getline(ss, item, ',')) params.push_back(std::stoi(item));
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::UnknownCase, "malformed case id " + id);
  }
  return {id.substr(0, open), params};
}

std::vector<std::string> case_names() {
  return {"T1.row1", "T1.row2",  "T1.row3",  "T1.row4", "T1.row4-spin", "T1.row5",
          "T1.row6", "T1.row7",  "T1.row8",  "T1.row9", "T1.row10",     "T1.row11",
          "T2.i",    "T2.ii",    "NEG.so7-in-so9-standard"};
}

std::vector<std::pair<std::string, std::vector<int>>> default_instances() {
  return {{"T1.row1", {}},       {"T1.row2", {}},       {"T1.row3", {3}},      {"T1.row3", {4}},
          {"T1.row3", {5}},      {"T1.row4", {3}},      {"T1.row4", {4}},      {"T1.row4", {5}},
          {"T1.row5", {2}},      {"T1.row5", {3}},      {"T1.row5", {4}},      {"T1.row6", {}},
          {"T1.row7", {}},       {"T1.row8", {}},       {"T1.row9", {}},       {"T1.row10", {}},
          {"T1.row11", {1, 1}},  {"T1.row11", {1, 2}},  {"T1.row11", {1, 1, 1}}, {"T1.row11", {2, 1, 1}},
          {"T2.i", {2, 0}},      {"T2.i", {2, 1}},      {"T2.i", {2, 2}},      {"T2.i", {3, 1}},
          {"T2.ii", {}}};
}

EmbeddingCase make_case(const std::string& raw_id, const std::vector<int>& raw_params) {
  auto [name, inline_params] = parse_case_id(raw_id);
  const std::vector<int> p = inline_params.empty() ? raw_params : inline_params;
  const std::string id = with_params(name, p);

  if (name == "T1.row1" || name == "T1.row2" || name == "T1.row8") {
    require_params(name, p, 0, 0);
    EmbeddingCase c;
    if (name == "T1.row1") {
      c = base(id, "T1.1", p, LieType{Family::F4, 4});
      c.sub_types = {LieType{Family::B, 4}};
      c.description = "F4 > B4";
    } else if (name == "T1.row2") {
      c = base(id, "T1.2", p, LieType{Family::E6, 6});
      c.sub_types = {LieType{Family::F4, 4}};
      c.description = "E6 > F4";
    } else {
      c = base(id, "T1.8", p, LieType{Family::F4, 4});
      c.sub_types = {LieType{Family::D, 4}};
      c.description = "F4 > D4";
    }
    c.data_only = true;
    c.route = P1Route::DataOnly;
    c.symmetric = name != "T1.row8";
    return c;
  }
  if (name == "T1.row3") {
    require_params(name, p, 1, 3);
    return odd_over_even(id, "T1.3", p, p[0]);
  }
  if (name == "T1.row4") {
    require_params(name, p, 1, 2);
    return even_over_odd(id, "T1.4", p, p[0]);
  }
  if (name == "T1.row4-spin") {
    if (!p.empty() && p != std::vector<int>{3}) throw Error(ErrorKind::Usage, name + " exists only for n = 3");
    EmbeddingCase c = base(with_params(name, {3}), "T1.4", {3}, LieType{Family::D, 4});
    c.description = "so_8 > spin_7 (spinor)";
    c.ambient = build_classical(c.ambient_type);
    c.sub = build_spin7_in_so8();
    c.symmetric = true;
    c.satake = one_white(4, 3);
    finish(c, regular_weights(8));
    return c;
  }
  if (name == "T1.row5") {
    require_params(name, p, 1, 2);
    const int n = p[0];
    const LieType gt{Family::A, 2 * n - 1}, ht{Family::C, n};
    EmbeddingCase c = base(id, "T1.5", p, gt);
    c.description = "sl_" + std::to_string(2 * n) + " > sp_" + std::to_string(2 * n);
    c.ambient = build_classical(gt);
    MatrixLieAlgebra sp = build_form_algebra(2 * n, true, ht);
    c.sub = MatrixLieAlgebra(sp.name(), sp.basis(), sp.form(), {SimpleFactor{ht, iota(0, sp.dim()), {}}});
    c.symmetric = true;
    finish(c, regular_weights(2 * n));
    return c;
  }
  if (name == "T1.row6" || name == "T2.ii") {
    require_params(name, p, 0, 0);
    EmbeddingCase c = base(id, name == "T1.row6" ? "T1.6" : "T2.ii", p, LieType{Family::B, 3});
    c.description = "so_7 > g2";
    c.ambient = build_classical(c.ambient_type);
    c.sub = build_g2_in_so7();
    if (name == "T2.ii") c.default_orbit = OrbitId::classical(c.ambient_type, make_partition({{3, 1}, {1, 4}}));
    finish(c, regular_weights(7));
    return c;
  }
  if (name == "T1.row7") {
    require_params(name, p, 0, 0);
    EmbeddingCase c = base(id, "T1.7", p, LieType{Family::B, 4});
    c.description = "so_9 > so_8 > spin_7";
    c.ambient = build_classical(c.ambient_type);
    c.sub = embedded("spin_7", build_spin7_in_so8(), c.ambient->form(), embed_even_in_odd);
    c.route = P1Route::Chain;
    finish(c, regular_weights(9));
    return c;
  }
  if (name == "T1.row9") {
    require_params(name, p, 0, 0);
    EmbeddingCase c = base(id, "T1.9", p, LieType{Family::G2, 2});
    c.description = "g2 > sl_3 (long roots)";
    c.ambient = build_g2_in_so7();
    c.sub = build_sl3_in_g2();
    c.conjugator = Conjugator::Exponential;
    finish(c, g2_regular_weights());
    return c;
  }
  if (name == "T1.row10") {
    require_params(name, p, 0, 0);
    EmbeddingCase c = base(id, "T1.10", p, LieType{Family::D, 4});
    c.description = "so_8 > so_7 > g2";
    c.ambient = build_classical(c.ambient_type);
    c.sub = embedded("g2", build_g2_in_so7(), c.ambient->form(), embed_odd_in_even);
    c.route = P1Route::Chain;
    finish(c, regular_weights(8));
    return c;
  }
  if (name == "T1.row11") {
    if (p.size() < 2) throw Error(ErrorKind::Usage, name + " needs at least two block sizes");
    for (int v : p)
      if (v < 1) throw Error(ErrorKind::Usage, name + ": block sizes must be positive");
    const int n = std::accumulate(p.begin(), p.end(), 0);
    const int N = 2 * n;
    const LieType gt{Family::C, n};
    EmbeddingCase c = base(id, "T1.11", p, gt);
    c.description = "sp_" + std::to_string(N) + " > product of sp_{2n_i}";
    c.ambient = build_classical(gt);
    std::vector<RatMatrix> basis;
    std::vector<SimpleFactor> factors;
    std::vector<std::pair<std::size_t, RatMatrix>> locals;  // (factor, local matrix)
    int off = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const int ni = p[i];
      const LieType ft{Family::C, ni};
      MatrixLieAlgebra local = build_form_algebra(2 * ni, true, ft);
      // local index l < ni -> off + l, else mirrored into the second half
      auto gidx = [&](Index l) { return l < ni ? off + l : N - 1 - (off + (2 * ni - 1 - l)); };
      SimpleFactor f{ft, {}, {}};
      for (const RatMatrix& b : local.basis()) {
        RatMatrix x = RatMatrix::Zero(N, N);
        for (Index r = 0; r < b.rows(); ++r)
          for (Index s = 0; s < b.cols(); ++s)
            if (b(r, s) != 0) x(gidx(r), gidx(s)) = b(r, s);
        f.basis_indices.push_back(static_cast<Index>(basis.size()));
        basis.push_back(x);
        locals.emplace_back(i, b);
      }
      factors.push_back(f);
      off += ni;
    }
    for (std::size_t i = 0; i < factors.size(); ++i)
      for (const auto& [fi, b] : locals)
        factors[i].rep.push_back(fi == i ? b : RatMatrix(RatMatrix::Zero(2 * p[i], 2 * p[i])));
    c.sub = MatrixLieAlgebra("sp_product", std::move(basis), c.ambient->form(), std::move(factors));
    c.symmetric = p.size() == 2;
    finish(c, regular_weights(N));
    return c;
  }
  if (name == "T2.i") {
    require_params(name, p, 2, 0);
    const int k = p[0], m = p[1];
    const int N = 4 * k + m;
    if (k < 1 || N < 7) throw Error(ErrorKind::Usage, name + " needs k >= 1 and 4k + m >= 7");
    EmbeddingCase c = (N % 2) ? odd_over_even(id, "T2.i", p, (N - 1) / 2) : even_over_odd(id, "T2.i", p, (N - 2) / 2);
    c.default_orbit = OrbitId::classical(
        c.ambient_type, make_partition({{2, 2 * k}, {1, m}}, m == 0 ? VeryEvenTag::I : VeryEvenTag::None));
    c.route = P1Route::Satake;
    return c;
  }
  if (name == "NEG.so7-in-so9-standard") {
    require_params(name, p, 0, 0);
    EmbeddingCase c = base(id, "", p, LieType{Family::B, 4});
    c.description = "so_9 > so_7 (standard, negative control)";
    c.ambient = build_classical(c.ambient_type);
    c.sub = embedded("so_7", build_classical(LieType{Family::B, 3}), c.ambient->form(), [](const RatMatrix& x) {
      RatMatrix out = RatMatrix::Zero(9, 9);
      out.block(1, 1, 7, 7) = x;
      return out;
    });
    c.negative_control = true;
    finish(c, regular_weights(9));
    return c;
  }
  throw Error(ErrorKind::UnknownCase, "unknown case " + raw_id);
}

}  // namespace atlas
