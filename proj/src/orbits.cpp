#include "atlas/orbits.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "atlas/error.hpp"

namespace atlas {

bool LieType::classical() const {
  return family == Family::A || family == Family::B || family == Family::C || family == Family::D;
}

int LieType::defining_dim() const {
  switch (family) {
    case Family::A: return rank + 1;
    case Family::B: return 2 * rank + 1;
    case Family::C:
    case Family::D: return 2 * rank;
    case Family::G2: return 7;
    case Family::F4: return 26;
    case Family::E6: return 27;
    case Family::E7: return 56;
    case Family::E8: return 248;
  }
  return 0;
}

int LieType::algebra_dim() const {
  const int n = rank;
  switch (family) {
    case Family::A: return n * (n + 2);
    case Family::B:
    case Family::C: return n * (2 * n + 1);
    case Family::D: return n * (2 * n - 1);
    case Family::G2: return 14;
    case Family::F4: return 52;
    case Family::E6: return 78;
    case Family::E7: return 133;
    case Family::E8: return 248;
  }
  return 0;
}

std::string LieType::name() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(rank);
    case Family::B: return "B" + std::to_string(rank);
    case Family::C: return "C" + std::to_string(rank);
    case Family::D: return "D" + std::to_string(rank);
    case Family::G2: return "G2";
    case Family::F4: return "F4";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
  }
  return "?";
}

LieType parse_lie_type(const std::string& family, int rank) {
  static const std::map<std::string, Family> names{
      {"A", Family::A}, {"B", Family::B}, {"C", Family::C}, {"D", Family::D},
      {"G", Family::G2}, {"F", Family::F4}, {"E", Family::E6}};
  auto it = names.find(family);
  if (it == names.end()) throw Error(ErrorKind::Usage, "unknown family " + family);
  LieType t{it->second, rank};
  if (family == "G" && rank != 2) throw Error(ErrorKind::Usage, "G requires rank 2");
  if (family == "F" && rank != 4) throw Error(ErrorKind::Usage, "F requires rank 4");
  if (family == "E") {
    if (rank == 6) t.family = Family::E6;
    else if (rank == 7) t.family = Family::E7;
    else if (rank == 8) t.family = Family::E8;
    else throw Error(ErrorKind::Usage, "E requires rank 6, 7 or 8");
  }
  if (rank < 1 || (t.family == Family::D && rank < 3))
    throw Error(ErrorKind::Usage, "rank out of range for " + family);
  return t;
}

Partition::Partition(std::vector<int> p, VeryEvenTag t) : parts(std::move(p)), tag(t) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  while (!parts.empty() && parts.back() <= 0) parts.pop_back();
}

int Partition::boxes() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool Partition::all_even() const {
  return std::all_of(parts.begin(), parts.end(), [](int p) { return p % 2 == 0; });
}

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts.begin(), parts.end(), part));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (i) os << ",";
    os << parts[i];
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  if (tag == VeryEvenTag::I) os << "_I";
  if (tag == VeryEvenTag::II) os << "_II";
  if (tag == VeryEvenTag::Undetermined) os << "_I/II";
  return os.str();
}

Partition parse_partition(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ') s.push_back(c);
  VeryEvenTag tag = VeryEvenTag::None;
  auto strip = [&](const std::string& suffix, VeryEvenTag t) {
    if (s.size() > suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0) {
      s.resize(s.size() - suffix.size());
      tag = t;
      return true;
    }
    return false;
  };
  strip("_I/II", VeryEvenTag::Undetermined) || strip("_II", VeryEvenTag::II) ||
      strip("_I", VeryEvenTag::I);
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string item;
  try {
    while (std::getline(ss, item, ',')) {
      auto caret = item.find('^');
      int part = std::stoi(item.substr(0, caret));
      int mult = caret == std::string::npos ? 1 : std::stoi(item.substr(caret + 1));
      if (part <= 0 || mult < 0) throw Error(ErrorKind::InvalidPartition, text);
      parts.insert(parts.end(), static_cast<std::size_t>(mult), part);
    }
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::InvalidPartition, "cannot parse partition '" + text + "'");
  }
  if (parts.empty()) throw Error(ErrorKind::InvalidPartition, "empty partition");
  return Partition(parts, tag);
}

Partition make_partition(std::initializer_list<std::pair<int, int>> blocks, VeryEvenTag tag) {
  std::vector<int> parts;
  for (auto [part, mult] : blocks)
    if (mult > 0) parts.insert(parts.end(), static_cast<std::size_t>(mult), part);
  return Partition(parts, tag);
}

std::vector<int> conjugate(const std::vector<int>& parts) {
  std::vector<int> out;
  if (parts.empty()) return out;
  for (int k = 1; k <= parts.front(); ++k)
    out.push_back(static_cast<int>(std::count_if(parts.begin(), parts.end(), [k](int p) { return p >= k; })));
  return out;
}

bool dominated_by(const std::vector<int>& lo, const std::vector<int>& hi) {
  int a = 0, b = 0;
  const std::size_t len = std::max(lo.size(), hi.size());
  for (std::size_t i = 0; i < len; ++i) {
    a += i < lo.size() ? lo[i] : 0;
    b += i < hi.size() ? hi[i] : 0;
    if (a > b) return false;
  }
  return true;
}

OrbitId OrbitId::classical(LieType t, Partition p) { return OrbitId{t, std::move(p), {}}; }

OrbitId OrbitId::exceptional(LieType t, std::string label) {
  return OrbitId{t, std::nullopt, std::move(label)};
}

std::string OrbitId::to_string() const {
  if (partition) return "(" + partition->to_string() + ")";
  return label;
}

namespace {

void require_classical(const LieType& t) {
  if (!t.classical()) throw Error(ErrorKind::ExceptionalType, t.name() + " is not classical");
}

void require_valid(const LieType& t, const Partition& p) {
  if (!validate_partition(t, p))
    throw Error(ErrorKind::InvalidPartition, "(" + p.to_string() + ") is not an orbit of " + t.name());
}

bool very_even(const LieType& t, const Partition& p) {
  return t.family == Family::D && p.all_even();
}

}  // namespace

bool validate_partition(const LieType& t, const Partition& p) {
  require_classical(t);
  if (p.boxes() != t.defining_dim()) return false;
  for (std::size_t i = 1; i < p.parts.size(); ++i)
    if (p.parts[i] > p.parts[i - 1] || p.parts[i] <= 0) return false;
  // Parts of the parity that must pair up.
  int paired_parity = -1;
  if (t.family == Family::B || t.family == Family::D) paired_parity = 0;
  if (t.family == Family::C) paired_parity = 1;
  if (paired_parity >= 0)
    for (int part : p.parts)
      if (part % 2 == paired_parity && p.multiplicity(part) % 2 != 0) return false;
  const bool needs_tag = very_even(t, p);
  const bool has_tag = p.tag != VeryEvenTag::None;
  return needs_tag == has_tag;
}

int orbit_dimension(const LieType& t, const Partition& p) {
  require_classical(t);
  require_valid(t, p);
  const int N = t.defining_dim();
  int sq = 0;
  for (int c : conjugate(p.parts)) sq += c * c;
  const int odd = static_cast<int>(std::count_if(p.parts.begin(), p.parts.end(), [](int x) { return x % 2; }));
  switch (t.family) {
    case Family::A: return N * N - sq;
    case Family::B:
    case Family::D: return (N * (N - 1) - sq + odd) / 2;
    case Family::C: return (N * (N + 1) - sq - odd) / 2;
    default: break;
  }
  return 0;
}

bool closure_leq(const LieType& t, const Partition& p, const Partition& q) {
  require_classical(t);
  if (p.boxes() != q.boxes() || p.boxes() != t.defining_dim())
    throw Error(ErrorKind::BoxMismatch, "(" + p.to_string() + ") vs (" + q.to_string() + ")");
  if (p.parts == q.parts) {
    if (p.tag == q.tag) return true;
    return p.tag == VeryEvenTag::Undetermined || q.tag == VeryEvenTag::Undetermined;
  }
  return dominated_by(p.parts, q.parts);
}

std::vector<int> characteristic(const LieType& t, const Partition& p) {
  require_classical(t);
  std::vector<int> ev;
  for (int m : p.parts)
    for (int j = m - 1; j >= 1 - m; j -= 2) ev.push_back(j);
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

WeightedDynkinDiagram weighted_dynkin(const LieType& t, const Partition& p) {
  require_valid(t, p);
  const std::vector<int> h = characteristic(t, p);
  const int n = t.rank;
  WeightedDynkinDiagram d;
  switch (t.family) {
    case Family::A:
      for (int i = 0; i < n; ++i) d.push_back(h[i] - h[i + 1]);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) d.push_back(h[i] - h[i + 1]);
      d.push_back(h[n - 1]);
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) d.push_back(h[i] - h[i + 1]);
      d.push_back(2 * h[n - 1]);
      break;
    case Family::D: {
      std::vector<int> top(h.begin(), h.begin() + n);
      if (p.tag == VeryEvenTag::Undetermined)
        throw Error(ErrorKind::InvalidPartition, "very even tag undetermined");
      if (p.tag == VeryEvenTag::I) top[n - 1] = -top[n - 1];
      for (int i = 0; i + 2 < n; ++i) d.push_back(top[i] - top[i + 1]);
      d.push_back(top[n - 2] - top[n - 1]);
      d.push_back(top[n - 2] + top[n - 1]);
      break;
    }
    default: break;
  }
  return d;
}

std::vector<int> characteristic_from_diagram(const LieType& t, const WeightedDynkinDiagram& d) {
  require_classical(t);
  const int n = t.rank;
  std::vector<int> h;
  switch (t.family) {
    case Family::A: {
      // h_i - h_{i+1} = d_i with trace zero; work with (n+1) h to stay integral.
      std::vector<int> x(static_cast<std::size_t>(n + 1), 0);
      for (int i = n - 1; i >= 0; --i) x[i] = x[i + 1] + d[i];
      int sum = std::accumulate(x.begin(), x.end(), 0);
      if (sum % (n + 1) != 0) throw Error(ErrorKind::InvalidPartition, "non-integral characteristic");
      for (int& v : x) v -= sum / (n + 1);
      h = x;
      break;
    }
    case Family::B:
    case Family::C:
    case Family::D: {
      std::vector<int> top(static_cast<std::size_t>(n), 0);
      if (t.family == Family::B) top[n - 1] = d[n - 1];
      if (t.family == Family::C) {
        if (d[n - 1] % 2) throw Error(ErrorKind::InvalidPartition, "odd last label for C");
        top[n - 1] = d[n - 1] / 2;
      }
      int start = n - 2;
      if (t.family == Family::D) {
        const int s = d[n - 2] + d[n - 1];
        if (s % 2) throw Error(ErrorKind::InvalidPartition, "parity of spin labels");
        top[n - 2] = s / 2;
        top[n - 1] = (d[n - 1] - d[n - 2]) / 2;
        start = n - 3;
      }
      for (int i = start; i >= 0; --i) top[i] = top[i + 1] + d[i];
      for (int v : top) {
        h.push_back(v);
        h.push_back(-v);
      }
      if (t.family == Family::B) h.push_back(0);
      break;
    }
    default: break;
  }
  std::sort(h.begin(), h.end(), std::greater<>());
  return h;
}

int orbit_height(const LieType& t, const Partition& p) {
  require_valid(t, p);
  if (p.parts.front() == 1) throw Error(ErrorKind::ZeroOrbit, "height of the zero orbit");
  const std::vector<int> h = characteristic(t, p);
  switch (t.family) {
    case Family::A: return h.front() - h.back();
    case Family::B:
    case Family::D: return h[0] + h[1];
    case Family::C: return 2 * h[0];
    default: break;
  }
  return 0;
}

int fundamental_group_order(const LieType& t, const Partition& p, GroupForm form) {
  if (!t.classical()) throw Error(ErrorKind::Unsupported, "fundamental group of " + t.name() + " orbits");
  require_valid(t, p);
  if (form == GroupForm::Adjoint) throw Error(ErrorKind::Unsupported, "adjoint group form");
  auto distinct = [&](int parity) {
    std::vector<int> seen;
    for (int part : p.parts)
      if (part % 2 == parity && std::find(seen.begin(), seen.end(), part) == seen.end()) seen.push_back(part);
    return static_cast<int>(seen.size());
  };
  switch (t.family) {
    case Family::A: {
      int g = 0;
      for (int part : p.parts) g = std::gcd(g, part);
      return g;
    }
    case Family::C: return 1 << distinct(0);
    case Family::B:
    case Family::D: {
      const int a = distinct(1);
      const int so_order = 1 << std::max(0, a - 1);
      if (form == GroupForm::Matrix) return so_order;
      const bool rather_odd = std::all_of(p.parts.begin(), p.parts.end(),
                                          [&](int part) { return part % 2 == 0 || p.multiplicity(part) == 1; });
      return rather_odd ? 2 * so_order : so_order;
    }
    default: break;
  }
  return 1;
}

std::vector<Partition> enumerate_orbits(const LieType& t, int rank_bound) {
  require_classical(t);
  if (t.rank > rank_bound)
    throw Error(ErrorKind::RankBound, t.name() + " exceeds rank bound " + std::to_string(rank_bound));
  const int N = t.defining_dim();
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      Partition p(cur);
      if (very_even(t, p)) {
        for (VeryEvenTag tag : {VeryEvenTag::I, VeryEvenTag::II}) {
          p.tag = tag;
          if (validate_partition(t, p)) out.push_back(p);
        }
      } else if (validate_partition(t, p)) {
        out.push_back(p);
      }
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      rec(remaining - part, part);
      cur.pop_back();
    }
  };
  rec(N, N);
  return out;
}

std::string hasse_dot(const LieType& t, int rank_bound) {
  const std::vector<Partition> orbits = enumerate_orbits(t, rank_bound);
  const std::size_t n = orbits.size();
  auto below = [&](std::size_t i, std::size_t j) {
    return i != j && closure_leq(t, orbits[i], orbits[j]) && !closure_leq(t, orbits[j], orbits[i]);
  };
  std::ostringstream os;
  os << "digraph nilpotent_orbits_" << t.name() << " {\n";
  for (const Partition& p : orbits)
    os << "  \"" << p.to_string() << "\" [dim=" << orbit_dimension(t, p) << "];\n";
  for (std::size_t hi = 0; hi < n; ++hi)
    for (std::size_t lo = 0; lo < n; ++lo) {
      if (!below(lo, hi)) continue;
      bool cover = true;
      for (std::size_t mid = 0; mid < n && cover; ++mid)
        if (below(lo, mid) && below(mid, hi)) cover = false;
      if (cover) os << "  \"" << orbits[hi].to_string() << "\" -> \"" << orbits[lo].to_string() << "\";\n";
    }
  os << "}\n";
  return os.str();
}

Partition minimal_orbit(const LieType& t) {
  require_classical(t);
  const int N = t.defining_dim();
  switch (t.family) {
    case Family::A:
    case Family::C: return make_partition({{2, 1}, {1, N - 2}});
    case Family::B:
    case Family::D:
      if (N < 4) return Partition({N});
      return make_partition({{2, 2}, {1, N - 4}});
    default: break;
  }
  return {};
}

Partition zero_orbit(const LieType& t) {
  require_classical(t);
  return Partition(std::vector<int>(static_cast<std::size_t>(t.defining_dim()), 1));
}

}  // namespace atlas
