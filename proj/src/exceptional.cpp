#include "atlas/exceptional.hpp"

#include <numeric>

#include "atlas/error.hpp"

namespace atlas {

namespace {

const char* kCM = "Collingwood-McGovern ch. 8";

const std::vector<ExceptionalOrbitRecord>& records() {
  static const std::vector<ExceptionalOrbitRecord> data{
      {{Family::G2, 2}, "0", 0, 0, 1, kCM},
      {{Family::G2, 2}, "A1", 6, 2, 1, kCM},
      {{Family::G2, 2}, "Ã1", 8, 3, 1, kCM},
      {{Family::G2, 2}, "G2(a1)", 10, 4, 6, kCM},
      {{Family::G2, 2}, "G2", 12, 10, 1, kCM},
      {{Family::F4, 4}, "0", 0, 0, 1, kCM},
      {{Family::F4, 4}, "A1", 16, 2, 1, kCM},
      {{Family::F4, 4}, "Ã1", 22, 2, 2, kCM},
      {{Family::F4, 4}, "Ã1+A1", 28, 3, 1, kCM},
      {{Family::E6, 6}, "0", 0, 0, 1, kCM},
      {{Family::E6, 6}, "A1", 22, 2, 1, kCM},
      {{Family::E6, 6}, "2A1", 32, 2, 1, kCM},
  };
  return data;
}

std::string canonical_label(const std::string& label) {
  if (label == "Osub" || label == "O_sub") return "G2(a1)";
  if (label == "A1+Ã1") return "Ã1+A1";
  if (label == "~A1" || label == "At1") return "Ã1";
  if (label == "~A1+A1") return "Ã1+A1";
  return label;
}

std::string part_string(std::initializer_list<std::pair<int, int>> blocks) {
  return "(" + make_partition(blocks).to_string() + ")";
}

int binomial2(int n) { return n * (n - 1) / 2; }

}  // namespace

const ExceptionalOrbitRecord& lookup_exceptional(const LieType& type, const std::string& label) {
  const std::string key = canonical_label(label);
  for (const auto& r : records())
    if (r.type.family == type.family && r.label == key) return r;
  throw Error(ErrorKind::UnknownLabel, type.name() + " has no registered orbit '" + label + "'");
}

std::vector<ExceptionalOrbitRecord> exceptional_orbits(const LieType& type) {
  std::vector<ExceptionalOrbitRecord> out;
  for (const auto& r : records())
    if (r.type.family == type.family) out.push_back(r);
  return out;
}

const ExceptionalOrbitRecord& g2_orbit_by_centralizer(int centralizer_dim) {
  for (const auto& r : records())
    if (r.type.family == Family::G2 && 14 - r.dim == centralizer_dim) return r;
  throw Error(ErrorKind::UnknownCentralizerDim,
              "no G2 orbit has centralizer dimension " + std::to_string(centralizer_dim));
}

std::string product_orbit_string(const std::vector<std::string>& factors) {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? " x " : "") + factors[i];
  return out;
}

const std::vector<GoldenRow>& golden_rows() {
  using V = std::vector<int>;
  static const std::vector<GoldenRow> rows{
      {"T1.1", "F4, B4", "", "transcribed",
       [](const V&) { return GoldenValues{16, 16, "A1", "(2^4,1)", "Ã1", 22, 2, 2}; }},
      {"T1.2", "E6, F4", "", "transcribed",
       [](const V&) { return GoldenValues{26, 22, "A1", "Ã1", "2A1", 32, 2, 2}; }},
      {"T1.3", "B_n, D_n", "n", "transcribed",
       [](const V& p) {
         const int n = p.at(0);
         return GoldenValues{2 * n, 4 * n - 4, part_string({{2, 2}, {1, 2 * n - 3}}),
                             part_string({{3, 1}, {1, 2 * n - 3}}), part_string({{3, 1}, {1, 2 * n - 2}}),
                             4 * n - 2, 2, 2};
       }},
      {"T1.4", "D_{n+1}, B_n", "n", "transcribed",
       [](const V& p) {
         const int n = p.at(0);
         return GoldenValues{2 * n + 1, 4 * n - 2, part_string({{2, 2}, {1, 2 * n - 2}}),
                             part_string({{3, 1}, {1, 2 * n - 2}}), part_string({{3, 1}, {1, 2 * n - 1}}),
                             4 * n, 2, 2};
       }},
      {"T1.5", "A_{2n-1}, C_n", "n", "transcribed",
       [](const V& p) {
         const int n = p.at(0);
         return GoldenValues{binomial2(2 * n) - 1, 4 * n - 2, part_string({{2, 1}, {1, 2 * n - 2}}),
                             part_string({{2, 2}, {1, 2 * n - 4}}), part_string({{2, 2}, {1, 2 * n - 4}}),
                             8 * n - 8, 2, 2};
       }},
      {"T1.6", "B3, G2", "", "transcribed",
       [](const V&) { return GoldenValues{7, 8, "(2^2,1^3)", "Ã1", "(3,2^2)", 12, 1, 3}; }},
      {"T1.7", "B4, B3", "", "transcribed",
       [](const V&) { return GoldenValues{15, 12, "(2^2,1^5)", "(3,2^2)", "(3,2^2,1^2)", 20, 2, 3}; }},
      {"T1.8", "F4, D4", "", "transcribed",
       [](const V&) { return GoldenValues{24, 16, "A1", "(3,2^2,1)", "Ã1+A1", 28, 4, 3}; }},
      {"T1.9", "G2, A2", "", "transcribed",
       [](const V&) { return GoldenValues{6, 6, "A1", "(3)", "G2(a1)", 10, 3, 4}; }},
      {"T1.10", "D4, G2", "", "transcribed",
       [](const V&) { return GoldenValues{14, 10, "(2^2,1^4)", "G2(a1)", "(3^2,1^2)", 18, 6, 4}; }},
      {"T1.11", "C_n, C_{n_1} x ... x C_{n_k}", "n_1..n_k", "transcribed",
       [](const V& p) {
         const int n = std::accumulate(p.begin(), p.end(), 0);
         const int k = static_cast<int>(p.size());
         int sq = 0;
         std::vector<std::string> phi;
         for (int ni : p) {
           sq += ni * ni;
           phi.push_back(part_string({{2, 1}, {1, 2 * ni - 2}}));
         }
         return GoldenValues{2 * (n * n - sq), 2 * n, part_string({{2, 1}, {1, 2 * n - 2}}),
                             product_orbit_string(phi), part_string({{2, k}, {1, 2 * n - 2 * k}}),
                             k * (2 * n - k + 1), 1 << (k - 1), 2};
       }},
      {"T2.i", "SO_N, SO_{N-1}", "k,m", "transcribed",
       [](const V& p) {
         const int k = p.at(0), m = p.at(1);
         return GoldenValues{4 * k + m - 1, 2 * k * (2 * k + m - 1), part_string({{2, 2 * k}, {1, m}}),
                             part_string({{3, 1}, {2, 2 * k - 2}, {1, m}}),
                             part_string({{3, 1}, {2, 2 * k - 2}, {1, m + 1}}), 2 * k * (2 * k + m),
                             m == 0 ? 1 : 2, 3};
       }},
      {"T2.ii", "B3, G2", "", "transcribed",
       [](const V&) { return GoldenValues{7, 10, "(3,1^4)", "G2(a1)", "(3^2,1)", 14, 3, 4}; }},
  };
  return rows;
}

const GoldenRow& golden_row(const std::string& id) {
  for (const auto& r : golden_rows())
    if (r.id == id) return r;
  throw Error(ErrorKind::UnknownCase, "no golden row " + id);
}

}  // namespace atlas
