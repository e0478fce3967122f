#pragma once

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "weylfan/groebner.hpp"
#include "weylfan/io.hpp"

namespace testing_support {

using namespace weylfan;

inline SkewPoly poly(const RingPresentation& p, const std::string& text) { return parse_polynomial(p, text); }

inline std::vector<SkewPoly> polys(const RingPresentation& p, const std::vector<std::string>& texts) {
  std::vector<SkewPoly> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(p, t));
  return out;
}

inline CommPoly comm(const RingPresentation& p, const std::string& text) { return parse_commutative(p, text); }

inline WeightVector weight(const RingPresentation& p, const std::string& text) { return parse_weight(p, text); }

inline std::vector<Rational> rats(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

/// Canonical form of an ideal of S given by generator strings.
inline std::vector<CommPoly> ideal_of(const RingPresentation& p, const std::vector<std::string>& texts) {
  std::vector<CommPoly> g;
  for (const auto& t : texts) g.push_back(parse_commutative(p, t));
  return canonical_ideal(g);
}

inline std::string data_dir() { return WEYLFAN_TEST_DATA_DIR; }

inline std::vector<ProblemFile> corpus() {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(data_dir() + "/corpus")) {
    if (e.path().extension() == ".wf") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<ProblemFile> out;
  for (const auto& f : files) out.push_back(load_problem(f.string()));
  return out;
}

}  // namespace testing_support
