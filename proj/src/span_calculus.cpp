#include "gitstab/span_calculus.hpp"

#include <algorithm>

namespace gitstab {

namespace {

void require_width(const std::vector<DivisorSeries>& series) {
  if (series.empty()) throw Error("empty series list");
  const std::size_t w = series.front().mult.size();
  for (const auto& s : series)
    if (s.mult.size() != w) throw Error("series have different numbers of points");
}

std::vector<i64> flatten(const std::vector<DivisorSeries>& series) {
  std::vector<i64> flat;
  for (const auto& s : series) flat.insert(flat.end(), s.mult.begin(), s.mult.end());
  return flat;
}

struct SubsetWalk {
  const i64* mult;
  std::size_t count;
  std::size_t width;
  std::vector<i64> stack;  // one running max vector per depth
  i64 total = 0;

  void visit(std::size_t start, std::size_t depth) {
    const i64* parent = stack.data() + depth * width;
    i64* child = stack.data() + (depth + 1) * width;
    const bool odd = (depth % 2) == 0;  // child subset has depth + 1 elements
    for (std::size_t idx = start; idx < count; ++idx) {
      const i64* row = mult + idx * width;
      i64 sum = 0;
      for (std::size_t i = 0; i < width; ++i) {
        child[i] = std::max(parent[i], row[i]);
        sum += child[i];
      }
      total += odd ? sum : -sum;
      if (idx + 1 < count) visit(idx + 1, depth + 1);
    }
  }
};

}  // namespace

bool degree_hypothesis(const std::vector<DivisorSeries>& series, const GeometricContext& ctx) {
  require_width(series);
  const i64 m = series.front().level;
  for (const auto& s : series)
    if (s.level != m) throw Error("incomparable series");
  return intersection_codim(series) < ctx.d * m - 2 * static_cast<i64>(ctx.g);
}

i64 intersection_codim(const std::vector<DivisorSeries>& series) {
  if (series.empty()) throw Error("empty intersection");
  require_width(series);
  i64 total = 0;
  for (std::size_t i = 0; i < series.front().mult.size(); ++i) {
    i64 mx = 0;
    for (const auto& s : series) mx = std::max(mx, s.mult[i]);
    total += mx;
  }
  return total;
}

i64 span_codim_oracle(const i64* mult, std::size_t count, std::size_t width) {
  if (count == 0) throw Error("empty series list");
  if (count > kOracleLimit) throw Error("oracle size limit");
  thread_local SubsetWalk walk;
  walk.mult = mult;
  walk.count = count;
  walk.width = width;
  walk.stack.assign((count + 1) * width, 0);
  walk.total = 0;
  walk.visit(0, 0);
  return walk.total;
}

i64 span_codim_oracle(const std::vector<DivisorSeries>& series) {
  require_width(series);
  if (series.size() > kOracleLimit) throw Error("oracle size limit");
  const auto flat = flatten(series);
  return span_codim_oracle(flat.data(), series.size(), series.front().mult.size());
}

i64 span_codim_trace(const i64* mult, std::size_t count, bool diag_check) {
  if (count == 0) throw Error("empty series list");
  if (diag_check) {
    for (std::size_t i = 0; i < count; ++i) {
      const i64 diag = mult[i * count + i];
      for (std::size_t j = 0; j < count; ++j)
        if (mult[j * count + i] < diag) throw Error("diagonal minimality violated");
    }
  }
  i64 total = 0;
  for (std::size_t i = 0; i < count; ++i) total += mult[i * count + i];
  return total;
}

i64 span_codim_trace(const std::vector<DivisorSeries>& series, bool diag_check) {
  require_width(series);
  if (series.front().mult.size() != series.size()) throw Error("trace needs one series per point");
  const auto flat = flatten(series);
  return span_codim_trace(flat.data(), series.size(), diag_check);
}

}  // namespace gitstab
