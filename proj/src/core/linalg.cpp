#include "core/linalg.hpp"

#include <algorithm>

namespace moykit::linalg {

void normalize(SparseRow& row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow out;
  out.reserve(row.size());
  for (auto& [c, v] : row) {
    if (!out.empty() && out.back().first == c)
      out.back().second += v;
    else
      out.emplace_back(c, std::move(v));
    if (out.back().second == 0) out.pop_back();
  }
  row = std::move(out);
}

void axpy(SparseRow& row, const mpq_class& c, const SparseRow& other) {
  SparseRow out;
  out.reserve(row.size() + other.size());
  auto a = row.begin();
  auto b = other.begin();
  while (a != row.end() || b != other.end()) {
    if (b == other.end() || (a != row.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == row.end() || b->first < a->first) {
      out.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      mpq_class v = a->second + c * b->second;
      if (v != 0) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  row = std::move(out);
}

void EchelonBasis::reduce_leading(SparseRow& row) const {
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) return;
    const mpq_class c = -row.front().second;
    axpy(row, c, it->second);
  }
}

bool EchelonBasis::insert(SparseRow row) {
  reduce_leading(row);
  if (row.empty()) return false;
  const mpq_class lead = row.front().second;
  for (auto& [c, v] : row) v /= lead;
  const int col = row.front().first;
  pivots_.emplace(col, std::move(row));
  return true;
}

SparseRow EchelonBasis::normal_form(SparseRow row) const {
  SparseRow done;
  while (!row.empty()) {
    reduce_leading(row);
    if (row.empty()) break;
    done.push_back(std::move(row.front()));
    row.erase(row.begin());
  }
  return done;
}

std::size_t rank(const std::vector<SparseRow>& rows) {
  EchelonBasis b;
  for (const auto& r : rows) b.insert(r);
  return b.rank();
}

}  // namespace moykit::linalg
