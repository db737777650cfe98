#include "wreathcert/oracle/dense.hpp"

namespace wreathcert::oracle {

Subspace::Subspace(int ambient_dim, long characteristic)
    : dim_(ambient_dim), char_(characteristic) {
  galg::check_characteristic(characteristic);
  if (ambient_dim < 0) fail("Internal", "negative ambient dimension");
}

Subspace::SparseRow Subspace::reduce(const Vec& v) const {
  if (static_cast<int>(v.size()) != dim_)
    fail("Internal", "vector length does not match ambient dimension");
  SparseRow row;
  for (int i = 0; i < dim_; ++i)
    if (!v[static_cast<std::size_t>(i)].is_zero()) row[i] = v[static_cast<std::size_t>(i)];
  while (!row.empty()) {
    int lead = row.begin()->first;
    auto it = rows_.find(lead);
    if (it == rows_.end()) break;
    galg::Scalar factor = row.begin()->second;  // pivot of stored row is 1
    for (const auto& [col, coeff] : it->second) {
      auto [slot, inserted] = row.emplace(col, galg::Scalar::zero(char_));
      slot->second = slot->second - factor * coeff;
      if (slot->second.is_zero()) row.erase(slot);
    }
  }
  return row;
}

bool Subspace::contains(const Vec& v) const { return reduce(v).empty(); }

bool Subspace::insert(const Vec& v) {
  SparseRow row = reduce(v);
  if (row.empty()) return false;
  galg::Scalar scale = row.begin()->second.inverse();
  for (auto& [col, coeff] : row) coeff = scale * coeff;
  rows_.emplace(row.begin()->first, std::move(row));
  return true;
}

}  // namespace wreathcert::oracle
